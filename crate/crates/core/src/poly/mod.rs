//! Exact univariate polynomial arithmetic over the integers.

mod dense;
pub mod disc;
pub mod factor;
pub mod modp;
pub mod roots;
pub(crate) mod quintic_tables;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use dense::{gcd_z, Poly};
pub use disc::{disc_quintic_explicit, disc_resultant, discriminant, resultant};
pub use factor::{factor_over_q, factor_poly, is_irreducible};
pub use modp::{cycle_type_samples, CycleTypeSample};
pub use roots::{integer_roots, integer_roots_poly};

/// Monic polynomial `X^n + a_1 X^(n-1) + ... + a_n` with exact integer coefficients.
///
/// Only `a_1..a_n` are stored; the leading 1 is implicit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// From `a_1, ..., a_n`. Degree must be at least 1.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precondition("degree must be positive".into()));
        }
        Ok(IntPoly { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect()).expect("nonempty coefficients")
    }

    /// From a dense polynomial; fails unless it is monic of positive degree.
    pub fn from_poly(p: &Poly<BigInt>) -> Result<Self> {
        if !p.is_monic() || p.deg() == 0 {
            return Err(Error::Precondition(format!("not a monic nonconstant polynomial: {p}")));
        }
        let n = p.deg();
        Ok(IntPoly { coeffs: (0..n).map(|i| p.coeff(n - 1 - i)).collect() })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_1..a_n`
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> Poly<BigInt> {
        let n = self.degree();
        let mut c: Vec<BigInt> = (0..n).map(|i| self.coeffs[n - 1 - i].clone()).collect();
        c.push(BigInt::from(1));
        Poly::new(c)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::from(1);
        for c in &self.coeffs {
            acc = acc * x + c;
        }
        acc
    }

    /// Largest absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_poly().fmt(f)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Parses `a_1,...,a_n`.
impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                BigInt::from_str(t).map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntPoly::new(coeffs)
    }
}

// JSON form: array of decimal strings [a_1, ..., a_n].
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let coeffs = v
            .iter()
            .map(|t| BigInt::from_str(t).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        IntPoly::new(coeffs).map_err(serde::de::Error::custom)
    }
}

/// True iff `z >= 0` and `z` is the square of an integer.
pub fn is_perfect_square(z: &BigInt) -> bool {
    if z.is_negative() {
        return false;
    }
    // quadratic-residue filter mod 64
    let low = (z & BigInt::from(63u8)).to_u32_digits().1.first().copied().unwrap_or(0);
    if !matches!(low, 0 | 1 | 4 | 9 | 16 | 17 | 25 | 33 | 36 | 41 | 49 | 57) {
        return false;
    }
    let r = z.sqrt();
    &r * &r == *z
}
