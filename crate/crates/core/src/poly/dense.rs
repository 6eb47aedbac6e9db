use std::fmt;

use num_bigint::BigInt;

use crate::scalar::{IntScalar, Scalar};

/// Dense univariate polynomial, coefficients stored low degree first.
///
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `X`
    pub fn x() -> Self {
        Poly { coeffs: vec![T::zero(), T::one()] }
    }

    /// `X - r`
    pub fn linear_root(r: &T) -> Self {
        Poly { coeffs: vec![r.neg(), T::one()] }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&v| T::from_i64(v)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn lc(&self) -> &T {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && *self.lc() == T::one()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x);
            acc.add_assign(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&T::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::constant(T::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![T::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Poly { coeffs: c }
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`, computed without division.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return self.clone();
        }
        let lc = d.lc().clone();
        let mut r = self.coeffs.clone();
        let steps = self.deg() - dd + 1;
        let mut done = 0;
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let lead = r[top].clone();
            for c in r.iter_mut() {
                *c = c.mul(&lc);
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let k = top - dd + j;
                r[k] = r[k].sub(&lead.mul(dc));
            }
            done += 1;
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        let mut out = Poly::new(r);
        if done < steps {
            let f = lc.pow((steps - done) as u32);
            out = out.scale(&f);
        }
        out
    }

    /// Division by a monic divisor; exact in any ring.
    pub fn div_rem_monic(&self, d: &Self) -> (Self, Self) {
        assert!(d.is_monic(), "divisor must be monic");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (Poly::zero(), self.clone());
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); self.deg() - dd + 1];
        for top in (dd..r.len()).rev() {
            let lead = r[top].clone();
            if lead.is_zero() {
                continue;
            }
            q[top - dd] = lead.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let k = top - dd + j;
                r[k] = r[k].sub(&lead.mul(dc));
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    /// Quotient `self / d` when `d` divides exactly and `lc(d)` divides every step.
    pub fn div_exact(&self, d: &Self) -> Self {
        let dd = d.deg();
        if self.is_zero() {
            return Poly::zero();
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); self.deg() + 1 - dd];
        let lc = d.lc();
        for top in (dd..r.len()).rev() {
            if r[top].is_zero() {
                continue;
            }
            let lead = r[top].div_exact(lc);
            for (j, dc) in d.coeffs.iter().enumerate() {
                let k = top - dd + j;
                r[k] = r[k].sub(&lead.mul(dc));
            }
            q[top - dd] = lead;
        }
        debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Poly::new(q)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: IntScalar> Poly<T> {
    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> T {
        let mut g = T::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = c.neg();
        }
        Poly::new(self.coeffs.iter().map(|a| a.div_exact(&c)).collect())
    }

    pub fn to_bigint(&self) -> Poly<BigInt> {
        Poly::new(self.coeffs.iter().map(|c| c.to_bigint()).collect())
    }

    /// Coefficients reduced to `[0, p)`.
    pub fn residues(&self, p: u64) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.rem_u64(p)).collect()
    }

    /// Sign of the value at `x` without building the full value when the polynomial is small.
    pub fn sign_at(&self, x: &T) -> i32 {
        self.eval(x).signum_i32()
    }
}

/// Gcd over `Z[X]`, primitive with positive leading coefficient.
pub fn gcd_z(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Poly<BigInt> {
    let mut x = a.primitive_part();
    let mut y = b.primitive_part();
    if x.is_zero() {
        return y;
    }
    if y.is_zero() {
        return x;
    }
    if x.deg() < y.deg() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = x.pseudo_rem(&y);
        x = y;
        y = r.primitive_part();
    }
    x.primitive_part()
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == T::one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "X")?,
                1 => write!(f, "{mag}*X")?,
                _ if unit => write!(f, "X^{i}")?,
                _ => write!(f, "{mag}*X^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
