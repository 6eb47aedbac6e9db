//! Exact scalar rings the polynomial types are generic over.
//!
//! Fixed-width integers panic on overflow instead of wrapping, so a result
//! computed in `i64`/`i128` is either exact or absent. `BigInt` and
//! `BigRational` never overflow.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A commutative ring with exact arithmetic.
pub trait Scalar: Clone + Debug + Display + PartialEq + Eq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Exact quotient; `rhs` must divide `self` (integer rings) or be nonzero (fields).
    fn div_exact(&self, rhs: &Self) -> Self;

    fn add_assign(&mut self, rhs: &Self) {
        *self = Scalar::add(self, rhs);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self = Scalar::sub(self, rhs);
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        let p = a.mul(b);
        self.add_assign(&p);
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn signum_i32(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_negative() {
            -1
        } else {
            1
        }
    }
}

/// Scalars that are integers: exact gcd, remainders and conversion to `BigInt`.
pub trait IntScalar: Scalar + Ord {
    fn to_bigint(&self) -> BigInt;
    fn gcd(&self, rhs: &Self) -> Self;
    fn abs(&self) -> Self;
    /// Euclidean remainder in `[0, |m|)`.
    fn rem_euclid(&self, m: &Self) -> Self;
    fn rem_u64(&self, p: u64) -> u64;
}

macro_rules! impl_prim {
    ($t:ty) => {
        impl Scalar for $t {
            fn zero() -> Self {
                0
            }
            fn one() -> Self {
                1
            }
            fn from_i64(v: i64) -> Self {
                <$t>::try_from(v).expect("scalar overflow")
            }
            fn from_bigint(v: &BigInt) -> Option<Self> {
                <$t>::try_from(v.clone()).ok()
            }
            fn is_zero(&self) -> bool {
                *self == 0
            }
            fn is_negative(&self) -> bool {
                *self < 0
            }
            #[inline]
            fn add(&self, rhs: &Self) -> Self {
                self.checked_add(*rhs).expect("scalar overflow")
            }
            #[inline]
            fn sub(&self, rhs: &Self) -> Self {
                self.checked_sub(*rhs).expect("scalar overflow")
            }
            #[inline]
            fn mul(&self, rhs: &Self) -> Self {
                self.checked_mul(*rhs).expect("scalar overflow")
            }
            fn neg(&self) -> Self {
                self.checked_neg().expect("scalar overflow")
            }
            fn div_exact(&self, rhs: &Self) -> Self {
                debug_assert!(*rhs != 0 && self % rhs == 0, "inexact division");
                self / rhs
            }
        }

        impl IntScalar for $t {
            fn to_bigint(&self) -> BigInt {
                BigInt::from(*self)
            }
            fn gcd(&self, rhs: &Self) -> Self {
                Integer::gcd(self, rhs)
            }
            fn abs(&self) -> Self {
                self.checked_abs().expect("scalar overflow")
            }
            fn rem_euclid(&self, m: &Self) -> Self {
                <$t>::rem_euclid(*self, m.checked_abs().expect("scalar overflow"))
            }
            fn rem_u64(&self, p: u64) -> u64 {
                (*self as i128).rem_euclid(p as i128) as u64
            }
        }
    };
}

impl_prim!(i64);
impl_prim!(i128);

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % rhs)), "inexact division");
        self / rhs
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_assign(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

impl IntScalar for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn gcd(&self, rhs: &Self) -> Self {
        Integer::gcd(self, rhs)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn rem_euclid(&self, m: &Self) -> Self {
        self.mod_floor(&Signed::abs(m))
    }
    fn rem_u64(&self, p: u64) -> u64 {
        self.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(BigRational::from_integer(v.clone()))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

/// Converts between scalar rings through `BigInt`; panics if the value does not fit.
pub fn convert<A: IntScalar, B: Scalar>(v: &A) -> B {
    B::from_bigint(&v.to_bigint()).expect("scalar overflow")
}
