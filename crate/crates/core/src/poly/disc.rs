//! Resultants and discriminants.

use num_bigint::BigInt;

use super::quintic_tables::DISC;
use super::{IntPoly, Poly};
use crate::scalar::Scalar;

/// Resultant of `a` and `b` by the subresultant PRS; stays in the coefficient ring.
pub fn resultant<T: Scalar>(a: &Poly<T>, b: &Poly<T>) -> T {
    if a.is_zero() || b.is_zero() {
        return T::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut s = T::one();
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = s.neg();
        }
    }
    if b.deg() == 0 {
        return s.mul(&b.lc().pow(a.deg() as u32));
    }
    let mut g = T::one();
    let mut h = T::one();
    loop {
        let da = a.deg();
        let db = b.deg();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            s = s.neg();
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return T::zero();
        }
        let div = g.mul(&h.pow(delta));
        a = b;
        b = r.map(|c| c.div_exact(&div));
        g = a.lc().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1))
        };
        if b.deg() == 0 {
            let da = a.deg() as u32;
            let last = b.lc().pow(da).div_exact(&h.pow(da - 1));
            return s.mul(&last);
        }
    }
}

/// Discriminant `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant<T: Scalar>(f: &Poly<T>) -> T {
    let n = f.deg();
    assert!(n >= 1, "discriminant of a constant");
    if n == 1 {
        return T::one();
    }
    let r = resultant(f, &f.derivative()).div_exact(f.lc());
    if (n * (n - 1) / 2) % 2 == 1 {
        r.neg()
    } else {
        r
    }
}

/// Discriminant of a monic integer polynomial of degree at least 2.
pub fn disc_resultant(f: &IntPoly) -> BigInt {
    discriminant(&f.to_poly())
}

/// Discriminant of `X^5 + aX^4 + bX^3 + cX^2 + dX + e` from its explicit 59-term expansion.
pub fn disc_quintic_explicit<T: Scalar>(a: &T, b: &T, c: &T, d: &T, e: &T) -> T {
    eval_table(DISC, [a, b, c, d, e])
}

/// Sums `coeff * a^i b^j c^k d^l e^m` over a coefficient table.
pub(crate) fn eval_table<T: Scalar>(table: &[(i64, [u8; 5])], vars: [&T; 5]) -> T {
    let mut powers: Vec<Vec<T>> = Vec::with_capacity(5);
    for v in vars {
        let mut p = vec![T::one()];
        for i in 1..=8 {
            let next = p[i - 1].mul(v);
            p.push(next);
        }
        powers.push(p);
    }
    let mut acc = T::zero();
    for (coeff, exps) in table {
        let mut term = T::from_i64(*coeff);
        for (k, &e) in exps.iter().enumerate() {
            if e > 0 {
                term = term.mul(&powers[k][e as usize]);
            }
        }
        acc.add_assign(&term);
    }
    acc
}
