//! The sextic resolvent `θ(y) = (y³ + B₂y² + B₄y + B₆)² − 1024·Δ·y` of a monic quintic
//! `X^5 + aX^4 + bX^3 + cX^2 + dX + e`, from the explicit tables.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::mpoly::{mono, MPoly};
use crate::poly::disc::eval_table;
use crate::poly::quintic_tables::{B2, B4, B6, DISC};
use crate::poly::{IntPoly, Poly};
use crate::scalar::Scalar;
use crate::ZMPoly;

use super::resolvent::{Convention, Resolvent, ResolventSpec};

/// `θ` at the given coefficients, as a polynomial in `y`.
pub fn sextic_resolvent<T: Scalar>(a: &T, b: &T, c: &T, d: &T, e: &T) -> Poly<T> {
    let v = [a, b, c, d, e];
    let cubic = Poly::new(vec![eval_table(B6, v), eval_table(B4, v), eval_table(B2, v), T::one()]);
    let disc = eval_table(DISC, v);
    let lin = Poly::new(vec![T::zero(), disc.mul(&T::from_i64(1024))]);
    cubic.mul(&cubic).sub(&lin)
}

/// `θ` of a monic quintic.
pub fn sextic_resolvent_of(f: &IntPoly) -> Result<Poly<BigInt>> {
    match f.coeffs() {
        [a, b, c, d, e] => Ok(sextic_resolvent(a, b, c, d, e)),
        _ => Err(Error::Precondition(format!("sextic resolvent needs a quintic, got degree {}", f.degree()))),
    }
}

fn table_poly(table: &[(i64, [u8; 5])], vars: &[String]) -> ZMPoly {
    let mut p = MPoly::zero(vars);
    for (c, e) in table {
        let exps: Vec<u32> = e.iter().map(|&x| x as u32).chain(std::iter::once(0)).collect();
        p.add_term(mono::pack(&exps).expect("small"), BigInt::from(*c));
    }
    p
}

/// `θ` as a polynomial in `a_1..a_5, y` (with `a_1 = a, ..., a_5 = e`), expanded from the tables.
pub fn theta_symbolic() -> ZMPoly {
    let mut vars = Resolvent::avars(5);
    vars.push("y".into());
    let y = MPoly::var(&vars, 5);
    let cubic = y
        .pow(3)
        .add(&table_poly(B2, &vars).mul(&y.pow(2)))
        .add(&table_poly(B4, &vars).mul(&y))
        .add(&table_poly(B6, &vars));
    cubic.mul(&cubic).sub(&table_poly(DISC, &vars).mul(&y).scale(&BigInt::from(1024)))
}

/// The table form of `θ` wrapped as a [`Resolvent`] comparable with the orbit construction.
pub fn theta_from_tables() -> Result<Resolvent> {
    let hash = ResolventSpec::builtin("theta")?.invariant_hash();
    Resolvent::from_mpoly("theta", 5, Convention::Literal, &hash, &theta_symbolic())
}
