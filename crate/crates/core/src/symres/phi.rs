//! The general resolvent `Φ_{w,e,g}(y) = Π_σ (y − r(σ))` with
//! `r(σ) = Σ_k w_k Σ_{τ∈G} Π_i (x_{στ(i)} + g)^(k·e_i)`, and a search for separable parameters.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::perm::group_closure;
use super::resolvent::{orbit_resolvent_inner, Convention, ResolventSpec};
use crate::error::{Error, Result};
use crate::mpoly::{MPoly, MAX_EXP};
use crate::poly::{discriminant, disc_resultant, IntPoly};
use crate::ZMPoly;

/// Largest coset count the symbolic construction accepts.
pub const MAX_INDEX: usize = 30;

/// Weights `w` (one per group element), exponents `e` (one per root) and shift `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralResolventParams {
    pub w: Vec<u32>,
    pub e: Vec<u32>,
    #[serde(with = "bigint_string")]
    pub g_shift: BigInt,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let t = String::deserialize(d)?;
        t.parse().map_err(serde::de::Error::custom)
    }
}

impl GeneralResolventParams {
    pub fn max_entry(&self) -> u32 {
        self.w.iter().chain(&self.e).copied().max().unwrap_or(0)
    }
}

/// The invariant `Σ_k w_k Σ_{τ∈G} Π_i (x_{τ(i)} + g)^(k·e_i)`.
fn phi_invariant(spec: &ResolventSpec, params: &GeneralResolventParams) -> Result<ZMPoly> {
    let n = spec.n;
    let group = group_closure(n, &spec.generators);
    if params.w.len() != group.len() || params.e.len() != n {
        return Err(Error::Precondition(format!(
            "parameters need |w| = {} and |e| = {n}, got {} and {}",
            group.len(),
            params.w.len(),
            params.e.len()
        )));
    }
    if params.w.iter().chain(&params.e).any(|&v| v == 0) {
        return Err(Error::Precondition("weights and exponents must be positive".into()));
    }
    let vars = MPoly::<BigInt>::indexed_vars("x", n);
    let shifted: Vec<ZMPoly> = (0..n).map(|i| MPoly::var(&vars, i).add(&MPoly::constant(&vars, params.g_shift.clone()))).collect();
    let mut inv = MPoly::zero(&vars);
    for (k, &wk) in params.w.iter().enumerate() {
        let k = k as u32 + 1;
        let mut inner = MPoly::zero(&vars);
        for tau in &group {
            let mut t = MPoly::constant(&vars, BigInt::from(1));
            for i in 0..n {
                t = t.mul(&shifted[tau.apply(i)].pow(k * params.e[i]));
            }
            inner = inner.add(&t);
        }
        inv = inv.add(&inner.scale(&BigInt::from(wk)));
    }
    Ok(inv)
}

/// `Φ_{w,e,g}` of `f`, computed symbolically and then specialized.
pub fn general_phi(f: &IntPoly, spec: &ResolventSpec, params: &GeneralResolventParams) -> Result<IntPoly> {
    let n = f.degree();
    if n != spec.n || n > 6 {
        return Err(Error::Precondition(format!("polynomial degree {n} does not match spec degree {}", spec.n)));
    }
    if spec.index() > MAX_INDEX {
        return Err(Error::CostCap(format!("index {} exceeds {MAX_INDEX}", spec.index())));
    }
    let emax = params.e.iter().copied().max().unwrap_or(0) as u64;
    let top = emax * params.w.len() as u64 * spec.index() as u64;
    if top > MAX_EXP as u64 {
        return Err(Error::CostCap(format!("exponent {top} exceeds {MAX_EXP}")));
    }
    let inv = phi_invariant(spec, params)?;
    let phi_spec = ResolventSpec { invariant: inv, convention: Convention::Literal, name: format!("{}-phi", spec.name), ..spec.clone() };
    let res = orbit_resolvent_inner(&phi_spec, false)?;
    IntPoly::from_poly(&res.of(f))
}

/// First parameters in `[1, C]` (exponents outer, weights inner, both lexicographic)
/// whose `Φ` has nonzero discriminant; `g = C³ · max |a_i|`.
pub fn separability_search(f: &IntPoly, spec: &ResolventSpec, cap: u32) -> Result<GeneralResolventParams> {
    if cap == 0 {
        return Err(Error::Precondition("cap must be positive".into()));
    }
    if f.degree() < 2 || disc_resultant(f).is_zero() {
        return Err(Error::Inseparable);
    }
    let n = f.degree();
    let order = spec.group_order;
    let height = f.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    let g_shift = BigInt::from(cap).pow(3) * height;
    let mut e = vec![1u32; n];
    loop {
        let mut w = vec![1u32; order];
        loop {
            let params = GeneralResolventParams { w: w.clone(), e: e.clone(), g_shift: g_shift.clone() };
            match general_phi(f, spec, &params) {
                Ok(phi) => {
                    if !discriminant(&phi.to_poly()).is_zero() {
                        return Ok(params);
                    }
                }
                Err(Error::CostCap(_)) => {}
                Err(err) => return Err(err),
            }
            if !odometer(&mut w, cap) {
                break;
            }
        }
        if !odometer(&mut e, cap) {
            return Err(Error::SearchExhausted(cap as u64));
        }
    }
}

/// Next vector in lexicographic order over `[1, cap]`; false after the last.
fn odometer(v: &mut [u32], cap: u32) -> bool {
    for i in (0..v.len()).rev() {
        if v[i] < cap {
            v[i] += 1;
            for x in &mut v[i + 1..] {
                *x = 1;
            }
            return true;
        }
    }
    false
}
