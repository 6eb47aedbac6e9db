//! Coset-orbit resolvents `Π_σ (y − σ(r))` with coefficients in `a_1..a_n`.
//!
//! The power sums `p_k = Σ_σ σ(r)^k` are obtained from `r^k` alone: summing
//! `π(r^k)` over all of `S_n` gives `|G| · p_k`, and its coefficient on the
//! monomial-symmetric function `m_λ` is `|Stab λ|` times the sum of the
//! coefficients of `r^k` on the rearrangements of `λ`. Each `p_k` is reduced to
//! the elementary basis and the resolvent coefficients follow from Newton's
//! identities.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use super::perm::{group_closure, is_left_transversal, left_coset_reps, Perm};
use super::symmetric::{elementary_values, reduce_sorted, Acc};
use crate::error::{Error, Result};
use crate::mpoly::{mono, MPoly, MonoMap};
use crate::poly::{IntPoly, Poly};
use crate::{ZMPoly, ZPoly};

/// How the resolvent's `a_k` relate to the elementary symmetric functions of the roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `X^n − a_1 X^(n−1) + a_2 X^(n−2) − ...`, so `a_k = e_k`.
    Alternating,
    /// `X^n + a_1 X^(n−1) + a_2 X^(n−2) + ...`, so `a_k = (−1)^k e_k`.
    Literal,
}

impl Convention {
    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Alternating => "alternating",
            Convention::Literal => "literal",
        }
    }

    /// The convention's `a_k` for a polynomial given by literal coefficients `c_1..c_n`.
    pub fn from_literal(self, c: &[BigInt]) -> Vec<BigInt> {
        match self {
            Convention::Literal => c.to_vec(),
            Convention::Alternating => c.iter().enumerate().map(|(i, v)| if i % 2 == 0 { -v } else { v.clone() }).collect(),
        }
    }

    /// The convention's `a_1..a_n` from `e_0..e_n`.
    fn from_elementary(self, e: &[BigInt]) -> Vec<BigInt> {
        e[1..]
            .iter()
            .enumerate()
            .map(|(i, v)| if self == Convention::Literal && i % 2 == 0 { -v } else { v.clone() })
            .collect()
    }
}

/// A named resolvent: an invariant of a subgroup `G ≤ S_n` and a left transversal of `G`.
#[derive(Clone, Debug)]
pub struct ResolventSpec {
    pub name: String,
    pub n: usize,
    /// Polynomial in `x_1..x_n` fixed by `G`.
    pub invariant: ZMPoly,
    pub generators: Vec<Perm>,
    pub coset_reps: Vec<Perm>,
    pub group_order: usize,
    pub convention: Convention,
}

fn parse_perms(n: usize, cycles: &[&str]) -> Vec<Perm> {
    cycles.iter().map(|s| Perm::parse_cycles(n, s).expect("builtin permutation")).collect()
}

fn xvars(n: usize) -> Vec<String> {
    MPoly::<BigInt>::indexed_vars("x", n)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl ResolventSpec {
    /// Builds a spec, computing the group order and, if `reps` is `None`, a transversal.
    pub fn new(name: &str, invariant: ZMPoly, generators: Vec<Perm>, reps: Option<Vec<Perm>>, convention: Convention) -> Result<Self> {
        let n = invariant.nvars();
        if generators.iter().any(|g| g.n() != n) {
            return Err(Error::Precondition("generator size differs from the variable count".into()));
        }
        let group = group_closure(n, &generators);
        let coset_reps = match reps {
            Some(r) => {
                if !is_left_transversal(n, &group, &r) {
                    return Err(Error::Precondition(format!("{name}: coset representatives are not a left transversal")));
                }
                r
            }
            None => left_coset_reps(n, &group),
        };
        let spec = ResolventSpec { name: name.to_string(), n, invariant, generators, group_order: group.len(), coset_reps, convention };
        spec.check_invariance()?;
        Ok(spec)
    }

    /// Fails unless every generator fixes the invariant.
    pub fn check_invariance(&self) -> Result<()> {
        for g in &self.generators {
            if self.invariant.permute(&g.0) != self.invariant {
                return Err(Error::Precondition(format!("{}: invariant is not fixed by {g}", self.name)));
            }
        }
        if self.coset_reps.len() * self.group_order != factorial(self.n) {
            return Err(Error::Precondition(format!("{}: index times order is not n!", self.name)));
        }
        Ok(())
    }

    pub fn index(&self) -> usize {
        self.coset_reps.len()
    }

    /// `σ(r)` for each coset representative.
    pub fn orbit(&self) -> Vec<ZMPoly> {
        self.coset_reps.iter().map(|s| self.invariant.permute(&s.0)).collect()
    }

    /// First 16 hex digits of the SHA-256 of the invariant's canonical text.
    pub fn invariant_hash(&self) -> String {
        let digest = Sha256::digest(self.invariant.to_string().as_bytes());
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    /// One of `theta`, `f10`, `f15`, `psi`, `phi`, or `alt<n>` for `2 ≤ n ≤ 6`.
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "theta" => theta_spec(),
            "f10" => {
                let inv = MPoly::parse("(x1 + x2 + x3)*(x4 + x5 + x6)", Some(&xvars(6)))?;
                let gens = parse_perms(6, &["(12)", "(123)", "(45)", "(456)", "(14)(25)(36)"]);
                ResolventSpec::new("f10", inv, gens, None, Convention::Alternating)
            }
            "f15" => {
                let inv = MPoly::parse("x1*x2 + x3*x4 + x5*x6", Some(&xvars(6)))?;
                let gens = parse_perms(6, &["(12)", "(34)", "(13)(24)", "(35)(46)"]);
                ResolventSpec::new("f15", inv, gens, None, Convention::Alternating)
            }
            "psi" => {
                let inv = MPoly::parse(
                    "(x1*x2 + x3*x5 + x4*x6)*(x1*x3 + x4*x5 + x2*x6)*(x3*x4 + x1*x6 + x2*x5)*(x1*x5 + x2*x4 + x3*x6)*(x1*x4 + x2*x3 + x5*x6)",
                    Some(&xvars(6)),
                )?;
                let gens = parse_perms(6, &["(126)(354)", "(12345)", "(2354)"]);
                let reps = parse_perms(6, &["()", "(12)", "(13)", "(14)", "(15)", "(16)"]);
                ResolventSpec::new("psi", inv, gens, Some(reps), Convention::Alternating)
            }
            "phi" => {
                let a3 = group_closure(3, &parse_perms(3, &["(123)"]));
                let mut inv = MPoly::zero(&xvars(3));
                for t in &a3 {
                    let exps: Vec<u32> = (0..3).map(|i| (t.inverse().apply(i) + 1) as u32).collect();
                    inv.add_term(mono::pack(&exps).expect("small"), BigInt::one());
                }
                ResolventSpec::new("phi", inv, parse_perms(3, &["(123)"]), None, Convention::Literal)
            }
            _ => match name.strip_prefix("alt").and_then(|k| k.parse::<usize>().ok()) {
                Some(n) if (2..=6).contains(&n) => alternating_spec(n),
                _ => Err(Error::Precondition(format!("unknown resolvent {name:?}"))),
            },
        }
    }

    /// Names accepted by [`ResolventSpec::builtin`] that have cache files.
    pub const CACHED: [&'static str; 5] = ["theta", "f10", "f15", "psi", "phi"];
}

fn theta_spec() -> Result<ResolventSpec> {
    let u = MPoly::parse(
        "x1*x2 + x2*x3 + x3*x4 + x4*x5 + x5*x1 - x1*x3 - x3*x5 - x5*x2 - x2*x4 - x4*x1",
        Some(&xvars(5)),
    )?;
    let gens = parse_perms(5, &["(12345)", "(2354)"]);
    ResolventSpec::new("theta", u.mul(&u), gens, None, Convention::Literal)
}

/// The Vandermonde product under `A_n`, whose resolvent is `y² − Δ`.
pub fn alternating_spec(n: usize) -> Result<ResolventSpec> {
    if !(2..=6).contains(&n) {
        return Err(Error::Precondition(format!("alternating spec needs 2 <= n <= 6, got {n}")));
    }
    let vars = xvars(n);
    let mut v = MPoly::constant(&vars, BigInt::one());
    for i in 0..n {
        for j in i + 1..n {
            v = v.mul(&MPoly::var(&vars, i).sub(&MPoly::var(&vars, j)));
        }
    }
    let gens: Vec<Perm> = if n == 2 {
        vec![]
    } else {
        (0..n - 2)
            .map(|i| {
                let mut p = Perm::identity(n);
                p.0[i] = i + 1;
                p.0[i + 1] = i + 2;
                p.0[i + 2] = i;
                p
            })
            .collect()
    };
    ResolventSpec::new(&format!("alt{n}"), v, gens, None, Convention::Literal)
}

/// `y^d − B_1 y^(d−1) + B_2 y^(d−2) − ...` with `B_k = e_k(σ(r))` written in `a_1..a_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Resolvent {
    pub name: String,
    pub n: usize,
    pub convention: Convention,
    pub invariant_hash: String,
    /// `B_1..B_d`, polynomials in `a_1..a_n`.
    pub b: Vec<ZMPoly>,
}

impl Resolvent {
    pub fn degree(&self) -> usize {
        self.b.len()
    }

    pub fn avars(n: usize) -> Vec<String> {
        MPoly::<BigInt>::indexed_vars("a", n)
    }

    /// The whole resolvent as a polynomial in `a_1..a_n, y`.
    pub fn to_mpoly(&self) -> ZMPoly {
        let mut vars = Resolvent::avars(self.n);
        vars.push("y".into());
        let d = self.degree();
        let ymono = |k: usize| mono::unit(self.n) * k as u64;
        let mut out = MPoly::zero(&vars);
        out.add_term(ymono(d), BigInt::one());
        for (k, bk) in self.b.iter().enumerate() {
            let k = k + 1;
            let sign = if k % 2 == 1 { -BigInt::one() } else { BigInt::one() };
            for (m, c) in bk.packed_terms() {
                out.add_term(m | ymono(d - k), c * &sign);
            }
        }
        out
    }

    /// Inverse of [`Resolvent::to_mpoly`].
    pub fn from_mpoly(name: &str, n: usize, convention: Convention, invariant_hash: &str, p: &ZMPoly) -> Result<Self> {
        if p.nvars() != n + 1 {
            return Err(Error::Parse(format!("{name}: expected {} variables", n + 1)));
        }
        let d = p.degree_in(n).unwrap_or(0) as usize;
        let avars = Resolvent::avars(n);
        let mut b: Vec<ZMPoly> = (0..d).map(|_| MPoly::zero(&avars)).collect();
        let mut lead = false;
        for (&m, c) in p.packed_terms() {
            let e = mono::exp(m, n) as usize;
            let rest = m & !(0xffu64 << mono::shift(n));
            if e == d {
                if rest != 0 || !c.is_one() {
                    return Err(Error::Parse(format!("{name}: resolvent is not monic in y")));
                }
                lead = true;
                continue;
            }
            let k = d - e;
            let v = if k % 2 == 1 { -c } else { c.clone() };
            b[k - 1].add_term(rest, v);
        }
        if !lead {
            return Err(Error::Parse(format!("{name}: missing leading term")));
        }
        Ok(Resolvent { name: name.to_string(), n, convention, invariant_hash: invariant_hash.to_string(), b })
    }

    /// The resolvent in `y` at the convention's coefficient values `a`.
    pub fn specialize(&self, a: &[BigInt]) -> ZPoly {
        assert_eq!(a.len(), self.n, "coefficient count");
        let d = self.degree();
        let mut c = vec![BigInt::zero(); d + 1];
        c[d] = BigInt::one();
        for (k, bk) in self.b.iter().enumerate() {
            let k = k + 1;
            let v = bk.eval(a);
            c[d - k] = if k % 2 == 1 { -v } else { v };
        }
        Poly::new(c)
    }

    /// The resolvent of the monic polynomial `f`, whatever the convention.
    pub fn of(&self, f: &IntPoly) -> ZPoly {
        self.specialize(&self.convention.from_literal(f.coeffs()))
    }
}

impl fmt::Debug for Resolvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Resolvent({}, n = {}, degree {})", self.name, self.n, self.degree())
    }
}

/// Computes the orbit resolvent of `spec` symbolically.
pub fn orbit_resolvent(spec: &ResolventSpec) -> Result<Resolvent> {
    orbit_resolvent_inner(spec, true)
}

/// As [`orbit_resolvent`]; with `distinct` false, coinciding orbit values are allowed.
pub(crate) fn orbit_resolvent_inner(spec: &ResolventSpec, distinct: bool) -> Result<Resolvent> {
    spec.check_invariance()?;
    if spec.invariant.is_zero() {
        return Err(Error::Precondition(format!("{}: zero invariant", spec.name)));
    }
    let orbit = spec.orbit();
    for i in 0..orbit.len() {
        for j in i + 1..orbit.len() {
            if distinct && orbit[i] == orbit[j] {
                return Err(Error::OrbitCollision(i, j));
            }
        }
    }
    let d = spec.index();
    let sums = match power_sums::<i128>(spec, d) {
        Some(s) => s,
        None => power_sums::<BigInt>(spec, d).expect("unbounded arithmetic"),
    }?;
    let avars = Resolvent::avars(spec.n);
    let mut p: Vec<ZMPoly> = Vec::with_capacity(d);
    for sk in sums {
        let reduced = reduce_sorted(spec.n, sk)?;
        let mut q = MPoly::zero(&avars);
        for (beta, c) in reduced {
            // s_k = a_k or (−1)^k a_k; the sign of s^β is (−1)^(Σ k β_k)
            let weight: u32 = (0..spec.n).map(|k| (k as u32 + 1) * mono::exp(beta, k)).sum();
            let neg = spec.convention == Convention::Literal && weight % 2 == 1;
            q.add_term(beta, if neg { -c } else { c });
        }
        p.push(q);
    }
    let b = newton_to_elementary(&p, &avars)?;
    let res = Resolvent { name: spec.name.clone(), n: spec.n, convention: spec.convention, invariant_hash: spec.invariant_hash(), b };
    check_at_points(spec, &res, 3)?;
    Ok(res)
}

/// `[m-coefficients of p_k]` for `k = 1..=d`, as sorted monomials.
fn power_sums<A: Acc>(spec: &ResolventSpec, d: usize) -> Option<Result<Vec<Vec<(u64, BigInt)>>>> {
    let n = spec.n;
    let base: Vec<(u64, A)> = spec.invariant.packed_terms().iter().map(|(&m, c)| Some((m, A::from_big(c)?))).collect::<Option<_>>()?;
    let mut cur: MonoMap<A> = base.iter().cloned().collect();
    let order = BigInt::from(spec.group_order);
    let mut out = Vec::with_capacity(d);
    for k in 1..=d {
        let mut proj: MonoMap<A> = MonoMap::default();
        for (&m, c) in &cur {
            let key = mono::sorted(m, n);
            proj.entry(key).or_insert_with(A::nil).add_prod(c, &A::unit())?;
        }
        let mut sk = Vec::with_capacity(proj.len());
        for (lam, c) in proj {
            let v = c.to_big() * stabilizer_order(lam, n);
            let (q, r) = v.div_rem(&order);
            if !r.is_zero() {
                return Some(Err(Error::Verification(format!("{}: power sum {k} not divisible by the group order", spec.name))));
            }
            if !q.is_zero() {
                sk.push((lam, q));
            }
        }
        out.push(sk);
        if k < d {
            let mut next: MonoMap<A> = MonoMap::with_capacity_and_hasher(cur.len() * 4, Default::default());
            for (&m1, c1) in &cur {
                for (m2, c2) in &base {
                    let m = mono::mul(m1, *m2).expect("exponent overflow");
                    next.entry(m).or_insert_with(A::nil).add_prod(c1, c2)?;
                }
            }
            next.retain(|_, c| !c.is_nil());
            cur = next;
        }
    }
    Some(Ok(out))
}

fn stabilizer_order(lam: u64, n: usize) -> BigInt {
    let e = mono::unpack(lam, n);
    let mut acc = BigInt::one();
    let mut run = 1u32;
    for i in 1..=n {
        if i < n && e[i] == e[i - 1] {
            run += 1;
        } else {
            for k in 2..=run {
                acc *= k;
            }
            run = 1;
        }
    }
    acc
}

/// `B_k = (1/k) Σ_{i=1..k} (−1)^(i−1) B_(k−i) p_i`.
fn newton_to_elementary(p: &[ZMPoly], vars: &[String]) -> Result<Vec<ZMPoly>> {
    let mut b: Vec<ZMPoly> = vec![MPoly::constant(vars, BigInt::one())];
    for k in 1..=p.len() {
        let mut acc = MPoly::zero(vars);
        for i in 1..=k {
            let t = b[k - i].mul(&p[i - 1]);
            acc = if i % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
        }
        let kk = BigInt::from(k);
        if acc.packed_terms().values().any(|c| !c.is_multiple_of(&kk)) {
            return Err(Error::Verification(format!("Newton step {k} is not integral")));
        }
        b.push(acc.map(|c| c / &kk));
    }
    b.remove(0);
    Ok(b)
}

/// Compares `B_k(a(x))` with `e_k(σ(r)(x))` at seeded random integer points.
pub(crate) fn check_at_points(spec: &ResolventSpec, res: &Resolvent, points: usize) -> Result<()> {
    let orbit = spec.orbit();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0de + spec.n as u64);
    for _ in 0..points {
        let x: Vec<BigInt> = (0..spec.n).map(|_| BigInt::from(rng.gen_range(-6i64..=6))).collect();
        let roots: Vec<BigInt> = orbit.iter().map(|r| r.eval(&x)).collect();
        let want = elementary_values(&roots);
        let a = spec.convention.from_elementary(&elementary_values(&x));
        for (k, bk) in res.b.iter().enumerate() {
            if bk.eval(&a) != want[k + 1] {
                return Err(Error::Verification(format!("{}: coefficient B{} disagrees at x = {x:?}", spec.name, k + 1)));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_specs_are_consistent() {
        for (name, index, order) in [("theta", 6, 20), ("f10", 10, 72), ("f15", 15, 48), ("psi", 6, 120), ("phi", 2, 3), ("alt4", 2, 12)] {
            let s = ResolventSpec::builtin(name).unwrap();
            assert_eq!((s.index(), s.group_order), (index, order), "{name}");
        }
        assert!(ResolventSpec::builtin("nope").is_err());
    }

    #[test]
    fn quadratic_resolvent_is_y2_minus_disc() {
        let res = orbit_resolvent(&alternating_spec(3).unwrap()).unwrap();
        let f = IntPoly::from_i64s(&[0, -3, 1]);
        let disc = crate::poly::disc_resultant(&f);
        assert_eq!(res.of(&f), Poly::new(vec![-disc, BigInt::zero(), BigInt::one()]));
    }

    #[test]
    fn collision_detected() {
        let inv = MPoly::parse("x1 + x2 + x3", Some(&xvars(3))).unwrap();
        let spec = ResolventSpec::new("bad", inv, vec![Perm::parse_cycles(3, "(123)").unwrap()], None, Convention::Literal).unwrap();
        assert!(matches!(orbit_resolvent(&spec), Err(Error::OrbitCollision(0, 1))));
    }

    #[test]
    fn non_invariant_rejected() {
        let inv = MPoly::parse("x1", Some(&xvars(3))).unwrap();
        assert!(ResolventSpec::new("bad", inv, vec![Perm::parse_cycles(3, "(123)").unwrap()], None, Convention::Literal).is_err());
    }

    #[test]
    fn phi_cubic() {
        let res = orbit_resolvent(&ResolventSpec::builtin("phi").unwrap()).unwrap();
        assert_eq!(res.degree(), 2);
    }
}
