//! Elementary symmetric polynomials and the fundamental-theorem reduction.
//!
//! A symmetric polynomial is held in the monomial basis `m_λ`, indexed by
//! partitions `λ` with at most `n` parts. Partitions are packed like sorted
//! monomials: part `k` in byte `k` counted from the most significant end.
//! Reduction walks the partitions of each homogeneous degree in an order
//! compatible with dominance, subtracting `c · e^β(λ)` for the leading
//! residual coefficient `c`, where `β_i = λ_i − λ_(i+1)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mpoly::{mono, MPoly, MonoMap, MAX_VARS};
use crate::scalar::{IntScalar, Scalar};

/// `e_k(x_1, ..., x_n)`.
pub fn elementary_symmetric<T: Scalar>(k: usize, n: usize) -> Result<MPoly<T>> {
    if n > MAX_VARS {
        return Err(Error::Precondition(format!("at most {MAX_VARS} variables, got {n}")));
    }
    if k > n {
        return Err(Error::Precondition(format!("k = {k} outside [0, {n}]")));
    }
    let vars = MPoly::<T>::indexed_vars("x", n);
    let mut p = MPoly::zero(&vars);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            let m = (0..n).filter(|i| mask >> i & 1 == 1).map(mono::unit).sum();
            p.add_term(m, T::one());
        }
    }
    Ok(p)
}

/// Expresses a symmetric `P(x_1..x_n)` as `Q(s_1..s_n)` with `Q(e_1, ..., e_n) = P`.
///
/// Symmetry is checked on adjacent transpositions; the result is verified by
/// substitution (symbolically for small inputs, at random points otherwise).
pub fn symmetric_reduce<T: IntScalar>(p: &MPoly<T>) -> Result<MPoly<T>> {
    let n = p.nvars();
    for i in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        if p.permute(&perm) != *p {
            return Err(Error::NotSymmetric(i + 1, i + 2));
        }
    }
    let sorted = p
        .packed_terms()
        .iter()
        .filter(|(&m, _)| mono::is_sorted(m, n))
        .map(|(&m, c)| (m, c.to_bigint()));
    let reduced = reduce_sorted(n, sorted)?;
    let svars = MPoly::<T>::indexed_vars("s", n);
    let mut terms = BTreeMap::new();
    for (beta, c) in reduced {
        let c = T::from_bigint(&c).ok_or_else(|| Error::Precondition("coefficient does not fit the scalar type".into()))?;
        terms.insert(beta, c);
    }
    let q = MPoly::from_packed(svars, terms);
    verify_reduction(p, &q)?;
    Ok(q)
}

/// Checks `q(e_1, ..., e_n) = p`.
pub(crate) fn verify_reduction<T: IntScalar>(p: &MPoly<T>, q: &MPoly<T>) -> Result<()> {
    let n = p.nvars();
    if p.num_terms() <= 4000 && q.num_terms() <= 400 {
        let es: Vec<MPoly<T>> = (1..=n).map(|k| elementary_symmetric(k, n).map(|e| e.rename(p.vars()))).collect::<Result<_>>()?;
        if n == 0 {
            return if p == q { Ok(()) } else { Err(Error::Verification("constant mismatch".into())) };
        }
        if q.substitute(&es) != *p {
            return Err(Error::Verification("substitution check failed".into()));
        }
        return Ok(());
    }
    let pb = p.map(|c| c.to_bigint());
    let qb = q.map(|c| c.to_bigint());
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f);
    for _ in 0..4 {
        let x: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
        let e = elementary_values(&x);
        if pb.eval(&x) != qb.eval(&e[1..]) {
            return Err(Error::Verification("substitution check failed at a sample point".into()));
        }
    }
    Ok(())
}

/// `[e_0, e_1, ..., e_n]` of the given values.
pub fn elementary_values<T: Scalar>(x: &[T]) -> Vec<T> {
    let mut e = vec![T::one()];
    for v in x {
        e.push(T::zero());
        for k in (1..e.len()).rev() {
            let t = e[k - 1].mul(v);
            e[k].add_assign(&t);
        }
    }
    e
}

/// Reduces a symmetric polynomial given by its sorted-monomial coefficients.
///
/// Returns `(β, c)` with `β` packed like a monomial in `s_1..s_n`.
pub(crate) fn reduce_sorted(n: usize, terms: impl IntoIterator<Item = (u64, BigInt)>) -> Result<Vec<(u64, BigInt)>> {
    let mut by_degree: BTreeMap<u32, Vec<(u64, BigInt)>> = BTreeMap::new();
    for (m, c) in terms {
        if !Zero::is_zero(&c) {
            by_degree.entry(mono::degree(m)).or_default().push((m, c));
        }
    }
    let mut out = Vec::new();
    for (d, part) in by_degree {
        let m = part.iter().map(|(t, _)| mono::exp(*t, 0)).max().unwrap_or(0);
        let res = match reduce_degree::<i128>(n, d, m, &part) {
            Some(r) => r,
            None => reduce_degree::<BigInt>(n, d, m, &part).expect("unbounded arithmetic"),
        };
        out.extend(res);
    }
    Ok(out)
}

/// Accumulator arithmetic with overflow reporting.
pub(crate) trait Acc: Clone {
    fn nil() -> Self;
    fn unit() -> Self;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn is_nil(&self) -> bool;
    /// `self += a * k`
    fn add_scaled(&mut self, a: &Self, k: u32) -> Option<()>;
    /// `self -= a * b`
    fn sub_prod(&mut self, a: &Self, b: &Self) -> Option<()>;
    /// `self += a * b`
    fn add_prod(&mut self, a: &Self, b: &Self) -> Option<()>;
}

impl Acc for i128 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn add_scaled(&mut self, a: &Self, k: u32) -> Option<()> {
        *self = self.checked_add(a.checked_mul(k as i128)?)?;
        Some(())
    }
    #[inline]
    fn sub_prod(&mut self, a: &Self, b: &Self) -> Option<()> {
        *self = self.checked_sub(a.checked_mul(*b)?)?;
        Some(())
    }
    #[inline]
    fn add_prod(&mut self, a: &Self, b: &Self) -> Option<()> {
        *self = self.checked_add(a.checked_mul(*b)?)?;
        Some(())
    }
}

impl Acc for BigInt {
    fn nil() -> Self {
        <BigInt as Zero>::zero()
    }
    fn unit() -> Self {
        BigInt::from(1)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_scaled(&mut self, a: &Self, k: u32) -> Option<()> {
        *self += a * k;
        Some(())
    }
    fn sub_prod(&mut self, a: &Self, b: &Self) -> Option<()> {
        *self -= a * b;
        Some(())
    }
    fn add_prod(&mut self, a: &Self, b: &Self) -> Option<()> {
        *self += a * b;
        Some(())
    }
}

/// Row operator for multiplication by `e_j` in the monomial basis:
/// `dst[ν] = Σ mult · src[idx]`, summing over `sort(ν − 1_T)` for `|T| = j`.
struct Pull {
    start: Vec<u32>,
    src: Vec<u32>,
    mult: Vec<u32>,
}

struct Lattice {
    n: usize,
    parts: Vec<Vec<u64>>,
    index: Vec<MonoMap<u32>>,
    pulls: Vec<Vec<Option<Pull>>>,
}

fn gen_partitions(rem: u32, maxpart: u32, slot: usize, n: usize, cur: u64, out: &mut Vec<u64>) {
    if rem == 0 {
        out.push(cur);
        return;
    }
    if slot == n {
        return;
    }
    // the remaining slots must be able to absorb rem
    if (maxpart as u64) * ((n - slot) as u64) < rem as u64 {
        return;
    }
    for v in (1..=maxpart.min(rem)).rev() {
        gen_partitions(rem - v, v, slot + 1, n, cur | ((v as u64) << mono::shift(slot)), out);
    }
}

impl Lattice {
    fn new(n: usize, m: u32, top: u32) -> Self {
        let mut parts = Vec::new();
        let mut index = Vec::new();
        for d in 0..=top {
            let mut v = Vec::new();
            gen_partitions(d, m, 0, n, 0, &mut v);
            index.push(v.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect());
            parts.push(v);
        }
        let pulls = (0..=n).map(|_| (0..=top).map(|_| None).collect()).collect();
        Lattice { n, parts, index, pulls }
    }

    fn ensure_pull(&mut self, j: usize, target: usize) {
        if self.pulls[j][target].is_some() {
            return;
        }
        let n = self.n;
        let mut start = vec![0u32];
        let mut src = Vec::new();
        let mut mult = Vec::new();
        let srcidx = &self.index[target - j];
        let mut local: Vec<(u32, u32)> = Vec::new();
        for &nu in &self.parts[target] {
            local.clear();
            let e: Vec<u32> = mono::unpack(nu, n);
            let nz = e.iter().take_while(|&&x| x > 0).count();
            for mask in 0u32..(1 << nz) {
                if mask.count_ones() as usize != j {
                    continue;
                }
                let mut f = e.clone();
                for (i, v) in f.iter_mut().enumerate().take(nz) {
                    if mask >> i & 1 == 1 {
                        *v -= 1;
                    }
                }
                f.sort_unstable_by(|a, b| b.cmp(a));
                let key = mono::pack(&f).expect("small exponents");
                let idx = srcidx[&key];
                match local.iter_mut().find(|(s, _)| *s == idx) {
                    Some(slot) => slot.1 += 1,
                    None => local.push((idx, 1)),
                }
            }
            for &(s, k) in &local {
                src.push(s);
                mult.push(k);
            }
            start.push(src.len() as u32);
        }
        self.pulls[j][target] = Some(Pull { start, src, mult });
    }

    /// `row · e_j`, where `row` lives in degree `deg`.
    fn mul_e<A: Acc>(&mut self, j: usize, row: &[A], deg: usize) -> Option<Vec<A>> {
        self.ensure_pull(j, deg + j);
        let pull = self.pulls[j][deg + j].as_ref().expect("built");
        let len = pull.start.len() - 1;
        let mut out = Vec::with_capacity(len);
        for t in 0..len {
            let mut acc = A::nil();
            for k in pull.start[t] as usize..pull.start[t + 1] as usize {
                let s = &row[pull.src[k] as usize];
                if !s.is_nil() {
                    acc.add_scaled(s, pull.mult[k])?;
                }
            }
            out.push(acc);
        }
        Some(out)
    }
}

struct Run<A> {
    lat: Lattice,
    top: u32,
    residual: Vec<A>,
    out: Vec<(u64, BigInt)>,
}

impl<A: Acc> Run<A> {
    fn descend(&mut self, level: usize, rem: u32, budget: u32, beta: &mut [u32; MAX_VARS], row: &[A], deg: usize) -> Option<()> {
        let n = self.lat.n;
        if level == 1 {
            if rem > budget {
                return Some(());
            }
            beta[0] = rem;
            let mut lam = 0u64;
            let mut acc = 0u32;
            for k in (0..n).rev() {
                acc += beta[k];
                lam |= (acc as u64) << mono::shift(k);
            }
            let idx = self.lat.index[self.top as usize][&lam] as usize;
            if self.residual[idx].is_nil() {
                return Some(());
            }
            let c = self.residual[idx].clone();
            let mut cur = row.to_vec();
            let mut d = deg;
            for _ in 0..rem {
                cur = self.lat.mul_e(1, &cur, d)?;
                d += 1;
            }
            for (t, v) in cur.iter().enumerate() {
                if !v.is_nil() {
                    self.residual[t].sub_prod(&c, v)?;
                }
            }
            debug_assert!(self.residual[idx].is_nil());
            let packed = mono::pack(&beta[..n]).expect("small exponents");
            self.out.push((packed, c.to_big()));
            return Some(());
        }
        let mut cur = row.to_vec();
        let mut d = deg;
        let kmax = (rem / level as u32).min(budget);
        for k in 0..=kmax {
            if k > 0 {
                cur = self.lat.mul_e(level, &cur, d)?;
                d += level;
            }
            beta[level - 1] = k;
            self.descend(level - 1, rem - k * level as u32, budget - k, beta, &cur, d)?;
        }
        beta[level - 1] = 0;
        Some(())
    }
}

fn reduce_degree<A: Acc>(n: usize, d: u32, m: u32, part: &[(u64, BigInt)]) -> Option<Vec<(u64, BigInt)>> {
    if n == 0 {
        return Some(part.iter().map(|(_, c)| (0, c.clone())).collect());
    }
    let lat = Lattice::new(n, m, d);
    let mut residual = vec![A::nil(); lat.parts[d as usize].len()];
    for (mono_, c) in part {
        let idx = lat.index[d as usize][mono_] as usize;
        residual[idx] = A::from_big(c)?;
    }
    let mut run = Run { lat, top: d, residual, out: Vec::new() };
    let mut beta = [0u32; MAX_VARS];
    run.descend(n, d, m, &mut beta, &[A::unit()], 0)?;
    debug_assert!(run.residual.iter().all(|r| r.is_nil()));
    Some(run.out)
}
