//! Polynomials over small prime fields: gcd, distinct-degree and
//! equal-degree factorization, and Dedekind cycle-type extraction.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{disc_resultant, IntPoly};
use crate::error::{Error, Result};

/// Dense polynomial over `F_p`, low degree first, no trailing zeros.
pub type FpPoly = Vec<u64>;

/// Arithmetic in `F_p[X]` for an odd or even prime `p < 2^32`.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 32), "prime out of range");
        Fp { p }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn trim(f: &mut FpPoly) {
        while f.last() == Some(&0) {
            f.pop();
        }
    }

    pub fn reduce_i64(&self, c: &[i64]) -> FpPoly {
        let mut f: FpPoly = c.iter().map(|&v| v.rem_euclid(self.p as i64) as u64).collect();
        Fp::trim(&mut f);
        f
    }

    pub fn reduce_big(&self, c: &[BigInt]) -> FpPoly {
        let pb = BigInt::from(self.p);
        let mut f: FpPoly = c
            .iter()
            .map(|v| {
                let r = ((v % &pb) + &pb) % &pb;
                r.to_u64_digits().1.first().copied().unwrap_or(0)
            })
            .collect();
        Fp::trim(&mut f);
        f
    }

    pub fn add_poly(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.len().max(b.len());
        let mut out: FpPoly = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        Fp::trim(&mut out);
        out
    }

    pub fn sub_poly(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.len().max(b.len());
        let mut out: FpPoly = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        Fp::trim(&mut out);
        out
    }

    pub fn mul_poly(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Fp::trim(&mut out);
        out
    }

    /// Quotient and remainder; `b` nonzero.
    pub fn div_rem(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let db = b.len() - 1;
        if a.len() <= db {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv(*b.last().unwrap());
        let mut r = a.clone();
        let mut q = vec![0u64; a.len() - db];
        for top in (db..r.len()).rev() {
            let lead = self.mul(r[top], inv);
            if lead == 0 {
                continue;
            }
            q[top - db] = lead;
            for (j, &bc) in b.iter().enumerate() {
                let k = top - db + j;
                r[k] = self.sub(r[k], self.mul(lead, bc));
            }
        }
        Fp::trim(&mut r);
        Fp::trim(&mut q);
        (q, r)
    }

    pub fn rem(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        self.div_rem(a, b).1
    }

    pub fn monic(&self, a: &FpPoly) -> FpPoly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => {
                let inv = self.inv(lc);
                a.iter().map(|&c| self.mul(c, inv)).collect()
            }
        }
    }

    pub fn gcd(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Extended gcd: returns `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn xgcd(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1): (FpPoly, FpPoly) = (vec![1], Vec::new());
        let (mut t0, mut t1): (FpPoly, FpPoly) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            let t2 = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("gcd of zero polynomials"));
        let sc = |v: &FpPoly| -> FpPoly { v.iter().map(|&c| self.mul(c, inv)).collect() };
        (sc(&r0), sc(&s0), sc(&t0))
    }

    pub fn derivative(&self, a: &FpPoly) -> FpPoly {
        let mut d: FpPoly = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, i as u64 % self.p))
            .collect();
        Fp::trim(&mut d);
        d
    }

    /// `base^e mod m`
    pub fn pow_mod(&self, base: &FpPoly, mut e: u128, m: &FpPoly) -> FpPoly {
        let mut acc: FpPoly = self.rem(&vec![1], m);
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul_poly(&acc, &b), m);
            }
            e >>= 1;
            if e > 0 {
                b = self.rem(&self.mul_poly(&b, &b), m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self, f: &FpPoly) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic squarefree `f`:
    /// pairs `(d, g_d)` where `g_d` is the product of all degree-`d` irreducible factors.
    pub fn ddf(&self, f: &FpPoly) -> Vec<(usize, FpPoly)> {
        let mut out = Vec::new();
        let mut rest = self.monic(f);
        let x: FpPoly = vec![0, 1];
        let mut h = self.rem(&x, &rest);
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                out.push((rest.len() - 1, rest.clone()));
                break;
            }
            h = self.pow_mod(&h, self.p as u128, &rest);
            let g = self.gcd(&rest, &self.sub_poly(&h, &x));
            if g.len() > 1 {
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((d, g));
            }
        }
        out
    }

    /// Factor degrees of a monic squarefree `f`, ascending.
    pub fn degree_pattern(&self, f: &FpPoly) -> Vec<usize> {
        let mut degs = Vec::new();
        for (d, g) in self.ddf(f) {
            for _ in 0..(g.len() - 1) / d {
                degs.push(d);
            }
        }
        degs.sort_unstable();
        degs
    }

    /// Splits a product of distinct degree-`d` irreducibles (odd `p`, Cantor-Zassenhaus).
    pub fn edf(&self, g: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
        let n = g.len() - 1;
        if n == d {
            return vec![self.monic(g)];
        }
        assert!(self.p % 2 == 1, "equal-degree splitting needs an odd prime");
        let e = ((self.p as u128).pow(d as u32) - 1) / 2;
        loop {
            let a: FpPoly = {
                let mut v: FpPoly = (0..n).map(|_| rng.gen_range(0..self.p)).collect();
                Fp::trim(&mut v);
                v
            };
            if a.len() < 2 {
                continue;
            }
            let mut b = self.pow_mod(&a, e, g);
            b = self.sub_poly(&b, &vec![1]);
            let h = self.gcd(g, &b);
            let dh = h.len().saturating_sub(1);
            if dh > 0 && dh < n {
                let other = self.div_rem(g, &h).0;
                let mut out = self.edf(&h, d, rng);
                out.extend(self.edf(&other, d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree `f`, sorted by (degree, coefficients).
    pub fn factor_squarefree(&self, f: &FpPoly) -> Vec<FpPoly> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.p ^ 0x5eed);
        let mut out = Vec::new();
        for (d, g) in self.ddf(f) {
            out.extend(self.edf(&g, d, &mut rng));
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev())));
        out
    }

    /// Number of roots of `f` in `F_p` by direct evaluation; for small primes.
    pub fn has_root(&self, f: &FpPoly) -> bool {
        (0..self.p).any(|x| {
            let mut acc = 0u64;
            for &c in f.iter().rev() {
                acc = (acc * x + c) % self.p;
            }
            acc == 0
        })
    }
}

/// Odd primes in ascending order.
pub fn odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| is_prime_u64(n))
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Degrees of the irreducible factors of `f` modulo a prime not dividing its discriminant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleTypeSample {
    pub prime: u64,
    /// ascending
    pub degrees: Vec<usize>,
}

impl CycleTypeSample {
    /// Parity of the Frobenius permutation: even iff the number of even-length cycles is even.
    pub fn is_even(&self) -> bool {
        self.degrees.iter().filter(|&&d| d % 2 == 0).count() % 2 == 0
    }
}

/// Factors `f` modulo the first `count` odd primes not dividing `disc(f)`.
pub fn cycle_type_samples(f: &IntPoly, count: usize) -> Result<Vec<CycleTypeSample>> {
    let disc = disc_resultant(f);
    if disc.is_zero() {
        return Err(Error::Inseparable);
    }
    Ok(cycle_types_with_disc(f, &disc, count))
}

pub(crate) fn cycle_types_with_disc(f: &IntPoly, disc: &BigInt, count: usize) -> Vec<CycleTypeSample> {
    let coeffs = f.to_poly().into_coeffs();
    let mut out = Vec::with_capacity(count);
    for p in odd_primes() {
        if out.len() == count {
            break;
        }
        if (disc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let g = fp.reduce_big(&coeffs);
        out.push(CycleTypeSample { prime: p, degrees: fp.degree_pattern(&g) });
    }
    out
}
