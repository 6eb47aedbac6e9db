//! Factorization over the rationals: Yun squarefree decomposition followed by
//! Zassenhaus (modular factorization, quadratic Hensel lifting, subset recombination).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{odd_primes, Fp, FpPoly};
use super::{gcd_z, IntPoly, Poly};

type ZPoly = Poly<BigInt>;

/// Squarefree decomposition of a primitive polynomial: pairs `(g_i, i)` with
/// `f = ± Π g_i^i`, each `g_i` squarefree, primitive, positive leading coefficient, nonconstant.
pub fn squarefree_decomposition(f: &ZPoly) -> Vec<(ZPoly, usize)> {
    let f = f.primitive_part();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let df = f.derivative();
    let b = gcd_z(&f, &df);
    let mut c = f.div_exact(&b);
    let mut d = df.div_exact(&b).sub(&c.derivative());
    let mut i = 1;
    while c.deg() > 0 {
        let a = gcd_z(&c, &d);
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        c = c.div_exact(&a);
        d = d.div_exact(&a).sub(&c.derivative());
        i += 1;
    }
    out
}

fn mod_poly(f: &ZPoly, m: &BigInt) -> ZPoly {
    f.map(|c| c.mod_floor(m))
}

fn sym_poly(f: &ZPoly, m: &BigInt) -> ZPoly {
    let half: BigInt = m >> 1u32;
    f.map(|c| {
        let r = c.mod_floor(m);
        if r > half {
            r - m
        } else {
            r
        }
    })
}

fn from_fp(f: &FpPoly) -> ZPoly {
    Poly::new(f.iter().map(|&c| BigInt::from(c)).collect())
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// One quadratic Hensel step: from `f ≡ g h`, `s g + t h ≡ 1 (mod m)` with `h` monic to the same modulo `m²`.
fn hensel_step(f: &ZPoly, g: &ZPoly, h: &ZPoly, s: &ZPoly, t: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = mod_poly(&f.sub(&g.mul(h)), &m2);
    let (q, r) = mod_poly(&s.mul(&e), &m2).div_rem_monic(h);
    let g1 = mod_poly(&g.add(&t.mul(&e)).add(&q.mul(g)), &m2);
    let h1 = mod_poly(&h.add(&r), &m2);
    let b = mod_poly(&s.mul(&g1).add(&t.mul(&h1)).sub(&Poly::constant(BigInt::one())), &m2);
    let (c, d) = mod_poly(&s.mul(&b), &m2).div_rem_monic(&h1);
    let s1 = mod_poly(&s.sub(&d), &m2);
    let t1 = mod_poly(&t.sub(&t.mul(&b)).sub(&c.mul(&g1)), &m2);
    (g1, h1, s1, t1)
}

/// Lifts the monic modular factors of `f` (`f ≡ lc(f) Π factors mod p`) to monic factors mod `p^(2^steps)`.
fn multilift(fp: &Fp, f: &ZPoly, factors: &[FpPoly], steps: u32) -> Vec<ZPoly> {
    let p = BigInt::from(fp.p);
    let modulus = p.pow(1u32 << steps);
    if factors.len() == 1 {
        let inv = mod_inverse(f.lc(), &modulus);
        return vec![mod_poly(&f.scale(&inv), &modulus)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let lc_p = f.lc().mod_floor(&p).to_u64_digits().1.first().copied().unwrap_or(0);
    let g0 = left.iter().fold(vec![lc_p], |acc, u| fp.mul_poly(&acc, u));
    let h0 = right.iter().fold(vec![1u64], |acc, u| fp.mul_poly(&acc, u));
    let (one, s0, t0) = fp.xgcd(&g0, &h0);
    debug_assert_eq!(one, vec![1]);
    let (mut g, mut h, mut s, mut t) = (from_fp(&g0), from_fp(&h0), from_fp(&s0), from_fp(&t0));
    let mut m = p.clone();
    for _ in 0..steps {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let mut out = multilift(fp, &g, left, steps);
    out.extend(multilift(fp, &h, right, steps));
    out
}

/// Coefficient bound for factors of `f`, scaled by `|lc(f)|` for the recombination of non-monic inputs.
fn factor_coefficient_bound(f: &ZPoly) -> BigInt {
    let n = f.deg();
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1u32;
    (BigInt::one() << n) * norm * f.lc().abs()
}

/// Proper subset sums of a degree pattern, as a bitmask over `1..n-1`.
pub(crate) fn proper_degree_sums(degrees: &[usize]) -> u128 {
    let n: usize = degrees.iter().sum();
    let mut reach: u128 = 1;
    for &d in degrees {
        reach |= reach << d;
    }
    reach & !1 & !(1u128 << n)
}

struct PrimeChoice {
    fp: Fp,
    factors: Vec<FpPoly>,
    /// candidate factor degrees compatible with every tried prime
    sums: u128,
}

/// Tries a few good primes, keeps the one with the fewest modular factors.
fn choose_prime(f: &ZPoly) -> PrimeChoice {
    let n = f.deg();
    let mut best: Option<(Fp, FpPoly)> = None;
    let mut best_count = usize::MAX;
    let mut sums = if n < 128 { (1u128 << n) - 2 } else { u128::MAX };
    let mut good = 0;
    for p in odd_primes() {
        if good == 5 || best_count == 1 {
            break;
        }
        let fp = Fp::new(p);
        let g = fp.reduce_big(f.coeffs());
        if g.len() != n + 1 || !fp.is_squarefree(&g) {
            continue;
        }
        good += 1;
        let g = fp.monic(&g);
        let pattern = fp.degree_pattern(&g);
        sums &= proper_degree_sums(&pattern);
        if pattern.len() < best_count {
            best_count = pattern.len();
            best = Some((fp, g));
        }
    }
    let (fp, g) = best.expect("squarefree polynomial has a good prime");
    let factors = if best_count == 1 || sums == 0 { vec![g] } else { fp.factor_squarefree(&g) };
    PrimeChoice { fp, factors, sums }
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Irreducible factors of a primitive squarefree polynomial with positive leading coefficient.
fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    if f.deg() <= 1 {
        return vec![f.clone()];
    }
    let choice = choose_prime(f);
    if choice.factors.len() == 1 || choice.sums == 0 {
        return vec![f.clone()];
    }
    let bound = factor_coefficient_bound(f) * 2u32;
    let p = BigInt::from(choice.fp.p);
    let mut steps = 0u32;
    while p.pow(1u32 << steps) <= bound {
        steps += 1;
    }
    let modulus = p.pow(1u32 << steps);
    let mut lifted = multilift(&choice.fp, f, &choice.factors, steps);

    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut k = 1;
    while 2 * k <= lifted.len() {
        let mut hit: Option<(Vec<usize>, ZPoly)> = None;
        let lc = rest.lc().clone();
        let c0 = rest.coeff(0);
        combinations(lifted.len(), k, |idx| {
            let deg: usize = idx.iter().map(|&i| lifted[i].deg()).sum();
            if deg < 128 && choice.sums & (1u128 << deg) == 0 {
                return false;
            }
            let prod = idx.iter().fold(Poly::constant(lc.clone()), |acc, &i| mod_poly(&acc.mul(&lifted[i]), &modulus));
            let g = sym_poly(&prod, &modulus).primitive_part();
            let g0 = g.coeff(0);
            if !c0.is_zero() && (g0.is_zero() || !(&c0 % &g0).is_zero()) {
                return false;
            }
            if rest.pseudo_rem(&g).is_zero() {
                hit = Some((idx.to_vec(), g));
                return true;
            }
            false
        });
        match hit {
            Some((idx, g)) => {
                rest = rest.div_exact(&g);
                out.push(g);
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => k += 1,
        }
    }
    if rest.deg() > 0 {
        out.push(rest.primitive_part());
    }
    out
}

/// Irreducible factors over `Q` of a nonzero integer polynomial, with multiplicity.
///
/// Factors are primitive with positive leading coefficient; the content and sign are dropped.
/// Ordered by degree, then by coefficients from the leading one down.
pub fn factor_poly(f: &ZPoly) -> Vec<ZPoly> {
    let mut out = Vec::new();
    for (g, mult) in squarefree_decomposition(f) {
        for h in zassenhaus(&g) {
            for _ in 0..mult {
                out.push(h.clone());
            }
        }
    }
    out.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev())));
    out
}

/// Monic irreducible factors of `f` over `Q`, with multiplicity, ordered by degree then by `a_1..a_n`.
pub fn factor_over_q(f: &IntPoly) -> Vec<IntPoly> {
    factor_poly(&f.to_poly())
        .iter()
        .map(|g| IntPoly::from_poly(g).expect("factor of a monic polynomial is monic"))
        .collect()
}

/// Irreducibility over `Q`, with a modular degree-pattern screen before full factorization.
pub fn is_irreducible(f: &IntPoly) -> bool {
    let n = f.degree();
    if n == 1 {
        return true;
    }
    if f.coeffs()[n - 1].is_zero() {
        return false;
    }
    let poly = f.to_poly();
    if n < 128 {
        let mut sums = (1u128 << n) - 2;
        let mut good = 0;
        for p in odd_primes().take(12) {
            let fp = Fp::new(p);
            let g = fp.reduce_big(poly.coeffs());
            if !fp.is_squarefree(&g) {
                continue;
            }
            sums &= proper_degree_sums(&fp.degree_pattern(&g));
            if sums == 0 {
                return true;
            }
            good += 1;
            if good == 4 {
                break;
            }
        }
    }
    factor_poly(&poly).len() == 1
}
