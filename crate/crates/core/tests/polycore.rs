use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use galenum::poly::{
    cycle_type_samples, disc_quintic_explicit, disc_resultant, factor_over_q, integer_roots, is_irreducible,
    is_perfect_square, IntPoly, Poly,
};

/// Coefficients `[1, c_1, ..., c_n]`, leading first.
fn monic(c: &[i64]) -> Vec<i128> {
    std::iter::once(1).chain(c.iter().map(|&v| v as i128)).collect()
}

fn mul_desc(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn from_roots(roots: &[i64]) -> Vec<i128> {
    roots.iter().fold(vec![1], |acc, &r| mul_desc(&acc, &[1, -(r as i128)]))
}

fn to_intpoly(desc: &[i128]) -> IntPoly {
    IntPoly::new(desc[1..].iter().map(|&v| BigInt::from(v)).collect()).unwrap()
}

/// Divides by `X - r` if it is a root.
fn deflate(desc: &[i128], r: i128) -> Option<Vec<i128>> {
    let mut q = Vec::with_capacity(desc.len() - 1);
    let mut acc = 0i128;
    for &c in desc {
        acc = acc * r + c;
        q.push(acc);
    }
    (q.pop() == Some(0)).then_some(q)
}

/// Integer roots with multiplicity by scanning the Cauchy bound.
fn scan_roots(desc: &[i128]) -> Vec<i128> {
    let bound = 1 + desc[1..].iter().map(|c| c.abs()).max().unwrap_or(0);
    let mut out = Vec::new();
    for r in -bound..=bound {
        let mut p = desc.to_vec();
        while p.len() > 1 {
            match deflate(&p, r) {
                Some(q) => {
                    out.push(r);
                    p = q;
                }
                None => break,
            }
        }
    }
    out
}

/// Fraction-free determinant.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `(-1)^(n(n-1)/2) Res(f, f')` for monic `f`, from the Sylvester matrix.
fn sylvester_disc(desc: &[i128]) -> BigInt {
    let n = desc.len() - 1;
    let df: Vec<i128> = desc[..n].iter().enumerate().map(|(i, c)| c * (n - i) as i128).collect();
    let size = 2 * n - 1;
    let mut m = vec![vec![BigInt::zero(); size]; size];
    for r in 0..n - 1 {
        for (j, c) in desc.iter().enumerate() {
            m[r][r + j] = BigInt::from(*c);
        }
    }
    for r in 0..n {
        for (j, c) in df.iter().enumerate() {
            m[n - 1 + r][r + j] = BigInt::from(*c);
        }
    }
    let res = bareiss(m);
    if (n * (n - 1) / 2) % 2 == 1 {
        -res
    } else {
        res
    }
}

fn roots_mod(desc: &[i128], p: i128) -> usize {
    (0..p).filter(|&x| desc.iter().fold(0i128, |acc, &c| (acc * x + c).rem_euclid(p)) == 0).count()
}

fn coeffs(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    (1..=max_deg).prop_flat_map(|n| prop::collection::vec(-5i64..=5, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn factors_multiply_back(c in coeffs(6), d in coeffs(3)) {
        let desc = mul_desc(&monic(&c), &monic(&d));
        let f = to_intpoly(&desc);
        let factors = factor_over_q(&f);
        prop_assert!(factors.len() >= 2);
        let prod = factors.iter().fold(Poly::constant(BigInt::one()), |acc, g| acc.mul(&g.to_poly()));
        prop_assert_eq!(prod, f.to_poly());
        for g in &factors {
            prop_assert!(is_irreducible(g));
            let gd: Vec<i128> = std::iter::once(1)
                .chain(g.coeffs().iter().map(|v| i128::try_from(v).unwrap()))
                .collect();
            if gd.len() <= 4 && gd.len() > 2 {
                // degree 2 or 3: irreducible over Q iff no integer root
                prop_assert!(scan_roots(&gd).is_empty());
            }
            // spot check: the product vanishes wherever a factor does, mod small primes
            for p in [7i128, 11, 13] {
                prop_assert!(roots_mod(&gd, p) <= roots_mod(&desc, p));
            }
        }
    }

    #[test]
    fn integer_roots_match_scan(c in coeffs(6)) {
        let desc = monic(&c);
        let got: Vec<i128> = integer_roots(&to_intpoly(&desc)).iter().map(|r| i128::try_from(r).unwrap()).collect();
        prop_assert_eq!(got, scan_roots(&desc));
    }

    #[test]
    fn roots_recovered_from_products(roots in prop::collection::vec(-6i64..=6, 1..=6)) {
        let desc = from_roots(&roots);
        let mut want: Vec<BigInt> = roots.iter().map(|&r| BigInt::from(r)).collect();
        want.sort();
        prop_assert_eq!(integer_roots(&to_intpoly(&desc)), want);
    }

    #[test]
    fn cycle_types_partition_degree(c in coeffs(6)) {
        let desc = monic(&c);
        prop_assume!(desc.len() >= 3);
        let f = to_intpoly(&desc);
        prop_assume!(!disc_resultant(&f).is_zero());
        let samples = cycle_type_samples(&f, 6).unwrap();
        prop_assert_eq!(samples.len(), 6);
        for s in samples {
            prop_assert_eq!(s.degrees.iter().sum::<usize>(), f.degree());
            prop_assert_eq!(s.degrees.iter().filter(|&&d| d == 1).count(), roots_mod(&desc, s.prime as i128));
        }
    }

    #[test]
    fn discriminants_agree(c in prop::collection::vec(-9i64..=9, 5)) {
        let desc = monic(&c);
        let f = to_intpoly(&desc);
        let b: Vec<BigInt> = c.iter().map(|&v| BigInt::from(v)).collect();
        let explicit = disc_quintic_explicit(&b[0], &b[1], &b[2], &b[3], &b[4]);
        prop_assert_eq!(&explicit, &disc_resultant(&f));
        prop_assert_eq!(&explicit, &sylvester_disc(&desc));
    }

    #[test]
    fn discriminant_is_product_of_root_gaps(roots in prop::collection::vec(-6i64..=6, 2..=6)) {
        let mut want = BigInt::one();
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let d = BigInt::from(roots[i] - roots[j]);
                want *= &d * &d;
            }
        }
        let desc = from_roots(&roots);
        prop_assert_eq!(disc_resultant(&to_intpoly(&desc)), want);
    }

    #[test]
    fn large_squares(k in any::<u128>()) {
        let k = BigInt::from(k);
        let sq = &k * &k;
        prop_assert!(is_perfect_square(&sq));
        if k.is_positive() {
            prop_assert!(!is_perfect_square(&(&sq + 1u32)));
            prop_assert!(!is_perfect_square(&(&sq - 1u32)) || k == BigInt::one());
        }
        prop_assert!(!is_perfect_square(&(-&sq - 1u32)));
    }
}

#[test]
fn perfect_squares_exhaustive() {
    let mut square = vec![false; 1_000_001];
    let mut k = 0usize;
    while k * k <= 1_000_000 {
        square[k * k] = true;
        k += 1;
    }
    for (z, &want) in square.iter().enumerate() {
        assert_eq!(is_perfect_square(&BigInt::from(z)), want, "{z}");
    }
    for z in 1..1000 {
        assert!(!is_perfect_square(&BigInt::from(-z)));
    }
}

#[test]
fn eisenstein_family_is_irreducible() {
    for s in -4i64..=4 {
        for t in [-10i64, -5, 5, 10, 15] {
            if t % 25 == 0 {
                continue;
            }
            let f = IntPoly::from_i64s(&[0, 5 * s, 0, 5 * s * s, t]);
            assert!(is_irreducible(&f), "s={s} t={t}");
        }
    }
    assert_eq!(factor_over_q(&IntPoly::from_i64s(&[0, 10, 0, 20, 2])).len(), 1);
}
