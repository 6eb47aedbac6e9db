use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use galenum::classify::{alternating_test, classify, Level};
use galenum::poly::{cycle_type_samples, disc_resultant, is_irreducible, is_perfect_square, IntPoly};
use galenum::symres::perm::{all_perms, group_closure};
use galenum::symres::Perm;

/// Cycle types and parity of the transitive groups of degree 3 to 5, from generators.
struct Groups(BTreeMap<String, (BTreeSet<Vec<usize>>, bool)>);

impl Groups {
    fn new() -> Self {
        let table: [(&str, usize, &[&str]); 12] = [
            ("C3", 3, &["(123)"]),
            ("S3", 3, &["(123)", "(12)"]),
            ("C4", 4, &["(1234)"]),
            ("V4", 4, &["(12)(34)", "(13)(24)"]),
            ("D4", 4, &["(1234)", "(13)"]),
            ("A4", 4, &["(123)", "(234)"]),
            ("S4", 4, &["(1234)", "(12)"]),
            ("C5", 5, &["(12345)"]),
            ("D5", 5, &["(12345)", "(25)(34)"]),
            ("AGL(1,F5)", 5, &["(12345)", "(2354)"]),
            ("A5", 5, &["(123)", "(12345)"]),
            ("S5", 5, &["(12345)", "(12)"]),
        ];
        let mut out = BTreeMap::new();
        for (name, n, gens) in table {
            let gens: Vec<Perm> = gens.iter().map(|g| Perm::parse_cycles(n, g).unwrap()).collect();
            let group = group_closure(n, &gens);
            let types = group.iter().map(cycle_type).collect();
            let even = group.iter().all(|p| p.is_even());
            out.insert(name.to_string(), (types, even));
        }
        Groups(out)
    }
}

fn cycle_type(p: &Perm) -> Vec<usize> {
    let mut t = p.cycle_type();
    t.sort();
    t
}

fn random_irreducible(rng: &mut ChaCha8Rng, n: usize, h: i64) -> IntPoly {
    loop {
        let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-h..=h)).collect();
        let f = IntPoly::from_i64s(&c);
        if is_irreducible(&f) && disc_resultant(&f) != BigInt::from(0) {
            return f;
        }
    }
}

#[test]
fn group_table_sanity() {
    let g = Groups::new();
    assert_eq!(g.0["S5"].0.len(), 7);
    assert_eq!(group_closure(5, &[Perm::parse_cycles(5, "(12345)").unwrap(), Perm::parse_cycles(5, "(2354)").unwrap()]).len(), 20);
    assert_eq!(all_perms(5).len(), 120);
}

#[test]
fn frobenius_cycle_types_lie_in_the_reported_group() {
    let groups = Groups::new();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut seen = BTreeSet::new();
    for (n, h, count) in [(3usize, 9i64, 300), (4, 6, 400), (5, 6, 600)] {
        for _ in 0..count {
            let f = random_irreducible(&mut rng, n, h);
            let v = classify(&f).unwrap();
            let (types, even) = &groups.0[&v.class.alias];
            for s in cycle_type_samples(&f, 40).unwrap() {
                assert!(types.contains(&s.degrees), "{} has {:?} mod {} outside {}", f, s.degrees, s.prime, v.class.alias);
            }
            assert_eq!(*even, alternating_test(&f).unwrap(), "{f}");
            seen.insert(v.class.alias);
        }
    }
    assert!(seen.len() >= 6, "{seen:?}");
}

#[test]
fn alternating_iff_samples_even() {
    let groups = Groups::new();
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for n in 3..=5 {
        for _ in 0..200 {
            let f = random_irreducible(&mut rng, n, 7);
            let v = classify(&f).unwrap();
            let all_even = cycle_type_samples(&f, 40).unwrap().iter().all(|s| s.is_even());
            assert_eq!(groups.0[&v.class.alias].1, all_even, "{f} as {}", v.class.alias);
        }
    }
}

#[test]
fn known_groups() {
    let cases: [(&[i64], &str, Level); 14] = [
        (&[0, -3, 1], "C3", Level::Proved),
        (&[0, 0, -2], "S3", Level::Proved),
        (&[0, 0, 0, 1], "V4", Level::Proved),
        (&[0, 0, 0, -2], "D4", Level::Proved),
        (&[1, 1, 1, 1], "C4", Level::Proved),
        (&[0, 0, 8, 12], "A4", Level::Proved),
        (&[0, 0, 1, 1], "S4", Level::Proved),
        (&[0, 0, 0, -1, -1], "S5", Level::Proved),
        (&[0, 10, 0, 20, 2], "AGL(1,F5)", Level::Proved),
        (&[0, 0, 0, -5, 12], "D5", Level::Proved),
        (&[1, -4, -3, 3, 1], "C5", Level::Probabilistic),
        (&[0, 0, 0, 20, 16], "A5", Level::Proved),
        (&[0, 0, 0, 0, 1, 1], "S6", Level::Proved),
        (&[0, 0, 0, 0, 0, 7], "", Level::ResolventConditional),
    ];
    for (c, alias, level) in cases {
        let v = classify(&IntPoly::from_i64s(c)).unwrap();
        if !alias.is_empty() {
            assert_eq!(v.class.alias, alias, "{c:?}");
        }
        assert_eq!(v.certificate.level, level, "{c:?}");
    }
}

#[test]
fn ninth_cyclotomic_hits_decic() {
    let v = classify(&IntPoly::from_i64s(&[0, 0, 1, 0, 0, 1])).unwrap();
    let flags = v.class.flags.unwrap();
    assert!(flags.in_g72);
    assert!(!flags.in_a_n);
}

#[test]
fn solvable_quintic_disc_parity() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let mut solvable = 0;
    for _ in 0..3000 {
        // sparse tuples make solvable groups common
        let c: Vec<i64> = (0..5).map(|i| if i % 2 == 0 && rng.gen_bool(0.5) { 0 } else { rng.gen_range(-12..=12) }).collect();
        let f = IntPoly::from_i64s(&c);
        if !is_irreducible(&f) || disc_resultant(&f) == BigInt::from(0) {
            continue;
        }
        let v = classify(&f).unwrap();
        let square = is_perfect_square(&disc_resultant(&f));
        match v.class.alias.as_str() {
            "AGL(1,F5)" => assert!(!square, "{f}"),
            "D5" | "C5" => assert!(square, "{f}"),
            _ => continue,
        }
        solvable += 1;
    }
    for s in 1..=3i64 {
        let f = IntPoly::from_i64s(&[0, 5 * s, 0, 5 * s * s, 5]);
        assert!(!is_perfect_square(&disc_resultant(&f)));
        assert_eq!(classify(&f).unwrap().class.alias, "AGL(1,F5)");
    }
    assert!(solvable > 0);
}

#[test]
fn rejects_reducible_and_inseparable() {
    assert!(classify(&IntPoly::from_i64s(&[0, 0, 0, 0, -1])).is_err());
    assert!(classify(&IntPoly::from_i64s(&[0, -2, 0, 1])).is_err());
    assert!(classify(&IntPoly::from_i64s(&[1, 1])).is_err());
}

fn taylor_shift(c: &[i64], k: i64) -> Vec<i64> {
    // f(X + k) for monic f with coefficients c, by repeated synthetic division
    let mut p: Vec<i128> = std::iter::once(1).chain(c.iter().map(|&v| v as i128)).collect();
    let n = p.len();
    for i in 0..n {
        for j in 1..n - i {
            p[j] += k as i128 * p[j - 1];
        }
    }
    p[1..].iter().map(|&v| v as i64).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn translation_invariant(c in prop::collection::vec(-6i64..=6, 3..=5), k in -3i64..=3) {
        let f = IntPoly::from_i64s(&c);
        prop_assume!(is_irreducible(&f) && disc_resultant(&f) != BigInt::from(0));
        let shifted = taylor_shift(&c, k);
        let g = IntPoly::from_i64s(&shifted);
        prop_assert_eq!(disc_resultant(&f), disc_resultant(&g));
        let a = classify(&f).unwrap();
        let b = classify(&g).unwrap();
        prop_assert_eq!(a.class, b.class);
    }

    #[test]
    fn deterministic(c in prop::collection::vec(-6i64..=6, 3..=6)) {
        let f = IntPoly::from_i64s(&c);
        prop_assume!(is_irreducible(&f) && disc_resultant(&f) != BigInt::from(0));
        let a = classify(&f).unwrap().to_json().to_string();
        let b = classify(&f).unwrap().to_json().to_string();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn taylor_shift_oracle() {
    // (X + 1)^2 - 2(X + 1) + 3 = X^2 + 2
    assert_eq!(taylor_shift(&[-2, 3], 1), vec![0, 2]);
}
