use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use galenum::poly::IntPoly;
use galenum::symres::perm::{all_perms, group_closure};
use galenum::symres::sextic::{theta_from_tables, theta_symbolic};
use galenum::symres::{cache, orbit_resolvent, symmetric_reduce, ResolventSpec};
use galenum::ZMPoly;

fn parse(s: &str, vars: &[&str]) -> ZMPoly {
    let v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    ZMPoly::parse(s, Some(&v)).unwrap()
}

/// The cached resolvent with `a_1..a_4 = 0`, as a polynomial in `a_5, a_6, y`.
fn tail_specialization(name: &str) -> ZMPoly {
    let full = cache::load(name).unwrap().to_mpoly();
    let mut g = full;
    for i in 0..4 {
        g = g.specialize(i, &BigInt::zero());
    }
    g.restrict_vars(&[4, 5, 6]).unwrap().rename(&["a5", "a6", "y"])
}

#[test]
fn f10_tail_coefficients() {
    let res = cache::load("f10").unwrap();
    let expected = ["0", "0", "66*a6", "0", "-123*a5^2", "129*a6^2", "0", "66*a5^2*a6", "64*a6^3", "a5^4"];
    for (k, want) in expected.iter().enumerate() {
        let mut b = res.b[k].clone();
        for i in 0..4 {
            b = b.specialize(i, &BigInt::zero());
        }
        let b = b.restrict_vars(&[4, 5]).unwrap().rename(&["a5", "a6"]);
        assert_eq!(b, parse(want, &["a5", "a6"]), "b_{}", k + 1);
    }
    let g = tail_specialization("f10");
    assert_eq!(g, parse("y^10 - 66*a6*y^7 + 123*a5^2*y^5 + 129*a6^2*y^4 + 66*a5^2*a6*y^2 - 64*a6^3*y + a5^4", &["a5", "a6", "y"]));
    // X^6 - 1: the ten values (r_i + r_j + r_k)(r_l + r_m + r_n) over sixth roots of unity
    let r = res.of(&IntPoly::from_i64s(&[0, 0, 0, 0, 0, -1]));
    let want: Vec<BigInt> = [0, 64, 0, 0, 129, 0, 0, 66, 0, 0, 1].iter().map(|&v| BigInt::from(v)).collect();
    assert_eq!(r.coeffs(), &want[..]);
}

#[test]
fn f15_tail_at_unit_a6() {
    let g = tail_specialization("f15").specialize(1, &BigInt::from(1)).restrict_vars(&[0, 2]).unwrap();
    let expected = "32*a5^6 + 1296*a5^2*y + 792*a5^4*y^2 - 1728*y^3 - 96*a5^2*y^4 - 353*a5^4*y^5 \
                   - 1232*y^6 + 288*a5^2*y^7 + 453*y^9 - 21*a5^2*y^10 - 42*y^12 + y^15";
    assert_eq!(g, parse(expected, &["a5", "y"]));
    assert_eq!(g.num_terms(), 12);
}

#[test]
fn psi_tail() {
    let expected = "y^6 - 42*a5^2*y^5 + 360*a5^4*y^4 - (1360*a5^6 - 46656*a6^5)*y^3 \
                   + (2640*a5^8 - 34992*a5^2*a6^5)*y^2 - 2592*a5^10*y + 1024*a5^12";
    assert_eq!(tail_specialization("psi"), parse(expected, &["a5", "a6", "y"]));
}

#[test]
fn theta_orbit_matches_tables() {
    let orbit = orbit_resolvent(&ResolventSpec::builtin("theta").unwrap()).unwrap();
    assert_eq!(orbit.to_mpoly(), theta_from_tables().unwrap().to_mpoly());
    assert_eq!(orbit.to_mpoly(), theta_symbolic());
}

#[test]
fn theta_at_unit_d() {
    let mut g = theta_symbolic();
    for (i, v) in [(0, 0), (1, 0), (2, 0), (3, 1)] {
        g = g.specialize(i, &BigInt::from(v));
    }
    let g = g.restrict_vars(&[4, 5]).unwrap().rename(&["e", "y"]);
    let expected = "102400 - 108544*y - 3200000*e^4*y + 44800*y^2 - 8960*y^3 + 880*y^4 - 40*y^5 + y^6";
    assert_eq!(g, parse(expected, &["e", "y"]));
}

#[test]
fn invariants_fixed_by_generators() {
    for name in ["theta", "f10", "f15", "psi", "phi"] {
        let spec = ResolventSpec::builtin(name).unwrap();
        for g in &spec.generators {
            assert_eq!(spec.invariant.permute(&g.0), spec.invariant, "{name} moved by {g}");
        }
        assert_eq!(group_closure(spec.n, &spec.generators).len(), spec.group_order);
    }
}

#[test]
fn cached_resolvents_are_monic_of_index_degree() {
    for name in ResolventSpec::CACHED {
        let spec = ResolventSpec::builtin(name).unwrap();
        let res = cache::load(name).unwrap();
        assert_eq!(res.degree(), spec.index(), "{name}");
        let p = res.to_mpoly();
        let d = p.degree_in(spec.n).unwrap();
        let lead = &p.coeffs_in(spec.n)[d as usize];
        assert_eq!(lead.num_terms(), 1);
        assert_eq!(lead.terms().next().unwrap().1, &BigInt::from(1));
    }
}

#[test]
fn small_resolvents_round_trip_symbolically() {
    // substituting e_k back into each B_k must give the orbit's elementary symmetric function
    for name in ["theta", "alt4", "alt5"] {
        let spec = ResolventSpec::builtin(name).unwrap();
        let res = orbit_resolvent(&spec).unwrap();
        let orbit = spec.orbit();
        let xvars = spec.invariant.vars().to_vec();
        let e: Vec<ZMPoly> = (1..=spec.n).map(|k| galenum::symres::elementary_symmetric::<BigInt>(k, spec.n).unwrap()).collect();
        let images: Vec<ZMPoly> = e
            .iter()
            .enumerate()
            .map(|(i, ek)| match spec.convention {
                galenum::symres::Convention::Literal if i % 2 == 0 => ek.neg(),
                _ => ek.clone(),
            })
            .collect();
        let mut elem = vec![ZMPoly::constant(&xvars, BigInt::from(1))];
        for r in &orbit {
            let mut next = elem.clone();
            next.push(ZMPoly::zero(&xvars));
            for k in 1..next.len() {
                next[k] = next[k].add(&elem[k - 1].mul(r));
            }
            elem = next;
        }
        for (k, bk) in res.b.iter().enumerate() {
            assert_eq!(bk.substitute(&images), elem[k + 1], "{name} B_{}", k + 1);
            assert_eq!(symmetric_reduce(&elem[k + 1]).unwrap().substitute(&e), elem[k + 1]);
        }
    }
}

/// Distinct roots of `X^6 + c_1 X^5 + ... + c_6` in `F_p`, by scanning.
fn roots_mod(c: &[i64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| {
            let mut acc = 1u64;
            for &a in c {
                acc = (acc * x + a.rem_euclid(p as i64) as u64) % p;
            }
            acc == 0
        })
        .collect()
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn poly_mul_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Invariant terms reduced mod `p`.
fn terms_mod(f: &ZMPoly, p: u64) -> Vec<(u64, Vec<u32>)> {
    let pb = BigInt::from(p);
    f.terms()
        .map(|(e, c)| {
            let r = ((c % &pb) + &pb) % &pb;
            (r.to_u64().unwrap(), e)
        })
        .collect()
}

fn eval_mod(terms: &[(u64, Vec<u32>)], x: &[u64], p: u64) -> u64 {
    let mut acc = 0u64;
    for (c, e) in terms {
        let mut t = *c;
        for (xi, &k) in x.iter().zip(e) {
            for _ in 0..k {
                t = t * xi % p;
            }
        }
        acc = (acc + t) % p;
    }
    acc
}

#[test]
fn sextic_resolvents_match_splitting_prime_oracle() {
    // Over a prime where f splits into distinct roots, the product of (y - F(r_π)) over all
    // 720 orderings π equals R(y)^|G| mod p; no coset representatives or reduction involved.
    let names = ["f10", "f15", "psi"];
    let specs: Vec<ResolventSpec> = names.iter().map(|n| ResolventSpec::builtin(n).unwrap()).collect();
    let cached: Vec<_> = names.iter().map(|n| cache::load(n).unwrap()).collect();
    let perms = all_perms(6);
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e77);
    let mut checked = 0;
    while checked < 200 {
        let c: Vec<i64> = (0..6).map(|_| rng.gen_range(-9..=9)).collect();
        let Some((p, roots)) = (7u64..20_000).filter(|&p| is_prime(p)).find_map(|p| {
            let r = roots_mod(&c, p);
            (r.len() == 6).then_some((p, r))
        }) else {
            continue;
        };
        let f = IntPoly::from_i64s(&c);
        for ((spec, res), name) in specs.iter().zip(&cached).zip(names) {
            let terms = terms_mod(&spec.invariant, p);
            let mut prod = vec![1u64];
            for perm in &perms {
                let x: Vec<u64> = (0..6).map(|i| roots[perm.apply(i)]).collect();
                let v = eval_mod(&terms, &x, p);
                prod = poly_mul_mod(&prod, &[(p - v) % p, 1], p);
            }
            let pb = BigInt::from(p);
            let r: Vec<u64> = res.of(&f).coeffs().iter().map(|c| (((c % &pb) + &pb) % &pb).to_u64().unwrap()).collect();
            let mut power = vec![1u64];
            for _ in 0..spec.group_order {
                power = poly_mul_mod(&power, &r, p);
            }
            assert_eq!(power, prod, "{name} at {c:?} mod {p}");
        }
        checked += 1;
    }
}

#[test]
fn theta_regenerates_bit_exactly() {
    let regen = cache::regenerate("theta").unwrap();
    assert!(regen.matches(), "first difference at line {:?}", regen.first_difference);
    assert_eq!(regen.text, cache::stored_text("theta").unwrap());
}
