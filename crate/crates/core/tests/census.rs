use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;

use galenum::census::{demoivre_census, fit_exponent, run_census, run_census_with, CensusMode, CensusOptions};
use galenum::classify::classify;
use galenum::poly::{disc_resultant, is_irreducible, IntPoly};
use galenum::symres::sextic_resolvent_of;

fn with_shards(shards: usize) -> CensusOptions {
    CensusOptions { shards, ..Default::default() }
}

/// Every tuple in the box, classified one at a time.
fn oracle(n: usize, h: i64) -> (u64, BTreeMap<String, u64>) {
    let mut reducible = 0;
    let mut classes = BTreeMap::new();
    let side = (2 * h + 1) as usize;
    for idx in 0..side.pow(n as u32) {
        let mut rest = idx;
        let c: Vec<i64> = (0..n)
            .map(|_| {
                let v = (rest % side) as i64 - h;
                rest /= side;
                v
            })
            .collect();
        let f = IntPoly::from_i64s(&c);
        if !is_irreducible(&f) {
            reducible += 1;
            continue;
        }
        assert!(!disc_resultant(&f).is_zero());
        *classes.entry(classify(&f).unwrap().class.alias).or_insert(0) += 1;
    }
    (reducible, classes)
}

#[test]
fn agrees_with_tuplewise_classification() {
    for (n, h) in [(3, 3), (4, 2), (5, 2), (6, 1)] {
        let r = run_census(n, h as u64, CensusMode::Full).unwrap();
        let (reducible, classes) = oracle(n, h);
        assert_eq!(r.total, (2 * h as u64 + 1).pow(n as u32));
        assert_eq!(r.reducible, reducible, "n={n} H={h}");
        assert_eq!(r.per_class, classes, "n={n} H={h}");
        assert_eq!(r.irreducible, classes.values().sum::<u64>());
    }
}

#[test]
fn shard_count_does_not_change_reports() {
    for (n, h, mode) in [(5, 3, CensusMode::Full), (4, 4, CensusMode::Full), (6, 1, CensusMode::Full), (5, 3, CensusMode::SolvableOnly)] {
        let base = run_census_with(n, h, mode, &with_shards(1)).unwrap().to_json(false).to_string();
        for k in [4, 16] {
            let r = run_census_with(n, h, mode, &with_shards(k)).unwrap();
            assert_eq!(r.run.shards, k);
            assert_eq!(r.to_json(false).to_string(), base, "n={n} H={h} shards={k}");
        }
    }
}

#[test]
fn counts_grow_with_height() {
    let mut prev: Option<galenum::census::CensusReport> = None;
    for h in 0..=5 {
        let r = run_census(5, h, CensusMode::Full).unwrap();
        assert_eq!(r.total, r.reducible + r.irreducible);
        if let Some(p) = &prev {
            assert!(r.reducible >= p.reducible && r.irreducible >= p.irreducible);
            assert!(r.solvable >= p.solvable);
            for (k, v) in &p.per_class {
                assert!(r.per_class.get(k).copied().unwrap_or(0) >= *v, "{k} at H={h}");
            }
        }
        prev = Some(r);
    }
}

#[test]
fn witnesses_are_resolvent_roots() {
    let h = 5u64;
    let r = run_census(5, h, CensusMode::Full).unwrap();
    let solvable: u64 = ["C5", "D5", "AGL(1,F5)"].iter().map(|k| r.per_class.get(*k).copied().unwrap_or(0)).sum();
    assert_eq!(r.solvable.unwrap(), solvable);
    assert_eq!(r.witnesses.len() as u64, solvable);
    let mut max = BigInt::zero();
    for w in &r.witnesses {
        let f = w.poly().unwrap();
        let y = w.root().unwrap();
        assert!(sextic_resolvent_of(&f).unwrap().eval(&y).is_zero(), "{f} at {y}");
        assert!(f.coeffs().iter().all(|c| c.magnitude() <= &h.into()));
        max = max.max(y.magnitude().clone().into());
    }
    assert_eq!(r.max_resolvent_root, Some(max.clone()));
    let ratio = r.max_resolvent_root_ratio.unwrap();
    assert!((ratio - max.to_string().parse::<f64>().unwrap() / 25.0).abs() < 1e-12);
}

#[test]
fn modes_are_consistent() {
    let full = run_census(5, 4, CensusMode::Full).unwrap();
    let solv = run_census(5, 4, CensusMode::SolvableOnly).unwrap();
    let red = run_census(5, 4, CensusMode::ReducibleOnly).unwrap();
    assert_eq!(solv.solvable, full.solvable);
    assert_eq!((solv.reducible, red.reducible), (full.reducible, full.reducible));
    assert_eq!(red.irreducible, full.irreducible);
    assert_eq!(solv.per_class["nonsolvable"], full.per_class["S5"] + full.per_class.get("A5").copied().unwrap_or(0));
    assert_eq!(red.per_class.values().sum::<u64>(), full.irreducible);
    assert!(red.solvable.is_none() && red.non_full.is_none());
}

#[test]
fn demoivre_family_is_within_solvable_count() {
    for h in [1u64, 2, 4, 8, 20] {
        let d = demoivre_census(h);
        // brute force over the parameters
        let mut count = 0;
        for s in -(h as i64)..=h as i64 {
            for t in -(h as i64)..=h as i64 {
                let (b, c) = (5 * s, 5 * s * s);
                if b.unsigned_abs() > h || c.unsigned_abs() > h {
                    continue;
                }
                if is_irreducible(&IntPoly::from_i64s(&[0, b, 0, c, t])) {
                    count += 1;
                }
            }
        }
        assert_eq!(d.count, count, "H={h}");
        assert_eq!(d.pairs.len() as u64, count);
        for &(s, t) in &d.pairs {
            assert_eq!(classify(&galenum::census::DeMoivreCensus::poly(s, t)).unwrap().class.alias, "AGL(1,F5)");
        }
    }
    let r = run_census(5, 4, CensusMode::SolvableOnly).unwrap();
    assert!(r.solvable.unwrap() >= demoivre_census(4).count);
    assert!(r.per_class["AGL(1,F5)"] >= demoivre_census(4).count);
}

#[test]
fn exponent_fit_recovers_power_law() {
    let series: Vec<(u64, u64)> = [2u64, 4, 8, 16].iter().map(|&h| (h, 3 * h.pow(4))).collect();
    let fit = fit_exponent(&series).unwrap();
    assert!((fit.slope - 4.0).abs() < 1e-9);
    assert!((fit.intercept - 3f64.ln()).abs() < 1e-9);
    assert!(fit_exponent(&series[..1]).is_err());
}

#[test]
fn resumes_from_partial_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let (n, h, mode) = (5usize, 3u64, CensusMode::Full);
    let fresh = run_census(n, h, mode).unwrap().to_json(false);

    let run = |shards: usize, file: &str| {
        let opts = CensusOptions { shards, checkpoint: Some(dir.path().join(file)), ..Default::default() };
        run_census_with(n, h, mode, &opts).unwrap()
    };
    let done4 = run(4, "four.json");
    assert_eq!(done4.run.resumed_shards, 0);
    run(8, "eight.json");
    let read = |file: &str| -> Value { serde_json::from_str(&std::fs::read_to_string(dir.path().join(file)).unwrap()).unwrap() };
    let four = read("four.json");
    let eight = read("eight.json");
    assert_eq!(four["format"], "galenum-census-checkpoint");

    // shard 0 of 8 is the first half of shard 0 of 4: a genuine mid-shard state
    let mut partial = four.clone();
    partial["state"][0] = eight["state"][0].clone();
    let units = (2 * h + 1).pow(2);
    for s in [1u64, 2] {
        partial["state"][s as usize] = serde_json::json!({"next_unit": s * units / 4, "tally": {"total": 0, "reducible": 0, "irreducible": 0, "solvable": 0, "per_class": {}, "witnesses": []}});
    }
    std::fs::write(dir.path().join("partial.json"), partial.to_string()).unwrap();
    let resumed = run(4, "partial.json");
    assert_eq!(resumed.run.resumed_shards, 2);
    assert_eq!(resumed.to_json(false), fresh);

    // a completed checkpoint resumes to the same answer without recomputation
    let again = run(4, "four.json");
    assert_eq!(again.run.resumed_shards, 4);
    assert_eq!(again.to_json(false), fresh);

    // parameters must match
    let opts = CensusOptions { shards: 4, checkpoint: Some(dir.path().join("four.json")), ..Default::default() };
    assert!(run_census_with(n, h + 1, mode, &opts).is_err());
}

#[test]
fn budget_and_parameter_errors() {
    let small = CensusOptions { budget: 1000, ..Default::default() };
    assert!(matches!(run_census_with(5, 2, CensusMode::Full, &small), Err(galenum::Error::Budget { .. })));
    assert!(run_census(4, 1, CensusMode::SolvableOnly).is_err());
    assert!(run_census(7, 1, CensusMode::Full).is_err());
    assert!(run_census_with(5, 1, CensusMode::Full, &with_shards(0)).is_err());
}

#[test]
fn csv_lists_every_class() {
    let r = run_census(4, 2, CensusMode::Full).unwrap();
    let csv = r.to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("degree,height,class,count"));
    let rows: BTreeMap<String, u64> = lines
        .map(|l| {
            let parts: Vec<&str> = l.rsplitn(2, ',').collect();
            let head: Vec<&str> = parts[1].splitn(3, ',').collect();
            (head[2].trim_matches('"').to_string(), parts[0].parse().unwrap())
        })
        .collect();
    assert_eq!(rows["total"], r.total);
    assert_eq!(rows["reducible"], r.reducible);
    for (k, v) in &r.per_class {
        assert_eq!(rows[k], *v);
    }
}
