//! Galois groups of irreducible monic integer polynomials of degree 3 to 6.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::modp::cycle_types_with_disc;
use crate::poly::{discriminant, disc_resultant, integer_roots_poly, is_irreducible, is_perfect_square, CycleTypeSample, IntPoly, Poly};
use crate::symres::cache;
use crate::symres::sextic::sextic_resolvent_of;

pub const SCHEMA_VERSION: u32 = 1;

/// Default number of primes in the cycle-type schedule.
pub const DEFAULT_SAMPLES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Proved,
    ResolventConditional,
    Probabilistic,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Proved => "proved",
            Level::ResolventConditional => "resolvent_conditional",
            Level::Probabilistic => "probabilistic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub test: String,
    pub outcome: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub level: Level,
    pub evidence: Vec<Evidence>,
}

impl Certificate {
    fn new() -> Self {
        Certificate { level: Level::Proved, evidence: Vec::new() }
    }

    fn note(&mut self, test: &str, outcome: impl fmt::Display) {
        self.evidence.push(Evidence { test: test.to_string(), outcome: outcome.to_string() });
    }

    /// Lowers the level; never raises it.
    fn cap(&mut self, level: Level) {
        self.level = self.level.max(level);
    }
}

/// Containment flags for sextics.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainerFlags {
    pub in_a_n: bool,
    pub in_g72: bool,
    pub in_g48: bool,
    pub in_h120: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisClass {
    pub degree: usize,
    /// Transitive-group label `nTk`.
    pub label: String,
    /// Common name such as `S5` or `AGL(1,F5)`.
    pub alias: String,
    pub flags: Option<ContainerFlags>,
}

fn class(degree: usize, k: u32, alias: &str) -> GaloisClass {
    GaloisClass { degree, label: format!("{degree}T{k}"), alias: alias.to_string(), flags: None }
}

impl GaloisClass {
    /// True iff the group is the full symmetric group.
    pub fn is_symmetric(&self) -> bool {
        self.alias == format!("S{}", self.degree)
    }
}

/// A classification with its inputs, as emitted on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub poly: IntPoly,
    pub class: GaloisClass,
    pub certificate: Certificate,
}

impl Verdict {
    /// JSON document; keys are sorted because `serde_json` maps are ordered.
    pub fn to_json(&self) -> Value {
        let flags = match self.class.flags {
            Some(f) => serde_json::to_value(f).expect("plain struct"),
            None => Value::Null,
        };
        let evidence: Vec<Value> = self.certificate.evidence.iter().map(|e| json!({"test": e.test, "outcome": e.outcome})).collect();
        json!({
            "schema": SCHEMA_VERSION,
            "degree": self.class.degree,
            "coeffs": self.poly,
            "label": self.class.label,
            "alias": self.class.alias,
            "level": self.certificate.level,
            "flags": flags,
            "evidence": evidence,
        })
    }
}

fn require_irreducible_separable(f: &IntPoly) -> Result<BigInt> {
    if f.degree() < 2 {
        return Err(Error::Precondition("degree must be at least 2".into()));
    }
    let disc = disc_resultant(f);
    if disc.is_zero() {
        return Err(Error::Inseparable);
    }
    if !is_irreducible(f) {
        return Err(Error::Reducible);
    }
    Ok(disc)
}

/// True iff the discriminant is a square, i.e. the group lies in `A_n`.
pub fn alternating_test(f: &IntPoly) -> Result<bool> {
    let disc = require_irreducible_separable(f)?;
    Ok(is_perfect_square(&disc))
}

/// Solvability of an irreducible quintic with the integer root of `θ` that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solvability {
    pub solvable: bool,
    pub witness: Option<BigInt>,
    /// `θ` itself, so callers can re-check the witness.
    pub theta: Poly<BigInt>,
}

/// Decides solvability from the integer roots of the sextic resolvent `θ`.
pub fn quintic_is_solvable(f: &IntPoly) -> Result<Solvability> {
    if f.degree() != 5 {
        return Err(Error::Precondition(format!("expected a quintic, got degree {}", f.degree())));
    }
    require_irreducible_separable(f)?;
    solvability_unchecked(f)
}

pub(crate) fn solvability_unchecked(f: &IntPoly) -> Result<Solvability> {
    let theta = sextic_resolvent_of(f)?;
    let roots = integer_roots_poly(&theta);
    let witness = roots.first().cloned();
    Ok(Solvability { solvable: witness.is_some(), witness, theta })
}

fn samples_outcome(samples: &[CycleTypeSample]) -> String {
    let mut seen: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for s in samples {
        seen.entry(s.degrees.clone()).or_insert(s.prime);
    }
    seen.iter()
        .map(|(d, p)| format!("{}@{}", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("+"), p))
        .collect::<Vec<_>>()
        .join(" ")
}

fn find_pattern<'a>(samples: &'a [CycleTypeSample], pattern: &[usize]) -> Option<&'a CycleTypeSample> {
    samples.iter().find(|s| s.degrees == pattern)
}

/// Classifies an irreducible separable quintic.
pub fn classify_quintic(f: &IntPoly) -> Result<(GaloisClass, Certificate)> {
    classify_quintic_with(f, DEFAULT_SAMPLES)
}

/// As [`classify_quintic`] with a configurable prime schedule.
pub fn classify_quintic_with(f: &IntPoly, samples: usize) -> Result<(GaloisClass, Certificate)> {
    if f.degree() != 5 {
        return Err(Error::Precondition(format!("expected a quintic, got degree {}", f.degree())));
    }
    let disc = require_irreducible_separable(f)?;
    let (cls, cert, _) = quintic_core(f, &disc, samples)?;
    Ok((cls, cert))
}

/// Quintic classification for a known irreducible `f` with discriminant `disc`; also returns the `θ` root.
pub(crate) fn quintic_core(f: &IntPoly, disc: &BigInt, nsamples: usize) -> Result<(GaloisClass, Certificate, Option<BigInt>)> {
    let mut cert = Certificate::new();
    let square = is_perfect_square(disc);
    cert.note("disc", disc);
    cert.note("disc_square", square);
    let sol = solvability_unchecked(f)?;
    let theta_disc = discriminant(&sol.theta);
    cert.note("theta_separable", !theta_disc.is_zero());
    match &sol.witness {
        Some(r) => cert.note("theta_integer_root", r),
        None => cert.note("theta_integer_root", "none"),
    }
    if theta_disc.is_zero() {
        cert.cap(Level::ResolventConditional);
    }
    let samples = cycle_types_with_disc(f, disc, nsamples);
    cert.note("schedule", format!("{} primes", samples.len()));
    cert.note("cycle_types", samples_outcome(&samples));
    let cls = match (sol.solvable, square) {
        (false, false) => {
            match find_pattern(&samples, &[1, 1, 1, 2]) {
                Some(s) => cert.note("transposition_witness", s.prime),
                None => cert.cap(Level::ResolventConditional),
            }
            class(5, 5, "S5")
        }
        (false, true) => {
            match find_pattern(&samples, &[1, 1, 3]) {
                Some(s) => cert.note("three_cycle_witness", s.prime),
                None => cert.cap(Level::ResolventConditional),
            }
            class(5, 4, "A5")
        }
        (true, false) => class(5, 3, "AGL(1,F5)"),
        (true, true) => match find_pattern(&samples, &[1, 2, 2]) {
            Some(s) => {
                cert.note("involution_witness", s.prime);
                class(5, 2, "D5")
            }
            None => {
                cert.cap(Level::Probabilistic);
                class(5, 1, "C5")
            }
        },
    };
    Ok((cls, cert, sol.witness))
}

/// Classifies an irreducible separable cubic or quartic.
pub fn classify_cubic_quartic(f: &IntPoly) -> Result<(GaloisClass, Certificate)> {
    if !(3..=4).contains(&f.degree()) {
        return Err(Error::Precondition(format!("expected degree 3 or 4, got {}", f.degree())));
    }
    let disc = require_irreducible_separable(f)?;
    cubic_quartic_core(f, &disc)
}

pub(crate) fn cubic_quartic_core(f: &IntPoly, disc: &BigInt) -> Result<(GaloisClass, Certificate)> {
    let mut cert = Certificate::new();
    let square = is_perfect_square(disc);
    cert.note("disc", disc);
    cert.note("disc_square", square);
    if f.degree() == 3 {
        return Ok((if square { class(3, 1, "C3") } else { class(3, 2, "S3") }, cert));
    }
    let [a, b, c, d] = f.coeffs() else { unreachable!() };
    // y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2)
    let cubic = Poly::new(vec![-(a * a * d - BigInt::from(4) * b * d + c * c), a * c - BigInt::from(4) * d, -b.clone(), BigInt::from(1)]);
    let roots = integer_roots_poly(&cubic);
    cert.note("resolvent_cubic", &cubic);
    cert.note("resolvent_cubic_roots", roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(","));
    let cls = match roots.len() {
        0 => {
            if square {
                class(4, 4, "A4")
            } else {
                class(4, 5, "S4")
            }
        }
        1 => {
            let r = &roots[0];
            // x1x2, x3x4 are roots of z^2 - r z + d; x1+x2, x3+x4 of z^2 + a z + (b - r)
            let d1 = r * r - BigInt::from(4) * d;
            let d2 = a * a - BigInt::from(4) * (b - r);
            let splits = |q: &BigInt| q.is_zero() || is_perfect_square(q) || is_perfect_square(&(q * disc));
            let c4 = splits(&d1) && splits(&d2);
            cert.note("aux_square_tests", format!("{d1},{d2} -> {}", if c4 { "split" } else { "no split" }));
            if c4 {
                class(4, 1, "C4")
            } else {
                class(4, 3, "D4")
            }
        }
        _ => class(4, 2, "V4"),
    };
    Ok((cls, cert))
}

/// Classifies an irreducible separable sextic via the f10, f15 and Ψ resolvents.
pub fn classify_sextic(f: &IntPoly) -> Result<(GaloisClass, Certificate)> {
    if f.degree() != 6 {
        return Err(Error::Precondition(format!("expected a sextic, got degree {}", f.degree())));
    }
    let disc = require_irreducible_separable(f)?;
    sextic_core(f, &disc)
}

pub(crate) fn sextic_core(f: &IntPoly, disc: &BigInt) -> Result<(GaloisClass, Certificate)> {
    let mut cert = Certificate::new();
    let square = is_perfect_square(disc);
    cert.note("disc", disc);
    cert.note("disc_square", square);
    let mut flags = ContainerFlags { in_a_n: square, ..Default::default() };
    let mut any_inseparable = false;
    for name in ["f10", "f15", "psi"] {
        let res = cache::load(name)?;
        let spec = res.of(f);
        let roots = integer_roots_poly(&spec);
        let sep = !discriminant(&spec).is_zero();
        let hit = !roots.is_empty();
        match name {
            "f10" => flags.in_g72 = hit,
            "f15" => flags.in_g48 = hit,
            _ => flags.in_h120 = hit,
        }
        let listed = if hit { roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",") } else { "none".into() };
        cert.note(&format!("{name}_integer_roots"), listed);
        cert.note(&format!("{name}_separable"), sep);
        if hit && !sep {
            any_inseparable = true;
        }
    }
    let samples = cycle_types_with_disc(f, disc, DEFAULT_SAMPLES);
    cert.note("cycle_types", samples_outcome(&samples));
    let mut cls = if !(flags.in_g72 || flags.in_g48 || flags.in_h120) {
        if square {
            class(6, 15, "A6")
        } else {
            class(6, 16, "S6")
        }
    } else {
        cert.cap(Level::ResolventConditional);
        if any_inseparable {
            cert.note("converse", "a root of an inseparable specialization does not prove containment");
        }
        if flags.in_g48 {
            class(6, 11, "G48")
        } else if flags.in_g72 {
            class(6, 13, "G72")
        } else {
            class(6, 14, "H120")
        }
    };
    cls.flags = Some(flags);
    Ok((cls, cert))
}

/// Dispatches on the degree (3 to 6).
pub fn classify(f: &IntPoly) -> Result<Verdict> {
    let (class, certificate) = match f.degree() {
        3 | 4 => classify_cubic_quartic(f)?,
        5 => classify_quintic(f)?,
        6 => classify_sextic(f)?,
        d => return Err(Error::Precondition(format!("degree {d} outside 3..=6"))),
    };
    Ok(Verdict { poly: f.clone(), class, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn alternating_examples() {
        assert!(alternating_test(&p(&[0, -3, 1])).unwrap());
        assert!(!alternating_test(&p(&[0, 0, -2])).unwrap());
        assert!(!alternating_test(&p(&[0, 1])).unwrap());
        assert_eq!(alternating_test(&p(&[0, -1, 0])), Err(Error::Reducible));
        assert_eq!(alternating_test(&p(&[0, -1, 0, 0])), Err(Error::Inseparable));
    }

    #[test]
    fn cubic_quartic_examples() {
        assert_eq!(classify_cubic_quartic(&p(&[0, -3, 1])).unwrap().0.alias, "C3");
        assert_eq!(classify_cubic_quartic(&p(&[0, 0, -2])).unwrap().0.alias, "S3");
        assert_eq!(classify_cubic_quartic(&p(&[0, 0, 0, 1])).unwrap().0.alias, "V4");
        assert_eq!(classify_cubic_quartic(&p(&[0, 0, -1, -1])).unwrap().0.alias, "S4");
        // X^4 + X^3 + X^2 + X + 1: cyclotomic, C4
        assert_eq!(classify_cubic_quartic(&p(&[1, 1, 1, 1])).unwrap().0.alias, "C4");
        // X^4 - 2: D4
        assert_eq!(classify_cubic_quartic(&p(&[0, 0, 0, -2])).unwrap().0.alias, "D4");
        // X^4 + 8X + 12: A4
        assert_eq!(classify_cubic_quartic(&p(&[0, 0, 8, 12])).unwrap().0.alias, "A4");
        assert_eq!(classify_cubic_quartic(&p(&[0, -1, 0, 0])).unwrap_err(), Error::Inseparable);
    }

    #[test]
    fn quintic_examples() {
        let (c, cert) = classify_quintic(&p(&[0, 10, 0, 20, 2])).unwrap();
        assert_eq!((c.alias.as_str(), c.label.as_str(), cert.level), ("AGL(1,F5)", "5T3", Level::Proved));
        let (c, cert) = classify_quintic(&p(&[0, 0, 0, -1, -1])).unwrap();
        assert_eq!((c.alias.as_str(), cert.level), ("S5", Level::Proved));
        let (c, cert) = classify_quintic(&p(&[1, -4, -3, 3, 1])).unwrap();
        assert_eq!((c.alias.as_str(), cert.level), ("C5", Level::Probabilistic));
        // X^5 - 5X + 12: D5
        let (c, cert) = classify_quintic(&p(&[0, 0, 0, -5, 12])).unwrap();
        assert_eq!((c.alias.as_str(), cert.level), ("D5", Level::Proved));
    }

    #[test]
    fn solvability_witness_is_a_root() {
        let s = quintic_is_solvable(&p(&[0, 10, 0, 20, 2])).unwrap();
        assert!(s.solvable);
        assert!(s.theta.eval(s.witness.as_ref().unwrap()).is_zero());
        assert!(!quintic_is_solvable(&p(&[0, 0, 0, -1, -1])).unwrap().solvable);
        assert_eq!(quintic_is_solvable(&p(&[0, 0, 0, 0, -1])).unwrap_err(), Error::Reducible);
    }

    #[test]
    fn sextic_examples() {
        let (c, cert) = classify_sextic(&p(&[0, 0, 0, 0, 1, 1])).unwrap();
        assert_eq!((c.alias.as_str(), cert.level), ("S6", Level::Proved));
        let (c, _) = classify_sextic(&p(&[0, 0, 1, 0, 0, 1])).unwrap();
        assert!(c.flags.unwrap().in_g72);
        assert_eq!(classify_sextic(&p(&[0, 0, 0, 0, 0, -1])).unwrap_err(), Error::Reducible);
    }

    #[test]
    fn verdict_json_has_sorted_keys() {
        let v = classify(&p(&[0, 10, 0, 20, 2])).unwrap();
        let s = serde_json::to_string(&v.to_json()).unwrap();
        assert!(s.starts_with("{\"alias\":\"AGL(1,F5)\",\"coeffs\":[\"0\",\"10\",\"0\",\"20\",\"2\"],\"degree\":5,\"evidence\""));
    }
}
