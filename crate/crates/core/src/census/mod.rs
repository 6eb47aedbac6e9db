//! Exhaustive censuses of monic integer polynomials over coefficient boxes `[-H, H]^n`.

mod screen;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classify::{self, GaloisClass, DEFAULT_SAMPLES};
use crate::error::{Error, Result};
use crate::poly::{disc_quintic_explicit, disc_resultant, is_irreducible, is_perfect_square, IntPoly};
use screen::{pattern_of, proper_sums, Pattern, SmallField};

/// Default work budget in coefficient tuples.
pub const DEFAULT_BUDGET: u128 = 1 << 30;

/// Version of the report and checkpoint formats.
pub const CENSUS_FORMAT_VERSION: u32 = 1;

const CHECKPOINT_FORMAT: &str = "galenum-census-checkpoint";
const SAVE_INTERVAL: Duration = Duration::from_secs(2);
const MAX_HEIGHT: u64 = 1_000_000;
/// Largest residue table built per prime.
const TABLE_MAX: u128 = 1 << 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusMode {
    /// Classify every irreducible polynomial.
    Full,
    /// Quintics only: split irreducibles into solvable classes and the rest.
    SolvableOnly,
    /// Count reducible and irreducible polynomials only.
    ReducibleOnly,
}

impl fmt::Display for CensusMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CensusMode::Full => "full",
            CensusMode::SolvableOnly => "solvable_only",
            CensusMode::ReducibleOnly => "reducible_only",
        })
    }
}

impl FromStr for CensusMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(CensusMode::Full),
            "solvable_only" => Ok(CensusMode::SolvableOnly),
            "reducible_only" => Ok(CensusMode::ReducibleOnly),
            _ => Err(Error::Parse(format!("unknown census mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Number of shards the outer coordinates are split into.
    pub shards: usize,
    /// Largest admissible number of tuples.
    pub budget: u128,
    /// Sidecar file for resumable progress.
    pub checkpoint: Option<PathBuf>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { shards: 1, budget: DEFAULT_BUDGET, checkpoint: None }
    }
}

/// A solvable quintic with the integer root of its sextic resolvent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// `a_1..a_5` as decimal strings.
    pub coeffs: Vec<String>,
    pub root: String,
}

impl Witness {
    pub fn poly(&self) -> Result<IntPoly> {
        let c = self.coeffs.iter().map(|s| s.parse::<BigInt>().map_err(|e| Error::Parse(e.to_string()))).collect::<Result<Vec<_>>>()?;
        IntPoly::new(c)
    }

    pub fn root(&self) -> Result<BigInt> {
        self.root.parse().map_err(|e: num_bigint::ParseBigIntError| Error::Parse(e.to_string()))
    }
}

/// Counts accumulated over a contiguous range of work units.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub total: u64,
    pub reducible: u64,
    pub irreducible: u64,
    pub solvable: u64,
    pub per_class: BTreeMap<String, u64>,
    pub witnesses: Vec<Witness>,
}

impl Tally {
    fn bump(&mut self, alias: &str) {
        match self.per_class.get_mut(alias) {
            Some(c) => *c += 1,
            None => {
                self.per_class.insert(alias.to_string(), 1);
            }
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.total += other.total;
        self.reducible += other.reducible;
        self.irreducible += other.irreducible;
        self.solvable += other.solvable;
        for (k, v) in other.per_class {
            *self.per_class.entry(k).or_insert(0) += v;
        }
        self.witnesses.extend(other.witnesses);
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunInfo {
    pub shards: usize,
    pub units: u64,
    pub resumed_shards: usize,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CensusReport {
    pub degree: usize,
    pub height: u64,
    pub mode: CensusMode,
    pub total: u64,
    pub reducible: u64,
    pub irreducible: u64,
    /// Irreducible polynomials whose group is not `S_n`; full mode only.
    pub non_full: Option<u64>,
    /// Solvable quintics; degree 5 outside reducible-only mode.
    pub solvable: Option<u64>,
    pub per_class: BTreeMap<String, u64>,
    pub witnesses: Vec<Witness>,
    pub max_resolvent_root: Option<BigInt>,
    /// `max |y| / H^2` over the witnesses.
    pub max_resolvent_root_ratio: Option<f64>,
    pub run: RunInfo,
}

impl CensusReport {
    /// JSON report; the `run` object (timing, sharding) is left out when `with_run` is false.
    pub fn to_json(&self, with_run: bool) -> Value {
        let witnesses: Vec<Value> = self.witnesses.iter().map(|w| json!({"coeffs": w.coeffs, "root": w.root})).collect();
        let mut v = json!({
            "schema": CENSUS_FORMAT_VERSION,
            "degree": self.degree,
            "height": self.height,
            "mode": self.mode,
            "total": self.total,
            "reducible": self.reducible,
            "irreducible": self.irreducible,
            "non_full": self.non_full,
            "solvable": self.solvable,
            "per_class": self.per_class,
            "witnesses": witnesses,
            "max_resolvent_root": self.max_resolvent_root.as_ref().map(|r| r.to_string()),
            "max_resolvent_root_ratio": self.max_resolvent_root_ratio,
        });
        if with_run {
            v["run"] = serde_json::to_value(&self.run).expect("plain struct");
        }
        v
    }

    /// One `degree,height,class,count` row per count.
    pub fn to_csv(&self) -> String {
        let mut rows = vec![("total".to_string(), self.total), ("reducible".to_string(), self.reducible), ("irreducible".to_string(), self.irreducible)];
        if let Some(x) = self.non_full {
            rows.push(("non_full".into(), x));
        }
        if let Some(x) = self.solvable {
            rows.push(("solvable".into(), x));
        }
        rows.extend(self.per_class.iter().map(|(k, v)| (k.clone(), *v)));
        let mut out = String::from("degree,height,class,count\n");
        for (k, v) in rows {
            out.push_str(&format!("{},{},{},{}\n", self.degree, self.height, csv_field(&k), v));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Runs a census with default options.
pub fn run_census(n: usize, height: u64, mode: CensusMode) -> Result<CensusReport> {
    run_census_with(n, height, mode, &CensusOptions::default())
}

pub fn run_census_with(n: usize, height: u64, mode: CensusMode, opts: &CensusOptions) -> Result<CensusReport> {
    if !(3..=6).contains(&n) {
        return Err(Error::Precondition(format!("census degree must be in 3..=6, got {n}")));
    }
    if mode == CensusMode::SolvableOnly && n != 5 {
        return Err(Error::Precondition("solvable_only mode is for quintics".into()));
    }
    if opts.shards == 0 {
        return Err(Error::Precondition("shard count must be positive".into()));
    }
    if height > MAX_HEIGHT {
        return Err(Error::Precondition(format!("height above {MAX_HEIGHT}")));
    }
    let side = 2 * height as u128 + 1;
    let required = side.pow(n as u32);
    if required > opts.budget {
        return Err(Error::Budget { required, budget: opts.budget });
    }
    let start = Instant::now();
    let plan = Plan::new(n, height, mode);
    let units = (side * side) as u64;
    let k = opts.shards as u64;
    let bounds: Vec<(u64, u64)> = (0..k).map(|s| (s * units / k, (s + 1) * units / k)).collect();

    let header = CheckpointHeader { format: CHECKPOINT_FORMAT.into(), version: CENSUS_FORMAT_VERSION, degree: n, height, mode, shards: opts.shards };
    let initial = match &opts.checkpoint {
        Some(path) if path.exists() => load_checkpoint(path, &header)?,
        _ => bounds.iter().map(|&(lo, _)| ShardState { next_unit: lo, tally: Tally::default() }).collect(),
    };
    let resumed = initial.iter().zip(&bounds).filter(|(s, b)| s.next_unit > b.0).count();
    let sink = opts.checkpoint.as_ref().map(|path| Sink {
        path: path.clone(),
        state: Mutex::new((Checkpoint { header: header.clone(), state: initial.clone() }, Instant::now())),
    });

    let tallies: Vec<Result<Tally>> = (0..opts.shards)
        .into_par_iter()
        .map(|s| {
            let (_, hi) = bounds[s];
            let mut st = initial[s].clone();
            while st.next_unit < hi {
                plan.run_unit(st.next_unit, &mut st.tally)?;
                st.next_unit += 1;
                if let Some(sink) = &sink {
                    sink.progress(s, &st, st.next_unit == hi)?;
                }
            }
            Ok(st.tally)
        })
        .collect();
    let mut acc = Tally::default();
    for t in tallies {
        acc.absorb(t?);
    }
    Ok(finish(n, height, mode, acc, RunInfo { shards: opts.shards, units, resumed_shards: resumed, seconds: start.elapsed().as_secs_f64() }))
}

fn finish(n: usize, height: u64, mode: CensusMode, t: Tally, run: RunInfo) -> CensusReport {
    let full_name = format!("S{n}");
    let non_full = (mode == CensusMode::Full).then(|| t.irreducible - t.per_class.get(&full_name).copied().unwrap_or(0));
    let solvable = (n == 5 && mode != CensusMode::ReducibleOnly).then_some(t.solvable);
    let max_root = t.witnesses.iter().map(|w| w.root().expect("witness written by the census").abs()).max();
    let ratio = match (&max_root, height) {
        (Some(r), h) if h > 0 => Some(r.to_f64().unwrap_or(f64::INFINITY) / (h as f64 * h as f64)),
        _ => None,
    };
    CensusReport {
        degree: n,
        height,
        mode,
        total: t.total,
        reducible: t.reducible,
        irreducible: t.irreducible,
        non_full,
        solvable,
        per_class: t.per_class,
        witnesses: t.witnesses,
        max_resolvent_root: max_root,
        max_resolvent_root_ratio: ratio,
        run,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct CheckpointHeader {
    format: String,
    version: u32,
    degree: usize,
    height: u64,
    mode: CensusMode,
    shards: usize,
}

/// Progress of one shard: the next outer unit to process and the counts so far.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct ShardState {
    next_unit: u64,
    tally: Tally,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Checkpoint {
    #[serde(flatten)]
    header: CheckpointHeader,
    state: Vec<ShardState>,
}

fn load_checkpoint(path: &Path, header: &CheckpointHeader) -> Result<Vec<ShardState>> {
    let ck: Checkpoint = serde_json::from_str(&fs::read_to_string(path)?)?;
    if &ck.header != header {
        return Err(Error::Precondition(format!("checkpoint {} was written for different census parameters", path.display())));
    }
    Ok(ck.state)
}

struct Sink {
    path: PathBuf,
    state: Mutex<(Checkpoint, Instant)>,
}

impl Sink {
    fn progress(&self, shard: usize, st: &ShardState, done: bool) -> Result<()> {
        let mut guard = self.state.lock().expect("checkpoint lock");
        if !done && guard.1.elapsed() < SAVE_INTERVAL {
            return Ok(());
        }
        guard.0.state[shard] = st.clone();
        let tmp = self.path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string(&guard.0)?)?;
        fs::rename(&tmp, &self.path)?;
        guard.1 = Instant::now();
        Ok(())
    }
}

/// Precomputed per-census data shared read-only by all shards.
struct Plan {
    n: usize,
    height: i64,
    mode: CensusMode,
    fields: Vec<SmallField>,
    divisors: Vec<Vec<i64>>,
    prime_limit: usize,
}

enum Outcome {
    Reducible,
    Irreducible,
}

impl Plan {
    fn new(n: usize, height: u64, mode: CensusMode) -> Self {
        let prime_limit = if n == 6 { 48 } else { 24 };
        let tuples = (2 * height as u128 + 1).pow(n as u32);
        let fields = (2u64..)
            .filter(|&p| crate::poly::modp::is_prime_u64(p))
            .take(prime_limit)
            .map(|p| {
                let size = (p as u128).pow(n as u32);
                let f = SmallField::new(p);
                if size <= TABLE_MAX && size * 20 <= tuples {
                    f.with_table(n)
                } else {
                    f
                }
            })
            .collect();
        let h = height as usize;
        let mut divisors = vec![Vec::new(); h + 1];
        for d in 1..=h {
            for m in (d..=h).step_by(d) {
                divisors[m].push(d as i64);
            }
        }
        Plan { n, height: height as i64, mode, fields, divisors, prime_limit }
    }

    fn run_unit(&self, unit: u64, tally: &mut Tally) -> Result<()> {
        let side = 2 * self.height + 1;
        let mut c = vec![-self.height; self.n];
        c[0] = -self.height + (unit as i64) / side;
        c[1] = -self.height + (unit as i64) % side;
        loop {
            tally.total += 1;
            match self.tuple(&c, tally)? {
                Outcome::Reducible => tally.reducible += 1,
                Outcome::Irreducible => tally.irreducible += 1,
            }
            let mut i = self.n - 1;
            loop {
                if i < 2 {
                    return Ok(());
                }
                if c[i] < self.height {
                    c[i] += 1;
                    break;
                }
                c[i] = -self.height;
                i -= 1;
            }
        }
    }

    fn has_integer_root(&self, c: &[i64]) -> bool {
        let an = c[self.n - 1];
        if an == 0 {
            return true;
        }
        let eval = |x: i64| c.iter().fold(1i128, |acc, &a| acc * x as i128 + a as i128);
        self.divisors[an.unsigned_abs() as usize].iter().any(|&d| eval(d) == 0 || eval(-d) == 0)
    }

    /// Exhaustive search for a monic integer quadratic factor `X^2 + uX + v`, given no integer roots.
    fn has_quadratic_factor(&self, c: &[i64]) -> bool {
        let n = self.n;
        let an = c[n - 1];
        let b = self.height as i128 + 1;
        let f1 = c.iter().fold(1i128, |acc, &a| acc + a as i128);
        let fm1 = c.iter().fold(1i128, |acc, &a| -acc + a as i128);
        for &d in &self.divisors[an.unsigned_abs() as usize] {
            for v in [d as i128, -(d as i128)] {
                for u in -2 * b..=2 * b {
                    // the quadratic's values at 1 and -1 divide f(1), f(-1), which are nonzero
                    let (q1, qm1) = (1 + u + v, 1 - u + v);
                    if q1 == 0 || qm1 == 0 || f1 % q1 != 0 || fm1 % qm1 != 0 {
                        continue;
                    }
                    let mut r = [0i128; 7];
                    r[0] = 1;
                    for (k, &a) in c.iter().enumerate() {
                        r[k + 1] = a as i128;
                    }
                    for i in 0..=n - 2 {
                        let lead = r[i];
                        r[i + 1] -= u * lead;
                        r[i + 2] -= v * lead;
                    }
                    if r[n - 1] == 0 && r[n] == 0 {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn tuple(&self, c: &[i64], tally: &mut Tally) -> Result<Outcome> {
        let n = self.n;
        if self.has_integer_root(c) {
            return Ok(Outcome::Reducible);
        }
        let classify = self.mode != CensusMode::ReducibleOnly;
        let mut irreducible = n == 3;
        let mut mask: u32 = ((1 << n) - 1) & !1;
        let mut alt = AltScreen::new(n);
        let want_alt = classify && n > 3;
        for fld in self.fields.iter().take(self.prime_limit) {
            if irreducible && !(want_alt && !alt.found()) {
                break;
            }
            let Some(pat) = fld.lookup(c) else { continue };
            if !irreducible {
                if pat[n] == 1 {
                    irreducible = true;
                } else {
                    mask &= proper_sums(&pat, n);
                    irreducible = mask == 0;
                }
            }
            if want_alt {
                alt.observe(&pat);
            }
        }
        let mut poly = None;
        let only_quadratic = mask & !((1 << 2) | (1 << (n - 2))) == 0;
        if !irreducible && only_quadratic {
            if self.has_quadratic_factor(c) {
                return Ok(Outcome::Reducible);
            }
            irreducible = true;
        }
        if !irreducible {
            let f = IntPoly::from_i64s(c);
            if !is_irreducible(&f) {
                return Ok(Outcome::Reducible);
            }
            poly = Some(f);
        }
        if !classify {
            tally.bump("unclassified");
            return Ok(Outcome::Irreducible);
        }
        let poly = poly.unwrap_or_else(|| IntPoly::from_i64s(c));
        if n == 3 {
            let [a, b, cc] = [c[0] as i128, c[1] as i128, c[2] as i128];
            let disc = a * a * b * b - 4 * b * b * b - 4 * a * a * a * cc - 27 * cc * cc + 18 * a * b * cc;
            tally.bump(if is_square_i128(disc) { "C3" } else { "S3" });
            return Ok(Outcome::Irreducible);
        }
        if alt.found() {
            if self.mode == CensusMode::SolvableOnly {
                tally.bump("nonsolvable");
                return Ok(Outcome::Irreducible);
            }
            let square = if alt.odd {
                false
            } else if n == 5 {
                let [a, b, cc, d, e] = [c[0], c[1], c[2], c[3], c[4]].map(|x| x as i128);
                is_square_i128(disc_quintic_explicit(&a, &b, &cc, &d, &e))
            } else {
                is_perfect_square(&disc_resultant(&poly))
            };
            tally.bump(&if square { format!("A{n}") } else { format!("S{n}") });
            return Ok(Outcome::Irreducible);
        }
        let disc = disc_resultant(&poly);
        let cls: GaloisClass = match n {
            4 => classify::cubic_quartic_core(&poly, &disc)?.0,
            5 => {
                let (cls, _, witness) = classify::quintic_core(&poly, &disc, DEFAULT_SAMPLES)?;
                if let Some(r) = witness {
                    tally.solvable += 1;
                    tally.witnesses.push(Witness { coeffs: c.iter().map(|x| x.to_string()).collect(), root: r.to_string() });
                } else if self.mode == CensusMode::SolvableOnly {
                    tally.bump("nonsolvable");
                    return Ok(Outcome::Irreducible);
                }
                cls
            }
            _ => classify::sextic_core(&poly, &disc)?.0,
        };
        tally.bump(&cls.alias);
        Ok(Outcome::Irreducible)
    }
}

/// Cycle types that force a transitive group of degree `n` to contain `A_n`.
struct AltScreen {
    n: usize,
    found: bool,
    five_cycle: bool,
    partner: bool,
    /// an odd permutation was seen, so the group is not inside `A_n`
    odd: bool,
}

impl AltScreen {
    fn new(n: usize) -> Self {
        AltScreen { n, found: false, five_cycle: false, partner: false, odd: false }
    }

    fn found(&self) -> bool {
        self.found
    }

    fn observe(&mut self, pat: &Pattern) {
        let cycles: usize = pat.iter().map(|&c| c as usize).sum();
        self.odd |= (self.n - cycles) % 2 == 1;
        if self.found {
            return;
        }
        let is = |d: &[usize]| *pat == pattern_of(d);
        self.found = match self.n {
            // a 3-cycle in a transitive quartic group
            4 => is(&[1, 3]),
            // any cycle type outside AGL(1,F5)
            5 => is(&[1, 1, 1, 2]) || is(&[1, 1, 3]) || is(&[2, 3]),
            // a 5-cycle rules out G72 and G48; these rule out the degree-6 actions of S5 and A5
            6 => {
                self.five_cycle |= is(&[1, 5]);
                self.partner |= is(&[1, 1, 1, 3]) || is(&[1, 1, 1, 1, 2]) || is(&[1, 2, 3]);
                self.five_cycle && self.partner
            }
            _ => false,
        };
    }
}

fn is_square_i128(x: i128) -> bool {
    if x < 0 {
        return false;
    }
    let x = x as u128;
    let mut r = (x as f64).sqrt() as u128;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r * r == x
}

/// Irreducible members of the family `X^5 + 5sX^3 + 5s^2X + t` inside the box of height `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeMoivreCensus {
    pub height: u64,
    pub count: u64,
    /// `(s, t)` pairs, ascending.
    pub pairs: Vec<(i64, i64)>,
}

impl DeMoivreCensus {
    pub fn poly(s: i64, t: i64) -> IntPoly {
        IntPoly::from_i64s(&[0, 5 * s, 0, 5 * s * s, t])
    }

    pub fn to_json(&self) -> Value {
        json!({
            "height": self.height,
            "count": self.count,
            "pairs": self.pairs.iter().map(|(s, t)| json!([s.to_string(), t.to_string()])).collect::<Vec<_>>(),
        })
    }
}

pub fn demoivre_census(height: u64) -> DeMoivreCensus {
    let h = height as i64;
    let mut seen = BTreeSet::new();
    let mut pairs = Vec::new();
    let mut s = 0i64;
    while 5 * s <= h && 5 * s * s <= h {
        s += 1;
    }
    let smax = s - 1;
    for s in -smax..=smax {
        for t in -h..=h {
            let key = [0, 5 * s, 0, 5 * s * s, t];
            if !seen.insert(key) {
                continue;
            }
            if is_irreducible(&IntPoly::from_i64s(&key)) {
                pairs.push((s, t));
            }
        }
    }
    DeMoivreCensus { height, count: pairs.len() as u64, pairs }
}

/// Least-squares line through `(log H, log count)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExponentFit {
    pub series: Vec<(u64, u64)>,
    pub slope: f64,
    pub intercept: f64,
    pub residuals: Vec<f64>,
}

pub fn fit_exponent(series: &[(u64, u64)]) -> Result<ExponentFit> {
    if series.len() < 3 {
        return Err(Error::Precondition("exponent fit needs at least 3 points".into()));
    }
    if series.iter().any(|&(h, c)| h == 0 || c == 0) {
        return Err(Error::Precondition("exponent fit needs positive heights and counts".into()));
    }
    let distinct: BTreeSet<u64> = series.iter().map(|p| p.0).collect();
    if distinct.len() < 3 {
        return Err(Error::Precondition("exponent fit needs at least 3 distinct heights".into()));
    }
    let pts: Vec<(f64, f64)> = series.iter().map(|&(h, c)| ((h as f64).ln(), (c as f64).ln())).collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residuals = pts.iter().map(|p| p.1 - (intercept + slope * p.0)).collect();
    Ok(ExponentFit { series: series.to_vec(), slope, intercept, residuals })
}
