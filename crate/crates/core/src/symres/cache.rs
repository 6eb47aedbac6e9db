//! Versioned text store for generated resolvents.
//!
//! ```text
//! <name> <n> <index> <invariant-hash>
//! # <sign convention>
//! <coeff> <exp a_1> ... <exp a_n> <exp y>
//! ```
//!
//! Terms are the whole resolvent `Π(y − r_σ)` in descending graded-lex order
//! over `a_1..a_n, y`, with decimal coefficients and LF line endings.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;

use super::resolvent::{orbit_resolvent, Convention, Resolvent, ResolventSpec};
use crate::error::{Error, Result};
use crate::mpoly::{mono, MPoly};

pub const VERSION: u32 = 1;

/// Directory holding the shipped cache files.
pub fn cache_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("resolvents")
}

pub fn file_name(name: &str) -> String {
    format!("{name}.v{VERSION}.txt")
}

fn convention_line(c: Convention, n: usize) -> String {
    match c {
        Convention::Alternating => format!("# convention alternating: a_k = e_k(roots), base X^{n} - a_1 X^{} + a_2 X^{} - ...", n - 1, n - 2),
        Convention::Literal => format!("# convention literal: base X^{n} + a_1 X^{} + ... + a_{n}", n - 1),
    }
}

/// Canonical text of a resolvent.
pub fn render(res: &Resolvent) -> String {
    let mut out = format!("{} {} {} {}\n", res.name, res.n, res.degree(), res.invariant_hash);
    out.push_str(&convention_line(res.convention, res.n));
    out.push('\n');
    let p = res.to_mpoly();
    for (exps, c) in p.graded_lex_terms() {
        write!(out, "{c}").unwrap();
        for e in exps {
            write!(out, " {e}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parses [`render`] output.
pub fn parse(text: &str) -> Result<Resolvent> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty resolvent file".into()))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    let [name, n, index, hash] = h[..] else {
        return Err(Error::Parse(format!("bad header {header:?}")));
    };
    let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad degree in {header:?}")))?;
    let index: usize = index.parse().map_err(|_| Error::Parse(format!("bad index in {header:?}")))?;
    let mut convention = None;
    let mut vars = Resolvent::avars(n);
    vars.push("y".into());
    let mut p = MPoly::zero(&vars);
    for line in lines {
        if let Some(comment) = line.strip_prefix('#') {
            if comment.trim_start().starts_with("convention alternating") {
                convention = Some(Convention::Alternating);
            } else if comment.trim_start().starts_with("convention literal") {
                convention = Some(Convention::Literal);
            }
            continue;
        }
        let mut it = line.split_whitespace();
        let c: BigInt = it.next().and_then(|t| t.parse().ok()).ok_or_else(|| Error::Parse(format!("bad term {line:?}")))?;
        let exps: Vec<u32> = it.map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {line:?}")))).collect::<Result<_>>()?;
        if exps.len() != n + 1 {
            return Err(Error::Parse(format!("expected {} exponents in {line:?}", n + 1)));
        }
        let m = mono::pack(&exps).ok_or_else(|| Error::Parse(format!("exponent too large in {line:?}")))?;
        p.add_term(m, c);
    }
    let convention = convention.ok_or_else(|| Error::Parse("missing convention line".into()))?;
    let res = Resolvent::from_mpoly(name, n, convention, hash, &p)?;
    if res.degree() != index {
        return Err(Error::Parse(format!("{name}: header index {index} but degree {}", res.degree())));
    }
    Ok(res)
}

fn embedded(name: &str) -> Option<&'static str> {
    Some(match name {
        "theta" => include_str!("../../resolvents/theta.v1.txt"),
        "f10" => include_str!("../../resolvents/f10.v1.txt"),
        "f15" => include_str!("../../resolvents/f15.v1.txt"),
        "psi" => include_str!("../../resolvents/psi.v1.txt"),
        "phi" => include_str!("../../resolvents/phi.v1.txt"),
        _ => return None,
    })
}

/// The shipped text for a cached resolvent.
pub fn stored_text(name: &str) -> Result<&'static str> {
    embedded(name).ok_or_else(|| Error::Precondition(format!("no cached resolvent {name:?}")))
}

/// The shipped resolvent, parsed once per process.
pub fn load(name: &str) -> Result<Arc<Resolvent>> {
    static SLOTS: [OnceLock<Arc<Resolvent>>; 5] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let i = ResolventSpec::CACHED
        .iter()
        .position(|&c| c == name)
        .ok_or_else(|| Error::Precondition(format!("no cached resolvent {name:?}")))?;
    if let Some(r) = SLOTS[i].get() {
        return Ok(r.clone());
    }
    let res = Arc::new(parse(stored_text(name)?)?);
    let expected = ResolventSpec::builtin(name)?.invariant_hash();
    if res.invariant_hash != expected {
        return Err(Error::Verification(format!("{name}: cache built from a different invariant")));
    }
    Ok(SLOTS[i].get_or_init(|| res).clone())
}

/// Outcome of regenerating a resolvent against the store.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regeneration {
    pub name: String,
    pub text: String,
    /// First differing line (1-based), if any.
    pub first_difference: Option<usize>,
}

impl Regeneration {
    pub fn matches(&self) -> bool {
        self.first_difference.is_none()
    }
}

/// Regenerates `name` and diffs it line by line against the shipped text.
pub fn regenerate(name: &str) -> Result<Regeneration> {
    let res = orbit_resolvent(&ResolventSpec::builtin(name)?)?;
    let text = render(&res);
    let stored = stored_text(name)?;
    let first_difference = if text == stored {
        None
    } else {
        let mut a = text.lines();
        let mut b = stored.lines();
        let mut k = 1;
        loop {
            match (a.next(), b.next()) {
                (Some(x), Some(y)) if x == y => k += 1,
                (None, None) => break Some(k),
                _ => break Some(k),
            }
        }
    };
    Ok(Regeneration { name: name.to_string(), text, first_difference })
}
