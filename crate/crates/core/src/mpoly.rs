//! Sparse multivariate polynomials with packed exponent vectors.
//!
//! A monomial in at most eight variables is packed into a `u64`, one byte per
//! exponent, with the first variable in the most significant byte. Integer
//! order on the packed words is then lexicographic order on exponent vectors.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

pub const MAX_VARS: usize = 8;
pub const MAX_EXP: u32 = 255;

/// Packed exponent vector helpers.
pub mod mono {
    use super::MAX_VARS;

    #[inline]
    pub fn shift(i: usize) -> u32 {
        8 * (MAX_VARS - 1 - i) as u32
    }

    #[inline]
    pub fn exp(m: u64, i: usize) -> u32 {
        ((m >> shift(i)) & 0xff) as u32
    }

    #[inline]
    pub fn unit(i: usize) -> u64 {
        1u64 << shift(i)
    }

    pub fn pack(exps: &[u32]) -> Option<u64> {
        if exps.len() > MAX_VARS {
            return None;
        }
        let mut m = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            if e > 255 {
                return None;
            }
            m |= (e as u64) << shift(i);
        }
        Some(m)
    }

    pub fn unpack(m: u64, n: usize) -> Vec<u32> {
        (0..n).map(|i| exp(m, i)).collect()
    }

    pub fn degree(m: u64) -> u32 {
        m.to_be_bytes().iter().map(|&b| b as u32).sum()
    }

    /// Product of monomials, `None` if some exponent exceeds 255.
    #[inline]
    pub fn mul(a: u64, b: u64) -> Option<u64> {
        let s = a.wrapping_add(b);
        // a carry out of any byte shows up as a flipped low bit of the next byte
        let carries = (a ^ b ^ s) & 0x0101_0101_0101_0100;
        if carries != 0 || s < a {
            None
        } else {
            Some(s)
        }
    }

    /// `a / b` when `b` divides `a`.
    pub fn div(a: u64, b: u64) -> Option<u64> {
        let mut out = 0u64;
        for i in 0..MAX_VARS {
            let (x, y) = (exp(a, i), exp(b, i));
            if y > x {
                return None;
            }
            out |= ((x - y) as u64) << shift(i);
        }
        Some(out)
    }

    /// True iff exponents are non-increasing over the first `n` variables.
    pub fn is_sorted(m: u64, n: usize) -> bool {
        (1..n).all(|i| exp(m, i - 1) >= exp(m, i))
    }

    /// Exponents sorted into non-increasing order.
    pub fn sorted(m: u64, n: usize) -> u64 {
        let mut e: Vec<u32> = unpack(m, n);
        e.sort_unstable_by(|a, b| b.cmp(a));
        pack(&e).expect("same exponents")
    }

    /// Applies `x_i -> x_perm[i]`.
    pub fn permute(m: u64, perm: &[usize]) -> u64 {
        let mut out = 0u64;
        for (i, &j) in perm.iter().enumerate() {
            out |= (exp(m, i) as u64) << shift(j);
        }
        out
    }
}

/// Hasher for packed monomials: a multiply followed by a fold of the high half,
/// so keys whose low bytes are all zero still spread over the table.
#[derive(Default, Clone, Copy)]
pub struct MonoHasher(u64);

impl std::hash::Hasher for MonoHasher {
    fn finish(&self) -> u64 {
        let h = self.0.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        h ^ (h >> 29) ^ (h >> 47)
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = self.0.rotate_left(8) ^ b as u64;
        }
    }

    fn write_u64(&mut self, v: u64) {
        self.0 = self.0.rotate_left(17) ^ v;
    }
}

/// Hash map keyed by packed monomials.
pub type MonoMap<V> = std::collections::HashMap<u64, V, std::hash::BuildHasherDefault<MonoHasher>>;

/// Sparse polynomial in named variables over a scalar ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly<T> {
    vars: Vec<String>,
    terms: BTreeMap<u64, T>,
}

impl<T: Scalar> MPoly<T> {
    pub fn zero(vars: &[impl AsRef<str>]) -> Self {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        assert!(vars.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        MPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[impl AsRef<str>], c: T) -> Self {
        let mut p = MPoly::zero(vars);
        p.add_term(0, c);
        p
    }

    pub fn var(vars: &[impl AsRef<str>], i: usize) -> Self {
        let mut p = MPoly::zero(vars);
        assert!(i < p.nvars(), "variable index out of range");
        p.add_term(mono::unit(i), T::one());
        p
    }

    /// Variables named `prefix1..prefixn`.
    pub fn indexed_vars(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn from_terms(vars: &[impl AsRef<str>], terms: impl IntoIterator<Item = (Vec<u32>, T)>) -> Result<Self> {
        let mut p = MPoly::zero(vars);
        for (e, c) in terms {
            if e.len() != p.nvars() {
                return Err(Error::Precondition("exponent vector length differs from variable count".into()));
            }
            let m = mono::pack(&e).ok_or_else(|| Error::Precondition(format!("exponent above {MAX_EXP}")))?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub(crate) fn from_packed(vars: Vec<String>, terms: BTreeMap<u64, T>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        MPoly { vars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn packed_terms(&self) -> &BTreeMap<u64, T> {
        &self.terms
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<u32>, &T)> + '_ {
        let n = self.nvars();
        self.terms.iter().map(move |(&m, c)| (mono::unpack(m, n), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> T {
        mono::pack(exps).and_then(|m| self.terms.get(&m).cloned()).unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, m: u64, c: T) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, rhs: &Self) {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(&m, c)| (m, c.neg())).collect() }
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = MPoly::zero(&self.vars);
        for (&m, c) in &self.terms {
            out.add_term(m, c.mul(k));
        }
        out
    }

    /// Product; panics if an exponent exceeds 255.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_vars(rhs);
        let mut out = MPoly::zero(&self.vars);
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                let m = mono::mul(a, b).expect("exponent overflow");
                out.add_term(m, x.mul(y));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = MPoly::constant(&self.vars, T::one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&m| mono::degree(m)).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|&m| mono::exp(m, i)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|&m| mono::degree(m));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn eval(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.nvars(), "point dimension");
        let mut powers: Vec<Vec<T>> = Vec::with_capacity(point.len());
        for (i, x) in point.iter().enumerate() {
            let d = self.degree_in(i).unwrap_or(0) as usize;
            let mut row = Vec::with_capacity(d + 1);
            row.push(T::one());
            for k in 1..=d {
                let next = row[k - 1].mul(x);
                row.push(next);
            }
            powers.push(row);
        }
        let mut acc = T::zero();
        for (&m, c) in &self.terms {
            let mut t = c.clone();
            for (i, row) in powers.iter().enumerate() {
                let e = mono::exp(m, i) as usize;
                if e > 0 {
                    t = t.mul(&row[e]);
                }
            }
            acc.add_assign(&t);
        }
        acc
    }

    /// Replaces variable `i` by `images[i]`; all images share one variable list.
    pub fn substitute(&self, images: &[MPoly<T>]) -> MPoly<T> {
        assert_eq!(images.len(), self.nvars(), "one image per variable");
        let target = images.first().map(|p| p.vars.clone()).unwrap_or_default();
        let mut cache: Vec<Vec<MPoly<T>>> = images.iter().map(|p| vec![MPoly::constant(&target, T::one()), p.clone()]).collect();
        let mut out = MPoly::zero(&target);
        for (&m, c) in &self.terms {
            let mut t = MPoly::constant(&target, c.clone());
            for i in 0..self.nvars() {
                let e = mono::exp(m, i) as usize;
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e {
                    let next = cache[i].last().unwrap().mul(&images[i]);
                    cache[i].push(next);
                }
                t = t.mul(&cache[i][e]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Applies `x_i -> x_perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars(), "permutation size");
        let terms = self.terms.iter().map(|(&m, c)| (mono::permute(m, perm), c.clone())).collect();
        MPoly { vars: self.vars.clone(), terms }
    }

    /// Sets variable `i` to `value`, keeping the variable list.
    pub fn specialize(&self, i: usize, value: &T) -> Self {
        let mut out = MPoly::zero(&self.vars);
        let mut pw: Vec<T> = vec![T::one()];
        for (&m, c) in &self.terms {
            let e = mono::exp(m, i) as usize;
            while pw.len() <= e {
                let next = pw.last().unwrap().mul(value);
                pw.push(next);
            }
            let rest = m & !(0xffu64 << mono::shift(i));
            out.add_term(rest, c.mul(&pw[e]));
        }
        out
    }

    /// Same terms under new variable names.
    pub fn rename(&self, vars: &[impl AsRef<str>]) -> Self {
        assert_eq!(vars.len(), self.nvars(), "variable count");
        MPoly { vars: vars.iter().map(|v| v.as_ref().to_string()).collect(), terms: self.terms.clone() }
    }

    /// Keeps only the listed variables (in that order); the others must not occur.
    pub fn restrict_vars(&self, keep: &[usize]) -> Result<Self> {
        let names: Vec<&str> = keep.iter().map(|&i| self.vars[i].as_str()).collect();
        let mut out = MPoly::zero(&names);
        for (&m, c) in &self.terms {
            let e = mono::unpack(m, self.nvars());
            if e.iter().enumerate().any(|(i, &x)| x > 0 && !keep.contains(&i)) {
                return Err(Error::Precondition(format!("variable {} still occurs", self.vars[e.iter().position(|&x| x > 0).unwrap()])));
            }
            let sub: Vec<u32> = keep.iter().map(|&i| e[i]).collect();
            out.add_term(mono::pack(&sub).unwrap(), c.clone());
        }
        Ok(out)
    }

    /// Coefficients with respect to variable `i`, lowest power first.
    pub fn coeffs_in(&self, i: usize) -> Vec<MPoly<T>> {
        let d = self.degree_in(i).unwrap_or(0) as usize;
        let mut out: Vec<MPoly<T>> = (0..=d).map(|_| MPoly::zero(&self.vars)).collect();
        if self.is_zero() {
            return Vec::new();
        }
        for (&m, c) in &self.terms {
            let e = mono::exp(m, i) as usize;
            out[e].add_term(m & !(0xffu64 << mono::shift(i)), c.clone());
        }
        out
    }

    /// The polynomial as univariate in variable `i`; fails if another variable occurs.
    pub fn to_univariate(&self, i: usize) -> Result<Poly<T>> {
        let mut c = Vec::new();
        for (k, p) in self.coeffs_in(i).into_iter().enumerate() {
            if p.terms.keys().any(|&m| m != 0) {
                return Err(Error::Precondition(format!("coefficient of {}^{k} is not constant", self.vars[i])));
            }
            c.push(p.terms.get(&0).cloned().unwrap_or_else(T::zero));
        }
        Ok(Poly::new(c))
    }

    /// Univariate polynomial in variable `i` of the given list.
    pub fn from_univariate(vars: &[impl AsRef<str>], i: usize, p: &Poly<T>) -> Self {
        let mut out = MPoly::zero(vars);
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(mono::unit(i) * k as u64, c.clone());
        }
        out
    }

    /// Terms in descending graded-lexicographic order.
    pub fn graded_lex_terms(&self) -> Vec<(Vec<u32>, &T)> {
        let mut v: Vec<(u32, u64, &T)> = self.terms.iter().map(|(&m, c)| (mono::degree(m), m, c)).collect();
        v.sort_by(|a, b| (b.0, b.1).cmp(&(a.0, a.1)));
        v.into_iter().map(|(_, m, c)| (mono::unpack(m, self.nvars()), c)).collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> MPoly<U> {
        let mut out = MPoly::zero(&self.vars);
        for (&m, c) in &self.terms {
            out.add_term(m, f(c));
        }
        out
    }

    /// Parses an expression over integers with `+ - * ^` and parentheses.
    ///
    /// Variables are taken from `vars` when given (unknown names are an error),
    /// otherwise collected from the input in natural order (`x2` before `x10`).
    pub fn parse(src: &str, vars: Option<&[String]>) -> Result<Self> {
        let tokens = tokenize(src)?;
        let names = match vars {
            Some(v) => v.to_vec(),
            None => {
                let mut v: Vec<String> = Vec::new();
                for t in &tokens {
                    if let Token::Ident(s) = t {
                        if !v.contains(s) {
                            v.push(s.clone());
                        }
                    }
                }
                v.sort_by(|a, b| natural_key(a).cmp(&natural_key(b)));
                v
            }
        };
        if names.len() > MAX_VARS {
            return Err(Error::Parse(format!("at most {MAX_VARS} variables supported")));
        }
        let mut parser = Parser { tokens, pos: 0, vars: names };
        let p = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Parse(format!("unexpected token {:?}", parser.tokens[parser.pos])));
        }
        Ok(p)
    }
}

fn natural_key(s: &str) -> (String, u64) {
    let split = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (head, tail) = s.split_at(split);
    (head.to_string(), tail.parse().unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token::Num(text.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    vars: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<T: Scalar>(&mut self) -> Result<MPoly<T>> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<T: Scalar>(&mut self) -> Result<MPoly<T>> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor<T: Scalar>(&mut self) -> Result<MPoly<T>> {
        if self.eat('-') {
            return Ok(self.factor::<T>()?.neg());
        }
        if self.eat('+') {
            return self.factor();
        }
        let base = self.atom()?;
        if self.eat('^') {
            let e = match self.tokens.get(self.pos) {
                Some(Token::Num(n)) => u32::try_from(n).ok().filter(|&e| e <= MAX_EXP),
                _ => None,
            }
            .ok_or_else(|| Error::Parse("exponent must be an integer in [0, 255]".into()))?;
            self.pos += 1;
            let total = base.total_degree().unwrap_or(0) as u64 * e as u64;
            if total > MAX_EXP as u64 && base.num_terms() > 0 {
                return Err(Error::Parse("exponent too large".into()));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom<T: Scalar>(&mut self) -> Result<MPoly<T>> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                let c = T::from_bigint(&n).ok_or_else(|| Error::Parse(format!("constant {n} out of range")))?;
                Ok(MPoly::constant(&self.vars, c))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
                Ok(MPoly::var(&self.vars, i))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing closing parenthesis".into()));
                }
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected {other:?}"))),
        }
    }
}

impl<T: Scalar> fmt::Display for MPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.graded_lex_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { self.vars[i].clone() } else { format!("{}^{x}", self.vars[i]) })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == T::one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for MPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({self})", self.vars.join(","))
    }
}
