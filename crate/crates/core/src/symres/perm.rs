//! Permutations of `{0..n-1}`, written in 1-based cycle notation for display.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A permutation stored as its image list: `self.0[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Transposition of `i` and `j` (0-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Perm::identity(n);
        p.0.swap(i, j);
        p
    }

    /// Parses 1-based cycle notation such as `(126)(354)` or `(1 12)`; `()` and `(1)` are the identity.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self> {
        let mut p = Perm::identity(n);
        let s = s.trim();
        if s.is_empty() {
            return Ok(p);
        }
        for chunk in s.split('(').skip(1) {
            let body = chunk
                .strip_suffix(')')
                .or_else(|| chunk.trim_end().strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("unbalanced cycle in {s:?}")))?;
            let pts: Vec<usize> = if body.contains(' ') || body.contains(',') {
                body.split(|c| c == ' ' || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {t:?}"))))
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad point {c:?}"))))
                    .collect::<Result<_>>()?
            };
            if pts.iter().any(|&x| x == 0 || x > n) {
                return Err(Error::Parse(format!("point out of range in {s:?}")));
            }
            let cycle = Perm::from_cycle(n, &pts.iter().map(|x| x - 1).collect::<Vec<_>>())?;
            p = p.compose(&cycle);
        }
        Ok(p)
    }

    fn from_cycle(n: usize, pts: &[usize]) -> Result<Self> {
        let mut img: Vec<usize> = (0..n).collect();
        let distinct: BTreeSet<usize> = pts.iter().copied().collect();
        if distinct.len() != pts.len() {
            return Err(Error::Parse("repeated point in cycle".into()));
        }
        for (k, &a) in pts.iter().enumerate() {
            img[a] = pts[(k + 1) % pts.len()];
        }
        Ok(Perm(img))
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ rhs`: apply `rhs` first.
    pub fn compose(&self, rhs: &Perm) -> Perm {
        Perm(rhs.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.n()];
        let mut transpositions = 0;
        for i in 0..self.n() {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j];
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Cycle lengths, descending, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for i in 0..self.n() {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.n()];
        let mut any = false;
        let sep = if self.n() > 9 { " " } else { "" };
        for i in 0..self.n() {
            if seen[i] || self.0[i] == i {
                continue;
            }
            any = true;
            let mut pts = Vec::new();
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                pts.push((j + 1).to_string());
                j = self.0[j];
            }
            write!(f, "({})", pts.join(sep))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

/// All elements of the group generated by `gens`, sorted.
pub fn group_closure(n: usize, gens: &[Perm]) -> Vec<Perm> {
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    let id = Perm::identity(n);
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.compose(s);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.into_iter().collect()
}

/// All permutations of `{0..n-1}` in lexicographic order of image lists.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm(cur.clone()));
        // next permutation
        let mut i = n;
        while i > 1 && cur[i - 2] >= cur[i - 1] {
            i -= 1;
        }
        if i <= 1 {
            return out;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 2] {
            j -= 1;
        }
        cur.swap(i - 2, j);
        cur[i - 1..].reverse();
    }
}

/// Left coset representatives of `group` in `S_n`: the lexicographically first element of each coset.
pub fn left_coset_reps(n: usize, group: &[Perm]) -> Vec<Perm> {
    let mut covered: BTreeSet<Perm> = BTreeSet::new();
    let mut reps = Vec::new();
    for s in all_perms(n) {
        if covered.contains(&s) {
            continue;
        }
        for g in group {
            covered.insert(s.compose(g));
        }
        reps.push(s);
    }
    reps
}

/// True iff the given permutations lie in pairwise distinct left cosets of `group` and cover `S_n`.
pub fn is_left_transversal(n: usize, group: &[Perm], reps: &[Perm]) -> bool {
    let mut covered: BTreeSet<Perm> = BTreeSet::new();
    for s in reps {
        for g in group {
            if !covered.insert(s.compose(g)) {
                return false;
            }
        }
    }
    covered.len() == all_perms(n).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Perm::parse_cycles(6, "(126)(354)").unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(5), 0);
        assert_eq!(p.apply(2), 4);
        assert_eq!(p.to_string(), "(126)(354)");
        assert_eq!(Perm::parse_cycles(4, "(1)").unwrap().to_string(), "()");
        assert!(Perm::parse_cycles(3, "(14)").is_err());
    }

    #[test]
    fn group_orders() {
        let h120: Vec<Perm> = ["(126)(354)", "(12345)", "(2354)"].iter().map(|s| Perm::parse_cycles(6, s).unwrap()).collect();
        let g = group_closure(6, &h120);
        assert_eq!(g.len(), 120);
        // no transpositions and no 3-cycles
        assert!(g.iter().all(|p| p.cycle_type() != vec![2, 1, 1, 1, 1] && p.cycle_type() != vec![3, 1, 1, 1]));
        let reps: Vec<Perm> = ["()", "(12)", "(13)", "(14)", "(15)", "(16)"].iter().map(|s| Perm::parse_cycles(6, s).unwrap()).collect();
        assert!(is_left_transversal(6, &g, &reps));
    }

    #[test]
    fn cosets_of_a3() {
        let a3 = group_closure(3, &[Perm::parse_cycles(3, "(123)").unwrap()]);
        let reps = left_coset_reps(3, &a3);
        assert_eq!(reps.len(), 2);
        assert!(reps[0].is_identity());
        assert!(!reps[1].is_even());
    }

    #[test]
    fn compose_order() {
        let a = Perm::parse_cycles(3, "(12)").unwrap();
        let b = Perm::parse_cycles(3, "(23)").unwrap();
        // apply b then a: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
        assert_eq!(a.compose(&b).to_string(), "(123)");
        assert!(a.compose(&a.inverse()).is_identity());
    }
}
