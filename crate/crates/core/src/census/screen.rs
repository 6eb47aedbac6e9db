//! Factor-degree patterns of monic polynomials of degree at most 6 modulo small primes,
//! on fixed-size arrays.

const CAP: usize = 7;

/// Polynomial over `F_p`, low degree first; `len` is one more than the degree, 0 for zero.
#[derive(Clone, Copy, Debug)]
struct Small {
    c: [u64; CAP],
    len: usize,
}

impl Small {
    fn zero() -> Self {
        Small { c: [0; CAP], len: 0 }
    }

    fn trim(mut self) -> Self {
        while self.len > 0 && self.c[self.len - 1] == 0 {
            self.len -= 1;
        }
        self
    }

    fn deg(&self) -> usize {
        self.len - 1
    }
}

/// Number of irreducible factors of each degree: `counts[d]` for `d` in `1..=6`.
pub type Pattern = [u8; CAP];

pub struct SmallField {
    pub p: u64,
    inv: Vec<u64>,
    /// Optional lookup from the residue tuple to `1 + index` into `patterns`, 0 when not squarefree.
    table: Vec<u8>,
    patterns: Vec<Pattern>,
}

impl SmallField {
    pub fn new(p: u64) -> Self {
        assert!(p < (1 << 12));
        let mut inv = vec![0u64; p as usize];
        for a in 1..p {
            let mut e = p - 2;
            let (mut b, mut acc) = (a, 1u64);
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * b % p;
                }
                b = b * b % p;
                e >>= 1;
            }
            inv[a as usize] = acc;
        }
        SmallField { p, inv, table: Vec::new(), patterns: Vec::new() }
    }

    /// Tabulates the patterns of all monic degree-`n` polynomials mod `p`.
    pub fn with_table(mut self, n: usize) -> Self {
        let p = self.p as usize;
        let size = p.pow(n as u32);
        let mut table = vec![0u8; size];
        let mut patterns: Vec<Pattern> = Vec::new();
        let mut c = vec![0i64; n];
        for (idx, slot) in table.iter_mut().enumerate() {
            let mut r = idx;
            for x in c.iter_mut() {
                *x = (r % p) as i64;
                r /= p;
            }
            if let Some(pat) = self.pattern(&c) {
                let k = match patterns.iter().position(|q| *q == pat) {
                    Some(k) => k,
                    None => {
                        patterns.push(pat);
                        patterns.len() - 1
                    }
                };
                *slot = (k + 1) as u8;
            }
        }
        self.table = table;
        self.patterns = patterns;
        self
    }

    /// As [`SmallField::pattern`], through the table when one was built.
    pub fn lookup(&self, coeffs: &[i64]) -> Option<Pattern> {
        if self.table.is_empty() {
            return self.pattern(coeffs);
        }
        let p = self.p as i64;
        let idx = coeffs.iter().rev().fold(0usize, |acc, &a| acc * p as usize + a.rem_euclid(p) as usize);
        match self.table[idx] {
            0 => None,
            k => Some(self.patterns[k as usize - 1]),
        }
    }

    fn monic(&self, mut a: Small) -> Small {
        let l = self.inv[a.c[a.len - 1] as usize];
        for i in 0..a.len {
            a.c[i] = a.c[i] * l % self.p;
        }
        a
    }

    /// `a mod g` for monic `g`, with `a` given as a wide buffer of unreduced entries below `2^40`.
    fn reduce(&self, buf: &mut [u64], mut top: usize, g: &Small) -> Small {
        let p = self.p;
        let dg = g.deg();
        while top > dg {
            let lead = buf[top - 1] % p;
            if lead != 0 {
                let shift = top - 1 - dg;
                for i in 0..dg {
                    buf[shift + i] += (p - lead) * g.c[i];
                }
            }
            top -= 1;
        }
        let mut r = Small::zero();
        for i in 0..top.min(dg) {
            r.c[i] = buf[i] % p;
        }
        r.len = top.min(dg);
        r.trim()
    }

    fn mulmod(&self, a: &Small, b: &Small, g: &Small) -> Small {
        if a.len == 0 || b.len == 0 {
            return Small::zero();
        }
        let mut buf = [0u64; 2 * CAP];
        for i in 0..a.len {
            for j in 0..b.len {
                buf[i + j] += a.c[i] * b.c[j];
            }
        }
        self.reduce(&mut buf, a.len + b.len - 1, g)
    }

    fn rem(&self, a: &Small, g: &Small) -> Small {
        let mut buf = [0u64; 2 * CAP];
        buf[..a.len].copy_from_slice(&a.c[..a.len]);
        self.reduce(&mut buf, a.len, g)
    }

    fn gcd(&self, a: &Small, b: &Small) -> Small {
        let (mut a, mut b) = (*a, *b);
        while b.len > 0 {
            let bm = self.monic(b);
            let r = self.rem(&a, &bm);
            a = bm;
            b = r;
        }
        if a.len > 0 {
            self.monic(a)
        } else {
            a
        }
    }

    /// Exact quotient `a / g` for monic `g`.
    fn div(&self, a: &Small, g: &Small) -> Small {
        let p = self.p;
        let mut r = *a;
        let dg = g.deg();
        let mut q = Small::zero();
        q.len = a.len - dg;
        for k in (0..q.len).rev() {
            let lead = r.c[k + dg];
            q.c[k] = lead;
            if lead != 0 {
                for i in 0..=dg {
                    r.c[k + i] = (r.c[k + i] + (p - lead) * g.c[i]) % p;
                }
            }
        }
        q
    }

    /// Reduces a monic integer polynomial given by its non-leading coefficients `a_1..a_n`.
    fn load(&self, coeffs: &[i64]) -> Small {
        let n = coeffs.len();
        let mut f = Small::zero();
        f.len = n + 1;
        f.c[n] = 1;
        for (k, &a) in coeffs.iter().enumerate() {
            f.c[n - 1 - k] = a.rem_euclid(self.p as i64) as u64;
        }
        f
    }

    /// Factor-degree counts of `X^n + a_1 X^(n-1) + ... + a_n` mod `p`, or `None` when it is not squarefree.
    pub fn pattern(&self, coeffs: &[i64]) -> Option<Pattern> {
        let p = self.p;
        let f = self.load(coeffs);
        let mut df = Small::zero();
        df.len = f.len - 1;
        for i in 1..f.len {
            df.c[i - 1] = f.c[i] * (i as u64 % p) % p;
        }
        let df = df.trim();
        if df.len == 0 || self.gcd(&f, &df).len != 1 {
            return None;
        }
        let mut counts = [0u8; CAP];
        let mut g = f;
        let mut x = Small::zero();
        x.c[1] = 1;
        x.len = 2;
        let mut h = self.rem(&x, &g);
        let mut d = 0;
        while g.len > 1 {
            d += 1;
            if 2 * d > g.deg() {
                counts[g.deg()] += 1;
                break;
            }
            h = self.powmod(&h, p, &g);
            let mut hx = h;
            hx.len = hx.len.max(2);
            hx.c[1] = (hx.c[1] + p - 1) % p;
            let t = self.gcd(&g, &hx.trim());
            if t.len > 1 {
                counts[d] += (t.deg() / d) as u8;
                g = self.div(&g, &t);
                h = self.rem(&h, &g);
            }
        }
        Some(counts)
    }

    fn powmod(&self, b: &Small, mut e: u64, g: &Small) -> Small {
        let mut one = Small::zero();
        one.c[0] = 1;
        one.len = 1;
        let mut acc = self.rem(&one, g);
        let mut b = *b;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulmod(&acc, &b, g);
            }
            e >>= 1;
            if e > 0 {
                b = self.mulmod(&b, &b, g);
            }
        }
        acc
    }
}

/// Bitmask of proper factor degrees compatible with a pattern (bit `k` for a factor of degree `k`).
pub fn proper_sums(pattern: &Pattern, n: usize) -> u32 {
    let mut reach: u32 = 1;
    for (d, &c) in pattern.iter().enumerate().skip(1) {
        for _ in 0..c {
            reach |= reach << d;
        }
    }
    reach & !1 & !(1 << n)
}

/// Pattern with the given factor degrees.
pub fn pattern_of(degrees: &[usize]) -> Pattern {
    let mut p = [0u8; CAP];
    for &d in degrees {
        p[d] += 1;
    }
    p
}
