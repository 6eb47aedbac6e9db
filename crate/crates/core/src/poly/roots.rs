//! Integer roots by Sturm-sequence isolation to unit intervals.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor::squarefree_decomposition;
use super::{IntPoly, Poly};

type ZPoly = Poly<BigInt>;

/// Sturm chain with each remainder scaled by a positive factor only, so signs are preserved.
pub struct SturmChain {
    chain: Vec<ZPoly>,
}

fn positive_content_reduce(p: &ZPoly) -> ZPoly {
    let c = p.content();
    if c.is_zero() || c.is_one() {
        p.clone()
    } else {
        p.map(|a| a / &c)
    }
}

impl SturmChain {
    pub fn new(f: &ZPoly) -> Self {
        let mut chain = vec![positive_content_reduce(f)];
        let d = f.derivative();
        if !d.is_zero() {
            chain.push(positive_content_reduce(&d));
        }
        while chain.len() >= 2 {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            if b.deg() == 0 {
                break;
            }
            // prem = lc(b)^k a mod b with k = deg a - deg b + 1
            let k = a.deg() - b.deg() + 1;
            let mut r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            if b.lc().is_negative() && k % 2 == 1 {
                r = r.neg();
            }
            chain.push(positive_content_reduce(&r.neg()));
        }
        SturmChain { chain }
    }

    /// Sign changes of the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &BigInt) -> usize {
        let mut last = 0;
        let mut count = 0;
        for p in &self.chain {
            let s = match p.eval(x).sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in `(l, r]`.
    pub fn count(&self, l: &BigInt, r: &BigInt) -> usize {
        self.variations(l) - self.variations(r)
    }
}

/// Every real root lies in `[-B, B]`.
pub fn cauchy_bound(f: &ZPoly) -> BigInt {
    let lc = f.lc().abs();
    let m = f.coeffs()[..f.deg()].iter().map(|c| c.abs()).max().unwrap_or_default();
    BigInt::one() + m.div_ceil(&lc)
}

fn squarefree_integer_roots(g: &ZPoly, out: &mut Vec<BigInt>) {
    if g.deg() == 0 {
        return;
    }
    let sturm = SturmChain::new(g);
    let b = cauchy_bound(g);
    let mut stack = vec![(-&b - 1, b)];
    while let Some((l, r)) = stack.pop() {
        if sturm.count(&l, &r) == 0 {
            continue;
        }
        if &r - &l == BigInt::one() {
            if g.eval(&r).is_zero() {
                out.push(r);
            }
            continue;
        }
        let mid = (&l + &r).div_floor(&BigInt::from(2));
        stack.push((l, mid.clone()));
        stack.push((mid, r));
    }
}

/// Integer roots of a nonzero polynomial, ascending, repeated by multiplicity.
pub fn integer_roots_poly(f: &ZPoly) -> Vec<BigInt> {
    let mut out = Vec::new();
    for (g, mult) in squarefree_decomposition(f) {
        let mut roots = Vec::new();
        squarefree_integer_roots(&g, &mut roots);
        for r in roots {
            for _ in 0..mult {
                out.push(r.clone());
            }
        }
    }
    out.sort();
    out
}

/// Integer roots of a monic polynomial, ascending, with multiplicity.
pub fn integer_roots(f: &IntPoly) -> Vec<BigInt> {
    integer_roots_poly(&f.to_poly())
}
