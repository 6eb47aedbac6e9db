//! Newton polygons, the vertex-gcd absolute irreducibility criterion, and integer point
//! counts on curves and surfaces in lopsided boxes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::factor::proper_degree_sums;
use crate::poly::{factor_poly, integer_roots_poly};
use crate::ZMPoly;

/// Default number of evaluations (or specializations) a point count may use.
pub const POINT_BUDGET: u128 = 100_000_000;

/// Number of specialization points tried when proving rational irreducibility.
const SPECIALIZATIONS: i64 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolygon {
    /// Exponent pairs with nonzero coefficient.
    pub support: BTreeSet<(u32, u32)>,
    /// Hull vertices counter-clockwise from the lexicographically smallest; no collinear points.
    pub vertices: Vec<(u32, u32)>,
}

fn cross(o: (u32, u32), a: (u32, u32), b: (u32, u32)) -> i64 {
    let (ox, oy) = (o.0 as i64, o.1 as i64);
    (a.0 as i64 - ox) * (b.1 as i64 - oy) - (a.1 as i64 - oy) * (b.0 as i64 - ox)
}

/// Convex hull by the monotone chain; strictly convex output.
pub fn convex_hull(points: &BTreeSet<(u32, u32)>) -> Vec<(u32, u32)> {
    let pts: Vec<(u32, u32)> = points.iter().copied().collect();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(u32, u32)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(u32, u32)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn require_bivariate(p: &ZMPoly) -> Result<()> {
    if p.is_zero() {
        return Err(Error::Precondition("zero polynomial".into()));
    }
    if p.nvars() != 2 {
        return Err(Error::Precondition(format!("expected 2 variables, got {}", p.nvars())));
    }
    Ok(())
}

/// Support and hull of a bivariate polynomial; exponents are `(first variable, second variable)`.
pub fn newton_polygon(p: &ZMPoly) -> Result<NewtonPolygon> {
    require_bivariate(p)?;
    let support: BTreeSet<(u32, u32)> = p.terms().map(|(e, _)| (e[0], e[1])).collect();
    let vertices = convex_hull(&support);
    Ok(NewtonPolygon { support, vertices })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BcgVerdict {
    Certified,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BcgReport {
    pub polygon: NewtonPolygon,
    /// gcd of all hull-vertex coordinates.
    pub gcd: u32,
    /// How irreducibility over `Q` was established, if it was.
    pub rational_irreducibility: Option<String>,
    pub verdict: BcgVerdict,
}

impl BcgReport {
    pub fn to_json(&self) -> Value {
        json!({
            "support_size": self.polygon.support.len(),
            "vertices": self.polygon.vertices.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "gcd": self.gcd,
            "rational_irreducibility": self.rational_irreducibility,
            "verdict": self.verdict,
        })
    }
}

/// Irreducibility over `Q` of a bivariate polynomial with constant leading coefficient in some variable,
/// from factor degrees of specializations of the other variable.
pub fn rational_irreducibility(p: &ZMPoly) -> Option<String> {
    for main in [1usize, 0] {
        let other = 1 - main;
        let coeffs = p.coeffs_in(main);
        let deg = coeffs.len().saturating_sub(1);
        if deg == 0 || deg >= 128 || coeffs[deg].terms().any(|(e, _)| e[other] > 0) {
            continue;
        }
        let mut sums = (1u128 << deg) - 2;
        let mut tried = Vec::new();
        for k in 0..SPECIALIZATIONS {
            let x0 = if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 };
            let u = p.specialize(other, &BigInt::from(x0)).to_univariate(main).expect("one variable left");
            let degrees: Vec<usize> = factor_poly(&u).iter().map(|g| g.deg()).collect();
            sums &= proper_degree_sums(&degrees);
            tried.push(x0);
            if sums == 0 {
                let name = &p.vars()[other];
                return Some(if degrees.len() == 1 {
                    format!("{name}={x0} gives an irreducible polynomial of degree {deg} in {}", p.vars()[main])
                } else {
                    format!("factor degrees at {name} in {tried:?} admit no common splitting")
                });
            }
        }
    }
    None
}

/// Certified when irreducible over `Q` and the hull-vertex coordinates have gcd 1.
pub fn absolutely_irreducible_bcg(p: &ZMPoly) -> Result<BcgReport> {
    let polygon = newton_polygon(p)?;
    let gcd = polygon.vertices.iter().fold(0u32, |g, &(a, b)| g.gcd(&a).gcd(&b));
    let rational = rational_irreducibility(p);
    let verdict = if gcd == 1 && rational.is_some() { BcgVerdict::Certified } else { BcgVerdict::Inconclusive };
    Ok(BcgReport { polygon, gcd, rational_irreducibility: rational, verdict })
}

/// Per-variable bounds `|x_i| <= B_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LopsidedBox {
    bounds: Vec<u64>,
}

impl LopsidedBox {
    pub fn new(bounds: Vec<u64>) -> Result<Self> {
        if bounds.is_empty() || bounds.iter().any(|&b| b < 1) {
            return Err(Error::Precondition("box bounds must be at least 1".into()));
        }
        Ok(LopsidedBox { bounds })
    }

    pub fn bounds(&self) -> &[u64] {
        &self.bounds
    }

    fn side(&self, i: usize) -> u128 {
        2 * self.bounds[i] as u128 + 1
    }

    fn range(&self, i: usize) -> std::ops::RangeInclusive<i64> {
        let b = self.bounds[i] as i64;
        -b..=b
    }
}

fn require_dims(f: &ZMPoly, bx: &LopsidedBox, n: usize) -> Result<()> {
    if f.is_zero() {
        return Err(Error::Precondition("zero polynomial".into()));
    }
    if f.nvars() != n || bx.bounds.len() != n {
        return Err(Error::Precondition(format!("expected {n} variables and {n} bounds")));
    }
    Ok(())
}

/// Variables in which `f` has a nonzero constant leading coefficient, largest bound first.
fn monic_variables(f: &ZMPoly, bx: &LopsidedBox) -> Vec<usize> {
    let mut vars: Vec<usize> = (0..f.nvars())
        .filter(|&i| {
            let c = f.coeffs_in(i);
            c.len() > 1 && c.last().unwrap().terms().all(|(e, _)| e.iter().all(|&x| x == 0))
        })
        .collect();
    vars.sort_by_key(|&i| std::cmp::Reverse(bx.bounds[i]));
    vars
}

/// Distinct integer roots of a nonzero univariate specialization inside `[-b, b]`.
fn roots_within(f: &ZMPoly, var: usize, b: u64) -> u64 {
    let u = f.to_univariate(var).expect("other variables specialized");
    let bound = BigInt::from(b);
    let roots: BTreeSet<BigInt> = integer_roots_poly(&u).into_iter().filter(|r| r.abs() <= bound).collect();
    roots.len() as u64
}

/// Integer points of `F(x_1, x_2) = 0` in the box, with the default budget.
pub fn count_points_curve(f: &ZMPoly, bx: &LopsidedBox) -> Result<u64> {
    count_points_curve_with(f, bx, POINT_BUDGET)
}

pub fn count_points_curve_with(f: &ZMPoly, bx: &LopsidedBox, budget: u128) -> Result<u64> {
    require_dims(f, bx, 2)?;
    if let Some(&main) = monic_variables(f, bx).first() {
        let other = 1 - main;
        let required = bx.side(other);
        if required > budget {
            return Err(Error::Budget { required, budget });
        }
        let b = bx.bounds[main];
        return Ok(bx.range(other).into_par_iter().map(|x| roots_within(&f.specialize(other, &BigInt::from(x)), main, b)).sum());
    }
    let required = bx.side(0) * bx.side(1);
    if required > budget {
        return Err(Error::Budget { required, budget });
    }
    Ok(count_naive(f, bx))
}

/// Double loop over the box; the oracle for the root-isolation path.
pub fn count_naive(f: &ZMPoly, bx: &LopsidedBox) -> u64 {
    let ranges: Vec<_> = (0..f.nvars()).map(|i| bx.range(i)).collect();
    let outer = ranges[0].clone();
    outer
        .into_par_iter()
        .map(|x| {
            let mut point = vec![BigInt::from(x)];
            let mut count = 0u64;
            naive_rec(f, &ranges, &mut point, &mut count);
            count
        })
        .sum()
}

fn naive_rec(f: &ZMPoly, ranges: &[std::ops::RangeInclusive<i64>], point: &mut Vec<BigInt>, count: &mut u64) {
    if point.len() == ranges.len() {
        if f.eval(point).is_zero() {
            *count += 1;
        }
        return;
    }
    for v in ranges[point.len()].clone() {
        point.push(BigInt::from(v));
        naive_rec(f, ranges, point, count);
        point.pop();
    }
}

/// Integer points of `g(x_1, x_2, x_3) = 0` in the box; `g` must have a constant leading coefficient
/// in some variable, whose roots are isolated while the other two are iterated.
pub fn count_points_surface(g: &ZMPoly, bx: &LopsidedBox) -> Result<u64> {
    count_points_surface_with(g, bx, POINT_BUDGET)
}

pub fn count_points_surface_with(g: &ZMPoly, bx: &LopsidedBox, budget: u128) -> Result<u64> {
    require_dims(g, bx, 3)?;
    let Some(&main) = monic_variables(g, bx).first() else {
        return Err(Error::Precondition("polynomial is not monic in any variable".into()));
    };
    let rest: Vec<usize> = (0..3).filter(|&i| i != main).collect();
    let required = bx.side(rest[0]) * bx.side(rest[1]);
    if required > budget {
        return Err(Error::Budget { required, budget });
    }
    let b = bx.bounds[main];
    Ok(bx
        .range(rest[0])
        .into_par_iter()
        .map(|x| {
            let gx = g.specialize(rest[0], &BigInt::from(x));
            bx.range(rest[1]).map(|z| roots_within(&gx.specialize(rest[1], &BigInt::from(z)), main, b)).sum::<u64>()
        })
        .sum())
}

/// `T = max over monomials of prod B_i^{e_i}`, the weighted degree size of `F` on the box.
pub fn box_weight(f: &ZMPoly, bx: &LopsidedBox) -> BigInt {
    f.terms()
        .map(|(e, _)| e.iter().zip(&bx.bounds).fold(BigInt::one(), |acc, (&k, &b)| acc * BigInt::from(b).pow(k)))
        .max()
        .unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str, vars: &[&str]) -> ZMPoly {
        let v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        ZMPoly::parse(s, Some(&v)).unwrap()
    }

    fn set(v: &[(u32, u32)]) -> BTreeSet<(u32, u32)> {
        v.iter().copied().collect()
    }

    #[test]
    fn hull_basics() {
        let p = newton_polygon(&mp("x^2*y^3", &["x", "y"])).unwrap();
        assert_eq!(p.vertices, vec![(2, 3)]);
        let sq = newton_polygon(&mp("1 + x + y + x*y + 3*x*y^0", &["x", "y"])).unwrap();
        assert_eq!(sq.vertices, vec![(0, 0), (1, 0), (1, 1), (0, 1)]);
        let line = newton_polygon(&mp("1 + x*y + x^2*y^2", &["x", "y"])).unwrap();
        assert_eq!(line.vertices, vec![(0, 0), (2, 2)]);
        assert!(newton_polygon(&mp("0", &["x", "y"])).is_err());
    }

    #[test]
    fn quintic_specialization_polygon() {
        let g = mp("102400 - 108544*y - 3200000*e^4*y + 44800*y^2 - 8960*y^3 + 880*y^4 - 40*y^5 + y^6", &["e", "y"]);
        let r = absolutely_irreducible_bcg(&g).unwrap();
        assert_eq!(set(&r.polygon.vertices), set(&[(0, 0), (0, 6), (4, 1)]));
        assert_eq!(r.gcd, 1);
        assert_eq!(r.verdict, BcgVerdict::Certified);
    }

    #[test]
    fn square_is_inconclusive() {
        let r = absolutely_irreducible_bcg(&mp("x^2*y^2", &["x", "y"])).unwrap();
        assert_eq!(r.gcd, 2);
        assert_eq!(r.verdict, BcgVerdict::Inconclusive);
        let r = absolutely_irreducible_bcg(&mp("(y^2 - x)*(y + x + 1)", &["x", "y"])).unwrap();
        assert_eq!(r.rational_irreducibility, None);
        assert_eq!(r.verdict, BcgVerdict::Inconclusive);
    }

    #[test]
    fn curve_examples() {
        let bx = LopsidedBox::new(vec![100, 10]).unwrap();
        assert_eq!(count_points_curve(&mp("x1 - x2^2", &["x1", "x2"]), &bx).unwrap(), 21);
        let bx = LopsidedBox::new(vec![7, 7]).unwrap();
        let f = mp("x1*x2 - 1", &["x1", "x2"]);
        assert_eq!(count_points_curve(&f, &bx).unwrap(), 2);
        assert_eq!(count_naive(&f, &bx), 2);
    }

    #[test]
    fn surface_examples() {
        let bx = LopsidedBox::new(vec![3, 3, 3]).unwrap();
        assert_eq!(count_points_surface(&mp("y", &["d", "e", "y"]), &bx).unwrap(), 49);
        assert_eq!(count_points_surface(&mp("y^2 + d^2 + e^2 + 1", &["d", "e", "y"]), &bx).unwrap(), 0);
        assert!(count_points_surface(&mp("d*y - e*y", &["d", "e", "y"]), &bx).is_err());
    }

    #[test]
    fn budget_and_box() {
        assert!(LopsidedBox::new(vec![0, 3]).is_err());
        let bx = LopsidedBox::new(vec![100, 100]).unwrap();
        let f = mp("x1*x2 - 1", &["x1", "x2"]);
        assert_eq!(count_points_curve_with(&f, &bx, 1000), Err(Error::Budget { required: 40401, budget: 1000 }));
    }

    #[test]
    fn weight() {
        let bx = LopsidedBox::new(vec![2, 10]).unwrap();
        assert_eq!(box_weight(&mp("x^3 + y", &["x", "y"]), &bx), BigInt::from(10));
    }
}
