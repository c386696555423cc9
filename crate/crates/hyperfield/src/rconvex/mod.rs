//! The hyperfield R^convex over an ordered field of scalars: case-table
//! hyperaddition, sums of sign-convex sets, the automorphisms θ_λ, and the
//! construction S(G) over an ordered group.

mod oracle;
mod set;
mod sg;

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::Neg;

use num_rational::BigRational;
use num_traits::{Num, ToPrimitive, Zero};
use thiserror::Error;

pub use oracle::{c_add_membership_oracle, OracleVerdict};
pub use set::{Atom, Bound, SignConvexSet};
pub use sg::{sg_add, sg_matches_rconvex, AgreementReport, OrderedGroup, PositiveRational, SgAtom, SgElem, SgSet};

/// Ordered field operations needed here. Exact for `BigRational`.
pub trait Scalar: Clone + PartialOrd + Num + Neg<Output = Self> + Debug {}

impl<T: Clone + PartialOrd + Num + Neg<Output = T> + Debug> Scalar for T {}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RconvexError {
    #[error("theta_0 is not an automorphism")]
    ZeroExponent,
    #[error("set images under theta need an integer exponent")]
    NonIntegerExponent,
}

pub(crate) fn sgn<S: Scalar>(x: &S) -> i8 {
    match x.partial_cmp(&S::zero()) {
        Some(Ordering::Greater) => 1,
        Some(Ordering::Less) => -1,
        _ => 0,
    }
}

/// `x +_c y` by the closed-form case table.
pub fn c_add<S: Scalar>(x: &S, y: &S) -> SignConvexSet<S> {
    let z = S::zero();
    if *x == z {
        return SignConvexSet::point(y.clone());
    }
    if *y == z {
        return SignConvexSet::point(x.clone());
    }
    if x == y {
        return SignConvexSet::point(x.clone());
    }
    if *x == -y.clone() {
        return SignConvexSet::from_atoms(vec![Atom::Point(x.clone()), Atom::Point(z), Atom::Point(y.clone())]);
    }
    let (sx, sy) = (sgn(x), sgn(y));
    if sx == sy {
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        return SignConvexSet::interval(lo.clone(), hi.clone());
    }
    // Opposite signs: n < 0 < p.
    let (n, p) = if sx < 0 { (x, y) } else { (y, x) };
    let atoms = if -n.clone() < *p {
        vec![Atom::Open(Bound::Fin(n.clone()), Bound::Fin(z)), Atom::Open(Bound::Fin(p.clone()), Bound::PosInf)]
    } else {
        vec![Atom::Open(Bound::NegInf, Bound::Fin(n.clone())), Atom::Open(Bound::Fin(z), Bound::Fin(p.clone()))]
    };
    SignConvexSet::from_atoms(atoms)
}

/// Position on a circle of circumference 2: positives fill (0,1), negatives
/// fill (1,2), `x` and `-x` are antipodal, and `c(x,y)` for non-antipodal
/// distinct nonzero `x, y` is the open short arc between them.
fn circle_pos<S: Scalar>(x: &S) -> S {
    let h = |m: S| m.clone() / (S::one() + m);
    if sgn(x) > 0 {
        h(x.clone())
    } else {
        S::one() + h(-x.clone())
    }
}

/// A nonzero atom as a circle arc `(lo, hi)` or a point `lo == hi`.
struct Arc<S> {
    lo: S,
    hi: S,
    point: bool,
}

fn arcs<S: Scalar>(set: &SignConvexSet<S>) -> Vec<Arc<S>> {
    let one = S::one();
    let two = one.clone() + one.clone();
    set.nonzero_atoms()
        .into_iter()
        .map(|a| match a {
            Atom::Point(p) => {
                let c = circle_pos(&p);
                Arc { lo: c.clone(), hi: c, point: true }
            }
            Atom::Open(lo, hi) => {
                let positive = match &lo {
                    Bound::NegInf => false,
                    Bound::Fin(v) => sgn(v) >= 0,
                    Bound::PosInf => true,
                };
                let end = |b: &Bound<S>| match b {
                    Bound::Fin(v) if sgn(v) == 0 => {
                        if positive {
                            S::zero()
                        } else {
                            one.clone()
                        }
                    }
                    Bound::Fin(v) => circle_pos(v),
                    Bound::PosInf => one.clone(),
                    Bound::NegInf => two.clone(),
                };
                // Negative reals run backwards on the circle.
                let (a, b) = (end(&lo), end(&hi));
                if positive {
                    Arc { lo: a, hi: b, point: false }
                } else {
                    Arc { lo: b, hi: a, point: false }
                }
            }
        })
        .collect()
}

/// Infimum of the arc distances `d in (0,1)` from `tau` to points of the
/// arcs, measured forwards (`ahead`) or backwards.
fn inf_offset<S: Scalar>(arcs: &[Arc<S>], tau: &S, ahead: bool) -> Option<S> {
    let (zero, one) = (S::zero(), S::one());
    let two = one.clone() + one.clone();
    let mut best: Option<S> = None;
    let mut offer = |v: S| {
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    };
    let shifts = [zero.clone() - two.clone(), zero.clone(), two.clone(), two.clone() + two.clone()];
    for a in arcs {
        let (u1, u2) = if ahead {
            (a.lo.clone() - tau.clone(), a.hi.clone() - tau.clone())
        } else {
            (tau.clone() - a.hi.clone(), tau.clone() - a.lo.clone())
        };
        for shift in &shifts {
            let (v1, v2) = (u1.clone() + shift.clone(), u2.clone() + shift.clone());
            if a.point {
                if v1 > zero && v1 < one {
                    offer(v1);
                }
            } else if v1 < one && v2 > zero {
                offer(if v1 > zero { v1 } else { zero.clone() });
            }
        }
    }
    best
}

/// `A + B = ∪ {a +_c b : a in A, b in B}`.
pub fn c_add_set<S: Scalar>(a: &SignConvexSet<S>, b: &SignConvexSet<S>) -> SignConvexSet<S> {
    if a.is_empty() || b.is_empty() {
        return SignConvexSet::empty();
    }
    let z = S::zero();
    let mut bps = a.breakpoints();
    bps.extend(b.breakpoints());
    let negs: Vec<S> = bps.iter().map(|v| -v.clone()).collect();
    bps.extend(negs);
    bps.push(z.clone());

    let (arcs_a, arcs_b) = (arcs(a), arcs(b));
    let (a0, b0) = (a.contains(&z), b.contains(&z));
    // Antipodal pairs a = -b contribute {a, 0, -a}.
    let antipodal = a.intersect(&b.neg());
    let antipodal_hit = antipodal.atoms().iter().any(|at| !matches!(at, Atom::Point(p) if *p == z));
    SignConvexSet::from_predicate(bps, |t| {
        if *t == z {
            return (a0 && b0) || antipodal_hit;
        }
        if (a0 && b.contains(t)) || (b0 && a.contains(t)) {
            return true;
        }
        if a.contains(t) && b.contains(t) {
            return true;
        }
        let mt = -t.clone();
        if (a.contains(t) && b.contains(&mt)) || (a.contains(&mt) && b.contains(t)) {
            return true;
        }
        let tau = circle_pos(t);
        let one = S::one();
        let through = |behind: &[Arc<S>], front: &[Arc<S>]| match (inf_offset(behind, &tau, false), inf_offset(front, &tau, true)) {
            (Some(d), Some(e)) => d + e < one,
            _ => false,
        };
        through(&arcs_a, &arcs_b) || through(&arcs_b, &arcs_a)
    })
}

/// `sign(x) |x|^n` for an integer exponent; `θ_n(0) = 0`.
pub fn theta_int<S: Scalar>(n: i64, x: &S) -> Result<S, RconvexError> {
    if n == 0 {
        return Err(RconvexError::ZeroExponent);
    }
    if sgn(x) == 0 {
        return Ok(S::zero());
    }
    let m = if sgn(x) < 0 { -x.clone() } else { x.clone() };
    let mut p = S::one();
    for _ in 0..n.unsigned_abs() {
        p = p * m.clone();
    }
    let mag = if n < 0 { S::one() / p } else { p };
    Ok(if sgn(x) < 0 { -mag } else { mag })
}

/// Value of θ_λ: exact for integer λ, floating point otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum ThetaValue {
    Exact(BigRational),
    Approx(f64),
}

pub fn theta(lambda: &BigRational, x: &BigRational) -> Result<ThetaValue, RconvexError> {
    if lambda.is_zero() {
        return Err(RconvexError::ZeroExponent);
    }
    if lambda.is_integer() {
        let n = lambda.to_integer().to_i64().ok_or(RconvexError::NonIntegerExponent)?;
        return theta_int(n, x).map(ThetaValue::Exact);
    }
    let (l, v) = (lambda.to_f64().unwrap_or(f64::NAN), x.to_f64().unwrap_or(f64::NAN));
    Ok(ThetaValue::Approx(theta_f64(l, v)))
}

pub fn theta_f64(lambda: f64, x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x.signum() * x.abs().powf(lambda)
    }
}

/// Image of a set under θ_n for integer `n != 0`.
pub fn theta_set<S: Scalar>(n: i64, set: &SignConvexSet<S>) -> Result<SignConvexSet<S>, RconvexError> {
    theta_int(n, &S::one())?;
    Ok(set.map_odd_monotone(|x| theta_int(n, x).expect("nonzero exponent"), n < 0))
}

/// Image under θ_λ for real λ, in floating point.
pub fn theta_set_f64(lambda: f64, set: &SignConvexSet<f64>) -> Result<SignConvexSet<f64>, RconvexError> {
    if lambda == 0.0 {
        return Err(RconvexError::ZeroExponent);
    }
    Ok(set.map_odd_monotone(|x| theta_f64(lambda, *x), lambda < 0.0))
}

pub type RatSet = SignConvexSet<BigRational>;

/// Parse `(a,b) u {c} u (d,inf)`; ends are rationals or `-inf`/`inf`.
pub fn parse_set(text: &str) -> Result<RatSet, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "{}" {
        return Ok(SignConvexSet::empty());
    }
    let bound = |t: &str| -> Result<Bound<BigRational>, String> {
        match t {
            "-inf" => Ok(Bound::NegInf),
            "inf" | "+inf" => Ok(Bound::PosInf),
            _ => crate::exactmath::parse_rational(t).map(Bound::Fin).map_err(|e| e.to_string()),
        }
    };
    let mut atoms = Vec::new();
    for part in s.split('u') {
        if let Some(inner) = part.strip_prefix('{').and_then(|p| p.strip_suffix('}')) {
            for v in inner.split(',') {
                atoms.push(Atom::Point(crate::exactmath::parse_rational(v).map_err(|e| e.to_string())?));
            }
        } else if let Some(inner) = part.strip_prefix('(').and_then(|p| p.strip_suffix(')')) {
            let (lo, hi) = inner.split_once(',').ok_or_else(|| format!("bad interval {part:?}"))?;
            let (lo, hi) = (bound(lo)?, bound(hi)?);
            atoms.push(Atom::Open(lo, hi));
        } else {
            return Err(format!("bad atom {part:?}"));
        }
    }
    Ok(SignConvexSet::from_atoms(atoms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        crate::exactmath::parse_rational(s).unwrap()
    }

    #[test]
    fn case_table_examples() {
        assert_eq!(c_add(&q("1"), &q("2")).to_string(), "(1,2)");
        assert_eq!(c_add(&q("3"), &q("-3")).to_string(), "{-3} u {0} u {3}");
        assert_eq!(c_add(&q("1"), &q("-1/2")).to_string(), "(-1/2,0) u (1,inf)");
        assert_eq!(c_add(&q("-2"), &q("1")).to_string(), "(-inf,-2) u (0,1)");
        assert_eq!(c_add(&q("0"), &q("5")).to_string(), "{5}");
        assert_eq!(c_add(&q("-4"), &q("-4")).to_string(), "{-4}");
    }

    #[test]
    fn set_sums() {
        let p = |s| parse_set(s).unwrap();
        assert_eq!(c_add_set(&p("{1}"), &p("(1,2)")).to_string(), "(1,2)");
        let a = p("(-1,3) u {7}");
        assert_eq!(c_add_set(&p("{0}"), &a), a);
        assert_eq!(c_add_set(&p("(1,2)"), &p("{-3}")).to_string(), "(-inf,-3) u (0,2)");
    }

    #[test]
    fn set_sum_of_points_is_case_table() {
        let vals = ["-3", "-1", "-1/2", "0", "1/3", "1", "2", "3"];
        for x in vals {
            for y in vals {
                let (x, y) = (q(x), q(y));
                let pts = c_add_set(&SignConvexSet::point(x.clone()), &SignConvexSet::point(y.clone()));
                assert_eq!(pts, c_add(&x, &y), "{x} + {y}");
            }
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&q("2"), &q("-3")).unwrap(), ThetaValue::Exact(q("-9")));
        assert_eq!(theta_set(2, &parse_set("(1,2)").unwrap()).unwrap().to_string(), "(1,4)");
        assert_eq!(theta_set(1, &parse_set("(-1/2,0) u (1,inf)").unwrap()).unwrap().to_string(), "(-1/2,0) u (1,inf)");
        assert_eq!(theta_set(-1, &parse_set("(-1/2,0) u (1,inf)").unwrap()).unwrap().to_string(), "(-inf,-2) u (0,1)");
        assert!(theta(&q("0"), &q("1")).is_err());
        match theta(&q("1/2"), &q("4")).unwrap() {
            ThetaValue::Approx(v) => assert!((v - 2.0).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn float_scalar_agrees() {
        let s = c_add(&1.0f64, &-0.5);
        assert!(s.contains(&2.0) && s.contains(&-0.25) && !s.contains(&0.5));
        let img = theta_set_f64(0.5, &c_add(&1.0f64, &4.0)).unwrap();
        assert!(img.approx_eq(&c_add(&1.0, &2.0), 1e-12));
    }
}
