use std::cmp::Ordering;
use std::fmt;

use super::{sgn, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum Bound<S> {
    NegInf,
    Fin(S),
    PosInf,
}

impl<S: Scalar> Bound<S> {
    fn cmp_scalar(&self, x: &S) -> Ordering {
        match self {
            Bound::NegInf => Ordering::Less,
            Bound::PosInf => Ordering::Greater,
            Bound::Fin(v) => v.partial_cmp(x).unwrap_or(Ordering::Equal),
        }
    }

    pub fn finite(&self) -> Option<&S> {
        match self {
            Bound::Fin(v) => Some(v),
            _ => None,
        }
    }

    fn neg(&self) -> Self {
        match self {
            Bound::NegInf => Bound::PosInf,
            Bound::PosInf => Bound::NegInf,
            Bound::Fin(v) => Bound::Fin(-v.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Atom<S> {
    Point(S),
    /// Open interval `(lo, hi)`, `lo < hi`.
    Open(Bound<S>, Bound<S>),
}

impl<S: Scalar> Atom<S> {
    pub fn contains(&self, x: &S) -> bool {
        match self {
            Atom::Point(p) => p == x,
            Atom::Open(lo, hi) => lo.cmp_scalar(x) == Ordering::Less && hi.cmp_scalar(x) == Ordering::Greater,
        }
    }

    fn finite_ends(&self) -> Vec<S> {
        match self {
            Atom::Point(p) => vec![p.clone()],
            Atom::Open(lo, hi) => lo.finite().into_iter().chain(hi.finite()).cloned().collect(),
        }
    }
}

/// Finite union of points and open intervals, stored canonically: atoms
/// disjoint, sorted by infimum, no interval adjacent to another across a
/// point of the set.
#[derive(Clone, Debug, PartialEq)]
pub struct SignConvexSet<S> {
    atoms: Vec<Atom<S>>,
}

fn two<S: Scalar>() -> S {
    S::one() + S::one()
}

impl<S: Scalar> SignConvexSet<S> {
    pub fn empty() -> Self {
        SignConvexSet { atoms: Vec::new() }
    }

    pub fn point(x: S) -> Self {
        SignConvexSet { atoms: vec![Atom::Point(x)] }
    }

    pub fn open(lo: Bound<S>, hi: Bound<S>) -> Self {
        Self::from_atoms(vec![Atom::Open(lo, hi)])
    }

    /// Open interval with finite ends.
    pub fn interval(lo: S, hi: S) -> Self {
        Self::open(Bound::Fin(lo), Bound::Fin(hi))
    }

    /// Canonical form of an arbitrary finite union. Empty intervals are
    /// dropped.
    pub fn from_atoms(atoms: Vec<Atom<S>>) -> Self {
        let raw = SignConvexSet { atoms };
        let bps = raw.breakpoints();
        Self::from_predicate(bps, |t| raw.contains(t))
    }

    pub fn atoms(&self) -> &[Atom<S>] {
        &self.atoms
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn contains(&self, x: &S) -> bool {
        self.atoms.iter().any(|a| a.contains(x))
    }

    /// Finite endpoints and points, unsorted.
    pub fn breakpoints(&self) -> Vec<S> {
        self.atoms.iter().flat_map(|a| a.finite_ends()).collect()
    }

    /// The set `{t : pred(t)}`, assuming `pred` is constant on every open
    /// piece between consecutive breakpoints.
    pub fn from_predicate(mut bps: Vec<S>, pred: impl Fn(&S) -> bool) -> Self {
        bps.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
        bps.dedup();
        if bps.is_empty() {
            return if pred(&S::zero()) {
                SignConvexSet { atoms: vec![Atom::Open(Bound::NegInf, Bound::PosInf)] }
            } else {
                Self::empty()
            };
        }
        // Pieces in order: gap, bps[0], gap, bps[1], ..., bps[k-1], gap.
        let one = S::one();
        let mut pieces: Vec<(Atom<S>, bool)> = Vec::with_capacity(2 * bps.len() + 1);
        let first = bps[0].clone();
        pieces.push((
            Atom::Open(Bound::NegInf, Bound::Fin(first.clone())),
            pred(&(first - one.clone())),
        ));
        for (i, p) in bps.iter().enumerate() {
            pieces.push((Atom::Point(p.clone()), pred(p)));
            let (hi, sample) = match bps.get(i + 1) {
                Some(q) => (Bound::Fin(q.clone()), (p.clone() + q.clone()) / two()),
                None => (Bound::PosInf, p.clone() + one.clone()),
            };
            pieces.push((Atom::Open(Bound::Fin(p.clone()), hi), pred(&sample)));
        }
        // Each maximal run of member pieces becomes at most a point, an open
        // interval and a point.
        let mut atoms = Vec::new();
        let mut i = 0;
        while i < pieces.len() {
            if !pieces[i].1 {
                i += 1;
                continue;
            }
            let mut j = i;
            while j + 1 < pieces.len() && pieces[j + 1].1 {
                j += 1;
            }
            let run = &pieces[i..=j];
            let gaps: Vec<&Atom<S>> = run.iter().map(|(a, _)| a).filter(|a| matches!(a, Atom::Open(..))).collect();
            if let Atom::Point(_) = run[0].0 {
                atoms.push(run[0].0.clone());
            }
            if let (Some(Atom::Open(lo, _)), Some(Atom::Open(_, hi))) = (gaps.first(), gaps.last()) {
                atoms.push(Atom::Open(lo.clone(), hi.clone()));
            }
            if j > i {
                if let Atom::Point(_) = run[run.len() - 1].0 {
                    atoms.push(run[run.len() - 1].0.clone());
                }
            }
            i = j + 1;
        }
        SignConvexSet { atoms }
    }

    pub fn union(&self, o: &Self) -> Self {
        let mut bps = self.breakpoints();
        bps.extend(o.breakpoints());
        Self::from_predicate(bps, |t| self.contains(t) || o.contains(t))
    }

    pub fn intersect(&self, o: &Self) -> Self {
        let mut bps = self.breakpoints();
        bps.extend(o.breakpoints());
        Self::from_predicate(bps, |t| self.contains(t) && o.contains(t))
    }

    pub fn neg(&self) -> Self {
        let atoms = self
            .atoms
            .iter()
            .rev()
            .map(|a| match a {
                Atom::Point(p) => Atom::Point(-p.clone()),
                Atom::Open(lo, hi) => Atom::Open(hi.neg(), lo.neg()),
            })
            .collect();
        SignConvexSet { atoms }
    }

    /// `a * X`.
    pub fn scale(&self, a: &S) -> Self {
        match sgn(a) {
            0 if self.is_empty() => Self::empty(),
            0 => Self::point(S::zero()),
            -1 => self.scale(&-a.clone()).neg(),
            _ => {
                let f = |b: &Bound<S>| match b {
                    Bound::Fin(v) => Bound::Fin(v.clone() * a.clone()),
                    other => other.clone(),
                };
                let atoms = self
                    .atoms
                    .iter()
                    .map(|at| match at {
                        Atom::Point(p) => Atom::Point(p.clone() * a.clone()),
                        Atom::Open(lo, hi) => Atom::Open(f(lo), f(hi)),
                    })
                    .collect();
                SignConvexSet { atoms }
            }
        }
    }

    /// Parts away from zero, with intervals split at 0.
    pub(crate) fn nonzero_atoms(&self) -> Vec<Atom<S>> {
        let z = S::zero();
        let mut out = Vec::new();
        for a in &self.atoms {
            match a {
                Atom::Point(p) => {
                    if *p != z {
                        out.push(a.clone());
                    }
                }
                Atom::Open(lo, hi) => {
                    if a.contains(&z) {
                        out.push(Atom::Open(lo.clone(), Bound::Fin(z.clone())));
                        out.push(Atom::Open(Bound::Fin(z.clone()), hi.clone()));
                    } else {
                        out.push(a.clone());
                    }
                }
            }
        }
        out
    }

    /// Map each atom by a monotone bijection of the nonzero reals that fixes
    /// the sign; `decreasing` swaps the ends of positive and negative
    /// intervals and exchanges 0 with infinity.
    pub(crate) fn map_odd_monotone(&self, f: impl Fn(&S) -> S, decreasing: bool) -> Self {
        let z = S::zero();
        let img = |b: &Bound<S>, positive_side: bool| -> Bound<S> {
            match b {
                Bound::Fin(v) if *v == z => match (decreasing, positive_side) {
                    (false, _) => Bound::Fin(z.clone()),
                    (true, true) => Bound::PosInf,
                    (true, false) => Bound::NegInf,
                },
                Bound::Fin(v) => Bound::Fin(f(v)),
                Bound::PosInf | Bound::NegInf if decreasing => Bound::Fin(z.clone()),
                other => other.clone(),
            }
        };
        let mut atoms = Vec::new();
        for a in self.nonzero_atoms() {
            atoms.push(match a {
                Atom::Point(p) => Atom::Point(f(&p)),
                Atom::Open(lo, hi) => {
                    let positive = lo.cmp_scalar(&z) != Ordering::Less;
                    let (l, h) = (img(&lo, positive), img(&hi, positive));
                    if decreasing {
                        Atom::Open(h, l)
                    } else {
                        Atom::Open(l, h)
                    }
                }
            });
        }
        if self.contains(&z) {
            atoms.push(Atom::Point(z));
        }
        Self::from_atoms(atoms)
    }
}

impl SignConvexSet<f64> {
    /// Atom-by-atom comparison with absolute tolerance on finite ends.
    pub fn approx_eq(&self, o: &Self, tol: f64) -> bool {
        let close = |a: &Bound<f64>, b: &Bound<f64>| match (a, b) {
            (Bound::Fin(x), Bound::Fin(y)) => (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs())),
            (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, Bound::PosInf) => true,
            _ => false,
        };
        self.atoms.len() == o.atoms.len()
            && self.atoms.iter().zip(&o.atoms).all(|(a, b)| match (a, b) {
                (Atom::Point(x), Atom::Point(y)) => close(&Bound::Fin(*x), &Bound::Fin(*y)),
                (Atom::Open(l1, h1), Atom::Open(l2, h2)) => close(l1, l2) && close(h1, h2),
                _ => false,
            })
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for SignConvexSet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("{}");
        }
        let b = |x: &Bound<S>| match x {
            Bound::NegInf => "-inf".to_string(),
            Bound::PosInf => "inf".to_string(),
            Bound::Fin(v) => v.to_string(),
        };
        let parts: Vec<String> = self
            .atoms
            .iter()
            .map(|a| match a {
                Atom::Point(p) => format!("{{{p}}}"),
                Atom::Open(lo, hi) => format!("({},{})", b(lo), b(hi)),
            })
            .collect();
        f.write_str(&parts.join(" u "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_merge() {
        let s = SignConvexSet::from_atoms(vec![
            Atom::Open(Bound::Fin(r(1, 1)), Bound::Fin(r(2, 1))),
            Atom::Point(r(2, 1)),
            Atom::Open(Bound::Fin(r(2, 1)), Bound::Fin(r(3, 1))),
            Atom::Point(r(5, 1)),
            Atom::Point(r(3, 2)),
        ]);
        assert_eq!(s.to_string(), "(1,3) u {5}");
        let t = SignConvexSet::from_atoms(vec![
            Atom::Open(Bound::Fin(r(1, 1)), Bound::Fin(r(2, 1))),
            Atom::Open(Bound::Fin(r(2, 1)), Bound::Fin(r(3, 1))),
        ]);
        assert_eq!(t.to_string(), "(1,2) u (2,3)");
        let u = SignConvexSet::from_atoms(vec![Atom::Open(Bound::Fin(r(1, 1)), Bound::Fin(r(1, 1)))]);
        assert!(u.is_empty());
    }

    #[test]
    fn scale_and_neg() {
        let s = SignConvexSet::from_atoms(vec![
            Atom::Open(Bound::Fin(r(-1, 2)), Bound::Fin(r(0, 1))),
            Atom::Open(Bound::Fin(r(1, 1)), Bound::PosInf),
        ]);
        assert_eq!(s.scale(&r(-2, 1)).to_string(), "(-inf,-2) u (0,1)");
        assert_eq!(s.neg(), s.scale(&r(-1, 1)));
        assert_eq!(s.scale(&r(0, 1)).to_string(), "{0}");
    }

    #[test]
    fn whole_line_and_union() {
        let a = SignConvexSet::open(Bound::NegInf, Bound::Fin(r(0, 1)));
        let b = SignConvexSet::open(Bound::Fin(r(0, 1)), Bound::PosInf);
        let c = a.union(&b).union(&SignConvexSet::point(r(0, 1)));
        assert_eq!(c.to_string(), "(-inf,inf)");
        assert!(a.intersect(&b).is_empty());
    }
}
