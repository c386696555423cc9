use std::cmp::Ordering;
use std::fmt::{self, Debug};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{c_add, Bound, RatSet, SignConvexSet};

/// Totally ordered abelian group, dense and without extremes. `between`
/// and the two `beyond` functions are the witnesses for those properties.
pub trait OrderedGroup: Clone + Debug {
    fn cmp(&self, other: &Self) -> Ordering;
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn identity() -> Self;
    /// Some `c` with `self < c < other`, given `self < other`.
    fn between(&self, other: &Self) -> Self;
    fn beyond_above(&self) -> Self;
    fn beyond_below(&self) -> Self;
}

/// Q_{>0} under multiplication with the usual order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRational(BigRational);

impl PositiveRational {
    pub fn new(q: BigRational) -> Option<Self> {
        q.is_positive().then_some(PositiveRational(q))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl OrderedGroup for PositiveRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }

    fn compose(&self, other: &Self) -> Self {
        PositiveRational(&self.0 * &other.0)
    }

    fn inverse(&self) -> Self {
        PositiveRational(self.0.recip())
    }

    fn identity() -> Self {
        PositiveRational(BigRational::one())
    }

    fn between(&self, other: &Self) -> Self {
        PositiveRational((&self.0 + &other.0) / BigRational::from_integer(2.into()))
    }

    fn beyond_above(&self) -> Self {
        PositiveRational(&self.0 * BigRational::from_integer(2.into()))
    }

    fn beyond_below(&self) -> Self {
        PositiveRational(&self.0 / BigRational::from_integer(2.into()))
    }
}

/// Element of S(G) = -G ⊔ {0} ⊔ G.
#[derive(Clone, Debug)]
pub enum SgElem<G> {
    Neg(G),
    Zero,
    Pos(G),
}

impl<G: OrderedGroup> PartialEq for SgElem<G> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (SgElem::Zero, SgElem::Zero) => true,
            (SgElem::Pos(a), SgElem::Pos(b)) | (SgElem::Neg(a), SgElem::Neg(b)) => a.cmp(b) == Ordering::Equal,
            _ => false,
        }
    }
}

impl<G: OrderedGroup> SgElem<G> {
    pub fn neg(&self) -> Self {
        match self {
            SgElem::Neg(g) => SgElem::Pos(g.clone()),
            SgElem::Zero => SgElem::Zero,
            SgElem::Pos(g) => SgElem::Neg(g.clone()),
        }
    }

    /// Product: the group law on magnitudes, signs multiply.
    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (SgElem::Zero, _) | (_, SgElem::Zero) => SgElem::Zero,
            (SgElem::Pos(a), SgElem::Pos(b)) | (SgElem::Neg(a), SgElem::Neg(b)) => SgElem::Pos(a.compose(b)),
            (SgElem::Pos(a), SgElem::Neg(b)) | (SgElem::Neg(a), SgElem::Pos(b)) => SgElem::Neg(a.compose(b)),
        }
    }
}

/// `Point`, or `{sign * t : lo < t < hi}` with `None` meaning unbounded.
#[derive(Clone, Debug)]
pub enum SgAtom<G> {
    Point(SgElem<G>),
    Interval { positive: bool, lo: Option<G>, hi: Option<G> },
}

impl<G: OrderedGroup> SgAtom<G> {
    fn neg(&self) -> Self {
        match self {
            SgAtom::Point(e) => SgAtom::Point(e.neg()),
            SgAtom::Interval { positive, lo, hi } => SgAtom::Interval { positive: !positive, lo: lo.clone(), hi: hi.clone() },
        }
    }

    pub fn contains(&self, x: &SgElem<G>) -> bool {
        match (self, x) {
            (SgAtom::Point(p), _) => p == x,
            (SgAtom::Interval { .. }, SgElem::Zero) => false,
            (SgAtom::Interval { positive, lo, hi }, SgElem::Pos(t) | SgElem::Neg(t)) => {
                *positive == matches!(x, SgElem::Pos(_))
                    && lo.as_ref().is_none_or(|l| l.cmp(t) == Ordering::Less)
                    && hi.as_ref().is_none_or(|h| t.cmp(h) == Ordering::Less)
            }
        }
    }

    /// A few members, built from the density and no-extremes witnesses.
    pub fn witnesses(&self) -> Vec<SgElem<G>> {
        let mags = match self {
            SgAtom::Point(e) => return vec![e.clone()],
            SgAtom::Interval { lo, hi, .. } => match (lo, hi) {
                (Some(l), Some(h)) => {
                    let m = l.between(h);
                    vec![l.between(&m), m.clone(), m.between(h)]
                }
                (Some(l), None) => vec![l.beyond_above(), l.beyond_above().beyond_above()],
                (None, Some(h)) => vec![h.beyond_below(), h.beyond_below().beyond_below()],
                (None, None) => {
                    let one = G::identity();
                    vec![one.beyond_below(), one.clone(), one.beyond_above()]
                }
            },
        };
        let positive = matches!(self, SgAtom::Interval { positive: true, .. });
        mags.into_iter().map(|t| if positive { SgElem::Pos(t) } else { SgElem::Neg(t) }).collect()
    }
}

#[derive(Clone, Debug)]
pub struct SgSet<G> {
    pub atoms: Vec<SgAtom<G>>,
}

impl<G: OrderedGroup> SgSet<G> {
    pub fn contains(&self, x: &SgElem<G>) -> bool {
        self.atoms.iter().any(|a| a.contains(x))
    }

    fn neg(&self) -> Self {
        SgSet { atoms: self.atoms.iter().map(SgAtom::neg).collect() }
    }
}

impl SgSet<PositiveRational> {
    /// Image in R^convex: `±g` goes to the real `±g`.
    pub fn to_rat_set(&self) -> RatSet {
        let mut out = SignConvexSet::empty();
        for a in &self.atoms {
            let piece = match a {
                SgAtom::Point(e) => SignConvexSet::point(elem_to_rational(e)),
                SgAtom::Interval { positive, lo, hi } => {
                    let lo = lo.as_ref().map_or(Bound::Fin(BigRational::zero()), |g| Bound::Fin(g.0.clone()));
                    let hi = hi.as_ref().map_or(Bound::PosInf, |g| Bound::Fin(g.0.clone()));
                    let s = SignConvexSet::open(lo, hi);
                    if *positive {
                        s
                    } else {
                        s.neg()
                    }
                }
            };
            out = out.union(&piece);
        }
        out
    }
}

pub fn elem_to_rational(e: &SgElem<PositiveRational>) -> BigRational {
    match e {
        SgElem::Neg(g) => -g.0.clone(),
        SgElem::Zero => BigRational::zero(),
        SgElem::Pos(g) => g.0.clone(),
    }
}

pub fn rational_to_elem(q: &BigRational) -> SgElem<PositiveRational> {
    match PositiveRational::new(q.abs()) {
        None => SgElem::Zero,
        Some(g) if q.is_positive() => SgElem::Pos(g),
        Some(g) => SgElem::Neg(g),
    }
}

/// Hyperaddition of S(G) by the displayed rules on positives and mixed
/// pairs, extended by `-(a+b) = -a-b` and neutrality of 0.
pub fn sg_add<G: OrderedGroup>(x: &SgElem<G>, y: &SgElem<G>) -> SgSet<G> {
    let point = |e: &SgElem<G>| SgSet { atoms: vec![SgAtom::Point(e.clone())] };
    match (x, y) {
        (SgElem::Zero, _) => point(y),
        (_, SgElem::Zero) => point(x),
        (SgElem::Pos(a), SgElem::Pos(b)) => match a.cmp(b) {
            Ordering::Equal => point(x),
            Ordering::Less => SgSet { atoms: vec![SgAtom::Interval { positive: true, lo: Some(a.clone()), hi: Some(b.clone()) }] },
            Ordering::Greater => SgSet { atoms: vec![SgAtom::Interval { positive: true, lo: Some(b.clone()), hi: Some(a.clone()) }] },
        },
        (SgElem::Neg(_), SgElem::Neg(_)) => sg_add(&x.neg(), &y.neg()).neg(),
        (SgElem::Neg(_), SgElem::Pos(_)) => sg_add(y, x),
        (SgElem::Pos(a), SgElem::Neg(b)) => match a.cmp(b) {
            Ordering::Equal => SgSet { atoms: vec![SgAtom::Point(SgElem::Zero), SgAtom::Point(x.clone()), SgAtom::Point(y.clone())] },
            Ordering::Greater => SgSet {
                atoms: vec![
                    SgAtom::Interval { positive: true, lo: Some(a.clone()), hi: None },
                    SgAtom::Interval { positive: false, lo: None, hi: Some(b.clone()) },
                ],
            },
            // x + y = -((-y) + (-x)) with -y > -x > 0 handled above.
            Ordering::Less => sg_add(&y.neg(), &x.neg()).neg(),
        },
    }
}

#[derive(Clone, Debug, Default)]
pub struct AgreementReport {
    pub pairs: usize,
    pub agreed: usize,
    pub witness_checks: usize,
    pub mismatches: Vec<String>,
}

impl AgreementReport {
    pub fn all_agree(&self) -> bool {
        self.mismatches.is_empty() && self.agreed == self.pairs
    }
}

impl fmt::Display for AgreementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} pairs agree, {} witnesses checked", self.agreed, self.pairs, self.witness_checks)
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let n: i64 = rng.gen_range(-30..=30);
    let d: i64 = rng.gen_range(1..=12);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Compare `sg_add` over S(Q_{>0}) with `c_add` on random pairs, as sets
/// and on membership of witness elements. A quarter of the pairs are of
/// the form `(x, x)` and a quarter `(x, -x)`.
pub fn sg_matches_rconvex(samples: usize, seed: u64) -> AgreementReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AgreementReport::default();
    for _ in 0..samples {
        let x = random_rational(&mut rng);
        let y = match rng.gen_range(0..4) {
            0 => x.clone(),
            1 => -x.clone(),
            _ => random_rational(&mut rng),
        };
        report.pairs += 1;
        let s = sg_add(&rational_to_elem(&x), &rational_to_elem(&y));
        let c = c_add(&x, &y);
        let image = s.to_rat_set();
        let mut ok = image == c;
        for atom in &s.atoms {
            for w in atom.witnesses() {
                report.witness_checks += 1;
                ok &= c.contains(&elem_to_rational(&w));
            }
        }
        if ok {
            report.agreed += 1;
        } else {
            report.mismatches.push(format!("{x} + {y}: S(G) gives {image}, R^convex gives {c}"));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> SgElem<PositiveRational> {
        rational_to_elem(&crate::exactmath::parse_rational(s).unwrap())
    }

    #[test]
    fn displayed_rules() {
        assert_eq!(sg_add(&e("2"), &e("2")).to_rat_set().to_string(), "{2}");
        assert_eq!(sg_add(&e("2"), &e("-2")).to_rat_set().to_string(), "{-2} u {0} u {2}");
        assert_eq!(sg_add(&e("1"), &e("-1/2")).to_rat_set().to_string(), "(-1/2,0) u (1,inf)");
        assert_eq!(sg_add(&e("1/2"), &e("-1")).to_rat_set().to_string(), "(-inf,-1) u (0,1/2)");
        assert_eq!(sg_add(&e("-1"), &e("-3")).to_rat_set().to_string(), "(-3,-1)");
        assert_eq!(sg_add(&e("0"), &e("-3")).to_rat_set().to_string(), "{-3}");
    }

    #[test]
    fn membership_and_product() {
        let s = sg_add(&e("1"), &e("-1/2"));
        assert!(s.contains(&e("5")));
        assert!(s.contains(&e("-1/4")));
        assert!(!s.contains(&e("0")));
        assert!(!s.contains(&e("1/2")));
        assert_eq!(e("-2").mul(&e("3/4")), e("-3/2"));
    }

    #[test]
    fn agrees_with_rconvex() {
        let r = sg_matches_rconvex(1000, 7);
        assert!(r.all_agree(), "{:?}", r.mismatches);
    }
}
