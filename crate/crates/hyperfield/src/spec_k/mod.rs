//! Points of Hom(Z[T], K), one fiber over each point of Spec(Z), with the
//! hyperoperations induced by the coproducts `T -> T⊗1 + 1⊗T` and
//! `T -> T⊗T`.

mod charp;
mod oracle;

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactmath::{
    canonical_cmp, distinct_factors_fp, factor_q, is_irreducible_q, is_prime, product_resultant, sum_resultant,
    FpPoly, IntPoly, MathError,
};

pub use charp::{char_p_identities, CharPReport};
pub use oracle::{brute_oracle_fiber0, brute_oracle_fiberp};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecError {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("{0} is not irreducible")]
    Reducible(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("root reconstruction inconclusive: coefficient off an integer by {0:e}")]
    Inconclusive(f64),
    #[error("field F_{{{0}^{1}}} too large to enumerate")]
    FieldTooLarge(u64, usize),
    #[error("{0}")]
    Precondition(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Sum,
    Product,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecKPoint {
    /// The generic point `δ` of the fiber over 0.
    Generic0,
    /// Conjugacy class of the roots of `q`, primitive with positive
    /// leading coefficient.
    Closed0(IntPoly),
    GenericP(u64),
    ClosedP(u64, FpPoly),
}

fn normalize0(q: &IntPoly) -> IntPoly {
    let q = q.primitive();
    if q.lc().is_negative() {
        -q
    } else {
        q
    }
}

impl SpecKPoint {
    pub fn closed0(q: &IntPoly) -> Result<Self, SpecError> {
        if !is_irreducible_q(q) {
            return Err(SpecError::Reducible(q.to_string()));
        }
        Ok(SpecKPoint::Closed0(normalize0(q)))
    }

    pub fn closed_p(a: &FpPoly) -> Result<Self, SpecError> {
        let p = a.modulus();
        if !is_prime(p) {
            return Err(SpecError::NotPrime(p));
        }
        if a.is_zero() || a.deg() == 0 || !a.is_irreducible() {
            return Err(SpecError::Reducible(a.to_string()));
        }
        Ok(SpecKPoint::ClosedP(p, a.monic()))
    }

    pub fn generic_p(p: u64) -> Result<Self, SpecError> {
        if !is_prime(p) {
            return Err(SpecError::NotPrime(p));
        }
        Ok(SpecKPoint::GenericP(p))
    }

    /// 0 for the fiber over the generic point of Spec(Z), else `p`.
    pub fn fiber(&self) -> u64 {
        match self {
            SpecKPoint::Generic0 | SpecKPoint::Closed0(_) => 0,
            SpecKPoint::GenericP(p) | SpecKPoint::ClosedP(p, _) => *p,
        }
    }

    pub fn is_zero_point(&self) -> bool {
        match self {
            SpecKPoint::Closed0(q) => q.deg() == 1 && q.coeff(0).is_zero(),
            SpecKPoint::ClosedP(_, a) => a.deg() == 1 && a.coeff(0) == 0,
            _ => false,
        }
    }

    /// The class of `-α`.
    pub fn negate(&self) -> Self {
        match self {
            SpecKPoint::Closed0(q) => SpecKPoint::Closed0(normalize0(&q.negate_var())),
            SpecKPoint::ClosedP(p, a) => {
                let c: Vec<u64> = a.coeffs().iter().enumerate().map(|(i, &c)| if i % 2 == 1 { (p - c) % p } else { c }).collect();
                SpecKPoint::ClosedP(*p, FpPoly::new(*p, c).monic())
            }
            g => g.clone(),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            SpecKPoint::Generic0 | SpecKPoint::GenericP(_) => 0,
            _ => 1,
        }
    }
}

impl PartialOrd for SpecKPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Fiber first, generic point before closed ones, closed points in
/// canonical polynomial order.
impl Ord for SpecKPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.fiber().cmp(&other.fiber()).then(self.rank().cmp(&other.rank())).then_with(|| match (self, other) {
            (SpecKPoint::Closed0(a), SpecKPoint::Closed0(b)) => canonical_cmp(a, b),
            (SpecKPoint::ClosedP(_, a), SpecKPoint::ClosedP(_, b)) => a.deg().cmp(&b.deg()).then_with(|| a.cmp(b)),
            _ => Ordering::Equal,
        })
    }
}

impl fmt::Display for SpecKPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecKPoint::Generic0 => f.write_str("delta"),
            SpecKPoint::GenericP(_) => f.write_str("delta_p"),
            SpecKPoint::Closed0(q) => write!(f, "{q}"),
            SpecKPoint::ClosedP(_, a) => write!(f, "{a}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperResult {
    /// Nonempty, sorted, without repetition.
    Finite(Vec<SpecKPoint>),
    Fiber0All,
    Fiber0NonZero,
    FiberPAll(u64),
    FiberPNonZero(u64),
    Empty,
}

impl HyperResult {
    fn finite(mut v: Vec<SpecKPoint>) -> Self {
        v.sort();
        v.dedup();
        HyperResult::Finite(v)
    }

    pub fn contains(&self, x: &SpecKPoint) -> bool {
        match self {
            HyperResult::Finite(v) => v.contains(x),
            HyperResult::Fiber0All => x.fiber() == 0,
            HyperResult::Fiber0NonZero => x.fiber() == 0 && !x.is_zero_point(),
            HyperResult::FiberPAll(p) => x.fiber() == *p,
            HyperResult::FiberPNonZero(p) => x.fiber() == *p && !x.is_zero_point(),
            HyperResult::Empty => false,
        }
    }
}

impl fmt::Display for HyperResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperResult::Finite(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
            HyperResult::Fiber0All | HyperResult::FiberPAll(_) => f.write_str("FIBER_ALL"),
            HyperResult::Fiber0NonZero | HyperResult::FiberPNonZero(_) => f.write_str("FIBER_NONZERO"),
            HyperResult::Empty => f.write_str("EMPTY"),
        }
    }
}

/// Resultant whose roots are the sums or products of the roots of `q1`
/// and `q2`; degree `deg q1 * deg q2`.
pub fn combined_resultant(q1: &IntPoly, q2: &IntPoly, op: Op) -> Result<IntPoly, MathError> {
    match op {
        Op::Sum => sum_resultant(q1, q2),
        Op::Product => product_resultant(q1, q2),
    }
}

/// Same over F_p, through the lifts with coefficients in `[0, p)`. The
/// reduction commutes with the resultant because both inputs are monic
/// and, for products, `b(0) != 0`, so no leading coefficient drops.
pub fn combined_resultant_fp(a: &FpPoly, b: &FpPoly, op: Op) -> Result<FpPoly, MathError> {
    let r = combined_resultant(&a.monic().to_int_poly(), &b.monic().to_int_poly(), op)?;
    Ok(FpPoly::from_int_poly(&r, a.modulus()))
}

fn closed0_combine(q1: &IntPoly, q2: &IntPoly, op: Op) -> Result<HyperResult, SpecError> {
    let r = combined_resultant(q1, q2, op)?;
    let points = factor_q(&r).factors.into_iter().map(|(g, _)| SpecKPoint::Closed0(g)).collect();
    Ok(HyperResult::finite(points))
}

fn closedp_combine(p: u64, a: &FpPoly, b: &FpPoly, op: Op) -> Result<HyperResult, SpecError> {
    let r = combined_resultant_fp(a, b, op)?;
    let points = distinct_factors_fp(&r)?.into_iter().map(|g| SpecKPoint::ClosedP(p, g)).collect();
    Ok(HyperResult::finite(points))
}

pub fn spec_add(x: &SpecKPoint, y: &SpecKPoint) -> Result<HyperResult, SpecError> {
    use SpecKPoint::*;
    if x.fiber() != y.fiber() {
        return Ok(HyperResult::Empty);
    }
    Ok(match (x, y) {
        (Generic0, Generic0) => HyperResult::Fiber0All,
        (Generic0, Closed0(q)) | (Closed0(q), Generic0) => {
            if q.deg() == 1 {
                HyperResult::Finite(vec![Generic0])
            } else {
                HyperResult::Fiber0All
            }
        }
        (Closed0(a), Closed0(b)) => closed0_combine(a, b, Op::Sum)?,
        (GenericP(p), GenericP(_)) => HyperResult::FiberPAll(*p),
        (GenericP(p), ClosedP(..)) | (ClosedP(..), GenericP(p)) => HyperResult::Finite(vec![GenericP(*p)]),
        (ClosedP(p, a), ClosedP(_, b)) => closedp_combine(*p, a, b, Op::Sum)?,
        _ => unreachable!("fibers already compared"),
    })
}

pub fn spec_mul(x: &SpecKPoint, y: &SpecKPoint) -> Result<HyperResult, SpecError> {
    use SpecKPoint::*;
    if x.fiber() != y.fiber() {
        return Ok(HyperResult::Empty);
    }
    for z in [x, y] {
        if z.is_zero_point() {
            return Ok(HyperResult::Finite(vec![z.clone()]));
        }
    }
    Ok(match (x, y) {
        (Generic0, Generic0) => HyperResult::Fiber0NonZero,
        (Generic0, Closed0(q)) | (Closed0(q), Generic0) => {
            if is_qroot(q)? {
                HyperResult::Finite(vec![Generic0])
            } else {
                HyperResult::Fiber0NonZero
            }
        }
        (Closed0(a), Closed0(b)) => closed0_combine(a, b, Op::Product)?,
        (GenericP(p), GenericP(_)) => HyperResult::FiberPNonZero(*p),
        (GenericP(p), ClosedP(..)) | (ClosedP(..), GenericP(p)) => HyperResult::Finite(vec![GenericP(*p)]),
        (ClosedP(p, a), ClosedP(_, b)) => closedp_combine(*p, a, b, Op::Product)?,
        _ => unreachable!("fibers already compared"),
    })
}

/// Default search bound `2 deg(q)^2` for `is_qroot`.
pub fn qroot_bound(q: &IntPoly) -> usize {
    2 * q.deg() * q.deg()
}

/// Whether a root `α` of `q` has `α^n ∈ Q` for some `1 <= n <= bound(q)`.
pub fn is_qroot(q: &IntPoly) -> Result<bool, SpecError> {
    Ok(qroot_exponent(q, qroot_bound(q))?.is_some())
}

/// Least `n <= bound` with `T^n mod q` constant.
pub fn qroot_exponent(q: &IntPoly, bound: usize) -> Result<Option<usize>, SpecError> {
    if q.deg() == 0 || (q.deg() == 1 && q.coeff(0).is_zero()) {
        return Err(SpecError::Precondition(format!("{q} has no nonzero root")));
    }
    let d = q.deg();
    let lc = BigRational::from_integer(q.lc());
    // T^d = -sum_{i<d} (q_i / lc) T^i
    let tail: Vec<BigRational> = (0..d).map(|i| -BigRational::from_integer(q.coeff(i)) / &lc).collect();
    let mut r = vec![BigRational::zero(); d];
    r[0] = BigRational::from_integer(1.into());
    for n in 1..=bound {
        let top = r[d - 1].clone();
        for i in (1..d).rev() {
            r[i] = r[i - 1].clone();
        }
        r[0] = BigRational::zero();
        if !top.is_zero() {
            for i in 0..d {
                r[i] += &top * &tail[i];
            }
        }
        if r[1..].iter().all(Zero::is_zero) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
