//! Real algebraic numbers as (minimal polynomial, isolating interval), exact
//! sign evaluation, and selection of the factor carrying a sum or product.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factor_q::is_irreducible_q;
use super::poly::{sign_of, IntPoly};
use super::roots::SturmSequence;
use super::{format_rational, MathError};

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn add(&self, o: &Self) -> Self {
        RatInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().expect("four products").clone();
        let hi = c.iter().max().expect("four products").clone();
        RatInterval { lo, hi }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Enclosure of `{P(x) : x in self}` by interval Horner.
    pub fn eval(&self, p: &IntPoly) -> Self {
        let mut acc = RatInterval::point(BigRational::zero());
        for c in p.coeffs().iter().rev() {
            let m = acc.mul(self);
            let c = BigRational::from_integer(c.clone());
            acc = RatInterval { lo: m.lo + &c, hi: m.hi + c };
        }
        acc
    }
}

/// A real algebraic number. The minimal polynomial is primitive,
/// irreducible, with positive leading coefficient, and has exactly one real
/// root in the open interval `(lo, hi)`, neither endpoint being a root.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    minpoly: IntPoly,
    lo: BigRational,
    hi: BigRational,
}

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

impl AlgebraicReal {
    pub fn from_rational(r: BigRational) -> Self {
        let minpoly = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        let one = BigRational::one();
        AlgebraicReal { minpoly, lo: &r - &one, hi: r + one }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub(crate) fn from_parts_unchecked(minpoly: IntPoly, lo: BigRational, hi: BigRational) -> Self {
        AlgebraicReal { minpoly, lo, hi }
    }

    /// Validating constructor: `minpoly` must be irreducible of positive
    /// degree with exactly one root in `(lo, hi)` and none at the endpoints.
    pub fn new(minpoly: &IntPoly, lo: BigRational, hi: BigRational) -> Result<Self, MathError> {
        if lo >= hi {
            return Err(MathError::InvalidAlgebraic("empty interval".into()));
        }
        if !is_irreducible_q(minpoly) {
            return Err(MathError::InvalidAlgebraic(format!("{minpoly} is not irreducible")));
        }
        let q = minpoly.primitive();
        if q.sign_at_rational(&lo) == 0 || q.sign_at_rational(&hi) == 0 {
            return Err(MathError::InvalidAlgebraic("interval endpoint is a root".into()));
        }
        let n = SturmSequence::new(&q).count_in(&lo, &hi);
        if n != 1 {
            return Err(MathError::InvalidAlgebraic(format!(
                "interval contains {n} roots of {q}, expected 1"
            )));
        }
        if q.deg() == 1 {
            return Ok(Self::from_rational(BigRational::new(-q.coeff(0), q.coeff(1))));
        }
        Ok(AlgebraicReal { minpoly: q, lo, hi })
    }

    /// The `k`-th real root (0-based, ascending) of an irreducible `q`.
    pub fn real_root(q: &IntPoly, k: usize) -> Result<Self, MathError> {
        let roots = super::roots::isolate_real_roots(q)?;
        if !is_irreducible_q(q) {
            return Err(MathError::InvalidAlgebraic(format!("{q} is not irreducible")));
        }
        roots
            .into_iter()
            .nth(k)
            .ok_or_else(|| MathError::InvalidAlgebraic(format!("{q} has fewer than {} real roots", k + 1)))
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn is_rational(&self) -> bool {
        self.minpoly.deg() == 1
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(-self.minpoly.coeff(0), self.minpoly.coeff(1)))
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_zero())
    }

    pub fn interval(&self) -> RatInterval {
        RatInterval { lo: self.lo.clone(), hi: self.hi.clone() }
    }

    /// Halve the isolating interval.
    pub fn refine(&mut self) {
        if let Some(r) = self.as_rational() {
            let w = (&self.hi - &self.lo) / BigRational::from_integer(BigInt::from(4));
            self.lo = &r - &w;
            self.hi = r + w;
            return;
        }
        let mid = (&self.lo + &self.hi) / two();
        let s_lo = self.minpoly.sign_at_rational(&self.lo);
        let s_mid = self.minpoly.sign_at_rational(&mid);
        debug_assert!(s_mid != 0, "irreducible of degree >= 2 has no rational root");
        if s_lo * s_mid < 0 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn refine_to_width(&mut self, w: &BigRational) {
        while &(&self.hi - &self.lo) > w {
            self.refine();
        }
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(r) = self.as_rational() {
            return r.to_f64().unwrap_or(f64::NAN);
        }
        let mut a = self.clone();
        let scale = a.lo.abs().max(a.hi.abs()).max(BigRational::one());
        let w = scale / BigRational::from_integer(BigInt::one() << 64u32);
        a.refine_to_width(&w);
        ((&a.lo + &a.hi) / two()).to_f64().unwrap_or(f64::NAN)
    }

    /// Sign of the number itself.
    pub fn sign(&self) -> i8 {
        if let Some(r) = self.as_rational() {
            return sign_of(&r);
        }
        let mut a = self.clone();
        while !a.lo.is_positive() && !a.hi.is_negative() {
            a.refine();
        }
        if a.lo.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn neg(&self) -> Self {
        if let Some(r) = self.as_rational() {
            return Self::from_rational(-r);
        }
        AlgebraicReal {
            minpoly: self.minpoly.negate_var().primitive(),
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    /// Exact equality of the represented numbers.
    pub fn equals(&self, o: &Self) -> bool {
        if self.minpoly != o.minpoly {
            return false;
        }
        if let (Some(a), Some(b)) = (self.as_rational(), o.as_rational()) {
            return a == b;
        }
        let lo = (&self.lo).max(&o.lo).clone();
        let hi = (&self.hi).min(&o.hi).clone();
        if lo >= hi {
            return false;
        }
        SturmSequence::new(&self.minpoly).count_in(&lo, &hi) == 1
    }

    /// Total order on values.
    pub fn cmp_value(&self, o: &Self) -> Ordering {
        if self.equals(o) {
            return Ordering::Equal;
        }
        if let (Some(a), Some(b)) = (self.as_rational(), o.as_rational()) {
            return a.cmp(&b);
        }
        let mut a = self.clone();
        let mut b = o.clone();
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            a.refine();
            b.refine();
        }
    }

    /// Compare with a rational.
    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        self.cmp_value(&Self::from_rational(q.clone()))
    }
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, o: &Self) -> bool {
        self.equals(o)
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, o: &Self) -> Ordering {
        self.cmp_value(o)
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{}", format_rational(&r)),
            None => write!(
                f,
                "{}:({},{})",
                self.minpoly,
                format_rational(&self.lo),
                format_rational(&self.hi)
            ),
        }
    }
}

/// Exact sign of `P(alpha)`.
pub fn sign_at(p: &IntPoly, alpha: &AlgebraicReal) -> i8 {
    if p.is_zero() {
        return 0;
    }
    if let Some(r) = alpha.as_rational() {
        return p.sign_at_rational(&r);
    }
    if p.prem(&alpha.minpoly).is_zero() {
        return 0;
    }
    let mut a = alpha.clone();
    loop {
        let img = a.interval().eval(p);
        if img.lo.is_positive() {
            return 1;
        }
        if img.hi.is_negative() {
            return -1;
        }
        a.refine();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    Sum,
    Product,
}

/// Pick the candidate factor vanishing at `x + y` (or `x * y`) and return
/// that value with an isolating interval from interval arithmetic.
pub fn refine_to_select(
    candidates: &[IntPoly],
    x: &AlgebraicReal,
    y: &AlgebraicReal,
    op: Combine,
) -> Result<AlgebraicReal, MathError> {
    if let (Some(a), Some(b)) = (x.as_rational(), y.as_rational()) {
        let v = match op {
            Combine::Sum => a + b,
            Combine::Product => a * b,
        };
        let hit = candidates
            .iter()
            .any(|c| c.deg() >= 1 && c.sign_at_rational(&v) == 0);
        return if hit { Ok(AlgebraicReal::from_rational(v)) } else { Err(MathError::NoCandidate) };
    }
    let cands: Vec<(IntPoly, SturmSequence)> = candidates
        .iter()
        .filter(|c| c.deg() >= 1)
        .map(|c| {
            let c = c.primitive();
            let s = SturmSequence::new(&c);
            (c, s)
        })
        .collect();
    let mut x = x.clone();
    let mut y = y.clone();
    for _ in 0..100_000 {
        let iv = match op {
            Combine::Sum => x.interval().add(&y.interval()),
            Combine::Product => x.interval().mul(&y.interval()),
        };
        let endpoint_root = cands
            .iter()
            .any(|(c, _)| c.sign_at_rational(&iv.lo) == 0 || c.sign_at_rational(&iv.hi) == 0);
        if !endpoint_root && iv.lo < iv.hi {
            let counts: Vec<usize> = cands.iter().map(|(_, s)| s.count_in(&iv.lo, &iv.hi)).collect();
            let total: usize = counts.iter().sum();
            if total == 0 {
                return Err(MathError::NoCandidate);
            }
            if total == 1 {
                let i = counts.iter().position(|&n| n == 1).expect("one hit");
                let c = &cands[i].0;
                if c.deg() == 1 {
                    return Ok(AlgebraicReal::from_rational(BigRational::new(
                        -c.coeff(0),
                        c.coeff(1),
                    )));
                }
                return Ok(AlgebraicReal::from_parts_unchecked(c.clone(), iv.lo, iv.hi));
            }
        }
        x.refine();
        y.refine();
    }
    Err(MathError::NoCandidate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{irreducible_factors, product_resultant, sum_resultant};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn sqrt(n: i64) -> AlgebraicReal {
        AlgebraicReal::real_root(&p(&[-n, 0, 1]), 1).unwrap()
    }

    #[test]
    fn sign_examples() {
        let s2 = sqrt(2);
        assert_eq!(sign_at(&p(&[-3, 0, 1]), &s2), -1);
        assert_eq!(sign_at(&p(&[-2, 0, 1]), &s2), 0);
        assert_eq!(sign_at(&p(&[-3, 0, 0, 1]), &s2), -1);
        assert_eq!(sign_at(&p(&[-2, 0, 0, 1]), &s2), 1);
        assert_eq!(sign_at(&p(&[0, 0, -2, 0, 1]), &s2), 0);
    }

    #[test]
    fn select_examples() {
        let (s2, s3) = (sqrt(2), sqrt(3));
        let c = irreducible_factors(&sum_resultant(s2.minpoly(), s3.minpoly()).unwrap());
        let v = refine_to_select(&c, &s2, &s3, Combine::Sum).unwrap();
        assert_eq!(v.minpoly(), &p(&[1, 0, -10, 0, 1]));
        assert!((v.to_f64() - (2f64.sqrt() + 3f64.sqrt())).abs() < 1e-12);

        let v = refine_to_select(&[p(&[0, 1]), p(&[-8, 0, 1])], &s2, &s2, Combine::Sum).unwrap();
        assert_eq!(v.minpoly(), &p(&[-8, 0, 1]));
        assert_eq!(v.sign(), 1);

        let v = refine_to_select(&[p(&[-2, 1]), p(&[2, 1])], &s2, &s2, Combine::Product).unwrap();
        assert_eq!(v.as_rational(), Some(BigRational::from_integer(2.into())));

        let c = irreducible_factors(&product_resultant(s2.minpoly(), s3.minpoly()).unwrap());
        let v = refine_to_select(&c, &s2, &s3.neg(), Combine::Product).unwrap();
        assert!((v.to_f64() + 6f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn no_candidate_is_error() {
        let s2 = sqrt(2);
        assert!(refine_to_select(&[p(&[-5, 1])], &s2, &s2, Combine::Sum).is_err());
    }

    #[test]
    fn ordering_and_equality() {
        let a = sqrt(2);
        let mut b = a.clone();
        b.refine();
        b.refine();
        assert_eq!(a, b);
        assert!(a < sqrt(3));
        assert!(a.neg() < AlgebraicReal::from_integer(0));
        assert_eq!(a.cmp_rational(&BigRational::new(141.into(), 100.into())), Ordering::Greater);
        assert_eq!(a.neg().neg(), a);
    }

    #[test]
    fn validating_constructor() {
        let ok = AlgebraicReal::new(&p(&[-2, 0, 1]), BigRational::one(), two());
        assert!(ok.is_ok());
        let two_roots = AlgebraicReal::new(&p(&[-2, 0, 1]), -two(), two());
        assert!(two_roots.is_err());
        assert!(AlgebraicReal::new(&p(&[-4, 0, 1]), BigRational::one(), two() + two()).is_err());
    }
}
