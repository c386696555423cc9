//! Points of Hom(Q[T], S): evaluation at real algebraic numbers and their
//! one-sided neighbourhoods, the map `Re`, the hyperoperations of sum and
//! product, and the glued hypergroups `A ×_{B^c} S`.

mod eps;
mod glue;

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::exactmath::{
    format_rational, format_sig, irreducible_factors, parse_poly, parse_rational, product_resultant, refine_to_select,
    sign_at, sum_resultant, AlgebraicReal, Combine, IntPoly, MathError,
};
use crate::hypercore::TableError;

pub use eps::{eps_oracle, eps_sign, probe_polynomials};
pub use glue::{glue_build, GluedHypergroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SignError {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("hyperoperations are not defined at infinite Re")]
    Infinite,
    #[error("sigma needs Re != 0")]
    ZeroRe,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("cannot parse point {0:?}: {1}")]
    Parse(String, String),
}

/// `a + b` in the hyperfield of signs.
pub fn sign_sum(a: i8, b: i8) -> Vec<i8> {
    if a == 0 {
        vec![b]
    } else if b == 0 || a == b {
        vec![a]
    } else {
        vec![-1, 0, 1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignPoint {
    /// `ω_{±∞}`: sign of `P` near `±∞`.
    OmegaInf(i8),
    /// `ω_α(P) = Sign P(α)`.
    Omega(AlgebraicReal),
    /// `ω_α^±(P) = lim Sign P(α ± ε)`, side `±1`.
    OmegaSide(AlgebraicReal, i8),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReValue {
    NegInf,
    Finite(AlgebraicReal),
    PosInf,
}

impl SignPoint {
    /// `Omega(α)` for side 0, else `OmegaSide(α, side)`.
    pub fn at(alpha: AlgebraicReal, side: i8) -> Self {
        match side.signum() {
            0 => SignPoint::Omega(alpha),
            s => SignPoint::OmegaSide(alpha, s),
        }
    }

    /// Side tag in S: 0 for `Omega`.
    pub fn side(&self) -> i8 {
        match self {
            SignPoint::OmegaInf(s) | SignPoint::OmegaSide(_, s) => *s,
            SignPoint::Omega(_) => 0,
        }
    }

    pub fn finite_re(&self) -> Result<&AlgebraicReal, SignError> {
        match self {
            SignPoint::OmegaInf(_) => Err(SignError::Infinite),
            SignPoint::Omega(a) | SignPoint::OmegaSide(a, _) => Ok(a),
        }
    }

    pub fn re(&self) -> ReValue {
        match self {
            SignPoint::OmegaInf(s) if *s < 0 => ReValue::NegInf,
            SignPoint::OmegaInf(_) => ReValue::PosInf,
            SignPoint::Omega(a) | SignPoint::OmegaSide(a, _) => ReValue::Finite(a.clone()),
        }
    }

    pub fn eval(&self, p: &IntPoly) -> i8 {
        if p.is_zero() {
            return 0;
        }
        match self {
            SignPoint::OmegaInf(s) => {
                let lc = if p.lc() > Zero::zero() { 1 } else { -1 };
                if *s < 0 && p.deg() % 2 == 1 {
                    -lc
                } else {
                    lc
                }
            }
            SignPoint::Omega(a) => sign_at(p, a),
            SignPoint::OmegaSide(a, s) => {
                let m = a.minpoly();
                let (mut q, mut k) = (p.clone(), 0u32);
                while let Some(r) = q.div_exact(m) {
                    q = r;
                    k += 1;
                }
                let lin = sign_at(&m.derivative(), a) * s;
                sign_at(&q, a) * lin.pow(k)
            }
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            SignPoint::OmegaInf(s) => SignPoint::OmegaInf(-s),
            SignPoint::Omega(a) => SignPoint::Omega(a.neg()),
            SignPoint::OmegaSide(a, s) => SignPoint::OmegaSide(a.neg(), -s),
        }
    }

    /// `omega[+|-]:<value>` with value `+inf`, `-inf`, a rational, or
    /// `minpoly:(lo,hi)`.
    pub fn parse(text: &str) -> Result<Self, SignError> {
        let err = |m: &str| SignError::Parse(text.to_string(), m.to_string());
        let (head, rest) = text.trim().split_once(':').ok_or_else(|| err("expected omega:<value>"))?;
        let side = match head {
            "omega" => 0,
            "omega+" => 1,
            "omega-" => -1,
            _ => return Err(err("prefix must be omega, omega+ or omega-")),
        };
        match rest.trim() {
            "+inf" | "inf" => return Ok(SignPoint::OmegaInf(1)),
            "-inf" => return Ok(SignPoint::OmegaInf(-1)),
            _ => {}
        }
        let alpha = match rest.split_once(':') {
            None => AlgebraicReal::from_rational(parse_rational(rest)?),
            Some((poly, iv)) => {
                let q = parse_poly(poly)?;
                let iv = iv.trim().strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(|| err("interval must be (lo,hi)"))?;
                let (lo, hi) = iv.split_once(',').ok_or_else(|| err("interval must be (lo,hi)"))?;
                AlgebraicReal::new(&q, parse_rational(lo)?, parse_rational(hi)?)?
            }
        };
        Ok(SignPoint::at(alpha, side))
    }
}

fn format_alpha(a: &AlgebraicReal) -> String {
    match a.as_rational() {
        Some(r) => format_rational(&r),
        None => format!("{} @ {}", a.minpoly(), format_sig(a.to_f64(), 12)),
    }
}

impl fmt::Display for SignPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignPoint::OmegaInf(s) => write!(f, "omega({}inf)", if *s < 0 { "-" } else { "+" }),
            SignPoint::Omega(a) => write!(f, "omega({})", format_alpha(a)),
            SignPoint::OmegaSide(a, s) => write!(f, "omega{}({})", if *s < 0 { "-" } else { "+" }, format_alpha(a)),
        }
    }
}

/// Order by value of Re, then by side `-, 0, +`.
pub fn canonical_sort(v: &mut [SignPoint]) {
    let key = |p: &SignPoint| match p {
        SignPoint::OmegaInf(s) => (*s, None),
        SignPoint::Omega(a) | SignPoint::OmegaSide(a, _) => (0, Some(a.clone())),
    };
    v.sort_by(|x, y| {
        let (kx, ky) = (key(x), key(y));
        kx.0.cmp(&ky.0)
            .then_with(|| match (&kx.1, &ky.1) {
                (Some(a), Some(b)) => a.cmp_value(b),
                _ => Ordering::Equal,
            })
            .then(x.side().cmp(&y.side()))
    });
}

fn combine(x: &AlgebraicReal, y: &AlgebraicReal, op: Combine) -> Result<AlgebraicReal, SignError> {
    let r = match op {
        Combine::Sum => sum_resultant(x.minpoly(), y.minpoly())?,
        Combine::Product => product_resultant(x.minpoly(), y.minpoly())?,
    };
    Ok(refine_to_select(&irreducible_factors(&r), x, y, op)?)
}

fn points_at(alpha: &AlgebraicReal, sides: Vec<i8>) -> Vec<SignPoint> {
    let mut v: Vec<SignPoint> = sides.into_iter().map(|s| SignPoint::at(alpha.clone(), s)).collect();
    canonical_sort(&mut v);
    v
}

pub fn s_add(x: &SignPoint, y: &SignPoint) -> Result<Vec<SignPoint>, SignError> {
    let alpha = combine(x.finite_re()?, y.finite_re()?, Combine::Sum)?;
    Ok(points_at(&alpha, sign_sum(x.side(), y.side())))
}

pub fn s_mul(x: &SignPoint, y: &SignPoint) -> Result<Vec<SignPoint>, SignError> {
    let (a1, a2) = (x.finite_re()?, y.finite_re()?);
    let t = IntPoly::var();
    if a1.is_zero() {
        return Ok(vec![SignPoint::at(a1.clone(), x.side() * y.eval(&t))]);
    }
    if a2.is_zero() {
        return Ok(vec![SignPoint::at(a2.clone(), y.side() * x.eval(&t))]);
    }
    let alpha = combine(a1, a2, Combine::Product)?;
    Ok(points_at(&alpha, sign_sum(a2.sign() * x.side(), a1.sign() * y.side())))
}

/// The Re value of a finite point, as an element of R.
pub fn quotient_to_r(x: &SignPoint) -> Result<AlgebraicReal, SignError> {
    x.finite_re().cloned()
}

/// `σ(ω_α^s) = (α, sign(α) s)` into `R^× ×_{Q̄^c} S`.
pub fn sigma(x: &SignPoint) -> Result<(AlgebraicReal, i8), SignError> {
    let a = x.finite_re()?;
    if a.is_zero() {
        return Err(SignError::ZeroRe);
    }
    Ok((a.clone(), a.sign() * x.side()))
}

/// Whether `σ(x ⋆ y) = σ(x) σ(y)`, the right side taken in the glued
/// product: values multiply, tags add in S.
pub fn sigma_check(x: &SignPoint, y: &SignPoint) -> Result<bool, SignError> {
    let (ax, tx) = sigma(x)?;
    let (ay, ty) = sigma(y)?;
    let mut got: Vec<i8> = Vec::new();
    for z in s_mul(x, y)? {
        let (az, tz) = sigma(&z)?;
        let want = combine(&ax, &ay, Combine::Product)?;
        if !az.equals(&want) {
            return Ok(false);
        }
        got.push(tz);
    }
    got.sort();
    let mut want = sign_sum(tx, ty);
    want.sort();
    Ok(got == want)
}

/// Rational probes away from Re satisfying the cut property: `T - a` is
/// positive below Re and negative above.
pub fn cut_holds(x: &SignPoint, probes: &[BigRational]) -> bool {
    probes.iter().all(|a| {
        let p = IntPoly::new(vec![-a.numer().clone(), a.denom().clone()]);
        let v = x.eval(&p);
        match x.re() {
            ReValue::PosInf => v == 1,
            ReValue::NegInf => v == -1,
            ReValue::Finite(r) => match r.cmp_rational(a) {
                Ordering::Greater => v == 1,
                Ordering::Less => v == -1,
                Ordering::Equal => true,
            },
        }
    })
}
