//! Real-root counting with Sturm sequences and isolation by bisection.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::algebraic::AlgebraicReal;
use super::factor_q::irreducible_factors;
use super::poly::{sign_of, IntPoly};
use super::MathError;

#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn new(f: &IntPoly) -> Self {
        let mut seq = vec![f.clone()];
        if f.is_zero() || f.deg() == 0 {
            return SturmSequence { seq };
        }
        seq.push(f.derivative());
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.deg() == 0 {
                break;
            }
            // prem = lc(b)^k * rem; keep the sign of -rem.
            let k = a.deg() - b.deg() + 1;
            let mut r = a.prem(b);
            if r.is_zero() {
                break;
            }
            let flip = b.lc().is_negative() && k % 2 == 1;
            if !flip {
                r = -r;
            }
            let c = r.content();
            let r = IntPoly::new(r.coeffs().iter().map(|x| x / &c).collect());
            seq.push(r);
        }
        SturmSequence { seq }
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(
            self.seq
                .iter()
                .map(|p| sign_of(&p.eval_homogeneous(x.numer(), x.denom()))),
        )
    }

    /// Variations at `+inf` (`positive = true`) or `-inf`.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.seq.iter().map(|p| {
            let s = sign_of(&p.lc());
            if positive || p.deg() % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count_in(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

/// A power of two strictly exceeding every root modulus (Cauchy bound).
pub(crate) fn root_bound(f: &IntPoly) -> BigRational {
    let lc = f.lc().abs();
    let m = f.coeffs()[..f.deg()]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let bound = BigRational::one() + BigRational::new(m, lc);
    let mut b = BigRational::one();
    while b <= bound {
        b *= BigRational::from_integer(BigInt::from(2));
    }
    b
}

/// Isolating intervals for the real roots of an irreducible `q` of degree
/// at least two (so rational points are never roots).
pub(crate) fn isolate_irreducible(q: &IntPoly) -> Vec<(BigRational, BigRational)> {
    let sturm = SturmSequence::new(q);
    let b = root_bound(q);
    let mut stack = vec![(-b.clone(), b)];
    let mut out = Vec::new();
    let two = BigRational::from_integer(BigInt::from(2));
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count_in(&lo, &hi) {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort();
    out
}

/// One `AlgebraicReal` per real root of a squarefree `f`, sorted, with
/// pairwise disjoint isolating intervals.
pub fn isolate_real_roots(f: &IntPoly) -> Result<Vec<AlgebraicReal>, MathError> {
    if f.is_zero() {
        return Err(MathError::ZeroPolynomial);
    }
    if !f.is_squarefree() {
        return Err(MathError::NotSquarefree);
    }
    let mut roots = Vec::new();
    for q in irreducible_factors(f) {
        if q.deg() == 1 {
            roots.push(AlgebraicReal::from_rational(BigRational::new(
                -q.coeff(0),
                q.coeff(1),
            )));
        } else {
            for (lo, hi) in isolate_irreducible(&q) {
                roots.push(AlgebraicReal::from_parts_unchecked(q.clone(), lo, hi));
            }
        }
    }
    roots.sort_by(|a, b| a.cmp_value(b));
    // Separate neighbouring intervals.
    for i in 1..roots.len() {
        let (left, right) = roots.split_at_mut(i);
        let a = left.last_mut().expect("nonempty");
        let b = &mut right[0];
        while a.hi() >= b.lo() {
            a.refine();
            b.refine();
        }
    }
    Ok(roots)
}
