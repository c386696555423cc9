//! Points of Hom(Q[T], S) realised in the ordered field R(ε): `P` goes
//! to the sign of `P(ρ)` where `ρ = α + τ` with `τ` an infinitesimal of
//! known sign. Used to cross-check the side bookkeeping of the closed
//! forms.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{combine, SignError, SignPoint};
use crate::exactmath::{sign_at, AlgebraicReal, Combine, IntPoly};

/// Sign of `P(α + τ)` for an infinitesimal `τ` of sign `tau`, read off the
/// first nonvanishing Taylor term `P^{(k)}(α) τ^k / k!`.
pub fn eps_sign(p: &IntPoly, alpha: &AlgebraicReal, tau: i8) -> i8 {
    let mut d = p.clone();
    let mut k = 0u32;
    while !d.is_zero() {
        let s = sign_at(&d, alpha);
        if s != 0 {
            return s * tau.pow(k);
        }
        if tau == 0 {
            return 0;
        }
        d = d.derivative();
        k += 1;
    }
    0
}

/// Test polynomials around `α`: powers of its minimal polynomial, their
/// products with linear factors on both sides of `α`, and the cut
/// polynomials `T - a` at the ends of an isolating interval.
pub fn probe_polynomials(alpha: &AlgebraicReal) -> Vec<IntPoly> {
    let m = alpha.minpoly().clone();
    let mut a = alpha.clone();
    a.refine_to_width(&BigRational::new(BigInt::one(), BigInt::from(64)));
    let lin = |q: &BigRational| IntPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
    let (below, above) = (lin(a.lo()), lin(a.hi()));
    vec![
        m.clone(),
        &m * &m,
        &(&m * &m) * &m,
        &m * &below,
        &m * &above,
        &(&m * &m) * &above,
        m.derivative(),
        below,
        above,
        IntPoly::from_i64s(&[1, 1, 1]),
    ]
}

fn realise(alpha: &AlgebraicReal, tau: i8, probes: &[IntPoly]) -> Vec<i8> {
    probes.iter().map(|p| eps_sign(p, alpha, tau)).collect()
}

fn scaled(a: &AlgebraicReal, k: i64) -> Result<AlgebraicReal, SignError> {
    combine(a, &AlgebraicReal::from_integer(k), Combine::Product)
}

/// Sign of `k1 a1 + k2 a2`.
fn sign_of_combination(a1: &AlgebraicReal, k1: i64, a2: &AlgebraicReal, k2: i64) -> Result<i8, SignError> {
    if k1 == 0 || a1.is_zero() {
        return Ok(a2.sign() * k2.signum() as i8);
    }
    if k2 == 0 || a2.is_zero() {
        return Ok(a1.sign() * k1.signum() as i8);
    }
    let (u, v) = (scaled(a1, k1)?, scaled(a2, -k2)?);
    Ok(match u.cmp_value(&v) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Less => -1,
    })
}

/// All sign vectors on `probes` of the points `ρ1 ∘ ρ2` with `ρj = αj +
/// tj εj`, for independent positive infinitesimals `εj`. The ratio
/// `ε2 / ε1` runs over `1/2, 1, 2`; for products whose first-order terms
/// `α2 t1 ε1` and `α1 t2 ε2` have opposite signs it also runs over powers
/// of 2 until both signs of `ρ1 ρ2 - α1 α2` have been seen, and `ε2` is
/// taken as the rational function of `ε1` making `ρ1 ρ2 = α1 α2` exactly.
pub fn eps_oracle(x: &SignPoint, y: &SignPoint, op: Combine, probes: &[IntPoly]) -> Result<BTreeSet<Vec<i8>>, SignError> {
    let (a1, a2) = (x.finite_re()?, y.finite_re()?);
    let (t1, t2) = (x.side() as i64, y.side() as i64);
    let alpha = combine(a1, a2, op)?;
    let product_tau = |l1: i64, l2: i64| -> Result<i8, SignError> {
        Ok(match sign_of_combination(a1, l2 * t2, a2, l1 * t1)? {
            // Both first-order terms vanish: ρ1 ρ2 - α = t1 t2 ε1 ε2.
            0 => (t1 * t2).signum() as i8,
            s => s,
        })
    };
    let mut taus = BTreeSet::new();
    for (l1, l2) in [(1, 1), (1, 2), (2, 1)] {
        taus.insert(match op {
            Combine::Sum => (l1 * t1 + l2 * t2).signum() as i8,
            Combine::Product => product_tau(l1, l2)?,
        });
    }
    if op == Combine::Product && (a2.sign() as i64 * t1) * (a1.sign() as i64 * t2) < 0 {
        taus.insert(0);
        let mut l = 4i64;
        while !(taus.contains(&1) && taus.contains(&-1)) {
            taus.insert(product_tau(1, l)?);
            taus.insert(product_tau(l, 1)?);
            l = l.checked_mul(2).expect("ratio of nonzero algebraic numbers is finite");
        }
    }
    Ok(taus.into_iter().map(|tau| realise(&alpha, tau, probes)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec_s::{s_add, s_mul};

    fn sqrt(n: i64) -> AlgebraicReal {
        AlgebraicReal::real_root(&IntPoly::from_i64s(&[-n, 0, 1]), 1).unwrap()
    }

    fn closed_form(v: &[SignPoint], probes: &[IntPoly]) -> BTreeSet<Vec<i8>> {
        v.iter().map(|z| probes.iter().map(|p| z.eval(p)).collect()).collect()
    }

    #[test]
    fn taylor_signs() {
        let t2 = IntPoly::from_i64s(&[-2, 0, 1]);
        assert_eq!(eps_sign(&t2, &sqrt(2), 1), 1);
        assert_eq!(eps_sign(&t2, &sqrt(2), -1), -1);
        assert_eq!(eps_sign(&(&t2 * &t2), &sqrt(2), -1), 1);
        assert_eq!(eps_sign(&t2, &sqrt(2), 0), 0);
    }

    #[test]
    fn matches_closed_forms() {
        let pts = [
            SignPoint::OmegaSide(sqrt(2), 1),
            SignPoint::OmegaSide(sqrt(2).neg(), -1),
            SignPoint::Omega(sqrt(3)),
            SignPoint::OmegaSide(AlgebraicReal::from_integer(0), -1),
            SignPoint::Omega(AlgebraicReal::from_integer(0)),
            SignPoint::OmegaSide(AlgebraicReal::from_integer(-1), 1),
        ];
        for x in &pts {
            for y in &pts {
                for (op, f) in [(Combine::Sum, s_add as fn(&SignPoint, &SignPoint) -> _), (Combine::Product, s_mul)] {
                    let got = f(x, y).unwrap();
                    let probes = probe_polynomials(got[0].finite_re().unwrap());
                    assert_eq!(closed_form(&got, &probes), eps_oracle(x, y, op, &probes).unwrap(), "{x} {op:?} {y}");
                }
            }
        }
    }

    #[test]
    fn unbalanced_product_keeps_all_sides() {
        // |α2 t1| = 2 against |α1 t2| = 2/3, so the flip sits at ε2 = 3 ε1.
        let x = SignPoint::OmegaSide(AlgebraicReal::real_root(&IntPoly::from_i64s(&[2, 3]), 0).unwrap(), -1);
        let y = SignPoint::OmegaSide(AlgebraicReal::from_integer(-2), 1);
        let got = s_mul(&x, &y).unwrap();
        assert_eq!(got.len(), 3);
        let probes = probe_polynomials(got[0].finite_re().unwrap());
        assert_eq!(closed_form(&got, &probes), eps_oracle(&x, &y, Combine::Product, &probes).unwrap());
    }
}
