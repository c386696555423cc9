//! Resultants by the subresultant polynomial remainder sequence.

use num_bigint::BigInt;

use super::poly::{Coeff, IntPoly, Poly};
use super::MathError;

fn pow<C: Coeff>(c: &C, e: usize) -> C {
    let mut acc = C::one();
    for _ in 0..e {
        acc = acc * c.clone();
    }
    acc
}

/// `Res_T(a, b)` over any coefficient domain with exact division.
pub fn resultant<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> Result<C, MathError> {
    if a.is_zero() || b.is_zero() {
        return Err(MathError::UndefinedResultant);
    }
    let mut a = a.clone();
    let mut b = b.clone();
    let mut s = C::one();
    if a.deg() < b.deg() {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.deg() == 0 {
        return Ok(s * pow(&b.lc(), a.deg()));
    }
    let mut g = C::one();
    let mut h = C::one();
    loop {
        let delta = a.deg() - b.deg();
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
        let r = a.prem(&b);
        if r.is_zero() {
            return Ok(C::zero());
        }
        let denom = g.clone() * pow(&h, delta);
        a = b;
        b = r
            .div_exact(&Poly::constant(denom))
            .expect("subresultant division is exact");
        g = a.lc();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => pow(&g, d)
                .exact_div(&pow(&h, d - 1))
                .expect("subresultant h-update is exact"),
        };
        if b.deg() == 0 {
            let da = a.deg();
            let lb = b.lc();
            let last = if da == 1 {
                lb
            } else {
                pow(&lb, da)
                    .exact_div(&pow(&h, da - 1))
                    .expect("final subresultant step is exact")
            };
            return Ok(s * last);
        }
    }
}

/// Lift `q(T)` into `Z[Z][T]` with constant inner coefficients.
pub fn lift_const(q: &IntPoly) -> Poly<IntPoly> {
    Poly::new(q.coeffs().iter().map(|c| IntPoly::constant(c.clone())).collect())
}

/// `q(Z - T)` as a polynomial in `T` over `Z[Z]`.
pub fn shift_sub(q: &IntPoly) -> Poly<IntPoly> {
    let z_minus_t = Poly::new(vec![IntPoly::var(), IntPoly::constant(BigInt::from(-1))]);
    let mut acc: Poly<IntPoly> = Poly::zero();
    for c in q.coeffs().iter().rev() {
        acc = &(&acc * &z_minus_t) + &Poly::constant(IntPoly::constant(c.clone()));
    }
    acc
}

/// `T^m q(Z/T)` with `m = deg q`, as a polynomial in `T` over `Z[Z]`.
pub fn reciprocal_scale(q: &IntPoly) -> Poly<IntPoly> {
    let m = q.deg();
    let mut v = vec![IntPoly::zero(); m + 1];
    for (i, c) in q.coeffs().iter().enumerate() {
        v[m - i] = IntPoly::monomial(c.clone(), i);
    }
    Poly::new(v)
}

/// `Res_T(q1(T), q2(Z - T))`: vanishes at all sums of roots.
pub fn sum_resultant(q1: &IntPoly, q2: &IntPoly) -> Result<IntPoly, MathError> {
    resultant(&lift_const(q1), &shift_sub(q2))
}

/// `Res_T(q1(T), T^m q2(Z/T))`: vanishes at all products of roots.
pub fn product_resultant(q1: &IntPoly, q2: &IntPoly) -> Result<IntPoly, MathError> {
    resultant(&lift_const(q1), &reciprocal_scale(q2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Sylvester matrix of `a`, `b` with entries in `C`.
    fn sylvester<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> Vec<Vec<C>> {
        let (m, n) = (a.deg(), b.deg());
        let size = m + n;
        let mut rows = Vec::new();
        for i in 0..n {
            let mut row = vec![C::zero(); size];
            for j in 0..=m {
                row[i + j] = a.coeff(m - j);
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![C::zero(); size];
            for j in 0..=n {
                row[i + j] = b.coeff(n - j);
            }
            rows.push(row);
        }
        rows
    }

    /// Determinant by cofactor expansion; independent of the PRS code.
    fn det<C: Coeff>(m: &[Vec<C>]) -> C {
        let n = m.len();
        if n == 0 {
            return C::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = C::zero();
        for col in 0..n {
            if m[0][col].is_zero() {
                continue;
            }
            let minor: Vec<Vec<C>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != col)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = m[0][col].clone() * det(&minor);
            acc = if col % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    #[test]
    fn sum_resultant_sqrt2_sqrt3() {
        let r = sum_resultant(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])).unwrap();
        assert_eq!(r, p(&[1, 0, -10, 0, 1]));
        let oracle = det(&sylvester(&lift_const(&p(&[-2, 0, 1])), &shift_sub(&p(&[-3, 0, 1]))));
        assert_eq!(r, oracle);
    }

    #[test]
    fn sum_resultant_repeated_root() {
        let r = sum_resultant(&p(&[-2, 0, 1]), &p(&[-2, 0, 1])).unwrap();
        assert_eq!(r, p(&[0, 0, -8, 0, 1]));
    }

    #[test]
    fn linear_factor_evaluates() {
        // Res(T - 3, g) = ±g(3).
        let g = p(&[5, -1, 2, 1]);
        let r = resultant(&p(&[-3, 1]), &g).unwrap();
        let v = g.eval(&BigInt::from(3));
        assert!(r == v || r == -v);
    }

    #[test]
    fn zero_input_is_error() {
        assert!(resultant(&IntPoly::zero(), &p(&[1, 1])).is_err());
    }

    #[test]
    fn product_resultant_sqrt2() {
        let r = product_resultant(&p(&[-2, 0, 1]), &p(&[-2, 0, 1])).unwrap();
        // Products of ±√2 pairs: 2, 2, -2, -2.
        assert_eq!(r, p(&[-4, 0, 1]).pow(2));
    }

    #[test]
    fn prs_matches_sylvester_on_integers() {
        let cases = [
            (p(&[1, 2, 3]), p(&[4, 5])),
            (p(&[-7, 0, 2, 1]), p(&[3, -1, 0, 0, 2])),
            (p(&[1, 1, 1, 1, 1]), p(&[2, 0, -3])),
            (p(&[0, 1]), p(&[5, 6, 7])),
            (p(&[2, 4]), p(&[1, 2])),
        ];
        for (a, b) in cases {
            let r = resultant(&a, &b).unwrap();
            assert_eq!(r, det(&sylvester(&a, &b)), "{a:?} {b:?}");
            let swapped = resultant(&b, &a).unwrap();
            let sign = if a.deg() * b.deg() % 2 == 1 { -r.clone() } else { r.clone() };
            assert_eq!(swapped, sign);
        }
        assert!(resultant(&p(&[2, 4]), &p(&[1, 2])).unwrap().is_zero());
    }

    #[test]
    fn prs_matches_sylvester_bivariate() {
        let q1 = p(&[1, -3, 0, 2]);
        let q2 = p(&[-1, 1, 1]);
        let a = lift_const(&q1);
        for b in [shift_sub(&q2), reciprocal_scale(&q2)] {
            assert_eq!(resultant(&a, &b).unwrap(), det(&sylvester(&a, &b)));
        }
    }
}
