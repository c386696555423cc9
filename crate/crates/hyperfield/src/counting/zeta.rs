//! Hasse–Weil zeta functions of toy counting functions and their q → 1 limit.

use num_traits::Float;

use super::{lit, quad, CountingError, Kahan};

/// A point-counting function N(q), polynomial in q.
#[derive(Clone, Debug, PartialEq)]
pub enum CountingFn {
    /// N(q) = q + 1.
    P1,
    /// N(q) = q.
    AffineLine,
    /// N(q) = Σ c_k q^k, coefficients in ascending order.
    Polynomial(Vec<f64>),
}

impl CountingFn {
    pub fn coeffs(&self) -> Vec<f64> {
        let mut c = match self {
            CountingFn::P1 => vec![1.0, 1.0],
            CountingFn::AffineLine => vec![0.0, 1.0],
            CountingFn::Polynomial(c) => c.clone(),
        };
        while c.last() == Some(&0.0) {
            c.pop();
        }
        c
    }

    /// Degree, with the zero function reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs().len().saturating_sub(1)
    }

    pub fn eval<F: Float>(&self, q: F) -> F {
        self.coeffs().iter().rev().fold(F::zero(), |acc, &c| acc * q + lit(c))
    }

    /// −∂_s log ζ_N(s) = Σ c_k / (s − k), valid for s > deg N.
    pub fn logderiv_closed<F: Float>(&self, s: F) -> F {
        self.coeffs()
            .iter()
            .enumerate()
            .fold(F::zero(), |acc, (k, &c)| acc + lit::<F>(c) / (s - lit(k as f64)))
    }
}

/// A truncated series value with the magnitude of its last retained term.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesValue<F> {
    pub value: F,
    pub last_term: F,
}

/// Σ_{r ≤ rmax} N(q^r) T^r / r.
fn log_z<F: Float>(n: &CountingFn, q: F, t: F, rmax: u64) -> Result<(F, F), CountingError> {
    if q < F::one() {
        return Err(CountingError::Domain(format!("q = {:?} must be at least 1", q.to_f64())));
    }
    let ratio = t.abs() * q.powi(n.degree() as i32);
    if ratio >= F::one() || t.abs() >= F::one() {
        return Err(CountingError::Divergent(format!(
            "|T| q^deg = {:?} is not below 1",
            ratio.to_f64()
        )));
    }
    let (lq, lt) = (q.ln(), t.abs().ln());
    let neg = t < F::zero();
    let c = n.coeffs();
    let mut acc = Kahan::new();
    let mut last = F::zero();
    for r in 1..=rmax {
        let rf: F = lit(r as f64);
        // N(q^r) T^r = Σ c_k e^{r (k log q + log|T|)}, each exponent kept below 0.
        let mut term = c
            .iter()
            .enumerate()
            .fold(F::zero(), |a, (k, &ck)| a + lit::<F>(ck) * (rf * (lit::<F>(k as f64) * lq + lt)).exp());
        if neg && r % 2 == 1 {
            term = -term;
        }
        last = term / rf;
        acc.add(last);
    }
    Ok((acc.sum(), last.abs()))
}

/// Z(q, T) = exp(Σ_{r ≥ 1} N(q^r) T^r / r), truncated at `rmax`.
pub fn hasse_weil_z<F: Float>(n: &CountingFn, q: F, t: F, rmax: u64) -> Result<SeriesValue<F>, CountingError> {
    let (s, last) = log_z(n, q, t, rmax)?;
    let value = s.exp();
    Ok(SeriesValue { value, last_term: value * last })
}

/// Z(q, q^{−s}) (q − 1)^{N(1)} at one q close to 1, with enough terms that
/// the geometric tail is below double precision.
pub fn soule_zeta_limit<F: Float>(n: &CountingFn, s: F, q: F) -> Result<F, CountingError> {
    let one = F::one();
    if q <= one {
        return Err(CountingError::Domain("q must exceed 1".into()));
    }
    let d: F = lit(n.degree() as f64);
    if s <= d {
        return Err(CountingError::Domain(format!("s must exceed deg N = {:?}", d.to_f64())));
    }
    let lq = q.ln();
    let decay = (s - d) * lq;
    let rmax = (lit::<F>(40.0) / decay).ceil();
    if rmax > lit(5e8) {
        return Err(CountingError::Divergent(format!("q too close to 1 for s = {:?}", s.to_f64())));
    }
    let (logz, _) = log_z(n, q, (-s * lq).exp(), rmax.to_u64().unwrap_or(1))?;
    Ok((logz + n.eval(one) * (q - one).ln()).exp())
}

/// ∫_1^∞ N(u) u^{−s} d*u by quadrature.
pub fn logderiv_integral<F: Float>(n: &CountingFn, s: F) -> Result<F, CountingError> {
    let d: F = lit(n.degree() as f64);
    if s <= d {
        return Err(CountingError::Domain("the integral needs s > deg N".into()));
    }
    let c = n.coeffs();
    // u = e^v turns d*u into dv; each monomial is summed as c_k e^{(k − s) v}.
    quad::integrate_half_line(
        |v: F| c.iter().enumerate().fold(F::zero(), |acc, (k, &ck)| acc + lit::<F>(ck) * ((lit::<F>(k as f64) - s) * v).exp()),
        lit(1e-12),
    )
}

/// Quadrature of ∫_1^∞ N(u) u^{−s} d*u minus −∂_s log ζ_N(s).
pub fn logderiv_integral_check<F: Float>(n: &CountingFn, s: F) -> Result<F, CountingError> {
    Ok(logderiv_integral(n, s)? - n.logderiv_closed(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p1_product_formula() {
        for (q, t) in [(2.0, 0.3), (3.0, -0.2), (1.5, 0.5)] {
            let z = hasse_weil_z(&CountingFn::P1, q, t, 400).unwrap();
            let closed = 1.0 / ((1.0 - q * t) * (1.0 - t));
            assert!((z.value - closed).abs() < 1e-10, "{q} {t}");
            let a = hasse_weil_z(&CountingFn::AffineLine, q, t, 400).unwrap();
            assert!((a.value - 1.0 / (1.0 - q * t)).abs() < 1e-10);
        }
        assert_eq!(hasse_weil_z(&CountingFn::Polynomial(vec![]), 2.0, 0.4, 50).unwrap().value, 1.0);
        assert!(hasse_weil_z(&CountingFn::P1, 2.0, 0.5, 50).is_err());
        let z = hasse_weil_z(&CountingFn::Polynomial(vec![1.0, 1.0, 1.0]), 2.0, 0.1, 5000).unwrap();
        assert!((z.value - 1.0 / (0.9 * 0.8 * 0.6)).abs() < 1e-10);
    }

    #[test]
    fn soule_limits() {
        let q = 1.0 + 1e-5;
        for s in [2.0, 3.0, 4.0] {
            let v = soule_zeta_limit(&CountingFn::P1, s, q).unwrap();
            assert!((v - 1.0 / (s * (s - 1.0))).abs() < 1e-3, "s = {s}: {v}");
        }
        let v = soule_zeta_limit(&CountingFn::AffineLine, 2.0, q).unwrap();
        assert!((v - 1.0).abs() < 1e-3);
        assert!(soule_zeta_limit(&CountingFn::P1, 1.0, q).is_err());
    }

    #[test]
    fn logderiv_matches() {
        assert!(logderiv_integral_check(&CountingFn::P1, 3.0).unwrap().abs() < 1e-6);
        assert!((logderiv_integral(&CountingFn::P1, 3.0).unwrap() - 5.0 / 6.0).abs() < 1e-6);
        assert!((logderiv_integral(&CountingFn::AffineLine, 3.0).unwrap() - 0.5).abs() < 1e-6);
        assert_eq!(logderiv_integral_check(&CountingFn::Polynomial(vec![0.0]), 3.0).unwrap(), 0.0);
    }
}
