//! The counting distribution N(u) attached to the zeros of ζ, the weighted
//! von Mangoldt staircase, the κ principal value and the Soulé zeta limit.
//!
//! Zero sums pair ρ = 1/2 + iγ with its conjugate and take 2·Re of the upper
//! term. All zeros are treated as simple.

// Domain checks are written `!(x > a)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constants;
pub mod quad;
pub mod zeta;

use std::path::Path;

use num_traits::{Float, ToPrimitive};
use thiserror::Error;

pub use zeta::{hasse_weil_z, logderiv_integral, logderiv_integral_check, soule_zeta_limit, CountingFn, SeriesValue};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CountingError {
    #[error("requested {m} zeros but only {available} are loaded")]
    TooFewZeros { m: usize, available: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("divergent series: {0}")]
    Divergent(String),
    #[error("not integrable: {0}")]
    NotIntegrable(String),
    #[error("zeros line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io: {0}")]
    Io(String),
}

pub(crate) fn lit<F: Float>(x: f64) -> F {
    F::from(x).expect("f64 literal representable")
}

/// Neumaier's compensated sum.
#[derive(Clone, Copy, Debug)]
pub struct Kahan<F> {
    sum: F,
    comp: F,
}

impl<F: Float> Kahan<F> {
    pub fn new() -> Self {
        Kahan { sum: F::zero(), comp: F::zero() }
    }

    pub fn add(&mut self, x: F) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp = self.comp + ((self.sum - t) + x);
        } else {
            self.comp = self.comp + ((x - t) + self.sum);
        }
        self.sum = t;
    }

    pub fn sum(&self) -> F {
        self.sum + self.comp
    }
}

impl<F: Float> Default for Kahan<F> {
    fn default() -> Self {
        Self::new()
    }
}

const BUNDLED: &str = include_str!("../../data/zeros.txt");

/// Ordinates γ_n > 0 of the zeros 1/2 + iγ_n, strictly increasing.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroList<F> {
    gammas: Vec<F>,
}

impl<F: Float> ZeroList<F> {
    pub fn new(gammas: Vec<F>) -> Result<Self, CountingError> {
        for (i, g) in gammas.iter().enumerate() {
            if !(*g > F::zero()) || !g.is_finite() {
                return Err(CountingError::Parse { line: i + 1, msg: "ordinate must be positive".into() });
            }
            if i > 0 && *g <= gammas[i - 1] {
                return Err(CountingError::Parse { line: i + 1, msg: "ordinates must increase strictly".into() });
            }
        }
        Ok(ZeroList { gammas })
    }

    /// One decimal ordinate per line; blank lines and `#` comments skipped.
    pub fn parse(text: &str) -> Result<Self, CountingError> {
        let mut gammas = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let v: f64 = line.parse().map_err(|e| CountingError::Parse { line: i + 1, msg: format!("{e}") })?;
            gammas.push(lit(v));
        }
        Self::new(gammas)
    }

    pub fn from_file(path: &Path) -> Result<Self, CountingError> {
        let text = std::fs::read_to_string(path).map_err(|e| CountingError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The first 10 500 zeros shipped with the crate (12 decimals).
    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled zeros are well formed")
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    pub fn gammas(&self) -> &[F] {
        &self.gammas
    }

    fn first(&self, m: usize) -> Result<&[F], CountingError> {
        if m > self.gammas.len() {
            return Err(CountingError::TooFewZeros { m, available: self.gammas.len() });
        }
        Ok(&self.gammas[..m])
    }
}

/// Smallest prime factor of every n ≤ limit.
fn spf_sieve(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            for j in (i..=limit).step_by(i) {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
            }
        }
    }
    spf
}

fn prime_power_base(mut n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n && !n.is_multiple_of(p) {
        p += 1;
    }
    if !n.is_multiple_of(p) {
        p = n;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    (n == 1).then_some(p)
}

/// Λ(n): log p when n = p^ℓ, else 0.
pub fn von_mangoldt<F: Float>(n: u64) -> F {
    match prime_power_base(n) {
        Some(p) => lit::<F>(p as f64).ln(),
        None => F::zero(),
    }
}

/// φ(u) = Σ_{n < u} n Λ(n).
#[allow(clippy::needless_range_loop)]
pub fn phi_staircase<F: Float>(u: F) -> F {
    let top = u.ceil().to_usize().unwrap_or(0);
    if top <= 2 {
        return F::zero();
    }
    let spf = spf_sieve(top);
    let mut acc = Kahan::new();
    for n in 2..top {
        let p = spf[n] as usize;
        let mut r = n;
        while r % p == 0 {
            r /= p;
        }
        if r == 1 {
            acc.add(lit::<F>(n as f64) * lit::<F>(p as f64).ln());
        }
    }
    acc.sum()
}

/// Σ_{n ≤ m} 2 Re(u^{ρ_n + 1} / (ρ_n + 1)).
pub fn omega_partial<F: Float>(u: F, m: usize, zeros: &ZeroList<F>) -> Result<F, CountingError> {
    if !(u > F::zero()) {
        return Err(CountingError::Domain("u must be positive".into()));
    }
    let a: F = lit(1.5);
    let (lu, mag) = (u.ln(), u.powf(a));
    let mut acc = Kahan::new();
    for &g in zeros.first(m)? {
        let (s, c) = (g * lu).sin_cos();
        // 2 Re(e^{iφ} / (a + iγ)) = 2 (a cos φ + γ sin φ) / (a² + γ²).
        acc.add(lit::<F>(2.0) * mag * (a * c + g * s) / (a * a + g * g));
    }
    Ok(acc.sum())
}

/// ω(1) = 1/2 + γ/2 + log(4π)/2 − ζ′(−1)/ζ(−1).
pub fn omega_one_closed<F: Float>() -> F {
    lit(constants::omega_one_direct().to_f64().expect("finite"))
}

/// −ζ′(−1)/ζ(−1) = 12 ζ′(−1).
pub fn omega_constant<F: Float>() -> F {
    lit::<F>(12.0) * lit(constants::decimal(constants::ZETA_PRIME_M1).to_f64().expect("finite"))
}

/// c = (log π + γ)/2.
pub fn kappa_constant<F: Float>() -> F {
    lit(constants::kappa_constant_exact().to_f64().expect("finite"))
}

fn zero_power_sum<F: Float>(u: F, m: usize, zeros: &ZeroList<F>, weight: impl Fn(usize) -> F) -> Result<F, CountingError> {
    if !(u > F::one()) {
        return Err(CountingError::Domain("N(u) is a distribution with an atom at u = 1; need u > 1".into()));
    }
    let (lu, mag) = (u.ln(), u.sqrt());
    let mut acc = Kahan::new();
    for (n, &g) in zeros.first(m)?.iter().enumerate() {
        acc.add(weight(n + 1) * lit::<F>(2.0) * mag * (g * lu).cos());
    }
    Ok(u + F::one() - acc.sum())
}

/// N(u) ≈ u − Σ_{n ≤ m} 2 Re(u^{ρ_n}) + 1.
pub fn counting_n<F: Float>(u: F, m: usize, zeros: &ZeroList<F>) -> Result<F, CountingError> {
    zero_power_sum(u, m, zeros, |_| F::one())
}

/// Cesàro mean of the first m partial sums of N(u): the n-th zero pair is
/// weighted by 1 − n/(m + 1).
pub fn counting_n_cesaro<F: Float>(u: F, m: usize, zeros: &ZeroList<F>) -> Result<F, CountingError> {
    let denom: F = lit((m + 1) as f64);
    zero_power_sum(u, m, zeros, |n| F::one() - lit::<F>(n as f64) / denom)
}

/// ∫_1^∞ (u² f(u) − f(1)) / (u² − 1) d*u + c f(1) for f vanishing beyond
/// `upper`; the part of the integral past `upper` is added in closed form.
pub fn kappa_apply<F: Float, G: Fn(F) -> F>(f: G, upper: F, c_included: bool) -> Result<F, CountingError> {
    let one = F::one();
    if !(upper > one) {
        return Err(CountingError::Domain("support bound must exceed 1".into()));
    }
    let f1 = f(one);
    if !f1.is_finite() {
        return Err(CountingError::NotIntegrable("f(1) is not finite".into()));
    }
    // u = e^v: d*u = dv and u² − 1 = expm1(2v).
    let two: F = lit(2.0);
    let body = quad::integrate(
        |v: F| {
            let u = v.exp();
            (u * u * f(u) - f1) / (two * v).exp_m1()
        },
        F::zero(),
        upper.ln(),
        lit(1e-11),
    )?;
    let u2 = upper * upper;
    let tail = -f1 * (u2 / (u2 - one)).ln() / two;
    let c = if c_included { kappa_constant::<F>() * f1 } else { F::zero() };
    Ok(body + tail + c)
}

/// φ(x) − [x²/2 − ω_m(x) + artanh(1/x) − ζ′(−1)/ζ(−1)].
pub fn explicit_formula_check<F: Float>(x: F, m: usize, zeros: &ZeroList<F>) -> Result<F, CountingError> {
    if !(x > F::one()) {
        return Err(CountingError::Domain("x must exceed 1".into()));
    }
    if x.fract() == F::zero() && prime_power_base(x.to_u64().unwrap_or(0)).is_some() {
        return Err(CountingError::Domain(format!("x = {:?} is a prime power", x.to_f64())));
    }
    let inv = x.recip();
    let artanh = ((F::one() + inv) / (F::one() - inv)).ln() / lit(2.0);
    let rhs = x * x / lit(2.0) - omega_partial(x, m, zeros)? + artanh + omega_constant::<F>();
    Ok(phi_staircase(x) - rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeros() -> ZeroList<f64> {
        ZeroList::bundled()
    }

    #[test]
    fn mangoldt_values() {
        assert!((von_mangoldt::<f64>(8) - 2f64.ln()).abs() < 1e-15);
        assert_eq!(von_mangoldt::<f64>(6), 0.0);
        assert_eq!(von_mangoldt::<f64>(1), 0.0);
        assert!((von_mangoldt::<f64>(7) - 7f64.ln()).abs() < 1e-15);
        assert!((von_mangoldt::<f64>(121) - 11f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn staircase() {
        let l = |p: f64| p.ln();
        let want = 14.0 * l(2.0) + 12.0 * l(3.0) + 5.0 * l(5.0) + 7.0 * l(7.0);
        assert!((phi_staircase(10.5) - want).abs() < 1e-12);
        assert!((phi_staircase(10.5f64) - 44.5566).abs() < 1e-3);
        assert_eq!(phi_staircase(2.0), 0.0);
        assert!((phi_staircase(3.0) - 2.0 * l(2.0)).abs() < 1e-15);
        assert!((phi_staircase(3.5) - 2.0 * l(2.0) - 3.0 * l(3.0)).abs() < 1e-14);
    }

    #[test]
    fn bundled_zeros() {
        let z = zeros();
        assert!(z.len() >= 10_000);
        assert!((z.gammas()[0] - 14.134725141734693).abs() < 1e-10);
        assert!((z.gammas()[4999] - 5447.8619983013).abs() < 1e-9);
        assert!((z.gammas()[9999] - 9877.7826540055).abs() < 1e-9);
        assert!(ZeroList::<f64>::parse("3\n2\n").is_err());
        assert!(ZeroList::<f64>::parse("-1\n").is_err());
        assert!(ZeroList::<f64>::parse("x\n").is_err());
    }

    #[test]
    fn omega_converges_to_closed_form() {
        let z = zeros();
        let w = omega_one_closed::<f64>();
        assert!((w - 0.0690662315300007).abs() < 1e-15);
        let errs: Vec<f64> = [100, 1000, 10_000].iter().map(|&m| (omega_partial(1.0, m, &z).unwrap() - w).abs()).collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
        assert!(errs[2] <= 1e-2);
        assert_eq!(omega_partial(1.0, 0, &z).unwrap(), 0.0);
        assert!(omega_partial(1.0, z.len() + 1, &z).is_err());
    }

    #[test]
    fn counting_partial_sums() {
        let z = zeros();
        assert_eq!(counting_n(2.0, 0, &z).unwrap(), 3.0);
        assert!(counting_n(1.0, 10, &z).is_err());
        assert!(counting_n(1e6, 1000, &z).unwrap() > 0.0);
        for m in [100, 1000, 10_000] {
            assert!(counting_n_cesaro(2.0, m, &z).unwrap() > 0.0, "m = {m}");
        }
    }

    #[test]
    fn explicit_formula_residuals() {
        let z = zeros();
        assert!(explicit_formula_check(10.5, 10_000, &z).unwrap().abs() <= 0.5);
        // Near x = 100.3 the truncated sum rings from the jump of 101 log 101 at the
        // next prime; the Dirichlet-kernel envelope bounds the residual.
        let jump = 101.0 * 101f64.ln();
        let ring = jump / (std::f64::consts::PI * z.gammas()[9_999] * (101.0f64 / 100.3).ln());
        assert!(explicit_formula_check(100.3, 10_000, &z).unwrap().abs() <= ring + 0.5);
        assert!(explicit_formula_check(100.5, 10_000, &z).unwrap().abs() <= 2.0);
        assert!(explicit_formula_check(9.0, 10, &z).is_err());
        assert!(explicit_formula_check(10.0, 10, &z).is_ok());
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa_apply(|_: f64| 0.0, 10.0, true).unwrap(), 0.0);
        let u = 1e4f64;
        let closed = 1.0 / u + u.ln() - (u + 1.0).ln() - 1.0 + 2f64.ln() - 0.5 * (u * u / (u * u - 1.0)).ln();
        let got = kappa_apply(|x: f64| x.powi(-3), u, false).unwrap();
        assert!((got - closed).abs() < 1e-8, "{got} vs {closed}");
        let with_c = kappa_apply(|x: f64| x.powi(-3), u, true).unwrap();
        assert!((with_c - got - kappa_constant::<f64>()).abs() < 1e-12);
        assert!(kappa_apply(|x: f64| 1.0 / (x - 1.0), 4.0, false).is_err());
    }

    #[test]
    fn kappa_away_from_one() {
        // Tent on [2, 4]; with f(1) = 0 only ∫ f u/(u²−1) du remains.
        let f = |u: f64| (1.0 - (u - 3.0).abs()).max(0.0);
        let got = kappa_apply(f, 5.0, true).unwrap();
        let n = 200_000;
        let h = 2.0 / n as f64;
        let simpson: f64 = (0..=n)
            .map(|i| {
                let u = 2.0 + i as f64 * h;
                let w = if i == 0 || i == n { 1.0 } else if i % 2 == 1 { 4.0 } else { 2.0 };
                w * f(u) * u / (u * u - 1.0)
            })
            .sum::<f64>()
            * h
            / 3.0;
        assert!((got - simpson).abs() < 1e-8, "{got} vs {simpson}");
        assert!(got > 0.0);
    }

    #[test]
    fn kahan_recovers_cancellation() {
        let mut k = Kahan::new();
        for x in [1e16, 1.0, -1e16, 1.0] {
            k.add(x);
        }
        assert_eq!(k.sum(), 2.0);
    }
}
