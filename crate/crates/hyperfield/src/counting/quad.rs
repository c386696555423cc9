//! Adaptive Gauss–Kronrod (7, 15) quadrature.

use num_traits::Float;

use super::{lit, CountingError};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Kronrod estimate and |Kronrod − Gauss| on `[a, b]`.
fn gk15<F: Float, G: Fn(F) -> F>(f: &G, a: F, b: F) -> Result<(F, F), CountingError> {
    let half = (b - a) / lit(2.0);
    let mid = a + half;
    let fc = f(mid);
    let (mut k, mut g) = (fc * lit(WGK[7]), fc * lit(WG[3]));
    for j in 0..7 {
        let dx = half * lit(XGK[j]);
        let (f1, f2) = (f(mid - dx), f(mid + dx));
        k = k + (f1 + f2) * lit(WGK[j]);
        if j % 2 == 1 {
            g = g + (f1 + f2) * lit(WG[j / 2]);
        }
    }
    let (k, g) = (k * half, g * half);
    if !k.is_finite() || !g.is_finite() {
        return Err(CountingError::NotIntegrable(format!("non-finite samples near {:?}", mid.to_f64())));
    }
    Ok((k, (k - g).abs()))
}

/// Uniform pieces the range is cut into before adapting, so that features
/// narrower than the whole range are sampled at least once.
const INITIAL_PIECES: u32 = 64;

/// ∫_a^b f with absolute tolerance `tol`, bisecting intervals whose error
/// exceeds their share of the tolerance.
pub fn integrate<F: Float, G: Fn(F) -> F>(f: G, a: F, b: F, tol: F) -> Result<F, CountingError> {
    let width = b - a;
    if width == F::zero() {
        return Ok(F::zero());
    }
    let step = width / lit(INITIAL_PIECES as f64);
    let mut stack: Vec<(F, F, u32)> = (0..INITIAL_PIECES)
        .rev()
        .map(|i| {
            let hi = if i + 1 == INITIAL_PIECES { b } else { a + step * lit((i + 1) as f64) };
            (a + step * lit(i as f64), hi, 0)
        })
        .collect();
    let mut total = super::Kahan::new();
    while let Some((lo, hi, depth)) = stack.pop() {
        let (v, err) = gk15(&f, lo, hi)?;
        let share = tol * (hi - lo) / width;
        if err <= share || err <= F::epsilon() * v.abs() * lit(50.0) {
            total.add(v);
        } else if depth >= 50 {
            return Err(CountingError::NotIntegrable(format!(
                "no convergence on [{:?}, {:?}]",
                lo.to_f64(),
                hi.to_f64()
            )));
        } else {
            let mid = lo + (hi - lo) / lit(2.0);
            stack.push((mid, hi, depth + 1));
            stack.push((lo, mid, depth + 1));
        }
    }
    Ok(total.sum())
}

/// ∫_0^∞ f via v = w/(1 − w).
pub fn integrate_half_line<F: Float, G: Fn(F) -> F>(f: G, tol: F) -> Result<F, CountingError> {
    let one = F::one();
    integrate(
        |w: F| {
            let d = one - w;
            f(w / d) / (d * d)
        },
        F::zero(),
        one,
        tol,
    )
}
