//! Independent checks for the resultant pipeline: numerical roots over C
//! and explicit root enumeration over finite fields.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::{Op, SpecError};
use crate::exactmath::{distinct_factors_fp, factor_q, FpPoly, Gf, IntPoly};

/// Fractional bits of the fixed-point complex numbers.
const PREC: usize = 320;

/// Complex number `(re + i im) / 2^PREC`.
#[derive(Clone, Debug)]
struct Fx {
    re: BigInt,
    im: BigInt,
}

impl Fx {
    fn zero() -> Self {
        Fx { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn from_int(c: &BigInt) -> Self {
        Fx { re: c << PREC, im: BigInt::zero() }
    }

    fn from_c64(z: Complex64) -> Self {
        let conv = |x: f64| BigInt::from_f64(x * 2f64.powi(60)).unwrap_or_default() << (PREC - 60);
        Fx { re: conv(z.re), im: conv(z.im) }
    }

    fn add(&self, o: &Fx) -> Fx {
        Fx { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub(&self, o: &Fx) -> Fx {
        Fx { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul(&self, o: &Fx) -> Fx {
        Fx {
            re: (&self.re * &o.re - &self.im * &o.im) >> PREC,
            im: (&self.re * &o.im + &self.im * &o.re) >> PREC,
        }
    }

    fn div(&self, o: &Fx) -> Fx {
        let den = &o.re * &o.re + &o.im * &o.im;
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        Fx { re: (re << PREC) / &den, im: (im << PREC) / &den }
    }

    /// max(|re|, |im|) as a multiple of 2^-PREC.
    fn norm_inf(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }
}

fn eval_with_derivative(q: &[Fx], z: &Fx) -> (Fx, Fx) {
    let (mut v, mut d) = (Fx::zero(), Fx::zero());
    for c in q.iter().rev() {
        d = d.mul(z).add(&v);
        v = v.mul(z).add(c);
    }
    (v, d)
}

/// Aberth iteration in double precision.
fn aberth(q: &IntPoly) -> Vec<Complex64> {
    let n = q.deg();
    let lc = q.lc().to_f64().unwrap();
    let c: Vec<f64> = q.coeffs().iter().map(|x| x.to_f64().unwrap() / lc).collect();
    let radius = 1.0 + c[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.7, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    let eval = |x: Complex64| {
        let (mut v, mut d) = (Complex64::zero(), Complex64::zero());
        for &a in c.iter().rev() {
            d = d * x + v;
            v = v * x + a;
        }
        (v, d)
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v == Complex64::zero() {
                continue;
            }
            let ratio = v / d;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| Complex64::one() / (z[i] - z[j])).sum();
            let w = ratio / (Complex64::one() - ratio * repulsion);
            z[i] -= w;
            moved = moved.max(w.norm() / (1.0 + z[i].norm()));
        }
        if moved < 1e-14 {
            break;
        }
    }
    z
}

/// Roots of a squarefree `q` to about `PREC` bits.
fn roots(q: &IntPoly) -> Vec<Fx> {
    let coeffs: Vec<Fx> = q.coeffs().iter().map(Fx::from_int).collect();
    let tiny = BigInt::one() << 24;
    aberth(q)
        .into_iter()
        .map(|z0| {
            let mut z = Fx::from_c64(z0);
            for _ in 0..64 {
                let (v, d) = eval_with_derivative(&coeffs, &z);
                if d.norm_inf().is_zero() {
                    break;
                }
                let step = v.div(&d);
                z = z.sub(&step);
                if step.norm_inf() < tiny {
                    break;
                }
            }
            z
        })
        .collect()
}

/// Integer polynomial `scale * prod (Z - r)` from approximate roots.
fn reconstruct(rs: &[Fx], scale: &BigInt) -> Result<IntPoly, SpecError> {
    let mut c = vec![Fx::from_int(&BigInt::one())];
    for r in rs {
        let mut next = vec![Fx::zero(); c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i + 1] = next[i + 1].add(a);
            next[i] = next[i].sub(&a.mul(r));
        }
        c = next;
    }
    let one = BigInt::one() << PREC;
    let half = BigInt::one() << (PREC - 1);
    let tol = one.to_f64().unwrap() * 1e-6;
    let mut out = Vec::with_capacity(c.len());
    for a in &c {
        let re = &a.re * scale;
        let im = &a.im * scale;
        let k = (&re + &half).div_floor(&one);
        let err = (&re - &k * &one).abs().max(im.abs());
        let err = err.to_f64().unwrap();
        if err > tol {
            return Err(SpecError::Inconclusive(err / one.to_f64().unwrap()));
        }
        out.push(k);
    }
    Ok(IntPoly::new(out))
}

/// Distinct irreducible factors of the polynomial whose roots are all
/// `α + β` (or `α β`) over the complex roots of `q1` and `q2`. Degrees at
/// most 6.
pub fn brute_oracle_fiber0(q1: &IntPoly, q2: &IntPoly, op: Op) -> Result<Vec<IntPoly>, SpecError> {
    for q in [q1, q2] {
        if q.deg() == 0 || q.deg() > 6 {
            return Err(SpecError::Precondition(format!("degree of {q} outside 1..=6")));
        }
    }
    let (r1, r2) = (roots(&q1.squarefree_part()), roots(&q2.squarefree_part()));
    let combined: Vec<Fx> = r1
        .iter()
        .flat_map(|a| {
            r2.iter().map(move |b| match op {
                Op::Sum => a.add(b),
                Op::Product => a.mul(b),
            })
        })
        .collect();
    // lc1^deg2 lc2^deg1 clears every denominator of the symmetric functions.
    let (n, m) = (r1.len() as u32, r2.len() as u32);
    let scale = q1.squarefree_part().lc().pow(m) * q2.squarefree_part().lc().pow(n);
    let f = reconstruct(&combined, &scale.abs())?;
    Ok(factor_q(&f).factors.into_iter().map(|(g, _)| g).collect())
}

fn lcm(a: usize, b: usize) -> usize {
    a / a.gcd(&b) * b
}

/// Minimal polynomial over F_p of `x ∈ F_{p^k}`: the product over its
/// Frobenius orbit.
fn minimal_polynomial(f: &Gf, x: u64) -> FpPoly {
    let p = f.p();
    let mut orbit = vec![x];
    let mut y = f.pow(x, p);
    while y != x {
        orbit.push(y);
        y = f.pow(y, p);
    }
    // Coefficients in F_{p^k}, lowest first.
    let mut c = vec![1u64];
    for r in orbit {
        let mut next = vec![0u64; c.len() + 1];
        let nr = f.neg(r);
        for (i, &a) in c.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], a);
            next[i] = f.add(next[i], f.mul(a, nr));
        }
        c = next;
    }
    let coeffs = c
        .into_iter()
        .inspect(|&a| {
            assert!(a < p, "orbit product has coefficients in F_p");
        })
        .collect();
    FpPoly::new(p, coeffs)
}

/// Same as `brute_oracle_fiber0` over F_p by enumerating F_{p^k}, `k` the
/// lcm of the degrees, for `p^k <= 10^6`.
pub fn brute_oracle_fiberp(a: &FpPoly, b: &FpPoly, op: Op) -> Result<Vec<FpPoly>, SpecError> {
    let p = a.modulus();
    if a.is_zero() || b.is_zero() || a.deg() == 0 || b.deg() == 0 {
        return Err(SpecError::Precondition("constant polynomial".into()));
    }
    let mut k = 1;
    for g in distinct_factors_fp(a)?.iter().chain(distinct_factors_fp(b)?.iter()) {
        k = lcm(k, g.deg());
    }
    match p.checked_pow(k as u32) {
        Some(n) if n <= 1_000_000 => {}
        _ => return Err(SpecError::FieldTooLarge(p, k)),
    }
    let f = Gf::new(p, k)?;
    let roots_of = |g: &FpPoly| -> Vec<u64> { (0..f.size()).filter(|&x| f.eval(g, x) == 0).collect() };
    let (ra, rb) = (roots_of(a), roots_of(b));
    let mut out: Vec<FpPoly> = Vec::new();
    for &x in &ra {
        for &y in &rb {
            let z = match op {
                Op::Sum => f.add(x, y),
                Op::Product => f.mul(x, y),
            };
            let m = minimal_polynomial(&f, z);
            if !out.contains(&m) {
                out.push(m);
            }
        }
    }
    out.sort();
    Ok(out)
}
