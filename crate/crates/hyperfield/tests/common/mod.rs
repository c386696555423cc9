//! Random generators shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use hyperfield::exactmath::{
    isolate_real_roots, is_irreducible_q, product_resultant, sum_resultant, AlgebraicReal, Combine, FpPoly, IntPoly,
};
use hyperfield::spec_s::SignPoint;
use hyperfield::Rational;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A rational with |numerator| ≤ 30 and denominator ≤ 12, zero about one
/// time in 16.
pub fn random_rational(rng: &mut TestRng) -> Rational {
    if rng.gen_ratio(1, 16) {
        return ratio(0, 1);
    }
    let mut n = rng.gen_range(-30..=30);
    if n == 0 {
        n = 1;
    }
    ratio(n, rng.gen_range(1..=12))
}

/// Pairs where a quarter repeat `x` and a quarter use `-x`, since those
/// are the cases with extra structure.
pub fn random_pair(rng: &mut TestRng) -> (Rational, Rational) {
    let x = random_rational(rng);
    let y = match rng.gen_range(0..4) {
        0 => x.clone(),
        1 => -x.clone(),
        _ => random_rational(rng),
    };
    (x, y)
}

pub fn random_irreducible(rng: &mut TestRng, max_deg: usize, height: i64) -> IntPoly {
    loop {
        let d = rng.gen_range(1..=max_deg);
        let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-height..=height)).collect();
        if c[d] == 0 {
            c[d] = 1;
        }
        let q = IntPoly::from_i64s(&c);
        if is_irreducible_q(&q) {
            return q;
        }
    }
}

pub fn random_irreducible_fp(rng: &mut TestRng, p: u64, max_deg: usize) -> FpPoly {
    loop {
        let d = rng.gen_range(1..=max_deg);
        let mut c: Vec<u64> = (0..d).map(|_| rng.gen_range(0..p)).collect();
        c.push(1);
        let a = FpPoly::new(p, c);
        if a.is_irreducible() {
            return a;
        }
    }
}

/// A real algebraic number of degree ≤ `max_deg`.
pub fn random_algebraic(rng: &mut TestRng, max_deg: usize) -> AlgebraicReal {
    loop {
        let q = random_irreducible(rng, max_deg, 6);
        let n = isolate_real_roots(&q).map(|r| r.len()).unwrap_or(0);
        if n > 0 {
            return AlgebraicReal::real_root(&q, rng.gen_range(0..n)).expect("irreducible with a real root");
        }
    }
}

pub fn random_sign_point(rng: &mut TestRng, max_deg: usize) -> SignPoint {
    let a = if rng.gen_ratio(1, 10) { AlgebraicReal::from_integer(0) } else { random_algebraic(rng, max_deg) };
    SignPoint::at(a, rng.gen_range(-1..=1))
}

/// Up to `count` rationals with denominator ≤ 50 inside the open interval
/// `(lo, hi)`; a missing end is replaced by one 10 units past the other.
pub fn samples_between(rng: &mut TestRng, lo: Option<&Rational>, hi: Option<&Rational>, count: usize) -> Vec<Rational> {
    let ten = ratio(10, 1);
    let (lo, hi) = match (lo, hi) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        (Some(a), None) => (a.clone(), a + &ten),
        (None, Some(b)) => (b - &ten, b.clone()),
        (None, None) => (-ten.clone(), ten),
    };
    let mut out = Vec::new();
    for _ in 0..count * 4 {
        if out.len() == count {
            break;
        }
        let d = rng.gen_range(1..=50i64);
        let dd = Rational::from_integer(BigInt::from(d));
        let (a, b) = ((&lo * &dd).floor().to_integer(), (&hi * &dd).ceil().to_integer());
        let span = &b - &a;
        if span <= BigInt::from(1) {
            continue;
        }
        let k: i64 = rng.gen_range(1..span.to_string().parse::<i64>().unwrap_or(2));
        let z = Rational::new(&a + BigInt::from(k), BigInt::from(d));
        if z > lo && z < hi {
            out.push(z);
        }
    }
    out
}

/// α_z is a root of the combined resultant and α_x ∘ α_y lies in its
/// interval once both are refined to width 2^-100.
pub fn re_matches(z: &AlgebraicReal, x: &AlgebraicReal, y: &AlgebraicReal, op: Combine) -> bool {
    let res = match op {
        Combine::Sum => sum_resultant(x.minpoly(), y.minpoly()),
        Combine::Product => product_resultant(x.minpoly(), y.minpoly()),
    };
    let Ok(res) = res else { return false };
    if res.div_exact(z.minpoly()).is_none() && !(x.is_zero() || y.is_zero()) {
        return false;
    }
    let w = Rational::new(1.into(), BigInt::from(2).pow(100));
    let (mut z, mut x, mut y) = (z.clone(), x.clone(), y.clone());
    for a in [&mut z, &mut x, &mut y] {
        a.refine_to_width(&w);
    }
    let (lo, hi) = match op {
        Combine::Sum => (x.lo() + y.lo(), x.hi() + y.hi()),
        Combine::Product => {
            let c = [x.lo() * y.lo(), x.lo() * y.hi(), x.hi() * y.lo(), x.hi() * y.hi()];
            (c.iter().min().unwrap().clone(), c.iter().max().unwrap().clone())
        }
    };
    z.lo() <= &hi && &lo <= z.hi()
}
