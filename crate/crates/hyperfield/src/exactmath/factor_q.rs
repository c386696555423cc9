//! Factorization over `Q` (equivalently over `Z` up to content):
//! Berlekamp mod a good prime, Hensel lifting, subset recombination.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fp::{factor_fp, is_prime, FpPoly};
use super::poly::IntPoly;
use super::resultant::resultant;

/// `f = content * prod factor^mult`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.content.clone());
        for (g, m) in &self.factors {
            acc = &acc * &g.pow(*m as u32);
        }
        acc
    }
}

/// Sort key for canonical output: by degree, then by coefficients from the
/// leading one down.
pub fn canonical_cmp(a: &IntPoly, b: &IntPoly) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        let ca = a.coeffs().iter().rev();
        let cb = b.coeffs().iter().rev();
        ca.cmp(cb)
    })
}

fn reduce(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half: BigInt = m / 2;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Division by a monic polynomial followed by reduction mod `m`.
fn divrem_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    let (q, r) = reduce(a, m).div_rem_monic(b);
    (reduce(&q, m), reduce(&r, m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// One quadratic Hensel step (von zur Gathen-Gerhard 15.10): from
/// `f = g h`, `s g + t h = 1` mod `m` to the same relations mod `m2`.
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m2: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let e = reduce(&(f - &(g * h)), m2);
    let (q, r) = divrem_mod(&(s * &e), h, m2);
    let g1 = reduce(&(&(g + &(t * &e)) + &(&q * g)), m2);
    let h1 = reduce(&(h + &r), m2);
    let b = reduce(&(&(&(s * &g1) + &(t * &h1)) - &IntPoly::one()), m2);
    let (c, d) = divrem_mod(&(s * &b), &h1, m2);
    let s1 = reduce(&(s - &d), m2);
    let t1 = reduce(&(&(t - &(t * &b)) - &(&c * &g1)), m2);
    (g1, h1, s1, t1)
}

/// Lift monic factors of `f mod p` (with `lc(f)` a unit mod `p`) to monic
/// factors mod `target`, a power of `p`, with `f = lc(f) * prod` mod
/// `target`.
fn multi_lift(f: &IntPoly, factors: &[FpPoly], p: u64, target: &BigInt) -> Vec<IntPoly> {
    let pb = BigInt::from(p);
    if factors.len() == 1 {
        let inv = mod_inverse(&f.lc(), target);
        return vec![reduce(&f.scale(&inv), target)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let mut g0 = FpPoly::one(p);
    for u in left {
        g0 = g0.mul(u);
    }
    let lc_f = FpPoly::from_int_poly(&IntPoly::constant(f.lc()), p);
    g0 = g0.mul(&lc_f);
    let mut h0 = FpPoly::one(p);
    for u in right {
        h0 = h0.mul(u);
    }
    let (one, s0, t0) = g0.ext_gcd(&h0);
    debug_assert!(one.is_one());
    let mut g = g0.to_int_poly();
    let mut h = h0.to_int_poly();
    let mut s = s0.to_int_poly();
    let mut t = t0.to_int_poly();
    let mut m = pb.clone();
    while &m < target {
        let mut m2 = &m * &m;
        if &m2 > target {
            m2 = target.clone();
        }
        let (g1, h1, s1, t1) = hensel_step(&reduce(f, &m2), &g, &h, &s, &t, &m2);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = m2;
    }
    let mut out = multi_lift(&g, left, p, target);
    out.extend(multi_lift(&h, right, p, target));
    out
}

/// Smallest prime `p >= 3` with `p` not dividing `Res(f, f')`.
fn good_prime(f: &IntPoly) -> u64 {
    let r = resultant(f, &f.derivative()).expect("nonzero inputs");
    let mut p = 3u64;
    loop {
        if is_prime(p) && !(&r % BigInt::from(p)).is_zero() {
            return p;
        }
        p += 2;
    }
}

/// Factors a primitive squarefree polynomial of positive degree with
/// positive leading coefficient into irreducibles.
fn zassenhaus(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.clone()];
    }
    let p = good_prime(f);
    let fbar = FpPoly::from_int_poly(f, p);
    let modular: Vec<FpPoly> = factor_fp(&fbar)
        .expect("prime modulus")
        .into_iter()
        .map(|(g, m)| {
            debug_assert_eq!(m, 1);
            g
        })
        .collect();
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    // Coefficients of lc(f) * g for any factor g are bounded by
    // |lc| 2^n ||f||_2; lift past twice that.
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let bound = f.lc().abs() * (BigInt::one() << n) * (norm2.sqrt() + 1u32);
    let pb = BigInt::from(p);
    let mut target = pb.clone();
    while target <= &bound * 2u32 {
        target *= &pb;
    }
    let mut lifted = multi_lift(f, &modular, p, &target);

    let mut remaining = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in combinations(lifted.len(), size) {
            let l = remaining.lc();
            let mut g = IntPoly::constant(l.clone());
            for &i in &subset {
                g = reduce(&(&g * &lifted[i]), &target);
            }
            let cand = symmetric(&g, &target).primitive();
            if cand.deg() == 0 {
                continue;
            }
            if let Some(q) = remaining.div_exact(&cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                remaining = q.primitive();
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, u)| u)
                    .collect();
            }
            None => size += 1,
        }
    }
    if remaining.deg() > 0 {
        found.push(remaining);
    }
    found
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Factor a nonzero integer polynomial into primitive irreducibles with
/// positive leading coefficients.
pub fn factor_q(f: &IntPoly) -> Factorization {
    assert!(!f.is_zero(), "factor_q of the zero polynomial");
    let mut content = f.content();
    if f.lc().is_negative() {
        content = -content;
    }
    let prim = f.primitive();
    let mut factors = Vec::new();
    if prim.deg() > 0 {
        let sqf = prim.squarefree_part();
        for g in zassenhaus(&sqf) {
            let g = g.primitive();
            let mut m = 0;
            let mut rest = prim.clone();
            while let Some(q) = rest.div_exact(&g) {
                rest = q;
                m += 1;
            }
            factors.push((g, m));
        }
    }
    factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    Factorization { content, factors }
}

/// Distinct primitive irreducible factors of positive degree, canonical order.
pub fn irreducible_factors(f: &IntPoly) -> Vec<IntPoly> {
    factor_q(f).factors.into_iter().map(|(g, _)| g).collect()
}

/// Irreducible over `Q` and of positive degree.
pub fn is_irreducible_q(f: &IntPoly) -> bool {
    if f.is_zero() || f.deg() == 0 {
        return false;
    }
    let fz = factor_q(f);
    fz.factors.len() == 1 && fz.factors[0].1 == 1
}
