//! Polynomials over a prime field `F_p` and their factorization.
//!
//! Factorization is squarefree decomposition followed by Berlekamp's
//! algorithm on each squarefree part.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::IntPoly;
use super::MathError;

/// Deterministic Miller-Rabin for `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "{a} is not invertible mod {m}");
    t0.rem_euclid(m as i128) as u64
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut c: Vec<u64> = coeffs.into_iter().map(|x| x % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, coeffs: c }
    }

    pub fn from_i64s(p: u64, coeffs: &[i64]) -> Self {
        Self::new(
            p,
            coeffs
                .iter()
                .map(|&x| x.rem_euclid(p as i64) as u64)
                .collect(),
        )
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        Self::new(
            p,
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
                .collect(),
        )
    }

    /// Lift with coefficients in `[0, p)`.
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn var(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.p);
        self.scale(inv)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(self.p, (0..n).map(|i| (self.coeff(i) + o.coeff(i)) % self.p).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            self.p,
            (0..n).map(|i| (self.coeff(i) + self.p - o.coeff(i)) % self.p).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::zero(self.p).sub(self)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u128;
        let mut v = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                v[i + j] = (v[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::new(self.p, v.into_iter().map(|x| x as u64).collect())
    }

    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        assert!(!b.is_zero(), "division by zero polynomial");
        let p = self.p;
        let db = b.deg();
        let inv = inv_mod(b.lc(), p);
        let mut r = self.coeffs.clone();
        if r.len() < b.coeffs.len() {
            return (Self::zero(p), self.clone());
        }
        let mut q = vec![0u64; r.len() - db];
        for i in (db..r.len()).rev() {
            let c = mul_mod(r[i], inv, p);
            if c == 0 {
                continue;
            }
            q[i - db] = c;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                let k = i - db + j;
                r[k] = (r[k] + p - mul_mod(c, bj, p)) % p;
            }
        }
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.div_rem(b).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, self.p) + c) % self.p;
        }
        acc
    }

    /// `self^e mod m` for an arbitrary-precision exponent.
    pub fn pow_mod(&self, e: &num_bigint::BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn pow_mod_u64(&self, e: u64, m: &Self) -> Self {
        self.pow_mod(&num_bigint::BigUint::from(e), m)
    }

    /// `T^(p^d) mod m`, iterating the Frobenius `d` times.
    pub fn frobenius_power(m: &Self, d: usize) -> Self {
        let p = m.p;
        let mut x = Self::var(p).rem(m);
        for _ in 0..d {
            x = x.pow_mod_u64(p, m);
        }
        x
    }

    /// For `f'` = 0, the polynomial `g` with `g^p = f`.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        Self::new(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }

    /// Rabin-style test: no common factor with `T^(p^d) - T` for
    /// `d <= deg/2` and degree at least one.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let t = Self::var(self.p);
        let mut x = t.rem(&f);
        for _ in 1..=n / 2 {
            x = x.pow_mod_u64(self.p, &f);
            if !f.gcd(&x.sub(&t)).is_one() {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::format_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, BigInt::from(c))),
        )
    }
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, m)` with
/// `f = prod g^m` and each `g` squarefree.
fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0;
        if fac.deg() > 0 {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if c.deg() > 0 {
        let root = c.pth_root();
        for (g, m) in squarefree_decomposition(&root.monic()) {
            out.push((g, m * p as usize));
        }
    }
    out
}

/// Berlekamp subalgebra basis of a monic squarefree `f`, as polynomials.
#[allow(clippy::needless_range_loop)]
fn berlekamp_basis(f: &FpPoly) -> Vec<FpPoly> {
    let p = f.p;
    let n = f.deg();
    // Row i of Q - I: coefficients of T^(ip) mod f, minus e_i.
    let xp = FpPoly::var(p).pow_mod_u64(p, f);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = FpPoly::one(p);
    for i in 0..n {
        let mut row: Vec<u64> = (0..n).map(|j| cur.coeff(j)).collect();
        row[i] = (row[i] + p - 1) % p;
        rows.push(row);
        cur = cur.mul(&xp).rem(f);
    }
    // Null space of the transpose: vectors g with sum_i g_i row_i = 0.
    let mut m: Vec<Vec<u64>> = (0..n).map(|j| (0..n).map(|i| rows[i][j]).collect()).collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(pr) = (r..n).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][col], p);
        for v in m[r].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        for i in 0..n {
            if i != r && m[i][col] != 0 {
                let factor = m[i][col];
                for j in 0..n {
                    let sub = mul_mod(factor, m[r][j], p);
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[row][fc]) % p;
            }
            FpPoly::new(p, v)
        })
        .collect()
}

/// Split a monic squarefree polynomial into its irreducible factors.
fn berlekamp(f: &FpPoly) -> Vec<FpPoly> {
    let p = f.p;
    if f.deg() <= 1 {
        return vec![f.clone()];
    }
    let basis = berlekamp_basis(f);
    let r = basis.len();
    if r == 1 {
        return vec![f.clone()];
    }
    let mut factors = vec![f.clone()];
    if p <= 1000 {
        for v in basis.iter().filter(|v| v.deg() > 0) {
            let mut next = Vec::new();
            for u in factors {
                if u.deg() <= 1 {
                    next.push(u);
                    continue;
                }
                let mut rest = u;
                for s in 0..p {
                    if rest.deg() <= 1 {
                        break;
                    }
                    let g = rest.gcd(&v.sub(&FpPoly::constant(p, s)));
                    if g.deg() > 0 && g.deg() < rest.deg() {
                        rest = rest.div_rem(&g).0.monic();
                        next.push(g);
                    }
                }
                next.push(rest);
            }
            factors = next;
            if factors.len() == r {
                break;
            }
        }
    } else {
        // Large p: random elements of the subalgebra split with the
        // quadratic character.
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
        let e = num_bigint::BigUint::from((p - 1) / 2);
        while factors.len() < r {
            let mut v = FpPoly::zero(p);
            for b in &basis {
                v = v.add(&b.scale(rng.gen_range(0..p)));
            }
            let mut next = Vec::new();
            for u in factors {
                if u.deg() <= 1 {
                    next.push(u);
                    continue;
                }
                let w = v.pow_mod(&e, &u).sub(&FpPoly::one(p));
                let g = u.gcd(&w);
                if g.deg() > 0 && g.deg() < u.deg() {
                    next.push(u.div_rem(&g).0.monic());
                    next.push(g);
                } else {
                    next.push(u);
                }
            }
            factors = next;
        }
    }
    factors.into_iter().map(|g| g.monic()).collect()
}

/// Factor into monic irreducibles with multiplicities, sorted.
pub fn factor_fp(f: &FpPoly) -> Result<Vec<(FpPoly, usize)>, MathError> {
    if !is_prime(f.p) {
        return Err(MathError::CompositeModulus(f.p));
    }
    if f.is_zero() {
        return Err(MathError::ZeroPolynomial);
    }
    let f = f.monic();
    let mut out = Vec::new();
    for (g, m) in squarefree_decomposition(&f) {
        for h in berlekamp(&g) {
            out.push((h, m));
        }
    }
    out.sort();
    Ok(out)
}

/// Distinct monic irreducible factors.
pub fn distinct_factors_fp(f: &FpPoly) -> Result<Vec<FpPoly>, MathError> {
    let mut v: Vec<FpPoly> = factor_fp(f)?.into_iter().map(|(g, _)| g).collect();
    v.dedup();
    Ok(v)
}
