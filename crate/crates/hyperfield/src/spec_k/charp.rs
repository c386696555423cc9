use super::SpecError;
use crate::exactmath::{is_prime, FpPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPReport {
    pub p: u64,
    pub degree: usize,
    /// `a | T^{p^m} - T` with `m = deg a`.
    pub divides_additive: bool,
    /// `a | T^{p^m - 1} - 1`; `None` when `a = T`.
    pub divides_multiplicative: Option<bool>,
    /// `(X+Y)^{p^m} = X^{p^m} + Y^{p^m}` over F_p, by expansion.
    pub additive_identity: bool,
}

impl CharPReport {
    pub fn all_hold(&self) -> bool {
        self.divides_additive && self.divides_multiplicative != Some(false) && self.additive_identity
    }
}

/// `(X+Y)^n` over F_p as the coefficients of `X^i Y^{n-i}`.
fn binomial_power(p: u64, n: u64) -> Vec<u64> {
    let mul = |a: &[u64], b: &[u64]| {
        let mut c = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                c[i + j] = (c[i + j] + x * y) % p;
            }
        }
        c
    };
    let (mut acc, mut base, mut e) = (vec![1u64], vec![1u64, 1], n);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

/// Check the polynomial identities over F_p satisfied by a closed point `a`
/// of the fiber over `p`.
pub fn char_p_identities(a: &FpPoly) -> Result<CharPReport, SpecError> {
    let p = a.modulus();
    if !is_prime(p) {
        return Err(SpecError::NotPrime(p));
    }
    if a.is_zero() || a.deg() == 0 || !a.is_irreducible() {
        return Err(SpecError::Reducible(a.to_string()));
    }
    let a = a.monic();
    let m = a.deg();
    let q = p
        .checked_pow(m as u32)
        .filter(|&q| q <= 1 << 20)
        .ok_or_else(|| SpecError::Precondition(format!("p^deg too large for expansion: {p}^{m}")))?;
    let t = FpPoly::var(p);
    let divides_additive = t.pow_mod_u64(q, &a) == t.rem(&a);
    let is_t = a == t;
    let divides_multiplicative = (!is_t).then(|| t.pow_mod_u64(q - 1, &a).is_one());
    let expansion = binomial_power(p, q);
    let additive_identity =
        expansion.len() as u64 == q + 1 && expansion[0] == 1 && expansion[q as usize] == 1 && expansion[1..q as usize].iter().all(|&c| c == 0);
    Ok(CharPReport { p, degree: m, divides_additive, divides_multiplicative, additive_identity })
}
