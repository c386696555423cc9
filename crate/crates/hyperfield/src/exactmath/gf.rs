//! Arithmetic in F_{p^k} = F_p[T]/(m) with elements packed as base-p
//! integers (coefficient of T^i is digit i).

use super::fp::{is_prime, FpPoly};
use super::MathError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf {
    p: u64,
    k: usize,
    modulus: FpPoly,
    size: u64,
}

impl Gf {
    /// Field with the given monic irreducible modulus.
    pub fn with_modulus(modulus: FpPoly) -> Result<Self, MathError> {
        let p = modulus.modulus();
        if !is_prime(p) {
            return Err(MathError::CompositeModulus(p));
        }
        if modulus.deg() == 0 || !modulus.is_monic() || !modulus.is_irreducible() {
            return Err(MathError::InvalidAlgebraic(format!("{modulus} is not a monic irreducible")));
        }
        let k = modulus.deg();
        let size = p
            .checked_pow(k as u32)
            .ok_or_else(|| MathError::InvalidAlgebraic("field too large".into()))?;
        Ok(Gf { p, k, modulus, size })
    }

    /// Field using the first monic irreducible of degree `k` in packed order.
    pub fn new(p: u64, k: usize) -> Result<Self, MathError> {
        Self::with_modulus(first_irreducible(p, k)?)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    pub fn to_poly(&self, mut x: u64) -> FpPoly {
        let mut c = Vec::with_capacity(self.k);
        for _ in 0..self.k {
            c.push(x % self.p);
            x /= self.p;
        }
        FpPoly::new(self.p, c)
    }

    /// Pack a polynomial after reduction mod the modulus.
    pub fn from_poly(&self, f: &FpPoly) -> u64 {
        let r = f.rem(&self.modulus);
        r.coeffs().iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, mut a: u64, mut b: u64) -> u64 {
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.k {
            out += (a % self.p + b % self.p) % self.p * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, mut a: u64) -> u64 {
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.k {
            out += (self.p - a % self.p) % self.p * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.from_poly(&self.to_poly(a).mul(&self.to_poly(b)))
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Element of the prime field.
    pub fn scalar(&self, c: u64) -> u64 {
        c % self.p
    }

    /// The class of `T`.
    pub fn gen(&self) -> u64 {
        self.from_poly(&FpPoly::var(self.p))
    }

    /// Evaluate an F_p polynomial at a field element.
    pub fn eval(&self, f: &FpPoly, x: u64) -> u64 {
        f.coeffs().iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), self.scalar(c)))
    }

    /// Text form: polynomial in `a`, or the integer when `k = 1`.
    pub fn label(&self, x: u64) -> String {
        if self.k == 1 {
            x.to_string()
        } else {
            self.to_poly(x).to_string().replace('T', "a")
        }
    }
}

/// Smallest monic irreducible of degree `k` over F_p in packed order of
/// the lower coefficients.
pub fn first_irreducible(p: u64, k: usize) -> Result<FpPoly, MathError> {
    if !is_prime(p) {
        return Err(MathError::CompositeModulus(p));
    }
    if k == 0 {
        return Err(MathError::InvalidAlgebraic("degree 0 extension".into()));
    }
    let count = p
        .checked_pow(k as u32)
        .ok_or_else(|| MathError::InvalidAlgebraic("field too large".into()))?;
    for low in 0..count {
        let mut c = Vec::with_capacity(k + 1);
        let mut x = low;
        for _ in 0..k {
            c.push(x % p);
            x /= p;
        }
        c.push(1);
        let f = FpPoly::new(p, c);
        if f.is_irreducible() {
            return Ok(f);
        }
    }
    unreachable!("irreducibles of every degree exist over F_p")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f9_arithmetic() {
        let f = Gf::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &FpPoly::from_i64s(3, &[1, 0, 1]));
        assert_eq!(f.size(), 9);
        let a = f.gen();
        assert_eq!(f.mul(a, a), f.neg(1));
        let nonzero: Vec<u64> = (1..9).collect();
        for &x in &nonzero {
            assert_eq!(f.pow(x, 8), 1);
            assert_eq!(f.add(x, f.neg(x)), 0);
        }
        assert_eq!(f.label(a), "a");
        assert_eq!(f.label(f.add(a, 2)), "a+2");
    }

    #[test]
    fn prime_field_and_errors() {
        let f = Gf::new(7, 1).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.label(4), "4");
        assert!(Gf::new(4, 1).is_err());
        assert!(Gf::with_modulus(FpPoly::from_i64s(2, &[1, 0, 1])).is_err());
    }

    #[test]
    fn eval_minpoly_at_generator() {
        let f = Gf::new(2, 3).unwrap();
        assert_eq!(f.eval(f.modulus(), f.gen()), 0);
    }
}
