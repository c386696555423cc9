//! Exact computational kernel: integer and prime-field polynomials,
//! resultants, factorization, real-root isolation and sign evaluation at
//! real algebraic numbers.

mod algebraic;
mod factor_q;
mod fp;
mod gf;
mod poly;
mod resultant;
mod roots;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use algebraic::{refine_to_select, sign_at, AlgebraicReal, Combine, RatInterval};
pub use factor_q::{canonical_cmp, factor_q, irreducible_factors, is_irreducible_q, Factorization};
pub use fp::{distinct_factors_fp, factor_fp, is_prime, FpPoly};
pub use gf::{first_irreducible, Gf};
pub use poly::{Coeff, IntPoly, Poly};
pub use resultant::{product_resultant, resultant, sum_resultant};
pub use roots::{isolate_real_roots, SturmSequence};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MathError {
    #[error("undefined resultant: zero input polynomial")]
    UndefinedResultant,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("polynomial is not squarefree; apply squarefree_part first")]
    NotSquarefree,
    #[error("cannot parse polynomial {0:?}: {1}")]
    Parse(String, String),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error("no candidate factor vanishes at the combined value")]
    NoCandidate,
    #[error("{0}")]
    InvalidAlgebraic(String),
}

/// Write `(degree, coefficient)` terms, highest degree first, in the
/// canonical text form `T^4-10*T^2+1`.
pub(crate) fn format_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (d, c) in terms {
        if c.is_negative() {
            f.write_str("-")?;
        } else if !first {
            f.write_str("+")?;
        }
        first = false;
        let a = c.abs();
        match d {
            0 => write!(f, "{a}")?,
            _ => {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                f.write_str("T")?;
                if d > 1 {
                    write!(f, "^{d}")?;
                }
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(
            f,
            self.coeffs()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone())),
        )
    }
}

/// Parse the polynomial text format: integer coefficients, variable `T`,
/// caret powers, optional `*`; whitespace ignored.
pub fn parse_poly(text: &str) -> Result<IntPoly, MathError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |m: &str| MathError::Parse(text.to_string(), m.to_string());
    if s.is_empty() {
        return Err(err("empty input"));
    }
    let bytes = s.as_bytes();
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = BigInt::one();
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        } else if i != 0 {
            return Err(err("expected + or -"));
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef = if i > start {
            s[start..i].parse::<BigInt>().map_err(|_| err("bad coefficient"))?
        } else {
            BigInt::one()
        };
        let mut degree = 0usize;
        let had_coef = i > start;
        if i < bytes.len() && bytes[i] == b'*' {
            if !had_coef {
                return Err(err("'*' without coefficient"));
            }
            i += 1;
            if i >= bytes.len() || bytes[i] != b'T' {
                return Err(err("expected T after '*'"));
            }
        }
        if i < bytes.len() && bytes[i] == b'T' {
            i += 1;
            degree = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let ds = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if ds == i {
                    return Err(err("expected exponent"));
                }
                degree = s[ds..i].parse().map_err(|_| err("bad exponent"))?;
                if degree > 100_000 {
                    return Err(err("exponent too large"));
                }
            }
        } else if !had_coef {
            return Err(err("expected a term"));
        }
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, BigInt::zero());
        }
        coeffs[degree] += sign * coef;
    }
    Ok(IntPoly::new(coeffs))
}

/// Parse `n`, `-n`, `n/d`.
pub fn parse_rational(text: &str) -> Result<BigRational, MathError> {
    let s = text.trim();
    let err = || MathError::ParseRational(text.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}

/// `n` or `n/d`, reduced, sign on the numerator.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `x` rounded to `digits` significant digits, in shortest form.
pub fn format_sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let r: f64 = format!("{:.*e}", digits.saturating_sub(1), x).parse().unwrap_or(x);
    if r == 0.0 {
        "0".into()
    } else {
        r.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(std::f64::consts::SQRT_2, 12), "1.41421356237");
        assert_eq!(format_sig(44.556600000001, 12), "44.5566");
        assert_eq!(format_sig(-0.0, 12), "0");
        assert_eq!(format_sig(2.0, 12), "2");
    }

    #[test]
    fn parse_and_print_roundtrip() {
        for s in ["T^4-10*T^2+1", "2*T-1", "-T^2+3", "T", "0", "7", "-T^3-T"] {
            assert_eq!(parse_poly(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_poly(" T ^ 2 - 2 ").unwrap(), IntPoly::from_i64s(&[-2, 0, 1]));
        assert_eq!(parse_poly("2T+T").unwrap(), IntPoly::from_i64s(&[0, 3]));
        assert_eq!(parse_poly("1+T^2").unwrap().to_string(), "T^2+1");
    }

    #[test]
    fn parse_errors() {
        for s in ["", "T^", "2**T", "T+", "x", "*T", "T2"] {
            assert!(parse_poly(s).is_err(), "{s}");
        }
    }

    #[test]
    fn rationals() {
        assert_eq!(format_rational(&parse_rational("-2/4").unwrap()), "-1/2");
        assert_eq!(format_rational(&parse_rational("6/3").unwrap()), "2");
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn fp_display() {
        assert_eq!(FpPoly::from_i64s(2, &[1, 1, 1]).to_string(), "T^2+T+1");
        assert_eq!(FpPoly::from_i64s(5, &[3, 1]).to_string(), "T+3");
    }
}
