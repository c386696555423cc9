//! Mathematical constants to 40 significant digits, kept as decimal strings
//! so they can be combined exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

/// Euler's constant γ.
pub const EULER_GAMMA: &str = "0.5772156649015328606065120900824024310422";
/// log 2.
pub const LOG_2: &str = "0.6931471805599453094172321214581765680755";
/// log π.
pub const LOG_PI: &str = "1.144729885849400174143427351353058711647";
/// log 4π.
pub const LOG_4PI: &str = "2.531024246969290792977891594269411847798";
/// ζ′(−1).
pub const ZETA_PRIME_M1: &str = "-0.1654211437004509292139196602427806427640";
/// log A for the Glaisher–Kinkelin constant A; ζ′(−1) = 1/12 − log A.
pub const LOG_GLAISHER: &str = "0.2487544770337842625472529935761139760974";

/// Exact rational value of a decimal literal.
pub fn decimal(s: &str) -> BigRational {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits: BigInt = format!("{int}{frac}").parse().expect("decimal literal");
    let scale = BigInt::from(10).pow(frac.len() as u32);
    let v = BigRational::new(digits, scale);
    if neg {
        -v
    } else {
        v
    }
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// ω(1) = 1/2 + γ/2 + log(4π)/2 − ζ′(−1)/ζ(−1), with ζ(−1) = −1/12.
pub fn omega_one_exact(gamma: &BigRational, log_4pi: &BigRational, zeta_prime_m1: &BigRational) -> BigRational {
    half() + gamma * half() + log_4pi * half() + zeta_prime_m1 * BigRational::from_integer(BigInt::from(12))
}

/// ω(1) from {γ, log 4π, ζ′(−1)}.
pub fn omega_one_direct() -> BigRational {
    omega_one_exact(&decimal(EULER_GAMMA), &decimal(LOG_4PI), &decimal(ZETA_PRIME_M1))
}

/// ω(1) from {γ, log 2, log π, log A}, through log 4π = 2 log 2 + log π and
/// ζ′(−1) = 1/12 − log A.
pub fn omega_one_via_glaisher() -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let log_4pi = two * decimal(LOG_2) + decimal(LOG_PI);
    let zp = BigRational::new(BigInt::one(), BigInt::from(12)) - decimal(LOG_GLAISHER);
    omega_one_exact(&decimal(EULER_GAMMA), &log_4pi, &zp)
}

/// c = (log π + γ)/2, the constant term of the κ distribution.
pub fn kappa_constant_exact() -> BigRational {
    (decimal(LOG_PI) + decimal(EULER_GAMMA)) * half()
}
