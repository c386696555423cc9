use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    /// `z = alpha x + beta y` with `alpha, beta > 0` and
    /// `sign(z) = alpha sign(x) + beta sign(y)`.
    Member { alpha: BigRational, beta: BigRational },
    NonmemberAtResolution,
}

fn sign(x: &BigRational) -> BigRational {
    BigRational::from_integer(BigInt::from(if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }))
}

fn witness(x: &BigRational, y: &BigRational, z: &BigRational, a: &BigRational, b: &BigRational) -> bool {
    a.is_positive()
        && b.is_positive()
        && &(a * x + b * y) == z
        && sign(z) == a * sign(x) + b * sign(y)
}

/// Decide `z ∈ c(x, y)` from the definition. When the 2x2 system in
/// `(alpha, beta)` is nonsingular the witness is unique and solved for
/// exactly; otherwise `alpha` runs over the fractions with numerator and
/// denominator at most `grid`.
pub fn c_add_membership_oracle(x: &BigRational, y: &BigRational, z: &BigRational, grid: u32) -> OracleVerdict {
    let (sx, sy, s) = (sign(x), sign(y), sign(z));
    let det = x * &sy - y * &sx;
    if !det.is_zero() {
        // [x y; sx sy] (alpha, beta) = (z, s)
        let alpha = (z * &sy - y * &s) / &det;
        let beta = (x * &s - z * &sx) / &det;
        return if witness(x, y, z, &alpha, &beta) {
            OracleVerdict::Member { alpha, beta }
        } else {
            OracleVerdict::NonmemberAtResolution
        };
    }
    for num in 1..=grid {
        for den in 1..=grid {
            let alpha = BigRational::new(num.into(), den.into());
            if !alpha.denom().is_one() && alpha.denom() != &BigInt::from(den) {
                continue; // already visited in lower terms
            }
            let beta = if !y.is_zero() {
                (z - &alpha * x) / y
            } else if !sy.is_zero() {
                (&s - &alpha * &sx) / &sy
            } else {
                BigRational::one()
            };
            if witness(x, y, z, &alpha, &beta) {
                return OracleVerdict::Member { alpha, beta };
            }
        }
    }
    OracleVerdict::NonmemberAtResolution
}
