//! Exact arithmetic for hyperfields and hyperrings, with a numerical module
//! for the counting distribution attached to the zeros of ζ.
//!
//! Finite structures and spectra work over exact integers and rationals.
//! `rconvex` is generic over an ordered scalar and `counting` over any
//! `num_traits::Float`; the aliases below fix the scalars the command-line
//! tool uses.

pub mod counting;
pub mod exactmath;
pub mod hypercore;
pub mod quotients;
pub mod rconvex;
pub mod spec_k;
pub mod spec_s;

/// Exact rational scalar of the algebraic modules.
pub type Rational = num_rational::BigRational;
/// Floating scalar of the counting module.
pub type Real = f64;
/// Zero list in double precision.
pub type Zeros = counting::ZeroList<Real>;
/// Sign-convex subset of the rationals.
pub type RatSet = rconvex::RatSet;
