//! Exact arithmetic kernel: rationals, dense polynomials in one and two
//! indeterminates, `Q(√D)` and the cyclotomic fields `Q(ζ_m)`.

mod bipoly;
mod cyclo;
mod poly;
mod quad;

pub use bipoly::BiPoly;
pub use cyclo::{cyclo_invert, cyclotomic_polynomial, euler_phi, CyclotomicField, CyclotomicNumber};
pub use poly::UniPoly;
pub use quad::{quad_binet, QuadExtNumber};

/// Exact rational coefficient used everywhere; always stored in lowest terms
/// with a positive denominator.
pub type Scalar = num_rational::BigRational;

pub fn int(n: impl Into<num_bigint::BigInt>) -> Scalar {
    Scalar::from_integer(n.into())
}
