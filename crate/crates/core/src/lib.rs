//! Exact m-section of second-order linear recurrences.
//!
//! A Horadam sequence `H(p,q;r,s;n)` satisfies `H(n) = r·H(n-1) + s·H(n-2)` with
//! seeds `H(0) = p`, `H(1) = q`. Its `m`-section splits it into the `m`
//! subsequences `H(m·n + l)`, each of which is again a Horadam sequence. This
//! crate computes the new seeds, signature and rational generating functions in
//! closed form (through Chebyshev `S` and `R` polynomials) and checks every
//! closed form against two independent routes:
//!
//! * the root-of-unity filter over the cyclotomic field `Q(ζ_m)`, driven by the
//!   explicit inverse of the special Vandermonde matrix ([`vandermonde`]);
//! * truncated power-series expansion and coefficient extraction ([`series`]).
//!
//! All arithmetic is exact: arbitrary-precision rationals, dense polynomials,
//! `Q(√D)` and `Q(ζ_m)`.

pub mod check;
pub mod chebyshev;
pub mod error;
pub mod exactalg;
pub mod horadam;
pub mod multisection;
pub mod oeis;
pub mod params;
pub mod series;
pub mod vandermonde;

pub use check::{CheckReport, Counterexample};
pub use error::{Error, Result};
pub use exactalg::{BiPoly, CyclotomicField, CyclotomicNumber, QuadExtNumber, Scalar, UniPoly};
pub use params::{HoradamSpec, Signature};
pub use multisection::{RationalOgf, SectionParams, SignC};
