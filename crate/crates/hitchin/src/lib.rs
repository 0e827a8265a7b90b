//! Exact computations with spectral curves of rank-2 parabolic Higgs fields
//! over small finite fields.
//!
//! The library builds, at desk scale, the objects that appear when a Higgs
//! field on a base curve is pulled back through a degree-two ramified cover
//! and repaired by elementary transformations:
//!
//! * exact arithmetic in `F_p`, `F_{p^k}` and `Q` ([`field`]),
//! * univariate polynomials, rational functions and Laurent expansions
//!   ([`poly`], [`ratfun`], [`series`]),
//! * hyperelliptic and biquadratic curve models with their degree-two
//!   covers ([`curve`], [`cover`], [`spectral`]),
//! * divisors, Riemann–Roch spaces and linear equivalence by exact linear
//!   algebra ([`divisor`]),
//! * parabolic Higgs fields, elementary transformations and the pullback
//!   pipeline ([`higgs`]),
//! * the correspondence between Higgs pairs and line bundles on the
//!   spectral curve, made computational ([`bnr`]),
//! * scenario-driven verification suites with JSON reports ([`scenario`],
//!   [`suites`], [`report`]).
//!
//! Everything is exact: no floating point is used anywhere. Randomized
//! checks draw from seeded, labelled streams ([`rng`]) so that every run is
//! reproducible bit for bit.

pub mod bnr;
pub mod cover;
pub mod curve;
pub mod divisor;
pub mod embed;
pub mod error;
pub mod factor;
pub mod field;
pub mod funcfield;
pub mod higgs;
pub mod linalg;
pub mod poly;
pub mod ratfun;
pub mod report;
pub mod rng;
pub mod scenario;
pub mod series;
pub mod sigma;
pub mod spectral;
pub mod suites;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use poly::Poly;
pub use ratfun::RatFun;
