//! Exact computer algebra for crepant resolutions of Gorenstein weighted
//! projective spaces.
//!
//! The pipeline, mirroring the geometry:
//!
//! 1. [`wps`] — weighted-projective combinatorics: Gorenstein tests, twisted
//!    sectors and ages, fans, and crepant subdivisions with validators.
//! 2. [`toricring`] — the cohomology ring of a smooth complete toric
//!    resolution from fan data, with the exact degree functional, Poincaré
//!    pairing, and the cone of contracted curve classes.
//! 3. [`qcorr`] — the quantum-corrected cup product from the closed-form
//!    Gromov-Witten rule for a transversal A_k chain plus isolated classes.
//! 4. [`chenruan`] — Chen-Ruan cohomology of the orbifold: additive structure
//!    for arbitrary Gorenstein weights, ring structure for the built-in
//!    families.
//! 5. [`isocheck`] — mechanical verification that a linear map between two
//!    graded algebras is a ring isomorphism and an isometry.
//!
//! Everything runs over exact scalars ([`exact`]): arbitrary-precision
//! rationals and cyclotomic field elements. There is no floating point
//! anywhere in the crate.

pub mod algebra;
pub mod chenruan;
pub mod exact;
pub mod gb;
pub mod isocheck;
pub mod qcorr;
pub mod toricring;
pub mod wps;


pub use algebra::GradedAlgebra;
pub use exact::{CycloNumber, ExactMatrix, Rational};
pub use wps::{Fan, Weights};

