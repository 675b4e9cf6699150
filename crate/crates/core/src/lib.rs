//! Exact orders of modules over `Z[t, t^-1]`, their amalgamated
//! decompositions `··· ⊕_U B ⊕_U B ⊕_U ···`, and the lattice pair
//! `(F, G)` with `Δ = det(tG - F)`, `|c_0| = |det F|`, `|c_d| = |det G|`.
//!
//! Module map:
//!
//! * [`exactlin`]: integer matrices, Smith form, kernels, lattice membership.
//! * [`laurent`]: Laurent polynomials, gcd, determinants.
//! * [`present`]: presentations, the order, shift normalization.
//! * [`abgrp`]: finitely presented abelian groups and homomorphisms.
//! * [`decomp`]: the amalgam construction, reduction and lattice extraction.
//! * [`knot`]: Seifert matrices and Alexander polynomials.
//! * [`format`]: JSON input and report formats.

pub mod abgrp;
pub mod decomp;
pub mod error;
pub mod exactlin;
pub mod format;
pub mod knot;
pub mod laurent;
pub mod present;

pub use abgrp::{AbHom, CanonicalForm, FgAbGroup};
pub use decomp::{
    AmalgamData, Checks, DecomposeOptions, DecompositionReport, LatticeOutcome, LatticePair,
};
pub use error::{Error, Result};
pub use exactlin::{IntMatrix, LatticeIndex, SnfResult};
pub use knot::{KnotReport, SeifertMatrix};
pub use laurent::{LaurentMatrix, LaurentPoly};
pub use present::{LambdaPresentation, OrderOptions, ShiftNormalization};
