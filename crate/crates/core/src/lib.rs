//! Exact-arithmetic toolkit for classifying dynamical symmetries of boson models,
//! including the angular-momentum-non-conserving ones.
//!
//! The crate builds the bilinear generator algebras of small boson models --
//! `u2` (s,t scalar bosons), `u2u2` (two such pairs), `u3` (a single p vector
//! boson) and `u4` (s + p bosons) -- entirely over an exact scalar field
//! (Gaussian rationals extended by square roots of squarefree integers), and
//! provides:
//!
//! * normal-ordered boson operator polynomials with exact commutators
//!   ([`boson`]),
//! * exact Clebsch-Gordan coefficients and spherical-tensor coupling
//!   ([`angular`]),
//! * structure constants, Killing forms, centers, radicals and Levi
//!   decompositions ([`lie`]),
//! * classification of A1 (sl2) subalgebras by weighted Dynkin diagrams
//!   ([`wdd`]),
//! * decomposition of an algebra into spherical tensor multiplets with respect
//!   to a chosen angular-momentum-like triple, including half-integer-rank
//!   (spinor) multiplets ([`tensor`]),
//! * a curated, machine-verified catalog of subalgebra lattices and reduction
//!   chains for the four models ([`models`]),
//! * quadratic Casimir operators, closed-form branching spectra and numerical
//!   Fock-space cross-checks ([`spectrum`], [`fock`]).
//!
//! All symbolic computation is exact; floating point appears only in the
//! optional Fock-space diagonalization layer.

pub mod angular;
pub mod boson;
pub mod error;
pub mod fock;
pub mod half;
pub mod lie;
pub mod linalg;
pub mod models;
pub mod scalar;
pub mod spectrum;
pub mod tensor;
pub mod wdd;

pub use error::{Error, Result};
pub use half::HalfInt;
pub use scalar::RadicalScalar;
