//! Exact computation of equi-affine, parameter-shift-equivariant, minimal-degree
//! polynomial moving frames for polynomial curves.
//!
//! The pipeline, bottom-up:
//!
//! * [`poly`], [`vector`], [`matrix`], [`qmatrix`], [`group`]: dense exact-rational
//!   polynomials, polynomial vectors and matrices, constant matrices, and the
//!   `SL(n) x K` / `SA(n) x K` actions on them.
//! * [`sylvester`]: the block-shifted coefficient matrix of a vector, its reduced
//!   row-echelon form and pivot structure, and the sharp/flat isomorphism.
//! * [`bezout`]: minimal-degree Bezout vectors and mu-bases read off the
//!   Sylvester system, plus an independent Bezout-degree oracle.
//! * [`completion`]: minimal-degree matrix completion, Quillen-Suslin matrices,
//!   and a deliberately non-minimal completion map.
//! * [`equivariance`]: the explicit equivariant section, canonical forms and the
//!   equivariantized completion map.
//! * [`frames`]: validation of generic curves and the moving frame map itself.
//!
//! All arithmetic is exact over the rationals. Every value is immutable once
//! built and every operation is a pure function.

pub mod bezout;
pub mod completion;
pub mod equivariance;
pub mod error;
pub mod frames;
pub mod group;
pub mod matrix;
pub mod poly;
pub mod qmatrix;
pub mod rational;
pub mod sylvester;
pub mod vector;

pub use bezout::{bezout_degree_oracle, minimal_bezout, mu_basis, BezoutVector, MuBasis};
pub use completion::{
    minimal_matrix_completion, nonminimal_completion, quillen_suslin, verify_completion,
    Completion, CompletionReport,
};
pub use equivariance::{
    canonical, canonical_shape_violations, check_regular, emcm, equivariantize, es, es1, es2,
    pivot_profile, section, PivotProfile, SectionResult,
};
pub use error::{Error, Result};
pub use frames::{
    derivative, eamfm, frame_of, validate_generic, Condition, FrameResult, GenericCurve, Rejection,
};
pub use group::{AffineElement, GroupElement};
pub use matrix::PolyMatrix;
pub use poly::{Degree, Polynomial};
pub use qmatrix::QMatrix;
pub use rational::Rational;
pub use sylvester::{build_sylvester, flat, sharp, SylvesterSystem};
pub use vector::{outer_product, scalar_product, PolyVector};
