//! Exact verification engine for the Jordanian-type quantum deformation of
//! the orthosymplectic supergroup `OSp(1|2)` and its dual Borel algebra.
//!
//! Everything is computed over exact rings. The working coefficient ring is
//! `Q[s, p]/(s² − 2)` with `p` the deformation parameter, exposed as
//! [`Scalar`]; containers are generic over [`Ring`] and are instantiated with
//! the concrete aliases below.

pub mod alphabet;
pub mod borel;
pub mod classical;
pub mod error;
pub mod frt;
pub mod linalg;
pub mod mpoly;
pub mod qsqrt2;
pub mod ratfunc;
pub mod rewrite;
pub mod ring;
pub mod scalar;
pub mod span;
pub mod supermatrix;
pub mod superpoly;
pub mod tensor;
pub mod text;
pub mod upoly;
pub mod verify;

pub use alphabet::{Alphabet, Letter};
pub use error::{Error, Result};
pub use qsqrt2::QSqrt2;
pub use ratfunc::RatFunc;
pub use rewrite::RewriteSystem;
pub use ring::{Field, Ring, Q};
pub use scalar::Scalar;
pub use supermatrix::SuperMatrix;
pub use superpoly::{SuperPoly, Word};
pub use upoly::UPoly;

/// Rational functions in `p` over Q(√2); the fraction field of [`Scalar`].
pub type ScalarFrac = RatFunc<QSqrt2>;
/// Noncommutative polynomials with coefficients in [`Scalar`].
pub type Poly = SuperPoly<Scalar>;
/// Supermatrices with polynomial entries (T, T₁, T₂, L⁺, residuals).
pub type PolyMatrix = SuperMatrix<Poly>;
/// Supermatrices with scalar entries (R, R̃, C).
pub type ScalarMatrix = SuperMatrix<Scalar>;
/// Tensor-square and tensor-cube elements over words.
pub type TensorElement = tensor::Tensor<Word, Scalar>;
