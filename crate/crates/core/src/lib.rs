//! Exact verification toolkit for biFrobenius algebras given by structure
//! constants.
//!
//! An algebra `(H, m, 1)` and a coalgebra `(H, Δ, ε)` on the same space,
//! together with a right integral `t` and a right cointegral `φ`, determine
//! the map `S(x) = Σ φ(t₁x) t₂`. When `S` is an antiautomorphism of both
//! structures the data form a biFrobenius algebra, and this crate computes
//! everything downstream of it exactly: the inverse `S̄`, the modular element
//! and function, left integrals, the Nakayama and coNakayama automorphisms,
//! Radford's formula for `S⁴`, the trace identities for `S²` and the
//! Nakayama maps, the `S ⋆ id = id ⋆ S = uε` condition, and trace-form
//! semisimplicity.
//!
//! Arithmetic is over the rationals or a prime field; nothing is rounded.
//!
//! ```
//! use bifrob::{fixtures, BiFrobeniusAlgebra, FieldSpec};
//!
//! let fx = fixtures::b4(FieldSpec::rationals());
//! let b = BiFrobeniusAlgebra::build(fx.algebra, fx.coalgebra, Some(fx.integral), Some(fx.cointegral)).unwrap();
//! assert!(b.antipode().is_identity());
//! assert!(!b.is_sbf());
//! ```

pub mod algcoalg;
pub mod bifrob;
pub mod cli;
pub mod field;
pub mod file;
pub mod fixtures;
pub mod linalg;
pub mod report;

pub use algcoalg::{ConvolutionInverse, FinDimAlgebra, FinDimCoalgebra, LinearEndo, LinearForm};
pub use bifrob::{BiFrobeniusAlgebra, BuildError};
pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Tensor3};
pub use report::{CheckEntry, Outcome, VerificationReport, Witness, WitnessValue};
