//! Exact-arithmetic kernel for Hall-Littlewood symmetric functions.
//!
//! Everything is computed over the field Q(t) of rational functions in the
//! deformation parameter, with no floating point anywhere. The internal
//! representation of a symmetric function is its power-sum expansion
//! ([`symfunc::SymFunc`]), because the involution omega, the deformed inner
//! product, adjoint (lowering) operators, and plethysm by monomial
//! alphabets are all diagonal or derivation-like there.
//!
//! On top of the kernel:
//! - [`bases`] constructs the named families (h, e, the one-row generators
//!   q_n and b_n, Schur, Pfaffian Schur-Q, Hall-Littlewood Q and its
//!   omega-image B, skew functions), with two independent routes to
//!   Q_lambda: iterated vertex operators and the classical
//!   raising-operator expansion.
//! - [`vertexops`] implements the row-creation operators
//!   sum_i (-1)^i q_{n+i} b_i-perp and friends, their full Laurent series,
//!   and the classical Bernstein operators they degenerate to at t = 0.
//! - [`structure`] computes skew structure coefficients f^lambda_{mu,nu}(t)
//!   and Hall polynomials g^lambda_{mu,nu}(t), and scans coefficient
//!   sequences for stabilization as the leading index part grows.
//! - [`verify`] packages the identity checks into named suites; the
//!   `symfunc` binary in the companion CLI crate surfaces them.

pub mod bases;
pub mod error;
pub mod linalg;
pub mod multipoly;
pub mod partition;
pub mod plethysm;
pub mod structure;
pub mod symfunc;
pub mod tpoly;
pub mod trational;
pub mod verify;
pub mod vertexops;

pub use error::{Error, Result};
pub use multipoly::{monomial_expansion, specialize_vars, MultiPoly};
pub use partition::{enumerate_partitions, partitions_up_to, Composition, Partition};
pub use plethysm::{plethysm_alphabet, AlphabetExpr, AlphabetTerm, LaurentZ};
pub use symfunc::{adjoint_apply, adjoint_apply_classical, SymFunc};
pub use tpoly::TPoly;
pub use trational::TRational;
