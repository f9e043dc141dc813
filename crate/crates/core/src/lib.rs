//! Exact-arithmetic toolkit for invertible quasihomogeneous singularities.
//!
//! Everything is computed over arbitrary-precision rationals: charges and
//! weights of an invertible polynomial, its maximal diagonal symmetry group,
//! graded Milnor rings of restrictions, the bigraded A- and B-model state
//! spaces with their residue pairings, the transposition-dual polynomial and
//! group, the orbifold Frobenius product, and the selection rules, line
//! bundle degrees and genus-zero correlators of the associated moduli of
//! decorated curves.  The [`catalog`] module enumerates small invertible
//! polynomials and machine-checks the duality statements over the whole
//! family.
//!
//! No floating point is used anywhere; all equalities asserted by the test
//! suite are exact.

pub mod catalog;
pub mod error;
pub mod exactmath;
pub mod fjrw;
pub mod frobenius;
pub mod milnor;
pub mod polynomial;
pub mod statespace;
pub mod symmetry;

pub use error::Error;
pub use exactmath::{Int, Rational};
pub use polynomial::InvertiblePolynomial;
pub use symmetry::{Subgroup, SymmetryElement, SymmetryGroup};
