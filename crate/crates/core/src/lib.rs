//! Order-type invariants of finite permutation groups.
//!
//! Two finite groups have the same *order type* when they contain the same
//! number of elements of every order. This crate computes that invariant and
//! its relatives for permutation groups given by generators, and implements a
//! search pipeline that expresses the order type of a non-solvable group as a
//! product of order types of solvable ones:
//!
//! - [`perm`] / [`group`] — permutation arithmetic, closure enumeration,
//!   derived series, normal subgroups, direct-product detection;
//! - [`catalog`] — a bundled corpus of small groups keyed by `(order, index)`
//!   identifiers, with validated permutation generators;
//! - [`spectra`] — order spectra, exponent spectra, Möbius inversion between
//!   them, and factored products of spectra across direct powers;
//! - [`revolved`] — multiplicative Möbius inversion of exponent spectra and
//!   the sparse prime-valuation vectors it induces;
//! - [`linsolve`] — assembling the sparse valuation matrix, least-squares
//!   screening, exact rational solving, and multiplicity certificates.
//!
//! The whole pipeline is exact: spectra are machine integers, products are
//! kept in factored form ([`FactoredValue`]), and the linear solver works
//! over arbitrary-precision rationals. Floating point appears only in the
//! least-squares screen.

pub mod arith;
pub mod catalog;
pub mod factored;
pub mod group;
pub mod linsolve;
pub mod perm;
pub mod revolved;
pub mod spectra;

pub use catalog::{Catalog, GroupDescriptor, GroupId, Side};
pub use factored::FactoredValue;
pub use group::FiniteGroup;
pub use perm::Permutation;
pub use revolved::{RevolvedSpectrum, ValuationVector};
pub use spectra::{ExponentSpectrum, OrderSpectrum};
