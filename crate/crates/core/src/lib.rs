//! Exact computation of the exceptional arrangement `E_A` of a GKZ
//! hypergeometric system, the Cohen-Macaulay test for the semigroup ring
//! `C[NA]`, and the generic holonomic rank `vol(A)`.
//!
//! Everything is computed over exact rational arithmetic.  The homological
//! pipeline (free resolutions, graded Ext, toric filtrations) is
//! cross-validated degree by degree against an independent combinatorial
//! oracle built from face-indexed cochain complexes of localizations.

pub mod cli;
pub mod conegeom;
pub mod error;
pub mod gmod;
pub mod gring;
pub mod intlinalg;
pub mod localcoh;
pub mod rankjump;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
