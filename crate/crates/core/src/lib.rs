//! Constant-dimension subspace codes built by lifting maximum-rank-distance
//! (MRD) codes, together with the combinatorial designs they induce and the
//! binary linear codes spanned by their incidence matrices.
//!
//! The library is organised bottom-up:
//!
//! * [`field`]: finite fields GF(q) and extensions GF(q^m) with a fixed,
//!   frozen table of irreducible moduli so that element encodings are stable
//!   across builds.
//! * [`linalg`]: matrices over GF(q), reduced row echelon form, subspaces in
//!   canonical form, and the subspace (injection) distance.
//! * [`grassmann`]: Gaussian binomials and deterministic enumeration of the
//!   Grassmannian by identifying vector and Ferrers tableau.
//! * [`rankmetric`]: rank distance, Gabidulin codes, lifting, and exhaustive
//!   or sampled minimum-distance verification of subspace codes.
//! * [`ferrers`]: Ferrers diagrams of identifying vectors, the dimension
//!   bound for diagram-supported rank-metric codes (three rows, rank
//!   distance two), and a constructive matching code.
//! * [`designs`]: transversal designs, subspace-transversal designs and
//!   orthogonal arrays obtained from lifted MRD codes, with verifiers that
//!   return explicit counterexamples on failure.
//! * [`constructions`]: three families of constant-dimension codes that
//!   extend a lifted MRD code by codewords supported on further identifying
//!   vectors, plus parallelisms of the projective space PG(3,q) used by the
//!   third family.
//! * [`bounds`]: Johnson-type and packing upper bounds, the asymptotic
//!   density of MRD-lifted codes, and exact rational arithmetic helpers.
//! * [`lincode`]: binary linear codes from incidence matrices between
//!   codewords and the points they cover, with Tanner-graph distance bounds
//!   and an exact spectrum certificate for the Gram matrix.
//! * [`rng`]: a tiny deterministic generator for seeded sampling.
//! * [`formats`]: byte-exact text and JSON readers/writers for matrices,
//!   subspaces, codes, design reports and sparse-matrix (alist) files.
//!
//! Everything user-visible is deterministic: enumeration orders are fixed,
//! sampled verification is driven by an explicit seed, and parallel sweeps
//! reduce with order-independent merges.

pub mod bounds;
pub mod constructions;
pub mod designs;
pub mod ferrers;
pub mod field;
pub mod formats;
pub mod grassmann;
pub mod lincode;
pub mod linalg;
pub mod rankmetric;
pub mod rng;

pub use field::{ExtField, Field, PrimePower};
pub use linalg::{MatrixGF, Subspace};
pub use rankmetric::{CodeFamily, ConstantDimensionCode, DistanceCheck, DistanceMode};

use thiserror::Error;

/// Crate-wide error type. Variants carry enough context to reconstruct the
/// violated precondition without a debugger.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0} is not a prime power in the supported range 2..=65536")]
    NotPrimePower(u64),

    #[error("{what} needs {needed} items but the cap is {cap}; raise the cap explicitly to proceed")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("construction precondition failed: {0}")]
    Construction(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Default cap on the number of subspaces any single enumeration may emit.
pub const ENUMERATION_CAP: u128 = 10_000_000;

/// Default cap on the number of codeword pairs an exhaustive distance sweep
/// may visit. Overridable at every call site that performs a sweep.
pub const PAIR_CAP: u128 = 1_000_000_000;
