//! Positive braids, T-links and V-links: conversion between the two
//! parameter families, minimal braid presentations, geometric
//! classification rules, and invariant oracles for checking equivalences.

pub mod braid;
pub mod classify;
pub mod conversion;
pub mod corpus;
pub mod error;
pub mod invariants;
pub mod isotopy;
pub mod notation;
pub mod params;
pub mod scalar;
pub mod trace;

pub use braid::{BraidWord, StrandPermutation};
pub use classify::{classify_t, classify_v, GeometricKind, GeometricVerdict, Witness};
pub use conversion::{dual_t, minimal_braid, t_to_v, v_to_t};
pub use error::{Error, Result};
pub use invariants::{InvariantProfile, LaurentPoly};
pub use notation::{parse_spec, parse_t, parse_v};
pub use isotopy::Isotopy;
pub use params::{Block, LinkSpec, TLinkSpec, VLinkSpec};
pub use trace::{ConversionTrace, TraceStep};

/// Integer Laurent polynomial used for invariants.
pub type Laurent = LaurentPoly<i64>;
/// Arbitrary-precision Laurent polynomial.
pub type BigLaurent = LaurentPoly<num_bigint::BigInt>;
/// Prime field on the Mersenne prime `2^61 - 1`.
pub type Fp61 = scalar::Fp<{ scalar::PRIME_0 }>;
