//! Prefixes of minimal transposition factorisations of the long cycle
//! `(1 2 … n)`.
//!
//! The set `Σ_n(k)` of length-`k` prefixes has `n^{k−1} · C(n, k+1)`
//! elements. This crate provides the permutation machinery, an exhaustive
//! enumerator, the `𝔖_k` action on prefixes, circular parking, and the
//! surjection from pairs `(A, B)` whose fibres are shift orbits.

pub mod action;
pub mod error;
pub mod geodesic;
pub mod parking;
pub mod perm;
pub mod surjection;

pub use action::{
    apply_generator, apply_permutation, apply_word, braid_step, bubble_word, projection,
    sort_chain, GeneratorIndex,
};
pub use error::{Error, Result};
pub use geodesic::{
    check_carac, enumerate_sigma, enumerate_sigma_capped, involute, support, Chain, ValidityReport,
    DEFAULT_ENUMERATION_CAP,
};
pub use parking::{
    normalize, park, park_traced, residue, shift_pair, ParkingInput, ParkingOutcome,
};
pub use perm::{Permutation, Transposition};
pub use surjection::{
    count_formula, fiber, gamma, gamma_traced, section, verify, PairAB, VerifyReport,
};
