//! Permutation arrays: construction, verification and extension.

pub mod cli;
pub mod error;
pub mod extend;
pub mod field;
pub mod group;
pub mod io;
pub mod kron;
pub mod latin;
pub mod ledger;
pub mod perm;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{hamming_distance, Permutation, PermutationArray, Symbol, MAX_N};
