//! Combinatorics of growth diagrams, dual equivalence, crystals of words and
//! cactus group actions, with exact Gaudin Hamiltonians for the spectral side.

pub mod cactus;
pub mod error;
pub mod gaudin;
pub mod growth;
pub mod jdt;
pub mod json;
pub mod tableaux;
pub mod words;

pub use error::{Error, Result};
