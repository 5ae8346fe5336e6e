//! Combinatorics of k-abelian equivalence: factor vectors, switchings,
//! exact class sizes, singleton structure, necklaces and de Bruijn
//! cycle decompositions.

pub mod cardinality;
pub mod error;
pub mod factors;
pub mod fixtures;
pub mod necklace;
pub mod periodicity;
pub mod rational;
pub mod scan;
pub mod singletons;
pub mod switching;
pub mod word;

pub use error::{Error, Result};
pub use rational::Rational;
pub use word::{Alphabet, Letter, Word};
