//! Exact partition dualities, infinitesimal characters, Richardson induction
//! and mild-unipotence checks for simple Lie algebras.

pub mod checker;
pub mod corpus;
pub mod dualities;
pub mod error;
pub mod induction;
pub mod infchar;
pub mod partition;
pub mod rational;
pub mod rootsys;

pub use error::{Error, Result};
pub use partition::{ClassicalFamily, Epsilon, Partition};
pub use rational::{Rational, Vector};
pub use rootsys::{LieType, Lattice, RootSystem};
