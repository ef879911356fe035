//! Exact-arithmetic models of E7, E8, F4 and the classical series built from
//! binary linear codes, octonion sign tables and their coordinate algebras.
//!
//! The pipeline is
//! [`codes`] → [`composition`] (sign tables) → [`coordalg`] → [`liealg`],
//! with [`lattices`] and [`analysis`] providing independent verification and
//! [`classical`] cross-checking the abstract builder against matrix models.

pub mod analysis;
pub mod classical;
pub mod cli;
pub mod codes;
pub mod composition;
pub mod coordalg;
pub mod error;
pub mod lattices;
pub mod liealg;
pub mod linalg;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Q;
