//! Exact combinatorics of cuspidal singularities of rational plane curves.
//!
//! The crate covers resolution graphs of cusps, their Hamburger-Noether
//! pairs and numerical invariants, catalogs of cusp types with small
//! `lambda`, and the finite case analysis for curves with four or five
//! cusps.

pub mod catalog;
pub mod classifier;
pub mod error;
pub mod expected;
pub mod hn;
pub mod lattice;
mod par;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
