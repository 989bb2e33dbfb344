//! Families of DFAs, natural colors and canonical acceptors for ω-regular languages.

pub mod automata;
pub mod blackwhite;
pub mod checks;
pub mod error;

pub use error::{Error, Limits, Result};
pub mod fdfa;
pub mod omega;
pub mod fixtures;
pub mod persistent;
pub mod wagner;
pub mod colors;
