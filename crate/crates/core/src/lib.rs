//! Christoffel words and their superimpositions.
//!
//! The library builds Christoffel words `C(n, α)`, decides whether two of them
//! can be shifted so that their marked letters never meet, counts the valid
//! shifts and produces an explicit one. Around that core sit the two-coin
//! money problem, Fraenkel words, Beatty sequences and brute-force oracles
//! for every fast path.

pub mod arith;
pub mod beatty;
pub mod christoffel;
pub mod cli;
pub mod error;
pub mod money;
pub mod oracle;
pub mod superimpose;
pub mod words;

pub use error::{Error, Result};
