//! Mutual information about the parity of an n-bit string carried by
//! non-orthogonal qubit signals.
//!
//! The core objects are [`signals::SignalPair`] (one qubit's two signal
//! states, pure or noisy) and [`parity::ParityEnsemble`] (the reduction of
//! the 2^n-dimensional parity discrimination problem to a weighted family of
//! binary channels). [`analysis`] turns ensembles into the headline
//! quantities; [`verify`] cross-checks the closed forms against dense
//! matrix constructions.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod infotheory;
pub mod logdomain;
pub mod matvec;
pub mod parity;
pub mod signals;
pub mod verify;

pub use analysis::InfoReport;
pub use error::{Error, Result};
pub use parity::{BlockChannel, ParityEnsemble};
pub use signals::SignalPair;
