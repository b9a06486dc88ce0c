//! Desk-scale adversarial attack engine and transferability benchmark.
//!
//! The crate bundles a minimal differentiable classifier stack (`diffnet`),
//! dataset ingestion and generation (`data`), Nesterov-momentum training
//! (`train`), the full gradient-sign attack family (`attacks`), a randomized
//! input defense (`defense`), and experiment procedures (`eval`), wired
//! together by the `tbnet` command-line binary (`cli`).

pub mod attacks;
pub mod cli;
pub mod data;
pub mod defense;
pub mod diffnet;
pub mod eval;
pub mod train;

mod error;

pub use error::{Error, Result};
pub use diffnet::tensor::{ImageBatch, Tensor};
