//! # gridnav
//!
//! A desk-scale laboratory for studying the navigation algorithms that small
//! decoder-only transformers learn on grid worlds.
//!
//! Three training regimes are supported: *foraging* (next-token prediction on
//! uniform random walks), *SP-H* (shortest-path generation given Hamiltonian
//! context walks) and *SP-RW* (fine-tuning the SP-H model on partial
//! random-walk contexts). The crate provides everything needed to compare the
//! algorithms these regimes produce:
//!
//! - [`gridworld`] — grids, walks, shortest-path tasks, and brute-force
//!   oracles that all generated data is validated against.
//! - [`tokens`] — the fixed word-level vocabulary, sequence serialization for
//!   both task formats, and loss masks.
//! - [`model`] — a decoder-only transformer with exact manual gradients and
//!   first-class activation capture / intervention at addressable hook points.
//! - [`train`] — AdamW training loops for the three regimes.
//! - [`evalsuite`] — behavioral metrics (single-step accuracy, reverse bias,
//!   loop completion, shortest-path scoring, generalization sweeps).
//! - [`interp`] — representational (PCA, linear probes) and causal (direction
//!   ablation, cross-context patching, head redundancy) analyses.
//! - [`dataset`] — line-delimited dataset emission and loading.
//! - [`report`] — standalone SVG chart emission for the result files.

pub mod dataset;
pub mod evalsuite;
pub mod gridworld;
pub mod interp;
pub mod model;
pub mod report;
pub mod tokens;
pub mod train;

pub use gridworld::{Coord, Direction, GridSpec, PathTask, Walk};
pub use model::{ActivationCache, Edit, EditAction, HookPoint, Model, ModelConfig};
pub use tokens::{EncodedSequence, TokenRole, Vocab};

/// Derives the rng seed for a unit of work (sequence, trial) from a base seed.
///
/// All randomness in the crate flows from one root seed through this
/// derivation so partial pipelines stay reproducible: worker `i` may own
/// `seed_for(base, i)` without coordinating with other workers.
pub fn seed_for(base_seed: u64, index: u64) -> u64 {
    base_seed.wrapping_add(index)
}
