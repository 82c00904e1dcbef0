//! Event-only road segmentation at the raw event level.
//!
//! The crate ingests event-camera streams (x, y, t, polarity quadruples),
//! slices them into fixed-length windows, and runs them through a small
//! transformer whose attention scores are a sum of two Bayesian posterior
//! terms (a key posterior and a spatial-distance posterior over a shared
//! Gaussian-mixture evidence). Pretraining is self-supervised: windows are
//! labelled by thresholding the binary entropy of their polarity statistics,
//! and the network learns to predict that label. Fine-tuning swaps the
//! classifier head and trains end-to-end on few labelled windows.
//!
//! Everything is built on a minimal dense-tensor engine with a reverse-mode
//! tape, so gradients are checkable against central finite differences.
//!
//! Module map:
//! - [`events`]: event/window types, feature extraction, synthetic streams
//! - [`io`]: stream parsing, windowing, label files, checkpoints
//! - [`tensor`]: tensors, forward ops, autodiff tape, gradient checker
//! - [`attention`]: the probabilistic attention scores and their oracle path
//! - [`net`]: the full network, parameter/FLOP accounting
//! - [`ssl`]: polarity entropy, threshold labels, AdamW, pretraining loop
//! - [`eval`]: fine-tuning, accuracy/mIoU, compute benchmark

pub mod attention;
pub mod error;
pub mod eval;
pub mod events;
pub mod io;
pub mod net;
pub mod ssl;
pub mod tensor;

pub use error::{Error, Result};

/// Crate version string, embedded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
