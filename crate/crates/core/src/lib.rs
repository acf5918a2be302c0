//! Desk-scale laboratory for sparse subnetworks that stay robust to dataset
//! bias. A tiny transformer encoder is trained on synthetic sentence-pair
//! tasks with an injected spurious correlation; subnetworks are then searched
//! by iterative magnitude pruning or binary mask training, optionally with
//! debiasing losses, and evaluated both in-distribution and on a split where
//! the correlation is broken.

pub mod error;
pub mod gradcheck;
pub mod optim;
pub mod rng;
pub mod tape;
pub mod tensor;

pub use error::{Error, Result};
pub use tensor::Tensor;
