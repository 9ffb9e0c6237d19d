//! Pseudo-label refinement for cross-domain LiDAR 3D detection.
//!
//! - [`refinery`]: complementary augmentation of unreliable pseudo boxes.
//! - [`proposals`]: interpolation and extrapolation of proposals.
//! - [`alignment`]: batch-hard triplet losses over RoI features.
//! - [`evaluation`]: AP over 40 recall positions and Closed Gap.
//! - [`harness`]: a synthetic self-training loop driven by an oracle detector.
//! - [`io`]: point cloud, label, feature and metrics files, run configuration.

pub mod alignment;
pub mod error;
pub mod evaluation;
pub mod geometry;
pub mod harness;
pub mod io;
pub mod proposals;
pub mod refinery;
pub mod rng;

pub use error::{Error, Result};
pub use rng::RandomState;
