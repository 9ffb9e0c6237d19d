//! Desk-scale self-training on synthetic scenes with an oracle detector.

pub mod features;
pub mod oracle;
pub mod scene;
pub mod selftrain;

pub use features::{FeatureConfig, FeatureModel};
pub use oracle::{oracle_detector, rescore, OracleConfig};
pub use scene::{generate_scene, CategoryCounts, Frame, Gaussian, PointPriors, SceneConfig};
pub use selftrain::{
    ie_gain_study, self_train, self_train_on, Benchmark, IeGain, MetricsRow, RoundSummary,
    SelfTrainConfig, Toggles, Trajectory,
};
