//! Noisy oracle detector standing in for a two-stage LiDAR network.
//!
//! The first stage emits a few perturbed proposals per ground-truth object.
//! Each proposal center is also dragged along the object's point-density
//! offset by a random multiple of the bias coefficient, so proposals pile
//! up on the densely sampled side of sparse objects. The second stage
//! (`rescore`) reports the true best IoU plus noise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{iou_3d, Box3D, Category, Size3, Vec3};
use crate::harness::scene::{sample_size, Frame};
use crate::proposals::Proposal;
use crate::rng::RandomState;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OracleConfig {
    /// Center noise per ground-plane axis (meters); z uses half of it.
    pub center_sigma: f64,
    /// Relative size noise.
    pub size_sigma: f64,
    /// Heading noise (radians).
    pub heading_sigma: f64,
    /// Noise on the IoU-confidence of first-stage proposals.
    pub confidence_sigma: f64,
    /// Noise on the second-stage rescoring.
    pub rescore_sigma: f64,
    pub proposals_per_object: usize,
    /// Poisson mean of false positives per frame.
    pub false_positive_rate: f64,
    pub false_positive_max_confidence: f64,
    pub miss_rate: f64,
    /// Multiplier on the density offset applied to proposal centers.
    pub density_bias: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            center_sigma: 0.2,
            size_sigma: 0.05,
            heading_sigma: 0.05,
            confidence_sigma: 0.08,
            rescore_sigma: 0.03,
            proposals_per_object: 4,
            false_positive_rate: 3.0,
            false_positive_max_confidence: 0.5,
            miss_rate: 0.05,
            density_bias: 1.5,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        let rates = [self.miss_rate, self.false_positive_max_confidence];
        if rates.iter().any(|r| !(0.0..=1.0).contains(r)) {
            return Err(Error::Config("oracle rates must lie in [0, 1]".into()));
        }
        let sigmas = [
            self.center_sigma,
            self.size_sigma,
            self.heading_sigma,
            self.confidence_sigma,
            self.rescore_sigma,
            self.false_positive_rate,
            self.density_bias,
        ];
        if sigmas.iter().any(|s| !(s.is_finite() && *s >= 0.0)) {
            return Err(Error::Config("oracle noise parameters must be finite and >= 0".into()));
        }
        Ok(())
    }

    /// All error parameters multiplied by `scale`. Rates are capped at 1.
    pub fn scaled(&self, scale: f64) -> Self {
        Self {
            center_sigma: self.center_sigma * scale,
            size_sigma: self.size_sigma * scale,
            heading_sigma: self.heading_sigma * scale,
            confidence_sigma: self.confidence_sigma * scale,
            rescore_sigma: self.rescore_sigma * scale,
            false_positive_rate: self.false_positive_rate * scale,
            miss_rate: (self.miss_rate * scale).min(1.0),
            density_bias: self.density_bias * scale,
            ..*self
        }
    }
}

/// First-stage proposals for one frame.
///
/// `categories[g]` is the category reported for ground truth `g`, which may
/// differ from the true one. Proposals come grouped by object in ground-truth
/// order, followed by false positives.
pub fn oracle_detector(
    frame: &Frame,
    categories: &[Category],
    cfg: &OracleConfig,
    extent: f64,
    rng: &mut RandomState,
) -> Result<Vec<Proposal>> {
    if categories.len() != frame.gts.len() {
        return Err(Error::invalid("one reported category per ground truth is required"));
    }
    let mut out = Vec::new();
    for ((gt, off), &cat) in frame.gts.iter().zip(frame.density_offsets()).zip(categories) {
        if rng.bernoulli(cfg.miss_rate) {
            continue;
        }
        for _ in 0..cfg.proposals_per_object {
            let pull = cfg.density_bias * rng.uniform_range(0.0, 2.0);
            let c = gt.center();
            let center = Vec3::new(
                c.x + pull * off.x + rng.normal(0.0, cfg.center_sigma),
                c.y + pull * off.y + rng.normal(0.0, cfg.center_sigma),
                c.z + rng.normal(0.0, 0.5 * cfg.center_sigma),
            );
            let s = gt.size();
            let mut jit = |v: f64| v * (1.0 + rng.normal(0.0, cfg.size_sigma)).max(0.2);
            let size = Size3::new(jit(s.l), jit(s.w), jit(s.h));
            let heading = gt.heading() + rng.normal(0.0, cfg.heading_sigma);
            let b = Box3D::new(center, size, heading, cat)?;
            let conf = iou_3d(&b, gt) + rng.normal(0.0, cfg.confidence_sigma);
            out.push(Proposal::basic(b, conf.clamp(0.0, 1.0))?);
        }
    }
    let fps = rng.poisson(cfg.false_positive_rate);
    for _ in 0..fps {
        let cat = Category::KITTI[rng.index(3)];
        let size = sample_size(cat, rng);
        let center = Vec3::new(
            rng.uniform_range(-extent, extent),
            rng.uniform_range(-extent, extent),
            0.5 * size.h,
        );
        let heading = rng.uniform_range(-std::f64::consts::PI, std::f64::consts::PI);
        let b = Box3D::new(center, size, heading, cat)?;
        let conf = rng.uniform_range(0.0, cfg.false_positive_max_confidence);
        out.push(Proposal::basic(b, conf)?);
    }
    Ok(out)
}

/// Second-stage score: best true 3D IoU against any ground truth plus noise.
pub fn rescore(proposal: &Proposal, gts: &[Box3D], sigma: f64, rng: &mut RandomState) -> f64 {
    let best = gts
        .iter()
        .map(|g| iou_3d(&proposal.bbox, g))
        .fold(0.0, f64::max);
    (best + rng.normal(0.0, sigma)).clamp(0.0, 1.0)
}
