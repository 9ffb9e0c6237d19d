//! Extra proposals by interpolation and extrapolation.
//!
//! The basic proposals of a frame are split by a very tight NMS into the
//! highest-confidence set and the remainder. Each highest-confidence
//! proposal is paired with the remainder proposal it overlaps most; when
//! they overlap enough to be the same instance, two proposals are added,
//! one between the pair and one beyond the leader on the far side.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{iou_3d, nms, Box3D, IouKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Basic,
    Interpolated,
    Extrapolated,
}

impl Origin {
    pub fn as_str(&self) -> &'static str {
        match self {
            Origin::Basic => "basic",
            Origin::Interpolated => "interpolated",
            Origin::Extrapolated => "extrapolated",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Proposal {
    pub bbox: Box3D,
    confidence: f64,
    pub origin: Origin,
}

impl Proposal {
    pub fn new(bbox: Box3D, confidence: f64, origin: Origin) -> Result<Self> {
        if !(0.0..=1.0).contains(&confidence) {
            return Err(Error::invalid(format!(
                "proposal confidence {confidence} outside [0, 1]"
            )));
        }
        Ok(Self {
            bbox,
            confidence,
            origin,
        })
    }

    pub fn basic(bbox: Box3D, confidence: f64) -> Result<Self> {
        Self::new(bbox, confidence, Origin::Basic)
    }

    pub fn confidence(&self) -> f64 {
        self.confidence
    }

    /// Same proposal with a new confidence, clamped into `[0, 1]`.
    pub fn rescored(&self, confidence: f64) -> Self {
        Self {
            confidence: confidence.clamp(0.0, 1.0),
            ..*self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct IeConfig {
    /// Minimum pair IoU for the pair to count as one instance.
    pub t_iou: f64,
    /// Deviation level in `(0, 1)`.
    pub lambda: f64,
    pub nms_split_threshold: f64,
}

impl Default for IeConfig {
    fn default() -> Self {
        Self {
            t_iou: 0.01,
            lambda: 0.5,
            nms_split_threshold: 0.01,
        }
    }
}

impl IeConfig {
    pub fn validate(&self) -> Result<()> {
        check_lambda(self.lambda)?;
        if !(0.0..=1.0).contains(&self.t_iou) {
            return Err(Error::invalid(format!("t_iou {} outside [0, 1]", self.t_iou)));
        }
        if !(0.0..=1.0).contains(&self.nms_split_threshold) {
            return Err(Error::invalid(format!(
                "nms_split_threshold {} outside [0, 1]",
                self.nms_split_threshold
            )));
        }
        Ok(())
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda < 1.0 {
        Ok(())
    } else {
        Err(Error::invalid(format!("lambda {lambda} outside (0, 1)")))
    }
}

/// Splits proposal indices into (highest-confidence, remainder). The first
/// list is in NMS visiting order, the second ascending.
pub fn select_highest_confidence(
    props: &[Proposal],
    cfg: &IeConfig,
) -> Result<(Vec<usize>, Vec<usize>)> {
    if props.is_empty() {
        return Err(Error::invalid("no proposals to split"));
    }
    let boxes: Vec<Box3D> = props.iter().map(|p| p.bbox).collect();
    let scores: Vec<f64> = props.iter().map(|p| p.confidence).collect();
    let high = nms(&boxes, &scores, cfg.nms_split_threshold, IouKind::ThreeD)?;
    let mut is_high = vec![false; props.len()];
    for &i in &high {
        is_high[i] = true;
    }
    let rest = (0..props.len()).filter(|&i| !is_high[i]).collect();
    Ok((high, rest))
}

/// Index into `rest` of the proposal with the largest 3D IoU against `anchor`,
/// with that IoU. `None` when `rest` is empty or nothing overlaps.
pub fn closest_proposal(anchor: &Proposal, rest: &[Proposal]) -> Option<(usize, f64)> {
    let mut best: Option<(usize, f64)> = None;
    for (j, p) in rest.iter().enumerate() {
        let s = iou_3d(&anchor.bbox, &p.bbox);
        if s > best.map_or(0.0, |b| b.1) {
            best = Some((j, s));
        }
    }
    best
}

fn shifted(i: &Proposal, j: &Proposal, lambda: f64, sign: f64, origin: Origin) -> Result<Proposal> {
    check_lambda(lambda)?;
    let oi = i.bbox.center();
    let delta = oi - j.bbox.center();
    let center = oi + delta * (sign * lambda);
    Ok(Proposal {
        bbox: i.bbox.with_center(center)?,
        confidence: i.confidence,
        origin,
    })
}

/// `o_i - λ (o_i - o_j)`; size, heading, category and confidence come from `i`.
pub fn interpolate(i: &Proposal, j: &Proposal, lambda: f64) -> Result<Proposal> {
    shifted(i, j, lambda, -1.0, Origin::Interpolated)
}

/// `o_i + λ (o_i - o_j)`; size, heading, category and confidence come from `i`.
pub fn extrapolate(i: &Proposal, j: &Proposal, lambda: f64) -> Result<Proposal> {
    shifted(i, j, lambda, 1.0, Origin::Extrapolated)
}

/// Input proposals followed by the generated ones. A pair whose IoU is
/// exactly `t_iou` generates nothing.
pub fn augment_proposals(props: &[Proposal], cfg: &IeConfig) -> Result<Vec<Proposal>> {
    cfg.validate()?;
    let mut out = props.to_vec();
    if props.is_empty() {
        return Ok(out);
    }
    let (high, rest_idx) = select_highest_confidence(props, cfg)?;
    let rest: Vec<Proposal> = rest_idx.iter().map(|&r| props[r]).collect();
    for &h in &high {
        let anchor = &props[h];
        if let Some((j, sigma)) = closest_proposal(anchor, &rest) {
            if sigma > cfg.t_iou {
                out.push(interpolate(anchor, &rest[j], cfg.lambda)?);
                out.push(extrapolate(anchor, &rest[j], cfg.lambda)?);
            }
        }
    }
    Ok(out)
}
