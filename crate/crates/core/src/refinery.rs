//! Complementary augmentation of pseudo labels.
//!
//! Every pseudo box is sorted by its IoU confidence against a threshold
//! margin `[t_neg, t_pos]`:
//!
//! * `u ≤ t_neg`: discarded, its points are left alone.
//! * `u ≥ t_pos`: kept, and its interior points are cached as a donor.
//! * otherwise the box is unreliable. With probability
//!   `(u - t_neg) / (t_pos - t_neg)` it is replaced by a rescaled donor of
//!   the same category ("box replace"), otherwise its points are deleted
//!   ("point remove"). The unreliable box itself never supervises.

use std::collections::BTreeMap;

use log::warn;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    ego_to_local, iou_3d, local_to_ego_with, points_in_box, rotation_matrix, Box3D, Category,
    Point, PointCloud,
};
use crate::rng::RandomState;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Detector,
    Replaced,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoLabel {
    pub bbox: Box3D,
    confidence: f64,
    pub provenance: Provenance,
}

impl PseudoLabel {
    pub fn new(bbox: Box3D, confidence: f64, provenance: Provenance) -> Result<Self> {
        if !(0.0..=1.0).contains(&confidence) {
            return Err(Error::invalid(format!(
                "pseudo label confidence {confidence} outside [0, 1]"
            )));
        }
        Ok(Self {
            bbox,
            confidence,
            provenance,
        })
    }

    pub fn detector(bbox: Box3D, confidence: f64) -> Result<Self> {
        Self::new(bbox, confidence, Provenance::Detector)
    }

    pub fn confidence(&self) -> f64 {
        self.confidence
    }

    pub fn category(&self) -> Category {
        self.bbox.category()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MarginBounds", into = "MarginBounds")]
pub struct ThresholdMargin {
    t_neg: f64,
    t_pos: f64,
}

impl ThresholdMargin {
    pub fn new(t_neg: f64, t_pos: f64) -> Result<Self> {
        if !(0.0 <= t_neg && t_neg < t_pos && t_pos <= 1.0) {
            return Err(Error::invalid(format!(
                "threshold margin [{t_neg}, {t_pos}] must satisfy 0 <= t_neg < t_pos <= 1"
            )));
        }
        Ok(Self { t_neg, t_pos })
    }

    pub fn t_neg(&self) -> f64 {
        self.t_neg
    }

    pub fn t_pos(&self) -> f64 {
        self.t_pos
    }
}

impl Default for ThresholdMargin {
    fn default() -> Self {
        Self {
            t_neg: 0.25,
            t_pos: 0.6,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MarginBounds {
    t_neg: f64,
    t_pos: f64,
}

impl TryFrom<MarginBounds> for ThresholdMargin {
    type Error = Error;

    fn try_from(b: MarginBounds) -> Result<Self> {
        ThresholdMargin::new(b.t_neg, b.t_pos)
    }
}

impl From<ThresholdMargin> for MarginBounds {
    fn from(m: ThresholdMargin) -> Self {
        MarginBounds {
            t_neg: m.t_neg,
            t_pos: m.t_pos,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxClass {
    Discard,
    HighConfidence,
    Unreliable,
}

pub fn classify_pseudo_box(u: f64, margin: &ThresholdMargin) -> Result<BoxClass> {
    if !(0.0..=1.0).contains(&u) {
        return Err(Error::invalid(format!("confidence {u} outside [0, 1]")));
    }
    Ok(if u <= margin.t_neg {
        BoxClass::Discard
    } else if u >= margin.t_pos {
        BoxClass::HighConfidence
    } else {
        BoxClass::Unreliable
    })
}

/// Probability of choosing box replace for an unreliable box.
/// Point remove has probability `1 - p`.
pub fn replace_probability(u: f64, margin: &ThresholdMargin) -> Result<f64> {
    if !(margin.t_neg < u && u < margin.t_pos) {
        return Err(Error::Precondition(format!(
            "confidence {u} not strictly inside ({}, {})",
            margin.t_neg, margin.t_pos
        )));
    }
    Ok((u - margin.t_neg) / (margin.t_pos - margin.t_neg))
}

/// A box with its interior points expressed in the box's local frame.
#[derive(Debug, Clone, PartialEq)]
pub struct DonorEntry {
    pub bbox: Box3D,
    pub local_points: PointCloud,
}

impl DonorEntry {
    /// Snapshots the points of `cloud` inside `bbox`.
    pub fn capture(cloud: &PointCloud, bbox: Box3D) -> Self {
        let pts = points_in_box(cloud, &bbox)
            .into_iter()
            .map(|i| {
                let p = cloud.points()[i];
                Point::from_position(ego_to_local(p.position(), &bbox), p.intensity)
            })
            .collect();
        Self {
            bbox,
            local_points: PointCloud::new(pts).expect("local transform of finite points"),
        }
    }
}

/// Donor pools: high-confidence boxes (`high`) and box-replace outputs
/// (`replaced`), keyed by category.
#[derive(Debug, Clone, Default)]
pub struct HighConfDatabase {
    high: BTreeMap<Category, Vec<DonorEntry>>,
    replaced: BTreeMap<Category, Vec<DonorEntry>>,
}

impl HighConfDatabase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert_high(&mut self, entry: DonorEntry) {
        self.high
            .entry(entry.bbox.category())
            .or_default()
            .push(entry);
    }

    pub fn insert_replaced(&mut self, entry: DonorEntry) {
        self.replaced
            .entry(entry.bbox.category())
            .or_default()
            .push(entry);
    }

    pub fn high(&self, category: Category) -> &[DonorEntry] {
        self.high.get(&category).map_or(&[], Vec::as_slice)
    }

    pub fn replaced(&self, category: Category) -> &[DonorEntry] {
        self.replaced.get(&category).map_or(&[], Vec::as_slice)
    }

    pub fn high_len(&self) -> usize {
        self.high.values().map(Vec::len).sum()
    }

    pub fn replaced_len(&self) -> usize {
        self.replaced.values().map(Vec::len).sum()
    }

    /// Empties both pools; called at every pseudo-label update.
    pub fn clear(&mut self) {
        self.high.clear();
        self.replaced.clear();
    }

    /// Appends another database's entries (category order, then insertion order).
    pub fn merge(&mut self, other: HighConfDatabase) {
        for (c, v) in other.high {
            self.high.entry(c).or_default().extend(v);
        }
        for (c, v) in other.replaced {
            self.replaced.entry(c).or_default().extend(v);
        }
    }
}

pub fn point_remove(cloud: &PointCloud, b: &Box3D) -> PointCloud {
    cloud.without_indices(&points_in_box(cloud, b))
}

/// Removes the points inside `label` and pastes `donor`'s points stretched
/// onto `label`'s box. The returned label keeps the unreliable box geometry
/// with provenance `Replaced` and confidence 1.
pub fn box_replace(
    cloud: &PointCloud,
    label: &PseudoLabel,
    donor: &DonorEntry,
) -> Result<(PointCloud, PseudoLabel)> {
    if donor.bbox.category() != label.category() {
        return Err(Error::invalid(format!(
            "donor category {} does not match label category {}",
            donor.bbox.category(),
            label.category()
        )));
    }
    let src = donor.bbox.size();
    if !src.is_valid() {
        return Err(Error::DegenerateBox(format!("donor size {src:?}")));
    }
    let dst = label.bbox;
    let m = rotation_matrix(dst.heading())?;
    let mut out = point_remove(cloud, &dst);
    out.extend(donor.local_points.iter().map(|p| {
        Point::from_position(local_to_ego_with(p.position(), src, &dst, &m), p.intensity)
    }));
    let replaced = PseudoLabel::new(dst, 1.0, Provenance::Replaced)?;
    Ok((out, replaced))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RefineStats {
    pub discarded: usize,
    pub high_confidence: usize,
    pub replaced: usize,
    pub removed: usize,
    /// Points deleted by point remove or by the removal half of box replace.
    pub points_removed: usize,
    pub points_pasted: usize,
}

#[derive(Debug, Clone)]
pub struct RefineOutput {
    pub cloud: PointCloud,
    /// High-confidence labels in input order, then replaced labels in input order.
    pub labels: Vec<PseudoLabel>,
    pub stats: RefineStats,
}

/// Runs complementary augmentation over one frame.
///
/// High-confidence boxes are cached first (points captured from the
/// unmodified cloud), so unreliable boxes can draw donors from the same
/// frame. Unreliable boxes are then handled in input order. Each one
/// consumes exactly one uniform draw, plus one donor draw if replaced.
pub fn refine_labels(
    cloud: &PointCloud,
    labels: &[PseudoLabel],
    margin: &ThresholdMargin,
    db: &mut HighConfDatabase,
    rng: &mut RandomState,
) -> Result<RefineOutput> {
    let classes = labels
        .iter()
        .map(|l| classify_pseudo_box(l.confidence, margin))
        .collect::<Result<Vec<_>>>()?;

    let mut stats = RefineStats::default();
    let mut kept = Vec::new();
    for (label, class) in labels.iter().zip(&classes) {
        match class {
            BoxClass::HighConfidence => {
                db.insert_high(DonorEntry::capture(cloud, label.bbox));
                kept.push(*label);
                stats.high_confidence += 1;
            }
            BoxClass::Discard => stats.discarded += 1,
            BoxClass::Unreliable => {}
        }
    }

    let mut out = cloud.clone();
    let mut replaced = Vec::new();
    for (label, class) in labels.iter().zip(&classes) {
        if *class != BoxClass::Unreliable {
            continue;
        }
        let p_replace = replace_probability(label.confidence, margin)?;
        let draw = rng.uniform();
        let donors = db.high(label.category());
        if draw < p_replace && !donors.is_empty() {
            let donor = donors[rng.index(donors.len())].clone();
            let before = out.len();
            let (next, new_label) = box_replace(&out, label, &donor)?;
            let pasted = donor.local_points.len();
            stats.points_pasted += pasted;
            stats.points_removed += before + pasted - next.len();
            out = next;
            db.insert_replaced(DonorEntry::capture(&out, new_label.bbox));
            replaced.push(new_label);
            stats.replaced += 1;
        } else {
            let before = out.len();
            out = point_remove(&out, &label.bbox);
            stats.points_removed += before - out.len();
            stats.removed += 1;
        }
    }

    for r in &replaced {
        let crowded = kept
            .iter()
            .chain(replaced.iter())
            .filter(|o| !std::ptr::eq(*o, r))
            .any(|o| iou_3d(&o.bbox, &r.bbox) >= 0.1);
        if crowded {
            warn!(
                "replaced {} box at {:?} overlaps another supervising box",
                r.category(),
                r.bbox.center()
            );
        }
    }

    kept.extend(replaced);
    Ok(RefineOutput {
        cloud: out,
        labels: kept,
        stats,
    })
}
