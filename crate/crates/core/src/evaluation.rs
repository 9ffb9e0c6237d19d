//! KITTI-style average precision over 40 recall positions and the Closed Gap metric.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::geometry::{iou, score_order, Box3D, Category, IouKind};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Detection {
    pub bbox: Box3D,
    pub score: f64,
    pub frame_id: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroundTruth {
    pub bbox: Box3D,
    pub frame_id: u64,
}

/// True-positive flags aligned with `dets`.
///
/// Detections are visited in descending score order (ties by index). Each
/// takes the unmatched same-category ground truth of its frame with the
/// highest IoU, and is a true positive iff that IoU reaches `iou_thr`.
pub fn match_detections(
    dets: &[Detection],
    gts: &[GroundTruth],
    iou_thr: f64,
    kind: IouKind,
) -> Vec<bool> {
    let mut by_frame: HashMap<u64, Vec<usize>> = HashMap::new();
    for (g, gt) in gts.iter().enumerate() {
        by_frame.entry(gt.frame_id).or_default().push(g);
    }
    let mut taken = vec![false; gts.len()];
    let mut flags = vec![false; dets.len()];
    let scores: Vec<f64> = dets.iter().map(|d| d.score).collect();
    for d in score_order(&scores) {
        let det = &dets[d];
        let Some(cands) = by_frame.get(&det.frame_id) else {
            continue;
        };
        let mut best: Option<(usize, f64)> = None;
        for &g in cands {
            if taken[g] || gts[g].bbox.category() != det.bbox.category() {
                continue;
            }
            let o = iou(&det.bbox, &gts[g].bbox, kind);
            if best.is_none_or(|(_, b)| o > b) {
                best = Some((g, o));
            }
        }
        if let Some((g, o)) = best {
            if o >= iou_thr {
                taken[g] = true;
                flags[d] = true;
            }
        }
    }
    flags
}

pub const RECALL_POSITIONS: usize = 40;

/// AP in percent from TP flags ordered by descending score.
///
/// Precision is interpolated (max precision at any recall ≥ r) and sampled
/// at recalls 1/40, 2/40, …, 40/40.
pub fn average_precision_r40(ranked_tp: &[bool], num_gt: usize) -> Result<f64> {
    if num_gt == 0 {
        return Err(Error::UndefinedMetric(
            "average precision needs at least one ground truth".into(),
        ));
    }
    let n = RECALL_POSITIONS;
    // best[r] = highest precision seen at a prefix whose recall >= r/n.
    let mut best = vec![0.0f64; n + 1];
    let mut tp = 0usize;
    for (k, &hit) in ranked_tp.iter().enumerate() {
        if hit {
            tp += 1;
        }
        let precision = tp as f64 / (k + 1) as f64;
        // Largest r with tp * n >= r * num_gt.
        let reach = ((tp * n) / num_gt).min(n);
        for slot in best.iter_mut().take(reach + 1) {
            if precision > *slot {
                *slot = precision;
            }
        }
    }
    let sum: f64 = best[1..].iter().sum();
    Ok(100.0 * sum / n as f64)
}

/// AP for one category, with its KITTI match threshold.
pub fn category_ap(
    dets: &[Detection],
    gts: &[GroundTruth],
    category: Category,
    kind: IouKind,
) -> Result<f64> {
    let dets: Vec<Detection> = dets
        .iter()
        .filter(|d| d.bbox.category() == category)
        .copied()
        .collect();
    let gts: Vec<GroundTruth> = gts
        .iter()
        .filter(|g| g.bbox.category() == category)
        .copied()
        .collect();
    let flags = match_detections(&dets, &gts, category.match_threshold(), kind);
    let scores: Vec<f64> = dets.iter().map(|d| d.score).collect();
    let ranked: Vec<bool> = score_order(&scores).into_iter().map(|i| flags[i]).collect();
    average_precision_r40(&ranked, gts.len())
}

pub fn closed_gap(ap_model: f64, ap_source_only: f64, ap_oracle: f64) -> Result<f64> {
    let denom = ap_oracle - ap_source_only;
    if denom == 0.0 {
        return Err(Error::UndefinedMetric(
            "closed gap with oracle AP equal to source-only AP".into(),
        ));
    }
    Ok((ap_model - ap_source_only) / denom * 100.0)
}

/// Reference APs used to turn a model's AP into a closed gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapReference {
    pub source_bev: f64,
    pub source_3d: f64,
    pub oracle_bev: f64,
    pub oracle_3d: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalRow {
    pub task: String,
    pub category: Category,
    pub ap_bev: f64,
    pub ap_3d: f64,
    pub closed_gap_bev: Option<f64>,
    pub closed_gap_3d: Option<f64>,
}

/// One row per category that has ground truth, in category order.
pub fn evaluate(
    task: &str,
    dets: &[Detection],
    gts: &[GroundTruth],
    references: &BTreeMap<Category, GapReference>,
) -> Result<Vec<EvalRow>> {
    let mut cats: Vec<Category> = gts.iter().map(|g| g.bbox.category()).collect();
    cats.sort();
    cats.dedup();
    cats.into_iter()
        .map(|c| {
            let ap_bev = category_ap(dets, gts, c, IouKind::Bev)?;
            let ap_3d = category_ap(dets, gts, c, IouKind::ThreeD)?;
            let (gb, g3) = match references.get(&c) {
                Some(r) => (
                    Some(closed_gap(ap_bev, r.source_bev, r.oracle_bev)?),
                    Some(closed_gap(ap_3d, r.source_3d, r.oracle_3d)?),
                ),
                None => (None, None),
            };
            Ok(EvalRow {
                task: task.to_string(),
                category: c,
                ap_bev,
                ap_3d,
                closed_gap_bev: gb,
                closed_gap_3d: g3,
            })
        })
        .collect()
}
