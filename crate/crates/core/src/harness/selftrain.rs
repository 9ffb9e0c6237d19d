//! The select-then-train loop on synthetic data.
//!
//! Training is modeled as attenuation of the oracle's error parameters. At
//! every label update the supervising labels are compared with the raw
//! pseudo labels; the better the supervision is relative to what the
//! detector produced unaided, the more the error scale shrinks. With every
//! toggle off the supervision equals the raw labels and nothing changes.
//!
//! Detector noise is drawn from per-frame streams that do not depend on the
//! epoch or on the toggles, so runs that differ only in toggles see the same
//! noise realizations, scaled by their own error scale.

use log::{debug, info};
use serde::{Deserialize, Serialize};

use crate::alignment::{total_triplet_loss, Domain, RoiFeature, TripletConfig};
use crate::error::{Error, Result};
use crate::evaluation::{category_ap, match_detections, Detection, GroundTruth};
use crate::geometry::{iou_3d, nms, Box3D, Category, IouKind};
use crate::harness::features::{FeatureConfig, FeatureModel};
use crate::harness::oracle::{oracle_detector, rescore, OracleConfig};
use crate::harness::scene::{generate_scene, Frame, SceneConfig};
use crate::proposals::{augment_proposals, IeConfig, Proposal};
use crate::refinery::{refine_labels, HighConfDatabase, PseudoLabel, RefineStats, ThresholdMargin};
use crate::rng::RandomState;

const SOURCE_SCENE: u64 = 1;
const TARGET_SCENE: u64 = 2;
const DETECT: u64 = 3;
const RESCORE: u64 = 4;
const CATEGORY: u64 = 5;
const FEATURE_BATCH: u64 = 6;
const REFINE: u64 = 7;
const FEATURE_MODEL: u64 = 8;

fn stream(purpose: u64, a: u64, b: u64) -> u64 {
    (purpose << 56) | ((a & 0x0FFF_FFFF) << 28) | (b & 0x0FFF_FFFF)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Toggles {
    /// Complementary augmentation at each label update.
    pub ca: bool,
    /// Interpolation/extrapolation of proposals.
    pub ie: bool,
    /// Triplet-loss feature alignment.
    pub alignment: bool,
}

impl Toggles {
    pub const NONE: Toggles = Toggles {
        ca: false,
        ie: false,
        alignment: false,
    };
    pub const CA_ONLY: Toggles = Toggles {
        ca: true,
        ie: false,
        alignment: false,
    };
    pub const ALL: Toggles = Toggles {
        ca: true,
        ie: true,
        alignment: true,
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SelfTrainConfig {
    pub epochs: usize,
    /// Pseudo labels are regenerated every `update_period` epochs.
    pub update_period: usize,
    pub frames_per_domain: usize,
    pub margin: ThresholdMargin,
    pub ie: IeConfig,
    pub triplet: TripletConfig,
    /// Class-agnostic 3D NMS threshold of the final selection.
    pub final_nms_threshold: f64,
    /// Detections scoring below this are not emitted as pseudo labels.
    pub score_floor: f64,
    /// How strongly supervision quality attenuates the oracle error.
    pub learning_rate: f64,
    /// Lower bound on the error scale.
    pub min_error_scale: f64,
    /// Frames per domain whose instances form the triplet batch.
    pub feature_batch_frames: usize,
    pub toggles: Toggles,
    pub features: FeatureConfig,
}

impl Default for SelfTrainConfig {
    fn default() -> Self {
        Self {
            epochs: 30,
            update_period: 2,
            frames_per_domain: 200,
            margin: ThresholdMargin::default(),
            ie: IeConfig::default(),
            triplet: TripletConfig::default(),
            final_nms_threshold: 0.1,
            score_floor: 0.1,
            learning_rate: 0.5,
            min_error_scale: 0.2,
            feature_batch_frames: 2,
            toggles: Toggles::ALL,
            features: FeatureConfig::default(),
        }
    }
}

impl SelfTrainConfig {
    pub fn validate(&self) -> Result<()> {
        if self.update_period == 0 {
            return Err(Error::Config("update_period must be at least 1".into()));
        }
        if self.epochs == 0 || self.frames_per_domain == 0 {
            return Err(Error::Config("epochs and frames_per_domain must be positive".into()));
        }
        if !(0.0..=1.0).contains(&self.final_nms_threshold) {
            return Err(Error::Config("final_nms_threshold must be in [0, 1]".into()));
        }
        if !(0.0..=1.0).contains(&self.score_floor) {
            return Err(Error::Config("score_floor must be in [0, 1]".into()));
        }
        if !(0.0..=1.0).contains(&self.learning_rate) {
            return Err(Error::Config("learning_rate must be in [0, 1]".into()));
        }
        if !(0.0..=1.0).contains(&self.min_error_scale) {
            return Err(Error::Config("min_error_scale must be in [0, 1]".into()));
        }
        self.ie.validate()?;
        self.triplet.validate()?;
        self.features.validate()
    }
}

/// Source and target frames shared by every run on the same seed.
#[derive(Debug, Clone)]
pub struct Benchmark {
    pub source: Vec<Frame>,
    pub target: Vec<Frame>,
    pub extent: f64,
}

impl Benchmark {
    pub fn generate(scene: &SceneConfig, frames_per_domain: usize, seed: u64) -> Result<Self> {
        scene.validate()?;
        let root = RandomState::new(seed);
        let make = |domain: Domain, purpose: u64| -> Result<Vec<Frame>> {
            (0..frames_per_domain as u64)
                .map(|i| generate_scene(scene, domain, i, &mut root.fork(stream(purpose, 0, i))))
                .collect()
        };
        Ok(Self {
            source: make(Domain::Source, SOURCE_SCENE)?,
            target: make(Domain::Target, TARGET_SCENE)?,
            extent: scene.extent,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricsRow {
    pub epoch: usize,
    pub round: usize,
    pub precision: f64,
    pub recall: f64,
    pub mean_iou: f64,
    pub triplet_loss: f64,
    pub ap_3d: f64,
    pub ap_bev: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundSummary {
    pub round: usize,
    pub error_scale: f64,
    pub raw_labels: usize,
    pub supervising_labels: usize,
    pub raw_precision: f64,
    pub supervising_precision: f64,
    pub raw_quality: f64,
    pub supervising_quality: f64,
    /// Frames whose supervising precision fell below their raw precision.
    pub frames_with_precision_drop: usize,
    pub refine: RefineStats,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub rows: Vec<MetricsRow>,
    pub rounds: Vec<RoundSummary>,
}

impl Trajectory {
    pub fn final_mean_iou(&self) -> f64 {
        self.rows.last().map_or(0.0, |r| r.mean_iou)
    }
}

/// Quality of one frame's labels against its ground truth.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct Quality {
    labels: usize,
    true_positives: usize,
    gts: usize,
    iou_sum: f64,
}

impl Quality {
    fn measure(boxes: &[Box3D], scores: &[f64], frame: &Frame) -> Self {
        let tp = true_positive_flags(boxes, scores, &frame.gts);
        let iou_sum = boxes.iter().map(|b| best_same_category_iou(b, &frame.gts)).sum();
        Self {
            labels: boxes.len(),
            true_positives: tp.iter().filter(|&&t| t).count(),
            gts: frame.gts.len(),
            iou_sum,
        }
    }

    fn add(&mut self, o: &Quality) {
        self.labels += o.labels;
        self.true_positives += o.true_positives;
        self.gts += o.gts;
        self.iou_sum += o.iou_sum;
    }

    fn precision(&self) -> f64 {
        ratio(self.true_positives, self.labels)
    }

    fn recall(&self) -> f64 {
        ratio(self.true_positives, self.gts)
    }

    fn mean_iou(&self) -> f64 {
        if self.labels == 0 {
            0.0
        } else {
            self.iou_sum / self.labels as f64
        }
    }
}

fn ratio(a: usize, b: usize) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

fn best_same_category_iou(b: &Box3D, gts: &[Box3D]) -> f64 {
    gts.iter()
        .filter(|g| g.category() == b.category())
        .map(|g| iou_3d(b, g))
        .fold(0.0, f64::max)
}

/// TP flags at each category's match threshold, aligned with `boxes`.
fn true_positive_flags(boxes: &[Box3D], scores: &[f64], gts: &[Box3D]) -> Vec<bool> {
    let mut flags = vec![false; boxes.len()];
    for c in Category::KITTI {
        let idx: Vec<usize> = (0..boxes.len()).filter(|&i| boxes[i].category() == c).collect();
        if idx.is_empty() {
            continue;
        }
        let dets: Vec<Detection> = idx
            .iter()
            .map(|&i| Detection {
                bbox: boxes[i],
                score: scores[i],
                frame_id: 0,
            })
            .collect();
        let g: Vec<GroundTruth> = gts
            .iter()
            .filter(|b| b.category() == c)
            .map(|&bbox| GroundTruth { bbox, frame_id: 0 })
            .collect();
        let tp = match_detections(&dets, &g, c.match_threshold(), IouKind::ThreeD);
        for (k, &i) in idx.iter().enumerate() {
            flags[i] = tp[k];
        }
    }
    flags
}

/// Everything one detector pass needs besides the frame.
struct Detector<'a> {
    oracle: OracleConfig,
    cfg: &'a SelfTrainConfig,
    model: &'a FeatureModel,
    root: &'a RandomState,
    extent: f64,
}

impl Detector<'_> {
    /// Rescored proposals of a frame, basic ones first.
    fn proposals(&self, frame: &Frame) -> Result<Vec<Proposal>> {
        let mut cat_rng = self.root.fork(stream(CATEGORY, 0, frame.id));
        let cats: Vec<Category> = frame
            .gts
            .iter()
            .map(|g| {
                let f = self.model.sample(Domain::Target, g.category(), &mut cat_rng);
                self.model.classify(&f)
            })
            .collect();
        let mut det_rng = self.root.fork(stream(DETECT, 0, frame.id));
        let basic = oracle_detector(frame, &cats, &self.oracle, self.extent, &mut det_rng)?;
        let props = if self.cfg.toggles.ie {
            let aug = augment_proposals(&basic, &self.cfg.ie)?;
            if aug.len() < basic.len() || aug[..basic.len()] != basic[..] {
                return Err(Error::Precondition(format!(
                    "augmented proposals of frame {} are not a superset of the basic ones",
                    frame.id
                )));
            }
            aug
        } else {
            basic
        };
        let mut re_rng = self.root.fork(stream(RESCORE, 0, frame.id));
        Ok(props
            .iter()
            .map(|p| p.rescored(rescore(p, &frame.gts, self.oracle.rescore_sigma, &mut re_rng)))
            .collect())
    }

    /// Final selection: class-agnostic NMS, then the score floor.
    fn labels(&self, frame: &Frame) -> Result<Vec<Proposal>> {
        let props = self.proposals(frame)?;
        let boxes: Vec<Box3D> = props.iter().map(|p| p.bbox).collect();
        let scores: Vec<f64> = props.iter().map(|p| p.confidence()).collect();
        let keep = nms(&boxes, &scores, self.cfg.final_nms_threshold, IouKind::ThreeD)?;
        Ok(keep
            .into_iter()
            .map(|i| props[i])
            .filter(|p| p.confidence() >= self.cfg.score_floor)
            .collect())
    }
}

fn split(labels: &[Proposal]) -> (Vec<Box3D>, Vec<f64>) {
    labels.iter().map(|p| (p.bbox, p.confidence())).unzip()
}

fn epoch_metrics(
    bench: &Benchmark,
    labels: &[Vec<Proposal>],
    epoch: usize,
    round: usize,
    triplet_loss: f64,
) -> Result<MetricsRow> {
    let mut q = Quality::default();
    let mut dets = Vec::new();
    let mut gts = Vec::new();
    for (frame, ls) in bench.target.iter().zip(labels) {
        let (boxes, scores) = split(ls);
        q.add(&Quality::measure(&boxes, &scores, frame));
        dets.extend(ls.iter().map(|p| Detection {
            bbox: p.bbox,
            score: p.confidence(),
            frame_id: frame.id,
        }));
        gts.extend(frame.gts.iter().map(|&bbox| GroundTruth {
            bbox,
            frame_id: frame.id,
        }));
    }
    let present: Vec<Category> = Category::KITTI
        .into_iter()
        .filter(|c| gts.iter().any(|g| g.bbox.category() == *c))
        .collect();
    let mean_ap = |kind: IouKind| -> Result<f64> {
        if present.is_empty() {
            return Ok(0.0);
        }
        let mut sum = 0.0;
        for &c in &present {
            sum += category_ap(&dets, &gts, c, kind)?;
        }
        Ok(sum / present.len() as f64)
    };
    Ok(MetricsRow {
        epoch,
        round,
        precision: q.precision(),
        recall: q.recall(),
        mean_iou: q.mean_iou(),
        triplet_loss,
        ap_3d: mean_ap(IouKind::ThreeD)?,
        ap_bev: mean_ap(IouKind::Bev)?,
    })
}

/// Fixed triplet batch: the instances of the first few frames of each domain.
fn feature_batch(
    bench: &Benchmark,
    model: &FeatureModel,
    frames: usize,
    root: &RandomState,
) -> (Vec<RoiFeature>, Vec<RoiFeature>) {
    let draw = |domain: Domain, list: &[Frame]| -> Vec<RoiFeature> {
        list.iter()
            .take(frames)
            .flat_map(|f| {
                let mut rng = root.fork(stream(FEATURE_BATCH, domain as u64, f.id));
                f.gts
                    .iter()
                    .map(|g| model.sample(domain, g.category(), &mut rng))
                    .collect::<Vec<_>>()
            })
            .collect()
    };
    (
        draw(Domain::Source, &bench.source),
        draw(Domain::Target, &bench.target),
    )
}

/// Supervision for one round: refined labels when CA is on, raw otherwise.
fn supervise(
    bench: &Benchmark,
    labels: &[Vec<Proposal>],
    cfg: &SelfTrainConfig,
    round: usize,
    root: &RandomState,
    error_scale: f64,
) -> Result<RoundSummary> {
    let mut db = HighConfDatabase::new();
    let mut raw = Quality::default();
    let mut sup = Quality::default();
    let mut stats = RefineStats::default();
    let mut drops = 0;
    for (frame, ls) in bench.target.iter().zip(labels) {
        let (boxes, scores) = split(ls);
        let rq = Quality::measure(&boxes, &scores, frame);
        let sq = if cfg.toggles.ca {
            let pseudo = ls
                .iter()
                .map(|p| PseudoLabel::detector(p.bbox, p.confidence()))
                .collect::<Result<Vec<_>>>()?;
            let mut rng = root.fork(stream(REFINE, round as u64, frame.id));
            let out = refine_labels(&frame.cloud, &pseudo, &cfg.margin, &mut db, &mut rng)?;
            let s = out.stats;
            stats.discarded += s.discarded;
            stats.high_confidence += s.high_confidence;
            stats.replaced += s.replaced;
            stats.removed += s.removed;
            stats.points_removed += s.points_removed;
            stats.points_pasted += s.points_pasted;
            let boxes: Vec<Box3D> = out.labels.iter().map(|l| l.bbox).collect();
            let scores: Vec<f64> = out.labels.iter().map(|l| l.confidence()).collect();
            Quality::measure(&boxes, &scores, frame)
        } else {
            rq
        };
        if sq.precision() < rq.precision() {
            drops += 1;
        }
        raw.add(&rq);
        sup.add(&sq);
    }
    Ok(RoundSummary {
        round,
        error_scale,
        raw_labels: raw.labels,
        supervising_labels: sup.labels,
        raw_precision: raw.precision(),
        supervising_precision: sup.precision(),
        raw_quality: raw.mean_iou(),
        supervising_quality: sup.mean_iou(),
        frames_with_precision_drop: drops,
        refine: stats,
    })
}

/// Error scale after training one round on the given supervision.
fn attenuate(scale: f64, summary: &RoundSummary, cfg: &SelfTrainConfig) -> f64 {
    let raw_err = 1.0 - summary.raw_quality;
    let sup_err = 1.0 - summary.supervising_quality;
    let ratio = if raw_err > 0.0 { (sup_err / raw_err).clamp(0.0, 1.0) } else { 1.0 };
    (scale * (1.0 - cfg.learning_rate * (1.0 - ratio))).max(cfg.min_error_scale.min(scale))
}

/// Runs the loop on an existing benchmark.
pub fn self_train_on(
    bench: &Benchmark,
    oracle: &OracleConfig,
    cfg: &SelfTrainConfig,
    seed: u64,
) -> Result<Trajectory> {
    cfg.validate()?;
    oracle.validate()?;
    if bench.target.is_empty() {
        return Err(Error::invalid("benchmark has no target frames"));
    }
    let root = RandomState::new(seed);
    let mut model = FeatureModel::new(cfg.features, &mut root.fork(stream(FEATURE_MODEL, 0, 0)))?;
    let mut scale = 1.0;
    let mut rows = Vec::with_capacity(cfg.epochs);
    let mut rounds = Vec::new();
    let mut pending: Option<RoundSummary> = None;

    for epoch in 0..cfg.epochs {
        let round = epoch / cfg.update_period;
        let update = epoch % cfg.update_period == 0;
        if update {
            if let Some(prev) = pending.take() {
                scale = attenuate(scale, &prev, cfg);
            }
        }
        let det = Detector {
            oracle: oracle.scaled(scale),
            cfg,
            model: &model,
            root: &root,
            extent: bench.extent,
        };
        let labels = bench
            .target
            .iter()
            .map(|f| det.labels(f))
            .collect::<Result<Vec<_>>>()?;
        if update {
            let summary = supervise(bench, &labels, cfg, round, &root, scale)?;
            debug!("round {round}: {summary:?}");
            rounds.push(summary);
            pending = Some(summary);
        }

        let (src, tgt) = feature_batch(bench, &model, cfg.feature_batch_frames, &root);
        let losses = total_triplet_loss(&src, &tgt, cfg.triplet.alpha)?;
        let row = epoch_metrics(bench, &labels, epoch, round, losses.total)?;
        info!(
            "epoch {epoch} round {round}: mean IoU {:.4}, precision {:.4}, recall {:.4}, triplet {:.3}",
            row.mean_iou, row.precision, row.recall, row.triplet_loss
        );
        rows.push(row);
        if cfg.toggles.alignment {
            model.align_step(&losses, 2 * (src.len() + tgt.len()));
        }
    }
    Ok(Trajectory { rows, rounds })
}

/// Generates the benchmark for `seed` and runs the loop on it.
pub fn self_train(
    scene: &SceneConfig,
    oracle: &OracleConfig,
    cfg: &SelfTrainConfig,
    seed: u64,
) -> Result<Trajectory> {
    let bench = Benchmark::generate(scene, cfg.frames_per_domain, seed)?;
    self_train_on(&bench, oracle, cfg, seed)
}

/// Per-ground-truth best proposal IoU with and without augmentation.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct IeGain {
    pub gts: usize,
    pub improved: usize,
    pub worsened: usize,
}

impl IeGain {
    pub fn improved_fraction(&self) -> f64 {
        ratio(self.improved, self.gts)
    }
}

/// Compares best-proposal IoU per ground truth before and after
/// [`augment_proposals`] on `frames` target frames, with true categories.
pub fn ie_gain_study(
    scene: &SceneConfig,
    oracle: &OracleConfig,
    ie: &IeConfig,
    frames: usize,
    seed: u64,
) -> Result<IeGain> {
    scene.validate()?;
    oracle.validate()?;
    let root = RandomState::new(seed);
    let mut gain = IeGain::default();
    for i in 0..frames as u64 {
        let frame = generate_scene(scene, Domain::Target, i, &mut root.fork(stream(TARGET_SCENE, 0, i)))?;
        let cats: Vec<Category> = frame.gts.iter().map(|g| g.category()).collect();
        let mut rng = root.fork(stream(DETECT, 0, i));
        let basic = oracle_detector(&frame, &cats, oracle, scene.extent, &mut rng)?;
        let aug = augment_proposals(&basic, ie)?;
        for g in &frame.gts {
            let best = |ps: &[Proposal]| ps.iter().map(|p| iou_3d(&p.bbox, g)).fold(0.0, f64::max);
            let (before, after) = (best(&basic), best(&aug));
            gain.gts += 1;
            if after > before {
                gain.improved += 1;
            } else if after < before {
                gain.worsened += 1;
            }
        }
    }
    Ok(gain)
}
