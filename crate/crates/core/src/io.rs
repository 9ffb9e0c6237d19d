//! Files: binary point clouds, text labels, feature and report CSVs, and
//! the TOML run configuration.
//!
//! Point clouds are little-endian `f32` quadruples `x y z intensity`.
//! Labels are one whitespace-separated record per line:
//! `frame_id category cx cy cz l w h heading confidence`. Blank lines and
//! lines starting with `#` are skipped. Reals are written in shortest
//! round-trip form, so a store/load cycle is bit-exact.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::alignment::{Domain, RoiFeature};
use crate::error::{Error, Result};
use crate::evaluation::{EvalRow, GapReference};
use crate::geometry::{Box3D, Category, Point, PointCloud, Size3, Vec3};
use crate::harness::{MetricsRow, OracleConfig, RoundSummary, SceneConfig, SelfTrainConfig};

const POINT_BYTES: usize = 16;

pub fn decode_point_cloud(bytes: &[u8], path: &Path) -> Result<PointCloud> {
    if !bytes.len().is_multiple_of(POINT_BYTES) {
        return Err(Error::Format {
            path: path.to_path_buf(),
            msg: format!("{} bytes is not a multiple of {POINT_BYTES}", bytes.len()),
        });
    }
    let mut points = Vec::with_capacity(bytes.len() / POINT_BYTES);
    for (i, chunk) in bytes.chunks_exact(POINT_BYTES).enumerate() {
        let mut v = [0.0f64; 4];
        for (k, slot) in v.iter_mut().enumerate() {
            let raw: [u8; 4] = chunk[4 * k..4 * k + 4].try_into().expect("4-byte slice");
            *slot = f32::from_le_bytes(raw) as f64;
        }
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::Data {
                path: path.to_path_buf(),
                msg: format!("point {i} has a non-finite value"),
            });
        }
        points.push(Point {
            x: v[0],
            y: v[1],
            z: v[2],
            intensity: v[3],
        });
    }
    PointCloud::new(points)
}

pub fn load_point_cloud(path: impl AsRef<Path>) -> Result<PointCloud> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    decode_point_cloud(&bytes, path)
}

/// Coordinates are narrowed to `f32`.
pub fn encode_point_cloud(cloud: &PointCloud) -> Vec<u8> {
    let mut out = Vec::with_capacity(cloud.len() * POINT_BYTES);
    for p in cloud.iter() {
        for v in [p.x, p.y, p.z, p.intensity] {
            out.extend_from_slice(&(v as f32).to_le_bytes());
        }
    }
    out
}

pub fn store_point_cloud(path: impl AsRef<Path>, cloud: &PointCloud) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, encode_point_cloud(cloud)).map_err(|e| Error::io(path, e))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabelRecord {
    pub frame_id: u64,
    pub bbox: Box3D,
    pub confidence: f64,
}

pub fn parse_labels(text: &str, path: &Path) -> Result<Vec<LabelRecord>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: String| Error::Format {
            path: path.to_path_buf(),
            msg: format!("line {}: {msg}", n + 1),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 10 {
            return Err(bad(format!("expected 10 fields, found {}", fields.len())));
        }
        let frame_id: u64 = fields[0]
            .parse()
            .map_err(|_| bad(format!("bad frame id `{}`", fields[0])))?;
        let category: Category = fields[1].parse().map_err(|e: Error| bad(e.to_string()))?;
        let mut nums = [0.0f64; 8];
        for (slot, s) in nums.iter_mut().zip(&fields[2..]) {
            *slot = s.parse().map_err(|_| bad(format!("bad number `{s}`")))?;
        }
        if nums.iter().any(|v| !v.is_finite()) {
            return Err(Error::Data {
                path: path.to_path_buf(),
                msg: format!("line {}: non-finite value", n + 1),
            });
        }
        let [cx, cy, cz, l, w, h, heading, confidence] = nums;
        if !(0.0..=1.0).contains(&confidence) {
            return Err(Error::Data {
                path: path.to_path_buf(),
                msg: format!("line {}: confidence {confidence} outside [0, 1]", n + 1),
            });
        }
        let bbox = Box3D::new(Vec3::new(cx, cy, cz), Size3::new(l, w, h), heading, category)
            .map_err(|e| Error::Data {
                path: path.to_path_buf(),
                msg: format!("line {}: {e}", n + 1),
            })?;
        out.push(LabelRecord {
            frame_id,
            bbox,
            confidence,
        });
    }
    Ok(out)
}

pub fn format_labels(labels: &[LabelRecord]) -> String {
    let mut s = String::new();
    for r in labels {
        let c = r.bbox.center();
        let z = r.bbox.size();
        s.push_str(&format!(
            "{} {} {} {} {} {} {} {} {} {}\n",
            r.frame_id,
            r.bbox.category(),
            c.x,
            c.y,
            c.z,
            z.l,
            z.w,
            z.h,
            r.bbox.heading(),
            r.confidence
        ));
    }
    s
}

pub fn load_labels(path: impl AsRef<Path>) -> Result<Vec<LabelRecord>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_labels(&text, path)
}

pub fn store_labels(path: impl AsRef<Path>, labels: &[LabelRecord]) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, format_labels(labels)).map_err(|e| Error::io(path, e))
}

/// Groups records by frame id, keeping file order within a frame.
pub fn group_by_frame(labels: &[LabelRecord]) -> BTreeMap<u64, Vec<LabelRecord>> {
    let mut m: BTreeMap<u64, Vec<LabelRecord>> = BTreeMap::new();
    for r in labels {
        m.entry(r.frame_id).or_default().push(*r);
    }
    m
}

/// Features CSV: `domain,category,f0,f1,…`.
pub fn load_features(path: impl AsRef<Path>) -> Result<Vec<RoiFeature>> {
    let path = path.as_ref();
    let bad = |msg: String| Error::Format {
        path: path.to_path_buf(),
        msg,
    };
    let mut rdr = csv::Reader::from_path(path)?;
    let dim = rdr.headers()?.len().checked_sub(2).ok_or_else(|| bad("missing columns".into()))?;
    let mut out = Vec::new();
    for (n, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let domain: Domain = rec[0].parse().map_err(|e: Error| bad(format!("row {}: {e}", n + 1)))?;
        let category: Category = rec[1].parse().map_err(|e: Error| bad(format!("row {}: {e}", n + 1)))?;
        let v = (0..dim)
            .map(|k| {
                rec[k + 2]
                    .trim()
                    .parse::<f64>()
                    .map_err(|_| bad(format!("row {}: bad number `{}`", n + 1, &rec[k + 2])))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(RoiFeature::new(v, domain, category).map_err(|e| Error::Data {
            path: path.to_path_buf(),
            msg: format!("row {}: {e}", n + 1),
        })?);
    }
    Ok(out)
}

pub fn store_features(path: impl AsRef<Path>, feats: &[RoiFeature]) -> Result<()> {
    let dim = feats.first().map_or(0, |f| f.dim());
    if feats.iter().any(|f| f.dim() != dim) {
        return Err(Error::invalid("features have mixed dimensions"));
    }
    let mut w = csv::Writer::from_path(path.as_ref())?;
    let mut header = vec!["domain".to_string(), "category".to_string()];
    header.extend((0..dim).map(|k| format!("f{k}")));
    w.write_record(&header)?;
    for f in feats {
        let mut row = vec![f.domain.to_string(), f.category.to_string()];
        row.extend(f.vector().iter().map(|v| v.to_string()));
        w.write_record(&row)?;
    }
    flush(w, path.as_ref())
}

fn flush<W: std::io::Write>(mut w: csv::Writer<W>, path: &Path) -> Result<()> {
    w.flush().map_err(|e| Error::io(path, e))
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

pub fn store_eval(path: impl AsRef<Path>, rows: &[EvalRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path.as_ref())?;
    w.write_record(["task", "category", "ap_bev", "ap_3d", "closed_gap_bev", "closed_gap_3d"])?;
    for r in rows {
        w.write_record([
            r.task.clone(),
            r.category.to_string(),
            r.ap_bev.to_string(),
            r.ap_3d.to_string(),
            opt(r.closed_gap_bev),
            opt(r.closed_gap_3d),
        ])?;
    }
    flush(w, path.as_ref())
}

/// References CSV: `category,source_bev,source_3d,oracle_bev,oracle_3d`.
pub fn load_gap_references(path: impl AsRef<Path>) -> Result<BTreeMap<Category, GapReference>> {
    #[derive(Deserialize)]
    struct Row {
        category: String,
        source_bev: f64,
        source_3d: f64,
        oracle_bev: f64,
        oracle_3d: f64,
    }
    let path = path.as_ref();
    let mut rdr = csv::Reader::from_path(path)?;
    let mut out = BTreeMap::new();
    for row in rdr.deserialize() {
        let r: Row = row?;
        let c: Category = r.category.parse().map_err(|e: Error| Error::Format {
            path: path.to_path_buf(),
            msg: e.to_string(),
        })?;
        out.insert(
            c,
            GapReference {
                source_bev: r.source_bev,
                source_3d: r.source_3d,
                oracle_bev: r.oracle_bev,
                oracle_3d: r.oracle_3d,
            },
        );
    }
    Ok(out)
}

/// Metrics CSV: `epoch,round,precision,recall,mean_iou,triplet_loss,ap_3d,ap_bev`.
pub fn store_metrics(path: impl AsRef<Path>, rows: &[MetricsRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path.as_ref())?;
    w.write_record([
        "epoch",
        "round",
        "precision",
        "recall",
        "mean_iou",
        "triplet_loss",
        "ap_3d",
        "ap_bev",
    ])?;
    for r in rows {
        w.write_record([
            r.epoch.to_string(),
            r.round.to_string(),
            r.precision.to_string(),
            r.recall.to_string(),
            r.mean_iou.to_string(),
            r.triplet_loss.to_string(),
            r.ap_3d.to_string(),
            r.ap_bev.to_string(),
        ])?;
    }
    flush(w, path.as_ref())
}

pub fn store_rounds(path: impl AsRef<Path>, rounds: &[RoundSummary]) -> Result<()> {
    let mut w = csv::Writer::from_path(path.as_ref())?;
    w.write_record([
        "round",
        "error_scale",
        "raw_labels",
        "supervising_labels",
        "raw_precision",
        "supervising_precision",
        "raw_mean_iou",
        "supervising_mean_iou",
        "frames_with_precision_drop",
        "discarded",
        "high_confidence",
        "replaced",
        "removed",
        "points_removed",
        "points_pasted",
    ])?;
    for r in rounds {
        let s = r.refine;
        w.write_record([
            r.round.to_string(),
            r.error_scale.to_string(),
            r.raw_labels.to_string(),
            r.supervising_labels.to_string(),
            r.raw_precision.to_string(),
            r.supervising_precision.to_string(),
            r.raw_quality.to_string(),
            r.supervising_quality.to_string(),
            r.frames_with_precision_drop.to_string(),
            s.discarded.to_string(),
            s.high_confidence.to_string(),
            s.replaced.to_string(),
            s.removed.to_string(),
            s.points_removed.to_string(),
            s.points_pasted.to_string(),
        ])?;
    }
    flush(w, path.as_ref())
}

/// Everything a run depends on besides its input files.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub seed: u64,
    pub scene: SceneConfig,
    pub oracle: OracleConfig,
    pub selftrain: SelfTrainConfig,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        self.scene.validate()?;
        self.oracle.validate()?;
        self.selftrain.validate()
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }
}

pub fn load_run_config(path: impl AsRef<Path>) -> Result<RunConfig> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    RunConfig::from_toml_str(&text)
}
