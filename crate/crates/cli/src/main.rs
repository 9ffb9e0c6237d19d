//! `prefine`: command-line front end of the pseudo-label refinery.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use log::info;
use serde::{Deserialize, Serialize};

use pseudo_refinery::alignment::{combined_loss, total_triplet_loss, Domain, RoiFeature};
use pseudo_refinery::evaluation::{evaluate, Detection, GroundTruth};
use pseudo_refinery::harness::{self_train, Benchmark};
use pseudo_refinery::io::{self, LabelRecord, RunConfig};
use pseudo_refinery::proposals::{augment_proposals, Proposal};
use pseudo_refinery::refinery::{refine_labels, HighConfDatabase, PseudoLabel};
use pseudo_refinery::RandomState;

const MANIFEST: &str = "manifest.toml";

#[derive(Parser)]
#[command(name = "prefine", version, about = "Pseudo-label refinery for cross-domain LiDAR detection")]
struct Cli {
    /// Overrides the seed of the configuration (at most 2^63 - 1, the TOML integer range).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(..=i64::MAX as u64))]
    seed: Option<u64>,
    /// TOML run configuration; a manifest from an earlier run replays it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// Only log warnings and errors.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "lowercase", deny_unknown_fields)]
enum Command {
    /// Write a synthetic two-domain dataset.
    Gen {
        /// Frames per domain.
        #[arg(long, default_value_t = 10)]
        frames: usize,
    },
    /// Complementary augmentation of pseudo labels over a directory of frames.
    Refine {
        /// Directory of `<frame_id>.bin` point clouds.
        #[arg(long)]
        frames: PathBuf,
        #[arg(long)]
        labels: PathBuf,
    },
    /// Add interpolated and extrapolated proposals.
    Propose {
        #[arg(long)]
        proposals: PathBuf,
    },
    /// Triplet losses between source and target feature CSVs.
    Align {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        /// Detection loss to combine with the weighted triplet loss.
        #[arg(long, default_value_t = 0.0)]
        det_loss: f64,
    },
    /// AP over 40 recall positions, with Closed Gap when references are given.
    Eval {
        #[arg(long)]
        detections: PathBuf,
        #[arg(long)]
        gts: PathBuf,
        #[arg(long, default_value = "task")]
        task: String,
        /// CSV with `category,source_bev,source_3d,oracle_bev,oracle_3d`.
        #[arg(long)]
        references: Option<PathBuf>,
    },
    /// Run the synthetic self-training loop.
    Selftrain,
}

impl Command {
    /// Same command with input paths made absolute, for the manifest.
    fn resolved(&self) -> Result<Command> {
        let abs = |p: &PathBuf| -> Result<PathBuf> {
            std::path::absolute(p).with_context(|| format!("resolving {}", p.display()))
        };
        Ok(match self {
            Command::Gen { frames } => Command::Gen { frames: *frames },
            Command::Refine { frames, labels } => Command::Refine {
                frames: abs(frames)?,
                labels: abs(labels)?,
            },
            Command::Propose { proposals } => Command::Propose {
                proposals: abs(proposals)?,
            },
            Command::Align {
                source,
                target,
                det_loss,
            } => Command::Align {
                source: abs(source)?,
                target: abs(target)?,
                det_loss: *det_loss,
            },
            Command::Eval {
                detections,
                gts,
                task,
                references,
            } => Command::Eval {
                detections: abs(detections)?,
                gts: abs(gts)?,
                task: task.clone(),
                references: references.as_ref().map(abs).transpose()?,
            },
            Command::Selftrain => Command::Selftrain,
        })
    }
}

/// Reads a configuration file, splitting off a recorded command if present.
fn read_config(path: &Path) -> Result<(RunConfig, Option<Command>)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut table: toml::Table =
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let command = match table.remove("command") {
        Some(v) => Some(v.try_into::<Command>().context("invalid [command] table")?),
        None => None,
    };
    let rest = toml::to_string(&table)?;
    let cfg = RunConfig::from_toml_str(&rest).with_context(|| format!("in {}", path.display()))?;
    Ok((cfg, command))
}

fn write_manifest(out: &Path, cfg: &RunConfig, command: &Command) -> Result<()> {
    let mut table = toml::Table::try_from(cfg)?;
    table.insert("command".into(), toml::Value::try_from(command.resolved()?)?);
    let text = format!(
        "# prefine {} run manifest; replay with `prefine --config {MANIFEST}`\n{}",
        env!("CARGO_PKG_VERSION"),
        toml::to_string(&table)?
    );
    fs::write(out.join(MANIFEST), text)?;
    Ok(())
}

fn frame_file(dir: &Path, id: u64) -> PathBuf {
    dir.join(format!("{id:06}.bin"))
}

fn gen(cfg: &RunConfig, out: &Path, frames: usize) -> Result<()> {
    let bench = Benchmark::generate(&cfg.scene, frames, cfg.seed)?;
    for (name, list) in [("source", &bench.source), ("target", &bench.target)] {
        let dir = out.join(name);
        fs::create_dir_all(&dir)?;
        let mut labels = Vec::new();
        for f in list {
            io::store_point_cloud(frame_file(&dir, f.id), &f.cloud)?;
            labels.extend(f.gts.iter().map(|&bbox| LabelRecord {
                frame_id: f.id,
                bbox,
                confidence: 1.0,
            }));
        }
        io::store_labels(dir.join("labels.txt"), &labels)?;
        info!("wrote {} {name} frames to {}", list.len(), dir.display());
    }
    Ok(())
}

/// Frame ids of the `<id>.bin` files in `dir`, ascending.
fn list_frames(dir: &Path) -> Result<Vec<(u64, PathBuf)>> {
    let mut out = Vec::new();
    for entry in fs::read_dir(dir).with_context(|| format!("listing {}", dir.display()))? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "bin") {
            let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default();
            let id: u64 = stem
                .parse()
                .with_context(|| format!("frame file name {} is not a frame id", path.display()))?;
            out.push((id, path));
        }
    }
    out.sort();
    Ok(out)
}

fn refine(cfg: &RunConfig, out: &Path, frames_dir: &Path, labels_path: &Path) -> Result<()> {
    let margin = cfg.selftrain.margin;
    let frames = list_frames(frames_dir)?;
    let mut by_frame = io::group_by_frame(&io::load_labels(labels_path)?);
    if let Some(id) = by_frame.keys().find(|id| !frames.iter().any(|(f, _)| f == *id)) {
        bail!("labels reference frame {id}, which has no point cloud in {}", frames_dir.display());
    }
    let dir = out.join("refined");
    fs::create_dir_all(&dir)?;
    let root = RandomState::new(cfg.seed);
    let mut db = HighConfDatabase::new();
    let mut refined = Vec::new();
    let mut w = csv::Writer::from_path(out.join("refine_stats.csv"))?;
    w.write_record([
        "frame_id",
        "input_points",
        "output_points",
        "discarded",
        "high_confidence",
        "replaced",
        "removed",
        "points_removed",
        "points_pasted",
    ])?;
    for (id, path) in frames {
        let cloud = io::load_point_cloud(&path)?;
        let labels = by_frame
            .remove(&id)
            .unwrap_or_default()
            .iter()
            .map(|r| PseudoLabel::detector(r.bbox, r.confidence))
            .collect::<pseudo_refinery::Result<Vec<_>>>()?;
        let result = refine_labels(&cloud, &labels, &margin, &mut db, &mut root.fork(id))?;
        let s = result.stats;
        if result.cloud.len() + s.points_removed != cloud.len() + s.points_pasted {
            bail!("point count not conserved on frame {id}");
        }
        io::store_point_cloud(frame_file(&dir, id), &result.cloud)?;
        w.write_record(
            [
                id,
                cloud.len() as u64,
                result.cloud.len() as u64,
                s.discarded as u64,
                s.high_confidence as u64,
                s.replaced as u64,
                s.removed as u64,
                s.points_removed as u64,
                s.points_pasted as u64,
            ]
            .map(|v| v.to_string()),
        )?;
        refined.extend(result.labels.iter().map(|l| LabelRecord {
            frame_id: id,
            bbox: l.bbox,
            confidence: l.confidence(),
        }));
    }
    w.flush()?;
    io::store_labels(out.join("refined_labels.txt"), &refined)?;
    info!("refined {} labels into {}", refined.len(), dir.display());
    Ok(())
}

fn propose(cfg: &RunConfig, out: &Path, path: &Path) -> Result<()> {
    let mut records = Vec::new();
    let mut w = csv::Writer::from_path(out.join("proposals.csv"))?;
    w.write_record([
        "frame_id", "origin", "category", "cx", "cy", "cz", "l", "w", "h", "heading", "confidence",
    ])?;
    for (id, group) in io::group_by_frame(&io::load_labels(path)?) {
        let basic = group
            .iter()
            .map(|r| Proposal::basic(r.bbox, r.confidence))
            .collect::<pseudo_refinery::Result<Vec<_>>>()?;
        for p in augment_proposals(&basic, &cfg.selftrain.ie)? {
            let (c, s) = (p.bbox.center(), p.bbox.size());
            w.write_record([
                id.to_string(),
                p.origin.as_str().to_string(),
                p.bbox.category().to_string(),
                c.x.to_string(),
                c.y.to_string(),
                c.z.to_string(),
                s.l.to_string(),
                s.w.to_string(),
                s.h.to_string(),
                p.bbox.heading().to_string(),
                p.confidence().to_string(),
            ])?;
            records.push(LabelRecord {
                frame_id: id,
                bbox: p.bbox,
                confidence: p.confidence(),
            });
        }
    }
    w.flush()?;
    io::store_labels(out.join("proposals.txt"), &records)?;
    info!("wrote {} proposals", records.len());
    Ok(())
}

fn align(cfg: &RunConfig, out: &Path, source: &Path, target: &Path, det_loss: f64) -> Result<()> {
    let tagged = |path: &Path, want: Domain| -> Result<Vec<RoiFeature>> {
        let feats = io::load_features(path)?;
        if let Some(f) = feats.iter().find(|f| f.domain != want) {
            bail!("{} holds a {} feature; expected only {want}", path.display(), f.domain);
        }
        Ok(feats)
    };
    let src = tagged(source, Domain::Source)?;
    let tgt = tagged(target, Domain::Target)?;
    let t = cfg.selftrain.triplet;
    let losses = total_triplet_loss(&src, &tgt, t.alpha)?;
    let combined = combined_loss(det_loss, losses.total, &t)?;
    let mut w = csv::Writer::from_path(out.join("triplet.csv"))?;
    w.write_record(["intra", "inter", "total", "alpha", "eta", "det_loss", "combined"])?;
    w.write_record(
        [losses.intra, losses.inter, losses.total, t.alpha, t.eta, det_loss, combined]
            .map(|v| v.to_string()),
    )?;
    w.flush()?;
    info!("triplet loss {} (intra {}, inter {})", losses.total, losses.intra, losses.inter);
    Ok(())
}

fn eval(
    out: &Path,
    detections: &Path,
    gts: &Path,
    task: &str,
    references: Option<&Path>,
) -> Result<()> {
    let dets: Vec<Detection> = io::load_labels(detections)?
        .into_iter()
        .map(|r| Detection {
            bbox: r.bbox,
            score: r.confidence,
            frame_id: r.frame_id,
        })
        .collect();
    let gts: Vec<GroundTruth> = io::load_labels(gts)?
        .into_iter()
        .map(|r| GroundTruth {
            bbox: r.bbox,
            frame_id: r.frame_id,
        })
        .collect();
    let refs = match references {
        Some(p) => io::load_gap_references(p)?,
        None => Default::default(),
    };
    let rows = evaluate(task, &dets, &gts, &refs)?;
    for r in &rows {
        info!("{} {}: AP_BEV {:.2}, AP_3D {:.2}", r.task, r.category, r.ap_bev, r.ap_3d);
    }
    io::store_eval(out.join("eval.csv"), &rows)?;
    Ok(())
}

fn selftrain(cfg: &RunConfig, out: &Path) -> Result<()> {
    let traj = self_train(&cfg.scene, &cfg.oracle, &cfg.selftrain, cfg.seed)?;
    io::store_metrics(out.join("metrics.csv"), &traj.rows)?;
    io::store_rounds(out.join("rounds.csv"), &traj.rounds)?;
    info!("final mean pseudo-label IoU {:.4}", traj.final_mean_iou());
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let (mut cfg, recorded) = match &cli.config {
        Some(p) => read_config(p)?,
        None => (RunConfig::default(), None),
    };
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    let Some(command) = cli.command.or(recorded) else {
        bail!("no subcommand given and the configuration records none");
    };
    let out = cli.out.as_path();
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    match &command {
        Command::Gen { frames } => gen(&cfg, out, *frames)?,
        Command::Refine { frames, labels } => refine(&cfg, out, frames, labels)?,
        Command::Propose { proposals } => propose(&cfg, out, proposals)?,
        Command::Align {
            source,
            target,
            det_loss,
        } => align(&cfg, out, source, target, *det_loss)?,
        Command::Eval {
            detections,
            gts,
            task,
            references,
        } => eval(out, detections, gts, task, references.as_deref())?,
        Command::Selftrain => selftrain(&cfg, out)?,
    }
    write_manifest(out, &cfg, &command)
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let level = if cli.quiet { "warn" } else { "info" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    run(cli)
}
