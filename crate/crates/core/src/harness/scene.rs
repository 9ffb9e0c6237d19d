//! Synthetic LiDAR frames.
//!
//! Objects get category-typical sizes and are spread over a square around
//! the sensor at the origin. Each object receives a configurable number of
//! interior points, concentrated on the half that faces the sensor, which
//! gives every object a density gradient pointing back at the sensor.
//! The two domains differ only in their per-object point priors.

use serde::{Deserialize, Serialize};

use crate::alignment::Domain;
use crate::error::{Error, Result};
use crate::geometry::{
    ego_to_local, local_to_ego_scaled, points_in_box, Box3D, Category, Point, PointCloud, Size3,
    Vec3,
};
use crate::rng::RandomState;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Gaussian {
    pub mean: f64,
    pub sd: f64,
}

impl Gaussian {
    pub const fn new(mean: f64, sd: f64) -> Self {
        Self { mean, sd }
    }

    fn sample_count(&self, rng: &mut RandomState) -> usize {
        rng.normal(self.mean, self.sd).round().max(0.0) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryCounts {
    pub car: usize,
    pub pedestrian: usize,
    pub cyclist: usize,
}

impl CategoryCounts {
    pub fn get(&self, c: Category) -> usize {
        match c {
            Category::Car => self.car,
            Category::Pedestrian => self.pedestrian,
            Category::Cyclist => self.cyclist,
            Category::Other(_) => 0,
        }
    }
}

/// Per-object point statistics of one domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointPriors {
    pub car: Gaussian,
    pub pedestrian: Gaussian,
    pub cyclist: Gaussian,
    /// Share of object points forced onto the sensor-facing half, in `[0.5, 1]`.
    pub near_side_fraction: f64,
}

impl PointPriors {
    pub fn get(&self, c: Category) -> Gaussian {
        match c {
            Category::Car => self.car,
            Category::Pedestrian => self.pedestrian,
            Category::Cyclist | Category::Other(_) => self.cyclist,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SceneConfig {
    pub instances: CategoryCounts,
    pub source_points: PointPriors,
    pub target_points: PointPriors,
    /// Objects and clutter lie in `[-extent, extent]²` (meters).
    pub extent: f64,
    /// Objects keep at least this distance from the sensor (meters).
    pub min_range: f64,
    pub clutter_points: usize,
    pub max_placement_attempts: usize,
}

impl Default for SceneConfig {
    fn default() -> Self {
        Self {
            instances: CategoryCounts {
                car: 8,
                pedestrian: 4,
                cyclist: 3,
            },
            source_points: PointPriors {
                car: Gaussian::new(400.0, 80.0),
                pedestrian: Gaussian::new(90.0, 20.0),
                cyclist: Gaussian::new(110.0, 25.0),
                near_side_fraction: 0.65,
            },
            target_points: PointPriors {
                car: Gaussian::new(120.0, 30.0),
                pedestrian: Gaussian::new(25.0, 8.0),
                cyclist: Gaussian::new(30.0, 10.0),
                near_side_fraction: 0.9,
            },
            extent: 40.0,
            min_range: 4.0,
            clutter_points: 1500,
            max_placement_attempts: 1000,
        }
    }
}

impl SceneConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.extent > self.min_range && self.min_range >= 0.0) {
            return Err(Error::Config(format!(
                "scene extent {} must exceed min_range {}",
                self.extent, self.min_range
            )));
        }
        for p in [&self.source_points, &self.target_points] {
            if !(0.5..=1.0).contains(&p.near_side_fraction) {
                return Err(Error::Config("near_side_fraction must be in [0.5, 1]".into()));
            }
            for g in [p.car, p.pedestrian, p.cyclist] {
                if !(g.mean >= 0.0 && g.sd >= 0.0) {
                    return Err(Error::Config(format!("bad point prior {g:?}")));
                }
            }
        }
        if self.max_placement_attempts == 0 {
            return Err(Error::Config("max_placement_attempts must be positive".into()));
        }
        Ok(())
    }

    pub fn priors(&self, domain: Domain) -> &PointPriors {
        match domain {
            Domain::Source => &self.source_points,
            Domain::Target => &self.target_points,
        }
    }
}

/// Mean size and per-axis jitter (meters) for a category.
pub fn size_prior(c: Category) -> (Size3, f64) {
    match c {
        Category::Car => (Size3::new(3.9, 1.6, 1.56), 0.2),
        Category::Pedestrian => (Size3::new(0.8, 0.6, 1.73), 0.06),
        Category::Cyclist | Category::Other(_) => (Size3::new(1.76, 0.6, 1.73), 0.1),
    }
}

pub fn sample_size(c: Category, rng: &mut RandomState) -> Size3 {
    let (m, j) = size_prior(c);
    let mut jit = |v: f64| (v + rng.normal(0.0, j)).max(0.5 * v);
    Size3::new(jit(m.l), jit(m.w), jit(m.h))
}

/// A generated or loaded frame, with the per-object point centroid offsets
/// the oracle detector uses as its density gradient.
#[derive(Debug, Clone)]
pub struct Frame {
    pub id: u64,
    pub domain: Domain,
    pub cloud: PointCloud,
    pub gts: Vec<Box3D>,
    density_offsets: Vec<Vec3>,
}

impl Frame {
    pub fn new(id: u64, domain: Domain, cloud: PointCloud, gts: Vec<Box3D>) -> Self {
        let density_offsets = gts
            .iter()
            .map(|b| {
                let idx = points_in_box(&cloud, b);
                if idx.is_empty() {
                    return Vec3::ZERO;
                }
                let sum = idx
                    .iter()
                    .fold(Vec3::ZERO, |acc, &i| acc + cloud.points()[i].position());
                let mut off = sum * (1.0 / idx.len() as f64) - b.center();
                off.z = 0.0;
                off
            })
            .collect();
        Self {
            id,
            domain,
            cloud,
            gts,
            density_offsets,
        }
    }

    /// Centroid of each object's points minus its center, in the ground plane.
    pub fn density_offsets(&self) -> &[Vec3] {
        &self.density_offsets
    }
}

fn place(cfg: &SceneConfig, c: Category, placed: &[Box3D], rng: &mut RandomState) -> Result<Box3D> {
    for _ in 0..cfg.max_placement_attempts {
        let x = rng.uniform_range(-cfg.extent, cfg.extent);
        let y = rng.uniform_range(-cfg.extent, cfg.extent);
        let heading = rng.uniform_range(-std::f64::consts::PI, std::f64::consts::PI);
        let size = sample_size(c, rng);
        if x.hypot(y) < cfg.min_range {
            continue;
        }
        let b = Box3D::new(Vec3::new(x, y, 0.5 * size.h), size, heading, c)?;
        let clear = placed.iter().all(|o| {
            let d = (o.center() - b.center()).norm();
            d > o.bev_radius() + b.bev_radius() + 0.3
        });
        if clear {
            return Ok(b);
        }
    }
    Err(Error::Capacity(format!(
        "could not place a {c} after {} attempts",
        cfg.max_placement_attempts
    )))
}

fn object_points(b: &Box3D, n: usize, near_frac: f64, rng: &mut RandomState) -> Vec<Point> {
    let toward = ego_to_local(Vec3::ZERO, b);
    let s = b.size();
    // 0.98 keeps points strictly inside so counts survive round-off.
    let k = 0.49;
    (0..n)
        .map(|_| {
            let mut u = Vec3::new(
                rng.uniform_range(-k, k) * s.l,
                rng.uniform_range(-k, k) * s.w,
                rng.uniform_range(-k, k) * s.h,
            );
            let facing = u.x * toward.x + u.y * toward.y >= 0.0;
            if !facing && rng.uniform() < 2.0 * near_frac - 1.0 {
                u.x = -u.x;
                u.y = -u.y;
            }
            let p = local_to_ego_scaled(u, s, b).expect("valid box size");
            Point::from_position(p, rng.uniform())
        })
        .collect()
}

/// Generates one frame. Objects never overlap and clutter never falls
/// inside an object, so each object holds exactly its sampled point count.
pub fn generate_scene(
    cfg: &SceneConfig,
    domain: Domain,
    id: u64,
    rng: &mut RandomState,
) -> Result<Frame> {
    cfg.validate()?;
    let priors = cfg.priors(domain);
    let mut gts: Vec<Box3D> = Vec::new();
    for c in Category::KITTI {
        for _ in 0..cfg.instances.get(c) {
            let b = place(cfg, c, &gts, rng)?;
            gts.push(b);
        }
    }
    let mut points = Vec::new();
    for b in &gts {
        let n = priors.get(b.category()).sample_count(rng);
        points.extend(object_points(b, n, priors.near_side_fraction, rng));
    }
    let mut clutter = 0;
    let mut tries = 0;
    while clutter < cfg.clutter_points {
        tries += 1;
        if tries > cfg.clutter_points * 20 + 1000 {
            return Err(Error::Capacity("scene too crowded for clutter".into()));
        }
        let p = Vec3::new(
            rng.uniform_range(-cfg.extent, cfg.extent),
            rng.uniform_range(-cfg.extent, cfg.extent),
            rng.uniform_range(-0.3, 2.5),
        );
        // Keep clutter a hair away from every object.
        let near = gts.iter().any(|b| {
            let l = ego_to_local(p, b);
            let s = b.size();
            l.x.abs() <= 0.5 * s.l + 1e-3 && l.y.abs() <= 0.5 * s.w + 1e-3 && l.z.abs() <= 0.5 * s.h + 1e-3
        });
        if near {
            continue;
        }
        points.push(Point::from_position(p, 0.1 * rng.uniform()));
        clutter += 1;
    }
    Ok(Frame::new(id, domain, PointCloud::new(points)?, gts))
}
