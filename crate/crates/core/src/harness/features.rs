//! Synthetic RoI features.
//!
//! Every (domain, category) pair has a Gaussian cluster. Source clusters
//! are well separated; target clusters are pulled toward their common
//! centroid and shifted, so a nearest-source-cluster classifier confuses
//! target categories. Alignment moves target clusters back toward the
//! same-category source cluster by a step that grows with the triplet loss.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::alignment::{euclidean, Domain, RoiFeature, TripletLosses};
use crate::error::{Error, Result};
use crate::geometry::Category;
use crate::rng::RandomState;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct FeatureConfig {
    pub dim: usize,
    /// Pairwise distance between source cluster centers.
    pub separation: f64,
    /// Per-dimension standard deviation inside a cluster.
    pub noise: f64,
    /// How far target centers collapse toward their centroid, in `[0, 1)`.
    pub entanglement: f64,
    /// Length of the common source→target offset.
    pub domain_shift: f64,
    /// Fraction of the source-target gap closed per unit of per-anchor loss.
    pub align_rate: f64,
}

impl Default for FeatureConfig {
    fn default() -> Self {
        Self {
            dim: 32,
            separation: 4.0,
            noise: 0.45,
            entanglement: 0.75,
            domain_shift: 1.0,
            align_rate: 0.08,
        }
    }
}

impl FeatureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::Config("feature dim must be positive".into()));
        }
        if !(0.0..1.0).contains(&self.entanglement) {
            return Err(Error::Config("entanglement must be in [0, 1)".into()));
        }
        if self.noise < 0.0 || self.separation <= 0.0 || self.align_rate < 0.0 {
            return Err(Error::Config("feature noise, separation and align_rate must be non-negative".into()));
        }
        Ok(())
    }
}

fn random_direction(dim: usize, rng: &mut RandomState) -> Vec<f64> {
    let v: Vec<f64> = (0..dim).map(|_| rng.normal(0.0, 1.0)).collect();
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-12);
    v.into_iter().map(|x| x / n).collect()
}

#[derive(Debug, Clone)]
pub struct FeatureModel {
    cfg: FeatureConfig,
    source: BTreeMap<Category, Vec<f64>>,
    target: BTreeMap<Category, Vec<f64>>,
}

impl FeatureModel {
    pub fn new(cfg: FeatureConfig, rng: &mut RandomState) -> Result<Self> {
        cfg.validate()?;
        let radius = cfg.separation / std::f64::consts::SQRT_2;
        let source: BTreeMap<Category, Vec<f64>> = Category::KITTI
            .iter()
            .map(|&c| {
                let d = random_direction(cfg.dim, rng);
                (c, d.into_iter().map(|x| x * radius).collect())
            })
            .collect();
        let mut centroid = vec![0.0; cfg.dim];
        for m in source.values() {
            for (a, b) in centroid.iter_mut().zip(m) {
                *a += b / source.len() as f64;
            }
        }
        let shift: Vec<f64> = random_direction(cfg.dim, rng)
            .into_iter()
            .map(|x| x * cfg.domain_shift)
            .collect();
        let e = cfg.entanglement;
        let target = source
            .iter()
            .map(|(&c, m)| {
                let t = m
                    .iter()
                    .zip(&centroid)
                    .zip(&shift)
                    .map(|((s, g), d)| (1.0 - e) * s + e * g + d)
                    .collect();
                (c, t)
            })
            .collect();
        Ok(Self { cfg, source, target })
    }

    fn means(&self, domain: Domain) -> &BTreeMap<Category, Vec<f64>> {
        match domain {
            Domain::Source => &self.source,
            Domain::Target => &self.target,
        }
    }

    pub fn sample(&self, domain: Domain, category: Category, rng: &mut RandomState) -> RoiFeature {
        let c = if self.source.contains_key(&category) {
            category
        } else {
            Category::Cyclist
        };
        let v = self.means(domain)[&c]
            .iter()
            .map(|m| rng.normal(*m, self.cfg.noise))
            .collect();
        RoiFeature::new(v, domain, category).expect("finite Gaussian draw")
    }

    /// Nearest source cluster; ties go to the earlier category.
    pub fn classify(&self, f: &RoiFeature) -> Category {
        let mut best = (Category::Car, f64::INFINITY);
        for (&c, m) in &self.source {
            let d = euclidean(f.vector(), m);
            if d < best.1 {
                best = (c, d);
            }
        }
        best.0
    }

    /// Mean distance between each target center and its source center.
    pub fn domain_gap(&self) -> f64 {
        let n = self.source.len() as f64;
        self.source
            .iter()
            .map(|(c, s)| euclidean(s, &self.target[c]))
            .sum::<f64>()
            / n
    }

    /// Moves target centers toward their source centers by a fraction
    /// `align_rate · loss / anchors`, capped at 1.
    pub fn align_step(&mut self, losses: &TripletLosses, anchors: usize) {
        if anchors == 0 {
            return;
        }
        let frac = (self.cfg.align_rate * losses.total / anchors as f64).clamp(0.0, 1.0);
        for (c, t) in self.target.iter_mut() {
            let s = &self.source[c];
            for (tv, sv) in t.iter_mut().zip(s) {
                *tv += frac * (sv - *tv);
            }
        }
    }
}
