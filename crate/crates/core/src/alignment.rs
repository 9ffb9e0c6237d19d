//! Cross-domain RoI feature alignment with batch-hard triplet mining.
//!
//! For an anchor from domain `d1`, the positive is the farthest same-category
//! feature in domain `d2` and the negative the nearest other-category one.
//! The intra-domain loss sums the (s,s) and (t,t) pairings, the inter-domain
//! loss the (s,t) and (t,s) pairings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Category;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    Source,
    Target,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::Source => "source",
            Domain::Target => "target",
        })
    }
}

impl FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "source" => Ok(Domain::Source),
            "target" => Ok(Domain::Target),
            _ => Err(Error::invalid(format!("unknown domain `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RoiFeature {
    vector: Vec<f64>,
    pub domain: Domain,
    pub category: Category,
}

impl RoiFeature {
    pub fn new(vector: Vec<f64>, domain: Domain, category: Category) -> Result<Self> {
        if vector.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("feature vector has non-finite entries"));
        }
        Ok(Self {
            vector,
            domain,
            category,
        })
    }

    pub fn vector(&self) -> &[f64] {
        &self.vector
    }

    pub fn dim(&self) -> usize {
        self.vector.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TripletConfig {
    pub alpha: f64,
    pub eta: f64,
}

impl Default for TripletConfig {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            eta: 0.1,
        }
    }
}

impl TripletConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(Error::invalid(format!("margin alpha {} must be > 0", self.alpha)));
        }
        if !(self.eta > 0.0 && self.eta < 1.0) {
            return Err(Error::invalid(format!("eta {} outside (0, 1)", self.eta)));
        }
        Ok(())
    }
}

pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn check_dims(anchor: &RoiFeature, pool: &[RoiFeature]) -> Result<()> {
    match pool.iter().find(|f| f.dim() != anchor.dim()) {
        Some(f) => Err(Error::invalid(format!(
            "feature dimension {} does not match anchor dimension {}",
            f.dim(),
            anchor.dim()
        ))),
        None => Ok(()),
    }
}

/// Mines `pool` for the candidate of `anchor` that maximizes `better`.
/// `exclude` removes one pool index (the anchor itself for same-domain mining).
fn mine(
    anchor: &RoiFeature,
    pool: &[RoiFeature],
    exclude: Option<usize>,
    eligible: impl Fn(&RoiFeature) -> bool,
    better: impl Fn(f64, f64) -> bool,
) -> Result<Option<(usize, f64)>> {
    check_dims(anchor, pool)?;
    let mut best: Option<(usize, f64)> = None;
    for (i, f) in pool.iter().enumerate() {
        if Some(i) == exclude || !eligible(f) {
            continue;
        }
        let d = euclidean(&anchor.vector, &f.vector);
        if best.is_none_or(|(_, bd)| better(d, bd)) {
            best = Some((i, d));
        }
    }
    Ok(best)
}

/// Farthest same-category member of `pool`. Ties go to the lowest index.
pub fn hardest_positive(
    anchor: &RoiFeature,
    pool: &[RoiFeature],
    exclude: Option<usize>,
) -> Result<Option<usize>> {
    Ok(mine(anchor, pool, exclude, |f| f.category == anchor.category, |d, b| d > b)?.map(|m| m.0))
}

/// Nearest member of `pool` with a different category. Ties go to the lowest index.
pub fn hardest_negative(
    anchor: &RoiFeature,
    pool: &[RoiFeature],
    exclude: Option<usize>,
) -> Result<Option<usize>> {
    Ok(mine(anchor, pool, exclude, |f| f.category != anchor.category, |d, b| d < b)?.map(|m| m.0))
}

fn single_domain(feats: &[RoiFeature]) -> Result<Option<Domain>> {
    let Some(first) = feats.first() else {
        return Ok(None);
    };
    if feats.iter().any(|f| f.domain != first.domain) {
        return Err(Error::invalid("feature batch mixes domains"));
    }
    Ok(Some(first.domain))
}

/// Hinge-summed triplet loss of anchors `d1` mined against pool `d2`.
///
/// When both batches carry the same domain they are taken to be the same
/// batch, and each anchor is excluded from its own candidate set. Anchors
/// lacking a positive or a negative contribute nothing.
pub fn triplet_loss_pair(d1: &[RoiFeature], d2: &[RoiFeature], alpha: f64) -> Result<f64> {
    if alpha.is_nan() || alpha <= 0.0 {
        return Err(Error::invalid(format!("margin alpha {alpha} must be > 0")));
    }
    let same = match (single_domain(d1)?, single_domain(d2)?) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    };
    if same && d1.len() != d2.len() {
        return Err(Error::invalid(
            "same-domain pairing needs the anchor batch as its own pool",
        ));
    }
    let mut total = 0.0;
    for (a, anchor) in d1.iter().enumerate() {
        let exclude = same.then_some(a);
        let pos = mine(anchor, d2, exclude, |f| f.category == anchor.category, |d, b| d > b)?;
        let neg = mine(anchor, d2, exclude, |f| f.category != anchor.category, |d, b| d < b)?;
        if let (Some((_, dp)), Some((_, dn))) = (pos, neg) {
            total += (dp - dn + alpha).max(0.0);
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripletLosses {
    pub intra: f64,
    pub inter: f64,
    pub total: f64,
}

pub fn total_triplet_loss(
    source: &[RoiFeature],
    target: &[RoiFeature],
    alpha: f64,
) -> Result<TripletLosses> {
    if single_domain(source)?.is_some_and(|d| d != Domain::Source)
        || single_domain(target)?.is_some_and(|d| d != Domain::Target)
    {
        return Err(Error::invalid("source/target batches carry the wrong domain tag"));
    }
    let intra = triplet_loss_pair(source, source, alpha)? + triplet_loss_pair(target, target, alpha)?;
    let inter = triplet_loss_pair(source, target, alpha)? + triplet_loss_pair(target, source, alpha)?;
    Ok(TripletLosses {
        intra,
        inter,
        total: intra + inter,
    })
}

/// Detection loss plus the weighted triplet loss.
pub fn combined_loss(det_loss: f64, triplet_total: f64, cfg: &TripletConfig) -> Result<f64> {
    cfg.validate()?;
    Ok(det_loss + cfg.eta * triplet_total)
}
