//! Oriented-box geometry for upright LiDAR boxes.
//!
//! Boxes rotate about the z-axis only. The local frame of a box has its
//! origin at the box center and its x-axis along the heading, so a point
//! is inside the box iff its local coordinates fall within the half-extents.
//!
//! Coordinate transforms follow the row-vector convention: a point is a
//! row vector right-multiplied by the rotation matrix.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Slack applied to the closed containment test, in meters. Absorbs
/// round-off from chained rotations so boundary points stay inside.
pub const CONTAINMENT_EPS: f64 = 1e-9;

/// Intersection polygons with less area than this (m²) count as empty.
pub const SLIVER_AREA: f64 = 1e-12;

pub type Mat3 = [[f64; 3]; 3];

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn dot(&self, o: &Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Row vector times matrix.
    pub fn mul_mat(&self, m: &Mat3) -> Vec3 {
        Vec3::new(
            self.x * m[0][0] + self.y * m[1][0] + self.z * m[2][0],
            self.x * m[0][1] + self.y * m[1][1] + self.z * m[2][1],
            self.x * m[0][2] + self.y * m[1][2] + self.z * m[2][2],
        )
    }

    /// Row vector times the transpose of `m`.
    pub fn mul_mat_t(&self, m: &Mat3) -> Vec3 {
        Vec3::new(
            self.x * m[0][0] + self.y * m[0][1] + self.z * m[0][2],
            self.x * m[1][0] + self.y * m[1][1] + self.z * m[1][2],
            self.x * m[2][0] + self.y * m[2][1] + self.z * m[2][2],
        )
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

/// Object category. The three KITTI classes plus an open-ended id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    Car,
    Pedestrian,
    Cyclist,
    Other(u16),
}

impl Category {
    pub const KITTI: [Category; 3] = [Category::Car, Category::Pedestrian, Category::Cyclist];

    /// IoU needed for a detection of this category to count as a true positive.
    pub fn match_threshold(&self) -> f64 {
        match self {
            Category::Car => 0.7,
            _ => 0.5,
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Category::Car => f.write_str("Car"),
            Category::Pedestrian => f.write_str("Pedestrian"),
            Category::Cyclist => f.write_str("Cyclist"),
            Category::Other(id) => write!(f, "Class{id}"),
        }
    }
}

impl FromStr for Category {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "car" => Ok(Category::Car),
            "pedestrian" => Ok(Category::Pedestrian),
            "cyclist" => Ok(Category::Cyclist),
            other => other
                .strip_prefix("class")
                .and_then(|id| id.parse().ok())
                .map(Category::Other)
                .ok_or_else(|| Error::invalid(format!("unknown category `{s}`"))),
        }
    }
}

/// Box extents (length along heading, width, height), meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Size3 {
    pub l: f64,
    pub w: f64,
    pub h: f64,
}

impl Size3 {
    pub const fn new(l: f64, w: f64, h: f64) -> Self {
        Self { l, w, h }
    }

    pub fn is_valid(&self) -> bool {
        [self.l, self.w, self.h]
            .iter()
            .all(|v| v.is_finite() && *v > 0.0)
    }

    pub fn volume(&self) -> f64 {
        self.l * self.w * self.h
    }
}

/// Maps an angle into `(-π, π]`. Angles already in range are returned bit-for-bit.
pub fn normalize_angle(theta: f64) -> f64 {
    if theta > -PI && theta <= PI {
        return theta;
    }
    let mut t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t -= 2.0 * PI;
    }
    if t <= -PI {
        t = PI;
    }
    t
}

/// Upright oriented 3D box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Box3D {
    center: Vec3,
    size: Size3,
    heading: f64,
    category: Category,
}

impl Box3D {
    pub fn new(center: Vec3, size: Size3, heading: f64, category: Category) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::invalid(format!("non-finite box center {center:?}")));
        }
        if !size.is_valid() {
            return Err(Error::DegenerateBox(format!("box size {size:?}")));
        }
        if !heading.is_finite() {
            return Err(Error::invalid("non-finite heading"));
        }
        Ok(Self {
            center,
            size,
            heading: normalize_angle(heading),
            category,
        })
    }

    pub fn center(&self) -> Vec3 {
        self.center
    }

    pub fn size(&self) -> Size3 {
        self.size
    }

    pub fn heading(&self) -> f64 {
        self.heading
    }

    pub fn category(&self) -> Category {
        self.category
    }

    /// Same box moved to `center`; every other field is copied unchanged.
    pub fn with_center(&self, center: Vec3) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::invalid(format!("non-finite box center {center:?}")));
        }
        Ok(Self { center, ..*self })
    }

    pub fn with_category(&self, category: Category) -> Self {
        Self { category, ..*self }
    }

    pub fn volume(&self) -> f64 {
        self.size.volume()
    }

    pub fn bev_area(&self) -> f64 {
        self.size.l * self.size.w
    }

    /// Half of the xy-footprint diagonal.
    pub fn bev_radius(&self) -> f64 {
        0.5 * self.size.l.hypot(self.size.w)
    }

    pub fn z_range(&self) -> (f64, f64) {
        let half = 0.5 * self.size.h;
        (self.center.z - half, self.center.z + half)
    }

    /// Footprint corners in counter-clockwise order.
    pub fn bev_corners(&self) -> [[f64; 2]; 4] {
        let (s, c) = self.heading.sin_cos();
        let hl = 0.5 * self.size.l;
        let hw = 0.5 * self.size.w;
        [(hl, hw), (-hl, hw), (-hl, -hw), (hl, -hw)].map(|(x, y)| {
            [
                self.center.x + x * c - y * s,
                self.center.y + x * s + y * c,
            ]
        })
    }

    pub fn contains(&self, p: Vec3) -> bool {
        let local = ego_to_local(p, self);
        local.x.abs() <= 0.5 * self.size.l + CONTAINMENT_EPS
            && local.y.abs() <= 0.5 * self.size.w + CONTAINMENT_EPS
            && local.z.abs() <= 0.5 * self.size.h + CONTAINMENT_EPS
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub intensity: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64, z: f64, intensity: f64) -> Self {
        Self { x, y, z, intensity }
    }

    pub fn from_position(p: Vec3, intensity: f64) -> Self {
        Self::new(p.x, p.y, p.z, intensity)
    }

    pub fn position(&self) -> Vec3 {
        Vec3::new(self.x, self.y, self.z)
    }

    fn is_finite(&self) -> bool {
        self.position().is_finite() && self.intensity.is_finite()
    }
}

/// Frame-local LiDAR sweep.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PointCloud {
    points: Vec<Point>,
}

impl PointCloud {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if let Some(i) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::invalid(format!("point {i} has non-finite values")));
        }
        Ok(Self { points })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub(crate) fn extend(&mut self, pts: impl IntoIterator<Item = Point>) {
        self.points.extend(pts);
    }

    /// Keeps points whose index is not in `drop` (which must be sorted).
    pub(crate) fn without_indices(&self, drop: &[usize]) -> PointCloud {
        let mut next = drop.iter().peekable();
        let points = self
            .points
            .iter()
            .enumerate()
            .filter(|(i, _)| {
                if next.peek() == Some(&i) {
                    next.next();
                    false
                } else {
                    true
                }
            })
            .map(|(_, p)| *p)
            .collect();
        PointCloud { points }
    }
}

pub fn rotation_matrix(theta: f64) -> Result<Mat3> {
    if !theta.is_finite() {
        return Err(Error::invalid("rotation angle must be finite"));
    }
    let (s, c) = theta.sin_cos();
    Ok([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
}

fn rot(theta: f64) -> Mat3 {
    let (s, c) = theta.sin_cos();
    [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]
}

/// Ego-frame point into `b`'s local frame: `(p - center) · M_θ`.
pub fn ego_to_local(p: Vec3, b: &Box3D) -> Vec3 {
    (p - b.center).mul_mat(&rot(b.heading))
}

/// Local point of a box of size `src_size`, stretched onto `dst` and placed
/// in the ego frame: `(scale ⊙ p) · M_θᵀ + center`.
pub fn local_to_ego_scaled(p_local: Vec3, src_size: Size3, dst: &Box3D) -> Result<Vec3> {
    if !src_size.is_valid() {
        return Err(Error::DegenerateBox(format!("source size {src_size:?}")));
    }
    let m = rot(dst.heading);
    Ok(local_to_ego_with(p_local, src_size, dst, &m))
}

pub(crate) fn local_to_ego_with(p_local: Vec3, src: Size3, dst: &Box3D, m: &Mat3) -> Vec3 {
    let scaled = Vec3::new(
        dst.size.l / src.l * p_local.x,
        dst.size.w / src.w * p_local.y,
        dst.size.h / src.h * p_local.z,
    );
    scaled.mul_mat_t(m) + dst.center
}

/// Indices of cloud points inside `b` (closed box), ascending.
pub fn points_in_box(cloud: &PointCloud, b: &Box3D) -> Vec<usize> {
    let reach = 0.5 * b.size.l.hypot(b.size.w).hypot(b.size.h) + CONTAINMENT_EPS;
    let reach2 = reach * reach;
    cloud
        .points
        .iter()
        .enumerate()
        .filter(|(_, p)| {
            let d = p.position() - b.center;
            d.dot(&d) <= reach2 && b.contains(p.position())
        })
        .map(|(i, _)| i)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IouKind {
    #[default]
    ThreeD,
    Bev,
}

pub fn iou(a: &Box3D, b: &Box3D, kind: IouKind) -> f64 {
    match kind {
        IouKind::ThreeD => iou_3d(a, b),
        IouKind::Bev => iou_bev(a, b),
    }
}

pub fn iou_bev(a: &Box3D, b: &Box3D) -> f64 {
    if same_footprint(a, b) {
        return 1.0;
    }
    let inter = bev_intersection_area(a, b);
    if inter <= 0.0 {
        return 0.0;
    }
    let union = a.bev_area() + b.bev_area() - inter;
    (inter / union).clamp(0.0, 1.0)
}

pub fn iou_3d(a: &Box3D, b: &Box3D) -> f64 {
    if same_footprint(a, b) && a.center.z == b.center.z && a.size.h == b.size.h {
        return 1.0;
    }
    let (a_lo, a_hi) = a.z_range();
    let (b_lo, b_hi) = b.z_range();
    let dz = a_hi.min(b_hi) - a_lo.max(b_lo);
    if dz <= 0.0 {
        return 0.0;
    }
    let area = bev_intersection_area(a, b);
    if area <= 0.0 {
        return 0.0;
    }
    let inter = area * dz;
    let union = a.volume() + b.volume() - inter;
    (inter / union).clamp(0.0, 1.0)
}

fn same_footprint(a: &Box3D, b: &Box3D) -> bool {
    a.center.x == b.center.x
        && a.center.y == b.center.y
        && a.size.l == b.size.l
        && a.size.w == b.size.w
        && a.heading == b.heading
}

/// Footprint overlap area via Sutherland–Hodgman clipping.
pub fn bev_intersection_area(a: &Box3D, b: &Box3D) -> f64 {
    let dx = a.center.x - b.center.x;
    let dy = a.center.y - b.center.y;
    let reach = a.bev_radius() + b.bev_radius();
    if dx * dx + dy * dy >= reach * reach {
        return 0.0;
    }
    let clipped = clip_convex(&a.bev_corners(), &b.bev_corners());
    let area = polygon_area(&clipped);
    if area < SLIVER_AREA {
        0.0
    } else {
        area
    }
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn line_intersection(p: [f64; 2], q: [f64; 2], a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    let cp = cross(a, b, p);
    let cq = cross(a, b, q);
    let t = cp / (cp - cq);
    [p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])]
}

/// Clips `subject` by the convex counter-clockwise polygon `clip`.
fn clip_convex(subject: &[[f64; 2]], clip: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut output: Vec<[f64; 2]> = subject.to_vec();
    for k in 0..clip.len() {
        if output.is_empty() {
            break;
        }
        let a = clip[k];
        let b = clip[(k + 1) % clip.len()];
        let input = std::mem::take(&mut output);
        let mut prev = input[input.len() - 1];
        let mut prev_in = cross(a, b, prev) >= 0.0;
        for &cur in &input {
            let cur_in = cross(a, b, cur) >= 0.0;
            if cur_in {
                if !prev_in {
                    output.push(line_intersection(prev, cur, a, b));
                }
                output.push(cur);
            } else if prev_in {
                output.push(line_intersection(prev, cur, a, b));
            }
            prev = cur;
            prev_in = cur_in;
        }
    }
    output
}

/// Shoelace area (absolute).
fn polygon_area(poly: &[[f64; 2]]) -> f64 {
    if poly.len() < 3 {
        return 0.0;
    }
    let twice: f64 = (0..poly.len())
        .map(|i| {
            let p = poly[i];
            let q = poly[(i + 1) % poly.len()];
            p[0] * q[1] - q[0] * p[1]
        })
        .sum();
    0.5 * twice.abs()
}

/// Order in which greedy NMS visits boxes: descending score, lower index first on ties.
pub fn score_order(scores: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&i, &j| match scores[j].total_cmp(&scores[i]) {
        Ordering::Equal => i.cmp(&j),
        o => o,
    });
    order
}

/// Greedy non-maximum suppression. Returns kept indices in visiting order.
pub fn nms(boxes: &[Box3D], scores: &[f64], iou_threshold: f64, kind: IouKind) -> Result<Vec<usize>> {
    if boxes.len() != scores.len() {
        return Err(Error::invalid(format!(
            "{} boxes but {} scores",
            boxes.len(),
            scores.len()
        )));
    }
    if !(0.0..=1.0).contains(&iou_threshold) {
        return Err(Error::invalid(format!(
            "NMS threshold {iou_threshold} outside [0, 1]"
        )));
    }
    if scores.iter().any(|s| !s.is_finite()) {
        return Err(Error::invalid("NMS scores must be finite"));
    }
    let mut kept: Vec<usize> = Vec::new();
    for i in score_order(scores) {
        if kept
            .iter()
            .all(|&k| iou(&boxes[k], &boxes[i], kind) < iou_threshold)
        {
            kept.push(i);
        }
    }
    Ok(kept)
}
