//! Distances between sets: exact Hausdorff distance for finite point sets,
//! grid-discretized Hausdorff distance for membership-defined sets, and a
//! Monte Carlo symmetric-difference measure.
//!
//! Discretized values carry an explicit error bound derived from the grid
//! pitch; Monte Carlo values carry a standard error.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::alpha::AlphaHullQuery;
use crate::error::{Error, Result};
use crate::geom::{Point2, Rect};
use crate::hull::BiconvexHull;
use crate::region::Region;

/// A set given by a pure membership predicate plus a window containing it.
pub trait SetMembership: Sync {
    fn window(&self) -> Rect;
    fn contains_point(&self, p: Point2) -> bool;
}

impl SetMembership for Region {
    fn window(&self) -> Rect {
        self.bounding_box()
    }

    fn contains_point(&self, p: Point2) -> bool {
        self.contains(p)
    }
}

impl SetMembership for BiconvexHull {
    fn window(&self) -> Rect {
        self.window()
    }

    fn contains_point(&self, p: Point2) -> bool {
        self.contains(p)
    }
}

impl SetMembership for AlphaHullQuery {
    fn window(&self) -> Rect {
        self.window()
    }

    fn contains_point(&self, p: Point2) -> bool {
        self.contains(p)
    }
}

/// Finite point set as a membership-style set (for the distance CLI).
pub struct PointSetMembership {
    points: Vec<Point2>,
    window: Rect,
}

impl PointSetMembership {
    pub fn new(points: Vec<Point2>) -> Result<Self> {
        let window = Rect::bounding(&points)?;
        Ok(Self { points, window })
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }
}

impl SetMembership for PointSetMembership {
    fn window(&self) -> Rect {
        self.window
    }

    fn contains_point(&self, p: Point2) -> bool {
        self.points.iter().any(|&q| q.dist(p) <= 1e-9)
    }
}

/// A distance value together with its discretization error bound.
#[derive(Clone, Copy, Debug)]
pub struct DistanceReport {
    pub value: f64,
    pub error_bound: f64,
}

/// Exact Hausdorff distance between finite point sets.
pub fn hausdorff_points(a: &[Point2], b: &[Point2]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let directed = |from: &[Point2], to: &[Point2]| -> f64 {
        from.iter()
            .map(|&p| {
                to.iter()
                    .map(|&q| p.dist(q))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    Ok(directed(a, b).max(directed(b, a)))
}

/// Directed Hausdorff distance from a membership set to a finite point set,
/// discretized on a grid of pitch `h`; the reported bound is `h * sqrt(2)`.
pub fn hausdorff_region_points(
    r: &dyn SetMembership,
    pts: &[Point2],
    h: f64,
) -> Result<DistanceReport> {
    if pts.is_empty() {
        return Err(Error::EmptySet);
    }
    assert!(h > 0.0, "grid pitch must be positive");
    let window = r.window();
    let grid = grid_points(window, h);
    let members: Vec<Point2> = grid
        .par_iter()
        .copied()
        .filter(|&p| r.contains_point(p))
        .collect();
    if members.is_empty() {
        return Err(Error::EmptySet);
    }
    let index = NearestIndex::build(pts, h.max(window.width().max(window.height()) / 64.0));
    let value = members
        .par_iter()
        .map(|&p| index.nearest_dist(p))
        .reduce(|| 0.0, f64::max);
    Ok(DistanceReport {
        value,
        error_bound: h * std::f64::consts::SQRT_2,
    })
}

/// Symmetric Hausdorff distance between two membership sets, both
/// discretized on a shared grid of pitch `h` over the union of their
/// windows; the reported bound is `2 h sqrt(2)`.
pub fn hausdorff_memberships(
    f: &dyn SetMembership,
    g: &dyn SetMembership,
    h: f64,
) -> Result<DistanceReport> {
    assert!(h > 0.0, "grid pitch must be positive");
    let window = f.window().union(&g.window());
    let nx = (window.width() / h).ceil() as usize + 1;
    let ny = (window.height() / h).ceil() as usize + 1;
    let point_at = |i: usize, j: usize| {
        Point2::new(
            window.min.x + i as f64 * h,
            window.min.y + j as f64 * h,
        )
    };
    let mask = |s: &dyn SetMembership| -> Vec<bool> {
        (0..nx * ny)
            .into_par_iter()
            .map(|k| s.contains_point(point_at(k % nx, k / nx)))
            .collect()
    };
    let fm = mask(f);
    let gm = mask(g);
    if !fm.iter().any(|&b| b) || !gm.iter().any(|&b| b) {
        return Err(Error::EmptySet);
    }
    let df = squared_edt(&fm, nx, ny);
    let dg = squared_edt(&gm, nx, ny);
    let directed = |from: &[bool], dist_sq_to: &[f64]| -> f64 {
        from.iter()
            .zip(dist_sq_to)
            .filter(|(&m, _)| m)
            .map(|(_, &d2)| d2)
            .fold(0.0, f64::max)
    };
    let worst_sq = directed(&fm, &dg).max(directed(&gm, &df));
    Ok(DistanceReport {
        value: worst_sq.sqrt() * h,
        error_bound: 2.0 * h * std::f64::consts::SQRT_2,
    })
}

/// Monte Carlo estimate of the symmetric-difference measure of two
/// membership sets over `window`.
pub fn dmu_mc(
    f: &dyn SetMembership,
    g: &dyn SetMembership,
    window: Rect,
    mc_n: usize,
    seed: u64,
) -> AreaWithError {
    assert!(mc_n >= 1000, "Monte Carlo measure needs at least 1000 points");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<Point2> = (0..mc_n)
        .map(|_| {
            Point2::new(
                rng.random_range(window.min.x..=window.max.x),
                rng.random_range(window.min.y..=window.max.y),
            )
        })
        .collect();
    let hits: u64 = pts
        .par_iter()
        .map(|&p| u64::from(f.contains_point(p) != g.contains_point(p)))
        .sum();
    let frac = hits as f64 / mc_n as f64;
    AreaWithError {
        value: window.area() * frac,
        std_error: window.area() * (frac * (1.0 - frac) / mc_n as f64).sqrt(),
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AreaWithError {
    pub value: f64,
    pub std_error: f64,
}

/// Uniform bucket grid answering exact nearest-neighbor distance queries.
struct NearestIndex {
    cell: f64,
    origin: Point2,
    nx: usize,
    ny: usize,
    starts: Vec<usize>,
    ids: Vec<u32>,
    points: Vec<Point2>,
}

impl NearestIndex {
    fn build(points: &[Point2], cell: f64) -> Self {
        let bbox = Rect::bounding(points).expect("nonempty point set");
        let cell = cell.max(1e-12);
        let nx = ((bbox.width() / cell).floor() as usize + 1).max(1);
        let ny = ((bbox.height() / cell).floor() as usize + 1).max(1);
        let idx = |p: Point2| -> usize {
            let i = (((p.x - bbox.min.x) / cell) as usize).min(nx - 1);
            let j = (((p.y - bbox.min.y) / cell) as usize).min(ny - 1);
            j * nx + i
        };
        let mut starts = vec![0usize; nx * ny + 1];
        for &p in points {
            starts[idx(p) + 1] += 1;
        }
        for i in 1..starts.len() {
            starts[i] += starts[i - 1];
        }
        let mut ids = vec![0u32; points.len()];
        let mut cursor = starts.clone();
        for (pid, &p) in points.iter().enumerate() {
            let c = idx(p);
            ids[cursor[c]] = pid as u32;
            cursor[c] += 1;
        }
        Self {
            cell,
            origin: bbox.min,
            nx,
            ny,
            starts,
            ids,
            points: points.to_vec(),
        }
    }

    fn nearest_dist(&self, p: Point2) -> f64 {
        let ci = ((p.x - self.origin.x) / self.cell).floor() as i64;
        let cj = ((p.y - self.origin.y) / self.cell).floor() as i64;
        // Ring index at which every grid cell has been visited.
        let full = ci
            .abs()
            .max((self.nx as i64 - 1 - ci).abs())
            .max(cj.abs())
            .max((self.ny as i64 - 1 - cj).abs());
        let mut best = f64::INFINITY;
        for ring in 0..=full {
            // Cells in ring `r` hold no point closer than (r-1)*cell.
            if ring > 0 && ((ring - 1) as f64 * self.cell) >= best {
                break;
            }
            let visit = |i: i64, j: i64, best: &mut f64| {
                if i < 0 || j < 0 || i >= self.nx as i64 || j >= self.ny as i64 {
                    return;
                }
                let cidx = j as usize * self.nx + i as usize;
                for &pid in &self.ids[self.starts[cidx]..self.starts[cidx + 1]] {
                    let d = self.points[pid as usize].dist(p);
                    if d < *best {
                        *best = d;
                    }
                }
            };
            if ring == 0 {
                visit(ci, cj, &mut best);
            } else {
                for i in (ci - ring)..=(ci + ring) {
                    visit(i, cj - ring, &mut best);
                    visit(i, cj + ring, &mut best);
                }
                for j in (cj - ring + 1)..(cj + ring) {
                    visit(ci - ring, j, &mut best);
                    visit(ci + ring, j, &mut best);
                }
            }
        }
        best
    }
}

fn grid_points(window: Rect, h: f64) -> Vec<Point2> {
    let nx = (window.width() / h).ceil() as usize + 1;
    let ny = (window.height() / h).ceil() as usize + 1;
    (0..nx * ny)
        .map(|k| {
            Point2::new(
                window.min.x + (k % nx) as f64 * h,
                window.min.y + (k / nx) as f64 * h,
            )
        })
        .collect()
}

/// Exact squared Euclidean distance transform of a boolean mask (distance in
/// grid units to the nearest `true` cell), by separable parabola envelopes.
fn squared_edt(mask: &[bool], nx: usize, ny: usize) -> Vec<f64> {
    const INF: f64 = 1e20;
    let mut field: Vec<f64> = mask.iter().map(|&m| if m { 0.0 } else { INF }).collect();
    let mut column = vec![0.0; ny.max(nx)];
    // Columns first.
    for i in 0..nx {
        for j in 0..ny {
            column[j] = field[j * nx + i];
        }
        let out = edt_1d(&column[..ny]);
        for j in 0..ny {
            field[j * nx + i] = out[j];
        }
    }
    // Then rows.
    let mut row = vec![0.0; nx];
    for j in 0..ny {
        row.copy_from_slice(&field[j * nx..(j + 1) * nx]);
        let out = edt_1d(&row);
        field[j * nx..(j + 1) * nx].copy_from_slice(&out);
    }
    field
}

/// One-dimensional squared distance transform (Felzenszwalb-Huttenlocher).
fn edt_1d(f: &[f64]) -> Vec<f64> {
    let n = f.len();
    let mut v = vec![0usize; n];
    let mut z = vec![0.0f64; n + 1];
    let mut k = 0usize;
    v[0] = 0;
    z[0] = -1e30;
    z[1] = 1e30;
    for q in 1..n {
        let mut s;
        loop {
            let p = v[k];
            s = ((f[q] + (q * q) as f64) - (f[p] + (p * p) as f64)) / (2.0 * (q - p) as f64);
            if s <= z[k] {
                if k == 0 {
                    break;
                }
                k -= 1;
            } else {
                break;
            }
        }
        k += 1;
        v[k] = q;
        z[k] = s;
        z[k + 1] = 1e30;
    }
    let mut out = vec![0.0; n];
    let mut k = 0usize;
    for (q, slot) in out.iter_mut().enumerate() {
        while z[k + 1] < q as f64 {
            k += 1;
        }
        let p = v[k];
        let d = q as f64 - p as f64;
        *slot = d * d + f[p];
    }
    out
}
