//! Statistical layer: the hull-area curve over the angle grid, the angle
//! estimator, inner-subsample diagnostics, and the convergence experiments.

use rayon::prelude::*;

use crate::alpha::AlphaHullQuery;
use crate::error::{Error, Result};
use crate::geom::Point2;
use crate::hull::{build_hull, BiconvexHull};
use crate::metrics::{dmu_mc, hausdorff_memberships, hausdorff_region_points};
use crate::region::{deep_interior, uniform_sample, Region};

/// Hull area as a function of the axis angle, evaluated on a grid, with the
/// grid argmin and an optional golden-section refinement.
#[derive(Clone, Debug)]
pub struct AngleScan {
    pub thetas: Vec<f64>,
    pub psi: Vec<f64>,
    pub argmin_theta: f64,
    pub refined_theta: Option<f64>,
}

/// Hull area of the sample at axis angle `theta`.
pub fn psi(points: &[Point2], theta: f64) -> Result<f64> {
    Ok(build_hull(points, theta)?.area())
}

/// Evaluate the area curve on the uniform grid `{j * (pi/2) / grid_k}` and
/// locate its minimum; ties break toward the smallest angle. With `refine`,
/// a golden-section pass runs inside the two grid cells bracketing the
/// argmin (the curve need not be unimodal, so the refined value is advisory
/// and the grid argmin remains the contract).
pub fn estimate_angle(points: &[Point2], grid_k: usize, refine: bool) -> Result<AngleScan> {
    if points.is_empty() {
        return Err(Error::EmptySample);
    }
    assert!(grid_k >= 8, "angle grid must have at least 8 points");
    let pitch = std::f64::consts::FRAC_PI_2 / grid_k as f64;
    let thetas: Vec<f64> = (0..grid_k).map(|j| j as f64 * pitch).collect();
    let psi_values: Vec<f64> = thetas
        .par_iter()
        .map(|&t| build_hull(points, t).map(|h| h.area()))
        .collect::<Result<_>>()?;
    let mut best = 0usize;
    for (j, &v) in psi_values.iter().enumerate() {
        if v < psi_values[best] {
            best = j;
        }
    }
    let argmin_theta = thetas[best];
    let refined_theta = if refine {
        let mut lo = argmin_theta - pitch;
        let mut hi = argmin_theta + pitch;
        let eval = |t: f64| build_hull(points, t).map(|h| h.area());
        let inv_phi = (5.0f64.sqrt() - 1.0) / 2.0;
        let mut c = hi - inv_phi * (hi - lo);
        let mut d = lo + inv_phi * (hi - lo);
        let mut fc = eval(c)?;
        let mut fd = eval(d)?;
        for _ in 0..40 {
            if fc < fd {
                hi = d;
                d = c;
                fd = fc;
                c = hi - inv_phi * (hi - lo);
                fc = eval(c)?;
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + inv_phi * (hi - lo);
                fd = eval(d)?;
            }
        }
        Some(crate::geom::reduce_angle(0.5 * (lo + hi)))
    } else {
        None
    };
    Ok(AngleScan {
        thetas,
        psi: psi_values,
        argmin_theta,
        refined_theta,
    })
}

/// Partition the sample into inner points (all four oriented quadrants
/// occupied by another sample point) and extremal points.
pub fn inner_subsample(points: &[Point2], theta: f64) -> Result<(Vec<Point2>, Vec<Point2>)> {
    let hull = build_hull(points, theta)?;
    let mut inner = Vec::new();
    let mut extremal = Vec::new();
    for (&p, &e) in points.iter().zip(hull.extremal_mask()) {
        if e {
            extremal.push(p);
        } else {
            inner.push(p);
        }
    }
    Ok((inner, extremal))
}

/// One cell of the deep-interior diagnostic.
#[derive(Clone, Debug)]
pub struct DeepInteriorRow {
    pub n: usize,
    pub seed: u64,
    pub radius: f64,
    pub deep_count: usize,
    pub deep_extremal_count: usize,
    /// `deep_extremal_count / deep_count`, zero when no point is deep.
    pub fraction: f64,
}

/// Erosion radius for the deep-interior diagnostic at sample size `n`.
///
/// The inclusion "deep sample points are eventually inner" holds when
/// `n * r_n^2` diverges, so the radius family is `r_n = n^-(1/2 - eps)`.
pub fn erosion_radius(n: usize, eps: f64) -> f64 {
    assert!(eps > 0.0 && eps < 0.5, "eps must lie in (0, 1/2)");
    (n as f64).powf(-(0.5 - eps))
}

/// For each `(n, seed)`: sample the region, classify points deeper than the
/// erosion radius, and count how many of those are extremal.
pub fn deep_interior_diagnostic(
    region: &Region,
    theta: f64,
    ns: &[usize],
    eps: f64,
    seeds: &[u64],
) -> Result<Vec<DeepInteriorRow>> {
    let mut cells: Vec<(usize, u64)> = Vec::new();
    for &n in ns {
        for &seed in seeds {
            cells.push((n, seed));
        }
    }
    let mut rows: Vec<DeepInteriorRow> = cells
        .par_iter()
        .map(|&(n, seed)| -> Result<DeepInteriorRow> {
            let radius = erosion_radius(n, eps);
            let batch = uniform_sample(region, n, seed)?;
            let hull = build_hull(&batch.points, theta)?;
            let mask = hull.extremal_mask();
            let mut deep_count = 0usize;
            let mut deep_extremal = 0usize;
            for (p, &ext) in batch.points.iter().zip(mask) {
                if deep_interior(region, *p, radius, 64) {
                    deep_count += 1;
                    if ext {
                        deep_extremal += 1;
                    }
                }
            }
            Ok(DeepInteriorRow {
                n,
                seed,
                radius,
                deep_count,
                deep_extremal_count: deep_extremal,
                fraction: if deep_count == 0 {
                    0.0
                } else {
                    deep_extremal as f64 / deep_count as f64
                },
            })
        })
        .collect::<Result<_>>()?;
    rows.sort_by_key(|r| (r.n, r.seed));
    Ok(rows)
}

/// One cell of the convergence experiment.
#[derive(Clone, Debug)]
pub struct ConvergenceRow {
    pub n: usize,
    pub seed: u64,
    pub theta: f64,
    /// Discretized Hausdorff distance from the region to the sample.
    pub dh_sample: f64,
    /// Discretized Hausdorff distance between the hull and the region.
    pub dh_hull: f64,
    /// Monte Carlo symmetric-difference measure between hull and region.
    pub dmu: f64,
    /// `dh_hull / dh_sample`.
    pub ratio: f64,
}

/// Run the hull-estimation experiment against a region that is assumed to
/// be a fixed point of the hull at `theta` (the caller picks a biconvexity
/// angle, as with the benchmark region at a quarter-turn diagonal).
pub fn run_convergence(
    region: &Region,
    theta: f64,
    ns: &[usize],
    seeds: &[u64],
    h: f64,
    mc_n: usize,
) -> Result<Vec<ConvergenceRow>> {
    let mut cells: Vec<(usize, u64)> = Vec::new();
    for &n in ns {
        for &seed in seeds {
            cells.push((n, seed));
        }
    }
    let mut rows: Vec<ConvergenceRow> = cells
        .par_iter()
        .map(|&(n, seed)| convergence_cell(region, theta, n, seed, h, mc_n))
        .collect::<Result<_>>()?;
    rows.sort_by_key(|r| (r.n, r.seed));
    Ok(rows)
}

fn convergence_cell(
    region: &Region,
    theta: f64,
    n: usize,
    seed: u64,
    h: f64,
    mc_n: usize,
) -> Result<ConvergenceRow> {
    let batch = uniform_sample(region, n, seed)?;
    let hull = build_hull(&batch.points, theta)?;
    let dh_sample = hausdorff_region_points(region, &batch.points, h)?.value;
    let dh_hull = hausdorff_memberships(&hull, region, h)?.value;
    let window = region.bounding_box().union(&hull.window());
    let dmu = dmu_mc(&hull, region, window, mc_n, seed).value;
    Ok(ConvergenceRow {
        n,
        seed,
        theta,
        dh_sample,
        dh_hull,
        dmu,
        ratio: if dh_sample > 0.0 {
            dh_hull / dh_sample
        } else {
            f64::INFINITY
        },
    })
}

/// One cell of the baseline comparison.
#[derive(Clone, Debug)]
pub struct AlphaRow {
    pub n: usize,
    pub seed: u64,
    pub alpha: f64,
    /// Monte Carlo symmetric-difference measure between the alpha-hull and
    /// the region.
    pub dmu: f64,
}

/// Alpha-hull baseline over the same cells as [`run_convergence`].
pub fn run_alpha_baseline(
    region: &Region,
    alpha: f64,
    ns: &[usize],
    seeds: &[u64],
    mc_n: usize,
) -> Result<Vec<AlphaRow>> {
    let mut cells: Vec<(usize, u64)> = Vec::new();
    for &n in ns {
        for &seed in seeds {
            cells.push((n, seed));
        }
    }
    let mut rows: Vec<AlphaRow> = cells
        .par_iter()
        .map(|&(n, seed)| -> Result<AlphaRow> {
            let batch = uniform_sample(region, n, seed)?;
            let query = AlphaHullQuery::with_default_grid(batch.points, alpha)?;
            let window = region.bounding_box();
            let dmu = dmu_mc(&query, region, window, mc_n, seed).value;
            Ok(AlphaRow {
                n,
                seed,
                alpha,
                dmu,
            })
        })
        .collect::<Result<_>>()?;
    rows.sort_by_key(|r| (r.n, r.seed));
    Ok(rows)
}

/// Hull of a dense deterministic grid sample of the region, used as a stand-in
/// for the hull of the region itself at angles where the region is not a
/// fixed point; the mesh error folds into downstream tolerances.
pub fn dense_reference_hull(region: &Region, theta: f64, mesh: f64) -> Result<BiconvexHull> {
    assert!(mesh > 0.0, "mesh must be positive");
    let bbox = region.bounding_box();
    let nx = (bbox.width() / mesh).ceil() as usize + 1;
    let ny = (bbox.height() / mesh).ceil() as usize + 1;
    let mut pts = Vec::new();
    for j in 0..ny {
        for i in 0..nx {
            let p = Point2::new(
                bbox.min.x + i as f64 * mesh,
                bbox.min.y + j as f64 * mesh,
            );
            if region.contains(p) {
                pts.push(p);
            }
        }
    }
    build_hull(&pts, theta)
}

/// True iff the set `{j : psi[j] <= min psi + tol}` is a contiguous arc of
/// grid indices modulo the grid length (the angle grid is circular with
/// period a quarter turn).
pub fn near_minimal_set_is_arc(psi_values: &[f64], tol: f64) -> bool {
    let min = psi_values.iter().copied().fold(f64::INFINITY, f64::min);
    let k = psi_values.len();
    let in_set: Vec<bool> = psi_values.iter().map(|&v| v <= min + tol).collect();
    let transitions = (0..k)
        .filter(|&j| in_set[j] && !in_set[(j + 1) % k])
        .count();
    transitions <= 1
}
