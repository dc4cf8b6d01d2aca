//! Slow reference implementations of hull membership and area.
//!
//! These exist to check the staircase engine against the literal
//! empty-quadrant definition of the hull. They deliberately share nothing
//! with the engine beyond [`Point2`] and [`Frame`]: membership is a plain
//! scan over the sample per orientation, the removed-region grid enumerates
//! quadrant vertices directly, and the area oracle counts grid cells.
//! Performance is explicitly a non-goal.

use crate::error::{Error, Result};
use crate::geom::{reduce_angle, Frame, Point2, Rect};

const SIGNS: [(f64, f64); 4] = [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)];

/// Literal membership test: `x` belongs to the hull iff in every one of the
/// four frame orientations some sample point closed-dominates it.
pub fn naive_contains(points: &[Point2], theta: f64, x: Point2) -> Result<bool> {
    if points.is_empty() {
        return Err(Error::EmptySample);
    }
    let frame = Frame::new(reduce_angle(theta));
    let q = frame.into_frame(x);
    let pf: Vec<Point2> = points.iter().map(|&p| frame.into_frame(p)).collect();
    for (sx, sy) in SIGNS {
        let dominated = pf
            .iter()
            .any(|a| sx * (a.x - q.x) >= 0.0 && sy * (a.y - q.y) >= 0.0);
        if !dominated {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Boolean grid over a window: cells whose vertex is covered by some empty
/// open quadrant with vertex on the same grid.
pub struct RemovedGrid {
    window: Rect,
    pitch: f64,
    nx: usize,
    ny: usize,
    removed: Vec<bool>,
}

impl RemovedGrid {
    pub fn window(&self) -> Rect {
        self.window
    }

    pub fn pitch(&self) -> f64 {
        self.pitch
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn vertex(&self, i: usize, j: usize) -> Point2 {
        Point2::new(
            self.window.min.x + i as f64 * self.pitch,
            self.window.min.y + j as f64 * self.pitch,
        )
    }

    pub fn is_removed(&self, i: usize, j: usize) -> bool {
        self.removed[j * self.nx + i]
    }
}

/// Mark every grid vertex covered by an empty open quadrant whose vertex
/// ranges over the same grid. The marked set approximates the complement of
/// the hull within the window as the pitch shrinks.
pub fn naive_vertex_grid_removed(
    points: &[Point2],
    theta: f64,
    window: Rect,
    h: f64,
) -> Result<RemovedGrid> {
    if points.is_empty() {
        return Err(Error::EmptySample);
    }
    assert!(h > 0.0, "grid pitch must be positive");
    let frame = Frame::new(reduce_angle(theta));
    let pf: Vec<Point2> = points.iter().map(|&p| frame.into_frame(p)).collect();
    let nx = (window.width() / h).ceil() as usize + 1;
    let ny = (window.height() / h).ceil() as usize + 1;
    let vertices: Vec<Point2> = (0..nx * ny)
        .map(|k| {
            let (i, j) = (k % nx, k / nx);
            frame.into_frame(Point2::new(
                window.min.x + i as f64 * h,
                window.min.y + j as f64 * h,
            ))
        })
        .collect();
    let mut removed = vec![false; nx * ny];
    for (sx, sy) in SIGNS {
        // Quadrant vertices whose open quadrant misses the sample, reduced to
        // coordinates where the quadrant opens toward (+,+).
        let mut empty: Vec<Point2> = vertices
            .iter()
            .filter(|v| {
                !pf.iter()
                    .any(|a| sx * (a.x - v.x) > 0.0 && sy * (a.y - v.y) > 0.0)
            })
            .map(|v| Point2::new(sx * v.x, sy * v.y))
            .collect();
        if empty.is_empty() {
            continue;
        }
        // A vertex is covered iff it strictly dominates some empty vertex;
        // a prefix-minimum over x-sorted empty vertices answers that.
        empty.sort_by(|a, b| a.x.partial_cmp(&b.x).unwrap());
        let xs: Vec<f64> = empty.iter().map(|p| p.x).collect();
        let mut prefix_min_y = vec![f64::INFINITY; xs.len()];
        let mut acc = f64::INFINITY;
        for (i, p) in empty.iter().enumerate() {
            acc = acc.min(p.y);
            prefix_min_y[i] = acc;
        }
        for (k, v) in vertices.iter().enumerate() {
            if removed[k] {
                continue;
            }
            let (vx, vy) = (sx * v.x, sy * v.y);
            let idx = xs.partition_point(|&x| x < vx);
            if idx > 0 && prefix_min_y[idx - 1] < vy {
                removed[k] = true;
            }
        }
    }
    Ok(RemovedGrid {
        window,
        pitch: h,
        nx,
        ny,
        removed,
    })
}

/// Grid-count area oracle: cell-center membership count times the cell area,
/// over the sample bounding box. The error is bounded by the pitch times the
/// hull boundary length.
pub fn naive_area_grid(points: &[Point2], theta: f64, h: f64) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::EmptySample);
    }
    assert!(h > 0.0, "grid pitch must be positive");
    let bbox = Rect::bounding(points)?;
    let nx = (bbox.width() / h).ceil().max(1.0) as usize;
    let ny = (bbox.height() / h).ceil().max(1.0) as usize;
    let frame = Frame::new(reduce_angle(theta));
    let pf: Vec<Point2> = points.iter().map(|&p| frame.into_frame(p)).collect();
    let mut count = 0usize;
    for j in 0..ny {
        for i in 0..nx {
            let c = frame.into_frame(Point2::new(
                bbox.min.x + (i as f64 + 0.5) * h,
                bbox.min.y + (j as f64 + 0.5) * h,
            ));
            let inside = SIGNS.iter().all(|&(sx, sy)| {
                pf.iter()
                    .any(|a| sx * (a.x - c.x) >= 0.0 && sy * (a.y - c.y) >= 0.0)
            });
            if inside {
                count += 1;
            }
        }
    }
    Ok(count as f64 * h * h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(coords: &[(f64, f64)]) -> Vec<Point2> {
        coords.iter().map(|&(x, y)| Point2::new(x, y)).collect()
    }

    fn rect_corners() -> Vec<Point2> {
        pts(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)])
    }

    #[test]
    fn contains_center_of_square() {
        assert!(naive_contains(&rect_corners(), 0.0, Point2::new(0.5, 0.5)).unwrap());
    }

    #[test]
    fn two_points_gap_not_member() {
        let p = pts(&[(0.0, 0.0), (1.0, 1.0)]);
        assert!(!naive_contains(&p, 0.0, Point2::new(0.5, 0.5)).unwrap());
    }

    #[test]
    fn sample_points_are_members() {
        let p = pts(&[(0.1, -0.4), (0.7, 0.2), (-0.3, 0.9)]);
        for theta in [0.0, 0.5, 1.2] {
            for &q in &p {
                assert!(naive_contains(&p, theta, q).unwrap());
            }
        }
    }

    #[test]
    fn empty_sample_is_error() {
        assert!(matches!(
            naive_contains(&[], 0.0, Point2::new(0.0, 0.0)),
            Err(Error::EmptySample)
        ));
    }

    #[test]
    fn removed_grid_spares_square_interior() {
        let window = Rect::new(Point2::new(-0.2, -0.2), Point2::new(1.2, 1.2));
        let grid = naive_vertex_grid_removed(&rect_corners(), 0.0, window, 0.05).unwrap();
        let (nx, ny) = grid.dims();
        for j in 0..ny {
            for i in 0..nx {
                let v = grid.vertex(i, j);
                let interior = v.x > 0.01 && v.x < 0.99 && v.y > 0.01 && v.y < 0.99;
                if interior {
                    assert!(!grid.is_removed(i, j), "interior vertex {v:?} marked removed");
                }
                let far_outside = v.x < -0.06 || v.x > 1.06 || v.y < -0.06 || v.y > 1.06;
                if far_outside {
                    assert!(grid.is_removed(i, j), "outside vertex {v:?} not removed");
                }
            }
        }
    }

    #[test]
    fn area_grid_unit_square() {
        let a = naive_area_grid(&rect_corners(), 0.0, 0.005).unwrap();
        assert!((a - 1.0).abs() < 0.02);
    }

    #[test]
    fn area_grid_two_point_degenerate() {
        let p = pts(&[(0.0, 0.0), (1.0, 1.0)]);
        let h = 0.01;
        let a = naive_area_grid(&p, 0.0, h).unwrap();
        assert!(a <= 2.0 * h * h * 200.0);
        assert!(a < 0.05);
    }

    #[test]
    fn area_grid_l_shape() {
        let p = pts(&[
            (0.0, 0.0),
            (2.0, 0.0),
            (2.0, 1.0),
            (1.0, 1.0),
            (1.0, 2.0),
            (0.0, 2.0),
        ]);
        let a = naive_area_grid(&p, 0.0, 0.005).unwrap();
        assert!((a - 3.0).abs() < 0.05);
    }
}
