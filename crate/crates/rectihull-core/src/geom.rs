//! Elementary planar geometry: points, rotation frames, rectangles, simple
//! polygons. Everything here is immutable after construction and shared by
//! the hull, region, and metric layers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used by boundary-inclusive membership predicates.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// A planar point with finite double-precision coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite(), "non-finite coordinate");
        Self { x, y }
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn dist_sq(self, other: Point2) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

impl From<[f64; 2]> for Point2 {
    fn from(a: [f64; 2]) -> Self {
        Point2::new(a[0], a[1])
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

/// Rotation frame for an axis angle `theta`: the first basis vector `b1` is
/// `e1` rotated counter-clockwise by `theta`, and `b2` is `b1` rotated by a
/// further quarter turn.
///
/// `into_frame` expresses a world point in `(b1, b2)` coordinates (a
/// clockwise rotation by `theta`); `out_of_frame` is its exact inverse.
#[derive(Clone, Copy, Debug)]
pub struct Frame {
    theta: f64,
    cos: f64,
    sin: f64,
}

impl Frame {
    /// Frame for the given angle, taken as-is (no reduction).
    pub fn new(theta: f64) -> Self {
        debug_assert!(theta.is_finite());
        Self {
            theta,
            cos: theta.cos(),
            sin: theta.sin(),
        }
    }

    /// Frame for `theta` reduced to the fundamental domain `[0, pi/2)`.
    pub fn reduced(theta: f64) -> Self {
        Self::new(reduce_angle(theta))
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// First axis direction (unit vector).
    pub fn b1(&self) -> Point2 {
        Point2::new(self.cos, self.sin)
    }

    /// Second axis direction, `b1` rotated counter-clockwise by a quarter turn.
    pub fn b2(&self) -> Point2 {
        Point2::new(-self.sin, self.cos)
    }

    /// Coordinates of `p` with respect to `(b1, b2)`.
    pub fn into_frame(&self, p: Point2) -> Point2 {
        Point2::new(
            p.x * self.cos + p.y * self.sin,
            -p.x * self.sin + p.y * self.cos,
        )
    }

    /// Inverse of [`Frame::into_frame`].
    pub fn out_of_frame(&self, p: Point2) -> Point2 {
        Point2::new(
            p.x * self.cos - p.y * self.sin,
            p.x * self.sin + p.y * self.cos,
        )
    }
}

/// Reduce an angle to `[0, pi/2)`, the period of the four-orientation hull.
pub fn reduce_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(std::f64::consts::FRAC_PI_2);
    // rem_euclid can return the modulus itself when the argument is a tiny
    // negative number.
    if t >= std::f64::consts::FRAC_PI_2 {
        0.0
    } else {
        t
    }
}

/// Closed axis-aligned rectangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub min: Point2,
    pub max: Point2,
}

impl Rect {
    pub fn new(min: Point2, max: Point2) -> Self {
        debug_assert!(min.x <= max.x && min.y <= max.y, "inverted rect");
        Self { min, max }
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        p.x >= self.min.x - tol
            && p.x <= self.max.x + tol
            && p.y >= self.min.y - tol
            && p.y <= self.max.y + tol
    }

    /// True if `p` is inside with margin at least `tol` on every side.
    pub fn contains_strict(&self, p: Point2, tol: f64) -> bool {
        p.x > self.min.x + tol
            && p.x < self.max.x - tol
            && p.y > self.min.y + tol
            && p.y < self.max.y - tol
    }

    pub fn inflate(&self, d: f64) -> Rect {
        Rect::new(
            Point2::new(self.min.x - d, self.min.y - d),
            Point2::new(self.max.x + d, self.max.y + d),
        )
    }

    pub fn union(&self, other: &Rect) -> Rect {
        Rect::new(
            Point2::new(self.min.x.min(other.min.x), self.min.y.min(other.min.y)),
            Point2::new(self.max.x.max(other.max.x), self.max.y.max(other.max.y)),
        )
    }

    /// Bounding box of a nonempty point slice.
    pub fn bounding(points: &[Point2]) -> Result<Rect> {
        if points.is_empty() {
            return Err(Error::EmptySample);
        }
        let mut min = points[0];
        let mut max = points[0];
        for p in &points[1..] {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        Ok(Rect::new(min, max))
    }
}

/// A simple polygon (no self-intersections), stored in either winding.
#[derive(Clone, Debug)]
pub struct Polygon {
    vertices: Vec<Point2>,
}

impl Polygon {
    /// Validates on construction: at least three vertices, no two consecutive
    /// vertices equal, no two non-adjacent edges intersecting.
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon(format!(
                "{} vertices, need at least 3",
                vertices.len()
            )));
        }
        for v in &vertices {
            if !v.x.is_finite() || !v.y.is_finite() {
                return Err(Error::InvalidPolygon("non-finite vertex".into()));
            }
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            if a.dist(b) < 1e-12 {
                return Err(Error::InvalidPolygon(format!(
                    "consecutive vertices {i} and {} coincide",
                    (i + 1) % n
                )));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                // Skip edges sharing a vertex.
                if j == i || (j + 1) % n == i || (i + 1) % n == j {
                    continue;
                }
                let (a, b) = (vertices[i], vertices[(i + 1) % n]);
                let (c, d) = (vertices[j], vertices[(j + 1) % n]);
                if segments_properly_intersect(a, b, c, d) {
                    return Err(Error::InvalidPolygon(format!(
                        "edges {i} and {j} intersect"
                    )));
                }
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    /// Absolute shoelace area.
    pub fn area(&self) -> f64 {
        let v = &self.vertices;
        let n = v.len();
        let mut acc = 0.0;
        for i in 0..n {
            let a = v[i];
            let b = v[(i + 1) % n];
            acc += a.x * b.y - b.x * a.y;
        }
        acc.abs() * 0.5
    }

    pub fn bounding_box(&self) -> Rect {
        Rect::bounding(&self.vertices).expect("polygon has vertices")
    }

    /// Distance from `p` to the polygon boundary.
    pub fn boundary_dist(&self, p: Point2) -> f64 {
        let v = &self.vertices;
        let n = v.len();
        let mut best = f64::INFINITY;
        for i in 0..n {
            best = best.min(point_segment_dist(p, v[i], v[(i + 1) % n]));
        }
        best
    }

    /// Crossing-parity interior test, with no boundary tolerance.
    fn crossing_inside(&self, p: Point2) -> bool {
        let v = &self.vertices;
        let n = v.len();
        let mut inside = false;
        for i in 0..n {
            let a = v[i];
            let b = v[(i + 1) % n];
            if (a.y > p.y) != (b.y > p.y) {
                let t = (p.y - a.y) / (b.y - a.y);
                let cx = a.x + t * (b.x - a.x);
                if p.x < cx {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Closed membership: interior points, and points within `tol` of the
    /// boundary, count as inside.
    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        self.crossing_inside(p) || self.boundary_dist(p) <= tol
    }

    /// Open membership: interior points farther than `tol` from the boundary.
    pub fn contains_strict(&self, p: Point2, tol: f64) -> bool {
        self.crossing_inside(p) && self.boundary_dist(p) > tol
    }
}

/// Coordinates of `p` with respect to the frame axes.
pub fn into_frame(p: Point2, f: &Frame) -> Point2 {
    f.into_frame(p)
}

/// Inverse of [`into_frame`].
pub fn out_of_frame(p: Point2, f: &Frame) -> Point2 {
    f.out_of_frame(p)
}

/// Absolute shoelace area of a polygon.
pub fn polygon_area(poly: &Polygon) -> f64 {
    poly.area()
}

/// True iff `p` lies inside `poly` or within [`BOUNDARY_TOL`] of its boundary.
pub fn point_in_polygon(p: Point2, poly: &Polygon) -> bool {
    poly.contains(p, BOUNDARY_TOL)
}

/// Distance from point `p` to segment `ab`.
pub fn point_segment_dist(p: Point2, a: Point2, b: Point2) -> f64 {
    let abx = b.x - a.x;
    let aby = b.y - a.y;
    let len_sq = abx * abx + aby * aby;
    if len_sq == 0.0 {
        return p.dist(a);
    }
    let t = (((p.x - a.x) * abx + (p.y - a.y) * aby) / len_sq).clamp(0.0, 1.0);
    p.dist(Point2::new(a.x + t * abx, a.y + t * aby))
}

fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Proper intersection of segments `ab` and `cd` (crossing interiors, or
/// collinear overlap of positive length).
fn segments_properly_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    // Collinear overlap check.
    let on = |p: Point2, q: Point2, r: Point2| -> bool {
        orient(p, q, r) == 0.0
            && r.x >= p.x.min(q.x)
            && r.x <= p.x.max(q.x)
            && r.y >= p.y.min(q.y)
            && r.y <= p.y.max(q.y)
    };
    (d1 == 0.0 && on(c, d, a)) && (d2 == 0.0 && on(c, d, b))
        || (d3 == 0.0 && on(a, b, c)) && (d4 == 0.0 && on(a, b, d))
}
