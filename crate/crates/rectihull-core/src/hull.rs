//! Exact construction of the four-orientation rectilinear hull of a finite
//! point set at an arbitrary axis angle.
//!
//! Membership uses the dominance characterization: a point belongs to the
//! hull iff, in frame coordinates, some sample point closed-dominates it in
//! each of the four quadrant orientations. Equivalently, the hull is the
//! complement of the union of all open quadrants (in the four frame
//! orientations) containing no sample point. The equivalence of the two
//! forms is enforced by tests against the literal quadrant oracle rather
//! than assumed.
//!
//! The hull is stored as four monotone step envelopes over the distinct
//! frame abscissas, plus the vertical-slab decomposition they induce. All
//! comparisons are closed, so the hull is a closed set containing its
//! sample. Ties in rotated coordinates are kept exact; no coordinate
//! snapping is performed.

use crate::error::{Error, Result};
use crate::geom::{reduce_angle, Frame, Point2, Rect, BOUNDARY_TOL};

/// One of the four in-frame quadrant directions, counter-clockwise from
/// `(+,+)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `(+,+)`
    NorthEast,
    /// `(-,+)`
    NorthWest,
    /// `(-,-)`
    SouthWest,
    /// `(+,-)`
    SouthEast,
}

impl Orientation {
    pub const ALL: [Orientation; 4] = [
        Orientation::NorthEast,
        Orientation::NorthWest,
        Orientation::SouthWest,
        Orientation::SouthEast,
    ];

    pub fn index(self) -> usize {
        match self {
            Orientation::NorthEast => 0,
            Orientation::NorthWest => 1,
            Orientation::SouthWest => 2,
            Orientation::SouthEast => 3,
        }
    }

    /// Sign pattern `(sx, sy)` of the open quadrant this orientation spans.
    pub fn signs(self) -> (f64, f64) {
        match self {
            Orientation::NorthEast => (1.0, 1.0),
            Orientation::NorthWest => (-1.0, 1.0),
            Orientation::SouthWest => (-1.0, -1.0),
            Orientation::SouthEast => (1.0, -1.0),
        }
    }

    /// Upper envelopes bound the hull from above, lower ones from below.
    pub fn kind(self) -> EnvelopeKind {
        match self {
            Orientation::NorthEast | Orientation::NorthWest => EnvelopeKind::Upper,
            Orientation::SouthWest | Orientation::SouthEast => EnvelopeKind::Lower,
        }
    }

    /// Whether the envelope between breakpoints takes the value of the
    /// breakpoint on its right (`true`) or on its left (`false`). Follows
    /// from the closed `>=` / `<=` comparisons on the first coordinate.
    fn right_anchored(self) -> bool {
        matches!(self, Orientation::NorthEast | Orientation::SouthEast)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnvelopeKind {
    Upper,
    Lower,
}

/// Monotone piecewise-constant envelope of a point set in one orientation.
///
/// `values[i]` is the exact envelope value at `breakpoints[i]`: the extreme
/// second coordinate over all points whose first coordinate is `>=`
/// (right-anchored orientations) or `<=` (left-anchored) the breakpoint.
/// Between breakpoints the envelope is constant and equals the value of the
/// anchoring side, which makes the induced hull closed.
#[derive(Clone, Debug)]
pub struct StepEnvelope {
    orientation: Orientation,
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

impl StepEnvelope {
    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn kind(&self) -> EnvelopeKind {
        self.orientation.kind()
    }

    /// Strictly increasing abscissas (the distinct first coordinates of the
    /// input points).
    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// Envelope value at each breakpoint.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.breakpoints[0], *self.breakpoints.last().unwrap())
    }

    /// Envelope value at `x`, or `None` outside the domain.
    pub fn eval(&self, x: f64) -> Option<f64> {
        let (lo, hi) = self.domain();
        if x < lo || x > hi {
            return None;
        }
        let idx = if self.orientation.right_anchored() {
            // First breakpoint >= x.
            self.breakpoints.partition_point(|&b| b < x)
        } else {
            // Last breakpoint <= x.
            self.breakpoints.partition_point(|&b| b <= x) - 1
        };
        Some(self.values[idx])
    }

    /// True iff `p` (frame coordinates) lies on the envelope graph.
    pub fn on_envelope(&self, p: Point2) -> bool {
        self.eval(p.x) == Some(p.y)
    }
}

/// One vertical slab of the hull decomposition, in frame coordinates.
///
/// Consecutive slabs share endpoints; `upper < lower` marks an empty slab
/// between disconnected hull components.
#[derive(Clone, Copy, Debug)]
pub struct Slab {
    pub x_lo: f64,
    pub x_hi: f64,
    pub lower: f64,
    pub upper: f64,
}

impl Slab {
    pub fn area(&self) -> f64 {
        (self.x_hi - self.x_lo) * (self.upper - self.lower).max(0.0)
    }
}

/// A polyline in world coordinates; `closed` loops back to the first vertex.
#[derive(Clone, Debug)]
pub struct Polyline {
    pub points: Vec<Point2>,
    pub closed: bool,
}

/// The rectilinear hull of a point sample at a fixed axis angle.
#[derive(Clone, Debug)]
pub struct BiconvexHull {
    frame: Frame,
    points_world: Vec<Point2>,
    points_frame: Vec<Point2>,
    envelopes: [StepEnvelope; 4],
    slabs: Vec<Slab>,
    extremal: Vec<bool>,
}

/// Per-distinct-abscissa aggregates of the frame points.
struct Groups {
    /// Distinct abscissas, strictly increasing.
    xs: Vec<f64>,
    /// Max/min ordinate within each abscissa group.
    max_y: Vec<f64>,
    min_y: Vec<f64>,
    /// Group index of each input point.
    group_of: Vec<usize>,
}

fn group_by_x(points: &[Point2]) -> Groups {
    let n = points.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        points[a]
            .x
            .partial_cmp(&points[b].x)
            .unwrap()
            .then(points[a].y.partial_cmp(&points[b].y).unwrap())
    });
    let mut xs = Vec::new();
    let mut max_y = Vec::new();
    let mut min_y = Vec::new();
    let mut group_of = vec![0usize; n];
    for &i in &order {
        let p = points[i];
        if xs.last() != Some(&p.x) {
            xs.push(p.x);
            max_y.push(p.y);
            min_y.push(p.y);
        } else {
            let g = xs.len() - 1;
            max_y[g] = max_y[g].max(p.y);
            min_y[g] = min_y[g].min(p.y);
        }
        group_of[i] = xs.len() - 1;
    }
    Groups {
        xs,
        max_y,
        min_y,
        group_of,
    }
}

fn envelope_values(groups: &Groups, o: Orientation) -> Vec<f64> {
    let m = groups.xs.len();
    let mut v = vec![0.0; m];
    match o {
        Orientation::NorthEast => {
            // Suffix max of group maxima.
            let mut acc = f64::NEG_INFINITY;
            for i in (0..m).rev() {
                acc = acc.max(groups.max_y[i]);
                v[i] = acc;
            }
        }
        Orientation::NorthWest => {
            let mut acc = f64::NEG_INFINITY;
            for (slot, &y) in v.iter_mut().zip(&groups.max_y) {
                acc = acc.max(y);
                *slot = acc;
            }
        }
        Orientation::SouthWest => {
            let mut acc = f64::INFINITY;
            for (slot, &y) in v.iter_mut().zip(&groups.min_y) {
                acc = acc.min(y);
                *slot = acc;
            }
        }
        Orientation::SouthEast => {
            let mut acc = f64::INFINITY;
            for i in (0..m).rev() {
                acc = acc.min(groups.min_y[i]);
                v[i] = acc;
            }
        }
    }
    v
}

/// Dominance staircase of `points_in_frame` for one orientation.
///
/// The envelope equals the closed-dominance extremum of the second
/// coordinate as a function of the first; its graph passes through exactly
/// the orientation-maximal points.
pub fn pareto_staircase(points_in_frame: &[Point2], o: Orientation) -> Result<StepEnvelope> {
    if points_in_frame.is_empty() {
        return Err(Error::EmptySample);
    }
    let groups = group_by_x(points_in_frame);
    let values = envelope_values(&groups, o);
    Ok(StepEnvelope {
        orientation: o,
        breakpoints: groups.xs,
        values,
    })
}

fn extremal_mask(points_frame: &[Point2], groups: &Groups) -> Vec<bool> {
    let m = groups.xs.len();
    // Aggregates over groups strictly before / strictly after each group.
    let mut pre_max = vec![f64::NEG_INFINITY; m];
    let mut pre_min = vec![f64::INFINITY; m];
    let mut suf_max = vec![f64::NEG_INFINITY; m];
    let mut suf_min = vec![f64::INFINITY; m];
    for i in 1..m {
        pre_max[i] = pre_max[i - 1].max(groups.max_y[i - 1]);
        pre_min[i] = pre_min[i - 1].min(groups.min_y[i - 1]);
    }
    for i in (0..m - 1).rev() {
        suf_max[i] = suf_max[i + 1].max(groups.max_y[i + 1]);
        suf_min[i] = suf_min[i + 1].min(groups.min_y[i + 1]);
    }
    points_frame
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let g = groups.group_of[i];
            // Some open quadrant at p contains no sample point.
            suf_max[g] <= p.y      // north-east
                || pre_max[g] <= p.y // north-west
                || pre_min[g] >= p.y // south-west
                || suf_min[g] >= p.y // south-east
        })
        .collect()
}

/// Build the rectilinear hull of `points` at axis angle `theta` (reduced
/// modulo a quarter turn).
pub fn build_hull(points: &[Point2], theta: f64) -> Result<BiconvexHull> {
    if points.is_empty() {
        return Err(Error::EmptySample);
    }
    let frame = Frame::new(reduce_angle(theta));
    let points_world = points.to_vec();
    let points_frame: Vec<Point2> = points.iter().map(|&p| frame.into_frame(p)).collect();
    let groups = group_by_x(&points_frame);
    let envelopes = Orientation::ALL.map(|o| StepEnvelope {
        orientation: o,
        breakpoints: groups.xs.clone(),
        values: envelope_values(&groups, o),
    });
    let [ne, nw, sw, se] = &envelopes;
    let m = groups.xs.len();
    let mut slabs = Vec::with_capacity(m.saturating_sub(1));
    for j in 0..m.saturating_sub(1) {
        // Interval interiors take the anchored side of each envelope.
        slabs.push(Slab {
            x_lo: groups.xs[j],
            x_hi: groups.xs[j + 1],
            upper: ne.values[j + 1].min(nw.values[j]),
            lower: sw.values[j].max(se.values[j + 1]),
        });
    }
    let extremal = extremal_mask(&points_frame, &groups);
    Ok(BiconvexHull {
        frame,
        points_world,
        points_frame,
        envelopes,
        slabs,
        extremal,
    })
}

impl BiconvexHull {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn theta(&self) -> f64 {
        self.frame.theta()
    }

    pub fn points(&self) -> &[Point2] {
        &self.points_world
    }

    pub fn points_in_frame(&self) -> &[Point2] {
        &self.points_frame
    }

    pub fn envelopes(&self) -> &[StepEnvelope; 4] {
        &self.envelopes
    }

    pub fn envelope(&self, o: Orientation) -> &StepEnvelope {
        &self.envelopes[o.index()]
    }

    pub fn slabs(&self) -> &[Slab] {
        &self.slabs
    }

    pub fn extremal_mask(&self) -> &[bool] {
        &self.extremal
    }

    /// Input points that have at least one empty open quadrant; the
    /// complement is the inner subsample.
    pub fn extremal_points(&self) -> Vec<Point2> {
        self.points_world
            .iter()
            .zip(&self.extremal)
            .filter_map(|(&p, &e)| e.then_some(p))
            .collect()
    }

    fn breakpoints(&self) -> &[f64] {
        self.envelopes[0].breakpoints()
    }

    /// Vertical section `[lower, upper]` of the hull at frame abscissa `x`
    /// (which must lie in the domain). `upper < lower` means empty.
    fn section(&self, x: f64) -> (f64, f64) {
        let [ne, nw, sw, se] = &self.envelopes;
        let upper = ne.eval(x).unwrap().min(nw.eval(x).unwrap());
        let lower = sw.eval(x).unwrap().max(se.eval(x).unwrap());
        (lower, upper)
    }

    /// Closed membership with absolute boundary tolerance [`BOUNDARY_TOL`]
    /// in frame coordinates.
    pub fn contains(&self, p: Point2) -> bool {
        self.contains_tol(p, BOUNDARY_TOL)
    }

    pub fn contains_tol(&self, p: Point2, tol: f64) -> bool {
        let pf = self.frame.into_frame(p);
        let bp = self.breakpoints();
        let (lo, hi) = (bp[0], *bp.last().unwrap());
        if pf.x < lo - tol || pf.x > hi + tol {
            return false;
        }
        let passes = |x: f64| -> bool {
            let (l, u) = self.section(x);
            pf.y >= l - tol && pf.y <= u + tol
        };
        if passes(pf.x.clamp(lo, hi)) {
            return true;
        }
        // Sections at breakpoints contain the one-sided limits, so degenerate
        // spikes and endpoints are tested exactly.
        let a = bp.partition_point(|&b| b < pf.x - tol);
        let b = bp.partition_point(|&b| b <= pf.x + tol);
        (a..b).any(|i| passes(bp[i]))
    }

    /// Exact slab-sum area.
    pub fn area(&self) -> f64 {
        self.slabs.iter().map(Slab::area).sum()
    }

    /// Bounding box of the input points (the hull is contained in it).
    pub fn window(&self) -> Rect {
        Rect::bounding(&self.points_world).expect("hull is nonempty")
    }

    /// Hull boundary, one polyline per connected component, in world
    /// coordinates. Components with positive area are closed loops;
    /// degenerate components (segments, isolated points) are open.
    pub fn boundary(&self) -> Vec<Polyline> {
        let bp = self.breakpoints();
        let m = bp.len();
        let sections: Vec<(f64, f64)> = (0..m).map(|i| self.section(bp[i])).collect();
        // Classify with the boundary tolerance so that rotation round-off on
        // degenerate (collinear) inputs does not split components.
        let nonempty: Vec<bool> = self
            .slabs
            .iter()
            .map(|s| s.upper >= s.lower - BOUNDARY_TOL)
            .collect();

        let mut out = Vec::new();
        let mut emit = |pts: Vec<Point2>, closed: bool| {
            let mut world: Vec<Point2> = pts.iter().map(|&p| self.frame.out_of_frame(p)).collect();
            world.dedup_by(|a, b| a.dist(*b) <= BOUNDARY_TOL);
            if closed && world.len() > 1 && world.first() == world.last() {
                world.pop();
            }
            if world.len() == 1 {
                out.push(Polyline {
                    points: world,
                    closed: false,
                });
            } else {
                out.push(Polyline {
                    points: world,
                    closed,
                });
            }
        };

        let mut i = 0usize;
        while i < m {
            let starts_run = i < m - 1 && nonempty[i];
            if !starts_run {
                let attached_left = i > 0 && nonempty[i - 1];
                if !attached_left {
                    // Isolated breakpoint: vertical segment or a point.
                    let (lo, hi) = sections[i];
                    let mut pts = vec![Point2::new(bp[i], lo)];
                    if hi > lo {
                        pts.push(Point2::new(bp[i], hi));
                    }
                    emit(pts, false);
                }
                i += 1;
                continue;
            }
            // Maximal run of nonempty slabs [i, j).
            let mut j = i;
            while j < m - 1 && nonempty[j] {
                j += 1;
            }
            let slabs = &self.slabs[i..j];
            let positive_area = slabs.iter().any(|s| s.upper > s.lower + BOUNDARY_TOL);
            if positive_area {
                let mut pts = Vec::new();
                // Left edge, bottom to top.
                pts.push(Point2::new(bp[i], sections[i].0));
                pts.push(Point2::new(bp[i], sections[i].1));
                // Top chain, left to right.
                for (k, s) in slabs.iter().enumerate() {
                    pts.push(Point2::new(s.x_lo, s.upper));
                    pts.push(Point2::new(s.x_hi, s.upper));
                    let hi_next = slabs.get(k + 1).map(|t| t.upper);
                    let spike = sections[i + k + 1].1;
                    if spike > s.upper.max(hi_next.unwrap_or(f64::NEG_INFINITY)) {
                        pts.push(Point2::new(s.x_hi, spike));
                    }
                }
                // Right edge, top to bottom.
                pts.push(Point2::new(bp[j], sections[j].1));
                pts.push(Point2::new(bp[j], sections[j].0));
                // Bottom chain, right to left.
                for (k, s) in slabs.iter().enumerate().rev() {
                    pts.push(Point2::new(s.x_hi, s.lower));
                    pts.push(Point2::new(s.x_lo, s.lower));
                    let lo_prev = if k > 0 {
                        slabs[k - 1].lower
                    } else {
                        f64::INFINITY
                    };
                    let spike = sections[i + k].0;
                    if spike < s.lower.min(lo_prev) {
                        pts.push(Point2::new(s.x_lo, spike));
                    }
                }
                emit(pts, true);
            } else {
                // Zero-area run: single chain covering the degenerate slabs
                // and any vertical spikes at breakpoints.
                let mut pts = Vec::new();
                for (k, s) in slabs.iter().enumerate() {
                    let (lo, hi) = sections[i + k];
                    pts.push(Point2::new(s.x_lo, hi));
                    if hi > lo {
                        pts.push(Point2::new(s.x_lo, lo));
                    }
                    pts.push(Point2::new(s.x_lo, s.upper));
                    pts.push(Point2::new(s.x_hi, s.upper));
                }
                let (lo, hi) = sections[j];
                pts.push(Point2::new(bp[j], hi));
                if hi > lo {
                    pts.push(Point2::new(bp[j], lo));
                }
                emit(pts, false);
            }
            i = j + 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::naive_contains;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn pts(coords: &[(f64, f64)]) -> Vec<Point2> {
        coords.iter().map(|&(x, y)| Point2::new(x, y)).collect()
    }

    fn rect_corners() -> Vec<Point2> {
        pts(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0)])
    }

    fn l_shape() -> Vec<Point2> {
        pts(&[
            (0.0, 0.0),
            (2.0, 0.0),
            (2.0, 1.0),
            (1.0, 1.0),
            (1.0, 2.0),
            (0.0, 2.0),
        ])
    }

    /// Brute-force dominance maxima, used to pin the staircase examples.
    fn brute_maxima(points: &[Point2], o: Orientation) -> Vec<Point2> {
        let (sx, sy) = o.signs();
        points
            .iter()
            .filter(|p| {
                !points
                    .iter()
                    .any(|q| sx * (q.x - p.x) > 0.0 && sy * (q.y - p.y) > 0.0)
            })
            .copied()
            .collect()
    }

    #[test]
    fn staircase_three_points_ne() {
        let p = pts(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.5)]);
        let env = pareto_staircase(&p, Orientation::NorthEast).unwrap();
        assert_eq!(env.breakpoints(), &[0.0, 1.0, 2.0]);
        assert_eq!(env.eval(0.0), Some(1.0));
        assert_eq!(env.eval(0.7), Some(1.0));
        assert_eq!(env.eval(1.0), Some(1.0));
        assert_eq!(env.eval(1.2), Some(0.5));
        assert_eq!(env.eval(2.0), Some(0.5));
        assert_eq!(env.eval(2.1), None);
        let maxima: Vec<Point2> = p.iter().copied().filter(|&q| env.on_envelope(q)).collect();
        assert_eq!(maxima, pts(&[(1.0, 1.0), (2.0, 0.5)]));
        // Strong maxima per the brute-force dominance check: (0,0) is
        // dominated by (1,1), the other two dominate nothing mutually.
        assert_eq!(
            brute_maxima(&p, Orientation::NorthEast),
            pts(&[(1.0, 1.0), (2.0, 0.5)])
        );
    }

    #[test]
    fn staircase_single_point() {
        let p = pts(&[(3.0, 4.0)]);
        for o in Orientation::ALL {
            let env = pareto_staircase(&p, o).unwrap();
            assert_eq!(env.breakpoints(), &[3.0]);
            assert_eq!(env.eval(3.0), Some(4.0));
            assert_eq!(env.eval(2.9), None);
        }
    }

    #[test]
    fn staircase_rect_corners_ne_constant() {
        let env = pareto_staircase(&rect_corners(), Orientation::NorthEast).unwrap();
        assert_eq!(env.eval(0.0), Some(1.0));
        assert_eq!(env.eval(0.5), Some(1.0));
        assert_eq!(env.eval(1.0), Some(1.0));
    }

    #[test]
    fn staircase_empty_input() {
        assert!(matches!(
            pareto_staircase(&[], Orientation::NorthEast),
            Err(Error::EmptySample)
        ));
    }

    #[test]
    fn hull_rect_corners_is_unit_square() {
        let h = build_hull(&rect_corners(), 0.0).unwrap();
        assert!((h.area() - 1.0).abs() < 1e-15);
        assert!(h.contains(Point2::new(0.5, 0.5)));
        assert!(!h.contains(Point2::new(1.5, 0.5)));
        assert!(!h.contains(Point2::new(0.5, -0.2)));
        // Grid membership agrees with the quadrant oracle.
        for i in 0..=20 {
            for j in 0..=20 {
                let q = Point2::new(-0.2 + 0.07 * i as f64, -0.2 + 0.07 * j as f64);
                assert_eq!(
                    h.contains(q),
                    naive_contains(&rect_corners(), 0.0, q).unwrap(),
                    "disagreement at {q:?}"
                );
            }
        }
    }

    #[test]
    fn hull_two_point_diagonal_axis_aligned() {
        let p = pts(&[(0.0, 0.0), (1.0, 1.0)]);
        let h = build_hull(&p, 0.0).unwrap();
        assert_eq!(h.area(), 0.0);
        assert!(!h.contains(Point2::new(0.5, 0.5)));
        assert!(h.contains(Point2::new(0.0, 0.0)));
        assert!(h.contains(Point2::new(1.0, 1.0)));
    }

    #[test]
    fn hull_two_point_diagonal_rotated() {
        let p = pts(&[(0.0, 0.0), (1.0, 1.0)]);
        let h = build_hull(&p, FRAC_PI_4).unwrap();
        assert!(h.area().abs() < 1e-15);
        // The segment joining the points lies on the rotated first axis.
        assert!(h.contains(Point2::new(0.5, 0.5)));
        assert!(h.contains(Point2::new(0.25, 0.25)));
        assert!(!h.contains(Point2::new(0.5, 0.6)));
    }

    #[test]
    fn hull_l_shape_area() {
        let h = build_hull(&l_shape(), 0.0).unwrap();
        assert!((h.area() - 3.0).abs() < 1e-15);
        assert!(h.contains(Point2::new(0.5, 1.5)));
        assert!(!h.contains(Point2::new(1.5, 1.5)));
    }

    #[test]
    fn hull_contains_every_input_point() {
        let p = pts(&[(0.3, -0.2), (0.9, 0.4), (-0.5, 0.1), (0.0, 0.0)]);
        for theta in [0.0, 0.3, FRAC_PI_4, 1.5] {
            let h = build_hull(&p, theta).unwrap();
            for &q in &p {
                assert!(h.contains(q));
            }
        }
    }

    #[test]
    fn extremal_rect_corners_all() {
        let h = build_hull(&rect_corners(), 0.0).unwrap();
        assert!(h.extremal_mask().iter().all(|&e| e));
    }

    #[test]
    fn extremal_grid_center_inner() {
        let mut p = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                p.push(Point2::new(i as f64, j as f64));
            }
        }
        let h = build_hull(&p, 0.0).unwrap();
        let inner: Vec<Point2> = p
            .iter()
            .zip(h.extremal_mask())
            .filter_map(|(&q, &e)| (!e).then_some(q))
            .collect();
        assert_eq!(inner, vec![Point2::new(1.0, 1.0)]);
        assert_eq!(h.extremal_points().len(), 8);
    }

    #[test]
    fn extremal_single_point() {
        let h = build_hull(&pts(&[(0.2, 0.7)]), 0.3).unwrap();
        assert_eq!(h.extremal_mask(), &[true]);
    }

    #[test]
    fn boundary_rect_corners_closed_loop() {
        let h = build_hull(&rect_corners(), 0.0).unwrap();
        let b = h.boundary();
        assert_eq!(b.len(), 1);
        assert!(b[0].closed);
        let mut got = b[0].points.clone();
        got.sort_by(|a, b| a.x.partial_cmp(&b.x).unwrap().then(a.y.partial_cmp(&b.y).unwrap()));
        assert_eq!(
            got,
            pts(&[(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)])
        );
    }

    #[test]
    fn boundary_segment_open() {
        let h = build_hull(&pts(&[(0.0, 0.0), (1.0, 1.0)]), FRAC_PI_4).unwrap();
        let b = h.boundary();
        assert_eq!(b.len(), 1);
        assert!(!b[0].closed);
        assert_eq!(b[0].points.len(), 2);
        assert!(b[0].points[0].dist(Point2::new(0.0, 0.0)) < 1e-12);
        assert!(b[0].points[1].dist(Point2::new(1.0, 1.0)) < 1e-12);
    }

    #[test]
    fn boundary_single_point() {
        let h = build_hull(&pts(&[(0.5, -0.5)]), 0.2).unwrap();
        let b = h.boundary();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].points.len(), 1);
        assert!(b[0].points[0].dist(Point2::new(0.5, -0.5)) < 1e-12);
    }

    #[test]
    fn boundary_disconnected_components() {
        // Two distant clusters at theta 0 give two closed loops.
        let p = pts(&[
            (0.0, 0.0),
            (0.2, 0.2),
            (0.0, 0.2),
            (0.2, 0.0),
            (5.0, 5.0),
            (5.2, 5.2),
            (5.0, 5.2),
            (5.2, 5.0),
        ]);
        let h = build_hull(&p, 0.0).unwrap();
        let b = h.boundary();
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|pl| pl.closed));
        assert!(!h.contains(Point2::new(2.5, 2.5)));
        assert!((h.area() - 0.08).abs() < 1e-12);
    }

    #[test]
    fn boundary_covers_vertical_spike() {
        // Middle point sticks up from a flat hull.
        let p = pts(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]);
        let h = build_hull(&p, 0.0).unwrap();
        assert!(h.contains(Point2::new(1.0, 0.5)));
        assert!(!h.contains(Point2::new(0.5, 0.5)));
        let b = h.boundary();
        assert_eq!(b.len(), 1);
        let covers = |q: Point2| {
            b.iter().any(|pl| {
                pl.points.windows(2).any(|w| {
                    crate::geom::point_segment_dist(q, w[0], w[1]) < 1e-12
                }) || pl.points.iter().any(|&v| v.dist(q) < 1e-12)
            })
        };
        assert!(covers(Point2::new(1.0, 0.5)));
        assert!(covers(Point2::new(1.0, 1.0)));
        assert!(covers(Point2::new(0.5, 0.0)));
    }

    #[test]
    fn idempotent_under_interior_augmentation() {
        let p = pts(&[(0.0, 0.0), (1.0, 0.3), (0.4, 1.0), (0.9, 0.9), (0.1, 0.8)]);
        let h = build_hull(&p, 0.37).unwrap();
        let interior = Point2::new(0.45, 0.55);
        assert!(h.contains(interior));
        let mut p2 = p.clone();
        p2.push(interior);
        let h2 = build_hull(&p2, 0.37).unwrap();
        for i in 0..50 {
            for j in 0..50 {
                let q = Point2::new(-0.1 + 0.024 * i as f64, -0.1 + 0.024 * j as f64);
                assert_eq!(h.contains(q), h2.contains(q));
            }
        }
    }

    proptest! {
        #[test]
        fn envelopes_monotone_and_values_from_inputs(
            raw in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..40),
            theta in 0.0f64..FRAC_PI_2,
        ) {
            let p: Vec<Point2> = raw.iter().map(|&(x, y)| Point2::new(x, y)).collect();
            let h = build_hull(&p, theta).unwrap();
            let frame_ys: Vec<f64> = h.points_in_frame().iter().map(|q| q.y).collect();
            for env in h.envelopes() {
                let bp = env.breakpoints();
                prop_assert!(bp.windows(2).all(|w| w[0] < w[1]));
                for v in env.values() {
                    prop_assert!(frame_ys.contains(v));
                }
                let vals = env.values();
                match env.orientation() {
                    Orientation::NorthEast | Orientation::SouthWest =>
                        prop_assert!(vals.windows(2).all(|w| w[0] >= w[1])),
                    Orientation::NorthWest | Orientation::SouthEast =>
                        prop_assert!(vals.windows(2).all(|w| w[0] <= w[1])),
                }
            }
            // Area equals the slab sum and every input is a member.
            prop_assert!(h.area() >= 0.0);
            for &q in &p {
                prop_assert!(h.contains(q));
            }
        }

        #[test]
        fn membership_periodic_quarter_turn(
            raw in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..30),
            theta in 0.0f64..FRAC_PI_2,
            queries in proptest::collection::vec((-1.5f64..1.5, -1.5f64..1.5), 20),
        ) {
            let p: Vec<Point2> = raw.iter().map(|&(x, y)| Point2::new(x, y)).collect();
            let h0 = build_hull(&p, theta).unwrap();
            let h1 = build_hull(&p, theta + FRAC_PI_2).unwrap();
            prop_assert!((h0.area() - h1.area()).abs() < 1e-9);
            for &(x, y) in &queries {
                let q = Point2::new(x, y);
                // Identical up to the reduction rounding, which is far below
                // the membership tolerance.
                prop_assert_eq!(h0.contains_tol(q, 1e-7), h1.contains_tol(q, 1e-7));
            }
        }
    }
}
