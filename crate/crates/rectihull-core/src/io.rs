//! Wire formats: point CSV, hull JSON, angle-scan JSON, and experiment CSV.
//!
//! All real numbers are serialized with 17 significant digits so that values
//! round-trip exactly and output files are byte-stable across runs and
//! thread counts. CSV uses a `.` decimal separator, `,` field separator, and
//! Unix newlines.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::estimate::{AlphaRow, AngleScan, ConvergenceRow};
use crate::geom::{Frame, Point2, Rect};
use crate::hull::BiconvexHull;
use crate::metrics::SetMembership;

/// 17-significant-digit rendering; round-trips any finite f64.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

/// Parse a point list: one `x,y` pair per line. A first line that does not
/// parse as two reals is treated as a header; any later unparsable line is
/// an error carrying its 1-based line number.
pub fn parse_points_csv(text: &str) -> Result<Vec<Point2>> {
    let mut points = Vec::new();
    let mut data_seen = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        match parse_pair(line) {
            Some(p) => {
                data_seen = true;
                points.push(p);
            }
            None => {
                if idx == 0 && !data_seen {
                    continue; // header
                }
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("expected `x,y`, got {line:?}"),
                });
            }
        }
    }
    Ok(points)
}

fn parse_pair(line: &str) -> Option<Point2> {
    let mut it = line.split(',');
    let x: f64 = it.next()?.trim().parse().ok()?;
    let y: f64 = it.next()?.trim().parse().ok()?;
    if it.next().is_some() || !x.is_finite() || !y.is_finite() {
        return None;
    }
    Some(Point2::new(x, y))
}

pub fn write_points_csv(points: &[Point2]) -> String {
    let mut out = String::new();
    for p in points {
        let _ = writeln!(out, "{},{}", fmt_real(p.x), fmt_real(p.y));
    }
    out
}

/// Hull JSON: angle, exact area, the slab decomposition in frame
/// coordinates, boundary polylines in world coordinates (closed loops repeat
/// their first vertex), and the indices of extremal input points.
pub fn write_hull_json(hull: &BiconvexHull) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"theta\": {},", fmt_real(hull.theta()));
    let _ = writeln!(out, "  \"area\": {},", fmt_real(hull.area()));
    out.push_str("  \"slabs\": [");
    for (i, s) in hull.slabs().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "\n    {{\"x_lo\": {}, \"x_hi\": {}, \"lower\": {}, \"upper\": {}}}",
            fmt_real(s.x_lo),
            fmt_real(s.x_hi),
            fmt_real(s.lower),
            fmt_real(s.upper)
        );
    }
    out.push_str(if hull.slabs().is_empty() { "],\n" } else { "\n  ],\n" });
    out.push_str("  \"boundary\": [");
    let boundary = hull.boundary();
    for (i, pl) in boundary.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str("\n    [");
        let mut first = true;
        let mut emit = |p: Point2, out: &mut String| {
            if !first {
                out.push_str(", ");
            }
            first = false;
            let _ = write!(out, "[{}, {}]", fmt_real(p.x), fmt_real(p.y));
        };
        for &p in &pl.points {
            emit(p, &mut out);
        }
        if pl.closed && pl.points.len() > 1 {
            emit(pl.points[0], &mut out);
        }
        out.push(']');
    }
    out.push_str(if boundary.is_empty() { "],\n" } else { "\n  ],\n" });
    out.push_str("  \"extremal\": [");
    let mut first = true;
    for (i, &e) in hull.extremal_mask().iter().enumerate() {
        if e {
            if !first {
                out.push_str(", ");
            }
            first = false;
            let _ = write!(out, "{i}");
        }
    }
    out.push_str("]\n}\n");
    out
}

/// Membership view of a hull JSON file: the slab decomposition plus the
/// frame angle. Zero-width degenerate features (isolated points, vertical
/// spikes) are not representable by slabs and are dropped; they have measure
/// zero.
pub struct HullJsonMembership {
    frame: Frame,
    slabs: Vec<(f64, f64, f64, f64)>,
    window: Rect,
}

impl HullJsonMembership {
    pub fn from_json(text: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        let bad = |msg: &str| Error::Parse {
            line: 0,
            msg: msg.to_string(),
        };
        let theta = v
            .get("theta")
            .and_then(|t| t.as_f64())
            .ok_or_else(|| bad("missing theta"))?;
        let slabs_json = v
            .get("slabs")
            .and_then(|s| s.as_array())
            .ok_or_else(|| bad("missing slabs"))?;
        let mut slabs = Vec::with_capacity(slabs_json.len());
        for s in slabs_json {
            let f = |k: &str| -> Result<f64> {
                s.get(k)
                    .and_then(|x| x.as_f64())
                    .ok_or_else(|| bad(&format!("slab missing {k}")))
            };
            slabs.push((f("x_lo")?, f("x_hi")?, f("lower")?, f("upper")?));
        }
        let frame = Frame::new(theta);
        // World window from the frame-space slab corners.
        let mut corners = Vec::new();
        for &(x_lo, x_hi, lower, upper) in &slabs {
            if upper < lower {
                continue;
            }
            for (x, y) in [
                (x_lo, lower),
                (x_lo, upper),
                (x_hi, lower),
                (x_hi, upper),
            ] {
                corners.push(frame.out_of_frame(Point2::new(x, y)));
            }
        }
        if corners.is_empty() {
            // Fall back to boundary vertices for degenerate hulls.
            if let Some(polylines) = v.get("boundary").and_then(|b| b.as_array()) {
                for pl in polylines {
                    for p in pl.as_array().into_iter().flatten() {
                        let xy = p.as_array().ok_or_else(|| bad("bad boundary point"))?;
                        if xy.len() == 2 {
                            if let (Some(x), Some(y)) = (xy[0].as_f64(), xy[1].as_f64()) {
                                corners.push(Point2::new(x, y));
                            }
                        }
                    }
                }
            }
        }
        let window = Rect::bounding(&corners).map_err(|_| bad("hull has no extent"))?;
        Ok(Self {
            frame,
            slabs,
            window,
        })
    }
}

impl SetMembership for HullJsonMembership {
    fn window(&self) -> Rect {
        self.window
    }

    fn contains_point(&self, p: Point2) -> bool {
        let q = self.frame.into_frame(p);
        let tol = crate::geom::BOUNDARY_TOL;
        self.slabs.iter().any(|&(x_lo, x_hi, lower, upper)| {
            q.x >= x_lo - tol && q.x <= x_hi + tol && q.y >= lower - tol && q.y <= upper + tol
        })
    }
}

/// Angle-scan JSON: the grid, the area curve, the grid argmin, and the
/// refined angle when requested (`null` otherwise).
pub fn write_angle_scan_json(scan: &AngleScan) -> String {
    let list = |xs: &[f64]| -> String {
        let mut s = String::from("[");
        for (i, &x) in xs.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            s.push_str(&fmt_real(x));
        }
        s.push(']');
        s
    };
    let refined = match scan.refined_theta {
        Some(t) => fmt_real(t),
        None => "null".to_string(),
    };
    format!(
        "{{\n  \"thetas\": {},\n  \"psi\": {},\n  \"argmin\": {},\n  \"refined\": {}\n}}\n",
        list(&scan.thetas),
        list(&scan.psi),
        fmt_real(scan.argmin_theta),
        refined
    )
}

pub const CONVERGENCE_CSV_HEADER: &str = "n,seed,theta,dh_sample,dh_hull,dmu,ratio";

pub fn write_convergence_csv(rows: &[ConvergenceRow]) -> String {
    let mut out = String::from(CONVERGENCE_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n,
            r.seed,
            fmt_real(r.theta),
            fmt_real(r.dh_sample),
            fmt_real(r.dh_hull),
            fmt_real(r.dmu),
            fmt_real(r.ratio)
        );
    }
    out
}

pub const ALPHA_CSV_HEADER: &str = "n,seed,alpha,dmu";

pub fn write_alpha_csv(rows: &[AlphaRow]) -> String {
    let mut out = String::from(ALPHA_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.n,
            r.seed,
            fmt_real(r.alpha),
            fmt_real(r.dmu)
        );
    }
    out
}
