//! Static SVG figures: sample points, hull boundary, extremal points, and an
//! optional region outline. Output is byte-deterministic for fixed inputs.

use std::fmt::Write as _;

use rectihull_core::hull::BiconvexHull;
use rectihull_core::{Point2, Rect};

const SIZE: f64 = 640.0;

pub struct Figure<'a> {
    pub hull: &'a BiconvexHull,
    /// Closed outline loops of the underlying region, if any.
    pub region_outline: Vec<Vec<Point2>>,
}

struct Mapper {
    min: Point2,
    scale: f64,
    max_y: f64,
}

impl Mapper {
    fn new(window: Rect) -> Self {
        let span = window.width().max(window.height()).max(1e-9);
        Self {
            min: window.min,
            scale: SIZE / span,
            max_y: window.max.y,
        }
    }

    fn map(&self, p: Point2) -> (f64, f64) {
        (
            (p.x - self.min.x) * self.scale,
            (self.max_y - p.y) * self.scale,
        )
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.4}")
}

fn path_points(m: &Mapper, pts: &[Point2]) -> String {
    let mut s = String::new();
    for (i, &p) in pts.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let (x, y) = m.map(p);
        let _ = write!(s, "{},{}", fmt(x), fmt(y));
    }
    s
}

pub fn render(fig: &Figure) -> String {
    let mut window = fig.hull.window();
    for outline in &fig.region_outline {
        if let Ok(r) = Rect::bounding(outline) {
            window = window.union(&r);
        }
    }
    let window = window.inflate(0.05 * window.width().max(window.height()).max(1.0));
    let m = Mapper::new(window);
    let w = fmt(window.width() * m.scale);
    let h = fmt(window.height() * m.scale);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(
        out,
        "  <rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"#ffffff\"/>"
    );
    for outline in &fig.region_outline {
        let _ = writeln!(
            out,
            "  <polygon points=\"{}\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1.5\"/>",
            path_points(&m, outline)
        );
    }
    for pl in fig.hull.boundary() {
        let tag = if pl.closed { "polygon" } else { "polyline" };
        let _ = writeln!(
            out,
            "  <{tag} points=\"{}\" fill=\"none\" stroke=\"#1f6fb4\" stroke-width=\"2\"/>",
            path_points(&m, &pl.points)
        );
    }
    let mask = fig.hull.extremal_mask();
    for (p, &extremal) in fig.hull.points().iter().zip(mask) {
        let (x, y) = m.map(*p);
        let (r, fill) = if extremal {
            ("3", "#c23b22")
        } else {
            ("2", "#444444")
        };
        let _ = writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"{fill}\"/>",
            fmt(x),
            fmt(y)
        );
    }
    out.push_str("</svg>\n");
    out
}
