//! Ground-truth support sets: a small constructive-solid-geometry model over
//! planar primitives, with membership, area, uniform rejection sampling, and
//! an erosion probe.
//!
//! Subtraction removes open interiors only, so boundaries are always
//! retained and a region whose holes lie strictly inside the base equals
//! the closure of its interior. A hole whose boundary runs along the base
//! boundary would leave a measure-zero filament there; model such sets as
//! unions of closed pieces instead (the shipped benchmark region does).

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Point2, Polygon, Rect, BOUNDARY_TOL};

const MAX_DEPTH: usize = 16;

/// Wire form of a region tree, matching the JSON schema.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum RegionNode {
    Rect {
        min: [f64; 2],
        max: [f64; 2],
    },
    Polygon {
        vertices: Vec<[f64; 2]>,
    },
    Triangle {
        vertices: [[f64; 2]; 3],
    },
    Disk {
        center: [f64; 2],
        radius: f64,
    },
    Union {
        items: Vec<RegionNode>,
    },
    Difference {
        a: Box<RegionNode>,
        b: Vec<RegionNode>,
    },
}

#[derive(Clone, Debug)]
enum Shape {
    Rect(Rect),
    Polygon(Polygon),
    Disk { center: Point2, radius: f64 },
    Union(Vec<Shape>),
    Difference { base: Box<Shape>, holes: Vec<Shape> },
}

impl Shape {
    fn from_node(node: &RegionNode, depth: usize) -> Result<Shape> {
        if depth > MAX_DEPTH {
            return Err(Error::InvalidRegion(format!(
                "tree deeper than {MAX_DEPTH} levels"
            )));
        }
        match node {
            RegionNode::Rect { min, max } => {
                let (min, max) = (Point2::from(*min), Point2::from(*max));
                if !(min.x.is_finite() && min.y.is_finite() && max.x.is_finite() && max.y.is_finite())
                {
                    return Err(Error::InvalidRegion("non-finite rect".into()));
                }
                if min.x >= max.x || min.y >= max.y {
                    return Err(Error::InvalidRegion("rect min must be below max".into()));
                }
                Ok(Shape::Rect(Rect::new(min, max)))
            }
            RegionNode::Polygon { vertices } => {
                let v: Vec<Point2> = vertices.iter().map(|&a| Point2::from(a)).collect();
                Ok(Shape::Polygon(Polygon::new(v)?))
            }
            RegionNode::Triangle { vertices } => {
                let v: Vec<Point2> = vertices.iter().map(|&a| Point2::from(a)).collect();
                Ok(Shape::Polygon(Polygon::new(v)?))
            }
            RegionNode::Disk { center, radius } => {
                if !radius.is_finite() || *radius <= 0.0 {
                    return Err(Error::InvalidRegion("disk radius must be positive".into()));
                }
                Ok(Shape::Disk {
                    center: Point2::from(*center),
                    radius: *radius,
                })
            }
            RegionNode::Union { items } => {
                if items.is_empty() {
                    return Err(Error::InvalidRegion("empty union".into()));
                }
                Ok(Shape::Union(
                    items
                        .iter()
                        .map(|n| Shape::from_node(n, depth + 1))
                        .collect::<Result<_>>()?,
                ))
            }
            RegionNode::Difference { a, b } => Ok(Shape::Difference {
                base: Box::new(Shape::from_node(a, depth + 1)?),
                holes: b
                    .iter()
                    .map(|n| Shape::from_node(n, depth + 1))
                    .collect::<Result<_>>()?,
            }),
        }
    }

    /// Closed membership: boundaries count as inside.
    fn contains(&self, p: Point2, tol: f64) -> bool {
        match self {
            Shape::Rect(r) => r.contains(p, tol),
            Shape::Polygon(poly) => poly.contains(p, tol),
            Shape::Disk { center, radius } => p.dist(*center) <= radius + tol,
            Shape::Union(items) => items.iter().any(|s| s.contains(p, tol)),
            Shape::Difference { base, holes } => {
                // Holes are removed as open sets: their boundary stays.
                base.contains(p, tol) && !holes.iter().any(|h| h.contains_strict(p, tol))
            }
        }
    }

    /// Open membership: interior points farther than `tol` from the boundary.
    fn contains_strict(&self, p: Point2, tol: f64) -> bool {
        match self {
            Shape::Rect(r) => r.contains_strict(p, tol),
            Shape::Polygon(poly) => poly.contains_strict(p, tol),
            Shape::Disk { center, radius } => p.dist(*center) < radius - tol,
            Shape::Union(items) => items.iter().any(|s| s.contains_strict(p, tol)),
            Shape::Difference { base, holes } => {
                base.contains_strict(p, tol) && !holes.iter().any(|h| h.contains(p, tol))
            }
        }
    }

    fn bounding_box(&self) -> Rect {
        match self {
            Shape::Rect(r) => *r,
            Shape::Polygon(poly) => poly.bounding_box(),
            Shape::Disk { center, radius } => Rect::new(
                Point2::new(center.x - radius, center.y - radius),
                Point2::new(center.x + radius, center.y + radius),
            ),
            Shape::Union(items) => {
                let mut acc = items[0].bounding_box();
                for s in &items[1..] {
                    acc = acc.union(&s.bounding_box());
                }
                acc
            }
            Shape::Difference { base, .. } => base.bounding_box(),
        }
    }
}

/// A validated region tree with a cached bounding box.
#[derive(Clone, Debug)]
pub struct Region {
    node: RegionNode,
    shape: Shape,
    bbox: Rect,
}

impl Region {
    pub fn new(node: RegionNode) -> Result<Region> {
        let shape = Shape::from_node(&node, 0)?;
        let bbox = shape.bounding_box();
        Ok(Region { node, shape, bbox })
    }

    pub fn from_json(text: &str) -> Result<Region> {
        let node: RegionNode = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        Region::new(node)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.node).expect("region serializes")
    }

    pub fn node(&self) -> &RegionNode {
        &self.node
    }

    pub fn bounding_box(&self) -> Rect {
        self.bbox
    }

    /// Closed membership with boundary tolerance [`BOUNDARY_TOL`]:
    /// subtracted pieces are removed as open sets.
    pub fn contains(&self, p: Point2) -> bool {
        self.shape.contains(p, BOUNDARY_TOL)
    }

    /// True iff `p` is within `delta` of the region (membership of the
    /// dilated set, probed on `k` circle points plus the center).
    pub fn contains_dilated(&self, p: Point2, delta: f64, k: usize) -> bool {
        if self.contains(p) {
            return true;
        }
        (0..k).any(|i| {
            let phi = 2.0 * std::f64::consts::PI * i as f64 / k as f64;
            self.contains(Point2::new(p.x + delta * phi.cos(), p.y + delta * phi.sin()))
        })
    }
}

/// Closed membership test for a region.
pub fn region_contains(r: &Region, p: Point2) -> bool {
    r.contains(p)
}

/// How an area value was obtained.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AreaMethod {
    Exact,
    MonteCarlo,
}

#[derive(Clone, Copy, Debug)]
pub struct AreaEstimate {
    pub value: f64,
    /// Standard error of the estimate; zero on the exact path.
    pub std_error: f64,
    pub method: AreaMethod,
}

fn exact_area(shape: &Shape) -> Option<f64> {
    match shape {
        Shape::Rect(r) => Some(r.area()),
        Shape::Polygon(p) => Some(p.area()),
        // Rect minus disjoint polygonal holes and unions of
        // disjoint-interior polygons have a shoelace shortcut; anything
        // else goes through Monte Carlo.
        Shape::Difference { base, holes } => {
            let Shape::Rect(r) = **base else { return None };
            let mut acc = r.area();
            for h in holes {
                match h {
                    Shape::Polygon(p) => acc -= p.area(),
                    _ => return None,
                }
            }
            Some(acc)
        }
        Shape::Union(items) => {
            let mut acc = 0.0;
            for s in items {
                match s {
                    Shape::Polygon(p) => acc += p.area(),
                    _ => return None,
                }
            }
            Some(acc)
        }
        _ => None,
    }
}

/// Region area: exact shoelace path when the tree is a rect, a polygon, or a
/// rect minus disjoint polygons; otherwise an unbiased Monte Carlo estimate
/// over the bounding box with its standard error.
pub fn region_area(r: &Region, mc_n: usize, seed: u64) -> AreaEstimate {
    if let Some(v) = exact_area(&r.shape) {
        return AreaEstimate {
            value: v,
            std_error: 0.0,
            method: AreaMethod::Exact,
        };
    }
    assert!(mc_n >= 1000, "Monte Carlo area needs at least 1000 points");
    let bbox = r.bbox;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for _ in 0..mc_n {
        let p = Point2::new(
            rng.random_range(bbox.min.x..=bbox.max.x),
            rng.random_range(bbox.min.y..=bbox.max.y),
        );
        if r.contains(p) {
            hits += 1;
        }
    }
    let frac = hits as f64 / mc_n as f64;
    AreaEstimate {
        value: bbox.area() * frac,
        std_error: bbox.area() * (frac * (1.0 - frac) / mc_n as f64).sqrt(),
        method: AreaMethod::MonteCarlo,
    }
}

/// A reproducible uniform sample of a region.
#[derive(Clone, Debug)]
pub struct SampleBatch {
    pub points: Vec<Point2>,
    pub seed: u64,
    /// Canonical JSON of the sampled region.
    pub region_id: String,
}

/// Uniform sample of `n` points by rejection from the bounding box.
/// Deterministic per seed; batches for different seeds are independent
/// streams and can be produced in parallel in any order.
pub fn uniform_sample(r: &Region, n: usize, seed: u64) -> Result<SampleBatch> {
    let bbox = r.bbox;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(n);
    let mut draws = 0u64;
    while points.len() < n {
        let p = Point2::new(
            rng.random_range(bbox.min.x..=bbox.max.x),
            rng.random_range(bbox.min.y..=bbox.max.y),
        );
        draws += 1;
        if r.contains(p) {
            points.push(p);
        }
        if draws.is_multiple_of(1_000_000) {
            let accepted = points.len() as u64;
            if (accepted as f64) < 1e-4 * draws as f64 {
                return Err(Error::RejectionStall { draws, accepted });
            }
        }
    }
    Ok(SampleBatch {
        points,
        seed,
        region_id: serde_json::to_string(&r.node).expect("region serializes"),
    })
}

/// Approximate erosion probe: true iff the center and `k` points on the
/// circle of radius `rho` around `p` all belong to the region. One-sided:
/// may accept a ball that pokes out between probes by at most the chord
/// sagitta at resolution `k`.
pub fn deep_interior(r: &Region, p: Point2, rho: f64, k: usize) -> bool {
    assert!(rho > 0.0, "erosion radius must be positive");
    assert!(k >= 16, "need at least 16 circle probes");
    if !r.contains(p) {
        return false;
    }
    (0..k).all(|i| {
        let phi = 2.0 * std::f64::consts::PI * i as f64 / k as f64;
        r.contains(Point2::new(p.x + rho * phi.cos(), p.y + rho * phi.sin()))
    })
}

/// The benchmark support set: the unit square with two open triangular
/// notches carved out from the top and bottom edges, leaving two closed side
/// triangles joined at the center. Every section along the two diagonal
/// directions is connected, and the set equals the closure of its interior.
///
/// Built as the union of the closed side triangles rather than a literal
/// square-minus-notches difference: the latter would also keep the top and
/// bottom square edges as zero-area filaments inside the notches, which
/// breaks the diagonal section property.
pub fn s5_region() -> Region {
    Region::new(RegionNode::Union {
        items: vec![
            RegionNode::Triangle {
                vertices: [[0.0, 0.0], [0.5, 0.5], [0.0, 1.0]],
            },
            RegionNode::Triangle {
                vertices: [[1.0, 0.0], [1.0, 1.0], [0.5, 0.5]],
            },
        ],
    })
    .expect("benchmark region is valid")
}

/// Unit square region.
pub fn unit_square_region() -> Region {
    Region::new(RegionNode::Rect {
        min: [0.0, 0.0],
        max: [1.0, 1.0],
    })
    .expect("unit square is valid")
}

/// Disk region.
pub fn disk_region(center: Point2, radius: f64) -> Region {
    Region::new(RegionNode::Disk {
        center: [center.x, center.y],
        radius,
    })
    .expect("disk is valid")
}
