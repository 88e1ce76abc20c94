//! Quarter arcs and the closed polygons they generate under the Klein four-group
//! of coordinate half-turns.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::exact::{half_turn, segment_axis_hit, segments_meet_3d, Axis, AxisHit, Point3, Rational};

/// Default offset parameter used by the explicit constructions.
pub fn default_delta() -> Rational {
    Rational::new(1, 5)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuarterError {
    #[error("a quarter arc needs at least 2 vertices, got {0}")]
    TooShort(usize),
    #[error("first vertex {0} is not on the x- or y-axis away from the origin")]
    BadStart(Box<Point3>),
    #[error("last vertex {0} is not on the x- or y-axis away from the origin")]
    BadEnd(Box<Point3>),
    #[error("both endpoints lie on the {0}-axis")]
    SameAxis(Axis),
    #[error("interior vertex {index} at {point} lies on the {axis}-axis")]
    InteriorOnAxis {
        index: usize,
        point: Box<Point3>,
        axis: Axis,
    },
}

/// One fourth of a symmetric knot: an open polyline from a point on one
/// horizontal axis to a point on the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarterArc {
    name: String,
    delta: Rational,
    vertices: Vec<Point3>,
    start_axis: Axis,
    end_axis: Axis,
}

fn horizontal_axis_of(p: &Point3) -> Option<Axis> {
    if p.is_origin() {
        return None;
    }
    [Axis::X, Axis::Y].into_iter().find(|&a| p.on_axis(a))
}

impl QuarterArc {
    pub fn new(name: impl Into<String>, delta: Rational, vertices: Vec<Point3>) -> Result<Self, QuarterError> {
        if vertices.len() < 2 {
            return Err(QuarterError::TooShort(vertices.len()));
        }
        let first = &vertices[0];
        let last = &vertices[vertices.len() - 1];
        let start_axis = horizontal_axis_of(first).ok_or_else(|| QuarterError::BadStart(Box::new(first.clone())))?;
        let end_axis = horizontal_axis_of(last).ok_or_else(|| QuarterError::BadEnd(Box::new(last.clone())))?;
        if start_axis == end_axis {
            return Err(QuarterError::SameAxis(start_axis));
        }
        for (index, point) in vertices.iter().enumerate().take(vertices.len() - 1).skip(1) {
            if let Some(axis) = Axis::ALL.into_iter().find(|&a| point.on_axis(a)) {
                return Err(QuarterError::InteriorOnAxis {
                    index,
                    point: Box::new(point.clone()),
                    axis,
                });
            }
        }
        Ok(QuarterArc {
            name: name.into(),
            delta,
            vertices,
            start_axis,
            end_axis,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn start_axis(&self) -> Axis {
        self.start_axis
    }

    pub fn end_axis(&self) -> Axis {
        self.end_axis
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The same arc with every coordinate multiplied by `factor`.
    pub fn scaled(&self, factor: &Rational) -> Result<QuarterArc, QuarterError> {
        QuarterArc::new(
            self.name.clone(),
            &self.delta * factor,
            self.vertices.iter().map(|p| p.scale(factor)).collect(),
        )
    }
}

/// A closed polygon; vertex `i` is joined to vertex `i + 1 (mod n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotEmbedding {
    vertices: Vec<Point3>,
    source: Option<QuarterArc>,
}

impl KnotEmbedding {
    /// Wraps an arbitrary closed polygon; nothing is checked until validation.
    pub fn from_polygon(vertices: Vec<Point3>) -> Self {
        KnotEmbedding { vertices, source: None }
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn source(&self) -> Option<&QuarterArc> {
        self.source.as_ref()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn segment(&self, i: usize) -> (&Point3, &Point3) {
        let n = self.vertices.len();
        (&self.vertices[i % n], &self.vertices[(i + 1) % n])
    }
}

/// Glues the four images of a quarter arc into the closed symmetric polygon.
///
/// With endpoints `A` on axis `a` and `B` on axis `b` the traversal is
/// `Q`, then `rho_b(Q)` backwards, then `rho_z(Q)`, then `rho_a(Q)` backwards,
/// dropping the four shared endpoints. Collinear glue vertices are kept.
pub fn symmetrize(q: &QuarterArc) -> KnotEmbedding {
    let v = &q.vertices;
    let m = v.len() - 1;
    let mut out = Vec::with_capacity(4 * m);
    out.extend(v.iter().cloned());
    out.extend(v[..m].iter().rev().map(|p| half_turn(q.end_axis, p)));
    out.extend(v[1..].iter().map(|p| half_turn(Axis::Z, p)));
    out.extend(v[1..m].iter().rev().map(|p| half_turn(q.start_axis, p)));
    KnotEmbedding {
        vertices: out,
        source: Some(q.clone()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Violation {
    /// The polygon is not mapped onto itself by the half-turn about `axis`.
    Symmetry {
        axis: Axis,
    },
    /// Wrong number of meeting points with a coordinate axis; `found == None`
    /// means a segment runs along the axis.
    AxisCount {
        axis: Axis,
        found: Option<usize>,
        expected: usize,
    },
    SelfIntersection {
        first: usize,
        second: usize,
    },
    ZeroLengthEdge {
        segment: usize,
    },
    TooFewVertices {
        count: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Symmetry { axis } => write!(f, "symmetry: not invariant under the {axis}-axis half-turn"),
            Violation::AxisCount {
                axis,
                found: Some(n),
                expected,
            } => write!(
                f,
                "axis-count: meets the {axis}-axis in {n} points, expected {expected}"
            ),
            Violation::AxisCount { axis, found: None, .. } => {
                write!(f, "axis-count: a segment runs along the {axis}-axis")
            }
            Violation::SelfIntersection { first, second } => {
                write!(f, "self-intersection: segments {first} and {second} meet")
            }
            Violation::ZeroLengthEdge { segment } => write!(f, "zero-length-edge: segment {segment}"),
            Violation::TooFewVertices { count } => write!(f, "too-few-vertices: {count}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport {
            valid: violations.is_empty(),
            violations,
        }
    }
}

fn edge_set(vertices: &[Point3]) -> BTreeSet<(Point3, Point3)> {
    let n = vertices.len();
    (0..n)
        .map(|i| {
            let (a, b) = (vertices[i].clone(), vertices[(i + 1) % n].clone());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

/// Checks symmetry, axis meeting counts, embeddedness and edge lengths.
pub fn validate_embedding(k: &KnotEmbedding) -> ValidationReport {
    let v = &k.vertices;
    let n = v.len();
    if n < 3 {
        return ValidationReport::from_violations(vec![Violation::TooFewVertices { count: n }]);
    }
    let mut violations = Vec::new();

    let vertex_set: BTreeSet<&Point3> = v.iter().collect();
    let edges = edge_set(v);
    for axis in [Axis::X, Axis::Y] {
        let image: Vec<Point3> = v.iter().map(|p| half_turn(axis, p)).collect();
        let vertices_ok = image.iter().all(|p| vertex_set.contains(p));
        if !vertices_ok || edge_set(&image) != edges {
            violations.push(Violation::Symmetry { axis });
        }
    }

    for (axis, expected) in [(Axis::X, 2), (Axis::Y, 2), (Axis::Z, 0)] {
        let mut hits = BTreeSet::new();
        let mut contained = false;
        for i in 0..n {
            let (a, b) = k.segment(i);
            match segment_axis_hit(axis, a, b) {
                AxisHit::None => {}
                AxisHit::Point(p) => {
                    hits.insert(p);
                }
                AxisHit::Contained => contained = true,
            }
        }
        let found = if contained { None } else { Some(hits.len()) };
        if found != Some(expected) {
            violations.push(Violation::AxisCount { axis, found, expected });
        }
    }

    let mut degenerate = vec![false; n];
    for (i, flag) in degenerate.iter_mut().enumerate() {
        let (a, b) = k.segment(i);
        if a == b {
            *flag = true;
            violations.push(Violation::ZeroLengthEdge { segment: i });
        }
    }

    for i in 0..n {
        if degenerate[i] {
            continue;
        }
        let (a0, a1) = k.segment(i);
        for (j, &skip) in degenerate.iter().enumerate().skip(i + 1) {
            if skip {
                continue;
            }
            let (b0, b1) = k.segment(j);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let meets = if adjacent {
                // Consecutive segments may only share their common vertex, which
                // fails exactly when they fold back along one line.
                folds_back(a0, a1, b0, b1)
            } else {
                segments_meet_3d(a0, a1, b0, b1)
            };
            if meets {
                violations.push(Violation::SelfIntersection { first: i, second: j });
            }
        }
    }

    ValidationReport::from_violations(violations)
}

fn folds_back(a0: &Point3, a1: &Point3, b0: &Point3, b1: &Point3) -> bool {
    // Orient both segments away from the shared vertex.
    let (shared, p, q) = if a1 == b0 {
        (a1, a0, b1)
    } else if a0 == b1 {
        (a0, a1, b0)
    } else if a0 == b0 {
        (a0, a1, b1)
    } else {
        (a1, a0, b0)
    };
    let d = |t: &Point3| [&t.x - &shared.x, &t.y - &shared.y, &t.z - &shared.z];
    let (u, w) = (d(p), d(q));
    let cross_zero = (&u[1] * &w[2] - &u[2] * &w[1]).is_zero()
        && (&u[2] * &w[0] - &u[0] * &w[2]).is_zero()
        && (&u[0] * &w[1] - &u[1] * &w[0]).is_zero();
    let dot = &u[0] * &w[0] + &u[1] * &w[1] + &u[2] * &w[2];
    cross_zero && dot.is_positive()
}
