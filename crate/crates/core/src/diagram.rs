//! Coordinate-axis projections of a validated embedding: general-position
//! checks, crossings with over/under data, and diagram codes.
//!
//! Consecutive segments whose projections continue in the same direction are
//! merged into one passage before pairs are classified, so straight glue
//! vertices never show up as incidences. The only tolerated vertex incidence
//! is a transverse two-strand meeting at the origin of an intravergent
//! projection.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{
    classify_intersection, crossing_side, project, rays_alternate, Axis, Classification, End, Point2, Point2WithDepth,
    Rational, Segment2, Vec2,
};
use crate::invariants::PdCode;
use crate::polygon::{validate_embedding, KnotEmbedding, Violation};

/// Position on the polygon: segment index and parameter in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Locus {
    pub segment: usize,
    pub t: Rational,
}

impl Locus {
    pub fn vertex(index: usize) -> Self {
        Locus {
            segment: index,
            t: Rational::zero(),
        }
    }

    pub fn is_vertex(&self) -> bool {
        self.t.is_zero()
    }
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}", self.segment, self.t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub position: Point2,
    pub over: Locus,
    pub under: Locus,
    pub over_depth: Rational,
    pub under_depth: Rational,
    pub is_central: bool,
    /// Crossing sign for a viewer on the positive side of the projection axis.
    pub sign: i32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub axis: Axis,
    /// Ordered by first encounter when traversing the polygon from vertex 0.
    pub crossings: Vec<Crossing>,
    pub pd_code: PdCode,
    /// `+i` for passing over crossing `i` (1-based), `-i` for passing under.
    pub gauss_code: Vec<i64>,
    pub crossing_count: usize,
}

impl Diagram {
    pub fn central_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.is_central).count()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Gauss code as space-separated signed integers, with crossing signs appended.
    pub fn gauss_text(&self) -> String {
        let seq: Vec<String> = self.gauss_code.iter().map(|g| g.to_string()).collect();
        let signs: Vec<&str> = self
            .crossings
            .iter()
            .map(|c| if c.sign > 0 { "+" } else { "-" })
            .collect();
        format!("{} / {}", seq.join(" "), signs.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneralPositionKind {
    /// A segment is parallel to the projection axis.
    DegenerateSegment,
    CollinearOverlap,
    /// Three or more strand passages through one point.
    MultiplePoint,
    /// A vertex lands on another strand away from the sanctioned centre.
    VertexIncidence,
    /// Two strands touch or are tangent instead of crossing.
    Tangency,
    EqualDepth,
    /// Something projects to the origin of the transvergent projection.
    CentralOnTransvergent,
}

impl fmt::Display for GeneralPositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneralPositionKind::DegenerateSegment => "segment projects to a point",
            GeneralPositionKind::CollinearOverlap => "collinear overlap",
            GeneralPositionKind::MultiplePoint => "three or more strands meet",
            GeneralPositionKind::VertexIncidence => "vertex on another strand",
            GeneralPositionKind::Tangency => "strands touch without crossing",
            GeneralPositionKind::EqualDepth => "crossing strands at equal depth",
            GeneralPositionKind::CentralOnTransvergent => "strand through the transvergent centre",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("invalid embedding: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidEmbedding(Vec<Violation>),
    #[error("general-position violation in the {axis}-projection: {kind}{}", gp_detail(.at, .segments))]
    GeneralPosition {
        axis: Axis,
        kind: GeneralPositionKind,
        at: Option<Box<Point2>>,
        segments: Vec<usize>,
    },
}

fn gp_detail(at: &Option<Box<Point2>>, segments: &[usize]) -> String {
    let mut out = String::new();
    if let Some(p) = at {
        out.push_str(&format!(" at {p}"));
    }
    if !segments.is_empty() {
        let list: Vec<String> = segments.iter().map(|s| s.to_string()).collect();
        out.push_str(&format!(" (segments {})", list.join(", ")));
    }
    out
}

/// Maximal run of consecutive segments with codirectional projections.
#[derive(Debug, Clone)]
struct Passage {
    first_segment: usize,
    len: usize,
    seg: Segment2,
    dir: Vec2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Strand {
    /// Interior point of passage `k`.
    Interior(usize),
    /// The vertex where passage `k` starts.
    Vertex(usize),
}

struct Projection<'a> {
    axis: Axis,
    n: usize,
    points: Vec<Point2WithDepth>,
    planar: Vec<Point2>,
    passages: Vec<Passage>,
    embedding: &'a KnotEmbedding,
}

impl<'a> Projection<'a> {
    fn gp_error(&self, kind: GeneralPositionKind, at: Option<Point2>, segments: Vec<usize>) -> DiagramError {
        DiagramError::GeneralPosition {
            axis: self.axis,
            kind,
            at: at.map(Box::new),
            segments,
        }
    }

    fn build(embedding: &'a KnotEmbedding, axis: Axis) -> Result<Self, DiagramError> {
        let n = embedding.len();
        let points: Vec<Point2WithDepth> = embedding.vertices().iter().map(|p| project(axis, p)).collect();
        let planar: Vec<Point2> = points.iter().map(|p| p.point()).collect();
        let mut proj = Projection {
            axis,
            n,
            points,
            planar,
            passages: Vec::new(),
            embedding,
        };
        let dirs: Vec<Vec2> = (0..n).map(|i| proj.planar[i].to(&proj.planar[(i + 1) % n])).collect();
        if let Some(i) = dirs.iter().position(|d| d.is_zero()) {
            return Err(proj.gp_error(
                GeneralPositionKind::DegenerateSegment,
                Some(proj.planar[i].clone()),
                vec![i],
            ));
        }
        let start = (0..n)
            .find(|&i| !dirs[(i + n - 1) % n].codirectional(&dirs[i]))
            .ok_or_else(|| proj.gp_error(GeneralPositionKind::CollinearOverlap, None, vec![]))?;
        let mut passages: Vec<Passage> = Vec::new();
        for step in 0..n {
            let i = (start + step) % n;
            match passages.last_mut() {
                Some(last) if last.dir.codirectional(&dirs[i]) => {
                    last.len += 1;
                    last.seg.b = proj.planar[(i + 1) % n].clone();
                }
                _ => passages.push(Passage {
                    first_segment: i,
                    len: 1,
                    seg: Segment2::new(proj.planar[i].clone(), proj.planar[(i + 1) % n].clone()),
                    dir: dirs[i].clone(),
                }),
            }
        }
        if passages.len() < 3 {
            return Err(proj.gp_error(GeneralPositionKind::CollinearOverlap, None, vec![]));
        }
        proj.passages = passages;
        Ok(proj)
    }

    fn segments_of(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        let p = &self.passages[k];
        (0..p.len).map(move |j| (p.first_segment + j) % self.n)
    }

    fn strand_of(&self, k: usize, end: Option<End>) -> Strand {
        match end {
            None => Strand::Interior(k),
            Some(End::Start) => Strand::Vertex(k),
            Some(End::End) => Strand::Vertex((k + 1) % self.passages.len()),
        }
    }

    fn strand_dirs(&self, s: Strand) -> (Vec2, Vec2) {
        match s {
            Strand::Interior(k) => (self.passages[k].dir.clone(), self.passages[k].dir.clone()),
            Strand::Vertex(k) => {
                let m = self.passages.len();
                (self.passages[(k + m - 1) % m].dir.clone(), self.passages[k].dir.clone())
            }
        }
    }

    /// Locus and depth of strand `s` at planar point `p`.
    fn locate(&self, s: Strand, p: &Point2) -> (Locus, Rational) {
        match s {
            Strand::Vertex(k) => {
                let v = self.passages[k].first_segment;
                (Locus::vertex(v), self.points[v].depth.clone())
            }
            Strand::Interior(k) => {
                for i in self.segments_of(k) {
                    let j = (i + 1) % self.n;
                    let d = self.planar[i].to(&self.planar[j]);
                    let t = self.planar[i].to(p).dot(&d) / d.dot(&d);
                    if !t.is_negative() && t < Rational::one() {
                        let depth = &self.points[i].depth + &(&(&self.points[j].depth - &self.points[i].depth) * &t);
                        return (Locus { segment: i, t }, depth);
                    }
                }
                unreachable!("point {p:?} not inside passage {k}")
            }
        }
    }

    fn passage_segments(&self, strands: &[Strand]) -> Vec<usize> {
        let mut out: Vec<usize> = strands
            .iter()
            .flat_map(|&s| match s {
                Strand::Interior(k) => self.segments_of(k).collect::<Vec<_>>(),
                Strand::Vertex(k) => vec![self.passages[k].first_segment],
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn crossings(&self) -> Result<Vec<Crossing>, DiagramError> {
        let m = self.passages.len();
        let mut incidences: BTreeMap<Point2, BTreeSet<Strand>> = BTreeMap::new();
        for i in 0..m {
            for j in i + 1..m {
                let class = classify_intersection(&self.passages[i].seg, &self.passages[j].seg);
                let adjacent = j == i + 1 || (i == 0 && j == m - 1);
                if adjacent {
                    let shared_only = match &class {
                        Classification::EndpointIncidence { first, second, .. } => {
                            if j == i + 1 {
                                *first == Some(End::End) && *second == Some(End::Start)
                            } else {
                                *first == Some(End::Start) && *second == Some(End::End)
                            }
                        }
                        _ => false,
                    };
                    if !shared_only {
                        let mut segs: Vec<usize> = self.segments_of(i).chain(self.segments_of(j)).collect();
                        segs.sort_unstable();
                        return Err(self.gp_error(GeneralPositionKind::CollinearOverlap, None, segs));
                    }
                    continue;
                }
                match class {
                    Classification::Disjoint => {}
                    Classification::CollinearOverlap => {
                        let mut segs: Vec<usize> = self.segments_of(i).chain(self.segments_of(j)).collect();
                        segs.sort_unstable();
                        return Err(self.gp_error(GeneralPositionKind::CollinearOverlap, None, segs));
                    }
                    Classification::TransverseInterior(p) => {
                        let entry = incidences.entry(p).or_default();
                        entry.insert(Strand::Interior(i));
                        entry.insert(Strand::Interior(j));
                    }
                    Classification::EndpointIncidence { point, first, second } => {
                        let entry = incidences.entry(point).or_default();
                        entry.insert(self.strand_of(i, first));
                        entry.insert(self.strand_of(j, second));
                    }
                }
            }
        }

        let mut crossings = Vec::with_capacity(incidences.len());
        for (p, strands) in incidences {
            let strands: Vec<Strand> = strands.into_iter().collect();
            let segs = || self.passage_segments(&strands);
            if strands.len() != 2 {
                return Err(self.gp_error(GeneralPositionKind::MultiplePoint, Some(p.clone()), segs()));
            }
            let at_origin = p.is_origin();
            if at_origin && !self.axis.is_intravergent() {
                return Err(self.gp_error(GeneralPositionKind::CentralOnTransvergent, Some(p.clone()), segs()));
            }
            let has_vertex = strands.iter().any(|s| matches!(s, Strand::Vertex(_)));
            if has_vertex && !at_origin {
                return Err(self.gp_error(GeneralPositionKind::VertexIncidence, Some(p.clone()), segs()));
            }
            let (in1, out1) = self.strand_dirs(strands[0]);
            let (in2, out2) = self.strand_dirs(strands[1]);
            if has_vertex && rays_alternate(&in1, &out1, &in2, &out2) != Ok(true) {
                return Err(self.gp_error(GeneralPositionKind::Tangency, Some(p.clone()), segs()));
            }
            let (locus1, depth1) = self.locate(strands[0], &p);
            let (locus2, depth2) = self.locate(strands[1], &p);
            if depth1 == depth2 {
                return Err(self.gp_error(GeneralPositionKind::EqualDepth, Some(p.clone()), segs()));
            }
            let first_over = depth1 > depth2;
            let (over, under) = if first_over {
                ((locus1, depth1, &in1, &out1), (locus2, depth2, &in2, &out2))
            } else {
                ((locus2, depth2, &in2, &out2), (locus1, depth1, &in1, &out1))
            };
            let sign = self.axis.viewer_orientation() * crossing_side(over.2, over.3, under.3);
            crossings.push(Crossing {
                position: p,
                over: over.0,
                under: under.0,
                over_depth: over.1,
                under_depth: under.1,
                is_central: at_origin,
                sign,
            });
        }
        debug_assert!(self.embedding.len() == self.n);
        Ok(crossings)
    }
}

/// Orders crossings by first encounter and derives the PD and Gauss codes.
fn assemble(axis: Axis, crossings: Vec<Crossing>) -> Diagram {
    let mut events: Vec<(&Locus, usize, bool)> = Vec::with_capacity(2 * crossings.len());
    for (i, c) in crossings.iter().enumerate() {
        events.push((&c.over, i, true));
        events.push((&c.under, i, false));
    }
    events.sort();
    let mut rank = vec![usize::MAX; crossings.len()];
    let mut order = Vec::with_capacity(crossings.len());
    for &(_, i, _) in &events {
        if rank[i] == usize::MAX {
            rank[i] = order.len();
            order.push(i);
        }
    }
    let total = events.len();
    // Event j is entered by arc j + 1 and left by arc j + 2 (arc 1 after the last).
    let mut arcs = vec![[0usize; 4]; crossings.len()]; // [under_in, under_out, over_in, over_out]
    let mut gauss = Vec::with_capacity(total);
    for (j, &(_, i, over)) in events.iter().enumerate() {
        let incoming = j + 1;
        let outgoing = (j + 1) % total + 1;
        let slot = &mut arcs[rank[i]];
        if over {
            slot[2] = incoming;
            slot[3] = outgoing;
        } else {
            slot[0] = incoming;
            slot[1] = outgoing;
        }
        let id = rank[i] as i64 + 1;
        gauss.push(if over { id } else { -id });
    }
    let mut ordered: Vec<Option<Crossing>> = crossings.into_iter().map(Some).collect();
    let crossings: Vec<Crossing> = order.iter().map(|&i| ordered[i].take().unwrap()).collect();
    let pd = crossings
        .iter()
        .zip(&arcs)
        .map(|(c, &[ui, uo, oi, oo])| if c.sign < 0 { [ui, oi, uo, oo] } else { [ui, oo, uo, oi] })
        .collect();
    Diagram {
        axis,
        crossing_count: crossings.len(),
        crossings,
        pd_code: PdCode::new(pd),
        gauss_code: gauss,
    }
}

pub(crate) fn diagram_unchecked(k: &KnotEmbedding, axis: Axis) -> Result<Diagram, DiagramError> {
    let proj = Projection::build(k, axis)?;
    let crossings = proj.crossings()?;
    Ok(assemble(axis, crossings))
}

fn ensure_valid(k: &KnotEmbedding) -> Result<(), DiagramError> {
    let report = validate_embedding(k);
    if report.valid {
        Ok(())
    } else {
        Err(DiagramError::InvalidEmbedding(report.violations))
    }
}

/// Projects along `axis` and collects the crossings of the resulting diagram.
pub fn project_and_count(k: &KnotEmbedding, axis: Axis) -> Result<Diagram, DiagramError> {
    ensure_valid(k)?;
    diagram_unchecked(k, axis)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripleCount {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub sum: usize,
}

impl TripleCount {
    pub fn get(&self, axis: Axis) -> usize {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
            Axis::Z => self.z,
        }
    }

    /// The two intravergent counts, ascending.
    pub fn intravergent(&self) -> [usize; 2] {
        [self.x.min(self.y), self.x.max(self.y)]
    }
}

impl fmt::Display for TripleCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.x, self.y, self.z, self.sum)
    }
}

/// All three diagrams, in X, Y, Z order.
pub fn project_all(k: &KnotEmbedding) -> Result<[Diagram; 3], DiagramError> {
    ensure_valid(k)?;
    Ok([
        diagram_unchecked(k, Axis::X)?,
        diagram_unchecked(k, Axis::Y)?,
        diagram_unchecked(k, Axis::Z)?,
    ])
}

pub fn counts_of(diagrams: &[Diagram; 3]) -> TripleCount {
    let [x, y, z] = [0, 1, 2].map(|i| diagrams[i].crossing_count);
    TripleCount {
        x,
        y,
        z,
        sum: x + y + z,
    }
}

/// Crossing counts in the three coordinate projections of one embedding.
pub fn triple_count(k: &KnotEmbedding) -> Result<TripleCount, DiagramError> {
    project_all(k).map(|d| counts_of(&d))
}

/// Transvergent diagrams have an even count and no central crossing;
/// intravergent ones an odd count and exactly one central crossing.
pub fn parity_check(d: &Diagram) -> bool {
    if d.axis.is_intravergent() {
        d.crossing_count % 2 == 1 && d.central_count() == 1
    } else {
        d.crossing_count.is_multiple_of(2) && d.central_count() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Point3;
    use crate::polygon::{default_delta, symmetrize, QuarterArc};

    fn p3(x: i64, y: i64, z: i64) -> Point3 {
        Point3::from_ints(x, y, z)
    }

    fn trivial() -> KnotEmbedding {
        symmetrize(&QuarterArc::new("unknot", default_delta(), vec![p3(4, 0, 0), p3(3, 3, -1), p3(0, 4, 0)]).unwrap())
    }

    #[test]
    fn trivial_knot_counts() {
        let k = trivial();
        let counts = triple_count(&k).unwrap();
        assert_eq!((counts.x, counts.y, counts.z, counts.sum), (1, 1, 0, 2));
        for axis in Axis::ALL {
            let d = project_and_count(&k, axis).unwrap();
            assert!(parity_check(&d), "{axis}");
        }
        let dx = project_and_count(&k, Axis::X).unwrap();
        assert!(dx.crossings[0].is_central);
        assert_eq!(dx.crossings[0].position, Point2::from_ints(0, 0));
        // Over strand is the x-axis point with the larger x.
        assert_eq!(dx.crossings[0].over, Locus::vertex(0));
        assert_eq!(dx.crossings[0].under, Locus::vertex(4));
    }

    #[test]
    fn parity_examples() {
        let k = trivial();
        let mut d = project_and_count(&k, Axis::Z).unwrap();
        assert!(parity_check(&d));
        let mut dx = project_and_count(&k, Axis::X).unwrap();
        // Fake an odd transvergent diagram.
        d.crossings.push(dx.crossings[0].clone());
        d.crossings[0].is_central = false;
        d.crossing_count = 1;
        assert!(!parity_check(&d));
        dx.crossings[0].is_central = false;
        assert!(!parity_check(&dx));
    }

    #[test]
    fn invalid_embedding_is_rejected() {
        let mut v = trivial().vertices().to_vec();
        v[1] = p3(3, 3, -2);
        let err = project_and_count(&KnotEmbedding::from_polygon(v), Axis::Z).unwrap_err();
        assert!(matches!(err, DiagramError::InvalidEmbedding(_)));
    }

    #[test]
    fn square_is_not_in_general_position() {
        let q = QuarterArc::new("sq", default_delta(), vec![p3(1, 0, 0), p3(0, 1, 0)]).unwrap();
        let err = project_and_count(&symmetrize(&q), Axis::X).unwrap_err();
        assert!(matches!(err, DiagramError::GeneralPosition { .. }));
    }

    #[test]
    fn pd_labels_each_appear_twice() {
        let d = project_and_count(&trivial(), Axis::Y).unwrap();
        let mut labels: Vec<usize> = d.pd_code.crossings().iter().flatten().copied().collect();
        labels.sort_unstable();
        assert_eq!(labels, vec![1, 1, 2, 2]);
        assert_eq!(d.gauss_code.len(), 2);
    }
}
