//! Chord diagrams of the three projections on a common circle.
//!
//! The circle is the polygon itself, parameterized by traversal locus
//! (segment index plus a rational parameter along the segment). Each
//! half-turn symmetry permutes the vertex list by a cyclic shift or a
//! reversal, which induces an exact involution of the circle.

use std::collections::BTreeSet;

use crate::diagram::{project_all, project_and_count, Diagram, DiagramError, Locus};
use crate::exact::{half_turn, Axis, Rational};
use crate::polygon::KnotEmbedding;

/// Action of a symmetry on the vertex indices of an `n`-gon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircleMap {
    /// `i -> i + shift`.
    Rotate { shift: usize },
    /// `i -> sum - i`.
    Reflect { sum: usize },
}

impl CircleMap {
    fn vertex(&self, i: usize, n: usize) -> usize {
        match *self {
            CircleMap::Rotate { shift } => (i + shift) % n,
            CircleMap::Reflect { sum } => (sum + n - i % n) % n,
        }
    }

    pub fn apply(&self, l: &Locus, n: usize) -> Locus {
        match self {
            CircleMap::Rotate { .. } => Locus {
                segment: self.vertex(l.segment, n),
                t: l.t.clone(),
            },
            CircleMap::Reflect { .. } if l.t.is_zero() => Locus::vertex(self.vertex(l.segment, n)),
            CircleMap::Reflect { .. } => Locus {
                segment: self.vertex(l.segment + 1, n),
                t: &Rational::one() - &l.t,
            },
        }
    }
}

/// Induced circle map of the half-turn about `axis`, or `None` if the
/// polygon is not symmetric under it.
pub fn circle_map(k: &KnotEmbedding, axis: Axis) -> Option<CircleMap> {
    let v = k.vertices();
    let n = v.len();
    if n < 3 {
        return None;
    }
    let image = |i: usize| {
        let target = half_turn(axis, &v[i]);
        v.iter().position(|p| *p == target)
    };
    let (a, b) = (image(0)?, image(1)?);
    let map = if b == (a + 1) % n {
        CircleMap::Rotate { shift: a }
    } else if a == (b + 1) % n {
        CircleMap::Reflect { sum: a }
    } else {
        return None;
    };
    (0..n).all(|i| image(i) == Some(map.vertex(i, n))).then_some(map)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chord {
    /// Endpoints in traversal order, `a < b`.
    pub a: Locus,
    pub b: Locus,
    pub axis: Axis,
    pub central: bool,
}

impl Chord {
    fn new(p: Locus, q: Locus, axis: Axis, central: bool) -> Self {
        let (a, b) = if p <= q { (p, q) } else { (q, p) };
        Chord { a, b, axis, central }
    }

    fn endpoints(&self) -> (Locus, Locus) {
        (self.a.clone(), self.b.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordDiagram {
    pub vertex_count: usize,
    /// Circle maps of the half-turns about X, Y and Z.
    pub maps: [CircleMap; 3],
    pub chords: Vec<Chord>,
}

/// Display color of chords from each projection.
pub fn axis_color(axis: Axis) -> &'static str {
    match axis {
        Axis::X => "red",
        Axis::Y => "green",
        Axis::Z => "blue",
    }
}

fn maps_of(k: &KnotEmbedding) -> Result<[CircleMap; 3], DiagramError> {
    let mut out = [CircleMap::Rotate { shift: 0 }; 3];
    for (slot, axis) in out.iter_mut().zip(Axis::ALL) {
        *slot = circle_map(k, axis)
            .ok_or_else(|| DiagramError::InvalidEmbedding(vec![crate::polygon::Violation::Symmetry { axis }]))?;
    }
    Ok(out)
}

fn chords_of(d: &Diagram) -> impl Iterator<Item = Chord> + '_ {
    d.crossings
        .iter()
        .map(move |c| Chord::new(c.over.clone(), c.under.clone(), d.axis, c.is_central))
}

/// One chord per crossing of the projection along `axis`.
pub fn chords(k: &KnotEmbedding, axis: Axis) -> Result<ChordDiagram, DiagramError> {
    let d = project_and_count(k, axis)?;
    Ok(ChordDiagram {
        vertex_count: k.len(),
        maps: maps_of(k)?,
        chords: chords_of(&d).collect(),
    })
}

/// All three chord diagrams on one circle.
pub fn simultaneous_chords(k: &KnotEmbedding) -> Result<ChordDiagram, DiagramError> {
    let diagrams = project_all(k)?;
    Ok(ChordDiagram {
        vertex_count: k.len(),
        maps: maps_of(k)?,
        chords: diagrams.iter().flat_map(chords_of).collect(),
    })
}

impl ChordDiagram {
    pub fn count(&self, axis: Axis) -> usize {
        self.chords.iter().filter(|c| c.axis == axis).count()
    }

    pub fn map(&self, axis: Axis) -> CircleMap {
        self.maps[axis as usize]
    }

    fn image(&self, c: &Chord, map: CircleMap) -> (Locus, Locus) {
        let n = self.vertex_count;
        let (p, q) = (map.apply(&c.a, n), map.apply(&c.b, n));
        if p <= q {
            (p, q)
        } else {
            (q, p)
        }
    }

    /// Pairs `(i, j)` of a transvergent chord `i` and an intravergent chord
    /// `j` that share at least one endpoint exactly.
    pub fn shared_endpoints(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, zc) in self.chords.iter().enumerate().filter(|(_, c)| c.axis == Axis::Z) {
            for (j, ic) in self.chords.iter().enumerate().filter(|(_, c)| c.axis != Axis::Z) {
                if [&zc.a, &zc.b].iter().any(|l| **l == ic.a || **l == ic.b) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Whether the `axis` chords are symmetric under every half-turn of the
    /// knot. For the transvergent axis the half-turn about Z must move every
    /// endpoint; for an intravergent axis exactly the central chord is fixed
    /// by that axis' half-turn and its endpoints are the fixed points.
    pub fn check_symmetry(&self, axis: Axis) -> bool {
        let own: Vec<&Chord> = self.chords.iter().filter(|c| c.axis == axis).collect();
        let set: BTreeSet<(Locus, Locus)> = own.iter().map(|c| c.endpoints()).collect();
        if set.len() != own.len() {
            return false;
        }
        for map in self.maps {
            if !own.iter().all(|c| set.contains(&self.image(c, map))) {
                return false;
            }
        }
        let map = self.map(axis);
        let n = self.vertex_count;
        if axis.is_intravergent() {
            let fixed: Vec<&&Chord> = own.iter().filter(|c| self.image(c, map) == c.endpoints()).collect();
            match fixed[..] {
                [c] => c.central && map.apply(&c.a, n) == c.a && map.apply(&c.b, n) == c.b,
                _ => false,
            }
        } else {
            own.iter()
                .all(|c| map.apply(&c.a, n) != c.a && map.apply(&c.b, n) != c.b)
        }
    }
}

/// Free-function form of [`ChordDiagram::check_symmetry`].
pub fn check_chord_symmetry(cd: &ChordDiagram, axis: Axis) -> bool {
    cd.check_symmetry(axis)
}
