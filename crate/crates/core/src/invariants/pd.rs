//! Planar-diagram codes and Reidemeister I/II reduction.
//!
//! Each crossing `X(a,b,c,d)` lists its four arcs counterclockwise starting
//! at the incoming under-arc, so the under-strand runs `a -> c`. The
//! over-strand direction is recovered by walking the knot.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::InvariantError;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PdCode(Vec<[usize; 4]>);

impl PdCode {
    pub fn new(crossings: Vec<[usize; 4]>) -> Self {
        PdCode(crossings)
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> Result<i64, InvariantError> {
        Ok(Oriented::from_pd(self)?.writhe())
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for [a, b, c, d] in &self.0 {
            writeln!(f, "X({a},{b},{c},{d})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|[a, b, c, d]| format!("X({a},{b},{c},{d})"))
            .collect();
        write!(f, "PD[{}]", parts.join(", "))
    }
}

impl FromStr for PdCode {
    type Err = InvariantError;

    /// Parses `X(a,b,c,d)` entries separated by whitespace, commas or newlines.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: String| InvariantError::Malformed(msg);
        let mut out = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix("X(")
                .ok_or_else(|| bad(format!("expected X( at {rest:?}")))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed X(".into()))?;
            let nums: Vec<usize> = body[..close]
                .split(',')
                .map(|n| n.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| bad(format!("bad label: {e}")))?;
            let tuple: [usize; 4] = nums.try_into().map_err(|_| bad("crossing needs four labels".into()))?;
            out.push(tuple);
            rest = body[close + 1..].trim_start_matches(|c: char| c == ',' || c.is_whitespace());
        }
        Ok(PdCode(out))
    }
}

/// A PD code with the over-strand direction resolved at every crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Oriented {
    pub x: Vec<[usize; 4]>,
    /// Position (1 or 3) of the incoming over-arc.
    pub over_in: Vec<usize>,
}

type Slot = (usize, usize);

fn occurrences(x: &[[usize; 4]]) -> HashMap<usize, Vec<Slot>> {
    let mut occ: HashMap<usize, Vec<Slot>> = HashMap::new();
    for (c, labels) in x.iter().enumerate() {
        for (p, &l) in labels.iter().enumerate() {
            occ.entry(l).or_default().push((c, p));
        }
    }
    occ
}

fn partner(occ: &HashMap<usize, Vec<Slot>>, x: &[[usize; 4]], slot: Slot) -> Slot {
    let pair = &occ[&x[slot.0][slot.1]];
    if pair[0] == slot {
        pair[1]
    } else {
        pair[0]
    }
}

impl Oriented {
    pub fn from_pd(code: &PdCode) -> Result<Self, InvariantError> {
        let x = code.0.clone();
        let n = x.len();
        let occ = occurrences(&x);
        if occ.len() != 2 * n || occ.values().any(|v| v.len() != 2) {
            return Err(InvariantError::Malformed(
                "every arc label must appear exactly twice".into(),
            ));
        }
        if (1..=2 * n).any(|l| !occ.contains_key(&l)) {
            return Err(InvariantError::Malformed(format!("arc labels must be 1..={}", 2 * n)));
        }
        let mut over_in = vec![0usize; n];
        let mut under_seen = vec![false; n];
        if n > 0 {
            let start: Slot = (0, 2);
            let mut out = start;
            for _ in 0..2 * n {
                let (c, p) = partner(&occ, &x, out);
                out = match p {
                    0 => {
                        under_seen[c] = true;
                        (c, 2)
                    }
                    2 => {
                        return Err(InvariantError::Malformed(format!(
                            "arc {} joins two outgoing ends",
                            x[c][p]
                        )))
                    }
                    _ => {
                        if over_in[c] != 0 && over_in[c] != p {
                            return Err(InvariantError::Malformed(format!(
                                "inconsistent over-strand at crossing {c}"
                            )));
                        }
                        over_in[c] = p;
                        (c, (p + 2) % 4)
                    }
                };
                if out == start {
                    break;
                }
            }
            if out != start || over_in.contains(&0) || under_seen.contains(&false) {
                return Err(InvariantError::Malformed(
                    "code does not describe a single closed strand".into(),
                ));
            }
        }
        Ok(Oriented { x, over_in })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn sign(&self, c: usize) -> i32 {
        if self.over_in[c] == 1 {
            -1
        } else {
            1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.len()).map(|c| self.sign(c) as i64).sum()
    }

    fn is_incoming(&self, (c, p): Slot) -> bool {
        p == 0 || p == self.over_in[c]
    }

    /// Events `(crossing, is_over)` in traversal order, starting at the head of
    /// the arc `first_arc`, plus the incoming slot of every event.
    pub fn walk_from(&self, first_arc: usize) -> Vec<(usize, bool, Slot)> {
        let occ = occurrences(&self.x);
        let pair = &occ[&first_arc];
        let mut slot = if self.is_incoming(pair[0]) { pair[0] } else { pair[1] };
        let mut events = Vec::with_capacity(2 * self.len());
        for _ in 0..2 * self.len() {
            let (c, p) = slot;
            events.push((c, p != 0, slot));
            let out = (c, (p + 2) % 4);
            slot = partner(&occ, &self.x, out);
        }
        events
    }

    /// Traversal events starting at the head of arc 1 (or the smallest label).
    pub fn walk(&self) -> Vec<(usize, bool, Slot)> {
        match self.x.iter().flatten().min() {
            Some(&l) => self.walk_from(l),
            None => Vec::new(),
        }
    }

    /// Relabels arcs `1..=2c` along the orientation and reorders crossings by
    /// first encounter, starting at the head of the smallest label, which
    /// becomes arc 1.
    pub fn normalized(&self) -> Oriented {
        let events = self.walk();
        let total = events.len();
        let mut rank = vec![usize::MAX; self.len()];
        let mut order = Vec::new();
        for &(c, _, _) in &events {
            if rank[c] == usize::MAX {
                rank[c] = order.len();
                order.push(c);
            }
        }
        let mut x = vec![[0usize; 4]; self.len()];
        for (j, &(c, _, (_, p))) in events.iter().enumerate() {
            x[rank[c]][p] = j + 1;
            x[rank[c]][(p + 2) % 4] = (j + 1) % total + 1;
        }
        let over_in = order.iter().map(|&c| self.over_in[c]).collect();
        Oriented { x, over_in }
    }

    pub fn to_pd(&self) -> PdCode {
        PdCode(self.x.clone())
    }

    /// Faces as cycles of darts `(crossing, position)`.
    pub fn faces(&self) -> Vec<Vec<Slot>> {
        let occ = occurrences(&self.x);
        let mut seen = vec![[false; 4]; self.len()];
        let mut faces = Vec::new();
        for c in 0..self.len() {
            for p in 0..4 {
                if seen[c][p] {
                    continue;
                }
                let mut face = Vec::new();
                let mut dart = (c, p);
                while !seen[dart.0][dart.1] {
                    seen[dart.0][dart.1] = true;
                    face.push(dart);
                    let (c2, p2) = partner(&occ, &self.x, dart);
                    dart = (c2, (p2 + 1) % 4);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Removes the given crossings and glues the strand ends listed in
    /// `joins`; every label of a removed crossing must be accounted for.
    fn remove(&self, removed: &[usize], joins: &[(usize, usize)]) -> Oriented {
        let mut parent: HashMap<usize, usize> = HashMap::new();
        fn find(parent: &mut HashMap<usize, usize>, l: usize) -> usize {
            let mut root = l;
            while let Some(&p) = parent.get(&root) {
                if p == root {
                    break;
                }
                root = p;
            }
            root
        }
        for &(a, b) in joins {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent.insert(rb, ra);
                parent.entry(ra).or_insert(ra);
            }
        }
        let mut x = Vec::new();
        let mut over_in = Vec::new();
        for c in 0..self.len() {
            if removed.contains(&c) {
                continue;
            }
            x.push(self.x[c].map(|l| find(&mut parent, l)));
            over_in.push(self.over_in[c]);
        }
        Oriented { x, over_in }.normalized()
    }

    fn find_r1(&self) -> Option<Oriented> {
        for c in 0..self.len() {
            let labels = self.x[c];
            for p in 0..4 {
                for q in p + 1..4 {
                    if labels[p] == labels[q] {
                        let others: Vec<usize> = (0..4).filter(|&r| r != p && r != q).map(|r| labels[r]).collect();
                        return Some(self.remove(&[c], &[(others[0], others[1])]));
                    }
                }
            }
        }
        None
    }

    fn find_r2(&self) -> Option<Oriented> {
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for face in self.faces() {
            if let [(c1, p1), (c2, p2)] = face[..] {
                if c1 == c2 || p1 % 2 == p2 % 2 {
                    continue;
                }
                let key = (c1.min(c2), c1.max(c2));
                if best.is_none_or(|(a, b, _, _)| key < (a, b)) {
                    best = Some((c1, c2, p1, p2));
                }
            }
        }
        let (c1, c2, p1, p2) = best?;
        let at = |c: usize, p: usize| self.x[c][p % 4];
        // Strand through arc (c1,p1)-(c2,p2-1) and strand through (c2,p2)-(c1,p1-1).
        let joins = [
            (at(c1, p1 + 2), at(c2, p2 + 1)),
            (at(c2, p2 + 2), at(c1, p1 + 1)),
            (at(c1, p1), at(c1, p1 + 2)),
            (at(c2, p2), at(c2, p2 + 2)),
        ];
        Some(self.remove(&[c1, c2], &joins))
    }
}

/// Removes Reidemeister I kinks and II clasps until none remain, always
/// acting at the lowest-indexed crossing first.
pub fn simplify(code: &PdCode) -> Result<PdCode, InvariantError> {
    let mut d = Oriented::from_pd(code)?.normalized();
    loop {
        if let Some(next) = d.find_r1().or_else(|| d.find_r2()) {
            d = next;
        } else {
            return Ok(d.to_pd());
        }
    }
}
