//! PD codes of standard diagrams: 4-plats of rational knots and braid closures.
//!
//! Diagrams are assembled from crossings whose slots are numbered
//! counterclockwise `0 = bottom-right, 1 = top-right, 2 = top-left,
//! 3 = bottom-left`; strands run upward through `3 -> 1` and `0 -> 2`.

use super::pd::Oriented;
use super::PdCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Slot(usize, usize),
    Free,
}

#[derive(Default)]
struct Builder {
    nodes: Vec<Node>,
    adj: Vec<Vec<usize>>,
    /// Whether the `3 -> 1` strand is the over-strand.
    rising_over: Vec<bool>,
    frontier: Vec<usize>,
}

impl Builder {
    fn node(&mut self, n: Node) -> usize {
        self.nodes.push(n);
        self.adj.push(Vec::new());
        self.nodes.len() - 1
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a].push(b);
        self.adj[b].push(a);
    }

    fn open(&mut self, width: usize) -> Vec<usize> {
        self.frontier = (0..width).map(|_| self.node(Node::Free)).collect();
        self.frontier.clone()
    }

    /// Twists the strands at positions `i` and `i + 1`; a positive generator
    /// passes the strand rising from the left over the other one.
    fn twist(&mut self, i: usize, positive: bool) {
        let c = self.rising_over.len();
        self.rising_over.push(positive);
        let slots: Vec<usize> = (0..4).map(|p| self.node(Node::Slot(c, p))).collect();
        self.link(self.frontier[i], slots[3]);
        self.link(self.frontier[i + 1], slots[0]);
        self.frontier[i] = slots[2];
        self.frontier[i + 1] = slots[1];
    }

    fn cup(&mut self, i: usize) {
        let (a, b) = (self.node(Node::Free), self.node(Node::Free));
        self.link(a, b);
        self.frontier[i] = a;
        self.frontier[i + 1] = b;
    }

    fn cap(&mut self, i: usize) {
        self.link(self.frontier[i], self.frontier[i + 1]);
    }

    /// Follows free nodes from a slot to the next slot.
    fn partner(&self, slot_node: usize) -> usize {
        let mut prev = slot_node;
        let mut cur = self.adj[slot_node][0];
        while self.nodes[cur] == Node::Free {
            let next = if self.adj[cur][0] == prev {
                self.adj[cur][1]
            } else {
                self.adj[cur][0]
            };
            prev = cur;
            cur = next;
        }
        cur
    }

    fn finish(self) -> PdCode {
        let n = self.rising_over.len();
        if n == 0 {
            return PdCode::default();
        }
        let mut slot_node = vec![[0usize; 4]; n];
        for (id, node) in self.nodes.iter().enumerate() {
            if let Node::Slot(c, p) = *node {
                slot_node[c][p] = id;
            }
        }
        let to_slot = |id: usize| match self.nodes[id] {
            Node::Slot(c, p) => (c, p),
            Node::Free => unreachable!("partner always ends at a slot"),
        };
        let mut labels = vec![[0usize; 4]; n];
        let mut arrival = vec![Vec::new(); n];
        let start = (0usize, 0usize);
        let mut at = start;
        let mut label = 1;
        loop {
            let (c, p) = at;
            labels[c][p] = label;
            arrival[c].push(p);
            let out = (p + 2) % 4;
            label += 1;
            labels[c][out] = label;
            at = to_slot(self.partner(slot_node[c][out]));
            if at == start {
                labels[c][out] = 1;
                break;
            }
        }
        assert_eq!(label, 2 * n + 1, "standard diagram must be a knot");
        let crossings = (0..n)
            .map(|c| {
                let over_pair = if self.rising_over[c] { [3, 1] } else { [0, 2] };
                let u = *arrival[c].iter().find(|p| !over_pair.contains(p)).unwrap();
                [0, 1, 2, 3].map(|k| labels[c][(u + k) % 4])
            })
            .collect();
        let code = PdCode::new(crossings);
        Oriented::from_pd(&code)
            .expect("standard diagram is well formed")
            .normalized()
            .to_pd()
    }
}

/// Rational knot from a Conway notation `[a1 a2 ... an]` drawn as the 4-plat
/// closure of `s2^a1 s1^-a2 s2^a3 ...`. Even-length notations are rewritten
/// with a trailing `... (an - 1) 1`. Panics if the closure has two components.
pub fn rational_knot_pd(conway: &[i64]) -> PdCode {
    let mut terms = conway.to_vec();
    if terms.len().is_multiple_of(2) {
        let last = terms.pop().expect("nonempty notation");
        let unit = last.signum();
        terms.push(last - unit);
        terms.push(unit);
    }
    let mut b = Builder::default();
    b.open(4);
    b.cup(0);
    b.cup(2);
    for (k, &a) in terms.iter().enumerate() {
        let (pos, positive) = if k % 2 == 0 { (1, a > 0) } else { (0, a < 0) };
        for _ in 0..a.unsigned_abs() {
            b.twist(pos, positive);
        }
    }
    b.cap(0);
    b.cap(2);
    b.finish()
}

/// Closure of a braid word on `strands` strands; `+i` / `-i` is the
/// generator twisting positions `i - 1` and `i`.
pub fn braid_closure_pd(strands: usize, word: &[i32]) -> PdCode {
    let mut b = Builder::default();
    let bottom = b.open(strands);
    for &g in word {
        let i = g.unsigned_abs() as usize;
        assert!(i >= 1 && i < strands, "generator {g} out of range");
        b.twist(i - 1, g > 0);
    }
    for (i, &start) in bottom.iter().enumerate() {
        b.link(b.frontier[i], start);
    }
    b.finish()
}

/// Torus knot `T(p, q)` as the closure of `(s1 ... s_{p-1})^q`.
pub fn torus_knot_pd(p: usize, q: usize) -> PdCode {
    let word: Vec<i32> = (0..q).flat_map(|_| 1..p as i32).collect();
    braid_closure_pd(p, &word)
}
