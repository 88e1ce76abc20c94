//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use simcross::invariants::PdCode;
use simcross::polygon::default_delta;
use simcross::{builtin_quarter, symmetrize, twist_quarter_unified, KnotEmbedding, Rational, TwistSpec};

/// Left-handed trefoil as tabulated in the Knot Atlas.
pub const TREFOIL_PD: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
pub const TREFOIL_WRITHE: i64 = -3;
pub const FIGURE_EIGHT_PD: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
pub const FIGURE_EIGHT_WRITHE: i64 = 0;

pub fn pd(s: &str) -> PdCode {
    s.parse().unwrap()
}

pub fn twist(k: i64, rho: i64, delta: Rational) -> KnotEmbedding {
    symmetrize(&twist_quarter_unified(&TwistSpec::new(k, rho, delta).unwrap()).unwrap())
}

pub fn trefoil() -> KnotEmbedding {
    twist(1, -1, default_delta())
}

pub fn builtin(name: &str, delta: Rational) -> KnotEmbedding {
    symmetrize(&builtin_quarter(name, &delta).unwrap())
}

type Slot = (usize, usize);

fn ends(code: &PdCode) -> HashMap<usize, Vec<Slot>> {
    let mut m: HashMap<usize, Vec<Slot>> = HashMap::new();
    for (c, x) in code.crossings().iter().enumerate() {
        for (p, &l) in x.iter().enumerate() {
            m.entry(l).or_default().push((c, p));
        }
    }
    m
}

fn other_end(ends: &HashMap<usize, Vec<Slot>>, code: &PdCode, s: Slot) -> Slot {
    let v = &ends[&code.crossings()[s.0][s.1]];
    if v[0] == s {
        v[1]
    } else {
        v[0]
    }
}

/// Determinant via the Goeritz matrix of a checkerboard colouring.
pub fn goeritz_determinant(code: &PdCode) -> u64 {
    let n = code.len();
    if n == 0 {
        return 1;
    }
    let e = ends(code);
    // Face id of each dart; the corner (p-1, p) at crossing c lies in face[c][p].
    let mut face = vec![[usize::MAX; 4]; n];
    let mut faces = 0;
    for c in 0..n {
        for p in 0..4 {
            if face[c][p] != usize::MAX {
                continue;
            }
            let mut d = (c, p);
            while face[d.0][d.1] == usize::MAX {
                face[d.0][d.1] = faces;
                let (c2, p2) = other_end(&e, code, d);
                d = (c2, (p2 + 1) % 4);
            }
            faces += 1;
        }
    }
    assert_eq!(faces, n + 2, "diagram is not planar");
    // Two-colour the faces: the two sides of an edge differ.
    let mut adj = vec![Vec::new(); faces];
    for c in 0..n {
        for p in 0..4 {
            let (c2, p2) = other_end(&e, code, (c, p));
            let (f1, f2) = (face[c][p], face[c2][p2]);
            adj[f1].push(f2);
            adj[f2].push(f1);
        }
    }
    let mut color = vec![None; faces];
    color[0] = Some(0u8);
    let mut stack = vec![0];
    while let Some(f) = stack.pop() {
        for &g in &adj[f] {
            match color[g] {
                None => {
                    color[g] = Some(1 - color[f].unwrap());
                    stack.push(g);
                }
                Some(cg) => assert_ne!(Some(cg), color[f], "faces do not 2-colour"),
            }
        }
    }
    let white: Vec<usize> = (0..faces).filter(|&f| color[f] == Some(0)).collect();
    let idx: HashMap<usize, usize> = white.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let w = white.len();
    let mut g = vec![vec![0i128; w]; w];
    for corners in face.iter().take(n) {
        // Corner (p-1,p) is in corners[p]; corners 1 and 3 are (0,1) and (2,3).
        let (f1, f3) = (corners[1], corners[3]);
        let (a, b, eta) = if color[f1] == Some(0) {
            (f1, f3, 1)
        } else {
            (corners[0], corners[2], -1)
        };
        if a != b {
            let (i, j) = (idx[&a], idx[&b]);
            g[i][j] -= eta;
            g[j][i] -= eta;
            g[i][i] += eta;
            g[j][j] += eta;
        }
    }
    let minor: Vec<Vec<i128>> = g[1..].iter().map(|r| r[1..].to_vec()).collect();
    int_det(minor).unsigned_abs() as u64
}

/// Fraction-free integer determinant.
pub fn int_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

type Poly = BTreeMap<i64, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Kauffman bracket by summing over every state and tracing loops explicitly.
pub fn brute_force_bracket(code: &PdCode) -> Poly {
    let n = code.len();
    let e = ends(code);
    let d: Poly = [(2, -1), (-2, -1)].into_iter().collect();
    let mut total = Poly::new();
    for state in 0u32..(1 << n) {
        // Smoothing partner of each slot.
        let partner = |(c, p): Slot| -> Slot {
            let b_smoothing = state >> c & 1 == 1;
            let q = match (b_smoothing, p) {
                (false, 0) => 1,
                (false, 1) => 0,
                (false, 2) => 3,
                (false, _) => 2,
                (true, 0) => 3,
                (true, 3) => 0,
                (true, 1) => 2,
                (true, _) => 1,
            };
            (c, q)
        };
        let mut seen = vec![[false; 4]; n];
        let mut loops = 0;
        for c in 0..n {
            for p in 0..4 {
                if seen[c][p] {
                    continue;
                }
                loops += 1;
                let mut s = (c, p);
                while !seen[s.0][s.1] {
                    seen[s.0][s.1] = true;
                    let t = partner(s);
                    seen[t.0][t.1] = true;
                    s = other_end(&e, code, t);
                }
            }
        }
        let b = state.count_ones() as i64;
        let mut term: Poly = [(n as i64 - 2 * b, 1)].into_iter().collect();
        for _ in 1..loops {
            term = poly_mul(&term, &d);
        }
        for (k, v) in term {
            *total.entry(k).or_insert(0) += v;
        }
    }
    if n == 0 {
        total.insert(0, 1);
    }
    total.retain(|_, c| *c != 0);
    total
}

/// Jones polynomial `(exponent of t, coefficient)` from the brute-force
/// bracket with a known writhe.
pub fn brute_force_jones(code: &PdCode, writhe: i64) -> Vec<(i64, i64)> {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let f: Poly = [(-3 * writhe, sign)].into_iter().collect();
    let v = poly_mul(&brute_force_bracket(code), &f);
    v.into_iter()
        .map(|(e, c)| {
            assert_eq!(e % 4, 0);
            (-e / 4, c)
        })
        .rev()
        .collect::<BTreeMap<_, _>>()
        .into_iter()
        .collect()
}
