use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::pd::Oriented;
use super::{InvariantError, LaurentPoly, PdCode};

/// Dense polynomial in `t` with non-negative exponents, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly(Vec<BigInt>);

impl Poly {
    fn zero() -> Self {
        Poly(Vec::new())
    }

    fn from_small(coeffs: &[i64]) -> Self {
        let mut p = Poly(coeffs.iter().map(|&c| BigInt::from(c)).collect());
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = Poly(out);
        p.trim();
        p
    }

    fn sub(&self, rhs: &Poly) -> Poly {
        let len = self.0.len().max(rhs.0.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in rhs.0.iter().enumerate() {
            out[i] -= b;
        }
        let mut p = Poly(out);
        p.trim();
        p
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    /// Exact division; the caller guarantees `rhs` divides `self`.
    fn div_exact(&self, rhs: &Poly) -> Poly {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Poly::zero();
        }
        let mut rem = self.0.clone();
        let dl = rhs.0.len();
        let lead = rhs.0.last().unwrap();
        assert!(rem.len() >= dl, "inexact polynomial division");
        let mut q = vec![BigInt::zero(); rem.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let top = &rem[k + dl - 1];
            if top.is_zero() {
                continue;
            }
            assert!((top % lead).is_zero(), "inexact polynomial division");
            let f = top / lead;
            for (j, b) in rhs.0.iter().enumerate() {
                rem[k + j] -= &f * b;
            }
            q[k] = f;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        let mut p = Poly(q);
        p.trim();
        p
    }
}

/// Fraction-free (Bareiss) determinant over `Z[t]`.
fn determinant(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::from_small(&[1]);
    }
    let mut negate = false;
    let mut prev = Poly::from_small(&[1]);
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Alexander polynomial from the Wirtinger presentation, normalized so the
/// lowest exponent is 0 and the value at `t = 1` is `+1`.
pub fn alexander(code: &PdCode) -> Result<LaurentPoly, InvariantError> {
    let d = Oriented::from_pd(code)?;
    let n = d.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    // Arc ids change at every under-pass.
    let mut over_arc = vec![0usize; n];
    let mut under_in = vec![0usize; n];
    let mut under_out = vec![0usize; n];
    let mut current = 0usize;
    for (c, is_over, _) in d.walk() {
        if is_over {
            over_arc[c] = current;
        } else {
            under_in[c] = current;
            current = (current + 1) % n;
            under_out[c] = current;
        }
    }
    let mut rows: Vec<Vec<[i64; 2]>> = vec![vec![[0, 0]; n]; n];
    for c in 0..n {
        let row = &mut rows[c];
        let add = |row: &mut Vec<[i64; 2]>, arc: usize, p: [i64; 2]| {
            row[arc][0] += p[0];
            row[arc][1] += p[1];
        };
        add(row, over_arc[c], [1, -1]);
        if d.sign(c) > 0 {
            add(row, under_in[c], [0, 1]);
            add(row, under_out[c], [-1, 0]);
        } else {
            add(row, under_in[c], [-1, 0]);
            add(row, under_out[c], [0, 1]);
        }
    }
    let minor: Vec<Vec<Poly>> = rows[..n - 1]
        .iter()
        .map(|r| r[..n - 1].iter().map(|p| Poly::from_small(p)).collect())
        .collect();
    normalize(&determinant(minor))
}

fn normalize(p: &Poly) -> Result<LaurentPoly, InvariantError> {
    let first =
        p.0.iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| InvariantError::Malformed("Alexander determinant vanished".into()))?;
    let coeffs = &p.0[first..];
    let at_one: BigInt = coeffs.iter().sum();
    let flip = if at_one == BigInt::one() {
        false
    } else if at_one == -BigInt::one() {
        true
    } else {
        return Err(InvariantError::Malformed(format!(
            "Alexander polynomial has value {at_one} at t=1"
        )));
    };
    let mut out = LaurentPoly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        let c = if flip { -c } else { c.clone() };
        let small = c.to_i64().ok_or(InvariantError::CoefficientOverflow)?;
        out.add_term(small, i as i64);
    }
    Ok(out)
}

/// `|Delta(-1)|`.
pub fn determinant_of(alexander: &LaurentPoly) -> u64 {
    alexander.eval_unit(-1).unsigned_abs()
}
