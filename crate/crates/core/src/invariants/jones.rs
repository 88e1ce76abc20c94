use std::collections::BTreeMap;

use super::pd::{simplify, Oriented};
use super::{InvariantError, LaurentPoly, PdCode};

/// Largest reduced diagram accepted by [`jones`]; the state sum costs `2^c`.
pub const JONES_MAX_CROSSINGS: usize = 18;

/// Jones polynomial in `t`, computed as the writhe-normalized Kauffman
/// bracket with `t = A^-4`. The diagram is first reduced by R1/R2 moves and
/// the writhe is read off the reduced code.
pub fn jones(code: &PdCode) -> Result<LaurentPoly, InvariantError> {
    let reduced = simplify(code)?;
    if reduced.len() > JONES_MAX_CROSSINGS {
        return Err(InvariantError::TooLarge {
            crossings: reduced.len(),
            limit: JONES_MAX_CROSSINGS,
        });
    }
    let oriented = Oriented::from_pd(&reduced)?;
    let bracket = kauffman_bracket(&reduced);
    let w = oriented.writhe();
    // (-A^3)^(-w)
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let normalized = &bracket * &LaurentPoly::monomial(sign, -3 * w);
    let mut out = LaurentPoly::zero();
    for (e, c) in normalized.terms() {
        if e % 4 != 0 {
            return Err(InvariantError::Malformed(format!(
                "bracket exponent {e} is not a multiple of 4"
            )));
        }
        out.add_term(c, -e / 4);
    }
    Ok(out)
}

/// Kauffman bracket in `A`, normalized so the crossingless circle is 1.
/// The A-smoothing of `X(a,b,c,d)` joins `a-b` and `c-d`.
pub(crate) fn kauffman_bracket(code: &PdCode) -> LaurentPoly {
    let xs = code.crossings();
    let n = xs.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut index: BTreeMap<usize, usize> = BTreeMap::new();
    for l in xs.iter().flatten() {
        let next = index.len();
        index.entry(*l).or_insert(next);
    }
    let arcs: Vec<[usize; 4]> = xs.iter().map(|x| x.map(|l| index[&l])).collect();
    let m = index.len();

    // counts[(a_minus_b, loops)]
    let mut counts: BTreeMap<(i64, usize), i64> = BTreeMap::new();
    let mut parent = vec![0usize; m];
    for state in 0u64..(1u64 << n) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut loops = m;
        for (c, &[a, b, cc, d]) in arcs.iter().enumerate() {
            let pairs = if state >> c & 1 == 0 {
                [(a, b), (cc, d)]
            } else {
                [(a, d), (b, cc)]
            };
            for (u, v) in pairs {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru] = rv;
                    loops -= 1;
                }
            }
        }
        let b_count = state.count_ones() as i64;
        *counts.entry((n as i64 - 2 * b_count, loops)).or_insert(0) += 1;
    }

    let d = LaurentPoly::from_coeffs(-2, &[-1, 0, 0, 0, -1]);
    let max_loops = counts.keys().map(|&(_, l)| l).max().unwrap_or(1);
    let mut d_pow = vec![LaurentPoly::one()];
    for k in 1..max_loops {
        let next = &d_pow[k - 1] * &d;
        d_pow.push(next);
    }
    let mut out = LaurentPoly::zero();
    for (&(exp, loops), &count) in &counts {
        let term = &d_pow[loops - 1] * &LaurentPoly::monomial(count, exp);
        out = &out + &term;
    }
    out
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_and_kinks() {
        assert_eq!(jones(&PdCode::default()).unwrap(), LaurentPoly::one());
        for code in ["X(2,1,1,2)", "X(1,1,2,2)"] {
            assert_eq!(jones(&code.parse().unwrap()).unwrap(), LaurentPoly::one());
        }
    }

    #[test]
    fn left_trefoil() {
        let code: PdCode = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)".parse().unwrap();
        assert_eq!(jones(&code).unwrap(), LaurentPoly::from_coeffs(-4, &[-1, 1, 0, 1]));
    }
}
