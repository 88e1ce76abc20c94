//! Explicit quarter arcs: the twist knots `C(2k, ±2)`, the trivial knot and
//! the torus knot `T(4,5)`, plus the closed-form crossing counts of the twist
//! family.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{counts_of, parity_check, project_all, DiagramError, TripleCount};
use crate::exact::{Axis, Point3, Rational};
use crate::polygon::{default_delta, symmetrize, validate_embedding, QuarterArc, QuarterError, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("case {case} needs m >= {min}, got {m}")]
    CaseRange { case: u8, m: i64, min: i64 },
    #[error("unknown case {0}; expected 1..=4")]
    UnknownCase(u8),
    #[error("k must be at least 1, got {0}")]
    KRange(i64),
    #[error("rho must be +1 or -1, got {0}")]
    RhoRange(i64),
    #[error("delta must lie strictly between 0 and 1/2, got {0}")]
    DeltaRange(Rational),
    #[error("unknown built-in knot {0:?}; expected \"unknot\" or \"T45\"")]
    UnknownName(String),
    #[error(transparent)]
    Quarter(#[from] QuarterError),
}

/// The twist knot `C(2k, 2 rho)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistSpec {
    pub k: i64,
    pub rho: i64,
    pub delta: Rational,
}

impl TwistSpec {
    pub fn new(k: i64, rho: i64, delta: Rational) -> Result<Self, FamilyError> {
        if k < 1 {
            return Err(FamilyError::KRange(k));
        }
        if rho != 1 && rho != -1 {
            return Err(FamilyError::RhoRange(rho));
        }
        if !delta.is_positive() || delta >= Rational::new(1, 2) {
            return Err(FamilyError::DeltaRange(delta));
        }
        Ok(TwistSpec { k, rho, delta })
    }

    /// Crossing number of `C(2k, 2 rho)`.
    pub fn crossing_number(&self) -> i64 {
        if self.rho == 1 {
            2 * self.k + 2
        } else {
            2 * self.k + 1
        }
    }

    pub fn name(&self) -> String {
        format!("C({},{})", 2 * self.k, 2 * self.rho)
    }
}

/// Lower bound on the simultaneous crossing number from the crossing number.
pub fn sim_lower_bound(cr: u64) -> u64 {
    if cr % 2 == 1 {
        3 * cr + 1
    } else {
        3 * cr + 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub cr: u64,
    pub lower: u64,
    pub witness_sum: Option<u64>,
}

impl BoundRecord {
    pub fn new(cr: u64, witness_sum: Option<u64>) -> Self {
        BoundRecord {
            cr,
            lower: sim_lower_bound(cr),
            witness_sum,
        }
    }

    pub fn consistent(&self) -> bool {
        self.witness_sum.is_none_or(|w| w >= self.lower)
    }
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn p(x: &Rational, y: &Rational, z: &Rational) -> Point3 {
    Point3::new(x.clone(), y.clone(), z.clone())
}

/// Quarter arc from one of the four per-case constructions. Cases 1 and 3
/// take `k = 2m + 1`, cases 2 and 4 take `k = 2m`; cases 1 and 2 build
/// `C(2k, 2)`, cases 3 and 4 build `C(2k, -2)`.
pub fn twist_quarter_case(case: u8, m: i64, delta: &Rational) -> Result<QuarterArc, FamilyError> {
    let d = delta.clone();
    let nd = -&d;
    let odd = match case {
        1 | 3 => true,
        2 | 4 => false,
        _ => return Err(FamilyError::UnknownCase(case)),
    };
    let min = if odd { 0 } else { 1 };
    if m < min {
        return Err(FamilyError::CaseRange { case, m, min });
    }
    let k = if odd { 2 * m + 1 } else { 2 * m };
    let mut pts = vec![Point3::from_ints(0, 2, 0), p(&r(1), &nd, &r(-2))];
    if odd {
        for i in 0..m {
            let mut x = r(4 * i + 2);
            let mut y = r(-(2 * i + 3));
            let mut z = d.clone();
            pts.push(p(&x, &y, &z));
            x = &x + &r(1);
            z = -&y;
            y = d.clone();
            pts.push(p(&x, &y, &z));
            x = &x + &r(1);
            y = &z + &r(1);
            z = nd.clone();
            pts.push(p(&x, &y, &z));
            x = &x + &r(1);
            z = -&y;
            y = nd.clone();
            pts.push(p(&x, &y, &z));
        }
    } else {
        pts.push(p(&r(2), &r(-3), &d));
        pts.push(p(&r(3), &d, &r(3)));
        for i in 0..m - 1 {
            let mut x = r(4 * i + 4);
            let mut y = r(2 * i + 4);
            let mut z = nd.clone();
            pts.push(p(&x, &y, &z));
            x = &x + &r(1);
            z = -&y;
            y = nd.clone();
            pts.push(p(&x, &y, &z));
            x = &x + &r(1);
            y = &z - &r(1);
            z = d.clone();
            pts.push(p(&x, &y, &z));
            x = &x + &r(1);
            z = -&y;
            y = d.clone();
            pts.push(p(&x, &y, &z));
        }
    }
    match case {
        1 => {
            pts.push(p(&r(2 * k), &r(-k - 2), &d));
            pts.push(Point3::from_ints(2 * k + 1, -k - 5, k + 4));
            pts.push(Point3::from_ints(-2 * k - 2, -k - 6, k + 6));
        }
        2 => {
            pts.push(p(&r(2 * k), &r(k + 2), &nd));
            pts.push(Point3::from_ints(2 * k + 1, k + 5, -k - 4));
            pts.push(Point3::from_ints(-2 * k - 2, k + 6, -k - 6));
        }
        3 => {
            pts.push(Point3::from_ints(2 * k, -k - 4, -k - 5));
            pts.push(Point3::from_ints(-2 * k - 2, -k - 6, -k - 6));
        }
        _ => {
            pts.push(Point3::from_ints(2 * k, k + 4, k + 5));
            pts.push(Point3::from_ints(-2 * k - 2, k + 6, k + 6));
        }
    }
    pts.push(Point3::from_ints(-2 * k - 2, 0, 0));
    let rho = if case <= 2 { 1 } else { -1 };
    Ok(QuarterArc::new(format!("C({},{})", 2 * k, 2 * rho), d, pts)?)
}

/// Quarter arc from the single construction covering all four cases.
pub fn twist_quarter_unified(spec: &TwistSpec) -> Result<QuarterArc, FamilyError> {
    let TwistSpec { k, rho, ref delta } = *spec;
    let spec = TwistSpec::new(k, rho, delta.clone())?;
    let d = spec.delta.clone();
    let mut pts = vec![Point3::from_ints(0, 2, 0), p(&r(1), &-&d, &r(-2))];
    let (mut x, mut z) = (r(1), r(-2));
    let mut y;
    let mut e = -1i64;
    while x < r(2 * k - 1) {
        e = -e;
        x = &x + &r(1);
        y = &z - &r(e);
        z = &r(e) * &d;
        pts.push(p(&x, &y, &z));
        x = &x + &r(1);
        z = -&y;
        y = &r(e) * &d;
        pts.push(p(&x, &y, &z));
    }
    if rho == 1 {
        pts.push(p(&r(2 * k), &r(e * (k + 2)), &(&r(-e) * &d)));
        pts.push(Point3::from_ints(2 * k + 1, e * (k + 5), -e * (k + 4)));
    } else {
        pts.push(Point3::from_ints(2 * k, e * (k + 4), e * (k + 5)));
    }
    pts.push(Point3::from_ints(-2 * k - 2, e * (k + 6), -e * rho * (k + 6)));
    pts.push(Point3::from_ints(-2 * k - 2, 0, 0));
    Ok(QuarterArc::new(spec.name(), d, pts)?)
}

/// The trivial knot with two central crossings (`"unknot"`) or the torus knot
/// `T(4,5)` (`"T45"`).
pub fn builtin_quarter(name: &str, delta: &Rational) -> Result<QuarterArc, FamilyError> {
    let d = delta.clone();
    let nd = -&d;
    let pts = match name {
        "unknot" => vec![
            Point3::from_ints(4, 0, 0),
            Point3::from_ints(3, 3, -1),
            Point3::from_ints(0, 4, 0),
        ],
        "T45" => vec![
            Point3::from_ints(-12, 0, 0),
            p(&nd, &r(6), &r(-5)),
            p(&r(3), &d, &Rational::new(-3, 4)),
            p(&nd, &r(-3), &r(1)),
            p(&r(-6), &d, &r(2)),
            Point3::from_ints(0, 12, 0),
        ],
        other => return Err(FamilyError::UnknownName(other.to_string())),
    };
    Ok(QuarterArc::new(name, d, pts)?)
}

/// One verified row of the twist-family table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistRow {
    pub k: i64,
    pub rho: i64,
    pub name: String,
    pub crossing_number: i64,
    pub counts: TripleCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("{name}: embedding is invalid: {violations:?}")]
    Invalid { name: String, violations: Vec<Violation> },
    #[error("{name}: {source}")]
    Diagram { name: String, source: DiagramError },
    #[error("{name}: parity check failed in the {axis} projection")]
    Parity { name: String, axis: Axis },
    #[error("{name}: {what}: expected {expected}, found {found}")]
    Mismatch {
        name: String,
        what: &'static str,
        expected: String,
        found: String,
    },
}

fn mismatch(name: &str, what: &'static str, expected: impl ToString, found: impl ToString) -> TableError {
    TableError::Mismatch {
        name: name.to_string(),
        what,
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

/// Counts one family member and checks it against the closed forms:
/// `p_z = 2k + 2`, `p_y = 2n + 1 - p_z`, `p_x = 6n - 11`, sum `8n - 10`.
pub fn verify_twist(k: i64, rho: i64) -> Result<TwistRow, TableError> {
    let spec = TwistSpec::new(k, rho, default_delta()).expect("k >= 1 and rho = +-1");
    let name = spec.name();
    let quarter = twist_quarter_unified(&spec).expect("valid twist spec");
    let knot = symmetrize(&quarter);
    let report = validate_embedding(&knot);
    if !report.valid {
        return Err(TableError::Invalid {
            name,
            violations: report.violations,
        });
    }
    let diagrams = project_all(&knot).map_err(|source| TableError::Diagram {
        name: name.clone(),
        source,
    })?;
    if let Some(d) = diagrams.iter().find(|d| !parity_check(d)) {
        return Err(TableError::Parity { name, axis: d.axis });
    }
    let counts = counts_of(&diagrams);
    let n = spec.crossing_number();
    let trans = 2 * k + 2;
    if counts.z as i64 != trans {
        return Err(mismatch(&name, "transvergent count", trans, counts.z));
    }
    if counts.y as i64 != 2 * n + 1 - trans {
        return Err(mismatch(&name, "y-projection count", 2 * n + 1 - trans, counts.y));
    }
    if counts.x as i64 != 6 * n - 11 {
        return Err(mismatch(&name, "x-projection count", 6 * n - 11, counts.x));
    }
    if counts.sum as i64 != 8 * n - 10 {
        return Err(mismatch(&name, "sum", 8 * n - 10, counts.sum));
    }
    Ok(TwistRow {
        k,
        rho,
        name,
        crossing_number: n,
        counts,
    })
}

/// Verifies every `C(2k, ±2)` with `k <= max_k`, including the `k -> k + 2`
/// increments of `(+4, +4, +24)` in `(p_z, p_y, p_x)`. Rows are ordered by
/// `k`, then `rho = -1` before `rho = +1`.
pub fn verify_twist_table(max_k: i64) -> Result<Vec<TwistRow>, TableError> {
    let pairs: Vec<(i64, i64)> = (1..=max_k).flat_map(|k| [(k, -1), (k, 1)]).collect();
    let rows = pairs
        .par_iter()
        .map(|&(k, rho)| verify_twist(k, rho))
        .collect::<Result<Vec<_>, _>>()?;
    for (i, row) in rows.iter().enumerate() {
        let Some(next) = rows.get(i + 4) else { continue };
        let (a, b) = (&row.counts, &next.counts);
        let diff = [
            b.z as i64 - a.z as i64,
            b.y as i64 - a.y as i64,
            b.x as i64 - a.x as i64,
        ];
        if diff != [4, 4, 24] {
            return Err(mismatch(
                &next.name,
                "increment from k-2",
                "[4, 4, 24]",
                format!("{diff:?}"),
            ));
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: &str, y: &str, z: &str) -> Point3 {
        Point3::new(x.parse().unwrap(), y.parse().unwrap(), z.parse().unwrap())
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(sim_lower_bound(3), 10);
        assert_eq!(sim_lower_bound(0), 2);
        assert_eq!(sim_lower_bound(16), 50);
        assert!(BoundRecord::new(3, Some(14)).consistent());
        assert!(!BoundRecord::new(3, Some(9)).consistent());
    }

    #[test]
    fn first_case_matches_published_vertices() {
        let q = twist_quarter_case(1, 0, &default_delta()).unwrap();
        let expected = [
            pt("0", "2", "0"),
            pt("1", "-1/5", "-2"),
            pt("2", "-3", "1/5"),
            pt("3", "-6", "5"),
            pt("-4", "-7", "7"),
            pt("-4", "0", "0"),
        ];
        assert_eq!(q.vertices(), &expected[..]);
        assert_eq!(twist_quarter_case(1, 1, &default_delta()).unwrap().len(), 10);
    }

    #[test]
    fn third_case_smallest() {
        let q = twist_quarter_case(3, 0, &default_delta()).unwrap();
        let expected = [
            pt("0", "2", "0"),
            pt("1", "-1/5", "-2"),
            pt("2", "-5", "-6"),
            pt("-4", "-7", "-7"),
            pt("-4", "0", "0"),
        ];
        assert_eq!(q.vertices(), &expected[..]);
    }

    #[test]
    fn parameter_checks() {
        let d = default_delta();
        assert!(matches!(
            twist_quarter_case(2, 0, &d),
            Err(FamilyError::CaseRange { .. })
        ));
        assert!(matches!(
            twist_quarter_case(4, 0, &d),
            Err(FamilyError::CaseRange { .. })
        ));
        assert!(matches!(twist_quarter_case(5, 1, &d), Err(FamilyError::UnknownCase(5))));
        assert!(TwistSpec::new(0, 1, d.clone()).is_err());
        assert!(TwistSpec::new(1, 0, d.clone()).is_err());
        assert!(TwistSpec::new(1, 1, Rational::new(1, 2)).is_err());
        assert!(builtin_quarter("trefoil", &d).is_err());
    }

    #[test]
    fn cases_agree_with_unified() {
        let d = default_delta();
        for k in 1..=9 {
            for rho in [1, -1] {
                let (case, m) = match (k % 2, rho) {
                    (1, 1) => (1, (k - 1) / 2),
                    (0, 1) => (2, k / 2),
                    (1, _) => (3, (k - 1) / 2),
                    _ => (4, k / 2),
                };
                let a = twist_quarter_case(case, m, &d).unwrap();
                let b = twist_quarter_unified(&TwistSpec::new(k, rho, d.clone()).unwrap()).unwrap();
                assert_eq!(a, b, "k={k} rho={rho}");
            }
        }
    }

    #[test]
    fn table_one() {
        let rows = verify_twist_table(3).unwrap();
        let got: Vec<(&str, [usize; 4])> = rows
            .iter()
            .map(|r| (r.name.as_str(), [r.counts.z, r.counts.y, r.counts.x, r.counts.sum]))
            .collect();
        let want = [
            ("C(2,-2)", [4, 3, 7, 14]),
            ("C(2,2)", [4, 5, 13, 22]),
            ("C(4,-2)", [6, 5, 19, 30]),
            ("C(4,2)", [6, 7, 25, 38]),
            ("C(6,-2)", [8, 7, 31, 46]),
            ("C(6,2)", [8, 9, 37, 54]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn builtins() {
        let d = default_delta();
        let t = builtin_quarter("T45", &d).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(symmetrize(&t).len(), 20);
        assert_eq!(builtin_quarter("unknot", &d).unwrap().len(), 3);
    }
}
