//! Bundled fingerprint table for knot identification.

use std::sync::OnceLock;

use super::standard::{rational_knot_pd, torus_knot_pd};
use super::{fingerprint, Fingerprint, LaurentPoly, PdCode};

const TABLE_TSV: &str = include_str!("../../data/fingerprints.tsv");

/// How a table entry's standard diagram is drawn.
#[derive(Clone, Copy, Debug)]
pub enum Source {
    Unknot,
    Rational(&'static [i64]),
    Torus(usize, usize),
}

impl Source {
    pub fn diagram(&self) -> PdCode {
        match *self {
            Source::Unknot => PdCode::default(),
            Source::Rational(conway) => rational_knot_pd(conway),
            Source::Torus(p, q) => torus_knot_pd(p, q),
        }
    }
}

/// Knots in the bundled table: every 2-bridge knot through nine crossings
/// plus the torus knots used by the families.
pub const SOURCES: &[(&str, Source)] = &[
    ("unknot", Source::Unknot),
    ("3_1", Source::Rational(&[3])),
    ("4_1", Source::Rational(&[2, 2])),
    ("5_1", Source::Rational(&[5])),
    ("5_2", Source::Rational(&[3, 2])),
    ("6_1", Source::Rational(&[4, 2])),
    ("6_2", Source::Rational(&[3, 1, 2])),
    ("6_3", Source::Rational(&[2, 1, 1, 2])),
    ("7_1", Source::Rational(&[7])),
    ("7_2", Source::Rational(&[5, 2])),
    ("7_3", Source::Rational(&[4, 3])),
    ("7_4", Source::Rational(&[3, 1, 3])),
    ("7_5", Source::Rational(&[3, 2, 2])),
    ("7_6", Source::Rational(&[2, 2, 1, 2])),
    ("7_7", Source::Rational(&[2, 1, 1, 1, 2])),
    ("8_1", Source::Rational(&[6, 2])),
    ("8_2", Source::Rational(&[5, 1, 2])),
    ("8_3", Source::Rational(&[4, 4])),
    ("8_4", Source::Rational(&[4, 1, 3])),
    ("8_6", Source::Rational(&[3, 3, 2])),
    ("8_7", Source::Rational(&[4, 1, 1, 2])),
    ("8_8", Source::Rational(&[2, 3, 1, 2])),
    ("8_9", Source::Rational(&[3, 1, 1, 3])),
    ("8_11", Source::Rational(&[3, 2, 1, 2])),
    ("8_12", Source::Rational(&[2, 2, 2, 2])),
    ("8_13", Source::Rational(&[3, 1, 1, 1, 2])),
    ("8_14", Source::Rational(&[2, 2, 1, 1, 2])),
    ("8_19", Source::Torus(3, 4)),
    ("9_1", Source::Rational(&[9])),
    ("9_2", Source::Rational(&[7, 2])),
    ("9_3", Source::Rational(&[6, 3])),
    ("9_4", Source::Rational(&[5, 4])),
    ("9_5", Source::Rational(&[5, 1, 3])),
    ("9_6", Source::Rational(&[5, 2, 2])),
    ("9_7", Source::Rational(&[3, 4, 2])),
    ("9_8", Source::Rational(&[2, 4, 1, 2])),
    ("9_9", Source::Rational(&[4, 2, 3])),
    ("9_10", Source::Rational(&[3, 3, 3])),
    ("9_11", Source::Rational(&[4, 1, 2, 2])),
    ("9_12", Source::Rational(&[4, 2, 1, 2])),
    ("9_13", Source::Rational(&[3, 2, 1, 3])),
    ("9_14", Source::Rational(&[4, 1, 1, 1, 2])),
    ("9_15", Source::Rational(&[2, 3, 2, 2])),
    ("9_17", Source::Rational(&[2, 1, 3, 1, 2])),
    ("9_18", Source::Rational(&[3, 2, 2, 2])),
    ("9_19", Source::Rational(&[2, 3, 1, 1, 2])),
    ("9_20", Source::Rational(&[3, 1, 2, 1, 2])),
    ("9_21", Source::Rational(&[3, 1, 1, 2, 2])),
    ("9_23", Source::Rational(&[2, 2, 1, 2, 2])),
    ("9_26", Source::Rational(&[3, 1, 1, 1, 1, 2])),
    ("9_27", Source::Rational(&[2, 1, 2, 1, 1, 2])),
    ("9_31", Source::Rational(&[2, 1, 1, 1, 1, 1, 2])),
    ("10_124", Source::Torus(3, 5)),
    ("T(4,5)", Source::Torus(4, 5)),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub name: String,
    pub fingerprint: Fingerprint,
}

/// Renders the table file from the standard diagrams.
pub fn generate_table() -> String {
    let mut out = String::new();
    for (name, source) in SOURCES {
        let fp = fingerprint(&source.diagram()).expect("standard diagrams have fingerprints");
        out.push_str(&format_row(name, &fp));
    }
    out
}

fn format_row(name: &str, fp: &Fingerprint) -> String {
    let coeffs: Vec<String> = fp.alexander.coeffs().iter().map(i64::to_string).collect();
    format!("{name}\t{}\t{}\n", fp.determinant, coeffs.join(","))
}

/// Parses rows of `name<TAB>determinant<TAB>c0,c1,...`.
pub fn parse_table(text: &str) -> Result<Vec<TableEntry>, String> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [name, det, coeffs] = fields[..] else {
            return Err(format!("line {}: expected three tab-separated fields", i + 1));
        };
        let determinant = det.parse().map_err(|e| format!("line {}: {e}", i + 1))?;
        let coeffs: Vec<i64> = coeffs
            .split(',')
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|e| format!("line {}: {e}", i + 1))?;
        entries.push(TableEntry {
            name: name.to_string(),
            fingerprint: Fingerprint {
                determinant,
                alexander: LaurentPoly::from_coeffs(0, &coeffs),
            },
        });
    }
    Ok(entries)
}

pub fn table() -> &'static [TableEntry] {
    static TABLE: OnceLock<Vec<TableEntry>> = OnceLock::new();
    TABLE.get_or_init(|| parse_table(TABLE_TSV).expect("bundled fingerprint table parses"))
}

/// Names in the table sharing this fingerprint. Matches hold up to mirror
/// image, and a match does not prove the knot type.
pub fn identify(fp: &Fingerprint) -> Vec<String> {
    table()
        .iter()
        .filter(|e| &e.fingerprint == fp)
        .map(|e| e.name.clone())
        .collect()
}

/// Crossing number encoded in a Rolfsen-style name (`unknot` is 0).
pub fn crossing_number(name: &str) -> Option<usize> {
    if name == "unknot" {
        return Some(0);
    }
    let (n, _) = name.split_once('_')?;
    n.parse().ok()
}
