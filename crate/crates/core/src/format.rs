//! The quarter-arc interchange file: a JSON document
//! `{"name": ..., "delta": "1/5", "vertices": [["4","0","0"], ...]}` with every
//! coordinate written as a coordinate string.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{Point3, Rational};
use crate::polygon::{default_delta, QuarterArc, QuarterError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed quarter file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Quarter(#[from] QuarterError),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuarterFile {
    name: String,
    #[serde(default = "default_delta")]
    delta: Rational,
    vertices: Vec<[Rational; 3]>,
}

pub fn parse_quarter(text: &str) -> Result<QuarterArc, FormatError> {
    let file: QuarterFile = serde_json::from_str(text)?;
    let vertices = file
        .vertices
        .into_iter()
        .map(|[x, y, z]| Point3::new(x, y, z))
        .collect();
    Ok(QuarterArc::new(file.name, file.delta, vertices)?)
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain values serialize")
}

/// Canonical text form; coordinates are written as integers or reduced `p/q`,
/// one vertex per line.
pub fn serialize_quarter(q: &QuarterArc) -> String {
    let vertices: Vec<String> = q
        .vertices()
        .iter()
        .map(|p| format!("    [{}, {}, {}]", json(&p.x), json(&p.y), json(&p.z)))
        .collect();
    format!(
        "{{\n  \"name\": {},\n  \"delta\": {},\n  \"vertices\": [\n{}\n  ]\n}}\n",
        json(&q.name().to_string()),
        json(q.delta()),
        vertices.join(",\n")
    )
}

pub fn read_quarter(path: &Path) -> Result<QuarterArc, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_quarter(&text)
}

pub fn write_quarter(path: &Path, q: &QuarterArc) -> Result<(), FormatError> {
    std::fs::write(path, serialize_quarter(q)).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimal_and_fraction_coordinates() {
        let q = parse_quarter(
            r#"{"name": "t", "vertices": [["-12","0","0"], ["-0.2","6","-5"], ["3","1/5","-3/4"], ["0","12","0"]]}"#,
        )
        .unwrap();
        assert_eq!(q.delta(), &Rational::new(1, 5));
        assert_eq!(q.vertices()[1].x, Rational::new(-1, 5));
        assert_eq!(q.vertices()[2].z, Rational::new(-3, 4));
    }

    #[test]
    fn round_trip_is_identity_on_values() {
        let text = r#"{"name":"x","delta":"0.1","vertices":[["4","0","0"],["3.50","3","-1"],["0","4","0"]]}"#;
        let q = parse_quarter(text).unwrap();
        let again = parse_quarter(&serialize_quarter(&q)).unwrap();
        assert_eq!(q, again);
        assert_eq!(serialize_quarter(&q), serialize_quarter(&again));
        assert!(serialize_quarter(&q).contains("\"7/2\""));
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(parse_quarter("{"), Err(FormatError::Json(_))));
        assert!(matches!(
            parse_quarter(r#"{"name":"x","vertices":[["1","0","0"],["2","0","0"]]}"#),
            Err(FormatError::Quarter(QuarterError::SameAxis(_)))
        ));
        assert!(parse_quarter(r#"{"name":"x","vertices":[["1/0","0","0"],["0","1","0"]]}"#).is_err());
        assert!(parse_quarter(r#"{"name":"x","vertices":[["1","0"],["0","1","0"]]}"#).is_err());
    }
}
