//! Diagram invariants: Jones and Alexander polynomials, determinants and a
//! fingerprint table for naming knots up to mirror image.

mod alexander;
mod jones;
mod laurent;
mod pd;
pub mod standard;
pub mod table;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use alexander::{alexander, determinant_of};
pub use jones::{jones, JONES_MAX_CROSSINGS};
pub use laurent::LaurentPoly;
pub use pd::{simplify, PdCode};
pub use table::{crossing_number, identify};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("malformed PD code: {0}")]
    Malformed(String),
    #[error("diagram has {crossings} crossings after reduction, limit is {limit}")]
    TooLarge { crossings: usize, limit: usize },
    #[error("polynomial coefficient does not fit in 64 bits")]
    CoefficientOverflow,
}

/// Mirror-insensitive identification key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub determinant: u64,
    #[serde(with = "coeff_list")]
    pub alexander: LaurentPoly,
}

impl Fingerprint {
    pub fn unknot() -> Self {
        Fingerprint {
            determinant: 1,
            alexander: LaurentPoly::one(),
        }
    }
}

pub fn fingerprint(code: &PdCode) -> Result<Fingerprint, InvariantError> {
    let reduced = simplify(code)?;
    let alexander = alexander(&reduced)?;
    Ok(Fingerprint {
        determinant: determinant_of(&alexander),
        alexander,
    })
}

/// Serializes a normalized Alexander polynomial as its coefficient list.
mod coeff_list {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::LaurentPoly;

    pub fn serialize<S: Serializer>(p: &LaurentPoly, s: S) -> Result<S::Ok, S::Error> {
        p.coeffs().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<LaurentPoly, D::Error> {
        let coeffs = Vec::<i64>::deserialize(d)?;
        Ok(LaurentPoly::from_coeffs(0, &coeffs))
    }
}
