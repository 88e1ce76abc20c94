//! Polygonal knots with two orthogonal strong-inversion axes: construction from
//! quarter arcs, exact crossing counts in the three coordinate projections,
//! diagram invariants, chord diagrams and a reproducible random search.

pub mod chords;
pub mod diagram;
pub mod exact;
pub mod families;
pub mod format;
pub mod invariants;
pub mod polygon;
pub mod search;

pub use diagram::{parity_check, project_and_count, triple_count, Crossing, Diagram, DiagramError, Locus, TripleCount};
pub use exact::{half_turn, project, Axis, Point2, Point2WithDepth, Point3, Rational};
pub use families::{
    builtin_quarter, sim_lower_bound, twist_quarter_case, twist_quarter_unified, verify_twist_table, FamilyError,
    TwistSpec,
};
pub use format::{parse_quarter, read_quarter, serialize_quarter, write_quarter, FormatError};
pub use invariants::{Fingerprint, LaurentPoly, PdCode};
pub use polygon::{symmetrize, validate_embedding, KnotEmbedding, QuarterArc, ValidationReport, Violation};
