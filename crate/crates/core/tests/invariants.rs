mod common;

use common::*;
use proptest::prelude::*;
use simcross::diagram::project_all;
use simcross::invariants::standard::{braid_closure_pd, rational_knot_pd, torus_knot_pd};
use simcross::invariants::table::{table, SOURCES};
use simcross::invariants::{alexander, determinant_of, fingerprint, identify, jones, simplify, InvariantError, PdCode};
use simcross::polygon::default_delta;
use simcross::{Axis, LaurentPoly, Rational};

fn jones_terms(p: &LaurentPoly) -> Vec<(i64, i64)> {
    p.terms().collect()
}

#[test]
fn goeritz_oracle_on_reference_diagrams() {
    assert_eq!(goeritz_determinant(&pd(TREFOIL_PD)), 3);
    assert_eq!(goeritz_determinant(&pd(FIGURE_EIGHT_PD)), 5);
    assert_eq!(determinant_of(&alexander(&pd(TREFOIL_PD)).unwrap()), 3);
    assert_eq!(determinant_of(&alexander(&pd(FIGURE_EIGHT_PD)).unwrap()), 5);
}

#[test]
fn figure_eight_alexander() {
    let a = alexander(&pd(FIGURE_EIGHT_PD)).unwrap();
    assert_eq!(a, LaurentPoly::from_coeffs(0, &[-1, 3, -1]));
}

#[test]
fn jones_matches_state_sum_oracle() {
    for (code, w) in [(TREFOIL_PD, TREFOIL_WRITHE), (FIGURE_EIGHT_PD, FIGURE_EIGHT_WRITHE)] {
        let code = pd(code);
        assert_eq!(code.writhe().unwrap(), w);
        assert_eq!(jones_terms(&jones(&code).unwrap()), brute_force_jones(&code, w));
    }
    assert_eq!(
        jones_terms(&jones(&pd(TREFOIL_PD)).unwrap()),
        vec![(-4, -1), (-3, 1), (-1, 1)]
    );
}

#[test]
fn table_determinants_match_goeritz() {
    for (name, source) in SOURCES {
        let code = source.diagram();
        let fp = fingerprint(&code).unwrap();
        assert_eq!(fp.determinant, goeritz_determinant(&code), "{name}");
        assert!(identify(&fp).contains(&name.to_string()), "{name}");
    }
    assert_eq!(table().len(), SOURCES.len());
}

#[test]
fn identification_examples() {
    assert_eq!(identify(&fingerprint(&pd(TREFOIL_PD)).unwrap()), vec!["3_1"]);
    assert_eq!(identify(&fingerprint(&PdCode::default()).unwrap()), vec!["unknot"]);
    // 7_4 and 9_2 share a fingerprint.
    let both = identify(&fingerprint(&rational_knot_pd(&[3, 1, 3])).unwrap());
    assert_eq!(both, vec!["7_4", "9_2"]);
}

#[test]
fn twist_knot_determinants() {
    // Twist knot with n crossings is the rational knot [n-2, 2].
    for n in 3..=8i64 {
        let code = rational_knot_pd(&[n - 2, 2]);
        assert_eq!(goeritz_determinant(&code), (2 * n - 3) as u64);
        assert_eq!(fingerprint(&code).unwrap().determinant, (2 * n - 3) as u64);
    }
}

#[test]
fn jones_rejects_large_diagrams() {
    let code = torus_knot_pd(4, 5);
    assert_eq!(simplify(&code).unwrap().len(), 15);
    assert!(jones(&code).is_ok());
    let big = torus_knot_pd(5, 6);
    assert!(matches!(
        jones(&big),
        Err(InvariantError::TooLarge {
            crossings: 24,
            limit: 18
        })
    ));
}

#[test]
fn malformed_codes_are_errors() {
    assert!(alexander(&pd("X(1,2,3,4)")).is_err());
    assert!(simplify(&pd("X(1,1,1,1)")).is_err());
    assert!(fingerprint(&pd("X(4,1,3,2) X(2,3,1,4)")).is_err());
}

#[test]
fn projections_share_fingerprint_and_jones() {
    let fixtures = [
        (builtin("unknot", default_delta()), "unknot"),
        (trefoil(), "3_1"),
        (twist(1, 1, default_delta()), "4_1"),
        (twist(2, -1, default_delta()), "5_2"),
        (twist(2, 1, default_delta()), "6_1"),
        (builtin("T45", default_delta()), "T(4,5)"),
    ];
    for (knot, name) in fixtures {
        let diagrams = project_all(&knot).unwrap();
        let fps: Vec<_> = diagrams.iter().map(|d| fingerprint(&d.pd_code).unwrap()).collect();
        assert!(fps.iter().all(|f| *f == fps[0]), "{name}");
        assert!(identify(&fps[0]).contains(&name.to_string()), "{name}");
        for d in &diagrams {
            assert_eq!(
                determinant_of(&alexander(&d.pd_code).unwrap()),
                goeritz_determinant(&d.pd_code)
            );
        }
        // Jones only where every reduced projection is within the state-sum cap.
        let jv: Vec<_> = diagrams.iter().filter_map(|d| jones(&d.pd_code).ok()).collect();
        assert!(jv.iter().all(|j| *j == jv[0]), "{name}");
        if name == "unknot" || name == "3_1" || name == "4_1" {
            assert_eq!(jv.len(), 3, "{name}");
        }
    }
}

#[test]
fn trefoil_projection_jones_matches_oracle() {
    let [_, _, z] = project_all(&trefoil()).unwrap();
    assert_eq!(z.axis, Axis::Z);
    let reduced = simplify(&z.pd_code).unwrap();
    assert!(reduced.len() <= 4);
    assert_eq!(fingerprint(&reduced).unwrap(), fingerprint(&z.pd_code).unwrap());
    let w = reduced.writhe().unwrap();
    assert_eq!(jones_terms(&jones(&z.pd_code).unwrap()), brute_force_jones(&reduced, w));
    assert_eq!(
        jones_terms(&jones(&z.pd_code).unwrap()),
        brute_force_jones(&z.pd_code, z.writhe())
    );
}

#[test]
fn scaled_twist_embedding_keeps_fingerprints() {
    let a = project_all(&twist(3, 1, default_delta())).unwrap();
    let b = project_all(&twist(3, 1, Rational::new(1, 10))).unwrap();
    for (da, db) in a.iter().zip(&b) {
        assert_eq!(fingerprint(&da.pd_code).unwrap(), fingerprint(&db.pd_code).unwrap());
    }
}

fn braid_word() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2usize..=4).prop_flat_map(|strands| {
        let gen = (1..strands as i32, any::<bool>()).prop_map(|(g, s)| if s { g } else { -g });
        (Just(strands), prop::collection::vec(gen, 1..10))
    })
}

fn is_knot(strands: usize, word: &[i32]) -> bool {
    let mut perm: Vec<usize> = (0..strands).collect();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        perm.swap(i, i + 1);
    }
    let mut at = 0;
    for step in 1..=strands {
        at = perm[at];
        if at == 0 {
            return step == strands;
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn simplify_preserves_invariants((strands, word) in braid_word()) {
        prop_assume!(is_knot(strands, &word));
        let code = braid_closure_pd(strands, &word);
        let reduced = simplify(&code).unwrap();
        prop_assert!(reduced.len() <= code.len());
        prop_assert_eq!(alexander(&reduced).unwrap(), alexander(&code).unwrap());
        prop_assert_eq!(jones(&reduced).unwrap(), jones(&code).unwrap());
        prop_assert_eq!(
            jones_terms(&jones(&code).unwrap()),
            brute_force_jones(&code, code.writhe().unwrap())
        );
        prop_assert_eq!(determinant_of(&alexander(&code).unwrap()), goeritz_determinant(&code));
        prop_assert_eq!(simplify(&reduced).unwrap(), reduced);
    }
}
