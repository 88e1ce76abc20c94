mod common;

use common::*;
use proptest::prelude::*;
use simcross::diagram::project_all;
use simcross::exact::{classify_intersection, Classification, Segment2, Vec2};
use simcross::polygon::default_delta;
use simcross::search::{sample_quarter, sample_stream, SearchConfig};
use simcross::{
    half_turn, parity_check, symmetrize, validate_embedding, Axis, KnotEmbedding, Point2, Point3, Rational,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=7).prop_map(|(n, d)| Rational::new(n, d))
}

fn point3() -> impl Strategy<Value = Point3> {
    (rational(), rational(), rational()).prop_map(|(x, y, z)| Point3::new(x, y, z))
}

fn point2() -> impl Strategy<Value = Point2> {
    (rational(), rational()).prop_map(|(u, v)| Point2::new(u, v))
}

fn segment() -> impl Strategy<Value = Segment2> {
    (point2(), point2())
        .prop_filter("non-degenerate", |(a, b)| a != b)
        .prop_map(|(a, b)| Segment2::new(a, b))
}

proptest! {
    #[test]
    fn half_turns_form_klein_group(p in point3()) {
        for a in Axis::ALL {
            prop_assert_eq!(half_turn(a, &half_turn(a, &p)), p.clone());
        }
        prop_assert_eq!(half_turn(Axis::X, &half_turn(Axis::Y, &p)), half_turn(Axis::Z, &p));
        prop_assert_eq!(half_turn(Axis::Y, &half_turn(Axis::X, &p)), half_turn(Axis::Z, &p));
    }

    #[test]
    fn classification_is_symmetric(s1 in segment(), s2 in segment()) {
        prop_assert_eq!(classify_intersection(&s1, &s2), classify_intersection(&s2, &s1).swapped());
    }

    #[test]
    fn classification_is_translation_invariant(s1 in segment(), s2 in segment(), du in rational(), dv in rational()) {
        let d = Vec2::new(du.clone(), dv.clone());
        let shift = |p: &Point2| Point2::new(&p.u + &du, &p.v + &dv);
        let moved = classify_intersection(&s1.translate(&d), &s2.translate(&d));
        let expected = match classify_intersection(&s1, &s2) {
            Classification::TransverseInterior(p) => Classification::TransverseInterior(shift(&p)),
            Classification::EndpointIncidence { point, first, second } => {
                Classification::EndpointIncidence { point: shift(&point), first, second }
            }
            other => other,
        };
        prop_assert_eq!(moved, expected);
    }

    #[test]
    fn crossings_lie_exactly_on_both_segments(s1 in segment(), s2 in segment()) {
        if let Classification::TransverseInterior(p) = classify_intersection(&s1, &s2) {
            for s in [&s1, &s2] {
                prop_assert!(s.a.to(&p).cross(&s.direction()).is_zero());
            }
        }
    }

    #[test]
    fn random_embeddings_obey_parity(seed in any::<u64>(), index in 0u64..1000) {
        let cfg = SearchConfig::default();
        let Ok(q) = sample_quarter(&mut sample_stream(seed, index), &cfg, "random") else {
            return Ok(());
        };
        let knot = symmetrize(&q);
        prop_assume!(validate_embedding(&knot).valid);
        if let Ok(diagrams) = project_all(&knot) {
            for d in &diagrams {
                prop_assert!(parity_check(d), "{:?} projection", d.axis);
                prop_assert_eq!(d.pd_code.len(), d.crossing_count);
            }
            prop_assert!(diagrams[0].crossing_count >= 1 && diagrams[1].crossing_count >= 1);
        }
    }

    #[test]
    fn scaling_leaves_diagrams_unchanged(num in 1i64..20, den in 1i64..20, seed in any::<u64>()) {
        let cfg = SearchConfig::default();
        let Ok(q) = sample_quarter(&mut sample_stream(seed, 0), &cfg, "random") else {
            return Ok(());
        };
        let factor = Rational::new(num, den);
        let a = project_all(&symmetrize(&q));
        let b = project_all(&symmetrize(&q.scaled(&factor).unwrap()));
        match (a, b) {
            (Ok(a), Ok(b)) => {
                for (da, db) in a.iter().zip(&b) {
                    prop_assert_eq!(&da.pd_code, &db.pd_code);
                    prop_assert_eq!(&da.gauss_code, &db.gauss_code);
                    prop_assert_eq!(da.writhe(), db.writhe());
                    prop_assert_eq!(da.crossing_count, db.crossing_count);
                }
            }
            (a, b) => prop_assert_eq!(a.is_ok(), b.is_ok()),
        }
    }
}

#[test]
fn family_diagrams_survive_scaling() {
    let q = simcross::builtin_quarter("T45", &default_delta()).unwrap();
    let a = project_all(&symmetrize(&q)).unwrap();
    let b = project_all(&symmetrize(&q.scaled(&Rational::new(7, 3)).unwrap())).unwrap();
    for (da, db) in a.iter().zip(&b) {
        assert_eq!(da.pd_code, db.pd_code);
        assert_eq!(
            da.crossings.iter().map(|c| c.sign).collect::<Vec<_>>(),
            db.crossings.iter().map(|c| c.sign).collect::<Vec<_>>()
        );
    }
}

#[test]
fn every_family_member_is_valid() {
    let mut knots: Vec<KnotEmbedding> = (1..=6)
        .flat_map(|k| [twist(k, 1, default_delta()), twist(k, -1, default_delta())])
        .collect();
    knots.push(builtin("unknot", default_delta()));
    knots.push(builtin("T45", default_delta()));
    for k in &knots {
        assert!(validate_embedding(k).valid);
        for d in project_all(k).unwrap() {
            assert!(parity_check(&d));
            assert!(d.crossings.iter().all(|c| c.over_depth > c.under_depth));
            assert!(d.crossings.iter().all(|c| c.is_central == c.position.is_origin()));
        }
    }
}
