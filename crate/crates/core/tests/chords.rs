mod common;

use common::*;
use simcross::chords::{check_chord_symmetry, chords, simultaneous_chords, CircleMap};
use simcross::diagram::Locus;
use simcross::polygon::default_delta;
use simcross::{triple_count, Axis, Rational};

#[test]
fn chord_counts_match_crossing_counts() {
    for knot in [trefoil(), twist(2, 1, default_delta()), builtin("T45", default_delta())] {
        let counts = triple_count(&knot).unwrap();
        let all = simultaneous_chords(&knot).unwrap();
        assert_eq!(all.chords.len(), counts.sum);
        for axis in Axis::ALL {
            assert_eq!(chords(&knot, axis).unwrap().chords.len(), counts.get(axis));
            assert_eq!(all.count(axis), counts.get(axis));
        }
    }
}

#[test]
fn trefoil_chords() {
    let k = trefoil();
    assert_eq!(chords(&k, Axis::Z).unwrap().chords.len(), 4);
    let mut intra = [
        chords(&k, Axis::X).unwrap().chords.len(),
        chords(&k, Axis::Y).unwrap().chords.len(),
    ];
    intra.sort();
    assert_eq!(intra, [3, 7]);
    let all = simultaneous_chords(&k).unwrap();
    assert_eq!(all.chords.len(), 14);
    assert!(!all.shared_endpoints().is_empty());
    assert!(matches!(all.map(Axis::Z), CircleMap::Rotate { .. }));
}

#[test]
fn fixtures_are_symmetric() {
    let mut knots = vec![builtin("unknot", default_delta()), builtin("T45", default_delta())];
    for k in 1..=3 {
        knots.push(twist(k, 1, default_delta()));
        knots.push(twist(k, -1, default_delta()));
    }
    for knot in &knots {
        for axis in Axis::ALL {
            let cd = chords(knot, axis).unwrap();
            assert!(check_chord_symmetry(&cd, axis), "{axis}");
        }
        let all = simultaneous_chords(knot).unwrap();
        assert!(Axis::ALL.into_iter().all(|a| all.check_symmetry(a)));
    }
}

#[test]
fn perturbed_chord_breaks_symmetry() {
    for axis in Axis::ALL {
        let mut cd = chords(&trefoil(), axis).unwrap();
        let c = cd.chords.iter_mut().find(|c| !c.central).unwrap();
        c.b = Locus {
            segment: c.b.segment,
            t: &c.b.t + &Rational::new(1, 1000),
        };
        assert!(!check_chord_symmetry(&cd, axis), "{axis}");
    }
}
