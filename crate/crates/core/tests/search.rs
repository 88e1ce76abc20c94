use simcross::search::{read_catalog, run_search, SearchConfig};
use simcross::sim_lower_bound;

fn run(cfg: &SearchConfig, threads: usize) -> (Vec<u8>, simcross::search::SearchStats) {
    let mut out = Vec::new();
    let stats = run_search(cfg, threads, &mut out).unwrap();
    (out, stats)
}

#[test]
fn catalog_is_independent_of_worker_count() {
    let cfg = SearchConfig {
        seed: 7,
        samples: 600,
        ..SearchConfig::default()
    };
    let (a, sa) = run(&cfg, 1);
    let (b, sb) = run(&cfg, 3);
    assert_eq!(a, b);
    assert_eq!(sa, sb);
    assert!(sa.accepted > 0);
    assert_eq!(sa.attempted, 600);
    assert_eq!(
        sa.attempted,
        sa.rejected_quarter + sa.invalid + sa.general_position + sa.accepted
    );
}

#[test]
fn entries_revalidate_and_respect_bounds() {
    let cfg = SearchConfig {
        seed: 11,
        samples: 300,
        ..SearchConfig::default()
    };
    let (bytes, stats) = run(&cfg, 0);
    let entries = read_catalog(std::str::from_utf8(&bytes).unwrap()).unwrap();
    assert_eq!(entries.len() as u64, stats.accepted);
    assert!(entries.windows(2).all(|w| w[0].index < w[1].index));
    for e in &entries {
        assert!(e.revalidate(), "sample {}", e.index);
        assert_eq!(e.p_z % 2, 0);
        assert_eq!(e.p_x % 2, 1);
        assert_eq!(e.p_y % 2, 1);
        assert_eq!(e.sum, e.p_x + e.p_y + e.p_z);
        if let Some(n) = e.known_crossing_number() {
            assert!(e.sum as u64 >= sim_lower_bound(n));
        }
    }
    assert_eq!(stats.bound_violations, 0);
}

#[test]
fn tampered_entry_fails_revalidation() {
    let cfg = SearchConfig {
        seed: 3,
        samples: 50,
        ..SearchConfig::default()
    };
    let (bytes, _) = run(&cfg, 1);
    let mut entry = read_catalog(std::str::from_utf8(&bytes).unwrap()).unwrap().remove(0);
    entry.p_z += 2;
    entry.sum += 2;
    assert!(!entry.revalidate());
}

#[test]
fn bad_config_is_rejected() {
    let cfg = SearchConfig {
        coord_bound: 1,
        ..SearchConfig::default()
    };
    assert!(run_search(&cfg, 1, &mut Vec::new()).is_err());
}
