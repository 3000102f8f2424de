//! Property-based invariants for the subset layer and the poset tools.

use std::cmp::Ordering;
use std::sync::OnceLock;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use higher_bruhat::bruhat::{covers_up, enumerate_bruhat};
use higher_bruhat::poset::{build_hasse, moebius, HasseDiagram};
use higher_bruhat::subsets::{lex_compare, packet_of, standardize, LabelSet};

fn subset_strategy(max_label: u32, len: usize) -> impl Strategy<Value = LabelSet> {
    prop::collection::btree_set(1..=max_label, len)
        .prop_map(|s| LabelSet::from_slice(&s.into_iter().collect::<Vec<_>>()).unwrap())
}

proptest! {
    #[test]
    fn lex_compare_is_a_total_order(
        a in subset_strategy(12, 4),
        b in subset_strategy(12, 4),
        c in subset_strategy(12, 4),
    ) {
        let ab = lex_compare(a, b).unwrap();
        let ba = lex_compare(b, a).unwrap();
        prop_assert_eq!(ab, ba.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        // Agrees with lexicographic comparison of sorted element vectors.
        prop_assert_eq!(ab, a.elements().cmp(&b.elements()));
        // Transitivity.
        let bc = lex_compare(b, c).unwrap();
        let ac = lex_compare(a, c).unwrap();
        if ab != Ordering::Greater && bc != Ordering::Greater {
            prop_assert_ne!(ac, Ordering::Greater);
        }
    }

    #[test]
    fn standardize_is_idempotent_and_order_preserving(
        seq in prop::collection::btree_set(-1000i64..1000, 1..10)
            .prop_flat_map(|s| Just(s.into_iter().collect::<Vec<_>>()).prop_shuffle())
    ) {
        let std1 = standardize(&seq).unwrap();
        let as_i64: Vec<i64> = std1.iter().map(|&v| v as i64).collect();
        prop_assert_eq!(&standardize(&as_i64).unwrap(), &std1);
        // A permutation of 1..=p with the same relative order as the input.
        let mut sorted = std1.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (1..=seq.len() as u32).collect::<Vec<_>>());
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                prop_assert_eq!(seq[i] < seq[j], std1[i] < std1[j]);
            }
        }
    }

    #[test]
    fn packets_are_lex_sorted_one_element_deletions(g in subset_strategy(12, 5)) {
        let p = packet_of(g);
        prop_assert_eq!(p.generator, g);
        prop_assert_eq!(p.members.len(), g.len());
        for w in p.members.windows(2) {
            prop_assert_eq!(lex_compare(w[0], w[1]).unwrap(), Ordering::Less);
        }
        for m in &p.members {
            prop_assert!(m.is_subset_of(g));
            prop_assert_eq!(m.len(), g.len() - 1);
        }
        // Each element of g is omitted exactly once.
        let omitted: Vec<u32> =
            p.members.iter().map(|m| g.difference(*m).min().unwrap()).collect();
        let mut sorted = omitted.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, g.elements());
    }

    #[test]
    fn cover_relation_adds_one_inversion(idx in 0usize..8) {
        let elements = enumerate_bruhat(4, 2, None).unwrap();
        let e = &elements[idx % elements.len()];
        for up in covers_up(e) {
            prop_assert_eq!(up.inversions.len(), e.inversions.len() + 1);
            prop_assert!(e.inversions.is_subset(&up.inversions));
        }
    }
}

fn b52_hasse() -> &'static HasseDiagram {
    static HASSE: OnceLock<HasseDiagram> = OnceLock::new();
    HASSE.get_or_init(|| {
        let elements = enumerate_bruhat(5, 2, None).unwrap();
        build_hasse(
            "bruhat",
            &elements,
            |e| serde_json::to_string(&e.to_json()).unwrap(),
            covers_up,
        )
        .unwrap()
    })
}

/// The defining recursion of the Möbius function, replayed over 100 random
/// intervals of B(5,2) with a fixed seed.
#[test]
fn moebius_delta_sums_on_random_intervals() {
    let h = b52_hasse();
    let mut rng = ChaCha8Rng::seed_from_u64(20260823);
    let mut checked = 0;
    while checked < 100 {
        let a = rng.gen_range(0..h.len());
        let b = rng.gen_range(0..h.len());
        if !h.leq(a, b) {
            continue;
        }
        let total: i64 = h.interval(a, b).into_iter().map(|z| moebius(h, a, z).unwrap()).sum();
        let expected = if a == b { 1 } else { 0 };
        assert_eq!(total, expected, "delta sum over [{a}, {b}]");
        checked += 1;
    }
}
