//! Independent oracles frozen into tests.
//!
//! The parity predicates in `cyclic` (`is_above`, `opposite_sides`,
//! upper/lower facets of a simplex) are cross-checked against exact integer
//! orientation determinants of points on the moment curve
//! `t ↦ (t, t², …, t^k)`. The Bruhat enumeration is cross-checked against a
//! brute-force subset filter, the `d = 1` case against permutations, and the
//! exact-cover enumeration of the Stasheff–Tamari posets against
//! breadth-first flips.

use std::collections::BTreeSet;

use higher_bruhat::bruhat::{enumerate_bruhat, is_consistent};
use higher_bruhat::cyclic::{
    enumerate_tamari, enumerate_tamari_flip, is_above, lower_facets_simplex, opposite_sides,
    upper_facets_simplex,
};
use higher_bruhat::subsets::{k_subsets, LabelSet};

/// Exact integer determinant by cofactor expansion (matrices stay tiny).
fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0i128;
    for (j, &entry) in m[0].iter().enumerate() {
        if entry == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * entry * det(&minor);
    }
    total
}

/// Homogeneous moment-curve point `(1, t, t², …, t^k)`.
fn moment_row(t: u32, k: usize) -> Vec<i128> {
    let mut row = Vec::with_capacity(k + 1);
    let mut pow = 1i128;
    row.push(1);
    for _ in 0..k {
        pow *= t as i128;
        row.push(pow);
    }
    row
}

/// `det` of the homogeneous points of `f` (ascending) followed by `extra`.
fn bordered_det(f: LabelSet, extra: Vec<i128>) -> i128 {
    let k = f.len();
    let mut m: Vec<Vec<i128>> = f.elements().iter().map(|&t| moment_row(t, k)).collect();
    m.push(extra);
    det(&m)
}

/// Geometric oracle: is `v(j)` above the hyperplane through `{v(t) : t ∈ f}`
/// in the last-coordinate direction of `R^{|f|}`?
fn oracle_above(j: u32, f: LabelSet) -> bool {
    let k = f.len();
    // Coefficient of the last coordinate in the bordered determinant.
    let mut unit = vec![0i128; k + 1];
    unit[k] = 1;
    let coeff = bordered_det(f, unit);
    let value = bordered_det(f, moment_row(j, k));
    assert!(coeff != 0 && value != 0, "degenerate configuration");
    (value > 0) == (coeff > 0)
}

/// Geometric oracle: do `v(i)` and `v(j)` lie on opposite sides of the
/// hyperplane spanned by `{v(t) : t ∈ a}` in `R^{|a|}`?
fn oracle_opposite(i: u32, j: u32, a: LabelSet) -> bool {
    let k = a.len();
    let vi = bordered_det(a, moment_row(i, k));
    let vj = bordered_det(a, moment_row(j, k));
    assert!(vi != 0 && vj != 0, "degenerate configuration");
    (vi > 0) != (vj > 0)
}

const MAX_N: u32 = 8;
const MAX_D: usize = 4;

#[test]
fn is_above_matches_determinant_oracle() {
    for k in 1..=MAX_D {
        for f in k_subsets(LabelSet::interval(1, MAX_N), k) {
            for j in 1..=MAX_N {
                if f.contains(j) {
                    continue;
                }
                assert_eq!(
                    is_above(j, f).unwrap(),
                    oracle_above(j, f),
                    "is_above({j}, {:?})",
                    f.elements()
                );
            }
        }
    }
}

#[test]
fn opposite_sides_matches_determinant_oracle() {
    for k in 1..=MAX_D {
        for a in k_subsets(LabelSet::interval(1, MAX_N), k) {
            for i in 1..=MAX_N {
                for j in i + 1..=MAX_N {
                    if a.contains(i) || a.contains(j) {
                        continue;
                    }
                    assert_eq!(
                        opposite_sides(i, j, a).unwrap(),
                        oracle_opposite(i, j, a),
                        "opposite_sides({i}, {j}, {:?})",
                        a.elements()
                    );
                }
            }
        }
    }
}

#[test]
fn simplex_facets_match_determinant_oracle() {
    // A facet of the simplex on `b` is upper iff the omitted vertex lies
    // below the facet's hyperplane.
    for size in 2..=MAX_D + 1 {
        for b in k_subsets(LabelSet::interval(1, MAX_N), size) {
            let uppers: BTreeSet<LabelSet> = upper_facets_simplex(b).into_iter().collect();
            let lowers: BTreeSet<LabelSet> = lower_facets_simplex(b).into_iter().collect();
            assert!(uppers.is_disjoint(&lowers));
            assert_eq!(uppers.len() + lowers.len(), size);
            for &apex in &b.elements() {
                let facet = b.without(apex);
                let expect_upper = !oracle_above(apex, facet);
                assert_eq!(
                    uppers.contains(&facet),
                    expect_upper,
                    "facet {:?} of {:?}",
                    facet.elements(),
                    b.elements()
                );
                assert_eq!(lowers.contains(&facet), !expect_upper);
            }
        }
    }
}

#[test]
fn enumeration_matches_brute_force_consistency_filter() {
    // B(n,d) is exactly the set of consistent subsets of binom([n], d+1).
    for (n, d) in [(3u32, 1usize), (4, 1), (5, 1), (4, 2), (5, 2), (4, 3), (5, 3), (5, 4)] {
        let generators = k_subsets(LabelSet::interval(1, n), d + 1);
        let mut brute: BTreeSet<BTreeSet<LabelSet>> = BTreeSet::new();
        for mask in 0u64..(1 << generators.len()) {
            let subset: BTreeSet<LabelSet> = generators
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &g)| g)
                .collect();
            if is_consistent(&subset, n, d) {
                brute.insert(subset);
            }
        }
        let enumerated: BTreeSet<BTreeSet<LabelSet>> = enumerate_bruhat(n, d, None)
            .unwrap()
            .into_iter()
            .map(|e| e.inversions)
            .collect();
        assert_eq!(enumerated, brute, "B({n},{d})");
    }
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
    fn rec(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

#[test]
fn b_n_1_is_the_weak_order_on_permutations() {
    for n in 2..=6u32 {
        let perm_inversions: BTreeSet<BTreeSet<LabelSet>> = permutations(n)
            .into_iter()
            .map(|w| {
                let mut inv = BTreeSet::new();
                for a in 0..w.len() {
                    for b in a + 1..w.len() {
                        if w[a] > w[b] {
                            inv.insert(LabelSet::from_slice(&[w[b], w[a]]).unwrap());
                        }
                    }
                }
                inv
            })
            .collect();
        let enumerated: BTreeSet<BTreeSet<LabelSet>> = enumerate_bruhat(n, 1, None)
            .unwrap()
            .into_iter()
            .map(|e| e.inversions)
            .collect();
        assert_eq!(enumerated.len(), (1..=n as usize).product::<usize>());
        assert_eq!(enumerated, perm_inversions, "B({n},1)");
    }
}

#[test]
fn exact_cover_matches_flip_enumeration() {
    for (n, d) in [(4u32, 1usize), (5, 1), (5, 2), (6, 2), (7, 2), (5, 3), (6, 3), (6, 4), (7, 4)]
    {
        let by_cover: BTreeSet<_> = enumerate_tamari(n, d, None).unwrap().into_iter().collect();
        let labels: Vec<u32> = (1..=n).collect();
        let by_flip: BTreeSet<_> =
            enumerate_tamari_flip(&labels, d, None).unwrap().into_iter().collect();
        assert_eq!(by_cover, by_flip, "S({n},{d})");
    }
}
