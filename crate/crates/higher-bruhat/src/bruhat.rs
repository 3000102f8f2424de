//! Higher Bruhat orders `B(n,d)`.
//!
//! Elements are represented canonically by their inversion sets: a set of
//! `(d+1)`-subsets of `[n]` is the inversion set of an admissible order iff
//! its restriction to every `(d+1)`-packet is an initial or final segment in
//! lexicographic order (Ziegler's consistency criterion). The partial order
//! is by single-element growth of inversion sets; covering relations add one
//! `(d+1)`-subset while preserving consistency.
//!
//! `B(n,0)` is the set of subsets of `[n]` ordered by inclusion; a subset is
//! its own inversion set (stored as a set of singletons).
//!
//! ```
//! use higher_bruhat::bruhat::{bruhat_leq, enumerate_bruhat, BruhatElement};
//!
//! // B(5,1) is the weak order on permutations of [5].
//! assert_eq!(enumerate_bruhat(5, 1, None).unwrap().len(), 120);
//! assert_eq!(enumerate_bruhat(5, 2, None).unwrap().len(), 62);
//!
//! let bottom = BruhatElement::bottom(5, 2);
//! let top = BruhatElement::top(5, 2);
//! assert!(bruhat_leq(&bottom, &top));
//! assert_eq!(top.inversions.len(), 10); // every 3-subset of [5]
//! ```

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::subsets::{k_subsets, packet_of, LabelSet};

/// Errors from Bruhat-order operations.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BruhatError {
    /// Sequence is not a permutation of all d-subsets of `[n]`.
    #[error("sequence is not a permutation of the {expected} d-subsets of [n]")]
    NotAPermutation {
        /// Number of subsets expected.
        expected: usize,
    },
    /// The order is not admissible.
    #[error("order is not admissible: packet of {0} occurs in neither lex nor reverse-lex order")]
    NotAdmissible(LabelSet),
    /// A member set has the wrong size or strays outside `[n]`.
    #[error("malformed member {member}: expected a {expected}-subset of [{n}]")]
    MalformedMember {
        /// Offending set.
        member: LabelSet,
        /// Required cardinality.
        expected: usize,
        /// Ground set bound.
        n: u32,
    },
    /// The requested set is not consistent.
    #[error("set is not consistent")]
    NotConsistent,
    /// Enumeration exceeded its configured budget.
    #[error("enumeration budget exceeded after {discovered} elements")]
    BudgetExceeded {
        /// Elements discovered before giving up.
        discovered: usize,
    },
    /// No single-step connection exists between two nested targets.
    #[error("targets are not connectable by single consistent steps")]
    NotConnectable,
    /// Targets are not nested or not consistent.
    #[error("targets must be nested and consistent")]
    BadTargets,
}

/// A total order on all `d`-subsets of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleOrder {
    /// Ground set bound.
    pub n: u32,
    /// Cardinality of the ordered subsets.
    pub d: usize,
    /// The subsets in order.
    pub sequence: Vec<LabelSet>,
}

/// An element of `B(n,d)`, canonically represented by its inversion set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BruhatElement {
    /// Ground set bound.
    pub n: u32,
    /// Order dimension; inversions are `(d+1)`-subsets of `[n]`.
    pub d: usize,
    /// Lex-sorted inversion set.
    pub inversions: BTreeSet<LabelSet>,
}

impl BruhatElement {
    /// Builds an element after checking consistency.
    pub fn new(
        n: u32,
        d: usize,
        inversions: BTreeSet<LabelSet>,
    ) -> Result<Self, BruhatError> {
        check_members(&inversions, n, d + 1)?;
        if !is_consistent(&inversions, n, d) {
            return Err(BruhatError::NotConsistent);
        }
        Ok(BruhatElement { n, d, inversions })
    }

    /// The minimum element `0̂` (empty inversion set).
    pub fn bottom(n: u32, d: usize) -> Self {
        BruhatElement { n, d, inversions: BTreeSet::new() }
    }

    /// The maximum element `1̂` (full inversion set).
    pub fn top(n: u32, d: usize) -> Self {
        let inversions = k_subsets(LabelSet::interval(1, n), d + 1).into_iter().collect();
        BruhatElement { n, d, inversions }
    }

    /// Number of inversions (the rank in the graded order).
    pub fn rank(&self) -> usize {
        self.inversions.len()
    }

    /// Canonical JSON form.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "type": "bruhat",
            "n": self.n,
            "d": self.d,
            "inversions": self.inversions.iter().map(|s| s.elements()).collect::<Vec<_>>(),
        })
    }

    /// Parses the canonical JSON form.
    pub fn from_json(v: &serde_json::Value) -> Result<Self, BruhatError> {
        let n = v["n"].as_u64().ok_or(BruhatError::NotConsistent)? as u32;
        let d = v["d"].as_u64().ok_or(BruhatError::NotConsistent)? as usize;
        let mut inversions = BTreeSet::new();
        for arr in v["inversions"].as_array().into_iter().flatten() {
            let labels: Vec<u32> = arr
                .as_array()
                .into_iter()
                .flatten()
                .filter_map(|x| x.as_u64().map(|u| u as u32))
                .collect();
            inversions.insert(LabelSet::from_slice(&labels).map_err(|_| BruhatError::NotConsistent)?);
        }
        BruhatElement::new(n, d, inversions)
    }
}

fn check_members(members: &BTreeSet<LabelSet>, n: u32, size: usize) -> Result<(), BruhatError> {
    let ground = LabelSet::interval(1, n);
    for &m in members {
        if m.len() != size || !m.is_subset_of(ground) {
            return Err(BruhatError::MalformedMember { member: m, expected: size, n });
        }
    }
    Ok(())
}

/// Checks that every packet of a `(d+1)`-subset occurs in lex or reverse-lex
/// relative order within the sequence.
pub fn is_admissible(order: &AdmissibleOrder) -> Result<bool, BruhatError> {
    let all = k_subsets(LabelSet::interval(1, order.n), order.d);
    if order.sequence.len() != all.len()
        || order.sequence.iter().collect::<BTreeSet<_>>().len() != all.len()
        || !order.sequence.iter().all(|s| all.binary_search(s).is_ok())
    {
        return Err(BruhatError::NotAPermutation { expected: all.len() });
    }
    let pos = position_map(order);
    for gen in k_subsets(LabelSet::interval(1, order.n), order.d + 1) {
        let packet = packet_of(gen);
        let positions: Vec<usize> = packet.members.iter().map(|m| pos[&m.bits()]).collect();
        let lex = positions.windows(2).all(|w| w[0] < w[1]);
        let rev = positions.windows(2).all(|w| w[0] > w[1]);
        if !lex && !rev {
            return Ok(false);
        }
    }
    Ok(true)
}

fn position_map(order: &AdmissibleOrder) -> std::collections::HashMap<u64, usize> {
    order.sequence.iter().enumerate().map(|(i, s)| (s.bits(), i)).collect()
}

/// The set of `(d+1)`-subsets whose packets occur reversed in `order`.
pub fn inversion_set(order: &AdmissibleOrder) -> Result<BruhatElement, BruhatError> {
    let pos = position_map(order);
    let mut inversions = BTreeSet::new();
    for gen in k_subsets(LabelSet::interval(1, order.n), order.d + 1) {
        let packet = packet_of(gen);
        let positions: Vec<usize> = packet.members.iter().map(|m| pos[&m.bits()]).collect();
        if positions.windows(2).all(|w| w[0] > w[1]) {
            inversions.insert(gen);
        } else if !positions.windows(2).all(|w| w[0] < w[1]) {
            return Err(BruhatError::NotAdmissible(gen));
        }
    }
    Ok(BruhatElement { n: order.n, d: order.d, inversions })
}

/// Ziegler's criterion: the restriction of `inversions` to every
/// `(d+1)`-packet (all `(d+1)`-subsets of a `(d+2)`-set) is an initial or
/// final lex segment.
pub fn is_consistent(inversions: &BTreeSet<LabelSet>, n: u32, d: usize) -> bool {
    check_packets(inversions, n, d, |_len, _total, _initial, _d| true)
}

/// Superconsistency: every packet restriction is empty, full, an initial lex
/// segment of odd length, or a final lex segment of length `≡ d (mod 2)`.
pub fn is_superconsistent(inversions: &BTreeSet<LabelSet>, n: u32, d: usize) -> bool {
    check_packets(inversions, n, d, |len, total, initial, d| {
        len == 0 || len == total || if initial { len % 2 == 1 } else { len % 2 == d % 2 }
    })
}

/// Shared packet-restriction walk. Every restriction must be an initial or
/// final lex segment, and `accept(len, total, is_initial, d)` must pass for
/// at least one valid segment reading.
fn check_packets(
    inversions: &BTreeSet<LabelSet>,
    n: u32,
    d: usize,
    accept: impl Fn(usize, usize, bool, usize) -> bool,
) -> bool {
    for gen in k_subsets(LabelSet::interval(1, n), d + 2) {
        let packet = packet_of(gen);
        let total = packet.members.len();
        let flags: Vec<bool> = packet.members.iter().map(|m| inversions.contains(m)).collect();
        let len = flags.iter().filter(|&&b| b).count();
        let initial = flags[..len].iter().all(|&b| b);
        let final_ = flags[total - len..].iter().all(|&b| b);
        if !(initial && accept(len, total, true, d)) && !(final_ && accept(len, total, false, d)) {
            return false;
        }
    }
    true
}

/// Enumerates all of `B(n,d)` by breadth-first single-element growth of
/// consistent inversion sets from the empty set.
///
/// `budget` caps the number of discovered elements (default `10^7`).
pub fn enumerate_bruhat(
    n: u32,
    d: usize,
    budget: Option<usize>,
) -> Result<Vec<BruhatElement>, BruhatError> {
    let budget = budget.unwrap_or(10_000_000);
    let all = k_subsets(LabelSet::interval(1, n), d + 1);
    let mut seen: BTreeSet<BTreeSet<LabelSet>> = BTreeSet::new();
    let mut queue: VecDeque<BTreeSet<LabelSet>> = VecDeque::new();
    let empty = BTreeSet::new();
    seen.insert(empty.clone());
    queue.push_back(empty);
    while let Some(current) = queue.pop_front() {
        for &y in &all {
            if current.contains(&y) {
                continue;
            }
            let mut next = current.clone();
            next.insert(y);
            if seen.contains(&next) || !is_consistent(&next, n, d) {
                continue;
            }
            if seen.len() >= budget {
                return Err(BruhatError::BudgetExceeded { discovered: seen.len() });
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(seen
        .into_iter()
        .map(|inversions| BruhatElement { n, d, inversions })
        .collect())
}

/// All consistent single-element extensions of `e` (the elements covering `e`).
pub fn covers_up(e: &BruhatElement) -> Vec<BruhatElement> {
    let all = k_subsets(LabelSet::interval(1, e.n), e.d + 1);
    let mut out = Vec::new();
    for y in all {
        if e.inversions.contains(&y) {
            continue;
        }
        let mut next = e.inversions.clone();
        next.insert(y);
        if is_consistent(&next, e.n, e.d) {
            out.push(BruhatElement { n: e.n, d: e.d, inversions: next });
        }
    }
    out
}

/// Comparability in `B(n,d)`: `a <= b` iff `b` is reachable from `a` by
/// single-element consistent growth (equivalently, by an admissible order
/// passing through both inversion sets).
pub fn bruhat_leq(a: &BruhatElement, b: &BruhatElement) -> bool {
    if !a.inversions.is_subset(&b.inversions) {
        return false;
    }
    connect_step_sets(&a.inversions, &b.inversions, a.n, a.d).is_some()
}

/// Finds a single-step consistent path from `from` to `to` (inversion sets,
/// `from ⊆ to`); returns the sequence of added subsets, or `None`.
fn connect_step_sets(
    from: &BTreeSet<LabelSet>,
    to: &BTreeSet<LabelSet>,
    n: u32,
    d: usize,
) -> Option<Vec<LabelSet>> {
    // Depth-first with memoized dead ends; the gap is small in all our uses.
    let gap: Vec<LabelSet> = to.difference(from).copied().collect();
    let mut dead: BTreeSet<BTreeSet<LabelSet>> = BTreeSet::new();
    fn rec(
        current: &mut BTreeSet<LabelSet>,
        gap: &[LabelSet],
        path: &mut Vec<LabelSet>,
        dead: &mut BTreeSet<BTreeSet<LabelSet>>,
        n: u32,
        d: usize,
    ) -> bool {
        if path.len() == gap.len() {
            return true;
        }
        for &y in gap {
            if current.contains(&y) {
                continue;
            }
            current.insert(y);
            let feasible = is_consistent(current, n, d) && !dead.contains(current);
            if feasible {
                path.push(y);
                if rec(current, gap, path, dead, n, d) {
                    return true;
                }
                path.pop();
                dead.insert(current.clone());
            }
            current.remove(&y);
        }
        false
    }
    let mut current = from.clone();
    let mut path = Vec::new();
    rec(&mut current, &gap, &mut path, &mut dead, n, d).then_some(path)
}

/// Orders the members of a consistent set so that every prefix is consistent
/// (the order of an unrefinable chain from `0̂` up to the set).
pub fn consistency_respecting_order(
    n: u32,
    d: usize,
    inversions: &BTreeSet<LabelSet>,
) -> Result<Vec<LabelSet>, BruhatError> {
    if !is_consistent(inversions, n, d) {
        return Err(BruhatError::NotConsistent);
    }
    connect_step_sets(&BTreeSet::new(), inversions, n, d).ok_or(BruhatError::NotConnectable)
}

/// Builds an admissible order on `(d+1)`-subsets of `[n]` whose prefix
/// inversion sets pass through every target (each a consistent set of
/// `(d+1)`-subsets; targets must be nested). Every prefix of the returned
/// order is consistent, hence the order is admissible.
pub fn admissible_order_through(
    n: u32,
    d: usize,
    targets: &[BTreeSet<LabelSet>],
) -> Result<AdmissibleOrder, BruhatError> {
    for t in targets {
        check_members(t, n, d + 1).map_err(|_| BruhatError::BadTargets)?;
        if !is_consistent(t, n, d) {
            return Err(BruhatError::BadTargets);
        }
    }
    for w in targets.windows(2) {
        if !w[0].is_subset(&w[1]) {
            return Err(BruhatError::BadTargets);
        }
    }
    let full: BTreeSet<LabelSet> =
        k_subsets(LabelSet::interval(1, n), d + 1).into_iter().collect();
    let mut waypoints: Vec<BTreeSet<LabelSet>> = Vec::new();
    waypoints.push(BTreeSet::new());
    waypoints.extend(targets.iter().cloned());
    waypoints.push(full);
    let mut sequence = Vec::new();
    for w in waypoints.windows(2) {
        let leg =
            connect_step_sets(&w[0], &w[1], n, d).ok_or(BruhatError::NotConnectable)?;
        sequence.extend(leg);
    }
    let order = AdmissibleOrder { n, d: d + 1, sequence };
    debug_assert_eq!(is_admissible(&order), Ok(true));
    Ok(order)
}

/// Builds an admissible order on `d`-subsets of `[n]` whose equivalence class
/// has the prescribed consistent inversion set (of `(d+1)`-subsets): a linear
/// extension of the constraint graph that forces each `(d+1)`-packet into lex
/// or reverse-lex order.
pub fn order_with_inversions(
    n: u32,
    d: usize,
    inversions: &BTreeSet<LabelSet>,
) -> Result<AdmissibleOrder, BruhatError> {
    if !is_consistent(inversions, n, d) {
        return Err(BruhatError::NotConsistent);
    }
    let all = k_subsets(LabelSet::interval(1, n), d);
    let index: std::collections::HashMap<u64, usize> =
        all.iter().enumerate().map(|(i, s)| (s.bits(), i)).collect();
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); all.len()];
    let mut indeg = vec![0usize; all.len()];
    for gen in k_subsets(LabelSet::interval(1, n), d + 1) {
        let members = packet_of(gen).members;
        let reversed = inversions.contains(&gen);
        for w in members.windows(2) {
            let (a, b) = (index[&w[0].bits()], index[&w[1].bits()]);
            let (from, to) = if reversed { (b, a) } else { (a, b) };
            succs[from].push(to);
            indeg[to] += 1;
        }
    }
    // Kahn's algorithm; tie-break by lex order for determinism.
    let mut ready: BTreeSet<usize> =
        (0..all.len()).filter(|&i| indeg[i] == 0).collect();
    let mut sequence = Vec::with_capacity(all.len());
    while let Some(&i) = ready.iter().next() {
        ready.remove(&i);
        sequence.push(all[i]);
        for &j in &succs[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                ready.insert(j);
            }
        }
    }
    if sequence.len() != all.len() {
        return Err(BruhatError::NotConsistent);
    }
    let order = AdmissibleOrder { n, d, sequence };
    debug_assert_eq!(is_admissible(&order), Ok(true));
    Ok(order)
}

/// Compares two elements for canonical output order: by rank, then by the
/// lex order of inversion sets.
pub fn canonical_cmp(a: &BruhatElement, b: &BruhatElement) -> Ordering {
    a.rank().cmp(&b.rank()).then_with(|| a.inversions.cmp(&b.inversions))
}
