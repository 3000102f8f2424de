//! Higher Stasheff–Tamari posets `S(n,d)`: triangulations of the cyclic
//! polytope `C(n,d)` handled through purely combinatorial parity predicates.
//!
//! Points live on the moment curve `t ↦ (t, t², …, t^d)`; which side of a
//! hyperplane a point falls on depends only on the interleaving of labels,
//! so all geometric predicates here reduce to counting parities. The exact
//! determinant oracle backing these predicates lives in the test suite and
//! stays permanently enabled.
//!
//! The snug-rectangle encoding provides an exact-cover enumeration of
//! `S(n,d)` that is independent of the flip-graph search, and the two are
//! cross-checked against each other.
//!
//! ```
//! use higher_bruhat::cyclic::{bottom_top, covers_up_t, enumerate_tamari_flip};
//!
//! // S(7,2): triangulations of a convex 7-gon, counted by Catalan(5).
//! let labels: Vec<u32> = (1..=7).collect();
//! assert_eq!(enumerate_tamari_flip(&labels, 2, None).unwrap().len(), 42);
//!
//! // The bottom is the lower hull; one upward flip per interior quadrilateral.
//! let (bottom, top) = bottom_top(&labels, 2);
//! assert_eq!(bottom.simplices.len(), 5);
//! assert!(covers_up_t(&bottom).len() > 0);
//! assert_eq!(covers_up_t(&top).len(), 0);
//! ```

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::subsets::{k_subsets, LabelSet};

/// Errors from cyclic-model operations.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CyclicError {
    /// A label argument overlapped a set it must avoid.
    #[error("label {0} must not belong to the reference set")]
    LabelInSet(u32),
    /// The simplex set fails facet matching.
    #[error("simplices do not form a triangulation")]
    NotATriangulation,
    /// Rectangles overlap or miss part of the universe.
    #[error("rectangles do not form a snug partition")]
    NotAPartition,
    /// Enumeration exceeded its budget.
    #[error("enumeration budget exceeded after {discovered} elements")]
    BudgetExceeded {
        /// Elements discovered before giving up.
        discovered: usize,
    },
    /// The ascending-order relation contained a cycle.
    #[error("ascending-order relation is cyclic; triangulation invalid")]
    CyclicAscending,
    /// Ground labels were not the expected standard interval.
    #[error("operation requires standard ground labels {0}")]
    NonStandardGround(String),
}

/// Side predicate: do the moment-curve points of `i` and `j` lie on opposite
/// sides of the hyperplane through the points of `A` (`|A| = d`)?
///
/// Combinatorially: true iff an odd number of elements of `A` lies strictly
/// between `i` and `j`.
pub fn opposite_sides(i: u32, j: u32, a: LabelSet) -> Result<bool, CyclicError> {
    if a.contains(i) {
        return Err(CyclicError::LabelInSet(i));
    }
    if a.contains(j) {
        return Err(CyclicError::LabelInSet(j));
    }
    if i == j {
        return Err(CyclicError::LabelInSet(i));
    }
    let (lo, hi) = (i.min(j), i.max(j));
    Ok(a.count_strictly_between(lo, hi) % 2 == 1)
}

/// True iff the moment-curve point of `j` lies above the affine hull of the
/// points of `F` (with respect to the final coordinate): the number of
/// elements of `F` exceeding `j` is even.
pub fn is_above(j: u32, f: LabelSet) -> Result<bool, CyclicError> {
    if f.contains(j) {
        return Err(CyclicError::LabelInSet(j));
    }
    Ok(f.count_greater_than(j) % 2 == 0)
}

/// Upper facets of the simplex on vertex set `B` (`|B| = k+1`, dimension `k`):
/// omit the vertex in 1-based sorted position `i ≡ k (mod 2)`.
pub fn upper_facets_simplex(b: LabelSet) -> Vec<LabelSet> {
    simplex_facets(b, 0)
}

/// Lower facets: omit positions `i ≢ k (mod 2)`.
pub fn lower_facets_simplex(b: LabelSet) -> Vec<LabelSet> {
    simplex_facets(b, 1)
}

fn simplex_facets(b: LabelSet, shift: usize) -> Vec<LabelSet> {
    assert!(b.len() >= 2, "facets require at least an edge");
    let k = b.len() - 1;
    b.iter()
        .enumerate()
        .filter(|(idx, _)| (idx + 1) % 2 == (k + shift) % 2)
        .map(|(_, v)| b.without(v))
        .collect()
}

/// A triangulation of the cyclic polytope on `labels` (an element of
/// `S(labels, d)`): a lex-sorted set of `(d+1)`-subsets passing facet
/// matching.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    /// Ground labels, sorted ascending (not necessarily `1..=n`).
    pub labels: Vec<u32>,
    /// Dimension of the triangulated polytope.
    pub d: usize,
    /// Lex-sorted simplices, each of size `d+1`.
    pub simplices: BTreeSet<LabelSet>,
}

impl Triangulation {
    /// Builds and validates a triangulation.
    pub fn new(
        labels: Vec<u32>,
        d: usize,
        simplices: BTreeSet<LabelSet>,
    ) -> Result<Self, CyclicError> {
        let t = Triangulation { labels, d, simplices };
        if !is_triangulation(&t.simplices, &t.labels, d) {
            return Err(CyclicError::NotATriangulation);
        }
        Ok(t)
    }

    /// Number of ground labels.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// The ground labels as a set.
    pub fn ground(&self) -> LabelSet {
        LabelSet::from_slice(&self.labels).expect("labels distinct")
    }

    /// True if the ground labels are exactly `1..=n`.
    pub fn has_standard_ground(&self) -> bool {
        self.labels.iter().copied().eq(1..=self.labels.len() as u32)
    }

    /// Relabels the ground to `1..=n` preserving order; returns the map from
    /// new to original labels alongside.
    pub fn standardized(&self) -> (Triangulation, Vec<u32>) {
        let to_old = self.labels.clone();
        let new_of_old: BTreeMap<u32, u32> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i as u32 + 1))
            .collect();
        let simplices = self
            .simplices
            .iter()
            .map(|s| {
                LabelSet::from_slice(
                    &s.iter().map(|v| new_of_old[&v]).collect::<Vec<_>>(),
                )
                .expect("distinct")
            })
            .collect();
        (
            Triangulation {
                labels: (1..=self.labels.len() as u32).collect(),
                d: self.d,
                simplices,
            },
            to_old,
        )
    }

    /// Canonical JSON form.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "type": "tamari",
            "labels": self.labels,
            "d": self.d,
            "simplices": self.simplices.iter().map(|s| s.elements()).collect::<Vec<_>>(),
        })
    }

    /// Parses the canonical JSON form.
    pub fn from_json(v: &serde_json::Value) -> Result<Self, CyclicError> {
        let labels: Vec<u32> = v["labels"]
            .as_array()
            .into_iter()
            .flatten()
            .filter_map(|x| x.as_u64().map(|u| u as u32))
            .collect();
        let d = v["d"].as_u64().ok_or(CyclicError::NotATriangulation)? as usize;
        let mut simplices = BTreeSet::new();
        for arr in v["simplices"].as_array().into_iter().flatten() {
            let ls: Vec<u32> = arr
                .as_array()
                .into_iter()
                .flatten()
                .filter_map(|x| x.as_u64().map(|u| u as u32))
                .collect();
            simplices
                .insert(LabelSet::from_slice(&ls).map_err(|_| CyclicError::NotATriangulation)?);
        }
        Triangulation::new(labels, d, simplices)
    }
}

/// All hull facets of the point configuration `labels` in dimension `d`:
/// `d`-subsets with every remaining label on one common side.
pub fn hull_facets(labels: &[u32], d: usize) -> Vec<LabelSet> {
    let ground = LabelSet::from_slice(labels).expect("labels distinct");
    k_subsets(ground, d)
        .into_iter()
        .filter(|&f| {
            let mut outside = ground.difference(f).iter();
            let Some(first) = outside.next() else { return false };
            let side = is_above(first, f).expect("disjoint");
            outside.all(|j| is_above(j, f).expect("disjoint") == side)
        })
        .collect()
}

/// Facet-matching triangulation test: every `d`-subset facet of a member is
/// shared by exactly two members with apexes on opposite sides, or is a hull
/// facet occurring exactly once — and every hull facet occurs.
pub fn is_triangulation(simplices: &BTreeSet<LabelSet>, labels: &[u32], d: usize) -> bool {
    let ground = match LabelSet::from_slice(labels) {
        Ok(g) => g,
        Err(_) => return false,
    };
    if simplices.is_empty() {
        return false;
    }
    if simplices.iter().any(|s| s.len() != d + 1 || !s.is_subset_of(ground)) {
        return false;
    }
    let mut incidence: BTreeMap<LabelSet, Vec<u32>> = BTreeMap::new();
    for &s in simplices {
        for apex in s.iter() {
            incidence.entry(s.without(apex)).or_default().push(apex);
        }
    }
    let hull: BTreeSet<LabelSet> = hull_facets(labels, d).into_iter().collect();
    for (facet, apexes) in &incidence {
        match apexes.as_slice() {
            [_] => {
                if !hull.contains(facet) {
                    return false;
                }
            }
            [a, b] => {
                if !opposite_sides(*a, *b, *facet).expect("apexes off facet") {
                    return false;
                }
            }
            _ => return false,
        }
    }
    hull.iter().all(|f| incidence.get(f).is_some_and(|v| v.len() == 1))
}

/// A snug rectangle: the window product of a `(d+1)`-subset of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SnugRectangle {
    /// The generating `(d+1)`-subset `{a_1 < … < a_{d+1}}`.
    pub generator: LabelSet,
    /// All `d`-sets with exactly one element in each window
    /// `[a_i, a_{i+1}-1]`.
    pub members: BTreeSet<LabelSet>,
}

/// Builds the snug rectangle `r(a_1,…,a_{d+1})` of a set on standard ground.
pub fn snug_rectangle(a: LabelSet) -> SnugRectangle {
    let verts = a.elements();
    let mut members = BTreeSet::new();
    let mut choice = Vec::with_capacity(verts.len().saturating_sub(1));
    fn rec(verts: &[u32], idx: usize, choice: &mut Vec<u32>, members: &mut BTreeSet<LabelSet>) {
        if idx + 1 == verts.len() {
            members.insert(LabelSet::from_slice(choice).expect("windows disjoint"));
            return;
        }
        for x in verts[idx]..verts[idx + 1] {
            choice.push(x);
            rec(verts, idx + 1, choice, members);
            choice.pop();
        }
    }
    if verts.len() >= 2 {
        rec(&verts, 0, &mut choice, &mut members);
    } else {
        members.insert(LabelSet::EMPTY);
    }
    SnugRectangle { generator: a, members }
}

/// Complements in `[n-1]` of the members of `r(A)`.
pub fn snug_complement(a: LabelSet, n: u32) -> BTreeSet<LabelSet> {
    let universe = LabelSet::interval(1, n - 1);
    snug_rectangle(a).members.iter().map(|m| universe.difference(*m)).collect()
}

/// A set of snug rectangles partitioning `binom([n-1], d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnugPartition {
    /// Ground bound `n` (rectangles are generated by `(d+1)`-subsets of `[n]`).
    pub n: u32,
    /// Member size `d`.
    pub d: usize,
    /// The rectangles, sorted by generator.
    pub rectangles: Vec<SnugRectangle>,
}

/// Maps a triangulation on standard ground `[1..n]` to its snug partition.
pub fn triangulation_to_snug(s: &Triangulation) -> Result<SnugPartition, CyclicError> {
    if !s.has_standard_ground() {
        return Err(CyclicError::NonStandardGround(format!("[1..{}]", s.n())));
    }
    let n = s.n() as u32;
    let rectangles: Vec<SnugRectangle> =
        s.simplices.iter().map(|&a| snug_rectangle(a)).collect();
    validate_partition(&rectangles, n, s.d)?;
    Ok(SnugPartition { n, d: s.d, rectangles })
}

fn validate_partition(
    rectangles: &[SnugRectangle],
    n: u32,
    d: usize,
) -> Result<(), CyclicError> {
    let mut count: BTreeMap<LabelSet, usize> = BTreeMap::new();
    for r in rectangles {
        for &m in &r.members {
            *count.entry(m).or_default() += 1;
        }
    }
    let universe = k_subsets(LabelSet::interval(1, n - 1), d);
    if count.len() != universe.len()
        || !universe.iter().all(|u| count.get(u) == Some(&1))
    {
        return Err(CyclicError::NotAPartition);
    }
    Ok(())
}

/// Decodes a snug partition back to the triangulation of its generators.
pub fn snug_to_triangulation(p: &SnugPartition) -> Result<Triangulation, CyclicError> {
    validate_partition(&p.rectangles, p.n, p.d)?;
    let simplices: BTreeSet<LabelSet> = p.rectangles.iter().map(|r| r.generator).collect();
    Triangulation::new((1..=p.n).collect(), p.d, simplices)
}

/// The minimum and maximum triangulations of `S(labels, d)`, computed as the
/// lower/upper facet sets of the one-dimension-up cyclic polytope.
pub fn bottom_top(labels: &[u32], d: usize) -> (Triangulation, Triangulation) {
    let ground = LabelSet::from_slice(labels).expect("labels distinct");
    let mut bottom = BTreeSet::new();
    let mut top = BTreeSet::new();
    for f in k_subsets(ground, d + 1) {
        let others: Vec<u32> = ground.difference(f).elements();
        if others.iter().all(|&j| is_above(j, f).expect("disjoint")) {
            bottom.insert(f);
        }
        if others.iter().all(|&j| !is_above(j, f).expect("disjoint")) {
            top.insert(f);
        }
    }
    let bottom = Triangulation::new(labels.to_vec(), d, bottom).expect("lower facets tile");
    let top = Triangulation::new(labels.to_vec(), d, top).expect("upper facets tile");
    (bottom, top)
}

/// Triangulations covered by `S`: for each `(d+2)`-subset whose upper facets
/// all belong to `S`, flip them down to the lower facets.
pub fn covers_down(s: &Triangulation) -> Vec<Triangulation> {
    flips(s, true)
}

/// Triangulations covering `S`: flip lower facet sets up.
pub fn covers_up_t(s: &Triangulation) -> Vec<Triangulation> {
    flips(s, false)
}

fn flips(s: &Triangulation, down: bool) -> Vec<Triangulation> {
    let ground = s.ground();
    let mut out = Vec::new();
    for b in k_subsets(ground, s.d + 2) {
        let (from, to) = if down {
            (upper_facets_simplex(b), lower_facets_simplex(b))
        } else {
            (lower_facets_simplex(b), upper_facets_simplex(b))
        };
        if from.iter().all(|f| s.simplices.contains(f)) {
            let mut simplices = s.simplices.clone();
            for f in &from {
                simplices.remove(f);
            }
            simplices.extend(to.iter().copied());
            let t = Triangulation { labels: s.labels.clone(), d: s.d, simplices };
            debug_assert!(is_triangulation(&t.simplices, &t.labels, t.d));
            out.push(t);
        }
    }
    out
}

/// Enumerates `S(n,d)` on standard ground by exact cover of
/// `binom([n-1],d)` with snug rectangles.
pub fn enumerate_tamari(
    n: u32,
    d: usize,
    budget: Option<usize>,
) -> Result<Vec<Triangulation>, CyclicError> {
    let budget = budget.unwrap_or(10_000_000);
    let universe = k_subsets(LabelSet::interval(1, n - 1), d);
    let candidates: Vec<SnugRectangle> = k_subsets(LabelSet::interval(1, n), d + 1)
        .into_iter()
        .map(snug_rectangle)
        .collect();
    // For each universe element, the indices of rectangles covering it.
    let coverers: BTreeMap<LabelSet, Vec<usize>> = universe
        .iter()
        .map(|&u| {
            (u, candidates.iter().enumerate().filter(|(_, r)| r.members.contains(&u)).map(|(i, _)| i).collect())
        })
        .collect();

    let mut solutions: Vec<BTreeSet<usize>> = Vec::new();
    let mut chosen: BTreeSet<usize> = BTreeSet::new();
    let mut covered: BTreeSet<LabelSet> = BTreeSet::new();

    fn search(
        universe: &[LabelSet],
        candidates: &[SnugRectangle],
        coverers: &BTreeMap<LabelSet, Vec<usize>>,
        chosen: &mut BTreeSet<usize>,
        covered: &mut BTreeSet<LabelSet>,
        solutions: &mut Vec<BTreeSet<usize>>,
        budget: usize,
    ) -> Result<(), CyclicError> {
        // Choose the uncovered element with the fewest compatible rectangles.
        let next = universe
            .iter()
            .filter(|u| !covered.contains(u))
            .min_by_key(|u| {
                coverers[u]
                    .iter()
                    .filter(|&&i| candidates[i].members.is_disjoint(covered))
                    .count()
            })
            .copied();
        let Some(u) = next else {
            if solutions.len() >= budget {
                return Err(CyclicError::BudgetExceeded { discovered: solutions.len() });
            }
            solutions.push(chosen.clone());
            return Ok(());
        };
        for &i in &coverers[&u] {
            let rect = &candidates[i];
            if !rect.members.is_disjoint(covered) {
                continue;
            }
            chosen.insert(i);
            covered.extend(rect.members.iter().copied());
            search(universe, candidates, coverers, chosen, covered, solutions, budget)?;
            for m in &rect.members {
                covered.remove(m);
            }
            chosen.remove(&i);
        }
        Ok(())
    }

    search(&universe, &candidates, &coverers, &mut chosen, &mut covered, &mut solutions, budget)?;
    let mut out: Vec<Triangulation> = solutions
        .into_iter()
        .map(|sol| {
            let simplices: BTreeSet<LabelSet> =
                sol.iter().map(|&i| candidates[i].generator).collect();
            Triangulation::new((1..=n).collect(), d, simplices).expect("snug partition decodes")
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Enumerates `S(labels,d)` by breadth-first flips up from the bottom
/// triangulation (independent cross-check for [`enumerate_tamari`]).
pub fn enumerate_tamari_flip(
    labels: &[u32],
    d: usize,
    budget: Option<usize>,
) -> Result<Vec<Triangulation>, CyclicError> {
    let budget = budget.unwrap_or(10_000_000);
    let (bottom, _) = bottom_top(labels, d);
    let mut seen: BTreeSet<Triangulation> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(bottom.clone());
    queue.push_back(bottom);
    while let Some(s) = queue.pop_front() {
        for t in covers_up_t(&s) {
            if !seen.contains(&t) {
                if seen.len() >= budget {
                    return Err(CyclicError::BudgetExceeded { discovered: seen.len() });
                }
                seen.insert(t.clone());
                queue.push_back(t);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// The ascending-order DAG: edge `A → B` when `A` and `B` share a `d`-facet
/// and `B`'s apex is above it.
pub fn ascending_dag(s: &Triangulation) -> Result<Vec<(LabelSet, LabelSet)>, CyclicError> {
    let simplices: Vec<LabelSet> = s.simplices.iter().copied().collect();
    let mut edges = Vec::new();
    for (i, &a) in simplices.iter().enumerate() {
        for &b in &simplices[i + 1..] {
            let shared = a.intersection(b);
            if shared.len() != s.d {
                continue;
            }
            let apex_a = a.difference(shared).min().expect("apex exists");
            let apex_b = b.difference(shared).min().expect("apex exists");
            let above_a = is_above(apex_a, shared).expect("disjoint");
            let above_b = is_above(apex_b, shared).expect("disjoint");
            if above_a == above_b {
                continue;
            }
            if above_b {
                edges.push((a, b));
            } else {
                edges.push((b, a));
            }
        }
    }
    // Cycle check via Kahn's algorithm.
    if topological_sorts(&simplices, &edges, Some(1))?.is_empty() {
        return Err(CyclicError::CyclicAscending);
    }
    Ok(edges)
}

/// All ascending orders on the simplices of `S` (topological sorts of the
/// ascending DAG), up to an optional cap.
pub fn ascending_orders(
    s: &Triangulation,
    cap: Option<usize>,
) -> Result<Vec<Vec<LabelSet>>, CyclicError> {
    let simplices: Vec<LabelSet> = s.simplices.iter().copied().collect();
    let edges = ascending_dag(s)?;
    topological_sorts(&simplices, &edges, cap)
}

fn topological_sorts(
    nodes: &[LabelSet],
    edges: &[(LabelSet, LabelSet)],
    cap: Option<usize>,
) -> Result<Vec<Vec<LabelSet>>, CyclicError> {
    let index: BTreeMap<LabelSet, usize> =
        nodes.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    let mut indeg = vec![0usize; nodes.len()];
    for (a, b) in edges {
        succs[index[a]].push(index[b]);
        indeg[index[b]] += 1;
    }
    let mut out = Vec::new();
    let mut order = Vec::with_capacity(nodes.len());
    let mut used = vec![false; nodes.len()];
    fn rec(
        nodes: &[LabelSet],
        succs: &[Vec<usize>],
        indeg: &mut [usize],
        used: &mut [bool],
        order: &mut Vec<usize>,
        out: &mut Vec<Vec<LabelSet>>,
        cap: Option<usize>,
    ) {
        if cap.is_some_and(|c| out.len() >= c) {
            return;
        }
        if order.len() == nodes.len() {
            out.push(order.iter().map(|&i| nodes[i]).collect());
            return;
        }
        for i in 0..nodes.len() {
            if used[i] || indeg[i] != 0 {
                continue;
            }
            used[i] = true;
            order.push(i);
            for &j in &succs[i] {
                indeg[j] -= 1;
            }
            rec(nodes, succs, indeg, used, order, out, cap);
            for &j in &succs[i] {
                indeg[j] += 1;
            }
            order.pop();
            used[i] = false;
        }
    }
    rec(nodes, &succs, &mut indeg, &mut used, &mut order, &mut out, cap);
    Ok(out)
}

/// The collapse `c_I(S)`: merge each label `a` to
/// `m_I(a) = min{i ∈ I ∪ {n} : i ≥ a}` and keep non-degenerate simplices.
/// Requires standard ground `[1..n]`; `I ⊆ [n-1]`.
pub fn collapse(s: &Triangulation, i_set: LabelSet) -> Result<Triangulation, CyclicError> {
    if !s.has_standard_ground() {
        return Err(CyclicError::NonStandardGround(format!("[1..{}]", s.n())));
    }
    let n = s.n() as u32;
    let targets = i_set.with(n);
    let m = |a: u32| targets.iter().find(|&i| i >= a).expect("n closes every gap");
    let mut simplices = BTreeSet::new();
    for &a in &s.simplices {
        let image: Vec<u32> = a.iter().map(m).collect();
        let dedup: BTreeSet<u32> = image.iter().copied().collect();
        if dedup.len() == a.len() {
            simplices.insert(LabelSet::from_slice(&image).expect("distinct"));
        }
    }
    let labels: Vec<u32> = targets.elements();
    let t = Triangulation { labels, d: s.d, simplices };
    debug_assert!(is_triangulation(&t.simplices, &t.labels, t.d));
    Ok(t)
}

/// The link of `S` at the vertex set `at`: `{A \ at : at ⊆ A ∈ S}`, an
/// element of the Stasheff–Tamari poset one (or two) dimensions down.
pub fn link(s: &Triangulation, at: LabelSet) -> Result<Triangulation, CyclicError> {
    if !at.is_subset_of(s.ground()) {
        return Err(CyclicError::LabelInSet(at.min().unwrap_or(0)));
    }
    let simplices: BTreeSet<LabelSet> = s
        .simplices
        .iter()
        .filter(|a| at.is_subset_of(**a))
        .map(|a| a.difference(at))
        .collect();
    let labels: Vec<u32> = s.ground().difference(at).elements();
    Triangulation::new(labels, s.d - at.len(), simplices)
}

/// The extension `Ŝ ∈ S([0,n], d+1)` of `S ∈ S(n,d)`:
/// `{A ∪ {0}} ∪ {(x, x+1, a_2, …, a_{d+1}) : a_1 ≤ x ≤ a_2 − 2}`.
pub fn extension(s: &Triangulation) -> Result<Triangulation, CyclicError> {
    if !s.has_standard_ground() {
        return Err(CyclicError::NonStandardGround(format!("[1..{}]", s.n())));
    }
    let mut simplices = BTreeSet::new();
    for &a in &s.simplices {
        simplices.insert(a.with(0));
        let verts = a.elements();
        if verts.len() >= 2 {
            let (a1, a2) = (verts[0], verts[1]);
            for x in a1..=a2.saturating_sub(2) {
                let mut v = vec![x, x + 1];
                v.extend_from_slice(&verts[1..]);
                simplices.insert(LabelSet::from_slice(&v).expect("distinct"));
            }
        }
    }
    let mut labels = vec![0u32];
    labels.extend(s.labels.iter().copied());
    Triangulation::new(labels, s.d + 1, simplices)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> LabelSet {
        LabelSet::from_slice(v).unwrap()
    }

    fn tri(labels: &[u32], d: usize, simplices: &[&[u32]]) -> Triangulation {
        Triangulation::new(
            labels.to_vec(),
            d,
            simplices.iter().map(|v| s(v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn side_predicates() {
        assert_eq!(opposite_sides(1, 3, s(&[2, 4])), Ok(true));
        assert_eq!(opposite_sides(1, 4, s(&[2, 3])), Ok(false));
        assert_eq!(opposite_sides(1, 2, s(&[3, 4])), Ok(false));
        assert_eq!(is_above(2, s(&[1, 3])), Ok(false));
        assert_eq!(is_above(4, s(&[1, 3])), Ok(true));
        assert_eq!(is_above(1, s(&[2, 3])), Ok(true));
    }

    #[test]
    fn facet_parity() {
        assert_eq!(upper_facets_simplex(s(&[1, 2, 3])), vec![s(&[1, 3])]);
        assert_eq!(lower_facets_simplex(s(&[1, 2, 3])), vec![s(&[2, 3]), s(&[1, 2])]);
        assert_eq!(upper_facets_simplex(s(&[4, 7])), vec![s(&[7])]);
        assert_eq!(lower_facets_simplex(s(&[4, 7])), vec![s(&[4])]);
        assert_eq!(
            upper_facets_simplex(s(&[1, 2, 3, 4])),
            vec![s(&[2, 3, 4]), s(&[1, 2, 4])]
        );
    }

    #[test]
    fn triangulation_validation() {
        assert!(is_triangulation(
            &[s(&[0, 1, 3]), s(&[1, 2, 3])].into_iter().collect(),
            &[0, 1, 2, 3],
            2
        ));
        assert!(!is_triangulation(
            &[s(&[0, 1, 3])].into_iter().collect(),
            &[0, 1, 2, 3],
            2
        ));
        // The worked 11-simplex triangulation on [0..7].
        let golden: BTreeSet<LabelSet> = [
            s(&[0, 1, 2, 5]),
            s(&[0, 1, 5, 6]),
            s(&[0, 1, 6, 7]),
            s(&[0, 2, 3, 4]),
            s(&[0, 2, 4, 5]),
            s(&[1, 2, 5, 6]),
            s(&[1, 2, 6, 7]),
            s(&[2, 3, 4, 5]),
            s(&[2, 3, 5, 7]),
            s(&[2, 5, 6, 7]),
            s(&[3, 4, 5, 7]),
        ]
        .into_iter()
        .collect();
        assert!(is_triangulation(&golden, &[0, 1, 2, 3, 4, 5, 6, 7], 3));
    }

    #[test]
    fn snug_examples() {
        let r = snug_rectangle(s(&[1, 3, 5]));
        assert_eq!(
            r.members,
            [s(&[1, 3]), s(&[1, 4]), s(&[2, 3]), s(&[2, 4])].into_iter().collect()
        );
        assert_eq!(snug_rectangle(s(&[1, 2])).members, [s(&[1])].into_iter().collect());
        assert_eq!(
            snug_rectangle(s(&[2, 3, 4, 6])).members,
            [s(&[2, 3, 4]), s(&[2, 3, 5])].into_iter().collect()
        );
    }

    #[test]
    fn snug_complement_product_formula() {
        // Element-wise complements must match the window product over the
        // complementary labels.
        for n in 3..=7u32 {
            for dplus1 in 1..=n as usize {
                for a in k_subsets(LabelSet::interval(1, n), dplus1) {
                    let direct = snug_complement(a, n);
                    let ac = LabelSet::interval(1, n).difference(a).elements();
                    // Product formula: choose from {a_i^c - 1, a_i^c} per
                    // complementary label, keep valid (n-d-1)-subsets of [n-1].
                    let mut formula = BTreeSet::new();
                    let k = ac.len();
                    for mask in 0..(1u32 << k) {
                        let picks: Vec<u32> = ac
                            .iter()
                            .enumerate()
                            .map(|(i, &c)| if mask & (1 << i) != 0 { c } else { c - 1 })
                            .collect();
                        let dedup: BTreeSet<u32> = picks.iter().copied().collect();
                        if dedup.len() == k && picks.iter().all(|&x| (1..n).contains(&x)) {
                            formula.insert(LabelSet::from_slice(&picks).unwrap());
                        }
                    }
                    assert_eq!(direct, formula, "A={a:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn bottom_top_examples() {
        let (b, t) = bottom_top(&[1, 2, 3, 4], 1);
        assert_eq!(b.simplices, [s(&[1, 2]), s(&[2, 3]), s(&[3, 4])].into_iter().collect());
        assert_eq!(t.simplices, [s(&[1, 4])].into_iter().collect());
        let (b, t) = bottom_top(&[1, 2, 3, 4, 5], 2);
        assert_eq!(
            b.simplices,
            [s(&[1, 2, 3]), s(&[1, 3, 4]), s(&[1, 4, 5])].into_iter().collect()
        );
        assert_eq!(
            t.simplices,
            [s(&[1, 2, 5]), s(&[2, 3, 5]), s(&[3, 4, 5])].into_iter().collect()
        );
    }

    #[test]
    fn snug_roundtrip() {
        let (b, _) = bottom_top(&[1, 2, 3, 4], 1);
        let p = triangulation_to_snug(&b).unwrap();
        assert_eq!(p.rectangles.len(), 3);
        let back = snug_to_triangulation(&p).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_tamari(4, 2, None).unwrap().len(), 2);
        assert_eq!(enumerate_tamari(5, 3, None).unwrap().len(), 2);
        assert_eq!(enumerate_tamari(5, 2, None).unwrap().len(), 5);
        assert_eq!(enumerate_tamari(6, 2, None).unwrap().len(), 14);
        let flips = enumerate_tamari_flip(&[1, 2, 3, 4, 5, 6], 2, None).unwrap();
        assert_eq!(flips.len(), 14);
    }

    #[test]
    fn ascending_orders_examples() {
        let t = tri(&[0, 1, 2, 3], 2, &[&[0, 1, 3], &[1, 2, 3]]);
        let orders = ascending_orders(&t, None).unwrap();
        assert_eq!(orders, vec![vec![s(&[1, 2, 3]), s(&[0, 1, 3])]]);
    }

    #[test]
    fn collapse_example() {
        let (b, _) = bottom_top(&[1, 2, 3, 4], 1);
        let c = collapse(&b, s(&[1, 3])).unwrap();
        assert_eq!(c.simplices, [s(&[1, 3]), s(&[3, 4])].into_iter().collect());
        assert_eq!(c.labels, vec![1, 3, 4]);
    }

    #[test]
    fn link_example() {
        let t = tri(&[0, 1, 2, 3], 2, &[&[0, 1, 3], &[1, 2, 3]]);
        let l = link(&t, s(&[0])).unwrap();
        assert_eq!(l.simplices, [s(&[1, 3])].into_iter().collect());
    }

    #[test]
    fn extension_examples() {
        let t = tri(&[1, 2, 3], 1, &[&[1, 3]]);
        assert_eq!(
            extension(&t).unwrap().simplices,
            [s(&[0, 1, 3]), s(&[1, 2, 3])].into_iter().collect()
        );
        let (b, _) = bottom_top(&[1, 2, 3, 4], 1);
        assert_eq!(
            extension(&b).unwrap().simplices,
            [s(&[0, 1, 2]), s(&[0, 2, 3]), s(&[0, 3, 4])].into_iter().collect()
        );
        let fan = tri(&[1, 2, 3, 4], 1, &[&[1, 4]]);
        assert_eq!(
            extension(&fan).unwrap().simplices,
            [s(&[0, 1, 4]), s(&[1, 2, 4]), s(&[2, 3, 4])].into_iter().collect()
        );
    }
}
