//! The maps between the two families of posets: `f : B(n,d) → S([0,n+1],d+1)`
//! with its three equivalent definitions, the `ψ`/`θ` dictionary to planar
//! binary trees in the `d = 1` case, fibers of `f`, constructive surjectivity
//! for `d ≤ 2`, and `g : S(n,d) → B(n-1,d)` with its alternative definitions
//! and its inverse on superconsistent inversion sets.
//!
//! The closed form [`f_def2`] is the public entry point for `f`; the chain
//! recursions [`f_def1`] and [`f_def3`] are retained as differential-testing
//! oracles, and all three definitions agree on every order tested.
//!
//! ```
//! use higher_bruhat::cyclic::{bottom_top, extension, link};
//! use higher_bruhat::maps::{f_def2, g};
//! use higher_bruhat::subsets::LabelSet;
//!
//! // Every triangulation S extends one dimension up: f(g(S)) is the
//! // extension of S, and the link at the new bottom vertex recovers S.
//! let (_, s) = bottom_top(&[1, 2, 3, 4, 5], 2);
//! let ext = extension(&s).unwrap();
//! assert_eq!(f_def2(&g(&s).unwrap()).unwrap(), ext);
//! let zero = LabelSet::singleton(0);
//! assert_eq!(link(&ext, zero).unwrap(), s);
//! ```

use std::collections::BTreeSet;
use std::fmt;

use crate::bruhat::{
    admissible_order_through, consistency_respecting_order, enumerate_bruhat,
    inversion_set, is_superconsistent, order_with_inversions, AdmissibleOrder,
    BruhatElement, BruhatError,
};
use crate::cube::face_of;
use crate::cyclic::{
    ascending_orders, bottom_top, collapse, lower_facets_simplex,
    snug_rectangle, upper_facets_simplex, CyclicError, SnugRectangle,
    Triangulation,
};
use crate::subsets::{k_subsets, LabelSet};

/// Errors from map computations.
#[derive(Debug, thiserror::Error)]
pub enum MapsError {
    /// Underlying Bruhat-order failure.
    #[error(transparent)]
    Bruhat(#[from] BruhatError),
    /// Underlying cyclic-model failure.
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
    /// The operation is not defined at this dimension.
    #[error("operation not defined for d = {0}")]
    UnsupportedDimension(usize),
    /// Input was not a permutation of `[n]`.
    #[error("sequence is not a permutation of an initial interval")]
    NotAPermutation,
    /// Ground labels were not `[0..n+1]` (or `[1..n]` where required).
    #[error("ground labels must be the interval {0}")]
    BadGround(String),
    /// Two constructions that must agree did not; indicates a broken
    /// precondition or an internal bug.
    #[error("internal disagreement: {0}")]
    Internal(String),
}

fn ext_labels(n: u32) -> Vec<u32> {
    (0..=n + 1).collect()
}

/// Checks that `s` lives on the ground `[0..n+1]` and returns `n`.
fn extended_n(s: &Triangulation) -> Result<u32, MapsError> {
    let m = s.labels.len() as u32;
    if m < 2 || !s.labels.iter().copied().eq(0..m) {
        return Err(MapsError::BadGround(format!("[0..{}]", m.max(2) - 1)));
    }
    Ok(m - 2)
}

/// Base case of `f`: an element of `B(n,0)` (a subset of `[n]`) maps to the
/// monotone path on `[0,n+1]` avoiding its inversion labels.
fn path_of(e: &BruhatElement) -> Result<Triangulation, MapsError> {
    let avoided: BTreeSet<u32> =
        e.inversions.iter().filter_map(|s| LabelSet::min(*s)).collect();
    let vertices: Vec<u32> =
        (0..=e.n + 1).filter(|v| !avoided.contains(v)).collect();
    let simplices: BTreeSet<LabelSet> = vertices
        .windows(2)
        .map(|w| LabelSet::from_slice(w).expect("distinct"))
        .collect();
    Ok(Triangulation::new(ext_labels(e.n), 1, simplices)?)
}

/// `f` by its closed form: for each `d`-subset `X` whose cube face has all
/// interior off-`X` coordinates equal to `+1`, emit the simplex
/// `{x} ∪ X ∪ {z}` with `x`/`z` the nearest outer coordinates carrying a
/// `-1` (defaulting to `0` and `n+1`).
pub fn f_def2(e: &BruhatElement) -> Result<Triangulation, MapsError> {
    if e.d == 0 {
        return path_of(e);
    }
    let (n, d) = (e.n, e.d);
    let s: i8 = 1;
    let mut simplices = BTreeSet::new();
    for x in k_subsets(LabelSet::interval(1, n), d) {
        let face = face_of(e, x);
        let a1 = x.min().expect("nonempty");
        let ad = x.max().expect("nonempty");
        let interior_ok = (a1 + 1..ad)
            .filter(|y| !x.contains(*y))
            .all(|y| face.sign(y) == s);
        if !interior_ok {
            continue;
        }
        let xv = (1..a1).rev().find(|&y| face.sign(y) == -s).unwrap_or(0);
        let zv = (ad + 1..=n).find(|&y| face.sign(y) == -s).unwrap_or(n + 1);
        simplices.insert(x.with(xv).with(zv));
    }
    Ok(Triangulation::new(ext_labels(n), d + 1, simplices)?)
}

/// `f` by the inductive definition: pick an admissible order representing
/// `e`, walk its prefix chain in `B(n,d-1)`, map each prefix down
/// recursively, and collect the simplices through which consecutive images
/// differ by a flip.
pub fn f_def1(e: &BruhatElement) -> Result<Triangulation, MapsError> {
    if e.d == 0 {
        return path_of(e);
    }
    let (n, d) = (e.n, e.d);
    let pi = order_with_inversions(n, d, &e.inversions)?;
    let mut prev = f_def1(&BruhatElement::bottom(n, d - 1))?;
    let mut collected = BTreeSet::new();
    let mut prefix = BTreeSet::new();
    for y in pi.sequence {
        prefix.insert(y);
        let alpha = BruhatElement { n, d: d - 1, inversions: prefix.clone() };
        let cur = f_def1(&alpha)?;
        if cur != prev {
            collected.insert(flip_simplex(&prev, &cur)?);
        }
        prev = cur;
    }
    Ok(Triangulation::new(ext_labels(n), d + 1, collected)?)
}

/// Recovers the simplex through which two triangulations differ by a single
/// up-flip (`prev` holds its lower facets, `next` its upper facets).
fn flip_simplex(
    prev: &Triangulation,
    next: &Triangulation,
) -> Result<LabelSet, MapsError> {
    let removed: Vec<LabelSet> =
        prev.simplices.difference(&next.simplices).copied().collect();
    let added: Vec<LabelSet> =
        next.simplices.difference(&prev.simplices).copied().collect();
    let b = removed
        .iter()
        .chain(added.iter())
        .fold(LabelSet::EMPTY, |acc, s| acc.union(*s));
    let lower: BTreeSet<LabelSet> =
        lower_facets_simplex(b).into_iter().collect();
    let upper: BTreeSet<LabelSet> =
        upper_facets_simplex(b).into_iter().collect();
    if b.len() != prev.d + 2
        || removed.iter().copied().collect::<BTreeSet<_>>() != lower
        || added.iter().copied().collect::<BTreeSet<_>>() != upper
    {
        return Err(MapsError::Internal(format!(
            "step is not a single up-flip through {b:?}"
        )));
    }
    Ok(b)
}

/// `f` by the flip recursion: start from `0̂ ∈ S([0,n+1],d+1)` and, along a
/// consistency-respecting order of `I(e)`, flip up through `{x} ∪ X ∪ {z}`
/// whenever its lower facets are present (skipping inversions that support
/// no flip).
pub fn f_def3(e: &BruhatElement) -> Result<Triangulation, MapsError> {
    let order = consistency_respecting_order(e.n, e.d, &e.inversions)?;
    f_def3_along(e.n, e.d, &order)
}

/// The recursion of [`f_def3`] along an explicit order of the inversion set
/// (exposed so tests can verify order-independence).
pub fn f_def3_along(
    n: u32,
    d: usize,
    order: &[LabelSet],
) -> Result<Triangulation, MapsError> {
    let (mut t, _) = bottom_top(&ext_labels(n), d + 1);
    for &x in order {
        let lo = x.min().ok_or(MapsError::UnsupportedDimension(d))?;
        let hi = x.max().expect("nonempty");
        let mut found = None;
        for xv in 0..lo {
            for zv in hi + 1..=n + 1 {
                let b = x.with(xv).with(zv);
                if lower_facets_simplex(b)
                    .iter()
                    .all(|f| t.simplices.contains(f))
                {
                    if found.is_some() {
                        return Err(MapsError::Internal(format!(
                            "ambiguous flip for inversion {x:?}"
                        )));
                    }
                    found = Some(b);
                }
            }
        }
        // An inversion with no supported flip leaves the triangulation
        // unchanged (consecutive images along the chain may coincide).
        let Some(b) = found else {
            continue;
        };
        for f in lower_facets_simplex(b) {
            t.simplices.remove(&f);
        }
        t.simplices.extend(upper_facets_simplex(b));
    }
    if !crate::cyclic::is_triangulation(&t.simplices, &t.labels, t.d) {
        return Err(MapsError::Internal("flip chain left a non-triangulation".into()));
    }
    Ok(t)
}

/// A planar binary tree, serialized in parenthesis notation: a leaf is `.`
/// and an internal node is `(left right)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanarBinaryTree {
    /// An empty subtree / leaf.
    Leaf,
    /// An internal node with left and right subtrees.
    Node(Box<PlanarBinaryTree>, Box<PlanarBinaryTree>),
}

impl PlanarBinaryTree {
    /// Number of internal nodes.
    pub fn internal_count(&self) -> usize {
        match self {
            PlanarBinaryTree::Leaf => 0,
            PlanarBinaryTree::Node(l, r) => 1 + l.internal_count() + r.internal_count(),
        }
    }

    fn node(l: PlanarBinaryTree, r: PlanarBinaryTree) -> Self {
        PlanarBinaryTree::Node(Box::new(l), Box::new(r))
    }
}

impl fmt::Display for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarBinaryTree::Leaf => write!(f, "."),
            PlanarBinaryTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

/// `ψ`: the classical map from permutations to planar binary trees, splitting
/// recursively at the largest value.
pub fn psi(perm: &[u32]) -> PlanarBinaryTree {
    let Some(pos) = (0..perm.len()).max_by_key(|&i| perm[i]) else {
        return PlanarBinaryTree::Leaf;
    };
    PlanarBinaryTree::node(psi(&perm[..pos]), psi(&perm[pos + 1..]))
}

/// The dual-tree reading of a polygon triangulation (`S ∈ S([0,n+1],2)`),
/// rooted at the triangle containing the long edge `{0, n+1}`; composed with
/// `ψ` it recovers `f` in the `d = 1` case.
pub fn theta_inverse(s: &Triangulation) -> Result<PlanarBinaryTree, MapsError> {
    if s.d != 2 {
        return Err(MapsError::UnsupportedDimension(s.d));
    }
    let n = extended_n(s)?;
    fn build(
        simplices: &BTreeSet<LabelSet>,
        lo: u32,
        hi: u32,
    ) -> PlanarBinaryTree {
        let found = simplices.iter().copied().find(|t| {
            t.contains(lo)
                && t.contains(hi)
                && LabelSet::min(*t) == Some(lo)
                && LabelSet::max(*t) == Some(hi)
        });
        match found {
            None => PlanarBinaryTree::Leaf,
            Some(t) => {
                let mid = t.without(lo).without(hi).min().expect("middle vertex");
                PlanarBinaryTree::node(
                    build(simplices, lo, mid),
                    build(simplices, mid, hi),
                )
            }
        }
    }
    Ok(build(&s.simplices, 0, n + 1))
}

/// The group inverse of a permutation of `[n]` in one-line notation.
///
/// Elements of `B(n,1)` correspond to words in two classical ways: the
/// sequence word (the order in which the singletons appear, which matches
/// the middle-vertex description of fibers) and its inverse. The tree map
/// `ψ` composes with `θ` to give `f` when applied to the inverse word.
pub fn inverse_perm(perm: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        inv[v as usize - 1] = i as u32 + 1;
    }
    inv
}

/// Reads a permutation of `[n]` as an element of `B(n,1)`.
pub fn perm_to_element(perm: &[u32]) -> Result<BruhatElement, MapsError> {
    let n = perm.len() as u32;
    let seen: BTreeSet<u32> = perm.iter().copied().collect();
    if !seen.iter().copied().eq(1..=n) {
        return Err(MapsError::NotAPermutation);
    }
    let order = AdmissibleOrder {
        n,
        d: 1,
        sequence: perm.iter().map(|&v| LabelSet::singleton(v)).collect(),
    };
    Ok(inversion_set(&order)?)
}

/// Writes an element of `B(n,1)` as the permutation of `[n]` realizing it.
pub fn element_to_perm(e: &BruhatElement) -> Result<Vec<u32>, MapsError> {
    if e.d != 1 {
        return Err(MapsError::UnsupportedDimension(e.d));
    }
    let order = order_with_inversions(e.n, 1, &e.inversions)?;
    Ok(order
        .sequence
        .iter()
        .map(|s| LabelSet::min(*s).expect("singleton"))
        .collect())
}

/// The fiber of `f` over `S ⊆ S([0,n+1], d+1)`: all `e ∈ B(n,d)` with
/// `f(e) = S`, by filtering the full enumeration.
pub fn fiber_f(
    s: &Triangulation,
    n: u32,
    d: usize,
    budget: Option<usize>,
) -> Result<Vec<BruhatElement>, MapsError> {
    let mut out = Vec::new();
    for e in enumerate_bruhat(n, d, budget)? {
        if &f_def2(&e)? == s {
            out.push(e);
        }
    }
    out.sort_by(crate::bruhat::canonical_cmp);
    Ok(out)
}

/// Middle-vertex word of a linear order on polygon triangles: the middle
/// vertex of `{a < b < c}` is `b`.
pub fn middle_vertex_word(order: &[LabelSet]) -> Vec<u32> {
    order
        .iter()
        .map(|t| {
            let v = t.elements();
            v[1]
        })
        .collect()
}

/// The minimum and maximum permutations of the fiber of `f` over
/// `S ∈ S([0,n+1],2)`, computed by the left/right subpolygon recursion; the
/// fiber is exactly the weak-order interval between them.
pub fn min_max_fiber(s: &Triangulation) -> Result<(Vec<u32>, Vec<u32>), MapsError> {
    if s.d != 2 {
        return Err(MapsError::UnsupportedDimension(s.d));
    }
    let n = extended_n(s)?;
    fn rec(
        simplices: &BTreeSet<LabelSet>,
        lo: u32,
        hi: u32,
    ) -> (Vec<u32>, Vec<u32>) {
        if hi <= lo + 1 {
            return (Vec::new(), Vec::new());
        }
        let t = simplices
            .iter()
            .copied()
            .find(|t| {
                t.contains(lo)
                    && t.contains(hi)
                    && LabelSet::min(*t) == Some(lo)
                    && LabelSet::max(*t) == Some(hi)
            })
            .expect("triangle on the long edge");
        let a = t.without(lo).without(hi).min().expect("middle vertex");
        let (lmin, lmax) = rec(simplices, lo, a);
        let (rmin, rmax) = rec(simplices, a, hi);
        let mut min = lmin;
        min.extend(rmin);
        min.push(a);
        let mut max = rmax;
        max.extend(lmax);
        max.push(a);
        (min, max)
    }
    Ok(rec(&s.simplices, 0, n + 1))
}

/// A preimage of `S` under `f`, for `S ∈ S([0,n+1], d+1)` with
/// `d + 1 ∈ {2, 3}`. For polygons this is the minimum fiber permutation; in
/// one dimension up it follows the constructive surjectivity argument: walk
/// an ascending order of `S`, track the chain of minimum permutations of the
/// intermediate polygon triangulations, and refine it to a maximal chain.
pub fn surjectivity_witness(s: &Triangulation) -> Result<BruhatElement, MapsError> {
    let n = extended_n(s)?;
    match s.d {
        2 => perm_to_element(&min_max_fiber(s)?.0),
        3 => {
            let asc = ascending_orders(s, Some(1))?
                .into_iter()
                .next()
                .ok_or_else(|| MapsError::Internal("no ascending order".into()))?;
            let (mut t, _) = bottom_top(&ext_labels(n), 2);
            let mut targets = Vec::new();
            let start = perm_to_element(&min_max_fiber(&t)?.0)?;
            targets.push(start.inversions);
            for a in asc {
                for f in lower_facets_simplex(a) {
                    if !t.simplices.remove(&f) {
                        return Err(MapsError::Internal(format!(
                            "ascending chain misses facet {f:?}"
                        )));
                    }
                }
                t.simplices.extend(upper_facets_simplex(a));
                targets.push(perm_to_element(&min_max_fiber(&t)?.0)?.inversions);
            }
            let order = admissible_order_through(n, 1, &targets)?;
            Ok(inversion_set(&order)?)
        }
        d => Err(MapsError::UnsupportedDimension(d)),
    }
}

/// `g : S(n,d) → B(n-1,d)`: the inversion set collects the `(d+1)`-subsets
/// `X` whose collapse `c_X(S)` is the top element of `S(X ∪ {n}, d)`.
pub fn g(s: &Triangulation) -> Result<BruhatElement, MapsError> {
    if !s.has_standard_ground() {
        return Err(MapsError::BadGround(format!("[1..{}]", s.n())));
    }
    let n = s.n() as u32;
    let mut inversions = BTreeSet::new();
    for x in k_subsets(LabelSet::interval(1, n - 1), s.d + 1) {
        let c = collapse(s, x)?;
        let (_, top) = bottom_top(&c.labels, s.d);
        if c == top {
            inversions.insert(x);
        }
    }
    Ok(BruhatElement::new(n - 1, s.d, inversions)?)
}

/// All rectangular orders of a snug rectangle, up to an optional cap:
/// members differing by `+1` in coordinate `i` (of `k`) are ordered by the
/// parity of `k - i`, and the orders are the linear extensions of those
/// constraints.
pub fn rectangular_orders(
    r: &SnugRectangle,
    cap: Option<usize>,
) -> Vec<Vec<LabelSet>> {
    let members: Vec<LabelSet> = r.members.iter().copied().collect();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (p, &a) in members.iter().enumerate() {
        for (q, &b) in members.iter().enumerate() {
            // Look for b = a with coordinate i bumped by one.
            let av = a.elements();
            let bv = b.elements();
            if av.len() != bv.len() {
                continue;
            }
            let diffs: Vec<usize> =
                (0..av.len()).filter(|&i| av[i] != bv[i]).collect();
            if diffs.len() != 1 {
                continue;
            }
            let i = diffs[0];
            if bv[i] != av[i] + 1 {
                continue;
            }
            let k = av.len();
            // (k - (i+1)) even: the bumped member comes first.
            if (k - (i + 1)) % 2 == 0 {
                edges.push((q, p));
            } else {
                edges.push((p, q));
            }
        }
    }
    linear_extensions(members.len(), &edges, cap)
        .into_iter()
        .map(|ord| ord.into_iter().map(|i| members[i]).collect())
        .collect()
}

fn linear_extensions(
    count: usize,
    edges: &[(usize, usize)],
    cap: Option<usize>,
) -> Vec<Vec<usize>> {
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); count];
    let mut indeg = vec![0usize; count];
    for &(a, b) in edges {
        succs[a].push(b);
        indeg[b] += 1;
    }
    let mut out = Vec::new();
    let mut order = Vec::with_capacity(count);
    let mut used = vec![false; count];
    fn rec(
        count: usize,
        succs: &[Vec<usize>],
        indeg: &mut [usize],
        used: &mut [bool],
        order: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: Option<usize>,
    ) {
        if cap.is_some_and(|c| out.len() >= c) {
            return;
        }
        if order.len() == count {
            out.push(order.clone());
            return;
        }
        for i in 0..count {
            if used[i] || indeg[i] != 0 {
                continue;
            }
            used[i] = true;
            order.push(i);
            for &j in &succs[i] {
                indeg[j] -= 1;
            }
            rec(count, succs, indeg, used, order, out, cap);
            for &j in &succs[i] {
                indeg[j] += 1;
            }
            order.pop();
            used[i] = false;
        }
    }
    rec(count, &succs, &mut indeg, &mut used, &mut order, &mut out, cap);
    out
}

/// Reads an element of `B(n-1,d)` off a full order of `binom([n-1],d)`
/// (used by [`g_via_ascending`]; exposed for independence tests).
pub fn g_from_concatenation(
    n: u32,
    d: usize,
    sequence: Vec<LabelSet>,
) -> Result<BruhatElement, MapsError> {
    let order = AdmissibleOrder { n: n - 1, d, sequence };
    Ok(inversion_set(&order)?)
}

/// `g` by concatenating rectangular orders of the simplex rectangles along
/// an ascending order of `S`.
pub fn g_via_ascending(s: &Triangulation) -> Result<BruhatElement, MapsError> {
    if !s.has_standard_ground() {
        return Err(MapsError::BadGround(format!("[1..{}]", s.n())));
    }
    let asc = ascending_orders(s, Some(1))?
        .into_iter()
        .next()
        .ok_or_else(|| MapsError::Internal("no ascending order".into()))?;
    let mut sequence = Vec::new();
    for a in asc {
        let rect = snug_rectangle(a);
        let ord = rectangular_orders(&rect, Some(1))
            .into_iter()
            .next()
            .ok_or_else(|| MapsError::Internal("no rectangular order".into()))?;
        sequence.extend(ord);
    }
    g_from_concatenation(s.n() as u32, s.d, sequence)
}

/// `g` by the chain definition (`d ≥ 2` only): take the chain of
/// triangulations one dimension down induced by an ascending order, apply
/// `g` to each, and refine the resulting chain in `B(n-1,d-1)` to a maximal
/// chain; its step order determines the element of `B(n-1,d)`.
pub fn g_via_chain(s: &Triangulation) -> Result<BruhatElement, MapsError> {
    if s.d < 2 {
        return Err(MapsError::UnsupportedDimension(s.d));
    }
    if !s.has_standard_ground() {
        return Err(MapsError::BadGround(format!("[1..{}]", s.n())));
    }
    let n = s.n() as u32;
    let asc = ascending_orders(s, Some(1))?
        .into_iter()
        .next()
        .ok_or_else(|| MapsError::Internal("no ascending order".into()))?;
    let (mut t, _) = bottom_top(&s.labels, s.d - 1);
    let mut targets = vec![g(&t)?.inversions];
    for a in asc {
        for f in lower_facets_simplex(a) {
            if !t.simplices.remove(&f) {
                return Err(MapsError::Internal(format!(
                    "ascending chain misses facet {f:?}"
                )));
            }
        }
        t.simplices.extend(upper_facets_simplex(a));
        targets.push(g(&t)?.inversions);
    }
    let order = admissible_order_through(n - 1, s.d - 1, &targets)?;
    Ok(inversion_set(&order)?)
}

/// The inverse of `g` on its image: `None` unless the inversion set is
/// superconsistent, else the triangulation assembled from the window
/// simplices `S_X = [n] \ {s_1ᶜ, …}` determined by the parity rules.
pub fn g_inverse(e: &BruhatElement) -> Result<Option<Triangulation>, MapsError> {
    if !is_superconsistent(&e.inversions, e.n, e.d) {
        return Ok(None);
    }
    let n = e.n + 1;
    let d = e.d;
    let mut simplices = BTreeSet::new();
    for x in k_subsets(LabelSet::interval(1, n - 1), d) {
        let complement = LabelSet::interval(1, n - 1).difference(x);
        let mut removed = Vec::new();
        for (idx, xc) in complement.iter().enumerate() {
            let i = idx as u32 + 1;
            let in_i = e.inversions.contains(&x.with(xc));
            let even = (d as u32 + i).wrapping_sub(xc) % 2 == 0;
            let s = if in_i == even { xc } else { xc + 1 };
            removed.push(s);
        }
        let mut sx = LabelSet::interval(1, n);
        for r in removed {
            sx = sx.without(r);
        }
        if sx.len() != d + 1 {
            return Err(MapsError::Internal(format!(
                "window choices collide for X = {x:?}"
            )));
        }
        simplices.insert(sx);
    }
    Ok(Some(Triangulation::new((1..=n).collect(), d, simplices)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::extension;

    fn s(v: &[u32]) -> LabelSet {
        LabelSet::from_slice(v).unwrap()
    }

    fn elt(n: u32, d: usize, inv: &[&[u32]]) -> BruhatElement {
        BruhatElement::new(n, d, inv.iter().map(|v| s(v)).collect()).unwrap()
    }

    fn simplex_set(t: &Triangulation) -> BTreeSet<Vec<u32>> {
        t.simplices.iter().map(|s| s.elements()).collect()
    }

    #[test]
    fn f_base_case() {
        let e = elt(3, 0, &[&[2]]);
        let t = f_def1(&e).unwrap();
        assert_eq!(
            simplex_set(&t),
            [vec![0, 1], vec![1, 3], vec![3, 4]].into_iter().collect()
        );
        assert_eq!(f_def2(&e).unwrap(), t);
    }

    #[test]
    fn f_def2_small_d1() {
        let bottom = BruhatElement::bottom(2, 1);
        let t = f_def2(&bottom).unwrap();
        assert_eq!(
            simplex_set(&t),
            [vec![0, 1, 2], vec![0, 2, 3]].into_iter().collect()
        );
        let top = BruhatElement::top(2, 1);
        let t = f_def2(&top).unwrap();
        assert_eq!(
            simplex_set(&t),
            [vec![0, 1, 3], vec![1, 2, 3]].into_iter().collect()
        );
    }

    #[test]
    fn f_def2_golden() {
        let e = elt(6, 2, &[&[1, 2, 3], &[1, 2, 4], &[4, 5, 6], &[3, 5, 6]]);
        let t = f_def2(&e).unwrap();
        let expected: BTreeSet<Vec<u32>> = [
            vec![0, 1, 2, 5],
            vec![0, 1, 5, 6],
            vec![0, 1, 6, 7],
            vec![0, 2, 3, 4],
            vec![0, 2, 4, 5],
            vec![1, 2, 5, 6],
            vec![1, 2, 6, 7],
            vec![2, 3, 4, 5],
            vec![2, 3, 5, 7],
            vec![2, 5, 6, 7],
            vec![3, 4, 5, 7],
        ]
        .into_iter()
        .collect();
        assert_eq!(simplex_set(&t), expected);
        assert_eq!(f_def1(&e).unwrap(), t);
        assert_eq!(f_def3(&e).unwrap(), t);
    }

    #[test]
    fn f_bottom_to_bottom() {
        for (n, d) in [(3, 1), (4, 1), (4, 2)] {
            let img = f_def2(&BruhatElement::bottom(n, d)).unwrap();
            let (bot, _) = bottom_top(&(0..=n + 1).collect::<Vec<_>>(), d + 1);
            assert_eq!(img, bot);
            let img = f_def2(&BruhatElement::top(n, d)).unwrap();
            let (_, top) = bottom_top(&(0..=n + 1).collect::<Vec<_>>(), d + 1);
            assert_eq!(img, top);
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&[]).to_string(), ".");
        assert_eq!(psi(&[2, 1]).to_string(), "(.(..))");
        assert_eq!(psi(&[1, 3, 2]).to_string(), "((..)(..))");
    }

    #[test]
    fn theta_examples() {
        let t = Triangulation::new(
            vec![0, 1, 2, 3],
            2,
            [s(&[0, 1, 2]), s(&[0, 2, 3])].into_iter().collect(),
        )
        .unwrap();
        assert_eq!(theta_inverse(&t).unwrap(), psi(&[1, 2]));
        let t = Triangulation::new(
            vec![0, 1, 2, 3],
            2,
            [s(&[0, 1, 3]), s(&[1, 2, 3])].into_iter().collect(),
        )
        .unwrap();
        assert_eq!(theta_inverse(&t).unwrap(), psi(&[2, 1]));
    }

    #[test]
    fn prop_theta_psi_on_b31() {
        for e in enumerate_bruhat(3, 1, None).unwrap() {
            let perm = element_to_perm(&e).unwrap();
            assert_eq!(
                theta_inverse(&f_def2(&e).unwrap()).unwrap(),
                psi(&inverse_perm(&perm)),
                "perm {perm:?}"
            );
        }
    }

    #[test]
    fn fiber_examples() {
        let t = Triangulation::new(
            vec![0, 1, 2, 3],
            2,
            [s(&[0, 1, 3]), s(&[1, 2, 3])].into_iter().collect(),
        )
        .unwrap();
        let fiber = fiber_f(&t, 2, 1, None).unwrap();
        assert_eq!(fiber.len(), 1);
        assert_eq!(element_to_perm(&fiber[0]).unwrap(), vec![2, 1]);
    }

    #[test]
    fn min_max_examples() {
        let fan = Triangulation::new(
            vec![0, 1, 2, 3, 4],
            2,
            [s(&[0, 1, 2]), s(&[0, 2, 3]), s(&[0, 3, 4])].into_iter().collect(),
        )
        .unwrap();
        let (min, _) = min_max_fiber(&fan).unwrap();
        assert_eq!(min, vec![1, 2, 3]);
        let t = Triangulation::new(
            vec![0, 1, 2, 3],
            2,
            [s(&[0, 1, 3]), s(&[1, 2, 3])].into_iter().collect(),
        )
        .unwrap();
        let (min, max) = min_max_fiber(&t).unwrap();
        assert_eq!(min, vec![2, 1]);
        assert_eq!(max, vec![2, 1]);
    }

    #[test]
    fn witness_small() {
        use crate::cyclic::enumerate_tamari_flip;
        for t in enumerate_tamari_flip(&(0..=4).collect::<Vec<_>>(), 2, None).unwrap() {
            let e = surjectivity_witness(&t).unwrap();
            assert_eq!(f_def2(&e).unwrap(), t);
        }
        for t in enumerate_tamari_flip(&(0..=4).collect::<Vec<_>>(), 3, None).unwrap() {
            let e = surjectivity_witness(&t).unwrap();
            assert_eq!(f_def2(&e).unwrap(), t);
        }
    }

    #[test]
    fn g_extremes() {
        let (bot, top) = bottom_top(&[1, 2, 3, 4], 1);
        assert!(g(&bot).unwrap().inversions.is_empty());
        assert_eq!(g(&top).unwrap(), BruhatElement::top(3, 1));
    }

    #[test]
    fn g_definitions_agree_small() {
        use crate::cyclic::enumerate_tamari;
        for t in enumerate_tamari(5, 2, None).unwrap() {
            let via = g_via_ascending(&t).unwrap();
            let direct = g(&t).unwrap();
            assert_eq!(via, direct);
            assert_eq!(g_via_chain(&t).unwrap(), direct);
        }
    }

    #[test]
    fn rectangular_orders_example() {
        let r = snug_rectangle(s(&[1, 3, 5]));
        let orders = rectangular_orders(&r, None);
        let words: BTreeSet<Vec<Vec<u32>>> = orders
            .iter()
            .map(|o| o.iter().map(|m| m.elements()).collect())
            .collect();
        let expected: BTreeSet<Vec<Vec<u32>>> = [
            vec![vec![1, 4], vec![1, 3], vec![2, 4], vec![2, 3]],
            vec![vec![1, 4], vec![2, 4], vec![1, 3], vec![2, 3]],
        ]
        .into_iter()
        .collect();
        assert_eq!(words, expected);
    }

    #[test]
    fn g_inverse_small() {
        // B(3,1): exactly 4 of 6 elements are superconsistent.
        let mut preimages = 0;
        for e in enumerate_bruhat(3, 1, None).unwrap() {
            if let Some(t) = g_inverse(&e).unwrap() {
                preimages += 1;
                assert_eq!(g(&t).unwrap(), e);
            }
        }
        assert_eq!(preimages, 4);
    }

    #[test]
    fn extension_is_fg() {
        use crate::cyclic::enumerate_tamari;
        for t in enumerate_tamari(4, 1, None).unwrap() {
            let lhs = f_def2(&g(&t).unwrap()).unwrap();
            let ext = extension(&t).unwrap();
            assert_eq!(simplex_set(&lhs), simplex_set(&ext));
        }
    }
}
