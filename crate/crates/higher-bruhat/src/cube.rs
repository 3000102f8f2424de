//! The convex-geometric cube model of `B(n,d)`.
//!
//! Each element `α` determines a set `K(α)` of `d`-faces of the standard
//! `n`-cube `[-1,1]^n`, one face per `d`-subset `X` of `[n]`. Under any
//! totally positive linear projection to `R^d` the faces of `K(α)` tile the
//! image of the cube; [`verify_tiling`] checks this exactly (rational
//! arithmetic, no tolerances) by matching `(d-1)`-subfaces and testing that
//! neighbouring faces project to opposite sides of their shared subface.
//!
//! ```
//! use higher_bruhat::bruhat::{enumerate_bruhat};
//! use higher_bruhat::cube::{complex_of, vandermonde_map, verify_tiling};
//!
//! let t = vandermonde_map(4, 2);
//! for e in enumerate_bruhat(4, 2, None).unwrap() {
//!     let report = verify_tiling(&complex_of(&e), &t).unwrap();
//!     assert!(report.ok(), "{:?}", report.violations);
//! }
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bruhat::BruhatElement;
use crate::subsets::{k_subsets, LabelSet};

/// Errors from cube-model operations.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CubeError {
    /// `p_sign` was evaluated at a point of `X`.
    #[error("p-sign undefined: {y} lies in X")]
    PointInX {
        /// Offending coordinate.
        y: u32,
    },
    /// Facets of a 0-dimensional face were requested.
    #[error("a 0-dimensional face has no facets")]
    ZeroDimensional,
    /// The supplied projection is not totally positive.
    #[error("projection is not totally positive")]
    NotTotallyPositive,
    /// Row/column shape mismatch.
    #[error("projection shape mismatch: expected {expected} rows, got {got}")]
    ShapeMismatch {
        /// Rows required (`d`).
        expected: usize,
        /// Rows supplied.
        got: usize,
    },
}

/// A face of the standard `n`-cube: a total map `[n] → {-1, *, +1}`.
///
/// Serialized as a string over `-*+` of length `n` (position `i` holds the
/// sign of coordinate `i`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeFace {
    signs: Vec<i8>,
}

impl CubeFace {
    /// Builds a face from signs (`-1`, `0` for star, `+1`), indexed by
    /// coordinate `1..=n`.
    pub fn new(signs: Vec<i8>) -> Self {
        assert!(signs.iter().all(|s| (-1..=1).contains(s)));
        CubeFace { signs }
    }

    /// Ambient dimension `n`.
    pub fn n(&self) -> usize {
        self.signs.len()
    }

    /// Face dimension: the number of star coordinates.
    pub fn dim(&self) -> usize {
        self.signs.iter().filter(|&&s| s == 0).count()
    }

    /// Sign at coordinate `i` (1-based); `0` encodes a star.
    pub fn sign(&self, i: u32) -> i8 {
        self.signs[(i - 1) as usize]
    }

    /// Star coordinates in increasing order.
    pub fn stars(&self) -> Vec<u32> {
        (1..=self.signs.len() as u32).filter(|&i| self.sign(i) == 0).collect()
    }

    /// The face with coordinate `i` fixed to `value`.
    pub fn fix(&self, i: u32, value: i8) -> Self {
        assert!(self.sign(i) == 0 && (value == -1 || value == 1));
        let mut signs = self.signs.clone();
        signs[(i - 1) as usize] = value;
        CubeFace { signs }
    }

    /// All vertices of the face as sign vectors.
    pub fn vertices(&self) -> Vec<Vec<i8>> {
        let stars = self.stars();
        let mut out = Vec::with_capacity(1 << stars.len());
        for mask in 0..(1u32 << stars.len()) {
            let mut v = self.signs.clone();
            for (k, &i) in stars.iter().enumerate() {
                v[(i - 1) as usize] = if mask & (1 << k) != 0 { 1 } else { -1 };
            }
            out.push(v);
        }
        out
    }

    /// String rendering over `-*+`.
    pub fn encode(&self) -> String {
        self.signs
            .iter()
            .map(|&s| match s {
                -1 => '-',
                0 => '*',
                _ => '+',
            })
            .collect()
    }

    /// Parses the `-*+` string form.
    pub fn decode(text: &str) -> Option<Self> {
        let mut signs = Vec::with_capacity(text.len());
        for c in text.chars() {
            signs.push(match c {
                '-' => -1,
                '*' => 0,
                '+' => 1,
                _ => return None,
            });
        }
        Some(CubeFace { signs })
    }
}

impl fmt::Debug for CubeFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

/// The sign `p(y, X)` for `y ∉ X = {a_1 < … < a_d}`: `(-1)^d` below `a_1`,
/// `(-1)^{d-i}` between `a_i` and `a_{i+1}`, `+1` above `a_d`.
pub fn p_sign(y: u32, x: LabelSet) -> Result<i8, CubeError> {
    if x.contains(y) {
        return Err(CubeError::PointInX { y });
    }
    let above = x.elements().iter().filter(|&&a| a > y).count();
    Ok(if above % 2 == 0 { 1 } else { -1 })
}

/// The face `F^α_X` of `K(α)`: stars on `X`, and elsewhere
/// `p(i,X) · Ξ_{I(α)}(X ∪ {i})` with `Ξ` valued `+1` on inversions.
pub fn face_of(e: &BruhatElement, x: LabelSet) -> CubeFace {
    let n = e.n;
    let mut signs = Vec::with_capacity(n as usize);
    for i in 1..=n {
        if x.contains(i) {
            signs.push(0);
        } else {
            let xi = if e.inversions.contains(&x.with(i)) { 1 } else { -1 };
            signs.push(p_sign(i, x).expect("i not in X") * xi);
        }
    }
    CubeFace::new(signs)
}

/// The full face complex `K(α)`: one `d`-face per `d`-subset of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceComplex {
    /// Ground set bound.
    pub n: u32,
    /// Face dimension.
    pub d: usize,
    /// One face per `d`-subset, keyed by the star set.
    pub faces: BTreeMap<LabelSet, CubeFace>,
}

/// Builds `K(α)`.
pub fn complex_of(e: &BruhatElement) -> FaceComplex {
    let faces = k_subsets(LabelSet::interval(1, e.n), e.d)
        .into_iter()
        .map(|x| (x, face_of(e, x)))
        .collect();
    FaceComplex { n: e.n, d: e.d, faces }
}

/// Upper facets of a face: with star positions indexed `1..=d` in increasing
/// coordinate order, upper facet `i` fixes star `i` to `(-1)^{d+i}`.
pub fn upper_facets(face: &CubeFace) -> Result<Vec<CubeFace>, CubeError> {
    facets(face, 0)
}

/// Lower facets: facet `i` fixes star `i` to `(-1)^{d+i+1}`.
pub fn lower_facets(face: &CubeFace) -> Result<Vec<CubeFace>, CubeError> {
    facets(face, 1)
}

fn facets(face: &CubeFace, parity_shift: usize) -> Result<Vec<CubeFace>, CubeError> {
    let d = face.dim();
    if d == 0 {
        return Err(CubeError::ZeroDimensional);
    }
    Ok(face
        .stars()
        .iter()
        .enumerate()
        .map(|(idx, &coord)| {
            let i = idx + 1;
            let value = if (d + i + parity_shift) % 2 == 0 { 1 } else { -1 };
            face.fix(coord, value)
        })
        .collect())
}

/// An exact-rational linear map, identified with a `rows × cols` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactLinearMap {
    /// Row count.
    pub rows: usize,
    /// Column count.
    pub cols: usize,
    /// Row-major entries.
    pub entries: Vec<Vec<BigRational>>,
}

impl ExactLinearMap {
    /// Column `j` (1-based) as a vector.
    pub fn column(&self, j: u32) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.entries[i][(j - 1) as usize].clone()).collect()
    }

    /// Applies the map to an integer sign vector.
    pub fn apply_signs(&self, v: &[i8]) -> Vec<BigRational> {
        (0..self.rows)
            .map(|i| {
                v.iter()
                    .enumerate()
                    .map(|(j, &s)| &self.entries[i][j] * BigRational::from(BigInt::from(s)))
                    .sum()
            })
            .collect()
    }

    /// Exact check that all minors (of all sizes) are positive.
    pub fn is_totally_positive(&self) -> bool {
        for size in 1..=self.rows.min(self.cols) {
            for rows in index_subsets(self.rows, size) {
                for cols in index_subsets(self.cols, size) {
                    let m: Vec<Vec<BigRational>> = rows
                        .iter()
                        .map(|&r| cols.iter().map(|&c| self.entries[r][c].clone()).collect())
                        .collect();
                    if !determinant(m).is_positive() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Exact determinant by fraction-free-ish Gaussian elimination on rationals.
pub fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= pv.clone();
        for r in col + 1..n {
            let factor = &m[r][col] / &pv;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// The Vandermonde projection `T_{ij} = j^i` for `i ∈ [d]`, `j ∈ [n]`;
/// totally positive (asserted exactly for `n ≤ 8`).
pub fn vandermonde_map(n: u32, d: usize) -> ExactLinearMap {
    let entries: Vec<Vec<BigRational>> = (1..=d)
        .map(|i| {
            (1..=n)
                .map(|j| BigRational::from(BigInt::from(j).pow(i as u32)))
                .collect()
        })
        .collect();
    let map = ExactLinearMap { rows: d, cols: n as usize, entries };
    if n <= 8 {
        debug_assert!(map.is_totally_positive());
    }
    map
}

/// A single tiling defect found by [`verify_tiling`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TilingViolation {
    /// A subface borders only one face but is not on the cube boundary.
    DanglingSubface(String),
    /// A subface borders two faces whose interiors project to the same side.
    SameSide(String),
    /// A subface borders more than two faces.
    Overcrowded(String, usize),
    /// A boundary subface of `K(0̂) ∪ K(1̂)` is missing or duplicated.
    BoundaryMismatch(String),
}

/// Outcome of an exact tiling verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingReport {
    /// Sorted list of defects; empty means the complex tiles the projection.
    pub violations: Vec<TilingViolation>,
}

impl TilingReport {
    /// True when no defects were found.
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies that the projection of `K` under `t` tiles the projected cube:
/// every `(d-1)`-subface is either shared by exactly two faces on opposite
/// sides, or lies (exactly once) on the boundary `K(0̂_{d-1}) ∪ K(1̂_{d-1})`.
pub fn verify_tiling(k: &FaceComplex, t: &ExactLinearMap) -> Result<TilingReport, CubeError> {
    if t.rows != k.d {
        return Err(CubeError::ShapeMismatch { expected: k.d, got: t.rows });
    }
    if !t.is_totally_positive() {
        return Err(CubeError::NotTotallyPositive);
    }
    let mut violations = Vec::new();

    // Gather subfaces: map encoded subface -> list of (parent X, fixed coord, fixed sign).
    let mut incidence: BTreeMap<CubeFace, Vec<(LabelSet, u32, i8)>> = BTreeMap::new();
    for (&x, face) in &k.faces {
        for coord in face.stars() {
            for value in [-1i8, 1] {
                incidence.entry(face.fix(coord, value)).or_default().push((x, coord, value));
            }
        }
    }

    // Boundary reference: K(0̂_{d-1}) ∪ K(1̂_{d-1}).
    let bottom = BruhatElement::bottom(k.n, k.d - 1);
    let top = BruhatElement::top(k.n, k.d - 1);
    let mut boundary: BTreeMap<CubeFace, usize> = BTreeMap::new();
    for y in k_subsets(LabelSet::interval(1, k.n), k.d - 1) {
        *boundary.entry(face_of(&bottom, y)).or_default() += 1;
        *boundary.entry(face_of(&top, y)).or_default() += 1;
    }

    let mut seen_boundary: BTreeMap<CubeFace, usize> = BTreeMap::new();
    for (subface, parents) in &incidence {
        match parents.len() {
            1 => {
                if boundary.contains_key(subface) {
                    *seen_boundary.entry(subface.clone()).or_default() += 1;
                } else {
                    violations.push(TilingViolation::DanglingSubface(subface.encode()));
                }
            }
            2 => {
                let s0 = side_sign(t, subface, parents[0]);
                let s1 = side_sign(t, subface, parents[1]);
                if s0 == 0 || s1 == 0 || s0 == s1 {
                    violations.push(TilingViolation::SameSide(subface.encode()));
                }
            }
            m => violations.push(TilingViolation::Overcrowded(subface.encode(), m)),
        }
    }
    for (subface, &count) in &boundary {
        if seen_boundary.get(subface).copied().unwrap_or(0) != count {
            violations.push(TilingViolation::BoundaryMismatch(subface.encode()));
        }
    }
    violations.sort();
    Ok(TilingReport { violations })
}

/// Sign of the determinant spanned by the projected star directions of the
/// subface followed by the parent's inward direction at the fixed coordinate.
fn side_sign(t: &ExactLinearMap, subface: &CubeFace, parent: (LabelSet, u32, i8)) -> i8 {
    let (_, fixed_coord, fixed_value) = parent;
    let mut cols: Vec<Vec<BigRational>> =
        subface.stars().iter().map(|&i| t.column(i)).collect();
    // Interior of the parent lies in direction -s·e_j from the subface.
    let inward: Vec<BigRational> = t
        .column(fixed_coord)
        .into_iter()
        .map(|v| v * BigRational::from(BigInt::from(-fixed_value)))
        .collect();
    cols.push(inward);
    // Columns as a square matrix (d columns of height d).
    let d = cols.len();
    let m: Vec<Vec<BigRational>> =
        (0..d).map(|r| (0..d).map(|c| cols[c][r].clone()).collect()).collect();
    let det = determinant(m);
    match det.cmp(&BigRational::zero()) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

/// The vertex figure of `K(α)` at `(1,…,1)`: the `d`-subsets whose faces
/// have every non-star coordinate equal to `+1`.
pub fn vertex_figure_ones(e: &BruhatElement) -> Vec<LabelSet> {
    let bad: i8 = -1;
    k_subsets(LabelSet::interval(1, e.n), e.d)
        .into_iter()
        .filter(|&x| {
            let face = face_of(e, x);
            (1..=e.n).all(|i| face.sign(i) != bad)
        })
        .collect()
}

/// The prefix-extremum map `W(a) = (a_1, min(a_1,a_2), …, min(a_1,…,a_n))`
/// applied to all vertices of the face; true iff the image point set has
/// affine rank equal to the face dimension.
pub fn maxprefix_preserves_dim(face: &CubeFace) -> bool {
    maxprefix_image_labels(face).len() == face.dim() + 1
}

/// Vertex labels of the image simplex of a face under the prefix-extremum
/// map.
///
/// The monotone sign vectors are the vertices of a simplex; the vector with
/// `a-1` leading `+1`s is labelled `a ∈ [1, n+1]`.
pub fn maxprefix_image_labels(face: &CubeFace) -> LabelSet {
    let mut labels = LabelSet::EMPTY;
    for v in face.vertices() {
        let mut running = 1i8;
        let mut leading = 0u32;
        for &a in &v {
            running = running.min(a);
            if running == 1 {
                leading += 1;
            }
        }
        labels = labels.with(leading + 1);
    }
    labels
}
