//! Finite-poset infrastructure shared by both element families: Hasse
//! diagrams built from cover functions, Möbius values on intervals,
//! monotone-map checking, and deterministic DOT/JSON export.
//!
//! ```
//! use higher_bruhat::bruhat::{covers_up, enumerate_bruhat};
//! use higher_bruhat::poset::{build_hasse, moebius};
//!
//! let elements = enumerate_bruhat(4, 2, None).unwrap();
//! let h = build_hasse("bruhat", &elements, |e| e.to_json().to_string(), covers_up)
//!     .unwrap();
//! assert_eq!(h.keys.len(), 8);
//!
//! // B(4,2) is a ball-like interval: μ(bottom, top) = 1.
//! let bottom = h.sources()[0];
//! let top = h.sinks()[0];
//! assert_eq!(moebius(&h, bottom, top).unwrap(), 1);
//! ```

use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Errors from poset construction and queries.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PosetError {
    /// The cover relation contained a cycle.
    #[error("cover relation contains a cycle")]
    Cycle,
    /// A cover edge is implied by a longer path (not a transitive reduction).
    #[error("cover {0} -> {1} is implied by a longer path")]
    NotReduced(String, String),
    /// A referenced element is missing from the diagram.
    #[error("element not in diagram: {0}")]
    UnknownElement(String),
    /// Möbius was asked for an interval with `a ≰ b`.
    #[error("elements are incomparable")]
    Incomparable,
    /// JSON import failed.
    #[error("malformed diagram serialization")]
    BadSerialization,
}

/// A Hasse diagram: elements keyed by canonical strings, cover edges as
/// index pairs `(lower, upper)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    /// Family tag (`"bruhat"`, `"tamari"`, or a custom label).
    pub kind: String,
    /// Canonical element keys; index order is the canonical order.
    pub keys: Vec<String>,
    /// Cover edges `(i, j)` meaning `keys[i] ⋖ keys[j]`, sorted.
    pub covers: Vec<(usize, usize)>,
    reach: Vec<BTreeSet<usize>>,
}

/// Builds a Hasse diagram from a list of elements, a canonical-key function,
/// and a function producing the covers (elements immediately above).
///
/// Validates acyclicity and the transitive-reduction property.
pub fn build_hasse<T>(
    kind: &str,
    elements: &[T],
    key_of: impl Fn(&T) -> String,
    covers_of: impl Fn(&T) -> Vec<T>,
) -> Result<HasseDiagram, PosetError> {
    let keys: Vec<String> = elements.iter().map(&key_of).collect();
    let index: BTreeMap<&str, usize> =
        keys.iter().enumerate().map(|(i, k)| (k.as_str(), i)).collect();
    if index.len() != keys.len() {
        return Err(PosetError::BadSerialization);
    }
    let mut covers = Vec::new();
    for (i, e) in elements.iter().enumerate() {
        for c in covers_of(e) {
            let k = key_of(&c);
            let j = *index
                .get(k.as_str())
                .ok_or_else(|| PosetError::UnknownElement(k.clone()))?;
            covers.push((i, j));
        }
    }
    covers.sort_unstable();
    covers.dedup();
    HasseDiagram::from_parts(kind.to_string(), keys, covers)
}

impl HasseDiagram {
    /// Assembles and validates a diagram from raw parts.
    pub fn from_parts(
        kind: String,
        keys: Vec<String>,
        covers: Vec<(usize, usize)>,
    ) -> Result<Self, PosetError> {
        let n = keys.len();
        let mut succs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(PosetError::BadSerialization);
            }
            succs[a].push(b);
        }
        // Reachability (strictly above) by reverse-topological accumulation.
        let order = topo_order(n, &covers).ok_or(PosetError::Cycle)?;
        let mut reach: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &v in order.iter().rev() {
            let mut acc = BTreeSet::new();
            for &w in &succs[v] {
                acc.insert(w);
                acc.extend(reach[w].iter().copied());
            }
            reach[v] = acc;
        }
        // Transitive reduction: no cover edge may be reachable via two steps.
        for &(a, b) in &covers {
            if succs[a]
                .iter()
                .any(|&m| m != b && reach[m].contains(&b))
            {
                return Err(PosetError::NotReduced(
                    keys[a].clone(),
                    keys[b].clone(),
                ));
            }
        }
        Ok(HasseDiagram { kind, keys, covers, reach })
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    /// True if the diagram has no elements.
    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Index of a key.
    pub fn index_of(&self, key: &str) -> Result<usize, PosetError> {
        self.keys
            .iter()
            .position(|k| k == key)
            .ok_or_else(|| PosetError::UnknownElement(key.to_string()))
    }

    /// Order relation `a ≤ b` (reflexive).
    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.reach[a].contains(&b)
    }

    /// Minimal elements.
    pub fn sources(&self) -> Vec<usize> {
        let above: BTreeSet<usize> = self.covers.iter().map(|&(_, b)| b).collect();
        (0..self.len()).filter(|i| !above.contains(i)).collect()
    }

    /// Maximal elements.
    pub fn sinks(&self) -> Vec<usize> {
        let below: BTreeSet<usize> = self.covers.iter().map(|&(a, _)| a).collect();
        (0..self.len()).filter(|i| !below.contains(i)).collect()
    }

    /// The opposite poset (covers flipped); useful for order-reversing maps.
    pub fn reversed(&self) -> HasseDiagram {
        let covers: Vec<(usize, usize)> = {
            let mut c: Vec<_> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
            c.sort_unstable();
            c
        };
        HasseDiagram::from_parts(self.kind.clone(), self.keys.clone(), covers)
            .expect("reverse of a valid diagram is valid")
    }

    /// All `z` in the closed interval `[a, b]`.
    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| self.leq(a, z) && self.leq(z, b))
            .collect()
    }
}

fn topo_order(n: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        succs[a].push(b);
        indeg[b] += 1;
    }
    let mut queue: VecDeque<usize> =
        (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &succs[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Möbius value `μ(a, b)` on the interval `[a, b]`, by the standard
/// recursion `μ(a,b) = -Σ_{a ≤ z < b} μ(a,z)` with memoization.
pub fn moebius(h: &HasseDiagram, a: usize, b: usize) -> Result<i64, PosetError> {
    if !h.leq(a, b) {
        return Err(PosetError::Incomparable);
    }
    let mut memo: BTreeMap<usize, i64> = BTreeMap::new();
    fn mu(h: &HasseDiagram, a: usize, z: usize, memo: &mut BTreeMap<usize, i64>) -> i64 {
        if a == z {
            return 1;
        }
        if let Some(&v) = memo.get(&z) {
            return v;
        }
        let mut sum = 0i64;
        for w in 0..h.len() {
            if w != z && h.leq(a, w) && h.leq(w, z) {
                sum += mu(h, a, w, memo);
            }
        }
        memo.insert(z, -sum);
        -sum
    }
    Ok(mu(h, a, b, &mut memo))
}

/// Cover pairs of `src` whose images under `map_key` are not `≤`-related in
/// `dst`; an empty report certifies the map monotone on covers (hence on the
/// order).
pub fn check_monotone(
    map_key: impl Fn(&str) -> String,
    src: &HasseDiagram,
    dst: &HasseDiagram,
) -> Result<Vec<(usize, usize)>, PosetError> {
    let mut violations = Vec::new();
    for &(a, b) in &src.covers {
        let ia = dst.index_of(&map_key(&src.keys[a]))?;
        let ib = dst.index_of(&map_key(&src.keys[b]))?;
        if !dst.leq(ia, ib) {
            violations.push((a, b));
        }
    }
    Ok(violations)
}

/// Export format for Hasse diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    /// Graphviz DOT.
    Dot,
    /// JSON mirroring [`HasseDiagram`].
    Json,
}

/// Deterministic serialization of a diagram.
pub fn export(h: &HasseDiagram, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => {
            let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
            for (i, k) in h.keys.iter().enumerate() {
                out.push_str(&format!("  n{} [label={:?}];\n", i, k));
            }
            for &(a, b) in &h.covers {
                out.push_str(&format!("  n{a} -> n{b};\n"));
            }
            out.push_str("}\n");
            out
        }
        ExportFormat::Json => {
            let v = serde_json::json!({
                "kind": h.kind,
                "keys": h.keys,
                "covers": h.covers,
            });
            let mut s = serde_json::to_string_pretty(&v).expect("serializable");
            s.push('\n');
            s
        }
    }
}

/// Re-imports a JSON export.
pub fn import_json(text: &str) -> Result<HasseDiagram, PosetError> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|_| PosetError::BadSerialization)?;
    let kind = v["kind"].as_str().ok_or(PosetError::BadSerialization)?.to_string();
    let keys: Vec<String> = v["keys"]
        .as_array()
        .ok_or(PosetError::BadSerialization)?
        .iter()
        .map(|k| k.as_str().map(|s| s.to_string()).ok_or(PosetError::BadSerialization))
        .collect::<Result<_, _>>()?;
    let covers: Vec<(usize, usize)> = v["covers"]
        .as_array()
        .ok_or(PosetError::BadSerialization)?
        .iter()
        .map(|p| {
            let arr = p.as_array().ok_or(PosetError::BadSerialization)?;
            match (arr[0].as_u64(), arr[1].as_u64()) {
                (Some(a), Some(b)) => Ok((a as usize, b as usize)),
                _ => Err(PosetError::BadSerialization),
            }
        })
        .collect::<Result<_, _>>()?;
    HasseDiagram::from_parts(kind, keys, covers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruhat::{covers_up, enumerate_bruhat};
    use crate::cyclic::{covers_up_t, enumerate_tamari};

    fn bruhat_hasse(n: u32, d: usize) -> HasseDiagram {
        let elements = enumerate_bruhat(n, d, None).unwrap();
        build_hasse(
            "bruhat",
            &elements,
            |e| e.to_json().to_string(),
            covers_up,
        )
        .unwrap()
    }

    fn tamari_hasse(n: u32, d: usize) -> HasseDiagram {
        let elements = enumerate_tamari(n, d, None).unwrap();
        build_hasse(
            "tamari",
            &elements,
            |t| t.to_json().to_string(),
            covers_up_t,
        )
        .unwrap()
    }

    #[test]
    fn weak_order_s3() {
        let h = bruhat_hasse(3, 1);
        assert_eq!(h.len(), 6);
        assert_eq!(h.covers.len(), 6);
        assert_eq!(h.sources().len(), 1);
        assert_eq!(h.sinks().len(), 1);
    }

    #[test]
    fn pentagon() {
        let h = tamari_hasse(5, 2);
        assert_eq!(h.len(), 5);
        assert_eq!(h.covers.len(), 5);
        assert_eq!(h.sources().len(), 1);
        assert_eq!(h.sinks().len(), 1);
    }

    #[test]
    fn moebius_values() {
        let h = bruhat_hasse(3, 1);
        let bot = h.sources()[0];
        let top = h.sinks()[0];
        assert_eq!(moebius(&h, bot, bot), Ok(1));
        assert_eq!(moebius(&h, bot, top), Ok(1));
        let h = tamari_hasse(5, 2);
        assert_eq!(moebius(&h, h.sources()[0], h.sinks()[0]), Ok(1));
    }

    #[test]
    fn transitive_reduction_rejected() {
        let r = HasseDiagram::from_parts(
            "test".into(),
            vec!["a".into(), "b".into(), "c".into()],
            vec![(0, 1), (0, 2), (1, 2)],
        );
        assert!(matches!(r, Err(PosetError::NotReduced(_, _))));
        let r = HasseDiagram::from_parts(
            "test".into(),
            vec!["a".into(), "b".into()],
            vec![(0, 1), (1, 0)],
        );
        assert_eq!(r.unwrap_err(), PosetError::Cycle);
    }

    #[test]
    fn export_roundtrip() {
        let h = tamari_hasse(5, 2);
        let json = export(&h, ExportFormat::Json);
        let back = import_json(&json).unwrap();
        assert_eq!(back, h);
        assert_eq!(export(&h, ExportFormat::Json), json);
        let dot = export(&h, ExportFormat::Dot);
        assert!(dot.starts_with("digraph hasse {"));
        assert_eq!(dot.matches("->").count(), 5);
    }
}
