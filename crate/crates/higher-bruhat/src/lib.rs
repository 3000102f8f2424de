//! Exact combinatorics of higher Bruhat orders `B(n,d)`, higher
//! Stasheff–Tamari posets `S(n,d)`, and the maps between them.
//!
//! Everything here is exact: subsets are bitsets, geometry is replaced by
//! parity predicates cross-checked against rational determinant oracles, and
//! all poset structure is computed from first principles.
//!
//! # Quick tour
//!
//! Enumerate a higher Bruhat order and map an element down to a cyclic
//! polytope triangulation:
//!
//! ```
//! use higher_bruhat::bruhat::{enumerate_bruhat, BruhatElement};
//! use higher_bruhat::maps::f_def2;
//!
//! let elements = enumerate_bruhat(4, 2, None).unwrap();
//! assert_eq!(elements.len(), 8);
//!
//! let bottom = BruhatElement::bottom(4, 2);
//! let image = f_def2(&bottom).unwrap();
//! // The minimum maps to the minimum triangulation of C([0,5], 3).
//! assert_eq!(image.labels, vec![0, 1, 2, 3, 4, 5]);
//! assert_eq!(image.simplices.len(), 6);
//! ```
//!
//! Round-trip a triangulation through its snug partition:
//!
//! ```
//! use higher_bruhat::cyclic::{bottom_top, snug_to_triangulation, triangulation_to_snug};
//!
//! let (bottom, _) = bottom_top(&[1, 2, 3, 4, 5], 2);
//! let partition = triangulation_to_snug(&bottom).unwrap();
//! assert_eq!(snug_to_triangulation(&partition).unwrap(), bottom);
//! ```
//!
//! Apply `g` and invert it on its (superconsistent) image:
//!
//! ```
//! use higher_bruhat::cyclic::bottom_top;
//! use higher_bruhat::maps::{g, g_inverse};
//!
//! let (_, top) = bottom_top(&[1, 2, 3, 4], 1);
//! let e = g(&top).unwrap();
//! assert_eq!(g_inverse(&e).unwrap().unwrap(), top);
//! ```

#![warn(missing_docs)]

pub mod bruhat;
pub mod cube;
pub mod cyclic;
pub mod maps;
pub mod poset;
pub mod subsets;

pub use bruhat::BruhatElement;
pub use cyclic::Triangulation;
pub use subsets::LabelSet;
