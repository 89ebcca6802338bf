//! Namikawa-Weyl groups of affinized Nakajima quiver varieties.
//!
//! Given a quiver, a dimension vector `v` and a framing `w`, the library classifies the
//! codimension-2 symplectic leaves of the affinization by roots of the quiver, detects the
//! linear relations among those roots and folds each connected component into an
//! irreducible finite Weyl group. All arithmetic is exact.
//!
//! ```
//! use nwg_core::{namikawa_weyl_group, FramedSetting, Quiver};
//!
//! let triangle = Quiver::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
//! let fs = FramedSetting::extend(&triangle, &vec![2, 2, 2].into(), &vec![1, 0, 0].into()).unwrap();
//! let g = namikawa_weyl_group(&fs).unwrap();
//! assert_eq!(g.label(), "A2 x A1");
//! assert_eq!(g.order.to_string(), "12");
//! ```

pub mod cli;
pub mod error;
pub mod instance;
pub mod namikawa;
pub mod quiver;
pub mod report;
pub mod roots;
pub mod sigma;
pub mod strata;

pub use error::{NwgError, Result};
pub use namikawa::{
    analyze, classify_codim2_root, find_codim2_roots, namikawa_weyl_group, Analysis,
    CartanType, CodimTwoRoot, LeafType, NamikawaGroup, WeylFactor,
};
pub use quiver::{DimensionVector, FramedSetting, Quiver};
pub use roots::{dominance_reduce, enumerate_positive_roots_leq, is_root, reflect, RootKind};
