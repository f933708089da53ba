//! m-Tamari lattices built from their m-Dyck path sequence encoding.
//!
//! An m-Dyck path of height `n` is stored as a nondecreasing sequence
//! `(a_1, ..., a_n)` with `a_i <= m(i-1)`. The crate is organised bottom-up:
//!
//! - [`paths`]: validation, enumeration, Fuss-Catalan counts, primitive
//!   subsequences and the step-word encoding.
//! - [`lattice`]: covering moves, the Hasse diagram, order queries, intervals,
//!   meets and joins.
//! - [`shelling`]: the `(j, a_j)` edge labeling, maximal chains, rising and
//!   falling chains, and an exhaustive EL-labeling verifier.
//! - [`topology`]: four Moebius function engines, the interval classification
//!   by position sets, and the spherical-interval censuses at `0̂` and `1̂`.
//! - [`export`]: JSON, DOT and CSV writers (plus JSON import).
//!
//! Positions are 1-based in every public signature. Work that fans out over
//! intervals or bottom elements takes an [`Exec`] selector; with the
//! `parallel` feature disabled both variants run sequentially.

pub mod exec;
pub mod export;
pub mod lattice;
pub mod paths;
pub mod shelling;
pub mod topology;

pub use exec::Exec;
pub use lattice::{BuildOptions, Cover, ElemId, IntervalView, Lattice, LatticeError};
pub use paths::{fuss_catalan, PathError, PathSeq, Params, StepWord, Violation};
pub use shelling::{EdgeLabel, LabelWord, MaximalChain, ShellingError};
pub use topology::{DiffKey, IntervalClass, IntervalKind, MobiusTable, TopologyError};

/// `(m, n)` cells checked exhaustively by default:
/// `{1}×{2..5} ∪ {2}×{2..4} ∪ {3,4}×{2..3}`.
pub const DEFAULT_GRID: &[(u32, usize)] = &[
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 2),
    (2, 3),
    (2, 4),
    (3, 2),
    (3, 3),
    (4, 2),
    (4, 3),
];
