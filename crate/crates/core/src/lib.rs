//! Recognition of linear-semiorders: partial orders that arise as the
//! intersection of a linear order and a semiorder.
//!
//! The central entry point is [`recognize`], which decides membership and, on
//! success, produces a [`Certificate`]: a linear extension fulfilling the
//! `2+2` and `3+1` rules together with a proper interval representation of a
//! witness semiorder `S` such that `L ∩ S = P`. Certificates are
//! independently checkable via [`verify_certificate`].
//!
//! Supporting machinery:
//!
//! * [`poset`] — strict partial orders, incomparability graphs, induced
//!   pattern search, rule checking, topological sorting.
//! * [`orientation`] — comparability-graph recognition by transitive
//!   orientation.
//! * [`sat`] — the 2-CNF engine used to orient the constrained edges.
//! * [`recognizer`] — the recognition pipeline itself.
//! * [`semiorder`] — construction of the witness semiorder from a
//!   rule-fulfilling linear extension, and certificate verification.
//! * [`flip`] — triangle representations and autonomous-set reversals.
//! * [`graphrec`] — recognition of comparability and incomparability graphs
//!   of linear-semiorders, plus the vertex-ordering characterization.
//! * [`oracle`] — brute-force ground truth and instance generators.
//! * [`io`] — plain-text formats for posets, graphs and certificates.

pub mod flip;
pub mod graphrec;
pub mod io;
pub mod oracle;
pub mod orientation;
pub mod poset;
pub mod recognizer;
pub mod samples;
pub mod sat;
pub mod semiorder;

pub use poset::{Graph, LinearOrder, PartialOrder, PatternKind, PosetError, Quad};
pub use recognizer::{recognize, Recognition, RefusalStage};
pub use semiorder::{verify_certificate, Certificate, ProperIntervalRep, VerifyFailure};
