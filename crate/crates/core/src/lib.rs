//! Exact computations for uniform central graphs: graphs in which every
//! central vertex has the same set of farthest vertices.
//!
//! The crate answers, for a center graph `C` and a periphery graph `P`, how
//! few extra vertices a uniform central graph needs when its center induces
//! `C` and its centered periphery induces `P`, and it builds graphs that
//! attain that number.

pub mod analysis;
pub mod appendage;
pub mod bounds;
pub mod census;
pub mod construction;
pub mod covering;
pub mod families;
pub mod graph;
pub mod io;
pub mod metric;
pub mod oracle;

pub use analysis::{ucg_analysis, UcgAnalysis};
pub use appendage::{appendage_number, AppendageResult, AppendageValue};
pub use bounds::Bounds;
pub use covering::{Condition, ConditionSet, Covering, RefinedCovering};
pub use graph::{Graph, GraphError, VertexSet};
pub use metric::{metric_profile, ExtDist, MetricProfile};
