//! Rainbow edge-colorings of graphs with diameter at most 2.
//!
//! - [`graph`]: simple graphs and their structural analyses.
//! - [`verify`]: the rainbow-connectivity checker every coloring goes through.
//! - [`colorer`]: constructions using at most `k + 2` colors (with `k`
//!   bridges) or 5 colors (bridgeless).
//! - [`exact`]: exact rainbow connection numbers for small graphs.
//! - [`generators`]: named families and seeded random instances.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod colorer;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod verify;

pub use colorer::{classify, color_diam2, ColorOptions, ColoringOutcome, Diam2Classification};
pub use error::{ColorError, GenError, GraphError, SolverError, VerifyError};
pub use exact::{exact_rc, rc_lower_bound, ExactConfig, RcResult, RcValue};
pub use graph::{Graph, Vertex};
pub use verify::{verify_rainbow_connected, EdgeColoring, RainbowCertificate, Verdict, VerifyOptions};
