//! Hub-forced binary consensus ("Heaven-Hell" dynamics) on weighted digraphs.
//!
//! Every vertex holds Glory or Gnash. Before each update the hub (or a seed
//! set) is forced to Glory, then every other vertex compares the weighted
//! Glory pressure plus its tolerance against the Gnash pressure, resolving
//! exact ties by a [`TiePolicy`].
//!
//! - [`graph`]: weighted digraphs and inbound-mass decompositions
//! - [`io`]: the `hh v1` text format
//! - [`dynamics`]: states, forcing, scores, synchronous and scheduled updates
//! - [`thresholds`]: exact one-step thresholds and worst-case bounds
//! - [`oracle`]: exhaustive enumeration used as ground truth
//! - [`generators`]: rings, grids, preferential attachment, adversarial graphs

pub mod dynamics;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod thresholds;

pub use dynamics::{Opinion, Schedule, Scores, State, TiePolicy};
pub use error::{HhError, Result};
pub use graph::{Mass, SeedSet, Tolerance, Topology, Weight, WeightedDigraph};
pub use io::GraphDocument;
pub use oracle::{OracleVerdict, SearchMode, Witness, MAX_ORACLE_VERTICES};
pub use thresholds::{NodeThreshold, ThresholdReport};
