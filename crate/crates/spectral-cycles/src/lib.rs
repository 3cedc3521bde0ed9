//! Spectral conditions for odd cycles: exact graph machinery, a deterministic
//! eigensolver, cycle search, the vertex-deletion procedure, and check suites
//! that test the spectral statements on concrete graph corpora.
//!
//! The central quantity is the spectral radius `mu(G)` of the adjacency
//! matrix. The headline statement checked here: if `mu(G) > sqrt(floor(n^2/4))`
//! then `G` contains cycles of every length `t <= n/320`. The balanced
//! complete bipartite graph shows the threshold is exact, and the join of a
//! clique with an independent set shows the linear cycle-length range is the
//! right shape.
//!
//! Modules:
//! - [`graph`]: compact adjacency-list graphs, vertex deletion, induced
//!   subgraphs, bipartiteness with witnesses, triangle counting.
//! - [`spectral`]: power-iteration spectral radius with certified residuals,
//!   Rayleigh quotients, and the two deletion lemmas (minimum Perron entry
//!   bound, spectral-radius loss bound).
//! - [`construct`]: extremal constructions and seeded random corpora.
//! - [`cycles`]: bounded exact cycle search, cycle spectrum, the
//!   edge-count-based cycle guarantee, and the headline odd-cycle check.
//! - [`procedure`]: the iterated minimum-entry vertex-deletion procedure and
//!   its dense-subgraph conclusion.
//! - [`verify`]: statement checks over corpora with machine-readable reports.
//! - [`io`]: a plain edge-list file format.

pub mod construct;
pub mod cycles;
pub mod graph;
pub mod io;
pub mod procedure;
pub mod spectral;
pub mod verify;

pub use construct::{Construction, Family, FamilySpec};
pub use cycles::{CycleReport, CycleStatus};
pub use graph::{Bipartition, Graph, GraphError, VertexSet};
pub use procedure::{ProcedureParams, ProcedureTrace};
pub use spectral::{SpectralOptions, SpectralResult};
pub use verify::{CheckReport, Outcome, Statement};
