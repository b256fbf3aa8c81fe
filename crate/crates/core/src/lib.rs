//! Island-model genetic algorithms with a spectral-clustering migration
//! policy (DIM-SP), the classical fully connected, star and ring topologies,
//! and the job-shop, TSP and quadratic multiple knapsack benchmarks used to
//! compare them.

pub mod engine;
pub mod error;
pub mod genome;
pub mod metrics;
pub mod operators;
pub mod problems;
pub mod rngdet;
pub mod similarity;
pub mod spectral;

pub use engine::{
    run_baseline, run_dimsp, BaselineConfig, DimspConfig, MigrationPolicy, Model, Topology, TopologyKind,
};
pub use error::{Error, Result};
pub use genome::{Direction, Encoding, Genome, Individual, Population};
pub use metrics::{summarize, GenerationRecord, RunTrace, SummaryRow};
pub use operators::{Crossover, Mutation, OperatorSet};
pub use problems::{ProblemKind, ProblemSpec};
pub use rngdet::RngStream;
