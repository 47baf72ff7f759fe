//! Brute-force references and test-input generators for small instances.

pub mod cover;
pub mod enumerate;
pub mod generate;
pub mod perturb;

pub use cover::{all_vertex_covers, is_vertex_cover, min_vertex_cover, MAX_COVER_VERTICES};
pub use enumerate::{
    enumerate_orientations, enumerate_orientations_with_limit, nash_williams_witness, EnumerationReport, MAX_FREE_EDGES,
};
pub use generate::random_cubic_multigraph;
pub use perturb::{find_circuit, perturb_by_eulerian};
