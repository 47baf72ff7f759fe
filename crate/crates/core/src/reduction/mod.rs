//! The reduction from cubic vertex cover and its constructive
//! transformations.

pub mod best;
pub mod build;
pub mod convenient;
pub mod decide;
pub mod instance;
pub mod transform;

pub use best::{lift_orientation, restrict_orientation};
pub use build::{build_ubbbo, build_ubwbo, EdgeRole, ReductionArtifact, Variant};
pub use convenient::{build_partial_f, check_vfasf, is_convenient};
pub use decide::{decide_ubbbo, decide_ubwbo, decide_ubwbo_with_limit, Decision, DEFAULT_MAX_N};
pub use instance::CvcInstance;
pub use transform::{convenientize, cover_to_orientation, orientation_to_cover, ConvenientizeTrace};
