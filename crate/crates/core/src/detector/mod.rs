//! Numerical detection of complex jump points on parametrized surfaces in
//! `R^4 = C^2`, with winding-number indices.

mod defect;
pub mod presets;
mod search;
mod structure;
mod surface;

pub use defect::defect;
pub use search::{
    find_jump_points, index_at, sample_field, total_algebraic_count, DetectionReport, FieldSample,
    JumpPoint, DEFAULT_TOL, MAX_NEWTON_ITERATIONS, MIN_GRID,
};
pub use structure::{standard_j, AlmostComplexStructure, STANDARD_TOLERANCE, USER_TOLERANCE};
pub use surface::{Chart, ParamDomain, ParamSurface, FD_STEP};
