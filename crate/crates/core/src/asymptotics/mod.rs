//! Growth constants: branch points of algebraic relations, exact series
//! checks against the count tables, ratio estimates and the entropy
//! exponent optimizer.

mod bender;
mod entropy;
mod ratio;
mod relation;
mod series;

pub use bender::{bender_growth, discriminant, SingularityResult, ASSUMPTION, GRID_POINTS, MAX_NEWTON_STEPS};
pub use entropy::{binary_entropy, log_objective, optimize_alpha, optimize_alpha_within, AlphaResult};
pub use ratio::{aitken, big_ratio, ratio_growth, RatioEstimate};
pub use relation::AlgebraicRelation;
pub use series::series_residual;
