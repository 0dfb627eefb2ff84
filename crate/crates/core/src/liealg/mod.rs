//! Structure constants, the catalog of groups `G1..G7`, parameter
//! expressions and seeded sampling.

mod group;
mod params;
pub mod poly;
mod sample;
mod structure;

pub use group::{build_group, Constraint, Group, GroupSpec, Relation};
pub use params::{Param, Params};
pub use poly::{Polynomial, RationalFunction};
pub use sample::{fnv1a, sample_params, CasePredicate, Recipe, Region, Sampler, MAX_DRAWS};
pub use structure::{bracket, check_jacobi, JacobiVerdict, JacobiViolation, StructureConstants, Tensor3};
