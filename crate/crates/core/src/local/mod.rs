//! Local invariants of polynomial germs at the origin.

pub mod classify;
pub mod jet;
pub mod milnor;

pub use classify::{classify_plane_germ, GermClass, GermLabel};
pub use jet::{local_quotient, JetQuotient, DEFAULT_JET_CAP};
pub use milnor::{
    hessian_corank, local_intersection_multiplicity, milnor_number, Germ, Intersection,
    MilnorResult,
};
