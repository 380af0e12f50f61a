//! Topological invariants of meromorphic functions `f = p/q` on plane charts:
//! Milnor numbers of fiber germs, polar Milnor numbers along the pole locus,
//! atypical values and the vanishing-cycle count `b_2(X,F) = mu + lambda`,
//! all in exact rational arithmetic.

pub mod cli;
pub mod error;
pub mod local;
pub mod pencil;
pub mod poly;

pub use error::{Error, Result};
