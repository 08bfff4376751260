//! Virtual knot groups: free groups, virtual braid representations,
//! presentations, Fox calculus, nilpotent quotients and truncated
//! noncommutative algebra invariants.

pub mod braidrep;
pub mod error;
pub mod foxcalc;
pub mod freegroup;
pub mod laurent;
pub mod linalg;
pub mod ncalg;
pub mod nilpotent;
pub mod presentation;

pub use error::{Error, Result};
