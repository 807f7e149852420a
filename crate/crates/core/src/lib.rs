//! Finite models of the constructions behind model structures on presheaves
//! of simplicial groupoids and of 2-groupoids.

pub mod algebra;
pub mod budget;
pub mod classify;
pub mod cli;
pub mod error;
pub mod group;
pub mod groupoid;
pub mod loops;
pub mod presentation;
pub mod sgpd;
pub mod site;
pub mod sset;
pub mod two_gpd;
mod util;

pub use budget::Budget;
pub use error::{Error, Result};
