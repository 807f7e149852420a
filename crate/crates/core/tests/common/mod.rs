//! Fixtures and oracles shared by the integration tests.

#![allow(dead_code)]

pub mod fixtures;
pub mod lifting;
pub mod oracles;
pub mod random;
pub mod sheaves;
pub mod squares;
