//! Exact golden-field arithmetic, tile data, inflation dynamics and
//! polyhedral assembly for an icosahedral tiling built from six
//! fundamental tetrahedra with edges 1 and τ.

pub mod catalog;
pub mod checks;
pub mod cli;
pub mod geometry;
pub mod golden;
pub mod inflation;
pub mod report;

pub use catalog::{TileKind, TileRecord};
pub use golden::{GoldenError, GoldenInt, GoldenRational};
pub use inflation::{CountVector, Decomposition, InflationMatrix, SpectralData};
