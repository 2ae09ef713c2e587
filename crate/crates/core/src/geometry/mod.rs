//! Metric realization of the tiles.
//!
//! Volumes come from exact Cayley–Menger determinants over the golden field.
//! Coordinates are `f64`: the canonical base-face frame of a tetrahedron
//! involves `√3`, which lies outside `Q(τ)`, so predicates run against
//! configurable tolerances instead.

mod assembly;
mod axes;
mod mesh;
mod scheme;
mod tile;

use thiserror::Error;

pub use assembly::{assemble, Assembly, Group, ShapeTarget};
pub use axes::{face_axis_class, AxisFrame, Rotation};
pub use mesh::{dihedrals, overlapping_pair, same_census, tetrahedra_overlap, Dihedral, MergedFace, Mesh, Surface};
pub use scheme::{cm_volume, CmVolume, EdgeScheme};
pub use tile::{glue, realize, FaceMatch, PlacedTile};

pub type Point3 = nalgebra::Vector3<f64>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("degenerate tetrahedron: Cayley-Menger determinant {0} is not positive")]
    Degenerate(String),
    #[error("{0} is not a fundamental tetrahedron")]
    NotFundamental(String),
    #[error("faces are not congruent: {0}")]
    NonCongruent(String),
    #[error("face match is ambiguous ({0} candidate correspondences); pass an explicit one")]
    Ambiguous(usize),
    #[error("face index {0} out of range")]
    BadFace(usize),
    #[error("placed tiles {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("rigid motion distorted a distance by {0:e}")]
    Isometry(f64),
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
}

/// Numeric tolerances: `predicate` for coplanarity, coincidence and overlap
/// tests, `isometry` (relative) for distance preservation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub predicate: f64,
    pub isometry: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { predicate: 1e-9, isometry: 1e-12 }
    }
}

impl Tolerances {
    pub fn new(predicate: f64, isometry: f64) -> Result<Self, GeometryError> {
        for t in [predicate, isometry] {
            if !(t > 0.0 && t.is_finite()) {
                return Err(GeometryError::BadTolerance(t));
            }
        }
        Ok(Tolerances { predicate, isometry })
    }
}
