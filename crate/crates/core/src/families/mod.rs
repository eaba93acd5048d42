//! Constructors for the named arrangement families: braid and orbit
//! arrangements, polygraphs, coordinate arrangements, and point and line
//! configurations in projective space.

mod coordinate;
mod partitions;
mod polygraph;
mod projective;

use thiserror::Error;

use crate::arrangements::ArrangementError;
use crate::lattice::LatticeError;
use crate::poly::PolyError;

pub use coordinate::{coordinate_family, CoordinateFamily, SimplicialComplex};
pub use partitions::{
    all_partitions, blocks_family, braid_arrangement, f_pi, f_pi_ideal, hook, orbit_family, orbit_shapes,
    partition_antichain, partition_flat, partitions_of_shape, partitions_with_blocks, validate_shape,
    OrbitFamily, Partition,
};
pub use polygraph::{polygraph, Polygraph};
pub use projective::{
    cone_checks, is_generic, line_through, linearly_general, p2_points, p3_ring, point_preset, six_point_cubics,
    skew_lines, skew_lines_with, two_line_points, ConeReport, ProjectivePoint, TwoLinePoints, POINT_PRESETS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

impl From<PolyError> for FamilyError {
    fn from(e: PolyError) -> Self {
        FamilyError::Arrangement(ArrangementError::Poly(e))
    }
}

impl From<LatticeError> for FamilyError {
    fn from(e: LatticeError) -> Self {
        FamilyError::Arrangement(ArrangementError::Lattice(e))
    }
}
