//! Exact lattice trigonometry in the plane: integer angles and their sails,
//! continued fractions, chord curvatures of convex lattice polygons, and the
//! criteria deciding which angle-curvature sequences come from polygons.

pub mod cli;
pub mod contfrac;
pub mod curvature;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod sails;
pub mod synthesis;
pub mod theorems;

pub use error::{Error, Result};
pub use lattice::{Int, LatticePoint, LatticeVector};
