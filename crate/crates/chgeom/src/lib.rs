//! The unit-ball model of complex hyperbolic space `CH^n`, its `SU(n,1)`
//! isometries, geodesic simplices with Chebyshev-center apexes, and
//! quadrature of invariant forms over them.

pub mod ball;
pub mod center;
pub mod cocycle;
pub mod elements;
mod error;
pub mod geodesic;
pub mod isometry;
pub mod simplex;

pub use ball::{dist, BoundaryPoint, CHPoint, C64};
pub use center::{center, Center};
pub use cocycle::{coboundary, coboundary_residual, cocycle_eval, kahler_form, Coboundary};
pub use error::{GeomError, Result};
pub use geodesic::{gadget, geodesic, ray_endpoint};
pub use isometry::{act, boundary_act, push_tangent, Isometry};
pub use simplex::{Rescaling, SimplexMap};
