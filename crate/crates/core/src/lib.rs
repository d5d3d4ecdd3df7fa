//! The one-dimensional Aristotle group, its central extension and the
//! elementary system living on a coadjoint orbit of it.
//!
//! - [`algebra`]: the extended Lie algebra (`[P, E] = g M`), Jacobi checks and
//!   physical dimensions.
//! - [`group`]: base and extended group laws, the 2-cocycle and coordinate
//!   changes.
//! - [`coadjoint`]: dual pairing, coadjoint action, orbit chart, Poisson
//!   bracket and comomentum.
//! - [`dynamics`]: `H = m g q`, its exact flow and trajectory generation.
//! - [`verify`]: a seeded property suite over all of the above.

pub mod algebra;
pub mod coadjoint;
pub mod dynamics;
pub mod group;
pub mod verify;

pub use algebra::{AlgebraElement, AlgebraError, BracketTable, Dimension};
pub use coadjoint::{
    AffineObservable, CoadjointPoint, OrbitContext, OrbitError, OrbitPoint, OrbitTangent,
};
pub use dynamics::{Integrator, SimulationConfig, SimulationError, TrajectorySample};
pub use group::{BaseElement, ExtendedElement, Gravity};
pub use verify::{run_verify, VerifyReport};
