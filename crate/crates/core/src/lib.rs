//! Combinatorics of wonderful varieties with exact arithmetic.
//!
//! A wonderful variety is described here by its spherical system: the
//! spherical roots in the root lattice of the group, and the colors
//! (B-stable prime divisors) with the simple roots moving them and their
//! functionals on the lattice spanned by the spherical roots.
//!
//! - [`rootlat`]: root systems, Cartan pairings, sub-diagram detection
//! - [`sphsys`]: the data model, root types and axiom validation
//! - [`localize`]: localization at a subset of the simple roots
//! - [`rigidity`]: distinguished spherical roots, rigidity, criticality
//! - [`orbits`]: the orbit poset and its DOT rendering
//! - [`catalog`]: small systems with pinned expectations

pub mod catalog;
pub mod error;
pub mod localize;
pub mod orbits;
pub mod rigidity;
pub mod rootlat;
pub mod sphsys;
pub mod testing;

pub use error::{Error, Result};
pub use localize::{localize, type_a_roots};
pub use orbits::{emit_graph, orbit_poset, OrbitPoset};
pub use rigidity::{
    critical_roots, critical_roots_oracle, distinguished_elements, is_rigid, CriticalityReport,
    RigidityReport,
};
pub use rootlat::{Component, Label, LatticeVector, RootSystem, Series};
pub use sphsys::{
    Axiom, Color, Functional, Rational, RootType, SphericalSystem, ValidationReport, Violation,
};
