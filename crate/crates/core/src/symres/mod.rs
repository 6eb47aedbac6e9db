//! Symmetric reduction and coset-orbit resolvents.

pub mod cache;
pub mod perm;
pub mod phi;
pub mod resolvent;
pub mod sextic;
pub mod symmetric;

pub use perm::Perm;
pub use phi::{general_phi, separability_search, GeneralResolventParams};
pub use resolvent::{alternating_spec, orbit_resolvent, Convention, Resolvent, ResolventSpec};
pub use sextic::{sextic_resolvent, sextic_resolvent_of};
pub use symmetric::{elementary_symmetric, elementary_values, symmetric_reduce};
