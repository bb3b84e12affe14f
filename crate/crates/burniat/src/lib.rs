//! Exact arithmetic on the Picard lattice of a Burniat surface with
//! K^2 = 6, certificate-producing vanishing provers, and end-to-end
//! verification of blocked exceptional collections of line bundles,
//! together with the matching toric computations on the degree-6 del
//! Pezzo surface underneath.

pub mod builtin;
pub mod cohomology;
pub mod collections;
pub mod delpezzo;
pub mod effectivity;
pub mod error;
pub mod numerics;
pub mod picard;
