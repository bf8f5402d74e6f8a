//! Exact-arithmetic toolkit for toric ideals of integer configurations and
//! finite graphs: circuits, Gröbner bases, minimal binomial generators,
//! fibers, and the graph criteria deciding when a toric ideal is generated
//! by (squarefree) circuits.

pub mod circuits;
pub mod config;
pub mod fibers;
pub mod graphs;
pub mod ideal;
pub mod lattice;
pub mod verify;
