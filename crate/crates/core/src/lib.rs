//! Spectral analysis of self-similar diamond graphs.
//!
//! A diamond graph with decimation factor `l` replaces every link by two
//! branches of `l` edges each, iterated ad infinitum. Its Laplacian spectrum
//! is an exactly solvable ladder of line-segment modes, which makes three
//! families of quantities computable in closed form and cross-checkable by
//! brute force:
//!
//! * the spectral zeta function and its tower of complex poles
//!   ([`spectral_zeta`]),
//! * the heat-kernel trace, both by direct eigenvalue summation and by the
//!   pole expansion with log-periodic corrections ([`heat`]),
//! * the boundary entanglement entropy obtained from the replica-trick
//!   effective action, including its log-periodic higher orders
//!   ([`entropy`]).
//!
//! [`specfun`] provides the complex Gamma and Riemann zeta evaluations the
//! closed forms need; [`graph`] holds the graph data and the truncated
//! eigenvalue ladder used as the independent oracle.
//!
//! Everything is pure and thread-safe. Grid sweeps go through
//! [`grid::map_collect`], which fans out over rayon when the `parallel`
//! feature (default) is enabled and falls back to a sequential loop when it
//! is not.

// Frozen reference values are written with every digit of the f64 they pin.
#![allow(clippy::excessive_precision)]

pub mod entropy;
pub mod graph;
pub mod grid;
pub mod heat;
pub mod specfun;
pub mod spectral_zeta;

mod quad;

pub use graph::{GraphSpec, SpectralLadder};
pub use heat::HeatTraceResult;
pub use spectral_zeta::PoleTower;
