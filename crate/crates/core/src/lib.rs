//! Reduced graph powers, token graphs and the cell complexes built from them.
//!
//! Everything here is pure computation over finite simple graphs: building
//! `SP^n(G)` and `T_n(G)`, attaching 2-cells to short cycles, the
//! discrete configuration complex, exact first homology over the integers,
//! edge-path presentations of fundamental groups, and the local-exchange
//! bookkeeping for token graphs. The crate is `no_std` and needs only
//! `alloc`; file formats and the command line live in the `tokenpower`
//! crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod comb;
pub mod complexes;
pub mod error;
pub mod exchanges;
pub mod graph;
pub mod groups;
pub mod homology;
pub mod linalg;
pub mod powers;

pub use complexes::{ConfigCell, TwoComplex, UdComplex};
pub use error::{Error, Result};
pub use graph::{EdgeId, Family, Graph};
pub use groups::Presentation;
pub use homology::AbelianGroupDesc;
pub use linalg::IntMatrix;
pub use powers::{PowerGraph, PowerKind, TokenConfig};

/// Default cap on the number of vertices any power graph may have.
pub const DEFAULT_MAX_VERTICES: usize = 1_000_000;
