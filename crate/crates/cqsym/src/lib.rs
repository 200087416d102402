//! Exact computation of chromatic quasisymmetric functions `X_λ(x,q)` of
//! natural unit interval orders in the elementary symmetric basis.
//!
//! The crate has two independent routes to the same polynomials:
//!
//! * [`csf`] — a brute-force coloring oracle that enumerates proper colorings
//!   weighted by the ascent statistic and converts the monomial data to the
//!   e-basis. This is the ground truth everything else is checked against.
//! * [`rectlemma`], [`rook`], [`nonabelian`] — closed formulas: the
//!   rectangular decomposition coefficients `F_r`, the abelian e-expansion
//!   coefficients `G_r`, q-hit numbers of rook placements, and the hook-family
//!   e-coefficients.
//!
//! [`relations`] holds the local linear relations between different `X_λ` as
//! executable checks, and [`report`] the verdict types shared by all checks.

pub mod csf;
pub mod nonabelian;
pub mod partition;
pub mod qpoly;
pub mod rectlemma;
pub mod relations;
pub mod report;
pub mod rook;

pub use csf::{EExpansion, OracleCache};
pub use partition::{IncGraph, Partition};
pub use qpoly::QPoly;
pub use report::{CheckOutcome, CheckReport, Mismatch};
