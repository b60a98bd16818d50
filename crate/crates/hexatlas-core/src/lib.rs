//! Computational geometry of the right-angled hyperbolic hexagon.
//!
//! The crate has four layers, bottom up:
//!
//! - [`arcs`] — the nine homotopy classes of essential arcs on the hexagon,
//!   their geometric intersection numbers and the census of the 14 admissible
//!   arc triples.
//! - [`foliation`] — measured foliation classes in weight coordinates, the
//!   triangular charts indexed by arc triples, the piecewise-linear transition
//!   maps between charts and the cell decomposition of the sphere of
//!   projective classes. This layer is exact: all arithmetic is done in
//!   arbitrary-precision rationals.
//! - [`hexagon`] — numeric hyperbolic trigonometry: solving a right hexagon
//!   from any arc triple, right-pentagon completion, perpendicular feet, and
//!   the scaling-monotonicity kernel.
//! - [`teichmueller`] — length and intersection functionals, the projective
//!   embedding, thick parts, boundary charts of the compactified Teichmueller
//!   space, and numeric boundary limits of degenerating length families.
//!
//! The crate is `no_std` (with `alloc`); all float math goes through `libm`,
//! so results are bit-identical across platforms.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arcs;
pub mod foliation;
pub mod hexagon;
pub mod numeric;
pub mod teichmueller;

mod error;

pub use arcs::{compatible_triples, ArcClass, ArcTriple, EdgeId, TripleCase};
pub use error::Error;
pub use foliation::{
    pmf_cell_complex, ChartCoords, ComplexCheck, FoliationClass, PMFCellComplex, PMFPoint,
    Rational, Region,
};
pub use hexagon::{FeetSolution, HexagonLengths, PentagonLengths, Tolerances};
pub use teichmueller::{
    boundary_chart, boundary_chart_inverse, boundary_limit, diverges, diverges_with,
    projective_embed_foliation, CompactifiedPoint, Divergence, LimitReport, LimitStep,
    ProjectivePoint6, SeqExpr, SequenceSpec, TeichPoint,
};





/// Convenience result type used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
