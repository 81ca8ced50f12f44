//! curviso: a toolkit for plane curve isotopy.
//!
//! Closed curves in the plane are represented by signed crossing codes;
//! self-intersecting polygons are analyzed with exact rational geometry;
//! "is this curve isotopic to an m-gon?" compiles to a sentence in the
//! existential theory of the reals; and pseudoline wiring diagrams reduce
//! to curves and stapled polygons, with cross-verification throughout.

pub mod codes;
pub mod etr;
pub mod files;
pub mod geom;
pub mod polyscan;
pub mod reduce;
pub mod solver;
pub mod straighten;

pub use geom::{Point, Rational, Segment};
