//! Compiler from signed crossing codes to sentences in the existential
//! theory of the reals, with exact evaluation and two output dialects.

pub mod ast;
pub mod build;
pub mod eval;
pub mod infix;
pub mod smt;

pub use ast::{Cmp, Expr, Formula, FormulaStats, Pred};
pub use build::{
    coded_polygon, crossing_order, crossing_signs, good_polygon, isotopic_to_polygon,
    num_crossings, well_formed, EmitOptions, OrderStyle,
};
pub use eval::{evaluate, witness_assignment, Assignment, EvalError};
pub use infix::{parse_infix, to_infix, InfixParseError};
pub use smt::to_smt2;
