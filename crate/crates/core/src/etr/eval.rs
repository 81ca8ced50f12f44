//! Exact rational evaluation of formulas: the semantic oracle the compiler
//! is tested against.

use super::ast::{Cmp, Expr, Formula, Pred};
use super::build::{
    declared_intersection_pairs, edge_var, indicator_var, ix_var, iy_var, non_adjacent_pairs,
    x_var, y_var, EmitOptions,
};
use crate::geom::{line_intersection, segments_cross, Rational};
use crate::polyscan::Polygon;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

pub type Assignment = BTreeMap<String, Rational>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("variable {0} is not assigned")]
    MissingVariable(String),
    #[error("witness assignment needs non-parallel edges {0} and {1}")]
    ParallelEdges(usize, usize),
}

fn eval_expr(e: &Expr, asg: &Assignment) -> Result<Rational, EvalError> {
    match e {
        Expr::Const(c) => Ok(Rational::from_integer(c.clone())),
        Expr::Var(v) => asg
            .get(v)
            .cloned()
            .ok_or_else(|| EvalError::MissingVariable(v.clone())),
        Expr::Add(a, b) => Ok(eval_expr(a, asg)? + eval_expr(b, asg)?),
        Expr::Sub(a, b) => Ok(eval_expr(a, asg)? - eval_expr(b, asg)?),
        Expr::Mul(a, b) => Ok(eval_expr(a, asg)? * eval_expr(b, asg)?),
    }
}

fn eval_pred(p: &Pred, asg: &Assignment) -> Result<bool, EvalError> {
    match p {
        Pred::True => Ok(true),
        Pred::False => Ok(false),
        Pred::Atom(cmp, e) => {
            let v = eval_expr(e, asg)?;
            Ok(match cmp {
                Cmp::Eq => v.is_zero(),
                Cmp::Ne => !v.is_zero(),
                Cmp::Lt => v.is_negative(),
                Cmp::Le => !v.is_positive(),
                Cmp::Gt => v.is_positive(),
                Cmp::Ge => !v.is_negative(),
            })
        }
        Pred::Not(q) => Ok(!eval_pred(q, asg)?),
        Pred::And(cs) => {
            for c in cs {
                if !eval_pred(c, asg)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Pred::Or(cs) => {
            for c in cs {
                if eval_pred(c, asg)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

/// Exact evaluation of the quantifier-free body under an assignment.
pub fn evaluate(f: &Formula, asg: &Assignment) -> Result<bool, EvalError> {
    eval_pred(&f.body, asg)
}

pub fn evaluate_pred(p: &Pred, asg: &Assignment) -> Result<bool, EvalError> {
    eval_pred(p, asg)
}

/// Assignment forced by a concrete polygon: its coordinates, a given 1-based
/// edge code, crossing indicators read off the geometry, and every declared
/// line-intersection point. The polygon must have no parallel edge pair
/// among the declared intersection pairs.
pub fn witness_assignment(
    poly: &Polygon,
    edge_code_one_based: &[usize],
    opts: EmitOptions,
) -> Result<Assignment, EvalError> {
    let m = poly.m();
    let mut asg = Assignment::new();
    for i in 1..=m {
        let p = &poly.vertices()[i - 1];
        asg.insert(x_var(i, m), p.x.clone());
        asg.insert(y_var(i, m), p.y.clone());
    }
    for (i, &e) in edge_code_one_based.iter().enumerate() {
        asg.insert(edge_var(i + 1), Rational::from_integer((e as i64).into()));
    }
    for (i, j) in non_adjacent_pairs(m) {
        let v = segments_cross(&poly.edge(i - 1), &poly.edge(j - 1));
        asg.insert(
            indicator_var(i, j),
            Rational::from_integer(i64::from(v).into()),
        );
    }
    for (e, et) in declared_intersection_pairs(m, opts) {
        let p = line_intersection(&poly.edge(e - 1), &poly.edge(et - 1))
            .map_err(|_| EvalError::ParallelEdges(e, et))?;
        asg.insert(ix_var(e, et), p.x);
        asg.insert(iy_var(e, et), p.y);
    }
    Ok(asg)
}
