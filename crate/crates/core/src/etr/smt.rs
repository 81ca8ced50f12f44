//! SMT-LIB 2 serialization (logic QF_NRA). Output is deterministic: equal
//! formulas serialize to equal bytes.

use super::ast::{Cmp, Expr, Formula, Pred};
use num_traits::Signed;
use std::fmt::Write;

fn write_expr(out: &mut String, e: &Expr) {
    match e {
        Expr::Const(c) => {
            if c.is_negative() {
                write!(out, "(- {})", -c).unwrap();
            } else {
                write!(out, "{}", c).unwrap();
            }
        }
        Expr::Var(v) => out.push_str(v),
        Expr::Add(a, b) => {
            out.push_str("(+ ");
            write_expr(out, a);
            out.push(' ');
            write_expr(out, b);
            out.push(')');
        }
        Expr::Sub(a, b) => {
            out.push_str("(- ");
            write_expr(out, a);
            out.push(' ');
            write_expr(out, b);
            out.push(')');
        }
        Expr::Mul(a, b) => {
            out.push_str("(* ");
            write_expr(out, a);
            out.push(' ');
            write_expr(out, b);
            out.push(')');
        }
    }
}

fn write_pred(out: &mut String, p: &Pred) {
    match p {
        Pred::True => out.push_str("true"),
        Pred::False => out.push_str("false"),
        Pred::Atom(cmp, e) => {
            let (head, negate) = match cmp {
                Cmp::Eq => ("=", false),
                Cmp::Ne => ("=", true),
                Cmp::Lt => ("<", false),
                Cmp::Le => ("<=", false),
                Cmp::Gt => (">", false),
                Cmp::Ge => (">=", false),
            };
            if negate {
                out.push_str("(not ");
            }
            out.push('(');
            out.push_str(head);
            out.push(' ');
            write_expr(out, e);
            out.push_str(" 0)");
            if negate {
                out.push(')');
            }
        }
        Pred::Not(q) => {
            out.push_str("(not ");
            write_pred(out, q);
            out.push(')');
        }
        Pred::And(cs) | Pred::Or(cs) => {
            out.push_str(if matches!(p, Pred::And(_)) { "(and" } else { "(or" });
            for c in cs {
                out.push(' ');
                write_pred(out, c);
            }
            out.push(')');
        }
    }
}

/// Full solver input: logic, declarations in formula order, one assert,
/// check-sat, get-model.
pub fn to_smt2(f: &Formula) -> String {
    let mut out = String::new();
    out.push_str("(set-logic QF_NRA)\n");
    for v in &f.vars {
        writeln!(out, "(declare-const {} Real)", v).unwrap();
    }
    out.push_str("(assert ");
    write_pred(&mut out, &f.body);
    out.push_str(")\n(check-sat)\n(get-model)\n");
    out
}
