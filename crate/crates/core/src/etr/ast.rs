//! Formula AST: polynomial expressions over named real variables, atomic
//! comparisons against zero, boolean connectives, and a root existential
//! block.

use num_bigint::BigInt;
use serde::Serialize;
use std::rc::Rc;

pub type E = Rc<Expr>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(BigInt),
    Var(String),
    Add(E, E),
    Sub(E, E),
    Mul(E, E),
}

pub fn int(v: i64) -> E {
    Rc::new(Expr::Const(BigInt::from(v)))
}

pub fn var(name: impl Into<String>) -> E {
    Rc::new(Expr::Var(name.into()))
}

pub fn add(a: E, b: E) -> E {
    Rc::new(Expr::Add(a, b))
}

pub fn sub(a: E, b: E) -> E {
    Rc::new(Expr::Sub(a, b))
}

pub fn mul(a: E, b: E) -> E {
    Rc::new(Expr::Mul(a, b))
}

/// Sum of a list of expressions; the empty sum is the constant 0.
pub fn sum(terms: Vec<E>) -> E {
    let mut iter = terms.into_iter();
    match iter.next() {
        None => int(0),
        Some(first) => iter.fold(first, add),
    }
}

impl Expr {
    pub fn degree(&self) -> usize {
        match self {
            Expr::Const(_) => 0,
            Expr::Var(_) => 1,
            Expr::Add(a, b) | Expr::Sub(a, b) => a.degree().max(b.degree()),
            Expr::Mul(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Expr::Const(_) | Expr::Var(_) => 1,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                1 + a.node_count() + b.node_count()
            }
        }
    }
}

/// Comparison of a polynomial against zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Cmp {
    pub fn symbol(self) -> &'static str {
        match self {
            Cmp::Eq => "=",
            Cmp::Ne => "!=",
            Cmp::Lt => "<",
            Cmp::Le => "<=",
            Cmp::Gt => ">",
            Cmp::Ge => ">=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pred {
    True,
    False,
    Atom(Cmp, E),
    Not(Box<Pred>),
    And(Vec<Pred>),
    Or(Vec<Pred>),
}

impl Pred {
    pub fn atom(cmp: Cmp, e: E) -> Pred {
        Pred::Atom(cmp, e)
    }

    pub fn not(p: Pred) -> Pred {
        Pred::Not(Box::new(p))
    }

    /// Conjunction; the empty conjunction is TRUE and singletons unwrap.
    pub fn and(mut children: Vec<Pred>) -> Pred {
        match children.len() {
            0 => Pred::True,
            1 => children.pop().unwrap(),
            _ => Pred::And(children),
        }
    }

    /// Disjunction; the empty disjunction is FALSE and singletons unwrap.
    pub fn or(mut children: Vec<Pred>) -> Pred {
        match children.len() {
            0 => Pred::False,
            1 => children.pop().unwrap(),
            _ => Pred::Or(children),
        }
    }

    fn walk(&self, stats: &mut FormulaStats) {
        stats.nodes += 1;
        match self {
            Pred::True | Pred::False => {}
            Pred::Atom(_, e) => {
                stats.atoms += 1;
                stats.nodes += e.node_count();
                stats.max_degree = stats.max_degree.max(e.degree());
            }
            Pred::Not(p) => p.walk(stats),
            Pred::And(cs) | Pred::Or(cs) => {
                for c in cs {
                    c.walk(stats);
                }
            }
        }
    }
}

/// Existentially quantified sentence: every variable occurring in the body
/// is declared in `vars`, in a fixed deterministic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula {
    pub vars: Vec<String>,
    pub body: Pred,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FormulaStats {
    pub variables: usize,
    pub atoms: usize,
    pub nodes: usize,
    pub max_degree: usize,
}

impl Formula {
    pub fn stats(&self) -> FormulaStats {
        let mut stats = FormulaStats { variables: self.vars.len(), ..Default::default() };
        self.body.walk(&mut stats);
        stats
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_counts() {
        // (x - y) * (x + 1)
        let e = mul(sub(var("x"), var("y")), add(var("x"), int(1)));
        assert_eq!(e.degree(), 2);
        assert_eq!(e.node_count(), 7);
        let f = Formula {
            vars: vec!["x".into(), "y".into()],
            body: Pred::and(vec![Pred::atom(Cmp::Gt, e), Pred::True]),
        };
        let s = f.stats();
        assert_eq!(s.variables, 2);
        assert_eq!(s.atoms, 1);
        assert_eq!(s.max_degree, 2);
        assert_eq!(s.nodes, 1 + 1 + 7 + 1);
    }

    #[test]
    fn smart_constructors() {
        assert_eq!(Pred::and(vec![]), Pred::True);
        assert_eq!(Pred::or(vec![]), Pred::False);
        assert_eq!(Pred::and(vec![Pred::True]), Pred::True);
    }
}
