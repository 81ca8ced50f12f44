//! Compilation of "is this curve isotopic to an m-gon?" into formula ASTs.
//!
//! Vertex indices are 1-based with modular wraparound; every indexed
//! conjunction or disjunction is expanded explicitly, and constants such as
//! twin entries and edge indices are baked in at compile time. The only
//! indirection (edge variables used as indices) is simulated by disjunctions
//! over explicit constant pairs and triples.

use super::ast::{int, mul, sub, sum, var, Cmp, Formula, Pred, E};
use crate::codes::{self, CodesError, SignedCrossingCode};

/// Emission options. Pruning drops indirection terms whose constant edge
/// pair is equal or adjacent (such edges cannot cross a generic polygon);
/// disabling it reproduces the fully literal expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmitOptions {
    pub prune: bool,
    pub order_style: OrderStyle,
}

/// How the per-pair crossing-order clauses combine. `Conjunction` requires
/// every consecutive crossing pair to be ordered, which is what the
/// surrounding semantics need; `Disjunction` reproduces the weaker
/// literal combination for comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderStyle {
    Conjunction,
    Disjunction,
}

impl Default for EmitOptions {
    fn default() -> Self {
        EmitOptions { prune: true, order_style: OrderStyle::Conjunction }
    }
}

impl EmitOptions {
    /// Fully literal expansion: no pruning, conjunction order combination.
    pub fn literal() -> Self {
        EmitOptions { prune: false, order_style: OrderStyle::Conjunction }
    }
}

// Variable names. Vertex and edge indices in names are 1-based.

pub fn x_var(i: usize, m: usize) -> String {
    format!("x{}", wrap(i, m))
}

pub fn y_var(i: usize, m: usize) -> String {
    format!("y{}", wrap(i, m))
}

pub fn edge_var(i: usize) -> String {
    format!("edge{}", i)
}

pub fn indicator_var(i: usize, j: usize) -> String {
    format!("X{}_{}", i, j)
}

pub fn ix_var(e: usize, et: usize) -> String {
    format!("ix{}_{}", e, et)
}

pub fn iy_var(e: usize, et: usize) -> String {
    format!("iy{}_{}", e, et)
}

/// Wrap a 1-based index into 1..=m.
fn wrap(i: usize, m: usize) -> usize {
    (i - 1) % m + 1
}

fn xv(i: usize, m: usize) -> E {
    var(x_var(i, m))
}

fn yv(i: usize, m: usize) -> E {
    var(y_var(i, m))
}

fn pt(i: usize, m: usize) -> (E, E) {
    (xv(i, m), yv(i, m))
}

/// Signed area determinant of three symbolic points:
/// (x_p - x_r)(y_q - y_r) - (y_p - y_r)(x_q - x_r).
fn delta_pts(p: (E, E), q: (E, E), r: (E, E)) -> E {
    sub(
        mul(sub(p.0, r.0.clone()), sub(q.1, r.1.clone())),
        mul(sub(p.1, r.1), sub(q.0, r.0)),
    )
}

/// Delta over polygon vertex indices.
fn delta(i: usize, j: usize, k: usize, m: usize) -> E {
    delta_pts(pt(i, m), pt(j, m), pt(k, m))
}

/// Direction determinant of edges i and j.
fn parallel_det(i: usize, j: usize, m: usize) -> E {
    sub(
        mul(sub(xv(i + 1, m), xv(i, m)), sub(yv(j + 1, m), yv(j, m))),
        mul(sub(yv(i + 1, m), yv(i, m)), sub(xv(j + 1, m), xv(j, m))),
    )
}

/// Homogeneous line coefficients of edge i: (dy, -dx, x_{i+1} y_i - x_i y_{i+1}).
fn line_coeffs(i: usize, m: usize) -> (E, E, E) {
    let a = sub(yv(i + 1, m), yv(i, m));
    let b = sub(xv(i, m), xv(i + 1, m));
    let c = sub(mul(xv(i + 1, m), yv(i, m)), mul(xv(i, m), yv(i + 1, m)));
    (a, b, c)
}

/// 3x3 concurrency determinant in line coefficients of edges i, j, k.
fn concurrent_det(i: usize, j: usize, k: usize, m: usize) -> E {
    let (a1, b1, c1) = line_coeffs(i, m);
    let (a2, b2, c2) = line_coeffs(j, m);
    let (a3, b3, c3) = line_coeffs(k, m);
    let minor = |p: &E, q: &E, r: &E, s: &E| sub(mul(p.clone(), q.clone()), mul(r.clone(), s.clone()));
    sum(vec![
        mul(a1, minor(&b2, &c3, &b3, &c2)),
        mul(sub(int(0), b1), minor(&a2, &c3, &a3, &c2)),
        mul(c1, minor(&a2, &b3, &a3, &b2)),
    ])
}

fn coord_vars(m: usize) -> Vec<String> {
    let mut vars = Vec::with_capacity(2 * m);
    for i in 1..=m {
        vars.push(x_var(i, m));
        vars.push(y_var(i, m));
    }
    vars
}

/// General-position sentence: distinct consecutive x, leftmost basepoint,
/// counterclockwise start, no parallel edge pair, no collinear vertex triple,
/// no concurrent edge-line triple.
pub fn good_polygon(m: usize) -> Formula {
    assert!(m >= 3, "need m >= 3");
    let mut clauses = Vec::new();
    for i in 1..=m {
        clauses.push(Pred::atom(Cmp::Ne, sub(xv(i, m), xv(i + 1, m))));
    }
    for i in 2..=m {
        clauses.push(Pred::atom(Cmp::Le, sub(xv(1, m), xv(i, m))));
    }
    clauses.push(Pred::atom(Cmp::Gt, delta(m, 1, 2, m)));
    for i in 1..m {
        for j in i + 1..=m {
            clauses.push(Pred::atom(Cmp::Ne, parallel_det(i, j, m)));
        }
    }
    for i in 1..m - 1 {
        for j in i + 1..m {
            for k in j + 1..=m {
                clauses.push(Pred::atom(Cmp::Ne, delta(i, j, k, m)));
                clauses.push(Pred::atom(Cmp::Ne, concurrent_det(i, j, k, m)));
            }
        }
    }
    Formula { vars: coord_vars(m), body: Pred::and(clauses) }
}

/// Unordered non-adjacent edge pairs (i, j), 1-based, i < j.
pub fn non_adjacent_pairs(m: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 1..=m.saturating_sub(2) {
        for j in i + 2..=m {
            if i == 1 && j == m {
                continue;
            }
            pairs.push((i, j));
        }
    }
    pairs
}

/// Interior crossing test for edges i and j: both products of opposite
/// orientations are negative.
fn cross(i: usize, j: usize, m: usize) -> Pred {
    Pred::and(vec![
        Pred::atom(
            Cmp::Lt,
            mul(delta(i, j, j + 1, m), delta(i + 1, j, j + 1, m)),
        ),
        Pred::atom(
            Cmp::Lt,
            mul(delta(i, i + 1, j, m), delta(i, i + 1, j + 1, m)),
        ),
    ])
}

/// Crossing-count sentence: indicator variables record which non-adjacent
/// edge pairs cross, and their brute-force sum equals n.
pub fn num_crossings(m: usize, n: usize) -> Formula {
    assert!(m >= 3, "need m >= 3");
    let pairs = non_adjacent_pairs(m);
    let mut clauses = Vec::new();
    let mut indicators = Vec::new();
    for &(i, j) in &pairs {
        let x = var(indicator_var(i, j));
        indicators.push(x.clone());
        clauses.push(Pred::or(vec![
            Pred::and(vec![
                Pred::atom(Cmp::Eq, sub(x.clone(), int(1))),
                cross(i, j, m),
            ]),
            Pred::and(vec![Pred::atom(Cmp::Eq, x), Pred::not(cross(i, j, m))]),
        ]));
    }
    clauses.push(Pred::atom(Cmp::Eq, sub(sum(indicators), int(n as i64))));
    let mut vars = coord_vars(m);
    vars.extend(pairs.iter().map(|&(i, j)| indicator_var(i, j)));
    Formula { vars, body: Pred::and(clauses) }
}

/// Well-formed edge code: entries weakly increase and each one equals some
/// edge index in 1..=m.
pub fn well_formed(n: usize, m: usize) -> Formula {
    let mut clauses = Vec::new();
    for i in 1..2 * n {
        clauses.push(Pred::atom(Cmp::Le, sub(var(edge_var(i)), var(edge_var(i + 1)))));
    }
    for i in 1..=2 * n {
        let membership = (1..=m)
            .map(|e| Pred::atom(Cmp::Eq, sub(var(edge_var(i)), int(e as i64))))
            .collect();
        clauses.push(Pred::or(membership));
    }
    let vars = (1..=2 * n).map(edge_var).collect();
    Formula { vars, body: Pred::and(clauses) }
}

/// True when edges e and et are equal or adjacent mod m, in which case they
/// cannot cross a generic polygon.
fn adjacent_or_equal(e: usize, et: usize, m: usize) -> bool {
    e == et || wrap(e + 1, m) == et || wrap(et + 1, m) == e
}

/// Directed crossing condition for explicit edge constants: sign +1 means
/// edge e crosses edge et from right to left.
fn cross_signed(sign: i8, e: usize, et: usize, m: usize) -> Pred {
    let (lo, hi) = if sign > 0 { (Cmp::Lt, Cmp::Gt) } else { (Cmp::Gt, Cmp::Lt) };
    Pred::and(vec![
        Pred::atom(lo, delta(e, et, et + 1, m)),
        Pred::atom(hi, delta(e + 1, et, et + 1, m)),
        Pred::atom(hi, delta(e, e + 1, et, m)),
        Pred::atom(lo, delta(e, e + 1, et + 1, m)),
    ])
}

/// Crossing-sign sentence: each crossing position's edge pair crosses with
/// its recorded sign. Edge-variable indirection becomes a disjunction over
/// constant pairs (e, et).
pub fn crossing_signs(code: &SignedCrossingCode, m: usize, opts: EmitOptions) -> Formula {
    let len = code.len();
    let mut clauses = Vec::with_capacity(len);
    for i in 0..len {
        let twin = code.twin(i);
        let sign = code.sign(i);
        let mut terms = Vec::new();
        for e in 1..=m {
            for et in 1..=m {
                if opts.prune && adjacent_or_equal(e, et, m) {
                    continue;
                }
                terms.push(Pred::and(vec![
                    Pred::atom(Cmp::Eq, sub(var(edge_var(i + 1)), int(e as i64))),
                    Pred::atom(Cmp::Eq, sub(var(edge_var(twin + 1)), int(et as i64))),
                    cross_signed(sign, e, et, m),
                ]));
            }
        }
        clauses.push(Pred::or(terms));
    }
    let mut vars = coord_vars(m);
    vars.extend((1..=len).map(edge_var));
    Formula { vars, body: Pred::and(clauses) }
}

/// Ordered pairs of edge constants whose line intersection gets coordinate
/// variables, in declaration order.
pub fn declared_intersection_pairs(m: usize, opts: EmitOptions) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for e in 1..=m {
        for et in 1..=m {
            let skip = if opts.prune { adjacent_or_equal(e, et, m) } else { e == et };
            if !skip {
                pairs.push((e, et));
            }
        }
    }
    pairs
}

/// Point-order condition along edge e: x_e, the intersection with et, and
/// the intersection with et2 appear in this order. FALSE when an index
/// repeats the base edge.
fn ordered_p(e: usize, et: usize, et2: usize, m: usize) -> Pred {
    if e == et || e == et2 {
        return Pred::False;
    }
    Pred::atom(
        Cmp::Gt,
        mul(
            sub(xv(e, m), var(ix_var(e, et))),
            sub(var(ix_var(e, et)), var(ix_var(e, et2))),
        ),
    )
}

/// Crossing-order sentence: intersection points are pinned implicitly by two
/// collinearity equations, and each consecutive crossing pair is either on
/// different edges or correctly x-ordered, with indirection expanded over
/// constant triples.
pub fn crossing_order(code: &SignedCrossingCode, m: usize, opts: EmitOptions) -> Formula {
    let len = code.len();
    let pairs = declared_intersection_pairs(m, opts);
    let mut clauses = Vec::new();
    for &(e, et) in &pairs {
        let p = (var(ix_var(e, et)), var(iy_var(e, et)));
        clauses.push(Pred::atom(Cmp::Eq, delta_pts(p.clone(), pt(e, m), pt(e + 1, m))));
        clauses.push(Pred::atom(Cmp::Eq, delta_pts(p, pt(et, m), pt(et + 1, m))));
    }
    let mut ordered = Vec::new();
    for i in 0..len.saturating_sub(1) {
        let twin_i = code.twin(i);
        let twin_next = code.twin(i + 1);
        let mut terms = Vec::new();
        for e in 1..=m {
            for et in 1..=m {
                if opts.prune && adjacent_or_equal(e, et, m) {
                    continue;
                }
                for et2 in 1..=m {
                    if opts.prune && adjacent_or_equal(e, et2, m) {
                        continue;
                    }
                    terms.push(Pred::and(vec![
                        Pred::atom(Cmp::Eq, sub(var(edge_var(i + 1)), int(e as i64))),
                        Pred::atom(Cmp::Eq, sub(var(edge_var(twin_i + 1)), int(et as i64))),
                        Pred::atom(Cmp::Eq, sub(var(edge_var(twin_next + 1)), int(et2 as i64))),
                        ordered_p(e, et, et2, m),
                    ]));
                }
            }
        }
        ordered.push(Pred::or(vec![
            Pred::atom(Cmp::Ne, sub(var(edge_var(i + 1)), var(edge_var(i + 2)))),
            Pred::or(terms),
        ]));
    }
    let combined = match opts.order_style {
        OrderStyle::Conjunction => Pred::and(ordered),
        OrderStyle::Disjunction => Pred::or(ordered),
    };
    clauses.push(combined);
    let mut vars = coord_vars(m);
    vars.extend((1..=len).map(edge_var));
    for &(e, et) in &pairs {
        vars.push(ix_var(e, et));
        vars.push(iy_var(e, et));
    }
    Formula { vars, body: Pred::and(clauses) }
}

/// Variable declaration order shared by `coded_polygon` and the top-level
/// sentence: coordinates, edge code, crossing indicators, intersection
/// points.
pub fn coded_polygon_vars(n: usize, m: usize, opts: EmitOptions) -> Vec<String> {
    let mut vars = coord_vars(m);
    vars.extend((1..=2 * n).map(edge_var));
    vars.extend(non_adjacent_pairs(m).iter().map(|&(i, j)| indicator_var(i, j)));
    for (e, et) in declared_intersection_pairs(m, opts) {
        vars.push(ix_var(e, et));
        vars.push(iy_var(e, et));
    }
    vars
}

/// Conjunction of the five subformulas: generic polygon, crossing count,
/// well-formed edge code, crossing signs, crossing order.
pub fn coded_polygon(code: &SignedCrossingCode, m: usize, opts: EmitOptions) -> Formula {
    let body = Pred::and(vec![
        good_polygon(m).body,
        num_crossings(m, code.n()).body,
        well_formed(code.n(), m).body,
        crossing_signs(code, m, opts).body,
        crossing_order(code, m, opts).body,
    ]);
    Formula { vars: coded_polygon_vars(code.n(), m, opts), body }
}

/// The top-level sentence: some generic m-gon realizes one of the curve's
/// valid signed crossing codes. One disjunct per code; edge, indicator, and
/// intersection variables are shared across disjuncts.
pub fn isotopic_to_polygon(
    code: &SignedCrossingCode,
    m: usize,
    opts: EmitOptions,
) -> Result<Formula, CodesError> {
    let class = codes::equivalent_codes(code)?;
    let disjuncts: Vec<Pred> =
        class.iter().map(|c| coded_polygon(c, m, opts).body).collect();
    Ok(Formula {
        vars: coded_polygon_vars(code.n(), m, opts),
        body: Pred::or(disjuncts),
    })
}
