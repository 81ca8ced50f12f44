//! Exact rational plane geometry.
//!
//! Everything downstream (polygon scanning, code extraction, the formula
//! compiler's semantics) is grounded in the predicates here. All arithmetic
//! is over arbitrary-precision rationals; nothing ever rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Exact scalar: arbitrary-precision rational, always in lowest terms with a
/// positive denominator (the representation `num_rational` maintains).
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("supporting lines are parallel")]
    ParallelLines,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid rational literal {0:?}")]
pub struct RationalParseError(pub String);

/// Parse `"p/q"` or `"p"` with an optional leading minus.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let bad = || RationalParseError(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn rational(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Directed segment from `a` to `b`. Callers maintain `a != b`.
#[derive(Clone, PartialEq, Eq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        debug_assert!(a != b, "degenerate segment");
        Segment { a, b }
    }

    pub fn direction(&self) -> (Rational, Rational) {
        (&self.b.x - &self.a.x, &self.b.y - &self.a.y)
    }

    pub fn reversed(&self) -> Segment {
        Segment::new(self.b.clone(), self.a.clone())
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?}", self.a, self.b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

/// Signed area determinant (x_p - x_r)(y_q - y_r) - (y_p - y_r)(x_q - x_r).
pub fn orient_det(p: &Point, q: &Point, r: &Point) -> Rational {
    (&p.x - &r.x) * (&q.y - &r.y) - (&p.y - &r.y) * (&q.x - &r.x)
}

/// Orientation of the triple (p, q, r): counterclockwise, clockwise, or
/// collinear, by the exact sign of the area determinant.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    let d = orient_det(p, q, r);
    if d.is_zero() {
        Orientation::Collinear
    } else if d.is_positive() {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

/// True iff the direction determinant of the two segments vanishes. A
/// zero-length segment counts as parallel to everything.
pub fn parallel(e: &Segment, f: &Segment) -> bool {
    let (ex, ey) = e.direction();
    let (fx, fy) = f.direction();
    (ex * fy - ey * fx).is_zero()
}

/// Homogeneous coefficients (a, b, c) of the supporting line, a*x + b*y + c = 0,
/// with a = dy, b = -dx, c = x_b*y_a - x_a*y_b.
fn line_coeffs(e: &Segment) -> (Rational, Rational, Rational) {
    let a = &e.b.y - &e.a.y;
    let b = &e.a.x - &e.b.x;
    let c = &e.b.x * &e.a.y - &e.a.x * &e.b.y;
    (a, b, c)
}

/// True iff the three supporting lines pass through a common point, as the
/// vanishing of the 3x3 determinant in homogeneous line coefficients. Only
/// meaningful when no two of the segments are parallel.
pub fn concurrent(e: &Segment, f: &Segment, g: &Segment) -> bool {
    let (a1, b1, c1) = line_coeffs(e);
    let (a2, b2, c2) = line_coeffs(f);
    let (a3, b3, c3) = line_coeffs(g);
    let det = &a1 * (&b2 * &c3 - &b3 * &c2) - &b1 * (&a2 * &c3 - &a3 * &c2)
        + &c1 * (&a2 * &b3 - &a3 * &b2);
    det.is_zero()
}

/// True iff the segments intersect transversely at a single interior point of
/// both: all four endpoint orientations are strict and alternate.
pub fn segments_cross(e: &Segment, f: &Segment) -> bool {
    let d1 = orient(&e.a, &f.a, &f.b).sign();
    let d2 = orient(&e.b, &f.a, &f.b).sign();
    let d3 = orient(&e.a, &e.b, &f.a).sign();
    let d4 = orient(&e.a, &e.b, &f.b).sign();
    d1 * d2 < 0 && d3 * d4 < 0
}

/// Sign of a transverse crossing of two directed segments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CrossingSign {
    Positive,
    Negative,
}

impl CrossingSign {
    pub fn flipped(self) -> Self {
        match self {
            CrossingSign::Positive => CrossingSign::Negative,
            CrossingSign::Negative => CrossingSign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            CrossingSign::Positive => 1,
            CrossingSign::Negative => -1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Self> {
        match v {
            1 => Some(CrossingSign::Positive),
            -1 => Some(CrossingSign::Negative),
            _ => None,
        }
    }
}

/// `Positive` iff `e` crosses `f` transversely from right to left (looking
/// along `f`), `Negative` for left to right, `None` when they do not cross
/// transversely in their interiors. Strict inequalities only; degenerate
/// contacts return `None`.
pub fn crossing_sign(e: &Segment, f: &Segment) -> Option<CrossingSign> {
    let d1 = orient(&e.a, &f.a, &f.b).sign();
    let d2 = orient(&e.b, &f.a, &f.b).sign();
    let d3 = orient(&e.a, &e.b, &f.a).sign();
    let d4 = orient(&e.a, &e.b, &f.b).sign();
    if d1 < 0 && d2 > 0 && d3 > 0 && d4 < 0 {
        Some(CrossingSign::Positive)
    } else if d1 > 0 && d2 < 0 && d3 < 0 && d4 > 0 {
        Some(CrossingSign::Negative)
    } else {
        None
    }
}

/// The unique point on both supporting lines. Errors when the lines are
/// parallel. The result is exactly collinear with both segments.
pub fn line_intersection(e: &Segment, f: &Segment) -> Result<Point, GeomError> {
    let (a1, b1, c1) = line_coeffs(e);
    let (a2, b2, c2) = line_coeffs(f);
    let det = &a1 * &b2 - &a2 * &b1;
    if det.is_zero() {
        return Err(GeomError::ParallelLines);
    }
    let x = (&b1 * &c2 - &b2 * &c1) / &det;
    let y = (&c1 * &a2 - &c2 * &a1) / &det;
    Ok(Point::new(x, y))
}

/// True iff `p` lies strictly between `origin` and `q` in x order:
/// (x_origin - x_p)(x_p - x_q) > 0. Assumes the points share a non-vertical
/// line.
pub fn x_between(origin: &Point, p: &Point, q: &Point) -> bool {
    ((&origin.x - &p.x) * (&p.x - &q.x)).is_positive()
}

/// Position of `p` along the segment direction, for exact ordering of points
/// known to lie on the segment's line.
pub fn param_along(e: &Segment, p: &Point) -> Rational {
    let (dx, dy) = e.direction();
    (&p.x - &e.a.x) * dx + (&p.y - &e.a.y) * dy
}

/// True iff `p` lies on the closed segment (endpoints included).
pub fn point_on_segment(p: &Point, e: &Segment) -> bool {
    if orient(p, &e.a, &e.b) != Orientation::Collinear {
        return false;
    }
    let t = param_along(e, p);
    if t.is_negative() {
        return false;
    }
    let (dx, dy) = e.direction();
    let len2 = &dx * &dx + &dy * &dy;
    t <= len2
}

/// True iff the closed segments share at least one point (crossing, touching,
/// or collinear overlap).
pub fn segments_touch(e: &Segment, f: &Segment) -> bool {
    if segments_cross(e, f) {
        return true;
    }
    point_on_segment(&e.a, f)
        || point_on_segment(&e.b, f)
        || point_on_segment(&f.a, e)
        || point_on_segment(&f.b, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point {
        Point::ints(x, y)
    }

    fn seg(ax: i64, ay: i64, bx: i64, by: i64) -> Segment {
        Segment::new(p(ax, ay), p(bx, by))
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::CounterClockwise);
        assert_eq!(orient(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        // Determinant for ((3,-1),(0,0),(4,1)) is -7; swapping the first two
        // arguments flips the sign.
        assert_eq!(orient_det(&p(3, -1), &p(0, 0), &p(4, 1)), rat(-7));
        assert_eq!(orient(&p(0, 0), &p(3, -1), &p(4, 1)), Orientation::CounterClockwise);
    }

    #[test]
    fn parallel_examples() {
        assert!(parallel(&seg(0, 0, 1, 0), &seg(0, 1, 1, 1)));
        assert!(!parallel(&seg(0, 0, 1, 0), &seg(0, 0, 0, 1)));
        // slopes -2/3 vs -1/3
        assert!(!parallel(&seg(4, 1, 1, 3), &seg(3, -1, 0, 0)));
    }

    #[test]
    fn concurrent_examples() {
        // y = x, y = -x, x-axis: all through the origin.
        assert!(concurrent(&seg(1, 1, 2, 2), &seg(1, -1, 3, -3), &seg(5, 0, 7, 0)));
        // y = 0, y = 1, y = x.
        assert!(!concurrent(&seg(0, 0, 1, 0), &seg(0, 1, 1, 1), &seg(0, 0, 2, 2)));
        // Edges 1, 2, 3 of the bowtie quadrilateral.
        let e1 = seg(0, 0, 3, -1);
        let e2 = seg(3, -1, 1, 3);
        let e3 = seg(1, 3, 4, 1);
        assert!(!concurrent(&e1, &e2, &e3));
    }

    #[test]
    fn cross_examples() {
        assert!(segments_cross(&seg(0, 0, 2, 2), &seg(0, 2, 2, 0)));
        assert!(!segments_cross(&seg(0, 0, 1, 0), &seg(0, 1, 1, 1)));
        // Shared endpoint is not an interior crossing.
        assert!(!segments_cross(&seg(0, 0, 1, 0), &seg(1, 0, 1, 1)));
    }

    #[test]
    fn crossing_sign_examples() {
        // All four determinants evaluated by hand give the negative case.
        let e = seg(0, 0, 2, 2);
        let f = seg(2, 0, 0, 2);
        assert_eq!(crossing_sign(&e, &f), Some(CrossingSign::Negative));
        assert_eq!(crossing_sign(&f, &e), Some(CrossingSign::Positive));
        assert_eq!(crossing_sign(&seg(0, 0, 1, 0), &seg(0, 1, 1, 1)), None);
    }

    #[test]
    fn line_intersection_examples() {
        let d = line_intersection(&seg(-1, -1, 2, 2), &seg(-1, 1, 2, -2)).unwrap();
        assert_eq!(d, p(0, 0));
        let d = line_intersection(&seg(0, 3, 1, 3), &seg(2, 0, 2, 1)).unwrap();
        assert_eq!(d, p(2, 3));
        // Bowtie edges 2 and 4 meet at (20/9, 5/9).
        let e2 = seg(3, -1, 1, 3);
        let e4 = seg(4, 1, 0, 0);
        let x = line_intersection(&e2, &e4).unwrap();
        assert_eq!(x, Point::new(rational(20, 9), rational(5, 9)));
        assert_eq!(orient(&x, &e2.a, &e2.b), Orientation::Collinear);
        assert_eq!(orient(&x, &e4.a, &e4.b), Orientation::Collinear);
        assert_eq!(
            line_intersection(&seg(0, 0, 1, 0), &seg(0, 1, 1, 1)),
            Err(GeomError::ParallelLines)
        );
    }

    #[test]
    fn x_between_examples() {
        assert!(x_between(&p(0, 0), &p(1, 1), &p(2, 2)));
        assert!(!x_between(&p(0, 0), &p(2, 2), &p(1, 1)));
        assert!(x_between(&p(2, 2), &p(1, 1), &p(0, 0)));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/4").unwrap(), rational(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), rational(-3, 4));
        assert_eq!(parse_rational("5").unwrap(), rat(5));
        assert_eq!(parse_rational("6/-4").unwrap(), rational(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format!("{}", rational(-3, 4)), "-3/4");
        assert_eq!(format!("{}", rat(5)), "5");
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=6).prop_map(|(n, d)| rational(n, d))
    }

    fn small_point() -> impl Strategy<Value = Point> {
        (small_rat(), small_rat()).prop_map(|(x, y)| Point::new(x, y))
    }

    proptest! {
        #[test]
        fn orient_antisymmetry(a in small_point(), b in small_point(), c in small_point()) {
            prop_assert_eq!(orient(&a, &b, &c).sign(), -orient(&b, &a, &c).sign());
            prop_assert_eq!(orient(&a, &b, &c).sign(), -orient(&a, &c, &b).sign());
            prop_assert_eq!(orient(&a, &b, &c).sign(), orient(&b, &c, &a).sign());
        }

        #[test]
        fn crossing_sign_antisymmetry(a in small_point(), b in small_point(),
                                      c in small_point(), d in small_point()) {
            prop_assume!(a != b && c != d);
            let e = Segment::new(a, b);
            let f = Segment::new(c, d);
            let ef = crossing_sign(&e, &f);
            let fe = crossing_sign(&f, &e);
            prop_assert_eq!(ef.map(CrossingSign::flipped), fe);
            // cross = cross+ or cross-
            prop_assert_eq!(segments_cross(&e, &f), ef.is_some());
        }

        #[test]
        fn predicates_invariant_under_translation_and_scaling(
            a in small_point(), b in small_point(), c in small_point(), d in small_point(),
            tx in small_rat(), ty in small_rat(), s in 1i64..=5,
        ) {
            prop_assume!(a != b && c != d);
            let map = |p: &Point| Point::new((&p.x + &tx) * rat(s), (&p.y + &ty) * rat(s));
            let e = Segment::new(a.clone(), b.clone());
            let f = Segment::new(c.clone(), d.clone());
            let e2 = Segment::new(map(&a), map(&b));
            let f2 = Segment::new(map(&c), map(&d));
            prop_assert_eq!(crossing_sign(&e, &f), crossing_sign(&e2, &f2));
            prop_assert_eq!(parallel(&e, &f), parallel(&e2, &f2));
            prop_assert_eq!(orient(&a, &b, &c), orient(&map(&a), &map(&b), &map(&c)));
        }

        #[test]
        fn predicates_flip_under_reflection(
            a in small_point(), b in small_point(), c in small_point(), d in small_point(),
        ) {
            prop_assume!(a != b && c != d);
            let mir = |p: &Point| Point::new(-&p.x, p.y.clone());
            let e = Segment::new(a.clone(), b.clone());
            let f = Segment::new(c.clone(), d.clone());
            let e2 = Segment::new(mir(&a), mir(&b));
            let f2 = Segment::new(mir(&c), mir(&d));
            prop_assert_eq!(orient(&a, &b, &c).sign(), -orient(&mir(&a), &mir(&b), &mir(&c)).sign());
            prop_assert_eq!(
                crossing_sign(&e, &f).map(CrossingSign::flipped),
                crossing_sign(&e2, &f2)
            );
        }

        #[test]
        fn intersection_is_exactly_collinear(
            a in small_point(), b in small_point(), c in small_point(), d in small_point(),
        ) {
            prop_assume!(a != b && c != d);
            let e = Segment::new(a, b);
            let f = Segment::new(c, d);
            if let Ok(x) = line_intersection(&e, &f) {
                prop_assert_eq!(orient(&x, &e.a, &e.b), Orientation::Collinear);
                prop_assert_eq!(orient(&x, &f.a, &f.b), Orientation::Collinear);
            }
        }
    }
}
