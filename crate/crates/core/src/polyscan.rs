//! Polygons as closed curves: genericity checks, self-intersection scans,
//! signed crossing code extraction, and the polygon-vs-curve isotopy test.

use crate::codes::{self, CodesError, SignedCrossingCode};
use crate::geom::{
    crossing_sign, orient, param_along, segments_cross, segments_touch, Orientation, Point,
    Segment,
};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyscanError {
    #[error("malformed polygon: {0}")]
    Malformed(String),
    #[error("polygon is not generic")]
    NotGeneric,
    #[error("target code is not realizable")]
    NotRealizable,
    #[error("degenerate curve: {0}")]
    Degenerate(String),
}

impl From<CodesError> for PolyscanError {
    fn from(e: CodesError) -> Self {
        match e {
            CodesError::NotRealizable => PolyscanError::NotRealizable,
            CodesError::Malformed(m) => PolyscanError::Malformed(m),
        }
    }
}

/// Cyclic list of vertices, read as the closed curve visiting them in index
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self, PolyscanError> {
        if vertices.len() < 3 {
            return Err(PolyscanError::Malformed(format!(
                "need at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        for i in 0..vertices.len() {
            let j = (i + 1) % vertices.len();
            if vertices[i] == vertices[j] {
                return Err(PolyscanError::Malformed(format!(
                    "vertices {} and {} coincide",
                    i + 1,
                    j + 1
                )));
            }
        }
        Ok(Polygon { vertices })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self, PolyscanError> {
        Polygon::new(coords.iter().map(|&(x, y)| Point::ints(x, y)).collect())
    }

    pub fn m(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Directed edge i, from vertex i to vertex i+1 (mod m).
    pub fn edge(&self, i: usize) -> Segment {
        let m = self.m();
        Segment::new(self.vertices[i % m].clone(), self.vertices[(i + 1) % m].clone())
    }

    fn edges(&self) -> Vec<Segment> {
        (0..self.m()).map(|i| self.edge(i)).collect()
    }
}

/// Witnesses for every violated genericity condition; 0-based indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenericityReport {
    /// Vertex pairs with equal x-coordinate.
    pub equal_x: Vec<(usize, usize)>,
    /// Collinear vertex triples.
    pub collinear: Vec<(usize, usize, usize)>,
    /// Parallel edge pairs.
    pub parallel: Vec<(usize, usize)>,
    /// Edge triples on concurrent lines.
    pub concurrent: Vec<(usize, usize, usize)>,
}

impl GenericityReport {
    pub fn is_generic(&self) -> bool {
        self.equal_x.is_empty()
            && self.collinear.is_empty()
            && self.parallel.is_empty()
            && self.concurrent.is_empty()
    }
}

/// Evaluate all four genericity conditions with exact predicates.
pub fn check_generic(poly: &Polygon) -> GenericityReport {
    let m = poly.m();
    let vs = poly.vertices();
    let edges = poly.edges();
    let mut report = GenericityReport::default();
    for i in 0..m {
        for j in i + 1..m {
            if vs[i].x == vs[j].x {
                report.equal_x.push((i, j));
            }
            if crate::geom::parallel(&edges[i], &edges[j]) {
                report.parallel.push((i, j));
            }
            for k in j + 1..m {
                if orient(&vs[i], &vs[j], &vs[k]) == Orientation::Collinear {
                    report.collinear.push((i, j, k));
                }
                if !crate::geom::parallel(&edges[i], &edges[j])
                    && !crate::geom::parallel(&edges[i], &edges[k])
                    && !crate::geom::parallel(&edges[j], &edges[k])
                    && crate::geom::concurrent(&edges[i], &edges[j], &edges[k])
                {
                    report.concurrent.push((i, j, k));
                }
            }
        }
    }
    report
}

/// One transverse self-intersection: the edges that cross (0-based, i < j),
/// the exact intersection point, and the sign of edge i crossing edge j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub edge_i: usize,
    pub edge_j: usize,
    pub point: Point,
    pub sign: i8,
}

/// All self-intersections of a generic polygon, one per crossing edge pair,
/// sorted by (edge i, position along edge i).
pub fn self_intersections(poly: &Polygon) -> Result<Vec<Crossing>, PolyscanError> {
    if !check_generic(poly).is_generic() {
        return Err(PolyscanError::NotGeneric);
    }
    let m = poly.m();
    let edges = poly.edges();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if j == i + 1 || (i == 0 && j == m - 1) {
                continue;
            }
            if segments_cross(&edges[i], &edges[j]) {
                let point = crate::geom::line_intersection(&edges[i], &edges[j])
                    .expect("crossing segments are not parallel");
                let sign = crossing_sign(&edges[i], &edges[j])
                    .expect("transverse crossing has a sign")
                    .as_i8();
                out.push(Crossing { edge_i: i, edge_j: j, point, sign });
            }
        }
    }
    out.sort_by(|a, b| {
        a.edge_i.cmp(&b.edge_i).then_with(|| {
            let e = poly.edge(a.edge_i);
            param_along(&e, &a.point).cmp(&param_along(&e, &b.point))
        })
    });
    Ok(out)
}

/// Code extraction result for a walk of a closed polyline: the signed
/// crossing code plus, for each crossing position, the edge containing it
/// and its exact location.
#[derive(Clone, Debug)]
pub(crate) struct TraceResult {
    pub code: SignedCrossingCode,
    pub edge_of_position: Vec<usize>,
    pub point_of_position: Vec<Point>,
}

/// Walk a closed polyline from vertex 0 and read off its signed crossing
/// code. The polyline need not be generic, only clean: all self-intersections
/// are transverse double points interior to both edges. The caller guarantees
/// the basepoint convention (outer face to the right of the first edge).
pub(crate) fn trace_closed_polyline(points: &[Point]) -> Result<TraceResult, PolyscanError> {
    let m = points.len();
    if m < 3 {
        return Err(PolyscanError::Degenerate("fewer than 3 vertices".into()));
    }
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let a = points[i].clone();
        let b = points[(i + 1) % m].clone();
        if a == b {
            return Err(PolyscanError::Degenerate(format!("zero-length edge {}", i + 1)));
        }
        edges.push(Segment::new(a, b));
    }
    // Per-edge crossing lists; pair key = (smaller edge, larger edge).
    let mut per_edge: Vec<Vec<((usize, usize), Point)>> = vec![Vec::new(); m];
    let mut seen_points: BTreeMap<Point, (usize, usize)> = BTreeMap::new();
    for i in 0..m {
        for j in i + 1..m {
            let adjacent = j == i + 1 || (i == 0 && j == m - 1);
            if adjacent {
                // Adjacent edges may only share their common vertex.
                let shared = if j == i + 1 { &points[j] } else { &points[0] };
                let (e, f) = (&edges[i], &edges[j]);
                let bad = (&e.a != shared && crate::geom::point_on_segment(&e.a, f))
                    || (&e.b != shared && crate::geom::point_on_segment(&e.b, f))
                    || (&f.a != shared && crate::geom::point_on_segment(&f.a, e))
                    || (&f.b != shared && crate::geom::point_on_segment(&f.b, e));
                if bad {
                    return Err(PolyscanError::Degenerate(format!(
                        "edges {} and {} overlap beyond their shared vertex",
                        i + 1,
                        j + 1
                    )));
                }
                continue;
            }
            if segments_cross(&edges[i], &edges[j]) {
                let p = crate::geom::line_intersection(&edges[i], &edges[j])
                    .expect("crossing segments are not parallel");
                if let Some(&(a, b)) = seen_points.get(&p) {
                    return Err(PolyscanError::Degenerate(format!(
                        "edges {},{} and {},{} pass through one point",
                        a + 1,
                        b + 1,
                        i + 1,
                        j + 1
                    )));
                }
                seen_points.insert(p.clone(), (i, j));
                per_edge[i].push(((i, j), p.clone()));
                per_edge[j].push(((i, j), p));
            } else if segments_touch(&edges[i], &edges[j]) {
                return Err(PolyscanError::Degenerate(format!(
                    "edges {} and {} touch without crossing",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    // Crossing positions in traversal order: edges in index order, crossings
    // on each edge ordered by the parameter along its direction.
    let mut edge_of_position = Vec::new();
    let mut point_of_position = Vec::new();
    let mut visits: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, list) in per_edge.iter_mut().enumerate() {
        list.sort_by(|a, b| param_along(&edges[i], &a.1).cmp(&param_along(&edges[i], &b.1)));
        for (key, p) in list.iter() {
            let pos = edge_of_position.len();
            edge_of_position.push(i);
            point_of_position.push(p.clone());
            visits.entry(*key).or_default().push(pos);
        }
    }
    let len = edge_of_position.len();
    let mut twin = vec![0usize; len];
    let mut sign = vec![0i8; len];
    for (key, vs) in &visits {
        debug_assert_eq!(vs.len(), 2);
        let (p, q) = (vs[0], vs[1]);
        twin[p] = q;
        twin[q] = p;
        let (i, j) = *key;
        let s = crossing_sign(&edges[i], &edges[j])
            .expect("transverse crossing has a sign")
            .as_i8();
        // Position p lies on the smaller edge index i by construction order
        // only when both visits fall on distinct edges; look it up instead.
        let (si, sj) = if edge_of_position[p] == i { (s, -s) } else { (-s, s) };
        sign[p] = si;
        sign[q] = sj;
    }
    Ok(TraceResult {
        code: SignedCrossingCode::from_zero_based(twin, sign),
        edge_of_position,
        point_of_position,
    })
}

/// Indices of convex hull vertices, ascending. Exact arithmetic; assumes
/// distinct points (guaranteed under genericity).
pub fn convex_hull_vertices(points: &[Point]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| points[a].cmp(&points[b]));
    let build = |iter: &mut dyn Iterator<Item = usize>| -> Vec<usize> {
        let mut chain: Vec<usize> = Vec::new();
        for i in iter {
            while chain.len() >= 2 {
                let a = &points[chain[chain.len() - 2]];
                let b = &points[chain[chain.len() - 1]];
                if orient(a, b, &points[i]) == Orientation::CounterClockwise {
                    break;
                }
                chain.pop();
            }
            chain.push(i);
        }
        chain
    };
    let lower = build(&mut idx.iter().copied());
    let upper = build(&mut idx.iter().rev().copied());
    let mut hull: Vec<usize> = lower[..lower.len() - 1]
        .iter()
        .chain(upper[..upper.len() - 1].iter())
        .copied()
        .collect();
    hull.sort_unstable();
    hull.dedup();
    hull
}

/// One extraction: the basepoint vertex (0-based index into the input
/// polygon), whether the walk runs against the input vertex order, the code,
/// and the weakly sorted edge code (0-based edge indices of the re-based
/// polygon).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub basepoint: usize,
    pub reversed: bool,
    pub code: SignedCrossingCode,
    pub edge_code: Vec<usize>,
}

/// Extract the signed crossing code and edge code for every convex hull
/// basepoint, each oriented so the triple (p_m, p_1, p_2) turns
/// counterclockwise.
pub fn extract_codes(poly: &Polygon) -> Result<Vec<Extraction>, PolyscanError> {
    if !check_generic(poly).is_generic() {
        return Err(PolyscanError::NotGeneric);
    }
    let m = poly.m();
    let vs = poly.vertices();
    let mut out = Vec::new();
    for h in convex_hull_vertices(vs) {
        let prev = &vs[(h + m - 1) % m];
        let next = &vs[(h + 1) % m];
        let reversed = match orient(prev, &vs[h], next) {
            Orientation::CounterClockwise => false,
            Orientation::Clockwise => true,
            Orientation::Collinear => return Err(PolyscanError::NotGeneric),
        };
        let mut walk = Vec::with_capacity(m);
        for k in 0..m {
            let i = if reversed { (h + m - k % m) % m } else { (h + k) % m };
            walk.push(vs[i].clone());
        }
        let trace = trace_closed_polyline(&walk)?;
        debug_assert!(trace.edge_of_position.windows(2).all(|w| w[0] <= w[1]));
        out.push(Extraction {
            basepoint: h,
            reversed,
            code: trace.code,
            edge_code: trace.edge_of_position,
        });
    }
    Ok(out)
}

/// True iff the polygon, read as a closed curve, is isotopic to the target
/// code: some extracted code lies among the target's codes.
pub fn is_isotopic(poly: &Polygon, target: &SignedCrossingCode) -> Result<bool, PolyscanError> {
    if !codes::realizable(target) {
        return Err(PolyscanError::NotRealizable);
    }
    let extractions = extract_codes(poly)?;
    let class = codes::equivalent_codes(target)?;
    Ok(extractions.iter().any(|e| class.contains(&e.code)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rational;

    pub(crate) fn bowtie() -> Polygon {
        Polygon::from_ints(&[(0, 0), (3, -1), (1, 3), (4, 1)]).unwrap()
    }

    fn fig8() -> SignedCrossingCode {
        SignedCrossingCode::from_one_based(vec![2, 1], vec![-1, 1]).unwrap()
    }

    fn convex_quad() -> Polygon {
        Polygon::from_ints(&[(0, 0), (7, 1), (9, 6), (2, 8)]).unwrap()
    }

    #[test]
    fn bowtie_is_generic() {
        assert!(check_generic(&bowtie()).is_generic());
    }

    #[test]
    fn square_is_not_generic() {
        let square = Polygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        let report = check_generic(&square);
        assert!(!report.equal_x.is_empty());
        assert!(!report.parallel.is_empty());
        assert!(!report.is_generic());
    }

    #[test]
    fn repeated_vertex_fails_collinearity() {
        let poly = Polygon::new(vec![
            Point::ints(0, 0),
            Point::ints(5, 1),
            Point::ints(0, 0),
            Point::ints(2, 7),
        ])
        .unwrap();
        let report = check_generic(&poly);
        assert!(!report.collinear.is_empty());
    }

    #[test]
    fn bowtie_crossings() {
        let xs = self_intersections(&bowtie()).unwrap();
        assert_eq!(xs.len(), 1);
        assert_eq!((xs[0].edge_i, xs[0].edge_j), (1, 3));
        assert_eq!(xs[0].point, Point::new(rational(20, 9), rational(5, 9)));
        assert_eq!(xs[0].sign, -1);
    }

    #[test]
    fn convex_polygon_has_no_crossings() {
        assert!(self_intersections(&convex_quad()).unwrap().is_empty());
    }

    #[test]
    fn star_polygon_has_five_crossings() {
        // Pentagram {5/2} perturbed onto rational, generic coordinates.
        let star = Polygon::from_ints(&[
            (0, 100),
            (59, -81),
            (-96, 31),
            (97, 30),
            (-58, -82),
        ])
        .unwrap();
        assert!(check_generic(&star).is_generic());
        assert_eq!(self_intersections(&star).unwrap().len(), 5);
    }

    #[test]
    fn bowtie_extraction_matches_figure_eight() {
        let extractions = extract_codes(&bowtie()).unwrap();
        // All four vertices are hull vertices and all walks read the same
        // code; the basepoint at the origin yields edge code [2, 4].
        assert_eq!(extractions.len(), 4);
        for e in &extractions {
            assert_eq!(e.code, fig8());
            assert!(codes::validate(&e.code).is_valid());
        }
        let at_origin = &extractions[0];
        assert_eq!(at_origin.basepoint, 0);
        assert!(!at_origin.reversed);
        assert_eq!(at_origin.edge_code, vec![1, 3]); // edges 2 and 4, 1-based
        assert_eq!(extractions[2].edge_code, vec![0, 2]); // from p3, reversed
    }

    #[test]
    fn convex_extraction_is_empty_code() {
        let extractions = extract_codes(&convex_quad()).unwrap();
        assert_eq!(extractions.len(), 4);
        for e in &extractions {
            assert!(e.code.is_empty());
            assert!(e.edge_code.is_empty());
        }
    }

    #[test]
    fn bowtie_is_isotopic_to_figure_eight() {
        assert!(is_isotopic(&bowtie(), &fig8()).unwrap());
        assert!(!is_isotopic(&convex_quad(), &fig8()).unwrap());
        assert!(is_isotopic(&convex_quad(), &SignedCrossingCode::empty()).unwrap());
    }

    #[test]
    fn extraction_is_invariant_under_translation_scaling_rotation_of_indices() {
        let base = extract_codes(&bowtie()).unwrap();
        let scaled = Polygon::new(
            bowtie()
                .vertices()
                .iter()
                .map(|p| Point::new((&p.x + rational(7, 3)) * rational(5, 2), (&p.y - rational(1, 4)) * rational(5, 2)))
                .collect(),
        )
        .unwrap();
        let scaled_codes = extract_codes(&scaled).unwrap();
        assert_eq!(
            base.iter().map(|e| e.code.clone()).collect::<Vec<_>>(),
            scaled_codes.iter().map(|e| e.code.clone()).collect::<Vec<_>>()
        );
        // Rotating the vertex list does not change the extracted code set.
        let mut rotated_vertices = bowtie().vertices().to_vec();
        rotated_vertices.rotate_left(2);
        let rotated = Polygon::new(rotated_vertices).unwrap();
        let rotated_codes: Vec<_> = extract_codes(&rotated).unwrap().into_iter().map(|e| e.code).collect();
        assert_eq!(base.iter().map(|e| e.code.clone()).collect::<Vec<_>>(), rotated_codes);
    }

    #[test]
    fn reflection_flips_every_sign() {
        let mirrored = Polygon::new(
            bowtie()
                .vertices()
                .iter()
                .map(|p| Point::new(-&p.x, p.y.clone()))
                .collect(),
        )
        .unwrap();
        let codes_m = extract_codes(&mirrored).unwrap();
        for e in &codes_m {
            // Mirror of the figure-eight is still a figure-eight, read from
            // re-chosen basepoints: sign vector [-1, +1] again.
            assert_eq!(e.code, fig8());
        }
        // But the per-crossing sign of the fixed edge pair flips.
        let xs = self_intersections(&mirrored).unwrap();
        assert_eq!(xs[0].sign, 1);
    }
}
