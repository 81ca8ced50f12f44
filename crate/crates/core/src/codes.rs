//! Signed crossing codes for closed curves in the plane.
//!
//! A curve with n self-crossings is recorded by walking it once from a
//! basepoint: `twin` pairs the 2n crossing positions, `sign` records the
//! direction of each crossing. The basepoint convention pins the plane
//! embedding: the outer face lies immediately to the right of the curve at
//! the basepoint. This module validates codes, reconstructs the plane map,
//! and enumerates all codes of the same curve.

use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodesError {
    #[error("malformed code: {0}")]
    Malformed(String),
    #[error("code is not realizable in the plane")]
    NotRealizable,
}

/// The pair (twin, sign). Twins are stored 0-based internally; the JSON
/// format and all user-facing text are 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedCrossingCode {
    twin: Vec<usize>,
    sign: Vec<i8>,
}

impl fmt::Debug for SignedCrossingCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "code(twin={:?}, sign={:?})", self.twin_one_based(), self.sign)
    }
}

impl SignedCrossingCode {
    /// Empty code of a simple closed curve.
    pub fn empty() -> Self {
        SignedCrossingCode { twin: vec![], sign: vec![] }
    }

    /// Build from 1-based twin entries. Only shape is enforced here
    /// (matching lengths, entries in range); semantic invariants are the
    /// business of [`validate`].
    pub fn from_one_based(twin: Vec<usize>, sign: Vec<i8>) -> Result<Self, CodesError> {
        if twin.len() != sign.len() {
            return Err(CodesError::Malformed(format!(
                "twin has {} entries but sign has {}",
                twin.len(),
                sign.len()
            )));
        }
        if twin.len() % 2 != 0 {
            return Err(CodesError::Malformed(format!(
                "twin length {} is odd",
                twin.len()
            )));
        }
        let len = twin.len();
        let mut tw = Vec::with_capacity(len);
        for (i, &t) in twin.iter().enumerate() {
            if t < 1 || t > len {
                return Err(CodesError::Malformed(format!(
                    "twin[{}] = {} out of range 1..={}",
                    i + 1,
                    t,
                    len
                )));
            }
            tw.push(t - 1);
        }
        Ok(SignedCrossingCode { twin: tw, sign })
    }

    pub(crate) fn from_zero_based(twin: Vec<usize>, sign: Vec<i8>) -> Self {
        debug_assert_eq!(twin.len(), sign.len());
        SignedCrossingCode { twin, sign }
    }

    pub fn n(&self) -> usize {
        self.twin.len() / 2
    }

    /// Number of crossing positions, 2n.
    pub fn len(&self) -> usize {
        self.twin.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twin.is_empty()
    }

    /// 0-based twin of a 0-based position.
    pub fn twin(&self, pos: usize) -> usize {
        self.twin[pos]
    }

    pub fn sign(&self, pos: usize) -> i8 {
        self.sign[pos]
    }

    pub fn twin_one_based(&self) -> Vec<usize> {
        self.twin.iter().map(|&t| t + 1).collect()
    }

    pub fn signs(&self) -> &[i8] {
        &self.sign
    }

    fn structure_ok(&self) -> bool {
        let r = validate(self);
        r.involution && r.fixed_point_free && r.parity && r.sign_antisymmetry
    }
}

/// Per-invariant outcome of validating a code. A code is valid iff every
/// field holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// twin[twin[i]] = i for all i.
    pub involution: bool,
    /// twin[i] != i for all i.
    pub fixed_point_free: bool,
    /// twin[i] and i have opposite parity.
    pub parity: bool,
    /// sign values are +-1 and sign[twin[i]] = -sign[i].
    pub sign_antisymmetry: bool,
    /// Rotation-system face count satisfies Euler's formula for the sphere.
    pub realizable: bool,
    /// Human-readable witnesses for each failure, 1-based positions.
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.involution
            && self.fixed_point_free
            && self.parity
            && self.sign_antisymmetry
            && self.realizable
    }
}

/// Check every invariant of a signed crossing code, independently.
pub fn validate(code: &SignedCrossingCode) -> ValidationReport {
    let len = code.twin.len();
    let mut report = ValidationReport {
        involution: true,
        fixed_point_free: true,
        parity: true,
        sign_antisymmetry: true,
        realizable: false,
        failures: vec![],
    };
    for i in 0..len {
        let t = code.twin[i];
        if code.twin[t] != i {
            report.involution = false;
            report
                .failures
                .push(format!("twin[twin[{}]] = {} != {}", i + 1, code.twin[t] + 1, i + 1));
        }
        if t == i {
            report.fixed_point_free = false;
            report.failures.push(format!("twin[{}] = {}", i + 1, i + 1));
        }
        if (t + i) % 2 == 0 {
            report.parity = false;
            report
                .failures
                .push(format!("twin[{}] = {} has the same parity", i + 1, t + 1));
        }
        if code.sign[i] != 1 && code.sign[i] != -1 {
            report.sign_antisymmetry = false;
            report
                .failures
                .push(format!("sign[{}] = {} is not +-1", i + 1, code.sign[i]));
        } else if code.sign[t] != -code.sign[i] {
            report.sign_antisymmetry = false;
            report
                .failures
                .push(format!("sign[{}] and sign[{}] do not alternate", i + 1, t + 1));
        }
    }
    if report.involution && report.fixed_point_free && report.parity && report.sign_antisymmetry {
        report.realizable = face_count(code) == code.n() + 2;
        if !report.realizable {
            report.failures.push(format!(
                "face count {} != n + 2 = {}",
                face_count(code),
                code.n() + 2
            ));
        }
    } else {
        report.failures.push("realizability not evaluated".to_string());
    }
    report
}

/// A dart of the image graph: one direction of one arc. Arc `a` (0-based)
/// runs from crossing position `a` to position `a+1 mod 2n`; the basepoint
/// lies on the last arc.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub arc: usize,
    pub forward: bool,
}

impl Dart {
    pub fn id(&self) -> usize {
        self.arc * 2 + usize::from(!self.forward)
    }

    pub fn rev(&self) -> Dart {
        Dart { arc: self.arc, forward: !self.forward }
    }
}

impl fmt::Debug for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.arc + 1, if self.forward { "+" } else { "-" })
    }
}

/// The embedded image graph of a code: crossings as vertices, arcs as edges,
/// counterclockwise rotations, and the faces they trace. `faces[k]` lists the
/// darts having face k on their right.
#[derive(Clone, Debug)]
pub struct PlaneMap {
    n: usize,
    rotations: Vec<[Dart; 4]>,
    vertex_of_position: Vec<usize>,
    faces: Vec<Vec<Dart>>,
    face_of_dart: Vec<usize>,
    outer_face: usize,
}

impl PlaneMap {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        2 * self.n
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of_dart[d.id()]
    }

    /// Counterclockwise rotation at the vertex where `pos` crosses.
    pub fn rotation_at(&self, pos: usize) -> &[Dart; 4] {
        &self.rotations[self.vertex_of_position[pos]]
    }

    pub fn vertex_of_position(&self, pos: usize) -> usize {
        self.vertex_of_position[pos]
    }

    /// n = 0 degenerate map of a simple closed curve.
    pub fn is_simple_curve(&self) -> bool {
        self.n == 0
    }

    pub fn euler_ok(&self) -> bool {
        if self.n == 0 {
            return self.faces.len() == 2;
        }
        self.n as i64 - 2 * self.n as i64 + self.faces.len() as i64 == 2
    }
}

struct Rotations {
    /// next dart counterclockwise, indexed by dart id
    next_ccw: Vec<Dart>,
    rotations: Vec<[Dart; 4]>,
    vertex_of_position: Vec<usize>,
}

/// Rotation system induced by the signs. At the crossing visited at
/// positions p and q = twin[p], with out_x the forward dart of arc x and
/// in_x the backward dart of arc x-1: a positive sign at p puts strand p's
/// neighborhood counterclockwise ahead of strand q's, giving ccw order
/// (out_p, in_q, in_p, out_q); a negative sign gives (out_p, out_q, in_p, in_q).
fn build_rotations(code: &SignedCrossingCode) -> Rotations {
    let len = code.len();
    let out = |p: usize| Dart { arc: p, forward: true };
    let inc = |p: usize| Dart { arc: (p + len - 1) % len, forward: false };
    let mut next_ccw = vec![Dart { arc: 0, forward: true }; 2 * len];
    let mut rotations = Vec::with_capacity(code.n());
    let mut vertex_of_position = vec![usize::MAX; len];
    for p in 0..len {
        let q = code.twin[p];
        if q < p {
            continue;
        }
        let rot = if code.sign[p] == 1 {
            [out(p), inc(q), inc(p), out(q)]
        } else {
            [out(p), out(q), inc(p), inc(q)]
        };
        let v = rotations.len();
        vertex_of_position[p] = v;
        vertex_of_position[q] = v;
        for k in 0..4 {
            next_ccw[rot[k].id()] = rot[(k + 1) % 4];
        }
        rotations.push(rot);
    }
    Rotations { next_ccw, rotations, vertex_of_position }
}

/// Orbits of the face permutation d -> ccw-successor of rev(d); the orbit of
/// d is the face to the right of d.
fn trace_faces(code: &SignedCrossingCode, rot: &Rotations) -> (Vec<Vec<Dart>>, Vec<usize>) {
    let len = code.len();
    let mut face_of = vec![usize::MAX; 2 * len];
    let mut faces = Vec::new();
    for start in 0..2 * len {
        if face_of[start] != usize::MAX {
            continue;
        }
        let fid = faces.len();
        let mut cycle = Vec::new();
        let mut d = Dart { arc: start / 2, forward: start % 2 == 0 };
        loop {
            face_of[d.id()] = fid;
            cycle.push(d);
            d = rot.next_ccw[d.rev().id()];
            if d.id() == start {
                break;
            }
        }
        faces.push(cycle);
    }
    (faces, face_of)
}

fn face_count(code: &SignedCrossingCode) -> usize {
    if code.is_empty() {
        return 2;
    }
    let rot = build_rotations(code);
    trace_faces(code, &rot).0.len()
}

/// True iff the rotation system closes up into a sphere embedding
/// (F = n + 2). Structurally broken codes are not realizable.
pub fn realizable(code: &SignedCrossingCode) -> bool {
    if code.is_empty() {
        return true;
    }
    code.structure_ok() && face_count(code) == code.n() + 2
}

/// Plane map of a realizable code, with the outer face fixed by the
/// basepoint convention.
pub fn image_graph(code: &SignedCrossingCode) -> Result<PlaneMap, CodesError> {
    if code.is_empty() {
        return Ok(PlaneMap {
            n: 0,
            rotations: vec![],
            vertex_of_position: vec![],
            faces: vec![vec![], vec![]],
            face_of_dart: vec![],
            outer_face: 0,
        });
    }
    if !realizable(code) {
        return Err(CodesError::NotRealizable);
    }
    let rot = build_rotations(code);
    let (faces, face_of_dart) = trace_faces(code, &rot);
    // The basepoint lies on the last arc; the outer face is to the right of
    // travel there, which is the face of that arc's forward dart.
    let base = Dart { arc: code.len() - 1, forward: true };
    let outer_face = face_of_dart[base.id()];
    Ok(PlaneMap {
        n: code.n(),
        rotations: rot.rotations,
        vertex_of_position: rot.vertex_of_position,
        faces,
        face_of_dart,
        outer_face,
    })
}

/// Relabel the code as read from a new basepoint on the given dart's arc,
/// traveling in the dart's direction.
fn rebase(code: &SignedCrossingCode, d: Dart) -> SignedCrossingCode {
    let len = code.len();
    let orig = |k: usize| -> usize {
        if d.forward {
            (d.arc + 1 + k) % len
        } else {
            (d.arc + len - k) % len
        }
    };
    let back = |o: usize| -> usize {
        if d.forward {
            (o + len - (d.arc + 1) % len) % len
        } else {
            (d.arc + len - o) % len
        }
    };
    let mut twin = vec![0; len];
    let mut sign = vec![0i8; len];
    for k in 0..len {
        let o = orig(k);
        twin[k] = back(code.twin[o]);
        sign[k] = code.sign[o];
    }
    SignedCrossingCode { twin, sign }
}

/// All signed crossing codes of the same plane curve: one per basepoint arc
/// and direction that keeps the outer face on the right. The input is always
/// a member of its own output.
pub fn equivalent_codes(
    code: &SignedCrossingCode,
) -> Result<BTreeSet<SignedCrossingCode>, CodesError> {
    if code.is_empty() {
        let mut s = BTreeSet::new();
        s.insert(SignedCrossingCode::empty());
        return Ok(s);
    }
    let map = image_graph(code)?;
    let mut out = BTreeSet::new();
    for arc in 0..code.len() {
        for forward in [true, false] {
            let d = Dart { arc, forward };
            if map.face_of(d) == map.outer_face() {
                out.insert(rebase(code, d));
            }
        }
    }
    debug_assert!(out.contains(code));
    Ok(out)
}

/// True iff the two codes describe isotopic plane curves, i.e. b is among
/// a's codes under re-basepointing. Symmetric in its arguments.
pub fn codes_isotopic(
    a: &SignedCrossingCode,
    b: &SignedCrossingCode,
) -> Result<bool, CodesError> {
    if !realizable(a) || !realizable(b) {
        return Err(CodesError::NotRealizable);
    }
    if a.n() != b.n() {
        return Ok(false);
    }
    if a.is_empty() {
        return Ok(true);
    }
    Ok(equivalent_codes(a)?.contains(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fig8() -> SignedCrossingCode {
        SignedCrossingCode::from_one_based(vec![2, 1], vec![-1, 1]).unwrap()
    }

    fn curl() -> SignedCrossingCode {
        SignedCrossingCode::from_one_based(vec![2, 1], vec![1, -1]).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&fig8()).is_valid());
        let fixed = SignedCrossingCode::from_one_based(vec![1, 2], vec![1, -1]).unwrap();
        let r = validate(&fixed);
        assert!(!r.fixed_point_free);
        assert!(!r.is_valid());
        let parity = SignedCrossingCode::from_one_based(vec![3, 4, 1, 2], vec![1, 1, -1, -1]).unwrap();
        let r = validate(&parity);
        assert!(!r.parity);
    }

    #[test]
    fn fig8_has_three_faces() {
        assert!(realizable(&fig8()));
        let map = image_graph(&fig8()).unwrap();
        assert_eq!(map.face_count(), 3);
        assert_eq!(map.vertex_count(), 1);
        assert_eq!(map.edge_count(), 2);
        assert!(map.euler_ok());
        // The outer face of the figure-eight is the bigon bounded by both arcs.
        let outer = &map.faces()[map.outer_face()];
        assert_eq!(outer.len(), 2);
    }

    #[test]
    fn empty_code_is_simple() {
        let empty = SignedCrossingCode::empty();
        assert!(realizable(&empty));
        let map = image_graph(&empty).unwrap();
        assert!(map.is_simple_curve());
        assert_eq!(map.face_count(), 2);
        let eq = equivalent_codes(&empty).unwrap();
        assert_eq!(eq.len(), 1);
    }

    #[test]
    fn trefoil_projection_is_realizable() {
        // Standard trefoil shadow: Gauss sequence 1 2 3 1 2 3 with
        // alternating signs. Found by brute-force face tracing over all sign
        // patterns; the other realizable pattern is the mirror.
        let code =
            SignedCrossingCode::from_one_based(vec![4, 5, 6, 1, 2, 3], vec![-1, 1, -1, 1, -1, 1])
                .unwrap();
        assert!(validate(&code).is_valid());
        assert!(realizable(&code));
        let map = image_graph(&code).unwrap();
        assert_eq!(map.face_count(), 5);
        // Non-realizable sign pattern on the same twin vector.
        let bad =
            SignedCrossingCode::from_one_based(vec![4, 5, 6, 1, 2, 3], vec![1, 1, 1, -1, -1, -1])
                .unwrap();
        assert!(!realizable(&bad));
    }

    #[test]
    fn double_loop_curve_has_exactly_three_codes() {
        // Two nested basepoint choices plus a reversal: the smallest curve
        // with exactly three valid signed crossing codes.
        let code =
            SignedCrossingCode::from_one_based(vec![2, 1, 4, 3], vec![1, -1, -1, 1]).unwrap();
        assert!(validate(&code).is_valid());
        assert_eq!(equivalent_codes(&code).unwrap().len(), 3);
    }

    #[test]
    fn fig8_equivalent_codes_are_closed() {
        let eq = equivalent_codes(&fig8()).unwrap();
        assert!(eq.contains(&fig8()));
        assert!(eq.len() <= 4 * fig8().n());
        for c in &eq {
            assert_eq!(equivalent_codes(c).unwrap(), eq);
        }
    }

    #[test]
    fn fig8_is_not_isotopic_to_curl() {
        // The all-signs-flipped vector is the nested-loop curve, a different
        // isotopy class.
        assert!(realizable(&curl()));
        assert!(!codes_isotopic(&fig8(), &curl()).unwrap());
        assert!(codes_isotopic(&fig8(), &fig8()).unwrap());
        assert!(codes_isotopic(&curl(), &curl()).unwrap());
    }

    #[test]
    fn different_n_is_never_isotopic() {
        assert!(!codes_isotopic(&fig8(), &SignedCrossingCode::empty()).unwrap());
    }

    #[test]
    fn rotation_is_passage_symmetric() {
        // Building the rotation from either passage of the pair must give the
        // same cyclic order; exercised by validating both 1-crossing codes.
        for code in [fig8(), curl()] {
            let map = image_graph(&code).unwrap();
            let r0 = map.rotation_at(0);
            let r1 = map.rotation_at(1);
            assert_eq!(r0, r1);
        }
    }

    #[test]
    fn isotopy_is_symmetric_on_small_codes() {
        let codes = [fig8(), curl()];
        for a in &codes {
            for b in &codes {
                assert_eq!(
                    codes_isotopic(a, b).unwrap(),
                    codes_isotopic(b, a).unwrap()
                );
            }
        }
    }
}
