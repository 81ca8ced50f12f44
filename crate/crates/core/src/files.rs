//! JSON file formats shared by the library, the CLI, and the tests.
//!
//! Rationals travel as decimal strings `"p/q"` or `"p"`. Curve files carry
//! 1-based twin indices. Canonical output is compact serde_json with fields
//! in declaration order, so identical values serialize to identical bytes.

use crate::codes::SignedCrossingCode;
use crate::geom::{parse_rational, Point, Rational};
use crate::polyscan::Polygon;
use crate::reduce::{LineArrangement, WiringDiagram};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
}

fn bad<E: std::fmt::Display>(e: E) -> FileError {
    FileError::Invalid(e.to_string())
}

/// Curve file: `{"n": 1, "twin": [2, 1], "sign": [-1, 1]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct CurveFile {
    pub n: usize,
    pub twin: Vec<usize>,
    pub sign: Vec<i8>,
}

impl CurveFile {
    pub fn from_code(code: &SignedCrossingCode) -> Self {
        CurveFile { n: code.n(), twin: code.twin_one_based(), sign: code.signs().to_vec() }
    }

    pub fn into_code(self) -> Result<SignedCrossingCode, FileError> {
        if self.twin.len() != 2 * self.n {
            return Err(FileError::Invalid(format!(
                "n = {} but twin has {} entries",
                self.n,
                self.twin.len()
            )));
        }
        SignedCrossingCode::from_one_based(self.twin, self.sign).map_err(bad)
    }
}

pub fn code_to_json(code: &SignedCrossingCode) -> String {
    serde_json::to_string(&CurveFile::from_code(code)).expect("serializable")
}

pub fn code_from_json(text: &str) -> Result<SignedCrossingCode, FileError> {
    serde_json::from_str::<CurveFile>(text)?.into_code()
}

/// Polygon file: `{"vertices": [["p/q", "r/s"], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct PolygonFile {
    pub vertices: Vec<[String; 2]>,
}

impl PolygonFile {
    pub fn from_polygon(poly: &Polygon) -> Self {
        PolygonFile {
            vertices: poly
                .vertices()
                .iter()
                .map(|p| [p.x.to_string(), p.y.to_string()])
                .collect(),
        }
    }

    pub fn into_polygon(self) -> Result<Polygon, FileError> {
        let mut pts = Vec::with_capacity(self.vertices.len());
        for [x, y] in &self.vertices {
            pts.push(Point::new(
                parse_rational(x).map_err(bad)?,
                parse_rational(y).map_err(bad)?,
            ));
        }
        Polygon::new(pts).map_err(bad)
    }
}

pub fn polygon_to_json(poly: &Polygon) -> String {
    serde_json::to_string(&PolygonFile::from_polygon(poly)).expect("serializable")
}

pub fn polygon_from_json(text: &str) -> Result<Polygon, FileError> {
    serde_json::from_str::<PolygonFile>(text)?.into_polygon()
}

/// Wiring diagram file: `{"n": 3, "swaps": [1, 2, 1]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct WiringFile {
    pub n: usize,
    pub swaps: Vec<usize>,
}

impl WiringFile {
    pub fn from_wiring(w: &WiringDiagram) -> Self {
        WiringFile { n: w.n(), swaps: w.swaps().to_vec() }
    }

    pub fn into_wiring(self) -> WiringDiagram {
        WiringDiagram::new(self.n, self.swaps)
    }
}

pub fn wiring_to_json(w: &WiringDiagram) -> String {
    serde_json::to_string(&WiringFile::from_wiring(w)).expect("serializable")
}

pub fn wiring_from_json(text: &str) -> Result<WiringDiagram, FileError> {
    Ok(serde_json::from_str::<WiringFile>(text)?.into_wiring())
}

/// Line arrangement file: `{"lines": [["slope", "intercept"], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct LinesFile {
    pub lines: Vec<[String; 2]>,
}

impl LinesFile {
    pub fn from_arrangement(a: &LineArrangement) -> Self {
        LinesFile {
            lines: a
                .lines()
                .iter()
                .map(|(s, b)| [s.to_string(), b.to_string()])
                .collect(),
        }
    }

    pub fn into_arrangement(self) -> Result<LineArrangement, FileError> {
        let mut lines: Vec<(Rational, Rational)> = Vec::with_capacity(self.lines.len());
        for [s, b] in &self.lines {
            lines.push((parse_rational(s).map_err(bad)?, parse_rational(b).map_err(bad)?));
        }
        LineArrangement::new(lines).map_err(bad)
    }
}

pub fn lines_to_json(a: &LineArrangement) -> String {
    serde_json::to_string(&LinesFile::from_arrangement(a)).expect("serializable")
}

pub fn lines_from_json(text: &str) -> Result<LineArrangement, FileError> {
    serde_json::from_str::<LinesFile>(text)?.into_arrangement()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_json_is_byte_stable() {
        let code = SignedCrossingCode::from_one_based(vec![2, 1], vec![-1, 1]).unwrap();
        let json = code_to_json(&code);
        assert_eq!(json, r#"{"n":1,"twin":[2,1],"sign":[-1,1]}"#);
        assert_eq!(code_from_json(&json).unwrap(), code);
    }

    #[test]
    fn polygon_json_roundtrip() {
        let p = crate::polyscan::Polygon::from_ints(&[(0, 0), (3, -1), (1, 3), (4, 1)]).unwrap();
        let json = polygon_to_json(&p);
        assert_eq!(json, r#"{"vertices":[["0","0"],["3","-1"],["1","3"],["4","1"]]}"#);
        assert_eq!(polygon_from_json(&json).unwrap(), p);
    }

    #[test]
    fn rejects_inconsistent_curve_file() {
        assert!(code_from_json(r#"{"n":2,"twin":[2,1],"sign":[-1,1]}"#).is_err());
        assert!(code_from_json(r#"{"n":1,"twin":[3,1],"sign":[-1,1]}"#).is_err());
    }
}
