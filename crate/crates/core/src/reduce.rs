//! placeholder
use crate::geom::Rational;
use thiserror::Error;
#[derive(Debug, Error)]
pub enum ReduceError {
    #[error("bad arrangement: {0}")]
    BadArrangement(String),
}
#[derive(Clone, Debug)]
pub struct WiringDiagram { n: usize, swaps: Vec<usize> }
impl WiringDiagram {
    pub fn new(n: usize, swaps: Vec<usize>) -> Self { WiringDiagram { n, swaps } }
    pub fn n(&self) -> usize { self.n }
    pub fn swaps(&self) -> &[usize] { &self.swaps }
}
#[derive(Clone, Debug)]
pub struct LineArrangement { lines: Vec<(Rational, Rational)> }
impl LineArrangement {
    pub fn new(lines: Vec<(Rational, Rational)>) -> Result<Self, ReduceError> { Ok(LineArrangement { lines }) }
    pub fn lines(&self) -> &[(Rational, Rational)] { &self.lines }
}
