//! The CSS code object: a pair of parity-check matrices with the
//! orthogonality invariant `HX * HZ^T = 0` enforced at construction.

use crate::error::{Error, Result};
use crate::f2::BinMatrix;
use serde::Serialize;

/// A binary CSS code given by X- and Z-check matrices over the same qubits.
///
/// `C_Z = ker HX` carries the Z-codewords and `C_X = ker HZ` the
/// X-codewords; rows of the opposing matrix are the degenerate directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssCode {
    hx: BinMatrix,
    hz: BinMatrix,
}

impl CssCode {
    /// Build a code, verifying the orthogonality condition. On failure the
    /// first offending row pair is reported.
    pub fn new(hx: BinMatrix, hz: BinMatrix) -> Result<Self> {
        if hx.cols() != hz.cols() {
            return Err(Error::Dimension {
                context: "CSS qubit count",
                expected: hx.cols(),
                found: hz.cols(),
            });
        }
        let product = hx.mul(&hz.transpose());
        if !product.is_zero() {
            for i in 0..product.rows() {
                if let Some(j) = product.row_ones(i).next() {
                    return Err(Error::Orthogonality { x_row: i, z_row: j });
                }
            }
        }
        Ok(CssCode { hx, hz })
    }

    pub fn hx(&self) -> &BinMatrix {
        &self.hx
    }

    pub fn hz(&self) -> &BinMatrix {
        &self.hz
    }

    /// Code length n (number of qubits).
    pub fn len(&self) -> usize {
        self.hx.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Exact dimension `k = n - rk HX - rk HZ`.
    pub fn dimension(&self) -> usize {
        self.len() - self.hx.rank() - self.hz.rank()
    }

    /// The code with the roles of HX and HZ exchanged; Z- and X-distances
    /// swap accordingly.
    pub fn swap(&self) -> CssCode {
        CssCode {
            hx: self.hz.clone(),
            hz: self.hx.clone(),
        }
    }

    /// Sparseness limit: the largest node degree over the Tanner graphs of
    /// HX and HZ taken separately, i.e. the maximum row or column weight of
    /// either matrix.
    pub fn limitedness(&self) -> u64 {
        self.hx
            .max_row_weight()
            .max(self.hx.max_col_weight())
            .max(self.hz.max_row_weight())
            .max(self.hz.max_col_weight())
    }

    /// Largest total check degree of a single qubit: its column weight in
    /// HX plus its column weight in HZ.
    pub fn max_qubit_degree(&self) -> u64 {
        (0..self.len())
            .map(|j| self.hx.col_weight(j) + self.hz.col_weight(j))
            .max()
            .unwrap_or(0)
    }
}

/// How a reported distance value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceKind {
    Exact,
    UpperBound,
    Unknown,
}

/// A distance value; `Infinity` is used for codes with no codewords
/// outside the degenerate space (k = 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Finite(u64),
    Infinity,
}

impl Distance {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(*d),
            Distance::Infinity => None,
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => serializer.serialize_u64(*d),
            Distance::Infinity => serializer.serialize_str("infinity"),
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{}", d),
            Distance::Infinity => write!(f, "infinity"),
        }
    }
}

/// Summary parameters of a code, as emitted in JSON reports.
#[derive(Debug, Clone, Serialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dz: Option<Distance>,
    pub dz_kind: DistanceKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dx: Option<Distance>,
    pub dx_kind: DistanceKind,
    pub w: u64,
}

impl CodeParams {
    /// Parameters with both distances unknown.
    pub fn basic(code: &CssCode) -> Self {
        CodeParams {
            n: code.len(),
            k: code.dimension(),
            dz: None,
            dz_kind: DistanceKind::Unknown,
            dx: None,
            dx_kind: DistanceKind::Unknown,
            w: code.limitedness(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_self_orthogonal_repetition_pair() {
        let hx = BinMatrix::from_dense(&[&[1, 1]]);
        let hz = BinMatrix::from_dense(&[&[1, 1]]);
        let code = CssCode::new(hx, hz).unwrap();
        assert_eq!(code.len(), 2);
        assert_eq!(code.dimension(), 0);
        assert_eq!(code.limitedness(), 2);
    }

    #[test]
    fn rejects_non_orthogonal_pair() {
        let hx = BinMatrix::from_dense(&[&[1, 0]]);
        let hz = BinMatrix::from_dense(&[&[1, 0]]);
        match CssCode::new(hx, hz) {
            Err(Error::Orthogonality { x_row: 0, z_row: 0 }) => {}
            other => panic!("expected orthogonality violation, got {:?}", other),
        }
    }

    #[test]
    fn rejects_column_mismatch() {
        let hx = BinMatrix::from_dense(&[&[1, 1]]);
        let hz = BinMatrix::from_dense(&[&[1, 1, 0]]);
        assert!(matches!(CssCode::new(hx, hz), Err(Error::Dimension { .. })));
    }

    #[test]
    fn swap_is_involutive_and_preserves_dimension() {
        let hx = BinMatrix::from_dense(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let hz = BinMatrix::from_dense(&[&[1, 1, 1, 1]]);
        let code = CssCode::new(hx, hz).unwrap();
        let swapped = code.swap();
        assert_eq!(swapped.swap(), code);
        assert_eq!(swapped.dimension(), code.dimension());
    }

    #[test]
    fn distance_serializes_as_number_or_string() {
        assert_eq!(serde_json::to_string(&Distance::Finite(3)).unwrap(), "3");
        assert_eq!(
            serde_json::to_string(&Distance::Infinity).unwrap(),
            "\"infinity\""
        );
    }
}
