//! JSON documents for algebras, superalgebras, operators and reports.
//!
//! Every document may carry a `"schema"` tag; when present it must match the
//! tag written by this crate. Scalars are strings in the scalar grammar.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::lie_super::{LieSuperalgebra, SuperError};
use crate::linalg::Matrix;
use crate::scalars::ParamScalar;
use crate::tensor::{Operator2, TensorError};
use crate::verify::{Status, VerificationReport};

pub const ALGEBRA_SCHEMA: &str = "ybx.algebra/1";
pub const SUPERALGEBRA_SCHEMA: &str = "ybx.superalgebra/1";
pub const OPERATOR_SCHEMA: &str = "ybx.operator/1";
pub const REPORT_SCHEMA: &str = "ybx.report/1";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema mismatch: expected `{expected}`, found `{found}`")]
    Schema { expected: &'static str, found: String },
    #[error("invalid algebra: {0}")]
    Algebra(#[from] AlgebraError),
    #[error("invalid superalgebra: {0}")]
    Super(#[from] SuperError),
    #[error("invalid operator: {0}")]
    Operator(#[from] TensorError),
    #[error("operator matrix is not square or its side is not a perfect square")]
    OperatorShape,
}

fn check_schema(found: &Option<String>, expected: &'static str) -> Result<(), IoError> {
    match found {
        Some(s) if s != expected => Err(IoError::Schema {
            expected,
            found: s.clone(),
        }),
        _ => Ok(()),
    }
}

pub fn read_text(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    std::fs::write(path, text).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub dim: usize,
    pub unit: Vec<ParamScalar>,
    #[serde(default, alias = "basis_labels", skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// `structure[i][j][k]` is the coefficient of `e_k` in `e_i * e_j`.
    pub structure: Vec<Vec<Vec<ParamScalar>>>,
}

impl AlgebraDoc {
    pub fn from_algebra(a: &Algebra) -> Self {
        AlgebraDoc {
            schema: Some(ALGEBRA_SCHEMA.into()),
            dim: a.dim(),
            unit: a.unit().to_vec(),
            labels: Some(a.labels().to_vec()),
            structure: a.structure_table(),
        }
    }

    /// Validates the table; the error carries the failing witness.
    pub fn into_algebra(self) -> Result<Algebra, IoError> {
        check_schema(&self.schema, ALGEBRA_SCHEMA)?;
        Ok(Algebra::new(self.dim, self.structure, self.unit, self.labels)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuperalgebraDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub dim: usize,
    /// Parity (0 or 1) of each basis vector.
    pub degree: Vec<u8>,
    #[serde(default, alias = "basis_labels", skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// `structure[i][j][k]` is the coefficient of `e_k` in `[e_i, e_j]`.
    #[serde(alias = "bracket")]
    pub structure: Vec<Vec<Vec<ParamScalar>>>,
}

impl SuperalgebraDoc {
    pub fn from_superalgebra(l: &LieSuperalgebra) -> Self {
        SuperalgebraDoc {
            schema: Some(SUPERALGEBRA_SCHEMA.into()),
            dim: l.dim(),
            degree: l.degrees().to_vec(),
            labels: Some(l.labels().to_vec()),
            structure: l.bracket_table(),
        }
    }

    pub fn into_superalgebra(self) -> Result<LieSuperalgebra, IoError> {
        check_schema(&self.schema, SUPERALGEBRA_SCHEMA)?;
        Ok(LieSuperalgebra::new(self.dim, self.degree, self.structure, self.labels)?)
    }
}

/// An operator on `V⊗V` as its `n²×n²` matrix in row-major nested arrays,
/// column `c` holding the image of basis tensor `c`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    /// `dim V`; inferred from the matrix size when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub matrix: Vec<Vec<ParamScalar>>,
}

impl OperatorDoc {
    pub fn from_operator(op: &Operator2) -> Self {
        OperatorDoc {
            schema: Some(OPERATOR_SCHEMA.into()),
            dim: Some(op.dim()),
            matrix: op.matrix().to_rows(),
        }
    }

    pub fn into_operator(self) -> Result<Operator2, IoError> {
        check_schema(&self.schema, OPERATOR_SCHEMA)?;
        let side = self.matrix.len();
        let dim = match self.dim {
            Some(d) => d,
            None => (0..=side).find(|d| d * d == side).ok_or(IoError::OperatorShape)?,
        };
        let m = Matrix::from_rows(self.matrix).ok_or(IoError::OperatorShape)?;
        Ok(Operator2::new(dim, m)?)
    }
}

pub fn algebra_from_json(text: &str) -> Result<Algebra, IoError> {
    serde_json::from_str::<AlgebraDoc>(text)?.into_algebra()
}

pub fn superalgebra_from_json(text: &str) -> Result<LieSuperalgebra, IoError> {
    serde_json::from_str::<SuperalgebraDoc>(text)?.into_superalgebra()
}

pub fn operator_from_json(text: &str) -> Result<Operator2, IoError> {
    serde_json::from_str::<OperatorDoc>(text)?.into_operator()
}

pub fn load_algebra(path: &Path) -> Result<Algebra, IoError> {
    algebra_from_json(&read_text(path)?)
}

pub fn load_superalgebra(path: &Path) -> Result<LieSuperalgebra, IoError> {
    superalgebra_from_json(&read_text(path)?)
}

pub fn load_operator(path: &Path) -> Result<Operator2, IoError> {
    operator_from_json(&read_text(path)?)
}

fn pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn algebra_to_json(a: &Algebra) -> String {
    pretty(&AlgebraDoc::from_algebra(a))
}

pub fn superalgebra_to_json(l: &LieSuperalgebra) -> String {
    pretty(&SuperalgebraDoc::from_superalgebra(l))
}

pub fn operator_to_json(op: &Operator2) -> String {
    pretty(&OperatorDoc::from_operator(op))
}

#[derive(Serialize)]
struct ReportBundle<'a> {
    schema: &'static str,
    status: Status,
    reports: &'a [VerificationReport],
}

/// Overall status: pass iff every report passes (vacuously for none).
pub fn overall_status(reports: &[VerificationReport]) -> Status {
    if reports.iter().all(VerificationReport::passed) {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// A report bundle as JSON. Contains no timing data, so equal inputs give
/// byte-identical output.
pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    pretty(&ReportBundle {
        schema: REPORT_SCHEMA,
        status: overall_status(reports),
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::twist;

    #[test]
    fn algebra_round_trip() {
        let a = Algebra::quadratic_quotient(ParamScalar::var("m"), ParamScalar::var("n"));
        let back = algebra_from_json(&algebra_to_json(&a)).unwrap();
        assert_eq!(a, back);
    }

    #[test]
    fn superalgebra_round_trip_and_bracket_alias() {
        let l = LieSuperalgebra::gl11();
        let js = superalgebra_to_json(&l);
        assert_eq!(superalgebra_from_json(&js).unwrap(), l);
        let aliased = js.replace("\"structure\"", "\"bracket\"");
        assert_eq!(superalgebra_from_json(&aliased).unwrap(), l);
    }

    #[test]
    fn operator_dim_inferred() {
        let js = r#"{"matrix": [["1","0","0","0"],["0","0","1","0"],["0","1","0","0"],["0","0","0","1"]]}"#;
        assert_eq!(operator_from_json(js).unwrap(), twist(2));
    }

    #[test]
    fn wrong_schema_rejected() {
        let js = r#"{"schema": "ybx.operator/9", "matrix": [["1"]]}"#;
        assert!(matches!(operator_from_json(js), Err(IoError::Schema { .. })));
    }

    #[test]
    fn non_associative_file_rejected() {
        let mut doc = AlgebraDoc::from_algebra(&Algebra::upper_triangular());
        doc.structure[2][2][0] = ParamScalar::one();
        assert!(matches!(
            doc.into_algebra(),
            Err(IoError::Algebra(AlgebraError::Associativity { .. }))
        ));
    }
}
