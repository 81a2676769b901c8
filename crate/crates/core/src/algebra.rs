//! Finite-dimensional unital associative algebras given by structure constants.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::scalars::{Assignment, ParamScalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("associativity fails on (e{i}*e{j})*e{k} vs e{i}*(e{j}*e{k}), coordinate {coord} differs by {defect}")]
    Associativity {
        i: usize,
        j: usize,
        k: usize,
        coord: usize,
        defect: ParamScalar,
    },
    #[error("unit law fails: {side} product of the unit with e{index} is not e{index}")]
    Unit { index: usize, side: Side },
    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A unital associative algebra with basis `e_0 .. e_{n-1}` and
/// `e_i * e_j = sum_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra {
    dim: usize,
    structure: Vec<ParamScalar>,
    unit: Vec<ParamScalar>,
    labels: Vec<String>,
}

impl Algebra {
    /// Validates associativity and the unit law eagerly.
    pub fn new(
        dim: usize,
        structure: Vec<Vec<Vec<ParamScalar>>>,
        unit: Vec<ParamScalar>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::Shape("dimension must be at least 1".into()));
        }
        if structure.len() != dim {
            return Err(AlgebraError::Shape(format!("structure has {} rows, expected {dim}", structure.len())));
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for (i, row) in structure.into_iter().enumerate() {
            if row.len() != dim {
                return Err(AlgebraError::Shape(format!("structure[{i}] has {} entries, expected {dim}", row.len())));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != dim {
                    return Err(AlgebraError::Shape(format!(
                        "structure[{i}][{j}] has {} entries, expected {dim}",
                        v.len()
                    )));
                }
                flat.extend(v);
            }
        }
        if unit.len() != dim {
            return Err(AlgebraError::Shape(format!("unit has {} entries, expected {dim}", unit.len())));
        }
        let labels = match labels {
            Some(l) if l.len() != dim => {
                return Err(AlgebraError::Shape(format!("{} labels for dimension {dim}", l.len())))
            }
            Some(l) => l,
            None => (0..dim).map(|i| format!("e{i}")).collect(),
        };
        let a = Algebra {
            dim,
            structure: flat,
            unit,
            labels,
        };
        a.check_unit()?;
        a.check_associativity()?;
        Ok(a)
    }

    /// `k[X]/(X^2 - m X - n)` with basis `{1, x}`.
    pub fn quadratic_quotient(m: ParamScalar, n: ParamScalar) -> Self {
        let z = ParamScalar::zero;
        let o = ParamScalar::one;
        Algebra {
            dim: 2,
            structure: vec![o(), z(), z(), o(), z(), o(), n, m],
            unit: vec![o(), z()],
            labels: vec!["1".into(), "x".into()],
        }
    }

    /// Upper-triangular 2x2 matrices with basis `{1, E11, E12}`; not commutative.
    pub fn upper_triangular() -> Self {
        let z = ParamScalar::zero;
        let o = ParamScalar::one;
        // e1 = E11, e2 = E12: e1e1 = e1, e1e2 = e2, e2e1 = 0, e2e2 = 0.
        let structure = vec![
            vec![vec![o(), z(), z()], vec![z(), o(), z()], vec![z(), z(), o()]],
            vec![vec![z(), o(), z()], vec![z(), o(), z()], vec![z(), z(), o()]],
            vec![vec![z(), z(), o()], vec![z(), z(), z()], vec![z(), z(), z()]],
        ];
        Algebra::new(
            3,
            structure,
            vec![o(), z(), z()],
            Some(vec!["1".into(), "E11".into(), "E12".into()]),
        )
        .expect("upper-triangular matrices form an algebra")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[ParamScalar] {
        &self.unit
    }

    /// Structure constant `c[i][j][k]`.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &ParamScalar {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[ParamScalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.structure[start..start + self.dim]
    }

    pub fn structure_table(&self) -> Vec<Vec<Vec<ParamScalar>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product(i, j).to_vec()).collect())
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.structure
            .iter()
            .chain(&self.unit)
            .flat_map(ParamScalar::variables)
            .collect()
    }

    /// Bilinear product of coordinate vectors.
    pub fn mul(&self, a: &[ParamScalar], b: &[ParamScalar]) -> Result<Vec<ParamScalar>, AlgebraError> {
        for v in [a, b] {
            if v.len() != self.dim {
                return Err(AlgebraError::LengthMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        let mut out = vec![ParamScalar::zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&xy * c);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<ParamScalar> {
        let mut v = vec![ParamScalar::zero(); self.dim];
        v[i] = ParamScalar::one();
        v
    }

    /// Substitutes values for indeterminates in the structure constants.
    /// Identities that hold symbolically keep holding, so no re-validation.
    pub fn substitute(&self, point: &Assignment) -> Result<Algebra, AlgebraError> {
        let sub = |v: &Vec<ParamScalar>| -> Result<Vec<ParamScalar>, ScalarError> {
            v.iter().map(|s| s.substitute(point)).collect()
        };
        Ok(Algebra {
            dim: self.dim,
            structure: sub(&self.structure)?,
            unit: sub(&self.unit)?,
            labels: self.labels.clone(),
        })
    }

    /// Replaces bound indeterminates by scalar expressions. Symbolic
    /// identities survive any specialization, so no re-validation.
    pub fn bind(&self, bindings: &BTreeMap<String, ParamScalar>) -> Result<Algebra, AlgebraError> {
        let sub = |v: &Vec<ParamScalar>| -> Result<Vec<ParamScalar>, ScalarError> {
            v.iter().map(|s| s.compose(bindings)).collect()
        };
        Ok(Algebra {
            dim: self.dim,
            structure: sub(&self.structure)?,
            unit: sub(&self.unit)?,
            labels: self.labels.clone(),
        })
    }

    fn check_unit(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e)? != e {
                return Err(AlgebraError::Unit { index: i, side: Side::Left });
            }
            if self.mul(&e, &self.unit)? != e {
                return Err(AlgebraError::Unit { index: i, side: Side::Right });
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<(), AlgebraError> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let jk = self.basis_product(j, k);
                    for m in 0..n {
                        let mut defect = ParamScalar::zero();
                        for l in 0..n {
                            defect += &(&ij[l] * self.coeff(l, k, m));
                            defect -= &(&jk[l] * self.coeff(i, l, m));
                        }
                        if !defect.is_zero() {
                            return Err(AlgebraError::Associativity { i, j, k, coord: m, defect });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
