//! Finite-dimensional Lie superalgebras with a homogeneous basis.

use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalars::ParamScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuperError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("degree of e{index} must be 0 or 1, got {value}")]
    BadDegree { index: usize, value: u8 },
    #[error("[e{i}, e{j}] has a component along e{k} of the wrong parity")]
    Grading { i: usize, j: usize, k: usize },
    #[error("super antisymmetry fails for (e{i}, e{j}) at coordinate {k}")]
    Antisymmetry { i: usize, j: usize, k: usize },
    #[error("super Jacobi identity fails for (e{i}, e{j}, e{k}) at coordinate {coord}: {defect}")]
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        coord: usize,
        defect: ParamScalar,
    },
    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
}

/// `[e_i, e_j] = sum_k b[i][j][k] e_k` on a Z/2-graded basis.
#[derive(Debug, Clone, PartialEq)]
pub struct LieSuperalgebra {
    dim: usize,
    degree: Vec<u8>,
    bracket: Vec<ParamScalar>,
    labels: Vec<String>,
}

fn sign(parity: u8) -> ParamScalar {
    if parity % 2 == 0 {
        ParamScalar::one()
    } else {
        ParamScalar::from_int(-1)
    }
}

impl LieSuperalgebra {
    /// Validates grading, super antisymmetry and the super Jacobi identity,
    /// in that order, reporting the first failing index tuple.
    pub fn new(
        dim: usize,
        degree: Vec<u8>,
        bracket: Vec<Vec<Vec<ParamScalar>>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, SuperError> {
        if dim == 0 {
            return Err(SuperError::Shape("dimension must be at least 1".into()));
        }
        if degree.len() != dim {
            return Err(SuperError::Shape(format!("{} degrees for dimension {dim}", degree.len())));
        }
        if let Some((index, &value)) = degree.iter().enumerate().find(|(_, d)| **d > 1) {
            return Err(SuperError::BadDegree { index, value });
        }
        if bracket.len() != dim
            || bracket.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim))
        {
            return Err(SuperError::Shape(format!("bracket table must be {dim}x{dim}x{dim}")));
        }
        let labels = match labels {
            Some(l) if l.len() != dim => {
                return Err(SuperError::Shape(format!("{} labels for dimension {dim}", l.len())))
            }
            Some(l) => l,
            None => (0..dim).map(|i| format!("e{i}")).collect(),
        };
        let l = LieSuperalgebra {
            dim,
            degree,
            bracket: bracket.into_iter().flatten().flatten().collect(),
            labels,
        };
        l.check_grading()?;
        l.check_antisymmetry()?;
        l.check_jacobi()?;
        Ok(l)
    }

    /// All brackets zero.
    pub fn abelian(degree: Vec<u8>) -> Result<Self, SuperError> {
        let n = degree.len();
        let zero = vec![vec![vec![ParamScalar::zero(); n]; n]; n];
        LieSuperalgebra::new(n, degree, zero, None)
    }

    /// gl(1|1): basis `E11, E22` (even) and `E12, E21` (odd), bracket the
    /// super-commutator of 2x2 matrix units with row/column parities (0, 1).
    pub fn gl11() -> Self {
        let units = [(0usize, 0usize), (1, 1), (0, 1), (1, 0)];
        let parity = |(a, b): (usize, usize)| ((a + b) % 2) as u8;
        let index = |ab: (usize, usize)| units.iter().position(|u| *u == ab).expect("matrix unit");
        let mut table = vec![vec![vec![ParamScalar::zero(); 4]; 4]; 4];
        for (i, &x) in units.iter().enumerate() {
            for (j, &y) in units.iter().enumerate() {
                // E_ab E_cd = delta_bc E_ad
                if x.1 == y.0 {
                    table[i][j][index((x.0, y.1))] += &ParamScalar::one();
                }
                if y.1 == x.0 {
                    let s = sign(parity(x) * parity(y));
                    table[i][j][index((y.0, x.1))] -= &s;
                }
            }
        }
        LieSuperalgebra::new(
            4,
            units.iter().map(|&u| parity(u)).collect(),
            table,
            Some(vec!["E11".into(), "E22".into(), "E12".into(), "E21".into()]),
        )
        .expect("gl(1|1) is a Lie superalgebra")
    }

    /// Heisenberg-type superalgebra: `c` even and central, `a`, `b` odd with
    /// `[a, b] = [b, a] = c`.
    pub fn heisenberg() -> Self {
        let z = ParamScalar::zero;
        let mut table = vec![vec![vec![z(); 3]; 3]; 3];
        table[1][2][0] = ParamScalar::one();
        table[2][1][0] = ParamScalar::one();
        LieSuperalgebra::new(3, vec![0, 1, 1], table, Some(vec!["c".into(), "a".into(), "b".into()]))
            .expect("Heisenberg superalgebra is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degrees(&self) -> &[u8] {
        &self.degree
    }

    pub fn degree(&self, i: usize) -> u8 {
        self.degree[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &ParamScalar {
        &self.bracket[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[ParamScalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.bracket[start..start + self.dim]
    }

    pub fn bracket_table(&self) -> Vec<Vec<Vec<ParamScalar>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_bracket(i, j).to_vec()).collect())
            .collect()
    }

    /// Bilinear extension of the bracket table.
    pub fn bracket(&self, x: &[ParamScalar], y: &[ParamScalar]) -> Result<Vec<ParamScalar>, SuperError> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(SuperError::LengthMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        let mut out = vec![ParamScalar::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&ab * c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// True when `z` has support only on even basis vectors.
    pub fn is_even(&self, z: &[ParamScalar]) -> bool {
        z.iter().zip(&self.degree).all(|(c, d)| *d == 0 || c.is_zero())
    }

    /// True when `[z, e_i] = 0` for every basis vector.
    pub fn is_central(&self, z: &[ParamScalar]) -> bool {
        (0..self.dim).all(|i| {
            let e = self.basis_vector(i);
            self.bracket(z, &e)
                .map(|v| v.iter().all(ParamScalar::is_zero))
                .unwrap_or(false)
        })
    }

    pub fn basis_vector(&self, i: usize) -> Vec<ParamScalar> {
        let mut v = vec![ParamScalar::zero(); self.dim];
        v[i] = ParamScalar::one();
        v
    }

    /// Basis of the even part of the center, as the nullspace of the stacked
    /// adjoint maps `z -> [z, e_j]` restricted to the even coordinates.
    pub fn even_center(&self) -> Vec<Vec<ParamScalar>> {
        let even: Vec<usize> = (0..self.dim).filter(|&i| self.degree[i] == 0).collect();
        if even.is_empty() {
            return Vec::new();
        }
        let n = self.dim;
        let system = Matrix::from_fn(n * n, even.len(), |row, col| {
            let (j, k) = (row / n, row % n);
            self.coeff(even[col], j, k).clone()
        });
        system
            .nullspace()
            .into_iter()
            .map(|v| {
                let mut z = vec![ParamScalar::zero(); n];
                for (c, &i) in even.iter().enumerate() {
                    z[i] = v[c].clone();
                }
                z
            })
            .collect()
    }

    fn check_grading(&self) -> Result<(), SuperError> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let want = (self.degree[i] + self.degree[j]) % 2;
                    if self.degree[k] != want && !self.coeff(i, j, k).is_zero() {
                        return Err(SuperError::Grading { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_antisymmetry(&self) -> Result<(), SuperError> {
        for i in 0..self.dim {
            for j in i..self.dim {
                let s = sign(self.degree[i] * self.degree[j]);
                for k in 0..self.dim {
                    let lhs = self.coeff(i, j, k);
                    let rhs = -&(&s * self.coeff(j, i, k));
                    if *lhs != rhs {
                        return Err(SuperError::Antisymmetry { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_jacobi(&self) -> Result<(), SuperError> {
        let n = self.dim;
        let d = &self.degree;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let t1 = self.nested(&x, &y, &z)?;
                    let t2 = self.nested(&y, &z, &x)?;
                    let t3 = self.nested(&z, &x, &y)?;
                    let (s1, s2, s3) = (sign(d[i] * d[k]), sign(d[j] * d[i]), sign(d[k] * d[j]));
                    for coord in 0..n {
                        let defect = &(&(&s1 * &t1[coord]) + &(&s2 * &t2[coord])) + &(&s3 * &t3[coord]);
                        if !defect.is_zero() {
                            return Err(SuperError::Jacobi { i, j, k, coord, defect });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `[a, [b, c]]`
    fn nested(&self, a: &[ParamScalar], b: &[ParamScalar], c: &[ParamScalar]) -> Result<Vec<ParamScalar>, SuperError> {
        self.bracket(a, &self.bracket(b, c)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<ParamScalar> {
        xs.iter().map(|&x| ParamScalar::from_int(x)).collect()
    }

    #[test]
    fn abelian_everything_central() {
        let l = LieSuperalgebra::abelian(vec![0, 0, 1]).unwrap();
        assert_eq!(l.bracket(&v(&[1, 2, 3]), &v(&[4, 5, 6])).unwrap(), v(&[0, 0, 0]));
        let c = l.even_center();
        assert_eq!(c, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
    }

    #[test]
    fn no_even_part_means_empty_center() {
        let l = LieSuperalgebra::abelian(vec![1, 1]).unwrap();
        assert!(l.even_center().is_empty());
    }

    #[test]
    fn heisenberg_center() {
        let l = LieSuperalgebra::heisenberg();
        assert_eq!(l.even_center(), vec![v(&[1, 0, 0])]);
    }

    #[test]
    fn rejects_bad_degree_and_grading() {
        assert_eq!(
            LieSuperalgebra::abelian(vec![0, 2]),
            Err(SuperError::BadDegree { index: 1, value: 2 })
        );
        // [e0, e0] = e1 with e0 even, e1 odd.
        let mut t = vec![vec![vec![ParamScalar::zero(); 2]; 2]; 2];
        t[0][0][1] = ParamScalar::one();
        assert_eq!(
            LieSuperalgebra::new(2, vec![0, 1], t, None),
            Err(SuperError::Grading { i: 0, j: 0, k: 1 })
        );
    }

    #[test]
    fn length_mismatch() {
        let l = LieSuperalgebra::gl11();
        assert!(matches!(
            l.bracket(&v(&[1]), &v(&[1, 0, 0, 0])),
            Err(SuperError::LengthMismatch { expected: 4, found: 1 })
        ));
    }
}
