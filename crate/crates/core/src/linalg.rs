//! Dense matrices over [`ParamScalar`].
//!
//! Products skip zero entries, which matters because every operator built in
//! this crate is sparse. Inversion and determinants use fraction-free
//! (Bareiss) elimination so that intermediate entries of a polynomial matrix
//! stay polynomial minors.

use std::fmt;

use crate::scalars::{Assignment, ParamScalar, ScalarError};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<ParamScalar>,
}

/// Outcome of an inversion attempt.
#[derive(Clone, Debug, PartialEq)]
pub enum Inversion {
    Invertible {
        inverse: Matrix,
        determinant: ParamScalar,
    },
    Singular {
        /// Always the zero scalar; kept so callers can report it.
        determinant: ParamScalar,
    },
}

impl Inversion {
    pub fn inverse(&self) -> Option<&Matrix> {
        match self {
            Inversion::Invertible { inverse, .. } => Some(inverse),
            Inversion::Singular { .. } => None,
        }
    }

    pub fn determinant(&self) -> &ParamScalar {
        match self {
            Inversion::Invertible { determinant, .. } | Inversion::Singular { determinant } => {
                determinant
            }
        }
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![ParamScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = ParamScalar::one();
        }
        m
    }

    /// Builds a matrix from row vectors; `None` if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<ParamScalar>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> ParamScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &ParamScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ParamScalar) {
        self.data[r * self.cols + c] = v;
    }

    /// Adds `v` to entry `(r, c)`.
    pub fn add_at(&mut self, r: usize, c: usize, v: &ParamScalar) {
        if v.is_zero() {
            return;
        }
        let e = &mut self.data[r * self.cols + c];
        *e = &*e + v;
    }

    pub fn row(&self, r: usize) -> &[ParamScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<ParamScalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &ParamScalar)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ParamScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.entries().all(|(r, c, v)| {
                if r == c {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &ParamScalar)> {
        self.entries().find(|(_, _, v)| !v.is_zero())
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&ParamScalar) -> ParamScalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<E>(&self, f: impl Fn(&ParamScalar) -> Result<ParamScalar, E>) -> Result<Matrix, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn scale(&self, s: &ParamScalar) -> Matrix {
        self.map(|v| v * s)
    }

    /// Substitutes a (possibly partial) assignment into every entry.
    pub fn substitute(&self, point: &Assignment) -> Result<Matrix, ScalarError> {
        self.try_map(|v| v.substitute(point))
    }

    pub fn mul(&self, rhs: &Matrix) -> Option<Matrix> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_at(i, j, &(a * b));
                }
            }
        }
        Some(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Option<Matrix> {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Option<Matrix> {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(&self, rhs: &Matrix, f: impl Fn(&ParamScalar, &ParamScalar) -> ParamScalar) -> Option<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return None;
        }
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for (i, j, a) in self.entries() {
            if a.is_zero() {
                continue;
            }
            for (k, l, b) in rhs.entries() {
                if b.is_zero() {
                    continue;
                }
                out.set(i * rhs.rows + k, j * rhs.cols + l, a * b);
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[ParamScalar]) -> Option<Vec<ParamScalar>> {
        if v.len() != self.cols {
            return None;
        }
        Some(
            (0..self.rows)
                .map(|i| {
                    let mut acc = ParamScalar::zero();
                    for (a, x) in self.row(i).iter().zip(v) {
                        if !a.is_zero() && !x.is_zero() {
                            acc += &(a * x);
                        }
                    }
                    acc
                })
                .collect(),
        )
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Row index in `from..rows` of the simplest nonzero entry of column `col`.
    fn pick_pivot(&self, col: usize, from: usize) -> Option<usize> {
        (from..self.rows)
            .filter(|&r| !self.get(r, col).is_zero())
            .min_by_key(|&r| {
                let v = self.get(r, col);
                (v.numerator().len() + v.denominator().len(), r)
            })
    }

    /// Determinant by Bareiss elimination. `None` for non-square input.
    pub fn determinant(&self) -> Option<ParamScalar> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(ParamScalar::one());
        }
        let mut a = self.clone();
        let mut prev = ParamScalar::one();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = a.pick_pivot(k, k) else {
                return Some(ParamScalar::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                negate = !negate;
            }
            let pk = a.get(k, k).clone();
            for i in k + 1..n {
                let aik = a.get(i, k).clone();
                for j in k + 1..n {
                    let v = &(&pk * a.get(i, j)) - &(&aik * a.get(k, j));
                    a.set(i, j, &v / &prev);
                }
                a.set(i, k, ParamScalar::zero());
            }
            prev = pk;
        }
        Some(if negate { -prev } else { prev })
    }

    /// Exact inverse by fraction-free Gauss-Jordan elimination on `[M | I]`.
    /// `None` for non-square input.
    pub fn inverse(&self) -> Option<Inversion> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                a.set(i, j, self.get(i, j).clone());
            }
            a.set(i, n + i, ParamScalar::one());
        }
        let mut prev = ParamScalar::one();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = a.pick_pivot(k, k) else {
                return Some(Inversion::Singular {
                    determinant: ParamScalar::zero(),
                });
            };
            if p != k {
                a.swap_rows(p, k);
                negate = !negate;
            }
            let pk = a.get(k, k).clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let aik = a.get(i, k).clone();
                for j in 0..2 * n {
                    if j == k {
                        continue;
                    }
                    let (x, y) = (a.get(i, j), a.get(k, j));
                    if x.is_zero() && (aik.is_zero() || y.is_zero()) {
                        continue;
                    }
                    let v = &(&pk * x) - &(&aik * y);
                    a.set(i, j, &v / &prev);
                }
                a.set(i, k, ParamScalar::zero());
            }
            prev = pk;
        }
        let inverse = Matrix::from_fn(n, n, |i, j| a.get(i, n + j) / a.get(i, i));
        Some(Inversion::Invertible {
            inverse,
            determinant: if negate { -prev } else { prev },
        })
    }

    /// Basis of the right nullspace `{x : M x = 0}` from the reduced row
    /// echelon form; one vector per free column, with that coordinate 1.
    pub fn nullspace(&self) -> Vec<Vec<ParamScalar>> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = a.pick_pivot(c, r) else {
                continue;
            };
            a.swap_rows(p, r);
            let inv = a.get(r, c).recip().expect("pivot is nonzero");
            for j in 0..a.cols {
                let v = a.get(r, j) * &inv;
                a.set(r, j, v);
            }
            for i in 0..a.rows {
                if i == r || a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in 0..a.cols {
                    let y = a.get(r, j);
                    if y.is_zero() {
                        continue;
                    }
                    let v = a.get(i, j) - &(&f * y);
                    a.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let free = (0..a.cols).filter(|c| !pivots.contains(c));
        free.map(|f| {
            let mut v = vec![ParamScalar::zero(); a.cols];
            v[f] = ParamScalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a.get(row, f);
            }
            v
        })
        .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} ", self.rows, self.cols)?;
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// Column-aligned plain text, one row per line.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let mut widths = vec![0; self.cols];
        for (k, s) in cells.iter().enumerate() {
            widths[k % self.cols.max(1)] = widths[k % self.cols.max(1)].max(s.chars().count());
        }
        for r in 0..self.rows {
            f.write_str("[ ")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{:>w$}", cells[r * self.cols + c], w = widths[c])?;
            }
            f.write_str(" ]\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(src: &str) -> ParamScalar {
        src.parse().unwrap()
    }

    fn m(rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| s(x)).collect()).collect()).unwrap()
    }

    /// Cofactor expansion, used as an independent determinant oracle.
    fn det_cofactor(a: &Matrix) -> ParamScalar {
        let n = a.rows();
        if n == 1 {
            return a.get(0, 0).clone();
        }
        let mut acc = ParamScalar::zero();
        for j in 0..n {
            let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
                a.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let t = a.get(0, j) * &det_cofactor(&minor);
            acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    #[test]
    fn symbolic_inverse_round_trip() {
        let a = m(&[&["a", "b", "0"], &["c", "d", "1"], &["0", "1", "e"]]);
        let inv = a.inverse().unwrap();
        let Inversion::Invertible { inverse, determinant } = inv else {
            panic!("expected invertible");
        };
        assert!(a.mul(&inverse).unwrap().is_identity());
        assert!(inverse.mul(&a).unwrap().is_identity());
        assert_eq!(determinant, det_cofactor(&a));
        assert_eq!(a.determinant().unwrap(), det_cofactor(&a));
    }

    #[test]
    fn singular_matrix_reports_zero_determinant() {
        let a = m(&[&["x", "y"], &["2*x", "2*y"]]);
        assert_eq!(
            a.inverse().unwrap(),
            Inversion::Singular { determinant: ParamScalar::zero() }
        );
        assert!(a.determinant().unwrap().is_zero());
    }

    #[test]
    fn pivoting_with_zero_leading_entry() {
        let a = m(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(a.determinant().unwrap(), ParamScalar::from_int(-1));
        assert_eq!(a.inverse().unwrap().inverse().unwrap(), &a);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&["1", "-1", "0", "0"], &["0", "0", "x", "0"]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.apply(v).unwrap().iter().all(ParamScalar::is_zero));
        }
        assert_eq!(ns[0], vec![s("1"), s("1"), s("0"), s("0")]);
    }

    #[test]
    fn kron_shape_and_entries() {
        let a = m(&[&["1", "2"], &["3", "4"]]);
        let i = Matrix::identity(2);
        let k = a.kron(&i);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(2, 0), &s("3"));
        assert_eq!(k.get(3, 1), &s("3"));
        assert!(k.get(2, 1).is_zero());
    }
}
