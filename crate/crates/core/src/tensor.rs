//! Endomorphisms of `V⊗V` and `V⊗V⊗V` and the Yang–Baxter defects.
//!
//! Basis convention, fixed everywhere: `e_i ⊗ e_j` has flat index `i*n + j`
//! and `e_i ⊗ e_j ⊗ e_k` has flat index `i*n² + j*n + k`. Columns are inputs
//! and rows are outputs, so column `c` of a matrix holds the coordinates of the
//! image of basis tensor `c`.

use thiserror::Error;

use crate::linalg::{Inversion, Matrix};
use crate::scalars::{Assignment, ParamScalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A linear map `V⊗V -> V⊗V` with `dim V = n`, as an `n²×n²` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Operator2 {
    dim: usize,
    matrix: Matrix,
}

/// A linear map `V⊗V⊗V -> V⊗V⊗V`, as an `n³×n³` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Operator3 {
    dim: usize,
    matrix: Matrix,
}

/// Which pair of tensor legs an [`Operator2`] acts on inside `V⊗V⊗V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Legs {
    L12,
    L23,
    L13,
}

/// Result of inverting an [`Operator2`].
#[derive(Debug, Clone, PartialEq)]
pub enum Invertibility {
    Invertible {
        inverse: Operator2,
        determinant: ParamScalar,
    },
    NotInvertible {
        determinant: ParamScalar,
    },
}

impl Invertibility {
    pub fn inverse(&self) -> Option<&Operator2> {
        match self {
            Invertibility::Invertible { inverse, .. } => Some(inverse),
            Invertibility::NotInvertible { .. } => None,
        }
    }

    pub fn determinant(&self) -> &ParamScalar {
        match self {
            Invertibility::Invertible { determinant, .. } | Invertibility::NotInvertible { determinant } => {
                determinant
            }
        }
    }
}

macro_rules! operator_common {
    ($ty:ident, $power:expr) => {
        impl $ty {
            pub fn new(dim: usize, matrix: Matrix) -> Result<Self, TensorError> {
                let side = dim.pow($power);
                if dim == 0 || matrix.rows() != side || matrix.cols() != side {
                    return Err(TensorError::Shape(format!(
                        "expected a {side}x{side} matrix for dim {dim}, got {}x{}",
                        matrix.rows(),
                        matrix.cols()
                    )));
                }
                Ok($ty { dim, matrix })
            }

            pub fn identity(dim: usize) -> Self {
                $ty {
                    dim,
                    matrix: Matrix::identity(dim.pow($power)),
                }
            }

            pub fn zero(dim: usize) -> Self {
                let side = dim.pow($power);
                $ty {
                    dim,
                    matrix: Matrix::zeros(side, side),
                }
            }

            /// Dimension of the underlying space `V`.
            pub fn dim(&self) -> usize {
                self.dim
            }

            pub fn matrix(&self) -> &Matrix {
                &self.matrix
            }

            pub fn into_matrix(self) -> Matrix {
                self.matrix
            }

            pub fn is_zero(&self) -> bool {
                self.matrix.is_zero()
            }

            pub fn is_identity(&self) -> bool {
                self.matrix.is_identity()
            }

            /// `self ∘ rhs`: apply `rhs` first.
            pub fn compose(&self, rhs: &$ty) -> Result<$ty, TensorError> {
                self.check_dim(rhs)?;
                Ok($ty {
                    dim: self.dim,
                    matrix: self.matrix.mul(&rhs.matrix).expect("square of equal size"),
                })
            }

            pub fn sub(&self, rhs: &$ty) -> Result<$ty, TensorError> {
                self.check_dim(rhs)?;
                Ok($ty {
                    dim: self.dim,
                    matrix: self.matrix.sub(&rhs.matrix).expect("equal shapes"),
                })
            }

            pub fn add(&self, rhs: &$ty) -> Result<$ty, TensorError> {
                self.check_dim(rhs)?;
                Ok($ty {
                    dim: self.dim,
                    matrix: self.matrix.add(&rhs.matrix).expect("equal shapes"),
                })
            }

            pub fn scale(&self, s: &ParamScalar) -> $ty {
                $ty {
                    dim: self.dim,
                    matrix: self.matrix.scale(s),
                }
            }

            pub fn neg(&self) -> $ty {
                self.scale(&ParamScalar::from_int(-1))
            }

            pub fn substitute(&self, point: &Assignment) -> Result<$ty, TensorError> {
                Ok($ty {
                    dim: self.dim,
                    matrix: self.matrix.substitute(point)?,
                })
            }

            fn check_dim(&self, rhs: &$ty) -> Result<(), TensorError> {
                if self.dim != rhs.dim {
                    return Err(TensorError::DimMismatch {
                        left: self.dim,
                        right: rhs.dim,
                    });
                }
                Ok(())
            }

            /// Splits a flat index into per-leg basis indices.
            pub fn legs_of(&self, flat: usize) -> Vec<usize> {
                let mut out = vec![0; $power as usize];
                let mut r = flat;
                for slot in out.iter_mut().rev() {
                    *slot = r % self.dim;
                    r /= self.dim;
                }
                out
            }
        }

        impl std::fmt::Debug for $ty {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                write!(f, "{}(dim {}) {:?}", stringify!($ty), self.dim, self.matrix)
            }
        }

        impl std::fmt::Display for $ty {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                std::fmt::Display::fmt(&self.matrix, f)
            }
        }
    };
}

operator_common!(Operator2, 2);
operator_common!(Operator3, 3);

impl Operator2 {
    /// Builds the matrix column by column: `image(i, j)` returns the
    /// coordinates (length n²) of the image of `e_i ⊗ e_j`.
    pub fn from_action(dim: usize, mut image: impl FnMut(usize, usize) -> Vec<ParamScalar>) -> Self {
        let side = dim * dim;
        let mut matrix = Matrix::zeros(side, side);
        for i in 0..dim {
            for j in 0..dim {
                let col = i * dim + j;
                let img = image(i, j);
                assert_eq!(img.len(), side, "image must have n² coordinates");
                for (row, v) in img.into_iter().enumerate() {
                    matrix.set(row, col, v);
                }
            }
        }
        Operator2 { dim, matrix }
    }

    /// Coefficient of `e_a ⊗ e_b` in the image of `e_i ⊗ e_j`.
    pub fn entry(&self, a: usize, b: usize, i: usize, j: usize) -> &ParamScalar {
        self.matrix.get(a * self.dim + b, i * self.dim + j)
    }

    /// Image of the basis tensor `e_i ⊗ e_j`.
    pub fn image(&self, i: usize, j: usize) -> Vec<ParamScalar> {
        let col = i * self.dim + j;
        (0..self.dim * self.dim)
            .map(|r| self.matrix.get(r, col).clone())
            .collect()
    }

    pub fn inverse(&self) -> Invertibility {
        match self.matrix.inverse().expect("operator matrices are square") {
            Inversion::Invertible { inverse, determinant } => Invertibility::Invertible {
                inverse: Operator2 {
                    dim: self.dim,
                    matrix: inverse,
                },
                determinant,
            },
            Inversion::Singular { determinant } => Invertibility::NotInvertible { determinant },
        }
    }

    pub fn determinant(&self) -> ParamScalar {
        self.matrix.determinant().expect("operator matrices are square")
    }
}

/// The flip `v ⊗ w -> w ⊗ v`.
pub fn twist(n: usize) -> Operator2 {
    graded_twist(&vec![0; n])
}

/// The graded flip `x ⊗ y -> (-1)^{|x||y|} y ⊗ x` on a homogeneous basis.
pub fn graded_twist(degrees: &[u8]) -> Operator2 {
    let n = degrees.len();
    let mut matrix = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let s = if degrees[i] * degrees[j] % 2 == 1 { -1 } else { 1 };
            matrix.set(j * n + i, i * n + j, ParamScalar::from_int(s));
        }
    }
    Operator2 { dim: n, matrix }
}

/// Lifts `r` to `V⊗V⊗V`: `R¹² = R⊗I`, `R²³ = I⊗R`,
/// `R¹³ = (I⊗τ)(R⊗I)(I⊗τ)`.
pub fn embed(r: &Operator2, legs: Legs) -> Operator3 {
    let n = r.dim;
    let id = Matrix::identity(n);
    let matrix = match legs {
        Legs::L12 => r.matrix.kron(&id),
        Legs::L23 => id.kron(&r.matrix),
        Legs::L13 => {
            // I⊗τ is the permutation (i,j,k) -> (i,k,j); conjugating by it
            // relabels rows and columns of R⊗I.
            let r12 = r.matrix.kron(&id);
            let swap23 = |flat: usize| {
                let (i, j, k) = (flat / (n * n), (flat / n) % n, flat % n);
                i * n * n + k * n + j
            };
            let side = n * n * n;
            Matrix::from_fn(side, side, |a, b| r12.get(swap23(a), swap23(b)).clone())
        }
    };
    Operator3 { dim: n, matrix }
}

fn check_dims(ops: &[&Operator2]) -> Result<usize, TensorError> {
    let n = ops[0].dim;
    for op in &ops[1..] {
        if op.dim != n {
            return Err(TensorError::DimMismatch { left: n, right: op.dim });
        }
    }
    Ok(n)
}

fn chain(ops: &[&Operator3]) -> Operator3 {
    let mut acc = ops[0].clone();
    for op in &ops[1..] {
        acc = acc.compose(op).expect("dims already checked");
    }
    acc
}

/// `[R,S,T] = R¹² S¹³ T²³ − T²³ S¹³ R¹²`.
pub fn yb_commutator(r: &Operator2, s: &Operator2, t: &Operator2) -> Result<Operator3, TensorError> {
    check_dims(&[r, s, t])?;
    let (r12, s13, t23) = (embed(r, Legs::L12), embed(s, Legs::L13), embed(t, Legs::L23));
    let lhs = chain(&[&r12, &s13, &t23]);
    let rhs = chain(&[&t23, &s13, &r12]);
    lhs.sub(&rhs)
}

/// `R¹²R²³R¹² − R²³R¹²R²³`; zero iff `r` satisfies the braid equation.
pub fn braid_defect(r: &Operator2) -> Operator3 {
    let (r12, r23) = (embed(r, Legs::L12), embed(r, Legs::L23));
    let lhs = chain(&[&r12, &r23, &r12]);
    let rhs = chain(&[&r23, &r12, &r23]);
    lhs.sub(&rhs).expect("same dim")
}

/// `R¹²R¹³R²³ − R²³R¹³R¹²`; zero iff `r` satisfies the constant QYBE.
pub fn qybe_defect(r: &Operator2) -> Operator3 {
    yb_commutator(r, r, r).expect("same dim")
}

/// `R¹²(u,v)R¹³(u,w)R²³(v,w) − R²³(v,w)R¹³(u,w)R¹²(u,v)` from the three
/// specializations supplied by the caller.
pub fn colored_defect(r_uv: &Operator2, r_uw: &Operator2, r_vw: &Operator2) -> Result<Operator3, TensorError> {
    yb_commutator(r_uv, r_uw, r_vw)
}
