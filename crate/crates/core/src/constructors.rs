//! Builders for the operator families: the three-parameter algebra operator,
//! the colored (spectral) family, WXZ triples, the split-center solutions and
//! the superalgebra operator φ.

use thiserror::Error;

use crate::algebra::Algebra;
use crate::lie_super::LieSuperalgebra;
use crate::linalg::Matrix;
use crate::scalars::ParamScalar;
use crate::tensor::Operator2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("classification needs constant parameters, found indeterminates {0:?}")]
    FreeIndeterminate(Vec<String>),
    #[error("parameters ({alpha}, {beta}, {gamma}) lie outside every Yang-Baxter case")]
    NotYangBaxter {
        alpha: ParamScalar,
        beta: ParamScalar,
        gamma: ParamScalar,
    },
    #[error("operator is not invertible: factor {factor} vanishes")]
    InvertibilityLocus { factor: ParamScalar },
    #[error("{map} is nonzero on basis tensor e{i}⊗e{j}, which involves the split direction")]
    SupportViolation { map: &'static str, i: usize, j: usize },
    #[error("invalid split space: {0}")]
    InvalidSplit(String),
    #[error("z is not an admissible center element: {0}")]
    InvalidCenter(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
}

/// Which clause of the classification a parameter triple satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum DnCase {
    /// α = γ ≠ 0, β ≠ 0
    #[serde(rename = "i")]
    I,
    /// β = γ ≠ 0, α ≠ 0
    #[serde(rename = "ii")]
    II,
    /// α = β = 0, γ ≠ 0
    #[serde(rename = "iii")]
    III,
    #[serde(rename = "none")]
    None,
}

impl std::fmt::Display for DnCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DnCase::I => "i",
            DnCase::II => "ii",
            DnCase::III => "iii",
            DnCase::None => "none",
        })
    }
}

fn classify_unchecked(alpha: &ParamScalar, beta: &ParamScalar, gamma: &ParamScalar) -> DnCase {
    let nz = |s: &ParamScalar| !s.is_zero();
    if alpha == gamma && nz(alpha) && nz(beta) {
        DnCase::I
    } else if beta == gamma && nz(beta) && nz(alpha) {
        DnCase::II
    } else if alpha.is_zero() && beta.is_zero() && nz(gamma) {
        DnCase::III
    } else {
        DnCase::None
    }
}

/// Case of `(α, β, γ)` for constant parameters; case (i) wins on the
/// overlap α = β = γ ≠ 0.
pub fn classify_dn(alpha: &ParamScalar, beta: &ParamScalar, gamma: &ParamScalar) -> Result<DnCase, ConstructError> {
    let mut free: Vec<String> = [alpha, beta, gamma]
        .iter()
        .flat_map(|s| s.variables())
        .collect();
    if !free.is_empty() {
        free.sort();
        free.dedup();
        return Err(ConstructError::FreeIndeterminate(free));
    }
    Ok(classify_unchecked(alpha, beta, gamma))
}

/// Classification over the rational-function field: "= " means identically
/// equal and "≠ 0" means not identically zero. Agrees with [`classify_dn`]
/// on constants.
pub fn classify_dn_generic(alpha: &ParamScalar, beta: &ParamScalar, gamma: &ParamScalar) -> DnCase {
    classify_unchecked(alpha, beta, gamma)
}

#[derive(Clone, Copy)]
enum Product {
    /// `a b`
    Forward,
    /// `b a`
    Reversed,
}

#[derive(Clone, Copy)]
enum Tail {
    /// `a ⊗ b`
    Straight,
    /// `b ⊗ a`
    Swapped,
}

/// `a⊗b ↦ left·(prod⊗1) + right·(1⊗prod) − tail·(a⊗b or b⊗a)`.
fn product_family(
    alg: &Algebra,
    left: &ParamScalar,
    right: &ParamScalar,
    tail: &ParamScalar,
    product: Product,
    tail_kind: Tail,
) -> Operator2 {
    let n = alg.dim();
    let unit = alg.unit();
    Operator2::from_action(n, |a, b| {
        let mut img = vec![ParamScalar::zero(); n * n];
        let prod = match product {
            Product::Forward => alg.basis_product(a, b),
            Product::Reversed => alg.basis_product(b, a),
        };
        for (k, pk) in prod.iter().enumerate() {
            if pk.is_zero() {
                continue;
            }
            for (l, ul) in unit.iter().enumerate() {
                if ul.is_zero() {
                    continue;
                }
                let w = pk * ul;
                img[k * n + l] += &(left * &w);
                img[l * n + k] += &(right * &w);
            }
        }
        let idx = match tail_kind {
            Tail::Straight => a * n + b,
            Tail::Swapped => b * n + a,
        };
        img[idx] -= tail;
        img
    })
}

/// `R(a⊗b) = α ab⊗1 + β 1⊗ab − γ a⊗b`.
pub fn dn_operator(alg: &Algebra, alpha: &ParamScalar, beta: &ParamScalar, gamma: &ParamScalar) -> Operator2 {
    product_family(alg, alpha, beta, gamma, Product::Forward, Tail::Straight)
}

/// Closed-form inverse: `R_{1/β, 1/α, 1/γ}` in cases (i) and (ii),
/// `R_{0, 0, 1/γ}` in case (iii). Symbolic parameters are classified with
/// [`classify_dn_generic`].
pub fn dn_inverse(
    alg: &Algebra,
    alpha: &ParamScalar,
    beta: &ParamScalar,
    gamma: &ParamScalar,
) -> Result<Operator2, ConstructError> {
    let case = classify_dn_generic(alpha, beta, gamma);
    let inv = |s: &ParamScalar| s.recip().expect("case conditions exclude zero");
    match case {
        DnCase::I | DnCase::II => Ok(dn_operator(alg, &inv(beta), &inv(alpha), &inv(gamma))),
        DnCase::III => Ok(dn_operator(alg, &ParamScalar::zero(), &ParamScalar::zero(), &inv(gamma))),
        DnCase::None => Err(ConstructError::NotYangBaxter {
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: gamma.clone(),
        }),
    }
}

/// `R(u,v)(a⊗b) = p(u−v) 1⊗ab + q(u−v) ab⊗1 − (pu−qv) b⊗a`.
pub fn colored_operator(
    alg: &Algebra,
    p: &ParamScalar,
    q: &ParamScalar,
    u: &ParamScalar,
    v: &ParamScalar,
) -> Operator2 {
    let d = u - v;
    product_family(alg, &(q * &d), &(p * &d), &(&(p * u) - &(q * v)), Product::Forward, Tail::Swapped)
}

/// Closed-form inverse of [`colored_operator`]:
/// `a⊗b ↦ p(u−v)/D ba⊗1 + q(u−v)/D 1⊗ba − 1/(pu−qv) b⊗a`, with
/// `D = (qu−pv)(pu−qv)`. Requires both factors to be nonzero.
pub fn colored_inverse(
    alg: &Algebra,
    p: &ParamScalar,
    q: &ParamScalar,
    u: &ParamScalar,
    v: &ParamScalar,
) -> Result<Operator2, ConstructError> {
    let f1 = &(p * u) - &(q * v);
    let f2 = &(q * u) - &(p * v);
    for factor in [&f1, &f2] {
        if factor.is_zero() {
            return Err(ConstructError::InvertibilityLocus { factor: factor.clone() });
        }
    }
    let d = &f1 * &f2;
    let uv = u - v;
    let left = &(p * &uv) / &d;
    let right = &(q * &uv) / &d;
    let tail = f1.recip().expect("checked nonzero");
    Ok(product_family(alg, &left, &right, &tail, Product::Reversed, Tail::Swapped))
}

/// Three operators on the same `A⊗A`.
#[derive(Debug, Clone, PartialEq)]
pub struct WxzTriple {
    pub w: Operator2,
    pub x: Operator2,
    pub z: Operator2,
}

impl WxzTriple {
    pub fn new(w: Operator2, x: Operator2, z: Operator2) -> Result<Self, ConstructError> {
        for other in [&x, &z] {
            if other.dim() != w.dim() {
                return Err(ConstructError::DimMismatch {
                    left: w.dim(),
                    right: other.dim(),
                });
            }
        }
        Ok(WxzTriple { w, x, z })
    }
}

/// `W(a⊗b) = ab⊗1 + λ 1⊗ab − b⊗a`, `Z(a⊗b) = μ ab⊗1 + 1⊗ab − b⊗a`,
/// `X(a⊗b) = ab⊗1 + 1⊗ab − b⊗a`.
pub fn wxz_system(alg: &Algebra, lambda: &ParamScalar, mu: &ParamScalar) -> WxzTriple {
    let one = ParamScalar::one();
    let build = |l: &ParamScalar, r: &ParamScalar| product_family(alg, l, r, &one, Product::Forward, Tail::Swapped);
    WxzTriple {
        w: build(&one, lambda),
        x: build(&one, &one),
        z: build(mu, &one),
    }
}

/// `V = W ⊕ k c` with `c` one of the basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitSpace {
    total_dim: usize,
    c_index: usize,
}

impl SplitSpace {
    pub fn new(total_dim: usize, c_index: usize) -> Result<Self, ConstructError> {
        if c_index >= total_dim {
            return Err(ConstructError::InvalidSplit(format!(
                "c index {c_index} out of range for dimension {total_dim}"
            )));
        }
        Ok(SplitSpace { total_dim, c_index })
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    pub fn c_index(&self) -> usize {
        self.c_index
    }

    pub fn w_indices(&self) -> Vec<usize> {
        (0..self.total_dim).filter(|&i| i != self.c_index).collect()
    }
}

/// A linear map `V⊗V -> V`, stored as an `n × n²` matrix whose column
/// `i*n + j` is the image of `e_i⊗e_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorToVector {
    dim: usize,
    matrix: Matrix,
}

impl TensorToVector {
    pub fn new(dim: usize, matrix: Matrix) -> Result<Self, ConstructError> {
        if matrix.rows() != dim || matrix.cols() != dim * dim {
            return Err(ConstructError::InvalidSplit(format!(
                "map V⊗V -> V needs a {dim}x{} matrix, got {}x{}",
                dim * dim,
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(TensorToVector { dim, matrix })
    }

    pub fn zero(dim: usize) -> Self {
        TensorToVector {
            dim,
            matrix: Matrix::zeros(dim, dim * dim),
        }
    }

    /// Reads an operator `f: V⊗V -> V⊗V` as a map to `V` by taking the
    /// coefficient of `(·)⊗c` in its output.
    pub fn from_operator(op: &Operator2, space: &SplitSpace) -> Result<Self, ConstructError> {
        let n = op.dim();
        if n != space.total_dim {
            return Err(ConstructError::DimMismatch {
                left: n,
                right: space.total_dim,
            });
        }
        let c = space.c_index;
        let matrix = Matrix::from_fn(n, n * n, |a, col| op.matrix().get(a * n + c, col).clone());
        Ok(TensorToVector { dim: n, matrix })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Coordinate `a` of the image of `e_i⊗e_j`.
    pub fn value(&self, a: usize, i: usize, j: usize) -> &ParamScalar {
        self.matrix.get(a, i * self.dim + j)
    }
}

/// `R(v⊗w) = f(v⊗w)⊗c + c⊗g(v⊗w)` for `f, g: V⊗V -> V` vanishing on
/// `V⊗c + c⊗V`.
pub fn split_center_operator(
    space: &SplitSpace,
    f: &TensorToVector,
    g: &TensorToVector,
) -> Result<Operator2, ConstructError> {
    let n = space.total_dim;
    for map in [f, g] {
        if map.dim != n {
            return Err(ConstructError::DimMismatch { left: n, right: map.dim });
        }
    }
    let c = space.c_index;
    for (name, map) in [("f", f), ("g", g)] {
        for i in 0..n {
            for j in 0..n {
                if (i == c || j == c) && (0..n).any(|a| !map.value(a, i, j).is_zero()) {
                    return Err(ConstructError::SupportViolation { map: name, i, j });
                }
            }
        }
    }
    Ok(Operator2::from_action(n, |i, j| {
        let mut img = vec![ParamScalar::zero(); n * n];
        for a in 0..n {
            img[a * n + c] += f.value(a, i, j);
            img[c * n + a] += g.value(a, i, j);
        }
        img
    }))
}

fn check_center(l: &LieSuperalgebra, z: &[ParamScalar]) -> Result<(), ConstructError> {
    if z.len() != l.dim() {
        return Err(ConstructError::InvalidCenter(format!(
            "z has {} coordinates, expected {}",
            z.len(),
            l.dim()
        )));
    }
    if !l.is_even(z) {
        return Err(ConstructError::InvalidCenter("z has odd components".into()));
    }
    for i in 0..l.dim() {
        let e = l.basis_vector(i);
        let b = l.bracket(z, &e).expect("lengths checked");
        if b.iter().any(|c| !c.is_zero()) {
            return Err(ConstructError::InvalidCenter(format!(
                "[z, {}] is nonzero",
                l.labels()[i]
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum CenterSide {
    Right,
    Left,
}

fn super_family(l: &LieSuperalgebra, z: &[ParamScalar], alpha: &ParamScalar, side: CenterSide) -> Operator2 {
    let n = l.dim();
    Operator2::from_action(n, |i, j| {
        let mut img = vec![ParamScalar::zero(); n * n];
        for (k, b) in l.basis_bracket(i, j).iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let ab = alpha * b;
            for (m, zm) in z.iter().enumerate() {
                if zm.is_zero() {
                    continue;
                }
                let idx = match side {
                    CenterSide::Right => k * n + m,
                    CenterSide::Left => m * n + k,
                };
                img[idx] += &(&ab * zm);
            }
        }
        let s = if l.degree(i) * l.degree(j) % 2 == 1 { -1 } else { 1 };
        img[j * n + i] += &ParamScalar::from_int(s);
        img
    })
}

/// `φ(x⊗y) = α[x,y]⊗z + (−1)^{|x||y|} y⊗x` for `z` even and central.
pub fn super_phi(l: &LieSuperalgebra, z: &[ParamScalar], alpha: &ParamScalar) -> Result<Operator2, ConstructError> {
    check_center(l, z)?;
    Ok(super_family(l, z, alpha, CenterSide::Right))
}

/// `x⊗y ↦ α z⊗[x,y] + (−1)^{|x||y|} y⊗x`.
pub fn super_phi_inverse(
    l: &LieSuperalgebra,
    z: &[ParamScalar],
    alpha: &ParamScalar,
) -> Result<Operator2, ConstructError> {
    check_center(l, z)?;
    Ok(super_family(l, z, alpha, CenterSide::Left))
}

/// The 4×4 normal form `[[1,0,0,0],[0,1,0,0],[0,1−q,q,0],[η,0,0,−q]]`
/// (entry `(r, c)` as displayed), a solution of the constant QYBE.
pub fn canonical_solution(q: &ParamScalar, eta: &ParamScalar) -> Operator2 {
    let o = ParamScalar::one;
    let z = ParamScalar::zero;
    let rows = vec![
        vec![o(), z(), z(), z()],
        vec![z(), o(), z(), z()],
        vec![z(), &o() - q, q.clone(), z()],
        vec![eta.clone(), z(), z(), -q],
    ];
    Operator2::new(2, Matrix::from_rows(rows).expect("square")).expect("4x4")
}
