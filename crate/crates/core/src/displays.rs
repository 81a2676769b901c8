//! Hand-transcribed 4×4 displays of two operator families on a
//! two-dimensional algebra with basis `{1, x}`, kept verbatim for golden
//! comparisons. Basis order of `A⊗A` is `1⊗1, 1⊗x, x⊗1, x⊗x`.

use crate::linalg::Matrix;
use crate::scalars::ParamScalar;

fn s(src: &str) -> ParamScalar {
    src.parse().expect("transcribed entry parses")
}

fn matrix(rows: [[&str; 4]; 4]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|e| s(e)).collect()).collect()).expect("4×4")
}

/// Display of `a⊗b ↦ α ab⊗1 + β 1⊗ab − α b⊗a` on `k[X]/(X² − mX − n)`,
/// written with row `r` holding the image of basis tensor `r`.
///
/// The third row is transcribed as printed, `(0, 0, β, 0)`; the action
/// `x⊗1 ↦ β 1⊗x` gives `(0, β, 0, 0)`.
pub fn quadratic_dn_display() -> Matrix {
    matrix([
        ["beta", "0", "0", "0"],
        ["0", "beta - alpha", "alpha", "0"],
        ["0", "0", "beta", "0"],
        ["(alpha + beta)*n", "beta*m", "alpha*m", "-alpha"],
    ])
}

/// Index (in `1⊗1, 1⊗x, x⊗1, x⊗x` order) of the image in
/// [`quadratic_dn_display`] that disagrees with the action it displays.
pub const QUADRATIC_DN_SUSPECT_ROW: usize = 2;

/// The action list of the same operator: images of `1⊗1, 1⊗x, x⊗1, x⊗x` as
/// coordinate vectors.
pub fn quadratic_dn_action() -> [[ParamScalar; 4]; 4] {
    [
        ["beta", "0", "0", "0"],
        ["0", "beta - alpha", "alpha", "0"],
        ["0", "beta", "0", "0"],
        ["(alpha + beta)*n", "beta*m", "alpha*m", "-alpha"],
    ]
    .map(|r| r.map(s))
}

/// Display of the colored family `R(u, v)` on `k[X]/(X² − σ)`, column `c`
/// holding the image of basis tensor `c`.
pub fn colored_sigma_display() -> Matrix {
    matrix([
        ["q*u - p*v", "0", "0", "sigma*(q + p)*(u - v)"],
        ["0", "p*(u - v)", "(q - p)*v", "0"],
        ["0", "(q - p)*u", "q*(u - v)", "0"],
        ["0", "0", "0", "q*v - p*u"],
    ])
}

/// The canonical one-parameter solution of the constant QYBE, with `η`
/// restricted to `{0, 1}` and `q ≠ 0`.
pub fn canonical_display(eta: u8) -> Matrix {
    let eta = eta.to_string();
    matrix([
        ["1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "1 - q", "q", "0"],
        [eta.as_str(), "0", "0", "-q"],
    ])
}
