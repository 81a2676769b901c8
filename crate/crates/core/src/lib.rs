pub mod algebra;
pub mod constructors;
pub mod displays;
pub mod io;
pub mod lie_super;
pub mod linalg;
pub mod sampling;
pub mod scalars;
pub mod tensor;
pub mod verify;

pub use algebra::{Algebra, AlgebraError};
pub use constructors::*;
pub use lie_super::{LieSuperalgebra, SuperError};
pub use linalg::{Inversion, Matrix};
pub use scalars::{Assignment, ParamScalar, Ratio, ScalarError};
pub use tensor::{
    braid_defect, colored_defect, embed, graded_twist, qybe_defect, twist, yb_commutator, Invertibility, Legs,
    Operator2, Operator3, TensorError,
};
