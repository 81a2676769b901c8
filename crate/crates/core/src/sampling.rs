//! Seeded random inputs for sampled checks and property suites.
//!
//! Everything goes through `ChaCha8Rng::seed_from_u64`, so a seed names the
//! same sequence on every platform.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constructors::{SplitSpace, TensorToVector};
use crate::linalg::Matrix;
use crate::scalars::{Assignment, ParamScalar, Ratio};
use crate::tensor::Operator2;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with numerator in `-9..=9` and denominator in `1..=4`.
pub fn random_ratio(rng: &mut SampleRng) -> Ratio {
    let n: i64 = rng.gen_range(-9..=9);
    let d: i64 = rng.gen_range(1..=4);
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_int(rng: &mut SampleRng, lo: i64, hi: i64) -> ParamScalar {
    ParamScalar::from_int(rng.gen_range(lo..=hi))
}

/// Random rational values for every named indeterminate, in name order.
pub fn random_point(vars: &BTreeSet<String>, rng: &mut SampleRng) -> Assignment {
    vars.iter().map(|v| (v.clone(), random_ratio(rng))).collect()
}

/// A dense operator with integer entries in `-3..=3`.
pub fn random_operator(dim: usize, rng: &mut SampleRng) -> Operator2 {
    let side = dim * dim;
    let m = Matrix::from_fn(side, side, |_, _| random_int(rng, -3, 3));
    Operator2::new(dim, m).expect("square")
}

fn random_map(space: &SplitSpace, rng: &mut SampleRng) -> TensorToVector {
    let n = space.total_dim();
    let c = space.c_index();
    let m = Matrix::from_fn(n, n * n, |_, col| {
        let (i, j) = (col / n, col % n);
        if i == c || j == c {
            ParamScalar::zero()
        } else {
            random_int(rng, -3, 3)
        }
    });
    TensorToVector::new(n, m).expect("shape")
}

/// `f, g: V⊗V -> V` with random integer values on `W⊗W` and zero on
/// `V⊗c + c⊗V`.
pub fn random_admissible_maps(space: &SplitSpace, rng: &mut SampleRng) -> (TensorToVector, TensorToVector) {
    (random_map(space, rng), random_map(space, rng))
}

/// Like [`random_admissible_maps`] but one of the two maps gets a nonzero
/// value on a basis tensor with a leg equal to `c`.
pub fn random_inadmissible_maps(space: &SplitSpace, rng: &mut SampleRng) -> (TensorToVector, TensorToVector) {
    let (mut f, mut g) = random_admissible_maps(space, rng);
    let n = space.total_dim();
    let c = space.c_index();
    let other = rng.gen_range(0..n);
    let (i, j) = if rng.gen_bool(0.5) { (c, other) } else { (other, c) };
    let a = rng.gen_range(0..n);
    let v: i64 = if rng.gen_bool(0.5) { rng.gen_range(1..=3) } else { rng.gen_range(-3..=-1) };
    let target = if rng.gen_bool(0.5) { &mut f } else { &mut g };
    let mut m = target.matrix().clone();
    m.set(a, i * n + j, ParamScalar::from_int(v));
    *target = TensorToVector::new(n, m).expect("shape");
    (f, g)
}
