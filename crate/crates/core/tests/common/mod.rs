#![allow(dead_code)]

use std::path::PathBuf;

use ybx_core::ParamScalar;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn s(src: &str) -> ParamScalar {
    src.parse().expect("test scalar parses")
}

pub type Table = Vec<Vec<Vec<ParamScalar>>>;

fn zero_vec(n: usize) -> Vec<ParamScalar> {
    vec![ParamScalar::zero(); n]
}

/// Bilinear extension of a structure table, written independently of the
/// library's multiplication.
pub fn table_mul(table: &Table, a: &[ParamScalar], b: &[ParamScalar]) -> Vec<ParamScalar> {
    let n = a.len();
    let mut out = zero_vec(n);
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            let w = ai * bj;
            for k in 0..n {
                out[k] = &out[k] + &(&w * &table[i][j][k]);
            }
        }
    }
    out
}

pub fn basis(n: usize, i: usize) -> Vec<ParamScalar> {
    let mut v = zero_vec(n);
    v[i] = ParamScalar::one();
    v
}

/// First `(i, j, k, coord)` in lexicographic order where
/// `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
pub fn first_associativity_violation(table: &Table) -> Option<(usize, usize, usize, usize)> {
    let n = table.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (basis(n, i), basis(n, j), basis(n, k));
                let lhs = table_mul(table, &table_mul(table, &x, &y), &z);
                let rhs = table_mul(table, &x, &table_mul(table, &y, &z));
                if let Some(c) = (0..n).find(|&c| lhs[c] != rhs[c]) {
                    return Some((i, j, k, c));
                }
            }
        }
    }
    None
}

/// First basis index whose product with the unit (either side) is wrong.
pub fn first_unit_violation(table: &Table, unit: &[ParamScalar]) -> Option<usize> {
    let n = table.len();
    (0..n).find(|&i| {
        let e = basis(n, i);
        table_mul(table, unit, &e) != e || table_mul(table, &e, unit) != e
    })
}

/// First `(i, j, k, coord)` violating
/// `(−1)^{|x||z|}[x,[y,z]] + (−1)^{|y||x|}[y,[z,x]] + (−1)^{|z||y|}[z,[x,y]] = 0`.
pub fn first_jacobi_violation(degree: &[u8], table: &Table) -> Option<(usize, usize, usize, usize)> {
    let n = table.len();
    let sgn = |a: usize, b: usize| {
        if degree[a] * degree[b] % 2 == 1 {
            ParamScalar::from_int(-1)
        } else {
            ParamScalar::one()
        }
    };
    let br = |a: usize, v: &[ParamScalar]| table_mul(table, &basis(n, a), v);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let t1 = br(i, &table[j][k]);
                let t2 = br(j, &table[k][i]);
                let t3 = br(k, &table[i][j]);
                let (s1, s2, s3) = (sgn(i, k), sgn(j, i), sgn(k, j));
                for c in 0..n {
                    let total = &(&(&s1 * &t1[c]) + &(&s2 * &t2[c])) + &(&s3 * &t3[c]);
                    if !total.is_zero() {
                        return Some((i, j, k, c));
                    }
                }
            }
        }
    }
    None
}
