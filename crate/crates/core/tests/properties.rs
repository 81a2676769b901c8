mod common;

use std::collections::BTreeMap;

use common::{first_associativity_violation, first_unit_violation, s, Table};
use proptest::prelude::*;
use ybx_core::scalars::Poly;
use ybx_core::verify::{verify_colored_family, Sampling, VerifyMode};
use ybx_core::{
    braid_defect, embed, qybe_defect, twist, yb_commutator, Algebra, Assignment, Legs, Matrix, Operator2, Operator3,
    ParamScalar, Ratio,
};

fn small_poly() -> impl Strategy<Value = ParamScalar> {
    // Sum of up to three terms c·x^i·y^j with small coefficients.
    prop::collection::vec((-4i64..=4, 0u32..=2, 0u32..=2), 1..=3).prop_map(|terms| {
        let mut acc = ParamScalar::zero();
        for (c, i, j) in terms {
            let t = &(&ParamScalar::from_int(c) * &s("x").pow(i as i32).unwrap()) * &s("y").pow(j as i32).unwrap();
            acc += &t;
        }
        acc
    })
}

fn scalar() -> impl Strategy<Value = ParamScalar> {
    (small_poly(), small_poly()).prop_map(|(n, d)| if d.is_zero() { n } else { &n / &d })
}

fn ratio() -> impl Strategy<Value = Ratio> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| Ratio::new(n.into(), d.into()))
}

fn operator(dim: usize) -> impl Strategy<Value = Operator2> {
    let side = dim * dim;
    prop::collection::vec(-2i64..=2, side * side).prop_map(move |xs| {
        let m = Matrix::from_fn(side, side, |r, c| ParamScalar::from_int(xs[r * side + c]));
        Operator2::new(dim, m).unwrap()
    })
}

/// Permutation matrix of `I⊗τ` on `V⊗V⊗V`.
fn swap23(n: usize) -> Matrix {
    let i = Matrix::identity(n);
    i.kron(twist(n).matrix())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip().unwrap()).is_one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar(), x in ratio(), y in ratio()) {
        let pt: Assignment = [("x".to_string(), x), ("y".to_string(), y)].into_iter().collect();
        if let (Ok(ea), Ok(eb)) = (a.evaluate(&pt), b.evaluate(&pt)) {
            prop_assert_eq!((&a + &b).evaluate(&pt).unwrap(), &ea + &eb);
            prop_assert_eq!((&a * &b).evaluate(&pt).unwrap(), &ea * &eb);
        }
    }

    #[test]
    fn print_parse_round_trip(a in scalar()) {
        let back: ParamScalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn compose_agrees_with_substitute(a in scalar(), x in ratio()) {
        let pt: Assignment = [("x".to_string(), x.clone())].into_iter().collect();
        let bind: BTreeMap<String, ParamScalar> = [("x".to_string(), ParamScalar::from_ratio(x))].into_iter().collect();
        prop_assert_eq!(a.compose(&bind).ok(), a.substitute(&pt).ok());
    }

    #[test]
    fn canonical_denominator_is_monic(a in scalar()) {
        let d: &Poly = a.denominator();
        prop_assert!(d.leading_coeff() == Ratio::from_integer(1.into()));
    }

    #[test]
    fn braid_qybe_equivalence(r in operator(2)) {
        let t = twist(2);
        let b = braid_defect(&r).is_zero();
        prop_assert_eq!(b, qybe_defect(&r.compose(&t).unwrap()).is_zero());
        prop_assert_eq!(b, qybe_defect(&t.compose(&r).unwrap()).is_zero());
    }

    #[test]
    fn embed_13_is_conjugated_embed_12(r in operator(2)) {
        let p = swap23(2);
        let conj = p.mul(embed(&r, Legs::L12).matrix()).unwrap().mul(&p).unwrap();
        prop_assert_eq!(embed(&r, Legs::L13).into_matrix(), conj);
    }

    #[test]
    fn embed_via_kronecker(r in operator(2)) {
        let i = Matrix::identity(2);
        prop_assert_eq!(embed(&r, Legs::L12).into_matrix(), r.matrix().kron(&i));
        prop_assert_eq!(embed(&r, Legs::L23).into_matrix(), i.kron(r.matrix()));
    }

    #[test]
    fn inverse_is_two_sided(r in operator(2)) {
        if let Some(inv) = r.inverse().inverse() {
            prop_assert!(r.compose(inv).unwrap().is_identity());
            prop_assert!(inv.compose(&r).unwrap().is_identity());
        } else {
            prop_assert!(r.determinant().is_zero());
        }
    }

    #[test]
    fn commutator_of_equal_legs_is_qybe_defect(r in operator(2)) {
        prop_assert_eq!(yb_commutator(&r, &r, &r).unwrap(), qybe_defect(&r));
    }

    #[test]
    fn qybe_defect_matches_hand_expansion(r in operator(2)) {
        let (r12, r13, r23) = (embed(&r, Legs::L12), embed(&r, Legs::L13), embed(&r, Legs::L23));
        let lhs = r12.compose(&r13).unwrap().compose(&r23).unwrap();
        let rhs = r23.compose(&r13).unwrap().compose(&r12).unwrap();
        let swapped: Operator3 = rhs.sub(&lhs).unwrap();
        prop_assert_eq!(qybe_defect(&r), swapped.neg());
    }

    #[test]
    fn validator_agrees_with_brute_force(entries in prop::collection::vec(0i64..=1, 8)) {
        let table: Table = (0..2)
            .map(|i| (0..2).map(|j| (0..2).map(|k| ParamScalar::from_int(entries[i * 4 + j * 2 + k])).collect()).collect())
            .collect();
        let unit = vec![s("1"), s("0")];
        let oracle_ok = first_unit_violation(&table, &unit).is_none() && first_associativity_violation(&table).is_none();
        prop_assert_eq!(Algebra::new(2, table, unit, None).is_ok(), oracle_ok);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn symbolic_pass_implies_sampled_pass(seed in any::<u64>()) {
        let a = Algebra::quadratic_quotient(s("m"), s("n"));
        let mode = VerifyMode::Sampled(Sampling { samples: 3, seed });
        prop_assert!(verify_colored_family(&a, &s("p"), &s("q"), mode).passed());
    }

    #[test]
    fn sampled_reports_are_deterministic(seed in any::<u64>()) {
        let a = Algebra::quadratic_quotient(s("m"), s("n"));
        let mode = VerifyMode::Sampled(Sampling { samples: 2, seed });
        let x = verify_colored_family(&a, &s("p"), &s("q"), mode).to_json();
        let y = verify_colored_family(&a, &s("p"), &s("q"), mode).to_json();
        prop_assert_eq!(x, y);
    }
}
