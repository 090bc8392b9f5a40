mod common;

use maxcomm_core::json::{mat_from_json, mat_to_json, subspace_from_json, subspace_to_json};
use maxcomm_core::oracle::{brute_nilradical, unit_absorption};
use maxcomm_core::{
    algebra_closure, centralizer_basis, centralizer_of_subspace, decompose, idempotents_via_minpoly, nilradical,
    DMat, Domain,
};
use proptest::prelude::*;

use common::matrix_from_ints;

fn field_domain(i: usize) -> Domain {
    match i {
        0 => Domain::Prime(2),
        1 => Domain::Prime(3),
        2 => Domain::Prime(5),
        3 => Domain::Prime(7),
        _ => Domain::Rationals,
    }
}

/// A domain index (four primes, then Q), a size and one or more matrices.
fn field_case(max_n: usize, max_mats: usize) -> impl Strategy<Value = (Domain, usize, Vec<DMat>)> {
    (0usize..5, 1usize..=max_n, 1usize..=max_mats).prop_flat_map(|(di, n, k)| {
        prop::collection::vec(prop::collection::vec(-2i64..=2, n * n), k).prop_map(move |mats| {
            let d = field_domain(di);
            let ms = mats.iter().map(|ints| matrix_from_ints(&d, n, ints)).collect();
            (d, n, ms)
        })
    })
}

fn quaternion_case(max_n: usize, max_mats: usize) -> impl Strategy<Value = (Domain, usize, Vec<DMat>)> {
    (1usize..=max_n, 1usize..=max_mats).prop_flat_map(|(n, k)| {
        prop::collection::vec(prop::collection::vec(-1i64..=1, 4 * n * n), k).prop_map(move |mats| {
            let d = Domain::hamilton();
            let ms = mats.iter().map(|ints| matrix_from_ints(&d, n, ints)).collect();
            (d, n, ms)
        })
    })
}

fn check_rank_nullity(a: &DMat) -> Result<(), TestCaseError> {
    let (ker, im) = a.kernel_image();
    prop_assert_eq!(ker.dim() + im.dim(), a.n());
    prop_assert_eq!(a.rank(), im.dim());
    Ok(())
}

fn check_inverse(d: &Domain, n: usize, a: &DMat) -> Result<(), TestCaseError> {
    match a.inverse() {
        Ok(inv) => {
            let id = DMat::identity(d, n);
            prop_assert_eq!(a.mul(&inv), id.clone());
            prop_assert_eq!(inv.mul(a), id);
            prop_assert_eq!(a.rank(), n);
        }
        Err(_) => prop_assert!(a.rank() < n),
    }
    Ok(())
}

fn check_triple_centralizer(d: &Domain, n: usize, gens: &[DMat]) -> Result<(), TestCaseError> {
    let c = centralizer_basis(d, n, gens);
    let cc = centralizer_of_subspace(&c);
    let ccc = centralizer_of_subspace(&cc);
    for g in gens {
        prop_assert!(cc.contains(g));
    }
    prop_assert_eq!(ccc, c);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rank_plus_nullity_is_n((_d, _n, ms) in field_case(4, 1)) {
        check_rank_nullity(&ms[0])?;
    }

    #[test]
    fn inverse_is_two_sided((d, n, ms) in field_case(4, 1)) {
        check_inverse(&d, n, &ms[0])?;
    }

    #[test]
    fn third_centralizer_is_first((d, n, ms) in field_case(3, 2)) {
        check_triple_centralizer(&d, n, &ms)?;
    }

    #[test]
    fn closures_absorb_inverses((d, n, ms) in field_case(3, 2), seed in any::<u64>()) {
        let s = algebra_closure(&d, n, &ms);
        let check = unit_absorption(&s, 4, seed);
        prop_assert!(check.passed(), "{:?}", check);
    }

    #[test]
    fn trace_form_nilradical_matches_nilpotent_span(p in prop::sample::select(vec![2u32, 3, 5, 7]),
                                                     n in 1usize..=4,
                                                     ints in prop::collection::vec(0i64..7, 16)) {
        let d = Domain::Prime(p);
        let a = matrix_from_ints(&d, n, &ints);
        let s = algebra_closure(&d, n, &[a]);
        prop_assume!((p as f64).powi(s.dim_z() as i32) <= 65536.0);
        prop_assert_eq!(nilradical(&s).unwrap(), brute_nilradical(&s).unwrap());
    }

    #[test]
    fn idempotent_count_matches_factor_count((d, n, ms) in field_case(4, 1)) {
        let s = algebra_closure(&d, n, &ms);
        let idems = idempotents_via_minpoly(&s).unwrap();
        let report = decompose(&s).unwrap();
        prop_assert_eq!(idems.len(), report.factor_count());
        let total = idems.iter().fold(DMat::zeros(&d, n), |acc, e| acc.add(e));
        prop_assert!(total.is_identity());
    }

    #[test]
    fn matrices_and_subspaces_round_trip((d, n, ms) in field_case(3, 2)) {
        for m in &ms {
            prop_assert_eq!(&mat_from_json(&mat_to_json(m), None).unwrap(), m);
        }
        let c = centralizer_basis(&d, n, &ms);
        prop_assert_eq!(subspace_from_json(&subspace_to_json(&c)).unwrap(), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn quaternion_rank_plus_nullity_is_n((_d, _n, ms) in quaternion_case(3, 1)) {
        check_rank_nullity(&ms[0])?;
    }

    #[test]
    fn quaternion_inverse_is_two_sided((d, n, ms) in quaternion_case(3, 1)) {
        check_inverse(&d, n, &ms[0])?;
    }

    #[test]
    fn quaternion_third_centralizer_is_first((d, n, ms) in quaternion_case(2, 2)) {
        check_triple_centralizer(&d, n, &ms)?;
    }

    #[test]
    fn quaternion_closures_absorb_inverses((d, n, ms) in quaternion_case(2, 1), seed in any::<u64>()) {
        let s = algebra_closure(&d, n, &ms);
        prop_assert!(unit_absorption(&s, 4, seed).passed());
    }

    #[test]
    fn quaternion_matrices_round_trip((_d, _n, ms) in quaternion_case(3, 1)) {
        prop_assert_eq!(&mat_from_json(&mat_to_json(&ms[0]), None).unwrap(), &ms[0]);
    }
}
