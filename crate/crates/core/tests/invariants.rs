mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use pathideal_core::depth::{depth_quotient, depth_quotient_with, depth_via_polarization, DEFAULT_POLARIZATION_CAP};
use pathideal_core::families::{cycle_ideal, path_ideal, phi, t0_alpha, u_ideal, witness_w};
use pathideal_core::linalg::{rank_q, SparseRow};
use pathideal_core::sdepth::{
    build_poset, has_partition_min_label, sdepth_quotient, sdepth_quotient_with, verify_partition, SdepthConfig,
    SearchConfig, SearchOutcome,
};
use pathideal_core::{minimalize, Exec, Monomial, MonomialIdeal};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = MonomialIdeal> {
    ideal_strategy(4, 2, 4)
}

/// Ideals whose characteristic poset stays small.
fn tiny() -> impl Strategy<Value = MonomialIdeal> {
    ideal_strategy(3, 2, 3)
}

fn with_monomial(e_max: u32) -> impl Strategy<Value = (MonomialIdeal, Monomial)> {
    small().prop_flat_map(move |i| {
        let n = i.n_vars();
        (Just(i), monomial_strategy(n, e_max))
    })
}

fn pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1..=4usize).prop_flat_map(|n| (ideal_strategy(n, 2, 3), ideal_strategy(n, 2, 3)))
        .prop_filter("same ring", |(a, b)| a.n_vars() == b.n_vars())
}

fn top_of(ideals: &[&MonomialIdeal]) -> Vec<u32> {
    let n = ideals[0].n_vars();
    (0..n)
        .map(|v| ideals.iter().flat_map(|i| i.gens().iter().map(move |g| g.exps()[v])).max().unwrap_or(0) + 1)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalize_is_idempotent(i in small()) {
        let again = minimalize(i.gens().to_vec(), i.n_vars());
        prop_assert_eq!(&again, &i);
        prop_assert_eq!(gen_set(&i), naive_minimal(raw(&i)));
    }

    #[test]
    fn colon_identities((i, u) in with_monomial(2), v in prop::collection::vec(0u32..=2, 4)) {
        let n = i.n_vars();
        let v = Monomial::new(v[..n].to_vec());
        prop_assert_eq!(i.colon(&Monomial::one(n)).unwrap(), i.clone());
        let iu = i.colon(&u).unwrap();
        for g in i.gens() {
            prop_assert!(iu.contains(g).unwrap());
        }
        prop_assert_eq!(iu.colon(&v).unwrap(), i.colon(&u.mul(&v).unwrap()).unwrap());
        let gi = raw(&i);
        for a in boxed(&top_of(&[&i])) {
            let shifted: Vec<u32> = a.iter().zip(u.exps()).map(|(x, y)| x + y).collect();
            prop_assert_eq!(iu.contains(&Monomial::new(a)).unwrap(), member(&gi, &shifted));
        }
    }

    #[test]
    fn powers_add(i in ideal_strategy(3, 2, 3), a in 1u32..=2, b in 1u32..=2) {
        let lhs = i.power(a + b).unwrap();
        let rhs = i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn membership_of_sum_product_intersection((i, j) in pair()) {
        let (gi, gj) = (raw(&i), raw(&j));
        let cap = i.intersect(&j).unwrap();
        let sum = i.sum(&j).unwrap();
        let prod = i.product(&j).unwrap();
        let top: Vec<u32> = top_of(&[&i, &j]).iter().map(|e| 2 * e).collect();
        for a in boxed(&top) {
            let m = Monomial::new(a.clone());
            let (x, y) = (member(&gi, &a), member(&gj, &a));
            prop_assert_eq!(cap.contains(&m).unwrap(), x && y);
            prop_assert_eq!(sum.contains(&m).unwrap(), x || y);
            let split = boxed(&a).iter().any(|b| {
                let c: Vec<u32> = a.iter().zip(b).map(|(p, q)| p - q).collect();
                member(&gi, b) && member(&gj, &c)
            });
            prop_assert_eq!(prod.contains(&m).unwrap(), split);
        }
    }

    #[test]
    fn restrict_undoes_extend(i in small(), k in 1usize..=3) {
        prop_assert_eq!(i.extend(k).restrict(i.n_vars()).unwrap(), i);
    }

    #[test]
    fn multiple_of_colon_certificate((i, u) in with_monomial(1)) {
        let by_product = i == MonomialIdeal::principal(u.clone()).product(&i.colon(&u).unwrap()).unwrap();
        prop_assert_eq!(i.is_multiple_of_colon(&u).unwrap(), by_product);
        let scaled = i.scale(&u).unwrap();
        prop_assert!(scaled.is_multiple_of_colon(&u).unwrap());
        prop_assert_eq!(scaled.colon(&u).unwrap(), i);
    }

    #[test]
    fn depth_bookkeeping(i in small()) {
        let r = depth_quotient(&i).unwrap();
        prop_assert_eq!(r.depth + r.pd, r.n_vars);
        prop_assert!(r.depth <= r.n_vars);
        prop_assert_eq!(r.depth, depth_via_polarization(&i, DEFAULT_POLARIZATION_CAP).unwrap().depth);
        prop_assert_eq!(&r, &depth_quotient_with(&i, Exec::Sequential).unwrap());
    }

    #[test]
    fn a_new_variable_adds_one(i in small()) {
        prop_assert_eq!(depth_quotient(&i.extend(1)).unwrap().depth, depth_quotient(&i).unwrap().depth + 1);
    }

    #[test]
    fn colon_does_not_lower_depth((i, u) in with_monomial(2)) {
        prop_assume!(!i.contains(&u).unwrap());
        let c = i.colon(&u).unwrap();
        prop_assert!(depth_quotient(&c).unwrap().depth >= depth_quotient(&i).unwrap().depth);
    }

    #[test]
    fn colon_of_a_multiple_keeps_depth(i in ideal_strategy(3, 1, 3), u in monomial_strategy(3, 1)) {
        let n = i.n_vars();
        let u = Monomial::new(u.exps()[..n].to_vec());
        let mult = i.scale(&u).unwrap();
        prop_assert_eq!(depth_quotient(&mult.colon(&u).unwrap()).unwrap().depth, depth_quotient(&i).unwrap().depth);
    }

    #[test]
    fn rank_matches_dense_elimination(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 0..7)) {
        let sparse: Vec<SparseRow> = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)).collect())
            .collect();
        let dense: Vec<Vec<BigRational>> =
            rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect()).collect();
        prop_assert_eq!(rank_q(sparse), dense_rank(dense));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn stanley_depth_is_exact_and_certified(i in tiny()) {
        prop_assume!(naive_poset(&raw(&i), &i.lcm_exponents()).len() <= 14);
        let r = sdepth_quotient(&i).unwrap();
        prop_assert_eq!(r.sdepth, brute_sdepth(&raw(&i), &i.lcm_exponents()));
        let poset = build_poset(&i, None, 100_000).unwrap();
        prop_assert!(verify_partition(&poset, &r.certificate).is_valid());
        prop_assert!(r.sdepth >= depth_quotient(&i).unwrap().depth);
    }

    #[test]
    fn decision_is_monotone(i in tiny()) {
        let s = sdepth_quotient(&i).unwrap().sdepth;
        let poset = build_poset(&i, None, 100_000).unwrap();
        let cfg = SearchConfig::default();
        for k in 0..=s {
            match has_partition_min_label(&poset, k, &cfg).unwrap() {
                SearchOutcome::Found(p) => {
                    prop_assert!(verify_partition(&poset, &p).is_valid());
                    prop_assert!(p.min_label(&poset).unwrap() >= k);
                }
                SearchOutcome::Infeasible(_) => prop_assert!(false, "no partition at {} below {}", k, s),
            }
        }
        if s < i.n_vars() {
            let infeasible = matches!(has_partition_min_label(&poset, s + 1, &cfg).unwrap(), SearchOutcome::Infeasible(_));
            prop_assert!(infeasible);
        }
    }

    #[test]
    fn larger_cap_gives_the_same_value(i in tiny()) {
        let g = Monomial::new(i.lcm_exponents().iter().map(|e| e + 1).collect());
        let cfg = SdepthConfig { g: Some(g), ..SdepthConfig::default() };
        prop_assert_eq!(sdepth_quotient_with(&i, &cfg).unwrap().sdepth, sdepth_quotient(&i).unwrap().sdepth);
    }

    #[test]
    fn a_new_variable_adds_one_to_stanley_depth(i in tiny()) {
        prop_assert_eq!(sdepth_quotient(&i.extend(1)).unwrap().sdepth, sdepth_quotient(&i).unwrap().sdepth + 1);
    }

    #[test]
    fn colon_does_not_lower_stanley_depth(i in tiny(), u in monomial_strategy(3, 2)) {
        let u = Monomial::new(u.exps()[..i.n_vars()].to_vec());
        prop_assume!(!i.contains(&u).unwrap());
        let c = i.colon(&u).unwrap();
        prop_assert!(sdepth_quotient(&c).unwrap().sdepth >= sdepth_quotient(&i).unwrap().sdepth);
    }

    #[test]
    fn execution_modes_agree(i in small()) {
        let seq = sdepth_quotient_with(&i, &SdepthConfig::with_exec(Exec::Sequential)).unwrap();
        let par = sdepth_quotient_with(&i, &SdepthConfig::with_exec(Exec::Parallel)).unwrap();
        prop_assert_eq!(seq.sdepth, par.sdepth);
        prop_assert_eq!(
            depth_quotient_with(&i, Exec::Sequential).unwrap(),
            depth_quotient_with(&i, Exec::Parallel).unwrap()
        );
    }
}

#[test]
fn cycle_ideals_are_rotation_invariant_and_contain_paths() {
    for n in 3..=9u32 {
        for m in 2..n {
            let j = cycle_ideal(n, m).unwrap();
            for s in 0..n as usize {
                assert_eq!(j.cyclic_shift(s), j);
            }
            let i = path_ideal(n, m).unwrap();
            assert!(i.gens().iter().all(|g| j.gens().contains(g)));
            assert_eq!(j.gens().len() - i.gens().len(), m as usize - 1);
        }
    }
}

#[test]
fn phi_is_nonincreasing_in_t() {
    for n in 1..=12 {
        for m in 1..=n {
            for t in 1..12 {
                assert!(phi(n, m, t + 1) <= phi(n, m, t), "({n},{m},{t})");
            }
        }
    }
}

#[test]
fn witness_colon_is_maximal_or_residue_intersection() {
    for n in 3..=7u32 {
        for m in 2..n {
            let c = t0_alpha(n, m).unwrap();
            for t in [c.t0, c.t0 + 1] {
                let jt = cycle_ideal(n, m).unwrap().power(t).unwrap();
                let w = witness_w(n, m, t).unwrap();
                assert!(!jt.contains(&w).unwrap());
                let expect = if c.d == 1 { MonomialIdeal::maximal(n as usize) } else { u_ideal(n, c.d).unwrap() };
                assert_eq!(jt.colon(&w).unwrap(), expect, "({n},{m},{t})");
            }
        }
    }
}

#[test]
fn symmetry_does_not_change_cycle_values() {
    for (n, m, t) in [(4, 2, 1), (4, 2, 2), (5, 2, 1), (5, 3, 1), (5, 3, 2), (6, 3, 1), (6, 4, 1)] {
        let j = cycle_ideal(n, m).unwrap().power(t).unwrap();
        let mut cfg = SdepthConfig::default();
        let plain = sdepth_quotient_with(&j, &cfg).unwrap().sdepth;
        cfg.search.use_symmetry = true;
        assert_eq!(sdepth_quotient_with(&j, &cfg).unwrap().sdepth, plain, "({n},{m},{t})");
    }
}
