use proptest::prelude::*;
use sphtorsion::chernweil::{cw_map, sphere_bundle_torsion_class};
use sphtorsion::reps::{std_rep, Representation, Weight};
use sphtorsion::sympoly::{newton_rewrite, power_sum, GradedPoly};
use sphtorsion::torsion::{
    equivariant_euler, homogeneous_component, orbit_torsion, q_series, reassemble, torsion_series,
};
use sphtorsion::ZetaPoly;

/// Representations without zero weights built from the standard
/// representation, duals, sums, tensors and symmetric/exterior powers.
fn rep_strategy(rank: usize) -> impl Strategy<Value = Representation> {
    let leaf = prop_oneof![
        Just(std_rep(rank).unwrap()),
        Just(std_rep(rank).unwrap().dual()),
        prop::collection::vec((prop::collection::vec(-2i64..=2, rank), 1u64..3), 1..4).prop_map(
            move |ws| Representation::from_weights(rank, ws.into_iter().map(|(w, m)| (Weight(w), m))).unwrap()
        ),
    ];
    leaf.prop_recursive(2, 8, 2, move |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.direct_sum(&b).unwrap()),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.tensor(&b).unwrap()),
            inner.clone().prop_map(|a| a.sym_power(2)),
            inner.clone().prop_map(|a| a.dual()),
            inner.prop_map(|a| if a.dim() >= 2 { a.ext_power(2).unwrap() } else { a }),
        ]
    })
    .prop_filter("no zero weight", |r| !r.has_zero_weight() && r.dim() > 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn orbit_reassembly(rep in (1usize..=3).prop_flat_map(rep_strategy)) {
        let rank = rep.rank();
        let direct = torsion_series(&rep, 6).unwrap();
        let orbits = equivariant_euler(&rep).unwrap();
        prop_assert_eq!(reassemble(&orbits, rank, 6).unwrap(), direct.clone());
        for d in (1..=5).step_by(2) {
            prop_assert!(homogeneous_component(&direct, d).unwrap().is_zero());
        }
        let total: u64 = orbits.iter().map(|o| o.euler_number()).sum();
        prop_assert_eq!(total, rep.dim());
    }

    #[test]
    fn naturality_under_restriction(
        weights in prop::collection::vec((prop::collection::vec(-2i64..=2, 2), 1u64..3), 1..4),
        l in prop::collection::vec(prop::collection::vec(-2i64..=2, 2), 1..=2),
    ) {
        let rep = Representation::from_weights(2, weights.into_iter().map(|(w, m)| (Weight(w), m))).unwrap();
        let restricted = rep.restrict(&l).unwrap();
        prop_assume!(!rep.has_zero_weight() && !restricted.has_zero_weight());
        let lhs = torsion_series(&restricted, 6).unwrap();
        let images: Vec<Vec<i64>> = (0..2).map(|i| l.iter().map(|row| row[i]).collect()).collect();
        let rhs = torsion_series(&rep, 6).unwrap().substitute(&images).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn weyl_invariance(n in 1usize..=4) {
        let t = torsion_series(&std_rep(n).unwrap(), 8).unwrap();
        prop_assert!(t.is_symmetric());
    }

    #[test]
    fn cw_map_is_linear(n in 1usize..=3, a in -3i64..=3, b in -3i64..=3) {
        let p = power_sum(2, n, 6).unwrap();
        let q = power_sum(4, n, 6).unwrap();
        let ca = ZetaPoly::from(a);
        let cb = ZetaPoly::zeta(5, sphtorsion::coeff::rat(b, 2)).unwrap();
        let combo = p.scale(&ca).add(&q.scale(&cb)).unwrap();
        let lhs = cw_map(&combo, n).unwrap();
        let rhs = cw_map(&p, n).unwrap().scale(&ca).add(&cw_map(&q, n).unwrap().scale(&cb));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn newton_rewrite_expands_back() {
    for rank in 1..=5 {
        for j in 1..=6 {
            let p = power_sum(j, rank, 6).unwrap();
            assert_eq!(newton_rewrite(&p, rank).unwrap().expand(), p, "p{j} in rank {rank}");
        }
    }
}

#[test]
fn q_series_is_positive_and_even() {
    let q = q_series(16).unwrap();
    for (e, c) in q.terms() {
        assert_eq!(e[0] % 2, 0);
        let (coeff, sym) = c.as_single_zeta().expect("one zeta symbol per coefficient");
        assert_eq!(sym, e[0] + 1);
        assert!(coeff > &num_traits::Zero::zero());
    }
}

#[test]
fn orbit_contributions_are_q_of_the_weight() {
    let q = q_series(8).unwrap();
    let rep = std_rep(2).unwrap();
    for o in equivariant_euler(&rep).unwrap() {
        let via_q = q.substitute(&[o.weight().coords().to_vec()]).unwrap();
        assert_eq!(orbit_torsion(&o, 8), via_q);
    }
}

#[test]
fn two_paths_through_degree_sixteen() {
    for n in 1..=6 {
        let t: GradedPoly = torsion_series(&std_rep(n).unwrap(), 8).unwrap();
        assert_eq!(cw_map(&t, n).unwrap(), sphere_bundle_torsion_class(n, 8).unwrap(), "n={n}");
    }
}
