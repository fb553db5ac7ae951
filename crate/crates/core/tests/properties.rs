use num_traits::Signed;
use proptest::prelude::*;

use chernroots::exact::{int, ratio};
use chernroots::genera::ahat_surface;
use chernroots::lefschetz::holomorphic_target_surface;
use chernroots::{Rational, SymSeries, UniSeries};

fn series(m: usize, d: usize) -> impl Strategy<Value = SymSeries> {
    let term = (
        prop::collection::vec(0u32..=d as u32, m),
        -6i64..=6,
        1i64..=4,
    );
    prop::collection::vec(term, 0..6).prop_map(move |terms| {
        SymSeries::from_terms(m, d, terms.into_iter().map(|(e, p, q)| (e, ratio(p, q)))).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (SymSeries, SymSeries, SymSeries)> {
    (1usize..=4, 0usize..=6).prop_flat_map(|(m, d)| (series(m, d), series(m, d), series(m, d)))
}

fn uni(d: usize) -> impl Strategy<Value = UniSeries> {
    prop::collection::vec((-5i64..=5, 1i64..=3), d + 1)
        .prop_map(|v| UniSeries::new(v.into_iter().map(|(p, q)| ratio(p, q)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_laws((a, b, c) in triple()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        let one = SymSeries::one(a.num_roots(), a.trunc_degree()).unwrap();
        prop_assert_eq!(a.mul(&one).unwrap(), a.clone());
    }

    #[test]
    fn reciprocal_is_two_sided((a, _, _) in triple(), c in 1i64..5) {
        let unit = a.add(&SymSeries::constant(int(c) + a.constant_term().abs(), a.num_roots(), a.trunc_degree()).unwrap()).unwrap();
        let inv = unit.reciprocal().unwrap();
        let one = SymSeries::one(a.num_roots(), a.trunc_degree()).unwrap();
        prop_assert_eq!(unit.mul(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.mul(&unit).unwrap(), one);
    }

    #[test]
    fn scaling_acts_by_degree((a, _, _) in triple(), p in -3i64..=3, q in 1i64..=3) {
        let c = ratio(p, q);
        let scaled = a.scale_roots(&c);
        for k in 0..=a.trunc_degree() {
            let lhs = scaled.homogeneous_part(k).unwrap();
            let rhs = a.homogeneous_part(k).unwrap().scalar_mul(&chernroots::exact::pow(&c, k));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn grading_partitions_series((a, _, _) in triple()) {
        let mut sum = SymSeries::zero(a.num_roots(), a.trunc_degree()).unwrap();
        for k in 0..=a.trunc_degree() {
            sum = sum.add(&a.homogeneous_part(k).unwrap()).unwrap();
        }
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn chern_basis_round_trip((a, _, _) in triple()) {
        prop_assert_eq!(a.to_chern_basis().to_series(a.trunc_degree()), a);
    }

    #[test]
    fn per_root_product_is_multiplicative(m in 1usize..=4, f in uni(5), g in uni(5)) {
        let d = 5;
        let fg = SymSeries::per_root_product(&(&f * &g), m, d).unwrap();
        let prod = SymSeries::per_root_product(&f, m, d).unwrap()
            .mul(&SymSeries::per_root_product(&g, m, d).unwrap()).unwrap();
        prop_assert_eq!(fg, prod);
    }

    #[test]
    fn target_side_equals_ahat(k2 in -10_000i64..10_000, e in -10_000i64..10_000) {
        let closed: Rational = ratio(2 * e - k2, 24);
        prop_assert_eq!(ahat_surface(k2, e), closed.clone());
        prop_assert_eq!(holomorphic_target_surface(k2, e), closed);
    }
}
