//! Algebraic laws of the Schur-basis ring, checked on random inputs.

use num_traits::Zero;
use proptest::prelude::*;

use plethystic::lr::lr_coefficient;
use plethystic::vertex::{ChargedState, LaurentMap, Window};
use plethystic::{from_power_basis, partitions_of, to_power_basis, Partition, Rational, SymFunc};

fn partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    (0..=max_weight).prop_flat_map(|w| {
        let all = partitions_of(w, None, None);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// A sparse combination of at most four Schur functions of degree ≤ `max_degree`.
fn symfunc(max_degree: usize) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition(max_degree), rational()), 0..4).prop_map(SymFunc::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn skew_is_adjoint_to_multiplication(f in symfunc(6), g in symfunc(3), h in symfunc(3)) {
        prop_assert_eq!(f.skew(&g).inner(&h), f.inner(&g.product(&h)));
    }

    #[test]
    fn omega_is_multiplicative(f in symfunc(3), g in symfunc(3)) {
        prop_assert_eq!(f.product(&g).omega(), f.omega().product(&g.omega()));
    }

    #[test]
    fn omega_is_an_isometric_involution(f in symfunc(6), g in symfunc(6)) {
        prop_assert_eq!(f.omega().omega(), f.clone());
        prop_assert_eq!(f.omega().inner(&g.omega()), f.inner(&g));
    }

    #[test]
    fn product_is_commutative_and_associative(f in symfunc(3), g in symfunc(3), h in symfunc(2)) {
        prop_assert_eq!(f.product(&g), g.product(&f));
        prop_assert_eq!(f.product(&g).product(&h), f.product(&g.product(&h)));
    }

    #[test]
    fn skew_by_a_product_is_iterated_skew(f in symfunc(6), g in symfunc(2), h in symfunc(2)) {
        prop_assert_eq!(f.skew(&g.product(&h)), f.skew(&g).skew(&h));
    }

    #[test]
    fn lr_coefficients_are_symmetric_under_swap_and_conjugation(mu in partition(4), nu in partition(4)) {
        let product = SymFunc::schur(mu.clone()).product(&SymFunc::schur(nu.clone()));
        for (lambda, c) in product.iter() {
            let c = c.to_integer();
            prop_assert_eq!(lr_coefficient(lambda, &nu, &mu) as i64, i64::try_from(c.clone()).unwrap());
            prop_assert_eq!(
                lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()) as i64,
                i64::try_from(c).unwrap()
            );
        }
    }

    #[test]
    fn power_basis_round_trip(f in symfunc(8)) {
        prop_assert_eq!(from_power_basis(&to_power_basis(&f)), f);
    }

    #[test]
    fn partitions_conjugate_and_contain_consistently(a in partition(12), b in partition(12)) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.contains(&b), a.conjugate().contains(&b.conjugate()));
    }

    #[test]
    fn partition_text_round_trip(a in partition(12)) {
        prop_assert_eq!(a.to_string().parse::<Partition>().unwrap(), a);
    }

    #[test]
    fn symfunc_json_round_trip(f in symfunc(8)) {
        let text = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<SymFunc>(&text).unwrap(), f);
    }

    #[test]
    fn charged_state_json_round_trip(sectors in prop::collection::vec((-3i64..=3, symfunc(4)), 0..4)) {
        let mut state = ChargedState::zero();
        for (c, f) in &sectors {
            state.add_sector(*c, f);
        }
        let text = serde_json::to_string(&state).unwrap();
        prop_assert_eq!(serde_json::from_str::<ChargedState>(&text).unwrap(), state);
    }
}

#[test]
fn every_schur_function_survives_the_power_basis() {
    for n in 0..=10 {
        for lambda in partitions_of(n, None, None) {
            let s = SymFunc::schur(lambda.clone());
            assert_eq!(from_power_basis(&to_power_basis(&s)), s, "λ = {lambda}");
        }
    }
}

#[test]
fn skew_outside_the_shape_is_zero() {
    let s = |p: &[usize]| SymFunc::schur(Partition::new(p.to_vec()).unwrap());
    assert!(s(&[2, 1]).skew(&s(&[3])).is_zero());
    assert!(s(&[1]).skew(&s(&[1, 1])).is_zero());
    assert!(s(&[2]).inner(&s(&[1, 1])).is_zero());
}

#[test]
fn window_and_laurent_map_json_round_trip() {
    let window = Window::new().with("z", -2, 3).with("w", 0, 1);
    let text = serde_json::to_string(&window).unwrap();
    assert_eq!(serde_json::from_str::<Window>(&text).unwrap(), window);
    assert!(serde_json::from_str::<Window>(r#"{"vars":["z"],"lo":[0],"hi":[1],"extra":1}"#).is_err());

    let spec: serde_json::Value = serde_json::json!({
        "vars": ["z"],
        "coeffs": [{"exp": [2], "value": [{"partition": [1], "num": "1", "den": "2"}]}]
    });
    let map: LaurentMap<SymFunc> = serde_json::from_value(spec.clone()).unwrap();
    assert_eq!(map.get(&[2]).unwrap().coeff(&Partition::row(1)), Rational::new(1.into(), 2.into()));
    assert_eq!(serde_json::to_value(&map).unwrap(), spec);
}
