use proptest::prelude::*;

use su21::catalog::{instantiate_at, load_catalog};
use su21::field::Rational;
use su21::liealg::{conjugate_subalgebra, is_closed, is_real_span, span_equal};
use su21::verifier::{verify_case, SampleBindings, Status};
use su21::FieldElement;

fn rational() -> impl Strategy<Value = FieldElement> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| FieldElement::from_rational(Rational::new(n, d)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 6, ..ProptestConfig::default() })]

    // Whenever the transporter, cocycle and coset checks pass, so does the real point.
    #[test]
    fn generic_routes_reach_real_points(mu in rational()) {
        let cat = load_catalog();
        let range = cat.family("u_1_7").unwrap().parameter.clone().unwrap();
        prop_assume!(range.contains(&mu));
        let mut b = SampleBindings::new();
        b.insert("u_1_7".into(), vec![mu.clone()]);
        b.insert("v_3".into(), vec![mu.clone()]);
        let results = verify_case(cat.case("c07_04").unwrap(), &b);
        for r in results.iter().filter(|r| r.check_name.ends_with(&format!("@{mu}"))) {
            prop_assert_eq!(r.status, Status::Pass, "{}", r.check_name);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn parametrized_rows_stay_closed_and_real(x in rational()) {
        for f in load_catalog().real_families.iter().filter(|f| f.is_parametrized()) {
            if let Ok(u) = instantiate_at(f, Some(&x)) {
                prop_assert!(is_closed(&u).0, "{}", f.label);
                prop_assert!(is_real_span(&u.complexify()), "{}", f.label);
                prop_assert_eq!(u.dim(), f.dim);
            } else {
                prop_assert!(!f.parameter.as_ref().unwrap().contains(&x));
            }
        }
    }

    #[test]
    fn printed_conjugator_maps_v4_to_u17(x in rational()) {
        let cat = load_catalog();
        let v4 = cat.family("v_4").unwrap();
        prop_assume!(v4.parameter.as_ref().unwrap().contains(&x));
        let src = instantiate_at(v4, Some(&x)).unwrap();
        let dst = instantiate_at(cat.family("u_1_7").unwrap(), Some(&x)).unwrap();
        let g = cat.witness("c_v4").unwrap();
        prop_assert!(span_equal(&conjugate_subalgebra(g, &src).unwrap(), &dst).unwrap());
    }
}
