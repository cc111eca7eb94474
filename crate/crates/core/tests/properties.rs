use num_integer::Integer;
use num_rational::Rational64;
use proptest::prelude::*;

use qsnake::kasteleyn::{kasteleyn_matrix, normalize_sign};
use qsnake::matching::{matching_stat, matching_stat_dp};
use qsnake::qrational::{q_cf_eval, q_continuant, q_map_general, q_matrix_eval, QMatrix};
use qsnake::{q_rational, snake_graph, ContinuedFraction, LaurentFraction, LaurentPoly};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-6i64..6, prop::collection::vec(-30i64..30, 0..7)).prop_map(|(d, c)| LaurentPoly::from_coeffs(d, c))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn pair(max: u64) -> impl Strategy<Value = (u64, u64)> {
    (1..=max, 1..=max)
        .prop_filter("coprime", |(a, b)| a.gcd(b) == 1)
        .prop_map(|(a, b)| if a >= b { (a, b) } else { (b, a) })
}

fn small_cf() -> impl Strategy<Value = ContinuedFraction> {
    prop::collection::vec(1i64..5, 1..5).prop_map(|v| ContinuedFraction::new(v).unwrap())
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(), a);
    }

    #[test]
    fn evaluation_at_one_is_a_homomorphism(a in poly(), b in poly()) {
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
    }

    #[test]
    fn degrees_add(a in nonzero_poly(), b in nonzero_poly()) {
        let p = &a * &b;
        prop_assert_eq!(p.min_deg(), a.min_deg() + b.min_deg());
        prop_assert_eq!(p.top_deg().unwrap(), a.top_deg().unwrap() + b.top_deg().unwrap());
    }

    #[test]
    fn mirror_is_an_involution(a in poly(), d in -8i64..8) {
        prop_assert_eq!(a.mirror(d).mirror(d), a.clone());
        prop_assert_eq!(a.mirror(d).eval_at_one(), a.eval_at_one());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&json).unwrap(), a);
    }

    #[test]
    fn fractions_invert(a in nonzero_poly(), b in nonzero_poly()) {
        let f = LaurentFraction::new(a.clone(), b.clone()).unwrap();
        let g = LaurentFraction::new(b, a).unwrap();
        prop_assert_eq!(&f * &g, LaurentFraction::one());
        prop_assert_eq!(&(&f + &g) - &g, f);
    }

    #[test]
    fn four_routes_agree((r, s) in pair(400)) {
        let cf = ContinuedFraction::expand(r, s).unwrap();
        let m = q_matrix_eval(&cf);
        prop_assert_eq!(&q_cf_eval(&cf), &m);
        prop_assert_eq!(&q_continuant(&cf), m.num());
        prop_assert_eq!(q_map_general(Rational64::new(r as i64, s as i64)), m.to_fraction());
        prop_assert_eq!(m.to_fraction().eval_at_one(), (r.into(), s.into()));
    }

    #[test]
    fn parity_of_the_expansion_does_not_matter(cf in small_cf()) {
        let even = cf.even_form();
        let odd = cf.odd_form();
        prop_assert_eq!(q_cf_eval(&even), q_cf_eval(&odd));
        prop_assert_eq!(q_matrix_eval(&even), q_matrix_eval(&odd));
    }

    #[test]
    fn matrix_words_have_monomial_determinant(cf in small_cf()) {
        let det = QMatrix::word(cf.coeffs()).det();
        prop_assert_eq!(det, LaurentPoly::q_pow(cf.sum()));
    }

    #[test]
    fn modular_recurrences((n, d) in (-40i64..40, 1i64..20)) {
        let x = Rational64::new(n, d);
        let q = LaurentFraction::from_poly(LaurentPoly::q_pow(1));
        let fx = q_map_general(x);
        prop_assert_eq!(q_map_general(x + 1), &(&q * &fx) + &LaurentFraction::one());
        if n != 0 {
            let lhs = q_map_general(-x.recip());
            prop_assert_eq!(lhs, -&(&q * &fx).recip());
        }
    }

    #[test]
    fn snake_sizes(cf in small_cf()) {
        let g = snake_graph(&cf);
        let d = (cf.sum() - 1) as usize;
        prop_assert_eq!(g.box_count(), d);
        prop_assert_eq!(g.vertices().len(), 2 * d + 2);
        prop_assert_eq!(g.edges().len(), 3 * d + 1);
    }

    #[test]
    fn dp_matches_enumeration(cf in small_cf()) {
        let g = snake_graph(&cf);
        prop_assert_eq!(matching_stat_dp(&g), matching_stat(&g));
    }

    #[test]
    fn numerator_from_matchings_and_kasteleyn((r, s) in pair(300)) {
        let cf = ContinuedFraction::expand(r, s).unwrap();
        let g = snake_graph(&cf);
        let stat = matching_stat_dp(&g);
        let value = q_rational(r, s).unwrap();
        prop_assert_eq!(&stat.shift(cf.scalar_exponent()), value.num());
        let km = kasteleyn_matrix(&g);
        prop_assert!(km.bandwidth() <= 2);
        prop_assert_eq!(normalize_sign(&km.det()).1, stat);
    }
}
