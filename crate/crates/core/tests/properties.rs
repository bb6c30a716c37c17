use num_traits::Zero;
use proptest::prelude::*;

use ospq::borel::ansatz::AnsatzFunctions;
use ospq::borel::series::{self, mono_word, ordering_system};
use ospq::borel::{BorelSeries, Mono};
use ospq::frt;
use ospq::ring::{q, qi};
use ospq::scalar::{self, p, Scalar};
use ospq::supermatrix::{graded_embed, G3};
use ospq::{Poly, QSqrt2, Ring, SuperMatrix, Word};

fn small_q() -> impl Strategy<Value = ospq::Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn qsqrt2() -> impl Strategy<Value = QSqrt2> {
    (small_q(), small_q()).prop_map(|(a, b)| QSqrt2::new(a, b))
}

fn scalar_s() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(qsqrt2(), 0..3).prop_map(Scalar::from_coeffs)
}

/// Polynomials in the six independent generators of degree at most two.
fn generator_poly() -> impl Strategy<Value = Poly> {
    let word = prop::collection::vec(prop::sample::select(frt::GENERATORS.to_vec()), 0..3);
    prop::collection::vec((word, -3i64..=3), 1..4)
        .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|(w, c)| (Word::new(&w), scalar::rat(qi(c)) + p().scale(&qi(c % 2))))))
}

/// Polynomials of degree at most one; products with relations stay cheap to reduce.
fn linear_poly() -> impl Strategy<Value = Poly> {
    let word = prop::collection::vec(prop::sample::select(frt::GENERATORS.to_vec()), 0..2);
    prop::collection::vec((word, -3i64..=3), 1..3).prop_map(|ts| Poly::from_terms(ts.into_iter().map(|(w, c)| (Word::new(&w), scalar::rat(qi(c))))))
}

fn homogeneous_matrix(grade: u8) -> impl Strategy<Value = SuperMatrix<ospq::Q>> {
    prop::collection::vec(small_q(), 9).prop_map(move |v| {
        SuperMatrix::from_fn(G3.to_vec(), |i, j| if (G3[i] + G3[j]) % 2 == grade { v[3 * i + j].clone() } else { ospq::Q::zero() })
    })
}

fn graded_matrix() -> impl Strategy<Value = (u8, SuperMatrix<ospq::Q>)> {
    (0u8..2).prop_flat_map(|g| (Just(g), homogeneous_matrix(g)))
}

fn mono() -> impl Strategy<Value = Mono> {
    (0u8..2, 0u32..3, 0u32..3).prop_map(|(v, h, x)| Mono::new(v, h, x))
}

fn series_s(order: u32) -> impl Strategy<Value = BorelSeries> {
    prop::collection::vec((mono(), -3i64..=3), 0..4).prop_map(move |ts| {
        let mut s = BorelSeries::zero(order);
        for (m, c) in ts {
            s.add_term(m, scalar::rat(qi(c)));
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn qsqrt2_inverse(x in qsqrt2()) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(x.clone() * x.unit_inverse().unwrap(), QSqrt2::from_i64(1));
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in scalar_s(), y in scalar_s(), v in small_q()) {
        prop_assert_eq!(scalar::eval_p(&(x.clone() * y.clone()), &v), scalar::eval_p(&x, &v) * scalar::eval_p(&y, &v));
    }

    #[test]
    fn free_product_is_associative(a in generator_poly(), b in generator_poly(), c in generator_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn normal_form_respects_products(a in generator_poly(), b in generator_poly()) {
        let pres = frt::presentation();
        let direct = pres.nf(&(&a * &b));
        let staged = pres.nf(&(&pres.nf(&a) * &pres.nf(&b)));
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn antipode_reverses_products(a in generator_poly(), b in generator_poly()) {
        let pres = frt::presentation();
        // Products of even elements reverse without signs.
        let even = |x: &Poly| Poly::from_terms(x.terms().filter(|(w, _)| w.grade(&pres.alphabet) == 0).map(|(w, c)| (w.clone(), c.clone())));
        let (a, b) = (even(&a), even(&b));
        let lhs = pres.nf(&frt::antipode(&(&a * &b)));
        let rhs = pres.nf(&(&frt::antipode(&b) * &frt::antipode(&a)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn graded_embedding_is_multiplicative(a in graded_matrix(), b in graded_matrix(), c in graded_matrix(), d in graded_matrix()) {
        let lhs = &graded_embed(&[&a.1, &b.1]) * &graded_embed(&[&c.1, &d.1]);
        let ac = &a.1 * &c.1;
        let bd = &b.1 * &d.1;
        let rhs = graded_embed(&[&ac, &bd]);
        let rhs = if b.0 * c.0 == 1 { rhs.scale(&qi(-1)) } else { rhs };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn closed_form_matches_rewriting(a in mono(), b in mono()) {
        let rs = ordering_system();
        let closed = &BorelSeries::monomial(a, scalar::rat(qi(1)), 64) * &BorelSeries::monomial(b, scalar::rat(qi(1)), 64);
        let word = rs.normal_form(&Poly::word(mono_word(&a).concat(&mono_word(&b))));
        prop_assert_eq!(series::from_poly(&word, 64).unwrap(), closed);
    }

    #[test]
    fn series_product_is_associative(x in series_s(6), y in series_s(6), z in series_s(6)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn sqrt_and_square_invert_each_other(cs in prop::collection::vec(-3i64..=3, 1..5)) {
        let mut coeffs = vec![scalar::rat(qi(1))];
        coeffs.extend(cs.iter().map(|&c| scalar::rat(qi(c)) + p().scale(&qi(c))));
        let f = BorelSeries::from_x_coeffs(&coeffs, 12);
        let sq = &f * &f;
        prop_assert_eq!(sq.sqrt().unwrap(), f.clone());
        let r = f.sqrt().unwrap();
        prop_assert_eq!(&r * &r, f.clone());
        prop_assert_eq!(&f * &f.inverse().unwrap(), BorelSeries::one(12));
    }

    #[test]
    fn ansatz_prefix_consistency(n in 5u32..14) {
        let hi = AnsatzFunctions::linear_family(n).unwrap();
        let lo = AnsatzFunctions::linear_family(n - 1).unwrap();
        prop_assert_eq!(hi.truncated(n - 1), lo);
        prop_assert!(ospq::borel::ansatz::check_ansatz_conditions(&hi).unwrap());
    }

    #[test]
    fn span_verdict_ignores_points(seed in any::<u64>()) {
        let s = vec![Poly::word(Word::new(&[1, 0])) - Poly::word(Word::new(&[0, 1])) - Poly::letter(0).scale(&p())];
        let t = vec![Poly::word(Word::new(&[1, 0])) - Poly::word(Word::new(&[0, 1])) + Poly::letter(0).scale(&p())];
        let pts = frt::seeded_points(seed, 1);
        prop_assert!(!ospq::span::span_equal(&s, &t, 3, &pts).unwrap().equal);
        prop_assert!(ospq::span::span_equal(&s, &s, 3, &pts).unwrap().equal);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn ideal_elements_reduce_to_zero(a in linear_poly(), b in linear_poly(), i in 0usize..18) {
        let pres = frt::presentation();
        let rel = &pres.all_relations()[i];
        prop_assert!(pres.nf(&(&(&a * rel) * &b)).is_zero());
    }

    #[test]
    fn coproduct_kills_the_ideal(a in linear_poly(), i in 0usize..18) {
        let pres = frt::presentation();
        let cp = frt::Coproduct::new(pres);
        let x = &a * &pres.all_relations()[i];
        prop_assert!(cp.apply(&x).is_zero());
    }
}
