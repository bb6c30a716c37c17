use num_traits::Zero;
use ospq::classical::quantum_r;
use ospq::frt::*;
use ospq::ring::qi;
use ospq::scalar;
use ospq::text::{format_poly, parse_poly};
use ospq::tensor::Tensor;
use ospq::{Error, Poly};

fn show(x: &Poly) -> String {
    format_poly(x, &presentation().alphabet)
}

fn poly(s: &str) -> Poly {
    parse_poly(s, &presentation().alphabet).unwrap()
}

#[test]
fn compiled_system_is_confluent() {
    let pres = presentation();
    assert_eq!(pres.system.len(), 18);
    assert!(pres.system.overlap_check(DEGREE_BOUND).is_empty());
    assert!(pres.system.rules().iter().all(|r| r.lhs.len() == 2));
}

#[test]
fn unimodularity_snapshot() {
    assert_eq!(show(&presentation().unimodularity), "a*d - delta*alpha - c*b + p*c*d - 1/2*p*c*a - 1");
}

#[test]
fn rtt_residuals_reduce_to_zero() {
    let pres = presentation();
    let raw = rtt_residuals(&quantum_r(), &t_matrix());
    assert_eq!(raw.len(), 81);
    assert!(raw.iter().any(|x| !x.is_zero()));
    let reduced = reduced_rtt_residuals(pres);
    for (i, x) in reduced.iter().enumerate() {
        assert!(x.is_zero(), "entry {i}: {}", show(x));
    }
}

#[test]
fn orthogonality_residuals_reduce_to_zero() {
    let reduced = reduced_orthogonality_residuals(presentation()).unwrap();
    assert_eq!(reduced.len(), 18);
    assert!(reduced.iter().all(|x| x.is_zero()));
}

#[test]
fn span_certificate_both_ways() {
    let report = rtt_span_certificate(presentation(), &seeded_points(5, 2)).unwrap();
    assert!(report.equal);
    assert!(report.points.iter().all(|(_, ok)| *ok));
    assert_eq!(report.basis_sizes, (18, 18));
}

#[test]
fn e_squared_from_orthogonality() {
    let pres = presentation();
    let r = e_square_residual().unwrap();
    assert!(pres.reduce(&(r - e_square_target())).is_zero());
    // The eliminated `e` is a root of the quadratic.
    assert!(pres.reduce(&e_square_target()).is_zero());
}

#[test]
fn e_inverse_within_degree_bound() {
    let pres = presentation();
    let terms = e_inverse_terms(DEGREE_BOUND);
    let (left, right) = e_inverse_defects(pres, DEGREE_BOUND);
    let tail = pres.nf(&e_inverse_tail(terms));
    assert_eq!(left, tail);
    assert_eq!(right, tail);
    assert!(left.truncate_degree(DEGREE_BOUND).is_zero());
    assert!(tail.degree() > Some(DEGREE_BOUND));
}

#[test]
fn derived_metric_is_graded_and_one_dimensional() {
    let dm = derive_metric(&quantum_r()).unwrap();
    assert!(dm.graded);
    assert_eq!(dm.dims, (0, 1));
    assert!(proportional(&dm.c, &metric()));
}

#[test]
fn reference_metric_fails_crossing() {
    let r = quantum_r();
    let rf = r.map(|x| ospq::RatFunc::from_poly(x.clone()));
    assert_eq!(crossing_image(&r, &metric(), true).unwrap(), rf);
    assert_ne!(crossing_image(&r, &reference_metric(), true).unwrap(), rf);
}

#[test]
fn derived_metric_at_zero_is_antidiagonal() {
    let dm = derive_metric(&quantum_r()).unwrap();
    let c0 = dm.c.map(|x| scalar::specialize(x.as_poly().unwrap(), &qi(0)));
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(c0.get(i, j).is_zero(), i + j != 2, "({i},{j})");
        }
    }
}

#[test]
fn coproduct_of_a() {
    let pres = presentation();
    let gamma = pres.reduce(&eliminated(GAMMA).unwrap());
    let expect = Tensor::from_polys(&[Poly::letter(A), Poly::letter(A)])
        + Tensor::from_polys(&[Poly::letter(ALPHA), gamma])
        + Tensor::from_polys(&[Poly::letter(B), Poly::letter(C)]);
    assert_eq!(coproduct_letter(pres, A), expect);
}

#[test]
fn coproduct_is_a_homomorphism() {
    let pres = presentation();
    let cp = Coproduct::new(pres);
    for (i, r) in pres.all_relations().iter().enumerate() {
        assert!(cp.apply(r).is_zero(), "relation {i}");
    }
}

#[test]
fn coassociative_with_counit() {
    let cp = Coproduct::new(presentation());
    for id in GENERATORS {
        assert!(cp.coassociator(id).is_zero(), "letter {id}");
        let (l, r) = cp.counit_defects(id);
        assert!(l.is_zero() && r.is_zero(), "letter {id}");
    }
}

#[test]
fn counit_kills_the_ideal() {
    let pres = presentation();
    assert_eq!(counit_poly(&Poly::letter(E)), scalar::rat(qi(1)));
    for r in pres.all_relations() {
        assert!(counit_poly(&r).is_zero(), "{}", show(&r));
    }
}

#[test]
fn antipode_images() {
    let pres = presentation();
    assert_eq!(show(&pres.reduce(&antipode(&Poly::letter(A)))), "d - 1/2*p*c");
    assert_eq!(show(&antipode(&Poly::letter(C))), "-c");
    // Reversal with a sign for two odd letters.
    let x = antipode(&(Poly::letter(ALPHA) * Poly::letter(DELTA)));
    let y = -(antipode(&Poly::letter(DELTA)) * antipode(&Poly::letter(ALPHA)));
    assert_eq!(x, y);
}

#[test]
fn antipode_axioms_and_ideal() {
    let pres = presentation();
    let (l, r) = antipode_axiom_defects(pres);
    assert!(l.is_zero() && r.is_zero());
    for rel in pres.all_relations() {
        assert!(pres.nf(&antipode(&rel)).is_zero(), "{}", show(&rel));
    }
}

#[test]
fn antipode_matches_metric_form() {
    let pres = presentation();
    let from_metric = antipode_matrix_from_metric(&t_matrix(), &metric()).unwrap();
    assert_eq!(from_metric.map(|x| pres.reduce(x)), antipode_matrix().map(|x| pres.reduce(x)));
}

#[test]
fn antipode_squared_regression() {
    let pres = presentation();
    let got: Vec<String> = antipode_squared(pres).iter().map(|(_, x)| show(x)).collect();
    assert_eq!(got, ["a + p*c", "alpha + p*delta", "b + p*d - p*a - p^2*c", "c", "delta", "d - p*c"]);
    assert!(antipode_squared_homomorphism_defects(pres).iter().all(|x| x.is_zero()));
}

#[test]
fn classical_limit_is_graded_commutative() {
    let pres = presentation();
    for (label, d) in classical_limit_defects(pres).unwrap() {
        assert!(d.is_zero(), "{label}: {}", show(&d));
    }
    assert!(classical_antipode_defects().unwrap().iter().all(|x| x.is_zero()));
    let (rtt, orth) = classical_residual_defects().unwrap();
    assert!(rtt.iter().all(|x| x.is_zero()));
    assert!(orth.iter().all(|x| x.is_zero()));
    let at_zero: Vec<Poly> = defining_polys().iter().map(classical_limit).collect();
    assert!(at_zero.contains(&(poly("alpha*alpha"))));
    assert!(at_zero.contains(&(poly("delta*delta"))));
}

#[test]
fn defining_relations_alone_leave_residuals() {
    let (survivors, report) = defining_relations_alone(&seeded_points(3, 1)).unwrap();
    assert_eq!(survivors, 24);
    assert!(!report.equal);
}

#[test]
fn unscaled_c_alpha_is_inconsistent() {
    match surviving_rtt_residuals(&relations_with_unscaled_c_alpha()) {
        Err(Error::NonUnitLeading(c)) => assert_eq!(c, "[0, 1/2, -1/2]"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn negative_controls() {
    let pres = presentation();
    let flipped = ospq::span::span_equal(&eliminated_residuals().unwrap(), &sign_flipped_relations(pres), DEGREE_BOUND, &[]).unwrap();
    assert!(!flipped.equal);
    for i in 0..pres.system.len() {
        assert!(!pres.system.without_rule(i).overlap_check(DEGREE_BOUND).is_empty(), "rule {i}");
    }
}

#[test]
fn specialization_points_never_change_outcome() {
    let pres = presentation();
    let a = rtt_span_certificate(pres, &seeded_points(7, 1)).unwrap();
    let b = rtt_span_certificate(pres, &seeded_points(8, 1)).unwrap();
    assert_eq!(a.equal, b.equal);
    assert_ne!(a.points[0].0, b.points[0].0);
}
