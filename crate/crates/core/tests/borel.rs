use ospq::borel::ansatz::{self, AnsatzFunctions};
use ospq::borel::coproduct::{self, BorelGen, BorelTensor};
use ospq::borel::rll;
use ospq::borel::BorelSeries;
use ospq::classical::quantum_r;
use ospq::ring::{q, qi};
use ospq::scalar::{self, p, p_pow};
use ospq::text::parse_poly;
use ospq::{Error, Poly};

const N: u32 = 16;

fn rel(s: &str) -> Poly {
    parse_poly(s, &rll::alphabet()).unwrap()
}

#[test]
fn rll_span_matches_listed_relations() {
    let rep = rll::rll_span(&rll::r_plus(), &[q(3, 7)]).unwrap();
    assert!(rep.equal);
    assert_eq!(rep.points, vec![(q(3, 7), true)]);
}

#[test]
fn unflipped_r_gives_a_different_span() {
    assert!(!rll::rll_span(&quantum_r(), &[]).unwrap().equal);
}

#[test]
fn listed_relations_lie_in_the_residual_span() {
    let res = rll::rll_residuals(&rll::r_plus());
    for x in [rel("A*F - F*A"), rel("B*B - 1/2*p*A*A + 1/2*p")] {
        assert!(ospq::span::contained_in(&[ospq::span::to_frac(&x)], &res.iter().map(ospq::span::to_frac).collect::<Vec<_>>(), 2).unwrap());
    }
}

#[test]
fn rll_classical_limit() {
    assert!(rll::classical_rll_span().unwrap());
}

#[test]
fn series_sqrt_coefficients() {
    let k = ansatz::e_sigma(8);
    let c = k.x_coeffs().unwrap();
    assert_eq!(c[..3], [scalar::rat(qi(1)), p_pow(q(1, 2), 1), p_pow(q(-1, 8), 2)]);
    assert_eq!(c[3], p_pow(q(1, 16), 3));
}

#[test]
fn series_errors() {
    let px = BorelSeries::from_x_coeffs(&[scalar::rat(qi(0)), p()], 8);
    assert_eq!(px.sqrt(), Err(Error::NoSquareRoot));
    assert_eq!(px.inverse(), Err(Error::NotInvertible));
    let two = BorelSeries::constant(scalar::rat(qi(3)), 8);
    assert_eq!(two.sqrt(), Err(Error::NoSquareRoot));
    assert!(BorelSeries::h(8).inverse().is_err());
}

#[test]
fn ansatz_solutions_at_default_truncation() {
    for f in [AnsatzFunctions::particular(N).unwrap(), AnsatzFunctions::trivial(N), AnsatzFunctions::linear_family(N).unwrap()] {
        assert!(ansatz::check_ansatz_conditions(&f).unwrap());
        assert!(ansatz::verify_rll_solution(&f));
    }
}

#[test]
fn wrong_ansatz_is_rejected() {
    let mut f = AnsatzFunctions::particular(N).unwrap();
    f.p = f.p.scale(&scalar::rat(q(1, 2)));
    assert!(!ansatz::check_ansatz_conditions(&f).unwrap());
    assert!(!ansatz::verify_rll_solution(&f));
    let mut g = AnsatzFunctions::particular(N).unwrap();
    g.m = -g.m;
    assert!(!ansatz::verify_rll_solution(&g));
}

#[test]
fn v_squared_reproduces_delta_x() {
    assert!(coproduct::v_square_defect(N).is_zero());
    let one = BorelSeries::one(N);
    let x = BorelSeries::x(N);
    let dx = BorelTensor::product_of(&[&x, &one], N)
        .add(&BorelTensor::product_of(&[&one, &x], N))
        .add(&BorelTensor::product_of(&[&x, &x], N).scale(&p()));
    assert_eq!(coproduct::coproduct_borel(BorelGen::X, N), dx);
}

#[test]
fn h_commutes_with_v_as_a_half() {
    let d = coproduct::relation_defects(N);
    assert!(d.iter().all(|(_, x)| x.is_zero()));
}

#[test]
fn group_like_and_coassociative() {
    assert!(coproduct::group_like_defect(N).is_zero());
    assert!(coproduct::e_sigma_consistency_defect(N).is_zero());
    assert!(coproduct::coassociativity_check(N));
}

#[test]
fn counit_axioms() {
    for g in BorelGen::HOPF {
        let (a, b) = coproduct::counit_defects(g, N);
        assert!(a.is_zero() && b.is_zero(), "{}", g.name());
    }
    assert_eq!(coproduct::counit_borel(BorelGen::ESigma), scalar::rat(qi(1)));
}

#[test]
fn antipode_candidate_closes() {
    for g in BorelGen::HOPF {
        let (a, b) = coproduct::antipode_defects(g, 8);
        assert!(a.is_zero() && b.is_zero(), "{}", g.name());
    }
}

#[test]
fn perturbed_coproduct_breaks_homomorphism() {
    // Dropping the middle term of Δ(H) breaks [H, V] = V/2.
    let h = BorelSeries::h(8);
    let em2 = {
        let e = ansatz::e_sigma(8).inverse().unwrap();
        &e * &e
    };
    let one = BorelSeries::one(8);
    let bad = BorelTensor::product_of(&[&one, &h], 8).add(&BorelTensor::product_of(&[&h, &em2], 8));
    let dv = coproduct::coproduct_borel(BorelGen::V, 8);
    let defect = bad.mul(&dv).sub(&dv.mul(&bad)).sub(&dv.scale(&scalar::rat(q(1, 2))));
    assert!(!defect.is_zero());
}
