//! Registry of named checks grouped into suites, with timing and reports.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::borel::{ansatz, coproduct, rll, series, BorelSeries};
use crate::classical::{self, Gen};
use crate::error::{Error, Result};
use crate::frt;
use crate::ring::{qi, Q};
use crate::scalar::{self, format_scalar};
use crate::supermatrix::ybe_check;
use crate::text::{format_matrix, format_poly, format_scalar_matrix, format_word};
use crate::{Poly, TensorElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Config {
    pub truncation: u32,
    pub seed: u64,
    /// Rational values of `p` used by the accelerated span passes.
    pub points: Vec<String>,
}

impl Config {
    pub fn new(truncation: u32, seed: u64) -> Self {
        let points = frt::seeded_points(seed, 2).iter().map(|q| q.to_string()).collect();
        Config { truncation, seed, points }
    }

    fn point_values(&self) -> Vec<Q> {
        frt::seeded_points(self.seed, 2)
    }
}

impl Default for Config {
    fn default() -> Self {
        Config::new(crate::borel::DEFAULT_TRUNCATION, 0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub details: String,
    pub elapsed_ms: u64,
    pub config: Config,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Classical,
    RMatrix,
    Ybe,
    Rtt,
    Orthogonality,
    Hopf,
    BorelRll,
    BorelAnsatz,
    BorelCoproduct,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Classical,
        Suite::RMatrix,
        Suite::Ybe,
        Suite::Rtt,
        Suite::Orthogonality,
        Suite::Hopf,
        Suite::BorelRll,
        Suite::BorelAnsatz,
        Suite::BorelCoproduct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Classical => "classical",
            Suite::RMatrix => "r-matrix",
            Suite::Ybe => "ybe",
            Suite::Rtt => "rtt",
            Suite::Orthogonality => "orthogonality",
            Suite::Hopf => "hopf",
            Suite::BorelRll => "borel-rll",
            Suite::BorelAnsatz => "borel-ansatz",
            Suite::BorelCoproduct => "borel-coproduct",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

/// Result of one check body.
pub struct Outcome {
    pub pass: bool,
    pub details: String,
}

impl Outcome {
    fn new(pass: bool, details: impl Into<String>) -> Self {
        Outcome { pass, details: details.into() }
    }
}

type Body = fn(&Config) -> Result<Outcome>;

/// A registered check; `anchor` names the claim it tests.
pub struct Check {
    pub name: &'static str,
    pub suite: Suite,
    pub anchor: &'static str,
    body: Body,
}

impl Check {
    pub fn run(&self, config: &Config) -> CheckReport {
        let t = Instant::now();
        let (status, details) = match (self.body)(config) {
            Ok(o) => (if o.pass { Status::Pass } else { Status::Fail }, format!("[{}] {}", self.anchor, o.details)),
            Err(e) => (Status::Fail, format!("[{}] error: {e}", self.anchor)),
        };
        CheckReport { name: self.name.to_string(), status, details, elapsed_ms: t.elapsed().as_millis() as u64, config: config.clone() }
    }
}

macro_rules! check {
    ($suite:ident, $name:literal, $anchor:literal, $body:expr) => {
        Check { name: $name, suite: Suite::$suite, anchor: $anchor, body: $body }
    };
}

pub fn registry() -> Vec<Check> {
    vec![
        check!(Classical, "classical.jacobi", "osp(1|2) bracket table", check_jacobi),
        check!(Classical, "classical.representation", "defining 3-dimensional representation", check_representation),
        check!(Classical, "classical.lowering-operators", "derived lowering generators", check_lowering),
        check!(Classical, "classical.triangular", "triangular r-matrices r1, r2", check_triangular),
        check!(Classical, "classical.quasitriangular", "r3 in both forms", check_quasitriangular),
        check!(Classical, "classical.casimir", "symmetric invariant element", check_casimir),
        check!(Classical, "classical.families", "two-parameter and three-parameter families", check_families),
        check!(Classical, "classical.r3-parameter", "absorption of t into p", check_r3_parameter),
        check!(RMatrix, "r-matrix.r2-embedding", "graded matrix of r2", check_r2_embedding),
        check!(RMatrix, "r-matrix.exponential", "R = exp(2p r2)", check_exponential),
        check!(RMatrix, "r-matrix.inverse", "R^-1 = R21", check_r_inverse),
        check!(Ybe, "ybe.desuperized", "Yang-Baxter equation for the sign-twisted R", check_ybe),
        check!(Rtt, "rtt.compiled-system", "defining relations with deformed unimodularity", check_compiled),
        check!(Rtt, "rtt.residuals", "RTT = TTR after elimination", check_rtt_residuals),
        check!(Rtt, "rtt.span", "mutual containment of residuals and relations", check_rtt_span),
        check!(Rtt, "rtt.classical-limit", "graded commutativity at p = 0", check_rtt_classical),
        check!(Rtt, "rtt.defining-relations-alone", "relations without unimodularity", check_defining_alone),
        check!(Rtt, "rtt.unscaled-c-alpha", "[c, alpha] without the factor p", check_unscaled),
        check!(Rtt, "rtt.negative-controls", "perturbed R, sign-flipped relation, dropped rule", check_negative_controls),
        check!(Orthogonality, "orthogonality.metric", "derived metric against the reference form", check_metric),
        check!(Orthogonality, "orthogonality.crossing", "R = C1 (R^t1)^-1 C1^-1", check_crossing),
        check!(Orthogonality, "orthogonality.residuals", "T C T^t C^-1 = C T^t C^-1 T = 1", check_orthogonality),
        check!(Orthogonality, "orthogonality.e-square", "quadratic equation for e", check_e_square),
        check!(Orthogonality, "orthogonality.e-inverse", "inverse of e", check_e_inverse),
        check!(Orthogonality, "orthogonality.classical-limit", "undeformed constraints", check_orthogonality_classical),
        check!(Hopf, "hopf.coproduct", "matrix comultiplication", check_coproduct),
        check!(Hopf, "hopf.coassociativity", "coassociativity on generators", check_coassociativity),
        check!(Hopf, "hopf.counit", "counit axioms and ideal", check_counit),
        check!(Hopf, "hopf.antipode", "antipode table and axioms", check_antipode),
        check!(Hopf, "hopf.antipode-squared", "S^2 images", check_antipode_squared),
        check!(Hopf, "hopf.classical-limit", "undeformed Hopf structure", check_hopf_classical),
        check!(BorelRll, "borel-rll.normal-ordering", "normal order V^e H^m X^n", check_normal_ordering),
        check!(BorelRll, "borel-rll.span", "R+ L+1 L+2 = L+2 L+1 R+", check_rll_span),
        check!(BorelRll, "borel-rll.classical-limit", "graded commutativity at p = 0", check_rll_classical),
        check!(BorelAnsatz, "borel-ansatz.particular", "e^sigma solution", check_particular),
        check!(BorelAnsatz, "borel-ansatz.trivial", "K = 1 solution", check_trivial),
        check!(BorelAnsatz, "borel-ansatz.linear-family", "K = 1 + pX solution", check_linear_family),
        check!(BorelAnsatz, "borel-ansatz.prefix-consistency", "truncation order independence", check_prefix),
        check!(BorelCoproduct, "borel-coproduct.v-squared", "Delta(V)^2 = Delta(X)/4", check_v_squared),
        check!(BorelCoproduct, "borel-coproduct.group-like", "Delta(e^sigma)", check_group_like),
        check!(BorelCoproduct, "borel-coproduct.homomorphism", "Delta on Borel relations", check_borel_homomorphism),
        check!(BorelCoproduct, "borel-coproduct.coassociativity", "coassociativity on e^sigma, V, H", check_borel_coassociativity),
        check!(BorelCoproduct, "borel-coproduct.counit", "counit axioms", check_borel_counit),
        check!(BorelCoproduct, "borel-coproduct.antipode-candidate", "S(e^sigma) = e^-sigma, S(V) = -e^-sigma V", check_borel_antipode),
    ]
}

/// Runs every check of the selected suites; reports come back sorted by name.
pub fn run(suites: &[Suite], config: &Config) -> Vec<CheckReport> {
    let checks: Vec<Check> = registry().into_iter().filter(|c| suites.contains(&c.suite)).collect();
    let mut reports: Vec<CheckReport> = checks.par_iter().map(|c| c.run(config)).collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

pub fn all_pass(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}

fn nonzero_count(xs: &[Poly]) -> usize {
    xs.iter().filter(|x| !x.is_zero()).count()
}

fn first_nonzero(xs: &[Poly], al: &crate::Alphabet) -> String {
    xs.iter().find(|x| !x.is_zero()).map(|x| format!("; first: {}", format_poly(x, al))).unwrap_or_default()
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "yes"
    } else {
        "no"
    }
}

// ---- classical ----

fn check_jacobi(_: &Config) -> Result<Outcome> {
    let v = classical::jacobi_violations();
    Ok(Outcome::new(v.is_empty(), format!("{} violating triples out of {}", v.len(), Gen::ALL.len().pow(3))))
}

fn check_representation(_: &Config) -> Result<Outcome> {
    let v = classical::rep_violations();
    Ok(Outcome::new(v.is_empty(), format!("15 brackets checked, {} violated", v.len())))
}

fn check_lowering(_: &Config) -> Result<Outcome> {
    let sols = classical::search_lowering_reps();
    let ok = sols == vec![(classical::rep(Gen::Xm), classical::rep(Gen::Vm))];
    Ok(Outcome::new(ok, format!("{} solutions with entries in {{0, ±1/2, ±1}}", sols.len())))
}

fn check_triangular(_: &Config) -> Result<Outcome> {
    let a = classical::schouten(&classical::r1::<Q>()).is_zero();
    let b = classical::schouten(&classical::r2::<Q>()).is_zero();
    Ok(Outcome::new(a && b, format!("[[r1,r1]] = 0: {}, [[r2,r2]] = 0: {}", verdict(a), verdict(b))))
}

fn check_quasitriangular(_: &Config) -> Result<Outcome> {
    let s = classical::schouten(&classical::r3::<Q>(qi(1)));
    let t = classical::schouten(&classical::r3_alt::<Q>(qi(1)));
    let ok = !s.is_zero() && classical::ad_invariant(&s) && !t.is_zero() && classical::ad_invariant(&t);
    Ok(Outcome::new(ok, format!("nonzero brackets, ad-invariant: {}", verdict(ok))))
}

fn check_casimir(_: &Config) -> Result<Outcome> {
    let ok = classical::ad_invariant(&classical::embed2(&classical::casimir::<Q>()));
    Ok(Outcome::new(ok, format!("ad-invariant: {}", verdict(ok))))
}

fn check_families(_: &Config) -> Result<Outcome> {
    use crate::mpoly::MPoly;
    let (x, y, z) = (MPoly::<Q>::var(0), MPoly::var(1), MPoly::var(2));
    let one = classical::coboundary_check(&classical::family_one(x.clone(), y.clone()));
    let two = classical::coboundary_check(&classical::family_two(x, y, z));
    Ok(Outcome::new(one && two, format!("symbolic x, y, z; invariant brackets: {}, {}", verdict(one), verdict(two))))
}

fn check_r3_parameter(_: &Config) -> Result<Outcome> {
    let ts = [crate::ring::q(3, 2), qi(-2), crate::ring::q(1, 5)];
    let ok = ts.iter().all(|t| classical::r3_parameter_absorbed(t, 5) && classical::r3_schouten_scales(t));
    Ok(Outcome::new(ok, "t in {3/2, -2, 1/5}, series through order 5"))
}

// ---- r-matrix ----

fn check_r2_embedding(_: &Config) -> Result<Outcome> {
    let ok = classical::embed2(&classical::r2::<Q>()) == classical::r2_reference();
    Ok(Outcome::new(ok, "9x9 entrywise comparison"))
}

fn check_exponential(_: &Config) -> Result<Outcome> {
    let r = classical::quantum_r();
    let ok = r == classical::quantum_r_reference();
    Ok(Outcome::new(ok, format!("corner entry {}", format_scalar(r.get(0, 8)))))
}

fn check_r_inverse(_: &Config) -> Result<Outcome> {
    let r = classical::quantum_r();
    let ok = (&r * &rll::r_plus()).is_identity() && r.invert_unipotent()? == rll::r_plus();
    Ok(Outcome::new(ok, "R R21 = 1"))
}

// ---- ybe ----

fn check_ybe(_: &Config) -> Result<Outcome> {
    let ok = ybe_check(&classical::quantum_r_tilde());
    Ok(Outcome::new(ok, "27x27 identity over Q[p]"))
}

// ---- rtt ----

fn check_compiled(_: &Config) -> Result<Outcome> {
    let pres = frt::presentation();
    let bad = pres.system.overlap_check(frt::DEGREE_BOUND);
    let ok = bad.is_empty() && pres.system.len() == 18;
    Ok(Outcome::new(
        ok,
        format!(
            "{} relations + unimodularity {} -> {} rules, {} unresolved overlaps to degree {}",
            pres.relations.len(),
            format_poly(&pres.unimodularity, &pres.alphabet),
            pres.system.len(),
            bad.len(),
            frt::DEGREE_BOUND
        ),
    ))
}

fn check_rtt_residuals(_: &Config) -> Result<Outcome> {
    let pres = frt::presentation();
    let red = frt::reduced_rtt_residuals(pres);
    let n = nonzero_count(&red);
    Ok(Outcome::new(n == 0 && red.len() == 81, format!("{} residuals, {} nonzero after reduction{}", red.len(), n, first_nonzero(&red, &pres.alphabet))))
}

fn check_rtt_span(c: &Config) -> Result<Outcome> {
    let rep = frt::rtt_span_certificate(frt::presentation(), &c.point_values())?;
    let pts: Vec<String> = rep.points.iter().map(|(q, ok)| format!("p={q}: {}", verdict(*ok))).collect();
    Ok(Outcome::new(
        rep.equal,
        format!("symbolic: {}; bases {} and {}; {}", verdict(rep.equal), rep.basis_sizes.0, rep.basis_sizes.1, pts.join(", ")),
    ))
}

fn check_rtt_classical(_: &Config) -> Result<Outcome> {
    let (rtt, _) = frt::classical_residual_defects()?;
    let n = nonzero_count(&rtt);
    Ok(Outcome::new(n == 0, format!("{} of 81 residuals not graded commutators", n)))
}

fn check_defining_alone(c: &Config) -> Result<Outcome> {
    let (survivors, rep) = frt::defining_relations_alone(&c.point_values())?;
    let consistent = (survivors == 0) == rep.equal;
    Ok(Outcome::new(
        consistent,
        format!("without unimodularity {} residuals survive and span equality is {}; unimodularity is needed", survivors, verdict(rep.equal)),
    ))
}

fn check_unscaled(_: &Config) -> Result<Outcome> {
    match frt::surviving_rtt_residuals(&frt::relations_with_unscaled_c_alpha()) {
        Err(Error::NonUnitLeading(c)) => {
            Ok(Outcome::new(true, format!("completion forces a relation with leading coefficient {c} (coefficients of 1, p, p^2); the scaled form is used")))
        }
        Ok(n) => Ok(Outcome::new(false, format!("unscaled form completes with {n} surviving residuals"))),
        Err(e) => Err(e),
    }
}

fn check_negative_controls(_: &Config) -> Result<Outcome> {
    let pres = frt::presentation();
    let mut r = classical::quantum_r();
    r.set(0, 8, scalar::p_pow(qi(1), 2));
    let ybe_fails = !ybe_check(&r.desuperize());
    let flipped = crate::span::span_equal(&frt::eliminated_residuals()?, &frt::sign_flipped_relations(pres), frt::DEGREE_BOUND, &[])?;
    let dropped: Vec<usize> = (0..pres.system.len()).map(|i| pres.system.without_rule(i).overlap_check(frt::DEGREE_BOUND).len()).collect();
    let drop_ok = dropped.iter().all(|&n| n > 0);
    Ok(Outcome::new(
        ybe_fails && !flipped.equal && drop_ok,
        format!(
            "corner p^2: YBE fails {}; flipped [a,b]: span breaks {}; each dropped rule leaves overlaps {} (min {})",
            verdict(ybe_fails),
            verdict(!flipped.equal),
            verdict(drop_ok),
            dropped.iter().min().copied().unwrap_or(0)
        ),
    ))
}

// ---- orthogonality ----

fn frac_matrix_text(m: &crate::SuperMatrix<crate::ScalarFrac>) -> String {
    let e: Vec<String> = m.entries().iter().map(|x| match x.as_poly() {
        Some(p) => format_scalar(p),
        None => format!("({})/({})", format_scalar(x.num()), format_scalar(x.den())),
    }).collect();
    e.chunks(3).map(|r| r.join(", ")).collect::<Vec<_>>().join(" / ")
}

fn check_metric(_: &Config) -> Result<Outcome> {
    let dm = frt::derive_metric(&classical::quantum_r())?;
    let ok = frt::proportional(&dm.c, &frt::reference_metric());
    Ok(Outcome::new(
        ok,
        format!(
            "solution dimensions {} (plain transpose) and {} (graded); derived C = {}; matches p, 0, -1 / 0, 1, 0 / 1, 0, 0 up to scale: {}",
            dm.dims.0,
            dm.dims.1,
            frac_matrix_text(&dm.c),
            verdict(ok)
        ),
    ))
}

fn check_crossing(_: &Config) -> Result<Outcome> {
    let r = classical::quantum_r();
    let rf = r.map(|x| crate::RatFunc::from_poly(x.clone()));
    let derived = frt::crossing_image(&r, &frt::metric(), true)? == rf;
    let reference = frt::crossing_image(&r, &frt::reference_metric(), true)? == rf;
    Ok(Outcome::new(derived, format!("corner p/2 satisfies it: {}; corner p satisfies it: {}", verdict(derived), verdict(reference))))
}

fn check_orthogonality(_: &Config) -> Result<Outcome> {
    let pres = frt::presentation();
    let red = frt::reduced_orthogonality_residuals(pres)?;
    let n = nonzero_count(&red);
    Ok(Outcome::new(n == 0, format!("{} residuals, {} nonzero after reduction{}", red.len(), n, first_nonzero(&red, &pres.alphabet))))
}

fn check_e_square(_: &Config) -> Result<Outcome> {
    let pres = frt::presentation();
    let d = pres.reduce(&(frt::e_square_residual()? - frt::e_square_target()));
    let root = pres.reduce(&frt::e_square_target());
    Ok(Outcome::new(d.is_zero() && root.is_zero(), "middle entry equals e^2 - (1 + 2 alpha delta + pac - (p/2) delta^2); eliminated e solves it"))
}

fn check_e_inverse(_: &Config) -> Result<Outcome> {
    let pres = frt::presentation();
    let terms = frt::e_inverse_terms(frt::DEGREE_BOUND);
    let (l, r) = frt::e_inverse_defects(pres, frt::DEGREE_BOUND);
    let tail = pres.nf(&frt::e_inverse_tail(terms));
    let ok = l == tail && r == tail && l.truncate_degree(frt::DEGREE_BOUND).is_zero();
    Ok(Outcome::new(ok, format!("{} series terms; e e^-1 - 1 = {}", terms, format_poly(&l, &pres.alphabet))))
}

fn check_orthogonality_classical(_: &Config) -> Result<Outcome> {
    let (_, orth) = frt::classical_residual_defects()?;
    let dm = frt::derive_metric(&classical::quantum_r())?;
    let c0 = dm.c.map(|x| scalar::specialize(x.as_poly().expect("polynomial metric"), &qi(0)));
    let anti = (0..3).all(|i| (0..3).all(|j| c0.get(i, j).is_zero() == (i + j != 2)));
    let n = nonzero_count(&orth);
    Ok(Outcome::new(n == 0 && anti, format!("{} residuals outside the classical constraints; metric at p = 0 antidiagonal: {}", n, verdict(anti))))
}

// ---- hopf ----

fn check_coproduct(_: &Config) -> Result<Outcome> {
    let pres = frt::presentation();
    let cp = frt::Coproduct::new(pres);
    let rels = pres.all_relations();
    let bad = rels.iter().filter(|r| !cp.apply(r).is_zero()).count();
    Ok(Outcome::new(bad == 0, format!("{} relations mapped, {} not annihilated", rels.len(), bad)))
}

fn check_coassociativity(_: &Config) -> Result<Outcome> {
    let cp = frt::Coproduct::new(frt::presentation());
    let bad: Vec<&str> = frt::GENERATORS.iter().filter(|&&id| !cp.coassociator(id).is_zero()).map(|&id| frt::presentation().alphabet.name(id)).collect();
    Ok(Outcome::new(bad.is_empty(), format!("6 generators, failing: [{}]", bad.join(", "))))
}

fn check_counit(_: &Config) -> Result<Outcome> {
    let pres = frt::presentation();
    let cp = frt::Coproduct::new(pres);
    let axioms = frt::GENERATORS.iter().all(|&id| {
        let (l, r) = cp.counit_defects(id);
        l.is_zero() && r.is_zero()
    });
    let ideal = pres.all_relations().iter().all(|r| frt::counit_poly(r).is_zero());
    Ok(Outcome::new(axioms && ideal, format!("axioms on generators: {}; relations annihilated: {}", verdict(axioms), verdict(ideal))))
}

fn check_antipode(_: &Config) -> Result<Outcome> {
    let pres = frt::presentation();
    let (l, r) = frt::antipode_axiom_defects(pres);
    let rels = pres.all_relations().iter().all(|x| pres.nf(&frt::antipode(x)).is_zero());
    let from_metric = frt::antipode_matrix_from_metric(&frt::t_matrix(), &frt::metric())?.map(|x| pres.reduce(x)) == frt::antipode_matrix().map(|x| pres.reduce(x));
    let ok = l.is_zero() && r.is_zero() && rels && from_metric;
    Ok(Outcome::new(
        ok,
        format!(
            "S(T)T = 1: {}; T S(T) = 1: {}; S kills relations: {}; S(T) = C T^st C^-1: {}",
            verdict(l.is_zero()),
            verdict(r.is_zero()),
            verdict(rels),
            verdict(from_metric)
        ),
    ))
}

fn check_antipode_squared(_: &Config) -> Result<Outcome> {
    let pres = frt::presentation();
    let images: Vec<String> = frt::antipode_squared(pres).iter().map(|(id, x)| format!("S2({}) = {}", pres.alphabet.name(*id), format_poly(x, &pres.alphabet))).collect();
    let hom = frt::antipode_squared_homomorphism_defects(pres).iter().all(|x| x.is_zero());
    Ok(Outcome::new(hom, format!("homomorphism: {}; {}", verdict(hom), images.join("; "))))
}

fn check_hopf_classical(_: &Config) -> Result<Outcome> {
    let pres = frt::presentation();
    let lim = frt::classical_limit_defects(pres)?;
    let bad: Vec<String> = lim.iter().filter(|(_, d)| !d.is_zero()).map(|(n, _)| n.clone()).collect();
    let anti = frt::classical_antipode_defects()?.iter().all(|x| x.is_zero());
    Ok(Outcome::new(bad.is_empty() && anti, format!("relations, unimodularity and eliminated entries at p = 0 failing: [{}]; classical inverse: {}", bad.join(", "), verdict(anti))))
}

// ---- borel ----

fn check_normal_ordering(_: &Config) -> Result<Outcome> {
    let rs = series::ordering_system();
    let confluent = rs.overlap_check(6).is_empty();
    let monos: Vec<series::Mono> = (0..2u8).flat_map(|v| (0..4u32).flat_map(move |h| (0..3u32).map(move |x| series::Mono::new(v, h, x)))).collect();
    let mut agree = true;
    for a in &monos {
        for b in &monos {
            let closed = &BorelSeries::monomial(*a, scalar::rat(qi(1)), 64) * &BorelSeries::monomial(*b, scalar::rat(qi(1)), 64);
            let word = rs.normal_form(&Poly::word(series::mono_word(a).concat(&series::mono_word(b))));
            agree &= series::from_poly(&word, 64).as_ref() == Some(&closed);
        }
    }
    Ok(Outcome::new(confluent && agree, format!("rules confluent to degree 6: {}; closed form agrees on {} products: {}", verdict(confluent), monos.len() * monos.len(), verdict(agree))))
}

fn check_rll_span(_: &Config) -> Result<Outcome> {
    let rep = rll::rll_span(&rll::r_plus(), &[])?;
    let unflipped = rll::rll_span(&classical::quantum_r(), &[])?;
    Ok(Outcome::new(
        rep.equal,
        format!("R+ = R21: equal {} (bases {} and {}); R+ = R: equal {}", verdict(rep.equal), rep.basis_sizes.0, rep.basis_sizes.1, verdict(unflipped.equal)),
    ))
}

fn check_rll_classical(_: &Config) -> Result<Outcome> {
    let ok = rll::classical_rll_span()?;
    Ok(Outcome::new(ok, format!("graded commutativity with B^2 = E^2 = 0: {}", verdict(ok))))
}

fn ansatz_outcome(f: &ansatz::AnsatzFunctions) -> Result<Outcome> {
    let cond = ansatz::check_ansatz_conditions(f)?;
    let defects = ansatz::rll_defects(f);
    let bad: Vec<&str> = defects.iter().filter(|(_, d)| !d.is_zero()).map(|(n, _)| *n).collect();
    Ok(Outcome::new(cond && bad.is_empty(), format!("weight {}: conditions {}; relations failing: [{}]", f.order(), verdict(cond), bad.join(", "))))
}

fn check_particular(c: &Config) -> Result<Outcome> {
    ansatz_outcome(&ansatz::AnsatzFunctions::particular(c.truncation)?)
}

fn check_trivial(c: &Config) -> Result<Outcome> {
    ansatz_outcome(&ansatz::AnsatzFunctions::trivial(c.truncation))
}

fn check_linear_family(c: &Config) -> Result<Outcome> {
    let f = ansatz::AnsatzFunctions::linear_family(c.truncation)?;
    let o = ansatz_outcome(&f)?;
    let n0 = ansatz::linear_family_n_squared_constant(c.truncation)?;
    Ok(Outcome::new(o.pass, format!("{}; N^2(0) = {}", o.details, format_scalar(&n0))))
}

fn check_prefix(c: &Config) -> Result<Outcome> {
    let n = c.truncation;
    let mut ok = true;
    for (hi, lo) in [
        (ansatz::AnsatzFunctions::particular(n)?, ansatz::AnsatzFunctions::particular(n - 1)?),
        (ansatz::AnsatzFunctions::linear_family(n)?, ansatz::AnsatzFunctions::linear_family(n - 1)?),
    ] {
        ok &= hi.truncated(n - 1) == lo;
        let a = ansatz::condition_defects(&hi)?;
        let b = ansatz::condition_defects(&lo)?;
        ok &= a.iter().zip(&b).all(|(x, y)| &x.truncated(n - 1) == y);
    }
    Ok(Outcome::new(ok, format!("weights {} and {} agree: {}", n, n - 1, verdict(ok))))
}

fn check_v_squared(c: &Config) -> Result<Outcome> {
    let d = coproduct::v_square_defect(c.truncation);
    Ok(Outcome::new(d.is_zero(), format!("{} surviving terms", d.num_terms())))
}

fn check_group_like(c: &Config) -> Result<Outcome> {
    let a = coproduct::group_like_defect(c.truncation).is_zero();
    let b = coproduct::e_sigma_consistency_defect(c.truncation).is_zero();
    Ok(Outcome::new(a && b, format!("Delta(e^sigma) Delta(e^-sigma) = 1: {}; agrees with Delta(X): {}", verdict(a), verdict(b))))
}

fn check_borel_homomorphism(c: &Config) -> Result<Outcome> {
    let d = coproduct::relation_defects(c.truncation);
    let bad: Vec<&str> = d.iter().filter(|(_, x)| !x.is_zero()).map(|(n, _)| *n).collect();
    Ok(Outcome::new(bad.is_empty(), format!("{} relations, failing: [{}]", d.len(), bad.join(", "))))
}

fn check_borel_coassociativity(c: &Config) -> Result<Outcome> {
    let bad: Vec<&str> = coproduct::BorelGen::HOPF.iter().filter(|&&g| !coproduct::coassociativity_defect(g, c.truncation).is_zero()).map(|g| g.name()).collect();
    Ok(Outcome::new(bad.is_empty(), format!("failing: [{}]", bad.join(", "))))
}

fn check_borel_counit(c: &Config) -> Result<Outcome> {
    let bad: Vec<&str> = coproduct::BorelGen::HOPF
        .iter()
        .filter(|&&g| {
            let (a, b) = coproduct::counit_defects(g, c.truncation);
            !(a.is_zero() && b.is_zero())
        })
        .map(|g| g.name())
        .collect();
    Ok(Outcome::new(bad.is_empty(), format!("failing: [{}]", bad.join(", "))))
}

fn check_borel_antipode(c: &Config) -> Result<Outcome> {
    let bad: Vec<&str> = coproduct::BorelGen::HOPF
        .iter()
        .filter(|&&g| {
            let (a, b) = coproduct::antipode_defects(g, c.truncation);
            !(a.is_zero() && b.is_zero())
        })
        .map(|g| g.name())
        .collect();
    Ok(Outcome::new(bad.is_empty(), format!("S(H) = -H e^(2 sigma) + (p/4) X; axioms failing on: [{}]", bad.join(", "))))
}

// ---- export ----

fn format_tensor(t: &TensorElement, al: &crate::Alphabet) -> String {
    let mut parts = Vec::new();
    for (legs, c) in t.terms() {
        let l: Vec<String> = legs.iter().map(|w| if w.is_empty() { "1".to_string() } else { format_word(w, al) }).collect();
        parts.push(format!("({}) {}", format_scalar(c), l.join(" (x) ")));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn format_borel_tensor(t: &coproduct::BorelTensor) -> String {
    let mut parts = Vec::new();
    for (legs, c) in t.terms() {
        let l: Vec<String> = legs.iter().map(|m| format!("({},{},{})", m.v, m.h, m.x)).collect();
        parts.push(format!("{}: {}", l.join("|"), format_scalar(c)));
    }
    parts.join("; ")
}

fn write(dir: &Path, name: &str, body: String, out: &mut Vec<PathBuf>) -> Result<()> {
    let path = dir.join(name);
    fs::write(&path, body).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    out.push(path);
    Ok(())
}

/// Writes the artifacts of the selected suites into `dir`.
pub fn export(suites: &[Suite], dir: &Path, config: &Config) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut out = Vec::new();
    let has = |s: Suite| suites.contains(&s);
    if has(Suite::RMatrix) || has(Suite::Ybe) {
        write(dir, "r_matrix.txt", format_scalar_matrix(&classical::quantum_r()), &mut out)?;
        write(dir, "r_matrix_desuperized.txt", format_scalar_matrix(&classical::quantum_r_tilde()), &mut out)?;
    }
    if has(Suite::Rtt) || has(Suite::Orthogonality) || has(Suite::Hopf) {
        let pres = frt::presentation();
        let al = &pres.alphabet;
        let raw = frt::rtt_residuals(&classical::quantum_r(), &frt::t_matrix());
        let lines = |xs: &[Poly]| xs.iter().map(|x| format_poly(x, al)).collect::<Vec<_>>().join("\n") + "\n";
        write(dir, "rtt_residuals.txt", lines(&raw), &mut out)?;
        write(dir, "rtt_residuals_reduced.txt", lines(&frt::reduced_rtt_residuals(pres)), &mut out)?;
        write(dir, "unimodularity.txt", format_poly(&pres.unimodularity, al) + "\n", &mut out)?;
        let mut rel = String::new();
        for (label, r) in frt::defining_relations() {
            rel += &format!("{label}: {}\n", format_poly(&r, al));
        }
        rel += &format!("unimodularity: {}\n", format_poly(&pres.unimodularity, al));
        write(dir, "relations.txt", rel, &mut out)?;
        let rules: String = pres.system.rules().iter().map(|r| format!("{} -> {}\n", format_word(&r.lhs, al), format_poly(&r.rhs, al))).collect();
        write(dir, "rewrite_rules.txt", rules, &mut out)?;
        let orth = frt::orthogonality_residuals(&frt::t_matrix(), &frt::metric())?;
        write(dir, "orthogonality_residuals.txt", lines(&orth), &mut out)?;
        write(dir, "metric.txt", format_scalar_matrix(&frt::metric()), &mut out)?;
        let mut hopf = String::new();
        let cp = frt::Coproduct::new(pres);
        for id in 0..9u8 {
            hopf += &format!("Delta({}) = {}\n", al.name(id), format_tensor(cp.letter(id), al));
        }
        for id in 0..9u8 {
            hopf += &format!("S({}) = {}\n", al.name(id), format_poly(&frt::antipode_table(id), al));
        }
        let t = frt::t_matrix().map(frt::eliminate);
        let s = frt::antipode_matrix().map(frt::eliminate);
        hopf += &format!("S(T) T before reduction:\n{}\n", format_matrix(&(&s * &t), al));
        let (l, r) = frt::antipode_axiom_defects(pres);
        hopf += &format!("S(T) T - 1 reduced:\n{}\nT S(T) - 1 reduced:\n{}\n", format_matrix(&l, al), format_matrix(&r, al));
        write(dir, "hopf_traces.txt", hopf, &mut out)?;
    }
    if has(Suite::BorelRll) {
        let al = rll::alphabet();
        let lines = |xs: &[Poly]| xs.iter().map(|x| format_poly(x, &al)).collect::<Vec<_>>().join("\n") + "\n";
        write(dir, "rll_residuals.txt", lines(&rll::rll_residuals(&rll::r_plus())), &mut out)?;
        write(dir, "rll_relations.txt", lines(&rll::listed_polys()), &mut out)?;
    }
    if has(Suite::BorelAnsatz) {
        let n = config.truncation;
        let mut s = String::new();
        for (name, f) in [
            ("particular", ansatz::AnsatzFunctions::particular(n)?),
            ("trivial", ansatz::AnsatzFunctions::trivial(n)),
            ("linear-family", ansatz::AnsatzFunctions::linear_family(n)?),
        ] {
            s += &format!("[{name}]\nK = {}\nL = {}\nM = {}\nN = {}\nP = {}\n", f.k, f.l, f.m, f.n, f.p);
        }
        write(dir, "ansatz_series.txt", s, &mut out)?;
    }
    if has(Suite::BorelCoproduct) {
        let n = config.truncation;
        let mut s = String::new();
        for g in [coproduct::BorelGen::ESigma, coproduct::BorelGen::V, coproduct::BorelGen::H, coproduct::BorelGen::X] {
            s += &format!("Delta({}) = {}\n", g.name(), format_borel_tensor(&coproduct::coproduct_borel(g, n)));
        }
        for g in coproduct::BorelGen::HOPF {
            s += &format!("S({}) = {}\n", g.name(), coproduct::antipode_candidate(g, n));
        }
        write(dir, "borel_coproducts.txt", s, &mut out)?;
    }
    Ok(out)
}
