//! The quantum supergroup: RTT relations, superorthogonality, elimination of
//! the dependent entries and the Hopf structure.

use std::sync::OnceLock;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::alphabet::Alphabet;
use crate::classical;
use crate::error::{Error, Result};
use crate::linalg;
use crate::ratfunc::RatFunc;
use crate::rewrite::RewriteSystem;
use crate::ring::{q, qi, Field, Ring, Q};
use crate::scalar::{self, p, p_pow, rat, Scalar};
use crate::span::{self, SpanReport};
use crate::supermatrix::{SuperMatrix, G3};
use crate::superpoly::graded_commutator;
use crate::tensor::{ReducedLegs, Tensor};
use crate::{Poly, PolyMatrix, ScalarFrac, ScalarMatrix, TensorElement};

// Letter ids; the first six are ordered c < δ < a < d < α < b.
pub const C: u8 = 0;
pub const DELTA: u8 = 1;
pub const A: u8 = 2;
pub const D: u8 = 3;
pub const ALPHA: u8 = 4;
pub const B: u8 = 5;
pub const GAMMA: u8 = 6;
pub const E: u8 = 7;
pub const BETA: u8 = 8;

/// The six independent generators.
pub const GENERATORS: [u8; 6] = [A, ALPHA, B, C, DELTA, D];

/// Degree bound for confluence audits and span comparisons.
pub const DEGREE_BOUND: usize = 4;

pub fn alphabet() -> Alphabet {
    Alphabet::new(&[("c", 0), ("delta", 1), ("a", 0), ("d", 0), ("alpha", 1), ("b", 0), ("gamma", 1), ("e", 0), ("beta", 1)])
}

fn l(id: u8) -> Poly {
    Poly::letter(id)
}

fn k(c: Scalar) -> Poly {
    Poly::constant(c)
}

fn half_p() -> Scalar {
    p_pow(q(1, 2), 1)
}

/// The matrix of generators with rows `(a α b)`, `(γ e β)`, `(c δ d)`.
pub fn t_matrix() -> PolyMatrix {
    SuperMatrix::from_rows3([[l(A), l(ALPHA), l(B)], [l(GAMMA), l(E), l(BETA)], [l(C), l(DELTA), l(D)]])
}

fn comm(x: u8, y: u8) -> Poly {
    let al = alphabet();
    graded_commutator(&l(x), &l(y), al.grade(x) * al.grade(y) == 1)
}

/// The seventeen defining relations, each as `lhs − rhs`, with a label.
pub fn defining_relations() -> Vec<(&'static str, Poly)> {
    let pp = k(p());
    let hp = k(half_p());
    let one = Poly::one();
    let (a, c, d, al, de) = (l(A), l(C), l(D), l(ALPHA), l(DELTA));
    vec![
        ("[a,b]", comm(A, B) - &pp * &(&a * &a - one.clone())),
        ("[a,c]", comm(A, C) + &pp * &(&c * &c)),
        ("[a,d]", comm(A, D) - &pp * &(&c * &a - &c * &d)),
        ("[b,c]", comm(B, C) + &pp * &(&c * &a) + &pp * &(&d * &c)),
        ("[b,d]", comm(B, D) - &pp * &(one.clone() - &d * &d)),
        ("[c,d]", comm(C, D) - &pp * &(&c * &c)),
        ("[a,alpha]", comm(A, ALPHA)),
        ("[a,delta]", comm(A, DELTA) + &pp * &(&c * &de)),
        ("[b,alpha]", comm(B, ALPHA) + &pp * &(&al * &a)),
        ("[b,delta]", comm(B, DELTA) + &pp * &(&d * &de + &c * &al)),
        ("[c,alpha]", comm(C, ALPHA) - &pp * &(&c * &de)),
        ("[c,delta]", comm(C, DELTA)),
        ("[d,alpha]", comm(D, ALPHA) - &pp * &(&de * &d - &de * &a)),
        ("[d,delta]", comm(D, DELTA) + &pp * &(&de * &c)),
        ("alpha^2", &al * &al - &hp * &(one.clone() - &a * &a)),
        ("{alpha,delta}", comm(ALPHA, DELTA) - &pp * &(&de * &de - &a * &c)),
        ("delta^2", &de * &de + &hp * &(&c * &c)),
    ]
}

pub fn defining_polys() -> Vec<Poly> {
    defining_relations().into_iter().map(|(_, r)| r).collect()
}

/// The `[c, α]` relation without the factor `p` on its right side.
pub fn unscaled_c_alpha_relation() -> Poly {
    comm(C, ALPHA) - &l(C) * &l(DELTA)
}

/// Images of the dependent entries `e`, `γ`, `β`.
pub fn eliminated(id: u8) -> Option<Poly> {
    let (a, b, c, d, al, de) = (l(A), l(B), l(C), l(D), l(ALPHA), l(DELTA));
    let hp = k(half_p());
    let pp = k(p());
    match id {
        E => Some(Poly::one() + &al * &de + &hp * &(&a * &c)),
        GAMMA => Some(&al * &c - &de * &a + &pp * &(&de * &c)),
        BETA => Some(
            &al * &d - &de * &b + &hp * &(&al * &c) - &hp * &(&de * &a) + &pp * &(&de * &d) + k(p_pow(q(1, 2), 2)) * (&de * &c),
        ),
        _ => None,
    }
}

/// Substitutes the dependent entries.
pub fn eliminate(x: &Poly) -> Poly {
    x.substitute(&eliminated)
}

/// The element `1 − αδ − (p/2)ac` with `e·(1 − αδ − (p/2)ac) = 1 − (p²/4)c²`.
pub fn e_adjugate() -> Poly {
    Poly::one() - &l(ALPHA) * &l(DELTA) - &k(half_p()) * &(&l(A) * &l(C))
}

/// `e⁻¹` with the geometric series in `(p²/4)c²` cut after `terms` terms.
pub fn e_inverse(terms: usize) -> Poly {
    let x = k(p_pow(q(1, 4), 2)) * (&l(C) * &l(C));
    let mut series = Poly::zero();
    let mut pw = Poly::one();
    for _ in 0..terms {
        series = series + pw.clone();
        pw = &pw * &x;
    }
    &e_adjugate() * &series
}

/// Number of series terms whose cutoff lies beyond `degree_bound`.
pub fn e_inverse_terms(degree_bound: usize) -> usize {
    degree_bound / 2 + 1
}

/// Inverse of a 3×3 matrix whose determinant is a unit.
pub fn inverse3<R: Ring>(m: &SuperMatrix<R>) -> Result<SuperMatrix<R>> {
    assert_eq!(m.dim(), 3);
    let g = |i: usize, j: usize| m.get(i, j).clone();
    let cof = |i: usize, j: usize| {
        let (r0, r1) = ([1, 0, 0][i], [2, 2, 1][i]);
        let (c0, c1) = ([1, 0, 0][j], [2, 2, 1][j]);
        let minor = g(r0, c0) * g(r1, c1) - g(r0, c1) * g(r1, c0);
        if (i + j) % 2 == 1 {
            -minor
        } else {
            minor
        }
    };
    let det = (0..3).fold(R::zero(), |acc, j| acc + g(0, j) * cof(0, j));
    let inv = det.unit_inverse().ok_or(Error::NotInvertible)?;
    Ok(SuperMatrix::from_fn(m.grading().to_vec(), |i, j| cof(j, i) * inv.clone()))
}

/// The metric `[[p/2, 0, −1], [0, 1, 0], [1, 0, 0]]` solving the crossing condition.
pub fn metric() -> ScalarMatrix {
    let z = Scalar::zero();
    SuperMatrix::from_rows3([[half_p(), z.clone(), rat(qi(-1))], [z.clone(), Scalar::one(), z.clone()], [Scalar::one(), z.clone(), z]])
}

/// The reference metric, with `p` in the corner.
pub fn reference_metric() -> ScalarMatrix {
    let z = Scalar::zero();
    SuperMatrix::from_rows3([[p(), z.clone(), rat(qi(-1))], [z.clone(), Scalar::one(), z.clone()], [Scalar::one(), z.clone(), z]])
}

/// Result of solving `R·C₁·R^{t₁} = C₁` for `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedMetric {
    /// Whether the graded partial transpose was needed.
    pub graded: bool,
    /// Dimension of the solution space for the ordinary and the graded transpose.
    pub dims: (usize, usize),
    /// The solution normalized so that `C₃₁ = 1`.
    pub c: SuperMatrix<ScalarFrac>,
}

fn metric_equations(r: &ScalarMatrix, graded: bool) -> Vec<Vec<ScalarFrac>> {
    let rf: SuperMatrix<ScalarFrac> = r.map(|x| RatFunc::from_poly(x.clone()));
    let rt = rf.partial_transpose_first(graded);
    let cols: Vec<SuperMatrix<ScalarFrac>> = (0..9)
        .map(|idx| {
            let c1 = SuperMatrix::<ScalarFrac>::elementary(idx / 3, idx % 3).embed_left();
            &(&rf * &c1) * &rt - c1
        })
        .collect();
    (0..81).map(|e| cols.iter().map(|m| m.entries()[e].clone()).collect()).collect()
}

/// Solves the crossing condition for the metric, trying the ordinary partial
/// transpose first and the graded one second.
pub fn derive_metric(r: &ScalarMatrix) -> Result<DerivedMetric> {
    let ns_plain = linalg::nullspace(&metric_equations(r, false), 9);
    let ns_graded = linalg::nullspace(&metric_equations(r, true), 9);
    let dims = (ns_plain.len(), ns_graded.len());
    let (graded, v) = match (ns_plain.len(), ns_graded.len()) {
        (1, _) => (false, ns_plain[0].clone()),
        (_, 1) => (true, ns_graded[0].clone()),
        (_, n) => return Err(Error::SolutionSpace(n)),
    };
    let norm = v[6].inv().ok_or(Error::SolutionSpace(0))?;
    let c = SuperMatrix::from_fn(G3.to_vec(), |i, j| v[3 * i + j].clone() * norm.clone());
    Ok(DerivedMetric { graded, dims, c })
}

/// Whether `m` equals `reference` up to one overall nonzero factor.
pub fn proportional(m: &SuperMatrix<ScalarFrac>, reference: &ScalarMatrix) -> bool {
    let rf: SuperMatrix<ScalarFrac> = reference.map(|x| RatFunc::from_poly(x.clone()));
    let Some(idx) = (0..9).find(|&i| !rf.entries()[i].is_zero()) else {
        return m.is_zero();
    };
    let Some(f) = rf.entries()[idx].inv() else { return false };
    let factor = m.entries()[idx].clone() * f;
    !factor.is_zero() && rf.scale(&factor) == *m
}

/// General inverse over Q(√2)(p), by row reduction of `[M | 1]`.
pub fn invert_frac(m: &SuperMatrix<ScalarFrac>) -> Result<SuperMatrix<ScalarFrac>> {
    let n = m.dim();
    let mut rows: Vec<Vec<ScalarFrac>> = (0..n)
        .map(|i| (0..2 * n).map(|j| if j < n { m.get(i, j).clone() } else if j - n == i { RatFunc::one() } else { RatFunc::zero() }).collect())
        .collect();
    let piv = linalg::rref(&mut rows);
    if piv.len() < n || piv[n - 1] >= n {
        return Err(Error::NotInvertible);
    }
    Ok(SuperMatrix::from_fn(m.grading().to_vec(), |i, j| rows[i][n + j].clone()))
}

/// Evaluates `C₁ (R^{t₁})⁻¹ C₁⁻¹` for a candidate metric.
pub fn crossing_image(r: &ScalarMatrix, c: &ScalarMatrix, graded: bool) -> Result<SuperMatrix<ScalarFrac>> {
    let rf: SuperMatrix<ScalarFrac> = r.map(|x| RatFunc::from_poly(x.clone()));
    let cf: SuperMatrix<ScalarFrac> = c.map(|x| RatFunc::from_poly(x.clone()));
    let c1 = cf.embed_left();
    let c1inv = invert_frac(&c1)?;
    let rtinv = invert_frac(&rf.partial_transpose_first(graded))?;
    Ok(&(&c1 * &rtinv) * &c1inv)
}

/// The 81 entries of `R·T₁·T₂ − T₂·T₁·R`.
pub fn rtt_residuals(r: &ScalarMatrix, t: &PolyMatrix) -> Vec<Poly> {
    let rp: PolyMatrix = r.map(|x| Poly::constant(x.clone()));
    let (t1, t2) = (t.embed_left(), t.embed_right());
    let lhs = &(&rp * &t1) * &t2;
    let rhs = &(&t2 * &t1) * &rp;
    (lhs - rhs).entries().to_vec()
}

/// Entries of `T·C·Tˢᵗ·C⁻¹ − 1` followed by those of `C·Tˢᵗ·C⁻¹·T − 1`.
pub fn orthogonality_residuals(t: &PolyMatrix, c: &ScalarMatrix) -> Result<Vec<Poly>> {
    let cp: PolyMatrix = c.map(|x| Poly::constant(x.clone()));
    let cinv: PolyMatrix = inverse3(c)?.map(|x| Poly::constant(x.clone()));
    let tst = t.supertranspose();
    let one = PolyMatrix::identity(G3.to_vec());
    let m1 = &(&(t * &cp) * &tst) * &cinv - one.clone();
    let m2 = &(&(&cp * &tst) * &cinv) * t - one;
    Ok(m1.entries().iter().chain(m2.entries()).cloned().collect())
}

/// The antipode in matrix form, `S(T) = C·Tˢᵗ·C⁻¹`.
pub fn antipode_matrix_from_metric(t: &PolyMatrix, c: &ScalarMatrix) -> Result<PolyMatrix> {
    let cp: PolyMatrix = c.map(|x| Poly::constant(x.clone()));
    let cinv: PolyMatrix = inverse3(c)?.map(|x| Poly::constant(x.clone()));
    Ok(&(&cp * &t.supertranspose()) * &cinv)
}

/// The antipode on all nine entries, as listed.
pub fn antipode_table(id: u8) -> Poly {
    let (a, b, c, d, al, de) = (l(A), l(B), l(C), l(D), l(ALPHA), l(DELTA));
    let hp = k(half_p());
    match id {
        A => d - &hp * &c,
        ALPHA => -l(BETA) + &hp * &l(GAMMA),
        B => -b + &hp * &(a - d) + &k(p_pow(q(1, 4), 2)) * &c,
        GAMMA => de,
        E => l(E),
        BETA => -al - &hp * &de,
        C => -c,
        DELTA => l(GAMMA),
        D => a + &hp * &c,
        _ => unreachable!("unknown letter"),
    }
}

pub fn antipode_matrix() -> PolyMatrix {
    t_matrix().map(|x| x.substitute(&|id| Some(antipode_table(id))))
}

/// The compiled presentation.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relations: Vec<Poly>,
    pub unimodularity: Poly,
    pub system: RewriteSystem<Scalar>,
}

/// The defining relations alone, oriented and completed to the degree bound.
pub fn defining_system() -> Result<RewriteSystem<Scalar>> {
    RewriteSystem::complete(&defining_polys(), DEGREE_BOUND)
}

/// The scalar-valued orthogonality residual: entry `(1,1)` of `T·C·Tˢᵗ·C⁻¹ − 1`
/// after elimination, in normal form modulo the defining relations.
pub fn derive_unimodularity(defining: &RewriteSystem<Scalar>) -> Result<Poly> {
    let res = orthogonality_residuals(&t_matrix(), &metric())?;
    Ok(defining.normal_form(&eliminate(&res[0])))
}

/// Builds and completes the presentation once; later calls reuse it.
pub fn presentation() -> &'static Presentation {
    static P: OnceLock<Presentation> = OnceLock::new();
    P.get_or_init(|| build_presentation().expect("the presentation compiles"))
}

pub fn build_presentation() -> Result<Presentation> {
    let defining = defining_system()?;
    let u = derive_unimodularity(&defining)?;
    let mut rels = defining_polys();
    rels.push(u.clone());
    let system = RewriteSystem::complete(&rels, DEGREE_BOUND)?;
    Ok(Presentation { alphabet: alphabet(), relations: defining_polys(), unimodularity: u, system })
}

impl Presentation {
    pub fn nf(&self, x: &Poly) -> Poly {
        self.system.normal_form(x)
    }

    /// Eliminates the dependent entries, then reduces.
    pub fn reduce(&self, x: &Poly) -> Poly {
        self.nf(&eliminate(x))
    }

    pub fn all_relations(&self) -> Vec<Poly> {
        let mut v = self.relations.clone();
        v.push(self.unimodularity.clone());
        v
    }
}

/// Reduced RTT residuals; all vanish when the presentation is correct.
pub fn reduced_rtt_residuals(pres: &Presentation) -> Vec<Poly> {
    rtt_residuals(&classical::quantum_r(), &t_matrix()).par_iter().map(|x| pres.reduce(x)).collect()
}

pub fn reduced_orthogonality_residuals(pres: &Presentation) -> Result<Vec<Poly>> {
    Ok(orthogonality_residuals(&t_matrix(), &metric())?.par_iter().map(|x| pres.reduce(x)).collect())
}

/// Eliminated RTT and orthogonality residuals, the raw side of the span certificate.
pub fn eliminated_residuals() -> Result<Vec<Poly>> {
    let mut v: Vec<Poly> = rtt_residuals(&classical::quantum_r(), &t_matrix()).iter().map(eliminate).collect();
    v.extend(orthogonality_residuals(&t_matrix(), &metric())?.iter().map(eliminate));
    v.retain(|x| !x.is_zero());
    Ok(v)
}

/// Mutual containment of the residual relations and the compiled relations.
pub fn rtt_span_certificate(pres: &Presentation, points: &[Q]) -> Result<SpanReport> {
    span::span_equal(&eliminated_residuals()?, &pres.all_relations(), DEGREE_BOUND, points)
}

/// The orthogonality entry that fixes `e`, kept before elimination; it equals
/// `e² − (1 + 2αδ + pac − (p/2)δ²)` modulo the presentation.
pub fn e_square_residual() -> Result<Poly> {
    Ok(orthogonality_residuals(&t_matrix(), &metric())?[13].clone())
}

pub fn e_square_target() -> Poly {
    let (a, c, al, de, e) = (l(A), l(C), l(ALPHA), l(DELTA), l(E));
    &e * &e - (Poly::one() + k(rat(qi(2))) * (&al * &de) + k(p()) * (&a * &c) - k(half_p()) * (&de * &de))
}

/// Reduced `e·e⁻¹ − 1` and `e⁻¹·e − 1` for the series cut beyond `degree_bound`.
/// Both equal `−((p²/4)c²)^terms`, so they vanish below the bound.
pub fn e_inverse_defects(pres: &Presentation, degree_bound: usize) -> (Poly, Poly) {
    let e = eliminated(E).expect("dependent entry");
    let inv = e_inverse(e_inverse_terms(degree_bound));
    let one = Poly::one();
    (pres.nf(&(&e * &inv - one.clone())), pres.nf(&(&inv * &e - one)))
}

/// The tail `−((p²/4)c²)^terms` left by the cut series.
pub fn e_inverse_tail(terms: usize) -> Poly {
    let mut x = Poly::one();
    for _ in 0..terms {
        x = &x * &(k(p_pow(q(1, 4), 2)) * (&l(C) * &l(C)));
    }
    -x
}

/// Relations with the defining `[c, α]` relation replaced by its unscaled form.
pub fn relations_with_unscaled_c_alpha() -> Vec<Poly> {
    let mut v: Vec<Poly> = defining_relations()
        .into_iter()
        .map(|(label, r)| if label == "[c,alpha]" { unscaled_c_alpha_relation() } else { r })
        .collect();
    v.push(presentation().unimodularity.clone());
    v
}

/// Number of RTT residuals that survive reduction modulo `rels`; `None`
/// when the relations cannot be completed with unit leading coefficients.
pub fn surviving_rtt_residuals(rels: &[Poly]) -> Result<usize> {
    let rs = RewriteSystem::complete(rels, DEGREE_BOUND)?;
    let r = classical::quantum_r();
    Ok(rtt_residuals(&r, &t_matrix()).par_iter().filter(|x| !rs.normal_form(&eliminate(x)).is_zero()).count())
}

/// Whether the defining relations without unimodularity already generate
/// the residual ideal: returns the number of surviving residuals and the
/// span comparison.
pub fn defining_relations_alone(points: &[Q]) -> Result<(usize, SpanReport)> {
    let survivors = surviving_rtt_residuals(&defining_polys())?;
    let report = span::span_equal(&eliminated_residuals()?, &defining_polys(), DEGREE_BOUND, points)?;
    Ok((survivors, report))
}

/// The defining relations with the sign of `[a,b]`'s right side flipped.
pub fn sign_flipped_relations(pres: &Presentation) -> Vec<Poly> {
    let mut v = pres.all_relations();
    v[0] = comm(A, B) + &k(p()) * &(&l(A) * &l(A) - Poly::one());
    v
}

// ---- classical limit ----

fn at_zero(x: &Poly) -> Poly {
    x.map_coeffs(|c| scalar::specialize(c, &qi(0)))
}

/// Graded commutativity on the six generators.
pub fn graded_commutativity() -> Vec<Poly> {
    let al = alphabet();
    let mut v = Vec::new();
    for (i, &x) in GENERATORS.iter().enumerate() {
        for &y in &GENERATORS[i..] {
            let odd = al.grade(x) * al.grade(y) == 1;
            if x == y && !odd {
                continue;
            }
            v.push(graded_commutator(&l(x), &l(y), odd));
        }
    }
    v
}

/// Classical relations: graded commutativity and `ad − bc + αδ = 1`.
pub fn classical_system() -> Result<RewriteSystem<Scalar>> {
    let mut v = graded_commutativity();
    v.push(&l(A) * &l(D) - &l(B) * &l(C) + &l(ALPHA) * &l(DELTA) - Poly::one());
    RewriteSystem::complete(&v, DEGREE_BOUND)
}

/// Constraints of the undeformed supergroup for `e`, `γ`, `β`.
pub fn classical_eliminated(id: u8) -> Option<Poly> {
    let (a, b, c, d, al, de) = (l(A), l(B), l(C), l(D), l(ALPHA), l(DELTA));
    match id {
        E => Some(Poly::one() + &al * &de),
        GAMMA => Some(&c * &al - &a * &de),
        BETA => Some(&d * &al - &b * &de),
        _ => None,
    }
}

/// At `p = 0`: the relations, `U` and the eliminated entries, each reduced
/// modulo the classical relations. All vanish when the limit is correct.
pub fn classical_limit_defects(pres: &Presentation) -> Result<Vec<(String, Poly)>> {
    let cs = classical_system()?;
    let al = &pres.alphabet;
    let mut out = Vec::new();
    for (label, r) in defining_relations() {
        out.push((label.to_string(), cs.normal_form(&at_zero(&r))));
    }
    out.push(("unimodularity".to_string(), cs.normal_form(&at_zero(&pres.unimodularity))));
    for id in [E, GAMMA, BETA] {
        let lhs = at_zero(&eliminated(id).expect("dependent entry"));
        let rhs = classical_eliminated(id).expect("dependent entry");
        out.push((al.name(id).to_string(), cs.normal_form(&(lhs - rhs))));
    }
    Ok(out)
}

// ---- Hopf structure ----

pub fn counit(id: u8) -> Scalar {
    match id {
        A | D | E => Scalar::one(),
        _ => Scalar::zero(),
    }
}

pub fn counit_poly(x: &Poly) -> Scalar {
    let y = eliminate(x);
    let mut acc = Scalar::zero();
    for (w, c) in y.terms() {
        let mut t = c.clone();
        for &id in w.letters() {
            t = t * counit(id);
        }
        acc = acc + t;
    }
    acc
}

fn entry_position(id: u8) -> (usize, usize) {
    match id {
        A => (0, 0),
        ALPHA => (0, 1),
        B => (0, 2),
        GAMMA => (1, 0),
        E => (1, 1),
        BETA => (1, 2),
        C => (2, 0),
        DELTA => (2, 1),
        D => (2, 2),
        _ => unreachable!("unknown letter"),
    }
}

/// `Δ(t_ij) = Σ_k t_ik ⊗ t_kj` with both legs eliminated and reduced.
pub fn coproduct_letter(pres: &Presentation, id: u8) -> TensorElement {
    let t = t_matrix();
    let (i, j) = entry_position(id);
    let mut out = Tensor::zero(2);
    for m in 0..3 {
        let x = pres.reduce(t.get(i, m));
        let y = pres.reduce(t.get(m, j));
        out = out + Tensor::from_polys(&[x, y]);
    }
    out
}

/// `Δ` extended multiplicatively with the graded tensor product.
pub struct Coproduct<'a> {
    pres: &'a Presentation,
    images: Vec<TensorElement>,
}

impl<'a> Coproduct<'a> {
    pub fn new(pres: &'a Presentation) -> Self {
        let images = (0..9u8).map(|id| coproduct_letter(pres, id)).collect();
        Coproduct { pres, images }
    }

    pub fn letter(&self, id: u8) -> &TensorElement {
        &self.images[id as usize]
    }

    pub fn apply(&self, x: &Poly) -> TensorElement {
        let legs = ReducedLegs(&self.pres.alphabet, &self.pres.system);
        let mut out = Tensor::zero(2);
        for (w, c) in x.terms() {
            let mut acc = Tensor::from_polys(&[Poly::constant(c.clone()), Poly::one()]);
            for &id in w.letters() {
                acc = acc.mul(self.letter(id), &legs).expect("arity 2");
            }
            out = out + acc;
        }
        out.reduce(&self.pres.system)
    }

    /// `(Δ⊗id)Δ(x) − (id⊗Δ)Δ(x)` with legs reduced.
    pub fn coassociator(&self, id: u8) -> Tensor<crate::Word, Scalar> {
        let d = self.letter(id);
        let split = |w: &crate::Word| self.apply(&Poly::word(w.clone()));
        let left = d.expand_leg(0, &split);
        let right = d.expand_leg(1, &split);
        (left - right).reduce(&self.pres.system)
    }

    /// `(ε⊗id)Δ(x) − x` and `(id⊗ε)Δ(x) − x`.
    pub fn counit_defects(&self, id: u8) -> (Poly, Poly) {
        let d = self.letter(id);
        let eps = |w: &crate::Word| counit_poly(&Poly::word(w.clone()));
        let flatten = |t: Tensor<crate::Word, Scalar>| Poly::from_terms(t.terms().map(|(l, c)| (l[0].clone(), c.clone())));
        let x = self.pres.reduce(&l(id));
        (self.pres.nf(&flatten(d.collapse_leg(0, &eps))) - x.clone(), self.pres.nf(&flatten(d.collapse_leg(1, &eps))) - x)
    }
}

/// The antipode as a graded anti-homomorphism,
/// `S(x₁…x_n) = (−1)^{Σ_{i<j}|x_i||x_j|} S(x_n)…S(x₁)`.
pub fn antipode(x: &Poly) -> Poly {
    let al = alphabet();
    let mut out = Poly::zero();
    for (w, c) in x.terms() {
        let letters = w.letters();
        let mut odd = 0usize;
        let mut seen_odd = 0usize;
        for &id in letters {
            if al.grade(id) == 1 {
                odd += seen_odd;
                seen_odd += 1;
            }
        }
        let mut acc = Poly::constant(if odd % 2 == 1 { -c.clone() } else { c.clone() });
        for &id in letters.iter().rev() {
            acc = &acc * &eliminate(&antipode_table(id));
        }
        out = out + acc;
    }
    out
}

/// `Σ_k S(t_ik) t_kj − δ_ij` and `Σ_k t_ik S(t_kj) − δ_ij`, reduced.
pub fn antipode_axiom_defects(pres: &Presentation) -> (PolyMatrix, PolyMatrix) {
    let t = t_matrix().map(eliminate);
    let s = antipode_matrix().map(eliminate);
    let one = PolyMatrix::identity(G3.to_vec());
    let left = (&s * &t - one.clone()).map(|x| pres.nf(x));
    let right = (&t * &s - one).map(|x| pres.nf(x));
    (left, right)
}

/// Reduced `S²` of each generator.
pub fn antipode_squared(pres: &Presentation) -> Vec<(u8, Poly)> {
    GENERATORS.iter().map(|&id| (id, pres.nf(&antipode(&pres.nf(&antipode(&l(id))))))).collect()
}

/// Reduced `S²(xy) − S²(x)S²(y)` over ordered pairs of generators.
pub fn antipode_squared_homomorphism_defects(pres: &Presentation) -> Vec<Poly> {
    let s2 = |x: &Poly| pres.nf(&antipode(&pres.nf(&antipode(x))));
    let pairs: Vec<(u8, u8)> = GENERATORS.iter().flat_map(|&x| GENERATORS.iter().map(move |&y| (x, y))).collect();
    pairs.par_iter().map(|&(x, y)| pres.nf(&(s2(&(&l(x) * &l(y))) - &s2(&l(x)) * &s2(&l(y))))).collect()
}

/// At `p = 0`: entries of `T·S(T) − 1` and `S(T)·T − 1` with the classical
/// constraints, reduced modulo the classical relations.
pub fn classical_antipode_defects() -> Result<Vec<Poly>> {
    let cs = classical_system()?;
    let sub = |x: &Poly| at_zero(x).substitute(&classical_eliminated);
    let t = t_matrix().map(sub);
    let s = antipode_matrix().map(sub);
    let one = PolyMatrix::identity(G3.to_vec());
    let a = (&t * &s - one.clone()).map(|x| cs.normal_form(x));
    let b = (&s * &t - one).map(|x| cs.normal_form(x));
    Ok(a.entries().iter().chain(b.entries()).cloned().collect())
}

/// Graded commutativity on all nine entries.
pub fn full_graded_commutativity() -> Result<RewriteSystem<Scalar>> {
    let al = alphabet();
    let mut v = Vec::new();
    for x in 0..9u8 {
        for y in x..9u8 {
            let odd = al.grade(x) * al.grade(y) == 1;
            if x == y && !odd {
                continue;
            }
            v.push(graded_commutator(&l(x), &l(y), odd));
        }
    }
    RewriteSystem::complete(&v, 2)
}

/// Specialization `p ↦ 0`.
pub fn classical_limit(x: &Poly) -> Poly {
    at_zero(x)
}

/// At `p = 0`: RTT residuals modulo nine-letter graded commutativity, and
/// orthogonality residuals modulo it together with the classical constraints.
pub fn classical_residual_defects() -> Result<(Vec<Poly>, Vec<Poly>)> {
    let gc = full_graded_commutativity()?;
    let rtt = rtt_residuals(&classical::quantum_r(), &t_matrix()).iter().map(|x| gc.normal_form(&at_zero(x))).collect();
    let cs = classical_system()?;
    let orth = orthogonality_residuals(&t_matrix(), &metric())?
        .iter()
        .map(|x| cs.normal_form(&at_zero(x).substitute(&classical_eliminated)))
        .collect();
    Ok((rtt, orth))
}

/// Rational specialization points derived from a seed.
pub fn seeded_points(seed: u64, n: usize) -> Vec<Q> {
    let mut state = seed ^ 0x9e37_79b9_7f4a_7c15;
    (0..n)
        .map(|_| {
            state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
            let num = ((state >> 33) % 997) as i64 + 2;
            let den = ((state >> 17) % 89) as i64 + 3;
            q(num, den)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elimination_leaves_six_letters() {
        let x = eliminate(&(&l(GAMMA) * &l(E) + l(BETA)));
        assert!(x.letters_used().iter().all(|id| GENERATORS.contains(id)));
    }

    #[test]
    fn metric_inverse() {
        let c = metric();
        let ci = inverse3(&c).unwrap();
        assert!((&c * &ci).is_identity());
        let z = Scalar::zero();
        let expect = SuperMatrix::from_rows3([[z.clone(), z.clone(), Scalar::one()], [z.clone(), Scalar::one(), z.clone()], [rat(qi(-1)), z, half_p()]]);
        assert_eq!(ci, expect);
    }

    #[test]
    fn counit_values() {
        assert_eq!(counit_poly(&l(A)), Scalar::one());
        assert_eq!(counit_poly(&l(E)), Scalar::one());
        assert!(counit_poly(&l(BETA)).is_zero());
    }

    #[test]
    fn seeded_points_are_deterministic() {
        assert_eq!(seeded_points(7, 3), seeded_points(7, 3));
        assert_ne!(seeded_points(7, 3), seeded_points(8, 3));
    }
}
