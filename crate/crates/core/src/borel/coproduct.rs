//! Deformed coproducts on the Borel algebra, in graded tensor powers
//! truncated on the total weight.
//!
//! Total weight is the right filtration here: `Δ` never lowers it, so `Δ` is
//! well defined on the truncated algebra, whereas a per-leg cut is not
//! preserved (`Δ(X^n)` has terms `X^a ⊗ X^b` with both legs light).

use num_traits::{One, Zero};

use super::ansatz::e_sigma;
use super::series::{mono_mul, BorelSeries, Mono};
use crate::error::Result;
use crate::ring::{q, Ring};
use crate::scalar::{self, p, Scalar};
use crate::tensor::{LegAlgebra, Tensor};

struct BorelLegs;

impl LegAlgebra<Mono, Scalar> for BorelLegs {
    fn grade(&self, k: &Mono) -> u8 {
        k.grade()
    }
    fn mul(&self, x: &Mono, y: &Mono) -> Vec<(Mono, Scalar)> {
        mono_mul(x, y).into_iter().map(|(m, c)| (m, scalar::rat(c))).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BorelTensor {
    order: u32,
    inner: Tensor<Mono, Scalar>,
}

fn total_weight(legs: &[Mono]) -> u32 {
    legs.iter().map(Mono::weight).sum()
}

impl BorelTensor {
    pub fn zero(arity: usize, order: u32) -> Self {
        BorelTensor { order, inner: Tensor::zero(arity) }
    }

    fn from_inner(inner: Tensor<Mono, Scalar>, order: u32) -> Self {
        let mut out = Tensor::zero(inner.arity());
        for (legs, c) in inner.terms() {
            if total_weight(legs) <= order {
                out.add_term(legs.clone(), c.clone());
            }
        }
        BorelTensor { order, inner: out }
    }

    /// `x₁ ⊗ … ⊗ xₙ`.
    pub fn product_of(parts: &[&BorelSeries], order: u32) -> Self {
        let f: Vec<Vec<(Mono, Scalar)>> = parts.iter().map(|s| s.terms().map(|(m, c)| (*m, c.clone())).collect()).collect();
        Self::from_inner(Tensor::from_factors(&f), order)
    }

    pub fn identity(arity: usize, order: u32) -> Self {
        let one = BorelSeries::one(order);
        Self::product_of(&vec![&one; arity], order)
    }

    pub fn arity(&self) -> usize {
        self.inner.arity()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Mono>, &Scalar)> {
        self.inner.terms()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let prod = self.inner.mul(&o.inner, &BorelLegs).expect("equal arity");
        Self::from_inner(prod, order)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        BorelTensor { order: self.order, inner: self.inner.scale(c) }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_inner(self.inner.clone() + o.inner.clone(), self.order.min(o.order))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_inner(self.inner.clone() - o.inner.clone(), self.order.min(o.order))
    }

    /// Replaces leg `i` by its coproduct.
    pub fn expand_leg(&self, i: usize) -> Self {
        let order = self.order;
        let inner = self.inner.expand_leg(i, &|m: &Mono| delta_mono(m, order).inner);
        Self::from_inner(inner, order)
    }

    /// Applies the counit to leg `i`.
    pub fn counit_leg(&self, i: usize) -> Self {
        Self::from_inner(self.inner.collapse_leg(i, &counit_mono), self.order)
    }

    /// The single leg of an arity-1 tensor as a series.
    pub fn to_series(&self) -> BorelSeries {
        assert_eq!(self.arity(), 1);
        let mut s = BorelSeries::zero(self.order);
        for (legs, c) in self.inner.terms() {
            s.add_term(legs[0], c.clone());
        }
        s
    }

    /// Multiplies the two legs after applying `f` to the first or second leg.
    pub fn multiply_legs(&self, f: &impl Fn(&Mono) -> BorelSeries, on_first: bool) -> BorelSeries {
        assert_eq!(self.arity(), 2);
        let mut out = BorelSeries::zero(self.order);
        for (legs, c) in self.inner.terms() {
            let (x, y) = if on_first {
                (f(&legs[0]), BorelSeries::monomial(legs[1], Scalar::one(), self.order))
            } else {
                (BorelSeries::monomial(legs[0], Scalar::one(), self.order), f(&legs[1]))
            };
            out = &out + &(&x * &y).scale(c);
        }
        out
    }
}

/// The generators carrying the deformed coproduct.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BorelGen {
    ESigma,
    V,
    H,
    X,
}

impl BorelGen {
    pub const HOPF: [BorelGen; 3] = [BorelGen::ESigma, BorelGen::V, BorelGen::H];

    pub fn name(self) -> &'static str {
        match self {
            BorelGen::ESigma => "e^sigma",
            BorelGen::V => "V",
            BorelGen::H => "H",
            BorelGen::X => "X",
        }
    }

    pub fn series(self, order: u32) -> BorelSeries {
        match self {
            BorelGen::ESigma => e_sigma(order),
            BorelGen::V => BorelSeries::v(order),
            BorelGen::H => BorelSeries::h(order),
            BorelGen::X => BorelSeries::x(order),
        }
    }
}

fn e_minus_sigma(order: u32) -> BorelSeries {
    e_sigma(order).inverse().expect("unit constant term")
}

fn e_minus_two_sigma(order: u32) -> BorelSeries {
    let e = e_minus_sigma(order);
    &e * &e
}

/// The listed coproducts of `e^σ`, `V` and `H`, and `Δ(X) = X⊗1 + 1⊗X + pX⊗X`.
pub fn coproduct_borel(g: BorelGen, order: u32) -> BorelTensor {
    let one = BorelSeries::one(order);
    match g {
        BorelGen::ESigma => {
            let e = e_sigma(order);
            BorelTensor::product_of(&[&e, &e], order)
        }
        BorelGen::V => {
            let (e, v) = (e_sigma(order), BorelSeries::v(order));
            BorelTensor::product_of(&[&e, &v], order).add(&BorelTensor::product_of(&[&v, &one], order))
        }
        BorelGen::H => {
            let (h, v) = (BorelSeries::h(order), BorelSeries::v(order));
            let em2 = e_minus_two_sigma(order);
            let left = (&v * &e_minus_sigma(order)).scale(&p());
            BorelTensor::product_of(&[&one, &h], order)
                .add(&BorelTensor::product_of(&[&left, &(&v * &em2)], order))
                .add(&BorelTensor::product_of(&[&h, &em2], order))
        }
        BorelGen::X => {
            let x = BorelSeries::x(order);
            BorelTensor::product_of(&[&x, &one], order)
                .add(&BorelTensor::product_of(&[&one, &x], order))
                .add(&BorelTensor::product_of(&[&x, &x], order).scale(&p()))
        }
    }
}

/// `Δ(V^ε H^m X^n) = Δ(V)^ε Δ(H)^m Δ(X)^n`.
pub fn delta_mono(m: &Mono, order: u32) -> BorelTensor {
    let mut acc = BorelTensor::identity(2, order);
    if m.v == 1 {
        acc = acc.mul(&coproduct_borel(BorelGen::V, order));
    }
    if m.h > 0 {
        let dh = coproduct_borel(BorelGen::H, order);
        for _ in 0..m.h {
            acc = acc.mul(&dh);
        }
    }
    if m.x > 0 {
        let dx = coproduct_borel(BorelGen::X, order);
        for _ in 0..m.x {
            acc = acc.mul(&dx);
        }
    }
    acc
}

/// `Δ` extended multiplicatively to a series.
pub fn delta_series(s: &BorelSeries) -> BorelTensor {
    let order = s.order();
    let mut out = BorelTensor::zero(2, order);
    for (m, c) in s.terms() {
        out = out.add(&delta_mono(m, order).scale(c));
    }
    out
}

pub fn counit_mono(m: &Mono) -> Scalar {
    if *m == Mono::ONE {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// `ε(e^σ) = 1`, `ε(V) = ε(H) = ε(X) = 0`.
pub fn counit_borel(g: BorelGen) -> Scalar {
    match g {
        BorelGen::ESigma => Scalar::one(),
        _ => Scalar::zero(),
    }
}

/// `Δ(V)² − ¼Δ(X)`.
pub fn v_square_defect(order: u32) -> BorelTensor {
    let dv = coproduct_borel(BorelGen::V, order);
    dv.mul(&dv).sub(&coproduct_borel(BorelGen::X, order).scale(&scalar::rat(q(1, 4))))
}

/// `Δ` of the series `e^σ` through `Δ(X)`, minus the listed `e^σ ⊗ e^σ`.
pub fn e_sigma_consistency_defect(order: u32) -> BorelTensor {
    delta_series(&e_sigma(order)).sub(&coproduct_borel(BorelGen::ESigma, order))
}

/// `Δ(e^σ)·Δ(e^{−σ}) − 1⊗1`.
pub fn group_like_defect(order: u32) -> BorelTensor {
    let d = coproduct_borel(BorelGen::ESigma, order);
    let inv = delta_series(&e_minus_sigma(order));
    d.mul(&inv).sub(&BorelTensor::identity(2, order))
}

fn commutator(x: &BorelTensor, y: &BorelTensor) -> BorelTensor {
    x.mul(y).sub(&y.mul(x))
}

/// `Δ` applied to `[H,X] − X`, `[H,V] − ½V`, `V² − ¼X` and `[X,V]`.
pub fn relation_defects(order: u32) -> Vec<(&'static str, BorelTensor)> {
    let d = |g| coproduct_borel(g, order);
    let (dh, dv, dx) = (d(BorelGen::H), d(BorelGen::V), d(BorelGen::X));
    let half = scalar::rat(q(1, 2));
    vec![
        ("[H,X] = X", commutator(&dh, &dx).sub(&dx)),
        ("[H,V] = V/2", commutator(&dh, &dv).sub(&dv.scale(&half))),
        ("V^2 = X/4", v_square_defect(order)),
        ("[X,V] = 0", commutator(&dx, &dv)),
    ]
}

/// `(Δ⊗id)Δ(g) − (id⊗Δ)Δ(g)`.
pub fn coassociativity_defect(g: BorelGen, order: u32) -> BorelTensor {
    let d = coproduct_borel(g, order);
    d.expand_leg(0).sub(&d.expand_leg(1))
}

pub fn coassociativity_check(order: u32) -> bool {
    BorelGen::HOPF.iter().all(|&g| coassociativity_defect(g, order).is_zero())
}

/// `(ε⊗id)Δ(g) − g` and `(id⊗ε)Δ(g) − g`.
pub fn counit_defects(g: BorelGen, order: u32) -> (BorelSeries, BorelSeries) {
    let d = coproduct_borel(g, order);
    let s = g.series(order);
    (&d.counit_leg(0).to_series() - &s, &d.counit_leg(1).to_series() - &s)
}

/// A candidate antipode: `S(e^σ) = e^{−σ}`, `S(V) = −e^{−σ}V`,
/// `S(H) = −H·e^{2σ} + (p/4)X`, extended as an anti-homomorphism.
pub fn antipode_candidate(g: BorelGen, order: u32) -> BorelSeries {
    match g {
        BorelGen::ESigma => e_minus_sigma(order),
        BorelGen::V => -(&e_minus_sigma(order) * &BorelSeries::v(order)),
        BorelGen::H => {
            let e = e_sigma(order);
            let h = BorelSeries::h(order);
            &(-(&h * &(&e * &e))) + &BorelSeries::x(order).scale(&(p().scale(&q(1, 4))))
        }
        BorelGen::X => {
            let em2 = e_minus_two_sigma(order);
            let d = &em2 - &BorelSeries::one(order);
            // (e^{−2σ} − 1)/p, coefficientwise.
            let mut out = BorelSeries::zero(order);
            for (m, c) in d.terms() {
                out.add_term(*m, scalar::div_exact(c, &p()).expect("divisible by p"));
            }
            out
        }
    }
}

/// The candidate on a monomial, `S(V^ε H^m X^n) = S(X)^n S(H)^m S(V)^ε`.
pub fn antipode_mono(m: &Mono, order: u32) -> BorelSeries {
    let mut acc = BorelSeries::one(order);
    for _ in 0..m.x {
        acc = &acc * &antipode_candidate(BorelGen::X, order);
    }
    for _ in 0..m.h {
        acc = &acc * &antipode_candidate(BorelGen::H, order);
    }
    if m.v == 1 {
        acc = &acc * &antipode_candidate(BorelGen::V, order);
    }
    acc
}

/// `m(S⊗id)Δ(g) − ε(g)` and `m(id⊗S)Δ(g) − ε(g)` for the candidate.
pub fn antipode_defects(g: BorelGen, order: u32) -> (BorelSeries, BorelSeries) {
    let d = coproduct_borel(g, order);
    let s = |m: &Mono| antipode_mono(m, order);
    let eps = BorelSeries::constant(counit_borel(g), order);
    (&d.multiply_legs(&s, true) - &eps, &d.multiply_legs(&s, false) - &eps)
}

/// Checks every Hopf identity on the generators at the given order.
pub fn hopf_summary(order: u32) -> Result<bool> {
    let mut ok = v_square_defect(order).is_zero() && group_like_defect(order).is_zero();
    ok &= relation_defects(order).iter().all(|(_, d)| d.is_zero());
    ok &= coassociativity_check(order);
    for g in BorelGen::HOPF {
        let (a, b) = counit_defects(g, order);
        ok &= a.is_zero() && b.is_zero();
    }
    Ok(ok)
}
