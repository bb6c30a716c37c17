//! Solutions of the RLL relations of the form `A = K(X)`, `F = L(X)`,
//! `B = V·M(X)`, `E = V·N(X)`, `CL = H·P(X)`.

use num_traits::One;

use super::rll;
use super::series::BorelSeries;
use crate::error::Result;
use crate::ring::qi;
use crate::scalar::{self, p, Scalar};
use crate::Poly;

/// The five functions of `X`, as truncated series.
#[derive(Clone, Debug, PartialEq)]
pub struct AnsatzFunctions {
    pub k: BorelSeries,
    pub l: BorelSeries,
    pub m: BorelSeries,
    pub n: BorelSeries,
    pub p: BorelSeries,
}

fn c(x: Scalar, order: u32) -> BorelSeries {
    BorelSeries::constant(x, order)
}

/// `e^σ = (1 + pX)^{1/2}`.
pub fn e_sigma(order: u32) -> BorelSeries {
    BorelSeries::from_x_coeffs(&[Scalar::one(), p()], order).sqrt().expect("unit constant term")
}

impl AnsatzFunctions {
    /// `K = e^σ`, `L = e^{−σ}`, `P = 2p·e^σ`, `N = √2·p·e^{−σ}`, `M = √2·p`.
    pub fn particular(order: u32) -> Result<Self> {
        let k = e_sigma(order);
        let l = k.inverse()?;
        let sp = scalar::s() * p();
        Ok(AnsatzFunctions {
            p: k.scale(&(p() + p())),
            n: l.scale(&sp),
            m: c(sp, order),
            k,
            l,
        })
    }

    /// `K = L = 1`, `M = N = P = 0`.
    pub fn trivial(order: u32) -> Self {
        let z = BorelSeries::zero(order);
        AnsatzFunctions { k: BorelSeries::one(order), l: BorelSeries::one(order), m: z.clone(), n: z.clone(), p: z }
    }

    /// `K = 1 + pX` with `N = (2p(K² − 1)/(X·K²))^{1/2}`, `M = K·N` and
    /// `P = p(K² − 1)/(X·K′)`. Built two weights deeper since dividing by
    /// `X` loses one power.
    pub fn linear_family(order: u32) -> Result<Self> {
        let wide = order + 2;
        let k = BorelSeries::from_x_coeffs(&[Scalar::one(), p()], wide);
        let l = k.inverse()?;
        let k2m1 = &(&k * &k) - &BorelSeries::one(wide);
        let q = k2m1.div_x()?;
        let n = (&q.scale(&(p() + p())) * &(&l * &l)).sqrt()?;
        let m = &k * &n;
        let pp = q.scale(&p()).div_exact(&k.derivative()?)?;
        Ok(AnsatzFunctions {
            k: k.truncated(order),
            l: l.truncated(order),
            m: m.truncated(order),
            n: n.truncated(order),
            p: pp.truncated(order),
        })
    }

    pub fn order(&self) -> u32 {
        [&self.k, &self.l, &self.m, &self.n, &self.p].iter().map(|s| s.order()).min().unwrap_or(0)
    }

    pub fn truncated(&self, order: u32) -> Self {
        AnsatzFunctions {
            k: self.k.truncated(order),
            l: self.l.truncated(order),
            m: self.m.truncated(order),
            n: self.n.truncated(order),
            p: self.p.truncated(order),
        }
    }

    /// Images of the five letters of `L⁺`.
    pub fn images(&self) -> [BorelSeries; 5] {
        let n = self.order();
        let v = BorelSeries::v(n);
        let h = BorelSeries::h(n);
        [self.k.clone(), &v * &self.m, &h * &self.p, &v * &self.n, self.l.clone()]
    }
}

/// Residuals of `K·L = 1`, `M = K·N`, `P·X·K′ = p(K² − 1)` and
/// `(X/2)·N²·K² = p(K² − 1)`, with every division multiplied out.
pub fn condition_defects(f: &AnsatzFunctions) -> Result<[BorelSeries; 4]> {
    let n = f.order();
    let one = BorelSeries::one(n);
    let x = BorelSeries::x(n);
    let k2 = &f.k * &f.k;
    let rhs = (&k2 - &one).scale(&p());
    Ok([
        &(&f.k * &f.l) - &one,
        &f.m - &(&f.k * &f.n),
        &(&(&f.p * &x) * &f.k.derivative()?) - &rhs,
        &(&(&x * &(&f.n * &f.n)) * &k2).scale(&scalar::rat(crate::ring::q(1, 2))) - &rhs,
    ])
}

pub fn check_ansatz_conditions(f: &AnsatzFunctions) -> Result<bool> {
    Ok(condition_defects(f)?.iter().all(|d| d.is_zero()))
}

/// Evaluates a relation in the letters of `L⁺` on the ansatz images.
pub fn evaluate(rel: &Poly, f: &AnsatzFunctions) -> BorelSeries {
    let images = f.images();
    let n = f.order();
    let mut out = BorelSeries::zero(n);
    for (w, c) in rel.terms() {
        let mut acc = BorelSeries::constant(c.clone(), n);
        for &id in w.letters() {
            acc = &acc * &images[id as usize];
        }
        out = &out + &acc;
    }
    out
}

/// Each listed relation evaluated on the ansatz.
pub fn rll_defects(f: &AnsatzFunctions) -> Vec<(&'static str, BorelSeries)> {
    rll::listed_relations().into_iter().map(|(label, r)| (label, evaluate(&r, f))).collect()
}

pub fn verify_rll_solution(f: &AnsatzFunctions) -> bool {
    rll_defects(f).iter().all(|(_, d)| d.is_zero())
}

/// Constant term of `N²` in the linear family, which must be a square.
pub fn linear_family_n_squared_constant(order: u32) -> Result<Scalar> {
    let f = AnsatzFunctions::linear_family(order)?;
    let n2 = &f.n * &f.n;
    Ok(n2.x_coeffs().map(|c| c[0].clone()).unwrap_or_else(|| scalar::rat(qi(0))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qi;
    use crate::scalar::p_pow;

    #[test]
    fn family_coefficients() {
        let f = AnsatzFunctions::linear_family(8).unwrap();
        assert_eq!(f.p.x_coeffs().unwrap()[..2], [p() + p(), p_pow(qi(1), 2)]);
        assert_eq!(linear_family_n_squared_constant(8).unwrap(), p_pow(qi(4), 2));
    }

    #[test]
    fn three_solutions_pass() {
        for f in [AnsatzFunctions::particular(8).unwrap(), AnsatzFunctions::trivial(8), AnsatzFunctions::linear_family(8).unwrap()] {
            assert!(check_ansatz_conditions(&f).unwrap());
            assert!(verify_rll_solution(&f));
        }
    }
}
