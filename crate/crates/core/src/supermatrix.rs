//! Square supermatrices, the graded tensor embedding and Yang–Baxter checks.

use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring::{Ring, Q};

/// Grading of the fundamental three-dimensional index set: the middle index is odd.
pub const G3: [u8; 3] = [0, 1, 0];

#[derive(Clone, Debug, PartialEq)]
pub struct SuperMatrix<R> {
    n: usize,
    grading: Vec<u8>,
    entries: Vec<R>,
}

/// Grading of `V^{⊗k}` induced from [`G3`].
pub fn tensor_grading(legs: usize) -> Vec<u8> {
    let mut g = vec![0u8];
    for _ in 0..legs {
        g = g.iter().flat_map(|&a| G3.iter().map(move |&b| (a + b) & 1)).collect();
    }
    g
}

fn sign_of<R: Ring>(odd: bool, x: R) -> R {
    if odd {
        -x
    } else {
        x
    }
}

impl<R: Ring> SuperMatrix<R> {
    pub fn from_vec(n: usize, grading: Vec<u8>, entries: Vec<R>) -> Self {
        assert_eq!(entries.len(), n * n);
        assert_eq!(grading.len(), n);
        SuperMatrix { n, grading, entries }
    }

    pub fn from_fn(grading: Vec<u8>, f: impl Fn(usize, usize) -> R) -> Self {
        let n = grading.len();
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        SuperMatrix { n, grading, entries }
    }

    pub fn zero(grading: Vec<u8>) -> Self {
        Self::from_fn(grading, |_, _| R::zero())
    }

    pub fn identity(grading: Vec<u8>) -> Self {
        Self::from_fn(grading, |i, j| if i == j { R::one() } else { R::zero() })
    }

    /// A 3×3 matrix with the standard grading, from rows.
    pub fn from_rows3(rows: [[R; 3]; 3]) -> Self {
        let entries = rows.into_iter().flatten().collect();
        Self::from_vec(3, G3.to_vec(), entries)
    }

    /// The elementary matrix `e_ij` in dimension 3 (zero-based indices).
    pub fn elementary(i: usize, j: usize) -> Self {
        Self::from_fn(G3.to_vec(), |a, b| if (a, b) == (i, j) { R::one() } else { R::zero() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn grading(&self) -> &[u8] {
        &self.grading
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    /// Parity of entry `(i, j)`.
    pub fn entry_grade(&self, i: usize, j: usize) -> u8 {
        (self.grading[i] + self.grading[j]) & 1
    }

    /// Verifies that each nonzero entry has the parity required by its position.
    pub fn check_grading(&self, grade_of: impl Fn(&R) -> Option<u8>) -> Result<()> {
        for i in 0..self.n {
            for j in 0..self.n {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                if grade_of(e) != Some(self.entry_grade(i, j)) {
                    return Err(Error::GradingViolation(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SuperMatrix<S> {
        SuperMatrix { n: self.n, grading: self.grading.clone(), entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> std::result::Result<S, E>) -> std::result::Result<SuperMatrix<S>, E> {
        Ok(SuperMatrix { n: self.n, grading: self.grading.clone(), entries: self.entries.iter().map(f).collect::<std::result::Result<_, _>>()? })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(R::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.grading.clone(), |i, j| self.get(j, i).clone())
    }

    /// `(Mˢᵗ)_ij = (−1)^{(g(i)+g(j))g(i)} M_ji`.
    pub fn supertranspose(&self) -> Self {
        let g = &self.grading;
        Self::from_fn(g.clone(), |i, j| sign_of((g[i] + g[j]) * g[i] % 2 == 1, self.get(j, i).clone()))
    }

    /// Kronecker product without signs; the grading is the induced one.
    pub fn kron(&self, o: &Self) -> Self {
        let grading: Vec<u8> = self.grading.iter().flat_map(|&a| o.grading.iter().map(move |&b| (a + b) & 1)).collect();
        let m = o.n;
        Self::from_fn(grading, |r, c| self.get(r / m, c / m).clone() * o.get(r % m, c % m).clone())
    }

    /// `T ⊗ 1` with the graded signs `(−1)^{(g(i)+g(j))g(k)}` on entry `((i,k),(j,k))`.
    pub fn embed_left(&self) -> Self {
        assert_eq!(self.n, 3);
        let g = &self.grading;
        Self::from_fn(tensor_grading(2), |r, c| {
            let (i, k, j, l) = (r / 3, r % 3, c / 3, c % 3);
            if k != l {
                return R::zero();
            }
            sign_of((g[i] + g[j]) * g[k] % 2 == 1, self.get(i, j).clone())
        })
    }

    /// `1 ⊗ T`, block diagonal and sign free.
    pub fn embed_right(&self) -> Self {
        assert_eq!(self.n, 3);
        Self::from_fn(tensor_grading(2), |r, c| if r / 3 == c / 3 { self.get(r % 3, c % 3).clone() } else { R::zero() })
    }

    /// Partial transpose on the first leg of a 9×9 matrix:
    /// entry `((i,m),(j,n))` moves to `((j,m),(i,n))`, multiplied by
    /// `(−1)^{(g(i)+g(j))g(j)}` when `graded`.
    pub fn partial_transpose_first(&self, graded: bool) -> Self {
        assert_eq!(self.n, 9);
        Self::from_fn(self.grading.clone(), |r, c| {
            let (j, m, i, n) = (r / 3, r % 3, c / 3, c % 3);
            let v = self.get(3 * i + m, 3 * j + n).clone();
            sign_of(graded && (G3[i] + G3[j]) * G3[j] % 2 == 1, v)
        })
    }

    /// Sign twist `(−1)^{g(i)g(m)}` on rows `(i,m)` of a 9×9 matrix.
    pub fn desuperize(&self) -> Self {
        assert_eq!(self.n, 9);
        Self::from_fn(self.grading.clone(), |r, c| sign_of(G3[r / 3] * G3[r % 3] == 1, self.get(r, c).clone()))
    }

    /// Smallest `k` with `self^k = 0`, if at most the dimension.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let mut pw = self.clone();
        for k in 1..=self.n {
            if pw.is_zero() {
                return Some(k);
            }
            pw = &pw * self;
        }
        None
    }

    /// `Σ_{k<N} M^k t^k / k!` where `M^N = 0`.
    pub fn exp_nilpotent(&self, t: &R) -> Result<Self> {
        let idx = self.nilpotency_index().ok_or(Error::NotNilpotent)?;
        Ok(self.exp_truncated(t, idx))
    }

    /// The exponential series cut after `order` terms; exact only when the tail vanishes.
    pub fn exp_truncated(&self, t: &R, order: usize) -> Self {
        let tm = self.scale(t);
        let mut term = Self::identity(self.grading.clone());
        let mut sum = term.clone();
        for k in 1..order {
            term = (&term * &tm).map(|x| x.scale(&Q::new(1.into(), (k as i64).into())));
            sum = sum + term.clone();
        }
        sum
    }

    /// Inverse of `1 + N` with `N` nilpotent, by the finite geometric series.
    pub fn invert_unipotent(&self) -> Result<Self> {
        let one = Self::identity(self.grading.clone());
        let nil = self.clone() - one.clone();
        let idx = nil.nilpotency_index().ok_or(Error::NotUnipotent)?;
        let neg = -nil;
        let mut term = one.clone();
        let mut sum = one;
        for _ in 1..idx {
            term = &term * &neg;
            sum = sum + term.clone();
        }
        Ok(sum)
    }
}

/// Graded embedding of `A₁ ⊗ … ⊗ A_k` into `3^k × 3^k` matrices.
///
/// The entry at rows `(i₁…i_k)`, columns `(j₁…j_k)` carries the sign
/// `(−1)^{Σ_t (g(i_t)+g(j_t)) Σ_{u>t} g(i_u)}`; for two legs this is the
/// familiar `(−1)^{(g(i)+g(j))g(k)}`.
pub fn graded_embed<R: Ring>(legs: &[&SuperMatrix<R>]) -> SuperMatrix<R> {
    let k = legs.len();
    let digits = |mut x: usize| {
        let mut d = vec![0; k];
        for t in (0..k).rev() {
            d[t] = x % 3;
            x /= 3;
        }
        d
    };
    SuperMatrix::from_fn(tensor_grading(k), |r, c| {
        let (ri, ci) = (digits(r), digits(c));
        let mut v = R::one();
        for t in 0..k {
            let e = legs[t].get(ri[t], ci[t]);
            if e.is_zero() {
                return R::zero();
            }
            v = v * e.clone();
        }
        let mut s = 0u32;
        for t in 0..k {
            let gt = (G3[ri[t]] + G3[ci[t]]) as u32;
            for u in t + 1..k {
                s += gt * G3[ri[u]] as u32;
            }
        }
        sign_of(s % 2 == 1, v)
    })
}

/// Ungraded Yang–Baxter check `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` on `V^{⊗3}`.
pub fn ybe_check<R: Ring>(r: &SuperMatrix<R>) -> bool {
    let (l, rr) = ybe_sides(r);
    l == rr
}

/// Both sides of the Yang–Baxter equation as 27×27 matrices.
pub fn ybe_sides<R: Ring>(r: &SuperMatrix<R>) -> (SuperMatrix<R>, SuperMatrix<R>) {
    assert_eq!(r.dim(), 9);
    let id3 = SuperMatrix::<R>::identity(G3.to_vec());
    let r12 = r.kron(&id3);
    let r23 = id3.kron(r);
    let p23 = swap23::<R>();
    let r13 = &(&p23 * &r12) * &p23;
    let lhs = &(&r12 * &r13) * &r23;
    let rhs = &(&r23 * &r13) * &r12;
    (lhs, rhs)
}

/// The permutation exchanging the second and third tensor legs of `V^{⊗3}`.
fn swap23<R: Ring>() -> SuperMatrix<R> {
    SuperMatrix::from_fn(tensor_grading(3), |r, c| {
        let (a, b, cc) = (r / 9, (r / 3) % 3, r % 3);
        if c == 9 * a + 3 * cc + b {
            R::one()
        } else {
            R::zero()
        }
    })
}

impl<R: Ring> Mul for &SuperMatrix<R> {
    type Output = SuperMatrix<R>;
    fn mul(self, o: &SuperMatrix<R>) -> SuperMatrix<R> {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let n = self.n;
        let entries: Vec<R> = (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (i, j) = (k / n, k % n);
                let mut acc = R::zero();
                for m in 0..n {
                    let a = self.get(i, m);
                    if a.is_zero() {
                        continue;
                    }
                    let b = o.get(m, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * b.clone();
                }
                acc
            })
            .collect();
        SuperMatrix { n, grading: self.grading.clone(), entries }
    }
}

impl<R: Ring> Mul for SuperMatrix<R> {
    type Output = SuperMatrix<R>;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<R: Ring> Add for SuperMatrix<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let entries = self.entries.into_iter().zip(o.entries).map(|(a, b)| a + b).collect();
        SuperMatrix { n: self.n, grading: self.grading, entries }
    }
}

impl<R: Ring> Sub for SuperMatrix<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<R: Ring> Neg for SuperMatrix<R> {
    type Output = Self;
    fn neg(self) -> Self {
        SuperMatrix { n: self.n, grading: self.grading, entries: self.entries.into_iter().map(|x| -x).collect() }
    }
}

impl<R: Ring> SuperMatrix<R> {
    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }
}
