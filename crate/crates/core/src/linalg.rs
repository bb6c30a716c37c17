//! Dense exact linear algebra over a field.

use crate::ring::Field;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(k) = (r..rows).find(|&k| !m[k][c].is_zero()) else { continue };
        m.swap(r, k);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for k in 0..rows {
            if k != r && !m[k][c].is_zero() {
                let f = m[k][c].clone();
                for j in c..cols {
                    let v = m[r][j].clone();
                    m[k][j] = m[k][j].clone() - f.clone() * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut m = m.to_vec();
    rref(&mut m).len()
}

/// A basis of `{x : m·x = 0}`.
pub fn nullspace<F: Field>(m: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{qi, Q};

    #[test]
    fn kernel_of_rank_one() {
        let m: Vec<Vec<Q>> = vec![vec![qi(1), qi(2), qi(3)], vec![qi(2), qi(4), qi(6)]];
        assert_eq!(rank(&m), 1);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s: Q = m[0].iter().zip(&v).map(|(a, b)| a * b).sum();
            assert_eq!(s, qi(0));
        }
    }
}
