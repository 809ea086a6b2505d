//! One-sided Jacobi (Hestenes) singular value decomposition for complex
//! matrices. Accurate small singular values make it the rank detector for
//! kernels and approximate eigenvectors.

use num_complex::Complex;
use num_traits::Zero;

use super::cmatrix::{vector_norm, CMatrix};
use crate::scalar::Scalar;

const MAX_SWEEPS: usize = 80;

/// `A = U Σ V^H`; only `Σ` and `V` are kept.
#[derive(Clone, Debug)]
pub struct Svd<T> {
    /// Descending.
    pub singular_values: Vec<T>,
    /// Right singular vectors, as columns, in the order of `singular_values`.
    pub v: CMatrix<T>,
}

impl<T: Scalar> Svd<T> {
    pub fn new(a: &CMatrix<T>) -> Self {
        let n = a.cols();
        let mut cols: Vec<Vec<Complex<T>>> = (0..n).map(|c| a.column(c)).collect();
        let mut vcols: Vec<Vec<Complex<T>>> = (0..n)
            .map(|c| {
                (0..n)
                    .map(|r| if r == c { Complex::new(T::one(), T::zero()) } else { Complex::zero() })
                    .collect()
            })
            .collect();
        let eps = T::epsilon();

        for _ in 0..MAX_SWEEPS {
            let mut rotated = false;
            for p in 0..n {
                for q in p + 1..n {
                    let alpha = cols[p].iter().fold(T::zero(), |s, x| s + x.norm_sqr());
                    let beta = cols[q].iter().fold(T::zero(), |s, x| s + x.norm_sqr());
                    let gamma = cols[p]
                        .iter()
                        .zip(&cols[q])
                        .fold(Complex::zero(), |s, (x, y)| s + x.conj() * *y);
                    let g = gamma.norm();
                    if g == T::zero() || g <= eps * (alpha * beta).sqrt() {
                        continue;
                    }
                    rotated = true;
                    let phase = gamma.unscale(g);
                    let zeta = (beta - alpha) / (T::two() * g);
                    let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                    let cs = T::one() / (T::one() + t * t).sqrt();
                    let sn = cs * t;
                    rotate(&mut cols, p, q, cs, sn, phase);
                    rotate(&mut vcols, p, q, cs, sn, phase);
                }
            }
            if !rotated {
                break;
            }
        }

        let mut order: Vec<(T, usize)> = cols.iter().map(|c| vector_norm(c)).zip(0..n).collect();
        order.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(std::cmp::Ordering::Equal));
        let v = CMatrix::from_fn(n, n, |r, c| vcols[order[c].1][r]);
        Self {
            singular_values: order.iter().map(|(s, _)| *s).collect(),
            v,
        }
    }

    pub fn sigma_max(&self) -> T {
        self.singular_values.first().copied().unwrap_or_else(T::zero)
    }

    pub fn sigma_min(&self) -> T {
        self.singular_values.last().copied().unwrap_or_else(T::zero)
    }

    /// Right singular vectors whose singular value is at most `cutoff`:
    /// an orthonormal basis of the numerical null space.
    pub fn null_space(&self, cutoff: T) -> Vec<Vec<Complex<T>>> {
        self.singular_values
            .iter()
            .enumerate()
            .filter(|(_, s)| **s <= cutoff)
            .map(|(c, _)| self.v.column(c))
            .collect()
    }

    /// Right singular vector of the smallest singular value.
    pub fn min_vector(&self) -> Option<Vec<Complex<T>>> {
        let n = self.singular_values.len();
        (n > 0).then(|| self.v.column(n - 1))
    }
}

// [p q] <- [p q] [[c, s φ], [-s φ̄, c]]
fn rotate<T: Scalar>(cols: &mut [Vec<Complex<T>>], p: usize, q: usize, c: T, s: T, phase: Complex<T>) {
    let (head, tail) = cols.split_at_mut(q);
    let cp = &mut head[p];
    let cq = &mut tail[0];
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let a = *x;
        let b = *y;
        *x = a.scale(c) - (phase.conj() * b).scale(s);
        *y = (phase * a).scale(s) + b.scale(c);
    }
}

/// Largest singular value: the operator norm induced by the Euclidean norm.
pub fn spectral_norm<T: Scalar>(a: &CMatrix<T>) -> T {
    Svd::new(a).sigma_max()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn diagonal_singular_values() {
        let a = CMatrix::from_diagonal(&[c(3.0, 0.0), c(0.0, -1.0), c(0.0, 0.0)]);
        let svd = Svd::new(&a);
        assert_eq!(svd.singular_values, vec![3.0, 1.0, 0.0]);
        let ns = svd.null_space(1e-12);
        assert_eq!(ns.len(), 1);
        assert!((ns[0][2].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rank_one() {
        // u v^H with u = (1, i), v = (1, 1)
        let a = CMatrix::from_rows(vec![vec![c(1.0, 0.0), c(1.0, 0.0)], vec![c(0.0, 1.0), c(0.0, 1.0)]])
            .unwrap();
        let svd = Svd::new(&a);
        assert!((svd.sigma_max() - 2.0).abs() < 1e-14);
        assert!(svd.sigma_min() < 1e-14);
        let v = svd.min_vector().unwrap();
        let av = a.mul_vec(&v).unwrap();
        assert!(vector_norm(&av) < 1e-14);
    }

    #[test]
    fn reconstruct_norms() {
        // ‖A v_k‖ = σ_k for every right singular vector
        let a = CMatrix::from_rows(vec![
            vec![c(1.0, 2.0), c(-0.5, 0.1), c(0.3, 0.0)],
            vec![c(0.0, -1.0), c(2.0, 0.5), c(1.0, 1.0)],
            vec![c(0.7, 0.7), c(0.0, 0.0), c(-1.5, 0.2)],
        ])
        .unwrap();
        let svd = Svd::new(&a);
        for (k, s) in svd.singular_values.iter().enumerate() {
            let av = a.mul_vec(&svd.v.column(k)).unwrap();
            assert!((vector_norm(&av) - s).abs() < 1e-13);
        }
        let vhv = &svd.v.conj_transpose() * &svd.v;
        assert!(vhv.max_abs_diff(&CMatrix::identity(3)) < 1e-14);
    }
}
