//! Eigenvalues of small dense complex matrices: Householder reduction to
//! upper Hessenberg form followed by single-shift complex QR with Wilkinson
//! shifts and deflation.

use num_complex::Complex;
use num_traits::Zero;

use super::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EigenOptions {
    /// Largest accepted matrix order.
    pub max_order: usize,
    /// Iteration budget is `iterations_per_order * n`.
    pub iterations_per_order: usize,
}

impl Default for EigenOptions {
    fn default() -> Self {
        Self {
            max_order: 16,
            iterations_per_order: 500,
        }
    }
}

/// All `n` eigenvalues of `a`, with multiplicity, in no particular order.
pub fn eigenvalues<T: Scalar>(a: &CMatrix<T>, opts: &EigenOptions) -> Result<Vec<Complex<T>>> {
    let n = a.require_square()?;
    if n > opts.max_order {
        return Err(Error::TooLarge {
            n,
            max: opts.max_order,
        });
    }
    if !a.is_finite() {
        return Err(Error::NonFinite("matrix"));
    }
    let mut h = a.clone();
    hessenberg(&mut h);
    qr_iterate(&mut h, opts.iterations_per_order * n.max(1))?;
    Ok((0..n).map(|k| h[(k, k)]).collect())
}

/// In-place similarity reduction to upper Hessenberg form.
fn hessenberg<T: Scalar>(h: &mut CMatrix<T>) {
    let n = h.rows();
    for k in 0..n.saturating_sub(2) {
        let x: Vec<Complex<T>> = (k + 1..n).map(|r| h[(r, k)]).collect();
        let xnorm = super::cmatrix::vector_norm(&x);
        if xnorm == T::zero() {
            continue;
        }
        let phase = if x[0].norm() == T::zero() {
            Complex::new(T::one(), T::zero())
        } else {
            x[0] / x[0].norm()
        };
        // v = x + phase*|x| e1, reflector I - 2 v v^H / (v^H v)
        let mut v = x;
        v[0] = v[0] + phase.scale(xnorm);
        let vnorm = super::cmatrix::vector_norm(&v);
        let v: Vec<Complex<T>> = v.into_iter().map(|c| c.unscale(vnorm)).collect();
        let two = T::two();

        // left: rows k+1.., all columns from k
        for col in k..n {
            let dot = v
                .iter()
                .enumerate()
                .fold(Complex::<T>::zero(), |acc, (i, vi)| acc + vi.conj() * h[(k + 1 + i, col)]);
            for (i, vi) in v.iter().enumerate() {
                h[(k + 1 + i, col)] = h[(k + 1 + i, col)] - vi.scale(two) * dot;
            }
        }
        // right: all rows, columns k+1..
        for row in 0..n {
            let dot = v
                .iter()
                .enumerate()
                .fold(Complex::<T>::zero(), |acc, (i, vi)| acc + h[(row, k + 1 + i)] * *vi);
            for (i, vi) in v.iter().enumerate() {
                h[(row, k + 1 + i)] = h[(row, k + 1 + i)] - dot * vi.conj().scale(two);
            }
        }
        for r in k + 2..n {
            h[(r, k)] = Complex::zero();
        }
    }
}

/// Givens pair `(c, s)` with `[[c̄, s̄], [-s, c]] (x, y)^T = (r, 0)^T`.
fn givens<T: Scalar>(x: Complex<T>, y: Complex<T>) -> (Complex<T>, Complex<T>) {
    let r = (x.norm_sqr() + y.norm_sqr()).sqrt();
    if r == T::zero() {
        (Complex::new(T::one(), T::zero()), Complex::zero())
    } else {
        (x.unscale(r), y.unscale(r))
    }
}

fn wilkinson_shift<T: Scalar>(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> Complex<T> {
    let half = T::half();
    let tr_half = (a + d).scale(half);
    let diff_half = (a - d).scale(half);
    let disc = (diff_half * diff_half + b * c).sqrt();
    let l1 = tr_half + disc;
    let l2 = tr_half - disc;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

fn qr_iterate<T: Scalar>(h: &mut CMatrix<T>, budget: usize) -> Result<()> {
    let n = h.rows();
    if n <= 1 {
        return Ok(());
    }
    let eps = T::epsilon();
    let scale_floor = h.frobenius_norm() * eps;
    let mut hi = n - 1;
    let mut total = 0usize;
    let mut since_deflation = 0usize;

    while hi > 0 {
        // find the start of the active unreduced block
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let local = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if sub <= eps * local || sub <= scale_floor {
                h[(lo, lo - 1)] = Complex::zero();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        if total >= budget {
            return Err(Error::ConvergenceFailure(total));
        }
        total += 1;
        since_deflation += 1;

        let mu = if since_deflation % 11 == 10 {
            // exceptional shift to break cycles
            h[(hi, hi)] + Complex::new(h[(hi, hi - 1)].norm() * T::of(0.75), T::zero())
        } else {
            wilkinson_shift(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            )
        };
        qr_step(h, lo, hi, mu);
    }
    Ok(())
}

/// One explicit shifted QR step `H - μI = QR`, `H ← RQ + μI` on the block `lo..=hi`.
fn qr_step<T: Scalar>(h: &mut CMatrix<T>, lo: usize, hi: usize, mu: Complex<T>) {
    for k in lo..=hi {
        h[(k, k)] = h[(k, k)] - mu;
    }
    let mut rotations = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
        for col in k..=hi {
            let a = h[(k, col)];
            let b = h[(k + 1, col)];
            h[(k, col)] = c.conj() * a + s.conj() * b;
            h[(k + 1, col)] = -s * a + c * b;
        }
        rotations.push((c, s));
    }
    for (offset, (c, s)) in rotations.into_iter().enumerate() {
        let k = lo + offset;
        for row in lo..=(k + 1).min(hi) {
            let a = h[(row, k)];
            let b = h[(row, k + 1)];
            h[(row, k)] = a * c + b * s;
            h[(row, k + 1)] = -a * s.conj() + b * c.conj();
        }
    }
    for k in lo..=hi {
        h[(k, k)] = h[(k, k)] + mu;
    }
}
