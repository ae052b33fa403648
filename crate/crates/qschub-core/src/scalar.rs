//! Scalar abstraction for the floating-point kernels.
//!
//! Numeric evaluation is generic over [`Real`], implemented for `f64` and for
//! the double-double type [`twofloat::TwoFloat`] (~106-bit mantissa, used for
//! the 128-bit precision setting). Exact integer and rational computation
//! lives in [`crate::exact`] and does not go through this trait.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};
use std::fmt::{Debug, Display};

pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Nominal precision of the type in bits, as exposed by the CLI.
    const BITS: u32;

    fn of(x: f64) -> Self;
    fn approx(self) -> f64;
}

impl Real for f64 {
    const BITS: u32 = 64;

    fn of(x: f64) -> Self {
        x
    }
    fn approx(self) -> f64 {
        self
    }
}

impl Real for twofloat::TwoFloat {
    const BITS: u32 = 128;

    fn of(x: f64) -> Self {
        twofloat::TwoFloat::from_f64(x)
    }
    fn approx(self) -> f64 {
        self.hi()
    }
}

pub type Cx<T> = Complex<T>;

pub fn cx<T: Real>(re: f64, im: f64) -> Cx<T> {
    Complex::new(T::of(re), T::of(im))
}

pub fn cx_zero<T: Real>() -> Cx<T> {
    Complex::new(T::zero(), T::zero())
}

pub fn cx_one<T: Real>() -> Cx<T> {
    Complex::new(T::one(), T::zero())
}

/// e^{i theta} with `theta` given as the rational multiple `num/den` of pi.
///
/// Going through the rational angle keeps root-of-unity coordinates accurate
/// to the full precision of `T` instead of inheriting f64 rounding.
pub fn unit_angle<T: Real>(num: i64, den: i64) -> Cx<T> {
    let theta = T::PI() * T::of(num as f64) / T::of(den as f64);
    Complex::from_polar(T::one(), theta)
}

pub fn to_c64<T: Real>(z: Cx<T>) -> Complex<f64> {
    Complex::new(z.re.approx(), z.im.approx())
}

pub fn from_c64<T: Real>(z: Complex<f64>) -> Cx<T> {
    cx(z.re, z.im)
}

/// Deterministic pairwise summation. The reduction tree depends only on the
/// slice length, so results are bitwise reproducible for any thread count
/// used to produce the terms.
pub fn pairwise_sum<T: Real>(terms: &[Cx<T>]) -> Cx<T> {
    match terms.len() {
        0 => cx_zero(),
        1 => terms[0],
        n => {
            let mid = n / 2;
            pairwise_sum(&terms[..mid]) + pairwise_sum(&terms[mid..])
        }
    }
}

/// Dense complex matrix with an LU-based solver, used for the small
/// evaluation-matrix systems (rank <= 56).
#[derive(Clone, Debug)]
pub struct CMat<T: Real> {
    pub n: usize,
    pub a: Vec<Cx<T>>,
}

impl<T: Real> CMat<T> {
    pub fn zeros(n: usize) -> Self {
        CMat {
            n,
            a: vec![cx_zero(); n * n],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Cx<T> {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cx<T>) {
        self.a[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = CMat::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn matvec(&self, x: &[Cx<T>]) -> Vec<Cx<T>> {
        let mut y = vec![cx_zero(); self.n];
        for i in 0..self.n {
            let mut s = cx_zero();
            for j in 0..self.n {
                s = s + self.get(i, j) * x[j];
            }
            y[i] = s;
        }
        y
    }

    /// LU factorization with partial pivoting.
    pub fn lu(&self) -> Result<CLu<T>, crate::error::Error> {
        let n = self.n;
        let mut a = self.a.clone();
        let mut piv: Vec<usize> = (0..n).collect();
        let mut min_pivot = T::infinity();
        let mut max_pivot = T::zero();
        for k in 0..n {
            let mut best = k;
            let mut best_val = a[piv[k] * n + k].norm();
            for r in k + 1..n {
                let v = a[piv[r] * n + k].norm();
                if v > best_val {
                    best = r;
                    best_val = v;
                }
            }
            piv.swap(k, best);
            if best_val == T::zero() {
                return Err(crate::error::Error::SingularMatrix);
            }
            min_pivot = min_pivot.min(best_val);
            max_pivot = max_pivot.max(best_val);
            let pk = piv[k];
            let diag = a[pk * n + k];
            for r in k + 1..n {
                let pr = piv[r];
                let f = a[pr * n + k] / diag;
                a[pr * n + k] = f;
                for c in k + 1..n {
                    let t = a[pk * n + c];
                    a[pr * n + c] = a[pr * n + c] - f * t;
                }
            }
        }
        Ok(CLu {
            n,
            a,
            piv,
            pivot_ratio: (max_pivot / min_pivot).approx(),
        })
    }
}

/// LU factors of a [`CMat`]. `pivot_ratio` is a cheap conditioning proxy
/// (max pivot / min pivot) reported alongside invertibility.
pub struct CLu<T: Real> {
    n: usize,
    a: Vec<Cx<T>>,
    piv: Vec<usize>,
    pub pivot_ratio: f64,
}

impl<T: Real> CLu<T> {
    pub fn solve(&self, b: &[Cx<T>]) -> Vec<Cx<T>> {
        let n = self.n;
        let mut y = vec![cx_zero(); n];
        for i in 0..n {
            let mut s = b[self.piv[i]];
            for j in 0..i {
                s = s - self.a[self.piv[i] * n + j] * y[j];
            }
            y[i] = s;
        }
        let mut x = vec![cx_zero(); n];
        for i in (0..n).rev() {
            let mut s = y[i];
            for j in i + 1..n {
                s = s - self.a[self.piv[i] * n + j] * x[j];
            }
            x[i] = s / self.a[self.piv[i] * n + i];
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lu_solves_small_system() {
        let mut m = CMat::<f64>::zeros(2);
        m.set(0, 0, cx(2.0, 0.0));
        m.set(0, 1, cx(1.0, 0.0));
        m.set(1, 0, cx(0.0, 1.0));
        m.set(1, 1, cx(3.0, 0.0));
        let lu = m.lu().unwrap();
        let b = vec![cx(5.0, 0.0), cx(0.0, 2.0)];
        let x = lu.solve(&b);
        let r = m.matvec(&x);
        for (ri, bi) in r.iter().zip(&b) {
            assert!((ri - bi).norm() < 1e-12);
        }
    }

    #[test]
    fn pairwise_sum_matches_naive() {
        let terms: Vec<Cx<f64>> = (0..17).map(|k| cx(k as f64, -(k as f64) / 3.0)).collect();
        let naive: Cx<f64> = terms.iter().fold(cx_zero(), |a, b| a + b);
        assert!((pairwise_sum(&terms) - naive).norm() < 1e-12);
    }

    #[test]
    fn unit_angle_twofloat_is_sharper_than_f64() {
        let z = unit_angle::<twofloat::TwoFloat>(1, 4);
        let n = z.norm();
        assert!((n - twofloat::TwoFloat::from_f64(1.0)).abs().hi() < 1e-25);
    }
}
