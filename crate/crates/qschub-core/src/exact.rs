//! Exact arithmetic: i128 integer matrices for operator-power identities,
//! rational vectors and dense solves, rational polynomial arithmetic modulo a
//! cubic, and the quadratic extension adjoining sqrt(3).

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat_i(n: i128) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i128, den: i128) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Dense square integer matrix. Entries stay well inside i128 for every
/// operator power the checks need (the largest is ~1e16 for E7).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IMat {
    pub n: usize,
    pub a: Vec<i128>,
}

impl IMat {
    pub fn zeros(n: usize) -> Self {
        IMat { n, a: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IMat::zeros(n);
        for i in 0..n {
            m.a[i * n + i] = 1;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        self.a[i * self.n + j] = v;
    }

    pub fn mul(&self, rhs: &IMat) -> IMat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = IMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let v = self.a[i * n + k];
                if v == 0 {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] += v * rhs.a[k * n + j];
                }
            }
        }
        out
    }

    pub fn add_scaled(&self, rhs: &IMat, c: i128) -> IMat {
        let mut out = self.clone();
        for (o, r) in out.a.iter_mut().zip(&rhs.a) {
            *o += c * r;
        }
        out
    }

    pub fn scale(&self, c: i128) -> IMat {
        let mut out = self.clone();
        for o in out.a.iter_mut() {
            *o *= c;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// Successive powers self^1 .. self^max.
    pub fn power_table(&self, max: usize) -> Vec<IMat> {
        let mut out = Vec::with_capacity(max);
        out.push(self.clone());
        for _ in 1..max {
            let next = out.last().unwrap().mul(self);
            out.push(next);
        }
        out
    }

    /// Row vector times matrix.
    pub fn row_apply(&self, v: &[i128]) -> Vec<i128> {
        let n = self.n;
        let mut out = vec![0i128; n];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for j in 0..n {
                out[j] += vi * self.a[i * n + j];
            }
        }
        out
    }
}

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence, exact over
/// the rationals; returns monic coefficients [c_0, ..., c_{n-1}, 1] of
/// det(T I - M).
pub fn charpoly(m: &IMat) -> Vec<Rat> {
    let n = m.n;
    let mr: Vec<Rat> = m.a.iter().map(|&x| rat_i(x)).collect();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut mk: Vec<Rat> = vec![Rat::zero(); n * n];
    for i in 0..n {
        mk[i * n + i] = Rat::one();
    }
    for k in 1..=n {
        let mut next = vec![Rat::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                if mr[i * n + l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = &mr[i * n + l] * &mk[l * n + j];
                    next[i * n + j] += t;
                }
            }
        }
        mk = next;
        let trace: Rat = (0..n).map(|i| mk[i * n + i].clone()).sum();
        let ck = -trace / rat_i(k as i128);
        coeffs[n - k] = ck.clone();
        for i in 0..n {
            mk[i * n + i] += ck.clone();
        }
    }
    coeffs
}

/// Dense rational matrix with Gaussian elimination, used for the small
/// Frobenius-pairing solves.
#[derive(Clone, Debug)]
pub struct RatMat {
    pub n: usize,
    pub a: Vec<Rat>,
}

impl RatMat {
    pub fn zeros(n: usize) -> Self {
        RatMat {
            n,
            a: vec![Rat::zero(); n * n],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.a[i * self.n + j] = v;
    }

    pub fn inverse(&self) -> Result<RatMat> {
        let n = self.n;
        let mut a = self.a.clone();
        let mut inv = RatMat::zeros(n).a;
        for i in 0..n {
            inv[i * n + i] = Rat::one();
        }
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                    inv.swap(col * n + j, pivot_row * n + j);
                }
            }
            let p = a[col * n + col].clone();
            for j in 0..n {
                a[col * n + j] /= p.clone();
                inv[col * n + j] /= p.clone();
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for j in 0..n {
                    let t = f.clone() * a[col * n + j].clone();
                    a[r * n + j] -= t;
                    let t = f.clone() * inv[col * n + j].clone();
                    inv[r * n + j] -= t;
                }
            }
        }
        Ok(RatMat { n, a: inv })
    }
}

/// Polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct RatPoly(pub Vec<Rat>);

impl RatPoly {
    pub fn from_i128(c: &[i128]) -> Self {
        RatPoly(c.iter().map(|&x| rat_i(x)).collect())
    }

    pub fn trim(mut self) -> Self {
        while self.0.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn mul(&self, rhs: &RatPoly) -> RatPoly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return RatPoly(vec![]);
        }
        let mut out = vec![Rat::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly(out).trim()
    }

    /// Remainder modulo a monic-normalizable divisor.
    pub fn rem(&self, modulus: &RatPoly) -> RatPoly {
        let d = modulus.degree();
        let lead = modulus.0[d].clone();
        let mut r = self.0.clone();
        while r.len() > d {
            let k = r.len() - 1;
            let f = r[k].clone() / lead.clone();
            if !f.is_zero() {
                for i in 0..=d {
                    let t = f.clone() * modulus.0[i].clone();
                    r[k - d + i] -= t;
                }
            }
            r.pop();
        }
        RatPoly(r).trim()
    }

    pub fn pow_mod(&self, mut e: u32, modulus: &RatPoly) -> RatPoly {
        let mut base = self.rem(modulus);
        let mut acc = RatPoly(vec![Rat::one()]);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, c| {
            acc * x + c.to_f64()
        })
    }
}

trait RatToF64 {
    fn to_f64(&self) -> f64;
}
impl RatToF64 for Rat {
    fn to_f64(&self) -> f64 {
        big_to_f64(self.numer()) / big_to_f64(self.denom())
    }
}

pub fn big_to_f64(b: &BigInt) -> f64 {
    // Good enough for the magnitudes that reach the float paths.
    let s = b.to_string();
    s.parse::<f64>().unwrap_or(if b.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    RatToF64::to_f64(r)
}

/// Element a + b*sqrt(3) with rational a, b.
#[derive(Clone, Debug, PartialEq)]
pub struct Sqrt3(pub Rat, pub Rat);

impl Sqrt3 {
    pub fn new_i(a: i128, b: i128) -> Self {
        Sqrt3(rat_i(a), rat_i(b))
    }

    pub fn mul(&self, rhs: &Sqrt3) -> Sqrt3 {
        let a = &self.0 * &rhs.0 + rat_i(3) * &self.1 * &rhs.1;
        let b = &self.0 * &rhs.1 + &self.1 * &rhs.0;
        Sqrt3(a, b)
    }

    pub fn pow(&self, e: u32) -> Sqrt3 {
        let mut acc = Sqrt3(Rat::one(), Rat::zero());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn imat_powers() {
        let mut m = IMat::zeros(2);
        m.set(0, 0, 1);
        m.set(0, 1, 1);
        m.set(1, 0, 1);
        let p = m.power_table(5);
        // Fibonacci growth in the corner entry.
        assert_eq!(p[4].get(0, 0), 8);
    }

    #[test]
    fn charpoly_of_companion() {
        // Companion of T^2 - 3T + 2.
        let mut m = IMat::zeros(2);
        m.set(0, 0, 0);
        m.set(0, 1, -2);
        m.set(1, 0, 1);
        m.set(1, 1, 3);
        let c = charpoly(&m);
        assert_eq!(c, vec![rat_i(2), rat_i(-3), rat_i(1)]);
    }

    #[test]
    fn ratmat_inverse() {
        let mut m = RatMat::zeros(2);
        m.set(0, 0, rat_i(2));
        m.set(0, 1, rat_i(1));
        m.set(1, 0, rat_i(5));
        m.set(1, 1, rat_i(3));
        let inv = m.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &rat_i(3));
        assert_eq!(inv.get(0, 1), &rat_i(-1));
        assert_eq!(inv.get(1, 0), &rat_i(-5));
        assert_eq!(inv.get(1, 1), &rat_i(2));
    }

    #[test]
    fn poly_mod_arithmetic() {
        // (T^2) mod (T^2 - 2) = 2
        let t2 = RatPoly::from_i128(&[0, 0, 1]);
        let m = RatPoly::from_i128(&[-2, 0, 1]);
        assert_eq!(t2.rem(&m), RatPoly::from_i128(&[2]));
        // T^4 mod (T^2 - 2) = 4
        assert_eq!(
            RatPoly::from_i128(&[0, 1]).pow_mod(4, &m),
            RatPoly::from_i128(&[4])
        );
    }

    #[test]
    fn sqrt3_cube_identity() {
        // (3 + 2 sqrt3)^3 = 135 + 78 sqrt3, exactly.
        let x = Sqrt3::new_i(3, 2);
        assert_eq!(x.pow(3), Sqrt3::new_i(135, 78));
        let y = Sqrt3::new_i(3, -2);
        assert_eq!(y.pow(3), Sqrt3::new_i(135, -78));
    }
}
