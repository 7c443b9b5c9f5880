//! Banded matrices with LU factorization (partial pivoting).
//!
//! LAPACK-style band storage with `kl` extra superdiagonals for pivoting
//! fill-in. Used for the implicit time-stepping systems (complex, bandwidth 4
//! from the 4th-order stencils) and for explicit operator assembly.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Scalar admissible in a linear solve.
pub trait LinScalar:
    Copy
    + PartialEq
    + std::fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const ZERO: Self;
    const ONE: Self;
    fn modulus(self) -> f64;
}

impl LinScalar for f64 {
    const ZERO: Self = 0.0;
    const ONE: Self = 1.0;
    fn modulus(self) -> f64 {
        self.abs()
    }
}

impl LinScalar for Complex64 {
    const ZERO: Self = Complex64::new(0.0, 0.0);
    const ONE: Self = Complex64::new(1.0, 0.0);
    fn modulus(self) -> f64 {
        // 1-norm modulus; cheaper than hypot and fine for pivoting.
        self.re.abs() + self.im.abs()
    }
}

/// n x n matrix with `kl` subdiagonals and `ku` superdiagonals.
#[derive(Debug, Clone)]
pub struct BandedMatrix<T: LinScalar> {
    n: usize,
    kl: usize,
    ku: usize,
    /// Column-major band storage, `ldab = 2*kl + ku + 1` rows per column;
    /// entry (i, j) lives at `data[j * ldab + kl + ku + i - j]`.
    data: Vec<T>,
}

impl<T: LinScalar> BandedMatrix<T> {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        assert!(n > 0 && kl < n && ku < n);
        let ldab = 2 * kl + ku + 1;
        BandedMatrix {
            n,
            kl,
            ku,
            data: vec![T::ZERO; n * ldab],
        }
    }

    /// Assemble from an entry oracle over the band.
    pub fn from_fn(n: usize, kl: usize, ku: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(n, kl, ku);
        for i in 0..n {
            let lo = i.saturating_sub(kl);
            let hi = (i + ku).min(n - 1);
            for j in lo..=hi {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bandwidths(&self) -> (usize, usize) {
        (self.kl, self.ku)
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        let ldab = 2 * self.kl + self.ku + 1;
        j * ldab + self.kl + self.ku + i - j
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        if j + self.kl >= i && i + self.ku >= j {
            self.data[self.idx(i, j)]
        } else {
            T::ZERO
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(
            j + self.kl >= i && i + self.ku >= j,
            "entry ({i}, {j}) outside band (kl={}, ku={})",
            self.kl,
            self.ku
        );
        let k = self.idx(i, j);
        self.data[k] = v;
    }

    /// y = A x.
    pub fn matvec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.n);
        let mut y = vec![T::ZERO; self.n];
        for (i, yi) in y.iter_mut().enumerate() {
            let lo = i.saturating_sub(self.kl);
            let hi = (i + self.ku).min(self.n - 1);
            let mut acc = T::ZERO;
            for j in lo..=hi {
                acc = acc + self.data[self.idx(i, j)] * x[j];
            }
            *yi = acc;
        }
        y
    }

    /// LU factorization with partial pivoting; consumes the band in place.
    pub fn factor(mut self) -> Result<BandedLu<T>> {
        let n = self.n;
        let kl = self.kl;
        let ku = self.ku;
        let mut ipiv = vec![0usize; n];
        for j in 0..n {
            let p_max = (j + kl).min(n - 1);
            let mut p = j;
            let mut best = self.data[self.idx(j, j)].modulus();
            for i in j + 1..=p_max {
                let m = self.data[self.idx(i, j)].modulus();
                if m > best {
                    best = m;
                    p = i;
                }
            }
            ipiv[j] = p;
            if best == 0.0 {
                return Err(Error::Format(format!(
                    "banded matrix is numerically singular at column {j}"
                )));
            }
            if p != j {
                let col_hi = (j + ku + kl).min(n - 1);
                for jj in j..=col_hi {
                    let a = self.idx(j, jj);
                    let b = self.idx(p, jj);
                    self.data.swap(a, b);
                }
            }
            let pivot = self.data[self.idx(j, j)];
            let col_hi = (j + ku + kl).min(n - 1);
            for i in j + 1..=p_max {
                let k = self.idx(i, j);
                let m = self.data[k] / pivot;
                self.data[k] = m;
                for jj in j + 1..=col_hi {
                    let u = self.data[self.idx(j, jj)];
                    let t = self.idx(i, jj);
                    self.data[t] = self.data[t] - m * u;
                }
            }
        }
        Ok(BandedLu { mat: self, ipiv })
    }
}

/// Factored form; solves against many right-hand sides.
#[derive(Debug, Clone)]
pub struct BandedLu<T: LinScalar> {
    mat: BandedMatrix<T>,
    ipiv: Vec<usize>,
}

impl<T: LinScalar> BandedLu<T> {
    pub fn solve_in_place(&self, b: &mut [T]) {
        let n = self.mat.n;
        let kl = self.mat.kl;
        let ku = self.mat.ku;
        assert_eq!(b.len(), n);
        for j in 0..n {
            let p = self.ipiv[j];
            if p != j {
                b.swap(j, p);
            }
            let hi = (j + kl).min(n - 1);
            let bj = b[j];
            for i in j + 1..=hi {
                b[i] = b[i] - self.mat.data[self.mat.idx(i, j)] * bj;
            }
        }
        for j in (0..n).rev() {
            let bj = b[j] / self.mat.data[self.mat.idx(j, j)];
            b[j] = bj;
            let lo = j.saturating_sub(ku + kl);
            for i in lo..j {
                b[i] = b[i] - self.mat.data[self.mat.idx(i, j)] * bj;
            }
        }
    }

    pub fn solve(&self, b: &[T]) -> Vec<T> {
        let mut x = b.to_vec();
        self.solve_in_place(&mut x);
        x
    }
}
