//! Exact integer linear algebra: characteristic polynomials by the
//! Faddeev-LeVerrier trace recurrence (divisions exact over the integers)
//! and rank/nullity by Bareiss fraction-free elimination with full pivoting.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::poly::BigPoly;
use crate::{Error, Result};

/// Dimension cap for the exact characteristic-polynomial path. Larger
/// matrices are handled by per-eigenvalue nullity checks plus the numeric
/// oracle.
pub const CHAR_POLY_CAP: usize = 128;

/// A dense square matrix of exact integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    a: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, a: vec![0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix expected");
        IntMatrix {
            n,
            a: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.a[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[i64] {
        &self.a
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.a[i * self.n..(i + 1) * self.n].iter().sum()
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// Monic characteristic polynomial det(lambda*I - M) by Faddeev-LeVerrier:
/// M_1 = M, c_{n-1} = -tr(M_1), M_{k+1} = M (M_k + c_{n-k} I),
/// c_{n-k-1} = -tr(M_{k+1}) / (k+1). Every division is exact.
pub fn char_poly(m: &IntMatrix) -> Result<BigPoly> {
    let n = m.dim();
    if n > CHAR_POLY_CAP {
        return Err(Error::UseNullityPath(n, CHAR_POLY_CAP));
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    if n == 0 {
        return Ok(BigPoly::new(coeffs));
    }
    let a: Vec<BigInt> = m.a.iter().map(|&v| BigInt::from(v)).collect();
    let mut work: Vec<BigInt> = a.clone(); // M_1 = M
    let mut c = -trace(&work, n);
    coeffs[n - 1] = c.clone();
    let mut next = vec![BigInt::zero(); n * n];
    for k in 1..n {
        // next = A * (work + c I)
        for i in 0..n {
            work[i * n + i] += &c;
        }
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for l in 0..n {
                    if !a[i * n + l].is_zero() {
                        s += &a[i * n + l] * &work[l * n + j];
                    }
                }
                next[i * n + j] = s;
            }
        }
        std::mem::swap(&mut work, &mut next);
        let t = trace(&work, n);
        c = -t / BigInt::from((k + 1) as i64);
        coeffs[n - k - 1] = c.clone();
    }
    Ok(BigPoly::new(coeffs))
}

fn trace(a: &[BigInt], n: usize) -> BigInt {
    (0..n).map(|i| &a[i * n + i]).sum()
}

/// Exact determinant by Bareiss fraction-free elimination. Independent of
/// the Faddeev-LeVerrier route, so the two can cross-check each other.
pub fn bareiss_det(m: &IntMatrix) -> BigInt {
    let n = m.dim();
    let mut a: Vec<BigInt> = m.a.iter().map(|&v| BigInt::from(v)).collect();
    match bareiss_eliminate(&mut a, n) {
        BareissOutcome::FullRank { det, sign } => {
            if sign < 0 {
                -det
            } else {
                det
            }
        }
        BareissOutcome::Singular { .. } => BigInt::zero(),
    }
}

/// dim - rank of (M - mu*I), rank by fraction-free elimination with full
/// pivoting.
pub fn nullity_at(m: &IntMatrix, mu: i64) -> usize {
    let n = m.dim();
    let mut a: Vec<BigInt> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j) - if i == j { mu } else { 0 };
            a.push(BigInt::from(v));
        }
    }
    match bareiss_eliminate(&mut a, n) {
        BareissOutcome::FullRank { .. } => 0,
        BareissOutcome::Singular { rank } => n - rank,
    }
}

enum BareissOutcome {
    FullRank { det: BigInt, sign: i32 },
    Singular { rank: usize },
}

/// In-place Bareiss elimination with full pivoting (largest-magnitude
/// pivot). Returns the determinant when the matrix has full rank, or the
/// rank when a zero pivot block is reached.
fn bareiss_eliminate(a: &mut [BigInt], n: usize) -> BareissOutcome {
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        // full pivot search over the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in k..n {
            for j in k..n {
                if !a[i * n + j].is_zero()
                    && best.map_or(true, |(bi, bj)| {
                        a[i * n + j].abs() > a[bi * n + bj].abs()
                    })
                {
                    best = Some((i, j));
                }
            }
        }
        let (pi, pj) = match best {
            Some(p) => p,
            None => return BareissOutcome::Singular { rank: k },
        };
        if pi != k {
            for j in 0..n {
                a.swap(pi * n + j, k * n + j);
            }
            sign = -sign;
        }
        if pj != k {
            for i in 0..n {
                a.swap(i * n + pj, i * n + k);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i * n + j] * &pivot - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = num / &prev; // exact by Sylvester's identity
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    BareissOutcome::FullRank { det: prev, sign }
}
