//! Dense rational matrices and exact orthogonal matrices.

use std::fmt;
use std::ops::Mul;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gaussian::fmt_rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_ratios(rows: &[&[(i64, i64)]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = BigRational::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * rhs.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square() && *self == -self.transpose()
    }

    /// Gauss-Jordan inverse over the rationals.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(Error::SingularMatrix)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.get(col, j) / &p);
                inv.set(col, j, inv.get(col, j) / &p);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    a.set(r, j, a.get(r, j) - &f * a.get(col, j));
                    inv.set(r, j, inv.get(r, j) - &f * inv.get(col, j));
                }
            }
        }
        Ok(inv)
    }

    /// Determinant by fraction-exact elimination.
    pub fn determinant(&self) -> Result<BigRational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Ok(BigRational::zero());
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a.get(col, col).clone();
            det *= &p;
            for r in col + 1..n {
                let f = a.get(r, col) / &p;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    a.set(r, j, a.get(r, j) - &f * a.get(col, j));
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Neg for RationalMatrix {
    type Output = RationalMatrix;
    fn neg(mut self) -> RationalMatrix {
        for e in &mut self.entries {
            *e = -e.clone();
        }
        self
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = (0..self.cols).map(|j| fmt_rational(self.get(i, j))).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Square rational matrix with `R^T R = R R^T = I`, checked on construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrthogonalMatrix(RationalMatrix);

impl OrthogonalMatrix {
    pub fn new(m: RationalMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch {
                expected: m.rows(),
                found: m.cols(),
            });
        }
        let id = RationalMatrix::identity(m.rows());
        let t = m.transpose();
        if t.try_mul(&m)? != id || m.try_mul(&t)? != id {
            return Err(Error::Internal("matrix is not orthogonal".into()));
        }
        Ok(Self(m))
    }

    pub fn identity(n: usize) -> Self {
        Self(RationalMatrix::identity(n))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        self.0.get(i, j)
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        Ok(Self(self.0.try_mul(&rhs.0)?))
    }
}

impl Mul for &OrthogonalMatrix {
    type Output = OrthogonalMatrix;
    fn mul(self, rhs: &OrthogonalMatrix) -> OrthogonalMatrix {
        self.compose(rhs).expect("orthogonal matrices of equal size")
    }
}

/// Cayley transform `R = (I - A)(I + A)^{-1}` of a skew-symmetric `A`.
///
/// `I + A` is always invertible for real skew-symmetric `A`, and the result is
/// a rotation (`det R = 1`).
pub fn cayley_orthogonal(a: &RationalMatrix) -> Result<OrthogonalMatrix> {
    if !a.is_skew_symmetric() {
        return Err(Error::NotSkewSymmetric);
    }
    let id = RationalMatrix::identity(a.rows());
    let r = id.try_sub(a)?.try_mul(&id.try_add(a)?.inverse()?)?;
    OrthogonalMatrix::new(r)
}

/// Matrix with `R[i][perm[i] - 1] = signs[i]`; `perm` is a permutation of `1..=n`.
pub fn signed_permutation(perm: &[usize], signs: &[i8]) -> Result<OrthogonalMatrix> {
    let n = perm.len();
    if n == 0 {
        return Err(Error::InvalidPermutation("empty permutation".into()));
    }
    if signs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: signs.len(),
        });
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n || seen[p - 1] {
            return Err(Error::InvalidPermutation(format!("{perm:?} is not a permutation of 1..={n}")));
        }
        seen[p - 1] = true;
    }
    let mut m = RationalMatrix::zeros(n, n);
    for (i, (&p, &s)) in perm.iter().zip(signs).enumerate() {
        let value = match s {
            1 => BigRational::one(),
            -1 => -BigRational::one(),
            other => return Err(Error::InvalidPermutation(format!("sign {other} is not +1 or -1"))),
        };
        m.set(i, p - 1, value);
    }
    OrthogonalMatrix::new(m)
}

/// Every signed permutation matrix of size `n` (`n! * 2^n` of them).
pub fn all_signed_permutations(n: usize) -> Vec<OrthogonalMatrix> {
    let mut perms = Vec::new();
    permutations(&mut (1..=n).collect::<Vec<_>>(), 0, &mut perms);
    let mut out = Vec::with_capacity(perms.len() << n);
    for p in &perms {
        for mask in 0..(1u32 << n) {
            let signs: Vec<i8> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            out.push(signed_permutation(p, &signs).expect("valid signed permutation"));
        }
    }
    out
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn cayley_two_by_two() {
        let a = RationalMatrix::from_ratios(&[&[(0, 1), (1, 2)], &[(-1, 2), (0, 1)]]).unwrap();
        let rot = cayley_orthogonal(&a).unwrap();
        let want = RationalMatrix::from_ratios(&[&[(3, 5), (-4, 5)], &[(4, 5), (3, 5)]]).unwrap();
        assert_eq!(rot.matrix(), &want);
        assert_eq!(rot.matrix().determinant().unwrap(), r(1, 1));
    }

    #[test]
    fn cayley_of_zero_is_identity() {
        let rot = cayley_orthogonal(&RationalMatrix::zeros(3, 3)).unwrap();
        assert_eq!(rot, OrthogonalMatrix::identity(3));
    }

    #[test]
    fn cayley_three_by_three_block() {
        let mut a = RationalMatrix::zeros(3, 3);
        a.set(0, 1, r(1, 1));
        a.set(1, 0, r(-1, 1));
        let rot = cayley_orthogonal(&a).unwrap();
        let want = RationalMatrix::from_ratios(&[
            &[(0, 1), (-1, 1), (0, 1)],
            &[(1, 1), (0, 1), (0, 1)],
            &[(0, 1), (0, 1), (1, 1)],
        ])
        .unwrap();
        assert_eq!(rot.matrix(), &want);
    }

    #[test]
    fn cayley_rejects_non_skew() {
        let a = RationalMatrix::from_ratios(&[&[(1, 1), (0, 1)], &[(0, 1), (0, 1)]]).unwrap();
        assert_eq!(cayley_orthogonal(&a), Err(Error::NotSkewSymmetric));
    }

    #[test]
    fn signed_permutation_examples() {
        assert_eq!(signed_permutation(&[1, 2, 3], &[1, 1, 1]).unwrap(), OrthogonalMatrix::identity(3));
        let m = signed_permutation(&[1], &[-1]).unwrap();
        assert_eq!(m.get(0, 0), &r(-1, 1));
        let swap = signed_permutation(&[2, 1], &[1, -1]).unwrap();
        let want = RationalMatrix::from_ratios(&[&[(0, 1), (1, 1)], &[(-1, 1), (0, 1)]]).unwrap();
        assert_eq!(swap.matrix(), &want);
        let t = swap.matrix().transpose();
        assert_eq!(t.try_mul(swap.matrix()).unwrap(), RationalMatrix::identity(2));
    }

    #[test]
    fn signed_permutation_rejects_bad_input() {
        assert!(matches!(signed_permutation(&[1, 1], &[1, 1]), Err(Error::InvalidPermutation(_))));
        assert!(matches!(signed_permutation(&[0, 1], &[1, 1]), Err(Error::InvalidPermutation(_))));
        assert!(matches!(signed_permutation(&[1, 2], &[1, 2]), Err(Error::InvalidPermutation(_))));
    }

    #[test]
    fn signed_permutation_count() {
        assert_eq!(all_signed_permutations(1).len(), 2);
        assert_eq!(all_signed_permutations(2).len(), 8);
        assert_eq!(all_signed_permutations(3).len(), 48);
    }

    #[test]
    fn inverse_and_determinant() {
        let m = RationalMatrix::from_ratios(&[&[(2, 1), (1, 1)], &[(1, 1), (1, 1)]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.try_mul(&inv).unwrap(), RationalMatrix::identity(2));
        assert_eq!(m.determinant().unwrap(), r(1, 1));
        let singular = RationalMatrix::from_ratios(&[&[(1, 1), (2, 1)], &[(2, 1), (4, 1)]]).unwrap();
        assert_eq!(singular.inverse(), Err(Error::SingularMatrix));
    }
}
