//! Exact integer linear algebra over arbitrary-precision integers.
//!
//! Everything here works on [`IntMatrix`], a dense row-major matrix of
//! [`BigInt`]. The Smith form uses the smallest-absolute-value pivot rule
//! with ties broken by lowest `(row, col)`, so results are deterministic.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row-major entries; fails if `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Builds a matrix from nested rows. Panics on ragged input; an empty
    /// outer vector gives a 0x0 matrix.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    /// Like [`IntMatrix::from_rows`] but with an explicit column count, so
    /// that `0 x cols` matrices can be written down.
    pub fn from_rows_with_cols<T: Into<BigInt> + Clone>(rows: &[Vec<T>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row.iter().cloned().map(Into::into));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_diagonal(diag: &[BigInt]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Matrix product; fails when the inner dimensions disagree.
    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        Ok(out)
    }

    /// Rows `range` as a new matrix.
    pub fn row_slice(&self, range: std::ops::Range<usize>) -> IntMatrix {
        IntMatrix {
            rows: range.len(),
            cols: self.cols,
            data: self.data[range.start * self.cols..range.end * self.cols].to_vec(),
        }
    }

    /// Columns `range` as a new matrix.
    pub fn col_slice(&self, range: std::ops::Range<usize>) -> IntMatrix {
        let mut out = Self::zeros(self.rows, range.len());
        for i in 0..self.rows {
            for (jj, j) in range.clone().enumerate() {
                out[(i, jj)] = self[(i, j)].clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let e = &mut self[(i, j)];
            *e = -std::mem::take(e);
        }
    }

    /// `row[dst] += k * row[src]`
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self[(src, j)];
            if !s.is_zero() {
                let delta = s * k;
                self[(dst, j)] += delta;
            }
        }
    }

    /// `col[dst] += k * col[src]`
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self[(i, src)];
            if !s.is_zero() {
                let delta = s * k;
                self[(i, dst)] += delta;
            }
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    /// Panics on mismatched dimensions; use [`IntMatrix::checked_mul`] otherwise.
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix dimensions")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Smith normal form together with its unimodular witnesses:
/// `left * A * right == diag`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub left: IntMatrix,
    pub diag: IntMatrix,
    pub right: IntMatrix,
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
    /// Free rank of the cokernel `Z^cols / rowspan(A)`.
    pub free_rank: usize,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

/// Smallest nonzero |entry| of `m[from.., from..]`, ties to lowest (row, col).
fn smallest_pivot(m: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..m.rows {
        for j in from..m.cols {
            let e = &m[(i, j)];
            if e.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m[(bi, bj)].magnitude() <= e.magnitude() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

pub fn snf(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut left = IntMatrix::identity(m);
    let mut right = IntMatrix::identity(n);
    let mut t = 0;

    while t < m.min(n) {
        let Some((pi, pj)) = smallest_pivot(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        left.swap_rows(t, pi);
        d.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let p = d[(t, t)].clone();
            for i in t + 1..m {
                let q = &d[(i, t)] / &p;
                if !q.is_zero() {
                    let k = -q;
                    d.add_row_multiple(i, t, &k);
                    left.add_row_multiple(i, t, &k);
                }
            }
            for j in t + 1..n {
                let q = &d[(t, j)] / &p;
                if !q.is_zero() {
                    let k = -q;
                    d.add_col_multiple(j, t, &k);
                    right.add_col_multiple(j, t, &k);
                }
            }

            let line_clear =
                (t + 1..m).all(|i| d[(i, t)].is_zero()) && (t + 1..n).all(|j| d[(t, j)].is_zero());
            if !line_clear {
                // a remainder smaller than the pivot survived; restart with it
                let (pi, pj) = smallest_pivot(&d, t).expect("nonzero remainder");
                d.swap_rows(t, pi);
                left.swap_rows(t, pi);
                d.swap_cols(t, pj);
                right.swap_cols(t, pj);
                continue;
            }

            // divisibility: fold an offending row into row t and go again
            let offending = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p))
            });
            match offending {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    left.add_row_multiple(t, i, &one);
                    let (pi, pj) = smallest_pivot(&d, t).expect("nonzero pivot");
                    d.swap_rows(t, pi);
                    left.swap_rows(t, pi);
                    d.swap_cols(t, pj);
                    right.swap_cols(t, pj);
                }
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
        t += 1;
    }

    let invariant_factors: Vec<BigInt> = (0..t).map(|i| d[(i, i)].clone()).collect();
    let free_rank = n - invariant_factors.len();
    SnfResult {
        left,
        diag: d,
        right,
        invariant_factors,
        free_rank,
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det(a: &IntMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let n = a.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                Some(i) => {
                    m.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                m[(i, j)] = num / &prev;
            }
        }
        prev = m[(k, k)].clone();
    }
    Ok(sign * &m[(n - 1, n - 1)])
}

/// Row-style Hermite reduction `transform * a == hermite`.
#[derive(Clone, Debug)]
pub(crate) struct RowHermite {
    pub hermite: IntMatrix,
    pub transform: IntMatrix,
    /// Pivot column of each nonzero row of `hermite`, increasing.
    pub pivots: Vec<usize>,
}

impl RowHermite {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Hermite normal form by rows: echelon form, positive pivots, entries
/// above each pivot reduced into `[0, pivot)`, zero rows last.
pub(crate) fn row_hermite(a: &IntMatrix) -> RowHermite {
    let (m, n) = (a.rows, a.cols);
    let mut h = a.clone();
    let mut t = IntMatrix::identity(m);
    let mut pivots = Vec::new();
    let mut r = 0;

    for col in 0..n {
        if r == m {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..m {
                let e = &h[(i, col)];
                if e.is_zero() {
                    continue;
                }
                match best {
                    Some(b) if h[(b, col)].magnitude() <= e.magnitude() => {}
                    _ => best = Some(i),
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(r, b);
            t.swap_rows(r, b);
            let p = h[(r, col)].clone();
            let mut clear = true;
            for i in r + 1..m {
                let q = &h[(i, col)] / &p;
                if !q.is_zero() {
                    let k = -q;
                    h.add_row_multiple(i, r, &k);
                    t.add_row_multiple(i, r, &k);
                }
                if !h[(i, col)].is_zero() {
                    clear = false;
                }
            }
            if clear {
                break;
            }
        }
        if h[(r, col)].is_zero() {
            continue;
        }
        if h[(r, col)].is_negative() {
            h.negate_row(r);
            t.negate_row(r);
        }
        let p = h[(r, col)].clone();
        for i in 0..r {
            let q = h[(i, col)].div_floor(&p);
            if !q.is_zero() {
                let k = -q;
                h.add_row_multiple(i, r, &k);
                t.add_row_multiple(i, r, &k);
            }
        }
        pivots.push(col);
        r += 1;
    }

    RowHermite {
        hermite: h,
        transform: t,
        pivots,
    }
}

/// Hermite basis of the row lattice of `a` (zero rows dropped).
pub fn row_lattice_basis(a: &IntMatrix) -> IntMatrix {
    let rh = row_hermite(a);
    rh.hermite.row_slice(0..rh.rank())
}

/// Basis of the right kernel `{x : a * x = 0}` as the rows of the result.
/// The basis is put in Hermite form, so it is canonical for the lattice.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let rh = row_hermite(&a.transpose());
    let raw = rh.transform.row_slice(rh.rank()..a.cols);
    row_lattice_basis(&raw)
}

/// Integer coefficients `c` with `c * lattice == v`, where the lattice is
/// spanned by the rows of `lattice`; `None` when `v` lies outside it.
pub fn lattice_membership(lattice: &IntMatrix, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if v.len() != lattice.cols {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} against a lattice in Z^{}",
            v.len(),
            lattice.cols
        )));
    }
    let rh = row_hermite(lattice);
    let h = &rh.hermite;
    let mut residual = v.to_vec();
    let mut coeffs_h = vec![BigInt::zero(); lattice.rows];
    let mut next_col = 0;
    for (r, &pc) in rh.pivots.iter().enumerate() {
        if residual[next_col..pc].iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        let (q, rem) = residual[pc].div_rem(&h[(r, pc)]);
        if !rem.is_zero() {
            return Ok(None);
        }
        if !q.is_zero() {
            for j in pc..lattice.cols {
                let delta = &q * &h[(r, j)];
                residual[j] -= delta;
            }
        }
        coeffs_h[r] = q;
        next_col = pc + 1;
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    let t = &rh.transform;
    let coeffs = (0..lattice.rows)
        .map(|j| (0..lattice.rows).map(|r| &coeffs_h[r] * &t[(r, j)]).sum())
        .collect();
    Ok(Some(coeffs))
}

/// Index of a full-rank sublattice of `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

impl LatticeIndex {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            LatticeIndex::Finite(n) => Some(n),
            LatticeIndex::Infinite => None,
        }
    }
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(n) => write!(f, "{n}"),
            LatticeIndex::Infinite => write!(f, "infinite"),
        }
    }
}

/// `|Z^d : F(Z^d)|`, which is `|det F|`, or infinite when `F` is singular.
pub fn lattice_index(f: &IntMatrix) -> Result<LatticeIndex> {
    let d = det(f)?;
    Ok(if d.is_zero() {
        LatticeIndex::Infinite
    } else {
        LatticeIndex::Finite(d.abs())
    })
}

/// Inverse of a unimodular matrix, or `None` if `u` is not unimodular.
pub fn unimodular_inverse(u: &IntMatrix) -> Option<IntMatrix> {
    if !u.is_square() {
        return None;
    }
    let rh = row_hermite(u);
    rh.hermite.is_identity().then_some(rh.transform)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_witnesses(a: &IntMatrix, s: &SnfResult) {
        assert_eq!(&(&s.left * a) * &s.right, s.diag);
        assert_eq!(det(&s.left).unwrap().abs(), BigInt::one());
        assert_eq!(det(&s.right).unwrap().abs(), BigInt::one());
        for w in s.invariant_factors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn snf_zero_one_by_one() {
        let a = m(&[vec![0]]);
        let s = snf(&a);
        assert!(s.diag.is_zero());
        assert!(s.invariant_factors.is_empty());
        assert_eq!(s.free_rank, 1);
        check_witnesses(&a, &s);
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(3);
        let s = snf(&a);
        assert_eq!(s.diag, a);
        assert_eq!(s.invariant_factors, ints(&[1, 1, 1]));
        assert_eq!(s.free_rank, 0);
    }

    #[test]
    fn snf_two_three() {
        let a = m(&[vec![2, 0], vec![0, 3]]);
        let s = snf(&a);
        assert_eq!(s.invariant_factors, ints(&[1, 6]));
        assert_eq!(s.diag, m(&[vec![1, 0], vec![0, 6]]));
        check_witnesses(&a, &s);
    }

    #[test]
    fn snf_rectangular_and_empty() {
        let a = m(&[vec![-2, 2]]);
        let s = snf(&a);
        assert_eq!(s.invariant_factors, ints(&[2]));
        assert_eq!(s.free_rank, 1);
        check_witnesses(&a, &s);

        let e = IntMatrix::zeros(0, 3);
        let s = snf(&e);
        assert_eq!(s.free_rank, 3);
        assert_eq!(s.left.rows(), 0);
    }

    #[test]
    fn snf_is_deterministic() {
        let a = m(&[vec![4, 6, 2], vec![6, 9, 3], vec![2, -4, 8]]);
        assert_eq!(snf(&a), snf(&a));
        check_witnesses(&a, &snf(&a));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&IntMatrix::identity(4)).unwrap(), BigInt::one());
        assert_eq!(det(&m(&[vec![2, 0], vec![0, 3]])).unwrap(), BigInt::from(6));
        assert_eq!(det(&m(&[vec![1, 1], vec![0, 1]])).unwrap(), BigInt::one());
        assert_eq!(det(&m(&[vec![0, 1], vec![1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(det(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::one());
        assert!(matches!(
            det(&IntMatrix::zeros(2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&m(&[vec![2, -2]])), m(&[vec![1, 1]]));
        assert_eq!(kernel_basis(&IntMatrix::identity(3)).rows(), 0);
        assert_eq!(kernel_basis(&m(&[vec![2]])).rows(), 0);
        let k = kernel_basis(&IntMatrix::zeros(1, 2));
        assert_eq!(k, IntMatrix::identity(2));
    }

    #[test]
    fn membership_examples() {
        let l = m(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(
            lattice_membership(&l, &ints(&[4, 2])).unwrap(),
            Some(ints(&[2, 1]))
        );
        assert_eq!(lattice_membership(&l, &ints(&[1, 0])).unwrap(), None);
        let l = m(&[vec![-2, 2]]);
        assert_eq!(
            lattice_membership(&l, &ints(&[2, -2])).unwrap(),
            Some(ints(&[-1]))
        );
        assert!(lattice_membership(&l, &ints(&[1])).is_err());
        let empty = IntMatrix::zeros(0, 2);
        assert_eq!(lattice_membership(&empty, &ints(&[0, 0])).unwrap(), Some(vec![]));
        assert_eq!(lattice_membership(&empty, &ints(&[0, 1])).unwrap(), None);
    }

    #[test]
    fn index_examples() {
        assert_eq!(
            lattice_index(&m(&[vec![2]])).unwrap(),
            LatticeIndex::Finite(BigInt::from(2))
        );
        assert_eq!(
            lattice_index(&IntMatrix::identity(3)).unwrap(),
            LatticeIndex::Finite(BigInt::one())
        );
        assert_eq!(
            lattice_index(&m(&[vec![2, 0], vec![0, 3]])).unwrap(),
            LatticeIndex::Finite(BigInt::from(6))
        );
        assert_eq!(
            lattice_index(&m(&[vec![1, 2], vec![2, 4]])).unwrap(),
            LatticeIndex::Infinite
        );
        assert_eq!(
            lattice_index(&IntMatrix::zeros(0, 0)).unwrap(),
            LatticeIndex::Finite(BigInt::one())
        );
        assert!(lattice_index(&IntMatrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn inverse_of_unimodular() {
        let u = m(&[vec![2, 3], vec![1, 2]]);
        let inv = unimodular_inverse(&u).unwrap();
        assert!((&u * &inv).is_identity());
        assert!(unimodular_inverse(&m(&[vec![2, 0], vec![0, 1]])).is_none());
    }

    #[test]
    fn hermite_reduces_above_pivots() {
        let a = m(&[vec![3, 5, 1], vec![1, 2, 7]]);
        let rh = row_hermite(&a);
        assert_eq!(&rh.transform * &a, rh.hermite);
        assert_eq!(rh.pivots, vec![0, 1]);
        let h = &rh.hermite;
        assert!(h[(0, 1)] >= BigInt::zero() && h[(0, 1)] < h[(1, 1)]);
    }
}
