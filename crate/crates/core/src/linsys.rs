//! The linear system satisfied by the ansatz coefficients `C_[i,j]`, its
//! block-triangular square submatrix, and exact determinants and null
//! spaces over the rationals.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{binom, rat_int, ExactInteger, ExactRational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinsysError {
    #[error("column index [{i},{j}] must satisfy j <= i")]
    BadColumn { i: u32, j: u32 },
    #[error("degree d = {d} is neither 3m+1 nor 3m+2 for m = {m}")]
    BadDegree { m: u32, d: u32 },
    #[error("the square submatrix is only defined for m >= 1")]
    NeedPositiveM,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let n = rows.len();
        Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
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

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// The submatrix on the given row and column indices, in that order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use alloc::string::{String, ToString};
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Integer determinant by Bareiss fraction-free elimination. Pivots on the
/// first nonzero entry at or below the diagonal.
pub fn det_integer(m: &Matrix<ExactInteger>) -> Result<ExactInteger, LinsysError> {
    if !m.is_square() {
        return Err(LinsysError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(ExactInteger::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = ExactInteger::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a.get(r, k).is_zero()) else {
            return Ok(ExactInteger::zero());
        };
        if p != k {
            a.swap_rows(p, k);
            negate = !negate;
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let lead = a.get(i, k).clone();
            for j in k + 1..n {
                let v = &pivot * a.get(i, j) - &lead * a.get(k, j);
                let (q, r) = v.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a.set(i, j, q);
            }
            a.set(i, k, ExactInteger::zero());
        }
        prev = pivot;
    }
    let det = a.get(n - 1, n - 1).clone();
    Ok(if negate { -det } else { det })
}

/// Exact rational determinant. Each row is scaled by the lcm of its
/// denominators, the integer matrix goes through Bareiss, and the scale
/// factors are divided back out.
pub fn det_exact(m: &Matrix<ExactRational>) -> Result<ExactRational, LinsysError> {
    if !m.is_square() {
        return Err(LinsysError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let mut scale = ExactInteger::one();
    let mut rows = Vec::with_capacity(m.rows);
    for r in 0..m.rows {
        let l = m.row(r).iter().fold(ExactInteger::one(), |acc, x| acc.lcm(x.denom()));
        rows.push(m.row(r).iter().map(|x| x.numer() * (&l / x.denom())).collect::<Vec<_>>());
        scale *= l;
    }
    let det = det_integer(&Matrix::from_rows_sized(rows, m.cols))?;
    Ok(ExactRational::new(det, scale))
}

impl<T: Clone> Matrix<T> {
    fn from_rows_sized(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let n = rows.len();
        Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }
}

/// Reduced row echelon form; returns the reduced matrix and the pivot
/// column of each nonzero row.
pub fn rref(m: &Matrix<ExactRational>) -> (Matrix<ExactRational>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a.get(r, c).recip();
        for j in c..a.cols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..a.cols {
                let v = a.get(i, j) - &f * a.get(r, j);
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix<ExactRational>) -> usize {
    rref(m).1.len()
}

/// Basis of the right null space, one vector per free column, with that
/// free coordinate set to one.
pub fn nullspace_basis(m: &Matrix<ExactRational>) -> Vec<Vec<ExactRational>> {
    let (r, pivots) = rref(m);
    let mut out = Vec::new();
    let mut is_pivot = alloc::vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = alloc::vec![ExactRational::zero(); m.cols];
        v[free] = ExactRational::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, free).clone();
        }
        out.push(v);
    }
    out
}

/// The integer `A_{i,j,k,l}` for degree `d`.
pub fn coeff_a(i: u32, j: u32, k: u32, l: u32, d: u32) -> Result<ExactInteger, LinsysError> {
    if j > i {
        return Err(LinsysError::BadColumn { i, j });
    }
    let (i, j, k, l, d) = (i as i64, j as i64, k as i64, l as i64, d as i64);
    Ok(if i == j {
        binom(i, k) * (binom(d - i - k, l) - binom(2 * i - k, l))
    } else {
        binom(i, k) * binom(d - j - k, l) + binom(j, k) * binom(d - i - k, l)
            - (binom(i, k) + binom(j, k)) * binom(i + j - k, l)
    })
}

/// Rows `(k, l)` and columns `[i, j]` of a coefficient system together
/// with its integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffSystem {
    pub m: u32,
    pub d: u32,
    pub rows: Vec<(u32, u32)>,
    pub cols: Vec<(u32, u32)>,
    pub entries: Matrix<ExactInteger>,
}

impl CoeffSystem {
    pub fn to_rational(&self) -> Matrix<ExactRational> {
        self.entries.map(rat_int)
    }
}

fn check_degree(m: u32, d: u32) -> Result<(), LinsysError> {
    if d == 3 * m + 1 || d == 3 * m + 2 {
        Ok(())
    } else {
        Err(LinsysError::BadDegree { m, d })
    }
}

/// Columns `[i, j]` with `0 <= j <= i <= m`, lexicographic.
pub fn column_labels(m: u32) -> Vec<(u32, u32)> {
    (0..=m).flat_map(|i| (0..=i).map(move |j| (i, j))).collect()
}

/// The full system: rows `(k, l)` for `k` in `0..=m` ascending and odd
/// `l < 2m` descending within each `k`.
pub fn build_system(m: u32, d: u32) -> Result<CoeffSystem, LinsysError> {
    check_degree(m, d)?;
    let rows: Vec<(u32, u32)> = (0..=m).flat_map(|k| (0..m).rev().map(move |t| (k, 2 * t + 1))).collect();
    let cols = column_labels(m);
    let mut data = Vec::with_capacity(rows.len() * cols.len());
    for &(k, l) in &rows {
        for &(i, j) in &cols {
            data.push(coeff_a(i, j, k, l, d)?);
        }
    }
    let entries = Matrix { rows: rows.len(), cols: cols.len(), data };
    Ok(CoeffSystem { m, d, rows, cols, entries })
}

/// Keeps rows with `l >= 2(m-k)-1` for `k < m` and every row with `k = m`,
/// and drops column `[m, m]`. The result is square of size `C(m+2,2) - 1`.
pub fn restrict_bm(sys: &CoeffSystem) -> Result<CoeffSystem, LinsysError> {
    let m = sys.m;
    if m == 0 {
        return Err(LinsysError::NeedPositiveM);
    }
    let row_idx: Vec<usize> =
        sys.rows.iter().enumerate().filter(|(_, &(k, l))| k == m || l + 2 * k + 1 >= 2 * m).map(|(i, _)| i).collect();
    let col_idx: Vec<usize> = sys.cols.iter().enumerate().filter(|(_, &c)| c != (m, m)).map(|(i, _)| i).collect();
    Ok(CoeffSystem {
        m,
        d: sys.d,
        rows: row_idx.iter().map(|&i| sys.rows[i]).collect(),
        cols: col_idx.iter().map(|&i| sys.cols[i]).collect(),
        entries: sys.entries.select(&row_idx, &col_idx),
    })
}

/// Which diagonal block of the square submatrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// `B^{f,m}`, of size `f`, for `f` in `1..=m`.
    Diagonal(u32),
    /// The last block `B^m`, of size `m`.
    Final,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    pub rows: Vec<(u32, u32)>,
    pub cols: Vec<(u32, u32)>,
    pub entries: Matrix<ExactInteger>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSet {
    pub m: u32,
    pub d: u32,
    pub blocks: Vec<Block>,
}

/// Diagonal blocks read off the square submatrix: block `f` has rows with
/// `k = f - 1` and columns `[f-1, 0..f-1]`; the final block has rows with
/// `k = m` and columns `[m, 0..m-1]`.
pub fn extract_blocks(m: u32, d: u32) -> Result<BlockSet, LinsysError> {
    let bm = restrict_bm(&build_system(m, d)?)?;
    let mut blocks = Vec::with_capacity(m as usize + 1);
    for f in 1..=m + 1 {
        let k = f - 1;
        let kind = if f <= m { BlockKind::Diagonal(f) } else { BlockKind::Final };
        let row_idx: Vec<usize> = (0..bm.rows.len()).filter(|&r| bm.rows[r].0 == k).collect();
        let col_idx: Vec<usize> = (0..bm.cols.len()).filter(|&c| bm.cols[c].0 == k).collect();
        blocks.push(Block {
            kind,
            rows: row_idx.iter().map(|&i| bm.rows[i]).collect(),
            cols: col_idx.iter().map(|&i| bm.cols[i]).collect(),
            entries: bm.entries.select(&row_idx, &col_idx),
        });
    }
    Ok(BlockSet { m, d, blocks })
}

/// The same blocks from their closed forms
/// `C(d-(j-1)-(f-1), 2m+1-2i) - C(j-1, 2m+1-2i)` and
/// `C(d-m-(j-1), 2m+1-2i) - C(j-1, 2m+1-2i)`, independent of the system
/// builder.
pub fn block_closed_form(m: u32, d: u32, kind: BlockKind) -> Result<Matrix<ExactInteger>, LinsysError> {
    check_degree(m, d)?;
    let (size, top) = match kind {
        BlockKind::Diagonal(f) => (f, d as i64 - (f as i64 - 1)),
        BlockKind::Final => (m, d as i64 - m as i64),
    };
    let m = m as i64;
    Ok(Matrix::from_fn(size as usize, size as usize, |r, c| {
        let (i, j) = (r as i64 + 1, c as i64 + 1);
        let bottom = 2 * m + 1 - 2 * i;
        binom(top - (j - 1), bottom) - binom(j - 1, bottom)
    }))
}

/// True when every entry below the diagonal blocks (rows of larger `k`,
/// columns of smaller `i`) vanishes.
pub fn is_block_upper_triangular(bm: &CoeffSystem) -> bool {
    for (r, &(k, _)) in bm.rows.iter().enumerate() {
        for (c, &(i, _)) in bm.cols.iter().enumerate() {
            if i < k && !bm.entries.get(r, c).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Null space of a coefficient system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullSpace {
    pub vectors: Vec<Vec<ExactRational>>,
    /// Set when the space is one-dimensional but its `[0,0]` coordinate
    /// vanishes, so the generator could not be normalized.
    pub leading_zero: bool,
}

impl NullSpace {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Exact right null space. A one-dimensional space is returned with its
/// `[0,0]` coordinate scaled to one.
pub fn nullspace(sys: &CoeffSystem) -> NullSpace {
    let mut vectors = nullspace_basis(&sys.to_rational());
    let mut leading_zero = false;
    if vectors.len() == 1 {
        let v = &mut vectors[0];
        if v[0].is_zero() {
            leading_zero = true;
        } else {
            let inv = v[0].recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
        }
    }
    NullSpace { vectors, leading_zero }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use alloc::vec;

    fn imat(rows: Vec<Vec<i64>>) -> Matrix<ExactInteger> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(ExactInteger::from).collect()).collect())
    }

    fn rmat(rows: Vec<Vec<i64>>) -> Matrix<ExactRational> {
        imat(rows).map(rat_int)
    }

    #[test]
    fn coeff_a_examples() {
        assert_eq!(coeff_a(0, 0, 0, 5, 10).unwrap(), 252.into());
        assert_eq!(coeff_a(1, 0, 0, 5, 10).unwrap(), 378.into());
        assert_eq!(coeff_a(1, 1, 1, 3, 10).unwrap(), 56.into());
        assert_eq!(coeff_a(0, 1, 0, 1, 4), Err(LinsysError::BadColumn { i: 0, j: 1 }));
    }

    #[test]
    fn small_systems() {
        let s = build_system(1, 4).unwrap();
        assert_eq!(s.rows, vec![(0, 1), (1, 1)]);
        assert_eq!(s.cols, vec![(0, 0), (1, 0), (1, 1)]);
        assert_eq!(s.entries, imat(vec![vec![4, 5, 1], vec![0, 3, 1]]));
        let s = build_system(1, 5).unwrap();
        assert_eq!(s.entries, imat(vec![vec![5, 7, 2], vec![0, 4, 2]]));
        let s = build_system(0, 1).unwrap();
        assert_eq!((s.entries.rows(), s.entries.cols()), (0, 1));
        assert_eq!(build_system(2, 9), Err(LinsysError::BadDegree { m: 2, d: 9 }));
    }

    #[test]
    fn restriction_shapes() {
        let b1 = restrict_bm(&build_system(1, 4).unwrap()).unwrap();
        assert_eq!(b1.entries, imat(vec![vec![4, 5], vec![0, 3]]));
        let b2 = restrict_bm(&build_system(2, 7).unwrap()).unwrap();
        assert_eq!(b2.rows, vec![(0, 3), (1, 3), (1, 1), (2, 3), (2, 1)]);
        assert_eq!(b2.cols.len(), 5);
        assert_eq!(restrict_bm(&build_system(0, 1).unwrap()), Err(LinsysError::NeedPositiveM));
    }

    #[test]
    fn blocks_for_m1() {
        let b = extract_blocks(1, 4).unwrap();
        assert_eq!(b.blocks[0].entries, imat(vec![vec![4]]));
        assert_eq!(b.blocks[1].entries, imat(vec![vec![3]]));
        assert_eq!(b.blocks[1].kind, BlockKind::Final);
        let b = extract_blocks(1, 5).unwrap();
        assert_eq!(b.blocks[0].entries, imat(vec![vec![5]]));
        assert_eq!(b.blocks[1].entries, imat(vec![vec![4]]));
    }

    #[test]
    fn determinants() {
        assert_eq!(det_exact(&rmat(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])).unwrap(), rat(1, 1));
        assert_eq!(det_integer(&imat(vec![vec![126, 56], vec![84, 56]])).unwrap(), 2352.into());
        assert_eq!(det_integer(&imat(vec![vec![21, 6, 1], vec![35, 20, 10], vec![7, 5, 3]])).unwrap(), 35.into());
        assert_eq!(det_integer(&imat(vec![vec![0, 1], vec![1, 0]])).unwrap(), (-1).into());
        assert_eq!(det_integer(&imat(vec![vec![1, 2], vec![2, 4]])).unwrap(), 0.into());
        assert_eq!(det_integer(&Matrix::from_rows(Vec::new())).unwrap(), 1.into());
        let half = Matrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]]);
        assert_eq!(det_exact(&half).unwrap(), rat(1, 10) - rat(1, 12));
        assert!(matches!(det_exact(&rmat(vec![vec![1, 2]])), Err(LinsysError::NotSquare { .. })));
    }

    #[test]
    fn nullspaces() {
        let ns = nullspace(&build_system(1, 4).unwrap());
        assert_eq!(ns.vectors, vec![vec![rat(1, 1), rat(-2, 1), rat(6, 1)]]);
        let ns = nullspace(&build_system(1, 5).unwrap());
        assert_eq!(ns.vectors, vec![vec![rat(1, 1), rat(-5, 3), rat(10, 3)]]);
        let ns = nullspace(&build_system(2, 7).unwrap());
        let expect = vec![rat(1, 1), rat(-7, 2), rat(14, 1), rat(7, 2), rat(-35, 2), rat(35, 1)];
        assert_eq!(ns.vectors, vec![expect]);
        let ns = nullspace(&build_system(0, 1).unwrap());
        assert_eq!(ns.vectors, vec![vec![rat(1, 1)]]);
        assert!(!ns.leading_zero);
    }

    #[test]
    fn leading_zero_is_flagged() {
        let sys =
            CoeffSystem { m: 0, d: 1, rows: vec![(0, 1)], cols: vec![(0, 0), (1, 0)], entries: imat(vec![vec![1, 0]]) };
        let ns = nullspace(&sys);
        assert!(ns.leading_zero);
        assert_eq!(ns.vectors, vec![vec![rat(0, 1), rat(1, 1)]]);
    }

    #[test]
    fn rank_and_rref() {
        let m = rmat(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let ns = nullspace_basis(&m);
        assert_eq!(ns.len(), 1);
        for r in 0..3 {
            let dot: ExactRational = (0..3).map(|c| m.get(r, c) * &ns[0][c]).sum();
            assert!(dot.is_zero());
        }
    }
}
