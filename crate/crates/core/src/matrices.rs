//! Integer matrices built from a parity check matrix: the expanded matrices
//! `△H_e` and `△H_{+,e}`, the extension by `p·I`, and the p-Lawrence lifting.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField, Word};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed to describe matrices without rows.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &IntMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)];
            }
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Horizontal concatenation `(self | other)`.
    pub fn hconcat(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, other);
        m
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// An `[n, k]` linear code over a finite field, given by a full-rank parity
/// check matrix and (optionally) a generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    ff: FiniteField,
    n: usize,
    parity: Vec<Word>,
    generator: Option<Vec<Word>>,
}

impl LinearCode {
    /// Validates `parity` (and `generator` when present) and stores both as given.
    pub fn new(ff: FiniteField, n: usize, parity: Vec<Word>, generator: Option<Vec<Word>>) -> Result<Self> {
        check_widths(&ff, &parity, n)?;
        if let Some(g) = &generator {
            check_widths(&ff, g, n)?;
        }
        if rank(&ff, &parity) != parity.len() {
            return Err(Error::InvalidCode("parity check rows are linearly dependent".into()));
        }
        if let Some(g) = &generator {
            if rank(&ff, g) != g.len() {
                return Err(Error::InvalidCode("generator rows are linearly dependent".into()));
            }
            if g.len() + parity.len() != n {
                return Err(Error::InvalidCode(format!(
                    "generator has {} rows, expected n - rank(H) = {}",
                    g.len(),
                    n - parity.len()
                )));
            }
            for gr in g {
                for hr in &parity {
                    if !ff.dot(gr, hr).is_zero() {
                        return Err(Error::InvalidCode("G·H^T is not zero".into()));
                    }
                }
            }
        }
        Ok(LinearCode { ff, n, parity, generator })
    }

    /// Code with the given parity check matrix; the generator is derived as its null space.
    pub fn from_parity(ff: FiniteField, n: usize, parity: Vec<Word>) -> Result<Self> {
        check_widths(&ff, &parity, n)?;
        let generator = null_space(&ff, &parity, n);
        Self::new(ff, n, parity, Some(generator))
    }

    /// Code spanned by the rows of `generator`; the parity check matrix is derived.
    pub fn from_generator(ff: FiniteField, n: usize, generator: Vec<Word>) -> Result<Self> {
        check_widths(&ff, &generator, n)?;
        let parity = null_space(&ff, &generator, n);
        Self::new(ff, n, parity, Some(generator))
    }

    pub fn field(&self) -> &FiniteField {
        &self.ff
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.n - self.parity.len()
    }
    pub fn parity(&self) -> &[Word] {
        &self.parity
    }
    pub fn generator(&self) -> Option<&[Word]> {
        self.generator.as_deref()
    }

    /// True when `H·w^T = 0`.
    pub fn contains(&self, w: &[FieldElement]) -> bool {
        w.len() == self.n && self.parity.iter().all(|h| self.ff.dot(h, w).is_zero())
    }

    /// All codewords; only sensible for tiny codes.
    pub fn codewords(&self) -> Result<Vec<Word>> {
        let g = self.generator.as_ref().ok_or(Error::MissingGenerator)?;
        let mut words = vec![vec![FieldElement::Zero; self.n]];
        for row in g {
            let mut next = Vec::with_capacity(words.len() * self.ff.q() as usize);
            for w in &words {
                for c in self.ff.elements() {
                    next.push(w.iter().zip(row).map(|(&a, &b)| self.ff.add(a, self.ff.mul(c, b))).collect());
                }
            }
            words = next;
        }
        Ok(words)
    }
}

/// Reduced row echelon form over F_q; returns the nonzero rows and pivot columns.
pub fn row_reduce(ff: &FiniteField, rows: &[Word], n: usize) -> (Vec<Word>, Vec<usize>) {
    let mut m: Vec<Word> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, pr);
        let inv = ff.inv(m[r][col]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = ff.mul(*x, inv);
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col];
                let pivot_row = m[r].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = ff.sub(*x, ff.mul(f, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

fn check_widths(ff: &FiniteField, rows: &[Word], n: usize) -> Result<()> {
    for row in rows {
        if row.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: row.len() });
        }
        for &a in row {
            ff.check(a)?;
        }
    }
    Ok(())
}

pub fn rank(ff: &FiniteField, rows: &[Word]) -> usize {
    let n = rows.first().map_or(0, |r| r.len());
    row_reduce(ff, rows, n).0.len()
}

/// Basis of `{x in F_q^n : M x^T = 0}` for the matrix with the given rows.
pub fn null_space(ff: &FiniteField, rows: &[Word], n: usize) -> Vec<Word> {
    let (rref, pivots) = row_reduce(ff, rows, n);
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![FieldElement::Zero; n];
            v[free] = ff.one();
            for (row, &pc) in rref.iter().zip(&pivots) {
                v[pc] = ff.neg(row[free]);
            }
            v
        })
        .collect()
}

/// `△H_e`: row `(i, s)`, column `(j, t)` holds `π_s(b_t h_ij)`, lifted to `[0, p)`,
/// so that `△H_e · coords(c) ≡ coords(H c)` blockwise and the kernel mod p is
/// exactly the coordinate image of the code.
///
/// Each `r x r` block is the matrix of multiplication by `h_ij` in the basis.
/// Writing the block transposed agrees with this whenever that matrix is
/// symmetric (e.g. the basis `{1, α}` of GF(4) or GF(9)), but not in general.
pub fn build_he(code: &LinearCode) -> IntMatrix {
    let ff = code.field();
    let r = ff.r() as usize;
    let mut m = IntMatrix::zeros(code.parity().len() * r, code.n() * r);
    for (i, h) in code.parity().iter().enumerate() {
        for (j, &hij) in h.iter().enumerate() {
            for (t, &b) in ff.basis().iter().enumerate() {
                let coords = ff.canonical_coords(ff.mul(b, hij));
                for (s, &c) in coords.iter().enumerate() {
                    m[(i * r + s, j * r + t)] = c as i64;
                }
            }
        }
    }
    m
}

/// `△H_{+,e}`: row `(i, s)`, column `(j, t)` holds `π_s(α^t h_ij)`, lifted to `[0, p)`.
pub fn build_hplus_e(code: &LinearCode) -> IntMatrix {
    let ff = code.field();
    let r = ff.r() as usize;
    let block = ff.q() as usize - 1;
    let mut m = IntMatrix::zeros(code.parity().len() * r, code.n() * block);
    for (i, h) in code.parity().iter().enumerate() {
        for (j, &hij) in h.iter().enumerate() {
            for t in 1..=block {
                let coords = ff.canonical_coords(ff.mul(ff.alpha_pow(t as i64), hij));
                for (s, &c) in coords.iter().enumerate() {
                    m[(i * r + s, j * block + t - 1)] = c as i64;
                }
            }
        }
    }
    m
}

/// `(M | p·I_m)`.
pub fn extend_with_pi(m: &IntMatrix, p: i64) -> IntMatrix {
    m.hconcat(&IntMatrix::identity(m.rows()).scaled(p))
}

/// The p-Lawrence lifting `[[M, 0, p·I_m], [I_N, I_N, 0]]`.
pub fn lawrence_lift(m: &IntMatrix, p: i64) -> IntMatrix {
    let (rows, n) = (m.rows(), m.cols());
    let mut out = IntMatrix::zeros(rows + n, 2 * n + rows);
    out.set_block(0, 0, m);
    out.set_block(0, 2 * n, &IntMatrix::identity(rows).scaled(p));
    out.set_block(rows, 0, &IntMatrix::identity(n));
    out.set_block(rows, n, &IntMatrix::identity(n));
    out
}
