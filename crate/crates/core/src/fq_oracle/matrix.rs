//! Matrices over a prime field, row reduction in the bottom-to-top pivot
//! convention, and Plücker coordinates.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::fq_oracle::field::{check_prime, inv_mod, mul_mod};

/// A dense matrix over `F_p`, entries stored row-major and reduced mod `p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    modulus: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl FqMatrix {
    pub fn new(modulus: u64, rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        check_prime(modulus)?;
        if entries.len() != rows * cols {
            return Err(Error::precondition(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let m = modulus as i64;
        Ok(FqMatrix {
            modulus,
            rows,
            cols,
            entries: entries.into_iter().map(|e| e.rem_euclid(m) as u64).collect(),
        })
    }

    pub fn zero(modulus: u64, rows: usize, cols: usize) -> Result<Self> {
        check_prime(modulus)?;
        Ok(FqMatrix {
            modulus,
            rows,
            cols,
            entries: vec![0; rows * cols],
        })
    }

    pub fn identity(modulus: u64, n: usize) -> Result<Self> {
        let mut m = FqMatrix::zero(modulus, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    pub fn random(rng: &mut impl Rng, modulus: u64, rows: usize, cols: usize) -> Result<Self> {
        let mut m = FqMatrix::zero(modulus, rows, cols)?;
        for e in m.entries.iter_mut() {
            *e = rng.gen_range(0..modulus);
        }
        Ok(m)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.modulus;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &FqMatrix) -> Result<FqMatrix> {
        if self.cols != other.rows || self.modulus != other.modulus {
            return Err(Error::precondition(
                "matrix product needs matching inner dimensions and moduli".to_string(),
            ));
        }
        let p = self.modulus;
        let mut out = FqMatrix::zero(p, self.rows, other.cols)?;
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc: u128 = 0;
                for t in 0..self.cols {
                    acc += self.get(r, t) as u128 * other.get(t, c) as u128;
                }
                out.set(r, c, (acc % p as u128) as u64);
            }
        }
        Ok(out)
    }

    /// Inverse of a square matrix, by elimination on the augmented matrix.
    pub fn inverse(&self) -> Result<FqMatrix> {
        if self.rows != self.cols {
            return Err(Error::precondition("only square matrices invert".to_string()));
        }
        let n = self.rows;
        let p = self.modulus;
        let mut work = self.clone();
        let mut inv = FqMatrix::identity(p, n)?;
        for col in 0..n {
            let Some(src) = (col..n).find(|&r| work.get(r, col) != 0) else {
                return Err(Error::precondition("matrix is singular".to_string()));
            };
            if src != col {
                for c in 0..n {
                    let (a, b) = (work.get(src, c), work.get(col, c));
                    work.set(src, c, b);
                    work.set(col, c, a);
                    let (a, b) = (inv.get(src, c), inv.get(col, c));
                    inv.set(src, c, b);
                    inv.set(col, c, a);
                }
            }
            let scale = inv_mod(work.get(col, col), p);
            for c in 0..n {
                work.set(col, c, mul_mod(work.get(col, c), scale, p));
                inv.set(col, c, mul_mod(inv.get(col, c), scale, p));
            }
            for r in 0..n {
                if r != col && work.get(r, col) != 0 {
                    let factor = work.get(r, col);
                    for c in 0..n {
                        let v = (work.get(r, c) + p - mul_mod(factor, work.get(col, c), p)) % p;
                        work.set(r, c, v);
                        let v = (inv.get(r, c) + p - mul_mod(factor, inv.get(col, c), p)) % p;
                        inv.set(r, c, v);
                    }
                }
            }
        }
        Ok(inv)
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &FqMatrix) -> Result<FqMatrix> {
        if self.cols != other.cols || self.modulus != other.modulus {
            return Err(Error::precondition(
                "stacked matrices need equal widths and moduli".to_string(),
            ));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(FqMatrix {
            modulus: self.modulus,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn take_rows(&self, count: usize) -> FqMatrix {
        assert!(count <= self.rows);
        FqMatrix {
            modulus: self.modulus,
            rows: count,
            cols: self.cols,
            entries: self.entries[..count * self.cols].to_vec(),
        }
    }

    /// Reverses the order of the columns.
    pub fn reverse_cols(&self) -> FqMatrix {
        let mut out = self.clone();
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, self.cols - 1 - c));
            }
        }
        out
    }

    /// Reduced row echelon form in the convention with pivots running left
    /// to right from the bottom row up, plus the rank. Zero rows, if any,
    /// come out on top. The row span is unchanged and the result is the
    /// unique canonical representative of it.
    pub fn rref(&self) -> (FqMatrix, usize) {
        let p = self.modulus;
        let mut m = self.clone();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            let Some(src) = (pivot_row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            // Swap into place and normalize the pivot to 1.
            for c in 0..m.cols {
                let tmp = m.get(pivot_row, c);
                m.set(pivot_row, c, m.get(src, c));
                m.set(src, c, tmp);
            }
            let inv = inv_mod(m.get(pivot_row, col), p);
            for c in 0..m.cols {
                let v = mul_mod(m.get(pivot_row, c), inv, p);
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r != pivot_row && m.get(r, col) != 0 {
                    let factor = m.get(r, col);
                    for c in 0..m.cols {
                        let v = (m.get(r, c) + p - mul_mod(factor, m.get(pivot_row, c), p)) % p;
                        m.set(r, c, v);
                    }
                }
            }
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        let rank = pivot_row;
        // Standard form has pivots top-to-bottom; flip to bottom-to-top.
        let mut flipped = m.clone();
        for r in 0..m.rows {
            for c in 0..m.cols {
                flipped.set(r, c, m.get(m.rows - 1 - r, c));
            }
        }
        (flipped, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.rows.min(self.cols)
    }

    /// Pivot columns (0-indexed) of a matrix already in bottom-to-top RREF,
    /// listed for rows top to bottom; `None` if the matrix is not in that
    /// form or has a zero row.
    pub fn rref_pivots(&self) -> Option<Vec<usize>> {
        let mut pivots = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let c = (0..self.cols).find(|&c| self.get(r, c) != 0)?;
            if self.get(r, c) != 1 {
                return None;
            }
            for other in 0..self.rows {
                if other != r && self.get(other, c) != 0 {
                    return None;
                }
            }
            pivots.push(c);
        }
        // Bottom-to-top means pivot columns strictly decrease going down.
        if pivots.windows(2).all(|w| w[0] > w[1]) {
            Some(pivots)
        } else {
            None
        }
    }

    /// Plücker coordinates over `F_p`: determinants of the `k x k` minors
    /// over all column subsets in lexicographic order.
    pub fn plucker(&self) -> Vec<u64> {
        let k = self.rows;
        let mut out = Vec::new();
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            out.push(self.minor_det(&subset));
            // Next k-subset of {0..cols-1} in lex order.
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if subset[i] < self.cols - (k - i) {
                    subset[i] += 1;
                    for j in i + 1..k {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn minor_det(&self, cols: &[usize]) -> u64 {
        let p = self.modulus;
        let k = cols.len();
        let mut m = vec![0u64; k * k];
        for (i, row) in (0..self.rows).enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m[i * k + j] = self.get(row, c);
            }
        }
        // Gaussian elimination tracking the determinant.
        let mut det = 1u64;
        for col in 0..k {
            let Some(src) = (col..k).find(|&r| m[r * k + col] != 0) else {
                return 0;
            };
            if src != col {
                for c in 0..k {
                    m.swap(src * k + c, col * k + c);
                }
                det = (p - det) % p;
            }
            let pivot = m[col * k + col];
            det = mul_mod(det, pivot, p);
            let inv = inv_mod(pivot, p);
            for r in col + 1..k {
                let factor = mul_mod(m[r * k + col], inv, p);
                if factor != 0 {
                    for c in col..k {
                        let v = (m[r * k + c] + p - mul_mod(factor, m[col * k + c], p)) % p;
                        m[r * k + c] = v;
                    }
                }
            }
        }
        det
    }
}

impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FqMatrix({}x{} mod {}: {:?})",
            self.rows, self.cols, self.modulus, self.entries
        )
    }
}

/// Plücker coordinates of an exact integer matrix: determinants of all
/// `k x k` column minors in lexicographic subset order.
pub fn plucker_int(rows: &[Vec<i64>]) -> Result<Vec<BigInt>> {
    let k = rows.len();
    if k == 0 {
        return Err(Error::precondition("empty matrix".to_string()));
    }
    let n = rows[0].len();
    if rows.iter().any(|r| r.len() != n) || n < k {
        return Err(Error::precondition(
            "matrix must be k x n with k <= n".to_string(),
        ));
    }
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        out.push(int_minor_det(rows, &subset));
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if subset[i] < n - (k - i) {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn int_minor_det(rows: &[Vec<i64>], cols: &[usize]) -> BigInt {
    // Cofactor expansion along the first row; minors here are tiny.
    let k = cols.len();
    if k == 1 {
        return BigInt::from(rows[0][cols[0]]);
    }
    let mut det = BigInt::zero();
    for (j, &c) in cols.iter().enumerate() {
        let sub_rows = &rows[1..];
        let sub_cols: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&other| other != c)
            .collect();
        let minor = int_minor_det(sub_rows, &sub_cols);
        let term = BigInt::from(rows[0][c]) * minor;
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}
