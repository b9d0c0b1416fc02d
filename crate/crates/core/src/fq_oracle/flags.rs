//! Complete flags over a prime field.

use rand::Rng;

use crate::error::{Error, Result};
use crate::fq_oracle::matrix::FqMatrix;
use crate::fq_oracle::orthogonal::reverse_form;

/// A complete flag in `F_p^n`: an invertible basis matrix whose first `i`
/// rows span the subspace `F_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlagFq {
    basis: FqMatrix,
}

impl FlagFq {
    pub fn from_basis(basis: FqMatrix) -> Result<Self> {
        if basis.rows() != basis.cols() {
            return Err(Error::precondition("flag basis must be square".to_string()));
        }
        if basis.rank() != basis.rows() {
            return Err(Error::precondition(
                "flag basis must have full rank".to_string(),
            ));
        }
        Ok(FlagFq { basis })
    }

    /// The standard flag: `F_i` spanned by the reversed unit vectors
    /// `e_1 = (0,...,0,1), e_2 = (0,...,1,0), ...`, matching the convention
    /// that pivot positions are counted from the right.
    pub fn standard(modulus: u64, n: usize) -> Result<Self> {
        let mut basis = FqMatrix::zero(modulus, n, n)?;
        for i in 0..n {
            basis.set(i, n - 1 - i, 1);
        }
        Ok(FlagFq { basis })
    }

    /// The opposite flag: `E_i` spanned by `e_n, e_{n-1}, ...`, which in
    /// coordinates is the identity basis.
    pub fn opposite(modulus: u64, n: usize) -> Result<Self> {
        Ok(FlagFq {
            basis: FqMatrix::identity(modulus, n)?,
        })
    }

    /// A uniformly random complete flag, by rejection on invertibility.
    pub fn random(rng: &mut impl Rng, modulus: u64, n: usize) -> Result<Self> {
        loop {
            let candidate = FqMatrix::random(rng, modulus, n, n)?;
            if candidate.rank() == n {
                return Ok(FlagFq { basis: candidate });
            }
        }
    }

    /// A random orthogonal flag in `F_p^(2n+1)` for the reverse bilinear
    /// form: `F_i^perp = F_{2n+1-i}` for all `i`, equivalently
    /// `<v_a, v_b> = 0` whenever `a + b <= 2n+1`. Rows are drawn one at a
    /// time from the linear conditions against earlier rows (isotropic for
    /// the first `n`), with rejection and restart on failure.
    pub fn random_orthogonal(rng: &mut impl Rng, modulus: u64, n_param: usize) -> Result<Self> {
        if modulus == 2 {
            return Err(Error::precondition(
                "orthogonal flags need odd characteristic".to_string(),
            ));
        }
        let dim = 2 * n_param + 1;
        'restart: loop {
            let mut rows: Vec<Vec<u64>> = Vec::with_capacity(dim);
            for a in 1..=dim {
                // Orthogonality against rows v_b with a + b <= 2n+1.
                let bound = dim.saturating_sub(a).min(rows.len());
                let constraints: Vec<&Vec<u64>> = rows[..bound].iter().collect();
                let needs_isotropy = a <= n_param;
                let mut found = false;
                for _attempt in 0..200 {
                    let Some(candidate) =
                        sample_in_annihilator(rng, modulus, dim, &constraints)
                    else {
                        continue 'restart;
                    };
                    if needs_isotropy && reverse_form(&candidate, &candidate, modulus) != 0 {
                        continue;
                    }
                    // Independence from all earlier rows.
                    let mut stacked = rows.clone();
                    stacked.push(candidate.clone());
                    if rank_of_rows(&stacked, modulus) != stacked.len() {
                        continue;
                    }
                    rows.push(candidate);
                    found = true;
                    break;
                }
                if !found {
                    continue 'restart;
                }
            }
            let entries: Vec<i64> = rows
                .into_iter()
                .flatten()
                .map(|v| v as i64)
                .collect();
            let basis = FqMatrix::new(modulus, dim, dim, entries)?;
            return FlagFq::from_basis(basis);
        }
    }

    pub fn n(&self) -> usize {
        self.basis.rows()
    }

    pub fn modulus(&self) -> u64 {
        self.basis.modulus()
    }

    pub fn basis(&self) -> &FqMatrix {
        &self.basis
    }

    /// The subspace `F_j`: the first `j` basis rows.
    pub fn prefix(&self, j: usize) -> FqMatrix {
        self.basis.take_rows(j)
    }

    /// True iff the flag is orthogonal for the reverse form on `2n+1`
    /// coordinates: `<v_a, v_b> = 0` whenever `a + b <= 2n+1`.
    pub fn is_orthogonal(&self) -> bool {
        let dim = self.n();
        if dim % 2 == 0 {
            return false;
        }
        let p = self.modulus();
        for a in 1..=dim {
            for b in 1..=dim - a {
                if reverse_form(self.basis.row(a - 1), self.basis.row(b - 1), p) != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// A uniform sample from the solution space of `<x, c> = 0` for all given
/// constraint rows `c` (with respect to the reverse form). Returns `None`
/// if only the zero vector solves them.
fn sample_in_annihilator(
    rng: &mut impl Rng,
    p: u64,
    dim: usize,
    constraints: &[&Vec<u64>],
) -> Option<Vec<u64>> {
    // <x, c> = sum_i x_i c_{dim+1-i}: the constraint matrix rows are the
    // reversed constraint vectors.
    let mut rows: Vec<i64> = Vec::new();
    for c in constraints {
        rows.extend(c.iter().rev().map(|&v| v as i64));
    }
    let a = FqMatrix::new(p, constraints.len(), dim, rows).unwrap();
    let basis = null_space(&a);
    if basis.is_empty() {
        return None;
    }
    let mut x = vec![0u64; dim];
    let mut nonzero = false;
    for b in &basis {
        let coef = rng.gen_range(0..p);
        if coef != 0 {
            nonzero = true;
        }
        for (i, &v) in b.iter().enumerate() {
            x[i] = (x[i] + coef * v) % p;
        }
    }
    if !nonzero || x.iter().all(|&v| v == 0) {
        // A fresh draw is cheaper than conditioning; the caller retries.
        return None;
    }
    Some(x)
}

/// A basis of the right null space of `a`.
pub(crate) fn null_space(a: &FqMatrix) -> Vec<Vec<u64>> {
    let p = a.modulus();
    let (r, rank) = a.rref();
    let n = a.cols();
    // In the bottom-to-top convention zero rows are on top, so the pivot
    // rows are the last `rank` ones.
    let mut pivot_cols = Vec::new();
    for row in a.rows() - rank..a.rows() {
        let c = (0..n).find(|&c| r.get(row, c) != 0).unwrap();
        pivot_cols.push((row, c));
    }
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; n];
        for &(_, c) in &pivot_cols {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut vec_x = vec![0u64; n];
        vec_x[free] = 1;
        for &(row, c) in &pivot_cols {
            // x_c = -sum over free columns of r[row][free] * x_free
            let v = r.get(row, free);
            if v != 0 {
                vec_x[c] = (p - v) % p;
            }
        }
        basis.push(vec_x);
    }
    basis
}

pub(crate) fn rank_of_rows(rows: &[Vec<u64>], p: u64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let entries: Vec<i64> = rows.iter().flatten().map(|&v| v as i64).collect();
    FqMatrix::new(p, rows.len(), cols, entries).unwrap().rank()
}
