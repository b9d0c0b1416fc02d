//! Subspace enumeration over prime fields: Schubert cells as RREF strata,
//! Schubert incidence conditions, and empirical zero-dimensional
//! intersection counts against random flags.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::fq_oracle::field::check_prime;
use crate::fq_oracle::flags::FlagFq;
use crate::fq_oracle::matrix::FqMatrix;
use crate::partitions::{AmbientRectangle, Partition};

/// Default cap on the number of enumerated subspaces.
pub const DEFAULT_POINT_CAP: u64 = 10_000_000;

/// The partition indexing the Schubert cell of a full-rank `k x n` matrix
/// in bottom-to-top RREF: with the pivot of row `i` (from the top) in
/// 1-indexed column `c_i`, the part is `lambda_i = c_i + i - k - 1`,
/// equivalently the pivot sits `n - k + i - lambda_i` columns from the
/// right.
pub fn cell_partition(m: &FqMatrix, k: usize, n: usize) -> Result<Partition> {
    if m.rows() != k || m.cols() != n {
        return Err(Error::precondition(format!(
            "expected a {k} x {n} matrix, got {} x {}",
            m.rows(),
            m.cols()
        )));
    }
    let Some(pivots) = m.rref_pivots() else {
        return Err(Error::precondition(
            "matrix is not in bottom-to-top reduced row echelon form".to_string(),
        ));
    };
    let parts: Vec<usize> = pivots
        .iter()
        .enumerate()
        .map(|(i, &c)| (c + 1) + (i + 1) - k - 1)
        .collect();
    Ok(Partition::new(parts))
}

/// 1-indexed pivot columns of the cell of `lambda` in `Gr(n,k)`, top row
/// first: `c_i = lambda_i + k - i + 1`.
pub(crate) fn pivot_columns(lambda: &Partition, k: usize) -> Vec<usize> {
    (1..=k).map(|i| lambda.part(i) + k - i + 1).collect()
}

/// Free (star) positions of the cell, as 0-indexed `(row, col)` pairs: in
/// each row, the columns right of its pivot that are not pivots of other
/// rows.
pub(crate) fn star_positions(lambda: &Partition, k: usize, n: usize) -> Vec<(usize, usize)> {
    let pivots = pivot_columns(lambda, k);
    let mut stars = Vec::new();
    for (i, &c) in pivots.iter().enumerate() {
        for col in c + 1..=n {
            if !pivots.contains(&col) {
                stars.push((i, col - 1));
            }
        }
    }
    stars
}

/// Streams every matrix of one Schubert cell: the pivot pattern with all
/// `q^(free)` assignments of the star entries.
pub struct CellMatrices {
    base: FqMatrix,
    stars: Vec<(usize, usize)>,
    state: Vec<u64>,
    q: u64,
    done: bool,
}

impl CellMatrices {
    pub fn new(q: u64, n: usize, k: usize, lambda: &Partition) -> Result<Self> {
        check_prime(q)?;
        if k > n {
            return Err(Error::precondition(format!("k={k} exceeds n={n}")));
        }
        if k >= 1 && n > k {
            let rect = AmbientRectangle::new(k, n - k);
            if !lambda.fits_in(&rect) {
                return Err(Error::precondition(format!(
                    "partition {lambda} does not fit in {rect}"
                )));
            }
        } else if !lambda.is_empty() {
            return Err(Error::precondition(format!(
                "Gr({n},{k}) admits only the empty partition"
            )));
        }
        let mut base = FqMatrix::zero(q, k, n)?;
        for (i, c) in pivot_columns(lambda, k).into_iter().enumerate() {
            base.set(i, c - 1, 1);
        }
        let stars = star_positions(lambda, k, n);
        Ok(CellMatrices {
            base,
            state: vec![0; stars.len()],
            stars,
            q,
            done: false,
        })
    }

    pub fn cell_size(&self) -> BigUint {
        BigUint::from(self.q).pow(self.stars.len() as u32)
    }
}

impl Iterator for CellMatrices {
    type Item = FqMatrix;

    fn next(&mut self) -> Option<FqMatrix> {
        if self.done {
            return None;
        }
        let mut m = self.base.clone();
        for (&(r, c), &v) in self.stars.iter().zip(self.state.iter()) {
            m.set(r, c, v);
        }
        // Odometer step.
        let mut i = 0;
        loop {
            if i == self.state.len() {
                self.done = true;
                break;
            }
            self.state[i] += 1;
            if self.state[i] < self.q {
                break;
            }
            self.state[i] = 0;
            i += 1;
        }
        Some(m)
    }
}

/// `|Gr(n,k)(F_q)|` by the cell-sum formula `sum_lambda q^(k(n-k)-|lambda|)`.
pub fn grassmannian_size(q: u64, n: usize, k: usize) -> Result<BigUint> {
    check_prime(q)?;
    if k > n {
        return Err(Error::precondition(format!("k={k} exceeds n={n}")));
    }
    if k == 0 || k == n {
        return Ok(BigUint::one());
    }
    let rect = AmbientRectangle::new(k, n - k);
    let mut total = BigUint::zero();
    for lambda in Partition::all_in_rectangle(&rect) {
        total += BigUint::from(q).pow((rect.area() - lambda.size()) as u32);
    }
    Ok(total)
}

/// Streams every point of `Gr(n,k)(F_q)` exactly once, cell by cell, after
/// checking the total point count against `cap`.
pub fn enumerate_grassmannian(
    q: u64,
    n: usize,
    k: usize,
    cap: u64,
) -> Result<impl Iterator<Item = FqMatrix>> {
    let total = grassmannian_size(q, n, k)?;
    if total > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            what: "Grassmannian point enumeration",
            needed: total.to_string(),
            cap,
        });
    }
    let lambdas: Vec<Partition> = if k == 0 || k == n {
        vec![Partition::empty()]
    } else {
        Partition::all_in_rectangle(&AmbientRectangle::new(k, n - k))
    };
    let cells: Vec<CellMatrices> = lambdas
        .iter()
        .map(|lambda| CellMatrices::new(q, n, k, lambda))
        .collect::<Result<_>>()?;
    Ok(cells.into_iter().flatten())
}

/// The Schubert incidence conditions of `lambda` for the subspace `V` and
/// flag `F`: `dim(V meet F_{n-k+i-lambda_i}) >= i` for `i = 1..k`, with
/// intersection dimensions computed by exact rank arithmetic.
pub fn schubert_condition(
    v: &FqMatrix,
    flag: &FlagFq,
    lambda: &Partition,
    k: usize,
    n: usize,
) -> Result<bool> {
    if v.rows() != k || v.cols() != n || flag.n() != n {
        return Err(Error::precondition(format!(
            "dimension mismatch: V is {}x{}, flag is in dimension {}, wanted k={k}, n={n}",
            v.rows(),
            v.cols(),
            flag.n()
        )));
    }
    if v.modulus() != flag.modulus() {
        return Err(Error::precondition("mixed moduli".to_string()));
    }
    if k >= 1 && n > k {
        let rect = AmbientRectangle::new(k, n - k);
        if !lambda.fits_in(&rect) {
            return Err(Error::precondition(format!(
                "partition {lambda} does not fit in {rect}"
            )));
        }
    }
    // Check the tightest conditions first; they fail soonest.
    for i in (1..=k).rev() {
        if lambda.part(i) == 0 {
            continue; // dim(V meet F_{n-k+i}) >= i holds automatically
        }
        let j = n - k + i - lambda.part(i);
        let stacked = v.stack(&flag.prefix(j))?;
        let meet_dim = k + j - stacked.rank();
        if meet_dim < i {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Counts the subspaces satisfying all listed Schubert conditions, one
/// partition per flag, by streaming the whole Grassmannian.
pub fn empirical_intersection(
    q: u64,
    n: usize,
    k: usize,
    flags: &[FlagFq],
    lambdas: &[Partition],
    cap: u64,
) -> Result<u64> {
    if flags.len() != lambdas.len() {
        return Err(Error::precondition(format!(
            "{} flags but {} partitions",
            flags.len(),
            lambdas.len()
        )));
    }
    let total: usize = lambdas.iter().map(|l| l.size()).sum();
    if total != k * (n - k) {
        return Err(Error::precondition(format!(
            "class sizes sum to {total}, but a zero-dimensional problem in Gr({n},{k}) needs {}",
            k * (n - k)
        )));
    }
    let mut count = 0u64;
    for v in enumerate_grassmannian(q, n, k, cap)? {
        let mut all = true;
        for (flag, lambda) in flags.iter().zip(lambdas.iter()) {
            if !schubert_condition(&v, flag, lambda, k, n)? {
                all = false;
                break;
            }
        }
        if all {
            count += 1;
        }
    }
    Ok(count)
}

/// Outcome of repeated random-flag trials: the per-count histogram and the
/// modal count, which is `None` when the mode is tied (inconclusive).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialReport {
    pub histogram: BTreeMap<u64, usize>,
    pub trials: usize,
}

impl TrialReport {
    pub fn tally(counts: impl IntoIterator<Item = u64>) -> Self {
        let mut histogram = BTreeMap::new();
        let mut trials = 0;
        for c in counts {
            *histogram.entry(c).or_insert(0) += 1;
            trials += 1;
        }
        TrialReport { histogram, trials }
    }

    pub fn modal(&self) -> Option<u64> {
        let best = self.histogram.values().max()?;
        let mut at_best = self.histogram.iter().filter(|(_, c)| *c == best);
        let (value, _) = at_best.next()?;
        if at_best.next().is_some() {
            None // tied mode is reported as inconclusive
        } else {
            Some(*value)
        }
    }
}

impl std::fmt::Display for TrialReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cells: Vec<String> = self
            .histogram
            .iter()
            .map(|(value, times)| format!("{value}:{times}"))
            .collect();
        write!(f, "{{{}}} over {} trials", cells.join(", "), self.trials)
    }
}

/// Per-trial RNG: trials are independently seeded so results do not depend
/// on how trials are scheduled.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Runs `trials` random-flag intersection counts and tallies them.
pub fn empirical_intersection_trials(
    q: u64,
    n: usize,
    k: usize,
    lambdas: &[Partition],
    trials: usize,
    seed: u64,
    cap: u64,
) -> Result<TrialReport> {
    let mut counts = Vec::with_capacity(trials);
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let flags: Vec<FlagFq> = (0..lambdas.len())
            .map(|_| FlagFq::random(&mut rng, q, n))
            .collect::<Result<_>>()?;
        counts.push(empirical_intersection(q, n, k, &flags, lambdas, cap)?);
    }
    Ok(TrialReport::tally(counts))
}
