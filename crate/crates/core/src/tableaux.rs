//! Semistandard and standard Young tableaux on skew shapes.
//!
//! This module is the enumeration substrate for every Littlewood-Richardson
//! coefficient in the crate: validity checks, reading words, the Yamanouchi
//! (lattice) condition, and backtracking enumeration of LR tableaux and LR
//! chains.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Partition, SkewShape};

/// Default cap on the number of tableaux materialized by a listing call.
/// Counting functions are not subject to it.
pub const DEFAULT_TABLEAU_CAP: u64 = 1_000_000;

/// A filling of a skew shape with positive integers, one entry per cell.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

/// A word over the positive integers.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Word(pub Vec<usize>);

impl Tableau {
    /// Builds a tableau after checking that row lengths match the shape.
    /// Entry semantics (semistandard or not) are checked separately.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::precondition(format!(
                "tableau has {} rows but shape {shape} has {}",
                rows.len(),
                shape.num_rows()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let expected = shape.row_cols(i + 1).count();
            if row.len() != expected {
                return Err(Error::precondition(format!(
                    "row {} has {} entries but shape {shape} wants {expected}",
                    i + 1,
                    row.len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::precondition("tableau entries must be positive".to_string()));
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at 1-indexed diagram coordinates, if the cell exists.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if !self.shape.has_cell(row, col) {
            return None;
        }
        let offset = col - (self.shape.inner().part(row) + 1);
        Some(self.rows[row - 1][offset])
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Rows concatenated bottom to top, each left to right.
    pub fn reading_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.size());
        for row in self.rows.iter().rev() {
            letters.extend_from_slice(row);
        }
        Word(letters)
    }

    /// The content vector: entry `i - 1` is the multiplicity of letter `i`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut content = vec![0usize; max];
        for &e in self.rows.iter().flatten() {
            content[e - 1] += 1;
        }
        content
    }

    /// Semistandardness: rows weakly increase left to right and columns
    /// strictly increase top to bottom, across the whole skew diagram.
    pub fn is_semistandard(&self) -> bool {
        for r in 1..=self.shape.num_rows() {
            for c in self.shape.row_cols(r) {
                let e = self.entry(r, c).unwrap();
                if let Some(right) = self.entry(r, c + 1) {
                    if e > right {
                        return false;
                    }
                }
                if let Some(below) = self.entry(r + 1, c) {
                    if e >= below {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl std::fmt::Display for Tableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let indent = self.shape.inner().part(i + 1);
            write!(f, "{}", ". ".repeat(indent))?;
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &l in &self.0 {
            if l <= 9 {
                write!(f, "{l}")?;
            } else {
                write!(f, "({l})")?;
            }
        }
        Ok(())
    }
}

/// Yamanouchi (lattice, ballot) condition: every suffix contains at least as
/// many letters `i` as `i + 1`, for every `i`.
pub fn is_yamanouchi(word: &Word) -> bool {
    let max = word.0.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max + 1];
    for &letter in word.0.iter().rev() {
        counts[letter] += 1;
        if letter >= 2 && counts[letter] > counts[letter - 1] {
            return false;
        }
    }
    true
}

/// Enumerates the cells of a skew shape in reverse reading order: top row
/// right-to-left first, then the next row, ending with the bottom row. The
/// suffix of the reading word placed so far is exactly the set of visited
/// cells, which lets the Yamanouchi condition prune during search.
fn cells_reverse_reading(shape: &SkewShape) -> Vec<(usize, usize)> {
    let mut cells = Vec::with_capacity(shape.size());
    for r in 1..=shape.num_rows() {
        for c in shape.row_cols(r).rev() {
            cells.push((r, c));
        }
    }
    cells
}

struct LrSearch<'a> {
    shape: &'a SkewShape,
    mu: &'a Partition,
    cells: Vec<(usize, usize)>,
    entries: BTreeMap<(usize, usize), usize>,
    suffix_counts: Vec<usize>,
    results: Option<&'a mut Vec<Tableau>>,
    count: BigUint,
    cap: u64,
    overflowed: bool,
}

impl<'a> LrSearch<'a> {
    fn run(&mut self) {
        self.place(0);
    }

    fn place(&mut self, idx: usize) {
        if self.overflowed {
            return;
        }
        if idx == self.cells.len() {
            self.count += BigUint::one();
            if let Some(results) = self.results.as_deref_mut() {
                if results.len() as u64 >= self.cap {
                    self.overflowed = true;
                    return;
                }
                let rows: Vec<Vec<usize>> = (1..=self.shape.num_rows())
                    .map(|r| {
                        self.shape
                            .row_cols(r)
                            .map(|c| self.entries[&(r, c)])
                            .collect()
                    })
                    .collect();
                results.push(Tableau::new(self.shape.clone(), rows).unwrap());
            }
            return;
        }
        let (r, c) = self.cells[idx];
        // Bounds from neighbors already placed: the right neighbor in the
        // same row and the neighbor directly above.
        let upper = self
            .entries
            .get(&(r, c + 1))
            .copied()
            .unwrap_or(self.mu.length());
        let lower = self.entries.get(&(r.wrapping_sub(1), c)).map_or(1, |&a| a + 1);
        for letter in lower..=upper {
            if self.suffix_counts[letter] >= self.mu.part(letter) {
                continue; // content exhausted
            }
            // Yamanouchi on the suffix placed so far.
            if letter >= 2 && self.suffix_counts[letter] + 1 > self.suffix_counts[letter - 1] {
                continue;
            }
            self.suffix_counts[letter] += 1;
            self.entries.insert((r, c), letter);
            self.place(idx + 1);
            self.entries.remove(&(r, c));
            self.suffix_counts[letter] -= 1;
        }
    }
}

/// Counts Littlewood-Richardson tableaux of the given skew shape and
/// content: semistandard fillings whose reading word is Yamanouchi.
pub fn count_lr_tableaux(shape: &SkewShape, mu: &Partition) -> BigUint {
    if shape.size() != mu.size() {
        return BigUint::zero();
    }
    let cells = cells_reverse_reading(shape);
    let mut search = LrSearch {
        shape,
        mu,
        cells,
        entries: BTreeMap::new(),
        suffix_counts: vec![0; mu.length() + 1],
        results: None,
        count: BigUint::zero(),
        cap: u64::MAX,
        overflowed: false,
    };
    search.run();
    search.count
}

/// Lists the tableaux counted by [`count_lr_tableaux`], sorted by their row
/// entries so golden outputs are byte-stable. Fails if more than `cap`
/// tableaux would be materialized.
pub fn enumerate_lr_tableaux_capped(
    shape: &SkewShape,
    mu: &Partition,
    cap: u64,
) -> Result<Vec<Tableau>> {
    if shape.size() != mu.size() {
        return Ok(Vec::new());
    }
    let cells = cells_reverse_reading(shape);
    let mut results = Vec::new();
    let mut search = LrSearch {
        shape,
        mu,
        cells,
        entries: BTreeMap::new(),
        suffix_counts: vec![0; mu.length() + 1],
        results: Some(&mut results),
        count: BigUint::zero(),
        cap,
        overflowed: false,
    };
    search.run();
    if search.overflowed {
        return Err(Error::CapExceeded {
            what: "Littlewood-Richardson tableau listing",
            needed: format!("more than {cap}"),
            cap,
        });
    }
    results.sort_by(|a, b| a.rows.cmp(&b.rows));
    Ok(results)
}

/// [`enumerate_lr_tableaux_capped`] with the default cap.
pub fn enumerate_lr_tableaux(shape: &SkewShape, mu: &Partition) -> Result<Vec<Tableau>> {
    enumerate_lr_tableaux_capped(shape, mu, DEFAULT_TABLEAU_CAP)
}

/// All partitions `tau` with `sigma` contained in `tau` and
/// `|tau| = |sigma| + added`, with at most `max_rows` rows.
fn partitions_extending(sigma: &Partition, added: usize, max_rows: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn rec(
        sigma: &Partition,
        row: usize,
        max_rows: usize,
        remaining: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > max_rows {
            if remaining == 0 {
                out.push(Partition::new(current.clone()));
            }
            return;
        }
        let lo = sigma.part(row);
        let hi = if row == 1 {
            sigma.part(1) + remaining
        } else {
            current[row - 2].min(sigma.part(row) + remaining)
        };
        for v in lo..=hi {
            if v == 0 {
                // An empty row ends the shape; valid only if nothing is left.
                if remaining == 0 {
                    out.push(Partition::new(current.clone()));
                }
                continue;
            }
            if v - lo > remaining {
                break;
            }
            current.push(v);
            rec(sigma, row + 1, max_rows, remaining - (v - lo), current, out);
            current.pop();
        }
    }
    rec(sigma, 1, max_rows, added, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Number of chains of Littlewood-Richardson tableaux with the given
/// contents and total shape: sequences `T_1, ..., T_m` where `T_j` is an LR
/// tableau of content `contents[j]`, shapes are disjoint, every partial
/// union is a partition shape, and the total union is `total`.
pub fn enumerate_lr_chains(contents: &[Partition], total: &Partition) -> Result<BigUint> {
    let sum: usize = contents.iter().map(|c| c.size()).sum();
    if sum != total.size() {
        return Err(Error::precondition(format!(
            "chain contents total {sum} boxes but the total shape has {}",
            total.size()
        )));
    }
    // Forward fold over the factors: map from intermediate shape to count.
    let mut layer: BTreeMap<Partition, BigUint> = BTreeMap::new();
    layer.insert(Partition::empty(), BigUint::one());
    for mu in contents {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (sigma, ways) in &layer {
            for tau in partitions_extending(sigma, mu.size(), total.length().max(1)) {
                if !total.contains(&tau) {
                    continue;
                }
                let shape = SkewShape::new(tau.clone(), sigma.clone()).unwrap();
                let tableaux = count_lr_tableaux(&shape, mu);
                if !tableaux.is_zero() {
                    *next.entry(tau).or_insert_with(BigUint::zero) += ways * tableaux;
                }
            }
        }
        layer = next;
    }
    Ok(layer.remove(total).unwrap_or_else(BigUint::zero))
}

/// Expansion form of chain counting with no total-shape restriction: the map
/// `nu -> number of chains with total shape nu` over all `nu` of full size.
pub fn lr_chain_expansion(contents: &[Partition]) -> BTreeMap<Partition, BigUint> {
    let mut layer: BTreeMap<Partition, BigUint> = BTreeMap::new();
    layer.insert(Partition::empty(), BigUint::one());
    let max_rows: usize = contents.iter().map(|c| c.length()).sum::<usize>().max(1);
    for mu in contents {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (sigma, ways) in &layer {
            for tau in partitions_extending(sigma, mu.size(), max_rows) {
                let shape = SkewShape::new(tau.clone(), sigma.clone()).unwrap();
                let tableaux = count_lr_tableaux(&shape, mu);
                if !tableaux.is_zero() {
                    *next.entry(tau).or_insert_with(BigUint::zero) += ways * tableaux;
                }
            }
        }
        layer = next;
    }
    layer
}

/// Lists chain witnesses for [`enumerate_lr_chains`], each a sequence of LR
/// tableaux on the successive skew differences, in a canonical sorted order.
pub fn enumerate_lr_chain_witnesses(
    contents: &[Partition],
    total: &Partition,
    cap: u64,
) -> Result<Vec<Vec<Tableau>>> {
    let sum: usize = contents.iter().map(|c| c.size()).sum();
    if sum != total.size() {
        return Err(Error::precondition(format!(
            "chain contents total {sum} boxes but the total shape has {}",
            total.size()
        )));
    }
    fn rec(
        contents: &[Partition],
        total: &Partition,
        sigma: Partition,
        prefix: &mut Vec<Tableau>,
        chains: &mut Vec<Vec<Tableau>>,
        cap: u64,
    ) -> Result<()> {
        if prefix.len() == contents.len() {
            if &sigma == total {
                if chains.len() as u64 >= cap {
                    return Err(Error::CapExceeded {
                        what: "Littlewood-Richardson chain listing",
                        needed: format!("more than {cap}"),
                        cap,
                    });
                }
                chains.push(prefix.clone());
            }
            return Ok(());
        }
        let mu = &contents[prefix.len()];
        for tau in partitions_extending(&sigma, mu.size(), total.length().max(1)) {
            if !total.contains(&tau) {
                continue;
            }
            let shape = SkewShape::new(tau.clone(), sigma.clone()).unwrap();
            for t in enumerate_lr_tableaux_capped(&shape, mu, cap)? {
                prefix.push(t);
                rec(contents, total, tau.clone(), prefix, chains, cap)?;
                prefix.pop();
            }
        }
        Ok(())
    }
    let mut chains = Vec::new();
    let mut prefix: Vec<Tableau> = Vec::new();
    rec(contents, total, Partition::empty(), &mut prefix, &mut chains, cap)?;
    chains.sort_by(|a, b| {
        let key = |chain: &[Tableau]| -> Vec<(Partition, Vec<Vec<usize>>)> {
            chain
                .iter()
                .map(|t| (t.shape().outer().clone(), t.rows().to_vec()))
                .collect()
        };
        key(a).cmp(&key(b))
    });
    Ok(chains)
}

/// All standard Young tableaux of straight shape `lambda`: entries
/// `1..=|lambda|` each used once, rows and columns strictly increasing.
pub fn enumerate_syt(lambda: &Partition) -> Vec<Tableau> {
    let n = lambda.size();
    let mut out = Vec::new();
    let mut fill: Vec<Vec<usize>> = lambda.parts().iter().map(|&len| vec![0; len]).collect();
    let mut filled: Vec<usize> = vec![0; lambda.length()];
    fn rec(
        lambda: &Partition,
        value: usize,
        n: usize,
        fill: &mut Vec<Vec<usize>>,
        filled: &mut Vec<usize>,
        out: &mut Vec<Tableau>,
    ) {
        if value > n {
            out.push(Tableau::new(SkewShape::straight(lambda.clone()), fill.clone()).unwrap());
            return;
        }
        for r in 0..lambda.length() {
            if filled[r] < lambda.part(r + 1) && (r == 0 || filled[r - 1] > filled[r]) {
                fill[r][filled[r]] = value;
                filled[r] += 1;
                rec(lambda, value + 1, n, fill, filled, out);
                filled[r] -= 1;
            }
        }
    }
    rec(lambda, 1, n, &mut fill, &mut filled, &mut out);
    out.sort_by(|a, b| a.rows.cmp(&b.rows));
    out
}
