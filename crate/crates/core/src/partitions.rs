//! Partitions, shifted partitions, skew shapes, and the ambient rectangle.
//!
//! These are the index objects for Schubert classes: a partition inside the
//! `k x (n-k)` ambient rectangle labels a Schubert cell of `Gr(n,k)`, and a
//! strictly decreasing (shifted) partition inside the staircase triangle
//! labels a Schubert variety of the orthogonal Grassmannian `OG(2n+1,n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition: a weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored, so equality is canonical. Coordinates in
/// all diagram operations are 1-indexed `(row, col)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Panics if the sequence increases anywhere; partitions coming from
    /// user input should go through `FromStr` instead.
    pub fn new(parts: Vec<usize>) -> Self {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|lambda|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(lambda)`, the number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-indexed, zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.length()).all(|i| self.part(i) >= other.part(i))
    }

    /// True iff the cell `(row, col)` (1-indexed) lies in the diagram.
    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row)
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition::new(parts)
    }

    /// True iff the diagram fits in the ambient rectangle: at most
    /// `rect.rows` rows and first part at most `rect.cols`.
    pub fn fits_in(&self, rect: &AmbientRectangle) -> bool {
        self.length() <= rect.rows && self.part(1) <= rect.cols
    }

    /// The complementary partition inside `rect`: rotate the diagram by a
    /// half turn and take what is left of the rectangle. Satisfies
    /// `mu_{k+1-i} = cols - lambda_i` with `lambda` padded to `k` rows, and
    /// is an involution.
    pub fn complement(&self, rect: &AmbientRectangle) -> Result<Partition> {
        if !self.fits_in(rect) {
            return Err(Error::precondition(format!(
                "partition {self} does not fit in ambient rectangle {rect}"
            )));
        }
        let parts = (1..=rect.rows)
            .rev()
            .map(|i| rect.cols - self.part(i))
            .collect();
        Ok(Partition::new(parts))
    }

    /// Hook length of the cell `(row, col)`: arm + leg + 1, where the arm is
    /// the number of cells strictly to the right and the leg the number of
    /// cells strictly below.
    pub fn hook_length(&self, row: usize, col: usize) -> Result<usize> {
        if !self.has_cell(row, col) {
            return Err(Error::precondition(format!(
                "cell ({row},{col}) lies outside the diagram of {self}"
            )));
        }
        let arm = self.part(row) - col;
        let leg = (row + 1..=self.length())
            .take_while(|&r| self.part(r) >= col)
            .count();
        Ok(arm + leg + 1)
    }

    /// Number of standard Young tableaux of this shape, by the hook length
    /// formula `|lambda|! / prod hook(s)`. The division is always exact.
    pub fn count_syt_hook_formula(&self) -> BigUint {
        let mut numerator = BigUint::one();
        for m in 1..=self.size() {
            numerator *= BigUint::from(m);
        }
        let mut denominator = BigUint::one();
        for row in 1..=self.length() {
            for col in 1..=self.part(row) {
                denominator *= BigUint::from(self.hook_length(row, col).unwrap());
            }
        }
        let (q, r) = num_integer_div_rem(&numerator, &denominator);
        assert!(r == BigUint::from(0u8), "hook length formula must divide exactly");
        q
    }

    /// Dimension of the Schubert cell indexed by this partition:
    /// `rows * cols - |lambda|`.
    pub fn cell_dimension(&self, rect: &AmbientRectangle) -> Result<usize> {
        if !self.fits_in(rect) {
            return Err(Error::precondition(format!(
                "partition {self} does not fit in ambient rectangle {rect}"
            )));
        }
        Ok(rect.rows * rect.cols - self.size())
    }

    /// All partitions fitting inside `rect`, in increasing size then lex
    /// order. Deterministic.
    pub fn all_in_rectangle(rect: &AmbientRectangle) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            out.push(Partition::new(prefix.clone()));
            let maxpart = if prefix.is_empty() {
                rect.cols
            } else {
                *prefix.last().unwrap()
            };
            if prefix.len() < rect.rows {
                for p in 1..=maxpart {
                    let mut next = prefix.clone();
                    next.push(p);
                    stack.push(next);
                }
            }
        }
        out.sort_by(|a, b| (a.size(), &a.parts).cmp(&(b.size(), &b.parts)));
        out
    }

    /// All partitions of `size` with at most `max_rows` rows and parts at
    /// most `max_part`.
    pub fn all_of_size_bounded(size: usize, max_rows: usize, max_part: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(
            remaining: usize,
            max_part: usize,
            rows_left: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                out.push(Partition::new(current.clone()));
                return;
            }
            if rows_left == 0 {
                return;
            }
            for p in (1..=max_part.min(remaining)).rev() {
                current.push(p);
                rec(remaining - p, p, rows_left - 1, current, out);
                current.pop();
            }
        }
        rec(size, max_part, max_rows, &mut current, &mut out);
        out.sort();
        out
    }

    /// All partitions of `size` (no bounds).
    pub fn all_of_size(size: usize) -> Vec<Partition> {
        Self::all_of_size_bounded(size, size.max(1), size.max(1))
    }
}

fn num_integer_div_rem(a: &BigUint, b: &BigUint) -> (BigUint, BigUint) {
    (a / b, a % b)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated syntax `"4,2,1"`; the empty string or
    /// `"-"` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: usize = piece
                .trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad partition part {piece:?} in {s:?}")))?;
            parts.push(p);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) || parts.contains(&0) {
            return Err(Error::parse(format!(
                "partition parts must be weakly decreasing and positive: {s:?}"
            )));
        }
        Ok(Partition { parts })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The `k x (n-k)` bounding rectangle of Schubert classes in `Gr(n,k)`:
/// `rows = k`, `cols = n - k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct AmbientRectangle {
    pub rows: usize,
    pub cols: usize,
}

impl AmbientRectangle {
    pub fn new(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "ambient rectangle must be nonempty");
        AmbientRectangle { rows, cols }
    }

    /// The rectangle for `Gr(n,k)`.
    pub fn for_grassmannian(n: usize, k: usize) -> Result<Self> {
        if k < 1 || k >= n {
            return Err(Error::precondition(format!(
                "Gr(n,k) needs 1 <= k < n, got n={n}, k={k}"
            )));
        }
        Ok(AmbientRectangle::new(k, n - k))
    }

    /// The full rectangle as a partition: `cols` repeated `rows` times.
    pub fn full_partition(&self) -> Partition {
        Partition::new(vec![self.cols; self.rows])
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }
}

impl fmt::Display for AmbientRectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// A strictly decreasing partition, indexing Schubert varieties of the
/// orthogonal Grassmannian. Row `i` of its shifted diagram is indented
/// `i - 1` steps.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedPartition {
    parts: Vec<usize>,
}

impl ShiftedPartition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] > w[1]) && !parts.contains(&0),
            "shifted partition parts must be strictly decreasing and positive: {parts:?}"
        );
        ShiftedPartition { parts }
    }

    pub fn empty() -> Self {
        ShiftedPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-indexed, zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &ShiftedPartition) -> bool {
        (1..=other.length()).all(|i| self.part(i) >= other.part(i))
    }

    /// True iff the shifted diagram fits in the ambient triangle of
    /// `OG(2n+1,n)`: at most `n` rows and first part at most `n`.
    pub fn fits_in_triangle(&self, n: usize) -> bool {
        self.length() <= n && self.part(1) <= n
    }

    /// The staircase `(n, n-1, ..., 1)`, the ambient triangle itself.
    pub fn staircase(n: usize) -> Self {
        ShiftedPartition::new((1..=n).rev().collect())
    }

    /// All shifted partitions fitting in the ambient triangle of
    /// `OG(2n+1,n)`.
    pub fn all_in_triangle(n: usize) -> Vec<ShiftedPartition> {
        let mut out = Vec::new();
        fn rec(maxpart: usize, current: &mut Vec<usize>, out: &mut Vec<ShiftedPartition>) {
            out.push(ShiftedPartition::new(current.clone()));
            for p in (1..=maxpart).rev() {
                current.push(p);
                rec(p - 1, current, out);
                current.pop();
            }
        }
        rec(n, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| (a.size(), &a.parts).cmp(&(b.size(), &b.parts)));
        out
    }

    /// All shifted partitions of the given size (unbounded parts).
    pub fn all_of_size(size: usize) -> Vec<ShiftedPartition> {
        let mut out = Vec::new();
        fn rec(
            remaining: usize,
            maxpart: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<ShiftedPartition>,
        ) {
            if remaining == 0 {
                out.push(ShiftedPartition::new(current.clone()));
                return;
            }
            for p in (1..=maxpart.min(remaining)).rev() {
                current.push(p);
                rec(remaining - p, p - 1, current, out);
                current.pop();
            }
        }
        rec(size, size.max(1), &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// The doubled partition inside the `n x (n+1)` rectangle.
    ///
    /// The staircase cut splits the rectangle into the upper triangle of
    /// cells `(i,j)` with `j >= i+1` and the lower triangle `j <= i`; the
    /// shifted diagram occupies upper cells `(i, i+1) .. (i, i+lambda_i)`,
    /// and the doubling adjoins the mirror image `(j-1, i)` of every upper
    /// cell. Reproduces `(3,1) -> (4,3,1)` for `n = 4`.
    pub fn double(&self, n: usize) -> Result<Partition> {
        if !self.fits_in_triangle(n) {
            return Err(Error::precondition(format!(
                "shifted partition {self} does not fit in the ambient triangle for n={n}"
            )));
        }
        let mut grid = vec![vec![false; n + 2]; n + 1]; // 1-indexed rows 1..=n, cols 1..=n+1
        for i in 1..=self.length() {
            for j in (i + 1)..=(i + self.part(i)) {
                grid[i][j] = true;
                grid[j - 1][i] = true; // mirror across the staircase cut
            }
        }
        let mut parts = Vec::new();
        for (r, row) in grid.iter().enumerate().skip(1).take(n) {
            let len = (1..=n + 1).take_while(|&c| row[c]).count();
            let total: usize = (1..=n + 1).filter(|&c| row[c]).count();
            assert!(len == total, "doubled diagram row {r} is not left-justified");
            parts.push(len);
        }
        Ok(Partition::new(parts))
    }

    /// Parses `"3,1"`; empty string or `"-"` is the empty shifted partition.
    /// (The CLI prefixes shifted partitions with `s:`; that prefix is
    /// stripped before calling this.)
    fn parse_parts(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(ShiftedPartition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: usize = piece.trim().parse().map_err(|_| {
                Error::parse(format!("bad shifted partition part {piece:?} in {s:?}"))
            })?;
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] > w[1]) || parts.contains(&0) {
            return Err(Error::parse(format!(
                "shifted partition parts must be strictly decreasing and positive: {s:?}"
            )));
        }
        Ok(ShiftedPartition { parts })
    }
}

impl fmt::Display for ShiftedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for ShiftedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShiftedPartition({self})")
    }
}

impl FromStr for ShiftedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ShiftedPartition::parse_parts(s)
    }
}

impl Serialize for ShiftedPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ShiftedPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Inverse of [`ShiftedPartition::double`]: if `lambda` is symmetric about
/// the staircase cut of the `n x (n+1)` rectangle, returns the shifted
/// partition whose doubling it is.
pub fn staircase_preimage(lambda: &Partition, n: usize) -> Result<Option<ShiftedPartition>> {
    let rect = AmbientRectangle::new(n, n + 1);
    if !lambda.fits_in(&rect) {
        return Err(Error::precondition(format!(
            "partition {lambda} does not fit in the {rect} rectangle"
        )));
    }
    // Candidate upper half: the cells of row i strictly right of column i.
    let mut upper = Vec::new();
    for i in 1..=lambda.length() {
        if lambda.part(i) > i {
            upper.push(lambda.part(i) - i);
        }
    }
    if !upper.windows(2).all(|w| w[0] > w[1]) {
        return Ok(None);
    }
    let mu = ShiftedPartition::new(upper);
    if !mu.fits_in_triangle(n) {
        return Ok(None);
    }
    if &mu.double(n)? == lambda {
        Ok(Some(mu))
    } else {
        Ok(None)
    }
}

/// True iff `lambda` equals `double(mu, n)` for some shifted `mu`.
pub fn is_staircase_symmetric(lambda: &Partition, n: usize) -> Result<bool> {
    Ok(staircase_preimage(lambda, n)?.is_some())
}

/// A skew shape `outer/inner` with `inner` contained in `outer`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::precondition(format!(
                "inner partition {inner} is not contained in outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    /// A straight shape `lambda/0`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.length()
    }

    /// Column range of row `i` (1-indexed): cells `(i, c)` for
    /// `inner_i < c <= outer_i`.
    pub fn row_cols(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        (self.inner.part(i) + 1)..=self.outer.part(i)
    }

    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && row <= self.num_rows() && self.row_cols(row).contains(&col)
    }

    /// True iff no column holds more than one cell.
    pub fn is_horizontal_strip(&self) -> bool {
        (2..=self.num_rows()).all(|i| self.outer.part(i) <= self.inner.part(i - 1))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewShape({self})")
    }
}
