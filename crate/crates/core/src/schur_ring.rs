//! Schur-basis arithmetic for the cohomology of the Grassmannian.
//!
//! Products of Schur functions (equivalently, of Schubert classes) are
//! computed by Littlewood-Richardson chain enumeration. The quotient ring
//! of `Gr(n,k)` is realized by truncating the basis to partitions fitting
//! in the ambient rectangle; truncation is exact because the discarded
//! classes generate the quotient ideal. A separate monomial-expansion
//! oracle multiplies truncated Schur polynomials directly and never touches
//! the LR machinery, so the two routes check one another.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{AmbientRectangle, Partition, SkewShape};
use crate::poly::IntPolynomial;
use crate::tableaux;

/// A finitely supported integer combination of Schur basis classes.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigUint>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        SchurExpansion::default()
    }

    pub fn single(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigUint::one());
        SchurExpansion { terms }
    }

    pub fn from_terms(terms: BTreeMap<Partition, BigUint>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SchurExpansion { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigUint {
        self.terms.get(lambda).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Drops every class not fitting in the rectangle.
    pub fn truncate_to(&self, rect: &AmbientRectangle) -> SchurExpansion {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.fits_in(rect))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Expands every class into monomials in `m` variables and sums.
    pub fn to_monomials(&self, m: usize) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (lambda, coef) in &self.terms {
            let poly = schur_to_monomials(&SkewShape::straight(lambda.clone()), m);
            out = out.add(&poly.scale(&BigInt::from_biguint(num_bigint::Sign::Plus, coef.clone())));
        }
        out
    }
}

impl fmt::Display for SchurExpansion {
    /// `3*s[4,2,1] + ...` in decreasing lexicographic partition order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, coef)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if coef.is_one() {
                write!(f, "s[{lambda}]")?;
            } else {
                write!(f, "{coef}*s[{lambda}]")?;
            }
        }
        Ok(())
    }
}

/// JSON object form `{"4,2,1": 3, ...}`; coefficients that fit in a `u64`
/// serialize as numbers, larger ones as decimal strings.
impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (lambda, coef) in &self.terms {
            match u64::try_from(coef.clone()) {
                Ok(v) => map.serialize_entry(&lambda.to_string(), &v)?,
                Err(_) => map.serialize_entry(&lambda.to_string(), &coef.to_string())?,
            }
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coef {
            Small(u64),
            Big(String),
        }
        let raw = BTreeMap::<String, Coef>::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        for (k, v) in raw {
            let lambda: Partition = k.parse().map_err(D::Error::custom)?;
            let coef = match v {
                Coef::Small(v) => BigUint::from(v),
                Coef::Big(s) => s.parse::<BigUint>().map_err(D::Error::custom)?,
            };
            terms.insert(lambda, coef);
        }
        Ok(SchurExpansion::from_terms(terms))
    }
}

/// The Littlewood-Richardson coefficient `c^nu_{lambda,mu}`: the number of
/// LR tableaux of skew shape `nu/lambda` and content `mu`. Zero whenever
/// the sizes do not add up or `lambda` is not contained in `nu`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) {
        return BigUint::zero();
    }
    let shape = SkewShape::new(nu.clone(), lambda.clone()).unwrap();
    tableaux::count_lr_tableaux(&shape, mu)
}

/// Product of Schur functions indexed by `factors`, expanded back in the
/// Schur basis by chain enumeration. The empty product is `s_0 = 1`.
pub fn schur_product(factors: &[Partition]) -> SchurExpansion {
    let terms = tableaux::lr_chain_expansion(factors);
    SchurExpansion::from_terms(terms)
}

/// Product of Schubert classes in `H*(Gr)`: the Schur product truncated to
/// partitions fitting in the ambient rectangle. Intermediate shapes can be
/// truncated too, because a shape that leaves the rectangle never returns.
pub fn grassmannian_product(
    rect: &AmbientRectangle,
    factors: &[Partition],
) -> Result<SchurExpansion> {
    for f in factors {
        if !f.fits_in(rect) {
            return Err(Error::precondition(format!(
                "factor {f} does not fit in the ambient rectangle {rect}"
            )));
        }
    }
    let mut layer: BTreeMap<Partition, BigUint> = BTreeMap::new();
    layer.insert(Partition::empty(), BigUint::one());
    for mu in factors {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (sigma, ways) in &layer {
            for (tau, count) in schur_product(&[sigma.clone(), mu.clone()]).terms() {
                if tau.fits_in(rect) {
                    *next.entry(tau.clone()).or_insert_with(BigUint::zero) += ways * count;
                }
            }
        }
        layer = next;
    }
    Ok(SchurExpansion::from_terms(layer))
}

/// Pieri rule: `s_(r) * s_lambda` expands over partitions obtained from
/// `lambda` by adding a horizontal strip of `r` boxes; with a rectangle
/// given, the expansion is truncated to it.
pub fn pieri(
    r: usize,
    lambda: &Partition,
    rect: Option<&AmbientRectangle>,
) -> Result<SchurExpansion> {
    if let Some(b) = rect {
        if !lambda.fits_in(b) {
            return Err(Error::precondition(format!(
                "partition {lambda} does not fit in the ambient rectangle {b}"
            )));
        }
    }
    let mut terms = BTreeMap::new();
    let rows = lambda.length() + 1;
    // Choose the new length of every row; the added cells must form a
    // horizontal strip: lambda_i <= nu_i and nu_{i+1} <= lambda_i.
    fn rec(
        lambda: &Partition,
        row: usize,
        rows: usize,
        left: usize,
        current: &mut Vec<usize>,
        terms: &mut BTreeMap<Partition, BigUint>,
    ) {
        if row > rows {
            if left == 0 {
                *terms
                    .entry(Partition::new(current.clone()))
                    .or_insert_with(BigUint::zero) += BigUint::one();
            }
            return;
        }
        let lo = lambda.part(row);
        // Strip condition: the new row may not reach past the row above it
        // in lambda, so no column gains two boxes.
        let hi = if row == 1 {
            lo + left
        } else {
            lambda.part(row - 1).min(lo + left)
        };
        for v in lo..=hi {
            if v == 0 && left > 0 {
                continue;
            }
            current.push(v);
            rec(lambda, row + 1, rows, left - (v - lo), current, terms);
            current.pop();
        }
    }
    rec(lambda, 1, rows, r, &mut Vec::new(), &mut terms);
    let expansion = SchurExpansion::from_terms(terms);
    Ok(match rect {
        Some(b) => expansion.truncate_to(b),
        None => expansion,
    })
}

/// Duality pairing in `Gr`: for `|lambda| + |mu| = |B|`, the coefficient of
/// the full-rectangle class in `sigma_lambda * sigma_mu`, which is 1 iff
/// `mu` is the complement of `lambda` and 0 otherwise.
pub fn duality_pairing(
    lambda: &Partition,
    mu: &Partition,
    rect: &AmbientRectangle,
) -> Result<u8> {
    if lambda.size() + mu.size() != rect.area() {
        return Err(Error::precondition(format!(
            "|{lambda}| + |{mu}| must equal the rectangle area {}",
            rect.area()
        )));
    }
    if !lambda.fits_in(rect) || !mu.fits_in(rect) {
        return Err(Error::precondition(format!(
            "both partitions must fit in the ambient rectangle {rect}"
        )));
    }
    Ok(if &lambda.complement(rect)? == mu { 1 } else { 0 })
}

/// Zero-dimensional intersection count: the number of LR chains with the
/// given contents filling the whole rectangle.
pub fn intersection_count(
    rect: &AmbientRectangle,
    factors: &[Partition],
) -> Result<BigUint> {
    let total: usize = factors.iter().map(|f| f.size()).sum();
    if total != rect.area() {
        return Err(Error::precondition(format!(
            "class sizes sum to {total}, but a zero-dimensional intersection in {rect} needs {}",
            rect.area()
        )));
    }
    for f in factors {
        if !f.fits_in(rect) {
            return Err(Error::precondition(format!(
                "factor {f} does not fit in the ambient rectangle {rect}"
            )));
        }
    }
    tableaux::enumerate_lr_chains(factors, &rect.full_partition())
}

/// The truncation of the skew Schur function to `m` variables: the sum of
/// `x^T` over all semistandard fillings of the shape with entries at most
/// `m`. This is the independent oracle for the LR rule; it never looks at
/// reading words.
pub fn schur_to_monomials(shape: &SkewShape, m: usize) -> IntPolynomial {
    assert!(m >= 1, "the monomial expansion needs at least one variable");
    let mut out = IntPolynomial::zero();
    // Fill cells row by row, left to right; only the left and upper
    // neighbors constrain each entry.
    let cells: Vec<(usize, usize)> = (1..=shape.num_rows())
        .flat_map(|r| shape.row_cols(r).map(move |c| (r, c)))
        .collect();
    let mut entries: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut weight = vec![0u32; m];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        m: usize,
        entries: &mut BTreeMap<(usize, usize), usize>,
        weight: &mut Vec<u32>,
        out: &mut IntPolynomial,
    ) {
        if idx == cells.len() {
            out.add_term(weight.clone(), BigInt::one());
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = entries.get(&(r, c - 1)).copied().unwrap_or(1);
        let lo_col = entries.get(&(r - 1, c)).map_or(1, |&a| a + 1);
        for letter in lo_row.max(lo_col)..=m {
            entries.insert((r, c), letter);
            weight[letter - 1] += 1;
            rec(idx + 1, cells, m, entries, weight, out);
            weight[letter - 1] -= 1;
            entries.remove(&(r, c));
        }
    }
    rec(0, &cells, m, &mut entries, &mut weight, &mut out);
    out
}
