//! Sparse multivariate polynomials with exact integer coefficients.
//!
//! Exponent vectors are stored with no trailing zeros, so a polynomial never
//! commits to a fixed number of variables: `x3` can appear at any time and
//! operations extend the variable window on demand. This one representation
//! backs both the monomial-expansion oracles for Schur and Schur P/Q
//! functions and the divided-difference calculus of Schubert polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

/// Exponent vector, canonical form: no trailing zeros.
pub type Exponents = Vec<u32>;

fn canonical(mut exps: Exponents) -> Exponents {
    while exps.last() == Some(&0) {
        exps.pop();
    }
    exps
}

/// A sparse polynomial in `x1, x2, ...` over the integers.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    terms: BTreeMap<Exponents, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = IntPolynomial::zero();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    /// The variable `x_i`, 1-indexed.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-indexed");
        let mut exps = vec![0u32; i];
        exps[i - 1] = 1;
        IntPolynomial::monomial(exps, BigInt::one())
    }

    pub fn monomial(exps: Exponents, coef: BigInt) -> Self {
        let mut p = IntPolynomial::zero();
        p.add_term(exps, coef);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    /// Largest variable index appearing, 0 for constants.
    pub fn num_variables(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        let key = canonical(exps.to_vec());
        self.terms.get(&key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exps: Exponents, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let key = canonical(exps);
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += coef;
        if entry.is_zero() {
            let key2 = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key2 {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = IntPolynomial::zero();
        for (e, coef) in &self.terms {
            out.terms.insert(e.clone(), coef * c);
        }
        out
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut exps = vec![0u32; ea.len().max(eb.len())];
                for (i, &v) in ea.iter().enumerate() {
                    exps[i] += v;
                }
                for (i, &v) in eb.iter().enumerate() {
                    exps[i] += v;
                }
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> IntPolynomial {
        let mut out = IntPolynomial::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Swaps the variables `x_i` and `x_{i+1}` in every term (1-indexed).
    pub fn swap_variables(&self, i: usize) -> IntPolynomial {
        assert!(i >= 1, "variables are 1-indexed");
        let mut out = IntPolynomial::zero();
        for (e, c) in &self.terms {
            let mut exps = e.clone();
            if exps.len() < i + 1 {
                exps.resize(i + 1, 0);
            }
            exps.swap(i - 1, i);
            out.add_term(exps, c.clone());
        }
        out
    }

    /// Applies an arbitrary permutation of the first `m` variables:
    /// variable `x_j` becomes `x_{perm[j-1]}`.
    pub fn permute_variables(&self, perm: &[usize]) -> IntPolynomial {
        let m = perm.len();
        let mut out = IntPolynomial::zero();
        for (e, c) in &self.terms {
            let mut exps = vec![0u32; e.len().max(m)];
            for (j, &v) in e.iter().enumerate() {
                let target = if j < m { perm[j] - 1 } else { j };
                exps[target] += v;
            }
            out.add_term(exps, c.clone());
        }
        out
    }

    /// True iff the polynomial is invariant under all permutations of
    /// `x1..xm`; adjacent swaps generate them all.
    pub fn is_symmetric_in(&self, m: usize) -> bool {
        (1..m).all(|i| &self.swap_variables(i) == self)
    }

    /// The lexicographically greatest term (compares `exps` padded on the
    /// right, variable 1 weighing most).
    pub fn leading_term_lex(&self) -> Option<(Exponents, BigInt)> {
        self.terms
            .iter()
            .max_by(|(ea, _), (eb, _)| {
                let n = ea.len().max(eb.len());
                for i in 0..n {
                    let a = ea.get(i).copied().unwrap_or(0);
                    let b = eb.get(i).copied().unwrap_or(0);
                    if a != b {
                        return a.cmp(&b);
                    }
                }
                std::cmp::Ordering::Equal
            })
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    /// The elementary symmetric polynomial `e_i(x1..xn)`.
    pub fn elementary_symmetric(i: usize, n: usize) -> IntPolynomial {
        assert!(i <= n, "e_{i} needs at least {i} variables");
        let mut out = IntPolynomial::zero();
        let mut subset: Vec<usize> = Vec::new();
        fn rec(start: usize, left: usize, n: usize, subset: &mut Vec<usize>, out: &mut IntPolynomial) {
            if left == 0 {
                let mut exps = vec![0u32; subset.last().copied().unwrap_or(0)];
                for &v in subset.iter() {
                    exps[v - 1] = 1;
                }
                out.add_term(exps, BigInt::one());
                return;
            }
            for v in start..=(n - left + 1) {
                subset.push(v);
                rec(v + 1, left - 1, n, subset, out);
                subset.pop();
            }
        }
        if i == 0 {
            return IntPolynomial::one();
        }
        rec(1, i, n, &mut subset, &mut out);
        out
    }

    /// The complete homogeneous symmetric polynomial `h_m(x1..xj)`.
    pub fn complete_homogeneous(m: usize, j: usize) -> IntPolynomial {
        if m == 0 {
            return IntPolynomial::one();
        }
        if j == 0 {
            return IntPolynomial::zero();
        }
        let mut out = IntPolynomial::zero();
        let mut exps = vec![0u32; j];
        fn rec(var: usize, left: usize, j: usize, exps: &mut Vec<u32>, out: &mut IntPolynomial) {
            if var == j {
                exps[j - 1] = left as u32;
                out.add_term(exps.clone(), BigInt::one());
                exps[j - 1] = 0;
                return;
            }
            for take in 0..=left {
                exps[var - 1] = take as u32;
                rec(var + 1, left - take, j, exps, out);
                exps[var - 1] = 0;
            }
        }
        rec(1, m, j, &mut exps, &mut out);
        out
    }

    /// Terms sorted for display: total degree descending, then exponent
    /// vector lexicographically descending.
    fn display_order(&self) -> Vec<(&Exponents, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            db.cmp(&da).then_with(|| {
                let n = ea.len().max(eb.len());
                for i in 0..n {
                    let a = ea.get(i).copied().unwrap_or(0);
                    let b = eb.get(i).copied().unwrap_or(0);
                    if a != b {
                        return b.cmp(&a);
                    }
                }
                std::cmp::Ordering::Equal
            })
        });
        terms
    }
}

fn format_monomial(exps: &[u32]) -> String {
    let factors: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .collect();
    factors.join("*")
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (exps, coef)) in self.display_order().into_iter().enumerate() {
            let mono = format_monomial(exps);
            let abs = coef.abs();
            if idx == 0 {
                if coef.is_negative() {
                    write!(f, "-")?;
                }
            } else if coef.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// JSON form: a list of `{"exps": [...], "coef": n}` records in display
/// order. Coefficients that fit in an `i64` serialize as numbers, larger
/// ones as decimal strings.
#[derive(Serialize, Deserialize)]
struct TermRecord {
    exps: Vec<u32>,
    coef: CoefRecord,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoefRecord {
    Small(i64),
    Big(String),
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.display_order();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for (exps, coef) in terms {
            let coef = match i64::try_from(coef.clone()) {
                Ok(v) => CoefRecord::Small(v),
                Err(_) => CoefRecord::Big(coef.to_string()),
            };
            seq.serialize_element(&TermRecord {
                exps: exps.clone(),
                coef,
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut p = IntPolynomial::zero();
        for rec in records {
            let coef = match rec.coef {
                CoefRecord::Small(v) => BigInt::from(v),
                CoefRecord::Big(s) => s
                    .parse::<BigInt>()
                    .map_err(|e| serde::de::Error::custom(format!("bad coefficient: {e}")))?,
            };
            p.add_term(rec.exps, coef);
        }
        Ok(p)
    }
}
