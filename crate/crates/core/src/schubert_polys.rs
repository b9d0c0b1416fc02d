//! Schubert polynomials, divided-difference operators, Monk's rule, and the
//! coinvariant ring.
//!
//! Conventions, pinned by requiring both `S_213 = x1` and Monk's rule to
//! hold: starting from the staircase monomial `S_w0 = x1^{n-1} ... x_{n-1}`,
//! the polynomial of `w` is obtained by applying `d_{i_1}, d_{i_2}, ...` in
//! order along a reduced word `(i_1, ..., i_r)` of `w0 * w` (one-line
//! entries `n + 1 - w(i)`). Any reduced word gives the same polynomial; the
//! braid and commutation identities that guarantee this are checked in the
//! test suites.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::permutations::Permutation;
use crate::poly::{Exponents, IntPolynomial};

/// The divided difference `d_i(P) = (P - s_i(P)) / (x_i - x_{i+1})`.
///
/// The numerator is always divisible; the quotient is computed by synthetic
/// division against `x_i - x_{i+1}` and a nonzero remainder is an arithmetic
/// bug, not bad input, so it panics.
pub fn divided_difference(i: usize, p: &IntPolynomial) -> IntPolynomial {
    assert!(i >= 1, "divided differences are 1-indexed");
    let mut remainder = p.sub(&p.swap_variables(i));
    let mut quotient = IntPolynomial::zero();
    // Reduce the term with the highest x_i exponent each round; dividing by
    // x_i - x_{i+1} trades x_i degree for x_{i+1} degree, so this strictly
    // decreases and must end at zero.
    while !remainder.is_zero() {
        let (exps, coef) = remainder
            .terms()
            .map(|(e, c)| (e.clone(), c.clone()))
            .max_by(|(ea, _), (eb, _)| {
                let xa = ea.get(i - 1).copied().unwrap_or(0);
                let xb = eb.get(i - 1).copied().unwrap_or(0);
                xa.cmp(&xb).then_with(|| ea.cmp(eb))
            })
            .unwrap();
        let xi = exps.get(i - 1).copied().unwrap_or(0);
        assert!(
            xi > 0,
            "nonzero remainder while dividing by x{i} - x{}: internal arithmetic bug",
            i + 1
        );
        let mut qexps: Exponents = exps.clone();
        qexps[i - 1] = xi - 1;
        quotient.add_term(qexps.clone(), coef.clone());
        // remainder -= q_term * (x_i - x_{i+1})
        remainder.add_term(exps, -coef.clone());
        let mut other: Exponents = qexps;
        if other.len() < i + 1 {
            other.resize(i + 1, 0);
        }
        other[i] += 1;
        remainder.add_term(other, coef);
    }
    quotient
}

/// The staircase monomial `x1^{n-1} x2^{n-2} ... x_{n-1}`, the Schubert
/// polynomial of the longest element of `S_n`.
pub fn staircase_monomial(n: usize) -> IntPolynomial {
    let exps: Exponents = (1..n).map(|i| (n - i) as u32).collect();
    IntPolynomial::monomial(exps, BigInt::from(1))
}

/// The Schubert polynomial of `w`.
pub fn schubert_polynomial(w: &Permutation) -> IntPolynomial {
    let n = w.n();
    let w0 = Permutation::longest(n);
    let u = w0.compose(w).unwrap(); // u(i) = n + 1 - w(i)
    let word = u.reduced_word();
    let mut poly = staircase_monomial(n);
    for &i in &word {
        poly = divided_difference(i, &poly);
    }
    poly
}

/// Monk expansion: the set of permutations `v = w t_{pq}` with
/// `p <= i < q` and `length(v) = length(w) + 1`, so that
/// `S_{s_i} * S_w = sum_v S_v` holds exactly. The computation embeds `w`
/// into `S_{m}` with `m = max(n, i+1) + 1`, which is large enough to hold
/// every such `v`; results are trimmed of trailing fixed points.
pub fn monk_expand(i: usize, w: &Permutation) -> Vec<Permutation> {
    assert!(i >= 1);
    let m = w.n().max(i + 1) + 1;
    let w = w.embed(m);
    let base = w.length();
    let mut out = Vec::new();
    for p in 1..=i {
        for q in i + 1..=m {
            let v = w.times_transposition_right(p, q);
            if v.length() == base + 1 {
                out.push(v.trim());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All exponent vectors `(a_1, ..., a_n)` with `a_j <= n - j`: the monomial
/// basis of the coinvariant ring, of size `n!`.
pub fn staircase_basis(n: usize) -> Vec<Exponents> {
    let mut out: Vec<Exponents> = vec![Vec::new()];
    for j in 1..=n {
        let mut next = Vec::new();
        for prefix in &out {
            for a in 0..=(n - j) as u32 {
                let mut e = prefix.clone();
                e.push(a);
                next.push(e);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|mut e| {
            while e.last() == Some(&0) {
                e.pop();
            }
            e
        })
        .collect()
}

/// Reduces `P` modulo the ideal `(e_1, ..., e_n)` of the elementary
/// symmetric polynomials, onto the staircase monomial basis
/// `{x^a : a_j <= n - j}`.
///
/// Rewriting rule: in the quotient, `h_m(x_1..x_j) = 0` for `m = n - j + 1`,
/// which expresses the out-of-bounds power `x_j^{n-j+1}` by monomials that
/// are strictly smaller in the order weighing `x_n` heaviest; iterating
/// terminates with the unique staircase representative.
pub fn reduce_coinvariant(p: &IntPolynomial, n: usize) -> Result<IntPolynomial> {
    if p.num_variables() > n {
        return Err(Error::precondition(format!(
            "polynomial uses x{} but reduction is modulo e_1..e_{n} in n={n} variables",
            p.num_variables()
        )));
    }
    let mut current = p.clone();
    loop {
        let violation = current.terms().find_map(|(exps, _)| {
            exps.iter()
                .enumerate()
                .find(|(j, &a)| a as usize >= n - j) // a_j >= n - j + 1 in 1-indexed terms
                .map(|(j, _)| (exps.clone(), j + 1))
        });
        let Some((exps, j)) = violation else {
            return Ok(current);
        };
        let m = n - j + 1;
        let coef = current.coefficient(&exps);
        let mut reduced_exps = exps.clone();
        reduced_exps[j - 1] -= m as u32;
        let multiplier = IntPolynomial::monomial(reduced_exps, coef);
        // x_j^m = x_j^m - h_m(x1..xj) in the quotient; subtracting the full
        // h_m times the cofactor removes the violating term.
        let h = IntPolynomial::complete_homogeneous(m, j);
        current = current.sub(&multiplier.mul(&h));
    }
}
