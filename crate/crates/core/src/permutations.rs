//! Permutations in one-line notation: inversions, reduced words, and the
//! Bruhat order. These index the Schubert cells of the complete flag
//! variety, with cell dimension equal to the inversion number.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation: `window[i-1] = w(i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn new(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v < 1 || v > n || seen[v] {
                return Err(Error::precondition(format!(
                    "{window:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { window })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            window: (1..=n).collect(),
        }
    }

    /// The longest element `w0 = n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            window: (1..=n).rev().collect(),
        }
    }

    /// The adjacent transposition `s_i` in `S_n`.
    pub fn adjacent_transposition(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} needs 1 <= i < n");
        let mut w = Permutation::identity(n);
        w.window.swap(i - 1, i);
        w
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// `w(i)`, 1-indexed.
    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Composition `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::precondition(format!(
                "cannot compose permutations of sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(Permutation {
            window: (1..=self.n()).map(|i| self.apply(other.apply(i))).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut window = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            window[v - 1] = i + 1;
        }
        Permutation { window }
    }

    /// Right multiplication by `s_i`: swaps the entries in positions `i` and
    /// `i+1` of the window.
    pub fn times_s_right(&self, i: usize) -> Permutation {
        assert!(i >= 1 && i < self.n());
        let mut w = self.clone();
        w.window.swap(i - 1, i);
        w
    }

    /// Right multiplication by the transposition `(p q)`: swaps the window
    /// entries in positions `p` and `q`.
    pub fn times_transposition_right(&self, p: usize, q: usize) -> Permutation {
        assert!(p >= 1 && q >= 1 && p <= self.n() && q <= self.n() && p != q);
        let mut w = self.clone();
        w.window.swap(p - 1, q - 1);
        w
    }

    /// Embeds into `S_m` by fixing the new points, `m >= n`.
    pub fn embed(&self, m: usize) -> Permutation {
        assert!(m >= self.n());
        let mut window = self.window.clone();
        window.extend(self.n() + 1..=m);
        Permutation { window }
    }

    /// Removes trailing fixed points (keeps at least one entry).
    pub fn trim(&self) -> Permutation {
        let mut window = self.window.clone();
        while window.len() > 1 && *window.last().unwrap() == window.len() {
            window.pop();
        }
        Permutation { window }
    }

    /// The number of pairs `i < j` with `w(i) > w(j)`.
    pub fn inversions(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.window[i] > self.window[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Coxeter length; equals the inversion number.
    pub fn length(&self) -> usize {
        self.inversions()
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.window[i - 1] > self.window[i])
            .collect()
    }

    /// A reduced word for `w`: generator indices `(i_1, ..., i_k)` with
    /// `w = s_{i_1} ... s_{i_k}` and `k = length(w)`. Deterministic: the
    /// word is built by repeatedly removing the smallest descent on the
    /// right.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut applied = Vec::new();
        loop {
            let descent = w.descents().into_iter().next();
            match descent {
                None => break,
                Some(i) => {
                    w = w.times_s_right(i);
                    applied.push(i);
                }
            }
        }
        // w * s_{a_1} * ... * s_{a_k} = id, so w = s_{a_k} * ... * s_{a_1}.
        applied.reverse();
        applied
    }

    /// Multiplies out a word of generator indices: the group product
    /// `s_{i_1} * s_{i_2} * ... * s_{i_k}` in `S_n`.
    pub fn from_word(word: &[usize], n: usize) -> Permutation {
        let mut w = Permutation::identity(n);
        for &i in word {
            w = w.times_s_right(i);
        }
        w
    }

    /// All permutations of `S_n` in lexicographic window order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut window: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                window: window.clone(),
            });
            // Next lexicographic permutation.
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| window[i] < window[i + 1])
            else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| window[j] > window[i]).unwrap();
            window.swap(i, j);
            window[i + 1..].reverse();
        }
    }
}

impl fmt::Display for Permutation {
    /// One-line digits for `n <= 9` (`45132`), comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.window {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::parse("empty permutation".to_string()));
        }
        let window: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|piece| {
                    piece
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(format!("bad permutation entry {piece:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::parse(format!("bad permutation digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(window).map_err(|e| Error::parse(e.to_string()))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.window.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let window = Vec::<usize>::deserialize(deserializer)?;
        Permutation::new(window).map_err(serde::de::Error::custom)
    }
}

/// Bruhat order `v <= w`, by the subword property: fix one reduced word of
/// `w` and collect every element reachable as a reduced subword product;
/// `v` is below `w` exactly when it appears. Works on any single reduced
/// word of `w`.
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    if v.n() != w.n() {
        return Err(Error::precondition(format!(
            "Bruhat comparison needs matching sizes, got {} and {}",
            v.n(),
            w.n()
        )));
    }
    if v.length() > w.length() {
        return Ok(false);
    }
    let word = w.reduced_word();
    let n = w.n();
    let mut reachable: HashSet<Permutation> = HashSet::new();
    reachable.insert(Permutation::identity(n));
    for &i in &word {
        let mut grown: Vec<Permutation> = Vec::new();
        for u in &reachable {
            let extended = u.times_s_right(i);
            if extended.length() > u.length() && !reachable.contains(&extended) {
                grown.push(extended);
            }
        }
        reachable.extend(grown);
    }
    Ok(reachable.contains(v))
}
