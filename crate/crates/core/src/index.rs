//! Index words (compositions), zeta/zeta-star conversion and the stuffle product.
//!
//! An [`IndexWord`] `(i1, …, ik)` is the argument of every truncated or infinite
//! multiple zeta value in this crate. The first entry belongs to the largest
//! summation index, so `ζ_N(i1, …, ik) = Σ_{N ≥ n1 > … > nk ≥ 1} Π n_j^{-i_j}`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A composition `(i1, …, ik)` of positive integers. May be empty.
///
/// Words order canonically by weight, then depth, then lexicographically, which
/// makes every map keyed by words a unique normal form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IndexWord(Vec<u32>);

impl IndexWord {
    /// Builds a word, rejecting entries that are not positive.
    pub fn new<I, T>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<i64>,
    {
        let mut out = Vec::new();
        for p in parts {
            let p = p.into();
            if p <= 0 || p > u32::MAX as i64 {
                return Err(Error::NonPositiveIndex(p));
            }
            out.push(p as u32);
        }
        Ok(IndexWord(out))
    }

    pub fn empty() -> Self {
        IndexWord(Vec::new())
    }

    /// `{1}_m`: the entry 1 repeated `m` times.
    pub fn ones(m: usize) -> Self {
        IndexWord(vec![1; m])
    }

    /// Wraps parts that are already known to be positive.
    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p >= 1));
        IndexWord(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Empty, or first entry at least 2.
    pub fn is_admissible(&self) -> bool {
        self.0.first().is_none_or(|&i| i >= 2)
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// The word without its first entry.
    pub fn tail(&self) -> IndexWord {
        IndexWord(self.0.iter().skip(1).copied().collect())
    }

    /// Concatenation `self, other`.
    pub fn concat(&self, other: &IndexWord) -> IndexWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        IndexWord(v)
    }

    /// Prepends a single entry.
    pub fn prepend(&self, head: u32) -> IndexWord {
        assert!(head >= 1, "index entries must be positive");
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(head);
        v.extend_from_slice(&self.0);
        IndexWord(v)
    }

    /// Whether the word has the shape `(m, {1}_ℓ)`, returning `(m, ℓ)`.
    pub fn as_height_one(&self) -> Option<(u32, usize)> {
        let (&m, rest) = self.0.split_first()?;
        rest.iter().all(|&x| x == 1).then_some((m, rest.len()))
    }

    /// All `2^(k-1)` ways of replacing each separator by "," or "+",
    /// paired with the number of "+" used.
    pub fn contractions(&self) -> Result<Vec<(IndexWord, usize)>> {
        let k = self.depth();
        if k == 0 {
            return Err(Error::EmptyWord);
        }
        let mut out = Vec::with_capacity(1 << (k - 1));
        for mask in 0u64..(1u64 << (k - 1)) {
            let mut parts = Vec::with_capacity(k);
            let mut acc = self.0[0];
            for (j, &x) in self.0.iter().enumerate().skip(1) {
                if mask >> (j - 1) & 1 == 1 {
                    acc += x;
                } else {
                    parts.push(acc);
                    acc = x;
                }
            }
            parts.push(acc);
            out.push((IndexWord(parts), mask.count_ones() as usize));
        }
        Ok(out)
    }
}

impl Ord for IndexWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.depth().cmp(&other.depth()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for IndexWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IndexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for IndexWord {
    type Err = Error;

    /// Parses `"2,1,1"`; the empty string is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(IndexWord::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let v: i64 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad index entry `{tok}`")))?;
            parts.push(v);
        }
        IndexWord::new(parts)
    }
}

impl serde::Serialize for IndexWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for IndexWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A formal integer combination of index words with merged coefficients and no zero terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignedCombo {
    terms: BTreeMap<IndexWord, i64>,
}

impl SignedCombo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(w: IndexWord) -> Self {
        let mut c = Self::new();
        c.add_term(1, w);
        c
    }

    pub fn add_term(&mut self, coeff: i64, w: IndexWord) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn coefficient(&self, w: &IndexWord) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndexWord, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// Applies a linear map word-by-word and resums.
    pub fn map_linear<F>(&self, mut f: F) -> Result<SignedCombo>
    where
        F: FnMut(&IndexWord) -> Result<SignedCombo>,
    {
        let mut out = SignedCombo::new();
        for (w, c) in self.iter() {
            for (v, d) in f(w)?.iter() {
                out.add_term(c * d, v.clone());
            }
        }
        Ok(out)
    }
}

/// `ζ*(w) = Σ ζ(contraction)`: every contraction with coefficient +1.
pub fn star_expansion(w: &IndexWord) -> Result<SignedCombo> {
    let mut out = SignedCombo::new();
    for (c, _) in w.contractions()? {
        out.add_term(1, c);
    }
    Ok(out)
}

/// `ζ(w) = Σ (-1)^{#plus} ζ*(contraction)`.
pub fn plain_from_star(w: &IndexWord) -> Result<SignedCombo> {
    let mut out = SignedCombo::new();
    for (c, plus) in w.contractions()? {
        out.add_term(if plus % 2 == 0 { 1 } else { -1 }, c);
    }
    Ok(out)
}

/// Quasi-shuffle (stuffle) product, as a multiset: repeated words appear repeatedly.
///
/// `ζ_N(a)·ζ_N(b) = Σ_{c ∈ stuffle(a,b)} ζ_N(c)` for every `N`.
pub fn stuffle(a: &IndexWord, b: &IndexWord) -> Vec<IndexWord> {
    fn go(a: &[u32], b: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<IndexWord>) {
        match (a.split_first(), b.split_first()) {
            (None, _) => {
                let mut v = prefix.clone();
                v.extend_from_slice(b);
                out.push(IndexWord(v));
            }
            (_, None) => {
                let mut v = prefix.clone();
                v.extend_from_slice(a);
                out.push(IndexWord(v));
            }
            (Some((&x, ra)), Some((&y, rb))) => {
                prefix.push(x);
                go(ra, b, prefix, out);
                prefix.pop();
                prefix.push(y);
                go(a, rb, prefix, out);
                prefix.pop();
                prefix.push(x + y);
                go(ra, rb, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(a.parts(), b.parts(), &mut Vec::new(), &mut out);
    out
}

/// All compositions of `k`; these are the ordered partitions used by interpolated values.
pub fn ordered_partitions(k: u32) -> Result<Vec<IndexWord>> {
    if k == 0 {
        return Err(Error::Precondition("ordered_partitions needs k >= 1".into()));
    }
    Ok(compositions(k))
}

/// All compositions of `n` (the single empty composition when `n = 0`).
pub fn compositions(n: u32) -> Vec<IndexWord> {
    if n == 0 {
        return vec![IndexWord::empty()];
    }
    IndexWord::ones(n as usize)
        .contractions()
        .expect("nonempty")
        .into_iter()
        .map(|(w, _)| w)
        .collect()
}

/// Compositions of `n` with exactly `depth` parts.
pub fn compositions_of_depth(n: u32, depth: usize) -> Vec<IndexWord> {
    fn go(n: u32, depth: usize, prefix: &mut Vec<u32>, out: &mut Vec<IndexWord>) {
        if depth == 0 {
            if n == 0 {
                out.push(IndexWord(prefix.clone()));
            }
            return;
        }
        if (n as usize) < depth {
            return;
        }
        let max_first = n - (depth as u32 - 1);
        for first in 1..=max_first {
            prefix.push(first);
            go(n - first, depth - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, depth, &mut Vec::new(), &mut out);
    out
}

/// Every word of weight `0..=max_weight`, empty word included.
pub fn words_up_to_weight(max_weight: u32) -> Vec<IndexWord> {
    (0..=max_weight).flat_map(compositions).collect()
}
