//! Sets of vertex identifiers.
//!
//! A [`VertexSet`] is a bit set. Sets whose elements are all below 64 live in a
//! single inline machine word, which is also the canonical memoization key used
//! by the exact algorithms (see [`VertexSet::as_mask`]). Larger sets spill to
//! the heap.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};
use std::str::FromStr;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    // No trailing zero words, so that equal sets have equal representations.
    words: SmallVec<[u64; 1]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 1]> = smallvec![u64::MAX; n / WORD];
        if !n.is_multiple_of(WORD) {
            words.push((1u64 << (n % WORD)) - 1);
        }
        Self { words }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut s = Self {
            words: smallvec![mask],
        };
        s.trim();
        s
    }

    /// The single-word encoding, if every element is below 64.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        present
    }

    pub fn contains(&self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        self.words.get(w).is_some_and(|word| word & (1 << b) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn last(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * WORD + (WORD - 1 - last.leading_zeros() as usize))
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(short.words.iter()) {
            *w |= o;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = Self {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (w, o) in s.words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self
                .words
                .iter()
                .zip(other.words.iter())
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(items: [usize; N]) -> Self {
        items.into_iter().collect()
    }
}

impl BitOr for &VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> VertexSet {
        self.union(rhs)
    }
}

impl BitAnd for &VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> VertexSet {
        self.intersection(rhs)
    }
}

impl Sub for &VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> VertexSet {
        self.difference(rhs)
    }
}

/// Lexicographic order on the ascending element sequences, so `{0,1} < {0,2} < {1}`.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Formats as `{0,2,5}`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for VertexSet {
    type Err = Error;

    /// Parses `{v1,v2,...}`; whitespace around elements is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| Error::input(format!("expected `{{...}}`, found `{s}`")))?;
        let mut set = VertexSet::new();
        if inner.trim().is_empty() {
            return Ok(set);
        }
        for item in inner.split(',') {
            let v: usize = item
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("invalid vertex `{}`", item.trim())))?;
            set.insert(v);
        }
        Ok(set)
    }
}

/// Bit tricks on single-word sets.
pub(crate) mod mask {
    pub fn bits(mut m: u64) -> impl Iterator<Item = usize> {
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let b = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(b)
            }
        })
    }

    pub fn bit(v: usize) -> u64 {
        1u64 << v
    }

    pub fn full(n: usize) -> u64 {
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_after_removal() {
        let mut a = VertexSet::from([3, 130]);
        a.remove(130);
        assert_eq!(a, VertexSet::singleton(3));
        assert_eq!(a.as_mask(), Some(8));
    }

    #[test]
    fn large_sets_spill() {
        let a = VertexSet::from([1, 64, 200]);
        assert_eq!(a.as_mask(), None);
        assert_eq!(a.to_vec(), vec![1, 64, 200]);
        assert_eq!(a.last(), Some(200));
        assert_eq!(VertexSet::full(65).len(), 65);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from([0, 1, 2, 70]);
        let b = VertexSet::from([1, 70, 71]);
        assert_eq!(&a & &b, VertexSet::from([1, 70]));
        assert_eq!(&a | &b, VertexSet::from([0, 1, 2, 70, 71]));
        assert_eq!(&a - &b, VertexSet::from([0, 2]));
        assert!(VertexSet::from([1, 70]).is_subset(&a));
        assert!(!b.is_subset(&a));
    }

    #[test]
    fn lexicographic_order() {
        let mut v = [
            VertexSet::from([1]),
            VertexSet::from([0, 2]),
            VertexSet::from([0, 1]),
            VertexSet::from([0]),
        ];
        v.sort();
        assert_eq!(
            v.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            ["{0}", "{0,1}", "{0,2}", "{1}"]
        );
    }

    #[test]
    fn text_round_trip() {
        let a = VertexSet::from([0, 5, 9]);
        assert_eq!(a.to_string(), "{0,5,9}");
        assert_eq!(a.to_string().parse::<VertexSet>().unwrap(), a);
        assert_eq!("{ }".parse::<VertexSet>().unwrap(), VertexSet::new());
        assert!("0,1".parse::<VertexSet>().is_err());
    }
}
