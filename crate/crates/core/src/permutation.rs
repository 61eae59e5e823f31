//! One-line permutations of `1..=n`.
//!
//! Covers the right weak Bruhat order (through left inversion sets), Knuth
//! and dual Knuth moves, segment restriction with standardization, the two
//! word involutions behind tableau transpose and evacuation, and shuffles.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest size accepted by [`Permutation::new`]. Enumeration over `S_n` is
/// the bottleneck everywhere else, so nothing above this is useful.
pub const MAX_N: usize = 10;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation {
    word: Vec<u8>,
}

/// Left inversion set: pairs `(i, j)` of values with `i < j` where `j`
/// appears before `i` in the word.
pub type InversionSet = BTreeSet<(u8, u8)>;

/// A subset of `{1, .., n-1}` stored as a bitmask (bit `i` means `i` is in
/// the set).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentSet(u32);

impl DescentSet {
    pub fn empty() -> Self {
        DescentSet(0)
    }

    pub fn from_bits(bits: u32) -> Self {
        DescentSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn is_subset(self, other: DescentSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.0 & (1 << i) != 0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for DescentSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = DescentSet::empty();
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl fmt::Debug for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Permutation {
    /// Validates that `word` is a bijection on `1..=word.len()`.
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        if n == 0 || n > MAX_N {
            return Err(Error::SizeOutOfRange {
                n,
                min: 1,
                max: MAX_N,
            });
        }
        let mut seen = [false; MAX_N + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("value {v} out of range"),
                });
            }
            if seen[v] {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation::from_word_unchecked((1..=n as u8).collect())
    }

    /// The longest element `n n-1 .. 1`.
    pub fn longest(n: usize) -> Self {
        Permutation::from_word_unchecked((1..=n as u8).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.word
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(p, &v)| v as usize == p + 1)
    }

    /// 0-based position of each value; `positions()[v]` is the position of
    /// `v`, index 0 unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len() + 1];
        for (p, &v) in self.word.iter().enumerate() {
            pos[v as usize] = p;
        }
        pos
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.len()];
        for (p, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = (p + 1) as u8;
        }
        Permutation { word: inv }
    }

    pub fn inversions_left(&self) -> InversionSet {
        let pos = self.positions();
        let n = self.len() as u8;
        let mut set = InversionSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if pos[i as usize] > pos[j as usize] {
                    set.insert((i, j));
                }
            }
        }
        set
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right weak order: `self <= other` iff the left inversion set of
    /// `self` is contained in that of `other`.
    pub fn weak_leq(&self, other: &Permutation) -> Result<bool> {
        self.check_same_size(other)?;
        let pos_u = self.positions();
        let pos_w = other.positions();
        let n = self.len();
        for i in 1..=n {
            for j in i + 1..=n {
                if pos_u[i] > pos_u[j] && pos_w[i] < pos_w[j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Upper covers in the right weak order: swap each adjacent ascent.
    pub fn weak_covers(&self) -> Vec<Permutation> {
        self.ascent_positions()
            .map(|p| self.swap_positions(p))
            .collect()
    }

    /// 0-based positions `p` with `word[p] < word[p + 1]`.
    pub fn ascent_positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len().saturating_sub(1)).filter(|&p| self.word[p] < self.word[p + 1])
    }

    /// Right multiplication by the adjacent transposition at 0-based
    /// position `p`.
    pub fn swap_positions(&self, p: usize) -> Permutation {
        let mut word = self.word.clone();
        word.swap(p, p + 1);
        Permutation { word }
    }

    /// `{ i : i+1 appears before i }`.
    pub fn descents_left(&self) -> DescentSet {
        let pos = self.positions();
        (1..self.len()).filter(|&i| pos[i] > pos[i + 1]).collect()
    }

    /// Subword of letters in `[i, j]`, each lowered by `i - 1`.
    pub fn restrict_standardize(&self, i: usize, j: usize) -> Result<Permutation> {
        let n = self.len();
        if i < 1 || i >= j || j > n {
            return Err(Error::InvalidSegment { i, j, n });
        }
        let word = self
            .word
            .iter()
            .filter(|&&v| (i..=j).contains(&(v as usize)))
            .map(|&v| v - (i as u8 - 1))
            .collect();
        Ok(Permutation { word })
    }

    /// All words one Knuth relation away. In a window `a b c` of adjacent
    /// letters, the relation `yxz <-> yzx` swaps `b, c` when `a` is the
    /// median of the three, and `xzy <-> zxy` swaps `a, b` when `c` is.
    pub fn knuth_neighbors(&self) -> Vec<Permutation> {
        let w = &self.word;
        let mut out = Vec::new();
        for p in 0..w.len().saturating_sub(2) {
            let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
            if is_median(a, b, c) {
                out.push(self.swap_positions(p + 1));
            }
            if is_median(c, a, b) {
                out.push(self.swap_positions(p));
            }
        }
        out
    }

    /// Words one dual Knuth relation away, computed as inverses of the Knuth
    /// neighbors of the inverse.
    pub fn dual_knuth_neighbors(&self) -> Vec<Permutation> {
        self.inverse()
            .knuth_neighbors()
            .into_iter()
            .map(|v| v.inverse())
            .collect()
    }

    /// Reversal; inserts to the transpose tableau.
    pub fn transpose_word(&self) -> Permutation {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { word }
    }

    /// Reverse-complement; inserts to the evacuated tableau.
    pub fn evac_word(&self) -> Permutation {
        let n1 = self.len() as u8 + 1;
        let word = self.word.iter().rev().map(|&v| n1 - v).collect();
        Permutation { word }
    }

    /// Lexicographic rank within `S_n`, starting at 0.
    pub fn rank(&self) -> usize {
        let n = self.len();
        let mut rank = 0;
        for p in 0..n {
            let smaller_later = self.word[p + 1..]
                .iter()
                .filter(|&&v| v < self.word[p])
                .count();
            rank = rank * (n - p) + smaller_later;
        }
        rank
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Permutations {
        Permutations {
            next: Some((1..=n as u8).collect()),
        }
    }

    fn check_same_size(&self, other: &Permutation) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }
}

fn is_median(m: u8, x: u8, y: u8) -> bool {
    (x < m && m < y) || (y < m && m < x)
}

/// Lexicographic enumeration of `S_n`.
pub struct Permutations {
    next: Option<Vec<u8>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.clone();
        if let Some(p) = (0..w.len().saturating_sub(1)).rev().find(|&p| w[p] < w[p + 1]) {
            let q = (p + 1..w.len()).rev().find(|&q| w[q] > w[p]).unwrap();
            w.swap(p, q);
            w[p + 1..].reverse();
            self.next = Some(w);
        }
        Some(Permutation { word: current })
    }
}

/// Every interleaving of `u` with `w` shifted up by `u.len()`, in the
/// lexicographic order of the positions taken by `u`. The alphabets are
/// disjoint so the words are distinct, but the result is a multiset by
/// contract.
pub fn shuffle(u: &Permutation, w: &Permutation) -> Vec<Permutation> {
    let k = u.len();
    let shift = k as u8;
    let shifted: Vec<u8> = w.word.iter().map(|&v| v + shift).collect();
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(k + shifted.len());
    interleave(&u.word, &shifted, &mut buf, &mut out);
    out
}

fn interleave(a: &[u8], b: &[u8], buf: &mut Vec<u8>, out: &mut Vec<Permutation>) {
    if a.is_empty() || b.is_empty() {
        let mut word = buf.clone();
        word.extend_from_slice(a);
        word.extend_from_slice(b);
        out.push(Permutation { word });
        return;
    }
    buf.push(a[0]);
    interleave(&a[1..], b, buf, out);
    buf.pop();
    buf.push(b[0]);
    interleave(a, &b[1..], buf, out);
    buf.pop();
}

impl fmt::Display for Permutation {
    /// Compact digits for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(u8::to_string).collect();
            write!(f, "{}", parts.join(","))
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

    /// Accepts `"5,2,4,1,3"` or, for `n <= 9`, `"52413"`. Parse errors carry
    /// a 1-based character position.
    fn from_str(s: &str) -> Result<Self> {
        let word = if s.contains(',') {
            parse_number_list(s, ',')?
        } else {
            let mut word = Vec::with_capacity(s.len());
            for (idx, ch) in s.chars().enumerate() {
                match ch.to_digit(10) {
                    Some(d) => word.push(d as u8),
                    None => {
                        return Err(Error::Parse {
                            position: idx + 1,
                            message: format!("unexpected character {ch:?} in permutation"),
                        })
                    }
                }
            }
            if word.is_empty() {
                return Err(Error::Parse {
                    position: 1,
                    message: "empty permutation".into(),
                });
            }
            word
        };
        Permutation::new(word)
    }
}

/// Parses `sep`-separated positive integers, reporting 1-based character
/// positions (relative to `s`) on failure.
pub(crate) fn parse_number_list(s: &str, sep: char) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in s.split(sep) {
        let trimmed = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        match trimmed.parse::<u8>() {
            Ok(v) => out.push(v),
            Err(_) => {
                return Err(Error::Parse {
                    position: offset + lead + 1,
                    message: format!("expected a number, found {trimmed:?}"),
                })
            }
        }
        offset += piece.len() + sep.len_utf8();
    }
    Ok(out)
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<u8>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Vec<u8> {
        p.word
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(words: &[&str]) -> BTreeSet<Permutation> {
        words.iter().map(|w| p(w)).collect()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("52413"), p("5,2,4,1,3"));
        assert_eq!(p("52413").to_string(), "52413");
        let ten = Permutation::longest(10);
        assert_eq!(ten.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(ten.to_string().parse::<Permutation>().unwrap(), ten);
    }

    #[test]
    fn parse_errors_report_position() {
        match "52x13".parse::<Permutation>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        match "5,2,,1".parse::<Permutation>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            "1223".parse::<Permutation>(),
            Err(Error::InvalidPermutation { .. })
        ));
        assert!(matches!(
            "".parse::<Permutation>(),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn inversions() {
        assert!(p("123").inversions_left().is_empty());
        let expected: InversionSet = [(1, 2), (1, 3)].into_iter().collect();
        assert_eq!(p("231").inversions_left(), expected);
        assert_eq!(p("321").inversions_left().len(), 3);
    }

    #[test]
    fn weak_order_examples() {
        assert!(p("34125").weak_leq(&p("34215")).unwrap());
        assert!(p("213").weak_leq(&p("213")).unwrap());
        assert!(!p("213").weak_leq(&p("312")).unwrap());
        assert!(!p("312").weak_leq(&p("213")).unwrap());
        assert!(matches!(
            p("12").weak_leq(&p("123")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn covers() {
        let up: BTreeSet<_> = p("123").weak_covers().into_iter().collect();
        assert_eq!(up, set(&["213", "132"]));
        assert!(p("321").weak_covers().is_empty());
        let up = p("34125").weak_covers();
        assert!(up.contains(&p("34215")));
        for w in &up {
            assert_eq!(w.length(), p("34125").length() + 1);
        }
    }

    #[test]
    fn descents() {
        assert!(p("12345").descents_left().is_empty());
        assert_eq!(p("213").descents_left().to_vec(), vec![1]);
    }

    #[test]
    fn restriction() {
        assert_eq!(p("52413").restrict_standardize(2, 5).unwrap(), p("4132"));
        assert_eq!(p("52413").restrict_standardize(1, 5).unwrap(), p("52413"));
        assert_eq!(p("52413").restrict_standardize(1, 2).unwrap(), p("21"));
        assert!(p("52413").restrict_standardize(3, 3).is_err());
        assert!(p("52413").restrict_standardize(0, 3).is_err());
        assert!(p("52413").restrict_standardize(2, 6).is_err());
    }

    #[test]
    fn knuth_moves() {
        assert_eq!(p("213").knuth_neighbors(), vec![p("231")]);
        assert!(p("123").knuth_neighbors().is_empty());
        assert!(p("31425").knuth_neighbors().contains(&p("34125")));
    }

    #[test]
    fn dual_knuth_moves() {
        assert_eq!(p("213").dual_knuth_neighbors(), vec![p("312")]);
    }

    #[test]
    fn word_involutions() {
        assert_eq!(p("52413").evac_word(), p("35241"));
        assert_eq!(Permutation::identity(4).transpose_word(), p("4321"));
        assert_eq!(p("52413").transpose_word().transpose_word(), p("52413"));
    }

    #[test]
    fn shuffles() {
        let one = p("1");
        assert_eq!(shuffle(&one, &one).into_iter().collect::<BTreeSet<_>>(), set(&["12", "21"]));
        // 54 is 21 shifted by three
        let words = shuffle(&p("312"), &p("21"));
        assert_eq!(words.len(), 10);
        assert!(words.contains(&p("31254")));
        assert!(words.contains(&p("53124")));
        let distinct: BTreeSet<_> = words.iter().cloned().collect();
        assert_eq!(distinct.len(), 10);
    }

    #[test]
    fn enumeration_and_rank() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        for (r, u) in all.iter().enumerate() {
            assert_eq!(u.rank(), r);
        }
        assert_eq!(Permutation::all(1).count(), 1);
    }

    #[test]
    fn length_extremes() {
        for n in 1..=6 {
            for u in Permutation::all(n) {
                let len = u.inversions_left().len();
                assert_eq!(len, u.length());
                assert_eq!(len == 0, u.is_identity());
                assert_eq!(len == n * (n - 1) / 2, u == Permutation::longest(n));
            }
        }
    }

    #[test]
    fn weak_order_is_a_partial_order() {
        for n in 1..=5 {
            let all: Vec<_> = Permutation::all(n).collect();
            for a in &all {
                assert!(a.weak_leq(a).unwrap());
                for b in &all {
                    let ab = a.weak_leq(b).unwrap();
                    if ab && b.weak_leq(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    if !ab {
                        continue;
                    }
                    for c in &all {
                        if b.weak_leq(c).unwrap() {
                            assert!(a.weak_leq(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_preserves_weak_order() {
        for n in 2..=6 {
            let all: Vec<_> = Permutation::all(n).collect();
            for u in &all {
                for w in u.weak_covers() {
                    for i in 1..n {
                        for j in i + 1..=n {
                            let a = u.restrict_standardize(i, j).unwrap();
                            let b = w.restrict_standardize(i, j).unwrap();
                            assert!(a.weak_leq(&b).unwrap(), "{u} {w} [{i},{j}]");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn knuth_neighbors_are_symmetric() {
        for n in 1..=6 {
            for u in Permutation::all(n) {
                for v in u.knuth_neighbors() {
                    assert!(v.knuth_neighbors().contains(&u));
                }
                for v in u.dual_knuth_neighbors() {
                    assert!(v.dual_knuth_neighbors().contains(&u));
                }
            }
        }
    }
}
