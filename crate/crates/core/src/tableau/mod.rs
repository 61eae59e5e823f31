//! Young diagrams and tableaux.
//!
//! A [`Tableau`] is a filling of a Ferrers diagram by distinct positive
//! integers increasing along rows and down columns. Most tableaux here are
//! standard (entries exactly `1..=n`); intermediate results of reverse
//! insertion and slides may hold any set of distinct entries, and
//! [`Tableau::is_standard`] tells them apart. Cells are 1-based, row from
//! the top and column from the left.

mod skew;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::{parse_number_list, DescentSet, Permutation};

pub use skew::{SkewTableau, SlideDirection};

/// A partition, stored as weakly decreasing positive parts. The empty
/// partition is allowed.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Shape(parts))
    }

    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of cells.
    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn num_cols(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Row length, 0 past the last row. `row` is 1-based.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// `(a, 1, .., 1)`, including a single row or column.
    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    pub fn transpose(&self) -> Shape {
        let cols = self.num_cols();
        Shape((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// Removable cells, top to bottom.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.num_rows())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Cell::new(r, self.row_len(r)))
            .collect()
    }

    /// Cells that can be added keeping a partition, top to bottom.
    pub fn addable(&self) -> Vec<Cell> {
        (1..=self.num_rows() + 1)
            .filter(|&r| r == 1 || self.row_len(r - 1) > self.row_len(r))
            .map(|r| Cell::new(r, self.row_len(r) + 1))
            .collect()
    }

    pub fn contains_shape(&self, inner: &Shape) -> bool {
        inner.num_rows() <= self.num_rows()
            && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, ordered lexicographically on parts.
    pub fn partitions(n: usize) -> Vec<Shape> {
        fn go(rest: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if rest == 0 {
                out.push(Shape(acc.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                acc.push(p);
                go(rest - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

/// Dominance order: prefix sums of `a` never exceed those of `b`.
pub fn dominance_leq(a: &Shape, b: &Shape) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let rows = a.num_rows().max(b.num_rows());
    let (mut sa, mut sb) = (0, 0);
    for r in 1..=rows {
        sa += a.row_len(r);
        sb += b.row_len(r);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Shape::new(parts)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Vec<usize> {
        s.0
    }
}

/// A 1-based cell position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl FromStr for Cell {
    type Err = Error;

    /// `"row,col"`, optionally parenthesized.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = parse_number_list(inner, ',')?;
        match parts.as_slice() {
            &[r, c] if r >= 1 && c >= 1 => Ok(Cell::new(r as usize, c as usize)),
            _ => Err(Error::Parse {
                position: 1,
                message: format!("expected a cell \"row,col\" with both >= 1, found {s:?}"),
            }),
        }
    }
}

/// A Young tableau with distinct positive entries.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    rows: Vec<Vec<u8>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    rows: Vec<Vec<u8>>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;

    fn try_from(r: TableauRepr) -> Result<Self> {
        Tableau::new(r.rows)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr { rows: t.rows }
    }
}

impl Tableau {
    /// A standard tableau: entries exactly `1..=n`, rows and columns
    /// strictly increasing.
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let t = Tableau::partial(rows)?;
        if !t.is_standard() {
            return Err(Error::InvalidTableau(format!(
                "entries of {t} are not exactly 1..{}",
                t.n()
            )));
        }
        Ok(t)
    }

    /// Any distinct positive entries, rows and columns strictly increasing.
    pub fn partial(rows: Vec<Vec<u8>>) -> Result<Self> {
        let rows: Vec<Vec<u8>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let t = Tableau { rows };
        if t.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidTableau(format!("{t}: row lengths increase")));
        }
        for (r, row) in t.rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::InvalidTableau(format!("{t}: zero entry")));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("{t}: row {} not increasing", r + 1)));
            }
            if r > 0 {
                let above = &t.rows[r - 1];
                if row.iter().zip(above).any(|(b, a)| a >= b) {
                    return Err(Error::InvalidTableau(format!(
                        "{t}: column not increasing below row {r}"
                    )));
                }
            }
        }
        let mut all: Vec<u8> = t.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidTableau(format!("{t}: repeated entry")));
        }
        Ok(t)
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u8>>) -> Self {
        Tableau { rows }
    }

    pub fn is_standard(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Number of cells.
    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn get(&self, cell: Cell) -> Option<u8> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - 1).copied()
    }

    pub fn cell_of(&self, value: u8) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter()
                .position(|&v| v == value)
                .map(|c| Cell::new(r + 1, c + 1))
        })
    }

    /// 1-based row of every entry of a standard tableau, indexed by value.
    fn row_index(&self) -> Vec<usize> {
        let mut rows = vec![0; self.n() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                rows[v as usize] = r + 1;
            }
        }
        rows
    }

    /// Entries read row by row from the bottom row up, each left to right.
    pub fn reading_word(&self) -> Vec<u8> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// The reading word as a permutation; it inserts back to `self`.
    ///
    /// Panics if the tableau is not standard.
    pub fn row_word(&self) -> Permutation {
        Permutation::new(self.reading_word()).expect("row word of a non-standard tableau")
    }

    pub fn corners(&self) -> Vec<Cell> {
        self.shape().corners()
    }

    /// Row-inserts `x`, returning the new tableau and the cell it added.
    pub fn insert(&self, x: u8) -> (Tableau, Cell) {
        let mut rows = self.rows.clone();
        let cell = row_insert(&mut rows, x);
        (Tableau { rows }, cell)
    }

    /// Reverse bumping from a corner: the corner entry moves up, replacing
    /// the largest smaller entry in each row above, and the entry displaced
    /// from the first row leaves. Returns the shrunken tableau and the
    /// ejected value.
    pub fn reverse_insert(&self, corner: Cell) -> Result<(Tableau, u8)> {
        if !self.shape().corners().contains(&corner) {
            return Err(Error::InvalidCell {
                row: corner.row,
                col: corner.col,
                expected: "corner cell",
            });
        }
        let mut rows = self.rows.clone();
        let mut x = rows[corner.row - 1].pop().expect("corner row is non-empty");
        if rows[corner.row - 1].is_empty() {
            rows.pop();
        }
        for r in (0..corner.row - 1).rev() {
            let row = &mut rows[r];
            let p = row.partition_point(|&v| v < x) - 1;
            std::mem::swap(&mut row[p], &mut x);
        }
        Ok((Tableau { rows }, x))
    }

    pub fn transpose(&self) -> Tableau {
        let cols = self.shape().num_cols();
        let rows = (0..cols)
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect();
        Tableau { rows }
    }

    /// Schützenberger evacuation, through the reverse-complement of a word
    /// in the Knuth class.
    pub fn evacuate(&self) -> Tableau {
        rsk(&self.row_word().evac_word()).0
    }

    /// `{ i : i+1 lies in a lower row than i }`.
    pub fn descent_set(&self) -> DescentSet {
        let rows = self.row_index();
        (1..self.n()).filter(|&i| rows[i + 1] > rows[i]).collect()
    }

    /// The sub-tableau of entries `<= k`. Equal to `restrict(1, k)` since
    /// those entries already occupy a normal shape.
    pub fn inner_tableau(&self, k: usize) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&v| (v as usize) <= k).collect())
            .collect();
        Tableau::partial_trimmed(rows)
    }

    fn partial_trimmed(rows: Vec<Vec<u8>>) -> Tableau {
        Tableau {
            rows: rows.into_iter().filter(|r: &Vec<u8>| !r.is_empty()).collect(),
        }
    }

    /// Keeps entries in `[i, j]`, rectifies by jeu de taquin and subtracts
    /// `i - 1`.
    pub fn restrict(&self, i: usize, j: usize) -> Result<Tableau> {
        let n = self.n();
        if i < 1 || i >= j || j > n {
            return Err(Error::InvalidSegment { i, j, n });
        }
        let skew = SkewTableau::segment(self, i, j);
        let rect = skew.rectify();
        let shift = (i - 1) as u8;
        let rows = rect
            .rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| v - shift).collect())
            .collect();
        Ok(Tableau { rows })
    }

    /// Action of the single dual Knuth relation on `{i, i+1, i+2}`.
    ///
    /// Defined when exactly one of `i`, `i+1` is a descent. Of the three
    /// entries, the one read second in the row reading word decides the
    /// swap: if it is `i`, swap `i+1` and `i+2`; if it is `i+2`, swap `i`
    /// and `i+1`.
    pub fn dual_knuth_move(&self, i: usize) -> Result<Tableau> {
        let n = self.n();
        if i < 1 || i + 2 > n {
            return Err(Error::DualKnuthDomain { i });
        }
        let des = self.descent_set();
        if des.contains(i) == des.contains(i + 1) {
            return Err(Error::DualKnuthDomain { i });
        }
        let word = self.reading_word();
        let pos = |v: usize| word.iter().position(|&x| x as usize == v).unwrap();
        let mut trio = [(pos(i), i), (pos(i + 1), i + 1), (pos(i + 2), i + 2)];
        trio.sort_unstable();
        let (a, b) = match trio[1].1 {
            m if m == i => (i + 1, i + 2),
            m if m == i + 2 => (i, i + 1),
            _ => unreachable!("descent condition rules out i+1 in the middle"),
        };
        Ok(self.swap_values(a as u8, b as u8))
    }

    fn swap_values(&self, a: u8, b: u8) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| if v == a { b } else if v == b { a } else { v })
                    .collect()
            })
            .collect();
        Tableau { rows }
    }

    /// Replaces the inner tableau `inner` (entries `1..=k`) by the
    /// same-shape `target`, leaving entries above `k` in place.
    pub fn inner_translate(&self, inner: &Tableau, target: &Tableau) -> Result<Tableau> {
        if inner.shape() != target.shape() {
            return Err(Error::InvalidShape(format!(
                "{} and {} differ in shape",
                inner, target
            )));
        }
        let k = inner.n();
        if k > self.n() || self.inner_tableau(k) != *inner {
            return Err(Error::NotInnerTableau {
                tableau: self.to_string(),
                inner: inner.to_string(),
            });
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, &v)| {
                        if (v as usize) <= k {
                            target.rows[r][c]
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Tableau { rows })
    }

    /// `S/T`: the columns of `T` shifted by `|S|` stacked below those of `S`.
    pub fn over(s: &Tableau, t: &Tableau) -> Tableau {
        Tableau::beside(&s.transpose(), &t.transpose()).transpose()
    }

    /// `S\T`: the rows of `T` shifted by `|S|` appended to the right of
    /// those of `S`.
    pub fn beside(s: &Tableau, t: &Tableau) -> Tableau {
        let shift = s.n() as u8;
        let len = s.rows.len().max(t.rows.len());
        let rows = (0..len)
            .map(|r| {
                let mut row = s.rows.get(r).cloned().unwrap_or_default();
                if let Some(tr) = t.rows.get(r) {
                    row.extend(tr.iter().map(|&v| v + shift));
                }
                row
            })
            .collect();
        let out = Tableau { rows };
        debug_assert!(Tableau::partial(out.rows.clone()).is_ok());
        out
    }

    /// All standard tableaux of the given shape, in canonical order.
    pub fn all_of_shape(shape: &Shape) -> Vec<Tableau> {
        let mut out = Vec::new();
        let mut rows: Vec<Vec<u8>> = vec![Vec::new(); shape.num_rows()];
        fill_shape(shape, &mut rows, 1, &mut out);
        out.sort();
        out
    }

    /// All of `SYT_n`, in canonical order: by shape (lexicographic on
    /// parts), then by row word.
    pub fn all(n: usize) -> Vec<Tableau> {
        Shape::partitions(n)
            .iter()
            .flat_map(Tableau::all_of_shape)
            .collect()
    }
}

fn fill_shape(shape: &Shape, rows: &mut [Vec<u8>], next: u8, out: &mut Vec<Tableau>) {
    if next as usize > shape.n() {
        out.push(Tableau { rows: rows.to_vec() });
        return;
    }
    for r in 0..rows.len() {
        let len = rows[r].len();
        let fits_row = len < shape.parts()[r];
        let fits_col = r == 0 || rows[r - 1].len() > len;
        if fits_row && fits_col {
            rows[r].push(next);
            fill_shape(shape, rows, next + 1, out);
            rows[r].pop();
        }
    }
}

/// Row insertion into ragged rows; returns the added cell.
fn row_insert(rows: &mut Vec<Vec<u8>>, mut x: u8) -> Cell {
    for (r, row) in rows.iter_mut().enumerate() {
        let p = row.partition_point(|&v| v < x);
        if p == row.len() {
            row.push(x);
            return Cell::new(r + 1, p + 1);
        }
        std::mem::swap(&mut row[p], &mut x);
    }
    rows.push(vec![x]);
    Cell::new(rows.len(), 1)
}

/// Insertion tableau of any word of distinct letters.
pub fn insertion_tableau(word: &[u8]) -> Tableau {
    let mut rows = Vec::new();
    for &x in word {
        row_insert(&mut rows, x);
    }
    Tableau { rows }
}

/// Robinson–Schensted: the insertion and recording tableaux of `u`.
pub fn rsk(u: &Permutation) -> (Tableau, Tableau) {
    let mut ins: Vec<Vec<u8>> = Vec::new();
    let mut rec: Vec<Vec<u8>> = Vec::new();
    for (step, &x) in u.as_slice().iter().enumerate() {
        let cell = row_insert(&mut ins, x);
        if cell.row > rec.len() {
            rec.push(Vec::new());
        }
        rec[cell.row - 1].push(step as u8 + 1);
    }
    (Tableau { rows: ins }, Tableau { rows: rec })
}

/// Inverse of [`rsk`] on a same-shape standard pair.
pub fn rsk_inverse(insertion: &Tableau, recording: &Tableau) -> Result<Permutation> {
    if insertion.shape() != recording.shape() {
        return Err(Error::InvalidShape(format!(
            "{insertion} and {recording} differ in shape"
        )));
    }
    let n = insertion.n();
    let mut ins = insertion.clone();
    let mut rec = recording.clone();
    let mut word = vec![0u8; n];
    for step in (1..=n).rev() {
        let corner = rec
            .cell_of(step as u8)
            .ok_or_else(|| Error::InvalidTableau(format!("{recording} is not standard")))?;
        let (smaller, x) = ins.reverse_insert(corner)?;
        ins = smaller;
        rec.rows[corner.row - 1].pop();
        if rec.rows[corner.row - 1].is_empty() {
            rec.rows.pop();
        }
        word[step - 1] = x;
    }
    Permutation::new(word)
}

impl Ord for Tableau {
    /// Canonical order: shape first, then row word.
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape()
            .cmp(&other.shape())
            .then_with(|| self.reading_word().cmp(&other.reading_word()))
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tableau {
    /// Rows top to bottom joined by `/`, entries comma-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, "/")?;
            }
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({self})")
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Parses the `"1,3/2,4/5"` form into a standard tableau.
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut offset = 0;
        for piece in s.split('/') {
            let row = parse_number_list(piece, ',').map_err(|e| match e {
                Error::Parse { position, message } => Error::Parse {
                    position: position + offset,
                    message,
                },
                other => other,
            })?;
            rows.push(row);
            offset += piece.len() + 1;
        }
        Tableau::new(rows)
    }
}
