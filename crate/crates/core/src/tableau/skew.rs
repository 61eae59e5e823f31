//! Skew tableaux and jeu de taquin.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Cell, Shape, Tableau};
use crate::error::{Error, Result};

/// Direction of a jeu de taquin slide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SlideDirection {
    /// The hole starts at a corner of the inner shape and moves out: it
    /// takes the smaller of its right and lower neighbours until it leaves
    /// the outer shape.
    Forward,
    /// The hole starts at a cell addable to the outer shape and moves in: it
    /// takes the larger of its left and upper neighbours until it joins the
    /// inner shape.
    Backward,
}

impl FromStr for SlideDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "forward" => Ok(SlideDirection::Forward),
            "backward" => Ok(SlideDirection::Backward),
            _ => Err(Error::Parse {
                position: 1,
                message: format!("expected forward or backward, found {s:?}"),
            }),
        }
    }
}

/// A partial skew tableau on `outer / inner`: distinct entries on the cells
/// of `outer` not in `inner`, rows and columns increasing.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SkewRepr", into = "SkewRepr")]
pub struct SkewTableau {
    inner: Shape,
    rows: Vec<Vec<Option<u8>>>,
}

#[derive(Serialize, Deserialize)]
struct SkewRepr {
    inner: Vec<usize>,
    rows: Vec<Vec<Option<u8>>>,
}

impl TryFrom<SkewRepr> for SkewTableau {
    type Error = Error;

    fn try_from(r: SkewRepr) -> Result<Self> {
        SkewTableau::new(Shape::new(r.inner)?, r.rows)
    }
}

impl From<SkewTableau> for SkewRepr {
    fn from(s: SkewTableau) -> Self {
        SkewRepr {
            inner: s.inner.0,
            rows: s.rows,
        }
    }
}

impl SkewTableau {
    /// `rows[r]` spans the whole outer row; the first `inner[r]` cells must
    /// be `None` and the rest `Some`.
    pub fn new(inner: Shape, rows: Vec<Vec<Option<u8>>>) -> Result<Self> {
        let mut rows = rows;
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        let outer = Shape::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(format!("outer shape: {e}")))?;
        if !outer.contains_shape(&inner) {
            return Err(Error::InvalidShape(format!("{inner} is not inside {outer}")));
        }
        let skew = SkewTableau { inner, rows };
        let mut seen = BTreeSet::new();
        for (r, row) in skew.rows.iter().enumerate() {
            let gap = skew.inner.row_len(r + 1);
            for (c, v) in row.iter().enumerate() {
                match (c < gap, v) {
                    (true, None) => {}
                    (false, Some(x)) => {
                        if *x == 0 || !seen.insert(*x) {
                            return Err(Error::InvalidTableau(format!(
                                "{skew}: entry {x} zero or repeated"
                            )));
                        }
                    }
                    _ => {
                        return Err(Error::InvalidTableau(format!(
                            "{skew}: empty cells must be exactly the inner shape"
                        )))
                    }
                }
            }
        }
        for r in 0..skew.rows.len() {
            for c in 0..skew.rows[r].len() {
                let Some(v) = skew.rows[r][c] else { continue };
                let left = if c > 0 { skew.rows[r][c - 1] } else { None };
                let above = if r > 0 { skew.rows[r - 1][c] } else { None };
                if left.is_some_and(|x| x >= v) || above.is_some_and(|x| x >= v) {
                    return Err(Error::InvalidTableau(format!(
                        "{skew}: rows and columns must increase"
                    )));
                }
            }
        }
        Ok(skew)
    }

    pub fn from_tableau(t: &Tableau) -> Self {
        SkewTableau {
            inner: Shape::empty(),
            rows: t
                .rows()
                .iter()
                .map(|r| r.iter().map(|&v| Some(v)).collect())
                .collect(),
        }
    }

    /// Entries of `t` in `[i, j]`: the outer shape holds entries `<= j`,
    /// the inner shape entries `< i`.
    pub(crate) fn segment(t: &Tableau, i: usize, j: usize) -> Self {
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for row in t.rows() {
            let outer_len = row.iter().take_while(|&&v| (v as usize) <= j).count();
            let inner_len = row.iter().take_while(|&&v| (v as usize) < i).count();
            if outer_len == 0 {
                break;
            }
            if inner_len > 0 {
                inner.push(inner_len);
            }
            rows.push(
                row[..outer_len]
                    .iter()
                    .enumerate()
                    .map(|(c, &v)| (c >= inner_len).then_some(v))
                    .collect(),
            );
        }
        SkewTableau {
            inner: Shape(inner),
            rows,
        }
    }

    pub fn inner(&self) -> &Shape {
        &self.inner
    }

    pub fn outer(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn rows(&self) -> &[Vec<Option<u8>>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Option<u8> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        *self.rows.get(cell.row - 1)?.get(cell.col - 1)?
    }

    pub fn is_normal(&self) -> bool {
        self.inner.num_rows() == 0
    }

    /// Corners of the inner shape: the valid starting cells of a forward
    /// slide, top to bottom.
    pub fn inner_corners(&self) -> Vec<Cell> {
        self.inner.corners()
    }

    /// Cells addable to the outer shape: the valid starting cells of a
    /// backward slide, top to bottom.
    pub fn outer_addable(&self) -> Vec<Cell> {
        self.outer().addable()
    }

    pub fn slide(&self, hole: Cell, direction: SlideDirection) -> Result<SkewTableau> {
        Ok(self.slide_traced(hole, direction)?.0)
    }

    /// The slide together with the cells the hole passes through, starting
    /// at `hole`.
    pub fn slide_traced(
        &self,
        hole: Cell,
        direction: SlideDirection,
    ) -> Result<(SkewTableau, Vec<Cell>)> {
        let mut path = Vec::new();
        let out = match direction {
            SlideDirection::Forward => self.slide_forward(hole, &mut path),
            SlideDirection::Backward => self.slide_backward(hole, &mut path),
        }?;
        Ok((out, path))
    }

    fn slide_forward(&self, hole: Cell, path: &mut Vec<Cell>) -> Result<SkewTableau> {
        if !self.inner.corners().contains(&hole) {
            return Err(Error::InvalidCell {
                row: hole.row,
                col: hole.col,
                expected: "corner of the inner shape",
            });
        }
        let mut rows = self.rows.clone();
        let (mut r, mut c) = (hole.row - 1, hole.col - 1);
        loop {
            path.push(Cell::new(r + 1, c + 1));
            let right = rows[r].get(c + 1).copied().flatten();
            let below = rows.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
            let next = match (right, below) {
                (Some(a), Some(b)) if b < a => (r + 1, c),
                (Some(_), _) => (r, c + 1),
                (None, Some(_)) => (r + 1, c),
                (None, None) => break,
            };
            rows[r][c] = rows[next.0][next.1];
            rows[next.0][next.1] = None;
            (r, c) = next;
        }
        rows[r].pop();
        let mut inner = self.inner.0.clone();
        inner[hole.row - 1] -= 1;
        Ok(SkewTableau::trimmed(inner, rows))
    }

    fn slide_backward(&self, hole: Cell, path: &mut Vec<Cell>) -> Result<SkewTableau> {
        if !self.outer().addable().contains(&hole) {
            return Err(Error::InvalidCell {
                row: hole.row,
                col: hole.col,
                expected: "cell addable to the outer shape",
            });
        }
        let mut rows = self.rows.clone();
        if hole.row > rows.len() {
            rows.push(Vec::new());
        }
        rows[hole.row - 1].push(None);
        let (mut r, mut c) = (hole.row - 1, hole.col - 1);
        loop {
            path.push(Cell::new(r + 1, c + 1));
            let left = if c > 0 { rows[r][c - 1] } else { None };
            let above = if r > 0 { rows[r - 1][c] } else { None };
            let next = match (left, above) {
                (Some(a), Some(b)) if b > a => (r - 1, c),
                (Some(_), _) => (r, c - 1),
                (None, Some(_)) => (r - 1, c),
                (None, None) => break,
            };
            rows[r][c] = rows[next.0][next.1];
            rows[next.0][next.1] = None;
            (r, c) = next;
        }
        let mut inner = self.inner.0.clone();
        if r == inner.len() {
            inner.push(0);
        }
        inner[r] += 1;
        debug_assert_eq!(inner[r], c + 1);
        Ok(SkewTableau::trimmed(inner, rows))
    }

    fn trimmed(inner: Vec<usize>, mut rows: Vec<Vec<Option<u8>>>) -> SkewTableau {
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        let inner = Shape(inner.into_iter().filter(|&p| p > 0).collect());
        SkewTableau { inner, rows }
    }

    /// Forward slides into the top-most inner corner until the shape is
    /// normal.
    pub fn rectify(&self) -> Tableau {
        let mut cur = self.clone();
        while let Some(&corner) = cur.inner.corners().first() {
            cur = cur.slide_forward(corner, &mut Vec::new()).expect("inner corner is a valid hole");
        }
        cur.into_tableau()
            .expect("rectification yields a normal shape")
    }

    /// The underlying tableau when the inner shape is empty.
    pub fn into_tableau(self) -> Option<Tableau> {
        if !self.is_normal() {
            return None;
        }
        let rows = self
            .rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| v.expect("normal shape is full")).collect())
            .collect();
        Some(Tableau::from_rows_unchecked(rows))
    }
}

impl fmt::Display for SkewTableau {
    /// Like the tableau form, with `.` for inner cells: `".,.,4/.,2,5/1,3"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, "/")?;
            }
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                match v {
                    Some(x) => write!(f, "{x}")?,
                    None => write!(f, ".")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewTableau({self})")
    }
}

impl FromStr for SkewTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut inner = Vec::new();
        let mut offset = 0;
        for piece in s.split('/') {
            let mut row = Vec::new();
            let mut col_offset = offset;
            for token in piece.split(',') {
                let trimmed = token.trim();
                if trimmed == "." {
                    if row.iter().any(Option::is_some) {
                        return Err(Error::Parse {
                            position: col_offset + 1,
                            message: "empty cell after a filled one".into(),
                        });
                    }
                    row.push(None);
                } else {
                    match trimmed.parse::<u8>() {
                        Ok(v) => row.push(Some(v)),
                        Err(_) => {
                            return Err(Error::Parse {
                                position: col_offset + 1,
                                message: format!("expected a number or '.', found {trimmed:?}"),
                            })
                        }
                    }
                }
                col_offset += token.len() + 1;
            }
            let gap = row.iter().take_while(|v| v.is_none()).count();
            if gap > 0 {
                inner.push(gap);
            }
            rows.push(row);
            offset += piece.len() + 1;
        }
        let inner = Shape::new(inner)?;
        SkewTableau::new(inner, rows)
    }
}
