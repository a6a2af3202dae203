//! Partitions, skew shapes and tableaux.
//!
//! Cells are `(row, col)`, both 1-based, rows counted downward.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Cell = (usize, usize);

/// A partition stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return Err(Error::InvalidPartition(format!("{rows:?} is not weakly decreasing")));
        }
        Ok(Partition(rows))
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<usize>) -> Self {
        debug_assert!(Partition::new(rows.clone()).is_ok());
        Partition(rows)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if rows == 0 || cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `i` (1-based); zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> usize {
        self.part(1)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.0.len() <= self.0.len() && other.0.iter().zip(&self.0).all(|(b, a)| b <= a)
    }

    pub fn contains_cell(&self, (r, c): Cell) -> bool {
        r >= 1 && c >= 1 && self.part(r) >= c
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first_row();
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&x| x >= c).count()).collect())
    }

    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 1..=self.0.len() + 1 {
            let len = self.part(r);
            if r == 1 || self.part(r - 1) > len {
                out.push((r, len + 1));
            }
        }
        out
    }

    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.0.len()).filter(|&r| self.part(r) > self.part(r + 1)).map(|r| (r, self.part(r))).collect()
    }

    pub fn with_cell_added(&self, (r, c): Cell) -> Option<Partition> {
        if r == 0 || c != self.part(r) + 1 || (r > 1 && self.part(r - 1) < c) {
            return None;
        }
        let mut rows = self.0.clone();
        if r > rows.len() {
            rows.push(1);
        } else {
            rows[r - 1] += 1;
        }
        Some(Partition(rows))
    }

    pub fn with_cell_removed(&self, (r, c): Cell) -> Option<Partition> {
        if r == 0 || c == 0 || self.part(r) != c || self.part(r + 1) >= c {
            return None;
        }
        let mut rows = self.0.clone();
        rows[r - 1] -= 1;
        if rows[r - 1] == 0 {
            rows.pop();
        }
        Some(Partition(rows))
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.0.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c))).collect()
    }

    /// Cells of `self` not in `inner`, row-major.
    pub fn cells_outside(&self, inner: &Partition) -> Vec<Cell> {
        self.0.iter().enumerate().flat_map(|(r, &len)| (inner.part(r + 1) + 1..=len).map(move |c| (r + 1, c))).collect()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        Self::all_in_box(n, usize::MAX, usize::MAX)
    }

    /// Partitions of `n` with at most `max_rows` rows and `max_cols` columns.
    pub fn all_in_box(n: usize, max_rows: usize, max_cols: usize) -> Vec<Partition> {
        fn go(n: usize, max_part: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if rows_left == 0 {
                return;
            }
            for p in (1..=max_part.min(n)).rev() {
                cur.push(p);
                go(n - p, p, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max_cols.min(n), max_rows, &mut Vec::new(), &mut out);
        out
    }

    /// Cells where `self` and `other` differ, assuming one contains the other.
    pub fn skew_cells(outer: &Partition, inner: &Partition) -> Vec<Cell> {
        outer.cells_outside(inner)
    }
}

/// Free-function form of [`Partition::contains`].
pub fn contains(a: &Partition, b: &Partition) -> bool {
    a.contains(b)
}

/// The `r x (d-r)` rectangle that frames complements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RectangleFrame {
    r: usize,
    d: usize,
}

impl RectangleFrame {
    pub fn new(r: usize, d: usize) -> Result<Self> {
        if r == 0 || d <= r {
            return Err(Error::InvalidFrame { r, d });
        }
        Ok(RectangleFrame { r, d })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn cols(&self) -> usize {
        self.d - self.r
    }

    /// `r(d-r)`, the number of boxes of the full rectangle.
    pub fn area(&self) -> usize {
        self.r * self.cols()
    }

    pub fn lambda(&self) -> Partition {
        Partition::rectangle(self.r, self.cols())
    }

    pub fn fits(&self, p: &Partition) -> bool {
        p.num_rows() <= self.r && p.first_row() <= self.cols()
    }

    pub fn check_fits(&self, p: &Partition) -> Result<()> {
        if self.fits(p) {
            Ok(())
        } else {
            Err(Error::ShapeOverflow { partition: p.to_string(), r: self.r, cols: self.cols() })
        }
    }

    /// Rotated complement inside the rectangle.
    pub fn complement(&self, p: &Partition) -> Result<Partition> {
        self.check_fits(p)?;
        let rows = (1..=self.r).map(|i| self.cols() - p.part(self.r + 1 - i)).collect();
        Partition::new(rows)
    }
}

pub fn complement(p: &Partition, frame: &RectangleFrame) -> Result<Partition> {
    frame.complement(p)
}

/// Number of standard tableaux of shape `p`, by the hook-length formula.
pub fn syt_count(p: &Partition) -> u128 {
    let conj = p.conjugate();
    let n = p.size() as u128;
    let mut num: u128 = (1..=n).product();
    let mut hooks: Vec<u128> =
        p.cells().into_iter().map(|(r, c)| ((p.part(r) - c) + (conj.part(c) - r) + 1) as u128).collect();
    // divide progressively to keep numbers small
    hooks.sort_unstable();
    for h in hooks {
        num /= h.max(1);
    }
    num
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\\{}", self.outer, self.inner)
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(p: Partition) -> Self {
        SkewShape { outer: p, inner: Partition::empty() }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.outer.cells_outside(&self.inner)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Cells of the inner shape that an inward slide may start from.
    pub fn inner_corners(&self) -> Vec<Cell> {
        self.inner.removable_cells()
    }

    /// Cells just outside the outer shape that an outward slide may start from.
    pub fn outer_cocorners(&self) -> Vec<Cell> {
        self.outer.addable_cells()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableauKind {
    Standard,
    Semistandard,
}

/// A semistandard filling of a skew shape. `rows[r]` has `outer[r+1]` slots
/// and inner cells hold `0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let cells: Vec<String> =
                    row.iter().map(|&x| if x == 0 { "·".to_string() } else { x.to_string() }).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl SkewTableau {
    /// Builds from the compact encoding: `rows[r]` lists the entries of row
    /// `r+1` to the right of the inner shape.
    pub fn new(inner: Partition, rows: Vec<Vec<u32>>) -> Result<Self> {
        let nrows = rows.len().max(inner.num_rows());
        let mut outer = Vec::with_capacity(nrows);
        let mut full = Vec::with_capacity(nrows);
        for r in 0..nrows {
            let skip = inner.part(r + 1);
            let entries = rows.get(r).cloned().unwrap_or_default();
            outer.push(skip + entries.len());
            let mut row = vec![0; skip];
            row.extend(entries);
            full.push(row);
        }
        let outer = Partition::new(outer).map_err(|_| Error::InvalidTableau("rows do not form a skew shape".into()))?;
        full.truncate(outer.num_rows());
        let shape = SkewShape::new(outer, inner)?;
        let t = SkewTableau { shape, rows: full };
        t.validate()?;
        Ok(t)
    }

    pub fn straight(rows: Vec<Vec<u32>>) -> Result<Self> {
        SkewTableau::new(Partition::empty(), rows)
    }

    /// Builds from a cell map covering exactly the cells of `shape`.
    pub fn from_cells(shape: SkewShape, entries: &BTreeMap<Cell, u32>) -> Result<Self> {
        let mut rows: Vec<Vec<u32>> = shape.outer.rows().iter().map(|&len| vec![0; len]).collect();
        let cells = shape.cells();
        if cells.len() != entries.len() {
            return Err(Error::InvalidTableau("entries do not cover the shape".into()));
        }
        for cell in cells {
            let v = *entries.get(&cell).ok_or_else(|| Error::InvalidTableau(format!("missing entry at {cell:?}")))?;
            rows[cell.0 - 1][cell.1 - 1] = v;
        }
        let t = SkewTableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_raw_unchecked(shape: SkewShape, rows: Vec<Vec<u32>>) -> Self {
        let t = SkewTableau { shape, rows };
        debug_assert!(t.validate().is_ok(), "invalid tableau {t}");
        t
    }

    /// Empty tableau on the straight shape `∅` skewed by `p`.
    pub fn empty_on(p: Partition) -> Self {
        let rows = p.rows().iter().map(|&len| vec![0; len]).collect();
        SkewTableau { shape: SkewShape { outer: p.clone(), inner: p }, rows }
    }

    fn validate(&self) -> Result<()> {
        for cell in self.shape.cells() {
            let v = self.rows[cell.0 - 1][cell.1 - 1];
            if v == 0 {
                return Err(Error::InvalidTableau(format!("entry at {cell:?} must be positive")));
            }
            if let Some(right) = self.get((cell.0, cell.1 + 1)) {
                if right < v {
                    return Err(Error::InvalidTableau(format!("row {} decreases", cell.0)));
                }
            }
            if let Some(below) = self.get((cell.0 + 1, cell.1)) {
                if below <= v {
                    return Err(Error::InvalidTableau(format!("column {} not strictly increasing", cell.1)));
                }
            }
        }
        for cell in self.shape.inner.cells() {
            if self.rows[cell.0 - 1][cell.1 - 1] != 0 {
                return Err(Error::InvalidTableau("inner cell carries an entry".into()));
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn outer(&self) -> &Partition {
        &self.shape.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.shape.inner
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn is_straight(&self) -> bool {
        self.shape.is_straight()
    }

    /// Entry at `cell`, `None` for inner cells or cells outside the shape.
    pub fn get(&self, (r, c): Cell) -> Option<u32> {
        if r == 0 || c == 0 {
            return None;
        }
        match self.rows.get(r - 1).and_then(|row| row.get(c - 1)) {
            Some(&v) if v > 0 => Some(v),
            _ => None,
        }
    }

    /// Full rows with `0` marking inner cells.
    pub fn raw_rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Compact rows: entries right of the inner shape.
    pub fn compact_rows(&self) -> Vec<Vec<u32>> {
        self.rows.iter().enumerate().map(|(r, row)| row[self.shape.inner.part(r + 1)..].to_vec()).collect()
    }

    pub fn entries(&self) -> Vec<(Cell, u32)> {
        self.shape.cells().into_iter().map(|c| (c, self.rows[c.0 - 1][c.1 - 1])).collect()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_standard(&self) -> bool {
        let mut vals: Vec<u32> = self.entries().into_iter().map(|(_, v)| v).collect();
        vals.sort_unstable();
        vals.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn kind(&self) -> TableauKind {
        if self.is_standard() {
            TableauKind::Standard
        } else {
            TableauKind::Semistandard
        }
    }

    pub(crate) fn require_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(Error::InvalidTableau(format!("{self} is not standard")))
        }
    }

    /// Cell holding `value`, for standard tableaux.
    pub fn position_of(&self, value: u32) -> Option<Cell> {
        self.entries().into_iter().find(|&(_, v)| v == value).map(|(c, _)| c)
    }

    /// Column reading word: columns left to right, each read bottom to top.
    pub fn column_reading_word(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        for c in 1..=self.shape.outer.first_row() {
            for r in (1..=self.shape.outer.num_rows()).rev() {
                if let Some(v) = self.get((r, c)) {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Row reading word: rows bottom to top, each read left to right.
    pub fn row_reading_word(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        for r in (1..=self.shape.outer.num_rows()).rev() {
            for c in 1..=self.shape.outer.part(r) {
                if let Some(v) = self.get((r, c)) {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Inner shape together with the cells holding entries `<= k`.
    pub fn shape_at_most(&self, k: u32) -> Partition {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let skip = self.shape.inner.part(r + 1);
                skip + row[skip..].iter().take_while(|&&v| v <= k).count()
            })
            .collect();
        Partition::new(rows).expect("semistandard prefix is a partition")
    }

    /// The chain of shapes `shape_at_most(0..=max)`.
    pub fn to_chain(&self) -> Vec<Partition> {
        (0..=self.max_entry()).map(|k| self.shape_at_most(k)).collect()
    }

    /// Builds the tableau whose `k`-th step adds the cells labelled `k`.
    pub fn from_chain(chain: &[Partition]) -> Result<Self> {
        let first = chain.first().ok_or_else(|| Error::InconsistentChain("empty chain".into()))?;
        let last = chain.last().unwrap();
        let mut rows: Vec<Vec<u32>> = last.rows().iter().map(|&len| vec![0; len]).collect();
        for (k, pair) in chain.windows(2).enumerate() {
            if !pair[1].contains(&pair[0]) {
                return Err(Error::InconsistentChain(format!("{} does not contain {}", pair[1], pair[0])));
            }
            for (r, c) in pair[1].cells_outside(&pair[0]) {
                rows[r - 1][c - 1] = k as u32 + 1;
            }
        }
        let shape = SkewShape::new(last.clone(), first.clone())?;
        let t = SkewTableau { shape, rows };
        t.validate().map_err(|e| Error::InconsistentChain(e.to_string()))?;
        Ok(t)
    }

    /// Cells with entries in `[lo, hi]`, entries kept as they are.
    pub fn restrict(&self, lo: u32, hi: u32) -> SkewTableau {
        let outer = self.shape_at_most(hi);
        let inner = if lo <= 1 { self.shape.inner.clone() } else { self.shape_at_most(lo - 1) };
        let inner = if inner.contains(&outer) { outer.clone() } else { inner };
        let rows = outer
            .rows()
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                let skip = inner.part(r + 1);
                (0..len).map(|c| if c < skip { 0 } else { self.rows[r][c] }).collect()
            })
            .collect();
        SkewTableau { shape: SkewShape { outer, inner }, rows }
    }

    /// Renumbers entries to `1..=n` preserving their relative order; equal
    /// entries are ordered left to right (standardization).
    pub fn standardize(&self) -> SkewTableau {
        let mut cells: Vec<(u32, usize, usize)> = self.entries().into_iter().map(|((r, c), v)| (v, c, r)).collect();
        cells.sort_unstable();
        let mut rows = self.rows.clone();
        for (k, &(_, c, r)) in cells.iter().enumerate() {
            rows[r - 1][c - 1] = k as u32 + 1;
        }
        SkewTableau { shape: self.shape.clone(), rows }
    }

    /// Adds `delta` to every entry (negative shifts must keep entries positive).
    pub fn shift_entries(&self, delta: i64) -> Result<SkewTableau> {
        let mut rows = self.rows.clone();
        for row in rows.iter_mut() {
            for v in row.iter_mut().filter(|v| **v > 0) {
                let nv = *v as i64 + delta;
                if nv <= 0 {
                    return Err(Error::OutOfRange("shift makes an entry non-positive".into()));
                }
                *v = nv as u32;
            }
        }
        Ok(SkewTableau { shape: self.shape.clone(), rows })
    }

    /// Places `values` into the cells in the order of the column reading word.
    pub fn refill_in_column_reading_order(&self, values: &[u32]) -> Result<SkewTableau> {
        if values.len() != self.size() {
            return Err(Error::SizeMismatch { expected: self.size(), found: values.len() });
        }
        let mut rows = self.rows.clone();
        let mut it = values.iter();
        for c in 1..=self.shape.outer.first_row() {
            for r in (1..=self.shape.outer.num_rows()).rev() {
                if self.shape.contains_cell((r, c)) {
                    rows[r - 1][c - 1] = *it.next().unwrap();
                }
            }
        }
        let t = SkewTableau { shape: self.shape.clone(), rows };
        t.validate()?;
        Ok(t)
    }

    /// Straight tableau with `1..=λ_1` in row one, and so on.
    pub fn row_reading_standard(p: &Partition) -> SkewTableau {
        let mut next = 0;
        let rows = p
            .rows()
            .iter()
            .map(|&len| {
                (0..len)
                    .map(|_| {
                        next += 1;
                        next
                    })
                    .collect()
            })
            .collect();
        SkewTableau { shape: SkewShape::straight(p.clone()), rows }
    }

    /// Straight tableau whose row `i` is filled with `i`.
    pub fn superstandard(p: &Partition) -> SkewTableau {
        let rows = p.rows().iter().enumerate().map(|(i, &len)| vec![i as u32 + 1; len]).collect();
        SkewTableau { shape: SkewShape::straight(p.clone()), rows }
    }

    /// Content vector: `weight[v-1]` counts entries equal to `v`.
    pub fn weight(&self, r: usize) -> Vec<usize> {
        let mut w = vec![0; r.max(self.max_entry() as usize)];
        for (_, v) in self.entries() {
            w[v as usize - 1] += 1;
        }
        w
    }
}

/// All standard fillings of a skew shape, in a deterministic order.
pub fn standard_tableaux(shape: &SkewShape) -> Vec<SkewTableau> {
    fn go(cur: &Partition, outer: &Partition, chain: &mut Vec<Partition>, out: &mut Vec<SkewTableau>) {
        if cur == outer {
            out.push(SkewTableau::from_chain(chain).expect("valid chain"));
            return;
        }
        for cell in cur.addable_cells() {
            if outer.contains_cell(cell) {
                let next = cur.with_cell_added(cell).unwrap();
                chain.push(next.clone());
                go(&next, outer, chain, out);
                chain.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut chain = vec![shape.inner.clone()];
    go(&shape.inner, &shape.outer, &mut chain, &mut out);
    out
}

/// All semistandard fillings of a skew shape with entries in `1..=r`.
pub fn semistandard_tableaux(shape: &SkewShape, r: usize) -> Vec<SkewTableau> {
    fn horizontal_strips(cur: &Partition, outer: &Partition) -> Vec<Partition> {
        // next shapes ν with cur ⊆ ν ⊆ outer and ν/cur a horizontal strip
        let n = outer.num_rows();
        let mut out = Vec::new();
        let mut rows = vec![0usize; n];
        fn go(i: usize, n: usize, cur: &Partition, outer: &Partition, rows: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == n {
                out.push(Partition::new(rows.clone()).unwrap());
                return;
            }
            let lo = cur.part(i + 1);
            let hi = if i == 0 { outer.part(1) } else { outer.part(i + 1).min(cur.part(i)) };
            for v in lo..=hi {
                rows[i] = v;
                go(i + 1, n, cur, outer, rows, out);
            }
        }
        go(0, n, cur, outer, &mut rows, &mut out);
        out
    }
    fn go(
        step: usize,
        r: usize,
        cur: &Partition,
        outer: &Partition,
        chain: &mut Vec<Partition>,
        out: &mut Vec<SkewTableau>,
    ) {
        if step == r {
            if cur == outer {
                out.push(SkewTableau::from_chain(chain).expect("valid chain"));
            }
            return;
        }
        for next in horizontal_strips(cur, outer) {
            chain.push(next.clone());
            go(step + 1, r, &next, outer, chain, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    let mut chain = vec![shape.inner.clone()];
    go(0, r, &shape.inner, &shape.outer, &mut chain, &mut out);
    out
}
