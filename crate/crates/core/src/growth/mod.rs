//! Growth diagrams: local rules, rectangles, interval functions, cylindrical
//! growth diagrams and their dual equivalence reductions.
//!
//! Lattice points are `(i, j)` with `i` growing westward and `j` northward,
//! so an east step is `(i, j) -> (i - 1, j)` and a north step is
//! `(i, j) -> (i, j + 1)`.

pub mod cgd;
pub mod decgd;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::Partition;

pub use cgd::{enumerate_cgds, generate_cgd, Cgd, DEFAULT_BOUND};
pub use decgd::{decgd_to_syt, enumerate_decgds, reduce_mod_m, syt_to_decgd, Decgd};

/// Which corner of a square is being completed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Corner {
    SE,
    NW,
}

/// The fourth corner of a square from its bottom-left `mu`, one intermediate
/// `known` and top-right `lam`.
pub fn complete_corner(mu: &Partition, known: &Partition, lam: &Partition, _mode: Corner) -> Result<Partition> {
    if !(lam.contains(known) && known.contains(mu)) || lam.size() != mu.size() + 2 || known.size() != mu.size() + 1 {
        return Err(Error::MalformedSquare(format!("{mu} ⊂ {known} ⊂ {lam} is not a two-step chain")));
    }
    let cells = lam.cells_outside(mu);
    let (a, b) = (cells[0], cells[1]);
    if a.0 == b.0 || a.1 == b.1 {
        // domino: the square is forced to be degenerate
        return Ok(known.clone());
    }
    let first = mu.with_cell_added(a);
    let second = mu.with_cell_added(b);
    match (first, second) {
        (Some(x), Some(y)) if &x == known => Ok(y),
        (Some(x), Some(y)) if &y == known => Ok(x),
        _ => Err(Error::MalformedSquare(format!("no valid intermediate between {mu} and {lam}"))),
    }
}

/// Checks the local rule on a full square given all four corners.
pub fn square_is_valid(sw: &Partition, se: &Partition, nw: &Partition, ne: &Partition) -> bool {
    complete_corner(sw, nw, ne, Corner::SE).map(|x| &x == se).unwrap_or(false)
}

/// Partial map from lattice points to partitions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GrowthDiagram {
    pub values: BTreeMap<(i64, i64), Partition>,
}

impl GrowthDiagram {
    pub fn value(&self, i: i64, j: i64) -> Option<&Partition> {
        self.values.get(&(i, j))
    }

    fn get(&self, i: i64, j: i64) -> Result<&Partition> {
        self.value(i, j).ok_or_else(|| Error::OutOfRange(format!("node ({i},{j}) not in the diagram")))
    }

    /// Values along row `j` from `i_from` eastward to `i_to`.
    pub fn horizontal_chain(&self, j: i64, i_from: i64, i_to: i64) -> Result<Vec<Partition>> {
        (i_to..=i_from).rev().map(|i| self.get(i, j).cloned()).collect()
    }

    /// Values along column `i` from `j_from` northward to `j_to`.
    pub fn vertical_chain(&self, i: i64, j_from: i64, j_to: i64) -> Result<Vec<Partition>> {
        (j_from..=j_to).map(|j| self.get(i, j).cloned()).collect()
    }

    /// Checks the growth rules on every edge and square present.
    pub fn check_rules(&self) -> Result<()> {
        for (&(i, j), v) in &self.values {
            if let Some(e) = self.value(i - 1, j) {
                if !(e.contains(v) && e.size() == v.size() + 1) {
                    return Err(Error::MalformedSquare(format!("east step from ({i},{j}) is not one box")));
                }
            }
            if let Some(n) = self.value(i, j + 1) {
                if !(n.contains(v) && n.size() == v.size() + 1) {
                    return Err(Error::MalformedSquare(format!("north step from ({i},{j}) is not one box")));
                }
            }
            if let (Some(se), Some(nw), Some(ne)) =
                (self.value(i - 1, j), self.value(i, j + 1), self.value(i - 1, j + 1))
            {
                if !square_is_valid(v, se, nw, ne) {
                    return Err(Error::MalformedSquare(format!("square at ({i},{j}) violates the local rule")));
                }
            }
        }
        Ok(())
    }
}

/// Fills the rectangle with west edge `west` (bottom to top) and north edge
/// `north` (west to east). The south-west corner is placed at `(0, 0)`.
pub fn fill_rectangle(west: &[Partition], north: &[Partition]) -> Result<GrowthDiagram> {
    let (Some(top), Some(left)) = (west.last(), north.first()) else {
        return Err(Error::InconsistentChain("edges must be non-empty".into()));
    };
    if top != left {
        return Err(Error::InconsistentChain(format!("west edge ends at {top}, north edge starts at {left}")));
    }
    for chain in [west, north] {
        for pair in chain.windows(2) {
            if !(pair[1].contains(&pair[0]) && pair[1].size() == pair[0].size() + 1) {
                return Err(Error::InconsistentChain(format!("{} -> {} is not a one-box step", pair[0], pair[1])));
            }
        }
    }
    let height = west.len() as i64 - 1;
    let width = north.len() as i64 - 1;
    let mut g = GrowthDiagram::default();
    for (y, p) in west.iter().enumerate() {
        g.values.insert((0, y as i64), p.clone());
    }
    for (x, p) in north.iter().enumerate() {
        g.values.insert((-(x as i64), height), p.clone());
    }
    for x in 1..=width {
        for y in (0..height).rev() {
            let sw = &g.values[&(-(x - 1), y)];
            let nw = &g.values[&(-(x - 1), y + 1)];
            let ne = &g.values[&(-x, y + 1)];
            let se = complete_corner(sw, nw, ne, Corner::SE)?;
            g.values.insert((-x, y), se);
        }
    }
    Ok(g)
}

/// A `k`-periodic positive function `m`, with `m̂(i) = 1 + Σ_{l<i} m(l)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct IntervalFunction {
    m: Vec<usize>,
}

impl IntervalFunction {
    pub fn new(m: Vec<usize>) -> Result<Self> {
        if m.is_empty() || m.contains(&0) {
            return Err(Error::OutOfRange("interval values must be positive and the period non-empty".into()));
        }
        Ok(IntervalFunction { m })
    }

    pub fn constant_one(k: usize) -> Self {
        IntervalFunction { m: vec![1; k.max(1)] }
    }

    pub fn period(&self) -> usize {
        self.m.len()
    }

    /// Sum over one period.
    pub fn total(&self) -> usize {
        self.m.iter().sum()
    }

    /// `m(i)` for any integer `i`, 1-based and periodic.
    pub fn value(&self, i: i64) -> usize {
        self.m[(i - 1).rem_euclid(self.m.len() as i64) as usize]
    }

    pub fn values(&self) -> &[usize] {
        &self.m
    }

    /// `m̂(i)`, strictly increasing with `m̂(1) = 1`.
    pub fn hat(&self, i: i64) -> i64 {
        let k = self.m.len() as i64;
        let total = self.total() as i64;
        let q = (i - 1).div_euclid(k);
        let rem = (i - 1).rem_euclid(k) as usize;
        1 + q * total + self.m[..rem].iter().sum::<usize>() as i64
    }

    /// `m_s(i, j) = m̂(j) - m̂(i)`.
    pub fn interval_eval(&self, i: i64, j: i64) -> usize {
        (self.hat(j) - self.hat(i)) as usize
    }
}

pub fn interval_eval(m: &IntervalFunction, i: i64, j: i64) -> Result<usize> {
    if j < i {
        return Err(Error::OutOfRange(format!("interval ({i},{j}) has j < i")));
    }
    Ok(m.interval_eval(i, j))
}
