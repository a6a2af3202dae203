//! Dual equivalence cylindrical growth diagrams.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::growth::cgd::{enumerate_cgds, normalize, Cgd};
use crate::growth::IntervalFunction;
use crate::jdt::{shuffle, DualEquivClass};
use crate::tableaux::{Partition, RectangleFrame, SkewShape, SkewTableau};

/// A decgd on its fundamental domain: columns `i ∈ [1, k]`, nodes
/// `j ∈ [i, i + k]`, edges starting at `j ∈ [i, i + k - 1]`.
///
/// `alpha[i][j]` labels the east edge `(i, j) -> (i - 1, j)` and
/// `beta[i][j]` the north edge `(i, j) -> (i, j + 1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Decgd {
    frame: RectangleFrame,
    shape: Vec<Partition>,
    gamma: Vec<Vec<Partition>>,
    alpha: Vec<Vec<DualEquivClass>>,
    beta: Vec<Vec<DualEquivClass>>,
}

/// Values and north-edge classes along one column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Column {
    /// `γ_{c, c + t}` for `t ∈ [0, k]`.
    pub values: Vec<Partition>,
    /// `β_{c, c + t}` for `t ∈ [0, k)`.
    pub beta: Vec<DualEquivClass>,
}

fn box_class(from: &Partition, to: &Partition) -> Result<DualEquivClass> {
    DualEquivClass::of(&SkewTableau::from_chain(&[from.clone(), to.clone()])?)
}

/// Class of the concatenation of several adjacent classes.
pub fn concat_classes(parts: &[&DualEquivClass]) -> Result<DualEquivClass> {
    let mut chain: Vec<Partition> = Vec::new();
    for (idx, c) in parts.iter().enumerate() {
        let sub = c.chain();
        if idx == 0 {
            chain.extend(sub);
        } else {
            if chain.last() != sub.first() {
                return Err(Error::InconsistentChain("classes are not adjacent".into()));
            }
            chain.extend(sub.into_iter().skip(1));
        }
    }
    DualEquivClass::of(&SkewTableau::from_chain(&chain)?)
}

impl Column {
    /// Computes the column to the east together with the east-edge classes
    /// `α_{c, c + t}` of this column.
    fn step_east(&self, lam: &Partition) -> Result<(Column, Vec<DualEquivClass>)> {
        let k = self.beta.len();
        let mut alpha: Vec<Option<DualEquivClass>> = vec![None; k];
        let mut values = vec![Partition::empty(); k + 1];
        let mut beta: Vec<Option<DualEquivClass>> = vec![None; k];
        values[k] = lam.clone();
        // top east edge ends at Λ and has antinormal shape
        let top_shape = SkewShape::new(lam.clone(), self.values[k - 1].clone())?;
        alpha[k - 1] = Some(DualEquivClass::from_shape_unique(&top_shape)?);
        for t in (0..k.saturating_sub(1)).rev() {
            let north = alpha[t + 1].as_ref().unwrap();
            let (south, east) = shuffle(&self.beta[t], north)?;
            // new column index t' = t + 1 relative to its own base
            values[t + 1] = south.outer().clone();
            beta[t + 1] = Some(east);
            alpha[t] = Some(south);
        }
        beta[0] = Some(DualEquivClass::from_shape_unique(&SkewShape::straight(values[1].clone()))?);
        Ok((
            Column { values, beta: beta.into_iter().map(Option::unwrap).collect() },
            alpha.into_iter().map(Option::unwrap).collect(),
        ))
    }
}

impl Decgd {
    pub fn frame(&self) -> &RectangleFrame {
        &self.frame
    }

    /// The cyclic shape `λ_1, …, λ_k`.
    pub fn shape(&self) -> &[Partition] {
        &self.shape
    }

    pub fn period(&self) -> usize {
        self.shape.len()
    }

    pub fn interval(&self) -> IntervalFunction {
        IntervalFunction::new(self.shape.iter().map(Partition::size).collect()).expect("non-empty parts")
    }

    fn idx(&self, i: i64, j: i64, width: i64) -> Result<(usize, usize)> {
        let k = self.period();
        let (i, j) = normalize(i, j, k);
        if j < i || j > i + width {
            return Err(Error::OutOfRange(format!("({i},{j}) lies outside the strip")));
        }
        Ok(((i - 1) as usize, (j - i) as usize))
    }

    /// `γ_{ij}` for any `i <= j <= i + k`.
    pub fn gamma(&self, i: i64, j: i64) -> Result<&Partition> {
        let (a, b) = self.idx(i, j, self.period() as i64)?;
        Ok(&self.gamma[a][b])
    }

    /// Class on the east edge `(i, j) -> (i - 1, j)`.
    pub fn alpha(&self, i: i64, j: i64) -> Result<&DualEquivClass> {
        let (a, b) = self.idx(i, j, self.period() as i64 - 1)?;
        Ok(&self.alpha[a][b])
    }

    /// Class on the north edge `(i, j) -> (i, j + 1)`.
    pub fn beta(&self, i: i64, j: i64) -> Result<&DualEquivClass> {
        let (a, b) = self.idx(i, j, self.period() as i64 - 1)?;
        Ok(&self.beta[a][b])
    }

    /// The column at `i`: its values and north-edge classes.
    pub fn column(&self, i: i64) -> Column {
        let k = self.period() as i64;
        Column {
            values: (0..=k).map(|t| self.gamma(i, i + t).unwrap().clone()).collect(),
            beta: (0..k).map(|t| self.beta(i, i + t).unwrap().clone()).collect(),
        }
    }

    /// Regenerates the whole diagram from column `c`, filling eastward.
    pub fn from_column(frame: &RectangleFrame, c: i64, column: Column) -> Result<Decgd> {
        let k = column.beta.len();
        if k == 0 || column.values.len() != k + 1 {
            return Err(Error::InvalidDecgd("column has the wrong length".into()));
        }
        let lam = frame.lambda();
        if !column.values[0].is_empty() || column.values[k] != lam {
            return Err(Error::InvalidDecgd("column must run from the empty partition to the rectangle".into()));
        }
        for (t, b) in column.beta.iter().enumerate() {
            if b.inner() != &column.values[t] || b.outer() != &column.values[t + 1] {
                return Err(Error::InvalidDecgd(format!("class on edge {t} does not match the column values")));
            }
        }
        // cols[s] is column c - s; alphas[s] are the east-edge classes of column c - s
        let mut cols = vec![column];
        let mut alphas = Vec::with_capacity(k);
        for s in 0..k {
            let (next, alpha) = cols[s].step_east(&lam)?;
            alphas.push(alpha);
            cols.push(next);
        }
        if cols[k] != cols[0] {
            return Err(Error::Internal("regenerated decgd is not periodic".into()));
        }
        let kk = k as i64;
        let mut gamma = vec![Vec::new(); k];
        let mut alpha = vec![Vec::new(); k];
        let mut beta = vec![Vec::new(); k];
        for s in 0..k {
            let i = (c - s as i64 - 1).rem_euclid(kk) as usize;
            gamma[i] = cols[s].values.clone();
            beta[i] = cols[s].beta.clone();
            alpha[i] = alphas[s].clone();
        }
        let shape = gamma.iter().map(|col| col[1].clone()).collect();
        let out = Decgd { frame: *frame, shape, gamma, alpha, beta };
        out.validate()?;
        Ok(out)
    }

    /// Checks every defining condition.
    pub fn validate(&self) -> Result<()> {
        let k = self.period() as i64;
        let lam = self.frame.lambda();
        let m = IntervalFunction::new(self.shape.iter().map(Partition::size).collect())
            .map_err(|_| Error::InvalidDecgd("every part of the shape must be non-empty".into()))?;
        if m.total() != self.frame.area() {
            return Err(Error::InvalidDecgd("shape sizes do not add up to the rectangle".into()));
        }
        for i in 1..=k {
            if !self.gamma(i, i)?.is_empty() || self.gamma(i, i + k)? != &lam {
                return Err(Error::InvalidDecgd(format!("boundary values wrong in column {i}")));
            }
            if self.gamma(i, i + 1)? != &self.shape[(i - 1) as usize] {
                return Err(Error::InvalidDecgd(format!("γ_({i},{}) differs from the shape", i + 1)));
            }
            for j in i..=i + k {
                let g = self.gamma(i, j)?;
                if g.size() != m.interval_eval(i, j) || !self.frame.fits(g) {
                    return Err(Error::InvalidDecgd(format!("γ_({i},{j}) = {g} has the wrong size")));
                }
            }
            for j in i..i + k {
                let a = self.alpha(i, j)?;
                if a.inner() != self.gamma(i, j)? || a.outer() != self.gamma(i - 1, j)? {
                    return Err(Error::InvalidDecgd(format!("α_({i},{j}) has the wrong shape")));
                }
                let b = self.beta(i, j)?;
                if b.inner() != self.gamma(i, j)? || b.outer() != self.gamma(i, j + 1)? {
                    return Err(Error::InvalidDecgd(format!("β_({i},{j}) has the wrong shape")));
                }
            }
            for j in i..=i + k - 2 {
                let (south, east) = shuffle(self.beta(i, j)?, self.alpha(i, j + 1)?)?;
                if &south != self.alpha(i, j)? || &east != self.beta(i - 1, j)? {
                    return Err(Error::InvalidDecgd(format!("square at ({i},{j}) fails the shuffle condition")));
                }
            }
        }
        Ok(())
    }

    /// The decgd of a cgd: single-box classes on every edge.
    pub fn from_cgd(cgd: &Cgd) -> Result<Decgd> {
        let k = cgd.period() as i64;
        let mut gamma = Vec::new();
        let mut alpha = Vec::new();
        let mut beta = Vec::new();
        for i in 1..=k {
            gamma.push((i..=i + k).map(|j| cgd.value(i, j).cloned()).collect::<Result<Vec<_>>>()?);
            alpha.push(
                (i..i + k).map(|j| box_class(cgd.value(i, j)?, cgd.value(i - 1, j)?)).collect::<Result<Vec<_>>>()?,
            );
            beta.push(
                (i..i + k).map(|j| box_class(cgd.value(i, j)?, cgd.value(i, j + 1)?)).collect::<Result<Vec<_>>>()?,
            );
        }
        let shape = vec![Partition::from_rows_unchecked(vec![1]); k as usize];
        Ok(Decgd { frame: *cgd.frame(), shape, gamma, alpha, beta })
    }

    /// Forgets the nodes not of the form `(ĝ(i), ĝ(j))`, composing classes
    /// along the paths between kept nodes.
    pub fn coarsen(&self, groups: &IntervalFunction) -> Result<Decgd> {
        if groups.total() != self.period() {
            return Err(Error::SizeMismatch { expected: self.period(), found: groups.total() });
        }
        let kc = groups.period() as i64;
        let h = |i: i64| groups.hat(i);
        let mut gamma = Vec::new();
        let mut alpha = Vec::new();
        let mut beta = Vec::new();
        for i in 1..=kc {
            gamma.push((i..=i + kc).map(|j| self.gamma(h(i), h(j)).cloned()).collect::<Result<Vec<_>>>()?);
            let mut a_col = Vec::new();
            let mut b_col = Vec::new();
            for j in i..i + kc {
                let a_parts: Vec<&DualEquivClass> =
                    ((h(i - 1) + 1)..=h(i)).rev().map(|x| self.alpha(x, h(j))).collect::<Result<_>>()?;
                a_col.push(concat_classes(&a_parts)?);
                let b_parts: Vec<&DualEquivClass> =
                    (h(j)..h(j + 1)).map(|y| self.beta(h(i), y)).collect::<Result<_>>()?;
                b_col.push(concat_classes(&b_parts)?);
            }
            alpha.push(a_col);
            beta.push(b_col);
        }
        let shape = gamma.iter().map(|col| col[1].clone()).collect();
        let out = Decgd { frame: self.frame, shape, gamma, alpha, beta };
        if cfg!(debug_assertions) {
            out.validate()?;
        }
        Ok(out)
    }
}

/// Reduction of a cgd modulo `m`.
pub fn reduce_mod_m(cgd: &Cgd, m: &IntervalFunction) -> Result<Decgd> {
    if m.total() != cgd.period() {
        return Err(Error::SizeMismatch { expected: cgd.period(), found: m.total() });
    }
    Decgd::from_cgd(cgd)?.coarsen(m)
}

fn check_shape(frame: &RectangleFrame, shape: &[Partition], bound: usize) -> Result<()> {
    if frame.area() > bound {
        return Err(Error::BoundExceeded { size: frame.area(), bound });
    }
    let total: usize = shape.iter().map(Partition::size).sum();
    if total != frame.area() {
        return Err(Error::SizeMismatch { expected: frame.area(), found: total });
    }
    if shape.iter().any(Partition::is_empty) {
        return Err(Error::InvalidDecgd("shape parts must be non-empty".into()));
    }
    Ok(())
}

/// All decgds of a given cyclic shape, through full cgd lifts.
pub fn enumerate_decgds(frame: &RectangleFrame, shape: &[Partition], bound: usize) -> Result<Vec<Decgd>> {
    check_shape(frame, shape, bound)?;
    let m = IntervalFunction::new(shape.iter().map(Partition::size).collect())?;
    let cgds = enumerate_cgds(frame, bound)?;
    let k = shape.len() as i64;
    let found: Vec<Decgd> = cgds
        .par_iter()
        .filter(|g| (1..=k).all(|i| g.value(m.hat(i), m.hat(i + 1)).ok() == Some(&shape[(i - 1) as usize])))
        .map(|g| reduce_mod_m(g, &m))
        .collect::<Result<Vec<_>>>()?;
    let mut keyed: Vec<(String, Decgd)> =
        found.into_iter().map(|d| (serde_json::to_string(&d).expect("serializable"), d)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    Ok(keyed.into_iter().map(|(_, d)| d).collect())
}

/// Checks that a shape is `(□^n, μ^c)` and returns `n`.
fn boxes_then_complement(d: &Decgd) -> Result<usize> {
    let k = d.period();
    let single = Partition::from_rows_unchecked(vec![1]);
    if k < 2 || d.shape()[..k - 1].iter().any(|p| p != &single) {
        return Err(Error::InvalidDecgd("shape must be single boxes followed by one complement".into()));
    }
    Ok(k - 1)
}

/// Reads the standard tableau along column `1` of a decgd of shape
/// `(□^n, μ^c)`.
pub fn decgd_to_syt(d: &Decgd) -> Result<SkewTableau> {
    let n = boxes_then_complement(d)? as i64;
    let chain: Vec<Partition> = (1..=n + 1).map(|j| d.gamma(1, j).cloned()).collect::<Result<_>>()?;
    SkewTableau::from_chain(&chain)
}

/// The decgd of shape `(□^n, μ^c)` whose column `1` reads `t`. When `t`
/// fills the whole rectangle the complement part is dropped and the shape is
/// `(□^n)`.
pub fn syt_to_decgd(t: &SkewTableau, frame: &RectangleFrame) -> Result<Decgd> {
    if !t.is_straight() {
        return Err(Error::InvalidTableau("expected a straight tableau".into()));
    }
    t.require_standard()?;
    frame.check_fits(t.outer())?;
    let lam = frame.lambda();
    let closed = t.outer() == &lam;
    let mut values = t.to_chain();
    if !closed {
        values.push(lam.clone());
    }
    let mut beta = Vec::new();
    for pair in values.windows(2).take(t.size()) {
        beta.push(box_class(&pair[0], &pair[1])?);
    }
    if !closed {
        beta.push(DualEquivClass::from_shape_unique(&SkewShape::new(lam, t.outer().clone())?)?);
    }
    Decgd::from_column(frame, 1, Column { values, beta })
}
