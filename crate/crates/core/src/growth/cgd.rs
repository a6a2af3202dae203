//! Cylindrical growth diagrams.

use crate::error::{Error, Result};
use crate::growth::{complete_corner, square_is_valid, Corner};
use crate::tableaux::{standard_tableaux, Partition, RectangleFrame, SkewShape, SkewTableau};

/// Default bound on `r(d-r)` for exhaustive enumerations.
pub const DEFAULT_BOUND: usize = 8;

/// A cylindrical growth diagram stored on columns `i ∈ [1, k]`, rows
/// `j ∈ [i, i + k]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cgd {
    frame: RectangleFrame,
    first_column: SkewTableau,
    columns: Vec<Vec<Partition>>,
}

/// Shifts `(i, j)` by a multiple of `k` so that `i ∈ [1, k]`.
pub(crate) fn normalize(i: i64, j: i64, k: usize) -> (i64, i64) {
    let k = k as i64;
    let t = (i - 1).div_euclid(k);
    (i - t * k, j - t * k)
}

impl Cgd {
    pub fn frame(&self) -> &RectangleFrame {
        &self.frame
    }

    pub fn period(&self) -> usize {
        self.frame.area()
    }

    pub fn first_column(&self) -> &SkewTableau {
        &self.first_column
    }

    /// `γ_{ij}` for any `i <= j <= i + k`.
    pub fn value(&self, i: i64, j: i64) -> Result<&Partition> {
        let k = self.period();
        let (i, j) = normalize(i, j, k);
        if j < i || j > i + k as i64 {
            return Err(Error::OutOfRange(format!("node ({i},{j}) lies outside the strip")));
        }
        Ok(&self.columns[(i - 1) as usize][(j - i) as usize])
    }

    /// Fundamental domain as `((i, j), γ_ij)`.
    pub fn nodes(&self) -> Vec<((i64, i64), &Partition)> {
        let mut out = Vec::new();
        for (ci, col) in self.columns.iter().enumerate() {
            let i = ci as i64 + 1;
            for (dj, p) in col.iter().enumerate() {
                out.push(((i, i + dj as i64), p));
            }
        }
        out
    }

    /// Row `j` read eastward: `γ_{j j}, γ_{(j-1) j}, …, γ_{(j-k) j}`.
    pub fn row(&self, j: i64) -> Vec<Partition> {
        let k = self.period() as i64;
        (0..=k).map(|t| self.value(j - t, j).unwrap().clone()).collect()
    }

    /// Checks boundary values, one-box steps and the local rule on every
    /// full square of the fundamental domain.
    pub fn check(&self) -> Result<()> {
        let k = self.period() as i64;
        let lam = self.frame.lambda();
        for i in 1..=k {
            if !self.value(i, i)?.is_empty() || self.value(i, i + k)? != &lam {
                return Err(Error::Internal(format!("boundary values wrong in column {i}")));
            }
            for j in i..i + k {
                let here = self.value(i, j)?;
                let north = self.value(i, j + 1)?;
                let east = self.value(i - 1, j)?;
                for next in [north, east] {
                    if !(next.contains(here) && next.size() == here.size() + 1) {
                        return Err(Error::MalformedSquare(format!("step from ({i},{j}) is not one box")));
                    }
                }
                if j <= i + k - 2 {
                    let ne = self.value(i - 1, j + 1)?;
                    if !square_is_valid(here, east, north, ne) {
                        return Err(Error::MalformedSquare(format!("square at ({i},{j}) violates the local rule")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Generates the cgd whose column `i = 1` is the chain of `first_column`.
pub fn generate_cgd(frame: &RectangleFrame, first_column: &SkewTableau) -> Result<Cgd> {
    let lam = frame.lambda();
    if first_column.shape() != &SkewShape::straight(lam.clone()) || !first_column.is_standard() {
        return Err(Error::InvalidTableau(format!("first column must be a standard tableau of shape {lam}")));
    }
    let k = frame.area() as i64;
    // columns[t] holds column i = 1 - t, indexed by j - i
    let mut cols: Vec<Vec<Partition>> = vec![first_column.to_chain()];
    for t in 0..k {
        let c = 1 - t;
        let prev = &cols[t as usize];
        let mut next = vec![Partition::empty(); k as usize + 1];
        next[k as usize] = lam.clone();
        // new column is i = c - 1; entry index j - (c - 1)
        for j in (c..=c + k - 2).rev() {
            let sw = &prev[(j - c) as usize];
            let nw = &prev[(j + 1 - c) as usize];
            let ne = &next[(j + 1 - (c - 1)) as usize];
            next[(j - (c - 1)) as usize] = complete_corner(sw, nw, ne, Corner::SE)?;
        }
        cols.push(next);
    }
    if cols[k as usize] != cols[0] {
        return Err(Error::Internal("generated diagram is not periodic".into()));
    }
    // column i ∈ [1, k] equals column i - k, which is cols[k + 1 - i]
    let columns = (1..=k).map(|i| cols[(k + 1 - i) as usize].clone()).collect();
    Ok(Cgd { frame: *frame, first_column: first_column.clone(), columns })
}

/// One cgd per standard tableau of the rectangle.
pub fn enumerate_cgds(frame: &RectangleFrame, bound: usize) -> Result<Vec<Cgd>> {
    if frame.area() > bound {
        return Err(Error::BoundExceeded { size: frame.area(), bound });
    }
    standard_tableaux(&SkewShape::straight(frame.lambda())).iter().map(|t| generate_cgd(frame, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn figure_first_column() -> SkewTableau {
        let chain: Vec<Partition> =
            [&[][..], &[1], &[1, 1], &[2, 1], &[3, 1], &[3, 2], &[3, 3]].iter().map(|r| p(r)).collect();
        SkewTableau::from_chain(&chain).unwrap()
    }

    #[test]
    fn figure_rows() {
        let frame = RectangleFrame::new(2, 5).unwrap();
        let g = generate_cgd(&frame, &figure_first_column()).unwrap();
        let bottom: Vec<Partition> =
            [&[][..], &[1], &[2], &[2, 1], &[2, 2], &[3, 2], &[3, 3]].iter().map(|r| p(r)).collect();
        assert_eq!(g.row(1), bottom);
        let second: Vec<Partition> =
            [&[][..], &[1], &[2], &[3], &[3, 1], &[3, 2], &[3, 3]].iter().map(|r| p(r)).collect();
        assert_eq!(g.row(2), second);
        assert_eq!(g.row(7), bottom);
        g.check().unwrap();
    }

    #[test]
    fn single_row_frame() {
        let frame = RectangleFrame::new(1, 4).unwrap();
        let all = enumerate_cgds(&frame, DEFAULT_BOUND).unwrap();
        assert_eq!(all.len(), 1);
        for ((i, j), v) in all[0].nodes() {
            assert_eq!(v, &p(&[(j - i) as usize]));
        }
    }

    #[test]
    fn counts_and_rules() {
        for (r, d, count) in [(2, 5, 5), (1, 3, 1), (2, 4, 2), (2, 6, 14), (3, 5, 5)] {
            let frame = RectangleFrame::new(r, d).unwrap();
            let all = enumerate_cgds(&frame, DEFAULT_BOUND).unwrap();
            assert_eq!(all.len(), count);
            for g in &all {
                g.check().unwrap();
            }
        }
        let big = RectangleFrame::new(3, 6).unwrap();
        assert!(matches!(enumerate_cgds(&big, DEFAULT_BOUND), Err(Error::BoundExceeded { size: 9, bound: 8 })));
    }

    #[test]
    fn rejects_wrong_first_column() {
        let frame = RectangleFrame::new(2, 4).unwrap();
        let t = SkewTableau::straight(vec![vec![1, 2]]).unwrap();
        assert!(generate_cgd(&frame, &t).is_err());
    }
}
