use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Square matrix of exact rationals. Rows are stored sparsely since the
/// operators built here have few non-zero entries per row; dense views are
/// available through [`LinearOperator::get`] and [`LinearOperator::to_dense`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearOperator {
    dim: usize,
    rows: Vec<BTreeMap<usize, BigRational>>,
}

impl LinearOperator {
    pub fn zero(dim: usize) -> Self {
        LinearOperator { dim, rows: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut out = Self::zero(dim);
        for i in 0..dim {
            out.rows[i].insert(i, BigRational::from_integer(1.into()));
        }
        out
    }

    pub fn from_dense(entries: Vec<Vec<BigRational>>) -> Result<Self> {
        let dim = entries.len();
        let mut out = Self::zero(dim);
        for (i, row) in entries.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::SizeMismatch { expected: dim, found: row.len() });
            }
            for (j, x) in row.into_iter().enumerate() {
                if !x.is_zero() {
                    out.rows[i].insert(j, x);
                }
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds `x` to the entry `(i, j)`.
    pub fn add_entry(&mut self, i: usize, j: usize, x: BigRational) {
        let slot = self.rows[i].entry(j).or_insert_with(BigRational::zero);
        *slot += x;
        if slot.is_zero() {
            self.rows[i].remove(&j);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        self.rows[i].get(&j).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &BigRational)> {
        self.rows[i].iter().map(|(&j, x)| (j, x))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigRational>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, x) in row {
                m[(i, j)] = x.to_f64().unwrap_or(f64::NAN);
            }
        }
        m
    }

    fn check_dim(&self, other: &LinearOperator) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::SizeMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    pub fn add(&self, other: &LinearOperator) -> Result<LinearOperator> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (i, row) in other.rows.iter().enumerate() {
            for (&j, x) in row {
                out.add_entry(i, j, x.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> LinearOperator {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        let rows = self.rows.iter().map(|row| row.iter().map(|(&j, x)| (j, x * c)).collect()).collect();
        LinearOperator { dim: self.dim, rows }
    }

    pub fn sub(&self, other: &LinearOperator) -> Result<LinearOperator> {
        self.add(&other.scale(&-BigRational::from_integer(1.into())))
    }

    /// The product `self · other`.
    pub fn mul(&self, other: &LinearOperator) -> Result<LinearOperator> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            for (&k, a) in row {
                for (&j, b) in &other.rows[k] {
                    out.add_entry(i, j, a * b);
                }
            }
        }
        Ok(out)
    }

    /// `[self, other] = self · other - other · self`.
    pub fn commutator(&self, other: &LinearOperator) -> Result<LinearOperator> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| row.iter().all(|(&j, x)| self.rows[j].get(&i) == Some(x)))
    }

    pub fn transpose(&self) -> LinearOperator {
        let mut out = Self::zero(self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, x) in row {
                out.rows[j].insert(i, x.clone());
            }
        }
        out
    }

    /// Applies the operator to a sparse vector.
    pub fn apply_sparse(&self, v: &BTreeMap<usize, BigRational>) -> BTreeMap<usize, BigRational> {
        let mut out: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc = BigRational::zero();
            for (j, x) in row {
                if let Some(y) = v.get(j) {
                    acc += x * y;
                }
            }
            if !acc.is_zero() {
                out.insert(i, acc);
            }
        }
        out
    }

    pub fn apply(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if v.len() != self.dim {
            return Err(Error::SizeMismatch { expected: self.dim, found: v.len() });
        }
        Ok(self.rows.iter().map(|row| row.iter().fold(BigRational::zero(), |acc, (&j, x)| acc + x * &v[j])).collect())
    }
}

impl Serialize for LinearOperator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Vec<String>> =
            self.to_dense().iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
        let mut st = s.serialize_struct("LinearOperator", 2)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}
