use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gaudin::{gl_generator, hamiltonians, word_index, LinearOperator, ParameterPoint};
use crate::words::Word;

/// Relative separation below which two joint eigenvalues count as equal.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Basis of the vectors of weight `μ` killed by every raising operator.
///
/// Coordinates are taken in the weight space, whose words are listed in
/// `weight_words` (as indices of the full basis). Every basis vector has a
/// coordinate `1` at its own pivot-free position and `0` at the others.
#[derive(Clone, Debug)]
pub struct SingularBasis {
    pub n: usize,
    pub r: usize,
    pub mu: Vec<usize>,
    pub weight_words: Vec<usize>,
    pub vectors: Vec<Vec<BigRational>>,
    free: Vec<usize>,
}

impl SingularBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    /// A basis vector in the full word basis.
    pub fn embedded(&self, j: usize) -> BTreeMap<usize, BigRational> {
        self.weight_words
            .iter()
            .zip(&self.vectors[j])
            .filter(|(_, x)| !x.is_zero())
            .map(|(&idx, x)| (idx, x.clone()))
            .collect()
    }

    /// Inner products of the basis vectors in the word basis.
    pub fn gram(&self) -> Vec<Vec<BigRational>> {
        let k = self.dimension();
        (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| {
                        self.vectors[a]
                            .iter()
                            .zip(&self.vectors[b])
                            .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
                    })
                    .collect()
            })
            .collect()
    }
}

/// Kernel of a matrix with `ncols` columns, by exact row reduction.
fn nullspace(mut rows: Vec<Vec<BigRational>>, ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(found) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let vectors = free
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -rows[row][f].clone();
            }
            v
        })
        .collect();
    (vectors, free)
}

/// Exact basis of the singular vectors of weight `mu` in `V^{⊗n}`.
pub fn singular_weight_basis(n: usize, r: usize, mu: &[usize]) -> Result<SingularBasis> {
    if mu.iter().sum::<usize>() != n {
        return Err(Error::SizeMismatch { expected: n, found: mu.iter().sum() });
    }
    if mu.len() > r {
        return Err(Error::OutOfRange(format!("weight has {} entries, alphabet {r}", mu.len())));
    }
    let mut full = mu.to_vec();
    full.resize(r, 0);
    let words = Word::all_of_weight(&full);
    let weight_words: Vec<usize> = words.iter().map(|w| word_index(w.letters(), r)).collect();
    let position: BTreeMap<usize, usize> = weight_words.iter().enumerate().map(|(p, &i)| (i, p)).collect();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for i in 1..r {
        let raise = gl_generator(i, i + 1, n, r)?;
        // rows indexed by the target words of this raising operator
        let mut targets: BTreeMap<usize, Vec<BigRational>> = BTreeMap::new();
        for (&src, &col) in &position {
            let v = BTreeMap::from([(src, BigRational::one())]);
            for (tgt, x) in raise.apply_sparse(&v) {
                let row = targets.entry(tgt).or_insert_with(|| vec![BigRational::zero(); words.len()]);
                row[col] += x;
            }
        }
        rows.extend(targets.into_values());
    }
    let (vectors, free) = nullspace(rows, words.len());
    Ok(SingularBasis { n, r, mu: full, weight_words, vectors, free })
}

/// Matrix of an operator preserving the singular space, in the given basis.
/// Fails when the operator does not preserve the space.
pub fn restrict(op: &LinearOperator, basis: &SingularBasis) -> Result<LinearOperator> {
    let k = basis.dimension();
    let mut out = LinearOperator::zero(k);
    for j in 0..k {
        let image = op.apply_sparse(&basis.embedded(j));
        let coeffs: Vec<BigRational> = basis
            .free
            .iter()
            .map(|&f| image.get(&basis.weight_words[f]).cloned().unwrap_or_else(BigRational::zero))
            .collect();
        let mut expected: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            for (idx, x) in basis.embedded(i) {
                let slot = expected.entry(idx).or_insert_with(BigRational::zero);
                *slot += c * x;
            }
        }
        expected.retain(|_, x| !x.is_zero());
        if expected != image {
            return Err(Error::Internal("operator does not preserve the singular space".into()));
        }
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                out.add_entry(i, j, c);
            }
        }
    }
    Ok(out)
}

/// Joint eigenvalues of the restricted Hamiltonians.
#[derive(Clone, Debug, Serialize)]
pub struct JointSpectrum {
    pub z: ParameterPoint,
    pub mu: Vec<usize>,
    pub dimension: usize,
    /// One tuple `(H_1, …, H_n)` per joint eigenvector, sorted.
    pub joint_spectrum: Vec<Vec<f64>>,
    pub simple: bool,
    /// Smallest distance between two tuples in the max norm, relative to
    /// the largest eigenvalue magnitude; `None` below dimension two.
    pub min_separation: Option<f64>,
    pub max_residual: f64,
    /// Eigenvectors in the word basis of the weight space, matching
    /// `joint_spectrum` entry by entry.
    #[serde(skip)]
    pub eigenvectors: Vec<Vec<f64>>,
    #[serde(skip)]
    pub weight_words: Vec<usize>,
}

pub fn joint_spectrum(z: &ParameterPoint, r: usize, mu: &[usize]) -> Result<JointSpectrum> {
    joint_spectrum_with_tolerance(z, r, mu, DEFAULT_TOLERANCE)
}

fn dense_f64(m: &[Vec<BigRational>]) -> DMatrix<f64> {
    let k = m.len();
    DMatrix::from_fn(k, k, |i, j| m[i][j].to_f64().unwrap_or(f64::NAN))
}

/// Restricts every `H_a(z)` exactly, checks that the restrictions commute,
/// then diagonalizes a generic combination in floating point.
pub fn joint_spectrum_with_tolerance(z: &ParameterPoint, r: usize, mu: &[usize], tol: f64) -> Result<JointSpectrum> {
    let n = z.len();
    let basis = singular_weight_basis(n, r, mu)?;
    let k = basis.dimension();
    let hs = hamiltonians(z, r)?;
    let restricted: Vec<LinearOperator> = hs.iter().map(|h| restrict(h, &basis)).collect::<Result<_>>()?;
    for a in 0..n {
        for b in a + 1..n {
            if !restricted[a].commutator(&restricted[b])?.is_zero() {
                return Err(Error::Internal(format!("restricted H_{} and H_{} do not commute", a + 1, b + 1)));
            }
        }
    }
    let mut out = JointSpectrum {
        z: z.clone(),
        mu: basis.mu.clone(),
        dimension: k,
        joint_spectrum: Vec::new(),
        simple: true,
        min_separation: None,
        max_residual: 0.0,
        eigenvectors: Vec::new(),
        weight_words: basis.weight_words.clone(),
    };
    if k == 0 {
        return Ok(out);
    }
    // symmetric forms G R_a, with G the Gram matrix of the basis
    let gram = LinearOperator::from_dense(basis.gram())?;
    let forms: Vec<DMatrix<f64>> =
        restricted.iter().map(|ra| gram.mul(ra).map(|m| dense_f64(&m.to_dense()))).collect::<Result<_>>()?;
    let g = dense_f64(&basis.gram());
    let chol = g.clone().cholesky().ok_or_else(|| Error::Internal("Gram matrix is not positive definite".into()))?;
    let l_inv = chol
        .l()
        .solve_lower_triangular(&DMatrix::identity(k, k))
        .ok_or_else(|| Error::Internal("singular Cholesky factor".into()))?;
    let sym: Vec<DMatrix<f64>> = forms
        .iter()
        .map(|m| {
            let s = &l_inv * m * l_inv.transpose();
            (&s + s.transpose()) * 0.5
        })
        .collect();
    let scale = sym.iter().map(|s| s.amax()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    // pick the combination whose eigenvalues are best separated
    let mut best: Option<(f64, SymmetricEigen<f64, nalgebra::Dyn>)> = None;
    for t in [0.618_033_988_75, std::f64::consts::SQRT_2, 0.35, 2.236_067_977_5, 0.83, 1.732_050_8] {
        let mut c = DMatrix::zeros(k, k);
        let mut weight: f64 = 1.0;
        for s in &sym {
            c += s * weight;
            weight *= t;
        }
        let eig = SymmetricEigen::new(c);
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(f64::total_cmp);
        let gap = vals.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        if best.as_ref().is_none_or(|(g, _)| gap > *g) {
            best = Some((gap, eig));
        }
    }
    let (_, eig) = best.expect("at least one candidate");
    let l_inv_t = l_inv.transpose();
    let mut rows: Vec<(Vec<f64>, Vec<f64>)> = Vec::with_capacity(k);
    for col in 0..k {
        let u: DVector<f64> = eig.eigenvectors.column(col).into_owned();
        let mut tuple = Vec::with_capacity(n);
        for s in &sym {
            let su = s * &u;
            let lam = u.dot(&su);
            let residual = (su - &u * lam).norm() / scale;
            out.max_residual = out.max_residual.max(residual);
            tuple.push(lam);
        }
        // back to weight-space word coordinates
        let coeffs = &l_inv_t * &u;
        let mut vector = vec![0.0; basis.weight_words.len()];
        for (j, c) in coeffs.iter().enumerate() {
            for (pos, x) in basis.vectors[j].iter().enumerate() {
                vector[pos] += c * x.to_f64().unwrap_or(f64::NAN);
            }
        }
        rows.push((tuple, vector));
    }
    rows.sort_by(|a, b| {
        a.0.iter().zip(&b.0).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
    });
    let mags = rows.iter().flat_map(|(t, _)| t.iter().map(|x| x.abs())).fold(0.0, f64::max);
    let rel = if mags > 0.0 { mags } else { 1.0 };
    if k >= 2 {
        let mut min_sep = f64::INFINITY;
        for i in 0..k {
            for j in i + 1..k {
                let d = rows[i].0.iter().zip(&rows[j].0).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
                min_sep = min_sep.min(d / rel);
            }
        }
        out.min_separation = Some(min_sep);
        out.simple = min_sep > tol;
    }
    if out.max_residual > tol.sqrt() {
        // the combination failed to split a joint eigenspace
        out.simple = false;
    }
    out.joint_spectrum = rows.iter().map(|(t, _)| t.clone()).collect();
    out.eigenvectors = rows.into_iter().map(|(_, v)| v).collect();
    Ok(out)
}
