//! The cactus group `J_n`, its actions on tensor words, standard tableaux and
//! decgds, and the embeddings used to compare them.
//!
//! A generator `(p, q)` reverses the labels `p..=q`. Cactus words list their
//! generators in application order: the first entry acts first.

mod actions;
mod equivariance;
mod orbits;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::Partition;

pub use actions::{act_on_decgd, act_on_decgd_word, act_on_syt, act_on_tensor, act_on_word_boxes};
pub use equivariance::{
    check_equivariance, default_frame_for, enumerate_decgds_over, iota_embed, jmath_embed, singular_elements,
    EquivarianceReport, StandardTuple,
};
pub use orbits::{orbits, OrbitReport};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CactusWord {
    n: usize,
    generators: Vec<(usize, usize)>,
}

impl fmt::Display for CactusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.generators.iter().map(|(p, q)| format!("s_{p}{q}")).collect();
        write!(f, "{}", parts.join(" then "))
    }
}

impl CactusWord {
    pub fn new(n: usize, generators: Vec<(usize, usize)>) -> Result<Self> {
        for &(p, q) in &generators {
            if !(1 <= p && p < q && q <= n) {
                return Err(Error::OutOfRange(format!("generator s_({p},{q}) outside J_{n}")));
            }
        }
        Ok(CactusWord { n, generators })
    }

    pub fn identity(n: usize) -> Self {
        CactusWord { n, generators: Vec::new() }
    }

    pub fn generator(n: usize, p: usize, q: usize) -> Result<Self> {
        CactusWord::new(n, vec![(p, q)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[(usize, usize)] {
        &self.generators
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &CactusWord) -> CactusWord {
        let mut generators = self.generators.clone();
        generators.extend_from_slice(&other.generators);
        CactusWord { n: self.n.max(other.n), generators }
    }

    /// Each generator is an involution, so the inverse is the reversal.
    pub fn inverse(&self) -> CactusWord {
        CactusWord { n: self.n, generators: self.generators.iter().rev().copied().collect() }
    }

    /// Rewrites every generator through [`reduce_to_s1q`].
    pub fn in_first_generators(&self) -> CactusWord {
        let generators = self.generators.iter().flat_map(|&(p, q)| reduce_to_s1q(p, q).generators).collect();
        CactusWord { n: self.n, generators }
    }
}

/// Image in `S_n`: `perm[a - 1]` is where label `a` ends up.
pub fn image_permutation(w: &CactusWord) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=w.n).collect();
    for &(p, q) in &w.generators {
        for x in perm.iter_mut() {
            if (p..=q).contains(x) {
                *x = p + q - *x;
            }
        }
    }
    perm
}

/// `s_pq = s_1q s_1(q-p+1) s_1q`; a word in the generators `s_1·`.
pub fn reduce_to_s1q(p: usize, q: usize) -> CactusWord {
    let n = q;
    if p == 1 {
        return CactusWord { n, generators: vec![(1, q)] };
    }
    CactusWord { n, generators: vec![(1, q), (1, q - p + 1), (1, q)] }
}

/// Block reversal in `J_ñ` lifting `s_1q` for factor sizes `λ•`: reverse the
/// first `q` blocks as a whole, then restore the order inside each block.
pub fn bar_s1q(q: usize, shape: &[Partition]) -> Result<CactusWord> {
    let n = shape.len();
    if q < 2 || q > n {
        return Err(Error::OutOfRange(format!("q = {q} outside 2..={n}")));
    }
    let sizes: Vec<usize> = shape.iter().map(Partition::size).collect();
    let total: usize = sizes.iter().sum();
    let span: usize = sizes[..q].iter().sum();
    let mut generators = Vec::new();
    if span >= 2 {
        generators.push((1, span));
    }
    let mut start = 1;
    for &size in sizes[..q].iter().rev() {
        if size >= 2 {
            generators.push((start, start + size - 1));
        }
        start += size;
    }
    CactusWord::new(total, generators)
}

/// Permutes a shape by the image of a single generator.
pub fn permute_shape<T: Clone>(shape: &[T], p: usize, q: usize) -> Vec<T> {
    let mut out = shape.to_vec();
    out[p - 1..q].reverse();
    out
}

/// Relations of the cactus group in `J_n` as pairs of words that must act
/// identically: involutivity, commutation of disjoint intervals, and
/// conjugation of nested intervals.
pub fn cactus_relations(n: usize) -> Vec<(CactusWord, CactusWord)> {
    let mut intervals = Vec::new();
    for p in 1..=n {
        for q in p + 1..=n {
            intervals.push((p, q));
        }
    }
    let mut out = Vec::new();
    for &(p, q) in &intervals {
        out.push((CactusWord { n, generators: vec![(p, q), (p, q)] }, CactusWord::identity(n)));
        for &(k, l) in &intervals {
            if q < k {
                out.push((
                    CactusWord { n, generators: vec![(k, l), (p, q)] },
                    CactusWord { n, generators: vec![(p, q), (k, l)] },
                ));
            }
            if p <= k && l <= q && (k, l) != (p, q) {
                let (u, v) = (p + q - l, p + q - k);
                // s_pq s_kl = s_uv s_pq as left actions
                out.push((
                    CactusWord { n, generators: vec![(k, l), (p, q)] },
                    CactusWord { n, generators: vec![(p, q), (u, v)] },
                ));
            }
        }
    }
    out
}
