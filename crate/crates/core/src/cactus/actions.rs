//! The three realizations of the cactus group action.

use crate::cactus::{permute_shape, reduce_to_s1q, CactusWord};
use crate::error::{Error, Result};
use crate::growth::decgd::{Column, Decgd};
use crate::jdt::{partial_evacuation, xi_letters};
use crate::tableaux::{Partition, SkewTableau};
use crate::words::{p_symbol_rows, Word};

/// Applies `s_pq` to a concatenated word whose blocks have the given sizes.
pub(crate) fn apply_generator_letters(letters: &mut [u32], sizes: &mut [usize], p: usize, q: usize, r: usize) {
    let start: usize = sizes[..p - 1].iter().sum();
    let span: usize = sizes[p - 1..q].iter().sum();
    let segment = &letters[start..start + span];
    // ξ(ξ(b_q) ⊗ … ⊗ ξ(b_p))
    let mut inner = Vec::with_capacity(span);
    let mut end = span;
    for &size in sizes[p - 1..q].iter().rev() {
        inner.extend(xi_letters(&segment[end - size..end], r));
        end -= size;
    }
    let out = xi_letters(&inner, r);
    letters[start..start + span].copy_from_slice(&out);
    sizes[p - 1..q].reverse();
}

/// Action on `b_1 ⊗ … ⊗ b_n` with `b_i` a word whose P-symbol has shape
/// `λ_i`. Returns the new factors and the permuted shape.
pub fn act_on_tensor(w: &CactusWord, b: &[Word], shape: &[Partition]) -> Result<(Vec<Word>, Vec<Partition>)> {
    if b.len() != shape.len() || w.n() > shape.len() {
        return Err(Error::SizeMismatch { expected: shape.len(), found: b.len() });
    }
    let r = b.iter().map(Word::r).max().unwrap_or(1);
    for (block, lam) in b.iter().zip(shape) {
        let p = p_symbol_rows(block.letters());
        let sh: Vec<usize> = p.iter().map(Vec::len).collect();
        if sh != lam.rows() {
            return Err(Error::InvalidWord(format!("factor {block} is not an element of B{lam}")));
        }
    }
    let mut letters: Vec<u32> = b.iter().flat_map(|x| x.letters().iter().copied()).collect();
    let mut sizes: Vec<usize> = shape.iter().map(Partition::size).collect();
    let mut shape = shape.to_vec();
    for &(p, q) in w.generators() {
        apply_generator_letters(&mut letters, &mut sizes, p, q, r);
        shape = permute_shape(&shape, p, q);
    }
    let mut out = Vec::with_capacity(sizes.len());
    let mut pos = 0;
    for size in sizes {
        out.push(Word::new(letters[pos..pos + size].to_vec(), r)?);
        pos += size;
    }
    Ok((out, shape))
}

/// Action on a word viewed in `B(□)^{⊗n}`.
pub fn act_on_word_boxes(w: &CactusWord, word: &Word) -> Result<Word> {
    if w.n() > word.len() {
        return Err(Error::SizeMismatch { expected: w.n(), found: word.len() });
    }
    let mut letters = word.letters().to_vec();
    let mut sizes = vec![1; letters.len()];
    for &(p, q) in w.generators() {
        apply_generator_letters(&mut letters, &mut sizes, p, q, word.r());
    }
    Word::new(letters, word.r())
}

/// Action on standard tableaux: `s_1q` is partial evacuation of the entries
/// `1..=q`; other generators go through [`reduce_to_s1q`].
pub fn act_on_syt(w: &CactusWord, t: &SkewTableau) -> Result<SkewTableau> {
    if w.n() > t.size() {
        return Err(Error::SizeMismatch { expected: w.n(), found: t.size() });
    }
    let mut cur = t.clone();
    for &(p, q) in w.generators() {
        for &(_, qq) in reduce_to_s1q(p, q).generators() {
            cur = partial_evacuation(&cur, qq)?;
        }
    }
    Ok(cur)
}

/// Flips the triangle of nodes between the walls `p` and `q + 1` and
/// regenerates the rest of the diagram from column `p`.
pub fn act_on_decgd(p: usize, q: usize, d: &Decgd) -> Result<Decgd> {
    let k = d.period();
    if !(1 <= p && p < q && q <= k) {
        return Err(Error::OutOfRange(format!("generator s_({p},{q}) outside J_{k}")));
    }
    let (p, wall) = (p as i64, q as i64 + 1);
    let kk = k as i64;
    let mut values = Vec::with_capacity(k + 1);
    let mut beta = Vec::with_capacity(k);
    for j in p..=p + kk {
        if j <= wall {
            values.push(d.gamma(p + wall - j, wall)?.clone());
        } else {
            values.push(d.gamma(p, j)?.clone());
        }
        if j < p + kk {
            if j < wall {
                beta.push(d.alpha(p + wall - j, wall)?.clone());
            } else {
                beta.push(d.beta(p, j)?.clone());
            }
        }
    }
    Decgd::from_column(d.frame(), p, Column { values, beta })
}

/// Applies a cactus word generator by generator.
pub fn act_on_decgd_word(w: &CactusWord, d: &Decgd) -> Result<Decgd> {
    let mut cur = d.clone();
    for &(p, q) in w.generators() {
        cur = act_on_decgd(p, q, &cur)?;
    }
    Ok(cur)
}
