//! The embeddings ι and ȷ, and the check that the bijection between singular
//! tensor elements and decgds is equivariant.

use std::collections::HashSet;

use serde::Serialize;

use crate::cactus::actions::{act_on_decgd, act_on_decgd_word, act_on_tensor, act_on_word_boxes};
use crate::cactus::{bar_s1q, CactusWord};
use crate::error::{Error, Result};
use crate::growth::{syt_to_decgd, Decgd, IntervalFunction};
use crate::jdt::DualEquivClass;
use crate::tableaux::{standard_tableaux, Partition, RectangleFrame, SkewShape, SkewTableau};
use crate::words::{
    enumerate_singular, is_highest_weight, lr_coefficient, p_symbol_rows, q_symbol, q_symbol_rows, rsk_inverse_rows,
    Word,
};

/// One standard tableau per tensor factor, used as fixed recording tableaux.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StandardTuple {
    tableaux: Vec<SkewTableau>,
}

impl StandardTuple {
    pub fn new(tableaux: Vec<SkewTableau>) -> Result<Self> {
        for t in &tableaux {
            if !t.is_straight() || t.size() == 0 {
                return Err(Error::InvalidTableau("factors need non-empty straight shapes".into()));
            }
            t.require_standard()?;
        }
        Ok(StandardTuple { tableaux })
    }

    /// Row-reading standard tableau on every factor.
    pub fn row_reading(shape: &[Partition]) -> Result<Self> {
        StandardTuple::new(shape.iter().map(SkewTableau::row_reading_standard).collect())
    }

    pub fn tableaux(&self) -> &[SkewTableau] {
        &self.tableaux
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn shape(&self) -> Vec<Partition> {
        self.tableaux.iter().map(|t| t.outer().clone()).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.tableaux.iter().map(SkewTableau::size).collect()
    }

    /// The tuple after `s_1q` reverses its first `q` entries.
    pub fn after_s1q(&self, q: usize) -> StandardTuple {
        let mut tableaux = self.tableaux.clone();
        tableaux[..q].reverse();
        StandardTuple { tableaux }
    }

    fn check_block_shapes(&self, blocks: &[Word]) -> Result<()> {
        if blocks.len() != self.len() {
            return Err(Error::SizeMismatch { expected: self.len(), found: blocks.len() });
        }
        for (b, t) in blocks.iter().zip(&self.tableaux) {
            let sh: Vec<usize> = p_symbol_rows(b.letters()).iter().map(Vec::len).collect();
            if sh != t.outer().rows() {
                return Err(Error::InvalidWord(format!("factor {b} does not have shape {}", t.outer())));
            }
        }
        Ok(())
    }
}

/// Frame used when none is given: `ℓ(μ)` rows and `μ_1` columns, widened by
/// one column when `μ` is a rectangle so the complement is non-empty.
pub fn default_frame_for(mu: &Partition) -> Result<RectangleFrame> {
    if mu.is_empty() {
        return Err(Error::InvalidPartition("the target weight must be non-empty".into()));
    }
    let r = mu.num_rows();
    let rect = mu.rows().iter().all(|&x| x == mu.first_row());
    let cols = mu.first_row() + usize::from(rect);
    RectangleFrame::new(r, r + cols)
}

/// Singular elements of weight `mu` in the tensor product, each realized as
/// blocks whose Q-symbols are the tableaux of `tuple`.
pub fn singular_elements(tuple: &StandardTuple, mu: &Partition, r: usize) -> Result<Vec<Vec<Word>>> {
    let sizes = tuple.sizes();
    let total: usize = sizes.iter().sum();
    let words = enumerate_singular(total, r, mu.rows())?;
    let mut out = Vec::new();
    for w in words {
        let blocks = split_blocks(&w, &sizes)?;
        let matches = blocks.iter().zip(tuple.tableaux()).all(|(b, t)| &q_symbol(b.letters()) == t);
        if matches {
            out.push(blocks);
        }
    }
    Ok(out)
}

fn split_blocks(w: &Word, sizes: &[usize]) -> Result<Vec<Word>> {
    let mut out = Vec::with_capacity(sizes.len());
    let mut pos = 0;
    for &size in sizes {
        if pos + size > w.len() {
            return Err(Error::SizeMismatch { expected: pos + size, found: w.len() });
        }
        out.push(w.slice(pos, pos + size));
        pos += size;
    }
    Ok(out)
}

/// The word whose blocks have the P-symbols of `b` and the Q-symbols of
/// `tuple`. Fails unless the result is highest weight.
pub fn iota_embed(tuple: &StandardTuple, b: &[Word]) -> Result<Word> {
    tuple.check_block_shapes(b)?;
    let r = b.iter().map(Word::r).max().unwrap_or(1);
    let mut letters = Vec::new();
    for (block, t) in b.iter().zip(tuple.tableaux()) {
        let p = p_symbol_rows(block.letters());
        letters.extend(rsk_inverse_rows(&p, t.raw_rows())?);
    }
    let w = Word::new(letters, r)?;
    if !is_highest_weight(&w) {
        return Err(Error::NotSingular(format!("{w} is not highest weight")));
    }
    Ok(w)
}

/// Checks that a decgd shape is `(λ•, μ^c)` or, when `μ` fills the frame, `(λ•)`.
fn check_decgd_shape(tuple: &StandardTuple, d: &Decgd) -> Result<()> {
    let n = tuple.len();
    let k = d.period();
    let closed = k == n && d.gamma(1, n as i64 + 1)? == &d.frame().lambda();
    if !(k == n + 1 || closed) || d.shape()[..n] != tuple.shape()[..] {
        return Err(Error::InvalidDecgd(format!(
            "decgd shape {:?} is incompatible with the tuple shape {:?}",
            d.shape(),
            tuple.shape()
        )));
    }
    Ok(())
}

/// Refines a decgd of shape `(λ•, μ^c)` to shape `(□^ñ, μ^c)` by lifting
/// each class along column `1` to its member rectifying to the matching
/// tableau of `tuple`.
pub fn jmath_embed(tuple: &StandardTuple, d: &Decgd) -> Result<Decgd> {
    check_decgd_shape(tuple, d)?;
    let mut chain = vec![Partition::empty()];
    for (j, t) in tuple.tableaux().iter().enumerate() {
        let class: &DualEquivClass = d.beta(1, j as i64 + 1)?;
        let member = class.member_rectifying_to(t)?;
        chain.extend(member.to_chain().into_iter().skip(1));
    }
    syt_to_decgd(&SkewTableau::from_chain(&chain)?, d.frame())
}

/// Block sizes of the coarsening from `(□^ñ, μ^c)` to `(λ•, μ^c)`.
fn coarsening(tuple: &StandardTuple, frame: &RectangleFrame) -> Result<IntervalFunction> {
    let mut m = tuple.sizes();
    let total: usize = m.iter().sum();
    // the complement stays a single part
    if total < frame.area() {
        m.push(1);
    }
    IntervalFunction::new(m)
}

/// Composite bijection from singular elements to decgds.
fn to_decgd(tuple: &StandardTuple, b: &[Word], frame: &RectangleFrame) -> Result<Decgd> {
    let w = iota_embed(tuple, b)?;
    let q = SkewTableau::straight(q_symbol_rows(w.letters()))?;
    syt_to_decgd(&q, frame)?.coarsen(&coarsening(tuple, frame)?)
}

/// All decgds of shape `(λ•, μ^c)`, obtained by coarsening the refined
/// diagrams of every standard tableau of shape `μ`.
pub fn enumerate_decgds_over(frame: &RectangleFrame, shape: &[Partition], mu: &Partition) -> Result<Vec<Decgd>> {
    frame.check_fits(mu)?;
    let tuple = StandardTuple::row_reading(shape)?;
    if tuple.sizes().iter().sum::<usize>() != mu.size() {
        return Err(Error::SizeMismatch { expected: mu.size(), found: tuple.sizes().iter().sum() });
    }
    let m = coarsening(&tuple, frame)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for t in standard_tableaux(&SkewShape::straight(mu.clone())) {
        let d = syt_to_decgd(&t, frame)?.coarsen(&m)?;
        if d.shape()[..shape.len()] == shape[..] && seen.insert(d.clone()) {
            out.push(d);
        }
    }
    out.sort_by_cached_key(|d| serde_json::to_string(d).expect("serializable"));
    Ok(out)
}

/// Outcome of [`check_equivariance`].
#[derive(Clone, Debug, Serialize)]
pub struct EquivarianceReport {
    pub r: usize,
    pub d: usize,
    pub shape: Vec<Partition>,
    pub mu: Partition,
    pub lr_coefficient: u64,
    pub singular_count: usize,
    pub decgd_count: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl EquivarianceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies, for every `s_1q` and every singular element, that the left
/// square (ι against the block reversal), the right square (ȷ against the
/// block reversal), the refined square on `(□^ñ, μ^c)` and the composite
/// bijection all commute, and that the composite is a bijection onto the
/// decgds of shape `(λ•, μ^c)`.
pub fn check_equivariance(
    frame: Option<&RectangleFrame>,
    shape: &[Partition],
    mu: &Partition,
) -> Result<EquivarianceReport> {
    let frame = match frame {
        Some(f) => *f,
        None => default_frame_for(mu)?,
    };
    frame.check_fits(mu)?;
    let tuple = StandardTuple::row_reading(shape)?;
    let total: usize = tuple.sizes().iter().sum();
    if total != mu.size() {
        return Err(Error::SizeMismatch { expected: mu.size(), found: total });
    }
    let r = frame.r();
    let n = shape.len();
    let lr = lr_coefficient(mu, shape)?;
    let singular = singular_elements(&tuple, mu, r)?;
    let decgds = enumerate_decgds_over(&frame, shape, mu)?;
    let mut report = EquivarianceReport {
        r,
        d: frame.d(),
        shape: shape.to_vec(),
        mu: mu.clone(),
        lr_coefficient: lr,
        singular_count: singular.len(),
        decgd_count: decgds.len(),
        checks: 0,
        failures: Vec::new(),
    };
    if singular.len() as u64 != lr || decgds.len() as u64 != lr {
        report.failures.push(format!(
            "counts differ: {} singular elements, {} decgds, coefficient {lr}",
            singular.len(),
            decgds.len()
        ));
    }
    let images: Vec<Decgd> = singular.iter().map(|b| to_decgd(&tuple, b, &frame)).collect::<Result<_>>()?;
    let distinct: HashSet<&Decgd> = images.iter().collect();
    let targets: HashSet<&Decgd> = decgds.iter().collect();
    report.checks += 1;
    if distinct.len() != images.len() || distinct != targets {
        report.failures.push("the composite map is not a bijection onto the decgds".into());
    }
    for d in &decgds {
        report.checks += 1;
        let lifted = jmath_embed(&tuple, d)?;
        if &lifted.coarsen(&coarsening(&tuple, &frame)?)? != d {
            report.failures.push(format!("refining then coarsening changes {}", serde_json::to_string(d).unwrap()));
        }
    }
    for q in 2..=n {
        let gen = CactusWord::generator(n, 1, q)?;
        let bar = bar_s1q(q, shape)?;
        let moved = tuple.after_s1q(q);
        for b in &singular {
            report.checks += 4;
            let (sb, _) = act_on_tensor(&gen, b, shape)?;
            let w = iota_embed(&tuple, b)?;
            // left square
            let left = iota_embed(&moved, &sb)?;
            let right = act_on_word_boxes(&bar, &w)?;
            if left != right {
                report.failures.push(format!("left square fails for s_1{q} on {w}: {left} vs {right}"));
            }
            // composite
            let lhs = to_decgd(&moved, &sb, &frame)?;
            let rhs = act_on_decgd(1, q, &to_decgd(&tuple, b, &frame)?)?;
            if lhs != rhs {
                report.failures.push(format!("composite square fails for s_1{q} on {w}"));
            }
            // refined square on (□^ñ, μ^c)
            let qw = SkewTableau::straight(q_symbol_rows(w.letters()))?;
            let q_moved = SkewTableau::straight(q_symbol_rows(right.letters()))?;
            let fine = act_on_decgd_word(&bar, &syt_to_decgd(&qw, &frame)?)?;
            if fine != syt_to_decgd(&q_moved, &frame)? {
                report.failures.push(format!("refined square fails for s_1{q} on {w}"));
            }
            // right square
            let gamma = to_decgd(&tuple, b, &frame)?;
            let lhs = jmath_embed(&moved, &act_on_decgd(1, q, &gamma)?)?;
            let rhs = act_on_decgd_word(&bar, &jmath_embed(&tuple, &gamma)?)?;
            if lhs != rhs {
                report.failures.push(format!("right square fails for s_1{q} on {w}"));
            }
        }
    }
    Ok(report)
}
