//! Jeu de taquin, evacuation, the Schützenberger involution and dual
//! equivalence classes.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::growth::fill_rectangle;
use crate::tableaux::{Cell, Partition, SkewShape, SkewTableau};
use crate::words::{self, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SlideDirection {
    Inward,
    Outward,
}

/// One slide; returns the new tableau and the cell where the hole ended.
pub fn jdt_slide_tracked(t: &SkewTableau, corner: Cell) -> Result<(SkewTableau, Cell, SlideDirection)> {
    let shape = t.shape();
    let (r, c) = corner;
    let mut rows: Vec<Vec<u32>> = t.raw_rows().to_vec();
    let at = |rows: &Vec<Vec<u32>>, (r, c): Cell| -> Option<u32> {
        if r == 0 || c == 0 {
            return None;
        }
        rows.get(r - 1).and_then(|row| row.get(c - 1)).copied().filter(|&v| v > 0)
    };
    if shape.inner_corners().contains(&corner) {
        let mut hole = (r, c);
        loop {
            let right = at(&rows, (hole.0, hole.1 + 1));
            let below = at(&rows, (hole.0 + 1, hole.1));
            let next = match (right, below) {
                (None, None) => break,
                (Some(_), None) => (hole.0, hole.1 + 1),
                (None, Some(_)) => (hole.0 + 1, hole.1),
                (Some(a), Some(b)) => {
                    if b <= a {
                        (hole.0 + 1, hole.1)
                    } else {
                        (hole.0, hole.1 + 1)
                    }
                }
            };
            rows[hole.0 - 1][hole.1 - 1] = rows[next.0 - 1][next.1 - 1];
            rows[next.0 - 1][next.1 - 1] = 0;
            hole = next;
        }
        rows[hole.0 - 1].pop();
        while rows.last().is_some_and(|row| row.is_empty()) {
            rows.pop();
        }
        let inner = shape.inner.with_cell_removed(corner).expect("inner corner");
        let outer = shape
            .outer
            .with_cell_removed(hole)
            .ok_or_else(|| Error::Internal("slide left a non-corner hole".into()))?;
        let out = SkewTableau::from_raw_unchecked(SkewShape::new(outer, inner)?, rows);
        Ok((out, hole, SlideDirection::Inward))
    } else if shape.outer_cocorners().contains(&corner) {
        if r > rows.len() {
            rows.push(Vec::new());
        }
        rows[r - 1].push(0);
        let mut hole = (r, c);
        let inner = &shape.inner;
        loop {
            let left = if hole.1 > 1 && !inner.contains_cell((hole.0, hole.1 - 1)) {
                at(&rows, (hole.0, hole.1 - 1))
            } else {
                None
            };
            let above = if hole.0 > 1 && !inner.contains_cell((hole.0 - 1, hole.1)) {
                at(&rows, (hole.0 - 1, hole.1))
            } else {
                None
            };
            let next = match (left, above) {
                (None, None) => break,
                (Some(_), None) => (hole.0, hole.1 - 1),
                (None, Some(_)) => (hole.0 - 1, hole.1),
                (Some(a), Some(b)) => {
                    if b >= a {
                        (hole.0 - 1, hole.1)
                    } else {
                        (hole.0, hole.1 - 1)
                    }
                }
            };
            rows[hole.0 - 1][hole.1 - 1] = rows[next.0 - 1][next.1 - 1];
            rows[next.0 - 1][next.1 - 1] = 0;
            hole = next;
        }
        let outer = shape.outer.with_cell_added(corner).expect("outer co-corner");
        let inner =
            inner.with_cell_added(hole).ok_or_else(|| Error::Internal("slide stopped at a non-corner".into()))?;
        let out = SkewTableau::from_raw_unchecked(SkewShape::new(outer, inner)?, rows);
        Ok((out, hole, SlideDirection::Outward))
    } else {
        Err(Error::InvalidCorner { row: r, col: c })
    }
}

/// One jeu de taquin slide into an inner corner (inward) or an outer
/// co-corner (outward).
pub fn jdt_slide(t: &SkewTableau, corner: Cell) -> Result<SkewTableau> {
    jdt_slide_tracked(t, corner).map(|(out, _, _)| out)
}

/// Straight-shape tableau slide equivalent to `t`.
pub fn rectify(t: &SkewTableau) -> SkewTableau {
    let mut cur = t.clone();
    while let Some(&corner) = cur.shape().inner_corners().last() {
        cur = jdt_slide(&cur, corner).expect("inner corner");
    }
    cur
}

/// Rectification with a caller-chosen order: `pick` selects among the
/// available inner corners.
pub fn rectify_with(t: &SkewTableau, mut pick: impl FnMut(&[Cell]) -> usize) -> SkewTableau {
    let mut cur = t.clone();
    loop {
        let corners = cur.shape().inner_corners();
        if corners.is_empty() {
            return cur;
        }
        let idx = pick(&corners).min(corners.len() - 1);
        cur = jdt_slide(&cur, corners[idx]).expect("inner corner");
    }
}

/// Schützenberger evacuation by delete, slide and record.
pub fn evacuation(t: &SkewTableau) -> Result<SkewTableau> {
    if !t.is_straight() {
        return Err(Error::InvalidTableau("evacuation needs a straight shape".into()));
    }
    t.require_standard()?;
    let n = t.size() as u32;
    let mut out: Vec<Vec<u32>> = t.outer().rows().iter().map(|&len| vec![0; len]).collect();
    let mut cur = t.clone();
    for k in 1..=n {
        // remove the smallest entry, which sits at (1,1), and slide into it
        let mut rows = cur.raw_rows().to_vec();
        rows[0][0] = 0;
        let holed = SkewTableau::from_raw_unchecked(
            SkewShape::new(cur.outer().clone(), Partition::from_rows_unchecked(vec![1]))?,
            rows,
        );
        let (next, hole, _) = jdt_slide_tracked(&holed, (1, 1))?;
        out[hole.0 - 1][hole.1 - 1] = n + 1 - k;
        cur = next;
    }
    Ok(SkewTableau::from_raw_unchecked(t.shape().clone(), out))
}

/// Evacuates the entries `1..=q` and leaves the rest in place.
pub fn partial_evacuation(t: &SkewTableau, q: usize) -> Result<SkewTableau> {
    if !t.is_straight() {
        return Err(Error::InvalidTableau("partial evacuation needs a straight shape".into()));
    }
    t.require_standard()?;
    if q == 0 || q > t.size().max(1) {
        return Err(Error::OutOfRange(format!("q = {q} outside 1..={}", t.size())));
    }
    let sub = evacuation(&t.restrict(1, q as u32))?;
    let mut rows = t.raw_rows().to_vec();
    for ((r, c), v) in sub.entries() {
        rows[r - 1][c - 1] = v;
    }
    Ok(SkewTableau::from_raw_unchecked(t.shape().clone(), rows))
}

/// Schützenberger involution on a straight semistandard tableau over `1..=r`.
pub fn xi_ssyt(p: &SkewTableau, r: usize) -> Result<SkewTableau> {
    if !p.is_straight() {
        return Err(Error::InvalidTableau("xi needs a straight shape".into()));
    }
    if p.max_entry() as usize > r {
        return Err(Error::InvalidTableau(format!("entries exceed alphabet {r}")));
    }
    let word = words::star_letters(&p.column_reading_word(), r);
    Ok(words::p_symbol(&word))
}

/// `ξ(w) = RSK⁻¹(ξP, Q)`.
pub fn xi_word(w: &Word) -> Word {
    Word::new(xi_letters(w.letters(), w.r()), w.r()).expect("alphabet preserved")
}

pub(crate) fn xi_letters(letters: &[u32], r: usize) -> Vec<u32> {
    let (p, q) = words::rsk_rows(letters);
    let pw: Vec<u32> = {
        let t = words::straight(p);
        words::star_letters(&t.column_reading_word(), r)
    };
    let xp = words::p_symbol_rows(&pw);
    words::rsk_inverse_rows(&xp, &q).expect("same shape")
}

fn check_same_shape(s: &SkewTableau, t: &SkewTableau) -> Result<()> {
    if s.shape() != t.shape() {
        return Err(Error::InvalidShape(format!("{} differs from {}", s.shape(), t.shape())));
    }
    s.require_standard()?;
    t.require_standard()
}

/// Q-symbol of the column reading word.
pub fn reading_q_symbol(t: &SkewTableau) -> Vec<Vec<u32>> {
    words::q_symbol_rows(&t.column_reading_word())
}

/// Dual equivalence via Q-symbols of column reading words.
pub fn dual_equivalent(s: &SkewTableau, t: &SkewTableau) -> Result<bool> {
    check_same_shape(s, t)?;
    Ok(reading_q_symbol(s) == reading_q_symbol(t))
}

/// Slide-sequence definition of dual equivalence: both tableaux must produce
/// the same shapes under every sequence of at most `|outer|` slides. Fewer
/// slides are not enough once the inner shape separates the cells, since
/// the pieces only interact after they have been slid together.
pub fn dual_equivalent_by_slides(s: &SkewTableau, t: &SkewTableau) -> Result<bool> {
    check_same_shape(s, t)?;
    let mut oracle = SlideOracle::default();
    let depth = s.outer().size();
    Ok(oracle.class_id(s, depth) == oracle.class_id(t, depth))
}

/// Memoized slide oracle. Two standard tableaux of one shape share a class
/// at depth `d` when every slide sends them to a common shape and to a common
/// class at depth `d - 1`.
#[derive(Default)]
pub struct SlideOracle {
    memo: HashMap<(SkewShape, usize), HashMap<SkewTableau, usize>>,
}

impl SlideOracle {
    /// Slide corners considered from a shape: all inner corners and all outer
    /// co-corners.
    fn corners(shape: &SkewShape) -> Vec<Cell> {
        let mut corners = shape.inner_corners();
        corners.extend(shape.outer_cocorners());
        corners
    }

    pub fn class_id(&mut self, t: &SkewTableau, depth: usize) -> usize {
        let key = (t.shape().clone(), depth);
        if !self.memo.contains_key(&key) {
            let classes = self.classes(t.shape(), depth);
            self.memo.insert(key.clone(), classes);
        }
        self.memo[&key][t]
    }

    fn classes(&mut self, shape: &SkewShape, depth: usize) -> HashMap<SkewTableau, usize> {
        let members = crate::tableaux::standard_tableaux(shape);
        if depth == 0 {
            return members.into_iter().map(|m| (m, 0)).collect();
        }
        let corners = Self::corners(shape);
        let mut signatures: HashMap<Vec<(SkewShape, usize)>, usize> = HashMap::new();
        let mut out = HashMap::new();
        for m in members {
            let sig: Vec<(SkewShape, usize)> = corners
                .iter()
                .map(|&c| {
                    let s = jdt_slide(&m, c).expect("valid corner");
                    let id = self.class_id(&s, depth - 1);
                    (s.shape().clone(), id)
                })
                .collect();
            let next = signatures.len();
            let id = *signatures.entry(sig).or_insert(next);
            out.insert(m, id);
        }
        out
    }
}

/// A dual equivalence class, stored through its canonical representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DualEquivClass {
    rep: SkewTableau,
}

impl DualEquivClass {
    /// Class of a standard tableau.
    pub fn of(t: &SkewTableau) -> Result<Self> {
        t.require_standard()?;
        let q = reading_q_symbol(t);
        let shape = Partition::from_rows_unchecked(q.iter().map(Vec::len).collect());
        let target = SkewTableau::row_reading_standard(&shape);
        let rep = lift_with_q(t, &q, &target)?;
        Ok(DualEquivClass { rep })
    }

    /// The unique class on a shape whose rectification has normal or
    /// antinormal shape.
    pub fn from_shape_unique(shape: &SkewShape) -> Result<Self> {
        let t = crate::tableaux::standard_tableaux(shape)
            .into_iter()
            .next()
            .ok_or_else(|| Error::InvalidShape(format!("no standard filling of {shape}")))?;
        DualEquivClass::of(&t)
    }

    pub fn shape(&self) -> &SkewShape {
        self.rep.shape()
    }

    pub fn inner(&self) -> &Partition {
        self.rep.inner()
    }

    pub fn outer(&self) -> &Partition {
        self.rep.outer()
    }

    pub fn size(&self) -> usize {
        self.rep.size()
    }

    pub fn representative(&self) -> &SkewTableau {
        &self.rep
    }

    /// Shape of the rectification of any member.
    pub fn rectified_shape(&self) -> Partition {
        rectify(&self.rep).outer().clone()
    }

    /// The unique member whose rectification is `target`.
    pub fn member_rectifying_to(&self, target: &SkewTableau) -> Result<SkewTableau> {
        let q = reading_q_symbol(&self.rep);
        lift_with_q(&self.rep, &q, target)
    }

    /// Chain of shapes from `inner` to `outer` along the representative.
    pub fn chain(&self) -> Vec<Partition> {
        self.rep.to_chain()
    }

    pub fn contains(&self, t: &SkewTableau) -> bool {
        t.shape() == self.shape() && t.is_standard() && reading_q_symbol(t) == reading_q_symbol(&self.rep)
    }
}

/// The tableau of the shape of `t` whose reading word has Q-symbol `q` and
/// whose rectification is `target`.
fn lift_with_q(t: &SkewTableau, q: &[Vec<u32>], target: &SkewTableau) -> Result<SkewTableau> {
    let target_shape: Vec<usize> = target.outer().rows().to_vec();
    let q_shape: Vec<usize> = q.iter().map(Vec::len).collect();
    if target_shape != q_shape || !target.is_straight() {
        return Err(Error::InvalidShape(format!(
            "target shape {:?} differs from rectified shape {:?}",
            target_shape, q_shape
        )));
    }
    let word = words::rsk_inverse_rows(target.raw_rows(), q)?;
    t.refill_in_column_reading_order(&word)
        .map_err(|e| Error::Internal(format!("lifted word does not fit the shape: {e}")))
}

pub fn canonical_class(t: &SkewTableau) -> Result<DualEquivClass> {
    DualEquivClass::of(t)
}

/// Shuffle of two adjacent classes: grow the rectangle with west edge
/// `first` and north edge `second`, then read the south and east edges.
pub fn shuffle(first: &DualEquivClass, second: &DualEquivClass) -> Result<(DualEquivClass, DualEquivClass)> {
    if second.inner() != first.outer() {
        return Err(Error::InvalidShape(format!("{} does not extend {}", second.shape(), first.shape())));
    }
    shuffle_tableaux(first.representative(), second.representative())
}

/// Shuffle computed from explicit representatives.
pub fn shuffle_tableaux(first: &SkewTableau, second: &SkewTableau) -> Result<(DualEquivClass, DualEquivClass)> {
    let (south, east) = shuffle_chains(&first.to_chain(), &second.to_chain())?;
    let s = SkewTableau::from_chain(&south)?;
    let e = SkewTableau::from_chain(&east)?;
    Ok((DualEquivClass::of(&s)?, DualEquivClass::of(&e)?))
}

/// South and east chains of the rectangle grown from a west and a north chain.
pub fn shuffle_chains(west: &[Partition], north: &[Partition]) -> Result<(Vec<Partition>, Vec<Partition>)> {
    let g = fill_rectangle(west, north)?;
    let width = north.len() as i64 - 1;
    let height = west.len() as i64 - 1;
    Ok((g.horizontal_chain(0, 0, -width)?, g.vertical_chain(-width, 0, height)?))
}

/// All tableaux reachable from `t` by slides, together with their shapes,
/// used by tests to sanity check slide equivalence.
pub fn slide_closure_shapes(t: &SkewTableau, depth: usize) -> BTreeSet<SkewShape> {
    let mut out = BTreeSet::new();
    let mut frontier = vec![t.clone()];
    out.insert(t.shape().clone());
    for _ in 0..depth {
        let mut next = Vec::new();
        for cur in &frontier {
            for corner in cur.shape().inner_corners() {
                let s = jdt_slide(cur, corner).unwrap();
                if out.insert(s.shape().clone()) {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::standard_tableaux;

    fn t(rows: &[&[u32]]) -> SkewTableau {
        SkewTableau::straight(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn sk(inner: &[usize], rows: &[&[u32]]) -> SkewTableau {
        SkewTableau::new(Partition::new(inner.to_vec()).unwrap(), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn slide_examples() {
        // 2 at (1,2), 1 at (2,1); the smaller entry moves up
        let s = sk(&[1], &[&[2], &[1]]);
        let out = jdt_slide(&s, (1, 1)).unwrap();
        assert_eq!(out, t(&[&[1, 2]]));
        assert!(matches!(jdt_slide(&t(&[&[1, 2]]), (1, 1)), Err(Error::InvalidCorner { row: 1, col: 1 })));
        assert!(matches!(jdt_slide(&s, (3, 3)), Err(Error::InvalidCorner { .. })));
    }

    #[test]
    fn outward_then_inward_restores() {
        let s = sk(&[1], &[&[2, 3], &[1]]);
        for corner in s.shape().outer_cocorners() {
            let (out, hole, dir) = jdt_slide_tracked(&s, corner).unwrap();
            assert_eq!(dir, SlideDirection::Outward);
            assert_eq!(jdt_slide(&out, hole).unwrap(), s);
        }
    }

    #[test]
    fn rectify_examples() {
        assert_eq!(rectify(&t(&[&[1, 3], &[2]])), t(&[&[1, 3], &[2]]));
        let s = sk(&[1], &[&[1], &[2]]);
        assert_eq!(rectify(&s), t(&[&[1], &[2]]));
    }

    #[test]
    fn evacuation_examples() {
        assert_eq!(evacuation(&t(&[&[1]])).unwrap(), t(&[&[1]]));
        assert_eq!(evacuation(&t(&[&[1, 2], &[3]])).unwrap(), t(&[&[1, 3], &[2]]));
        assert_eq!(evacuation(&t(&[&[1, 2, 3, 4]])).unwrap(), t(&[&[1, 2, 3, 4]]));
        assert!(evacuation(&sk(&[1], &[&[1]])).is_err());
    }

    #[test]
    fn partial_evacuation_examples() {
        let x = t(&[&[1, 2], &[3]]);
        assert_eq!(partial_evacuation(&x, 1).unwrap(), x);
        assert_eq!(partial_evacuation(&x, 2).unwrap(), x);
        assert_eq!(partial_evacuation(&x, 3).unwrap(), t(&[&[1, 3], &[2]]));
        assert!(partial_evacuation(&x, 4).is_err());
    }

    #[test]
    fn evacuation_is_an_involution() {
        for n in 0..=8 {
            for lam in Partition::all_of_size(n) {
                for x in standard_tableaux(&SkewShape::straight(lam)) {
                    assert_eq!(evacuation(&evacuation(&x).unwrap()).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi_word(&Word::parse("1", 2).unwrap()), Word::parse("2", 2).unwrap());
        assert_eq!(xi_word(&Word::parse("11", 2).unwrap()), Word::parse("22", 2).unwrap());
        assert_eq!(xi_ssyt(&t(&[&[1]]), 2).unwrap(), t(&[&[2]]));
        // superstandard (2,1) over [3] goes to the lowest weight tableau
        assert_eq!(xi_ssyt(&t(&[&[1, 1], &[2]]), 3).unwrap(), t(&[&[2, 3], &[3]]));
    }

    #[test]
    fn class_examples() {
        let a = t(&[&[1, 2], &[3]]);
        let b = t(&[&[1, 3], &[2]]);
        assert!(dual_equivalent(&a, &b).unwrap());
        assert_eq!(canonical_class(&a).unwrap(), canonical_class(&b).unwrap());
        assert_eq!(canonical_class(&a).unwrap().representative(), &a);
        assert!(dual_equivalent(&a, &t(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn disconnected_shapes_separate_classes() {
        // (2,1)\(1): two separated boxes; the two fillings are not dual equivalent
        let a = sk(&[1], &[&[1], &[2]]);
        let b = sk(&[1], &[&[2], &[1]]);
        assert!(!dual_equivalent(&a, &b).unwrap());
        assert!(!dual_equivalent_by_slides(&a, &b).unwrap());
        assert_ne!(canonical_class(&a).unwrap(), canonical_class(&b).unwrap());
    }

    #[test]
    fn shuffle_examples() {
        let box_over = |outer: &[usize], inner: &[usize]| {
            DualEquivClass::from_shape_unique(&SkewShape::new(p(outer), p(inner)).unwrap()).unwrap()
        };
        let (a, b) = shuffle(&box_over(&[1], &[]), &box_over(&[2], &[1])).unwrap();
        assert_eq!((a, b), (box_over(&[1], &[]), box_over(&[2], &[1])));
        let (a, b) = shuffle(&box_over(&[1], &[]), &box_over(&[1, 1], &[1])).unwrap();
        assert_eq!((a, b), (box_over(&[1], &[]), box_over(&[1, 1], &[1])));
        let (a, b) = shuffle(&box_over(&[2, 1], &[2]), &box_over(&[3, 1], &[2, 1])).unwrap();
        assert_eq!((a, b), (box_over(&[3], &[2]), box_over(&[3, 1], &[3])));
        assert!(shuffle(&box_over(&[1], &[]), &box_over(&[3], &[2])).is_err());
    }
}
