//! Words as crystal elements, RSK, the star involution, crystal operators and
//! Littlewood-Richardson coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::tableaux::{Partition, SkewShape, SkewTableau};

/// A word over the alphabet `1..=r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
    r: usize,
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r <= 9 {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            write!(f, "{:?}", self.letters)
        }
    }
}

impl Word {
    pub fn new(letters: Vec<u32>, r: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l as usize > r) {
            return Err(Error::InvalidWord(format!("letter {bad} outside 1..={r}")));
        }
        Ok(Word { letters, r })
    }

    /// Parses a digit string such as `"2113"`.
    pub fn parse(s: &str, r: usize) -> Result<Self> {
        let letters = s
            .chars()
            .map(|ch| ch.to_digit(10).ok_or_else(|| Error::InvalidWord(format!("'{ch}' is not a digit"))))
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters, r)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self) -> Vec<usize> {
        weight_of(&self.letters, self.r)
    }

    /// Subword on the positions `start..end`, same alphabet.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word { letters: self.letters[start..end].to_vec(), r: self.r }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters, r: self.r.max(other.r) }
    }

    /// All words of length `n` over `1..=r` in lexicographic order.
    pub fn all(n: usize, r: usize) -> Vec<Word> {
        let mut out = Vec::with_capacity(r.pow(n as u32));
        let mut cur = vec![1u32; n];
        loop {
            out.push(Word { letters: cur.clone(), r });
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if (cur[i] as usize) < r {
                    cur[i] += 1;
                    for x in cur.iter_mut().skip(i + 1) {
                        *x = 1;
                    }
                    break;
                }
            }
        }
    }

    /// All words of weight `mu`, in lexicographic order.
    pub fn all_of_weight(mu: &[usize]) -> Vec<Word> {
        fn go(rem: &mut Vec<usize>, cur: &mut Vec<u32>, n: usize, out: &mut Vec<Vec<u32>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for i in 0..rem.len() {
                if rem[i] > 0 {
                    rem[i] -= 1;
                    cur.push(i as u32 + 1);
                    go(rem, cur, n, out);
                    cur.pop();
                    rem[i] += 1;
                }
            }
        }
        let n = mu.iter().sum();
        let mut out = Vec::new();
        go(&mut mu.to_vec(), &mut Vec::with_capacity(n), n, &mut out);
        out.into_iter().map(|letters| Word { letters, r: mu.len() }).collect()
    }
}

pub(crate) fn weight_of(letters: &[u32], r: usize) -> Vec<usize> {
    let mut w = vec![0; r];
    for &l in letters {
        w[l as usize - 1] += 1;
    }
    w
}

/// P- and Q-symbols of a word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RskPair {
    pub p: SkewTableau,
    pub q: SkewTableau,
}

/// Row insertion of `x`; returns the row index (0-based) where a box was added.
fn row_insert(rows: &mut Vec<Vec<u32>>, mut x: u32) -> usize {
    for (i, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(pos) => x = std::mem::replace(&mut row[pos], x),
            None => {
                row.push(x);
                return i;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Row-insertion RSK on raw letters.
pub fn rsk_rows(letters: &[u32]) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (k, &x) in letters.iter().enumerate() {
        let row = row_insert(&mut p, x);
        if row == q.len() {
            q.push(Vec::new());
        }
        q[row].push(k as u32 + 1);
    }
    (p, q)
}

/// P-symbol only.
pub fn p_symbol_rows(letters: &[u32]) -> Vec<Vec<u32>> {
    let mut p = Vec::new();
    for &x in letters {
        row_insert(&mut p, x);
    }
    p
}

/// Q-symbol only.
pub fn q_symbol_rows(letters: &[u32]) -> Vec<Vec<u32>> {
    rsk_rows(letters).1
}

pub(crate) fn straight(rows: Vec<Vec<u32>>) -> SkewTableau {
    let shape = Partition::from_rows_unchecked(rows.iter().map(|r| r.len()).collect());
    SkewTableau::from_raw_unchecked(SkewShape::straight(shape), rows)
}

pub fn rsk(w: &Word) -> RskPair {
    let (p, q) = rsk_rows(&w.letters);
    RskPair { p: straight(p), q: straight(q) }
}

pub fn p_symbol(letters: &[u32]) -> SkewTableau {
    straight(p_symbol_rows(letters))
}

pub fn q_symbol(letters: &[u32]) -> SkewTableau {
    straight(q_symbol_rows(letters))
}

/// Inverse RSK on raw rows; `q` must be standard of the same shape.
pub fn rsk_inverse_rows(p: &[Vec<u32>], q: &[Vec<u32>]) -> Result<Vec<u32>> {
    let shape_p: Vec<usize> = p.iter().map(|r| r.len()).collect();
    let shape_q: Vec<usize> = q.iter().map(|r| r.len()).collect();
    if shape_p != shape_q {
        return Err(Error::InvalidPair(format!("shapes {shape_p:?} and {shape_q:?} differ")));
    }
    let n: usize = shape_p.iter().sum();
    let mut p: Vec<Vec<u32>> = p.to_vec();
    let mut q: Vec<Vec<u32>> = q.to_vec();
    let mut out = vec![0u32; n];
    for k in (1..=n as u32).rev() {
        let row = q
            .iter()
            .position(|r| r.last() == Some(&k))
            .ok_or_else(|| Error::InvalidPair(format!("recording tableau has no corner {k}")))?;
        q[row].pop();
        let mut x = p[row].pop().ok_or_else(|| Error::InvalidPair("empty row".into()))?;
        for i in (0..row).rev() {
            let pos = p[i]
                .iter()
                .rposition(|&y| y < x)
                .ok_or_else(|| Error::InvalidPair("insertion tableau is not semistandard".into()))?;
            x = std::mem::replace(&mut p[i][pos], x);
        }
        if q[row].is_empty() {
            q.pop();
            p.pop();
        }
        out[k as usize - 1] = x;
    }
    Ok(out)
}

pub fn rsk_inverse(pair: &RskPair, r: usize) -> Result<Word> {
    if !pair.p.is_straight() || !pair.q.is_straight() {
        return Err(Error::InvalidPair("tableaux must have straight shape".into()));
    }
    pair.q.require_standard().map_err(|e| Error::InvalidPair(e.to_string()))?;
    let letters = rsk_inverse_rows(pair.p.raw_rows(), pair.q.raw_rows())?;
    Word::new(letters, r)
}

/// `x_n^* ... x_1^*` with `x^* = r + 1 - x`.
pub fn star(w: &Word) -> Word {
    Word { letters: star_letters(&w.letters, w.r), r: w.r }
}

pub(crate) fn star_letters(letters: &[u32], r: usize) -> Vec<u32> {
    letters.iter().rev().map(|&x| r as u32 + 1 - x).collect()
}

/// Unmatched positions under the bracketing rule: `i+1` opens and `i`
/// closes. Returns (unmatched `i` positions, unmatched `i+1` positions).
fn unmatched(letters: &[u32], i: u32) -> (Vec<usize>, Vec<usize>) {
    let mut open: Vec<usize> = Vec::new();
    let mut closers = Vec::new();
    for (pos, &x) in letters.iter().enumerate() {
        if x == i + 1 {
            open.push(pos);
        } else if x == i && open.pop().is_none() {
            closers.push(pos);
        }
    }
    (closers, open)
}

fn check_index(w: &Word, i: usize) -> Result<()> {
    if i == 0 || i >= w.r {
        return Err(Error::OutOfRange(format!("crystal index {i} outside 1..{}", w.r)));
    }
    Ok(())
}

/// Raising operator: the leftmost unmatched `i+1` becomes `i`.
pub fn crystal_e(w: &Word, i: usize) -> Result<Option<Word>> {
    check_index(w, i)?;
    let (_, opens) = unmatched(&w.letters, i as u32);
    Ok(opens.first().map(|&pos| {
        let mut letters = w.letters.clone();
        letters[pos] = i as u32;
        Word { letters, r: w.r }
    }))
}

/// Lowering operator: the rightmost unmatched `i` becomes `i+1`.
pub fn crystal_f(w: &Word, i: usize) -> Result<Option<Word>> {
    check_index(w, i)?;
    let (closers, _) = unmatched(&w.letters, i as u32);
    Ok(closers.last().map(|&pos| {
        let mut letters = w.letters.clone();
        letters[pos] = i as u32 + 1;
        Word { letters, r: w.r }
    }))
}

/// Every raising operator vanishes.
pub fn is_highest_weight(w: &Word) -> bool {
    is_highest_weight_letters(&w.letters, w.r)
}

pub(crate) fn is_highest_weight_letters(letters: &[u32], r: usize) -> bool {
    (1..r as u32).all(|i| unmatched(letters, i).1.is_empty())
}

/// Highest-weight words of weight `mu`, lexicographically sorted.
pub fn enumerate_singular(n: usize, r: usize, mu: &[usize]) -> Result<Vec<Word>> {
    if mu.iter().sum::<usize>() != n {
        return Err(Error::SizeMismatch { expected: n, found: mu.iter().sum() });
    }
    if mu.len() > r {
        return Err(Error::OutOfRange(format!("weight has {} entries, alphabet {r}", mu.len())));
    }
    let mut full = mu.to_vec();
    full.resize(r, 0);
    Ok(Word::all_of_weight(&full).into_iter().filter(is_highest_weight).collect())
}

/// Number of LR tableaux of shape `outer/inner` with content `content`.
fn lr_fillings(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    let cells: Vec<(usize, usize)> = {
        // reverse reading order: rows top to bottom, right to left
        let mut v = Vec::new();
        for r in 1..=outer.num_rows() {
            for c in (inner.part(r) + 1..=outer.part(r)).rev() {
                v.push((r, c));
            }
        }
        v
    };
    let nrows = outer.num_rows();
    let mut grid: Vec<Vec<usize>> = (1..=nrows).map(|r| vec![0; outer.part(r) + 1]).collect();
    let mut counts = vec![0usize; content.num_rows() + 1];
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        inner: &Partition,
        content: &Partition,
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let above = if r > 1 && c > inner.part(r - 1) { grid[r - 2][c] } else { 0 };
        let right = grid[r - 1].get(c + 1).copied().filter(|&v| v > 0);
        let mut total = 0;
        for v in (above + 1)..=content.num_rows() {
            if let Some(rv) = right {
                if v > rv {
                    break;
                }
            }
            if counts[v] >= content.part(v) || (v > 1 && counts[v] + 1 > counts[v - 1]) {
                continue;
            }
            counts[v] += 1;
            grid[r - 1][c] = v;
            total += go(idx + 1, cells, inner, content, grid, counts);
            grid[r - 1][c] = 0;
            counts[v] -= 1;
        }
        total
    }
    go(0, &cells, inner, content, &mut grid, &mut counts)
}

/// Partitions `lam` with `lo ⊆ lam ⊆ hi` and `|lam| = size`.
fn partitions_between(lo: &Partition, hi: &Partition, size: usize) -> Vec<Partition> {
    fn go(i: usize, rem: usize, lo: &Partition, hi: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let n = hi.num_rows();
        if i == n {
            if rem == 0 {
                out.push(Partition::new(cur.clone()).unwrap());
            }
            return;
        }
        let cap = if i == 0 { hi.part(1) } else { hi.part(i + 1).min(cur[i - 1]) };
        let floor = lo.part(i + 1);
        if floor > cap {
            return;
        }
        for v in floor..=cap.min(floor + rem) {
            cur.push(v);
            go(i + 1, rem - (v - floor), lo, hi, cur, out);
            cur.pop();
        }
    }
    let Some(rem) = size.checked_sub(lo.size()) else { return Vec::new() };
    let mut out = Vec::new();
    go(0, rem, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Multiplicity of `target` in the tensor product of the `parts`, by the
/// iterated Littlewood-Richardson rule.
pub fn lr_coefficient(target: &Partition, parts: &[Partition]) -> Result<u64> {
    let total: usize = parts.iter().map(Partition::size).sum();
    if total != target.size() {
        return Err(Error::SizeMismatch { expected: target.size(), found: total });
    }
    let mut current: BTreeMap<Partition, u64> = BTreeMap::from([(Partition::empty(), 1)]);
    let mut size = 0;
    for part in parts {
        size += part.size();
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for (nu, mult) in &current {
            for lam in partitions_between(nu, target, size) {
                let c = lr_fillings(&lam, nu, part);
                if c > 0 {
                    *next.entry(lam).or_insert(0) += mult * c;
                }
            }
        }
        current = next;
    }
    Ok(current.get(target).copied().unwrap_or(0))
}
