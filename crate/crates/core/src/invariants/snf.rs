//! Smith normal form of sparse integer matrices.
//!
//! Unit pivots are eliminated first: singleton rows and columns cost no fill, and
//! the remaining unit pivots are taken in a Markowitz-like order (short columns,
//! sparse rows). Whatever survives has no unit entries and is small; it goes
//! through a dense min-pivot Smith reduction over arbitrary-precision integers.
//! Sparse elimination runs in checked `i32` and restarts over `BigInt` on overflow.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::par;

/// Column-major sparse integer matrix. Columns are sorted by row with no zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    /// Entries may come in any order; duplicates are summed and zeros dropped.
    pub fn new(nrows: usize, cols: Vec<Vec<(u32, i64)>>) -> Self {
        let cols = cols.into_iter().map(normalize_column).collect::<Vec<_>>();
        debug_assert!(cols
            .iter()
            .all(|c| c.iter().all(|&(r, _)| (r as usize) < nrows)));
        SparseMatrix { nrows, cols }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            cols: vec![Vec::new(); ncols],
        }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|j| {
                (0..nrows)
                    .filter(|&i| rows[i][j] != 0)
                    .map(|i| (i as u32, rows[i][j]))
                    .collect()
            })
            .collect();
        SparseMatrix { nrows, cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols.len()]; self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for &(i, v) in c {
                out[i as usize][j] = v;
            }
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<(u32, i64)>] {
        &self.cols
    }

    /// `self · other`, or `None` on overflow.
    pub fn checked_mul(&self, other: &SparseMatrix) -> Option<SparseMatrix> {
        assert_eq!(self.ncols(), other.nrows);
        let mut cols = Vec::with_capacity(other.ncols());
        for c in &other.cols {
            let mut acc: Vec<(u32, i64)> = Vec::new();
            for &(k, b) in c {
                for &(i, a) in &self.cols[k as usize] {
                    acc.push((i, a.checked_mul(b)?));
                }
            }
            acc.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(u32, i64)> = Vec::with_capacity(acc.len());
            for (i, v) in acc {
                match merged.last_mut() {
                    Some(last) if last.0 == i => last.1 = last.1.checked_add(v)?,
                    _ => merged.push((i, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            cols.push(merged);
        }
        Some(SparseMatrix {
            nrows: self.nrows,
            cols,
        })
    }
}

pub(crate) fn normalize_column(mut c: Vec<(u32, i64)>) -> Vec<(u32, i64)> {
    c.sort_unstable_by_key(|e| e.0);
    let mut out: Vec<(u32, i64)> = Vec::with_capacity(c.len());
    for (r, v) in c {
        match out.last_mut() {
            Some(last) if last.0 == r => last.1 += v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// Rank and invariant factors. The diagonal is `rank − nontrivial.len()` ones
/// followed by `nontrivial`, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    pub nontrivial: Vec<BigInt>,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let ones = self.rank - self.nontrivial.len();
        std::iter::repeat_n(BigInt::one(), ones)
            .chain(self.nontrivial.iter().cloned())
            .collect()
    }

    pub fn divisibility_holds(&self) -> bool {
        let d = self.diagonal();
        d.iter().all(|x| x.is_positive()) && d.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
    }
}

pub fn smith_normal_form(m: &SparseMatrix) -> SmithForm {
    smith_from_columns(m.nrows, m.ncols(), |j| m.cols[j].clone())
}

pub fn smith_normal_form_dense(rows: &[Vec<i64>]) -> SmithForm {
    smith_normal_form(&SparseMatrix::from_dense(rows))
}

/// Smith form of the matrix whose `j`-th column is `column(j)` (sorted by row, no
/// zeros). Columns are read straight into the elimination arena, so the matrix is
/// never held twice; `column` is called again only on a restart after overflow.
pub fn smith_from_columns<F>(nrows: usize, ncols: usize, column: F) -> SmithForm
where
    F: Fn(usize) -> Vec<(u32, i64)> + Sync + Send,
{
    let narrow = Eliminator::<i32>::load(nrows, ncols, |j| {
        column(j)
            .into_iter()
            .map(|(r, v)| i32::try_from(v).ok().map(|v| (r, v)))
            .collect()
    });
    let residual = match narrow.and_then(Eliminator::run) {
        Some(r) => r,
        None => Eliminator::<BigInt>::load(nrows, ncols, |j| {
            Some(
                column(j)
                    .into_iter()
                    .map(|(r, v)| (r, BigInt::from(v)))
                    .collect(),
            )
        })
        .and_then(Eliminator::run)
        .expect("bigint elimination cannot overflow"),
    };
    let diag = dense_smith(residual.dense);
    let nontrivial = diag.iter().filter(|d| !d.is_one()).cloned().collect();
    SmithForm {
        rank: residual.unit_rank + diag.len(),
        nontrivial,
    }
}

trait Coeff: Clone + PartialEq + Send + Sync {
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `self − a·b`, `None` on overflow.
    fn sub_mul(&self, a: &Self, b: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn neg_of(&self, b: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Coeff for i32 {
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn sub_mul(&self, a: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(a.checked_mul(*b)?)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn neg_of(&self, b: &Self) -> Option<Self> {
        0i32.checked_sub(self.checked_mul(*b)?)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn sub_mul(&self, a: &Self, b: &Self) -> Option<Self> {
        Some(self - a * b)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn neg_of(&self, b: &Self) -> Option<Self> {
        Some(-(self * b))
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct Residual {
    unit_rank: usize,
    dense: Vec<Vec<BigInt>>,
}

const LOAD_CHUNK: usize = 1 << 16;

/// Columns live in one arena; a column that grows is moved to the arena's end.
/// The row-to-column index is the initial pattern in CSR form plus a side list of
/// columns that acquired a row through fill-in.
struct Eliminator<T> {
    arena: Vec<(u32, T)>,
    start: Vec<usize>,
    len: Vec<u32>,
    col_alive: Vec<bool>,
    row_start: Vec<usize>,
    row_index: Vec<u32>,
    row_extra: HashMap<u32, Vec<u32>>,
    row_count: Vec<u32>,
    row_alive: Vec<bool>,
    /// Entries in alive columns; the rest of the arena is garbage.
    live: usize,
    rank: usize,
    row_queue: Vec<u32>,
    col_queue: Vec<u32>,
    heap: BinaryHeap<Reverse<(u32, u32)>>,
}

impl<T: Coeff> Eliminator<T> {
    fn load<F>(nrows: usize, ncols: usize, column: F) -> Option<Self>
    where
        F: Fn(usize) -> Option<Vec<(u32, T)>> + Sync + Send,
    {
        let mut arena = Vec::new();
        let mut start = Vec::with_capacity(ncols);
        let mut len = Vec::with_capacity(ncols);
        let mut row_count = vec![0u32; nrows];
        for chunk in (0..ncols).step_by(LOAD_CHUNK) {
            let end = (chunk + LOAD_CHUNK).min(ncols);
            let cols = par::map_range(end - chunk, |j| column(chunk + j));
            for c in cols {
                let c = c?;
                start.push(arena.len());
                len.push(c.len() as u32);
                for (r, _) in &c {
                    row_count[*r as usize] += 1;
                }
                arena.extend(c);
            }
        }
        let live = arena.len();
        let mut row_start = vec![0usize; nrows + 1];
        for r in 0..nrows {
            row_start[r + 1] = row_start[r] + row_count[r] as usize;
        }
        let mut fill = row_start.clone();
        let mut row_index = vec![0u32; row_start[nrows]];
        for j in 0..ncols {
            for (r, _) in &arena[start[j]..start[j] + len[j] as usize] {
                row_index[fill[*r as usize]] = j as u32;
                fill[*r as usize] += 1;
            }
        }
        Some(Eliminator {
            arena,
            start,
            len,
            col_alive: vec![true; ncols],
            row_start,
            row_index,
            row_extra: HashMap::new(),
            row_count,
            row_alive: vec![true; nrows],
            live,
            rank: 0,
            row_queue: Vec::new(),
            col_queue: Vec::new(),
            heap: BinaryHeap::new(),
        })
    }

    fn col(&self, c: u32) -> &[(u32, T)] {
        let s = self.start[c as usize];
        &self.arena[s..s + self.len[c as usize] as usize]
    }

    fn run(mut self) -> Option<Residual> {
        let nrows = self.row_count.len();
        let ncols = self.len.len();
        self.row_queue = (0..nrows as u32)
            .filter(|&r| self.row_count[r as usize] == 1)
            .collect();
        self.col_queue = (0..ncols as u32)
            .filter(|&c| self.len[c as usize] <= 1)
            .collect();
        self.cascade()?;
        for c in 0..ncols {
            if self.col_alive[c] && self.len[c] > 0 {
                self.heap.push(Reverse((self.len[c], c as u32)));
            }
        }
        while let Some(Reverse((len, c))) = self.heap.pop() {
            let cu = c as usize;
            if !self.col_alive[cu] {
                continue;
            }
            if self.len[cu] != len {
                self.heap.push(Reverse((self.len[cu], c)));
                continue;
            }
            let best = self
                .col(c)
                .iter()
                .filter(|(_, v)| v.is_unit())
                .min_by_key(|(r, _)| self.row_count[*r as usize])
                .map(|(r, _)| *r);
            if let Some(r) = best {
                self.pivot(r, c)?;
                self.cascade()?;
                self.tidy();
            }
        }
        Some(self.residual())
    }

    /// Drops arena garbage and stale heap entries once they dominate.
    fn tidy(&mut self) {
        const SLACK: usize = 1 << 20;
        if self.arena.len() > 2 * self.live + SLACK {
            let mut fresh = Vec::with_capacity(self.live + self.live / 2);
            for c in 0..self.len.len() {
                let (s, l) = (self.start[c], self.len[c] as usize);
                self.start[c] = fresh.len();
                fresh.extend_from_slice(&self.arena[s..s + l]);
            }
            self.arena = fresh;
        }
        if self.heap.len() > 2 * self.live + SLACK {
            let heap = (0..self.len.len())
                .filter(|&c| self.col_alive[c] && self.len[c] > 0)
                .map(|c| Reverse((self.len[c], c as u32)))
                .collect();
            self.heap = heap;
        }
    }

    fn kill_column(&mut self, c: u32) {
        self.col_alive[c as usize] = false;
        let (s, l) = (self.start[c as usize], self.len[c as usize] as usize);
        self.live -= l;
        self.len[c as usize] = 0;
        for i in s..s + l {
            let r = self.arena[i].0 as usize;
            self.row_count[r] -= 1;
            if self.row_count[r] == 1 && self.row_alive[r] {
                self.row_queue.push(r as u32);
            }
        }
    }

    fn entry(&self, c: u32, r: u32) -> Option<&T> {
        let col = self.col(c);
        col.binary_search_by_key(&r, |e| e.0)
            .ok()
            .map(|i| &col[i].1)
    }

    /// Alive columns other than `skip` with a nonzero in row `r`.
    fn columns_in_row(&self, r: u32, skip: u32) -> Vec<u32> {
        let ru = r as usize;
        let fixed = &self.row_index[self.row_start[ru]..self.row_start[ru + 1]];
        let extra = self.row_extra.get(&r).map_or(&[][..], Vec::as_slice);
        let mut out: Vec<u32> = fixed
            .iter()
            .chain(extra)
            .copied()
            .filter(|&c| c != skip && self.col_alive[c as usize] && self.entry(c, r).is_some())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn remove_entry(&mut self, c: u32, r: u32) {
        let (s, l) = (self.start[c as usize], self.len[c as usize] as usize);
        let col = &mut self.arena[s..s + l];
        let pos = col
            .binary_search_by_key(&r, |e| e.0)
            .expect("entry present");
        col[pos..].rotate_left(1);
        self.len[c as usize] -= 1;
        self.live -= 1;
    }

    fn cascade(&mut self) -> Option<()> {
        loop {
            if let Some(c) = self.col_queue.pop() {
                let cu = c as usize;
                if !self.col_alive[cu] {
                    continue;
                }
                match self.len[cu] {
                    0 => self.col_alive[cu] = false,
                    1 if self.col(c)[0].1.is_unit() => {
                        let r = self.col(c)[0].0;
                        for other in self.columns_in_row(r, c) {
                            self.remove_entry(other, r);
                            if self.len[other as usize] <= 1 {
                                self.col_queue.push(other);
                            }
                        }
                        self.row_alive[r as usize] = false;
                        self.row_count[r as usize] = 1;
                        self.kill_column(c);
                        self.rank += 1;
                    }
                    _ => {}
                }
            } else if let Some(r) = self.row_queue.pop() {
                let ru = r as usize;
                if !self.row_alive[ru] || self.row_count[ru] != 1 {
                    continue;
                }
                let cs = self.columns_in_row(r, u32::MAX);
                let Some(&c) = cs.first() else { continue };
                if self.entry(c, r).is_some_and(|v| v.is_unit()) {
                    self.row_alive[ru] = false;
                    self.kill_column(c);
                    self.rank += 1;
                }
            } else {
                return Some(());
            }
        }
    }

    /// Clears row `r` with the unit entry in column `c`, then drops both.
    fn pivot(&mut self, r: u32, c: u32) -> Option<()> {
        let v = self.entry(c, r).unwrap().clone();
        let pivot_col: Vec<(u32, T)> = self.col(c).to_vec();
        for other in self.columns_in_row(r, c) {
            let a = self.entry(other, r).unwrap().clone();
            // other -= (a / v) · pivot, with 1/v = v for a unit
            let factor = a.mul(&v)?;
            let old = self.col(other);
            let mut merged = Vec::with_capacity(old.len() + pivot_col.len());
            let mut added = Vec::new();
            let mut dropped = Vec::new();
            let (mut i, mut j) = (0, 0);
            while i < old.len() || j < pivot_col.len() {
                let take_old = j == pivot_col.len() || (i < old.len() && old[i].0 < pivot_col[j].0);
                let take_new = i == old.len() || (j < pivot_col.len() && pivot_col[j].0 < old[i].0);
                if take_old {
                    merged.push(old[i].clone());
                    i += 1;
                } else if take_new {
                    merged.push((pivot_col[j].0, pivot_col[j].1.neg_of(&factor)?));
                    added.push(pivot_col[j].0);
                    j += 1;
                } else {
                    let val = old[i].1.sub_mul(&factor, &pivot_col[j].1)?;
                    if val.is_nil() {
                        dropped.push(old[i].0);
                    } else {
                        merged.push((old[i].0, val));
                    }
                    i += 1;
                    j += 1;
                }
            }
            for row in added {
                self.row_count[row as usize] += 1;
                self.row_extra.entry(row).or_default().push(other);
            }
            for row in dropped {
                let cnt = &mut self.row_count[row as usize];
                *cnt -= 1;
                if *cnt == 1 && self.row_alive[row as usize] {
                    self.row_queue.push(row);
                }
            }
            let ou = other as usize;
            self.live = self.live + merged.len() - self.len[ou] as usize;
            if merged.len() > self.len[ou] as usize {
                self.start[ou] = self.arena.len();
                self.arena.extend_from_slice(&merged);
            } else {
                let s = self.start[ou];
                self.arena[s..s + merged.len()].clone_from_slice(&merged);
            }
            self.len[ou] = merged.len() as u32;
            if merged.len() <= 1 {
                self.col_queue.push(other);
            }
            self.heap.push(Reverse((merged.len() as u32, other)));
        }
        self.row_alive[r as usize] = false;
        self.kill_column(c);
        self.rank += 1;
        Some(())
    }

    fn residual(self) -> Residual {
        let live_cols: Vec<u32> = (0..self.len.len() as u32)
            .filter(|&c| self.col_alive[c as usize] && self.len[c as usize] > 0)
            .collect();
        let mut row_index = vec![usize::MAX; self.row_alive.len()];
        let mut nrows = 0;
        for &c in &live_cols {
            for (r, _) in self.col(c) {
                if row_index[*r as usize] == usize::MAX {
                    row_index[*r as usize] = nrows;
                    nrows += 1;
                }
            }
        }
        let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; nrows];
        for (j, &c) in live_cols.iter().enumerate() {
            for (r, v) in self.col(c) {
                dense[row_index[*r as usize]][j] = v.to_big();
            }
        }
        Residual {
            unit_rank: self.rank,
            dense,
        }
    }
}

/// Nonzero invariant factors of a dense matrix, positive and in divisibility order.
pub(crate) fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_entry(&a, t..m, t..n) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    row_sub(&mut a, i, t, &q, t);
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                // a remainder is smaller than the pivot: move it in and repeat
                let best_col = (t + 1..m)
                    .filter(|&i| !a[i][t].is_zero())
                    .min_by_key(|&i| a[i][t].abs());
                let best_row = (t + 1..n)
                    .filter(|&j| !a[t][j].is_zero())
                    .min_by_key(|&j| a[t][j].abs());
                match (best_col, best_row) {
                    (Some(i), Some(j)) if a[t][j].abs() < a[i][t].abs() => swap_cols(&mut a, t, j),
                    (Some(i), _) => a.swap(t, i),
                    (None, Some(j)) => swap_cols(&mut a, t, j),
                    (None, None) => unreachable!(),
                }
                continue;
            }
            let p = a[t][t].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in t..n {
                        let x = a[i][j].clone();
                        a[t][j] += x;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn min_entry(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if a[i][j].abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

fn row_sub(a: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt, from: usize) {
    let n = a[target].len();
    for j in from..n {
        let d = q * &a[source][j];
        a[target][j] -= d;
    }
}

/// Converts invariant factors for reporting.
pub(crate) fn factors_to_u64(f: &[BigInt]) -> Option<Vec<u64>> {
    f.iter().map(|x| x.to_u64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_u64(rows: &[Vec<i64>]) -> Vec<u64> {
        let f = smith_normal_form_dense(rows);
        assert!(f.divisibility_holds());
        factors_to_u64(&f.diagonal()).unwrap()
    }

    #[test]
    fn two_three_becomes_one_six() {
        assert_eq!(diag_u64(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn zero_and_identity() {
        assert_eq!(smith_normal_form(&SparseMatrix::zeros(3, 4)).rank, 0);
        assert_eq!(
            diag_u64(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            vec![1, 1, 1]
        );
        assert_eq!(smith_normal_form(&SparseMatrix::zeros(0, 0)).rank, 0);
    }

    #[test]
    fn projective_plane_style_torsion() {
        // boundary of a 2-cell attached by degree two
        assert_eq!(diag_u64(&[vec![2]]), vec![2]);
        assert_eq!(diag_u64(&[vec![4, 6], vec![6, 4]]), vec![2, 10]);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let rows = vec![vec![big, big - 1], vec![big - 1, big - 2]];
        // det = big(big−2) − (big−1)² = −1
        assert_eq!(diag_u64(&rows), vec![1, 1]);
    }

    #[test]
    fn sparse_product() {
        let a = SparseMatrix::from_dense(&[vec![1, -1], vec![0, 1]]);
        let b = SparseMatrix::from_dense(&[vec![1], vec![1]]);
        assert_eq!(
            a.checked_mul(&b).unwrap().to_dense(),
            vec![vec![0], vec![1]]
        );
    }
}
