use std::cmp::Ordering;

use super::Vertex;

/// Simplices of one fixed dimension, stored as sorted fixed-width records.
///
/// Each record is a strictly increasing vertex tuple; records are in lexicographic
/// order, so lookup is a binary search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplexTable {
    width: usize,
    data: Vec<Vertex>,
}

impl SimplexTable {
    pub fn empty(width: usize) -> Self {
        SimplexTable {
            width,
            data: Vec::new(),
        }
    }

    /// Builds a table from arbitrary records, sorting and deduplicating them.
    pub fn from_unsorted(width: usize, data: Vec<Vertex>) -> Self {
        assert!(width > 0 && data.len().is_multiple_of(width));
        SimplexTable {
            width,
            data: crate::par::sort_dedup_records(width, data),
        }
    }

    /// Builds a table from records that are already sorted and distinct.
    pub(crate) fn from_sorted(width: usize, data: Vec<Vertex>) -> Self {
        debug_assert!(width > 0 && data.len().is_multiple_of(width));
        let t = SimplexTable { width, data };
        debug_assert!(t.is_sorted());
        t
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        if self.width == 0 {
            0
        } else {
            self.data.len() / self.width
        }
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> &[Vertex] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    pub fn iter(&self) -> std::slice::ChunksExact<'_, Vertex> {
        self.data.chunks_exact(self.width.max(1))
    }

    pub fn raw(&self) -> &[Vertex] {
        &self.data
    }

    pub fn position(&self, simplex: &[Vertex]) -> Option<usize> {
        if simplex.len() != self.width {
            return None;
        }
        let (mut lo, mut hi) = (0usize, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(simplex) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains(&self, simplex: &[Vertex]) -> bool {
        self.position(simplex).is_some()
    }

    fn is_sorted(&self) -> bool {
        let n = self.len();
        (1..n).all(|i| self.get(i - 1) < self.get(i))
            && self.iter().all(|s| s.windows(2).all(|w| w[0] < w[1]))
    }
}

impl SimplexTable {
    pub(crate) const fn empty_const() -> Self {
        SimplexTable {
            width: 1,
            data: Vec::new(),
        }
    }
}
