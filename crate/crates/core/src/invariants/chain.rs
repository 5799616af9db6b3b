use super::snf::{normalize_column, SparseMatrix};
use crate::complex::{drop_index, SimplicialComplex};
use crate::error::{Error, Result};
use crate::par;

/// Anything with finitely many cells per dimension and an integral boundary.
pub trait CellComplex: Sync {
    fn cell_count(&self, k: usize) -> usize;

    /// Highest dimension holding cells, `None` when there are none.
    fn top_dimension(&self) -> Option<usize>;

    /// `Some(b)` when only the `b`-skeleton of a larger complex is materialized.
    fn skeleton_bound(&self) -> Option<usize> {
        None
    }

    /// Boundary of the `i`-th `k`-cell (`k ≥ 1`) in the `(k−1)`-cell basis.
    fn boundary(&self, k: usize, i: usize) -> Vec<(u32, i64)>;

    fn boundary_matrix(&self, k: usize) -> SparseMatrix {
        if k == 0 {
            return SparseMatrix::zeros(0, self.cell_count(0));
        }
        let cols = par::map_range(self.cell_count(k), |i| self.boundary(k, i));
        SparseMatrix::new(self.cell_count(k - 1), cols)
    }
}

impl CellComplex for SimplicialComplex {
    fn cell_count(&self, k: usize) -> usize {
        self.count(k)
    }

    fn top_dimension(&self) -> Option<usize> {
        usize::try_from(self.dimension()).ok()
    }

    /// Faces of a sorted simplex get sign `(−1)^j` for the omitted position `j`.
    fn boundary(&self, k: usize, i: usize) -> Vec<(u32, i64)> {
        let s = self.simplices(k).get(i);
        let faces = self.simplices(k - 1);
        let mut col: Vec<(u32, i64)> = (0..s.len())
            .map(|j| {
                let row = faces
                    .position(&drop_index(s, j))
                    .expect("complex is closed");
                (row as u32, if j % 2 == 0 { 1 } else { -1 })
            })
            .collect();
        col.sort_unstable_by_key(|e| e.0);
        col
    }
}

/// Verifies `∂_k ∘ ∂_{k+1} = 0` column by column.
pub fn check_boundary_squared<C: CellComplex + ?Sized>(c: &C, k: usize) -> Result<()> {
    if k == 0 || c.cell_count(k + 1) == 0 {
        return Ok(());
    }
    let ok = par::map_range(c.cell_count(k + 1), |i| {
        let mut acc: Vec<(u32, i64)> = Vec::new();
        for (face, a) in c.boundary(k + 1, i) {
            for (ff, b) in c.boundary(k, face as usize) {
                acc.push((ff, a * b));
            }
        }
        normalize_column(acc).is_empty()
    });
    if ok.into_iter().all(|b| b) {
        Ok(())
    } else {
        Err(Error::BoundarySquare(k))
    }
}

/// Per-dimension cell counts and boundary matrices, checked for `∂∘∂ = 0`.
#[derive(Clone, Debug)]
pub struct IntegerChainComplex {
    pub counts: Vec<usize>,
    /// `boundaries[k]` is `∂_k`; `boundaries[0]` is the zero map.
    pub boundaries: Vec<SparseMatrix>,
}

impl IntegerChainComplex {
    pub fn build<C: CellComplex + ?Sized>(c: &C) -> Result<Self> {
        let top = c.top_dimension().map_or(0, |t| t + 1);
        let counts: Vec<usize> = (0..top).map(|k| c.cell_count(k)).collect();
        let boundaries: Vec<SparseMatrix> = (0..top).map(|k| c.boundary_matrix(k)).collect();
        for k in 1..top.saturating_sub(1) {
            let prod = boundaries[k]
                .checked_mul(&boundaries[k + 1])
                .ok_or(Error::BoundarySquare(k))?;
            if prod.nnz() != 0 {
                return Err(Error::BoundarySquare(k));
            }
        }
        Ok(IntegerChainComplex { counts, boundaries })
    }
}
