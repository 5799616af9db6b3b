use super::{drop_index, SimplicialComplex, Vertex};

/// A downward-closed family of simplices of a parent complex, stored as one
/// membership mask per dimension.
#[derive(Clone, Debug)]
pub struct Subcomplex<'a> {
    parent: &'a SimplicialComplex,
    mask: Vec<Vec<bool>>,
}

impl<'a> Subcomplex<'a> {
    /// Members are the parent simplices satisfying `member`; the caller guarantees
    /// the predicate is downward closed (see [`Subcomplex::is_downward_closed`]).
    pub fn from_predicate(
        parent: &'a SimplicialComplex,
        member: impl Fn(&[Vertex]) -> bool,
    ) -> Self {
        let mask = (0..=parent.dimension().max(-1))
            .filter(|&k| k >= 0)
            .map(|k| parent.simplices(k as usize).iter().map(&member).collect())
            .collect();
        Subcomplex { parent, mask }
    }

    /// The smallest subcomplex containing `generators`.
    pub fn generated_by<I>(parent: &'a SimplicialComplex, generators: I) -> Self
    where
        I: IntoIterator<Item = Vec<Vertex>>,
    {
        let mut mask: Vec<Vec<bool>> = (0..parent.dimension().max(-1) + 1)
            .map(|k| vec![false; parent.count(k as usize)])
            .collect();
        let mut stack: Vec<Vec<Vertex>> = generators.into_iter().collect();
        while let Some(mut s) = stack.pop() {
            s.sort_unstable();
            let Some(i) = parent.index_of(&s) else {
                continue;
            };
            let k = s.len() - 1;
            if mask[k][i] {
                continue;
            }
            mask[k][i] = true;
            if k > 0 {
                for skip in 0..s.len() {
                    stack.push(drop_index(&s, skip));
                }
            }
        }
        Subcomplex { parent, mask }
    }

    pub fn empty(parent: &'a SimplicialComplex) -> Self {
        Self::from_predicate(parent, |_| false)
    }

    pub fn parent(&self) -> &'a SimplicialComplex {
        self.parent
    }

    pub fn contains_index(&self, k: usize, i: usize) -> bool {
        self.mask.get(k).is_some_and(|m| m[i])
    }

    pub fn contains(&self, simplex: &[Vertex]) -> bool {
        match self.parent.index_of(simplex) {
            Some(i) => self.mask[simplex.len() - 1][i],
            None => false,
        }
    }

    pub fn count(&self, k: usize) -> usize {
        self.mask
            .get(k)
            .map_or(0, |m| m.iter().filter(|&&b| b).count())
    }

    pub fn is_empty(&self) -> bool {
        self.mask.iter().all(|m| m.iter().all(|&b| !b))
    }

    pub fn mask(&self) -> &[Vec<bool>] {
        &self.mask
    }

    pub fn vertex_mask(&self) -> Vec<bool> {
        self.mask.first().cloned().unwrap_or_default()
    }

    pub fn is_downward_closed(&self) -> bool {
        for k in 1..self.mask.len() {
            for (i, s) in self.parent.simplices(k).iter().enumerate() {
                if self.mask[k][i] && (0..s.len()).any(|skip| !self.contains(&drop_index(s, skip)))
                {
                    return false;
                }
            }
        }
        true
    }

    /// `Ok` if every parent simplex whose vertices all lie in the subcomplex is a
    /// member; otherwise a witness simplex.
    pub fn check_full(&self) -> Result<(), Vec<Vertex>> {
        let vm = self.vertex_mask();
        for k in 1..self.mask.len() {
            for (i, s) in self.parent.simplices(k).iter().enumerate() {
                if !self.mask[k][i] && s.iter().all(|&v| vm[v as usize]) {
                    return Err(s.to_vec());
                }
            }
        }
        Ok(())
    }

    pub fn is_full(&self) -> bool {
        self.check_full().is_ok()
    }

    /// Materializes the members as a standalone complex on the member vertices,
    /// together with the parent index of each new vertex.
    pub fn to_complex_with_map(&self, name: &str) -> (SimplicialComplex, Vec<Vertex>) {
        let vm = self.vertex_mask();
        self.parent
            .restrict_with(name, &vm, |k, i, _| self.mask[k][i])
    }

    pub fn to_complex(&self, name: &str) -> SimplicialComplex {
        self.to_complex_with_map(name).0
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..self.mask.len())
            .map(|k| {
                let c = self.count(k) as i64;
                if k % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }
}
