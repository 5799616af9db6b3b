use std::collections::VecDeque;

use serde::Serialize;

use super::snf::{factors_to_u64, smith_normal_form, SparseMatrix};
use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// A letter: generator index and exponent `±1`.
pub type Letter = (u32, i32);

/// Edge-path presentation: generators are the edges off a spanning tree, relators
/// come from triangle boundaries with tree edges dropped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<Letter>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

pub fn pi1_presentation(k: &SimplicialComplex, basepoint: Vertex) -> Result<GroupPresentation> {
    let nv = k.vertex_count();
    if (basepoint as usize) >= nv {
        return Err(Error::SimplexNotFound(vec![basepoint]));
    }
    let edges = k.simplices(1);
    let mut adj: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); nv];
    for (i, e) in edges.iter().enumerate() {
        adj[e[0] as usize].push((e[1], i));
        adj[e[1] as usize].push((e[0], i));
    }
    let mut seen = vec![false; nv];
    let mut in_tree = vec![false; edges.len()];
    let mut queue = VecDeque::from([basepoint]);
    seen[basepoint as usize] = true;
    while let Some(v) = queue.pop_front() {
        for &(w, e) in &adj[v as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                in_tree[e] = true;
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::Disconnected);
    }
    let mut gen_of = vec![u32::MAX; edges.len()];
    let mut generators = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        if !in_tree[i] {
            gen_of[i] = generators.len() as u32;
            generators.push(format!(
                "{}-{}",
                k.labels()[e[0] as usize],
                k.labels()[e[1] as usize]
            ));
        }
    }
    let letter = |a: Vertex, b: Vertex| -> Option<Letter> {
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        let e = edges.position(&[lo, hi]).expect("triangle edges exist");
        (gen_of[e] != u32::MAX).then_some((gen_of[e], sign))
    };
    let relators = k
        .simplices(2)
        .iter()
        .map(|t| {
            let word: Vec<Letter> = [letter(t[0], t[1]), letter(t[1], t[2]), letter(t[2], t[0])]
                .into_iter()
                .flatten()
                .collect();
            free_reduce(word)
        })
        .filter(|w| !w.is_empty())
        .collect();
    Ok(GroupPresentation {
        generators,
        relators,
    })
}

/// Cyclic free reduction.
fn free_reduce(word: Vec<Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for l in word {
        match out.last() {
            Some(&(g, e)) if g == l.0 && e == -l.1 => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    while out.len() >= 2 && out[0].0 == out[out.len() - 1].0 && out[0].1 == -out[out.len() - 1].1 {
        out.pop();
        out.remove(0);
    }
    out
}

pub fn abelianization(p: &GroupPresentation) -> Abelianization {
    let cols = p
        .relators
        .iter()
        .map(|w| w.iter().map(|&(g, e)| (g, e as i64)).collect())
        .collect();
    let m = SparseMatrix::new(p.generators.len(), cols);
    let snf = smith_normal_form(&m);
    Abelianization {
        rank: p.generators.len() - snf.rank,
        torsion: factors_to_u64(&snf.nontrivial).expect("relator exponents are small"),
    }
}

impl GroupPresentation {
    /// Sufficient test for a trivial group: repeatedly kill a generator that some
    /// relator reduces to once the already-killed generators are deleted.
    pub fn trivial_by_elimination(&self) -> bool {
        let mut killed = vec![false; self.generators.len()];
        let mut remaining = self.generators.len();
        let mut changed = true;
        while changed && remaining > 0 {
            changed = false;
            for w in &self.relators {
                let rest = free_reduce(
                    w.iter()
                        .copied()
                        .filter(|&(g, _)| !killed[g as usize])
                        .collect(),
                );
                if rest.len() == 1 {
                    killed[rest[0].0 as usize] = true;
                    remaining -= 1;
                    changed = true;
                }
            }
        }
        remaining == 0
    }
}
