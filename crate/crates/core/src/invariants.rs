//! Classic invariants used by the bounds: independence number, vertex cover
//! number and k-domination number. All are exact branch-and-bound searches
//! meant for desk-scale graphs.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact independence number.
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    mis(g, 0, g.vertices(), &mut best);
    best
}

fn mis(g: &Graph, size: usize, mut cand: VertexSet, best: &mut usize) {
    let mut size = size;
    // Vertices with no neighbour among the candidates are always taken.
    loop {
        let free = cand.iter().find(|&v| g.nbhd(v).is_disjoint(&cand));
        match free {
            Some(v) => {
                cand.remove(v);
                size += 1;
            }
            None => break,
        }
    }
    if size + cand.len() <= *best {
        return;
    }
    let Some(v) = cand
        .iter()
        .max_by_key(|&v| (g.nbhd(v).intersection(&cand).len(), std::cmp::Reverse(v)))
    else {
        *best = size;
        return;
    };
    mis(g, size + 1, cand.difference(&g.closed_nbhd(v)), best);
    let mut without = cand;
    without.remove(v);
    mis(g, size, without, best);
}

/// `n - α(G)` by the Gallai identity.
pub fn vertex_cover_number(g: &Graph) -> usize {
    g.n() - independence_number(g)
}

/// Minimum size of a set `D` such that every vertex outside `D` has at least
/// `k` neighbours in `D`.
pub fn k_domination_number(g: &Graph, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::Input("k-domination needs k >= 1".into()));
    }
    Ok(k_dominating_set(g, k).len())
}

/// A minimum k-dominating set.
pub fn k_dominating_set(g: &Graph, k: usize) -> VertexSet {
    let mut best = greedy_k_dominating(g, k);
    let mut search = KDom {
        g,
        k,
        best: &mut best,
    };
    search.branch(0, VertexSet::empty(), VertexSet::empty());
    best
}

/// Ordinary domination number.
pub fn domination_number(g: &Graph) -> usize {
    k_dominating_set(g, 1).len()
}

fn greedy_k_dominating(g: &Graph, k: usize) -> VertexSet {
    let mut d = VertexSet::empty();
    let unsatisfied = |d: &VertexSet| -> VertexSet {
        (0..g.n())
            .filter(|&v| !d.contains(v) && g.nbhd(v).intersection(d).len() < k)
            .collect()
    };
    loop {
        let open = unsatisfied(&d);
        if open.is_empty() {
            return d;
        }
        let pick = (0..g.n())
            .filter(|&v| !d.contains(v))
            .max_by_key(|&v| {
                let gain = g.nbhd(v).intersection(&open).len() + usize::from(open.contains(v));
                (gain, std::cmp::Reverse(v))
            })
            .expect("an unsatisfied vertex is itself a candidate");
        d.insert(pick);
    }
}

struct KDom<'a> {
    g: &'a Graph,
    k: usize,
    best: &'a mut VertexSet,
}

impl KDom<'_> {
    /// Vertices `< next` are decided: members of `d` are in, members of `out` are excluded.
    fn branch(&mut self, next: usize, d: VertexSet, out: VertexSet) {
        if d.len() >= self.best.len() {
            return;
        }
        let undecided: VertexSet = (next..self.g.n()).collect();
        for u in &out {
            let nb = self.g.nbhd(u);
            if nb.intersection(&d).len() + nb.intersection(&undecided).len() < self.k {
                return;
            }
        }
        if next == self.g.n() {
            *self.best = d;
            return;
        }
        let mut with = d;
        with.insert(next);
        self.branch(next + 1, with, out);
        let mut without = out;
        without.insert(next);
        self.branch(next + 1, d, without);
    }
}
