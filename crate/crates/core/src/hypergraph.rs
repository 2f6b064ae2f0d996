//! Hypergraph edge covering, Grundy covering sequences, and the bipartite
//! constructions relating L-sequences to covering sequences: the
//! neighbourhood hypergraph `H(G,B)` and the star augmentation `G*`.
//!
//! Hypergraph text format: a header `ground_n e`, then `e` lines each holding
//! the whitespace-separated vertices of one edge. `#` lines are comments.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequence::search::{Item, SearchOptions, SequenceProblem};
use crate::sequence::{grundy_number_with, Variant};

/// Edges are a list, not a set: equal edges stay distinct choices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    ground_n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(ground_n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if ground_n > MAX_VERTICES || edges.len() > MAX_VERTICES {
            return Err(Error::Capacity {
                n: ground_n.max(edges.len()),
                limit: MAX_VERTICES,
            });
        }
        let ground = VertexSet::full(ground_n);
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::Input(format!("hyperedge {i} is empty")));
            }
            if !e.is_subset(&ground) {
                return Err(Error::Input(format!(
                    "hyperedge {i} leaves the ground set 0..{ground_n}"
                )));
            }
        }
        Ok(Hypergraph { ground_n, edges })
    }

    pub fn ground_n(&self) -> usize {
        self.ground_n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    fn check_coverable(&self) -> Result<()> {
        let union = self.edges.iter().fold(VertexSet::empty(), |a, e| a.union(e));
        match VertexSet::full(self.ground_n).difference(&union).first() {
            Some(v) => Err(Error::Domain(format!("ground vertex {v} lies in no hyperedge"))),
            None => Ok(()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing \"ground_n e\" header".into(),
        })?;
        let nums = parse_numbers(hline, header)?;
        let [ground_n, e] = nums[..] else {
            return Err(Error::Parse {
                line: hline,
                msg: "header must be \"ground_n e\"".into(),
            });
        };
        if ground_n > MAX_VERTICES || e > MAX_VERTICES {
            return Err(Error::Parse {
                line: hline,
                msg: format!("sizes exceed capacity {MAX_VERTICES}"),
            });
        }
        let mut edges = Vec::with_capacity(e);
        let mut last = hline;
        for (line, body) in lines {
            last = line;
            let mut edge = VertexSet::empty();
            for v in parse_numbers(line, body)? {
                if v >= ground_n {
                    return Err(Error::Parse {
                        line,
                        msg: format!("vertex {v} out of range; ground_n = {ground_n}"),
                    });
                }
                edge.insert(v);
            }
            edges.push(edge);
        }
        if edges.len() != e {
            return Err(Error::Parse {
                line: last,
                msg: format!("header announces {e} edges but {} follow", edges.len()),
            });
        }
        Hypergraph::new(ground_n, edges).map_err(|err| Error::Parse {
            line: last,
            msg: err.to_string(),
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.ground_n, self.edges.len());
        for e in &self.edges {
            let ids: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", ids.join(" "));
        }
        out
    }
}

fn parse_numbers(line: usize, body: &str) -> Result<Vec<usize>> {
    body.split_whitespace()
        .map(|tok| {
            tok.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("expected an unsigned integer, found {tok:?}"),
            })
        })
        .collect()
}

/// `ρ(H)`: fewest hyperedges whose union is the ground set.
pub fn edge_cover_number(h: &Hypergraph) -> Result<usize> {
    h.check_coverable()?;
    let mut best = h.edges.len();
    let max_edge = h.edges.iter().map(VertexSet::len).max().unwrap_or(1);
    cover_branch(h, VertexSet::full(h.ground_n), 0, max_edge, &mut best);
    Ok(best)
}

fn cover_branch(h: &Hypergraph, uncovered: VertexSet, used: usize, max_edge: usize, best: &mut usize) {
    if uncovered.is_empty() {
        *best = (*best).min(used);
        return;
    }
    if used + uncovered.len().div_ceil(max_edge) >= *best {
        return;
    }
    // branch on the uncovered vertex with the fewest covering edges
    let v = uncovered
        .iter()
        .min_by_key(|&v| h.edges.iter().filter(|e| e.contains(v)).count())
        .expect("nonempty");
    let mut options: Vec<&VertexSet> = h.edges.iter().filter(|e| e.contains(v)).collect();
    options.sort_by_key(|e| std::cmp::Reverse(e.intersection(&uncovered).len()));
    options.dedup();
    for e in options {
        cover_branch(h, uncovered.difference(e), used + 1, max_edge, best);
    }
}

/// `ρ_gr(H)`: the longest edge sequence in which every edge covers a new
/// ground vertex, with a witness of edge indices.
pub fn grundy_cover_number(h: &Hypergraph) -> Result<(usize, Vec<usize>)> {
    grundy_cover_number_with(h, &SearchOptions::default())
}

pub fn grundy_cover_number_with(h: &Hypergraph, opts: &SearchOptions) -> Result<(usize, Vec<usize>)> {
    h.check_coverable()?;
    Ok(grundy_cover_unchecked(h, opts))
}

/// Vertices in no edge never affect legality, so the search is well defined
/// without the covering precondition.
fn grundy_cover_unchecked(h: &Hypergraph, opts: &SearchOptions) -> (usize, Vec<usize>) {
    let items = h
        .edges
        .iter()
        .map(|&e| Item {
            footprint: e,
            cover: e,
        })
        .collect();
    SequenceProblem::new(items).solve(opts)
}

/// Index of the first edge that covers nothing new, if any.
pub fn verify_cover_sequence(h: &Hypergraph, order: &[usize]) -> Option<usize> {
    let mut covered = VertexSet::empty();
    order.iter().position(|&i| match h.edges.get(i) {
        Some(e) if e.escapes(&covered) => {
            covered.union_with(e);
            false
        }
        _ => true,
    })
}

/// A graph with a bipartition `(A, B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    graph: Graph,
    a: VertexSet,
    b: VertexSet,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, a: VertexSet, b: VertexSet) -> Result<Self> {
        if !a.is_disjoint(&b) || a.union(&b) != graph.vertices() {
            return Err(Error::Input("A and B must partition the vertex set".into()));
        }
        if let Some((u, v)) = graph
            .edges()
            .into_iter()
            .find(|&(u, v)| a.contains(u) == a.contains(v))
        {
            return Err(Error::Input(format!("edge ({u},{v}) does not cross the bipartition")));
        }
        Ok(BipartiteGraph { graph, a, b })
    }

    /// Two-colours each component by breadth-first search, putting its
    /// smallest vertex in `A`.
    pub fn from_coloring(graph: Graph) -> Result<Self> {
        let mut a = VertexSet::empty();
        let mut seen = VertexSet::empty();
        for root in 0..graph.n() {
            if seen.contains(root) {
                continue;
            }
            seen.insert(root);
            a.insert(root);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in &graph.nbhd(u) {
                    if !seen.contains(v) {
                        seen.insert(v);
                        if !a.contains(u) {
                            a.insert(v);
                        }
                        queue.push_back(v);
                    }
                }
            }
        }
        let b = graph.vertices().difference(&a);
        BipartiteGraph::new(graph, a, b).map_err(|_| Error::Domain("graph is not bipartite".into()))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn a(&self) -> VertexSet {
        self.a
    }

    pub fn b(&self) -> VertexSet {
        self.b
    }
}

/// `H(G,B)`: ground set `A` (renumbered in ascending order), one edge
/// `N(b)` per `b ∈ B` in ascending order of `b`.
pub fn neighborhood_hypergraph(bg: &BipartiteGraph) -> Result<Hypergraph> {
    let index: Vec<Option<usize>> = {
        let mut idx = vec![None; bg.graph.n()];
        for (i, v) in bg.a.iter().enumerate() {
            idx[v] = Some(i);
        }
        idx
    };
    let edges = bg
        .b
        .iter()
        .map(|b| {
            let nb = bg.graph.nbhd(b);
            if nb.is_empty() {
                return Err(Error::Domain(format!("vertex {b} of B is isolated")));
            }
            Ok(nb.iter().map(|v| index[v].expect("neighbours of B lie in A")).collect())
        })
        .collect::<Result<Vec<VertexSet>>>()?;
    Hypergraph::new(bg.a.len(), edges)
}

/// `G*`: `G` plus `|B|` new independent vertices `I`, each joined to all of
/// `B`, with bipartition `(A ∪ I, B)`. New vertices follow the old ones.
pub fn star_augment(bg: &BipartiteGraph) -> Result<BipartiteGraph> {
    let n = bg.graph.n();
    let added = bg.b.len();
    let total = n + added;
    if total > MAX_VERTICES {
        return Err(Error::Capacity {
            n: total,
            limit: MAX_VERTICES,
        });
    }
    let mut edges = bg.graph.edges();
    for i in n..total {
        edges.extend(bg.b.iter().map(|b| (b, i)));
    }
    let graph = Graph::from_edges(total, edges)?;
    let a = bg.a.union(&(n..total).collect());
    BipartiteGraph::new(graph, a, bg.b)
}

/// Both sides of `γ_gr^L(G*) = |A| + |B| + ρ_gr(H(G,B))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionCheck {
    pub lhs: usize,
    pub rhs: usize,
    pub equal: bool,
    pub grundy_cover: usize,
}

pub fn verify_reduction_claim(bg: &BipartiteGraph) -> Result<ReductionCheck> {
    verify_reduction_claim_with(bg, &SearchOptions::default())
}

pub fn verify_reduction_claim_with(bg: &BipartiteGraph, opts: &SearchOptions) -> Result<ReductionCheck> {
    // isolated vertices of A are isolated ground vertices of H(G,B); they
    // leave the covering sequences unchanged
    let h = neighborhood_hypergraph(bg)?;
    let (rho_gr, _) = grundy_cover_unchecked(&h, opts);
    let augmented = star_augment(bg)?;
    let (lhs, _) = grundy_number_with(augmented.graph(), Variant::L, opts)?;
    let rhs = bg.a.len() + bg.b.len() + rho_gr;
    Ok(ReductionCheck {
        lhs,
        rhs,
        equal: lhs == rhs,
        grundy_cover: rho_gr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn hyper(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| set(e)).collect()).unwrap()
    }

    /// All edge sequences, checked against the definition.
    fn brute_grundy_cover(h: &Hypergraph) -> usize {
        fn rec(h: &Hypergraph, used: &mut Vec<usize>, covered: &std::collections::BTreeSet<usize>) -> usize {
            let mut best = used.len();
            for (i, e) in h.edges().iter().enumerate() {
                if used.contains(&i) || e.iter().all(|v| covered.contains(&v)) {
                    continue;
                }
                let mut c = covered.clone();
                c.extend(e.iter());
                used.push(i);
                best = best.max(rec(h, used, &c));
                used.pop();
            }
            best
        }
        rec(h, &mut Vec::new(), &Default::default())
    }

    fn brute_cover(h: &Hypergraph) -> usize {
        let m = h.edges().len();
        (0u32..1 << m)
            .filter(|mask| {
                (0..m)
                    .filter(|i| mask >> i & 1 == 1)
                    .fold(VertexSet::empty(), |a, i| a.union(&h.edges()[i]))
                    == VertexSet::full(h.ground_n())
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn edge_cover_examples() {
        assert_eq!(edge_cover_number(&hyper(3, &[&[0, 1], &[1, 2], &[0, 2]])).unwrap(), 2);
        assert_eq!(edge_cover_number(&hyper(4, &[&[0, 1, 2, 3]])).unwrap(), 1);
        assert_eq!(edge_cover_number(&hyper(3, &[&[0], &[1], &[2]])).unwrap(), 3);
        assert!(matches!(
            edge_cover_number(&hyper(3, &[&[0, 1]])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn grundy_cover_examples() {
        let chain = hyper(3, &[&[0], &[0, 1], &[0, 1, 2]]);
        let (v, order) = grundy_cover_number(&chain).unwrap();
        assert_eq!((v, order), (3, vec![0, 1, 2]));
        let disjoint = hyper(6, &[&[0, 1], &[2], &[3, 4, 5]]);
        assert_eq!(grundy_cover_number(&disjoint).unwrap().0, 3);

        let c6 = BipartiteGraph::from_coloring(cycle(6).unwrap()).unwrap();
        let h = neighborhood_hypergraph(&c6).unwrap();
        let (v, order) = grundy_cover_number(&h).unwrap();
        assert_eq!(v, brute_grundy_cover(&h));
        assert_eq!(verify_cover_sequence(&h, &order), None);
    }

    #[test]
    fn hypergraph_validation() {
        assert!(Hypergraph::new(2, vec![VertexSet::empty()]).is_err());
        assert!(Hypergraph::new(2, vec![set(&[2])]).is_err());
    }

    #[test]
    fn hypergraph_text_format() {
        let h = Hypergraph::parse("# triangle\n3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(h, hyper(3, &[&[0, 1], &[1, 2], &[0, 2]]));
        assert_eq!(h.serialize(), "3 3\n0 1\n1 2\n0 2\n");
        assert_eq!(Hypergraph::parse(&h.serialize()).unwrap(), h);
        assert!(matches!(Hypergraph::parse("3 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Hypergraph::parse("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(Hypergraph::parse("3\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn neighborhood_hypergraph_examples() {
        // star with centre in B
        let s = star(3).unwrap();
        let bg = BipartiteGraph::new(s, set(&[1, 2, 3]), set(&[0])).unwrap();
        let h = neighborhood_hypergraph(&bg).unwrap();
        assert_eq!(h, hyper(3, &[&[0, 1, 2]]));

        let p4 = BipartiteGraph::from_coloring(path(4).unwrap()).unwrap();
        assert_eq!((p4.a(), p4.b()), (set(&[0, 2]), set(&[1, 3])));
        let h = neighborhood_hypergraph(&p4).unwrap();
        assert_eq!(h, hyper(2, &[&[0, 1], &[1]]));

        let c6 = BipartiteGraph::from_coloring(cycle(6).unwrap()).unwrap();
        let h = neighborhood_hypergraph(&c6).unwrap();
        assert_eq!(h, hyper(3, &[&[0, 1], &[1, 2], &[0, 2]]));

        let iso = BipartiteGraph::new(Graph::from_edges(3, [(0, 1)]).unwrap(), set(&[0]), set(&[1, 2])).unwrap();
        assert!(matches!(neighborhood_hypergraph(&iso), Err(Error::Domain(_))));
    }

    #[test]
    fn bipartition_validation() {
        let p3 = path(3).unwrap();
        assert!(BipartiteGraph::new(p3.clone(), set(&[0, 1]), set(&[2])).is_err());
        assert!(BipartiteGraph::new(p3, set(&[0]), set(&[1])).is_err());
        assert!(matches!(
            BipartiteGraph::from_coloring(cycle(5).unwrap()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn star_augment_examples() {
        let edge = BipartiteGraph::new(path(2).unwrap(), set(&[0]), set(&[1])).unwrap();
        let star = star_augment(&edge).unwrap();
        assert_eq!(star.graph(), &path(3).unwrap());
        assert_eq!(star.a(), set(&[0, 2]));

        let k22 = BipartiteGraph::from_coloring(cycle(4).unwrap()).unwrap();
        let aug = star_augment(&k22).unwrap();
        assert_eq!(aug.graph().n(), 6);
        assert_eq!(aug.graph().edge_count(), 8);
        for a in &aug.a() {
            assert_eq!(aug.graph().nbhd(a), aug.b());
        }

        let c6 = BipartiteGraph::from_coloring(cycle(6).unwrap()).unwrap();
        let aug = star_augment(&c6).unwrap();
        for i in 6..9 {
            assert_eq!(aug.graph().degree(i), 3);
        }
    }

    #[test]
    fn reduction_claim_examples() {
        let edge = BipartiteGraph::new(path(2).unwrap(), set(&[0]), set(&[1])).unwrap();
        let r = verify_reduction_claim(&edge).unwrap();
        assert_eq!((r.lhs, r.rhs, r.equal), (3, 3, true));

        let c4 = BipartiteGraph::from_coloring(cycle(4).unwrap()).unwrap();
        assert!(verify_reduction_claim(&c4).unwrap().equal);

        // vertex 0 of A is isolated
        let g = Graph::from_edges(4, [(1, 2), (1, 3)]).unwrap();
        let bg = BipartiteGraph::new(g, set(&[0, 1]), set(&[2, 3])).unwrap();
        assert!(matches!(
            grundy_cover_number(&neighborhood_hypergraph(&bg).unwrap()),
            Err(Error::Domain(_))
        ));
        let r = verify_reduction_claim(&bg).unwrap();
        assert_eq!((r.grundy_cover, r.equal), (1, true));
    }

    #[test]
    fn grundy_cover_is_unchanged_by_augmentation() {
        for g in [cycle(6).unwrap(), path(5).unwrap(), hypercube(3).unwrap(), star(4).unwrap()] {
            let bg = BipartiteGraph::from_coloring(g).unwrap();
            let aug = star_augment(&bg).unwrap();
            let a = grundy_cover_number(&neighborhood_hypergraph(&bg).unwrap()).unwrap().0;
            let b = grundy_cover_number(&neighborhood_hypergraph(&aug).unwrap()).unwrap().0;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn cover_numbers_against_enumeration() {
        let cases = [
            hyper(4, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0], &[0, 2]]),
            hyper(5, &[&[0], &[0, 1], &[1, 2, 3], &[3, 4], &[4], &[0, 4]]),
            hyper(3, &[&[0, 1], &[0, 1], &[2]]),
        ];
        for h in &cases {
            let rho = edge_cover_number(h).unwrap();
            let (rho_gr, order) = grundy_cover_number(h).unwrap();
            assert_eq!(rho, brute_cover(h));
            assert_eq!(rho_gr, brute_grundy_cover(h));
            assert!(rho_gr >= rho);
            assert_eq!(verify_cover_sequence(h, &order), None);
        }
    }
}
