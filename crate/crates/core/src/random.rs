//! Seeded Erdős–Rényi sampling for the randomized suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::BipartiteGraph;

/// Which graphs the sampler keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Acceptance {
    Any,
    NoIsolated,
    Connected,
    /// Minimum degree at least the given value.
    MinDegree(usize),
}

impl Acceptance {
    fn accepts(self, g: &Graph) -> bool {
        match self {
            Acceptance::Any => true,
            Acceptance::NoIsolated => !g.has_isolated_vertex(),
            Acceptance::Connected => g.is_connected(),
            Acceptance::MinDegree(k) => g.n() > 0 && g.min_degree() >= k,
        }
    }
}

/// Sampler parameters, reported alongside results.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SamplerConfig {
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub edge_prob: f64,
    pub accept: Acceptance,
}

impl SamplerConfig {
    pub fn new(seed: u64, n_min: usize, n_max: usize, accept: Acceptance) -> Self {
        SamplerConfig {
            seed,
            n_min,
            n_max,
            edge_prob: 0.5,
            accept,
        }
    }
}

/// Draws `count` graphs: order uniform in `n_min..=n_max`, each edge present
/// independently with `edge_prob`, rejected until `accept` holds.
pub fn sample_graphs(cfg: &SamplerConfig, count: usize) -> Result<Vec<Graph>> {
    if cfg.n_min > cfg.n_max || !(0.0..=1.0).contains(&cfg.edge_prob) {
        return Err(Error::Input("invalid sampler range".into()));
    }
    if cfg.n_max > crate::bitset::MAX_VERTICES {
        return Err(Error::Capacity {
            n: cfg.n_max,
            limit: crate::bitset::MAX_VERTICES,
        });
    }
    let feasible = match cfg.accept {
        Acceptance::Any => true,
        Acceptance::NoIsolated => cfg.n_max >= 2 && cfg.edge_prob > 0.0,
        Acceptance::Connected => cfg.edge_prob > 0.0 || cfg.n_min <= 1,
        Acceptance::MinDegree(k) => cfg.n_max > k && (k == 0 || cfg.edge_prob > 0.0),
    };
    if !feasible {
        return Err(Error::Input(format!("no graph in range satisfies {:?}", cfg.accept)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(cfg.n_min..=cfg.n_max);
        let g = gnp(&mut rng, n, cfg.edge_prob);
        if cfg.accept.accepts(&g) {
            out.push(g);
        }
    }
    Ok(out)
}

fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("sampled edges are in range")
}

/// Random bipartite graphs with `|A|` in `1..=a_max`, `|B|` in `1..=b_max`,
/// `A` first, and every `B` vertex of positive degree.
pub fn sample_bipartite(seed: u64, a_max: usize, b_max: usize, count: usize) -> Result<Vec<BipartiteGraph>> {
    if a_max == 0 || b_max == 0 {
        return Err(Error::Input("both parts need at least one vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let na = rng.gen_range(1..=a_max);
        let nb = rng.gen_range(1..=b_max);
        let mut edges = Vec::new();
        for b in na..na + nb {
            for a in 0..na {
                if rng.gen_bool(0.5) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(na + nb, edges)?;
        if (na..na + nb).any(|b| g.degree(b) == 0) {
            continue;
        }
        let a: VertexSet = (0..na).collect();
        let b: VertexSet = (na..na + nb).collect();
        out.push(BipartiteGraph::new(g, a, b)?);
    }
    Ok(out)
}

/// Every labelled graph on `n` vertices, in edge-mask order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if pairs.len() > 20 {
        return Err(Error::Input(format!("refusing to enumerate all graphs on {n} vertices")));
    }
    (0u32..1 << pairs.len())
        .map(|mask| {
            Graph::from_edges(
                n,
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
            )
        })
        .collect()
}
