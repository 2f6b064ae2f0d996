//! k-Z sequences: step `i` is legal when some neighbour of `v_i` lies in
//! fewer than `k` of the earlier closed neighbourhoods.
//!
//! The state keeps one layer per multiplicity: `layers[j]` holds the vertices
//! covered by more than `j` earlier closed neighbourhoods, so `layers[k-1]` is
//! the saturated set.

use rustc_hash::FxHashMap;

use super::{GrundySequence, SearchOptions, Variant, Verdict};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, PartialEq, Eq, Hash)]
struct Layers(Vec<VertexSet>);

impl Layers {
    fn new(k: usize) -> Self {
        Layers(vec![VertexSet::empty(); k])
    }

    fn saturated(&self) -> &VertexSet {
        self.0.last().expect("k >= 1")
    }

    fn add(&self, nb: &VertexSet) -> Self {
        let mut next = self.0.clone();
        for j in (1..next.len()).rev() {
            let promoted = self.0[j - 1].intersection(nb);
            next[j].union_with(&promoted);
        }
        next[0].union_with(nb);
        Layers(next)
    }
}

struct KzSearch<'a> {
    g: &'a Graph,
    cap: usize,
    memo: FxHashMap<(Layers, VertexSet), u8>,
}

impl KzSearch<'_> {
    fn legal(&self, v: usize, layers: &Layers, chosen: &VertexSet) -> bool {
        !chosen.contains(v) && self.g.nbhd(v).escapes(layers.saturated())
    }

    fn branches(&self, layers: &Layers, chosen: &VertexSet) -> Vec<usize> {
        let mut out: Vec<(usize, usize)> = (0..self.g.n())
            .filter(|&v| self.legal(v, layers, chosen))
            .map(|v| (self.g.nbhd(v).difference(layers.saturated()).len(), v))
            .collect();
        out.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        out.into_iter().map(|(_, v)| v).collect()
    }

    fn child(&self, v: usize, layers: &Layers, chosen: &VertexSet) -> (Layers, VertexSet) {
        let mut ch = *chosen;
        ch.insert(v);
        (layers.add(&self.g.closed_nbhd(v)), ch)
    }

    fn key(&self, layers: &Layers, chosen: &VertexSet) -> (Layers, VertexSet) {
        // chosen vertices that are illegal anyway do not affect the future
        let live = chosen
            .iter()
            .filter(|&v| self.g.nbhd(v).escapes(layers.saturated()))
            .collect();
        (layers.clone(), live)
    }

    fn value(&mut self, layers: &Layers, chosen: &VertexSet) -> usize {
        let key = self.key(layers, chosen);
        if let Some(&v) = self.memo.get(&key) {
            return v as usize;
        }
        let branches = self.branches(layers, chosen);
        let ceiling = branches.len();
        let mut best = 0;
        for v in branches {
            if best >= ceiling {
                break;
            }
            let (l, ch) = self.child(v, layers, chosen);
            let bound = (0..self.g.n()).filter(|&u| self.legal(u, &l, &ch)).count();
            if bound < best {
                continue;
            }
            best = best.max(1 + self.value(&l, &ch));
        }
        if self.memo.len() < self.cap {
            self.memo.insert(key, best as u8);
        }
        best
    }
}

/// Exact maximum length of a k-Z-sequence, with a witness. Requires
/// `δ(G) >= k`.
pub fn k_z_grundy_number(g: &Graph, k: usize) -> Result<(usize, GrundySequence)> {
    k_z_grundy_number_with(g, k, &SearchOptions::default())
}

pub fn k_z_grundy_number_with(
    g: &Graph,
    k: usize,
    opts: &SearchOptions,
) -> Result<(usize, GrundySequence)> {
    if k == 0 {
        return Err(Error::Input("k-Z sequences need k >= 1".into()));
    }
    if g.min_degree() < k && g.n() > 0 {
        return Err(Error::Domain(format!(
            "k-Z sequences need minimum degree >= {k}, graph has {}",
            g.min_degree()
        )));
    }
    g.check_search_size(opts.limit, opts.allow_large)?;
    let mut s = KzSearch {
        g,
        cap: opts.memo_cap,
        memo: FxHashMap::default(),
    };
    let (mut layers, mut chosen) = (Layers::new(k), VertexSet::empty());
    let best = s.value(&layers, &chosen);
    let mut order = Vec::with_capacity(best);
    let mut remaining = best;
    while remaining > 0 {
        let pick = s
            .branches(&layers, &chosen)
            .into_iter()
            .find(|&v| {
                let (l, ch) = s.child(v, &layers, &chosen);
                1 + s.value(&l, &ch) == remaining
            })
            .expect("an optimal branch exists for a positive value");
        order.push(pick);
        (layers, chosen) = s.child(pick, &layers, &chosen);
        remaining -= 1;
    }
    let seq = replay(g, k, &order).expect("search only follows legal steps");
    Ok((best, seq))
}

fn replay(g: &Graph, k: usize, order: &[usize]) -> std::result::Result<GrundySequence, usize> {
    let mut layers = Layers::new(k);
    let mut chosen = VertexSet::empty();
    let mut footprints = Vec::with_capacity(order.len());
    for (i, &v) in order.iter().enumerate() {
        if v >= g.n() || chosen.contains(v) {
            return Err(i);
        }
        let fp = g.nbhd(v).difference(layers.saturated());
        if fp.is_empty() {
            return Err(i);
        }
        footprints.push(fp);
        layers = layers.add(&g.closed_nbhd(v));
        chosen.insert(v);
    }
    Ok(GrundySequence {
        variant: Variant::Z,
        k,
        order: order.to_vec(),
        footprints,
    })
}

/// Replays a candidate k-Z-sequence.
pub fn verify_k_z_sequence(g: &Graph, k: usize, order: &[usize]) -> Verdict {
    Verdict::from_violation(replay(g, k.max(1), order).err())
}
