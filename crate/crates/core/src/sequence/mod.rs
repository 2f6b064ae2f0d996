//! Grundy sequences: legality, extension, replay and exact maximizers for the
//! closed, total, Z and L variants, plus k-Z sequences.
//!
//! Each variant pairs a *footprint* neighbourhood of the new vertex with the
//! neighbourhood it adds to the covered union:
//!
//! | variant | step legal iff             | covered grows by |
//! |---------|----------------------------|------------------|
//! | closed  | `N[v] \ covered ≠ ∅`       | `N[v]`           |
//! | total   | `N(v) \ covered ≠ ∅`       | `N(v)`           |
//! | Z       | `N(v) \ covered ≠ ∅`       | `N[v]`           |
//! | L       | `N[v] \ covered ≠ ∅`, `v` new | `N(v)`        |
//!
//! Sequences consist of distinct vertices. In the closed, total and Z
//! variants a repeated vertex is never legal anyway: its footprint
//! neighbourhood is contained in what it added to the covered union. Only the
//! L variant needs the explicit distinctness check, since a vertex can still
//! footprint itself after its open neighbourhood is covered.

mod kz;
pub(crate) mod search;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use kz::{k_z_grundy_number, k_z_grundy_number_with, verify_k_z_sequence};
pub use search::SearchOptions;
use search::{Item, SequenceProblem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Variant {
    Closed,
    Total,
    Z,
    L,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Closed, Variant::Total, Variant::Z, Variant::L];

    /// The neighbourhood that must escape the covered union.
    #[inline]
    pub fn footprint_nbhd(self, g: &Graph, v: usize) -> VertexSet {
        match self {
            Variant::Closed | Variant::L => g.closed_nbhd(v),
            Variant::Total | Variant::Z => g.nbhd(v),
        }
    }

    /// The neighbourhood added to the covered union.
    #[inline]
    pub fn cover_nbhd(self, g: &Graph, v: usize) -> VertexSet {
        match self {
            Variant::Closed | Variant::Z => g.closed_nbhd(v),
            Variant::Total | Variant::L => g.nbhd(v),
        }
    }

    /// Total and Z sequences are only defined without isolated vertices.
    pub fn check_graph(self, g: &Graph) -> Result<()> {
        if matches!(self, Variant::Total | Variant::Z) && g.has_isolated_vertex() {
            Err(Error::Domain(format!(
                "the {self} variant needs a graph without isolated vertices"
            )))
        } else {
            Ok(())
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::Closed => "closed",
            Variant::Total => "total",
            Variant::Z => "Z",
            Variant::L => "L",
        })
    }
}

/// A partially built sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SequenceState {
    /// Union of the cover neighbourhoods of the chosen vertices.
    pub covered: VertexSet,
    pub chosen: VertexSet,
    pub order: Vec<usize>,
    /// `footprints[i]` = footprint neighbourhood of `order[i]` minus the covered set before step `i`.
    pub footprints: Vec<VertexSet>,
}

impl SequenceState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    #[inline]
    fn legal(&self, g: &Graph, variant: Variant, v: usize) -> bool {
        !self.chosen.contains(v) && variant.footprint_nbhd(g, v).escapes(&self.covered)
    }

    fn push(&mut self, g: &Graph, variant: Variant, v: usize) {
        self.footprints
            .push(variant.footprint_nbhd(g, v).difference(&self.covered));
        self.covered.union_with(&variant.cover_nbhd(g, v));
        self.chosen.insert(v);
        self.order.push(v);
    }

    pub fn into_sequence(self, variant: Variant) -> GrundySequence {
        GrundySequence {
            variant,
            k: 1,
            order: self.order,
            footprints: self.footprints,
        }
    }
}

/// Whether `v` may be appended to `state`.
pub fn is_legal_extension(g: &Graph, variant: Variant, state: &SequenceState, v: usize) -> Result<bool> {
    variant.check_graph(g)?;
    g.check_vertex(v)?;
    Ok(state.legal(g, variant, v))
}

/// Appends `v` to a copy of `state`.
pub fn extend(g: &Graph, variant: Variant, state: &SequenceState, v: usize) -> Result<SequenceState> {
    if !is_legal_extension(g, variant, state, v)? {
        return Err(Error::Contract(format!(
            "vertex {v} is not a legal {variant} extension of {:?}",
            state.order
        )));
    }
    let mut next = state.clone();
    next.push(g, variant, v);
    Ok(next)
}

/// A legal sequence with the footprint recorded at every step.
///
/// `k` is 1 for the four classic variants and the threshold for k-Z
/// sequences (reported with `variant = Z`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrundySequence {
    pub variant: Variant,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub k: usize,
    pub order: Vec<usize>,
    pub footprints: Vec<VertexSet>,
}

fn one() -> usize {
    1
}

fn is_one(k: &usize) -> bool {
    *k == 1
}

impl GrundySequence {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.order.iter().copied().collect()
    }

    /// Rebuilds the footprints by replaying `order`.
    pub fn replay(g: &Graph, variant: Variant, order: &[usize]) -> Result<Self> {
        let mut state = SequenceState::new();
        for &v in order {
            state = extend(g, variant, &state, v)?;
        }
        Ok(state.into_sequence(variant))
    }
}

/// Result of replaying a candidate sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub legal: bool,
    /// Index of the first step that is not a legal extension.
    pub first_violation: Option<usize>,
}

impl Verdict {
    pub(crate) fn from_violation(first_violation: Option<usize>) -> Self {
        Verdict {
            legal: first_violation.is_none(),
            first_violation,
        }
    }
}

/// Replays `order` step by step. Out-of-range and repeated vertices count as
/// violations; nothing here is an error.
pub fn verify_sequence(g: &Graph, variant: Variant, order: &[usize]) -> Verdict {
    let mut state = SequenceState::new();
    let violation = order.iter().position(|&v| {
        if v >= g.n() || !state.legal(g, variant, v) {
            return true;
        }
        state.push(g, variant, v);
        false
    });
    Verdict::from_violation(violation)
}

/// Exact maximum length of a legal sequence and a witness.
pub fn grundy_number(g: &Graph, variant: Variant) -> Result<(usize, GrundySequence)> {
    grundy_number_with(g, variant, &SearchOptions::default())
}

pub fn grundy_number_with(
    g: &Graph,
    variant: Variant,
    opts: &SearchOptions,
) -> Result<(usize, GrundySequence)> {
    variant.check_graph(g)?;
    g.check_search_size(opts.limit, opts.allow_large)?;
    let items = (0..g.n())
        .map(|v| Item {
            footprint: variant.footprint_nbhd(g, v),
            cover: variant.cover_nbhd(g, v),
        })
        .collect();
    let (best, order) = SequenceProblem::new(items).solve(opts);
    let seq = GrundySequence::replay(g, variant, &order)?;
    debug_assert_eq!(seq.len(), best);
    Ok((best, seq))
}

/// Greedy Z-sequence: repeatedly append the lowest legal vertex. Its length is
/// a lower bound on the Z-Grundy number. Isolated vertices are skipped.
pub fn greedy_z_sequence(g: &Graph) -> Vec<usize> {
    let mut state = SequenceState::new();
    while let Some(v) = (0..g.n()).find(|&v| state.legal(g, Variant::Z, v)) {
        state.push(g, Variant::Z, v);
    }
    state.order
}

/// Longest continuation of `covered` by Z-legal vertices, ignoring the
/// isolated-vertex precondition. Used by the forcing module.
pub(crate) fn z_problem(g: &Graph) -> SequenceProblem {
    SequenceProblem::new(
        (0..g.n())
            .map(|v| Item {
                footprint: g.nbhd(v),
                cover: g.closed_nbhd(v),
            })
            .collect(),
    )
}

/// Converts a maximum closed-neighbourhood sequence into a longer L-sequence:
/// drop the last vertex, then append a vertex `r` it left undominated and a
/// neighbour of `r`. The result has length `len + 1`.
pub fn l_sequence_from_closed(g: &Graph, closed: &GrundySequence) -> Result<GrundySequence> {
    if closed.variant != Variant::Closed || closed.is_empty() {
        return Err(Error::Contract("need a nonempty closed-neighbourhood sequence".into()));
    }
    let (&last, prefix) = closed.order.split_last().expect("nonempty");
    let before: VertexSet = prefix
        .iter()
        .fold(VertexSet::empty(), |acc, &v| acc.union(&g.closed_nbhd(v)));
    let r = g
        .closed_nbhd(last)
        .difference(&before)
        .first()
        .ok_or_else(|| Error::Contract("last vertex footprints nothing".into()))?;
    let t = g
        .nbhd(r)
        .first()
        .ok_or_else(|| Error::Domain(format!("vertex {r} is isolated")))?;
    let mut order = prefix.to_vec();
    order.extend([r, t]);
    GrundySequence::replay(g, Variant::L, &order)
}
