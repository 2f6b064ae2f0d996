//! Zero forcing: the colour-change process, exact (k-)forcing numbers,
//! propagation time, and the conversions between forcing processes and
//! Z-sequences.
//!
//! Forcing rounds are synchronous: at the start of a round every blue vertex
//! with between one and `k` white neighbours forces all of them. Within a
//! round the chronology lists forces by ascending forcer id; only the round
//! labels carry meaning.
//!
//! A forcing set and a Z-sequence are two views of one object. Reversing the
//! forced vertices of a completed process gives a Z-sequence (each forced
//! vertex footprints its forcer), and the complement of the vertex set of a
//! Z-sequence forces the sequence back in reverse order. So the Z-Grundy
//! number and the zero forcing number always sum to the vertex count.

use std::sync::atomic::{AtomicUsize, Ordering};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequence::search::{SearchOptions, Searcher};
use crate::sequence::{self, greedy_z_sequence, verify_sequence, GrundySequence, Variant};

/// One application of the colour-change rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Force {
    pub round: usize,
    pub forcer: usize,
    pub forced: usize,
}

/// A run of the colour-change process from an initial blue set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingProcess {
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub k: usize,
    pub initial: VertexSet,
    pub forces: Vec<Force>,
}

fn one() -> usize {
    1
}

fn is_one(k: &usize) -> bool {
    *k == 1
}

impl ForcingProcess {
    /// Number of synchronous rounds.
    pub fn rounds(&self) -> usize {
        self.forces.last().map_or(0, |f| f.round)
    }

    pub fn blue(&self) -> VertexSet {
        let mut b = self.initial;
        for f in &self.forces {
            b.insert(f.forced);
        }
        b
    }

    pub fn is_complete(&self, g: &Graph) -> bool {
        self.blue().len() == g.n()
    }

    /// Replays the chronology, checking every force against the blue set at
    /// the start of its round. Returns the index of the first invalid force.
    pub fn first_invalid_force(&self, g: &Graph) -> Option<usize> {
        let mut blue = self.initial;
        let mut round_start = blue;
        let mut round = 0;
        for (i, f) in self.forces.iter().enumerate() {
            if f.round < round || f.round == 0 {
                return Some(i);
            }
            if f.round > round {
                if f.round != round + 1 {
                    return Some(i);
                }
                round = f.round;
                round_start = blue;
            }
            if f.forcer >= g.n() || f.forced >= g.n() {
                return Some(i);
            }
            let white = g.nbhd(f.forcer).difference(&round_start);
            if !round_start.contains(f.forcer)
                || !white.contains(f.forced)
                || white.len() > self.k
                || blue.contains(f.forced)
            {
                return Some(i);
            }
            blue.insert(f.forced);
        }
        None
    }
}

/// Runs the `k`-forcing process to its fixpoint. `k = 1` is the classic
/// colour-change rule.
pub fn closure(g: &Graph, blue: &VertexSet, k: usize) -> (VertexSet, ForcingProcess) {
    let mut current = blue.intersection(&g.vertices());
    let mut forces = Vec::new();
    let mut round = 0;
    loop {
        let start = current;
        let mut fired = false;
        for b in &start {
            let white = g.nbhd(b).difference(&start);
            if white.is_empty() || white.len() > k {
                continue;
            }
            if !fired {
                fired = true;
                round += 1;
            }
            for w in &white {
                if !current.contains(w) {
                    current.insert(w);
                    forces.push(Force {
                        round,
                        forcer: b,
                        forced: w,
                    });
                }
            }
        }
        if !fired {
            break;
        }
    }
    (
        current,
        ForcingProcess {
            k,
            initial: *blue,
            forces,
        },
    )
}

/// Whether the `k`-forcing closure of `blue` is everything. Asynchronous,
/// no chronology; the final blue set does not depend on the schedule.
fn forces_all(g: &Graph, blue: VertexSet, k: usize) -> bool {
    let all = g.vertices();
    let mut cur = blue;
    let mut active = cur;
    loop {
        let mut changed = false;
        for b in &active {
            let white = g.nbhd(b).difference(&cur);
            if !white.is_empty() && white.len() <= k {
                cur.union_with(&white);
                changed = true;
            }
        }
        if cur == all {
            return true;
        }
        if !changed {
            return false;
        }
        // only vertices with white neighbours can force later
        active = cur
            .iter()
            .filter(|&v| g.nbhd(v).escapes(&cur))
            .collect();
    }
}

pub fn is_zero_forcing_set(g: &Graph, b: &VertexSet) -> bool {
    forces_all(g, b.intersection(&g.vertices()), 1)
}

pub fn is_k_forcing_set(g: &Graph, b: &VertexSet, k: usize) -> bool {
    forces_all(g, b.intersection(&g.vertices()), k)
}

/// Visits the `size`-subsets of `0..n` whose smallest element is `first`,
/// in lexicographic order, until `visit` returns true.
fn subsets_with_first(n: usize, size: usize, first: usize, mut visit: impl FnMut(VertexSet) -> bool) -> bool {
    if size == 0 || first >= n || n - first < size {
        return false;
    }
    let mut idx: Vec<usize> = (0..size).map(|i| first + i).collect();
    loop {
        if visit(idx.iter().copied().collect()) {
            return true;
        }
        // advance positions 1.. only; position 0 stays at `first`
        let mut i = size;
        loop {
            if i <= 1 {
                return false;
            }
            i -= 1;
            if idx[i] < n - (size - i) {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Lexicographically first `size`-subset satisfying `pred`, split over
/// worker threads by smallest element.
fn first_subset(
    n: usize,
    size: usize,
    threads: usize,
    pred: &(dyn Fn(VertexSet) -> bool + Sync),
) -> Option<VertexSet> {
    if size == 0 {
        return pred(VertexSet::empty()).then(VertexSet::empty);
    }
    let firsts = n + 1 - size.min(n + 1);
    if threads <= 1 {
        let mut found = None;
        for first in 0..firsts {
            if subsets_with_first(n, size, first, |s| {
                pred(s).then(|| found = Some(s)).is_some()
            }) {
                return found;
            }
        }
        return None;
    }
    let next = AtomicUsize::new(0);
    // smallest first element with a hit so far
    let cutoff = AtomicUsize::new(usize::MAX);
    let mut hits: Vec<(usize, VertexSet)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|_| {
                scope.spawn(|| {
                    let mut out = Vec::new();
                    loop {
                        let first = next.fetch_add(1, Ordering::Relaxed);
                        if first >= firsts || first > cutoff.load(Ordering::Relaxed) {
                            break;
                        }
                        let mut found = None;
                        subsets_with_first(n, size, first, |s| {
                            pred(s).then(|| found = Some(s)).is_some()
                        });
                        if let Some(s) = found {
                            cutoff.fetch_min(first, Ordering::Relaxed);
                            out.push((first, s));
                        }
                    }
                    out
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    hits.sort_by_key(|&(first, _)| first);
    hits.first().map(|&(_, s)| s)
}

/// Minimum `k`-forcing set by cardinality-ascending subset search.
///
/// Lower bound: the first vertex to force is blue together with all but at
/// most `k` of its neighbours, so `|B| >= δ + 1 - k`. Upper bound: the
/// complement of a greedy Z-sequence is a zero forcing set, hence also a
/// `k`-forcing set.
pub fn minimum_forcing_set(g: &Graph, k: usize, opts: &SearchOptions) -> Result<VertexSet> {
    if k == 0 {
        return Err(Error::Input("k-forcing needs k >= 1".into()));
    }
    g.check_search_size(opts.limit, opts.allow_large)?;
    let n = g.n();
    if n == 0 {
        return Ok(VertexSet::empty());
    }
    let upper_set = g.vertices().difference(&greedy_z_sequence(g).into_iter().collect());
    let upper = upper_set.len();
    let lower = (g.min_degree() + 1).saturating_sub(k).max(1).min(upper);
    let pred = |s: VertexSet| forces_all(g, s, k);
    for size in lower..upper {
        if let Some(s) = first_subset(n, size, opts.threads, &pred) {
            return Ok(s);
        }
    }
    debug_assert!(forces_all(g, upper_set, k));
    // the lexicographically first set of the final size, for stable witnesses
    Ok(first_subset(n, upper, opts.threads, &pred).unwrap_or(upper_set))
}

/// `Z(G)` with a minimum zero forcing set.
pub fn zero_forcing_number(g: &Graph) -> Result<(usize, VertexSet)> {
    zero_forcing_number_with(g, &SearchOptions::default())
}

pub fn zero_forcing_number_with(g: &Graph, opts: &SearchOptions) -> Result<(usize, VertexSet)> {
    let s = minimum_forcing_set(g, 1, opts)?;
    Ok((s.len(), s))
}

pub fn k_forcing_number(g: &Graph, k: usize) -> Result<(usize, VertexSet)> {
    k_forcing_number_with(g, k, &SearchOptions::default())
}

pub fn k_forcing_number_with(g: &Graph, k: usize, opts: &SearchOptions) -> Result<(usize, VertexSet)> {
    let s = minimum_forcing_set(g, k, opts)?;
    Ok((s.len(), s))
}

/// `Z(G)` through the Z-Grundy number: `n - γ_gr^Z(G)`, with the complement
/// of a maximum Z-sequence as the witness.
pub fn zero_forcing_number_via_z_sequences(g: &Graph, opts: &SearchOptions) -> Result<(usize, VertexSet)> {
    let (len, seq) = sequence::grundy_number_with(g, Variant::Z, opts)?;
    let set = forcing_set_from_z_sequence(g, &seq)?;
    debug_assert_eq!(set.len(), g.n() - len);
    Ok((set.len(), set))
}

/// The reversed forced-vertex list of a completed zero forcing process.
pub fn z_sequence_from_forcing(g: &Graph, process: &ForcingProcess) -> Result<GrundySequence> {
    if process.k != 1 {
        return Err(Error::Contract("only 1-forcing processes convert to Z-sequences".into()));
    }
    if let Some(i) = process.first_invalid_force(g) {
        return Err(Error::Contract(format!("force {i} of the process is invalid")));
    }
    if !process.is_complete(g) {
        return Err(Error::Contract("the forcing process does not colour every vertex".into()));
    }
    let order: Vec<usize> = process.forces.iter().rev().map(|f| f.forced).collect();
    let seq = GrundySequence::replay(g, Variant::Z, &order)?;
    debug_assert_eq!(seq.len(), g.n() - process.initial.len());
    Ok(seq)
}

/// The complement of a legal Z-sequence's vertex set, which is a zero forcing set.
pub fn forcing_set_from_z_sequence(g: &Graph, seq: &GrundySequence) -> Result<VertexSet> {
    if seq.variant != Variant::Z || seq.k != 1 {
        return Err(Error::Contract("expected a Z-sequence".into()));
    }
    let verdict = verify_sequence(g, Variant::Z, &seq.order);
    if let Some(i) = verdict.first_violation {
        return Err(Error::Contract(format!("step {i} of the Z-sequence is illegal")));
    }
    let x = g.vertices().difference(&seq.vertex_set());
    if !is_zero_forcing_set(g, &x) {
        return Err(Error::Contract(
            "complement of the Z-sequence failed to force the graph".into(),
        ));
    }
    Ok(x)
}

/// Propagation time with its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropagationTime {
    pub rounds: usize,
    /// False when the minimum zero forcing sets were not all examined.
    pub exact: bool,
    pub zero_forcing_number: usize,
    pub witness: VertexSet,
    /// Minimum zero forcing sets examined.
    pub examined: usize,
}

/// Default number of minimum zero forcing sets [`propagation_time`] examines.
pub const DEFAULT_PROPAGATION_BUDGET: usize = 1_000_000;

pub fn propagation_time(g: &Graph) -> Result<PropagationTime> {
    propagation_time_with(g, DEFAULT_PROPAGATION_BUDGET, &SearchOptions::default())
}

/// Minimum number of synchronous rounds over all minimum zero forcing sets.
/// Scans the `Z`-subsets in lexicographic order; if more than `budget`
/// candidates would be needed, reports the best found and `exact = false`.
pub fn propagation_time_with(g: &Graph, budget: usize, opts: &SearchOptions) -> Result<PropagationTime> {
    let (z, first) = zero_forcing_number_with(g, opts)?;
    let n = g.n();
    let mut best = (closure(g, &first, 1).1.rounds(), first);
    let mut examined = 0usize;
    let mut tried = 0usize;
    let mut exhausted = false;
    let mut visit = |s: VertexSet| -> bool {
        tried += 1;
        if tried > budget {
            exhausted = true;
            return true;
        }
        if forces_all(g, s, 1) {
            examined += 1;
            let r = closure(g, &s, 1).1.rounds();
            if r < best.0 {
                best = (r, s);
            }
        }
        // a single round is optimal unless nothing needs forcing
        best.0 <= usize::from(z < n)
    };
    if z == 0 || z == n {
        examined = 1;
    } else {
        for f in 0..=n - z {
            if subsets_with_first(n, z, f, &mut visit) {
                break;
            }
        }
    }
    Ok(PropagationTime {
        rounds: best.0,
        exact: !exhausted,
        zero_forcing_number: z,
        witness: best.1,
        examined,
    })
}

/// A partition of a maximum Z-sequence into consecutive blocks, each of which
/// is legal in every internal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutableBlocks {
    pub count: usize,
    pub blocks: Vec<VertexSet>,
}

impl PermutableBlocks {
    /// The sequence read block by block, each block in ascending order.
    pub fn sequence(&self) -> Vec<usize> {
        self.blocks.iter().flat_map(|b| b.iter()).collect()
    }
}

/// Whether every ordering of `block`, appended after a prefix with closed
/// union `covered`, is a legal Z-continuation. A vertex is hardest to place
/// last, so this holds iff each member has a neighbour outside `covered`
/// and outside the closed neighbourhoods of the other members.
pub fn is_permutable_block(g: &Graph, covered: &VertexSet, block: &VertexSet) -> bool {
    block.iter().all(|t| {
        let others = block
            .iter()
            .filter(|&s| s != t)
            .fold(*covered, |acc, s| acc.union(&g.closed_nbhd(s)));
        g.nbhd(t).escapes(&others)
    })
}

struct BlockSearch<'a> {
    g: &'a Graph,
    eval: Searcher<'a>,
    memo: FxHashMap<VertexSet, usize>,
}

impl BlockSearch<'_> {
    fn remaining(&mut self, covered: VertexSet) -> usize {
        self.eval.value(covered, VertexSet::empty())
    }

    /// Permutable blocks at `covered` whose addition keeps a maximum sequence
    /// reachable, with the resulting covered set.
    fn optimal_blocks(&mut self, covered: VertexSet) -> Vec<(VertexSet, VertexSet)> {
        let target = self.remaining(covered);
        let legal: Vec<usize> = (0..self.g.n())
            .filter(|&v| self.g.nbhd(v).escapes(&covered))
            .collect();
        let mut out = Vec::new();
        let mut stack = vec![(VertexSet::empty(), 0usize)];
        while let Some((block, from)) = stack.pop() {
            if !block.is_empty() {
                let next = block
                    .iter()
                    .fold(covered, |acc, v| acc.union(&self.g.closed_nbhd(v)));
                if block.len() + self.remaining(next) == target {
                    out.push((block, next));
                }
            }
            if block.len() >= target {
                continue;
            }
            for (i, &v) in legal.iter().enumerate().skip(from) {
                let mut bigger = block;
                bigger.insert(v);
                // permutability is inherited by sub-blocks
                if is_permutable_block(self.g, &covered, &bigger) {
                    stack.push((bigger, i + 1));
                }
            }
        }
        out.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(&b.0)));
        out
    }

    fn min_blocks(&mut self, covered: VertexSet) -> usize {
        if let Some(&v) = self.memo.get(&covered) {
            return v;
        }
        let best = if self.remaining(covered) == 0 {
            0
        } else {
            let options = self.optimal_blocks(covered);
            options
                .into_iter()
                .map(|(_, next)| 1 + self.min_blocks(next))
                .min()
                .expect("a positive remaining length has a one-vertex optimal block")
        };
        self.memo.insert(covered, best);
        best
    }
}

/// Minimum number of consecutive permutable blocks over all maximum
/// Z-sequences (equivalently, those whose complement is a minimum zero
/// forcing set), with a minimizing partition.
pub fn min_permutable_blocks(g: &Graph) -> Result<PermutableBlocks> {
    min_permutable_blocks_with(g, &SearchOptions::default())
}

pub fn min_permutable_blocks_with(g: &Graph, opts: &SearchOptions) -> Result<PermutableBlocks> {
    g.check_search_size(opts.limit, opts.allow_large)?;
    let problem = sequence::z_problem(g);
    let mut s = BlockSearch {
        g,
        eval: Searcher::new(&problem, opts.memo_cap),
        memo: FxHashMap::default(),
    };
    let mut covered = VertexSet::empty();
    let count = s.min_blocks(covered);
    let mut blocks = Vec::with_capacity(count);
    while s.remaining(covered) > 0 {
        let want = s.min_blocks(covered);
        let (block, next) = s
            .optimal_blocks(covered)
            .into_iter()
            .find(|&(_, next)| 1 + s.min_blocks(next) == want)
            .expect("the minimum is attained");
        blocks.push(block);
        covered = next;
    }
    Ok(PermutableBlocks { count, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::sequence::grundy_number;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn closure_examples() {
        let p4 = path(4).unwrap();
        let (blue, proc) = closure(&p4, &set(&[0]), 1);
        assert_eq!(blue, p4.vertices());
        assert_eq!(proc.forces.len(), 3);
        assert_eq!(proc.rounds(), 3);

        let s3 = star(3).unwrap();
        let (blue, proc) = closure(&s3, &set(&[0]), 1);
        assert_eq!(blue, set(&[0]));
        assert!(proc.forces.is_empty());

        let (blue, proc) = closure(&s3, &set(&[0]), 3);
        assert_eq!(blue, s3.vertices());
        assert_eq!(proc.rounds(), 1);
        assert_eq!(proc.forces.len(), 3);
    }

    #[test]
    fn synchronous_rounds_share_a_start_state() {
        // C_6 from {0,1}: 0 forces 5 and 1 forces 2 together, then 3 and 4
        let c6 = cycle(6).unwrap();
        let (_, proc) = closure(&c6, &set(&[0, 1]), 1);
        let rounds: Vec<(usize, usize, usize)> =
            proc.forces.iter().map(|f| (f.round, f.forcer, f.forced)).collect();
        assert_eq!(rounds, vec![(1, 0, 5), (1, 1, 2), (2, 2, 3), (2, 5, 4)]);
        assert_eq!(proc.first_invalid_force(&c6), None);
        let json = serde_json::to_string(&proc).unwrap();
        assert!(json.starts_with(r#"{"initial":[0,1],"forces":[{"round":1,"forcer":0,"forced":5}"#));
    }

    #[test]
    fn tampered_chronology_is_caught() {
        let c6 = cycle(6).unwrap();
        let (_, mut proc) = closure(&c6, &set(&[0, 1]), 1);
        proc.forces.swap(1, 2);
        assert!(proc.first_invalid_force(&c6).is_some());
        let (_, mut proc) = closure(&c6, &set(&[0, 1]), 1);
        proc.forces[2].forced = 4;
        assert!(proc.first_invalid_force(&c6).is_some());
    }

    #[test]
    fn zero_forcing_set_examples() {
        assert!(is_zero_forcing_set(&path(5).unwrap(), &set(&[0])));
        let c4 = cycle(4).unwrap();
        assert!(!is_zero_forcing_set(&c4, &set(&[0])));
        assert!(is_zero_forcing_set(&c4, &set(&[0, 1])));
        let g = sierpinski(3, 2).unwrap();
        assert!(is_zero_forcing_set(&g, &g.vertices()));
    }

    #[test]
    fn zero_forcing_number_examples() {
        for n in 1..=6 {
            assert_eq!(zero_forcing_number(&star(n).unwrap()).unwrap().0, n.max(2) - 1);
        }
        assert_eq!(zero_forcing_number(&sierpinski(3, 2).unwrap()).unwrap().0, 3);
        for n in 1..=9 {
            assert_eq!(zero_forcing_number(&path(n).unwrap()).unwrap(), (1, set(&[0])));
        }
        assert_eq!(zero_forcing_number(&Graph::edgeless(3).unwrap()).unwrap().0, 3);
        assert_eq!(zero_forcing_number(&Graph::edgeless(0).unwrap()).unwrap().0, 0);
    }

    #[test]
    fn k_forcing_examples() {
        assert_eq!(k_forcing_number(&star(3).unwrap(), 3).unwrap().0, 1);
        for g in [cycle(5).unwrap(), star(4).unwrap(), sierpinski(3, 2).unwrap()] {
            assert_eq!(k_forcing_number(&g, 1).unwrap(), zero_forcing_number(&g).unwrap());
        }
        // subset enumeration gives 1: a vertex of C_5 forces both neighbours
        assert_eq!(k_forcing_number(&cycle(5).unwrap(), 2).unwrap().0, 1);
        assert!(k_forcing_number(&cycle(5).unwrap(), 0).is_err());
    }

    #[test]
    fn parallel_subset_search_matches() {
        let opts = SearchOptions { threads: 4, ..SearchOptions::default() };
        for g in [sierpinski(3, 2).unwrap(), cycle(7).unwrap(), hypercube(3).unwrap()] {
            assert_eq!(zero_forcing_number_with(&g, &opts).unwrap(), zero_forcing_number(&g).unwrap());
        }
    }

    #[test]
    fn forcing_to_z_sequence() {
        let p3 = path(3).unwrap();
        let (_, proc) = closure(&p3, &set(&[0]), 1);
        let seq = z_sequence_from_forcing(&p3, &proc).unwrap();
        assert_eq!(seq.order, vec![2, 1]);

        let s3 = star(3).unwrap();
        let (_, proc) = closure(&s3, &set(&[1, 2]), 1);
        let seq = z_sequence_from_forcing(&s3, &proc).unwrap();
        assert_eq!(seq.len(), 2);
        assert!(verify_sequence(&s3, Variant::Z, &seq.order).legal);

        let (_, stuck) = closure(&s3, &set(&[0]), 1);
        assert!(matches!(z_sequence_from_forcing(&s3, &stuck), Err(Error::Contract(_))));
    }

    #[test]
    fn z_sequence_to_forcing_set() {
        let p3 = path(3).unwrap();
        let seq = GrundySequence::replay(&p3, Variant::Z, &[2, 1]).unwrap();
        assert_eq!(forcing_set_from_z_sequence(&p3, &seq).unwrap(), set(&[0]));

        for n in 2..=5 {
            let s = star(n).unwrap();
            let (len, seq) = grundy_number(&s, Variant::Z).unwrap();
            assert_eq!(len, 2);
            let x = forcing_set_from_z_sequence(&s, &seq).unwrap();
            assert_eq!(x.len(), n - 1);
        }

        let q3 = hypercube(3).unwrap();
        let (len, seq) = grundy_number(&q3, Variant::Z).unwrap();
        assert_eq!(len, 4);
        assert_eq!(forcing_set_from_z_sequence(&q3, &seq).unwrap().len(), 4);

        let bad = GrundySequence {
            variant: Variant::Z,
            k: 1,
            order: vec![1, 0],
            footprints: vec![],
        };
        assert!(matches!(forcing_set_from_z_sequence(&p3, &bad), Err(Error::Contract(_))));
    }

    #[test]
    fn z_route_agrees_with_subset_search() {
        for g in [sierpinski(3, 2).unwrap(), cycle(6).unwrap(), hypercube(3).unwrap(), glued_cliques(4).unwrap()] {
            let a = zero_forcing_number(&g).unwrap().0;
            let (b, set) = zero_forcing_number_via_z_sequences(&g, &SearchOptions::default()).unwrap();
            assert_eq!(a, b);
            assert!(is_zero_forcing_set(&g, &set));
        }
    }

    #[test]
    fn propagation_time_examples() {
        for n in 2..=7 {
            let pt = propagation_time(&path(n).unwrap()).unwrap();
            assert_eq!(pt.rounds, n - 1);
            assert!(pt.exact);
        }
        for n in 2..=6 {
            assert_eq!(propagation_time(&complete(n).unwrap()).unwrap().rounds, 1);
        }
        let c4 = propagation_time(&cycle(4).unwrap()).unwrap();
        assert_eq!((c4.rounds, c4.zero_forcing_number), (1, 2));
        assert_eq!(propagation_time(&Graph::edgeless(1).unwrap()).unwrap().rounds, 0);
    }

    #[test]
    fn propagation_budget_flags_inexact() {
        // C_8 needs Z = 2; with a one-candidate budget the scan is cut short
        let g = cycle(8).unwrap();
        let pt = propagation_time_with(&g, 1, &SearchOptions::default()).unwrap();
        assert!(!pt.exact);
        assert!(pt.rounds >= propagation_time(&g).unwrap().rounds);
    }

    #[test]
    fn permutable_block_examples() {
        for n in 2..=7 {
            let b = min_permutable_blocks(&path(n).unwrap()).unwrap();
            assert_eq!(b.count, n - 1);
            assert!(b.blocks.iter().all(|blk| blk.len() == 1));
        }
        for n in 2..=6 {
            assert_eq!(min_permutable_blocks(&complete(n).unwrap()).unwrap().count, 1);
        }
    }

    #[test]
    fn blocks_form_a_maximum_z_sequence() {
        for g in [cycle(6).unwrap(), sierpinski(3, 2).unwrap(), hypercube(3).unwrap()] {
            let b = min_permutable_blocks(&g).unwrap();
            let seq = b.sequence();
            assert!(verify_sequence(&g, Variant::Z, &seq).legal);
            assert_eq!(seq.len(), grundy_number(&g, Variant::Z).unwrap().0);
            let mut covered = VertexSet::empty();
            for blk in &b.blocks {
                assert!(is_permutable_block(&g, &covered, blk));
                for v in blk {
                    covered.union_with(&g.closed_nbhd(v));
                }
            }
            assert_eq!(b.count, propagation_time(&g).unwrap().rounds);
        }
    }
}
