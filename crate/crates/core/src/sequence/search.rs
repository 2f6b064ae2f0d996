//! Memoized branch-and-bound over "covered set" states.
//!
//! A problem is a list of items, each with a footprint set `F` and a cover
//! set `C`. Item `i` may be appended when it has not been chosen and
//! `F_i \ covered` is nonempty; appending it adds `C_i` to `covered`. The four
//! graph sequence variants and hypergraph covering sequences are all
//! instances:
//!
//! | problem   | F     | C     |
//! |-----------|-------|-------|
//! | closed    | N[v]  | N[v]  |
//! | total     | N(v)  | N(v)  |
//! | Z         | N(v)  | N[v]  |
//! | L         | N[v]  | N(v)  |
//! | covering  | e     | e     |
//!
//! When `F_i ⊆ C_i` for every item, a chosen item can never be legal again,
//! so the covered set alone determines the future and is the memo key. For
//! the L problem a chosen vertex may stay legal after its own neighbourhood
//! is covered, so the key also carries the chosen items that would otherwise
//! still be legal.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rustc_hash::FxHashMap;

use crate::bitset::VertexSet;

/// Tuning knobs shared by every exponential search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of memo entries per worker; past it the search keeps
    /// running as plain branch-and-bound.
    pub memo_cap: usize,
    /// Worker threads for the top branching level.
    pub threads: usize,
    /// Vertex-count guard for exponential searches.
    pub limit: usize,
    /// Lift the guard.
    pub allow_large: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            memo_cap: 1 << 26,
            threads: 1,
            limit: crate::graph::DEFAULT_SEARCH_LIMIT,
            allow_large: false,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Item {
    pub footprint: VertexSet,
    pub cover: VertexSet,
}

#[derive(Debug)]
pub(crate) struct SequenceProblem {
    items: Vec<Item>,
    self_blocking: bool,
    universe: VertexSet,
}

impl SequenceProblem {
    pub fn new(items: Vec<Item>) -> Self {
        let self_blocking = items.iter().all(|it| it.footprint.is_subset(&it.cover));
        let universe = items.iter().fold(VertexSet::empty(), |acc, it| acc.union(&it.footprint));
        SequenceProblem {
            items,
            self_blocking,
            universe,
        }
    }

    #[inline]
    fn legal(&self, i: usize, covered: &VertexSet, chosen: &VertexSet) -> bool {
        !chosen.contains(i) && self.items[i].footprint.escapes(covered)
    }

    /// Upper bound on how many more items can be appended.
    fn bound(&self, covered: &VertexSet, chosen: &VertexSet) -> usize {
        let legal = (0..self.items.len())
            .filter(|&i| self.legal(i, covered, chosen))
            .count();
        if self.self_blocking {
            // each step footprints at least one new universe element
            legal.min(self.universe.difference(covered).len())
        } else {
            legal
        }
    }

    /// Legal items in branching order: larger fresh footprint first, then lower id.
    fn branches(&self, covered: &VertexSet, chosen: &VertexSet) -> Vec<usize> {
        let mut out: Vec<(usize, usize)> = (0..self.items.len())
            .filter(|&i| self.legal(i, covered, chosen))
            .map(|i| (self.items[i].footprint.difference(covered).len(), i))
            .collect();
        out.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        out.into_iter().map(|(_, i)| i).collect()
    }

    fn child(&self, i: usize, covered: &VertexSet, chosen: &VertexSet) -> (VertexSet, VertexSet) {
        let mut ch = *chosen;
        ch.insert(i);
        (covered.union(&self.items[i].cover), ch)
    }

    /// Exact maximum sequence length from the empty state and one witness.
    pub fn solve(&self, opts: &SearchOptions) -> (usize, Vec<usize>) {
        let (covered, chosen) = (VertexSet::empty(), VertexSet::empty());
        let threads = opts.threads.max(1);
        let first = if threads > 1 {
            self.solve_top_level_parallel(threads, opts.memo_cap / threads)
        } else {
            None
        };
        let mut s = Searcher::new(self, opts.memo_cap);
        let mut order = Vec::new();
        let (mut cov, mut ch) = (covered, chosen);
        if let Some((best, i)) = first {
            if best == 0 {
                return (0, order);
            }
            order.push(i);
            (cov, ch) = self.child(i, &cov, &ch);
        }
        let best = order.len() + s.value(cov, ch);
        s.extend_witness(&mut order, cov, ch);
        debug_assert_eq!(order.len(), best);
        (best, order)
    }

    /// Evaluates the first branching level on worker threads; returns the
    /// optimum and the first top-level item (in branching order) reaching it.
    fn solve_top_level_parallel(&self, threads: usize, cap: usize) -> Option<(usize, usize)> {
        let (covered, chosen) = (VertexSet::empty(), VertexSet::empty());
        let top = self.branches(&covered, &chosen);
        if top.is_empty() {
            return Some((0, usize::MAX));
        }
        let next = AtomicUsize::new(0);
        let best = AtomicUsize::new(0);
        let results: Mutex<Vec<Option<usize>>> = Mutex::new(vec![None; top.len()]);
        std::thread::scope(|scope| {
            for _ in 0..threads.min(top.len()) {
                scope.spawn(|| {
                    let mut s = Searcher::new(self, cap);
                    loop {
                        let k = next.fetch_add(1, Ordering::Relaxed);
                        if k >= top.len() {
                            break;
                        }
                        let (cov, ch) = self.child(top[k], &covered, &chosen);
                        // strict so that every branch able to tie is evaluated
                        // and the witness matches the sequential one
                        if 1 + self.bound(&cov, &ch) < best.load(Ordering::Relaxed) {
                            continue;
                        }
                        let v = 1 + s.value(cov, ch);
                        best.fetch_max(v, Ordering::Relaxed);
                        results.lock().expect("worker panicked")[k] = Some(v);
                    }
                });
            }
        });
        let best = best.into_inner();
        let results = results.into_inner().expect("worker panicked");
        top.iter()
            .zip(results)
            .find(|(_, v)| *v == Some(best))
            .map(|(&i, _)| (best, i))
    }
}

pub(crate) struct Searcher<'a> {
    p: &'a SequenceProblem,
    cap: usize,
    by_cover: FxHashMap<VertexSet, u8>,
    by_pair: FxHashMap<(VertexSet, VertexSet), u8>,
}

impl<'a> Searcher<'a> {
    pub(crate) fn new(p: &'a SequenceProblem, cap: usize) -> Self {
        Searcher {
            p,
            cap,
            by_cover: FxHashMap::default(),
            by_pair: FxHashMap::default(),
        }
    }

    fn live_chosen(&self, covered: &VertexSet, chosen: &VertexSet) -> VertexSet {
        chosen
            .iter()
            .filter(|&i| self.p.items[i].footprint.escapes(covered))
            .collect()
    }

    fn lookup(&self, covered: &VertexSet, chosen: &VertexSet) -> Option<usize> {
        if self.p.self_blocking {
            self.by_cover.get(covered).map(|&v| v as usize)
        } else {
            self.by_pair
                .get(&(*covered, self.live_chosen(covered, chosen)))
                .map(|&v| v as usize)
        }
    }

    fn store(&mut self, covered: VertexSet, chosen: &VertexSet, value: usize) {
        if self.p.self_blocking {
            if self.by_cover.len() < self.cap {
                self.by_cover.insert(covered, value as u8);
            }
        } else if self.by_pair.len() < self.cap {
            let live = self.live_chosen(&covered, chosen);
            self.by_pair.insert((covered, live), value as u8);
        }
    }

    /// Longest legal continuation from `(covered, chosen)`.
    pub(crate) fn value(&mut self, covered: VertexSet, chosen: VertexSet) -> usize {
        if let Some(v) = self.lookup(&covered, &chosen) {
            return v;
        }
        let branches = self.p.branches(&covered, &chosen);
        let ceiling = self.p.bound(&covered, &chosen);
        let mut best = 0;
        for i in branches {
            if best >= ceiling {
                break;
            }
            let (cov, ch) = self.p.child(i, &covered, &chosen);
            if self.p.bound(&cov, &ch) < best {
                continue;
            }
            best = best.max(1 + self.value(cov, ch));
        }
        self.store(covered, &chosen, best);
        best
    }

    /// Appends a maximum continuation, choosing the first optimal branch.
    fn extend_witness(&mut self, order: &mut Vec<usize>, mut covered: VertexSet, mut chosen: VertexSet) {
        let mut remaining = self.value(covered, chosen);
        while remaining > 0 {
            let pick = self
                .p
                .branches(&covered, &chosen)
                .into_iter()
                .find(|&i| {
                    let (cov, ch) = self.p.child(i, &covered, &chosen);
                    1 + self.p.bound(&cov, &ch) >= remaining && 1 + self.value(cov, ch) == remaining
                })
                .expect("an optimal branch exists for a positive value");
            order.push(pick);
            (covered, chosen) = self.p.child(pick, &covered, &chosen);
            remaining -= 1;
        }
    }
}
