//! Simple undirected graphs over `0..n` with bit-packed adjacency, plus the
//! edge-list text format.
//!
//! The format is a header line `n m` followed by `m` lines `u v`. Lines whose
//! first non-blank character is `#` are comments, and blank lines are skipped.
//! Duplicate edges collapse; self-loops and out-of-range endpoints are errors.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// Default ceiling on the vertex count accepted by exponential searches.
pub const DEFAULT_SEARCH_LIMIT: usize = 64;

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::empty(); n],
        })
    }

    /// Builds a graph from an edge list; duplicate edges are ignored.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::edgeless(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric adjacency predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// All vertices as a set.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Minimum degree; `0` for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    /// `N(v)`, without bounds checking. Panics if `v >= n`.
    #[inline]
    pub fn nbhd(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v]`, without bounds checking. Panics if `v >= n`.
    #[inline]
    pub fn closed_nbhd(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.nbhd(v))
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed_nbhd(v))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "vertex {v} out of range for {} vertices",
                self.n
            )))
        }
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(VertexSet::is_empty)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            frontier = next.difference(&seen);
            seen.union_with(&next);
        }
        seen.len() == self.n
    }

    /// Degree sequence in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(VertexSet::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Rejects graphs above `limit` vertices unless `allow_large` is set.
    pub fn check_search_size(&self, limit: usize, allow_large: bool) -> Result<()> {
        if !allow_large && self.n > limit {
            Err(Error::Capacity { n: self.n, limit })
        } else {
            Ok(())
        }
    }

    /// Parses the edge-list document.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        if n > MAX_VERTICES {
            return Err(Error::Parse {
                line: hline,
                msg: format!("{n} vertices exceeds capacity {MAX_VERTICES}"),
            });
        }

        let mut g = Self::edgeless(n)?;
        let mut seen = 0usize;
        let mut last = hline;
        for (line, body) in lines {
            last = line;
            let (u, v) = parse_pair(line, body)?;
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    msg: format!("vertex out of range in edge ({u},{v}); n = {n}"),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line,
                    msg: format!("self-loop at vertex {u}"),
                });
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
            seen += 1;
        }
        // `m` may count either edge lines or distinct edges.
        if seen != m && g.edge_count() != m {
            return Err(Error::Parse {
                line: last,
                msg: format!(
                    "header announces {m} edges but {seen} edge lines ({} distinct) follow",
                    g.edge_count()
                ),
            });
        }
        Ok(g)
    }

    /// Serializes with the edge count deduplicated and edges sorted.
    pub fn serialize(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut field = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            msg: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("expected an unsigned integer for {what}, found {tok:?}"),
        })
    };
    let a = field("first field")?;
    let b = field("second field")?;
    if let Some(extra) = it.next() {
        return Err(Error::Parse {
            line,
            msg: format!("unexpected trailing token {extra:?}"),
        });
    }
    Ok((a, b))
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
