//! Simple undirected graphs on vertices `0..n`.
//!
//! Adjacency is kept twice: as one `u64` bitset row per vertex (constant-time
//! adjacency tests, cheap relabelling for canonical forms) and as a sorted edge
//! list. Both are fixed at construction; every editing operation returns a new
//! graph.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order the bitset representation can hold.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edgeless graph `nK_1`.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            edges: Vec::new(),
        })
    }

    /// Builds a graph from unordered pairs. Duplicates, loops and out-of-range
    /// endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![0u64; n];
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        for &(u, v) in edges {
            check_pair(n, u, v)?;
            if adj[u] >> v & 1 == 1 {
                return Err(Error::Edit {
                    u,
                    v,
                    reason: "duplicate edge".into(),
                });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_rows(n, adj))
    }

    /// Builds a graph from symmetric, loop-free bitset rows.
    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        let mut edges = Vec::new();
        for u in 0..n {
            debug_assert_eq!(adj[u] >> u & 1, 0);
            let mut higher = if u + 1 >= 64 { 0 } else { adj[u] >> (u + 1) << (u + 1) };
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                edges.push((u, v));
                higher &= higher - 1;
            }
        }
        Graph { n, adj, edges }
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Self::from_edges(n, &edges)
    }

    /// Star `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Self::from_edges(k + 1, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Bitset of the neighbours of `v`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn complement(&self) -> Graph {
        let full = mask_below(self.n);
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Self::from_rows(self.n, adj)
    }

    /// Disjoint union with vertex blocks in the order given.
    pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
        let n: usize = graphs.iter().map(Graph::order).sum();
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in graphs {
            edges.extend(g.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
            offset += g.n;
        }
        Self::from_edges(n, &edges)
    }

    /// `k` disjoint copies of `self`.
    pub fn copies(&self, k: usize) -> Result<Graph> {
        Self::disjoint_union(&vec![self.clone(); k])
    }

    /// Adds and removes edges. Removing a non-edge or adding an existing edge
    /// fails with the offending pair.
    pub fn edit(&self, add: &[(usize, usize)], remove: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = self.adj.clone();
        for &(u, v) in remove {
            check_pair(self.n, u, v)?;
            if adj[u] >> v & 1 == 0 {
                return Err(Error::Edit {
                    u,
                    v,
                    reason: "not an edge".into(),
                });
            }
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        }
        for &(u, v) in add {
            check_pair(self.n, u, v)?;
            if adj[u] >> v & 1 == 1 {
                return Err(Error::Edit {
                    u,
                    v,
                    reason: "edge already present".into(),
                });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_rows(self.n, adj))
    }

    pub fn remove_edges(&self, remove: &[(usize, usize)]) -> Result<Graph> {
        self.edit(&[], remove)
    }

    pub fn add_edges(&self, add: &[(usize, usize)]) -> Result<Graph> {
        self.edit(add, &[])
    }

    /// Connected components as vertex bitsets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in BitIter(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.n
    }

    /// Subgraph induced by `keep`, relabelled `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        let mut edges = Vec::new();
        for (i, &u) in keep.iter().enumerate() {
            if u >= self.n {
                return Err(Error::Parameter(format!("vertex {u} out of range")));
            }
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Self::from_edges(keep.len(), &edges)
    }

    /// Graph with vertex `v` renamed `perm[v]`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n || !is_permutation(perm) {
            return Err(Error::Parameter("relabel needs a permutation of 0..n".into()));
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_edges(self.n, &edges)
    }

    /// Plain edge-list text: `n` on the first line, then one `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut offset = 0;
        let mut n = None;
        let mut edges = Vec::new();
        for line in text.split_inclusive('\n') {
            let start = offset;
            offset += line.len();
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    offset: start,
                    message: format!("expected a nonnegative integer, found {s:?}"),
                })
            };
            match (n, fields.as_slice()) {
                (None, [k]) => n = Some(parse(k)?),
                (None, _) => {
                    return Err(Error::Parse {
                        offset: start,
                        message: "first line must hold the vertex count".into(),
                    })
                }
                (Some(_), [a, b]) => edges.push((parse(a)?, parse(b)?)),
                (Some(_), _) => {
                    return Err(Error::Parse {
                        offset: start,
                        message: "edge lines hold exactly two vertices".into(),
                    })
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            offset: 0,
            message: "empty edge list".into(),
        })?;
        Self::from_edges(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    if u == v {
        return Err(Error::Edit {
            u,
            v,
            reason: "self-loop".into(),
        });
    }
    if u >= n || v >= n {
        return Err(Error::Edit {
            u,
            v,
            reason: format!("endpoint out of range for order {n}"),
        });
    }
    Ok(())
}

pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter().all(|&p| p < perm.len() && !std::mem::replace(&mut seen[p], true))
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
