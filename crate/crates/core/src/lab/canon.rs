//! Canonical labelling by individualisation and refinement.
//!
//! The canonical form is the relabelled graph whose adjacency rows are
//! lexicographically largest among all leaves of the search tree. Subtrees
//! that are images of explored ones under a known automorphism fixing the
//! current prefix are skipped.

use crate::graph::{BitIter, Graph};

/// A canonical form together with the labelling that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub graph: Graph,
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
    /// Automorphism generators found during the search, as vertex maps.
    pub automorphisms: Vec<Vec<usize>>,
}

type Cells = Vec<Vec<usize>>;

fn mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

/// Splits cells by neighbour counts into each splitter until stable. Groups are
/// ordered by count, so the result depends only on the labelled structure.
fn refine(adj: &[u64], cells: &mut Cells) {
    'outer: loop {
        for w in 0..cells.len() {
            let wmask = mask(&cells[w]);
            let mut next = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((adj[v] & wmask).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut group = vec![keyed[0].1];
                for pair in keyed.windows(2) {
                    if pair[1].0 != pair[0].0 {
                        next.push(std::mem::take(&mut group));
                        split = true;
                    }
                    group.push(pair[1].1);
                }
                next.push(group);
            }
            if split {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

struct Search<'a> {
    adj: &'a [u64],
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &Cells) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut inv = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            inv[v] = i;
        }
        let cert: Vec<u64> = order
            .iter()
            .map(|&v| BitIter(self.adj[v]).fold(0u64, |m, w| m | 1 << inv[w]))
            .collect();
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((best, best_order)) => {
                if cert > *best {
                    self.best = Some((cert, order));
                } else if cert == *best {
                    let mut gamma = vec![0; order.len()];
                    for (i, &v) in best_order.iter().enumerate() {
                        gamma[v] = order[i];
                    }
                    if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                        self.autos.push(gamma);
                    }
                }
            }
        }
    }

    /// Orbit representatives under the known automorphisms fixing `fixed`.
    fn orbits(&self, fixed: &[usize]) -> Vec<usize> {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.autos {
            if fixed.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn search(&mut self, cells: Cells, fixed: &mut Vec<usize>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(target) = target else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() {
                let orbit = self.orbits(fixed);
                if explored.iter().any(|&x| orbit[x] == orbit[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = cells.clone();
            child[target] = vec![v];
            child.insert(target + 1, cell.iter().copied().filter(|&w| w != v).collect());
            refine(self.adj, &mut child);
            fixed.push(v);
            self.search(child, fixed);
            fixed.pop();
        }
    }
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    let n = g.order();
    let adj: Vec<u64> = g.rows().to_vec();
    if n == 0 {
        return Canonical {
            graph: g.clone(),
            labeling: Vec::new(),
            automorphisms: Vec::new(),
        };
    }
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(&adj, &mut cells);
    let mut s = Search {
        adj: &adj,
        best: None,
        autos: Vec::new(),
    };
    s.search(cells, &mut Vec::new());
    let (cert, order) = s.best.expect("search reaches a leaf");
    let mut labeling = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        labeling[v] = i;
    }
    Canonical {
        graph: Graph::from_rows(n, cert),
        labeling,
        automorphisms: s.autos,
    }
}

/// Representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).graph
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}
