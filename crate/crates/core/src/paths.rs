//! Distances, diameter, and enumeration of diametral paths.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};

/// Default number of diametral paths enumerated before giving up.
pub const DEFAULT_PATH_CAP: usize = 10_000;

/// All-pairs BFS distances; `None` for unreachable pairs.
pub fn distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    (0..g.order()).map(|s| bfs(g, s)).collect()
}

fn bfs(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut visited = 1u64 << source;
    let mut frontier = visited;
    let mut level = 0;
    while frontier != 0 {
        level += 1;
        let mut next = 0u64;
        for v in BitIter(frontier) {
            next |= g.neighbor_mask(v);
        }
        next &= !visited;
        for v in BitIter(next) {
            dist[v] = Some(level);
        }
        visited |= next;
        frontier = next;
    }
    dist
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diameter {
    pub diameter: usize,
    pub eccentricities: Vec<usize>,
}

/// Diameter and per-vertex eccentricities of a connected graph.
pub fn diameter(g: &Graph) -> Result<Diameter> {
    let dist = connected_distances(g)?;
    let eccentricities: Vec<usize> = dist
        .iter()
        .map(|row| row.iter().copied().max().unwrap_or(0))
        .collect();
    Ok(Diameter {
        diameter: eccentricities.iter().copied().max().unwrap_or(0),
        eccentricities,
    })
}

fn connected_distances(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let components = g.component_count();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    Ok(distances(g)
        .into_iter()
        .map(|row| row.into_iter().map(|d| d.expect("connected")).collect())
        .collect())
}

/// A shortest path whose length equals the diameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub length: usize,
}

/// Outcome of a capped enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiametralPaths {
    pub paths: Vec<PathWitness>,
    /// True when enumeration stopped at the cap with paths left over.
    pub truncated: bool,
}

/// Lists diametral paths in lexicographic order of their vertex sequences,
/// one orientation per path (first vertex smaller than the last).
pub fn diametral_paths(g: &Graph, cap: usize) -> Result<DiametralPaths> {
    let mut paths = Vec::new();
    let truncated = for_each_diametral_path(g, |p| {
        if paths.len() == cap {
            return false;
        }
        paths.push(PathWitness {
            vertices: p.to_vec(),
            length: p.len() - 1,
        });
        true
    })?;
    Ok(DiametralPaths { paths, truncated })
}

/// Calls `visit` on every diametral path in lexicographic order until it
/// returns `false`. Returns whether the walk was stopped early.
pub fn for_each_diametral_path<F>(g: &Graph, mut visit: F) -> Result<bool>
where
    F: FnMut(&[usize]) -> bool,
{
    let dist = connected_distances(g)?;
    let n = g.order();
    let d = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut stack = Vec::with_capacity(d + 1);
    for u in 0..n {
        for v in u + 1..n {
            if dist[u][v] != d || d == 0 {
                continue;
            }
            stack.clear();
            stack.push(u);
            if !walk(g, &dist, v, &mut stack, &mut visit) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

// Depth-first over neighbours that step one layer closer to `target`.
fn walk<F>(g: &Graph, dist: &[Vec<usize>], target: usize, stack: &mut Vec<usize>, visit: &mut F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    let here = *stack.last().expect("nonempty");
    if here == target {
        return visit(stack);
    }
    let remaining = dist[here][target];
    for w in g.neighbors(here) {
        if dist[w][target] + 1 == remaining {
            stack.push(w);
            let go_on = walk(g, dist, target, stack, visit);
            stack.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_diameters() {
        assert_eq!(diameter(&Graph::path(5).unwrap()).unwrap().diameter, 4);
        assert_eq!(diameter(&Graph::complete(7).unwrap()).unwrap().diameter, 1);
        assert_eq!(
            diameter(&Graph::path(4).unwrap()).unwrap().eccentricities,
            vec![3, 2, 2, 3]
        );
        assert_eq!(
            diameter(&Graph::empty(2).unwrap()),
            Err(Error::Disconnected { components: 2 })
        );
    }

    #[test]
    fn path_and_cycle_witnesses() {
        let p4 = diametral_paths(&Graph::path(4).unwrap(), 10).unwrap();
        assert_eq!(p4.paths.len(), 1);
        assert_eq!(p4.paths[0].vertices, vec![0, 1, 2, 3]);

        let c4 = diametral_paths(&Graph::cycle(4).unwrap(), 10).unwrap();
        let seqs: Vec<_> = c4.paths.iter().map(|p| p.vertices.clone()).collect();
        assert_eq!(
            seqs,
            vec![vec![0, 1, 2], vec![0, 3, 2], vec![1, 0, 3], vec![1, 2, 3]]
        );
        assert!(!c4.truncated);

        let capped = diametral_paths(&Graph::cycle(4).unwrap(), 2).unwrap();
        assert_eq!(capped.paths.len(), 2);
        assert!(capped.truncated);
    }

    #[test]
    fn single_vertex_has_no_diametral_path() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(diameter(&k1).unwrap().diameter, 0);
        assert!(diametral_paths(&k1, 5).unwrap().paths.is_empty());
    }
}
