//! Exhaustive generation of connected graphs and trees up to isomorphism.
//!
//! Order `n` graphs come from order `n-1` representatives by adding one vertex
//! joined to every nonempty neighbour subset. Every connected graph has a
//! non-cut vertex, so this reaches every class; duplicates are removed by
//! canonical form.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order enumerated unless overridden by `LAPLAB_MAX_N`.
pub const DEFAULT_CEILING: usize = 9;

/// Trees are cheap enough to go further.
pub const TREE_CEILING: usize = 18;

pub fn enumeration_ceiling() -> usize {
    std::env::var("LAPLAB_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CEILING)
}

type Cache = Mutex<HashMap<(bool, usize), Arc<Vec<Graph>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(tree: bool, n: usize, build: impl FnOnce() -> Result<Vec<Graph>>) -> Result<Arc<Vec<Graph>>> {
    if let Some(v) = cache().lock().unwrap().get(&(tree, n)) {
        return Ok(v.clone());
    }
    let v = Arc::new(build()?);
    cache().lock().unwrap().insert((tree, n), v.clone());
    Ok(v)
}

fn check_ceiling(n: usize, ceiling: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Parameter("order must be at least 1".into()));
    }
    if n > ceiling {
        return Err(Error::Capability { n, ceiling });
    }
    Ok(())
}

fn extend_all(parents: &[Graph], children: impl Fn(&Graph) -> Vec<Graph> + Sync) -> Vec<Graph> {
    let set = parents
        .par_iter()
        .fold(HashSet::new, |mut acc, h| {
            acc.extend(children(h).iter().map(canonical_form));
            acc
        })
        .reduce(HashSet::new, |a, b| {
            let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
            big.extend(small);
            big
        });
    let mut out: Vec<Graph> = set.into_iter().collect();
    out.sort();
    out
}

/// One canonical representative per isomorphism class of connected graphs on
/// `n` vertices, sorted by canonical form.
pub fn enumerate_connected(n: usize) -> Result<Arc<Vec<Graph>>> {
    check_ceiling(n, enumeration_ceiling())?;
    cached(false, n, || {
        if n == 1 {
            return Ok(vec![Graph::empty(1)?]);
        }
        let parents = enumerate_connected(n - 1)?;
        Ok(extend_all(&parents, |h| {
            let m = h.order();
            (1u64..1 << m)
                .map(|subset| add_vertex(h, subset))
                .collect()
        }))
    })
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<Arc<Vec<Graph>>> {
    check_ceiling(n, TREE_CEILING)?;
    cached(true, n, || {
        if n == 1 {
            return Ok(vec![Graph::empty(1)?]);
        }
        let parents = enumerate_trees(n - 1)?;
        Ok(extend_all(&parents, |h| {
            (0..h.order()).map(|v| add_vertex(h, 1 << v)).collect()
        }))
    })
}

/// `h` plus a new last vertex joined to the vertices in `subset`.
fn add_vertex(h: &Graph, subset: u64) -> Graph {
    let m = h.order();
    let mut rows: Vec<u64> = h.rows().to_vec();
    for (v, row) in rows.iter_mut().enumerate() {
        if subset >> v & 1 == 1 {
            *row |= 1 << m;
        }
    }
    rows.push(subset);
    Graph::from_rows(m + 1, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
        let trees: Vec<usize> = (1..=9).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(trees, [1, 1, 1, 2, 3, 6, 11, 23, 47]);
    }

    #[test]
    fn representatives_are_connected_and_canonical() {
        for g in enumerate_connected(5).unwrap().iter() {
            assert!(g.is_connected());
            assert_eq!(&canonical_form(g), g);
        }
        assert!(enumerate_trees(8).unwrap().iter().all(Graph::is_tree));
    }

    #[test]
    fn ceiling() {
        assert!(matches!(enumerate_connected(40), Err(Error::Capability { n: 40, .. })));
        assert!(enumerate_connected(0).is_err());
    }
}
