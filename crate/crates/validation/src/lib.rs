//! Reference oracles for cross-checking `laplab`.
//!
//! Everything here is deliberately naive: brute force over permutations,
//! Burnside counting, Prüfer sequences, Floyd–Warshall and deletion–contraction.
//! Nothing is shared with the library except the `Graph` container.

use std::collections::HashSet;

use laplab::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` random graphs with `1 <= n <= max_n` and an edge probability
/// drawn per graph, reproducible from `seed`. Not necessarily connected.
pub fn seeded_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p: f64 = rng.gen_range(0.1..0.9);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            Graph::from_edges(n, &edges).expect("valid edges")
        })
        .collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for k in (1..=max.min(n)).rev() {
        prefix.push(k);
        partitions(n - k, k, prefix, out);
        prefix.pop();
    }
}

/// Number of graphs on `n` unlabeled vertices, by Burnside's lemma over the
/// cycle types of the symmetric group acting on vertex pairs.
pub fn graph_count(n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    let mut types = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut types);
    let mut total: u128 = 0;
    for cycles in types {
        // multiplicity of each cycle length
        let mut mult = vec![0usize; n + 1];
        for &k in &cycles {
            mult[k] += 1;
        }
        let mut centraliser: u128 = 1;
        for (k, &j) in mult.iter().enumerate().skip(1) {
            centraliser *= (k as u128).pow(j as u32) * factorial(j);
        }
        let mut orbits = 0usize;
        for (k, &j) in mult.iter().enumerate().skip(1) {
            orbits += j * (k / 2) + k * j * j.saturating_sub(1) / 2;
            for (l, &i) in mult.iter().enumerate().skip(k + 1) {
                orbits += j * i * gcd(k, l);
            }
        }
        total += factorial(n) / centraliser * (1u128 << orbits);
    }
    total / factorial(n)
}

fn mobius(mut n: usize) -> i128 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Connected unlabeled graph counts for orders `0..=max_n` (entry 0 is 0),
/// from the all-graph counts by inverting the Euler transform.
pub fn connected_graph_counts(max_n: usize) -> Vec<u128> {
    let b: Vec<i128> = (0..=max_n).map(|n| graph_count(n) as i128).collect();
    let mut c = vec![0i128; max_n + 1];
    for n in 1..=max_n {
        c[n] = n as i128 * b[n] - (1..n).map(|k| c[k] * b[n - k]).sum::<i128>();
    }
    let mut a = vec![0u128; max_n + 1];
    for n in 1..=max_n {
        let s: i128 = (1..=n).filter(|d| n % d == 0).map(|d| mobius(n / d) * c[d]).sum();
        a[n] = (s / n as i128) as u128;
    }
    a
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm
    let mut c = vec![0usize; n];
    out.push(perm.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out.push(perm.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            idx[u][v] = k;
            idx[v][u] = k;
            k += 1;
        }
    }
    idx
}

fn min_code(edges: &[(usize, usize)], perms: &[Vec<usize>], idx: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| edges.iter().fold(0u64, |m, &(u, v)| m | 1 << idx[p[u]][p[v]]))
        .min()
        .unwrap_or(0)
}

/// Isomorphism-invariant code: the smallest edge bitmask over all vertex
/// permutations. Practical up to `n = 7`.
pub fn brute_force_code(g: &Graph) -> u64 {
    let n = g.order();
    min_code(g.edges(), &permutations(n), &pair_index(n))
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts == 1
}

/// Codes of every connected graph on `n` labeled vertices, one per
/// isomorphism class. Enumerates all `2^(n(n-1)/2)` labeled graphs, so
/// only practical for `n <= 6`.
pub fn brute_force_connected_classes(n: usize) -> HashSet<u64> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let idx = pair_index(n);
    let mut seen = HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        if connected(n, &edges) {
            seen.insert(min_code(&edges, &perms, &idx));
        }
    }
    seen
}

fn prufer_tree(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Tree code from rooting at each centre and keeping the smaller encoding.
pub fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    if n == 1 {
        return "()".into();
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // peel leaves until one or two vertices remain
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(&adj, c, usize::MAX))
        .min()
        .expect("a centre exists")
}

/// Number of unlabeled trees on `n` vertices, from all `n^(n-2)` Prüfer
/// sequences.
pub fn tree_classes(n: usize) -> usize {
    if n <= 2 {
        return usize::from(n > 0);
    }
    let mut seq = vec![0usize; n - 2];
    let mut seen = HashSet::new();
    loop {
        seen.insert(tree_code(n, &prufer_tree(n, &seq)));
        let mut i = 0;
        while i < seq.len() {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            return seen.len();
        }
    }
}

/// All-pairs distances by Floyd–Warshall.
pub fn distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].map_or(true, |c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Largest distance, or `None` for a disconnected graph.
pub fn diameter(g: &Graph) -> Option<usize> {
    let d = distances(g);
    let mut best = 0;
    for row in &d {
        for x in row {
            best = best.max((*x)?);
        }
    }
    Some(best)
}

/// Spanning trees by deletion–contraction on the multigraph.
pub fn spanning_trees(g: &Graph) -> u128 {
    fn tau(n: usize, edges: Vec<(usize, usize)>) -> u128 {
        if n == 1 {
            return 1;
        }
        if !connected(n, &edges) {
            return 0;
        }
        let (u, v) = edges[0];
        let deleted = edges[1..].to_vec();
        // merge v into u, then move vertex n-1 into v's slot
        let contracted = edges[1..]
            .iter()
            .map(|&(a, b)| {
                let f = |x: usize| {
                    let x = if x == v { u } else { x };
                    if x == n - 1 {
                        v
                    } else {
                        x
                    }
                };
                (f(a), f(b))
            })
            .filter(|(a, b)| a != b)
            .collect();
        tau(n, deleted) + tau(n - 1, contracted)
    }
    tau(g.order(), g.edges().to_vec())
}
