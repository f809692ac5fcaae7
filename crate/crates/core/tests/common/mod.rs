#![allow(dead_code)]

use wldim::Graph;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut key: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut nb: Vec<usize> = g.neighbours(v).iter().map(|&u| g.degree(u)).collect();
            nb.sort_unstable();
            (g.degree(v), nb)
        })
        .collect();
    key.sort();
    key
}

/// Every graph on `n` vertices up to isomorphism: each graph on `n - 1`
/// vertices gains a vertex joined to every possible subset, and
/// duplicates are removed by invariant bucket plus isomorphism test.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut buckets: std::collections::BTreeMap<Vec<(usize, Vec<usize>)>, Vec<Graph>> = Default::default();
    let mut out = Vec::new();
    for base in all_graphs(n - 1) {
        for mask in 0u32..1 << (n - 1) {
            let mut edges = base.edges().to_vec();
            edges.extend((0..n - 1).filter(|&u| mask & (1 << u) != 0).map(|u| (u, n - 1)));
            let g = Graph::from_edges(n, &edges);
            let bucket = buckets.entry(invariant(&g)).or_default();
            if bucket.iter().all(|h| !wldim::graph::is_isomorphic(h, &g).unwrap()) {
                bucket.push(g.clone());
                out.push(g);
            }
        }
    }
    out
}

/// Every graph on `n` vertices, labelled.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u32..(1 << pairs.len())).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask & (1 << b) != 0)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges)
    })
}

pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs).filter(|g| g.is_connected()).collect()
}

pub fn two_triangles() -> Graph {
    Graph::complete(3).disjoint_union(&Graph::complete(3))
}

/// Every map `0..k -> 0..n` as a tuple, in lexicographic order.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn is_hom(h: &Graph, g: &Graph, map: &[usize]) -> bool {
    h.edges().iter().all(|&(u, v)| g.has_edge(map[u], map[v]))
}

/// Homomorphisms by trying every map.
pub fn brute_homs(h: &Graph, g: &Graph) -> Vec<Vec<usize>> {
    tuples(g.n(), h.n()).into_iter().filter(|m| is_hom(h, g, m)).collect()
}

/// Answer tuples by projecting every homomorphism.
pub fn brute_answers(q: &wldim::ConjunctiveQuery, g: &Graph) -> std::collections::BTreeSet<Vec<usize>> {
    brute_homs(q.graph(), g)
        .into_iter()
        .map(|m| q.free().iter().map(|&x| m[x]).collect())
        .collect()
}

/// Width of the elimination ordering `order`.
pub fn ordering_width(g: &Graph, order: &[usize]) -> usize {
    let n = g.n();
    let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let mut gone = vec![false; n];
    let mut width = 0;
    for &v in order {
        let nb: Vec<usize> = (0..n).filter(|&u| !gone[u] && adj[v][u]).collect();
        width = width.max(nb.len());
        for &a in &nb {
            for &b in &nb {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
        gone[v] = true;
    }
    width
}

/// Treewidth as the best width over every elimination ordering.
pub fn brute_treewidth(g: &Graph) -> usize {
    permutations(g.n()).iter().map(|p| ordering_width(g, p)).min().unwrap_or(0)
}

/// Size-k dominating sets by checking every k-subset.
pub fn brute_dominating_sets(g: &Graph, k: usize) -> u64 {
    let n = g.n();
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .filter(|&m| (0..n).all(|v| m & (1 << v) != 0 || g.neighbours(v).iter().any(|&u| m & (1 << u) != 0)))
        .count() as u64
}

pub fn permute(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.n(), &edges)
}

/// Colour-prescribed homomorphisms projected to X, found by a plain
/// depth-first search over the prescribed colour classes.
pub fn brute_cp_answers(
    q: &wldim::ConjunctiveQuery,
    copy: &wldim::width::EllCopy,
    chi: &wldim::cfi::CfiGraph,
) -> std::collections::BTreeSet<Vec<usize>> {
    let h = q.graph();
    let g = chi.result();
    let domain: Vec<Vec<usize>> = (0..h.n())
        .map(|v| (0..g.n()).filter(|&u| copy.gamma.apply(chi.colouring()[u]) == v).collect())
        .collect();
    let mut out = std::collections::BTreeSet::new();
    fn dfs(
        v: usize,
        h: &Graph,
        g: &Graph,
        domain: &[Vec<usize>],
        map: &mut Vec<usize>,
        q: &wldim::ConjunctiveQuery,
        out: &mut std::collections::BTreeSet<Vec<usize>>,
    ) {
        if v == h.n() {
            out.insert(q.free().iter().map(|&x| map[x]).collect());
            return;
        }
        for &u in &domain[v] {
            if h.neighbours(v).iter().filter(|&&w| w < v).all(|&w| g.has_edge(map[w], u)) {
                map.push(u);
                dfs(v + 1, h, g, domain, map, q, out);
                map.pop();
            }
        }
    }
    dfs(0, h, g, &domain, &mut Vec::new(), q, &mut out);
    out
}

pub mod strategies {
    use proptest::prelude::*;
    use wldim::Graph;

    /// Graphs on `min..=max` vertices with independent edge coins.
    pub fn graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
        (min..=max).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut b = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[b] {
                            edges.push((u, v));
                        }
                        b += 1;
                    }
                }
                Graph::from_edges(n, &edges)
            })
        })
    }

    /// Connected graphs: a random spanning tree plus extra edges.
    pub fn connected_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
        (min..=max).prop_flat_map(|n| {
            let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
            let pairs = n * n.saturating_sub(1) / 2;
            (parents, proptest::collection::vec(proptest::bool::weighted(0.3), pairs)).prop_map(move |(par, bits)| {
                let mut edges: Vec<(usize, usize)> = par.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
                let mut b = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[b] {
                            edges.push((u, v));
                        }
                        b += 1;
                    }
                }
                Graph::from_edges(n, &edges)
            })
        })
    }

    pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
    }
}
