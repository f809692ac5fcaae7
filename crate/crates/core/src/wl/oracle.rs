use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::Result;
use crate::graph::{count_hom_with, is_isomorphic, Graph};
use crate::limits::Limits;
use crate::width::treewidth;

/// Result of comparing homomorphism counts from small patterns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A pattern of treewidth at most k with different counts.
    Distinguished(Graph),
    /// No pattern within the size bound tells the graphs apart.
    EqualUpToBound,
}

impl Verdict {
    pub fn is_distinguished(&self) -> bool {
        matches!(self, Verdict::Distinguished(_))
    }
}

/// A cheap isomorphism invariant used to bucket candidates.
fn invariant(g: &Graph) -> (usize, Vec<(usize, Vec<usize>)>) {
    let mut profile: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut nb: Vec<usize> = g.neighbours(v).iter().map(|&w| g.degree(w)).collect();
            nb.sort_unstable();
            (g.degree(v), nb)
        })
        .collect();
    profile.sort_unstable();
    (g.edge_count(), profile)
}

/// Connected graphs on exactly `n` vertices up to isomorphism, each with
/// its treewidth. Built by attaching a new vertex to every nonempty
/// vertex subset of the graphs one size smaller; every connected graph
/// has a vertex whose removal keeps it connected, so nothing is missed.
fn connected_graphs(n: usize) -> Vec<(Graph, usize)> {
    static CACHE: OnceLock<Mutex<Vec<Vec<(Graph, usize)>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![Vec::new(), vec![(Graph::empty(1), 0)]]));
    let mut levels = cache.lock().expect("pattern cache poisoned");
    while levels.len() <= n {
        let m = levels.len() - 1;
        let mut buckets: HashMap<_, Vec<usize>> = HashMap::new();
        let mut found: Vec<Graph> = Vec::new();
        for (g, _) in &levels[m] {
            for subset in 1u32..(1 << m) {
                let mut edges = g.edges().to_vec();
                edges.extend((0..m).filter(|&v| subset & (1 << v) != 0).map(|v| (v, m)));
                let candidate = Graph::from_edges(m + 1, &edges);
                let bucket = buckets.entry(invariant(&candidate)).or_default();
                let known = bucket
                    .iter()
                    .any(|&i| is_isomorphic(&found[i], &candidate).expect("small graphs fit any budget"));
                if !known {
                    bucket.push(found.len());
                    found.push(candidate);
                }
            }
        }
        let level = found
            .into_iter()
            .map(|g| {
                let tw = treewidth(&g).expect("small graphs fit the treewidth solver").0;
                (g, tw)
            })
            .collect();
        levels.push(level);
    }
    levels[n].clone()
}

/// Connected graphs with `1..=max_size` vertices and treewidth at most
/// `k`, up to isomorphism, smallest first.
pub fn connected_patterns(max_size: usize, k: usize) -> Vec<Graph> {
    (1..=max_size)
        .flat_map(connected_graphs)
        .filter(|(_, tw)| *tw <= k)
        .map(|(g, _)| g)
        .collect()
}

/// Compares homomorphism counts from every connected pattern of treewidth
/// at most `k` with up to `max_pattern_size` vertices. A distinguisher
/// proves the graphs are not k-WL-equivalent; the converse verdict is
/// only evidence.
pub fn hom_indist_oracle(g1: &Graph, g2: &Graph, k: usize, max_pattern_size: usize) -> Result<Verdict> {
    hom_indist_oracle_with(g1, g2, k, max_pattern_size, &Limits::default())
}

pub fn hom_indist_oracle_with(
    g1: &Graph,
    g2: &Graph,
    k: usize,
    max_pattern_size: usize,
    limits: &Limits,
) -> Result<Verdict> {
    for pattern in connected_patterns(max_pattern_size, k) {
        if count_hom_with(&pattern, g1, limits)? != count_hom_with(&pattern, g2, limits)? {
            return Ok(Verdict::Distinguished(pattern));
        }
    }
    Ok(Verdict::EqualUpToBound)
}
