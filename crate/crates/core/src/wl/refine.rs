use std::collections::HashMap;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::{Budget, Limits};

/// Stable folklore k-WL colouring of all k-tuples of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WlColouring {
    pub k: usize,
    n: usize,
    /// Colour of the tuple `(t_1, …, t_k)` at index `Σ t_i·n^(i-1)`.
    pub colours: Vec<u32>,
    pub rounds: usize,
    /// `(colour, multiplicity)` sorted by colour.
    pub histogram: Vec<(u32, usize)>,
}

impl WlColouring {
    pub fn colour(&self, tuple: &[usize]) -> u32 {
        assert_eq!(tuple.len(), self.k, "tuple length must equal k");
        let index = tuple.iter().rev().fold(0, |acc, &v| acc * self.n + v);
        self.colours[index]
    }

    /// Number of distinct colours.
    pub fn classes(&self) -> usize {
        self.histogram.len()
    }

    pub fn histogram_hash(&self) -> String {
        histogram_hash(&self.histogram)
    }
}

pub(crate) fn histogram_hash(histogram: &[(u32, usize)]) -> String {
    let mut hasher = Sha256::new();
    for (c, m) in histogram {
        hasher.update(format!("{c}:{m};"));
    }
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn histogram(colours: &[u32]) -> Vec<(u32, usize)> {
    let mut sorted = colours.to_vec();
    sorted.sort_unstable();
    let mut out: Vec<(u32, usize)> = Vec::new();
    for c in sorted {
        match out.last_mut() {
            Some((last, m)) if *last == c => *m += 1,
            _ => out.push((c, 1)),
        }
    }
    out
}

/// Relation of `w` to `v`: 0 equal, 1 adjacent, 2 neither.
#[inline]
fn relation(g: &Graph, v: usize, w: usize) -> u32 {
    if v == w {
        0
    } else if g.has_edge(v, w) {
        1
    } else {
        2
    }
}

struct TupleSpace {
    n: usize,
    k: usize,
    powers: Vec<usize>,
}

impl TupleSpace {
    fn new(n: usize, k: usize) -> Result<TupleSpace> {
        let mut powers = Vec::with_capacity(k);
        let mut p: usize = 1;
        for _ in 0..k {
            powers.push(p);
            p = p.checked_mul(n).ok_or(Error::Overflow("tuple space"))?;
        }
        Ok(TupleSpace { n, k, powers })
    }

    fn size(&self) -> usize {
        self.powers.last().map_or(1, |&p| p * self.n)
    }

    fn entry(&self, t: usize, i: usize) -> usize {
        (t / self.powers[i]) % self.n
    }

    fn initial_key(&self, g: &Graph, t: usize) -> Vec<u32> {
        let mut key = Vec::with_capacity(self.k * self.k);
        for i in 0..self.k {
            for j in 0..i {
                key.push(relation(g, self.entry(t, i), self.entry(t, j)));
            }
        }
        key
    }

    /// Old colour followed by the sorted rows, one row per vertex `w`:
    /// the relation of `w` to every entry, then the colours of the tuples
    /// with `w` substituted in each position.
    fn refine_key(&self, g: &Graph, colours: &[u32], t: usize) -> Vec<u32> {
        let entries: Vec<usize> = (0..self.k).map(|i| self.entry(t, i)).collect();
        let mut rows: Vec<Vec<u32>> = (0..self.n)
            .map(|w| {
                let atomic = entries.iter().fold(0u32, |acc, &v| acc * 3 + relation(g, v, w));
                let mut row = Vec::with_capacity(self.k + 1);
                row.push(atomic);
                for (i, &v) in entries.iter().enumerate() {
                    let s = t - v * self.powers[i] + w * self.powers[i];
                    row.push(colours[s]);
                }
                row
            })
            .collect();
        rows.sort_unstable();
        let mut key = Vec::with_capacity(1 + self.n * (self.k + 1));
        key.push(colours[t]);
        for row in rows {
            key.extend(row);
        }
        key
    }
}

/// Replaces every key by its rank among all distinct keys.
fn rank(keys: Vec<Vec<Vec<u32>>>) -> (Vec<Vec<u32>>, usize) {
    let mut distinct: Vec<&Vec<u32>> = keys.iter().flatten().collect();
    distinct.sort_unstable();
    distinct.dedup();
    let ids: HashMap<&Vec<u32>, u32> = distinct.iter().enumerate().map(|(i, &k)| (k, i as u32)).collect();
    let colours = keys.iter().map(|ks| ks.iter().map(|k| ids[k]).collect()).collect();
    (colours, distinct.len())
}

/// Runs folklore k-WL on several graphs with one shared colour space, so
/// equal colours in different graphs mean equal refinement histories.
/// Colour ids are ranks of the refinement keys in sorted order.
pub(crate) fn refine_jointly(graphs: &[&Graph], k: usize, limits: &Limits) -> Result<(Vec<Vec<u32>>, usize)> {
    if k == 0 {
        return Err(Error::Invalid("WL dimension must be positive".into()));
    }
    let spaces: Vec<TupleSpace> = graphs.iter().map(|g| TupleSpace::new(g.n(), k)).collect::<Result<_>>()?;
    let mut budget: Budget = limits.budget("Weisfeiler-Leman refinement");
    let initial = graphs
        .iter()
        .zip(&spaces)
        .map(|(g, s)| {
            budget.charge(s.size() as u64)?;
            Ok((0..s.size()).map(|t| s.initial_key(g, t)).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    let (mut colours, mut classes) = rank(initial);
    let mut rounds = 0;
    loop {
        let keys = graphs
            .iter()
            .zip(&spaces)
            .zip(&colours)
            .map(|((g, s), c)| {
                budget.charge((s.size() * s.n.max(1)) as u64)?;
                Ok((0..s.size()).map(|t| s.refine_key(g, c, t)).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        let (next, next_classes) = rank(keys);
        if next_classes == classes {
            return Ok((colours, rounds));
        }
        rounds += 1;
        colours = next;
        classes = next_classes;
    }
}

/// Stable folklore k-WL colouring of `g`. For `k = 1` this is colour
/// refinement.
pub fn wl_refine(g: &Graph, k: usize) -> Result<WlColouring> {
    wl_refine_with(g, k, &Limits::default())
}

pub fn wl_refine_with(g: &Graph, k: usize, limits: &Limits) -> Result<WlColouring> {
    let (mut colours, rounds) = refine_jointly(&[g], k, limits)?;
    let colours = colours.pop().expect("one graph in, one colouring out");
    let histogram = histogram(&colours);
    Ok(WlColouring {
        k,
        n: g.n(),
        colours,
        rounds,
        histogram,
    })
}

/// Outcome of a joint WL comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WlComparison {
    pub equivalent: bool,
    pub rounds: usize,
    /// Hash of the first graph's histogram in the shared colour space.
    pub histogram_hash: String,
}

/// k-WL equivalence. `k = 0` compares vertex counts, the only invariant
/// of treewidth-0 connected patterns.
pub fn wl_equivalent(g1: &Graph, g2: &Graph, k: usize) -> Result<bool> {
    Ok(wl_compare(g1, g2, k, &Limits::default())?.equivalent)
}

pub fn wl_equivalent_with(g1: &Graph, g2: &Graph, k: usize, limits: &Limits) -> Result<bool> {
    Ok(wl_compare(g1, g2, k, limits)?.equivalent)
}

pub fn wl_compare(g1: &Graph, g2: &Graph, k: usize, limits: &Limits) -> Result<WlComparison> {
    if k == 0 || g1.n() != g2.n() {
        let h = vec![(0u32, g1.n())];
        return Ok(WlComparison {
            equivalent: g1.n() == g2.n(),
            rounds: 0,
            histogram_hash: histogram_hash(&h),
        });
    }
    let (colours, rounds) = refine_jointly(&[g1, g2], k, limits)?;
    let h1 = histogram(&colours[0]);
    let h2 = histogram(&colours[1]);
    Ok(WlComparison {
        equivalent: h1 == h2,
        rounds,
        histogram_hash: histogram_hash(&h1),
    })
}

/// Partitions `graphs` into k-WL equivalence classes; returns the class
/// of each graph, numbered by first appearance.
pub fn wl_equivalence_classes(graphs: &[Graph], k: usize, limits: &Limits) -> Result<Vec<usize>> {
    let refs: Vec<&Graph> = graphs.iter().collect();
    let signatures: Vec<(usize, Vec<(u32, usize)>)> = if k == 0 {
        graphs.iter().map(|g| (g.n(), Vec::new())).collect()
    } else {
        let (colours, _) = refine_jointly(&refs, k, limits)?;
        graphs.iter().zip(&colours).map(|(g, c)| (g.n(), histogram(c))).collect()
    };
    let mut seen: HashMap<&(usize, Vec<(u32, usize)>), usize> = HashMap::new();
    Ok(signatures
        .iter()
        .map(|s| {
            let next = seen.len();
            *seen.entry(s).or_insert(next)
        })
        .collect())
}
