use std::collections::HashMap;

use super::Graph;
use crate::error::Result;
use crate::limits::{Budget, Limits};

/// Refines two colourings to their joint stable (1-WL) partition.
///
/// Colour ids are shared: equal ids in the two graphs denote the same
/// refinement history. Returns false as soon as the colour histograms
/// differ.
pub(crate) fn refine_pair(g1: &Graph, c1: &mut Vec<usize>, g2: &Graph, c2: &mut Vec<usize>) -> bool {
    let mut classes = count_distinct(c1, c2);
    let n1 = g1.n();
    loop {
        if !same_histogram(c1, c2) {
            return false;
        }
        let mut sigs = signatures(g1, c1);
        sigs.extend(signatures(g2, c2));
        let mut order: Vec<usize> = (0..sigs.len()).collect();
        order.sort_unstable_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut ids = vec![0; sigs.len()];
        let mut next = 0;
        for (i, &v) in order.iter().enumerate() {
            if i > 0 && sigs[v] != sigs[order[i - 1]] {
                next += 1;
            }
            ids[v] = next;
        }
        let fresh = next + 1;
        c2.clear();
        c2.extend_from_slice(&ids[n1..]);
        ids.truncate(n1);
        *c1 = ids;
        if fresh == classes {
            return same_histogram(c1, c2);
        }
        classes = fresh;
    }
}

fn signatures(g: &Graph, colours: &[usize]) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let mut nb: Vec<usize> = g.neighbours(v).iter().map(|&w| colours[w]).collect();
            nb.sort_unstable();
            (colours[v], nb)
        })
        .collect()
}

fn count_distinct(c1: &[usize], c2: &[usize]) -> usize {
    let mut all: Vec<usize> = c1.iter().chain(c2).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn same_histogram(c1: &[usize], c2: &[usize]) -> bool {
    if c1.len() != c2.len() {
        return false;
    }
    let mut a = c1.to_vec();
    let mut b = c2.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// Individualisation-refinement search for colour-preserving isomorphisms.
struct IsoSearch<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    find_all: bool,
    found: Vec<Vec<usize>>,
}

impl IsoSearch<'_> {
    fn run(&mut self, mut c1: Vec<usize>, mut c2: Vec<usize>, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        if !refine_pair(self.g1, &mut c1, self.g2, &mut c2) {
            return Ok(false);
        }
        let n = self.g1.n();
        let mut sizes: HashMap<usize, usize> = HashMap::new();
        for &c in &c1 {
            *sizes.entry(c).or_default() += 1;
        }
        // smallest non-singleton cell touching a singleton, then smallest overall
        let touches_singleton = |c: usize| {
            (0..n).any(|v| c1[v] == c && self.g1.neighbours(v).iter().any(|&w| sizes[&c1[w]] == 1))
        };
        let target = sizes
            .iter()
            .filter(|&(_, &s)| s > 1)
            .min_by_key(|&(&c, &s)| (!touches_singleton(c), s, c))
            .map(|(&c, _)| c);
        let Some(cell) = target else {
            let mut inverse = vec![usize::MAX; n];
            for (w, &c) in c2.iter().enumerate() {
                inverse[c] = w;
            }
            let map: Vec<usize> = c1.iter().map(|&c| inverse[c]).collect();
            if is_isomorphism(self.g1, self.g2, &map) {
                self.found.push(map);
                return Ok(true);
            }
            return Ok(false);
        };
        let fresh = c1.iter().chain(&c2).copied().max().unwrap_or(0) + 1;
        let v = (0..n).find(|&v| c1[v] == cell).expect("cell is non-empty");
        let mut any = false;
        for w in (0..n).filter(|&w| c2[w] == cell) {
            let mut d1 = c1.clone();
            let mut d2 = c2.clone();
            d1[v] = fresh;
            d2[w] = fresh;
            if self.run(d1, d2, budget)? {
                any = true;
                if !self.find_all {
                    return Ok(true);
                }
            }
        }
        Ok(any)
    }
}

fn is_isomorphism(g1: &Graph, g2: &Graph, map: &[usize]) -> bool {
    let mut seen = vec![false; g2.n()];
    for &w in map {
        if w >= g2.n() || seen[w] {
            return false;
        }
        seen[w] = true;
    }
    g1.edge_count() == g2.edge_count() && g1.edges().iter().all(|&(u, v)| g2.has_edge(map[u], map[v]))
}

/// Searches for an isomorphism `g1 -> g2` mapping each vertex to a vertex
/// of the same initial colour.
pub(crate) fn coloured_isomorphism(
    g1: &Graph,
    col1: &[usize],
    g2: &Graph,
    col2: &[usize],
    limits: &Limits,
) -> Result<Option<Vec<usize>>> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let mut search = IsoSearch {
        g1,
        g2,
        find_all: false,
        found: Vec::new(),
    };
    let mut budget = limits.budget("isomorphism search");
    search.run(col1.to_vec(), col2.to_vec(), &mut budget)?;
    Ok(search.found.pop())
}

/// Decides isomorphism, returning a witness bijection when one exists.
pub fn is_isomorphic_with(g1: &Graph, g2: &Graph, limits: &Limits) -> Result<Option<Vec<usize>>> {
    coloured_isomorphism(g1, &vec![0; g1.n()], g2, &vec![0; g2.n()], limits)
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    Ok(is_isomorphic_with(g1, g2, &Limits::default())?.is_some())
}

/// The full automorphism group as explicit permutations, sorted.
pub fn automorphisms(g: &Graph) -> Result<Vec<Vec<usize>>> {
    automorphisms_with(g, &vec![0; g.n()], &Limits::default())
}

/// Automorphisms that preserve the given vertex colouring.
pub fn automorphisms_with(g: &Graph, colours: &[usize], limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let mut search = IsoSearch {
        g1: g,
        g2: g,
        find_all: true,
        found: Vec::new(),
    };
    let mut budget = limits.budget("automorphism search");
    search.run(colours.to_vec(), colours.to_vec(), &mut budget)?;
    let mut found = search.found;
    found.sort();
    found.dedup();
    Ok(found)
}
