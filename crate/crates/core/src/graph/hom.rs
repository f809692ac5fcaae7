use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};
use crate::limits::{Budget, Limits};

/// A vertex map between two graphs that preserves edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(source: &Graph, target: &Graph, map: Vec<usize>) -> Result<Homomorphism> {
        check_homomorphism(source, target, &map)?;
        Ok(Homomorphism { map })
    }

    pub fn identity(n: usize) -> Homomorphism {
        Homomorphism {
            map: (0..n).collect(),
        }
    }

    #[inline]
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn into_map(self) -> Vec<usize> {
        self.map
    }
}

pub(crate) fn check_homomorphism(source: &Graph, target: &Graph, map: &[usize]) -> Result<()> {
    if map.len() != source.n() {
        return Err(Error::NotHomomorphism(format!(
            "map has {} entries for {} vertices",
            map.len(),
            source.n()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&w| w >= target.n()) {
        return Err(Error::NotHomomorphism(format!("image {bad} outside target")));
    }
    if let Some(&(u, v)) = source
        .edges()
        .iter()
        .find(|&&(u, v)| !target.has_edge(map[u], map[v]))
    {
        return Err(Error::NotHomomorphism(format!(
            "edge {{{u},{v}}} maps to non-edge {{{},{}}}",
            map[u], map[v]
        )));
    }
    Ok(())
}

/// A graph together with a homomorphism into a pattern graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredGraph {
    graph: Graph,
    pattern: Graph,
    colouring: Homomorphism,
}

impl ColouredGraph {
    pub fn new(graph: Graph, pattern: Graph, colouring: Vec<usize>) -> Result<ColouredGraph> {
        let colouring = Homomorphism::new(&graph, &pattern, colouring)?;
        Ok(ColouredGraph {
            graph,
            pattern,
            colouring,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn colouring(&self) -> &[usize] {
        self.colouring.map()
    }

    #[inline]
    pub fn colour(&self, v: usize) -> usize {
        self.colouring.apply(v)
    }

    /// Colour classes indexed by pattern vertex.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.pattern.n()];
        for (v, &c) in self.colouring.map().iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

/// BFS order over the vertices with `mask[v]`, seeded first from vertices
/// adjacent to `fixed` ones and otherwise from the smallest unvisited vertex.
pub(crate) fn bfs_order(pattern: &Graph, mask: &[bool], fixed: &[bool]) -> Vec<usize> {
    let n = pattern.n();
    let mut seen = vec![false; n];
    let mut order = Vec::new();
    loop {
        let seed = (0..n)
            .find(|&v| mask[v] && !seen[v] && pattern.neighbours(v).iter().any(|&w| fixed[w]))
            .or_else(|| (0..n).find(|&v| mask[v] && !seen[v]));
        let Some(seed) = seed else { break };
        seen[seed] = true;
        let mut queue = VecDeque::from([seed]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in pattern.neighbours(u) {
                if mask[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// Backtracking search for extensions of a partial vertex map.
///
/// Vertices in `order` are assigned left to right; all other pattern
/// vertices that are adjacent to them must already be assigned in the map
/// handed to the search methods.
pub(crate) struct ExtensionSearch<'a> {
    target: &'a Graph,
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
    domains: Option<Vec<Vec<usize>>>,
    masks: Option<Vec<Vec<bool>>>,
    injective: Option<Vec<bool>>,
    all: Vec<usize>,
}

impl<'a> ExtensionSearch<'a> {
    pub(crate) fn new(pattern: &Graph, target: &'a Graph, order: Vec<usize>) -> Self {
        let mut position = vec![usize::MAX; pattern.n()];
        for (i, &u) in order.iter().enumerate() {
            position[u] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &u)| {
                pattern
                    .neighbours(u)
                    .iter()
                    .copied()
                    .filter(|&w| position[w] == usize::MAX || position[w] < i)
                    .collect()
            })
            .collect();
        ExtensionSearch {
            target,
            order,
            back,
            domains: None,
            masks: None,
            injective: None,
            all: (0..target.n()).collect(),
        }
    }

    /// Restricts every pattern vertex to a sorted list of allowed images.
    pub(crate) fn with_domains(mut self, domains: Vec<Vec<usize>>) -> Self {
        let masks = domains
            .iter()
            .map(|d| {
                let mut m = vec![false; self.target.n()];
                for &w in d {
                    m[w] = true;
                }
                m
            })
            .collect();
        self.domains = Some(domains);
        self.masks = Some(masks);
        self
    }

    /// Drops adjacency constraints towards vertices outside the order that
    /// are not marked `fixed`; those stay unassigned during the search.
    pub(crate) fn with_fixed(mut self, fixed: &[bool]) -> Self {
        let mut in_order = vec![false; fixed.len()];
        for &u in &self.order {
            in_order[u] = true;
        }
        for back in &mut self.back {
            back.retain(|&w| in_order[w] || fixed[w]);
        }
        self
    }

    /// Requires the marked pattern vertices to receive pairwise distinct images.
    pub(crate) fn with_injective(mut self, marked: Vec<bool>) -> Self {
        self.injective = Some(marked);
        self
    }

    fn candidates(&self, pos: usize, assign: &[usize]) -> &[usize] {
        match self.back[pos].first() {
            Some(&anchor) => self.target.neighbours(assign[anchor]),
            None => match &self.domains {
                Some(d) => &d[self.order[pos]],
                None => &self.all,
            },
        }
    }

    #[inline]
    fn accepts(&self, pos: usize, c: usize, assign: &[usize], used: &[bool]) -> bool {
        let u = self.order[pos];
        if let Some(masks) = &self.masks {
            if !masks[u][c] {
                return false;
            }
        }
        if let Some(inj) = &self.injective {
            if inj[u] && used[c] {
                return false;
            }
        }
        self.back[pos]
            .iter()
            .skip(1)
            .all(|&w| self.target.has_edge(assign[w], c))
    }

    fn mark(&self, u: usize, c: usize, used: &mut [bool], value: bool) {
        if let Some(inj) = &self.injective {
            if inj[u] {
                used[c] = value;
            }
        }
    }

    fn initial_used(&self, assign: &[usize]) -> Vec<bool> {
        let mut used = vec![false; self.target.n()];
        if let Some(inj) = &self.injective {
            let mut pending = vec![false; inj.len()];
            for &u in &self.order {
                pending[u] = true;
            }
            for (u, &m) in inj.iter().enumerate() {
                if m && !pending[u] && assign[u] != usize::MAX {
                    used[assign[u]] = true;
                }
            }
        }
        used
    }

    /// Finds one completion; on success `assign` holds it.
    pub(crate) fn find(&self, assign: &mut [usize], budget: &mut Budget) -> Result<bool> {
        if self.order.is_empty() {
            return Ok(true);
        }
        let mut used = self.initial_used(assign);
        self.find_rec(0, assign, &mut used, budget)
    }

    fn find_rec(&self, pos: usize, assign: &mut [usize], used: &mut [bool], budget: &mut Budget) -> Result<bool> {
        if pos == self.order.len() {
            return Ok(true);
        }
        let u = self.order[pos];
        for &c in self.candidates(pos, assign) {
            if !self.accepts(pos, c, assign, used) {
                continue;
            }
            budget.tick()?;
            assign[u] = c;
            self.mark(u, c, used, true);
            let found = self.find_rec(pos + 1, assign, used, budget)?;
            self.mark(u, c, used, false);
            if found {
                return Ok(true);
            }
        }
        assign[u] = usize::MAX;
        Ok(false)
    }

    /// Visits every completion in search order until `visit` returns false.
    pub(crate) fn for_each(
        &self,
        assign: &mut [usize],
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Result<()> {
        let mut used = self.initial_used(assign);
        self.each_rec(0, assign, &mut used, budget, visit).map(|_| ())
    }

    fn each_rec(
        &self,
        pos: usize,
        assign: &mut [usize],
        used: &mut [bool],
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Result<bool> {
        if pos == self.order.len() {
            return Ok(visit(assign));
        }
        let u = self.order[pos];
        for &c in self.candidates(pos, assign) {
            if !self.accepts(pos, c, assign, used) {
                continue;
            }
            budget.tick()?;
            assign[u] = c;
            self.mark(u, c, used, true);
            let go_on = self.each_rec(pos + 1, assign, used, budget, visit)?;
            self.mark(u, c, used, false);
            if !go_on {
                return Ok(false);
            }
        }
        assign[u] = usize::MAX;
        Ok(true)
    }
}

/// Backtracking counter that splits the unassigned part of the pattern
/// into connected components whenever the assigned vertices separate it,
/// and multiplies the component counts.
struct FactoredCounter<'a> {
    pattern: &'a Graph,
    target: &'a Graph,
    masks: Option<Vec<Vec<bool>>>,
    domains: Option<&'a [Vec<usize>]>,
    all: Vec<usize>,
}

impl FactoredCounter<'_> {
    fn count(&self, part: &[usize], assign: &mut [usize], budget: &mut Budget) -> Result<u64> {
        let mut inside = vec![false; self.pattern.n()];
        for &v in part {
            inside[v] = true;
        }
        let comps = self.pattern.components_within(&inside);
        let mut total: u64 = 1;
        for comp in comps {
            let c = self.count_connected(&comp, assign, budget)?;
            if c == 0 {
                return Ok(0);
            }
            total = total.checked_mul(c).ok_or(Error::Overflow("homomorphism count"))?;
        }
        Ok(total)
    }

    fn count_connected(&self, part: &[usize], assign: &mut [usize], budget: &mut Budget) -> Result<u64> {
        let assigned_neighbours = |v: usize| {
            self.pattern
                .neighbours(v)
                .iter()
                .filter(|&&w| assign[w] != usize::MAX)
                .count()
        };
        // most constrained vertex first, ties to the smallest index
        let v = *part
            .iter()
            .max_by_key(|&&v| (assigned_neighbours(v), std::cmp::Reverse(v)))
            .expect("components are nonempty");
        let anchor = self.pattern.neighbours(v).iter().copied().find(|&w| assign[w] != usize::MAX);
        let candidates: &[usize] = match anchor {
            Some(a) => self.target.neighbours(assign[a]),
            None => match self.domains {
                Some(d) => &d[v],
                None => &self.all,
            },
        };
        let rest: Vec<usize> = part.iter().copied().filter(|&u| u != v).collect();
        let mut total: u64 = 0;
        for &c in candidates {
            if let Some(m) = &self.masks {
                if !m[v][c] {
                    continue;
                }
            }
            let fits = self
                .pattern
                .neighbours(v)
                .iter()
                .all(|&w| assign[w] == usize::MAX || self.target.has_edge(assign[w], c));
            if !fits {
                continue;
            }
            budget.tick()?;
            if rest.is_empty() {
                total += 1;
                continue;
            }
            assign[v] = c;
            let sub = self.count(&rest, assign, budget);
            assign[v] = usize::MAX;
            total = total
                .checked_add(sub?)
                .ok_or(Error::Overflow("homomorphism count"))?;
        }
        Ok(total)
    }
}

/// Counts homomorphisms from `pattern` to `target`, optionally with a
/// list of allowed images per pattern vertex.
fn count_factored(pattern: &Graph, target: &Graph, domains: Option<&[Vec<usize>]>, budget: &mut Budget) -> Result<u64> {
    let masks = domains.map(|ds| {
        ds.iter()
            .map(|d| {
                let mut m = vec![false; target.n()];
                for &w in d {
                    m[w] = true;
                }
                m
            })
            .collect()
    });
    let counter = FactoredCounter {
        pattern,
        target,
        masks,
        domains,
        all: (0..target.n()).collect(),
    };
    let everything: Vec<usize> = (0..pattern.n()).collect();
    let mut assign = vec![usize::MAX; pattern.n()];
    counter.count(&everything, &mut assign, budget)
}

/// |Hom(pattern, target)| by exhaustive backtracking.
pub fn count_hom(pattern: &Graph, target: &Graph) -> Result<u64> {
    count_hom_with(pattern, target, &Limits::default())
}

pub fn count_hom_with(pattern: &Graph, target: &Graph, limits: &Limits) -> Result<u64> {
    let mut budget = limits.budget("homomorphism count");
    count_factored(pattern, target, None, &mut budget)
}

/// Homomorphisms `h` from `pattern` into the coloured graph whose colour
/// composition `c ∘ h` equals `tau`.
pub fn count_hom_tau(pattern: &Graph, coloured: &ColouredGraph, tau: &[usize]) -> Result<u64> {
    count_hom_tau_with(pattern, coloured, tau, &Limits::default())
}

pub fn count_hom_tau_with(pattern: &Graph, coloured: &ColouredGraph, tau: &[usize], limits: &Limits) -> Result<u64> {
    check_homomorphism(pattern, coloured.pattern(), tau)?;
    let classes = coloured.classes();
    let domains: Vec<Vec<usize>> = tau.iter().map(|&t| classes[t].clone()).collect();
    let mut budget = limits.budget("colour-restricted homomorphism count");
    count_factored(pattern, coloured.graph(), Some(&domains), &mut budget)
}

/// Every homomorphism from `pattern` to `target`, in search order.
#[cfg(test)]
fn all_homomorphisms(pattern: &Graph, target: &Graph, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let fixed = vec![false; pattern.n()];
    let order = bfs_order(pattern, &vec![true; pattern.n()], &fixed);
    let search = ExtensionSearch::new(pattern, target, order);
    let mut budget = limits.budget("homomorphism enumeration");
    let mut out = Vec::new();
    let mut assign = vec![usize::MAX; pattern.n()];
    search.for_each(&mut assign, &mut budget, &mut |a| {
        out.push(a.to_vec());
        true
    })?;
    Ok(out)
}
