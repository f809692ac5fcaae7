use super::ConjunctiveQuery;
use crate::error::Result;
use crate::graph::{bfs_order, ExtensionSearch, Graph};
use crate::limits::Limits;

/// Enumerates assignments of the free variables and keeps those that
/// extend to a homomorphism. Each component of `H[Y]` is checked for an
/// extension independently.
pub(crate) struct AnswerCounter<'a> {
    query: &'a ConjunctiveQuery,
    free_search: ExtensionSearch<'a>,
    component_searches: Vec<ExtensionSearch<'a>>,
    limits: Limits,
}

impl<'a> AnswerCounter<'a> {
    /// `domains`, when given, restricts the image of every query vertex.
    pub(crate) fn new(
        query: &'a ConjunctiveQuery,
        target: &'a Graph,
        domains: Option<Vec<Vec<usize>>>,
        limits: &Limits,
    ) -> Self {
        let h = query.graph();
        let none = vec![false; h.n()];
        let free_order = bfs_order(h, query.free_mask(), &none);
        let mut free_search = ExtensionSearch::new(h, target, free_order).with_fixed(&none);
        if let Some(d) = &domains {
            free_search = free_search.with_domains(d.clone());
        }
        let component_searches = query
            .existential_components()
            .into_iter()
            .map(|comp| {
                let mut mask = vec![false; h.n()];
                for &v in &comp {
                    mask[v] = true;
                }
                let order = bfs_order(h, &mask, query.free_mask());
                let search = ExtensionSearch::new(h, target, order);
                match &domains {
                    Some(d) => search.with_domains(d.clone()),
                    None => search,
                }
            })
            .collect();
        AnswerCounter {
            query,
            free_search,
            component_searches,
            limits: *limits,
        }
    }

    /// Calls `visit` with the full vertex map (free part is the answer,
    /// existential part one witnessing extension) for every answer.
    pub(crate) fn for_each_answer(&self, visit: &mut dyn FnMut(&[usize])) -> Result<()> {
        let n = self.query.n();
        let mut budget = self.limits.budget("answer enumeration");
        let mut ext_budget = self.limits.budget("answer extension check");
        let mut failure = None;
        let mut assign = vec![usize::MAX; n];
        let mut scratch = vec![usize::MAX; n];
        self.free_search.for_each(&mut assign, &mut budget, &mut |a| {
            scratch.copy_from_slice(a);
            for search in &self.component_searches {
                match search.find(&mut scratch, &mut ext_budget) {
                    Ok(true) => {}
                    Ok(false) => return true,
                    Err(e) => {
                        failure = Some(e);
                        return false;
                    }
                }
            }
            visit(&scratch);
            true
        })?;
        match failure {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    pub(crate) fn count(&self) -> Result<u64> {
        let mut total = 0u64;
        self.for_each_answer(&mut |_| total += 1)?;
        Ok(total)
    }

    /// Answers as images of the free variables in declaration order.
    pub(crate) fn collect(&self) -> Result<Vec<Vec<usize>>> {
        let free = self.query.free();
        let mut out = Vec::new();
        self.for_each_answer(&mut |full| out.push(free.iter().map(|&x| full[x]).collect()))?;
        out.sort();
        Ok(out)
    }
}

/// |Ans(q, G)|: assignments of the free variables that extend to a
/// homomorphism from `H` to `G`.
pub fn count_answers(query: &ConjunctiveQuery, target: &Graph) -> Result<u64> {
    count_answers_with(query, target, &Limits::default())
}

pub fn count_answers_with(query: &ConjunctiveQuery, target: &Graph, limits: &Limits) -> Result<u64> {
    AnswerCounter::new(query, target, None, limits).count()
}

/// The answers themselves, sorted, each listing the images of the free
/// variables in declaration order.
pub fn list_answers(query: &ConjunctiveQuery, target: &Graph) -> Result<Vec<Vec<usize>>> {
    AnswerCounter::new(query, target, None, &Limits::default()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::count_hom;
    use crate::query::parse_query;

    #[test]
    fn two_star_on_triangle() {
        let q = parse_query("q(x1,x2) :- E(x1,y), E(x2,y)").unwrap();
        assert_eq!(count_answers(&q, &Graph::complete(3)).unwrap(), 9);
    }

    #[test]
    fn stars_on_two_triangles_and_hexagon() {
        // k free leaves need a common neighbour: within one triangle that
        // rules out exactly the tuples hitting all three vertices.
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let c6 = Graph::cycle(6);
        for k in 1..=4u32 {
            let q = crate::quantum::star_query(k as usize);
            let surjective = 3u64.pow(k) + 3 - 3 * 2u64.pow(k);
            let expected = 2 * (3u64.pow(k) - surjective);
            assert_eq!(count_answers(&q, &two_k3).unwrap(), expected);
            assert_eq!(count_answers(&q, &c6).unwrap(), expected);
        }
    }

    #[test]
    fn full_query_counts_homs() {
        let q = ConjunctiveQuery::full(Graph::complete(2));
        assert_eq!(count_answers(&q, &Graph::complete(3)).unwrap(), 6);
        let c5 = ConjunctiveQuery::full(Graph::cycle(5));
        let g = Graph::complete(3);
        assert_eq!(count_answers(&c5, &g).unwrap(), count_hom(&Graph::cycle(5), &g).unwrap());
    }

    #[test]
    fn edge_query_counts_non_isolated_vertices() {
        let q = parse_query("q(x) :- E(x,y)").unwrap();
        let g = Graph::from_edges(5, &[(0, 1), (1, 2)]);
        assert_eq!(count_answers(&q, &g).unwrap(), 3);
        assert_eq!(list_answers(&q, &g).unwrap(), vec![vec![0], vec![1], vec![2]]);
    }
}
