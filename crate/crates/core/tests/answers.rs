mod common;

use std::collections::BTreeSet;

use common::strategies::{connected_graph, graph};
use common::{brute_answers, brute_cp_answers, is_hom};
use proptest::prelude::*;
use wldim::answers::{
    ans_via_interpolation, count_answers_tau, enumerate_extendable, extend_assignment, parity_edge_assignment,
    witness_free_variable,
};
use wldim::cfi::cfi;
use wldim::query::{minimize, parse_query, partial_automorphisms};
use wldim::width::ell_copy;
use wldim::ConjunctiveQuery;

fn test_queries() -> Vec<ConjunctiveQuery> {
    [
        "q(x) :- E(x,y)",
        "q(x1,x2) :- E(x1,y), E(x2,y)",
        "q(x1,x2) :- E(x1,x2), E(x2,y)",
        "q(x1,x2) :- E(x1,x2), E(x1,y), E(x2,y)",
        "q(x) :- E(x,y1), E(y1,y2), E(y2,x)",
        "q(x1,x2) :- E(x1,y1), E(y1,y2), E(y2,x2)",
        "q(x1,x2,x3) :- E(x1,y), E(x2,y), E(x3,y)",
    ]
    .iter()
    .map(|s| parse_query(s).unwrap())
    .collect()
}

fn twist(q: &ConjunctiveQuery) -> Vec<usize> {
    vec![witness_free_variable(q).unwrap()]
}

#[test]
fn cp_answers_are_exactly_the_extendable_assignments() {
    for q in test_queries() {
        for ell in [3, 5] {
            let copy = ell_copy(&q, ell).unwrap();
            for w in [Vec::new(), twist(&q)] {
                let odd: Vec<usize> = w.iter().map(|&x| copy.free_vertex(x)).collect();
                let chi = cfi(&copy.f, &odd).unwrap();
                let listed: BTreeSet<Vec<usize>> =
                    enumerate_extendable(&q, &copy, &w).unwrap().into_iter().map(|e| e.phi).collect();
                assert_eq!(listed, brute_cp_answers(&q, &copy, &chi), "{} ell {ell} W {w:?}", q.to_dsl("q"));
            }
        }
    }
}

#[test]
fn untwisted_side_has_strictly_more_extendable_assignments() {
    for q in test_queries() {
        let copy = ell_copy(&q, 3).unwrap();
        let even = enumerate_extendable(&q, &copy, &[]).unwrap().len();
        let odd = enumerate_extendable(&q, &copy, &twist(&q)).unwrap().len();
        assert!(even > odd, "{}: {even} vs {odd}", q.to_dsl("q"));
    }
    let edge = parse_query("q(x) :- E(x,y)").unwrap();
    let copy = ell_copy(&edge, 3).unwrap();
    assert_eq!(enumerate_extendable(&edge, &copy, &[]).unwrap().len(), 4);
    assert_eq!(enumerate_extendable(&edge, &copy, &[0]).unwrap().len(), 3);
}

#[test]
fn extensions_are_colour_prescribed_homomorphisms() {
    for q in test_queries() {
        let copy = ell_copy(&q, 3).unwrap();
        for w in [Vec::new(), twist(&q)] {
            let odd: Vec<usize> = w.iter().map(|&x| copy.free_vertex(x)).collect();
            let chi = cfi(&copy.f, &odd).unwrap();
            for phi in enumerate_extendable(&q, &copy, &w).unwrap() {
                let h = extend_assignment(&phi, &q, &copy, &w).unwrap();
                let map = h.map();
                assert!(is_hom(q.graph(), chi.result(), map));
                assert!((0..q.n()).all(|v| copy.gamma.apply(chi.colouring()[map[v]]) == v));
                let on_x: Vec<usize> = q.free().iter().map(|&x| map[x]).collect();
                assert_eq!(on_x, phi.phi);
            }
        }
    }
}

/// Bijections of the free variables, as the image of each in declaration order.
fn free_bijections(q: &ConjunctiveQuery) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut q.free().to_vec(), &mut Vec::new(), &mut out);
    out
}

#[test]
fn bijection_sum_factors_through_automorphisms() {
    for q in test_queries() {
        let core = minimize(&q).unwrap();
        if core.arity() == core.n() {
            continue;
        }
        let copy = ell_copy(&core, 3).unwrap();
        let even = cfi(&copy.f, &[]).unwrap();
        let odd = cfi(&copy.f, &[copy.free_vertex(twist(&core)[0])]).unwrap();
        let diff = |tau: &[usize]| -> i128 {
            count_answers_tau(&core, &even.coloured, Some(&copy.gamma), tau).unwrap() as i128
                - count_answers_tau(&core, &odd.coloured, Some(&copy.gamma), tau).unwrap() as i128
        };
        let total: i128 = free_bijections(&core).iter().map(|t| diff(t)).sum();
        // restrictions to X of automorphisms of H, not the automorphisms themselves
        let aut = partial_automorphisms(&core).unwrap().len() as i128;
        let identity = diff(core.free());
        assert!(identity > 0, "{}", core.to_dsl("q"));
        assert_eq!(total, aut * identity, "{}", core.to_dsl("q"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn interpolation_recovers_answer_counts(h in connected_graph(2, 4), bits in any::<u32>(), g in graph(1, 3)) {
        let n = h.n();
        let mut free: Vec<usize> = (0..n).filter(|&v| bits & (1 << v) != 0).collect();
        if free.is_empty() {
            free.push(0);
        }
        let q = ConjunctiveQuery::new(h, free).unwrap();
        prop_assume!(q.n() - q.arity() <= 2);
        let expected = brute_answers(&q, &g).len() as u64;
        prop_assert_eq!(ans_via_interpolation(&q, &g, 64).unwrap(), expected);
    }

    #[test]
    fn parity_assignments_hit_every_even_target(t in connected_graph(1, 7), bits in any::<u32>()) {
        let mut target: Vec<usize> = (0..t.n()).filter(|&v| bits & (1 << v) != 0).collect();
        if target.len() % 2 == 1 {
            target.pop();
        }
        let a = parity_edge_assignment(&t, &target).unwrap();
        prop_assert!(a.is_valid());
        for v in 0..t.n() {
            let odd = t.neighbours(v).iter().filter(|&&u| a.weight(v, u)).count() % 2 == 1;
            prop_assert_eq!(odd, target.contains(&v));
        }
    }
}
