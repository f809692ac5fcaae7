mod common;

use std::time::Instant;

use common::two_triangles;
use wldim::answers::{count_answers_tau, witness_free_variable};
use wldim::cfi::cfi;
use wldim::query::{count_answers, minimize, parse_query};
use wldim::width::{choose_witness_ell, ell_copy};
use wldim::witness::{build_witness, upper_bound_check, verify_witness, wl_dimension, WitnessCertificate};
use wldim::wl::wl_equivalent;
use wldim::{ConjunctiveQuery, Graph};

fn witness_queries() -> Vec<ConjunctiveQuery> {
    [
        "q(x) :- E(x,y)",
        "q(x1,x2) :- E(x1,y), E(x2,y)",
        "q(x1,x2) :- E(x1,x2), E(x1,y), E(x2,y)",
        "q(x) :- E(x,y1), E(y1,y2), E(y2,x)",
        "q(x1,x2) :- E(x1,y1), E(y1,y2), E(y2,x2)",
    ]
    .iter()
    .map(|s| parse_query(s).unwrap())
    .collect()
}

#[test]
fn certificates_verify_and_separate_counts() {
    for q in witness_queries() {
        let start = Instant::now();
        let cert = build_witness(&q).unwrap();
        assert!(cert.valid, "{}: {}", cert.query, cert.status);
        assert_ne!(cert.counts[0], cert.counts[1]);
        let report = verify_witness(&cert);
        assert!(report.passed, "{:?}", report.checks);

        let (g0, g1) = cert.graph_pair().unwrap();
        assert_eq!(count_answers(&q, &g0).unwrap(), cert.counts[0]);
        assert_eq!(count_answers(&q, &g1).unwrap(), cert.counts[1]);
        assert_eq!(cert.sew, wl_dimension(&q).unwrap());
        assert!(wl_equivalent(&g0, &g1, cert.sew - 1).unwrap());
        // one level up the pair must come apart, or the width would be wrong
        assert!(!wl_equivalent(&g0, &g1, cert.sew).unwrap(), "{}", cert.query);
        eprintln!("{} built in {:?}", cert.query, start.elapsed());
    }
}

#[test]
fn identity_coloured_gap_on_the_uncloned_pair() {
    for q in witness_queries() {
        let core = minimize(&q).unwrap();
        let ell = choose_witness_ell(&core).unwrap();
        let copy = ell_copy(&core, ell).unwrap();
        let x1 = witness_free_variable(&core).unwrap();
        let even = cfi(&copy.f, &[]).unwrap();
        let odd = cfi(&copy.f, &[copy.free_vertex(x1)]).unwrap();
        let a = count_answers_tau(&core, &even.coloured, Some(&copy.gamma), core.free()).unwrap();
        let b = count_answers_tau(&core, &odd.coloured, Some(&copy.gamma), core.free()).unwrap();
        assert!(a > b, "{}: {a} vs {b}", core.to_dsl("q"));
    }
}

#[test]
fn tampered_certificates_fail() {
    let q = parse_query("q(x1,x2) :- E(x1,y), E(x2,y)").unwrap();
    let cert = build_witness(&q).unwrap();
    let back = WitnessCertificate::from_json(&cert.to_json()).unwrap();
    assert_eq!(back, cert);

    let mut swapped = cert.clone();
    swapped.counts.swap(0, 1);
    assert!(!verify_witness(&swapped).passed);

    let mut same = cert.clone();
    same.graphs[1] = same.graphs[0].clone();
    assert!(!verify_witness(&same).passed);

    let mut width = cert.clone();
    width.sew = 3;
    width.wl_level = 2;
    assert!(!verify_witness(&width).passed);

    let mut garbage = cert;
    garbage.graphs[0].graph = "p 2\ne 0 0\n".into();
    assert!(!verify_witness(&garbage).passed);
}

#[test]
fn width_one_queries_agree_on_colour_refinement_twins() {
    let (a, b) = (two_triangles(), Graph::cycle(6));
    for text in ["q(x) :- E(x,y)", "q(x) :- E(x,y1), E(y1,y2)", "q(x1,x2) :- E(x1,x2)", "q(x1,x2) :- E(x1,x2), E(x2,y)"] {
        let q = parse_query(text).unwrap();
        let report = upper_bound_check(&q, &a, &b).unwrap();
        assert_eq!(report.k, 1);
        assert!(report.wl_equivalent);
        assert!(!report.is_violation(), "{text}: {report:?}");
    }
}
