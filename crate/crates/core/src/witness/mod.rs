//! WL-dimension of a query and certified lower-bound witnesses.
//!
//! A witness for a query of semantic extension width `k` is a pair of
//! graphs that (k−1)-WL cannot tell apart but on which the query has
//! different answer counts. The pair is χ(F, ∅) and χ(F, {x₁}) for an
//! ℓ-copy `F` of the counting-minimal core, with the free colour classes
//! cloned if the plain pair happens to have equal counts.

use serde::{Deserialize, Serialize};

use crate::answers::{count_answers_tau_with, witness_free_variable};
use crate::cfi::{cfi_with, clone_blocks, CloneSpec};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, ColouredGraph, Graph};
use crate::limits::Limits;
use crate::query::{count_answers_with, minimize_with, parse_query, ConjunctiveQuery};
use crate::width::{choose_witness_ell_with, ell_copy, extension_width_with, semantic_extension_width_with};
use crate::wl::{hom_indist_oracle_with, wl_equivalent_with, Verdict};

/// The WL-dimension of `G ↦ |Ans(q, G)|`, which equals the semantic
/// extension width.
pub fn wl_dimension(q: &ConjunctiveQuery) -> Result<usize> {
    wl_dimension_with(q, &Limits::default())
}

pub fn wl_dimension_with(q: &ConjunctiveQuery, limits: &Limits) -> Result<usize> {
    semantic_extension_width_with(q, limits)
}

/// Knobs for [`build_witness_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessOptions {
    pub limits: Limits,
    /// Largest pattern size tried by the homomorphism oracle.
    pub oracle_bound: usize,
    /// Largest clone multiplicity the `z` search may reach.
    pub max_multiplicity: usize,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions {
            limits: Limits::default(),
            oracle_bound: 7,
            max_multiplicity: 32,
        }
    }
}

/// A graph embedded in a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedGraph {
    pub graph: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

impl EmbeddedGraph {
    fn new(g: &Graph) -> EmbeddedGraph {
        EmbeddedGraph {
            graph: g.to_text(),
            labels: g.labels().map(<[String]>::to_vec).unwrap_or_default(),
        }
    }

    pub fn decode(&self) -> Result<Graph> {
        let g = parse_graph(&self.graph)?;
        Ok(if self.labels.len() == g.n() && !self.labels.is_empty() {
            g.with_labels(self.labels.clone())
        } else {
            g
        })
    }
}

/// One named verification step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Outcome of the homomorphism oracle as stored in a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub level: usize,
    pub bound: usize,
    #[serde(rename = "equalUpToBound")]
    pub equal_up_to_bound: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinguisher: Option<String>,
}

impl OracleReport {
    fn new(level: usize, bound: usize, verdict: &Verdict) -> OracleReport {
        match verdict {
            Verdict::EqualUpToBound => OracleReport {
                level,
                bound,
                equal_up_to_bound: true,
                distinguisher: None,
            },
            Verdict::Distinguished(h) => OracleReport {
                level,
                bound,
                equal_up_to_bound: false,
                distinguisher: Some(h.to_text()),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub query: String,
    pub minimized: String,
    pub sew: usize,
    pub ell: usize,
    #[serde(rename = "ellCopy")]
    pub ell_copy: EmbeddedGraph,
    /// Free variable whose CFI gadget is twisted in the second graph.
    pub twisted: String,
    /// Clone multiplicities per free variable; all ones means no cloning.
    pub multiplicities: Vec<usize>,
    pub graphs: [EmbeddedGraph; 2],
    pub counts: [u64; 2],
    #[serde(rename = "wlLevel")]
    pub wl_level: usize,
    #[serde(rename = "wlEquivalent")]
    pub wl_equivalent: bool,
    pub oracle: OracleReport,
    pub checks: Vec<Check>,
    pub status: String,
    pub valid: bool,
}

impl WitnessCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialise")
    }

    pub fn from_json(text: &str) -> Result<WitnessCertificate> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("certificate JSON: {e}")))
    }

    pub fn graph_pair(&self) -> Result<(Graph, Graph)> {
        Ok((self.graphs[0].decode()?, self.graphs[1].decode()?))
    }
}

/// Tuples in `{1..=cap}^k` in lexicographic order, skipping those already
/// covered by a smaller cap.
fn multiplicity_tuples(k: usize, cap: usize, previous_cap: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = cap.pow(k as u32);
    (0..total).filter_map(move |mut i| {
        let mut z = vec![0; k];
        for slot in z.iter_mut().rev() {
            *slot = i % cap + 1;
            i /= cap;
        }
        if z.iter().all(|&v| v <= previous_cap) {
            None
        } else {
            Some(z)
        }
    })
}

struct Pair {
    g0: ColouredGraph,
    g1: ColouredGraph,
}

/// Builds and checks a witness pair for `q`.
pub fn build_witness(q: &ConjunctiveQuery) -> Result<WitnessCertificate> {
    build_witness_with(q, &WitnessOptions::default())
}

pub fn build_witness_with(q: &ConjunctiveQuery, opts: &WitnessOptions) -> Result<WitnessCertificate> {
    let limits = &opts.limits;
    q.require_connected()?;
    q.require_free()?;
    let core = minimize_with(q, limits)?;
    let k = extension_width_with(&core, limits)?;
    let full = core.arity() == core.n();

    let (ell, f, twisted, pair_free) = if full {
        let h = core.graph().clone().with_labels(core.names().to_vec());
        (1, h, 0usize, (0..core.n()).collect::<Vec<usize>>())
    } else {
        let ell = choose_witness_ell_with(&core, limits)?;
        let copy = ell_copy(&core, ell)?;
        let x1 = witness_free_variable(&core).expect("connected core with existential variables");
        let blocks = core.free().iter().map(|&x| copy.free_vertex(x)).collect();
        (ell, copy.f, x1, blocks)
    };
    let twisted_f = if full { twisted } else { ell_copy(&core, ell)?.free_vertex(twisted) };
    let base = Pair {
        g0: cfi_with(&f, &[], limits)?.coloured,
        g1: cfi_with(&f, &[twisted_f], limits)?.coloured,
    };

    let mut checks = Vec::new();
    if !full {
        // the colourful gap that drives the construction
        let copy = ell_copy(&core, ell)?;
        let tau: Vec<usize> = core.free().to_vec();
        let a0 = count_answers_tau_with(&core, &base.g0, Some(&copy.gamma), &tau, limits)?;
        let a1 = count_answers_tau_with(&core, &base.g1, Some(&copy.gamma), &tau, limits)?;
        checks.push(Check::new(
            "colourful gap",
            a0 > a1,
            format!("identity-coloured answers {a0} vs {a1}"),
        ));
    }

    let count = |g: &Graph| count_answers_with(q, g, limits);
    let mut multiplicities = vec![1; if full { 0 } else { core.arity() }];
    let mut graphs = (base.g0.graph().clone(), base.g1.graph().clone());
    let mut counts = (count(&graphs.0)?, count(&graphs.1)?);
    if counts.0 == counts.1 && !full {
        let k_free = core.arity();
        let mut previous = 1;
        let mut cap = k_free + 1;
        'search: loop {
            for z in multiplicity_tuples(k_free, cap, previous) {
                let spec = CloneSpec::new(pair_free.clone(), z.clone())?;
                let c0 = clone_blocks(&base.g0, &spec)?.coloured.graph().clone();
                let c1 = clone_blocks(&base.g1, &spec)?.coloured.graph().clone();
                let n0 = count(&c0)?;
                let n1 = count(&c1)?;
                if n0 != n1 {
                    multiplicities = z;
                    graphs = (c0, c1);
                    counts = (n0, n1);
                    break 'search;
                }
            }
            if cap >= opts.max_multiplicity {
                return Err(Error::BudgetExceeded(format!(
                    "no clone multiplicities up to {} separate the answer counts",
                    opts.max_multiplicity
                )));
            }
            previous = cap;
            cap = (cap * 2).min(opts.max_multiplicity);
        }
    }

    let level = k.saturating_sub(1);
    let wl_eq = wl_equivalent_with(&graphs.0, &graphs.1, level, limits)?;
    let verdict = hom_indist_oracle_with(&graphs.0, &graphs.1, level, opts.oracle_bound, limits)?;
    checks.push(Check::new(
        "answer counts differ",
        counts.0 != counts.1,
        format!("{} vs {}", counts.0, counts.1),
    ));
    checks.push(Check::new(
        "WL-equivalent below the width",
        wl_eq,
        format!("{level}-WL {}", if wl_eq { "equivalent" } else { "distinguishes" }),
    ));
    checks.push(Check::new(
        "homomorphism oracle",
        !verdict.is_distinguished(),
        match &verdict {
            Verdict::EqualUpToBound => format!("equal up to {} vertices", opts.oracle_bound),
            Verdict::Distinguished(h) => format!("distinguished by a {}-vertex pattern", h.n()),
        },
    ));

    let all_passed = checks.iter().all(|c| c.passed);
    let (status, valid) = if all_passed {
        ("valid".to_string(), true)
    } else if full && counts.0 == counts.1 {
        ("inconclusive (full-query case)".to_string(), false)
    } else {
        let failing = checks.iter().find(|c| !c.passed).expect("some check failed");
        (format!("invalid: {}", failing.name), false)
    };

    Ok(WitnessCertificate {
        query: q.to_dsl("q"),
        minimized: core.to_dsl("q"),
        sew: k,
        ell,
        ell_copy: EmbeddedGraph::new(&f),
        twisted: core.name(twisted).to_string(),
        multiplicities,
        graphs: [EmbeddedGraph::new(&graphs.0), EmbeddedGraph::new(&graphs.1)],
        counts: [counts.0, counts.1],
        wl_level: level,
        wl_equivalent: wl_eq,
        oracle: OracleReport::new(level, opts.oracle_bound, &verdict),
        checks,
        status,
        valid,
    })
}

/// Result of re-checking a certificate from scratch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// Recomputes everything a certificate claims. Problems are reported as
/// failed checks, never as errors.
pub fn verify_witness(cert: &WitnessCertificate) -> VerificationReport {
    verify_witness_with(cert, &Limits::default())
}

pub fn verify_witness_with(cert: &WitnessCertificate, limits: &Limits) -> VerificationReport {
    let mut checks = Vec::new();
    let decoded = parse_query(&cert.query).and_then(|q| Ok((q, cert.graph_pair()?)));
    let (q, (g0, g1)) = match decoded {
        Ok(v) => v,
        Err(e) => {
            checks.push(Check::new("certificate decodes", false, e.to_string()));
            return VerificationReport { checks, passed: false };
        }
    };
    checks.push(Check::new("certificate decodes", true, ""));

    match semantic_extension_width_with(&q, limits) {
        Ok(k) => {
            checks.push(Check::new("width", k == cert.sew, format!("recomputed {k}, recorded {}", cert.sew)));
            checks.push(Check::new(
                "WL level is width minus one",
                cert.wl_level + 1 == k.max(1),
                format!("level {} for width {k}", cert.wl_level),
            ));
        }
        Err(e) => checks.push(Check::new("width", false, e.to_string())),
    }

    let recount = |g: &Graph| count_answers_with(&q, g, limits);
    match (recount(&g0), recount(&g1)) {
        (Ok(a), Ok(b)) => {
            checks.push(Check::new(
                "answer counts match",
                [a, b] == cert.counts,
                format!("recomputed {a} and {b}, recorded {} and {}", cert.counts[0], cert.counts[1]),
            ));
            checks.push(Check::new("answer counts differ", a != b, format!("{a} vs {b}")));
        }
        (Err(e), _) | (_, Err(e)) => checks.push(Check::new("answer counts match", false, e.to_string())),
    }

    match wl_equivalent_with(&g0, &g1, cert.wl_level, limits) {
        Ok(eq) => checks.push(Check::new(
            "WL-equivalent at the recorded level",
            eq,
            format!("{}-WL {}", cert.wl_level, if eq { "equivalent" } else { "distinguishes" }),
        )),
        Err(e) => checks.push(Check::new("WL-equivalent at the recorded level", false, e.to_string())),
    }

    match hom_indist_oracle_with(&g0, &g1, cert.wl_level, cert.oracle.bound, limits) {
        Ok(v) => checks.push(Check::new(
            "homomorphism oracle",
            !v.is_distinguished(),
            match v {
                Verdict::EqualUpToBound => format!("equal up to {} vertices", cert.oracle.bound),
                Verdict::Distinguished(h) => format!("distinguished by a {}-vertex pattern", h.n()),
            },
        )),
        Err(e) => checks.push(Check::new("homomorphism oracle", false, e.to_string())),
    }

    let passed = checks.iter().all(|c| c.passed);
    checks.push(Check::new(
        "validity flag",
        passed == cert.valid,
        format!("recorded {}, recomputed {passed}", cert.valid),
    ));
    let passed = checks.iter().all(|c| c.passed);
    VerificationReport { checks, passed }
}

/// Outcome of [`upper_bound_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpperBoundReport {
    pub k: usize,
    #[serde(rename = "wlEquivalent")]
    pub wl_equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<[u64; 2]>,
    pub status: String,
}

impl UpperBoundReport {
    pub fn is_violation(&self) -> bool {
        self.status == "violation"
    }
}

/// If the graphs are k-WL-equivalent for the semantic extension width
/// `k` of `q`, their answer counts must agree.
pub fn upper_bound_check(q: &ConjunctiveQuery, g1: &Graph, g2: &Graph) -> Result<UpperBoundReport> {
    upper_bound_check_with(q, g1, g2, &Limits::default())
}

pub fn upper_bound_check_with(q: &ConjunctiveQuery, g1: &Graph, g2: &Graph, limits: &Limits) -> Result<UpperBoundReport> {
    let k = semantic_extension_width_with(q, limits)?;
    let eq = wl_equivalent_with(g1, g2, k, limits)?;
    if !eq {
        return Ok(UpperBoundReport {
            k,
            wl_equivalent: false,
            counts: None,
            status: "precondition not met".into(),
        });
    }
    let a = count_answers_with(q, g1, limits)?;
    let b = count_answers_with(q, g2, limits)?;
    Ok(UpperBoundReport {
        k,
        wl_equivalent: true,
        counts: Some([a, b]),
        status: if a == b { "consistent" } else { "violation" }.into(),
    })
}
