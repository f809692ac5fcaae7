//! Quantum queries, star queries and dominating sets.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::query::{count_answers_with, minimize_with, parse_query, queries_isomorphic, ConjunctiveQuery};
use crate::width::semantic_extension_width_with;

/// A finite rational combination of pairwise non-isomorphic, connected,
/// counting-minimal queries with free variables.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QuantumQuery {
    terms: Vec<(BigRational, ConjunctiveQuery)>,
}

impl QuantumQuery {
    pub fn terms(&self) -> &[(BigRational, ConjunctiveQuery)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }
}

impl fmt::Display for QuantumQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, q) in &self.terms {
            writeln!(f, "{c} | {}", q.to_dsl("q"))?;
        }
        Ok(())
    }
}

/// Minimises every constituent, merges isomorphic ones by adding their
/// coefficients, and drops terms whose coefficient ends up zero.
pub fn normalize_quantum(raw: Vec<(BigRational, ConjunctiveQuery)>) -> Result<QuantumQuery> {
    normalize_quantum_with(raw, &Limits::default())
}

pub fn normalize_quantum_with(raw: Vec<(BigRational, ConjunctiveQuery)>, limits: &Limits) -> Result<QuantumQuery> {
    let mut terms: Vec<(BigRational, ConjunctiveQuery)> = Vec::new();
    for (c, q) in raw {
        q.require_connected()?;
        q.require_free()?;
        let core = minimize_with(&q, limits)?;
        let mut merged = false;
        for (existing_c, existing) in terms.iter_mut() {
            if queries_isomorphic(existing, &core, limits)? {
                *existing_c += &c;
                merged = true;
                break;
            }
        }
        if !merged {
            terms.push((c, core));
        }
    }
    terms.retain(|(c, _)| !c.is_zero());
    Ok(QuantumQuery { terms })
}

/// Σ c_i·|Ans(q_i, G)|.
pub fn eval_quantum(q: &QuantumQuery, g: &Graph) -> Result<BigRational> {
    eval_quantum_with(q, g, &Limits::default())
}

pub fn eval_quantum_with(q: &QuantumQuery, g: &Graph, limits: &Limits) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for (c, term) in &q.terms {
        let n = count_answers_with(term, g, limits)?;
        total += c * BigRational::from_integer(BigInt::from(n));
    }
    Ok(total)
}

/// Hereditary semantic extension width: the largest constituent width.
pub fn hsew(q: &QuantumQuery) -> Result<usize> {
    hsew_with(q, &Limits::default())
}

pub fn hsew_with(q: &QuantumQuery, limits: &Limits) -> Result<usize> {
    if q.is_empty() {
        return Err(Error::Invalid("hsew of an empty quantum query".into()));
    }
    q.terms
        .iter()
        .map(|(_, t)| semantic_extension_width_with(t, limits))
        .try_fold(0, |acc, w| Ok(acc.max(w?)))
}

/// Parses `coeff | query` lines; `#` starts a comment line. Coefficients
/// are integers or fractions `a/b`. The result is not normalised.
pub fn parse_quantum(text: &str) -> Result<Vec<(BigRational, ConjunctiveQuery)>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let syntax = |message: String| Error::Syntax { line: idx + 1, message };
        let (coeff, query) = line
            .split_once('|')
            .ok_or_else(|| syntax("expected `coeff | query`".into()))?;
        let c = BigRational::from_str(coeff.trim()).map_err(|_| syntax(format!("bad coefficient `{}`", coeff.trim())))?;
        let q = parse_query(query).map_err(|e| match e {
            Error::Syntax { message, .. } => syntax(message),
            other => other,
        })?;
        out.push((c, q));
    }
    Ok(out)
}

/// The k-star: free leaves `x1..xk` joined to one existential centre.
pub fn star_query(k: usize) -> ConjunctiveQuery {
    assert!(k >= 1, "stars need at least one leaf");
    let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, k)).collect();
    let graph = Graph::from_edges(k + 1, &edges);
    let mut names: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    names.push("y".into());
    ConjunctiveQuery::new(graph, (0..k).collect())
        .and_then(|q| q.with_names(names))
        .expect("star is well formed")
}

/// Set partitions of `0..k` as block-size lists, in restricted-growth order.
fn partition_block_sizes(k: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, k: usize, sizes: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == k {
            out.push(sizes.clone());
            return;
        }
        for b in 0..sizes.len() {
            sizes[b] += 1;
            rec(i + 1, k, sizes, out);
            sizes[b] -= 1;
        }
        sizes.push(1);
        rec(i + 1, k, sizes, out);
        sizes.pop();
    }
    let mut out = Vec::new();
    rec(0, k, &mut Vec::new(), &mut out);
    out
}

/// Coefficient `c_m` of |Ans(S_m, G)| in the injective count of `S_k`:
/// the Möbius values `Π_B (−1)^{|B|−1}(|B|−1)!` summed over partitions
/// of the leaves into `m` blocks. Merging a block of leaves yields a
/// smaller star, so only the block count matters.
pub fn injective_star_coefficients(k: usize) -> Vec<i128> {
    let mut coeffs = vec![0i128; k + 1];
    for sizes in partition_block_sizes(k) {
        let mu: i128 = sizes
            .iter()
            .map(|&b| {
                let fact: i128 = (1..b as i128).product();
                if b % 2 == 0 {
                    -fact
                } else {
                    fact
                }
            })
            .product();
        coeffs[sizes.len()] += mu;
    }
    coeffs
}

/// Answers of the k-star whose leaves receive pairwise distinct vertices.
pub fn count_injective_star(k: usize, g: &Graph) -> Result<u64> {
    count_injective_star_with(k, g, &Limits::default())
}

pub fn count_injective_star_with(k: usize, g: &Graph, limits: &Limits) -> Result<u64> {
    if k == 0 {
        return Err(Error::Invalid("stars need at least one leaf".into()));
    }
    let coeffs = injective_star_coefficients(k);
    let mut total: i128 = 0;
    for (m, &c) in coeffs.iter().enumerate().skip(1) {
        if c == 0 {
            continue;
        }
        let n = count_answers_with(&star_query(m), g, limits)? as i128;
        total = c
            .checked_mul(n)
            .and_then(|t| total.checked_add(t))
            .ok_or(Error::Overflow("injective star count"))?;
    }
    u64::try_from(total).map_err(|_| Error::Internal(format!("negative injective count {total}")))
}

/// Size-k dominating sets: all k-subsets minus those leaving some vertex
/// undominated. A k-set misses `v` exactly when, in the complement, `v`
/// is a common neighbour of all its members, so the bad sets are the
/// injective k-star answers in the complement divided by `k!`.
pub fn count_dominating_sets(k: usize, g: &Graph) -> Result<u64> {
    count_dominating_sets_with(k, g, &Limits::default())
}

pub fn count_dominating_sets_with(k: usize, g: &Graph, limits: &Limits) -> Result<u64> {
    if k == 0 {
        return Err(Error::Invalid("dominating sets need k ≥ 1".into()));
    }
    let n = g.n() as u128;
    let k128 = k as u128;
    if k128 > n {
        return Ok(0);
    }
    let binom = (0..k128).fold(1u128, |acc, i| acc * (n - i) / (i + 1));
    let factorial: u128 = (1..=k128).product();
    let injective = count_injective_star_with(k, &g.complement(), limits)? as u128;
    if injective % factorial != 0 {
        return Err(Error::Internal(format!(
            "injective count {injective} is not divisible by {k}!"
        )));
    }
    let bad = injective / factorial;
    binom
        .checked_sub(bad)
        .and_then(|d| d.to_u64())
        .ok_or_else(|| Error::Internal("more undominating sets than sets".into()))
}
