use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{count_hom_with, Graph};
use crate::limits::Limits;
use crate::query::ConjunctiveQuery;
use crate::width::ell_copy;

/// Solves `A x = b` exactly; `A` must be square and invertible.
fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Result<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Internal("singular interpolation system".into()))?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for c in col..n {
            a[col][c] = &a[col][c] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Ok(b)
}

/// |Ans(q, G)| recovered from homomorphism counts alone.
///
/// With `n̂ = |V(G)|^|Y|`, every answer extends in some number
/// `i ∈ 1..=n̂` of ways, and `|Hom(F_ℓ, G)| = Σ_i b_i·i^ℓ` where `b_i`
/// counts answers with exactly `i` extensions. Solving this Vandermonde
/// system for `ℓ = 1..=n̂` and summing the `b_i` gives the answer count.
/// `max_ell` caps `n̂`.
pub fn ans_via_interpolation(q: &ConjunctiveQuery, g: &Graph, max_ell: usize) -> Result<u64> {
    ans_via_interpolation_with(q, g, max_ell, &Limits::default())
}

pub fn ans_via_interpolation_with(q: &ConjunctiveQuery, g: &Graph, max_ell: usize, limits: &Limits) -> Result<u64> {
    let y = q.n() - q.arity();
    if y == 0 {
        return count_hom_with(q.graph(), g, limits);
    }
    let n_hat = (g.n() as u32)
        .checked_pow(y as u32)
        .map(|v| v as usize)
        .filter(|&v| v <= max_ell)
        .ok_or_else(|| Error::TooLarge(format!("|V(G)|^|Y| = {}^{y} exceeds {max_ell}", g.n())))?;
    if n_hat == 0 {
        // no vertices: only the empty assignment could be an answer, and
        // there are free variables to place
        return Ok(0);
    }
    let mut rows = Vec::with_capacity(n_hat);
    let mut rhs = Vec::with_capacity(n_hat);
    for ell in 1..=n_hat {
        let f = ell_copy(q, ell)?.f;
        rhs.push(BigRational::from_integer(BigInt::from(count_hom_with(&f, g, limits)?)));
        rows.push(
            (1..=n_hat)
                .map(|i| BigRational::from_integer(BigInt::from(i).pow(ell as u32)))
                .collect(),
        );
    }
    let buckets = solve(rows, rhs)?;
    let mut total = BigRational::zero();
    for b in &buckets {
        if !b.is_integer() || b.is_negative() {
            return Err(Error::Internal(format!("bucket size {b} is not a natural number")));
        }
        total += b;
    }
    total
        .to_integer()
        .to_u64()
        .ok_or(Error::Overflow("interpolated answer count"))
}
