//! Generalized powers `(A^s) = ∂T_s/∂Δ` and the rank-4 Cayley–Hamilton residual.

use crate::calculus::gradient::grad_delta_with;
use crate::engine::discriminant::discriminant_general;
use crate::error::{invalid, Error, Result};
use crate::limits::Limits;
use crate::tensor::{is_unit_delta, make_unit_delta, make_unit_delta_covariant, HyperMatrix};

fn check_s(s: usize) -> Result<()> {
    if s == 0 || s > 4 {
        return Err(Error::Unsupported(format!(
            "power tensors are defined for 1 <= s <= 4, got {s}"
        )));
    }
    Ok(())
}

/// Weights `w_k` with `∂T_s/∂Δ = Σ_k w_k ∂C_k/∂Δ`, from Newton's identities.
fn chain_weights(c: &[f64], s: usize) -> Vec<f64> {
    let c1 = c.first().copied().unwrap_or(0.0);
    let c2 = c.get(1).copied().unwrap_or(0.0);
    let c3 = c.get(2).copied().unwrap_or(0.0);
    match s {
        1 => vec![1.0],
        2 => vec![c1, -1.0],
        3 => vec![c1 * c1 - c2, -c1, 1.0],
        _ => vec![c1 * c1 * c1 - 2.0 * c1 * c2 + c3, c2 - c1 * c1, c1, -1.0],
    }
}

/// `(A^s)` for `s ≤ 4`, covariant.
pub fn power_tensor(a: &HyperMatrix, delta: &HyperMatrix, s: usize) -> Result<HyperMatrix> {
    power_tensor_with(a, delta, s, &Limits::default())
}

pub fn power_tensor_with(
    a: &HyperMatrix,
    delta: &HyperMatrix,
    s: usize,
    limits: &Limits,
) -> Result<HyperMatrix> {
    check_s(s)?;
    let cs: Vec<f64> = (1..s)
        .map(|k| discriminant_general(a, delta, k, limits))
        .collect::<Result<_>>()?;
    powers_from(a, delta, &cs, s, limits)
}

fn powers_from(
    a: &HyperMatrix,
    delta: &HyperMatrix,
    cs: &[f64],
    s: usize,
    limits: &Limits,
) -> Result<HyperMatrix> {
    let w = chain_weights(cs, s);
    let mut out = HyperMatrix::zeros(a.rank(), a.dim(), crate::tensor::Variance::Covariant)?;
    for (k, wk) in w.iter().enumerate() {
        let g = grad_delta_with(a, delta, k + 1, limits)?;
        out = out.add_scaled(*wk, &g)?;
    }
    Ok(out)
}

/// `[A^s] = Δ · (A^s) = s·T_s`.
pub fn bracket_trace(a: &HyperMatrix, delta: &HyperMatrix, s: usize) -> Result<f64> {
    let p = power_tensor(a, delta, s)?;
    p.dot(&delta.clone().with_variance(p.variance()))
}

/// `Σ_{k=0}^{d} (-1)^k C_k (A^{d-k})` with `(A⁰)` the covariant unit tensor.
/// Requires `d ≤ 4` (the tabulated Newton identities).
pub fn ch_residual_rank4(a: &HyperMatrix) -> Result<HyperMatrix> {
    ch_residual_rank4_with(a, &Limits::default())
}

pub fn ch_residual_rank4_with(a: &HyperMatrix, limits: &Limits) -> Result<HyperMatrix> {
    a.expect_rank(4)?;
    let d = a.dim();
    if d > 4 {
        return Err(Error::Unsupported(format!(
            "residual needs powers up to {d}, tabulated only to 4"
        )));
    }
    let delta = make_unit_delta(4, d)?;
    if !is_unit_delta(&delta) {
        return Err(invalid(
            "inverse unit tensor exists only for the diagonal unit",
        ));
    }
    let cs: Vec<f64> = (1..=d)
        .map(|k| discriminant_general(a, &delta, k, limits))
        .collect::<Result<_>>()?;
    let mut out =
        make_unit_delta_covariant(4, d)?.scaled(if d % 2 == 0 { cs[d - 1] } else { -cs[d - 1] });
    for p in 1..=d {
        let k = d - p;
        let coef = if k == 0 {
            1.0
        } else if k % 2 == 0 {
            cs[k - 1]
        } else {
            -cs[k - 1]
        };
        let power = powers_from(a, &delta, &cs[..p.saturating_sub(1)], p, limits)?;
        out = out.add_scaled(coef, &power)?;
    }
    Ok(out)
}
