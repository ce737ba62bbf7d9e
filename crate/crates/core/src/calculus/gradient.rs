//! Formal-entry gradients of discriminants.

use crate::contraction::{signed_sum, Target};
use crate::engine::discriminant::factorial_f64;
use crate::error::{invalid, Result};
use crate::limits::Limits;
use crate::tensor::{make_unit_delta, HyperMatrix, Variance};

fn check_order(s: usize) -> Result<()> {
    if s == 0 {
        return Err(invalid("gradient order must be at least 1"));
    }
    Ok(())
}

/// `∂c_s/∂A` with every entry of `A` treated as independent; contravariant.
pub fn grad_a(a: &HyperMatrix, s: usize) -> Result<HyperMatrix> {
    let delta = make_unit_delta(a.rank(), a.dim())?;
    grad_a_with(a, &delta, s, &Limits::default())
}

/// Leave-one-A-out signed tuple sum over every factor, divided by `s!`.
pub fn grad_a_with(
    a: &HyperMatrix,
    delta: &HyperMatrix,
    s: usize,
    limits: &Limits,
) -> Result<HyperMatrix> {
    check_order(s)?;
    let mut g = signed_sum(a, delta, s, Target::GradA, limits)?;
    let f = 1.0 / factorial_f64(s);
    g.iter_mut().for_each(|x| *x *= f);
    HyperMatrix::new(a.rank(), a.dim(), Variance::Contravariant, g)
}

/// `∂c_s/∂Delta`, covariant.
pub fn grad_delta(a: &HyperMatrix, delta: &HyperMatrix, s: usize) -> Result<HyperMatrix> {
    grad_delta_with(a, delta, s, &Limits::default())
}

pub fn grad_delta_with(
    a: &HyperMatrix,
    delta: &HyperMatrix,
    s: usize,
    limits: &Limits,
) -> Result<HyperMatrix> {
    check_order(s)?;
    let mut g = signed_sum(a, delta, s, Target::GradDelta, limits)?;
    let f = 1.0 / factorial_f64(s);
    g.iter_mut().for_each(|x| *x *= f);
    HyperMatrix::new(a.rank(), a.dim(), Variance::Covariant, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::discriminant_oracle;

    #[test]
    fn rank2_first_order_is_identity() {
        let a = HyperMatrix::from_rows(&[&[1., 2.], &[3., 4.]], Variance::Covariant).unwrap();
        assert_eq!(grad_a(&a, 1).unwrap().data(), &[1., 0., 0., 1.]);
        let delta = make_unit_delta(2, 2).unwrap();
        assert_eq!(grad_delta(&a, &delta, 1).unwrap().data(), a.data());
    }

    #[test]
    fn rank4_order2_entries() {
        let a = HyperMatrix::from_fn(4, 2, Variance::Covariant, |ix| {
            1.0 + ix
                .iter()
                .enumerate()
                .map(|(k, &i)| (k + 1) as f64 * i as f64 * 0.37)
                .sum::<f64>()
        })
        .unwrap();
        let g = grad_a(&a, 2).unwrap();
        assert!((g.get(&[0, 0, 0, 0]) - a.get(&[1, 1, 1, 1])).abs() < 1e-12);
        assert!((g.get(&[0, 0, 0, 1]) + a.get(&[1, 1, 1, 0])).abs() < 1e-12);
    }

    #[test]
    fn euler_identities() {
        let a = HyperMatrix::from_fn(3, 2, Variance::Covariant, |ix| {
            0.5 + ix[0] as f64 - 0.7 * ix[1] as f64 + 0.2 * (ix[2] * ix[1]) as f64
        })
        .unwrap();
        let delta = make_unit_delta(3, 2).unwrap();
        for s in 1..=3 {
            let c = discriminant_oracle(&a, &delta, s).unwrap();
            let ga = grad_a(&a, s).unwrap();
            let gd = grad_delta(&a, &delta, s).unwrap();
            let lhs_a: f64 = ga.data().iter().zip(a.data()).map(|(x, y)| x * y).sum();
            let lhs_d: f64 = gd.data().iter().zip(delta.data()).map(|(x, y)| x * y).sum();
            let tol = 1e-10 * c.abs().max(1.0);
            assert!((lhs_a - s as f64 * c).abs() < tol);
            assert!((lhs_d - s as f64 * c).abs() < tol);
        }
    }
}
