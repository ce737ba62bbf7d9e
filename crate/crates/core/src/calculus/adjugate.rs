//! Determinants, adjugates and inverses through Levi-Civita contractions.

use crate::calculus::gradient::grad_a;
use crate::engine::discriminant::factorial_f64;
use crate::error::{invalid, Error, Result};
use crate::perm::all_perms;
use crate::tensor::{HyperMatrix, Variance};

fn singular_guard(det: f64, a: &HyperMatrix) -> Result<()> {
    let scale = a.scale();
    if scale == 0.0 || det.abs() <= 1e-12 * scale.powi(a.dim() as i32) {
        return Err(Error::Singular(format!(
            "determinant {det:e} at scale {scale:e}"
        )));
    }
    Ok(())
}

/// Classical inverse of a matrix from the gradient of its determinant:
/// `(a⁻¹)_{ij} = (∂c_d/∂a_{ji}) / c_d`.
pub fn inverse_rank2(a: &HyperMatrix) -> Result<HyperMatrix> {
    a.expect_rank(2)?;
    let d = a.dim();
    let g = grad_a(a, d)?;
    let det: f64 = g
        .data()
        .iter()
        .zip(a.data())
        .map(|(x, y)| x * y)
        .sum::<f64>()
        / d as f64;
    singular_guard(det, a)?;
    HyperMatrix::from_fn(2, d, Variance::Contravariant, |ix| {
        g.get(&[ix[1], ix[0]]) / det
    })
}

fn expect_even(a: &HyperMatrix) -> Result<()> {
    if a.rank() % 2 != 0 {
        return Err(Error::Unsupported(format!(
            "epsilon adjugate needs even rank, got {}",
            a.rank()
        )));
    }
    if a.dim() < 2 {
        return Err(invalid("epsilon adjugate needs dim >= 2"));
    }
    Ok(())
}

/// `(1/d!) ε⋯ε A⋯A` with one ε per slot and `d` copies of `A`. For even
/// rank the first ε can be fixed to the identity ordering.
pub fn det_epsilon(a: &HyperMatrix) -> Result<f64> {
    expect_even(a)?;
    let (r, d) = (a.rank(), a.dim());
    let perms = all_perms(d);
    let mut total = 0.0;
    let mut digits = vec![0usize; r - 1];
    let mut idx = vec![0usize; r];
    loop {
        let mut term: f64 = digits.iter().map(|&p| perms[p].sign() as f64).product();
        for m in 0..d {
            idx[0] = m;
            for (k, &p) in digits.iter().enumerate() {
                idx[k + 1] = perms[p].apply(m);
            }
            term *= a.get(&idx);
        }
        total += term;
        if !advance(&mut digits, perms.len()) {
            return Ok(total);
        }
    }
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for slot in digits.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

/// `(1/(d-1)!) ε^{i i₁…}⋯ε^{l l₁…} A_{i₁…l₁}⋯A_{i_{d-1}…l_{d-1}}`, the
/// adjugate without the `1/det` factor. Contravariant.
pub fn adjugate_epsilon(a: &HyperMatrix) -> Result<HyperMatrix> {
    expect_even(a)?;
    let (r, d) = (a.rank(), a.dim());
    let rest = all_perms(d - 1);
    let norm = 1.0 / factorial_f64(d - 1);
    // For slot value x, ε^{x i₁…i_{d-1}} is nonzero when (i₁…) orders the
    // other d-1 values; its sign is (-1)^x times the sign of that ordering.
    let others: Vec<Vec<usize>> = (0..d)
        .map(|x| (0..d).filter(|&v| v != x).collect())
        .collect();
    let mut digits = vec![0usize; r];
    let mut idx = vec![0usize; r];
    HyperMatrix::from_fn(r, d, Variance::Contravariant, |x| {
        let mut acc = 0.0;
        digits.iter_mut().for_each(|v| *v = 0);
        loop {
            let mut term = 1.0;
            for (k, &p) in digits.iter().enumerate() {
                let sign = rest[p].sign() as f64 * if x[k] % 2 == 0 { 1.0 } else { -1.0 };
                term *= sign;
            }
            for m in 0..d - 1 {
                for (k, &p) in digits.iter().enumerate() {
                    idx[k] = others[x[k]][rest[p].apply(m)];
                }
                term *= a.get(&idx);
            }
            acc += term;
            if !advance(&mut digits, rest.len()) {
                break;
            }
        }
        acc * norm
    })
}

/// `A^{i…} = adj(A)^{i…} / det(A)`, so that `A^{i k…} A_{j k…} = δ^i_j`.
pub fn inverse_even_rank(a: &HyperMatrix) -> Result<HyperMatrix> {
    let adj = adjugate_epsilon(a)?;
    let det = adj.dot(&a.clone().with_variance(Variance::Contravariant))? / a.dim() as f64;
    singular_guard(det, a)?;
    Ok(adj.scaled(1.0 / det))
}

/// `M^i_j = Σ_{k…} U^{i k…} L_{j k…}`: contraction over all slots but the first.
pub fn contract_leading(upper: &HyperMatrix, lower: &HyperMatrix) -> Result<Vec<Vec<f64>>> {
    upper.check_same_shape(lower)?;
    let d = upper.dim();
    let block = upper.len() / d;
    let u = upper.data();
    let l = lower.data();
    Ok((0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    (0..block)
                        .map(|k| u[i * block + k] * l[j * block + k])
                        .sum()
                })
                .collect()
        })
        .collect())
}

/// Largest deviation of [`contract_leading`] from the identity.
pub fn identity_defect(m: &[Vec<f64>]) -> f64 {
    let mut worst = 0.0f64;
    for (i, row) in m.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((v - target).abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::make_unit_delta_covariant;

    fn m(rows: &[&[f64]]) -> HyperMatrix {
        HyperMatrix::from_rows(rows, Variance::Covariant).unwrap()
    }

    #[test]
    fn rank2_inverse_and_adjugate() {
        let a = m(&[&[1., 2.], &[3., 4.]]);
        let inv = inverse_rank2(&a).unwrap();
        let expect = [-2.0, 1.0, 1.5, -0.5];
        for (x, y) in inv.data().iter().zip(expect) {
            assert!((x - y).abs() < 1e-12);
        }
        assert_eq!(adjugate_epsilon(&a).unwrap().data(), &[4., -3., -2., 1.]);
        assert!((det_epsilon(&a).unwrap() + 2.0).abs() < 1e-12);
        let id = m(&[&[1., 0.], &[0., 1.]]);
        assert_eq!(inverse_rank2(&id).unwrap().data(), &[1., 0., 0., 1.]);
    }

    #[test]
    fn singular_rejected() {
        let a = m(&[&[1., 2.], &[2., 4.]]);
        assert!(matches!(inverse_rank2(&a), Err(Error::Singular(_))));
        assert!(matches!(inverse_even_rank(&a), Err(Error::Singular(_))));
    }

    #[test]
    fn rank4_diagonal() {
        let mut a = HyperMatrix::zeros(4, 2, Variance::Covariant).unwrap();
        a.set(&[0, 0, 0, 0], 2.0);
        a.set(&[1, 1, 1, 1], 3.0);
        assert!((det_epsilon(&a).unwrap() - 6.0).abs() < 1e-12);
        let adj = adjugate_epsilon(&a).unwrap();
        assert_eq!(adj.get(&[0, 0, 0, 0]), 3.0);
        let inv = inverse_even_rank(&a).unwrap();
        assert!((inv.get(&[0, 0, 0, 0]) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn unit_is_self_inverse() {
        let u = make_unit_delta_covariant(4, 2).unwrap();
        let inv = inverse_even_rank(&u).unwrap();
        assert_eq!(inv.data(), u.data());
        assert_eq!(inv.variance(), Variance::Contravariant);
    }

    #[test]
    fn odd_rank_rejected() {
        let a = HyperMatrix::zeros(3, 2, Variance::Covariant).unwrap();
        assert!(matches!(adjugate_epsilon(&a), Err(Error::Unsupported(_))));
    }
}
