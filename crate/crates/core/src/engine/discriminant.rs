//! Numerical evaluation of discriminants.

use crate::combinatorics::{partitions, SquareClass};
use crate::contraction::{contract_tuple, signed_sum, Target};
use crate::error::{invalid, Error, Result};
use crate::limits::Limits;
use crate::tensor::{is_unit_delta, make_unit_delta, HyperMatrix, Variance};

use super::expansion::{cached_expansion, SUPPORTED_RANKS};

/// Relative tolerance for treating an input as symmetric.
pub const SYMMETRY_TOL: f64 = 1e-12;

pub(crate) fn factorial_f64(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn check_order(s: usize) -> Result<()> {
    if s == 0 {
        return Err(invalid("discriminant order must be at least 1"));
    }
    Ok(())
}

/// `(1/s!) Σ_tuples sign · contract_tuple`, with no class grouping. Valid for
/// any `A`, symmetric or not, and any `Delta`.
pub fn discriminant_oracle(a: &HyperMatrix, delta: &HyperMatrix, s: usize) -> Result<f64> {
    discriminant_oracle_with(a, delta, s, &Limits::default())
}

pub fn discriminant_oracle_with(
    a: &HyperMatrix,
    delta: &HyperMatrix,
    s: usize,
    limits: &Limits,
) -> Result<f64> {
    check_order(s)?;
    Ok(signed_sum(a, delta, s, Target::Value, limits)?[0] / factorial_f64(s))
}

/// Value of one class invariant: the unsigned contraction of its
/// representative tuple. Only meaningful for symmetric `A`.
pub fn evaluate_class(a: &HyperMatrix, delta: &HyperMatrix, cls: &SquareClass) -> Result<f64> {
    let dev = a.symmetry_deviation();
    if dev > SYMMETRY_TOL * a.scale().max(1.0) {
        return Err(Error::NotSymmetric { deviation: dev });
    }
    let t = cls
        .representative_tuple
        .as_ref()
        .ok_or_else(|| invalid("class has no representative tuple"))?;
    contract_tuple(a, delta, t)
}

/// `c_s(A)` against the diagonal unit tensor.
pub fn discriminant(a: &HyperMatrix, s: usize) -> Result<f64> {
    discriminant_with(a, s, &Limits::default())
}

/// Symmetric input with a supported rank uses the class expansion (each class
/// contracted once); everything else uses the oracle. Both agree on symmetric
/// input.
pub fn discriminant_with(a: &HyperMatrix, s: usize, limits: &Limits) -> Result<f64> {
    check_order(s)?;
    a.expect_variance(Variance::Covariant)?;
    let delta = make_unit_delta(a.rank(), a.dim())?;
    let symmetric = a.symmetry_deviation() <= SYMMETRY_TOL * a.scale().max(1.0);
    if symmetric && SUPPORTED_RANKS.contains(&a.rank()) && s <= 5 {
        let exp = cached_expansion(a.rank(), s, limits)?;
        let mut total = 0.0;
        for (sq, c) in exp.nonzero_terms() {
            let t = &exp.representatives[sq];
            total += c as f64 * contract_tuple(a, &delta, t)?;
        }
        Ok(total / exp.prefactor_denominator as f64)
    } else {
        discriminant_oracle_with(a, &delta, s, limits)
    }
}

/// `c_s(A, Delta)` for an arbitrary unit tensor (oracle path unless `Delta`
/// is the diagonal unit).
pub fn discriminant_general(
    a: &HyperMatrix,
    delta: &HyperMatrix,
    s: usize,
    limits: &Limits,
) -> Result<f64> {
    if is_unit_delta(delta) {
        discriminant_with(a, s, limits)
    } else {
        discriminant_oracle_with(a, delta, s, limits)
    }
}

/// `trace(a^s)`; `s = 0` gives `d`.
pub fn trace_power(a: &HyperMatrix, s: u32) -> Result<f64> {
    let m = a.to_matrix()?;
    let mut p = nalgebra::DMatrix::<f64>::identity(a.dim(), a.dim());
    for _ in 0..s {
        p = &p * &m;
    }
    Ok(p.trace())
}

/// `c_s = Σ_{partitions} Π_j (-1)^{(j-1)m_j} ⟨a^j⟩^{m_j} / (j^{m_j} m_j!)`.
pub fn discriminant_from_traces(a: &HyperMatrix, s: usize) -> Result<f64> {
    a.expect_rank(2)?;
    if s == 0 || s > 8 {
        return Err(invalid(format!("order {s} outside 1..=8")));
    }
    let traces: Vec<f64> = (0..=s as u32)
        .map(|j| trace_power(a, j))
        .collect::<Result<_>>()?;
    let mut total = 0.0;
    for p in partitions(s) {
        let mut term = 1.0;
        for j in 1..=s {
            let m = p.multiplicity(j);
            if m == 0 {
                continue;
            }
            let sign = if (j - 1) * m % 2 == 0 { 1.0 } else { -1.0 };
            term *=
                sign * traces[j].powi(m as i32) / ((j as f64).powi(m as i32) * factorial_f64(m));
        }
        total += term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_classes;
    use crate::tensor::symmetrize;

    fn m2(rows: &[&[f64]]) -> HyperMatrix {
        HyperMatrix::from_rows(rows, Variance::Covariant).unwrap()
    }

    #[test]
    fn rank2_examples() {
        let a = m2(&[&[1., 2.], &[3., 4.]]);
        assert!((discriminant(&a, 2).unwrap() + 2.0).abs() < 1e-12);
        assert!((discriminant(&a, 1).unwrap() - 5.0).abs() < 1e-12);
        let d = m2(&[&[2., 0.], &[0., 3.]]);
        let delta = make_unit_delta(2, 2).unwrap();
        assert!((discriminant_oracle(&d, &delta, 2).unwrap() - 6.0).abs() < 1e-12);
        assert!((discriminant_from_traces(&a, 2).unwrap() + 2.0).abs() < 1e-12);
    }

    #[test]
    fn rank4_diagonal() {
        let mut a = HyperMatrix::zeros(4, 2, Variance::Covariant).unwrap();
        a.set(&[0, 0, 0, 0], 2.0);
        a.set(&[1, 1, 1, 1], 3.0);
        assert!((discriminant(&a, 2).unwrap() - 6.0).abs() < 1e-12);
        assert!((discriminant(&a, 1).unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn rank4_symmetric_example() {
        // G_1111 = G_2222 = 1 and every arrangement of 1122 equal to 1.
        let g = HyperMatrix::from_fn(4, 2, Variance::Covariant, |ix| {
            let ones = ix.iter().filter(|&&i| i == 1).count();
            if ones == 1 || ones == 3 {
                0.0
            } else {
                1.0
            }
        })
        .unwrap();
        let delta = make_unit_delta(4, 2).unwrap();
        assert!((discriminant_oracle(&g, &delta, 2).unwrap() - 4.0).abs() < 1e-12);
        assert!((discriminant(&g, 2).unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn rank3_order2_formula() {
        let a = symmetrize(
            &HyperMatrix::from_fn(3, 2, Variance::Covariant, |ix| {
                [0.3, -1.1, 0.7, 2.0, 1.3, -0.4, 0.9, 1.7][ix[0] * 4 + ix[1] * 2 + ix[2]]
            })
            .unwrap(),
        );
        let g = |i, j, k| a.get(&[i, j, k]);
        let expect = g(0, 0, 0) * g(1, 1, 1)
            - (g(0, 0, 1) * g(1, 1, 0) + g(0, 1, 0) * g(1, 0, 1) + g(1, 0, 0) * g(0, 1, 1)) / 3.0;
        let delta = make_unit_delta(3, 2).unwrap();
        assert!((discriminant_oracle(&a, &delta, 2).unwrap() - expect).abs() < 1e-12);
    }

    #[test]
    fn class_values_rank2() {
        let a = m2(&[&[1.0, 0.5], &[0.5, -2.0]]);
        let delta = make_unit_delta(2, 2).unwrap();
        let classes = enumerate_classes(2, 2).unwrap();
        // canonical order: [[0,2],[2,0]] then [[1,1],[1,1]]
        let tr = -1.0f64;
        let tr2 = 1.0 + 0.5 + 4.0;
        assert!((evaluate_class(&a, &delta, &classes[0]).unwrap() - tr * tr).abs() < 1e-12);
        assert!((evaluate_class(&a, &delta, &classes[1]).unwrap() - tr2).abs() < 1e-12);
        let ns = m2(&[&[1.0, 0.5], &[0.0, -2.0]]);
        assert!(matches!(
            evaluate_class(&ns, &delta, &classes[0]),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn trace_powers() {
        let a = m2(&[&[2., 0.], &[0., 3.]]);
        assert_eq!(trace_power(&a, 2).unwrap(), 13.0);
        let nil = m2(&[&[0., 1.], &[0., 0.]]);
        assert_eq!(trace_power(&nil, 2).unwrap(), 0.0);
        let z = HyperMatrix::zeros(2, 4, Variance::Covariant).unwrap();
        assert_eq!(trace_power(&z, 0).unwrap(), 4.0);
    }
}
