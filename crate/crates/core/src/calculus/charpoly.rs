//! Rank-2 characteristic polynomial, Cayley–Hamilton residual and Newton traces.

use nalgebra::DMatrix;

use crate::engine::discriminant::{discriminant_from_traces, discriminant_oracle};
use crate::error::{invalid, Error, Result};
use crate::tensor::{make_unit_delta, HyperMatrix, Variance};

/// `P(λ) = Σ_k (-1)^k c_k λ^{d-k}`, `c₀ = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacteristicPolynomial {
    coefficients: Vec<f64>,
}

impl CharacteristicPolynomial {
    pub fn from_coefficients(coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.first() != Some(&1.0) {
            return Err(invalid("leading coefficient c_0 must be 1"));
        }
        Ok(CharacteristicPolynomial { coefficients })
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `c₀, …, c_d`.
    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Horner evaluation.
    pub fn eval(&self, lambda: f64) -> f64 {
        self.coefficients
            .iter()
            .enumerate()
            .fold(0.0, |acc, (k, c)| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                acc * lambda + sign * c
            })
    }
}

/// Discriminants `c_1..c_d` of a matrix; traces for `d ≤ 8`, oracle beyond.
pub fn rank2_discriminants(a: &HyperMatrix) -> Result<Vec<f64>> {
    a.expect_rank(2)?;
    let d = a.dim();
    let delta = make_unit_delta(2, d)?;
    (1..=d)
        .map(|s| {
            if s <= 8 {
                discriminant_from_traces(a, s)
            } else {
                discriminant_oracle(a, &delta, s)
            }
        })
        .collect()
}

pub fn char_poly(a: &HyperMatrix) -> Result<CharacteristicPolynomial> {
    let mut c = vec![1.0];
    c.extend(rank2_discriminants(a)?);
    CharacteristicPolynomial::from_coefficients(c)
}

/// `Σ_{k=0}^{d} (-1)^k c_k a^{d-k}`; identically zero.
pub fn ch_residual_rank2(a: &HyperMatrix) -> Result<HyperMatrix> {
    let p = char_poly(a)?;
    let m = a.to_matrix()?;
    let d = a.dim();
    // Horner in the matrix argument.
    let mut acc = DMatrix::<f64>::zeros(d, d);
    for (k, c) in p.coefficients().iter().enumerate() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc = &acc * &m + DMatrix::identity(d, d) * (sign * c);
    }
    HyperMatrix::from_matrix(&acc, a.variance())
}

/// `t_s` (rank 2) or `T_s` (rank 4) from the discriminants.
#[derive(Debug, Clone, PartialEq)]
pub struct NewtonTraces {
    pub rank: usize,
    /// `values[s-1]` is the order-`s` trace.
    pub values: Vec<f64>,
}

/// Newton's identities for `s ≤ 4`; `cs[k-1]` is `c_k`.
pub fn newton_traces(cs: &[f64], rank: usize) -> Result<NewtonTraces> {
    if cs.len() > 4 {
        return Err(Error::Unsupported(format!(
            "traces are tabulated up to order 4, got {}",
            cs.len()
        )));
    }
    let c = |k: usize| cs[k - 1];
    let mut values = Vec::with_capacity(cs.len());
    for s in 1..=cs.len() {
        values.push(match s {
            1 => c(1),
            2 => 0.5 * c(1).powi(2) - c(2),
            3 => c(1).powi(3) / 3.0 - c(1) * c(2) + c(3),
            _ => {
                0.25 * c(1).powi(4) - c(1).powi(2) * c(2) + c(1) * c(3) + 0.5 * c(2).powi(2) - c(4)
            }
        });
    }
    Ok(NewtonTraces { rank, values })
}

/// `a - λI` for the pointwise characteristic-polynomial check.
pub fn shifted(a: &HyperMatrix, lambda: f64) -> Result<HyperMatrix> {
    let id = make_unit_delta(2, a.dim())?.with_variance(Variance::Covariant);
    a.add_scaled(-lambda, &id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::trace_power;

    fn m(rows: &[&[f64]]) -> HyperMatrix {
        HyperMatrix::from_rows(rows, Variance::Covariant).unwrap()
    }

    #[test]
    fn two_by_two() {
        let p = char_poly(&m(&[&[1., 2.], &[3., 4.]])).unwrap();
        assert_eq!(p.degree(), 2);
        assert!((p.coefficients()[1] - 5.0).abs() < 1e-12);
        assert!((p.coefficients()[2] + 2.0).abs() < 1e-12);
        assert!((p.eval(1.0) - (1.0 - 5.0 - 2.0)).abs() < 1e-12);
    }

    #[test]
    fn nilpotent_and_scalar_residuals() {
        let r = ch_residual_rank2(&m(&[&[0., 1.], &[0., 0.]])).unwrap();
        assert!(r.data().iter().all(|&x| x == 0.0));
        let r1 = ch_residual_rank2(&m(&[&[3.5]])).unwrap();
        assert_eq!(r1.data(), &[0.0]);
    }

    #[test]
    fn newton_matches_traces() {
        let a = m(&[&[1., 2., 0.5], &[-1., 0.3, 2.], &[0.7, 0.1, -1.2]]);
        let mut cs = rank2_discriminants(&a).unwrap();
        cs.push(0.0);
        let t = newton_traces(&cs, 2).unwrap();
        for s in 1..=4 {
            let expect = trace_power(&a, s as u32).unwrap() / s as f64;
            assert!((t.values[s - 1] - expect).abs() < 1e-10 * expect.abs().max(1.0));
        }
        assert!(newton_traces(&[0.0; 5], 2).is_err());
    }
}
