//! Closed forms for small cases: 2×…×2 determinants at ranks 3, 4 and 6,
//! the third-rank inverse, Cayley's hyperdeterminant and odd-rank vanishing.

use crate::engine::discriminant::{factorial_f64, SYMMETRY_TOL};
use crate::error::{shape, Error, Result};
use crate::perm::all_perms;
use crate::tensor::{HyperMatrix, Variance};

/// A polynomial in the flat entries of a tensor: `Σ coef · Π data[offset]`.
struct Poly(Vec<(f64, Vec<usize>)>);

impl Poly {
    fn eval(&self, data: &[f64]) -> f64 {
        self.0
            .iter()
            .map(|(c, m)| c * m.iter().map(|&o| data[o]).product::<f64>())
            .sum()
    }

    fn grad(&self, data: &[f64]) -> Vec<f64> {
        let mut g = vec![0.0; data.len()];
        for (c, m) in &self.0 {
            for skip in 0..m.len() {
                let rest: f64 = m
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &o)| data[o])
                    .product();
                g[m[skip]] += c * rest;
            }
        }
        g
    }
}

/// Flat offset of a binary index written as digits, e.g. `o("011")`.
fn o(bits: &str) -> usize {
    bits.bytes().fold(0, |acc, b| acc * 2 + (b - b'0') as usize)
}

fn mono(coef: f64, bits: &[&str]) -> (f64, Vec<usize>) {
    (coef, bits.iter().map(|b| o(b)).collect())
}

fn expect_shape(a: &HyperMatrix, rank: usize, dim: usize) -> Result<()> {
    if a.rank() != rank || a.dim() != dim {
        return Err(shape(format!(
            "expected rank {rank}, dim {dim}; got rank {}, dim {}",
            a.rank(),
            a.dim()
        )));
    }
    Ok(())
}

fn expect_symmetric(a: &HyperMatrix) -> Result<()> {
    let dev = a.symmetry_deviation();
    if dev > SYMMETRY_TOL * a.scale().max(1.0) {
        return Err(Error::NotSymmetric { deviation: dev });
    }
    Ok(())
}

fn det4_poly() -> Poly {
    Poly(vec![
        mono(1.0, &["0000", "1111"]),
        mono(-1.0, &["0001", "1110"]),
        mono(-1.0, &["0010", "1101"]),
        mono(-1.0, &["0100", "1011"]),
        mono(-1.0, &["1000", "0111"]),
        mono(1.0, &["0011", "1100"]),
        mono(1.0, &["0101", "1010"]),
        mono(1.0, &["1001", "0110"]),
    ])
}

/// Determinant of a rank-4, `d = 2` hypermatrix as an explicit 8-term sum.
pub fn det_rank4_d2(a: &HyperMatrix) -> Result<f64> {
    expect_shape(a, 4, 2)?;
    Ok(det4_poly().eval(a.data()))
}

/// `G₀₀₀₀G₁₁₁₁ - 4G₀₀₀₁G₀₁₁₁ + 3G₀₀₁₁²` for symmetric `G`.
pub fn c2_sym_rank4_d2(g: &HyperMatrix) -> Result<f64> {
    expect_shape(g, 4, 2)?;
    expect_symmetric(g)?;
    let e = |b: &str| g.data()[o(b)];
    Ok(e("0000") * e("1111") - 4.0 * e("0001") * e("0111") + 3.0 * e("0011").powi(2))
}

fn c2_rank3_poly() -> Poly {
    let third = -1.0 / 3.0;
    Poly(vec![
        mono(1.0, &["000", "111"]),
        mono(third, &["001", "110"]),
        mono(third, &["010", "101"]),
        mono(third, &["100", "011"]),
    ])
}

/// `(C₁, C₂)` of a rank-3, `d = 2` array, with `C₂` in its symmetric form
/// `a₀₀₀a₁₁₁ - (a₀₀₁a₁₁₀ + a₀₁₀a₁₀₁ + a₁₀₀a₀₁₁)/3`.
pub fn thirdrank_discriminants_d2(a: &HyperMatrix) -> Result<(f64, f64)> {
    expect_shape(a, 3, 2)?;
    let d = a.data();
    Ok((d[o("000")] + d[o("111")], c2_rank3_poly().eval(d)))
}

/// Candidate inverse `a^{ijk} = (∂C₂/∂a_{ijk}) / C₂` and its defect
/// `max_{ij} |a^{ik₁k₂} a_{jk₁k₂} - δ_ij|`, which is generically nonzero.
pub fn thirdrank_pseudo_inverse(a: &HyperMatrix) -> Result<(HyperMatrix, f64)> {
    expect_shape(a, 3, 2)?;
    expect_symmetric(a)?;
    let p = c2_rank3_poly();
    let c2 = p.eval(a.data());
    if c2.abs() <= 1e-12 * a.scale().powi(2) || a.scale() == 0.0 {
        return Err(Error::Singular(format!("C2 = {c2:e}")));
    }
    let g: Vec<f64> = p.grad(a.data()).into_iter().map(|x| x / c2).collect();
    let inv = HyperMatrix::new(3, 2, Variance::Contravariant, g)?;
    let defect = crate::calculus::identity_defect(&crate::calculus::contract_leading(&inv, a)?);
    Ok((inv, defect))
}

/// `a = [a₀₀₀²a₁₁₁² - 6a₀₀₀a₀₀₁a₀₁₁a₁₁₁ + 4a₀₀₀a₀₁₁³ + 4a₁₁₁a₀₀₁³ - 3a₀₀₁²a₀₁₁²] / 18`
/// for symmetric input.
pub fn thirdrank_det_d2(a: &HyperMatrix) -> Result<f64> {
    expect_shape(a, 3, 2)?;
    expect_symmetric(a)?;
    let d = a.data();
    let (x0, x1, y0, y1) = (d[o("000")], d[o("001")], d[o("011")], d[o("111")]);
    Ok((x0 * x0 * y1 * y1 - 6.0 * x0 * x1 * y0 * y1
        + 4.0 * x0 * y0.powi(3)
        + 4.0 * y1 * x1.powi(3)
        - 3.0 * x1 * x1 * y0 * y0)
        / 18.0)
}

fn cayley_poly() -> Poly {
    Poly(vec![
        mono(1.0, &["000", "000", "111", "111"]),
        mono(1.0, &["001", "001", "110", "110"]),
        mono(1.0, &["010", "010", "101", "101"]),
        mono(1.0, &["100", "100", "011", "011"]),
        mono(-2.0, &["000", "111", "001", "110"]),
        mono(-2.0, &["000", "111", "010", "101"]),
        mono(-2.0, &["000", "111", "100", "011"]),
        mono(-2.0, &["001", "010", "101", "110"]),
        mono(-2.0, &["001", "011", "110", "100"]),
        mono(-2.0, &["010", "011", "101", "100"]),
        mono(4.0, &["000", "011", "101", "110"]),
        mono(4.0, &["001", "010", "100", "111"]),
    ])
}

/// Cayley's hyperdeterminant of a 2×2×2 array (any symmetry).
pub fn cayley_hyperdet(a: &HyperMatrix) -> Result<f64> {
    expect_shape(a, 3, 2)?;
    Ok(cayley_poly().eval(a.data()))
}

/// True inverse of a symmetric 2×2×2 array:
/// `a^{ijk} = (∂a/∂a_{ijk}) / (2a)`, with the gradient taken over the full
/// array through `18a = C`. Satisfies `a^{ik₁k₂} a_{jk₁k₂} = δ^i_j`.
pub fn thirdrank_inverse_d2(a: &HyperMatrix) -> Result<HyperMatrix> {
    expect_shape(a, 3, 2)?;
    expect_symmetric(a)?;
    let p = cayley_poly();
    let c = p.eval(a.data());
    if c.abs() <= 1e-12 * a.scale().powi(4) || a.scale() == 0.0 {
        return Err(Error::Singular(format!("hyperdeterminant {c:e}")));
    }
    let g = p
        .grad(a.data())
        .into_iter()
        .map(|x| x / (2.0 * c))
        .collect();
    HyperMatrix::new(3, 2, Variance::Contravariant, g)
}

/// `g_{ij} = a_{ik₁k₂} a_{jl₁l₂} ε^{k₁l₁} ε^{k₂l₂}` and `det g`.
pub fn g_matrix(a: &HyperMatrix) -> Result<(HyperMatrix, f64)> {
    expect_shape(a, 3, 2)?;
    let eps = |k: usize, l: usize| match (k, l) {
        (0, 1) => 1.0,
        (1, 0) => -1.0,
        _ => 0.0,
    };
    let g = HyperMatrix::from_fn(2, 2, Variance::Covariant, |ix| {
        let mut acc = 0.0;
        for k1 in 0..2 {
            for k2 in 0..2 {
                let (l1, l2) = (1 - k1, 1 - k2);
                acc +=
                    a.get(&[ix[0], k1, k2]) * a.get(&[ix[1], l1, l2]) * eps(k1, l1) * eps(k2, l2);
            }
        }
        acc
    })?;
    let det = g.get(&[0, 0]) * g.get(&[1, 1]) - g.get(&[0, 1]) * g.get(&[1, 0]);
    Ok((g, det))
}

/// Rank-6 array from two copies of a 2×2×2 array, slots `i₁j₁k₁i₂j₂k₂`,
/// averaged over four pairings of the copies.
pub fn sixth_rank_embed(a: &HyperMatrix) -> Result<HyperMatrix> {
    expect_shape(a, 3, 2)?;
    let v = |i, j, k| a.get(&[i, j, k]);
    HyperMatrix::from_fn(6, 2, Variance::Covariant, |x| {
        let (i1, j1, k1, i2, j2, k2) = (x[0], x[1], x[2], x[3], x[4], x[5]);
        0.25 * (v(i1, j1, k1) * v(i2, j2, k2)
            + v(i1, j1, k2) * v(i2, j2, k1)
            + v(i1, j2, k1) * v(i2, j1, k2)
            + v(i2, j1, k1) * v(i1, j2, k2))
    })
}

/// `(1/2) ε^{i₁j₁}⋯ε^{i₆j₆} A_{i₁…i₆} A_{j₁…j₆}`.
pub fn sixth_rank_det_d2(a6: &HyperMatrix) -> Result<f64> {
    expect_shape(a6, 6, 2)?;
    let d = a6.data();
    let total: f64 = (0..64usize)
        .map(|i| {
            let sign = if i.count_ones() % 2 == 0 { 1.0 } else { -1.0 };
            sign * d[i] * d[63 - i]
        })
        .sum();
    Ok(0.5 * total)
}

/// `(1/d!) ε⋯ε A⋯A` with `r` epsilons and `d` copies, summed over every
/// permutation in every slot. Vanishes identically for odd rank; exists as a
/// numerical probe.
pub fn odd_rank_epsilon_det(a: &HyperMatrix) -> Result<f64> {
    if a.rank() % 2 == 0 {
        return Err(Error::Unsupported(format!(
            "probe is for odd rank, got {}",
            a.rank()
        )));
    }
    let (r, d) = (a.rank(), a.dim());
    let perms = all_perms(d);
    let mut digits = vec![0usize; r];
    let mut idx = vec![0usize; r];
    let mut total = 0.0;
    'outer: loop {
        let mut term: f64 = digits.iter().map(|&p| perms[p].sign() as f64).product();
        for m in 0..d {
            for (k, &p) in digits.iter().enumerate() {
                idx[k] = perms[p].apply(m);
            }
            term *= a.get(&idx);
        }
        total += term;
        for slot in digits.iter_mut().rev() {
            *slot += 1;
            if *slot < perms.len() {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    Ok(total / factorial_f64(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits3(vals: &[(&str, f64)]) -> HyperMatrix {
        let mut a = HyperMatrix::zeros(3, 2, Variance::Covariant).unwrap();
        for (b, v) in vals {
            let ix: Vec<usize> = b.bytes().map(|c| (c - b'0') as usize).collect();
            a.set(&ix, *v);
        }
        a
    }

    fn sym3(x0: f64, x1: f64, y0: f64, y1: f64) -> HyperMatrix {
        bits3(&[
            ("000", x0),
            ("001", x1),
            ("010", x1),
            ("100", x1),
            ("011", y0),
            ("101", y0),
            ("110", y0),
            ("111", y1),
        ])
    }

    #[test]
    fn rank4_examples() {
        let mut a = HyperMatrix::zeros(4, 2, Variance::Covariant).unwrap();
        a.set(&[0, 0, 0, 0], 2.0);
        a.set(&[1, 1, 1, 1], 3.0);
        assert_eq!(det_rank4_d2(&a).unwrap(), 6.0);
        let mut b = HyperMatrix::zeros(4, 2, Variance::Covariant).unwrap();
        b.set(&[0, 0, 1, 1], 1.0);
        b.set(&[1, 1, 0, 0], 1.0);
        assert_eq!(det_rank4_d2(&b).unwrap(), 1.0);
        assert!(det_rank4_d2(&HyperMatrix::zeros(4, 3, Variance::Covariant).unwrap()).is_err());
    }

    #[test]
    fn symmetric_rank4_c2() {
        let g = HyperMatrix::from_fn(4, 2, Variance::Covariant, |ix| {
            let ones = ix.iter().filter(|&&i| i == 1).count();
            if ones == 0 || ones == 4 {
                1.0
            } else {
                0.0
            }
        })
        .unwrap();
        assert_eq!(c2_sym_rank4_d2(&g).unwrap(), 1.0);
        let g2 = HyperMatrix::from_fn(4, 2, Variance::Covariant, |ix| {
            let ones = ix.iter().filter(|&&i| i == 1).count();
            if ones % 2 == 0 {
                1.0
            } else {
                0.0
            }
        })
        .unwrap();
        assert_eq!(c2_sym_rank4_d2(&g2).unwrap(), 4.0);
        assert_eq!(det_rank4_d2(&g2).unwrap(), 4.0);
        let mut ns = g.clone();
        ns.set(&[0, 0, 0, 1], 1.0);
        assert!(matches!(
            c2_sym_rank4_d2(&ns),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn third_rank_examples() {
        let diag = sym3(1.0, 0.0, 0.0, 1.0);
        assert_eq!(thirdrank_discriminants_d2(&diag).unwrap(), (2.0, 1.0));
        assert!((thirdrank_det_d2(&diag).unwrap() - 1.0 / 18.0).abs() < 1e-15);
        assert!((thirdrank_det_d2(&sym3(0.0, 1.0, 1.0, 0.0)).unwrap() + 1.0 / 6.0).abs() < 1e-15);
        let inv = thirdrank_inverse_d2(&diag).unwrap();
        assert_eq!(inv.data(), &[1., 0., 0., 0., 0., 0., 0., 1.]);
        assert_eq!(cayley_hyperdet(&diag).unwrap(), 1.0);
        assert_eq!(
            cayley_hyperdet(&bits3(&[("001", 1.0), ("110", 1.0)])).unwrap(),
            1.0
        );
        let (g, det) = g_matrix(&diag).unwrap();
        assert_eq!(g.data(), &[0., 1., 1., 0.]);
        assert_eq!(det, -1.0);
    }

    #[test]
    fn pseudo_inverse_entries() {
        let a = sym3(0.9, -0.4, 0.3, 1.3);
        let (c1, c2) = thirdrank_discriminants_d2(&a).unwrap();
        assert!((c1 - 2.2).abs() < 1e-15);
        let (inv, defect) = thirdrank_pseudo_inverse(&a).unwrap();
        assert!((inv.get(&[0, 0, 0]) - 1.3 / c2).abs() < 1e-14);
        assert!((inv.get(&[0, 0, 1]) + 0.3 / (3.0 * c2)).abs() < 1e-14);
        let first: f64 = (0..4).map(|k| inv.data()[k] * a.data()[k]).sum();
        assert!((first - 1.0).abs() < 1e-12);
        assert!(defect > 1e-6);
    }

    #[test]
    fn embed_entries() {
        let a = sym3(0.9, -0.4, 0.3, 1.3);
        let e = sixth_rank_embed(&a).unwrap();
        assert!((e.get(&[0; 6]) - 0.81).abs() < 1e-15);
        let expect = 0.5 * (0.9 * 0.3 + (-0.4) * (-0.4));
        assert!((e.get(&[0, 0, 0, 0, 1, 1]) - expect).abs() < 1e-15);
        assert_eq!(
            sixth_rank_det_d2(&HyperMatrix::zeros(6, 2, Variance::Covariant).unwrap()).unwrap(),
            0.0
        );
    }

    #[test]
    fn odd_rank_probe() {
        assert_eq!(
            odd_rank_epsilon_det(&HyperMatrix::zeros(3, 2, Variance::Covariant).unwrap()).unwrap(),
            0.0
        );
        let a = sym3(0.9, -0.4, 0.3, 1.3);
        assert!(odd_rank_epsilon_det(&a).unwrap().abs() < 1e-12);
        assert!(
            odd_rank_epsilon_det(&HyperMatrix::zeros(4, 2, Variance::Covariant).unwrap()).is_err()
        );
    }
}
