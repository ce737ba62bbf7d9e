//! Integer partitions in multiplicity form and their generating series.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// A partition of `n` written as multiplicities: `m[j-1]` parts of size `j`,
/// with `Σ j·m_j = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    multiplicities: Vec<usize>,
}

impl Partition {
    /// Returns `None` unless the multiplicities solve `Σ j·m_j = n`.
    pub fn from_multiplicities(multiplicities: Vec<usize>) -> Option<Self> {
        let n = multiplicities.len();
        let total: usize = multiplicities
            .iter()
            .enumerate()
            .map(|(j, m)| (j + 1) * m)
            .sum();
        (total == n).then_some(Partition { n, multiplicities })
    }

    /// Partition with the given part sizes (any order).
    pub fn from_parts(parts: &[usize]) -> Option<Self> {
        let n: usize = parts.iter().sum();
        let mut m = vec![0; n];
        for &p in parts {
            if p == 0 {
                return None;
            }
            m[p - 1] += 1;
        }
        Self::from_multiplicities(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Multiplicity of parts of size `j` (1-based).
    pub fn multiplicity(&self, j: usize) -> usize {
        self.multiplicities
            .get(j.wrapping_sub(1))
            .copied()
            .unwrap_or(0)
    }

    /// Part sizes, largest first.
    pub fn parts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for j in (1..=self.n).rev() {
            out.extend(std::iter::repeat_n(j, self.multiplicity(j)));
        }
        out
    }

    pub fn num_parts(&self) -> usize {
        self.multiplicities.iter().sum()
    }
}

/// Every partition of `n`, ordered by descending multiplicity vector
/// (all ones first, the single part last).
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut m = vec![0usize; n];
    fill(n, 0, n, &mut m, &mut out);
    out
}

fn fill(n: usize, j: usize, remaining: usize, m: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if j == n {
        if remaining == 0 {
            out.push(Partition {
                n,
                multiplicities: m.clone(),
            });
        }
        return;
    }
    let size = j + 1;
    for count in (0..=remaining / size).rev() {
        m[j] = count;
        fill(n, j + 1, remaining - count * size, m, out);
    }
    m[j] = 0;
}

/// Coefficients `a(0..=terms)` of `Π_{k≥1} (1 - x^k)^{-w(k)}`, via the Euler
/// transform `n·a(n) = Σ_{k=1}^{n} b(k)·a(n-k)`, `b(k) = Σ_{j | k} j·w(j)`.
fn euler_transform(terms: usize, weight: impl Fn(usize) -> BigUint) -> Vec<BigUint> {
    let w: Vec<BigUint> = (0..=terms)
        .map(|k| if k == 0 { BigUint::zero() } else { weight(k) })
        .collect();
    let mut b = vec![BigUint::zero(); terms + 1];
    for j in 1..=terms {
        let jw = &w[j] * BigUint::from(j);
        let mut k = j;
        while k <= terms {
            b[k] += &jw;
            k += j;
        }
    }
    let mut a = vec![BigUint::one()];
    for n in 1..=terms {
        let mut s = BigUint::zero();
        for k in 1..=n {
            s += &b[k] * &a[n - k];
        }
        a.push(s / BigUint::from(n));
    }
    a
}

/// `p(0), …, p(terms)`: coefficients of `Π (1 - x^k)^{-1}`.
pub fn partition_count_series(terms: usize) -> Vec<BigUint> {
    euler_transform(terms, |_| BigUint::one())
}

/// Coefficients of `Π (1 - x^k)^{-k!}`.
pub fn rank4_class_count_series(terms: usize) -> Vec<BigUint> {
    euler_transform(terms, factorial)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(v: Vec<BigUint>) -> Vec<u64> {
        v.into_iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn partitions_of_four() {
        let got: Vec<Vec<usize>> = partitions(4)
            .into_iter()
            .map(|p| p.multiplicities)
            .collect();
        assert_eq!(
            got,
            vec![
                vec![4, 0, 0, 0],
                vec![2, 1, 0, 0],
                vec![1, 0, 1, 0],
                vec![0, 2, 0, 0],
                vec![0, 0, 0, 1]
            ]
        );
        assert_eq!(partitions(1)[0].multiplicities(), &[1]);
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn series_values() {
        assert_eq!(
            small(partition_count_series(9)),
            vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
        );
        assert_eq!(small(partition_count_series(0)), vec![1]);
        assert_eq!(
            small(rank4_class_count_series(6)),
            vec![1, 1, 3, 9, 36, 168, 961]
        );
    }

    #[test]
    fn counts_agree() {
        let p = small(partition_count_series(12));
        for n in 1..=12 {
            assert_eq!(partitions(n).len() as u64, p[n]);
        }
    }

    #[test]
    fn parts_roundtrip() {
        let p = Partition::from_parts(&[3, 1, 1]).unwrap();
        assert_eq!(p.parts(), vec![3, 1, 1]);
        assert_eq!(p.num_parts(), 3);
        assert!(Partition::from_multiplicities(vec![1, 1]).is_none());
    }
}
