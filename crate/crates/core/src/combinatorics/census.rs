//! Cycle-type census of the symmetric group.

use num_bigint::BigUint;

use super::partitions::{factorial, partitions, Partition};
use crate::perm::Permutation;

/// One conjugacy class of `S_n`: its cycle type, size and sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleClass {
    pub partition: Partition,
    pub count: BigUint,
    pub sign: i32,
}

impl CycleClass {
    /// Short label: `0` for the identity, otherwise the cycle lengths less one
    /// with powers for repeats, e.g. `1`, `1^2`, `2`, `(2 1)`.
    pub fn label(&self) -> String {
        class_label(&self.partition)
    }
}

pub fn class_label(p: &Partition) -> String {
    let mut groups: Vec<String> = Vec::new();
    for j in (2..=p.n()).rev() {
        let m = p.multiplicity(j);
        if m == 1 {
            groups.push(format!("{}", j - 1));
        } else if m > 1 {
            groups.push(format!("{}^{m}", j - 1));
        }
    }
    match groups.len() {
        0 => "0".to_string(),
        1 => groups.pop().unwrap_or_default(),
        _ => format!("({})", groups.join(" ")),
    }
}

/// Label of the class containing `p`.
pub fn perm_label(p: &Permutation) -> String {
    let parts = p.cycle_type();
    class_label(&Partition::from_parts(&parts).expect("cycle type is a partition"))
}

/// Classes of `S_n` in the order of [`partitions`]: size
/// `n! / Π j^{m_j} m_j!`, sign `(-1)^{n - #cycles}`.
pub fn cycle_census(n: usize) -> Vec<CycleClass> {
    let nf = factorial(n);
    partitions(n)
        .into_iter()
        .map(|p| {
            let mut denom = BigUint::from(1u32);
            for j in 1..=n {
                let m = p.multiplicity(j);
                denom *= BigUint::from(j).pow(m as u32) * factorial(m);
            }
            let sign = if (n - p.num_parts()) % 2 == 0 { 1 } else { -1 };
            CycleClass {
                count: &nf / denom,
                partition: p,
                sign,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_perms;
    use num_bigint::BigInt;
    use std::collections::BTreeMap;

    fn signed(n: usize) -> BTreeMap<String, i64> {
        cycle_census(n)
            .into_iter()
            .map(|c| {
                let v: i64 = c.count.clone().try_into().unwrap();
                (c.label(), c.sign as i64 * v)
            })
            .collect()
    }

    #[test]
    fn small_censuses() {
        let three = signed(3);
        assert_eq!(
            three,
            [("0", 1), ("1", -3), ("2", 2)]
                .map(|(k, v)| (k.to_string(), v))
                .into()
        );
        let four = signed(4);
        let expect: BTreeMap<String, i64> = [("0", 1), ("1", -6), ("1^2", 3), ("2", 8), ("3", -6)]
            .map(|(k, v)| (k.to_string(), v))
            .into();
        assert_eq!(four, expect);
        assert_eq!(signed(1), [("0".to_string(), 1)].into());
    }

    #[test]
    fn census_matches_brute_force() {
        for n in 1..=6 {
            let mut brute: BTreeMap<String, i64> = BTreeMap::new();
            for p in all_perms(n) {
                *brute.entry(perm_label(&p)).or_default() += p.sign() as i64;
            }
            assert_eq!(signed(n), brute, "n = {n}");
        }
    }

    #[test]
    fn census_sums() {
        for n in 2..=8 {
            let c = cycle_census(n);
            let total: BigUint = c.iter().map(|x| x.count.clone()).sum();
            assert_eq!(total, factorial(n));
            let signed_total: BigInt = c
                .iter()
                .map(|x| BigInt::from(x.count.clone()) * x.sign)
                .sum();
            assert_eq!(signed_total, BigInt::from(0));
        }
    }
}
