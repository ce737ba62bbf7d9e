//! Formal powers of the signed cycle census.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::combinatorics::{cycle_census, factorial};
use crate::error::{Error, Result};

/// Expands `(Σ_classes sign·count·label)^k` into unordered label multisets.
/// Keys list labels in census order (identity first).
pub fn power_product(n: usize, k: usize) -> Result<BTreeMap<Vec<String>, BigInt>> {
    if n == 0 || n > 6 || k == 0 || k > 5 {
        return Err(Error::Unsupported(format!(
            "power product needs 1 <= n <= 6 and 1 <= k <= 5 (got n={n}, k={k})"
        )));
    }
    let census = cycle_census(n);
    let weights: Vec<BigInt> = census
        .iter()
        .map(|c| BigInt::from(c.count.clone()) * c.sign)
        .collect();
    let labels: Vec<String> = census.iter().map(|c| c.label()).collect();
    let mut out = BTreeMap::new();
    let mut pick = vec![0usize; k];
    loop {
        // pick is non-decreasing: one multiset per iteration.
        let mut coef = BigInt::from(factorial(k));
        let mut run = 1usize;
        for i in 0..k {
            coef *= &weights[pick[i]];
            if i > 0 && pick[i] == pick[i - 1] {
                run += 1;
            } else {
                run = 1;
            }
            if i + 1 == k || pick[i + 1] != pick[i] {
                coef /= BigInt::from(factorial(run));
            }
        }
        let key: Vec<String> = pick.iter().map(|&i| labels[i].clone()).collect();
        out.insert(key, coef);

        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if pick[i] + 1 < census.len() {
                pick[i] += 1;
                for j in i + 1..k {
                    pick[j] = pick[i];
                }
                break;
            }
        }
    }
}

/// Canonical key for a label multiset given in any order.
pub fn normalize_key(n: usize, labels: &[&str]) -> Vec<String> {
    let order: Vec<String> = cycle_census(n).iter().map(|c| c.label()).collect();
    let mut idx: Vec<usize> = labels
        .iter()
        .map(|l| order.iter().position(|o| o == l).unwrap_or(usize::MAX))
        .collect();
    idx.sort_unstable();
    idx.iter()
        .map(|&i| order.get(i).cloned().unwrap_or_else(|| "?".into()))
        .collect()
}
