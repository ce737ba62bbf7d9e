use crate::error::{Error, Result};

/// Default ceiling on enumerated permutation tuples and semi-magic squares.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Resource guards for the exhaustive enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of permutation tuples, `(n!)^(r-1)`, a single expansion may visit.
    pub tuple_cap: u64,
    /// Maximum number of semi-magic squares an enumeration may materialize.
    pub square_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            tuple_cap: DEFAULT_CAP,
            square_cap: DEFAULT_CAP,
        }
    }
}

impl Limits {
    pub fn with_tuple_cap(tuple_cap: u64) -> Self {
        Limits {
            tuple_cap,
            ..Limits::default()
        }
    }

    pub(crate) fn check_tuples(&self, required: u128) -> Result<()> {
        if required > self.tuple_cap as u128 {
            return Err(Error::CapExceeded {
                what: "permutation tuples",
                required,
                cap: self.tuple_cap,
            });
        }
        Ok(())
    }

    pub(crate) fn check_squares(&self, required: u128) -> Result<()> {
        if required > self.square_cap as u128 {
            return Err(Error::CapExceeded {
                what: "semi-magic squares",
                required,
                cap: self.square_cap,
            });
        }
        Ok(())
    }
}

/// `(n!)^(r-1)` without overflow (saturates at `u128::MAX`).
pub fn tuple_count(rank: usize, n: usize) -> u128 {
    let fact = (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
    let Some(fact) = fact else { return u128::MAX };
    let mut total: u128 = 1;
    for _ in 1..rank {
        match total.checked_mul(fact) {
            Some(t) => total = t,
            None => return u128::MAX,
        }
    }
    total
}
