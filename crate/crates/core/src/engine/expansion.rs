//! Aggregation of signed permutation tuples into semi-magic-square classes.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::combinatorics::{canonicalize, tuple_to_square, SemiMagicSquare};
use crate::error::{Error, Result};
use crate::limits::{tuple_count, Limits};
use crate::perm::{all_perms, PermutationTuple, TupleSpace};

/// Ranks the expansion engine accepts.
pub const SUPPORTED_RANKS: [usize; 4] = [2, 3, 4, 6];

/// `c_n = (1/n!) Σ_classes coefficient · (class invariant)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantExpansion {
    pub rank: usize,
    pub order: usize,
    /// `n!`.
    pub prefactor_denominator: u64,
    /// Signed tuple count per canonical square, zero entries included.
    pub terms: BTreeMap<SemiMagicSquare, i64>,
    /// First tuple (in enumeration order) landing in each class.
    pub representatives: BTreeMap<SemiMagicSquare, PermutationTuple>,
}

impl InvariantExpansion {
    /// Terms with nonzero coefficient, in canonical order.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (&SemiMagicSquare, i64)> {
        self.terms
            .iter()
            .filter(|(_, &c)| c != 0)
            .map(|(s, &c)| (s, c))
    }

    pub fn coefficient(&self, canonical: &SemiMagicSquare) -> i64 {
        self.terms.get(canonical).copied().unwrap_or(0)
    }

    /// `Σ coefficient`, equal to `Σ_tuples sign`.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }
}

/// Number of distinct squares in the row × column orbit of `sq`.
pub fn orbit_size(sq: &SemiMagicSquare) -> u64 {
    let perms = all_perms(sq.order());
    let mut seen = std::collections::HashSet::new();
    for rp in &perms {
        for cp in &perms {
            seen.insert(sq.permuted(rp, cp));
        }
    }
    seen.len() as u64
}

pub fn build_expansion(rank: usize, n: usize) -> Result<InvariantExpansion> {
    build_expansion_with(rank, n, &Limits::default())
}

/// Enumerates all `(n!)^{rank-1}` tuples and sums their signs per class.
pub fn build_expansion_with(rank: usize, n: usize, limits: &Limits) -> Result<InvariantExpansion> {
    if !SUPPORTED_RANKS.contains(&rank) {
        return Err(Error::Unsupported(format!(
            "rank {rank} (supported: 2, 3, 4, 6)"
        )));
    }
    if n == 0 || n > 5 {
        return Err(Error::Unsupported(format!("order {n} (supported: 1 to 5)")));
    }
    limits.check_tuples(tuple_count(rank, n))?;
    let space = TupleSpace::new(rank, n)?;
    let per_first = tuple_count(rank, n) as u64 / space.shard_count() as u64;

    // Raw square -> (signed count, first tuple index), one map per shard.
    let shards: Vec<HashMap<Vec<u32>, (i64, u64)>> = (0..space.shard_count())
        .into_par_iter()
        .map(|first| {
            let mut local: HashMap<Vec<u32>, (i64, u64)> = HashMap::new();
            let mut index = first as u64 * per_first;
            space.for_each_in(first..first + 1, |digits, sign| {
                let sq = tuple_to_square(&space.tuple(digits));
                let e = local.entry(sq.entries().to_vec()).or_insert((0, index));
                e.0 += sign as i64;
                index += 1;
            });
            local
        })
        .collect();

    let mut raw: HashMap<Vec<u32>, (i64, u64)> = HashMap::new();
    for shard in shards {
        for (k, (c, idx)) in shard {
            let e = raw.entry(k).or_insert((0, idx));
            e.0 += c;
            e.1 = e.1.min(idx);
        }
    }

    let mut terms: BTreeMap<SemiMagicSquare, i64> = BTreeMap::new();
    let mut first_index: BTreeMap<SemiMagicSquare, u64> = BTreeMap::new();
    for (entries, (c, idx)) in raw {
        let sq = SemiMagicSquare::from_raw(n, rank as u32, entries);
        let canon = canonicalize(&sq)?;
        *terms.entry(canon.clone()).or_default() += c;
        let e = first_index.entry(canon).or_insert(idx);
        *e = (*e).min(idx);
    }
    let representatives = first_index
        .into_iter()
        .map(|(sq, idx)| (sq, space.tuple(&space.digits(idx))))
        .collect();
    Ok(InvariantExpansion {
        rank,
        order: n,
        prefactor_denominator: (1..=n as u64).product(),
        terms,
        representatives,
    })
}

type Cache = Mutex<HashMap<(usize, usize), Arc<InvariantExpansion>>>;

/// Memoized [`build_expansion_with`]; the cap is checked on every call.
pub fn cached_expansion(rank: usize, n: usize, limits: &Limits) -> Result<Arc<InvariantExpansion>> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    limits.check_tuples(tuple_count(rank, n))?;
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&(rank, n)) {
        return Ok(hit.clone());
    }
    let built = Arc::new(build_expansion_with(rank, n, limits)?);
    cache
        .lock()
        .expect("cache lock")
        .entry((rank, n))
        .or_insert(built.clone());
    Ok(built)
}
