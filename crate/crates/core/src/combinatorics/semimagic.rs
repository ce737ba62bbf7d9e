//! Semi-magic squares: enumeration, canonical forms and classes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};

use crate::error::{invalid, Error, Result};
use crate::limits::Limits;
use crate::perm::{all_perms, Permutation, PermutationTuple};

/// An `n × n` array of non-negative integers whose rows and columns all sum to `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemiMagicSquare {
    n: usize,
    r: u32,
    entries: Vec<u32>,
}

impl SemiMagicSquare {
    /// Validates the margins; `entries` is row-major.
    pub fn new(n: usize, entries: Vec<u32>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(invalid(format!("need {} entries for order {n}", n * n)));
        }
        let r: u32 = entries[..n].iter().sum();
        for i in 0..n {
            let row: u32 = entries[i * n..(i + 1) * n].iter().sum();
            let col: u32 = (0..n).map(|k| entries[k * n + i]).sum();
            if row != r || col != r {
                return Err(invalid(format!(
                    "row {i} sums to {row} and column {i} to {col}, expected {r}"
                )));
            }
        }
        Ok(SemiMagicSquare { n, r, entries })
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        Self::new(rows.len(), rows.iter().flatten().copied().collect())
    }

    pub(crate) fn from_raw(n: usize, r: u32, entries: Vec<u32>) -> Self {
        SemiMagicSquare { n, r, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The common row and column sum.
    pub fn rank(&self) -> u32 {
        self.r
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n).map(<[u32]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let entries = (0..n * n)
            .map(|k| self.entries[(k % n) * n + k / n])
            .collect();
        SemiMagicSquare::from_raw(n, self.r, entries)
    }

    /// Rows reordered so that new row `i` is old row `rows[i]`; likewise columns.
    pub fn permuted(&self, rows: &Permutation, cols: &Permutation) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(rows.apply(i), cols.apply(j)));
            }
        }
        SemiMagicSquare::from_raw(n, self.r, entries)
    }
}

impl fmt::Display for SemiMagicSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

fn binom(n: &BigInt, k: u32) -> BigInt {
    // Generalized binomial, valid for negative `n`.
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Closed-form count of order-`n` semi-magic squares with line sum `r`, `n ≤ 4`.
pub fn hn_formula(n: usize, r: u32) -> Result<BigUint> {
    let rr = BigInt::from(r);
    let value = match n {
        1 => BigInt::one(),
        2 => &rr + 1,
        3 => {
            let r2 = &rr * &rr;
            (&r2 * &r2 + 6 * &r2 * &rr + 15 * &r2 + 18 * &rr + 8) / 8
        }
        4 => {
            const C: [i64; 10] = [24, 258, 1468, 4945, 10532, 14620, 13232, 7544, 2464, 352];
            let m = &rr - 1;
            C.iter()
                .enumerate()
                .map(|(k, c)| BigInt::from(*c) * binom(&m, k as u32))
                .sum()
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "closed form known only for n <= 4, got {n}"
            )))
        }
    };
    value
        .to_biguint()
        .ok_or_else(|| invalid("negative count from closed form"))
}

/// An upper bound on the number of squares, for the resource guard.
fn count_bound(n: usize, r: u32) -> u128 {
    if let Ok(v) = hn_formula(n, r) {
        return v.to_u128().unwrap_or(u128::MAX);
    }
    // Each of the first n-1 rows is a composition of r into n parts.
    let comps = binom(&BigInt::from(r as u64 + n as u64 - 1), n as u32 - 1);
    comps.pow(n as u32 - 1).to_u128().unwrap_or(u128::MAX)
}

/// Every order-`n` square with line sum `r`, in ascending row-major order.
pub fn enumerate_semimagic(n: usize, r: u32) -> Result<Vec<SemiMagicSquare>> {
    enumerate_semimagic_with(n, r, &Limits::default())
}

pub fn enumerate_semimagic_with(n: usize, r: u32, limits: &Limits) -> Result<Vec<SemiMagicSquare>> {
    if n == 0 {
        return Err(invalid("order must be positive"));
    }
    limits.check_squares(count_bound(n, r))?;
    let mut out = Vec::new();
    let mut grid = vec![0u32; n * n];
    let mut colrem = vec![r; n];
    rows_from(0, n, r, &mut grid, &mut colrem, &mut out);
    Ok(out)
}

fn rows_from(
    row: usize,
    n: usize,
    r: u32,
    grid: &mut [u32],
    colrem: &mut [u32],
    out: &mut Vec<SemiMagicSquare>,
) {
    if row == n - 1 {
        grid[row * n..].copy_from_slice(colrem);
        out.push(SemiMagicSquare::from_raw(n, r, grid.to_vec()));
        return;
    }
    // Rows still to fill after this one can absorb at most (n-row-1)·r per column.
    let later = (n - row - 1) as u32 * r;
    cells_from(row, 0, r, n, r, later, grid, colrem, out);
}

#[allow(clippy::too_many_arguments)]
fn cells_from(
    row: usize,
    col: usize,
    left: u32,
    n: usize,
    r: u32,
    later: u32,
    grid: &mut [u32],
    colrem: &mut [u32],
    out: &mut Vec<SemiMagicSquare>,
) {
    if col == n - 1 {
        if left > colrem[col] || colrem[col] - left > later {
            return;
        }
        grid[row * n + col] = left;
        colrem[col] -= left;
        rows_from(row + 1, n, r, grid, colrem, out);
        colrem[col] += left;
        return;
    }
    let hi = left.min(colrem[col]);
    let lo = colrem[col].saturating_sub(later);
    for v in lo..=hi {
        grid[row * n + col] = v;
        colrem[col] -= v;
        cells_from(row, col + 1, left - v, n, r, later, grid, colrem, out);
        colrem[col] += v;
    }
}

/// Lexicographically smallest row-major array over all row and column
/// permutations (no transposition). For each row order the best column order
/// is found by sorting columns as vectors, so the cost is `n!·n log n`.
pub fn canonicalize(sq: &SemiMagicSquare) -> Result<SemiMagicSquare> {
    let n = sq.n;
    if n > 5 {
        return Err(Error::Unsupported(format!(
            "canonical forms are limited to order 5, got {n}"
        )));
    }
    let mut best: Option<Vec<u32>> = None;
    let mut cols: Vec<Vec<u32>> = vec![vec![0; n]; n];
    let mut flat = vec![0u32; n * n];
    for rp in all_perms(n) {
        for (j, col) in cols.iter_mut().enumerate() {
            for (i, slot) in col.iter_mut().enumerate() {
                *slot = sq.get(rp.apply(i), j);
            }
        }
        cols.sort_unstable();
        for (j, col) in cols.iter().enumerate() {
            for (i, &v) in col.iter().enumerate() {
                flat[i * n + j] = v;
            }
        }
        if best.as_ref().is_none_or(|b| flat < *b) {
            best = Some(flat.clone());
        }
    }
    Ok(SemiMagicSquare::from_raw(n, sq.r, best.unwrap_or_default()))
}

/// An orbit of squares under independent row and column permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareClass {
    pub canonical: SemiMagicSquare,
    /// Number of distinct squares in the orbit.
    pub size: u64,
    /// A tuple whose square lies in this class (absent for `r = 0`).
    pub representative_tuple: Option<PermutationTuple>,
}

/// All classes of order `n`, line sum `r`, sorted by canonical form.
pub fn enumerate_classes(n: usize, r: u32) -> Result<Vec<SquareClass>> {
    enumerate_classes_with(n, r, &Limits::default())
}

pub fn enumerate_classes_with(n: usize, r: u32, limits: &Limits) -> Result<Vec<SquareClass>> {
    let squares = enumerate_semimagic_with(n, r, limits)?;
    let mut sizes: BTreeMap<SemiMagicSquare, u64> = BTreeMap::new();
    for sq in &squares {
        *sizes.entry(canonicalize(sq)?).or_default() += 1;
    }
    sizes
        .into_iter()
        .map(|(canonical, size)| {
            let representative_tuple = representative(&canonical)?;
            Ok(SquareClass {
                canonical,
                size,
                representative_tuple,
            })
        })
        .collect()
}

/// Splits a square into `r` permutation matrices (Birkhoff–von Neumann) and
/// relabels columns so the first one is the identity. The returned tuple's
/// square is a column permutation of `sq`.
pub fn representative(sq: &SemiMagicSquare) -> Result<Option<PermutationTuple>> {
    if sq.r == 0 {
        return Ok(None);
    }
    let n = sq.n;
    let mut rest = sq.entries.clone();
    let mut layers: Vec<Vec<usize>> = Vec::with_capacity(sq.r as usize);
    for _ in 0..sq.r {
        let m = perfect_matching(n, &rest)
            .ok_or_else(|| invalid(format!("{sq} has no perfect matching")))?;
        for (i, &j) in m.iter().enumerate() {
            rest[i * n + j] -= 1;
        }
        layers.push(m);
    }
    let first = Permutation::new(layers[0].clone())?.inverse();
    let perms = layers[1..]
        .iter()
        .map(|m| Ok(first.compose(&Permutation::new(m.clone())?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(PermutationTuple::new(n, perms)?))
}

fn perfect_matching(n: usize, w: &[u32]) -> Option<Vec<usize>> {
    fn augment(
        i: usize,
        n: usize,
        w: &[u32],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for j in 0..n {
            if w[i * n + j] > 0 && !seen[j] {
                seen[j] = true;
                if owner[j].is_none_or(|k| augment(k, n, w, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let mut seen = vec![false; n];
        if !augment(i, n, w, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut m = vec![0; n];
    for (j, o) in owner.iter().enumerate() {
        m[o.expect("perfect")] = j;
    }
    Some(m)
}

/// `s_{IJ} = #{k : σ_k(I) = J}` with `σ₁` the identity.
pub fn tuple_to_square(t: &PermutationTuple) -> SemiMagicSquare {
    let n = t.order();
    let mut entries = vec![0u32; n * n];
    for i in 0..n {
        for k in 0..t.rank() {
            entries[i * n + t.image(k, i)] += 1;
        }
    }
    SemiMagicSquare::from_raw(n, t.rank() as u32, entries)
}

/// Number of classes without materializing them (convenience for reports).
pub fn class_count(n: usize, r: u32) -> Result<usize> {
    Ok(enumerate_classes(n, r)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn sq(rows: &[&[u32]]) -> SemiMagicSquare {
        SemiMagicSquare::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    /// Exhaustive reference over all (n!)² row/column permutation pairs.
    fn canonical_exhaustive(s: &SemiMagicSquare) -> SemiMagicSquare {
        let perms = all_perms(s.order());
        let mut best: Option<SemiMagicSquare> = None;
        for rp in &perms {
            for cp in &perms {
                let t = s.permuted(rp, cp);
                if best.as_ref().is_none_or(|b| t.entries < b.entries) {
                    best = Some(t);
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn validation() {
        assert!(SemiMagicSquare::new(2, vec![1, 1, 0, 2]).is_err());
        assert_eq!(sq(&[&[2, 0], &[0, 2]]).rank(), 2);
    }

    #[test]
    fn counts_small() {
        let r2: Vec<usize> = (1..=4)
            .map(|n| enumerate_semimagic(n, 2).unwrap().len())
            .collect();
        assert_eq!(r2, vec![1, 3, 21, 282]);
        assert_eq!(enumerate_semimagic(4, 4).unwrap().len(), 10147);
        assert_eq!(enumerate_semimagic(1, 7).unwrap().len(), 1);
        assert_eq!(enumerate_semimagic(3, 0).unwrap().len(), 1);
    }

    #[test]
    fn formula_matches_enumeration() {
        for n in 1..=4 {
            for r in 0..=4 {
                let e = enumerate_semimagic(n, r).unwrap().len();
                assert_eq!(hn_formula(n, r).unwrap(), BigUint::from(e), "n={n} r={r}");
            }
        }
        assert_eq!(hn_formula(3, 2).unwrap(), BigUint::from(21u32));
        assert_eq!(hn_formula(3, 4).unwrap(), BigUint::from(120u32));
        assert_eq!(hn_formula(4, 4).unwrap(), BigUint::from(10147u32));
        assert!(hn_formula(5, 2).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let all = enumerate_semimagic(3, 3).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(
            enumerate_semimagic(2, 2).unwrap()[0],
            sq(&[&[0, 2], &[2, 0]])
        );
    }

    #[test]
    fn cap_refuses_large_requests() {
        let lim = Limits {
            tuple_cap: 10,
            square_cap: 100,
        };
        assert!(matches!(
            enumerate_semimagic_with(4, 2, &lim),
            Err(Error::CapExceeded { .. })
        ));
        assert!(enumerate_semimagic_with(5, 30, &Limits::default()).is_err());
    }

    #[test]
    fn canonical_examples() {
        let a = sq(&[&[2, 0], &[0, 2]]);
        assert_eq!(canonicalize(&a).unwrap(), sq(&[&[0, 2], &[2, 0]]));
        let b = sq(&[&[1, 1], &[1, 1]]);
        assert_eq!(canonicalize(&b).unwrap(), b);
    }

    #[test]
    fn fast_canonical_matches_exhaustive() {
        for (n, r) in [(3, 2), (3, 3), (4, 2), (3, 4)] {
            for s in enumerate_semimagic(n, r).unwrap() {
                assert_eq!(canonicalize(&s).unwrap(), canonical_exhaustive(&s));
            }
        }
        for s in enumerate_semimagic(4, 4).unwrap().iter().step_by(37) {
            assert_eq!(canonicalize(s).unwrap(), canonical_exhaustive(s));
        }
    }

    #[test]
    fn canonical_is_orbit_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for s in enumerate_semimagic(4, 3).unwrap().iter().step_by(11) {
            let c = canonicalize(s).unwrap();
            assert_eq!(canonicalize(&c).unwrap(), c);
            for _ in 0..100 {
                let mut rp: Vec<usize> = (0..4).collect();
                let mut cp: Vec<usize> = (0..4).collect();
                rp.shuffle(&mut rng);
                cp.shuffle(&mut rng);
                let moved = s.permuted(
                    &Permutation::new(rp).unwrap(),
                    &Permutation::new(cp).unwrap(),
                );
                assert_eq!(canonicalize(&moved).unwrap(), c);
            }
        }
    }

    #[test]
    fn class_counts() {
        let r2: Vec<usize> = (1..=4).map(|n| class_count(n, 2).unwrap()).collect();
        assert_eq!(r2, vec![1, 2, 3, 5]);
        let r4: Vec<usize> = (1..=4).map(|n| class_count(n, 4).unwrap()).collect();
        assert_eq!(r4, vec![1, 3, 9, 43]);
        assert_eq!(class_count(4, 3).unwrap(), 12);
        assert_eq!(class_count(3, 6).unwrap(), 22);
    }

    #[test]
    fn class_sizes_sum_and_divide() {
        for (n, r) in [(3, 2), (4, 2), (3, 4), (4, 4)] {
            let classes = enumerate_classes(n, r).unwrap();
            let total: u64 = classes.iter().map(|c| c.size).sum();
            assert_eq!(total as usize, enumerate_semimagic(n, r).unwrap().len());
            let group = (1..=n as u64).product::<u64>().pow(2);
            assert!(classes.iter().all(|c| group % c.size == 0));
        }
    }

    #[test]
    fn representatives_land_in_their_class() {
        for (n, r) in [(2, 2), (3, 3), (4, 4), (3, 6)] {
            for c in enumerate_classes(n, r).unwrap() {
                let t = c.representative_tuple.clone().unwrap();
                assert_eq!(t.rank(), r as usize);
                assert_eq!(canonicalize(&tuple_to_square(&t)).unwrap(), c.canonical);
            }
        }
    }

    #[test]
    fn tuple_squares() {
        let t = |perms: &[&[usize]]| {
            PermutationTuple::new(
                2,
                perms
                    .iter()
                    .map(|p| Permutation::new(p.to_vec()).unwrap())
                    .collect(),
            )
            .unwrap()
        };
        assert_eq!(tuple_to_square(&t(&[&[0, 1]])), sq(&[&[2, 0], &[0, 2]]));
        let sw = t(&[&[1, 0]]);
        assert_eq!(tuple_to_square(&sw), sq(&[&[1, 1], &[1, 1]]));
        assert_eq!(sw.sign(), -1);
        let all = t(&[&[1, 0], &[1, 0], &[1, 0]]);
        assert_eq!(tuple_to_square(&all), sq(&[&[1, 3], &[3, 1]]));
        assert_eq!(all.sign(), -1);
    }

    #[test]
    fn transpose_is_a_different_equivalence() {
        // Classes counted with transposition folded in are fewer at (4,4).
        let classes = enumerate_classes(4, 4).unwrap();
        let mut folded = std::collections::BTreeSet::new();
        for c in &classes {
            let t = canonicalize(&c.canonical.transpose()).unwrap();
            folded.insert(std::cmp::min(c.canonical.clone(), t));
        }
        assert_eq!(folded.len(), 38);
    }
}
