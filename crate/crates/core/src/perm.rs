//! Permutations of `{0, …, n-1}` and signed permutation tuples.

use crate::error::{invalid, Result};

/// A permutation in one-line notation: `p[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(invalid(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// Cycle lengths in descending order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// `+1` for even, `-1` for odd permutations.
    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycle_type().iter().map(|l| l - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// All permutations of `n` points in lexicographic one-line order.
pub fn all_perms(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation(cur.clone())];
    while next_permutation(&mut cur) {
        out.push(Permutation(cur.clone()));
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `(r-1)` permutations of `n` points; the first index group is implicitly
/// the identity. The sign is the product of the parities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationTuple {
    n: usize,
    perms: Vec<Permutation>,
    sign: i32,
}

impl PermutationTuple {
    pub fn new(n: usize, perms: Vec<Permutation>) -> Result<Self> {
        if perms.iter().any(|p| p.len() != n) {
            return Err(invalid(format!("all permutations must act on {n} points")));
        }
        let sign = perms.iter().map(Permutation::sign).product();
        Ok(PermutationTuple { n, perms, sign })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Rank of the tensors this tuple wires together.
    pub fn rank(&self) -> usize {
        self.perms.len() + 1
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn sign(&self) -> i32 {
        self.sign
    }

    /// Image of factor `i` in slot group `k` (`k = 0` is the fixed identity).
    pub fn image(&self, k: usize, i: usize) -> usize {
        if k == 0 {
            i
        } else {
            self.perms[k - 1].apply(i)
        }
    }
}

/// Enumerates every tuple for a given rank and order. Tuples are numbered as
/// an odometer over lexicographic permutation indices with the first
/// permutation most significant.
#[derive(Debug, Clone)]
pub struct TupleSpace {
    rank: usize,
    n: usize,
    perms: Vec<Permutation>,
    signs: Vec<i32>,
}

impl TupleSpace {
    pub fn new(rank: usize, n: usize) -> Result<Self> {
        if rank < 1 || n < 1 {
            return Err(invalid("rank and order must be positive"));
        }
        let perms = all_perms(n);
        let signs = perms.iter().map(Permutation::sign).collect();
        Ok(TupleSpace {
            rank,
            n,
            perms,
            signs,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn perm_sign(&self, i: usize) -> i32 {
        self.signs[i]
    }

    pub fn len(&self) -> u128 {
        crate::limits::tuple_count(self.rank, self.n)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Digits (permutation indices) of tuple number `index`.
    pub fn digits(&self, mut index: u64) -> Vec<usize> {
        let base = self.perms.len() as u64;
        let mut digits = vec![0usize; self.rank - 1];
        for slot in digits.iter_mut().rev() {
            *slot = (index % base) as usize;
            index /= base;
        }
        digits
    }

    pub fn tuple(&self, digits: &[usize]) -> PermutationTuple {
        let perms = digits.iter().map(|&i| self.perms[i].clone()).collect();
        PermutationTuple {
            n: self.n,
            perms,
            sign: digits.iter().map(|&i| self.signs[i]).product(),
        }
    }

    /// Calls `f(digits, sign)` for every tuple whose first digit lies in
    /// `first`, in enumeration order.
    pub fn for_each_in(&self, first: std::ops::Range<usize>, mut f: impl FnMut(&[usize], i32)) {
        let m = self.rank - 1;
        if m == 0 {
            if first.contains(&0) {
                f(&[], 1);
            }
            return;
        }
        let base = self.perms.len();
        for d0 in first {
            let mut digits = vec![0usize; m];
            digits[0] = d0;
            loop {
                let sign = digits.iter().map(|&i| self.signs[i]).product();
                f(&digits, sign);
                let mut k = m;
                loop {
                    if k == 1 {
                        break;
                    }
                    k -= 1;
                    digits[k] += 1;
                    if digits[k] < base {
                        break;
                    }
                    digits[k] = 0;
                }
                if digits[1..].iter().all(|&x| x == 0) {
                    break;
                }
            }
        }
    }

    /// Number of distinct leading digits, the unit of parallel sharding.
    pub fn shard_count(&self) -> usize {
        if self.rank == 1 {
            1
        } else {
            self.perms.len()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let p = all_perms(3);
        let lines: Vec<_> = p.iter().map(|x| x.as_slice().to_vec()).collect();
        assert_eq!(
            lines,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
        assert_eq!(all_perms(1).len(), 1);
        assert_eq!(all_perms(5).len(), 120);
    }

    #[test]
    fn signs_and_inverse() {
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(p.sign(), 1);
        assert_eq!(p.cycle_type(), vec![3]);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        let t = Permutation::new(vec![1, 0, 2]).unwrap();
        assert_eq!(t.sign(), -1);
        assert!(Permutation::new(vec![0, 0]).is_err());
        let total: i32 = all_perms(4).iter().map(Permutation::sign).sum();
        assert_eq!(total, 0);
    }

    #[test]
    fn odometer_matches_digits() {
        let space = TupleSpace::new(4, 2).unwrap();
        let mut seen = Vec::new();
        space.for_each_in(0..space.shard_count(), |d, s| seen.push((d.to_vec(), s)));
        assert_eq!(seen.len(), 8);
        for (i, (d, s)) in seen.iter().enumerate() {
            assert_eq!(&space.digits(i as u64), d);
            assert_eq!(space.tuple(d).sign(), *s);
        }
        let total: i32 = seen.iter().map(|x| x.1).sum();
        assert_eq!(total, 0);
    }

    #[test]
    fn rank_one_space_has_one_empty_tuple() {
        let space = TupleSpace::new(1, 3).unwrap();
        let mut count = 0;
        space.for_each_in(0..1, |d, s| {
            assert!(d.is_empty());
            assert_eq!(s, 1);
            count += 1;
        });
        assert_eq!(count, 1);
    }
}
