//! The tuple contraction kernel and its leave-one-out variants.
//!
//! With the diagonal unit tensor every `Delta` factor collapses to a single
//! summation variable, so one tuple term becomes
//! `Σ_{v ∈ [0,d)^n} Π_I A[v_{τ₁(I)}, …, v_{τ_r(I)}]`. Anything else goes
//! through [`crate::network`].

use rayon::prelude::*;

use crate::error::{shape, Result};
use crate::limits::Limits;
use crate::network::{tuple_network, Hole};
use crate::perm::{PermutationTuple, TupleSpace};
use crate::tensor::{is_unit_delta, strides, HyperMatrix, Variance};

/// Loop nest over `vars` variables in `[0, dim)`; each factor reads `a` at an
/// offset linear in the variables, and the product lands at an output offset
/// that is also linear in them.
struct Kernel {
    dim: usize,
    vars: usize,
    /// `coef[k][f]`: offset step of factor `f` when variable `k` increments.
    coef: Vec<Vec<usize>>,
    out: Vec<usize>,
    factors: usize,
}

impl Kernel {
    fn run(&self, a: &[f64], mut sink: impl FnMut(usize, f64)) {
        let d = self.dim;
        let mut offs = vec![0usize; self.factors];
        let mut out_off = 0usize;
        let mut vals = vec![0usize; self.vars];
        loop {
            let p: f64 = offs.iter().map(|&o| a[o]).product();
            sink(out_off, p);
            let mut k = self.vars;
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                vals[k] += 1;
                if vals[k] < d {
                    for (o, c) in offs.iter_mut().zip(&self.coef[k]) {
                        *o += c;
                    }
                    out_off += self.out[k];
                    break;
                }
                vals[k] = 0;
                for (o, c) in offs.iter_mut().zip(&self.coef[k]) {
                    *o -= (d - 1) * c;
                }
                out_off -= (d - 1) * self.out[k];
            }
        }
    }
}

/// Slot `k` of factor `i` is wired to unit factor `tau(k, i)`.
fn full_kernel(rank: usize, dim: usize, n: usize, tau: &dyn Fn(usize, usize) -> usize) -> Kernel {
    let st = strides(rank, dim);
    let mut coef = vec![vec![0usize; n]; n];
    for i in 0..n {
        for (k, s) in st.iter().enumerate() {
            coef[tau(k, i)][i] += s;
        }
    }
    Kernel {
        dim,
        vars: n,
        coef,
        out: vec![0; n],
        factors: n,
    }
}

/// Derivative with respect to A factor `hole`: the remaining factors are
/// multiplied and scattered to the entry the removed factor would have read.
fn a_hole_kernel(
    rank: usize,
    dim: usize,
    n: usize,
    hole: usize,
    tau: &dyn Fn(usize, usize) -> usize,
) -> Kernel {
    let st = strides(rank, dim);
    let mut coef = vec![vec![0usize; n - 1]; n];
    let mut out = vec![0usize; n];
    let mut f = 0;
    for i in 0..n {
        for (k, s) in st.iter().enumerate() {
            if i == hole {
                out[tau(k, i)] += s;
            } else {
                coef[tau(k, i)][f] += s;
            }
        }
        if i != hole {
            f += 1;
        }
    }
    Kernel {
        dim,
        vars: n,
        coef,
        out,
        factors: n - 1,
    }
}

/// Derivative with respect to unit factor `hole`: its slots become `r` free
/// output variables, the other unit factors stay collapsed.
fn delta_hole_kernel(
    rank: usize,
    dim: usize,
    n: usize,
    hole: usize,
    tau: &dyn Fn(usize, usize) -> usize,
) -> Kernel {
    let st = strides(rank, dim);
    // Variables: the n-1 surviving unit factors, then the r open slots.
    let var_of = |j: usize| if j < hole { j } else { j - 1 };
    let vars = n - 1 + rank;
    let mut coef = vec![vec![0usize; n]; vars];
    let mut out = vec![0usize; vars];
    for (k, s) in st.iter().enumerate() {
        out[n - 1 + k] = *s;
    }
    for i in 0..n {
        for (k, s) in st.iter().enumerate() {
            let j = tau(k, i);
            let v = if j == hole { n - 1 + k } else { var_of(j) };
            coef[v][i] += s;
        }
    }
    Kernel {
        dim,
        vars,
        coef,
        out,
        factors: n,
    }
}

fn check_pair(a: &HyperMatrix, delta: &HyperMatrix) -> Result<()> {
    a.expect_variance(Variance::Covariant)?;
    delta.expect_variance(Variance::Contravariant)?;
    a.check_same_shape(delta)
}

/// One unsigned term of an alternating contraction: `n` copies of `a` and `n`
/// copies of `delta`, slot `k` of A factor `I` joined to slot `k` of unit
/// factor `σ_k(I)` (`σ₁` is the identity). The caller applies the sign.
pub fn contract_tuple(
    a: &HyperMatrix,
    delta: &HyperMatrix,
    tuple: &PermutationTuple,
) -> Result<f64> {
    check_pair(a, delta)?;
    if tuple.rank() != a.rank() {
        return Err(shape(format!(
            "tuple wires rank {} but tensors have rank {}",
            tuple.rank(),
            a.rank()
        )));
    }
    let tau = |k: usize, i: usize| tuple.image(k, i);
    if is_unit_delta(delta) {
        let kern = full_kernel(a.rank(), a.dim(), tuple.order(), &tau);
        let mut total = 0.0;
        kern.run(a.data(), |_, p| total += p);
        Ok(total)
    } else {
        Ok(tuple_network(a.data(), delta.data(), a.rank(), a.dim(), tuple, Hole::None)[0])
    }
}

/// What a signed tuple sum should produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Target {
    Value,
    GradA,
    GradDelta,
}

/// `Σ_tuples sign · term` for order `n`, or its formal gradient with respect to
/// `A` or `Delta` (leave-one-out over every factor). No `1/n!` applied.
/// Shards over the first permutation and merges in shard order.
pub(crate) fn signed_sum(
    a: &HyperMatrix,
    delta: &HyperMatrix,
    n: usize,
    target: Target,
    limits: &Limits,
) -> Result<Vec<f64>> {
    check_pair(a, delta)?;
    let rank = a.rank();
    let dim = a.dim();
    limits.check_tuples(crate::limits::tuple_count(rank, n))?;
    let space = TupleSpace::new(rank, n)?;
    let diagonal = is_unit_delta(delta);
    let out_len = match target {
        Target::Value => 1,
        _ => a.len(),
    };
    let shard = |first: usize| -> Vec<f64> {
        let mut acc = vec![0.0; out_len];
        space.for_each_in(first..first + 1, |digits, sign| {
            let w = sign as f64;
            let tau = |k: usize, i: usize| {
                if k == 0 {
                    i
                } else {
                    space.perms()[digits[k - 1]].apply(i)
                }
            };
            if diagonal {
                match target {
                    Target::Value => {
                        let mut t = 0.0;
                        full_kernel(rank, dim, n, &tau).run(a.data(), |_, p| t += p);
                        acc[0] += w * t;
                    }
                    Target::GradA => {
                        for hole in 0..n {
                            a_hole_kernel(rank, dim, n, hole, &tau)
                                .run(a.data(), |o, p| acc[o] += w * p);
                        }
                    }
                    Target::GradDelta => {
                        for hole in 0..n {
                            delta_hole_kernel(rank, dim, n, hole, &tau)
                                .run(a.data(), |o, p| acc[o] += w * p);
                        }
                    }
                }
            } else {
                let tuple = space.tuple(digits);
                let holes: Vec<Hole> = match target {
                    Target::Value => vec![Hole::None],
                    Target::GradA => (0..n).map(Hole::A).collect(),
                    Target::GradDelta => (0..n).map(Hole::Delta).collect(),
                };
                for hole in holes {
                    let part = tuple_network(a.data(), delta.data(), rank, dim, &tuple, hole);
                    for (x, y) in acc.iter_mut().zip(part) {
                        *x += w * y;
                    }
                }
            }
        });
        acc
    };
    let parts: Vec<Vec<f64>> = (0..space.shard_count())
        .into_par_iter()
        .map(shard)
        .collect();
    let mut total = vec![0.0; out_len];
    for part in parts {
        for (x, y) in total.iter_mut().zip(part) {
            *x += y;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Permutation, PermutationTuple};
    use crate::tensor::make_unit_delta;

    fn diag4(x: f64, y: f64) -> HyperMatrix {
        let mut a = HyperMatrix::zeros(4, 2, Variance::Covariant).unwrap();
        a.set(&[0, 0, 0, 0], x);
        a.set(&[1, 1, 1, 1], y);
        a
    }

    fn tuple(n: usize, perms: &[&[usize]]) -> PermutationTuple {
        let perms = perms
            .iter()
            .map(|p| Permutation::new(p.to_vec()).unwrap())
            .collect();
        PermutationTuple::new(n, perms).unwrap()
    }

    #[test]
    fn diagonal_examples() {
        let a = diag4(2.0, 3.0);
        let delta = make_unit_delta(4, 2).unwrap();
        let id = tuple(2, &[&[0, 1], &[0, 1], &[0, 1]]);
        assert_eq!(contract_tuple(&a, &delta, &id).unwrap(), 25.0);
        let t = tuple(2, &[&[1, 0], &[1, 0], &[1, 0]]);
        assert_eq!(contract_tuple(&a, &delta, &t).unwrap(), 13.0);
        assert_eq!(t.sign(), -1);
        let one = tuple(1, &[&[0], &[0], &[0]]);
        assert_eq!(contract_tuple(&a, &delta, &one).unwrap(), 5.0);
    }

    #[test]
    fn generic_path_agrees_with_diagonal_path() {
        let a = HyperMatrix::from_fn(3, 2, Variance::Covariant, |ix| {
            1.0 + ix[0] as f64 * 0.5 - ix[1] as f64 * 0.25 + (ix[2] * ix[0]) as f64
        })
        .unwrap();
        let delta = make_unit_delta(3, 2).unwrap();
        let space = TupleSpace::new(3, 3).unwrap();
        for idx in 0..36u64 {
            let t = space.tuple(&space.digits(idx));
            let fast = contract_tuple(&a, &delta, &t).unwrap();
            let slow = tuple_network(a.data(), delta.data(), 3, 2, &t, Hole::None)[0];
            assert!(
                (fast - slow).abs() < 1e-12 * fast.abs().max(1.0),
                "{idx}: {fast} {slow}"
            );
        }
    }

    #[test]
    fn gradients_agree_between_paths() {
        let a = HyperMatrix::from_fn(2, 3, Variance::Covariant, |ix| {
            (ix[0] as f64 + 1.0) * 0.7 - ix[1] as f64 * 0.3 + if ix[0] == ix[1] { 1.0 } else { 0.0 }
        })
        .unwrap();
        let delta = make_unit_delta(2, 3).unwrap();
        let lim = Limits::default();
        for target in [Target::GradA, Target::GradDelta] {
            let fast = signed_sum(&a, &delta, 2, target, &lim).unwrap();
            let space = TupleSpace::new(2, 2).unwrap();
            let mut slow = vec![0.0; 9];
            space.for_each_in(0..2, |d, s| {
                let t = space.tuple(d);
                for h in 0..2 {
                    let hole = if target == Target::GradA {
                        Hole::A(h)
                    } else {
                        Hole::Delta(h)
                    };
                    let part = tuple_network(a.data(), delta.data(), 2, 3, &t, hole);
                    for (x, y) in slow.iter_mut().zip(part) {
                        *x += s as f64 * y;
                    }
                }
            });
            for (x, y) in fast.iter().zip(&slow) {
                assert!((x - y).abs() < 1e-12, "{target:?}: {x} vs {y}");
            }
        }
    }

    #[test]
    fn mismatched_inputs_rejected() {
        let a = diag4(1.0, 1.0);
        let delta = make_unit_delta(3, 2).unwrap();
        let t = tuple(1, &[&[0], &[0], &[0]]);
        assert!(contract_tuple(&a, &delta, &t).is_err());
        let delta4 = make_unit_delta(4, 2).unwrap();
        let short = tuple(1, &[&[0]]);
        assert!(contract_tuple(&a, &delta4, &short).is_err());
        assert!(contract_tuple(&delta4, &a, &t).is_err());
    }
}
