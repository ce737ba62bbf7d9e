//! Dense hypermatrix storage and the structural tensors built on it.

use nalgebra::DMatrix;

use crate::error::{invalid, shape, Error, Result};

/// Index placement of a hypermatrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variance {
    Covariant,
    Contravariant,
}

impl Variance {
    pub fn name(self) -> &'static str {
        match self {
            Variance::Covariant => "covariant",
            Variance::Contravariant => "contravariant",
        }
    }

    pub fn flipped(self) -> Variance {
        match self {
            Variance::Covariant => Variance::Contravariant,
            Variance::Contravariant => Variance::Covariant,
        }
    }
}

impl std::str::FromStr for Variance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "covariant" => Ok(Variance::Covariant),
            "contravariant" => Ok(Variance::Contravariant),
            other => Err(invalid(format!("unknown variance {other:?}"))),
        }
    }
}

/// A rank-`r` array over `[0, d)^r`, stored densely in row-major order
/// (last index fastest).
#[derive(Debug, Clone, PartialEq)]
pub struct HyperMatrix {
    rank: usize,
    dim: usize,
    variance: Variance,
    data: Vec<f64>,
}

pub(crate) fn checked_len(rank: usize, dim: usize) -> Result<usize> {
    if rank == 0 || dim == 0 {
        return Err(invalid(format!(
            "rank and dim must be positive (got rank {rank}, dim {dim})"
        )));
    }
    let mut len: usize = 1;
    for _ in 0..rank {
        len = len
            .checked_mul(dim)
            .filter(|&l| l <= 1 << 28)
            .ok_or_else(|| invalid(format!("{dim}^{rank} entries is too large")))?;
    }
    Ok(len)
}

impl HyperMatrix {
    pub fn new(rank: usize, dim: usize, variance: Variance, data: Vec<f64>) -> Result<Self> {
        let len = checked_len(rank, dim)?;
        if data.len() != len {
            return Err(shape(format!(
                "expected {len} entries for rank {rank}, dim {dim}; got {}",
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|x| !x.is_finite()) {
            return Err(invalid(format!("entry {pos} is not finite")));
        }
        Ok(HyperMatrix {
            rank,
            dim,
            variance,
            data,
        })
    }

    pub fn zeros(rank: usize, dim: usize, variance: Variance) -> Result<Self> {
        let len = checked_len(rank, dim)?;
        Ok(HyperMatrix {
            rank,
            dim,
            variance,
            data: vec![0.0; len],
        })
    }

    /// Builds a tensor by evaluating `f` at every multi-index.
    pub fn from_fn(
        rank: usize,
        dim: usize,
        variance: Variance,
        mut f: impl FnMut(&[usize]) -> f64,
    ) -> Result<Self> {
        let mut t = Self::zeros(rank, dim, variance)?;
        let mut idx = vec![0usize; rank];
        for slot in t.data.iter_mut() {
            *slot = f(&idx);
            increment(&mut idx, dim);
        }
        if t.data.iter().any(|x| !x.is_finite()) {
            return Err(invalid("generated entry is not finite"));
        }
        Ok(t)
    }

    /// Rank-2 convenience constructor from rows.
    pub fn from_rows(rows: &[&[f64]], variance: Variance) -> Result<Self> {
        let d = rows.len();
        if rows.iter().any(|r| r.len() != d) {
            return Err(shape("rows must form a square matrix"));
        }
        Self::new(
            2,
            d,
            variance,
            rows.iter().flat_map(|r| r.iter().copied()).collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn with_variance(mut self, variance: Variance) -> Self {
        self.variance = variance;
        self
    }

    /// Stride of each slot in the flat array.
    pub fn strides(&self) -> Vec<usize> {
        strides(self.rank, self.dim)
    }

    pub fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.rank);
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> f64 {
        self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: f64) {
        let off = self.offset(idx);
        self.data[off] = value;
    }

    /// Multi-index of a flat offset.
    pub fn index_of(&self, mut offset: usize) -> Vec<usize> {
        let mut idx = vec![0; self.rank];
        for slot in idx.iter_mut().rev() {
            *slot = offset % self.dim;
            offset /= self.dim;
        }
        idx
    }

    /// Largest absolute entry.
    pub fn scale(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    pub fn max_abs_diff(&self, other: &HyperMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn scaled(&self, factor: f64) -> HyperMatrix {
        let mut out = self.clone();
        out.data.iter_mut().for_each(|x| *x *= factor);
        out
    }

    /// `self + factor * other`, keeping the variance of `self`.
    pub fn add_scaled(&self, factor: f64, other: &HyperMatrix) -> Result<HyperMatrix> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x += factor * y;
        }
        Ok(out)
    }

    /// Full contraction `Σ self[idx] · other[idx]`.
    pub fn dot(&self, other: &HyperMatrix) -> Result<f64> {
        self.check_same_shape(other)?;
        Ok(self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum())
    }

    pub fn check_same_shape(&self, other: &HyperMatrix) -> Result<()> {
        if self.rank != other.rank || self.dim != other.dim {
            return Err(shape(format!(
                "rank/dim {}/{} vs {}/{}",
                self.rank, self.dim, other.rank, other.dim
            )));
        }
        Ok(())
    }

    pub(crate) fn expect_variance(&self, expected: Variance) -> Result<()> {
        if self.variance != expected {
            return Err(Error::VarianceMismatch {
                expected: expected.name(),
                found: self.variance.name(),
            });
        }
        Ok(())
    }

    pub(crate) fn expect_rank(&self, rank: usize) -> Result<()> {
        if self.rank != rank {
            return Err(shape(format!("expected rank {rank}, got {}", self.rank)));
        }
        Ok(())
    }

    /// Largest deviation from full index symmetry.
    pub fn symmetry_deviation(&self) -> f64 {
        let mut dev = 0.0f64;
        let mut idx = vec![0usize; self.rank];
        let mut sorted = vec![0usize; self.rank];
        for &v in &self.data {
            sorted.copy_from_slice(&idx);
            sorted.sort_unstable();
            dev = dev.max((v - self.get(&sorted)).abs());
            increment(&mut idx, self.dim);
        }
        dev
    }

    /// True when every entry matches its sorted-index partner within
    /// `rel_tol * max(1, scale)`.
    pub fn is_symmetric(&self, rel_tol: f64) -> bool {
        self.symmetry_deviation() <= rel_tol * self.scale().max(1.0)
    }

    /// Rank-2 view as an nalgebra matrix (row `i`, column `j` = entry `(i, j)`).
    pub fn to_matrix(&self) -> Result<DMatrix<f64>> {
        self.expect_rank(2)?;
        Ok(DMatrix::from_row_slice(self.dim, self.dim, &self.data))
    }

    pub fn from_matrix(m: &DMatrix<f64>, variance: Variance) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(shape("matrix must be square"));
        }
        let d = m.nrows();
        Self::from_fn(2, d, variance, |ix| m[(ix[0], ix[1])])
    }
}

pub(crate) fn strides(rank: usize, dim: usize) -> Vec<usize> {
    let mut s = vec![1usize; rank];
    for k in (0..rank.saturating_sub(1)).rev() {
        s[k] = s[k + 1] * dim;
    }
    s
}

/// Advances a row-major multi-index; wraps to all zeros after the last one.
pub(crate) fn increment(idx: &mut [usize], dim: usize) {
    for slot in idx.iter_mut().rev() {
        *slot += 1;
        if *slot < dim {
            return;
        }
        *slot = 0;
    }
}

/// The unit hypermatrix: 1 where all indices coincide, 0 elsewhere.
pub fn make_unit_delta(rank: usize, dim: usize) -> Result<HyperMatrix> {
    let mut t = HyperMatrix::zeros(rank, dim, Variance::Contravariant)?;
    let step: usize = t.strides().iter().sum();
    for i in 0..dim {
        t.data[i * step] = 1.0;
    }
    Ok(t)
}

/// Covariant copy of the unit hypermatrix; it is its own inverse.
pub fn make_unit_delta_covariant(rank: usize, dim: usize) -> Result<HyperMatrix> {
    Ok(make_unit_delta(rank, dim)?.with_variance(Variance::Covariant))
}

/// True when `t` is exactly the diagonal unit hypermatrix of its shape.
pub fn is_unit_delta(t: &HyperMatrix) -> bool {
    let step: usize = t.strides().iter().sum();
    t.data.iter().enumerate().all(|(off, &v)| {
        let on_diag = off % step == 0 && off / step < t.dim;
        v == if on_diag { 1.0 } else { 0.0 }
    })
}

/// Levi-Civita symbol of rank `dim` with `ε^{0 1 … d-1} = +1`.
pub fn make_epsilon(dim: usize) -> Result<HyperMatrix> {
    let mut t = HyperMatrix::zeros(dim, dim, Variance::Contravariant)?;
    for p in crate::perm::all_perms(dim) {
        let off = t.offset(p.as_slice());
        t.data[off] = p.sign() as f64;
    }
    Ok(t)
}

/// Averages every entry over the `r!` permutations of its index. All members
/// of an orbit receive the same value, so the operation is exactly idempotent.
pub fn symmetrize(a: &HyperMatrix) -> HyperMatrix {
    let perms = crate::perm::all_perms(a.rank);
    let norm = 1.0 / perms.len() as f64;
    let mut out = a.clone();
    let mut idx = vec![0usize; a.rank];
    let mut sorted = vec![0usize; a.rank];
    let mut moved = vec![0usize; a.rank];
    for slot in out.data.iter_mut() {
        sorted.copy_from_slice(&idx);
        sorted.sort_unstable();
        let first = a.get(&sorted);
        let mut acc = 0.0;
        let mut uniform = true;
        for p in &perms {
            for (k, &pk) in p.as_slice().iter().enumerate() {
                moved[k] = sorted[pk];
            }
            let v = a.get(&moved);
            uniform &= v == first;
            acc += v;
        }
        *slot = if uniform { first } else { acc * norm };
        increment(&mut idx, a.dim);
    }
    out
}

/// An invertible `d × d` change of basis.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixTransform {
    forward: DMatrix<f64>,
    inverse: DMatrix<f64>,
}

impl MatrixTransform {
    /// `entries` is row-major. Rejects `|det| ≤ 1e-12 · max|entry|^d`.
    pub fn new(dim: usize, entries: &[f64]) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(shape(format!(
                "transform needs {} entries, got {}",
                dim * dim,
                entries.len()
            )));
        }
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(invalid("transform entry is not finite"));
        }
        let forward = DMatrix::from_row_slice(dim, dim, entries);
        let scale = entries.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let det = forward.determinant();
        if det.abs() <= 1e-12 * scale.powi(dim as i32) || scale == 0.0 {
            return Err(Error::Singular(format!("transform determinant {det:e}")));
        }
        let inverse = forward
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::Singular("transform is not invertible".into()))?;
        Ok(MatrixTransform { forward, inverse })
    }

    pub fn identity(dim: usize) -> Self {
        MatrixTransform {
            forward: DMatrix::identity(dim, dim),
            inverse: DMatrix::identity(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.forward.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.forward
    }

    pub fn inverse_matrix(&self) -> &DMatrix<f64> {
        &self.inverse
    }

    /// 2-norm condition number.
    pub fn condition(&self) -> f64 {
        let sv = self.forward.singular_values();
        sv.max() / sv.min()
    }
}

/// Applies `out[.., i, ..] = Σ_j coef(i, j) · t[.., j, ..]` to every slot.
fn apply_each_slot(t: &HyperMatrix, coef: impl Fn(usize, usize) -> f64) -> HyperMatrix {
    let d = t.dim;
    let strides = t.strides();
    let mut cur = t.data.clone();
    let mut next = vec![0.0; cur.len()];
    for &stride in &strides {
        for (off, out) in next.iter_mut().enumerate() {
            let i = (off / stride) % d;
            let base = off - i * stride;
            *out = (0..d).map(|j| coef(i, j) * cur[base + j * stride]).sum();
        }
        std::mem::swap(&mut cur, &mut next);
    }
    HyperMatrix {
        rank: t.rank,
        dim: d,
        variance: t.variance,
        data: cur,
    }
}

/// `A'_{i₁…i_r} = A_{j₁…j_r} U^{j₁}_{i₁} ⋯ U^{j_r}_{i_r}`.
pub fn transform_covariant(a: &HyperMatrix, u: &MatrixTransform) -> Result<HyperMatrix> {
    a.expect_variance(Variance::Covariant)?;
    if u.dim() != a.dim {
        return Err(shape(format!(
            "transform dim {} vs tensor dim {}",
            u.dim(),
            a.dim
        )));
    }
    let m = &u.forward;
    Ok(apply_each_slot(a, |i, j| m[(j, i)]))
}

/// `B'^{i₁…i_r} = (U⁻¹)^{i₁}_{j₁} ⋯ (U⁻¹)^{i_r}_{j_r} B^{j₁…j_r}`.
pub fn transform_contravariant(b: &HyperMatrix, u: &MatrixTransform) -> Result<HyperMatrix> {
    b.expect_variance(Variance::Contravariant)?;
    if u.dim() != b.dim {
        return Err(shape(format!(
            "transform dim {} vs tensor dim {}",
            u.dim(),
            b.dim
        )));
    }
    let m = &u.inverse;
    Ok(apply_each_slot(b, |i, j| m[(i, j)]))
}

/// Central-difference gradient of `f` with respect to every entry.
pub fn fd_gradient(f: impl Fn(&HyperMatrix) -> f64, a: &HyperMatrix, h: f64) -> HyperMatrix {
    assert!(h > 0.0, "step must be positive");
    let mut grad = a.clone();
    let mut probe = a.clone();
    for k in 0..a.data.len() {
        let x = a.data[k];
        probe.data[k] = x + h;
        let up = f(&probe);
        probe.data[k] = x - h;
        let down = f(&probe);
        probe.data[k] = x;
        grad.data[k] = (up - down) / (2.0 * h);
    }
    grad
}
