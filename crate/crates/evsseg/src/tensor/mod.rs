//! Minimal dense-tensor substrate.
//!
//! Tensors are row-major and effectively rank-2 (row vectors are `1 x n`,
//! scalars `1 x 1`). The op set is exactly what the network needs, nothing
//! more: no general broadcasting, no fusion, no views. Each op exists twice:
//! a pure forward function in [`ops`], and a taped version on [`tape::Tape`]
//! that records what the backward pass needs.
//!
//! Test mode runs everything in `f64`; the inference/bench path instantiates
//! the same generic code at `f32`.

pub mod gradcheck;
pub mod ops;
pub mod tape;

pub use gradcheck::{grad_check, GradCheckReport, ParamSet};
pub use tape::{Tape, Var};

use crate::error::{Error, Result};
use num_traits::Float;

/// Scalar element type for tensors. Implemented for `f32` and `f64`.
pub trait Scalar:
    Float + num_traits::NumAssign + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
}

impl Scalar for f64 {
    #[inline]
    fn from_f64(v: f64) -> Self {
        v
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
}

impl Scalar for f32 {
    #[inline]
    fn from_f64(v: f64) -> Self {
        v as f32
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self as f64
    }
}

/// Dense row-major tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<S = f64> {
    dims: Vec<usize>,
    data: Vec<S>,
}

impl<S: Scalar> Tensor<S> {
    pub fn new(dims: Vec<usize>, data: Vec<S>) -> Result<Self> {
        let numel: usize = dims.iter().product();
        if dims.is_empty() || dims.iter().any(|&d| d == 0) {
            return Err(Error::shape("new", format!("dims must be positive, got {dims:?}")));
        }
        if data.len() != numel {
            return Err(Error::shape(
                "new",
                format!("data length {} != product of dims {:?}", data.len(), dims),
            ));
        }
        Ok(Tensor { dims, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Tensor { dims: vec![rows, cols], data: vec![S::zero(); rows * cols] }
    }

    pub fn full(rows: usize, cols: usize, v: S) -> Self {
        Tensor { dims: vec![rows, cols], data: vec![v; rows * cols] }
    }

    /// 1 x 1 tensor holding a single value.
    pub fn scalar(v: S) -> Self {
        Tensor { dims: vec![1, 1], data: vec![v] }
    }

    /// 1 x n row vector.
    pub fn row(data: Vec<S>) -> Self {
        Tensor { dims: vec![1, data.len()], data }
    }

    pub fn from_rows(rows: &[Vec<S>]) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::shape("from_rows", "no rows".to_string()));
        }
        let c = rows[0].len();
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::shape("from_rows", "ragged rows".to_string()));
        }
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend_from_slice(row);
        }
        Tensor::new(vec![r, c], data)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Rows of a rank-2 tensor (rank-1 tensors are treated as one row).
    pub fn rows(&self) -> usize {
        if self.dims.len() == 1 {
            1
        } else {
            self.dims[0]
        }
    }

    pub fn cols(&self) -> usize {
        *self.dims.last().unwrap()
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [S] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> S {
        self.data[i * self.cols() + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: S) {
        let c = self.cols();
        self.data[i * c + j] = v;
    }

    /// Value of a 1 x 1 tensor.
    pub fn item(&self) -> S {
        debug_assert_eq!(self.numel(), 1, "item() on non-scalar tensor");
        self.data[0]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Transposed copy of a rank-2 tensor.
    pub fn transposed(&self) -> Tensor<S> {
        let (r, c) = (self.rows(), self.cols());
        let mut out = Tensor::zeros(c, r);
        for i in 0..r {
            for j in 0..c {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Element-wise cast to another scalar type (via f64).
    pub fn cast<T: Scalar>(&self) -> Tensor<T> {
        Tensor {
            dims: self.dims.clone(),
            data: self.data.iter().map(|v| T::from_f64(v.to_f64())).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &Tensor<S>) -> f64 {
        debug_assert_eq!(self.dims, other.dims);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a.to_f64() - b.to_f64()).abs())
            .fold(0.0, f64::max)
    }
}

impl Tensor<f64> {
    /// Quantize every element through f32. Initialization goes through this
    /// so that the 32-bit checkpoint format round-trips bitwise.
    pub fn quantize_f32(&mut self) {
        for v in &mut self.data {
            *v = *v as f32 as f64;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_rejects_bad_dims() {
        assert!(Tensor::<f64>::new(vec![2, 0], vec![]).is_err());
        assert!(Tensor::<f64>::new(vec![2, 2], vec![1.0; 3]).is_err());
    }

    #[test]
    fn transpose_roundtrip() {
        let t = Tensor::from_rows(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]).unwrap();
        assert_eq!(t.transposed().transposed(), t);
        assert_eq!(t.transposed().get(2, 1), 6.0);
    }

    #[test]
    fn quantize_through_f32_is_idempotent() {
        let mut t = Tensor::row(vec![0.1f64, std::f64::consts::PI, -1.0 / 3.0]);
        t.quantize_f32();
        let once = t.clone();
        t.quantize_f32();
        assert_eq!(t, once);
    }
}
