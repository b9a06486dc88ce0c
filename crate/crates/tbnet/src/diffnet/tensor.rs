//! Dense row-major tensors and the validated image-batch carrier.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Dense N-dimensional array of 64-bit reals in row-major order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f64>,
}

impl Tensor {
    /// Builds a tensor, checking that the extents multiply out to the data
    /// length and that every element is finite.
    pub fn new(shape: Vec<usize>, data: Vec<f64>) -> Result<Self> {
        let expected: usize = shape.iter().product();
        if shape.iter().any(|&d| d == 0) || expected != data.len() {
            return Err(Error::ShapeMismatch {
                context: "Tensor::new".into(),
                expected: shape.clone(),
                got: vec![data.len()],
            });
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("Tensor::new".into()));
        }
        Ok(Tensor { shape, data })
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let len = shape.iter().product();
        Tensor {
            shape,
            data: vec![0.0; len],
        }
    }

    pub fn scalar(v: f64) -> Self {
        Tensor {
            shape: vec![1],
            data: vec![v],
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    /// Reinterprets the flat data under a new shape with the same element count.
    pub fn reshape(&self, shape: Vec<usize>) -> Result<Tensor> {
        let expected: usize = shape.iter().product();
        if expected != self.data.len() {
            return Err(Error::ShapeMismatch {
                context: "Tensor::reshape".into(),
                expected: shape,
                got: self.shape.clone(),
            });
        }
        Ok(Tensor {
            shape,
            data: self.data.clone(),
        })
    }

    pub fn same_shape(&self, other: &Tensor) -> bool {
        self.shape == other.shape
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Tensor {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn scale(&self, c: f64) -> Tensor {
        self.map(|v| v * c)
    }

    /// Elementwise sum; shapes must agree.
    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        if !self.same_shape(other) {
            return Err(Error::ShapeMismatch {
                context: "Tensor::add".into(),
                expected: self.shape.clone(),
                got: other.shape.clone(),
            });
        }
        Ok(Tensor {
            shape: self.shape.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// self + c * other, elementwise.
    pub fn add_scaled(&self, other: &Tensor, c: f64) -> Result<Tensor> {
        if !self.same_shape(other) {
            return Err(Error::ShapeMismatch {
                context: "Tensor::add_scaled".into(),
                expected: self.shape.clone(),
                got: other.shape.clone(),
            });
        }
        Ok(Tensor {
            shape: self.shape.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + c * b)
                .collect(),
        })
    }

    pub fn assert_finite(&self, context: &str) -> Result<()> {
        if self.data.iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(Error::NonFinite(context.into()))
        }
    }

    /// Bitwise equality of shape and every element.
    pub fn bitwise_eq(&self, other: &Tensor) -> bool {
        self.shape == other.shape
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.to_bits() == b.to_bits())
    }
}

/// Batch of images in N×C×H×W layout with every pixel in [0, 1].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImageBatch {
    tensor: Tensor,
}

impl ImageBatch {
    pub fn new(tensor: Tensor) -> Result<Self> {
        if tensor.shape().len() != 4 {
            return Err(Error::ShapeMismatch {
                context: "ImageBatch::new expects N×C×H×W".into(),
                expected: vec![4],
                got: tensor.shape().to_vec(),
            });
        }
        if tensor.shape()[0] == 0 {
            return Err(Error::EmptyInput("ImageBatch".into()));
        }
        if !tensor.data().iter().all(|&v| (0.0..=1.0).contains(&v)) {
            return Err(Error::InvalidConfig(
                "ImageBatch pixels must lie in [0, 1]".into(),
            ));
        }
        Ok(ImageBatch { tensor })
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    pub fn into_tensor(self) -> Tensor {
        self.tensor
    }

    pub fn count(&self) -> usize {
        self.tensor.shape()[0]
    }

    pub fn channels(&self) -> usize {
        self.tensor.shape()[1]
    }

    pub fn height(&self) -> usize {
        self.tensor.shape()[2]
    }

    pub fn width(&self) -> usize {
        self.tensor.shape()[3]
    }

    /// Pixels of a single image as a flat slice of length C*H*W.
    pub fn image(&self, index: usize) -> &[f64] {
        let per = self.channels() * self.height() * self.width();
        &self.tensor.data()[index * per..(index + 1) * per]
    }

    /// Copies a subset of images (in the given order) into a new batch.
    pub fn select(&self, indices: &[usize]) -> Result<ImageBatch> {
        if indices.is_empty() {
            return Err(Error::EmptyInput("ImageBatch::select".into()));
        }
        let per = self.channels() * self.height() * self.width();
        let mut data = Vec::with_capacity(indices.len() * per);
        for &i in indices {
            data.extend_from_slice(self.image(i));
        }
        let shape = vec![
            indices.len(),
            self.channels(),
            self.height(),
            self.width(),
        ];
        Ok(ImageBatch {
            tensor: Tensor::new(shape, data)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_rejects_length_mismatch() {
        assert!(Tensor::new(vec![2, 3], vec![0.0; 5]).is_err());
    }

    #[test]
    fn new_rejects_non_finite() {
        assert!(Tensor::new(vec![2], vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn image_batch_rejects_out_of_range_pixels() {
        let t = Tensor::new(vec![1, 1, 1, 2], vec![0.5, 1.5]).unwrap();
        assert!(ImageBatch::new(t).is_err());
    }

    #[test]
    fn image_batch_select_preserves_order() {
        let t = Tensor::new(vec![3, 1, 1, 1], vec![0.1, 0.2, 0.3]).unwrap();
        let b = ImageBatch::new(t).unwrap();
        let s = b.select(&[2, 0]).unwrap();
        assert_eq!(s.tensor().data(), &[0.3, 0.1]);
    }
}
