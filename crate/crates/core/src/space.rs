//! The weighted Hilbert space `(ℝⁿ, ⟨·,·⟩_D)` with diagonal metric `D`.
//!
//! A kernel denoiser `W = D⁻¹K` induces the inner product
//! `⟨x, y⟩ = xᵀDy` under which it is self-adjoint and averaged. All gradient
//! and proximal computations in this crate are carried out in such a space.
//! Only diagonal metrics are supported: the normalizer of a kernel filter is
//! always diagonal, so nothing more general is ever needed here.

use crate::error::{Error, Result};

/// A positive diagonal metric: the weight vector is the diagonal of `D`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSpace {
    weights: Vec<f64>,
}

impl WeightedSpace {
    /// Wraps a weight vector. Every entry must be strictly positive and
    /// finite.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::param("weight vector must be non-empty"));
        }
        if let Some((i, &w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !(w.is_finite() && **w > 0.0))
        {
            return Err(Error::param(format!(
                "weight [{i}] = {w} is not strictly positive and finite"
            )));
        }
        Ok(WeightedSpace { weights })
    }

    /// The standard Euclidean space: all weights one.
    pub fn standard(n: usize) -> Self {
        WeightedSpace {
            weights: vec![1.0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    fn check_len(&self, v: &[f64], what: &str) -> Result<()> {
        if v.len() != self.weights.len() {
            return Err(Error::dim(format!(
                "{what} has length {} but the space has dimension {}",
                v.len(),
                self.weights.len()
            )));
        }
        Ok(())
    }

    /// `⟨x, y⟩ = Σᵢ wᵢ xᵢ yᵢ`.
    pub fn inner(&self, x: &[f64], y: &[f64]) -> Result<f64> {
        self.check_len(x, "x")?;
        self.check_len(y, "y")?;
        Ok(self
            .weights
            .iter()
            .zip(x.iter().zip(y))
            .map(|(w, (a, b))| w * a * b)
            .sum())
    }

    /// The induced norm `‖x‖ = ⟨x, x⟩^{1/2}`.
    pub fn norm(&self, x: &[f64]) -> Result<f64> {
        Ok(self.inner(x, x)?.sqrt())
    }

    /// Converts a Euclidean gradient into the gradient with respect to this
    /// inner product (the Riesz representer): componentwise division by the
    /// weights. The result `g` satisfies `⟨g, h⟩_D = ∇f·h` for every `h`.
    pub fn weighted_gradient(&self, euclidean_grad: &[f64]) -> Result<Vec<f64>> {
        self.check_len(euclidean_grad, "gradient")?;
        Ok(euclidean_grad
            .iter()
            .zip(&self.weights)
            .map(|(g, w)| g / w)
            .collect())
    }

    /// Distance `‖a − b‖_D` without materializing the difference.
    pub fn dist(&self, a: &[f64], b: &[f64]) -> Result<f64> {
        self.check_len(a, "a")?;
        self.check_len(b, "b")?;
        Ok(self
            .weights
            .iter()
            .zip(a.iter().zip(b))
            .map(|(w, (x, y))| w * (x - y) * (x - y))
            .sum::<f64>()
            .sqrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn inner_reduces_to_dot_product_for_unit_weights() {
        let w = WeightedSpace::standard(2);
        assert_eq!(w.inner(&[1.0, 2.0], &[3.0, 4.0]).unwrap(), 11.0);
    }

    #[test]
    fn inner_with_zero_vector_is_zero() {
        let w = WeightedSpace::new(vec![0.3, 1.7, 2.0]).unwrap();
        assert_eq!(w.inner(&[5.0, -2.0, 9.0], &[0.0, 0.0, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn inner_hand_example() {
        let w = WeightedSpace::new(vec![2.0, 3.0]).unwrap();
        assert_eq!(w.inner(&[1.0, 1.0], &[1.0, 1.0]).unwrap(), 5.0);
    }

    #[test]
    fn norm_examples() {
        let w = WeightedSpace::standard(3);
        assert_eq!(w.norm(&[0.0, 0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(w.norm(&[3.0, 4.0, 0.0]).unwrap(), 5.0);

        let w = WeightedSpace::new(vec![4.0, 9.0]).unwrap();
        assert!((w.norm(&[1.0, 1.0]).unwrap() - 13.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn weighted_gradient_examples() {
        let w = WeightedSpace::standard(2);
        assert_eq!(w.weighted_gradient(&[1.5, -2.0]).unwrap(), vec![1.5, -2.0]);

        let w = WeightedSpace::new(vec![2.0, 4.0]).unwrap();
        assert_eq!(w.weighted_gradient(&[2.0, 4.0]).unwrap(), vec![1.0, 1.0]);
        assert_eq!(w.weighted_gradient(&[0.0, 0.0]).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let w = WeightedSpace::standard(3);
        assert!(w.inner(&[1.0, 2.0], &[1.0, 2.0, 3.0]).is_err());
        assert!(w.norm(&[1.0]).is_err());
        assert!(w.weighted_gradient(&[1.0, 2.0]).is_err());
    }

    #[test]
    fn weights_must_be_positive_and_finite() {
        assert!(WeightedSpace::new(vec![1.0, 0.0]).is_err());
        assert!(WeightedSpace::new(vec![1.0, -2.0]).is_err());
        assert!(WeightedSpace::new(vec![1.0, f64::NAN]).is_err());
        assert!(WeightedSpace::new(vec![]).is_err());
    }

    /// The converted gradient represents the same linear functional:
    /// `⟨weighted_gradient(g), h⟩_D = g·h`.
    #[test]
    fn riesz_property_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(011235);
        for _ in 0..100 {
            let n = rng.random_range(1..40);
            let g: Vec<f64> = (0..n).map(|_| rng.random_range(-2.0..2.0)).collect();
            let h: Vec<f64> = (0..n).map(|_| rng.random_range(-2.0..2.0)).collect();
            let w: Vec<f64> = (0..n).map(|_| rng.random_range(0.1..10.0)).collect();
            let space = WeightedSpace::new(w).unwrap();
            let wg = space.weighted_gradient(&g).unwrap();
            let lhs = space.inner(&wg, &h).unwrap();
            let rhs = crate::vecops::dot(&g, &h);
            assert!(
                (lhs - rhs).abs() < 1e-10 * (1.0 + rhs.abs()),
                "riesz defect {} vs {}",
                lhs,
                rhs
            );
        }
    }

    #[test]
    fn cauchy_schwarz_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(24680);
        for _ in 0..200 {
            let n = rng.random_range(1..30);
            let x: Vec<f64> = (0..n).map(|_| rng.random_range(-3.0..3.0)).collect();
            let y: Vec<f64> = (0..n).map(|_| rng.random_range(-3.0..3.0)).collect();
            let w: Vec<f64> = (0..n).map(|_| rng.random_range(0.05..5.0)).collect();
            let space = WeightedSpace::new(w).unwrap();
            let ip = space.inner(&x, &y).unwrap().abs();
            let bound = space.norm(&x).unwrap() * space.norm(&y).unwrap();
            assert!(ip <= bound + 1e-12, "{ip} > {bound}");
        }
    }
}
