use crate::error::{Result, RiceError};

/// Random polynomial `Q(x) = sum_j A_j x^j` whose coefficients are partial
/// sums `A_j = D_0 + D_1 + ... + D_j` of independent centred Gaussian
/// increments with standard deviations `sigma_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialModel {
    sigma0: f64,
    sigma: Vec<f64>,
}

impl PolynomialModel {
    /// Increments `D_1..D_n` with the given deviations and no `D_0`.
    pub fn new(sigma: Vec<f64>) -> Result<Self> {
        Self::with_sigma0(0.0, sigma)
    }

    pub fn with_sigma0(sigma0: f64, sigma: Vec<f64>) -> Result<Self> {
        if sigma.is_empty() {
            return Err(RiceError::InvalidModel("degree must be at least 1".into()));
        }
        let bad = |s: &f64| !s.is_finite() || *s < 0.0;
        if bad(&sigma0) || sigma.iter().any(bad) {
            return Err(RiceError::InvalidModel(
                "increment deviations must be finite and non-negative".into(),
            ));
        }
        Ok(PolynomialModel { sigma0, sigma })
    }

    /// All `sigma_k = 1`, `sigma_0 = 0`.
    pub fn unit(degree: usize) -> Result<Self> {
        Self::new(vec![1.0; degree])
    }

    pub fn degree(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma0(&self) -> f64 {
        self.sigma0
    }

    /// Deviations of `D_1..D_n`.
    pub fn sigma(&self) -> &[f64] {
        &self.sigma
    }

    /// Deviation of increment `k`, `0 <= k <= n`.
    pub fn sigma_at(&self, k: usize) -> f64 {
        if k == 0 {
            self.sigma0
        } else {
            self.sigma[k - 1]
        }
    }

    /// `(k, sigma_k)` for every increment with positive variance.
    pub fn active_increments(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        (0..=self.degree())
            .map(|k| (k, self.sigma_at(k)))
            .filter(|&(_, s)| s > 0.0)
    }

    pub fn effective_rank(&self) -> usize {
        self.active_increments().count()
    }

    pub fn is_unit(&self) -> bool {
        self.sigma0 == 0.0 && self.sigma.iter().all(|&s| s == 1.0)
    }

    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(RiceError::InvalidModel(format!(
                "scale factor must be positive, got {c}"
            )));
        }
        Self::with_sigma0(self.sigma0 * c, self.sigma.iter().map(|s| s * c).collect())
    }
}

/// Multiplies every increment deviation by `c > 0`.
pub fn scale_model(model: &PolynomialModel, c: f64) -> Result<PolynomialModel> {
    model.scaled(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(PolynomialModel::new(vec![]).is_err());
        assert!(PolynomialModel::new(vec![1.0, -1.0]).is_err());
        assert!(PolynomialModel::new(vec![1.0, f64::NAN]).is_err());
        assert!(PolynomialModel::with_sigma0(-0.5, vec![1.0]).is_err());
    }

    #[test]
    fn rank_counts_positive_deviations() {
        let m = PolynomialModel::with_sigma0(0.5, vec![1.0, 0.0, 2.0]).unwrap();
        assert_eq!(m.effective_rank(), 3);
        assert_eq!(PolynomialModel::unit(2).unwrap().effective_rank(), 2);
    }

    #[test]
    fn scaling() {
        let m = PolynomialModel::unit(3).unwrap();
        assert_eq!(scale_model(&m, 1.0).unwrap(), m);
        assert_eq!(scale_model(&m, 2.0).unwrap().sigma(), &[2.0, 2.0, 2.0]);
        assert!(scale_model(&m, 0.0).is_err());
    }
}
