//! Kac-Rice computation of the expected number of local maxima below a level
//! for random polynomials whose coefficients are Brownian partial sums.

pub mod count;
pub mod density;
pub mod error;
pub mod model;
pub mod moments;
pub mod quadrature;
pub mod scaled;
pub mod special;

pub use count::{expected_count, CountQuery, Family, Method, NumericResult};
pub use density::{density_from_geometry, maxima_density, printed_density, SConvention};
pub use error::{Result, RiceError};
pub use model::{scale_model, PolynomialModel};
pub use moments::{basis_eval, moments, BasisSums, ConditionalGeometry, MomentSet};
pub use scaled::ScaledValue;
