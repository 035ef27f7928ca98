//! Special functions used by the model: Airy Ai/Ai', generalized Laguerre
//! polynomials and Γ. Dependency-free and accurate to near machine precision
//! on the ranges the rest of the crate touches.

mod airy;
mod gamma;
mod laguerre;

pub(crate) use airy::airy_log_deriv_unchecked;
pub(crate) use airy::airy_unchecked;
pub use airy::{
    airy, airy_log_deriv, asymptotic as airy_asymptotic, maclaurin as airy_maclaurin,
    positive_bridge as airy_positive_bridge, AiryValue, ASYMPTOTIC_THRESHOLD, SERIES_LOWER,
    SERIES_UPPER,
};
pub use gamma::gamma_fn;
pub use laguerre::laguerre;

/// First zero of Ai located by bisection on [`airy`].
pub fn airy_first_zero() -> f64 {
    let (mut lo, mut hi) = (-2.4_f64, -2.3_f64);
    while hi - lo > 4.0 * f64::EPSILON * lo.abs() {
        let mid = 0.5 * (lo + hi);
        if airy_unchecked(mid).ai > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}
