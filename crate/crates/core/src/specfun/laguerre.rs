/// Generalized Laguerre polynomial `L_n^α(g)` by the three-term recurrence
/// `(k+1) L_{k+1} = (2k + 1 + α - g) L_k - (k + α) L_{k-1}`.
pub fn laguerre(n: u32, alpha: f64, g: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut curr = 1.0 + alpha - g;
    for k in 1..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + alpha - g) * curr - (k + alpha) * prev) / (k + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn low_orders() {
        assert_eq!(laguerre(0, 3.7, 11.0), 1.0);
        assert_eq!(laguerre(1, 1.0, 2.0), 0.0);
        assert_eq!(laguerre(1, 0.5, 0.25), 1.25);
    }

    #[test]
    fn cubic_against_expansion() {
        // L_3^{1/2}(3/2) = -1 exactly, from the coefficient expansion
        // Σ (-1)^k C(n+α, n-k) x^k / k! in rational arithmetic.
        assert!((laguerre(3, 0.5, 1.5) + 1.0).abs() < 1e-14);
    }

    #[test]
    fn closed_form_cubic() {
        // L_3^α(x) = C(3+α,3) - C(3+α,2) x + (3+α) x²/2 - x³/6
        for &(alpha, x) in &[(0.0, 0.3), (2.5, 4.0), (1.0, 9.5)] {
            let a: f64 = alpha;
            let c3 = (3.0 + a) * (2.0 + a) * (1.0 + a) / 6.0;
            let c2 = (3.0 + a) * (2.0 + a) / 2.0;
            let expect = c3 - c2 * x + (3.0 + a) * x * x / 2.0 - x * x * x / 6.0;
            assert!((laguerre(3, alpha, x) - expect).abs() < 1e-12 * expect.abs().max(1.0));
        }
    }

    proptest! {
        #[test]
        fn recurrence_consistency(n in 1u32..10, alpha in 0.0f64..5.0, g in 0.0f64..20.0) {
            let nf = f64::from(n);
            let lhs = (nf + 1.0) * laguerre(n + 1, alpha, g);
            let rhs = (2.0 * nf + 1.0 + alpha - g) * laguerre(n, alpha, g)
                - (nf + alpha) * laguerre(n - 1, alpha, g);
            let scale = lhs.abs().max(rhs.abs()).max(1.0);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        }
    }
}
