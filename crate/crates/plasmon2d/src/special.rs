//! Cylinder-wave special functions: Bessel J_n, Y_n and Hankel H_n^(1) of
//! integer order for real and complex arguments, with derivatives.
//!
//! The implemented domain is 0 < |z| <= 30 with |arg z| < pi/2 (the lossy
//! inclusion wavenumbers used here all have a small positive imaginary part).
//! Power/log series carry the quasi-static regime |z| << 1 at full accuracy;
//! Miller backward recurrence and the Hankel asymptotic series take over for
//! moderate |z|, which only self-tests exercise.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Euler-Mascheroni constant, 20 digits.
pub const EULER_GAMMA: f64 = 0.57721566490153286061;

/// Maximum supported order.
pub const MAX_ORDER: i32 = 60;

/// Maximum supported modulus of the argument.
pub const MAX_MODULUS: f64 = 30.0;

const SERIES_J_CUTOFF: f64 = 8.0;
const SERIES_Y_CUTOFF: f64 = 12.0;

fn check_domain(n: i32, z: Complex64, allow_zero: bool) -> Result<()> {
    if n.abs() > MAX_ORDER {
        return Err(Error::DomainError { re: z.re, im: z.im });
    }
    let r = z.norm();
    if r == 0.0 {
        return if allow_zero {
            Ok(())
        } else {
            Err(Error::DomainError { re: z.re, im: z.im })
        };
    }
    if r > MAX_MODULUS || z.arg().abs() > PI / 2.0 + 1e-9 {
        return Err(Error::DomainError { re: z.re, im: z.im });
    }
    Ok(())
}

/// Digamma function at positive integers: psi(1) = -gamma, psi(m+1) = psi(m) + 1/m.
fn digamma_int(m: u32) -> f64 {
    debug_assert!(m >= 1);
    let mut v = -EULER_GAMMA;
    for j in 1..m {
        v += 1.0 / j as f64;
    }
    v
}

/// Ascending series for J_n, n >= 0. Terms are generated by recurrence and the
/// sum stops once a term drops below 1e-18 of the running partial sum.
fn bessel_j_series(n: u32, z: Complex64) -> Complex64 {
    let half = z / 2.0;
    let neg_q = -(half * half);
    // term_0 = (z/2)^n / n!
    let mut term = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        term *= half / k as f64;
    }
    let mut sum = term;
    for k in 1..200u32 {
        term *= neg_q / (k as f64 * (n + k) as f64);
        sum += term;
        if term.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}

/// Miller backward recurrence for J_n with Neumann-series normalization
/// J_0 + 2 (J_2 + J_4 + ...) = 1. Used for |z| > 8.
fn bessel_j_miller(n: u32, z: Complex64) -> Complex64 {
    let start = (z.norm().ceil() as u32).max(n) + 30;
    let m0 = if start % 2 == 0 { start } else { start + 1 };
    let mut fp = Complex64::new(0.0, 0.0); // f_{k+1}
    let mut fc = Complex64::new(1e-160, 0.0); // f_k
    let mut norm = Complex64::new(0.0, 0.0);
    let mut result = Complex64::new(0.0, 0.0);
    let mut k = m0 as i64;
    while k > 0 {
        let fm = (2.0 * k as f64 / z) * fc - fp; // f_{k-1}
        fp = fc;
        fc = fm;
        if (k - 1) % 2 == 0 && k - 1 > 0 {
            norm += fc;
        }
        if (k - 1) as u32 == n {
            result = fc;
        }
        // rescale to avoid overflow along the recurrence
        if fc.norm() > 1e250 {
            fp /= 1e250;
            fc /= 1e250;
            norm /= 1e250;
            result /= 1e250;
        }
        k -= 1;
    }
    let total = fc + 2.0 * norm;
    result / total
}

fn bessel_j_nonneg(n: u32, z: Complex64) -> Complex64 {
    if z.norm() == 0.0 {
        return if n == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        };
    }
    if z.norm() <= SERIES_J_CUTOFF {
        bessel_j_series(n, z)
    } else {
        bessel_j_miller(n, z)
    }
}

/// Log series for Y_n, n >= 0, |z| <= 12.
fn bessel_y_series(n: u32, z: Complex64) -> Complex64 {
    let half = z / 2.0;
    let log_half = half.ln();
    let jn = bessel_j_nonneg(n, z);
    let mut y = (2.0 / PI) * log_half * jn;

    // pole part: -(1/pi) sum_{k=0}^{n-1} ((n-1-k)!/k!) (z/2)^{2k-n}
    if n > 0 {
        // (z/2)^{-n} * (n-1)!  assembled factor by factor
        let mut term = Complex64::new(1.0, 0.0);
        for j in 1..=n {
            term *= j as f64 / half; // after loop: (n-1)!... see below
        }
        // loop above multiplies by n!/ (z/2)^n; correct to (n-1)!:
        term /= n as f64;
        let q = half * half;
        let mut sum = Complex64::new(0.0, 0.0);
        for k in 0..n {
            sum += term;
            // term_{k+1} = term_k * (z/2)^2 / ((k+1)(n-1-k))  [stops before k=n-1 overflow]
            if k + 1 < n {
                term *= q / ((k + 1) as f64 * (n - 1 - k) as f64);
            }
        }
        y -= sum / PI;
    }

    // psi part: -(1/pi) sum_k (-1)^k (psi(k+1)+psi(n+k+1)) (z/2)^{2k+n}/(k!(n+k)!)
    let mut base = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        base *= half / k as f64;
    }
    let neg_q = -(half * half);
    let mut psi_a = digamma_int(1);
    let mut psi_b = digamma_int(n + 1);
    let mut sum = base * (psi_a + psi_b);
    let mut term = base;
    for k in 1..200u32 {
        term *= neg_q / (k as f64 * (n + k) as f64);
        psi_a += 1.0 / k as f64;
        psi_b += 1.0 / (n + k) as f64;
        let contrib = term * (psi_a + psi_b);
        sum += contrib;
        if contrib.norm() < 1e-18 * sum.norm().max(1e-300) {
            break;
        }
    }
    y - sum / PI
}

/// Hankel asymptotic expansion for H_n^(1), |z| > 12. Terms are added until
/// they stop decreasing.
fn hankel1_asymptotic(n: u32, z: Complex64) -> Complex64 {
    let mu = 4.0 * (n as f64) * (n as f64);
    let i = Complex64::new(0.0, 1.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut prev_norm = f64::INFINITY;
    for k in 1..40u32 {
        let odd = (2 * k - 1) as f64;
        term *= i * (mu - odd * odd) / (8.0 * k as f64 * z);
        if term.norm() >= prev_norm {
            break;
        }
        prev_norm = term.norm();
        sum += term;
        if term.norm() < 1e-17 * sum.norm() {
            break;
        }
    }
    let phase = z - (n as f64) * PI / 2.0 - PI / 4.0;
    (2.0 / (PI * z)).sqrt() * (i * phase).exp() * sum
}

fn bessel_y_nonneg(n: u32, z: Complex64) -> Result<Complex64> {
    // guard: reject arguments whose Y_n value overflows f64
    if n > 0 {
        let lead = lgamma_int(n) + n as f64 * (2.0 / z.norm()).ln();
        if lead > 690.0 {
            return Err(Error::DomainError { re: z.re, im: z.im });
        }
    }
    if z.norm() <= SERIES_Y_CUTOFF {
        Ok(bessel_y_series(n, z))
    } else {
        // H_0, H_1 from asymptotics, upward recurrence (stable for Y/H), then Y = (H - J)/i
        let mut hm = hankel1_asymptotic(0, z);
        let mut hc = hankel1_asymptotic(1, z);
        if n == 0 {
            hc = hm;
        } else {
            for m in 1..n {
                let hn = (2.0 * m as f64 / z) * hc - hm;
                hm = hc;
                hc = hn;
            }
        }
        let j = bessel_j_nonneg(n, z);
        Ok((hc - j) / Complex64::new(0.0, 1.0))
    }
}

/// ln(n!) for modest n.
fn lgamma_int(n: u32) -> f64 {
    let mut v = 0.0;
    for j in 2..=n {
        v += (j as f64).ln();
    }
    v
}

fn parity_sign(n: i32) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Bessel function of the first kind J_n(z). Total on z = 0 (J_n(0) = delta_n0).
pub fn bessel_j(n: i32, z: Complex64) -> Result<Complex64> {
    check_domain(n, z, true)?;
    let v = bessel_j_nonneg(n.unsigned_abs(), z);
    Ok(if n < 0 { parity_sign(n) * v } else { v })
}

/// Bessel function of the second kind Y_n(z).
pub fn bessel_y(n: i32, z: Complex64) -> Result<Complex64> {
    check_domain(n, z, false)?;
    let v = bessel_y_nonneg(n.unsigned_abs(), z)?;
    Ok(if n < 0 { parity_sign(n) * v } else { v })
}

/// Hankel function of the first kind H_n^(1)(z) = J_n(z) + i Y_n(z).
pub fn hankel1(n: i32, z: Complex64) -> Result<Complex64> {
    check_domain(n, z, false)?;
    let m = n.unsigned_abs();
    let h = if z.norm() > SERIES_Y_CUTOFF {
        let mut hm = hankel1_asymptotic(0, z);
        let mut hc = hankel1_asymptotic(1, z);
        if m == 0 {
            hc = hm;
        } else {
            for k in 1..m {
                let hn = (2.0 * k as f64 / z) * hc - hm;
                hm = hc;
                hc = hn;
            }
        }
        hc
    } else {
        bessel_j_nonneg(m, z) + Complex64::new(0.0, 1.0) * bessel_y_nonneg(m, z)?
    };
    Ok(if n < 0 { parity_sign(n) * h } else { h })
}

/// d/dz J_n(z) = (J_{n-1}(z) - J_{n+1}(z)) / 2.
pub fn bessel_j_prime(n: i32, z: Complex64) -> Result<Complex64> {
    Ok((bessel_j(n - 1, z)? - bessel_j(n + 1, z)?) / 2.0)
}

/// d/dz Y_n(z).
pub fn bessel_y_prime(n: i32, z: Complex64) -> Result<Complex64> {
    Ok((bessel_y(n - 1, z)? - bessel_y(n + 1, z)?) / 2.0)
}

/// d/dz H_n^(1)(z) = (H_{n-1}^(1)(z) - H_{n+1}^(1)(z)) / 2.
pub fn hankel1_prime(n: i32, z: Complex64) -> Result<Complex64> {
    Ok((hankel1(n - 1, z)? - hankel1(n + 1, z)?) / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn j0_at_zero_is_one() {
        assert_eq!(bessel_j(0, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        assert_eq!(bessel_j(3, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn j1_small_argument_matches_hand_series() {
        // J_1(z) = z/2 - z^3/16 + z^5/384 - ...
        let z = 0.01f64;
        let expect = z / 2.0 - z.powi(3) / 16.0 + z.powi(5) / 384.0;
        let got = bessel_j(1, c(z, 0.0)).unwrap();
        assert!((got.re - expect).abs() < 1e-15, "got {got}");
        assert_eq!(got.im, 0.0);
    }

    #[test]
    fn classical_values_at_one() {
        // A&S table anchors
        assert!((bessel_j(0, c(1.0, 0.0)).unwrap().re - 0.7651976865579666).abs() < 1e-13);
        assert!((bessel_j(1, c(1.0, 0.0)).unwrap().re - 0.4400505857449335).abs() < 1e-13);
        assert!((bessel_y(0, c(1.0, 0.0)).unwrap().re - 0.0882569642156770).abs() < 1e-13);
        assert!((bessel_y(1, c(1.0, 0.0)).unwrap().re - (-0.7812128213002887)).abs() < 1e-13);
    }

    fn wronskian_residual(n: i32, z: Complex64) -> f64 {
        let w = bessel_j(n, z).unwrap() * bessel_y_prime(n, z).unwrap()
            - bessel_j_prime(n, z).unwrap() * bessel_y(n, z).unwrap();
        let exact = 2.0 / (PI * z);
        ((w - exact) / exact).norm()
    }

    #[test]
    fn wronskian_identity_quasistatic_points() {
        for &z in &[c(0.008, 0.0), c(0.05, 0.002), c(1.0, 0.0)] {
            for n in 0..6 {
                assert!(
                    wronskian_residual(n, z) < 1e-10,
                    "n={n} z={z} res={}",
                    wronskian_residual(n, z)
                );
            }
        }
    }

    #[test]
    fn wronskian_identity_moderate_arguments() {
        for &z in &[c(5.0, 0.0), c(10.0, 0.5), c(20.0, 1.0), c(29.0, 0.0)] {
            for n in 0..8 {
                assert!(
                    wronskian_residual(n, z) < 1e-7,
                    "n={n} z={z} res={}",
                    wronskian_residual(n, z)
                );
            }
        }
    }

    #[test]
    fn recurrence_consistency() {
        for &z in &[c(0.008, 0.0), c(0.05, 0.002), c(0.7, 0.1), c(2.0, 0.0)] {
            for n in 1..10 {
                let lhs_j = bessel_j(n - 1, z).unwrap() + bessel_j(n + 1, z).unwrap();
                let rhs_j = (2.0 * n as f64 / z) * bessel_j(n, z).unwrap();
                assert!(((lhs_j - rhs_j) / rhs_j).norm() < 1e-10, "J rec n={n} z={z}");
                let lhs_h = hankel1(n - 1, z).unwrap() + hankel1(n + 1, z).unwrap();
                let rhs_h = (2.0 * n as f64 / z) * hankel1(n, z).unwrap();
                assert!(((lhs_h - rhs_h) / rhs_h).norm() < 1e-10, "H rec n={n} z={z}");
            }
        }
    }

    #[test]
    fn hankel_log_behavior_near_zero() {
        // -(i/4) H_0^(1)(z) = (1/2pi) log|z| + tau_k + O(z^2 log z) with k = 1
        let z = c(1e-6, 0.0);
        let lhs = -Complex64::new(0.0, 0.25) * hankel1(0, z).unwrap();
        let tau_1 = Complex64::new((EULER_GAMMA - 2.0f64.ln()) / (2.0 * PI), -0.25);
        let rhs = c(z.re.ln() / (2.0 * PI), 0.0) + tau_1;
        assert!((lhs - rhs).norm() < 1e-10, "diff {}", (lhs - rhs).norm());
    }

    #[test]
    fn hankel1_leading_pole() {
        // z H_1^(1)(z) -> -2i/pi as z -> 0
        let z = c(1e-5, 0.0);
        let got = z * hankel1(1, z).unwrap();
        let lim = c(0.0, -2.0 / PI);
        assert!(((got - lim) / lim).norm() < 1e-8);
    }

    #[test]
    fn domain_errors() {
        assert!(hankel1(0, c(0.0, 0.0)).is_err());
        assert!(bessel_j(0, c(31.0, 0.0)).is_err());
        assert!(bessel_j(0, c(-1.0, 0.1)).is_err());
    }

    #[test]
    fn helmholtz_radial_ode_residual() {
        // u(r) = H_n^(1)(k r) solves u'' + u'/r + (k^2 - n^2/r^2) u = 0
        let k = 0.7;
        for n in 0..4 {
            let r = 1.3;
            let h = 1e-4;
            let u = |r: f64| hankel1(n, c(k * r, 0.0)).unwrap();
            let upp = (u(r + h) - 2.0 * u(r) + u(r - h)) / (h * h);
            let up = (u(r + h) - u(r - h)) / (2.0 * h);
            let res = upp + up / r + (k * k - (n * n) as f64 / (r * r)) * u(r);
            assert!(res.norm() < 1e-8 * u(r).norm().max(1.0), "n={n} res={res}");
        }
    }

    #[test]
    fn miller_matches_series_at_crossover() {
        for n in 0..12u32 {
            for &x in &[6.0, 7.9] {
                let s = bessel_j_series(n, c(x, 0.3));
                let m = bessel_j_miller(n, c(x, 0.3));
                assert!((s - m).norm() < 1e-12 * s.norm().max(1e-3), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn asymptotic_matches_series_at_crossover() {
        for n in 0..4 {
            let z = c(11.9, 0.4);
            let series = bessel_j_nonneg(n, z)
                + Complex64::new(0.0, 1.0) * bessel_y_series(n, z);
            let mut hm = hankel1_asymptotic(0, z);
            let mut hc = hankel1_asymptotic(1, z);
            if n == 0 {
                hc = hm;
            } else {
                for m in 1..n {
                    let hn = (2.0 * m as f64 / z) * hc - hm;
                    hm = hc;
                    hc = hn;
                }
            }
            assert!(
                ((series - hc) / hc).norm() < 1e-9,
                "n={n}: series {series} vs asym {hc}"
            );
        }
    }

    proptest! {
        #[test]
        fn conjugate_symmetry_real_axis(x in 1e-3f64..8.0, n in 0i32..10) {
            let v = bessel_j(n, c(x, 0.0)).unwrap();
            prop_assert!(v.im == 0.0);
        }

        #[test]
        fn negative_order_symmetry(x in 1e-3f64..6.0, n in 1i32..10) {
            let plus = bessel_j(n, c(x, 0.1)).unwrap();
            let minus = bessel_j(-n, c(x, 0.1)).unwrap();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert!((minus - sign * plus).norm() <= 1e-14 * plus.norm().max(1e-12));
        }
    }
}
