//! Angle wrapping helpers shared by the geometry and estimation modules.

use std::f64::consts::{PI, TAU};

/// Wrap an angle to `[0, 2*pi)`.
pub fn wrap_two_pi(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    // rem_euclid can return TAU itself for inputs just below 0.0
    if r >= TAU {
        r - TAU
    } else {
        r
    }
}

/// Wrap an angle to `(-pi, pi]`.
pub fn wrap_pi(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Absolute angular distance between two angles, in `[0, pi]`.
pub fn angular_distance(a: f64, b: f64) -> f64 {
    wrap_pi(a - b).abs()
}

/// Distance of `x` from the nearest multiple of `2*pi`, in `[0, pi]`.
pub fn distance_to_zero_mod_two_pi(x: f64) -> f64 {
    angular_distance(x, 0.0)
}

/// Circular mean of a slice of angles. Returns 0 for an empty slice.
pub fn circular_mean(angles: impl IntoIterator<Item = f64>) -> f64 {
    let (mut s, mut c, mut n) = (0.0, 0.0, 0usize);
    for a in angles {
        s += a.sin();
        c += a.cos();
        n += 1;
    }
    if n == 0 {
        0.0
    } else {
        s.atan2(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wrap_two_pi_range() {
        for i in -1000..1000 {
            let x = i as f64 * 0.137;
            let w = wrap_two_pi(x);
            assert!((0.0..TAU).contains(&w), "{x} -> {w}");
            assert!((w - x).rem_euclid(TAU).abs() < 1e-9 || ((w - x).rem_euclid(TAU) - TAU).abs() < 1e-9);
        }
    }

    #[test]
    fn wrap_pi_range_and_convention() {
        for i in -1000..1000 {
            let x = i as f64 * 0.173;
            let w = wrap_pi(x);
            assert!(w > -PI && w <= PI, "{x} -> {w}");
        }
        // pi maps to pi, not -pi
        assert_eq!(wrap_pi(PI), PI);
        assert_eq!(wrap_pi(-PI), PI);
    }

    #[test]
    fn forced_wrap_example() {
        // phi[k-1]=6.2, phi[k]=0.2 -> difference re-wraps to ~0.2832
        let d = wrap_pi(0.2 - 6.2);
        assert!((d - (0.2 - 6.2 + TAU)).abs() < 1e-12);
        assert!((d - 0.2831853).abs() < 1e-6);
    }

    #[test]
    fn circular_mean_handles_wrap() {
        let m = circular_mean([3.1, -3.1]);
        assert!(angular_distance(m, PI) < 1e-9);
    }
}
