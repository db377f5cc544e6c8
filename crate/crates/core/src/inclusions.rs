//! Set-valued scalar primitives.
//!
//! The discontinuous right-hand sides used throughout this crate are built
//! from two inclusions: the signum map, which takes the whole interval
//! `[-1, 1]` at zero, and a shifted Heaviside map taking `[-1, 0]` at zero.
//! Explicit integration needs a single-valued selection of each; the
//! backward-Euler gain solver works with the full set and never selects.

use crate::error::{Error, Result};

/// A closed interval `[lo, hi]`, the value set of an inclusion at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalValue {
    pub lo: f64,
    pub hi: f64,
}

impl IntervalValue {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "interval lo must not exceed hi");
        Self { lo, hi }
    }

    /// Degenerate interval holding a single point.
    pub fn point(v: f64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Interval negation: `-[a, b] = [-b, -a]`.
    pub fn neg(&self) -> Self {
        Self {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

/// Set-valued signum: `x/|x|` away from zero, `[-1, 1]` at zero.
pub fn sgn_set(x: f64) -> Result<IntervalValue> {
    if !x.is_finite() {
        return Err(Error::InvalidInput {
            op: "sgn_set",
            value: x,
        });
    }
    Ok(if x > 0.0 {
        IntervalValue::point(1.0)
    } else if x < 0.0 {
        IntervalValue::point(-1.0)
    } else {
        IntervalValue::new(-1.0, 1.0)
    })
}

/// Single-valued signum selection used by the explicit integrators.
///
/// At zero this picks the midpoint of `[-1, 1]`, i.e. 0, the unique
/// symmetric selection.
#[inline]
pub fn sgn_select(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Set-valued shifted Heaviside map: 0 for `x > 0`, -1 for `x < 0`,
/// `[-1, 0]` at zero.
pub fn heaviside_set(x: f64) -> Result<IntervalValue> {
    if !x.is_finite() {
        return Err(Error::InvalidInput {
            op: "heaviside_set",
            value: x,
        });
    }
    Ok(if x > 0.0 {
        IntervalValue::point(0.0)
    } else if x < 0.0 {
        IntervalValue::point(-1.0)
    } else {
        IntervalValue::new(-1.0, 0.0)
    })
}

/// Midpoint selection of [`heaviside_set`]: -0.5 at zero.
#[inline]
pub fn heaviside_select(x: f64) -> f64 {
    if x > 0.0 {
        0.0
    } else if x < 0.0 {
        -1.0
    } else {
        -0.5
    }
}

/// Signed fractional power `|x|^p * sgn(x)`.
///
/// Continuous and odd for any `p > 0`, with value 0 at the origin.
#[inline]
pub fn signed_power(x: f64, p: f64) -> f64 {
    debug_assert!(p > 0.0, "signed_power exponent must be positive");
    x.abs().powf(p) * sgn_select(x)
}

/// Checked variant of [`signed_power`] for call sites fed by user input.
pub fn signed_power_checked(x: f64, p: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::InvalidInput {
            op: "signed_power",
            value: x,
        });
    }
    if !(p > 0.0) {
        return Err(Error::InvalidParameter {
            name: "p",
            value: p,
            constraint: "must be > 0",
        });
    }
    Ok(signed_power(x, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sgn_set_branches() {
        assert_eq!(sgn_set(2.0).unwrap(), IntervalValue::point(1.0));
        assert_eq!(sgn_set(-0.5).unwrap(), IntervalValue::point(-1.0));
        assert_eq!(sgn_set(0.0).unwrap(), IntervalValue::new(-1.0, 1.0));
        assert!(sgn_set(f64::NAN).is_err());
        assert!(sgn_set(f64::INFINITY).is_err());
    }

    #[test]
    fn sgn_select_branches() {
        assert_eq!(sgn_select(3.0), 1.0);
        assert_eq!(sgn_select(-3.0), -1.0);
        assert_eq!(sgn_select(0.0), 0.0);
    }

    #[test]
    fn heaviside_set_branches() {
        assert_eq!(heaviside_set(1.0).unwrap(), IntervalValue::point(0.0));
        assert_eq!(heaviside_set(-1.0).unwrap(), IntervalValue::point(-1.0));
        assert_eq!(heaviside_set(0.0).unwrap(), IntervalValue::new(-1.0, 0.0));
        assert!(heaviside_set(f64::NAN).is_err());
    }

    #[test]
    fn signed_power_values() {
        assert_eq!(signed_power(4.0, 0.5), 2.0);
        assert!((signed_power(-8.0, 1.0 / 3.0) + 2.0).abs() < 1e-15);
        assert_eq!(signed_power(0.0, 0.5), 0.0);
        assert!(signed_power_checked(1.0, 0.0).is_err());
        assert!(signed_power_checked(1.0, -1.0).is_err());
        assert!(signed_power_checked(f64::INFINITY, 0.5).is_err());
    }

    proptest! {
        #[test]
        fn selection_lies_in_set(x in -1e6f64..1e6) {
            let set = sgn_set(x).unwrap();
            prop_assert!(set.contains(sgn_select(x)));
            let hset = heaviside_set(x).unwrap();
            prop_assert!(hset.contains(heaviside_select(x)));
        }

        #[test]
        fn sgn_set_is_odd(x in -1e6f64..1e6) {
            let a = sgn_set(x).unwrap();
            let b = sgn_set(-x).unwrap();
            prop_assert_eq!(a.neg(), b);
        }

        #[test]
        fn signed_power_odd_and_monotone(
            x in -1e3f64..1e3,
            y in -1e3f64..1e3,
            p in 0.1f64..3.0,
        ) {
            let fx = signed_power(x, p);
            prop_assert!((signed_power(-x, p) + fx).abs() <= 1e-12 * fx.abs().max(1.0));
            if x < y {
                prop_assert!(fx <= signed_power(y, p));
            }
        }
    }
}
