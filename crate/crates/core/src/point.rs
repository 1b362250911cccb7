//! Exponent pairs of monomials in two variables.

use std::fmt;

use crate::error::Error;

/// One of the two exponent axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// The exponent pair `(a, b)` of a monomial `x^a y^b`, doubling as a lattice
/// element of the generator semigroup and its folded point sets.
///
/// Ordering is lexicographic by `(a, b)`, which sorts staircase generator
/// lists into their canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    /// x-exponent.
    pub a: u64,
    /// y-exponent.
    pub b: u64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { a: 0, b: 0 };

    pub fn new(a: u64, b: u64) -> Self {
        LatticePoint { a, b }
    }

    /// Whether `x^a y^b` divides the monomial of `other`, i.e. both
    /// coordinates are componentwise `<=`.
    pub fn divides(&self, other: &LatticePoint) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    /// Componentwise sum (monomial product), overflow-checked.
    pub fn checked_add(&self, other: &LatticePoint) -> Result<LatticePoint, Error> {
        Ok(LatticePoint {
            a: self.a.checked_add(other.a).ok_or(Error::Overflow)?,
            b: self.b.checked_add(other.b).ok_or(Error::Overflow)?,
        })
    }

    /// Componentwise difference clamped at zero, as used by colon quotients.
    pub fn saturating_sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint {
            a: self.a.saturating_sub(other.a),
            b: self.b.saturating_sub(other.b),
        }
    }

    /// Componentwise maximum (monomial lcm); never overflows.
    pub fn join(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint {
            a: self.a.max(other.a),
            b: self.b.max(other.b),
        }
    }

    /// Scalar multiple `k * (a, b)`, overflow-checked.
    pub fn checked_scale(&self, k: u64) -> Result<LatticePoint, Error> {
        Ok(LatticePoint {
            a: self.a.checked_mul(k).ok_or(Error::Overflow)?,
            b: self.b.checked_mul(k).ok_or(Error::Overflow)?,
        })
    }

    /// Swap the two coordinates.
    pub fn transpose(&self) -> LatticePoint {
        LatticePoint { a: self.b, b: self.a }
    }
}

/// `ceil(x·y / z)` in exact integer arithmetic; `z` must be positive.
pub(crate) fn ceil_mul_div(x: u64, y: u64, z: u64) -> Result<u64, Error> {
    let prod = x as u128 * y as u128;
    let q = prod.div_ceil(z as u128);
    u64::try_from(q).map_err(|_| Error::Overflow)
}

impl From<(u64, u64)> for LatticePoint {
    fn from((a, b): (u64, u64)) -> Self {
        LatticePoint { a, b }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divides_is_componentwise() {
        let p = LatticePoint::new(2, 0);
        assert!(p.divides(&LatticePoint::new(2, 1)));
        assert!(!p.divides(&LatticePoint::new(1, 5)));
        assert!(LatticePoint::ORIGIN.divides(&p));
    }

    #[test]
    fn add_reports_overflow() {
        let p = LatticePoint::new(u64::MAX - 1, 0);
        assert_eq!(p.checked_add(&LatticePoint::new(2, 0)), Err(Error::Overflow));
        assert!(p.checked_add(&LatticePoint::new(1, 1)).is_ok());
    }

    #[test]
    fn scale_reports_overflow() {
        let p = LatticePoint::new(1, u64::MAX / 2 + 1);
        assert_eq!(p.checked_scale(2), Err(Error::Overflow));
    }
}
