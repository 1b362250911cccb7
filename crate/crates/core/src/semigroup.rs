//! Folding the generator semigroup into the corner box.
//!
//! The generators of a primary staircase span a semigroup in Z²: all sums
//! `Σ λ_i (a_i, b_i)` with nonnegative multiplicities. Two point sets inside
//! the box `[0, a_n] × [0, b_0]` drive the closure computation:
//!
//! * the y-fold: points `(α, β)` with `(α, β + k·b_0)` in the semigroup for
//!   some `k >= 0`, and
//! * the x-fold: points `(α, β)` with `(α + k·a_n, β)` in the semigroup.
//!
//! Under the corner-membership hypothesis, a semigroup element with
//! multiplicity total `l` and `α <= a_n` folds by exactly `k = l − 1`
//! periods, so the fold is enumerated exhaustively by a depth-first walk
//! over multiplicity tuples pruned at the corner: the emitted point is
//! `(Σ λ_i a_i, Σ λ_i b_i − (l−1)·b_0)`. The multiplicity of the y-corner
//! generator is pinned to zero — each unit of it raises both `l` and the
//! y-total by one full period, leaving the emitted point unchanged — and the
//! corner point `(0, b_0)` is added explicitly. A negative shift cannot
//! occur when the hypothesis holds and is reported as
//! [`Error::NegativeShift`] when it does.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::ideal::{MonomialIdeal, PrimaryStaircase};
use crate::point::{Axis, LatticePoint};

/// The generator data of the fold enumeration: a primary staircase read as
/// a semigroup generating set, with its two corner exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupDescription {
    generators: Vec<LatticePoint>,
    corner_x: u64,
    corner_y: u64,
}

impl SemigroupDescription {
    /// Validates the generator list as a primary staircase.
    pub fn new(generators: Vec<LatticePoint>) -> Result<SemigroupDescription, Error> {
        let staircase = PrimaryStaircase::from_points(generators.clone())?;
        if staircase.gens() != generators.as_slice() {
            return Err(Error::NotPrimary(
                "generators are not a sorted minimal staircase".into(),
            ));
        }
        Ok(SemigroupDescription::from_staircase(&staircase))
    }

    pub fn from_staircase(staircase: &PrimaryStaircase) -> SemigroupDescription {
        SemigroupDescription {
            generators: staircase.gens().to_vec(),
            corner_x: staircase.corner_x(),
            corner_y: staircase.corner_y(),
        }
    }

    pub fn generators(&self) -> &[LatticePoint] {
        &self.generators
    }

    pub fn corner_x(&self) -> u64 {
        self.corner_x
    }

    pub fn corner_y(&self) -> u64 {
        self.corner_y
    }

    /// Mirror description with the two axes swapped; swapping reverses the
    /// staircase order.
    fn transpose(&self) -> SemigroupDescription {
        let mut generators: Vec<LatticePoint> =
            self.generators.iter().rev().map(LatticePoint::transpose).collect();
        generators.shrink_to_fit();
        SemigroupDescription {
            generators,
            corner_x: self.corner_y,
            corner_y: self.corner_x,
        }
    }
}

impl From<&PrimaryStaircase> for SemigroupDescription {
    fn from(staircase: &PrimaryStaircase) -> Self {
        SemigroupDescription::from_staircase(staircase)
    }
}

/// A fold result: the full point set together with its minimal antichain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: BTreeSet<LatticePoint>,
    minimal: Vec<LatticePoint>,
}

impl PointSet {
    pub fn points(&self) -> &BTreeSet<LatticePoint> {
        &self.points
    }

    /// Componentwise-minimal points, sorted by increasing x-exponent.
    pub fn minimal(&self) -> &[LatticePoint] {
        &self.minimal
    }

    /// The monomial ideal generated by the point set.
    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::generated_by(self.minimal.iter().copied())
    }

    fn from_points(points: BTreeSet<LatticePoint>) -> PointSet {
        let minimal = minimal_points(points.iter().copied());
        PointSet { points, minimal }
    }

    fn transpose(&self) -> PointSet {
        PointSet::from_points(self.points.iter().map(LatticePoint::transpose).collect())
    }
}

/// Componentwise-minimal elements of an arbitrary point collection, sorted
/// by increasing x-exponent.
pub fn minimal_points<I>(points: I) -> Vec<LatticePoint>
where
    I: IntoIterator<Item = LatticePoint>,
{
    // Identical to staircase normalization: an antichain that generates the
    // same upward-closed set.
    MonomialIdeal::generated_by(points).gens().to_vec()
}

/// How a tuple's y-total is brought back into the box.
#[derive(Clone, Copy, PartialEq, Eq)]
enum ShiftRule {
    /// Subtract exactly `(l−1)` periods; error when that would go negative.
    /// This is the fold the closure theory relies on.
    Exact,
    /// Reduce modulo the period. Agrees with `Exact` whenever the hypothesis
    /// holds and stays total when it does not; used by diagnostics.
    Reduced,
}

fn enumerate_fold(desc: &SemigroupDescription, rule: ShiftRule) -> Result<PointSet, Error> {
    let corner_x = desc.corner_x;
    let corner_y = desc.corner_y;
    // Indices 1..=n: the y-corner generator is pinned out of the walk.
    let gens = &desc.generators()[1..];

    let mut points: BTreeSet<LatticePoint> = BTreeSet::new();
    points.insert(LatticePoint::new(0, corner_y));

    // Explicit-stack walk over multiplicity tuples: a frame (i, sa, sb, l)
    // means "sums so far (sa, sb) over l picks, next pick from index >= i".
    let mut stack: Vec<(usize, u64, u128, u64)> = vec![(0, 0, 0, 0)];
    while let Some((i, sa, sb, l)) = stack.pop() {
        if i >= gens.len() {
            continue;
        }
        let g = gens[i];
        let na = match sa.checked_add(g.a) {
            Some(v) if v <= corner_x => v,
            // x-exponents increase along the staircase: neither this
            // generator nor any later one fits from this state.
            _ => continue,
        };
        stack.push((i + 1, sa, sb, l));
        let nb = sb + g.b as u128;
        let nl = l + 1;
        let beta = match rule {
            ShiftRule::Exact => {
                let shift = (nl - 1) as u128 * corner_y as u128;
                if nb < shift {
                    return Err(Error::NegativeShift {
                        axis: Axis::Y,
                        along: na,
                        shortfall: (shift - nb) as u64,
                    });
                }
                (nb - shift) as u64
            }
            ShiftRule::Reduced => (nb % corner_y as u128) as u64,
        };
        points.insert(LatticePoint::new(na, beta));
        stack.push((i, na, nb, nl));
    }
    Ok(PointSet::from_points(points))
}

/// Enumerate the y-fold of the semigroup: every point of the box whose
/// lift by some whole number of `b_0`-periods lies in the semigroup.
///
/// Assumes the staircase passed the corner-membership hypothesis; on inputs
/// that violate it the walk can hit a negative shift, reported as an error.
pub fn enumerate_y_fold(desc: &SemigroupDescription) -> Result<PointSet, Error> {
    enumerate_fold(desc, ShiftRule::Exact)
}

/// Mirror of [`enumerate_y_fold`]: lifts by whole `a_n`-periods along x.
pub fn enumerate_x_fold(desc: &SemigroupDescription) -> Result<PointSet, Error> {
    let folded = enumerate_fold(&desc.transpose(), ShiftRule::Exact).map_err(|e| match e {
        Error::NegativeShift { along, shortfall, .. } => Error::NegativeShift {
            axis: Axis::X,
            along,
            shortfall,
        },
        other => other,
    })?;
    Ok(folded.transpose())
}

/// Hypothesis-free variant of the y-fold for diagnostics: reduces each
/// tuple's y-total modulo the period instead of insisting on the exact
/// `(l−1)`-period shift. Generates the same ideal as [`enumerate_y_fold`]
/// whenever the hypothesis holds.
pub(crate) fn enumerate_y_fold_reduced(desc: &SemigroupDescription) -> Result<PointSet, Error> {
    enumerate_fold(desc, ShiftRule::Reduced)
}

/// Hypothesis-free variant of the x-fold; see [`enumerate_y_fold_reduced`].
pub(crate) fn enumerate_x_fold_reduced(desc: &SemigroupDescription) -> Result<PointSet, Error> {
    Ok(enumerate_fold(&desc.transpose(), ShiftRule::Reduced)?.transpose())
}

/// Per-axis bounds on fold tuple length: `(floor(a_n / a_1), floor(b_0 / b_(n-1)))`
/// where `a_1` is the smallest nonzero x-exponent among the generators and
/// `b_(n-1)` the smallest nonzero y-exponent. Every y-fold tuple has length
/// at most the first bound, every x-fold tuple at most the second. For the
/// two-generator staircase `<x^c, y^d>` both bounds are 1.
pub fn fold_bounds(desc: &SemigroupDescription) -> (u64, u64) {
    let gens = desc.generators();
    let smallest_x = gens[1].a;
    let smallest_y = gens[gens.len() - 2].b;
    (desc.corner_x / smallest_x, desc.corner_y / smallest_y)
}
