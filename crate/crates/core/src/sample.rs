//! Deterministic sampling of hypothesis-satisfying staircases.
//!
//! The suites that cross-check the closure engine against the colon chain
//! draw their inputs here. A fixed seed reproduces the exact same staircases
//! on every platform, so failures are replayable from the seed alone.

use crate::ideal::PrimaryStaircase;
use crate::point::{ceil_mul_div, LatticePoint};

/// SplitMix64: tiny, well-distributed, and stable across builds.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform-enough draw from `lo..=hi` (modulo bias is irrelevant at
    /// suite scale). Requires `lo <= hi`.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.next_u64() % (hi - lo + 1)
    }
}

/// Draw a staircase whose generators all lie in the integral closure of its
/// corner ideal, by construction: corners are drawn first, then interior
/// points uniformly from the lattice region on or above the corner segment,
/// then the list is minimalized.
///
/// `max_corner` caps both corner exponents; `max_gens` caps the generator
/// count (at most `max_gens - 2` interior draws survive minimalization).
pub fn sample_primary_staircase(
    rng: &mut SplitMix64,
    max_corner: u64,
    max_gens: usize,
) -> PrimaryStaircase {
    assert!(max_corner >= 1 && max_gens >= 2);
    let corner_x = rng.range(1, max_corner);
    let corner_y = rng.range(1, max_corner);
    let mut points = vec![LatticePoint::new(0, corner_y), LatticePoint::new(corner_x, 0)];
    let interior_target = rng.range(0, (max_gens - 2) as u64);
    if corner_x >= 2 && corner_y >= 2 {
        for _ in 0..interior_target {
            let a = rng.range(1, corner_x - 1);
            // Smallest height at x = a that stays on or above the segment.
            let b_min = ceil_mul_div(corner_x - a, corner_y, corner_x)
                .expect("corner products fit in u64 at suite scale");
            if b_min < corner_y {
                let b = rng.range(b_min.max(1), corner_y - 1);
                points.push(LatticePoint::new(a, b));
            }
        }
    }
    PrimaryStaircase::from_points(points).expect("corners are present by construction")
}
