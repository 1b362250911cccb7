//! Constructors for the named staircase families.
//!
//! All constructors validate their parameters and return staircases that
//! pass the corner-membership hypothesis by construction.

use crate::closure::{HypothesisFailure, HypothesisVerdict};
use crate::error::Error;
use crate::ideal::PrimaryStaircase;
use crate::point::{ceil_mul_div, LatticePoint};

/// Height of the corner segment of `(c, d)` above x-exponent `i`:
/// `ceil((c-i)·d/c)`. The staircase of these values is the integral closure
/// of `<x^c, y^d>`.
fn mu(c: u64, d: u64, i: u64) -> Result<u64, Error> {
    ceil_mul_div(c - i, d, c)
}

/// The two-generator staircase `<x^c, y^d>`.
pub fn family_two(c: u64, d: u64) -> Result<PrimaryStaircase, Error> {
    if c < 1 || d < 1 {
        return Err(Error::InvalidParams("corner exponents must be positive".into()));
    }
    PrimaryStaircase::from_points([LatticePoint::new(0, d), LatticePoint::new(c, 0)])
}

/// The three-generator staircase `<x^c, x^u y^v, y^d>` with the middle
/// generator inside the integral closure of the corner ideal. Middle
/// generators below the corner segment are refused with the exact deficit.
pub fn family_three(c: u64, d: u64, u: u64, v: u64) -> Result<PrimaryStaircase, Error> {
    if c < 1 || d < 1 || u == 0 || u >= c || v == 0 || v >= d {
        return Err(Error::InvalidParams(
            "middle generator must lie strictly inside the corner box".into(),
        ));
    }
    let corner = c.checked_mul(d).ok_or(Error::Overflow)?;
    let weight = u
        .checked_mul(d)
        .and_then(|ud| v.checked_mul(c).and_then(|vc| ud.checked_add(vc)))
        .ok_or(Error::Overflow)?;
    if weight < corner {
        return Err(Error::HypothesisViolated(HypothesisVerdict::from_failures(vec![
            HypothesisFailure {
                generator: LatticePoint::new(u, v),
                deficit: (corner - weight, corner),
            },
        ])));
    }
    PrimaryStaircase::from_points([
        LatticePoint::new(0, d),
        LatticePoint::new(u, v),
        LatticePoint::new(c, 0),
    ])
}

/// Parameters of the block-decomposition family: `c = n_1 c_1 + ... + n_r c_r`
/// with each block size dividing the previous one, on the corner `(c, d)`
/// with `c <= d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaParams {
    d: u64,
    c: u64,
    /// `(count, size)` per block, i.e. `(n_i, c_i)`.
    parts: Vec<(u64, u64)>,
}

impl SigmaParams {
    pub fn new(d: u64, c: u64, parts: Vec<(u64, u64)>) -> Result<SigmaParams, Error> {
        if c < 1 || c > d {
            return Err(Error::InvalidParams("need 1 <= c <= d".into()));
        }
        if parts.is_empty() {
            return Err(Error::InvalidParams("at least one block is required".into()));
        }
        let mut total: u128 = 0;
        for (idx, &(count, size)) in parts.iter().enumerate() {
            if count == 0 || size == 0 {
                return Err(Error::InvalidParams("block counts and sizes must be positive".into()));
            }
            if idx > 0 {
                let prev = parts[idx - 1].1;
                if !prev.is_multiple_of(size) {
                    return Err(Error::InvalidParams(format!(
                        "block size {size} does not divide the previous size {prev}"
                    )));
                }
            }
            total += count as u128 * size as u128;
        }
        if total != c as u128 {
            return Err(Error::InvalidParams(format!(
                "blocks sum to {total}, expected {c}"
            )));
        }
        Ok(SigmaParams { d, c, parts })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn parts(&self) -> &[(u64, u64)] {
        &self.parts
    }
}

/// The block-decomposition staircase: x-exponents walk through every prefix
/// `q·c_(j+1) + Σ_(i<=j) n_i c_i`, each carrying the corner-segment height
/// as its y-exponent. Always contains `(0, d)` and `(c, 0)`.
pub fn family_sigma(params: &SigmaParams) -> Result<PrimaryStaircase, Error> {
    let mut gens = vec![LatticePoint::new(0, params.d)];
    let mut prefix: u64 = 0;
    for &(count, size) in &params.parts {
        for q in 1..=count {
            let sigma = prefix + q * size; // bounded by c per validation
            gens.push(LatticePoint::new(sigma, mu(params.c, params.d, sigma)?));
        }
        prefix += count * size;
    }
    PrimaryStaircase::from_points(gens)
}

/// The dense-top staircase `<y^d, x^(d-k) y^k, x^(d-k+1) y^(k-1), ..., x^d>`
/// built from its explicit generator list.
pub fn family_crispin(d: u64, k: u64) -> Result<PrimaryStaircase, Error> {
    if k < 1 || k >= d {
        return Err(Error::InvalidParams("need 1 <= k < d".into()));
    }
    let mut gens = vec![LatticePoint::new(0, d)];
    for i in 0..=k {
        gens.push(LatticePoint::new(d - k + i, k - i));
    }
    PrimaryStaircase::from_points(gens)
}

/// Block encoding that expands to the same ideal as [`family_crispin`]:
/// a single block of size `d - k` followed by `k` unit steps. (The naive
/// encoding with the block sizes swapped inserts an extra generator
/// `x^k y^(d-k)`; see the regression tests.)
pub fn crispin_sigma_params(d: u64, k: u64) -> Result<SigmaParams, Error> {
    if k < 1 || k >= d {
        return Err(Error::InvalidParams("need 1 <= k < d".into()));
    }
    SigmaParams::new(d, d, vec![(1, d - k), (k, 1)])
}

/// The two-block staircase `<x^(im) y^(m(k+1-i)-1)>_(i=0..k) +
/// <x^(km+j) y^(m-j-1)>_(j=0..m-1)`, from its explicit generator lists.
pub fn family_mk(m: u64, k: u64) -> Result<PrimaryStaircase, Error> {
    if m < 1 || k < 1 {
        return Err(Error::InvalidParams("need m >= 1 and k >= 1".into()));
    }
    let mut gens = Vec::new();
    for i in 0..=k {
        let a = i.checked_mul(m).ok_or(Error::Overflow)?;
        let b = m
            .checked_mul(k + 1 - i)
            .and_then(|t| t.checked_sub(1))
            .ok_or(Error::Overflow)?;
        gens.push(LatticePoint::new(a, b));
    }
    let km = k.checked_mul(m).ok_or(Error::Overflow)?;
    for j in 0..m {
        gens.push(LatticePoint::new(km + j, m - j - 1));
    }
    PrimaryStaircase::from_points(gens)
}

/// Block encoding equal to [`family_mk`]: `k` blocks of size `m`, then
/// `m - 1` unit steps, on the symmetric corner `c = d = m(k+1) - 1`.
pub fn mk_sigma_params(m: u64, k: u64) -> Result<SigmaParams, Error> {
    if m < 1 || k < 1 {
        return Err(Error::InvalidParams("need m >= 1 and k >= 1".into()));
    }
    let c = m
        .checked_mul(k + 1)
        .and_then(|t| t.checked_sub(1))
        .ok_or(Error::Overflow)?;
    let mut parts = vec![(k, m)];
    if m >= 2 {
        parts.push((m - 1, 1));
    }
    SigmaParams::new(c, c, parts)
}

/// A staircase with many generators but a five-generator closure: the four
/// corner-segment generators at `0, c/4, 3c/4, c` plus a run of `c/4`
/// generators stepping down from `x^(c/2+c/4-1) y^(mu(c/2))` to
/// `x^(c/2) y^(mu(c/2)+c/4-1)`. The run sits strictly between the segment
/// generators (an antichain), yet collapses onto `x^(c/2) y^(mu(c/2))` in
/// the closure, so the minimal generator count drops from `c/4 + 4` to 5.
pub fn family_generator_gap(c: u64, d: u64) -> Result<PrimaryStaircase, Error> {
    if c < 4 || !c.is_multiple_of(4) || !d.is_multiple_of(4) {
        return Err(Error::InvalidParams("both corner exponents must be multiples of 4".into()));
    }
    if c > d {
        return Err(Error::InvalidParams("need c <= d".into()));
    }
    let quarter = c / 4;
    let half = c / 2;
    let mid_height = mu(c, d, half)?;
    let mut gens = vec![
        LatticePoint::new(0, d),
        LatticePoint::new(quarter, mu(c, d, quarter)?),
        LatticePoint::new(3 * quarter, mu(c, d, 3 * quarter)?),
        LatticePoint::new(c, 0),
    ];
    for t in 1..=quarter {
        gens.push(LatticePoint::new(
            half + quarter - t,
            mid_height.checked_add(t - 1).ok_or(Error::Overflow)?,
        ));
    }
    PrimaryStaircase::from_points(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::check_hypothesis;

    fn pts(list: &[(u64, u64)]) -> Vec<LatticePoint> {
        list.iter().map(|&p| LatticePoint::from(p)).collect()
    }

    #[test]
    fn two_generator_family() {
        assert_eq!(family_two(2, 3).unwrap().gens(), pts(&[(0, 3), (2, 0)]).as_slice());
        assert_eq!(family_two(8, 8).unwrap().gens(), pts(&[(0, 8), (8, 0)]).as_slice());
        assert!(family_two(0, 3).is_err());
    }

    #[test]
    fn three_generator_family() {
        assert_eq!(
            family_three(7, 5, 5, 2).unwrap().gens(),
            pts(&[(0, 5), (5, 2), (7, 0)]).as_slice()
        );
        assert_eq!(
            family_three(4, 4, 3, 1).unwrap().gens(),
            pts(&[(0, 4), (3, 1), (4, 0)]).as_slice()
        );
        // 6·14 + 1·7 = 91 < 98: below the corner segment.
        match family_three(7, 14, 6, 1) {
            Err(Error::HypothesisViolated(v)) => {
                assert_eq!(v.failures()[0].generator, LatticePoint::new(6, 1));
                assert_eq!(v.failures()[0].deficit, (7, 98));
            }
            other => panic!("expected hypothesis violation, got {other:?}"),
        }
        assert!(matches!(family_three(7, 5, 7, 2), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn sigma_family_matches_the_block_walk() {
        let p = SigmaParams::new(20, 17, vec![(2, 4), (3, 2), (3, 1)]).unwrap();
        let i = family_sigma(&p).unwrap();
        assert_eq!(
            i.gens(),
            pts(&[
                (0, 20),
                (4, 16),
                (8, 11),
                (10, 9),
                (12, 6),
                (14, 4),
                (15, 3),
                (16, 2),
                (17, 0)
            ])
            .as_slice()
        );

        let p = SigmaParams::new(20, 17, vec![(1, 5), (12, 1)]).unwrap();
        let i = family_sigma(&p).unwrap();
        assert_eq!(i.gens().len(), 14);
        let xs: Vec<u64> = i.gens().iter().map(|g| g.a).collect();
        assert_eq!(xs, vec![0, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17]);
    }

    #[test]
    fn sigma_params_are_validated() {
        assert!(SigmaParams::new(20, 17, vec![(2, 4), (3, 3)]).is_err()); // 3 ∤ 4
        assert!(SigmaParams::new(20, 17, vec![(2, 4), (3, 2), (2, 1)]).is_err()); // sums to 16
        assert!(SigmaParams::new(10, 17, vec![(17, 1)]).is_err()); // c > d
        assert!(SigmaParams::new(20, 17, vec![]).is_err());
    }

    #[test]
    fn crispin_family_from_the_explicit_list() {
        assert_eq!(
            family_crispin(5, 2).unwrap().gens(),
            pts(&[(0, 5), (3, 2), (4, 1), (5, 0)]).as_slice()
        );
        assert_eq!(
            family_crispin(4, 1).unwrap().gens(),
            pts(&[(0, 4), (3, 1), (4, 0)]).as_slice()
        );
        // k = d−1 fills the whole corner segment.
        assert_eq!(
            family_crispin(4, 3).unwrap().gens(),
            pts(&[(0, 4), (1, 3), (2, 2), (3, 1), (4, 0)]).as_slice()
        );
    }

    #[test]
    fn crispin_block_encoding_reproduces_the_explicit_list() {
        for d in 2..=9u64 {
            for k in 1..d {
                let via_blocks = family_sigma(&crispin_sigma_params(d, k).unwrap()).unwrap();
                assert_eq!(via_blocks, family_crispin(d, k).unwrap(), "d={d} k={k}");
            }
        }
    }

    #[test]
    fn swapped_crispin_encoding_gains_an_extra_generator() {
        // Blocks (1, k) then (d-k, 1) walk through x = k first, inserting
        // x^k y^(d-k); the explicit list has no generator at x = k in general.
        let (d, k) = (5u64, 2u64);
        let swapped = family_sigma(&SigmaParams::new(d, d, vec![(1, k), (d - k, 1)]).unwrap()).unwrap();
        assert_ne!(swapped, family_crispin(d, k).unwrap());
        assert!(swapped.gens().contains(&LatticePoint::new(2, 3)));
        assert_eq!(swapped.gens().len(), family_crispin(d, k).unwrap().gens().len() + 1);
    }

    #[test]
    fn mk_family_and_its_block_encoding_agree() {
        assert_eq!(
            family_mk(2, 2).unwrap().gens(),
            pts(&[(0, 5), (2, 3), (4, 1), (5, 0)]).as_slice()
        );
        for m in 1..=5u64 {
            for k in 1..=5u64 {
                let explicit = family_mk(m, k).unwrap();
                let via_blocks = family_sigma(&mk_sigma_params(m, k).unwrap()).unwrap();
                assert_eq!(explicit, via_blocks, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn generator_gap_family_counts() {
        let i = family_generator_gap(8, 8).unwrap();
        assert_eq!(
            i.gens(),
            pts(&[(0, 8), (2, 6), (4, 5), (5, 4), (6, 2), (8, 0)]).as_slice()
        );
        assert_eq!(i.ideal().generator_count(), 8 / 4 + 4);

        let i = family_generator_gap(12, 16).unwrap();
        assert_eq!(
            i.gens(),
            pts(&[(0, 16), (3, 12), (6, 10), (7, 9), (8, 8), (9, 4), (12, 0)]).as_slice()
        );
        assert_eq!(i.ideal().generator_count(), 12 / 4 + 4);

        assert!(family_generator_gap(10, 12).is_err());
        assert!(family_generator_gap(12, 8).is_err());
    }

    #[test]
    fn every_family_output_passes_the_hypothesis() {
        let samples = vec![
            family_two(5, 7).unwrap(),
            family_three(7, 5, 5, 2).unwrap(),
            family_crispin(6, 3).unwrap(),
            family_mk(3, 2).unwrap(),
            family_sigma(&SigmaParams::new(20, 17, vec![(2, 4), (3, 2), (3, 1)]).unwrap()).unwrap(),
            family_generator_gap(16, 20).unwrap(),
        ];
        for s in samples {
            assert!(check_hypothesis(&s).unwrap().ok(), "{s} fails the gate");
        }
    }
}
