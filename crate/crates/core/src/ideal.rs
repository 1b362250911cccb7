//! Monomial ideals in two variables, kept in staircase normal form.

use std::fmt;

use crate::error::Error;
use crate::point::LatticePoint;

/// A monomial ideal, stored as its unique minimal generating antichain
/// sorted by strictly increasing x-exponent (hence strictly decreasing
/// y-exponent). Equal ideals compare equal as generator lists.
///
/// The empty list is the zero ideal; `[(0,0)]` is the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MonomialIdeal {
    gens: Vec<LatticePoint>,
}

impl MonomialIdeal {
    /// Staircase normal form of an arbitrary generating set: duplicates and
    /// points divisible by another input point are dropped, the survivors
    /// sorted by increasing x-exponent.
    pub fn generated_by<I>(points: I) -> MonomialIdeal
    where
        I: IntoIterator<Item = LatticePoint>,
    {
        let mut pts: Vec<LatticePoint> = points.into_iter().collect();
        pts.sort_unstable();
        let mut gens: Vec<LatticePoint> = Vec::with_capacity(pts.len());
        for p in pts {
            // Sorted by (a asc, b asc), the kept y-exponents strictly
            // decrease, so the last kept one is the running minimum and p is
            // redundant exactly when it does not drop below it.
            if gens.last().is_none_or(|last| p.b < last.b) {
                gens.push(p);
            }
        }
        MonomialIdeal { gens }
    }

    pub fn zero() -> MonomialIdeal {
        MonomialIdeal { gens: Vec::new() }
    }

    pub fn unit() -> MonomialIdeal {
        MonomialIdeal { gens: vec![LatticePoint::ORIGIN] }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&LatticePoint::ORIGIN)
    }

    /// Minimal generators in staircase order.
    pub fn gens(&self) -> &[LatticePoint] {
        &self.gens
    }

    /// Number of minimal generators, written `μ(I)`.
    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    /// Monomial membership: some generator divides `m`.
    pub fn contains(&self, m: &LatticePoint) -> bool {
        // Generators are sorted by a; the candidate divisor with the lowest
        // y-exponent among those with g.a <= m.a is the last such.
        let idx = self.gens.partition_point(|g| g.a <= m.a);
        idx > 0 && self.gens[idx - 1].b <= m.b
    }

    /// Ideal containment `other ⊆ self`, decided generator-wise.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Intersection of two staircases.
    ///
    /// Equals the normal form of `{ lcm(g, h) : g ∈ self, h ∈ other }`,
    /// computed as the upper envelope of the two step functions in a single
    /// merge sweep over the x-coordinates.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        if self.is_zero() || other.is_zero() {
            return MonomialIdeal::zero();
        }
        let (xs, ys) = (&self.gens, &other.gens);
        let mut gens = Vec::new();
        let (mut i, mut j) = (0usize, 0usize);
        // Current step heights; a staircase has no points left of its first
        // generator, so the envelope starts once both heights exist.
        let (mut ha, mut hb): (Option<u64>, Option<u64>) = (None, None);
        let mut last_emitted = u64::MAX;
        while i < xs.len() || j < ys.len() {
            let x = match (xs.get(i), ys.get(j)) {
                (Some(p), Some(q)) => p.a.min(q.a),
                (Some(p), None) => p.a,
                (None, Some(q)) => q.a,
                (None, None) => unreachable!(),
            };
            if i < xs.len() && xs[i].a == x {
                ha = Some(xs[i].b);
                i += 1;
            }
            if j < ys.len() && ys[j].a == x {
                hb = Some(ys[j].b);
                j += 1;
            }
            if let (Some(pa), Some(pb)) = (ha, hb) {
                let need = pa.max(pb);
                if gens.is_empty() || need < last_emitted {
                    gens.push(LatticePoint::new(x, need));
                    last_emitted = need;
                }
            }
        }
        MonomialIdeal { gens }
    }

    /// Product ideal: normal form of all pairwise generator sums.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, Error> {
        let mut pts = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                pts.push(g.checked_add(h)?);
            }
        }
        Ok(MonomialIdeal::generated_by(pts))
    }

    /// `l`-th power by repeated multiplication, normalizing after every step
    /// so intermediate generator counts stay linear in `l`.
    ///
    /// `pow(0)` is the unit ideal; the zero ideal powers to itself for `l >= 1`.
    pub fn pow(&self, l: u64) -> Result<MonomialIdeal, Error> {
        let mut acc = MonomialIdeal::unit();
        for _ in 0..l {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Monomial multiple `x^by.a y^by.b * self`; stays in normal form.
    pub fn shift(&self, by: &LatticePoint) -> Result<MonomialIdeal, Error> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.checked_add(by))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MonomialIdeal { gens })
    }

    /// Colon quotient `self : divisor`, the intersection over the divisor's
    /// generators `h` of the clamped shifts `{ (g − h) ∨ 0 : g ∈ self }`.
    ///
    /// `I : 0` is the unit ideal and `0 : J` is zero.
    pub fn colon(&self, divisor: &MonomialIdeal) -> MonomialIdeal {
        if divisor.is_zero() {
            return MonomialIdeal::unit();
        }
        if self.is_zero() {
            return MonomialIdeal::zero();
        }
        let mut acc: Option<MonomialIdeal> = None;
        for h in &divisor.gens {
            let shifted = self.shift_down(h);
            acc = Some(match acc {
                None => shifted,
                Some(prev) => prev.intersect(&shifted),
            });
        }
        acc.expect("divisor has generators")
    }

    /// `{ (g − h) ∨ 0 : g ∈ self }` in normal form. The clamped shift of a
    /// sorted staircase is still weakly monotone, so one linear pass suffices.
    fn shift_down(&self, h: &LatticePoint) -> MonomialIdeal {
        let mut gens: Vec<LatticePoint> = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let p = g.saturating_sub(h);
            while let Some(last) = gens.last() {
                // A later point with the same (clamped) x-exponent has the
                // smaller y-exponent and supersedes it.
                if last.a == p.a {
                    gens.pop();
                } else {
                    break;
                }
            }
            if gens.last().is_none_or(|last| p.b < last.b) {
                gens.push(p);
            }
        }
        MonomialIdeal { gens }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, p: &LatticePoint) -> fmt::Result {
    match (p.a, p.b) {
        (0, 0) => write!(f, "1"),
        (a, 0) => write_var(f, 'x', a),
        (0, b) => write_var(f, 'y', b),
        (a, b) => {
            write_var(f, 'x', a)?;
            write!(f, "*")?;
            write_var(f, 'y', b)
        }
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, var: char, exp: u64) -> fmt::Result {
    if exp == 1 {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{exp}")
    }
}

impl fmt::Display for MonomialIdeal {
    /// Monomial syntax, e.g. `y^5 + x^3*y^2 + x^4*y + x^5`; the zero ideal
    /// prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write_monomial(f, g)?;
        }
        Ok(())
    }
}

/// A validated `<x,y>`-primary staircase: the first generator is the pure
/// power `y^b0`, the last is `x^an`, and everything between lies strictly
/// inside the corner box.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimaryStaircase {
    ideal: MonomialIdeal,
}

impl PrimaryStaircase {
    pub fn new(ideal: MonomialIdeal) -> Result<PrimaryStaircase, Error> {
        let gens = ideal.gens();
        let first = gens.first().ok_or_else(|| {
            Error::NotPrimary("the zero ideal has no corner generators".into())
        })?;
        let last = gens.last().expect("nonempty");
        if first.a != 0 || first.b == 0 {
            return Err(Error::NotPrimary(format!(
                "missing a pure power of y (first generator is {first})"
            )));
        }
        if last.b != 0 || last.a == 0 {
            return Err(Error::NotPrimary(format!(
                "missing a pure power of x (last generator is {last})"
            )));
        }
        Ok(PrimaryStaircase { ideal })
    }

    /// Normalize a point list and validate the result as a primary staircase.
    pub fn from_points<I>(points: I) -> Result<PrimaryStaircase, Error>
    where
        I: IntoIterator<Item = LatticePoint>,
    {
        PrimaryStaircase::new(MonomialIdeal::generated_by(points))
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn into_ideal(self) -> MonomialIdeal {
        self.ideal
    }

    pub fn gens(&self) -> &[LatticePoint] {
        self.ideal.gens()
    }

    /// Exponent of the pure x-power generator (`a_n`).
    pub fn corner_x(&self) -> u64 {
        self.ideal.gens().last().expect("validated").a
    }

    /// Exponent of the pure y-power generator (`b_0`).
    pub fn corner_y(&self) -> u64 {
        self.ideal.gens().first().expect("validated").b
    }

    /// Generators strictly inside the corner box.
    pub fn interior(&self) -> &[LatticePoint] {
        let gens = self.ideal.gens();
        &gens[1..gens.len() - 1]
    }
}

impl fmt::Display for PrimaryStaircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ideal.fmt(f)
    }
}
