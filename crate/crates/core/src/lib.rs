//! Ratliff-Rush closures of `<x,y>`-primary monomial ideals in two variables.
//!
//! A monomial ideal in `K[x,y]` is identified with the upward-closed set of
//! its exponent lattice points; the unique minimal generating antichain is the
//! staircase. For an `<x,y>`-primary ideal
//! `I = <y^b0, x^a1 y^b1, ..., x^a(n-1) y^b(n-1), x^an>` whose generators all
//! lie in the integral closure of the corner ideal `<x^an, y^b0>`, the
//! Ratliff-Rush closure `Ĩ = ∪ (I^(l+1) : I^l)` can be computed directly:
//! fold the exponent semigroup of the generators into the corner box along
//! each axis (removing whole `b0`-periods in y, respectively `an`-periods in
//! x), take the ideal generated by each folded point set, and intersect the
//! two. The [`closure`] module implements that computation behind a
//! hypothesis gate, and [`oracle`] provides the independent colon-chain route
//! `I^(l+1) : I^l` used to verify it.
//!
//! Everything is exact unsigned integer arithmetic; overflow is reported as
//! an [`Error`], never wrapped. All values are immutable after construction
//! and every operation is a pure function of its inputs.

pub mod closure;
pub mod error;
pub mod families;
pub mod ideal;
pub mod oracle;
pub mod point;
pub mod sample;
pub mod semigroup;

pub use closure::{
    check_hypothesis, is_ratliff_rush, quick_sufficient_check, ratliff_rush_closure,
    reduction_bound, ClosureReport, HypothesisFailure, HypothesisVerdict, QuickVerdict,
};
pub use error::Error;
pub use ideal::{MonomialIdeal, PrimaryStaircase};
pub use oracle::{
    colon_chain, decomposition_check, decomposition_check_diagnostic, integral_closure_box,
    powers_rr_check, rr_closure_oracle, ColonChain,
};
pub use point::LatticePoint;
pub use semigroup::{
    enumerate_x_fold, enumerate_y_fold, fold_bounds, minimal_points, PointSet,
    SemigroupDescription,
};
