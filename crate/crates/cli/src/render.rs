//! Human-readable report text and staircase diagrams.

use std::fmt::Write as _;

use rrclosure::{ClosureReport, HypothesisVerdict, LatticePoint, MonomialIdeal, PrimaryStaircase};

pub fn monomial(p: &LatticePoint) -> String {
    MonomialIdeal::generated_by([*p]).to_string()
}

pub fn pairs_string(i: &MonomialIdeal) -> String {
    let pairs: Vec<[u64; 2]> = i.gens().iter().map(|g| [g.a, g.b]).collect();
    serde_json::to_string(&pairs).expect("pairs serialize")
}

fn points_line(points: &[LatticePoint]) -> String {
    points.iter().map(|p| format!("({},{})", p.a, p.b)).collect::<Vec<_>>().join(" ")
}

pub fn verdict_text(corner: (u64, u64), verdict: &HypothesisVerdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "corner ideal: <x^{}, y^{}>", corner.0, corner.1);
    if verdict.ok() {
        let _ = writeln!(
            out,
            "hypothesis: ok — every generator lies in the integral closure of the corner ideal"
        );
    } else {
        let _ = writeln!(
            out,
            "hypothesis: VIOLATED — {} generator(s) below the corner segment",
            verdict.failures().len()
        );
        for f in verdict.failures() {
            let _ = writeln!(
                out,
                "  {} — deficit {}/{}",
                monomial(&f.generator),
                f.deficit.0,
                f.deficit.1
            );
        }
    }
    out
}

pub fn report_text(report: &ClosureReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input:           {}", report.input.ideal());
    let _ = writeln!(
        out,
        "corner:          ({}, {})",
        report.input.corner_x(),
        report.input.corner_y()
    );
    let _ = writeln!(out, "hypothesis:      ok");
    let _ = writeln!(out, "S minimal:       {}", points_line(report.y_fold.minimal()));
    let _ = writeln!(out, "T minimal:       {}", points_line(report.x_fold.minimal()));
    let _ = writeln!(out, "ideal_S:         {}", report.y_fold_ideal);
    let _ = writeln!(out, "ideal_T:         {}", report.x_fold_ideal);
    let _ = writeln!(out, "closure:         {}", report.closure);
    let _ = writeln!(
        out,
        "ratliff-rush:    {}",
        if report.is_ratliff_rush { "yes" } else { "no" }
    );
    let _ = writeln!(out, "quick check:     {}", report.quick_check);
    let _ = writeln!(out, "reduction bound: {}", report.reduction_bound);
    out
}

/// Cell classes of the box diagram, in drawing precedence.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Generator,
    Inside,
    ClosureOnly,
    YFoldOnly,
    XFoldOnly,
    Outside,
}

fn classify(p: &LatticePoint, staircase: &PrimaryStaircase, overlay: Option<&ClosureReport>) -> Cell {
    if staircase.gens().contains(p) {
        return Cell::Generator;
    }
    if staircase.ideal().contains(p) {
        return Cell::Inside;
    }
    if let Some(report) = overlay {
        if report.closure.contains(p) {
            return Cell::ClosureOnly;
        }
        if report.y_fold_ideal.contains(p) {
            return Cell::YFoldOnly;
        }
        if report.x_fold_ideal.contains(p) {
            return Cell::XFoldOnly;
        }
    }
    Cell::Outside
}

/// One character per lattice point of `[0, a_n] × [0, b_0]`, top row first.
pub fn ascii_diagram(staircase: &PrimaryStaircase, overlay: Option<&ClosureReport>) -> String {
    let (an, b0) = (staircase.corner_x(), staircase.corner_y());
    let mut out = String::new();
    let _ = writeln!(out, "staircase on [0,{an}] x [0,{b0}]");
    for b in (0..=b0).rev() {
        for a in 0..=an {
            let c = match classify(&LatticePoint::new(a, b), staircase, overlay) {
                Cell::Generator => '@',
                Cell::Inside => '#',
                Cell::ClosureOnly => '*',
                Cell::YFoldOnly => 's',
                Cell::XFoldOnly => 't',
                Cell::Outside => '.',
            };
            out.push(c);
        }
        out.push('\n');
    }
    out.push_str("legend: @ minimal generator, # inside the ideal, . outside\n");
    if overlay.is_some() {
        out.push_str("overlay: * closure only, s S-ideal only, t T-ideal only\n");
    }
    out
}

/// SVG with one unit square per lattice point and integer viewBox
/// coordinates; row `b` is drawn at height `b_0 - b` so y grows upward.
pub fn svg_diagram(staircase: &PrimaryStaircase, overlay: Option<&ClosureReport>) -> String {
    let (an, b0) = (staircase.corner_x(), staircase.corner_y());
    let (w, h) = (an + 1, b0 + 1);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\">"
    );
    for b in (0..=b0).rev() {
        for a in 0..=an {
            let fill = match classify(&LatticePoint::new(a, b), staircase, overlay) {
                Cell::Generator => "#000000",
                Cell::Inside => "#9e9e9e",
                Cell::ClosureOnly => "#d33636",
                Cell::YFoldOnly => "#3a7bd5",
                Cell::XFoldOnly => "#2e9e4f",
                Cell::Outside => "#f2f2f2",
            };
            let _ = writeln!(
                out,
                "  <rect x=\"{a}\" y=\"{}\" width=\"1\" height=\"1\" fill=\"{fill}\"/>",
                b0 - b
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
