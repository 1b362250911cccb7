//! Command-line surface for the closure engine.
//!
//! Exit codes are a stable contract: 0 success, 1 parse or usage error,
//! 2 hypothesis violated, 3 engine/oracle mismatch, 4 overflow.

mod doc;
mod parse;
mod render;

use std::fs;

use rrclosure::families::{
    family_crispin, family_generator_gap, family_mk, family_sigma, family_three, family_two,
    SigmaParams,
};
use rrclosure::sample::{sample_primary_staircase, SplitMix64};
use rrclosure::{
    check_hypothesis, colon_chain, integral_closure_box, powers_rr_check, ratliff_rush_closure,
    ClosureReport, Error, MonomialIdeal, PrimaryStaircase,
};

use doc::ReportDocument;

const EXIT_PARSE: i32 = 1;
const EXIT_HYPOTHESIS: i32 = 2;
const EXIT_MISMATCH: i32 = 3;
const EXIT_OVERFLOW: i32 = 4;

struct Failure {
    code: i32,
    message: Option<String>,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_PARSE, message: Some(message.into()) }
    }

    fn silent(code: i32) -> Failure {
        Failure { code, message: None }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::Overflow => EXIT_OVERFLOW,
            Error::HypothesisViolated(_)
            | Error::PowerHypothesisViolated { .. }
            | Error::NegativeShift { .. } => EXIT_HYPOTHESIS,
            Error::NotPrimary(_) | Error::InvalidParams(_) => EXIT_PARSE,
        };
        Failure { code, message: Some(e.to_string()) }
    }
}

/// Write to stdout, tolerating a closed pipe (e.g. `rrclosure ... | head`).
fn emit(text: impl AsRef<str>) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_ref().as_bytes());
}

fn emitln(text: impl AsRef<str>) {
    emit(text);
    emit("\n");
}

const USAGE: &str = "\
usage: rrclosure <command> [args]

commands:
  closure <IDEAL> [--format text|json-doc]
      Ratliff-Rush closure report for a primary monomial ideal.
  check <IDEAL> [--format text|json-doc]
      Corner-membership hypothesis verdict with per-generator deficits.
  oracle <IDEAL> [--max-power N]
      Compare the closure engine against the colon-chain terminal.
  oracle --seed N [--cases M]
      Randomized engine-vs-chain suite (default 50 cases).
  powers <IDEAL> --upto N
      Ratliff-Rush verdict for each power up to N.
  family <two|three|crispin|mk|sigma|gap> <params...>
      Construct a named family; prints both input syntaxes.
        two c d | three c d u v | crispin d k | mk m k | gap c d
        sigma d c n1 c1 [n2 c2 ...]
  intclosure <C> <D>
      Integral closure of <x^C, y^D>.
  staircase <IDEAL> [--format ascii|svg|pairs] [--overlay] [--out PATH]
      Box diagram of the staircase, optionally with closure overlay marks.

ideals are written as monomials ('y^28 + x^2*y^26 + x^17', '*' optional)
or as exponent pairs ('[[0,28],[2,26],[17,0]]').

exit codes: 0 ok, 1 parse error, 2 hypothesis violated, 3 mismatch, 4 overflow";

#[derive(Default)]
struct Options {
    format: Option<String>,
    max_power: Option<u64>,
    upto: Option<u64>,
    overlay: bool,
    out: Option<String>,
    seed: Option<u64>,
    cases: Option<u64>,
    positional: Vec<String>,
}

fn parse_options(args: &[String]) -> Result<Options, Failure> {
    let mut opts = Options::default();
    let mut iter = args.iter().peekable();
    while let Some(arg) = iter.next() {
        if let Some(flag) = arg.strip_prefix("--") {
            let (name, inline) = match flag.split_once('=') {
                Some((n, v)) => (n, Some(v.to_string())),
                None => (flag, None),
            };
            let value = |iter: &mut std::iter::Peekable<std::slice::Iter<String>>| {
                inline.clone().or_else(|| iter.next().cloned()).ok_or_else(|| {
                    Failure::parse(format!("flag --{name} expects a value"))
                })
            };
            match name {
                "format" => opts.format = Some(value(&mut iter)?),
                "max-power" => opts.max_power = Some(parse_u64(&value(&mut iter)?, "max-power")?),
                "upto" => opts.upto = Some(parse_u64(&value(&mut iter)?, "upto")?),
                "out" => opts.out = Some(value(&mut iter)?),
                "seed" => opts.seed = Some(parse_u64(&value(&mut iter)?, "seed")?),
                "cases" => opts.cases = Some(parse_u64(&value(&mut iter)?, "cases")?),
                "overlay" => opts.overlay = true,
                _ => return Err(Failure::parse(format!("unknown flag --{name}"))),
            }
        } else {
            opts.positional.push(arg.clone());
        }
    }
    Ok(opts)
}

fn parse_u64(text: &str, what: &str) -> Result<u64, Failure> {
    text.parse::<u64>()
        .map_err(|_| Failure::parse(format!("{what} must be a nonnegative integer, got '{text}'")))
}

fn to_staircase(text: &str) -> Result<PrimaryStaircase, Failure> {
    let ideal = parse::parse_ideal(text).map_err(Failure::parse)?;
    PrimaryStaircase::new(ideal).map_err(Failure::from)
}

/// Run the gate, printing the verdict before the hypothesis exit so the
/// offending generators are always visible.
fn gated_report(staircase: &PrimaryStaircase) -> Result<ClosureReport, Failure> {
    match ratliff_rush_closure(staircase) {
        Ok(report) => Ok(report),
        Err(Error::HypothesisViolated(verdict)) => {
            emit(render::verdict_text(
                (staircase.corner_x(), staircase.corner_y()),
                &verdict,
            ));
            Err(Failure::silent(EXIT_HYPOTHESIS))
        }
        Err(other) => Err(other.into()),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(()) => {}
        Err(failure) => {
            if let Some(message) = failure.message {
                eprintln!("error: {message}");
            }
            std::process::exit(failure.code);
        }
    }
}

fn run(args: &[String]) -> Result<(), Failure> {
    let Some(command) = args.first() else {
        return Err(Failure::parse(USAGE));
    };
    let opts = parse_options(&args[1..])?;
    match command.as_str() {
        "closure" => cmd_closure(&opts),
        "check" => cmd_check(&opts),
        "oracle" => cmd_oracle(&opts),
        "powers" => cmd_powers(&opts),
        "family" => cmd_family(&opts),
        "intclosure" => cmd_intclosure(&opts),
        "staircase" => cmd_staircase(&opts),
        "help" | "--help" | "-h" => {
            emitln(USAGE);
            Ok(())
        }
        other => Err(Failure::parse(format!("unknown command '{other}'\n\n{USAGE}"))),
    }
}

fn single_ideal(opts: &Options, command: &str) -> Result<PrimaryStaircase, Failure> {
    match opts.positional.as_slice() {
        [ideal] => to_staircase(ideal),
        _ => Err(Failure::parse(format!("{command} expects exactly one IDEAL argument"))),
    }
}

fn cmd_closure(opts: &Options) -> Result<(), Failure> {
    let staircase = single_ideal(opts, "closure")?;
    let report = gated_report(&staircase)?;
    match opts.format.as_deref().unwrap_or("text") {
        "text" => emit(render::report_text(&report)),
        "json-doc" => {
            let doc = ReportDocument::from(&report);
            emitln(serde_json::to_string_pretty(&doc).expect("report serializes"));
        }
        other => return Err(Failure::parse(format!("unknown report format '{other}'"))),
    }
    Ok(())
}

fn cmd_check(opts: &Options) -> Result<(), Failure> {
    let staircase = single_ideal(opts, "check")?;
    let verdict = check_hypothesis(&staircase)?;
    match opts.format.as_deref().unwrap_or("text") {
        "text" => emit(render::verdict_text(
            (staircase.corner_x(), staircase.corner_y()),
            &verdict,
        )),
        "json-doc" => emitln(
            serde_json::to_string_pretty(&doc::hypothesis_document(&verdict))
                .expect("verdict serializes"),
        ),
        other => return Err(Failure::parse(format!("unknown report format '{other}'"))),
    }
    if verdict.ok() {
        Ok(())
    } else {
        Err(Failure::silent(EXIT_HYPOTHESIS))
    }
}

fn cmd_oracle(opts: &Options) -> Result<(), Failure> {
    match (opts.positional.as_slice(), opts.seed) {
        ([ideal], None) => oracle_single(ideal, opts.max_power),
        ([], Some(seed)) => oracle_suite(seed, opts.cases.unwrap_or(50)),
        _ => Err(Failure::parse("oracle expects either one IDEAL or --seed N")),
    }
}

fn oracle_single(ideal: &str, max_power: Option<u64>) -> Result<(), Failure> {
    let staircase = to_staircase(ideal)?;
    let report = gated_report(&staircase)?;
    let bound = match max_power {
        Some(l) if l >= 1 => l,
        Some(_) => return Err(Failure::parse("--max-power must be at least 1")),
        None => report.reduction_bound,
    };
    let chain = colon_chain(staircase.ideal(), bound)?;
    emitln(format!("engine: {}", report.closure));
    emitln(format!("chain:  {}  (terminal at l = {bound})", chain.terminal()));
    if chain.terminal() == &report.closure {
        emitln("MATCH");
        Ok(())
    } else {
        emitln("MISMATCH");
        Err(Failure::silent(EXIT_MISMATCH))
    }
}

fn oracle_suite(seed: u64, cases: u64) -> Result<(), Failure> {
    let mut rng = SplitMix64::new(seed);
    let mut mismatches = 0u64;
    for case in 1..=cases {
        let staircase = sample_primary_staircase(&mut rng, 30, 6);
        let report = ratliff_rush_closure(&staircase)?;
        let chain = colon_chain(staircase.ideal(), report.reduction_bound)?;
        let matched = chain.terminal() == &report.closure;
        if !matched {
            mismatches += 1;
        }
        emitln(format!(
            "case {case:03}: corner ({}, {}), {} generators -> {}",
            staircase.corner_x(),
            staircase.corner_y(),
            staircase.gens().len(),
            if matched { "MATCH" } else { "MISMATCH" }
        ));
    }
    emitln(format!("{cases} cases, {mismatches} mismatches (seed {seed})"));
    if mismatches == 0 {
        Ok(())
    } else {
        Err(Failure::silent(EXIT_MISMATCH))
    }
}

fn cmd_powers(opts: &Options) -> Result<(), Failure> {
    let staircase = single_ideal(opts, "powers")?;
    let upto = opts.upto.ok_or_else(|| Failure::parse("powers requires --upto N"))?;
    if upto < 1 {
        return Err(Failure::parse("--upto must be at least 1"));
    }
    // Gate the base ideal first so refusals come with the verdict.
    let _ = gated_report(&staircase)?;
    let verdicts = powers_rr_check(&staircase, upto)?;
    for (i, rr) in verdicts.iter().enumerate() {
        emitln(format!(
            "I^{}: {}",
            i + 1,
            if *rr { "ratliff-rush" } else { "not ratliff-rush" }
        ));
    }
    Ok(())
}

fn cmd_family(opts: &Options) -> Result<(), Failure> {
    let args = &opts.positional;
    let Some(name) = args.first() else {
        return Err(Failure::parse("family requires a family name"));
    };
    let params: Vec<u64> = args[1..]
        .iter()
        .map(|p| parse_u64(p, "family parameter"))
        .collect::<Result<_, _>>()?;
    let staircase = match (name.as_str(), params.as_slice()) {
        ("two", [c, d]) => family_two(*c, *d)?,
        ("three", [c, d, u, v]) => family_three(*c, *d, *u, *v)?,
        ("crispin", [d, k]) => family_crispin(*d, *k)?,
        ("mk", [m, k]) => family_mk(*m, *k)?,
        ("gap", [c, d]) => family_generator_gap(*c, *d)?,
        ("sigma", rest) if rest.len() >= 4 && rest.len() % 2 == 0 => {
            let (d, c) = (rest[0], rest[1]);
            let parts: Vec<(u64, u64)> =
                rest[2..].chunks(2).map(|pair| (pair[0], pair[1])).collect();
            family_sigma(&SigmaParams::new(d, c, parts)?)?
        }
        _ => {
            return Err(Failure::parse(format!(
                "unknown family or wrong parameter count: {name} {params:?}"
            )))
        }
    };
    print_both_syntaxes(staircase.ideal());
    Ok(())
}

fn cmd_intclosure(opts: &Options) -> Result<(), Failure> {
    let [c, d] = opts.positional.as_slice() else {
        return Err(Failure::parse("intclosure expects C and D"));
    };
    let ideal = integral_closure_box(parse_u64(c, "C")?, parse_u64(d, "D")?)?;
    print_both_syntaxes(&ideal);
    Ok(())
}

fn print_both_syntaxes(ideal: &MonomialIdeal) {
    emitln(format!("{ideal}"));
    emitln(render::pairs_string(ideal));
}

fn cmd_staircase(opts: &Options) -> Result<(), Failure> {
    let staircase = single_ideal(opts, "staircase")?;
    let report = if opts.overlay { Some(gated_report(&staircase)?) } else { None };
    let rendered = match opts.format.as_deref().unwrap_or("ascii") {
        "ascii" => render::ascii_diagram(&staircase, report.as_ref()),
        "svg" => render::svg_diagram(&staircase, report.as_ref()),
        "pairs" => format!("{}\n", render::pairs_string(staircase.ideal())),
        other => return Err(Failure::parse(format!("unknown diagram format '{other}'"))),
    };
    match &opts.out {
        Some(path) => fs::write(path, rendered)
            .map_err(|e| Failure::parse(format!("cannot write {path}: {e}")))?,
        None => emit(rendered),
    }
    Ok(())
}
