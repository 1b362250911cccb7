//! Ideal input syntax.
//!
//! Two forms are accepted:
//!
//! * monomial text: `y^28 + x^2*y^26 + x^17` — the `*` is optional, an
//!   omitted exponent means 1, and `1` denotes the unit monomial;
//! * pair lists: `[[0,28],[2,26],[17,0]]`.
//!
//! Parsing ignores whitespace and generator order; the result is always in
//! staircase normal form.

use rrclosure::{LatticePoint, MonomialIdeal};

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err("empty ideal".into());
    }
    let points = if trimmed.starts_with('[') {
        parse_pairs(trimmed)?
    } else {
        parse_monomials(trimmed)?
    };
    if points.is_empty() {
        return Err("the generator list is empty".into());
    }
    Ok(MonomialIdeal::generated_by(points))
}

fn parse_pairs(text: &str) -> Result<Vec<LatticePoint>, String> {
    let pairs: Vec<[u64; 2]> = serde_json::from_str(text)
        .map_err(|e| format!("malformed pair list: {e}"))?;
    Ok(pairs.into_iter().map(|[a, b]| LatticePoint::new(a, b)).collect())
}

fn parse_monomials(text: &str) -> Result<Vec<LatticePoint>, String> {
    text.split('+').map(parse_monomial).collect()
}

fn parse_monomial(term: &str) -> Result<LatticePoint, String> {
    let compact: String = term.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty monomial between '+' signs".into());
    }
    let mut chars = compact.chars().peekable();
    let mut a: u64 = 0;
    let mut b: u64 = 0;
    let mut saw_factor = false;
    while let Some(c) = chars.next() {
        match c {
            '*' => continue,
            'x' | 'y' => {
                let exp = if chars.peek() == Some(&'^') {
                    chars.next();
                    parse_number(&mut chars)?
                } else {
                    1
                };
                let slot = if c == 'x' { &mut a } else { &mut b };
                *slot = slot
                    .checked_add(exp)
                    .ok_or_else(|| format!("exponent overflow in '{compact}'"))?;
                saw_factor = true;
            }
            '1' if !saw_factor && chars.peek().is_none() => {
                // The unit monomial.
                saw_factor = true;
            }
            other => return Err(format!("unexpected '{other}' in monomial '{compact}'")),
        }
    }
    if !saw_factor {
        return Err(format!("no variables in monomial '{compact}'"));
    }
    Ok(LatticePoint::new(a, b))
}

fn parse_number(chars: &mut std::iter::Peekable<std::str::Chars<'_>>) -> Result<u64, String> {
    let mut digits = String::new();
    while let Some(c) = chars.peek() {
        if c.is_ascii_digit() {
            digits.push(*c);
            chars.next();
        } else {
            break;
        }
    }
    if digits.is_empty() {
        return Err("'^' must be followed by a decimal exponent".into());
    }
    digits.parse::<u64>().map_err(|e| format!("bad exponent '{digits}': {e}"))
}
