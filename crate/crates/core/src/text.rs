//! Parsing of polynomial text such as `x^4 + x + 1` or `a^3*x^2 + 2*x`.

use alloc::{format, string::ToString, vec, vec::Vec};

use crate::{Error, Result};

/// Splits a polynomial into `(coefficient token, exponent)` terms. The
/// coefficient token is `None` for a bare `x^e`.
pub(crate) fn terms(text: &str) -> Result<Vec<(Option<&str>, usize)>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty polynomial".to_string()));
    }
    let mut out = Vec::new();
    for raw in text.split('+') {
        let term = raw.trim();
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in `{text}`")));
        }
        let Some(xpos) = find_variable(term) else {
            out.push((Some(term), 0));
            continue;
        };
        let (coef, var) = term.split_at(xpos);
        let coef = coef.trim().trim_end_matches('*').trim();
        let exp = match var[1..].trim() {
            "" => 1,
            rest => {
                let digits = rest.strip_prefix('^').ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?;
                digits.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?
            }
        };
        out.push(((!coef.is_empty()).then_some(coef), exp));
    }
    Ok(out)
}

// The variable is `x`; `a` is reserved for powers of the primitive element.
fn find_variable(term: &str) -> Option<usize> {
    term.find('x')
}

/// Dense coefficient vector (constant term first) from parsed terms, with the
/// coefficient tokens interpreted by `coef` and combined by `add`.
pub(crate) fn dense<F, A>(text: &str, mut coef: F, add: A) -> Result<Vec<u32>>
where
    F: FnMut(&str) -> Result<u32>,
    A: Fn(u32, u32) -> u32,
{
    let parsed = terms(text)?;
    let top = parsed.iter().map(|&(_, e)| e).max().unwrap_or(0);
    let mut out = vec![0u32; top + 1];
    for (c, e) in parsed {
        let value = match c {
            Some(tok) => coef(tok)?,
            None => 1,
        };
        out[e] = add(out[e], value);
    }
    Ok(out)
}
