//! Text syntax for one-parameter length families.
//!
//! A spec is a semicolon-separated list binding each arc of a triple to a
//! sum of terms in `n`:
//!
//! ```text
//! a=2*exp(n)+3; b=n; c=1/n
//! ```
//!
//! Recognized terms are `k*exp(n)`, `k*n`, a constant `k`, and `k/n`, with
//! nonnegative decimal coefficients (a bare `exp(n)`, `n` or `1/n` has
//! coefficient 1).

use hexatlas_core::{ArcTriple, SeqExpr, SequenceSpec};

use crate::formats::parse_arc_class;

pub fn parse_sequence_spec(text: &str) -> Result<SequenceSpec, String> {
    let mut entries = Vec::new();
    for part in text.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (name, expr) = part
            .split_once('=')
            .ok_or_else(|| format!("expected name=expression, got {part:?}"))?;
        entries.push((parse_arc_class(name)?, parse_expr(expr)?));
    }
    if entries.len() != 3 {
        return Err(format!("expected three arc bindings, got {}", entries.len()));
    }
    let classes = [entries[0].0, entries[1].0, entries[2].0];
    let triple = ArcTriple::new(classes)
        .map_err(|_| format!("{}/{}/{} is not an admissible triple", classes[0], classes[1], classes[2]))?;
    // Reorder the expressions into the triple's canonical class order.
    let exprs: [SeqExpr; 3] = std::array::from_fn(|i| {
        let class = triple.classes()[i];
        entries.iter().find(|(c, _)| *c == class).expect("classes match").1
    });
    SequenceSpec::new(triple, exprs).map_err(|e| e.to_string())
}

fn parse_expr(text: &str) -> Result<SeqExpr, String> {
    let mut expr = SeqExpr { exp: 0.0, linear: 0.0, constant: 0.0, inverse: 0.0 };
    for term in text.split('+') {
        let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
        if term.is_empty() {
            return Err(format!("empty term in expression {text:?}"));
        }
        if let Some(k) = strip_term(&term, "exp(n)") {
            expr.exp += parse_coeff(k)?;
        } else if let Some(k) = term.strip_suffix("/n") {
            expr.inverse += parse_coeff(k)?;
        } else if let Some(k) = strip_term(&term, "n") {
            expr.linear += parse_coeff(k)?;
        } else {
            expr.constant += parse_coeff(&term)?;
        }
    }
    Ok(expr)
}

/// Splits `k*suffix` or a bare `suffix` off a term; returns the coefficient
/// text (empty for coefficient 1).
fn strip_term<'a>(term: &'a str, suffix: &str) -> Option<&'a str> {
    let head = term.strip_suffix(suffix)?;
    if head.is_empty() {
        Some("")
    } else {
        head.strip_suffix('*')
    }
}

fn parse_coeff(text: &str) -> Result<f64, String> {
    if text.is_empty() {
        return Ok(1.0);
    }
    let value: f64 = text.parse().map_err(|_| format!("bad coefficient {text:?}"))?;
    if !value.is_finite() || value < 0.0 {
        return Err(format!("coefficient {text:?} must be nonnegative"));
    }
    Ok(value)
}
