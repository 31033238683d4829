use pgraph::charpoly::{IntPolynomial, RealRoot};

/// `v` with 12 significant digits, trailing zeros trimmed.
pub fn sig12(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{}", if v == 0.0 { 0.0 } else { v });
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{v:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// Exact value when known, otherwise 12 significant digits.
pub fn root_value(r: &RealRoot) -> String {
    match &r.exact {
        Some(q) if q.is_integer() => q.to_integer().to_string(),
        Some(q) => format!("{}/{}", q.numer(), q.denom()),
        None => sig12(r.approx),
    }
}

pub fn factor_text(factor: &IntPolynomial, multiplicity: usize) -> String {
    let text = factor.to_string();
    // several terms are joined with spaces
    let base = if text.contains(' ') {
        format!("({text})")
    } else {
        text
    };
    if multiplicity == 1 {
        base
    } else {
        format!("{base}^{multiplicity}")
    }
}

pub fn product_text(factors: &[(IntPolynomial, usize)]) -> String {
    let parts: Vec<String> = factors.iter().map(|(f, k)| factor_text(f, *k)).collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}
