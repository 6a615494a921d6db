//! Text form: a coefficient list, constant term first, e.g. `[1,0,1]` for
//! `1 + x^2`; a rational function is `num/den`, e.g. `[1]/[0,0,1]`.
//! Over `F_{p^n}` each entry is an element's packed index `sum c_i p^i`.

use super::{Poly, PolyRing, RationalFn};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

pub fn parse_poly(ring: &PolyRing<FieldSpec>, s: &str) -> Result<Poly<FieldElement>> {
    let body = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [c0,c1,...], got {s:?}")))?;
    let q = ring.field().q();
    let mut coeffs = Vec::new();
    for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: u64 = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {tok:?}")))?;
        if v >= q {
            return Err(Error::Parse(format!("coefficient {v} is not below q = {q}")));
        }
        coeffs.push(ring.field().element_at(v));
    }
    Ok(ring.poly(coeffs))
}

pub fn parse_rational(ring: &PolyRing<FieldSpec>, s: &str) -> Result<RationalFn<FieldElement>> {
    match s.split_once('/') {
        Some((num, den)) => ring.rational(parse_poly(ring, num)?, parse_poly(ring, den)?),
        None => Ok(ring.rational_from_poly(parse_poly(ring, s)?)),
    }
}

pub fn format_poly(a: &Poly<FieldElement>) -> String {
    let parts: Vec<String> = a.coeffs().iter().map(|c| c.index().to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub fn format_rational(f: &RationalFn<FieldElement>) -> String {
    format!("{}/{}", format_poly(f.num()), format_poly(f.den()))
}
