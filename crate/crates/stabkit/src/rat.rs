//! Exact rational coordinates.
//!
//! All geometry in this crate is exact: coordinates are arbitrary-precision
//! rationals, serialized as `"p/q"` strings in lowest terms (`"p"` when the
//! denominator is 1, matching `BigRational`'s `Display`).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rational = BigRational;

/// Rational from an integer.
pub fn rint(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `p/q`.
pub fn rfrac(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|e| format!("bad numerator {p:?}: {e}"))?;
        let q: BigInt = q.trim().parse().map_err(|e| format!("bad denominator {q:?}: {e}"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(BigRational::new(p, q))
    } else {
        let p: BigInt = s.parse().map_err(|e| format!("bad rational {s:?}: {e}"))?;
        Ok(BigRational::from_integer(p))
    }
}

/// Canonical string form: lowest terms, `"p"` or `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Midpoint of two rationals.
pub fn mid(a: &Rational, b: &Rational) -> Rational {
    (a + b) / rint(2)
}

/// Smallest positive pairwise gap of a value set; `None` if fewer than two
/// distinct values.
pub fn min_positive_gap(values: &[Rational]) -> Option<Rational> {
    let mut v: Vec<&Rational> = values.iter().collect();
    v.sort();
    v.dedup();
    let mut best: Option<Rational> = None;
    for w in v.windows(2) {
        let d = w[1] - w[0];
        debug_assert!(d.is_positive());
        match &best {
            Some(b) if *b <= d => {}
            _ => best = Some(d),
        }
    }
    best
}

/// Lossy conversion for rendering only (SVG output).
pub fn to_f64(r: &Rational) -> f64 {
    let p = r.numer();
    let q = r.denom();
    // Good enough for drawing; exactness is never needed downstream of here.
    let pf = p.to_string().parse::<f64>().unwrap_or(0.0);
    let qf = q.to_string().parse::<f64>().unwrap_or(1.0);
    pf / qf
}

/// `true` when `lo <= x <= hi`.
pub fn contains(lo: &Rational, hi: &Rational, x: &Rational) -> bool {
    lo <= x && x <= hi
}

/// Evenly spaced interior points `lo + i*(hi-lo)/(count+1)`, `i = 1..=count`.
pub fn interior_points(lo: &Rational, hi: &Rational, count: usize) -> Vec<Rational> {
    let step = (hi - lo) / rint(count as i64 + 1);
    (1..=count as i64).map(|i| lo + &step * rint(i)).collect()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "1", "-3", "1/2", "-7/3", "10/4"] {
            let r = parse_rational(s).unwrap();
            let t = format_rational(&r);
            let r2 = parse_rational(&t).unwrap();
            assert_eq!(r, r2);
        }
        // lowest terms
        assert_eq!(format_rational(&parse_rational("10/4").unwrap()), "5/2");
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn min_gap() {
        let vals: Vec<Rational> = [rint(0), rint(2), rfrac(1, 2), rint(2)].to_vec();
        assert_eq!(min_positive_gap(&vals).unwrap(), rfrac(1, 2));
        assert!(min_positive_gap(&[rint(3)]).is_none());
    }

    #[test]
    fn interior_points_are_strictly_inside_and_increasing() {
        let pts = interior_points(&rint(0), &rint(1), 4);
        assert_eq!(pts.len(), 4);
        for w in pts.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert!(pts[0] > rint(0) && pts[3] < rint(1));
    }
}
