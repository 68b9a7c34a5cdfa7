//! Exact arithmetic substrate: big rationals, dense univariate and sparse
//! bivariate polynomials, truncated power series and rational functions.

mod bi;
mod linalg;
mod ratfun;
mod series;
mod uni;

pub use bi::BiPoly;
pub use linalg::{solve_rational, LinearSolution};
pub use ratfun::{ratfun_equal, RatFun};
pub use series::{mobius_compose, series_quotient, TruncatedSeries};
pub use uni::UniPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer.
pub type Integer = BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// `num/den` as a rational.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Generalized binomial coefficient `a(a-1)...(a-k+1)/k!`.
///
/// Defined for every integer `a`, so `binomial(-1, 2) == 1` and
/// `binomial(a, 0) == 1` for all `a`.
pub fn binomial(a: i64, k: u32) -> Integer {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}

/// `binomial(a, k)` for `a >= 0`, as a rational.
pub fn choose(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(binomial(n as i64, k as u32))
}

/// The polynomial `w -> binomial(w + shift, k)` in the variable `w`.
pub fn binomial_poly(shift: i64, k: u32) -> UniPoly {
    let mut p = UniPoly::one();
    for i in 0..k as i64 {
        p = &p * &UniPoly::from_coeffs(vec![int(shift - i), Rational::one()]);
    }
    let fact: BigInt = (1..=k as i64).map(BigInt::from).product();
    p.scale(&Rational::new(BigInt::one(), fact))
}

/// Serialization form used in reports: always `num/den`.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Compact human form: `3`, `-1/5`.
pub(crate) fn fmt_coeff(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Joins signed terms `(coefficient, monomial)` into `a + b x - c x^2`.
pub(crate) fn join_terms<'a>(terms: impl Iterator<Item = (&'a Rational, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        let body = if mono.is_empty() {
            fmt_coeff(&mag)
        } else if mag.is_one() {
            mono
        } else {
            format!("{} {}", fmt_coeff(&mag), mono)
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn monomial_name(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{}^{}", var, e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        for a in [-3, 0, 7] {
            assert_eq!(binomial(a, 0), BigInt::one());
        }
        assert_eq!(binomial(-1, 2), BigInt::one());
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn pascal_rule() {
        for a in -5..=10 {
            for k in 1..=6 {
                assert_eq!(binomial(a, k), binomial(a - 1, k - 1) + binomial(a - 1, k));
            }
        }
    }

    #[test]
    fn binomial_poly_matches_integer_binomial() {
        for shift in [-2, 0, 3] {
            for k in 0..5 {
                let p = binomial_poly(shift, k);
                for w in -4..10 {
                    assert_eq!(p.eval(&int(w)), Rational::from_integer(binomial(w + shift, k)));
                }
            }
        }
    }

    #[test]
    fn rational_string_round_trip() {
        assert_eq!(rational_to_string(&rat(2, 10)), "1/5");
        assert_eq!(rational_to_string(&int(3)), "3/1");
        assert_eq!(parse_rational("-6/4"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
    }

    proptest! {
        #[test]
        fn rational_add_sub_exact(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = rat(a, b);
            let y = rat(c, d);
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            prop_assert_eq!(parse_rational(&rational_to_string(&x)), Some(x));
        }
    }
}
