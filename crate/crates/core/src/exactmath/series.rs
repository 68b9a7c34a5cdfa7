use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// A power series known modulo `T^(order+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn from_poly(p: &UniPoly, order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: (0..=order).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Always `order + 1` entries.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.clone())
    }

    /// Reduces to a lower order; never raises it.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Equality of the two classes modulo `T^(min order + 1)`.
    pub fn agrees_with(&self, other: &TruncatedSeries) -> bool {
        let m = self.order.min(other.order);
        self.coeffs[..=m] == other.coeffs[..=m]
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let order = self.order.min(rhs.order);
        TruncatedSeries {
            order,
            coeffs: (0..=order).map(|i| f(&self.coeffs[i], &rhs.coeffs[i])).collect(),
        }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { order, coeffs }
    }
}

/// `num / den` modulo `T^(order+1)`; `den` needs a nonzero constant term.
pub fn series_quotient(num: &UniPoly, den: &UniPoly, order: usize) -> Result<TruncatedSeries> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::DivisionByZero(
            "series denominator has zero constant term".into(),
        ));
    }
    let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
    for i in 0..=order {
        let mut c = num.coeff(i);
        for (j, o) in out.iter().enumerate() {
            let dj = den.coeff(i - j);
            if !dj.is_zero() {
                c -= o * dj;
            }
        }
        out.push(c / &d0);
    }
    Ok(TruncatedSeries { order, coeffs: out })
}

/// `a(T/(1-T))` modulo `T^(order+1)`, i.e. `sum_j a_j T^j (1-T)^(-j)`.
pub fn mobius_compose(a: &UniPoly, order: usize) -> TruncatedSeries {
    // T^j (1-T)^(-j) = sum_m binom(m-1, j-1) T^m for j >= 1.
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = a.coeff(0);
    for (j, aj) in a.coeffs().iter().enumerate().skip(1) {
        if aj.is_zero() || j > order {
            continue;
        }
        for (m, slot) in coeffs.iter_mut().enumerate().skip(j) {
            *slot += aj * super::choose(m - 1, j - 1);
        }
    }
    TruncatedSeries { order, coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use proptest::prelude::*;

    fn one_minus_t() -> UniPoly {
        UniPoly::from_ints(&[1, -1])
    }

    #[test]
    fn geometric_quotient() {
        let den = &one_minus_t() * &UniPoly::from_ints(&[1, -2]);
        let s = series_quotient(&UniPoly::one(), &den, 4).unwrap();
        assert_eq!(s.to_poly(), UniPoly::from_ints(&[1, 3, 7, 15, 31]));
    }

    #[test]
    fn identity_denominator_truncates() {
        let p = UniPoly::from_ints(&[4, 0, -1, 9]);
        let s = series_quotient(&p, &UniPoly::one(), 2).unwrap();
        assert_eq!(s.to_poly(), UniPoly::from_ints(&[4, 0, -1]));
    }

    #[test]
    fn cubed_over_one_minus_two_t() {
        let s = series_quotient(&one_minus_t().pow(3), &UniPoly::from_ints(&[1, -2]), 4).unwrap();
        assert_eq!(s.to_poly(), UniPoly::from_ints(&[1, -1, 1, 1, 2]));
    }

    #[test]
    fn zero_constant_denominator_rejected() {
        assert!(series_quotient(&UniPoly::one(), &UniPoly::x(), 3).is_err());
    }

    #[test]
    fn mobius_examples() {
        let s = mobius_compose(&UniPoly::one(), 5);
        assert_eq!(s.to_poly(), UniPoly::one());
        assert_eq!(s.coeffs().len(), 6);
        assert_eq!(mobius_compose(&UniPoly::x(), 3).to_poly(), UniPoly::from_ints(&[0, 1, 1, 1]));
        let hamming = UniPoly::from_coeffs(vec![rat(1, 5), rat(1, 5), int(0), int(0), int(1)]);
        assert_eq!(
            mobius_compose(&hamming, 4).to_poly(),
            UniPoly::from_coeffs(vec![rat(1, 5), rat(1, 5), rat(1, 5), rat(1, 5), rat(6, 5)])
        );
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec(-20i64..20, 0..6).prop_map(|c| UniPoly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn quotient_times_denominator(num in small_poly(), tail in proptest::collection::vec(-5i64..5, 0..4), c0 in 1i64..4, order in 0usize..8) {
            let mut dc = vec![c0];
            dc.extend(tail);
            let den = UniPoly::from_ints(&dc);
            let s = series_quotient(&num, &den, order).unwrap();
            let back = (&s.to_poly() * &den).truncate(order);
            prop_assert_eq!(back, num.truncate(order));
        }

        #[test]
        fn mobius_is_linear(a in small_poly(), b in small_poly(), order in 0usize..8) {
            let lhs = mobius_compose(&(&a + &b), order);
            let rhs = &mobius_compose(&a, order) + &mobius_compose(&b, order);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mobius_matches_quotient_route(a in small_poly(), order in 0usize..7) {
            // Independent route: sum a_j T^j / (1-T)^j via series division.
            let mut acc = TruncatedSeries::from_poly(&UniPoly::zero(), order);
            for (j, aj) in a.coeffs().iter().enumerate() {
                let num = UniPoly::monomial(aj.clone(), j);
                let den = UniPoly::from_ints(&[1, -1]).pow(j as u32);
                acc = &acc + &series_quotient(&num, &den, order).unwrap();
            }
            prop_assert_eq!(mobius_compose(&a, order), acc);
        }
    }
}
