use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{join_terms, Rational, UniPoly};

/// Sparse polynomial in two variables; the key `(i, j)` is the exponent pair.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0, 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Lifts a polynomial in the first variable.
    pub fn from_first(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(i as u32, 0, c.clone());
        }
        out
    }

    /// Lifts a polynomial in the second variable.
    pub fn from_second(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, j as u32, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, c * s);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Multiplies by `x^di y^dj`.
    pub fn shift(&self, di: u32, dj: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + di, j + dj), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (&(i, j), c)| {
            acc + c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize)
        })
    }

    /// Substitutes a value for the second variable.
    pub fn specialize_second(&self, y: &Rational) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (&(i, j), c) in &self.terms {
            let v = c * num_traits::pow(y.clone(), j as usize);
            acc = &acc + &UniPoly::monomial(v, i as usize);
        }
        acc
    }

    /// Substitutes a value for the first variable.
    pub fn specialize_first(&self, x: &Rational) -> UniPoly {
        self.swap().specialize_second(x)
    }

    /// Exchanges the roles of the two variables.
    pub fn swap(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Divides by `(y - root)` treating the polynomial as one in `y`.
    /// Returns the quotient and the remainder `p(x, root)`.
    pub fn div_linear_second(&self, root: &Rational) -> (BiPoly, UniPoly) {
        let max_j = self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0);
        // Coefficients of y^j as polynomials in x.
        let mut by_j: Vec<UniPoly> = vec![UniPoly::zero(); max_j as usize + 1];
        for (&(i, j), c) in &self.terms {
            by_j[j as usize] = &by_j[j as usize] + &UniPoly::monomial(c.clone(), i as usize);
        }
        let mut quot = BiPoly::zero();
        let mut carry = UniPoly::zero();
        for j in (0..by_j.len()).rev() {
            let cur = &by_j[j] + &carry.scale(root);
            if j == 0 {
                return (quot, cur);
            }
            for (i, c) in cur.coeffs().iter().enumerate() {
                quot.add_term(i as u32, (j - 1) as u32, c.clone());
            }
            carry = cur;
        }
        (quot, UniPoly::zero())
    }

    /// Applies a linear map to the exponents, allowing negative results.
    /// Returns `(p', (ex, ey))` with `p(mapped) = x^ex y^ey p'` and `p'` a
    /// polynomial not divisible by `x` or `y`.
    pub fn remap_exponents(&self, f: impl Fn(i64, i64) -> (i64, i64)) -> (BiPoly, (i64, i64)) {
        let mapped: Vec<((i64, i64), &Rational)> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| (f(i as i64, j as i64), c))
            .collect();
        let ex = mapped.iter().map(|((a, _), _)| *a).min().unwrap_or(0);
        let ey = mapped.iter().map(|((_, b), _)| *b).min().unwrap_or(0);
        let mut out = BiPoly::zero();
        for ((a, b), c) in mapped {
            out.add_term((a - ex) as u32, (b - ey) as u32, c.clone());
        }
        (out, (ex, ey))
    }

    pub fn display_with(&self, xv: &str, yv: &str) -> String {
        join_terms(self.terms.iter().map(|(&(i, j), c)| {
            let mut parts = Vec::new();
            let xs = super::monomial_name(xv, i as usize);
            let ys = super::monomial_name(yv, j as usize);
            if !xs.is_empty() {
                parts.push(xs);
            }
            if !ys.is_empty() {
                parts.push(ys);
            }
            (c, parts.join(" "))
        }))
    }
}

impl std::fmt::Display for BiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.display_with("x", "y"))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    #[test]
    fn cancellation_removes_terms() {
        let p = &(&BiPoly::x() + &BiPoly::y()) - &BiPoly::y();
        assert_eq!(p, BiPoly::x());
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn binomial_square() {
        let s = (&BiPoly::x() - &BiPoly::y()).pow(2);
        assert_eq!(s.coeff(1, 1), int(-2));
        assert_eq!(s.to_string(), "y^2 - 2 x y + x^2");
    }

    #[test]
    fn linear_division_in_second_variable() {
        // (x + y)(y - 1) = xy - x + y^2 - y
        let f = &(&BiPoly::x() + &BiPoly::y()) * &(&BiPoly::y() - &BiPoly::one());
        let (q, r) = f.div_linear_second(&int(1));
        assert!(r.is_zero());
        assert_eq!(q, &BiPoly::x() + &BiPoly::y());
        let (_, r) = BiPoly::x().div_linear_second(&int(1));
        assert_eq!(r, UniPoly::x());
    }

    #[test]
    fn specialization() {
        let f = &BiPoly::x() * &BiPoly::y().pow(2);
        assert_eq!(f.specialize_second(&int(3)), UniPoly::from_ints(&[0, 9]));
        assert_eq!(f.specialize_first(&int(2)), UniPoly::from_ints(&[0, 0, 2]));
    }
}
