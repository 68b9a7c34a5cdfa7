use super::BiPoly;

/// A quotient of bivariate polynomials. No canonical form is kept; equality
/// is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFun {
    pub num: BiPoly,
    pub den: BiPoly,
}

impl RatFun {
    /// Panics on a zero denominator.
    pub fn new(num: BiPoly, den: BiPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RatFun { num, den }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        RatFun { num: p, den: BiPoly::one() }
    }

    pub fn equivalent(&self, other: &RatFun) -> bool {
        ratfun_equal(self, other)
    }
}

/// `f == g` iff `f.num * g.den == g.num * f.den`.
pub fn ratfun_equal(f: &RatFun, g: &RatFun) -> bool {
    &f.num * &g.den == &g.num * &f.den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mds_wn_plus() -> RatFun {
        let one = BiPoly::one();
        let num = &one - &(&BiPoly::x() * &BiPoly::y());
        let den = &(&one - &BiPoly::x()) * &(&one - &BiPoly::y());
        RatFun::new(num, den)
    }

    #[test]
    fn reflexive() {
        assert!(ratfun_equal(&mds_wn_plus(), &mds_wn_plus()));
    }

    #[test]
    fn factored_identity() {
        let one = BiPoly::one();
        let f = RatFun::new(&one - &BiPoly::x().pow(2), &one - &BiPoly::x());
        let g = RatFun::from_poly(&one + &BiPoly::x());
        assert!(f.equivalent(&g));
        let h = RatFun::from_poly(&one - &BiPoly::x());
        assert!(!f.equivalent(&h));
    }
}
