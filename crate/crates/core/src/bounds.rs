//! The interpolating polynomials `g(w)` and `h(w)` built from the normalized
//! weights, and the divisibility bounds they imply.

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::code::WeightDistribution;
use crate::enumerator::NormalizedEnumerator;
use crate::error::{Error, Result};
use crate::exactmath::{binomial_poly, choose, int, rat, Rational, UniPoly};
use crate::zeta::ZetaPolynomial;

/// `g(w)` together with the parameters it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwPoly {
    pub g: UniPoly,
    pub n: usize,
    pub d: usize,
    pub d_dual: usize,
    pub q: u32,
}

impl GwPoly {
    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        poly_degree(&self.g)
    }
}

fn poly_degree(p: &UniPoly) -> i64 {
    p.degree().map_or(-1, |d| d as i64)
}

fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `(a_w - (q-1) a_(w-1)) (-1)^(w-d)`.
pub fn g_value(a: &NormalizedEnumerator, w: i64) -> Rational {
    let qm1 = int(a.q as i64 - 1);
    (a.a(w) - qm1 * a.a(w - 1)) * sign(w - a.d as i64)
}

/// `(a_w - (q-1)^c a_(w-c)) (-1)^(w-d)`.
pub fn h_value(a: &NormalizedEnumerator, c: usize, w: i64) -> Rational {
    let qc = num_traits::pow(int(a.q as i64 - 1), c);
    (a.a(w) - qc * a.a(w - c as i64)) * sign(w - a.d as i64)
}

/// Interpolates `g` through `w = 1..=n-d_dual+1`, then audits every
/// `w` in `1..=n` and the exact degree `n - d_dual`.
pub fn g_poly(a: &NormalizedEnumerator, d_dual: usize) -> Result<GwPoly> {
    let n = a.n;
    if d_dual == 0 || d_dual > n + 1 {
        return Err(Error::InvalidParameters(format!("dual distance {d_dual} outside 1..={}", n + 1)));
    }
    let npts = n + 1 - d_dual;
    let pts: Vec<_> = (1..=npts as i64).map(|w| (int(w), g_value(a, w))).collect();
    let g = UniPoly::interpolate(&pts);
    for w in 1..=n as i64 {
        if g.eval(&int(w)) != g_value(a, w) {
            return Err(Error::CheckFailed(format!("g(w) does not extrapolate to w = {w}")));
        }
    }
    let expected = n as i64 - d_dual as i64;
    if poly_degree(&g) != expected {
        return Err(Error::CheckFailed(format!(
            "g(w) has degree {}, expected {expected}",
            poly_degree(&g)
        )));
    }
    Ok(GwPoly { g, n, d: a.d, d_dual, q: a.q })
}

/// `(q-1) sum_i (-1)^i p_i C(w-2, d+i-2)`.
pub fn g_from_zeta(p: &ZetaPolynomial) -> GwPoly {
    let mut g = UniPoly::zero();
    for (i, pi) in p.p.coeffs().iter().enumerate() {
        let kk = p.d as i64 + i as i64 - 2;
        if kk < 0 || pi.is_zero() {
            continue;
        }
        g = &g + &binomial_poly(-2, kk as u32).scale(&(pi * sign(i as i64)));
    }
    GwPoly { g: g.scale(&int(p.q as i64 - 1)), n: p.n, d: p.d, d_dual: p.d_dual, q: p.q }
}

/// The polynomial `(q-1) C(w-2, d-2)`, which is `g` whenever `d - 2 = n - d_dual`.
pub fn tight_case_g(q: u32, d: usize) -> UniPoly {
    if d < 2 {
        return UniPoly::zero();
    }
    binomial_poly(-2, d as u32 - 2).scale(&int(q as i64 - 1))
}

/// Comparison of the interpolated `g` against the zeta expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GIdentityReport {
    /// Both agree at every `w` from 2 up to enough points to pin the
    /// difference down as a polynomial.
    pub agree_from_two: bool,
    /// Points compared.
    pub points: usize,
    pub at_one: (Rational, Rational),
}

pub fn compare_g(interpolated: &GwPoly, expanded: &GwPoly) -> GIdentityReport {
    let top = interpolated.degree().max(expanded.degree()).max(0) as usize;
    let last = (interpolated.n).max(top + 2);
    let agree = (2..=last as i64).all(|w| interpolated.g.eval(&int(w)) == expanded.g.eval(&int(w)));
    GIdentityReport {
        agree_from_two: agree,
        points: last - 1,
        at_one: (interpolated.g.eval(&Rational::one()), expanded.g.eval(&Rational::one())),
    }
}

/// `h(w)` for divisor `c`, with the degree bound it is held to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPoly {
    pub h: UniPoly,
    pub c: usize,
    pub degree_bound: i64,
    /// Binary, all weights even, all-one word present, `c` even.
    pub degree_drop: bool,
}

impl HPoly {
    pub fn degree(&self) -> i64 {
        poly_degree(&self.h)
    }
}

fn binary_even_with_all_one(a: &NormalizedEnumerator) -> bool {
    a.q == 2 && (1..=a.n as i64).step_by(2).all(|w| a.a(w).is_zero()) && !a.a(a.n as i64).is_zero()
}

/// `h` with `h(w) = (a_w - (q-1)^c a_(w-c)) (-1)^(w-d)` on `w = c..=n`.
///
/// Built as the telescoping combination [`h_from_g`] of the interpolated
/// `g`, which fixes `h` even when `n - c + 1` values would not; every
/// prescribed value and the degree bound are then checked.
pub fn h_poly(a: &NormalizedEnumerator, c: usize, d_dual: usize) -> Result<HPoly> {
    let n = a.n;
    if c == 0 || c > n {
        return Err(Error::InvalidParameters(format!("divisor {c} outside 1..={n}")));
    }
    // the telescoping sum cancels the leading term only for even c
    let drop = binary_even_with_all_one(a) && c.is_multiple_of(2);
    let bound = n as i64 - d_dual as i64 - i64::from(drop);
    let h = h_from_g(&g_poly(a, d_dual)?, c);
    if poly_degree(&h) > bound {
        return Err(Error::CheckFailed(format!(
            "h(w) has degree {} above the bound {bound}",
            poly_degree(&h)
        )));
    }
    for w in c..=n {
        if h.eval(&int(w as i64)) != h_value(a, c, w as i64) {
            return Err(Error::CheckFailed(format!("h(w) does not reproduce w = {w}")));
        }
    }
    Ok(HPoly { h, c, degree_bound: bound, degree_drop: drop })
}

/// `sum_(j<c) (-(q-1))^j g(w-j)`, which telescopes to `h` for `w >= c`.
pub fn h_from_g(g: &GwPoly, c: usize) -> UniPoly {
    let ratio = -int(g.q as i64 - 1);
    let mut acc = UniPoly::zero();
    let mut f = Rational::one();
    for j in 0..c {
        let shifted = g.g.compose(&UniPoly::from_coeffs(vec![int(-(j as i64)), Rational::one()]));
        acc = &acc + &shifted.scale(&f);
        f *= &ratio;
    }
    acc
}

/// `gcd{ i > 0 : A_i != 0 }`, or 0 for the zero code.
pub fn divisibility(a: &WeightDistribution) -> usize {
    divisibility_of(a.counts.iter().map(|c| !c.is_zero()))
}

pub fn divisibility_of(nonzero: impl Iterator<Item = bool>) -> usize {
    nonzero
        .enumerate()
        .skip(1)
        .filter(|&(_, nz)| nz)
        .fold(0usize, |g, (i, _)| g.gcd(&i))
}

/// `((c-1)/c)(n-c) + (d-2c)/c`.
pub fn proof_zero_bound(n: usize, d: usize, c: usize) -> Rational {
    let c_i = c as i64;
    rat((c_i - 1) * (n as i64 - c_i), c_i) + rat(d as i64 - 2 * c_i, c_i)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroAudit {
    /// Integer zeros of `h` in `[c, n]`.
    pub integer_zeros: Vec<usize>,
    /// Points in `[c, n]` where `a_w = a_(w-c) = 0`.
    pub attributable: usize,
    pub bound: Rational,
    pub meets_bound: bool,
    pub identically_zero: bool,
    /// A nonzero `h` has at least as many roots as its degree allows.
    pub degree_consistent: bool,
}

pub fn zero_count_audit(h: &UniPoly, a: &NormalizedEnumerator, c: usize) -> ZeroAudit {
    let n = a.n;
    let integer_zeros: Vec<usize> = (c..=n).filter(|&w| h.eval(&int(w as i64)).is_zero()).collect();
    let attributable = (c..=n)
        .filter(|&w| a.a(w as i64).is_zero() && a.a(w as i64 - c as i64).is_zero())
        .count();
    let bound = proof_zero_bound(n, a.d, c);
    let identically_zero = h.is_zero();
    ZeroAudit {
        meets_bound: int(attributable as i64) >= bound,
        degree_consistent: identically_zero || poly_degree(h) >= integer_zeros.len() as i64,
        integer_zeros,
        attributable,
        bound,
        identically_zero,
    }
}

/// `sum_w a_w C(s+1,w) = q sum_w a_w C(s,w)` for `n - d_dual < s < n`.
pub fn subcode_average_identity(a: &NormalizedEnumerator, d_dual: usize) -> bool {
    let n = a.n;
    let avg = |s: usize| -> Rational { (0..=s).map(|w| a.a(w as i64) * choose(s, w)).sum() };
    let q = int(a.q as i64);
    (n + 1 - d_dual.min(n + 1)..n).all(|s| avg(s + 1) == &q * avg(s))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum SelfDualType {
    I,
    II,
    III,
    IV,
}

impl SelfDualType {
    /// Type for field size `q` and divisor `c`, if any.
    pub fn classify(q: u32, c: usize) -> Option<Self> {
        match q {
            2 if c > 0 && c.is_multiple_of(4) => Some(Self::II),
            2 if c > 0 && c.is_multiple_of(2) => Some(Self::I),
            3 if c > 0 && c.is_multiple_of(3) => Some(Self::III),
            4 if c > 0 && c.is_multiple_of(2) => Some(Self::IV),
            _ => None,
        }
    }

    /// `(q, c)` of the family.
    pub fn parameters(self) -> (u32, usize) {
        match self {
            Self::I => (2, 2),
            Self::II => (2, 4),
            Self::III => (3, 3),
            Self::IV => (4, 2),
        }
    }

    /// Largest minimum distance allowed at length `n`.
    pub fn bound(self, n: usize) -> usize {
        match self {
            Self::I => 2 * (n / 8) + 2,
            Self::II => 4 * (n / 24) + 4,
            Self::III => 3 * (n / 12) + 3,
            Self::IV => 2 * (n / 6) + 2,
        }
    }
}

/// `lhs <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub lhs: i64,
    pub rhs: i64,
}

impl Inequality {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }

    pub fn slack(&self) -> i64 {
        self.rhs - self.lhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MallowsSloane {
    pub kind: SelfDualType,
    pub d: usize,
    pub bound: usize,
}

impl MallowsSloane {
    pub fn holds(&self) -> bool {
        self.d <= self.bound
    }

    pub fn met(&self) -> bool {
        self.d == self.bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_dual: usize,
    pub c: usize,
    /// `d <= n - k + 1`.
    pub singleton: Inequality,
    /// `d - 2 <= n - d_dual`.
    pub dual_distance: Inequality,
    /// `d + c d_dual <= n + c(c+1)`.
    pub divisibility: Inequality,
    /// `2d + c d_dual <= n + c(c+2)` for binary even codes with the all-one word.
    pub strong: Option<Inequality>,
    /// Present for formally self-dual codes of a known type.
    pub mallows_sloane: Option<MallowsSloane>,
}

impl BoundsReport {
    pub fn passed(&self) -> bool {
        self.singleton.holds()
            && self.dual_distance.holds()
            && self.divisibility.holds()
            && self.strong.as_ref().is_none_or(Inequality::holds)
            && self.mallows_sloane.as_ref().is_none_or(MallowsSloane::holds)
    }
}

pub fn check_bounds(a: &WeightDistribution, a_dual: &WeightDistribution) -> BoundsReport {
    let (n, k, d, dd) = (a.n as i64, a.k as i64, a.d as i64, a.d_dual as i64);
    let c = divisibility(a);
    let ci = c as i64;
    let strong = (a.q == 2 && c.is_multiple_of(2) && c > 0 && a.count(a.n).is_one())
        .then(|| Inequality { lhs: 2 * d + ci * dd, rhs: n + ci * (ci + 2) });
    let formally_self_dual = a.n == 2 * a.k && a.counts == a_dual.counts;
    let mallows_sloane = formally_self_dual
        .then(|| SelfDualType::classify(a.q, c))
        .flatten()
        .map(|kind| MallowsSloane { kind, d: a.d, bound: kind.bound(a.n) });
    BoundsReport {
        q: a.q,
        n: a.n,
        k: a.k,
        d: a.d,
        d_dual: a.d_dual,
        c,
        singleton: Inequality { lhs: d, rhs: n - k + 1 },
        dual_distance: Inequality { lhs: d - 2, rhs: n - dd },
        divisibility: Inequality { lhs: d + ci * dd, rhs: n + ci * (ci + 1) },
        strong,
        mallows_sloane,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{make_mds_code, weight_distribution};
    use crate::enumerator::{macwilliams, normalize};
    use crate::fixtures;
    use crate::zeta::zeta_of;

    fn setup(c: &crate::code::LinearCode) -> (WeightDistribution, NormalizedEnumerator) {
        let wd = weight_distribution(c).unwrap();
        let a = normalize(&wd);
        (wd, a)
    }

    #[test]
    fn hamming_g() {
        let (wd, a) = setup(&fixtures::hamming_7_4());
        let g = g_poly(&a, wd.d_dual).unwrap();
        assert_eq!(g.degree(), 3);
        let vals: Vec<_> = (1..=7).map(|w| g.g.eval(&int(w))).collect();
        assert_eq!(vals, vec![int(-1), int(0), rat(1, 5), int(0), rat(-1, 5), int(0), int(1)]);
        let gz = g_from_zeta(&zeta_of(&wd).unwrap());
        assert_eq!(gz.g, g.g);
        assert_eq!(gz.g.eval(&int(3)), rat(1, 5));
        assert_eq!(gz.g.eval(&int(5)), rat(-1, 5));
        assert!(compare_g(&g, &gz).agree_from_two);
    }

    #[test]
    fn repetition_g_is_one() {
        let (wd, a) = setup(&fixtures::repetition_2());
        let g = g_poly(&a, wd.d_dual).unwrap();
        assert_eq!(g.g, UniPoly::one());
        assert_eq!(g_from_zeta(&zeta_of(&wd).unwrap()).g, UniPoly::one());
    }

    #[test]
    fn tight_case_is_unsigned() {
        for (q, n, k) in [(5, 5, 2), (4, 4, 2), (7, 6, 3), (2, 2, 1)] {
            let (wd, a) = setup(&make_mds_code(q, n, k).unwrap());
            assert_eq!(wd.d - 2, wd.n - wd.d_dual);
            let g = g_poly(&a, wd.d_dual).unwrap();
            let tight = tight_case_g(q, wd.d);
            assert_eq!(g.g, tight);
            // the alternating sign agrees only where w - d is even or w < d
            for w in 2..=n as i64 {
                let signed = tight.eval(&int(w)) * sign(w - wd.d as i64);
                assert_eq!(signed == g.g.eval(&int(w)), (w - wd.d as i64) % 2 == 0 || w < wd.d as i64 || signed.is_zero());
            }
        }
        let (_, a) = setup(&make_mds_code(5, 5, 2).unwrap());
        assert_eq!(g_value(&a, 5), int(12));
    }

    #[test]
    fn divisibility_examples() {
        assert_eq!(divisibility(&weight_distribution(&fixtures::extended_hamming_8_4()).unwrap()), 4);
        assert_eq!(divisibility(&weight_distribution(&fixtures::hamming_7_4()).unwrap()), 1);
        assert_eq!(divisibility(&weight_distribution(&fixtures::hexacode()).unwrap()), 2);
    }

    #[test]
    fn h_examples() {
        let (wd, a) = setup(&fixtures::extended_hamming_8_4());
        let h = h_poly(&a, 4, wd.d_dual).unwrap();
        assert!(h.degree_drop);
        assert_eq!(h.degree_bound, 3);
        let pts: Vec<_> = (4..=8).map(|w| (int(w), h_value(&a, 4, w))).collect();
        assert_eq!(UniPoly::interpolate(&pts), h.h);
        let audit = zero_count_audit(&h.h, &a, 4);
        assert_eq!(audit.integer_zeros, vec![5, 6, 7]);
        assert_eq!(audit.bound, int(2));
        assert!(audit.meets_bound && audit.degree_consistent);

        let (wd, a) = setup(&fixtures::hexacode());
        let h = h_poly(&a, 2, wd.d_dual).unwrap();
        let expected = UniPoly::from_ints(&[15, -8, 1]).scale(&int(-3));
        assert_eq!(h.h, expected);
        let audit = zero_count_audit(&h.h, &a, 2);
        assert_eq!(audit.bound, int(2));
        assert!(audit.meets_bound);

        let (wd, a) = setup(&fixtures::hamming_7_4());
        let g = g_poly(&a, wd.d_dual).unwrap();
        assert_eq!(h_poly(&a, 1, wd.d_dual).unwrap().h, g.g);
        assert_eq!(zero_count_audit(&g.g, &a, 1).bound, int(1));
    }

    #[test]
    fn bounds_examples() {
        let ext = weight_distribution(&fixtures::extended_hamming_8_4()).unwrap();
        let r = check_bounds(&ext, &macwilliams(&ext).unwrap());
        let ms = r.mallows_sloane.clone().unwrap();
        assert_eq!((ms.kind, ms.bound), (SelfDualType::II, 4));
        assert!(ms.met() && r.passed() && r.strong.is_some());

        let hex = weight_distribution(&fixtures::hexacode()).unwrap();
        let r = check_bounds(&hex, &macwilliams(&hex).unwrap());
        let ms = r.mallows_sloane.clone().unwrap();
        assert_eq!((ms.kind, ms.bound), (SelfDualType::IV, 4));
        assert!(ms.met() && r.passed());

        let ham = weight_distribution(&fixtures::hamming_7_4()).unwrap();
        let r = check_bounds(&ham, &macwilliams(&ham).unwrap());
        assert_eq!(r.divisibility, Inequality { lhs: 7, rhs: 9 });
        assert!(r.mallows_sloane.is_none() && r.passed());

        let rep = weight_distribution(&fixtures::repetition_2()).unwrap();
        let r = check_bounds(&rep, &macwilliams(&rep).unwrap());
        assert!(r.mallows_sloane.unwrap().met());
    }

    #[test]
    fn subcode_average() {
        for c in [fixtures::hamming_7_4(), fixtures::hexacode(), make_mds_code(7, 6, 3).unwrap()] {
            let (wd, a) = setup(&c);
            assert!(subcode_average_identity(&a, wd.d_dual));
        }
    }
}
