//! Weight-enumerator algebra: the MacWilliams transform, normalized
//! enumerators `a(t)`, coordinate-averaged puncturing and shortening, and
//! the truncated series `a(t)(1+t)^d` that both operations preserve.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::code::WeightDistribution;
use crate::error::{Error, Result};
use crate::exactmath::{choose, int, Rational, TruncatedSeries, UniPoly};

/// `K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i,s) C(n-i,j-s)`.
pub fn krawtchouk(q: u32, n: usize, j: usize, i: usize) -> BigInt {
    let binom = |a: usize, b: usize| -> BigInt {
        if b > a {
            BigInt::zero()
        } else {
            crate::exactmath::binomial(a as i64, b as u32)
        }
    };
    let qm1 = BigInt::from(q - 1);
    let mut kij = BigInt::zero();
    for s in 0..=j.min(i) {
        if j - s > n - i {
            continue;
        }
        let term = binom(i, s) * binom(n - i, j - s) * num_traits::pow(qm1.clone(), j - s);
        if s % 2 == 1 {
            kij -= term;
        } else {
            kij += term;
        }
    }
    kij
}

/// Dual counts `B_j = q^-k sum_i A_i K_j(i)`.
pub fn krawtchouk_transform(q: u32, n: usize, k: usize, counts: &[BigInt]) -> Result<Vec<BigInt>> {
    let size = num_traits::pow(BigInt::from(q), k);
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (i, a) in counts.iter().enumerate() {
            if !a.is_zero() {
                acc += a * krawtchouk(q, n, j, i);
            }
        }
        let (quot, rem) = acc.div_rem(&size);
        if !rem.is_zero() {
            return Err(Error::InvalidDistribution(format!(
                "MacWilliams count B_{j} is not an integer"
            )));
        }
        if quot.is_negative() {
            return Err(Error::InvalidDistribution(format!("MacWilliams count B_{j} is negative")));
        }
        out.push(quot);
    }
    Ok(out)
}

/// Distribution of the dual code, `A_dual(x,y) = A(x+(q-1)y, x-y)/|C|`.
pub fn macwilliams(a: &WeightDistribution) -> Result<WeightDistribution> {
    let counts = krawtchouk_transform(a.q, a.n, a.k, &a.counts)?;
    WeightDistribution::from_counts(a.q, a.n, a.n - a.k, counts)
}

/// Weight counts with rational entries, as produced by the averaged operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalDistribution {
    pub q: u32,
    pub n: usize,
    pub counts: Vec<Rational>,
}

impl RationalDistribution {
    pub fn from_distribution(a: &WeightDistribution) -> Self {
        RationalDistribution {
            q: a.q,
            n: a.n,
            counts: a.counts.iter().cloned().map(Rational::from_integer).collect(),
        }
    }

    pub fn total(&self) -> Rational {
        self.counts.iter().sum()
    }

    /// Smallest positive index with a nonzero count.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| !self.counts[i].is_zero())
    }
}

/// `(1/n)(d/dx + d/dy)` applied to `A(x,y)`.
pub fn puncture_avg(a: &RationalDistribution) -> Result<RationalDistribution> {
    let n = a.n;
    if n < 2 {
        return Err(Error::InvalidParameters("puncturing needs n >= 2".into()));
    }
    let inv_n = Rational::new(BigInt::one(), BigInt::from(n));
    let counts = (0..n)
        .map(|w| (int((n - w) as i64) * &a.counts[w] + int(w as i64 + 1) * &a.counts[w + 1]) * &inv_n)
        .collect();
    Ok(RationalDistribution { q: a.q, n: n - 1, counts })
}

/// `(1/n) d/dx` applied to `A(x,y)`.
pub fn shorten_avg(a: &RationalDistribution) -> Result<RationalDistribution> {
    let n = a.n;
    if n < 2 {
        return Err(Error::InvalidParameters("shortening needs n >= 2".into()));
    }
    let inv_n = Rational::new(BigInt::one(), BigInt::from(n));
    let counts = (0..n).map(|w| int((n - w) as i64) * &a.counts[w] * &inv_n).collect();
    Ok(RationalDistribution { q: a.q, n: n - 1, counts })
}

/// `a_w = A_w / C(n,w)` and `a(t) = (a_d + a_(d+1) t + ... + a_n t^(n-d)) / (q-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedEnumerator {
    pub q: u32,
    pub n: usize,
    pub d: usize,
    pub a_list: Vec<Rational>,
    pub a_poly: UniPoly,
}

impl NormalizedEnumerator {
    pub fn from_rational(a: &RationalDistribution) -> Result<Self> {
        let d = a
            .min_distance()
            .ok_or_else(|| Error::InvalidDistribution("no nonzero weight".into()))?;
        let a_list: Vec<Rational> = a
            .counts
            .iter()
            .enumerate()
            .map(|(w, c)| c / choose(a.n, w))
            .collect();
        let scale = Rational::new(BigInt::one(), BigInt::from(a.q - 1));
        let a_poly = UniPoly::from_coeffs(a_list[d..].iter().map(|v| v * &scale).collect());
        Ok(NormalizedEnumerator { q: a.q, n: a.n, d, a_list, a_poly })
    }

    /// `a_w`, zero outside `0..=n`.
    pub fn a(&self, w: i64) -> Rational {
        if w < 0 {
            return Rational::zero();
        }
        self.a_list.get(w as usize).cloned().unwrap_or_else(Rational::zero)
    }
}

pub fn normalize(a: &WeightDistribution) -> NormalizedEnumerator {
    NormalizedEnumerator::from_rational(&RationalDistribution::from_distribution(a))
        .expect("a code of dimension >= 1 has a nonzero word")
}

/// `a(t)(1+t)^d mod t^(n-d+1)`.
pub fn invariant_thm23(a: &NormalizedEnumerator) -> TruncatedSeries {
    let prod = &a.a_poly * &UniPoly::from_ints(&[1, 1]).pow(a.d as u32);
    TruncatedSeries::from_poly(&prod, a.n - a.d)
}

/// Compares the invariant of an enumerator with that of a derived one on
/// the common truncation order.
pub fn invariant_preserved(original: &NormalizedEnumerator, derived: &NormalizedEnumerator) -> bool {
    invariant_thm23(original).agrees_with(&invariant_thm23(derived))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn wd(q: u32, n: usize, k: usize, c: &[u64]) -> WeightDistribution {
        WeightDistribution::from_u64(q, n, k, c).unwrap()
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn macwilliams_examples() {
        let rep = wd(2, 2, 1, &[1, 0, 1]);
        assert_eq!(ints(&macwilliams(&rep).unwrap().counts), vec![1, 0, 1]);
        let c10 = wd(2, 2, 1, &[1, 1, 0]);
        assert_eq!(ints(&macwilliams(&c10).unwrap().counts), vec![1, 1, 0]);
        let ham = wd(2, 7, 4, &[1, 0, 0, 7, 7, 0, 0, 1]);
        let simplex = macwilliams(&ham).unwrap();
        assert_eq!(ints(&simplex.counts), vec![1, 0, 0, 0, 7, 0, 0, 0]);
        assert_eq!(simplex.k, 3);
        assert_eq!(simplex.d, ham.d_dual);
        assert_eq!(macwilliams(&simplex).unwrap(), ham);
    }

    #[test]
    fn invalid_distribution_detected() {
        let bogus: Vec<BigInt> = [1, 3, 0, 0].iter().map(|&v| BigInt::from(v)).collect();
        assert!(krawtchouk_transform(2, 3, 2, &bogus).is_err());
    }

    #[test]
    fn normalize_examples() {
        let ham = normalize(&wd(2, 7, 4, &[1, 0, 0, 7, 7, 0, 0, 1]));
        assert_eq!(
            ham.a_poly,
            UniPoly::from_coeffs(vec![rat(1, 5), rat(1, 5), int(0), int(0), int(1)])
        );
        assert_eq!(normalize(&wd(2, 2, 1, &[1, 0, 1])).a_poly, UniPoly::one());
        let hexa = normalize(&wd(4, 6, 3, &[1, 0, 0, 0, 45, 0, 18]));
        assert_eq!(hexa.a_poly, UniPoly::from_ints(&[1, 0, 6]));
        assert_eq!(hexa.a(4), int(3));
    }

    #[test]
    fn averaged_operators() {
        let sq = RationalDistribution { q: 2, n: 2, counts: vec![int(1), int(0), int(1)] };
        assert_eq!(puncture_avg(&sq).unwrap().counts, vec![int(1), int(1)]);
        assert_eq!(shorten_avg(&sq).unwrap().counts, vec![int(1), int(0)]);
        let xn = RationalDistribution { q: 3, n: 4, counts: vec![int(1), int(0), int(0), int(0), int(0)] };
        assert_eq!(puncture_avg(&xn).unwrap().counts, vec![int(1), int(0), int(0), int(0)]);
        assert_eq!(shorten_avg(&xn).unwrap().counts, vec![int(1), int(0), int(0), int(0)]);

        let ham = RationalDistribution::from_distribution(&wd(2, 7, 4, &[1, 0, 0, 7, 7, 0, 0, 1]));
        let p = puncture_avg(&ham).unwrap();
        assert_eq!(p.counts[2], int(3));
        assert_eq!(p.total(), int(16));
        let s = shorten_avg(&ham).unwrap();
        assert_eq!(s.counts[6], int(0));
        assert_eq!(s.total(), int(8));
    }

    #[test]
    fn invariant_examples() {
        let rep = normalize(&wd(2, 2, 1, &[1, 0, 1]));
        assert_eq!(invariant_thm23(&rep).to_poly(), UniPoly::one());
        assert_eq!(invariant_thm23(&rep).order(), 0);
        let ham = normalize(&wd(2, 7, 4, &[1, 0, 0, 7, 7, 0, 0, 1]));
        assert_eq!(
            invariant_thm23(&ham).to_poly(),
            UniPoly::from_coeffs(vec![rat(1, 5), rat(4, 5), rat(6, 5), rat(4, 5), rat(6, 5)])
        );
        let hr = RationalDistribution::from_distribution(&wd(2, 7, 4, &[1, 0, 0, 7, 7, 0, 0, 1]));
        let punct = NormalizedEnumerator::from_rational(&puncture_avg(&hr).unwrap()).unwrap();
        assert_eq!((punct.n, punct.d), (6, 2));
        assert!(invariant_preserved(&ham, &punct));
        let short = NormalizedEnumerator::from_rational(&shorten_avg(&hr).unwrap()).unwrap();
        assert!(invariant_preserved(&ham, &short));
    }
}
