//! Rank-generating polynomials of the column matroid, their normalized
//! variants, Greene's substitution identities, and the Clifford inequality
//! `2 r(A) >= |A|`.

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::code::{dual_code, mask_to_indices, weight_distribution, ColumnRank, LinearCode, WeightDistribution};
use crate::error::{Error, Result};
use crate::exactmath::{choose, int, BiPoly, RatFun, Rational, TruncatedSeries, UniPoly};

/// Largest length for which all `2^n` column subsets are visited.
pub const MAX_SUBSET_LENGTH: usize = 22;
/// Largest length searched by [`find_two_disjoint_bases`].
pub const MAX_BASIS_SEARCH_LENGTH: usize = 20;

/// Number of column subsets per `(|A|, r(A))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    pub n: usize,
    pub k: usize,
    /// `counts[i][r]`: subsets of size `i` and rank `r`.
    pub counts: Vec<Vec<u64>>,
}

pub fn rank_profile(c: &LinearCode) -> Result<RankProfile> {
    let (n, k) = (c.n(), c.k());
    if n > MAX_SUBSET_LENGTH {
        return Err(Error::Capacity(format!("2^{n} column subsets exceeds the limit 2^{MAX_SUBSET_LENGTH}")));
    }
    let oracle = ColumnRank::new(c);
    let zero = || vec![vec![0u64; k + 1]; n + 1];
    let counts = (0u64..1 << n)
        .into_par_iter()
        .fold(zero, |mut acc, mask| {
            acc[mask.count_ones() as usize][oracle.rank(mask)] += 1;
            acc
        })
        .reduce(zero, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                ra.iter_mut().zip(rb).for_each(|(x, y)| *x += y);
            }
            a
        });
    Ok(RankProfile { n, k, counts })
}

/// `W(x,y) = sum_A x^(r(G)-r(A)) y^(|A|-r(A))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankGenPoly {
    pub w: BiPoly,
    pub n: usize,
    pub k: usize,
}

/// Rank-generating polynomial with layer `|A| = i` divided by `C(n,i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedRankGen {
    pub wn: BiPoly,
    pub n: usize,
    pub k: usize,
}

impl RankProfile {
    pub fn rank_gen(&self) -> RankGenPoly {
        let mut w = BiPoly::zero();
        for (i, row) in self.counts.iter().enumerate() {
            for (r, &cnt) in row.iter().enumerate() {
                if cnt > 0 {
                    w.add_term((self.k - r) as u32, (i - r) as u32, int(cnt as i64));
                }
            }
        }
        RankGenPoly { w, n: self.n, k: self.k }
    }

    pub fn normalized(&self) -> NormalizedRankGen {
        let mut wn = BiPoly::zero();
        for (i, row) in self.counts.iter().enumerate() {
            let layer = choose(self.n, i);
            for (r, &cnt) in row.iter().enumerate() {
                if cnt > 0 {
                    wn.add_term((self.k - r) as u32, (i - r) as u32, int(cnt as i64) / &layer);
                }
            }
        }
        NormalizedRankGen { wn, n: self.n, k: self.k }
    }
}

pub fn rank_gen_poly(c: &LinearCode) -> Result<RankGenPoly> {
    Ok(rank_profile(c)?.rank_gen())
}

pub fn normalized_rank_gen(c: &LinearCode) -> Result<NormalizedRankGen> {
    Ok(rank_profile(c)?.normalized())
}

/// `W_n + x^(k+1)/(1-x) + y^(n-k+1)/(1-y)` over the denominator `(1-x)(1-y)`.
pub fn wn_plus(wn: &NormalizedRankGen) -> RatFun {
    let one = BiPoly::one();
    let omx = &one - &BiPoly::x();
    let omy = &one - &BiPoly::y();
    let x_tail = BiPoly::monomial(Rational::one(), wn.k as u32 + 1, 0);
    let y_tail = BiPoly::monomial(Rational::one(), 0, (wn.n - wn.k) as u32 + 1);
    let num = &(&(&wn.wn * &omx) * &omy) + &(&(&x_tail * &omy) + &(&y_tail * &omx));
    RatFun::new(num, &omx * &omy)
}

/// `W(qy/(x-y), (x-y)/y) (x-y)^k y^(n-k)` expanded; equals `A(x,y)` over GF(q).
///
/// Works for any field size `q` containing the generator entries, since `W`
/// depends only on the matrix.
pub fn greene_predict(w: &RankGenPoly, q: u32) -> BiPoly {
    let x_minus_y = &BiPoly::x() - &BiPoly::y();
    let q = int(q as i64);
    let mut acc = BiPoly::zero();
    for (&(a, b), c) in w.w.terms() {
        // c q^a y^(a+n-k-b) (x-y)^(k-a+b)
        let coef = c * num_traits::pow(q.clone(), a as usize);
        let yexp = a + (w.n - w.k) as u32 - b;
        let term = x_minus_y.pow(w.k as u32 - a + b).shift(0, yexp).scale(&coef);
        acc = &acc + &term;
    }
    acc
}

pub fn check_greene(a: &WeightDistribution, w: &RankGenPoly) -> bool {
    greene_predict(w, a.q) == a.enumerator_poly()
}

/// `A_n(1,t) = sum_i A_i t^i / C(n,i)`.
pub fn normalized_enumerator_series(a: &WeightDistribution) -> UniPoly {
    UniPoly::from_coeffs(
        a.counts
            .iter()
            .enumerate()
            .map(|(i, c)| Rational::from_integer(c.clone()) / choose(a.n, i))
            .collect(),
    )
}

/// `W_n(qt/(1+t), (1+t)/t) (1+t)^k t^(n-k)` as a polynomial in `t`.
pub fn greene_normalized_rhs(wn: &NormalizedRankGen, q: u32) -> Result<UniPoly> {
    let one_plus_t = UniPoly::from_ints(&[1, 1]);
    let q = int(q as i64);
    let mut acc = UniPoly::zero();
    for (&(a, b), c) in wn.wn.terms() {
        // c q^a t^(a-b+n-k) (1+t)^(k-a+b)
        let texp = a as i64 - b as i64 + (wn.n - wn.k) as i64;
        let pexp = wn.k as i64 - a as i64 + b as i64;
        if texp < 0 || pexp < 0 {
            return Err(Error::Structural("negative power left after clearing denominators".into()));
        }
        let coef = c * num_traits::pow(q.clone(), a as usize);
        acc = &acc + &one_plus_t.pow(pexp as u32).shift(texp as usize).scale(&coef);
    }
    Ok(acc)
}

/// `A_n(1,t)(1+t)^(n+1) == W_n(qt/(1+t),(1+t)/t)(1+t)^k t^(n-k) mod t^(n+1)`.
pub fn check_greene_normalized(an: &UniPoly, wn: &NormalizedRankGen, q: u32) -> Result<bool> {
    let lhs = an * &UniPoly::from_ints(&[1, 1]).pow(wn.n as u32 + 1);
    let rhs = greene_normalized_rhs(wn, q)?;
    Ok(TruncatedSeries::from_poly(&lhs, wn.n) == TruncatedSeries::from_poly(&rhs, wn.n))
}

/// Binary code with `A_i = A_(n-i)`.
pub fn is_self_complementary(a: &WeightDistribution) -> bool {
    a.q == 2 && a.counts.iter().eq(a.counts.iter().rev())
}

/// The two-sided identity with the second polynomial equal to `W_n`, which
/// is only claimed for [`is_self_complementary`] codes,
/// as a polynomial identity in `(s, t)`:
/// `A_n(s,t)(s+t)^(n+1) = W_n(qt/(s+t),(s+t)/t)(s+t)^k t^(n-k) s^(n+1)
///                      + W_n(qs/(s+t),(s+t)/s)(s+t)^k s^(n-k) t^(n+1)`.
pub fn check_greene_symmetric(a: &WeightDistribution, wn: &NormalizedRankGen) -> bool {
    let (n, k) = (wn.n as u32, wn.k as u32);
    let s_plus_t = &BiPoly::x() + &BiPoly::y();
    let mut an = BiPoly::zero();
    for (i, c) in a.counts.iter().enumerate() {
        an.add_term(n - i as u32, i as u32, Rational::from_integer(c.clone()) / choose(a.n, i));
    }
    let lhs = &an * &s_plus_t.pow(n + 1);
    let q = int(a.q as i64);
    let mut rhs = BiPoly::zero();
    for (&(ea, eb), c) in wn.wn.terms() {
        let coef = c * num_traits::pow(q.clone(), ea as usize);
        let texp = ea + n - k - eb;
        let base = s_plus_t.pow(k - ea + eb).scale(&coef);
        rhs = &rhs + &base.shift(n + 1, texp);
        rhs = &rhs + &base.shift(texp, n + 1);
    }
    lhs == rhs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WnOperation {
    Puncture,
    Shorten,
}

/// `W_n - y^(n-k)` (puncture, `k` kept) or `W_n - x^k` (shorten, `k - 1`).
pub fn puncture_shorten_wn(wn: &NormalizedRankGen, which: WnOperation) -> NormalizedRankGen {
    match which {
        WnOperation::Puncture => NormalizedRankGen {
            wn: &wn.wn - &BiPoly::monomial(Rational::one(), 0, (wn.n - wn.k) as u32),
            n: wn.n - 1,
            k: wn.k,
        },
        WnOperation::Shorten => NormalizedRankGen {
            wn: &wn.wn - &BiPoly::monomial(Rational::one(), wn.k as u32, 0),
            n: wn.n - 1,
            k: wn.k - 1,
        },
    }
}

/// Average of `W_n` over the `n` codes obtained by puncturing or shortening
/// one actual coordinate.
pub fn coordinate_averaged_wn(c: &LinearCode, which: WnOperation) -> Result<NormalizedRankGen> {
    let mut acc = BiPoly::zero();
    let mut meta = None;
    for j in 0..c.n() {
        let derived = match which {
            WnOperation::Puncture => c.puncture_coordinate(j)?,
            WnOperation::Shorten => c.shorten_coordinate(j)?,
        };
        let wn = normalized_rank_gen(&derived)?;
        meta = Some((wn.n, wn.k));
        acc = &acc + &wn.wn;
    }
    let (n, k) = meta.ok_or_else(|| Error::InvalidParameters("empty code".into()))?;
    Ok(NormalizedRankGen { wn: acc.scale(&Rational::new(BigInt::one(), BigInt::from(c.n()))), n, k })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CodeClass {
    SelfDual,
    ContainsDual,
    FormallySelfDual,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliffordMode {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

/// Decomposition data at an equality witness `A` of a self-dual code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// 0-based column indices of `A`.
    pub subset: Vec<usize>,
    pub dim_on_subset: usize,
    pub dim_on_complement: usize,
    /// Dimension predicted by `|A| - r(A)`.
    pub predicted_dim: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordReport {
    pub class: CodeClass,
    pub n: usize,
    pub k: usize,
    pub visited: u64,
    /// Whether the inequality is guaranteed (the code contains its dual).
    pub inequality_expected: bool,
    pub violations: u64,
    /// Smallest violating subset in visiting order, 0-based.
    pub first_violation: Option<Vec<usize>>,
    /// Proper nonempty subsets with `2 r(A) = |A|`.
    pub equality_witnesses: u64,
    /// Checked decompositions (self-dual codes only); all of them in
    /// exhaustive mode.
    pub decompositions: Vec<Decomposition>,
}

impl CliffordReport {
    pub fn decompositions_ok(&self) -> bool {
        self.decompositions.iter().all(|d| d.ok)
    }

    pub fn passed(&self) -> bool {
        self.violations == 0 && self.decompositions_ok()
    }
}

pub fn classify(c: &LinearCode) -> Result<CodeClass> {
    if c.k() == c.n() {
        return Ok(CodeClass::ContainsDual);
    }
    let dual = dual_code(c)?;
    if c.n() == 2 * c.k() && c.same_row_space(&dual) {
        return Ok(CodeClass::SelfDual);
    }
    if c.contains(&dual) {
        return Ok(CodeClass::ContainsDual);
    }
    if c.n() == 2 * c.k() && weight_distribution(c)?.counts == weight_distribution(&dual)?.counts {
        return Ok(CodeClass::FormallySelfDual);
    }
    Ok(CodeClass::Other)
}

fn complement(mask: u64, n: usize) -> u64 {
    !mask & ((1u64 << n) - 1)
}

fn support_union(rows: &[Vec<u8>]) -> u64 {
    rows.iter()
        .flat_map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(j, _)| j))
        .fold(0u64, |m, j| m | 1 << j)
}

fn self_orthogonal(c: &LinearCode, rows: &[Vec<u8>]) -> bool {
    let f = c.field();
    rows.iter().all(|a| {
        rows.iter()
            .all(|b| a.iter().zip(b).fold(0u8, |s, (&x, &y)| f.add(s, f.mul(x, y))) == 0)
    })
}

fn decompose(c: &LinearCode, oracle: &ColumnRank, mask: u64) -> Decomposition {
    let n = c.n();
    let comp = complement(mask, n);
    let on_a = c.subcode_vanishing_on(&mask_to_indices(comp));
    let on_comp = c.subcode_vanishing_on(&mask_to_indices(mask));
    let size = mask.count_ones() as usize;
    let predicted = size - oracle.rank(mask);
    let ok = on_a.len() == predicted
        && on_a.len() + on_comp.len() == c.k()
        && 2 * on_a.len() == size
        && support_union(&on_a) == mask
        && support_union(&on_comp) == comp
        && self_orthogonal(c, &on_a)
        && self_orthogonal(c, &on_comp);
    Decomposition {
        subset: mask_to_indices(mask),
        dim_on_subset: on_a.len(),
        dim_on_complement: on_comp.len(),
        predicted_dim: predicted,
        ok,
    }
}

/// Checks `2 r(A) >= |A|` over column subsets.
pub fn clifford_check(c: &LinearCode, mode: CliffordMode) -> Result<CliffordReport> {
    let n = c.n();
    let class = classify(c)?;
    let oracle = ColumnRank::new(c);
    let masks: Vec<u64> = match mode {
        CliffordMode::Exhaustive => {
            if n > MAX_SUBSET_LENGTH {
                return Err(Error::Capacity(format!(
                    "exhaustive Clifford check needs n <= {MAX_SUBSET_LENGTH}, got {n}"
                )));
            }
            (0..1u64 << n).collect()
        }
        CliffordMode::Sample { count, seed } => {
            if n > 63 {
                return Err(Error::Capacity("sampling supports n <= 63".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            (0..count).map(|_| rng.gen::<u64>() & full).collect()
        }
    };
    struct Acc {
        violations: u64,
        first: Option<usize>,
        witnesses: Vec<u64>,
    }
    let full = (1u64 << n) - 1;
    let acc = masks
        .par_iter()
        .enumerate()
        .fold(
            || Acc { violations: 0, first: None, witnesses: Vec::new() },
            |mut acc, (pos, &mask)| {
                let r = oracle.rank(mask);
                let size = mask.count_ones() as usize;
                if 2 * r < size {
                    acc.violations += 1;
                    acc.first = Some(acc.first.map_or(pos, |f| f.min(pos)));
                } else if 2 * r == size && mask != 0 && mask != full {
                    acc.witnesses.push(mask);
                }
                acc
            },
        )
        .reduce(
            || Acc { violations: 0, first: None, witnesses: Vec::new() },
            |mut a, b| {
                a.violations += b.violations;
                a.first = match (a.first, b.first) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                };
                a.witnesses.extend(b.witnesses);
                a
            },
        );
    let mut witnesses = acc.witnesses;
    witnesses.sort_unstable();
    witnesses.dedup();
    let decompositions = if class == CodeClass::SelfDual {
        witnesses.par_iter().map(|&m| decompose(c, &oracle, m)).collect()
    } else {
        Vec::new()
    };
    Ok(CliffordReport {
        class,
        n,
        k: c.k(),
        visited: masks.len() as u64,
        inequality_expected: matches!(class, CodeClass::SelfDual | CodeClass::ContainsDual),
        violations: acc.violations,
        first_violation: acc.first.map(|pos| mask_to_indices(masks[pos])),
        equality_witnesses: witnesses.len() as u64,
        decompositions,
    })
}

/// First partition (lexicographic in the first part) of the columns into two
/// independent `k`-sets. Requires `n = 2k`.
pub fn find_two_disjoint_bases(c: &LinearCode) -> Option<(Vec<usize>, Vec<usize>)> {
    let (n, k) = (c.n(), c.k());
    if n != 2 * k || n > MAX_BASIS_SEARCH_LENGTH {
        return None;
    }
    let oracle = ColumnRank::new(c);
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        let mask = combo.iter().fold(0u64, |m, &j| m | 1 << j);
        let comp = complement(mask, n);
        if oracle.rank(mask) == k && oracle.rank(comp) == k {
            return Some((combo, mask_to_indices(comp)));
        }
        // next k-combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if combo[i] < n - k + i {
                break;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// `W(1,1)`.
pub fn total_weight(w: &RankGenPoly) -> BigInt {
    let v = w.w.eval(&Rational::one(), &Rational::one());
    debug_assert!(v.is_integer());
    v.to_integer()
}
