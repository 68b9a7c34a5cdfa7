//! Linear codes over GF(q): parsing, row reduction, duals, weight
//! distributions, column-subset ranks and evaluation-code fixtures.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::enumerator::krawtchouk_transform;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

/// Largest number of codewords enumerated directly (2^28).
pub const MAX_ENUMERATED_WORDS: u64 = 1 << 28;

pub type Matrix = Vec<Vec<FieldElement>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    k: usize,
    generator: Matrix,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelon {
    pub rank: usize,
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

/// Reduces `matrix` over the field. The nonzero rows of the result come
/// first; `rank` counts them.
pub fn rref_rank(field: &FieldSpec, matrix: &[Vec<FieldElement>]) -> RowEchelon {
    let mut m: Matrix = matrix.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(pr) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, pr);
        let inv = field.inv(m[row][col]).expect("pivot is nonzero");
        for v in m[row].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col] == 0 {
                continue;
            }
            let f = other[col];
            for (v, &p) in other.iter_mut().zip(&pivot_row) {
                *v = field.sub(*v, field.mul(f, p));
            }
        }
        pivots.push(col);
        row += 1;
    }
    RowEchelon { rank: pivots.len(), reduced: m, pivots }
}

/// Rank of a list of vectors (rows).
pub fn rank_of(field: &FieldSpec, rows: &[Vec<FieldElement>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref_rank(field, rows).rank
}

/// A basis of `{ v : M v^T = 0 }` for `M` with `ncols` columns.
pub fn null_space(field: &FieldSpec, matrix: &[Vec<FieldElement>], ncols: usize) -> Matrix {
    let ech = if matrix.is_empty() {
        RowEchelon { rank: 0, reduced: Vec::new(), pivots: Vec::new() }
    } else {
        rref_rank(field, matrix)
    };
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u8; ncols];
            v[fc] = 1;
            for (r, &pc) in ech.pivots.iter().enumerate() {
                v[pc] = field.neg(ech.reduced[r][fc]);
            }
            v
        })
        .collect()
}

impl LinearCode {
    /// Validates `1 <= k <= n`, symbol range and full row rank.
    pub fn new(field: FieldSpec, generator: Matrix) -> Result<Self> {
        let k = generator.len();
        if k == 0 {
            return Err(Error::InvalidParameters("code needs at least one generator row".into()));
        }
        let n = generator[0].len();
        if n == 0 || generator.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameters("generator rows must share a positive length".into()));
        }
        if k > n {
            return Err(Error::InvalidParameters(format!("k={k} exceeds n={n}")));
        }
        for row in &generator {
            if let Some(&v) = row.iter().find(|&&v| !field.contains(v as u32)) {
                return Err(Error::ElementOutOfRange { value: v as u32, q: field.q() });
            }
        }
        let rank = rank_of(&field, &generator);
        if rank != k {
            return Err(Error::RankDeficient { rank, k });
        }
        Ok(LinearCode { field, n, k, generator })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Column `j` (0-based) of the generator.
    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        self.generator.iter().map(|r| r[j]).collect()
    }

    /// The code in the text file format.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.q(), self.n, self.k);
        for row in &self.generator {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    /// Same generator matrix read over a different field containing its entries.
    pub fn over_field(&self, field: FieldSpec) -> Result<Self> {
        LinearCode::new(field, self.generator.clone())
    }

    pub fn same_row_space(&self, other: &LinearCode) -> bool {
        self.n == other.n && self.k == other.k && self.contains(other)
    }

    /// True when every codeword of `other` lies in `self`.
    pub fn contains(&self, other: &LinearCode) -> bool {
        if self.n != other.n {
            return false;
        }
        let mut stacked = self.generator.clone();
        stacked.extend(other.generator.iter().cloned());
        rank_of(&self.field, &stacked) == self.k
    }

    /// Codeword for a message given as field elements.
    pub fn encode(&self, msg: &[FieldElement]) -> Vec<FieldElement> {
        let f = &self.field;
        let mut cw = vec![0u8; self.n];
        for (row, &m) in self.generator.iter().zip(msg) {
            if m == 0 {
                continue;
            }
            for (c, &g) in cw.iter_mut().zip(row) {
                *c = f.add(*c, f.mul(m, g));
            }
        }
        cw
    }

    /// Deletes coordinate `j`. Requires the result to keep dimension `k`.
    pub fn puncture_coordinate(&self, j: usize) -> Result<LinearCode> {
        let rows: Matrix = self
            .generator
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
            .collect();
        LinearCode::new(self.field.clone(), rows)
    }

    /// Keeps the codewords vanishing at `j`, then deletes coordinate `j`.
    pub fn shorten_coordinate(&self, j: usize) -> Result<LinearCode> {
        let basis = self.subcode_vanishing_on(&[j]);
        let rows: Matrix = basis
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
            .collect();
        LinearCode::new(self.field.clone(), rows)
    }

    /// Basis of the subcode whose words are zero on every coordinate in `zero_cols`.
    pub fn subcode_vanishing_on(&self, zero_cols: &[usize]) -> Matrix {
        // Messages m with m . column_j = 0 for all j in zero_cols.
        let constraints: Matrix = zero_cols.iter().map(|&j| self.column(j)).collect();
        let msgs = null_space(&self.field, &constraints, self.k);
        msgs.iter().map(|m| self.encode(m)).collect()
    }
}

/// Parses the text format: `q n k` on the first content line, then `k` rows
/// of `n` symbols. `#` starts a comment line and blank lines are skipped.
pub fn parse_code(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or(Error::Parse { line: 0, msg: "missing header `q n k`".into() })?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 3 {
        return Err(Error::Parse { line: hline, msg: format!("header needs 3 integers, found {}", nums.len()) });
    }
    let parse = |s: &str, line: usize| {
        s.parse::<u32>()
            .map_err(|_| Error::Parse { line, msg: format!("`{s}` is not a nonnegative integer") })
    };
    let q = parse(nums[0], hline)?;
    let n = parse(nums[1], hline)? as usize;
    let k = parse(nums[2], hline)? as usize;
    let field = FieldSpec::new(q)?;
    if k == 0 || n == 0 || k > n {
        return Err(Error::Parse { line: hline, msg: format!("need 1 <= k <= n, got n={n} k={k}") });
    }
    let mut rows = Vec::with_capacity(k);
    for (line, l) in lines {
        if rows.len() == k {
            return Err(Error::Parse { line, msg: format!("more than k={k} rows") });
        }
        let row = l
            .split_whitespace()
            .map(|s| {
                let v = parse(s, line)?;
                if v >= q {
                    return Err(Error::Parse { line, msg: format!("symbol {v} out of range for q={q}") });
                }
                Ok(v as u8)
            })
            .collect::<Result<Vec<u8>>>()?;
        if row.len() != n {
            return Err(Error::Parse { line, msg: format!("row has {} symbols, expected {n}", row.len()) });
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(Error::Parse { line: 0, msg: format!("expected {k} rows, found {}", rows.len()) });
    }
    LinearCode::new(field, rows)
}

/// Generator of the dual code. Fails for `k = n`, whose dual is the zero code.
pub fn dual_code(c: &LinearCode) -> Result<LinearCode> {
    if c.k == c.n {
        return Err(Error::InvalidParameters("dual of a full-space code is the zero code".into()));
    }
    let h = null_space(&c.field, &c.generator, c.n);
    LinearCode::new(c.field.clone(), h)
}

/// Counts `A_0..A_n` with the minimum distances of the code and its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub counts: Vec<BigInt>,
    /// Smallest positive weight present.
    pub d: usize,
    /// Dual minimum distance; `n + 1` when the dual is the zero code.
    pub d_dual: usize,
}

impl WeightDistribution {
    /// Validates the counts and derives `d` and `d_dual`.
    pub fn from_counts(q: u32, n: usize, k: usize, counts: Vec<BigInt>) -> Result<Self> {
        if counts.len() != n + 1 {
            return Err(Error::InvalidDistribution(format!("expected {} counts, got {}", n + 1, counts.len())));
        }
        if !counts[0].is_one() {
            return Err(Error::InvalidDistribution("A_0 must be 1".into()));
        }
        if counts.iter().any(|c| c < &BigInt::zero()) {
            return Err(Error::InvalidDistribution("negative count".into()));
        }
        let total: BigInt = counts.iter().sum();
        if total != num_traits::pow(BigInt::from(q), k) {
            return Err(Error::InvalidDistribution(format!("counts sum to {total}, expected {q}^{k}")));
        }
        let d = first_positive_weight(&counts)
            .ok_or_else(|| Error::InvalidDistribution("no nonzero codeword".into()))?;
        let d_dual = if k == n {
            n + 1
        } else {
            let dual = krawtchouk_transform(q, n, k, &counts)?;
            first_positive_weight(&dual)
                .ok_or_else(|| Error::InvalidDistribution("dual has no nonzero codeword".into()))?
        };
        Ok(WeightDistribution { q, n, k, counts, d, d_dual })
    }

    pub fn from_u64(q: u32, n: usize, k: usize, counts: &[u64]) -> Result<Self> {
        Self::from_counts(q, n, k, counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn count(&self, w: usize) -> BigInt {
        self.counts.get(w).cloned().unwrap_or_default()
    }

    /// `A(x, y) = sum A_i x^(n-i) y^i`.
    pub fn enumerator_poly(&self) -> crate::exactmath::BiPoly {
        let mut p = crate::exactmath::BiPoly::zero();
        for (i, a) in self.counts.iter().enumerate() {
            p.add_term((self.n - i) as u32, i as u32, crate::exactmath::Rational::from_integer(a.clone()));
        }
        p
    }

    pub fn counts_u64(&self) -> Option<Vec<u64>> {
        self.counts.iter().map(|c| c.to_u64()).collect()
    }
}

fn first_positive_weight(counts: &[BigInt]) -> Option<usize> {
    (1..counts.len()).find(|&i| !counts[i].is_zero())
}

fn check_capacity(q: u32, dim: usize) -> Result<u64> {
    let bits = dim as f64 * (q as f64).log2();
    if bits > 28.0 + 1e-9 {
        return Err(Error::Capacity(format!(
            "{q}^{dim} codewords exceeds the enumeration limit of 2^28"
        )));
    }
    Ok((q as u64).pow(dim as u32))
}

/// Direct enumeration of all `q^k` codewords, message vectors in base-q
/// order (row 0 is the least significant digit).
pub fn enumerate_weights(c: &LinearCode) -> Result<Vec<u64>> {
    let total = check_capacity(c.q(), c.k)?;
    let f = &c.field;
    let q = c.q() as u8;
    // delta[i][v] = (v+1)·row_i - v·row_i
    let delta: Vec<Vec<Vec<u8>>> = c
        .generator
        .iter()
        .map(|row| {
            (0..q)
                .map(|v| {
                    let next = (v + 1) % q;
                    row.iter().map(|&g| f.sub(f.mul(next, g), f.mul(v, g))).collect()
                })
                .collect()
        })
        .collect();
    const BLOCK: u64 = 1 << 12;
    let blocks = total.div_ceil(BLOCK);
    let counts = (0..blocks)
        .into_par_iter()
        .fold(
            || vec![0u64; c.n + 1],
            |mut acc, b| {
                let start = b * BLOCK;
                let end = (start + BLOCK).min(total);
                let mut msg: Vec<u8> = Vec::with_capacity(c.k);
                let mut rest = start;
                for _ in 0..c.k {
                    msg.push((rest % q as u64) as u8);
                    rest /= q as u64;
                }
                let mut cw = c.encode(&msg);
                for idx in start..end {
                    acc[cw.iter().filter(|&&v| v != 0).count()] += 1;
                    if idx + 1 == end {
                        break;
                    }
                    for (i, digit) in msg.iter_mut().enumerate() {
                        let d = &delta[i][*digit as usize];
                        for (x, &dv) in cw.iter_mut().zip(d) {
                            *x = f.add(*x, dv);
                        }
                        *digit = (*digit + 1) % q;
                        if *digit != 0 {
                            break;
                        }
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; c.n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(counts)
}

/// Exact weight distribution. Enumerates the smaller of the code and its
/// dual and applies the MacWilliams transform when the dual is smaller.
pub fn weight_distribution(c: &LinearCode) -> Result<WeightDistribution> {
    if c.k <= c.n - c.k || c.k == c.n {
        let counts = enumerate_weights(c)?;
        WeightDistribution::from_u64(c.q(), c.n, c.k, &counts)
    } else {
        let dual = dual_code(c)?;
        let dual_counts: Vec<BigInt> = enumerate_weights(&dual)?.into_iter().map(BigInt::from).collect();
        let counts = krawtchouk_transform(c.q(), c.n, dual.k, &dual_counts)?;
        WeightDistribution::from_counts(c.q(), c.n, c.k, counts)
    }
}

/// Rank of the generator columns indexed by `cols` (0-based).
pub fn subset_rank(c: &LinearCode, cols: &[usize]) -> usize {
    let rows: Matrix = cols.iter().map(|&j| c.column(j)).collect();
    rank_of(&c.field, &rows)
}

/// Column-rank oracle with precomputed columns; subsets are bitmasks with
/// bit `j` standing for column `j`.
#[derive(Clone, Debug)]
pub struct ColumnRank<'a> {
    field: &'a FieldSpec,
    columns: Vec<Vec<FieldElement>>,
}

impl<'a> ColumnRank<'a> {
    pub fn new(c: &'a LinearCode) -> Self {
        ColumnRank { field: &c.field, columns: (0..c.n).map(|j| c.column(j)).collect() }
    }

    pub fn rank(&self, mask: u64) -> usize {
        let k = self.columns.first().map_or(0, Vec::len);
        // Incremental elimination: keep a reduced basis keyed by pivot position.
        let mut basis: Vec<(usize, Vec<u8>)> = Vec::with_capacity(k);
        let f = self.field;
        let mut m = mask;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            let mut v = self.columns[j].clone();
            for (p, b) in &basis {
                let coef = v[*p];
                if coef != 0 {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = f.sub(*x, f.mul(coef, y));
                    }
                }
            }
            if let Some(p) = v.iter().position(|&x| x != 0) {
                let inv = f.inv(v[p]).expect("nonzero");
                v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                basis.push((p, v));
                if basis.len() == k {
                    break;
                }
            }
        }
        basis.len()
    }
}

/// Indices (0-based) of the set bits of `mask`.
pub fn mask_to_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|j| mask >> j & 1 == 1).collect()
}

/// Evaluation code of polynomials of degree `< k` at the first `n` field
/// elements `0, 1, ..., n-1`.
pub fn make_mds_code(q: u32, n: usize, k: usize) -> Result<LinearCode> {
    if n > q as usize {
        return Err(Error::InvalidParameters(format!("n={n} exceeds the {q} available evaluation points")));
    }
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!("need 1 <= k <= n, got k={k}")));
    }
    let field = FieldSpec::new(q)?;
    let rows: Matrix = (0..k as u32)
        .map(|i| (0..n as u8).map(|x| field.pow(x, i)).collect())
        .collect();
    LinearCode::new(field, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn counts(wd: &WeightDistribution) -> Vec<u64> {
        wd.counts_u64().unwrap()
    }

    #[test]
    fn parse_examples() {
        let rep = parse_code("2 2 1\n1 1\n").unwrap();
        assert_eq!((rep.n(), rep.k()), (2, 1));
        let c10 = parse_code("# the (1 0) code\n\n2 2 1\n1 0\n").unwrap();
        assert_eq!(c10.generator(), &vec![vec![1, 0]]);
        let hexa = fixtures::hexacode();
        assert_eq!((hexa.q(), hexa.n(), hexa.k()), (4, 6, 3));
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!(parse_code(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_code("2 2\n1 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_code("6 2 1\n1 1"), Err(Error::UnsupportedField(6))));
        assert!(matches!(parse_code("2 2 1\n1 2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_code("2 3 1\n1 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_code("2 2 2\n1 1\n1 1"), Err(Error::RankDeficient { rank: 1, k: 2 })));
        assert!(matches!(parse_code("2 2 1\n1 1\n0 1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn text_round_trip() {
        let h = fixtures::hamming_7_4();
        assert_eq!(parse_code(&h.to_text()).unwrap(), h);
    }

    #[test]
    fn rref_examples() {
        let f = FieldSpec::new(3).unwrap();
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(rref_rank(&f, &id).rank, 3);
        assert_eq!(rref_rank(&f, &[vec![0, 0], vec![0, 0]]).rank, 0);
        let hexa = fixtures::hexacode();
        let e = rref_rank(hexa.field(), hexa.generator());
        assert_eq!(e.rank, 3);
        assert_eq!(e.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn duals() {
        let rep = fixtures::repetition_2();
        assert!(dual_code(&rep).unwrap().same_row_space(&rep));
        let c10 = fixtures::code_10();
        assert_eq!(dual_code(&c10).unwrap().generator(), &vec![vec![0, 1]]);
        let ham = fixtures::hamming_7_4();
        let simplex = dual_code(&ham).unwrap();
        assert_eq!(simplex.k(), 3);
        assert_eq!(counts(&weight_distribution(&simplex).unwrap()), vec![1, 0, 0, 0, 7, 0, 0, 0]);
        for (row, hrow) in ham.generator().iter().zip(std::iter::repeat(simplex.generator())) {
            for h in hrow {
                let dot = row.iter().zip(h).fold(0u8, |a, (&x, &y)| a ^ (x & y));
                assert_eq!(dot, 0);
            }
        }
        assert!(dual_code(&parse_code("2 2 2\n1 0\n0 1").unwrap()).is_err());
    }

    #[test]
    fn distributions() {
        let rep = weight_distribution(&fixtures::repetition_2()).unwrap();
        assert_eq!(counts(&rep), vec![1, 0, 1]);
        assert_eq!((rep.d, rep.d_dual), (2, 2));
        let ham = weight_distribution(&fixtures::hamming_7_4()).unwrap();
        assert_eq!(counts(&ham), vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!((ham.d, ham.d_dual), (3, 4));
        let hexa = weight_distribution(&fixtures::hexacode()).unwrap();
        assert_eq!(counts(&hexa), vec![1, 0, 0, 0, 45, 0, 18]);
        assert_eq!(hexa.counts.iter().sum::<BigInt>(), BigInt::from(64));
    }

    #[test]
    fn full_space_has_zero_dual() {
        let c = parse_code("3 2 2\n1 0\n0 1").unwrap();
        let wd = weight_distribution(&c).unwrap();
        assert_eq!(counts(&wd), vec![1, 4, 4]);
        assert_eq!(wd.d_dual, 3);
    }

    #[test]
    fn capacity_guard() {
        let rows: Matrix = (0..15).map(|i| (0..30).map(|j| u8::from(i == j || j == 29)).collect()).collect();
        let big = LinearCode::new(FieldSpec::new(7).unwrap(), rows).unwrap();
        assert!(matches!(weight_distribution(&big), Err(Error::Capacity(_))));
    }

    #[test]
    fn subset_ranks() {
        let hexa = fixtures::hexacode();
        assert_eq!(subset_rank(&hexa, &[]), 0);
        assert_eq!(subset_rank(&hexa, &[0, 1, 2, 3, 4, 5]), 3);
        assert_eq!(subset_rank(&fixtures::code_10(), &[1]), 0);
        let cr = ColumnRank::new(&hexa);
        for mask in 0..64u64 {
            assert_eq!(cr.rank(mask), subset_rank(&hexa, &mask_to_indices(mask)));
        }
    }

    #[test]
    fn mds_fixtures() {
        for (q, n, k, d) in [(5, 5, 2, 4), (2, 2, 1, 2), (4, 4, 2, 3)] {
            let c = make_mds_code(q, n, k).unwrap();
            assert_eq!(weight_distribution(&c).unwrap().d, d);
        }
        assert_eq!(make_mds_code(2, 2, 1).unwrap().generator(), &vec![vec![1, 1]]);
        assert!(make_mds_code(4, 5, 2).is_err());
    }

    #[test]
    fn puncture_and_shorten_coordinates() {
        let ham = fixtures::hamming_7_4();
        let p = ham.puncture_coordinate(0).unwrap();
        assert_eq!((p.n(), p.k()), (6, 4));
        let s = ham.shorten_coordinate(0).unwrap();
        assert_eq!((s.n(), s.k()), (6, 3));
        assert!(s.generator().iter().all(|r| r.len() == 6));
    }
}
