//! Extremal self-dual weight enumerators by exact linear algebra, Gegenbauer
//! polynomials, and the location of Type IV zeta zeros.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bounds::SelfDualType;
use crate::code::WeightDistribution;
use crate::enumerator::krawtchouk;
use crate::error::{Error, Result};
use crate::exactmath::{int, solve_rational, LinearSolution, Rational, UniPoly};

/// Weight enumerator meeting the Mallows-Sloane bound (or the largest `d`
/// below it that pins the enumerator down).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalEnumerator {
    pub q: u32,
    pub c: usize,
    pub n: usize,
    /// Distance imposed by the zero constraints.
    pub d: usize,
    /// Distance of the bound the search started from.
    pub bound: usize,
    pub counts: Vec<Rational>,
}

impl ExtremalEnumerator {
    pub fn nonnegative(&self) -> bool {
        self.counts.iter().all(|c| !c.is_negative())
    }

    /// Smallest positive weight with a nonzero count.
    pub fn achieved_distance(&self) -> Option<usize> {
        (1..=self.n).find(|&i| !self.counts[i].is_zero())
    }

    /// The enumerator as an integral distribution of dimension `n/2`.
    pub fn to_distribution(&self) -> Result<WeightDistribution> {
        let counts = self
            .counts
            .iter()
            .map(|c| {
                c.is_integer()
                    .then(|| c.to_integer())
                    .ok_or_else(|| Error::InvalidDistribution(format!("non-integral count {c}")))
            })
            .collect::<Result<Vec<BigInt>>>()?;
        WeightDistribution::from_counts(self.q, self.n, self.n / 2, counts)
    }
}

fn type_of(q: u32, c: usize) -> Result<SelfDualType> {
    SelfDualType::classify(q, c)
        .filter(|t| t.parameters() == (q, c))
        .ok_or_else(|| Error::InvalidParameters(format!("(q, c) = ({q}, {c}) is not a self-dual type")))
}

fn length_ok(kind: SelfDualType, n: usize) -> bool {
    n > 0
        && match kind {
            SelfDualType::I | SelfDualType::IV => n.is_multiple_of(2),
            SelfDualType::II => n.is_multiple_of(8),
            SelfDualType::III => n.is_multiple_of(4),
        }
}

/// Solves for the enumerator with `A_0 = 1`, zeros below `d`, support on
/// multiples of `c`, and invariance under the MacWilliams transform.
pub fn solve_enumerator(q: u32, c: usize, n: usize, d: usize) -> LinearSolution {
    let unknowns: Vec<usize> = (d.max(1)..=n).filter(|i| i % c == 0).collect();
    // q^(n/2) A_j - sum_i A_i K_j(i) = 0, with A_0 moved to the right
    let scale = num_traits::pow(BigInt::from(q), n / 2);
    let mut rows = Vec::with_capacity(n + 1);
    let mut rhs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let row: Vec<Rational> = unknowns
            .iter()
            .map(|&i| {
                let mut v = -krawtchouk(q, n, j, i);
                if i == j {
                    v += &scale;
                }
                Rational::from_integer(v)
            })
            .collect();
        let mut b = Rational::from_integer(krawtchouk(q, n, j, 0));
        if j == 0 {
            b -= Rational::from_integer(scale.clone());
        }
        rows.push(row);
        rhs.push(b);
    }
    match solve_rational(rows, rhs, unknowns.len()) {
        LinearSolution::Solved { particular, nullity } => {
            let mut counts = vec![Rational::zero(); n + 1];
            counts[0] = Rational::one();
            for (&i, v) in unknowns.iter().zip(particular) {
                counts[i] = v;
            }
            LinearSolution::Solved { particular: counts, nullity }
        }
        LinearSolution::Inconsistent => LinearSolution::Inconsistent,
    }
}

pub fn extremal_sd_enumerator(q: u32, c: usize, n: usize) -> Result<ExtremalEnumerator> {
    let kind = type_of(q, c)?;
    if !length_ok(kind, n) {
        return Err(Error::InvalidParameters(format!("length {n} is incompatible with Type {kind:?}")));
    }
    let bound = kind.bound(n);
    for d in (1..=bound).rev() {
        match solve_enumerator(q, c, n, d) {
            LinearSolution::Inconsistent => continue,
            LinearSolution::Solved { nullity: 0, particular } => {
                return Ok(ExtremalEnumerator { q, c, n, d, bound, counts: particular });
            }
            LinearSolution::Solved { nullity, .. } => {
                return Err(Error::Ambiguous { d, dimension: nullity });
            }
        }
    }
    Err(Error::Infeasible { q, c: c as u32, n })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GegenbauerPoly {
    pub m: usize,
    pub lambda: Rational,
    pub poly: UniPoly,
}

/// `C_m^lambda` with `C_0 = 1`, `C_1 = 2 lambda x` and
/// `m C_m = 2x(m+lambda-1) C_(m-1) - (m+2 lambda-2) C_(m-2)`.
pub fn gegenbauer(m: usize, lambda: &Rational) -> GegenbauerPoly {
    let two = int(2);
    let mut prev = UniPoly::one();
    let mut cur = UniPoly::monomial(&two * lambda, 1);
    if m == 0 {
        cur = prev.clone();
    }
    for k in 2..=m {
        let kk = int(k as i64);
        let a = (&kk + lambda - Rational::one()) * &two;
        let b = &kk + lambda * &two - &two;
        let next = (&cur.shift(1).scale(&a) - &prev.scale(&b)).scale(&kk.recip());
        prev = std::mem::replace(&mut cur, next);
    }
    GegenbauerPoly { m, lambda: lambda.clone(), poly: cur }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UltrasphericalCheck {
    pub lambda: Rational,
    pub holds: bool,
}

/// Tests `Q(T^2/2) = lambda C_m^(m+1)((T^-1 + T)/2) T^m` with
/// `Q(T) = P(T)(1+2T)`, solving `lambda` from leading coefficients.
pub fn check_ultraspherical(p: &UniPoly, m: usize) -> Result<UltrasphericalCheck> {
    let q = p * &UniPoly::from_ints(&[1, 2]);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let lhs = q.compose(&UniPoly::monomial(half.clone(), 2));
    let cm = gegenbauer(m, &int(m as i64 + 1)).poly;
    // sum_j c_j ((1+T^2)/2)^j T^(m-j)
    let base = UniPoly::from_coeffs(vec![half.clone(), Rational::zero(), half]);
    let mut rhs = UniPoly::zero();
    for (j, cj) in cm.coeffs().iter().enumerate() {
        if !cj.is_zero() {
            rhs = &rhs + &base.pow(j as u32).shift(m - j).scale(cj);
        }
    }
    let (Some(ql), Some(rl)) = (lhs.leading(), rhs.leading()) else {
        return Err(Error::Structural("empty side in the ultraspherical identity".into()));
    };
    if lhs.degree() != rhs.degree() {
        return Ok(UltrasphericalCheck { lambda: Rational::zero(), holds: false });
    }
    let lambda = ql / rl;
    let holds = lhs == rhs.scale(&lambda);
    Ok(UltrasphericalCheck { lambda, holds })
}

/// Moduli of the roots of `P`, ascending.
pub fn critical_circle_radii(p: &UniPoly) -> Result<Vec<f64>> {
    let deg = p.degree().filter(|&d| d >= 1).ok_or_else(|| {
        Error::InvalidParameters("root radii need a polynomial of degree at least 1".into())
    })?;
    let to_f = |r: &Rational| {
        r.to_f64()
            .filter(|v| v.is_finite())
            .ok_or_else(|| Error::Numerical(format!("coefficient {r} has no finite float value")))
    };
    let lead = p.leading().expect("nonzero");
    let monic: Vec<f64> = p.coeffs()[..deg].iter().map(|c| to_f(&(c / lead))).collect::<Result<_>>()?;
    let mut companion = DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        companion[(i, i - 1)] = 1.0;
    }
    for (i, c) in monic.iter().enumerate() {
        companion[(i, deg - 1)] = -c;
    }
    let roots = companion.complex_eigenvalues();
    let mut radii = Vec::with_capacity(deg);
    for z in roots.iter() {
        // residual of the monic polynomial at the root
        let mut acc = nalgebra::Complex::new(1.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        let scale = monic.iter().fold(1.0f64, |m, c| m.max(c.abs())) * (1.0 + z.norm()).powi(deg as i32);
        if !z.norm().is_finite() || acc.norm() > 1e-8 * scale {
            return Err(Error::Numerical(format!(
                "root {z} has residual {:.3e} (degree {deg})",
                acc.norm()
            )));
        }
        radii.push(z.norm());
    }
    radii.sort_by(f64::total_cmp);
    Ok(radii)
}

/// Sign changes of `f` on the grid `-1 + 2i/steps`; a lower bound on the
/// number of real roots in `(-1, 1)`.
pub fn sign_changes_on_interval(f: &UniPoly, steps: usize) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for i in 0..=steps {
        let x = int(-1) + Rational::new(BigInt::from(2 * i), BigInt::from(steps));
        let v = f.eval(&x);
        let s = if v.is_positive() { 1 } else if v.is_negative() { -1 } else { 0 };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}
