use num_traits::Zero;

use super::Rational;

/// Solution set of `A x = b` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Inconsistent,
    /// A particular solution (free variables set to zero) and the dimension
    /// of the solution space.
    Solved { particular: Vec<Rational>, nullity: usize },
}

/// Gauss-Jordan elimination on `[A | b]`.
pub fn solve_rational(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>, ncols: usize) -> LinearSolution {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        b.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        b[row] *= &inv;
        let pivot = a[row].clone();
        for r in 0..nrows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for (x, p) in a[r][col..ncols].iter_mut().zip(&pivot[col..ncols]) {
                    *x -= &f * p;
                }
                let t = &f * &b[row];
                b[r] -= t;
            }
        }
        pivots.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    if b[row..].iter().any(|v| !v.is_zero()) {
        return LinearSolution::Inconsistent;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = b[r].clone();
    }
    LinearSolution::Solved { particular: x, nullity: ncols - pivots.len() }
}
