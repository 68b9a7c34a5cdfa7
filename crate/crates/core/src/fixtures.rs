//! Named codes used across tests, the acceptance suite and the CLI
//! examples, plus seeded random generators for property corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{parse_code, weight_distribution, LinearCode, Matrix};
use crate::gf::FieldSpec;

pub const HAMMING_7_4: &str = "2 7 4
1 0 0 0 0 1 1
0 1 0 0 1 0 1
0 0 1 0 1 1 0
0 0 0 1 1 1 1
";

pub const EXTENDED_HAMMING_8_4: &str = "2 8 4
1 0 0 0 0 1 1 1
0 1 0 0 1 0 1 1
0 0 1 0 1 1 0 1
0 0 0 1 1 1 1 0
";

/// Over GF(4) with omega = 2 and omega^2 = 3.
pub const HEXACODE: &str = "4 6 3
1 0 0 1 2 2
0 1 0 2 1 2
0 0 1 2 2 1
";

pub const REPETITION_2: &str = "2 2 1\n1 1\n";

pub const CODE_10: &str = "2 2 1\n1 0\n";

/// `{00,11}` direct sum with itself.
pub const SELF_DUAL_SUM_4: &str = "2 4 2
1 1 0 0
0 0 1 1
";

pub fn hamming_7_4() -> LinearCode {
    parse_code(HAMMING_7_4).expect("fixture")
}

pub fn extended_hamming_8_4() -> LinearCode {
    parse_code(EXTENDED_HAMMING_8_4).expect("fixture")
}

pub fn hexacode() -> LinearCode {
    parse_code(HEXACODE).expect("fixture")
}

pub fn repetition_2() -> LinearCode {
    parse_code(REPETITION_2).expect("fixture")
}

pub fn code_10() -> LinearCode {
    parse_code(CODE_10).expect("fixture")
}

pub fn self_dual_sum_4() -> LinearCode {
    parse_code(SELF_DUAL_SUM_4).expect("fixture")
}

/// Direct sum of two codes over the same field.
pub fn direct_sum(a: &LinearCode, b: &LinearCode) -> LinearCode {
    let n = a.n() + b.n();
    let mut rows: Matrix = Vec::new();
    for r in a.generator() {
        let mut row = r.clone();
        row.resize(n, 0);
        rows.push(row);
    }
    for r in b.generator() {
        let mut row = vec![0; a.n()];
        row.extend(r.iter().copied());
        rows.push(row);
    }
    LinearCode::new(a.field().clone(), rows).expect("direct sum keeps full rank")
}

/// Uniform random `k x n` generator of full rank over GF(q).
pub fn random_code<R: Rng>(rng: &mut R, q: u32, n: usize, k: usize) -> LinearCode {
    let field = FieldSpec::new(q).expect("supported q");
    loop {
        let rows: Matrix = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(0..q) as u8).collect())
            .collect();
        if let Ok(c) = LinearCode::new(field.clone(), rows) {
            return c;
        }
    }
}

/// Random binary self-dual code `[I | M]` of length `2k` with `M M^T = I`.
/// Rows of `M` are drawn one at a time among odd-weight vectors orthogonal
/// to the rows already chosen; dead ends restart the draw.
pub fn random_binary_self_dual<R: Rng>(rng: &mut R, k: usize) -> LinearCode {
    let dot = |a: &[u8], b: &[u8]| a.iter().zip(b).fold(0u8, |s, (&x, &y)| s ^ (x & y));
    'restart: loop {
        let mut m: Vec<Vec<u8>> = Vec::with_capacity(k);
        for _ in 0..k {
            let mut found = None;
            for _ in 0..4096 {
                let v: Vec<u8> = (0..k).map(|_| rng.gen_range(0..2)).collect();
                let odd = v.iter().filter(|&&b| b == 1).count() % 2 == 1;
                if odd && m.iter().all(|r| dot(r, &v) == 0) {
                    found = Some(v);
                    break;
                }
            }
            match found {
                Some(v) => m.push(v),
                None => continue 'restart,
            }
        }
        let rows: Matrix = (0..k)
            .map(|i| {
                let mut row = vec![0u8; 2 * k];
                row[i] = 1;
                row[k..].copy_from_slice(&m[i]);
                row
            })
            .collect();
        return LinearCode::new(FieldSpec::new(2).unwrap(), rows).expect("systematic form has full rank");
    }
}

/// Seeded random codes over GF(2), GF(3), GF(4) with `4 <= n <= max_n` and
/// `2 <= d < n`, `d_dual >= 2`.
pub fn random_corpus(seed: u64, count: usize, max_n: usize) -> Vec<LinearCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q = [2u32, 3, 4][out.len() % 3];
        let n = rng.gen_range(4..=max_n.max(4));
        let k = rng.gen_range(2..=n - 2);
        let c = random_code(&mut rng, q, n, k);
        let Ok(wd) = weight_distribution(&c) else { continue };
        if wd.d >= 2 && wd.d < n && wd.d_dual >= 2 {
            out.push(c);
        }
    }
    out
}
