//! Table arithmetic for the small fields GF(q), q in {2, 3, 4, 5, 7, 8, 9}.
//!
//! Elements are encoded as integers `0..q`. For an extension field GF(p^m)
//! the element with representative `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` is
//! encoded as `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. The fixed moduli are
//! `x^2 + x + 1` for GF(4), `x^3 + x + 1` for GF(8) and `x^2 + 1` for GF(9).

use crate::error::{Error, Result};

/// Integer encoding of a field element.
pub type FieldElement = u8;

pub const SUPPORTED_SIZES: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Neg,
    Inv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    q: u8,
    p: u8,
    m: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// Low-to-high coefficients of the monic modulus for each extension field.
fn modulus(q: u32) -> Option<(u8, u8, &'static [u8])> {
    match q {
        2 | 3 | 5 | 7 => Some((q as u8, 1, &[])),
        4 => Some((2, 2, &[1, 1, 1])),
        8 => Some((2, 3, &[1, 1, 0, 1])),
        9 => Some((3, 2, &[1, 0, 1])),
        _ => None,
    }
}

fn digits(v: u8, p: u8, m: u8) -> Vec<u8> {
    let mut v = v;
    (0..m)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u8], p: u8) -> u8 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn poly_mulmod(a: &[u8], b: &[u8], p: u8, modulus: &[u8]) -> Vec<u8> {
    let m = modulus.len() - 1;
    let mut prod = vec![0u16; 2 * m];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u16 * y as u16) % p as u16;
        }
    }
    // Reduce from the top using x^m = -(lower terms of the modulus).
    for deg in (m..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &mc) in modulus[..m].iter().enumerate() {
            let sub = (c * mc as u16) % p as u16;
            let slot = &mut prod[deg - m + i];
            *slot = (*slot + p as u16 - sub) % p as u16;
        }
    }
    prod[..m].iter().map(|&v| v as u8).collect()
}

impl FieldSpec {
    pub fn new(q: u32) -> Result<Self> {
        let (p, m, md) = modulus(q).ok_or(Error::UnsupportedField(q))?;
        let qu = q as usize;
        let mut add = vec![0u8; qu * qu];
        let mut mul = vec![0u8; qu * qu];
        for a in 0..q as u8 {
            for b in 0..q as u8 {
                let (s, t) = if m == 1 {
                    ((a + b) % p, ((a as u16 * b as u16) % p as u16) as u8)
                } else {
                    let da = digits(a, p, m);
                    let db = digits(b, p, m);
                    let sum: Vec<u8> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    (undigits(&sum, p), undigits(&poly_mulmod(&da, &db, p, md), p))
                };
                add[a as usize * qu + b as usize] = s;
                mul[a as usize * qu + b as usize] = t;
            }
        }
        let mut neg = vec![0u8; qu];
        let mut inv = vec![0u8; qu];
        for a in 0..qu {
            neg[a] = (0..q as u8).find(|&b| add[a * qu + b as usize] == 0).unwrap_or(0);
            if a > 0 {
                inv[a] = (1..q as u8).find(|&b| mul[a * qu + b as usize] == 1).unwrap_or(0);
            }
        }
        let spec = FieldSpec { q: q as u8, p, m, add, mul, neg, inv };
        spec.verify_axioms()?;
        Ok(spec)
    }

    fn verify_axioms(&self) -> Result<()> {
        let q = self.q;
        let bad = |what: &str| Err(Error::CheckFailed(format!("GF({q}) tables violate {what}")));
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return bad("identities");
            }
            if self.add(a, self.neg(a)) != 0 {
                return bad("additive inverses");
            }
            if a != 0 && self.mul(a, self.inv[a as usize]) != 1 {
                return bad("multiplicative inverses");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return bad("commutativity");
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                    {
                        return bad("associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return bad("distributivity");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn q(&self) -> u32 {
        self.q as u32
    }

    pub fn characteristic(&self) -> u32 {
        self.p as u32
    }

    pub fn degree(&self) -> u32 {
        self.m as u32
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            Err(Error::DivisionByZero(format!("inverse of 0 in GF({})", self.q)))
        } else {
            Ok(self.inv[a as usize])
        }
    }

    pub fn pow(&self, a: u8, e: u32) -> u8 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    pub fn contains(&self, v: u32) -> bool {
        v < self.q as u32
    }

    /// Checked table lookup. `b` is ignored for the unary operations.
    pub fn arith(&self, op: FieldOp, a: FieldElement, b: Option<FieldElement>) -> Result<FieldElement> {
        for v in std::iter::once(a).chain(b) {
            if !self.contains(v as u32) {
                return Err(Error::ElementOutOfRange { value: v as u32, q: self.q as u32 });
            }
        }
        let rhs = || b.ok_or_else(|| Error::Usage("binary field operation needs two operands".into()));
        match op {
            FieldOp::Add => Ok(self.add(a, rhs()?)),
            FieldOp::Mul => Ok(self.mul(a, rhs()?)),
            FieldOp::Neg => Ok(self.neg(a)),
            FieldOp::Inv => self.inv(a),
        }
    }
}

pub fn field_new(q: u32) -> Result<FieldSpec> {
    FieldSpec::new(q)
}

pub fn field_arith(spec: &FieldSpec, op: FieldOp, a: FieldElement, b: Option<FieldElement>) -> Result<FieldElement> {
    spec.arith(op, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_is_xor_and() {
        let f = field_new(2).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(f.add(a, b), a ^ b);
                assert_eq!(f.mul(a, b), a & b);
            }
        }
    }

    #[test]
    fn gf4_table_entries() {
        let f = field_new(4).unwrap();
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.add(2, 3), 1);
        assert_eq!(field_arith(&f, FieldOp::Inv, 2, None).unwrap(), 3);
    }

    #[test]
    fn prime_field_entries() {
        let f = field_new(5).unwrap();
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.add(3, 4), 2);
        let f3 = field_new(3).unwrap();
        assert_eq!(field_arith(&f3, FieldOp::Add, 2, Some(2)).unwrap(), 1);
    }

    #[test]
    fn gf9_x_squared_is_minus_one() {
        let f = field_new(9).unwrap();
        assert_eq!(field_arith(&f, FieldOp::Mul, 3, Some(3)).unwrap(), 2);
    }

    #[test]
    fn gf8_x_cubed() {
        // x^3 = x + 1 -> encoding 3
        let f = field_new(8).unwrap();
        assert_eq!(f.mul(f.mul(2, 2), 2), 3);
    }

    #[test]
    fn errors() {
        assert!(matches!(field_new(6), Err(Error::UnsupportedField(6))));
        assert!(matches!(field_new(16), Err(Error::UnsupportedField(16))));
        let f = field_new(7).unwrap();
        assert!(matches!(f.inv(0), Err(Error::DivisionByZero(_))));
        assert!(matches!(
            field_arith(&f, FieldOp::Add, 7, Some(1)),
            Err(Error::ElementOutOfRange { value: 7, q: 7 })
        ));
    }

    #[test]
    fn field_laws_every_size() {
        for q in SUPPORTED_SIZES {
            let f = field_new(q).unwrap();
            let q8 = q as u8;
            for a in 0..q8 {
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.pow(a, q), a, "Frobenius in GF({q})");
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
            // Cyclic multiplicative group: some element has order q-1.
            let order = |a: u8| (1..q).find(|&e| f.pow(a, e) == 1).unwrap();
            assert!((1..q8).any(|a| order(a) == q - 1), "GF({q}) not cyclic");
            for a in 1..q8 {
                assert_eq!((q - 1) % order(a), 0);
            }
        }
    }
}
