//! Table-driven arithmetic in the prime field GF(q).
//!
//! Residues are plain `u8` values in `0..q`. Every operation is a single
//! table lookup; the tables are built once when the context is created.

use crate::error::{Error, Result};

/// Arithmetic context for GF(q), q prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    q: u32,
    add: Vec<u8>,
    neg: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
}

/// Largest prime order accepted by [`FieldCtx::new`]. Residues must fit a `u8`.
pub const MAX_FIELD_ORDER: u32 = 251;

pub(crate) fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldCtx {
    pub fn new(q: u32) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NonPrimeModulus(q));
        }
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge { q, max: MAX_FIELD_ORDER });
        }
        let size = q as usize;
        let mut add = vec![0u8; size * size];
        let mut mul = vec![0u8; size * size];
        for a in 0..q {
            for b in 0..q {
                let idx = (a * q + b) as usize;
                add[idx] = ((a + b) % q) as u8;
                mul[idx] = ((a * b) % q) as u8;
            }
        }
        let neg = (0..q).map(|a| ((q - a) % q) as u8).collect();
        let mut inv = vec![0u8; size];
        for a in 1..q {
            // Unique b with a*b = 1; exists because q is prime.
            inv[a as usize] = (1..q).find(|b| (a * b) % q == 1).unwrap() as u8;
        }
        Ok(FieldCtx { q, add, neg, mul, inv })
    }

    /// Order of the field.
    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    /// Multiplicative inverse; `ZeroInverse` for 0.
    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.inv[a as usize])
    }

    /// Iterator over all residues `0..q`.
    pub fn residues(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }

    pub fn contains(&self, a: u8) -> bool {
        (a as u32) < self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let f2 = FieldCtx::new(2).unwrap();
        assert_eq!(f2.add(1, 1), 0);

        let f3 = FieldCtx::new(3).unwrap();
        assert_eq!(f3.mul(2, 2), 1);
        assert_eq!(f3.inv(2).unwrap(), 2);

        let f5 = FieldCtx::new(5).unwrap();
        assert_eq!(f5.inv(3).unwrap(), 2);
    }

    #[test]
    fn rejects_composites_and_tiny_moduli() {
        assert_eq!(FieldCtx::new(4), Err(Error::NonPrimeModulus(4)));
        assert_eq!(FieldCtx::new(1), Err(Error::NonPrimeModulus(1)));
        assert_eq!(FieldCtx::new(0), Err(Error::NonPrimeModulus(0)));
        assert_eq!(FieldCtx::new(9), Err(Error::NonPrimeModulus(9)));
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = FieldCtx::new(7).unwrap();
        assert_eq!(f.inv(0), Err(Error::ZeroInverse));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u32, 3, 5, 7] {
            let f = FieldCtx::new(q).unwrap();
            let els: Vec<u8> = f.residues().collect();
            for &a in &els {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    let i = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, i), 1);
                    assert_eq!(f.inv(i).unwrap(), a);
                }
                for &b in &els {
                    assert!(f.contains(f.add(a, b)) && f.contains(f.mul(a, b)));
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }
}
