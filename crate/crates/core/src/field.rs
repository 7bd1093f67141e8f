//! GF(2^k) in polynomial basis. Field elements are bit patterns: bit i is
//! the coefficient of x^i. Addition is XOR; multiplication is carry-less
//! multiplication reduced by a fixed irreducible modulus.

use crate::{Error, Result};

/// GF(2^k) with the lexicographically smallest monic irreducible modulus of
/// degree k (scanned, not tabulated; the constant term is required to be 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldGf2k {
    k: u32,
    modulus: u32,
}

impl FieldGf2k {
    pub fn new(k: u32) -> Result<Self> {
        if !(1..=16).contains(&k) {
            return Err(Error::FieldDegree(k));
        }
        let lo = (1u32 << k) | 1;
        let hi = 1u32 << (k + 1);
        let modulus = (lo..hi)
            .step_by(2)
            .find(|&m| is_irreducible(m))
            .expect("an irreducible polynomial of every degree exists");
        Ok(FieldGf2k { k, modulus })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Modulus as a coefficient bit pattern (bit i = coefficient of x^i).
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, 2^k.
    pub fn size(&self) -> u32 {
        1 << self.k
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.size() && b < self.size());
        let mut acc = 0u64;
        let (a, b) = (a as u64, b as u64);
        for i in 0..self.k {
            if b >> i & 1 == 1 {
                acc ^= a << i;
            }
        }
        reduce(acc, self.modulus as u64, self.k) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        // a^(2^k - 2) = a^{-1} in the multiplicative group of order 2^k - 1
        Ok(self.pow(a, (1u64 << self.k) - 2))
    }
}

/// Reduce a carry-less product modulo the degree-k polynomial `m`.
fn reduce(mut v: u64, m: u64, k: u32) -> u64 {
    let mut deg = 63 - v.leading_zeros().min(63);
    while v >= 1 << k {
        v ^= m << (deg - k);
        if v == 0 {
            break;
        }
        deg = 63 - v.leading_zeros();
    }
    v
}

/// Degree of a nonzero polynomial bit pattern.
fn degree(p: u32) -> u32 {
    31 - p.leading_zeros()
}

/// Remainder of polynomial division over GF(2).
fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = degree(b);
    while a != 0 && degree(a) >= db {
        a ^= b << (degree(a) - db);
    }
    a
}

/// Exhaustive trial division by every polynomial of degree 1..=k/2.
fn is_irreducible(p: u32) -> bool {
    let k = degree(p);
    if k == 1 {
        return true;
    }
    for d in 1..=k / 2 {
        for q in (1u32 << d)..(1u32 << (d + 1)) {
            if poly_rem(p, q) == 0 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_moduli() {
        // x+1, x^2+x+1, x^3+x+1, x^4+x+1
        assert_eq!(FieldGf2k::new(1).unwrap().modulus(), 0b11);
        assert_eq!(FieldGf2k::new(2).unwrap().modulus(), 0b111);
        assert_eq!(FieldGf2k::new(3).unwrap().modulus(), 0b1011);
        assert_eq!(FieldGf2k::new(4).unwrap().modulus(), 0b10011);
    }

    #[test]
    fn k_out_of_range() {
        assert_eq!(FieldGf2k::new(0).unwrap_err(), Error::FieldDegree(0));
        assert_eq!(FieldGf2k::new(17).unwrap_err(), Error::FieldDegree(17));
    }

    #[test]
    fn gf4_products() {
        let f = FieldGf2k::new(2).unwrap();
        // x * x = x + 1 mod x^2+x+1
        assert_eq!(f.mul(0b10, 0b10), 0b11);
        for a in 0..f.size() {
            assert_eq!(f.mul(a, 1), a);
        }
    }

    #[test]
    fn gf8_products() {
        let f = FieldGf2k::new(3).unwrap();
        // x^2 * x^2 = x^4 mod x^3+x+1 = x^2 + x
        assert_eq!(f.mul(0b100, 0b100), 0b110);
    }

    #[test]
    fn inverses() {
        let f4 = FieldGf2k::new(2).unwrap();
        assert_eq!(f4.inv(1).unwrap(), 1);
        assert_eq!(f4.inv(0b10).unwrap(), 0b11); // inv(x) = x+1 in GF(4)
        let f8 = FieldGf2k::new(3).unwrap();
        assert_eq!(f8.inv(0b10).unwrap(), 0b101); // inv(x) = x^2+1 in GF(8)
        assert_eq!(f8.inv(0).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn multiplicative_group_order() {
        for k in 1..=8 {
            let f = FieldGf2k::new(k).unwrap();
            let e = (1u64 << k) - 1;
            for a in 1..f.size() {
                assert_eq!(f.pow(a, e), 1, "a^(2^k-1) != 1 for a={a}, k={k}");
            }
        }
    }

    #[test]
    fn modulus_is_monic_irreducible() {
        for k in 1..=12 {
            let f = FieldGf2k::new(k).unwrap();
            assert_eq!(degree(f.modulus()), k);
            assert!(is_irreducible(f.modulus()));
        }
    }
}
