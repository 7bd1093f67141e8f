//! Polynomials with arbitrary-precision integer coefficients and quadratic
//! surd conjugate pairs (p +- sqrt(d)) / q.

use std::fmt;

use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A polynomial with exact integer coefficients, constant term first.
/// Characteristic polynomials here are always monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigPoly {
    coeffs: Vec<BigInt>,
}

impl BigPoly {
    /// Normalizes by dropping leading zeros (the zero polynomial keeps a
    /// single zero coefficient).
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        BigPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        BigPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        BigPoly::from_i64(&[1])
    }

    /// lambda - mu
    pub fn linear(mu: &BigInt) -> Self {
        BigPoly::new(vec![-mu.clone(), BigInt::one()])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, One::is_one)
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn evaluate_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + bigint_to_f64(c);
        }
        acc
    }

    pub fn mul(&self, other: &BigPoly) -> BigPoly {
        if self.is_zero() || other.is_zero() {
            return BigPoly::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BigPoly::new(out)
    }

    pub fn scale(&self, c: i64) -> BigPoly {
        let c = BigInt::from(c);
        BigPoly::new(self.coeffs.iter().map(|a| a * &c).collect())
    }

    pub fn pow(&self, e: usize) -> BigPoly {
        let mut acc = BigPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division: Some(q) iff self = q * divisor with no remainder.
    /// Divisor must be monic (the only divisors used here are).
    pub fn div_exact(&self, divisor: &BigPoly) -> Option<BigPoly> {
        assert!(divisor.is_monic(), "div_exact expects a monic divisor");
        if self.is_zero() {
            return Some(BigPoly::new(vec![]));
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            quot[i] = c.clone();
            for j in 0..=dd {
                let sub = &divisor.coeffs[j] * &c;
                rem[i + j] -= sub;
            }
        }
        if rem.iter().all(Zero::is_zero) {
            Some(BigPoly::new(quot))
        } else {
            None
        }
    }

    /// Sum of roots with multiplicity, i.e. -c_{n-1} for a monic polynomial.
    pub fn root_sum(&self) -> BigInt {
        debug_assert!(self.is_monic());
        if self.degree() == 0 {
            BigInt::zero()
        } else {
            -self.coeffs[self.degree() - 1].clone()
        }
    }
}

/// Maximal multiplicity of the integer root mu, extracted by repeated
/// exact synthetic division; returns (deflated polynomial, multiplicity).
pub fn poly_div_linear(p: &BigPoly, mu: i64) -> (BigPoly, usize) {
    let lin = BigPoly::linear(&BigInt::from(mu));
    let mut mult = 0;
    let mut cur = p.clone();
    while !cur.is_zero() {
        match cur.div_exact(&lin) {
            Some(q) => {
                cur = q;
                mult += 1;
            }
            None => break,
        }
    }
    (cur, mult)
}

fn bigint_to_f64(v: &BigInt) -> f64 {
    // TryInto<f64> for BigInt saturates on overflow, which is fine for the
    // magnitudes used here
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(f64::INFINITY)
}

impl fmt::Display for BigPoly {
    /// "λ^3 - 36·λ^2 + 264·λ - 520" style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..=self.degree()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "·")?;
                }
                if i == 1 {
                    write!(f, "λ")?;
                } else {
                    write!(f, "λ^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// A conjugate pair (p +- sqrt(d)) / q in gcd-normalized form: the square
/// part of d is pulled out and cancelled against gcd(p, q), and q > 0.
/// When d is a perfect square the pair is actually rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurdValue {
    pub p: i64,
    pub d: i64,
    pub q: i64,
}

impl SurdValue {
    pub fn new(p: i64, d: i64, q: i64) -> Self {
        assert!(d >= 0, "negative discriminant");
        assert!(q != 0);
        let (mut p, mut d, mut q) = if q < 0 { (-p, d, -q) } else { (p, d, q) };
        // d = s^2 * d0 with d0 squarefree
        let mut s = 1i64;
        let mut d0 = d;
        let mut f = 2i64;
        while f * f <= d0 {
            while d0 % (f * f) == 0 {
                d0 /= f * f;
                s *= f;
            }
            f += 1;
        }
        let g = gcd(gcd(p.unsigned_abs(), s.unsigned_abs()), q.unsigned_abs()) as i64;
        if g > 1 {
            p /= g;
            s /= g;
            q /= g;
        }
        d = s * s * d0;
        SurdValue { p, d, q }
    }

    /// True when sqrt(d) is an integer, making both conjugates rational.
    pub fn is_rational(&self) -> bool {
        let r = isqrt(self.d as u128) as i64;
        r * r == self.d
    }

    pub fn values_f64(&self) -> (f64, f64) {
        let r = (self.d as f64).sqrt();
        (
            (self.p as f64 - r) / self.q as f64,
            (self.p as f64 + r) / self.q as f64,
        )
    }

    /// Minimal monic quadratic with these two roots, in integer
    /// coefficients: lambda^2 - (2p/q) lambda + (p^2 - d)/q^2.
    /// Errors when clearing denominators does not produce integers.
    pub fn monic_quadratic(&self) -> Result<BigPoly> {
        let (p, d, q) = (self.p as i128, self.d as i128, self.q as i128);
        let b_num = 2 * p;
        let c_num = p * p - d;
        if b_num % q != 0 || c_num % (q * q) != 0 {
            return Err(Error::MalformedSpectrum(format!(
                "surd ({p} ± √{d})/{q} has a non-integral minimal quadratic"
            )));
        }
        Ok(BigPoly::new(vec![
            BigInt::from(c_num / (q * q)),
            BigInt::from(-b_num / q),
            BigInt::one(),
        ]))
    }
}

impl fmt::Display for SurdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 1 {
            write!(f, "{} ± √{}", self.p, self.d)
        } else {
            write!(f, "({} ± √{})/{}", self.p, self.d, self.q)
        }
    }
}

/// Both roots of a monic integer quadratic as a normalized surd pair.
pub fn solve_monic_quadratic(p: &BigPoly) -> Result<SurdValue> {
    assert_eq!(p.degree(), 2);
    assert!(p.is_monic(), "monic quadratic expected");
    use num_traits::ToPrimitive;
    let b = p.coeff(1).to_i64().ok_or_else(|| {
        Error::MalformedSpectrum("quadratic coefficient overflows i64".into())
    })?;
    let c = p.coeff(0).to_i64().ok_or_else(|| {
        Error::MalformedSpectrum("quadratic coefficient overflows i64".into())
    })?;
    let disc = (b as i128) * (b as i128) - 4 * (c as i128);
    if disc < 0 {
        return Err(Error::ComplexRoots(format!("discriminant {disc}")));
    }
    Ok(SurdValue::new(-b, disc as i64, 2))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Floor of the integer square root.
pub fn isqrt(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u128 + 2;
    while x * x > n {
        x -= 1;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_linear() {
        // (l+2)^2 (l^2 - 4l - 3) at mu = -2 -> multiplicity 2
        let p = BigPoly::from_i64(&[2, 1])
            .pow(2)
            .mul(&BigPoly::from_i64(&[-3, -4, 1]));
        let (q, mult) = poly_div_linear(&p, -2);
        assert_eq!(mult, 2);
        assert_eq!(q, BigPoly::from_i64(&[-3, -4, 1]));

        let p = BigPoly::from_i64(&[-1, 0, 1]);
        let (q, mult) = poly_div_linear(&p, 3);
        assert_eq!(mult, 0);
        assert_eq!(q, p);

        let p = BigPoly::linear(&BigInt::from(5)).pow(3);
        let (q, mult) = poly_div_linear(&p, 5);
        assert_eq!(mult, 3);
        assert_eq!(q, BigPoly::one());
    }

    #[test]
    fn quadratic_surds() {
        // l^2 - 4l - 3 -> 2 ± √7
        let s = solve_monic_quadratic(&BigPoly::from_i64(&[-3, -4, 1])).unwrap();
        assert_eq!(s, SurdValue { p: 2, d: 7, q: 1 });
        // l^2 - 2l - 2 -> 1 ± √3
        let s = solve_monic_quadratic(&BigPoly::from_i64(&[-2, -2, 1])).unwrap();
        assert_eq!(s, SurdValue { p: 1, d: 3, q: 1 });
        // l^2 - 1 -> rational pair ±1
        let s = solve_monic_quadratic(&BigPoly::from_i64(&[-1, 0, 1])).unwrap();
        assert!(s.is_rational());
        assert_eq!(s.values_f64(), (-1.0, 1.0));
    }

    #[test]
    fn surd_normalization() {
        // (12 ± √48)/2 = 6 ± 2√3 = 6 ± √12
        let s = SurdValue::new(12, 48, 2);
        assert_eq!(s, SurdValue { p: 6, d: 12, q: 1 });
        // round trip through the minimal quadratic
        let q = s.monic_quadratic().unwrap();
        assert_eq!(q, BigPoly::from_i64(&[24, -12, 1]));
        assert_eq!(solve_monic_quadratic(&q).unwrap(), s);
    }

    #[test]
    fn display_form() {
        let p = BigPoly::from_i64(&[-520, 264, -36, 1]);
        assert_eq!(p.to_string(), "λ^3 - 36·λ^2 + 264·λ - 520");
        assert_eq!(BigPoly::from_i64(&[0, 1]).to_string(), "λ");
    }

    #[test]
    fn isqrt_and_perfect_squares() {
        assert_eq!(isqrt(48), 6);
        assert_eq!(isqrt(49), 7);
        assert_eq!(isqrt(0), 0);
        for n in 0..2000u128 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
    }
}
