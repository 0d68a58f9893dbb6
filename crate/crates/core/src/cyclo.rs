//! Exact arithmetic in `Z[ζ_p]`.
//!
//! A value is stored as `Σ coeffs[i]·ζ_p^i` with `p` coefficients. The
//! representation is redundant because `1 + ζ + … + ζ^{p-1} = 0`; the
//! canonical form pins the last coefficient to zero.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct CycVec {
    p: u32,
    coeffs: Vec<i64>,
}

impl CycVec {
    pub fn zero(p: u32) -> Self {
        CycVec {
            p,
            coeffs: vec![0; p as usize],
        }
    }

    pub fn integer(p: u32, t: i64) -> Self {
        let mut v = Self::zero(p);
        v.coeffs[0] = t;
        v
    }

    /// `ζ_p^k`.
    pub fn monomial(p: u32, k: u64) -> Self {
        let mut v = Self::zero(p);
        v.coeffs[(k % p as u64) as usize] = 1;
        v
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        CycVec {
            p: coeffs.len() as u32,
            coeffs,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Adds `count·ζ^k` in place.
    #[inline]
    pub fn add_monomial(&mut self, k: u32, count: i64) {
        self.coeffs[k as usize] += count;
    }

    /// Adds `ζ^k · other` in place.
    pub fn add_rotated(&mut self, other: &CycVec, k: u32) -> Result<()> {
        self.check(other)?;
        let p = self.p as usize;
        let k = k as usize % p;
        for (i, &c) in other.coeffs.iter().enumerate() {
            let j = if i + k >= p { i + k - p } else { i + k };
            self.coeffs[j] += c;
        }
        Ok(())
    }

    fn check(&self, other: &CycVec) -> Result<()> {
        if self.p != other.p {
            Err(Error::CyclotomicMismatch(self.p, other.p))
        } else {
            Ok(())
        }
    }

    pub fn canonical(&self) -> CycVec {
        let last = *self.coeffs.last().expect("p >= 2");
        CycVec {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c - last).collect(),
        }
    }

    /// The rational integer this value equals, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        let c = self.canonical();
        c.coeffs[1..].iter().all(|&x| x == 0).then_some(c.coeffs[0])
    }

    pub fn add(&self, other: &CycVec) -> Result<CycVec> {
        self.check(other)?;
        Ok(CycVec {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &CycVec) -> Result<CycVec> {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> CycVec {
        CycVec {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, t: i64) -> CycVec {
        CycVec {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * t).collect(),
        }
    }

    pub fn mul(&self, other: &CycVec) -> Result<CycVec> {
        self.check(other)?;
        let p = self.p as usize;
        let mut out = vec![0i64; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[(i + j) % p] += a * b;
            }
        }
        Ok(CycVec { p: self.p, coeffs: out })
    }

    pub fn equals(&self, other: &CycVec) -> Result<bool> {
        self.check(other)?;
        Ok(self.canonical().coeffs == other.canonical().coeffs)
    }

    /// Numeric value with `ζ_p = exp(2πi/p)`, as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let p = self.p as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (k, &c)| {
                let angle = 2.0 * PI * k as f64 / p;
                (re + c as f64 * angle.cos(), im + c as f64 * angle.sin())
            })
    }
}

impl PartialEq for CycVec {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl Eq for CycVec {}

impl fmt::Display for CycVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        let terms: Vec<String> = c
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(k, x)| match k {
                0 => format!("{x}"),
                _ => format!("{x}*z^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sum_is_zero() {
        let v = CycVec::from_coeffs(vec![1, 1, 1]);
        assert!(v.equals(&CycVec::integer(3, 0)).unwrap());
        assert_eq!(v.as_integer(), Some(0));
    }

    #[test]
    fn exponents_reduce_mod_p() {
        let z = CycVec::monomial(3, 1);
        let z2 = CycVec::monomial(3, 2);
        assert_eq!(z.mul(&z2).unwrap(), CycVec::integer(3, 1));
    }

    #[test]
    fn complex_value_of_zeta3() {
        let (re, im) = CycVec::monomial(3, 1).to_complex();
        assert!((re + 0.5).abs() < 1e-12);
        assert!((im - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn mismatched_orders() {
        let a = CycVec::zero(3);
        let b = CycVec::zero(5);
        assert!(matches!(a.add(&b), Err(Error::CyclotomicMismatch(3, 5))));
        assert!(a.mul(&b).is_err());
        assert!(a.equals(&b).is_err());
        assert_ne!(a, b);
    }

    #[test]
    fn canonical_form_and_integers() {
        let v = CycVec::from_coeffs(vec![4, 2, 2]);
        assert_eq!(v.canonical().coeffs(), &[2, 0, 0]);
        assert_eq!(v.as_integer(), Some(2));
        assert_eq!(CycVec::monomial(5, 2).as_integer(), None);
        // p = 2: ζ = -1
        assert_eq!(CycVec::from_coeffs(vec![3, 5]).as_integer(), Some(-2));
    }

    #[test]
    fn rotation_matches_monomial_product() {
        let v = CycVec::from_coeffs(vec![1, -2, 0, 7, 3]);
        let mut acc = CycVec::zero(5);
        acc.add_rotated(&v, 3).unwrap();
        assert_eq!(acc, v.mul(&CycVec::monomial(5, 3)).unwrap());
    }
}
