//! The field chain `F_p ⊂ F_q ⊂ F_{q^s} ⊂ F_{q^m}` with `q = p^e` and `m = 2s`,
//! realized inside a single ambient field of degree `e·m` over `F_p`.
//!
//! Elements are integers whose base-`p` digits are the coefficients of the
//! residue polynomial (low degree first). Multiplication goes through
//! log/antilog tables built from a primitive modulus; the subfields are the
//! fixed sets of the matching Frobenius power, so no embedding maps exist.

pub(crate) mod primitive;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub(crate) use primitive::is_prime;

/// Default upper bound on the ambient field size.
pub const DEFAULT_SIZE_BOUND: u64 = 1 << 24;

/// An element of the ambient field, identified by its encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One of the four fields of the chain, ordered by inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Level {
    Prime,
    Q,
    Qs,
    Qm,
}

impl Level {
    pub const ALL: [Level; 4] = [Level::Prime, Level::Q, Level::Qs, Level::Qm];
}

/// Immutable description of the tower plus its multiplication tables.
#[derive(Clone)]
pub struct Tower {
    p: u32,
    e: u32,
    s: u32,
    size: u32,
    modulus: Vec<u32>,
    log: Vec<u32>,
    antilog: Vec<u32>,
    // sorted element lists for Prime, Q and Qs
    small_levels: [Vec<Elem>; 3],
}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tower")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("s", &self.s)
            .field("modulus", &self.modulus_string())
            .finish()
    }
}

/// Builds the tower for `(p, e, s)` with the default size bound.
pub fn build_tower(p: u32, e: u32, s: u32) -> Result<Tower> {
    Tower::with_bound(p, e, s, DEFAULT_SIZE_BOUND)
}

impl Tower {
    pub fn with_bound(p: u32, e: u32, s: u32, bound: u64) -> Result<Tower> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 || s == 0 {
            return Err(Error::InvalidParameter(format!(
                "e and s must be positive (e = {e}, s = {s})"
            )));
        }
        let degree = e
            .checked_mul(2 * s)
            .ok_or_else(|| Error::InvalidParameter("degree overflow".into()))?;
        let size = (p as u128).checked_pow(degree).unwrap_or(u128::MAX);
        if size > bound as u128 || size > u32::MAX as u128 {
            return Err(Error::SizeBound { size, bound });
        }
        let size = size as u32;
        let modulus = primitive::smallest_primitive(p, degree);
        let (log, antilog) = build_tables(p, degree, &modulus);

        let mut tower = Tower {
            p,
            e,
            s,
            size,
            modulus,
            log,
            antilog,
            small_levels: [Vec::new(), Vec::new(), Vec::new()],
        };
        for (slot, level) in [Level::Prime, Level::Q, Level::Qs].into_iter().enumerate() {
            let list = tower.scan_level(level);
            tower.small_levels[slot] = list;
        }
        Ok(tower)
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn e(&self) -> u32 {
        self.e
    }
    pub fn s(&self) -> u32 {
        self.s
    }
    pub fn m(&self) -> u32 {
        2 * self.s
    }
    /// Order of the base field `F_q`.
    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.e)
    }
    /// Order of the ambient field `F_{q^m}`.
    pub fn size(&self) -> u32 {
        self.size
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    /// Comma-separated modulus coefficients, low degree first.
    pub fn modulus_string(&self) -> String {
        self.modulus
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
    /// The residue class of the indeterminate; a primitive element.
    pub fn generator(&self) -> Elem {
        Elem(self.antilog[1])
    }
    pub fn log_table(&self) -> &[u32] {
        &self.log
    }
    pub fn antilog_table(&self) -> &[u32] {
        &self.antilog
    }

    pub fn degree(&self, level: Level) -> u32 {
        match level {
            Level::Prime => 1,
            Level::Q => self.e,
            Level::Qs => self.e * self.s,
            Level::Qm => 2 * self.e * self.s,
        }
    }

    pub fn level_size(&self, level: Level) -> u64 {
        (self.p as u64).pow(self.degree(level))
    }

    fn order(&self) -> u64 {
        self.size as u64 - 1
    }

    /// Discrete log of a nonzero element to the base `generator()`.
    pub fn log(&self, x: Elem) -> Option<u32> {
        (!x.is_zero()).then(|| self.log[x.0 as usize])
    }

    /// `generator()^k`.
    pub fn exp(&self, k: u64) -> Elem {
        Elem(self.antilog[(k % self.order()) as usize])
    }

    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        if self.p == 2 {
            return Elem(x.0 ^ y.0);
        }
        let p = self.p;
        let (mut a, mut b) = (x.0, y.0);
        let mut out = 0u64;
        let mut place = 1u64;
        while a > 0 || b > 0 {
            out += (((a % p) + (b % p)) % p) as u64 * place;
            place *= p as u64;
            a /= p;
            b /= p;
        }
        Elem(out as u32)
    }

    pub fn neg(&self, x: Elem) -> Elem {
        if self.p == 2 {
            return x;
        }
        let p = self.p;
        let mut a = x.0;
        let mut out = 0u64;
        let mut place = 1u64;
        while a > 0 {
            out += ((p - a % p) % p) as u64 * place;
            place *= p as u64;
            a /= p;
        }
        Elem(out as u32)
    }

    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x.is_zero() || y.is_zero() {
            return Elem::ZERO;
        }
        let k = self.log[x.0 as usize] as u64 + self.log[y.0 as usize] as u64;
        self.exp(k)
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let k = self.log[x.0 as usize] as u64;
        Ok(self.exp(self.order() - k))
    }

    pub fn div(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem::ONE;
        }
        if x.is_zero() {
            return Elem::ZERO;
        }
        let l = self.log[x.0 as usize] as u128;
        let exp = (l * k as u128) % self.order() as u128;
        Elem(self.antilog[exp as usize])
    }

    /// Multiplies by the integer `k` (repeated addition of `x`).
    pub fn scale(&self, x: Elem, k: u64) -> Elem {
        let k = (k % self.p as u64) as u32;
        let mut acc = Elem::ZERO;
        for _ in 0..k {
            acc = self.add(acc, x);
        }
        acc
    }

    /// `x ↦ x^{|level|}`.
    pub fn frobenius(&self, x: Elem, level: Level) -> Elem {
        self.pow(x, self.level_size(level))
    }

    pub fn contains(&self, x: Elem, level: Level) -> bool {
        if x.0 >= self.size {
            return false;
        }
        if x.is_zero() {
            return true;
        }
        let cofactor = self.order() / (self.level_size(level) - 1);
        self.log[x.0 as usize] as u64 % cofactor == 0
    }

    fn check_member(&self, x: Elem, level: Level) -> Result<()> {
        if self.contains(x, level) {
            Ok(())
        } else {
            Err(Error::NotInLevel {
                encoding: x.0,
                level,
            })
        }
    }

    fn check_nested(from: Level, to: Level) -> Result<()> {
        if to <= from {
            Ok(())
        } else {
            Err(Error::LevelsNotNested { from, to })
        }
    }

    /// `Σ_{i < [from:to]} x^{|to|^i}`.
    pub fn trace(&self, x: Elem, from: Level, to: Level) -> Result<Elem> {
        Self::check_nested(from, to)?;
        self.check_member(x, from)?;
        let steps = self.degree(from) / self.degree(to);
        let step = self.level_size(to);
        let mut acc = Elem::ZERO;
        let mut cur = x;
        for _ in 0..steps {
            acc = self.add(acc, cur);
            cur = self.pow(cur, step);
        }
        Ok(acc)
    }

    /// `x^{(|from|-1)/(|to|-1)}`, with `norm(0) = 0`.
    pub fn norm(&self, x: Elem, from: Level, to: Level) -> Result<Elem> {
        Self::check_nested(from, to)?;
        self.check_member(x, from)?;
        if x.is_zero() {
            return Ok(Elem::ZERO);
        }
        let exp = (self.level_size(from) - 1) / (self.level_size(to) - 1);
        Ok(self.pow(x, exp))
    }

    /// `x^{q^s+1}`, the norm from `F_{q^m}` down to `F_{q^s}`.
    pub fn norm_qm_qs(&self, x: Elem) -> Elem {
        self.pow(x, self.level_size(Level::Qs) + 1)
    }

    /// Canonical generator of a level's multiplicative group.
    pub fn level_generator(&self, level: Level) -> Elem {
        let cofactor = self.order() / (self.level_size(level) - 1);
        self.exp(cofactor)
    }

    /// Discrete log of `x` to the base `level_generator(level)`.
    pub fn level_log(&self, x: Elem, level: Level) -> Result<u64> {
        self.check_member(x, level)?;
        if x.is_zero() {
            return Err(Error::ZeroArgument("x"));
        }
        let cofactor = self.order() / (self.level_size(level) - 1);
        Ok(self.log[x.0 as usize] as u64 / cofactor)
    }

    fn scan_level(&self, level: Level) -> Vec<Elem> {
        let mut out = vec![Elem::ZERO];
        let cofactor = self.order() / (self.level_size(level) - 1);
        let mut k = 0u64;
        while k < self.order() {
            out.push(self.exp(k));
            k += cofactor;
        }
        out.sort_unstable();
        out
    }

    /// Elements of a level, ascending by encoding.
    pub fn subfield_elements(&self, level: Level) -> Vec<Elem> {
        match level {
            Level::Prime => self.small_levels[0].clone(),
            Level::Q => self.small_levels[1].clone(),
            Level::Qs => self.small_levels[2].clone(),
            Level::Qm => (0..self.size).map(Elem).collect(),
        }
    }

    /// Borrowed element list of `F_q`.
    pub fn q_elements(&self) -> &[Elem] {
        &self.small_levels[1]
    }

    /// Position of `x` in `subfield_elements(level)`.
    pub fn canonical_index(&self, x: Elem, level: Level) -> Result<usize> {
        self.check_member(x, level)?;
        match level {
            Level::Qm => Ok(x.0 as usize),
            Level::Prime => self.small_levels[0].binary_search(&x),
            Level::Q => self.small_levels[1].binary_search(&x),
            Level::Qs => self.small_levels[2].binary_search(&x),
        }
        .map_err(|_| Error::NotInLevel {
            encoding: x.0,
            level,
        })
    }

    /// Inverse of `canonical_index`.
    pub fn element_at(&self, index: usize, level: Level) -> Elem {
        match level {
            Level::Qm => Elem(index as u32),
            Level::Prime => self.small_levels[0][index],
            Level::Q => self.small_levels[1][index],
            Level::Qs => self.small_levels[2][index],
        }
    }

    /// `Tr_{q^m/q}` of every ambient element, as `F_q` canonical indices.
    ///
    /// Built from the traces of the monomials `X^k` by `F_p`-linearity.
    pub fn trace_index_table(&self, from: Level, to: Level) -> Result<Vec<u32>> {
        Self::check_nested(from, to)?;
        let size = self.level_size(from) as usize;
        let mut table = vec![0u32; self.size as usize];
        if from == Level::Qm {
            let degree = self.degree(Level::Qm) as usize;
            let p = self.p as usize;
            let mut basis = Vec::with_capacity(degree);
            let mut place = 1u32;
            for _ in 0..degree {
                basis.push(self.trace(Elem(place), from, to)?);
                place *= self.p;
            }
            let mut values = vec![Elem::ZERO; size];
            // values[x] = values[x - digit_top * p^k] + digit_top * tr(X^k)
            let mut block = 1usize;
            for b in basis.iter() {
                for x in block..(block * p).min(size) {
                    let d = (x / block) as u64;
                    let rest = x % block;
                    values[x] = self.add(values[rest], self.scale(*b, d));
                }
                block *= p;
            }
            for (slot, v) in table.iter_mut().zip(values.iter()) {
                *slot = self.canonical_index(*v, to)? as u32;
            }
        } else {
            for x in self.subfield_elements(from) {
                let t = self.trace(x, from, to)?;
                table[x.0 as usize] = self.canonical_index(t, to)? as u32;
            }
        }
        Ok(table)
    }
}

fn build_tables(p: u32, degree: u32, modulus: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let size = (p as u64).pow(degree) as usize;
    let order = size - 1;
    let mut log = vec![u32::MAX; size];
    let mut antilog = vec![0u32; order];
    if p == 2 {
        let full: u32 = modulus
            .iter()
            .enumerate()
            .map(|(i, &c)| c << i)
            .sum();
        let top = 1u32 << degree;
        let mut cur = 1u32;
        for i in 0..order {
            antilog[i] = cur;
            log[cur as usize] = i as u32;
            cur <<= 1;
            if cur & top != 0 {
                cur ^= full;
            }
        }
        debug_assert_eq!(cur, 1);
    } else {
        let deg = degree as usize;
        let mut digits = vec![0u32; deg];
        digits[0] = 1;
        let powers: Vec<u32> = (0..deg).map(|i| p.pow(i as u32)).collect();
        for i in 0..order {
            let enc: u32 = digits.iter().zip(&powers).map(|(d, w)| d * w).sum();
            antilog[i] = enc;
            log[enc as usize] = i as u32;
            let lead = digits[deg - 1];
            for j in (1..deg).rev() {
                digits[j] = digits[j - 1];
            }
            digits[0] = 0;
            if lead != 0 {
                for j in 0..deg {
                    let sub = (lead * modulus[j]) % p;
                    digits[j] = (digits[j] + p - sub) % p;
                }
            }
        }
        debug_assert_eq!(digits[0], 1);
    }
    (log, antilog)
}
