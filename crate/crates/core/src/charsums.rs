//! Characters, Gauss sums and the two exponential sums that drive the weight
//! computation, each paired with its closed form.
//!
//! Everything built from additive characters and the quadratic character is
//! evaluated exactly in `Z[ζ_p]`; general multiplicative characters are
//! evaluated numerically.

use std::f64::consts::PI;

use crate::cyclo::CycVec;
use crate::error::{Error, Result};
use crate::field::{Elem, Level, Tower};

/// Which character of a level's additive or multiplicative group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharKind {
    Additive(Elem),
    /// `ψ_j`, with `j` taken modulo `|level| - 1`.
    Multiplicative(u64),
    Quadratic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharSpec {
    pub kind: CharKind,
    pub level: Level,
}

impl CharSpec {
    pub fn new(tower: &Tower, kind: CharKind, level: Level) -> Result<CharSpec> {
        let size = tower.level_size(level);
        let kind = match kind {
            CharKind::Additive(a) => {
                if !tower.contains(a, level) {
                    return Err(Error::NotInLevel {
                        encoding: a.0,
                        level,
                    });
                }
                kind
            }
            CharKind::Multiplicative(j) => CharKind::Multiplicative(j % (size - 1)),
            CharKind::Quadratic if size % 2 == 0 => return Err(Error::EvenOrder(size)),
            CharKind::Quadratic => kind,
        };
        Ok(CharSpec { kind, level })
    }

    /// Complex value at `x`.
    pub fn eval(&self, tower: &Tower, x: Elem) -> Result<(f64, f64)> {
        match self.kind {
            CharKind::Additive(a) => Ok(additive_char(tower, a, x, self.level)?.to_complex()),
            CharKind::Multiplicative(j) => mult_char_numeric(tower, j, x, self.level),
            CharKind::Quadratic => Ok((quadratic_char(tower, x, self.level)? as f64, 0.0)),
        }
    }
}

/// `Tr_{level/p}(x)` as an exponent of `ζ_p`.
pub fn trace_to_prime(tower: &Tower, x: Elem, level: Level) -> Result<u32> {
    // prime-field elements are encoded 0..p-1
    Ok(tower.trace(x, level, Level::Prime)?.0)
}

/// `φ_a(x) = ζ_p^{Tr(a·x)}` on the given level.
pub fn additive_char(tower: &Tower, a: Elem, x: Elem, level: Level) -> Result<CycVec> {
    for v in [a, x] {
        if !tower.contains(v, level) {
            return Err(Error::NotInLevel {
                encoding: v.0,
                level,
            });
        }
    }
    let k = trace_to_prime(tower, tower.mul(a, x), level)?;
    Ok(CycVec::monomial(tower.p(), k as u64))
}

/// `η(x)` as `+1` or `-1`.
pub fn quadratic_char(tower: &Tower, x: Elem, level: Level) -> Result<i64> {
    let size = tower.level_size(level);
    if size % 2 == 0 {
        return Err(Error::EvenOrder(size));
    }
    if x.is_zero() {
        return Err(Error::ZeroArgument("x"));
    }
    if !tower.contains(x, level) {
        return Err(Error::NotInLevel {
            encoding: x.0,
            level,
        });
    }
    Ok(if tower.pow(x, (size - 1) / 2) == Elem::ONE {
        1
    } else {
        -1
    })
}

/// `ψ_j(α^k) = exp(2πi·jk/(|level|-1))` for the level's canonical generator `α`.
pub fn mult_char_numeric(tower: &Tower, j: u64, x: Elem, level: Level) -> Result<(f64, f64)> {
    if x.is_zero() {
        return Err(Error::ZeroArgument("x"));
    }
    let order = tower.level_size(level) - 1;
    let k = tower.level_log(x, level)?;
    let r = ((j % order) as u128 * k as u128 % order as u128) as f64;
    let angle = 2.0 * PI * r / order as f64;
    Ok((angle.cos(), angle.sin()))
}

/// `G(η, φ_b) = Σ_{x≠0} η(x)·φ_b(x)`, exactly.
pub fn gauss_sum_quadratic_with(tower: &Tower, b: Elem, level: Level) -> Result<CycVec> {
    let size = tower.level_size(level);
    if size % 2 == 0 {
        return Err(Error::EvenOrder(size));
    }
    let mut acc = CycVec::zero(tower.p());
    for x in tower.subfield_elements(level).into_iter().skip(1) {
        let eta = quadratic_char(tower, x, level)?;
        let k = trace_to_prime(tower, tower.mul(b, x), level)?;
        acc.add_monomial(k, eta);
    }
    Ok(acc)
}

/// The quadratic Gauss sum over the level with its canonical additive character.
pub fn gauss_sum_quadratic(tower: &Tower, level: Level) -> Result<CycVec> {
    gauss_sum_quadratic_with(tower, Elem::ONE, level)
}

/// Closed form of the quadratic Gauss sum over `F_{p^e}`, as `(re, im)`.
pub fn lemma1_closed(p: u64, e: u32) -> Result<(f64, f64)> {
    if p == 2 {
        return Err(Error::EvenOrder(2));
    }
    let root = (p as f64).powi(e as i32).sqrt();
    let sign = if e % 2 == 1 { 1.0 } else { -1.0 };
    if p % 4 == 1 {
        return Ok((sign * root, 0.0));
    }
    // (√-1)^e cycles through 1, i, -1, -i
    let (re, im) = match e % 4 {
        0 => (1.0, 0.0),
        1 => (0.0, 1.0),
        2 => (-1.0, 0.0),
        _ => (0.0, -1.0),
    };
    Ok((sign * re * root, sign * im * root))
}

fn check_in(tower: &Tower, x: Elem, level: Level) -> Result<()> {
    if tower.contains(x, level) {
        Ok(())
    } else {
        Err(Error::NotInLevel {
            encoding: x.0,
            level,
        })
    }
}

/// `Σ_{c ∈ level} φ_b(a2·c² + a1·c + a0)` by direct summation.
pub fn quadratic_poly_sum(
    tower: &Tower,
    a2: Elem,
    a1: Elem,
    a0: Elem,
    b: Elem,
    level: Level,
) -> Result<CycVec> {
    if a2.is_zero() {
        return Err(Error::ZeroArgument("a2"));
    }
    if b.is_zero() {
        return Err(Error::ZeroArgument("b"));
    }
    for v in [a2, a1, a0, b] {
        check_in(tower, v, level)?;
    }
    let mut acc = CycVec::zero(tower.p());
    for c in tower.subfield_elements(level) {
        let f = tower.add(
            tower.add(tower.mul(a2, tower.mul(c, c)), tower.mul(a1, c)),
            a0,
        );
        acc.add_monomial(trace_to_prime(tower, tower.mul(b, f), level)?, 1);
    }
    Ok(acc)
}

/// Closed form for the same sum: the completed-square formula for odd order,
/// the `a2 = b·a1²` criterion for even order.
pub fn quadratic_poly_closed(
    tower: &Tower,
    a2: Elem,
    a1: Elem,
    a0: Elem,
    b: Elem,
    level: Level,
) -> Result<CycVec> {
    if a2.is_zero() {
        return Err(Error::ZeroArgument("a2"));
    }
    if b.is_zero() {
        return Err(Error::ZeroArgument("b"));
    }
    let size = tower.level_size(level);
    let p = tower.p();
    if size % 2 == 1 {
        let four_a2 = tower.scale(a2, 4);
        let shift = tower.mul(tower.mul(a1, a1), tower.inv(four_a2)?);
        let arg = tower.sub(a0, shift);
        let phase = additive_char(tower, b, arg, level)?;
        let g = gauss_sum_quadratic_with(tower, b, level)?;
        let eta = quadratic_char(tower, a2, level)?;
        Ok(phase.mul(&g)?.scale(eta))
    } else if a2 == tower.mul(b, tower.mul(a1, a1)) {
        Ok(additive_char(tower, b, a0, level)?.scale(size as i64))
    } else {
        Ok(CycVec::zero(p))
    }
}

/// Precomputed tables for the exponential sums over `F_{q^m}`.
///
/// `F_q` elements are handled by canonical index. The tables cost
/// `O(q^m + q²)` memory.
pub struct SumContext<'t> {
    tower: &'t Tower,
    q: usize,
    p: u32,
    norm_exp: u64,
    order: u64,
    tr_qm_q: Vec<u32>,
    tr_qs_q: Vec<u32>,
    add_idx: Vec<u16>,
    // Tr_{q/p}(y·v) for F_q indices y, v
    pair_trp: Vec<u16>,
}

impl<'t> SumContext<'t> {
    pub fn new(tower: &'t Tower) -> Result<Self> {
        let q = tower.q() as usize;
        let qe = tower.q_elements();
        let mut add_idx = vec![0u16; q * q];
        let mut pair_trp = vec![0u16; q * q];
        for (i, &x) in qe.iter().enumerate() {
            for (j, &y) in qe.iter().enumerate() {
                add_idx[i * q + j] = tower.canonical_index(tower.add(x, y), Level::Q)? as u16;
                pair_trp[i * q + j] = trace_to_prime(tower, tower.mul(x, y), Level::Q)? as u16;
            }
        }
        Ok(SumContext {
            tower,
            q,
            p: tower.p(),
            norm_exp: tower.level_size(Level::Qs) + 1,
            order: tower.size() as u64 - 1,
            tr_qm_q: tower.trace_index_table(Level::Qm, Level::Q)?,
            tr_qs_q: tower.trace_index_table(Level::Qs, Level::Q)?,
            add_idx,
            pair_trp,
        })
    }

    pub fn tower(&self) -> &Tower {
        self.tower
    }

    fn q_index(&self, c: Elem) -> Result<usize> {
        self.tower.canonical_index(c, Level::Q)
    }

    #[inline]
    fn antilog(&self, k: u64) -> usize {
        self.tower.antilog_table()[(k % self.order) as usize] as usize
    }

    fn integer(&self, v: &[i64], what: &str) -> Result<i64> {
        let cv = CycVec::from_coeffs(v.to_vec());
        cv.as_integer()
            .ok_or_else(|| Error::NonIntegerSum(format!("{what}: {cv}")))
    }

    /// `Δ(a, b, c)` for every `c ∈ F_q`, indexed by canonical index of `c`.
    pub fn delta_bruteforce_row(&self, a: Elem, b: Elem) -> Result<Vec<i64>> {
        let tower = self.tower;
        if a.is_zero() {
            return Err(Error::ZeroArgument("a"));
        }
        check_in(tower, a, Level::Qs)?;
        check_in(tower, b, Level::Qm)?;
        let (q, p) = (self.q, self.p as usize);
        let log_a = tower.log(a).unwrap() as u64;
        let log_b = tower.log(b).map(|l| l as u64);

        // histogram of y-free inner argument over x ∈ F*_{q^m}
        let mut cnt = vec![0i64; q];
        for i in 0..self.order {
            let an = self.antilog(log_a + i * self.norm_exp);
            let u = self.tr_qs_q[an] as usize;
            let w = match log_b {
                Some(lb) => self.tr_qm_q[self.antilog(lb + i)] as usize,
                None => 0,
            };
            cnt[self.add_idx[u * q + w] as usize] += 1;
        }

        let mut acc = vec![0i64; q * p];
        let mut inner = vec![0i64; p];
        for y in 1..q {
            inner.iter_mut().for_each(|v| *v = 0);
            let row = &self.pair_trp[y * q..(y + 1) * q];
            for (v, &n) in cnt.iter().enumerate() {
                inner[row[v] as usize] += n;
            }
            for c in 0..q {
                rotate_add(&mut acc[c * p..(c + 1) * p], &inner, row[c] as usize);
            }
        }
        (0..q)
            .map(|c| self.integer(&acc[c * p..(c + 1) * p], "delta"))
            .collect()
    }

    pub fn delta_bruteforce(&self, a: Elem, b: Elem, c: Elem) -> Result<i64> {
        let ci = self.q_index(c)?;
        Ok(self.delta_bruteforce_row(a, b)?[ci])
    }

    pub fn delta_closed(&self, a: Elem, b: Elem, c: Elem) -> Result<i64> {
        let tower = self.tower;
        if a.is_zero() {
            return Err(Error::ZeroArgument("a"));
        }
        check_in(tower, a, Level::Qs)?;
        check_in(tower, c, Level::Q)?;
        let qs = tower.level_size(Level::Qs) as i64;
        let q = tower.q() as i64;
        let t = tower.trace(
            tower.div(tower.norm_qm_qs(b), a)?,
            Level::Qs,
            Level::Q,
        )?;
        Ok(match (c.is_zero(), t.is_zero()) {
            (true, true) => (qs + 1) * (1 - q),
            (true, false) => qs + 1 - q,
            (false, _) if c == t => qs + 1 - qs * q,
            (false, _) => qs + 1,
        })
    }

    /// `S_c(b)` for every `c ∈ F_q`, indexed by canonical index of `c`.
    pub fn s_c_bruteforce_row(&self, b: Elem) -> Result<Vec<i64>> {
        let tower = self.tower;
        if b.is_zero() {
            return Err(Error::ZeroArgument("b"));
        }
        check_in(tower, b, Level::Qm)?;
        let (q, p) = (self.q, self.p as usize);
        let log_b = tower.log(b).unwrap() as u64;

        // cnt[u][v]: u = Tr_{q^m/q}(bx), v = Tr_{q^s/q}(x^{q^s+1})
        let mut cnt = vec![0i64; q * q];
        for i in 0..self.order {
            let u = self.tr_qm_q[self.antilog(log_b + i)] as usize;
            let v = self.tr_qs_q[self.antilog(i * self.norm_exp)] as usize;
            cnt[u * q + v] += 1;
        }

        // r[v] = Σ_{y≠0} Σ_u cnt[u][v] ζ^{Tr(yu)}
        let mut r = vec![0i64; q * p];
        for y in 1..q {
            let row = &self.pair_trp[y * q..(y + 1) * q];
            for u in 0..q {
                let k = row[u] as usize;
                for v in 0..q {
                    let n = cnt[u * q + v];
                    if n != 0 {
                        r[v * p + k] += n;
                    }
                }
            }
        }
        // acc[c] = Σ_{z≠0} ζ^{Tr(zc)} Σ_v ζ^{Tr(zv)} r[v]
        let mut acc = vec![0i64; q * p];
        let mut inner = vec![0i64; p];
        for z in 1..q {
            inner.iter_mut().for_each(|x| *x = 0);
            let row = &self.pair_trp[z * q..(z + 1) * q];
            for v in 0..q {
                rotate_add(&mut inner, &r[v * p..(v + 1) * p], row[v] as usize);
            }
            for c in 0..q {
                rotate_add(&mut acc[c * p..(c + 1) * p], &inner, row[c] as usize);
            }
        }
        (0..q)
            .map(|c| self.integer(&acc[c * p..(c + 1) * p], "S_c"))
            .collect()
    }

    pub fn s_c_bruteforce(&self, b: Elem, c: Elem) -> Result<i64> {
        let ci = self.q_index(c)?;
        Ok(self.s_c_bruteforce_row(b)?[ci])
    }

    pub fn s_c_closed(&self, b: Elem, c: Elem) -> Result<i64> {
        let tower = self.tower;
        if b.is_zero() {
            return Err(Error::ZeroArgument("b"));
        }
        check_in(tower, c, Level::Q)?;
        let qs = tower.level_size(Level::Qs) as i64;
        let q = tower.q() as i64;
        let t = tower.trace(tower.norm_qm_qs(b), Level::Qs, Level::Q)?;
        if c.is_zero() {
            return Ok(if t.is_zero() {
                -(q - 1) * (q - 1) * (qs + 1)
            } else {
                (q - 1) * (qs - q + 1)
            });
        }
        if t.is_zero() {
            return Ok((qs + 1) * (q - 1));
        }
        if q % 2 == 0 {
            return Ok(q - 1 - qs);
        }
        let p = tower.p() as u64;
        let sign = if ((p - 1) / 2 * tower.e() as u64) % 2 == 0 {
            1
        } else {
            -1
        };
        let eta = quadratic_char(tower, tower.neg(tower.mul(c, t)), Level::Q)?;
        Ok((q - 1) - qs - qs * q * sign * eta)
    }
}

#[inline]
fn rotate_add(dst: &mut [i64], src: &[i64], k: usize) {
    let p = dst.len();
    let (head, tail) = src.split_at(p - k);
    // src[i] lands on dst[i + k]
    for (d, s) in dst[k..].iter_mut().zip(head) {
        *d += s;
    }
    for (d, s) in dst[..k].iter_mut().zip(tail) {
        *d += s;
    }
}
