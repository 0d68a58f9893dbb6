//! The defining set `D = {x ∈ F*_{q^m} : Tr_{q^s/q}(x^{q^s+1}) + c = 0}` and
//! the trace code `C_D = {(Tr_{q^m/q}(b·d))_{d ∈ D} : b ∈ F_{q^m}}`.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, Level, Tower};

/// Which closed-form family a parameter set falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CCase {
    Zero,
    NonzeroEven,
    NonzeroOdd,
}

impl CCase {
    pub fn classify(q: u64, c_is_zero: bool) -> CCase {
        match (c_is_zero, q % 2 == 0) {
            (true, _) => CCase::Zero,
            (false, true) => CCase::NonzeroEven,
            (false, false) => CCase::NonzeroOdd,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningSet {
    pub c: Elem,
    /// Ascending by encoding.
    pub elements: Vec<Elem>,
}

impl DefiningSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub fn build_defining_set(tower: &Tower, c: Elem) -> Result<DefiningSet> {
    if !tower.contains(c, Level::Q) {
        return Err(Error::NotInLevel {
            encoding: c.0,
            level: Level::Q,
        });
    }
    let target = tower.neg(c);
    let mut elements: Vec<Elem> = (1..tower.size())
        .map(Elem)
        .filter(|&x| {
            tower
                .trace(tower.norm_qm_qs(x), Level::Qs, Level::Q)
                .map(|t| t == target)
                .unwrap_or(false)
        })
        .collect();
    elements.sort_unstable();
    Ok(DefiningSet { c, elements })
}

/// Closed-form code length.
pub fn length_closed(q: u64, s: u32, c_is_zero: bool) -> u64 {
    let qs = q.pow(s);
    let qs1 = q.pow(s - 1);
    if c_is_zero {
        (qs + 1) * (qs1 - 1)
    } else {
        qs1 * (qs + 1)
    }
}

/// Counts `A_0..A_n` of a linear code of length `n` and dimension `k` over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub n: usize,
    pub q: u64,
    pub k: usize,
    pub counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn from_u64(n: usize, q: u64, k: usize, counts: &[u64]) -> Self {
        WeightDistribution {
            n,
            q,
            k,
            counts: counts.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    /// Checks `A_0 = 1` and `Σ A_i = q^k`.
    pub fn validate(&self) -> Result<()> {
        if self.counts.len() != self.n + 1 {
            return Err(Error::InconsistentDistribution(format!(
                "{} counts for length {}",
                self.counts.len(),
                self.n
            )));
        }
        if !self.counts[0].is_one() {
            return Err(Error::InconsistentDistribution(format!(
                "A_0 = {}",
                self.counts[0]
            )));
        }
        let total: BigUint = self.counts.iter().sum();
        let expect = BigUint::from(self.q).pow(self.k as u32);
        if total != expect {
            return Err(Error::InconsistentDistribution(format!(
                "counts sum to {total}, expected {expect}"
            )));
        }
        Ok(())
    }

    /// `(w, A_w)` for every `w ≥ 1` with `A_w > 0`.
    pub fn nonzero_weights(&self) -> Vec<(usize, BigUint)> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w, c.clone()))
            .collect()
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.counts.iter().skip(1).position(|c| !c.is_zero()).map(|i| i + 1)
    }

    pub fn count(&self, w: usize) -> BigUint {
        self.counts.get(w).cloned().unwrap_or_default()
    }

    /// `Σ_j j^t·A_j`.
    pub fn power_sum(&self, t: u32) -> BigUint {
        self.counts
            .iter()
            .enumerate()
            .map(|(j, c)| BigUint::from(j).pow(t) * c)
            .sum()
    }
}

/// The closed-form weight distribution for the three families.
pub fn theorem7_distribution(q: u64, s: u32, case: CCase) -> Result<WeightDistribution> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be positive".into()));
    }
    match case {
        CCase::Zero if s == 1 => return Err(Error::EmptyDefiningSet),
        CCase::NonzeroEven if q % 2 != 0 => {
            return Err(Error::OutsideTheorem(format!("q = {q} is odd")))
        }
        CCase::NonzeroOdd if q % 2 == 0 => {
            return Err(Error::OutsideTheorem(format!("q = {q} is even")))
        }
        _ => {}
    }
    let qs = q.pow(s);
    let qs1 = q.pow(s - 1);
    let base = q.pow(2 * s - 2) * (q - 1);
    let (n, classes) = match case {
        CCase::Zero => (
            length_closed(q, s, true),
            [
                ((q.pow(2 * s - 2) - qs1) * (q - 1), (qs + 1) * (qs - qs1)),
                (base, (qs + 1) * (qs1 - 1)),
            ],
        ),
        CCase::NonzeroEven => (
            length_closed(q, s, false),
            [
                (base, (qs + 1) * (qs1 - 1)),
                (base + qs1, (qs + 1) * (qs - qs1)),
            ],
        ),
        CCase::NonzeroOdd => (
            length_closed(q, s, false),
            [
                (base, (qs + 1) * (qs + qs1 - 2) / 2),
                (base + 2 * qs1, qs1 * (q - 1) * (qs + 1) / 2),
            ],
        ),
    };
    let mut counts = vec![0u64; n as usize + 1];
    counts[0] = 1;
    for (w, a) in classes {
        counts[w as usize] += a;
    }
    Ok(WeightDistribution::from_u64(
        n as usize,
        q,
        2 * s as usize,
        &counts,
    ))
}

/// `w_min / w_max` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Ratio {
        let g = num.gcd(&den).max(1);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Minimality {
    pub holds: bool,
    pub ratio: Ratio,
}

/// The sufficient condition `w_min / w_max > (q-1)/q` for minimality.
pub fn minimality_check(dist: &WeightDistribution) -> Result<Minimality> {
    let weights = dist.nonzero_weights();
    let (Some(first), Some(last)) = (weights.first(), weights.last()) else {
        return Err(Error::InconsistentDistribution("zero code".into()));
    };
    let (wmin, wmax) = (first.0 as u64, last.0 as u64);
    let q = dist.q;
    Ok(Minimality {
        holds: (wmin as u128) * (q as u128) > (wmax as u128) * (q as u128 - 1),
        ratio: Ratio::new(wmin, wmax),
    })
}

/// The code `C_D` together with its generator matrix.
#[derive(Clone, Debug)]
pub struct TraceCode {
    tower: Arc<Tower>,
    defining_set: DefiningSet,
    basis: Vec<Elem>,
    generator: Vec<Vec<u32>>,
}

impl TraceCode {
    pub fn new(tower: Arc<Tower>, c: Elem) -> Result<TraceCode> {
        let defining_set = build_defining_set(&tower, c)?;
        Self::from_defining_set(tower, defining_set)
    }

    /// Builds the code for the `F_q` element with the given canonical index.
    pub fn from_c_index(tower: Arc<Tower>, c_index: usize) -> Result<TraceCode> {
        let q = tower.q() as usize;
        if c_index >= q {
            return Err(Error::InvalidParameter(format!(
                "c index {c_index} out of range 0..{q}"
            )));
        }
        let c = tower.element_at(c_index, Level::Q);
        Self::new(tower, c)
    }

    pub fn from_defining_set(tower: Arc<Tower>, defining_set: DefiningSet) -> Result<TraceCode> {
        if defining_set.is_empty() {
            return Err(Error::EmptyDefiningSet);
        }
        let g = tower.generator();
        let basis: Vec<Elem> = (0..tower.m() as u64).map(|i| tower.pow(g, i)).collect();
        let mut code = TraceCode {
            tower,
            defining_set,
            basis,
            generator: Vec::new(),
        };
        let rows = code
            .basis
            .iter()
            .map(|&b| code.codeword(b))
            .collect::<Result<Vec<_>>>()?;
        code.generator = rows;
        Ok(code)
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining_set
    }

    pub fn basis(&self) -> &[Elem] {
        &self.basis
    }

    pub fn n(&self) -> usize {
        self.defining_set.len()
    }

    pub fn k(&self) -> usize {
        self.basis.len()
    }

    pub fn q(&self) -> u64 {
        self.tower.q()
    }

    pub fn case(&self) -> CCase {
        CCase::classify(self.q(), self.defining_set.c.is_zero())
    }

    /// Rows are basis elements, entries are `F_q` canonical indices.
    pub fn generator_matrix(&self) -> &[Vec<u32>] {
        &self.generator
    }

    /// `(Tr_{q^m/q}(b·d_j))_j` as `F_q` canonical indices.
    pub fn codeword(&self, b: Elem) -> Result<Vec<u32>> {
        let t = &self.tower;
        self.defining_set
            .elements
            .iter()
            .map(|&d| {
                let tr = t.trace(t.mul(b, d), Level::Qm, Level::Q)?;
                Ok(t.canonical_index(tr, Level::Q)? as u32)
            })
            .collect()
    }

    /// Exhaustive weight distribution over all `q^m` codewords.
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        let t = &self.tower;
        let nonzero: Vec<bool> = t
            .trace_index_table(Level::Qm, Level::Q)?
            .into_iter()
            .map(|i| i != 0)
            .collect();
        let order = t.size() as u64 - 1;
        let antilog = t.antilog_table();
        let logs: Vec<u64> = self
            .defining_set
            .elements
            .iter()
            .map(|&d| t.log(d).expect("0 is never in D") as u64)
            .collect();
        let n = self.n();
        let mut hist = (1..t.size())
            .into_par_iter()
            .fold(
                || vec![0u64; n + 1],
                |mut h, b| {
                    let lb = t.log(Elem(b)).unwrap() as u64;
                    let w = logs
                        .iter()
                        .filter(|&&ld| nonzero[antilog[((lb + ld) % order) as usize] as usize])
                        .count();
                    h[w] += 1;
                    h
                },
            )
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        hist[0] += 1;
        let dist = WeightDistribution::from_u64(n, t.q(), self.k(), &hist);
        dist.validate()?;
        Ok(dist)
    }

    /// Rank of the generator matrix over `F_q`.
    pub fn rank(&self) -> usize {
        let t = &self.tower;
        let mut rows: Vec<Vec<Elem>> = self
            .generator
            .iter()
            .map(|r| r.iter().map(|&i| t.element_at(i as usize, Level::Q)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.n() {
            let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = t.inv(rows[rank][col]).expect("nonzero pivot");
            let pivot_row: Vec<Elem> = rows[rank].iter().map(|&x| t.mul(x, inv)).collect();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == rank || row[col].is_zero() {
                    continue;
                }
                let f = row[col];
                for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                    *x = t.sub(*x, t.mul(f, pv));
                }
            }
            rows[rank] = pivot_row;
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Generator-matrix column `j` as `F_q` elements.
    pub fn column(&self, j: usize) -> Vec<Elem> {
        self.generator
            .iter()
            .map(|row| self.tower.element_at(row[j] as usize, Level::Q))
            .collect()
    }

    /// Column scaled so its first nonzero entry is 1; `None` for a zero column.
    pub(crate) fn normalized_column(&self, j: usize) -> Option<Vec<Elem>> {
        let t = &self.tower;
        let col = self.column(j);
        let lead = *col.iter().find(|x| !x.is_zero())?;
        let inv = t.inv(lead).ok()?;
        Some(col.into_iter().map(|x| t.mul(x, inv)).collect())
    }

    /// No zero column and no two proportional columns.
    pub fn is_projective(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.n());
        (0..self.n()).all(|j| match self.normalized_column(j) {
            Some(c) => seen.insert(c),
            None => false,
        })
    }

    /// Text export: header `p e s c n`, then one encoding per line.
    pub fn defining_set_text(&self, c_index: usize) -> String {
        let t = &self.tower;
        let mut out = format!("{} {} {} {} {}\n", t.p(), t.e(), t.s(), c_index, self.n());
        for d in &self.defining_set.elements {
            let _ = writeln!(out, "{}", d.0);
        }
        out
    }

    /// Text export: `k` rows of `n` space-separated symbol indices.
    pub fn generator_matrix_text(&self) -> String {
        let mut out = String::new();
        for row in &self.generator {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Converts a count known to be small.
pub(crate) fn small(v: &BigUint) -> u64 {
    v.to_u64().expect("count fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_tower;

    fn code(p: u32, e: u32, s: u32, c_index: usize) -> TraceCode {
        TraceCode::from_c_index(Arc::new(build_tower(p, e, s).unwrap()), c_index).unwrap()
    }

    fn support(d: &WeightDistribution) -> Vec<(usize, u64)> {
        d.nonzero_weights()
            .into_iter()
            .map(|(w, c)| (w, small(&c)))
            .collect()
    }

    #[test]
    fn defining_set_q2_s2_c0_is_fifth_roots() {
        let t = build_tower(2, 1, 2).unwrap();
        let d = build_defining_set(&t, Elem::ZERO).unwrap();
        assert_eq!(d.len(), 5);
        for x in &d.elements {
            assert_eq!(t.pow(*x, 5), Elem::ONE);
        }
        assert!(d.elements.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn defining_set_sizes() {
        let t = build_tower(2, 2, 1).unwrap();
        assert_eq!(build_defining_set(&t, Elem::ONE).unwrap().len(), 5);
        let t = build_tower(2, 1, 2).unwrap();
        assert_eq!(build_defining_set(&t, Elem::ONE).unwrap().len(), 10);
        assert!(build_defining_set(&t, Elem(2)).is_err());
    }

    #[test]
    fn length_formula() {
        assert_eq!(length_closed(2, 3, true), 27);
        assert_eq!(length_closed(9, 1, false), 10);
        assert_eq!(length_closed(4, 2, false), 68);
    }

    #[test]
    fn empty_set_rejected() {
        let t = Arc::new(build_tower(2, 1, 1).unwrap());
        assert!(matches!(
            TraceCode::new(t, Elem::ZERO),
            Err(Error::EmptyDefiningSet)
        ));
        assert!(matches!(
            theorem7_distribution(3, 1, CCase::Zero),
            Err(Error::EmptyDefiningSet)
        ));
    }

    #[test]
    fn generator_matrices_have_full_rank() {
        let c = code(2, 1, 2, 0);
        assert_eq!((c.k(), c.n()), (4, 5));
        assert_eq!(c.rank(), 4);
        let c = code(2, 1, 2, 1);
        assert_eq!((c.k(), c.n()), (4, 10));
        assert_eq!(c.rank(), 4);
        assert_eq!(code(3, 1, 2, 1).rank(), 4);
    }

    #[test]
    fn codeword_examples() {
        let c = code(2, 1, 2, 0);
        assert!(c.codeword(Elem::ZERO).unwrap().iter().all(|&x| x == 0));
        let t = c.tower().clone();
        for b in 1..16 {
            let b = Elem(b);
            let tr = t.trace(t.norm_qm_qs(b), Level::Qs, Level::Q).unwrap();
            let w = c.codeword(b).unwrap().iter().filter(|&&x| x != 0).count();
            if !tr.is_zero() {
                assert_eq!(w, 2);
            }
        }
    }

    #[test]
    fn enumerated_distributions() {
        assert_eq!(support(&code(2, 1, 2, 0).weight_distribution().unwrap()), vec![(2, 10), (4, 5)]);
        assert_eq!(support(&code(2, 1, 3, 0).weight_distribution().unwrap()), vec![(12, 36), (16, 27)]);
        assert_eq!(support(&code(3, 1, 2, 1).weight_distribution().unwrap()), vec![(18, 50), (24, 30)]);
    }

    #[test]
    fn enumeration_matches_codeword_weights() {
        let c = code(3, 1, 1, 2);
        let mut counts = vec![0u64; c.n() + 1];
        for b in 0..c.tower().size() {
            let w = c.codeword(Elem(b)).unwrap().iter().filter(|&&x| x != 0).count();
            counts[w] += 1;
        }
        let d = c.weight_distribution().unwrap();
        assert_eq!(d, WeightDistribution::from_u64(c.n(), 3, 2, &counts));
    }

    #[test]
    fn closed_form_distributions() {
        let d = theorem7_distribution(2, 2, CCase::Zero).unwrap();
        assert_eq!(support(&d), vec![(2, 10), (4, 5)]);
        let d = theorem7_distribution(3, 2, CCase::NonzeroOdd).unwrap();
        assert_eq!(support(&d), vec![(18, 50), (24, 30)]);
        let d = theorem7_distribution(4, 1, CCase::NonzeroEven).unwrap();
        assert_eq!(support(&d), vec![(4, 15)]);
        d.validate().unwrap();
        assert!(theorem7_distribution(3, 2, CCase::NonzeroEven).is_err());
        assert!(theorem7_distribution(4, 2, CCase::NonzeroOdd).is_err());
    }

    #[test]
    fn projectivity() {
        assert!(code(2, 1, 2, 1).is_projective());
        assert!(!code(3, 1, 2, 1).is_projective());
        assert!(!code(2, 2, 2, 0).is_projective());
    }

    #[test]
    fn minimality_examples() {
        let m = minimality_check(&theorem7_distribution(2, 3, CCase::Zero).unwrap()).unwrap();
        assert!(m.holds);
        assert_eq!(m.ratio, Ratio::new(12, 16));
        let m = minimality_check(&theorem7_distribution(2, 2, CCase::Zero).unwrap()).unwrap();
        assert!(!m.holds);
        assert_eq!(m.ratio, Ratio { num: 1, den: 2 });
        let m = minimality_check(&code(2, 1, 2, 1).weight_distribution().unwrap()).unwrap();
        assert!(m.holds);
        assert_eq!(m.ratio, Ratio::new(4, 6));
        let zero = WeightDistribution::from_u64(3, 2, 0, &[1, 0, 0, 0]);
        assert!(minimality_check(&zero).is_err());
    }

    #[test]
    fn validate_catches_bad_counts() {
        let bad = WeightDistribution::from_u64(2, 2, 1, &[1, 0, 0]);
        assert!(bad.validate().is_err());
        let bad = WeightDistribution::from_u64(2, 2, 1, &[0, 1, 1]);
        assert!(bad.validate().is_err());
    }

    #[test]
    fn exports() {
        let c = code(2, 1, 2, 0);
        let text = c.defining_set_text(0);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("2 1 2 0 5"));
        assert_eq!(lines.count(), 5);
        let m = c.generator_matrix_text();
        assert_eq!(m.lines().count(), 4);
        assert!(m.lines().all(|l| l.split(' ').count() == 5));
    }
}
