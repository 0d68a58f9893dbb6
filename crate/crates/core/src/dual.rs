//! Dual weight distributions through the MacWilliams transform, the dual
//! distance and low-weight counts in closed form, and power-moment identities.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::code::{CCase, WeightDistribution};
use crate::error::{Error, Result};

/// `Σ_i A_i·K_j(i)` for every `j`, where `K_j` are the `q`-ary Krawtchouk
/// polynomials of length `n`, evaluated with the three-term recurrence in `j`.
fn krawtchouk_sums(dist: &WeightDistribution) -> Vec<BigInt> {
    let n = dist.n as i64;
    let q = BigInt::from(dist.q);
    let q1 = BigInt::from(dist.q - 1);
    let mut out = vec![BigInt::zero(); dist.n + 1];
    for (i, a) in dist.counts.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let a = BigInt::from_biguint(Sign::Plus, a.clone());
        let qi = &q * i as i64;
        let mut prev = BigInt::zero();
        let mut cur = BigInt::from(1);
        for (j, slot) in out.iter_mut().enumerate() {
            *slot += &a * &cur;
            let jj = j as i64;
            let next = ((BigInt::from(n - jj) * &q1 + jj - &qi) * &cur
                - &q1 * (n - jj + 1) * &prev)
                / (jj + 1);
            prev = cur;
            cur = next;
        }
    }
    out
}

/// Dual distribution `A_j⊥ = q^{-k} Σ_i A_i K_j(i)`, exact.
pub fn macwilliams_dual(dist: &WeightDistribution) -> Result<WeightDistribution> {
    dist.validate()?;
    let scale = BigInt::from(dist.q).pow(dist.k as u32);
    let counts = krawtchouk_sums(dist)
        .into_iter()
        .enumerate()
        .map(|(j, v)| {
            let (quot, rem) = v.div_rem(&scale);
            if !rem.is_zero() {
                return Err(Error::InconsistentDistribution(format!(
                    "dual coefficient {j} is not an integer"
                )));
            }
            if quot.is_negative() {
                return Err(Error::InconsistentDistribution(format!(
                    "dual coefficient {j} is negative"
                )));
            }
            Ok(quot.to_biguint().expect("nonnegative"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightDistribution {
        n: dist.n,
        q: dist.q,
        k: dist.n - dist.k,
        counts,
    })
}

/// `[n, n−m, d⊥]` of the dual code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualParams {
    pub n: u64,
    pub k: u64,
    pub d: u64,
}

pub fn theorem8_dual_params(q: u64, s: u32, case: CCase) -> Result<DualParams> {
    let d = match case {
        CCase::Zero if q == 2 && s >= 3 => 3,
        CCase::Zero if q > 2 && s > 1 => 2,
        CCase::Zero => {
            return Err(Error::OutsideTheorem(format!(
                "c = 0 with q = {q}, s = {s} has no dual-distance claim"
            )))
        }
        CCase::NonzeroEven if q % 2 == 0 => 3,
        CCase::NonzeroOdd if q % 2 == 1 => 2,
        _ => return Err(Error::OutsideTheorem(format!("q = {q} does not match {case:?}"))),
    };
    let n = crate::code::length_closed(q, s, case == CCase::Zero);
    Ok(DualParams {
        n,
        k: n - 2 * s as u64,
        d,
    })
}

/// Closed forms for `A2⊥` and, where available, `A3⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowWeight {
    pub a2: BigUint,
    pub a3: Option<BigUint>,
}

pub fn dual_low_weight_closed(q: u64, s: u32, case: CCase) -> Result<LowWeight> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be positive".into()));
    }
    let big = |v: i128| -> Result<BigUint> {
        BigUint::try_from(v).map_err(|_| Error::OutsideTheorem(format!("negative count {v}")))
    };
    let qi = q as i128;
    let qs = qi.pow(s);
    let qs1 = qi.pow(s - 1);
    match case {
        CCase::Zero => {
            if s == 1 {
                return Err(Error::EmptyDefiningSet);
            }
            let a2 = (qi - 1) * (qi - 2) * (qs + 1) * (qs1 - 1) / 2;
            let a3 = if q == 2 {
                let t = 2i128.pow(3 * s - 4) * (qs - 3) - 2i128.pow(s - 2) * (2 * qs - 3) + 1;
                Some(big(t / 3)?)
            } else {
                None
            };
            Ok(LowWeight { a2: big(a2)?, a3 })
        }
        CCase::NonzeroEven if q % 2 == 0 => {
            let inner = qs1 * (2 * qi - 3) + qi.pow(2 * s - 2) * (qi - 1).pow(2) + 2 - qi;
            let a3 = qs1 * (qs + 1) * (qi - 1) * inner / 6;
            Ok(LowWeight {
                a2: BigUint::zero(),
                a3: Some(big(a3)?),
            })
        }
        CCase::NonzeroOdd if q % 2 == 1 => Ok(LowWeight {
            a2: big(qs1 * (qi - 1) * (qs + 1) / 2)?,
            a3: None,
        }),
        _ => Err(Error::OutsideTheorem(format!("q = {q} does not match {case:?}"))),
    }
}

/// One power-moment identity evaluated on both sides, scaled to avoid
/// fractional powers of `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentCheck {
    pub name: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl MomentCheck {
    fn new(name: &'static str, lhs: BigInt, rhs: BigInt) -> MomentCheck {
        MomentCheck {
            name,
            holds: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

fn signed(v: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, v.clone())
}

/// Identities the code must satisfy given its dual's low-weight counts.
/// Each check is included only when its hypotheses on `A1⊥`, `A2⊥` hold.
pub fn pless_moment_check(
    dist: &WeightDistribution,
    dual: &WeightDistribution,
) -> Vec<MomentCheck> {
    moment_checks(dist, dual, false)
}

/// The same identities with the sign of the `A2⊥` term flipped in the second
/// moment and `n³` in place of `n²` in the binary third moment. Reported for
/// comparison; these are expected to fail whenever the extra term is nonzero.
pub fn variant_moment_check(
    dist: &WeightDistribution,
    dual: &WeightDistribution,
) -> Vec<MomentCheck> {
    moment_checks(dist, dual, true)
}

fn moment_checks(dist: &WeightDistribution, dual: &WeightDistribution, variant: bool) -> Vec<MomentCheck> {
    let mut out = Vec::new();
    let a1 = dual.count(1);
    let a2 = signed(&dual.count(2));
    let a3 = signed(&dual.count(3));
    if !a1.is_zero() {
        return out;
    }
    let q = BigInt::from(dist.q);
    let n = BigInt::from(dist.n);
    let one = BigInt::from(1);
    let qk = q.pow(dist.k as u32);
    let q1 = &q - &one;

    if !variant {
        let lhs = &q * signed(&dist.power_sum(1));
        let rhs = &qk * &q1 * &n;
        out.push(MomentCheck::new("first", lhs, rhs));
    }

    let two_a2 = BigInt::from(2) * &a2;
    let bracket = &q1 * &n * (&q * &n - &n + &one);
    let rhs = if variant {
        &qk * (&bracket - &two_a2)
    } else {
        &qk * (&bracket + &two_a2)
    };
    let lhs = q.pow(2) * signed(&dist.power_sum(2));
    out.push(MomentCheck::new(
        if variant { "second-minus" } else { "second" },
        lhs,
        rhs,
    ));

    if !a2.is_zero() {
        return out;
    }
    let six_a3 = BigInt::from(6) * &a3;
    let lhs3 = q.pow(3) * signed(&dist.power_sum(3));
    if dist.q == 2 {
        let lead = if variant { n.pow(3) } else { n.pow(2) };
        let rhs = &qk * (lead * (&n + 3) - &six_a3);
        out.push(MomentCheck::new(
            if variant { "third-binary-cubic" } else { "third-binary" },
            lhs3.clone(),
            rhs,
        ));
    }
    if !variant {
        let n2 = n.pow(2);
        let poly = q.pow(2) * &n2 - BigInt::from(2) * &q * &n2 + BigInt::from(3) * &q * &n - &q
            + &n2
            - BigInt::from(3) * &n
            + 2;
        let rhs = &qk * (&q1 * &n * poly - &six_a3);
        out.push(MomentCheck::new("third", lhs3, rhs));
    }
    out
}

/// Everything computed about the dual of one code.
#[derive(Clone, Debug, Serialize)]
pub struct DualReport {
    pub n: usize,
    pub k_dual: usize,
    pub d_dual: usize,
    pub d_theorem8: Option<u64>,
    pub d_match: Option<bool>,
    pub a2: String,
    pub a3: String,
    pub a2_closed: Option<String>,
    pub a3_closed: Option<String>,
    pub closed_match: bool,
    pub moment_checks: Vec<MomentCheck>,
    pub variant_forms: Vec<MomentCheck>,
    #[serde(skip)]
    pub dual_counts: WeightDistribution,
}

impl DualReport {
    pub fn passed(&self) -> bool {
        self.d_match.unwrap_or(true)
            && self.closed_match
            && self.moment_checks.iter().all(|m| m.holds)
    }
}

pub fn analyze_dual(dist: &WeightDistribution, s: u32, case: CCase) -> Result<DualReport> {
    let dual = macwilliams_dual(dist)?;
    let d_dual = dual
        .min_distance()
        .ok_or_else(|| Error::InconsistentDistribution("dual code is zero".into()))?;
    let d_theorem8 = match theorem8_dual_params(dist.q, s, case) {
        Ok(p) => Some(p.d),
        Err(Error::OutsideTheorem(_)) => None,
        Err(e) => return Err(e),
    };
    let closed = match dual_low_weight_closed(dist.q, s, case) {
        Ok(l) => Some(l),
        Err(Error::OutsideTheorem(_)) => None,
        Err(e) => return Err(e),
    };
    let a2 = dual.count(2);
    let a3 = dual.count(3);
    let closed_match = closed
        .as_ref()
        .map(|l| l.a2 == a2 && l.a3.as_ref().map_or(true, |c| *c == a3))
        .unwrap_or(true);
    Ok(DualReport {
        n: dual.n,
        k_dual: dual.k,
        d_dual,
        d_theorem8,
        d_match: d_theorem8.map(|d| d == d_dual as u64),
        a2: a2.to_string(),
        a3: a3.to_string(),
        a2_closed: closed.as_ref().map(|l| l.a2.to_string()),
        a3_closed: closed.as_ref().and_then(|l| l.a3.as_ref().map(|v| v.to_string())),
        closed_match,
        moment_checks: pless_moment_check(dist, &dual),
        variant_forms: variant_moment_check(dist, &dual),
        dual_counts: dual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{small, theorem7_distribution};

    fn wd(n: usize, q: u64, k: usize, pairs: &[(usize, u64)]) -> WeightDistribution {
        let mut c = vec![0u64; n + 1];
        for &(w, a) in pairs {
            c[w] = a;
        }
        WeightDistribution::from_u64(n, q, k, &c)
    }

    #[test]
    fn even_weight_code_has_repetition_dual() {
        let d = macwilliams_dual(&wd(5, 2, 4, &[(0, 1), (2, 10), (4, 5)])).unwrap();
        assert_eq!(d, wd(5, 2, 1, &[(0, 1), (5, 1)]));
    }

    #[test]
    fn full_space_has_zero_dual() {
        // [3,3] over F_3: A_w = C(3,w)·2^w
        let d = macwilliams_dual(&wd(3, 3, 3, &[(0, 1), (1, 6), (2, 12), (3, 8)])).unwrap();
        assert_eq!(d, wd(3, 3, 0, &[(0, 1)]));
    }

    #[test]
    fn transform_is_an_involution() {
        let c = theorem7_distribution(3, 2, CCase::NonzeroOdd).unwrap();
        let back = macwilliams_dual(&macwilliams_dual(&c).unwrap()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn non_integral_input_rejected() {
        // consistent totals, but not the distribution of any linear code
        let bad = wd(3, 2, 2, &[(0, 1), (1, 3)]);
        assert!(macwilliams_dual(&bad).is_err());
    }

    #[test]
    fn q2_s2_c1_dual() {
        let c = theorem7_distribution(2, 2, CCase::NonzeroEven).unwrap();
        let d = macwilliams_dual(&c).unwrap();
        assert_eq!(d.min_distance(), Some(3));
        assert_eq!(small(&d.count(3)), 10);
    }

    #[test]
    fn theorem8_cases() {
        let p = theorem8_dual_params(2, 3, CCase::Zero).unwrap();
        assert_eq!((p.n, p.k, p.d), (27, 21, 3));
        let p = theorem8_dual_params(4, 2, CCase::Zero).unwrap();
        assert_eq!((p.n, p.k, p.d), (51, 47, 2));
        let p = theorem8_dual_params(3, 2, CCase::NonzeroOdd).unwrap();
        assert_eq!((p.n, p.k, p.d), (30, 26, 2));
        assert!(theorem8_dual_params(2, 2, CCase::Zero).is_err());
        assert!(theorem8_dual_params(3, 2, CCase::NonzeroEven).is_err());
    }

    #[test]
    fn low_weight_closed_forms() {
        let l = dual_low_weight_closed(3, 2, CCase::Zero).unwrap();
        assert_eq!(small(&l.a2), 20);
        let l = dual_low_weight_closed(2, 3, CCase::Zero).unwrap();
        assert_eq!(small(&l.a3.unwrap()), 45);
        let l = dual_low_weight_closed(2, 2, CCase::NonzeroEven).unwrap();
        assert_eq!((small(&l.a2), small(&l.a3.unwrap())), (0, 10));
        let l = dual_low_weight_closed(4, 1, CCase::NonzeroEven).unwrap();
        assert_eq!(small(&l.a3.unwrap()), 30);
        assert!(dual_low_weight_closed(2, 2, CCase::NonzeroOdd).is_err());
    }

    #[test]
    fn second_moment_needs_plus_sign() {
        let c = theorem7_distribution(3, 2, CCase::NonzeroOdd).unwrap();
        assert_eq!(c.power_sum(2), BigUint::from(33480u32));
        let d = macwilliams_dual(&c).unwrap();
        let checks = pless_moment_check(&c, &d);
        assert!(checks.iter().all(|m| m.holds), "{checks:?}");
        let second = variant_moment_check(&c, &d);
        assert_eq!(second[0].name, "second-minus");
        assert!(!second[0].holds);
    }

    #[test]
    fn third_moments() {
        let c = theorem7_distribution(2, 2, CCase::NonzeroEven).unwrap();
        assert_eq!(c.power_sum(3), BigUint::from(2480u32));
        let d = macwilliams_dual(&c).unwrap();
        let names: Vec<_> = pless_moment_check(&c, &d).iter().map(|m| (m.name, m.holds)).collect();
        assert_eq!(
            names,
            vec![("first", true), ("second", true), ("third-binary", true), ("third", true)]
        );
        let c = theorem7_distribution(2, 3, CCase::Zero).unwrap();
        let d = macwilliams_dual(&c).unwrap();
        let v = variant_moment_check(&c, &d);
        assert!(v.iter().any(|m| m.name == "third-binary-cubic" && !m.holds));
    }

    #[test]
    fn small_binary_moments() {
        let c = wd(5, 2, 4, &[(0, 1), (2, 10), (4, 5)]);
        assert_eq!(c.power_sum(2), BigUint::from(120u32));
    }

    #[test]
    fn report_outside_theorem() {
        let c = theorem7_distribution(2, 2, CCase::Zero).unwrap();
        let r = analyze_dual(&c, 2, CCase::Zero).unwrap();
        assert_eq!(r.d_dual, 5);
        assert_eq!(r.d_theorem8, None);
        assert!(r.passed());
    }
}
