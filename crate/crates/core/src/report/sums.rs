//! Brute-force vs closed-form comparison for every character-sum identity,
//! with counterexample dumps.

use rayon::prelude::*;
use serde::Serialize;

use crate::charsums::{
    gauss_sum_quadratic, lemma1_closed, quadratic_char, quadratic_poly_closed,
    quadratic_poly_sum, SumContext,
};
use crate::cyclo::CycVec;
use crate::error::Result;
use crate::field::{Elem, Level, Tower};

/// Ambient sizes up to this get every `a ∈ F*_{q^s}` in the `Δ` check.
pub const EXHAUSTIVE_A_LIMIT: u32 = 256;
/// Ambient sizes up to this get every `b`; larger ones a fixed sample.
pub const EXHAUSTIVE_B_LIMIT: u32 = 4096;
/// Number of sampled `b` above [`EXHAUSTIVE_B_LIMIT`].
pub const B_SAMPLE: u64 = 512;
/// Largest level size for the quadratic-polynomial sums.
pub const QUADRATIC_SUM_LIMIT: u64 = 64;
/// Largest odd level size for the Gauss-sum checks.
pub const GAUSS_LIMIT: u64 = 343;
/// At most this many counterexamples are kept per identity.
pub const DUMP_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Inputs as encodings, in the identity's argument order.
    pub inputs: Vec<u32>,
    pub bruteforce: String,
    pub closed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub name: String,
    pub cases: u64,
    pub mismatches: u64,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl IdentityResult {
    fn new(name: impl Into<String>, cases: u64, bad: Vec<Counterexample>) -> Self {
        let mismatches = bad.len() as u64;
        IdentityResult {
            name: name.into(),
            cases,
            mismatches,
            passed: mismatches == 0,
            counterexamples: bad.into_iter().take(DUMP_LIMIT).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharsumReport {
    pub p: u32,
    pub e: u32,
    pub s: u32,
    pub q: u64,
    pub ambient: u32,
    pub b_sampled: bool,
    pub identities: Vec<IdentityResult>,
    pub passed: bool,
}

fn level_name(level: Level) -> &'static str {
    match level {
        Level::Prime => "p",
        Level::Q => "q",
        Level::Qs => "q^s",
        Level::Qm => "q^m",
    }
}

/// The `b` values used for the ambient-field sums.
pub fn b_values(tower: &Tower) -> (Vec<Elem>, bool) {
    let size = tower.size();
    if size <= EXHAUSTIVE_B_LIMIT {
        return ((0..size).map(Elem).collect(), false);
    }
    let order = size as u64 - 1;
    let stride = order / B_SAMPLE;
    let mut out: Vec<Elem> = std::iter::once(Elem::ZERO)
        .chain((0..B_SAMPLE).map(|i| tower.exp(i * stride)))
        .collect();
    out.sort_unstable();
    out.dedup();
    (out, true)
}

/// `G² = η(−1)·|level|` exactly, and `|G|`, `arg G` against the closed form.
pub fn gauss_checks(tower: &Tower, level: Level) -> Result<Vec<IdentityResult>> {
    let size = tower.level_size(level);
    let name = level_name(level);
    let g = gauss_sum_quadratic(tower, level)?;
    let eta = quadratic_char(tower, tower.neg(Elem::ONE), level)?;
    let want = CycVec::integer(tower.p(), eta * size as i64);
    let square = g.mul(&g)?;
    let bad = if square == want {
        vec![]
    } else {
        vec![Counterexample {
            inputs: vec![],
            bruteforce: square.to_string(),
            closed: want.to_string(),
        }]
    };
    let exact = IdentityResult::new(format!("gauss-square[{name}]"), 1, bad);

    let (re, im) = g.to_complex();
    let (cre, cim) = lemma1_closed(tower.p() as u64, tower.degree(level))?;
    let tol = 1e-9 * (size as f64).sqrt();
    let bad = if (re - cre).abs() <= tol && (im - cim).abs() <= tol {
        vec![]
    } else {
        vec![Counterexample {
            inputs: vec![],
            bruteforce: format!("{re:.12} + {im:.12}i"),
            closed: format!("{cre:.12} + {cim:.12}i"),
        }]
    };
    let numeric = IdentityResult::new(format!("gauss-closed[{name}]"), 1, bad);
    Ok(vec![exact, numeric])
}

/// Every `(a2, a1, a0)` with `a2 ≠ 0` over the level, for `b = 1` and `b` a generator.
pub fn quadratic_sum_check(tower: &Tower, level: Level) -> Result<IdentityResult> {
    let elems = tower.subfield_elements(level);
    let mut bs = vec![Elem::ONE, tower.level_generator(level)];
    bs.dedup();
    let triples: Vec<(Elem, Elem, Elem, Elem)> = bs
        .iter()
        .flat_map(|&b| {
            let elems = &elems;
            elems[1..].iter().flat_map(move |&a2| {
                elems
                    .iter()
                    .flat_map(move |&a1| elems.iter().map(move |&a0| (a2, a1, a0, b)))
            })
        })
        .collect();
    let bad = triples
        .par_iter()
        .map(|&(a2, a1, a0, b)| -> Result<Option<Counterexample>> {
            let lhs = quadratic_poly_sum(tower, a2, a1, a0, b, level)?;
            let rhs = quadratic_poly_closed(tower, a2, a1, a0, b, level)?;
            Ok((lhs != rhs).then(|| Counterexample {
                inputs: vec![a2.0, a1.0, a0.0, b.0],
                bruteforce: lhs.to_string(),
                closed: rhs.to_string(),
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(IdentityResult::new(
        format!("quadratic-sum[{}]", level_name(level)),
        triples.len() as u64,
        bad,
    ))
}

/// `Δ(a, b, c)` brute force against its closed form.
pub fn delta_check(ctx: &SumContext<'_>, all_a: bool, bs: &[Elem]) -> Result<IdentityResult> {
    let tower = ctx.tower();
    let a_values: Vec<Elem> = if all_a {
        tower.subfield_elements(Level::Qs)[1..].to_vec()
    } else {
        vec![Elem::ONE]
    };
    let qe = tower.q_elements();
    let pairs: Vec<(Elem, Elem)> = a_values
        .iter()
        .flat_map(|&a| bs.iter().map(move |&b| (a, b)))
        .collect();
    let bad = pairs
        .par_iter()
        .map(|&(a, b)| -> Result<Vec<Counterexample>> {
            let row = ctx.delta_bruteforce_row(a, b)?;
            let mut out = Vec::new();
            for (&c, &bf) in qe.iter().zip(&row) {
                let closed = ctx.delta_closed(a, b, c)?;
                if bf != closed {
                    out.push(Counterexample {
                        inputs: vec![a.0, b.0, c.0],
                        bruteforce: bf.to_string(),
                        closed: closed.to_string(),
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(IdentityResult::new(
        "delta",
        pairs.len() as u64 * qe.len() as u64,
        bad,
    ))
}

/// `S_c(b)` brute force against its closed form, for every `c`.
pub fn s_c_check(ctx: &SumContext<'_>, bs: &[Elem]) -> Result<IdentityResult> {
    let tower = ctx.tower();
    let qe = tower.q_elements();
    let units: Vec<Elem> = bs.iter().copied().filter(|b| !b.is_zero()).collect();
    let bad = units
        .par_iter()
        .map(|&b| -> Result<Vec<Counterexample>> {
            let row = ctx.s_c_bruteforce_row(b)?;
            let mut out = Vec::new();
            for (&c, &bf) in qe.iter().zip(&row) {
                let closed = ctx.s_c_closed(b, c)?;
                if bf != closed {
                    out.push(Counterexample {
                        inputs: vec![b.0, c.0],
                        bruteforce: bf.to_string(),
                        closed: closed.to_string(),
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(IdentityResult::new(
        "s_c",
        units.len() as u64 * qe.len() as u64,
        bad,
    ))
}

/// All character-sum identities that apply to the tower.
pub fn run_charsums(tower: &Tower) -> Result<CharsumReport> {
    let mut identities = Vec::new();
    let mut last = 0;
    for level in [Level::Q, Level::Qs, Level::Qm] {
        let size = tower.level_size(level);
        if size == last {
            continue;
        }
        last = size;
        if size % 2 == 1 && size <= GAUSS_LIMIT {
            identities.extend(gauss_checks(tower, level)?);
        }
        if size <= QUADRATIC_SUM_LIMIT {
            identities.push(quadratic_sum_check(tower, level)?);
        }
    }
    let ctx = SumContext::new(tower)?;
    let (bs, sampled) = b_values(tower);
    identities.push(delta_check(&ctx, tower.size() <= EXHAUSTIVE_A_LIMIT, &bs)?);
    identities.push(s_c_check(&ctx, &bs)?);
    let passed = identities.iter().all(|r| r.passed);
    Ok(CharsumReport {
        p: tower.p(),
        e: tower.e(),
        s: tower.s(),
        q: tower.q(),
        ambient: tower.size(),
        b_sampled: sampled,
        identities,
        passed,
    })
}
