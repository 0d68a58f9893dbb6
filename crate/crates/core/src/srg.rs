//! The Cayley graph on `F_{q^m}` whose connection set is `Ω = F*_q·D`, and
//! direct verification of strongly regular parameters.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::TraceCode;
use crate::error::{Error, Result};
use crate::field::{Elem, Tower};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "K")]
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    /// `K(K−λ−1) = (N−K−1)μ`.
    pub fn feasible(&self) -> bool {
        let (n, k, l, m) = (
            self.n as i128,
            self.k as i128,
            self.lambda as i128,
            self.mu as i128,
        );
        k * (k - l - 1) == (n - k - 1) * m
    }
}

/// `Ω` as a sorted list of field elements.
pub fn omega_set(code: &TraceCode) -> Result<Vec<Elem>> {
    if !code.is_projective() {
        return Err(Error::NotProjective);
    }
    let t = code.tower();
    let mut omega: Vec<Elem> = code
        .defining_set()
        .elements
        .iter()
        .flat_map(|&d| t.q_elements()[1..].iter().map(move |&l| t.mul(l, d)))
        .collect();
    omega.sort_unstable();
    omega.dedup();
    Ok(omega)
}

/// Whether the proportionality classes of generator-matrix columns coincide
/// with the `F*_q`-classes of the defining set.
pub fn omega_matches_columns(code: &TraceCode) -> bool {
    let t = code.tower();
    let units = &t.q_elements()[1..];
    let mut by_column: BTreeMap<Option<Vec<Elem>>, Vec<usize>> = BTreeMap::new();
    let mut by_scalar: BTreeMap<Elem, Vec<usize>> = BTreeMap::new();
    for (j, &d) in code.defining_set().elements.iter().enumerate() {
        by_column.entry(code.normalized_column(j)).or_default().push(j);
        let rep = units.iter().map(|&l| t.mul(l, d)).min().expect("q ≥ 2");
        by_scalar.entry(rep).or_default().push(j);
    }
    let mut a: Vec<Vec<usize>> = by_column.into_values().collect();
    let mut b: Vec<Vec<usize>> = by_scalar.into_values().collect();
    a.sort();
    b.sort();
    a == b
}

/// Undirected simple graph as a bit matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl PointGraph {
    pub fn empty(n: usize) -> PointGraph {
        let words = n.div_ceil(64);
        PointGraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> PointGraph {
        let mut g = PointGraph::empty(n);
        for &(u, v) in edges {
            g.set(u, v);
            g.set(v, u);
        }
        g
    }

    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.adjacent(u, v))
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Line 1 `N K`, then `u v` with `u < v` in lexicographic order.
    pub fn to_text(&self) -> String {
        let k = if self.n > 0 { self.degree(0) } else { 0 };
        let mut out = format!("{} {}\n", self.n, k);
        for u in 0..self.n {
            for v in self.neighbors(u).filter(|&v| v > u) {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        out
    }
}

/// `u ~ v` iff `u − v ∈ Ω`, vertices labelled by encodings.
pub fn build_graph(tower: &Tower, omega: &[Elem]) -> Result<PointGraph> {
    if omega.contains(&Elem::ZERO) {
        return Err(Error::DegenerateGraph("0 lies in the connection set".into()));
    }
    let mut sorted = omega.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut negated: Vec<Elem> = sorted.iter().map(|&w| tower.neg(w)).collect();
    negated.sort_unstable();
    if negated != sorted {
        return Err(Error::NotSymmetric);
    }
    let n = tower.size() as usize;
    let mut g = PointGraph::empty(n);
    let words = g.words;
    g.rows
        .par_chunks_mut(words)
        .enumerate()
        .for_each(|(u, row)| {
            for &w in &sorted {
                let v = tower.add(Elem(u as u32), w).0 as usize;
                row[v / 64] |= 1 << (v % 64);
            }
        });
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SrgOutcome {
    Srg(SrgParams),
    /// Regularity or a common-neighbour count fails; `(u, v)` realises a
    /// value different from the one first seen in its class.
    NotSrg {
        u: usize,
        v: usize,
        adjacent: bool,
        common: usize,
        first: usize,
    },
}

/// Counts common neighbours over every vertex pair.
pub fn srg_count(graph: &PointGraph) -> Result<SrgOutcome> {
    let n = graph.vertex_count();
    if n < 2 {
        return Err(Error::DegenerateGraph(format!("{n} vertices")));
    }
    let k = graph.degree(0);
    if k == 0 || k == n - 1 {
        return Err(Error::DegenerateGraph(if k == 0 {
            "empty graph".into()
        } else {
            "complete graph".into()
        }));
    }
    if let Some(u) = (1..n).find(|&u| graph.degree(u) != k) {
        return Ok(SrgOutcome::NotSrg {
            u: 0,
            v: u,
            adjacent: graph.adjacent(0, u),
            common: graph.degree(u),
            first: k,
        });
    }
    if !graph.is_connected() {
        return Err(Error::DegenerateGraph("disconnected graph".into()));
    }

    // (adjacent, common) -> smallest pair realising it
    type Seen = BTreeMap<(bool, usize), (usize, usize)>;
    let merge = |mut a: Seen, b: Seen| {
        for (key, pair) in b {
            a.entry(key)
                .and_modify(|p| *p = (*p).min(pair))
                .or_insert(pair);
        }
        a
    };
    let seen: Seen = (0..n)
        .into_par_iter()
        .fold(Seen::new, |mut acc, u| {
            for v in u + 1..n {
                let key = (graph.adjacent(u, v), graph.common_neighbors(u, v));
                acc.entry(key).or_insert((u, v));
            }
            acc
        })
        .reduce(Seen::new, merge);

    let class = |adj: bool| -> Vec<(usize, (usize, usize))> {
        let mut v: Vec<_> = seen
            .iter()
            .filter(|((a, _), _)| *a == adj)
            .map(|((_, c), p)| (*c, *p))
            .collect();
        v.sort_by_key(|&(_, p)| p);
        v
    };
    let adj = class(true);
    let non = class(false);
    for (is_adj, values) in [(true, &adj), (false, &non)] {
        if values.len() > 1 {
            let (common, (u, v)) = values[1];
            return Ok(SrgOutcome::NotSrg {
                u,
                v,
                adjacent: is_adj,
                common,
                first: values[0].0,
            });
        }
    }
    Ok(SrgOutcome::Srg(SrgParams {
        n: n as u64,
        k: k as u64,
        lambda: adj[0].0 as u64,
        mu: non[0].0 as u64,
    }))
}

/// Parameters from a projective two-weight code `[n, k]` with weights `w1`, `w2`.
pub fn srg_predicted_generic(n: u64, q: u64, k: u32, w1: u64, w2: u64) -> Result<SrgParams> {
    let (n, q, w1, w2) = (n as i128, q as i128, w1 as i128, w2 as i128);
    let big_k = n * (q - 1);
    let sum = w1 + w2;
    let prod = w1 * w2;
    let lambda = big_k * big_k + 3 * big_k - q * sum - big_k * q * sum + q * q * prod;
    let mu = big_k * big_k + big_k - big_k * q * sum + q * q * prod;
    if lambda < 0 || mu < 0 {
        return Err(Error::InvalidParameter(format!(
            "negative parameter: lambda = {lambda}, mu = {mu}"
        )));
    }
    Ok(SrgParams {
        n: (q as u64).pow(k),
        k: big_k as u64,
        lambda: lambda as u64,
        mu: mu as u64,
    })
}

/// The family coming from even `q` and `c ≠ 0`.
pub fn srg_family_params(q: u64, s: u32) -> Result<SrgParams> {
    if q % 2 != 0 {
        return Err(Error::OutsideTheorem(format!("q = {q} is odd")));
    }
    if s == 0 {
        return Err(Error::InvalidParameter("s must be positive".into()));
    }
    let qs = q.pow(s);
    let qs1 = q.pow(s - 1);
    Ok(SrgParams {
        n: q.pow(2 * s),
        k: qs1 * (qs + 1) * (q - 1),
        lambda: qs1 * (2 * q - 3 + qs1 * (q - 1) * (q - 1)),
        mu: (q - 1) * qs1 * (qs - qs1 + 1),
    })
}

/// Builds `G(Ω)` for a code and counts its parameters.
pub fn code_graph(code: &TraceCode) -> Result<(PointGraph, SrgOutcome)> {
    let omega = omega_set(code)?;
    let g = build_graph(code.tower(), &omega)?;
    let outcome = srg_count(&g)?;
    Ok((g, outcome))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_tower;
    use std::sync::Arc;

    fn code(p: u32, e: u32, s: u32, c: usize) -> TraceCode {
        TraceCode::from_c_index(Arc::new(build_tower(p, e, s).unwrap()), c).unwrap()
    }

    #[test]
    fn five_cycle() {
        let g = PointGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let want = SrgParams {
            n: 5,
            k: 2,
            lambda: 0,
            mu: 1,
        };
        assert_eq!(srg_count(&g).unwrap(), SrgOutcome::Srg(want));
        assert!(want.feasible());
    }

    #[test]
    fn path_is_not_regular() {
        let g = PointGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(matches!(srg_count(&g).unwrap(), SrgOutcome::NotSrg { .. }));
    }

    #[test]
    fn six_cycle_witness() {
        let edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = PointGraph::from_edges(6, &edges);
        match srg_count(&g).unwrap() {
            SrgOutcome::NotSrg {
                u, v, adjacent, common, first,
            } => {
                assert!(!adjacent);
                assert_eq!(g.common_neighbors(u, v), common);
                assert_ne!(common, first);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_graphs_rejected() {
        assert!(srg_count(&PointGraph::empty(4)).is_err());
        let k4 = PointGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(srg_count(&k4).is_err());
        let two_squares = PointGraph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)],
        );
        assert!(matches!(srg_count(&two_squares), Err(Error::DegenerateGraph(_))));
    }

    #[test]
    fn omega_sizes_and_closure() {
        let c = code(2, 1, 2, 1);
        assert_eq!(omega_set(&c).unwrap().len(), 10);
        assert!(omega_matches_columns(&c));
        let c = code(2, 1, 3, 1);
        assert_eq!(omega_set(&c).unwrap().len(), 36);
        let c = code(2, 2, 1, 1);
        let t = c.tower().clone();
        let omega = omega_set(&c).unwrap();
        assert_eq!(omega.len(), 15);
        for &l in t.q_elements() {
            for &w in &omega {
                if !l.is_zero() {
                    assert!(omega.binary_search(&t.mul(l, w)).is_ok());
                }
            }
        }
    }

    #[test]
    fn non_projective_rejected() {
        assert!(matches!(omega_set(&code(3, 1, 2, 1)), Err(Error::NotProjective)));
        assert!(matches!(omega_set(&code(2, 2, 2, 0)), Err(Error::NotProjective)));
        // the column classes still line up with scalar classes of D
        assert!(omega_matches_columns(&code(3, 1, 2, 1)));
    }

    #[test]
    fn asymmetric_set_rejected() {
        let t = build_tower(3, 1, 1).unwrap();
        assert!(matches!(build_graph(&t, &[Elem(1)]), Err(Error::NotSymmetric)));
        assert!(build_graph(&t, &[Elem(0)]).is_err());
    }

    #[test]
    fn graph_structure() {
        let c = code(2, 1, 2, 1);
        let omega = omega_set(&c).unwrap();
        let g = build_graph(c.tower(), &omega).unwrap();
        assert_eq!(g.vertex_count(), 16);
        let n0: Vec<Elem> = g.neighbors(0).map(|v| Elem(v as u32)).collect();
        assert_eq!(n0, omega);
        let t = c.tower();
        for u in 0..16 {
            assert_eq!(g.degree(u), 10);
            for v in g.neighbors(u) {
                let (tu, tv) = (
                    t.add(Elem(u as u32), Elem(7)).0 as usize,
                    t.add(Elem(v as u32), Elem(7)).0 as usize,
                );
                assert!(g.adjacent(tu, tv));
            }
        }
    }

    #[test]
    fn counted_parameters() {
        let (_, o) = code_graph(&code(2, 1, 2, 1)).unwrap();
        assert_eq!(o, SrgOutcome::Srg(SrgParams { n: 16, k: 10, lambda: 6, mu: 6 }));
        let (_, o) = code_graph(&code(2, 1, 3, 1)).unwrap();
        assert_eq!(o, SrgOutcome::Srg(SrgParams { n: 64, k: 36, lambda: 20, mu: 20 }));
        // binary c = 0 code with s = 2 is projective too
        let (_, o) = code_graph(&code(2, 1, 2, 0)).unwrap();
        assert_eq!(o, SrgOutcome::Srg(SrgParams { n: 16, k: 5, lambda: 0, mu: 2 }));
    }

    #[test]
    fn one_weight_code_gives_complete_graph() {
        assert!(matches!(code_graph(&code(2, 2, 1, 1)), Err(Error::DegenerateGraph(_))));
    }

    #[test]
    fn predicted_parameters() {
        let p = srg_predicted_generic(10, 2, 4, 4, 6).unwrap();
        assert_eq!(p, SrgParams { n: 16, k: 10, lambda: 6, mu: 6 });
        let p = srg_predicted_generic(36, 2, 6, 16, 20).unwrap();
        assert_eq!(p, SrgParams { n: 64, k: 36, lambda: 20, mu: 20 });
        assert!(srg_predicted_generic(10, 2, 4, 1, 9).is_err());
    }

    #[test]
    fn family_parameters() {
        assert_eq!(srg_family_params(2, 2).unwrap(), SrgParams { n: 16, k: 10, lambda: 6, mu: 6 });
        assert_eq!(srg_family_params(2, 3).unwrap(), SrgParams { n: 64, k: 36, lambda: 20, mu: 20 });
        let p = srg_family_params(4, 2).unwrap();
        assert_eq!(p, SrgParams { n: 256, k: 204, lambda: 164, mu: 156 });
        assert!(p.feasible());
        assert_eq!(p.k * (p.k - p.lambda - 1), 7956);
        assert!(srg_family_params(3, 2).is_err());
    }

    #[test]
    fn text_export() {
        let c = code(2, 1, 2, 1);
        let (g, _) = code_graph(&c).unwrap();
        let text = g.to_text();
        assert!(text.starts_with("16 10\n"));
        assert_eq!(text.lines().count(), 1 + 16 * 10 / 2);
        let pairs: Vec<(usize, usize)> = text
            .lines()
            .skip(1)
            .map(|l| {
                let mut it = l.split(' ').map(|x| x.parse().unwrap());
                (it.next().unwrap(), it.next().unwrap())
            })
            .collect();
        assert!(pairs.iter().all(|(u, v)| u < v));
        assert!(pairs.windows(2).all(|w| w[0] < w[1]));
    }
}
