//! Ground-truth chromatic polynomials by deletion-contraction, with
//! clique-sum style shortcuts, plus a brute-force colouring counter.
//!
//! This module exists to be obviously correct rather than fast: every
//! closed-form formula in the crate is validated against it. The recursion
//! memoises on the exact labelled structure of each subproblem, never on
//! isomorphism classes.

use crate::graph::SimpleGraph;
use crate::poly::{falling_factorial, IntPoly};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph on {vertices} vertices exceeds the oracle cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("edge ({0},{1}) already present")]
    EdgeExists(usize, usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
}

/// Tuning knobs for the oracle. The shortcut toggle exists so tests can
/// confirm that the clique-sum accelerations do not change results.
#[derive(Clone, Debug)]
pub struct OracleOptions {
    pub vertex_cap: usize,
    pub allow_large: bool,
    pub use_shortcuts: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self { vertex_cap: 18, allow_large: false, use_shortcuts: true }
    }
}

// Bitset adjacency; the hard 64-vertex ceiling is far beyond anything the
// recursion could finish anyway.
#[derive(Clone, PartialEq, Eq, Hash)]
struct BitGraph {
    adj: Vec<u64>,
}

impl BitGraph {
    fn from_simple(g: &SimpleGraph) -> Self {
        let mut adj = vec![0u64; g.n_vertices()];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Self { adj }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn n_edges(&self) -> u32 {
        self.adj.iter().map(|m| m.count_ones()).sum::<u32>() / 2
    }

    fn vertex_mask(&self) -> u64 {
        if self.n() == 64 {
            !0
        } else {
            (1u64 << self.n()) - 1
        }
    }

    fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj
            .iter()
            .enumerate()
            .all(|(v, &m)| m.count_ones() as usize == n - 1 && m & (1 << v) == 0)
    }

    /// Vertex whose neighbourhood induces a clique, if any.
    fn simplicial_vertex(&self) -> Option<usize> {
        (0..self.n()).find(|&v| {
            let nb = self.adj[v];
            let mut rest = nb;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if nb & !(1 << u) & !self.adj[u] != 0 {
                    return false;
                }
            }
            true
        })
    }

    fn components(&self) -> Vec<u64> {
        let n = self.n();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..n {
            if seen & (1 << v) != 0 {
                continue;
            }
            let mut comp = 1u64 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[u];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Subgraph induced on the vertex mask, labels compacted in order.
    fn induced(&self, mask: u64) -> Self {
        let verts: Vec<usize> = (0..self.n()).filter(|&v| mask & (1 << v) != 0).collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u64; verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            let mut m = self.adj[v] & mask;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                adj[i] |= 1 << pos[u];
            }
        }
        Self { adj }
    }

    fn delete_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g
    }

    /// Identifies v into u (dropping any parallel edges) and compacts labels.
    fn contract(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.adj[u] |= g.adj[v];
        g.adj[u] &= !(1 << u) & !(1 << v);
        let mut m = g.adj[v];
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            g.adj[w] &= !(1 << v);
            if w != u {
                g.adj[w] |= 1 << u;
            }
        }
        let keep = g.vertex_mask() & !(1 << v);
        g.induced(keep)
    }

    /// Edge inside the densest neighbourhood: most common neighbours first.
    fn pick_edge(&self) -> Option<(usize, usize)> {
        let mut best: Option<(u32, usize, usize)> = None;
        for u in 0..self.n() {
            let mut m = self.adj[u] >> u >> 1 << (u + 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let common = (self.adj[u] & self.adj[v]).count_ones();
                if best.map_or(true, |(c, _, _)| common > c) {
                    best = Some((common, u, v));
                }
            }
        }
        best.map(|(_, u, v)| (u, v))
    }
}

fn x_power(n: usize) -> IntPoly {
    let mut coeffs = vec![BigInt::from(0); n + 1];
    coeffs[n] = BigInt::one();
    IntPoly::new(coeffs)
}

fn chrom_rec(g: &BitGraph, shortcuts: bool, memo: &mut HashMap<Vec<u64>, IntPoly>) -> IntPoly {
    let n = g.n();
    if g.n_edges() == 0 {
        return x_power(n);
    }
    if let Some(hit) = memo.get(&g.adj) {
        return hit.clone();
    }
    let result = if shortcuts {
        let comps = g.components();
        if comps.len() > 1 {
            let mut acc = IntPoly::one();
            for c in comps {
                acc = acc.mul(&chrom_rec(&g.induced(c), shortcuts, memo));
            }
            acc
        } else if g.is_complete() {
            falling_factorial(n)
        } else if let Some(v) = g.simplicial_vertex() {
            // v hangs off the clique N(v): a clique-sum split whose second
            // part contributes the single factor (X - deg v).
            let d = g.adj[v].count_ones() as i64;
            let rest = g.induced(g.vertex_mask() & !(1 << v));
            chrom_rec(&rest, shortcuts, memo).mul(&IntPoly::from_coeffs(vec![-d, 1]))
        } else {
            let (u, v) = g.pick_edge().expect("edges present");
            chrom_rec(&g.delete_edge(u, v), shortcuts, memo)
                .sub(&chrom_rec(&g.contract(u, v), shortcuts, memo))
        }
    } else {
        let (u, v) = g.pick_edge().expect("edges present");
        chrom_rec(&g.delete_edge(u, v), shortcuts, memo)
            .sub(&chrom_rec(&g.contract(u, v), shortcuts, memo))
    };
    memo.insert(g.adj.clone(), result.clone());
    result
}

fn check_cap(g: &SimpleGraph, opts: &OracleOptions) -> Result<(), OracleError> {
    let hard = 64;
    let cap = if opts.allow_large { hard } else { opts.vertex_cap.min(hard) };
    if g.n_vertices() > cap {
        return Err(OracleError::TooLarge { vertices: g.n_vertices(), cap });
    }
    Ok(())
}

/// Exact chromatic polynomial by deletion-contraction; monic of degree
/// |V(g)|.
pub fn chromatic_poly_oracle(g: &SimpleGraph) -> Result<IntPoly, OracleError> {
    chromatic_poly_oracle_with(g, &OracleOptions::default())
}

pub fn chromatic_poly_oracle_with(
    g: &SimpleGraph,
    opts: &OracleOptions,
) -> Result<IntPoly, OracleError> {
    check_cap(g, opts)?;
    let bg = BitGraph::from_simple(g);
    let mut memo = HashMap::new();
    let p = chrom_rec(&bg, opts.use_shortcuts, &mut memo);
    debug_assert_eq!(p.degree().unwrap_or(0), g.n_vertices());
    Ok(p)
}

/// Chromatic polynomial through the addition-contraction identity on a
/// non-edge e: P_G = P_{G+e} + P_{(G+e)/e}.
pub fn chromatic_poly_via_addition(
    g: &SimpleGraph,
    e: (usize, usize),
) -> Result<IntPoly, OracleError> {
    let (u, v) = e;
    let n = g.n_vertices();
    if u >= n || v >= n || u == v {
        return Err(OracleError::VertexOutOfRange(u.max(v), n));
    }
    if g.has_edge(u, v) {
        return Err(OracleError::EdgeExists(u, v));
    }
    let opts = OracleOptions::default();
    check_cap(g, &opts)?;
    let bg = BitGraph::from_simple(g);
    let mut with_edge = bg.clone();
    with_edge.adj[u] |= 1 << v;
    with_edge.adj[v] |= 1 << u;
    let contracted = with_edge.contract(u, v);
    let mut memo = HashMap::new();
    Ok(chrom_rec(&with_edge, true, &mut memo).add(&chrom_rec(&contracted, true, &mut memo)))
}

/// Brute-force count of proper q-colourings by backtracking enumeration.
pub fn count_colourings(g: &SimpleGraph, q: u64) -> Result<u64, OracleError> {
    if g.n_vertices() > 10 || q > 6 {
        return Err(OracleError::TooLarge { vertices: g.n_vertices(), cap: 10 });
    }
    let bg = BitGraph::from_simple(g);
    fn rec(g: &BitGraph, q: u64, v: usize, colours: &mut [u64]) -> u64 {
        if v == g.n() {
            return 1;
        }
        let earlier = if v == 0 { 0 } else { (1u64 << v) - 1 };
        let mut total = 0;
        'next: for c in 0..q {
            let mut m = g.adj[v] & earlier;
            while m != 0 {
                let u = m.trailing_zeros() as usize;
                m &= m - 1;
                if colours[u] == c {
                    continue 'next;
                }
            }
            colours[v] = c;
            total += rec(g, q, v + 1, colours);
        }
        total
    }
    let mut colours = vec![0u64; bg.n()];
    Ok(rec(&bg, q, 0, &mut colours))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build, FamilySpec};
    use num_traits::Zero;

    fn p(coeffs: Vec<i64>) -> IntPoly {
        IntPoly::from_coeffs(coeffs)
    }

    // Deterministic graph generator for comparison sweeps.
    fn random_graph(n: usize, density_pct: u64, seed: u64) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        let mut state = seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
        for u in 0..n {
            for v in u + 1..n {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if (state >> 33) % 100 < density_pct {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn corpus() -> Vec<SimpleGraph> {
        vec![
            SimpleGraph::complete(1),
            SimpleGraph::complete(3),
            SimpleGraph::path(3),
            SimpleGraph::path(4),
            SimpleGraph::cycle(4),
            SimpleGraph::cycle(5),
            // diamond and bull
            SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]),
            SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
            build(&FamilySpec::GeneralizedTheta { m: vec![2, 2, 2] }).unwrap(),
            random_graph(7, 45, 7),
        ]
    }

    #[test]
    fn known_small_polynomials() {
        assert_eq!(chromatic_poly_oracle(&SimpleGraph::complete(3)).unwrap(), p(vec![0, 2, -3, 1]));
        // Trees on n vertices: X(X-1)^{n-1}.
        assert_eq!(chromatic_poly_oracle(&SimpleGraph::path(3)).unwrap(), p(vec![0, 1, -2, 1]));
        assert_eq!(chromatic_poly_oracle(&SimpleGraph::cycle(4)).unwrap(), p(vec![0, -3, 6, -4, 1]));
        assert_eq!(chromatic_poly_oracle(&SimpleGraph::new(0)).unwrap(), IntPoly::one());
    }

    #[test]
    fn addition_contraction_examples() {
        let two = SimpleGraph::new(2);
        assert_eq!(chromatic_poly_via_addition(&two, (0, 1)).unwrap(), p(vec![0, 0, 1]));

        let path = SimpleGraph::path(3);
        assert_eq!(chromatic_poly_via_addition(&path, (0, 2)).unwrap(), p(vec![0, 1, -2, 1]));

        assert_eq!(chromatic_poly_via_addition(&path, (0, 1)), Err(OracleError::EdgeExists(0, 1)));
        assert_eq!(
            chromatic_poly_via_addition(&path, (0, 9)),
            Err(OracleError::VertexOutOfRange(9, 3))
        );
    }

    #[test]
    fn addition_contraction_matches_oracle_on_random_graphs() {
        let mut checked = 0;
        let mut seed = 11;
        while checked < 20 {
            seed += 1;
            let g = random_graph(6, 50, seed);
            let non_edges: Vec<(usize, usize)> = (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            if non_edges.is_empty() {
                continue;
            }
            let e = non_edges[seed as usize % non_edges.len()];
            assert_eq!(
                chromatic_poly_via_addition(&g, e).unwrap(),
                chromatic_poly_oracle(&g).unwrap(),
                "seed {seed}"
            );
            checked += 1;
        }
    }

    #[test]
    fn colour_counts() {
        let k3 = SimpleGraph::complete(3);
        assert_eq!(count_colourings(&k3, 3).unwrap(), 6);
        assert_eq!(count_colourings(&k3, 2).unwrap(), 0);
        assert_eq!(count_colourings(&SimpleGraph::cycle(4), 2).unwrap(), 2);
        assert!(count_colourings(&SimpleGraph::new(11), 2).is_err());
    }

    #[test]
    fn polynomial_evaluation_matches_counting() {
        for (i, g) in corpus().iter().enumerate() {
            assert!(g.n_vertices() <= 7, "corpus graph {i} too big for this check");
            let poly = chromatic_poly_oracle(g).unwrap();
            for q in 0..=3u64 {
                assert_eq!(
                    poly.eval_int(&q.into()),
                    count_colourings(g, q).unwrap().into(),
                    "graph {i}, q={q}"
                );
            }
        }
    }

    #[test]
    fn oracle_output_shape() {
        for (i, g) in corpus().iter().enumerate() {
            let poly = chromatic_poly_oracle(g).unwrap();
            let n = g.n_vertices();
            assert_eq!(poly.degree(), Some(n), "graph {i}");
            assert!(poly.is_monic(), "graph {i}");
            // Coefficient of X^{n-k} has sign (-1)^k or is zero.
            for (idx, c) in poly.coeffs().iter().enumerate() {
                let k = n - idx;
                if !c.is_zero() {
                    assert_eq!(
                        c.sign() == num_bigint::Sign::Minus,
                        k % 2 == 1,
                        "graph {i}, coefficient of X^{idx}"
                    );
                }
            }
            if g.n_edges() > 0 {
                assert!(poly.eval_int(&1.into()).is_zero(), "graph {i}: P(1) != 0");
            }
            if n > 0 {
                assert!(poly.eval_int(&0.into()).is_zero(), "graph {i}: P(0) != 0");
            }
        }
    }

    #[test]
    fn shortcuts_do_not_change_results() {
        let raw = OracleOptions { use_shortcuts: false, ..OracleOptions::default() };
        for seed in 0..50 {
            let g = random_graph(8, 40, seed);
            assert_eq!(
                chromatic_poly_oracle(&g).unwrap(),
                chromatic_poly_oracle_with(&g, &raw).unwrap(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn vertex_cap_is_enforced_but_overridable() {
        let g = SimpleGraph::path(19);
        assert!(matches!(
            chromatic_poly_oracle(&g),
            Err(OracleError::TooLarge { vertices: 19, cap: 18 })
        ));
        let opts = OracleOptions { allow_large: true, ..OracleOptions::default() };
        let poly = chromatic_poly_oracle_with(&g, &opts).unwrap();
        assert_eq!(poly.degree(), Some(19));
    }
}
