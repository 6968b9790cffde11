//! Simple graphs and the clique-graph families: clique-paths, rings of
//! cliques, generalised theta graphs and clique-theta graphs.
//!
//! Vertex labelling is deterministic so tests can reference vertices:
//! cliques are laid out in spec order, each occupying a consecutive label
//! range. For `GeneralizedTheta` the two terminal vertices are 0 and 1,
//! followed by the internal vertices of each path in order. For
//! `CliqueTheta` the j-clique comes first, then the path cliques in order,
//! then the k-clique last.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("generalised theta path of length {0} has no internal clique form")]
    UnsupportedLength(usize),
    #[error("graph6: {0}")]
    Graph6(String),
}

/// Loopless undirected graph with adjacency sets; vertices are 0-indexed.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(n_vertices: usize) -> Self {
        Self { adj: vec![BTreeSet::new(); n_vertices] }
    }

    pub fn from_edges(n_vertices: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n_vertices);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Inserts an edge; parallel edges collapse by set semantics.
    /// Loops are a programming error in the constructors.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop edge {u}-{u}");
        let n = self.adj.len();
        assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as ordered pairs (u < v), sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n_edges());
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Self::path(n);
        g.add_edge(n - 1, 0);
        g
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n_vertices(), self.edges())
    }
}

/// Parameter record for a clique-theta graph T(j, S_1..S_n, k).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CliqueThetaSpec {
    pub j: usize,
    #[serde(rename = "S")]
    pub paths: Vec<Vec<usize>>,
    pub k: usize,
}

impl CliqueThetaSpec {
    pub fn new(j: usize, paths: Vec<Vec<usize>>, k: usize) -> Self {
        Self { j, paths, k }
    }

    pub fn n_vertices(&self) -> usize {
        self.j + self.k + self.paths.iter().flatten().sum::<usize>()
    }

    fn validate(&self) -> Result<(), GraphError> {
        if self.j == 0 || self.k == 0 {
            return Err(GraphError::InvalidSpec("extremal clique sizes must be positive".into()));
        }
        if self.paths.is_empty() {
            return Err(GraphError::InvalidSpec("clique-theta needs at least one path".into()));
        }
        for s in &self.paths {
            if s.is_empty() {
                return Err(GraphError::InvalidSpec("every S_i must be nonempty".into()));
            }
            if s.contains(&0) {
                return Err(GraphError::InvalidSpec("clique sizes must be positive".into()));
            }
        }
        Ok(())
    }
}

/// Parameter record for one of the graph families.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    CliquePath { a: Vec<usize> },
    RingOfCliques { a: Vec<usize> },
    GeneralizedTheta { m: Vec<usize> },
    CliqueTheta(CliqueThetaSpec),
}

impl FamilySpec {
    pub fn n_vertices(&self) -> usize {
        match self {
            FamilySpec::CliquePath { a } | FamilySpec::RingOfCliques { a } => a.iter().sum(),
            FamilySpec::GeneralizedTheta { m } => 2 + m.iter().map(|&mi| mi - 1).sum::<usize>(),
            FamilySpec::CliqueTheta(t) => t.n_vertices(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::CliquePath { a } => write!(f, "L{a:?}"),
            FamilySpec::RingOfCliques { a } => write!(f, "R{a:?}"),
            FamilySpec::GeneralizedTheta { m } => write!(f, "Theta{m:?}"),
            FamilySpec::CliqueTheta(t) => write!(f, "T({},{:?},{})", t.j, t.paths, t.k),
        }
    }
}

fn add_clique(g: &mut SimpleGraph, verts: &[usize]) {
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            g.add_edge(u, v);
        }
    }
}

fn join_sets(g: &mut SimpleGraph, a: &[usize], b: &[usize]) {
    for &u in a {
        for &v in b {
            g.add_edge(u, v);
        }
    }
}

/// Builds the explicit simple graph for a family spec.
pub fn build(spec: &FamilySpec) -> Result<SimpleGraph, GraphError> {
    match spec {
        FamilySpec::CliquePath { a } => build_clique_path(a),
        FamilySpec::RingOfCliques { a } => build_ring(a),
        FamilySpec::GeneralizedTheta { m } => build_theta(m),
        FamilySpec::CliqueTheta(t) => build_clique_theta(t),
    }
}

fn clique_ranges(sizes: &[usize], start: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(sizes.len());
    let mut next = start;
    for &s in sizes {
        out.push((next..next + s).collect());
        next += s;
    }
    out
}

fn check_sizes(a: &[usize], family: &str, min_len: usize) -> Result<(), GraphError> {
    if a.len() < min_len {
        return Err(GraphError::InvalidSpec(format!("{family} needs at least {min_len} cliques")));
    }
    if a.contains(&0) {
        return Err(GraphError::InvalidSpec(format!("{family} clique sizes must be positive")));
    }
    Ok(())
}

fn build_clique_path(a: &[usize]) -> Result<SimpleGraph, GraphError> {
    check_sizes(a, "clique-path", 1)?;
    let mut g = SimpleGraph::new(a.iter().sum());
    let cliques = clique_ranges(a, 0);
    for c in &cliques {
        add_clique(&mut g, c);
    }
    for w in cliques.windows(2) {
        join_sets(&mut g, &w[0], &w[1]);
    }
    Ok(g)
}

fn build_ring(a: &[usize]) -> Result<SimpleGraph, GraphError> {
    // Fewer than 3 cliques would need a multigraph cycle underneath.
    check_sizes(a, "ring of cliques", 3)?;
    let mut g = build_clique_path(a)?;
    let cliques = clique_ranges(a, 0);
    join_sets(&mut g, cliques.last().unwrap(), &cliques[0]);
    Ok(g)
}

fn build_theta(m: &[usize]) -> Result<SimpleGraph, GraphError> {
    if m.is_empty() {
        return Err(GraphError::InvalidSpec("theta needs at least one path".into()));
    }
    if m.contains(&0) {
        return Err(GraphError::InvalidSpec("theta path lengths must be positive".into()));
    }
    if m.iter().filter(|&&mi| mi == 1).count() > 1 {
        return Err(GraphError::InvalidSpec(
            "more than one path of length 1 would create a parallel edge".into(),
        ));
    }
    let n = 2 + m.iter().map(|&mi| mi - 1).sum::<usize>();
    let mut g = SimpleGraph::new(n);
    let mut next = 2;
    for &mi in m {
        // Path of mi edges from vertex 0 to vertex 1 through mi-1 fresh vertices.
        let mut prev = 0;
        for _ in 0..mi - 1 {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 1);
    }
    Ok(g)
}

fn build_clique_theta(t: &CliqueThetaSpec) -> Result<SimpleGraph, GraphError> {
    t.validate()?;
    let mut g = SimpleGraph::new(t.n_vertices());
    let j_clique: Vec<usize> = (0..t.j).collect();
    add_clique(&mut g, &j_clique);
    let mut next = t.j;
    let mut path_cliques = Vec::new();
    for s in &t.paths {
        let cliques = clique_ranges(s, next);
        next += s.iter().sum::<usize>();
        path_cliques.push(cliques);
    }
    let k_clique: Vec<usize> = (next..next + t.k).collect();
    add_clique(&mut g, &k_clique);
    for cliques in &path_cliques {
        for c in cliques {
            add_clique(&mut g, c);
        }
        join_sets(&mut g, &j_clique, &cliques[0]);
        for w in cliques.windows(2) {
            join_sets(&mut g, &w[0], &w[1]);
        }
        join_sets(&mut g, cliques.last().unwrap(), &k_clique);
    }
    Ok(g)
}

/// The join of `g` with K_n: n new mutually adjacent vertices, each adjacent
/// to every vertex of `g`. Shifts every chromatic root up by n.
pub fn join_complete(g: &SimpleGraph, n: usize) -> SimpleGraph {
    let base = g.n_vertices();
    let mut out = SimpleGraph::new(base + n);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for i in 0..n {
        for v in 0..base + i {
            out.add_edge(base + i, v);
        }
    }
    out
}

/// Replaces vertex `v` by an n-clique whose every vertex inherits all of
/// v's neighbours. The clique reuses label v and appends n-1 new labels.
pub fn blow_up_vertex(g: &SimpleGraph, v: usize, n: usize) -> Result<SimpleGraph, GraphError> {
    if v >= g.n_vertices() {
        return Err(GraphError::VertexOutOfRange(v, g.n_vertices()));
    }
    assert!(n >= 1, "blow-up size must be positive");
    let base = g.n_vertices();
    let mut out = SimpleGraph::new(base + n - 1);
    for (u, w) in g.edges() {
        out.add_edge(u, w);
    }
    let mut clique = vec![v];
    clique.extend(base..base + n - 1);
    add_clique(&mut out, &clique);
    let nbrs: Vec<usize> = g.neighbours(v).collect();
    for &c in &clique[1..] {
        for &u in &nbrs {
            out.add_edge(c, u);
        }
    }
    Ok(out)
}

/// Expresses a generalised theta graph as a clique-theta graph with trivial
/// extremal cliques: each path of m edges becomes m-1 unit cliques.
pub fn theta_as_clique_theta(m: &[usize]) -> Result<CliqueThetaSpec, GraphError> {
    if m.is_empty() {
        return Err(GraphError::InvalidSpec("theta needs at least one path".into()));
    }
    for &mi in m {
        if mi < 2 {
            return Err(GraphError::UnsupportedLength(mi));
        }
    }
    Ok(CliqueThetaSpec::new(1, m.iter().map(|&mi| vec![1; mi - 1]).collect(), 1))
}

/// Isomorphism test by degree-pruned backtracking. Exponential in the worst
/// case; intended only for the small graphs in this crate's tests.
pub fn are_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    let n = a.n_vertices();
    if n != b.n_vertices() || a.n_edges() != b.n_edges() {
        return false;
    }
    {
        let mut sa: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
        let mut sb: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }
    // Map a-vertices in decreasing-degree order; ties broken by label.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - a.degree(v), v));
    let deg_a: Vec<usize> = order.iter().map(|&v| a.degree(v)).collect();

    fn backtrack(
        a: &SimpleGraph,
        b: &SimpleGraph,
        order: &[usize],
        deg_a: &[usize],
        pos: usize,
        mapping: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let u = order[pos];
        'cand: for w in 0..b.n_vertices() {
            if used[w] || b.degree(w) != deg_a[pos] {
                continue;
            }
            for &earlier in &order[..pos] {
                let img = mapping[earlier].unwrap();
                if a.has_edge(u, earlier) != b.has_edge(w, img) {
                    continue 'cand;
                }
            }
            mapping[u] = Some(w);
            used[w] = true;
            if backtrack(a, b, order, deg_a, pos + 1, mapping, used) {
                return true;
            }
            mapping[u] = None;
            used[w] = false;
        }
        false
    }

    let mut mapping = vec![None; n];
    let mut used = vec![false; n];
    backtrack(a, b, &order, &deg_a, 0, &mut mapping, &mut used)
}

// graph6 encoding: printable bytes 63..=126, upper triangle column by column.

fn g6_size(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    match bytes {
        [] => Err(GraphError::Graph6("empty string".into())),
        [126, 126, ..] => Err(GraphError::Graph6("graphs beyond 258047 vertices unsupported".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(GraphError::Graph6("truncated size field".into()));
            }
            let mut n = 0usize;
            for &c in &rest[..3] {
                if !(63..=126).contains(&c) {
                    return Err(GraphError::Graph6(format!("invalid size byte {c}")));
                }
                n = (n << 6) | (c as usize - 63);
            }
            Ok((n, 4))
        }
        [c, ..] => {
            if !(63..=126).contains(c) {
                return Err(GraphError::Graph6(format!("invalid size byte {c}")));
            }
            Ok((*c as usize - 63, 1))
        }
    }
}

/// Parses a graph in graph6 format.
pub fn from_graph6(s: &str) -> Result<SimpleGraph, GraphError> {
    let bytes = s.trim().as_bytes();
    let (n, offset) = g6_size(bytes)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = offset + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(GraphError::Graph6(format!(
            "expected {expected} bytes for {n} vertices, got {}",
            bytes.len()
        )));
    }
    let mut g = SimpleGraph::new(n);
    let mut bit = 0usize;
    for &c in &bytes[offset..] {
        if !(63..=126).contains(&c) {
            return Err(GraphError::Graph6(format!("invalid data byte {c}")));
        }
        let val = c - 63;
        for shift in (0..6).rev() {
            if bit >= nbits {
                if (val >> shift) & 1 != 0 {
                    return Err(GraphError::Graph6("nonzero padding bits".into()));
                }
                continue;
            }
            if (val >> shift) & 1 == 1 {
                let (u, v) = pair_from_index(bit);
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    Ok(g)
}

// Bit positions run (0,1), (0,2), (1,2), (0,3), ... column by column.
fn pair_from_index(idx: usize) -> (usize, usize) {
    let mut col = 1usize;
    let mut base = 0usize;
    while base + col <= idx {
        base += col;
        col += 1;
    }
    (idx - base, col)
}

/// Serialises a graph to graph6 format.
pub fn to_graph6(g: &SimpleGraph) -> Result<String, GraphError> {
    let n = g.n_vertices();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    } else {
        return Err(GraphError::Graph6("graphs beyond 258047 vertices unsupported".into()));
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta(m: &[usize]) -> SimpleGraph {
        build(&FamilySpec::GeneralizedTheta { m: m.to_vec() }).unwrap()
    }

    #[test]
    fn theta_one_edge_plus_two_path_is_triangle() {
        let g = theta(&[1, 2]);
        assert!(are_isomorphic(&g, &SimpleGraph::complete(3)));
        assert_eq!((g.n_vertices(), g.n_edges()), (3, 3));
    }

    #[test]
    fn ring_1232_counts() {
        let g = build(&FamilySpec::RingOfCliques { a: vec![1, 2, 3, 2] }).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (8, 21));
    }

    #[test]
    fn unit_clique_theta_is_c4() {
        let g = build(&FamilySpec::CliqueTheta(CliqueThetaSpec::new(
            1,
            vec![vec![1], vec![1]],
            1,
        )))
        .unwrap();
        assert!(are_isomorphic(&g, &SimpleGraph::cycle(4)));
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(build(&FamilySpec::RingOfCliques { a: vec![2, 2] }).is_err());
        assert!(build(&FamilySpec::CliquePath { a: vec![] }).is_err());
        assert!(build(&FamilySpec::CliquePath { a: vec![2, 0] }).is_err());
        assert!(build(&FamilySpec::GeneralizedTheta { m: vec![1, 1] }).is_err());
        assert!(build(&FamilySpec::CliqueTheta(CliqueThetaSpec::new(1, vec![], 1))).is_err());
        assert!(build(&FamilySpec::CliqueTheta(CliqueThetaSpec::new(0, vec![vec![1]], 1))).is_err());
    }

    #[test]
    fn join_examples() {
        let k2 = join_complete(&SimpleGraph::complete(1), 1);
        assert!(are_isomorphic(&k2, &SimpleGraph::complete(2)));
        let wheel = join_complete(&SimpleGraph::cycle(4), 1);
        assert_eq!((wheel.n_vertices(), wheel.n_edges()), (5, 8));
        let k4 = join_complete(&SimpleGraph::complete(2), 2);
        assert!(are_isomorphic(&k4, &SimpleGraph::complete(4)));
    }

    #[test]
    fn blow_up_examples() {
        let k3 = blow_up_vertex(&SimpleGraph::complete(2), 0, 2).unwrap();
        assert!(are_isomorphic(&k3, &SimpleGraph::complete(3)));

        let g = build(&FamilySpec::RingOfCliques { a: vec![1, 2, 3, 2] }).unwrap();
        let same = blow_up_vertex(&g, 3, 1).unwrap();
        assert_eq!(same, g);

        // Blowing up the centre of P3 gives K4 minus an edge.
        let diamond = blow_up_vertex(&SimpleGraph::path(3), 1, 2).unwrap();
        let want = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]);
        assert!(are_isomorphic(&diamond, &want));

        assert!(blow_up_vertex(&SimpleGraph::path(3), 7, 2).is_err());
    }

    #[test]
    fn theta_translation_is_isomorphic() {
        for m in [vec![2, 2], vec![2, 2, 2], vec![3, 3], vec![2, 3, 4], vec![4, 4]] {
            let spec = theta_as_clique_theta(&m).unwrap();
            let direct = theta(&m);
            let translated = build(&FamilySpec::CliqueTheta(spec)).unwrap();
            assert!(are_isomorphic(&direct, &translated), "m={m:?}");
        }
        assert_eq!(
            theta_as_clique_theta(&[2, 2]).unwrap(),
            CliqueThetaSpec::new(1, vec![vec![1], vec![1]], 1)
        );
        assert!(matches!(theta_as_clique_theta(&[1, 2]), Err(GraphError::UnsupportedLength(1))));
    }

    #[test]
    fn theta_translation_known_isomorphs() {
        // Theta(2,2,2) is K_{2,3}; Theta(3,3) is C6.
        let k23 = {
            let mut g = SimpleGraph::new(5);
            for u in 0..2 {
                for v in 2..5 {
                    g.add_edge(u, v);
                }
            }
            g
        };
        assert!(are_isomorphic(&theta(&[2, 2, 2]), &k23));
        assert!(are_isomorphic(&theta(&[3, 3]), &SimpleGraph::cycle(6)));
    }

    #[test]
    fn vertex_counts_match_formulas() {
        for a in [vec![1], vec![2, 3], vec![1, 2, 1], vec![3, 3, 3, 3]] {
            let g = build(&FamilySpec::CliquePath { a: a.clone() }).unwrap();
            assert_eq!(g.n_vertices(), a.iter().sum::<usize>());
        }
        for a in [vec![1, 1, 1], vec![2, 3, 1, 2], vec![3, 2, 3, 2, 1]] {
            let g = build(&FamilySpec::RingOfCliques { a: a.clone() }).unwrap();
            assert_eq!(g.n_vertices(), a.iter().sum::<usize>());
        }
        for t in [
            CliqueThetaSpec::new(1, vec![vec![2, 2], vec![3], vec![1, 2, 1]], 2),
            CliqueThetaSpec::new(2, vec![vec![1]], 3),
        ] {
            let g = build(&FamilySpec::CliqueTheta(t.clone())).unwrap();
            assert_eq!(g.n_vertices(), t.n_vertices());
        }
    }

    #[test]
    fn ring_rotation_and_reversal_invariance() {
        let base: Vec<usize> = vec![1, 2, 3, 2];
        let g = build(&FamilySpec::RingOfCliques { a: base.clone() }).unwrap();
        for rot in 0..base.len() {
            let mut a = base.clone();
            a.rotate_left(rot);
            let h = build(&FamilySpec::RingOfCliques { a: a.clone() }).unwrap();
            assert!(are_isomorphic(&g, &h), "rotation {rot}");
            a.reverse();
            let h = build(&FamilySpec::RingOfCliques { a }).unwrap();
            assert!(are_isomorphic(&g, &h), "reversal of rotation {rot}");
        }
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = FamilySpec::CliqueTheta(CliqueThetaSpec::new(
            1,
            vec![vec![2, 2], vec![3], vec![1, 2, 1]],
            2,
        ));
        let s = serde_json::to_string(&spec).unwrap();
        assert_eq!(s, r#"{"family":"clique_theta","j":1,"S":[[2,2],[3],[1,2,1]],"k":2}"#);
        let back: FamilySpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, spec);

        let ring: FamilySpec = serde_json::from_str(r#"{"family":"ring_of_cliques","a":[1,2,3,2]}"#).unwrap();
        assert_eq!(ring, FamilySpec::RingOfCliques { a: vec![1, 2, 3, 2] });
    }

    #[test]
    fn graph6_known_strings() {
        // K3 is "Bw"; the 4-cycle 0-1-2-3-0 is "Cr".
        assert_eq!(to_graph6(&SimpleGraph::complete(3)).unwrap(), "Bw");
        let k3 = from_graph6("Bw").unwrap();
        assert!(are_isomorphic(&k3, &SimpleGraph::complete(3)));
        let c4 = from_graph6(&to_graph6(&SimpleGraph::cycle(4)).unwrap()).unwrap();
        assert!(are_isomorphic(&c4, &SimpleGraph::cycle(4)));
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("B").is_err());
        assert!(from_graph6("Bw ").is_ok());
        assert!(from_graph6("B\u{1}").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn graph6_round_trip(n in 0usize..12, seed in any::<u64>()) {
                let mut g = SimpleGraph::new(n);
                let mut state = seed | 1;
                for u in 0..n {
                    for v in u + 1..n {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        if state >> 63 == 1 {
                            g.add_edge(u, v);
                        }
                    }
                }
                let s = to_graph6(&g).unwrap();
                let back = from_graph6(&s).unwrap();
                prop_assert_eq!(back, g);
            }
        }
    }
}
