//! Simple undirected graphs: ingestion, named families and structural queries.
//!
//! Vertices are `0..n`. A [`Graph`] is frozen once built; every downstream
//! module relies on the degree sequence never changing.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair stored once as `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    /// Sorted neighbor lists.
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeats and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Construction("a graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            check_edge(n, u, v).map_err(Error::Construction)?;
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::Construction(format!("duplicate edge {u}-{v}")));
            }
        }
        Ok(Self::from_canonical(n, set))
    }

    fn from_canonical(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &set {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }
        Self { n, edges: set.into_iter().collect(), adjacency }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }

    pub fn is_regular(&self) -> bool {
        let p = self.degree_profile();
        p.delta_min == p.delta_max
    }

    /// First isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.adjacency[v].is_empty())
    }

    pub(crate) fn require_no_isolated(&self) -> Result<()> {
        match self.isolated_vertex() {
            Some(v) => Err(Error::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        let components = self.connected_components().len();
        if components == 1 {
            Ok(())
        } else {
            Err(Error::Disconnected { components })
        }
    }

    /// Maximal connected vertex sets, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// A proper 2-coloring (`false`/`true` per vertex) when one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].expect("colored on push");
                for &w in &self.adjacency[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.expect("all colored")).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let set = self.edges.iter().copied().chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift))).collect();
        Self::from_canonical(self.n + other.n, set)
    }

    /// Writes the edge-list format accepted by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, m={})", self.n, self.edges.len())
    }
}

fn check_edge(n: usize, u: usize, v: usize) -> std::result::Result<(), String> {
    if u >= n || v >= n {
        return Err(format!("edge {u}-{v} references a vertex outside 0..{n}"));
    }
    if u == v {
        return Err(format!("self-loop at vertex {u}"));
    }
    Ok(())
}

/// Degree sequence summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub delta_min: usize,
    pub delta_max: usize,
    /// Smallest degree strictly greater than 1.
    pub delta_star: Option<usize>,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let degrees = g.degrees();
        let delta_min = degrees.iter().copied().min().unwrap_or(0);
        let delta_max = degrees.iter().copied().max().unwrap_or(0);
        let delta_star = degrees.iter().copied().filter(|&d| d > 1).min();
        Self { degrees, delta_min, delta_max, delta_star }
    }
}

/// Parses the whitespace-separated edge-list format.
///
/// ```text
/// # comment
/// n m
/// u v      (m lines, 0-based)
/// ```
///
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing \"n m\" header".into()))?;
    let (n, m) = parse_pair(header).map_err(|e| err(header_line, format!("bad header: {e}")))?;
    if n == 0 {
        return Err(err(header_line, "vertex count must be at least 1".into()));
    }

    let mut set = BTreeSet::new();
    let mut last_line = header_line;
    for (line, content) in lines {
        last_line = line;
        let (u, v) = parse_pair(content).map_err(|e| err(line, e))?;
        check_edge(n, u, v).map_err(|e| err(line, e))?;
        if !set.insert((u.min(v), u.max(v))) {
            return Err(err(line, format!("duplicate edge {u}-{v}")));
        }
        if set.len() > m {
            return Err(err(line, format!("more edges than the declared {m}")));
        }
    }
    if set.len() != m {
        return Err(err(last_line, format!("header declares {m} edges but {} were listed", set.len())));
    }
    Ok(Graph::from_canonical(n, set))
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let mut it = s.split_whitespace();
    let a = it.next().ok_or("expected two integers")?;
    let b = it.next().ok_or("expected two integers")?;
    if it.next().is_some() {
        return Err("expected exactly two integers".into());
    }
    let a = a.parse().map_err(|_| format!("not a non-negative integer: {a:?}"))?;
    let b = b.parse().map_err(|_| format!("not a non-negative integer: {b:?}"))?;
    Ok((a, b))
}

/// Named graph families with their canonical labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `P_n`: `0 - 1 - ... - (n-1)`.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `K_{1,n-1}` with the center at vertex 0; `n` is the total order.
    Star(usize),
    Complete(usize),
    /// `K_{a,b}`: part `0..a` joined to part `a..a+b`.
    CompleteBipartite(usize, usize),
    /// `C_4` on `0..4` with a pendant vertex 4 attached to vertex 0.
    C4Pendant,
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        let bad = |msg: &str| Err(Error::Construction(format!("{self}: {msg}")));
        let edges: Vec<(usize, usize)> = match self {
            Family::Path(n) => {
                if n < 1 {
                    return bad("needs n >= 1");
                }
                (1..n).map(|i| (i - 1, i)).collect()
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return bad("needs n >= 3");
                }
                (0..n).map(|i| (i, (i + 1) % n)).collect()
            }
            Family::Star(n) => {
                if n < 2 {
                    return bad("needs n >= 2");
                }
                (1..n).map(|i| (0, i)).collect()
            }
            Family::Complete(n) => {
                if n < 1 {
                    return bad("needs n >= 1");
                }
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
            }
            Family::CompleteBipartite(a, b) => {
                if a < 1 || b < 1 {
                    return bad("both parts need at least one vertex");
                }
                (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect()
            }
            Family::C4Pendant => vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)],
        };
        Graph::from_edges(self.order(), edges)
    }

    pub fn order(self) -> usize {
        match self {
            Family::Path(n) | Family::Cycle(n) | Family::Star(n) | Family::Complete(n) => n,
            Family::CompleteBipartite(a, b) => a + b,
            Family::C4Pendant => 5,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path({n})"),
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Star(n) => write!(f, "star({n})"),
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
            Family::C4Pendant => write!(f, "c4_pendant"),
        }
    }
}

/// Convenience wrapper around [`Family::build`].
pub fn build_family(family: Family) -> Result<Graph> {
    family.build()
}

/// Edge probabilities sampled per graph by [`random_connected_graphs`].
pub const ER_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.7];

/// Deterministic stream of connected Erdős–Rényi graphs.
///
/// Each sample draws its order uniformly from `orders` and its edge
/// probability from [`ER_PROBABILITIES`]; disconnected samples are discarded.
pub fn random_connected_graphs(seed: u64, orders: std::ops::RangeInclusive<usize>, count: usize) -> Result<Vec<Graph>> {
    if orders.is_empty() || *orders.start() < 2 {
        return Err(Error::Construction(format!(
            "random graphs need orders >= 2, got {}..={}",
            orders.start(),
            orders.end()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(orders.clone());
        let p = ER_PROBABILITIES[rng.gen_range(0..ER_PROBABILITIES.len())];
        let mut set = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    set.insert((i, j));
                }
            }
        }
        let g = Graph::from_canonical(n, set);
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}
