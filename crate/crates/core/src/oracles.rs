//! Exact distance invariants by breadth-first search: excess, conditional
//! excess, degree diameter, Wiener and conditional Wiener indices.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;

/// All-pairs distances of a connected graph and the quantities derived from them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactInvariants {
    /// Row-major `n x n` shortest-path lengths.
    pub dist: Vec<Vec<usize>>,
    pub eccentricity: Vec<usize>,
    pub diameter: usize,
    pub wiener: u64,
    /// `S(v) = sum_u d(u, v)`.
    pub distance_sums: Vec<u64>,
    degrees: Vec<usize>,
}

impl ExactInvariants {
    pub fn new(g: &Graph) -> Result<Self> {
        g.require_connected()?;
        let n = g.order();
        let dist: Vec<Vec<usize>> = (0..n).map(|s| bfs(g, s)).collect();
        let eccentricity: Vec<usize> = dist.iter().map(|row| row.iter().copied().max().unwrap_or(0)).collect();
        let diameter = eccentricity.iter().copied().max().unwrap_or(0);
        let distance_sums: Vec<u64> = dist.iter().map(|row| row.iter().map(|&d| d as u64).sum()).collect();
        let wiener = distance_sums.iter().sum::<u64>() / 2;
        Ok(Self { dist, eccentricity, diameter, wiener, distance_sums, degrees: g.degrees() })
    }

    pub fn order(&self) -> usize {
        self.dist.len()
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.dist[u][v]
    }

    /// `e_k^beta(u) = |{v : d(u, v) > k and deg(v) >= beta}|`.
    pub fn conditional_excess(&self, u: usize, k: usize, beta: usize) -> usize {
        self.dist[u].iter().zip(&self.degrees).filter(|&(&d, &deg)| d > k && deg >= beta).count()
    }

    /// Plain `k`-excess of `u`.
    pub fn excess(&self, u: usize, k: usize) -> usize {
        self.conditional_excess(u, k, 0)
    }

    /// `e_k = max_v e_k(v)`.
    pub fn graph_excess(&self, k: usize) -> usize {
        (0..self.order()).map(|u| self.excess(u, k)).max().unwrap_or(0)
    }

    /// Largest distance between a vertex of degree `>= alpha` and one of degree
    /// `>= beta`; a vertex may pair with itself. `None` when no vertex
    /// qualifies for one of the thresholds.
    pub fn degree_diameter(&self, alpha: usize, beta: usize) -> Option<usize> {
        let mut best = None;
        for (i, row) in self.dist.iter().enumerate() {
            if self.degrees[i] < alpha {
                continue;
            }
            for (j, &d) in row.iter().enumerate() {
                if self.degrees[j] >= beta {
                    best = Some(best.map_or(d, |b: usize| b.max(d)));
                }
            }
        }
        best
    }

    /// `S_beta(v) = sum over u with deg(u) >= beta of d(u, v)`.
    pub fn conditional_distance(&self, v: usize, beta: usize) -> u64 {
        self.dist[v].iter().zip(&self.degrees).filter(|&(_, &deg)| deg >= beta).map(|(&d, _)| d as u64).sum()
    }

    /// `W_beta = (1/2) sum over v with deg(v) >= beta of S_beta(v)`.
    pub fn conditional_wiener(&self, beta: usize) -> u64 {
        self.qualifying(beta).map(|v| self.conditional_distance(v, beta)).sum::<u64>() / 2
    }

    /// Number of vertices with degree `>= beta`.
    pub fn qualifying_count(&self, beta: usize) -> usize {
        self.qualifying(beta).count()
    }

    fn qualifying(&self, beta: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&v| self.degrees[v] >= beta)
    }

    /// `sum_{k=0}^{D-1} e_k^beta(v)` with `D = D^(beta,beta)`.
    pub fn telescoped_distance(&self, v: usize, beta: usize) -> u64 {
        let top = self.degree_diameter(beta, beta).unwrap_or(0);
        (0..top).map(|k| self.conditional_excess(v, k, beta) as u64).sum()
    }

    /// Twice the excess-sum expression for `W_beta`, kept doubled so the
    /// comparison stays in integers.
    pub fn doubled_wiener_from_excess(&self, beta: usize) -> u64 {
        self.qualifying(beta).map(|v| self.telescoped_distance(v, beta)).sum()
    }
}

fn bfs(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn all_pairs_distances(g: &Graph) -> Result<ExactInvariants> {
    ExactInvariants::new(g)
}

pub fn conditional_excess(g: &Graph, u: usize, k: usize, beta: usize) -> Result<usize> {
    Ok(ExactInvariants::new(g)?.conditional_excess(u, k, beta))
}

pub fn graph_excess(g: &Graph, k: usize) -> Result<usize> {
    Ok(ExactInvariants::new(g)?.graph_excess(k))
}

pub fn degree_diameter(g: &Graph, alpha: usize, beta: usize) -> Result<Option<usize>> {
    Ok(ExactInvariants::new(g)?.degree_diameter(alpha, beta))
}

pub fn conditional_wiener(g: &Graph, beta: usize) -> Result<u64> {
    Ok(ExactInvariants::new(g)?.conditional_wiener(beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::Family;

    fn inv(f: Family) -> ExactInvariants {
        ExactInvariants::new(&f.build().unwrap()).unwrap()
    }

    #[test]
    fn wiener_fixtures() {
        assert_eq!(inv(Family::Cycle(4)).wiener, 8);
        for n in 2..8 {
            assert_eq!(inv(Family::Complete(n)).wiener, (n * (n - 1) / 2) as u64);
        }
        assert_eq!(inv(Family::Star(4)).distance_sums[0], 3);
    }

    #[test]
    fn disconnected_rejected() {
        let k3 = Family::Complete(3).build().unwrap();
        let two = k3.disjoint_union(&k3);
        assert_eq!(ExactInvariants::new(&two).unwrap_err(), Error::Disconnected { components: 2 });
        assert!(conditional_wiener(&two, 1).is_err());
    }

    #[test]
    fn excess_fixtures() {
        let p = inv(Family::C4Pendant);
        for u in 0..5 {
            assert_eq!(p.conditional_excess(u, 0, 1), 4);
            assert_eq!(p.excess(u, p.eccentricity[u]), 0);
        }
        assert_eq!(p.conditional_excess(4, 1, 2), 3);
        assert_eq!(inv(Family::Cycle(4)).graph_excess(1), 1);
        let c = inv(Family::Cycle(5));
        assert_eq!(c.graph_excess(0), 4);
        assert_eq!(c.graph_excess(c.diameter), 0);
    }

    #[test]
    fn degree_diameter_fixtures() {
        let p = inv(Family::C4Pendant);
        assert_eq!(p.degree_diameter(1, 1), Some(p.diameter));
        let s = inv(Family::Star(4));
        assert_eq!(s.degree_diameter(3, 3), Some(0));
        assert_eq!(s.degree_diameter(1, 3), Some(1));
        assert_eq!(s.degree_diameter(4, 1), None);
    }

    #[test]
    fn conditional_wiener_fixtures() {
        let p = inv(Family::C4Pendant);
        assert_eq!(p.conditional_wiener(1), p.wiener);
        assert_eq!(p.conditional_wiener(2), 8);
        assert_eq!(inv(Family::Star(4)).conditional_wiener(3), 0);
        assert_eq!(p.qualifying_count(2), 4);
    }

    #[test]
    fn excess_sum_identity_on_pendant() {
        let p = inv(Family::C4Pendant);
        for beta in 1..=4 {
            assert_eq!(p.doubled_wiener_from_excess(beta), 2 * p.conditional_wiener(beta));
            for v in 0..5 {
                if p.degrees[v] >= beta {
                    assert_eq!(p.telescoped_distance(v, beta), p.conditional_distance(v, beta));
                }
            }
        }
    }
}
