//! The weighted digraph `G_A` of a square matrix and its multicycles.
//!
//! Vertices are `1..=n`; there is an edge `i -> j` with weight `a_{i,j}`
//! whenever `a_{i,j} != -inf`. An `n`-multicycle (vertex-disjoint simple
//! cycles covering every vertex) is the same thing as a permutation, so
//! multicycles are enumerated by factoring permutations into cycles.

use std::fmt;

use itertools::Itertools;

use crate::determinant::{det_auto, guard, BRUTE_LIMIT};
use crate::error::{Result, TropError};
use crate::semiring::TropScalar;
use crate::tensor::TropMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub weight: TropScalar,
    /// 2 for a `0^ν` edge of a reduced zero graph, 1 otherwise.
    pub multiplicity: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDigraph {
    n: usize,
    edges: Vec<Edge>,
}

impl WeightedDigraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edges sorted by `(source, target)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, source: usize, target: usize) -> Option<&Edge> {
        self.edges
            .iter()
            .find(|e| e.source == source && e.target == target)
    }

    /// Edges leaving `v`, counted with multiplicity.
    pub fn out_degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.source == v)
            .map(|e| usize::from(e.multiplicity))
            .sum()
    }

    /// Edges entering `v`, counted with multiplicity.
    pub fn in_degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.target == v)
            .map(|e| usize::from(e.multiplicity))
            .sum()
    }

    /// Keeps the edges of weight `0` or `0^ν`; a `0^ν` edge counts twice.
    pub fn reduced_zero_graph(&self) -> WeightedDigraph {
        let zero = TropScalar::real(0);
        let ghost_zero = TropScalar::ghost_of(0);
        WeightedDigraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|e| e.weight == zero || e.weight == ghost_zero)
                .map(|e| Edge {
                    multiplicity: if e.weight == ghost_zero { 2 } else { 1 },
                    ..e.clone()
                })
                .collect(),
        }
    }

    /// The graph without self-loops.
    pub fn without_loops(&self) -> WeightedDigraph {
        WeightedDigraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|e| e.source != e.target)
                .cloned()
                .collect(),
        }
    }

    /// Some simple cycle, or `None` when the graph is acyclic.
    ///
    /// Sources and sinks are pruned repeatedly; on what survives every vertex
    /// has an outgoing edge, so following edges must revisit a vertex.
    pub fn find_simple_cycle(&self) -> Option<Multicycle> {
        let n = self.n;
        let mut alive = vec![true; n + 1];
        alive[0] = false;
        loop {
            let mut changed = false;
            for v in 1..=n {
                if !alive[v] {
                    continue;
                }
                let has_out = self.edges.iter().any(|e| e.source == v && alive[e.target]);
                let has_in = self.edges.iter().any(|e| e.target == v && alive[e.source]);
                if !has_out || !has_in {
                    alive[v] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let start = (1..=n).find(|&v| alive[v])?;
        let mut position = vec![usize::MAX; n + 1];
        let mut walk = Vec::new();
        let mut v = start;
        while position[v] == usize::MAX {
            position[v] = walk.len();
            walk.push(v);
            v = self
                .edges
                .iter()
                .find(|e| e.source == v && alive[e.target])
                .expect("pruned graph has no sinks")
                .target;
        }
        let cycle = walk[position[v]..].to_vec();
        let weight = cycle_weight(&cycle, |s, t| {
            self.edge(s, t).expect("cycle edge").weight.clone()
        });
        Some(Multicycle {
            length: cycle.len(),
            cycles: vec![cycle],
            weight,
        })
    }

    /// One `i j weight` line per edge.
    pub fn to_edge_list(&self) -> String {
        self.edges
            .iter()
            .map(|e| format!("{} {} {}\n", e.source, e.target, e.weight))
            .collect()
    }
}

/// `G_A`.
pub fn digraph_of(a: &TropMatrix) -> Result<WeightedDigraph> {
    let n = a.require_square()?;
    let mut edges = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if !a.at(r, c).is_neg_inf() {
                edges.push(Edge {
                    source: r + 1,
                    target: c + 1,
                    weight: a.at(r, c).clone(),
                    multiplicity: 1,
                });
            }
        }
    }
    Ok(WeightedDigraph { n, edges })
}

pub fn out_degree(g: &WeightedDigraph, v: usize) -> usize {
    g.out_degree(v)
}

pub fn in_degree(g: &WeightedDigraph, v: usize) -> usize {
    g.in_degree(v)
}

pub fn find_simple_cycle(g: &WeightedDigraph) -> Option<Multicycle> {
    g.find_simple_cycle()
}

pub fn reduced_zero_graph(g: &WeightedDigraph) -> WeightedDigraph {
    g.reduced_zero_graph()
}

/// Vertex-disjoint simple cycles (1-based vertex lists) with total length and weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multicycle {
    pub cycles: Vec<Vec<usize>>,
    pub length: usize,
    pub weight: TropScalar,
}

impl Multicycle {
    /// Rebuilds the permutation on the covered vertices (0 for uncovered ones).
    pub fn as_permutation(&self, n: usize) -> Vec<usize> {
        let mut sigma = vec![0; n];
        for cycle in &self.cycles {
            for (k, &v) in cycle.iter().enumerate() {
                sigma[v - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        sigma
    }
}

impl fmt::Display for Multicycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "({})", cycle.iter().join(" "))?;
        }
        write!(f, " weight {}", self.weight)
    }
}

fn cycle_weight(cycle: &[usize], weight: impl Fn(usize, usize) -> TropScalar) -> TropScalar {
    (0..cycle.len())
        .map(|k| weight(cycle[k], cycle[(k + 1) % cycle.len()]))
        .product()
}

/// Factors a permutation (0-based images) into cycles of 1-based vertices,
/// each cycle starting at its least vertex.
fn cycles_of(sigma: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; sigma.len()];
    let mut cycles = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cycle.push(v + 1);
            v = sigma[v];
        }
        cycles.push(cycle);
    }
    cycles
}

/// All `n`-multicycles of `G_A`, one per permutation avoiding `-inf` entries.
pub fn full_multicycles(a: &TropMatrix) -> Result<Vec<Multicycle>> {
    let n = a.require_square()?;
    guard("multicycle enumeration", n, BRUTE_LIMIT)?;
    Ok((0..n)
        .permutations(n)
        .filter(|s| s.iter().enumerate().all(|(r, &c)| !a.at(r, c).is_neg_inf()))
        .map(|s| {
            let cycles = cycles_of(&s);
            let weight = cycles
                .iter()
                .map(|c| cycle_weight(c, |i, j| a.at(i - 1, j - 1).clone()))
                .product();
            Multicycle {
                cycles,
                length: n,
                weight,
            }
        })
        .collect())
}

/// ⊕ of the weights of all `k`-multicycles. For `k = n` this is `|A|`.
///
/// A `k`-multicycle lives on a `k`-vertex subset and is a permutation of it,
/// so the sum runs over principal `k x k` submatrices.
pub fn max_multicycle_weight(a: &TropMatrix, k: usize) -> Result<TropScalar> {
    let n = a.require_square()?;
    if k == 0 || k > n {
        return Err(TropError::IndexOutOfRange { index: k, bound: n });
    }
    guard("multicycle enumeration", n, BRUTE_LIMIT)?;
    if k == n {
        return Ok(full_multicycles(a)?.into_iter().map(|m| m.weight).sum());
    }
    Ok((0..n)
        .combinations(k)
        .map(|s| det_auto(&a.submatrix0(&s, &s)))
        .sum())
}
