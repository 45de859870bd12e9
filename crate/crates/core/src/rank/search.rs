//! Exact search for dependence coefficients.
//!
//! For a fixed support `T` (rows with real coefficients), each column must
//! have its maximum `α_i + a_{i,c}` over `T` attained either by a ghost entry
//! or by two entries at once. Every such choice is a set of difference
//! constraints `α_l - α_i <= w`, so feasibility is a negative-cycle test on a
//! `|T|`-vertex graph, kept closed incrementally during a depth-first search
//! over the per-column choices.

use itertools::Itertools;
use num_traits::Zero;

use crate::semiring::{MaxPlusScalar, Rational};
use crate::tensor::TropMatrix;

/// `bound[i][l]` is the tightest known bound on `α_l - α_i`.
#[derive(Clone)]
struct Closure {
    bound: Vec<Vec<Option<Rational>>>,
}

impl Closure {
    fn new(t: usize) -> Self {
        let mut bound = vec![vec![None; t]; t];
        for (i, row) in bound.iter_mut().enumerate() {
            row[i] = Some(Rational::zero());
        }
        Closure { bound }
    }

    /// Adds `α_v - α_u <= w`; `false` when that closes a negative cycle.
    fn add(&mut self, u: usize, v: usize, w: &Rational) -> bool {
        if self.bound[u][v].as_ref().is_some_and(|b| b <= w) {
            return true;
        }
        if let Some(back) = &self.bound[v][u] {
            if back + w < Rational::zero() {
                return false;
            }
        }
        let t = self.bound.len();
        let into_u: Vec<Option<Rational>> = (0..t).map(|x| self.bound[x][u].clone()).collect();
        let from_v = self.bound[v].clone();
        for x in 0..t {
            let Some(xu) = &into_u[x] else { continue };
            for y in 0..t {
                let Some(vy) = &from_v[y] else { continue };
                let via = xu + w + vy;
                if self.bound[x][y].as_ref().is_none_or(|b| via < *b) {
                    self.bound[x][y] = Some(via);
                }
            }
        }
        true
    }

    /// A feasible point: shortest distances from a virtual source joined to
    /// every vertex by a zero edge.
    fn point(&self) -> Vec<Rational> {
        let t = self.bound.len();
        (0..t)
            .map(|i| {
                (0..t)
                    .filter_map(|j| self.bound[j][i].clone())
                    .fold(Rational::zero(), |acc, b| acc.min(b))
            })
            .collect()
    }
}

/// One way for a column to come out ghost: a list of `(u, v, w)` constraints.
type Choice = Vec<(usize, usize, Rational)>;

fn column_choices(entries: &[(usize, Rational, bool)]) -> Vec<Choice> {
    let dominate = |top: usize, p_top: &Rational, skip: Option<usize>| -> Choice {
        entries
            .iter()
            .filter(|(l, _, _)| *l != top && Some(*l) != skip)
            .map(|(l, p, _)| (top, *l, p_top - p))
            .collect()
    };
    let mut out = Vec::new();
    for (i, p, ghost) in entries {
        if *ghost {
            out.push(dominate(*i, p, None));
        }
    }
    for ((i, p, _), (l, q, _)) in entries.iter().tuple_combinations() {
        let mut choice = dominate(*i, p, Some(*l));
        choice.push((*i, *l, p - q));
        choice.push((*l, *i, q - p));
        out.push(choice);
    }
    out
}

fn search_support(a: &TropMatrix, support: &[usize]) -> Option<Vec<Rational>> {
    let mut columns: Vec<Vec<Choice>> = Vec::new();
    for c in 0..a.cols() {
        let entries: Vec<(usize, Rational, bool)> = support
            .iter()
            .enumerate()
            .filter_map(|(k, &r)| {
                let x = a.at(r, c);
                x.magnitude().map(|p| (k, p.clone(), x.is_ghost()))
            })
            .collect();
        if entries.is_empty() {
            continue;
        }
        let choices = column_choices(&entries);
        if choices.is_empty() {
            return None;
        }
        columns.push(choices);
    }
    columns.sort_by_key(Vec::len);

    fn descend(columns: &[Vec<Choice>], state: &Closure) -> Option<Closure> {
        let Some((first, rest)) = columns.split_first() else {
            return Some(state.clone());
        };
        for choice in first {
            let mut next = state.clone();
            if choice.iter().all(|(u, v, w)| next.add(*u, *v, w)) {
                if let Some(done) = descend(rest, &next) {
                    return Some(done);
                }
            }
        }
        None
    }

    descend(&columns, &Closure::new(support.len())).map(|c| c.point())
}

/// Coefficients making the rows of `a` combine to a ghost vector, or `None`
/// when the rows are independent. Supports are tried by increasing size,
/// lexicographically; `full_support` restricts the search to every row
/// carrying a real coefficient.
pub(crate) fn search_witness(a: &TropMatrix, full_support: bool) -> Option<Vec<MaxPlusScalar>> {
    let m = a.rows();
    let sizes = if full_support { m..=m } else { 1..=m };
    for size in sizes {
        for support in (0..m).combinations(size) {
            if let Some(point) = search_support(a, &support) {
                let mut alpha = vec![MaxPlusScalar::NegInf; m];
                for (r, x) in support.iter().zip(point) {
                    alpha[*r] = MaxPlusScalar::Finite(x);
                }
                return Some(alpha);
            }
        }
    }
    None
}
