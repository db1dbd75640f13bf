use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::flat::Flat;
use crate::arrangements::Hyperplane;
use crate::error::{Error, Result};

/// Edge `from -> to` labeled `k` records `x_to = 2^k x_from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: i64,
}

/// Directed labeled graph on `1..=n` built from multiplicative hyperplanes,
/// with loop closure applied: a component touching a loop is all loops and
/// keeps no edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrangementGraph {
    n: usize,
    loops: BTreeSet<usize>,
    edges: Vec<Edge>,
}

impl ArrangementGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn loops(&self) -> &BTreeSet<usize> {
        &self.loops
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    fn neighbours(&self) -> Vec<Vec<(usize, i64)>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for e in &self.edges {
            adj[e.from].push((e.to, e.label));
        }
        adj
    }

    /// Components of the underlying undirected graph, smallest vertex first.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.neighbours();
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Per-vertex potentials `X_v` with `X_to = X_from + label` along every
    /// edge, zero at each component's smallest vertex. `None` on a conflict.
    fn potentials(&self) -> Option<Vec<i64>> {
        let adj = self.neighbours();
        let mut pot: Vec<Option<i64>> = vec![None; self.n + 1];
        for start in 1..=self.n {
            if pot[start].is_some() {
                continue;
            }
            pot[start] = Some(0);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let pv = pot[v].expect("visited");
                for &(w, label) in &adj[v] {
                    match pot[w] {
                        None => {
                            pot[w] = Some(pv + label);
                            queue.push_back(w);
                        }
                        Some(pw) if pw != pv + label => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(pot.into_iter().map(|p| p.unwrap_or(0)).collect())
    }
}

/// Builds the graph of a set of multiplicative hyperplanes: `x_i = 2^k x_j`
/// gives `j -> i` labeled `k` and `i -> j` labeled `-k`; `x_i = 0` a loop at
/// `i`.
pub fn graph_of(n: usize, hyperplanes: &[Hyperplane]) -> Result<ArrangementGraph> {
    let mut loops = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for h in hyperplanes {
        match *h {
            Hyperplane::Coordinate { var } if (1..=n).contains(&var) => {
                loops.insert(var);
            }
            Hyperplane::Ratio { lhs, rhs, power } if lhs <= n && rhs <= n && lhs >= 1 && rhs >= 1 => {
                let k = i64::from(power);
                edges.insert(Edge { from: rhs, to: lhs, label: k });
                edges.insert(Edge { from: lhs, to: rhs, label: -k });
            }
            Hyperplane::Difference { .. } => {
                return Err(Error::InvalidParameter(
                    "graph model needs multiplicative hyperplanes".into(),
                ))
            }
            _ => return Err(Error::InvalidParameter(format!("{h} is outside 1..={n}"))),
        }
    }
    let mut g = ArrangementGraph {
        n,
        loops: BTreeSet::new(),
        edges: edges.into_iter().collect(),
    };
    for comp in g.components() {
        if comp.iter().any(|v| loops.contains(v)) {
            g.loops.extend(comp);
        }
    }
    let looped = g.loops.clone();
    g.edges.retain(|e| !looped.contains(&e.from));
    Ok(g)
}

/// Whether all directed paths between two vertices carry the same label sum.
pub fn is_consistent(g: &ArrangementGraph) -> bool {
    g.potentials().is_some()
}

pub fn flat_of(g: &ArrangementGraph) -> Result<Flat> {
    let pot = g.potentials().ok_or(Error::InconsistentGraph)?;
    let zeros: Vec<usize> = g.loops.iter().copied().collect();
    let components: Vec<Vec<(usize, i64)>> = g
        .components()
        .into_iter()
        .filter(|c| !g.loops.contains(&c[0]))
        .map(|c| c.into_iter().map(|v| (v, pot[v])).collect())
        .collect();
    Flat::from_parts(g.n, &zeros, &components)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Vec<Hyperplane> {
        vec![
            Hyperplane::Coordinate { var: 1 },
            Hyperplane::ratio(1, 2, 2),
            Hyperplane::ratio(4, 3, 1),
            Hyperplane::ratio(5, 4, 3),
            Hyperplane::ratio(5, 3, 4),
        ]
    }

    #[test]
    fn example_graph() {
        let g = graph_of(6, &example()).unwrap();
        assert_eq!(g.loops().iter().copied().collect::<Vec<_>>(), vec![1, 2]);
        assert!(g.edges().iter().all(|e| (3..=5).contains(&e.from)));
        assert_eq!(g.edges().len(), 6);
        assert_eq!(g.components(), vec![vec![1], vec![2], vec![3, 4, 5], vec![6]]);
        assert!(is_consistent(&g));
        let f = flat_of(&g).unwrap();
        assert_eq!(f.dimension(), 2);
        assert_eq!(f, Flat::from_hyperplanes(6, &example()).unwrap());
    }

    #[test]
    fn conflicting_cycle() {
        let mut hs = example();
        hs.push(Hyperplane::ratio(5, 3, 5));
        let g = graph_of(6, &hs).unwrap();
        assert!(!is_consistent(&g));
        assert!(matches!(flat_of(&g), Err(Error::InconsistentGraph)));
    }

    #[test]
    fn trivial_graphs() {
        let g = graph_of(3, &[]).unwrap();
        assert!(g.edges().is_empty() && g.loops().is_empty());
        assert!(is_consistent(&g));
        assert_eq!(flat_of(&g).unwrap(), Flat::ambient(3));

        let g = graph_of(3, &[Hyperplane::Coordinate { var: 1 }]).unwrap();
        assert_eq!(g.loops().iter().copied().collect::<Vec<_>>(), vec![1]);

        let all: Vec<_> = (1..=3).map(|var| Hyperplane::Coordinate { var }).collect();
        assert_eq!(flat_of(&graph_of(3, &all).unwrap()).unwrap().dimension(), 0);
    }
}
