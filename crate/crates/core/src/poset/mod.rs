//! Intersection posets of multiplicative arrangements.
//!
//! Flats are canonicalized through the labeled graph model ([`graph_of`],
//! [`Flat`]); an exact linear-algebra construction ([`LinearPoset`]) is kept
//! as an independent cross-check.

mod flat;
mod graph;
mod linear;

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use serde::Serialize;

use crate::arrangements::{hyperplanes_of, ArrangementSpec, Flavor};
use crate::error::{Error, Result};
use crate::IntPolynomial;

pub use flat::{Component, Flat};
pub use graph::{flat_of, graph_of, is_consistent, ArrangementGraph, Edge};
pub use linear::{forced_zeros, normal, rank, rref, LinearPoset, Row};

/// Largest dimension accepted by [`build_poset`].
pub const MAX_POSET_DIMENSION: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetNode {
    pub flat: Flat,
    /// `mu(ambient, flat)`.
    pub mobius: i64,
    /// Flats one dimension up that contain this one.
    pub covers: Vec<usize>,
    /// Flats one dimension down contained in this one.
    pub covered_by: Vec<usize>,
}

/// Intersection poset ordered by reverse inclusion. Node 0 is the ambient
/// space; nodes are sorted by decreasing dimension, then canonical form.
#[derive(Debug, Clone)]
pub struct Poset {
    n: usize,
    nodes: Vec<PosetNode>,
}

impl Poset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[PosetNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct NodeDump {
            id: usize,
            dimension: usize,
            mobius: i64,
            zeros: Vec<usize>,
            components: Vec<Component>,
            covers: Vec<usize>,
        }
        #[derive(Serialize)]
        struct Dump {
            n: usize,
            flats: Vec<NodeDump>,
            charpoly: String,
        }
        let dump = Dump {
            n: self.n,
            flats: self
                .nodes
                .iter()
                .enumerate()
                .map(|(id, node)| NodeDump {
                    id,
                    dimension: node.flat.dimension(),
                    mobius: node.mobius,
                    zeros: node.flat.zero_set(),
                    components: node.flat.components(),
                    covers: node.covers.clone(),
                })
                .collect(),
            charpoly: charpoly_from_poset(self).to_string(),
        };
        serde_json::to_value(dump).expect("poset dump serializes")
    }
}

/// Möbius values from the bottom element (index 0). Indices must be sorted by
/// decreasing dimension; `subset(x, y)` tests flat `x` contained in flat `y`.
pub(crate) fn mobius_top_down(dims: &[usize], subset: impl Fn(usize, usize) -> bool) -> Vec<i64> {
    let mut mu = vec![0i64; dims.len()];
    for x in 0..dims.len() {
        if x == 0 {
            mu[0] = 1;
            continue;
        }
        mu[x] = -(0..x)
            .filter(|&y| dims[y] > dims[x] && subset(x, y))
            .map(|y| mu[y])
            .sum::<i64>();
    }
    mu
}

fn require_multiplicative(spec: &ArrangementSpec, limit: usize) -> Result<()> {
    if spec.flavor() != Flavor::Multiplicative {
        return Err(Error::InvalidParameter(
            "intersection posets are built for the multiplicative flavor".into(),
        ));
    }
    if spec.n() > limit {
        return Err(Error::Guard {
            what: format!("poset in dimension {}", spec.n()),
            limit: limit as u64,
        });
    }
    Ok(())
}

pub fn build_poset(spec: &ArrangementSpec) -> Result<Poset> {
    require_multiplicative(spec, MAX_POSET_DIMENSION)?;
    let n = spec.n();
    let hyperplanes = hyperplanes_of(spec);

    let mut flats = vec![Flat::ambient(n)];
    let mut seen: HashSet<Flat> = flats.iter().cloned().collect();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for h in &hyperplanes {
            let next = flats[i].meet(h)?;
            if !seen.insert(next.clone()) {
                continue;
            }
            queue.push_back(flats.len());
            flats.push(next);
        }
    }
    flats.sort_by(|a, b| b.dimension().cmp(&a.dimension()).then_with(|| a.cmp(b)));

    let dims: Vec<usize> = flats.iter().map(Flat::dimension).collect();
    let mobius = mobius_top_down(&dims, |x, y| flats[x].is_subset_of(&flats[y]));

    let mut nodes: Vec<PosetNode> = flats
        .into_iter()
        .zip(mobius)
        .map(|(flat, mobius)| PosetNode {
            flat,
            mobius,
            covers: Vec::new(),
            covered_by: Vec::new(),
        })
        .collect();
    // Ranks are codimensions, so covering pairs differ by exactly one dimension.
    for x in 0..nodes.len() {
        for y in 0..x {
            if dims[y] == dims[x] + 1 && nodes[x].flat.is_subset_of(&nodes[y].flat) {
                nodes[x].covers.push(y);
                nodes[y].covered_by.push(x);
            }
        }
    }
    Ok(Poset { n, nodes })
}

/// `sum mu(ambient, x) t^dim(x)` over the poset.
pub fn charpoly_from_poset(poset: &Poset) -> IntPolynomial {
    let mut coeffs = vec![BigInt::from(0); poset.n + 1];
    for node in &poset.nodes {
        coeffs[node.flat.dimension()] += node.mobius;
    }
    IntPolynomial::new(coeffs)
}

/// Characteristic polynomial through row spaces of normals.
pub fn charpoly_linear(spec: &ArrangementSpec) -> Result<IntPolynomial> {
    require_multiplicative(spec, 4)?;
    let lp = LinearPoset::<i64>::build(spec.n(), &hyperplanes_of(spec))?;
    let mut order: Vec<usize> = (0..lp.bases.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(lp.dimension(i)));
    let dims: Vec<usize> = order.iter().map(|&i| lp.dimension(i)).collect();
    let mu = mobius_top_down(&dims, |x, y| lp.is_subset(order[x], order[y]));
    let mut coeffs = vec![BigInt::from(0); spec.n() + 1];
    for (d, m) in dims.into_iter().zip(mu) {
        coeffs[d] += m;
    }
    Ok(IntPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::{Preset, PresetKind, PairShifts};

    fn preset(kind: PresetKind, n: usize, m: usize) -> ArrangementSpec {
        Preset::new(kind, n, m).unwrap().spec()
    }

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn a21_poset() {
        let poset = build_poset(&preset(PresetKind::A, 2, 1)).unwrap();
        assert_eq!(poset.len(), 7);
        let mu: Vec<i64> = poset.nodes().iter().map(|x| x.mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, -1, -1, -1, 4]);
        assert_eq!(charpoly_from_poset(&poset), p("t^2-5t+4"));
        assert_eq!(poset.nodes()[0].covered_by.len(), 5);
        assert_eq!(poset.nodes()[6].covers.len(), 5);
    }

    #[test]
    fn small_posets() {
        assert_eq!(build_poset(&preset(PresetKind::A, 1, 1)).unwrap().len(), 2);
        let b21 = build_poset(&preset(PresetKind::B, 2, 1)).unwrap();
        assert_eq!(b21.len(), 5);
        assert_eq!(charpoly_from_poset(&b21), p("t^2-3t+2"));
        assert_eq!(
            charpoly_from_poset(&build_poset(&preset(PresetKind::A, 3, 1)).unwrap()),
            p("t^3-12t^2+41t-30")
        );
        let empty = ArrangementSpec::new(2, Flavor::Multiplicative, PairShifts::new(), false).unwrap();
        assert_eq!(charpoly_from_poset(&build_poset(&empty).unwrap()), p("t^2"));
    }

    #[test]
    fn linear_route_agrees() {
        for kind in [PresetKind::A, PresetKind::B, PresetKind::Gamma, PresetKind::Delta] {
            for (n, m) in [(2, 1), (2, 2), (3, 1)] {
                let spec = preset(kind, n, m);
                let graph = charpoly_from_poset(&build_poset(&spec).unwrap());
                assert_eq!(graph, charpoly_linear(&spec).unwrap(), "{kind:?} {n} {m}");
            }
        }
    }

    #[test]
    fn guards() {
        assert!(matches!(
            build_poset(&preset(PresetKind::A, 6, 1)),
            Err(Error::Guard { .. })
        ));
        assert!(build_poset(&preset(PresetKind::C, 2, 1)).is_err());
    }

    #[test]
    fn json_dump() {
        let v = build_poset(&preset(PresetKind::A, 2, 1)).unwrap().to_json();
        assert_eq!(v["flats"].as_array().unwrap().len(), 7);
        assert_eq!(v["charpoly"], "t^2 - 5*t + 4");
        assert_eq!(v["flats"][6]["zeros"], serde_json::json!([1, 2]));
    }
}
