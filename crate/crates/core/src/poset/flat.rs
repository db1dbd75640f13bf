use std::collections::BTreeMap;

use serde::Serialize;

use crate::arrangements::Hyperplane;
use crate::error::{Error, Result};

/// Canonical form of an intersection of multiplicative hyperplanes.
///
/// Each coordinate is either forced to zero or tied to the smallest variable
/// of its component: `x_v = 2^offset * x_rep`. The representative has offset 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    cells: Vec<Cell>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Cell {
    Zero,
    Tied { rep: usize, offset: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    /// `(variable, offset)` with `x_var = 2^offset x_first`.
    pub members: Vec<(usize, i64)>,
}

impl Flat {
    /// The whole space `R^n`.
    pub fn ambient(n: usize) -> Self {
        Self {
            cells: (0..n).map(|v| Cell::Tied { rep: v, offset: 0 }).collect(),
        }
    }

    /// Builds a flat from zero-forced variables (1-based) and components given
    /// as `(variable, offset)` lists. Offsets are renormalized.
    pub fn from_parts(n: usize, zeros: &[usize], components: &[Vec<(usize, i64)>]) -> Result<Self> {
        let mut cells: Vec<Option<Cell>> = vec![None; n];
        for &z in zeros {
            if z == 0 || z > n || cells[z - 1].is_some() {
                return Err(Error::Invalid(format!("bad zero variable {z}")));
            }
            cells[z - 1] = Some(Cell::Zero);
        }
        for comp in components {
            let Some(&(rep_var, rep_off)) = comp.iter().min_by_key(|(v, _)| *v) else {
                return Err(Error::Invalid("empty component".into()));
            };
            for &(v, off) in comp {
                if v == 0 || v > n || cells[v - 1].is_some() {
                    return Err(Error::Invalid(format!("bad component variable {v}")));
                }
                cells[v - 1] = Some(Cell::Tied {
                    rep: rep_var - 1,
                    offset: off - rep_off,
                });
            }
        }
        let cells = cells
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| Error::Invalid(format!("variable {} unassigned", v + 1))))
            .collect::<Result<_>>()?;
        Ok(Self { cells })
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    /// Number of components not forced to zero.
    pub fn dimension(&self) -> usize {
        self.cells
            .iter()
            .enumerate()
            .filter(|&(v, c)| matches!(c, Cell::Tied { rep, .. } if *rep == v))
            .count()
    }

    pub fn is_zero(&self, var: usize) -> bool {
        self.cells[var - 1] == Cell::Zero
    }

    /// 1-based zero-forced variables.
    pub fn zero_set(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.is_zero(v)).collect()
    }

    /// Components in order of their smallest variable.
    pub fn components(&self) -> Vec<Component> {
        let mut by_rep: BTreeMap<usize, Vec<(usize, i64)>> = BTreeMap::new();
        for (v, c) in self.cells.iter().enumerate() {
            if let Cell::Tied { rep, offset } = c {
                by_rep.entry(*rep).or_default().push((v + 1, *offset));
            }
        }
        by_rep
            .into_values()
            .map(|members| Component { members })
            .collect()
    }

    fn zero_component(&mut self, var0: usize) {
        if let Cell::Tied { rep, .. } = self.cells[var0] {
            for c in &mut self.cells {
                if matches!(c, Cell::Tied { rep: r, .. } if *r == rep) {
                    *c = Cell::Zero;
                }
            }
        }
    }

    /// Intersection with one hyperplane. A relation that contradicts the
    /// component's offsets forces the whole component to zero.
    pub fn meet(&self, h: &Hyperplane) -> Result<Flat> {
        let mut out = self.clone();
        match *h {
            Hyperplane::Coordinate { var } => out.zero_component(var - 1),
            Hyperplane::Ratio { lhs, rhs, power } => {
                let (a, b) = (lhs - 1, rhs - 1);
                match (out.cells[a], out.cells[b]) {
                    (Cell::Zero, Cell::Zero) => {}
                    (Cell::Zero, Cell::Tied { .. }) => out.zero_component(b),
                    (Cell::Tied { .. }, Cell::Zero) => out.zero_component(a),
                    (Cell::Tied { rep: ra, offset: oa }, Cell::Tied { rep: rb, offset: ob }) => {
                        let p = i64::from(power);
                        if ra == rb {
                            if oa - ob != p {
                                out.zero_component(a);
                            }
                        } else {
                            // x_rb = 2^(oa - ob - p) x_ra
                            let delta = oa - ob - p;
                            let new_rep = ra.min(rb);
                            let rebase = if new_rep == ra { 0 } else { -delta };
                            for c in &mut out.cells {
                                if let Cell::Tied { rep, offset } = c {
                                    if *rep == rb {
                                        *c = Cell::Tied { rep: new_rep, offset: *offset + delta + rebase };
                                    } else if *rep == ra {
                                        *c = Cell::Tied { rep: new_rep, offset: *offset + rebase };
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Hyperplane::Difference { .. } => {
                return Err(Error::InvalidParameter(
                    "flats are only built for multiplicative hyperplanes".into(),
                ))
            }
        }
        Ok(out)
    }

    /// Intersection of all given hyperplanes, starting from `R^n`.
    pub fn from_hyperplanes(n: usize, hyperplanes: &[Hyperplane]) -> Result<Flat> {
        hyperplanes
            .iter()
            .try_fold(Flat::ambient(n), |f, h| f.meet(h))
    }

    /// Set inclusion `self ⊆ other`: every zero of `other` is a zero here, and
    /// every relation `x_v = 2^k x_w` of `other` holds here, either with the
    /// same offset in one component or because both sides are zero.
    pub fn is_subset_of(&self, other: &Flat) -> bool {
        self.cells.iter().zip(&other.cells).enumerate().all(|(v, pair)| match pair {
            (_, Cell::Zero) => self.cells[v] == Cell::Zero,
            (mine, Cell::Tied { rep, offset }) => match (mine, self.cells[*rep]) {
                (Cell::Zero, Cell::Zero) => true,
                (Cell::Tied { rep: r1, offset: o1 }, Cell::Tied { rep: r2, offset: o2 }) => {
                    r1 == &r2 && o1 - o2 == *offset
                }
                _ => false,
            },
        })
    }

    /// True when the flat already lies on `h`.
    pub fn contains_hyperplane_relation(&self, h: &Hyperplane) -> bool {
        self.meet(h).map(|m| &m == self).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meet_merges_components_with_offsets() {
        // x4 = 2 x3, x5 = 8 x4
        let f = Flat::from_hyperplanes(
            6,
            &[Hyperplane::ratio(4, 3, 1), Hyperplane::ratio(5, 4, 3)],
        )
        .unwrap();
        assert_eq!(f.dimension(), 4);
        let comps = f.components();
        assert_eq!(comps[2].members, vec![(3, 0), (4, 1), (5, 4)]);
        // x5 = 16 x3 is implied
        assert!(f.contains_hyperplane_relation(&Hyperplane::ratio(5, 3, 4)));
        // x5 = 32 x3 contradicts and zeros the component
        let g = f.meet(&Hyperplane::ratio(5, 3, 5)).unwrap();
        assert_eq!(g.zero_set(), vec![3, 4, 5]);
        assert_eq!(g.dimension(), 3);
    }

    #[test]
    fn rep_is_smallest_variable() {
        // x1 = 4 x2: x2 = 2^-2 x1
        let f = Flat::from_hyperplanes(2, &[Hyperplane::ratio(1, 2, 2)]).unwrap();
        assert_eq!(f.components()[0].members, vec![(1, 0), (2, -2)]);
        let g = Flat::from_parts(2, &[], &[vec![(2, 5), (1, 7)]]).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn inclusion() {
        let line = Flat::from_hyperplanes(2, &[Hyperplane::ratio(1, 2, 0)]).unwrap();
        let origin = Flat::from_hyperplanes(2, &[Hyperplane::Coordinate { var: 1 }, Hyperplane::Coordinate { var: 2 }]).unwrap();
        let ambient = Flat::ambient(2);
        assert!(origin.is_subset_of(&line));
        assert!(line.is_subset_of(&ambient));
        assert!(!line.is_subset_of(&origin));
        assert!(!ambient.is_subset_of(&line));
        let other = Flat::from_hyperplanes(2, &[Hyperplane::ratio(1, 2, 1)]).unwrap();
        assert!(!line.is_subset_of(&other));
        assert_eq!(origin.dimension(), 0);
    }
}
