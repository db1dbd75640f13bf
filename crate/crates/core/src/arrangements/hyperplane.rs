use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ArrangementSpec, Flavor};

/// Variables are 1-based, matching `x_1, ..., x_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Hyperplane {
    /// `x_var = 0`
    Coordinate { var: usize },
    /// `x_lhs = 2^power x_rhs`. A shift `k < 0` on the pair `(i, j)` is stored
    /// as `x_j = 2^(-k) x_i`; for `power == 0` always `lhs < rhs`.
    Ratio { lhs: usize, rhs: usize, power: u32 },
    /// `x_i - x_j = shift` with `i < j`.
    Difference { i: usize, j: usize, shift: i64 },
}

impl Hyperplane {
    /// `x_i = 2^k x_j` in canonical form.
    pub fn ratio(i: usize, j: usize, k: i64) -> Self {
        assert_ne!(i, j, "ratio hyperplane needs distinct variables");
        let power = u32::try_from(k.unsigned_abs()).expect("shift fits in u32");
        if k > 0 || (k == 0 && i < j) {
            Hyperplane::Ratio { lhs: i, rhs: j, power }
        } else {
            Hyperplane::Ratio { lhs: j, rhs: i, power }
        }
    }

    /// The variable pair `(min, max)`, or `None` for coordinate hyperplanes.
    pub fn pair(&self) -> Option<(usize, usize)> {
        match *self {
            Hyperplane::Coordinate { .. } => None,
            Hyperplane::Ratio { lhs, rhs, .. } => Some((lhs.min(rhs), lhs.max(rhs))),
            Hyperplane::Difference { i, j, .. } => Some((i.min(j), i.max(j))),
        }
    }

    /// The shift `k` this hyperplane has on its ordered pair `(min, max)`.
    pub fn signed_shift(&self) -> i64 {
        match *self {
            Hyperplane::Coordinate { .. } => 0,
            Hyperplane::Ratio { lhs, rhs, power } => {
                if lhs < rhs {
                    i64::from(power)
                } else {
                    -i64::from(power)
                }
            }
            Hyperplane::Difference { i, j, shift } => {
                if i < j {
                    shift
                } else {
                    -shift
                }
            }
        }
    }

    fn sort_key(&self) -> (u8, usize, usize, i64) {
        match self {
            Hyperplane::Coordinate { var } => (0, *var, 0, 0),
            _ => {
                let (a, b) = self.pair().expect("pair hyperplane");
                (1, a, b, self.signed_shift())
            }
        }
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Hyperplane::Coordinate { var } => write!(f, "x{var} = 0"),
            Hyperplane::Ratio { lhs, rhs, power: 0 } => write!(f, "x{lhs} = x{rhs}"),
            Hyperplane::Ratio { lhs, rhs, power: 1 } => write!(f, "x{lhs} = 2*x{rhs}"),
            Hyperplane::Ratio { lhs, rhs, power } => write!(f, "x{lhs} = 2^{power}*x{rhs}"),
            Hyperplane::Difference { i, j, shift } => write!(f, "x{i} - x{j} = {shift}"),
        }
    }
}

/// Deduplicated hyperplanes: coordinate planes first, then pairs
/// lexicographically, then shift ascending.
pub fn hyperplanes_of(spec: &ArrangementSpec) -> Vec<Hyperplane> {
    let mut set = BTreeSet::new();
    if spec.coordinate_hyperplanes() {
        for var in 1..=spec.n() {
            set.insert(Hyperplane::Coordinate { var });
        }
    }
    for (&(i, j), shifts) in spec.pair_shifts() {
        for &k in shifts {
            set.insert(match spec.flavor() {
                Flavor::Multiplicative => Hyperplane::ratio(i, j, k),
                Flavor::Additive => Hyperplane::Difference { i, j, shift: k },
            });
        }
    }
    let mut out: Vec<Hyperplane> = set.into_iter().collect();
    out.sort_by_key(Hyperplane::sort_key);
    out
}
