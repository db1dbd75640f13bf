//! Point counting in `(Z_q)^n` off the reduced hyperplanes.
//!
//! Every hyperplane on the pair `(i, j)`, `i < j`, forbids exactly one value of
//! the later coordinate once the earlier one is fixed:
//! `x_j = alpha * x_i + beta (mod q)`. Coordinates are assigned in order; the
//! last coordinate is not enumerated, its admissible values are counted as
//! `q` minus the distinct forbidden values. The outermost coordinate range is
//! split across threads.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::modulus::{check_admissible, pow_mod};
use super::{hyperplanes_of, ArrangementSpec, Hyperplane};
use crate::error::Result;

#[derive(Debug, Clone, Copy)]
struct Forbid {
    earlier: usize,
    alpha: u64,
    beta: u64,
}

struct Kernel {
    q: u64,
    /// `rules[j]`: forbidden values of coordinate `j` (0-based) given earlier ones.
    rules: Vec<Vec<Forbid>>,
    /// Coordinate hyperplanes forbid the value 0.
    forbid_zero: Vec<bool>,
}

impl Kernel {
    fn compile(spec: &ArrangementSpec, q: u64) -> Self {
        let n = spec.n();
        let mut rules = vec![Vec::new(); n];
        let mut forbid_zero = vec![false; n];
        let inverse = |v: u64| pow_mod(v, q - 2, q);
        for h in hyperplanes_of(spec) {
            match h {
                Hyperplane::Coordinate { var } => forbid_zero[var - 1] = true,
                Hyperplane::Ratio { lhs, rhs, power } => {
                    let c = pow_mod(2, u64::from(power), q);
                    // x_lhs = c x_rhs
                    let rule = if lhs > rhs {
                        (lhs - 1, Forbid { earlier: rhs - 1, alpha: c, beta: 0 })
                    } else {
                        (rhs - 1, Forbid { earlier: lhs - 1, alpha: inverse(c), beta: 0 })
                    };
                    rules[rule.0].push(rule.1);
                }
                Hyperplane::Difference { i, j, shift } => {
                    // x_i - x_j = k with i < j  =>  x_j = x_i - k
                    debug_assert!(i < j);
                    let k = shift.rem_euclid(q as i64) as u64;
                    rules[j - 1].push(Forbid {
                        earlier: i - 1,
                        alpha: 1,
                        beta: (q - k) % q,
                    });
                }
            }
        }
        Self {
            q,
            rules,
            forbid_zero,
        }
    }

    fn count_from(&self, point: &mut Vec<u64>, scratch: &mut Scratch) -> u64 {
        let depth = point.len();
        let n = self.rules.len();
        let stamp = scratch.next_stamp(depth);
        let marks = &mut scratch.marks[depth];
        let mut forbidden = 0u64;
        let mut mark = |v: usize| {
            if marks[v] != stamp {
                marks[v] = stamp;
                forbidden += 1;
            }
        };
        if self.forbid_zero[depth] {
            mark(0);
        }
        for rule in &self.rules[depth] {
            let v = (rule.alpha * point[rule.earlier] + rule.beta) % self.q;
            mark(v as usize);
        }
        if depth + 1 == n {
            return self.q - forbidden;
        }
        let mut total = 0;
        for v in 0..self.q {
            if scratch.marks[depth][v as usize] == stamp {
                continue;
            }
            point.push(v);
            total += self.count_from(point, scratch);
            point.pop();
        }
        total
    }
}

/// Per-depth mark arrays, reset by bumping a stamp instead of clearing.
struct Scratch {
    marks: Vec<Vec<u32>>,
    stamps: Vec<u32>,
}

impl Scratch {
    fn new(n: usize, q: u64) -> Self {
        Self {
            marks: vec![vec![0; q as usize]; n],
            stamps: vec![0; n],
        }
    }

    fn next_stamp(&mut self, depth: usize) -> u32 {
        self.stamps[depth] += 1;
        self.stamps[depth]
    }
}

pub(crate) fn count_unchecked(spec: &ArrangementSpec, q: u64) -> u64 {
    let kernel = Kernel::compile(spec, q);
    let n = spec.n();
    if n == 1 {
        let mut scratch = Scratch::new(1, q);
        return kernel.count_from(&mut Vec::new(), &mut scratch);
    }
    (0..q)
        .into_par_iter()
        .filter(|&v| !(kernel.forbid_zero[0] && v == 0))
        .map_init(
            || (Scratch::new(n, q), Vec::with_capacity(n)),
            |(scratch, point), v| {
                point.clear();
                point.push(v);
                kernel.count_from(point, scratch)
            },
        )
        .sum()
}

/// Number of points of `(Z_q)^n` on none of the hyperplanes of `spec`
/// reduced mod `q`.
pub fn count_complement_points(spec: &ArrangementSpec, q: u64) -> Result<BigUint> {
    check_admissible(spec, q)?;
    Ok(BigUint::from(count_unchecked(spec, q)))
}
