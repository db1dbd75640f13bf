use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Letter, Sketch};
use crate::arrangements::Hyperplane;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Exponent;

/// `x = sign * 2^exp`; `exp` is ignored when `sign == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LogPoint {
    pub sign: i8,
    #[serde(serialize_with = "ser_exp", deserialize_with = "de_exp")]
    pub exp: Exponent,
}

fn ser_exp<S: Serializer>(e: &Exponent, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&e.to_string())
}

fn de_exp<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Exponent, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(serde::de::Error::custom)
}

impl LogPoint {
    pub fn new(sign: i8, exp: Exponent) -> Self {
        Self { sign: sign.signum(), exp }
    }

    pub fn positive(exp: Exponent) -> Self {
        Self::new(1, exp)
    }

    pub fn negative(exp: Exponent) -> Self {
        Self::new(-1, exp)
    }

    /// Compares `2^a self` with `2^b other`.
    fn cmp_scaled(&self, a: i64, other: &LogPoint, b: i64) -> Ordering {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal if self.sign == 0 => Ordering::Equal,
            Ordering::Equal => {
                let ord = (self.exp + a).cmp(&(other.exp + b));
                if self.sign > 0 {
                    ord
                } else {
                    ord.reverse()
                }
            }
            ord => ord,
        }
    }
}

impl fmt::Display for LogPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => f.write_str("0"),
            1 => write!(f, "2^({})", self.exp),
            _ => write!(f, "-2^({})", self.exp),
        }
    }
}

/// Solves `X_a - X_b <= c` for all `(a, b, c)` over `nvars` unknowns by
/// Bellman-Ford from a virtual source. Errors on a negative cycle.
pub fn solve_difference_constraints<T: Scalar>(
    nvars: usize,
    constraints: &[(usize, usize, Ratio<T>)],
) -> Result<Vec<Ratio<T>>> {
    let mut dist = vec![Ratio::<T>::zero(); nvars];
    for round in 0..=nvars {
        let mut changed = false;
        for (a, b, c) in constraints {
            let candidate = dist[*b].clone() + c.clone();
            if candidate < dist[*a] {
                dist[*a] = candidate;
                changed = true;
            }
        }
        if !changed {
            return Ok(dist);
        }
        if round == nvars {
            break;
        }
    }
    Err(Error::InfeasibleSystem)
}

/// Exponents realizing a positive word: for consecutive letters `(i,k)`,
/// `(j,l)` require `X_i + k < X_j + l`, as `X_i - X_j <= l - k - eps`.
fn exponents_for(word: &[Letter], n: usize, eps: Exponent) -> Result<Vec<Exponent>> {
    let constraints: Vec<(usize, usize, Exponent)> = word
        .windows(2)
        .filter(|w| w[0].var != w[1].var)
        .map(|w| {
            let gap = w[1].power as i64 - w[0].power as i64;
            (w[0].var - 1, w[1].var - 1, Exponent::from_integer(gap) - eps)
        })
        .collect();
    solve_difference_constraints(n, &constraints)
}

/// A point in the region of `s`, with dyadic-power coordinates.
pub fn witness_point(s: &Sketch) -> Result<Vec<LogPoint>> {
    let n = s.n();
    let eps = Exponent::new(1, n as i64 + 1);
    let positive = exponents_for(s.w2(), n, eps)?;
    let reversed: Vec<Letter> = s.w1().iter().rev().copied().collect();
    let negative = exponents_for(&reversed, n, eps)?;
    Ok((1..=n)
        .map(|v| {
            if s.is_positive(v) {
                LogPoint::positive(positive[v - 1])
            } else {
                LogPoint::negative(negative[v - 1])
            }
        })
        .collect())
}

/// Orders `0` and all `2^k x_i`, `k in [0, m]`, exactly.
pub fn point_to_sketch(p: &[LogPoint], m: usize) -> Result<Sketch> {
    if let Some(i) = p.iter().position(|x| x.sign == 0) {
        return Err(Error::OnHyperplane(format!("x{} = 0", i + 1)));
    }
    let zero = LogPoint::new(0, Exponent::zero());
    let mut items: Vec<(Option<Letter>, &LogPoint, i64)> = vec![(None, &zero, 0)];
    for (i, x) in p.iter().enumerate() {
        for k in 0..=m {
            items.push((Some(Letter::new(i + 1, k)), x, k as i64));
        }
    }
    items.sort_by(|a, b| a.1.cmp_scaled(a.2, b.1, b.2));
    for w in items.windows(2) {
        if w[0].1.cmp_scaled(w[0].2, w[1].1, w[1].2) == Ordering::Equal {
            let show = |l: Option<Letter>| l.map_or("0".to_string(), |l| l.to_string());
            return Err(Error::OnHyperplane(format!(
                "{} and {} coincide",
                show(w[0].0),
                show(w[1].0)
            )));
        }
    }
    let split = items.iter().position(|it| it.0.is_none()).expect("zero present");
    let letters = |r: &[(Option<Letter>, &LogPoint, i64)]| r.iter().filter_map(|it| it.0).collect();
    Sketch::new(p.len(), m, letters(&items[..split]), letters(&items[split + 1..]))
}

/// Sign of `x_var` or of `x_lhs - 2^power x_rhs` at `p`.
pub fn hyperplane_side(p: &[LogPoint], h: &Hyperplane) -> Result<i8> {
    let out_of_range = || Error::InvalidParameter(format!("{h} involves a missing coordinate"));
    let ord = match *h {
        Hyperplane::Coordinate { var } => {
            return p.get(var.wrapping_sub(1)).map(|x| x.sign).ok_or_else(out_of_range)
        }
        Hyperplane::Ratio { lhs, rhs, power } => {
            let a = p.get(lhs.wrapping_sub(1)).ok_or_else(out_of_range)?;
            let b = p.get(rhs.wrapping_sub(1)).ok_or_else(out_of_range)?;
            a.cmp_scaled(0, b, i64::from(power))
        }
        Hyperplane::Difference { .. } => {
            return Err(Error::InvalidParameter(
                "sides are computed for multiplicative hyperplanes".into(),
            ))
        }
    };
    Ok(match ord {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::{hyperplanes_of, Preset, PresetKind};
    use crate::sketches::enumerate_sketches;

    fn q(a: i64, b: i64) -> Exponent {
        Exponent::new(a, b)
    }

    #[test]
    fn point_to_sketch_examples() {
        let p = [LogPoint::positive(q(0, 1))];
        assert_eq!(point_to_sketch(&p, 1).unwrap().to_string(), "0 1^0 1^1");
        let p = [LogPoint::negative(q(0, 1)), LogPoint::positive(q(0, 1))];
        assert_eq!(point_to_sketch(&p, 1).unwrap().to_string(), "1^1 1^0 0 2^0 2^1");
        // x1 = 2 x2
        let p = [LogPoint::positive(q(1, 1)), LogPoint::positive(q(0, 1))];
        assert!(matches!(point_to_sketch(&p, 1), Err(Error::OnHyperplane(_))));
        let p = [LogPoint::new(0, q(0, 1))];
        assert!(point_to_sketch(&p, 1).is_err());
    }

    #[test]
    fn sides() {
        let pt = |a: (i8, Exponent), b: (i8, Exponent)| [LogPoint::new(a.0, a.1), LogPoint::new(b.0, b.1)];
        let h = Hyperplane::ratio(1, 2, 1);
        assert_eq!(hyperplane_side(&pt((1, q(0, 1)), (1, q(2, 1))), &h).unwrap(), -1);
        assert_eq!(
            hyperplane_side(&pt((-1, q(1, 1)), (1, q(0, 1))), &Hyperplane::ratio(1, 2, 0)).unwrap(),
            -1
        );
        assert_eq!(hyperplane_side(&pt((1, q(1, 2)), (1, q(0, 1))), &h).unwrap(), -1);
        assert_eq!(hyperplane_side(&pt((-1, q(1, 2)), (-1, q(0, 1))), &h).unwrap(), 1);
        assert_eq!(hyperplane_side(&pt((1, q(1, 1)), (1, q(0, 1))), &h).unwrap(), 0);
        assert_eq!(
            hyperplane_side(&pt((-1, q(0, 1)), (1, q(0, 1))), &Hyperplane::Coordinate { var: 1 })
                .unwrap(),
            -1
        );
    }

    #[test]
    fn example_witness_orders_all_pairs() {
        let s: Sketch = crate::sketches::tests::EXAMPLE.parse().unwrap();
        let p = witness_point(&s).unwrap();
        assert_eq!(point_to_sketch(&p, 2).unwrap(), s);
        // every pair of symbols compares as the word says
        let sym = s.symbols();
        let value = |x: &super::super::Symbol| match x {
            super::super::Symbol::Zero => (LogPoint::new(0, q(0, 1)), 0),
            super::super::Symbol::Letter(l) => (p[l.var - 1].clone(), l.power as i64),
        };
        for a in 0..sym.len() {
            for b in a + 1..sym.len() {
                let (x, k) = value(&sym[a]);
                let (y, l) = value(&sym[b]);
                assert_eq!(x.cmp_scaled(k, &y, l), Ordering::Less);
            }
        }
    }

    #[test]
    fn round_trip_and_soundness() {
        for (n, m) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
            let hs = hyperplanes_of(&Preset::new(PresetKind::A, n, m).unwrap().spec());
            for s in enumerate_sketches(n, m).unwrap() {
                let p = witness_point(&s).unwrap();
                assert_eq!(point_to_sketch(&p, m).unwrap(), s);
                assert!(hs.iter().all(|h| hyperplane_side(&p, h).unwrap() != 0));
            }
        }
    }

    #[test]
    fn infeasible_system_detected() {
        let c = vec![(0usize, 1usize, q(-1, 2)), (1, 0, q(-1, 2))];
        assert!(matches!(
            solve_difference_constraints::<i64>(2, &c),
            Err(Error::InfeasibleSystem)
        ));
    }

    #[test]
    fn json_shape() {
        let p = vec![LogPoint::negative(q(3, 5)), LogPoint::positive(q(2, 1))];
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"[{"sign":-1,"exp":"3/5"},{"sign":1,"exp":"2"}]"#);
        let back: Vec<LogPoint> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }
}
