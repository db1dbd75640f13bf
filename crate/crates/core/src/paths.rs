//! Labeled and decorated m-Dyck paths, the bijection with sketches, and the
//! compartment statistic.
//!
//! An up-step adds `m` to the height and a down-step subtracts 1.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::{binomial, charpoly_a_closed, charpoly_c_closed};
use crate::sketches::{Letter, Sketch};
use crate::BigCount;

/// Guard on `(m + 1) n` for path enumeration.
pub const MAX_PATH_LETTERS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up(usize),
    Down,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Up(label) => write!(f, "U{label}"),
            Step::Down => f.write_str("D"),
        }
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "D" {
            return Ok(Step::Down);
        }
        s.strip_prefix('U')
            .and_then(|l| l.parse().ok())
            .filter(|&l| l > 0)
            .map(Step::Up)
            .ok_or_else(|| Error::Parse(format!("bad step {s:?}")))
    }
}

/// JSON element: `{"step":"U","label":3}`, `{"step":"D"}` or `{"step":"|"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub step: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<usize>,
}

impl From<Step> for StepRecord {
    fn from(s: Step) -> Self {
        match s {
            Step::Up(label) => StepRecord { step: "U".into(), label: Some(label) },
            Step::Down => StepRecord { step: "D".into(), label: None },
        }
    }
}

/// An m-Dyck path with distinct positive labels on its up-steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledDyckPath {
    m: usize,
    steps: Vec<Step>,
}

impl LabeledDyckPath {
    pub fn new(m: usize, steps: Vec<Step>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be at least 1".into()));
        }
        let mut height = 0i64;
        let mut labels = Vec::new();
        for s in &steps {
            match s {
                Step::Up(l) => {
                    height += m as i64;
                    labels.push(*l);
                }
                Step::Down => height -= 1,
            }
            if height < 0 {
                return Err(Error::Invalid("path goes below the axis".into()));
            }
        }
        if height != 0 {
            return Err(Error::Invalid("path does not end on the axis".into()));
        }
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) || labels.first() == Some(&0) {
            return Err(Error::Invalid("labels must be distinct positive integers".into()));
        }
        Ok(Self { m, steps })
    }

    pub fn empty(m: usize) -> Self {
        Self { m, steps: Vec::new() }
    }

    /// Parses `U3 D D U1 D D`; `m` is inferred as downs / ups when not given.
    pub fn parse(s: &str, m: Option<usize>) -> Result<Self> {
        let steps: Vec<Step> = s.split_whitespace().map(str::parse).collect::<Result<_>>()?;
        Self::new(infer_m(&steps, m)?, steps)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn up_count(&self) -> usize {
        self.labels().len()
    }

    /// Labels in path order.
    pub fn labels(&self) -> Vec<usize> {
        self.steps
            .iter()
            .filter_map(|s| match s {
                Step::Up(l) => Some(*l),
                Step::Down => None,
            })
            .collect()
    }

    /// Prefix indices where the path is on the axis, including both ends.
    pub fn axis_points(&self) -> Vec<usize> {
        let mut height = 0i64;
        let mut out = vec![0];
        for (i, s) in self.steps.iter().enumerate() {
            height += match s {
                Step::Up(_) => self.m as i64,
                Step::Down => -1,
            };
            if height == 0 {
                out.push(i + 1);
            }
        }
        out
    }

    /// The pieces between consecutive returns to the axis.
    pub fn primitive_paths(&self) -> Vec<LabeledDyckPath> {
        self.axis_points()
            .windows(2)
            .map(|w| Self {
                m: self.m,
                steps: self.steps[w[0]..w[1]].to_vec(),
            })
            .collect()
    }

    /// Compartments as sub-paths: the first runs through the primitive part
    /// holding the largest label, the next through the part holding the
    /// largest remaining label, and so on.
    pub fn compartment_paths(&self) -> Vec<LabeledDyckPath> {
        let parts = self.primitive_paths();
        let maxima: Vec<usize> = parts
            .iter()
            .map(|p| p.labels().into_iter().max().expect("primitive part has an up-step"))
            .collect();
        let mut out = Vec::new();
        let mut start = 0;
        while start < parts.len() {
            let (end, _) = maxima[start..]
                .iter()
                .enumerate()
                .max_by_key(|(_, &l)| l)
                .expect("nonempty");
            let end = start + end;
            out.push(Self {
                m: self.m,
                steps: parts[start..=end].iter().flat_map(|p| p.steps.clone()).collect(),
            });
            start = end + 1;
        }
        out
    }

    /// Concatenates compartments given in any order: they are placed by
    /// decreasing maximal label.
    pub fn from_compartments(m: usize, mut pieces: Vec<LabeledDyckPath>) -> Result<Self> {
        pieces.sort_by_key(|p| std::cmp::Reverse(p.labels().into_iter().max()));
        Self::new(m, pieces.into_iter().flat_map(|p| p.steps).collect())
    }

    pub fn to_records(&self) -> Vec<StepRecord> {
        self.steps.iter().map(|&s| s.into()).collect()
    }
}

impl fmt::Display for LabeledDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.steps.iter().join(" "))
    }
}

fn infer_m(steps: &[Step], m: Option<usize>) -> Result<usize> {
    if let Some(m) = m {
        return Ok(m);
    }
    let ups = steps.iter().filter(|s| matches!(s, Step::Up(_))).count();
    let downs = steps.len() - ups;
    if ups == 0 || !downs.is_multiple_of(ups) || downs == 0 {
        return Err(Error::Parse(
            "cannot infer m from the path; give it explicitly".into(),
        ));
    }
    Ok(downs / ups)
}

pub fn primitive_parts(p: &LabeledDyckPath) -> usize {
    p.axis_points().len() - 1
}

pub fn compartments(p: &LabeledDyckPath) -> usize {
    p.compartment_paths().len()
}

/// A labeled m-Dyck path on `[n]` with a marked axis point, stored as the
/// number of steps before the mark.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedDyckPath {
    path: LabeledDyckPath,
    mark: usize,
}

impl DecoratedDyckPath {
    pub fn new(path: LabeledDyckPath, mark: usize) -> Result<Self> {
        if !path.axis_points().contains(&mark) {
            return Err(Error::Invalid(format!("mark {mark} is not an axis point")));
        }
        let mut labels = path.labels();
        labels.sort_unstable();
        if labels.iter().enumerate().any(|(i, &l)| l != i + 1) {
            return Err(Error::Invalid("labels of a decorated path must be 1..n".into()));
        }
        Ok(Self { path, mark })
    }

    pub fn from_parts(first: &LabeledDyckPath, second: &LabeledDyckPath) -> Result<Self> {
        if first.m != second.m {
            return Err(Error::InvalidParameter("parts use different m".into()));
        }
        let mut steps = first.steps.clone();
        steps.extend_from_slice(&second.steps);
        Self::new(LabeledDyckPath::new(first.m, steps)?, first.steps.len())
    }

    /// Parses `U3 D D | U1 D D`; exactly one `|` marks the split.
    pub fn parse(s: &str, m: Option<usize>) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let bars: Vec<usize> = tokens.iter().positions(|t| *t == "|").collect();
        if bars.len() != 1 {
            return Err(Error::Parse("a decorated path has exactly one '|'".into()));
        }
        let steps: Vec<Step> = tokens
            .iter()
            .filter(|t| **t != "|")
            .map(|t| t.parse())
            .collect::<Result<_>>()?;
        let m = infer_m(&steps, m)?;
        Self::new(LabeledDyckPath::new(m, steps)?, bars[0])
    }

    pub fn path(&self) -> &LabeledDyckPath {
        &self.path
    }

    pub fn mark(&self) -> usize {
        self.mark
    }

    pub fn n(&self) -> usize {
        self.path.up_count()
    }

    pub fn m(&self) -> usize {
        self.path.m
    }

    pub fn first(&self) -> LabeledDyckPath {
        LabeledDyckPath {
            m: self.path.m,
            steps: self.path.steps[..self.mark].to_vec(),
        }
    }

    pub fn second(&self) -> LabeledDyckPath {
        LabeledDyckPath {
            m: self.path.m,
            steps: self.path.steps[self.mark..].to_vec(),
        }
    }

    pub fn to_records(&self) -> Vec<StepRecord> {
        let mut out = self.first().to_records();
        out.push(StepRecord { step: "|".into(), label: None });
        out.extend(self.second().to_records());
        out
    }

    pub fn from_records(records: &[StepRecord], m: Option<usize>) -> Result<Self> {
        let text = records
            .iter()
            .map(|r| match (r.step.as_str(), r.label) {
                ("U", Some(l)) => Ok(format!("U{l}")),
                ("D", None) => Ok("D".to_string()),
                ("|", None) => Ok("|".to_string()),
                _ => Err(Error::Parse(format!("bad step record {r:?}"))),
            })
            .collect::<Result<Vec<_>>>()?
            .join(" ");
        Self::parse(&text, m)
    }
}

impl fmt::Display for DecoratedDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self
            .first()
            .steps
            .iter()
            .map(Step::to_string)
            .chain(std::iter::once("|".to_string()))
            .chain(self.second().steps.iter().map(Step::to_string))
            .collect();
        f.write_str(&tokens.join(" "))
    }
}

/// Path of a positive word: `(i, 0)` is an up-step labeled `i`, every other
/// letter a down-step.
fn word_to_steps(word: &[Letter]) -> Vec<Step> {
    word.iter()
        .map(|l| if l.power == 0 { Step::Up(l.var) } else { Step::Down })
        .collect()
}

/// `(i, k) -> (i, m - k)` turns the part before 0, read left to right, into
/// a positive word and back.
fn mirror(word: &[Letter], m: usize) -> Vec<Letter> {
    word.iter().map(|l| Letter::new(l.var, m - l.power)).collect()
}

/// Inverse of [`word_to_steps`]: down-steps are filled with the forced
/// letters. Each down-step takes the pending letter whose predecessor came
/// first; any other choice breaks the order conditions later, and the chosen
/// letter is checked against the letters already placed.
fn steps_to_word(steps: &[Step], m: usize) -> Result<Vec<Letter>> {
    let mut word: Vec<Letter> = Vec::with_capacity(steps.len());
    // (letter still to place, index of its predecessor in `word`)
    let mut pending: Vec<(Letter, usize)> = Vec::new();
    let mut pos_of = std::collections::HashMap::new();
    for s in steps {
        let letter = match *s {
            Step::Up(i) => Letter::new(i, 0),
            Step::Down => {
                let admissible: Vec<usize> = (0..pending.len())
                    .filter(|&c| {
                        let (cand, pred) = pending[c];
                        let first = pending.iter().all(|&(_, other)| other >= pred);
                        first
                            && word.iter().all(|l| {
                                l.power == 0 || cand.var == l.var || pos_of[&Letter::new(l.var, l.power - 1)] < pred
                            })
                    })
                    .collect();
                match admissible.as_slice() {
                    [c] => pending.remove(*c).0,
                    [] => return Err(Error::Invalid("no letter fits this down-step".into())),
                    _ => return Err(Error::Invalid("down-step filling is ambiguous".into())),
                }
            }
        };
        pos_of.insert(letter, word.len());
        if letter.power < m {
            pending.push((Letter::new(letter.var, letter.power + 1), word.len()));
        }
        word.push(letter);
    }
    if !pending.is_empty() {
        return Err(Error::Invalid("path ends with letters unplaced".into()));
    }
    Ok(word)
}

pub fn sketch_to_path(s: &Sketch) -> Result<DecoratedDyckPath> {
    let m = s.m();
    let first = LabeledDyckPath::new(m, word_to_steps(&mirror(s.w1(), m)))?;
    let second = LabeledDyckPath::new(m, word_to_steps(s.w2()))?;
    DecoratedDyckPath::from_parts(&first, &second)
}

pub fn path_to_sketch(d: &DecoratedDyckPath) -> Result<Sketch> {
    let m = d.m();
    let w1 = mirror(&steps_to_word(d.first().steps(), m)?, m);
    let w2 = steps_to_word(d.second().steps(), m)?;
    Sketch::new(d.n(), m, w1, w2)
}

/// Unlabeled m-Dyck paths with `ups` up-steps, up-first lexicographic order.
/// Up-steps carry the placeholder label 0.
pub fn unlabeled_paths(ups: usize, m: usize) -> Vec<Vec<Step>> {
    fn go(ups_left: usize, height: usize, m: usize, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if ups_left == 0 && height == 0 {
            out.push(cur.clone());
            return;
        }
        if ups_left > 0 {
            cur.push(Step::Up(0));
            go(ups_left - 1, height + m, m, cur, out);
            cur.pop();
        }
        if height > 0 {
            cur.push(Step::Down);
            go(ups_left, height - 1, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(ups, 0, m, &mut Vec::new(), &mut out);
    out
}

fn check_guard(n: usize, m: usize, limit: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter("need n >= 1 and m >= 1".into()));
    }
    if (m + 1) * n > limit {
        return Err(Error::Guard {
            what: format!("paths with {} steps", (m + 1) * n),
            limit: limit as u64,
        });
    }
    Ok(())
}

/// All decorated paths, ordered by first part, second part, then labels.
pub fn enumerate_decorated_paths(n: usize, m: usize) -> Result<Vec<DecoratedDyckPath>> {
    enumerate_decorated_paths_with_limit(n, m, MAX_PATH_LETTERS)
}

/// As [`enumerate_decorated_paths`] with the guard on `(m + 1) n` set to `limit`.
pub fn enumerate_decorated_paths_with_limit(
    n: usize,
    m: usize,
    limit: usize,
) -> Result<Vec<DecoratedDyckPath>> {
    check_guard(n, m, limit)?;
    let mut out = Vec::new();
    for k in 0..=n {
        let firsts = unlabeled_paths(k, m);
        let seconds = unlabeled_paths(n - k, m);
        for f in &firsts {
            for s in &seconds {
                let shape: Vec<Step> = f.iter().chain(s).copied().collect();
                for labels in (1..=n).permutations(n) {
                    let mut next = labels.into_iter();
                    let steps = shape
                        .iter()
                        .map(|st| match st {
                            Step::Up(_) => Step::Up(next.next().expect("label per up-step")),
                            Step::Down => Step::Down,
                        })
                        .collect();
                    out.push(DecoratedDyckPath::new(LabeledDyckPath::new(m, steps)?, f.len())?);
                }
            }
        }
    }
    Ok(out)
}

/// Entry `j`: decorated paths whose second part has `j` compartments.
pub fn compartment_distribution(n: usize, m: usize) -> Result<Vec<BigCount>> {
    compartment_distribution_with_limit(n, m, MAX_PATH_LETTERS)
}

pub fn compartment_distribution_with_limit(
    n: usize,
    m: usize,
    limit: usize,
) -> Result<Vec<BigCount>> {
    let mut counts = vec![0u64; n + 1];
    for d in enumerate_decorated_paths_with_limit(n, m, limit)? {
        counts[compartments(&d.second())] += 1;
    }
    Ok(counts.into_iter().map(BigUint::from).collect())
}

/// `|[t^j] chi_A| = sum_{i >= j} |[t^i] chi_C| * C(i, j)` for all `j`.
pub fn shifted_coefficient_identity(n: usize, m: usize) -> Result<bool> {
    let a = charpoly_a_closed(n, m)?;
    let c = charpoly_c_closed(n, m)?;
    let abs = |p: &crate::IntPolynomial, i: usize| -> BigUint {
        p.coeff(i).abs().to_biguint().expect("absolute value")
    };
    Ok((0..=n).all(|j| {
        let rhs: BigUint = (j..=n).map(|i| abs(&c, i) * binomial(i, j)).sum();
        abs(&a, j) == rhs
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    /// `by_upsteps[k]`: unlabeled paths with `k` up-steps, `k in [0, n]`.
    pub by_upsteps: Vec<BigCount>,
    /// `by_axis_points[k]`: unlabeled paths with `n` up-steps touching the
    /// axis at `k + 1` points, both ends included; `k in [0, n]`.
    pub by_axis_points: Vec<BigCount>,
}

pub fn unlabeled_census(n: usize, m: usize) -> Result<Census> {
    unlabeled_census_with_limit(n, m, MAX_PATH_LETTERS)
}

pub fn unlabeled_census_with_limit(n: usize, m: usize, limit: usize) -> Result<Census> {
    check_guard(n.max(1), m, limit)?;
    let by_upsteps = (0..=n)
        .map(|k| BigUint::from(unlabeled_paths(k, m).len()))
        .collect();
    let mut by_axis = vec![BigUint::zero(); n + 1];
    for shape in unlabeled_paths(n, m) {
        let p = LabeledDyckPath { m, steps: shape };
        by_axis[p.axis_points().len() - 1] += 1u32;
    }
    Ok(Census {
        by_upsteps,
        by_axis_points: by_axis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{factorial, raney};
    use crate::sketches::enumerate_sketches;

    fn lp(s: &str, m: usize) -> LabeledDyckPath {
        LabeledDyckPath::parse(s, Some(m)).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn example_sketches_map_to_figures() {
        let s: Sketch = "0 3^0 1^0 3^1 1^1 2^0 3^2 1^2 2^1 2^2".parse().unwrap();
        let d = sketch_to_path(&s).unwrap();
        assert_eq!(d.mark(), 0);
        assert_eq!(d.path().labels(), vec![3, 1, 2]);

        let s: Sketch = crate::sketches::parse_word(
            "3^2 3^1 1^2 3^0 1^1 1^0 0 5^0 5^1 5^2 4^0 2^0 4^1 2^1 4^2 2^2",
        )
        .and_then(|w| Sketch::from_symbols(&w))
        .unwrap();
        let d = sketch_to_path(&s).unwrap();
        assert_eq!(d.mark(), 6);
        assert_eq!(d.first().labels(), vec![3, 1]);
        assert_eq!(d.second().labels(), vec![5, 4, 2]);
        assert_eq!(path_to_sketch(&d).unwrap(), s);

        let s: Sketch = "0 1^0 1^1".parse().unwrap();
        assert_eq!(sketch_to_path(&s).unwrap().to_string(), "| U1 D");
        let s: Sketch = "1^1 1^0 0".parse().unwrap();
        assert_eq!(sketch_to_path(&s).unwrap().to_string(), "U1 D |");
    }

    #[test]
    fn bijection_round_trips() {
        for (n, m) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (2, 4)] {
            let sketches = enumerate_sketches(n, m).unwrap();
            let mut images: Vec<DecoratedDyckPath> = sketches
                .iter()
                .map(|s| {
                    let d = sketch_to_path(s).unwrap();
                    assert_eq!(&path_to_sketch(&d).unwrap(), s);
                    d
                })
                .collect();
            let paths = enumerate_decorated_paths(n, m).unwrap();
            assert_eq!(paths.len(), sketches.len());
            for d in &paths {
                assert_eq!(&sketch_to_path(&path_to_sketch(d).unwrap()).unwrap(), d);
            }
            images.sort();
            let mut sorted = paths.clone();
            sorted.sort();
            assert_eq!(images, sorted);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_decorated_paths(1, 1).unwrap().len(), 2);
        assert_eq!(enumerate_decorated_paths(2, 1).unwrap().len(), 10);
        assert_eq!(enumerate_decorated_paths(2, 2).unwrap().len(), 14);
        for (n, m) in [(3, 1), (3, 2), (4, 1), (4, 2)] {
            let count = enumerate_decorated_paths(n, m).unwrap().len();
            assert_eq!(big(count as u64), factorial(n) * raney(n, m, 2).unwrap());
        }
        assert!(matches!(enumerate_decorated_paths(5, 2), Err(Error::Guard { .. })));
    }

    #[test]
    fn parts_and_compartments() {
        let fig = lp("U9 U2 U8 D D U6 D D U4 U1 D D U5 D", 1);
        assert_eq!(primitive_parts(&fig), 3);
        assert_eq!(compartments(&fig), 2);
        assert_eq!(primitive_parts(&LabeledDyckPath::empty(1)), 0);
        assert_eq!(compartments(&LabeledDyckPath::empty(1)), 0);
        assert_eq!(primitive_parts(&lp("U1 D U2 D", 1)), 2);
        assert_eq!(compartments(&lp("U2 D U1 D", 1)), 2);
        assert_eq!(compartments(&lp("U1 D U2 D", 1)), 1);
        let pieces: Vec<String> = fig.compartment_paths().iter().map(|p| p.to_string()).collect();
        assert_eq!(pieces, vec!["U9 U2 U8 D D U6 D D", "U4 U1 D D U5 D"]);
    }

    #[test]
    fn distributions_match_coefficients() {
        let to_big = |v: &[u64]| v.iter().map(|&x| big(x)).collect::<Vec<_>>();
        assert_eq!(compartment_distribution(2, 1).unwrap(), to_big(&[4, 5, 1]));
        assert_eq!(compartment_distribution(1, 1).unwrap(), to_big(&[1, 1]));
        assert_eq!(compartment_distribution(3, 1).unwrap(), to_big(&[30, 41, 12, 1]));
        for (n, m) in [(2, 2), (3, 2), (4, 1)] {
            let chi = charpoly_a_closed(n, m).unwrap();
            let expected: Vec<BigUint> = (0..=n)
                .map(|j| chi.coeff(j).abs().to_biguint().unwrap())
                .collect();
            assert_eq!(compartment_distribution(n, m).unwrap(), expected, "n={n} m={m}");
        }
    }

    #[test]
    fn compartments_rebuild_the_path() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 1..=3 {
            for d in enumerate_decorated_paths(n, 1).unwrap() {
                let p = d.path().clone();
                assert!(compartments(&p) <= primitive_parts(&p));
                let mut pieces = p.compartment_paths();
                pieces.shuffle(&mut rng);
                assert_eq!(LabeledDyckPath::from_compartments(1, pieces).unwrap(), p);
            }
        }
    }

    #[test]
    fn coefficient_identity() {
        for (n, m) in [(1, 1), (1, 3), (2, 1), (3, 2), (4, 4), (6, 3)] {
            assert!(shifted_coefficient_identity(n, m).unwrap(), "n={n} m={m}");
        }
    }

    #[test]
    fn census() {
        let c = unlabeled_census(3, 1).unwrap();
        assert_eq!(c.by_upsteps[3], big(5));
        let c = unlabeled_census(2, 1).unwrap();
        assert_eq!(c.by_axis_points[1], big(1));
        assert_eq!(c.by_axis_points[2], big(1));
        let c = unlabeled_census(2, 2).unwrap();
        assert_eq!(c.by_axis_points[2], raney(0, 2, 4).unwrap());
        for n in 1..=4 {
            for m in 1..=2 {
                let c = unlabeled_census(n, m).unwrap();
                for k in 0..=n {
                    assert_eq!(c.by_upsteps[k], raney(k, m, 1).unwrap());
                }
                for k in 1..=n {
                    assert_eq!(c.by_axis_points[k], raney(n - k, m, m * k).unwrap());
                }
            }
        }
    }

    #[test]
    fn text_and_json() {
        let d = DecoratedDyckPath::parse("U3 D D U1 D D | U2 D D", None).unwrap();
        assert_eq!(d.m(), 2);
        assert_eq!(d.to_string(), "U3 D D U1 D D | U2 D D");
        let json = serde_json::to_string(&d.to_records()).unwrap();
        assert!(json.starts_with(r#"[{"step":"U","label":3},{"step":"D"}"#));
        let back: Vec<StepRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(DecoratedDyckPath::from_records(&back, None).unwrap(), d);
        assert!(DecoratedDyckPath::parse("U1 D | | U2 D", None).is_err());
        assert!(DecoratedDyckPath::parse("U1 | D U2 D", None).is_err());
        assert!(DecoratedDyckPath::parse("U1 D | U3 D", None).is_err());
        assert!(LabeledDyckPath::parse("D U1", Some(1)).is_err());
        let empty = DecoratedDyckPath::parse("| U1 D", None).unwrap();
        assert_eq!(path_to_sketch(&empty).unwrap().to_string(), "0 1^0 1^1");
    }
}
