//! Decorated m-non-nesting partitions: a row of labeled dots split by a red
//! line, each label occupying `m + 1` dots on one side, consecutive dots of a
//! label joined by arcs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sketches::{enumerate_sketches_with_limit, Letter, Sketch};
use crate::BigCount;

/// Guard on `(m + 1) n` for [`count_b_regions_enum`].
pub const MAX_PARTITION_LETTERS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockClass {
    Isolated,
    Tangled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Stored as the label of each dot, left and right of the red line.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPartition {
    m: usize,
    left: Vec<usize>,
    right: Vec<usize>,
}

/// Blocks of a label row, as 1-based positions, keyed by label.
fn blocks_of(row: &[usize]) -> BTreeMap<usize, Vec<usize>> {
    let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &l) in row.iter().enumerate() {
        out.entry(l).or_default().push(i + 1);
    }
    out
}

/// True when no arc between consecutive elements of a block lies strictly
/// inside another arc. Blocks are sets of positions.
pub fn is_non_nesting(blocks: &[Vec<usize>]) -> bool {
    let arcs: Vec<(usize, usize)> = blocks
        .iter()
        .flat_map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>()
        })
        .collect();
    !arcs
        .iter()
        .any(|&(a, b)| arcs.iter().any(|&(c, d)| a < c && d < b))
}

impl DecoratedPartition {
    pub fn new(m: usize, left: Vec<usize>, right: Vec<usize>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be at least 1".into()));
        }
        let (lb, rb) = (blocks_of(&left), blocks_of(&right));
        if let Some(l) = lb.keys().find(|l| rb.contains_key(l)) {
            return Err(Error::Invalid(format!("label {l} on both sides of the red line")));
        }
        let n = lb.len() + rb.len();
        for (label, block) in lb.iter().chain(&rb) {
            if *label == 0 || *label > n {
                return Err(Error::Invalid(format!("labels must be 1..{n}, found {label}")));
            }
            if block.len() != m + 1 {
                return Err(Error::Invalid(format!(
                    "block {label} has {} dots, expected {}",
                    block.len(),
                    m + 1
                )));
            }
        }
        for (side, blocks) in [("left", &lb), ("right", &rb)] {
            let blocks: Vec<Vec<usize>> = blocks.values().cloned().collect();
            if !is_non_nesting(&blocks) {
                return Err(Error::Invalid(format!("{side} partition has nesting arcs")));
            }
        }
        Ok(Self { m, left, right })
    }

    /// Parses `3 3 1 3 1 1 | 5 5 5 4 2 4 2 4 2`; `m` is the block size less 1.
    pub fn parse(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let bars: Vec<usize> = (0..tokens.len()).filter(|&i| tokens[i] == "|").collect();
        if bars.len() != 1 {
            return Err(Error::Parse("a decorated partition has exactly one '|'".into()));
        }
        let labels = |ts: &[&str]| -> Result<Vec<usize>> {
            ts.iter()
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad label {t:?}"))))
                .collect()
        };
        let left = labels(&tokens[..bars[0]])?;
        let right = labels(&tokens[bars[0] + 1..])?;
        let first = left.first().or(right.first()).copied();
        let m = first
            .map(|l| left.iter().chain(&right).filter(|&&x| x == l).count())
            .ok_or_else(|| Error::Parse("empty partition".into()))?;
        Self::new(m.saturating_sub(1), left, right)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        (self.left.len() + self.right.len()) / (self.m + 1)
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    /// Blocks as positions within their side, keyed by label.
    pub fn blocks(&self) -> BTreeMap<usize, (Side, Vec<usize>)> {
        let mut out = BTreeMap::new();
        for (l, b) in blocks_of(&self.left) {
            out.insert(l, (Side::Left, b));
        }
        for (l, b) in blocks_of(&self.right) {
            out.insert(l, (Side::Right, b));
        }
        out
    }

    /// The label sequence with the red line removed.
    pub fn diagram(&self) -> Vec<usize> {
        self.left.iter().chain(&self.right).copied().collect()
    }

    /// No isolated block directly after the red line.
    pub fn is_canonical(&self) -> bool {
        match self.right.first() {
            None => true,
            Some(l) => classify_blocks(self)[l] == BlockClass::Tangled,
        }
    }
}

impl fmt::Display for DecoratedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self
            .left
            .iter()
            .map(usize::to_string)
            .chain(std::iter::once("|".to_string()))
            .chain(self.right.iter().map(usize::to_string))
            .collect();
        f.write_str(&tokens.join(" "))
    }
}

impl FromStr for DecoratedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

pub fn sketch_to_partition(s: &Sketch) -> Result<DecoratedPartition> {
    let labels = |w: &[Letter]| w.iter().map(|l| l.var).collect();
    DecoratedPartition::new(s.m(), labels(s.w1()), labels(s.w2()))
}

/// Right of the line the `j`-th dot of label `i` is `(i, j - 1)`; left of it
/// `(i, m - j + 1)`.
pub fn partition_to_sketch(d: &DecoratedPartition) -> Result<Sketch> {
    let m = d.m;
    let letters = |row: &[usize], left: bool| -> Vec<Letter> {
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        row.iter()
            .map(|&i| {
                let j = seen.entry(i).or_insert(0);
                let k = if left { m - *j } else { *j };
                *j += 1;
                Letter::new(i, k)
            })
            .collect()
    };
    Sketch::new(d.n(), m, letters(&d.left, true), letters(&d.right, false))
}

/// A block is isolated when its dots are consecutive.
pub fn classify_blocks(d: &DecoratedPartition) -> BTreeMap<usize, BlockClass> {
    d.blocks()
        .into_iter()
        .map(|(label, (_, pos))| {
            let class = if pos.last().expect("nonempty block") - pos[0] == d.m {
                BlockClass::Isolated
            } else {
                BlockClass::Tangled
            };
            (label, class)
        })
        .collect()
}

/// Same diagram once the red line is removed, and every tangled block on the
/// same side in both.
pub fn b_equivalent(a: &DecoratedPartition, b: &DecoratedPartition) -> bool {
    if a.m != b.m || a.diagram() != b.diagram() {
        return false;
    }
    let (ba, bb) = (a.blocks(), b.blocks());
    classify_blocks(a)
        .into_iter()
        .filter(|(_, c)| *c == BlockClass::Tangled)
        .all(|(l, _)| ba[&l].0 == bb[&l].0)
}

/// Canonical partitions among all regions of `A_n^(m)`.
pub fn count_b_regions_enum(n: usize, m: usize) -> Result<BigCount> {
    count_b_regions_enum_with_limit(n, m, MAX_PARTITION_LETTERS)
}

pub fn count_b_regions_enum_with_limit(n: usize, m: usize, limit: usize) -> Result<BigCount> {
    if (m + 1) * n > limit {
        return Err(Error::Guard {
            what: format!("partitions with {} dots", (m + 1) * n),
            limit: limit as u64,
        });
    }
    let mut count = 0u64;
    for s in enumerate_sketches_with_limit(n, m, limit)? {
        if sketch_to_partition(&s)?.is_canonical() {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::regions_b_closed;
    use crate::sketches::enumerate_sketches;

    const EXAMPLE: &str = "3^2 3^1 1^2 3^0 1^1 1^0 0 5^0 5^1 5^2 4^0 2^0 4^1 2^1 4^2 2^2";

    #[test]
    fn example_partition() {
        let s: Sketch = EXAMPLE.parse().unwrap();
        let d = sketch_to_partition(&s).unwrap();
        assert_eq!(d.to_string(), "3 3 1 3 1 1 | 5 5 5 4 2 4 2 4 2");
        let blocks = d.blocks();
        assert_eq!(blocks[&3], (Side::Left, vec![1, 2, 4]));
        assert_eq!(blocks[&1], (Side::Left, vec![3, 5, 6]));
        assert_eq!(blocks[&5], (Side::Right, vec![1, 2, 3]));
        assert_eq!(blocks[&4], (Side::Right, vec![4, 6, 8]));
        assert_eq!(blocks[&2], (Side::Right, vec![5, 7, 9]));
        assert_eq!(partition_to_sketch(&d).unwrap(), s);

        let classes = classify_blocks(&d);
        let isolated: Vec<usize> = classes
            .iter()
            .filter(|(_, c)| **c == BlockClass::Isolated)
            .map(|(l, _)| *l)
            .collect();
        assert_eq!(isolated, vec![5]);

        let moved: DecoratedPartition = "3 3 1 3 1 1 5 5 5 | 4 2 4 2 4 2".parse().unwrap();
        assert!(b_equivalent(&d, &moved));
        assert!(b_equivalent(&moved, &d));
        assert!(moved.is_canonical());
        assert!(!d.is_canonical());
        assert!(b_equivalent(&d, &d));
        let across_tangled: DecoratedPartition = "3 3 1 3 1 1 5 5 5 4 2 4 2 4 2 |".parse().unwrap();
        assert!(!b_equivalent(&d, &across_tangled));
    }

    #[test]
    fn trivial_partitions() {
        let d = sketch_to_partition(&"0 1^0 1^1".parse().unwrap()).unwrap();
        assert_eq!(d.to_string(), "| 1 1");
        let d = sketch_to_partition(&"1^1 1^0 0".parse().unwrap()).unwrap();
        assert_eq!(d.to_string(), "1 1 |");
        let all: DecoratedPartition = "| 1 1 2 2 3 3".parse().unwrap();
        assert!(classify_blocks(&all).values().all(|c| *c == BlockClass::Isolated));
        let tangled: DecoratedPartition = "| 1 2 1 2 1 2".parse().unwrap();
        assert!(classify_blocks(&tangled).values().all(|c| *c == BlockClass::Tangled));
    }

    #[test]
    fn nesting_rejected() {
        assert!(!is_non_nesting(&[vec![1, 4, 5], vec![2], vec![3, 6]]));
        assert!(is_non_nesting(&[vec![1, 3], vec![2, 4]]));
        assert!("| 1 2 2 1".parse::<DecoratedPartition>().is_err());
        assert!("1 1 | 1 1".parse::<DecoratedPartition>().is_err());
        assert!("| 1 1 2".parse::<DecoratedPartition>().is_err());
        assert!("| 1 1 3 3".parse::<DecoratedPartition>().is_err());
    }

    #[test]
    fn bijection_round_trip() {
        for (n, m) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1)] {
            for s in enumerate_sketches(n, m).unwrap() {
                let d = sketch_to_partition(&s).unwrap();
                assert_eq!(partition_to_sketch(&d).unwrap(), s);
                assert_eq!(d.to_string().parse::<DecoratedPartition>().unwrap(), d);
            }
        }
    }

    #[test]
    fn equivalence_classes_count_b_regions() {
        for (n, m) in [(1, 1), (2, 1), (2, 2), (3, 1), (2, 3)] {
            let parts: Vec<DecoratedPartition> = enumerate_sketches(n, m)
                .unwrap()
                .iter()
                .map(|s| sketch_to_partition(s).unwrap())
                .collect();
            // classes by union of equivalent pairs; check transitivity on the way
            let mut class = vec![usize::MAX; parts.len()];
            let mut classes = 0;
            for i in 0..parts.len() {
                if class[i] != usize::MAX {
                    continue;
                }
                for j in i..parts.len() {
                    if b_equivalent(&parts[i], &parts[j]) {
                        assert_eq!(class[j], usize::MAX, "classes overlap");
                        assert!(b_equivalent(&parts[j], &parts[i]));
                        class[j] = classes;
                    }
                }
                classes += 1;
            }
            for i in 0..parts.len() {
                for j in 0..parts.len() {
                    assert_eq!(b_equivalent(&parts[i], &parts[j]), class[i] == class[j]);
                }
            }
            let expected = regions_b_closed(n, m).unwrap();
            assert_eq!(BigUint::from(classes as u64), expected, "n={n} m={m}");
            for c in 0..classes {
                let canon = (0..parts.len())
                    .filter(|&i| class[i] == c && parts[i].is_canonical())
                    .count();
                assert_eq!(canon, 1);
            }
            assert_eq!(count_b_regions_enum(n, m).unwrap(), expected);
        }
        assert_eq!(count_b_regions_enum(2, 1).unwrap(), BigUint::from(6u32));
        assert_eq!(count_b_regions_enum(1, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(count_b_regions_enum(2, 2).unwrap(), BigUint::from(10u32));
        assert!(count_b_regions_enum(4, 2).is_err());
    }
}
