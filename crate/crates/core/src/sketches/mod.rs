//! Sketches: words `w1 0 w2` over the letters `(i, k)`, `i in [n]`,
//! `k in [0, m]`, listing `0` and the values `2^k x_i` of a point in
//! increasing order.

mod enumerate;
mod witness;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use enumerate::{
    enumerate_sketches, enumerate_sketches_with_limit, positive_words, MAX_SKETCH_LETTERS,
};
pub use witness::{
    hyperplane_side, point_to_sketch, solve_difference_constraints, witness_point, LogPoint,
};

/// The symbol `2^power x_var`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub var: usize,
    pub power: usize,
}

impl Letter {
    pub fn new(var: usize, power: usize) -> Self {
        Self { var, power }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.var, self.power)
    }
}

/// One position of a word. `Zero` sorts before every letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Zero,
    Letter(Letter),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Zero => f.write_str("0"),
            Symbol::Letter(l) => l.fmt(f),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "0" {
            return Ok(Symbol::Zero);
        }
        let bad = || Error::Parse(format!("bad sketch letter {s:?}"));
        let (var, power) = s.split_once('^').ok_or_else(bad)?;
        let var: usize = var.parse().map_err(|_| bad())?;
        let power: usize = power.parse().map_err(|_| bad())?;
        if var == 0 {
            return Err(bad());
        }
        Ok(Symbol::Letter(Letter { var, power }))
    }
}

/// Parses space-separated symbols such as `1^1 1^0 0 2^0 2^1`.
pub fn parse_word(s: &str) -> Result<Vec<Symbol>> {
    s.split_whitespace().map(str::parse).collect()
}

/// Checks the positive-word conditions: `(i,k)` before `(i,k+1)`, and
/// `(i,k)` before `(j,l)` implies `(i,k+1)` before `(j,l+1)`.
/// `letters` must hold each `(i, k)`, `k in [0, m]`, exactly once for the
/// variables present.
pub fn is_positive_word(letters: &[Letter], m: usize) -> bool {
    let pos = |l: Letter| letters.iter().position(|&x| x == l);
    for (a, &x) in letters.iter().enumerate() {
        if x.power > m {
            return false;
        }
        if x.power < m && pos(Letter::new(x.var, x.power + 1)).is_none_or(|b| b < a) {
            return false;
        }
        for &y in &letters[a + 1..] {
            if x.power < m && y.power < m {
                let xs = pos(Letter::new(x.var, x.power + 1));
                let ys = pos(Letter::new(y.var, y.power + 1));
                if let (Some(xs), Some(ys)) = (xs, ys) {
                    if xs > ys {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Whether `word` is a sketch for `n = max variable`, `m = max power`.
pub fn is_valid_sketch(word: &[Symbol]) -> bool {
    Sketch::from_symbols(word).is_ok()
}

/// A validated sketch.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sketch {
    n: usize,
    m: usize,
    w1: Vec<Letter>,
    w2: Vec<Letter>,
}

impl Sketch {
    pub fn new(n: usize, m: usize, w1: Vec<Letter>, w2: Vec<Letter>) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParameter("sketches need n >= 1 and m >= 1".into()));
        }
        let invalid = |why: &str| Err(Error::Invalid(format!("not a sketch: {why}")));
        let mut side = vec![None; n + 1];
        let mut seen = vec![vec![false; m + 1]; n + 1];
        for (part, letters) in [(1u8, &w1), (2u8, &w2)] {
            for l in letters.iter() {
                if l.var == 0 || l.var > n || l.power > m {
                    return invalid(&format!("letter {l} outside the alphabet"));
                }
                if std::mem::replace(&mut seen[l.var][l.power], true) {
                    return invalid(&format!("letter {l} repeated"));
                }
                match side[l.var] {
                    None => side[l.var] = Some(part),
                    Some(p) if p != part => {
                        return invalid(&format!("variable {} split around 0", l.var))
                    }
                    _ => {}
                }
            }
        }
        if seen[1..].iter().any(|row| row.iter().any(|&s| !s)) {
            return invalid("missing letters");
        }
        if !is_positive_word(&w2, m) {
            return invalid("the part after 0 breaks the order conditions");
        }
        let rev: Vec<Letter> = w1.iter().rev().copied().collect();
        if !is_positive_word(&rev, m) {
            return invalid("the reversed part before 0 breaks the order conditions");
        }
        Ok(Self { n, m, w1, w2 })
    }

    /// Infers `n` and `m` from the largest variable and power.
    pub fn from_symbols(word: &[Symbol]) -> Result<Self> {
        let zeros: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Symbol::Zero)
            .map(|(i, _)| i)
            .collect();
        if zeros.len() != 1 {
            return Err(Error::Invalid("a sketch has exactly one 0".into()));
        }
        let letters = |part: &[Symbol]| -> Vec<Letter> {
            part.iter()
                .filter_map(|s| match s {
                    Symbol::Letter(l) => Some(*l),
                    Symbol::Zero => None,
                })
                .collect()
        };
        let (w1, w2) = (letters(&word[..zeros[0]]), letters(&word[zeros[0] + 1..]));
        let n = w1.iter().chain(&w2).map(|l| l.var).max().unwrap_or(0);
        let m = w1.iter().chain(&w2).map(|l| l.power).max().unwrap_or(0);
        Self::new(n, m, w1, w2)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Letters before `0`, increasing values (all negative).
    pub fn w1(&self) -> &[Letter] {
        &self.w1
    }

    /// Letters after `0`, increasing values (all positive).
    pub fn w2(&self) -> &[Letter] {
        &self.w2
    }

    pub fn zero_position(&self) -> usize {
        self.w1.len()
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        self.w1
            .iter()
            .map(|&l| Symbol::Letter(l))
            .chain(std::iter::once(Symbol::Zero))
            .chain(self.w2.iter().map(|&l| Symbol::Letter(l)))
            .collect()
    }

    /// Whether `x_var` is positive in the region.
    pub fn is_positive(&self, var: usize) -> bool {
        self.w2.iter().any(|l| l.var == var)
    }
}

impl PartialOrd for Sketch {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the symbol sequence.
impl Ord for Sketch {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.m)
            .cmp(&(other.n, other.m))
            .then_with(|| self.symbols().cmp(&other.symbols()))
    }
}

impl fmt::Display for Sketch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols().iter().map(Symbol::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Sketch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_symbols(&parse_word(s)?)
    }
}
