//! Dense univariate polynomials over an exact ring, plus exact Lagrange
//! interpolation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Num, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Polynomial in `t` stored densely; `coeffs[i]` is the coefficient of `t^i`.
/// The highest stored coefficient is nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// `prod (t - r)` over the given roots. The empty product is `1`.
    pub fn from_roots(roots: &[T]) -> Self {
        let mut acc = Self::constant(T::one());
        for r in roots {
            acc = &acc * &Self::new(vec![T::zero() - r.clone(), T::one()]);
        }
        acc
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> T {
        self.coeffs.get(power).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// Returns `p(t + c)`, expanded.
    pub fn shift(&self, c: &T) -> Self {
        let linear = Self::new(vec![c.clone(), T::one()]);
        let mut acc = Self::zero();
        for coef in self.coeffs.iter().rev() {
            acc = &(&acc * &linear) + &Self::constant(coef.clone());
        }
        acc
    }

    pub fn map<U: Clone + Num>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Clone + Num + Signed> Polynomial<T> {
    /// True when the coefficient of `t^i` has sign `(-1)^(degree - i)` or is
    /// zero, i.e. the shape of a characteristic polynomial.
    pub fn has_alternating_signs(&self) -> bool {
        let Some(deg) = self.degree() else {
            return true;
        };
        self.coeffs.iter().enumerate().all(|(i, c)| {
            if (deg - i) % 2 == 0 {
                !c.is_negative()
            } else {
                !c.is_positive()
            }
        })
    }

    /// Absolute values of the coefficients, indexed by power.
    pub fn abs_coefficients(&self) -> Vec<T> {
        self.coeffs.iter().map(|c| c.abs()).collect()
    }
}

impl<T: Clone + Num> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Clone + Num> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Clone + Num> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// Descending powers, explicit signs, ASCII: `t^2 - 5*t + 4`.
impl<T: Clone + Num + Signed + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            match power {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if power == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{power}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Accepts the display format and looser spellings such as `t^3-12t^2+41t-30`.
impl<T: Clone + Num + FromStr> FromStr for Polynomial<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut coeffs: Vec<T> = Vec::new();
        for term in terms {
            let (negative, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            let bad = || Error::Parse(format!("bad term {term:?} in {s:?}"));
            let (mag, power) = match body.find('t') {
                None => (body, 0usize),
                Some(pos) => {
                    let mag = body[..pos].trim_end_matches('*');
                    let rest = &body[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse()
                            .map_err(|_| bad())?
                    };
                    (mag, power)
                }
            };
            let mut value = if mag.is_empty() {
                T::one()
            } else {
                mag.parse::<T>().map_err(|_| bad())?
            };
            if negative {
                value = T::zero() - value;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, T::zero());
            }
            coeffs[power] = coeffs[power].clone() + value;
        }
        Ok(Self::new(coeffs))
    }
}

/// Coefficients (index = power) of the unique polynomial of degree below
/// `nodes.len()` through the given points, by exact Lagrange interpolation.
pub fn lagrange_interpolate<T: Scalar>(nodes: &[(T, T)]) -> Result<Vec<Ratio<T>>> {
    for (i, (xi, _)) in nodes.iter().enumerate() {
        if nodes[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::InvalidParameter(format!(
                "repeated interpolation node {xi}"
            )));
        }
    }
    let mut out = vec![Ratio::<T>::zero(); nodes.len()];
    for (i, (xi, yi)) in nodes.iter().enumerate() {
        let others: Vec<T> = nodes
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, (xj, _))| xj.clone())
            .collect();
        let basis = Polynomial::from_roots(&others);
        let denom = others
            .iter()
            .fold(T::one(), |acc, xj| acc * (xi.clone() - xj.clone()));
        for (k, c) in basis.coefficients().iter().enumerate() {
            out[k] = out[k].clone() + Ratio::new(yi.clone() * c.clone(), denom.clone());
        }
    }
    Ok(out)
}

/// Lagrange interpolation followed by an integrality assertion.
pub fn interpolate_integer<T: Scalar>(nodes: &[(T, T)]) -> Result<Polynomial<T>> {
    let coeffs = lagrange_interpolate(nodes)?;
    let ints = coeffs
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegerCoefficient(c.to_string()))
            }
        })
        .collect::<Result<Vec<T>>>()?;
    Ok(Polynomial::new(ints))
}
