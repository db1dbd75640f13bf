//! Raney numbers, factorial region formulas, closed-form characteristic
//! polynomials and Zaslavsky evaluation.
//!
//! `A_n(m, r) = r / (n(m+1) + r) * C(n(m+1) + r, n)` throughout.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{BigCount, IntPolynomial};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

fn require_positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// Two-parameter Fuss-Catalan (Raney) number `A_n(m, r)`.
///
/// Computed as `r * C(n(m+1)+r, n)` first and then divided by `n(m+1)+r`;
/// the division is asserted exact.
pub fn raney(n: usize, m: usize, r: usize) -> Result<BigCount> {
    require_positive("m", m)?;
    require_positive("r", r)?;
    let top = n * (m + 1) + r;
    let numer = BigUint::from(r) * binomial(top, n);
    let (q, rem) = numer.div_rem(&BigUint::from(top));
    assert!(rem.is_zero(), "A_{n}({m},{r}) is not integral");
    Ok(q)
}

/// `(t - 1)(t - mn - 2)(t - mn - 3) ... (t - mn - n)`.
pub fn charpoly_a_closed(n: usize, m: usize) -> Result<IntPolynomial> {
    require_positive("n", n)?;
    require_positive("m", m)?;
    let mut roots = vec![BigInt::one()];
    roots.extend((2..=n).map(|k| BigInt::from(m * n + k)));
    Ok(IntPolynomial::from_roots(&roots))
}

/// `t (t - mn - 1) ... (t - mn - n + 1)`, the m-Catalan arrangement.
pub fn charpoly_c_closed(n: usize, m: usize) -> Result<IntPolynomial> {
    require_positive("n", n)?;
    require_positive("m", m)?;
    let mut roots = vec![BigInt::zero()];
    roots.extend((1..n).map(|k| BigInt::from(m * n + k)));
    Ok(IntPolynomial::from_roots(&roots))
}

/// `p(t + c)`.
pub fn shift(p: &IntPolynomial, c: i64) -> IntPolynomial {
    p.shift(&BigInt::from(c))
}

/// Region count `(-1)^n p(-1)` of an arrangement in dimension `n`.
pub fn zaslavsky(p: &IntPolynomial, n: usize) -> Result<BigCount> {
    if p.degree() != Some(n) {
        return Err(Error::NotCharacteristic(format!(
            "degree of {p} is not {n}"
        )));
    }
    let mut value = p.eval(&BigInt::from(-1));
    if n % 2 == 1 {
        value = -value;
    }
    if value.is_negative() {
        return Err(Error::NotCharacteristic(format!(
            "(-1)^{n} p(-1) = {value} is negative for {p}"
        )));
    }
    Ok(value.to_biguint().expect("nonnegative"))
}

/// `2 (nm+n+1)! / (nm+2)!`.
pub fn regions_a_closed(n: usize, m: usize) -> Result<BigCount> {
    require_positive("n", n)?;
    require_positive("m", m)?;
    let prod = ((n * m + 3)..=(n * m + n + 1)).fold(BigUint::one(), |acc, k| acc * BigUint::from(k));
    Ok(prod * 2u32)
}

/// `n! * sum_{k=1..n} (k+1) A_{n-k}(m, mk)`, counting decorated paths by the
/// number of axis points.
pub fn regions_a_axis_identity(n: usize, m: usize) -> Result<BigCount> {
    require_positive("n", n)?;
    let mut sum = BigUint::zero();
    for k in 1..=n {
        sum += BigUint::from(k + 1) * raney(n - k, m, m * k)?;
    }
    Ok(factorial(n) * sum)
}

/// Regions of `B_n^(m)`: `n! (A_n(m,2) - A_{n-1}(m,2))`.
pub fn regions_b_closed(n: usize, m: usize) -> Result<BigCount> {
    require_positive("n", n)?;
    let hi = raney(n, m, 2)?;
    let lo = raney(n - 1, m, 2)?;
    Ok(factorial(n) * (hi - lo))
}

/// `base^exp` with the tree-function convention for the edge terms: a
/// negative exponent only ever meets base 1 and evaluates to 1.
fn tree_pow(base: usize, exp: isize) -> BigUint {
    if exp < 0 {
        assert!(
            base == 1 && exp == -1,
            "negative exponent {exp} on base {base}"
        );
        return BigUint::one();
    }
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// `sum_{k=0..n} C(n,k) (mk+1)^(k-1) (m(n-k)+1)^(n-k-1)`.
pub fn regions_gamma_closed(n: usize, m: usize) -> Result<BigCount> {
    require_positive("n", n)?;
    require_positive("m", m)?;
    let mut sum = BigUint::zero();
    for k in 0..=n {
        sum += binomial(n, k)
            * tree_pow(m * k + 1, k as isize - 1)
            * tree_pow(m * (n - k) + 1, (n - k) as isize - 1);
    }
    Ok(sum)
}

pub fn regions_delta_closed(n: usize, m: usize) -> Result<BigCount> {
    let gamma = regions_gamma_closed(n, m)?;
    let mut sub = BigUint::zero();
    for k in 1..=n {
        sub += binomial(n, k)
            * BigUint::from(k)
            * tree_pow(m * (k - 1) + 1, k as isize - 2)
            * tree_pow(m * (n - k) + 1, (n - k) as isize - 1);
    }
    let diff = BigInt::from(gamma) - BigInt::from(sub);
    diff.to_biguint().ok_or_else(|| {
        Error::InvalidParameter(format!("Delta region formula negative for n={n}, m={m}"))
    })
}

/// Checks that summing `prod A_{k_i}(m, 1)` over all compositions of `n` into
/// `r` nonnegative parts gives `A_n(m, r)`.
pub fn raney_convolution_check(n: usize, m: usize, r: usize) -> Result<bool> {
    if r < 2 {
        return Err(Error::InvalidParameter("r must be at least 2".into()));
    }
    let singles: Vec<BigUint> = (0..=n).map(|k| raney(k, m, 1)).collect::<Result<_>>()?;
    // power[j] = sum over compositions of j into `parts` parts.
    let mut power = singles.clone();
    for _ in 1..r {
        power = (0..=n)
            .map(|j| (0..=j).map(|i| &power[i] * &singles[j - i]).sum())
            .collect();
    }
    Ok(power[n] == raney(n, m, r)?)
}
