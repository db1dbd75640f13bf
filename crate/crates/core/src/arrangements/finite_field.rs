use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;

use super::count::count_unchecked;
use super::{ArrangementSpec, Flavor, ModulusPlan, PairShifts};
use crate::error::{Error, Result};
use crate::numbers::{binomial, shift, zaslavsky};
use crate::polynomial::interpolate_integer;
use crate::{BigCount, IntPolynomial};

/// Default bound on `q^n` for the largest planned modulus.
pub const DEFAULT_POINT_LIMIT: u64 = 1_000_000_000;

#[derive(Debug, Clone)]
pub struct FfOptions {
    /// Overrides the automatic modulus plan.
    pub moduli: Option<Vec<u64>>,
    pub point_limit: u64,
}

impl Default for FfOptions {
    fn default() -> Self {
        Self {
            moduli: None,
            point_limit: DEFAULT_POINT_LIMIT,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FfReport {
    #[serde(serialize_with = "display_string")]
    pub polynomial: IntPolynomial,
    pub plan: ModulusPlan,
    /// `(q, complement points mod q)` for every planned modulus.
    pub samples: Vec<(u64, String)>,
}

fn display_string<S: serde::Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Characteristic polynomial from point counts: interpolate through `n + 1`
/// moduli, then require agreement at every remaining modulus, integrality,
/// monic degree `n` and alternating signs.
pub fn charpoly_ff_with(spec: &ArrangementSpec, options: &FfOptions) -> Result<FfReport> {
    let n = spec.n();
    let plan = match &options.moduli {
        Some(qs) => ModulusPlan::from_moduli(spec, qs)?,
        None => ModulusPlan::for_spec(spec),
    };
    let largest = u128::from(plan.largest());
    let points = (0..n).try_fold(1u128, |acc, _| acc.checked_mul(largest));
    if points.is_none_or(|p| p > u128::from(options.point_limit)) {
        return Err(Error::Guard {
            what: format!("{}^{n} points to count", plan.largest()),
            limit: options.point_limit,
        });
    }

    let samples: Vec<(u64, u64)> = plan
        .values()
        .into_iter()
        .map(|q| (q, count_unchecked(spec, q)))
        .collect();
    let nodes: Vec<(BigInt, BigInt)> = samples[..=n]
        .iter()
        .map(|&(q, c)| (BigInt::from(q), BigInt::from(c)))
        .collect();
    let poly = interpolate_integer(&nodes)?;
    for &(q, counted) in &samples[n + 1..] {
        let expected = poly.eval(&BigInt::from(q));
        if expected != BigInt::from(counted) {
            return Err(Error::InterpolationMismatch {
                modulus: q,
                expected: expected.to_string(),
                counted: counted.to_string(),
            });
        }
    }
    if poly.degree() != Some(n) || !poly.is_monic() || !poly.has_alternating_signs() {
        return Err(Error::NotCharacteristic(format!(
            "interpolated {poly} is not monic of degree {n} with alternating signs"
        )));
    }
    Ok(FfReport {
        polynomial: poly,
        plan,
        samples: samples
            .into_iter()
            .map(|(q, c)| (q, c.to_string()))
            .collect(),
    })
}

pub fn charpoly_ff(spec: &ArrangementSpec) -> Result<IntPolynomial> {
    charpoly_ff_with(spec, &FfOptions::default()).map(|r| r.polynomial)
}

pub fn regions_ff(spec: &ArrangementSpec) -> Result<BigCount> {
    zaslavsky(&charpoly_ff(spec)?, spec.n())
}

/// Checks `chi_{A_S}(t) = chi_{C_S}(t - 1)` with both sides counted
/// independently.
pub fn verify_shift_theorem(n: usize, pair_shifts: &PairShifts) -> Result<bool> {
    let multiplicative = ArrangementSpec::new(n, Flavor::Multiplicative, pair_shifts.clone(), true)?;
    let additive = ArrangementSpec::new(n, Flavor::Additive, pair_shifts.clone(), false)?;
    let lhs = charpoly_ff(&multiplicative)?;
    let rhs = shift(&charpoly_ff(&additive)?, -1);
    Ok(lhs == rhs)
}

/// Checks `r(A_n^S) = sum_k C(n,k) r(C_k^S) r(C_{n-k}^S)` with `r(C_0^S) = 1`.
pub fn regions_convolution_check(shifts: &BTreeSet<i64>, n: usize) -> Result<bool> {
    let lhs = regions_ff(&ArrangementSpec::uniform(n, Flavor::Multiplicative, shifts, true)?)?;
    let mut catalan = vec![BigUint::one()];
    for k in 1..=n {
        catalan.push(regions_ff(&ArrangementSpec::uniform(k, Flavor::Additive, shifts, false)?)?);
    }
    let rhs: BigUint = (0..=n)
        .map(|k| binomial(n, k) * &catalan[k] * &catalan[n - k])
        .sum();
    Ok(lhs == rhs)
}
