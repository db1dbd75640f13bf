use serde::Serialize;

use super::{ArrangementSpec, Flavor};
use crate::error::{Error, Result};

pub(crate) fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = u128::from(modulus);
    let mut acc: u128 = 1 % m;
    let mut b = u128::from(base) % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= v {
        if v.is_multiple_of(d) {
            out.push(d);
            while v.is_multiple_of(d) {
                v /= d;
            }
        }
        d += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

/// Whether 2 generates the multiplicative group mod the prime `p`, checked as
/// `2^((p-1)/r) != 1` for every prime `r | p - 1`.
pub fn two_is_primitive_root(p: u64) -> bool {
    if !is_prime(p) || p == 2 {
        return false;
    }
    prime_factors(p - 1)
        .into_iter()
        .all(|r| pow_mod(2, (p - 1) / r, p) != 1)
}

/// Smallest modulus excess that keeps the reduced intersection lattice intact:
/// every cycle of shifts sums to at most `n * M` in absolute value, and two
/// shifts on one pair differ by at most `2M`.
fn sufficient_bound(spec: &ArrangementSpec) -> u64 {
    let m = spec.max_shift();
    (spec.n() as u64 * m).max(2 * m)
}

/// Lower end of the automatically planned moduli.
fn planned_bound(spec: &ArrangementSpec) -> u64 {
    let n = spec.n() as u64;
    let m = spec.max_shift();
    match spec.flavor() {
        Flavor::Multiplicative => (m + 1) * n,
        Flavor::Additive => n * (2 * m + 2),
    }
}

/// Errors unless counting points mod `q` evaluates the characteristic
/// polynomial of `spec`.
pub(crate) fn check_admissible(spec: &ArrangementSpec, q: u64) -> Result<()> {
    let bound = sufficient_bound(spec);
    let fail = |reason: String| {
        Err(Error::InadmissibleModulus {
            modulus: q,
            reason,
        })
    };
    if q > u64::from(u32::MAX) {
        return fail("modulus must fit in 32 bits".into());
    }
    match spec.flavor() {
        Flavor::Multiplicative => {
            if !is_prime(q) {
                return fail("multiplicative flavor needs a prime modulus".into());
            }
            if !two_is_primitive_root(q) {
                return fail("2 is not a primitive root".into());
            }
            if q - 1 <= bound {
                return fail(format!("need q - 1 > {bound}"));
            }
        }
        Flavor::Additive => {
            if q < 2 || q <= bound {
                return fail(format!("need q > {}", bound.max(1)));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModulusInfo {
    pub q: u64,
    pub prime: bool,
    pub two_primitive: bool,
}

impl ModulusInfo {
    fn of(q: u64) -> Self {
        let prime = is_prime(q);
        Self {
            q,
            prime,
            two_primitive: prime && two_is_primitive_root(q),
        }
    }
}

/// Moduli at which the complement is counted: the first `n + 1` are
/// interpolation nodes, the rest are held-out checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModulusPlan {
    moduli: Vec<ModulusInfo>,
}

impl ModulusPlan {
    /// `n + 2` moduli. Multiplicative: primes with primitive root 2 and
    /// `q - 1 > (M+1) n`. Additive: consecutive integers above `n (2M+2)`.
    pub fn for_spec(spec: &ArrangementSpec) -> Self {
        let needed = spec.n() + 2;
        let mut q = planned_bound(spec).max(sufficient_bound(spec)) + 1;
        let mut moduli = Vec::with_capacity(needed);
        while moduli.len() < needed {
            let candidate = match spec.flavor() {
                Flavor::Multiplicative => q + 1,
                Flavor::Additive => q,
            };
            if check_admissible(spec, candidate).is_ok() {
                moduli.push(ModulusInfo::of(candidate));
            }
            q += 1;
        }
        Self { moduli }
    }

    pub fn from_moduli(spec: &ArrangementSpec, qs: &[u64]) -> Result<Self> {
        if qs.len() < spec.n() + 2 {
            return Err(Error::InvalidParameter(format!(
                "need at least {} moduli, got {}",
                spec.n() + 2,
                qs.len()
            )));
        }
        for (i, &q) in qs.iter().enumerate() {
            if qs[..i].contains(&q) {
                return Err(Error::InvalidParameter(format!("modulus {q} repeated")));
            }
            check_admissible(spec, q)?;
        }
        Ok(Self {
            moduli: qs.iter().map(|&q| ModulusInfo::of(q)).collect(),
        })
    }

    pub fn moduli(&self) -> &[ModulusInfo] {
        &self.moduli
    }

    pub fn values(&self) -> Vec<u64> {
        self.moduli.iter().map(|m| m.q).collect()
    }

    pub fn largest(&self) -> u64 {
        self.moduli.iter().map(|m| m.q).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::{Preset, PresetKind};

    #[test]
    fn primitive_root_two_by_brute_force_order() {
        fn order_of_two(p: u64) -> u64 {
            let mut x = 2 % p;
            let mut k = 1;
            while x != 1 {
                x = x * 2 % p;
                k += 1;
            }
            k
        }
        for p in 3..400u64 {
            if is_prime(p) {
                assert_eq!(two_is_primitive_root(p), order_of_two(p) == p - 1, "p={p}");
            } else {
                assert!(!two_is_primitive_root(p));
            }
        }
        let listed: Vec<u64> = (3..70).filter(|&p| two_is_primitive_root(p)).collect();
        assert_eq!(listed, vec![3, 5, 11, 13, 19, 29, 37, 53, 59, 61, 67]);
    }

    #[test]
    fn plans_respect_thresholds() {
        let a44 = Preset::new(PresetKind::A, 4, 4).unwrap().spec();
        let plan = ModulusPlan::for_spec(&a44);
        assert_eq!(plan.values(), vec![29, 37, 53, 59, 61, 67]);
        assert!(plan.moduli().iter().all(|m| m.prime && m.two_primitive));

        let c32 = Preset::new(PresetKind::C, 3, 2).unwrap().spec();
        assert_eq!(ModulusPlan::for_spec(&c32).values(), vec![19, 20, 21, 22, 23]);
    }

    #[test]
    fn user_moduli_validated() {
        let a21 = Preset::new(PresetKind::A, 2, 1).unwrap().spec();
        assert!(ModulusPlan::from_moduli(&a21, &[11, 13, 19, 29]).is_ok());
        // 7: 2 has order 3
        assert!(ModulusPlan::from_moduli(&a21, &[7, 13, 19, 29]).is_err());
        assert!(ModulusPlan::from_moduli(&a21, &[11, 13, 19]).is_err());
        assert!(ModulusPlan::from_moduli(&a21, &[11, 11, 13, 19]).is_err());
        // q - 1 must exceed 2 = n * M
        assert!(ModulusPlan::from_moduli(&a21, &[3, 11, 13, 19]).is_err());
    }
}
