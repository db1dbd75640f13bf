//! Arrangements `A_S` (multiplicative, base 2) and `C_S` (additive
//! deformations of the braid arrangement), their hyperplanes, and
//! characteristic polynomials by finite-field point counting.

mod count;
mod finite_field;
mod hyperplane;
mod modulus;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use count::count_complement_points;
pub use finite_field::{
    charpoly_ff, charpoly_ff_with, regions_convolution_check, regions_ff, verify_shift_theorem,
    FfOptions, FfReport,
};
pub use hyperplane::{hyperplanes_of, Hyperplane};
pub use modulus::{is_prime, two_is_primitive_root, ModulusInfo, ModulusPlan};

/// Shift sets keyed by `(i, j)` with `1 <= i < j <= n`.
pub type PairShifts = BTreeMap<(usize, usize), BTreeSet<i64>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    /// `x_i - x_j = k`
    Additive,
    /// `x_i = 2^k x_j`, optionally with the coordinate hyperplanes.
    Multiplicative,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArrangementSpec {
    n: usize,
    flavor: Flavor,
    pair_shifts: PairShifts,
    coordinate_hyperplanes: bool,
}

impl ArrangementSpec {
    pub fn new(
        n: usize,
        flavor: Flavor,
        pair_shifts: PairShifts,
        coordinate_hyperplanes: bool,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("dimension must be at least 1".into()));
        }
        if coordinate_hyperplanes && flavor == Flavor::Additive {
            return Err(Error::InvalidParameter(
                "coordinate hyperplanes only apply to the multiplicative flavor".into(),
            ));
        }
        for &(i, j) in pair_shifts.keys() {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::InvalidParameter(format!(
                    "pair ({i},{j}) is not 1 <= i < j <= {n}"
                )));
            }
        }
        let pair_shifts = pair_shifts
            .into_iter()
            .filter(|(_, s)| !s.is_empty())
            .collect();
        Ok(Self {
            n,
            flavor,
            pair_shifts,
            coordinate_hyperplanes,
        })
    }

    /// Same shift set on every pair.
    pub fn uniform(
        n: usize,
        flavor: Flavor,
        shifts: &BTreeSet<i64>,
        coordinate_hyperplanes: bool,
    ) -> Result<Self> {
        let mut pairs = PairShifts::new();
        for i in 1..=n {
            for j in i + 1..=n {
                pairs.insert((i, j), shifts.clone());
            }
        }
        Self::new(n, flavor, pairs, coordinate_hyperplanes)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn pair_shifts(&self) -> &PairShifts {
        &self.pair_shifts
    }

    pub fn coordinate_hyperplanes(&self) -> bool {
        self.coordinate_hyperplanes
    }

    pub fn shifts(&self, i: usize, j: usize) -> Option<&BTreeSet<i64>> {
        self.pair_shifts.get(&(i, j))
    }

    /// Largest `|k|` over all shift sets; 0 when there are none.
    pub fn max_shift(&self) -> u64 {
        self.pair_shifts
            .values()
            .flat_map(|s| s.iter())
            .map(|k| k.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub fn hyperplanes(&self) -> Vec<Hyperplane> {
        hyperplanes_of(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SpecDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SpecDocument::from(self)).expect("spec serializes")
    }
}

/// Serialized form: `{"n": 3, "flavor": "A", "coords": true, "shifts": {"1,2": [0, 1]}}`.
/// Flavor `"A"` is multiplicative, `"C"` additive.
#[derive(Debug, Serialize, Deserialize)]
struct SpecDocument {
    n: usize,
    flavor: String,
    #[serde(default)]
    coords: bool,
    #[serde(default)]
    shifts: BTreeMap<String, Vec<i64>>,
}

impl TryFrom<SpecDocument> for ArrangementSpec {
    type Error = Error;

    fn try_from(doc: SpecDocument) -> Result<Self> {
        let flavor = match doc.flavor.as_str() {
            "A" => Flavor::Multiplicative,
            "C" => Flavor::Additive,
            other => return Err(Error::Parse(format!("unknown flavor {other:?}"))),
        };
        let mut pairs = PairShifts::new();
        for (key, shifts) in doc.shifts {
            let bad = || Error::Parse(format!("bad pair key {key:?}, expected \"i,j\""));
            let (i, j) = key.split_once(',').ok_or_else(bad)?;
            let i: usize = i.trim().parse().map_err(|_| bad())?;
            let j: usize = j.trim().parse().map_err(|_| bad())?;
            pairs.entry((i, j)).or_default().extend(shifts);
        }
        ArrangementSpec::new(doc.n, flavor, pairs, doc.coords)
    }
}

impl From<&ArrangementSpec> for SpecDocument {
    fn from(spec: &ArrangementSpec) -> Self {
        SpecDocument {
            n: spec.n,
            flavor: match spec.flavor {
                Flavor::Multiplicative => "A".into(),
                Flavor::Additive => "C".into(),
            },
            coords: spec.coordinate_hyperplanes,
            shifts: spec
                .pair_shifts
                .iter()
                .map(|(&(i, j), s)| (format!("{i},{j}"), s.iter().copied().collect()))
                .collect(),
        }
    }
}

/// Named families, addressed as `"A:n,m"` and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PresetKind {
    /// `A_n^(m)`: coordinates and `x_i = 2^k x_j`, `k` in `[-m, m]`.
    A,
    /// `B_n^(m)`: `A_n^(m)` without coordinate hyperplanes.
    B,
    /// `C_n^(m)`: the m-Catalan arrangement.
    C,
    /// `Gamma_n^(m)`: `A_n^(m)` without `x_j = 2^m x_i` for `i < j`.
    Gamma,
    /// `Delta_n^(m)`: `Gamma_n^(m)` without coordinate hyperplanes.
    Delta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Preset {
    pub kind: PresetKind,
    pub n: usize,
    pub m: usize,
}

impl Preset {
    pub fn new(kind: PresetKind, n: usize, m: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParameter(format!(
                "preset needs n, m >= 1 (got n={n}, m={m})"
            )));
        }
        Ok(Self { kind, n, m })
    }

    pub fn spec(&self) -> ArrangementSpec {
        let m = self.m as i64;
        let full: BTreeSet<i64> = (-m..=m).collect();
        // x_j = 2^m x_i for i < j is x_i = 2^(-m) x_j.
        let shi: BTreeSet<i64> = (1 - m..=m).collect();
        let (flavor, shifts, coords) = match self.kind {
            PresetKind::A => (Flavor::Multiplicative, &full, true),
            PresetKind::B => (Flavor::Multiplicative, &full, false),
            PresetKind::C => (Flavor::Additive, &full, false),
            PresetKind::Gamma => (Flavor::Multiplicative, &shi, true),
            PresetKind::Delta => (Flavor::Multiplicative, &shi, false),
        };
        ArrangementSpec::uniform(self.n, flavor, shifts, coords).expect("presets are valid")
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "unknown preset {s:?}; expected one of A:n,m B:n,m C:n,m Gamma:n,m Delta:n,m"
            ))
        };
        let (name, params) = s.split_once(':').ok_or_else(bad)?;
        let kind = match name {
            "A" => PresetKind::A,
            "B" => PresetKind::B,
            "C" => PresetKind::C,
            "Gamma" => PresetKind::Gamma,
            "Delta" => PresetKind::Delta,
            _ => return Err(bad()),
        };
        let (n, m) = params.split_once(',').ok_or_else(bad)?;
        let n = n.trim().parse().map_err(|_| bad())?;
        let m = m.trim().parse().map_err(|_| bad())?;
        Preset::new(kind, n, m)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            PresetKind::A => "A",
            PresetKind::B => "B",
            PresetKind::C => "C",
            PresetKind::Gamma => "Gamma",
            PresetKind::Delta => "Delta",
        };
        write!(f, "{name}:{},{}", self.n, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_parsing() {
        let p: Preset = "Gamma:3,2".parse().unwrap();
        assert_eq!(p, Preset::new(PresetKind::Gamma, 3, 2).unwrap());
        assert_eq!(p.to_string(), "Gamma:3,2");
        assert!("Z:1,1".parse::<Preset>().is_err());
        assert!("A:0,1".parse::<Preset>().is_err());
        assert!("A:2".parse::<Preset>().is_err());
    }

    #[test]
    fn preset_shift_sets() {
        let gamma = Preset::new(PresetKind::Gamma, 2, 2).unwrap().spec();
        assert_eq!(
            gamma.shifts(1, 2).unwrap().iter().copied().collect::<Vec<_>>(),
            vec![-1, 0, 1, 2]
        );
        assert!(gamma.coordinate_hyperplanes());
        let delta = Preset::new(PresetKind::Delta, 2, 2).unwrap().spec();
        assert!(!delta.coordinate_hyperplanes());
        let c = Preset::new(PresetKind::C, 3, 1).unwrap().spec();
        assert_eq!(c.flavor(), Flavor::Additive);
        assert_eq!(c.max_shift(), 1);
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"n": 3, "flavor": "A", "coords": true, "shifts": {"1,2": [0], "1,3": [1], "2,3": []}}"#;
        let spec = ArrangementSpec::from_json(text).unwrap();
        assert_eq!(spec.n(), 3);
        assert_eq!(spec.pair_shifts().len(), 2);
        assert_eq!(ArrangementSpec::from_json(&spec.to_json()).unwrap(), spec);
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(ArrangementSpec::from_json(r#"{"n": 2, "flavor": "Q"}"#).is_err());
        assert!(
            ArrangementSpec::from_json(r#"{"n": 2, "flavor": "A", "shifts": {"2,1": [0]}}"#)
                .is_err()
        );
        assert!(
            ArrangementSpec::from_json(r#"{"n": 2, "flavor": "C", "coords": true}"#).is_err()
        );
    }
}
