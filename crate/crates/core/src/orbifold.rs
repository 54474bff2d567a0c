//! Quotient-orbifold data of a periodic map.
//!
//! A [`SymmetryDatum`] records the order `n` of the map, the topology of the
//! underlying quotient surface, and the values in `Z_n` that the classifying
//! epimorphism assigns to a canonical generator system: handle generators
//! (`alpha_i, beta_i` or crosscaps `delta_i`), boundary loops `epsilon_j`,
//! and cone loops `xi_k`. Mirror generators `eta_j` are not stored; their
//! value is forced to `n/2`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numtheory::{gcd, inverse_mod, mul_mod, order_of, reduce};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatumError {
    #[error("order n must be positive")]
    ZeroOrder,
    #[error("field `handles`: expected {expected} values for h = {h}, got {got}")]
    HandleCount { h: u32, expected: usize, got: usize },
    #[error("field `{field}`: value {value} is not a least residue modulo {n}")]
    ValueOutOfRange { field: &'static str, value: u64, n: u64 },
    #[error("unrealizable datum: {0}")]
    Unrealizable(String),
    #[error("not a unit power: gcd({m}, {n}) != 1")]
    NotUnitPower { m: i64, n: u64 },
    #[error("{m} does not divide n = {n}")]
    NotDivisor { m: u64, n: u64 },
}

/// One violated bullet of the validity contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Violation {
    /// The abelianized long relation does not sum to zero.
    Relation {
        sum: u64,
    },
    ZeroCone {
        index: usize,
    },
    MirrorModulus,
    OddOrderReversing,
    HandleParity {
        index: usize,
        odd: bool,
    },
    BoundaryParity {
        index: usize,
    },
    ConeParity {
        index: usize,
    },
    NotSurjective {
        generated: u64,
    },
    Genus,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Relation { sum } => {
                write!(f, "long relation fails: generator values sum to {sum}, not 0")
            }
            Violation::ZeroCone { index } => write!(f, "cone value {index} must be nonzero"),
            Violation::MirrorModulus => write!(f, "b>0 requires n≡2 (mod 4)"),
            Violation::OddOrderReversing => {
                write!(f, "orientation-reversing datum requires n even")
            }
            Violation::HandleParity { index, odd: true } => {
                write!(f, "handle value must be odd (handle {index})")
            }
            Violation::HandleParity { index, odd: false } => {
                write!(f, "handle value must be even (handle {index})")
            }
            Violation::BoundaryParity { index } => {
                write!(f, "boundary value must be even (boundary {index})")
            }
            Violation::ConeParity { index } => write!(f, "cone value must be even (cone {index})"),
            Violation::NotSurjective { generated } => write!(
                f,
                "values do not generate Z_n (they generate the subgroup of index {generated})"
            ),
            Violation::Genus => write!(f, "Riemann-Hurwitz genus is not a nonnegative integer"),
        }
    }
}

#[derive(Deserialize)]
struct RawDatum {
    n: u64,
    orientable: bool,
    h: u32,
    #[serde(default)]
    handles: Vec<u64>,
    #[serde(default)]
    boundary: Vec<u64>,
    #[serde(default)]
    cones: Vec<u64>,
}

impl TryFrom<RawDatum> for SymmetryDatum {
    type Error = DatumError;

    fn try_from(raw: RawDatum) -> Result<Self, Self::Error> {
        SymmetryDatum::new(raw.n, raw.orientable, raw.h, raw.handles, raw.boundary, raw.cones)
    }
}

/// Order, quotient topology and generator values of one periodic map.
///
/// Construction only checks the shape (lengths, residue ranges); the
/// topological validity contract is reported by [`SymmetryDatum::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDatum")]
pub struct SymmetryDatum {
    n: u64,
    orientable: bool,
    h: u32,
    handles: Vec<u64>,
    boundary: Vec<u64>,
    cones: Vec<u64>,
}

impl SymmetryDatum {
    pub fn new(
        n: u64,
        orientable: bool,
        h: u32,
        handles: Vec<u64>,
        boundary: Vec<u64>,
        cones: Vec<u64>,
    ) -> Result<Self, DatumError> {
        if n == 0 {
            return Err(DatumError::ZeroOrder);
        }
        let expected = if orientable { 2 * h as usize } else { h as usize };
        if handles.len() != expected {
            return Err(DatumError::HandleCount {
                h,
                expected,
                got: handles.len(),
            });
        }
        for (field, values) in [("handles", &handles), ("boundary", &boundary), ("cones", &cones)] {
            if let Some(&value) = values.iter().find(|&&v| v >= n) {
                return Err(DatumError::ValueOutOfRange { field, value, n });
            }
        }
        Ok(Self {
            n,
            orientable,
            h,
            handles,
            boundary,
            cones,
        })
    }

    /// Builds a datum from arbitrary integers, reducing every value mod `n`.
    pub fn from_integers(
        n: u64,
        orientable: bool,
        h: u32,
        handles: &[i64],
        boundary: &[i64],
        cones: &[i64],
    ) -> Result<Self, DatumError> {
        if n == 0 {
            return Err(DatumError::ZeroOrder);
        }
        let red = |xs: &[i64]| xs.iter().map(|&x| reduce(x as i128, n)).collect();
        Self::new(n, orientable, h, red(handles), red(boundary), red(cones))
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn b(&self) -> usize {
        self.boundary.len()
    }

    pub fn s(&self) -> usize {
        self.cones.len()
    }

    pub fn handles(&self) -> &[u64] {
        &self.handles
    }

    pub fn boundary(&self) -> &[u64] {
        &self.boundary
    }

    pub fn cones(&self) -> &[u64] {
        &self.cones
    }

    /// Cone indices `n_k`, derived from the values.
    pub fn cone_orders(&self) -> Vec<u64> {
        self.cones.iter().map(|&v| order_of(v, self.n)).collect()
    }

    /// The map reverses orientation exactly when the quotient is
    /// non-orientable as an orbifold: a non-orientable underlying surface or
    /// mirror boundary.
    pub fn is_orientation_reversing(&self) -> bool {
        !self.orientable || !self.boundary.is_empty()
    }

    /// Every stored value in datum order: handles, boundary, cones.
    pub fn values(&self) -> impl Iterator<Item = u64> + '_ {
        self.handles
            .iter()
            .chain(&self.boundary)
            .chain(&self.cones)
            .copied()
    }

    /// Checks every bullet of the validity contract and lists each failure.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let n = self.n;
        let mut violations = Vec::new();

        let mut sum: u128 = self.boundary.iter().chain(&self.cones).map(|&v| v as u128).sum();
        if !self.orientable {
            sum += 2 * self.handles.iter().map(|&v| v as u128).sum::<u128>();
        }
        let sum = (sum % n as u128) as u64;
        if sum != 0 {
            violations.push(Violation::Relation { sum });
        }

        for (index, &v) in self.cones.iter().enumerate() {
            if v == 0 {
                violations.push(Violation::ZeroCone { index });
            }
        }

        if !self.boundary.is_empty() && n % 4 != 2 {
            violations.push(Violation::MirrorModulus);
        }

        if self.is_orientation_reversing() {
            if !n.is_multiple_of(2) {
                violations.push(Violation::OddOrderReversing);
            } else {
                let odd = !self.orientable;
                for (index, &v) in self.handles.iter().enumerate() {
                    if (v % 2 == 1) != odd {
                        violations.push(Violation::HandleParity { index, odd });
                    }
                }
                for (index, &v) in self.boundary.iter().enumerate() {
                    if v % 2 != 0 {
                        violations.push(Violation::BoundaryParity { index });
                    }
                }
                for (index, &v) in self.cones.iter().enumerate() {
                    if v % 2 != 0 {
                        violations.push(Violation::ConeParity { index });
                    }
                }
            }
        }

        let mut generated = self.values().fold(n, gcd);
        if !self.boundary.is_empty() && n.is_multiple_of(2) {
            generated = gcd(generated, n / 2);
        }
        if generated != 1 {
            violations.push(Violation::NotSurjective { generated });
        }

        if self.euler_genus().is_err() {
            violations.push(Violation::Genus);
        }

        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// `2g - 2 = -n * chi_under + sum_k (n - n/n_k)`; mirror circles add
    /// nothing beyond the underlying Euler characteristic.
    pub fn euler_genus(&self) -> Result<u64, DatumError> {
        let n = self.n as i128;
        let h = self.h as i128;
        let b = self.boundary.len() as i128;
        let chi_under = if self.orientable { 2 - 2 * h - b } else { 2 - h - b };
        let cone_terms: i128 = self.cone_orders().iter().map(|&nk| n - n / nk as i128).sum();
        let twice_g = -n * chi_under + cone_terms + 2;
        if twice_g < 0 || twice_g % 2 != 0 {
            return Err(DatumError::Unrealizable(format!(
                "Riemann-Hurwitz gives 2g = {twice_g}"
            )));
        }
        Ok((twice_g / 2) as u64)
    }

    /// Datum of `f^m` for a unit `m`: every value is multiplied by the
    /// inverse of `m`.
    pub fn power_twist(&self, m: i64) -> Result<Self, DatumError> {
        let k = inverse_mod(m, self.n).ok_or(DatumError::NotUnitPower { m, n: self.n })?;
        Ok(self.scaled(k))
    }

    /// Multiplies every stored value by `k` (no unit check).
    pub(crate) fn scaled(&self, k: u64) -> Self {
        let n = self.n;
        let scale = |xs: &[u64]| xs.iter().map(|&v| mul_mod(v, k, n)).collect();
        Self {
            n,
            orientable: self.orientable,
            h: self.h,
            handles: scale(&self.handles),
            boundary: scale(&self.boundary),
            cones: scale(&self.cones),
        }
    }

    /// All generator values reduced mod a divisor `m` of `n`, in datum order.
    pub fn reduce_values_mod(&self, m: u64) -> Result<Vec<u64>, DatumError> {
        if m == 0 || !self.n.is_multiple_of(m) {
            return Err(DatumError::NotDivisor { m, n: self.n });
        }
        Ok(self.values().map(|v| v % m).collect())
    }
}

impl fmt::Display for SymmetryDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} {} h={} handles={:?} boundary={:?} cones={:?}",
            self.n,
            if self.orientable { "or" } else { "non-or" },
            self.h,
            self.handles,
            self.boundary,
            self.cones
        )
    }
}
