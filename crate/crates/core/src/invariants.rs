//! Conjugacy invariants of periodic maps: the isotropy invariant, `h1`, `h2`,
//! and the decision procedure built on them.
//!
//! Every invariant is stored in a canonical form so that two maps are
//! conjugate exactly when their [`ConjugacyInvariant`]s compare equal.

use serde::Serialize;

use crate::numtheory::{gcd, neg_mod, units_of};
use crate::orbifold::SymmetryDatum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignMode {
    /// One sign for the whole tuple (orientable quotient).
    Global,
    /// An independent sign per entry (non-orientable quotient).
    Entrywise,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IsotropyInvariant {
    pub modulus: u64,
    pub sign_mode: SignMode,
    pub boundary: Vec<u64>,
    pub cones: Vec<u64>,
}

/// `h2`: an unordered pair of `±` classes in `Z_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct H2 {
    pub modulus: u64,
    pub pair: [u64; 2],
}

impl H2 {
    /// Canonicalizes `{±a, ±b}` in `Z_m`: each class by its least
    /// representative, then sorted.
    pub fn from_values(a: i128, b: i128, modulus: u64) -> Self {
        let canon = |x: i128| {
            let v = x.rem_euclid(modulus as i128) as u64;
            v.min(neg_mod(v, modulus))
        };
        let mut pair = [canon(a), canon(b)];
        pair.sort_unstable();
        Self { modulus, pair }
    }
}

/// The complete discriminating tuple for conjugacy.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConjugacyInvariant {
    pub n: u64,
    pub orientable: bool,
    pub h: u32,
    pub b: usize,
    pub isotropy: IsotropyInvariant,
    pub h1: Option<u64>,
    pub h2: Option<H2>,
}

fn sorted(xs: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut v: Vec<u64> = xs.into_iter().collect();
    v.sort_unstable();
    v
}

/// Canonical isotropy invariant of `d`.
pub fn isotropy(d: &SymmetryDatum) -> IsotropyInvariant {
    let n = d.n();
    if d.orientable() {
        let plain = (
            sorted(d.boundary().iter().copied()),
            sorted(d.cones().iter().copied()),
        );
        let negated = (
            sorted(d.boundary().iter().map(|&v| neg_mod(v, n))),
            sorted(d.cones().iter().map(|&v| neg_mod(v, n))),
        );
        let (boundary, cones) = plain.min(negated);
        IsotropyInvariant {
            modulus: n,
            sign_mode: SignMode::Global,
            boundary,
            cones,
        }
    } else {
        let fold = |v: u64| v.min(neg_mod(v, n));
        IsotropyInvariant {
            modulus: n,
            sign_mode: SignMode::Entrywise,
            boundary: sorted(d.boundary().iter().map(|&v| fold(v))),
            cones: sorted(d.cones().iter().map(|&v| fold(v))),
        }
    }
}

/// Whether `h1` is part of the invariant: closed non-orientable quotient,
/// `n/2` even, and no cone value equal to `n/2`.
pub fn h1_defined(d: &SymmetryDatum) -> bool {
    let n = d.n();
    !d.orientable() && d.b() == 0 && n.is_multiple_of(4) && !d.cones().contains(&(n / 2))
}

/// `h1 = sum delta_i + sum chi_k xi_k`, where `chi_k` is 1 exactly when the
/// cone value lies in the upper half `{n/2+2, ..., n-2}`.
pub fn h1(d: &SymmetryDatum) -> Option<u64> {
    if !h1_defined(d) {
        return None;
    }
    let n = d.n() as u128;
    let half = n / 2;
    let handles: u128 = d.handles().iter().map(|&v| v as u128).sum();
    let upper: u128 = d.cones().iter().map(|&v| v as u128).filter(|&v| v > half).sum();
    Some(((handles + upper) % n) as u64)
}

/// `h2` for quotient a non-orientable genus-2 surface: the crosscap values
/// reduced mod `m = gcd(delta_1 + delta_2, epsilon_j, xi_k, n)`.
pub fn h2(d: &SymmetryDatum) -> Option<H2> {
    if d.orientable() || d.h() != 2 {
        return None;
    }
    let n = d.n();
    let (d1, d2) = (d.handles()[0], d.handles()[1]);
    let m = d
        .boundary()
        .iter()
        .chain(d.cones())
        .fold(gcd((d1 + d2) % n, n), |acc, &v| gcd(acc, v));
    Some(H2::from_values(d1 as i128, d2 as i128, m))
}

pub fn conjugacy_invariant(d: &SymmetryDatum) -> ConjugacyInvariant {
    ConjugacyInvariant {
        n: d.n(),
        orientable: d.orientable(),
        h: d.h(),
        b: d.b(),
        isotropy: isotropy(d),
        h1: h1(d),
        h2: h2(d),
    }
}

pub fn are_conjugate(a: &SymmetryDatum, b: &SymmetryDatum) -> bool {
    conjugacy_invariant(a) == conjugacy_invariant(b)
}

/// Whether `<f>` and `<f'>` are conjugate subgroups: some unit power of the
/// first map is conjugate to the second.
pub fn same_cyclic_group(a: &SymmetryDatum, b: &SymmetryDatum) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let target = conjugacy_invariant(b);
    units_of(a.n())
        .into_iter()
        .any(|k| conjugacy_invariant(&a.scaled(k)) == target)
}

/// Least invariant over all unit twists; a complete key for the conjugacy
/// class of the generated cyclic group.
pub fn twist_minimal_invariant(d: &SymmetryDatum) -> ConjugacyInvariant {
    units_of(d.n())
        .into_iter()
        .map(|k| conjugacy_invariant(&d.scaled(k)))
        .min()
        .expect("units_of is never empty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(n: u64, or: bool, h: u32, hs: &[u64], bs: &[u64], cs: &[u64]) -> SymmetryDatum {
        SymmetryDatum::new(n, or, h, hs.to_vec(), bs.to_vec(), cs.to_vec()).unwrap()
    }

    #[test]
    fn isotropy_examples() {
        let iso = isotropy(&datum(12, false, 1, &[1], &[], &[4, 8, 2]));
        assert_eq!(iso.sign_mode, SignMode::Entrywise);
        assert_eq!(iso.cones, vec![2, 4, 4]);

        let iso = isotropy(&datum(5, true, 0, &[], &[], &[1, 1, 4, 4]));
        assert_eq!(iso.sign_mode, SignMode::Global);
        assert!(iso.boundary.is_empty());
        assert_eq!(iso.cones, vec![1, 1, 4, 4]);

        let iso = isotropy(&datum(6, true, 0, &[], &[4], &[2]));
        assert_eq!((iso.boundary, iso.cones), (vec![2], vec![4]));
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1(&datum(8, false, 2, &[1, 7], &[], &[])), Some(0));
        assert_eq!(h1(&datum(8, false, 2, &[1, 3], &[], &[])), Some(4));
        assert_eq!(h1(&datum(8, false, 1, &[5], &[], &[6])), Some(3));
        // a cone at n/2 removes h1
        assert_eq!(h1(&datum(8, false, 1, &[1], &[], &[4, 2])), None);
        // n/2 odd
        assert_eq!(h1(&datum(6, false, 2, &[1, 5], &[], &[])), None);
    }

    #[test]
    fn h2_examples() {
        assert_eq!(
            h2(&datum(8, false, 2, &[1, 7], &[], &[])),
            Some(H2 {
                modulus: 8,
                pair: [1, 1]
            })
        );
        assert_eq!(
            h2(&datum(8, false, 2, &[1, 3], &[], &[])),
            Some(H2 {
                modulus: 4,
                pair: [1, 1]
            })
        );
        assert_eq!(
            h2(&datum(2, false, 2, &[1, 1], &[], &[])),
            Some(H2 {
                modulus: 2,
                pair: [1, 1]
            })
        );
        assert_eq!(h2(&datum(8, false, 1, &[1], &[], &[6])), None);
    }

    #[test]
    fn conjugacy_examples() {
        let a = datum(5, true, 1, &[1, 0], &[], &[1, 4]);
        let b = datum(5, true, 1, &[1, 0], &[], &[4, 1]);
        assert_eq!(conjugacy_invariant(&a), conjugacy_invariant(&b));
        assert!(are_conjugate(&a, &b));

        let p = datum(8, false, 2, &[1, 3], &[], &[]);
        let q = datum(8, false, 2, &[3, 1], &[], &[]);
        let r = datum(8, false, 2, &[1, 7], &[], &[]);
        assert!(are_conjugate(&p, &q));
        assert!(!are_conjugate(&r, &p));
        let (ir, ip) = (conjugacy_invariant(&r), conjugacy_invariant(&p));
        assert_eq!((ir.h1, ip.h1), (Some(0), Some(4)));
        assert_eq!((ir.h2.unwrap().modulus, ip.h2.unwrap().modulus), (8, 4));

        let ex = conjugacy_invariant(&datum(6, true, 0, &[], &[0], &[2, 4]));
        assert_eq!(ex.isotropy.boundary, vec![0]);
        assert_eq!(ex.isotropy.cones, vec![2, 4]);
        assert_eq!((ex.h1, ex.h2), (None, None));
    }

    #[test]
    fn cyclic_group_examples() {
        let p = datum(8, false, 2, &[1, 3], &[], &[]);
        assert!(same_cyclic_group(&p, &datum(8, false, 2, &[5, 7], &[], &[])));
        assert!(!same_cyclic_group(&datum(8, false, 2, &[1, 7], &[], &[]), &p));
        assert!(same_cyclic_group(&p, &p));
    }
}
