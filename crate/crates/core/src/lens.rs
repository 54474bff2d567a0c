//! Lens spaces `L(l, m)` and which closed surfaces embed in them.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::numtheory::{gcd, inverse_mod, neg_mod, reduce, Residue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LensError {
    #[error("lens space needs l >= 1")]
    ZeroOrder,
    #[error("gcd({l}, {m}) != 1")]
    NotCoprime { l: u64, m: i64 },
    #[error("no embedded non-orientable closed surface in L({l}, {m}): l is odd")]
    OddOrder { l: u64, m: u64 },
    #[error("r = {0} is below 2")]
    SmallR(u64),
}

/// `L(l, m)` with `m` stored as a least residue; `L(1, 0)` is `S^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LensSpace {
    l: u64,
    m: u64,
}

impl LensSpace {
    pub fn new(l: u64, m: i64) -> Result<Self, LensError> {
        if l == 0 {
            return Err(LensError::ZeroOrder);
        }
        let m_red = reduce(m as i128, l);
        if gcd(m_red, l) != 1 {
            return Err(LensError::NotCoprime { l, m });
        }
        Ok(Self { l, m: m_red })
    }

    pub fn l(self) -> u64 {
        self.l
    }

    pub fn m(self) -> u64 {
        self.m
    }

    /// The residues `±m^{±1}` that name the same space.
    fn equivalents(self) -> [u64; 4] {
        let inv = inverse_mod(self.m as i64, self.l).unwrap_or(0);
        [self.m, neg_mod(self.m, self.l), inv, neg_mod(inv, self.l)]
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.l, self.m)
    }
}

/// `L(l, m) = L(l', m')` iff `l = l'` and `m' = ±m^{±1} (mod l)`.
pub fn lens_homeomorphic(a: LensSpace, b: LensSpace) -> bool {
    a.l == b.l && a.equivalents().contains(&b.m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoreBounds {
    pub orientable: bool,
    pub nonorientable: bool,
}

/// Which kinds of embedded surface a core curve can bound.
pub fn core_bounds(a: LensSpace) -> CoreBounds {
    CoreBounds {
        orientable: a.l <= 1,
        nonorientable: a.l % 2 == 1,
    }
}

/// Necessary condition for a non-orientable genus-`h` closed surface in
/// `a`: `l` even with `l/2 = h (mod 2)`.
pub fn parity_obstruction(a: LensSpace, h: u64) -> bool {
    a.l.is_multiple_of(2) && (a.l / 2) % 2 == h % 2
}

pub fn admits_projective_plane(a: LensSpace) -> bool {
    a.l == 2
}

/// Klein bottles embed exactly in `L(4r, 2r ± 1)`. Both residues are their
/// own inverses mod `4r`, so the test is a residue check.
pub fn admits_klein_bottle(a: LensSpace) -> bool {
    if !a.l.is_multiple_of(4) {
        return false;
    }
    let r = a.l / 4;
    let targets = [2 * r - 1, 2 * r + 1];
    a.equivalents().iter().any(|m| targets.contains(m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tristate {
    Yes,
    Unknown,
}

impl fmt::Display for Tristate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tristate::Yes => "yes",
            Tristate::Unknown => "unknown",
        })
    }
}

/// `Yes` on the known family `L(4r+2, 2r-1)`; no other space is decided.
pub fn admits_genus3(a: LensSpace) -> Tristate {
    if a.l % 4 != 2 || a.l < 6 {
        return Tristate::Unknown;
    }
    let r = (a.l - 2) / 4;
    let family = LensSpace::new(a.l, 2 * r as i64 - 1).expect("2r-1 is a unit mod 4r+2");
    if lens_homeomorphic(a, family) {
        Tristate::Yes
    } else {
        Tristate::Unknown
    }
}

/// Homology class of the core of an embedded non-orientable closed surface.
pub fn torsion_image(a: LensSpace) -> Result<Residue, LensError> {
    if !a.l.is_multiple_of(2) {
        return Err(LensError::OddOrder { l: a.l, m: a.m });
    }
    Ok(Residue::new((a.l / 2) as i64, a.l).expect("l > 0"))
}

/// The two possible images of the crosscap classes of a Klein bottle in
/// `L(4r, 2r ± 1)`: `{1, 2r-1}` and `{-1, 2r+1}` mod `4r`.
pub fn klein_homology_images(r: u64) -> Result<[[Residue; 2]; 2], LensError> {
    if r < 2 {
        return Err(LensError::SmallR(r));
    }
    let n = 4 * r;
    let res = |v: i64| Residue::new(v, n).expect("4r > 0");
    Ok([[res(1), res(2 * r as i64 - 1)], [res(-1), res(2 * r as i64 + 1)]])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lens(l: u64, m: i64) -> LensSpace {
        LensSpace::new(l, m).unwrap()
    }

    #[test]
    fn homeomorphism_examples() {
        assert!(lens_homeomorphic(lens(12, 7), lens(12, 5)));
        assert!(!lens_homeomorphic(lens(8, 1), lens(8, 3)));
        assert!(lens_homeomorphic(lens(1, 0), lens(1, 0)));
        assert!(matches!(LensSpace::new(8, 2), Err(LensError::NotCoprime { .. })));
    }

    #[test]
    fn core_examples() {
        assert_eq!(
            core_bounds(lens(3, 1)),
            CoreBounds {
                orientable: false,
                nonorientable: true
            }
        );
        assert_eq!(
            core_bounds(lens(4, 1)),
            CoreBounds {
                orientable: false,
                nonorientable: false
            }
        );
        assert_eq!(
            core_bounds(lens(1, 0)),
            CoreBounds {
                orientable: true,
                nonorientable: true
            }
        );
    }

    #[test]
    fn parity_examples() {
        assert!(!parity_obstruction(lens(6, 1), 2));
        assert!(parity_obstruction(lens(8, 3), 2));
        assert!(parity_obstruction(lens(2, 1), 1));
    }

    #[test]
    fn surface_examples() {
        assert!(admits_projective_plane(lens(2, 1)));
        assert!(!admits_projective_plane(lens(4, 1)));
        assert!(!admits_projective_plane(lens(1, 0)));

        assert!(admits_klein_bottle(lens(8, 3)));
        assert!(!admits_klein_bottle(lens(8, 1)));
        assert!(admits_klein_bottle(lens(4, 1)));

        assert_eq!(admits_genus3(lens(6, 1)), Tristate::Yes);
        assert_eq!(admits_genus3(lens(8, 3)), Tristate::Unknown);
        assert_eq!(admits_genus3(lens(10, 3)), Tristate::Yes);
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(torsion_image(lens(8, 3)).unwrap().value(), 4);
        assert_eq!(torsion_image(lens(2, 1)).unwrap().value(), 1);
        assert_eq!(torsion_image(lens(12, 5)).unwrap().value(), 6);
        assert!(torsion_image(lens(5, 2)).is_err());
    }

    #[test]
    fn klein_images() {
        let v = |p: [Residue; 2]| [p[0].value(), p[1].value()];
        let [a, b] = klein_homology_images(2).unwrap();
        assert_eq!((v(a), v(b)), ([1, 3], [7, 5]));
        let [a, b] = klein_homology_images(3).unwrap();
        assert_eq!((v(a), v(b)), ([1, 5], [11, 7]));
        assert_eq!([-a[0], -a[1]], b);
        assert!(klein_homology_images(1).is_err());
    }
}
