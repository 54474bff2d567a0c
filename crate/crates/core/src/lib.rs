//! Periodic automorphisms of closed orientable surfaces, read from their
//! quotient-orbifold data: conjugacy, extendability over `S^3` in each
//! orientation type, enumeration of extendable classes, and lens-space
//! surface embeddings.
//!
//! ```
//! use symx::{classify_all, ExtType, SymmetryDatum};
//!
//! let d = SymmetryDatum::new(8, false, 2, vec![1, 3], vec![], vec![]).unwrap();
//! assert_eq!(classify_all(&d).unwrap(), vec![ExtType::MP]);
//! ```

pub mod cli;
pub mod enumeration;
pub mod extendability;
pub mod invariants;
pub mod lens;
pub mod numtheory;
pub mod orbifold;

pub use enumeration::{
    datum_from_parameters, enumerate_extendable, oracle_census, verify_uniqueness, CensusBounds,
    CensusBucket, EnumError, ParameterRow,
};
pub use extendability::{
    canonical_f0_invariant, check, check_mm, check_mp, check_pm, check_pp, classify_all, compute_k,
    compute_m0, normalize, Clause, ExtError, ExtType, ExtendabilityVerdict, Witness,
};
pub use invariants::{
    are_conjugate, conjugacy_invariant, same_cyclic_group, ConjugacyInvariant, IsotropyInvariant, H2,
};
pub use lens::{LensError, LensSpace};
pub use numtheory::{NumError, Residue};
pub use orbifold::{DatumError, SymmetryDatum, Violation};
