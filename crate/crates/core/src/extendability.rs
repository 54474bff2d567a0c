//! The four extendability predicates over `S^3`, one per orientation type
//! `(f, phi)`, together with witness parameters and normal forms.
//!
//! Every predicate scans generators `alpha` over the units of `Z_n` and
//! reports the first match, so witnesses are deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::enumeration::{datum_from_parameters, ParameterRow};
use crate::invariants::{
    conjugacy_invariant, h1, h1_defined, ConjugacyInvariant, IsotropyInvariant, SignMode, H2,
};
use crate::numtheory::{crt_solve, divisors, gcd, inverse_mod, mul_mod, neg_mod, order_of, units_of};
use crate::orbifold::{SymmetryDatum, Violation};

/// Orientation type of the pair `(f, phi)`: first sign for `f` on the
/// surface, second for the extension `phi` on `S^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ExtType {
    PP,
    MM,
    PM,
    MP,
}

impl ExtType {
    pub const ALL: [ExtType; 4] = [ExtType::PP, ExtType::MM, ExtType::PM, ExtType::MP];

    /// Whether `f` itself preserves orientation in this type.
    pub fn preserves_surface(self) -> bool {
        matches!(self, ExtType::PP | ExtType::PM)
    }
}

impl fmt::Display for ExtType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExtType::PP => "PP",
            ExtType::MM => "MM",
            ExtType::PM => "PM",
            ExtType::MP => "MP",
        };
        f.write_str(s)
    }
}

impl FromStr for ExtType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pp" | "++" => Ok(ExtType::PP),
            "mm" | "--" => Ok(ExtType::MM),
            "pm" | "+-" => Ok(ExtType::PM),
            "mp" | "-+" => Ok(ExtType::MP),
            _ => Err(format!("unknown type `{s}` (expected pp, mm, pm or mp)")),
        }
    }
}

/// Which clause of a type's criterion matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Clause {
    #[serde(rename = "PP")]
    Pp,
    #[serde(rename = "MM(1)")]
    Mm1,
    #[serde(rename = "MM(2)")]
    Mm2,
    #[serde(rename = "MM(3)")]
    Mm3,
    #[serde(rename = "PM")]
    Pm,
    #[serde(rename = "MP(1)")]
    Mp1,
    #[serde(rename = "MP(2)")]
    Mp2,
    #[serde(rename = "MP(3)")]
    Mp3,
}

impl Clause {
    pub fn ext_type(self) -> ExtType {
        match self {
            Clause::Pp => ExtType::PP,
            Clause::Mm1 | Clause::Mm2 | Clause::Mm3 => ExtType::MM,
            Clause::Pm => ExtType::PM,
            Clause::Mp1 | Clause::Mp2 | Clause::Mp3 => ExtType::MP,
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Clause::Pp => "PP",
            Clause::Mm1 => "MM(1)",
            Clause::Mm2 => "MM(2)",
            Clause::Mm3 => "MM(3)",
            Clause::Pm => "PM",
            Clause::Mp1 => "MP(1)",
            Clause::Mp2 => "MP(2)",
            Clause::Mp3 => "MP(3)",
        };
        f.write_str(s)
    }
}

/// Parameters certifying a positive verdict. Fields a clause does not use
/// stay `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub clause: Clause,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m0: Option<u64>,
}

impl Witness {
    fn new(clause: Clause) -> Self {
        Self {
            clause,
            alpha: None,
            beta: None,
            gamma: None,
            t: None,
            p: None,
            q: None,
            l: None,
            k: None,
            m0: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtendabilityVerdict {
    #[serde(rename = "type")]
    pub kind: ExtType,
    pub extendable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl ExtendabilityVerdict {
    fn from_witness(kind: ExtType, witness: Option<Witness>) -> Self {
        Self {
            kind,
            extendable: witness.is_some(),
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtError {
    #[error("invalid datum: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidDatum(Vec<Violation>),
    #[error("predicate/type mismatch: {kind} requires an orientation-{expected} map")]
    TypeMismatch { kind: ExtType, expected: &'static str },
    #[error("datum is not extendable in type {0}")]
    NotExtendable(ExtType),
    #[error("parameter constraint violated: {0}")]
    Constraint(String),
    #[error("row unrealizable: {0}")]
    Unrealizable(String),
}

fn require(d: &SymmetryDatum, kind: ExtType) -> Result<(), ExtError> {
    d.validate().map_err(ExtError::InvalidDatum)?;
    if d.is_orientation_reversing() == kind.preserves_surface() {
        let expected = if kind.preserves_surface() {
            "preserving"
        } else {
            "reversing"
        };
        return Err(ExtError::TypeMismatch { kind, expected });
    }
    Ok(())
}

fn count(xs: &[u64], v: u64) -> usize {
    xs.iter().filter(|&&x| x == v).count()
}

/// `±` classes of `values` in `Z_n`: least representative to multiplicity.
fn sign_classes(values: &[u64], n: u64) -> BTreeMap<u64, usize> {
    let mut classes = BTreeMap::new();
    for &v in values {
        *classes.entry(v.min(neg_mod(v, n))).or_insert(0) += 1;
    }
    classes
}

pub fn check_pp(d: &SymmetryDatum) -> Result<ExtendabilityVerdict, ExtError> {
    require(d, ExtType::PP)?;
    Ok(ExtendabilityVerdict::from_witness(ExtType::PP, pp_witness(d)))
}

fn pp_witness(d: &SymmetryDatum) -> Option<Witness> {
    let n = d.n();
    let cones = d.cones();
    let classes = sign_classes(cones, n);
    if classes.len() > 2 {
        return None;
    }
    for &r in classes.keys() {
        let balanced = if r == neg_mod(r, n) {
            count(cones, r).is_multiple_of(2)
        } else {
            count(cones, r) == count(cones, neg_mod(r, n))
        };
        if !balanced {
            return None;
        }
    }
    let mut parts: Vec<(u64, u64, usize)> = classes.iter().map(|(&r, &c)| (order_of(r, n), r, c)).collect();
    parts.sort_unstable();
    let mut w = Witness::new(Clause::Pp);
    let (alpha, beta, t, p, q) = match parts.as_slice() {
        [] => (0, 0, 0, 1, 1),
        [(p, r, c)] => (*r, 0, *c as u64 / 2, *p, 1),
        [(p, r1, c1), (q, r2, _)] => {
            if gcd(*p, *q) != 1 {
                return None;
            }
            (*r1, *r2, *c1 as u64 / 2, *p, *q)
        }
        _ => unreachable!(),
    };
    if n > p * q && d.h() == 0 {
        return None;
    }
    w.alpha = Some(alpha);
    w.beta = Some(beta);
    w.t = Some(t);
    w.p = Some(p);
    w.q = Some(q);
    Some(w)
}

pub fn check_mm(d: &SymmetryDatum) -> Result<ExtendabilityVerdict, ExtError> {
    require(d, ExtType::MM)?;
    let w = units_of(d.n()).into_iter().find_map(|a| mm_with(d, a));
    Ok(ExtendabilityVerdict::from_witness(ExtType::MM, w))
}

fn mm_with(d: &SymmetryDatum, alpha: u64) -> Option<Witness> {
    let n = d.n();
    let plus = mul_mod(2, alpha, n);
    let minus = neg_mod(plus, n);
    let s = d.s();
    let on_axis = |v: &u64| *v == plus || *v == minus;
    if !d.cones().iter().all(on_axis) || !d.boundary().iter().all(|v| on_axis(v) || *v == 0) {
        return None;
    }
    let mut w = Witness::new(Clause::Mm1);
    w.alpha = Some(alpha);
    if d.orientable() {
        if d.b() == 0 || n % 4 != 2 {
            return None;
        }
        if n > 2 {
            let (c_plus, c_minus) = (count(d.cones(), plus), count(d.cones(), minus));
            if c_plus != s.div_ceil(2) || c_minus != s / 2 {
                return None;
            }
            let t = count(d.boundary(), plus) + c_plus;
            if t != count(d.boundary(), minus) + c_minus {
                return None;
            }
            w.t = Some(t as u64);
        }
        return Some(w);
    }
    if d.b() != 0 {
        return None;
    }
    if n % 4 == 2 {
        if n > 2 && (d.h() as usize) % 2 != s % 2 {
            return None;
        }
        w.clause = Clause::Mm2;
        return Some(w);
    }
    if !n.is_multiple_of(4) {
        return None;
    }
    w.clause = Clause::Mm3;
    if n > 4 {
        let sa = mul_mod(s as u64 % n, alpha, n);
        let expected = if plus < n / 2 { neg_mod(sa, n) } else { sa };
        if h1(d) != Some(expected) {
            return None;
        }
    } else if s == 0 && h1(d) != Some(0) {
        return None;
    }
    Some(w)
}

pub fn check_pm(d: &SymmetryDatum) -> Result<ExtendabilityVerdict, ExtError> {
    require(d, ExtType::PM)?;
    let n = d.n();
    let s = d.s();
    let w = if !n.is_multiple_of(2) || s < 2 || (n == 2 && s != 2) {
        None
    } else {
        let mut cones = d.cones().to_vec();
        cones.sort_unstable();
        units_of(n).into_iter().find_map(|a| {
            let mut expected = pm_pattern(n, s, a);
            expected.sort_unstable();
            (expected == cones).then(|| {
                let mut w = Witness::new(Clause::Pm);
                w.alpha = Some(a);
                w
            })
        })
    };
    Ok(ExtendabilityVerdict::from_witness(ExtType::PM, w))
}

/// `(alpha, (-1)^(s-1) alpha, -2alpha, 2alpha, ..., (-1)^s 2alpha)`.
pub(crate) fn pm_pattern(n: u64, s: usize, alpha: u64) -> Vec<u64> {
    let a = alpha % n;
    let sign = |positive: bool, v: u64| if positive { v } else { neg_mod(v, n) };
    let mut out = vec![a, sign(s % 2 == 1, a)];
    let two = mul_mod(2, a, n);
    out.extend((1..=s.saturating_sub(2)).map(|j| sign(j % 2 == 0, two)));
    out
}

pub fn check_mp(d: &SymmetryDatum) -> Result<ExtendabilityVerdict, ExtError> {
    require(d, ExtType::MP)?;
    let w = if d.b() == 1 {
        if d.n() % 4 != 2 {
            None
        } else if d.orientable() {
            mp1(d)
        } else {
            mp2(d)
        }
    } else if d.b() == 0 && !d.orientable() {
        mp3(d)?
    } else {
        None
    };
    Ok(ExtendabilityVerdict::from_witness(ExtType::MP, w))
}

fn mp1(d: &SymmetryDatum) -> Option<Witness> {
    let n = d.n();
    let s = d.s();
    if n == 2 {
        return Some(Witness::new(Clause::Mp1));
    }
    if s.is_multiple_of(2) {
        return None;
    }
    units_of(n).into_iter().find_map(|a| {
        let plus = mul_mod(2, a, n);
        let minus = neg_mod(plus, n);
        let ok = d.boundary()[0] == plus
            && count(d.cones(), plus) == (s - 1) / 2
            && count(d.cones(), minus) == s.div_ceil(2);
        ok.then(|| {
            let mut w = Witness::new(Clause::Mp1);
            w.alpha = Some(a);
            w
        })
    })
}

fn mp2(d: &SymmetryDatum) -> Option<Witness> {
    let n = d.n();
    let s = d.s();
    if s > 0 && s.is_multiple_of(2) {
        return None;
    }
    let eps = d.boundary()[0];
    units_of(n).into_iter().find_map(|a| {
        let two_a = mul_mod(2, a, n);
        if eps != two_a && eps != neg_mod(two_a, n) {
            return None;
        }
        let l = if s == 0 {
            Some(n / 2)
        } else {
            divisors(n / 2).into_iter().filter(|&l| l < n / 2).find(|&l| {
                let v = mul_mod(2 * l, a, n);
                d.cones().iter().all(|&c| c == v || c == neg_mod(v, n))
            })
        };
        l.map(|l| {
            let mut w = Witness::new(Clause::Mp2);
            w.alpha = Some(a);
            w.l = Some(l);
            w
        })
    })
}

/// Splits the cones of a closed non-orientable quotient into the `(t, p)`
/// and `(s - t, q)` classes, with `p` odd. Returns
/// `(beta, gamma, t, p, q)`.
fn mp3_classes(d: &SymmetryDatum) -> Option<(u64, u64, u64, u64, u64)> {
    let n = d.n();
    let s = d.s() as u64;
    let classes = sign_classes(d.cones(), n);
    let mut parts: Vec<(u64, u64, u64)> = classes
        .iter()
        .map(|(&r, &c)| (order_of(r, n), r, c as u64))
        .collect();
    // odd orders first, then by size
    parts.sort_unstable_by_key(|&(o, r, _)| (o % 2 == 0, o, r));
    match parts.as_slice() {
        [] => Some((0, 0, 0, 1, 1)),
        [(o, r, c)] => {
            if c % 2 == 0 {
                None
            } else if o % 2 == 1 {
                Some((*r, 0, s, *o, 1))
            } else {
                Some((0, *r, 0, 1, *o))
            }
        }
        [(p, r1, c1), (q, r2, c2)] => {
            (gcd(*p, *q) == 1 && c1 % 2 == 1 && c2 % 2 == 1).then_some((*r1, *r2, *c1, *p, *q))
        }
        _ => None,
    }
}

fn mp3(d: &SymmetryDatum) -> Result<Option<Witness>, ExtError> {
    let n = d.n();
    let h = d.h() as u64;
    let Some((beta, gamma, t, p, q)) = mp3_classes(d) else {
        return Ok(None);
    };
    let l = n / (p * q);
    if !l.is_multiple_of(2) || (l / 2) % 2 != h % 2 || (h == 1 && l != 2) {
        return Ok(None);
    }
    if h1_defined(d) && h1(d).map(|v| v % l) != Some(l / 2) {
        return Ok(None);
    }
    let mut w = Witness::new(Clause::Mp3);
    if t > 0 {
        w.beta = Some(beta);
    }
    if t < d.s() as u64 {
        w.gamma = Some(gamma);
    }
    w.t = Some(t);
    w.p = Some(p);
    w.q = Some(q);
    w.l = Some(l);
    if h == 2 {
        let reference = canonical_f0_invariant(p, q, l, d.s() as u64, t)?;
        let matched = units_of(n)
            .into_iter()
            .any(|u| conjugacy_invariant(&d.scaled(u)) == reference);
        if !matched {
            return Ok(None);
        }
        let m0 = compute_m0(p, l);
        w.m0 = Some(m0);
        w.k = Some(compute_k(p, q, l));
    }
    Ok(Some(w))
}

/// Least `m0 >= 1` with `m0 = l/2 + 1 (mod l)` and `gcd(m0, p) = 1`.
pub fn compute_m0(p: u64, l: u64) -> u64 {
    let mut m0 = l / 2 + 1;
    while gcd(m0, p) != 1 {
        m0 += l;
    }
    m0
}

/// Least `k >= 1` with `k = q*m0 (mod p)`, `k = p (mod 2q)` and
/// `gcd(k, pql) = 1`.
pub fn compute_k(p: u64, q: u64, l: u64) -> u64 {
    let m0 = compute_m0(p, l);
    let n = p * q * l;
    let base =
        crt_solve((q * m0 % p) as i64, p, (p % (2 * q)) as i64, 2 * q).expect("p odd and coprime to q");
    let step = base.modulus();
    let mut k = if base.value() == 0 { step } else { base.value() };
    while gcd(k, n) != 1 {
        k += step;
    }
    k
}

/// Invariant of the reference map `f0` on a closed surface whose quotient
/// is a Klein bottle with `t` cones of order `p` and `s - t` of order `q`.
pub fn canonical_f0_invariant(
    p: u64,
    q: u64,
    l: u64,
    s: u64,
    t: u64,
) -> Result<ConjugacyInvariant, ExtError> {
    let fail = |msg: String| Err(ExtError::Constraint(msg));
    if p == 0 || q == 0 || l == 0 {
        return fail("p, q, l must be positive".into());
    }
    if p.is_multiple_of(2) {
        return fail(format!("p = {p} must be odd"));
    }
    if gcd(p, q) != 1 {
        return fail(format!("gcd(p, q) = gcd({p}, {q}) != 1"));
    }
    if !l.is_multiple_of(2) {
        return fail(format!("l = {l} must be even"));
    }
    if t > s {
        return fail(format!("t = {t} exceeds s = {s}"));
    }
    if (t == 0 && p != 1) || (t > 0 && t.is_multiple_of(2)) {
        return fail(format!(
            "t = {t} with p = {p}: t = 0 forces p = 1, otherwise t must be odd"
        ));
    }
    if (t == s && q != 1) || (t < s && (s - t).is_multiple_of(2)) {
        return fail(format!(
            "s - t = {} with q = {q}: s = t forces q = 1, otherwise s - t must be odd",
            s - t
        ));
    }
    let n = p * q * l;
    let ql = q * l;
    let pl = p * l;

    let mut cones: Vec<u64> = std::iter::repeat_n(ql.min(n - ql), t as usize)
        .chain(std::iter::repeat_n(pl.min(n - pl), (s - t) as usize))
        .collect();
    cones.sort_unstable();

    let h1 = (n.is_multiple_of(4) && q != 2).then(|| {
        let v = (n / 2) as i128 - (t.max(1) * ql / 2) as i128 - ((s - t).max(1) * pl / 2) as i128;
        v.rem_euclid(n as i128) as u64
    });

    let m0 = compute_m0(p, l);
    let k = compute_k(p, q, l);
    let first = inverse_mod(mul_mod(2 * q, m0, p) as i64, p).expect("2q*m0 is a unit mod p");
    let second = inverse_mod((p % (2 * q)) as i64, 2 * q).expect("p is a unit mod 2q");
    let tilde = crt_solve(first as i64, p, second as i64, 2 * q)
        .expect("p and 2q are coprime")
        .value();
    let delta_sum = (k as u128 * tilde as u128 * (p + 2 * q) as u128 * (l / 2) as u128 % n as u128) as u64;
    let mut m = gcd(delta_sum, n);
    if t > 0 {
        m = gcd(m, ql);
    }
    if s > t {
        m = gcd(m, pl);
    }
    let h2 = H2::from_values(k as i128, (l / 2) as i128 - k as i128, m);

    Ok(ConjugacyInvariant {
        n,
        orientable: false,
        h: 2,
        b: 0,
        isotropy: IsotropyInvariant {
            modulus: n,
            sign_mode: SignMode::Entrywise,
            boundary: Vec::new(),
            cones,
        },
        h1,
        h2: Some(h2),
    })
}

/// Dispatches to the predicate for `kind`.
pub fn check(d: &SymmetryDatum, kind: ExtType) -> Result<ExtendabilityVerdict, ExtError> {
    match kind {
        ExtType::PP => check_pp(d),
        ExtType::MM => check_mm(d),
        ExtType::PM => check_pm(d),
        ExtType::MP => check_mp(d),
    }
}

/// Types matching the orientation class of `d`.
pub fn candidate_types(d: &SymmetryDatum) -> [ExtType; 2] {
    if d.is_orientation_reversing() {
        [ExtType::MM, ExtType::MP]
    } else {
        [ExtType::PP, ExtType::PM]
    }
}

/// All types in which `d` is extendable. Genus-0 maps extend in both types
/// of their orientation class.
pub fn classify_all(d: &SymmetryDatum) -> Result<Vec<ExtType>, ExtError> {
    d.validate().map_err(ExtError::InvalidDatum)?;
    let types = candidate_types(d);
    if d.euler_genus() == Ok(0) {
        return Ok(types.to_vec());
    }
    let mut out = Vec::new();
    for kind in types {
        if check(d, kind)?.extendable {
            out.push(kind);
        }
    }
    Ok(out)
}

/// Re-evaluates the clause named by `w` on `d` with the witness generator
/// fixed, and confirms the same parameters come out.
pub fn verify_witness(d: &SymmetryDatum, w: &Witness) -> bool {
    let n = d.n();
    let fresh = match w.clause {
        Clause::Pp => pp_witness(d),
        Clause::Mm1 | Clause::Mm2 | Clause::Mm3 => match w.alpha {
            Some(a) if gcd(a, n) == 1 => mm_with(d, a),
            _ => None,
        },
        Clause::Pm => match w.alpha {
            Some(a) => {
                let mut expected = pm_pattern(n, d.s(), a);
                let mut cones = d.cones().to_vec();
                expected.sort_unstable();
                cones.sort_unstable();
                (gcd(a, n) == 1 && expected == cones).then(|| w.clone())
            }
            None => None,
        },
        Clause::Mp1 | Clause::Mp2 | Clause::Mp3 => check_mp(d).ok().and_then(|v| v.witness),
    };
    let Some(fresh) = fresh else {
        return false;
    };
    if w.clause == Clause::Pp {
        // rebuild the displayed multiset from the witness
        let (Some(a), Some(b), Some(t), Some(p), Some(q)) = (w.alpha, w.beta, w.t, w.p, w.q) else {
            return false;
        };
        let s = d.s() as u64;
        if 2 * t > s || order_of(a, n) != p || order_of(b, n) != q || gcd(p, q) != 1 {
            return false;
        }
        let mut expected: Vec<u64> = Vec::new();
        for _ in 0..t {
            expected.extend([a, neg_mod(a, n)]);
        }
        for _ in 0..(s / 2 - t) {
            expected.extend([b, neg_mod(b, n)]);
        }
        let mut cones = d.cones().to_vec();
        expected.sort_unstable();
        cones.sort_unstable();
        return expected == cones;
    }
    fresh.clause == w.clause && fresh.t == w.t && fresh.p == w.p && fresh.q == w.q && fresh.l == w.l
}

/// The least unit `m` such that `f^m` has exactly the canonical invariant
/// of the type's normal form, together with the datum of `f^m`.
pub fn normalize(d: &SymmetryDatum, kind: ExtType) -> Result<(u64, SymmetryDatum), ExtError> {
    let verdict = check(d, kind)?;
    let g = d
        .euler_genus()
        .map_err(|e| ExtError::Unrealizable(e.to_string()))?;
    let witness = match verdict.witness {
        Some(w) => w,
        None if g == 0 && candidate_types(d).contains(&kind) => return Ok((1 % d.n().max(1), d.clone())),
        None => return Err(ExtError::NotExtendable(kind)),
    };
    let row = ParameterRow::from_witness(d, &witness, g);
    let reference = if witness.clause == Clause::Mp3 && d.h() == 2 {
        canonical_f0_invariant(
            witness.p.unwrap_or(1),
            witness.q.unwrap_or(1),
            witness.l.unwrap_or(2),
            d.s() as u64,
            witness.t.unwrap_or(0),
        )?
    } else {
        conjugacy_invariant(&datum_from_parameters(&row)?)
    };
    units_of(d.n())
        .into_iter()
        .map(|m| (m % d.n().max(1), d.power_twist(m as i64).expect("m is a unit")))
        .find(|(_, twisted)| conjugacy_invariant(twisted) == reference)
        .ok_or_else(|| ExtError::Unrealizable(format!("no unit power of {d} reaches the normal form")))
}
