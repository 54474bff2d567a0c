//! Parameter rows for the extendable classes, normal-form witness data, and
//! an exhaustive census of all valid data at small order.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use serde::Serialize;
use thiserror::Error;

use crate::extendability::{check, pm_pattern, Clause, ExtError, ExtType, Witness};
use crate::invariants::{conjugacy_invariant, twist_minimal_invariant, ConjugacyInvariant};
use crate::numtheory::{divisors, gcd, neg_mod};
use crate::orbifold::SymmetryDatum;

/// One extendable class, described by the parameters its criterion uses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParameterRow {
    #[serde(rename = "type")]
    pub kind: ExtType,
    pub clause: Clause,
    pub n: u64,
    pub h: u32,
    pub b: u64,
    pub s: u64,
    pub t: Option<u64>,
    pub p: Option<u64>,
    pub q: Option<u64>,
    pub l: Option<u64>,
    pub g: u64,
}

impl ParameterRow {
    /// The row a positive verdict on `d` describes.
    pub fn from_witness(d: &SymmetryDatum, w: &Witness, g: u64) -> Self {
        let mut row = ParameterRow {
            kind: w.clause.ext_type(),
            clause: w.clause,
            n: d.n(),
            h: d.h(),
            b: d.b() as u64,
            s: d.s() as u64,
            t: None,
            p: None,
            q: None,
            l: None,
            g,
        };
        match w.clause {
            Clause::Pp => {
                row.t = w.t;
                row.p = w.p;
                row.q = w.q;
            }
            Clause::Mm1 => row.t = w.t,
            Clause::Mp2 => row.l = w.l,
            Clause::Mp3 => {
                row.t = w.t;
                row.p = w.p;
                row.q = w.q;
                row.l = w.l;
            }
            Clause::Mm2 | Clause::Mm3 | Clause::Pm | Clause::Mp1 => {}
        }
        row
    }

    /// Row of `d` in type `kind`, if `d` is valid and extendable there.
    pub fn of(d: &SymmetryDatum, kind: ExtType) -> Option<Self> {
        let w = check(d, kind).ok()?.witness?;
        let g = d.euler_genus().ok()?;
        Some(Self::from_witness(d, &w, g))
    }

    fn orientable(&self) -> bool {
        matches!(self.clause, Clause::Pp | Clause::Pm | Clause::Mm1 | Clause::Mp1)
    }

    /// TSV line in the column order `type,n,h,b,s,t,p,q,l,g`.
    pub fn tsv(&self) -> String {
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.kind,
            self.n,
            self.h,
            self.b,
            self.s,
            opt(self.t),
            opt(self.p),
            opt(self.q),
            opt(self.l),
            self.g
        )
    }

    fn sort_key(&self) -> impl Ord {
        (
            self.n,
            self.h,
            self.b,
            self.s,
            self.t,
            self.p,
            self.q,
            self.l,
            self.clause,
        )
    }
}

pub const TSV_HEADER: &str = "type\tn\th\tb\ts\tt\tp\tq\tl\tg";

fn unrealizable(row: &ParameterRow, why: &str) -> ExtError {
    ExtError::Unrealizable(format!(
        "{} n={} h={} b={} s={}: {why}",
        row.clause, row.n, row.h, row.b, row.s
    ))
}

fn repeat(v: u64, times: u64) -> impl Iterator<Item = u64> {
    std::iter::repeat_n(v, times as usize)
}

/// Boundary and cone values of the clause's displayed normal form with the
/// generator set to 1.
fn normal_values(row: &ParameterRow) -> Result<(Vec<u64>, Vec<u64>), ExtError> {
    let n = row.n;
    let (b, s) = (row.b, row.s);
    let two = 2 % n;
    let minus_two = neg_mod(two, n);
    let need = |v: Option<u64>, name: &str| v.ok_or_else(|| unrealizable(row, &format!("missing {name}")));
    let fixed_b = |want: u64| {
        if b == want {
            Ok(())
        } else {
            Err(unrealizable(row, &format!("clause requires b = {want}")))
        }
    };
    match row.clause {
        Clause::Pp => {
            fixed_b(0)?;
            let (t, p, q) = (need(row.t, "t")?, need(row.p, "p")?, need(row.q, "q")?);
            if s % 2 != 0 || 2 * t > s || p == 0 || q == 0 || !n.is_multiple_of(p * q) {
                return Err(unrealizable(row, "inconsistent t, p, q"));
            }
            let l = n / (p * q);
            let (a, c) = ((q * l) % n, (p * l) % n);
            let cones = repeat(a, t)
                .chain(repeat(neg_mod(a, n), t))
                .chain(repeat(c, s / 2 - t))
                .chain(repeat(neg_mod(c, n), s / 2 - t))
                .collect();
            Ok((Vec::new(), cones))
        }
        Clause::Mm1 => {
            if b == 0 {
                return Err(unrealizable(row, "clause requires b >= 1"));
            }
            if n == 2 {
                return Ok((vec![0; b as usize], vec![0; s as usize]));
            }
            let t = need(row.t, "t")?;
            let (up, down) = (s.div_ceil(2), s / 2);
            if t < up || 2 * t > s + b {
                return Err(unrealizable(row, "t out of range"));
            }
            let boundary = repeat(two, t - up)
                .chain(repeat(minus_two, t - down))
                .chain(repeat(0, s + b - 2 * t))
                .collect();
            let cones = repeat(two, up).chain(repeat(minus_two, down)).collect();
            Ok((boundary, cones))
        }
        Clause::Mm2 | Clause::Mm3 => {
            fixed_b(0)?;
            Ok((Vec::new(), vec![two; s as usize]))
        }
        Clause::Pm => {
            fixed_b(0)?;
            Ok((Vec::new(), pm_pattern(n, s as usize, 1)))
        }
        Clause::Mp1 => {
            fixed_b(1)?;
            if s % 2 == 0 {
                return Ok((vec![two], vec![0; s as usize]));
            }
            let cones = repeat(two, (s - 1) / 2)
                .chain(repeat(minus_two, s.div_ceil(2)))
                .collect();
            Ok((vec![two], cones))
        }
        Clause::Mp2 => {
            fixed_b(1)?;
            let l = need(row.l, "l")?;
            Ok((vec![two], vec![(2 * l) % n; s as usize]))
        }
        Clause::Mp3 => {
            fixed_b(0)?;
            let (t, p, q, l) = (
                need(row.t, "t")?,
                need(row.p, "p")?,
                need(row.q, "q")?,
                need(row.l, "l")?,
            );
            if t > s || p * q * l != n {
                return Err(unrealizable(row, "inconsistent t, p, q, l"));
            }
            let cones = repeat((q * l) % n, t).chain(repeat((p * l) % n, s - t)).collect();
            Ok((Vec::new(), cones))
        }
    }
}

/// Nondecreasing tuples of length `len` over `domain`, in lexicographic
/// order.
fn nondecreasing(domain: &[u64], len: usize) -> Vec<Vec<u64>> {
    fn go(domain: &[u64], start: usize, len: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..domain.len() {
            cur.push(domain[i]);
            go(domain, i, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(domain, 0, len, &mut Vec::new(), &mut out);
    out
}

/// A valid datum realizing `row`: the clause's normal form with generator 1
/// and the least handle values for which the row's check reproduces `row`.
pub fn datum_from_parameters(row: &ParameterRow) -> Result<SymmetryDatum, ExtError> {
    let n = row.n;
    if n == 0 {
        return Err(unrealizable(row, "n must be positive"));
    }
    let (boundary, cones) = normal_values(row)?;
    let orientable = row.orientable();
    let h = row.h;

    let probe = SymmetryDatum::new(
        n,
        orientable,
        h,
        vec![if orientable { 0 } else { 1 % n }; if orientable { 2 * h as usize } else { h as usize }],
        boundary.clone(),
        cones.clone(),
    )
    .map_err(|e| unrealizable(row, &e.to_string()))?;
    match probe.euler_genus() {
        Ok(g) if g == row.g => {}
        _ => return Err(unrealizable(row, &format!("genus is not {}", row.g))),
    }

    let build = |handles: Vec<u64>| {
        SymmetryDatum::new(n, orientable, h, handles, boundary.clone(), cones.clone()).ok()
    };
    let accept = |d: &SymmetryDatum| d.is_valid() && ParameterRow::of(d, row.kind).as_ref() == Some(row);

    let found = if orientable {
        let step = if boundary.is_empty() { 1 } else { 2 };
        if h == 0 {
            build(Vec::new()).filter(accept)
        } else {
            (0..n).step_by(step).find_map(|x| {
                let mut handles = vec![0; 2 * h as usize];
                handles[0] = x;
                build(handles).filter(accept)
            })
        }
    } else {
        if !n.is_multiple_of(2) {
            return Err(unrealizable(row, "non-orientable quotient needs n even"));
        }
        let odd: Vec<u64> = (1..n).step_by(2).collect();
        nondecreasing(&odd, h as usize)
            .into_iter()
            .find_map(|handles| build(handles).filter(accept))
    };
    found.ok_or_else(|| unrealizable(row, "no handle assignment satisfies the clause"))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("an explicit order range is required at genus {0}")]
    OrderRangeRequired(u64),
    #[error("census too large: n = {n}, g = {g} exceeds bounds n <= {max_order}, g <= {max_genus}")]
    CensusTooLarge {
        n: u64,
        g: u64,
        max_order: u64,
        max_genus: u64,
    },
}

/// Whether the signature `(orientable, h, b, s)` can reach genus `g` at
/// order `n`: every cone adds at least `n/2` to `2g - 2`.
fn signature_fits(n: u64, orientable: bool, h: u32, b: u64, s: u64, g: u64) -> bool {
    let h = h as i64;
    let neg_chi = if orientable {
        2 * h + b as i64 - 2
    } else {
        h + b as i64 - 2
    };
    2 * n as i64 * neg_chi + n as i64 * s as i64 <= 4 * g as i64 - 4
}

/// Every `(h, b, s)` with `signature_fits`, for one underlying orientability.
fn signatures(n: u64, orientable: bool, g: u64) -> Vec<(u32, u64, u64)> {
    let mut out = Vec::new();
    let h_min = if orientable { 0 } else { 1 };
    let mut h = h_min;
    while signature_fits(n, orientable, h, 0, 0, g) {
        let mut b = 0;
        while signature_fits(n, orientable, h, b, 0, g) {
            let mut s = 0;
            while signature_fits(n, orientable, h, b, s, g) {
                out.push((h, b, s));
                s += 1;
            }
            b += 1;
        }
        h += 1;
    }
    out
}

/// Candidate rows of one clause at a fixed signature; the caller filters by
/// realizability.
fn candidate_rows(clause: Clause, n: u64, h: u32, b: u64, s: u64, g: u64) -> Vec<ParameterRow> {
    let base = ParameterRow {
        kind: clause.ext_type(),
        clause,
        n,
        h,
        b,
        s,
        t: None,
        p: None,
        q: None,
        l: None,
        g,
    };
    let divs = divisors(n);
    let coprime_pairs = || {
        divs.iter()
            .flat_map(|&p| divs.iter().map(move |&q| (p, q)))
            .filter(|&(p, q)| gcd(p, q) == 1 && n.is_multiple_of(p * q))
            .collect::<Vec<_>>()
    };
    match clause {
        Clause::Pp => {
            let mut out = Vec::new();
            for (p, q) in coprime_pairs() {
                for t in 0..=s / 2 {
                    out.push(ParameterRow {
                        t: Some(t),
                        p: Some(p),
                        q: Some(q),
                        ..base.clone()
                    });
                }
            }
            out
        }
        Clause::Mm1 if n == 2 => vec![base],
        Clause::Mm1 => (s.div_ceil(2)..=(s + b) / 2)
            .map(|t| ParameterRow {
                t: Some(t),
                ..base.clone()
            })
            .collect(),
        Clause::Mp2 if n.is_multiple_of(2) => divisors(n / 2)
            .into_iter()
            .map(|l| ParameterRow {
                l: Some(l),
                ..base.clone()
            })
            .collect(),
        Clause::Mp2 => Vec::new(),
        Clause::Mp3 => {
            let mut out = Vec::new();
            for (p, q) in coprime_pairs() {
                for t in 0..=s {
                    out.push(ParameterRow {
                        t: Some(t),
                        p: Some(p),
                        q: Some(q),
                        l: Some(n / (p * q)),
                        ..base.clone()
                    });
                }
            }
            out
        }
        Clause::Mm2 | Clause::Mm3 | Clause::Pm | Clause::Mp1 => vec![base],
    }
}

fn clauses_of(kind: ExtType) -> &'static [Clause] {
    match kind {
        ExtType::PP => &[Clause::Pp],
        ExtType::MM => &[Clause::Mm1, Clause::Mm2, Clause::Mm3],
        ExtType::PM => &[Clause::Pm],
        ExtType::MP => &[Clause::Mp1, Clause::Mp2, Clause::Mp3],
    }
}

/// Rows of every extendable class of type `kind` on the genus-`g` surface,
/// one per conjugacy class of generated cyclic group, sorted by
/// `(n, h, b, s, t, p, q, l)`.
///
/// For `g >= 2` the order defaults to `n <= 4g + 4`; for `g <= 1` orders are
/// unbounded and `n_range` is required.
pub fn enumerate_extendable(
    g: u64,
    kind: ExtType,
    n_range: Option<RangeInclusive<u64>>,
) -> Result<Vec<ParameterRow>, EnumError> {
    let range = match n_range {
        Some(r) => r,
        None if g >= 2 => 1..=4 * g + 4,
        None => return Err(EnumError::OrderRangeRequired(g)),
    };
    let mut found: Vec<(ParameterRow, ConjugacyInvariant)> = Vec::new();
    for n in range.filter(|&n| n > 0) {
        for &clause in clauses_of(kind) {
            let orientable = matches!(clause, Clause::Pp | Clause::Pm | Clause::Mm1 | Clause::Mp1);
            for (h, b, s) in signatures(n, orientable, g) {
                for row in candidate_rows(clause, n, h, b, s, g) {
                    if let Ok(d) = datum_from_parameters(&row) {
                        found.push((row, twist_minimal_invariant(&d)));
                    }
                }
            }
        }
    }
    found.sort_by_key(|a| a.0.sort_key());
    let mut seen = BTreeSet::new();
    Ok(found
        .into_iter()
        .filter(|(_, key)| seen.insert(key.clone()))
        .map(|(row, _)| row)
        .collect())
}

/// Limits for the exhaustive census.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusBounds {
    pub max_order: u64,
    pub max_genus: u64,
}

impl Default for CensusBounds {
    fn default() -> Self {
        Self {
            max_order: 12,
            max_genus: 4,
        }
    }
}

impl CensusBounds {
    /// Defaults, with the order bound taken from `SYMX_CENSUS_BOUND` when set.
    pub fn from_env() -> Self {
        let mut bounds = Self::default();
        if let Some(v) = std::env::var("SYMX_CENSUS_BOUND")
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            bounds.max_order = v;
        }
        bounds
    }
}

/// All data of one conjugacy class found by the census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusBucket {
    pub invariant: ConjugacyInvariant,
    pub count: u64,
    pub representative: SymmetryDatum,
    pub genus: u64,
}

/// All tuples of length `len` over `domain`.
fn product(domain: &[u64], len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                domain.iter().map(move |&v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

/// Ordered cone tuples of length `s` whose Riemann-Hurwitz contributions
/// `n - n/n_k` sum to at most `budget`.
fn cone_tuples(n: u64, domain: &[u64], s: usize, budget: i64) -> Vec<Vec<u64>> {
    fn go(n: u64, domain: &[u64], s: usize, budget: i64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        let rest = (s - cur.len() - 1) as i64 * (n as i64 / 2);
        for &v in domain {
            let cost = (n - gcd(v, n)) as i64;
            if cost + rest <= budget {
                cur.push(v);
                go(n, domain, s, budget - cost, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, domain, s, budget, &mut Vec::new(), &mut out);
    out
}

/// Calls `visit` on every valid datum of order `n` with genus at most
/// `g_max`, in a fixed order.
pub fn for_each_datum(n: u64, g_max: u64, mut visit: impl FnMut(SymmetryDatum)) {
    if n == 0 {
        return;
    }
    for orientable in [true, false] {
        if !orientable && !n.is_multiple_of(2) {
            continue;
        }
        for (h, b, s) in signatures(n, orientable, g_max) {
            if b > 0 && n % 4 != 2 {
                continue;
            }
            let reversing = !orientable || b > 0;
            let all: Vec<u64> = (0..n).collect();
            let even: Vec<u64> = (0..n).step_by(2).collect();
            let odd: Vec<u64> = (1..n).step_by(2).collect();
            let (handle_dom, boundary_dom, cone_dom): (&[u64], &[u64], Vec<u64>) = if reversing {
                let cones = even.iter().copied().filter(|&v| v != 0).collect();
                (if orientable { &even } else { &odd }, &even, cones)
            } else {
                (&all, &all, (1..n).collect())
            };
            let neg_chi = if orientable {
                2 * h as i64 + b as i64 - 2
            } else {
                h as i64 + b as i64 - 2
            };
            let budget = 2 * g_max as i64 - 2 - n as i64 * neg_chi;
            let handle_len = if orientable { 2 * h as usize } else { h as usize };
            let handle_sets = product(handle_dom, handle_len);
            let boundary_sets = product(boundary_dom, b as usize);
            for cones in cone_tuples(n, &cone_dom, s as usize, budget) {
                for boundary in &boundary_sets {
                    for handles in &handle_sets {
                        let d = SymmetryDatum::new(
                            n,
                            orientable,
                            h,
                            handles.clone(),
                            boundary.clone(),
                            cones.clone(),
                        )
                        .expect("census values are reduced");
                        if d.is_valid() {
                            visit(d);
                        }
                    }
                }
            }
        }
    }
}

/// Exhaustive census at order `n` and genus `<= g_max`, bucketed by
/// conjugacy invariant, within [`CensusBounds::from_env`].
pub fn oracle_census(n: u64, g_max: u64) -> Result<Vec<CensusBucket>, EnumError> {
    oracle_census_with(n, g_max, CensusBounds::from_env())
}

pub fn oracle_census_with(n: u64, g_max: u64, bounds: CensusBounds) -> Result<Vec<CensusBucket>, EnumError> {
    if n > bounds.max_order || g_max > bounds.max_genus {
        return Err(EnumError::CensusTooLarge {
            n,
            g: g_max,
            max_order: bounds.max_order,
            max_genus: bounds.max_genus,
        });
    }
    let mut buckets: BTreeMap<ConjugacyInvariant, CensusBucket> = BTreeMap::new();
    for_each_datum(n, g_max, |d| {
        let invariant = conjugacy_invariant(&d);
        buckets
            .entry(invariant.clone())
            .and_modify(|bucket| bucket.count += 1)
            .or_insert_with(|| CensusBucket {
                invariant,
                count: 1,
                genus: d.euler_genus().expect("valid data have integral genus"),
                representative: d,
            });
    });
    Ok(buckets.into_values().collect())
}

/// Groups census buckets by the parameter row their representative realizes
/// in each type, collecting the twist-minimal invariants per row.
pub fn rows_in_census(buckets: &[CensusBucket]) -> BTreeMap<ParameterRow, BTreeSet<ConjugacyInvariant>> {
    let mut out: BTreeMap<ParameterRow, BTreeSet<ConjugacyInvariant>> = BTreeMap::new();
    for bucket in buckets {
        for kind in ExtType::ALL {
            if let Some(row) = ParameterRow::of(&bucket.representative, kind) {
                out.entry(row)
                    .or_default()
                    .insert(twist_minimal_invariant(&bucket.representative));
            }
        }
    }
    out
}

/// Whether all census data passing `kind`'s check with exactly `row` form a
/// single class of cyclic groups. An empty set counts as failure.
pub fn verify_uniqueness(kind: ExtType, row: &ParameterRow, n_bound: u64) -> bool {
    if row.kind != kind || row.n > n_bound {
        return false;
    }
    let Ok(buckets) = oracle_census_with(
        row.n,
        row.g,
        CensusBounds {
            max_order: n_bound,
            max_genus: row.g.max(CensusBounds::default().max_genus),
        },
    ) else {
        return false;
    };
    rows_in_census(&buckets)
        .get(row)
        .is_some_and(|classes| classes.len() == 1)
}
