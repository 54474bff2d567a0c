//! Exact arithmetic in `Z_n` and the constructive congruence facts the
//! classification leans on.
//!
//! Every search here is a least-nonnegative linear scan. Moduli stay at desk
//! scale, and the minimal outputs are what the downstream normal forms expect.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("no shift exists: gcd({a}, {b}, {c}) != 1")]
    NoShift { a: i64, b: i64, c: u64 },
    #[error("orders not coprime: ord({lambda}) = {p}, ord({mu}) = {q} in Z_{n}")]
    OrdersNotCoprime {
        lambda: u64,
        mu: u64,
        p: u64,
        q: u64,
        n: u64,
    },
    #[error("residues live in different moduli ({0} vs {1})")]
    ModulusMismatch(u64, u64),
}

/// An element of `Z_n`, kept as its least nonnegative representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Reduces `value` into `[0, modulus)`. Negative inputs wrap.
    pub fn new(value: i64, modulus: u64) -> Result<Self, NumError> {
        if modulus == 0 {
            return Err(NumError::ZeroModulus);
        }
        Ok(Self {
            value: reduce(value as i128, modulus),
            modulus,
        })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_unit(self) -> bool {
        gcd(self.value, self.modulus) == 1
    }
}

impl std::ops::Neg for Residue {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Mul<i64> for Residue {
    type Output = Self;

    fn mul(self, k: i64) -> Self {
        Self {
            value: reduce(self.value as i128 * k as i128, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// Least nonnegative representative of `x` modulo `n` (`n >= 1`).
pub fn reduce(x: i128, n: u64) -> u64 {
    x.rem_euclid(n as i128) as u64
}

/// `-v mod n` for a reduced `v`.
pub fn neg_mod(v: u64, n: u64) -> u64 {
    (n - v % n) % n
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_i(a: i64, b: i64) -> u64 {
    gcd(a.unsigned_abs(), b.unsigned_abs())
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Multiplicative inverse of `a` modulo `n`, if `a` is a unit.
pub fn inverse_mod(a: i64, n: u64) -> Option<u64> {
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd(reduce(a as i128, n) as i128, n as i128);
    (g == 1).then(|| reduce(x, n))
}

/// Order of `a` in the additive group `Z_n`: `n / gcd(a, n)`.
pub fn order_mod(a: Residue) -> u64 {
    order_of(a.value, a.modulus)
}

/// Same as [`order_mod`] on raw parts.
pub fn order_of(value: u64, n: u64) -> u64 {
    n / gcd(value, n)
}

/// Solves `x = p0 (mod p)`, `x = q0 (mod q)`. `None` when the system is
/// inconsistent, i.e. `p0` and `q0` disagree modulo `gcd(p, q)`.
pub fn crt_solve(p0: i64, p: u64, q0: i64, q: u64) -> Option<Residue> {
    if p == 0 || q == 0 {
        return None;
    }
    let (g, u, _) = ext_gcd(p as i128, q as i128);
    let diff = q0 as i128 - p0 as i128;
    if diff.rem_euclid(g) != 0 {
        return None;
    }
    let l = lcm(p, q);
    // x = p0 + p * u * (q0 - p0) / g, with p*u = g (mod q)
    let step = (diff / g).rem_euclid(q as i128 / g) * u.rem_euclid(q as i128 / g);
    let x = p0 as i128 + p as i128 * step;
    Some(Residue {
        value: reduce(x, l),
        modulus: l,
    })
}

/// Least `d >= 0` with `gcd(a + b*d, c) = 1`.
///
/// Requires `gcd(a, b, c) = 1`; the value repeats with period `c`, so the scan
/// is bounded.
pub fn coprime_shift(a: i64, b: i64, c: u64) -> Result<u64, NumError> {
    if c == 0 {
        return Err(NumError::ZeroModulus);
    }
    if gcd(gcd_i(a, b), c) != 1 {
        return Err(NumError::NoShift { a, b, c });
    }
    (0..c)
        .find(|&d| gcd(reduce(a as i128 + b as i128 * d as i128, c), c) == 1)
        .ok_or(NumError::NoShift { a, b, c })
}

/// Least `k >= 1` coprime to `n` with `k*m = gcd(m, n) (mod n)`.
pub fn unit_lift(m: i64, n: u64) -> Result<Residue, NumError> {
    if n == 0 {
        return Err(NumError::ZeroModulus);
    }
    let target = gcd(m.unsigned_abs(), n) % n;
    let m = reduce(m as i128, n);
    let k = (1..=n)
        .find(|&k| gcd(k, n) == 1 && (k as u128 * m as u128 % n as u128) as u64 == target)
        .expect("a unit lift exists for every m");
    Ok(Residue {
        value: k % n,
        modulus: n,
    })
}

/// For `lambda`, `mu` in `Z_n` of coprime orders `p`, `q` with `n = p*q*l`,
/// the least generator `tau` with `lambda = tau*q*l` and `mu = tau*p*l`.
pub fn generator_decompose(lambda: Residue, mu: Residue) -> Result<Residue, NumError> {
    let n = lambda.modulus;
    if mu.modulus != n {
        return Err(NumError::ModulusMismatch(n, mu.modulus));
    }
    let p = order_mod(lambda);
    let q = order_mod(mu);
    if gcd(p, q) != 1 {
        return Err(NumError::OrdersNotCoprime {
            lambda: lambda.value,
            mu: mu.value,
            p,
            q,
            n,
        });
    }
    let l = n / (p * q);
    let tau = units_of(n)
        .into_iter()
        .find(|&tau| mul_mod(tau, q * l, n) == lambda.value && mul_mod(tau, p * l, n) == mu.value)
        .expect("a decomposing generator exists when the orders are coprime");
    Ok(Residue {
        value: tau % n,
        modulus: n,
    })
}

/// `a * b mod n` without overflow.
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    (a as u128 * b as u128 % n as u128) as u64
}

/// All `k` in `[1, n]` with `gcd(k, n) = 1`, ascending. For `n = 1` this is
/// `[1]`, standing for the single element `0 = 1`.
pub fn units_of(n: u64) -> Vec<u64> {
    (1..=n).filter(|&k| gcd(k, n) == 1).collect()
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
