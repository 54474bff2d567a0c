//! Brute-force generators shared by the integration tests. Everything here
//! is written independently of the library's own search code.

#![allow(dead_code)]

use symx::SymmetryDatum;

/// Multisets of size `len` over `domain`, as nondecreasing tuples.
pub fn multisets(domain: &[u64], len: usize) -> Vec<Vec<u64>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &v) in domain.iter().enumerate() {
        for mut rest in multisets(&domain[i..], len - 1) {
            rest.insert(0, v);
            out.push(rest);
        }
    }
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Valid data of order `n` up to reordering of each value list, with
/// `h <= max_h`, `b <= max_b`, `s <= max_s` and no genus bound. Orientable
/// handle tuples are reduced to `(x, 0, ..., 0)`: the invariants never look
/// at them, and only their gcd with `n` affects surjectivity.
pub fn reduced_data(n: u64, max_h: u32, max_b: usize, max_s: usize) -> Vec<SymmetryDatum> {
    let mut out = Vec::new();
    let all: Vec<u64> = (0..n).collect();
    let even: Vec<u64> = (0..n).step_by(2).collect();
    let odd: Vec<u64> = (1..n).step_by(2).collect();
    for orientable in [true, false] {
        for h in 0..=max_h {
            if !orientable && (h == 0 || n % 2 == 1) {
                continue;
            }
            for b in 0..=max_b {
                if b > 0 && n % 4 != 2 {
                    continue;
                }
                let reversing = !orientable || b > 0;
                let (bdom, cdom): (&[u64], Vec<u64>) = if reversing {
                    (&even, even.iter().copied().filter(|&v| v != 0).collect())
                } else {
                    (&all, (1..n).collect())
                };
                let handle_sets: Vec<Vec<u64>> = if orientable {
                    if h == 0 {
                        vec![Vec::new()]
                    } else {
                        let xs: &[u64] = if reversing { &even } else { &all };
                        xs.iter()
                            .map(|&x| {
                                let mut v = vec![0; 2 * h as usize];
                                v[0] = x;
                                v
                            })
                            .collect()
                    }
                } else {
                    multisets(&odd, h as usize)
                };
                for s in 0..=max_s {
                    for cones in multisets(&cdom, s) {
                        for boundary in multisets(bdom, b) {
                            for handles in &handle_sets {
                                let d = SymmetryDatum::new(
                                    n,
                                    orientable,
                                    h,
                                    handles.clone(),
                                    boundary.clone(),
                                    cones.clone(),
                                )
                                .unwrap();
                                if d.is_valid() {
                                    out.push(d);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn units(n: u64) -> Vec<u64> {
    (1..=n).filter(|&k| gcd(k, n) == 1).collect()
}

pub fn datum(
    n: u64,
    orientable: bool,
    h: u32,
    handles: &[u64],
    boundary: &[u64],
    cones: &[u64],
) -> SymmetryDatum {
    SymmetryDatum::new(
        n,
        orientable,
        h,
        handles.to_vec(),
        boundary.to_vec(),
        cones.to_vec(),
    )
    .unwrap()
}
