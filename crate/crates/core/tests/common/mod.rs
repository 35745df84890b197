//! Oracles shared by the integration tests. Nothing here calls into the
//! series, monomials or exactla modules.

#![allow(dead_code)]

use std::collections::HashSet;

use secinv::perm::PermGroup;

/// Coefficients of `∏_{k=1}^{n} (1 + z + ⋯ + z^{k−1})`.
pub fn mahonian(n: usize) -> Vec<u64> {
    let mut poly = vec![1u64];
    for k in 1..=n {
        let mut next = vec![0u64; poly.len() + k - 1];
        for (i, &c) in poly.iter().enumerate() {
            for j in 0..k {
                next[i + j] += c;
            }
        }
        poly = next;
    }
    poly
}

/// Power series of `1/(1 − z^k)^m` up to `z^len−1`.
fn inverse_power(k: usize, m: usize, len: usize) -> Vec<i128> {
    let mut series = vec![0i128; len];
    series[0] = 1;
    for _ in 0..m {
        for d in k..len {
            series[d] += series[d - k];
        }
    }
    series
}

/// `|G| · H(z)` from an explicit list of cycle types with multiplicities,
/// expanded with integer series, then multiplied by `∏(1 − zⁱ)` and divided
/// by `|G|`. Returns the numerator truncated at `top`.
pub fn molien_numerator(n: usize, classes: &[(&[usize], i128)], top: usize) -> Vec<i128> {
    let len = top + n + 1;
    let order: i128 = classes.iter().map(|(_, m)| m).sum();
    let mut series = vec![0i128; len];
    for (cycles, mult) in classes {
        let mut term = vec![0i128; len];
        term[0] = 1;
        for &c in cycles.iter() {
            let inv = inverse_power(c, 1, len);
            let mut next = vec![0i128; len];
            for i in 0..len {
                for j in 0..len - i {
                    next[i + j] += term[i] * inv[j];
                }
            }
            term = next;
        }
        for d in 0..len {
            series[d] += mult * term[d];
        }
    }
    for i in 1..=n {
        for d in (i..len).rev() {
            series[d] -= series[d - i];
        }
    }
    assert!(series.iter().all(|c| c % order == 0));
    let mut out: Vec<i128> = series.iter().map(|c| c / order).collect();
    assert!(out[top + 1..].iter().all(|&c| c == 0));
    out.truncate(top + 1);
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// All exponent vectors of length `n` and total degree `d`.
pub fn exponent_vectors(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in exponent_vectors(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `g · v` with `(g · v)[g(i)] = v[i]`.
pub fn act(images: &[usize], v: &[u32]) -> Vec<u32> {
    let mut out = vec![0; v.len()];
    for (i, &x) in v.iter().enumerate() {
        out[images[i]] = x;
    }
    out
}

/// The orbit of `v` under all group elements, sorted.
pub fn orbit(group: &PermGroup, v: &[u32]) -> Vec<Vec<u32>> {
    let mut set: Vec<Vec<u32>> = group
        .elements()
        .iter()
        .map(|g| act(g.images(), v))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    set.sort();
    set
}

/// Number of `G`-orbits of degree-`d` monomials.
pub fn orbit_count(group: &PermGroup, d: u32) -> usize {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut count = 0;
    for v in exponent_vectors(group.degree(), d) {
        if seen.contains(&v) {
            continue;
        }
        count += 1;
        seen.extend(orbit(group, &v));
    }
    count
}

pub fn staircase(v: &[u32]) -> bool {
    v.iter().enumerate().all(|(i, &a)| (a as usize) < v.len() - i)
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Spearman rank correlation.
pub fn spearman(xs: &[f64], ys: &[f64]) -> f64 {
    fn ranks(v: &[f64]) -> Vec<f64> {
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|&a, &b| v[a].partial_cmp(&v[b]).unwrap());
        let mut r = vec![0.0; v.len()];
        let mut i = 0;
        while i < idx.len() {
            let mut j = i;
            while j + 1 < idx.len() && v[idx[j + 1]] == v[idx[i]] {
                j += 1;
            }
            let avg = (i + j) as f64 / 2.0;
            for k in i..=j {
                r[idx[k]] = avg;
            }
            i = j + 1;
        }
        r
    }
    let (rx, ry) = (ranks(xs), ranks(ys));
    let n = xs.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let cov: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = rx.iter().map(|a| (a - mx).powi(2)).sum();
    let vy: f64 = ry.iter().map(|b| (b - my).powi(2)).sum();
    cov / (vx * vy).sqrt()
}
