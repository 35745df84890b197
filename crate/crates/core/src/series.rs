//! Hilbert series of the invariant ring and the per-degree secondary counts.
//!
//! For a permutation group the Molien average collapses to a sum over cycle
//! types: each element `g` contributes `∏_{c ∈ cycles(g)} (1 − z^c)⁻¹`.
//! Multiplying the series by `(1 − z)(1 − z²)⋯(1 − zⁿ)` (the degrees of the
//! elementary symmetric polynomials) leaves a polynomial whose coefficient
//! of `z^d` is the number `s_d` of secondary invariants of degree `d`. That
//! polynomial has degree at most `binom(n, 2)`; it is `binom(n, 2) − μ`
//! where `μ` is the smallest degree of a sign-relative invariant, and the
//! degree bound of the ring is at most `binom(n, 2)` as well. Neither `μ` nor
//! the degree bound is computed here.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::cyclo::Rational;
use crate::perm::{factorial, PermGroup};
use crate::{Error, Result};

/// Default limit on the number of exponent vectors [`burnside_dimension`] enumerates.
pub const DEFAULT_ENUMERATION_GUARD: usize = 1_000_000;

/// A polynomial (or truncated power series) with rational coefficients,
/// indexed by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^d` (zero past the end).
    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients as nonnegative integers, if they all are.
    pub fn to_naturals(&self) -> Option<Vec<u64>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() && !c.is_negative() {
                    c.to_integer().to_u64()
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Truncated Hilbert series `Σ_{d ≤ up_to} dim R^G_d · z^d`.
///
/// Terms are grouped by cycle type, so each distinct type costs one
/// coin-change expansion.
pub fn hilbert_series(group: &PermGroup, up_to: usize) -> Result<PolyQ> {
    let mut tally: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for g in group.elements() {
        *tally.entry(g.cycle_type()).or_insert(0) += 1;
    }
    let mut sum = vec![BigInt::zero(); up_to + 1];
    for (cycle_type, count) in &tally {
        let term = inverse_product_series(cycle_type, up_to);
        for (acc, t) in sum.iter_mut().zip(term) {
            *acc += t * count;
        }
    }
    let order = BigInt::from(group.order());
    let coeffs: Vec<Rational> = sum
        .into_iter()
        .map(|c| Rational::new(c, order.clone()))
        .collect();
    for (d, c) in coeffs.iter().enumerate() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::consistency(format!(
                "Hilbert series coefficient {c} at degree {d} is not a natural number"
            )));
        }
    }
    Ok(PolyQ::new(coeffs))
}

/// Coefficients up to `z^up_to` of `∏_c (1 − z^c)⁻¹`.
fn inverse_product_series(parts: &[usize], up_to: usize) -> Vec<BigInt> {
    let mut series = vec![BigInt::zero(); up_to + 1];
    series[0] = BigInt::from(1);
    for &c in parts {
        for d in c..=up_to {
            let prev = series[d - c].clone();
            series[d] += prev;
        }
    }
    series
}

/// Per-degree counts derived from the Hilbert series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondarySpec {
    pub n: usize,
    pub group_order: usize,
    /// `∏ᵢ (1 − zⁱ) · H(R^G, z)`.
    pub numerator: PolyQ,
    /// `s[d]`: number of secondary invariants of degree `d`.
    pub s: Vec<usize>,
    /// `e[d] = dim Φ(R^G_d)`: `s[d]` below `n`, `e[d − n] + s[d]` from `n` on.
    pub e: Vec<usize>,
    /// Total number of secondary invariants, `n!/|G|`.
    pub t: usize,
}

impl SecondarySpec {
    /// Highest degree of a secondary invariant.
    pub fn max_degree(&self) -> usize {
        self.s.len() - 1
    }

    pub fn numerator_ints(&self) -> Vec<u64> {
        self.s.iter().map(|&c| c as u64).collect()
    }
}

pub fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Computes the secondary numerator and the counts `s`, `e`, `t`.
///
/// The series is expanded `n` terms past `binom(n, 2)` so the vanishing of
/// the numerator beyond that degree is checked rather than assumed.
pub fn secondary_spec(group: &PermGroup) -> Result<SecondarySpec> {
    let n = group.degree();
    let bound = binomial2(n);
    let horizon = bound + n;
    let series = hilbert_series(group, horizon)?;
    let mut prod: Vec<Rational> = (0..=horizon).map(|d| series.coeff(d)).collect();
    for i in 1..=n {
        for d in (i..=horizon).rev() {
            let shifted = prod[d - i].clone();
            prod[d] -= shifted;
        }
    }
    if let Some((d, c)) = prod.iter().enumerate().skip(bound + 1).find(|(_, c)| !c.is_zero()) {
        return Err(Error::consistency(format!(
            "secondary numerator has coefficient {c} at degree {d} > binom(n,2)"
        )));
    }
    prod.truncate(bound + 1);
    let numerator = PolyQ::new(prod);
    let s: Vec<usize> = numerator
        .to_naturals()
        .ok_or_else(|| Error::consistency("secondary numerator has a non-natural coefficient"))?
        .into_iter()
        .map(|c| c as usize)
        .collect();
    if s.first() != Some(&1) {
        return Err(Error::consistency("secondary numerator must have constant term 1"));
    }
    let mut e = Vec::with_capacity(s.len());
    for d in 0..s.len() {
        let carried = if d >= n { e[d - n] } else { 0 };
        e.push(carried + s[d]);
    }
    let t: usize = s.iter().sum();
    let expected = factorial(n) / group.order();
    if t != expected {
        return Err(Error::consistency(format!(
            "secondary numerator sums to {t}, expected n!/|G| = {expected}"
        )));
    }
    Ok(SecondarySpec {
        n,
        group_order: group.order(),
        numerator,
        s,
        e,
        t,
    })
}

/// Number of `G`-orbits on degree-`d` monomials, by explicit enumeration.
///
/// Independent of [`hilbert_series`]: no generating functions are involved.
pub fn burnside_dimension(group: &PermGroup, d: usize) -> Result<u64> {
    burnside_dimension_with_guard(group, d, DEFAULT_ENUMERATION_GUARD)
}

pub fn burnside_dimension_with_guard(group: &PermGroup, d: usize, guard: usize) -> Result<u64> {
    let n = group.degree();
    let total = multiset_count(n, d);
    if total > guard as u128 {
        return Err(Error::resource(format!(
            "{total} exponent vectors of degree {d} exceed the enumeration guard {guard}"
        )));
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut orbits = 0;
    for v in compositions(n, d as u32) {
        if seen.contains(&v) {
            continue;
        }
        orbits += 1;
        seen.extend(group.orbit_unsorted(&v));
    }
    Ok(orbits)
}

/// `binom(d + n − 1, n − 1)`.
fn multiset_count(n: usize, d: usize) -> u128 {
    let mut acc: u128 = 1;
    for k in 1..n as u128 {
        acc = acc * (d as u128 + k) / k;
    }
    acc
}

/// All vectors of `n` nonnegative integers summing to `d`.
pub(crate) fn compositions(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, n: usize, left: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for x in (0..=left).rev() {
            prefix.push(x);
            rec(prefix, n, left - x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut Vec::with_capacity(n), n, d, &mut out);
    out
}
