//! Staircase monomials and canonical orbit representatives.
//!
//! A monomial `x^α` is under the staircase when `α_i ≤ n − 1 − i` (0-based).
//! These `n!` monomials form a basis of the polynomial ring over the
//! symmetric polynomials, so orbit sums of the staircase monomials span the
//! invariant ring over them. Candidates for new secondary invariants are
//! drawn from one representative per `G`-orbit meeting the staircase.

use std::collections::HashSet;

use crate::perm::PermGroup;

/// Exponent vector of a monomial in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    pub fn is_under_staircase(&self) -> bool {
        is_under_staircase(&self.0)
    }

    /// A nonzero, weakly decreasing exponent vector.
    pub fn is_nonzero_partition(&self) -> bool {
        self.0.iter().any(|&a| a > 0) && self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

pub fn is_under_staircase(exponents: &[u32]) -> bool {
    let n = exponents.len();
    exponents
        .iter()
        .enumerate()
        .all(|(i, &a)| a as usize + i < n)
}

/// The lexicographically greatest member of the `G`-orbit of `m`.
pub fn canonical_representative(group: &PermGroup, m: &Monomial) -> Monomial {
    Monomial(canonical_exponents(group, &m.0))
}

/// Lex-max of `{g · v : g ∈ G}`, scanning the group elements in place.
pub(crate) fn canonical_exponents(group: &PermGroup, v: &[u32]) -> Vec<u32> {
    let mut best = v.to_vec();
    let mut scratch = v.to_vec();
    for g in group.elements() {
        g.act_into(v, &mut scratch);
        if scratch > best {
            best.copy_from_slice(&scratch);
        }
    }
    best
}

/// Whether `v` is the lex-max of its orbit, with early exit.
pub(crate) fn is_canonical(group: &PermGroup, v: &[u32]) -> bool {
    let mut scratch = v.to_vec();
    group.elements().iter().all(|g| {
        g.act_into(v, &mut scratch);
        scratch.as_slice() <= v
    })
}

/// All under-staircase vectors of degree `d` in lex-descending order.
pub fn staircase_vectors_of_degree(n: usize, d: usize) -> Vec<Vec<u32>> {
    // capacity[i] = Σ_{j ≥ i} (n − 1 − j), the most the suffix can absorb
    let capacity: Vec<usize> = (0..=n)
        .map(|i| (i..n).map(|j| n - 1 - j).sum())
        .collect();
    fn rec(i: usize, left: usize, n: usize, cap: &[usize], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == n {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = (n - 1 - i).min(left);
        for a in (0..=hi).rev() {
            if left - a > cap[i + 1] {
                break;
            }
            cur.push(a as u32);
            rec(i + 1, left - a, n, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d <= capacity[0] {
        rec(0, d, n, &capacity, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// One representative per `G`-orbit meeting the staircase in degree `d`,
/// in lex-descending order.
///
/// Under-staircase vectors are enumerated lex-descending and keyed by their
/// canonical form; the first vector seen for each key is emitted. That is
/// the canonical form itself whenever it lies under the staircase, and the
/// lex-max under-staircase member of the orbit otherwise. With
/// `exclude_partitions`, nonzero weakly decreasing representatives are
/// dropped.
pub fn candidates_of_degree(group: &PermGroup, d: usize, exclude_partitions: bool) -> Vec<Monomial> {
    let n = group.degree();
    let mut keys: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::new();
    for v in staircase_vectors_of_degree(n, d) {
        if !keys.insert(canonical_exponents(group, &v)) {
            continue;
        }
        let m = Monomial(v);
        if exclude_partitions && m.is_nonzero_partition() {
            continue;
        }
        out.push(m);
    }
    out
}

/// Counts of canonical monomials under the staircase.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CanonicalCounts {
    pub n: usize,
    pub group_order: usize,
    /// Canonical under-staircase monomials per degree `0..=binom(n,2)`.
    pub per_degree: Vec<u64>,
    /// Total `C(G)`.
    #[serde(rename = "C")]
    pub c: u64,
    /// `C′(G) = C(G) − Catalan(n) + 1`: those that are not nonzero partitions.
    #[serde(rename = "C_prime")]
    pub c_prime: u64,
    pub catalan: u64,
}

/// `C(G)` and `C′(G)`.
pub fn count_canonical(group: &PermGroup) -> CanonicalCounts {
    let n = group.degree();
    let top = n * n.saturating_sub(1) / 2;
    let per_degree: Vec<u64> = (0..=top)
        .map(|d| {
            staircase_vectors_of_degree(n, d)
                .iter()
                .filter(|v| is_canonical(group, v))
                .count() as u64
        })
        .collect();
    let c: u64 = per_degree.iter().sum();
    let catalan = catalan(n);
    CanonicalCounts {
        n,
        group_order: group.order(),
        per_degree,
        c,
        // every under-staircase partition is canonical, so C ≥ Catalan(n)
        c_prime: c + 1 - catalan,
        catalan,
    }
}

pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for k in 0..n as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}
