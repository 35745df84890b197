//! Evaluation points and the evaluation morphism `Φ`.
//!
//! With `ζ` a primitive `n`-th root of unity, the `n!` coordinate
//! permutations of `(1, ζ, …, ζⁿ⁻¹)` are the simple roots of
//! `e₁ = ⋯ = eₙ₋₁ = 0, eₙ = (−1)ⁿ⁺¹`. A point is stored by its exponent
//! word: the permutation `(e₀, …, eₙ₋₁)` of `0..n` stands for
//! `(ζ^{e₀}, …, ζ^{eₙ₋₁})`.
//!
//! Invariants are constant on `G`-orbits of points, so one representative
//! per orbit suffices: there are exactly `n!/|G|` of them. `Φ` sends an
//! invariant to its vector of values at those representatives, an algebra
//! morphism onto `K^{n!/|G|}` with the entrywise product.

use rayon::prelude::*;

use crate::cyclo::{CycloElement, CycloField};
use crate::monomials::Monomial;
use crate::perm::{factorial, PermGroup};
use crate::{Error, Result};

/// Default largest `n` for which all `n!` words are enumerated.
pub const DEFAULT_MAX_N: usize = 10;

/// A point `(ζ^{e₀}, …, ζ^{eₙ₋₁})`, stored by its exponent word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EvalPoint(pub Vec<u32>);

impl EvalPoint {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

/// One point per `G`-orbit of the permuted roots.
#[derive(Clone, Debug)]
pub struct PointSet {
    field: &'static CycloField,
    points: Vec<EvalPoint>,
}

impl PointSet {
    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn points(&self) -> &[EvalPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Same field, different representatives; used to check that `Φ` does
    /// not depend on the transversal.
    pub fn with_points(&self, points: Vec<EvalPoint>) -> Result<PointSet> {
        if points.len() != self.points.len() {
            return Err(Error::input("replacement point set has a different size"));
        }
        Ok(PointSet {
            field: self.field,
            points,
        })
    }
}

/// Partitions all permutation words of `0..n` into `G`-orbits.
///
/// Words are scanned in lex-ascending order and each unvisited word floods
/// its orbit through the generators, so every representative is the lex-min
/// of its orbit and the points come out sorted.
pub fn build_point_set(group: &PermGroup, field: &'static CycloField) -> Result<PointSet> {
    build_point_set_with_cap(group, field, DEFAULT_MAX_N)
}

pub fn build_point_set_with_cap(
    group: &PermGroup,
    field: &'static CycloField,
    max_n: usize,
) -> Result<PointSet> {
    let n = group.degree();
    if field.n() != n {
        return Err(Error::input(format!(
            "field Q(zeta_{}) does not match group degree {n}",
            field.n()
        )));
    }
    if n > max_n {
        return Err(Error::resource(format!(
            "enumerating {n}! evaluation points exceeds the cap n ≤ {max_n}"
        )));
    }
    let total = factorial(n);
    let mut visited = vec![false; total];
    let mut points = Vec::with_capacity(total / group.order());
    let mut word: Vec<u32> = (0..n as u32).collect();
    let mut stack = Vec::new();
    let mut scratch = word.clone();
    for rank in 0..total {
        if !visited[rank] {
            points.push(EvalPoint(word.clone()));
            visited[rank] = true;
            stack.push(word.clone());
            while let Some(w) = stack.pop() {
                for g in group.generators() {
                    g.act_into(&w, &mut scratch);
                    let r = lehmer_rank(&scratch);
                    if !visited[r] {
                        visited[r] = true;
                        stack.push(scratch.clone());
                    }
                }
            }
        }
        next_permutation(&mut word);
    }
    Ok(PointSet { field, points })
}

/// Position of a permutation word in lexicographic order.
fn lehmer_rank(word: &[u32]) -> usize {
    let n = word.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = word[i + 1..].iter().filter(|&&x| x < word[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

fn next_permutation(w: &mut [u32]) -> bool {
    let Some(i) = w.windows(2).rposition(|p| p[0] < p[1]) else {
        return false;
    };
    let j = w.iter().rposition(|&x| x > w[i]).expect("successor exists");
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

/// A vector of field values, one per evaluation point.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(transparent)]
pub struct EvalVector(pub Vec<CycloElement>);

impl EvalVector {
    pub fn entries(&self) -> &[CycloElement] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(CycloElement::is_zero)
    }

    pub fn constant(field: &'static CycloField, value: &CycloElement, len: usize) -> Self {
        debug_assert_eq!(value.field().n(), field.n());
        EvalVector(vec![value.clone(); len])
    }

    pub fn ones(field: &'static CycloField, len: usize) -> Self {
        EvalVector(vec![field.one(); len])
    }
}

/// `⟨α, p⟩ mod n`.
fn exponent_residue(alpha: &[u32], point: &[u32], n: usize) -> usize {
    let dot: u64 = alpha.iter().zip(point).map(|(&a, &p)| a as u64 * p as u64).sum();
    (dot % n as u64) as usize
}

/// `x^α` at a point: `ζ^{⟨α, p⟩ mod n}`.
pub fn eval_monomial(m: &Monomial, point: &EvalPoint, field: &'static CycloField) -> Result<CycloElement> {
    if m.n() != point.0.len() {
        return Err(Error::input("monomial and point have different lengths"));
    }
    Ok(field.root_power(exponent_residue(&m.0, &point.0, field.n()) as i64))
}

/// `Φ` of the orbit sum of `m`.
///
/// For each point the residues `⟨β, p⟩ mod n` over the orbit are tallied
/// with integer arithmetic; the tally is then turned into `Σ c_k ζᵏ` once.
pub fn eval_orbitsum(group: &PermGroup, m: &Monomial, points: &PointSet) -> Result<EvalVector> {
    eval_orbitsum_par(group, m, points, 1)
}

/// [`eval_orbitsum`] with the points split over `threads` workers.
pub fn eval_orbitsum_par(
    group: &PermGroup,
    m: &Monomial,
    points: &PointSet,
    threads: usize,
) -> Result<EvalVector> {
    if m.n() != group.degree() {
        return Err(Error::input("monomial length differs from group degree"));
    }
    let orbit = group.orbit_unsorted(&m.0);
    let pool = if threads > 1 {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().ok()
    } else {
        None
    };
    Ok(eval_orbit_at_points(&orbit, points, pool.as_ref()))
}

pub(crate) fn eval_orbit_at_points(
    orbit: &[Vec<u32>],
    points: &PointSet,
    pool: Option<&rayon::ThreadPool>,
) -> EvalVector {
    let field = points.field;
    let n = field.n();
    let value_at = |p: &EvalPoint| {
        let mut counts = vec![0i64; n];
        for beta in orbit {
            counts[exponent_residue(beta, &p.0, n)] += 1;
        }
        field.from_root_tally(&counts)
    };
    let entries = match pool {
        Some(pool) if points.len() > 1 => {
            pool.install(|| points.points.par_iter().map(value_at).collect())
        }
        _ => points.points.iter().map(value_at).collect(),
    };
    EvalVector(entries)
}

/// `Φ(eᵢ)`, evaluated directly from the point coordinates.
///
/// The result is the zero vector for `i < n` and the constant `(−1)ⁿ⁺¹` for
/// `i = n`; it is computed rather than returned, so it doubles as a check.
pub fn eval_elementary(i: usize, points: &PointSet) -> Result<EvalVector> {
    let field = points.field;
    let n = field.n();
    if i == 0 || i > n {
        return Err(Error::input(format!("elementary symmetric index {i} outside 1..={n}")));
    }
    let entries = points
        .points
        .iter()
        .map(|p| {
            // coefficients of ∏ⱼ (1 + ζ^{pⱼ} X), truncated at Xⁱ
            let mut e = vec![field.zero(); i + 1];
            e[0] = field.one();
            for &pj in &p.0 {
                let root = field.root_power(pj as i64);
                for k in (1..=i).rev() {
                    let add = &e[k - 1] * &root;
                    e[k] = &e[k] + &add;
                }
            }
            e.swap_remove(i)
        })
        .collect();
    Ok(EvalVector(entries))
}

/// `ε = (−1)ⁿ⁺¹ = eₙ` at every evaluation point.
pub fn epsilon(n: usize) -> i64 {
    if n % 2 == 1 {
        1
    } else {
        -1
    }
}

/// Entrywise product.
pub fn hadamard(a: &EvalVector, b: &EvalVector) -> Result<EvalVector> {
    if a.len() != b.len() {
        return Err(Error::input(format!(
            "hadamard product of vectors of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    a.0.iter()
        .zip(&b.0)
        .map(|(x, y)| x.checked_mul(y))
        .collect::<Result<Vec<_>>>()
        .map(EvalVector)
}
