//! Degree-by-degree construction of secondary and irreducible secondary
//! invariants, and an independent verification pass over the result.
//!
//! For each degree `d` up to the top degree of the secondary numerator:
//!
//! 1. `E_d` starts as a copy of `E_{d−n}` (or empty below `n`): multiplying
//!    by `eₙ` maps degree `d − n` into degree `d` and `Φ(eₙ)` is constant.
//! 2. Products `η·η′` with `η ∈ S_k`, `η′ ∈ I_l`, `k + l = d` are tried; each
//!    whose image is not yet in `E_d` becomes a secondary invariant.
//! 3. Orbit sums of staircase monomials are tried until `dim E_d = e_d`;
//!    each one that enlarges `E_d` is a new irreducible secondary invariant.
//!
//! Secondary invariants are stored as multisets of irreducible factors, never
//! expanded; [`SecondaryResult::expand`] does that on demand for checking.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclo::{CycloField, Rational};
use crate::evalpoints::{
    build_point_set_with_cap, eval_orbit_at_points, hadamard, EvalVector, PointSet, DEFAULT_MAX_N,
};
use crate::exactla::EchelonBasis;
use crate::monomials::{candidates_of_degree, Monomial};
use crate::perm::PermGroup;
use crate::series::{binomial2, compositions, secondary_spec, SecondarySpec};
use crate::{Error, Result};

/// Default largest `n` for which [`SecondaryResult::expand`] is allowed.
pub const DEFAULT_EXPANSION_MAX_N: usize = 5;
/// Default largest `n` for the brute-force dimension clause of [`verify`].
pub const DEFAULT_KEYLEMMA_MAX_N: usize = 4;

#[derive(Clone, Debug)]
pub struct Options {
    /// Skip nonzero partitions among the candidates, falling back to the
    /// full candidate list for any degree that comes up short.
    pub exclude_partitions: bool,
    /// Worker threads for evaluation; 1 runs everything on the caller's thread.
    pub parallelism: usize,
    /// Largest degree `n` for which the `n!` evaluation words are enumerated.
    pub max_n: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            exclude_partitions: false,
            parallelism: 1,
            max_n: DEFAULT_MAX_N,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleSecondary {
    pub id: usize,
    /// Orbit representative whose orbit sum this is.
    pub monomial: Monomial,
    pub degree: usize,
    pub phi: EvalVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondaryInvariant {
    /// Irreducible ids, sorted; empty for the invariant 1.
    pub factors: Vec<usize>,
    pub degree: usize,
    pub phi: EvalVector,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub closure: Duration,
    pub series: Duration,
    pub points: Duration,
    pub evaluation: Duration,
    pub elimination: Duration,
}

impl Timings {
    pub fn total(&self) -> Duration {
        self.closure + self.series + self.points + self.evaluation + self.elimination
    }
}

/// Work done in one degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub products_tried: usize,
    pub candidates_evaluated: usize,
    /// The partition-free candidate list fell short and the full list was used.
    pub fallback: bool,
}

#[derive(Clone, Debug)]
pub struct SecondaryResult {
    pub spec: SecondarySpec,
    /// `secondaries[d]` = `S_d`.
    pub secondaries: Vec<Vec<SecondaryInvariant>>,
    /// `irreducibles[d]` = `I_d`.
    pub irreducibles: Vec<Vec<IrreducibleSecondary>>,
    pub points: PointSet,
    pub timings: Timings,
    pub stats: Vec<DegreeStats>,
}

impl SecondaryResult {
    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn t(&self) -> usize {
        self.secondaries.iter().map(Vec::len).sum()
    }

    pub fn field(&self) -> &'static CycloField {
        self.points.field()
    }

    /// Degrees of all secondary invariants, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        self.all_secondaries().map(|s| s.degree).collect()
    }

    pub fn all_secondaries(&self) -> impl Iterator<Item = &SecondaryInvariant> {
        self.secondaries.iter().flatten()
    }

    pub fn all_irreducibles(&self) -> impl Iterator<Item = &IrreducibleSecondary> {
        self.irreducibles.iter().flatten()
    }

    pub fn irreducible(&self, id: usize) -> Option<&IrreducibleSecondary> {
        self.all_irreducibles().find(|i| i.id == id)
    }

    /// Largest number of orbit sums evaluated in a single degree.
    pub fn peak_candidates(&self) -> usize {
        self.stats.iter().map(|s| s.candidates_evaluated).max().unwrap_or(0)
    }

    /// Expanded polynomial of a secondary invariant, with the default cap on `n`.
    pub fn expand(&self, s: &SecondaryInvariant, group: &PermGroup) -> Result<Polynomial> {
        self.expand_with_cap(s, group, DEFAULT_EXPANSION_MAX_N)
    }

    /// `∏_{factors} Σ_{β ∈ orbit} x^β` as an explicit map from monomials to coefficients.
    pub fn expand_with_cap(&self, s: &SecondaryInvariant, group: &PermGroup, max_n: usize) -> Result<Polynomial> {
        let n = group.degree();
        if n > max_n {
            return Err(Error::resource(format!(
                "expansion limited to n ≤ {max_n}, group has degree {n}"
            )));
        }
        let mut poly: Polynomial = BTreeMap::from([(Monomial::one(n), Rational::from_integer(1.into()))]);
        for &id in &s.factors {
            let irr = self
                .irreducible(id)
                .ok_or_else(|| Error::input(format!("unknown irreducible id {id}")))?;
            let orbit = group.orbit_unsorted(&irr.monomial.0);
            let mut next = Polynomial::new();
            for (m, c) in &poly {
                for beta in &orbit {
                    let key = Monomial(m.0.iter().zip(beta).map(|(a, b)| a + b).collect());
                    *next.entry(key).or_insert_with(|| Rational::from_integer(0.into())) += c;
                }
            }
            poly = next;
        }
        Ok(poly)
    }
}

/// A polynomial as a sparse map from exponent vectors to coefficients.
pub type Polynomial = BTreeMap<Monomial, Rational>;

/// Computes secondary invariants of `group` with `e₁, …, eₙ` as primary invariants.
pub fn secondary_invariants(group: &PermGroup, options: &Options) -> Result<SecondaryResult> {
    let n = group.degree();
    let mut timings = Timings {
        closure: group.closure_time(),
        ..Timings::default()
    };

    let clock = Instant::now();
    let spec = secondary_spec(group)?;
    timings.series = clock.elapsed();

    let clock = Instant::now();
    let field = CycloField::get(n);
    let points = build_point_set_with_cap(group, field, options.max_n)?;
    timings.points = clock.elapsed();
    let width = points.len();

    let pool = if options.parallelism > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(options.parallelism)
                .build()
                .map_err(|e| Error::resource(format!("cannot start worker threads: {e}")))?,
        )
    } else {
        None
    };
    let batch = if pool.is_some() { 2 * options.parallelism } else { 1 };

    let top = spec.max_degree();
    let mut secondaries: Vec<Vec<SecondaryInvariant>> = Vec::with_capacity(top + 1);
    let mut irreducibles: Vec<Vec<IrreducibleSecondary>> = Vec::with_capacity(top + 1);
    let mut bases: Vec<EchelonBasis> = Vec::with_capacity(top + 1);
    let mut stats = Vec::with_capacity(top + 1);
    let mut next_id = 0;

    for d in 0..=top {
        let target = spec.e[d];
        let mut basis = if d >= n {
            bases[d - n].clone()
        } else {
            EchelonBasis::new(field, width)
        };
        let mut s_d = Vec::new();
        let mut i_d = Vec::new();
        let mut st = DegreeStats::default();

        if d == 0 {
            // S₀ = {1}, the empty product; Φ(1) is the all-ones vector.
            let one = SecondaryInvariant {
                factors: Vec::new(),
                degree: 0,
                phi: EvalVector::ones(field, width),
            };
            basis.insert(&one.phi)?;
            s_d.push(one);
        } else {
            // once dim E_d = e_d no further product can be accepted
            for (factors, eta, irr) in product_pairs(&secondaries, &irreducibles, d) {
                if basis.dimension() >= target {
                    break;
                }
                let clock = Instant::now();
                let phi = hadamard(&eta.phi, &irr.phi)?;
                timings.evaluation += clock.elapsed();
                let clock = Instant::now();
                st.products_tried += 1;
                if basis.insert(&phi)? {
                    s_d.push(SecondaryInvariant { factors, degree: d, phi });
                }
                timings.elimination += clock.elapsed();
            }

            let mut tried: HashSet<Monomial> = HashSet::new();
            let passes: &[bool] = if options.exclude_partitions { &[true, false] } else { &[false] };
            for (pass, &exclude) in passes.iter().enumerate() {
                if basis.dimension() >= target {
                    break;
                }
                if pass > 0 {
                    st.fallback = true;
                }
                let cands: Vec<Monomial> = candidates_of_degree(group, d, exclude)
                    .into_iter()
                    .filter(|m| !tried.contains(m))
                    .collect();
                for chunk in cands.chunks(batch) {
                    if basis.dimension() >= target {
                        break;
                    }
                    let clock = Instant::now();
                    let phis: Vec<EvalVector> = match &pool {
                        Some(pool) => pool.install(|| {
                            chunk
                                .par_iter()
                                .map(|m| eval_orbit_at_points(&group.orbit_unsorted(&m.0), &points, None))
                                .collect()
                        }),
                        None => chunk
                            .iter()
                            .map(|m| eval_orbit_at_points(&group.orbit_unsorted(&m.0), &points, None))
                            .collect(),
                    };
                    timings.evaluation += clock.elapsed();
                    let clock = Instant::now();
                    for (m, phi) in chunk.iter().zip(phis) {
                        if basis.dimension() >= target {
                            break;
                        }
                        tried.insert(m.clone());
                        st.candidates_evaluated += 1;
                        if basis.insert(&phi)? {
                            let id = next_id;
                            next_id += 1;
                            s_d.push(SecondaryInvariant {
                                factors: vec![id],
                                degree: d,
                                phi: phi.clone(),
                            });
                            i_d.push(IrreducibleSecondary {
                                id,
                                monomial: m.clone(),
                                degree: d,
                                phi,
                            });
                        }
                    }
                    timings.elimination += clock.elapsed();
                }
            }
        }

        if basis.dimension() != target {
            return Err(Error::consistency(format!(
                "degree {d}: reached dimension {} but expected {target}",
                basis.dimension()
            )));
        }
        if s_d.len() != spec.s[d] {
            return Err(Error::consistency(format!(
                "degree {d}: found {} secondary invariants, expected {}",
                s_d.len(),
                spec.s[d]
            )));
        }
        secondaries.push(s_d);
        irreducibles.push(i_d);
        bases.push(basis);
        if d >= n {
            // E_{d−n} is no longer needed once E_d exists
            bases[d - n] = EchelonBasis::new(field, 0);
        }
        stats.push(st);
    }

    Ok(SecondaryResult {
        spec,
        secondaries,
        irreducibles,
        points,
        timings,
        stats,
    })
}

/// Products `η·η′` with `η ∈ S_k`, `η′ ∈ I_l`, `k + l = d`, `l ≥ 1`.
///
/// Ordered by `(k, position in S_k, position in I_l)`; a factor multiset
/// that already appeared is skipped.
pub fn product_candidates(
    secondaries: &[Vec<SecondaryInvariant>],
    irreducibles: &[Vec<IrreducibleSecondary>],
    d: usize,
) -> Result<Vec<SecondaryInvariant>> {
    product_pairs(secondaries, irreducibles, d)
        .map(|(factors, eta, irr)| {
            Ok(SecondaryInvariant {
                factors,
                degree: d,
                phi: hadamard(&eta.phi, &irr.phi)?,
            })
        })
        .collect()
}

/// The factor multisets of [`product_candidates`] with the pair producing
/// each, without forming the products.
fn product_pairs<'a>(
    secondaries: &'a [Vec<SecondaryInvariant>],
    irreducibles: &'a [Vec<IrreducibleSecondary>],
    d: usize,
) -> impl Iterator<Item = (Vec<usize>, &'a SecondaryInvariant, &'a IrreducibleSecondary)> + 'a {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    (0..d)
        .filter_map(move |k| Some((secondaries.get(k)?, irreducibles.get(d - k)?)))
        .flat_map(|(s_k, i_l)| s_k.iter().flat_map(move |eta| i_l.iter().map(move |irr| (eta, irr))))
        .filter_map(move |(eta, irr)| {
            let mut factors = eta.factors.clone();
            let at = factors.partition_point(|&f| f <= irr.id);
            factors.insert(at, irr.id);
            seen.insert(factors.clone()).then_some((factors, eta, irr))
        })
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub expansion_max_n: usize,
    pub keylemma_max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            expansion_max_n: DEFAULT_EXPANSION_MAX_N,
            keylemma_max_n: DEFAULT_KEYLEMMA_MAX_N,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum ClauseStatus {
    Passed,
    Failed(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseReport {
    pub clause: &'static str,
    pub description: &'static str,
    #[serde(flatten)]
    pub status: ClauseStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub clauses: Vec<ClauseReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| !matches!(c.status, ClauseStatus::Failed(_)))
    }

    pub fn clause(&self, name: &str) -> Option<&ClauseReport> {
        self.clauses.iter().find(|c| c.clause == name)
    }

    /// The first failed clause as an error.
    pub fn into_result(self) -> Result<VerificationReport> {
        if let Some(c) = self.clauses.iter().find(|c| matches!(c.status, ClauseStatus::Failed(_))) {
            let ClauseStatus::Failed(msg) = &c.status else { unreachable!() };
            return Err(Error::Verification {
                clause: c.clause.to_string(),
                message: msg.clone(),
            });
        }
        Ok(self)
    }
}

/// Re-checks a result against the defining properties of secondary invariants.
///
/// Clauses:
/// - `a`: number of secondaries per degree matches the numerator;
/// - `b`: the `t` evaluation vectors have rank `t`;
/// - `c`: in each degree they stay independent modulo the span of lower
///   degrees congruent mod `n`;
/// - `d`: expanded invariants are fixed by the generators and evaluate to
///   the stored vectors (small `n` only);
/// - `e`: the span of all degree-`d` orbit sums has dimension `e_d`
///   (small `n` only);
/// - `structure`: stored vectors agree with a fresh evaluation of each
///   irreducible and with the product of factor vectors.
pub fn verify(result: &SecondaryResult, group: &PermGroup) -> VerificationReport {
    verify_with(result, group, &VerifyOptions::default())
}

pub fn verify_with(result: &SecondaryResult, group: &PermGroup, opts: &VerifyOptions) -> VerificationReport {
    let clauses = vec![
        ClauseReport {
            clause: "a",
            description: "secondary counts per degree match the numerator",
            status: outcome(clause_counts(result)),
        },
        ClauseReport {
            clause: "b",
            description: "evaluation vectors form a basis of the quotient",
            status: outcome(clause_basis(result)),
        },
        ClauseReport {
            clause: "c",
            description: "graded independence modulo the carried subspace",
            status: outcome(clause_graded(result)),
        },
        ClauseReport {
            clause: "d",
            description: "expansions are invariant and evaluate to the stored vectors",
            status: if group.degree() <= opts.expansion_max_n {
                outcome(clause_expansion(result, group, opts.expansion_max_n))
            } else {
                ClauseStatus::Skipped(format!("n > {}", opts.expansion_max_n))
            },
        },
        ClauseReport {
            clause: "e",
            description: "dimension of all degree-d orbit sums equals e_d",
            status: if group.degree() <= opts.keylemma_max_n {
                outcome(clause_keylemma(result, group))
            } else {
                ClauseStatus::Skipped(format!("n > {}", opts.keylemma_max_n))
            },
        },
        ClauseReport {
            clause: "structure",
            description: "stored vectors match fresh evaluation and factor products",
            status: outcome(clause_structure(result, group)),
        },
    ];
    VerificationReport { clauses }
}

fn outcome(r: std::result::Result<(), String>) -> ClauseStatus {
    match r {
        Ok(()) => ClauseStatus::Passed,
        Err(msg) => ClauseStatus::Failed(msg),
    }
}

fn clause_counts(result: &SecondaryResult) -> std::result::Result<(), String> {
    let spec = &result.spec;
    if result.secondaries.len() != spec.s.len() {
        return Err(format!(
            "{} degrees of secondaries, numerator has {}",
            result.secondaries.len(),
            spec.s.len()
        ));
    }
    for (d, (found, &want)) in result.secondaries.iter().zip(&spec.s).enumerate() {
        if found.len() != want {
            return Err(format!("degree {d}: {} secondaries, expected {want}", found.len()));
        }
        if let Some(bad) = found.iter().find(|s| s.degree != d) {
            return Err(format!("degree-{} invariant stored under degree {d}", bad.degree));
        }
    }
    if result.t() != spec.t {
        return Err(format!("t = {}, expected {}", result.t(), spec.t));
    }
    Ok(())
}

fn clause_basis(result: &SecondaryResult) -> std::result::Result<(), String> {
    let width = result.points.len();
    let mut basis = EchelonBasis::new(result.field(), width);
    for s in result.all_secondaries() {
        basis.insert(&s.phi).map_err(|e| e.to_string())?;
    }
    if basis.dimension() != width || result.t() != width {
        return Err(format!(
            "rank {} of {} vectors in a space of dimension {width}",
            basis.dimension(),
            result.t()
        ));
    }
    Ok(())
}

fn clause_graded(result: &SecondaryResult) -> std::result::Result<(), String> {
    let n = result.n();
    let width = result.points.len();
    let mut by_residue: Vec<EchelonBasis> = (0..n).map(|_| EchelonBasis::new(result.field(), width)).collect();
    for (d, s_d) in result.secondaries.iter().enumerate() {
        let basis = &mut by_residue[d % n];
        for s in s_d {
            if !basis.insert(&s.phi).map_err(|e| e.to_string())? {
                return Err(format!(
                    "degree {d}: secondary with factors {:?} depends on lower degrees ≡ {d} mod {n}",
                    s.factors
                ));
            }
        }
    }
    Ok(())
}

fn clause_expansion(result: &SecondaryResult, group: &PermGroup, max_n: usize) -> std::result::Result<(), String> {
    let field = result.field();
    let n = field.n();
    for s in result.all_secondaries() {
        let poly = result.expand_with_cap(s, group, max_n).map_err(|e| e.to_string())?;
        if let Some((m, _)) = poly.iter().find(|(m, _)| m.degree() != s.degree) {
            return Err(format!("expansion of {:?} has a term {:?} of the wrong degree", s.factors, m.0));
        }
        for g in group.generators() {
            let moved: Polynomial = poly
                .iter()
                .map(|(m, c)| (Monomial(g.act_unchecked(&m.0)), c.clone()))
                .collect();
            if moved != poly {
                return Err(format!("expansion of {:?} is not fixed by {g}", s.factors));
            }
        }
        for (p, stored) in result.points.points().iter().zip(s.phi.entries()) {
            let mut coeffs = vec![Rational::from_integer(0.into()); field.phi()];
            for (m, c) in &poly {
                let k: u64 = m.0.iter().zip(&p.0).map(|(&a, &b)| a as u64 * b as u64).sum();
                for (acc, &r) in coeffs.iter_mut().zip(field.root_power_coeffs((k % n as u64) as usize)) {
                    if r != 0 {
                        *acc += c * Rational::from_integer(r.into());
                    }
                }
            }
            let value = field.from_coeffs(&coeffs).map_err(|e| e.to_string())?;
            if &value != stored {
                return Err(format!(
                    "Φ of the expansion of {:?} at point {:?} is {value}, stored {stored}",
                    s.factors, p.0
                ));
            }
        }
    }
    Ok(())
}

/// Expected `dim Φ(R^G_d)` for any `d`: the sum of `s_j` over `j ≤ d`, `j ≡ d mod n`.
pub fn expected_dimension(spec: &SecondarySpec, d: usize) -> usize {
    (0..=d)
        .filter(|j| (d - j).is_multiple_of(spec.n))
        .map(|j| spec.s.get(j).copied().unwrap_or(0))
        .sum()
}

fn clause_keylemma(result: &SecondaryResult, group: &PermGroup) -> std::result::Result<(), String> {
    let n = group.degree();
    for d in 0..=binomial2(n) {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut basis = EchelonBasis::new(result.field(), result.points.len());
        for v in compositions(n, d as u32) {
            if seen.contains(&v) {
                continue;
            }
            let orbit = group.orbit_unsorted(&v);
            let phi = eval_orbit_at_points(&orbit, &result.points, None);
            seen.extend(orbit);
            basis.insert(&phi).map_err(|e| e.to_string())?;
        }
        let want = expected_dimension(&result.spec, d);
        if basis.dimension() != want {
            return Err(format!(
                "degree {d}: orbit sums span dimension {}, expected {want}",
                basis.dimension()
            ));
        }
    }
    Ok(())
}

fn clause_structure(result: &SecondaryResult, group: &PermGroup) -> std::result::Result<(), String> {
    let field = result.field();
    let width = result.points.len();
    for irr in result.all_irreducibles() {
        let fresh = eval_orbit_at_points(&group.orbit_unsorted(&irr.monomial.0), &result.points, None);
        if fresh != irr.phi {
            return Err(format!("irreducible {} does not match a fresh evaluation", irr.id));
        }
    }
    for s in result.all_secondaries() {
        let mut acc = EvalVector::ones(field, width);
        let mut degree = 0;
        for &id in &s.factors {
            let irr = result.irreducible(id).ok_or_else(|| format!("unknown irreducible id {id}"))?;
            acc = hadamard(&acc, &irr.phi).map_err(|e| e.to_string())?;
            degree += irr.degree;
        }
        if acc != s.phi {
            return Err(format!("secondary {:?} differs from the product of its factors", s.factors));
        }
        if degree != s.degree {
            return Err(format!("secondary {:?} has degree {} but factors sum to {degree}", s.factors, s.degree));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn cyclic(n: usize) -> PermGroup {
        PermGroup::closure(n, vec![Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()]).unwrap()
    }

    #[test]
    fn a3_matches_worked_example() {
        let g = cyclic(3);
        let r = secondary_invariants(&g, &Options::default()).unwrap();
        assert_eq!(r.degrees(), vec![0, 3]);
        assert_eq!(r.irreducibles[3].len(), 1);
        let irr = &r.irreducibles[3][0];
        assert_eq!(irr.monomial, Monomial::new(vec![2, 1, 0]));
        let f = r.field();
        assert_eq!(
            irr.phi.0,
            vec![&f.from_int(3) * &f.root_power(1), &f.from_int(3) * &f.root_power(2)]
        );
        assert!(verify(&r, &g).passed());
    }

    #[test]
    fn a3_products_at_degree_six() {
        let g = cyclic(3);
        let r = secondary_invariants(&g, &Options::default()).unwrap();
        let p = product_candidates(&r.secondaries, &r.irreducibles, 6).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].factors, vec![0, 0]);
        assert!(product_candidates(&r.secondaries, &r.irreducibles, 2).unwrap().is_empty());
    }

    #[test]
    fn trivial_group_products_dedupe() {
        let g = PermGroup::trivial(3).unwrap();
        let r = secondary_invariants(&g, &Options::default()).unwrap();
        assert_eq!(r.degrees(), vec![0, 1, 1, 2, 2, 3]);
        let p = product_candidates(&r.secondaries[..2], &r.irreducibles[..2], 2).unwrap();
        let factors: Vec<Vec<usize>> = p.iter().map(|s| s.factors.clone()).collect();
        assert_eq!(factors, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn expansion_of_a3_orbit_sum() {
        let g = cyclic(3);
        let r = secondary_invariants(&g, &Options::default()).unwrap();
        let one = r.expand(&r.secondaries[0][0], &g).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one.contains_key(&Monomial::one(3)));
        let poly = r.expand(&r.secondaries[3][0], &g).unwrap();
        let keys: Vec<Vec<u32>> = poly.keys().map(|m| m.0.clone()).collect();
        assert_eq!(keys, vec![vec![0, 2, 1], vec![1, 0, 2], vec![2, 1, 0]]);
        assert!(poly.values().all(|c| *c == Rational::from_integer(1.into())));
        assert!(matches!(r.expand_with_cap(&r.secondaries[3][0], &g, 2), Err(Error::Resource(_))));
    }

    #[test]
    fn fault_injection_breaks_basis_clause() {
        let g = cyclic(3);
        let mut r = secondary_invariants(&g, &Options::default()).unwrap();
        let f = r.field();
        r.secondaries[3][0].phi = EvalVector(vec![f.zero(); 2]);
        let report = verify(&r, &g);
        assert!(matches!(report.clause("b").unwrap().status, ClauseStatus::Failed(_)));
        assert!(matches!(
            report.into_result(),
            Err(Error::Verification { clause, .. }) if clause == "b"
        ));
    }

    #[test]
    fn exclude_partitions_falls_back() {
        let g = PermGroup::trivial(3).unwrap();
        let opts = Options {
            exclude_partitions: true,
            ..Options::default()
        };
        let r = secondary_invariants(&g, &opts).unwrap();
        assert_eq!(r.t(), 6);
        assert!(r.stats[1].fallback);
        assert!(verify(&r, &g).passed());
    }

    #[test]
    fn expected_dimension_carries() {
        let spec = secondary_spec(&PermGroup::trivial(3).unwrap()).unwrap();
        let e: Vec<usize> = (0..=6).map(|d| expected_dimension(&spec, d)).collect();
        assert_eq!(e, vec![1, 2, 2, 2, 2, 2, 2]);
    }
}
