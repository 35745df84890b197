mod common;

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use secinv::catalog::{self, parse_group};
use secinv::cyclo::{cyclotomic_polynomial, CycloElement, CycloField, Rational};
use secinv::engine;
use secinv::evalpoints::{self, build_point_set, eval_orbitsum, hadamard, EvalPoint, EvalVector};
use secinv::exactla::EchelonBasis;
use secinv::monomials::{self, Monomial};
use secinv::perm::{PermGroup, Permutation};
use secinv::series;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn element(n: usize, bound: i64) -> impl Strategy<Value = CycloElement> {
    let f = CycloField::get(n);
    (
        prop::collection::vec(-bound..=bound, f.phi()),
        1i64..=4,
    )
        .prop_map(move |(c, den)| {
            let coeffs: Vec<Rational> = c.iter().map(|&x| Rational::new(x.into(), den.into())).collect();
            f.from_coeffs(&coeffs).unwrap()
        })
}

fn small_catalog() -> Vec<(String, PermGroup)> {
    catalog::catalog_up_to(5).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_is_compatible_with_composition(
        (g, h, v) in (1usize..=7).prop_flat_map(|n| (
            permutation(n),
            permutation(n),
            prop::collection::vec(0u32..5, n),
        ))
    ) {
        let gh = g.compose(&h).unwrap();
        let lhs = g.act_on_vector(&h.act_on_vector(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, gh.act_on_vector(&v).unwrap());
        prop_assert!(g.compose(&g.inverse()).unwrap().is_identity());
        prop_assert_eq!(common::act(g.images(), &v), g.act_on_vector(&v).unwrap());
    }

    #[test]
    fn closure_order_divides_factorial(
        gens in (2usize..=6).prop_flat_map(|n| prop::collection::vec(permutation(n), 1..3))
    ) {
        let n = gens[0].degree();
        let g = PermGroup::closure(n, gens.clone()).unwrap();
        prop_assert_eq!(common::factorial(n) % g.order(), 0);
        for x in &gens {
            prop_assert!(g.contains(x));
        }
        let set: HashSet<&Permutation> = g.elements().iter().collect();
        for a in g.elements() {
            for b in g.elements().iter().take(4) {
                prop_assert!(set.contains(&a.compose(b).unwrap()));
            }
        }
    }

    #[test]
    fn cycle_notation_round_trips(p in (1usize..=8).prop_flat_map(permutation)) {
        let text = format!("{}:{}", p.degree(), p);
        let (n, gens) = catalog::parse_generators(&text).unwrap();
        prop_assert_eq!(n, p.degree());
        prop_assert_eq!(&gens[0], &p);
    }

    #[test]
    fn field_axioms(
        (a, b, c) in (2usize..=8).prop_flat_map(|n| (element(n, 9), element(n, 9), element(n, 9)))
    ) {
        let f = a.field();
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &f.zero(), a.clone());
        prop_assert_eq!(&a * &f.one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.invert().unwrap()).is_one());
        }
        let mut fused = c.clone();
        fused.sub_mul_assign(&a, &b);
        prop_assert_eq!(fused, &c - &(&a * &b));
    }

    #[test]
    fn echelon_rank_matches_fraction_free_oracle(
        (n, rows) in prop_oneof![Just(3usize), Just(4usize)].prop_flat_map(|n| {
            let phi = 2;
            (Just(n), (1usize..=6, 1usize..=6).prop_flat_map(move |(r, w)| {
                prop::collection::vec(prop::collection::vec(prop::collection::vec(-2i64..=2, phi), w), r)
            }))
        })
    ) {
        let f = CycloField::get(n);
        let width = rows[0].len();
        let mut basis = EchelonBasis::new(f, width);
        let mut grew = 0;
        for row in &rows {
            let v = EvalVector(row.iter().map(|c| f.from_int_coeffs(c)).collect());
            if basis.insert(&v).unwrap() {
                grew += 1;
            }
            prop_assert!(basis.contains(&v).unwrap());
        }
        prop_assert_eq!(basis.dimension(), grew);
        prop_assert_eq!(basis.dimension(), oracle_rank(n, &rows));
        prop_assert!(basis.pivots().windows(2).all(|w| w[0] < w[1]));
        for (i, &p) in basis.pivots().iter().enumerate() {
            for (k, row) in basis.rows().iter().enumerate() {
                prop_assert_eq!(row.entries()[p].is_one(), i == k);
                prop_assert_eq!(row.entries()[p].is_zero(), i != k);
            }
        }
    }

    #[test]
    fn evaluation_does_not_depend_on_representatives(
        (idx, alpha, picks) in (0usize..1000, prop::collection::vec(0u32..4, 5), prop::collection::vec(0usize..1000, 120))
    ) {
        let groups = small_catalog();
        let (_, g) = &groups[idx % groups.len()];
        let n = g.degree();
        let m = Monomial::new(alpha[..n].to_vec());
        let points = build_point_set(g, CycloField::get(n)).unwrap();
        let moved: Vec<EvalPoint> = points
            .points()
            .iter()
            .zip(&picks)
            .map(|(p, &k)| {
                let h = &g.elements()[k % g.order()];
                EvalPoint(h.act_on_vector(&p.0).unwrap())
            })
            .collect();
        let other = points.with_points(moved).unwrap();
        prop_assert_eq!(eval_orbitsum(g, &m, &points).unwrap(), eval_orbitsum(g, &m, &other).unwrap());
    }

    #[test]
    fn evaluation_is_multiplicative(
        (idx, a, b) in (0usize..1000, prop::collection::vec(0u32..3, 4), prop::collection::vec(0u32..3, 4))
    ) {
        let groups: Vec<_> = small_catalog().into_iter().filter(|(_, g)| g.degree() == 4).collect();
        let (_, g) = &groups[idx % groups.len()];
        let f = CycloField::get(4);
        let points = build_point_set(g, f).unwrap();
        let pa = eval_orbitsum(g, &Monomial::new(a.clone()), &points).unwrap();
        let pb = eval_orbitsum(g, &Monomial::new(b.clone()), &points).unwrap();

        let mut product: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for x in common::orbit(g, &a) {
            for y in common::orbit(g, &b) {
                let m: Vec<u32> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
                *product.entry(m).or_default() += 1;
            }
        }
        let direct: Vec<CycloElement> = points
            .points()
            .iter()
            .map(|p| {
                product.iter().fold(f.zero(), |acc, (m, &c)| {
                    let k: u32 = m.iter().zip(&p.0).map(|(x, y)| x * y).sum();
                    &acc + &(&f.from_int(c) * &f.root_power(i64::from(k)))
                })
            })
            .collect();
        prop_assert_eq!(hadamard(&pa, &pb).unwrap(), EvalVector(direct));
    }
}

/// Rank over `ℤ[ζₙ]` for `n ∈ {3, 4}` by cross-multiplying elimination,
/// with its own multiplication modulo `Φ₃ = 1 + x + x²` or `Φ₄ = 1 + x²`.
fn oracle_rank(n: usize, rows: &[Vec<Vec<i64>>]) -> usize {
    type Z = [BigInt; 2];
    let mul = |a: &Z, b: &Z| -> Z {
        let c0 = &a[0] * &b[0];
        let c1 = &a[0] * &b[1] + &a[1] * &b[0];
        let c2 = &a[1] * &b[1];
        match n {
            3 => [c0 - &c2, c1 - c2],
            4 => [c0 - c2, c1],
            _ => unreachable!(),
        }
    };
    let is_zero = |a: &Z| a[0].is_zero() && a[1].is_zero();
    let mut m: Vec<Vec<Z>> = rows
        .iter()
        .map(|r| r.iter().map(|c| [BigInt::from(c[0]), BigInt::from(c[1])]).collect())
        .collect();
    let width = m[0].len();
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&i| !is_zero(&m[i][col])) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let factor = row[col].clone();
            if is_zero(&factor) {
                continue;
            }
            for j in 0..width {
                let lhs = mul(&pivot_row[col], &row[j]);
                let rhs = mul(&factor, &pivot_row[j]);
                row[j] = [&lhs[0] - &rhs[0], &lhs[1] - &rhs[1]];
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn oracle_rank_sanity() {
    // (1, ζ) and (ζ, ζ²) are proportional
    let rows = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![-1, -1]]];
    assert_eq!(oracle_rank(3, &rows), 1);
    assert_eq!(oracle_rank(4, &rows), 2);
}

#[test]
fn cyclotomic_polynomial_vanishes_at_zeta() {
    for n in 1..=16 {
        let f = CycloField::get(n);
        let coeffs = cyclotomic_polynomial(n);
        let value = coeffs.iter().enumerate().fold(f.zero(), |acc, (k, c)| {
            let c = i64::try_from(c).unwrap();
            &acc + &(&f.from_int(c) * &f.root_power(k as i64))
        });
        assert!(value.is_zero(), "Φ_{n}(ζ) ≠ 0");
        assert_eq!(coeffs.last(), Some(&BigInt::one()));
    }
}

#[test]
fn staircase_counts_are_mahonian() {
    for n in 1..=7 {
        let counts: Vec<u64> = (0..=n * (n - 1) / 2)
            .map(|d| monomials::staircase_vectors_of_degree(n, d).len() as u64)
            .collect();
        assert_eq!(counts, common::mahonian(n), "n = {n}");
        assert_eq!(counts.iter().sum::<u64>() as usize, common::factorial(n));
    }
}

#[test]
fn candidates_cover_exactly_the_staircase_orbits() {
    for (name, g) in small_catalog() {
        let n = g.degree();
        for d in 0..=n * (n - 1) / 2 {
            let mut expected: HashSet<Vec<Vec<u32>>> = HashSet::new();
            for v in common::exponent_vectors(n, d as u32) {
                let orbit = common::orbit(&g, &v);
                if orbit.iter().any(|w| common::staircase(w)) {
                    expected.insert(orbit);
                }
            }
            let cands = monomials::candidates_of_degree(&g, d, false);
            let covered: HashSet<Vec<Vec<u32>>> = cands.iter().map(|m| common::orbit(&g, &m.0)).collect();
            assert_eq!(covered.len(), cands.len(), "{name} degree {d}: duplicate orbit");
            assert_eq!(covered, expected, "{name} degree {d}");
            assert!(cands.iter().all(Monomial::is_under_staircase));
        }
    }
}

#[test]
fn canonical_count_bounds_the_number_of_secondaries() {
    for (name, g) in small_catalog() {
        let counts = monomials::count_canonical(&g);
        assert!(counts.c as usize >= g.index_in_symmetric(), "{name}");
        assert!(counts.c >= counts.catalan, "{name}");
    }
}

#[test]
fn elementary_symmetric_images() {
    for (name, g) in catalog::catalog_up_to(6).unwrap() {
        let n = g.degree();
        let points = build_point_set(&g, CycloField::get(n)).unwrap();
        for i in 1..n {
            assert!(evalpoints::eval_elementary(i, &points).unwrap().is_zero(), "{name} e{i}");
        }
        let en = evalpoints::eval_elementary(n, &points).unwrap();
        let f = CycloField::get(n);
        assert_eq!(en, EvalVector::constant(f, &f.from_int(evalpoints::epsilon(n)), points.len()), "{name}");
    }
}

#[test]
fn hilbert_series_matches_orbit_counts() {
    for (name, g) in small_catalog() {
        let h = series::hilbert_series(&g, 6).unwrap().to_naturals().unwrap();
        for d in 0..=6u32 {
            let want = common::orbit_count(&g, d) as u64;
            assert_eq!(h.get(d as usize).copied().unwrap_or(0), want, "{name} degree {d}");
            assert_eq!(series::burnside_dimension(&g, d as usize).unwrap(), want, "{name} degree {d}");
        }
    }
}

#[test]
fn numerator_matches_molien_oracle() {
    // C4: identity, two 4-cycles, one double transposition
    let c4: [(&[usize], i128); 3] = [(&[1, 1, 1, 1], 1), (&[4], 2), (&[2, 2], 1)];
    let want = common::molien_numerator(4, &c4, 6);
    let spec = series::secondary_spec(&parse_group("C4").unwrap()).unwrap();
    assert_eq!(spec.s.iter().map(|&c| c as i128).collect::<Vec<_>>(), want);

    // A3 and trivial3
    let a3: [(&[usize], i128); 2] = [(&[1, 1, 1], 1), (&[3], 2)];
    let spec = series::secondary_spec(&parse_group("A3").unwrap()).unwrap();
    assert_eq!(spec.s.iter().map(|&c| c as i128).collect::<Vec<_>>(), common::molien_numerator(3, &a3, 3));
    let spec = series::secondary_spec(&parse_group("trivial3").unwrap()).unwrap();
    assert_eq!(spec.numerator_ints(), common::mahonian(3));
}

#[test]
fn engine_counts_agree_with_series() {
    for (name, g) in catalog::catalog_up_to(6).unwrap() {
        let r = engine::secondary_invariants(&g, &engine::Options::default()).unwrap();
        let mut by_degree = vec![0usize; r.spec.s.len()];
        for s in r.all_secondaries() {
            by_degree[s.degree] += 1;
        }
        assert_eq!(by_degree, r.spec.s, "{name}");
        assert_eq!(r.t(), common::factorial(g.degree()) / g.order(), "{name}");
        assert_eq!(r.secondaries[0].len(), 1, "{name}");
        assert!(r.secondaries[0][0].factors.is_empty());
        for (d, i_d) in r.irreducibles.iter().enumerate() {
            for irr in i_d {
                assert_eq!(irr.monomial.degree(), d);
                assert!(irr.monomial.is_under_staircase());
            }
        }
    }
}

#[test]
fn parallel_and_sequential_runs_agree() {
    for spec in ["C5", "D6", "trivial4"] {
        let g = parse_group(spec).unwrap();
        let seq = engine::secondary_invariants(&g, &engine::Options::default()).unwrap();
        let par = engine::secondary_invariants(
            &g,
            &engine::Options {
                parallelism: 3,
                ..engine::Options::default()
            },
        )
        .unwrap();
        assert_eq!(seq.secondaries, par.secondaries, "{spec}");
        assert_eq!(seq.irreducibles, par.irreducibles, "{spec}");
    }
}

#[test]
fn exclude_partitions_still_yields_a_basis() {
    for (name, g) in catalog::catalog_up_to(5).unwrap() {
        let opts = engine::Options {
            exclude_partitions: true,
            ..engine::Options::default()
        };
        let r = engine::secondary_invariants(&g, &opts).unwrap();
        assert!(engine::verify(&r, &g).passed(), "{name}");
    }
}

#[test]
fn product_candidates_for_trivial3() {
    let g = parse_group("trivial3").unwrap();
    let r = engine::secondary_invariants(&g, &engine::Options::default()).unwrap();
    let p = engine::product_candidates(&r.secondaries[..2], &r.irreducibles[..2], 2).unwrap();
    // multisets of size 2 from 2 irreducibles: binom(2 + 1, 2)
    let k = r.irreducibles[1].len();
    assert_eq!(p.len(), k * (k + 1) / 2);
    for s in &p {
        let a = r.irreducible(s.factors[0]).unwrap();
        let b = r.irreducible(s.factors[1]).unwrap();
        assert_eq!(s.phi, hadamard(&a.phi, &b.phi).unwrap());
    }
    assert!(engine::product_candidates(&r.secondaries[..1], &r.irreducibles[..1], 1)
        .unwrap()
        .is_empty());
}
