//! Structural properties checked against brute-force oracles on random small
//! graphs and complexes.

mod common;

use std::collections::BTreeSet;

use edgering::complex::{f_vector, h_from_f, h_from_shelling, search_shelling, verify_shelling};
use edgering::cone::{extreme_rays, EnumerationOptions};
use edgering::toric::incidence_vector;
use edgering::*;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Vertex sets carrying an odd cycle (not necessarily induced), via a
/// Hamiltonian-cycle DP on every odd subset.
fn odd_cycle_vertex_sets(g: &Graph) -> Vec<u64> {
    let n = g.num_vertices();
    let mut out = Vec::new();
    for set in 1u64..(1 << n) {
        let size = set.count_ones();
        if size < 3 || size % 2 == 0 {
            continue;
        }
        let start = set.trailing_zeros() as usize;
        // reach[mask][v]: a path from `start` through exactly `mask` ending at v.
        let mut reach = vec![0u64; 1 << n];
        reach[1 << start] = 1 << start;
        let mut found = false;
        let mut masks: Vec<u64> = (0..(1u64 << n)).filter(|m| m & !set == 0 && m >> start & 1 == 1).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let ends = reach[mask as usize];
            for v in 0..n {
                if ends >> v & 1 == 0 {
                    continue;
                }
                if mask == set && g.has_edge(v, start) {
                    found = true;
                }
                for w in 0..n {
                    if set >> w & 1 == 1 && mask >> w & 1 == 0 && g.has_edge(v, w) {
                        reach[(mask | 1 << w) as usize] |= 1 << w;
                    }
                }
            }
        }
        if found {
            out.push(set);
        }
    }
    out
}

fn occ_oracle(g: &Graph) -> bool {
    let cycles = odd_cycle_vertex_sets(g);
    cycles.iter().all(|&a| {
        cycles.iter().all(|&b| {
            a & b != 0 || (0..g.num_vertices()).any(|v| a >> v & 1 == 1 && g.neighbors(v) & b != 0)
        })
    })
}

fn bipartite_oracle(g: &Graph) -> bool {
    (0u64..(1 << g.num_vertices())).any(|c| g.edges().iter().all(|e| (c >> e[0] & 1) != (c >> e[1] & 1)))
}

/// Two disjoint triangles joined by a path through vertex 3, plus random
/// edges that never join the triangles directly, randomly relabelled.
fn planted_violation(rng: &mut StdRng) -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6), (7, rng.random_range(0..7))];
    let left = [0usize, 1, 2];
    let right = [4usize, 5, 6];
    for u in 0..8 {
        for v in u + 1..8 {
            let bridge = (left.contains(&u) && right.contains(&v)) || (left.contains(&v) && right.contains(&u));
            if !bridge && !edges.contains(&(u, v)) && !edges.contains(&(v, u)) && rng.random_bool(0.2) {
                edges.push((u, v));
            }
        }
    }
    let mut relabel: Vec<usize> = (0..8).collect();
    relabel.shuffle(rng);
    Graph::new(8, edges.iter().map(|&(u, v)| (relabel[u], relabel[v])).collect()).unwrap()
}

#[test]
fn odd_cycle_condition_matches_brute_force() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut violated = 0;
    for k in 0..300 {
        // Odd `k` draws sparse graphs, where unbridged odd cycles are common.
        let g = if k % 2 == 0 {
            common::random_connected_graph(&mut rng)
        } else {
            common::random_graph(&mut rng, 6..=8, 0.05..0.35)
        };
        let oracle = occ_oracle(&g);
        assert_eq!(satisfies_odd_cycle_condition(&g).holds(), oracle, "{}", g.to_json());
        assert_eq!(is_bipartite(&g).is_bipartite(), bipartite_oracle(&g), "{}", g.to_json());
        violated += usize::from(!oracle);
    }
    for _ in 0..50 {
        let g = planted_violation(&mut rng);
        assert!(!occ_oracle(&g), "{}", g.to_json());
        assert!(!satisfies_odd_cycle_condition(&g).holds(), "{}", g.to_json());
    }
    println!("{violated} random violations");
}

#[test]
fn odd_cycle_witnesses_are_disjoint_unbridged_cycles() {
    let mut rng = StdRng::seed_from_u64(8);
    let mut seen = 0;
    for _ in 0..200 {
        let g = planted_violation(&mut rng);
        if let OddCycleCheck::Violated { first, second } = satisfies_odd_cycle_condition(&g) {
            let mask = |c: &[usize]| c.iter().fold(0u64, |m, &v| m | 1 << v);
            let (a, b) = (mask(&first), mask(&second));
            assert!(first.len() % 2 == 1 && second.len() % 2 == 1);
            assert_eq!(a & b, 0);
            assert!(first.iter().all(|&v| g.neighbors(v) & b == 0));
            for c in [&first, &second] {
                assert!((0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()])));
            }
            seen += 1;
        }
    }
    assert_eq!(seen, 200);
}

fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let pivot = m[r].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot) {
                    *x = *x * a - y * b;
                }
            }
        }
        r += 1;
    }
    r
}

fn assert_cone_description_exact(g: &Graph) {
    let cone = cone_inequalities(g);
    let rhos: Vec<Vec<i64>> = (0..g.num_edges()).map(|e| incidence_vector(g, e).unwrap()).collect();
    for q in &cone.inequalities {
        assert!(rhos.iter().all(|r| q.eval(r) >= 0), "{}: {q:?}", g.to_json());
    }
    let rows: Vec<Vec<i64>> = cone.inequalities.iter().map(|q| q.coefficients.clone()).collect();
    assert_eq!(rank(&rows), g.num_vertices(), "inequality cone is not pointed: {}", g.to_json());
    // A pointed cone is generated by its extreme rays, and every extreme ray
    // of cone(rho) is a multiple of some rho(e).
    for ray in extreme_rays(&cone, 10_000_000).unwrap() {
        let hit = rhos.iter().any(|r| {
            let s: i64 = ray.iter().sum::<i64>();
            r.iter().zip(&ray).all(|(a, b)| a * s == b * 2)
        });
        assert!(hit, "{}: extreme ray {ray:?} is not an edge vector", g.to_json());
    }
}

#[test]
fn cone_inequalities_cut_out_the_edge_cone() {
    for family in [Family::Gn { n: 2 }, Family::Gn { n: 3 }, Family::Complete { m: 4 }, Family::Complete { m: 5 }] {
        assert_cone_description_exact(&build_family(family).unwrap().0);
    }
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..25 {
        assert_cone_description_exact(&common::random_occ_graph(&mut rng));
    }
}

/// All `sum lambda_e rho(e)` with `|lambda_e| <= 2` cover exactly the even-sum
/// vectors of `{-1, 0, 1}^V`.
fn assert_even_sum_lattice(g: &Graph) {
    let rhos: Vec<Vec<i64>> = (0..g.num_edges()).map(|e| incidence_vector(g, e).unwrap()).collect();
    let n = g.num_vertices();
    let mut reached = BTreeSet::new();
    let mut lambda = vec![-2i64; rhos.len()];
    loop {
        let p: Vec<i64> = (0..n).map(|v| rhos.iter().zip(&lambda).map(|(r, l)| r[v] * l).sum()).collect();
        assert_eq!(p.iter().sum::<i64>() % 2, 0);
        if p.iter().all(|c| c.abs() <= 1) {
            reached.insert(p);
        }
        let Some(k) = lambda.iter().position(|&l| l < 2) else { break };
        lambda[k] += 1;
        lambda[..k].iter_mut().for_each(|l| *l = -2);
    }
    let mut total = 0;
    for code in 0..3usize.pow(n as u32) {
        let p: Vec<i64> = (0..n).map(|v| (code / 3usize.pow(v as u32) % 3) as i64 - 1).collect();
        assert_eq!(lattice_member(g, &p).unwrap(), reached.contains(&p), "{}: {p:?}", g.to_json());
        total += usize::from(reached.contains(&p));
    }
    assert_eq!(total, reached.len());
}

#[test]
fn lattice_is_the_even_sum_sublattice() {
    assert_even_sum_lattice(&complete(3).unwrap());
    assert_even_sum_lattice(&complete(4).unwrap());
    assert_even_sum_lattice(&gn(2).unwrap().0);
    let c5_chord = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]).unwrap();
    assert_even_sum_lattice(&c5_chord);
    let pendant = Graph::new(5, vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
    assert_even_sum_lattice(&pendant);
}

#[test]
fn corpus_generators_hilbert_and_threads() {
    let (corpus, _) = common::corpus(20);
    for entry in &corpus {
        let g = &entry.graph;
        let r = &entry.report;
        for b in &r.generators {
            assert!(b.is_relation_of(g) && b.is_homogeneous(), "{}", b);
        }
        // The Gröbner basis spans the same ideal as the generators.
        for b in &r.generators {
            assert_eq!(reduce(Some(b), &r.groebner_basis, &entry.order).unwrap(), None);
        }
        for deg in 0..=2 {
            assert_eq!(
                hilbert_function_value(r.h(), deg),
                semigroup_count(g, deg).unwrap() as u128,
                "{} degree {deg}",
                g.to_json()
            );
        }
        let one = canonical_generators_with(g, r.h(), 5, &EnumerationOptions { threads: 1, ..Default::default() });
        let four = canonical_generators_with(g, r.h(), 5, &EnumerationOptions { threads: 4, ..Default::default() });
        assert_eq!(one.unwrap(), four.unwrap());
    }
}

#[test]
fn gorenstein_verdict_matches_type_one() {
    let (corpus, _) = common::corpus(30);
    for entry in &corpus {
        let g = &entry.graph;
        let c = canonical_generators(g, entry.report.h(), g.num_vertices() as u64).unwrap();
        assert_eq!(entry.report.h().is_symmetric(), c.cm_type == 1, "{}", g.to_json());
    }
}

#[test]
fn reduced_basis_is_independent_of_input_order() {
    let mut rng = StdRng::seed_from_u64(10);
    let (corpus, _) = common::corpus(10);
    for entry in &corpus {
        let mut gens = entry.report.generators.clone();
        gens.shuffle(&mut rng);
        assert_eq!(buchberger(&gens, &entry.order).unwrap(), entry.report.groebner_basis);
    }
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    (3usize..8).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=4), 1..7).prop_map(move |faces| {
            let faces: Vec<Vec<usize>> = faces.into_iter().map(|f| f.into_iter().collect()).collect();
            SimplicialComplex::new(n, &faces).unwrap()
        })
    })
}

fn arb_pure_complex() -> impl Strategy<Value = SimplicialComplex> {
    (4usize..8, 1usize..4).prop_flat_map(|(n, k)| {
        prop::collection::vec(prop::sample::subsequence((0..n).collect::<Vec<_>>(), k), 1..7)
            .prop_map(move |faces| SimplicialComplex::new(n, &faces).unwrap())
    })
}

fn arb_monomial(vars: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, vars).prop_map(Monomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn h_vector_sums_to_top_faces(c in arb_complex()) {
        let f = f_vector(&c).unwrap();
        let d = (c.dim() + 1) as usize;
        let h = h_from_f(&f, d).unwrap();
        prop_assert_eq!(h.coefficients[0], 1);
        prop_assert_eq!(h.sum(), *f.last().unwrap() as i64);
    }

    #[test]
    fn shellings_reproduce_the_f_vector_h(c in arb_pure_complex()) {
        let d = (c.dim() + 1) as usize;
        let h = h_from_f(&f_vector(&c).unwrap(), d).unwrap();
        if let Some(order) = search_shelling(&c).unwrap() {
            let report = verify_shelling(&c, &order).unwrap();
            prop_assert!(report.valid);
            prop_assert_eq!(h_from_shelling(&report, d).unwrap(), h);
        }
    }

    #[test]
    fn lcm_gcd_identity(a in arb_monomial(5), b in arb_monomial(5)) {
        prop_assert_eq!(a.lcm(&b).mul(&a.gcd(&b)), a.mul(&b));
        prop_assert!(a.divides(&a.lcm(&b)) && a.gcd(&b).divides(&b));
    }

    #[test]
    fn graded_lex_is_a_total_monomial_order(
        a in arb_monomial(4),
        b in arb_monomial(4),
        m in arb_monomial(4),
        perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let order = MonomialOrder::new(perm).unwrap();
        let ab = order.compare(&a, &b).unwrap();
        prop_assert_eq!(order.compare(&b, &a).unwrap(), ab.reverse());
        prop_assert_eq!(order.compare(&a.mul(&m), &b.mul(&m)).unwrap(), ab);
        prop_assert_ne!(order.compare(&Monomial::one(4), &m).unwrap(), std::cmp::Ordering::Greater);
    }

    #[test]
    fn random_orders_on_g3_give_groebner_bases(perm in Just((0..9usize).collect::<Vec<_>>()).prop_shuffle()) {
        let (g, labels) = gn(3).unwrap();
        let order = MonomialOrder::new(perm).unwrap();
        let gb = buchberger(&gn_generators(3, &labels).unwrap(), &order).unwrap();
        prop_assert!(is_groebner_basis(&gb, &order).unwrap().is_none());
        for b in &gb {
            prop_assert!(b.is_relation_of(&g));
        }
    }
}
