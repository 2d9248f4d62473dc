mod common;

use common::{q, rng};
use decorated_cospans::circuits::{behavior, behavior_equivalent, grad_power, laplacian, oracle_nodal, power, Res};
use decorated_cospans::dcospan::apply_functor;
use decorated_cospans::decoration::IdentityEndofunctor;
use decorated_cospans::{fixtures, gen, DecoratedCategory, Edge, FinFunction, FinSet, Graphs, RatGraph, RatSubspace, Rational};
use num_traits::Zero;
use rand::Rng;

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn random_graph(case: u64) -> (RatGraph, rand_chacha::ChaCha8Rng) {
    let mut r = rng(23, case);
    let n = FinSet::new(r.gen_range(1..=6)).unwrap();
    (gen::graph(&mut r, n, 8), r)
}

#[test]
fn power_of_the_gluing_graph() {
    // vertices A, B, C with ψ = (1, 0, 0); summed term by term by hand:
    // B→A: 1/(1/5) = 5, A→B: 1/(13/10) = 10/13, A→C: 1/(4/5) = 5/4, C→B: 0
    let g = fixtures::gluing_first().decoration;
    let psi = [q(1, 1), q(0, 1), q(0, 1)];
    let by_hand = q(5, 1) + q(10, 13) + q(5, 4);
    assert_eq!(by_hand, q(365, 52));
    assert_eq!(power(&g, &psi).unwrap(), by_hand);
}

#[test]
fn gradient_satisfies_the_exact_quadratic_identity() {
    for case in 0..500 {
        let (g, mut r) = random_graph(case);
        let n = g.vertices().size();
        let phi = gen::vector::<Rational, _>(&mut r, n);
        let h = gen::vector::<Rational, _>(&mut r, n);
        let moved: Vec<Rational> = phi.iter().zip(&h).map(|(a, b)| a.clone() + b.clone()).collect();
        let lhs = power(&g, &moved).unwrap() - power(&g, &phi).unwrap();
        let rhs = dot(&grad_power(&g, &phi).unwrap(), &h) + power(&g, &h).unwrap();
        assert_eq!(lhs, rhs, "case {case}: {g:?}");
    }
}

#[test]
fn gradient_is_twice_the_laplacian() {
    for case in 0..500 {
        let (g, mut r) = random_graph(case);
        let phi = gen::vector::<Rational, _>(&mut r, g.vertices().size());
        let l = laplacian(&g);
        let two_l_phi: Vec<Rational> = l.mul_vec(&phi).unwrap().into_iter().map(|x| x * q(2, 1)).collect();
        assert_eq!(two_l_phi, grad_power(&g, &phi).unwrap(), "case {case}");
        assert_eq!(l.transpose(), l, "case {case}");
        for row in l.iter_rows() {
            assert!(row.iter().fold(Rational::zero(), |a, x| a + x.clone()).is_zero());
        }
    }
}

#[test]
fn constant_potentials_have_zero_gradient() {
    let (g, _) = random_graph(3);
    let n = g.vertices().size();
    assert!(grad_power(&g, &vec![q(7, 3); n]).unwrap().iter().all(Zero::is_zero));
}

fn rows(r: &[&[i64]]) -> Vec<Vec<Rational>> {
    r.iter().map(|row| row.iter().map(|&x| q(x, 1)).collect()).collect()
}

#[test]
fn single_unit_edge_behavior_by_hand() {
    // κ0 = 2(ψ0 − ψ1), κ1 = −κ0
    let c = fixtures::single_edge(q(1, 1));
    let expected = RatSubspace::span_rows(4, rows(&[&[1, 0, 2, -2], &[0, 1, -2, 2]])).unwrap();
    assert_eq!(behavior(&c).unwrap(), expected);
    assert_eq!(oracle_nodal(&c.decoration, &c.cospan.boundary()).unwrap(), expected);
}

#[test]
fn wire_equates_potentials_and_balances_currents() {
    let w = fixtures::wire();
    let expected = RatSubspace::span_rows(4, rows(&[&[1, 1, 0, 0], &[0, 0, 1, -1]])).unwrap();
    assert_eq!(behavior(&w).unwrap(), expected);
}

#[test]
fn series_parallel_and_triangle() {
    let graphs = Graphs::new();
    let cat = DecoratedCategory::new(&graphs);
    let (a, b) = fixtures::series(q(1, 1), q(2, 1));
    let series = cat.compose(&a, &b).unwrap();
    assert!(behavior_equivalent(&series, &fixtures::single_edge(q(3, 1))).unwrap());
    assert!(!behavior_equivalent(&series, &fixtures::single_edge(q(1, 1))).unwrap());
    let parallel = fixtures::parallel(q(1, 1), q(1, 1));
    assert!(behavior_equivalent(&parallel, &fixtures::single_edge(q(1, 2))).unwrap());
    // Y–Δ by hand: one unit edge in parallel with two in series, 1 ‖ 2 = 2/3
    let triangle = fixtures::unit_triangle();
    assert!(behavior_equivalent(&triangle, &fixtures::single_edge(q(2, 3))).unwrap());
    for c in [&series, &parallel, &triangle] {
        let oracle = oracle_nodal(&c.decoration, &c.cospan.boundary()).unwrap();
        assert_eq!(behavior(c).unwrap(), oracle);
    }
}

#[test]
fn behavior_equivalence_needs_matching_feet() {
    let a = fixtures::single_edge(q(1, 1));
    let b = fixtures::gluing_first();
    assert!(behavior_equivalent(&a, &b).is_err());
}

#[test]
fn self_loops_and_floating_parts_do_not_change_behavior() {
    let base = fixtures::single_edge(q(1, 1));
    let extra = RatGraph::new(
        FinSet::new(4).unwrap(),
        vec![
            Edge::new(0, 1, q(1, 1)),
            Edge::new(0, 0, q(5, 1)),
            Edge::new(2, 3, q(1, 1)),
            Edge::new(3, 2, q(1, 4)),
        ],
    )
    .unwrap();
    let cat_graphs = Graphs::new();
    let cat = DecoratedCategory::new(&cat_graphs);
    let cospan = decorated_cospans::Cospan::new(
        FinFunction::new(4, vec![0]).unwrap(),
        FinFunction::new(4, vec![1]).unwrap(),
    )
    .unwrap();
    let noisy = cat.decorate(cospan, extra).unwrap();
    assert!(behavior_equivalent(&base, &noisy).unwrap());
}

#[test]
fn res_of_the_gluing_composite() {
    // the Res image keeps the cospan and decorates it with rowspace (I | 2L)
    let graphs = Graphs::new();
    let cat = DecoratedCategory::new(&graphs);
    let glued = cat.compose(&fixtures::gluing_first(), &fixtures::gluing_second()).unwrap();
    let image = apply_functor(&Res::new(), &IdentityEndofunctor, &glued).unwrap();
    assert_eq!(image.cospan, glued.cospan);
    // conductances: A–B 5 + 10/13, A–C 5/4, B–C 1/2, B–D 10/17 + 10/3
    let ab = q(5, 1) + q(10, 13);
    let ac = q(5, 4);
    let bc = q(1, 2);
    let bd = q(10, 17) + q(10, 3);
    let two = q(2, 1);
    let z = q(0, 1);
    let row = |phi: [i64; 4], iota: [Rational; 4]| -> Vec<Rational> {
        phi.iter().map(|&x| q(x, 1)).chain(iota.into_iter().map(|x| x * two.clone())).collect()
    };
    let expected = RatSubspace::span_rows(
        8,
        vec![
            row([1, 0, 0, 0], [ab.clone() + ac.clone(), -ab.clone(), -ac.clone(), z.clone()]),
            row([0, 1, 0, 0], [-ab.clone(), ab + bc.clone() + bd.clone(), -bc.clone(), -bd.clone()]),
            row([0, 0, 1, 0], [-ac.clone(), -bc.clone(), ac + bc, z.clone()]),
            row([0, 0, 0, 1], [z.clone(), -bd.clone(), z, bd]),
        ],
    )
    .unwrap();
    assert_eq!(image.decoration, expected);
}
