mod common;

use std::cmp::Ordering;

use chromex::mean::{compare_mu, mu, mu_from_alpha, mu_via_definition, tau, MeanError};
use chromex::{ExactRational, Graph};
use common::{all_graphs, mu_by_coloring_enumeration, random_graph_of, rng};
use num_bigint::BigInt;
use rand::Rng;

fn exact(g: &Graph) -> ExactRational {
    mu(g).unwrap().value
}

#[test]
fn mu_matches_direct_coloring_average() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let oracle = mu_by_coloring_enumeration(&g);
            assert_eq!(exact(&g).as_inner(), &oracle);
            assert_eq!(mu_via_definition(&g).unwrap().value.as_inner(), &oracle);
        }
    }
    let mut r = rng(21);
    for _ in 0..30 {
        let g = random_graph_of(&mut r, 6);
        assert_eq!(exact(&g).as_inner(), &mu_by_coloring_enumeration(&g));
    }
}

#[test]
fn small_values() {
    assert_eq!(exact(&Graph::empty(2)), ExactRational::new(3, 2).unwrap());
    assert_eq!(exact(&Graph::complete(4)), ExactRational::from_integer(4));
    assert_eq!(exact(&Graph::path(3)), ExactRational::new(5, 2).unwrap());
    assert!(matches!(mu(&Graph::empty(0)), Err(MeanError::UndefinedMu)));
}

#[test]
fn mu_from_alpha_agrees() {
    let mut r = rng(22);
    for _ in 0..100 {
        let n = r.gen_range(1..=8);
        let g = random_graph_of(&mut r, n);
        let a = chromex::chromatic::alpha(&g, &Default::default()).unwrap();
        assert_eq!(mu_from_alpha(&a).unwrap().value, exact(&g));
    }
}

#[test]
fn tau_sign_orders_mu_and_is_transitive() {
    let mut r = rng(23);
    for _ in 0..500 {
        let n = r.gen_range(1..=8);
        let gs: Vec<Graph> = (0..3).map(|_| random_graph_of(&mut r, n)).collect();
        let mus: Vec<ExactRational> = gs.iter().map(exact).collect();
        let t = |a: usize, b: usize| tau(&gs[a], &gs[b], n as i64).sign();
        assert_eq!(t(0, 1), mus[0].cmp(&mus[1]));
        assert_eq!(t(1, 0), t(0, 1).reverse());
        assert_eq!(compare_mu(&gs[0], &gs[1]).unwrap(), mus[0].cmp(&mus[1]));
        if t(0, 1) != Ordering::Greater && t(1, 2) != Ordering::Greater {
            assert_ne!(t(0, 2), Ordering::Greater);
        }
        if t(0, 1) == Ordering::Less && t(1, 2) == Ordering::Less {
            assert_eq!(t(0, 2), Ordering::Less);
        }
    }
}

#[test]
fn compare_mu_agrees_on_all_four_vertex_pairs() {
    let graphs: Vec<Graph> = all_graphs(4).collect();
    let mus: Vec<ExactRational> = graphs.iter().map(exact).collect();
    for (g, mg) in graphs.iter().zip(&mus) {
        for (h, mh) in graphs.iter().zip(&mus) {
            assert_eq!(compare_mu(g, h).unwrap(), mg.cmp(mh));
        }
    }
    assert!(matches!(
        compare_mu(&Graph::empty(3), &Graph::empty(4)),
        Err(MeanError::IncomparableOrders(..))
    ));
}

#[test]
fn mu_range_and_empty_graph_bound() {
    let mut r = rng(24);
    let mut graphs: Vec<Graph> = (1..=5).flat_map(all_graphs).collect();
    graphs.extend((0..200).map(|_| {
        let n = r.gen_range(6..=9);
        random_graph_of(&mut r, n)
    }));
    for g in graphs {
        let m = mu(&g).unwrap();
        let n = BigInt::from(g.n());
        assert!(m.value.cmp_integer(&BigInt::from(1)) != Ordering::Less);
        assert!(m.value.cmp_integer(&n) != Ordering::Greater);
        assert_eq!(
            m.value.cmp_integer(&n) == Ordering::Equal,
            m.p_n_minus_1 == BigInt::from(0)
        );
        assert!(m.value >= exact(&Graph::empty(g.n())));
    }
}
