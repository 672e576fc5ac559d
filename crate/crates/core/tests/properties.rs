//! Property tests across modules: encoding, canonical forms, exact and
//! floating spectra, and the two connectivity evaluations.

use kkec_core::connectivity::{l_edge_connectivity, l_edge_connectivity_by_deletion};
use kkec_core::enumeration::{canonical_form, isomorphic};
use kkec_core::graph::is_connected;
use kkec_core::spectral::{adjacency_char_poly, hong_bound, largest_real_root, spectral_radius, DEFAULT_TOL};
use kkec_core::{Graph, Graph6};
use num_bigint::BigInt;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn relabelled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(perm).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in relabelled(11)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(isomorphic(&g, &h));
    }

    #[test]
    fn adding_an_edge_breaks_isomorphism(g in graph(9)) {
        let missing = (0..g.n()).flat_map(|u| (u + 1..g.n()).map(move |v| (u, v))).find(|&(u, v)| !g.has_edge(u, v));
        if let Some((u, v)) = missing {
            prop_assert!(!isomorphic(&g, &g.with_edge(u, v).unwrap()));
        }
    }

    #[test]
    fn char_poly_low_coefficients(g in graph(10)) {
        // x^n + 0 x^(n-1) - m x^(n-2) + ... with -2 x^(n-3) per triangle
        let p = adjacency_char_poly(&g);
        let n = g.n();
        let c = p.coeffs();
        prop_assert_eq!(c.len(), n + 1);
        prop_assert_eq!(&c[n], &BigInt::from(1));
        if n >= 1 {
            prop_assert_eq!(&c[n - 1], &BigInt::from(0));
        }
        if n >= 2 {
            prop_assert_eq!(&c[n - 2], &BigInt::from(-(g.m() as i64)));
        }
        if n >= 3 {
            let mut triangles = 0i64;
            for (u, v) in g.edges() {
                triangles += (g.neighbors(u) & g.neighbors(v)).count_ones() as i64;
            }
            prop_assert_eq!(&c[n - 3], &BigInt::from(-2 * triangles / 3));
        }
    }

    #[test]
    fn power_iteration_matches_largest_root(g in graph(10)) {
        prop_assume!(g.m() > 0 && is_connected(&g));
        let est = spectral_radius(&g, DEFAULT_TOL).unwrap();
        let root = largest_real_root(&adjacency_char_poly(&g), 1e-12).unwrap();
        prop_assert!((est.rho - root).abs() < 1e-8, "{} vs {}", est.rho, root);
        prop_assert!(est.perron.iter().all(|&x| x > 0.0));
        prop_assert!(est.rho >= 2.0 * g.m() as f64 / g.n() as f64 - 1e-9);
        prop_assert!(est.rho <= g.max_degree() as f64 + 1e-9);
    }

    #[test]
    fn hong_bound_holds(g in graph(10)) {
        prop_assume!(g.n() >= 2 && is_connected(&g));
        let b = hong_bound(&g).unwrap();
        prop_assert!(spectral_radius(&g, DEFAULT_TOL).unwrap().rho <= b.value + 1e-9);
    }

    #[test]
    fn partition_scan_matches_deletion(g in graph(7), l in 2usize..=4) {
        prop_assume!(is_connected(&g));
        prop_assert_eq!(l_edge_connectivity(&g, l).unwrap(), l_edge_connectivity_by_deletion(&g, l).unwrap());
    }

    #[test]
    fn l_connectivity_grows_with_l(g in graph(8), l in 2usize..=4) {
        prop_assume!(is_connected(&g) && g.n() > l);
        prop_assert!(l_edge_connectivity(&g, l + 1).unwrap() > l_edge_connectivity(&g, l).unwrap());
    }
}
