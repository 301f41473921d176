use linforest_core::build::{complete, cycle, path};
use linforest_core::engine::{common_neighborhood_find, validate_certificate};
use linforest_core::enumerate::{enumerate_graphs, Connectivity, EnumFilter};
use linforest_core::forest::{forest_params, ForestError};
use linforest_core::oracle::{brute_monomorphic, naive_contains};
use linforest_core::{
    assemble, contains_linear_forest, generate_family, longest_cycle, longest_path, monomorphism_exists, parse_forest,
    Assemble, FamilySpec, Graph, LinearForest, TheoremClass,
};
use proptest::prelude::*;

fn star(leaves: usize) -> Graph {
    assemble(Assemble::Join(complete(1).unwrap(), Graph::empty(leaves).unwrap())).unwrap()
}

fn family(spec: FamilySpec) -> Graph {
    generate_family(&spec).unwrap()
}

#[test]
fn parse_forest_normalizes() {
    assert_eq!(parse_forest("4,4").unwrap().orders(), [4, 4]);
    assert_eq!(parse_forest("3,2,3").unwrap().orders(), [3, 3, 2]);
    assert!(matches!(parse_forest("1,4"), Err(ForestError::OrderTooSmall(1))));
    assert!(parse_forest("").is_err());
    assert!(parse_forest("4,x").is_err());
}

#[test]
fn forest_parameters() {
    let p = forest_params(&parse_forest("4,4").unwrap());
    assert_eq!((p.k, p.l, p.h, p.total_order, p.theorem_class), (2, 0, 3, 8, TheoremClass::Even));
    let p = forest_params(&parse_forest("6,3").unwrap());
    assert_eq!((p.k, p.l, p.h, p.total_order, p.theorem_class), (1, 1, 3, 9, TheoremClass::OneOdd));
    let p = forest_params(&parse_forest("3,3,3").unwrap());
    assert_eq!((p.l, p.theorem_class), (3, TheoremClass::OutOfTheoremScope));
    let p = forest_params(&parse_forest("5,3").unwrap());
    assert_eq!((p.k, p.l, p.h, p.theorem_class), (0, 2, 2, TheoremClass::TwoOdd));
}

#[test]
fn containment_examples() {
    let f = parse_forest("2,2").unwrap();
    let p4 = path(4).unwrap();
    let cert = contains_linear_forest(&p4, &f).unwrap();
    validate_certificate(&p4, &f, &cert).unwrap();
    let mut edges: Vec<Vec<usize>> = cert
        .paths
        .iter()
        .map(|p| {
            let mut p = p.clone();
            p.sort();
            p
        })
        .collect();
    edges.sort();
    assert_eq!(edges, vec![vec![0, 1], vec![2, 3]]);

    assert!(contains_linear_forest(&star(5), &f).is_none());
    assert!(contains_linear_forest(&family(FamilySpec::S { n: 9, h: 3 }), &parse_forest("4,4").unwrap()).is_none());
    let l42 = family(FamilySpec::L { t: 4, h: 2 });
    assert_eq!(l42.order(), 9);
    assert!(contains_linear_forest(&l42, &parse_forest("5,3").unwrap()).is_none());
    assert!(!naive_contains(&l42, &parse_forest("5,3").unwrap()));
}

#[test]
fn longest_paths_and_cycles() {
    let (order, witness) = longest_path(&family(FamilySpec::L { t: 3, h: 2 }), None);
    assert_eq!((order, witness.len()), (5, 5));
    assert_eq!(longest_path(&cycle(6).unwrap(), None).0, 6);
    let s93 = family(FamilySpec::S { n: 9, h: 3 });
    let (order, witness) = longest_path(&s93, None);
    assert_eq!(order, 7);
    assert!(witness.windows(2).all(|w| s93.has_edge(w[0], w[1])));
    let (order, witness) = longest_path(&s93, Some(8));
    assert_eq!((order, witness.last()), (7, Some(&8)));

    assert_eq!(longest_cycle(&s93), 6);
    assert_eq!(longest_cycle(&star(4)), 0);
    assert_eq!(longest_cycle(&cycle(7).unwrap()), 7);
}

#[test]
fn monomorphism_examples() {
    let c5 = cycle(5).unwrap();
    let splus = family(FamilySpec::Splus { n: 5, h: 2 });
    let s = family(FamilySpec::S { n: 5, h: 2 });
    assert!(monomorphism_exists(&c5, &splus).unwrap());
    assert!(brute_monomorphic(&c5, &splus));
    assert!(!monomorphism_exists(&c5, &s).unwrap());
    assert!(!brute_monomorphic(&c5, &s));
    assert!(monomorphism_exists(&path(3).unwrap(), &complete(3).unwrap()).unwrap());
}

#[test]
fn common_neighborhoods() {
    let s93 = family(FamilySpec::S { n: 9, h: 3 });
    let hubs: u64 = (0..9).filter(|&v| s93.degree(v) == 8).map(|v| 1u64 << v).sum();
    assert_eq!(hubs.count_ones(), 3);
    assert_eq!(common_neighborhood_find(&s93, hubs, 3, 6), Some(hubs));
    assert_eq!(common_neighborhood_find(&s93, hubs, 3, 7), None);
    let c6 = cycle(6).unwrap();
    assert_eq!(common_neighborhood_find(&c6, (1 << 0) | (1 << 3), 2, 1), None);
    assert_eq!(common_neighborhood_find(&c6, 0, 0, 0), Some(0));
}

/// Every forest of total order at most `n`, as path-order lists.
fn forests_up_to(n: usize) -> Vec<LinearForest> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for part in (2..=max.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.into_iter().map(|p| LinearForest::new(p).unwrap()).collect()
}

#[test]
fn containment_agrees_with_naive_search_on_all_graphs_up_to_six() {
    for n in 1..=6 {
        let forests = forests_up_to(n);
        for g in enumerate_graphs(EnumFilter::new(n, 0, Connectivity::Any)).unwrap() {
            for f in &forests {
                let fast = contains_linear_forest(&g, f);
                assert_eq!(fast.is_some(), naive_contains(&g, f), "{} with {f}", g.to_graph6());
                if let Some(cert) = fast {
                    validate_certificate(&g, f, &cert).unwrap();
                }
            }
        }
    }
}

#[test]
fn longest_cycle_matches_cycle_monomorphisms() {
    for g in enumerate_graphs(EnumFilter::new(6, 2, Connectivity::Connected)).unwrap() {
        let l = longest_cycle(&g);
        assert!(brute_monomorphic(&cycle(l).unwrap(), &g), "{}", g.to_graph6());
        for len in l + 1..=6 {
            assert!(!brute_monomorphic(&cycle(len).unwrap(), &g), "{} length {len}", g.to_graph6());
        }
    }
}

fn arb_orders() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(2usize..12, 1..6)
}

proptest! {
    #[test]
    fn forest_params_follow_the_formula(orders in arb_orders()) {
        let f = LinearForest::new(orders.clone()).unwrap();
        let p = f.params();
        let k = orders.iter().filter(|o| *o % 2 == 0).count();
        let l = orders.len() - k;
        let h = orders.iter().map(|o| o / 2).sum::<usize>() - 1;
        prop_assert_eq!((p.k, p.l, p.h, p.total_order), (k, l, h, orders.iter().sum()));
        let class = match l {
            _ if orders.len() < 2 => TheoremClass::OutOfTheoremScope,
            0 => TheoremClass::Even,
            1 => TheoremClass::OneOdd,
            2 => TheoremClass::TwoOdd,
            _ => TheoremClass::OutOfTheoremScope,
        };
        prop_assert_eq!(p.theorem_class, class);
        let text = orders.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(",");
        prop_assert_eq!(parse_forest(&text).unwrap(), f.clone());
        let mut sorted = f.orders().to_vec();
        sorted.sort_by(|a, b| b.cmp(a));
        prop_assert_eq!(f.orders(), &sorted[..]);
    }
}
