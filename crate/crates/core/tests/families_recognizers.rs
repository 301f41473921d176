use linforest_core::build::{complete, cycle};
use linforest_core::enumerate::{enumerate_graphs, Connectivity, EnumFilter};
use linforest_core::families::{family_size_formulas, instances_with_order};
use linforest_core::oracle::{brute_isomorphic, brute_monomorphic, brute_vertex_cover};
use linforest_core::recognize::{is_vertex_cover, recognize_exception, vertex_cover_at_most, Relation};
use linforest_core::{assemble, generate_family, Assemble, FamilyKind, FamilySpec, Graph};

fn c2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

fn size(spec: FamilySpec) -> (usize, usize) {
    let g = generate_family(&spec).unwrap();
    (g.order(), g.edge_count())
}

#[test]
fn generator_examples() {
    assert_eq!(size(FamilySpec::S { n: 7, h: 2 }), (7, 11));
    assert_eq!(size(FamilySpec::Splus { n: 7, h: 2 }), (7, 12));
    assert_eq!(size(FamilySpec::U3 { h: 1 }), (6, 6));
    assert_eq!(size(FamilySpec::Tglue { t1: 1, t2: 1, h: 2 }), (12, 17));
    assert_eq!(size(FamilySpec::Hnla { n: 7, l: 6, a: 2 }), (7, 12));
    let net = generate_family(&FamilySpec::U3 { h: 1 }).unwrap();
    assert_eq!(net.degrees().iter().filter(|&&d| d == 1).count(), 3);
}

#[test]
fn size_formula_examples() {
    assert_eq!(family_size_formulas(&FamilySpec::Hnla { n: 7, l: 6, a: 2 }).unwrap(), (7, 12));
    assert_eq!(family_size_formulas(&FamilySpec::L { t: 3, h: 2 }).unwrap(), (7, 9));
    assert_eq!(family_size_formulas(&FamilySpec::S { n: 4, h: 4 }).unwrap(), (4, 6));
    assert_eq!(size(FamilySpec::S { n: 4, h: 4 }), (4, 6));
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(generate_family(&FamilySpec::S { n: 3, h: 4 }).is_err());
    assert!(generate_family(&FamilySpec::K2match { n: 7 }).is_err());
    assert!(generate_family(&FamilySpec::K3match { n: 8 }).is_err());
    assert!(generate_family(&FamilySpec::H2 { n: 7 }).is_err());
    assert!(generate_family(&FamilySpec::L { t: 0, h: 2 }).is_err());
}

/// Edge counts worked out by hand from each construction, independent of
/// the library's closed forms.
#[test]
fn hand_counted_sizes() {
    for h in 1..=4 {
        for n in h..=14 {
            assert_eq!(size(FamilySpec::S { n, h }), (n, c2(h) + h * (n - h)));
            if n >= h + 2 {
                assert_eq!(size(FamilySpec::Splus { n, h }), (n, c2(h) + h * (n - h) + 1));
            }
        }
        for t in 1..=4 {
            assert_eq!(size(FamilySpec::L { t, h }), (t * h + 1, t * c2(h + 1)));
        }
    }
    for n in (4..=14).step_by(2) {
        assert_eq!(size(FamilySpec::K2match { n }), (n, 1 + 2 * (n - 2) + (n - 2) / 2));
    }
    for n in (5..=15).step_by(2) {
        assert_eq!(size(FamilySpec::K3match { n }), (n, 3 + 3 * (n - 3) + (n - 3) / 2));
    }
}

#[test]
fn generated_members_match_closed_forms() {
    for kind in FamilyKind::ALL {
        for h in 1..=3 {
            for n in 1..=16 {
                for spec in instances_with_order(kind, n, h) {
                    let g = spec.generate().unwrap();
                    assert_eq!(
                        (g.order(), g.edge_count(), g.min_degree()),
                        (spec.order(), spec.edge_count(), spec.min_degree()),
                        "{spec}"
                    );
                    assert_eq!(spec.kind(), kind);
                    let m = recognize_exception(&g, kind, h).unwrap_or_else(|| panic!("{spec} not recognized"));
                    m.verify(&g).unwrap();
                }
            }
        }
    }
}

#[test]
fn vertex_covers() {
    let c4 = cycle(4).unwrap();
    let cover = vertex_cover_at_most(&c4, 2).unwrap();
    assert_eq!(cover.count_ones(), 2);
    assert!(is_vertex_cover(&c4, cover));
    assert!(cover == 0b0101 || cover == 0b1010);
    assert_eq!(vertex_cover_at_most(&cycle(5).unwrap(), 2), None);
    assert_eq!(vertex_cover_at_most(&Graph::empty(4).unwrap(), 0), Some(0));
    for g in enumerate_graphs(EnumFilter::new(6, 0, Connectivity::Any)).unwrap() {
        for h in 0..=4 {
            let fast = vertex_cover_at_most(&g, h);
            assert_eq!(fast.is_some(), brute_vertex_cover(&g, h), "{} h={h}", g.to_graph6());
            if let Some(c) = fast {
                assert!(c.count_ones() as usize <= h && is_vertex_cover(&g, c));
            }
        }
    }
}

#[test]
fn recognizer_examples() {
    let star = assemble(Assemble::Join(complete(1).unwrap(), Graph::empty(5).unwrap())).unwrap();
    let m = recognize_exception(&star, FamilyKind::S, 1).unwrap();
    assert_eq!(m.witness, vec![0]);
    m.verify(&star).unwrap();

    let c5 = cycle(5).unwrap();
    recognize_exception(&c5, FamilyKind::Splus, 2).unwrap().verify(&c5).unwrap();

    let bowtie = generate_family(&FamilySpec::L { t: 2, h: 2 }).unwrap();
    let m = recognize_exception(&bowtie, FamilyKind::L, 2).unwrap();
    assert_eq!(m.spec, FamilySpec::L { t: 2, h: 2 });

    let c6 = cycle(6).unwrap();
    let m = recognize_exception(&c6, FamilyKind::K2match, 0).unwrap();
    m.verify(&c6).unwrap();
    let pair = &m.witness;
    assert_eq!(pair.len(), 2);
    assert_eq!((pair[0] + 3) % 6, pair[1] % 6, "witness {pair:?} is not antipodal");

    assert!(recognize_exception(&c6, FamilyKind::S, 2).is_none());
}

fn oracle_member(g: &Graph, kind: FamilyKind, h: usize) -> bool {
    instances_with_order(kind, g.order(), h).iter().any(|spec| {
        let member = spec.generate().unwrap();
        match kind.relation() {
            Relation::Isomorphic => brute_isomorphic(g, &member),
            Relation::Subgraph => brute_monomorphic(g, &member),
        }
    })
}

#[test]
fn recognizers_agree_with_brute_force_up_to_six() {
    for n in 1..=6 {
        let graphs: Vec<Graph> = enumerate_graphs(EnumFilter::new(n, 0, Connectivity::Any)).unwrap().collect();
        for kind in FamilyKind::ALL {
            for h in 0..=3 {
                for g in &graphs {
                    let fast = recognize_exception(g, kind, h);
                    assert_eq!(fast.is_some(), oracle_member(g, kind, h), "{kind:?} h={h} on {}", g.to_graph6());
                    if let Some(m) = fast {
                        m.verify(g).unwrap();
                    }
                }
            }
        }
    }
}
