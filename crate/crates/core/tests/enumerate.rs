use std::io::Cursor;

use linforest_core::build::{complete, cycle};
use linforest_core::canon::canonical_graph6;
use linforest_core::enumerate::{
    enumerate_graphs, ingest_graph6_stream, Connectivity, EnumFilter, IngestError, IngestOptions,
};
use linforest_core::{are_isomorphic, parse_graph6, Graph};

fn count(n: usize, min_degree: usize, connectivity: Connectivity) -> usize {
    enumerate_graphs(EnumFilter::new(n, min_degree, connectivity)).unwrap().count()
}

#[test]
fn small_censuses() {
    assert_eq!(count(4, 0, Connectivity::Connected), 6);
    assert_eq!(count(6, 0, Connectivity::Connected), 112);
    let all: Vec<usize> = (1..=7).map(|n| count(n, 0, Connectivity::Any)).collect();
    assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
    let two_connected: Vec<usize> = (3..=7).map(|n| count(n, 0, Connectivity::TwoConnected)).collect();
    assert_eq!(two_connected, vec![1, 3, 10, 56, 468]);
}

#[test]
fn min_degree_filter() {
    let graphs: Vec<Graph> = enumerate_graphs(EnumFilter::new(4, 2, Connectivity::Connected)).unwrap().collect();
    assert_eq!(graphs.len(), 3);
    let diamond = complete(4).unwrap().without_edge(0, 1).unwrap();
    for target in [cycle(4).unwrap(), diamond, complete(4).unwrap()] {
        assert_eq!(graphs.iter().filter(|g| are_isomorphic(g, &target)).count(), 1);
    }
}

#[test]
fn cut_vertex_and_two_connected_split_the_connected_graphs() {
    for n in 3..=7 {
        let connected = count(n, 0, Connectivity::Connected);
        assert_eq!(count(n, 0, Connectivity::TwoConnected) + count(n, 0, Connectivity::HasCutVertex), connected);
    }
}

#[test]
fn enumeration_is_deterministic_and_duplicate_free() {
    let first: Vec<String> =
        enumerate_graphs(EnumFilter::new(6, 1, Connectivity::Any)).unwrap().map(|g| g.to_graph6()).collect();
    let second: Vec<String> =
        enumerate_graphs(EnumFilter::new(6, 1, Connectivity::Any)).unwrap().map(|g| g.to_graph6()).collect();
    assert_eq!(first, second);
    let mut canon: Vec<String> = first.iter().map(|s| canonical_graph6(&parse_graph6(s).unwrap())).collect();
    canon.sort();
    canon.dedup();
    assert_eq!(canon.len(), first.len());
}

#[test]
fn order_cap_is_enforced() {
    assert!(enumerate_graphs(EnumFilter::new(12, 0, Connectivity::Any)).is_err());
}

#[test]
fn ingest_reads_lines_in_order() {
    let graphs: Vec<Graph> = ingest_graph6_stream(Cursor::new("C~\n@\n"), IngestOptions::default()).collect();
    assert_eq!(graphs, vec![complete(4).unwrap(), Graph::empty(1).unwrap()]);
}

#[test]
fn ingest_dedup_and_filters() {
    let opts = IngestOptions { dedup: true, ..Default::default() };
    assert_eq!(ingest_graph6_stream(Cursor::new("C~\nC~\n"), opts).count(), 1);
    // P4 twice under different labelings.
    let opts = IngestOptions { dedup: true, ..Default::default() };
    assert_eq!(ingest_graph6_stream(Cursor::new("Ch\nCU\n"), opts).count(), 1);
    let opts = IngestOptions { min_degree: 2, ..Default::default() };
    assert_eq!(ingest_graph6_stream(Cursor::new("C~\nCh\n"), opts).count(), 1);
    let opts = IngestOptions { order: Some(1), ..Default::default() };
    assert_eq!(ingest_graph6_stream(Cursor::new("C~\n@\n"), opts).count(), 1);
}

#[test]
fn ingest_empty_input() {
    let mut stream = ingest_graph6_stream(Cursor::new(""), IngestOptions::default());
    assert!(stream.next().is_none());
    assert!(stream.errors().is_empty());
}

#[test]
fn ingest_collects_malformed_lines() {
    let mut stream = ingest_graph6_stream(Cursor::new("C~\nC\n\n@\n"), IngestOptions::default());
    let graphs: Vec<Graph> = stream.by_ref().collect();
    assert_eq!(graphs.len(), 2);
    assert!(matches!(stream.errors(), [IngestError::Parse { line: 2, .. }]), "{:?}", stream.errors());
}
