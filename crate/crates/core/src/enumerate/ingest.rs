use std::collections::HashSet;
use std::io::BufRead;

use thiserror::Error;

use crate::canon::canonical_label;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, Graph6Error};

use super::Connectivity;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error("read error after line {line}: {source}")]
    Io { line: usize, source: std::io::Error },
}

/// Optional processing applied while reading.
#[derive(Debug, Clone, Default)]
pub struct IngestOptions {
    /// Drop graphs isomorphic to one already seen.
    pub dedup: bool,
    pub order: Option<usize>,
    pub min_degree: usize,
    pub connectivity: Connectivity,
}

/// Streams graphs from graph6 lines. Malformed lines are collected in
/// [`Graph6Stream::errors`] and skipped; an I/O error ends the stream.
pub struct Graph6Stream<R> {
    reader: R,
    options: IngestOptions,
    line: usize,
    seen: HashSet<Vec<u8>>,
    errors: Vec<IngestError>,
    done: bool,
    buf: String,
}

pub fn ingest_graph6_stream<R: BufRead>(reader: R, options: IngestOptions) -> Graph6Stream<R> {
    Graph6Stream { reader, options, line: 0, seen: HashSet::new(), errors: Vec::new(), done: false, buf: String::new() }
}

impl<R> Graph6Stream<R> {
    pub fn errors(&self) -> &[IngestError] {
        &self.errors
    }

    pub fn into_errors(self) -> Vec<IngestError> {
        self.errors
    }

    fn admits(&self, g: &Graph) -> bool {
        self.options.order.map_or(true, |n| g.order() == n)
            && g.min_degree() >= self.options.min_degree
            && self.options.connectivity.admits(g)
    }
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while !self.done {
            self.buf.clear();
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => self.done = true,
                Ok(_) => {
                    self.line += 1;
                    let text = self.buf.trim();
                    if text.is_empty() {
                        continue;
                    }
                    match parse_graph6(text) {
                        Ok(g) => {
                            if !self.admits(&g) {
                                continue;
                            }
                            if self.options.dedup && !self.seen.insert(canonical_label(&g)) {
                                continue;
                            }
                            return Some(g);
                        }
                        Err(source) => self.errors.push(IngestError::Parse { line: self.line, source }),
                    }
                }
                Err(source) => {
                    self.errors.push(IngestError::Io { line: self.line, source });
                    self.done = true;
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_and_reports() {
        let data = "C~\n@\nbad line\n\nC~\n";
        let mut s = ingest_graph6_stream(data.as_bytes(), IngestOptions { dedup: true, ..Default::default() });
        let graphs: Vec<Graph> = s.by_ref().collect();
        assert_eq!(graphs.iter().map(Graph::order).collect::<Vec<_>>(), vec![4, 1]);
        assert_eq!(s.errors().len(), 1);
        assert!(matches!(s.errors()[0], IngestError::Parse { line: 3, .. }));
    }

    #[test]
    fn empty_input() {
        assert_eq!(ingest_graph6_stream("".as_bytes(), IngestOptions::default()).count(), 0);
    }
}
