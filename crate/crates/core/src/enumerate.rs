//! Streams of connected graphs: built-in exhaustive generation for small
//! orders, or ingestion of graph6 files.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::canon::canonical_code;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::Graph6Reader;

/// Largest order the built-in generator accepts.
pub const MAX_BUILTIN_ORDER: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    Generated { order: usize },
    Ingested(PathBuf),
    Reader,
}

/// Connected graphs from one source. Disconnected graphs in ingested input
/// are dropped and counted.
pub struct GraphStream {
    source: GraphSource,
    inner: Box<dyn Iterator<Item = Result<Graph>> + Send>,
    skipped_disconnected: usize,
}

impl GraphStream {
    /// Every connected graph of order `n` up to isomorphism, in canonical
    /// labeling, sorted by canonical code.
    pub fn builtin(n: usize) -> Result<Self> {
        let graphs = builtin_connected_graphs(n)?;
        Ok(GraphStream {
            source: GraphSource::Generated { order: n },
            inner: Box::new(graphs.into_iter().map(Ok)),
            skipped_disconnected: 0,
        })
    }

    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = File::open(path)?;
        let mut stream = Self::from_reader(BufReader::with_capacity(1 << 16, file));
        stream.source = GraphSource::Ingested(path.to_path_buf());
        Ok(stream)
    }

    pub fn from_reader<R: BufRead + Send + 'static>(reader: R) -> Self {
        GraphStream {
            source: GraphSource::Reader,
            inner: Box::new(Graph6Reader::new(reader)),
            skipped_disconnected: 0,
        }
    }

    pub fn source(&self) -> &GraphSource {
        &self.source
    }

    pub fn skipped_disconnected(&self) -> usize {
        self.skipped_disconnected
    }
}

impl Iterator for GraphStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        loop {
            match self.inner.next()? {
                Ok(g) if !g.is_connected() => self.skipped_disconnected += 1,
                other => return Some(other),
            }
        }
    }
}

/// Connected graphs of order `n`: generated when `input` is `None` (only
/// up to [`MAX_BUILTIN_ORDER`]), otherwise read from the graph6 file.
pub fn enumerate_connected_graphs(n: usize, input: Option<&Path>) -> Result<GraphStream> {
    match input {
        Some(path) => GraphStream::open(path),
        None => GraphStream::builtin(n),
    }
}

fn connected_masks(masks: &[u64]) -> bool {
    let n = masks.len();
    if n <= 1 {
        return true;
    }
    let all = (1u64 << n) - 1;
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut rest = frontier;
        while rest != 0 {
            next |= masks[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

fn code_to_graph(n: usize, code: u128) -> Graph {
    let bits = n * n.saturating_sub(1) / 2;
    let mut masks = vec![0u64; n];
    let mut pos = bits;
    for j in 1..n {
        for i in 0..j {
            pos -= 1;
            if (code >> pos) & 1 == 1 {
                masks[i] |= 1 << j;
                masks[j] |= 1 << i;
            }
        }
    }
    Graph::from_masks(&masks)
}

/// Scans all `2^C(n,2)` labeled graphs, keeps the connected ones and
/// deduplicates them by canonical code.
fn builtin_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_BUILTIN_ORDER {
        return Err(Error::bad_params(format!(
            "built-in generation covers orders 1..={MAX_BUILTIN_ORDER}; \
             order {n} needs a graph6 input file"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = 1u64 << pairs.len();
    let codes = (0..total)
        .into_par_iter()
        .filter(|&bits| bits.count_ones() as usize + 1 >= n)
        .fold(HashSet::new, |mut seen, bits| {
            let mut masks = [0u64; MAX_BUILTIN_ORDER];
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if (bits >> k) & 1 == 1 {
                    masks[i] |= 1 << j;
                    masks[j] |= 1 << i;
                }
            }
            if connected_masks(&masks[..n]) {
                seen.insert(canonical_code(&masks[..n]));
            }
            seen
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut codes: Vec<u128> = codes.into_iter().collect();
    codes.sort_unstable();
    Ok(codes.into_iter().map(|c| code_to_graph(n, c)).collect())
}
