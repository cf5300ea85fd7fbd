//! Canonical labeling for isomorphism testing and deduplication.
//!
//! General graphs go through an individualization-refinement search: color
//! refinement splits vertices by neighbor counts per color class, the first
//! non-singleton class is branched on, and every discrete leaf yields a
//! labeling. The canonical labeling is the leaf whose graph6 bit string is
//! smallest. Candidates that are twins of an already-tried vertex are
//! skipped since swapping twins is an automorphism.
//!
//! Trees of any order use a rooted-tree encoding at a center instead.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest order accepted for non-tree graphs.
pub const MAX_GENERAL_ORDER: usize = 16;

/// graph6 encoding of a graph under its canonical labeling.
///
/// Two graphs have equal forms iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// The canonically labeled graph.
    pub fn graph(&self) -> Graph {
        graph6::decode(self.0.as_bytes()).expect("canonical forms are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let perm = canonical_labeling(g)?;
    Ok(CanonicalForm(graph6::encode(&g.relabel(&perm))))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    if g.is_tree() {
        return Ok(tree_labeling(g));
    }
    if g.order() > MAX_GENERAL_ORDER {
        return Err(Error::OrderTooLarge {
            order: g.order(),
            max: MAX_GENERAL_ORDER,
        });
    }
    let (_, perm) = search(&g.masks());
    Ok(perm)
}

/// Canonical adjacency bits of a graph given as neighbor masks (order at
/// most 16), packed with the first graph6 bit most significant.
///
/// Isomorphic inputs give equal codes; this is the form used to
/// deduplicate labeled enumerations.
pub(crate) fn canonical_code(masks: &[u64]) -> u128 {
    debug_assert!(masks.len() <= MAX_GENERAL_ORDER);
    search(masks).0
}

fn search(adj: &[u64]) -> (u128, Vec<usize>) {
    let n = adj.len();
    let mut state = Search {
        adj,
        best: None,
        scratch: Vec::with_capacity(n),
    };
    let mut colors = vec![0u8; n];
    let k = state.refine(&mut colors, usize::from(n > 0));
    state.descend(colors, k);
    let (code, order) = state.best.expect("search visits at least one leaf");
    (code, order.into_iter().map(usize::from).collect())
}

struct Search<'a> {
    adj: &'a [u64],
    best: Option<(u128, Vec<u8>)>,
    scratch: Vec<(u128, u8)>,
}

impl Search<'_> {
    /// Color refinement to the coarsest equitable partition finer than
    /// `colors`. Colors stay ranks `0..k`, ordered by an isomorphism
    /// invariant key. Returns the new number of colors.
    fn refine(&mut self, colors: &mut [u8], mut k: usize) -> usize {
        let n = colors.len();
        loop {
            if k == n {
                return k;
            }
            self.scratch.clear();
            for v in 0..n {
                let mut counts = 0u64;
                let mut rest = self.adj[v];
                while rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    counts += 1 << (60 - 4 * colors[w] as u32);
                    rest &= rest - 1;
                }
                let key = ((colors[v] as u128) << 64) | counts as u128;
                self.scratch.push((key, v as u8));
            }
            self.scratch.sort_unstable();
            let mut rank = 0u8;
            for i in 0..n {
                if i > 0 && self.scratch[i].0 != self.scratch[i - 1].0 {
                    rank += 1;
                }
                colors[self.scratch[i].1 as usize] = rank;
            }
            let next = rank as usize + 1;
            if next == k {
                return k;
            }
            k = next;
        }
    }

    fn descend(&mut self, colors: Vec<u8>, k: usize) {
        let n = colors.len();
        if k == n {
            self.leaf(&colors);
            return;
        }
        let mut sizes = [0u8; MAX_GENERAL_ORDER];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..k)
            .find(|&c| sizes[c] > 1)
            .expect("partition is not discrete") as u8;
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..n {
            if colors[v] != target {
                continue;
            }
            let bit_v = 1u64 << v;
            let twin = tried.iter().any(|&u| {
                let bit_u = 1u64 << u;
                self.adj[u] & !bit_v == self.adj[v] & !bit_u
            });
            if twin {
                continue;
            }
            tried.push(v);
            let mut child = colors.clone();
            for (w, c) in child.iter_mut().enumerate() {
                if *c > target || (*c == target && w != v) {
                    *c += 1;
                }
            }
            let k_child = self.refine(&mut child, k + 1);
            self.descend(child, k_child);
        }
    }

    fn leaf(&mut self, colors: &[u8]) {
        let n = colors.len();
        let mut order = vec![0u8; n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v as u8;
        }
        let mut code = 0u128;
        for j in 1..n {
            let row = self.adj[order[j] as usize];
            for &u in &order[..j] {
                code = (code << 1) | ((row >> u) & 1) as u128;
            }
        }
        if self.best.as_ref().is_none_or(|(best, _)| code < *best) {
            let perm = colors.to_vec();
            self.best = Some((code, perm));
        }
    }
}

/// Labeling of a tree: rooted at whichever center gives the smaller
/// rooted encoding, vertices numbered in preorder with children visited in
/// encoding order.
fn tree_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 1 {
        return vec![0];
    }
    let centers = tree_centers(g);
    let rooted: Vec<(Vec<u8>, usize)> = centers
        .iter()
        .map(|&c| (rooted_code(g, c, usize::MAX), c))
        .collect();
    let root = rooted.iter().min().expect("a tree has a center").1;
    let mut perm = vec![usize::MAX; n];
    let mut next = 0;
    preorder(g, root, usize::MAX, &mut perm, &mut next);
    perm
}

fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut degree = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in g.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

fn rooted_code(g: &Graph, v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(g, w, v))
        .collect();
    children.sort_unstable();
    let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
    code.push(b'(');
    children.iter().for_each(|c| code.extend_from_slice(c));
    code.push(b')');
    code
}

fn preorder(g: &Graph, v: usize, parent: usize, perm: &mut [usize], next: &mut usize) {
    perm[v] = *next;
    *next += 1;
    let mut children: Vec<(Vec<u8>, usize)> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| (rooted_code(g, w, v), w))
        .collect();
    children.sort_unstable();
    for (_, w) in children {
        preorder(g, w, v, perm, next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn relabeled_path() {
        let p4 = families::path(4).unwrap();
        let shuffled = p4.relabel(&[2, 0, 3, 1]);
        assert_eq!(
            canonical_form(&p4).unwrap(),
            canonical_form(&shuffled).unwrap()
        );
    }

    #[test]
    fn merged_star_is_spider() {
        let ss = families::merged_star(2, 1).unwrap();
        let sp = families::spider(&[2, 1, 1]).unwrap();
        assert_eq!(canonical_form(&ss).unwrap(), canonical_form(&sp).unwrap());
    }

    #[test]
    fn the_two_cubic_graphs_of_order_eight_differ() {
        let a = families::tilde_cycle(3).unwrap();
        let b = families::c8_plus_chords();
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn small_identities() {
        assert_eq!(
            canonical_form(&families::merged_star(1, 1).unwrap()).unwrap(),
            canonical_form(&families::path(4).unwrap()).unwrap()
        );
        assert_eq!(
            canonical_form(&families::subdivided_merged_star(1, 1).unwrap()).unwrap(),
            canonical_form(&families::path(5).unwrap()).unwrap()
        );
        assert_eq!(
            canonical_form(&families::tube(1, 5).unwrap()).unwrap(),
            canonical_form(&families::cycle(5).unwrap()).unwrap()
        );
    }

    #[test]
    fn non_isomorphic_same_degree_sequence() {
        // C6 versus two triangles
        let c6 = families::cycle(6).unwrap();
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic(&c6, &two_triangles).unwrap());
    }

    #[test]
    fn order_limit() {
        let big = families::cycle(17).unwrap();
        assert!(matches!(
            canonical_form(&big),
            Err(Error::OrderTooLarge { order: 17, max: 16 })
        ));
        // trees are exempt
        assert!(canonical_form(&families::path(30).unwrap()).is_ok());
    }

    #[test]
    fn idempotent() {
        for g in [
            families::kite(3).unwrap(),
            families::wheel(6).unwrap(),
            families::spider(&[3, 2, 1]).unwrap(),
            families::tube(3, 4).unwrap(),
        ] {
            let form = canonical_form(&g).unwrap();
            assert_eq!(canonical_form(&form.graph()).unwrap(), form);
        }
    }

    #[test]
    fn tiny_orders() {
        assert_eq!(canonical_form(&Graph::empty(0)).unwrap().as_str(), "?");
        assert_eq!(canonical_form(&Graph::empty(1)).unwrap().as_str(), "@");
        assert_eq!(canonical_form(&Graph::empty(3)).unwrap().as_str(), "B?");
    }
}
