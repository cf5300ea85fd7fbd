//! Free trees, one per isomorphism class, from canonical level sequences.
//!
//! A rooted tree is stored as the depths of its vertices in preorder. The
//! successor step of the rooted-tree generator copies a suffix pattern; the
//! free-tree filter keeps only sequences rooted at a center with the
//! leftmost root subtree no larger than the rest, and jumps ahead when the
//! condition fails so that each class is produced once.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Generous upper bound on supported orders.
pub const MAX_TREE_ORDER: usize = 24;

/// Iterator over all free trees of a fixed order.
#[derive(Clone, Debug)]
pub struct FreeTrees {
    order: usize,
    layout: Option<Vec<usize>>,
    small: Option<Graph>,
}

impl FreeTrees {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 || order > MAX_TREE_ORDER {
            return Err(Error::bad_params(format!(
                "tree order must lie in 1..={MAX_TREE_ORDER}, got {order}"
            )));
        }
        if order <= 2 {
            let g = Graph::from_edges(order, (order == 2).then_some((0, 1)))?;
            return Ok(FreeTrees {
                order,
                layout: None,
                small: Some(g),
            });
        }
        // path rooted at its center
        let mut layout: Vec<usize> = (0..=order / 2).collect();
        layout.extend(1..order.div_ceil(2));
        Ok(FreeTrees {
            order,
            layout: Some(layout),
            small: None,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if let Some(g) = self.small.take() {
            return Some(g);
        }
        let current = next_free(self.layout.take()?)?;
        self.layout = next_rooted(&current, None);
        Some(layout_to_graph(&current))
    }
}

/// All free trees of order `n`, each isomorphism class once.
pub fn enumerate_trees(n: usize) -> Result<FreeTrees> {
    FreeTrees::new(n)
}

/// Successor in the rooted level-sequence order, optionally restarting the
/// copy at position `p`.
fn next_rooted(layout: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    let mut result = layout.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// Splits off the leftmost subtree of the root: returns its depths
/// (re-rooted) and the remaining tree.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &d)| d == 1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|d| d - 1).collect();
    let mut rest = Vec::with_capacity(layout.len() - m + 1);
    rest.push(0);
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// Advances `candidate` to the next level sequence that is the canonical
/// representative of a free tree.
fn next_free(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    loop {
        let (left, rest) = split(&candidate);
        let left_height = *left.iter().max()?;
        let rest_height = *rest.iter().max()?;
        let mut valid = rest_height >= left_height;
        if valid
            && rest_height == left_height
            && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
        {
            valid = false;
        }
        if valid {
            return Some(candidate);
        }
        let p = left.len();
        let jumped = candidate[p] > 2;
        let mut next = next_rooted(&candidate, Some(p))?;
        if jumped {
            let (new_left, _) = split(&next);
            let height = new_left.iter().max().copied().unwrap_or(0);
            let len = next.len();
            for (offset, depth) in (1..=height + 1).enumerate() {
                next[len - (height + 1) + offset] = depth;
            }
        }
        candidate = next;
    }
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut last_at_depth = vec![0usize; layout.len()];
    let mut edges = Vec::with_capacity(layout.len() - 1);
    for (v, &depth) in layout.iter().enumerate() {
        if depth > 0 {
            edges.push((last_at_depth[depth - 1], v));
        }
        last_at_depth[depth] = v;
    }
    Graph::from_edges(layout.len(), edges).expect("level sequence yields a tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Number of free trees of order `n` for `n = 1..=20`.
    const FREE_TREE_COUNTS: [usize; 20] = [
        1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867,
        317955, 823065,
    ];

    #[test]
    fn counts_through_order_sixteen() {
        for n in 1..=16 {
            let trees: Vec<Graph> = enumerate_trees(n).unwrap().collect();
            assert_eq!(trees.len(), FREE_TREE_COUNTS[n - 1], "order {n}");
            assert!(trees.iter().all(|t| t.order() == n && t.is_tree()));
        }
    }

    #[test]
    fn order_one_and_two() {
        assert_eq!(
            enumerate_trees(1).unwrap().collect::<Vec<_>>(),
            vec![Graph::empty(1)]
        );
        assert_eq!(enumerate_trees(2).unwrap().count(), 1);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(MAX_TREE_ORDER + 1).is_err());
    }
}
