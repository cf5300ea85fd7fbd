//! Generators for the named graph families.
//!
//! Every generator fixes its labeling so that output is reproducible:
//!
//! * paths are labeled along the path, cycles cyclically;
//! * stars, wheels and spiders put the center at `0`;
//! * complete multipartite graphs place parts in descending-size blocks;
//! * products use row-major pairs, `(a, b) -> a * |H| + b`.

mod descriptor;
pub mod formulas;

pub use descriptor::{FamilyDescriptor, GluedMode};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn graph(order: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(order, edges).expect("generator produced an invalid edge list")
}

/// The star `S_n = K_{n,1}`: center `0`, leaves `1..=n`.
pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::bad_params("star needs n >= 1"));
    }
    Ok(graph(n + 1, (1..=n).map(|v| (0, v)).collect()))
}

/// The wheel `W_n`: hub `0` joined to the rim cycle `1..=n`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::bad_params("wheel needs n >= 3"));
    }
    let mut edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
    edges.extend((1..=n).map(|v| (v, v % n + 1)));
    Ok(graph(n + 1, edges))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::bad_params("path needs n >= 1"));
    }
    Ok(graph(n, (1..n).map(|i| (i - 1, i)).collect()))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::bad_params("cycle needs n >= 3"));
    }
    Ok(graph(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::bad_params("complete graph needs n >= 1"));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(graph(n, edges))
}

/// Complete multipartite graph; parts are sorted descending first.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(Error::bad_params(
            "multipartite needs at least two parts, each of size >= 1",
        ));
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut block = Vec::with_capacity(sorted.iter().sum());
    for (i, &size) in sorted.iter().enumerate() {
        block.extend(std::iter::repeat_n(i, size));
    }
    let n = block.len();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| block[u] != block[v])
        .collect();
    Ok(graph(n, edges))
}

fn check_star_pair(n: usize, m: usize) -> Result<()> {
    if n < m || m < 1 {
        return Err(Error::bad_params(format!(
            "merged stars need n >= m >= 1 (got n={n}, m={m})"
        )));
    }
    Ok(())
}

/// Merged star `SS(n, m)`: centers `0` (with `n` leaves) and `1` (with `m`
/// leaves) joined by an edge. Leaves of `0` come first.
pub fn merged_star(n: usize, m: usize) -> Result<Graph> {
    check_star_pair(n, m)?;
    let mut edges = vec![(0, 1)];
    edges.extend((0..n).map(|i| (0, 2 + i)));
    edges.extend((0..m).map(|i| (1, 2 + n + i)));
    Ok(graph(n + m + 2, edges))
}

/// Subdivided merged star `SSx(n, m)`: centers `0` and `1` joined through
/// `2`, leaves from `3` on.
///
/// `(0, 0)` is accepted as the degenerate member, the path on three
/// vertices.
pub fn subdivided_merged_star(n: usize, m: usize) -> Result<Graph> {
    if (n, m) != (0, 0) {
        check_star_pair(n, m)?;
    }
    let mut edges = vec![(0, 2), (1, 2)];
    edges.extend((0..n).map(|i| (0, 3 + i)));
    edges.extend((0..m).map(|i| (1, 3 + n + i)));
    Ok(graph(n + m + 3, edges))
}

/// Spider `Sp(legs)`: center `0`, each leg a path hanging off it.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.len() < 3 || legs.contains(&0) || legs.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::bad_params(
            "spider needs at least three positive legs in descending order",
        ));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        edges.push((0, next));
        for i in 1..len {
            edges.push((next + i - 1, next + i));
        }
        next += len;
    }
    Ok(graph(next, edges))
}

/// Cartesian product; vertex `(a, b)` is labeled `a * |h| + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.order(), h.order());
    let mut edges = Vec::with_capacity(g.size() * nh + h.size() * ng);
    for a in 0..ng {
        for (b, b2) in h.edges() {
            edges.push((a * nh + b, a * nh + b2));
        }
    }
    for (a, a2) in g.edges() {
        for b in 0..nh {
            edges.push((a * nh + b, a2 * nh + b));
        }
    }
    graph(ng * nh, edges)
}

/// The tube `P_n □ C_m`.
pub fn tube(n: usize, m: usize) -> Result<Graph> {
    Ok(cartesian_product(&path(n)?, &cycle(m)?))
}

/// Kite graph `Ki(n)`: `a_i = i`, `b_i = n + i`, `c_i = 2n + i`, where
/// `b_i` and `c_i` are adjacent to each other and to `a_i`, `a_{i+1}`.
pub fn kite(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::bad_params("kite graph needs n >= 2"));
    }
    let mut edges = Vec::with_capacity(5 * n);
    for i in 0..n {
        let (a, a_next, b, c) = (i, (i + 1) % n, n + i, 2 * n + i);
        edges.extend([(b, c), (a, b), (a, c), (a_next, b), (a_next, c)]);
    }
    Ok(graph(3 * n, edges))
}

/// `C̃_2n`: the cycle `0..2n` plus `x = 2n` adjacent to `-1, 0, 1` and
/// `y = 2n + 1` adjacent to `n - 1, n, n + 1`.
pub fn tilde_cycle(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::bad_params("tilde cycle needs n >= 2"));
    }
    let len = 2 * n;
    let (x, y) = (len, len + 1);
    let mut edges: Vec<_> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    edges.extend([(x, len - 1), (x, 0), (x, 1)]);
    edges.extend([(y, n - 1), (y, n), (y, n + 1)]);
    Ok(graph(len + 2, edges))
}

/// The cubic graph on the 8-cycle with chords `{0,4}, {1,3}, {2,6}, {5,7}`.
pub fn c8_plus_chords() -> Graph {
    let mut edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.extend([(0, 4), (1, 3), (2, 6), (5, 7)]);
    graph(8, edges)
}

/// Two copies of a regular base graph glued at a deleted edge `xy`.
///
/// The base occupies `0..k` and its copy `k..2k`. In
/// [`GluedMode::OddQuartic`] the base must be connected and 4-regular; a
/// new vertex `2k` is joined to `x, y, x', y'`. In [`GluedMode::EvenCubic`]
/// the base must be connected and cubic; `z = 2k` is joined to `x, y`,
/// `w = 2k + 1` to `x', y'`, and `z ~ w`.
pub fn glued_double(base: &Graph, x: usize, y: usize, mode: GluedMode) -> Result<Graph> {
    let valence = match mode {
        GluedMode::OddQuartic => 4,
        GluedMode::EvenCubic => 3,
    };
    if base.regular_degree() != Some(valence) || !base.is_connected() {
        return Err(Error::bad_params(format!(
            "glued double ({mode}) needs a connected {valence}-regular base"
        )));
    }
    if !base.has_edge(x, y) {
        return Err(Error::bad_params(format!("{x} and {y} are not adjacent")));
    }
    let k = base.order();
    let removed = (x.min(y), x.max(y));
    let mut edges = Vec::with_capacity(2 * base.size() + 5);
    for (u, v) in base.edges().filter(|&e| e != removed) {
        edges.push((u, v));
        edges.push((u + k, v + k));
    }
    let order = match mode {
        GluedMode::OddQuartic => {
            let z = 2 * k;
            edges.extend([(z, x), (z, y), (z, x + k), (z, y + k)]);
            2 * k + 1
        }
        GluedMode::EvenCubic => {
            let (z, w) = (2 * k, 2 * k + 1);
            edges.extend([(z, x), (z, y), (w, x + k), (w, y + k), (z, w)]);
            2 * k + 2
        }
    };
    Ok(graph(order, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::distance_unbalancedness;

    fn degree_multiset(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn basic_orders() {
        assert_eq!(star(3).unwrap().order(), 4);
        let w = wheel(5).unwrap();
        assert_eq!((w.order(), w.degree(0)), (6, 5));
        let k = complete_multipartite(&[3, 2, 1]).unwrap();
        assert_eq!((k.order(), k.size()), (6, 11));
    }

    #[test]
    fn bad_params() {
        assert!(star(0).is_err());
        assert!(wheel(2).is_err());
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(complete_multipartite(&[3]).is_err());
        assert!(complete_multipartite(&[3, 0]).is_err());
        assert!(merged_star(1, 2).is_err());
        assert!(merged_star(1, 0).is_err());
        assert!(subdivided_merged_star(0, 1).is_err());
        assert!(spider(&[1, 1]).is_err());
        assert!(spider(&[1, 2, 1]).is_err());
        assert!(kite(1).is_err());
        assert!(tilde_cycle(1).is_err());
    }

    #[test]
    fn family_orders() {
        for n in 1..6 {
            for m in 1..=n {
                assert_eq!(merged_star(n, m).unwrap().order(), n + m + 2);
                assert_eq!(subdivided_merged_star(n, m).unwrap().order(), n + m + 3);
            }
        }
        assert!(
            crate::is_isomorphic(&subdivided_merged_star(0, 0).unwrap(), &path(3).unwrap())
                .unwrap()
        );
        assert_eq!(spider(&[4, 3, 3, 2, 2]).unwrap().order(), 15);
        assert_eq!(spider(&[2, 1, 1]).unwrap().order(), 5);
        assert!(crate::is_isomorphic(&spider(&[1, 1, 1]).unwrap(), &star(3).unwrap()).unwrap());
    }

    #[test]
    fn spider_shape() {
        let g = spider(&[3, 2, 2, 1]).unwrap();
        assert_eq!(g.degree(0), 4);
        assert!((1..g.order()).all(|v| g.degree(v) <= 2));
        assert!(g.is_tree());
    }

    #[test]
    fn products() {
        let p3c3 = tube(3, 3).unwrap();
        assert_eq!((p3c3.order(), p3c3.size()), (9, 15));
        let p1c5 = tube(1, 5).unwrap();
        assert_eq!(p1c5, cycle(5).unwrap());
        let torus = cartesian_product(&cycle(4).unwrap(), &cycle(6).unwrap());
        assert_eq!(distance_unbalancedness(&torus).unwrap(), 0);
    }

    #[test]
    fn kite_valences() {
        for n in 2..9 {
            let g = kite(n).unwrap();
            assert_eq!(g.order(), 3 * n);
            assert!((0..n).all(|a| g.degree(a) == 4));
            assert!((n..3 * n).all(|v| g.degree(v) == 3));
        }
    }

    #[test]
    fn tilde_cycle_valences() {
        for n in 2..12 {
            let g = tilde_cycle(n).unwrap();
            let len = 2 * n;
            assert_eq!(g.order(), len + 2);
            let mut expected = vec![2; len];
            for v in [len - 1, 0, 1, n - 1, n, n + 1] {
                expected[v] += 1;
            }
            expected.extend([3, 3]);
            assert_eq!(g.degrees(), expected, "n = {n}");
        }
        assert_eq!(tilde_cycle(3).unwrap().regular_degree(), Some(3));
        assert_eq!(tilde_cycle(4).unwrap().regular_degree(), None);
    }

    #[test]
    fn c8_chords_is_cubic() {
        let g = c8_plus_chords();
        assert_eq!(g.order(), 8);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(distance_unbalancedness(&g).unwrap(), 8);
    }

    #[test]
    fn glued_double_quartic_k5() {
        let k5 = complete(5).unwrap();
        let g = glued_double(&k5, 0, 1, GluedMode::OddQuartic).unwrap();
        assert_eq!(g.order(), 11);
        assert_eq!(g.regular_degree(), Some(4));
        assert!(g.is_connected());
        let pb = g.pair_balance(10, 0).unwrap();
        assert!(pb.closer_to_u >= 7);
        assert!(!pb.is_balanced());
        assert!(distance_unbalancedness(&g).unwrap() > 0);
        assert_eq!(degree_multiset(&g), vec![4; 11]);
    }

    #[test]
    fn glued_double_cubic_k4() {
        let k4 = complete(4).unwrap();
        let g = glued_double(&k4, 0, 1, GluedMode::EvenCubic).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.regular_degree(), Some(3));
        assert!(distance_unbalancedness(&g).unwrap() > 0);
    }

    #[test]
    fn glued_double_validates() {
        let k5 = complete(5).unwrap();
        assert!(glued_double(&k5, 0, 1, GluedMode::EvenCubic).is_err());
        let c8 = c8_plus_chords();
        assert!(glued_double(&c8, 0, 2, GluedMode::EvenCubic).is_err());
        assert!(glued_double(&c8, 0, 1, GluedMode::EvenCubic).is_ok());
    }
}
