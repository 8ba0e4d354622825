//! Small-graph corpus: canonical labelling by individualization and
//! refinement, and generation of every connected graph up to a given order.

use std::collections::BTreeSet;

use compfactor_core::Graph;

/// Orders above this are refused; adjacency rows are `u16` masks.
pub const MAX_CANON_ORDER: usize = 16;

/// Number of connected graphs on `n` unlabelled vertices, `n = 0..=10`.
pub const CONNECTED_COUNTS: [usize; 11] = [0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571];

fn rows(g: &Graph) -> Vec<u16> {
    assert!(
        g.order() <= MAX_CANON_ORDER,
        "canonical form supports n <= {MAX_CANON_ORDER}"
    );
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, u| m | 1 << u))
        .collect()
}

/// Refines an ordered partition (cells as vertex lists) until equitable.
fn refine(adj: &[u16], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    (
                        masks.iter().map(|&m| (adj[v] & m).count_ones()).collect(),
                        v,
                    )
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn encode(adj: &[u16], order: &[usize]) -> Vec<u16> {
    let mut pos = vec![0usize; adj.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            (0..adj.len())
                .filter(|&u| adj[v] >> u & 1 == 1)
                .fold(0u16, |m, u| m | 1 << pos[u])
        })
        .collect()
}

fn search(adj: &[u16], cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u16>, Vec<usize>)>) {
    let cells = refine(adj, cells);
    let Some(split) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let code = encode(adj, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    for i in 0..cells[split].len() {
        let mut next = cells.clone();
        let v = next[split].remove(i);
        next.insert(split, vec![v]);
        search(adj, next, best);
    }
}

/// A relabelling `perm` (vertex `v` becomes `perm[v]`) such that isomorphic
/// graphs map to identical labelled graphs.
pub fn canonical_labelling(g: &Graph) -> Vec<usize> {
    let adj = rows(g);
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best = None;
    search(&adj, vec![(0..n).collect()], &mut best);
    let (_, order) = best.expect("at least one leaf");
    let mut perm = vec![0; n];
    for (i, v) in order.into_iter().enumerate() {
        perm[v] = i;
    }
    perm
}

/// The canonical relabelling of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    g.permute(&canonical_labelling(g))
}

/// Every connected graph of order `1..=max_order`, one per isomorphism
/// class, grouped by order in ascending canonical graph6 order.
///
/// Each connected graph of order `n` has a non-cut vertex, so it arises
/// from a connected graph of order `n − 1` by adding a vertex with a
/// nonempty neighbourhood.
pub fn connected_graphs(max_order: usize) -> Vec<Vec<Graph>> {
    assert!(max_order <= MAX_CANON_ORDER);
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_order == 0 {
        return levels;
    }
    levels.push(vec![Graph::empty(1)]);
    for n in 2..=max_order {
        let mut seen = BTreeSet::new();
        for g in &levels[n - 2] {
            let base: Vec<(usize, usize)> = g.edges().collect();
            for mask in 1u32..1 << (n - 1) {
                let mut edges = base.clone();
                edges.extend(
                    (0..n - 1)
                        .filter(|&u| mask >> u & 1 == 1)
                        .map(|u| (u, n - 1)),
                );
                let h = Graph::new(n, &edges).expect("valid extension");
                seen.insert(crate::format::write_graph6(&canonical_form(&h)).expect("small order"));
            }
        }
        levels.push(
            seen.into_iter()
                .map(|s| crate::format::parse_graph6(&s).expect("round trip"))
                .collect(),
        );
    }
    levels
}
