//! AHU codes for free trees, plus small-order tree generators.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Center vertices of a tree (one or two), found by peeling leaves.
pub fn centers(t: &Graph) -> Result<Vec<usize>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let mut deg = t.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for u in t.neighbors(v).iter() {
                if deg[u] > 1 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    Ok(layer)
}

/// AHU code of `t` rooted at `root`: `(` + sorted child codes + `)`.
pub fn rooted_code(t: &Graph, root: usize) -> String {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for u in t.neighbors(v).iter() {
            if parent[u] == usize::MAX {
                parent[u] = v;
                order.push(u);
            }
        }
    }
    let mut child_codes: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut code = vec![String::new(); n];
    for &v in order.iter().rev() {
        let mut kids = core::mem::take(&mut child_codes[v]);
        kids.sort_unstable();
        let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        s.push('(');
        for k in &kids {
            s.push_str(k);
        }
        s.push(')');
        if v != root {
            child_codes[parent[v]].push(core::mem::take(&mut s));
        } else {
            code[v] = s;
        }
    }
    core::mem::take(&mut code[root])
}

/// Isomorphism-invariant code of a free tree: the AHU code rooted at the
/// center, taking the lexicographically smaller code for bicentral trees.
pub fn canonical_code(t: &Graph) -> Result<String> {
    let cs = centers(t)?;
    Ok(cs
        .iter()
        .map(|&c| rooted_code(t, c))
        .min()
        .unwrap_or_default())
}

/// Rebuilds a rooted tree from an AHU code; the root is vertex 0 and
/// vertices are numbered in preorder.
pub fn decode_code(code: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    let mut closed_root = false;
    for ch in code.chars() {
        if closed_root {
            return Err(Error::NotATree);
        }
        match ch {
            '(' => {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                }
                stack.push(next);
                next += 1;
            }
            ')' => {
                stack.pop().ok_or(Error::NotATree)?;
                closed_root = stack.is_empty();
            }
            _ => return Err(Error::NotATree),
        }
    }
    if !closed_root {
        return Err(Error::NotATree);
    }
    Graph::new(next, &edges)
}

/// Decodes a Prüfer sequence over `0..seq.len()+2` into a labeled tree.
pub fn prufer_decode(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::InvalidVertex {
            vertex: bad,
            order: n,
        });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges)
}

/// Every labeled tree on `n ≥ 2` vertices, via all `n^(n−2)` Prüfer
/// sequences in lexicographic order.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 2, "labeled trees are enumerated for n >= 2");
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut done = false;
    core::iter::from_fn(move || {
        if done {
            return None;
        }
        let g = prufer_decode(&seq).expect("sequence entries are in range");
        done = true;
        for i in (0..len).rev() {
            if seq[i] + 1 < n {
                seq[i] += 1;
                for x in &mut seq[i + 1..] {
                    *x = 0;
                }
                done = false;
                break;
            }
        }
        Some(g)
    })
}

/// One representative of every free tree of each order `1..=max_order`,
/// keyed by canonical code. Built by attaching a leaf to every vertex of
/// every tree of the previous order and deduplicating by code.
pub fn free_trees(max_order: usize) -> Vec<BTreeMap<String, Graph>> {
    let mut out: Vec<BTreeMap<String, Graph>> = vec![BTreeMap::new(); max_order + 1];
    if max_order == 0 {
        return out;
    }
    let k1 = Graph::empty(1);
    out[1].insert(canonical_code(&k1).expect("K1 is a tree"), k1);
    for order in 2..=max_order {
        let mut level = BTreeMap::new();
        for t in out[order - 1].values() {
            let grow = Graph::empty(1);
            let base = t.union(&grow);
            for v in 0..t.order() {
                let mut edges: Vec<(usize, usize)> = base.edges().collect();
                edges.push((v, order - 1));
                let g = Graph::new(order, &edges).expect("edges in range");
                let code = canonical_code(&g).expect("leaf extension of a tree is a tree");
                level.entry(code).or_insert(g);
            }
        }
        out[order] = level;
    }
    out
}
