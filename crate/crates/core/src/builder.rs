//! Explicit factor certificates, found by backtracking and checked
//! independently of the search.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{CertificateError, Error, Result};
use crate::factor::Limits;
use crate::graph::{Graph, VertexSet};
use crate::tree::{canonical_code, TreeCatalog};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    /// `K_{1,j}` with `1 ≤ j ≤ k`.
    Star(usize),
    /// A tree-family member, by canonical code.
    Member(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub kind: BlockKind,
    pub vertices: VertexSet,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FactorCertificate {
    pub blocks: Vec<Block>,
}

impl FactorCertificate {
    /// Relabels every vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| Block {
                kind: b.kind.clone(),
                vertices: b.vertices.iter().map(|v| perm[v]).collect(),
                edges: b.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
            })
            .collect();
        Self { blocks }
    }

    /// Block kinds, sorted; equal for isomorphic certificates.
    pub fn kind_profile(&self) -> Vec<BlockKind> {
        let mut kinds: Vec<BlockKind> = self.blocks.iter().map(|b| b.kind.clone()).collect();
        kinds.sort();
        kinds
    }
}

fn edge_list_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut uf = UnionFind::new(n);
    let mut parts = n;
    for &(u, v) in edges {
        if uf.union(u, v) {
            parts -= 1;
        }
    }
    parts <= 1
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Every spanning tree of a connected graph, each exactly once, by edge
/// inclusion/exclusion. An edge is included only if it joins two partial
/// components and excluded only if the remaining edges still connect the
/// graph, so every branch ends in a spanning tree.
pub struct SpanningTrees {
    n: usize,
    edges: Vec<(usize, usize)>,
    stack: Vec<(usize, Vec<usize>)>,
}

impl Iterator for SpanningTrees {
    type Item = Vec<(usize, usize)>;

    fn next(&mut self) -> Option<Self::Item> {
        while let Some((idx, chosen)) = self.stack.pop() {
            if chosen.len() + 1 == self.n {
                return Some(chosen.iter().map(|&i| self.edges[i]).collect());
            }
            if idx == self.edges.len() {
                continue;
            }
            let mut kept: Vec<(usize, usize)> = chosen.iter().map(|&i| self.edges[i]).collect();
            kept.extend_from_slice(&self.edges[idx + 1..]);
            if edge_list_connected(self.n, &kept) {
                self.stack.push((idx + 1, chosen.clone()));
            }
            let mut uf = UnionFind::new(self.n);
            for &i in &chosen {
                uf.union(self.edges[i].0, self.edges[i].1);
            }
            let (u, v) = self.edges[idx];
            if uf.find(u) != uf.find(v) {
                let mut with = chosen;
                with.push(idx);
                self.stack.push((idx + 1, with));
            }
        }
        None
    }
}

pub fn spanning_trees(g: &Graph) -> Result<SpanningTrees> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(SpanningTrees {
        n: g.order(),
        edges: g.edges().collect(),
        stack: vec![(0, Vec::new())],
    })
}

/// Connected vertex sets inside `allowed` that contain `root`, of at most
/// `max_size` vertices, each produced once.
fn connected_sets(adj: &[u64], root: usize, allowed: u64, max_size: u32) -> Vec<u64> {
    fn grow(
        adj: &[u64],
        allowed: u64,
        max_size: u32,
        set: u64,
        ext: u64,
        banned: u64,
        out: &mut Vec<u64>,
    ) {
        out.push(set);
        if set.count_ones() == max_size {
            return;
        }
        let mut ext = ext;
        let mut banned = banned;
        while ext != 0 {
            let u = ext.trailing_zeros() as usize;
            let bit = 1u64 << u;
            ext &= !bit;
            let next_set = set | bit;
            let next_ext = (ext | (adj[u] & allowed)) & !next_set & !banned;
            grow(adj, allowed, max_size, next_set, next_ext, banned, out);
            banned |= bit;
        }
    }
    let mut out = Vec::new();
    let root_bit = 1u64 << root;
    if max_size >= 1 {
        grow(
            adj,
            allowed,
            max_size,
            root_bit,
            adj[root] & allowed & !root_bit,
            root_bit,
            &mut out,
        );
    }
    out
}

/// How a vertex set can be covered by one block, if at all.
type Feasible = Option<(BlockKind, Vec<(usize, usize)>)>;

struct Search<'a> {
    g: &'a Graph,
    adj: Vec<u64>,
    k: usize,
    catalog: &'a TreeCatalog,
    max_block: u32,
    memo: BTreeMap<u64, Feasible>,
}

impl Search<'_> {
    fn size_allowed(&self, size: usize) -> bool {
        (2..=self.k + 1).contains(&size) || self.catalog.has_order(size)
    }

    fn feasible(&mut self, block: u64) -> Feasible {
        if let Some(hit) = self.memo.get(&block) {
            return hit.clone();
        }
        let size = block.count_ones() as usize;
        let verts: Vec<usize> = VertexSet::from_mask(block).iter().collect();
        let mut found = None;
        if (2..=self.k + 1).contains(&size) {
            if let Some(&c) = verts
                .iter()
                .find(|&&c| (self.adj[c] | (1u64 << c)) & block == block)
            {
                let edges = verts
                    .iter()
                    .filter(|&&u| u != c)
                    .map(|&u| (c.min(u), c.max(u)))
                    .collect();
                found = Some((BlockKind::Star(size - 1), edges));
            }
        }
        if found.is_none() && self.catalog.has_order(size) {
            let induced = self.g.induced_by_list(&verts);
            if let Ok(trees) = spanning_trees(&induced) {
                for tree in trees {
                    let t = Graph::new(size, &tree).expect("edges of the induced block");
                    let code = canonical_code(&t).expect("spanning tree");
                    if self.catalog.contains(size, &code) {
                        let edges = tree.iter().map(|&(a, b)| (verts[a], verts[b])).collect();
                        found = Some((BlockKind::Member(code), edges));
                        break;
                    }
                }
            }
        }
        self.memo.insert(block, found.clone());
        found
    }

    fn has_stranded_vertex(&self, rest: u64) -> bool {
        let mut r = rest;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            if self.adj[v] & rest == 0 {
                return true;
            }
        }
        false
    }

    fn solve(&mut self, unassigned: u64, out: &mut Vec<Block>) -> bool {
        if unassigned == 0 {
            return true;
        }
        let v = unassigned.trailing_zeros() as usize;
        let mut candidates = connected_sets(&self.adj, v, unassigned, self.max_block);
        candidates.sort_by_key(|&b| (b.count_ones(), b));
        for block in candidates {
            if !self.size_allowed(block.count_ones() as usize) {
                continue;
            }
            let rest = unassigned & !block;
            if self.has_stranded_vertex(rest) {
                continue;
            }
            let Some((kind, edges)) = self.feasible(block) else {
                continue;
            };
            out.push(Block {
                kind,
                vertices: VertexSet::from_mask(block),
                edges,
            });
            if self.solve(rest, out) {
                return true;
            }
            out.pop();
        }
        false
    }
}

/// Searches for a factor whose components are stars `K_{1,j}` (`j ≤ k`) or
/// catalog members. Blocks always cover the lowest unassigned vertex and
/// are tried by size, then by vertex bitmask; stars win over members.
pub fn find_factor(
    g: &Graph,
    k: usize,
    catalog: &TreeCatalog,
) -> Result<Option<FactorCertificate>> {
    find_factor_capped(g, k, catalog, Limits::default().factor)
}

pub fn find_factor_capped(
    g: &Graph,
    k: usize,
    catalog: &TreeCatalog,
    cap: usize,
) -> Result<Option<FactorCertificate>> {
    crate::check_k(k)?;
    if catalog.k != k {
        return Err(Error::InvalidParameters(alloc::format!(
            "catalog built for k = {}, search uses k = {k}",
            catalog.k
        )));
    }
    let n = g.order();
    if n > catalog.max_order {
        return Err(Error::CatalogTooSmall {
            order: n,
            max_order: catalog.max_order,
        });
    }
    if n > cap.min(64) {
        return Err(Error::TooLarge {
            order: n,
            cap: cap.min(64),
        });
    }
    let adj = g.adjacency_masks().expect("order at most 64");
    let mut search = Search {
        g,
        adj,
        k,
        catalog,
        max_block: n.min(catalog.max_order) as u32,
        memo: BTreeMap::new(),
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut blocks = Vec::new();
    if search.has_stranded_vertex(all) {
        return Ok(None);
    }
    Ok(search
        .solve(all, &mut blocks)
        .then_some(FactorCertificate { blocks }))
}

/// Checks a certificate against the graph and catalog, returning the first
/// violated requirement.
pub fn verify_certificate(
    g: &Graph,
    k: usize,
    cert: &FactorCertificate,
    catalog: &TreeCatalog,
) -> core::result::Result<(), CertificateError> {
    let n = g.order();
    let mut cover = vec![0usize; n];
    for (i, b) in cert.blocks.iter().enumerate() {
        for v in b.vertices.iter() {
            if v >= n {
                return Err(CertificateError::VertexOutOfRange(i));
            }
            cover[v] += 1;
        }
    }
    if let Some((v, &c)) = cover.iter().enumerate().find(|(_, &c)| c != 1) {
        return Err(CertificateError::NotAPartition(v, c));
    }
    for (i, b) in cert.blocks.iter().enumerate() {
        for &(u, v) in &b.edges {
            if !g.has_edge(u, v) {
                return Err(CertificateError::EdgeNotInGraph { block: i, u, v });
            }
            if !b.vertices.contains(u) || !b.vertices.contains(v) {
                return Err(CertificateError::EdgeOutsideBlock { block: i, u, v });
            }
        }
        let mut edges: Vec<(usize, usize)> =
            b.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        let size = b.vertices.len();
        match &b.kind {
            BlockKind::Star(j) => {
                if *j > k {
                    return Err(CertificateError::StarTooLarge {
                        block: i,
                        size: *j,
                        k,
                    });
                }
                let is_star = *j >= 1
                    && size == j + 1
                    && edges.len() == *j
                    && b.edges.len() == *j
                    && b.vertices
                        .iter()
                        .any(|c| edges.iter().all(|&(u, v)| u == c || v == c));
                if !is_star {
                    return Err(CertificateError::NotAStar(i));
                }
            }
            BlockKind::Member(code) => {
                if size > catalog.max_order {
                    return Err(CertificateError::CatalogTooSmall {
                        block: i,
                        order: size,
                    });
                }
                let verts: Vec<usize> = b.vertices.iter().collect();
                let local = |x: usize| {
                    verts
                        .binary_search(&x)
                        .expect("edge endpoints lie in the block")
                };
                let local_edges: Vec<(usize, usize)> =
                    edges.iter().map(|&(u, v)| (local(u), local(v))).collect();
                let tree = Graph::new(size, &local_edges).expect("local labels in range");
                if edges.len() != b.edges.len() || !tree.is_tree() {
                    return Err(CertificateError::NotASpanningTree(i));
                }
                if canonical_code(&tree).ok().as_deref() != Some(code.as_str()) {
                    return Err(CertificateError::CodeMismatch(i));
                }
                if catalog.k != k || !catalog.contains(size, code) {
                    return Err(CertificateError::NotInCatalog(i));
                }
            }
        }
    }
    Ok(())
}
