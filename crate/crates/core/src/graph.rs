//! Finite simple connected graphs, the built-in families, and the
//! graph-theoretic predicates that feed the toric ideal and the cone
//! description of an edge ring.
//!
//! Vertex subsets are handled as `u64` bitmasks, so graphs are limited to
//! 64 vertices. Everything downstream is exponential well before that.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A bitmask over vertex indices.
pub type VertexMask = u64;

pub(crate) fn mask_to_vec(mut mask: VertexMask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        out.push(v);
        mask &= mask - 1;
    }
    out
}

fn full_mask(n: usize) -> VertexMask {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Debug, Deserialize)]
struct RawGraph {
    num_vertices: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    vertex_labels: Option<Vec<String>>,
    #[serde(default)]
    edge_labels: Option<Vec<String>>,
}

/// An immutable, connected, simple graph with stable edge indices.
///
/// Edge `k` is always the `k`-th pair passed at construction; the pair is
/// stored with its smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex_labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_labels: Option<Vec<String>>,
    #[serde(skip)]
    adjacency: Vec<VertexMask>,
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawGraph::deserialize(d)?;
        let edges = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::with_labels(raw.num_vertices, edges, raw.vertex_labels, raw.edge_labels)
            .map_err(serde::de::Error::custom)
    }
}

impl Graph {
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::with_labels(num_vertices, edges, None, None)
    }

    pub fn with_labels(
        num_vertices: usize,
        edges: Vec<(usize, usize)>,
        vertex_labels: Option<Vec<String>>,
        edge_labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::InvalidGraph("graph must have at least one vertex".into()));
        }
        if num_vertices > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{num_vertices} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut adjacency = vec![0u64; num_vertices];
        let mut stored = Vec::with_capacity(edges.len());
        for (k, &(u, v)) in edges.iter().enumerate() {
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge {k} = {{{u},{v}}} references a vertex outside 0..{num_vertices}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("edge {k} is a loop at vertex {u}")));
            }
            if adjacency[u] & (1 << v) != 0 {
                return Err(Error::InvalidGraph(format!(
                    "edge {k} = {{{u},{v}}} duplicates an earlier edge"
                )));
            }
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
            stored.push([u.min(v), u.max(v)]);
        }
        if let Some(labels) = &vertex_labels {
            if labels.len() != num_vertices {
                return Err(Error::InvalidGraph(format!(
                    "{} vertex labels for {num_vertices} vertices",
                    labels.len()
                )));
            }
        }
        if let Some(labels) = &edge_labels {
            if labels.len() != stored.len() {
                return Err(Error::InvalidGraph(format!(
                    "{} edge labels for {} edges",
                    labels.len(),
                    stored.len()
                )));
            }
        }
        let g = Graph {
            num_vertices,
            edges: stored,
            vertex_labels,
            edge_labels,
            adjacency,
        };
        if g.components(g.all_vertices()).len() != 1 {
            return Err(Error::InvalidGraph("graph is disconnected".into()));
        }
        Ok(g)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn edge(&self, k: usize) -> Option<[usize; 2]> {
        self.edges.get(k).copied()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = [u.min(v), u.max(v)];
        self.edges.iter().position(|e| *e == key)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.num_vertices && v < self.num_vertices && self.adjacency[u] & (1 << v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexMask {
        self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    pub fn all_vertices(&self) -> VertexMask {
        full_mask(self.num_vertices)
    }

    pub fn edge_label(&self, k: usize) -> String {
        match &self.edge_labels {
            Some(labels) => labels[k].clone(),
            None => format!("e{k}"),
        }
    }

    pub fn vertex_label(&self, v: usize) -> String {
        match &self.vertex_labels {
            Some(labels) => labels[v].clone(),
            None => format!("v{v}"),
        }
    }

    pub fn edge_labels(&self) -> Vec<String> {
        (0..self.num_edges()).map(|k| self.edge_label(k)).collect()
    }

    /// Union of neighbourhoods of the vertices in `mask`.
    pub fn neighborhood(&self, mask: VertexMask) -> VertexMask {
        mask_to_vec(mask)
            .into_iter()
            .fold(0, |acc, v| acc | self.adjacency[v])
    }

    pub fn is_independent(&self, mask: VertexMask) -> bool {
        mask_to_vec(mask)
            .into_iter()
            .all(|v| self.adjacency[v] & mask == 0)
    }

    /// Connected components of the induced subgraph on `mask`.
    pub fn components(&self, mask: VertexMask) -> Vec<VertexMask> {
        let mut remaining = mask;
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining & remaining.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adjacency[v] & mask & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            remaining &= !comp;
            out.push(comp);
        }
        out
    }

    /// Whether the induced subgraph on `mask` contains an odd cycle.
    pub fn has_odd_cycle_in(&self, mask: VertexMask) -> bool {
        self.components(mask)
            .into_iter()
            .any(|c| self.two_color(c).is_err())
    }

    /// Two-colours the connected induced subgraph on `component`, or returns an
    /// odd closed walk (as a vertex cycle) when that is impossible.
    fn two_color(&self, component: VertexMask) -> std::result::Result<Vec<(usize, u8)>, Vec<usize>> {
        let start = component.trailing_zeros() as usize;
        let mut color = vec![u8::MAX; self.num_vertices];
        let mut parent = vec![usize::MAX; self.num_vertices];
        let mut depth = vec![0usize; self.num_vertices];
        let mut queue = VecDeque::from([start]);
        color[start] = 0;
        while let Some(v) = queue.pop_front() {
            for u in mask_to_vec(self.adjacency[v] & component) {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    parent[u] = v;
                    depth[u] = depth[v] + 1;
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    // Climb from both ends to the lowest common ancestor.
                    let (mut a, mut b) = (v, u);
                    let mut left = vec![a];
                    let mut right = vec![b];
                    while a != b {
                        if depth[a] >= depth[b] {
                            a = parent[a];
                            left.push(a);
                        } else {
                            b = parent[b];
                            right.push(b);
                        }
                    }
                    right.pop();
                    right.reverse();
                    left.extend(right);
                    return Err(left);
                }
            }
        }
        Ok(mask_to_vec(component)
            .into_iter()
            .map(|v| (v, color[v]))
            .collect())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph on {} vertices with {} edges", self.num_vertices, self.num_edges())
    }
}

/// Outcome of [`is_bipartite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// A proper 2-colouring, indexed by vertex.
    Bipartite { coloring: Vec<u8> },
    /// An odd cycle, as a vertex sequence closing back to its first entry.
    NotBipartite { odd_cycle: Vec<usize> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    match g.two_color(g.all_vertices()) {
        Ok(pairs) => {
            let mut coloring = vec![0u8; g.num_vertices()];
            for (v, c) in pairs {
                coloring[v] = c;
            }
            Bipartiteness::Bipartite { coloring }
        }
        Err(odd_cycle) => Bipartiteness::NotBipartite { odd_cycle },
    }
}

/// Vertices `v` such that every connected component of `G \ v` contains an
/// odd cycle.
pub fn regular_vertices(g: &Graph) -> Vec<usize> {
    let all = g.all_vertices();
    (0..g.num_vertices())
        .filter(|&v| {
            g.components(all & !(1 << v))
                .into_iter()
                .all(|c| g.has_odd_cycle_in(c))
        })
        .collect()
}

fn is_fundamental(g: &Graph, t: VertexMask) -> bool {
    let nt = g.neighborhood(t);
    let span = t | nt;
    // The bipartite graph T -- N(T) is connected iff BFS alternating between
    // the two sides reaches all of T ∪ N(T).
    let start = t & t.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let side = if t & (1 << v) != 0 { nt } else { t };
        let fresh = g.neighbors(v) & side & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    if seen != span {
        return false;
    }
    let rest = g.all_vertices() & !span;
    g.components(rest).into_iter().all(|c| g.has_odd_cycle_in(c))
}

/// All fundamental sets of `g`, each sorted, in lexicographic order.
///
/// Enumerates independent sets, so this is exponential in the number of
/// vertices.
pub fn fundamental_sets(g: &Graph) -> Vec<Vec<usize>> {
    fn walk(g: &Graph, next: usize, current: VertexMask, blocked: VertexMask, out: &mut Vec<VertexMask>) {
        for v in next..g.num_vertices() {
            if blocked & (1 << v) != 0 {
                continue;
            }
            let t = current | (1 << v);
            if is_fundamental(g, t) {
                out.push(t);
            }
            walk(g, v + 1, t, blocked | g.neighbors(v), out);
        }
    }
    let mut masks = Vec::new();
    walk(g, 0, 0, 0, &mut masks);
    let mut sets: Vec<Vec<usize>> = masks.into_iter().map(mask_to_vec).collect();
    sets.sort();
    sets
}

/// Every chordless (induced) cycle of odd length, as sorted vertex lists.
pub fn chordless_odd_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn extend(
        g: &Graph,
        start: usize,
        path: &mut Vec<usize>,
        on_path: VertexMask,
        out: &mut Vec<VertexMask>,
    ) {
        let last = *path.last().unwrap();
        let interior = on_path & !(1 << start) & !(1 << last);
        for v in mask_to_vec(g.neighbors(last)) {
            if v <= start || on_path & (1 << v) != 0 || g.neighbors(v) & interior != 0 {
                continue;
            }
            if path.len() >= 2 && g.has_edge(v, start) {
                if path[1] < v && (path.len() + 1) % 2 == 1 {
                    out.push(on_path | (1 << v));
                }
                continue;
            }
            path.push(v);
            extend(g, start, path, on_path | (1 << v), out);
            path.pop();
        }
    }
    let mut masks = Vec::new();
    for s in 0..g.num_vertices() {
        let mut path = vec![s];
        extend(g, s, &mut path, 1 << s, &mut masks);
    }
    let mut cycles: Vec<Vec<usize>> = masks.into_iter().map(mask_to_vec).collect();
    cycles.sort();
    cycles.dedup();
    cycles
}

/// Outcome of [`satisfies_odd_cycle_condition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OddCycleCheck {
    Satisfied,
    /// Two vertex-disjoint odd cycles with no edge between them.
    Violated { first: Vec<usize>, second: Vec<usize> },
}

impl OddCycleCheck {
    pub fn holds(&self) -> bool {
        matches!(self, OddCycleCheck::Satisfied)
    }
}

/// Every pair of vertex-disjoint odd cycles must be joined by an edge.
///
/// Only chordless odd cycles need checking: a chord splits an odd cycle into
/// a shorter odd cycle on a subset of its vertices.
pub fn satisfies_odd_cycle_condition(g: &Graph) -> OddCycleCheck {
    let cycles: Vec<VertexMask> = chordless_odd_cycles(g)
        .iter()
        .map(|c| c.iter().fold(0, |m, &v| m | (1 << v)))
        .collect();
    for (i, &a) in cycles.iter().enumerate() {
        for &b in &cycles[i + 1..] {
            if a & b == 0 && g.neighborhood(a) & b == 0 {
                return OddCycleCheck::Violated {
                    first: mask_to_vec(a),
                    second: mask_to_vec(b),
                };
            }
        }
    }
    OddCycleCheck::Satisfied
}

/// The built-in graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `n` triangles sharing one hub vertex.
    Gn { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Complete { m: usize },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Gn { n } => write!(f, "G_{n}"),
            Family::CompleteBipartite { m, n } => write!(f, "K_{{{m},{n}}}"),
            Family::Complete { m } => write!(f, "K_{m}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `gn:4`, `kmn:2,3` or `km:5`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<usize> = params
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad family parameter `{p}`")))
            })
            .collect::<Result<_>>()?;
        family_from_parts(name, &nums)
    }
}

pub fn family_from_parts(name: &str, params: &[usize]) -> Result<Family> {
    match (name.to_ascii_lowercase().as_str(), params) {
        ("gn", [n]) => Ok(Family::Gn { n: *n }),
        ("kmn" | "complete_bipartite", [m, n]) => Ok(Family::CompleteBipartite { m: *m, n: *n }),
        ("km" | "complete", [m]) => Ok(Family::Complete { m: *m }),
        _ => Err(Error::InvalidParameter(format!(
            "unknown family `{name}` with parameters {params:?} (expected gn:N, kmn:M,N or km:M)"
        ))),
    }
}

/// Vertex and edge indices of the named parts of `G_n`.
///
/// Vertex layout: `u_i^(1)` is `i-1`, `u_i^(2)` is `n+i-1`, the hub `w` is
/// `2n`. Edge layout: `x_i, y_i, z_i` are `3(i-1), 3(i-1)+1, 3(i-1)+2`, which
/// makes the identity variable order `x_1 < y_1 < z_1 < ... < z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GnLabels {
    pub n: usize,
    pub w: usize,
    pub u1: Vec<usize>,
    pub u2: Vec<usize>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub z: Vec<usize>,
}

impl GnLabels {
    pub fn new(n: usize) -> Self {
        GnLabels {
            n,
            w: 2 * n,
            u1: (0..n).collect(),
            u2: (n..2 * n).collect(),
            x: (0..n).map(|i| 3 * i).collect(),
            y: (0..n).map(|i| 3 * i + 1).collect(),
            z: (0..n).map(|i| 3 * i + 2).collect(),
        }
    }

    /// Edge index of `x_i`, 1-based `i`.
    pub fn x(&self, i: usize) -> usize {
        self.x[i - 1]
    }

    pub fn y(&self, i: usize) -> usize {
        self.y[i - 1]
    }

    pub fn z(&self, i: usize) -> usize {
        self.z[i - 1]
    }
}

pub fn gn(n: usize) -> Result<(Graph, GnLabels)> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("G_n requires n >= 2, got {n}")));
    }
    if 2 * n + 1 > MAX_VERTICES {
        return Err(Error::InvalidParameter(format!("G_{n} is too large")));
    }
    let labels = GnLabels::new(n);
    let mut edges = Vec::with_capacity(3 * n);
    let mut edge_labels = Vec::with_capacity(3 * n);
    for i in 0..n {
        let (a, b, w) = (labels.u1[i], labels.u2[i], labels.w);
        edges.push((w, a));
        edges.push((w, b));
        edges.push((a, b));
        edge_labels.extend([format!("x{}", i + 1), format!("y{}", i + 1), format!("z{}", i + 1)]);
    }
    let mut vertex_labels: Vec<String> = (1..=n).map(|i| format!("u{i}_1")).collect();
    vertex_labels.extend((1..=n).map(|i| format!("u{i}_2")));
    vertex_labels.push("w".into());
    let g = Graph::with_labels(2 * n + 1, edges, Some(vertex_labels), Some(edge_labels))?;
    Ok((g, labels))
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidParameter(format!("K_{{m,n}} requires m,n >= 1, got {m},{n}")));
    }
    if m + n > MAX_VERTICES {
        return Err(Error::InvalidParameter("complete bipartite graph is too large".into()));
    }
    let edges = (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))).collect();
    Graph::new(m + n, edges)
}

pub fn complete(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("K_m requires m >= 3, got {m}")));
    }
    if m > MAX_VERTICES {
        return Err(Error::InvalidParameter("complete graph is too large".into()));
    }
    let edges = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    Graph::new(m, edges)
}

pub fn build_family(family: Family) -> Result<(Graph, Option<GnLabels>)> {
    match family {
        Family::Gn { n } => gn(n).map(|(g, l)| (g, Some(l))),
        Family::CompleteBipartite { m, n } => complete_bipartite(m, n).map(|g| (g, None)),
        Family::Complete { m } => complete(m).map(|g| (g, None)),
    }
}
