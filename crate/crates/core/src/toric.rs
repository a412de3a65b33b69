//! Monomials and pure-difference binomials over the edge variables of a
//! graph, and the binomial generators of its toric ideal.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{mask_to_vec, GnLabels, Graph};

/// Exponent vector indexed by edge variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    /// The product of the listed variables (with repetition).
    pub fn from_vars(num_vars: usize, vars: &[usize]) -> Self {
        let mut m = Monomial::one(num_vars);
        for &v in vars {
            m.0[v] += 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k)
            .collect()
    }

    /// `x1*y1*z2` style rendering; `1` for the unit monomial.
    pub fn render(&self, labels: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                let name = labels.get(k).cloned().unwrap_or_else(|| format!("e{k}"));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A pure difference `plus - minus` of two distinct monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    /// `None` when the two sides coincide (the zero polynomial).
    pub fn new(plus: Monomial, minus: Monomial) -> Option<Binomial> {
        assert_eq!(plus.num_vars(), minus.num_vars(), "monomials over different rings");
        (plus != minus).then_some(Binomial { plus, minus })
    }

    pub fn num_vars(&self) -> usize {
        self.plus.num_vars()
    }

    pub fn degree(&self) -> u64 {
        self.plus.degree().max(self.minus.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus.degree() == self.minus.degree()
    }

    pub fn flipped(&self) -> Binomial {
        Binomial {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// Divides out the common factor of the two sides.
    pub fn normalized(&self) -> Option<Binomial> {
        let g = self.plus.gcd(&self.minus);
        Binomial::new(self.plus.div(&g)?, self.minus.div(&g)?)
    }

    /// Orientation with the lexicographically larger exponent vector as `plus`.
    pub fn canonical(self) -> Binomial {
        if self.plus >= self.minus {
            self
        } else {
            self.flipped()
        }
    }

    /// Same polynomial up to sign.
    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        self == other || (self.plus == other.minus && self.minus == other.plus)
    }

    /// Whether `self` divides `other` side by side, in either orientation.
    pub fn divides_sidewise(&self, other: &Binomial) -> bool {
        (self.plus.divides(&other.plus) && self.minus.divides(&other.minus))
            || (self.minus.divides(&other.plus) && self.plus.divides(&other.minus))
    }

    /// `sum_e (plus_e - minus_e) * rho(e)`, which vanishes exactly when the
    /// binomial lies in the toric ideal of `g`.
    pub fn edge_vector_defect(&self, g: &Graph) -> Vec<i64> {
        let mut acc = vec![0i64; g.num_vertices()];
        for (k, e) in g.edges().iter().enumerate() {
            let c = self.plus.0[k] as i64 - self.minus.0[k] as i64;
            acc[e[0]] += c;
            acc[e[1]] += c;
        }
        acc
    }

    pub fn is_relation_of(&self, g: &Graph) -> bool {
        self.num_vars() == g.num_edges() && self.edge_vector_defect(g).iter().all(|&c| c == 0)
    }

    pub fn render(&self, labels: &[String]) -> String {
        format!("{} - {}", self.plus.render(labels), self.minus.render(labels))
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

/// `rho(e)`: the 0/1 vector over vertices with ones at the endpoints of `e`.
pub fn incidence_vector(g: &Graph, edge: usize) -> Result<Vec<i64>> {
    let [u, v] = g.edge(edge).ok_or_else(|| {
        Error::InvalidParameter(format!("edge index {edge} out of range 0..{}", g.num_edges()))
    })?;
    let mut out = vec![0; g.num_vertices()];
    out[u] = 1;
    out[v] = 1;
    Ok(out)
}

/// An even closed walk, stored as its edge sequence.
///
/// Besides consecutive edges (cyclically) sharing exactly one vertex, the
/// shared vertices of consecutive pairs must differ, so the edge sequence is
/// the trace of an honest vertex walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenClosedWalk {
    edges: Vec<usize>,
    num_vars: usize,
}

impl EvenClosedWalk {
    pub fn new(g: &Graph, edges: Vec<usize>) -> Result<Self> {
        let len = edges.len();
        if len < 4 || !len.is_multiple_of(2) {
            return Err(Error::InvalidWalk(format!(
                "walk length must be even and at least 4, got {len}"
            )));
        }
        let mut shared = Vec::with_capacity(len);
        for k in 0..len {
            let (a, b) = (edges[k], edges[(k + 1) % len]);
            let (ea, eb) = match (g.edge(a), g.edge(b)) {
                (Some(ea), Some(eb)) => (ea, eb),
                _ => return Err(Error::InvalidWalk(format!("edge index out of range at step {k}"))),
            };
            let common: Vec<usize> = ea.iter().filter(|v| eb.contains(v)).copied().collect();
            if common.len() != 1 {
                return Err(Error::InvalidWalk(format!(
                    "edges {a} and {b} at step {k} share {} vertices",
                    common.len()
                )));
            }
            shared.push(common[0]);
        }
        for k in 0..len {
            if shared[k] == shared[(k + 1) % len] {
                return Err(Error::InvalidWalk(format!(
                    "edge {} is entered and left through the same vertex {}",
                    edges[(k + 1) % len],
                    shared[k]
                )));
            }
        }
        Ok(EvenClosedWalk {
            edges,
            num_vars: g.num_edges(),
        })
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Products of the odd- and even-position edges, before normalization.
    pub fn sides(&self) -> (Monomial, Monomial) {
        let odd: Vec<usize> = self.edges.iter().step_by(2).copied().collect();
        let even: Vec<usize> = self.edges.iter().skip(1).step_by(2).copied().collect();
        (
            Monomial::from_vars(self.num_vars, &odd),
            Monomial::from_vars(self.num_vars, &even),
        )
    }
}

/// `f_Γ` with the odd-position product as `plus`, gcd-normalized; `None` when
/// the two sides cancel completely.
pub fn walk_binomial(walk: &EvenClosedWalk) -> Option<Binomial> {
    let (plus, minus) = walk.sides();
    Binomial::new(plus, minus)?.normalized()
}

pub const DEFAULT_WALK_STEP_LIMIT: u64 = 200_000_000;

/// Default walk-length bound: twice the vertex count. A primitive walk
/// visits every vertex at most twice, so this bound is always complete.
pub fn default_walk_length(g: &Graph) -> usize {
    (2 * g.num_vertices()).max(4)
}

/// Binomials of all primitive even closed walks of length at most
/// `max_walk_length`, canonically oriented and sorted.
///
/// The search only follows walks that could be primitive: no vertex is
/// revisited at even distance (that would close a shorter even walk whose
/// binomial divides this one side by side) and no edge lands on both sides.
/// Primitivity is then decided inside the produced set, so the result is the
/// full generating set whenever the bound is at least `2|V|`.
pub fn toric_generators(g: &Graph, max_walk_length: usize) -> Result<Vec<Binomial>> {
    toric_generators_guarded(g, max_walk_length, DEFAULT_WALK_STEP_LIMIT)
}

pub fn toric_generators_guarded(g: &Graph, max_walk_length: usize, step_limit: u64) -> Result<Vec<Binomial>> {
    if max_walk_length < 4 || !max_walk_length.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "walk length bound must be even and at least 4, got {max_walk_length}"
        )));
    }
    let candidates = walk_binomials(g, max_walk_length, step_limit)?;
    Ok(primitive_filter(&candidates.into_iter().collect::<Vec<_>>()))
}

/// Keeps the binomials not divided side by side by another member.
pub fn primitive_filter(candidates: &[Binomial]) -> Vec<Binomial> {
    let mut out: Vec<Binomial> = candidates
        .iter()
        .filter(|f| {
            !candidates
                .iter()
                .any(|h| !h.same_up_to_sign(f) && h.divides_sidewise(f))
        })
        .map(|f| f.clone().canonical())
        .collect();
    out.sort();
    out.dedup();
    out
}

fn distances_to(g: &Graph, target: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.num_vertices()];
    dist[target] = 0;
    let mut queue = VecDeque::from([target]);
    while let Some(v) = queue.pop_front() {
        for u in mask_to_vec(g.neighbors(v)) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

struct WalkSearch<'a> {
    g: &'a Graph,
    incident: Vec<Vec<(usize, usize)>>,
    max_len: usize,
    first_edge: usize,
    origin: usize,
    dist: Vec<usize>,
    steps: u64,
    step_limit: u64,
    counts: Vec<u32>,
    odd: Vec<u32>,
    /// Number of visits so far and the position of the first one.
    visits: Vec<u8>,
    first_visit: Vec<usize>,
    found: BTreeSet<Binomial>,
}

impl WalkSearch<'_> {
    fn extend(&mut self, current: usize, last_edge: usize, len: usize) -> Result<()> {
        self.steps += 1;
        if self.steps > self.step_limit {
            return Err(Error::ResourceGuard(format!(
                "walk enumeration exceeded {} steps; lower the walk length bound",
                self.step_limit
            )));
        }
        if current == self.origin && len.is_multiple_of(2) {
            if len >= 4 && last_edge != self.first_edge {
                let even: Vec<u32> = self.counts.iter().zip(&self.odd).map(|(c, o)| c - o).collect();
                if let Some(b) = Binomial::new(Monomial(self.odd.clone()), Monomial(even))
                    .and_then(|b| b.normalized())
                {
                    self.found.insert(b.canonical());
                }
            }
            return Ok(());
        }
        if len == self.max_len {
            return Ok(());
        }
        let odd_side = len.is_multiple_of(2);
        for idx in 0..self.incident[current].len() {
            let (e, next) = self.incident[current][idx];
            if e == last_edge || e < self.first_edge || self.dist[next] > self.max_len - len - 1 {
                continue;
            }
            let other_side = if odd_side { self.counts[e] - self.odd[e] } else { self.odd[e] };
            if other_side > 0 {
                continue;
            }
            let pos = len + 1;
            let closing = next == self.origin && pos.is_multiple_of(2);
            if !closing {
                match self.visits[next] {
                    0 => self.first_visit[next] = pos,
                    1 if (pos - self.first_visit[next]) % 2 == 1 => {}
                    _ => continue,
                }
                self.visits[next] += 1;
            }
            self.counts[e] += 1;
            if odd_side {
                self.odd[e] += 1;
            }
            let res = self.extend(next, e, pos);
            self.counts[e] -= 1;
            if odd_side {
                self.odd[e] -= 1;
            }
            if !closing {
                self.visits[next] -= 1;
            }
            res?;
        }
        Ok(())
    }
}

fn walk_binomials(g: &Graph, max_len: usize, step_limit: u64) -> Result<BTreeSet<Binomial>> {
    let mut incident = vec![Vec::new(); g.num_vertices()];
    for (k, e) in g.edges().iter().enumerate() {
        incident[e[0]].push((k, e[1]));
        incident[e[1]].push((k, e[0]));
    }
    let mut search = WalkSearch {
        g,
        incident,
        max_len,
        first_edge: 0,
        origin: 0,
        dist: Vec::new(),
        steps: 0,
        step_limit,
        counts: vec![0; g.num_edges()],
        odd: vec![0; g.num_edges()],
        visits: vec![0; g.num_vertices()],
        first_visit: vec![0; g.num_vertices()],
        found: BTreeSet::new(),
    };
    // Rotations and reflections of a walk give the same binomial up to sign,
    // so every walk is started at its smallest edge index.
    for (k, e) in g.edges().iter().enumerate() {
        for (from, to) in [(e[0], e[1]), (e[1], e[0])] {
            search.first_edge = k;
            search.origin = from;
            search.dist = distances_to(search.g, from);
            search.counts[k] = 1;
            search.odd[k] = 1;
            search.visits[from] = 1;
            search.first_visit[from] = 0;
            search.visits[to] = 1;
            search.first_visit[to] = 1;
            let res = search.extend(to, k, 1);
            search.visits[from] = 0;
            search.visits[to] = 0;
            search.counts[k] = 0;
            search.odd[k] = 0;
            res?;
        }
    }
    Ok(search.found)
}

/// `x_i y_i z_j - z_i x_j y_j` for `1 <= i < j <= n`, in `(i, j)` order.
pub fn gn_generators(n: usize, labels: &GnLabels) -> Result<Vec<Binomial>> {
    if n < 2 || labels.n != n {
        return Err(Error::InvalidParameter(format!(
            "G_n generators need n >= 2 matching the labels, got n = {n}"
        )));
    }
    let m = 3 * n;
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            let plus = Monomial::from_vars(m, &[labels.x(i), labels.y(i), labels.z(j)]);
            let minus = Monomial::from_vars(m, &[labels.z(i), labels.x(j), labels.y(j)]);
            out.push(Binomial { plus, minus });
        }
    }
    Ok(out)
}
