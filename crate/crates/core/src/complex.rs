//! Stanley–Reisner complexes of squarefree monomial ideals, face counting,
//! shelling verification and the two routes to the h-vector.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::GnLabels;
use crate::groebner::{MonomialIdeal, MonomialOrder};

pub const MAX_COMPLEX_VERTICES: usize = 128;
pub const MAX_EXHAUSTIVE_SHELLING_FACETS: usize = 8;

/// A set of complex vertices (edge variables of the ambient ring).
pub type FaceMask = u128;

fn bits(mut mask: FaceMask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

fn to_mask(vertices: &[usize]) -> FaceMask {
    vertices.iter().fold(0, |m, &v| m | 1u128 << v)
}

fn full(n: usize) -> FaceMask {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// A simplicial complex given by its facets, which are pairwise incomparable
/// and kept in lexicographic order of their sorted vertex lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<FaceMask>,
}

impl SimplicialComplex {
    /// The complex generated by `faces`; non-maximal entries are dropped.
    pub fn new(num_vertices: usize, faces: &[Vec<usize>]) -> Result<Self> {
        if num_vertices > MAX_COMPLEX_VERTICES {
            return Err(Error::Unsupported(format!(
                "complexes are limited to {MAX_COMPLEX_VERTICES} vertices"
            )));
        }
        if faces.is_empty() {
            return Err(Error::InvalidParameter("a complex needs at least one facet".into()));
        }
        if let Some(v) = faces.iter().flatten().find(|&&v| v >= num_vertices) {
            return Err(Error::InvalidParameter(format!("vertex {v} out of range 0..{num_vertices}")));
        }
        Ok(Self::from_masks(num_vertices, faces.iter().map(|f| to_mask(f)).collect()))
    }

    fn from_masks(num_vertices: usize, masks: Vec<FaceMask>) -> Self {
        let mut facets: Vec<FaceMask> = masks
            .iter()
            .copied()
            .filter(|&f| !masks.iter().any(|&g| g != f && f & g == f))
            .collect();
        facets.sort_by_key(|&f| bits(f));
        facets.dedup();
        SimplicialComplex { num_vertices, facets }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn facet_masks(&self) -> &[FaceMask] {
        &self.facets
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| bits(f)).collect()
    }

    /// Dimension: largest facet size minus one.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.count_ones() as isize).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let m = to_mask(face);
        self.facets.iter().any(|&f| f & m == m)
    }

    /// Vertices lying in every facet.
    pub fn cone_points(&self) -> Vec<usize> {
        bits(self.facets.iter().fold(full(self.num_vertices), |acc, &f| acc & f))
    }

    /// Facets with the cone points removed, the compact display form.
    pub fn suppressed_facets(&self) -> Vec<Vec<usize>> {
        let cone = to_mask(&self.cone_points());
        self.facets.iter().map(|&f| bits(f & !cone)).collect()
    }

    pub fn facet_position(&self, facet: &[usize]) -> Option<usize> {
        let m = to_mask(facet);
        self.facets.iter().position(|&f| f == m)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SimplicialComplex", 2)?;
        st.serialize_field("num_vertices", &self.num_vertices)?;
        st.serialize_field("facets", &self.facets())?;
        st.end()
    }
}

/// Minimal transversals of a hypergraph, built edge by edge (Berge).
pub fn minimal_transversals(edges: &[FaceMask]) -> Vec<FaceMask> {
    let mut current: Vec<FaceMask> = vec![0];
    for &edge in edges {
        let mut next: Vec<FaceMask> = Vec::new();
        for &t in &current {
            if t & edge != 0 {
                next.push(t);
            } else {
                next.extend(bits(edge).into_iter().map(|v| t | 1u128 << v));
            }
        }
        next.sort_unstable();
        next.dedup();
        let minimal: Vec<FaceMask> = next
            .iter()
            .copied()
            .filter(|&t| !next.iter().any(|&o| o != t && o & t == o))
            .collect();
        current = minimal;
    }
    current
}

/// The complex whose Stanley–Reisner ideal is `ideal`: its facets are the
/// complements of the minimal transversals of the generator supports.
pub fn complex_from_squarefree_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let n = ideal.num_vars;
    if n > MAX_COMPLEX_VERTICES {
        return Err(Error::Unsupported(format!("{n} variables exceeds {MAX_COMPLEX_VERTICES}")));
    }
    if let Some(g) = ideal.generators.iter().find(|g| !g.is_squarefree()) {
        return Err(Error::InvalidParameter(format!("generator {g:?} is not squarefree")));
    }
    if ideal.generators.iter().any(|g| g.is_one()) {
        return Err(Error::Unsupported("the unit ideal has the void complex".into()));
    }
    let supports: Vec<FaceMask> = ideal.generators.iter().map(|g| to_mask(&g.support())).collect();
    let facets = minimal_transversals(&supports)
        .into_iter()
        .map(|t| full(n) & !t)
        .collect();
    Ok(SimplicialComplex::from_masks(n, facets))
}

/// Closed-form facets of the initial complex of `G_n`: for `j = 1..n`, a
/// choice `w_i in {x_i, y_i}` for `i < j`, both `x_i, y_i` for `j <= i < n`,
/// `z_2..z_j`, and the cone points `x_n, y_n, z_1`.
pub fn gn_facets(n: usize, labels: &GnLabels) -> Result<SimplicialComplex> {
    if n < 2 || labels.n != n {
        return Err(Error::InvalidParameter(format!("G_n facets need n >= 2, got {n}")));
    }
    let cone = [labels.x(n), labels.y(n), labels.z(1)];
    let mut facets = Vec::with_capacity((1 << n) - 1);
    for j in 1..=n {
        for choice in 0..(1usize << (j - 1)) {
            let mut f: Vec<usize> = cone.to_vec();
            for i in 1..j {
                f.push(if choice >> (i - 1) & 1 == 0 { labels.x(i) } else { labels.y(i) });
            }
            for i in j..n {
                f.push(labels.x(i));
                f.push(labels.y(i));
            }
            f.extend((2..=j).map(|i| labels.z(i)));
            facets.push(f);
        }
    }
    SimplicialComplex::new(3 * n, &facets)
}

/// `(f_{-1}, f_0, ..., f_dim)`.
pub fn f_vector(c: &SimplicialComplex) -> Result<Vec<u64>> {
    fn grow(facets: &[FaceMask], n: usize, next: usize, size: usize, containing: &[usize], f: &mut [u64]) {
        for v in next..n {
            let with_v: Vec<usize> = containing
                .iter()
                .copied()
                .filter(|&k| facets[k] >> v & 1 == 1)
                .collect();
            if with_v.is_empty() {
                continue;
            }
            f[size + 1] += 1;
            grow(facets, n, v + 1, size + 1, &with_v, f);
        }
    }
    if c.num_vertices > MAX_COMPLEX_VERTICES {
        return Err(Error::Unsupported("too many vertices for face enumeration".into()));
    }
    let top = (c.dim() + 2) as usize;
    let mut f = vec![0u64; top];
    f[0] = 1;
    let all: Vec<usize> = (0..c.facets.len()).collect();
    grow(&c.facets, c.num_vertices, 0, 0, &all, &mut f);
    Ok(f)
}

/// Numerator coefficients `h_0..h_d` of a Hilbert series over `(1-t)^d`.
///
/// Stored with all `d + 1` entries; [`HVector::trimmed`] drops trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    pub coefficients: Vec<i64>,
    pub dim: usize,
}

impl HVector {
    pub fn new(mut coefficients: Vec<i64>, dim: usize) -> Result<Self> {
        let trimmed_len = coefficients.iter().rposition(|&h| h != 0).map_or(0, |p| p + 1);
        if trimmed_len > dim + 1 {
            return Err(Error::InvalidParameter(format!(
                "h-vector of length {trimmed_len} cannot have dimension {dim}"
            )));
        }
        coefficients.resize(dim + 1, 0);
        Ok(HVector { coefficients, dim })
    }

    pub fn trimmed(&self) -> &[i64] {
        let len = self.coefficients.iter().rposition(|&h| h != 0).map_or(0, |p| p + 1);
        &self.coefficients[..len]
    }

    /// Index of the last nonzero coefficient.
    pub fn socle_degree(&self) -> usize {
        self.trimmed().len().saturating_sub(1)
    }

    pub fn is_symmetric(&self) -> bool {
        let h = self.trimmed();
        h.iter().eq(h.iter().rev())
    }

    pub fn sum(&self) -> i64 {
        self.coefficients.iter().sum()
    }
}

impl Serialize for HVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.trimmed().serialize(s)
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// Coefficients of `sum_i f_{i-1} t^i (1-t)^{d-i}`.
pub fn h_from_f(f: &[u64], d: usize) -> Result<HVector> {
    if f.len() != d + 1 {
        return Err(Error::InvalidParameter(format!(
            "f-vector of length {} does not match dimension {d}",
            f.len()
        )));
    }
    let d = d as i64;
    let h = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, k - i) * f[i as usize] as i64
                })
                .sum()
        })
        .collect();
    HVector::new(h, d as usize)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellingReport {
    /// Facet indices (into the complex's facet list) in shelling order.
    pub order: Vec<usize>,
    /// `r_i` for every verified step; `r_1 = 0`.
    pub r_values: Vec<usize>,
    pub valid: bool,
    /// 1-based position of the first failing facet.
    pub failure_step: Option<usize>,
}

impl ShellingReport {
    /// The multiset `{r_2, ..., r_t}`, sorted.
    pub fn restriction_multiset(&self) -> Vec<usize> {
        let mut r = self.r_values.get(1..).unwrap_or_default().to_vec();
        r.sort_unstable();
        r
    }
}

/// Checks that `order` is a shelling and collects the `r_i`.
///
/// At step `i` the covered vertices are those `v` with `F_i \ {v}` inside an
/// earlier facet; the step is valid when there is at least one and every
/// earlier facet misses one of them.
pub fn verify_shelling(c: &SimplicialComplex, order: &[usize]) -> Result<ShellingReport> {
    if !c.is_pure() {
        return Err(Error::Unsupported("shelling verification needs a pure complex".into()));
    }
    let mut seen = vec![false; c.facets.len()];
    if order.len() != c.facets.len() || order.iter().any(|&k| k >= seen.len() || std::mem::replace(&mut seen[k], true)) {
        return Err(Error::InvalidParameter("order is not a permutation of the facets".into()));
    }
    let facets: Vec<FaceMask> = order.iter().map(|&k| c.facets[k]).collect();
    let mut r_values = vec![0];
    for i in 1..facets.len() {
        let current = facets[i];
        let covered = facets[..i]
            .iter()
            .map(|&earlier| current & !earlier)
            .filter(|d| d.count_ones() == 1)
            .fold(0, |acc, d| acc | d);
        let ok = covered != 0 && facets[..i].iter().all(|&earlier| covered & !earlier != 0);
        if !ok {
            return Ok(ShellingReport {
                order: order.to_vec(),
                r_values,
                valid: false,
                failure_step: Some(i + 1),
            });
        }
        r_values.push(covered.count_ones() as usize);
    }
    Ok(ShellingReport {
        order: order.to_vec(),
        r_values,
        valid: true,
        failure_step: None,
    })
}

/// Facets sorted by their vertex tuples read in increasing variable order,
/// compared position by position.
pub fn lex_facet_order(c: &SimplicialComplex, order: &MonomialOrder) -> Vec<usize> {
    let keys: Vec<Vec<usize>> = c
        .facets
        .iter()
        .map(|&f| {
            let mut ranks: Vec<usize> = bits(f).into_iter().map(|v| order.rank(v)).collect();
            ranks.sort_unstable();
            ranks
        })
        .collect();
    let mut idx: Vec<usize> = (0..c.facets.len()).collect();
    idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    idx
}

/// McMullen's rule: `h_i` counts the steps with `r_j = i`.
pub fn h_from_shelling(report: &ShellingReport, d: usize) -> Result<HVector> {
    if !report.valid {
        return Err(Error::InvalidParameter(format!(
            "shelling failed at step {}",
            report.failure_step.unwrap_or(0)
        )));
    }
    let mut h = vec![0i64; d + 1];
    for &r in &report.r_values {
        if r > d {
            return Err(Error::InvalidParameter(format!("r-value {r} exceeds dimension {d}")));
        }
        h[r] += 1;
    }
    HVector::new(h, d)
}

/// Tries every facet order by backtracking; limited to small complexes.
pub fn search_shelling(c: &SimplicialComplex) -> Result<Option<Vec<usize>>> {
    fn extend(c: &SimplicialComplex, order: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if order.len() == c.facets.len() {
            return true;
        }
        for k in 0..c.facets.len() {
            if used[k] {
                continue;
            }
            let current = c.facets[k];
            let earlier: Vec<FaceMask> = order.iter().map(|&j| c.facets[j]).collect();
            let covered = earlier
                .iter()
                .map(|&e| current & !e)
                .filter(|d| d.count_ones() == 1)
                .fold(0, |acc, d| acc | d);
            let ok = earlier.is_empty()
                || (covered != 0 && earlier.iter().all(|&e| covered & !e != 0));
            if ok {
                used[k] = true;
                order.push(k);
                if extend(c, order, used) {
                    return true;
                }
                order.pop();
                used[k] = false;
            }
        }
        false
    }
    if c.facets.len() > MAX_EXHAUSTIVE_SHELLING_FACETS {
        return Err(Error::ResourceGuard(format!(
            "exhaustive shelling search is limited to {MAX_EXHAUSTIVE_SHELLING_FACETS} facets"
        )));
    }
    if !c.is_pure() {
        return Ok(None);
    }
    let mut order = Vec::new();
    let mut used = vec![false; c.facets.len()];
    Ok(extend(c, &mut order, &mut used).then_some(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gn;
    use crate::toric::Monomial;

    fn boundary_of_triangle() -> SimplicialComplex {
        SimplicialComplex::new(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn complex_from_ideal_examples() {
        let empty = MonomialIdeal::new(3, vec![]);
        assert_eq!(complex_from_squarefree_ideal(&empty).unwrap().facets(), vec![vec![0, 1, 2]]);

        // ab, cd on {a, b, c, d}.
        let ideal = MonomialIdeal::new(
            4,
            vec![Monomial::from_vars(4, &[0, 1]), Monomial::from_vars(4, &[2, 3])],
        );
        let c = complex_from_squarefree_ideal(&ideal).unwrap();
        assert_eq!(c.facets(), vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);

        let bad = MonomialIdeal::new(2, vec![Monomial::new(vec![2, 0])]);
        assert!(complex_from_squarefree_ideal(&bad).is_err());
    }

    #[test]
    fn delta_two_by_hand() {
        let (_, l) = gn(2).unwrap();
        let ideal = MonomialIdeal::new(6, vec![Monomial::from_vars(6, &[l.x(1), l.y(1), l.z(2)])]);
        let c = complex_from_squarefree_ideal(&ideal).unwrap();
        assert_eq!(c, gn_facets(2, &l).unwrap());
        let mut cone = c.cone_points();
        cone.sort();
        let mut expected = vec![l.x(2), l.y(2), l.z(1)];
        expected.sort();
        assert_eq!(cone, expected);
        let mut shown = c.suppressed_facets();
        shown.sort();
        let mut expected = vec![vec![l.x(1), l.y(1)], vec![l.x(1), l.z(2)], vec![l.y(1), l.z(2)]];
        for f in &mut expected {
            f.sort();
        }
        expected.sort();
        assert_eq!(shown, expected);
        assert_eq!(f_vector(&c).unwrap(), vec![1, 6, 15, 19, 12, 3]);
    }

    #[test]
    fn gn_facet_counts() {
        for n in 2..=6 {
            let (_, l) = gn(n).unwrap();
            let c = gn_facets(n, &l).unwrap();
            assert_eq!(c.num_facets(), (1 << n) - 1);
            assert!(c.is_pure());
            assert_eq!(c.dim(), 2 * n as isize);
        }
        assert!(gn_facets(1, &GnLabels::new(1)).is_err());
    }

    #[test]
    fn f_vectors() {
        let simplex = SimplicialComplex::new(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(f_vector(&simplex).unwrap(), vec![1, 3, 3, 1]);
        assert_eq!(f_vector(&boundary_of_triangle()).unwrap(), vec![1, 3, 3]);
    }

    #[test]
    fn h_from_f_examples() {
        assert_eq!(h_from_f(&[1, 3, 3, 1], 3).unwrap().trimmed(), &[1]);
        assert_eq!(h_from_f(&[1, 3, 3], 2).unwrap().coefficients, vec![1, 1, 1]);
        assert_eq!(h_from_f(&[1, 6, 15, 19, 12, 3], 5).unwrap().coefficients, vec![1, 1, 1, 0, 0, 0]);
        assert!(h_from_f(&[1, 3, 3], 3).is_err());
    }

    #[test]
    fn shelling_of_delta_two_and_three() {
        let (_, l2) = gn(2).unwrap();
        let c2 = gn_facets(2, &l2).unwrap();
        let order2 = MonomialOrder::identity(6);
        let lex = lex_facet_order(&c2, &order2);
        let shown: Vec<Vec<usize>> = lex.iter().map(|&k| c2.suppressed_facets()[k].clone()).collect();
        assert_eq!(shown, vec![vec![l2.x(1), l2.y(1)], vec![l2.x(1), l2.z(2)], vec![l2.y(1), l2.z(2)]]);
        let report = verify_shelling(&c2, &lex).unwrap();
        assert!(report.valid);
        assert_eq!(report.r_values, vec![0, 1, 2]);
        assert_eq!(h_from_shelling(&report, 5).unwrap().coefficients, vec![1, 1, 1, 0, 0, 0]);

        let (_, l3) = gn(3).unwrap();
        let c3 = gn_facets(3, &l3).unwrap();
        let lex3 = lex_facet_order(&c3, &MonomialOrder::identity(9));
        let report3 = verify_shelling(&c3, &lex3).unwrap();
        assert!(report3.valid);
        assert_eq!(report3.restriction_multiset(), vec![1, 1, 2, 2, 2, 3]);
        assert_eq!(h_from_shelling(&report3, 7).unwrap().trimmed(), &[1, 2, 3, 1]);
        // x1 facets come first.
        let facets = c3.facets();
        let split = lex3.iter().position(|&k| !facets[k].contains(&l3.x(1))).unwrap();
        assert!(lex3[split..].iter().all(|&k| facets[k].contains(&l3.y(1))));
    }

    #[test]
    fn non_shellings_and_errors() {
        let disjoint = SimplicialComplex::new(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        for order in [[0, 1], [1, 0]] {
            let r = verify_shelling(&disjoint, &order).unwrap();
            assert!(!r.valid);
            assert_eq!(r.failure_step, Some(2));
            assert!(h_from_shelling(&r, 2).is_err());
        }
        assert_eq!(search_shelling(&disjoint).unwrap(), None);
        let mixed = SimplicialComplex::new(3, &[vec![0, 1], vec![2]]).unwrap();
        assert!(verify_shelling(&mixed, &[0, 1]).is_err());
        let tri = boundary_of_triangle();
        assert!(verify_shelling(&tri, &[0, 0, 1]).is_err());
        assert!(verify_shelling(&tri, &[0, 1]).is_err());
    }

    #[test]
    fn single_facet_shelling() {
        let simplex = SimplicialComplex::new(3, &[vec![0, 1, 2]]).unwrap();
        let lex = lex_facet_order(&simplex, &MonomialOrder::identity(3));
        assert_eq!(lex, vec![0]);
        let r = verify_shelling(&simplex, &lex).unwrap();
        assert_eq!(h_from_shelling(&r, 3).unwrap().trimmed(), &[1]);
    }

    #[test]
    fn exhaustive_search_finds_shelling() {
        let tri = boundary_of_triangle();
        let order = search_shelling(&tri).unwrap().unwrap();
        assert!(verify_shelling(&tri, &order).unwrap().valid);
    }

    #[test]
    fn hvector_helpers() {
        let h = HVector::new(vec![1, 2, 3, 1], 7).unwrap();
        assert_eq!(h.coefficients.len(), 8);
        assert_eq!(h.socle_degree(), 3);
        assert!(!h.is_symmetric());
        assert!(HVector::new(vec![1, 1, 1], 5).unwrap().is_symmetric());
        assert!(HVector::new(vec![1, 1, 1], 1).is_err());
    }
}
