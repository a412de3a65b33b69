//! Hilbert functions of edge rings: the initial-complex pipeline, a
//! brute-force count of the affine semigroup, and closed-form h-vectors of
//! the built-in families.

use std::collections::HashSet;

use serde::Serialize;

use crate::complex::{
    complex_from_squarefree_ideal, f_vector, h_from_f, h_from_shelling, lex_facet_order, search_shelling,
    verify_shelling, HVector, ShellingReport, SimplicialComplex, MAX_EXHAUSTIVE_SHELLING_FACETS,
};
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Family, Graph};
use crate::groebner::{buchberger, initial_ideal, MonomialIdeal, MonomialOrder};
use crate::toric::{toric_generators_guarded, Binomial, DEFAULT_WALK_STEP_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HilbertSource {
    Shelling,
    FVector,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub h: HVector,
    pub dim: usize,
    pub source: HilbertSource,
}

/// Krull dimension of `k[G]`: `|V|` for non-bipartite graphs, `|V| - 1`
/// for bipartite ones.
pub fn krull_dimension(g: &Graph) -> usize {
    if is_bipartite(g).is_bipartite() {
        g.num_vertices() - 1
    } else {
        g.num_vertices()
    }
}

/// Walk-length bound that covers every primitive walk of the family.
pub fn family_walk_length(family: Family) -> usize {
    match family {
        Family::Gn { .. } => 6,
        Family::CompleteBipartite { .. } | Family::Complete { .. } => 4,
    }
}

/// Default bound for an arbitrary graph: `2|V|`, which reaches every
/// primitive walk.
pub fn generic_walk_length(g: &Graph) -> usize {
    crate::toric::default_walk_length(g)
}

#[derive(Debug, Clone)]
pub struct PipelineOptions {
    pub max_walk_length: usize,
    pub order: Option<MonomialOrder>,
    pub walk_step_limit: u64,
    /// Fall back to an exhaustive shelling search when the lex order fails
    /// and the complex has at most eight facets.
    pub exhaustive_shelling: bool,
    /// Set when the walk bound is known to reach every primitive walk.
    pub bound_is_complete: bool,
}

impl PipelineOptions {
    pub fn for_graph(g: &Graph) -> Self {
        PipelineOptions {
            max_walk_length: generic_walk_length(g),
            order: None,
            walk_step_limit: DEFAULT_WALK_STEP_LIMIT,
            exhaustive_shelling: false,
            bound_is_complete: true,
        }
    }

    pub fn for_family(family: Family) -> Self {
        PipelineOptions {
            max_walk_length: family_walk_length(family),
            order: None,
            walk_step_limit: DEFAULT_WALK_STEP_LIMIT,
            exhaustive_shelling: false,
            bound_is_complete: true,
        }
    }
}

/// Every intermediate object of the h-polynomial computation.
#[derive(Debug, Clone, Serialize)]
pub struct PipelineReport {
    pub generators: Vec<Binomial>,
    pub groebner_basis: Vec<Binomial>,
    pub initial_ideal: MonomialIdeal,
    pub complex: SimplicialComplex,
    pub f_vector: Vec<u64>,
    pub h_from_f: HVector,
    pub shelling: Option<ShellingReport>,
    pub h_from_shelling: Option<HVector>,
    pub dim: usize,
    pub sources_agree: bool,
    pub warnings: Vec<String>,
}

impl PipelineReport {
    pub fn h(&self) -> &HVector {
        &self.h_from_f
    }

    pub fn hilbert_data(&self) -> Vec<HilbertData> {
        let mut out = vec![HilbertData {
            h: self.h_from_f.clone(),
            dim: self.dim,
            source: HilbertSource::FVector,
        }];
        if let Some(h) = &self.h_from_shelling {
            out.push(HilbertData {
                h: h.clone(),
                dim: self.dim,
                source: HilbertSource::Shelling,
            });
        }
        out
    }
}

/// Toric generators, reduced Gröbner basis, initial ideal, initial complex,
/// then the h-vector from the f-vector and, when the lex facet order is a
/// shelling, from the r-values as well.
pub fn h_polynomial_pipeline(g: &Graph, opts: &PipelineOptions) -> Result<PipelineReport> {
    let order = opts
        .order
        .clone()
        .unwrap_or_else(|| MonomialOrder::identity(g.num_edges()));
    if order.num_vars() != g.num_edges() {
        return Err(Error::InvalidParameter(format!(
            "order has {} variables, graph has {} edges",
            order.num_vars(),
            g.num_edges()
        )));
    }
    let mut warnings = Vec::new();
    let generators = toric_generators_guarded(g, opts.max_walk_length, opts.walk_step_limit)?;
    if !opts.bound_is_complete && opts.max_walk_length < 2 * g.num_vertices() {
        warnings.push(format!(
            "walk length bound {} is below 2|V| = {}; generators are complete only if no longer primitive walk exists",
            opts.max_walk_length,
            2 * g.num_vertices()
        ));
    }
    let groebner_basis = buchberger(&generators, &order)?;
    let ideal = initial_ideal(&groebner_basis, &order)?;
    if !ideal.is_squarefree() {
        return Err(Error::Unsupported(
            "initial ideal is not squarefree; choose another variable order".into(),
        ));
    }
    let complex = complex_from_squarefree_ideal(&ideal)?;
    let dim = krull_dimension(g);
    let complex_dim = (complex.dim() + 1) as usize;
    if complex_dim != dim {
        return Err(Error::InvariantViolation(format!(
            "initial complex has dimension {complex_dim} but the edge ring has Krull dimension {dim}"
        )));
    }
    let f = f_vector(&complex)?;
    let h_f = h_from_f(&f, dim)?;

    let mut shelling = None;
    let mut h_shell = None;
    if complex.is_pure() {
        let mut report = verify_shelling(&complex, &lex_facet_order(&complex, &order))?;
        if !report.valid && opts.exhaustive_shelling && complex.num_facets() <= MAX_EXHAUSTIVE_SHELLING_FACETS {
            if let Some(found) = search_shelling(&complex)? {
                report = verify_shelling(&complex, &found)?;
            }
        }
        if report.valid {
            h_shell = Some(h_from_shelling(&report, dim)?);
        } else {
            warnings.push(format!(
                "lex facet order is not a shelling (fails at step {})",
                report.failure_step.unwrap_or(0)
            ));
        }
        shelling = Some(report);
    } else {
        warnings.push("initial complex is not pure".into());
    }
    if let Some(h) = &h_shell {
        if *h != h_f {
            return Err(Error::InvariantViolation(format!(
                "h-vector from shelling {:?} differs from f-vector route {:?}",
                h.trimmed(),
                h_f.trimmed()
            )));
        }
    }
    Ok(PipelineReport {
        generators,
        groebner_basis,
        initial_ideal: ideal,
        complex,
        f_vector: f,
        h_from_f: h_f,
        shelling,
        h_from_shelling: h_shell,
        dim,
        sources_agree: true,
        warnings,
    })
}

fn choose(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim_k R_deg = sum_i h_i * C(deg - i + d - 1, d - 1)`.
pub fn hilbert_function_value(h: &HVector, deg: usize) -> u128 {
    let d = h.dim as u128;
    let total: i128 = h
        .coefficients
        .iter()
        .enumerate()
        .filter(|(i, _)| *i <= deg)
        .map(|(i, &hi)| {
            let k = (deg - i) as u128;
            let count = if d == 0 {
                u128::from(k == 0)
            } else {
                choose(k + d - 1, d - 1)
            };
            hi as i128 * count as i128
        })
        .sum();
    total.max(0) as u128
}

pub const DEFAULT_SEMIGROUP_CAP: usize = 20_000_000;

/// Number of distinct vectors `sum rho(e)` over multisets of `deg` edges,
/// i.e. the degree-`deg` piece of `k[G]`.
pub fn semigroup_count(g: &Graph, deg: usize) -> Result<u64> {
    semigroup_count_capped(g, deg, DEFAULT_SEMIGROUP_CAP)
}

pub fn semigroup_count_capped(g: &Graph, deg: usize, cap: usize) -> Result<u64> {
    let mut layer: HashSet<Vec<u16>> = HashSet::from([vec![0u16; g.num_vertices()]]);
    for _ in 0..deg {
        let mut next = HashSet::with_capacity(layer.len() * 2);
        for point in &layer {
            for e in g.edges() {
                let mut p = point.clone();
                p[e[0]] += 1;
                p[e[1]] += 1;
                next.insert(p);
            }
            if next.len() > cap {
                return Err(Error::ResourceGuard(format!(
                    "semigroup layer exceeds {cap} points"
                )));
            }
        }
        layer = next;
    }
    Ok(layer.len() as u64)
}

/// Closed-form h-vectors: `K_{m,n}`, `K_m`, and `(1+t)^n - t` for `G_n`.
pub fn closed_form_h(family: Family) -> Result<HVector> {
    let binom = |n: usize, k: usize| choose(n as u128, k as u128) as i64;
    match family {
        Family::CompleteBipartite { m, n } => {
            if m < 1 || n < 1 {
                return Err(Error::InvalidParameter("K_{m,n} needs m, n >= 1".into()));
            }
            let h = (0..=m.min(n)).map(|i| binom(m - 1, i) * binom(n - 1, i)).collect();
            HVector::new(h, m + n - 1)
        }
        Family::Complete { m } => {
            if m < 3 {
                return Err(Error::InvalidParameter("K_m needs m >= 3".into()));
            }
            let mut h = vec![1, (m * (m - 3) / 2) as i64];
            h.extend((2..=m / 2).map(|i| binom(m, 2 * i)));
            HVector::new(h, m)
        }
        Family::Gn { n } => {
            if n < 2 {
                return Err(Error::InvalidParameter("G_n needs n >= 2".into()));
            }
            let mut h: Vec<i64> = (0..=n).map(|i| binom(n, i)).collect();
            h[1] -= 1;
            HVector::new(h, 2 * n + 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, complete, gn};

    fn pipeline(family: Family) -> PipelineReport {
        let (g, _) = build_family(family).unwrap();
        h_polynomial_pipeline(&g, &PipelineOptions::for_family(family)).unwrap()
    }

    #[test]
    fn pipeline_examples() {
        let r = pipeline(Family::Gn { n: 3 });
        assert_eq!(r.h().trimmed(), &[1, 2, 3, 1]);
        assert_eq!(r.dim, 7);
        assert!(r.h_from_shelling.is_some());

        let r = pipeline(Family::CompleteBipartite { m: 2, n: 2 });
        assert_eq!((r.h().trimmed(), r.dim), (&[1, 1][..], 3));

        let r = pipeline(Family::Complete { m: 4 });
        assert_eq!((r.h().trimmed(), r.dim), (&[1, 2, 1][..], 4));
    }

    #[test]
    fn hilbert_values() {
        let h = HVector::new(vec![1, 1, 1], 5).unwrap();
        assert_eq!(hilbert_function_value(&h, 0), 1);
        assert_eq!(hilbert_function_value(&h, 1), 6);
        assert_eq!(hilbert_function_value(&h, 2), 21);
        let point = HVector::new(vec![1], 0).unwrap();
        assert_eq!(hilbert_function_value(&point, 0), 1);
        assert_eq!(hilbert_function_value(&point, 3), 0);
    }

    #[test]
    fn semigroup_counts() {
        let (g2, _) = gn(2).unwrap();
        assert_eq!(semigroup_count(&g2, 0).unwrap(), 1);
        assert_eq!(semigroup_count(&g2, 1).unwrap(), 6);
        assert_eq!(semigroup_count(&g2, 2).unwrap(), 21);
        assert_eq!(semigroup_count(&complete(3).unwrap(), 2).unwrap(), 6);
        assert!(matches!(semigroup_count_capped(&g2, 4, 10), Err(Error::ResourceGuard(_))));
    }

    #[test]
    fn closed_forms() {
        let h = |f| closed_form_h(f).unwrap().trimmed().to_vec();
        assert_eq!(h(Family::CompleteBipartite { m: 2, n: 3 }), vec![1, 2]);
        assert_eq!(h(Family::Complete { m: 5 }), vec![1, 5, 5]);
        assert_eq!(h(Family::Complete { m: 3 }), vec![1]);
        assert_eq!(h(Family::Gn { n: 4 }), vec![1, 3, 6, 4, 1]);
        assert!(closed_form_h(Family::Gn { n: 1 }).is_err());
    }

    #[test]
    fn krull_dimensions() {
        assert_eq!(krull_dimension(&gn(3).unwrap().0), 7);
        assert_eq!(krull_dimension(&crate::graph::complete_bipartite(2, 3).unwrap()), 4);
    }
}
