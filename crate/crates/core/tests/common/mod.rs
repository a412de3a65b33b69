//! Seeded corpus of small graphs satisfying the odd cycle condition.

#![allow(dead_code)]

use edgering::{
    h_polynomial_pipeline, is_bipartite, satisfies_odd_cycle_condition, Graph, MonomialOrder, PipelineOptions,
    PipelineReport,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use std::ops::{Range, RangeInclusive};

pub const CORPUS_SEED: u64 = 0x5eed_ed9e;

/// Connected graph on 4..=8 vertices: a random spanning tree plus random
/// extra edges.
pub fn random_connected_graph(rng: &mut StdRng) -> Graph {
    random_graph(rng, 4..=8, 0.15..0.6)
}

pub fn random_graph(rng: &mut StdRng, vertices: RangeInclusive<usize>, density: Range<f64>) -> Graph {
    let n = rng.random_range(vertices);
    let density = rng.random_range(density);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("spanning tree keeps the graph connected")
}

pub fn random_occ_graph(rng: &mut StdRng) -> Graph {
    loop {
        let g = random_connected_graph(rng);
        if !is_bipartite(&g).is_bipartite() && satisfies_odd_cycle_condition(&g).holds() {
            return g;
        }
    }
}

/// Runs the pipeline under the identity order, then under random orders,
/// until the initial ideal is squarefree.
pub fn squarefree_pipeline(g: &Graph, rng: &mut StdRng, attempts: usize) -> Option<(MonomialOrder, PipelineReport)> {
    let mut priority: Vec<usize> = (0..g.num_edges()).collect();
    for attempt in 0..attempts {
        if attempt > 0 {
            priority.shuffle(rng);
        }
        let order = MonomialOrder::new(priority.clone()).unwrap();
        let mut opts = PipelineOptions::for_graph(g);
        opts.max_walk_length = 2 * g.num_vertices();
        opts.order = Some(order.clone());
        match h_polynomial_pipeline(g, &opts) {
            Ok(r) => return Some((order, r)),
            Err(edgering::Error::Unsupported(_)) => continue,
            Err(e) => panic!("pipeline failed on {}: {e}", g.to_json()),
        }
    }
    None
}

pub struct CorpusEntry {
    pub graph: Graph,
    pub order: MonomialOrder,
    pub report: PipelineReport,
}

/// `count` graphs with a squarefree initial ideal, plus the number of
/// sampled graphs skipped because no tried order gave one.
pub fn corpus(count: usize) -> (Vec<CorpusEntry>, usize) {
    let mut rng = StdRng::seed_from_u64(CORPUS_SEED);
    let mut out = Vec::new();
    let mut skipped = 0;
    while out.len() < count {
        let graph = random_occ_graph(&mut rng);
        match squarefree_pipeline(&graph, &mut rng, 12) {
            Some((order, report)) => out.push(CorpusEntry { graph, order, report }),
            None => skipped += 1,
        }
    }
    (out, skipped)
}
