//! Graph structure behind the edge-ring theory: bipartiteness, regular
//! vertices, fundamental sets and the odd cycle condition.

use edgering::graph::{chordless_odd_cycles, regular_vertices, fundamental_sets};
use edgering::{gn, is_bipartite, satisfies_odd_cycle_condition, Bipartiteness, Graph, OddCycleCheck, Result};

fn main() -> Result<()> {
    let (g, labels) = gn(3)?;
    let names = |vs: &[usize]| vs.iter().map(|&v| g.vertex_label(v)).collect::<Vec<_>>().join(" ");
    println!("G_3: {} vertices, {} edges", g.num_vertices(), g.num_edges());
    println!("regular vertices: {}", names(&regular_vertices(&g)));
    for t in fundamental_sets(&g) {
        println!("fundamental set: {{{}}}", names(&t));
    }
    assert_eq!(regular_vertices(&g).len(), 2 * labels.n);
    assert_eq!(fundamental_sets(&g).len(), 1 + (1 << labels.n));

    // A 5-cycle with a pendant path is not bipartite; the witness is the cycle.
    let c5 = Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5)])?;
    if let Bipartiteness::NotBipartite { odd_cycle } = is_bipartite(&c5) {
        println!("odd cycle witness: {odd_cycle:?}");
        assert_eq!(odd_cycle.len(), 5);
    }

    // Two triangles joined through a path vertex violate the odd cycle condition.
    let joined = Graph::new(7, vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)])?;
    println!("chordless odd cycles: {:?}", chordless_odd_cycles(&joined));
    match satisfies_odd_cycle_condition(&joined) {
        OddCycleCheck::Violated { first, second } => println!("violated by {first:?} and {second:?}"),
        OddCycleCheck::Satisfied => unreachable!("the triangles are not bridged"),
    }
    // Adding the bridge {0, 5} repairs it.
    let bridged = Graph::new(7, vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6), (0, 5)])?;
    assert!(satisfies_odd_cycle_condition(&bridged).holds());
    println!("with a bridge edge: satisfied");
    Ok(())
}

#[test]
fn runs() {
    main().unwrap();
}
