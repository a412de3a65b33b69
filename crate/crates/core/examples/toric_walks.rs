//! Toric ideal generators from primitive even closed walks.

use edgering::toric::{primitive_filter, walk_binomial};
use edgering::{toric_generators, EvenClosedWalk, Graph, Result};

fn main() -> Result<()> {
    // A square with a diagonal, and a pendant triangle on vertex 3.
    let g = Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (3, 4), (4, 5), (3, 5)])?;
    let labels = g.edge_labels();

    let square = EvenClosedWalk::new(&g, vec![0, 1, 2, 3])?;
    let b = walk_binomial(&square).expect("the square gives a nonzero binomial");
    println!("square walk: {}", b.render(&labels));
    assert!(b.is_relation_of(&g));

    // Consecutive edges must share a vertex.
    assert!(EvenClosedWalk::new(&g, vec![0, 2, 1, 3]).is_err());

    let gens = toric_generators(&g, 2 * g.num_vertices())?;
    println!("{} primitive binomials:", gens.len());
    for b in &gens {
        println!("  {}", b.render(&labels));
        assert!(b.is_relation_of(&g) && b.is_homogeneous());
    }
    // Filtering is idempotent on an already primitive set.
    assert_eq!(primitive_filter(&gens), gens);
    Ok(())
}

#[test]
fn runs() {
    main().unwrap();
}
