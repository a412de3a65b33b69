//! Buchberger's algorithm on the G_n generators, and what goes wrong when a
//! generator is missing.

use edgering::{buchberger, gn, gn_generators, initial_ideal, is_groebner_basis, MonomialOrder, Result};

fn main() -> Result<()> {
    run(std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3))
}

fn run(n: usize) -> Result<()> {
    let (g, labels) = gn(n)?;
    let names = g.edge_labels();
    let order = MonomialOrder::identity(g.num_edges());
    println!("order: {}", names.join(" < "));

    let gens = gn_generators(n, &labels)?;
    let gb = buchberger(&gens, &order)?;
    println!("reduced Gröbner basis of I(G_{n}):");
    for b in &gb {
        println!("  {}", b.render(&names));
    }
    let ideal = initial_ideal(&gb, &order)?;
    let rendered: Vec<String> = ideal.generators.iter().map(|m| m.render(&names)).collect();
    println!("initial ideal: ({})", rendered.join(", "));
    assert_eq!(gb.len(), n * (n - 1) / 2);
    assert!(ideal.is_squarefree());

    // Drop the last generator: Buchberger's criterion now fails, and the
    // remainder shows the missing binomial times a variable.
    let partial = &gens[..gens.len() - 1];
    if let Some(fail) = is_groebner_basis(partial, &order)? {
        println!(
            "without {}: S({}, {}) leaves {}",
            gens[gens.len() - 1].render(&names),
            fail.i,
            fail.j,
            fail.remainder.render(&names)
        );
    }
    Ok(())
}

#[test]
fn runs() {
    run(3).unwrap();
    run(4).unwrap();
}
