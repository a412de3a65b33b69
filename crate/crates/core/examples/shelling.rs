//! The initial complex of G_n: facets, the lex shelling, r-values and the
//! h-vector read off McMullen-style.

use edgering::complex::{f_vector, h_from_shelling, lex_facet_order, verify_shelling};
use edgering::{gn, gn_facets, Result, MonomialOrder, SimplicialComplex};

fn main() -> Result<()> {
    for n in 2..=4 {
        let (g, labels) = gn(n)?;
        let names = g.edge_labels();
        let c = gn_facets(n, &labels)?;
        let order = MonomialOrder::identity(g.num_edges());
        let report = verify_shelling(&c, &lex_facet_order(&c, &order))?;
        assert!(report.valid);
        let h = h_from_shelling(&report, 2 * n + 1)?;
        println!("G_{n}: {} facets, f = {:?}", c.num_facets(), f_vector(&c)?);
        if n == 2 {
            for f in c.suppressed_facets() {
                let f: Vec<&str> = f.iter().map(|&v| names[v].as_str()).collect();
                println!("  facet (cone points dropped): {{{}}}", f.join(", "));
            }
        }
        println!("  r-values {:?} -> h = {:?}", report.r_values, h.trimmed());
    }

    // Two disjoint segments: the second facet meets the first in nothing.
    let disjoint = SimplicialComplex::new(4, &[vec![0, 1], vec![2, 3]])?;
    let report = verify_shelling(&disjoint, &[0, 1])?;
    println!("disjoint segments: valid = {}, fails at step {:?}", report.valid, report.failure_step);
    assert_eq!(report.failure_step, Some(2));
    Ok(())
}

#[test]
fn runs() {
    main().unwrap();
}
