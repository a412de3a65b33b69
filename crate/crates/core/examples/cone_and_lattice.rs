//! The edge cone by inequalities, membership tests, the even-sum lattice and
//! the extreme rays recovered from the inequalities.

use edgering::cone::{extreme_rays, InequalityTag};
use edgering::{cone_inequalities, gn, lattice_member, membership, Membership, Result};

fn main() -> Result<()> {
    let (g, labels) = gn(2)?;
    let cone = cone_inequalities(&g);
    for q in &cone.inequalities {
        let tag = match &q.tag {
            InequalityTag::RegularVertex(v) => format!("regular vertex {}", g.vertex_label(*v)),
            InequalityTag::FundamentalSet(t) => {
                let t: Vec<String> = t.iter().map(|&v| g.vertex_label(v)).collect();
                format!("fundamental set {{{}}}", t.join(", "))
            }
        };
        println!("{:?} . x >= 0   ({tag})", q.coefficients);
    }
    assert_eq!(cone.inequalities.len(), 9);

    let alpha = edgering::alpha_vector(&labels, 1);
    println!("alpha_1 = {alpha:?}: {:?}, lattice: {}", membership(&cone, &alpha)?, lattice_member(&g, &alpha)?);
    assert_eq!(membership(&cone, &alpha)?, Membership::Interior);
    let x1 = edgering::toric::incidence_vector(&g, labels.x(1))?;
    assert_eq!(membership(&cone, &x1)?, Membership::Boundary);
    let mut unit = vec![0; g.num_vertices()];
    unit[labels.w] = 1;
    assert!(!lattice_member(&g, &unit)?);

    let rays = extreme_rays(&cone, 1_000_000)?;
    println!("{} extreme rays, all edge vectors:", rays.len());
    for r in &rays {
        println!("  {r:?}");
    }
    assert_eq!(rays.len(), g.num_edges());
    Ok(())
}

#[test]
fn runs() {
    main().unwrap();
}
