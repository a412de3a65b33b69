//! Minimal generators of the canonical module of k[G_n], the Cohen–Macaulay
//! type, e_tilde and the (almost) Gorenstein verdicts.

use edgering::{alpha_witness_checks, canonical_generators, closed_form_h, gn, verdicts, Family, Result};

fn main() -> Result<()> {
    for n in 2..=5 {
        let (g, _) = gn(n)?;
        let h = closed_form_h(Family::Gn { n })?;
        let r = canonical_generators(&g, &h, 2 * n as u64 + 1)?;
        let v = verdicts(&g, &r, &h)?;
        println!(
            "G_{n}: h = {:?}, r = {}, e_tilde = {}, gorenstein = {}, almost gorenstein = {}",
            h.trimmed(),
            r.cm_type,
            r.e_tilde,
            v.gorenstein,
            v.almost_gorenstein
        );
        for p in &r.generators {
            println!("  degree {}: {:?}", p.degree, p.coords);
        }
        for j in 1..n {
            assert!(alpha_witness_checks(n, j)?.passed());
        }
        assert_eq!(r.cm_type, n - 1);
        assert!(v.almost_gorenstein && v.gorenstein == (n == 2));
    }
    Ok(())
}

#[test]
fn runs() {
    main().unwrap();
}
