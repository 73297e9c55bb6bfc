//! Closed-form Poincaré series predictions checked against computed Betti numbers.

use artinian::koszul::KoszulComplex;
use artinian::resolution::betti_of_k;
use artinian::series::{cross_check, predict};
use artinian::{ArtinianLocalAlgebra, PrimeField, Result};

fn main() -> Result<()> {
    let field = PrimeField::new(101)?;
    let rings: [(usize, &str); 4] =
        [(3, "Y1^2*Y2 + Y3^2"), (3, "Y1^3 + Y2^3 + Y3^3"), (3, "Y1^2 + Y2^2 + Y3^2"), (1, "Y1^4")];
    for (n, f) in rings {
        let r = ArtinianLocalAlgebra::from_inverse_system_text(field, n, &[f])?;
        let profile = KoszulComplex::new(&r)?.homology_profile();
        let class = r.classify(Some(&profile));
        let preds = predict(&r, &class, Some(&profile));
        let betti = betti_of_k(&r, 6)?.poincare_series();
        println!("{f}");
        for p in &preds {
            let ok = p.series.expand(6) == betti;
            println!("  {:<28} {}  matches to degree 6: {ok}", p.label, p.series);
        }
        println!("  predictions agree with each other: {}", cross_check(&preds).is_empty());
    }
    Ok(())
}
