//! Minimal free resolutions: Betti numbers of the residue field and of a
//! cyclic module, and the first differentials.

use artinian::resolution::{betti_of_k, minimal_free_resolution, module_from_quotient, ResolutionOptions};
use artinian::{ArtinianLocalAlgebra, PrimeField, Result};

fn main() -> Result<()> {
    let field = PrimeField::new(101)?;
    let r = ArtinianLocalAlgebra::from_inverse_system_text(field, 3, &["Y1^2*Y2 + Y3^2"])?;

    let k = betti_of_k(&r, 7)?;
    println!("beta(k)      = {:?}", k.betti);

    for (j, col) in k.differential(2).iter().enumerate().take(3) {
        let entries: Vec<String> = col.iter().map(|e| r.format_element(e)).collect();
        println!("d_2 row {j}: [{}]", entries.join(", "));
    }

    let x1 = r.parse_element("x1")?;
    let m = module_from_quotient(&r, &[x1])?;
    let table = minimal_free_resolution(&m, &ResolutionOptions::to_degree(7))?;
    println!("beta(R/(x1)) = {:?}  (dim R/(x1) = {})", table.betti, m.dim());

    let small = ArtinianLocalAlgebra::from_ideal(field, 1, &["x1^3"], 10)?;
    println!("k[x]/(x^3):  beta(k) = {:?}", betti_of_k(&small, 6)?.betti);
    Ok(())
}
