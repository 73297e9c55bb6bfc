//! Splitting Gorenstein rings with `mu(m^2) < edim` as connected sums.

use artinian::structure::{connected_sum, decompose_connected_sum, decompose_fully, Decomposition};
use artinian::{ArtinianLocalAlgebra, PrimeField, ReductionSearch, Result};

fn main() -> Result<()> {
    let field = PrimeField::new(101)?;
    let search = ReductionSearch::default();
    for f in ["Y1^3 + Y2^2 + Y3^2", "Y1^2*Y2 + Y3^2", "Y1^4"] {
        let n = if f == "Y1^4" { 1 } else { 3 };
        let r = ArtinianLocalAlgebra::from_inverse_system_text(field, n, &[f])?;
        match decompose_connected_sum(&r, &search)? {
            Decomposition::Split(d) => {
                let (sum, _, _) = connected_sum(&d.s, &d.t)?;
                println!(
                    "{f}: S {:?} # T {:?}, claims {:?}, recomposed hilbert {:?}",
                    d.s.hilbert_function(),
                    d.t.hilbert_function(),
                    d.witness.claims,
                    sum.hilbert_function()
                );
                let gens: Vec<String> = d.witness.adjusted_generators.iter().map(|x| r.format_element(x)).collect();
                println!("  adjusted generators {gens:?}, split after {}", d.witness.split_index);
            }
            Decomposition::NotSplit(reason) => println!("{f}: not split ({reason})"),
        }
    }

    let r = ArtinianLocalAlgebra::from_inverse_system_text(field, 4, &["Y1^4 + Y2^2 + Y3^2 + Y4^2"])?;
    let factors = decompose_fully(&r, &search)?;
    let hs: Vec<_> = factors.iter().map(|f| f.hilbert_function().to_vec()).collect();
    println!("Y1^4 + Y2^2 + Y3^2 + Y4^2 splits into {hs:?}");
    Ok(())
}
