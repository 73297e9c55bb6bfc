//! Fibre products and connected sums of local rings.

use artinian::resolution::betti_of_k;
use artinian::structure::{connected_sum, fibre_product};
use artinian::{ArtinianLocalAlgebra, PrimeField, Result};

fn main() -> Result<()> {
    let field = PrimeField::new(101)?;
    let s = ArtinianLocalAlgebra::from_inverse_system_text(field, 1, &["Y1^3"])?;
    let t = ArtinianLocalAlgebra::from_inverse_system_text(field, 1, &["Y1^2"])?;

    let fp = fibre_product(&s, &t)?;
    println!(
        "S x_k T: hilbert {:?}, socle dim {}, beta(k) {:?}",
        fp.hilbert_function(),
        fp.socle_dim(),
        betti_of_k(&fp, 6)?.betti
    );

    let (cs, _, _) = connected_sum(&s, &t)?;
    println!("S # T:   hilbert {:?}, gorenstein {}", cs.hilbert_function(), cs.is_gorenstein());

    let direct = ArtinianLocalAlgebra::from_inverse_system_text(field, 2, &["Y1^3 + Y2^2"])?;
    println!("ann(Y1^3 + Y2^2): hilbert {:?}", direct.hilbert_function());
    Ok(())
}
