//! Koszul homology of a codepth 3 Gorenstein ring: dimensions, the square
//! of H_1 and Poincaré duality.

use artinian::koszul::{mu_defining_ideal, KoszulComplex};
use artinian::{ArtinianLocalAlgebra, PrimeField, Result};

fn main() -> Result<()> {
    let field = PrimeField::new(101)?;
    for f in ["Y1^3 + Y2^3 + Y3^3", "Y1^2*Y2 + Y3^2", "Y1^2 + Y2^2 + Y3^2"] {
        let r = ArtinianLocalAlgebra::from_inverse_system_text(field, 3, &[f])?;
        let k = KoszulComplex::new(&r)?;
        let h = k.homology_profile();
        println!(
            "{f:<22} H = {:?}  relations {}  H1^2 = 0: {}  duality: {}",
            h.dims,
            mu_defining_ideal(&h),
            k.h1_square_is_zero(&h)?,
            k.poincare_duality_check(&h)?
        );
    }
    Ok(())
}
