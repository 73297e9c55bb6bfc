//! Serre's upper bound for Poincaré series, and Golod evidence.

use artinian::koszul::KoszulComplex;
use artinian::resolution::{betti_of_k, serre_inequality_check};
use artinian::series::golod_series;
use artinian::{ArtinianLocalAlgebra, Element, PrimeField, Result};

fn main() -> Result<()> {
    let field = PrimeField::new(101)?;
    let r = ArtinianLocalAlgebra::from_inverse_system_text(field, 3, &["Y1^2*Y2 + Y3^2"])?;

    let soc = r.socle().columns();
    let m: Vec<Element> = (1..r.length()).map(|u| r.basis_element(u)).collect();
    for (name, ideal) in [("R/soc R", soc), ("k", m)] {
        let rep = serre_inequality_check(&r, &ideal, 5)?;
        println!("{name:<8} lhs {:?}", rep.lhs.coeffs());
        println!("{:<8} rhs {:?}  equality {}", "", rep.rhs.coeffs(), rep.equality);
    }

    for (label, ring) in [
        ("k[x,y]/(x^2,xy,y^2)", ArtinianLocalAlgebra::from_ideal(field, 2, &["x1^2", "x1*x2", "x2^2"], 10)?),
        ("ann(Y1^2 + Y2^2 + Y3^2)", ArtinianLocalAlgebra::from_inverse_system_text(field, 3, &["Y1^2 + Y2^2 + Y3^2"])?),
    ] {
        let profile = KoszulComplex::new(&ring)?.homology_profile();
        let bound = golod_series(ring.edim(), &profile).expand(6);
        let betti = betti_of_k(&ring, 6)?.poincare_series();
        println!("{label}: golod bound {:?}, betti {:?}", bound.coeffs(), betti.coeffs());
    }
    Ok(())
}
