//! Artinian quotients given by ideal generators, and quotients of those.

use artinian::{ArtinianLocalAlgebra, PrimeField, Result};

fn main() -> Result<()> {
    let field = PrimeField::new(101)?;
    let r = ArtinianLocalAlgebra::from_ideal(field, 2, &["x1^2 - x2^3", "x1*x2"], 20)?;
    println!("R = k[x1,x2]/(x1^2 - x2^3, x1 x2)");
    println!("  hilbert {:?}, gorenstein {}", r.hilbert_function(), r.is_gorenstein());

    let q = r.quotient_by_power(2)?;
    println!("R/m^2:    hilbert {:?}, socle dim {}", q.hilbert_function(), q.socle_dim());

    let s = r.quotient_by_socle()?;
    println!("R/soc R:  hilbert {:?}, socle dim {}", s.hilbert_function(), s.socle_dim());

    let x2 = r.parse_element("x2")?;
    let t = r.quotient_by_ideal(std::slice::from_ref(&x2))?;
    println!("R/(x2):   hilbert {:?}", t.hilbert_function());
    println!("(0 : x2) has dimension {}", r.annihilator(&x2).cols());

    match ArtinianLocalAlgebra::from_ideal(field, 2, &["x1^2"], 10) {
        Err(e) => println!("k[x1,x2]/(x1^2): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
