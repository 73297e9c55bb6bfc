//! Build `R = k[x1,x2,x3]/ann(Y1^2 Y2 + Y3^2)` from its Macaulay inverse
//! system and print its basic invariants.

use artinian::{ArtinianLocalAlgebra, PrimeField, Result};

fn main() -> Result<()> {
    let field = PrimeField::new(101)?;
    let r = ArtinianLocalAlgebra::from_inverse_system_text(field, 3, &["Y1^2*Y2 + Y3^2"])?;

    println!("length            {}", r.length());
    println!("hilbert function  {:?}", r.hilbert_function());
    println!("loewy length      {}", r.loewy_length());
    println!("edim              {}", r.edim());
    println!("basis             {}", r.basis_labels().join(" "));
    println!("socle             {}", r.format_element(&r.socle().column(0)));

    // x3^2 and x1^2 x2 both map to the socle generator
    let a = r.parse_element("x3^2")?;
    let b = r.parse_element("x1^2*x2")?;
    println!("x3^2 = {}, x1^2*x2 = {}", r.format_element(&a), r.format_element(&b));

    let c = r.classify(None);
    println!(
        "gorenstein {} / stretched {} / almost stretched {} / compressed {}",
        c.is_gorenstein, c.is_stretched, c.is_almost_stretched, c.is_compressed
    );
    Ok(())
}
