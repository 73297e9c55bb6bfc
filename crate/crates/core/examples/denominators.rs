//! A common denominator for the Poincaré series of all modules: `d(t) P_M(t)`
//! becomes a polynomial.

use artinian::resolution::{minimal_free_resolution, module_from_quotient, ResolutionOptions};
use artinian::series::{default_g_max, denominator_divisibility_check, small_square_prediction, IntPoly};
use artinian::{ArtinianLocalAlgebra, PrimeField, Result};

fn main() -> Result<()> {
    let field = PrimeField::new(101)?;
    let r = ArtinianLocalAlgebra::from_inverse_system_text(field, 3, &["Y1^2*Y2 + Y3^2"])?;
    let (_, d) = small_square_prediction(r.edim())?;
    println!("module denominator d(t) = {d}");

    for text in ["x1", "x2", "x3", "x1^2", "x1 + x3"] {
        let m = module_from_quotient(&r, &[r.parse_element(text)?])?;
        let table = minimal_free_resolution(&m, &ResolutionOptions::to_degree(8))?;
        let p = table.poincare_series();
        let g = denominator_divisibility_check(&d, &p, default_g_max(&d, &r).min(7))?;
        let wrong = denominator_divisibility_check(&IntPoly::from_i64(&[1, -1]), &p, 7)?;
        println!("R/({text:<7}) betti {:?}  d*P has degree {g:?}; with 1-t: {wrong:?}", table.betti);
    }
    Ok(())
}
