//! Exact linear algebra over F_p.

use artinian::linalg::{intersect_subspaces, EchelonBasis};
use artinian::{FpMatrix, PrimeField, Result};

fn main() -> Result<()> {
    let f = PrimeField::new(7)?;
    let a = FpMatrix::from_rows(f, &[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 0]])?;
    let (rref, pivots) = a.rref();
    println!("rref {rref:?}pivots {pivots:?}, rank {}", a.rank());
    let k = a.kernel_basis();
    println!("kernel basis {k:?}A * K is zero: {}", a.mul(&k)?.is_zero());

    let b = FpMatrix::from_rows(f, &[vec![1, 0], vec![0, 1], vec![0, 0], vec![0, 0]])?;
    let c = FpMatrix::from_rows(f, &[vec![1, 1], vec![1, 0], vec![0, 0], vec![0, 1]])?;
    println!("intersection {:?}", intersect_subspaces(&b, &c)?);

    let mut e = EchelonBasis::new(f, 3);
    for v in [[1, 2, 3], [2, 4, 6], [0, 1, 1]] {
        println!("insert {v:?}: grew = {}", e.insert(&v));
    }
    let p = PrimeField::new(2_147_483_647)?;
    println!("in F_(2^31-1): 3^-1 = {}", p.inv(3));
    Ok(())
}
