//! Exact rational matrices: Coxeter matrix from a Cartan matrix, minimal
//! polynomials, and permutation matrices.
//!
//! cargo run --example exact_linalg

use rowcox::linalg::{coxeter_from_cartan, minimal_polynomial, PermutationMatrix, RationalMatrix};
use rowcox::poset::{order_ideals, Poset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lattice = order_ideals(&Poset::chain(2))?;
    let (zeta, mobius) = lattice.zeta_and_mobius();
    println!("zeta of a 3-chain:\n{zeta:?}");
    println!("mobius:\n{mobius:?}");
    assert!(zeta.mul_ok(&mobius).is_identity());

    let coxeter = coxeter_from_cartan(&zeta)?;
    println!("C = -M^-1 M^T:\n{coxeter:?}");
    println!("minimal polynomial of C: {}", minimal_polynomial(&coxeter)?);

    let rho = lattice.rowmotion_matrix();
    let product = rho.inverse_times(&coxeter)?;
    println!("rho^-1 C:\n{product:?}");
    println!("minimal polynomial of rho^-1 C: {}", minimal_polynomial(&product)?);

    let half = RationalMatrix::from_rows(vec![vec!["1/2".parse()?, "-3".parse()?], vec!["0".parse()?, "2".parse()?]])?;
    println!("inverse of a rational matrix:\n{:?}", half.inverse()?);
    let swap = PermutationMatrix::new(vec![1, 0])?;
    println!("P A P^-1:\n{:?}", swap.times_inverse(&swap.to_matrix().mul_ok(&half))?);
    Ok(())
}
