//! Minimal zero-sum sequences over Z_n and the witnesses whose catenary
//! degree is each value in {2, ..., n}.
//!
//! cargo run --example block_monoid -- 5

use catdeg::{
    atoms, catenary_degree, catenary_set_sample, factorizations_block, theorem_fullset_witness,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = match std::env::args().nth(1) {
        Some(arg) => arg.parse()?,
        None => 5,
    };
    let table = atoms(n)?;
    println!("B(Z_{n}) has {} atoms", table.len());
    for atom in table.atoms().iter().take(8) {
        println!("  {atom}");
    }
    for j in 2..=n {
        let a = theorem_fullset_witness(n, j)?;
        let z = factorizations_block(&table, &a)?;
        println!(
            "j = {j}: A = {a}, |Z(A)| = {}, c(A) = {}",
            z.len(),
            catenary_degree(&z)?
        );
    }
    let length = 2 * n as u64;
    println!(
        "catenary degrees of sequences up to length {length}: {:?}",
        catenary_set_sample(n, length)?
    );
    Ok(())
}
