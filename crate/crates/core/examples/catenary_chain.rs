//! The catenary degree of 450 in <11, 36, 39> and a chain realising it.
//!
//! cargo run --example catenary_chain

use catdeg::{
    catenary_degree, factorizations, verify_nchain, DistanceGraph, Factorization, NumericalMonoid,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = NumericalMonoid::new(&[11, 36, 39])?;
    let z = factorizations(&s, 450)?;
    let c = catenary_degree(&z)?;
    println!("c(450) = {c} over {} factorizations", z.len());

    let graph = DistanceGraph::new(&z);
    let from = Factorization::new(vec![6, 2, 8]);
    let to = Factorization::new(vec![24, 3, 2]);
    let chain = graph.find_chain(&from, &to, c)?.expect("c connects Z(450)");
    for pair in chain.windows(2) {
        println!(
            "  {} -> {}  distance {}",
            pair[0],
            pair[1],
            pair[0].distance(&pair[1])?
        );
    }
    println!("valid {c}-chain: {}", verify_nchain(&z, &chain, c)?);
    let shorter = graph.find_chain(&from, &to, c - 1)?;
    println!("a {}-chain exists: {}", c - 1, shorter.is_some());
    Ok(())
}
