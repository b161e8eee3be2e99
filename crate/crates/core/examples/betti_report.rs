//! Betti elements of a monoid with their factorizations, and the sandwich
//! bounds they give for another element.
//!
//! cargo run --example betti_report -- 11 25 29

use catdeg::{betti_elements, betti_via_cini, check_sandwich, NumericalMonoid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut gens: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    if gens.is_empty() {
        gens = vec![11, 25, 29];
    }
    let s = NumericalMonoid::new(&gens)?;
    let report = betti_elements(&s);
    println!(
        "{s}: F = {}, Betti elements searched up to {}",
        s.frobenius(),
        report.search_bound
    );
    for b in &report.betti {
        let z: Vec<String> = b.factorizations.iter().map(|f| f.to_string()).collect();
        println!(
            "  {:>5}  c = {:<3} {} components  Z = {{{}}}",
            b.element,
            b.catenary,
            b.components,
            z.join(", ")
        );
    }
    if s.embedding_dimension() == 3 {
        println!("c_i n_i candidates: {:?}", betti_via_cini(&s)?);
    }
    let n = report.search_bound + 1;
    if let Ok(check) = check_sandwich(&s, &report, n) {
        println!(
            "c({n}) = {} lies in [{:?}, {:?}]: {}",
            check.catenary, check.lower, check.upper, check.ok
        );
    }
    Ok(())
}
