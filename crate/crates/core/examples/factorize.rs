//! Factorizations, lengths and the delta set of one element.
//!
//! cargo run --example factorize -- 11 25 29 175

use catdeg::{factorizations, NumericalMonoid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut values: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    if values.len() < 2 {
        values = vec![11, 25, 29, 175];
    }
    let n = values.pop().unwrap();
    let s = NumericalMonoid::new(&values)?;
    let z = factorizations(&s, n)?;
    println!("{s}, n = {n}: {} factorizations", z.len());
    for f in &z {
        println!("  {f}  length {}", f.length());
    }
    if !z.is_empty() {
        println!("length set {:?}", z.length_set()?);
        println!("delta set {:?}", z.delta_set()?);
    }
    Ok(())
}
