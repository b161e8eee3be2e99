//! Delta sets of Betti elements and of the monoid over a window.
//!
//! cargo run --example delta_sets

use catdeg::verify::default_window;
use catdeg::{betti_elements, delta_set_monoid, NumericalMonoid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = NumericalMonoid::new(&[30, 52, 55])?;
    for b in &betti_elements(&s).betti {
        println!(
            "{}: lengths {:?}, delta {:?}",
            b.element,
            b.factorizations.length_set()?,
            b.factorizations.delta_set()?
        );
    }
    let window = default_window(&s);
    println!(
        "delta set of {s} on [0, {window}]: {:?}",
        delta_set_monoid(&s, window)
    );
    Ok(())
}
