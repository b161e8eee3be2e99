//! The three explicit families, with predictions checked against a scan.
//!
//! cargo run --example families

use std::collections::BTreeSet;

use catdeg::verify::default_window;
use catdeg::{
    arithmetic_family, betti_elements, catenary_degree_of, catenary_set_scan, largecat_family,
    unique_betti_family, FamilyPrediction,
};

fn report(p: &FamilyPrediction) -> Result<(), Box<dyn std::error::Error>> {
    let s = &p.monoid;
    let scan = catenary_set_scan(s, default_window(s));
    let got: BTreeSet<u64> = scan.cset.iter().copied().collect();
    let agrees = if p.cset_is_exact {
        got == p.predicted_cset_members
    } else {
        p.predicted_cset_members.is_subset(&got)
    };
    println!("{} = {s}", p.name);
    println!(
        "  catenary set {got:?}, predicted {:?} ({}): {agrees}",
        p.predicted_cset_members,
        if p.cset_is_exact { "exact" } else { "subset" }
    );
    if !p.predicted_betti.is_empty() {
        println!("  Betti {:?}", betti_elements(s).elements());
    }
    for e in &p.special_elements {
        println!(
            "  c({}) = {}, predicted {}",
            e.element,
            catenary_degree_of(s, e.element)?,
            e.catenary
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    report(&arithmetic_family(4, 5)?)?;
    report(&largecat_family(5)?)?;
    report(&unique_betti_family(&[2, 3, 5])?)?;
    Ok(())
}
