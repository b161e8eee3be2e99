//! Catenary degrees over a window, written as CSV and SVG.
//!
//! cargo run --example catenary_scan -- 11 25 29

use catdeg::output::{scan_records, to_csv, to_svg};
use catdeg::verify::default_window;
use catdeg::{betti_elements, catenary_set_scan, NumericalMonoid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut gens: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    if gens.is_empty() {
        gens = vec![11, 25, 29];
    }
    let s = NumericalMonoid::new(&gens)?;
    let window = default_window(&s);
    let scan = catenary_set_scan(&s, window);
    let report = betti_elements(&s);
    println!("{s} on [0, {window}]: catenary set {:?}", scan.cset);
    println!(
        "min nonzero {:?}, max {}, Betti degrees {:?}",
        scan.min_nonzero(),
        scan.max(),
        report.catenary_degrees()
    );

    let records = scan_records(&scan, &report);
    let dir = std::env::temp_dir();
    let csv = dir.join("catdeg_scan.csv");
    let svg = dir.join("catdeg_scan.svg");
    std::fs::write(&csv, to_csv(&records))?;
    std::fs::write(&svg, to_svg(&s, &records))?;
    println!("wrote {} and {}", csv.display(), svg.display());
    Ok(())
}
