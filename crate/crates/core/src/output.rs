//! Scan tables as CSV and as a standalone SVG scatter plot.

use std::fmt::Write as _;

use serde::Serialize;

use crate::catenary::{BettiReport, CatenaryScan};
use crate::monoid::NumericalMonoid;

pub const CSV_HEADER: &str = "element,catenary,num_factorizations,is_betti";

/// One row per integer of the scan window. Integers outside the monoid have
/// no factorizations and catenary degree 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub element: i64,
    pub catenary: u64,
    pub num_factorizations: usize,
    pub is_betti: bool,
}

pub fn scan_records(scan: &CatenaryScan, report: &BettiReport) -> Vec<ScanRecord> {
    (0..=scan.window.max(0))
        .map(|n| ScanRecord {
            element: n,
            catenary: scan.per_element.get(&n).copied().unwrap_or(0),
            num_factorizations: scan.factorization_counts.get(&n).copied().unwrap_or(0),
            is_betti: report.is_betti(n),
        })
        .collect()
}

pub fn to_csv(records: &[ScanRecord]) -> String {
    let mut out = String::with_capacity(32 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.element, r.catenary, r.num_factorizations, r.is_betti
        );
    }
    out
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 400.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 40.0;

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Scatter plot of catenary degree against element.
///
/// Elements of the monoid are filled circles, Betti elements are larger red
/// circles, and integers outside the monoid are hollow grey circles on the
/// axis, so there is exactly one marker per record.
pub fn to_svg(monoid: &NumericalMonoid, records: &[ScanRecord]) -> String {
    let max_x = records.iter().map(|r| r.element).max().unwrap_or(0).max(1) as f64;
    let max_y = records.iter().map(|r| r.catenary).max().unwrap_or(0).max(1) as f64;
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let x_of = |x: f64| LEFT + plot_w * x / max_x;
    let y_of = |y: f64| TOP + plot_h * (1.0 - y / max_y);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="18" font-family="sans-serif" font-size="14" text-anchor="middle">catenary degrees of {}</text>"#,
        WIDTH / 2.0,
        escape(&monoid.to_string())
    );
    // axes
    let _ = writeln!(
        svg,
        r#"<line x1="{LEFT}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black"/>"#,
        TOP + plot_h,
        LEFT + plot_w,
        TOP + plot_h
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{:.2}" stroke="black"/>"#,
        TOP + plot_h
    );
    for i in 0..=5 {
        let x = max_x * i as f64 / 5.0;
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="10" text-anchor="middle">{}</text>"#,
            x_of(x),
            TOP + plot_h + 14.0,
            x.round() as i64
        );
    }
    let y_step = (max_y / 5.0).ceil().max(1.0);
    let mut y = 0.0;
    while y <= max_y {
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="10" text-anchor="end">{}</text>"#,
            LEFT - 6.0,
            y_of(y) + 3.0,
            y as i64
        );
        y += y_step;
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="middle">element</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 6.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="14" y="{:.2}" font-family="sans-serif" font-size="12" text-anchor="middle" transform="rotate(-90 14 {:.2})">catenary degree</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );
    for r in records {
        let (cx, cy) = (x_of(r.element as f64), y_of(r.catenary as f64));
        let marker = if r.is_betti {
            format!(r##"<circle cx="{cx:.2}" cy="{cy:.2}" r="3.5" fill="#d62728"/>"##)
        } else if r.num_factorizations == 0 {
            format!(r##"<circle cx="{cx:.2}" cy="{cy:.2}" r="1.5" fill="none" stroke="#bbbbbb"/>"##)
        } else {
            format!(r##"<circle cx="{cx:.2}" cy="{cy:.2}" r="2" fill="#1f77b4"/>"##)
        };
        svg.push_str(&marker);
        svg.push('\n');
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catenary::{betti_elements, catenary_set_scan};

    fn records(gens: &[i64], window: i64) -> (NumericalMonoid, Vec<ScanRecord>) {
        let s = NumericalMonoid::new(gens).unwrap();
        let scan = catenary_set_scan(&s, window);
        let report = betti_elements(&s);
        let rec = scan_records(&scan, &report);
        (s, rec)
    }

    #[test]
    fn csv_shape() {
        let (_, rec) = records(&[11, 25, 29], 300);
        let csv = to_csv(&rec);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 302);
        assert!(csv.contains("\n58,4,2,true\n"));
        assert!(csv.contains("\n175,11,3,false\n"));
        assert!(csv.contains("\n1,0,0,false\n"));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn zero_window() {
        let (_, rec) = records(&[3, 5], 0);
        assert_eq!(to_csv(&rec), format!("{CSV_HEADER}\n0,0,1,false\n"));
    }

    #[test]
    fn svg_markers() {
        let (s, rec) = records(&[11, 25, 29], 200);
        let svg = to_svg(&s, &rec);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<circle").count(), rec.len());
        assert_eq!(svg.matches("#d62728").count(), 3);
        assert!(svg.contains("&lt;11, 25, 29&gt;"));
        assert!(!svg.contains("href"));
    }
}
