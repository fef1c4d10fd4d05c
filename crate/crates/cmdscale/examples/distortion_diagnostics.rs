//! Attribute the distortion of a 2-dimensional fit to the eigenvalues it
//! leaves out, pair by pair, and scan for triangle-inequality violations.

use cmdscale::diagnostics;
use cmdscale::io::parse_matrix_csv;

fn main() {
    let csv = include_str!("../fixtures/rail_yorkshire.csv");
    let (d, labels) = parse_matrix_csv(csv).unwrap();
    let labels = labels.unwrap();

    let report = diagnostics::distortion_report(&d, 2).unwrap();
    for (i, j) in [(1, 2), (0, 4)] {
        let pair = report.pair(i, j).unwrap();
        println!(
            "{} -- {}: input {} fitted {:.4}",
            labels[i],
            labels[j],
            d.get(i, j),
            pair.fitted_distance()
        );
        println!(
            "  delta^2 = {:9.3}, fitted^2 = {:9.3}, gap = {:9.3}",
            pair.delta_sq, pair.d_sq, pair.gap
        );
        for term in &pair.excluded_terms {
            println!(
                "  excluded direction {}: lambda = {:9.3}, contribution = {:9.3}",
                term.ell + 1,
                report.eigenvalues[term.ell],
                term.value
            );
        }
        if let Some(dom) = &pair.dominant_term {
            println!(
                "  dominant excluded direction: {} ({:+.3})",
                dom.ell + 1,
                dom.value
            );
        }
    }

    println!("\ntriangle-inequality violations:");
    for v in diagnostics::scan_triangle_violations(&d) {
        println!(
            "  d({},{}) = {} > d({},{}) + d({},{}) = {} (excess {})",
            labels[v.i], labels[v.k], v.lhs, labels[v.i], labels[v.j], labels[v.j], labels[v.k], v.rhs, v.excess
        );
    }
}
