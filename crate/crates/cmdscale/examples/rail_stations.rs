//! Embed the bundled rail journey-time matrix into two principal
//! coordinates and print the spectrum, the map, and the trace identity.

use cmdscale::io::parse_matrix_csv;
use cmdscale::pipeline;

fn main() {
    let csv = include_str!("../fixtures/rail_yorkshire.csv");
    let (d, labels) = parse_matrix_csv(csv).unwrap();
    let labels = labels.unwrap();

    let spectrum = pipeline::mds_spectrum(&d).unwrap();
    println!("eigenvalues of the centered Gram matrix:");
    for (k, lambda) in spectrum.eigenvalues().iter().enumerate() {
        println!("  lambda_{} = {lambda:10.4}", k + 1);
    }

    // the sum of eigenvalues equals sum_{i<j} d_ij^2 / n
    let (lhs, rhs) = pipeline::verify_trace_identity(&d).unwrap();
    println!("trace identity: {lhs:.4} = {rhs:.4}");

    let embedding = pipeline::embed(&d, 2).unwrap();
    println!("\ntwo-dimensional principal coordinates:");
    for (label, row) in labels.iter().zip(&embedding.coords) {
        println!("  {label:<11} ({:8.3}, {:8.3})", row[0], row[1]);
    }

    // one negative eigenvalue is excluded: the input is not Euclidean
    println!(
        "\nexcluded eigenvalues: {:?}",
        embedding
            .excluded_eigenvalues
            .iter()
            .map(|l| (l * 10.0).round() / 10.0)
            .collect::<Vec<_>>()
    );
}
