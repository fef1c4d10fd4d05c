//! Equispaced points on a line have a single nonzero eigenvalue with a
//! closed form, and the generalized Helmert matrix diagonalizes the
//! centered Gram matrix exactly.

use cmdscale::matrix::helmert_matrix;
use cmdscale::pipeline::{self, DissimilarityMatrix};

fn main() {
    for n in [3usize, 5, 10, 20] {
        let pts: Vec<Vec<f64>> = (1..=n).map(|i| vec![i as f64]).collect();
        let d = DissimilarityMatrix::from_points(&pts);
        let spectrum = pipeline::mds_spectrum(&d).unwrap();
        let formula = pipeline::collinear_lambda(n, false).unwrap();
        println!(
            "n = {n:2}: lambda1 = {:12.6}  n(n^2-1)/12 = {formula:12.6}",
            spectrum.eigenvalue(0)
        );
    }

    // the scaled variant, with the points rescaled to span (0, 1)
    let n = 5;
    let span = (n - 1) as f64;
    let pts: Vec<Vec<f64>> = (0..n).map(|i| vec![i as f64 / span]).collect();
    let d = DissimilarityMatrix::from_points(&pts);
    let spectrum = pipeline::mds_spectrum(&d).unwrap();
    println!(
        "n = {n} scaled to (0,1): lambda1 = {:.6} vs {:.6}",
        spectrum.eigenvalue(0),
        pipeline::collinear_lambda(n, true).unwrap()
    );

    // orthonormal polynomial contrasts generalizing the Helmert rows
    println!("\nHelmert-style contrast matrix for n = 3:");
    for row in helmert_matrix(3).unwrap() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:8.4}")).collect();
        println!("  [{}]", cells.join(", "));
    }
}
