//! Closed-form three-point solutions: a right triangle, the isosceles
//! family with its flat and non-Euclidean limits, and origin shifting.

use cmdscale::closed_form::{self, TriangleSides, Verdict};

fn main() {
    // right triangle with sides 3, 4, 5
    let sides = TriangleSides::new(3.0, 4.0, 5.0).unwrap();
    let sol = closed_form::solve_triangle(&sides).unwrap();
    println!("3-4-5 triangle: lambda1 = {:.4}, lambda2 = {:.4}", sol.lambda1, sol.lambda2);
    for (k, row) in sol.coords.iter().enumerate() {
        println!("  point {}: ({:8.4}, {:8.4})", k + 1, row[0], row[1]);
    }
    println!(
        "  recovered sides: {:.4}, {:.4}, {:.4}",
        sol.distance(0, 1),
        sol.distance(0, 2),
        sol.distance(1, 2)
    );

    // shift the origin onto the first vertex
    let shifted = closed_form::shift_to_vertex(&sol, 1).unwrap();
    println!("  after shifting vertex 1 to the origin: {:?}", shifted.coords[0]);

    // isosceles family a = c: Euclidean for b <= 2a
    for b in [1.2, 1.8, 2.0, 2.5] {
        let sides = TriangleSides::new(1.0, b, 1.0).unwrap();
        let check = closed_form::euclidean_check(&sides);
        print!("isosceles a=1, b={b}: {:?} (margin {:+.3})", check.verdict, check.margin);
        if check.verdict == Verdict::Euclidean {
            match closed_form::isosceles_coords(1.0, b) {
                Ok(iso) => println!(", eccentricity e = {:.4}", iso.e),
                Err(_) => println!(", flat (one-dimensional)"),
            }
        } else {
            println!(", no planar configuration exists");
        }
    }
}
