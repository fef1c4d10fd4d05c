//! Exact solutions for the 2-point and 3-point configurations.
//!
//! Side labeling follows the 3-point dissimilarity matrix
//! `[[0,a,b],[a,0,c],[b,c,0]]`: `a` separates vertices A and B, `b`
//! separates A and C, `c` separates B and C. The solved coordinates
//! reproduce exactly that matrix.

use crate::error::{Error, Result};
use crate::pipeline::{self, DissimilarityMatrix};

/// Below this relative threshold the closed-form weights degenerate (0/0 at
/// the equilateral limit) and [`solve_triangle_general`] must be used.
pub const TOL_DEGENERATE: f64 = 1e-10;

/// Three positive side lengths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleSides {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl TriangleSides {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        for d in [a, b, c] {
            if !(d > 0.0) {
                return Err(Error::NonPositiveDistance { d });
            }
        }
        Ok(TriangleSides { a, b, c })
    }

    fn squares(&self) -> (f64, f64, f64) {
        (self.a * self.a, self.b * self.b, self.c * self.c)
    }

    /// Largest squared side, the tolerance scale for this triangle.
    pub fn scale(&self) -> f64 {
        let m = self.a.max(self.b).max(self.c);
        m * m
    }
}

/// Exact planar solution for three points.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleSolution {
    pub delta: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    /// Weight combining sqrt(lambda_1) with the first eigenvector normalization;
    /// `None` when the closed-form weights are degenerate.
    pub w1: Option<f64>,
    pub w2: Option<f64>,
    pub little_delta: f64,
    /// (x, y) for vertices A, B, C.
    pub coords: [[f64; 2]; 3],
}

impl TriangleSolution {
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        let dx = self.coords[i][0] - self.coords[j][0];
        let dy = self.coords[i][1] - self.coords[j][1];
        (dx * dx + dy * dy).sqrt()
    }

    /// Pairwise distances sorted ascending, for congruence checks.
    pub fn sorted_distances(&self) -> [f64; 3] {
        let mut d = [self.distance(0, 1), self.distance(0, 2), self.distance(1, 2)];
        d.sort_by(|x, y| x.partial_cmp(y).unwrap());
        d
    }
}

/// One-dimensional solution for two points a distance `d` apart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPointSolution {
    pub x1: f64,
    pub x2: f64,
}

impl TwoPointSolution {
    /// Origin shifted to the second point: coordinates (d, 0).
    pub fn shifted(&self) -> (f64, f64) {
        (self.x1 - self.x2, 0.0)
    }
}

/// Principal coordinates (d/2, -d/2) for two points.
pub fn solve_two_points(d: f64) -> Result<TwoPointSolution> {
    if !(d > 0.0) {
        return Err(Error::NonPositiveDistance { d });
    }
    Ok(TwoPointSolution { x1: d / 2.0, x2: -d / 2.0 })
}

/// The discriminant Delta = sqrt(a^4+b^4+c^4 - a^2 b^2 - a^2 c^2 - b^2 c^2),
/// always nonnegative since 2 Delta^2 = (a^2-b^2)^2 + (a^2-c^2)^2 + (b^2-c^2)^2.
pub fn triangle_delta(s: &TriangleSides) -> f64 {
    let (p, q, r) = s.squares();
    let two_sq = (p - q) * (p - q) + (p - r) * (p - r) + (q - r) * (q - r);
    (two_sq / 2.0).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Euclidean,
    NonEuclidean,
}

/// Outcome of the Euclidean condition a^2+b^2+c^2 >= 2 Delta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanCheck {
    pub verdict: Verdict,
    /// Signed margin a^2+b^2+c^2 - 2 Delta, equal to 6 lambda_2.
    pub margin: f64,
}

impl EuclideanCheck {
    pub fn lambda2(&self) -> f64 {
        self.margin / 6.0
    }
}

/// Check whether the side triple admits a real planar configuration.
pub fn euclidean_check(s: &TriangleSides) -> EuclideanCheck {
    let (p, q, r) = s.squares();
    let margin = p + q + r - 2.0 * triangle_delta(s);
    let verdict = if margin >= 0.0 { Verdict::Euclidean } else { Verdict::NonEuclidean };
    EuclideanCheck { verdict, margin }
}

/// Exact coordinates from the spectral closed form.
///
/// The y-axis weight is sqrt(lambda_2 / (6 delta)): the squared norm of the
/// unnormalized second eigenvector is 6 delta, three times that of the first.
pub fn solve_triangle(s: &TriangleSides) -> Result<TriangleSolution> {
    let (p, q, r) = s.squares();
    let scale = s.scale();
    let delta = triangle_delta(s);
    let margin = p + q + r - 2.0 * delta;
    if margin < -TOL_DEGENERATE * scale {
        return Err(Error::NonEuclidean { lambda2: margin / 6.0 });
    }
    let little_delta = delta * (2.0 * delta - p + 2.0 * q - r);
    if delta <= TOL_DEGENERATE * scale || little_delta <= TOL_DEGENERATE * scale * scale {
        return Err(Error::DegenerateFormula { delta, little_delta });
    }
    let lambda1 = (p + q + r + 2.0 * delta) / 6.0;
    let lambda2 = (margin / 6.0).max(0.0);
    let w1 = (lambda1 / (2.0 * little_delta)).sqrt();
    let w2 = (lambda2 / (6.0 * little_delta)).sqrt();
    let coords = [
        [w1 * (q - r + delta), w2 * (2.0 * p - q - r - delta)],
        [w1 * (r - p), w2 * (-p + 2.0 * q - r + 2.0 * delta)],
        [w1 * (p - q - delta), w2 * (-p - q + 2.0 * r - delta)],
    ];
    Ok(TriangleSolution {
        delta,
        lambda1,
        lambda2,
        w1: Some(w1),
        w2: Some(w2),
        little_delta,
        coords,
    })
}

/// Fallback through the general pipeline; handles the equilateral and
/// near-equilateral cases where the closed-form weights are 0/0.
pub fn solve_triangle_general(s: &TriangleSides) -> Result<TriangleSolution> {
    let scale = s.scale();
    let check = euclidean_check(s);
    if check.margin < -TOL_DEGENERATE * scale {
        return Err(Error::NonEuclidean { lambda2: check.lambda2() });
    }
    let d = DissimilarityMatrix::from_triangle(s.a, s.b, s.c)?;
    let embedding = pipeline::embed(&d, 2)?;
    let delta = triangle_delta(s);
    let little_delta = delta * {
        let (p, q, r) = s.squares();
        2.0 * delta - p + 2.0 * q - r
    };
    let degenerate =
        delta <= TOL_DEGENERATE * scale || little_delta <= TOL_DEGENERATE * scale * scale;
    let (w1, w2) = if degenerate {
        (None, None)
    } else {
        let l1 = embedding.retained_eigenvalues[0];
        let l2 = embedding.retained_eigenvalues[1].max(0.0);
        (Some((l1 / (2.0 * little_delta)).sqrt()), Some((l2 / (6.0 * little_delta)).sqrt()))
    };
    let coords = [
        [embedding.coords[0][0], embedding.coords[0][1]],
        [embedding.coords[1][0], embedding.coords[1][1]],
        [embedding.coords[2][0], embedding.coords[2][1]],
    ];
    Ok(TriangleSolution {
        delta,
        lambda1: embedding.retained_eigenvalues[0],
        lambda2: embedding.retained_eigenvalues[1],
        w1,
        w2,
        little_delta,
        coords,
    })
}

/// Isosceles solution with the rescaled (+-1, e) parameterization.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoscelesSolution {
    pub solution: TriangleSolution,
    /// Height parameter of the rescaled coordinates A=(1,-e), B=(0,2e), C=(-1,-e).
    pub e: f64,
}

/// Closed form for the isosceles family: equal sides `a` (AB and BC) and
/// base `b` (AC), valid for 0 < b < 2a. The equilateral limit b = a is
/// included; b >= 2a is flat or has no real planar solution.
pub fn isosceles_coords(a: f64, b: f64) -> Result<IsoscelesSolution> {
    for d in [a, b] {
        if !(d > 0.0) {
            return Err(Error::NonPositiveDistance { d });
        }
    }
    if b >= 2.0 * a {
        return Err(Error::FlatOrNonEuclidean { a, b });
    }
    let height_sq = 4.0 * a * a - b * b;
    let x1 = b / 2.0;
    let y1 = -height_sq.sqrt() / 6.0;
    let coords = [[x1, y1], [0.0, -2.0 * y1], [-x1, y1]];
    let la = b * b / 2.0;
    let lb = height_sq / 6.0;
    let delta = (b * b - a * a).abs();
    let little_delta = 4.0 * delta * delta;
    // weight formulas only apply on the Corollary domain b > a where the
    // first principal axis is the base direction
    let (w1, w2) = if b > a {
        (Some(b / (4.0 * delta)), Some(height_sq.sqrt() / (12.0 * delta)))
    } else {
        (None, None)
    };
    let solution = TriangleSolution {
        delta,
        lambda1: la.max(lb),
        lambda2: la.min(lb),
        w1,
        w2,
        little_delta,
        coords,
    };
    Ok(IsoscelesSolution { solution, e: height_sq.sqrt() / (3.0 * b) })
}

/// Translate a solution so the chosen vertex (1-based) sits at the origin.
pub fn shift_to_vertex(sol: &TriangleSolution, vertex_index: usize) -> Result<TriangleSolution> {
    if vertex_index < 1 || vertex_index > 3 {
        return Err(Error::IndexOutOfRange { index: vertex_index, n: 3 });
    }
    let [ox, oy] = sol.coords[vertex_index - 1];
    let mut shifted = sol.clone();
    for p in &mut shifted.coords {
        p[0] -= ox;
        p[1] -= oy;
    }
    Ok(shifted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn two_points_basic() {
        let s = solve_two_points(2.0).unwrap();
        assert_eq!((s.x1, s.x2), (1.0, -1.0));
        assert_eq!(solve_two_points(10.0).unwrap().shifted(), (10.0, 0.0));
        assert_eq!(solve_two_points(7.3).unwrap().x1 - solve_two_points(7.3).unwrap().x2, 7.3);
        assert!(matches!(solve_two_points(0.0), Err(Error::NonPositiveDistance { .. })));
    }

    #[test]
    fn delta_examples() {
        let eq = TriangleSides::new(1.0, 1.0, 1.0).unwrap();
        assert_close(triangle_delta(&eq), 0.0, 1e-12);
        // right isosceles: equal sides 1, base sqrt(2)
        let iso = TriangleSides::new(1.0, 2f64.sqrt(), 1.0).unwrap();
        assert_close(triangle_delta(&iso), 1.0, 1e-12);
        let t345 = TriangleSides::new(3.0, 4.0, 5.0).unwrap();
        assert_close(triangle_delta(&t345), 193f64.sqrt(), 1e-12);
    }

    #[test]
    fn delta_identity() {
        let s = TriangleSides::new(2.3, 5.1, 4.4).unwrap();
        let (p, q, r) = (s.a * s.a, s.b * s.b, s.c * s.c);
        let rhs = (p - q) * (p - q) + (p - r) * (p - r) + (q - r) * (q - r);
        let d = triangle_delta(&s);
        assert_close(2.0 * d * d, rhs, 1e-9 * s.scale() * s.scale());
    }

    #[test]
    fn isosceles_triangle_coordinates() {
        // equal sides 1, base 1.5
        let s = TriangleSides::new(1.0, 1.5, 1.0).unwrap();
        let sol = solve_triangle(&s).unwrap();
        let h = (4.0 - 2.25f64).sqrt();
        assert_close(sol.coords[0][0], 0.75, 1e-12);
        assert_close(sol.coords[0][1], -h / 6.0, 1e-12);
        assert_close(sol.coords[1][0], 0.0, 1e-12);
        assert_close(sol.coords[1][1], h / 3.0, 1e-12);
        assert_close(sol.coords[2][0], -0.75, 1e-12);
        assert_close(sol.coords[2][1], -h / 6.0, 1e-12);
        assert_close(sol.lambda1, 1.125, 1e-12);
        assert_close(sol.lambda2, 1.75 / 6.0, 1e-12);
    }

    #[test]
    fn flat_triangle_is_collinear() {
        let s = TriangleSides::new(1.0, 2.0, 1.0).unwrap();
        let sol = solve_triangle(&s).unwrap();
        assert_close(sol.lambda2, 0.0, 1e-12);
        for p in &sol.coords {
            assert_close(p[1], 0.0, 1e-12);
        }
        assert_close(sol.distance(0, 2), 2.0, 1e-10);
    }

    #[test]
    fn sides_round_trip_345() {
        let s = TriangleSides::new(3.0, 4.0, 5.0).unwrap();
        let sol = solve_triangle(&s).unwrap();
        assert_close(sol.distance(0, 1), 3.0, 1e-8 * s.scale());
        assert_close(sol.distance(0, 2), 4.0, 1e-8 * s.scale());
        assert_close(sol.distance(1, 2), 5.0, 1e-8 * s.scale());
        // eigenvalue sum is the trace over 3
        assert_close(sol.lambda1 + sol.lambda2, 50.0 / 3.0, 1e-10);
        // centroid at the origin
        for k in 0..2 {
            let sum: f64 = sol.coords.iter().map(|p| p[k]).sum();
            assert!(sum.abs() <= 1e-10 * s.scale());
        }
    }

    #[test]
    fn non_euclidean_is_rejected() {
        let s = TriangleSides::new(1.0, 3.0, 1.0).unwrap();
        match solve_triangle(&s) {
            Err(Error::NonEuclidean { lambda2 }) => assert!(lambda2 < 0.0),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(solve_triangle_general(&s), Err(Error::NonEuclidean { .. })));
    }

    #[test]
    fn equilateral_needs_general_solver() {
        let s = TriangleSides::new(1.0, 1.0, 1.0).unwrap();
        assert!(matches!(solve_triangle(&s), Err(Error::DegenerateFormula { .. })));
        let sol = solve_triangle_general(&s).unwrap();
        let d = sol.sorted_distances();
        for x in d {
            assert_close(x, 1.0, 1e-8);
        }
        assert_close(sol.lambda1, 0.5, 1e-9);
        assert_close(sol.lambda2, 0.5, 1e-9);
    }

    #[test]
    fn equilateral_matches_rescaled_limit() {
        // base 2 between A and C, apex height from e = 1/sqrt(3)
        let side = 2.0;
        let s = TriangleSides::new(side, side, side).unwrap();
        let sol = solve_triangle_general(&s).unwrap();
        let e = 1.0 / 3f64.sqrt();
        let reference = [[1.0, -e], [0.0, 2.0 * e], [-1.0, -e]];
        let mut want = [
            dist(&reference, 0, 1),
            dist(&reference, 0, 2),
            dist(&reference, 1, 2),
        ];
        want.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let got = sol.sorted_distances();
        for (g, w) in got.iter().zip(&want) {
            assert_close(*g, *w, 1e-8);
        }
    }

    fn dist(c: &[[f64; 2]; 3], i: usize, j: usize) -> f64 {
        let dx = c[i][0] - c[j][0];
        let dy = c[i][1] - c[j][1];
        (dx * dx + dy * dy).sqrt()
    }

    #[test]
    fn general_matches_exact_on_isosceles() {
        let s = TriangleSides::new(1.0, 1.5, 1.0).unwrap();
        let exact = solve_triangle(&s).unwrap();
        let general = solve_triangle_general(&s).unwrap();
        let (de, dg) = (exact.sorted_distances(), general.sorted_distances());
        for k in 0..3 {
            assert_close(de[k], dg[k], 1e-7 * s.scale());
        }
        assert_close(exact.lambda1, general.lambda1, 1e-8 * s.scale());
        assert_close(exact.lambda2, general.lambda2, 1e-8 * s.scale());
    }

    #[test]
    fn collinear_sides_give_single_eigenvalue() {
        let s = TriangleSides::new(1.0, 2.0, 1.0).unwrap();
        let sol = solve_triangle_general(&s).unwrap();
        assert_close(sol.lambda1, 2.0, 1e-9);
        assert_close(sol.lambda2, 0.0, 1e-9);
    }

    #[test]
    fn isosceles_closed_form() {
        let iso = isosceles_coords(1.0, 1.5).unwrap();
        let exact = solve_triangle(&TriangleSides::new(1.0, 1.5, 1.0).unwrap()).unwrap();
        for v in 0..3 {
            for k in 0..2 {
                assert_close(iso.solution.coords[v][k], exact.coords[v][k], 1e-10);
            }
        }
        assert_close(iso.solution.lambda1, 1.125, 1e-12);
        assert_close(iso.solution.lambda2, 1.75 / 6.0, 1e-12);
    }

    #[test]
    fn isosceles_equilateral_limit() {
        let iso = isosceles_coords(1.0, 1.0).unwrap();
        assert_close(iso.e, 1.0 / 3f64.sqrt(), 1e-12);
    }

    #[test]
    fn isosceles_near_flat() {
        let iso = isosceles_coords(1.0, 1.9).unwrap();
        assert_close(iso.solution.lambda2, (4.0 - 3.61) / 6.0, 1e-12);
        let sol = &iso.solution;
        assert_close(sol.distance(0, 1), 1.0, 1e-10);
        assert_close(sol.distance(1, 2), 1.0, 1e-10);
        assert_close(sol.distance(0, 2), 1.9, 1e-10);
    }

    #[test]
    fn isosceles_rejects_flat_and_beyond() {
        assert!(matches!(isosceles_coords(1.0, 2.0), Err(Error::FlatOrNonEuclidean { .. })));
        assert!(matches!(isosceles_coords(1.0, 3.0), Err(Error::FlatOrNonEuclidean { .. })));
    }

    #[test]
    fn isosceles_wide_domain_below_a() {
        // b <= a is outside the stated Corollary domain but the formula
        // still reproduces the distances
        let iso = isosceles_coords(1.0, 0.5).unwrap();
        let sol = &iso.solution;
        assert_close(sol.distance(0, 1), 1.0, 1e-10);
        assert_close(sol.distance(1, 2), 1.0, 1e-10);
        assert_close(sol.distance(0, 2), 0.5, 1e-10);
        assert!(sol.w1.is_none());
    }

    #[test]
    fn euclidean_check_examples() {
        let bad = euclidean_check(&TriangleSides::new(1.0, 3.0, 1.0).unwrap());
        assert_eq!(bad.verdict, Verdict::NonEuclidean);
        assert!(bad.lambda2() < 0.0);

        let good = euclidean_check(&TriangleSides::new(3.0, 4.0, 5.0).unwrap());
        assert_eq!(good.verdict, Verdict::Euclidean);
        assert_close(good.margin, 50.0 - 2.0 * 193f64.sqrt(), 1e-10);

        let flat = euclidean_check(&TriangleSides::new(1.0, 2.0, 1.0).unwrap());
        assert_eq!(flat.verdict, Verdict::Euclidean);
        assert_close(flat.margin, 0.0, 1e-12);
    }

    #[test]
    fn shift_to_vertex_behaviour() {
        let s = TriangleSides::new(3.0, 4.0, 5.0).unwrap();
        let sol = solve_triangle(&s).unwrap();
        let shifted = shift_to_vertex(&sol, 1).unwrap();
        assert_eq!(shifted.coords[0], [0.0, 0.0]);
        assert_close(shifted.distance(0, 1), 3.0, 1e-8);
        assert_close(shifted.distance(0, 2), 4.0, 1e-8);
        assert_close(shifted.distance(1, 2), 5.0, 1e-8);
        // shifting back restores the original coordinates
        let dx = sol.coords[0][0];
        let dy = sol.coords[0][1];
        for v in 0..3 {
            assert_close(shifted.coords[v][0] + dx, sol.coords[v][0], 1e-12);
            assert_close(shifted.coords[v][1] + dy, sol.coords[v][1], 1e-12);
        }
        assert!(matches!(shift_to_vertex(&sol, 0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(shift_to_vertex(&sol, 4), Err(Error::IndexOutOfRange { .. })));
    }
}
