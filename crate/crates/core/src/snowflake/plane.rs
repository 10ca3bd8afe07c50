//! Axiom check for finite projective planes given as point/line incidence.

use std::fmt;

use super::core::CoreGeometry;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaneFailure {
    PointCount { expected: usize, found: usize },
    LineCount { expected: usize, found: usize },
    LineSize { line: usize, expected: usize, found: usize },
    PointDegree { point: usize, expected: usize, found: usize },
    /// Two points not joined by exactly one line.
    PointPairCoverage { points: (usize, usize), lines: usize },
    /// Two lines not meeting in exactly one point.
    LinePairIntersection { lines: (usize, usize), common: usize },
    NoQuadrangle,
}

impl fmt::Display for PlaneFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneFailure::PointCount { expected, found } => {
                write!(f, "point count {found}, expected {expected}")
            }
            PlaneFailure::LineCount { expected, found } => {
                write!(f, "line count {found}, expected {expected}")
            }
            PlaneFailure::LineSize { line, expected, found } => {
                write!(f, "line {line} has {found} points, expected {expected}")
            }
            PlaneFailure::PointDegree { point, expected, found } => {
                write!(f, "point {point} lies on {found} lines, expected {expected}")
            }
            PlaneFailure::PointPairCoverage { points: (a, b), lines } => {
                write!(f, "points {a} and {b} are joined by {lines} lines")
            }
            PlaneFailure::LinePairIntersection { lines: (a, b), common } => {
                write!(f, "lines {a} and {b} share {common} points")
            }
            PlaneFailure::NoQuadrangle => f.write_str("no four points in general position"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PlaneVerdict {
    pub is_projective_plane: bool,
    /// Set to q when every axiom holds.
    pub order: Option<u32>,
    pub failures: Vec<PlaneFailure>,
}

/// Checks the core incidence structure against the axioms of a projective plane of order `q`.
pub fn verify_plane(core: &CoreGeometry, q: u32) -> PlaneVerdict {
    check_projective_plane(core.points.len(), &core.line_sets(), q)
}

/// `lines` hold point indices in `0..num_points`.
pub fn check_projective_plane(num_points: usize, lines: &[Vec<usize>], q: u32) -> PlaneVerdict {
    let q = q as usize;
    let expected = q * q + q + 1;
    let mut failures = Vec::new();

    if num_points != expected {
        failures.push(PlaneFailure::PointCount { expected, found: num_points });
    }
    if lines.len() != expected {
        failures.push(PlaneFailure::LineCount { expected, found: lines.len() });
    }

    let mut incidence = vec![vec![false; num_points]; lines.len()];
    for (l, pts) in lines.iter().enumerate() {
        for &p in pts {
            incidence[l][p] = true;
        }
        let size = incidence[l].iter().filter(|&&b| b).count();
        if size != q + 1 {
            failures.push(PlaneFailure::LineSize { line: l, expected: q + 1, found: size });
        }
    }
    for p in 0..num_points {
        let degree = incidence.iter().filter(|row| row[p]).count();
        if degree != q + 1 {
            failures.push(PlaneFailure::PointDegree { point: p, expected: q + 1, found: degree });
        }
    }

    // pair_lines[a][b]: lines through both a and b
    let mut pair_lines = vec![vec![Vec::new(); num_points]; num_points];
    for (l, row) in incidence.iter().enumerate() {
        let on: Vec<usize> = (0..num_points).filter(|&p| row[p]).collect();
        for (i, &a) in on.iter().enumerate() {
            for &b in &on[i + 1..] {
                pair_lines[a][b].push(l);
            }
        }
    }
    for (a, row) in pair_lines.iter().enumerate() {
        for (b, through) in row.iter().enumerate().skip(a + 1) {
            let count = through.len();
            if count != 1 {
                failures.push(PlaneFailure::PointPairCoverage { points: (a, b), lines: count });
            }
        }
    }
    for l in 0..lines.len() {
        for m in l + 1..lines.len() {
            let common = (0..num_points).filter(|&p| incidence[l][p] && incidence[m][p]).count();
            if common != 1 {
                failures.push(PlaneFailure::LinePairIntersection { lines: (l, m), common });
            }
        }
    }

    if !has_quadrangle(num_points, &incidence, &pair_lines) {
        failures.push(PlaneFailure::NoQuadrangle);
    }

    let ok = failures.is_empty();
    PlaneVerdict { is_projective_plane: ok, order: ok.then_some(q as u32), failures }
}

fn has_quadrangle(num_points: usize, incidence: &[Vec<bool>], pair_lines: &[Vec<Vec<usize>>]) -> bool {
    let collinear = |a: usize, b: usize, c: usize| pair_lines[a][b].iter().any(|&l| incidence[l][c]);
    for a in 0..num_points {
        for b in a + 1..num_points {
            for c in b + 1..num_points {
                if collinear(a, b, c) {
                    continue;
                }
                for d in c + 1..num_points {
                    if !collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> Vec<Vec<usize>> {
        vec![
            vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6], vec![1, 3, 5],
            vec![1, 4, 6], vec![2, 3, 6], vec![2, 4, 5],
        ]
    }

    #[test]
    fn fano_plane_passes() {
        let v = check_projective_plane(7, &fano(), 2);
        assert!(v.is_projective_plane, "{:?}", v.failures);
        assert_eq!(v.order, Some(2));
        assert!(v.failures.is_empty());
    }

    #[test]
    fn missing_line_breaks_pair_coverage() {
        let mut lines = fano();
        lines.pop();
        let v = check_projective_plane(7, &lines, 2);
        assert!(!v.is_projective_plane);
        assert_eq!(v.order, None);
        assert!(v.failures.contains(&PlaneFailure::LineCount { expected: 7, found: 6 }));
        assert!(v
            .failures
            .iter()
            .any(|f| matches!(f, PlaneFailure::PointPairCoverage { lines: 0, .. })));
    }

    #[test]
    fn triangle_is_degenerate() {
        // three points, three lines: every axiom except the quadrangle holds at "order 1"
        let lines = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        let v = check_projective_plane(3, &lines, 1);
        assert_eq!(v.failures, vec![PlaneFailure::NoQuadrangle]);
    }

    #[test]
    fn wrong_order_reported() {
        let v = check_projective_plane(7, &fano(), 3);
        assert!(!v.is_projective_plane);
        assert!(v.failures.contains(&PlaneFailure::PointCount { expected: 13, found: 7 }));
    }

    #[test]
    fn duplicated_line_detected() {
        let mut lines = fano();
        lines[6] = lines[0].clone();
        let v = check_projective_plane(7, &lines, 2);
        assert!(v
            .failures
            .contains(&PlaneFailure::LinePairIntersection { lines: (0, 6), common: 3 }));
    }
}
