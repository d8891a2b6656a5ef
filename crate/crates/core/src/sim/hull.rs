use super::walk::ClosedWalk;
use std::collections::BTreeMap;

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    i128::from(a.0 - o.0) * i128::from(b.1 - o.1) - i128::from(a.1 - o.1) * i128::from(b.0 - o.0)
}

/// Area of the convex hull of lattice points (Andrew's monotone chain and
/// the shoelace formula). Fewer than three non-collinear points give 0.
pub fn hull_area_of_points(points: &mut Vec<(i64, i64)>) -> f64 {
    points.sort_unstable();
    points.dedup();
    if points.len() < 3 {
        return 0.0;
    }
    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(2 * points.len());
    for &p in points.iter() {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in points.iter().rev().skip(1) {
        while hull.len() >= lower && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    if hull.len() < 3 {
        return 0.0;
    }
    let mut twice = 0i128;
    for i in 0..hull.len() {
        let (a, b) = (hull[i], hull[(i + 1) % hull.len()]);
        twice += i128::from(a.0) * i128::from(b.1) - i128::from(b.0) * i128::from(a.1);
    }
    twice.abs() as f64 / 2.0
}

/// Area of the convex hull of every vertex of every walk.
pub fn convex_hull_area(walks: &[ClosedWalk]) -> f64 {
    // Only the leftmost and rightmost point of each row can be on the hull.
    let mut rows: BTreeMap<i64, (i64, i64)> = BTreeMap::new();
    for w in walks {
        for (x, y) in w.vertices() {
            let e = rows.entry(y).or_insert((x, x));
            e.0 = e.0.min(x);
            e.1 = e.1.max(x);
        }
    }
    let mut pts: Vec<(i64, i64)> = rows
        .into_iter()
        .flat_map(|(y, (lo, hi))| [(lo, y), (hi, y)])
        .collect();
    hull_area_of_points(&mut pts)
}
