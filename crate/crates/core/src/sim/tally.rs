use super::field::WindingField;
use super::hull::hull_area_of_points;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Areas (in unit cells) of the winding sectors of one sample.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorTally {
    /// `n ↦ S_n` for `n ≠ 0`; only sectors that occur are present.
    pub sector_areas: BTreeMap<i32, u64>,
    /// Zero-winding cells not connected to infinity.
    pub s0_inside: u64,
    /// All enclosed cells.
    pub total_s: u64,
    /// `Σ n S_n`.
    pub algebraic_a: i64,
    /// Convex hull of all visited points.
    pub hull_area: f64,
}

impl SectorTally {
    pub fn sector(&self, n: i32) -> u64 {
        self.sector_areas.get(&n).copied().unwrap_or(0)
    }

    /// `S − S₀`, the area of the nonzero-winding sectors.
    pub fn nonzero_area(&self) -> u64 {
        self.sector_areas.values().sum()
    }
}

/// Classifies every cell of the field.
///
/// The exterior is the 4-connected component of the padding ring, where two
/// neighbouring cells communicate only if no walk uses their shared edge.
/// Everything else is enclosed; enclosed cells with winding 0 form `S₀`.
pub fn sector_tally(field: &WindingField) -> Result<SectorTally> {
    let b = field.bbox();
    let (w, h) = (b.width, b.height);
    let wind = field.windings();
    let v_edge = field.v_edges();
    let h_edge = field.h_edges();

    let mut outside = vec![false; w * h];
    let mut stack: Vec<usize> = Vec::new();
    let seed = |k: usize, outside: &mut Vec<bool>, stack: &mut Vec<usize>| {
        if !outside[k] {
            outside[k] = true;
            stack.push(k);
        }
    };
    for c in 0..w {
        seed(c, &mut outside, &mut stack);
        seed((h - 1) * w + c, &mut outside, &mut stack);
    }
    for r in 0..h {
        seed(r * w, &mut outside, &mut stack);
        seed(r * w + w - 1, &mut outside, &mut stack);
    }
    while let Some(k) = stack.pop() {
        let (c, r) = (k % w, k / w);
        if c + 1 < w && !v_edge[k + 1] && !outside[k + 1] {
            outside[k + 1] = true;
            stack.push(k + 1);
        }
        if c > 0 && !v_edge[k] && !outside[k - 1] {
            outside[k - 1] = true;
            stack.push(k - 1);
        }
        if r + 1 < h && !h_edge[k + w] && !outside[k + w] {
            outside[k + w] = true;
            stack.push(k + w);
        }
        if r > 0 && !h_edge[k] && !outside[k - w] {
            outside[k - w] = true;
            stack.push(k - w);
        }
    }

    let mut sector_areas = BTreeMap::new();
    let mut s0_inside = 0u64;
    let mut total_s = 0u64;
    let mut algebraic_a = 0i64;
    for (k, (&n, &out)) in wind.iter().zip(&outside).enumerate() {
        algebraic_a += i64::from(n);
        if out {
            if n != 0 {
                return Err(Error::Inconsistent(format!(
                    "exterior cell ({}, {}) has winding {n}",
                    b.x0 + (k % w) as i64,
                    b.y0 + (k / w) as i64
                )));
            }
            continue;
        }
        total_s += 1;
        if n == 0 {
            s0_inside += 1;
        } else {
            *sector_areas.entry(n).or_insert(0u64) += 1;
        }
    }

    let hull_area = hull_area_of_points(&mut field.extreme_points());
    Ok(SectorTally {
        sector_areas,
        s0_inside,
        total_s,
        algebraic_a,
        hull_area,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{winding_field, ClosedWalk};

    fn tally(lines: &[&str]) -> SectorTally {
        let walks: Vec<_> = lines.iter().map(|l| ClosedWalk::parse_line(l).unwrap()).collect();
        sector_tally(&winding_field(&walks).unwrap()).unwrap()
    }

    #[test]
    fn unit_square() {
        let t = tally(&["RULD"]);
        assert_eq!(t.sector(1), 1);
        assert_eq!(t.s0_inside, 0);
        assert_eq!(t.total_s, 1);
        assert_eq!(t.algebraic_a, 1);
        assert_eq!(t.hull_area, 1.0);
    }

    #[test]
    fn figure_eight() {
        // ccw around cell (0,0), then cw around cell (-1,-1), through the origin
        let t = tally(&["RULDDLUR"]);
        assert_eq!(t.sector(1), 1);
        assert_eq!(t.sector(-1), 1);
        assert_eq!(t.algebraic_a, 0);
        assert_eq!(t.total_s, 2);
        assert_eq!(t.s0_inside, 0);
    }

    #[test]
    fn cancelling_loops_leave_zero_winding_inside() {
        // the same 2x2 square once each way: enclosed, net winding 0
        let t = tally(&["RRUULLDD", "UURRDDLL"]);
        assert_eq!(t.total_s, 4);
        assert_eq!(t.s0_inside, 4);
        assert!(t.sector_areas.is_empty());
        assert_eq!(t.algebraic_a, 0);
    }

    #[test]
    fn retraced_spike_encloses_nothing() {
        let t = tally(&["RRLL", "UD"]);
        assert_eq!(t.total_s, 0);
        assert_eq!(t.hull_area, 1.0);
    }
}
