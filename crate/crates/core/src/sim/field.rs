use super::walk::{ClosedWalk, Step};
use crate::error::{domain, Error, Result};

/// Default cap on the memory used by one winding grid (2 GiB).
pub const DEFAULT_MEMORY_CAP: u64 = 2 << 30;

// winding (i32) + two edge flags per cell + one visit flag in the tally
const BYTES_PER_CELL: u64 = 4 + 2 + 1;

/// Rectangle of unit cells; cell `(i, j)` is the face `[i, i+1] × [j, j+1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellBox {
    pub x0: i64,
    pub y0: i64,
    pub width: usize,
    pub height: usize,
}

impl CellBox {
    pub fn cells(&self) -> usize {
        self.width * self.height
    }

    pub fn contains(&self, i: i64, j: i64) -> bool {
        i >= self.x0 && j >= self.y0 && i < self.x0 + self.width as i64 && j < self.y0 + self.height as i64
    }
}

/// Winding numbers of `m` superposed closed walks on every cell of a box that
/// pads the walks' bounding box by one cell on each side, plus the set of
/// lattice edges any walk traverses.
#[derive(Debug, Clone)]
pub struct WindingField {
    bbox: CellBox,
    winding: Vec<i32>,
    // vertical edge on the left side of cell (c, r)
    v_edge: Vec<bool>,
    // horizontal edge on the bottom side of cell (c, r)
    h_edge: Vec<bool>,
    // leftmost and rightmost vertex x on each vertex row y0+1 ..= y0+height-1
    row_extent: Vec<(i64, i64)>,
    m: usize,
}

impl WindingField {
    pub fn bbox(&self) -> CellBox {
        self.bbox
    }

    pub fn m(&self) -> usize {
        self.m
    }

    fn index(&self, i: i64, j: i64) -> usize {
        (j - self.bbox.y0) as usize * self.bbox.width + (i - self.bbox.x0) as usize
    }

    /// Winding number of cell `(i, j)`; zero outside the box.
    pub fn winding(&self, i: i64, j: i64) -> i32 {
        if self.bbox.contains(i, j) {
            self.winding[self.index(i, j)]
        } else {
            0
        }
    }

    /// Row-major winding numbers over the box.
    pub fn windings(&self) -> &[i32] {
        &self.winding
    }

    /// Whether the vertical edge from `(x, y)` to `(x, y+1)` is used.
    pub fn vertical_edge_used(&self, x: i64, y: i64) -> bool {
        self.bbox.contains(x, y) && self.v_edge[self.index(x, y)]
    }

    /// Whether the horizontal edge from `(x, y)` to `(x+1, y)` is used.
    pub fn horizontal_edge_used(&self, x: i64, y: i64) -> bool {
        self.bbox.contains(x, y) && self.h_edge[self.index(x, y)]
    }

    pub(crate) fn v_edges(&self) -> &[bool] {
        &self.v_edge
    }

    pub(crate) fn h_edges(&self) -> &[bool] {
        &self.h_edge
    }

    /// Per vertex row, the leftmost and rightmost visited points. Their
    /// convex hull equals the hull of all visited points.
    pub fn extreme_points(&self) -> Vec<(i64, i64)> {
        let mut pts = Vec::with_capacity(2 * self.row_extent.len());
        for (r, &(lo, hi)) in self.row_extent.iter().enumerate() {
            if lo <= hi {
                let y = self.bbox.y0 + 1 + r as i64;
                pts.push((lo, y));
                if hi != lo {
                    pts.push((hi, y));
                }
            }
        }
        pts
    }

    /// Sum of all cell windings.
    pub fn winding_sum(&self) -> i64 {
        self.winding.iter().map(|&w| i64::from(w)).sum()
    }
}

/// Builds the winding field with the default memory cap.
pub fn winding_field(walks: &[ClosedWalk]) -> Result<WindingField> {
    winding_field_with_cap(walks, DEFAULT_MEMORY_CAP)
}

/// Builds the winding field of superposed walks sharing the origin.
///
/// The winding of a cell is the signed number of crossings of the horizontal
/// ray from its centre towards `+x`: an upward step counts `+1`, a downward
/// step `−1`. Each vertical step is recorded as an event in its row, and a
/// suffix sum over each row turns events into windings.
pub fn winding_field_with_cap(walks: &[ClosedWalk], cap_bytes: u64) -> Result<WindingField> {
    if walks.is_empty() {
        return Err(domain("winding_field", "no walks"));
    }
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (0i64, 0i64, 0i64, 0i64);
    for w in walks {
        for (x, y) in w.vertices() {
            xmin = xmin.min(x);
            xmax = xmax.max(x);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
    }
    let bbox = CellBox {
        x0: xmin - 1,
        y0: ymin - 1,
        width: (xmax - xmin + 2) as usize,
        height: (ymax - ymin + 2) as usize,
    };
    let cells = bbox.cells() as u64;
    let bytes = cells * BYTES_PER_CELL;
    if bytes > cap_bytes {
        return Err(Error::MemoryBudget {
            cells,
            bytes,
            cap: cap_bytes,
        });
    }
    let width = bbox.width;
    let n = bbox.cells();
    let mut winding = vec![0i32; n];
    let mut v_edge = vec![false; n];
    let mut h_edge = vec![false; n];
    let mut row_extent = vec![(i64::MAX, i64::MIN); bbox.height - 1];
    let idx = |x: i64, y: i64| (y - bbox.y0) as usize * width + (x - bbox.x0) as usize;

    for w in walks {
        let (mut x, mut y) = (0i64, 0i64);
        for s in w.steps() {
            let e = &mut row_extent[(y - bbox.y0 - 1) as usize];
            e.0 = e.0.min(x);
            e.1 = e.1.max(x);
            match s {
                Step::Right => {
                    h_edge[idx(x, y)] = true;
                    x += 1;
                }
                Step::Left => {
                    x -= 1;
                    h_edge[idx(x, y)] = true;
                }
                Step::Up => {
                    let k = idx(x, y);
                    v_edge[k] = true;
                    winding[k] += 1;
                    y += 1;
                }
                Step::Down => {
                    y -= 1;
                    let k = idx(x, y);
                    v_edge[k] = true;
                    winding[k] -= 1;
                }
            }
        }
    }

    // winding(i, j) = Σ_{k > i} events(k, j)
    for row in winding.chunks_mut(width) {
        let mut running = 0i32;
        for v in row.iter_mut().rev() {
            let ev = *v;
            *v = running;
            running += ev;
        }
    }

    Ok(WindingField {
        bbox,
        winding,
        v_edge,
        h_edge,
        row_extent,
        m: walks.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn walk(s: &str) -> ClosedWalk {
        ClosedWalk::parse_line(s).unwrap()
    }

    #[test]
    fn unit_squares() {
        let f = winding_field(&[walk("RULD")]).unwrap();
        assert_eq!(f.winding(0, 0), 1);
        assert_eq!(f.winding(-1, 0), 0);
        assert_eq!(f.winding(1, 0), 0);
        assert_eq!(f.winding(0, 1), 0);
        let f = winding_field(&[walk("URDL")]).unwrap();
        assert_eq!(f.winding(0, 0), -1);
    }

    #[test]
    fn windings_add_across_walks() {
        let cw = walk("URDL");
        let ccw_twice = walk("RULDRULD");
        let f = winding_field(&[cw, ccw_twice]).unwrap();
        assert_eq!(f.winding(0, 0), 1);
        assert_eq!(f.m(), 2);
    }

    #[test]
    fn boundary_ring_is_zero() {
        let f = winding_field(&[walk("RRUULLDDRULD"), walk("LDRU")]).unwrap();
        let b = f.bbox();
        for i in b.x0..b.x0 + b.width as i64 {
            assert_eq!(f.winding(i, b.y0), 0);
            assert_eq!(f.winding(i, b.y0 + b.height as i64 - 1), 0);
        }
        for j in b.y0..b.y0 + b.height as i64 {
            assert_eq!(f.winding(b.x0, j), 0);
            assert_eq!(f.winding(b.x0 + b.width as i64 - 1, j), 0);
        }
    }

    #[test]
    fn edges_are_recorded() {
        let f = winding_field(&[walk("RULD")]).unwrap();
        assert!(f.horizontal_edge_used(0, 0));
        assert!(f.horizontal_edge_used(0, 1));
        assert!(f.vertical_edge_used(0, 0));
        assert!(f.vertical_edge_used(1, 0));
        assert!(!f.vertical_edge_used(-1, 0));
        assert!(!f.horizontal_edge_used(1, 0));
    }

    #[test]
    fn memory_cap_is_enforced() {
        let w = walk("RRRRRRRRUUUUUUUULLLLLLLLDDDDDDDD");
        let err = winding_field_with_cap(&[w], 100).unwrap_err();
        assert!(matches!(err, Error::MemoryBudget { .. }));
    }
}
