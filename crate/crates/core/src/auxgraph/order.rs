//! Counter-clockwise neighbor order and lazy successor search.
//!
//! Around a vertex `c`, targets `w >= c` are ordered by the angle of `w - c`
//! measured from due east toward due north, then by L-infinity distance, then
//! by `(x, y)`. All comparisons are exact integer arithmetic.

use std::cmp::Ordering;

use crate::grid::Vertex;

/// Total order on targets dominating `center`.
pub fn ccw_cmp(center: Vertex, a: Vertex, b: Vertex) -> Ordering {
    debug_assert!(center.dominated_by(a) && center.dominated_by(b));
    let (ax, ay) = ((a.x - center.x) as i64, (a.y - center.y) as i64);
    let (bx, by) = ((b.x - center.x) as i64, (b.y - center.y) as i64);
    // cross(a, b) > 0 means b is further counter-clockwise than a.
    let cross = ax * by - ay * bx;
    0.cmp(&cross)
        .then_with(|| ax.max(ay).cmp(&bx.max(by)))
        .then_with(|| (a.x, a.y).cmp(&(b.x, b.y)))
}

/// An axis-parallel run of lattice points, closed at both ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Segment {
    /// `y` fixed, `x` in `lo..=hi`.
    Row { y: usize, lo: usize, hi: usize },
    /// `x` fixed, `y` in `lo..=hi`.
    Column { x: usize, lo: usize, hi: usize },
}

impl Segment {
    fn len(&self) -> usize {
        match *self {
            Segment::Row { lo, hi, .. } | Segment::Column { lo, hi, .. } => {
                if hi >= lo {
                    hi - lo + 1
                } else {
                    0
                }
            }
        }
    }

    /// Point `t` of the segment listed in counter-clockwise order around
    /// `center`. Every point must dominate `center`.
    fn point_in_order(&self, center: Vertex, t: usize) -> Vertex {
        match *self {
            // Above the center the angle falls as x grows; on the center's
            // own row all points share angle 0 and distance grows with x.
            Segment::Row { y, hi, .. } if y > center.y => Vertex::new(hi - t, y),
            Segment::Row { y, lo, .. } => Vertex::new(lo + t, y),
            // Right of the center the angle rises with y; on the center's own
            // column the angle is fixed and distance grows with y.
            Segment::Column { x, lo, .. } => Vertex::new(x, lo + t),
        }
    }

    /// The first point of the segment strictly after `after` in the order
    /// around `center` (the first point overall when `after` is `None`).
    pub fn successor(&self, center: Vertex, after: Option<Vertex>) -> Option<Vertex> {
        let len = self.len();
        if len == 0 {
            return None;
        }
        let Some(after) = after else {
            return Some(self.point_in_order(center, 0));
        };
        let (mut lo, mut hi) = (0, len);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if ccw_cmp(center, self.point_in_order(center, mid), after) == Ordering::Greater {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        (lo < len).then(|| self.point_in_order(center, lo))
    }

    pub fn contains(&self, v: Vertex) -> bool {
        match *self {
            Segment::Row { y, lo, hi } => v.y == y && (lo..=hi).contains(&v.x),
            Segment::Column { x, lo, hi } => v.x == x && (lo..=hi).contains(&v.y),
        }
    }
}

/// The boundary points of the closed square `[x0, x0+side] x [y0, y0+side]`
/// that dominate `center` and differ from it, as at most four segments.
/// `center` must lie in the square.
pub(crate) fn boundary_segments(center: Vertex, origin: Vertex, side: usize) -> [Segment; 4] {
    let (x0, y0) = (origin.x, origin.y);
    let (x1, y1) = (x0 + side, y0 + side);
    debug_assert!((x0..=x1).contains(&center.x) && (y0..=y1).contains(&center.y));
    // Sentinel for an empty segment.
    let empty = Segment::Row { y: 0, lo: 1, hi: 0 };
    let top = if center.y == y1 {
        Segment::Row {
            y: y1,
            lo: center.x + 1,
            hi: x1,
        }
    } else {
        Segment::Row {
            y: y1,
            lo: center.x,
            hi: x1,
        }
    };
    let right = if center.x == x1 {
        Segment::Column {
            x: x1,
            lo: center.y + 1,
            hi: y1,
        }
    } else {
        Segment::Column {
            x: x1,
            lo: center.y,
            hi: y1,
        }
    };
    let bottom = if center.y == y0 && y0 != y1 {
        Segment::Row {
            y: y0,
            lo: center.x + 1,
            hi: x1,
        }
    } else {
        empty
    };
    let left = if center.x == x0 && x0 != x1 {
        Segment::Column {
            x: x0,
            lo: center.y + 1,
            hi: y1,
        }
    } else {
        empty
    };
    [top, right, bottom, left]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_brute(center: Vertex, pts: &[Vertex]) -> Vec<Vertex> {
        let mut v = pts.to_vec();
        // angle by atan2 is fine for a brute-force check at this scale
        v.sort_by(|a, b| {
            let ta = ((a.y - center.y) as f64).atan2((a.x - center.x) as f64);
            let tb = ((b.y - center.y) as f64).atan2((b.x - center.x) as f64);
            ta.partial_cmp(&tb)
                .unwrap()
                .then_with(|| {
                    let da = (a.x - center.x).max(a.y - center.y);
                    let db = (b.x - center.x).max(b.y - center.y);
                    da.cmp(&db)
                })
                .then_with(|| (a.x, a.y).cmp(&(b.x, b.y)))
        });
        v
    }

    #[test]
    fn east_first_then_north() {
        let c = Vertex::new(0, 0);
        assert_eq!(
            ccw_cmp(c, Vertex::new(3, 0), Vertex::new(3, 1)),
            Ordering::Less
        );
        assert_eq!(
            ccw_cmp(c, Vertex::new(3, 3), Vertex::new(0, 3)),
            Ordering::Less
        );
        assert_eq!(
            ccw_cmp(c, Vertex::new(1, 0), Vertex::new(3, 0)),
            Ordering::Less
        );
        assert_eq!(
            ccw_cmp(c, Vertex::new(2, 2), Vertex::new(2, 2)),
            Ordering::Equal
        );
    }

    #[test]
    fn matches_float_angles() {
        let c = Vertex::new(2, 1);
        let pts: Vec<_> = (1..=7)
            .flat_map(|y| (2..=8).map(move |x| Vertex::new(x, y)))
            .filter(|&v| v != c)
            .collect();
        let mut exact = pts.clone();
        exact.sort_by(|a, b| ccw_cmp(c, *a, *b));
        assert_eq!(exact, sorted_brute(c, &pts));
    }

    #[test]
    fn successor_walks_boundary_in_order() {
        for (center, origin, side) in [
            (Vertex::new(0, 0), Vertex::new(0, 0), 4),
            (Vertex::new(2, 0), Vertex::new(0, 0), 4),
            (Vertex::new(0, 3), Vertex::new(0, 0), 4),
            (Vertex::new(4, 1), Vertex::new(0, 0), 4),
            (Vertex::new(1, 4), Vertex::new(0, 0), 4),
            (Vertex::new(6, 5), Vertex::new(4, 4), 4),
            (Vertex::new(2, 3), Vertex::new(0, 0), 4),
        ] {
            let segs = boundary_segments(center, origin, side);
            let mut all: Vec<Vertex> = Vec::new();
            for y in origin.y..=origin.y + side {
                for x in origin.x..=origin.x + side {
                    let v = Vertex::new(x, y);
                    let on_edge = x == origin.x
                        || x == origin.x + side
                        || y == origin.y
                        || y == origin.y + side;
                    if on_edge && v != center && center.dominated_by(v) {
                        all.push(v);
                    }
                }
            }
            let expect = sorted_brute(center, &all);
            let mut got = Vec::new();
            let mut after = None;
            loop {
                let next = segs
                    .iter()
                    .filter_map(|s| s.successor(center, after))
                    .min_by(|a, b| ccw_cmp(center, *a, *b));
                match next {
                    Some(v) => {
                        got.push(v);
                        after = Some(v);
                    }
                    None => break,
                }
            }
            assert_eq!(got, expect, "center {center}");
        }
    }
}
