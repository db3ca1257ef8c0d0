//! Exact integer orientation and segment-intersection predicates.
//!
//! Coordinates are `i64`. Differences are taken in `i128`; products of two
//! differences can exceed `i128` at the extremes of the `i64` range, so the
//! sign of `a*b - c*d` falls back to a 256-bit comparison when the fast path
//! overflows.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::ConflictKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub const fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    fn has_endpoint(&self, p: Point) -> bool {
        self.a == p || self.b == p
    }
}

/// Magnitude product of two `u128`s as `(high, low)`.
fn widening_mul(a: u128, b: u128) -> (u128, u128) {
    const MASK: u128 = u64::MAX as u128;
    let (a_hi, a_lo) = (a >> 64, a & MASK);
    let (b_hi, b_lo) = (b >> 64, b & MASK);
    let ll = a_lo * b_lo;
    let lh = a_lo * b_hi;
    let hl = a_hi * b_lo;
    let hh = a_hi * b_hi;
    let mid = (ll >> 64) + (lh & MASK) + (hl & MASK);
    let lo = (ll & MASK) | (mid << 64);
    let hi = hh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    (hi, lo)
}

/// A signed 256-bit product, ordered by value.
#[derive(PartialEq, Eq)]
struct WideProduct {
    negative: bool,
    hi: u128,
    lo: u128,
}

impl WideProduct {
    fn of(a: i128, b: i128) -> Self {
        let (hi, lo) = widening_mul(a.unsigned_abs(), b.unsigned_abs());
        let zero = hi == 0 && lo == 0;
        WideProduct {
            negative: !zero && ((a < 0) != (b < 0)),
            hi,
            lo,
        }
    }
}

impl Ord for WideProduct {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.negative, other.negative) {
            (false, true) => Ordering::Greater,
            (true, false) => Ordering::Less,
            (false, false) => (self.hi, self.lo).cmp(&(other.hi, other.lo)),
            (true, true) => (other.hi, other.lo).cmp(&(self.hi, self.lo)),
        }
    }
}

impl PartialOrd for WideProduct {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact sign of `a*b - c*d`.
fn sign_of_difference(a: i128, b: i128, c: i128, d: i128) -> Ordering {
    if let (Some(ab), Some(cd)) = (a.checked_mul(b), c.checked_mul(d)) {
        if let Some(diff) = ab.checked_sub(cd) {
            return diff.cmp(&0);
        }
        return ab.cmp(&cd);
    }
    WideProduct::of(a, b).cmp(&WideProduct::of(c, d))
}

fn delta(p: Point, q: Point) -> (i128, i128) {
    (q.x as i128 - p.x as i128, q.y as i128 - p.y as i128)
}

/// Sign of the cross product `(q - p) x (r - p)`.
pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    let (ux, uy) = delta(p, q);
    let (vx, vy) = delta(p, r);
    match sign_of_difference(ux, vy, uy, vx) {
        Ordering::Greater => Orientation::CounterClockwise,
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// Whether `p` lies strictly between the endpoints of `s` on its supporting line.
pub fn in_relative_interior(p: Point, s: &Segment) -> bool {
    if s.has_endpoint(p) || orientation(s.a, s.b, p) != Orientation::Collinear {
        return false;
    }
    // collinear and strictly between iff (p - a) . (p - b) < 0
    let (ax, ay) = delta(s.a, p);
    let (bx, by) = delta(s.b, p);
    sign_of_difference(ax, bx, -ay, by) == Ordering::Less
}

fn opposite(a: Orientation, b: Orientation) -> bool {
    matches!(
        (a, b),
        (Orientation::Clockwise, Orientation::CounterClockwise)
            | (Orientation::CounterClockwise, Orientation::Clockwise)
    )
}

fn bounding_boxes_disjoint(s: &Segment, t: &Segment) -> bool {
    let (sx0, sx1) = (s.a.x.min(s.b.x), s.a.x.max(s.b.x));
    let (sy0, sy1) = (s.a.y.min(s.b.y), s.a.y.max(s.b.y));
    let (tx0, tx1) = (t.a.x.min(t.b.x), t.a.x.max(t.b.x));
    let (ty0, ty1) = (t.a.y.min(t.b.y), t.a.y.max(t.b.y));
    sx1 < tx0 || tx1 < sx0 || sy1 < ty0 || ty1 < sy0
}

/// Classifies how two straight segments meet.
///
/// Returns `None` when they are disjoint or touch only at a common endpoint
/// listed in `shared`. Collinear segments sharing more than one point always
/// conflict, even across a shared vertex. A common endpoint that is not in
/// `shared` is reported as [`ConflictKind::CoincidentVertices`].
pub fn segments_conflict(
    s: &Segment,
    t: &Segment,
    shared: &[Point],
) -> Result<Option<ConflictKind>> {
    for seg in [s, t] {
        if seg.a == seg.b {
            return Err(Error::DegenerateSegment {
                x: seg.a.x,
                y: seg.a.y,
            });
        }
    }
    if bounding_boxes_disjoint(s, t) {
        return Ok(None);
    }

    let o1 = orientation(s.a, s.b, t.a);
    let o2 = orientation(s.a, s.b, t.b);

    let endpoint_inside = in_relative_interior(t.a, s)
        || in_relative_interior(t.b, s)
        || in_relative_interior(s.a, t)
        || in_relative_interior(s.b, t);

    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        let same = (s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a);
        if same || endpoint_inside {
            return Ok(Some(ConflictKind::CollinearOverlap));
        }
    } else {
        let o3 = orientation(t.a, t.b, s.a);
        let o4 = orientation(t.a, t.b, s.b);
        if opposite(o1, o2) && opposite(o3, o4) {
            return Ok(Some(ConflictKind::ProperCrossing));
        }
        if endpoint_inside {
            return Ok(Some(ConflictKind::EndpointInInterior));
        }
    }

    let common = [s.a, s.b].into_iter().find(|&p| t.has_endpoint(p));
    Ok(match common {
        Some(p) if shared.contains(&p) => None,
        Some(_) => Some(ConflictKind::CoincidentVertices),
        None => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::new(a.into(), b.into())
    }

    #[test]
    fn orientation_basics() {
        assert_eq!(
            orientation(p(0, 0), p(1, 1), p(2, 2)),
            Orientation::Collinear
        );
        assert_eq!(
            orientation(p(0, 0), p(1, 0), p(0, 1)),
            Orientation::CounterClockwise
        );
        assert_eq!(
            orientation(p(0, 0), p(0, 1), p(1, 0)),
            Orientation::Clockwise
        );
    }

    #[test]
    fn orientation_at_extreme_coordinates() {
        let (lo, hi) = (i64::MIN, i64::MAX);
        // products here exceed i128
        assert_eq!(
            orientation(p(lo, lo), p(hi, hi), p(lo, hi)),
            Orientation::CounterClockwise
        );
        assert_eq!(
            orientation(p(lo, lo), p(hi, hi), p(hi, lo)),
            Orientation::Clockwise
        );
        assert_eq!(
            orientation(p(lo, lo), p(0, 0), p(hi - 1, hi - 1)),
            Orientation::Collinear
        );
        // one unit off the diagonal
        assert_eq!(
            orientation(p(lo, lo), p(hi, hi), p(hi, hi - 1)),
            Orientation::Clockwise
        );
    }

    #[test]
    fn widening_mul_matches_small_products() {
        for (a, b) in [
            (0u128, 5u128),
            (u64::MAX as u128, u64::MAX as u128),
            (1 << 70, 1 << 3),
        ] {
            let (hi, lo) = widening_mul(a, b);
            if let Some(prod) = a.checked_mul(b) {
                assert_eq!((hi, lo), (0, prod));
            }
        }
        assert_eq!(widening_mul(1 << 127, 4), (2, 0));
        assert_eq!(widening_mul(u128::MAX, u128::MAX), (u128::MAX - 1, 1));
    }

    #[test]
    fn conflict_examples() {
        let x = segments_conflict(&seg((0, 0), (2, 2)), &seg((0, 2), (2, 0)), &[]).unwrap();
        assert_eq!(x, Some(ConflictKind::ProperCrossing));

        let shared =
            segments_conflict(&seg((0, 0), (1, 1)), &seg((1, 1), (2, 0)), &[p(1, 1)]).unwrap();
        assert_eq!(shared, None);

        let overlap = segments_conflict(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0)), &[]).unwrap();
        assert_eq!(overlap, Some(ConflictKind::CollinearOverlap));

        let touch = segments_conflict(&seg((0, 0), (2, 0)), &seg((1, 0), (1, 1)), &[]).unwrap();
        assert_eq!(touch, Some(ConflictKind::EndpointInInterior));
    }

    #[test]
    fn conflict_edge_cases() {
        // collinear, shared vertex, overlapping: still a conflict
        let r = segments_conflict(&seg((0, 0), (2, 0)), &seg((0, 0), (1, 0)), &[p(0, 0)]).unwrap();
        assert_eq!(r, Some(ConflictKind::CollinearOverlap));
        // collinear, touching end to end at a shared vertex
        let r = segments_conflict(&seg((0, 0), (1, 0)), &seg((1, 0), (3, 0)), &[p(1, 0)]).unwrap();
        assert_eq!(r, None);
        // same, but the touching point is not a shared vertex
        let r = segments_conflict(&seg((0, 0), (1, 0)), &seg((1, 0), (3, 0)), &[]).unwrap();
        assert_eq!(r, Some(ConflictKind::CoincidentVertices));
        // collinear, disjoint
        let r = segments_conflict(&seg((0, 0), (1, 1)), &seg((2, 2), (3, 3)), &[]).unwrap();
        assert_eq!(r, None);
        // identical segments
        let r = segments_conflict(
            &seg((0, 0), (1, 1)),
            &seg((1, 1), (0, 0)),
            &[p(0, 0), p(1, 1)],
        )
        .unwrap();
        assert_eq!(r, Some(ConflictKind::CollinearOverlap));
        // parallel, not collinear
        let r = segments_conflict(&seg((0, 0), (2, 0)), &seg((0, 1), (2, 1)), &[]).unwrap();
        assert_eq!(r, None);
        // lines cross but segments do not reach
        let r = segments_conflict(&seg((0, 0), (1, 1)), &seg((3, 0), (2, 1)), &[]).unwrap();
        assert_eq!(r, None);
    }

    #[test]
    fn degenerate_segment_rejected() {
        let err = segments_conflict(&seg((1, 1), (1, 1)), &seg((0, 0), (2, 2)), &[]);
        assert_eq!(err, Err(Error::DegenerateSegment { x: 1, y: 1 }));
    }

    #[test]
    fn interior_test() {
        let s = seg((0, 0), (4, 2));
        assert!(in_relative_interior(p(2, 1), &s));
        assert!(!in_relative_interior(p(4, 2), &s));
        assert!(!in_relative_interior(p(6, 3), &s));
        assert!(!in_relative_interior(p(-2, -1), &s));
        assert!(!in_relative_interior(p(2, 2), &s));
    }
}
