//! Exact interval algebra with open/closed boundaries.
//!
//! Health schemes partition a parameter's value domain into bands whose
//! boundary ownership matters: 300 lux belongs to `[300, 360)` but 360 does
//! not. Everything here keeps open/closed flags explicit and compares
//! boundary values exactly, so a scheme either partitions its domain or the
//! [`PartitionReport`] says precisely where it gaps or overlaps.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// One interval endpoint. `Unbounded` means -inf as a lower bound and
/// +inf as an upper bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IntervalBound {
    Unbounded,
    Open(f64),
    Closed(f64),
}

impl IntervalBound {
    pub fn value(self) -> Option<f64> {
        match self {
            IntervalBound::Unbounded => None,
            IntervalBound::Open(v) | IntervalBound::Closed(v) => Some(v),
        }
    }

    pub fn is_closed(self) -> bool {
        matches!(self, IntervalBound::Closed(_))
    }
}

/// Error raised by invalid interval construction.
#[derive(Debug, Clone, PartialEq)]
pub enum IntervalError {
    /// Lower bound above upper bound.
    Inverted { lower: f64, upper: f64 },
    /// Degenerate interval (`lower == upper`) with an open end.
    OpenPoint { at: f64 },
    /// An endpoint was NaN.
    NotANumber,
}

impl fmt::Display for IntervalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalError::Inverted { lower, upper } => {
                write!(f, "interval lower bound {lower} exceeds upper bound {upper}")
            }
            IntervalError::OpenPoint { at } => {
                write!(f, "degenerate interval at {at} must be closed on both ends")
            }
            IntervalError::NotANumber => write!(f, "interval bound is not a number"),
        }
    }
}

impl core::error::Error for IntervalError {}

/// A contiguous range of values with explicit boundary ownership.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lower: IntervalBound,
    upper: IntervalBound,
}

impl Interval {
    pub fn new(lower: IntervalBound, upper: IntervalBound) -> Result<Interval, IntervalError> {
        if let Some(v) = lower.value() {
            if v.is_nan() {
                return Err(IntervalError::NotANumber);
            }
        }
        if let Some(v) = upper.value() {
            if v.is_nan() {
                return Err(IntervalError::NotANumber);
            }
        }
        if let (Some(lo), Some(hi)) = (lower.value(), upper.value()) {
            if lo > hi {
                return Err(IntervalError::Inverted { lower: lo, upper: hi });
            }
            if lo == hi && !(lower.is_closed() && upper.is_closed()) {
                return Err(IntervalError::OpenPoint { at: lo });
            }
        }
        Ok(Interval { lower, upper })
    }

    /// `[lo, hi]`
    pub fn closed(lo: f64, hi: f64) -> Interval {
        Interval::new(IntervalBound::Closed(lo), IntervalBound::Closed(hi))
            .expect("closed interval bounds must be ordered")
    }

    /// `[lo, hi)`
    pub fn closed_open(lo: f64, hi: f64) -> Interval {
        Interval::new(IntervalBound::Closed(lo), IntervalBound::Open(hi))
            .expect("half-open interval bounds must be ordered")
    }

    /// `(lo, hi]`
    pub fn open_closed(lo: f64, hi: f64) -> Interval {
        Interval::new(IntervalBound::Open(lo), IntervalBound::Closed(hi))
            .expect("half-open interval bounds must be ordered")
    }

    /// `(lo, hi)`
    pub fn open(lo: f64, hi: f64) -> Interval {
        Interval::new(IntervalBound::Open(lo), IntervalBound::Open(hi))
            .expect("open interval bounds must be ordered")
    }

    /// `[lo, +inf)`
    pub fn at_least(lo: f64) -> Interval {
        Interval { lower: IntervalBound::Closed(lo), upper: IntervalBound::Unbounded }
    }

    /// `(lo, +inf)`
    pub fn greater_than(lo: f64) -> Interval {
        Interval { lower: IntervalBound::Open(lo), upper: IntervalBound::Unbounded }
    }

    /// `(-inf, hi]`
    pub fn at_most(hi: f64) -> Interval {
        Interval { lower: IntervalBound::Unbounded, upper: IntervalBound::Closed(hi) }
    }

    /// `(-inf, hi)`
    pub fn less_than(hi: f64) -> Interval {
        Interval { lower: IntervalBound::Unbounded, upper: IntervalBound::Open(hi) }
    }

    /// `(-inf, +inf)`
    pub fn unbounded() -> Interval {
        Interval { lower: IntervalBound::Unbounded, upper: IntervalBound::Unbounded }
    }

    /// Single point `[v, v]`.
    pub fn point(v: f64) -> Interval {
        Interval::closed(v, v)
    }

    pub fn lower(&self) -> IntervalBound {
        self.lower
    }

    pub fn upper(&self) -> IntervalBound {
        self.upper
    }

    /// Exact membership test; boundary values follow the open/closed flags.
    pub fn contains(&self, x: f64) -> bool {
        if x.is_nan() {
            return false;
        }
        let above_lower = match self.lower {
            IntervalBound::Unbounded => true,
            IntervalBound::Open(v) => x > v,
            IntervalBound::Closed(v) => x >= v,
        };
        let below_upper = match self.upper {
            IntervalBound::Unbounded => true,
            IntervalBound::Open(v) => x < v,
            IntervalBound::Closed(v) => x <= v,
        };
        above_lower && below_upper
    }

    /// Intersection with `other`, `None` when empty.
    pub fn clip(&self, other: &Interval) -> Option<Interval> {
        let lower = tighter_lower(self.lower, other.lower);
        let upper = tighter_upper(self.upper, other.upper);
        match Interval::new(lower, upper) {
            Ok(iv) => Some(iv),
            Err(_) => None,
        }
    }
}

fn tighter_lower(a: IntervalBound, b: IntervalBound) -> IntervalBound {
    match (a.value(), b.value()) {
        (None, _) => b,
        (_, None) => a,
        (Some(va), Some(vb)) => {
            if va > vb {
                a
            } else if vb > va {
                b
            } else if a.is_closed() && b.is_closed() {
                a
            } else {
                IntervalBound::Open(va)
            }
        }
    }
}

fn tighter_upper(a: IntervalBound, b: IntervalBound) -> IntervalBound {
    match (a.value(), b.value()) {
        (None, _) => b,
        (_, None) => a,
        (Some(va), Some(vb)) => {
            if va < vb {
                a
            } else if vb < va {
                b
            } else if a.is_closed() && b.is_closed() {
                a
            } else {
                IntervalBound::Open(va)
            }
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lower {
            IntervalBound::Unbounded => write!(f, "(-inf, ")?,
            IntervalBound::Open(v) => write!(f, "({v}, ")?,
            IntervalBound::Closed(v) => write!(f, "[{v}, ")?,
        }
        match self.upper {
            IntervalBound::Unbounded => write!(f, "+inf)"),
            IntervalBound::Open(v) => write!(f, "{v})"),
            IntervalBound::Closed(v) => write!(f, "{v}]"),
        }
    }
}

/// An ordered list of pairwise-disjoint intervals.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

/// Error raised when assembling an interval set from overlapping pieces.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapError {
    pub first: Interval,
    pub second: Interval,
}

impl fmt::Display for OverlapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "intervals {} and {} overlap", self.first, self.second)
    }
}

impl core::error::Error for OverlapError {}

impl IntervalSet {
    pub fn empty() -> IntervalSet {
        IntervalSet { intervals: Vec::new() }
    }

    /// Build from pieces, sorting them ascending. Overlapping pieces are an
    /// error; adjacent pieces stay separate (they carry distinct brackets).
    pub fn new(mut intervals: Vec<Interval>) -> Result<IntervalSet, OverlapError> {
        intervals.sort_by(|a, b| {
            let ka = lower_sort_key(a);
            let kb = lower_sort_key(b);
            ka.partial_cmp(&kb).unwrap_or(core::cmp::Ordering::Equal)
        });
        for pair in intervals.windows(2) {
            if overlaps(&pair[0], &pair[1]) {
                return Err(OverlapError { first: pair[0], second: pair[1] });
            }
        }
        Ok(IntervalSet { intervals })
    }

    pub fn of(interval: Interval) -> IntervalSet {
        IntervalSet { intervals: vec![interval] }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.intervals.iter().any(|iv| iv.contains(x))
    }

    /// Union with another disjoint set.
    pub fn union(&self, other: &IntervalSet) -> Result<IntervalSet, OverlapError> {
        let mut all = self.intervals.clone();
        for iv in &other.intervals {
            // Idempotence: identical members collapse.
            if !all.contains(iv) {
                all.push(*iv);
            }
        }
        IntervalSet::new(all)
    }

    /// Intersect every member with `domain`, dropping empty results.
    pub fn clip(&self, domain: &Interval) -> IntervalSet {
        let intervals = self
            .intervals
            .iter()
            .filter_map(|iv| iv.clip(domain))
            .collect();
        IntervalSet { intervals }
    }

    /// The parts of `domain` not covered by this set.
    pub fn complement_within(&self, domain: &Interval) -> IntervalSet {
        let report = partition_check(core::slice::from_ref(self), domain);
        IntervalSet { intervals: report.gaps }
    }
}

fn lower_sort_key(iv: &Interval) -> (f64, u8) {
    match iv.lower() {
        IntervalBound::Unbounded => (f64::NEG_INFINITY, 0),
        IntervalBound::Closed(v) => (v, 0),
        IntervalBound::Open(v) => (v, 1),
    }
}

fn overlaps(a: &Interval, b: &Interval) -> bool {
    // a sorted before b: overlap iff a's upper reaches into b's lower.
    match (a.upper().value(), b.lower().value()) {
        (None, _) => true,
        (_, None) => true,
        (Some(ua), Some(lb)) => {
            if ua > lb {
                true
            } else if ua < lb {
                false
            } else {
                a.upper().is_closed() && b.lower().is_closed()
            }
        }
    }
}

/// Outcome of checking whether a family of sets partitions a domain.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PartitionReport {
    /// Regions of the domain covered by no set.
    pub gaps: Vec<Interval>,
    /// Regions of the domain covered by more than one set.
    pub overlaps: Vec<Interval>,
}

impl PartitionReport {
    pub fn is_partition(&self) -> bool {
        self.gaps.is_empty() && self.overlaps.is_empty()
    }
}

impl fmt::Display for PartitionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_partition() {
            return write!(f, "complete partition");
        }
        write!(f, "gaps: [")?;
        for (i, g) in self.gaps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "], overlaps: [")?;
        for (i, o) in self.overlaps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{o}")?;
        }
        write!(f, "]")
    }
}

/// Report every gap and overlap between the union of `sets` and `domain`.
///
/// The domain is cut at every boundary value occurring in any set into
/// elementary regions (single points and open segments). Coverage is
/// constant on each region, so testing one representative per region is
/// exact. Adjacent regions with the same defect merge in the report.
pub fn partition_check(sets: &[IntervalSet], domain: &Interval) -> PartitionReport {
    let mut cuts: Vec<f64> = Vec::new();
    let mut push = |v: Option<f64>| {
        if let Some(v) = v {
            if v.is_finite() {
                cuts.push(v);
            }
        }
    };
    push(domain.lower().value());
    push(domain.upper().value());
    for set in sets {
        for iv in set.intervals() {
            push(iv.lower().value());
            push(iv.upper().value());
        }
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap_or(core::cmp::Ordering::Equal));
    cuts.dedup();

    let mut gaps: Vec<Interval> = Vec::new();
    let mut overlaps: Vec<Interval> = Vec::new();
    let mut classify = |region: Interval, witness: f64| {
        if !domain.contains(witness) {
            return;
        }
        let covered = sets.iter().filter(|s| s.contains(witness)).count();
        let bucket = match covered {
            0 => &mut gaps,
            1 => return,
            _ => &mut overlaps,
        };
        match bucket.last().copied() {
            Some(prev) => match merge_adjacent(&prev, &region) {
                Some(merged) => *bucket.last_mut().unwrap() = merged,
                None => bucket.push(region),
            },
            None => bucket.push(region),
        }
    };

    if cuts.is_empty() {
        // No finite boundaries anywhere: the only region is the whole line.
        classify(Interval::unbounded(), 0.0);
        return PartitionReport { gaps, overlaps };
    }

    // Region below the smallest cut.
    let first = cuts[0];
    classify(Interval::less_than(first), first - 1.0);
    for (i, &v) in cuts.iter().enumerate() {
        classify(Interval::point(v), v);
        if let Some(&next) = cuts.get(i + 1) {
            classify(Interval::open(v, next), midpoint(v, next));
        }
    }
    let last = *cuts.last().unwrap();
    classify(Interval::greater_than(last), last + 1.0);

    PartitionReport { gaps, overlaps }
}

fn midpoint(a: f64, b: f64) -> f64 {
    a + (b - a) / 2.0
}

/// Merge `[v, v]` with `(v, w)` style neighbours into one interval.
fn merge_adjacent(a: &Interval, b: &Interval) -> Option<Interval> {
    let (ua, lb) = (a.upper(), b.lower());
    let join = match (ua.value(), lb.value()) {
        (Some(x), Some(y)) if x == y => ua.is_closed() != lb.is_closed(),
        _ => false,
    };
    if !join {
        return None;
    }
    Interval::new(a.lower(), b.upper()).ok()
}
