//! Path sequences (Maya diagrams) for partitions and bipartitions, the
//! A/B/C/D column calculus with its region-count identities, and the one-A
//! block families.
//!
//! A partition is encoded by walking its border: 0 for each vertical edge,
//! 1 for each horizontal edge, indexed by content, with a bar between
//! positions 0 and 1.  Position c carries a 0 exactly when c = p_i - i + 1
//! for some row i (empty rows included), so far to the left everything is 0
//! and far to the right everything is 1.

use std::collections::BTreeMap;
use std::fmt;

use crate::core::{Bipartition, Params, Partition};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// single path sequences
// ---------------------------------------------------------------------------

/// A doubly infinite 0/1 sequence that is 0 far left and 1 far right, stored
/// as its volatile window.  Normalized so the window starts with a 1 and ends
/// with a 0 (or is empty); this makes equality structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathSeq {
    window: Vec<u8>,
    start: i64,
}

impl PathSeq {
    pub fn new(mut window: Vec<u8>, mut start: i64) -> PathSeq {
        debug_assert!(window.iter().all(|&b| b <= 1));
        while window.first() == Some(&0) {
            window.remove(0);
            start += 1;
        }
        while window.last() == Some(&1) {
            window.pop();
        }
        PathSeq { window, start }
    }

    /// The path of the empty partition: 0 below position 1, 1 from it on.
    pub fn vacuum() -> PathSeq {
        PathSeq { window: Vec::new(), start: 1 }
    }

    pub fn bit(&self, c: i64) -> u8 {
        if c < self.start {
            0
        } else if c >= self.start + self.window.len() as i64 {
            1
        } else {
            self.window[(c - self.start) as usize]
        }
    }

    pub fn window(&self) -> &[u8] {
        &self.window
    }

    /// First window position (a 1 unless the window is empty).
    pub fn window_lo(&self) -> i64 {
        self.start
    }

    /// Last window position (a 0 unless the window is empty); lo - 1 if empty.
    pub fn window_hi(&self) -> i64 {
        self.start + self.window.len() as i64 - 1
    }

    /// Positions of the 0 bits inside the window, ascending.
    pub fn window_zeros(&self) -> Vec<i64> {
        (self.window_lo()..=self.window_hi()).filter(|&c| self.bit(c) == 0).collect()
    }

    /// Balance: the number of 1s at positions <= 0 equals the number of 0s at
    /// positions >= 1.  Exactly the balanced sequences come from partitions.
    pub fn is_balanced(&self) -> bool {
        self.start + self.window_zeros().len() as i64 == 1
    }
}

pub fn partition_to_path(p: &Partition) -> PathSeq {
    let rows = p.rows() as i64;
    let lo = 1 - rows;
    let hi = p.part(1) as i64;
    let zeros: Vec<i64> = (1..=p.rows()).map(|i| p.part(i) as i64 - i as i64 + 1).collect();
    let window = (lo..=hi)
        .map(|c| if zeros.contains(&c) { 0 } else { 1 })
        .collect();
    PathSeq::new(window, lo)
}

pub fn path_to_partition(s: &PathSeq) -> Result<Partition> {
    if !s.is_balanced() {
        return Err(Error::Unbalanced);
    }
    let mut zeros = s.window_zeros();
    zeros.reverse(); // z_1 > z_2 > ... ; row i has p_i = z_i + i - 1
    let parts: Vec<i64> = zeros.iter().enumerate().map(|(i, z)| z + i as i64).collect();
    debug_assert!(parts.iter().all(|&p| p >= 0));
    Partition::new(parts.into_iter().map(|p| p as u32).collect())
        .map_err(|e| Error::Internal(format!("path decoded to a non-partition: {e}")))
}

/// Content multiplicities read off the path: c_k is the running count of 1s
/// up to position k minus the same count for the vacuum path.
pub fn content_counts(s: &PathSeq) -> Result<BTreeMap<i64, u32>> {
    if !s.is_balanced() {
        return Err(Error::Unbalanced);
    }
    let lo = s.window_lo().min(1);
    let hi = s.window_hi().max(0);
    let mut ones = 0i64;
    let mut out = BTreeMap::new();
    for k in lo..=hi {
        ones += s.bit(k) as i64;
        let ck = ones - k.max(0);
        debug_assert!(ck >= 0);
        if ck > 0 {
            out.insert(k, ck as u32);
        }
    }
    Ok(out)
}

/// Number of (1, later 0) index pairs; equals the size of the partition.
pub fn hook_count(s: &PathSeq) -> u32 {
    let mut ones = 0u32;
    let mut pairs = 0u32;
    for c in s.window_lo()..=s.window_hi() {
        if s.bit(c) == 1 {
            ones += 1;
        } else {
            pairs += ones;
        }
    }
    pairs
}

/// All (a, b) with a < b, bit(a) = 1 and bit(b) = 0; one per rim hook.
pub fn hook_pairs(s: &PathSeq) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in s.window_lo()..=s.window_hi() {
        if s.bit(a) == 1 {
            for b in a + 1..=s.window_hi() {
                if s.bit(b) == 0 {
                    out.push((a, b));
                }
            }
        }
    }
    out
}

/// The pair encoding the rim hook of cell (row, col): the 1 sits at
/// col - conj(col), the 0 at p_row - row + 1.
pub fn hook_pair_of_cell(p: &Partition, row: u32, col: u32) -> (i64, i64) {
    let conj = p.conjugate();
    (col as i64 - conj.part(col) as i64, p.part(row) as i64 - row as i64 + 1)
}

/// Swap a 1 at `one` with a 0 at `zero` (either order: unwrapping a hook has
/// one < zero, wrapping has zero < one).
pub fn toggle_pair(s: &PathSeq, one: i64, zero: i64) -> Result<PathSeq> {
    if s.bit(one) != 1 || s.bit(zero) != 0 {
        return Err(Error::Internal(format!(
            "toggle expects a (1, 0) pair, found ({}, {}) at ({one}, {zero})",
            s.bit(one),
            s.bit(zero)
        )));
    }
    let lo = s.window_lo().min(one).min(zero);
    let hi = s.window_hi().max(one).max(zero);
    let window = (lo..=hi)
        .map(|c| {
            if c == one {
                0
            } else if c == zero {
                1
            } else {
                s.bit(c)
            }
        })
        .collect();
    Ok(PathSeq::new(window, lo))
}

impl fmt::Display for PathSeq {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self.window_lo().min(0) - 2;
        let hi = self.window_hi().max(1) + 2;
        write!(fm, "\u{2026}")?;
        for c in lo..=hi {
            write!(fm, "{}", self.bit(c))?;
            if c == 0 {
                write!(fm, "|")?;
            }
        }
        write!(fm, "\u{2026}")
    }
}

// ---------------------------------------------------------------------------
// bipartition path sequences
// ---------------------------------------------------------------------------

/// Column types of a bipartition path: the pair (top bit, bottom bit).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColType {
    A, // (0, 1)
    B, // (1, 0)
    C, // (0, 0)
    D, // (1, 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Left,   // positions <= 0
    Middle, // positions 1..=f
    Right,  // positions >= f+1
}

/// The two-row path sequence of a bipartition: the top row is the path of
/// the first component, the bottom row the path of the second component
/// shifted f positions to the right (stored unshifted; the shift is applied
/// on access).  Bars sit after positions 0 and f.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPathSeq {
    pub top: PathSeq,
    pub bottom: PathSeq,
    pub f: u32,
}

pub fn bipartition_to_bipath(b: &Bipartition, params: &Params) -> BiPathSeq {
    BiPathSeq {
        top: partition_to_path(&b.p1),
        bottom: partition_to_path(&b.p2),
        f: params.f,
    }
}

impl BiPathSeq {
    pub fn bits(&self, i: i64) -> (u8, u8) {
        (self.top.bit(i), self.bottom.bit(i - self.f as i64))
    }

    pub fn column(&self, i: i64) -> ColType {
        match self.bits(i) {
            (0, 1) => ColType::A,
            (1, 0) => ColType::B,
            (0, 0) => ColType::C,
            _ => ColType::D,
        }
    }

    pub fn region(&self, i: i64) -> Region {
        if i <= 0 {
            Region::Left
        } else if i <= self.f as i64 {
            Region::Middle
        } else {
            Region::Right
        }
    }

    /// Range of positions outside of which every column is C (far left) or D
    /// (far right); always contains the middle region.
    pub fn scan_range(&self) -> (i64, i64) {
        let f = self.f as i64;
        let lo = self.top.window_lo().min(self.bottom.window_lo() + f).min(1);
        let hi = self.top.window_hi().max(self.bottom.window_hi() + f).max(f);
        (lo, hi)
    }

    pub fn to_bipartition(&self) -> Result<Bipartition> {
        Ok(Bipartition::new(
            path_to_partition(&self.top)?,
            path_to_partition(&self.bottom)?,
        ))
    }
}

impl fmt::Display for BiPathSeq {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f = self.f as i64;
        let (slo, shi) = self.scan_range();
        let lo = slo.min(0) - 2;
        let hi = shi.max(f + 1) + 2;
        for row in 0..2 {
            write!(fm, "\u{2026}")?;
            for c in lo..=hi {
                let (t, b) = self.bits(c);
                write!(fm, "{}", if row == 0 { t } else { b })?;
                if c == 0 {
                    write!(fm, "|")?;
                }
                if c == f {
                    write!(fm, "|")?;
                }
            }
            write!(fm, "\u{2026}")?;
            if row == 0 {
                writeln!(fm)?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// region counts and the identities
// ---------------------------------------------------------------------------

/// Finite column counts by type and region.  cL and dR are infinite and
/// deliberately absent; every identity below is already in finite form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RegionCounts {
    pub a_l: u32,
    pub a_m: u32,
    pub a_r: u32,
    pub b_l: u32,
    pub b_m: u32,
    pub b_r: u32,
    pub c_m: u32,
    pub c_r: u32,
    pub d_l: u32,
    pub d_m: u32,
}

impl RegionCounts {
    pub fn a_total(&self) -> u32 {
        self.a_l + self.a_m + self.a_r
    }

    pub fn b_total(&self) -> u32 {
        self.b_l + self.b_m + self.b_r
    }
}

pub fn region_counts(s: &BiPathSeq) -> RegionCounts {
    let (lo, hi) = s.scan_range();
    let mut rc = RegionCounts::default();
    for i in lo..=hi {
        match (s.column(i), s.region(i)) {
            (ColType::A, Region::Left) => rc.a_l += 1,
            (ColType::A, Region::Middle) => rc.a_m += 1,
            (ColType::A, Region::Right) => rc.a_r += 1,
            (ColType::B, Region::Left) => rc.b_l += 1,
            (ColType::B, Region::Middle) => rc.b_m += 1,
            (ColType::B, Region::Right) => rc.b_r += 1,
            (ColType::C, Region::Middle) => rc.c_m += 1,
            (ColType::C, Region::Right) => rc.c_r += 1,
            (ColType::D, Region::Left) => rc.d_l += 1,
            (ColType::D, Region::Middle) => rc.d_m += 1,
            (ColType::C, Region::Left) | (ColType::D, Region::Right) => {}
        }
    }
    rc
}

/// Render the window [lo, hi] of a single path with a bar after position 0,
/// ellipses standing for the constant tails.
pub fn render_path(s: &PathSeq, lo: i64, hi: i64) -> String {
    let mut out = String::from("...");
    for i in lo..=hi {
        out.push(char::from(b'0' + s.bit(i)));
        if i == 0 {
            out.push('|');
        }
    }
    out.push_str("...");
    out
}

/// Render the two rows of a bipartition path over [lo, hi] with bars after
/// positions 0 and f (adjacent bars when f = 0).
pub fn render_bipath(s: &BiPathSeq, lo: i64, hi: i64) -> (String, String) {
    let f = s.f as i64;
    let mut top = String::from("...");
    let mut bot = String::from("...");
    for i in lo..=hi {
        let (t, b) = s.bits(i);
        top.push(char::from(b'0' + t));
        bot.push(char::from(b'0' + b));
        if i == 0 || i == f {
            top.push('|');
            bot.push('|');
            if i == 0 && f == 0 {
                top.push('|');
                bot.push('|');
            }
        }
    }
    top.push_str("...");
    bot.push_str("...");
    (top, bot)
}

/// Outcome of evaluating the region-count identities.  The quadratic bound
/// `iv` and the single-A bound `six3` only apply when n <= 2f+3 and are left
/// unevaluated otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityReport {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub six2: bool,
    pub iv: Option<bool>,
    pub six3: Option<bool>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.i
            && self.ii
            && self.iii
            && self.six2
            && self.iv.unwrap_or(true)
            && self.six3.unwrap_or(true)
    }
}

pub fn check_identities(rc: &RegionCounts, params: &Params, n: u32) -> IdentityReport {
    let f = params.f as u64;
    let [a_l, a_m, a_r, b_l, b_m, b_r, c_m, c_r, d_l, d_m] = [
        rc.a_l as u64,
        rc.a_m as u64,
        rc.a_r as u64,
        rc.b_l as u64,
        rc.b_m as u64,
        rc.b_r as u64,
        rc.c_m as u64,
        rc.c_r as u64,
        rc.d_l as u64,
        rc.d_m as u64,
    ];
    let i = b_l + d_l == a_m + c_m + a_r + c_r;
    let ii = b_r + c_r == a_l + d_l + a_m + d_m;
    let iii = f == a_m + b_m + c_m + d_m;
    let six2 = b_l + b_m + b_r == f + a_l + a_m + a_r;
    let in_regime = (n as u64) <= 2 * f + 3;
    let iv = in_regime.then(|| {
        2 * f + 3
            >= (b_l + d_l) * (a_m + c_m + a_r + c_r)
                + (a_l + d_l + a_m + d_m) * (b_r + c_r)
                + (b_m + d_m) * (a_r + c_r)
                + (a_l + d_l) * (b_m + c_m)
                + a_l * b_l
                + a_m * b_m
                + a_r * b_r
    });
    let six3 = in_regime.then(|| a_l + a_m + a_r <= 1);
    IdentityReport { i, ii, iii, six2, iv, six3 }
}

// ---------------------------------------------------------------------------
// one-A families
// ---------------------------------------------------------------------------

/// The bipartitions obtained by sliding the unique A column of `s` through
/// every A/B slot while keeping all C and D columns fixed, in ascending
/// dominance order (the A in the leftmost slot gives the most dominated
/// member).  Errors unless the path has exactly one A column.
pub fn one_a_family(s: &BiPathSeq) -> Result<Vec<Bipartition>> {
    let f = s.f as i64;
    let (lo, hi) = s.scan_range();
    let slots: Vec<i64> = (lo..=hi)
        .filter(|&i| matches!(s.column(i), ColType::A | ColType::B))
        .collect();
    let a_count = (lo..=hi).filter(|&i| s.column(i) == ColType::A).count();
    if a_count != 1 {
        return Err(Error::NotOneA(a_count));
    }
    let mut family = Vec::with_capacity(slots.len());
    for &a_slot in &slots {
        let top_window: Vec<u8> = (lo..=hi)
            .map(|i| {
                if i == a_slot {
                    0
                } else if slots.contains(&i) {
                    1
                } else {
                    s.bits(i).0
                }
            })
            .collect();
        let bottom_window: Vec<u8> = (lo..=hi)
            .map(|i| {
                if i == a_slot {
                    1
                } else if slots.contains(&i) {
                    0
                } else {
                    s.bits(i).1
                }
            })
            .collect();
        let variant = BiPathSeq {
            top: PathSeq::new(top_window, lo),
            bottom: PathSeq::new(bottom_window, lo - f),
            f: s.f,
        };
        let bp = variant
            .to_bipartition()
            .map_err(|e| Error::Internal(format!("one-A slot {a_slot} decoded badly: {e}")))?;
        family.push(bp);
    }
    Ok(family)
}

// ===========================================================================
// tests
// ===========================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{
        enumerate_bipartitions, partitions_of, remove_rim_hook, rim_hook_at, strictly_dominates,
        Node, Order,
    };

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    // =======================================================================
    // single paths
    // =======================================================================

    #[test]
    fn known_paths() {
        let p421 = partition_to_path(&pt("4,2,1"));
        assert_eq!(p421.window(), &[1, 0, 1, 0, 1, 1, 0]);
        assert_eq!(p421.window_lo(), -2);

        let empty = partition_to_path(&Partition::empty());
        assert_eq!(empty, PathSeq::vacuum());
        assert!(empty.window().is_empty());
        assert_eq!(empty.window_lo(), 1);

        let one = partition_to_path(&pt("1"));
        assert_eq!(one.window(), &[1, 0]);
        assert_eq!(one.window_lo(), 0);
    }

    #[test]
    fn path_round_trip() {
        for n in 0..=10u32 {
            for p in partitions_of(n) {
                assert_eq!(path_to_partition(&partition_to_path(&p)).unwrap(), p);
            }
        }
    }

    #[test]
    fn unbalanced_paths_are_rejected() {
        assert_eq!(path_to_partition(&PathSeq::new(vec![1, 0], 5)), Err(Error::Unbalanced));
        assert_eq!(path_to_partition(&PathSeq::new(vec![], 0)), Err(Error::Unbalanced));
        assert!(content_counts(&PathSeq::new(vec![], 3)).is_err());
    }

    #[test]
    fn content_counts_of_421() {
        let cc = content_counts(&partition_to_path(&pt("4,2,1"))).unwrap();
        let expected: BTreeMap<i64, u32> =
            [(-2, 1), (-1, 1), (0, 2), (1, 1), (2, 1), (3, 1)].into_iter().collect();
        assert_eq!(cc, expected);
        assert!(content_counts(&PathSeq::vacuum()).unwrap().is_empty());
        assert_eq!(
            content_counts(&partition_to_path(&pt("1"))).unwrap(),
            [(0, 1)].into_iter().collect()
        );
    }

    #[test]
    fn content_counts_match_diagram() {
        for n in 0..=10u32 {
            for p in partitions_of(n) {
                let mut direct: BTreeMap<i64, u32> = BTreeMap::new();
                for i in 1..=p.rows() {
                    for j in 1..=p.part(i) {
                        *direct.entry(j as i64 - i as i64).or_insert(0) += 1;
                    }
                }
                assert_eq!(content_counts(&partition_to_path(&p)).unwrap(), direct);
            }
        }
    }

    #[test]
    fn hook_count_equals_size() {
        assert_eq!(hook_count(&partition_to_path(&pt("4,2,1"))), 7);
        assert_eq!(hook_count(&PathSeq::vacuum()), 0);
        assert_eq!(hook_count(&partition_to_path(&pt("2,2"))), 4);
        for n in 0..=10u32 {
            for p in partitions_of(n) {
                assert_eq!(hook_count(&partition_to_path(&p)), n);
            }
        }
    }

    #[test]
    fn hooks_correspond_to_pairs() {
        // every cell's rim hook matches a (1,0) pair: size = b - a, leg = #0s
        // strictly between, and removal toggles the pair
        for n in 1..=8u32 {
            for p in partitions_of(n) {
                let path = partition_to_path(&p);
                let pairs = hook_pairs(&path);
                assert_eq!(pairs.len() as u32, n);
                let b = Bipartition::new(p.clone(), Partition::empty());
                for i in 1..=p.rows() {
                    for j in 1..=p.part(i) {
                        let (a, z) = hook_pair_of_cell(&p, i, j);
                        assert!(pairs.contains(&(a, z)));
                        let hook = rim_hook_at(&b, Node { comp: 1, row: i, col: j }).unwrap();
                        assert_eq!((z - a) as u32, hook.size);
                        let zeros_between =
                            (a + 1..z).filter(|&c| path.bit(c) == 0).count() as u32;
                        assert_eq!(zeros_between, hook.leg_length);
                        let toggled = toggle_pair(&path, a, z).unwrap();
                        let removed =
                            remove_rim_hook(&b, Node { comp: 1, row: i, col: j }).unwrap();
                        assert_eq!(toggled, partition_to_path(&removed.p1));
                    }
                }
            }
        }
    }

    #[test]
    fn path_display() {
        assert_eq!(partition_to_path(&pt("4,2,1")).to_string(), "\u{2026}00101|011011\u{2026}");
        assert_eq!(PathSeq::vacuum().to_string(), "\u{2026}000|111\u{2026}");
        assert_eq!(partition_to_path(&pt("1")).to_string(), "\u{2026}001|011\u{2026}");
    }

    // =======================================================================
    // bipartition paths
    // =======================================================================

    fn params(e: Order, f: u32) -> Params {
        Params::new(e, f).unwrap()
    }

    #[test]
    fn bipath_columns_and_display() {
        let s = bipartition_to_bipath(&bp("4,2,1|2,2,1"), &params(Order::Finite(7), 2));
        assert_eq!(s.bits(0), (1, 1));
        assert_eq!(s.bits(1), (0, 0));
        assert_eq!(s.bits(2), (1, 1));
        assert_eq!(s.bits(3), (1, 0));
        assert_eq!(
            s.to_string(),
            "\u{2026}00101|01|1011\u{2026}\n\u{2026}00001|01|0011\u{2026}"
        );
        assert_eq!(s.to_bipartition().unwrap(), bp("4,2,1|2,2,1"));
    }

    #[test]
    fn bipath_f0_merges_bars() {
        let s = bipartition_to_bipath(&bp("|2,2"), &params(Order::Finite(7), 0));
        assert_eq!(
            s.to_string(),
            "\u{2026}0000||1111\u{2026}\n\u{2026}0011||0011\u{2026}"
        );
    }

    #[test]
    fn bipath_round_trip() {
        for n in 0..=8u32 {
            for b in enumerate_bipartitions(n).unwrap() {
                for f in 0..=3u32 {
                    let s = bipartition_to_bipath(&b, &Params::raw(Order::Finite(7), f));
                    assert_eq!(s.to_bipartition().unwrap(), b);
                }
            }
        }
    }

    // =======================================================================
    // region counts
    // =======================================================================

    #[test]
    fn region_counts_of_a_shifted_pair() {
        let s = bipartition_to_bipath(&bp("4,2,1|2,2,1"), &params(Order::Finite(7), 2));
        let rc = region_counts(&s);
        assert_eq!(
            rc,
            RegionCounts {
                b_l: 1,
                b_r: 1,
                c_m: 1,
                c_r: 1,
                d_l: 1,
                d_m: 1,
                ..RegionCounts::default()
            }
        );
    }

    #[test]
    fn region_counts_of_empty_bipartition() {
        // both middle columns pair a top 1 with a shifted bottom 0, i.e. B
        let s = bipartition_to_bipath(&Bipartition::empty(), &params(Order::Finite(7), 2));
        let rc = region_counts(&s);
        assert_eq!(rc, RegionCounts { b_m: 2, ..RegionCounts::default() });
        let report = check_identities(&rc, &params(Order::Finite(7), 2), 0);
        assert!(report.all_hold());
    }

    #[test]
    fn single_a_in_left_region() {
        // ((0),(1)) at f = 0: the one at shifted position 0 sits under a top 0
        let s = bipartition_to_bipath(&bp("|1"), &params(Order::Finite(7), 0));
        let rc = region_counts(&s);
        assert_eq!(rc.a_l, 1);
        assert_eq!(rc.a_m + rc.a_r, 0);
    }

    #[test]
    fn identities_hold_exhaustively() {
        for n in 0..=7u32 {
            for f in 0..=3u32 {
                let p = Params::raw(Order::Finite(20), f);
                for b in enumerate_bipartitions(n).unwrap() {
                    let rc = region_counts(&bipartition_to_bipath(&b, &p));
                    let rep = check_identities(&rc, &p, n);
                    assert!(rep.i && rep.ii && rep.iii && rep.six2, "unconditional identity failed for {b} at f={f}");
                    if n <= 2 * f + 3 {
                        assert_eq!(rep.iv, Some(true), "(iv) failed for {b} at f={f}");
                        assert_eq!(rep.six3, Some(true), "(6.3) failed for {b} at f={f}");
                    }
                }
            }
        }
    }

    #[test]
    fn six3_is_sharp_at_2f_plus_4() {
        for f in 0..=2u32 {
            let n = 2 * f + 4;
            let p = Params::raw(Order::Finite(20), f);
            let violator = enumerate_bipartitions(n).unwrap().into_iter().find(|b| {
                region_counts(&bipartition_to_bipath(b, &p)).a_total() >= 2
            });
            assert!(violator.is_some(), "no (6.3) violator of size {n} at f={f}");
        }
        // a concrete one: ((0),(2,2)) at f = 0 has two left-region A columns
        let rc = region_counts(&bipartition_to_bipath(&bp("|2,2"), &params(Order::Finite(20), 0)));
        assert_eq!(rc.a_l, 2);
    }

    // =======================================================================
    // one-A families
    // =======================================================================

    #[test]
    fn family_of_one_one() {
        let p = params(Order::Finite(5), 1);
        let s = bipartition_to_bipath(&bp("1|1"), &p);
        let fam = one_a_family(&s).unwrap();
        let lits: Vec<String> = fam.iter().map(|b| b.to_string()).collect();
        assert_eq!(lits, vec!["|1,1", "1|1", "2|"]);
        // ascending dominance, f + 2 members
        assert_eq!(fam.len() as u32, p.f + 2);
        for w in fam.windows(2) {
            assert!(strictly_dominates(&w[1], &w[0]));
        }
    }

    #[test]
    fn family_members_share_residues_and_cd_columns() {
        let p = params(Order::Finite(11), 2);
        let s = bipartition_to_bipath(&bp("1|1,1"), &p);
        let fam = one_a_family(&s).unwrap();
        let lits: Vec<String> = fam.iter().map(|b| b.to_string()).collect();
        assert_eq!(lits, vec!["|1,1,1", "1|1,1", "2|1", "3|"]);
        assert_eq!(fam.len() as u32, p.f + 2);
        let multiset = |b: &Bipartition| {
            let mut v: Vec<i64> = b.cells().iter().map(|&x| p.residue(x)).collect();
            v.sort();
            v
        };
        let base = multiset(&bp("1|1,1"));
        let (lo, hi) = s.scan_range();
        for m in &fam {
            assert_eq!(m.size(), 3);
            assert_eq!(multiset(m), base);
            let sm = bipartition_to_bipath(m, &p);
            for i in lo..=hi {
                let orig = s.column(i);
                if matches!(orig, ColType::C | ColType::D) {
                    assert_eq!(sm.column(i), orig, "C/D column moved at {i} for {m}");
                }
            }
        }
    }

    #[test]
    fn family_requires_exactly_one_a() {
        let p = params(Order::Finite(7), 2);
        let empty = bipartition_to_bipath(&Bipartition::empty(), &p);
        assert_eq!(one_a_family(&empty), Err(Error::NotOneA(0)));
        let two_a = bipartition_to_bipath(&bp("|2,2"), &params(Order::Finite(7), 0));
        assert_eq!(one_a_family(&two_a), Err(Error::NotOneA(2)));
    }

    #[test]
    fn rendering_marks_the_bars() {
        let path = partition_to_path(&"4,2,1".parse::<Partition>().unwrap());
        assert_eq!(render_path(&path, -4, 6), "...00101|011011...");
        assert_eq!(render_path(&PathSeq::vacuum(), -2, 3), "...000|111...");

        let p2 = params(Order::Finite(11), 2);
        let s = bipartition_to_bipath(&bp("4,2,1|2,2,1"), &p2);
        let (top, bot) = render_bipath(&s, -5, 6);
        assert_eq!(top, "...000101|01|1011...");
        assert_eq!(bot, "...000001|01|0011...");

        // f = 0 merges the two bars.
        let p0 = params(Order::Finite(5), 0);
        let s = bipartition_to_bipath(&bp("|2,2"), &p0);
        let (top, bot) = render_bipath(&s, -2, 4);
        assert_eq!(top, "...000||1111...");
        assert_eq!(bot, "...011||0011...");
    }
}
