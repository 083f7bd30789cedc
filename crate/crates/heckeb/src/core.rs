//! Core combinatorics: partitions, bipartitions, nodes, residues, dominance,
//! enumeration, and rim hooks.  Everything downstream builds on this module.
//!
//! Conventions used throughout the crate:
//!   * rows and columns are 1-indexed, components are numbered 1 and 2;
//!   * the content of a node (i, j, k) is j - i + (k-1)*f;
//!   * residues live in Z/e for finite e and in Z for e = inf.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Residue of a node.  For finite e this is the canonical representative in
/// 0..e; for e = inf it is the raw content, which may be negative.
pub type Res = i64;

// ---------------------------------------------------------------------------
// quantum characteristic
// ---------------------------------------------------------------------------

/// Multiplicative order of q^2: a finite integer >= 3 or infinite (generic q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(e) => Some(e),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(e) => write!(fm, "{e}"),
            Order::Infinite => write!(fm, "inf"),
        }
    }
}

impl FromStr for Order {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Order::Infinite);
        }
        s.parse::<u32>()
            .map(Order::Finite)
            .map_err(|_| Error::ParseParam(format!("expected a positive integer or 'inf', got '{s}'")))
    }
}

// ---------------------------------------------------------------------------
// parameters
// ---------------------------------------------------------------------------

/// The pair (e, f) indexing an algebra: e the order of q^2 and f the
/// normalized charge, 0 <= 2f <= e.  Construct through [`Params::new`], which
/// replaces a raw charge f0 by min(f0, e - f0); the two describe isomorphic
/// algebras and every statement in this crate assumes the normalized frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    pub e: Order,
    pub f: u32,
}

impl Params {
    pub fn new(e: Order, f0: u32) -> Result<Self> {
        match e {
            Order::Finite(n) if n < 3 => Err(Error::UnsupportedOrder(n as u64)),
            Order::Finite(n) => {
                if f0 > n {
                    return Err(Error::ChargeOutOfRange { f0, e: n.to_string() });
                }
                Ok(Params { e, f: f0.min(n - f0) })
            }
            Order::Infinite => Ok(Params { e, f: f0 }),
        }
    }

    /// Unnormalized frame, used internally when a block has to be inspected
    /// with the components swapped (charge e - f, which violates 2f <= e).
    pub(crate) fn raw(e: Order, f: u32) -> Self {
        Params { e, f }
    }

    pub fn content(&self, x: Node) -> i64 {
        x.col as i64 - x.row as i64 + (x.comp as i64 - 1) * self.f as i64
    }

    pub fn residue_of_content(&self, c: i64) -> Res {
        match self.e {
            Order::Finite(e) => c.rem_euclid(e as i64),
            Order::Infinite => c,
        }
    }

    pub fn residue(&self, x: Node) -> Res {
        self.residue_of_content(self.content(x))
    }

    /// Reduce an arbitrary integer label to a residue (identity for e = inf).
    pub fn reduce(&self, i: i64) -> Res {
        self.residue_of_content(i)
    }
}

// ---------------------------------------------------------------------------
// partitions
// ---------------------------------------------------------------------------

/// A partition: weakly decreasing positive parts.  Trailing zeros are
/// stripped on construction, so two equal partitions are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ParseLiteral(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// 1-indexed part, 0 beyond the last row.
    pub fn part(&self, i: u32) -> u32 {
        if i == 0 || i as usize > self.parts.len() {
            0
        } else {
            self.parts[i as usize - 1]
        }
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn contains_cell(&self, row: u32, col: u32) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row)
    }

    /// Cumulative sums lambda_1 + ... + lambda_k for k = 1..=len, padded with
    /// the total beyond the last row.
    pub fn cumsums(&self, len: u32) -> Vec<u64> {
        let mut acc = 0u64;
        let mut out = Vec::with_capacity(len as usize);
        for k in 1..=len {
            acc += self.part(k) as u64;
            out.push(acc);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(fm, ",")?;
            }
            write!(fm, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::ParseLiteral(format!("bad part '{tok}' in '{s}'")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

// ---------------------------------------------------------------------------
// bipartitions
// ---------------------------------------------------------------------------

/// An ordered pair of partitions.  The textual form is `p1|p2` with each side
/// a comma-separated list, e.g. `4,2,1|2,2,1`; an empty side is written as
/// nothing, so the empty bipartition is just `|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bipartition {
    pub p1: Partition,
    pub p2: Partition,
}

impl Bipartition {
    pub fn new(p1: Partition, p2: Partition) -> Self {
        Bipartition { p1, p2 }
    }

    pub fn from_parts(v1: Vec<u32>, v2: Vec<u32>) -> Result<Self> {
        Ok(Bipartition::new(Partition::new(v1)?, Partition::new(v2)?))
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    pub fn comp(&self, k: u8) -> &Partition {
        match k {
            1 => &self.p1,
            2 => &self.p2,
            _ => panic!("component index must be 1 or 2, got {k}"),
        }
    }

    pub fn size(&self) -> u32 {
        self.p1.size() + self.p2.size()
    }

    /// The same pair with the components exchanged.
    pub fn swapped(&self) -> Bipartition {
        Bipartition::new(self.p2.clone(), self.p1.clone())
    }

    pub fn contains(&self, x: Node) -> bool {
        (x.comp == 1 || x.comp == 2) && self.comp(x.comp).contains_cell(x.row, x.col)
    }

    /// All cells in reading order: component 1 then component 2, rows top to
    /// bottom, columns left to right.
    pub fn cells(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for comp in 1..=2u8 {
            let p = self.comp(comp);
            for row in 1..=p.rows() {
                for col in 1..=p.part(row) {
                    out.push(Node { comp, row, col });
                }
            }
        }
        out
    }

    /// Cells whose addition leaves a bipartition, in reading order.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for comp in 1..=2u8 {
            let p = self.comp(comp);
            for row in 1..=p.rows() + 1 {
                if row == 1 || p.part(row - 1) > p.part(row) {
                    out.push(Node { comp, row, col: p.part(row) + 1 });
                }
            }
        }
        out
    }

    /// Cells whose removal leaves a bipartition, in reading order.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for comp in 1..=2u8 {
            let p = self.comp(comp);
            for row in 1..=p.rows() {
                if p.part(row) > p.part(row + 1) {
                    out.push(Node { comp, row, col: p.part(row) });
                }
            }
        }
        out
    }

    pub fn add_node(&self, x: Node) -> Result<Bipartition> {
        let p = self.comp(x.comp);
        if x.col != p.part(x.row) + 1 || (x.row > 1 && p.part(x.row - 1) <= p.part(x.row)) {
            return Err(Error::Internal(format!("node {x:?} is not addable to {self}")));
        }
        let mut parts: Vec<u32> = p.parts().to_vec();
        if x.row as usize > parts.len() {
            parts.push(1);
        } else {
            parts[x.row as usize - 1] += 1;
        }
        let q = Partition::new(parts).map_err(|e| Error::Internal(e.to_string()))?;
        Ok(self.with_comp(x.comp, q))
    }

    pub fn remove_node(&self, x: Node) -> Result<Bipartition> {
        let p = self.comp(x.comp);
        if x.col != p.part(x.row) || x.col == 0 || p.part(x.row) == p.part(x.row + 1) {
            return Err(Error::Internal(format!("node {x:?} is not removable from {self}")));
        }
        let mut parts: Vec<u32> = p.parts().to_vec();
        parts[x.row as usize - 1] -= 1;
        let q = Partition::new(parts).map_err(|e| Error::Internal(e.to_string()))?;
        Ok(self.with_comp(x.comp, q))
    }

    fn with_comp(&self, k: u8, q: Partition) -> Bipartition {
        match k {
            1 => Bipartition::new(q, self.p2.clone()),
            _ => Bipartition::new(self.p1.clone(), q),
        }
    }

    /// The padded cumulative-sum vector of length 2n (n = size).  It orders
    /// bipartitions compatibly with dominance: a strictly dominates b exactly
    /// when key(a) > key(b) componentwise-with-equality, and in particular
    /// key(a) > key(b) lexicographically.  Keys are injective for fixed n.
    pub fn dominance_key(&self) -> Vec<u64> {
        let n = self.size();
        let mut key = self.p1.cumsums(n);
        let s1 = self.p1.size() as u64;
        key.extend(self.p2.cumsums(n).into_iter().map(|c| c + s1));
        key
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{}|{}", self.p1, self.p2)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut halves = s.split('|');
        let (a, b) = match (halves.next(), halves.next(), halves.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::ParseLiteral(format!(
                    "expected exactly one '|' separator in '{s}'"
                )))
            }
        };
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

// ---------------------------------------------------------------------------
// nodes
// ---------------------------------------------------------------------------

/// A cell (row, col) in component comp (1 or 2).  The derived order is the
/// reading order used everywhere: component, then row, then column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub comp: u8,
    pub row: u32,
    pub col: u32,
}

/// y lies below x: strictly lower row of the same component, or any row of a
/// later component.  This is the order underlying normal and good nodes.
pub fn below(y: Node, x: Node) -> bool {
    y.comp > x.comp || (y.comp == x.comp && y.row > x.row)
}

/// y lies strictly between x and z, where z is below x.
pub fn strictly_between(y: Node, x: Node, z: Node) -> bool {
    below(y, x) && below(z, y)
}

// ---------------------------------------------------------------------------
// dominance
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomRel {
    Equal,
    Dominates,
    DominatedBy,
    Incomparable,
}

/// Non-strict dominance a >= b for bipartitions of the same size: every
/// cumulative sum of a's first component weakly exceeds b's, and likewise
/// after prepending the full first component to the second.
pub fn dominates(a: &Bipartition, b: &Bipartition) -> bool {
    debug_assert_eq!(a.size(), b.size(), "dominance compares equal sizes");
    let rows1 = a.p1.rows().max(b.p1.rows());
    let ca = a.p1.cumsums(rows1);
    let cb = b.p1.cumsums(rows1);
    if ca.iter().zip(&cb).any(|(x, y)| x < y) {
        return false;
    }
    let rows2 = a.p2.rows().max(b.p2.rows());
    let sa = a.p1.size() as u64;
    let sb = b.p1.size() as u64;
    let da = a.p2.cumsums(rows2);
    let db = b.p2.cumsums(rows2);
    da.iter().zip(&db).all(|(x, y)| sa + x >= sb + y)
}

pub fn strictly_dominates(a: &Bipartition, b: &Bipartition) -> bool {
    a != b && dominates(a, b)
}

pub fn dominance_compare(a: &Bipartition, b: &Bipartition) -> Result<DomRel> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.size(), b.size()));
    }
    if a == b {
        return Ok(DomRel::Equal);
    }
    match (dominates(a, b), dominates(b, a)) {
        (true, false) => Ok(DomRel::Dominates),
        (false, true) => Ok(DomRel::DominatedBy),
        (false, false) => Ok(DomRel::Incomparable),
        (true, true) => Err(Error::Internal(format!(
            "distinct bipartitions {a} and {b} dominate each other"
        ))),
    }
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

/// Hard ceiling on enumeration size; the count of bipartitions grows fast and
/// nothing in the crate needs more.
pub const ENUMERATION_BOUND: u32 = 30;

/// All partitions of m, in descending lexicographic order of the part lists.
pub fn partitions_of(m: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m.max(1), &mut Vec::new(), &mut out);
    out
}

/// All bipartitions of n, ordered by strictly descending dominance key.  The
/// order refines dominance: anything that dominates comes earlier.
pub fn enumerate_bipartitions(n: u32) -> Result<Vec<Bipartition>> {
    if n > ENUMERATION_BOUND {
        return Err(Error::EnumerationBound { n, bound: ENUMERATION_BOUND });
    }
    let mut all: Vec<(Vec<u64>, Bipartition)> = Vec::new();
    for m in (0..=n).rev() {
        for p1 in partitions_of(m) {
            for p2 in partitions_of(n - m) {
                let bp = Bipartition::new(p1.clone(), p2);
                all.push((bp.dominance_key(), bp));
            }
        }
    }
    all.sort_by(|x, y| y.0.cmp(&x.0));
    debug_assert!(all.windows(2).all(|w| w[0].0 > w[1].0), "dominance keys are injective");
    Ok(all.into_iter().map(|(_, bp)| bp).collect())
}

// ---------------------------------------------------------------------------
// rim hooks
// ---------------------------------------------------------------------------

/// The rim hook of a cell x = (i, j, k): the boundary strip running from the
/// tip of the arm of x down to the foot (conj(j), j) in the same component.
/// Removing it leaves a bipartition with size reduced by the hook length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimHook {
    pub corner: Node,
    pub cells: Vec<Node>,
    pub leg_length: u32,
    pub foot: Node,
    pub size: u32,
}

pub fn rim_hook_at(bip: &Bipartition, x: Node) -> Result<RimHook> {
    if !bip.contains(x) {
        return Err(Error::NotInDiagram(x.row, x.col, x.comp));
    }
    let p = bip.comp(x.comp);
    let foot_row = p.conjugate().part(x.col);
    let mut cells = Vec::new();
    for r in x.row..=foot_row {
        let lo = x.col.max(p.part(r + 1)).max(1);
        for c in lo..=p.part(r) {
            cells.push(Node { comp: x.comp, row: r, col: c });
        }
    }
    let leg_length = foot_row - x.row;
    let size = (p.part(x.row) - x.col) + leg_length + 1;
    debug_assert_eq!(cells.len() as u32, size);
    Ok(RimHook {
        corner: x,
        cells,
        leg_length,
        foot: Node { comp: x.comp, row: foot_row, col: x.col },
        size,
    })
}

/// The bipartition left after removing the rim hook of x.
pub fn remove_rim_hook(bip: &Bipartition, x: Node) -> Result<Bipartition> {
    if !bip.contains(x) {
        return Err(Error::NotInDiagram(x.row, x.col, x.comp));
    }
    let p = bip.comp(x.comp);
    let foot_row = p.conjugate().part(x.col);
    let mut parts: Vec<u32> = (1..=p.rows())
        .map(|r| {
            if r < x.row || r > foot_row {
                p.part(r)
            } else if r < foot_row {
                p.part(r + 1) - 1
            } else {
                x.col - 1
            }
        })
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    let q = Partition::new(parts).map_err(|e| Error::Internal(e.to_string()))?;
    Ok(match x.comp {
        1 => Bipartition::new(q, bip.p2.clone()),
        _ => Bipartition::new(bip.p1.clone(), q),
    })
}

// ===========================================================================
// tests
// ===========================================================================
