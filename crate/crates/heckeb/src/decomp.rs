//! Block classification and decomposition matrices in the regime
//! n < min{e, 2f + 4}.
//!
//! Every block there is either simple (a single Specht module which is
//! already irreducible and projective) or a "one-A" chain
//! lam_0 < lam_1 < ... < lam_top in the dominance order whose decomposition
//! matrix is lower bidiagonal: the columns are indexed by the chain minus its
//! dominance-maximal member, and d[i][j] = 1 iff i == j or i == j + 1.
//!
//! Which of the two shapes applies, and in which component frame the chain is
//! read off, is decided by `classify_block`:
//!
//! * pick the first shift k in 0..e such that -k-1 (mod e) is not a residue
//!   of the block (one exists because the block has fewer than e residues);
//! * if e - k <= f the block is analysed with the two components swapped and
//!   the charge replaced by e - f ("case 2"), otherwise in place ("case 1");
//! * in the chosen frame, count the free columns (the A's of `maya`): 0 free
//!   columns means simple, 1 means a one-A chain of size f + 2 (case 1) or
//!   e - f + 2 (case 2).  Two or more cannot happen when n <= 2f + 3.
//!
//! The case tag can depend on which missing residue is used when several are
//! available, but the resulting family and matrix do not; `classify_block`
//! asserts the family it builds is exactly the block membership, whichever
//! route produced it.

use serde_json::{json, Value};
use std::collections::BTreeSet;

use crate::core::{dominates, strictly_dominates, Bipartition, Order, Params, Res};
use crate::jantzen::Block;
use crate::maya;
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

/// Frame in which the one-A structure of a block was read off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// Components analysed in place, charge f.
    Case1,
    /// Components swapped, charge e - f; the reported family is translated
    /// back into the original labelling.
    Case2Swapped,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::Case1 => "case 1",
            CaseTag::Case2Swapped => "case 2 (component swap)",
        }
    }
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fm.write_str(self.as_str())
    }
}

/// Shape of a block, as far as its decomposition matrix is concerned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockClass {
    /// Singleton block; its Specht module is simple and projective.
    Simple { case: CaseTag },
    /// The whole block is a dominance chain, listed ascending (most
    /// dominated first).  Its size is f + 2 (case 1) or e - f + 2 (case 2).
    OneA { family: Vec<Bipartition>, case: CaseTag },
    /// n >= min{e, 2f + 4}: no structural claim is made.
    OutOfRegime,
}

impl BlockClass {
    pub fn case(&self) -> Option<CaseTag> {
        match self {
            BlockClass::Simple { case } | BlockClass::OneA { case, .. } => Some(*case),
            BlockClass::OutOfRegime => None,
        }
    }
}

/// True when the classification theory applies to blocks of this size.
pub fn in_regime(n: u32, p: &Params) -> bool {
    // 2f + 4 can exceed u32 for extreme charges; compare in u64.
    let bound = 2 * u64::from(p.f) + 4;
    match p.e {
        Order::Finite(e) => u64::from(n) < u64::from(e).min(bound),
        Order::Infinite => u64::from(n) < bound,
    }
}

/// All shifts k in 0..e with -k-1 (mod e) missing from the block's residues.
/// Empty only when every residue occurs, which cannot happen for n < e.
pub(crate) fn valid_shifts(block: &Block) -> Vec<u32> {
    let Order::Finite(e) = block.params.e else {
        return Vec::new();
    };
    let support: BTreeSet<Res> = block.residue.iter().map(|&(r, _)| r).collect();
    (0..e)
        .filter(|&k| !support.contains(&(-(k as i64) - 1).rem_euclid(e as i64)))
        .collect()
}

pub fn classify_block(block: &Block) -> Result<BlockClass> {
    if !in_regime(block.n, &block.params) {
        return Ok(BlockClass::OutOfRegime);
    }
    let shift = match block.params.e {
        Order::Infinite => None,
        Order::Finite(_) => match valid_shifts(block).first() {
            Some(&k) => Some(k),
            None => {
                return Err(Error::Internal(format!(
                    "block of size n = {} < e has no missing residue",
                    block.n
                )))
            }
        },
    };
    classify_with_shift(block, shift)
}

/// Classification relative to one chosen shift.  Exposed to the tests so the
/// answer can be checked for independence of the shift.
pub(crate) fn classify_with_shift(block: &Block, shift: Option<u32>) -> Result<BlockClass> {
    let p = block.params;
    let case2 = match (p.e, shift) {
        (Order::Finite(e), Some(k)) => e - k <= p.f,
        _ => false,
    };
    if case2 {
        let Order::Finite(e) = p.e else { unreachable!() };
        let frame = Params::raw(p.e, e - p.f);
        let probe = block.members[0].swapped();
        let path = maya::bipartition_to_bipath(&probe, &frame);
        match maya::region_counts(&path).a_total() {
            0 => {
                expect_singleton(block)?;
                Ok(BlockClass::Simple { case: CaseTag::Case2Swapped })
            }
            1 => {
                let swapped_family = maya::one_a_family(&path)?;
                let mut family: Vec<Bipartition> =
                    swapped_family.iter().map(Bipartition::swapped).collect();
                family.sort_by(|a, b| a.dominance_key().cmp(&b.dominance_key()));
                expect_family_matches(block, &family)?;
                expect_chain(&family)?;
                Ok(BlockClass::OneA { family, case: CaseTag::Case2Swapped })
            }
            a => Err(Error::Internal(format!(
                "block in regime has {a} free columns after the component swap"
            ))),
        }
    } else {
        let path = maya::bipartition_to_bipath(&block.members[0], &p);
        match maya::region_counts(&path).a_total() {
            0 => {
                expect_singleton(block)?;
                Ok(BlockClass::Simple { case: CaseTag::Case1 })
            }
            1 => {
                let family = maya::one_a_family(&path)?;
                expect_family_matches(block, &family)?;
                expect_chain(&family)?;
                Ok(BlockClass::OneA { family, case: CaseTag::Case1 })
            }
            a => Err(Error::Internal(format!(
                "block in regime has {a} free columns"
            ))),
        }
    }
}

fn expect_singleton(block: &Block) -> Result<()> {
    if block.size() == 1 {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "block with no free column has {} members instead of 1",
            block.size()
        )))
    }
}

fn expect_family_matches(block: &Block, family: &[Bipartition]) -> Result<()> {
    let got: BTreeSet<&Bipartition> = family.iter().collect();
    let want: BTreeSet<&Bipartition> = block.members.iter().collect();
    if got == want {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "one-A family of size {} does not coincide with the block of size {}",
            family.len(),
            block.size()
        )))
    }
}

/// The family must be a totally ordered dominance chain, listed ascending.
fn expect_chain(family: &[Bipartition]) -> Result<()> {
    for w in family.windows(2) {
        if !strictly_dominates(&w[1], &w[0]) {
            return Err(Error::Internal(format!(
                "family members {} and {} are not a dominance step",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// decomposition matrices
// ---------------------------------------------------------------------------

/// Rectangular array d[row][col] with rows indexed by Specht labels
/// (ascending dominance) and columns by the simple labels of the block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompMatrix {
    pub rows: Vec<Bipartition>,
    pub cols: Vec<Bipartition>,
    pub entries: Vec<Vec<i64>>,
}

impl DecompMatrix {
    /// Shape and triangularity checks: entry rows match the label counts,
    /// d[mu][mu] = 1 whenever the column label mu also appears as a row, and
    /// a nonzero d[lam][mu] forces lam to dominate mu.
    pub fn validate(&self) -> Result<()> {
        if self.entries.len() != self.rows.len() {
            return Err(Error::Internal(format!(
                "matrix has {} entry rows for {} row labels",
                self.entries.len(),
                self.rows.len()
            )));
        }
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols.len() {
                return Err(Error::Internal(format!(
                    "row {} has {} entries for {} column labels",
                    self.rows[i],
                    row.len(),
                    self.cols.len()
                )));
            }
        }
        for (j, c) in self.cols.iter().enumerate() {
            if let Some(i) = self.rows.iter().position(|r| r == c) {
                if self.entries[i][j] != 1 {
                    return Err(Error::Internal(format!(
                        "diagonal entry at {c} is {} instead of 1",
                        self.entries[i][j]
                    )));
                }
            }
            for (i, r) in self.rows.iter().enumerate() {
                if self.entries[i][j] != 0 && !dominates(r, c) {
                    return Err(Error::Internal(format!(
                        "nonzero entry at row {r}, column {c} violates dominance"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "cols": self.cols.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "entries": self.entries,
        })
    }
}

impl std::fmt::Display for DecompMatrix {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let labels: Vec<String> = self.rows.iter().map(|b| b.to_string()).collect();
        let heads: Vec<String> = self.cols.iter().map(|b| b.to_string()).collect();
        let label_w = labels.iter().map(String::len).max().unwrap_or(0);
        let mut lines = Vec::with_capacity(self.rows.len() + 1);
        let mut head = " ".repeat(label_w);
        for h in &heads {
            head.push_str("  ");
            head.push_str(h);
        }
        lines.push(head.trim_end().to_string());
        for (i, lab) in labels.iter().enumerate() {
            let mut line = format!("{lab:<label_w$}");
            for (j, h) in heads.iter().enumerate() {
                line.push_str("  ");
                line.push_str(&format!("{:<w$}", self.entries[i][j], w = h.len()));
            }
            lines.push(line.trim_end().to_string());
        }
        fm.write_str(&lines.join("\n"))
    }
}

/// The decomposition matrix of a block in the regime n < min{e, 2f + 4}:
/// `[[1]]` for a singleton, otherwise the lower bidiagonal array over the
/// ascending one-A chain with the dominance-maximal member contributing a row
/// but no column.
pub fn decomposition_matrix(block: &Block) -> Result<DecompMatrix> {
    let m = match classify_block(block)? {
        BlockClass::OutOfRegime => return Err(Error::OutOfRegime),
        BlockClass::Simple { .. } => DecompMatrix {
            rows: block.members.clone(),
            cols: block.members.clone(),
            entries: vec![vec![1]],
        },
        BlockClass::OneA { family, .. } => {
            let rows = family.clone();
            let cols = family[..family.len() - 1].to_vec();
            let entries = (0..rows.len())
                .map(|i| {
                    (0..cols.len())
                        .map(|j| i64::from(i == j || i == j + 1))
                        .collect()
                })
                .collect();
            DecompMatrix { rows, cols, entries }
        }
    };
    m.validate()?;
    Ok(m)
}

// ===========================================================================
// tests
// ===========================================================================
