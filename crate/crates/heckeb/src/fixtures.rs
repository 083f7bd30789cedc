//! Hard-coded decomposition tables, the bipartition families they are
//! indexed by, the F-product words that regenerate their columns, and the
//! fixture-verification ledger behind `verify-fixtures`.
//!
//! The tables are stored exactly as fixed data; `fixture_matrix` recomputes
//! every column through the Fock-space machinery and errors on any cell
//! disagreement, so generation can only confirm the stored values, never
//! replace them.
//!
//! Family conventions at n = e (charge f, finite e):
//!   lambda_k     = ((0), (k, 1^{e-k}))            for 1 <= k <= e,
//!   mu_k         = ((k, 1^{e-k}), (0))            for 1 <= k <= e,
//!   lambda_{k,l} = ((f-l, 1^{e-f-k}), (k, 1^l))   for 1 <= k <= e-f, 0 <= l < f,
//! and at n = 2f + 4 (the case-two window, e > n):
//!   lambda_1 = ((0), (2^{f+2}))        lambda_2 = ((1), (2^{f+1}, 1))
//!   lambda_3 = ((1,1), (2^{f+1}))      lambda_4 = ((2), (2^f, 1, 1))
//!   lambda_5 = ((2,1), (2^f, 1)).

use std::collections::BTreeMap;

use crate::core::{Bipartition, Node, Order, Params, Partition, Res};
use crate::decomp::{self, BlockClass, DecompMatrix};
use crate::fock::{self, FockVector, LaurentPoly};
use crate::jantzen;
use crate::kleshchev;
use crate::maya;
use crate::reptype::{self, ChargeSpec, RepType};
use crate::{Error, Result};

/// A word in the operators F_i with divided powers, written left to right in
/// display order; products apply the rightmost letter first.
pub type Word = Vec<(Res, u32)>;

// ---------------------------------------------------------------------------
// families
// ---------------------------------------------------------------------------

fn hook_partition(arm: u32, ones: u32) -> Partition {
    let mut parts = vec![arm];
    parts.extend(std::iter::repeat(1).take(ones as usize));
    Partition::new(parts).expect("hook shapes are sorted")
}

fn rect_partition(width: u32, height: u32, tail_ones: u32) -> Partition {
    let mut parts = vec![width; height as usize];
    parts.extend(std::iter::repeat(1).take(tail_ones as usize));
    Partition::new(parts).expect("rectangle shapes are sorted")
}

/// lambda_k = ((0), (k, 1^{e-k})), the hook family of the n = e block.
pub fn s4_lambda(e: u32, k: u32) -> Bipartition {
    assert!(1 <= k && k <= e);
    Bipartition::new(Partition::empty(), hook_partition(k, e - k))
}

/// mu_k = ((k, 1^{e-k}), (0)).
pub fn s4_mu(e: u32, k: u32) -> Bipartition {
    assert!(1 <= k && k <= e);
    Bipartition::new(hook_partition(k, e - k), Partition::empty())
}

/// lambda_{k,l} = ((f-l, 1^{e-f-k}), (k, 1^l)) for 1 <= k <= e-f, 0 <= l < f.
pub fn s4_lambda_kl(e: u32, f: u32, k: u32, l: u32) -> Bipartition {
    assert!(f >= 1 && l < f && (1..=e - f).contains(&k));
    Bipartition::new(hook_partition(f - l, e - f - k), hook_partition(k, l))
}

/// Every bipartition of the residue-{0, ..., e-1} block at n = e.
pub fn s4_block_members(e: u32, f: u32) -> Vec<Bipartition> {
    let mut out: Vec<Bipartition> = (1..=e).map(|k| s4_lambda(e, k)).collect();
    out.extend((1..=e).map(|k| s4_mu(e, k)));
    if f > 0 {
        for k in 1..=e - f {
            for l in 0..f {
                out.push(s4_lambda_kl(e, f, k, l));
            }
        }
    }
    out
}

/// The Kleshchev members of the same block: lambda_k for k < e together
/// with, for f > 0, every lambda_{k,l}.
pub fn s4_kleshchev_census(e: u32, f: u32) -> Vec<Bipartition> {
    let mut out: Vec<Bipartition> = (1..e).map(|k| s4_lambda(e, k)).collect();
    if f > 0 {
        for k in 1..=e - f {
            for l in 0..f {
                out.push(s4_lambda_kl(e, f, k, l));
            }
        }
    }
    out
}

/// The six members lambda_1, ..., lambda_6 of the f = 0 block of n = 4 with
/// residues {-1, 0, 0, 1}.
pub fn s5c1_lambda(i: u32) -> Bipartition {
    let lit = match i {
        1 => "|2,2",
        2 => "1|2,1",
        3 => "1,1|2",
        4 => "2|1,1",
        5 => "2,1|1",
        6 => "2,2|",
        _ => panic!("index out of range"),
    };
    lit.parse().unwrap()
}

/// The five members lambda_1, ..., lambda_5 pinned by the case-two window
/// block at n = 2f + 4.
pub fn s5c2_lambda(f: u32, i: u32) -> Bipartition {
    match i {
        1 => Bipartition::new(Partition::empty(), rect_partition(2, f + 2, 0)),
        2 => Bipartition::new(hook_partition(1, 0), rect_partition(2, f + 1, 1)),
        3 => Bipartition::new(hook_partition(1, 1), rect_partition(2, f + 1, 0)),
        4 => Bipartition::new(hook_partition(2, 0), rect_partition(2, f, 2)),
        5 => Bipartition::new(hook_partition(2, 1), rect_partition(2, f, 1)),
        _ => panic!("index out of range"),
    }
}

// ---------------------------------------------------------------------------
// words
// ---------------------------------------------------------------------------

fn seg_asc(a: i64, b: i64) -> Word {
    (a..=b).map(|i| (i, 1)).collect()
}

fn seg_desc(a: i64, b: i64) -> Word {
    (b..=a).rev().map(|i| (i, 1)).collect()
}

fn top_residue(e: Order) -> Res {
    match e {
        Order::Finite(m) => m as i64 - 1,
        Order::Infinite => -1,
    }
}

/// Column word for lambda_k, 1 <= k <= e-f, f >= 1:
/// F_{f+k} ... F_{e-1} F_0 F_{f+k-1} ... F_{f+1} F_1 ... F_f.
pub fn s4_word_low(e: u32, f: u32, k: u32) -> Word {
    let (e, f, k) = (e as i64, f as i64, k as i64);
    let mut w = seg_asc(f + k, e - 1);
    w.push((0, 1));
    w.extend(seg_desc(f + k - 1, f + 1));
    w.extend(seg_asc(1, f));
    w
}

/// Column word for lambda_k, e-f < k < e, f >= 2:
/// F_{k-e+f} ... F_{f-1} F_{k-e+f-1} ... F_1 F_0 F_{e-1} ... F_{f+1} F_f.
pub fn s4_word_high(e: u32, f: u32, k: u32) -> Word {
    let (e, f, k) = (e as i64, f as i64, k as i64);
    let mut w = seg_asc(k - e + f, f - 1);
    w.extend(seg_desc(k - e + f - 1, 1));
    w.push((0, 1));
    w.extend(seg_desc(e - 1, f + 1));
    w.push((f, 1));
    w
}

/// Column word for lambda_{k,l}, 1 <= k <= e-f, 0 <= l < f:
/// F_{f-l} ... F_{f-1} F_{f+k-1} ... F_f F_{f+k} ... F_{e-1} F_{f-l-1} ... F_0.
/// At k = 1 the two middle segments merge into F_f F_{f+1} ... F_{e-1}.
pub fn s4_word_kl(e: u32, f: u32, k: u32, l: u32) -> Word {
    let (e, f, k, l) = (e as i64, f as i64, k as i64, l as i64);
    let mut w = seg_asc(f - l, f - 1);
    w.extend(seg_desc(f + k - 1, f));
    w.extend(seg_asc(f + k, e - 1));
    w.extend(seg_desc(f - l - 1, 0));
    w
}

/// Column word for lambda_k at f = 0: F_k ... F_{e-1} F_{k-1} ... F_1 F_0.
pub fn s4_word_f0(e: u32, k: u32) -> Word {
    let (e, k) = (e as i64, k as i64);
    let mut w = seg_asc(k, e - 1);
    w.extend(seg_desc(k - 1, 1));
    w.push((0, 1));
    w
}

/// F_0 F_1 F_{e-1} F_0: the lambda_1 column of the f = 0, n = 4 block.
pub fn s5c1_word_1(e: Order) -> Word {
    vec![(0, 1), (1, 1), (top_residue(e), 1), (0, 1)]
}

/// F_1 F_{e-1} F_0^(2): the lambda_2 column of the same block.
pub fn s5c1_word_2(e: Order) -> Word {
    vec![(1, 1), (top_residue(e), 1), (0, 2)]
}

/// F_1 ... F_{f+1} F_{e-1} F_0^(2) F_1 ... F_f: the lambda_2 column of the
/// case-two window block at n = 2f + 4.
pub fn s5c2_word_main(e: Order, f: u32) -> Word {
    let f = f as i64;
    let mut w = seg_asc(1, f + 1);
    w.push((top_residue(e), 1));
    w.push((0, 2));
    w.extend(seg_asc(1, f));
    w
}

/// F_0 ... F_{f+1} F_{e-1} F_0 ... F_f: lambda_1 plus more dominant terms.
pub fn s5c2_word_l1(e: Order, f: u32) -> Word {
    let f = f as i64;
    let mut w = seg_asc(0, f + 1);
    w.push((top_residue(e), 1));
    w.extend(seg_asc(0, f));
    w
}

/// F_1 ... F_{f+1} F_0 ... F_f F_{e-1} F_0: lambda_3 plus more dominant terms.
pub fn s5c2_word_l3(e: Order, f: u32) -> Word {
    let f = f as i64;
    let mut w = seg_asc(1, f + 1);
    w.extend(seg_asc(0, f));
    w.push((top_residue(e), 1));
    w.push((0, 1));
    w
}

/// F_{e-1} F_2 ... F_{f+1} F_0 F_1^(2) F_2 ... F_f F_0: lambda_4 plus more
/// dominant terms.
pub fn s5c2_word_l4(e: Order, f: u32) -> Word {
    let f = f as i64;
    let mut w = vec![(top_residue(e), 1)];
    w.extend(seg_asc(2, f + 1));
    w.push((0, 1));
    w.push((1, 2));
    w.extend(seg_asc(2, f));
    w.push((0, 1));
    w
}

// ---------------------------------------------------------------------------
// expected expansions
// ---------------------------------------------------------------------------

fn combination(terms: Vec<(Bipartition, i64)>) -> FockVector {
    FockVector::from_terms(
        terms
            .into_iter()
            .map(|(b, exp)| (b, LaurentPoly::monomial(exp, 1)))
            .collect(),
    )
}

/// Displayed final expansion of `s4_word_low(e, f, k)`.
pub fn s4_expected_low(e: u32, f: u32, k: u32) -> FockVector {
    if k < e - f {
        combination(vec![
            (s4_lambda(e, k), 0),
            (s4_lambda(e, k + 1), 1),
            (s4_lambda_kl(e, f, k + 1, f - 1), 1),
            (s4_lambda_kl(e, f, k, f - 1), 2),
        ])
    } else {
        combination(vec![
            (s4_lambda(e, e - f), 0),
            (s4_lambda(e, e - f + 1), 1),
            (s4_lambda_kl(e, f, e - f, f - 1), 2),
        ])
    }
}

/// Displayed final expansion of `s4_word_high(e, f, k)`.
pub fn s4_expected_high(e: u32, f: u32, k: u32) -> FockVector {
    combination(vec![
        (s4_lambda(e, k), 0),
        (s4_lambda(e, k + 1), 1),
        (s4_lambda_kl(e, f, e - f, e - k), 1),
        (s4_lambda_kl(e, f, e - f, e - k - 1), 2),
    ])
}

/// Displayed final expansion of `s4_word_kl(e, f, k, 0)`.
pub fn s4_expected_l0(e: u32, f: u32, k: u32) -> FockVector {
    if k == 1 {
        combination(vec![
            (s4_lambda_kl(e, f, 1, 0), 0),
            (s4_mu(e, f), 1),
            (s4_mu(e, f + 1), 2),
        ])
    } else {
        combination(vec![
            (s4_lambda_kl(e, f, k, 0), 0),
            (s4_lambda_kl(e, f, k - 1, 0), 1),
            (s4_mu(e, f + k - 1), 1),
            (s4_mu(e, f + k), 2),
        ])
    }
}

/// Displayed penultimate line of `s4_word_kl(e, f, k, l)` with l > 0: the
/// product of everything except the leftmost letter.
pub fn s4_expected_kl_step(e: u32, f: u32, k: u32, l: u32) -> FockVector {
    assert!(l > 0);
    if k == 1 {
        combination(vec![
            (
                Bipartition::new(hook_partition(f - l, e - f - 1), hook_partition(1, l - 1)),
                0,
            ),
            (
                Bipartition::new(hook_partition(f - l, e - f + l - 1), Partition::empty()),
                1,
            ),
        ])
    } else {
        combination(vec![
            (
                Bipartition::new(hook_partition(f - l, e - f - k), hook_partition(k, l - 1)),
                0,
            ),
            (
                Bipartition::new(
                    hook_partition(f - l, e - f - k + 1),
                    hook_partition(k - 1, l - 1),
                ),
                1,
            ),
        ])
    }
}

/// Displayed final expansion of `s4_word_f0(e, k)`.
pub fn s4_expected_f0(e: u32, k: u32) -> FockVector {
    combination(vec![
        (s4_lambda(e, k), 0),
        (s4_lambda(e, k + 1), 1),
        (s4_mu(e, k), 1),
        (s4_mu(e, k + 1), 2),
    ])
}

/// lambda_1 + v lambda_2 + v lambda_5 + v^2 lambda_6 at f = 0, n = 4.
pub fn s5c1_expected_1() -> FockVector {
    combination(vec![
        (s5c1_lambda(1), 0),
        (s5c1_lambda(2), 1),
        (s5c1_lambda(5), 1),
        (s5c1_lambda(6), 2),
    ])
}

/// lambda_2 + v lambda_4 + v lambda_3 + v^2 lambda_5 at f = 0, n = 4.
pub fn s5c1_expected_2() -> FockVector {
    combination(vec![
        (s5c1_lambda(2), 0),
        (s5c1_lambda(4), 1),
        (s5c1_lambda(3), 1),
        (s5c1_lambda(5), 2),
    ])
}

/// The four-term expansion of `s5c2_word_main`.
pub fn s5c2_expected_main(f: u32) -> FockVector {
    combination(vec![
        (s5c2_lambda(f, 2), 0),
        (s5c2_lambda(f, 4), 1),
        (s5c2_lambda(f, 3), 1),
        (s5c2_lambda(f, 5), 2),
    ])
}

// ---------------------------------------------------------------------------
// stored tables
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixtureTag {
    S4Case1,
    S4F0,
    S5Case1,
    S5Case2,
}

impl FixtureTag {
    pub const ALL: [FixtureTag; 4] = [
        FixtureTag::S4Case1,
        FixtureTag::S4F0,
        FixtureTag::S5Case1,
        FixtureTag::S5Case2,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FixtureTag::S4Case1 => "S4_CASE1",
            FixtureTag::S4F0 => "S4_F0",
            FixtureTag::S5Case1 => "S5_CASE1",
            FixtureTag::S5Case2 => "S5_CASE2",
        }
    }
}

impl std::fmt::Display for FixtureTag {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fm.write_str(self.as_str())
    }
}

impl std::str::FromStr for FixtureTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().replace('-', "_").as_str() {
            "S4_CASE1" => Ok(FixtureTag::S4Case1),
            "S4_F0" => Ok(FixtureTag::S4F0),
            "S5_CASE1" => Ok(FixtureTag::S5Case1),
            "S5_CASE2" => Ok(FixtureTag::S5Case2),
            other => Err(Error::ParseParam(format!("unknown fixture tag: {other}"))),
        }
    }
}

const S4_CASE1_TABLE: [[i64; 5]; 4] = [
    [1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [1, 1, 1, 1, 0],
    [1, 0, 0, 1, 1],
];

const S5_CASE1_TABLE: [[i64; 2]; 6] = [
    [1, 0],
    [1, 1],
    [0, 1],
    [0, 1],
    [1, 1],
    [1, 0],
];

const S5_CASE2_TABLE: [[i64; 5]; 5] = [
    [1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [0, 1, 1, 0, 0],
    [0, 1, 0, 1, 0],
    [1, 1, 1, 1, 1],
];

fn bad_params(tag: FixtureTag, reason: &str) -> Error {
    Error::FixtureParams {
        tag: tag.to_string(),
        reason: reason.to_string(),
    }
}

/// Regenerate every column of `expected` through the Fock machinery.  A
/// `None` word marks a column with no printed product: its value is forced
/// by unitriangularity to the unit column at its own label.
fn build_from_words(
    tag: FixtureTag,
    p: &Params,
    rows: Vec<Bipartition>,
    cols: Vec<Bipartition>,
    words: Vec<Option<Word>>,
    expected: Vec<Vec<i64>>,
) -> Result<DecompMatrix> {
    let mut entries = vec![vec![0i64; cols.len()]; rows.len()];
    for (j, w) in words.iter().enumerate() {
        match w {
            Some(word) => {
                let product = fock::f_product(word, p)?;
                let cand = fock::as_canonical_candidate(&product).ok_or_else(|| {
                    Error::Internal(format!(
                        "fixture {tag}: the product for column {} is not canonical",
                        cols[j]
                    ))
                })?;
                if cand.leader != cols[j] {
                    return Err(Error::Internal(format!(
                        "fixture {tag}: column {} produced leader {}",
                        cols[j], cand.leader
                    )));
                }
                let col = fock::decomp_column(&cand);
                for (i, r) in rows.iter().enumerate() {
                    entries[i][j] = col.get(r).copied().unwrap_or(0);
                }
            }
            None => {
                let i = rows
                    .iter()
                    .position(|r| r == &cols[j])
                    .ok_or_else(|| Error::Internal(format!("forced column {} has no row", cols[j])))?;
                entries[i][j] = 1;
            }
        }
    }
    for (i, row) in expected.iter().enumerate() {
        for (j, &cell) in row.iter().enumerate() {
            if entries[i][j] != cell {
                return Err(Error::Internal(format!(
                    "fixture {tag}: generated {} at row {}, column {} where the stored table has {}",
                    entries[i][j], rows[i], cols[j], cell
                )));
            }
        }
    }
    let m = DecompMatrix { rows, cols, entries };
    m.validate()?;
    Ok(m)
}

/// The stored tables, regenerated and cross-checked at the given parameters.
///
/// * `S4_CASE1` (finite e >= 5, f >= 2, n = e): the 4x5 submatrix over rows
///   lambda_1, lambda_2, lambda_{2,f-1}, lambda_{1,f-1} and columns
///   lambda_1, lambda_2, lambda_{3,f-1}, lambda_{2,f-1}, lambda_{1,f-1}.
/// * `S4_F0` (finite e >= 3, f = 0, n = e): the 2e x (e-1) matrix over
///   lambda_1..lambda_e, mu_1..mu_e.
/// * `S5_CASE1` (f = 0, e > 4 or infinite, n = 4): the 6x2 matrix with
///   columns lambda_1, lambda_2.
/// * `S5_CASE2` (f >= 1, n = 2f+4 < e or e infinite): the 5x5
///   lower-unitriangular matrix over lambda_1..lambda_5.
pub fn fixture_matrix(tag: FixtureTag, p: &Params) -> Result<DecompMatrix> {
    match tag {
        FixtureTag::S4Case1 => {
            let Order::Finite(e) = p.e else {
                return Err(bad_params(tag, "needs a finite order"));
            };
            if e < 5 || p.f < 2 {
                return Err(bad_params(tag, "needs e >= 5 and f >= 2"));
            }
            let f = p.f;
            let rows = vec![
                s4_lambda(e, 1),
                s4_lambda(e, 2),
                s4_lambda_kl(e, f, 2, f - 1),
                s4_lambda_kl(e, f, 1, f - 1),
            ];
            let cols = vec![
                s4_lambda(e, 1),
                s4_lambda(e, 2),
                s4_lambda_kl(e, f, 3, f - 1),
                s4_lambda_kl(e, f, 2, f - 1),
                s4_lambda_kl(e, f, 1, f - 1),
            ];
            let words = vec![
                Some(s4_word_low(e, f, 1)),
                Some(s4_word_low(e, f, 2)),
                Some(s4_word_kl(e, f, 3, f - 1)),
                Some(s4_word_kl(e, f, 2, f - 1)),
                Some(s4_word_kl(e, f, 1, f - 1)),
            ];
            let expected = S4_CASE1_TABLE.iter().map(|r| r.to_vec()).collect();
            build_from_words(tag, p, rows, cols, words, expected)
        }
        FixtureTag::S4F0 => {
            let Order::Finite(e) = p.e else {
                return Err(bad_params(tag, "needs a finite order"));
            };
            if p.f != 0 {
                return Err(bad_params(tag, "needs f = 0"));
            }
            let rows: Vec<Bipartition> = (1..=e)
                .map(|k| s4_lambda(e, k))
                .chain((1..=e).map(|k| s4_mu(e, k)))
                .collect();
            let cols: Vec<Bipartition> = (1..e).map(|k| s4_lambda(e, k)).collect();
            let words: Vec<Option<Word>> = (1..e).map(|k| Some(s4_word_f0(e, k))).collect();
            let mut expected = vec![vec![0i64; (e - 1) as usize]; 2 * e as usize];
            for j in 0..(e - 1) as usize {
                expected[j][j] = 1;
                expected[j + 1][j] = 1;
                expected[e as usize + j][j] = 1;
                expected[e as usize + j + 1][j] = 1;
            }
            build_from_words(tag, p, rows, cols, words, expected)
        }
        FixtureTag::S5Case1 => {
            if p.f != 0 {
                return Err(bad_params(tag, "needs f = 0"));
            }
            if let Order::Finite(e) = p.e {
                if e <= 4 {
                    return Err(bad_params(tag, "needs e > 4"));
                }
            }
            let rows: Vec<Bipartition> = (1..=6).map(s5c1_lambda).collect();
            let cols = vec![s5c1_lambda(1), s5c1_lambda(2)];
            let words = vec![Some(s5c1_word_1(p.e)), Some(s5c1_word_2(p.e))];
            let expected = S5_CASE1_TABLE.iter().map(|r| r.to_vec()).collect();
            build_from_words(tag, p, rows, cols, words, expected)
        }
        FixtureTag::S5Case2 => {
            if p.f < 1 {
                return Err(bad_params(tag, "needs f >= 1"));
            }
            if let Order::Finite(e) = p.e {
                if u64::from(e) <= 2 * u64::from(p.f) + 4 {
                    return Err(bad_params(tag, "needs e > 2f + 4"));
                }
            }
            let f = p.f;
            let rows: Vec<Bipartition> = (1..=5).map(|i| s5c2_lambda(f, i)).collect();
            let cols = rows.clone();
            let words = vec![
                Some(s5c2_word_l1(p.e, f)),
                Some(s5c2_word_main(p.e, f)),
                Some(s5c2_word_l3(p.e, f)),
                Some(s5c2_word_l4(p.e, f)),
                None,
            ];
            let expected = S5_CASE2_TABLE.iter().map(|r| r.to_vec()).collect();
            build_from_words(tag, p, rows, cols, words, expected)
        }
    }
}

// ---------------------------------------------------------------------------
// verification ledger
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn ensure(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal(msg.to_string()))
    }
}

fn pf(e: u32, f: u32) -> Params {
    Params::new(Order::Finite(e), f).unwrap()
}

fn bp(s: &str) -> Bipartition {
    s.parse().unwrap()
}

type Check = (&'static str, fn() -> Result<()>);

fn check_core_charge() -> Result<()> {
    ensure(pf(10, 4).f == 4, "f0 = 4 should stay 4 at e = 10")?;
    ensure(pf(10, 7).f == 3, "f0 = 7 should fold to 3 at e = 10")?;
    ensure(pf(10, 0).f == 0, "f0 = 0 should stay 0")
}

fn check_core_contents() -> Result<()> {
    let p = pf(10, 2);
    let second = Node { comp: 2, row: 1, col: 1 };
    let first = Node { comp: 1, row: 3, col: 1 };
    ensure(p.content(second) == 2, "corner of the second component at f = 2")?;
    ensure(p.content(first) == -2, "third row of the first component")
}

fn check_core_residues() -> Result<()> {
    let got = jantzen::residue_multiset(&bp("|2,2"), &pf(5, 0));
    ensure(got == vec![(0, 2), (1, 1), (4, 1)], "residues of ((0),(2,2)) at e=5, f=0")
}

fn check_maya_path_display() -> Result<()> {
    let path = maya::partition_to_path(&"4,2,1".parse::<Partition>().unwrap());
    ensure(
        maya::render_path(&path, -4, 6) == "...00101|011011...",
        "path of (4,2,1)",
    )?;
    let vac = maya::partition_to_path(&Partition::empty());
    ensure(maya::render_path(&vac, -2, 3) == "...000|111...", "path of the empty partition")
}

fn check_maya_round_trip() -> Result<()> {
    for lit in ["4,2,1", "1", ""] {
        let part: Partition = lit.parse().unwrap();
        let back = maya::path_to_partition(&maya::partition_to_path(&part))?;
        ensure(back == part, "path round-trip")?;
    }
    Ok(())
}

fn check_maya_hook_count() -> Result<()> {
    let path = maya::partition_to_path(&"4,2,1".parse::<Partition>().unwrap());
    ensure(maya::hook_count(&path) == 7, "hook count of (4,2,1)")
}

fn check_maya_bipath_shift() -> Result<()> {
    let s = maya::bipartition_to_bipath(&bp("4,2,1|2,2,1"), &pf(11, 2));
    let (top, bot) = maya::render_bipath(&s, -5, 6);
    ensure(top == "...000101|01|1011...", "top row of the shifted pair")?;
    ensure(bot == "...000001|01|0011...", "bottom row of the shifted pair")
}

fn check_maya_identities() -> Result<()> {
    for f in 0..=3u32 {
        let p = Params::new(Order::Infinite, f).unwrap();
        for n in 0..=2 * f + 3 {
            for b in crate::core::enumerate_bipartitions(n)? {
                let rc = maya::region_counts(&maya::bipartition_to_bipath(&b, &p));
                let rep = maya::check_identities(&rc, &p, n);
                ensure(rep.all_hold(), &format!("identities fail for {b} at f = {f}"))?;
            }
        }
    }
    for f in 0..=2u32 {
        let p = Params::new(Order::Infinite, f).unwrap();
        let n = 2 * f + 4;
        let mut found = false;
        for b in crate::core::enumerate_bipartitions(n)? {
            let rc = maya::region_counts(&maya::bipartition_to_bipath(&b, &p));
            if rc.a_total() > 1 {
                found = true;
                break;
            }
        }
        ensure(found, &format!("no single-A violator of size 2f + 4 at f = {f}"))?;
    }
    Ok(())
}

fn check_maya_one_a_family() -> Result<()> {
    let p = pf(5, 1);
    let s = maya::bipartition_to_bipath(&bp("1|1"), &p);
    let family = maya::one_a_family(&s)?;
    let lits: Vec<String> = family.iter().map(|b| b.to_string()).collect();
    ensure(lits == ["|1,1", "1|1", "2|"], "ascending family of the n = 2 block")?;
    ensure(family.len() == p.f as usize + 2, "family size f + 2")
}

fn check_fock_case_one_word() -> Result<()> {
    let p = pf(5, 0);
    let got = fock::f_product(&s5c1_word_1(p.e), &p)?;
    ensure(got == s5c1_expected_1(), "first column word of the n = 4, f = 0 block")?;
    let got = fock::f_product(&s5c1_word_2(p.e), &p)?;
    ensure(got == s5c1_expected_2(), "second column word of the n = 4, f = 0 block")
}

fn check_fock_divided_power() -> Result<()> {
    let p = pf(5, 0);
    let got = fock::f_product(&[(0, 2)], &p)?;
    ensure(
        got == combination(vec![(bp("1|1"), 0)]),
        "F_0^(2) on the vacuum",
    )
}

fn check_fock_s4_low_word() -> Result<()> {
    let p = pf(5, 2);
    for k in 1..=3u32 {
        let got = fock::f_product(&s4_word_low(5, 2, k), &p)?;
        ensure(got == s4_expected_low(5, 2, k), &format!("hook column word k = {k}"))?;
    }
    Ok(())
}

fn check_fock_case_two_word() -> Result<()> {
    let p = pf(7, 1);
    let got = fock::f_product(&s5c2_word_main(p.e, 1), &p)?;
    ensure(got == s5c2_expected_main(1), "four-term window expansion at e = 7, f = 1")
}

fn check_fock_candidate() -> Result<()> {
    let p = pf(5, 0);
    let product = fock::f_product(&s5c1_word_1(p.e), &p)?;
    let cand = fock::as_canonical_candidate(&product)
        .ok_or_else(|| Error::Internal("product is not canonical".into()))?;
    ensure(cand.leader == bp("|2,2"), "leader of the first column")
}

fn check_fock_columns() -> Result<()> {
    let p = pf(5, 0);
    let product = fock::f_product(&s5c1_word_1(p.e), &p)?;
    let cand = fock::as_canonical_candidate(&product)
        .ok_or_else(|| Error::Internal("product is not canonical".into()))?;
    let col = fock::decomp_column(&cand);
    let want: BTreeMap<Bipartition, i64> = [
        (s5c1_lambda(1), 1),
        (s5c1_lambda(2), 1),
        (s5c1_lambda(5), 1),
        (s5c1_lambda(6), 1),
    ]
    .into_iter()
    .collect();
    ensure(col == want, "column of lambda_1")?;

    let p = pf(7, 1);
    let product = fock::f_product(&s5c2_word_main(p.e, 1), &p)?;
    let cand = fock::as_canonical_candidate(&product)
        .ok_or_else(|| Error::Internal("window product is not canonical".into()))?;
    let col = fock::decomp_column(&cand);
    let want: BTreeMap<Bipartition, i64> = (2..=5).map(|i| (s5c2_lambda(1, i), 1)).collect();
    ensure(col == want, "column of lambda_2 in the window block")
}

fn check_kleshchev_census_edges() -> Result<()> {
    let p = pf(5, 0);
    ensure(kleshchev::is_kleshchev(&bp("|2,2"), &p).0, "lambda_1 is Kleshchev")?;
    ensure(!kleshchev::is_kleshchev(&bp("2,2|"), &p).0, "lambda_6 is not Kleshchev")
}

fn check_jantzen_six_member_block() -> Result<()> {
    let p = pf(5, 0);
    let block = jantzen::block_of(&s5c1_lambda(1), &p)?;
    ensure(block.size() == 6, "six members")?;
    ensure(block.residue == vec![(0, 2), (1, 1), (4, 1)], "residues {-1, 0, 0, 1}")?;
    let want: std::collections::BTreeSet<Bipartition> = (1..=6).map(s5c1_lambda).collect();
    let got: std::collections::BTreeSet<Bipartition> = block.members.iter().cloned().collect();
    ensure(got == want, "membership census")
}

fn check_jantzen_vanishing() -> Result<()> {
    let p = pf(5, 1);
    ensure(
        jantzen::valuation(&bp("|1,1"), &bp("1|1"), &p)? == 0,
        "no contribution without strict dominance",
    )?;
    ensure(
        jantzen::valuation(&bp("|1,1"), &bp("2|"), &p)? == 0,
        "no contribution from the reversed pair",
    )
}

fn check_jantzen_minimal_sum() -> Result<()> {
    let p = pf(5, 1);
    ensure(jantzen::jantzen_sum(&bp("|1,1"), &p)?.is_empty(), "dominance-minimal member")
}

fn check_jantzen_alternating() -> Result<()> {
    let p = pf(5, 1);
    let mut want1 = jantzen::SpechtCombination::new();
    want1.add(bp("|1,1"), 1);
    ensure(jantzen::jantzen_sum(&bp("1|1"), &p)? == want1, "level-one sum")?;
    let mut want2 = jantzen::SpechtCombination::new();
    want2.add(bp("1|1"), 1);
    want2.add(bp("|1,1"), -1);
    ensure(jantzen::jantzen_sum(&bp("2|"), &p)? == want2, "alternating level-two sum")
}

fn check_decomp_singleton() -> Result<()> {
    let p = pf(5, 1);
    let b = jantzen::block_of(&bp("1,1|"), &p)?;
    ensure(
        matches!(decomp::classify_block(&b)?, BlockClass::Simple { .. }),
        "singleton block is simple",
    )
}

fn check_decomp_bidiagonal() -> Result<()> {
    let p = pf(7, 2);
    let b = jantzen::block_of(&bp("|1,1,1"), &p)?;
    let m = decomp::decomposition_matrix(&b)?;
    ensure(m.rows.len() == 4 && m.cols.len() == 3, "f = 2 chain is 4 x 3")?;
    let want: Vec<Vec<i64>> = vec![
        vec![1, 0, 0],
        vec![1, 1, 0],
        vec![0, 1, 1],
        vec![0, 0, 1],
    ];
    ensure(m.entries == want, "bidiagonal entries")
}

fn check_table_s4_case1() -> Result<()> {
    let m = fixture_matrix(FixtureTag::S4Case1, &pf(5, 2))?;
    ensure(m.entries[2] == [1, 1, 1, 1, 0], "row of lambda_{2,f-1}")?;
    ensure(m.entries[3] == [1, 0, 0, 1, 1], "row of lambda_{1,f-1}")
}

fn check_table_s4_f0() -> Result<()> {
    let m = fixture_matrix(FixtureTag::S4F0, &pf(5, 0))?;
    ensure(m.rows.len() == 10 && m.cols.len() == 4, "2e x (e-1) shape")
}

fn check_table_s5_case1() -> Result<()> {
    let m = fixture_matrix(FixtureTag::S5Case1, &pf(5, 0))?;
    let col1: Vec<i64> = (0..6).map(|i| m.entries[i][0]).collect();
    let col2: Vec<i64> = (0..6).map(|i| m.entries[i][1]).collect();
    ensure(col1 == [1, 1, 0, 0, 1, 1], "column of lambda_1")?;
    ensure(col2 == [0, 1, 1, 1, 1, 0], "column of lambda_2")
}

fn check_table_s5_case2() -> Result<()> {
    let m = fixture_matrix(FixtureTag::S5Case2, &pf(7, 1))?;
    for i in 0..5 {
        ensure(m.entries[i][i] == 1, "unitriangular diagonal")?;
        for j in i + 1..5 {
            ensure(m.entries[i][j] == 0, "strictly lower triangular")?;
        }
    }
    Ok(())
}

fn check_reptype_windows() -> Result<()> {
    use Order::Finite;
    ensure(
        reptype::rep_type_b(4, Finite(4), ChargeSpec::Charge(2))? == RepType::Infinite,
        "n >= e is infinite",
    )?;
    ensure(
        reptype::rep_type_b(4, Finite(5), ChargeSpec::Charge(1))? == RepType::Finite,
        "4 < min{5, 6}",
    )?;
    ensure(
        reptype::rep_type_b(6, Finite(5), ChargeSpec::Generic)? == RepType::Finite,
        "generic bound 2e",
    )
}

fn check_reptype_type_a() -> Result<()> {
    use Order::Finite;
    ensure(reptype::rep_type_a(3, Finite(2))? == RepType::Finite, "3 < 4")?;
    ensure(reptype::rep_type_a(4, Finite(2))? == RepType::Infinite, "4 is not < 4")
}

fn check_reptype_multiplicity() -> Result<()> {
    let w = reptype::uno_conjecture_witness(6, 4)?;
    ensure(w.in_window && w.multiplicity == 1, "simple-root window at (6, 4)")?;
    let w = reptype::uno_conjecture_witness(6, 6)?;
    ensure(!w.in_window && w.multiplicity == 2, "multiple root at (6, 6)")
}

const CHECKS: &[Check] = &[
    ("core/charge-normalization", check_core_charge),
    ("core/content-of-nodes", check_core_contents),
    ("core/residue-multiset", check_core_residues),
    ("maya/path-sequence-display", check_maya_path_display),
    ("maya/path-round-trip", check_maya_round_trip),
    ("maya/hook-count", check_maya_hook_count),
    ("maya/bipath-shift", check_maya_bipath_shift),
    ("maya/region-identities", check_maya_identities),
    ("maya/one-a-family", check_maya_one_a_family),
    ("fock/case-one-words", check_fock_case_one_word),
    ("fock/divided-power", check_fock_divided_power),
    ("fock/hook-column-words", check_fock_s4_low_word),
    ("fock/window-word", check_fock_case_two_word),
    ("fock/candidate-leader", check_fock_candidate),
    ("fock/decomposition-columns", check_fock_columns),
    ("kleshchev/census-edges", check_kleshchev_census_edges),
    ("jantzen/six-member-block", check_jantzen_six_member_block),
    ("jantzen/vanishing", check_jantzen_vanishing),
    ("jantzen/minimal-sum", check_jantzen_minimal_sum),
    ("jantzen/alternating-sum", check_jantzen_alternating),
    ("decomp/singleton-simple", check_decomp_singleton),
    ("decomp/bidiagonal-chain", check_decomp_bidiagonal),
    ("table/S4_CASE1", check_table_s4_case1),
    ("table/S4_F0", check_table_s4_f0),
    ("table/S5_CASE1", check_table_s5_case1),
    ("table/S5_CASE2", check_table_s5_case2),
    ("reptype/type-b-windows", check_reptype_windows),
    ("reptype/type-a-window", check_reptype_type_a),
    ("reptype/multiplicity-window", check_reptype_multiplicity),
];

fn name_matches(name: &str, tag: &str) -> bool {
    let mut parts = name.split('/');
    let group = parts.next().unwrap_or_default().to_ascii_uppercase();
    if group == tag {
        return true;
    }
    parts
        .next()
        .map(|rest| rest.to_ascii_uppercase().replace('-', "_") == tag)
        .unwrap_or(false)
}

/// Run the verification ledger, optionally restricted to a group name
/// (`core`, `maya`, `fock`, `kleshchev`, `jantzen`, `decomp`, `table`,
/// `reptype`) or to a single check (for example a table tag `S4_CASE1`).
pub fn verify(tag: Option<&str>) -> Result<Vec<CheckOutcome>> {
    let filter = tag.map(|t| t.trim().to_ascii_uppercase().replace('-', "_"));
    let selected: Vec<&Check> = CHECKS
        .iter()
        .filter(|(name, _)| match &filter {
            None => true,
            Some(t) => name_matches(name, t),
        })
        .collect();
    if selected.is_empty() {
        return Err(Error::ParseParam(format!(
            "unknown fixture tag: {}",
            tag.unwrap_or_default()
        )));
    }
    Ok(selected
        .into_iter()
        .map(|(name, run)| match run() {
            Ok(()) => CheckOutcome {
                name: name.to_string(),
                passed: true,
                detail: "ok".to_string(),
            },
            Err(e) => CheckOutcome {
                name: name.to_string(),
                passed: false,
                detail: e.to_string(),
            },
        })
        .collect())
}

// ===========================================================================
// tests
// ===========================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::strictly_dominates;

    // ================= families =================

    #[test]
    fn family_shapes_and_sizes() {
        for e in [5u32, 6, 7] {
            for k in 1..=e {
                assert_eq!(s4_lambda(e, k).size(), e);
                assert_eq!(s4_mu(e, k).size(), e);
            }
            for f in 1..=e / 2 {
                for k in 1..=e - f {
                    for l in 0..f {
                        assert_eq!(s4_lambda_kl(e, f, k, l).size(), e, "e={e} f={f} k={k} l={l}");
                    }
                }
            }
        }
        for i in 1..=6 {
            assert_eq!(s5c1_lambda(i).size(), 4);
        }
        for f in 1..=3 {
            for i in 1..=5 {
                assert_eq!(s5c2_lambda(f, i).size(), 2 * f + 4);
            }
        }
        assert_eq!(s5c2_lambda(1, 2).to_string(), "1|2,2,1");
        assert_eq!(s4_lambda_kl(5, 2, 2, 1).to_string(), "1,1|2,1");
    }

    #[test]
    fn s4_census_matches_the_block() {
        for (e, f) in [(5u32, 0u32), (5, 1), (5, 2), (6, 2), (7, 3)] {
            let p = pf(e, f);
            let block = jantzen::block_of(&s4_lambda(e, 1), &p).unwrap();
            let members: std::collections::BTreeSet<Bipartition> =
                block.members.iter().cloned().collect();
            let listed: std::collections::BTreeSet<Bipartition> =
                s4_block_members(e, f).into_iter().collect();
            assert_eq!(members, listed, "census at e={e}, f={f}");
            let residues: Vec<Res> = block.residue.iter().map(|&(r, _)| r).collect();
            assert_eq!(residues, (0..e as i64).collect::<Vec<_>>());

            let klesh: std::collections::BTreeSet<Bipartition> = block
                .members
                .iter()
                .filter(|b| kleshchev::is_kleshchev(b, &p).0)
                .cloned()
                .collect();
            let expected: std::collections::BTreeSet<Bipartition> =
                s4_kleshchev_census(e, f).into_iter().collect();
            assert_eq!(klesh, expected, "Kleshchev census at e={e}, f={f}");
        }
    }

    // ================= words =================

    #[test]
    fn word_shapes() {
        // Each n = e word has exactly e letters (counting multiplicity).
        for e in [5u32, 6, 7] {
            for f in 1..=e / 2 {
                for k in 1..=e - f {
                    assert_eq!(letter_count(&s4_word_low(e, f, k)), e, "low k={k}");
                }
                if f >= 2 {
                    for k in e - f + 1..e {
                        assert_eq!(letter_count(&s4_word_high(e, f, k)), e, "high k={k}");
                    }
                }
                for k in 1..=e - f {
                    for l in 0..f {
                        assert_eq!(letter_count(&s4_word_kl(e, f, k, l)), e);
                    }
                }
            }
            for k in 1..e {
                assert_eq!(letter_count(&s4_word_f0(e, k)), e);
            }
        }
        assert_eq!(s5c1_word_1(Order::Finite(5)), vec![(0, 1), (1, 1), (4, 1), (0, 1)]);
        assert_eq!(s5c1_word_2(Order::Infinite), vec![(1, 1), (-1, 1), (0, 2)]);
        assert_eq!(
            s5c2_word_main(Order::Finite(7), 1),
            vec![(1, 1), (2, 1), (6, 1), (0, 2), (1, 1)]
        );
        assert_eq!(
            s5c2_word_l4(Order::Finite(7), 1),
            vec![(6, 1), (2, 1), (0, 1), (1, 2), (0, 1)]
        );
    }

    fn letter_count(w: &Word) -> u32 {
        w.iter().map(|&(_, m)| m).sum()
    }

    #[test]
    fn displayed_expansions_at_e_five() {
        let p = pf(5, 2);
        for k in 1..=3u32 {
            assert_eq!(
                fock::f_product(&s4_word_low(5, 2, k), &p).unwrap(),
                s4_expected_low(5, 2, k),
                "low word k={k}"
            );
        }
        assert_eq!(
            fock::f_product(&s4_word_high(5, 2, 4), &p).unwrap(),
            s4_expected_high(5, 2, 4)
        );
        for k in 1..=3u32 {
            assert_eq!(
                fock::f_product(&s4_word_kl(5, 2, k, 0), &p).unwrap(),
                s4_expected_l0(5, 2, k),
                "l = 0 word k={k}"
            );
        }
        for k in 1..=3u32 {
            let word = s4_word_kl(5, 2, k, 1);
            assert_eq!(
                fock::f_product(&word[1..], &p).unwrap(),
                s4_expected_kl_step(5, 2, k, 1),
                "penultimate line k={k}"
            );
        }
        let p0 = pf(5, 0);
        for k in 1..5u32 {
            assert_eq!(
                fock::f_product(&s4_word_f0(5, k), &p0).unwrap(),
                s4_expected_f0(5, k),
                "f = 0 word k={k}"
            );
        }
    }

    #[test]
    fn window_words_reach_their_leaders() {
        // The secondary window words only pin the bottom of their columns;
        // each must still be a canonical candidate led by its label.
        for (e, f) in [(Order::Finite(7), 1u32), (Order::Finite(9), 2), (Order::Infinite, 1)] {
            let p = Params::new(e, f).unwrap();
            let cases = [
                (s5c2_word_l1(e, f), s5c2_lambda(f, 1)),
                (s5c2_word_main(e, f), s5c2_lambda(f, 2)),
                (s5c2_word_l3(e, f), s5c2_lambda(f, 3)),
                (s5c2_word_l4(e, f), s5c2_lambda(f, 4)),
            ];
            for (word, leader) in cases {
                let product = fock::f_product(&word, &p).unwrap();
                let cand = fock::as_canonical_candidate(&product)
                    .unwrap_or_else(|| panic!("{leader} word is not canonical at e={e}, f={f}"));
                assert_eq!(cand.leader, leader, "e={e}, f={f}");
            }
            assert_eq!(
                fock::f_product(&s5c2_word_main(e, f), &p).unwrap(),
                s5c2_expected_main(f),
                "four-term expansion at e={e}, f={f}"
            );
        }
    }

    // ================= tables =================

    #[test]
    fn stored_tables_regenerate() {
        let m = fixture_matrix(FixtureTag::S4Case1, &pf(5, 2)).unwrap();
        assert_eq!(m.entries, S4_CASE1_TABLE.map(|r| r.to_vec()).to_vec());
        assert_eq!(m.rows[2], s4_lambda_kl(5, 2, 2, 1));
        // The same submatrix holds at larger parameters.
        fixture_matrix(FixtureTag::S4Case1, &pf(6, 2)).unwrap();
        fixture_matrix(FixtureTag::S4Case1, &pf(7, 3)).unwrap();

        let m = fixture_matrix(FixtureTag::S4F0, &pf(3, 0)).unwrap();
        assert_eq!((m.rows.len(), m.cols.len()), (6, 2));
        fixture_matrix(FixtureTag::S4F0, &pf(5, 0)).unwrap();

        let m = fixture_matrix(FixtureTag::S5Case1, &pf(5, 0)).unwrap();
        assert_eq!(m.entries, S5_CASE1_TABLE.map(|r| r.to_vec()).to_vec());
        fixture_matrix(FixtureTag::S5Case1, &pf(7, 0)).unwrap();
        fixture_matrix(FixtureTag::S5Case1, &Params::new(Order::Infinite, 0).unwrap()).unwrap();

        let m = fixture_matrix(FixtureTag::S5Case2, &pf(7, 1)).unwrap();
        assert_eq!(m.entries, S5_CASE2_TABLE.map(|r| r.to_vec()).to_vec());
        fixture_matrix(FixtureTag::S5Case2, &pf(9, 2)).unwrap();
        fixture_matrix(FixtureTag::S5Case2, &Params::new(Order::Infinite, 2).unwrap()).unwrap();
    }

    #[test]
    fn fixture_preconditions_are_enforced() {
        assert!(matches!(
            fixture_matrix(FixtureTag::S4Case1, &pf(5, 1)),
            Err(Error::FixtureParams { .. })
        ));
        assert!(matches!(
            fixture_matrix(FixtureTag::S4F0, &pf(5, 1)),
            Err(Error::FixtureParams { .. })
        ));
        assert!(matches!(
            fixture_matrix(FixtureTag::S5Case1, &pf(4, 0)),
            Err(Error::FixtureParams { .. })
        ));
        assert!(matches!(
            fixture_matrix(FixtureTag::S5Case2, &pf(6, 1)),
            Err(Error::FixtureParams { .. })
        ));
    }

    #[test]
    fn tags_parse_and_print() {
        for tag in FixtureTag::ALL {
            assert_eq!(tag.as_str().parse::<FixtureTag>().unwrap(), tag);
        }
        assert_eq!("s5-case2".parse::<FixtureTag>().unwrap(), FixtureTag::S5Case2);
        assert!(matches!(
            "S9_CASE1".parse::<FixtureTag>(),
            Err(Error::ParseParam(_))
        ));
    }

    // ================= ledger =================

    #[test]
    fn ledger_all_green() {
        let out = verify(None).unwrap();
        assert_eq!(out.len(), CHECKS.len());
        for c in &out {
            assert!(c.passed, "{} failed: {}", c.name, c.detail);
        }
    }

    #[test]
    fn ledger_filters_by_tag() {
        let out = verify(Some("table")).unwrap();
        assert_eq!(out.len(), 4);
        let out = verify(Some("S4_CASE1")).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].name, "table/S4_CASE1");
        let out = verify(Some("jantzen")).unwrap();
        assert_eq!(out.len(), 4);
        assert!(verify(Some("nonsense")).is_err());
    }

    // ================= family orderings =================

    #[test]
    fn window_family_rows_dominate_downward() {
        // Row order lambda_1..lambda_5 lists every nonzero entry at or below
        // the diagonal; spot-check the dominances that the table relies on.
        for f in 1..=2u32 {
            let l: Vec<Bipartition> = (1..=5).map(|i| s5c2_lambda(f, i)).collect();
            assert!(strictly_dominates(&l[1], &l[0]));
            assert!(strictly_dominates(&l[2], &l[1]));
            assert!(strictly_dominates(&l[3], &l[1]));
            assert!(strictly_dominates(&l[4], &l[2]));
            assert!(strictly_dominates(&l[4], &l[3]));
        }
    }
}
