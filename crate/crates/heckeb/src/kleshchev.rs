//! Normal and good nodes, and the recursive Kleshchev-bipartition test.
//!
//! A removable r-node x is normal when (a) for every removable r-node y
//! below x the removable r-nodes from x down to and including y outnumber
//! the addable r-nodes strictly between x and y — equivalently, removables
//! strictly between weakly outnumber addables strictly between — and (b) at
//! least as many removable as addable r-nodes lie below x.  The good r-node
//! is the highest normal one.  A bipartition is Kleshchev when some good
//! node can be removed to leave a Kleshchev bipartition, down to the empty
//! one; these are exactly the labels of the non-zero simple modules.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::core::{below, strictly_between, Bipartition, Node, Order, Params, Res};

/// Removable r-nodes that are normal, ordered top to bottom.
pub fn normal_nodes(b: &Bipartition, params: &Params, r: Res) -> Vec<Node> {
    let removable: Vec<Node> = b
        .removable_nodes()
        .into_iter()
        .filter(|&x| params.residue(x) == r)
        .collect();
    let addable: Vec<Node> = b
        .addable_nodes()
        .into_iter()
        .filter(|&x| params.residue(x) == r)
        .collect();
    removable
        .iter()
        .copied()
        .filter(|&x| {
            let pairwise = removable.iter().filter(|&&y| below(y, x)).all(|&y| {
                let rem = removable.iter().filter(|&&z| strictly_between(z, x, y)).count();
                let add = addable.iter().filter(|&&z| strictly_between(z, x, y)).count();
                rem >= add
            });
            let rem_below = removable.iter().filter(|&&y| below(y, x)).count();
            let add_below = addable.iter().filter(|&&y| below(y, x)).count();
            pairwise && rem_below >= add_below
        })
        .collect()
}

/// The highest normal r-node, if any.
pub fn good_node(b: &Bipartition, params: &Params, r: Res) -> Option<Node> {
    normal_nodes(b, params, r).first().copied()
}

thread_local! {
    static MEMO: RefCell<HashMap<(Bipartition, Order, u32), bool>> = RefCell::new(HashMap::new());
}

/// Candidate residues for a good-node search: 0..e for finite e, otherwise
/// the distinct residues of the removable nodes, ascending.
fn candidate_residues(b: &Bipartition, params: &Params) -> Vec<Res> {
    match params.e {
        Order::Finite(e) => (0..e as i64).collect(),
        Order::Infinite => {
            let mut rs: Vec<Res> =
                b.removable_nodes().into_iter().map(|x| params.residue(x)).collect();
            rs.sort();
            rs.dedup();
            rs
        }
    }
}

fn is_kleshchev_memo(b: &Bipartition, params: &Params) -> bool {
    if b.size() == 0 {
        return true;
    }
    let key = (b.clone(), params.e, params.f);
    if let Some(&v) = MEMO.with(|m| m.borrow().get(&key).copied()).as_ref() {
        return v;
    }
    let verdict = candidate_residues(b, params).into_iter().any(|r| {
        good_node(b, params, r).is_some_and(|x| {
            let smaller = b.remove_node(x).expect("good node is removable");
            is_kleshchev_memo(&smaller, params)
        })
    });
    MEMO.with(|m| m.borrow_mut().insert(key, verdict));
    verdict
}

/// Whether b is Kleshchev, together with a good-node removal sequence down
/// to the empty bipartition (empty when the answer is false).  The witness
/// picks the smallest usable residue at every step, so it is deterministic.
pub fn is_kleshchev(b: &Bipartition, params: &Params) -> (bool, Vec<(Res, Node)>) {
    if !is_kleshchev_memo(b, params) {
        return (false, Vec::new());
    }
    let mut witness = Vec::with_capacity(b.size() as usize);
    let mut cur = b.clone();
    while cur.size() > 0 {
        let step = candidate_residues(&cur, params).into_iter().find_map(|r| {
            let x = good_node(&cur, params, r)?;
            let smaller = cur.remove_node(x).expect("good node is removable");
            is_kleshchev_memo(&smaller, params).then_some((r, x, smaller))
        });
        let (r, x, smaller) = step.expect("a Kleshchev bipartition admits a good step");
        witness.push((r, x));
        cur = smaller;
    }
    (true, witness)
}

// ===========================================================================
// tests
// ===========================================================================
