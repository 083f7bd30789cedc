//! Exact Laurent-polynomial arithmetic over Z[v, v^-1], the Fock-space
//! operators F_i and E_i with their dominance statistics, divided powers,
//! and canonical-basis-candidate recognition.
//!
//! Quantum integers are balanced: [m] = v^{m-1} + v^{m-3} + ... + v^{1-m}.
//! This is the unique convention under which F_0^{(2)} applied to the empty
//! bipartition yields ((1),(1)) on the nose.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::core::{strictly_dominates, Bipartition, Params, Res};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Laurent polynomials
// ---------------------------------------------------------------------------

/// An element of Z[v, v^-1]: exponent -> non-zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> i64 {
        self.coeff(0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    fn insert(&mut self, exp: i64, coeff: i64) {
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.insert(e, c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.insert(e, -c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.insert(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiply by c v^exp.
    pub fn shift_scale(&self, exp: i64, c: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        if c != 0 {
            for (e, k) in self.terms() {
                out.insert(e + exp, k * c);
            }
        }
        out
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Exponent span max - min; 0 for a monomial, meaningless for zero.
    fn span(&self) -> i64 {
        match (self.max_exp(), self.min_exp()) {
            (Some(a), Some(b)) => a - b,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms().map(|(e, c)| json!([e, c])).collect())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(fm, "0");
        }
        for (idx, (&exp, &coeff)) in self.terms.iter().rev().enumerate() {
            if idx == 0 {
                if coeff < 0 {
                    write!(fm, "-")?;
                }
            } else if coeff < 0 {
                write!(fm, " - ")?;
            } else {
                write!(fm, " + ")?;
            }
            let a = coeff.abs();
            if a != 1 || exp == 0 {
                write!(fm, "{a}")?;
            }
            match exp {
                0 => {}
                1 => write!(fm, "v")?,
                _ => write!(fm, "v^{exp}")?,
            }
        }
        Ok(())
    }
}

/// Balanced quantum integer [m] = v^{m-1} + v^{m-3} + ... + v^{1-m}; [0] = 0.
pub fn quantum_integer(m: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for j in 0..m {
        p.insert(m as i64 - 1 - 2 * j as i64, 1);
    }
    p
}

/// [m]! = [1][2]...[m]; [0]! = 1.
pub fn quantum_factorial(m: u32) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for j in 1..=m {
        p = p.mul(&quantum_integer(j));
    }
    p
}

/// Exact division in Z[v, v^-1]; errors when q = 0 or q does not divide p.
pub fn exact_divide(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut rem = p.clone();
    let mut quot = LaurentPoly::zero();
    let q_lead_exp = q.max_exp().unwrap();
    let q_lead_coeff = q.coeff(q_lead_exp);
    while !rem.is_zero() {
        // any multiple of q spans at least as much as q, so a narrower
        // remainder can never be cleared
        if rem.span() < q.span() {
            return Err(Error::InexactDivision);
        }
        let r_lead_exp = rem.max_exp().unwrap();
        let r_lead_coeff = rem.coeff(r_lead_exp);
        if r_lead_coeff % q_lead_coeff != 0 {
            return Err(Error::InexactDivision);
        }
        let c = r_lead_coeff / q_lead_coeff;
        let shift = r_lead_exp - q_lead_exp;
        quot.insert(shift, c);
        rem = rem.sub(&q.shift_scale(shift, c));
    }
    Ok(quot)
}

// ---------------------------------------------------------------------------
// Fock vectors
// ---------------------------------------------------------------------------

/// A finitely supported A-linear combination of bipartitions.  All basis
/// vectors in one combination have the same size (the operators are graded).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<Bipartition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    /// The basis vector of the empty bipartition with coefficient 1.
    pub fn vacuum() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Bipartition::empty(), LaurentPoly::one());
        FockVector { terms }
    }

    pub fn from_terms(terms: Vec<(Bipartition, LaurentPoly)>) -> Self {
        let mut out = FockVector::zero();
        for (b, p) in terms {
            out.insert(b, &p);
        }
        out
    }

    fn insert(&mut self, b: Bipartition, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(b).or_insert_with(LaurentPoly::zero);
        *entry = entry.add(p);
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &Bipartition) -> LaurentPoly {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Bipartition, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    /// Terms sorted by strictly decreasing dominance key, so anything that
    /// dominates is printed first; deterministic because keys are injective.
    pub fn display_order(&self) -> Vec<(&Bipartition, &LaurentPoly)> {
        let mut v: Vec<(&Bipartition, &LaurentPoly)> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.dominance_key().cmp(&a.0.dominance_key()));
        v
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.display_order()
                .into_iter()
                .map(|(b, p)| json!({ "bipartition": b.to_string(), "coeff": p.to_json() }))
                .collect(),
        )
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(fm, "0");
        }
        for (idx, (b, p)) in self.display_order().into_iter().enumerate() {
            if idx > 0 {
                write!(fm, " + ")?;
            }
            if p == &LaurentPoly::one() {
                write!(fm, "({b})")?;
            } else if p.terms.len() == 1 {
                let (e, c) = p.terms().next().unwrap();
                if c == 1 && e != 0 {
                    match e {
                        1 => write!(fm, "v({b})")?,
                        _ => write!(fm, "v^{e}({b})")?,
                    }
                } else {
                    write!(fm, "[{p}]({b})")?;
                }
            } else {
                write!(fm, "[{p}]({b})")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// the operators
// ---------------------------------------------------------------------------

/// F_i u: add every addable i-node, weighting mu = lambda + x by
/// v^{N(lambda, mu)} where N counts the addable i-positions of lambda giving
/// something mu strictly dominates, minus the removable i-positions of mu
/// giving something strictly dominating lambda.
pub fn apply_f(u: &FockVector, i: Res, params: &Params) -> FockVector {
    let i = params.reduce(i);
    let mut out = FockVector::zero();
    for (lam, c) in u.terms() {
        let addables: Vec<Bipartition> = lam
            .addable_nodes()
            .into_iter()
            .filter(|&x| params.residue(x) == i)
            .map(|x| lam.add_node(x).expect("addable node adds"))
            .collect();
        for mu in &addables {
            let up = addables.iter().filter(|a| strictly_dominates(mu, a)).count() as i64;
            let down = mu
                .removable_nodes()
                .into_iter()
                .filter(|&z| params.residue(z) == i)
                .map(|z| mu.remove_node(z).expect("removable node removes"))
                .filter(|beta| strictly_dominates(beta, lam))
                .count() as i64;
            out.insert(mu.clone(), &c.shift_scale(up - down, 1));
        }
    }
    out
}

/// E_i u: remove every removable i-node, weighting nu = lambda - x by
/// v^{-N(nu, lambda)} where N counts the addable i-positions of nu giving
/// something strictly dominating lambda, minus the removable i-positions
/// of lambda giving something nu strictly dominates.
pub fn apply_e(u: &FockVector, i: Res, params: &Params) -> FockVector {
    let i = params.reduce(i);
    let mut out = FockVector::zero();
    for (lam, c) in u.terms() {
        let removables: Vec<Bipartition> = lam
            .removable_nodes()
            .into_iter()
            .filter(|&x| params.residue(x) == i)
            .map(|x| lam.remove_node(x).expect("removable node removes"))
            .collect();
        for nu in &removables {
            let up = nu
                .addable_nodes()
                .into_iter()
                .filter(|&y| params.residue(y) == i)
                .map(|y| nu.add_node(y).expect("addable node adds"))
                .filter(|alpha| strictly_dominates(alpha, lam))
                .count() as i64;
            let down = removables.iter().filter(|beta| strictly_dominates(nu, beta)).count() as i64;
            out.insert(nu.clone(), &c.shift_scale(-(up - down), 1));
        }
    }
    out
}

/// F_i^{(m)} u = F_i^m u / [m]!.  The division is exact whenever the input
/// arises from the integral Fock module; an inexact division is a broken
/// invariant, reported as an error.
pub fn apply_f_divided(u: &FockVector, i: Res, m: u32, params: &Params) -> Result<FockVector> {
    let mut power = u.clone();
    for _ in 0..m {
        power = apply_f(&power, i, params);
    }
    let fact = quantum_factorial(m);
    let mut out = FockVector::zero();
    for (b, p) in power.terms() {
        out.insert(b.clone(), &exact_divide(p, &fact)?);
    }
    Ok(out)
}

/// Apply a word of divided powers to the empty bipartition, rightmost factor
/// first, matching the convention for written operator products.
pub fn f_product(word: &[(Res, u32)], params: &Params) -> Result<FockVector> {
    let mut u = FockVector::vacuum();
    for &(i, m) in word.iter().rev() {
        if m == 0 {
            return Err(Error::ParseWord("multiplicity must be positive".into()));
        }
        u = apply_f_divided(&u, i, m, params)?;
    }
    Ok(u)
}

/// Parse a comma-separated operator word like `F0,F1^2,F-1`.  For finite e
/// the subscripts are reduced mod e; for e = inf any integer is a residue.
pub fn parse_word(s: &str, params: &Params) -> Result<Vec<(Res, u32)>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::ParseWord("empty word".into()));
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let rest = tok
                .strip_prefix('F')
                .ok_or_else(|| Error::ParseWord(format!("'{tok}' does not start with F")))?;
            let (sub, mult) = match rest.split_once('^') {
                Some((sub, m)) => {
                    let mult: u32 = m
                        .parse()
                        .map_err(|_| Error::ParseWord(format!("bad multiplicity in '{tok}'")))?;
                    if mult == 0 {
                        return Err(Error::ParseWord(format!("zero multiplicity in '{tok}'")));
                    }
                    (sub, mult)
                }
                None => (rest, 1),
            };
            let i: i64 = sub
                .parse()
                .map_err(|_| Error::ParseWord(format!("bad subscript in '{tok}'")))?;
            Ok((params.reduce(i), mult))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// canonical candidates
// ---------------------------------------------------------------------------

/// A vector of the shape mu + sum d_lambda(v) lambda with d in vZ[v] and
/// every lambda strictly dominating mu — the sufficient form for membership
/// in the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCandidate {
    pub leader: Bipartition,
    pub tail: BTreeMap<Bipartition, LaurentPoly>,
}

/// Recognize the canonical shape: exactly one term may carry a non-zero
/// constant coefficient, that coefficient must be exactly 1, and every other
/// term must have coefficient in vZ[v] and strictly dominate the leader.
pub fn as_canonical_candidate(u: &FockVector) -> Option<CanonicalCandidate> {
    let mut leader: Option<&Bipartition> = None;
    for (b, p) in u.terms() {
        if p.constant_term() != 0 {
            if leader.is_some() {
                return None;
            }
            if *p != LaurentPoly::one() {
                return None;
            }
            leader = Some(b);
        }
    }
    let leader = leader?.clone();
    let mut tail = BTreeMap::new();
    for (b, p) in u.terms() {
        if *b == leader {
            continue;
        }
        if p.min_exp().unwrap_or(0) < 1 {
            return None;
        }
        if !strictly_dominates(b, &leader) {
            return None;
        }
        tail.insert(b.clone(), p.clone());
    }
    Some(CanonicalCandidate { leader, tail })
}

/// Specialize a candidate at v = 1: the column of decomposition numbers
/// d_{lambda, leader}, with the leader contributing 1.
pub fn decomp_column(c: &CanonicalCandidate) -> BTreeMap<Bipartition, i64> {
    let mut out = BTreeMap::new();
    out.insert(c.leader.clone(), 1);
    for (b, p) in &c.tail {
        out.insert(b.clone(), p.eval_at_one());
    }
    out
}

// ===========================================================================
// tests
// ===========================================================================
