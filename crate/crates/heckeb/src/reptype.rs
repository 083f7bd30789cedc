//! Representation-type decisions.
//!
//! These are closed-form predicates: type B with charge is finite exactly
//! when n < min{e, 2f + 4}, the generic-charge reduction is n < 2e, and
//! type A is n < 2e.  No block machinery is consulted here; the structural
//! modules corroborate the finite side but never feed back into the answer.
//!
//! `uno_conjecture_witness` covers the one-parameter specialization where
//! both eigenvalue exponents collapse (even e, f = e/2 - 1): there the bound
//! min{e, 2f + 4} = e, and the three zones n < e/2, e/2 <= n < e, n >= e
//! match the multiplicity 0, 1, >= 2 of q as a root of the Poincare
//! polynomial, which is floor(2n / e).

use serde_json::{json, Value};

use crate::core::{Order, Params};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepType {
    Finite,
    Infinite,
}

impl RepType {
    pub fn as_str(&self) -> &'static str {
        match self {
            RepType::Finite => "FINITE",
            RepType::Infinite => "INFINITE",
        }
    }
}

impl std::fmt::Display for RepType {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fm.write_str(self.as_str())
    }
}

/// How the T_0-eigenvalue exponent is specified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChargeSpec {
    /// No relation between the eigenvalue and powers of q: the bound becomes
    /// n < 2e independently of the charge.
    Generic,
    /// Eigenvalues 1 and q^f0; f0 is folded to min(f0, e - f0) first.
    Charge(u32),
}

fn require_order_b(e: Order) -> Result<()> {
    match e {
        Order::Finite(m) if m < 3 => Err(Error::UnsupportedOrder(m as u64)),
        _ => Ok(()),
    }
}

/// Representation type of the type-B algebra on n strands.
pub fn rep_type_b(n: u32, e: Order, spec: ChargeSpec) -> Result<RepType> {
    require_order_b(e)?;
    // Windows are compared in u64: 2e and 2f + 4 can exceed u32 for extreme
    // parameters even though n itself fits.
    let finite = match spec {
        ChargeSpec::Generic => match e {
            Order::Finite(m) => u64::from(n) < 2 * u64::from(m),
            Order::Infinite => true,
        },
        ChargeSpec::Charge(f0) => {
            let p = Params::new(e, f0)?;
            let bound = 2 * u64::from(p.f) + 4;
            match e {
                Order::Finite(m) => u64::from(n) < u64::from(m).min(bound),
                Order::Infinite => u64::from(n) < bound,
            }
        }
    };
    Ok(if finite { RepType::Finite } else { RepType::Infinite })
}

/// Representation type of the type-A algebra on n strands: finite iff n < 2e.
/// Unlike type B, e = 2 is allowed; e = 1 (q = 1) is not handled.
pub fn rep_type_a(n: u32, e: Order) -> Result<RepType> {
    match e {
        Order::Finite(m) if m < 2 => Err(Error::UnsupportedOrder(m as u64)),
        Order::Finite(m) => Ok(if u64::from(n) < 2 * u64::from(m) {
            RepType::Finite
        } else {
            RepType::Infinite
        }),
        Order::Infinite => Ok(RepType::Finite),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnoZone {
    /// n < e/2: the defining polynomial has q-multiplicity 0 and the algebra
    /// is semisimple.
    SemisimpleSide,
    /// e/2 <= n < e: q is a simple root; the finite non-semisimple window.
    SimpleRootWindow,
    /// n >= e: q is a multiple root; infinite type.
    MultipleRoot,
}

impl UnoZone {
    pub fn as_str(&self) -> &'static str {
        match self {
            UnoZone::SemisimpleSide => "semisimple side",
            UnoZone::SimpleRootWindow => "simple-root window",
            UnoZone::MultipleRoot => "multiple root",
        }
    }
}

/// Report for the one-parameter specialization at even e, f = e/2 - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnoWitness {
    pub e: u32,
    pub n: u32,
    /// The folded charge e/2 - 1 forced by the specialization.
    pub f: u32,
    /// Multiplicity of q as a root of the Poincare polynomial: floor(2n/e).
    pub multiplicity: u32,
    pub zone: UnoZone,
    /// Whether (e, n) lies in the finite non-semisimple window
    /// e/2 <= n < e.
    pub in_window: bool,
}

impl UnoWitness {
    pub fn narrative(&self) -> String {
        let head = format!(
            "e = {}, n = {}: q has multiplicity {} in the Poincare polynomial",
            self.e, self.n, self.multiplicity
        );
        let tail = match self.zone {
            UnoZone::SemisimpleSide => format!(
                "n < e/2 = {}, the semisimple side of the window",
                self.e / 2
            ),
            UnoZone::SimpleRootWindow => format!(
                "q is a simple root and {} <= n < {} is the finite window",
                self.e / 2,
                self.e
            ),
            UnoZone::MultipleRoot => format!(
                "q is a multiple root since n >= e = {}, so the type is infinite",
                self.e
            ),
        };
        format!("{head}; {tail}")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "e": self.e,
            "n": self.n,
            "f": self.f,
            "multiplicity": self.multiplicity,
            "zone": self.zone.as_str(),
            "in_window": self.in_window,
        })
    }
}

/// The window check for the one-parameter specialization: even e only.
pub fn uno_conjecture_witness(e: u32, n: u32) -> Result<UnoWitness> {
    if e < 3 {
        return Err(Error::UnsupportedOrder(e as u64));
    }
    if e % 2 != 0 {
        return Err(Error::OddOrder(e));
    }
    let multiplicity = (2 * u64::from(n) / u64::from(e)) as u32;
    let zone = match multiplicity {
        0 => UnoZone::SemisimpleSide,
        1 => UnoZone::SimpleRootWindow,
        _ => UnoZone::MultipleRoot,
    };
    Ok(UnoWitness {
        e,
        n,
        f: e / 2 - 1,
        multiplicity,
        zone,
        in_window: zone == UnoZone::SimpleRootWindow,
    })
}

// ===========================================================================
// tests
// ===========================================================================
