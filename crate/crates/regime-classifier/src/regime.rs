//! Regime labels and their JSON form.

use num_rational::Rational64;
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Which adversary picks the agents' distributions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Adversary {
    /// Maximises the event probability (sup over the family).
    Max,
    /// Minimises it (inf over the family).
    Min,
}

impl fmt::Display for Adversary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Adversary::Max => "max",
            Adversary::Min => "min",
        })
    }
}

impl FromStr for Adversary {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "max" => Ok(Adversary::Max),
            "min" => Ok(Adversary::Min),
            other => Err(format!("unknown adversary {other:?}: expected max or min")),
        }
    }
}

/// The three asymptotic behaviours, plus an explicit "could not decide".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegimeKind {
    /// The event is impossible at this `n`: probability exactly `0`.
    Zero,
    /// `exp(−Θ(n))`.
    Exponential,
    /// `Θ(n^e)` for the reported exponent (or exponent interval).
    Polynomial,
    /// A finite search hit its resource cap.
    Undecided,
}

impl RegimeKind {
    /// Lowercase label used in JSON.
    pub fn label(self) -> &'static str {
        match self {
            RegimeKind::Zero => "zero",
            RegimeKind::Exponential => "exponential",
            RegimeKind::Polynomial => "polynomial",
            RegimeKind::Undecided => "undecided",
        }
    }
}

/// A classification result.
///
/// `Zero` is an exact statement about the given `n`; `Exponential` and
/// `Polynomial` hold for all sufficiently large `n` with the same
/// admissibility (parity / divisibility) as the given one.
#[derive(Debug, Clone, PartialEq)]
pub struct Regime {
    /// The regime.
    pub kind: RegimeKind,
    /// Exponent of `n` for a polynomial regime known exactly.
    pub exponent: Option<Rational64>,
    /// `[lower, upper]` bounds on the exponent when only bounds are known.
    pub interval: Option<(Rational64, Rational64)>,
    /// Whether the result comes from a grid search rather than a proof.
    pub heuristic: bool,
    /// Supporting data (constituent, dimension, histogram, method, …).
    pub witness: Value,
}

impl Regime {
    fn with(kind: RegimeKind) -> Self {
        Regime {
            kind,
            exponent: None,
            interval: None,
            heuristic: false,
            witness: json!({}),
        }
    }

    /// Probability exactly zero.
    pub fn zero() -> Self {
        Regime::with(RegimeKind::Zero)
    }

    /// `exp(−Θ(n))`.
    pub fn exponential() -> Self {
        Regime::with(RegimeKind::Exponential)
    }

    /// `Θ(n^exponent)`.
    pub fn polynomial(exponent: Rational64) -> Self {
        Regime {
            exponent: Some(exponent),
            interval: Some((exponent, exponent)),
            ..Regime::with(RegimeKind::Polynomial)
        }
    }

    /// Polynomial with the exponent only bounded; collapses to an exact
    /// exponent when `lower == upper`.
    pub fn polynomial_between(lower: Rational64, upper: Rational64) -> Self {
        assert!(lower <= upper, "exponent interval [{lower}, {upper}] is reversed");
        if lower == upper {
            return Regime::polynomial(lower);
        }
        Regime {
            interval: Some((lower, upper)),
            ..Regime::with(RegimeKind::Polynomial)
        }
    }

    /// Undecided, with the reason in the witness.
    pub fn undecided(reason: &str) -> Self {
        Regime {
            witness: json!({ "reason": reason }),
            ..Regime::with(RegimeKind::Undecided)
        }
    }

    /// Replaces the witness.
    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = witness;
        self
    }

    /// Marks the result as heuristic.
    pub fn flagged_heuristic(mut self) -> Self {
        self.heuristic = true;
        self
    }

    /// Whether the label is asymptotic in `n` (exponential / polynomial).
    pub fn asymptotic(&self) -> bool {
        matches!(self.kind, RegimeKind::Exponential | RegimeKind::Polynomial)
    }

    /// Whether a polynomial exponent (or interval) admits `e`.
    pub fn admits_exponent(&self, e: Rational64) -> bool {
        match (self.kind, self.interval) {
            (RegimeKind::Polynomial, Some((lo, hi))) => lo <= e && e <= hi,
            _ => false,
        }
    }

    /// Compares decay rates: `Zero < Exponential < Polynomial`, with
    /// polynomial regimes ordered by exponent. `None` when either side is
    /// undecided or two exponent intervals overlap.
    pub fn compare_rate(&self, other: &Regime) -> Option<Ordering> {
        fn rank(k: RegimeKind) -> Option<u8> {
            match k {
                RegimeKind::Zero => Some(0),
                RegimeKind::Exponential => Some(1),
                RegimeKind::Polynomial => Some(2),
                RegimeKind::Undecided => None,
            }
        }
        let (a, b) = (rank(self.kind)?, rank(other.kind)?);
        if a != b || a != 2 {
            return Some(a.cmp(&b));
        }
        let ((l1, h1), (l2, h2)) = (self.interval?, other.interval?);
        if l1 == h1 && l2 == h2 {
            Some(l1.cmp(&l2))
        } else if h1 < l2 {
            Some(Ordering::Less)
        } else if h2 < l1 {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// JSON form:
    /// `{"regime", "exponent", "exponent_interval", "asymptotic", "heuristic", "witness", "note"}`.
    pub fn to_json(&self) -> Value {
        let r = |x: Rational64| x.to_string();
        json!({
            "regime": self.kind.label(),
            "exponent": self.exponent.map(r),
            "exponent_interval": self.interval.map(|(lo, hi)| vec![r(lo), r(hi)]),
            "asymptotic": self.asymptotic(),
            "heuristic": self.heuristic,
            "witness": self.witness,
            "note": if self.asymptotic() { Some("asymptotic in n") } else { None },
        })
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.exponent, self.interval) {
            (RegimeKind::Polynomial, Some(e), _) => write!(f, "polynomial n^({e})"),
            (RegimeKind::Polynomial, None, Some((lo, hi))) => write!(f, "polynomial n^[{lo}, {hi}]"),
            (k, _, _) => f.write_str(k.label()),
        }
    }
}
