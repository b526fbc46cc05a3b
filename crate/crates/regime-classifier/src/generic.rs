//! Decision procedures driven by polyhedra: a single polyhedron, a finite
//! union (a tie event), and a rule's tie event built on demand.

use crate::closed::closed_form_regime;
use crate::{Adversary, ClassifyError, ModelSpec, Regime};
use num_rational::Rational64;
use rational_polyhedra::{
    hull_intersects_cone, hull_subset_cone, implicit_equalities, integer_slice_nonempty, Polyhedron, SliceDecision, Q,
};
use serde_json::json;
use tie_polyhedra::{tie_event, MinTies, Parity, TieError, TieEvent};
use voting_rules::RuleId;

/// Default grid resolution for the min-adversary search over mixtures.
pub const DEFAULT_MIN_GRID: usize = 6;

fn half_gap(dim: usize, q: usize) -> Rational64 {
    Rational64::new(dim as i64 - q as i64, 2)
}

fn check_dims(model: &ModelSpec, q: usize) -> Result<(), ClassifyError> {
    if model.q() != q {
        return Err(ClassifyError::InvalidQuery(format!(
            "model has {} categories but the polyhedron lives in dimension {q}",
            model.q()
        )));
    }
    Ok(())
}

/// Regime of `Pr(X ∈ H)` for one polyhedron `H`.
///
/// Zero when `H` has no integer point with coordinate sum `n`; otherwise
/// exponential when the hull misses (max) or is not contained in (min) the
/// characteristic cone, and `Θ(n^{(dim − q)/2})` otherwise.
pub fn classify_polyhedron(model: &ModelSpec, h: &Polyhedron, n: u64, adv: Adversary) -> Result<Regime, ClassifyError> {
    if n == 0 {
        return Err(ClassifyError::InvalidQuery("n must be at least 1".into()));
    }
    let q = h.q();
    check_dims(model, q)?;
    let point = match integer_slice_nonempty(h, n) {
        SliceDecision::Feasible(x) => x,
        SliceDecision::Infeasible => return Ok(Regime::zero()),
        SliceDecision::Undecided => return Ok(Regime::undecided("integer-slice node cap reached")),
    };
    let hull = model.distributions();
    let active = match adv {
        Adversary::Max => hull_intersects_cone(hull, h.a())?,
        Adversary::Min => hull_subset_cone(hull, h.a())?,
    };
    if !active {
        return Ok(Regime::exponential().with_witness(json!({ "histogram": point })));
    }
    let dim = implicit_equalities(h.a(), q).dim;
    Ok(Regime::polynomial(half_gap(dim, q)).with_witness(json!({ "dim": dim, "q": q, "histogram": point })))
}

fn activated(event: &TieEvent, hull: &[Vec<Q>], n: u64) -> Result<MinTies, ClassifyError> {
    Ok(event.min_ties(hull, n)?)
}

/// Regime once the least-tied activated constituent is known.
fn from_min_ties(event: &TieEvent, found: MinTies, n: u64) -> Result<Regime, ClassifyError> {
    let q = event.q();
    match found {
        MinTies::Found { index, ties } => {
            let h = event.polyhedron(index)?;
            let dim = implicit_equalities(h.a(), q).dim;
            if dim + ties != q {
                return Err(ClassifyError::Unsupported(format!(
                    "constituent {} has cone dimension {dim}, expected {}",
                    event.constituents()[index].structure.label(),
                    q - ties
                )));
            }
            Ok(Regime::polynomial(half_gap(dim, q)).with_witness(json!({
                "constituent": event.constituents()[index].structure.label(),
                "ties": ties,
                "dim": dim,
                "q": q,
                "histogram": event.witness(index, n)?,
            })))
        }
        MinTies::NoneActivated => Ok(match event.any_realizable(n)? {
            Some(true) => Regime::exponential(),
            Some(false) => Regime::zero(),
            None => Regime::undecided("integer-slice node cap reached"),
        }),
        MinTies::Undecided => Ok(Regime::undecided("integer-slice node cap reached")),
    }
}

/// Regime of `Pr(X ∈ ∪_i H_i)` for a tie event.
///
/// Max: the largest cone dimension over constituents that are realizable
/// at `n` and whose cone meets the hull. Constituents are scanned by
/// ascending tie count, and the dimension of the first hit is recomputed
/// exactly and checked against `q − ties`.
///
/// Min: exact for a single distribution. For larger families a grid of
/// mixtures is searched and the result is flagged heuristic.
pub fn classify_union(model: &ModelSpec, event: &TieEvent, n: u64, adv: Adversary) -> Result<Regime, ClassifyError> {
    classify_union_with_grid(model, event, n, adv, DEFAULT_MIN_GRID)
}

/// [`classify_union`] with an explicit grid resolution for the min search.
pub fn classify_union_with_grid(
    model: &ModelSpec,
    event: &TieEvent,
    n: u64,
    adv: Adversary,
    grid: usize,
) -> Result<Regime, ClassifyError> {
    if n == 0 {
        return Err(ClassifyError::InvalidQuery("n must be at least 1".into()));
    }
    check_dims(model, event.q())?;
    if adv == Adversary::Max || model.is_single() {
        let found = activated(event, model.distributions(), n)?;
        return from_min_ties(event, found, n);
    }
    // Min over a continuum hull: β_n = min over mixtures of the largest
    // activated dimension, witnessed on a finite grid only.
    let mut worst: Option<(usize, MinTies)> = None;
    let points = model.grid(grid);
    for p in &points {
        match activated(event, std::slice::from_ref(p), n)? {
            MinTies::Undecided => return Ok(Regime::undecided("integer-slice node cap reached").flagged_heuristic()),
            MinTies::NoneActivated => {
                let r = from_min_ties(event, MinTies::NoneActivated, n)?;
                let mixture: Vec<String> = p.iter().map(Q::to_string).collect();
                return Ok(r
                    .with_witness(json!({ "grid": grid, "unactivated_mixture": mixture }))
                    .flagged_heuristic());
            }
            found @ MinTies::Found { ties, .. } => {
                if worst.as_ref().map_or(true, |(t, _)| ties > *t) {
                    worst = Some((ties, found));
                }
            }
        }
    }
    let (_, found) = worst.expect("grid is nonempty");
    let r = from_min_ties(event, found, n)?;
    let mut w = r.witness.clone();
    w["grid"] = json!(grid);
    w["grid_points"] = json!(points.len());
    Ok(r.with_witness(w).flagged_heuristic())
}

/// Regime of "exactly `k` winners" for `rule` at `n` agents.
///
/// Builds the tie event (respecting the parity of `n`) and classifies the
/// union. When the rule/size combination is beyond the enumeration guards,
/// falls back to the closed forms, which need the uniform distribution in
/// the hull.
pub fn classify_ties(
    rule: &RuleId,
    model: &ModelSpec,
    m: usize,
    k: usize,
    n: u64,
    adv: Adversary,
) -> Result<Regime, ClassifyError> {
    match tie_event(rule, m, k, Parity::of(n)) {
        Ok(event) => {
            let r = classify_union(model, &event, n, adv)?;
            let mut w = r.witness.clone();
            w["method"] = json!("generic");
            w["constituents"] = json!(event.len());
            Ok(r.with_witness(w))
        }
        Err(TieError::SizeGuard { .. }) => {
            if !model.hull_contains_uniform() {
                return Err(ClassifyError::Unsupported(format!(
                    "{rule} with m={m} exceeds the enumeration guard and the closed forms need the uniform distribution in the hull"
                )));
            }
            let r = closed_form_regime(rule, m, k, n)?;
            let mut w = r.witness.clone();
            w["method"] = json!("closed-form fallback");
            Ok(r.with_witness(w))
        }
        Err(e) => Err(e.into()),
    }
}
