//! End-to-end classification: two-dimensional hull examples, rule events
//! under impartial culture, agreement with the closed forms, and the
//! ordering laws between queries.

use num_rational::Rational64;
use proptest::prelude::*;
use rational_polyhedra::{q, Polyhedron};
use regime_classifier::{
    classify_polyhedron, classify_ties, classify_union, closed_form_regime, cross_validate, table_grid, Adversary,
    ModelSpec, Regime, RegimeKind,
};
use std::cmp::Ordering;
use tie_polyhedra::{scoring_tie_polyhedron, tie_event, Parity};
use voting_rules::{RuleId, ScoringVector};

fn r(p: i64, d: i64) -> Rational64 {
    Rational64::new(p, d)
}

fn family(rows: &[[(i64, i64); 2]]) -> ModelSpec {
    ModelSpec::from_distributions(rows.iter().map(|row| row.iter().map(|&(p, d)| q(p, d)).collect()).collect())
        .unwrap()
}

/// A cone that misses the segment between the two distributions.
fn separated() -> Polyhedron {
    Polyhedron::new(2, vec![vec![-3, 4], vec![1, -2]], vec![q(1, 1), q(1, 1)]).unwrap()
}

/// A full-dimensional cone `y ≤ x ≤ 2y` with a shifted apex.
fn wedge() -> Polyhedron {
    Polyhedron::new(2, vec![vec![-1, 1], vec![1, -2], vec![0, -1]], vec![q(-7, 10), q(1, 1), q(1, 10)]).unwrap()
}

fn ic(m: usize) -> ModelSpec {
    ModelSpec::uniform(preference_core::factorial(m) as usize)
}

#[test]
fn hull_missing_the_cone_is_exponential() {
    let model = family(&[[(1, 3), (2, 3)], [(1, 2), (1, 2)]]);
    for n in [10, 50, 200] {
        let reg = classify_polyhedron(&model, &separated(), n, Adversary::Max).unwrap();
        assert_eq!(reg.kind, RegimeKind::Exponential, "n = {n}");
        assert!(reg.witness["histogram"].is_array());
    }
}

#[test]
fn partially_covered_hull_splits_the_adversaries() {
    let model = family(&[[(1, 3), (2, 3)], [(1, 2), (1, 2)]]);
    let max = classify_polyhedron(&model, &wedge(), 20, Adversary::Max).unwrap();
    assert_eq!(max.kind, RegimeKind::Polynomial);
    assert_eq!(max.exponent, Some(r(0, 1)));
    assert_eq!(max.witness["dim"], 2);
    let min = classify_polyhedron(&model, &wedge(), 20, Adversary::Min).unwrap();
    assert_eq!(min.kind, RegimeKind::Exponential);
}

#[test]
fn covered_hull_makes_the_min_adversary_polynomial() {
    let model = family(&[[(2, 3), (1, 3)], [(1, 2), (1, 2)]]);
    let min = classify_polyhedron(&model, &wedge(), 20, Adversary::Min).unwrap();
    assert_eq!(min.kind, RegimeKind::Polynomial);
    assert_eq!(min.exponent, Some(r(0, 1)));
}

#[test]
fn empty_slices_are_zero() {
    // x ≥ n + 1 cannot hold on the slice x + y = n.
    let h = Polyhedron::new(2, vec![vec![-1, 0], vec![0, -1]], vec![q(-11, 1), q(0, 1)]).unwrap();
    let model = ModelSpec::uniform(2);
    for adv in [Adversary::Max, Adversary::Min] {
        assert_eq!(classify_polyhedron(&model, &h, 10, adv).unwrap().kind, RegimeKind::Zero);
        assert_eq!(classify_polyhedron(&model, &h, 11, adv).unwrap().kind, RegimeKind::Polynomial);
    }
}

#[test]
fn single_constituent_event_matches_polyhedron() {
    let event = tie_event(&RuleId::Borda, 3, 3, Parity::Any).unwrap();
    assert_eq!(event.len(), 1);
    let h = scoring_tie_polyhedron(&ScoringVector::borda(3), &[0, 1, 2]).unwrap();
    let model = ic(3);
    for n in [3, 4, 30, 31] {
        for adv in [Adversary::Max, Adversary::Min] {
            let a = classify_union(&model, &event, n, adv).unwrap();
            let b = classify_polyhedron(&model, &h, n, adv).unwrap();
            assert_eq!((a.kind, a.exponent), (b.kind, b.exponent), "n = {n}, {adv}");
        }
    }
}

#[test]
fn rule_events_under_impartial_culture() {
    let cases: [(&str, usize, usize, u64, Regime); 6] = [
        ("borda", 3, 2, 30, Regime::polynomial(r(-1, 2))),
        ("plurality", 3, 2, 30, Regime::polynomial(r(-1, 2))),
        ("maximin", 4, 3, 30, Regime::polynomial(r(-1, 1))),
        ("stv", 3, 3, 35, Regime::zero()),
        ("stv", 3, 3, 34, Regime::polynomial(r(-1, 1))),
        ("copeland:1/2", 3, 2, 31, Regime::zero()),
    ];
    for (rule, m, k, n, want) in cases {
        let rule: RuleId = rule.parse().unwrap();
        for adv in [Adversary::Max, Adversary::Min] {
            let got = classify_ties(&rule, &ic(m), m, k, n, adv).unwrap();
            assert_eq!((got.kind, got.exponent), (want.kind, want.exponent), "{rule} m={m} k={k} n={n} {adv}");
            assert!(!got.heuristic);
        }
    }
}

#[test]
fn agreement_grid_is_complete() {
    let grid = table_grid().unwrap();
    assert_eq!(grid.len(), 9 * 2 * 7);
    let bad: Vec<String> = grid.iter().filter(|c| !c.agree).map(|c| c.to_json().to_string()).collect();
    assert!(bad.is_empty(), "disagreements:\n{}", bad.join("\n"));
}

#[test]
fn ranked_pairs_two_winners_collapses() {
    let c = cross_validate(&RuleId::RankedPairs, 3, 2, 30).unwrap();
    assert!(c.agree, "{}", c.to_json());
    assert_eq!(c.closed_form.exponent, Some(r(-1, 2)));
    assert_eq!(c.generic.exponent, Some(r(-1, 2)));
}

#[test]
fn zero_answers_coincide() {
    for (rule, k, n) in [("stv", 3, 35), ("coombs", 3, 31), ("copeland:1/2", 2, 33), ("plurality", 3, 31)] {
        let rule: RuleId = rule.parse().unwrap();
        let c = cross_validate(&rule, 3, k, n).unwrap();
        assert_eq!(c.generic.kind, RegimeKind::Zero, "{}", c.to_json());
        assert_eq!(c.closed_form.kind, RegimeKind::Zero);
    }
}

#[test]
fn scoring_exponent_drops_by_half_per_extra_winner() {
    for rule in ["borda", "plurality", "veto"] {
        let rule: RuleId = rule.parse().unwrap();
        for n in [24, 36, 37] {
            let regimes: Vec<Regime> =
                (2..=4).map(|k| classify_ties(&rule, &ic(4), 4, k, n, Adversary::Max).unwrap()).collect();
            for w in regimes.windows(2) {
                if let (Some(a), Some(b)) = (w[0].exponent, w[1].exponent) {
                    assert_eq!(b, a - r(1, 2), "{rule} n={n}");
                }
            }
        }
    }
}

#[test]
fn closed_form_fallback_beyond_enumeration() {
    let reg = classify_ties(&RuleId::Maximin, &ic(5), 5, 4, 40, Adversary::Max).unwrap();
    assert_eq!(reg.exponent, Some(r(-3, 2)));
    assert_eq!(reg.witness["method"], "closed-form fallback");
    assert_eq!(closed_form_regime(&RuleId::Maximin, 5, 4, 40).unwrap().exponent, reg.exponent);
}

fn rule_strategy() -> impl Strategy<Value = RuleId> {
    prop::sample::select(vec!["borda", "plurality", "veto", "maximin", "copeland:1/2", "stv", "baldwin"])
        .prop_map(|s| s.parse::<RuleId>().unwrap())
}

fn distribution() -> impl Strategy<Value = Vec<rational_polyhedra::Q>> {
    prop::collection::vec(1i64..6, 6).prop_map(|w| {
        let total: i64 = w.iter().sum();
        w.into_iter().map(|x| q(x, total)).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn max_dominates_min(
        rule in rule_strategy(),
        k in 2usize..=3,
        n in 20u64..40,
        pis in prop::collection::vec(distribution(), 1..=2),
    ) {
        let model = ModelSpec::from_distributions(pis).unwrap();
        let max = classify_ties(&rule, &model, 3, k, n, Adversary::Max).unwrap();
        let min = classify_ties(&rule, &model, 3, k, n, Adversary::Min).unwrap();
        prop_assert_ne!(max.compare_rate(&min), Some(Ordering::Less), "max {} vs min {}", max, min);
        prop_assert_eq!(min.heuristic, model.distributions().len() > 1);
    }
}
