//! Dimension laws, membership soundness and enumeration cross-checks, each
//! against an oracle written from scratch here.

use preference_core::{
    edge_order, enumerate_rankings, mcgarvey_profile, weighted_majority_graph, Histogram, PalindromicOrder, Profile,
    Ranking,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rational_polyhedra::implicit_equalities;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use tie_polyhedra::{
    dot, enumerate_palindromic_orders, gisr_signature_polyhedron, pair_diff_vector, palindromic_polyhedron,
    put_polyhedron, restricted_pair_vector, scoring_tie_polyhedron, tie_event, Parity,
};
use voting_rules::{put_structure, MRSERule, PUTStructure, RuleId, ScoringVector};

/// Rank over ℚ by elimination on `i128` rows kept primitive.
fn oracle_rank(rows: &[Vec<i64>]) -> usize {
    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let (f, g) = (m[i][c], m[rank][c]);
                for j in 0..cols {
                    m[i][j] = m[i][j] * g - m[rank][j] * f;
                }
                let d = m[i].iter().fold(0, |acc, &v| gcd(acc, v));
                if d > 1 {
                    m[i].iter_mut().for_each(|v| *v /= d);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rankings(m: usize) -> Vec<Vec<usize>> {
    enumerate_rankings(m).unwrap().iter().map(|r| r.order().collect()).collect()
}

fn pos(r: &[usize], a: usize) -> usize {
    r.iter().position(|&x| x == a).unwrap()
}

/// Margin row written directly from rankings.
fn margin_row(m: usize, a: usize, b: usize) -> Vec<i64> {
    rankings(m).iter().map(|r| if pos(r, a) < pos(r, b) { 1 } else { -1 }).collect()
}

/// Plurality-after-removal score row for STV.
fn top_row(m: usize, removed: u64, a: usize) -> Vec<i64> {
    rankings(m)
        .iter()
        .map(|r| (r.iter().find(|&&x| removed >> x & 1 == 0) == Some(&a)) as i64)
        .collect()
}

fn sub(u: &[i64], v: &[i64]) -> Vec<i64> {
    u.iter().zip(v).map(|(x, y)| x - y).collect()
}

fn cone_dim(h: &rational_polyhedra::Polyhedron) -> usize {
    implicit_equalities(h.a(), h.q()).dim
}

#[test]
fn scoring_cone_dimension_is_q_minus_winners_plus_one() {
    for s in [ScoringVector::borda(3), ScoringVector::plurality(3), ScoringVector::veto(3)] {
        for mask in 1u64..8 {
            let t: Vec<usize> = (0..3).filter(|&a| mask >> a & 1 == 1).collect();
            let h = scoring_tie_polyhedron(&s, &t).unwrap();
            let eq: Vec<Vec<i64>> = t
                .windows(2)
                .map(|w| {
                    rankings(3)
                        .iter()
                        .map(|r| s.score(pos(r, w[0])) - s.score(pos(r, w[1])))
                        .collect()
                })
                .collect();
            let expected = 6 - t.len() + 1;
            assert_eq!(cone_dim(&h), expected, "{s:?} {t:?}");
            assert_eq!(6 - oracle_rank(&eq), expected);
        }
    }
}

#[test]
fn order_cone_dimension_is_q_minus_ties() {
    let orders = enumerate_palindromic_orders(3, false).unwrap();
    for o in &orders {
        let h = palindromic_polyhedron(o).unwrap();
        let eq: Vec<Vec<i64>> = o
            .tiers()
            .iter()
            .flat_map(|tier| {
                let first = margin_row(3, tier[0].0, tier[0].1);
                tier[1..].iter().map(move |&(c, d)| sub(&margin_row(3, c, d), &first)).collect::<Vec<_>>()
            })
            .collect();
        assert_eq!(cone_dim(&h), 6 - o.ties(), "{o}");
        assert_eq!(6 - oracle_rank(&eq), 6 - o.ties(), "{o}");
    }
    let fully_tied = PalindromicOrder::all_tied(3);
    assert_eq!(fully_tied.ties(), 3);
    assert_eq!(cone_dim(&palindromic_polyhedron(&fully_tied).unwrap()), 3);
}

#[test]
fn sampled_four_alternative_orders_follow_the_dimension_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut orders = Vec::new();
    tie_polyhedra::visit_palindromic_orders(4, false, |o| {
        if rng.random_range(0..20_000) == 0 {
            orders.push(o);
        }
    })
    .unwrap();
    assert!(orders.len() >= 5);
    for o in orders {
        assert_eq!(cone_dim(&palindromic_polyhedron(&o).unwrap()), 24 - o.ties(), "{o}");
    }
}

#[test]
fn stv_put_cone_dimension_is_q_minus_ties() {
    let rule = MRSERule::stv(3);
    let mut checked = 0;
    for w in PUTStructure::enumerate(3).unwrap().into_iter().filter(|w| w.ties() <= 2) {
        let h = put_polyhedron(&w, &rule).unwrap();
        let mut eq = Vec::new();
        for (removed, entry) in w.entries().iter().enumerate() {
            for tier in entry.tiers() {
                for &b in &tier[1..] {
                    eq.push(sub(&top_row(3, removed as u64, b), &top_row(3, removed as u64, tier[0])));
                }
            }
        }
        assert_eq!(cone_dim(&h), 6 - w.ties(), "{w}");
        assert_eq!(6 - oracle_rank(&eq), 6 - w.ties(), "{w}");
        checked += 1;
    }
    assert!(checked > 100);
}

#[test]
fn two_voter_margin() {
    let h = Profile::parse("1>2>3: 1\n1>3>2: 1").unwrap().histogram().unwrap();
    assert_eq!(dot(&pair_diff_vector(3, 0, 1).unwrap(), h.counts()), 2);
}

#[test]
fn two_voter_order_is_enumerated() {
    let h = Profile::parse("1>2>3: 1\n1>3>2: 1").unwrap().histogram().unwrap();
    let o = edge_order(&weighted_majority_graph(&h.tally()));
    assert!(enumerate_palindromic_orders(3, false).unwrap().contains(&o));
}

#[test]
fn sixteen_voter_stv_profile_is_in_its_put_polyhedron() {
    let p = Profile::parse("1>3>2>4: 1\n1>2>3>4: 2\n2>1>3>4: 3\n3>2>1>4: 4\n4>1>2>3: 6").unwrap();
    let h = p.histogram().unwrap();
    let rule = MRSERule::stv(4);
    let w = put_structure(&h.tally(), &rule).unwrap();
    assert_eq!(w.ties(), 3);
    let x: Vec<i64> = h.counts().iter().map(|&c| c as i64).collect();
    assert!(put_polyhedron(&w, &rule).unwrap().contains(&x));
}

/// Independent order generator: edge orders of every graph with weights in
/// `−3..=3` on the three unordered pairs.
#[test]
fn three_alternative_orders_match_weight_sweep() {
    let mut all = BTreeSet::new();
    let mut odd = BTreeSet::new();
    for w01 in -3i64..=3 {
        for w02 in -3i64..=3 {
            for w12 in -3i64..=3 {
                let g = preference_core::WeightedMajorityGraph::from_upper(3, |a, b| match (a, b) {
                    (0, 1) => w01,
                    (0, 2) => w02,
                    _ => w12,
                });
                let o = edge_order(&g).to_string();
                if w01 != 0 && w02 != 0 && w12 != 0 {
                    odd.insert(o.clone());
                }
                all.insert(o);
            }
        }
    }
    let gen: BTreeSet<String> = enumerate_palindromic_orders(3, false).unwrap().iter().map(|o| o.to_string()).collect();
    let gen_odd: BTreeSet<String> =
        enumerate_palindromic_orders(3, true).unwrap().iter().map(|o| o.to_string()).collect();
    assert_eq!(gen.len(), 147);
    assert_eq!(gen, all);
    assert_eq!(gen_odd, odd);
    for o in enumerate_palindromic_orders(3, false).unwrap() {
        for (a, b) in o.edges() {
            assert_eq!(o.level(a, b), -o.level(b, a));
        }
    }
}

fn random_histogram(rng: &mut ChaCha8Rng, m: usize, n: u64) -> Histogram {
    let q = preference_core::factorial(m) as usize;
    let mut counts = vec![0u64; q];
    for _ in 0..n {
        counts[rng.random_range(0..q)] += 1;
    }
    Histogram::new(m, counts).unwrap()
}

#[test]
fn membership_matches_winner_count() {
    let rules = [
        "plurality", "borda", "veto", "copeland:1/2", "maximin", "schulze", "rankedpairs", "stv", "coombs", "baldwin",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for id in rules {
        let rule: RuleId = id.parse().unwrap();
        let events: Vec<_> = (1..=3).map(|k| tie_event(&rule, 3, k, Parity::Any).unwrap()).collect();
        for _ in 0..1000 {
            let n = rng.random_range(1..=12);
            let h = random_histogram(&mut rng, 3, n);
            let x: Vec<i64> = h.counts().iter().map(|&c| c as i64).collect();
            let winners = rule.winners(&h.tally()).unwrap().len();
            for e in &events {
                let hit = e.locate(&x).unwrap();
                assert_eq!(hit.is_some(), winners == e.k(), "{id} k={} hist={:?}", e.k(), h.counts());
                if let Some(i) = hit {
                    assert_eq!(e.winners_of(i).unwrap(), rule.winners(&h.tally()).unwrap());
                }
            }
        }
    }
}

#[test]
fn odd_parity_events_still_cover_odd_profiles() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for id in ["maximin", "copeland:1/3", "schulze"] {
        let rule: RuleId = id.parse().unwrap();
        let events: Vec<_> = (1..=3).map(|k| tie_event(&rule, 3, k, Parity::Odd).unwrap()).collect();
        for _ in 0..300 {
            let n = 2 * rng.random_range(0..6) + 1;
            let h = random_histogram(&mut rng, 3, n);
            let x: Vec<i64> = h.counts().iter().map(|&c| c as i64).collect();
            let k = rule.winners(&h.tally()).unwrap().len();
            assert!(events[k - 1].locate(&x).unwrap().is_some());
        }
    }
}

/// Every histogram with at most five agents lies in exactly one winner-set
/// polyhedron of each scoring rule.
#[test]
fn scoring_constituents_partition_integer_points() {
    fn histograms(q: usize, n: u64) -> Vec<Vec<u64>> {
        if q == 1 {
            return vec![vec![n]];
        }
        (0..=n)
            .flat_map(|c| {
                histograms(q - 1, n - c).into_iter().map(move |mut rest| {
                    rest.insert(0, c);
                    rest
                })
            })
            .collect()
    }
    for s in [ScoringVector::borda(3), ScoringVector::plurality(3), ScoringVector::veto(3)] {
        let polys: Vec<_> = (1u64..8)
            .map(|mask| {
                let t: Vec<usize> = (0..3).filter(|&a| mask >> a & 1 == 1).collect();
                (t.clone(), scoring_tie_polyhedron(&s, &t).unwrap())
            })
            .collect();
        for n in 1..=5 {
            for counts in histograms(6, n) {
                let x: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
                let score = |a: usize| -> i64 {
                    rankings(3).iter().zip(&counts).map(|(r, &c)| s.score(pos(r, a)) * c as i64).sum()
                };
                let best = (0..3).map(score).max().unwrap();
                let winners: Vec<usize> = (0..3).filter(|&a| score(a) == best).collect();
                let hits: Vec<&Vec<usize>> = polys.iter().filter(|(_, h)| h.contains(&x)).map(|(t, _)| t).collect();
                assert_eq!(hits, vec![&winners], "{s:?} {counts:?}");
            }
        }
    }
}

#[test]
fn mcgarvey_profiles_land_in_their_order_polyhedron() {
    for o in enumerate_palindromic_orders(3, true).unwrap().iter().step_by(7) {
        let h = mcgarvey_profile(o, 81).unwrap().histogram().unwrap();
        let x: Vec<i64> = h.counts().iter().map(|&c| c as i64).collect();
        assert!(palindromic_polyhedron(o).unwrap().contains(&x), "{o}");
    }
}

proptest! {
    #[test]
    fn restricted_pair_rows_match_round_scores(
        counts in proptest::collection::vec(0u64..6, 6),
        removed in 0u64..7,
        rule_idx in 0usize..3,
    ) {
        let rule = [MRSERule::stv(3), MRSERule::coombs(3), MRSERule::baldwin(3)][rule_idx].clone();
        let h = Histogram::new(3, counts).unwrap();
        let scores = voting_rules::round_scores(&h.tally(), removed, &rule).unwrap();
        let left: Vec<usize> = (0..3).filter(|&a| removed >> a & 1 == 0).collect();
        for &a in &left {
            for &b in &left {
                if a != b {
                    let row = restricted_pair_vector(removed, a, b, &rule).unwrap();
                    prop_assert_eq!(dot(&row, h.counts()), scores[a] - scores[b]);
                }
            }
        }
    }

    #[test]
    fn order_membership_round_trips(counts in proptest::collection::vec(0u64..8, 6)) {
        let h = Histogram::new(3, counts).unwrap();
        let x: Vec<i64> = h.counts().iter().map(|&c| c as i64).collect();
        let o = edge_order(&weighted_majority_graph(&h.tally()));
        let poly = palindromic_polyhedron(&o).unwrap();
        prop_assert!(poly.contains(&x));
        for other in enumerate_palindromic_orders(3, false).unwrap().iter().step_by(11) {
            if other != &o {
                prop_assert!(!palindromic_polyhedron(other).unwrap().contains(&x));
            }
            // Cone membership is refinement of the histogram's own order.
            let cone = palindromic_polyhedron(other).unwrap().characteristic_cone();
            prop_assert_eq!(cone.contains(&x), other.refines(&o));
        }
    }

    #[test]
    fn signature_membership_matches_signs(
        counts in proptest::collection::vec(0u64..6, 6),
        a in 0usize..3,
        b in 0usize..3,
    ) {
        prop_assume!(a != b);
        let hs = vec![
            tie_polyhedra::score_diff_vector(&ScoringVector::borda(3), a, b).unwrap(),
            pair_diff_vector(3, a, b).unwrap(),
        ];
        let signs: Vec<Ordering> = hs.iter().map(|h| dot(h, &counts).cmp(&0)).collect();
        let x: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
        prop_assert!(gisr_signature_polyhedron(&hs, &signs).unwrap().contains(&x));
        let flipped: Vec<Ordering> = signs.iter().map(|s| s.reverse()).collect();
        if signs.iter().any(|s| *s != Ordering::Equal) {
            prop_assert!(!gisr_signature_polyhedron(&hs, &flipped).unwrap().contains(&x));
        }
    }
}

#[test]
fn canonical_ranking_order_matches_histogram_order() {
    // Guard that the canonical ranking order used by the oracles above is
    // the histogram order.
    let r = Ranking::from_labels(&[2, 1, 3]).unwrap();
    assert_eq!(rankings(3)[r.index()], vec![1, 0, 2]);
}
