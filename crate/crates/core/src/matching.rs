//! Weighted perfect matchings of snake graphs.
//!
//! [`enumerate_matchings`] is a brute-force backtracking oracle;
//! [`matching_stat_dp`] is a linear transfer along the box path. The main
//! identity is `R(q) = q^n M_q(G_{r/s})` with `n` from
//! [`ContinuedFraction::scalar_exponent`].

use serde::Serialize;

use crate::error::{CfError, SnakeError};
use crate::laurent::LaurentPoly;
use crate::qrational::{q_rational, ContinuedFraction};
use crate::snake::{snake_graph, Edge, Point, SnakeGraph, Step};

/// A perfect matching, as a sorted edge list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

impl Matching {
    /// Exponent `k` of the weight `q^k`.
    pub fn weight_exp(&self, g: &SnakeGraph) -> i64 {
        self.edges.iter().map(|&e| g.weight_exp(e) as i64).sum()
    }

    pub fn weight(&self, g: &SnakeGraph) -> LaurentPoly {
        LaurentPoly::q_pow(self.weight_exp(g))
    }

    /// Every vertex of `g` covered exactly once, using only edges of `g`.
    pub fn is_perfect_in(&self, g: &SnakeGraph) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.edges
            .iter()
            .all(|e| g.contains_edge(*e) && seen.insert(e.a) && seen.insert(e.b))
            && seen.len() == g.vertices().len()
    }
}

/// All perfect matchings, by always matching the lowest uncovered vertex
/// (lexicographic order) to each of its uncovered neighbours in turn.
pub fn enumerate_matchings(g: &SnakeGraph) -> Vec<Matching> {
    let verts = g.vertices();
    if verts.len() % 2 == 1 {
        return Vec::new();
    }
    let index = |p: Point| verts.binary_search(&p).expect("vertex of g");
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|&p| g.neighbours(p).into_iter().map(index).collect())
        .collect();
    let mut covered = vec![false; verts.len()];
    let mut current = Vec::new();
    let mut out = Vec::new();
    backtrack(verts, &adj, &mut covered, &mut current, &mut out);
    out
}

fn backtrack(
    verts: &[Point],
    adj: &[Vec<usize>],
    covered: &mut [bool],
    current: &mut Vec<Edge>,
    out: &mut Vec<Matching>,
) {
    let Some(v) = covered.iter().position(|c| !c) else {
        let mut edges = current.clone();
        edges.sort();
        out.push(Matching { edges });
        return;
    };
    covered[v] = true;
    for &w in &adj[v] {
        if covered[w] {
            continue;
        }
        covered[w] = true;
        current.push(Edge::new(verts[v], verts[w]));
        backtrack(verts, adj, covered, current, out);
        current.pop();
        covered[w] = false;
    }
    covered[v] = false;
}

/// `M_q(G)`: sum of matching weights, by exhaustive enumeration.
pub fn matching_stat(g: &SnakeGraph) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for m in enumerate_matchings(g) {
        total += &m.weight(g);
    }
    total
}

/// `M_q(G)` in `O(d)` ring operations.
///
/// Walking the boxes in order, keep `full` = statistic of the prefix graph
/// and `open` = statistic of the prefix graph with both endpoints of the
/// edge shared with the next box removed. A new box with entering edge
/// `{u, v}`, new vertices `x, y`, far edge `{x, y}` and sides `{u, x}`,
/// `{v, y}` gives `full' = w(xy) full + w(ux) w(vy) open`.
pub fn matching_stat_dp(g: &SnakeGraph) -> LaurentPoly {
    let path = g.path();
    if path.is_empty() {
        return g.weight(g.edges()[0]);
    }
    let w = |e: Edge| g.weight(e);
    // box 0 is entered through a virtual copy of its west edge
    let mut full = w(g.box_edges(0).west);
    let mut open = LaurentPoly::one();
    for i in 0..path.len() {
        let sides = g.box_edges(i);
        let entered_from_left = i == 0 || path.step(i) == Step::Right;
        let (far, side_u, side_v) = if entered_from_left {
            (sides.east, sides.south, sides.north)
        } else {
            (sides.north, sides.west, sides.east)
        };
        let next_full = &(&w(far) * &full) + &(&(&w(side_u) * &w(side_v)) * &open);
        if i + 1 < path.len() {
            let exit_is_far = match path.step(i + 1) {
                Step::Right => entered_from_left,
                Step::Up => !entered_from_left,
            };
            // a turn leaves through side_v, forcing y onto side_v's partner
            open = if exit_is_far { full } else { &w(side_u) * &open };
        }
        full = next_full;
    }
    full
}

/// `q^n M_q(G_{r/s})`, which equals the numerator `R(q)` of `[r/s]_q`.
pub fn numerator_via_matchings(r: u64, s: u64) -> Result<LaurentPoly, CfError> {
    let cf = ContinuedFraction::expand(r, s)?;
    let g = snake_graph(&cf);
    Ok(matching_stat_dp(&g).shift(cf.scalar_exponent()))
}

/// How the candidate from the denominator snake relates to `S(q)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "exponent")]
pub enum DenominatorRelation {
    Equal,
    /// `candidate = q^k S(q)`, `k != 0`.
    Shift(i64),
    /// `candidate = q^k S(q^{-1})` and the candidate is not a shift of `S`.
    Mirror(i64),
    Unrelated,
}

#[derive(Clone, Debug, Serialize)]
pub struct DenominatorReport {
    /// `q^{n'} M_q(G_[a2..ak])`, the numerator of the tail q-rational.
    pub candidate: LaurentPoly,
    pub denominator: LaurentPoly,
    /// `M_1` of the denominator snake equals `s`.
    pub count_matches: bool,
    pub relation: DenominatorRelation,
}

fn relate(candidate: &LaurentPoly, den: &LaurentPoly) -> DenominatorRelation {
    if candidate == den {
        return DenominatorRelation::Equal;
    }
    let (ck, cp) = candidate.split_monomial();
    let (dk, dp) = den.split_monomial();
    if cp == dp {
        return DenominatorRelation::Shift(ck - dk);
    }
    let mirrored = den.mirror(0);
    let (mk, mp) = mirrored.split_monomial();
    if cp == mp {
        return DenominatorRelation::Mirror(ck - mk);
    }
    DenominatorRelation::Unrelated
}

/// Matching-based candidate for the denominator `S(q)` of `[r/s]_q`, from
/// the snake of `[a2, ..., ak]`, together with its relation to the true
/// `S(q)`. Integers have denominator 1 and an empty denominator snake.
pub fn denominator_via_matchings(r: u64, s: u64) -> Result<DenominatorReport, SnakeError> {
    let cf = ContinuedFraction::expand(r, s)?;
    let den = q_rational(r, s)?.den().clone();
    let Some(tail) = cf.tail() else {
        let one = LaurentPoly::one();
        return Ok(DenominatorReport {
            count_matches: s == 1,
            relation: relate(&one, &den),
            candidate: one,
            denominator: den,
        });
    };
    let g = snake_graph(&tail);
    let stat = matching_stat_dp(&g);
    let candidate = stat.shift(tail.scalar_exponent());
    Ok(DenominatorReport {
        count_matches: stat.eval_at_one() == s.into(),
        relation: relate(&candidate, &den),
        candidate,
        denominator: den,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecurrenceCase {
    /// Even length `k = 2m`: `M(G) = M(G') + q^{1 - a_2m} M(G_[a1..a_{2m-1}])`.
    One,
    /// Odd length `k = 2m+1`: `M(G) = M(G') + q^{a_{2m+1} - 1} M(G_[a1..a_2m])`.
    Two,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub case: RecurrenceCase,
    /// `G'`: the last coefficient decreased by one (one box fewer).
    pub shorter: Vec<i64>,
    /// The prefix `[a1, ..., a_{k-1}]`; empty for `k = 1` (statistic 1).
    pub prefix: Vec<i64>,
    pub exponent: i64,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub holds: bool,
}

/// Statistic of the snake of a positive coefficient list; the empty list
/// stands for the empty graph with statistic 1.
fn stat_of(coeffs: &[i64]) -> LaurentPoly {
    if coeffs.is_empty() {
        return LaurentPoly::one();
    }
    let cf = ContinuedFraction::new(coeffs.to_vec()).expect("positive coefficients");
    matching_stat_dp(&snake_graph(&cf))
}

/// Checks the box-attachment recurrence for the canonical form of `cf`,
/// computing the three statistics on independently built snakes. `None`
/// when the snake has fewer than two boxes.
pub fn case_recurrences_check(cf: &ContinuedFraction) -> Option<CaseReport> {
    let cf = cf.canonical();
    if cf.sum() < 3 {
        return None;
    }
    let a = cf.coeffs();
    let k = a.len();
    let last = a[k - 1];
    let mut shorter = a.to_vec();
    shorter[k - 1] -= 1;
    let prefix = a[..k - 1].to_vec();
    let (case, exponent) = if k % 2 == 0 {
        (RecurrenceCase::One, 1 - last)
    } else {
        (RecurrenceCase::Two, last - 1)
    };
    let lhs = stat_of(a);
    let rhs = &stat_of(&shorter) + &stat_of(&prefix).shift(exponent);
    Some(CaseReport {
        case,
        holds: lhs == rhs,
        shorter,
        prefix,
        exponent,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::lp;

    fn graph(v: &[i64]) -> SnakeGraph {
        snake_graph(&ContinuedFraction::new(v.to_vec()).unwrap())
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_matchings(&graph(&[2])).len(), 2);
        assert_eq!(enumerate_matchings(&graph(&[2, 2])).len(), 5);
        assert_eq!(enumerate_matchings(&graph(&[4, 3])).len(), 13);
        assert_eq!(enumerate_matchings(&graph(&[1])).len(), 1);
    }

    #[test]
    fn matchings_are_perfect_and_distinct() {
        let g = graph(&[2, 1, 3]);
        let all = enumerate_matchings(&g);
        for m in &all {
            assert!(m.is_perfect_in(&g));
        }
        for (i, m) in all.iter().enumerate() {
            assert!(all[i + 1..].iter().all(|o| o != m));
        }
    }

    #[test]
    fn statistic_examples() {
        assert_eq!(matching_stat(&graph(&[2, 2])), lp("q^-1 + 2 + q + q^2"));
        assert_eq!(matching_stat(&graph(&[1, 1, 2, 1])), lp("q^-1 + 1 + 2q + 2q^2 + q^3"));
        assert_eq!(
            matching_stat(&graph(&[2, 2, 2, 2])),
            lp("q^-3 + 3q^-2 + 5q^-1 + 6 + 6q + 5q^2 + 2q^3 + q^4")
        );
    }

    #[test]
    fn dp_matches_oracle_on_small_snakes() {
        for v in [&[2][..], &[2, 2], &[1, 1, 2, 1], &[2, 2, 2, 2], &[4, 3], &[1, 3, 1, 2], &[5]] {
            let g = graph(v);
            assert_eq!(matching_stat_dp(&g), matching_stat(&g), "cf {v:?}");
        }
    }

    #[test]
    fn dp_on_fibonacci_snake() {
        // [1, ..., 1, 2] with 19 ones: F_22 / F_21, 20 boxes
        let mut v = vec![1; 19];
        v.push(2);
        let g = graph(&v);
        assert_eq!(g.box_count(), 20);
        let dp = matching_stat_dp(&g);
        assert_eq!(dp.eval_at_one(), 17711.into());
        assert_eq!(dp, matching_stat(&g));
    }

    #[test]
    fn numerator_examples() {
        assert_eq!(numerator_via_matchings(5, 2).unwrap(), lp("1 + 2q + q^2 + q^3"));
        assert_eq!(
            numerator_via_matchings(29, 12).unwrap(),
            lp("1 + 3q + 5q^2 + 6q^3 + 6q^4 + 5q^5 + 2q^6 + q^7")
        );
        assert_eq!(numerator_via_matchings(2, 1).unwrap(), lp("1 + q"));
        assert_eq!(matching_stat(&graph(&[2])), lp("1 + q"));
    }

    #[test]
    fn denominator_examples() {
        let rep = denominator_via_matchings(5, 2).unwrap();
        assert_eq!(rep.candidate, lp("1 + q"));
        assert_eq!(rep.relation, DenominatorRelation::Equal);
        let rep = denominator_via_matchings(13, 3).unwrap();
        assert!(rep.count_matches);
        assert_eq!(rep.candidate, lp("1 + q + q^2"));
        assert_eq!(rep.denominator, lp("1 + q + q^2"));
        let rep = denominator_via_matchings(7, 1).unwrap();
        assert!(rep.candidate.is_one() && rep.relation == DenominatorRelation::Equal);
        // 13/5 = [2,1,1,2]: tail 5/3 has a non-palindromic numerator
        let rep = denominator_via_matchings(13, 5).unwrap();
        assert_eq!(rep.candidate, lp("1 + q + 2q^2 + q^3"));
        assert_eq!(rep.denominator, lp("1 + 2q + q^2 + q^3"));
        assert_eq!(rep.relation, DenominatorRelation::Mirror(3));
    }

    #[test]
    fn case_examples() {
        let cf = |v: &[i64]| ContinuedFraction::new(v.to_vec()).unwrap();
        let rep = case_recurrences_check(&cf(&[2, 2])).unwrap();
        assert_eq!(rep.case, RecurrenceCase::One);
        assert_eq!(rep.shorter, vec![2, 1]);
        assert_eq!(rep.prefix, vec![2]);
        assert!(rep.holds);
        let rep = case_recurrences_check(&cf(&[4, 3])).unwrap();
        assert_eq!(rep.case, RecurrenceCase::One);
        assert!(rep.holds);
        let rep = case_recurrences_check(&cf(&[1, 1, 3])).unwrap();
        assert_eq!(rep.case, RecurrenceCase::Two);
        assert!(rep.holds);
        let rep = case_recurrences_check(&cf(&[3])).unwrap();
        assert_eq!((rep.case, rep.prefix.len()), (RecurrenceCase::Two, 0));
        assert!(rep.holds);
        assert!(case_recurrences_check(&cf(&[2])).is_none());
    }
}
