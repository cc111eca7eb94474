//! Exhaustive cross-checks over all coprime pairs `1 <= s < r <= N`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use rayon::prelude::*;
use serde::Serialize;

use crate::kasteleyn::{det_permutation, kasteleyn_matrix, matching_term_signs, normalize_sign};
use crate::matching::{
    case_recurrences_check, denominator_via_matchings, matching_stat, matching_stat_dp, DenominatorRelation,
};
use crate::qrational::{q_cf_eval, q_continuant, q_map_general, q_matrix_eval, ContinuedFraction};
use crate::snake::snake_graph;

/// Largest snake on which the matching enumeration oracle is run.
pub const ORACLE_MAX_BOXES: usize = 14;
/// Largest Kasteleyn matrix checked against permutation expansion.
pub const PERMUTATION_MAX_SIZE: usize = 8;
/// Largest snake whose determinant terms are checked for a common sign.
pub const TERM_SIGN_MAX_BOXES: usize = 10;

pub fn coprime_pairs(max_r: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for r in 2..=max_r {
        for s in 1..r {
            if r.gcd(&s) == 1 {
                out.push((r, s));
            }
        }
    }
    out
}

/// Results for one pair. `None` means the check does not apply (too large
/// for an oracle, or a snake with fewer than two boxes).
#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub r: u64,
    pub s: u64,
    pub cf: ContinuedFraction,
    pub boxes: usize,
    /// Matrix, continued fraction, continuant and modular-map routes agree.
    pub routes: bool,
    /// `q^n M_q(G) = R(q)`.
    pub theorem: bool,
    /// `M_1(G) = r`.
    pub numerator_count: bool,
    /// `M_1` of the denominator snake is `s`.
    pub denominator_count: bool,
    pub dp_oracle: Option<bool>,
    /// `|det K(G)| = M_q(G)`.
    pub kasteleyn: bool,
    pub bareiss_oracle: Option<bool>,
    /// Every box has an odd number of black-to-white arrows.
    pub faces: bool,
    pub term_signs: Option<bool>,
    pub case_recurrence: Option<bool>,
    pub denominator_relation: DenominatorRelation,
}

impl PairCheck {
    pub fn passed(&self) -> bool {
        let optional = [self.dp_oracle, self.bareiss_oracle, self.term_signs, self.case_recurrence];
        self.routes
            && self.theorem
            && self.numerator_count
            && self.denominator_count
            && self.kasteleyn
            && self.faces
            && optional.iter().all(|c| c.unwrap_or(true))
    }

    /// Names of the failed checks.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut note = |ok: bool, name| {
            if !ok {
                out.push(name);
            }
        };
        note(self.routes, "routes");
        note(self.theorem, "theorem");
        note(self.numerator_count, "numerator_count");
        note(self.denominator_count, "denominator_count");
        note(self.dp_oracle.unwrap_or(true), "dp_oracle");
        note(self.kasteleyn, "kasteleyn");
        note(self.bareiss_oracle.unwrap_or(true), "bareiss_oracle");
        note(self.faces, "faces");
        note(self.term_signs.unwrap_or(true), "term_signs");
        note(self.case_recurrence.unwrap_or(true), "case_recurrence");
        out
    }
}

/// Runs every check on `r/s`; panics if the pair is not coprime with
/// `r >= s >= 1`.
pub fn check_pair(r: u64, s: u64) -> PairCheck {
    let cf = ContinuedFraction::expand(r, s).expect("valid pair");
    let matrix_route = q_matrix_eval(&cf);
    let modular = q_map_general(Rational64::new(r as i64, s as i64));
    let routes = q_cf_eval(&cf) == matrix_route
        && q_continuant(&cf) == *matrix_route.num()
        && modular == matrix_route.to_fraction();

    let g = snake_graph(&cf);
    let stat = matching_stat_dp(&g);
    let theorem = stat.shift(cf.scalar_exponent()) == *matrix_route.num();
    let numerator_count = stat.eval_at_one() == r.into();
    let dp_oracle = (g.box_count() <= ORACLE_MAX_BOXES).then(|| matching_stat(&g) == stat);

    let km = kasteleyn_matrix(&g);
    let det = km.det();
    let kasteleyn = normalize_sign(&det).1 == stat;
    let bareiss_oracle = (km.size <= PERMUTATION_MAX_SIZE).then(|| det_permutation(&km.entries) == det);
    let faces = (0..g.box_count()).all(|i| g.black_to_white_arrows(i) % 2 == 1);
    let term_signs = (g.box_count() <= TERM_SIGN_MAX_BOXES).then(|| {
        let signs = matching_term_signs(&g, &km);
        signs.windows(2).all(|w| w[0] == w[1])
    });

    let case_recurrence = case_recurrences_check(&cf).map(|rep| rep.holds);
    let den = denominator_via_matchings(r, s).expect("valid pair");

    PairCheck {
        r,
        s,
        boxes: g.box_count(),
        cf,
        routes,
        theorem,
        numerator_count,
        denominator_count: den.count_matches,
        dp_oracle,
        kasteleyn,
        bareiss_oracle,
        faces,
        term_signs,
        case_recurrence,
        denominator_relation: den.relation,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub max_r: u64,
    pub pairs: usize,
    pub passed: usize,
    pub failed: usize,
    /// How the denominator-snake candidate relates to `S(q)`, counted by
    /// relation kind.
    pub denominator_relations: BTreeMap<String, usize>,
    pub first_failure: Option<PairCheck>,
}

impl SweepSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

fn relation_name(r: DenominatorRelation) -> String {
    match r {
        DenominatorRelation::Equal => "equal".into(),
        DenominatorRelation::Shift(_) => "shift".into(),
        DenominatorRelation::Mirror(_) => "mirror".into(),
        DenominatorRelation::Unrelated => "unrelated".into(),
    }
}

/// Checks every pair with `r <= max_r` on `jobs` threads. Results are
/// assembled in `(r, s)` order, so the summary does not depend on `jobs`.
pub fn sweep(max_r: u64, jobs: usize) -> SweepSummary {
    let pairs = coprime_pairs(max_r);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let checks: Vec<PairCheck> = pool.install(|| pairs.par_iter().map(|&(r, s)| check_pair(r, s)).collect());
    summarize(max_r, checks)
}

pub fn summarize(max_r: u64, checks: Vec<PairCheck>) -> SweepSummary {
    let mut denominator_relations = BTreeMap::new();
    for c in &checks {
        *denominator_relations.entry(relation_name(c.denominator_relation)).or_insert(0) += 1;
    }
    let passed = checks.iter().filter(|c| c.passed()).count();
    SweepSummary {
        max_r,
        pairs: checks.len(),
        passed,
        failed: checks.len() - passed,
        denominator_relations,
        first_failure: checks.into_iter().find(|c| !c.passed()),
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pairs 1 <= s < r <= {}: {}", self.max_r, self.pairs)?;
        writeln!(f, "passed: {}", self.passed)?;
        writeln!(f, "failed: {}", self.failed)?;
        let rel: Vec<String> = self.denominator_relations.iter().map(|(k, v)| format!("{k} {v}")).collect();
        writeln!(f, "denominator candidate vs S(q): {}", rel.join(", "))?;
        match &self.first_failure {
            None => writeln!(f, "verdict: PASS"),
            Some(c) => {
                writeln!(f, "first counterexample: {}/{} = {} ({})", c.r, c.s, c.cf, c.failures().join(", "))?;
                writeln!(f, "verdict: FAIL")
            }
        }
    }
}
