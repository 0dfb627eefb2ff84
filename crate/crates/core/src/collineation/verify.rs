//! Sample-based verification of the printed tables and classification cases.
//!
//! Every sample is checked twice: against the printed fixture, and against
//! laws that hold independently of any printed table. A fixture mismatch is
//! tolerated only when the discrepancy log accounts for it and the laws pass.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::catalog::{catalog, eval_basis, PairFixture, TheoremCase};
use super::discrepancy::{discrepancy_log, DiscrepancyLog};
use super::system::{build_system, lie_derivative_ric, CollineationSystem, ROW_INDEX};
use crate::connection::{levi_civita, Distribution};
use crate::curvature::{ricci_pipeline, RicciForm, RicciPipeline};
use crate::error::Error;
use crate::exact::vector::{self, Vector3};
use crate::exact::{rank, Matrix, Rational, SubspaceBasis};
use crate::liealg::{build_group, fnv1a, Group, Params, Sampler, StructureConstants, MAX_DRAWS};

/// Random fields tested per sample by the oracle and linearity laws.
const LAW_FIELDS: usize = 10;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    /// The printed claim fails as the discrepancy log expects.
    Discrepancy,
    Fail,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FixtureStatus {
    Match,
    /// Every difference is accounted for by the discrepancy log.
    Logged,
    Mismatch,
}

impl FixtureStatus {
    pub fn is_ok(self) -> bool {
        self != FixtureStatus::Mismatch
    }

    fn worst(self, other: FixtureStatus) -> FixtureStatus {
        use FixtureStatus::*;
        match (self, other) {
            (Mismatch, _) | (_, Mismatch) => Mismatch,
            (Logged, _) | (_, Logged) => Logged,
            _ => Match,
        }
    }
}

/// One differing entry at one sample, with both values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// `ricci` or `lie`.
    pub table: &'static str,
    /// 1-based, e.g. `(1,3)`.
    pub entry: String,
    /// `l1`, `l2` or `l3` for Lie entries.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<String>,
    /// `printed`, or `correction` when a logged recomputed form is wrong.
    pub form: &'static str,
    pub expected: Rational,
    pub computed: Rational,
    pub logged: bool,
}

/// Laws that hold for every valid sample regardless of the printed tables.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct LawReport {
    pub torsion_free: bool,
    pub metric_compatible: bool,
    pub bott_respects: bool,
    pub curvature_antisymmetric: bool,
    pub ric_symmetric: bool,
    pub lie_symmetric: bool,
    pub lie_linear: bool,
    pub oracle_equivalence: bool,
    pub nullspace_exact: bool,
    pub rank_nullity: bool,
}

impl LawReport {
    pub fn all(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<&'static str> {
        [
            ("torsion_free", self.torsion_free),
            ("metric_compatible", self.metric_compatible),
            ("bott_respects", self.bott_respects),
            ("curvature_antisymmetric", self.curvature_antisymmetric),
            ("ric_symmetric", self.ric_symmetric),
            ("lie_symmetric", self.lie_symmetric),
            ("lie_linear", self.lie_linear),
            ("oracle_equivalence", self.oracle_equivalence),
            ("nullspace_exact", self.nullspace_exact),
            ("rank_nullity", self.rank_nullity),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect()
    }
}

struct Evaluation {
    pipeline: RicciPipeline,
    system: CollineationSystem,
    space: SubspaceBasis,
}

fn evaluate(sc: &StructureConstants, dist: Distribution) -> Evaluation {
    let pipeline = ricci_pipeline(sc, dist);
    let system = build_system(&pipeline.ric, sc);
    let space = system.nullspace();
    Evaluation {
        pipeline,
        system,
        space,
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

fn random_vector(rng: &mut ChaCha8Rng) -> Vector3 {
    std::array::from_fn(|_| random_rational(rng))
}

fn form_combination(a: &Rational, f: &RicciForm, b: &Rational, g: &RicciForm) -> RicciForm {
    let m = std::array::from_fn(|i| std::array::from_fn(|j| a * &f.m[i][j] + b * &g.m[i][j]));
    RicciForm { symmetric: true, m }
}

fn laws_of(sc: &StructureConstants, dist: Distribution, ev: &Evaluation, seed: u64) -> LawReport {
    let lc = levi_civita(sc);
    let ric = &ev.pipeline.ric;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lie_symmetric = true;
    let mut lie_linear = true;
    let mut oracle_equivalence = true;
    for _ in 0..LAW_FIELDS {
        let (u, v) = (random_vector(&mut rng), random_vector(&mut rng));
        let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
        let lu = lie_derivative_ric(ric, sc, &u);
        let lv = lie_derivative_ric(ric, sc, &v);
        lie_symmetric &= lu.is_symmetric_matrix();
        oracle_equivalence &= ev.system.apply(&u) == lu.upper_triangle().to_vec();
        let w = vector::add(&vector::scale(&a, &u), &vector::scale(&b, &v));
        lie_linear &= lie_derivative_ric(ric, sc, &w) == form_combination(&a, &lu, &b, &lv);
    }
    LawReport {
        torsion_free: lc.is_torsion_free(sc),
        metric_compatible: lc.is_metric_compatible(),
        bott_respects: ev.pipeline.connection.respects(dist),
        curvature_antisymmetric: ev.pipeline.curvature.is_antisymmetric(),
        ric_symmetric: ric.is_symmetric_matrix(),
        lie_symmetric,
        lie_linear,
        oracle_equivalence,
        nullspace_exact: ev
            .space
            .vectors()
            .iter()
            .all(|v| ev.system.apply(v).iter().all(Rational::is_zero)),
        rank_nullity: rank(&ev.system.a) + ev.space.dim() == 3,
    }
}

/// Runs the law suite for one algebra and distribution; `seed` drives the
/// random fields.
pub fn check_laws(sc: &StructureConstants, dist: Distribution, seed: u64) -> LawReport {
    laws_of(sc, dist, &evaluate(sc, dist), seed)
}

fn entry_label(row: usize) -> String {
    let (i, j) = ROW_INDEX[row];
    format!("({i},{j})")
}

/// Compares one sample against the printed tables of its pair.
fn compare(
    pair: &PairFixture,
    log: &DiscrepancyLog,
    params: &Params,
    ev: &Evaluation,
) -> crate::Result<(FixtureStatus, FixtureStatus, Vec<Mismatch>)> {
    let mut mismatches = Vec::new();
    let mut ricci = FixtureStatus::Match;
    let computed_ric = ev.pipeline.ric.upper_triangle();
    for row in 0..6 {
        let computed = &computed_ric[row];
        let printed = pair.ricci[row].eval(params)?;
        let logged = log.ricci_entry(pair.group, pair.dist, row);
        let mut push = |form, expected: Rational, logged: bool| {
            mismatches.push(Mismatch {
                table: "ricci",
                entry: entry_label(row),
                coefficient: None,
                form,
                expected,
                computed: computed.clone(),
                logged,
            })
        };
        match logged {
            None if printed != *computed => {
                ricci = FixtureStatus::Mismatch;
                push("printed", printed, false);
            }
            None => {}
            Some(e) => {
                let corrected = e.recomputed.eval(params)?;
                if corrected != *computed {
                    ricci = FixtureStatus::Mismatch;
                    push("correction", corrected, false);
                } else if printed != *computed {
                    ricci = ricci.worst(FixtureStatus::Logged);
                    push("printed", printed, true);
                }
            }
        }
    }
    let mut lie = FixtureStatus::Match;
    for row in 0..6 {
        let logged = log.lie_entry(pair.group, pair.dist, row);
        for k in 0..3 {
            let computed = ev.system.a.get(row, k);
            let printed = pair.lie[row].coeffs[k].eval(params)?;
            let mut push = |form, expected: Rational, logged: bool| {
                mismatches.push(Mismatch {
                    table: "lie",
                    entry: entry_label(row),
                    coefficient: Some(format!("l{}", k + 1)),
                    form,
                    expected,
                    computed: computed.clone(),
                    logged,
                })
            };
            match logged {
                None if printed != *computed => {
                    lie = FixtureStatus::Mismatch;
                    push("printed", printed, false);
                }
                None => {}
                Some(e) => {
                    let corrected = e.recomputed.coeffs[k].eval(params)?;
                    if corrected != *computed {
                        lie = FixtureStatus::Mismatch;
                        push("correction", corrected, false);
                    } else if printed != *computed {
                        lie = lie.worst(FixtureStatus::Logged);
                        push("printed", printed, true);
                    }
                }
            }
        }
    }
    Ok((ricci, lie, mismatches))
}

/// One fixture sample of a pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairSample {
    pub params: Params,
    pub ricci_match: FixtureStatus,
    pub lie_match: FixtureStatus,
    pub laws: LawReport,
    pub mismatches: Vec<Mismatch>,
}

impl PairSample {
    pub fn passed(&self) -> bool {
        self.laws.all() && self.ricci_match.is_ok() && self.lie_match.is_ok()
    }
}

/// Fixture comparison for one pair on generic samples of its group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub pair: String,
    pub samples: Vec<PairSample>,
    /// Logged printed forms that agreed with the recomputation everywhere.
    pub stale: Vec<String>,
    /// Set when sampling or evaluation failed outright.
    pub error: Option<String>,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.stale.is_empty() && self.samples.iter().all(PairSample::passed)
    }
}

/// Compares `samples` generic samples of the pair against its printed tables
/// and runs the law suite on each.
pub fn check_pair(pair: &PairFixture, seed: u64, samples: usize) -> PairReport {
    let log = discrepancy_log();
    let region = pair.region();
    let mut sampler = Sampler::new(&region, seed);
    let mut report = PairReport {
        pair: pair.id(),
        samples: Vec::new(),
        stale: Vec::new(),
        error: None,
    };
    // differs[(table, row, variant)] records whether a logged printed
    // variant disagreed with the recomputation on some sample.
    let ricci_logged: Vec<_> = log
        .ricci
        .iter()
        .filter(|e| e.group == pair.group && e.dist == pair.dist)
        .collect();
    let lie_logged: Vec<_> = log
        .lie
        .iter()
        .filter(|e| e.group == pair.group && e.dist == pair.dist)
        .collect();
    let mut ricci_differs: Vec<Vec<bool>> = ricci_logged.iter().map(|e| vec![false; e.printed.len()]).collect();
    let mut lie_differs: Vec<Vec<bool>> = lie_logged.iter().map(|e| vec![false; e.printed.len()]).collect();

    let outcome = (0..samples).try_for_each(|s| -> crate::Result<()> {
        let spec = sampler.next_spec()?;
        let sc = build_group(&spec)?;
        let ev = evaluate(&sc, pair.dist);
        let laws = laws_of(&sc, pair.dist, &ev, law_seed(seed, &region.name, s));
        let (ricci_match, lie_match, mismatches) = compare(pair, log, &spec.params, &ev)?;
        let ric = ev.pipeline.ric.upper_triangle();
        for (e, differs) in ricci_logged.iter().zip(&mut ricci_differs) {
            for (p, d) in e.printed.iter().zip(differs.iter_mut()) {
                *d |= p.eval(&spec.params)? != ric[e.row()];
            }
        }
        for (e, differs) in lie_logged.iter().zip(&mut lie_differs) {
            for (p, d) in e.printed.iter().zip(differs.iter_mut()) {
                for k in 0..3 {
                    *d |= p.coeffs[k].eval(&spec.params)? != *ev.system.a.get(e.row(), k);
                }
            }
        }
        report.samples.push(PairSample {
            params: spec.params,
            ricci_match,
            lie_match,
            laws,
            mismatches,
        });
        Ok(())
    });
    if let Err(e) = outcome {
        report.error = Some(e.to_string());
    }
    for (table, entries, differs) in [
        ("ricci", ricci_logged.iter().map(|e| e.row()).collect::<Vec<_>>(), &ricci_differs),
        ("lie", lie_logged.iter().map(|e| e.row()).collect::<Vec<_>>(), &lie_differs),
    ] {
        for (row, d) in entries.iter().zip(differs) {
            for (n, differs) in d.iter().enumerate() {
                if !differs {
                    report.stale.push(format!(
                        "{table} {} printed form {} agrees with the recomputation on every sample",
                        entry_label(*row),
                        n + 1
                    ));
                }
            }
        }
    }
    report
}

/// [`check_pair`] for all 21 pairs, in catalog order.
pub fn check_pairs(seed: u64, samples: usize) -> Vec<PairReport> {
    catalog()
        .pairs
        .par_iter()
        .map(|p| check_pair(p, seed, samples))
        .collect()
}

fn law_seed(seed: u64, region: &str, sample: usize) -> u64 {
    seed ^ fnv1a(&format!("{region}#{sample}"))
}

/// One sample of one case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseEntry {
    pub case_id: String,
    pub group: Group,
    pub dist: Distribution,
    pub sample: usize,
    pub sample_params: Option<Params>,
    pub computed_dim: Option<usize>,
    pub claimed_dim: usize,
    pub computed_basis: Option<SubspaceBasis>,
    /// Every claimed vector satisfies the system exactly.
    pub membership: bool,
    /// The claimed vectors are independent and as many as the computed
    /// dimension, so with membership they span the solution space.
    pub span_equal: bool,
    pub ricci_match: Option<FixtureStatus>,
    pub lie_match: Option<FixtureStatus>,
    pub laws: bool,
    pub verdict: Verdict,
    pub mismatches: Vec<Mismatch>,
    pub notes: Vec<String>,
}

impl CaseEntry {
    fn unevaluated(case: &TheoremCase, sample: usize, note: String) -> Self {
        CaseEntry {
            case_id: case.id.clone(),
            group: case.group,
            dist: case.dist,
            sample,
            sample_params: None,
            computed_dim: None,
            claimed_dim: case.claimed_dim,
            computed_basis: None,
            membership: false,
            span_equal: false,
            ricci_match: None,
            lie_match: None,
            laws: false,
            verdict: Verdict::Fail,
            mismatches: Vec::new(),
            notes: vec![note],
        }
    }
}

/// Checks `samples` samples of one case. Failures are entries, not errors:
/// an infeasible region ends the case with a single unevaluated entry.
pub fn verify_case(case: &TheoremCase, seed: u64, samples: usize) -> Vec<CaseEntry> {
    let region = match case.region() {
        Ok(r) => r,
        Err(e) => return vec![CaseEntry::unevaluated(case, 0, e.to_string())],
    };
    let pair = catalog().pair(case.group, case.dist);
    let log = discrepancy_log();
    let mut sampler = Sampler::new(&region, seed);
    let mut entries = Vec::new();
    'samples: for s in 0..samples {
        let mut notes = Vec::new();
        let mut redraws = 0;
        let (spec, claimed) = loop {
            let spec = match sampler.next_spec() {
                Ok(spec) => spec,
                Err(e) => {
                    let mut entry = CaseEntry::unevaluated(case, s, e.to_string());
                    if case.logged && matches!(e, Error::ExhaustedSampling { .. }) {
                        entry.verdict = Verdict::Discrepancy;
                    }
                    entries.push(entry);
                    break 'samples;
                }
            };
            match eval_basis(&case.claimed_basis, &spec.params) {
                Ok(claimed) => break (spec, claimed),
                Err(e @ Error::DenominatorVanished { .. }) if redraws < MAX_DRAWS => {
                    redraws += 1;
                    notes.push(format!("redrawn: {e}"));
                }
                Err(e) => {
                    entries.push(CaseEntry::unevaluated(case, s, e.to_string()));
                    break 'samples;
                }
            }
        };
        let sc = match build_group(&spec) {
            Ok(sc) => sc,
            Err(e) => {
                entries.push(CaseEntry::unevaluated(case, s, e.to_string()));
                break;
            }
        };
        let ev = evaluate(&sc, case.dist);
        let laws = laws_of(&sc, case.dist, &ev, law_seed(seed, &case.id, s)).all();
        let (ricci_match, lie_match, mismatches) = match compare(pair, log, &spec.params, &ev) {
            Ok(c) => c,
            Err(e) => {
                entries.push(CaseEntry::unevaluated(case, s, e.to_string()));
                break;
            }
        };
        let membership = claimed
            .iter()
            .all(|v| ev.system.apply(v).iter().all(Rational::is_zero));
        let independent = claimed.is_empty() || rank(&Matrix::from_rows(&claimed)) == claimed.len();
        let span_equal = membership && independent && claimed.len() == ev.space.dim();
        let claim_holds = ev.space.dim() == case.claimed_dim && membership && span_equal;
        let verdict = if !laws || !ricci_match.is_ok() || !lie_match.is_ok() {
            Verdict::Fail
        } else if claim_holds {
            Verdict::Pass
        } else if case.logged {
            Verdict::Discrepancy
        } else {
            Verdict::Fail
        };
        entries.push(CaseEntry {
            case_id: case.id.clone(),
            group: case.group,
            dist: case.dist,
            sample: s,
            sample_params: Some(spec.params),
            computed_dim: Some(ev.space.dim()),
            claimed_dim: case.claimed_dim,
            computed_basis: Some(ev.space),
            membership,
            span_equal,
            ricci_match: Some(ricci_match),
            lie_match: Some(lie_match),
            laws,
            verdict,
            mismatches,
            notes,
        });
    }
    if case.logged && !entries.iter().any(|e| e.verdict == Verdict::Discrepancy) {
        for e in &mut entries {
            e.verdict = Verdict::Fail;
            e.notes.push("logged discrepancy did not reproduce on any sample".into());
        }
    }
    entries
}

/// Case entries in id order, then sample order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub entries: Vec<CaseEntry>,
}

impl Report {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.entries.iter().filter(|e| e.verdict == verdict).count()
    }

    /// No entry failed.
    pub fn passed(&self) -> bool {
        self.count(Verdict::Fail) == 0
    }

    /// Distinct case ids, in order.
    pub fn case_ids(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = self.entries.iter().map(|e| e.case_id.as_str()).collect();
        ids.dedup();
        ids
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs the given cases concurrently and assembles the entries by case id.
pub fn verify_cases(cases: &[TheoremCase], seed: u64, samples: usize) -> Report {
    let mut entries: Vec<CaseEntry> = cases
        .par_iter()
        .flat_map_iter(|c| verify_case(c, seed, samples))
        .collect();
    entries.sort_by(|a, b| a.case_id.cmp(&b.case_id).then(a.sample.cmp(&b.sample)));
    Report { entries }
}

/// Every catalog case, including corrections and complement regions.
pub fn verify_all(seed: u64, samples: usize) -> Report {
    verify_cases(&catalog().cases, seed, samples)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn status(s: Option<FixtureStatus>) -> &'static str {
    match s {
        None => "-",
        Some(FixtureStatus::Match) => "match",
        Some(FixtureStatus::Logged) => "logged",
        Some(FixtureStatus::Mismatch) => "MISMATCH",
    }
}

/// One line per entry and a closing summary.
pub fn render_table(report: &Report) -> String {
    let width = report
        .entries
        .iter()
        .map(|e| e.case_id.len())
        .max()
        .unwrap_or(4)
        .max(4);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<width$}  {:>3}  {:>4}  {:>5}  {:<6}  {:<4}  {:<8}  {:<8}  {:<4}  verdict  params",
        "case", "#", "dim", "claim", "member", "span", "ricci", "lie", "laws"
    );
    for e in &report.entries {
        let dim = e.computed_dim.map_or("-".to_string(), |d| d.to_string());
        let verdict = match e.verdict {
            Verdict::Pass => "pass",
            Verdict::Discrepancy => "discrepancy",
            Verdict::Fail => "FAIL",
        };
        let params = e.sample_params.as_ref().map_or_else(|| e.notes.join("; "), |p| p.to_string());
        let _ = writeln!(
            out,
            "{:<width$}  {:>3}  {:>4}  {:>5}  {:<6}  {:<4}  {:<8}  {:<8}  {:<4}  {:<7}  {}",
            e.case_id,
            e.sample,
            dim,
            e.claimed_dim,
            yes_no(e.membership),
            yes_no(e.span_equal),
            status(e.ricci_match),
            status(e.lie_match),
            yes_no(e.laws),
            verdict,
            params
        );
    }
    let _ = writeln!(
        out,
        "{} entries over {} cases: {} pass, {} discrepancy, {} fail",
        report.entries.len(),
        report.case_ids().len(),
        report.count(Verdict::Pass),
        report.count(Verdict::Discrepancy),
        report.count(Verdict::Fail)
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collineation::pair_id;

    fn case(id: &str) -> TheoremCase {
        catalog().case(id).unwrap().clone()
    }

    #[test]
    fn full_space_case_passes() {
        let entries = verify_case(&case("G5.B1.main"), 7, 5);
        assert_eq!(entries.len(), 5);
        for e in &entries {
            assert_eq!(e.computed_dim, Some(3));
            assert_eq!(e.verdict, Verdict::Pass, "{e:?}");
        }
    }

    #[test]
    fn iff_case_and_complement() {
        for e in verify_case(&case("G1.B3.main"), 3, 5) {
            assert_eq!((e.computed_dim, e.verdict), (Some(3), Verdict::Pass));
        }
        for e in verify_case(&case("G1.B3.complement"), 3, 5) {
            assert_eq!((e.computed_dim, e.verdict), (Some(0), Verdict::Pass));
        }
    }

    #[test]
    fn parameter_dependent_basis() {
        for e in verify_case(&case("G2.B2.case3"), 11, 5) {
            assert!(e.membership && e.span_equal, "{e:?}");
            assert_eq!(e.verdict, Verdict::Pass);
        }
    }

    #[test]
    fn logged_case_is_a_discrepancy() {
        let entries = verify_case(&case("G5.B2.case3"), 1, 4);
        assert!(entries.iter().all(|e| e.verdict == Verdict::Discrepancy));
        let fixed = verify_case(&case("G5.B2.case3.corrected"), 1, 4);
        assert!(fixed.iter().all(|e| e.verdict == Verdict::Pass));
    }

    #[test]
    fn infeasible_printed_region() {
        let entries = verify_case(&case("G7.B2.case3"), 1, 3);
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].computed_dim, None);
        assert_eq!(entries[0].verdict, Verdict::Discrepancy);
    }

    #[test]
    fn fixture_pair_report() {
        let cat = catalog();
        let r = check_pair(cat.pair(Group::G1, Distribution::B1), 5, 4);
        assert!(r.passed(), "{r:?}");
        let r = check_pair(cat.pair(Group::G3, Distribution::B3), 5, 6);
        assert!(r.passed(), "{r:?}");
        assert!(r.samples.iter().any(|s| s.ricci_match == FixtureStatus::Logged));
    }

    #[test]
    fn empty_case_list() {
        let r = verify_cases(&[], 42, 20);
        assert!(r.entries.is_empty());
        assert_eq!(r.to_json().trim(), "[]");
    }

    #[test]
    fn table_has_summary() {
        let r = verify_cases(&[case("G6.B3.main")], 1, 2);
        let t = render_table(&r);
        assert!(t.lines().count() == 4, "{t}");
        assert!(t.contains("2 pass"));
        assert_eq!(pair_id(Group::G6, Distribution::B3), "G6.B3");
    }
}
