//! Named checks over families of instances, collected into a deterministic
//! report. Each record names the check, the instance it ran on, and either
//! passes or carries a counterexample.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use serde::Serialize;

use crate::combinat::{
    all_d, bijection_b, bijection_b_inverse, bijection_c, bijection_c_inverse, classify_d, dim_vector_a, dim_vector_d,
    ext_vanish_pair, hom_nonzero_a, j_prime, max_start_ending_at, product_join, product_split, tau, DeltaClass,
    IndecD, Interval, Model, Sign, Tag,
};
use crate::error::{Error, Result};
use crate::ladkani::{rho_x, LeafKind, LeafSetting};
use crate::quiver::{d_quiver, linear_quiver, DynkinKind, Quiver};
use crate::tilting::{closed_form_counts, delta_stats, ext_table, hasse_check, tilting_quiver, ExtTable, TiltingQuiver};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Counts,
    Hasse,
    Delta,
    Orientation,
    Oracle,
    Ladkani,
    Classes,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = ["all", "counts", "hasse", "delta", "orientation", "oracle", "ladkani", "classes"];

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "all" => Suite::All,
            "counts" => Suite::Counts,
            "hasse" => Suite::Hasse,
            "delta" => Suite::Delta,
            "orientation" => Suite::Orientation,
            "oracle" => Suite::Oracle,
            "ladkani" => Suite::Ladkani,
            "classes" => Suite::Classes,
            _ => return Err(Error::UnknownSuite(s.to_string())),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(Suite::NAMES[*self as usize])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check: String,
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub max_rank: usize,
    pub passed: usize,
    pub failed: usize,
    pub records: Vec<Record>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> Vec<&Record> {
        self.records.iter().filter(|r| r.status == Status::Fail).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Recorder(Vec<Record>);

impl Recorder {
    fn push(&mut self, check: &str, instance: impl Into<String>, outcome: Option<String>) {
        self.0.push(Record {
            check: check.to_string(),
            instance: instance.into(),
            status: if outcome.is_none() { Status::Pass } else { Status::Fail },
            counterexample: outcome,
        });
    }

    fn expect<T: PartialEq + fmt::Debug>(&mut self, check: &str, instance: impl Into<String>, got: T, want: T) {
        let outcome = (got != want).then(|| format!("got {got:?}, want {want:?}"));
        self.push(check, instance, outcome);
    }

    /// Records a check that may abort with an error; the error becomes the
    /// counterexample.
    fn run(&mut self, check: &str, instance: impl Into<String>, f: impl FnOnce() -> Result<Option<String>>) {
        let outcome = f().unwrap_or_else(|e| Some(format!("error: {e}")));
        self.push(check, instance, outcome);
    }
}

/// A Dynkin instance by type and rank, built in its reference orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Instance {
    pub kind: DynkinKind,
    pub rank: usize,
}

impl Instance {
    pub fn a(rank: usize) -> Self {
        Instance { kind: DynkinKind::A, rank }
    }

    pub fn d(rank: usize) -> Self {
        Instance { kind: DynkinKind::D, rank }
    }

    /// `A_n` is the linear path; `D_m` is the fork `Q_{m-1}`.
    pub fn quiver(&self) -> Result<Quiver> {
        match self.kind {
            DynkinKind::A if self.rank >= 1 => Ok(linear_quiver(self.rank)),
            DynkinKind::D if self.rank >= 3 => d_quiver(self.rank - 1, None),
            _ => Err(Error::RankOutOfRange { rank: self.rank, reason: "A needs rank >= 1, D needs rank >= 3" }),
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

/// The instances a suite covers up to `max_rank`: `A1..A_r` and `D4..D_r`
/// (D3 is A3 and is left to type A).
pub fn instances(max_rank: usize) -> Vec<Instance> {
    let mut out: Vec<Instance> = (1..=max_rank).map(Instance::a).collect();
    out.extend((4..=max_rank).map(Instance::d));
    out
}

struct Built {
    table: ExtTable,
    tq: TiltingQuiver,
}

fn build(q: &Quiver) -> Result<Built> {
    let table = ext_table(q)?;
    let tq = tilting_quiver(&table)?;
    Ok(Built { table, tq })
}

/// Runs `suite` on every instance up to `max_rank`. Records come out in a
/// fixed order, so the serialized report is byte-stable.
pub fn run_suite(suite: Suite, max_rank: usize) -> Result<Report> {
    if max_rank == 0 || max_rank > crate::tilting::MAX_VERTICES_D {
        return Err(Error::RankOutOfRange { rank: max_rank, reason: "max rank must lie in 1..=9" });
    }
    let mut rec = Recorder(Vec::new());
    let needs_build = [Suite::Counts, Suite::Hasse, Suite::Delta].iter().any(|&s| suite.includes(s));
    if needs_build {
        for inst in instances(max_rank) {
            let b = build(&inst.quiver()?)?;
            if suite.includes(Suite::Counts) {
                counts_checks(&mut rec, inst, &b)?;
            }
            if suite.includes(Suite::Hasse) {
                let h = hasse_check(&b.table, &b.tq);
                rec.push("hasse-diagram", inst.to_string(), h.counterexample.map(|(u, t, why)| format!("{u} -> {t}: {why}")));
            }
            if suite.includes(Suite::Delta) {
                delta_checks(&mut rec, inst, &b);
            }
        }
    }
    if suite.includes(Suite::Orientation) {
        orientation_checks(&mut rec, max_rank)?;
    }
    if suite.includes(Suite::Oracle) {
        oracle_checks(&mut rec, max_rank)?;
    }
    if suite.includes(Suite::Ladkani) {
        ladkani_checks(&mut rec, max_rank)?;
    }
    if suite.includes(Suite::Classes) {
        class_checks(&mut rec, max_rank)?;
    }
    let failed = rec.0.iter().filter(|r| r.status == Status::Fail).count();
    Ok(Report { suite, max_rank, passed: rec.0.len() - failed, failed, records: rec.0 })
}

fn counts_checks(rec: &mut Recorder, inst: Instance, b: &Built) -> Result<()> {
    let c = closed_form_counts(inst.kind, inst.rank)?;
    let got = (b.tq.node_count().into(), b.tq.arrow_count().into());
    rec.expect("closed-form-counts", inst.to_string(), got, (c.vertices, c.arrows));
    rec.expect("unique-source-and-sink", inst.to_string(), (b.tq.sources().len(), b.tq.sinks().len()), (1, 1));
    let projective = crate::tilting::TiltingModule::from_ids(b.table.projectives());
    rec.expect("projective-is-the-source", inst.to_string(), b.tq.sources(), b.tq.index_of(&projective).into_iter().collect());
    Ok(())
}

fn delta_checks(rec: &mut Recorder, inst: Instance, b: &Built) {
    let stats = delta_stats(&b.table, &b.tq);
    let outcome = stats.mismatches.first().map(|&i| {
        let (s, e, _) = stats.per_node[i];
        format!("{}: s={s} e={e} but dimension vector {}", b.table.module_label(&b.tq.nodes[i]), b.table.module_dim(&b.tq.nodes[i]).render())
    });
    rec.push("delta-formula", inst.to_string(), outcome);
    let sum: u32 = stats.per_node.iter().map(|d| d.2).sum();
    rec.expect("delta-sum-is-twice-arrows", inst.to_string(), sum as usize, 2 * b.tq.arrow_count());
    match inst.kind {
        DynkinKind::A => {
            let keys: Vec<u32> = stats.histogram.keys().copied().collect();
            rec.expect("delta-constant-on-paths", inst.to_string(), keys, vec![inst.rank as u32 - 1]);
        }
        DynkinKind::D => {
            let n = (inst.rank - 1) as u64;
            let t2 = binomial(2 * (n - 1), n - 1) / n;
            let t1 = 3 * binomial(2 * (n - 1), n - 2);
            let t0 = 3 * (n - 1) * binomial(2 * (n - 1), n - 2) / (n + 1);
            // T_i has exactly i entries equal to 1, so δ = n + 1 - i
            let want = BTreeMap::from([(n as u32 - 1, t2 as usize), (n as u32, t1 as usize), (n as u32 + 1, t0 as usize)]);
            rec.expect("delta-histogram", inst.to_string(), stats.histogram, want);
        }
    }
}

fn orientation_checks(rec: &mut Recorder, max_rank: usize) -> Result<()> {
    for inst in instances(max_rank).into_iter().filter(|i| i.rank >= 2) {
        let base = inst.quiver()?;
        let mut seen = BTreeMap::new();
        for q in base.all_orientations() {
            let b = build(&q)?;
            seen.entry((b.tq.node_count(), b.tq.arrow_count())).or_insert_with(Vec::new).push(q.to_string());
        }
        let outcome = (seen.len() != 1).then(|| format!("{} distinct (vertices, arrows) pairs: {:?}", seen.len(), seen.keys().collect::<Vec<_>>()));
        rec.push("orientation-invariance", inst.to_string(), outcome);
    }
    Ok(())
}

/// Compares the combinatorial predicates with the linear-algebra table:
/// Ext vanishing on every pair, the Hom criterion on intervals, and
/// `Ext(M, N) = D Hom(N, τ M)` with `τ` given by the model formulas.
fn oracle_checks(rec: &mut Recorder, max_rank: usize) -> Result<()> {
    for inst in instances(max_rank) {
        let table = ext_table(&inst.quiver()?)?;
        let n = match inst.kind {
            DynkinKind::A => inst.rank as u32,
            DynkinKind::D => inst.rank as u32 - 1,
        };
        let models: Vec<Model> = table.indecs().iter().map(|x| x.model.ok_or_else(|| Error::Internal(format!("{} has no model name", x.label())))).collect::<Result<_>>()?;
        let find = |m: &Model| models.iter().position(|p| p == m);
        let count = models.len();
        let mut ext_bad = None;
        let mut hom_bad = None;
        let mut ar_bad = None;
        for i in 0..count {
            let t = tau(&models[i], n).map(|m| find(&m).ok_or_else(|| Error::Internal(format!("τ lands on {m}, not in the table")))).transpose()?;
            for j in 0..count {
                let oracle = table.ext(i, j) == 0 && table.ext(j, i) == 0;
                if ext_bad.is_none() && ext_vanish_pair(&models[i], &models[j])? != oracle {
                    ext_bad = Some(format!("{} vs {}", models[i], models[j]));
                }
                if let (Model::A(a), Model::A(b)) = (models[i], models[j]) {
                    if hom_bad.is_none() && hom_nonzero_a(a, b) != (table.hom(i, j) != 0) {
                        hom_bad = Some(format!("Hom({}, {})", models[i], models[j]));
                    }
                }
                let dual = t.map_or(0, |t| table.hom(j, t));
                if ar_bad.is_none() && table.ext(i, j) != dual {
                    ar_bad = Some(format!("Ext({}, {}) = {} but Hom with τ gives {dual}", models[i], models[j], table.ext(i, j)));
                }
            }
        }
        rec.push("ext-vanishing-table", inst.to_string(), ext_bad);
        if inst.kind == DynkinKind::A {
            rec.push("interval-hom-criterion", inst.to_string(), hom_bad);
        }
        rec.push("ar-duality", inst.to_string(), ar_bad);
    }
    Ok(())
}

/// Gluing checks at every source or sink leaf of every orientation of
/// `A2..A_r` and `D4..D_{min(r,5)}`.
fn ladkani_checks(rec: &mut Recorder, max_rank: usize) -> Result<()> {
    let bases: Vec<Instance> = instances(max_rank).into_iter().filter(|i| i.rank >= 2 && (i.kind == DynkinKind::A || i.rank <= 5)).collect();
    for inst in bases {
        for q in inst.quiver()?.all_orientations() {
            for &x in q.vertices() {
                if !(q.is_leaf(x) && (q.is_source(x) || q.is_sink(x))) {
                    continue;
                }
                let at = format!("{inst} {q} at {x}");
                let s = LeafSetting::new(&q, x)?;
                rec.run("restrict-after-extend-is-identity", &at, || s.check_pi_iota());
                rec.run("extend-after-restrict-is-comparable", &at, || s.check_iota_pi());
                rec.run("glued-map-is-monotone-bijection", &at, || s.check_monotone_bijection());
                rec.run("glued-order", &at, || s.check_glued_order());
                rec.push("boundary-arrow-bijection", &at, s.check_boundary_bijection());
                rec.push("arrow-decomposition", &at, s.check_arrow_decomposition());
                rec.push("complement-support-at-leaf", &at, s.check_complement_at_x());
                if s.kind == LeafKind::Source {
                    let there = LeafSetting::new(&q.reflect(x)?, x)?;
                    rec.run("reflection-order-isomorphism", &at, || Ok(rho_x(&s, &there)?.outcome));
                    rec.expect("reflection-preserves-arrow-count", &at, s.tq.arrow_count(), there.tq.arrow_count());
                }
            }
        }
    }
    Ok(())
}

/// Tilting modules of the `n`-vertex path as sorted interval lists.
fn path_tilting(n: u32) -> Result<Vec<Vec<Interval>>> {
    if n == 0 {
        return Ok(vec![vec![]]);
    }
    let table = ext_table(&linear_quiver(n as usize))?;
    let by_dim: BTreeMap<_, _> = (0..n)
        .flat_map(|i| (i + 1..=n).map(move |j| Interval::new(i, j)))
        .map(|x| (dim_vector_a(n, x), x))
        .collect();
    Ok(tilting_quiver(&table)?
        .nodes
        .iter()
        .map(|t| {
            let mut v: Vec<Interval> = t.ids().iter().map(|&i| by_dim[&table.indecs()[i].dim]).collect();
            v.sort();
            v
        })
        .collect())
}

/// Tilting modules of `Q_n` as sorted summand lists, matched by dimension
/// vector so that `n = 2` works too.
fn fork_tilting(n: u32) -> Result<Vec<Vec<IndecD>>> {
    let table = ext_table(&d_quiver(n as usize, None)?)?;
    let by_dim: BTreeMap<_, _> = all_d(n).into_iter().map(|x| (dim_vector_d(n, x), x)).collect();
    Ok(tilting_quiver(&table)?
        .nodes
        .iter()
        .map(|t| {
            let mut v: Vec<IndecD> = t.ids().iter().map(|&i| by_dim[&table.indecs()[i].dim]).collect();
            v.sort();
            v
        })
        .collect())
}

fn catalan(n: u64) -> u64 {
    binomial(2 * n, n) / (n + 1)
}

/// The δ-class taxonomy of `Q_n` for `n + 1 <= max_rank` and the maps that
/// identify its classes with tilting modules of smaller quivers.
fn class_checks(rec: &mut Recorder, max_rank: usize) -> Result<()> {
    for n in 3..max_rank as u32 {
        let inst = format!("Q{n}");
        let modules = fork_tilting(n)?;
        let classes: Vec<_> = modules.iter().map(|t| classify_d(n, t)).collect();
        let signed = classes.iter().filter(|c| c.tags.contains(&Tag::APlus) || c.tags.contains(&Tag::AMinus)).count();
        rec.expect("a-classes-empty", &inst, signed, 0);
        let without_m = classes.iter().filter(|c| c.tags.contains(&Tag::CWithoutM)).count();
        rec.expect("c-classes-contain-m", &inst, without_m, 0);

        let path = path_tilting(n)?;
        for sign in [Sign::Plus, Sign::Minus] {
            let mut total = 0u64;
            let mut bad = None;
            for j in 1..n {
                let tag = match sign {
                    Sign::Plus => Tag::BPlus(j),
                    Sign::Minus => Tag::BMinus(j),
                };
                let class: Vec<&Vec<IndecD>> = modules.iter().zip(&classes).filter(|(_, c)| c.tags.contains(&tag)).map(|(t, _)| t).collect();
                let mut images = Vec::new();
                for t in &class {
                    let img = bijection_b(n, sign, j, t)?;
                    if bad.is_none() && bijection_b_inverse(n, sign, j, &img) != **t {
                        bad = Some(format!("{tag:?}: round trip fails on {t:?}"));
                    }
                    images.push(img);
                }
                images.sort();
                let mut want: Vec<Vec<Interval>> = path.iter().filter(|t| max_start_ending_at(t, n) == Some(j)).cloned().collect();
                want.sort();
                if bad.is_none() && images != want {
                    bad = Some(format!("{tag:?}: {} images, {} expected path modules", images.len(), want.len()));
                }
                total += class.len() as u64;
            }
            let inst_s = format!("{inst} {sign:?}");
            rec.push("b-class-bijection", &inst_s, bad);
            rec.expect("b-class-count", &inst_s, total, catalan(n as u64) - catalan(n as u64 - 1));
        }

        let smaller = fork_tilting(n - 1)?;
        let mut total = 0;
        let mut bad = None;
        for j in 1..n {
            let class: Vec<&Vec<IndecD>> = modules.iter().zip(&classes).filter(|(_, c)| c.tags.contains(&Tag::C(j))).map(|(t, _)| t).collect();
            let mut images = Vec::new();
            for t in &class {
                let img = bijection_c(n, j, t)?;
                if bad.is_none() && bijection_c_inverse(j, &img) != **t {
                    bad = Some(format!("C({j}): round trip fails on {t:?}"));
                }
                images.push(img);
            }
            images.sort();
            let mut want: Vec<Vec<IndecD>> = smaller.iter().filter(|t| j_prime(t) == Some(j - 1)).cloned().collect();
            want.sort();
            if bad.is_none() && images != want {
                bad = Some(format!("C({j}): {} images, {} expected modules", images.len(), want.len()));
            }
            total += class.len();
        }
        rec.push("c-class-bijection", &inst, bad);
        rec.expect("c-class-count", &inst, total, smaller.len());

        let mut bad = None;
        let mut fibers = 0;
        for i in 1..n {
            let left = path_tilting(i - 1)?;
            let right: Vec<Vec<IndecD>> = fork_tilting(n - i + 1)?
                .into_iter()
                .filter(|t| {
                    let c = classify_d(n - i + 1, t);
                    c.tags.contains(&Tag::Fiber(1)) && c.delta == n - i + 1
                })
                .collect();
            let fiber: Vec<&Vec<IndecD>> = modules.iter().zip(&classes).filter(|(_, c)| c.tags.contains(&Tag::Fiber(i))).map(|(t, _)| t).collect();
            for t in &fiber {
                let (l, r) = product_split(n, i, t)?;
                if bad.is_none() && (!left.contains(&l) || !right.contains(&r) || product_join(n, i, &l, &r)? != **t) {
                    bad = Some(format!("fiber {i}: split of {t:?} fails"));
                }
            }
            if bad.is_none() && fiber.len() != left.len() * right.len() {
                bad = Some(format!("fiber {i}: {} modules, product has {}", fiber.len(), left.len() * right.len()));
            }
            fibers += fiber.len();
        }
        rec.push("fiber-product-split", &inst, bad);
        let t1 = classes.iter().filter(|c| c.class == DeltaClass::T1).count();
        let b = classes.iter().filter(|c| c.class == DeltaClass::T1 && c.tags.iter().any(|g| matches!(g, Tag::BPlus(_) | Tag::BMinus(_)))).count();
        rec.expect("middle-class-splits", &inst, t1, b + fibers);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suite_passes() {
        let report = run_suite(Suite::All, 4).unwrap();
        assert!(report.ok(), "{:?}", report.failures());
        assert!(report.records.iter().any(|r| r.check == "ar-duality" && r.instance == "D4"));
    }
}
