//! Command implementations. Each builds a report from a loaded model.

use num_rational::Rational64;
use ortho_core::boundary::{
    boundary, closure_lattice_failure, ends_lattice, finite_compactification, lattice_close,
    transitivity_failure, ultrafilters, verify_line_compactification, verify_ls_compactification,
    zero_set_lattice, Boundary, LineCompactification, ObservableLattice, Observer,
};
use ortho_core::functions::{
    extend_function, paste, separating_function, ChainFunction, Extension, PartialChainFunction,
    Pasting,
};
use ortho_core::graph::{delta_estimate, end_count_over, hyperbolic_orth};
use ortho_core::line::{
    parallel_sets as line_parallel, Direction, EpSet, LineRule, TruncatedOracle,
};
use ortho_core::maps::{
    continuity_check, line_continuity, observable_family, parallel_line_maps, parallel_on_family,
    parallel_witness, quotient_relation,
};
use ortho_core::relation::ScaleClass;
use ortho_core::relation::{
    separation_profile, verify_axioms, verify_finite_axioms, verify_reduced_axioms, Axiom,
    AxiomReport, CheckMode, FiniteRelation, OrthRelation, Property, SeparationFailure, Subset,
};
use ortho_core::set::{GroundSet, PointSet};
use ortho_core::topology::{closed_variant_topology, induced_topology, perp, topology_mismatch};
use ortho_core::translate::{
    nbhd_to_orth, orth_to_nbhd, orth_to_proximity, proximity_to_orth, LineResemblance,
};
use ortho_core::Budget;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::error::CliError;
use crate::model::{
    self, encode_line, encode_points, Body, FiniteModel, GraphModel, LineModel, Model,
};
use crate::report::{Grade, Report, Verdict};

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct Ctx {
    pub budget: Budget,
    pub oracle_window: i64,
    pub resolution: u32,
    pub lattice_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TranslateTarget {
    Proximity,
    Nbhd,
    Resemblance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FunctionMode {
    Separate,
    Paste,
    Extend,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Seeds {
    /// Zero sets of continuous chain functions (finite models).
    ZeroSets,
    /// The two half-lines (symbolic line).
    Ends,
    /// The named subsets of the model.
    Subsets,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Candidate {
    Ends,
    GluedEnds,
}

fn needs(what: &str, model: &Model) -> CliError {
    CliError::Usage(format!(
        "{what} is not available for {} models",
        model.kind.name()
    ))
}

fn pts(fm: &FiniteModel, s: PointSet) -> (Value, String) {
    (fm.encode(s), fm.show(s))
}

fn in_ground(g: &GroundSet, s: PointSet) -> (Value, String) {
    (encode_points(g, s), g.format(s))
}

fn with_set(v: Verdict, role: &str, (set, shown): (Value, String)) -> Verdict {
    v.witness(role, set, shown)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pair_names(names: &[String], what: &str) -> Result<(String, String), CliError> {
    match names {
        [a, c] => Ok((a.clone(), c.clone())),
        _ => Err(CliError::Usage(format!(
            "{what} takes exactly two names, got {}",
            names.len()
        ))),
    }
}

/// Random symbolic sets for sampled checks.
fn line_pool(named: impl IntoIterator<Item = EpSet>, seed: u64, random: usize) -> Vec<EpSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<EpSet> = named.into_iter().collect();
    pool.extend([
        EpSet::empty(),
        EpSet::all(),
        EpSet::naturals(),
        EpSet::negative_naturals(),
        EpSet::progression(0, 2, Direction::Both),
        EpSet::finite([0]),
    ]);
    pool.extend((0..random).map(|_| EpSet::random(&mut rng, 6, 24)));
    pool.sort();
    pool.dedup();
    pool
}

fn line_family(lm: &LineModel) -> Vec<EpSet> {
    let mut family: Vec<EpSet> = lm.subsets.values().cloned().collect();
    family.extend(observable_family(3));
    family.extend([
        EpSet::naturals(),
        EpSet::negative_naturals(),
        EpSet::all(),
        EpSet::empty(),
        EpSet::finite([0]),
    ]);
    family.sort();
    family.dedup();
    family
}

// ---------------------------------------------------------------- axioms

fn subset_value(model: &Model, s: &Subset) -> (Value, String) {
    match (&model.body, s) {
        (Body::Finite(fm), Subset::Points(p)) => pts(fm, *p),
        (Body::Graph(gm), Subset::Vertices(v)) => (gm.encode(v), gm.show(v)),
        (_, Subset::Line(a)) => (encode_line(a), a.to_string()),
        (_, other) => (Value::Null, format!("{other:?}")),
    }
}

fn axiom_verdicts(
    model: &Model,
    rel: &OrthRelation,
    report: &AxiomReport,
    grade: Grade,
) -> Result<Vec<Verdict>, CliError> {
    let mut out = Vec::new();
    for axiom in [Axiom::Symmetry, Axiom::EmptyOrthogonal, Axiom::UnionSplit] {
        let mut v = Verdict::new(axiom.id(), true, grade);
        if let Some(violation) = report.violation(axiom) {
            v.holds = false;
            let w = &violation.witness;
            let roles: &[&str] = match axiom {
                Axiom::EmptyOrthogonal => &["empty", "whole"],
                Axiom::Symmetry => &["A", "C"],
                _ => &["A", "C", "C'"],
            };
            for (role, s) in roles.iter().zip(w) {
                v = with_set(v, role, subset_value(model, s));
            }
            let fact = |v: Verdict, a: &Subset, c: &Subset| -> Result<Verdict, CliError> {
                let holds = rel.orth(a, c)?;
                Ok(v.fact(
                    "model",
                    subset_value(model, a).0,
                    subset_value(model, c).0,
                    holds,
                ))
            };
            v = match axiom {
                Axiom::Symmetry => fact(fact(v, &w[0], &w[1])?, &w[1], &w[0])?,
                Axiom::EmptyOrthogonal => fact(v, &w[0], &w[1])?,
                _ => {
                    let joint = w[1].union(&w[2])?;
                    fact(fact(fact(v, &w[0], &w[1])?, &w[0], &w[2])?, &w[0], &joint)?
                }
            };
        }
        out.push(v);
    }
    Ok(out)
}

pub fn check_axioms(model: &Model, ctx: &Ctx) -> Result<Report, CliError> {
    let mut r = Report::new("check-axioms", model.kind.name());
    let (rel, pool, grade): (OrthRelation, Vec<Subset>, Grade) = match &model.body {
        Body::Finite(fm) => (fm.rel.clone().into(), Vec::new(), Grade::Exhaustive),
        Body::Line(lm) => {
            let pool = line_pool(lm.subsets.values().cloned(), ctx.budget.seed, 40);
            (
                lm.rel.clone().into(),
                pool.into_iter().map(Subset::Line).collect(),
                Grade::Sampled,
            )
        }
        Body::Graph(gm) => {
            let rule = gm
                .rule
                .clone()
                .ok_or_else(|| CliError::Usage("the graph model names no rule".into()))?;
            let ball = &gm.ball;
            let mut pool: Vec<Subset> =
                gm.subsets.values().cloned().map(Subset::Vertices).collect();
            for k in (0..=ball.radius()).step_by(2) {
                let inner = ball.inner_ball(k);
                pool.push(Subset::Vertices(ball.all_vertices().difference(&inner)));
                pool.push(Subset::Vertices(inner));
            }
            let rel = ortho_core::relation::GraphRelation {
                ball: gm.ball.clone(),
                rule,
            };
            (rel.into(), pool, Grade::Sampled)
        }
    };
    let report = match &rel {
        OrthRelation::Finite(f) => verify_finite_axioms(f, &ctx.budget)?,
        _ => verify_axioms(&rel, &pool, CheckMode::Sampled, &ctx.budget)?,
    };
    r.line(format!("evaluations: {}", report.evaluations));
    if !pool.is_empty() {
        r.line(format!(
            "sampled from {} sets, seed {}",
            pool.len(),
            ctx.budget.seed
        ));
    }
    for v in axiom_verdicts(model, &rel, &report, grade)? {
        r.verdict(v);
    }
    Ok(r)
}

pub fn classify(model: &Model) -> Result<Report, CliError> {
    let mut r = Report::new("classify", model.kind.name());
    match &model.body {
        Body::Finite(fm) => {
            r.line(format!("scale: {}", fm.rel.scale_class()));
            r.line(format!(
                "bounded points: {}",
                fm.show(fm.rel.bounded_points())
            ));
            r.line(format!(
                "self-orthogonal points: {}",
                fm.show(fm.rel.self_orthogonal_points())
            ));
        }
        Body::Line(lm) => {
            let rel: OrthRelation = lm.rel.clone().into();
            r.line(format!("scale: {}", rel.scale_class()?));
            r.line(format!("rule: {}", lm.rel.rule.name()));
        }
        Body::Graph(_) => return Err(needs("classify", model)),
    }
    Ok(r)
}

fn finite<'a>(model: &'a Model, what: &str) -> Result<&'a FiniteModel, CliError> {
    match &model.body {
        Body::Finite(fm) => Ok(fm),
        _ => Err(needs(what, model)),
    }
}

fn line<'a>(model: &'a Model, what: &str) -> Result<&'a LineModel, CliError> {
    match &model.body {
        Body::Line(lm) => Ok(lm),
        _ => Err(needs(what, model)),
    }
}

fn graph<'a>(model: &'a Model, what: &str) -> Result<&'a GraphModel, CliError> {
    match &model.body {
        Body::Graph(gm) => Ok(gm),
        _ => Err(needs(what, model)),
    }
}

// ---------------------------------------------------------------- separation

fn separation_verdict(fm: &FiniteModel, name: &str, p: &Property) -> Verdict {
    let rel = &fm.rel;
    let mut v = Verdict::new(name, p.holds, Grade::Exhaustive);
    match p.counterexample {
        None => {}
        Some(SeparationFailure::PointsNotOrthogonal { x, y }) => {
            let (a, c) = (PointSet::singleton(x), PointSet::singleton(y));
            v = with_set(with_set(v, "x", pts(fm, a)), "y", pts(fm, c));
            v = v.fact("model", fm.encode(a), fm.encode(c), rel.orth(a, c));
        }
        Some(SeparationFailure::NoSpan { c, d }) => {
            v = with_set(with_set(v, "C", pts(fm, c)), "D", pts(fm, d));
            v = v.fact("model", fm.encode(c), fm.encode(d), rel.orth(c, d));
        }
        Some(SeparationFailure::UnboundedSelfOrthogonal { b }) => {
            v = with_set(v, "B", pts(fm, b));
            v = v.fact("model", fm.encode(b), fm.encode(b), rel.orth(b, b));
            v = v.fact(
                "model",
                fm.encode(b),
                fm.encode(rel.full()),
                rel.is_bounded(b),
            );
        }
    }
    v
}

pub fn profile(model: &Model, ctx: &Ctx) -> Result<Report, CliError> {
    let fm = finite(model, "profile")?;
    let mut r = Report::new("profile", model.kind.name());
    let p = separation_profile(&fm.rel, &ctx.budget)?;
    for (name, prop) in [
        ("frechet", &p.frechet),
        ("hausdorff", &p.hausdorff),
        ("regular", &p.regular),
        ("normal", &p.normal),
    ] {
        r.verdict(separation_verdict(fm, name, prop));
    }
    Ok(r)
}

// ---------------------------------------------------------------- topology

pub fn topology(model: &Model, ctx: &Ctx) -> Result<Report, CliError> {
    let fm = finite(model, "topology")?;
    let mut r = Report::new("topology", model.kind.name());
    let induced = induced_topology(&fm.rel, &ctx.budget)?;
    let closed = closed_variant_topology(&fm.rel, &ctx.budget)?;
    let list = |opens: &[PointSet]| {
        opens
            .iter()
            .map(|&o| fm.show(o))
            .collect::<Vec<_>>()
            .join(", ")
    };
    r.line(format!("opens: {}", list(&induced.opens)));
    r.line(format!("discrete: {}", yes(induced.is_discrete())));
    r.line(format!("indiscrete: {}", yes(induced.is_indiscrete())));
    if let Some(t) = &fm.topology {
        r.line(format!(
            "model topology recovered: {}",
            yes(t.opens() == induced.opens.as_slice())
        ));
    }
    let mut v = Verdict::new(
        "perp and closed-set topologies agree",
        induced.same_opens(&closed),
        Grade::Exhaustive,
    );
    if let Some(s) = topology_mismatch(&fm.rel, &ctx.budget)? {
        v = with_set(v, "open in one only", pts(fm, s));
    }
    r.verdict(v);
    Ok(r)
}

pub fn perp_cmd(model: &Model, set: &str) -> Result<Report, CliError> {
    let fm = finite(model, "perp")?;
    let mut r = Report::new("perp", model.kind.name());
    let a = fm.subset(set)?;
    let p = perp(&fm.rel, a);
    r.line(format!("{set} = {}", fm.show(a)));
    r.line(format!("{set}⊥ = {}", fm.show(p)));
    Ok(r)
}

// ---------------------------------------------------------------- translations

fn round_trip(fm: &FiniteModel, back: &FiniteRelation) -> Result<Verdict, CliError> {
    let diff = fm.rel.first_difference(back)?;
    let mut v = Verdict::new(
        "round trip reproduces the relation",
        diff.is_none(),
        Grade::Exhaustive,
    );
    if let Some((a, c)) = diff {
        v = with_set(with_set(v, "A", pts(fm, a)), "C", pts(fm, c));
        v = v.fact("model", fm.encode(a), fm.encode(c), fm.rel.orth(a, c));
    }
    Ok(v)
}

fn listed(fm: &FiniteModel, sets: &[PointSet]) -> String {
    sets.iter()
        .map(|&s| fm.show(s))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn translate(model: &Model, to: TranslateTarget, ctx: &Ctx) -> Result<Report, CliError> {
    let mut r = Report::new("translate", model.kind.name());
    match to {
        TranslateTarget::Proximity => {
            let fm = finite(model, "proximity translation")?;
            let small = fm.rel.scale_class() == ScaleClass::Small;
            let mut v = Verdict::new("small scale", small, Grade::Exhaustive);
            if !small {
                let b = fm.rel.self_orthogonal_points();
                v = with_set(v, "self-orthogonal", pts(fm, b));
                v = v.fact("model", fm.encode(b), fm.encode(b), fm.rel.orth(b, b));
            }
            r.verdict(v);
            let normal = separation_profile(&fm.rel, &ctx.budget)?.normal;
            r.verdict(separation_verdict(fm, "normal", &normal));
            if !(small && normal.holds) {
                return Ok(r);
            }
            let p = orth_to_proximity(&fm.rel, &ctx.budget)?;
            let violation = p.check_axioms();
            let mut v = Verdict::new("proximity axioms", violation.is_none(), Grade::Exhaustive);
            if let Some(viol) = &violation {
                r.line(format!(
                    "proximity axiom {} fails at ({})",
                    viol.axiom,
                    listed(fm, &viol.witness)
                ));
                for (i, &s) in viol.witness.iter().enumerate() {
                    v = with_set(v, &format!("S{}", i + 1), pts(fm, s));
                }
            }
            r.verdict(v);
            if violation.is_none() {
                r.verdict(round_trip(fm, &proximity_to_orth(&p)?)?);
            }
        }
        TranslateTarget::Nbhd => {
            let fm = finite(model, "neighborhood translation")?;
            let op = orth_to_nbhd(&fm.rel)?;
            let base = op.check_axioms();
            for (name, found) in [
                ("operator axioms", &base),
                ("derived axioms", &op.check_derived()),
            ] {
                let mut v = Verdict::new(name, found.is_none(), Grade::Exhaustive);
                if let Some(viol) = found {
                    r.line(format!(
                        "{:?} fails at ({})",
                        viol.axiom,
                        listed(fm, &viol.witness)
                    ));
                    for (i, &s) in viol.witness.iter().enumerate() {
                        v = with_set(v, &format!("S{}", i + 1), pts(fm, s));
                    }
                }
                r.verdict(v);
            }
            let failure = op.normality_failure();
            let mut v = Verdict::new(
                "interpolation (normality)",
                failure.is_none(),
                Grade::Exhaustive,
            );
            if let Some((a, u)) = failure {
                v = with_set(with_set(v, "A", pts(fm, a)), "U", pts(fm, u));
                let rest = fm.rel.full() - u;
                v = v.fact("model", fm.encode(a), fm.encode(rest), fm.rel.orth(a, rest));
            }
            r.verdict(v);
            if base.is_none() {
                r.verdict(round_trip(fm, &nbhd_to_orth(&op)?)?);
            }
        }
        TranslateTarget::Resemblance => {
            let lm = line(model, "resemblance translation")?;
            let lam = LineResemblance::hausdorff();
            let pool = line_pool(lm.subsets.values().cloned(), ctx.budget.seed, 40);
            r.line(format!("resemblance: {}", lam.name()));
            r.line(format!(
                "sampled from {} sets, seed {}",
                pool.len(),
                ctx.budget.seed
            ));
            let violation = lam.check_axioms_sampled(&pool, ctx.budget.samples, ctx.budget.seed);
            let mut v = Verdict::new("resemblance axioms", violation.is_none(), Grade::Sampled);
            if let Some(viol) = violation {
                r.line(format!("{:?} fails", viol.axiom));
                for (i, s) in viol.witness.iter().enumerate() {
                    v = v.witness(format!("S{}", i + 1), encode_line(s), s.to_string());
                }
            }
            r.verdict(v);
            let mismatch = pool
                .iter()
                .flat_map(|a| pool.iter().map(move |c| (a, c)))
                .find(|(a, c)| lam.orth(a, c) != lm.rel.orth(a, c));
            let mut v = Verdict::new(
                "induced relation matches the model rule",
                mismatch.is_none(),
                Grade::Sampled,
            );
            if let Some((a, c)) = mismatch {
                v = v
                    .witness("A", encode_line(a), a.to_string())
                    .witness("C", encode_line(c), c.to_string())
                    .fact("model", encode_line(a), encode_line(c), lm.rel.orth(a, c));
            }
            r.verdict(v);
        }
    }
    Ok(r)
}

// ---------------------------------------------------------------- maps

pub fn map_check(model: &Model, name: &str, ctx: &Ctx) -> Result<Report, CliError> {
    let mut r = Report::new("map-check", model.kind.name());
    match &model.body {
        Body::Finite(fm) => {
            let entry = fm.map(name)?;
            let target = fm.target(entry);
            let verdict = continuity_check(&entry.map, &fm.rel, target)?;
            let mut v = Verdict::new("continuous", verdict.continuous, Grade::Exhaustive);
            if let Some((a, c)) = verdict.counterexample {
                let (pa, pc) = (entry.map.preimage(a), entry.map.preimage(c));
                let tg = target.ground();
                v = with_set(with_set(v, "A", in_ground(tg, a)), "C", in_ground(tg, c));
                v = with_set(
                    with_set(v, "preimage of A", pts(fm, pa)),
                    "preimage of C",
                    pts(fm, pc),
                );
                v = v
                    .fact(
                        format!("target:{name}"),
                        encode_points(tg, a),
                        encode_points(tg, c),
                        target.orth(a, c),
                    )
                    .fact("model", fm.encode(pa), fm.encode(pc), fm.rel.orth(pa, pc));
            }
            r.verdict(v);
        }
        Body::Line(lm) => {
            let f = lm.map(name)?;
            let rule = lm.rel.rule;
            let family = line_family(lm);
            let verdict = line_continuity(f, rule, rule, &family, &ctx.budget)?;
            r.line(format!("pairs checked: {}", verdict.pairs_checked));
            r.line(format!("coarse: {}", yes(f.is_coarse())));
            let mut v = Verdict::new("continuous", verdict.continuous, Grade::Sampled);
            if let Some((a, c)) = verdict.counterexample {
                let (pa, pc) = (f.preimage(&a), f.preimage(&c));
                v = v
                    .witness("A", encode_line(&a), a.to_string())
                    .witness("C", encode_line(&c), c.to_string())
                    .witness("preimage of A", encode_line(&pa), pa.to_string())
                    .witness("preimage of C", encode_line(&pc), pc.to_string())
                    .fact(
                        "model",
                        encode_line(&a),
                        encode_line(&c),
                        lm.rel.orth(&a, &c),
                    )
                    .fact(
                        "model",
                        encode_line(&pa),
                        encode_line(&pc),
                        lm.rel.orth(&pa, &pc),
                    );
            }
            r.verdict(v);
        }
        Body::Graph(_) => return Err(needs("map-check", model)),
    }
    Ok(r)
}

pub fn quotient(model: &Model, name: &str, ctx: &Ctx) -> Result<Report, CliError> {
    let fm = finite(model, "quotient")?;
    let mut r = Report::new("quotient", model.kind.name());
    let map = &fm.map(name)?.map;
    let q = quotient_relation(&fm.rel, map)?;
    let g = q.ground();
    r.line(format!("points: {}", g.names().join(", ")));
    let mut pairs = Vec::new();
    for y in 0..q.n() {
        for z in y..q.n() {
            if q.point_orth(y, z) {
                pairs.push(format!("{}⊥{}", g.name(y), g.name(z)));
            }
        }
    }
    r.line(format!(
        "orthogonal points: {}",
        if pairs.is_empty() {
            "none".into()
        } else {
            pairs.join(", ")
        }
    ));
    r.line(format!("bounded points: {}", g.format(q.bounded_points())));
    r.line(format!("scale: {}", q.scale_class()));
    let rel: OrthRelation = q.clone().into();
    let report = verify_finite_axioms(&q, &ctx.budget)?;
    let quotient_model = Model {
        kind: model.kind,
        body: Body::Finite(FiniteModel {
            rel: q.clone(),
            topology: None,
            subsets: Default::default(),
            maps: Default::default(),
            functions: Default::default(),
        }),
    };
    for mut v in axiom_verdicts(&quotient_model, &rel, &report, Grade::Exhaustive)? {
        v.name = format!("quotient {}", v.name);
        for f in &mut v.replay {
            f.relation = format!("quotient:{name}");
        }
        r.verdict(v);
    }
    let c = continuity_check(map, &fm.rel, &q)?;
    let mut v = Verdict::new(
        "map continuous into the quotient",
        c.continuous,
        Grade::Exhaustive,
    );
    if let Some((a, d)) = c.counterexample {
        v = with_set(with_set(v, "A", in_ground(g, a)), "C", in_ground(g, d));
    }
    r.verdict(v);
    Ok(r)
}

fn parallel_verdict(
    rel: &FiniteRelation,
    names: (&str, &str),
    a: PointSet,
    c: PointSet,
    relation: &str,
    ctx: &Ctx,
) -> Result<Verdict, CliError> {
    let g = rel.ground();
    let w = parallel_witness(rel, a, c, &ctx.budget)?;
    let mut v = Verdict::new(
        format!("{} parallel to {}", names.0, names.1),
        w.is_none(),
        Grade::Exhaustive,
    );
    if let Some(b) = w {
        v = with_set(
            v,
            &format!("unbounded part of {} orthogonal to {}", names.0, names.1),
            in_ground(g, b),
        );
        v = v
            .fact(
                relation,
                encode_points(g, b),
                encode_points(g, c),
                rel.orth(b, c),
            )
            .fact(
                relation,
                encode_points(g, b),
                encode_points(g, rel.full()),
                rel.is_bounded(b),
            );
    }
    Ok(v)
}

pub fn parallel(
    model: &Model,
    sets: Option<&[String]>,
    maps: Option<&[String]>,
    ctx: &Ctx,
) -> Result<Report, CliError> {
    let mut r = Report::new("parallel", model.kind.name());
    match (&model.body, sets, maps) {
        (Body::Finite(fm), Some(sets), None) => {
            let (an, cn) = pair_names(sets, "--sets")?;
            let (a, c) = (fm.subset(&an)?, fm.subset(&cn)?);
            r.verdict(parallel_verdict(&fm.rel, (&an, &cn), a, c, "model", ctx)?);
            r.verdict(parallel_verdict(&fm.rel, (&cn, &an), c, a, "model", ctx)?);
        }
        (Body::Line(lm), Some(sets), None) => {
            let (an, cn) = pair_names(sets, "--sets")?;
            let (a, c) = (lm.subset(&an)?, lm.subset(&cn)?);
            r.verdict(Verdict::new(
                format!("{an} parallel to {cn}"),
                line_parallel(a, c),
                Grade::Exact,
            ));
            r.verdict(Verdict::new(
                format!("{cn} parallel to {an}"),
                line_parallel(c, a),
                Grade::Exact,
            ));
        }
        (Body::Finite(fm), None, Some(maps)) => {
            let (fname, gname) = pair_names(maps, "--maps")?;
            let (fe, ge) = (fm.map(&fname)?, fm.map(&gname)?);
            let target = fm.target(fe);
            if fm.target(ge).ground() != target.ground() {
                return Err(CliError::Usage(format!(
                    "{fname} and {gname} have different targets"
                )));
            }
            let relation = if fe.target.is_some() {
                format!("target:{fname}")
            } else {
                "model".into()
            };
            let (f, g) = (&fe.map, &ge.map);
            let found = ortho_core::maps::parallel_maps_witness(target, f, g, &ctx.budget)?;
            let mut v = Verdict::new(
                format!("{fname} parallel to {gname}"),
                found.is_none(),
                Grade::Exhaustive,
            );
            if let Some(a) = found {
                v = with_set(v, "A", pts(fm, a));
                let (fa, ga) = (f.image(a), g.image(a));
                for (x, y) in [(fa, ga), (ga, fa)] {
                    let sub = parallel_verdict(target, ("image", "image"), x, y, &relation, ctx)?;
                    if !sub.holds {
                        v.witness.extend(sub.witness);
                        v.replay.extend(sub.replay);
                        break;
                    }
                }
            }
            r.verdict(v);
        }
        (Body::Line(lm), None, Some(maps)) => {
            let (fname, gname) = pair_names(maps, "--maps")?;
            let (f, g) = (lm.map(&fname)?, lm.map(&gname)?);
            let p = parallel_line_maps(f, g);
            if let Some(d) = p.diverging {
                r.line(format!(
                    "diverging: {}",
                    if d == Direction::Left {
                        "left"
                    } else {
                        "right"
                    }
                ));
            }
            r.verdict(Verdict::new(
                format!("{fname} parallel to {gname}"),
                p.parallel,
                Grade::Exact,
            ));
            let family = line_family(lm);
            let bad = parallel_on_family(f, g, &family);
            let mut v = Verdict::new(
                "images mutually parallel on the family",
                bad.is_none(),
                Grade::Sampled,
            );
            if let Some(a) = bad {
                v = v.witness("A", encode_line(&a), a.to_string());
            }
            r.verdict(v);
        }
        _ => {
            return Err(CliError::Usage(
                "give either --sets A,C or --maps f,g on a finite or symbolic-line model".into(),
            ))
        }
    }
    Ok(r)
}

// ---------------------------------------------------------------- functions

fn show_function(fm: &FiniteModel, f: &ChainFunction) -> String {
    let g = fm.rel.ground();
    let parts: Vec<String> = (0..f.len())
        .map(|x| format!("{}↦{}", g.name(x), f.value(x)))
        .collect();
    parts.join(", ")
}

fn partial(fm: &FiniteModel, name: &str, ctx: &Ctx) -> Result<PartialChainFunction, CliError> {
    let levels = fm
        .functions
        .get(name)
        .ok_or_else(|| CliError::Usage(format!("no function named {name:?} in the model")))?;
    Ok(PartialChainFunction::new(ctx.resolution, levels.clone())?)
}

pub struct FunctionArgs<'a> {
    pub mode: FunctionMode,
    pub sets: Option<&'a [String]>,
    pub functions: &'a [String],
    pub cuts: Option<&'a [u32]>,
    pub default: u32,
}

pub fn functions(model: &Model, args: &FunctionArgs<'_>, ctx: &Ctx) -> Result<Report, CliError> {
    let fm = finite(model, "functions")?;
    let mut r = Report::new("functions", model.kind.name());
    r.line(format!("resolution: {}", ctx.resolution));
    match args.mode {
        FunctionMode::Separate => {
            let (cn, dn) = pair_names(args.sets.unwrap_or_default(), "--sets")?;
            let (c, d) = (fm.subset(&cn)?, fm.subset(&dn)?);
            let f = separating_function(&fm.rel, c, d, ctx.resolution)?;
            let mut v = Verdict::new(
                format!("a continuous function separates {cn} and {dn}"),
                f.is_some(),
                Grade::Exhaustive,
            );
            match f {
                Some(f) => r.line(format!("f: {}", show_function(fm, &f))),
                None => v = with_set(with_set(v, "C", pts(fm, c)), "D", pts(fm, d)),
            }
            r.verdict(v);
        }
        FunctionMode::Paste => {
            let parts = args
                .functions
                .iter()
                .map(|n| partial(fm, n, ctx))
                .collect::<Result<Vec<_>, _>>()?;
            let (c, d) = match args.cuts {
                Some([c, d]) => (*c, *d),
                None => (1, ctx.resolution.saturating_sub(1)),
                Some(other) => {
                    return Err(CliError::Usage(format!(
                        "--cuts takes two levels, got {}",
                        other.len()
                    )))
                }
            };
            match paste(&fm.rel, &parts, c, d)? {
                Pasting::Pasted {
                    function,
                    certified,
                } => {
                    r.line(format!("f: {}", show_function(fm, &function)));
                    r.verdict(Verdict::new(
                        "pasted function is continuous",
                        certified,
                        Grade::Exhaustive,
                    ));
                }
                Pasting::HypothesisFails { lower, upper } => {
                    let mut v = Verdict::new(
                        "low and high level sets are orthogonal",
                        false,
                        Grade::Exhaustive,
                    );
                    v = with_set(with_set(v, "low", pts(fm, lower)), "high", pts(fm, upper));
                    v = v.fact(
                        "model",
                        fm.encode(lower),
                        fm.encode(upper),
                        fm.rel.orth(lower, upper),
                    );
                    r.verdict(v);
                }
            }
        }
        FunctionMode::Extend => {
            let [name] = args.functions else {
                return Err(CliError::Usage(
                    "extend takes exactly one --functions name".into(),
                ));
            };
            let f = partial(fm, name, ctx)?;
            match extend_function(&fm.rel, &f, args.default)? {
                Extension::Extended(g) => {
                    r.line(format!("f: {}", show_function(fm, &g)));
                    r.verdict(Verdict::new(
                        "continuous extension exists",
                        true,
                        Grade::Exhaustive,
                    ));
                }
                Extension::Conflict { component, levels } => {
                    r.line(format!(
                        "levels {} and {} meet on one component",
                        levels.0, levels.1
                    ));
                    let v = Verdict::new("continuous extension exists", false, Grade::Exhaustive);
                    r.verdict(with_set(v, "component", pts(fm, component)));
                }
            }
        }
    }
    Ok(r)
}

// ---------------------------------------------------------------- graphs

pub fn hyperbolic(
    model: &Model,
    sets: Option<&[String]>,
    threshold: &str,
) -> Result<Report, CliError> {
    let gm = graph(model, "hyperbolic")?;
    let mut r = Report::new("hyperbolic", model.kind.name());
    let ball = &gm.ball;
    r.line(format!(
        "graph: {}, radius {}",
        ball.generator().name(),
        ball.radius()
    ));
    let d = delta_estimate(ball, gm.origin)?;
    r.line(format!(
        "delta: {} (four times the worst deficiency)",
        d.delta
    ));
    r.line(format!(
        "vertices used: {}, skipped: {}",
        d.vertices_used, d.vertices_skipped
    ));
    if let Some(sets) = sets {
        let (an, cn) = pair_names(sets, "--sets")?;
        let (a, c) = (gm.subset(&an)?, gm.subset(&cn)?);
        let t: Rational64 = threshold.parse().map_err(|_| {
            CliError::Usage(format!("threshold {threshold:?} is not a rational number"))
        })?;
        let h = hyperbolic_orth(ball, a, c, gm.origin, t)?;
        r.line(format!("sup of Gromov products: {}", h.sup));
        let mut v = Verdict::new(
            format!("products between {an} and {cn} stay below {t}"),
            h.orthogonal_at_r,
            Grade::Evidence,
        );
        if let Some((x, y)) = h.attained_at {
            v = v
                .witness(
                    "a",
                    Value::from(vec![ball.vertex(x).to_string()]),
                    ball.vertex(x).to_string(),
                )
                .witness(
                    "c",
                    Value::from(vec![ball.vertex(y).to_string()]),
                    ball.vertex(y).to_string(),
                );
        }
        r.verdict(v);
    }
    Ok(r)
}

pub fn ends(model: &Model, k_min: u32) -> Result<Report, CliError> {
    let gm = graph(model, "ends")?;
    let mut r = Report::new("ends", model.kind.name());
    let ball = &gm.ball;
    let top = ball.radius() / 2;
    if k_min < 1 || k_min > top {
        return Err(CliError::Usage(format!(
            "--k-min must lie in 1..={top} for radius {}",
            ball.radius()
        )));
    }
    let profile = end_count_over(ball, k_min, top)?;
    match (profile.stable_value(), profile.stable_range()) {
        (Some(n), Some((lo, hi))) => r.line(format!("ends: {n} (stabilized k={lo}..{hi})")),
        _ => {
            let last = profile.counts.last().map_or(0, |&(_, c)| c);
            r.line(format!("ends: unstable (last count {last} at k={top})"));
        }
    }
    let counts: Vec<String> = profile
        .counts
        .iter()
        .map(|(k, c)| format!("{k}:{c}"))
        .collect();
    r.line(format!("counts: {}", counts.join(" ")));
    r.verdict(Verdict::new(
        "end count stabilized",
        profile.stabilized,
        Grade::Evidence,
    ));
    Ok(r)
}

// ---------------------------------------------------------------- boundaries

fn boundary_lines<O: Observer>(
    r: &mut Report,
    rel: &O,
    lattice: &ObservableLattice<O::Set>,
    seeds: &str,
) -> Option<Boundary<O::Set>> {
    r.line(format!("lattice: {seeds} ({} members)", lattice.len()));
    let filters = ultrafilters(lattice, rel);
    r.line(format!("unbounded ultrafilters: {}", filters.len()));
    if let Some((i, j, l)) = transitivity_failure(rel, &filters) {
        let mut v = Verdict::new("similarity is transitive", false, Grade::Exhaustive);
        for (role, k) in [("F", i), ("G", j), ("H", l)] {
            v = v.witness(
                role,
                Value::String(rel.describe(&filters[k].generator)),
                rel.describe(&filters[k].generator),
            );
        }
        r.verdict(v);
        return None;
    }
    r.verdict(Verdict::new(
        "similarity is transitive",
        true,
        Grade::Exhaustive,
    ));
    let b = boundary(rel, lattice).expect("transitivity was checked");
    r.line(format!("∂X: {} classes", b.class_count()));
    for (i, class) in b.classes.iter().enumerate() {
        let gens: Vec<String> = class
            .iter()
            .map(|&k| rel.describe(&b.ultrafilters[k].generator))
            .collect();
        r.line(format!("class {}: {}", i + 1, gens.join(" ∼ ")));
    }
    for (points, _) in &b.identifications {
        if points.len() > 1 {
            r.line(format!("identified points: {}", points.join(", ")));
        }
    }
    Some(b)
}

fn finite_lattice(
    fm: &FiniteModel,
    seeds: Seeds,
    ctx: &Ctx,
) -> Result<(ObservableLattice<PointSet>, &'static str), CliError> {
    Ok(match seeds {
        Seeds::ZeroSets => (
            zero_set_lattice(&fm.rel, &ctx.budget, ctx.lattice_cap)?,
            "zero sets",
        ),
        Seeds::Subsets => (
            lattice_close(&fm.rel, fm.subsets.values().copied(), ctx.lattice_cap)?,
            "named subsets",
        ),
        Seeds::Ends => {
            return Err(CliError::Usage(
                "the ends lattice lives on the symbolic line".into(),
            ))
        }
    })
}

pub fn boundary_cmd(model: &Model, seeds: Option<Seeds>, ctx: &Ctx) -> Result<Report, CliError> {
    let mut r = Report::new("boundary", model.kind.name());
    match &model.body {
        Body::Finite(fm) => {
            let (lattice, label) = finite_lattice(fm, seeds.unwrap_or(Seeds::ZeroSets), ctx)?;
            boundary_lines(&mut r, &fm.rel, &lattice, label);
        }
        Body::Line(lm) => {
            let (lattice, label) = match seeds.unwrap_or(Seeds::Ends) {
                Seeds::Ends => (ends_lattice(&lm.rel, ctx.lattice_cap)?, "ends"),
                Seeds::Subsets => (
                    lattice_close(&lm.rel, lm.subsets.values().cloned(), ctx.lattice_cap)?,
                    "named subsets",
                ),
                Seeds::ZeroSets => {
                    return Err(CliError::Usage(
                        "zero-set lattices need a finite model".into(),
                    ))
                }
            };
            boundary_lines(&mut r, &lm.rel, &lattice, label);
        }
        Body::Graph(_) => return Err(needs("boundary", model)),
    }
    Ok(r)
}

pub fn verify_compactification(
    model: &Model,
    candidate: Candidate,
    ctx: &Ctx,
) -> Result<Report, CliError> {
    let mut r = Report::new("verify-compactification", model.kind.name());
    match &model.body {
        Body::Finite(fm) => {
            let rel = &fm.rel;
            let (lattice, label) = finite_lattice(fm, Seeds::ZeroSets, ctx)?;
            let Some(b) = boundary_lines(&mut r, rel, &lattice, label) else {
                return Ok(r);
            };
            if let Some((a, c)) = closure_lattice_failure(rel, &b) {
                let mut v = Verdict::new(
                    "lattice closures detect orthogonality",
                    false,
                    Grade::Exhaustive,
                );
                v = with_set(with_set(v, "A", pts(fm, a)), "C", pts(fm, c));
                r.verdict(v.fact("model", fm.encode(a), fm.encode(c), rel.orth(a, c)));
                return Ok(r);
            }
            let c = finite_compactification(rel, &b)?;
            r.line(format!(
                "compactification: {} points, {} added",
                c.topology.n(),
                c.topology.n() - c.inner
            ));
            let rep = verify_ls_compactification(rel, &c, &ctx.budget)?;
            r.line(format!("hausdorff: {}", yes(rep.hausdorff)));
            r.line(format!("relation normal: {}", yes(rep.relation_normal)));
            r.verdict(Verdict::new("X is dense", rep.dense, Grade::Exhaustive));
            let mut v = Verdict::new(
                "bornology equals the bounded sets",
                rep.bornology_mismatch.is_none(),
                Grade::Exhaustive,
            );
            if let Some(s) = rep.bornology_mismatch {
                v = with_set(v, "S", pts(fm, s)).fact(
                    "model",
                    fm.encode(s),
                    fm.encode(rel.full()),
                    rel.is_bounded(s),
                );
            }
            r.verdict(v);
            let mut v = Verdict::new(
                "bounded sets are clopen",
                rep.bornology_not_clopen.is_none(),
                Grade::Exhaustive,
            );
            if let Some(s) = rep.bornology_not_clopen {
                v = with_set(v, "S", pts(fm, s));
            }
            r.verdict(v);
            r.line(format!("large-scale compact: {}", rep.ls_compact.reason));
            r.verdict(Verdict::new(
                "large-scale compact",
                rep.ls_compact.compact,
                Grade::Exhaustive,
            ));
            let mut v = Verdict::new(
                "orthogonality read off closures",
                rep.closure_mismatch.is_none(),
                Grade::Exhaustive,
            );
            if let Some((a, d)) = rep.closure_mismatch {
                v = with_set(with_set(v, "C", pts(fm, a)), "D", pts(fm, d)).fact(
                    "model",
                    fm.encode(a),
                    fm.encode(d),
                    rel.orth(a, d),
                );
            }
            r.verdict(v);
        }
        Body::Line(lm) => {
            let cand = match candidate {
                Candidate::Ends => LineCompactification::Ends,
                Candidate::GluedEnds => LineCompactification::GluedEnds,
            };
            let family = line_family(lm);
            let rep = verify_line_compactification(&lm.rel, cand, &family)?;
            r.line(format!(
                "candidate: {}",
                if cand == LineCompactification::Ends {
                    "ℤ ∪ {−∞, +∞}"
                } else {
                    "ℤ ∪ {∞}"
                }
            ));
            r.line(format!("family: {} sets", rep.family_size));
            let mut v = Verdict::new(
                "bornology equals the bounded sets",
                rep.bornology_mismatch.is_none(),
                Grade::Sampled,
            );
            if let Some(s) = &rep.bornology_mismatch {
                v = v.witness("S", encode_line(s), s.to_string());
            }
            r.verdict(v);
            r.line(format!("large-scale compact: {}", rep.ls_compact.reason));
            r.verdict(Verdict::new(
                "large-scale compact",
                rep.ls_compact.compact,
                Grade::Exact,
            ));
            let mut v = Verdict::new(
                "orthogonality read off closures",
                rep.closure_mismatch.is_none(),
                Grade::Sampled,
            );
            if let Some((c, d)) = &rep.closure_mismatch {
                v = v
                    .witness("C", encode_line(c), c.to_string())
                    .witness("D", encode_line(d), d.to_string())
                    .fact("model", encode_line(c), encode_line(d), lm.rel.orth(c, d));
            }
            r.verdict(v);
        }
        Body::Graph(_) => return Err(needs("verify-compactification", model)),
    }
    Ok(r)
}

// ---------------------------------------------------------------- oracle

fn truncated(rule: LineRule, window: i64) -> impl Fn(&EpSet, &EpSet) -> Option<bool> {
    let oracle = TruncatedOracle {
        window,
        ..TruncatedOracle::default()
    };
    move |a, c| match rule {
        LineRule::SetTheoretic => oracle.set_theoretic(a, c).as_bool(),
        _ => oracle.ls_metric(a, c).as_bool(),
    }
}

/// Evaluates one replayed fact by brute force.
fn replay_fact(
    model: &Model,
    q: &crate::report::Query,
    path: &str,
    ctx: &Ctx,
) -> Result<bool, CliError> {
    match &model.body {
        Body::Finite(fm) => {
            let rel = match q.relation.split_once(':') {
                None if q.relation == "model" => fm.rel.clone(),
                Some(("target", m)) => fm.target(fm.map(m)?).clone(),
                Some(("quotient", m)) => quotient_relation(&fm.rel, &fm.map(m)?.map)?,
                _ => {
                    return Err(CliError::Usage(format!(
                        "{path}: unknown relation {:?}",
                        q.relation
                    )))
                }
            };
            let a = model::parse_points(rel.ground(), &q.a, &format!("{path}.a"))?;
            let c = model::parse_points(rel.ground(), &q.c, &format!("{path}.c"))?;
            // tabulate every answer and read the pair off the table
            let table = if rel.n() <= ortho_core::relation::MAX_TABLE_POINTS {
                rel.to_explicit()?
            } else {
                rel
            };
            Ok(table.try_orth(a, c)?)
        }
        Body::Line(lm) => {
            let a = model::line_set(&q.a, &format!("{path}.a"))?;
            let c = model::line_set(&q.c, &format!("{path}.c"))?;
            Ok(truncated(lm.rel.rule, ctx.oracle_window)(&a, &c)
                .unwrap_or_else(|| lm.rel.orth(&a, &c)))
        }
        Body::Graph(gm) => {
            let rule = gm
                .rule
                .clone()
                .ok_or_else(|| CliError::Usage("the graph model names no rule".into()))?;
            let a = gm.vertex_set(&q.a, &format!("{path}.a"))?;
            let c = gm.vertex_set(&q.c, &format!("{path}.c"))?;
            Ok(rule.orth(&gm.ball, &a, &c)?)
        }
    }
}

pub fn replay(model: &Model, report: &Report, ctx: &Ctx) -> Result<Report, CliError> {
    let mut r = Report::new("oracle", model.kind.name());
    r.line(format!("replaying {} report", report.command));
    let mut facts = 0;
    for (i, v) in report.verdicts.iter().enumerate() {
        if v.replay.is_empty() {
            continue;
        }
        let mut out = Verdict::new(format!("replay {}", v.name), true, Grade::Exact);
        for (j, q) in v.replay.iter().enumerate() {
            facts += 1;
            let got = replay_fact(model, q, &format!("verdicts[{i}].replay[{j}]"), ctx)?;
            if got != q.orthogonal {
                out.holds = false;
                out = out.witness("A", q.a.clone(), q.a.to_string()).witness(
                    "C",
                    q.c.clone(),
                    q.c.to_string(),
                );
            }
        }
        r.verdict(out);
    }
    r.line(format!("facts replayed: {facts}"));
    Ok(r)
}

pub fn oracle(model: &Model, samples: usize, ctx: &Ctx) -> Result<Report, CliError> {
    let mut r = Report::new("oracle", model.kind.name());
    match &model.body {
        Body::Finite(fm) => {
            let rel = &fm.rel;
            let full = verify_finite_axioms(rel, &ctx.budget)?;
            let reduced = verify_reduced_axioms(rel, &ctx.budget)?;
            r.line(format!(
                "axioms: {}",
                if full.passed { "pass" } else { "fail" }
            ));
            r.verdict(Verdict::new(
                "full and reduced axiom systems agree",
                full.passed == reduced.passed,
                Grade::Exhaustive,
            ));
            if full.passed {
                let diff = rel.pair_reduction().first_difference(rel)?;
                let mut v = Verdict::new(
                    "singletons determine the relation",
                    diff.is_none(),
                    Grade::Exhaustive,
                );
                if let Some((a, c)) = diff {
                    v = with_set(with_set(v, "A", pts(fm, a)), "C", pts(fm, c)).fact(
                        "model",
                        fm.encode(a),
                        fm.encode(c),
                        rel.orth(a, c),
                    );
                }
                r.verdict(v);
            }
        }
        Body::Line(lm) => {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.budget.seed);
            let named: Vec<&EpSet> = lm.subsets.values().collect();
            let mut pairs: Vec<(EpSet, EpSet)> = named
                .iter()
                .flat_map(|a| named.iter().map(move |c| ((*a).clone(), (*c).clone())))
                .collect();
            pairs.extend((0..samples).map(|_| {
                (
                    EpSet::random(&mut rng, 6, 24),
                    EpSet::random(&mut rng, 6, 24),
                )
            }));
            let check = truncated(lm.rel.rule, ctx.oracle_window);
            let (mut conclusive, mut mismatch) = (0, None);
            for (a, c) in &pairs {
                if let Some(expected) = check(a, c) {
                    conclusive += 1;
                    if expected != lm.rel.orth(a, c) && mismatch.is_none() {
                        mismatch = Some((a.clone(), c.clone()));
                    }
                }
            }
            r.line(format!(
                "pairs: {}, conclusive: {conclusive}, window: {}",
                pairs.len(),
                ctx.oracle_window
            ));
            let mut v = Verdict::new(
                format!(
                    "{} rule agrees with the truncated oracle",
                    lm.rel.rule.name()
                ),
                mismatch.is_none(),
                Grade::Sampled,
            );
            if let Some((a, c)) = mismatch {
                v = v
                    .witness("A", encode_line(&a), a.to_string())
                    .witness("C", encode_line(&c), c.to_string())
                    .fact(
                        "model",
                        encode_line(&a),
                        encode_line(&c),
                        lm.rel.orth(&a, &c),
                    );
            }
            r.verdict(v);
        }
        Body::Graph(_) => return Err(needs("oracle cross-checks", model)),
    }
    Ok(r)
}
