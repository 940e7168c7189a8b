//! Model documents: JSON schema, validation and the loaded structures.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Arc;

use num_rational::Rational64;
use ortho_core::graph::{GraphBall, GraphGenerator, GraphRule, Vertex, VertexSet};
use ortho_core::line::{Direction, EpSet, LineRule, Term};
use ortho_core::maps::{EventuallyAffine, FiniteMap};
use ortho_core::models::{Bornology, EmbeddedPair, FiniteMetric, FiniteTopology};
use ortho_core::relation::{FiniteRelation, LineRelation, OrthTable};
use ortho_core::set::{GroundSet, PointSet};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;

/// The only document version understood.
pub const FORMAT_VERSION: u32 = 1;

/// Graph ball radius when neither the document nor `--radius` gives one.
pub const DEFAULT_RADIUS: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Bornology,
    Topology,
    Metric,
    EmbeddedPair,
    ExplicitRelation,
    SymbolicLine,
    Graph,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Bornology => "bornology",
            Kind::Topology => "topology",
            Kind::Metric => "metric",
            Kind::EmbeddedPair => "embedded-pair",
            Kind::ExplicitRelation => "explicit-relation",
            Kind::SymbolicLine => "symbolic-line",
            Kind::Graph => "graph",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Scale {
    Small,
    Large,
}

/// The raw document. Kind-specific fields are checked after parsing.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct Document {
    version: u32,
    kind: Kind,
    #[serde(default)]
    points: Vec<String>,
    bounded: Option<Vec<Vec<String>>>,
    opens: Option<Vec<Vec<String>>>,
    distances: Option<Vec<Vec<f64>>>,
    positions: Option<Vec<f64>>,
    inner: Option<Vec<String>>,
    scale: Option<Scale>,
    orthogonal_pairs: Option<Vec<(String, String)>>,
    table: Option<Vec<(Vec<String>, Vec<String>)>>,
    rule: Option<Value>,
    generator: Option<Value>,
    radius: Option<u32>,
    #[serde(default)]
    subsets: BTreeMap<String, Value>,
    #[serde(default)]
    maps: BTreeMap<String, Value>,
    #[serde(default)]
    functions: BTreeMap<String, BTreeMap<String, u32>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct FiniteMapSpec {
    values: BTreeMap<String, String>,
    target: Option<Box<Document>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct LineMapSpec {
    slope: i64,
    #[serde(default)]
    intercept: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DirectionSpec {
    Right,
    Left,
    Both,
}

impl From<DirectionSpec> for Direction {
    fn from(d: DirectionSpec) -> Direction {
        match d {
            DirectionSpec::Right => Direction::Right,
            DirectionSpec::Left => Direction::Left,
            DirectionSpec::Both => Direction::Both,
        }
    }
}

impl From<Direction> for DirectionSpec {
    fn from(d: Direction) -> DirectionSpec {
        match d {
            Direction::Right => DirectionSpec::Right,
            Direction::Left => DirectionSpec::Left,
            Direction::Both => DirectionSpec::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub start: i64,
    pub step: i64,
    pub direction: DirectionSpec,
}

/// A symbolic subset of ℤ: a union of progressions and finitely many points.
#[derive(Debug, Clone, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct LineSetSpec {
    #[serde(default)]
    pub terms: Vec<TermSpec>,
    #[serde(default)]
    pub points: Vec<i64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
enum GeneratorSpec {
    Line,
    Grid2d,
    FreeGroup(u8),
    RegularTree(u8),
    Cycle(usize),
    Adjacency(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
enum GraphRuleSpec {
    Freudenthal { k: u32 },
    Higson { r: u32, k: u32 },
    Hyperbolic { r: String },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
enum VertexSelector {
    /// Line or grid vertices with a positive (negative) coordinate.
    Sign {
        sign: SignSpec,
        #[serde(default)]
        axis: usize,
    },
    /// Words or tree paths starting with the given letter or child.
    First(String),
    All(bool),
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "lowercase")]
enum SignSpec {
    Positive,
    Negative,
}

/// A finite map with its target relation (`None`: the model itself).
#[derive(Debug, Clone)]
pub struct MapEntry {
    pub map: FiniteMap,
    pub target: Option<FiniteRelation>,
}

#[derive(Debug, Clone)]
pub struct FiniteModel {
    pub rel: FiniteRelation,
    pub topology: Option<FiniteTopology>,
    pub subsets: BTreeMap<String, PointSet>,
    pub maps: BTreeMap<String, MapEntry>,
    pub functions: BTreeMap<String, Vec<Option<u32>>>,
}

#[derive(Debug, Clone)]
pub struct LineModel {
    pub rel: LineRelation,
    pub subsets: BTreeMap<String, EpSet>,
    pub maps: BTreeMap<String, EventuallyAffine>,
}

#[derive(Debug, Clone)]
pub struct GraphModel {
    pub ball: Arc<GraphBall>,
    pub origin: usize,
    pub rule: Option<GraphRule>,
    pub subsets: BTreeMap<String, VertexSet>,
    labels: HashMap<String, usize>,
}

#[derive(Debug, Clone)]
pub enum Body {
    Finite(FiniteModel),
    Line(LineModel),
    Graph(GraphModel),
}

#[derive(Debug, Clone)]
pub struct Model {
    pub kind: Kind,
    pub body: Body,
}

fn schema(path: impl Into<String>, message: impl std::fmt::Display) -> CliError {
    CliError::Schema {
        path: path.into(),
        message: message.to_string(),
    }
}

fn typed<T: DeserializeOwned>(v: &Value, path: &str) -> Result<T, CliError> {
    serde_path_to_error::deserialize(v.clone()).map_err(|e| {
        let inner = e.path().to_string();
        let full = if inner == "." {
            path.to_string()
        } else {
            format!("{path}.{inner}")
        };
        schema(full, e.into_inner())
    })
}

fn field<T>(value: Option<T>, path: &str, kind: Kind) -> Result<T, CliError> {
    value.ok_or_else(|| schema(path, format!("required for kind {}", kind.name())))
}

/// Reads and validates a model file.
pub fn load(path: &Path, radius: Option<u32>) -> Result<Model, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text, radius)
}

pub fn parse(text: &str, radius: Option<u32>) -> Result<Model, CliError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let doc: Document = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let p = e.path().to_string();
        schema(if p == "." { "document".into() } else { p }, e.into_inner())
    })?;
    build(&doc, radius, "")
}

fn build(doc: &Document, radius: Option<u32>, prefix: &str) -> Result<Model, CliError> {
    let at = |p: &str| format!("{prefix}{p}");
    if doc.version != FORMAT_VERSION {
        return Err(schema(
            at("version"),
            format!(
                "unsupported version {}, expected {FORMAT_VERSION}",
                doc.version
            ),
        ));
    }
    let body = match doc.kind {
        Kind::SymbolicLine => Body::Line(build_line(doc, prefix)?),
        Kind::Graph => Body::Graph(build_graph(doc, radius, prefix)?),
        _ => Body::Finite(build_finite(doc, prefix)?),
    };
    Ok(Model {
        kind: doc.kind,
        body,
    })
}

fn ground_of(doc: &Document, prefix: &str) -> Result<GroundSet, CliError> {
    if doc.points.is_empty() {
        return Err(schema(
            format!("{prefix}points"),
            "a finite model needs at least one point",
        ));
    }
    GroundSet::new(doc.points.iter().cloned()).map_err(|e| schema(format!("{prefix}points"), e))
}

/// Parses a list of point names against `ground`.
pub fn parse_points(ground: &GroundSet, v: &Value, path: &str) -> Result<PointSet, CliError> {
    let names: Vec<String> = typed(v, path)?;
    point_set(ground, &names, path)
}

fn point_set(ground: &GroundSet, names: &[String], path: &str) -> Result<PointSet, CliError> {
    let mut s = PointSet::EMPTY;
    for (i, name) in names.iter().enumerate() {
        let x = ground
            .index_of(name)
            .ok_or_else(|| schema(format!("{path}[{i}]"), format!("unknown point {name:?}")))?;
        s = s.with(x);
    }
    Ok(s)
}

fn point_sets(
    ground: &GroundSet,
    lists: &[Vec<String>],
    path: &str,
) -> Result<Vec<PointSet>, CliError> {
    lists
        .iter()
        .enumerate()
        .map(|(i, l)| point_set(ground, l, &format!("{path}[{i}]")))
        .collect()
}

fn finite_relation(
    doc: &Document,
    prefix: &str,
) -> Result<(FiniteRelation, Option<FiniteTopology>), CliError> {
    let at = |p: &str| format!("{prefix}{p}");
    let kind = doc.kind;
    let ground = ground_of(doc, prefix)?;
    let bad = |p: &str| {
        let p = at(p);
        move |e: ortho_core::Error| schema(p, e)
    };
    Ok(match kind {
        Kind::Bornology => {
            let gens = point_sets(
                &ground,
                field(doc.bounded.as_ref(), &at("bounded"), kind)?,
                &at("bounded"),
            )?;
            let b = Bornology::generated(ground, gens).map_err(bad("bounded"))?;
            (b.relation(), None)
        }
        Kind::Topology => {
            let opens = point_sets(
                &ground,
                field(doc.opens.as_ref(), &at("opens"), kind)?,
                &at("opens"),
            )?;
            let t = FiniteTopology::new(ground, opens).map_err(bad("opens"))?;
            (t.relation(), Some(t))
        }
        Kind::Metric => {
            let m = match (&doc.distances, &doc.positions) {
                (Some(d), None) => {
                    FiniteMetric::new(ground, d.clone()).map_err(bad("distances"))?
                }
                (None, Some(p)) => {
                    if p.len() != ground.len() {
                        return Err(schema(
                            at("positions"),
                            format!("{} positions for {} points", p.len(), ground.len()),
                        ));
                    }
                    let m = FiniteMetric::on_line(p).map_err(bad("positions"))?;
                    let d = (0..p.len())
                        .map(|x| (0..p.len()).map(|y| m.distance(x, y)).collect())
                        .collect();
                    FiniteMetric::new(ground, d).map_err(bad("positions"))?
                }
                _ => {
                    return Err(schema(
                        at("distances"),
                        "give exactly one of distances and positions",
                    ))
                }
            };
            (m.relation(), None)
        }
        Kind::EmbeddedPair => {
            let opens = point_sets(
                &ground,
                field(doc.opens.as_ref(), &at("opens"), kind)?,
                &at("opens"),
            )?;
            let inner = point_set(
                &ground,
                field(doc.inner.as_ref(), &at("inner"), kind)?,
                &at("inner"),
            )?;
            let t = FiniteTopology::new(ground, opens).map_err(bad("opens"))?;
            let pair = EmbeddedPair::new(t, inner).map_err(bad("inner"))?;
            let (ss, ls) = pair.relations();
            match doc.scale.unwrap_or(Scale::Large) {
                Scale::Small => (ss, None),
                Scale::Large => (ls, None),
            }
        }
        Kind::ExplicitRelation => match (&doc.orthogonal_pairs, &doc.table) {
            (Some(pairs), None) => {
                let mut idx = Vec::new();
                for (i, (x, y)) in pairs.iter().enumerate() {
                    let p = at(&format!("orthogonal-pairs[{i}]"));
                    let find = |name: &String| {
                        ground
                            .index_of(name)
                            .ok_or_else(|| schema(p.clone(), format!("unknown point {name:?}")))
                    };
                    idx.push((find(x)?, find(y)?));
                }
                let rel = FiniteRelation::from_pair_fn(ground, "explicit pairs", |x, y| {
                    idx.contains(&(x, y)) || idx.contains(&(y, x))
                });
                (rel, None)
            }
            (None, Some(rows)) => {
                let mut entries = Vec::new();
                for (i, (a, c)) in rows.iter().enumerate() {
                    let p = at(&format!("table[{i}]"));
                    entries.push((
                        point_set(&ground, a, &format!("{p}[0]"))?,
                        point_set(&ground, c, &format!("{p}[1]"))?,
                    ));
                }
                let table = OrthTable::from_fn(ground.len(), |a, c| entries.contains(&(a, c)))
                    .map_err(bad("table"))?;
                let rel = FiniteRelation::explicit_raw(ground, "explicit table", table)
                    .map_err(bad("table"))?;
                (rel, None)
            }
            _ => {
                return Err(schema(
                    at("orthogonal-pairs"),
                    "give exactly one of orthogonal-pairs and table",
                ))
            }
        },
        Kind::SymbolicLine | Kind::Graph => unreachable!("not a finite kind"),
    })
}

fn build_finite(doc: &Document, prefix: &str) -> Result<FiniteModel, CliError> {
    let at = |p: &str| format!("{prefix}{p}");
    let (rel, topology) = finite_relation(doc, prefix)?;
    let ground = rel.ground().clone();
    let mut subsets = BTreeMap::new();
    for (name, v) in &doc.subsets {
        let p = at(&format!("subsets.{name}"));
        let names: Vec<String> = typed(v, &p)?;
        subsets.insert(name.clone(), point_set(&ground, &names, &p)?);
    }
    let mut maps = BTreeMap::new();
    for (name, v) in &doc.maps {
        let p = at(&format!("maps.{name}"));
        let spec: FiniteMapSpec = typed(v, &p)?;
        let target = match &spec.target {
            Some(t) => match build(t, None, &format!("{p}.target."))?.body {
                Body::Finite(m) => Some(m.rel),
                _ => {
                    return Err(schema(
                        format!("{p}.target.kind"),
                        "map targets must be finite models",
                    ))
                }
            },
            None => None,
        };
        let target_ground = target.as_ref().map_or(&ground, |t| t.ground()).clone();
        let mut values = vec![usize::MAX; ground.len()];
        for (x, y) in &spec.values {
            let xi = ground.index_of(x).ok_or_else(|| {
                schema(
                    format!("{p}.values.{x}"),
                    format!("unknown source point {x:?}"),
                )
            })?;
            values[xi] = target_ground.index_of(y).ok_or_else(|| {
                schema(
                    format!("{p}.values.{x}"),
                    format!("unknown target point {y:?}"),
                )
            })?;
        }
        if let Some(x) = values.iter().position(|&v| v == usize::MAX) {
            return Err(schema(
                format!("{p}.values"),
                format!("no value for point {:?}", ground.name(x)),
            ));
        }
        let map = FiniteMap::new(ground.clone(), target_ground, values)
            .map_err(|e| schema(p.clone(), e))?;
        maps.insert(name.clone(), MapEntry { map, target });
    }
    let mut functions = BTreeMap::new();
    for (name, levels) in &doc.functions {
        let mut out = vec![None; ground.len()];
        for (x, &level) in levels {
            let xi = ground.index_of(x).ok_or_else(|| {
                schema(
                    at(&format!("functions.{name}.{x}")),
                    format!("unknown point {x:?}"),
                )
            })?;
            out[xi] = Some(level);
        }
        functions.insert(name.clone(), out);
    }
    Ok(FiniteModel {
        rel,
        topology,
        subsets,
        maps,
        functions,
    })
}

fn line_rule(v: Option<&Value>, path: &str) -> Result<LineRule, CliError> {
    let Some(v) = v else {
        return Ok(LineRule::Metric);
    };
    let name: String = typed(v, path)?;
    Ok(match name.as_str() {
        "metric" => LineRule::Metric,
        "set-theoretic" => LineRule::SetTheoretic,
        "group" => LineRule::Group { f_cap: 64 },
        "simple-ends" => LineRule::SimpleEnds,
        "ends-compactification" => LineRule::EndsCompactification,
        "resemblance" => LineRule::Resemblance,
        other => return Err(schema(path, format!("unknown line rule {other:?}"))),
    })
}

/// Parses a symbolic subset: a named shorthand or a term object.
pub fn line_set(v: &Value, path: &str) -> Result<EpSet, CliError> {
    if let Value::String(s) = v {
        return Ok(match s.as_str() {
            "all" => EpSet::all(),
            "empty" => EpSet::empty(),
            "naturals" => EpSet::naturals(),
            "negative-naturals" => EpSet::negative_naturals(),
            "evens" => EpSet::progression(0, 2, Direction::Both),
            "odds" => EpSet::progression(1, 2, Direction::Both),
            other => return Err(schema(path, format!("unknown set shorthand {other:?}"))),
        });
    }
    let spec: LineSetSpec = typed(v, path)?;
    let terms: Vec<Term> = spec
        .terms
        .iter()
        .map(|t| Term {
            start: t.start,
            step: t.step,
            direction: t.direction.into(),
        })
        .collect();
    EpSet::from_terms(&terms, &spec.points).map_err(|e| schema(path, e))
}

pub fn encode_line(a: &EpSet) -> Value {
    let (terms, points) = a.to_terms();
    let spec = LineSetSpec {
        terms: terms
            .iter()
            .map(|t| TermSpec {
                start: t.start,
                step: t.step,
                direction: t.direction.into(),
            })
            .collect(),
        points,
    };
    serde_json::to_value(spec).expect("plain data serializes")
}

fn build_line(doc: &Document, prefix: &str) -> Result<LineModel, CliError> {
    let at = |p: &str| format!("{prefix}{p}");
    let rel = LineRelation::new(line_rule(doc.rule.as_ref(), &at("rule"))?);
    let mut subsets = BTreeMap::new();
    for (name, v) in &doc.subsets {
        subsets.insert(name.clone(), line_set(v, &at(&format!("subsets.{name}")))?);
    }
    let mut maps = BTreeMap::new();
    for (name, v) in &doc.maps {
        let spec: LineMapSpec = typed(v, &at(&format!("maps.{name}")))?;
        maps.insert(
            name.clone(),
            EventuallyAffine::affine(spec.slope, spec.intercept),
        );
    }
    Ok(LineModel { rel, subsets, maps })
}

fn build_graph(doc: &Document, radius: Option<u32>, prefix: &str) -> Result<GraphModel, CliError> {
    let at = |p: &str| format!("{prefix}{p}");
    let gen_path = at("generator");
    let spec: GeneratorSpec = typed(
        field(doc.generator.as_ref(), &gen_path, doc.kind)?,
        &gen_path,
    )?;
    let generator = match spec {
        GeneratorSpec::Line => GraphGenerator::Line,
        GeneratorSpec::Grid2d => GraphGenerator::Grid2d,
        GeneratorSpec::FreeGroup(k) => GraphGenerator::FreeGroup(k),
        GeneratorSpec::RegularTree(k) => GraphGenerator::RegularTree(k),
        GeneratorSpec::Cycle(n) => GraphGenerator::cycle(n).map_err(|e| schema(&gen_path, e))?,
        GeneratorSpec::Adjacency(adj) => {
            GraphGenerator::finite(adj).map_err(|e| schema(&gen_path, e))?
        }
    };
    let r = radius.or(doc.radius).unwrap_or(DEFAULT_RADIUS);
    let ball = GraphBall::new(generator, r).map_err(|e| schema(at("radius"), e))?;
    let origin = ball
        .index_of(&ball.generator().origin())
        .expect("the origin lies in its own ball");
    let rule = match &doc.rule {
        None => None,
        Some(v) => Some(match typed::<GraphRuleSpec>(v, &at("rule"))? {
            GraphRuleSpec::Freudenthal { k } => GraphRule::Freudenthal { k },
            GraphRuleSpec::Higson { r, k } => GraphRule::Higson { r, k },
            GraphRuleSpec::Hyperbolic { r } => GraphRule::Hyperbolic {
                basepoint: origin,
                r: r.parse::<Rational64>()
                    .map_err(|e| schema(at("rule.hyperbolic.r"), e))?,
            },
        }),
    };
    let labels: HashMap<String, usize> = ball
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| (v.to_string(), i))
        .collect();
    let mut model = GraphModel {
        ball: Arc::new(ball),
        origin,
        rule,
        subsets: BTreeMap::new(),
        labels,
    };
    for (name, v) in &doc.subsets {
        let s = model.vertex_set(v, &at(&format!("subsets.{name}")))?;
        model.subsets.insert(name.clone(), s);
    }
    Ok(model)
}

impl GraphModel {
    /// Parses a vertex list (labels) or a selector object.
    pub fn vertex_set(&self, v: &Value, path: &str) -> Result<VertexSet, CliError> {
        let ball = &self.ball;
        if v.is_array() {
            let labels: Vec<String> = typed(v, path)?;
            let mut idx = Vec::with_capacity(labels.len());
            for (i, l) in labels.iter().enumerate() {
                idx.push(*self.labels.get(l).ok_or_else(|| {
                    schema(
                        format!("{path}[{i}]"),
                        format!("no vertex {l:?} in the ball"),
                    )
                })?);
            }
            return Ok(VertexSet::from_indices(ball.len(), idx));
        }
        Ok(match typed::<VertexSelector>(v, path)? {
            VertexSelector::All(true) => ball.all_vertices(),
            VertexSelector::All(false) => ball.no_vertices(),
            VertexSelector::Sign { sign, axis } => {
                let keep = move |x: i64| match sign {
                    SignSpec::Positive => x > 0,
                    SignSpec::Negative => x < 0,
                };
                ball.select(|vx| match (vx, axis) {
                    (Vertex::Int(n), 0) => keep(*n),
                    (Vertex::Pair(x, _), 0) => keep(*x),
                    (Vertex::Pair(_, y), 1) => keep(*y),
                    _ => false,
                })
            }
            VertexSelector::First(letter) => ball.select(|vx| match vx {
                Vertex::Word(w) if !w.is_empty() => {
                    vx.to_string().chars().next().map(String::from) == Some(letter.clone())
                }
                Vertex::Path(p) if !p.is_empty() => p[0].to_string() == letter,
                _ => false,
            }),
        })
    }

    pub fn encode(&self, s: &VertexSet) -> Value {
        Value::Array(
            s.iter()
                .map(|i| Value::String(self.ball.vertex(i).to_string()))
                .collect(),
        )
    }

    pub fn show(&self, s: &VertexSet) -> String {
        let labels: Vec<String> = s
            .iter()
            .take(12)
            .map(|i| self.ball.vertex(i).to_string())
            .collect();
        let more = if s.len() > 12 {
            format!(", … ({} vertices)", s.len())
        } else {
            String::new()
        };
        format!("{{{}{more}}}", labels.join(", "))
    }
}

impl FiniteModel {
    pub fn encode(&self, s: PointSet) -> Value {
        encode_points(self.rel.ground(), s)
    }

    pub fn show(&self, s: PointSet) -> String {
        self.rel.ground().format(s)
    }

    pub fn subset(&self, name: &str) -> Result<PointSet, CliError> {
        self.subsets
            .get(name)
            .copied()
            .ok_or_else(|| CliError::Usage(format!("no subset named {name:?} in the model")))
    }

    pub fn map(&self, name: &str) -> Result<&MapEntry, CliError> {
        self.maps
            .get(name)
            .ok_or_else(|| CliError::Usage(format!("no map named {name:?} in the model")))
    }

    pub fn target<'a>(&'a self, entry: &'a MapEntry) -> &'a FiniteRelation {
        entry.target.as_ref().unwrap_or(&self.rel)
    }
}

pub fn encode_points(ground: &GroundSet, s: PointSet) -> Value {
    json!(ground.member_names(s))
}

impl LineModel {
    pub fn subset(&self, name: &str) -> Result<&EpSet, CliError> {
        self.subsets
            .get(name)
            .ok_or_else(|| CliError::Usage(format!("no subset named {name:?} in the model")))
    }

    pub fn map(&self, name: &str) -> Result<&EventuallyAffine, CliError> {
        self.maps
            .get(name)
            .ok_or_else(|| CliError::Usage(format!("no map named {name:?} in the model")))
    }
}

impl GraphModel {
    pub fn subset(&self, name: &str) -> Result<&VertexSet, CliError> {
        self.subsets
            .get(name)
            .ok_or_else(|| CliError::Usage(format!("no subset named {name:?} in the model")))
    }
}
