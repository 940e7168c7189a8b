//! Graph generators and breadth-first balls.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::{Error, Result};

/// Most vertices a ball may hold.
pub const MAX_BALL_VERTICES: usize = 2_000_000;
/// Most vertices for which all pairwise distances are tabulated.
pub const MAX_PAIR_TABLE_VERTICES: usize = 6_000;

/// A vertex of a generated graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Int(i64),
    Pair(i64, i64),
    /// Reduced word; letter `2i` is the generator `i`, `2i + 1` its inverse.
    Word(Vec<u8>),
    /// Path from the root of a regular tree as child indices.
    Path(Vec<u8>),
    Index(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Int(n) => write!(f, "{n}"),
            Vertex::Pair(x, y) => write!(f, "({x},{y})"),
            Vertex::Word(w) if w.is_empty() => f.write_str("e"),
            Vertex::Word(w) => {
                for &l in w {
                    let c = (b'a' + l / 2) as char;
                    let c = if l % 2 == 1 {
                        c.to_ascii_uppercase()
                    } else {
                        c
                    };
                    write!(f, "{c}")?;
                }
                Ok(())
            }
            Vertex::Path(p) if p.is_empty() => f.write_str("root"),
            Vertex::Path(p) => {
                let parts: Vec<String> = p.iter().map(u8::to_string).collect();
                f.write_str(&parts.join("."))
            }
            Vertex::Index(i) => write!(f, "v{i}"),
        }
    }
}

/// A locally finite graph with a distinguished origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphGenerator {
    /// ℤ with `n ~ n ± 1`.
    Line,
    /// ℤ² with the four axis neighbors.
    Grid2d,
    /// Cayley graph of the free group on `k` generators.
    FreeGroup(u8),
    /// The tree in which every vertex has degree `k`.
    RegularTree(u8),
    /// An explicit symmetric adjacency list; the origin is vertex 0.
    Finite(Vec<Vec<usize>>),
}

impl GraphGenerator {
    /// Validates parameters and, for explicit graphs, symmetry.
    pub fn finite(adjacency: Vec<Vec<usize>>) -> Result<GraphGenerator> {
        let n = adjacency.len();
        if n == 0 {
            return Err(Error::invalid("a finite graph needs at least one vertex"));
        }
        for (u, nbrs) in adjacency.iter().enumerate() {
            for &v in nbrs {
                if v >= n {
                    return Err(Error::invalid(format!(
                        "edge {u}-{v} leaves the vertex range 0..{n}"
                    )));
                }
                if !adjacency[v].contains(&u) {
                    return Err(Error::invalid(format!("edge {u}-{v} has no reverse edge")));
                }
            }
        }
        Ok(GraphGenerator::Finite(adjacency))
    }

    /// The cycle on `n` vertices.
    pub fn cycle(n: usize) -> Result<GraphGenerator> {
        if n < 3 {
            return Err(Error::invalid("a cycle needs at least 3 vertices"));
        }
        GraphGenerator::finite((0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect())
    }

    pub fn name(&self) -> String {
        match self {
            GraphGenerator::Line => "line".into(),
            GraphGenerator::Grid2d => "grid2d".into(),
            GraphGenerator::FreeGroup(k) => format!("free-group({k})"),
            GraphGenerator::RegularTree(k) => format!("regular-tree({k})"),
            GraphGenerator::Finite(adj) => format!("finite({})", adj.len()),
        }
    }

    pub fn origin(&self) -> Vertex {
        match self {
            GraphGenerator::Line => Vertex::Int(0),
            GraphGenerator::Grid2d => Vertex::Pair(0, 0),
            GraphGenerator::FreeGroup(_) => Vertex::Word(Vec::new()),
            GraphGenerator::RegularTree(_) => Vertex::Path(Vec::new()),
            GraphGenerator::Finite(_) => Vertex::Index(0),
        }
    }

    pub fn neighbors(&self, v: &Vertex) -> Vec<Vertex> {
        match (self, v) {
            (GraphGenerator::Line, Vertex::Int(n)) => vec![Vertex::Int(n - 1), Vertex::Int(n + 1)],
            (GraphGenerator::Grid2d, Vertex::Pair(x, y)) => vec![
                Vertex::Pair(x - 1, *y),
                Vertex::Pair(x + 1, *y),
                Vertex::Pair(*x, y - 1),
                Vertex::Pair(*x, y + 1),
            ],
            (GraphGenerator::FreeGroup(k), Vertex::Word(w)) => (0..2 * k)
                .map(|l| {
                    let mut next = w.clone();
                    if w.last() == Some(&(l ^ 1)) {
                        next.pop();
                    } else {
                        next.push(l);
                    }
                    Vertex::Word(next)
                })
                .collect(),
            (GraphGenerator::RegularTree(k), Vertex::Path(p)) => {
                let children = if p.is_empty() {
                    *k
                } else {
                    k.saturating_sub(1)
                };
                let mut out: Vec<Vertex> = (0..children)
                    .map(|c| {
                        let mut q = p.clone();
                        q.push(c);
                        Vertex::Path(q)
                    })
                    .collect();
                if !p.is_empty() {
                    out.push(Vertex::Path(p[..p.len() - 1].to_vec()));
                }
                out
            }
            (GraphGenerator::Finite(adj), Vertex::Index(i)) => {
                adj[*i].iter().map(|&j| Vertex::Index(j)).collect()
            }
            _ => Vec::new(),
        }
    }

    /// Balls about the origin contain a geodesic between any two of their
    /// points: true for trees and for the ℓ¹ diamonds of the grid.
    pub fn convex_balls(&self) -> bool {
        !matches!(self, GraphGenerator::Finite(_))
    }
}

/// A set of ball vertices, indexed as in the ball.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    pub fn empty(len: usize) -> VertexSet {
        VertexSet(FixedBitSet::with_capacity(len))
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> VertexSet {
        let mut s = VertexSet::empty(len);
        for i in indices {
            s.0.insert(i);
        }
        s
    }

    /// Size of the ball this set lives in.
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn insert(&mut self, i: usize) {
        self.0.insert(i);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.0.clone();
        s.union_with(&other.0);
        VertexSet(s)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.0.clone();
        s.intersect_with(&other.0);
        VertexSet(s)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.0.clone();
        s.difference_with(&other.0);
        VertexSet(s)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.0.is_disjoint(&other.0)
    }
}

/// The induced subgraph on the vertices within `radius` of the origin.
#[derive(Debug)]
pub struct GraphBall {
    generator: GraphGenerator,
    radius: u32,
    vertices: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    depth: Vec<u32>,
    adjacency: Vec<Vec<usize>>,
    /// No vertex lies at distance `radius + 1`: the ball is a whole component.
    complete: bool,
    pair_table: OnceLock<Vec<u16>>,
}

impl GraphBall {
    pub fn new(generator: GraphGenerator, radius: u32) -> Result<GraphBall> {
        let origin = generator.origin();
        let mut vertices = vec![origin.clone()];
        let mut index = HashMap::from([(origin, 0usize)]);
        let mut depth = vec![0u32];
        let mut queue = VecDeque::from([0usize]);
        let mut complete = true;
        while let Some(u) = queue.pop_front() {
            let d = depth[u];
            for w in generator.neighbors(&vertices[u]) {
                if index.contains_key(&w) {
                    continue;
                }
                if d == radius {
                    complete = false;
                    continue;
                }
                if vertices.len() == MAX_BALL_VERTICES {
                    return Err(Error::budget(
                        "ball vertices",
                        vertices.len() + 1,
                        MAX_BALL_VERTICES,
                    ));
                }
                index.insert(w.clone(), vertices.len());
                vertices.push(w);
                depth.push(d + 1);
                queue.push_back(vertices.len() - 1);
            }
        }
        let adjacency = vertices
            .iter()
            .map(|v| {
                let mut nbrs: Vec<usize> = generator
                    .neighbors(v)
                    .iter()
                    .filter_map(|w| index.get(w).copied())
                    .collect();
                nbrs.sort_unstable();
                nbrs.dedup();
                nbrs
            })
            .collect();
        Ok(GraphBall {
            generator,
            radius,
            vertices,
            index,
            depth,
            adjacency,
            complete,
            pair_table: OnceLock::new(),
        })
    }

    pub fn generator(&self) -> &GraphGenerator {
        &self.generator
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// BFS distance from the origin.
    pub fn depth(&self, i: usize) -> u32 {
        self.depth[i]
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::from_indices(self.len(), 0..self.len())
    }

    pub fn no_vertices(&self) -> VertexSet {
        VertexSet::empty(self.len())
    }

    /// Vertices whose label satisfies `pred`.
    pub fn select(&self, pred: impl Fn(&Vertex) -> bool) -> VertexSet {
        VertexSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&i| pred(&self.vertices[i])),
        )
    }

    /// Vertices within distance `< k` of the origin.
    pub fn inner_ball(&self, k: u32) -> VertexSet {
        VertexSet::from_indices(self.len(), (0..self.len()).filter(|&i| self.depth[i] < k))
    }

    pub fn sphere(&self, k: u32) -> VertexSet {
        VertexSet::from_indices(self.len(), (0..self.len()).filter(|&i| self.depth[i] == k))
    }

    pub fn check_vertices(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.len() {
            return Err(Error::invalid(format!(
                "vertex set over {} vertices used with a ball of {}",
                s.universe(),
                self.len()
            )));
        }
        Ok(())
    }

    /// Distances inside the ball from every vertex of `sources`.
    pub fn bfs_from(&self, sources: &VertexSet, limit: u32) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.len()];
        let mut queue = VecDeque::new();
        for s in sources.iter() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have distances");
            if d == limit {
                continue;
            }
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices within ball distance `r` of `s`.
    pub fn dilate(&self, s: &VertexSet, r: u32) -> VertexSet {
        let dist = self.bfs_from(s, r);
        VertexSet::from_indices(self.len(), (0..self.len()).filter(|&i| dist[i].is_some()))
    }

    fn pair_table(&self) -> Result<&[u16]> {
        if self.len() > MAX_PAIR_TABLE_VERTICES {
            return Err(Error::budget(
                "pair-distance vertices",
                self.len(),
                MAX_PAIR_TABLE_VERTICES,
            ));
        }
        Ok(self.pair_table.get_or_init(|| {
            let n = self.len();
            let mut table = vec![u16::MAX; n * n];
            for u in 0..n {
                let dist = self.bfs_from(&VertexSet::from_indices(n, [u]), u32::MAX);
                for (v, d) in dist.into_iter().enumerate() {
                    if let Some(d) = d {
                        table[u * n + v] = d as u16;
                    }
                }
            }
            table
        }))
    }

    /// Distance inside the ball, and whether it is certified to equal the
    /// distance in the whole graph.
    pub fn ball_distance(&self, u: usize, v: usize) -> Result<(u32, bool)> {
        let n = self.len();
        let d = self.pair_table()?[u * n + v];
        let (du, dv) = (self.depth[u], self.depth[v]);
        if d == u16::MAX {
            return Ok((u32::MAX, self.complete));
        }
        let d = d as u32;
        // a path leaving the ball has length at least 2R + 2 - du - dv
        let certified = self.complete
            || self.generator.convex_balls()
            || du + dv <= self.radius
            || d + du + dv <= 2 * self.radius;
        Ok((d, certified))
    }

    /// Certified graph distance.
    pub fn distance(&self, u: usize, v: usize) -> Result<u32> {
        let (d, certified) = self.ball_distance(u, v)?;
        if !certified || d == u32::MAX {
            return Err(Error::Uncertified(
                format!("distance {}-{}", self.vertices[u], self.vertices[v]),
                "a geodesic may leave the explored ball".into(),
            ));
        }
        Ok(d)
    }

    /// Edge list of the subgraph induced on `s`, one `u v` line per edge.
    pub fn edge_list(&self, s: &VertexSet) -> String {
        let mut out = String::new();
        for u in s.iter() {
            for &w in &self.adjacency[u] {
                if u < w && s.contains(w) {
                    out.push_str(&format!("{} {}\n", self.vertices[u], self.vertices[w]));
                }
            }
        }
        out
    }
}
