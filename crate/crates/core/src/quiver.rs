//! Finite acyclic quivers whose underlying graph is a tree.
//!
//! Vertices carry canonical labels: plain naturals `1..` for path vertices and
//! `n+` / `n-` for the two fork tips of a type-D quiver. Vertex and arrow lists
//! are kept sorted, so structural equality is equality of quivers.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex label. Ordering is `Num < Plus < Minus`, which places the fork
/// tips after the path vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Num(u32),
    Plus(u32),
    Minus(u32),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Num(i) => write!(f, "{i}"),
            Vertex::Plus(i) => write!(f, "{i}+"),
            Vertex::Minus(i) => write!(f, "{i}-"),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidQuiver(format!("bad vertex label {s:?}"));
        if let Some(rest) = s.strip_suffix('+') {
            rest.parse().map(Vertex::Plus).map_err(|_| bad())
        } else if let Some(rest) = s.strip_suffix('-') {
            rest.parse().map(Vertex::Minus).map_err(|_| bad())
        } else {
            s.parse().map(Vertex::Num).map_err(|_| bad())
        }
    }
}

impl Serialize for Vertex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A connected quiver without loops or cycles (the underlying graph is a tree).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuiverJson")]
pub struct Quiver {
    vertices: Vec<Vertex>,
    arrows: Vec<(Vertex, Vertex)>,
}

#[derive(Deserialize)]
struct QuiverJson {
    vertices: Vec<Vertex>,
    arrows: Vec<(Vertex, Vertex)>,
}

impl TryFrom<QuiverJson> for Quiver {
    type Error = Error;

    fn try_from(json: QuiverJson) -> Result<Self> {
        Quiver::new(json.vertices, json.arrows)
    }
}

impl Quiver {
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        arrows: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let mut vertices: Vec<Vertex> = vertices.into_iter().collect();
        let mut arrows: Vec<(Vertex, Vertex)> = arrows.into_iter().collect();
        vertices.sort_unstable();
        arrows.sort_unstable();
        if vertices.is_empty() {
            return Err(Error::InvalidQuiver("no vertices".into()));
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidQuiver("duplicate vertex label".into()));
        }
        let mut edges = BTreeSet::new();
        for &(s, t) in &arrows {
            for v in [s, t] {
                if vertices.binary_search(&v).is_err() {
                    return Err(Error::UnknownVertex(v));
                }
            }
            if s == t {
                return Err(Error::InvalidQuiver(format!("loop at {s}")));
            }
            if !edges.insert((s.min(t), s.max(t))) {
                return Err(Error::InvalidQuiver(format!("multiple edges between {s} and {t}")));
            }
        }
        let q = Quiver { vertices, arrows };
        if q.arrows.len() + 1 != q.vertices.len() || !q.is_connected() {
            return Err(Error::InvalidQuiver("underlying graph is not a tree".into()));
        }
        Ok(q)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for w in self.neighbors(self.vertices[i]) {
                let j = self.index_of(w).unwrap();
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(Vertex, Vertex)] {
        &self.arrows
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.index_of(v).is_some()
    }

    pub fn arrow_index(&self, source: Vertex, target: Vertex) -> Option<usize> {
        self.arrows.binary_search(&(source, target)).ok()
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .arrows
            .iter()
            .filter_map(|&(s, t)| {
                if s == v {
                    Some(t)
                } else if t == v {
                    Some(s)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Arrows ending at `v`, as `(arrow index, source)`.
    pub fn incoming(&self, v: Vertex) -> Vec<(usize, Vertex)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(|(_, &(_, t))| t == v)
            .map(|(i, &(s, _))| (i, s))
            .collect()
    }

    /// Arrows starting at `v`, as `(arrow index, target)`.
    pub fn outgoing(&self, v: Vertex) -> Vec<(usize, Vertex)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(|(_, &(s, _))| s == v)
            .map(|(i, &(_, t))| (i, t))
            .collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.arrows.iter().filter(|&&(s, t)| s == v || t == v).count()
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.contains(v) && self.degree(v) == 1
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.contains(v) && self.arrows.iter().all(|&(s, _)| s != v)
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        self.contains(v) && self.arrows.iter().all(|&(_, t)| t != v)
    }

    /// `(sinks, sources)`.
    pub fn sinks_sources(&self) -> (BTreeSet<Vertex>, BTreeSet<Vertex>) {
        let sinks = self.vertices.iter().copied().filter(|&v| self.is_sink(v)).collect();
        let sources = self.vertices.iter().copied().filter(|&v| self.is_source(v)).collect();
        (sinks, sources)
    }

    /// Reverses every arrow incident to `x`.
    pub fn reflect(&self, x: Vertex) -> Result<Quiver> {
        self.check(x)?;
        let mut arrows: Vec<_> = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == x || t == x { (t, s) } else { (s, t) })
            .collect();
        arrows.sort_unstable();
        Ok(Quiver { vertices: self.vertices.clone(), arrows })
    }

    /// Removes a leaf together with its arrow.
    pub fn delete_vertex(&self, x: Vertex) -> Result<Quiver> {
        self.check(x)?;
        if self.len() == 1 || self.degree(x) != 1 {
            return Err(Error::Disconnects(x));
        }
        Ok(Quiver {
            vertices: self.vertices.iter().copied().filter(|&v| v != x).collect(),
            arrows: self.arrows.iter().copied().filter(|&(s, t)| s != x && t != x).collect(),
        })
    }

    /// Undirected edges as `(min, max)` pairs in sorted order. For the
    /// canonical A and D quivers this is path order followed by the fork edges.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut edges: Vec<_> = self.arrows.iter().map(|&(s, t)| (s.min(t), s.max(t))).collect();
        edges.sort_unstable();
        edges
    }

    /// One bit per edge of [`Quiver::edges`]; set when the arrow points from the
    /// smaller label to the larger one.
    pub fn orientation(&self) -> Vec<bool> {
        self.edges()
            .into_iter()
            .map(|(a, b)| self.arrow_index(a, b).is_some())
            .collect()
    }

    pub fn with_orientation(&self, bits: &[bool]) -> Result<Quiver> {
        let edges = self.edges();
        if bits.len() != edges.len() {
            return Err(Error::OrientationLength { expected: edges.len(), got: bits.len() });
        }
        Ok(Self::from_edges(self.vertices.clone(), &edges, bits))
    }

    fn from_edges(vertices: Vec<Vertex>, edges: &[(Vertex, Vertex)], bits: &[bool]) -> Quiver {
        let mut arrows: Vec<_> = edges
            .iter()
            .zip(bits)
            .map(|(&(a, b), &fwd)| if fwd { (a, b) } else { (b, a) })
            .collect();
        arrows.sort_unstable();
        Quiver { vertices, arrows }
    }

    /// Every orientation of the underlying tree, in increasing order of the
    /// orientation bits read as a binary number (first edge most significant).
    pub fn all_orientations(&self) -> Vec<Quiver> {
        let edges = self.edges();
        let m = edges.len();
        (0..1usize << m)
            .map(|code| {
                let bits: Vec<bool> = (0..m).map(|k| code >> (m - 1 - k) & 1 == 1).collect();
                Self::from_edges(self.vertices.clone(), &edges, &bits)
            })
            .collect()
    }

    pub fn same_underlying_graph(&self, other: &Quiver) -> bool {
        self.vertices == other.vertices && self.edges() == other.edges()
    }

    /// Shortest sequence of sink reflections turning `self` into `target`.
    /// Breadth-first over orientations, trying sinks in increasing label order.
    pub fn sink_reflection_path(&self, target: &Quiver) -> Result<Vec<Vertex>> {
        if !self.same_underlying_graph(target) {
            return Err(Error::DifferentUnderlyingGraph);
        }
        let start = self.clone();
        let mut parent: HashMap<Quiver, (Quiver, Vertex)> = HashMap::new();
        let mut queue = VecDeque::from([start.clone()]);
        let mut seen = BTreeSet::from([start.orientation()]);
        while let Some(q) = queue.pop_front() {
            if &q == target {
                let mut path = Vec::new();
                let mut cur = q;
                while let Some((prev, x)) = parent.get(&cur) {
                    path.push(*x);
                    cur = prev.clone();
                }
                path.reverse();
                return Ok(path);
            }
            let (sinks, _) = q.sinks_sources();
            for x in sinks {
                let next = q.reflect(x)?;
                if seen.insert(next.orientation()) {
                    parent.insert(next.clone(), (q.clone(), x));
                    queue.push_back(next);
                }
            }
        }
        Err(Error::Internal("orientation unreachable by sink reflections".into()))
    }

    /// Recognizes the underlying graph as a Dynkin diagram of type A or D.
    pub fn dynkin_shape(&self) -> Result<DynkinShape> {
        if self.len() == 1 {
            return Ok(DynkinShape { kind: DynkinKind::A, order: self.vertices.clone() });
        }
        let branch: Vec<Vertex> =
            self.vertices.iter().copied().filter(|&v| self.degree(v) >= 3).collect();
        match branch.as_slice() {
            [] => {
                let start = self.vertices.iter().copied().find(|&v| self.degree(v) == 1).unwrap();
                let order = self.walk(start, None);
                Ok(DynkinShape { kind: DynkinKind::A, order })
            }
            &[c] if self.degree(c) == 3 => {
                let mut legs: Vec<Vec<Vertex>> =
                    self.neighbors(c).into_iter().map(|w| self.walk(w, Some(c))).collect();
                // longest leg first; ties go to the smallest neighbor label
                legs.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
                if legs[1].len() != 1 || legs[2].len() != 1 {
                    return Err(Error::NotTypeAD);
                }
                let mut order: Vec<Vertex> = legs[0].iter().rev().copied().collect();
                order.push(c);
                order.push(legs[1][0]);
                order.push(legs[2][0]);
                Ok(DynkinShape { kind: DynkinKind::D, order })
            }
            _ => Err(Error::NotTypeAD),
        }
    }

    /// Walks a chain of degree-2 vertices starting at `start`, away from `from`.
    fn walk(&self, start: Vertex, from: Option<Vertex>) -> Vec<Vertex> {
        let mut out = vec![start];
        let mut prev = from;
        let mut cur = start;
        loop {
            let next: Vec<Vertex> =
                self.neighbors(cur).into_iter().filter(|&w| Some(w) != prev).collect();
            match next.as_slice() {
                [w] => {
                    out.push(*w);
                    prev = Some(cur);
                    cur = *w;
                }
                _ => return out,
            }
        }
    }

    /// Renames vertices through `map` (which must be injective on this quiver).
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Result<Quiver> {
        Quiver::new(
            self.vertices.iter().map(|&v| map(v)),
            self.arrows.iter().map(|&(s, t)| (map(s), map(t))),
        )
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            return write!(f, "{}", self.vertices[0]);
        }
        let parts: Vec<String> = self.arrows.iter().map(|(s, t)| format!("{s}->{t}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DynkinKind {
    A,
    D,
}

impl fmt::Display for DynkinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DynkinKind::A => "A",
            DynkinKind::D => "D",
        })
    }
}

/// A recognized Dynkin diagram: `order[i]` is the vertex playing the role of
/// the `i`-th vertex (in sorted order) of the canonical quiver of this type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinShape {
    pub kind: DynkinKind,
    pub order: Vec<Vertex>,
}

impl DynkinShape {
    /// Number of vertices.
    pub fn rank(&self) -> usize {
        self.order.len()
    }

    /// The canonical reference quiver: linear `1 -> ... -> n` for A and
    /// `Q_{m-1}` for D of rank `m`.
    pub fn canonical_quiver(&self) -> Quiver {
        match self.kind {
            DynkinKind::A => linear_quiver(self.rank()),
            DynkinKind::D => d_quiver(self.rank() - 1, None).expect("rank checked"),
        }
    }

    /// The reference orientation written on this shape's own labels.
    pub fn reference_orientation(&self) -> Quiver {
        let canon = self.canonical_quiver();
        canon
            .relabel(|v| self.order[canon.index_of(v).unwrap()])
            .expect("relabeling is a bijection")
    }
}

/// Path quiver on `1..=n`; bit `i` (zero-based) orients the edge between
/// `i+1` and `i+2` forward.
pub fn path_quiver(n: usize, orientation: &[bool]) -> Result<Quiver> {
    if n == 0 {
        return Err(Error::RankOutOfRange { rank: 0, reason: "path quiver needs at least one vertex" });
    }
    if orientation.len() != n - 1 {
        return Err(Error::OrientationLength { expected: n - 1, got: orientation.len() });
    }
    let vertices: Vec<Vertex> = (1..=n as u32).map(Vertex::Num).collect();
    let edges: Vec<_> = vertices.windows(2).map(|w| (w[0], w[1])).collect();
    Ok(Quiver::from_edges(vertices, &edges, orientation))
}

/// `1 -> 2 -> ... -> n`.
pub fn linear_quiver(n: usize) -> Quiver {
    path_quiver(n.max(1), &vec![true; n.max(1) - 1]).expect("valid")
}

/// The fork quiver `Q_n`: path `1 .. n-1` followed by `n-1 -> n+` and
/// `n-1 -> n-`; `n + 1` vertices, Dynkin type `D_{n+1}`. Without an
/// orientation every edge points forward.
pub fn d_quiver(n: usize, orientation: Option<&[bool]>) -> Result<Quiver> {
    if n < 2 {
        return Err(Error::RankOutOfRange { rank: n, reason: "fork quiver needs n >= 2" });
    }
    let n32 = n as u32;
    let mut vertices: Vec<Vertex> = (1..n32).map(Vertex::Num).collect();
    vertices.push(Vertex::Plus(n32));
    vertices.push(Vertex::Minus(n32));
    let mut edges: Vec<_> = (1..n32 - 1).map(|i| (Vertex::Num(i), Vertex::Num(i + 1))).collect();
    edges.push((Vertex::Num(n32 - 1), Vertex::Plus(n32)));
    edges.push((Vertex::Num(n32 - 1), Vertex::Minus(n32)));
    let all_forward = vec![true; edges.len()];
    let bits = orientation.unwrap_or(&all_forward);
    if bits.len() != edges.len() {
        return Err(Error::OrientationLength { expected: edges.len(), got: bits.len() });
    }
    Ok(Quiver::from_edges(vertices, &edges, bits))
}
