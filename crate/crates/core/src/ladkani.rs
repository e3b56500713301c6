//! Gluing the tilting poset along a leaf that is a source or a sink.
//!
//! For a leaf `x`, `Tilt^x` is the set of tilting modules having the simple
//! `S(x)` as a summand. Restriction to `Q \ {x}` followed by `basic` gives
//! `π_x`, and `ι_x(T) = S(x) ⊕ extend(T)` goes back. These identify `Tilt^x`
//! with `Tilt(Q \ {x})`, the rest of the poset is glued on through
//! `f = ι_x ∘ π_x`, and the complements of `Tilt^x` on the two sides of a
//! reflection at `x` are matched by the reflection functor. Every statement
//! is checked on the enumerated posets; a check returns `None` when it holds
//! and a description of a counterexample otherwise.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quiver::{Quiver, Vertex};
use crate::rep::{extend, reflection_minus, restrict};
use crate::tilting::{ext_table, leq, tilting_quiver, ExtTable, TiltingModule, TiltingQuiver};

/// `None` when a check holds, otherwise a counterexample.
pub type Outcome = Option<String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeafKind {
    Source,
    Sink,
}

/// A finite poset given by its elements and relation matrix.
#[derive(Clone, Debug)]
pub struct PosetView {
    pub elements: Vec<TiltingModule>,
    /// `relation[a][b]` is `elements[a] <= elements[b]`
    pub relation: Vec<Vec<bool>>,
}

impl PosetView {
    pub fn of(table: &ExtTable, elements: Vec<TiltingModule>) -> Self {
        let relation = elements.iter().map(|a| elements.iter().map(|b| leq(table, a, b)).collect()).collect();
        PosetView { elements, relation }
    }

    /// Reflexivity, antisymmetry and transitivity.
    pub fn check_partial_order(&self) -> Outcome {
        let n = self.elements.len();
        let r = &self.relation;
        for a in 0..n {
            if !r[a][a] {
                return Some(format!("{a} is not below itself"));
            }
            for b in 0..n {
                if a != b && r[a][b] && r[b][a] {
                    return Some(format!("{a} and {b} are below each other"));
                }
                for c in 0..n {
                    if r[a][b] && r[b][c] && !r[a][c] {
                        return Some(format!("{a} <= {b} <= {c} but not {a} <= {c}"));
                    }
                }
            }
        }
        None
    }
}

/// Everything needed to compare `Q` with `Q \ {x}` at a leaf `x`.
pub struct LeafSetting {
    pub x: Vertex,
    pub kind: LeafKind,
    pub table: ExtTable,
    pub tq: TiltingQuiver,
    pub small_table: ExtTable,
    pub small_tq: TiltingQuiver,
    /// Id of `S(x)` in `table`.
    pub simple: usize,
    /// Summand ids of the restriction of each indecomposable of `Q`.
    restricted: Vec<Vec<usize>>,
    /// Id over `Q` of the extension of each indecomposable of `Q \ {x}`.
    extended: Vec<usize>,
}

impl LeafSetting {
    pub fn new(q: &Quiver, x: Vertex) -> Result<Self> {
        if !q.contains(x) {
            return Err(Error::UnknownVertex(x));
        }
        if !q.is_leaf(x) {
            return Err(Error::NotLeaf(x));
        }
        let kind = if q.is_source(x) {
            LeafKind::Source
        } else if q.is_sink(x) {
            LeafKind::Sink
        } else {
            return Err(Error::NotSourceOrSink(x));
        };
        let table = ext_table(q)?;
        let tq = tilting_quiver(&table)?;
        let small_table = ext_table(&q.delete_vertex(x)?)?;
        let small_tq = tilting_quiver(&small_table)?;
        let simple = table
            .indecs()
            .iter()
            .position(|i| i.rep.is_simple_at(x))
            .ok_or_else(|| Error::Internal(format!("no simple at {x}")))?;
        let restricted = table
            .indecs()
            .iter()
            .map(|m| {
                let mult = small_table.decompose(&restrict(&m.rep, x)?)?;
                Ok(mult.iter().enumerate().filter(|(_, &k)| k > 0).map(|(j, _)| j).collect())
            })
            .collect::<Result<_>>()?;
        let extended = small_table
            .indecs()
            .iter()
            .map(|m| {
                let e = extend(table.quiver_arc(), x, &m.rep)?;
                table.id_of(e.dim_vector()).ok_or_else(|| Error::NoSuchIndecomposable(e.dim_vector().0.clone()))
            })
            .collect::<Result<_>>()?;
        Ok(LeafSetting { x, kind, table, tq, small_table, small_tq, simple, restricted, extended })
    }

    pub fn in_tilt_x(&self, t: &TiltingModule) -> bool {
        t.contains(self.simple)
    }

    /// Node indices of `Tilt^x` and of its complement.
    pub fn tilt_sub_x(&self) -> (Vec<usize>, Vec<usize>) {
        (0..self.tq.nodes.len()).partition(|&i| self.in_tilt_x(&self.tq.nodes[i]))
    }

    /// `basic(restrict(T))` over `Q \ {x}`.
    pub fn pi(&self, t: &TiltingModule) -> Result<TiltingModule> {
        let ids = t.ids().iter().flat_map(|&i| self.restricted[i].iter().copied()).collect();
        Ok(TiltingModule::from_ids(ids))
    }

    /// `S(x) ⊕ extend(T)` over `Q`.
    pub fn iota(&self, t: &TiltingModule) -> Result<TiltingModule> {
        let ids = std::iter::once(self.simple).chain(t.ids().iter().map(|&i| self.extended[i])).collect();
        Ok(TiltingModule::from_ids(ids))
    }

    fn node(&self, t: &TiltingModule) -> Result<usize> {
        self.tq.index_of(t).ok_or_else(|| Error::Internal(format!("{t:?} is not a tilting module of Q")))
    }

    fn small_node(&self, t: &TiltingModule) -> Result<usize> {
        self.small_tq.index_of(t).ok_or_else(|| Error::Internal(format!("{t:?} is not a tilting module of Q \\ x")))
    }

    /// `f = ι ∘ π` as a node map on `Q`.
    pub fn f(&self) -> Result<Vec<usize>> {
        self.tq.nodes.iter().map(|t| self.node(&self.iota(&self.pi(t)?)?)).collect()
    }

    /// `π(ι(T)) = T` for every `T` over `Q \ {x}`, and ι lands in `Tilt^x`.
    pub fn check_pi_iota(&self) -> Result<Outcome> {
        for t in &self.small_tq.nodes {
            let up = self.iota(t)?;
            if !up.is_tilting(&self.table) {
                return Ok(Some(format!("ι({}) is not tilting", self.small_table.module_label(t))));
            }
            if self.pi(&up)? != *t {
                return Ok(Some(format!("π(ι({})) differs", self.small_table.module_label(t))));
            }
        }
        Ok(None)
    }

    /// `ι(π(T))` is comparable to `T` (below at a source, above at a sink)
    /// and equal to it exactly on `Tilt^x`.
    pub fn check_iota_pi(&self) -> Result<Outcome> {
        let f = self.f()?;
        for (i, t) in self.tq.nodes.iter().enumerate() {
            let back = &self.tq.nodes[f[i]];
            let ordered = match self.kind {
                LeafKind::Source => leq(&self.table, back, t),
                LeafKind::Sink => leq(&self.table, t, back),
            };
            if !ordered {
                return Ok(Some(format!("ι(π(T)) not comparable as expected for T = {}", self.table.module_label(t))));
            }
            if (f[i] == i) != self.in_tilt_x(t) {
                return Ok(Some(format!("ι(π(T)) = T fails to characterize Tilt^x at {}", self.table.module_label(t))));
            }
        }
        Ok(None)
    }

    /// π and ι preserve the order, and restrict to inverse bijections
    /// between `Tilt^x` and `Tilt(Q \ {x})`.
    pub fn check_monotone_bijection(&self) -> Result<Outcome> {
        let (y, _) = self.tilt_sub_x();
        let pis: Vec<usize> = self.tq.nodes.iter().map(|t| self.small_node(&self.pi(t)?)).collect::<Result<_>>()?;
        for a in 0..self.tq.nodes.len() {
            for b in 0..self.tq.nodes.len() {
                if leq(&self.table, &self.tq.nodes[a], &self.tq.nodes[b])
                    && !leq(&self.small_table, &self.small_tq.nodes[pis[a]], &self.small_tq.nodes[pis[b]])
                {
                    return Ok(Some(format!("π does not preserve {a} <= {b}")));
                }
            }
        }
        let iotas: Vec<usize> =
            self.small_tq.nodes.iter().map(|t| self.node(&self.iota(t)?)).collect::<Result<_>>()?;
        for a in 0..iotas.len() {
            for b in 0..iotas.len() {
                if leq(&self.small_table, &self.small_tq.nodes[a], &self.small_tq.nodes[b])
                    != leq(&self.table, &self.tq.nodes[iotas[a]], &self.tq.nodes[iotas[b]])
                {
                    return Ok(Some(format!("ι is not an order embedding at ({a}, {b})")));
                }
            }
        }
        let mut image: Vec<usize> = iotas.clone();
        image.sort();
        if image != y {
            return Ok(Some(format!("ι has image of size {} but |Tilt^x| = {}", image.len(), y.len())));
        }
        Ok(None)
    }

    /// The order of `Q` equals the order glued from `X = complement`,
    /// `Y = Tilt^x` and `f`: at a source nothing in `X` lies below `Y` and
    /// `a <= b` iff `a <= f(b)` for `a` in `Y`, `b` in `X`; at a sink nothing
    /// in `Y` lies below `X` and `a <= b` iff `f(a) <= b` for `a` in `X`,
    /// `b` in `Y`.
    pub fn check_glued_order(&self) -> Result<Outcome> {
        let f = self.f()?;
        let nodes = &self.tq.nodes;
        let le = |a: usize, b: usize| leq(&self.table, &nodes[a], &nodes[b]);
        for a in 0..nodes.len() {
            for b in 0..nodes.len() {
                let (ya, yb) = (self.in_tilt_x(&nodes[a]), self.in_tilt_x(&nodes[b]));
                let glued = match (self.kind, ya, yb) {
                    (_, true, true) | (_, false, false) => le(a, b),
                    (LeafKind::Source, true, false) => le(a, f[b]),
                    (LeafKind::Source, false, true) => false,
                    (LeafKind::Sink, false, true) => le(f[a], b),
                    (LeafKind::Sink, true, false) => false,
                };
                if glued != le(a, b) {
                    return Ok(Some(format!(
                        "glued order disagrees on ({}, {})",
                        self.table.module_label(&nodes[a]),
                        self.table.module_label(&nodes[b])
                    )));
                }
            }
        }
        Ok(PosetView::of(&self.table, nodes.clone()).check_partial_order())
    }

    /// Arrows with exactly one end in `Tilt^x`, as `(arrow, endpoint in Tilt^x)`.
    pub fn boundary_arrows(&self) -> Vec<((usize, usize), usize)> {
        let inside = |i: usize| self.in_tilt_x(&self.tq.nodes[i]);
        self.tq
            .arrows
            .iter()
            .filter(|&&(s, t)| inside(s) != inside(t))
            .map(|&(s, t)| ((s, t), if inside(s) { s } else { t }))
            .collect()
    }

    /// Crossing arrows leave `Tilt^x` at a sink and enter it at a source, and
    /// each module of `Tilt^x` is the endpoint of exactly one of them.
    pub fn check_boundary_bijection(&self) -> Outcome {
        let (y, _) = self.tilt_sub_x();
        let mut hits: BTreeMap<usize, usize> = BTreeMap::new();
        for ((s, t), end) in self.boundary_arrows() {
            let expected = match self.kind {
                LeafKind::Sink => s,
                LeafKind::Source => t,
            };
            if end != expected {
                return Some(format!("crossing arrow {s} -> {t} points the wrong way"));
            }
            *hits.entry(end).or_default() += 1;
        }
        let keys: Vec<usize> = hits.keys().copied().collect();
        if keys != y || hits.values().any(|&c| c != 1) {
            return Some(format!("{} crossing arrows for {} modules in Tilt^x", hits.values().sum::<usize>(), y.len()));
        }
        None
    }

    /// `(a, b, c)`: arrows inside `Tilt^x`, arrows inside the complement,
    /// crossing arrows.
    pub fn arrow_decomposition(&self) -> (usize, usize, usize) {
        let inside = |i: usize| self.in_tilt_x(&self.tq.nodes[i]);
        let mut abc = (0, 0, 0);
        for &(s, t) in &self.tq.arrows {
            match (inside(s), inside(t)) {
                (true, true) => abc.0 += 1,
                (false, false) => abc.1 += 1,
                _ => abc.2 += 1,
            }
        }
        abc
    }

    /// `a` equals the arrow count of `Q \ {x}`, `c = |Tilt^x|` and
    /// `a + b + c` is the arrow count of `Q`.
    pub fn check_arrow_decomposition(&self) -> Outcome {
        let (a, b, c) = self.arrow_decomposition();
        let y = self.tilt_sub_x().0.len();
        let total = self.tq.arrow_count();
        if a != self.small_tq.arrow_count() || c != y || a + b + c != total {
            return Some(format!(
                "a={a} b={b} c={c} total={total}, |Tilt^x|={y}, arrows of Q\\x={}",
                self.small_tq.arrow_count()
            ));
        }
        None
    }

    /// For `T = M ⊕ S(x)` the complement `M` is nonzero at `x`, which is
    /// what makes `S(x)` a quotient (source) or submodule (sink) of `add M`.
    pub fn check_complement_at_x(&self) -> Outcome {
        let i = self.table.quiver().index_of(self.x).unwrap();
        for t in self.tq.nodes.iter().filter(|t| self.in_tilt_x(t)) {
            let rest = TiltingModule::from_ids(t.ids().iter().copied().filter(|&j| j != self.simple).collect());
            if self.table.module_dim(&rest).0[i] == 0 {
                return Some(format!("complement of S(x) in {} vanishes at x", self.table.module_label(t)));
            }
        }
        None
    }
}

/// Result of matching the complements of `Tilt^x` across a reflection.
pub struct RhoReport {
    /// `ρ` as a node map from `Q` to `σ_x Q` on the complement of `Tilt^x`.
    pub map: BTreeMap<usize, usize>,
    pub outcome: Outcome,
}

/// For a source leaf `x`, builds `ρ` on `Tilt(Q) \ Tilt^x` by applying the
/// reflection functor at `x` to every summand, and checks that it is an order
/// isomorphism onto `Tilt(σ_x Q) \ Tilt^x` compatible with the two π maps.
pub fn rho_x(here: &LeafSetting, there: &LeafSetting) -> Result<RhoReport> {
    if here.kind != LeafKind::Source || there.kind != LeafKind::Sink || here.x != there.x {
        return Err(Error::NotSource(here.x));
    }
    if here.table.quiver().reflect(here.x)? != *there.table.quiver() {
        return Err(Error::QuiverMismatch);
    }
    let target_q: Arc<Quiver> = there.table.quiver_arc().clone();
    let (_, xs) = here.tilt_sub_x();
    let (_, xs_there) = there.tilt_sub_x();
    let mut map = BTreeMap::new();
    for &i in &xs {
        let t = &here.tq.nodes[i];
        let mut ids = Vec::new();
        for &j in t.ids() {
            let r = reflection_minus(&here.table.indecs()[j].rep, here.x)?;
            debug_assert_eq!(r.quiver(), &*target_q);
            ids.push(there.table.id_of(r.dim_vector()).ok_or_else(|| Error::NoSuchIndecomposable(r.dim_vector().0.clone()))?);
        }
        let image = TiltingModule::from_ids(ids);
        let Some(k) = there.tq.index_of(&image) else {
            return Ok(RhoReport { map, outcome: Some(format!("ρ({}) is not tilting", here.table.module_label(t))) });
        };
        map.insert(i, k);
    }
    let image: HashSet<usize> = map.values().copied().collect();
    let target: HashSet<usize> = xs_there.iter().copied().collect();
    if image != target || image.len() != xs.len() {
        return Ok(RhoReport {
            map,
            outcome: Some(format!("ρ hits {} of {} modules outside Tilt^x", image.len(), target.len())),
        });
    }
    for (&a, &ra) in &map {
        for (&b, &rb) in &map {
            let before = leq(&here.table, &here.tq.nodes[a], &here.tq.nodes[b]);
            let after = leq(&there.table, &there.tq.nodes[ra], &there.tq.nodes[rb]);
            if before != after {
                return Ok(RhoReport { map, outcome: Some(format!("ρ does not preserve the order on ({a}, {b})")) });
            }
        }
        if there.pi(&there.tq.nodes[ra])? != here.pi(&here.tq.nodes[a])? {
            return Ok(RhoReport { map, outcome: Some(format!("π'(ρ(T)) differs from π(T) at node {a}")) });
        }
    }
    Ok(RhoReport { map, outcome: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{d_quiver, linear_quiver, Vertex::*};

    #[test]
    fn a2_at_the_source() {
        let s = LeafSetting::new(&linear_quiver(2), Num(1)).unwrap();
        assert_eq!(s.kind, LeafKind::Source);
        let (y, x) = s.tilt_sub_x();
        assert_eq!((y.len(), x.len()), (1, 1));
        assert_eq!(s.table.module_label(&s.tq.nodes[y[0]]), "L(0,1) + L(0,2)");
        let p = s.pi(&s.tq.nodes[x[0]]).unwrap();
        assert_eq!(p, s.small_tq.nodes[0]);
        assert_eq!(s.iota(&p).unwrap(), s.tq.nodes[y[0]]);
        assert_eq!(s.arrow_decomposition(), (0, 0, 1));
        assert_eq!(s.check_boundary_bijection(), None);
    }

    #[test]
    fn a3_decomposition() {
        let s = LeafSetting::new(&linear_quiver(3), Num(1)).unwrap();
        assert_eq!(s.arrow_decomposition(), (1, 2, 2));
    }

    #[test]
    fn d4_fork_tip() {
        let s = LeafSetting::new(&d_quiver(3, None).unwrap(), Plus(3)).unwrap();
        assert_eq!(s.kind, LeafKind::Sink);
        assert_eq!(s.tilt_sub_x().0.len(), 5);
        assert_eq!(s.boundary_arrows().len(), 5);
        assert_eq!(s.check_pi_iota().unwrap(), None);
        assert_eq!(s.check_iota_pi().unwrap(), None);
        assert_eq!(s.check_glued_order().unwrap(), None);
    }

    #[test]
    fn rejects_inner_vertices() {
        assert!(matches!(LeafSetting::new(&linear_quiver(3), Num(2)), Err(Error::NotLeaf(_))));
    }
}
