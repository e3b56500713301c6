//! Representations of tree quivers over the rationals.
//!
//! Hom spaces are computed by solving the intertwiner equations
//! `f_b M_{a->b} = N_{a->b} f_a` exactly. Since path algebras are hereditary,
//! `dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>` where `<-,->` is the
//! Euler form. Indecomposables of any orientation of an A or D tree are the
//! explicit models of the reference orientation pushed through BGP
//! reflection functors.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::combinat::{self, Model};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiver::{Quiver, Vertex};

/// Dimension vector, indexed like the vertices (sorted) of its quiver.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DimVector(pub Vec<u32>);

impl DimVector {
    pub fn zero(len: usize) -> Self {
        DimVector(vec![0; len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut d = Self::zero(len);
        d.0[i] = 1;
        d
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entry(&self, q: &Quiver, v: Vertex) -> Option<u32> {
        q.index_of(v).map(|i| self.0[i])
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Sincere: nonzero at every vertex.
    pub fn is_sincere(&self) -> bool {
        self.0.iter().all(|&x| x > 0)
    }

    /// Rendering like `(1,2,1,1)`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        format!("({})", parts.join(","))
    }

    /// Simple reflection `s_x` of the root lattice. Returns `None` when the
    /// result has a negative entry.
    pub fn reflect(&self, q: &Quiver, x: Vertex) -> Option<DimVector> {
        let i = q.index_of(x)?;
        let around: u32 = q.neighbors(x).into_iter().map(|w| self.0[q.index_of(w).unwrap()]).sum();
        let mut out = self.clone();
        out.0[i] = around.checked_sub(self.0[i])?;
        Some(out)
    }
}

/// `<d, e> = sum_v d_v e_v - sum_{a->b} d_a e_b`.
pub fn euler_form(q: &Quiver, d: &DimVector, e: &DimVector) -> Result<i64> {
    for v in [d, e] {
        if v.len() != q.len() {
            return Err(Error::DimMismatch { expected: q.len(), got: v.len() });
        }
    }
    let diag: i64 = d.0.iter().zip(&e.0).map(|(&a, &b)| a as i64 * b as i64).sum();
    let off: i64 = q
        .arrows()
        .iter()
        .map(|&(s, t)| d.0[q.index_of(s).unwrap()] as i64 * e.0[q.index_of(t).unwrap()] as i64)
        .sum();
    Ok(diag - off)
}

/// A representation: one space per vertex, one matrix per arrow. The map of
/// arrow `a -> b` has shape `dim_b x dim_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    quiver: Arc<Quiver>,
    dims: DimVector,
    maps: Vec<Matrix>,
}

impl Rep {
    pub fn new(quiver: Arc<Quiver>, dims: DimVector, maps: Vec<Matrix>) -> Result<Rep> {
        if dims.len() != quiver.len() {
            return Err(Error::DimMismatch { expected: quiver.len(), got: dims.len() });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Internal("one matrix per arrow required".into()));
        }
        for (&(s, t), m) in quiver.arrows().iter().zip(&maps) {
            let want = (dims.0[quiver.index_of(t).unwrap()] as usize, dims.0[quiver.index_of(s).unwrap()] as usize);
            if m.shape() != want {
                return Err(Error::Internal(format!("map {s}->{t} has shape {:?}, expected {want:?}", m.shape())));
            }
        }
        Ok(Rep { quiver, dims, maps })
    }

    pub fn zero(quiver: Arc<Quiver>) -> Rep {
        let dims = DimVector::zero(quiver.len());
        let maps = vec![Matrix::zeros(0, 0); quiver.arrows().len()];
        Rep { quiver, dims, maps }
    }

    /// The simple representation at `x`.
    pub fn simple(quiver: Arc<Quiver>, x: Vertex) -> Result<Rep> {
        let i = quiver.index_of(x).ok_or(Error::UnknownVertex(x))?;
        let dims = DimVector::unit(quiver.len(), i);
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| Matrix::zeros(dims.0[quiver.index_of(t).unwrap()] as usize, dims.0[quiver.index_of(s).unwrap()] as usize))
            .collect();
        Ok(Rep { quiver, dims, maps })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn quiver_arc(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn dim_vector(&self) -> &DimVector {
        &self.dims
    }

    pub fn dim_at(&self, v: Vertex) -> usize {
        self.quiver.index_of(v).map_or(0, |i| self.dims.0[i] as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_zero()
    }

    pub fn map(&self, source: Vertex, target: Vertex) -> Option<&Matrix> {
        self.quiver.arrow_index(source, target).map(|k| &self.maps[k])
    }

    pub fn is_simple_at(&self, x: Vertex) -> bool {
        self.quiver.index_of(x).is_some_and(|i| self.dims == DimVector::unit(self.quiver.len(), i))
    }

    pub fn direct_sum(&self, other: &Rep) -> Result<Rep> {
        if self.quiver != other.quiver {
            return Err(Error::QuiverMismatch);
        }
        let dims = self.dims.add(&other.dims);
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        m[(r, c)] = a[(r, c)].clone();
                    }
                }
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        m[(a.rows() + r, a.cols() + c)] = b[(r, c)].clone();
                    }
                }
                m
            })
            .collect();
        Rep::new(self.quiver.clone(), dims, maps)
    }

    /// Moves the representation onto `target`, a copy of this quiver with
    /// vertices renamed through `rename`.
    pub fn relabel(&self, target: Arc<Quiver>, rename: impl Fn(Vertex) -> Vertex) -> Result<Rep> {
        let mut dims = DimVector::zero(target.len());
        for (i, &v) in self.quiver.vertices().iter().enumerate() {
            let j = target.index_of(rename(v)).ok_or(Error::UnknownVertex(rename(v)))?;
            dims.0[j] = self.dims.0[i];
        }
        let mut maps = vec![Matrix::zeros(0, 0); target.arrows().len()];
        for (k, &(s, t)) in self.quiver.arrows().iter().enumerate() {
            let j = target.arrow_index(rename(s), rename(t)).ok_or(Error::QuiverMismatch)?;
            maps[j] = self.maps[k].clone();
        }
        Rep::new(target, dims, maps)
    }
}

impl Serialize for Rep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Dims<'a>(&'a Rep);
        impl Serialize for Dims<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let q = &self.0.quiver;
                let mut m = s.serialize_map(Some(q.len()))?;
                for (v, d) in q.vertices().iter().zip(&self.0.dims.0) {
                    m.serialize_entry(&v.to_string(), d)?;
                }
                m.end()
            }
        }
        let maps: BTreeMap<String, Vec<Vec<String>>> = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|((s, t), m)| (format!("{s}->{t}"), m.to_strings()))
            .collect();
        let mut st = serializer.serialize_struct("Rep", 2)?;
        st.serialize_field("dims", &Dims(self))?;
        st.serialize_field("maps", &maps)?;
        st.end()
    }
}

/// Dimension of the space of morphisms `m -> n`.
pub fn hom_dim(m: &Rep, n: &Rep) -> Result<usize> {
    if m.quiver != n.quiver {
        return Err(Error::QuiverMismatch);
    }
    let q = &*m.quiver;
    let d = &m.dims.0;
    let e = &n.dims.0;
    let mut offset = Vec::with_capacity(q.len());
    let mut unknowns = 0;
    for i in 0..q.len() {
        offset.push(unknowns);
        unknowns += (d[i] * e[i]) as usize;
    }
    if unknowns == 0 {
        return Ok(0);
    }
    let equations: usize = q
        .arrows()
        .iter()
        .map(|&(s, t)| (e[q.index_of(t).unwrap()] * d[q.index_of(s).unwrap()]) as usize)
        .sum();
    let mut sys = Matrix::zeros(equations, unknowns);
    let mut row = 0;
    for (k, &(s, t)) in q.arrows().iter().enumerate() {
        let (a, b) = (q.index_of(s).unwrap(), q.index_of(t).unwrap());
        let (da, db, ea, eb) = (d[a] as usize, d[b] as usize, e[a] as usize, e[b] as usize);
        let (mm, nm) = (&m.maps[k], &n.maps[k]);
        // (f_b M - N f_a)[r][c] = 0
        for r in 0..eb {
            for c in 0..da {
                for x in 0..db {
                    let var = offset[b] + r * db + x;
                    sys[(row, var)] += &mm[(x, c)];
                }
                for x in 0..ea {
                    let var = offset[a] + x * da + c;
                    sys[(row, var)] -= &nm[(r, x)];
                }
                row += 1;
            }
        }
    }
    Ok(unknowns - sys.rank())
}

/// `dim Ext^1(m, n)`, via the Euler form.
pub fn ext_dim(m: &Rep, n: &Rep) -> Result<usize> {
    let hom = hom_dim(m, n)? as i64;
    let euler = euler_form(&m.quiver, &m.dims, &n.dims)?;
    let ext = hom - euler;
    usize::try_from(ext).map_err(|_| Error::Internal(format!("negative Ext dimension {ext}")))
}

/// BGP reflection at a sink `x`: the new space at `x` is the kernel of
/// `sum_{y->x} M_y -> M_x`. Lives over `reflect(q, x)`.
pub fn reflection_plus(m: &Rep, x: Vertex) -> Result<Rep> {
    let q = &*m.quiver;
    if !q.contains(x) {
        return Err(Error::UnknownVertex(x));
    }
    if !q.is_sink(x) {
        return Err(Error::NotSink(x));
    }
    let into = q.incoming(x);
    let dx = m.dim_at(x);
    let blocks: Vec<&Matrix> = into.iter().map(|&(k, _)| &m.maps[k]).collect();
    let summed = Matrix::hstack(dx, &blocks);
    let kernel = summed.nullspace();
    let new_q = Arc::new(q.reflect(x)?);
    let mut dims = m.dims.clone();
    dims.0[q.index_of(x).unwrap()] = kernel.cols() as u32;
    let mut maps = vec![Matrix::zeros(0, 0); new_q.arrows().len()];
    for (k, &(s, t)) in q.arrows().iter().enumerate() {
        if t != x {
            maps[new_q.arrow_index(s, t).unwrap()] = m.maps[k].clone();
        }
    }
    let mut off = 0;
    for &(_, y) in &into {
        let dy = m.dim_at(y);
        maps[new_q.arrow_index(x, y).unwrap()] = kernel.row_block(off, dy);
        off += dy;
    }
    Rep::new(new_q, dims, maps)
}

/// BGP reflection at a source `x`: the new space at `x` is the cokernel of
/// `M_x -> sum_{x->y} M_y`. Lives over `reflect(q, x)`.
pub fn reflection_minus(m: &Rep, x: Vertex) -> Result<Rep> {
    let q = &*m.quiver;
    if !q.contains(x) {
        return Err(Error::UnknownVertex(x));
    }
    if !q.is_source(x) {
        return Err(Error::NotSource(x));
    }
    let out = q.outgoing(x);
    let dx = m.dim_at(x);
    let blocks: Vec<&Matrix> = out.iter().map(|&(k, _)| &m.maps[k]).collect();
    let stacked = Matrix::vstack(dx, &blocks);
    // rows spanning the annihilator of the image give the quotient map
    let quotient = stacked.left_nullspace();
    let new_q = Arc::new(q.reflect(x)?);
    let mut dims = m.dims.clone();
    dims.0[q.index_of(x).unwrap()] = quotient.rows() as u32;
    let mut maps = vec![Matrix::zeros(0, 0); new_q.arrows().len()];
    for (k, &(s, t)) in q.arrows().iter().enumerate() {
        if s != x {
            maps[new_q.arrow_index(s, t).unwrap()] = m.maps[k].clone();
        }
    }
    let mut off = 0;
    for &(_, y) in &out {
        let dy = m.dim_at(y);
        maps[new_q.arrow_index(y, x).unwrap()] = quotient.col_block(off, dy);
        off += dy;
    }
    Rep::new(new_q, dims, maps)
}

fn leaf_neighbor(q: &Quiver, x: Vertex) -> Result<Vertex> {
    if !q.contains(x) {
        return Err(Error::UnknownVertex(x));
    }
    if !q.is_leaf(x) {
        return Err(Error::NotLeaf(x));
    }
    Ok(q.neighbors(x)[0])
}

/// Restriction to `q \ {x}` for a leaf `x`: drop the data at `x`.
pub fn restrict(m: &Rep, x: Vertex) -> Result<Rep> {
    let q = &*m.quiver;
    leaf_neighbor(q, x)?;
    let small = Arc::new(q.delete_vertex(x)?);
    let dims = DimVector(small.vertices().iter().map(|&v| m.dim_at(v) as u32).collect());
    let maps = small.arrows().iter().map(|&(s, t)| m.map(s, t).unwrap().clone()).collect();
    Rep::new(small, dims, maps)
}

/// Extension from `q \ {x}` to `q` for a leaf `x`. At a source the new space
/// is the sum of the spaces at the heads of arrows out of `x` with projection
/// maps; at a sink the sum over arrows into `x` with inclusions. A leaf has
/// one neighbour, so either way the new map is an identity.
pub fn extend(q: &Arc<Quiver>, x: Vertex, n: &Rep) -> Result<Rep> {
    let y = leaf_neighbor(q, x)?;
    if *n.quiver != q.delete_vertex(x)? {
        return Err(Error::QuiverMismatch);
    }
    let dy = n.dim_at(y);
    let dims = DimVector(q.vertices().iter().map(|&v| if v == x { dy as u32 } else { n.dim_at(v) as u32 }).collect());
    let maps = q
        .arrows()
        .iter()
        .map(|&(s, t)| if s == x || t == x { Matrix::identity(dy) } else { n.map(s, t).unwrap().clone() })
        .collect();
    Rep::new(q.clone(), dims, maps)
}

/// An indecomposable representation with its canonical id.
#[derive(Clone, Debug)]
pub struct Indec {
    pub id: usize,
    pub rep: Rep,
    pub dim: DimVector,
    /// Combinatorial name, present when the quiver is a canonical reference
    /// quiver (`linear_quiver(n)` or `d_quiver(n)`).
    pub model: Option<Model>,
}

impl Indec {
    /// Combinatorial name when known, dimension vector otherwise.
    pub fn label(&self) -> String {
        match &self.model {
            Some(m) => m.to_string(),
            None => self.dim.render(),
        }
    }
}

/// All indecomposables of an orientation of an A or D tree, one per positive
/// root, sorted by `(total dimension, dimension vector)`; the position in that
/// order is the id.
pub fn indecomposables(q: &Quiver) -> Result<Vec<Indec>> {
    let shape = q.dynkin_shape()?;
    let canonical = Arc::new(shape.canonical_quiver());
    let reference = Arc::new(shape.reference_orientation());
    let path = reference.sink_reflection_path(q)?;
    let is_canonical = path.is_empty() && *canonical == *q;

    let n = match shape.kind {
        crate::quiver::DynkinKind::A => shape.rank(),
        crate::quiver::DynkinKind::D => shape.rank() - 1,
    };
    let models = combinat::all_models(shape.kind, n);
    let mut current: Vec<(Rep, Option<Model>)> = Vec::with_capacity(models.len());
    for model in models {
        let rep = combinat::build_model_rep(&model, n)?;
        let rep = rep.relabel(reference.clone(), |v| shape.order[canonical.index_of(v).unwrap()])?;
        current.push((rep, is_canonical.then_some(model)));
    }

    let mut cur_q = reference;
    for x in path {
        let mut next = Vec::with_capacity(current.len());
        for (rep, _) in &current {
            if !rep.is_simple_at(x) {
                next.push((reflection_plus(rep, x)?, None));
            }
        }
        cur_q = Arc::new(cur_q.reflect(x)?);
        next.push((Rep::simple(cur_q.clone(), x)?, None));
        current = next;
    }
    if *cur_q != *q {
        return Err(Error::Internal("transport ended on the wrong orientation".into()));
    }

    let mut out: Vec<Indec> = current
        .into_iter()
        .map(|(rep, model)| Indec { id: 0, dim: rep.dims.clone(), rep, model })
        .collect();
    out.sort_by(|a, b| (a.dim.total(), &a.dim).cmp(&(b.dim.total(), &b.dim)));
    for (i, ind) in out.iter_mut().enumerate() {
        ind.id = i;
    }
    if out.windows(2).any(|w| w[0].dim == w[1].dim) {
        return Err(Error::Internal("two indecomposables share a dimension vector".into()));
    }
    Ok(out)
}

/// The indecomposable projective at `v`: `(P_v)_w` counts paths `v -> w`.
pub fn projective_dim(q: &Quiver, v: Vertex) -> DimVector {
    let mut d = DimVector::zero(q.len());
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        d.0[q.index_of(u).unwrap()] += 1;
        stack.extend(q.outgoing(u).into_iter().map(|(_, t)| t));
    }
    d
}

/// The indecomposable injective at `v`: `(I_v)_w` counts paths `w -> v`.
pub fn injective_dim(q: &Quiver, v: Vertex) -> DimVector {
    let mut d = DimVector::zero(q.len());
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        d.0[q.index_of(u).unwrap()] += 1;
        stack.extend(q.incoming(u).into_iter().map(|(_, s)| s));
    }
    d
}

/// `1` as a rational; handy for hand-built matrices.
pub(crate) fn one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{d_quiver, linear_quiver, path_quiver, Vertex::*};
    use crate::roots::positive_roots;

    fn interval(q: &Arc<Quiver>, i: u32, j: u32) -> Rep {
        combinat::build_model_rep(&Model::A(combinat::Interval::new(i, j)), q.len())
            .unwrap()
            .relabel(q.clone(), |v| v)
            .unwrap()
    }

    #[test]
    fn euler_examples() {
        let q = linear_quiver(2);
        assert_eq!(euler_form(&q, &DimVector(vec![1, 0]), &DimVector(vec![0, 1])).unwrap(), -1);
        assert_eq!(euler_form(&q, &DimVector(vec![1, 1]), &DimVector(vec![1, 1])).unwrap(), 1);
        assert!(euler_form(&q, &DimVector(vec![1]), &DimVector(vec![1, 1])).is_err());
    }

    #[test]
    fn roots_have_euler_norm_one() {
        for q in [linear_quiver(4), d_quiver(3, None).unwrap()] {
            for r in positive_roots(&q).unwrap() {
                assert_eq!(euler_form(&q, &r, &r).unwrap(), 1);
            }
        }
    }

    #[test]
    fn hom_and_ext_on_a2() {
        let q = Arc::new(linear_quiver(2));
        let (l02, l01, l12) = (interval(&q, 0, 2), interval(&q, 0, 1), interval(&q, 1, 2));
        assert_eq!(hom_dim(&l02, &l01).unwrap(), 1);
        assert_eq!(hom_dim(&l01, &l12).unwrap(), 0);
        assert_eq!(ext_dim(&l01, &l12).unwrap(), 1);
        assert_eq!(ext_dim(&l12, &l01).unwrap(), 0);
    }

    #[test]
    fn hom_rejects_mixed_quivers() {
        let a = Rep::zero(Arc::new(linear_quiver(2)));
        let b = Rep::zero(Arc::new(path_quiver(2, &[false]).unwrap()));
        assert_eq!(hom_dim(&a, &b), Err(Error::QuiverMismatch));
    }

    #[test]
    fn indecomposables_are_bricks_and_rigid() {
        for q in [linear_quiver(4), d_quiver(3, None).unwrap()] {
            for x in indecomposables(&q).unwrap() {
                assert_eq!(hom_dim(&x.rep, &x.rep).unwrap(), 1, "{}", x.label());
                assert_eq!(ext_dim(&x.rep, &x.rep).unwrap(), 0, "{}", x.label());
            }
        }
    }

    #[test]
    fn indecomposable_counts() {
        let a = indecomposables(&linear_quiver(5)).unwrap();
        assert_eq!(a.len(), 15);
        assert!(a.iter().all(|x| x.dim.0.iter().all(|&e| e <= 1)));
        let d = indecomposables(&d_quiver(3, None).unwrap()).unwrap();
        assert_eq!(d.len(), 12);
        let count = |pre: &str| d.iter().filter(|x| x.label().starts_with(pre)).count();
        assert_eq!((count("L("), count("L+") + count("L-"), count("M(")), (3, 6, 3));
    }

    #[test]
    fn transported_dimensions_are_positive_roots() {
        for base in [linear_quiver(4), d_quiver(3, None).unwrap()] {
            for q in base.all_orientations() {
                let mut dims: Vec<DimVector> = indecomposables(&q).unwrap().into_iter().map(|x| x.dim).collect();
                dims.sort();
                let mut roots = positive_roots(&q).unwrap();
                roots.sort();
                assert_eq!(dims, roots, "{q}");
            }
        }
    }

    #[test]
    fn reflection_plus_examples() {
        let q = Arc::new(linear_quiver(2));
        let r = reflection_plus(&interval(&q, 0, 2), Num(2)).unwrap();
        assert_eq!(r.quiver().arrows(), &[(Num(2), Num(1))]);
        assert_eq!(r.dim_vector().0, vec![1, 0]);
        let s = Rep::simple(q.clone(), Num(2)).unwrap();
        assert!(reflection_plus(&s, Num(2)).unwrap().is_zero());
        assert_eq!(reflection_plus(&s, Num(1)), Err(Error::NotSink(Num(1))));
        assert_eq!(reflection_minus(&s, Num(2)), Err(Error::NotSource(Num(2))));
    }

    #[test]
    fn reflection_acts_on_dimension_vectors() {
        for q in [linear_quiver(4), d_quiver(3, None).unwrap()] {
            let (sinks, _) = q.sinks_sources();
            for x in indecomposables(&q).unwrap() {
                for &s in &sinks {
                    if x.rep.is_simple_at(s) {
                        continue;
                    }
                    let r = reflection_plus(&x.rep, s).unwrap();
                    assert_eq!(Some(r.dim_vector().clone()), x.dim.reflect(&q, s));
                    assert_eq!(hom_dim(&r, &r).unwrap(), 1);
                }
            }
        }
    }

    #[test]
    fn reflection_round_trip_preserves_hom_and_ext() {
        let q = linear_quiver(3);
        let ind = indecomposables(&q).unwrap();
        let x = Num(3);
        let kept: Vec<&Indec> = ind.iter().filter(|i| !i.rep.is_simple_at(x)).collect();
        let back: Vec<Rep> = kept
            .iter()
            .map(|i| reflection_minus(&reflection_plus(&i.rep, x).unwrap(), x).unwrap())
            .collect();
        for (a, ra) in kept.iter().zip(&back) {
            assert_eq!(ra.dim_vector(), &a.dim);
            assert_eq!(ra.quiver(), &q);
            for (b, rb) in kept.iter().zip(&back) {
                assert_eq!(hom_dim(ra, rb).unwrap(), hom_dim(&a.rep, &b.rep).unwrap());
                assert_eq!(ext_dim(ra, rb).unwrap(), ext_dim(&a.rep, &b.rep).unwrap());
            }
        }
        let s = Rep::simple(Arc::new(path_quiver(2, &[false]).unwrap()), Num(2)).unwrap();
        assert!(reflection_minus(&s, Num(2)).unwrap().is_zero());
    }

    #[test]
    fn restrict_and_extend() {
        let q = Arc::new(linear_quiver(2));
        let r = restrict(&interval(&q, 0, 2), Num(1)).unwrap();
        assert!(r.is_simple_at(Num(2)));
        assert!(restrict(&interval(&q, 0, 1), Num(1)).unwrap().is_zero());

        let e = extend(&q, Num(1), &r).unwrap();
        assert_eq!(e, interval(&q, 0, 2));

        let rev = Arc::new(path_quiver(2, &[false]).unwrap());
        let small = Arc::new(rev.delete_vertex(Num(1)).unwrap());
        let e = extend(&rev, Num(1), &Rep::simple(small.clone(), Num(2)).unwrap()).unwrap();
        assert_eq!(e.dim_vector().0, vec![1, 1]);
        assert_eq!(hom_dim(&e, &e).unwrap(), 1);
        assert!(extend(&rev, Num(1), &Rep::zero(small)).unwrap().is_zero());

        let q3 = Arc::new(linear_quiver(3));
        assert_eq!(restrict(&interval(&q3, 0, 3), Num(2)), Err(Error::NotLeaf(Num(2))));
    }

    #[test]
    fn restrict_after_extend_is_identity() {
        for base in [linear_quiver(4), d_quiver(3, None).unwrap()] {
            for q in base.all_orientations() {
                let q = Arc::new(q);
                for &x in q.vertices().iter().filter(|&&v| q.is_leaf(v)) {
                    let small = q.delete_vertex(x).unwrap();
                    for n in indecomposables(&small).unwrap() {
                        let e = extend(&q, x, &n.rep).unwrap();
                        assert_eq!(hom_dim(&e, &e).unwrap(), 1);
                        assert_eq!(restrict(&e, x).unwrap().dim_vector(), &n.dim);
                    }
                }
            }
        }
    }

    #[test]
    fn restrict_preserves_sums() {
        let q = Arc::new(linear_quiver(3));
        let ind = indecomposables(&q).unwrap();
        for a in &ind {
            for b in &ind {
                let lhs = restrict(&a.rep.direct_sum(&b.rep).unwrap(), Num(1)).unwrap();
                let rhs = restrict(&a.rep, Num(1)).unwrap().direct_sum(&restrict(&b.rep, Num(1)).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn projectives_and_injectives() {
        let q = d_quiver(3, None).unwrap();
        assert_eq!(projective_dim(&q, Num(1)).0, vec![1, 1, 1, 1]);
        assert_eq!(projective_dim(&q, Plus(3)).0, vec![0, 0, 1, 0]);
        assert_eq!(injective_dim(&q, Plus(3)).0, vec![1, 1, 1, 0]);
    }

    #[test]
    fn rep_json() {
        let q = Arc::new(linear_quiver(2));
        let s = serde_json::to_string(&interval(&q, 0, 2)).unwrap();
        assert_eq!(s, r#"{"dims":{"1":1,"2":1},"maps":{"1->2":[["1"]]}}"#);
    }
}
