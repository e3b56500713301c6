//! Combinatorial models for the canonical quivers.
//!
//! Type A (`1 -> 2 -> ... -> n`): the indecomposables are the interval modules
//! `L(i,j)`, `0 <= i < j <= n`, supported on `i+1..=j`.
//!
//! Type D (`Q_n`: `1 -> ... -> n-1` forking to `n+` and `n-`): the
//! indecomposables are `L(a,b)`, `L+(a,n)`, `L-(a,n)` and `M(a,b)`, the last
//! one two-dimensional on `b+1..=n-1`.
//!
//! Everything in this module is pure combinatorics: interval compatibility,
//! the case table for Ext-vanishing, Auslander-Reiten translates, and the
//! class decomposition of tilting modules over `Q_n` with the maps that
//! identify each class with tilting modules of smaller quivers. The linear
//! algebra in [`crate::rep`] is checked against these predicates, and vice
//! versa.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiver::{d_quiver, linear_quiver, DynkinKind, Quiver};
use crate::rep::{one, DimVector, Rep};

/// Interval module `L(i,j)` of the linear A quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub i: u32,
    pub j: u32,
}

impl Interval {
    pub fn new(i: u32, j: u32) -> Self {
        assert!(i < j, "interval L({i},{j}) must have i < j");
        Interval { i, j }
    }

    pub fn closed(&self) -> (u32, u32) {
        (self.i, self.j)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.i, self.j)
    }
}

/// Indecomposables of `Q_n`; `n` is implied by context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndecD {
    L(u32, u32),
    LPlus(u32),
    LMinus(u32),
    M(u32, u32),
}

impl IndecD {
    fn check(&self, n: u32) -> Result<()> {
        let ok = match *self {
            IndecD::L(a, b) | IndecD::M(a, b) => a < b && b < n,
            IndecD::LPlus(a) | IndecD::LMinus(a) => a < n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::BadModel(format!("{} for n = {n}", self.render(n))))
        }
    }

    pub fn render(&self, n: u32) -> String {
        match *self {
            IndecD::L(a, b) => format!("L({a},{b})"),
            IndecD::LPlus(a) => format!("L+({a},{n})"),
            IndecD::LMinus(a) => format!("L-({a},{n})"),
            IndecD::M(a, b) => format!("M({a},{b})"),
        }
    }
}

/// A named indecomposable of a canonical quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    A(Interval),
    /// Fork parameter `n` and the module.
    D(u32, IndecD),
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::A(x) => x.fmt(f),
            Model::D(n, x) => f.write_str(&x.render(*n)),
        }
    }
}

impl Serialize for Model {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Every model of the given type; `n` is the number of vertices for A and
/// the fork parameter for D.
pub fn all_models(kind: DynkinKind, n: usize) -> Vec<Model> {
    let n32 = n as u32;
    match kind {
        DynkinKind::A => {
            let mut out = Vec::new();
            for i in 0..n32 {
                for j in i + 1..=n32 {
                    out.push(Model::A(Interval::new(i, j)));
                }
            }
            out
        }
        DynkinKind::D => all_d(n32).into_iter().map(|x| Model::D(n32, x)).collect(),
    }
}

pub fn all_d(n: u32) -> Vec<IndecD> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push(IndecD::L(a, b));
            out.push(IndecD::M(a, b));
        }
        out.push(IndecD::LPlus(a));
        out.push(IndecD::LMinus(a));
    }
    out.sort();
    out
}

/// Closed integer intervals are compatible when disjoint or nested.
pub fn compatible(p: (u32, u32), q: (u32, u32)) -> bool {
    let disjoint = p.1 < q.0 || q.1 < p.0;
    let nested = (q.0 <= p.0 && p.1 <= q.1) || (p.0 <= q.0 && q.1 <= p.1);
    disjoint || nested
}

/// `Hom(L(i,j), L(i',j')) != 0` on the linear A quiver, i.e. `i' <= i < j' <= j`.
pub fn hom_nonzero_a(x: Interval, y: Interval) -> bool {
    y.i <= x.i && x.i < y.j && y.j <= x.j
}

/// Ext vanishes both ways between two interval modules.
pub fn ext_vanish_a(x: Interval, y: Interval) -> bool {
    compatible(x.closed(), y.closed())
}

/// Ext vanishes both ways between two indecomposables of `Q_n`, by the
/// seven-case table.
pub fn ext_vanish_d(n: u32, x: IndecD, y: IndecD) -> bool {
    use IndecD::*;
    match (x, y) {
        (L(a, b), L(c, d)) => compatible((a, b), (c, d)),
        (L(a, b), LPlus(c) | LMinus(c)) | (LPlus(c) | LMinus(c), L(a, b)) => compatible((a, b), (c, n)),
        (L(a, b), M(c, d)) | (M(c, d), L(a, b)) => compatible((a, b), (c, n)) && compatible((a, b), (d, n)),
        (M(a, b), LPlus(c) | LMinus(c)) | (LPlus(c) | LMinus(c), M(a, b)) => a <= c && c <= b,
        (LPlus(_), LPlus(_)) | (LMinus(_), LMinus(_)) => true,
        (LPlus(a), LMinus(c)) | (LMinus(a), LPlus(c)) => a == c,
        (M(a, b), M(c, d)) => (c <= a && b <= d) || (a <= c && d <= b),
    }
}

/// Ext-vanishing predicate on models of the same quiver.
pub fn ext_vanish_pair(x: &Model, y: &Model) -> Result<bool> {
    match (x, y) {
        (Model::A(a), Model::A(b)) => Ok(ext_vanish_a(*a, *b)),
        (Model::D(n, a), Model::D(m, b)) if n == m => Ok(ext_vanish_d(*n, *a, *b)),
        _ => Err(Error::BadModel(format!("{x} and {y} live on different quivers"))),
    }
}

pub fn tau_a(n: u32, x: Interval) -> Option<Interval> {
    (x.j < n).then(|| Interval::new(x.i + 1, x.j + 1))
}

pub fn tau_d(n: u32, x: IndecD) -> Option<IndecD> {
    use IndecD::*;
    match x {
        L(a, b) if b < n - 1 => Some(L(a + 1, b + 1)),
        L(a, _) => Some(M(0, a + 1)),
        // L±(n-1, n) is the simple projective at the fork tip
        LPlus(a) => (a + 1 < n).then_some(LMinus(a + 1)),
        LMinus(a) => (a + 1 < n).then_some(LPlus(a + 1)),
        M(a, b) => (b < n - 1).then_some(M(a + 1, b + 1)),
    }
}

/// Auslander-Reiten translate; `None` exactly on projectives.
pub fn tau(x: &Model, n: u32) -> Option<Model> {
    match *x {
        Model::A(i) => tau_a(n, i).map(Model::A),
        Model::D(m, d) => tau_d(m, d).map(|t| Model::D(m, t)),
    }
}

pub fn dim_vector_a(n: u32, x: Interval) -> DimVector {
    DimVector((1..=n).map(|v| u32::from(x.i < v && v <= x.j)).collect())
}

/// Indexed like `d_quiver(n)`'s vertices: `1..n-1`, then `n+`, `n-`.
pub fn dim_vector_d(n: u32, x: IndecD) -> DimVector {
    use IndecD::*;
    let mut d: Vec<u32> = (1..n)
        .map(|v| match x {
            L(a, b) => u32::from(a < v && v <= b),
            LPlus(a) | LMinus(a) => u32::from(a < v),
            M(a, b) => {
                if a < v && v <= b {
                    1
                } else if b < v {
                    2
                } else {
                    0
                }
            }
        })
        .collect();
    let (plus, minus) = match x {
        L(..) => (0, 0),
        LPlus(_) => (1, 0),
        LMinus(_) => (0, 1),
        M(..) => (1, 1),
    };
    d.push(plus);
    d.push(minus);
    DimVector(d)
}

/// Dimension vector over the canonical quiver with `n` vertices (A) or fork
/// parameter `n` (D).
pub fn dim_vector(x: &Model, n: u32) -> DimVector {
    match *x {
        Model::A(i) => dim_vector_a(n, i),
        Model::D(_, d) => dim_vector_d(n, d),
    }
}

/// The explicit representation of a model on the canonical quiver with `n`
/// vertices (A) or fork parameter `n` (D).
pub fn build_model_rep(model: &Model, n: usize) -> Result<Rep> {
    match *model {
        Model::A(x) => {
            if x.j as usize > n {
                return Err(Error::BadModel(format!("{x} for n = {n}")));
            }
            let q = Arc::new(linear_quiver(n));
            let dims = dim_vector_a(n as u32, x);
            let maps = q
                .arrows()
                .iter()
                .map(|&(s, _)| {
                    let s = index(s);
                    // arrow s -> s+1 is the identity inside the support
                    if x.i < s && s < x.j {
                        Matrix::identity(1)
                    } else {
                        Matrix::zeros(dims.0[s as usize] as usize, dims.0[s as usize - 1] as usize)
                    }
                })
                .collect();
            Rep::new(q, dims, maps)
        }
        Model::D(m, x) => {
            if m as usize != n {
                return Err(Error::BadModel(format!("{model} built for n = {n}")));
            }
            x.check(m)?;
            build_d(m, x)
        }
    }
}

fn index(v: crate::quiver::Vertex) -> u32 {
    match v {
        crate::quiver::Vertex::Num(i) | crate::quiver::Vertex::Plus(i) | crate::quiver::Vertex::Minus(i) => i,
    }
}

fn build_d(n: u32, x: IndecD) -> Result<Rep> {
    use crate::quiver::Vertex::*;
    use IndecD::*;
    let q: Arc<Quiver> = Arc::new(d_quiver(n as usize, None)?);
    let dims = dim_vector_d(n, x);
    let dim_at = |v| dims.0[q.index_of(v).unwrap()] as usize;
    let maps = q
        .arrows()
        .iter()
        .map(|&(s, t)| {
            let (rows, cols) = (dim_at(t), dim_at(s));
            let mut m = Matrix::zeros(rows, cols);
            if rows == 0 || cols == 0 {
                return m;
            }
            match (x, t) {
                (M(_, b), Num(_)) if index(s) == b => {
                    // k -> k^2, the diagonal
                    m[(0, 0)] = one();
                    m[(1, 0)] = one();
                }
                (M(_, b), Plus(_)) if b < n - 1 => m[(0, 0)] = one(),
                (M(_, b), Minus(_)) if b < n - 1 => m[(0, 1)] = one(),
                _ => {
                    // identity between equal-dimensional spaces of the support
                    for k in 0..rows.min(cols) {
                        m[(k, k)] = one();
                    }
                }
            }
            m
        })
        .collect();
    Rep::new(q, dims, maps)
}

/// Dimension vector of a direct sum of models of `Q_n`.
pub fn module_dim_d(n: u32, t: &[IndecD]) -> DimVector {
    t.iter().fold(DimVector::zero(n as usize + 1), |acc, &x| acc.add(&dim_vector_d(n, x)))
}

/// δ-class of a tilting module over `Q_n`, keyed by the number of vertices
/// of dimension one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DeltaClass {
    /// δ = n + 1
    T0,
    /// δ = n
    T1,
    /// δ = n - 1
    T2,
    /// any other δ (never occurs)
    Other(u32),
}

/// Refinements of the T1 class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Tag {
    /// all summands insincere and the `n+` entry is one
    APlus,
    AMinus,
    /// `n+` entry is one and `M(0,j)` is a summand
    BPlus(u32),
    BMinus(u32),
    /// vertex 1 has dimension one and `M(0,j)` is a summand
    C(u32),
    /// vertex 1 has dimension one but no `M(0,j)` summand (never occurs)
    CWithoutM,
    /// path vertex `i` has dimension one
    Fiber(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DClassification {
    pub delta: u32,
    pub class: DeltaClass,
    pub tags: Vec<Tag>,
}

/// Sign of a fork tip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

fn m0_summands(t: &[IndecD]) -> Vec<u32> {
    t.iter()
        .filter_map(|x| match *x {
            IndecD::M(0, j) => Some(j),
            _ => None,
        })
        .collect()
}

pub fn is_sincere_d(n: u32, x: IndecD) -> bool {
    dim_vector_d(n, x).is_sincere()
}

/// Classifies a tilting module over `Q_n` (given by its summands). The δ
/// value comes from the dimension-vector formula `#vertices - #{dim = 1}`.
pub fn classify_d(n: u32, t: &[IndecD]) -> DClassification {
    let dim = module_dim_d(n, t);
    let ones = dim.0.iter().filter(|&&x| x == 1).count() as u32;
    let delta = n + 1 - ones;
    let class = match delta {
        d if d == n + 1 => DeltaClass::T0,
        d if d == n => DeltaClass::T1,
        d if d + 1 == n => DeltaClass::T2,
        d => DeltaClass::Other(d),
    };
    let mut tags = Vec::new();
    if class == DeltaClass::T1 {
        let plus = dim.0[n as usize - 1];
        let minus = dim.0[n as usize];
        let insincere = t.iter().all(|&x| !is_sincere_d(n, x));
        let m0 = m0_summands(t);
        if plus == 1 {
            if insincere {
                tags.push(Tag::APlus);
            }
            tags.extend(m0.iter().map(|&j| Tag::BPlus(j)));
        }
        if minus == 1 {
            if insincere {
                tags.push(Tag::AMinus);
            }
            tags.extend(m0.iter().map(|&j| Tag::BMinus(j)));
        }
        if dim.0[0] == 1 {
            if m0.is_empty() {
                tags.push(Tag::CWithoutM);
            }
            tags.extend(m0.iter().map(|&j| Tag::C(j)));
        }
        for i in 1..n {
            if dim.0[i as usize - 1] == 1 {
                tags.push(Tag::Fiber(i));
            }
        }
    }
    DClassification { delta, class, tags }
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ClassMismatch(what()))
    }
}

/// The map `B±(j) -> Tilt(1 -> ... -> n)`: drop `M(0,j)`, keep the `L(a,b)`
/// and send `L∓(a,n)` (the tip opposite to `sign`) to `L(a,n)`.
pub fn bijection_b(n: u32, sign: Sign, j: u32, t: &[IndecD]) -> Result<Vec<Interval>> {
    let tag = match sign {
        Sign::Plus => Tag::BPlus(j),
        Sign::Minus => Tag::BMinus(j),
    };
    require(classify_d(n, t).tags.contains(&tag), || format!("module not in B{sign:?}({j})"))?;
    let mut out = Vec::with_capacity(t.len() - 1);
    for &x in t {
        match (x, sign) {
            (IndecD::M(0, k), _) if k == j => {}
            (IndecD::L(a, b), _) => out.push(Interval::new(a, b)),
            (IndecD::LMinus(a), Sign::Plus) | (IndecD::LPlus(a), Sign::Minus) => out.push(Interval::new(a, n)),
            _ => return Err(Error::ClassMismatch(format!("unexpected summand {}", x.render(n)))),
        }
    }
    Ok(sorted(out))
}

/// Inverse of [`bijection_b`].
pub fn bijection_b_inverse(n: u32, sign: Sign, j: u32, t: &[Interval]) -> Vec<IndecD> {
    let mut out: Vec<IndecD> = t
        .iter()
        .map(|x| match (x.j == n, sign) {
            (false, _) => IndecD::L(x.i, x.j),
            (true, Sign::Plus) => IndecD::LMinus(x.i),
            (true, Sign::Minus) => IndecD::LPlus(x.i),
        })
        .collect();
    out.push(IndecD::M(0, j));
    sorted(out)
}

/// `max { j' : L(j', end) is a summand }` for a module of the linear quiver.
/// With `end = n` this is the index `j` of the class `B±(j)` that a module on
/// `1 -> ... -> n` comes from: `L∓(j, n)` is always a summand of a module in
/// `B±(j)`, and `L∓(a, n)` with `a > j` never is.
pub fn max_start_ending_at(t: &[Interval], end: u32) -> Option<u32> {
    t.iter().filter(|x| x.j == end).map(|x| x.i).max()
}

/// The map `C(j) -> Tilt(Q_{n-1})`: drop `M(0,j)` and shift the remaining
/// summands (all zero at vertex 1) down by one.
pub fn bijection_c(n: u32, j: u32, t: &[IndecD]) -> Result<Vec<IndecD>> {
    require(classify_d(n, t).tags.contains(&Tag::C(j)), || format!("module not in C({j})"))?;
    let rest: Vec<IndecD> = t.iter().copied().filter(|&x| x != IndecD::M(0, j)).collect();
    shift_down(n, 1, &rest)
}

/// Inverse of [`bijection_c`]: `t` lives over `Q_{n-1}`.
pub fn bijection_c_inverse(j: u32, t: &[IndecD]) -> Vec<IndecD> {
    let mut out = shift_up(1, t);
    out.push(IndecD::M(0, j));
    sorted(out)
}

/// `sup { b : L±(b, n) or M(a, b) is a summand }`.
pub fn j_prime(t: &[IndecD]) -> Option<u32> {
    t.iter()
        .filter_map(|&x| match x {
            IndecD::LPlus(b) | IndecD::LMinus(b) | IndecD::M(_, b) => Some(b),
            IndecD::L(..) => None,
        })
        .max()
}

fn shift_down(n: u32, s: u32, t: &[IndecD]) -> Result<Vec<IndecD>> {
    let bad = |x: IndecD| Error::ClassMismatch(format!("{} does not vanish below vertex {}", x.render(n), s + 1));
    let out = t
        .iter()
        .map(|&x| match x {
            IndecD::L(a, b) if a >= s => Ok(IndecD::L(a - s, b - s)),
            IndecD::M(a, b) if a >= s => Ok(IndecD::M(a - s, b - s)),
            IndecD::LPlus(a) if a >= s => Ok(IndecD::LPlus(a - s)),
            IndecD::LMinus(a) if a >= s => Ok(IndecD::LMinus(a - s)),
            _ => Err(bad(x)),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(sorted(out))
}

fn shift_up(s: u32, t: &[IndecD]) -> Vec<IndecD> {
    t.iter()
        .map(|&x| match x {
            IndecD::L(a, b) => IndecD::L(a + s, b + s),
            IndecD::M(a, b) => IndecD::M(a + s, b + s),
            IndecD::LPlus(a) => IndecD::LPlus(a + s),
            IndecD::LMinus(a) => IndecD::LMinus(a + s),
        })
        .collect()
}

/// Splits a T1-module of `Q_n` whose unique dimension-one path vertex is `i`
/// into a tilting module of the linear quiver on `i-1` vertices (the
/// intervals ending before `i`) and a module of `Q_{n-i+1}` (everything else,
/// shifted so that `i` becomes vertex 1, with `M(0,j)` replaced by
/// `M(0,j-i+1)`).
pub fn product_split(n: u32, i: u32, t: &[IndecD]) -> Result<(Vec<Interval>, Vec<IndecD>)> {
    require((1..n).contains(&i), || format!("vertex {i} is not a path vertex"))?;
    let c = classify_d(n, t);
    require(c.class == DeltaClass::T1 && c.tags.contains(&Tag::Fiber(i)), || {
        format!("module is not a T1 module with dimension one at {i}")
    })?;
    let m0 = m0_summands(t);
    let [j] = m0.as_slice() else {
        return Err(Error::ClassMismatch(format!("expected one M(0,j) summand, found {}", m0.len())));
    };
    let s = i - 1;
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &x in t {
        match x {
            IndecD::M(0, k) if k == *j => {}
            IndecD::L(a, b) if b < i => left.push(Interval::new(a, b)),
            _ => right.push(x),
        }
    }
    let mut right = shift_down(n, s, &right)?;
    right.push(IndecD::M(0, j - s));
    Ok((sorted(left), sorted(right)))
}

/// Inverse of [`product_split`].
pub fn product_join(n: u32, i: u32, left: &[Interval], right: &[IndecD]) -> Result<Vec<IndecD>> {
    let s = i - 1;
    let m0 = m0_summands(right);
    let [j] = m0.as_slice() else {
        return Err(Error::ClassMismatch("right factor needs exactly one M(0,j)".into()));
    };
    let rest: Vec<IndecD> = right.iter().copied().filter(|&x| x != IndecD::M(0, *j)).collect();
    let mut out = shift_up(s, &rest);
    out.extend(left.iter().map(|x| IndecD::L(x.i, x.j)));
    out.push(IndecD::M(0, j + s));
    for x in &out {
        x.check(n)?;
    }
    Ok(sorted(out))
}

/// Some summand is nonzero on every path vertex `1..=n-1`; it is then
/// `L(0,n-1)`, `L±(0,n)` or some `M(0,b)`.
pub fn has_path_covering_summand(n: u32, t: &[IndecD]) -> bool {
    t.iter().any(|&x| dim_vector_d(n, x).0[..n as usize - 1].iter().all(|&e| e >= 1))
}

/// `L(0,n-1)` as a summand forces both `L+(0,n)` and `L-(0,n)`.
pub fn full_path_forces_fork_pair(n: u32, t: &[IndecD]) -> bool {
    !t.contains(&IndecD::L(0, n - 1)) || (t.contains(&IndecD::LPlus(0)) && t.contains(&IndecD::LMinus(0)))
}

/// The shape of minimal-δ modules: both `L±(0,n)` plus interval summands only.
pub fn is_minimal_delta_shape(t: &[IndecD]) -> bool {
    t.contains(&IndecD::LPlus(0))
        && t.contains(&IndecD::LMinus(0))
        && t.iter().all(|x| matches!(x, IndecD::L(..) | IndecD::LPlus(0) | IndecD::LMinus(0)))
}

/// Distinct values, for counting images.
pub fn distinct<T: Ord + Clone>(items: impl IntoIterator<Item = T>) -> BTreeSet<T> {
    items.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::hom_dim;
    use IndecD::*;

    #[test]
    fn compatibility_examples() {
        assert!(!compatible((0, 1), (1, 2)));
        assert!(compatible((0, 1), (2, 3)));
        assert!(compatible((1, 2), (0, 4)));
        assert!(!ext_vanish_a(Interval::new(0, 2), Interval::new(2, 4)));
    }

    #[test]
    fn lemma_table_examples() {
        assert!(ext_vanish_d(3, LPlus(0), LMinus(0)));
        assert!(!ext_vanish_d(3, M(0, 1), M(1, 2)));
        assert!(ext_vanish_pair(&Model::A(Interval::new(0, 1)), &Model::D(3, L(0, 1))).is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_a(2, Interval::new(0, 1)), Some(Interval::new(1, 2)));
        assert_eq!(tau_a(2, Interval::new(1, 2)), None);
        for n in 2..6 {
            for a in 0..n - 1 {
                assert_eq!(tau_d(n, L(a, n - 1)), Some(M(0, a + 1)));
            }
        }
    }

    #[test]
    fn dim_vector_examples() {
        assert_eq!(dim_vector_a(4, Interval::new(1, 3)).0, vec![0, 1, 1, 0]);
        assert_eq!(dim_vector_d(3, M(0, 1)).0, vec![1, 2, 1, 1]);
        assert_eq!(dim_vector_d(3, LMinus(0)).0, vec![1, 1, 0, 1]);
        assert_eq!(dim_vector(&Model::D(3, LPlus(2)), 3).0, vec![0, 0, 1, 0]);
    }

    #[test]
    fn model_matrices() {
        use crate::quiver::Vertex::*;
        let m = build_model_rep(&Model::D(3, M(0, 1)), 3).unwrap();
        assert_eq!(m.map(Num(1), Num(2)).unwrap(), &Matrix::from_ints(&[&[1], &[1]], 1));
        assert_eq!(m.map(Num(2), Plus(3)).unwrap(), &Matrix::from_ints(&[&[1, 0]], 2));
        assert_eq!(m.map(Num(2), Minus(3)).unwrap(), &Matrix::from_ints(&[&[0, 1]], 2));

        let l = build_model_rep(&Model::D(3, LPlus(0)), 3).unwrap();
        assert_eq!(l.map(Num(1), Num(2)).unwrap(), &Matrix::identity(1));
        assert_eq!(l.map(Num(2), Plus(3)).unwrap(), &Matrix::identity(1));

        assert!(build_model_rep(&Model::D(3, M(1, 3)), 3).is_err());
        assert!(build_model_rep(&Model::A(Interval::new(0, 5)), 3).is_err());
    }

    #[test]
    fn models_are_bricks() {
        for n in 1..=5 {
            for m in all_models(DynkinKind::A, n) {
                let r = build_model_rep(&m, n).unwrap();
                assert_eq!(hom_dim(&r, &r).unwrap(), 1, "{m}");
            }
        }
        for n in 2..=5 {
            for m in all_models(DynkinKind::D, n) {
                let r = build_model_rep(&m, n).unwrap();
                assert_eq!(hom_dim(&r, &r).unwrap(), 1, "{m}");
            }
        }
    }

    #[test]
    fn hom_criterion_strict_boundary() {
        // Hom(S_3, S_2) = 0 on 1 -> 2 -> 3 although i' <= i <= j' <= j holds
        assert!(!hom_nonzero_a(Interval::new(2, 3), Interval::new(1, 2)));
        assert!(hom_nonzero_a(Interval::new(0, 2), Interval::new(0, 1)));
    }

    #[test]
    fn classification_of_minimal_module() {
        let t = [LPlus(0), LMinus(0), L(0, 1), L(0, 2)];
        let c = classify_d(3, &t);
        assert_eq!(c.class, DeltaClass::T2);
        assert!(is_minimal_delta_shape(&t));
    }
}
