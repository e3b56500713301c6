//! The combinatorial predicates against the linear-algebra oracle.

use tiltquiver::combinat::{
    dim_vector, ext_vanish_pair, hom_nonzero_a, tau, Interval, Model,
};
use tiltquiver::quiver::{d_quiver, linear_quiver, Quiver, Vertex};
use tiltquiver::rep::{ext_dim, hom_dim, indecomposables, Indec};

fn canonical(q: &Quiver) -> Vec<(Model, Indec)> {
    indecomposables(q)
        .unwrap()
        .into_iter()
        .map(|x| (x.model.expect("canonical quivers carry model names"), x))
        .collect()
}

fn quivers() -> Vec<(Quiver, u32)> {
    let mut out: Vec<(Quiver, u32)> = (1..=6).map(|n| (linear_quiver(n), n as u32)).collect();
    out.extend((3..=5).map(|n| (d_quiver(n, None).unwrap(), n as u32)));
    out
}

#[test]
fn model_dimension_vectors_match_representations() {
    for (q, n) in quivers() {
        for (m, x) in canonical(&q) {
            assert_eq!(dim_vector(&m, n), x.dim, "{m} on {q}");
        }
    }
}

#[test]
fn ext_vanishing_table_matches_oracle() {
    for (q, _) in quivers() {
        let ind = canonical(&q);
        for (m, x) in &ind {
            for (p, y) in &ind {
                let oracle = ext_dim(&x.rep, &y.rep).unwrap() == 0 && ext_dim(&y.rep, &x.rep).unwrap() == 0;
                assert_eq!(ext_vanish_pair(m, p).unwrap(), oracle, "{m} vs {p} on {q}");
            }
        }
    }
}

#[test]
fn interval_hom_criterion_matches_oracle() {
    for n in 1..=6 {
        let ind = canonical(&linear_quiver(n));
        for (m, x) in &ind {
            for (p, y) in &ind {
                let (Model::A(a), Model::A(b)) = (m, p) else { unreachable!() };
                let oracle = hom_dim(&x.rep, &y.rep).unwrap() != 0;
                assert_eq!(hom_nonzero_a(*a, *b), oracle, "Hom({m}, {p}) on A{n}");
            }
        }
    }
}

/// Coxeter transformation as the composite of sink reflections along an
/// admissible ordering, applied to a dimension vector (may leave the positive
/// cone, in which case the input is projective).
fn coxeter(q: &Quiver, d: &[i64]) -> Vec<i64> {
    let mut cur = q.clone();
    let mut v = d.to_vec();
    for _ in 0..q.len() {
        let x = *cur.sinks_sources().0.iter().next().unwrap();
        let i = cur.index_of(x).unwrap();
        let around: i64 = cur.neighbors(x).into_iter().map(|w| v[cur.index_of(w).unwrap()]).sum();
        v[i] = around - v[i];
        cur = cur.reflect(x).unwrap();
    }
    assert_eq!(&cur, q, "a full admissible sequence returns to the quiver");
    v
}

#[test]
fn translate_matches_coxeter_and_duality() {
    for (q, n) in quivers() {
        let ind = canonical(&q);
        let find = |m: Model| ind.iter().find(|(p, _)| *p == m).map(|(_, x)| x).unwrap();
        for (m, x) in &ind {
            let d: Vec<i64> = x.dim.0.iter().map(|&e| e as i64).collect();
            let c = coxeter(&q, &d);
            match tau(m, n) {
                Some(t) => {
                    let want: Vec<i64> = find(t).dim.0.iter().map(|&e| e as i64).collect();
                    assert_eq!(c, want, "tau {m} on {q}");
                    for (_, y) in &ind {
                        // Ext(M, N) = D Hom(N, tau M)
                        assert_eq!(ext_dim(&x.rep, &y.rep).unwrap(), hom_dim(&y.rep, &find(t).rep).unwrap());
                    }
                }
                None => {
                    assert!(c.iter().any(|&e| e < 0), "{m} should be projective on {q}");
                    for (_, y) in &ind {
                        assert_eq!(ext_dim(&x.rep, &y.rep).unwrap(), 0);
                    }
                }
            }
        }
    }
}

#[test]
fn interval_models_are_named_by_support() {
    let q = linear_quiver(3);
    let ind = canonical(&q);
    let (_, x) = ind.iter().find(|(m, _)| *m == Model::A(Interval::new(0, 2))).unwrap();
    assert_eq!(x.rep.dim_at(Vertex::Num(1)), 1);
    assert_eq!(x.rep.dim_at(Vertex::Num(3)), 0);
}
