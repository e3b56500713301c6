//! Gluing along source and sink leaves, over every orientation of A4, A5, D4.

use tiltquiver::ladkani::{rho_x, LeafKind, LeafSetting};
use tiltquiver::quiver::{d_quiver, linear_quiver, Quiver, Vertex};

fn leaves(q: &Quiver) -> Vec<Vertex> {
    q.vertices().iter().copied().filter(|&v| q.is_leaf(v) && (q.is_source(v) || q.is_sink(v))).collect()
}

fn orientations() -> Vec<Quiver> {
    let mut out = linear_quiver(4).all_orientations();
    out.extend(linear_quiver(5).all_orientations());
    out.extend(d_quiver(3, None).unwrap().all_orientations());
    out
}

#[test]
fn every_leaf_statement_holds() {
    for q in orientations() {
        for x in leaves(&q) {
            let s = LeafSetting::new(&q, x).unwrap();
            let at = format!("{q} at {x}");
            assert_eq!(s.check_pi_iota().unwrap(), None, "{at}");
            assert_eq!(s.check_iota_pi().unwrap(), None, "{at}");
            assert_eq!(s.check_monotone_bijection().unwrap(), None, "{at}");
            assert_eq!(s.check_glued_order().unwrap(), None, "{at}");
            assert_eq!(s.check_boundary_bijection(), None, "{at}");
            assert_eq!(s.check_arrow_decomposition(), None, "{at}");
            assert_eq!(s.check_complement_at_x(), None, "{at}");
        }
    }
}

#[test]
fn reflection_matches_complements() {
    for q in orientations() {
        for x in leaves(&q) {
            let here = LeafSetting::new(&q, x).unwrap();
            if here.kind != LeafKind::Source {
                continue;
            }
            let there = LeafSetting::new(&q.reflect(x).unwrap(), x).unwrap();
            let report = rho_x(&here, &there).unwrap();
            assert_eq!(report.outcome, None, "{q} at {x}");
            assert_eq!(report.map.len(), here.tilt_sub_x().1.len());
            assert_eq!(here.tq.arrow_count(), there.tq.arrow_count());
        }
    }
}

#[test]
fn a3_source_counts() {
    let s = LeafSetting::new(&linear_quiver(3), Vertex::Num(1)).unwrap();
    assert_eq!(s.tilt_sub_x().0.len(), 2);
    assert_eq!(s.boundary_arrows().len(), 2);
}
