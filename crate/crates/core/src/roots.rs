//! Positive roots of a simply-laced Dynkin diagram, by closing the simple
//! roots under simple reflections. Only the underlying graph matters, so this
//! serves as an orientation-free check on the indecomposable lists.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::rep::DimVector;

const LIMIT: usize = 100_000;

pub fn positive_roots(q: &Quiver) -> Result<Vec<DimVector>> {
    let n = q.len();
    let adjacency: Vec<Vec<usize>> = q
        .vertices()
        .iter()
        .map(|&v| q.neighbors(v).into_iter().map(|w| q.index_of(w).unwrap()).collect())
        .collect();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let pairing = 2 * r[i] - adjacency[i].iter().map(|&j| r[j]).sum::<i64>();
            if pairing == 0 {
                continue;
            }
            let mut s = r.clone();
            s[i] -= pairing;
            if seen.insert(s.clone()) {
                if seen.len() > LIMIT {
                    return Err(Error::NotTypeAD);
                }
                queue.push_back(s);
            }
        }
    }
    Ok(seen
        .into_iter()
        .filter(|r| r.iter().all(|&x| x >= 0))
        .map(|r| DimVector(r.into_iter().map(|x| x as u32).collect()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{d_quiver, linear_quiver};

    #[test]
    fn root_counts() {
        for n in 1..=6 {
            assert_eq!(positive_roots(&linear_quiver(n)).unwrap().len(), n * (n + 1) / 2);
        }
        // D_m has m(m-1) positive roots
        for m in 3..=7 {
            assert_eq!(positive_roots(&d_quiver(m - 1, None).unwrap()).unwrap().len(), m * (m - 1));
        }
    }
}
