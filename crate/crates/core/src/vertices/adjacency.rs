use crate::exactmath::{sub, IntVec};
use crate::lp::LinearProgram;

use super::Family;

/// Which differences `w - v` are tried as edge directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AdjacencyMode {
    /// Every other vertex is a candidate.
    Full,
    /// Only differences of the shapes that edges of the family can have:
    /// `e_i - e_j` for base polytopes, additionally `±e_i` for independence
    /// polytopes, and `c·e_i` or `c·(e_i - e_j)` for polymatroids.
    #[default]
    Pruned,
}

fn is_candidate(family: Family, d: &[i64]) -> bool {
    let nz: Vec<i64> = d.iter().copied().filter(|&x| x != 0).collect();
    match (family, nz.as_slice()) {
        (Family::Bases, [a, b]) => a * b == -1,
        (Family::Bases, _) => false,
        (Family::Independence, [a]) => a.abs() == 1,
        (Family::Independence, [a, b]) => a * b == -1,
        (Family::Polymatroid, [_]) => true,
        (Family::Polymatroid, [a, b]) => a + b == 0,
        _ => false,
    }
}

/// `d` is an extreme direction of `cone(gens ∪ {d})`, i.e. not a non-negative
/// combination of `gens`.
pub(crate) fn is_extreme(d: &[i64], gens: &[&IntVec]) -> bool {
    if gens.is_empty() {
        return true;
    }
    let rows: Vec<Vec<i64>> = (0..d.len())
        .map(|r| gens.iter().map(|g| g[r]).collect())
        .collect();
    !LinearProgram::feasibility(&rows, d)
}

/// Neighbour lists: `w` is adjacent to `v` iff `w - v` is an extreme ray of
/// the cone generated by all differences `u - v`.
pub fn adjacency(family: Family, vertices: &[IntVec], mode: AdjacencyMode) -> Vec<Vec<usize>> {
    let adj: Vec<Vec<usize>> = (0..vertices.len())
        .map(|i| neighbours(family, vertices, i, mode))
        .collect();
    for (i, list) in adj.iter().enumerate() {
        for &j in list {
            assert!(adj[j].contains(&i), "adjacency must be symmetric");
        }
    }
    adj
}

fn neighbours(family: Family, vertices: &[IntVec], i: usize, mode: AdjacencyMode) -> Vec<usize> {
    let v = &vertices[i];
    let diffs: Vec<(usize, IntVec)> = vertices
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(j, w)| (j, sub(w, v)))
        .filter(|(_, d)| mode == AdjacencyMode::Full || is_candidate(family, d))
        .collect();
    let mut out = Vec::new();
    for (k, (j, d)) in diffs.iter().enumerate() {
        let others: Vec<&IntVec> = diffs
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != k)
            .map(|(_, (_, g))| g)
            .collect();
        if is_extreme(d, &others) {
            out.push(*j);
        }
    }
    if family == Family::Bases {
        // two bases are adjacent exactly when they differ by one exchange
        let exchange: Vec<usize> = (0..vertices.len())
            .filter(|&j| j != i && is_candidate(Family::Bases, &sub(&vertices[j], v)))
            .collect();
        assert_eq!(
            out, exchange,
            "base polytope edges must be single exchanges"
        );
    }
    out
}
