//! Vertices and edges of matroid base polytopes, independence polytopes and
//! integral polymatroids.

mod adjacency;

use thiserror::Error;

use crate::exactmath::{rank_i64, IntEchelon, IntVec};
use crate::matroid::{
    check_matroid_axioms, check_polymatroid_axioms, full_set, MatroidError, RankFunction, Subset,
};

pub use adjacency::{adjacency, AdjacencyMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Bases,
    Independence,
    Polymatroid,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VertexError {
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("rank axioms violated: {0}")]
    Axioms(String),
    #[error("{what} needs {needed} steps, over the budget of {limit}")]
    Budget {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
}

/// Limits on exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_candidates: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_candidates: 20_000_000,
        }
    }
}

impl Budget {
    pub fn check(&self, what: &'static str, needed: u128) -> Result<(), VertexError> {
        if needed > self.max_candidates {
            Err(VertexError::Budget {
                what,
                needed,
                limit: self.max_candidates,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone)]
pub struct PolytopeSpec {
    pub family: Family,
    pub rank: RankFunction,
    pub n: usize,
    /// `f([n])`, the largest value of the rank function.
    pub r: i64,
}

impl PolytopeSpec {
    /// Validates the rank function against the axioms of its family.
    pub fn new(family: Family, rank: RankFunction) -> Result<Self, VertexError> {
        let report = match family {
            Family::Bases | Family::Independence => {
                if !rank.is_matroid() {
                    return Err(MatroidError::NotMatroid.into());
                }
                check_matroid_axioms(&rank)?
            }
            Family::Polymatroid => check_polymatroid_axioms(&rank)?,
        };
        report.map_err(|v| VertexError::Axioms(v.to_string()))?;
        let n = rank.n();
        let r = rank.total_rank();
        Ok(PolytopeSpec { family, rank, n, r })
    }

    /// Rank function as a dense table indexed by bitmask.
    pub fn table(&self) -> Result<Vec<i64>, VertexError> {
        Ok(self.rank.tabulate()?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    pub vertices: Vec<IntVec>,
    pub adjacency: Vec<Vec<usize>>,
    pub dim: usize,
}

impl VertexSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices.first().map_or(0, Vec::len)
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.vertices.iter().position(|w| w == v)
    }
}

pub fn adjacent_vertices(vs: &VertexSet, i: usize) -> &[usize] {
    &vs.adjacency[i]
}

/// Next bitmask with the same popcount (Gosper's hack).
fn next_same_weight(s: Subset) -> Subset {
    let c = s & s.wrapping_neg();
    let r = s + c;
    (((r ^ s) >> 2) / c) | r
}

/// All `r`-subsets `B` with `f(B) = r`, in increasing bitmask order.
pub fn enumerate_bases(f: &RankFunction, budget: &Budget) -> Result<Vec<Subset>, VertexError> {
    let n = f.n();
    let r = f.total_rank() as usize;
    if r > n {
        return Err(MatroidError::Invalid(format!("rank {r} exceeds {n}")).into());
    }
    budget.check(
        "basis scan",
        crate::exactmath::binomial(n as i64, r as i64)
            .try_into()
            .unwrap_or(u128::MAX),
    )?;
    if r == 0 {
        return Ok(vec![0]);
    }
    let mut out = Vec::new();
    let mut s: Subset = (1 << r) - 1;
    while s <= full_set(n) {
        if f.rank(s)? == r as i64 {
            out.push(s);
        }
        s = next_same_weight(s);
    }
    Ok(out)
}

pub fn indicator(s: Subset, n: usize) -> IntVec {
    (0..n).map(|i| (s >> i & 1) as i64).collect()
}

pub fn enumerate_vertices(spec: &PolytopeSpec) -> Result<VertexSet, VertexError> {
    enumerate_vertices_with(spec, AdjacencyMode::Pruned, &Budget::default())
}

pub fn enumerate_vertices_with(
    spec: &PolytopeSpec,
    mode: AdjacencyMode,
    budget: &Budget,
) -> Result<VertexSet, VertexError> {
    let vertices = vertex_points(spec, budget)?;
    let dim = affine_dimension(&vertices);
    let adjacency = adjacency(spec.family, &vertices, mode);
    Ok(VertexSet {
        vertices,
        adjacency,
        dim,
    })
}

/// Vertex coordinates only, without edges.
pub fn vertex_points(spec: &PolytopeSpec, budget: &Budget) -> Result<Vec<IntVec>, VertexError> {
    let n = spec.n;
    Ok(match spec.family {
        Family::Bases => enumerate_bases(&spec.rank, budget)?
            .into_iter()
            .map(|b| indicator(b, n))
            .collect(),
        Family::Independence => {
            budget.check("independent-set scan", 1u128 << n)?;
            let t = spec.table()?;
            (0..=full_set(n))
                .filter(|&s| t[s as usize] == i64::from(s.count_ones()))
                .map(|s| indicator(s, n))
                .collect()
        }
        Family::Polymatroid => polymatroid_vertices(spec, budget)?,
    })
}

/// Dimension of the affine hull.
pub fn affine_dimension(points: &[IntVec]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let diffs: Vec<IntVec> = points[1..]
        .iter()
        .map(|p| crate::exactmath::sub(p, &points[0]))
        .collect();
    rank_i64(&diffs)
}

/// Integer points `x >= 0` with `Σx <= r` satisfying every subset inequality
/// whose tight constraints span `R^n`.
fn polymatroid_vertices(spec: &PolytopeSpec, budget: &Budget) -> Result<Vec<IntVec>, VertexError> {
    let n = spec.n;
    let r = spec.r.max(0);
    let candidates = crate::exactmath::binomial(n as i64 + r, r);
    budget.check(
        "polymatroid candidate scan",
        candidates.try_into().unwrap_or(u128::MAX),
    )?;
    budget.check("subset table", 1u128 << n)?;
    let t = spec.table()?;
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    let mut sums = vec![0i64; 1 << n];
    polymatroid_dfs(&t, n, 0, &mut x, &mut sums, &mut out);
    Ok(out)
}

fn polymatroid_dfs(
    t: &[i64],
    n: usize,
    i: usize,
    x: &mut IntVec,
    sums: &mut [i64],
    out: &mut Vec<IntVec>,
) {
    if i == n {
        if is_polymatroid_vertex(t, n, x, sums) {
            out.push(x.clone());
        }
        return;
    }
    let bit = 1usize << i;
    let mut value = 0i64;
    loop {
        // sums over subsets of {0..=i} that contain i
        let ok = (0..bit).all(|low| {
            let a = low | bit;
            sums[a] = sums[low] + value;
            sums[a] <= t[a]
        });
        if !ok {
            return;
        }
        x[i] = value;
        polymatroid_dfs(t, n, i + 1, x, sums, out);
        value += 1;
    }
}

fn is_polymatroid_vertex(t: &[i64], n: usize, x: &[i64], sums: &[i64]) -> bool {
    let mut basis = IntEchelon::new();
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            basis.insert(&indicator(1 << i, n));
        }
    }
    for a in 1..sums.len() {
        if basis.rank() == n {
            break;
        }
        if sums[a] == t[a] {
            basis.insert(&indicator(a as Subset, n));
        }
    }
    basis.rank() == n
}

/// The point generated by the ordered subset `order` (1-based labels):
/// `x_{F_i} = ψ(F_1..F_i) - ψ(F_1..F_{i-1})`.
pub fn edmonds_generate(psi: &RankFunction, order: &[usize]) -> Result<IntVec, MatroidError> {
    let n = psi.n();
    let mut x = vec![0i64; n];
    let mut prefix: Subset = 0;
    let mut prev = psi.rank(0)?;
    for &e in order {
        let bit = crate::matroid::subset_of(&[e], n)?;
        if prefix & bit != 0 {
            return Err(MatroidError::Invalid(format!(
                "element {e} repeated in ordering"
            )));
        }
        prefix |= bit;
        let cur = psi.rank(prefix)?;
        x[e - 1] = cur - prev;
        prev = cur;
    }
    Ok(x)
}
