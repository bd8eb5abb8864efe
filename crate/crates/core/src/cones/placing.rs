use std::collections::HashMap;

use num_traits::Zero;

use crate::exactmath::{rank_i64, scaled_inverse_i128, sub, IntEchelon, IntVec};
use crate::lp::{LinearProgram, LpOutcome};

/// How the placing triangulation decides whether a boundary facet is visible
/// from a new point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Visibility {
    /// Exact LP on the segment from the query to the facet centroid.
    Lp,
    /// Sign of the barycentric coordinate of the query with respect to the
    /// simplex owning the facet. Equivalent for boundary facets and much
    /// cheaper on large cones.
    #[default]
    Hyperplane,
}

/// Whether `query` sees the facet spanned by `points[facet]` of `conv(points)`:
/// the segment from `query` to the facet centroid meets `conv(points)` only
/// at the centroid.
///
/// Solved as `max μ` over `x = Σ y_i p_i = μ·query + (1-μ)·z`, `Σ y = 1`,
/// `0 <= μ <= 1`; the facet is visible iff the optimum is `μ = 0`.
pub fn visible(points: &[IntVec], facet: &[usize], query: &[i64]) -> bool {
    let n = query.len();
    let f = facet.len() as i64;
    let s: IntVec = (0..n)
        .map(|c| facet.iter().map(|&i| points[i][c]).sum())
        .collect();
    let m = points.len();
    // columns: y_0..y_{m-1}, mu, slack
    let mut a = Vec::with_capacity(n + 2);
    let mut b = Vec::with_capacity(n + 2);
    for c in 0..n {
        let mut row: Vec<i64> = points.iter().map(|p| f * p[c]).collect();
        row.push(-(f * query[c] - s[c]));
        row.push(0);
        a.push(row);
        b.push(s[c]);
    }
    let mut sum_row = vec![1; m];
    sum_row.extend([0, 0]);
    a.push(sum_row);
    b.push(1);
    let mut cap = vec![0; m];
    cap.extend([1, 1]);
    a.push(cap);
    b.push(1);
    let mut c = vec![0; m];
    c.extend([1, 0]);
    match LinearProgram::from_i64(&a, &b, &c).solve() {
        LpOutcome::Optimal { value, .. } => value.is_zero(),
        // μ = 0 with the centroid weights is always feasible
        other => unreachable!("visibility LP cannot be {other:?}"),
    }
}

pub fn placing_triangulation(points: &[IntVec]) -> Vec<Vec<usize>> {
    placing_triangulation_with(points, Visibility::Lp)
}

/// Barycentric data of one simplex in projected coordinates.
struct Frame {
    det: i128,
    adj: Vec<Vec<i128>>,
}

fn frame(points: &[IntVec], simplex: &[usize], coords: &[usize]) -> Option<Frame> {
    let base = &points[simplex[0]];
    let d = simplex.len() - 1;
    let m: Vec<Vec<i64>> = coords
        .iter()
        .map(|&c| (1..=d).map(|j| points[simplex[j]][c] - base[c]).collect())
        .collect();
    let (det, adj) = scaled_inverse_i128(&m)?;
    Some(Frame { det, adj })
}

/// `det · λ_k(q)` for the barycentric coordinate of `q` opposite vertex `k`.
fn scaled_barycentric(
    fr: &Frame,
    points: &[IntVec],
    simplex: &[usize],
    coords: &[usize],
    k: usize,
    q: &[i64],
) -> Option<i128> {
    let base = &points[simplex[0]];
    let diff: Vec<i128> = coords.iter().map(|&c| i128::from(q[c] - base[c])).collect();
    let row = |j: usize| -> Option<i128> {
        fr.adj[j]
            .iter()
            .zip(&diff)
            .try_fold(0i128, |acc, (a, x)| acc.checked_add(a.checked_mul(*x)?))
    };
    if k > 0 {
        row(k - 1)
    } else {
        let mut s = fr.det;
        for j in 0..simplex.len() - 1 {
            s = s.checked_sub(row(j)?)?;
        }
        Some(s)
    }
}

/// Placing (beneath-beyond) triangulation of `conv(points)`, inserting points
/// in the given order. Simplices are sorted index lists.
pub fn placing_triangulation_with(points: &[IntVec], vis: Visibility) -> Vec<Vec<usize>> {
    if points.is_empty() {
        return Vec::new();
    }
    let mut cx = Complex::default();
    cx.push(vec![0]);
    let mut hull = IntEchelon::new();
    let base = points[0].clone();
    for t in 1..points.len() {
        let dir = sub(&points[t], &base);
        if hull.insert(&dir) {
            let lifted = cx.simplices.drain(..).map(|mut s| {
                s.push(t);
                s
            });
            let lifted: Vec<_> = lifted.collect();
            cx = Complex::default();
            for s in lifted {
                cx.push(s);
            }
            continue;
        }
        let coords = hull.pivots();
        let mut added = Vec::new();
        for (facet, &(owner, k, count)) in &cx.facets {
            if count != 1 {
                continue;
            }
            let is_visible = match vis {
                Visibility::Lp => visible(&points[..t], facet, &points[t]),
                Visibility::Hyperplane => {
                    let simplex = &cx.simplices[owner];
                    let fr = cx.frames[owner].get_or_init(|| frame(points, simplex, &coords));
                    match fr.as_ref().and_then(|fr| {
                        scaled_barycentric(fr, points, simplex, &coords, k, &points[t])
                            .map(|v| v.signum() * fr.det.signum())
                    }) {
                        Some(sign) => sign < 0,
                        None => visible(&points[..t], facet, &points[t]),
                    }
                }
            };
            if is_visible {
                let mut s = facet.clone();
                s.push(t);
                added.push(s);
            }
        }
        added.sort();
        for s in added {
            cx.push(s);
        }
    }
    cx.simplices
}

/// Simplices with their facet incidence counts and lazily built frames.
#[derive(Default)]
struct Complex {
    simplices: Vec<Vec<usize>>,
    // facet -> (first owner, omitted position, number of owners)
    facets: HashMap<Vec<usize>, (usize, usize, u32)>,
    frames: Vec<std::cell::OnceCell<Option<Frame>>>,
}

impl Complex {
    fn push(&mut self, s: Vec<usize>) {
        let si = self.simplices.len();
        for k in 0..s.len() {
            let mut f = s.clone();
            f.remove(k);
            self.facets
                .entry(f)
                .and_modify(|e| e.2 += 1)
                .or_insert((si, k, 1));
        }
        self.simplices.push(s);
        self.frames.push(std::cell::OnceCell::new());
    }
}

/// Facets that belong to exactly one simplex, with that simplex and the
/// position of the omitted vertex. Sorted for determinism.
pub(crate) fn boundary_facets(simplices: &[Vec<usize>]) -> Vec<(Vec<usize>, (usize, usize))> {
    let mut seen: HashMap<Vec<usize>, (usize, usize, u32)> = HashMap::new();
    for (si, s) in simplices.iter().enumerate() {
        for k in 0..s.len() {
            let mut f = s.clone();
            f.remove(k);
            seen.entry(f).and_modify(|e| e.2 += 1).or_insert((si, k, 1));
        }
    }
    let mut out: Vec<_> = seen
        .into_iter()
        .filter(|(_, e)| e.2 == 1)
        .map(|(f, (si, k, _))| (f, (si, k)))
        .collect();
    out.sort();
    out
}

/// Triangulates `cone(rays)` by joining the apex to the boundary facets of a
/// placing triangulation of `{0} ∪ rays` that avoid the apex. Returns ray
/// index sets, each spanning the full dimension of the cone.
pub fn triangulate_cone(rays: &[IntVec], vis: Visibility) -> Vec<Vec<usize>> {
    if rays.is_empty() {
        return vec![Vec::new()];
    }
    let n = rays[0].len();
    let dim = rank_i64(rays);
    let mut points = vec![vec![0; n]];
    points.extend(rays.iter().cloned());
    let simplices = placing_triangulation_with(&points, vis);
    let mut cones: Vec<Vec<usize>> = boundary_facets(&simplices)
        .into_iter()
        .map(|(f, _)| f)
        .filter(|f| !f.contains(&0))
        .filter(|f| {
            // facets lying in a hyperplane through the apex bound the cone
            let vs: Vec<IntVec> = f.iter().map(|&i| points[i].clone()).collect();
            rank_i64(&vs) == dim
        })
        .map(|f| f.into_iter().map(|i| i - 1).collect())
        .collect();
    cones.sort();
    cones
}
