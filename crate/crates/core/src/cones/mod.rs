//! Tangent cones, their unimodular triangulations and half-open
//! decompositions.

mod placing;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactmath::{
    adjugate_i64, dot_big, primitive, rank_i64, scaled_inverse_i128, sub, IntEchelon, IntVec,
    MathError,
};
use crate::vertices::VertexSet;

pub use placing::{
    placing_triangulation, placing_triangulation_with, triangulate_cone, visible, Visibility,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("simplicial cone at vertex {apex:?} has lattice index {index}, expected 1")]
    NotUnimodular { apex: IntVec, index: BigInt },
    #[error("vector is not generic: pairing with a facet normal vanishes")]
    NotGeneric,
    #[error("integer overflow in cone coordinates")]
    Overflow,
    #[error(transparent)]
    Math(#[from] MathError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentCone {
    pub apex: IntVec,
    pub rays: Vec<IntVec>,
}

/// `apex + {Σ μ_j rays_j : μ_j >= 0, μ_j > 0 when open[j]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfOpenSimplicialCone {
    pub apex: IntVec,
    pub rays: Vec<IntVec>,
    pub open: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConeOptions {
    pub visibility: Visibility,
}

pub fn tangent_cone(vs: &VertexSet, i: usize) -> TangentCone {
    let apex = vs.vertices[i].clone();
    let rays = vs.adjacency[i]
        .iter()
        .map(|&j| primitive(&sub(&vs.vertices[j], &apex)))
        .collect();
    TangentCone { apex, rays }
}

/// Gcd of all maximal minors of the matrix with the given columns: the index
/// of the lattice they generate inside the lattice points of their span.
pub fn lattice_index(rays: &[IntVec]) -> BigInt {
    let k = rays.len();
    if k == 0 {
        return BigInt::one();
    }
    let n = rays[0].len();
    let mut g = BigInt::zero();
    let mut rows: Vec<usize> = (0..k).collect();
    if k > n {
        return g;
    }
    loop {
        let m: Vec<IntVec> = rows
            .iter()
            .map(|&r| rays.iter().map(|v| v[r]).collect())
            .collect();
        let d = crate::exactmath::det_i64(&m).expect("square");
        g = g.gcd(&d);
        if g.is_one() {
            return g;
        }
        // next k-combination of 0..n
        let mut i = k;
        loop {
            if i == 0 {
                return g;
            }
            i -= 1;
            if rows[i] != i + n - k {
                break;
            }
        }
        rows[i] += 1;
        for j in i + 1..k {
            rows[j] = rows[j - 1] + 1;
        }
    }
}

pub fn is_unimodular(rays: &[IntVec]) -> bool {
    rank_i64(rays) == rays.len() && lattice_index(rays).is_one()
}

fn moment(xi: i64, len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut p = BigInt::one();
    for _ in 0..len {
        out.push(p.clone());
        p *= xi;
    }
    out
}

/// First moment-curve point `(1, ξ, ξ², …)`, `ξ = 1, 2, …`, pairing nonzero
/// with every normal.
pub fn pick_generic_y(normals: &[IntVec]) -> Vec<BigInt> {
    let len = normals.first().map_or(0, Vec::len);
    (1i64..)
        .map(|xi| moment(xi, len))
        .find(|y| normals.iter().all(|nv| !dot_big(nv, y).is_zero()))
        .expect("finitely many roots")
}

/// Coordinates of the rays of a cone with respect to a lattice basis of its
/// span, together with the simplicial pieces' inverse matrices.
#[derive(Debug, Clone)]
pub struct ConeFrame {
    /// Each ray expressed in the reference basis.
    pub coords: Vec<IntVec>,
    /// For each piece, rows of the inverse of its coordinate matrix; row `j`
    /// is the inward normal of the facet opposite ray `j`.
    pub normals: Vec<Vec<IntVec>>,
    reference: Vec<IntVec>,
    block_rows: Vec<usize>,
    block_adj: Vec<Vec<BigInt>>,
    block_det: BigInt,
}

impl ConeFrame {
    /// Coordinates of `x` in the reference basis; `None` unless `x` is a
    /// lattice point of the span.
    pub fn coordinates(&self, x: &[i64]) -> Option<IntVec> {
        let mut z = Vec::with_capacity(self.block_adj.len());
        for row in &self.block_adj {
            let s: BigInt = row
                .iter()
                .zip(&self.block_rows)
                .map(|(a, &c)| a * x[c])
                .sum();
            let (q, r) = s.div_rem(&self.block_det);
            if !r.is_zero() {
                return None;
            }
            z.push(q.to_i64()?);
        }
        let consistent = x.iter().enumerate().all(|(c, &xc)| {
            self.reference
                .iter()
                .zip(&z)
                .map(|(r, &zj)| r[c] * zj)
                .sum::<i64>()
                == xc
        });
        consistent.then_some(z)
    }
}

fn to_i64(v: &BigInt) -> Result<i64, ConeError> {
    v.to_i64().ok_or(ConeError::Overflow)
}

/// Checks unimodularity of every piece and computes the frame.
pub fn cone_frame(cone: &TangentCone, pieces: &[Vec<usize>]) -> Result<ConeFrame, ConeError> {
    let dim = pieces.first().map_or(0, Vec::len);
    if dim == 0 {
        return Ok(ConeFrame {
            coords: vec![Vec::new(); cone.rays.len()],
            normals: vec![Vec::new(); pieces.len()],
            reference: Vec::new(),
            block_rows: Vec::new(),
            block_adj: Vec::new(),
            block_det: BigInt::one(),
        });
    }
    let reference: Vec<IntVec> = pieces[0].iter().map(|&j| cone.rays[j].clone()).collect();
    let index = lattice_index(&reference);
    if !index.is_one() {
        return Err(ConeError::NotUnimodular {
            apex: cone.apex.clone(),
            index,
        });
    }
    // a nonsingular square block of the reference matrix
    let n = cone.apex.len();
    let mut ech = IntEchelon::new();
    let rows: Vec<usize> = (0..n)
        .filter(|&c| ech.insert(&reference.iter().map(|r| r[c]).collect::<Vec<_>>()))
        .collect();
    let block: Vec<IntVec> = rows
        .iter()
        .map(|&c| reference.iter().map(|r| r[c]).collect())
        .collect();
    let (det, adj) = adjugate_i64(&block)?.expect("reference rays are independent");
    let mut frame = ConeFrame {
        coords: Vec::new(),
        normals: Vec::new(),
        reference,
        block_rows: rows,
        block_adj: adj,
        block_det: det,
    };
    let coords: Vec<IntVec> = cone
        .rays
        .iter()
        .map(|ray| {
            frame
                .coordinates(ray)
                .expect("rays lie in the reference lattice")
        })
        .collect();
    let mut normals = Vec::with_capacity(pieces.len());
    for piece in pieces {
        let t: Vec<IntVec> = (0..dim)
            .map(|r| piece.iter().map(|&j| coords[j][r]).collect())
            .collect();
        let not_unimodular = |index: BigInt| ConeError::NotUnimodular {
            apex: cone.apex.clone(),
            index,
        };
        let normal: Vec<IntVec> = match scaled_inverse_i128(&t) {
            Some((d, inv)) if d.abs() == 1 => inv
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| i64::try_from(v * d).map_err(|_| ConeError::Overflow))
                        .collect()
                })
                .collect::<Result<_, _>>()?,
            Some((d, _)) => return Err(not_unimodular(BigInt::from(d.abs()))),
            None => match adjugate_i64(&t)? {
                Some((d, inv)) if d.abs().is_one() => inv
                    .iter()
                    .map(|row| row.iter().map(|v| to_i64(&(v * &d))).collect())
                    .collect::<Result<_, _>>()?,
                Some((d, _)) => return Err(not_unimodular(d.abs())),
                None => return Err(not_unimodular(BigInt::zero())),
            },
        };
        normals.push(normal);
    }
    frame.coords = coords;
    frame.normals = normals;
    Ok(frame)
}

/// A moment-curve point shifted far into the cone: generic for every facet
/// normal and in the interior of the cone, so that the half-open pieces
/// partition the closed cone.
pub fn interior_generic_y(frame: &ConeFrame) -> Vec<BigInt> {
    let dim = frame.coords.first().map_or(0, Vec::len);
    let center: Vec<BigInt> = (0..dim)
        .map(|r| frame.coords.iter().map(|z| BigInt::from(z[r])).sum())
        .collect();
    let all: Vec<&IntVec> = frame.normals.iter().flatten().collect();
    for xi in 1i64.. {
        let m = moment(xi, dim);
        let mut scale = BigInt::one();
        for _ in 0..128 {
            let y: Vec<BigInt> = center
                .iter()
                .zip(&m)
                .map(|(c, mi)| c * &scale + mi)
                .collect();
            let generic = all.iter().all(|nv| !dot_big(nv, &y).is_zero());
            let interior = frame
                .normals
                .iter()
                .any(|rows| rows.iter().all(|nv| dot_big(nv, &y).is_positive()));
            if generic && interior {
                return y;
            }
            scale *= 2;
        }
    }
    unreachable!()
}

/// Open flags of one piece: the facet opposite ray `j` is removed when `y`
/// lies on its negative side.
pub fn half_open_flags(normals: &[IntVec], y: &[BigInt]) -> Result<Vec<bool>, ConeError> {
    normals
        .iter()
        .map(|nv| {
            let p = dot_big(nv, y);
            if p.is_zero() {
                Err(ConeError::NotGeneric)
            } else {
                Ok(p.is_negative())
            }
        })
        .collect()
}

pub fn half_open_decompose(
    cone: &TangentCone,
    pieces: &[Vec<usize>],
    frame: &ConeFrame,
    y: &[BigInt],
) -> Result<Vec<HalfOpenSimplicialCone>, ConeError> {
    pieces
        .iter()
        .zip(&frame.normals)
        .map(|(piece, normals)| {
            Ok(HalfOpenSimplicialCone {
                apex: cone.apex.clone(),
                rays: piece.iter().map(|&j| cone.rays[j].clone()).collect(),
                open: half_open_flags(normals, y)?,
            })
        })
        .collect()
}

/// Everything computed at one vertex.
#[derive(Debug, Clone)]
pub struct VertexCones {
    pub cone: TangentCone,
    pub pieces: Vec<Vec<usize>>,
    pub frame: ConeFrame,
    pub y: Vec<BigInt>,
    pub half_open: Vec<HalfOpenSimplicialCone>,
}

pub fn decompose_vertex(
    vs: &VertexSet,
    i: usize,
    opts: &ConeOptions,
) -> Result<VertexCones, ConeError> {
    let cone = tangent_cone(vs, i);
    let pieces = triangulate_cone(&cone.rays, opts.visibility);
    let frame = cone_frame(&cone, &pieces)?;
    let y = interior_generic_y(&frame);
    let half_open = half_open_decompose(&cone, &pieces, &frame, &y)?;
    Ok(VertexCones {
        cone,
        pieces,
        frame,
        y,
        half_open,
    })
}
