//! Rational generating functions `Σ ε z^(a + (k-1)v) / ∏ (1 - z^b_j)` of
//! dilated polytopes, assembled from half-open unimodular tangent-cone pieces.

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::cones::{
    decompose_vertex, ConeError, ConeOptions, HalfOpenSimplicialCone, VertexCones, Visibility,
};
use crate::exactmath::{add, dot_big, sub, IntVec};
use crate::vertices::{
    enumerate_vertices_with, AdjacencyMode, Budget, PolytopeSpec, VertexError, VertexSet,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenFunError {
    #[error(transparent)]
    Vertex(#[from] VertexError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error("dilation factor must be at least 1, got {0}")]
    BadDilation(i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFunTerm {
    pub sign: i32,
    pub a: IntVec,
    pub v: IntVec,
    pub b: Vec<IntVec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFun {
    pub terms: Vec<GenFunTerm>,
    pub ambient: usize,
    pub dim: usize,
}

/// `z^a / ∏ (1 - z^b_j)` with `a = apex + Σ_{open j} b_j`.
pub fn unimodular_term(c: &HalfOpenSimplicialCone) -> GenFunTerm {
    let a = c
        .rays
        .iter()
        .zip(&c.open)
        .filter(|(_, &o)| o)
        .fold(c.apex.clone(), |acc, (b, _)| add(&acc, b));
    GenFunTerm {
        sign: 1,
        a,
        v: c.apex.clone(),
        b: c.rays.clone(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PipelineOptions {
    pub adjacency: AdjacencyMode,
    pub visibility: Visibility,
    pub budget: Budget,
}

/// Vertices plus the cone data computed at each of them.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub vertices: VertexSet,
    pub per_vertex: Vec<VertexCones>,
}

impl Decomposition {
    pub fn genfun(&self) -> GenFun {
        let terms = self
            .per_vertex
            .iter()
            .flat_map(|vc| vc.half_open.iter().map(unimodular_term))
            .collect();
        GenFun {
            terms,
            ambient: self.vertices.ambient_dim(),
            dim: self.vertices.dim,
        }
    }
}

pub fn decompose(
    spec: &PolytopeSpec,
    opts: &PipelineOptions,
) -> Result<Decomposition, GenFunError> {
    let vertices = enumerate_vertices_with(spec, opts.adjacency, &opts.budget)?;
    let cone_opts = ConeOptions {
        visibility: opts.visibility,
    };
    let per_vertex = (0..vertices.len())
        .map(|i| decompose_vertex(&vertices, i, &cone_opts))
        .collect::<Result<_, _>>()?;
    Ok(Decomposition {
        vertices,
        per_vertex,
    })
}

pub fn build_genfun(spec: &PolytopeSpec) -> Result<GenFun, GenFunError> {
    build_genfun_with(spec, &PipelineOptions::default())
}

pub fn build_genfun_with(
    spec: &PolytopeSpec,
    opts: &PipelineOptions,
) -> Result<GenFun, GenFunError> {
    Ok(decompose(spec, opts)?.genfun())
}

/// Generating function of `kP`: numerators shift to `a + (k-1)v`.
pub fn dilate(g: &GenFun, k: i64) -> Result<GenFun, GenFunError> {
    if k < 1 {
        return Err(GenFunError::BadDilation(k));
    }
    let terms = g
        .terms
        .iter()
        .map(|t| {
            let shift: IntVec = t.v.iter().map(|x| x * (k - 1)).collect();
            GenFunTerm {
                sign: t.sign,
                a: add(&t.a, &shift),
                v: t.v.iter().map(|x| x * k).collect(),
                b: t.b.clone(),
            }
        })
        .collect();
    Ok(GenFun {
        terms,
        ambient: g.ambient,
        dim: g.dim,
    })
}

/// Rewrites every term so that each denominator exponent pairs positively
/// with `lambda`, using `1/(1 - z^b) = -z^(-b)/(1 - z^(-b))`. After this the
/// term expansions converge in a common region and their signed sum is the
/// indicator function of the lattice points of the polytope.
pub fn polarize(g: &GenFun, lambda: &[BigInt]) -> GenFun {
    let terms = g
        .terms
        .iter()
        .map(|t| {
            let mut sign = t.sign;
            let mut a = t.a.clone();
            let b =
                t.b.iter()
                    .map(|bj| {
                        if dot_big(bj, lambda).is_negative() {
                            sign = -sign;
                            a = sub(&a, bj);
                            bj.iter().map(|x| -x).collect()
                        } else {
                            bj.clone()
                        }
                    })
                    .collect();
            GenFunTerm {
                sign,
                a,
                v: t.v.clone(),
                b,
            }
        })
        .collect();
    GenFun {
        terms,
        ambient: g.ambient,
        dim: g.dim,
    }
}

#[cfg(test)]
mod tests;
