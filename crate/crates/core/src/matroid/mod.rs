//! Rank-function oracles for matroids and integral polymatroids on `[n]`.
//!
//! Subsets are bitmasks: element `i` (1-based) is bit `i - 1`.

mod axioms;

use std::collections::BTreeMap;

use thiserror::Error;

pub use axioms::{check_matroid_axioms, check_polymatroid_axioms, Axiom, AxiomViolation};

pub type Subset = u64;

/// Exhaustive checks and tabulation enumerate all of `2^[n]`.
pub const MAX_TABULATED_N: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("element {element} outside ground set [1, {n}]")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("ground set of size {n} exceeds the limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("ground set must be non-empty")]
    EmptyGroundSet,
    #[error("operation requires a matroid rank function")]
    NotMatroid,
    #[error("invalid rank function: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankFunction {
    Uniform {
        n: usize,
        r: usize,
    },
    /// Cycle matroid; element `i` is `edges[i - 1]`.
    Graphic {
        edges: Vec<(usize, usize)>,
    },
    /// Matroid given by its bases, all of size `rank`.
    Bases {
        n: usize,
        rank: usize,
        bases: Vec<Subset>,
    },
    /// Polymatroid rank table; absent subsets are only allowed for the empty set.
    Table {
        n: usize,
        values: BTreeMap<Subset, i64>,
    },
    Dual(Box<RankFunction>),
    DirectSum(Box<RankFunction>, Box<RankFunction>),
}

pub fn full_set(n: usize) -> Subset {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Bitmask from 1-based element labels.
pub fn subset_of(elements: &[usize], n: usize) -> Result<Subset, MatroidError> {
    let mut s = 0;
    for &e in elements {
        if e == 0 || e > n {
            return Err(MatroidError::ElementOutOfRange { element: e, n });
        }
        s |= 1 << (e - 1);
    }
    Ok(s)
}

/// Sorted 1-based labels of a bitmask.
pub fn elements_of(s: Subset) -> Vec<usize> {
    (0..64).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect()
}

pub fn card(s: Subset) -> i64 {
    i64::from(s.count_ones())
}

impl RankFunction {
    pub fn uniform(n: usize, r: usize) -> Result<Self, MatroidError> {
        if n == 0 {
            return Err(MatroidError::EmptyGroundSet);
        }
        if r > n {
            return Err(MatroidError::Invalid(format!(
                "rank {r} exceeds ground set size {n}"
            )));
        }
        Ok(RankFunction::Uniform { n, r })
    }

    pub fn graphic(edges: Vec<(usize, usize)>) -> Result<Self, MatroidError> {
        if edges.is_empty() {
            return Err(MatroidError::EmptyGroundSet);
        }
        if edges.len() > 63 {
            return Err(MatroidError::TooLarge {
                n: edges.len(),
                max: 63,
            });
        }
        Ok(RankFunction::Graphic { edges })
    }

    /// Bases given as lists of 1-based labels.
    pub fn from_bases(n: usize, bases: &[Vec<usize>]) -> Result<Self, MatroidError> {
        if n == 0 {
            return Err(MatroidError::EmptyGroundSet);
        }
        if n > 63 {
            return Err(MatroidError::TooLarge { n, max: 63 });
        }
        let mut masks: Vec<Subset> = bases
            .iter()
            .map(|b| subset_of(b, n))
            .collect::<Result<_, _>>()?;
        masks.sort_unstable();
        masks.dedup();
        let Some(&first) = masks.first() else {
            return Err(MatroidError::Invalid(
                "a matroid has at least one basis".into(),
            ));
        };
        let rank = first.count_ones() as usize;
        if masks.iter().any(|b| b.count_ones() as usize != rank) {
            return Err(MatroidError::Invalid("bases have different sizes".into()));
        }
        Ok(RankFunction::Bases {
            n,
            rank,
            bases: masks,
        })
    }

    /// Table keyed by bitmask; every non-empty subset must be present.
    pub fn table(n: usize, values: BTreeMap<Subset, i64>) -> Result<Self, MatroidError> {
        if n == 0 {
            return Err(MatroidError::EmptyGroundSet);
        }
        if n > MAX_TABULATED_N {
            return Err(MatroidError::TooLarge {
                n,
                max: MAX_TABULATED_N,
            });
        }
        if let Some((&s, _)) = values.iter().find(|(&s, _)| s & !full_set(n) != 0) {
            return Err(MatroidError::Invalid(format!(
                "subset {:?} outside the ground set",
                elements_of(s)
            )));
        }
        if let Some(&v) = values.get(&0) {
            if v != 0 {
                return Err(MatroidError::Invalid(
                    "value on the empty set must be 0".into(),
                ));
            }
        }
        if let Some(s) = (1..=full_set(n)).find(|s| !values.contains_key(s)) {
            return Err(MatroidError::Invalid(format!(
                "missing value for subset {:?}",
                elements_of(s)
            )));
        }
        Ok(RankFunction::Table { n, values })
    }

    pub fn n(&self) -> usize {
        match self {
            RankFunction::Uniform { n, .. }
            | RankFunction::Bases { n, .. }
            | RankFunction::Table { n, .. } => *n,
            RankFunction::Graphic { edges } => edges.len(),
            RankFunction::Dual(f) => f.n(),
            RankFunction::DirectSum(a, b) => a.n() + b.n(),
        }
    }

    pub fn is_matroid(&self) -> bool {
        match self {
            RankFunction::Table { .. } => false,
            RankFunction::Dual(f) => f.is_matroid(),
            RankFunction::DirectSum(a, b) => a.is_matroid() && b.is_matroid(),
            _ => true,
        }
    }

    pub fn rank(&self, a: Subset) -> Result<i64, MatroidError> {
        let n = self.n();
        if a & !full_set(n) != 0 {
            let element = (a & !full_set(n)).trailing_zeros() as usize + 1;
            return Err(MatroidError::ElementOutOfRange { element, n });
        }
        Ok(self.rank_of(a))
    }

    /// Rank of the whole ground set.
    pub fn total_rank(&self) -> i64 {
        self.rank_of(full_set(self.n()))
    }

    fn rank_of(&self, a: Subset) -> i64 {
        match self {
            RankFunction::Uniform { r, .. } => card(a).min(*r as i64),
            RankFunction::Graphic { edges } => graphic_rank(edges, a),
            RankFunction::Bases { bases, .. } => {
                // greedy: a maximal independent subset of a
                let mut x: Subset = 0;
                for i in 0..64 {
                    let e = 1u64 << i;
                    if a & e != 0 && bases.iter().any(|&b| (x | e) & !b == 0) {
                        x |= e;
                    }
                }
                card(x)
            }
            RankFunction::Table { values, .. } => values.get(&a).copied().unwrap_or(0),
            RankFunction::Dual(f) => {
                let full = full_set(f.n());
                card(a) + f.rank_of(full & !a) - f.rank_of(full)
            }
            RankFunction::DirectSum(f, g) => {
                let n1 = f.n();
                f.rank_of(a & full_set(n1)) + g.rank_of(a >> n1)
            }
        }
    }

    pub fn dual(&self) -> Result<RankFunction, MatroidError> {
        match self {
            _ if !self.is_matroid() => Err(MatroidError::NotMatroid),
            RankFunction::Uniform { n, r } => Ok(RankFunction::Uniform { n: *n, r: n - r }),
            RankFunction::Dual(f) => Ok((**f).clone()),
            _ => Ok(RankFunction::Dual(Box::new(self.clone()))),
        }
    }

    pub fn direct_sum(&self, other: &RankFunction) -> Result<RankFunction, MatroidError> {
        if !self.is_matroid() || !other.is_matroid() {
            return Err(MatroidError::NotMatroid);
        }
        if self.n() + other.n() > 63 {
            return Err(MatroidError::TooLarge {
                n: self.n() + other.n(),
                max: 63,
            });
        }
        Ok(RankFunction::DirectSum(
            Box::new(self.clone()),
            Box::new(other.clone()),
        ))
    }

    /// Dense table of all `2^n` values, indexed by bitmask.
    pub fn tabulate(&self) -> Result<Vec<i64>, MatroidError> {
        let n = self.n();
        if n > MAX_TABULATED_N {
            return Err(MatroidError::TooLarge {
                n,
                max: MAX_TABULATED_N,
            });
        }
        Ok((0..=full_set(n)).map(|s| self.rank_of(s)).collect())
    }

    /// The same function as an explicit polymatroid table.
    pub fn to_table(&self) -> Result<RankFunction, MatroidError> {
        let dense = self.tabulate()?;
        Ok(RankFunction::Table {
            n: self.n(),
            values: dense
                .into_iter()
                .enumerate()
                .map(|(s, v)| (s as Subset, v))
                .collect(),
        })
    }
}

fn graphic_rank(edges: &[(usize, usize)], a: Subset) -> i64 {
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    fn find(p: &mut BTreeMap<usize, usize>, x: usize) -> usize {
        let up = *p.entry(x).or_insert(x);
        if up == x {
            return x;
        }
        let root = find(p, up);
        p.insert(x, root);
        root
    }
    let mut rank = 0;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if a >> i & 1 == 0 {
            continue;
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent.insert(ru, rv);
            rank += 1;
        }
    }
    rank
}
