use num_integer::Integer;

/// Incremental integer row-echelon basis. Every stored row vanishes at the
/// pivots of the rows stored before it, so the pivot columns (in insertion
/// order) give a nonsingular square submatrix.
#[derive(Debug, Clone, Default)]
pub struct IntEchelon {
    rows: Vec<(usize, Vec<i128>)>,
}

impl IntEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot column of each stored row, in insertion order.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    fn reduce(&self, v: &[i64]) -> Vec<i128> {
        let mut v: Vec<i128> = v.iter().map(|&x| i128::from(x)).collect();
        for (p, row) in &self.rows {
            if v[*p] != 0 {
                let (a, b) = (row[*p], v[*p]);
                for (vj, rj) in v.iter_mut().zip(row) {
                    *vj = a * *vj - b * rj;
                }
                let g = v.iter().fold(0i128, |g, e| g.gcd(e));
                if g > 1 {
                    v.iter_mut().for_each(|e| *e /= g);
                }
            }
        }
        v
    }

    /// Whether `v` lies in the span of the stored rows.
    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&e| e == 0)
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        let r = self.reduce(v);
        match r.iter().position(|&e| e != 0) {
            Some(p) => {
                self.rows.push((p, r));
                true
            }
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_span() {
        let mut e = IntEchelon::new();
        assert!(e.insert(&[1, 1, 0]));
        assert!(e.insert(&[0, 1, 1]));
        assert!(!e.insert(&[1, 2, 1]));
        assert!(e.contains(&[2, 0, -2]));
        assert!(!e.contains(&[0, 0, 1]));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots(), vec![0, 1]);
    }
}
