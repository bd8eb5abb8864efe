use std::fmt;

use super::{card, full_set, MatroidError, RankFunction, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `0 <= f(X) <= |X|` (matroids) or `f(∅) = 0` (polymatroids)
    Bounds,
    Monotone,
    Submodular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub x: Subset,
    pub y: Subset,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} fails at X = {:?}, Y = {:?}",
            self.axiom,
            super::elements_of(self.x),
            super::elements_of(self.y)
        )
    }
}

/// Checks the rank axioms over all of `2^[n]`.
///
/// Monotonicity and submodularity are tested in their local forms
/// (`f(X) <= f(X+e)` and `f(X+e) + f(X+f) >= f(X+e+f) + f(X)`), which are
/// equivalent to the global statements over all pairs.
pub fn check_matroid_axioms(f: &RankFunction) -> Result<Result<(), AxiomViolation>, MatroidError> {
    let t = f.tabulate()?;
    if let Some(s) = (0..t.len()).find(|&s| t[s] < 0 || t[s] > card(s as Subset)) {
        return Ok(Err(AxiomViolation {
            axiom: Axiom::Bounds,
            x: s as Subset,
            y: s as Subset,
        }));
    }
    Ok(local_checks(&t, f.n()))
}

pub fn check_polymatroid_axioms(
    f: &RankFunction,
) -> Result<Result<(), AxiomViolation>, MatroidError> {
    let t = f.tabulate()?;
    if t[0] != 0 {
        return Ok(Err(AxiomViolation {
            axiom: Axiom::Bounds,
            x: 0,
            y: 0,
        }));
    }
    Ok(local_checks(&t, f.n()))
}

fn local_checks(t: &[i64], n: usize) -> Result<(), AxiomViolation> {
    for x in 0..=full_set(n) {
        for i in 0..n {
            let e = 1u64 << i;
            if x & e != 0 {
                continue;
            }
            if t[x as usize] > t[(x | e) as usize] {
                return Err(AxiomViolation {
                    axiom: Axiom::Monotone,
                    x,
                    y: x | e,
                });
            }
            for j in i + 1..n {
                let g = 1u64 << j;
                if x & g != 0 {
                    continue;
                }
                let (xe, xg, xeg) = ((x | e) as usize, (x | g) as usize, (x | e | g) as usize);
                if t[xeg] + t[x as usize] > t[xe] + t[xg] {
                    return Err(AxiomViolation {
                        axiom: Axiom::Submodular,
                        x: x | e,
                        y: x | g,
                    });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use proptest::prelude::*;

    fn table(n: usize, f: impl Fn(Subset) -> i64) -> RankFunction {
        RankFunction::table(
            n,
            (1..=full_set(n))
                .map(|s| (s, f(s)))
                .collect::<BTreeMap<_, _>>(),
        )
        .unwrap()
    }

    /// All-pairs statement of monotonicity and submodularity.
    fn global_ok(t: &[i64]) -> bool {
        let m = t.len();
        (0..m).all(|x| {
            (0..m).all(|y| (x & !y != 0 || t[x] <= t[y]) && t[x | y] + t[x & y] <= t[x] + t[y])
        })
    }

    #[test]
    fn uniform_and_graphic_pass() {
        let u = RankFunction::uniform(4, 2).unwrap();
        assert_eq!(check_matroid_axioms(&u).unwrap(), Ok(()));
        let k4 =
            RankFunction::graphic(vec![(0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (1, 3)]).unwrap();
        assert_eq!(check_matroid_axioms(&k4).unwrap(), Ok(()));
        assert_eq!(check_polymatroid_axioms(&k4).unwrap(), Ok(()));
        assert_eq!(check_matroid_axioms(&k4.dual().unwrap()).unwrap(), Ok(()));
        assert_eq!(
            check_matroid_axioms(&k4.direct_sum(&u).unwrap()).unwrap(),
            Ok(())
        );
    }

    #[test]
    fn singleton_too_large_fails_bounds() {
        let t = table(2, |s| if s == 0b01 { 2 } else { card(s).min(2) });
        let v = check_matroid_axioms(&t).unwrap().unwrap_err();
        assert_eq!(v.axiom, Axiom::Bounds);
        assert_eq!(v.x, 0b01);
    }

    #[test]
    fn modular_polymatroid_passes() {
        let t = table(3, |s| 2 * card(s));
        assert_eq!(check_polymatroid_axioms(&t).unwrap(), Ok(()));
    }

    #[test]
    fn supermodular_pair_fails() {
        let t = table(2, |s| if s == 0b11 { 3 } else { 1 });
        assert_eq!(
            check_polymatroid_axioms(&t).unwrap().unwrap_err().axiom,
            Axiom::Submodular
        );
    }

    #[test]
    fn large_ground_set_rejected() {
        let u = RankFunction::uniform(21, 3).unwrap();
        assert!(matches!(
            check_matroid_axioms(&u),
            Err(MatroidError::TooLarge { .. })
        ));
    }

    proptest! {
        #[test]
        fn local_checks_match_all_pairs(vals in proptest::collection::vec(0i64..4, 15)) {
            let mut t = vec![0];
            t.extend(vals);
            prop_assert_eq!(local_checks(&t, 4).is_ok(), global_ok(&t));
        }

        #[test]
        fn rank_monotone_on_chains(perm in Just((1..=6usize).collect::<Vec<_>>()).prop_shuffle()) {
            let k4 = RankFunction::graphic(vec![(0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (1, 3)]).unwrap();
            let mut s = 0;
            let mut last = 0;
            for e in perm {
                s |= 1 << (e - 1);
                let r = k4.rank(s).unwrap();
                prop_assert!(r >= last && r <= last + 1);
                last = r;
            }
        }
    }
}
