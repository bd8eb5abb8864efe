//! Small matroids and polymatroids shared by unit tests.

use std::collections::BTreeMap;

use crate::matroid::{elements_of, RankFunction};
use crate::vertices::{Family, PolytopeSpec};

/// `M(K4)` with edges in lexicographic order: 1 = ab, 2 = ac, 3 = ad, 4 = bc, 5 = bd, 6 = cd.
pub fn k4() -> RankFunction {
    RankFunction::graphic(vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn spec(family: Family, f: RankFunction) -> PolytopeSpec {
    PolytopeSpec::new(family, f).unwrap()
}

pub fn sample_polymatroids() -> Vec<RankFunction> {
    let mut out = vec![
        RankFunction::uniform(3, 2).unwrap().to_table().unwrap(),
        k4().to_table().unwrap(),
    ];
    // sum of two matroid ranks, and a truncated weighted cardinality
    let a = RankFunction::uniform(4, 2).unwrap();
    let b = RankFunction::graphic(vec![(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
    out.push(
        RankFunction::table(
            4,
            (1..16u64)
                .map(|s| (s, a.rank(s).unwrap() + b.rank(s).unwrap()))
                .collect::<BTreeMap<_, _>>(),
        )
        .unwrap(),
    );
    let w = [2, 1, 3, 1, 2];
    out.push(
        RankFunction::table(
            5,
            (1..32u64)
                .map(|s| {
                    (
                        s,
                        elements_of(s).iter().map(|&e| w[e - 1]).sum::<i64>().min(4),
                    )
                })
                .collect::<BTreeMap<_, _>>(),
        )
        .unwrap(),
    );
    out
}
