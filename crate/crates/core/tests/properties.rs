//! Randomized invariants checked against brute-force point sets.

use std::collections::BTreeSet;

use cubelearn::corner_search::{find_max_corner, find_min_corner, SearchStrategy};
use cubelearn::learners::{learn, learn_observed, Algorithm, LearnerConfig, RefinementEvent};
use cubelearn::mondec::{default_names, parse_formula, Formula, LinearTerm, Rel};
use cubelearn::oracles::{is_local_max_corner, is_local_min_corner, CexPolicy, Counted, GroundTruthTeacher};
use cubelearn::{AbstractGrid, Bound, Cube, CubeUnion, Point, UnionOp};
use proptest::prelude::*;

fn box_points(d: usize, r: i64) -> Vec<Point> {
    Cube::finite(&vec![-r; d], &vec![r; d]).unwrap().points().collect()
}

fn set_of(u: &CubeUnion, pts: &[Point]) -> BTreeSet<Point> {
    pts.iter().filter(|p| u.contains(p).unwrap()).cloned().collect()
}

fn finite_cube(d: usize, r: i64) -> impl Strategy<Value = Cube> {
    prop::collection::vec((-r..=r, -r..=r), d).prop_map(|axes| {
        let (lo, hi): (Vec<i64>, Vec<i64>) = axes.into_iter().map(|(a, b)| (a.min(b), a.max(b))).unzip();
        Cube::finite(&lo, &hi).unwrap()
    })
}

fn bound_pair(r: i64) -> impl Strategy<Value = (Bound, Bound)> {
    let lo = prop_oneof![1 => Just(Bound::NegInf), 4 => (-r..=r).prop_map(Bound::Finite)];
    let hi = prop_oneof![1 => Just(Bound::PosInf), 4 => (-r..=r).prop_map(Bound::Finite)];
    (lo, hi).prop_map(|(a, b)| if a <= b { (a, b) } else { (b, a) }).prop_filter("ordered", |(a, b)| a <= b)
}

fn any_cube(d: usize, r: i64) -> impl Strategy<Value = Cube> {
    prop::collection::vec(bound_pair(r), d).prop_map(|axes| {
        let (lo, hi) = axes.into_iter().unzip();
        Cube::new(lo, hi).unwrap()
    })
}

fn union_of(d: usize, r: i64, n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = CubeUnion> {
    prop::collection::vec(finite_cube(d, r), n).prop_map(move |cs| CubeUnion::from_cubes(d, cs).unwrap())
}

fn op() -> impl Strategy<Value = UnionOp> {
    prop_oneof![Just(UnionOp::Add), Just(UnionOp::Remove), Just(UnionOp::Symdiff)]
}

fn term() -> impl Strategy<Value = LinearTerm> {
    (-3i64..=3, -3i64..=3, -6i64..=6).prop_map(|(a, b, c)| {
        LinearTerm::var(0).scale(a).unwrap().add(&LinearTerm::var(1).scale(b).unwrap()).unwrap().offset(c).unwrap()
    })
}

fn formula() -> impl Strategy<Value = Formula> {
    let rel = prop_oneof![Just(Rel::Le), Just(Rel::Ge), Just(Rel::Eq)];
    let atom = (term(), rel, term()).prop_map(|(l, r, t)| Formula::atom(l, r, t));
    atom.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..=3).prop_map(Formula::And),
            prop::collection::vec(inner.clone(), 1..=3).prop_map(Formula::Or),
            inner.clone().prop_map(|f| !f),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn subtraction_is_disjoint_and_exact(
        (d, a, b) in (1usize..=3).prop_flat_map(|d| (Just(d), finite_cube(d, 5), finite_cube(d, 5))),
    ) {
        let pieces = a.subtract(&b).unwrap();
        prop_assert!(pieces.len() <= 2 * d);
        for (i, p) in pieces.iter().enumerate() {
            for q in &pieces[i + 1..] {
                prop_assert!(p.intersect(q).unwrap().is_none());
            }
        }
        for v in box_points(d, 6) {
            let expected = a.contains(&v).unwrap() && !b.contains(&v).unwrap();
            let got = pieces.iter().filter(|p| p.contains(&v).unwrap()).count();
            prop_assert_eq!(got, usize::from(expected));
        }
    }

    #[test]
    fn union_apply_matches_point_sets(steps in prop::collection::vec((op(), finite_cube(2, 5)), 1..8)) {
        let pts = box_points(2, 6);
        let mut u = CubeUnion::empty(2);
        let mut model = BTreeSet::new();
        for (op, c) in steps {
            u = u.apply(op, &c).unwrap();
            let cs: BTreeSet<Point> = c.points().collect();
            model = match op {
                UnionOp::Add => model.union(&cs).cloned().collect(),
                UnionOp::Remove => model.difference(&cs).cloned().collect(),
                UnionOp::Symdiff => model.symmetric_difference(&cs).cloned().collect(),
            };
            prop_assert!(u.is_canonical_disjoint());
            prop_assert_eq!(&set_of(&u, &pts), &model);
        }
    }

    #[test]
    fn grid_cubes_are_closed_under_union_ops(
        target in union_of(2, 8, 1..=4),
        picks in prop::collection::vec((op(), any::<[prop::sample::Index; 4]>()), 1..8),
    ) {
        let grid = AbstractGrid::of(&target).unwrap();
        let lower: Vec<Vec<Bound>> = (0..2).map(|k| grid.lower(k).iter().copied().collect()).collect();
        let upper: Vec<Vec<Bound>> = (0..2).map(|k| grid.upper(k).iter().copied().collect()).collect();
        let mut h = CubeUnion::empty(2);
        for (op, idx) in picks {
            let lo: Vec<Bound> = (0..2).map(|k| *idx[k].get(&lower[k])).collect();
            let hi: Vec<Bound> = (0..2).map(|k| *idx[k + 2].get(&upper[k])).collect();
            let Ok(c) = Cube::new(lo, hi) else { continue };
            h = h.apply(op, &c).unwrap();
            prop_assert!(grid.contains_union(&h), "{} left the grid", h);
        }
    }

    #[test]
    fn witness_exists_iff_sets_differ(
        a in prop::collection::vec(any_cube(2, 4), 0..3),
        b in prop::collection::vec(any_cube(2, 4), 0..3),
    ) {
        let a = CubeUnion::from_cubes(2, a).unwrap();
        let b = CubeUnion::from_cubes(2, b).unwrap();
        let pts = box_points(2, 10);
        let differs = pts.iter().any(|p| a.contains(p).unwrap() != b.contains(p).unwrap());
        match a.difference_witness(&b).unwrap() {
            Some(w) => {
                prop_assert!(a.contains(&w).unwrap() != b.contains(&w).unwrap());
                prop_assert!(differs);
            }
            None => prop_assert!(!differs),
        }
        let outside = pts.iter().any(|p| a.contains(p).unwrap() && !b.contains(p).unwrap());
        prop_assert_eq!(a.is_subset_of(&b).unwrap(), !outside);
    }

    #[test]
    fn union_json_round_trip(u in prop::collection::vec(any_cube(3, 9), 0..4)) {
        let u = CubeUnion::from_cubes(3, u).unwrap();
        let back: CubeUnion = serde_json::from_str(&serde_json::to_string(&u).unwrap()).unwrap();
        prop_assert_eq!(back, u);
    }

    #[test]
    fn normal_form_preserves_meaning(f in formula(), x in -8i64..=8, y in -8i64..=8) {
        let v = Point::from([x, y]);
        let n = f.normalize().unwrap();
        prop_assert!(n.is_normalized());
        prop_assert_eq!(n.eval(&v), f.eval(&v));
        prop_assert_eq!(f.negate().unwrap().eval(&v), !f.eval(&v));
    }

    #[test]
    fn smtlib_round_trip(f in formula()) {
        let n = f.normalize().unwrap();
        let text = n.to_smtlib_script(&default_names(2));
        let parsed = parse_formula(&text).unwrap();
        prop_assert_eq!(parsed.dim(), 2);
        for v in box_points(2, 4) {
            prop_assert_eq!(parsed.formula.eval(&v), n.eval(&v), "{}", text);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn corners_are_local_and_strategies_agree_on_cubes(c in finite_cube(3, 6), start in any::<[prop::sample::Index; 3]>()) {
        let target = CubeUnion::single(c.clone());
        let lo = c.lo_point().unwrap();
        let hi = c.hi_point().unwrap();
        let v = Point::new((0..3).map(|k| {
            let span = (hi[k] - lo[k] + 1) as usize;
            lo[k] + start[k].index(span) as i64
        }).collect());
        for s in SearchStrategy::all() {
            let top = find_max_corner(&v, &target, s).unwrap();
            let bottom = find_min_corner(&v, &target, s).unwrap();
            prop_assert_eq!(&top, &hi);
            prop_assert_eq!(&bottom, &lo);
            prop_assert!(is_local_max_corner(&target, &top) && is_local_min_corner(&target, &bottom));
        }
    }

    #[test]
    fn learners_are_exact_and_keep_invariants(target in union_of(2, 12, 1..=4), s in 0usize..3) {
        let strategy = SearchStrategy::all()[s];
        let n = target.len() as u64;
        let grid = AbstractGrid::of(&target).unwrap();
        let teacher = GroundTruthTeacher::new(target.clone(), CexPolicy::LexMin).unwrap();
        for algorithm in Algorithm::ALL.into_iter().filter(|a| *a != Algorithm::InfinityMeq) {
            let cfg = LearnerConfig::new(algorithm).strategy(strategy);
            let mut check = |e: &RefinementEvent<'_>| -> cubelearn::Result<()> {
                if algorithm.is_optimized() {
                    for p in e.visited {
                        let inside = target.contains(p)?;
                        assert_eq!(e.hypothesis.contains(p)?, inside, "visited {p}");
                        assert!(grid.is_lower_point(p));
                    }
                    assert!(grid.contains_union(e.hypothesis));
                }
                if algorithm == Algorithm::MaxCube {
                    assert!(e.hypothesis.is_subset_of(&target)?);
                }
                Ok(())
            };
            let out = learn_observed(&teacher, &cfg, &mut check).unwrap();
            prop_assert!(out.hypothesis.set_eq(&target).unwrap(), "{} learned {}", algorithm, out.hypothesis);
            if algorithm.is_optimized() {
                prop_assert!(out.stats.equivalence <= (2 * n).pow(2));
            }
            if algorithm == Algorithm::MaxCube {
                prop_assert!(out.stats.refinements <= n.pow(4));
            }
        }
    }

    #[test]
    fn membership_counts_are_exact(target in union_of(2, 10, 1..=3)) {
        let teacher = GroundTruthTeacher::new(target, CexPolicy::LexMin).unwrap();
        let phi = Counted::new(teacher.membership());
        let mut psi = Counted::new(teacher.equivalence());
        let cfg = LearnerConfig::new(Algorithm::OvershootOptAddRemove);
        let out = cubelearn::learners::learn_cubes(&phi, &mut psi, &cfg).unwrap();
        prop_assert_eq!(out.stats.membership, phi.count());
        prop_assert_eq!(out.stats.equivalence, psi.count());
    }
}

#[test]
fn learn_is_deterministic() {
    let target = CubeUnion::from_cubes(
        2,
        vec![Cube::finite(&[0, 0], &[5, 2]).unwrap(), Cube::finite(&[3, 1], &[9, 9]).unwrap()],
    )
    .unwrap();
    let teacher = GroundTruthTeacher::new(target, CexPolicy::LexMin).unwrap();
    for algorithm in Algorithm::ALL.into_iter().filter(|a| *a != Algorithm::InfinityMeq) {
        let cfg = LearnerConfig::new(algorithm).record_trace(true);
        let a = learn(&teacher, &cfg).unwrap();
        let b = learn(&teacher, &cfg).unwrap();
        assert_eq!(a.stats, b.stats);
        assert_eq!(a.trace, b.trace);
    }
}
