mod common;

use common::*;
use graphsiege::fragmentation::{
    aggregates, ajb_stats, s_approx, s_exact, validate, FragmentProfile, LccClass, MClass,
    SApproxCase,
};
use proptest::prelude::*;

fn feasible_cells(n: usize, j: usize) -> Vec<SApproxCase> {
    let mut out = Vec::new();
    for m in MClass::ALL {
        for lcc in LccClass::ALL {
            let case = SApproxCase { m, lcc, j };
            if s_approx(case, n).is_feasible() {
                out.push(case);
            }
        }
    }
    out
}

fn relative_error(case: SApproxCase, n: usize) -> f64 {
    let exact = s_exact(n, case.lcc.value(n, case.j), case.m.value(n, case.j)).unwrap();
    let approx = s_approx(case, n).value;
    (exact - approx).abs() / approx
}

#[test]
fn closed_forms_converge() {
    // the worst cells miss by exactly 1 / (n/j - 1), so 5% needs n/j >= 21
    for j in 2..=10 {
        let mut n = 2 * j;
        while n <= 4000 {
            if n >= 200 && n / j >= 21 {
                for case in feasible_cells(n, j) {
                    let err = relative_error(case, n);
                    assert!(err <= 0.05, "{}/{} j={j} n={n}: {err}", case.m, case.lcc);
                }
            }
            n += 2 * j;
        }
    }
}

#[test]
fn worst_cell_error_is_exact() {
    for (n, j) in [(200, 10), (2520, 7), (1000, 4)] {
        let case = SApproxCase {
            m: MClass::OverJ,
            lcc: LccClass::OverJ,
            j,
        };
        let want = 1.0 / ((n / j) as f64 - 1.0);
        assert!((relative_error(case, n) - want).abs() < 1e-12);
    }
    let case = SApproxCase {
        m: MClass::OverJ,
        lcc: LccClass::OverJ,
        j: 10,
    };
    assert!(relative_error(case, 200) > 0.05);
}

fn arb_profile() -> impl Strategy<Value = FragmentProfile> {
    proptest::collection::vec(1usize..30, 1..12).prop_map(|s| FragmentProfile::new(s).unwrap())
}

proptest! {
    #[test]
    fn s_never_exceeds_lcc(p in arb_profile()) {
        let st = ajb_stats(&p).unwrap();
        if let Some(s) = st.small_s {
            prop_assert!(s <= st.lcc as f64);
            let all_equal = p.sizes().iter().all(|&x| x == st.lcc);
            prop_assert_eq!(s == st.lcc as f64, all_equal);
        }
    }

    #[test]
    fn real_graphs_validate(g in arb_graph(1, 14)) {
        let st = ajb_stats(&FragmentProfile::of(&g)).unwrap();
        prop_assert_eq!(validate(&st), vec![]);
    }

    #[test]
    fn real_profiles_validate(p in arb_profile()) {
        prop_assert_eq!(validate(&ajb_stats(&p).unwrap()), vec![]);
    }

    #[test]
    fn mean_chain(a in 1e-6f64..10.0, b in 1e-6f64..10.0) {
        let x = aggregates(a, b, 1.0).unwrap();
        let tol = 1e-12 * (a + b);
        prop_assert!(x.fscore <= x.geometric + tol);
        prop_assert!(x.geometric <= x.arithmetic + tol);
        prop_assert!(x.arithmetic <= x.quadratic + tol);
        prop_assert!((x.fscore - x.fscore_beta).abs() <= tol);
    }
}
