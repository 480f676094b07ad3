//! Large-`n` closed forms for `s` when `m` and `lcc` sit at characteristic
//! fractions of `n`.

use std::fmt;

use super::{s_exact_unchecked, validate_with_j, AjbStats, Violation};
use crate::format::g6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MClass {
    Half,
    OverJ,
    NMinusOne,
    N,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LccClass {
    One,
    Half,
    OverJ,
    NMinusOne,
}

impl MClass {
    pub const ALL: [MClass; 4] = [MClass::Half, MClass::OverJ, MClass::NMinusOne, MClass::N];

    pub fn value(self, n: usize, j: usize) -> usize {
        match self {
            MClass::Half => n / 2,
            MClass::OverJ => n / j,
            MClass::NMinusOne => n - 1,
            MClass::N => n,
        }
    }
}

impl LccClass {
    pub const ALL: [LccClass; 4] = [
        LccClass::One,
        LccClass::Half,
        LccClass::OverJ,
        LccClass::NMinusOne,
    ];

    pub fn value(self, n: usize, j: usize) -> usize {
        match self {
            LccClass::One => 1,
            LccClass::Half => n / 2,
            LccClass::OverJ => n / j,
            LccClass::NMinusOne => n - 1,
        }
    }
}

impl fmt::Display for MClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MClass::Half => "n/2",
            MClass::OverJ => "n/j",
            MClass::NMinusOne => "n-1",
            MClass::N => "n",
        })
    }
}

impl fmt::Display for LccClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LccClass::One => "1",
            LccClass::Half => "n/2",
            LccClass::OverJ => "n/j",
            LccClass::NMinusOne => "n-1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SApproxCase {
    pub m: MClass,
    pub lcc: LccClass,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SApprox {
    /// Closed-form large-`n` value.
    pub value: f64,
    /// Constraints broken by the cell at this `n`; empty when feasible.
    pub violations: Vec<Violation>,
}

impl SApprox {
    pub fn is_feasible(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Leading-order value of `(n - lcc) / (m - 1)` for the cell.
fn closed_form(case: SApproxCase, n: f64) -> f64 {
    let j = case.j as f64;
    use LccClass as L;
    use MClass as M;
    match (case.m, case.lcc) {
        (M::Half, L::One) => 2.0,
        (M::Half, L::Half) => 1.0,
        (M::Half, L::OverJ) => 2.0 - 2.0 / j,
        (M::Half, L::NMinusOne) => 2.0 / n,
        (M::OverJ, L::One) => j,
        (M::OverJ, L::Half) => j / 2.0,
        (M::OverJ, L::OverJ) => j - 1.0,
        (M::OverJ, L::NMinusOne) => j / n,
        (M::NMinusOne, L::One) => 1.0,
        (M::NMinusOne, L::Half) => 0.5,
        (M::NMinusOne, L::OverJ) => 1.0 - 1.0 / j,
        (M::NMinusOne, L::NMinusOne) => 1.0 / n,
        // every fragment a singleton: exactly (n - 1) / (n - 1)
        (M::N, L::One) => 1.0,
        (M::N, L::Half) => 0.5,
        (M::N, L::OverJ) => 1.0 - 1.0 / j,
        (M::N, L::NMinusOne) => 1.0 / n,
    }
}

/// Class values of `(m, lcc)` at this `n`, with the exact statistics.
pub fn cell_stats(case: SApproxCase, n: usize) -> AjbStats {
    let m = case.m.value(n, case.j);
    let lcc = case.lcc.value(n, case.j);
    AjbStats {
        n,
        m,
        lcc,
        big_s: lcc as f64 / n as f64,
        small_s: (m >= 2).then(|| s_exact_unchecked(n, lcc, m)),
    }
}

/// Closed form for the cell plus the constraints its class values break at
/// `n`. The value is reported even for infeasible cells.
pub fn s_approx(case: SApproxCase, n: usize) -> SApprox {
    SApprox {
        value: closed_form(case, n as f64),
        violations: validate_with_j(&cell_stats(case, n), case.j),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct STableRow {
    pub case: SApproxCase,
    pub n: usize,
    pub s_exact: Option<f64>,
    pub approx: SApprox,
}

impl STableRow {
    pub const CSV_HEADER: [&'static str; 8] = [
        "m_class",
        "lcc_class",
        "j",
        "n",
        "s_exact",
        "s_approx",
        "feasible",
        "violations",
    ];

    pub fn relative_error(&self) -> Option<f64> {
        self.s_exact
            .map(|e| (e - self.approx.value).abs() / self.approx.value)
    }

    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.case.m.to_string(),
            self.case.lcc.to_string(),
            self.case.j.to_string(),
            self.n.to_string(),
            self.s_exact.map(g6).unwrap_or_else(|| "nan".into()),
            g6(self.approx.value),
            self.approx.is_feasible().to_string(),
            self.approx
                .violations
                .iter()
                .map(|v| v.id())
                .collect::<Vec<_>>()
                .join(";"),
        ]
    }
}

/// Every `(m, lcc)` cell for each `j`, in row-major order.
pub fn s_table(n: usize, js: &[usize]) -> Vec<STableRow> {
    let mut rows = Vec::new();
    for &j in js {
        for m in MClass::ALL {
            for lcc in LccClass::ALL {
                let case = SApproxCase { m, lcc, j };
                rows.push(STableRow {
                    case,
                    n,
                    s_exact: cell_stats(case, n).small_s,
                    approx: s_approx(case, n),
                });
            }
        }
    }
    rows
}
