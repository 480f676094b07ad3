//! Component-size statistics of a fragmented graph: component count `m`,
//! largest component `lcc`, its share `S = lcc / n`, and the mean size of the
//! remaining fragments `s = (n - lcc) / (m - 1)`, together with the
//! constraints those quantities must satisfy.

use std::fmt;

use crate::error::FragmentError;
use crate::graph::Graph;

pub mod aggregates;
pub mod s_approx;

pub use aggregates::{aggregates, fragment_list_stats, Aggregates, ListStats};
pub use s_approx::{s_approx, s_table, LccClass, MClass, SApprox, SApproxCase, STableRow};

/// Multiset of component sizes, largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FragmentProfile {
    n: usize,
    sizes: Vec<usize>,
}

impl FragmentProfile {
    pub fn new(mut sizes: Vec<usize>) -> Result<Self, FragmentError> {
        if sizes.contains(&0) {
            return Err(FragmentError::InvalidProfile);
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(FragmentProfile {
            n: sizes.iter().sum(),
            sizes,
        })
    }

    pub fn of(g: &Graph) -> Self {
        FragmentProfile {
            n: g.alive_count(),
            sizes: g.components().iter().map(Vec::len).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn component_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn lcc(&self) -> usize {
        self.sizes.first().copied().unwrap_or(0)
    }

    /// Sizes of every fragment except one largest component.
    pub fn non_lcc_sizes(&self) -> &[usize] {
        self.sizes.get(1..).unwrap_or(&[])
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AjbStats {
    pub n: usize,
    pub m: usize,
    pub lcc: usize,
    pub big_s: f64,
    /// Mean non-LCC fragment size; absent for a connected graph.
    pub small_s: Option<f64>,
}

pub fn ajb_stats(profile: &FragmentProfile) -> Result<AjbStats, FragmentError> {
    if profile.n == 0 {
        return Err(FragmentError::EmptyProfile);
    }
    let (n, m, lcc) = (profile.n, profile.component_count(), profile.lcc());
    Ok(AjbStats {
        n,
        m,
        lcc,
        big_s: lcc as f64 / n as f64,
        small_s: (m >= 2).then(|| s_exact_unchecked(n, lcc, m)),
    })
}

fn s_exact_unchecked(n: usize, lcc: usize, m: usize) -> f64 {
    (n as f64 - lcc as f64) / (m as f64 - 1.0)
}

/// `(n - lcc) / (m - 1)`.
pub fn s_exact(n: usize, lcc: usize, m: usize) -> Result<f64, FragmentError> {
    if m < 2 {
        return Err(FragmentError::Undefined);
    }
    Ok(s_exact_unchecked(n, lcc, m))
}

/// A broken constraint on `(n, m, lcc, S, s, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Violation {
    /// `1 <= lcc <= n`.
    LccRange,
    /// `m_min <= m <= m_max`.
    ComponentRange,
    /// `1 <= j <= m`.
    JRange,
    /// `s` exceeds `lcc`.
    SAboveLcc,
    /// `S` outside `[1/n, 1]`.
    BigSRange,
    /// `lcc = 1` exactly when `m = n`.
    SingletonsOnly,
    /// `lcc = n/2` bounds `m` by `n/2 + 1`.
    HalfLccBound,
    /// `lcc = n/j` bounds `m` by `n - n/j + 1`.
    FractionLccBound,
    /// `lcc = n - 1` forces `m = 2`.
    NearlyConnected,
}

impl Violation {
    /// Short machine-readable id.
    pub fn id(self) -> &'static str {
        match self {
            Violation::LccRange => "lcc",
            Violation::ComponentRange => "M",
            Violation::JRange => "j",
            Violation::SAboveLcc => "C1",
            Violation::BigSRange => "C2",
            Violation::SingletonsOnly => "C3",
            Violation::HalfLccBound => "C4",
            Violation::FractionLccBound => "C5",
            Violation::NearlyConnected => "C6",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Largest possible component count for a given LCC: one LCC plus singletons.
///
/// Stated elsewhere as `n - lcc`, which misses the LCC itself.
pub fn m_max(n: usize, lcc: usize) -> usize {
    if lcc >= n {
        1
    } else {
        1 + (n - lcc)
    }
}

pub fn m_min(n: usize, lcc: usize) -> usize {
    if lcc >= n {
        1
    } else {
        2
    }
}

/// Every constraint the statistics break; empty when consistent.
pub fn validate(stats: &AjbStats) -> Vec<Violation> {
    validate_inner(stats, None)
}

/// As [`validate`], also checking the `n/j` constraints for a given `j`.
pub fn validate_with_j(stats: &AjbStats, j: usize) -> Vec<Violation> {
    validate_inner(stats, Some(j))
}

fn validate_inner(stats: &AjbStats, j: Option<usize>) -> Vec<Violation> {
    let AjbStats { n, m, lcc, .. } = *stats;
    let mut out = Vec::new();
    if lcc < 1 || lcc > n {
        out.push(Violation::LccRange);
    }
    let m_ok = (m_min(n, lcc)..=m_max(n, lcc)).contains(&m);
    if !m_ok {
        out.push(Violation::ComponentRange);
    }
    if let Some(j) = j {
        if j < 1 || j > m {
            out.push(Violation::JRange);
        }
    }
    if let Some(s) = stats.small_s {
        if s > lcc as f64 {
            out.push(Violation::SAboveLcc);
        }
    }
    if n > 0 && !(1.0 / n as f64..=1.0).contains(&stats.big_s) {
        out.push(Violation::BigSRange);
    }
    if (lcc == 1) != (m == n) {
        out.push(Violation::SingletonsOnly);
    }
    if !m_ok && 2 * lcc == n {
        out.push(Violation::HalfLccBound);
    }
    if let Some(j) = j {
        if !m_ok && j > 0 && lcc * j == n {
            out.push(Violation::FractionLccBound);
        }
    }
    if n >= 2 && lcc == n - 1 && m != 2 {
        out.push(Violation::NearlyConnected);
    }
    out
}
