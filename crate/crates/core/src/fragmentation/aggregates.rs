//! Candidate scalar summaries of `(S, s)` and of the non-LCC fragment sizes.

use crate::error::FragmentError;

#[derive(Clone, Debug, PartialEq)]
pub struct Aggregates {
    pub fscore: f64,
    pub beta: f64,
    pub fscore_beta: f64,
    pub arithmetic: f64,
    pub geometric: f64,
    pub quadratic: f64,
    /// `s / S`.
    pub ratio: f64,
    /// `S^s`.
    pub big_s_pow_small_s: f64,
    /// `s^S`.
    pub small_s_pow_big_s: f64,
}

/// All pairwise summaries of `S` (as precision) and `s` (as recall).
pub fn aggregates(big_s: f64, small_s: f64, beta: f64) -> Result<Aggregates, FragmentError> {
    if big_s == 0.0 {
        return Err(FragmentError::RatioUndefined);
    }
    let (a, b) = (big_s, small_s);
    let b2 = beta * beta;
    let weighted = b2 * a + b;
    Ok(Aggregates {
        fscore: if a + b == 0.0 {
            0.0
        } else {
            2.0 * a * b / (a + b)
        },
        beta,
        fscore_beta: if weighted == 0.0 {
            0.0
        } else {
            (1.0 + b2) * a * b / weighted
        },
        arithmetic: (a + b) / 2.0,
        geometric: (a * b).sqrt(),
        quadratic: ((a * a + b * b) / 2.0).sqrt(),
        ratio: b / a,
        big_s_pow_small_s: a.powf(b),
        small_s_pow_big_s: b.powf(a),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ListStats {
    pub median: Option<f64>,
    pub mean: Option<f64>,
    /// Population standard deviation.
    pub std_dev: Option<f64>,
    pub harmonic: Option<f64>,
    pub geometric: Option<f64>,
}

/// Location and spread of the fragment sizes outside the LCC.
pub fn fragment_list_stats(sizes: &[usize]) -> ListStats {
    if sizes.is_empty() {
        return ListStats {
            median: None,
            mean: None,
            std_dev: None,
            harmonic: None,
            geometric: None,
        };
    }
    let k = sizes.len() as f64;
    let mut sorted: Vec<f64> = sizes.iter().map(|&x| x as f64).collect();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    let median = if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    };
    let mean = sorted.iter().sum::<f64>() / k;
    let var = sorted.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / k;
    ListStats {
        median: Some(median),
        mean: Some(mean),
        std_dev: Some(var.sqrt()),
        harmonic: Some(k / sorted.iter().map(|x| 1.0 / x).sum::<f64>()),
        geometric: Some((sorted.iter().map(|x| x.ln()).sum::<f64>() / k).exp()),
    }
}
