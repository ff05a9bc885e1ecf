//! Error histograms for the compare command.

use std::collections::BTreeMap;

pub const BUCKET_WIDTH: f64 = 0.25;
/// Lower edge of the most accurate bucket; smaller errors, including zero, land there.
pub const FLOOR_EDGE: f64 = -20.0;

#[derive(Debug, Clone, PartialEq)]
pub struct AccuracyReport {
    pub total: usize,
    pub exceed_goal: usize,
    pub max_rel_error: f64,
    /// `(lower edge of the log10 bucket, count)`, ascending; non-finite errors use edge `inf`.
    pub histogram: Vec<(f64, usize)>,
}

fn bucket_index(err: f64) -> i64 {
    if !err.is_finite() {
        return i64::MAX;
    }
    let floor = (FLOOR_EDGE / BUCKET_WIDTH) as i64;
    if err <= 0.0 {
        return floor;
    }
    ((err.log10() / BUCKET_WIDTH).floor() as i64).max(floor)
}

impl AccuracyReport {
    pub fn from_errors(errors: &[f64], goal: f64) -> Self {
        let mut counts = BTreeMap::new();
        let mut max_rel_error = 0.0f64;
        let mut exceed_goal = 0;
        for &e in errors {
            let e = if e.is_nan() { f64::INFINITY } else { e };
            *counts.entry(bucket_index(e)).or_insert(0usize) += 1;
            max_rel_error = max_rel_error.max(e);
            if e > goal {
                exceed_goal += 1;
            }
        }
        let histogram = counts
            .into_iter()
            .map(|(i, n)| {
                let edge = if i == i64::MAX {
                    f64::INFINITY
                } else {
                    i as f64 * BUCKET_WIDTH
                };
                (edge, n)
            })
            .collect();
        Self {
            total: errors.len(),
            exceed_goal,
            max_rel_error,
            histogram,
        }
    }
}
