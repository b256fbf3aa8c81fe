//! Per-generation score and diversity measurement.

use crate::error::{Error, Result};
use crate::genome::{Direction, Individual};
use crate::similarity::positional_similarity;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenerationRecord {
    pub generation: u64,
    pub num_islands: usize,
    /// Best fitness seen so far in the run.
    pub best_score: f64,
    pub avg_score: f64,
    pub diversity: f64,
}

/// Everything a run reports.
#[derive(Clone, Debug, PartialEq)]
pub struct RunTrace {
    pub model: String,
    pub problem: String,
    pub direction: Direction,
    pub seed: u64,
    pub records: Vec<GenerationRecord>,
    /// Best individuals of the final merged population, best first.
    pub top: Vec<Individual>,
}

impl RunTrace {
    pub fn last(&self) -> Option<&GenerationRecord> {
        self.records.last()
    }

    /// `best_score` never moves against the optimization direction.
    pub fn best_is_monotone(&self) -> bool {
        self.records.windows(2).all(|w| !self.direction.better(w[0].best_score, w[1].best_score))
    }
}

/// Mean distance `1 - similarity` from `members[best]` to every other member.
/// Zero for a single member.
pub fn diversity(members: &[&Individual], best: usize) -> f64 {
    if members.len() < 2 {
        return 0.0;
    }
    let anchor = &members[best].genome;
    let total: f64 = members
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != best)
        .map(|(_, s)| 1.0 - positional_similarity(anchor, &s.genome))
        .sum();
    total / (members.len() - 1) as f64
}

pub fn avg_score(members: &[&Individual]) -> f64 {
    if members.is_empty() {
        return f64::NAN;
    }
    members.iter().map(|m| m.fitness).sum::<f64>() / members.len() as f64
}

/// One model's row of a results table.
#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub model: String,
    pub problem: String,
    /// Mean over runs of the final average score.
    pub avg_score: f64,
    /// Best final score over all runs.
    pub best_score: f64,
    /// Mean over runs of the final diversity.
    pub diversity: f64,
}

/// Aggregate runs that differ only in their seed.
pub fn summarize(traces: &[RunTrace]) -> Result<SummaryRow> {
    let first = traces.first().ok_or_else(|| Error::MismatchedConfigs("no traces to summarize".into()))?;
    for t in &traces[1..] {
        if t.model != first.model || t.problem != first.problem || t.direction != first.direction {
            return Err(Error::MismatchedConfigs(format!(
                "{}/{} vs {}/{}",
                first.model, first.problem, t.model, t.problem
            )));
        }
        if t.records.len() != first.records.len() {
            return Err(Error::MismatchedConfigs(format!(
                "{} vs {} generations",
                first.records.len(),
                t.records.len()
            )));
        }
    }
    let finals: Vec<&GenerationRecord> = traces
        .iter()
        .map(|t| t.last().ok_or_else(|| Error::MismatchedConfigs("trace without records".into())))
        .collect::<Result<_>>()?;
    let n = finals.len() as f64;
    let best = finals
        .iter()
        .map(|r| r.best_score)
        .reduce(|a, b| if first.direction.better(b, a) { b } else { a })
        .expect("non-empty");
    Ok(SummaryRow {
        model: first.model.clone(),
        problem: first.problem.clone(),
        avg_score: finals.iter().map(|r| r.avg_score).sum::<f64>() / n,
        best_score: best,
        diversity: finals.iter().map(|r| r.diversity).sum::<f64>() / n,
    })
}
