//! Pairwise genome similarity and the dense similarity matrix.
//!
//! Genomes are compared position by position: each position contributes 1
//! when both genomes carry the same gene there, and the similarity is the
//! fraction of matching positions (one minus the normalized Hamming
//! distance).

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::genome::{Genome, Individual};

/// 1 when `x` and `y` agree at position `i`, 0 otherwise.
pub fn gene_match(x: &Genome, y: &Genome, i: usize) -> Result<u8> {
    check_lengths(x, y)?;
    Ok(u8::from(x.genes()[i] == y.genes()[i]))
}

pub fn similarity(x: &Genome, y: &Genome) -> Result<f64> {
    check_lengths(x, y)?;
    Ok(positional_similarity(x, y))
}

fn check_lengths(x: &Genome, y: &Genome) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    Ok(())
}

/// Unchecked version for callers that already know the lengths agree.
#[inline]
pub(crate) fn positional_similarity(x: &Genome, y: &Genome) -> f64 {
    let (a, b) = (x.genes(), y.genes());
    if a.is_empty() {
        return 1.0;
    }
    let matches = a.iter().zip(b).filter(|(p, q)| p == q).count();
    matches as f64 / a.len() as f64
}

/// Which notion of similarity builds the matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub enum Kernel {
    /// Fraction of matching positions.
    #[default]
    Positional,
    /// `1 - |f(x) - f(y)| / range`, the range taken over the population.
    Fitness,
}

/// Dense symmetric matrix with unit diagonal and entries in `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SimilarityMatrix {
    order: usize,
    values: Vec<f64>,
}

impl SimilarityMatrix {
    /// Build from a row-major `order × order` array. The caller is
    /// responsible for the symmetry and range invariants.
    pub fn from_rows(order: usize, values: Vec<f64>) -> Self {
        assert_eq!(values.len(), order * order);
        Self { order, values }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.order..(i + 1) * self.order]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Positional similarity of every pair.
pub fn build_matrix(pop: &[Individual]) -> Result<SimilarityMatrix> {
    build_matrix_with(pop, Kernel::Positional)
}

/// Computes the upper triangle (rows in parallel) and mirrors it.
pub fn build_matrix_with(pop: &[Individual], kernel: Kernel) -> Result<SimilarityMatrix> {
    let n = pop.len();
    if n == 0 {
        return Err(Error::EmptyPopulation);
    }
    let len = pop[0].genome.len();
    if let Some(bad) = pop.iter().find(|ind| ind.genome.len() != len) {
        return Err(Error::LengthMismatch { left: len, right: bad.genome.len() });
    }
    let (lo, hi) =
        pop.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), ind| (lo.min(ind.fitness), hi.max(ind.fitness)));
    let range = hi - lo;
    let pair = |a: &Individual, b: &Individual| match kernel {
        Kernel::Positional => positional_similarity(&a.genome, &b.genome),
        Kernel::Fitness if range > 0.0 => 1.0 - (a.fitness - b.fitness).abs() / range,
        Kernel::Fitness => 1.0,
    };

    let upper: Vec<Vec<f64>> =
        (0..n).into_par_iter().map(|i| ((i + 1)..n).map(|j| pair(&pop[i], &pop[j])).collect()).collect();
    let mut values = vec![0.0; n * n];
    for (i, row) in upper.into_iter().enumerate() {
        values[i * n + i] = 1.0;
        for (off, s) in row.into_iter().enumerate() {
            let j = i + 1 + off;
            values[i * n + j] = s;
            values[j * n + i] = s;
        }
    }
    Ok(SimilarityMatrix { order: n, values })
}
