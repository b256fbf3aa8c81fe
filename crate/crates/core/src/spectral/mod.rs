//! Normalized spectral clustering of a similarity matrix.
//!
//! Pipeline: `L = I - D^{-1/2} W D^{-1/2}`, smallest eigenpairs by Jacobi,
//! cluster count from the largest eigengap, unit-normalized rows of the
//! leading eigenvectors as embedding, k-means on the embedding, singleton
//! clusters folded into their nearest neighbour cluster, and finally labels
//! renumbered by first appearance.

pub mod jacobi;
pub mod kmeans;

pub use jacobi::{symmetric_eigen, SymmetricEigen};

use crate::error::{Error, Result};
use crate::rngdet::RngStream;
use crate::similarity::SimilarityMatrix;

#[derive(Clone, Debug, PartialEq)]
pub struct Laplacian {
    order: usize,
    values: Vec<f64>,
}

impl Laplacian {
    /// Wrap an arbitrary symmetric row-major matrix.
    pub fn from_symmetric(order: usize, values: Vec<f64>) -> Self {
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

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Cluster labels in `0..k`, every label used, numbered by first appearance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clustering {
    pub k: usize,
    pub labels: Vec<usize>,
}

impl Clustering {
    /// Member indices per cluster, in label order.
    pub fn groups(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.k];
        for (i, &l) in self.labels.iter().enumerate() {
            groups[l].push(i);
        }
        groups
    }
}

pub fn normalized_laplacian(w: &SimilarityMatrix) -> Result<Laplacian> {
    let n = w.order();
    let mut degrees = Vec::with_capacity(n);
    for i in 0..n {
        let degree: f64 = w.row(i).iter().sum();
        if degree <= 0.0 || !degree.is_finite() {
            return Err(Error::ZeroDegree(i));
        }
        degrees.push(degree);
    }
    let mut values = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let identity = if i == j { 1.0 } else { 0.0 };
            values[i * n + j] = identity - w.get(i, j) / (degrees[i] * degrees[j]).sqrt();
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (values[i * n + j] + values[j * n + i]);
            values[i * n + j] = avg;
            values[j * n + i] = avg;
        }
    }
    Ok(Laplacian { order: n, values })
}

/// The `k` smallest eigenvalues (ascending) and their eigenvectors.
pub fn smallest_eigenpairs(l: &Laplacian, k: usize) -> Result<SymmetricEigen> {
    assert!(k <= l.order, "asked for {k} eigenpairs of an order-{} matrix", l.order);
    let mut eig = symmetric_eigen(&l.values, l.order)?;
    eig.values.truncate(k);
    eig.vectors.truncate(k);
    Ok(eig)
}

/// Eigengap heuristic over ascending eigenvalues: the (1-based) index `i`
/// maximizing `λ_{i+1} - λ_i`, earliest on ties, capped at `k_max`.
pub fn choose_k(eigenvalues: &[f64], k_max: usize) -> usize {
    let mut best_k = 1;
    let mut best_gap = f64::NEG_INFINITY;
    for i in 1..eigenvalues.len() {
        let gap = eigenvalues[i] - eigenvalues[i - 1];
        if gap > best_gap {
            best_gap = gap;
            best_k = i;
        }
    }
    best_k.min(k_max.max(1))
}

/// Normalized spectral clustering into at most `k_max` clusters.
pub fn cluster(w: &SimilarityMatrix, k_max: usize, rng: &mut RngStream) -> Result<Clustering> {
    let n = w.order();
    if n <= 1 {
        return Ok(Clustering { k: n, labels: vec![0; n] });
    }
    let l = normalized_laplacian(w)?;
    let eig = smallest_eigenpairs(&l, (k_max + 1).min(n))?;
    let k = choose_k(&eig.values, k_max);
    if k == 1 {
        return Ok(Clustering { k: 1, labels: vec![0; n] });
    }

    let embedding: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row: Vec<f64> = eig.vectors[..k].iter().map(|v| v[i]).collect();
            let norm = row.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 0.0 {
                row.iter_mut().for_each(|x| *x /= norm);
            }
            row
        })
        .collect();

    let mut labels = kmeans::kmeans(&embedding, k, rng);
    merge_singletons(&embedding, &mut labels);
    Ok(canonical(&labels))
}

/// Fold each single-member cluster into the cluster whose embedding centroid
/// is nearest to that member, until no singleton is left or only one cluster
/// remains. Singletons are handled in ascending label order.
fn merge_singletons(embedding: &[Vec<f64>], labels: &mut [usize]) {
    loop {
        let max_label = labels.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0usize; max_label + 1];
        for &l in labels.iter() {
            counts[l] += 1;
        }
        let live: Vec<usize> = (0..=max_label).filter(|&c| counts[c] > 0).collect();
        if live.len() <= 1 {
            return;
        }
        let Some(&single) = live.iter().find(|&&c| counts[c] == 1) else {
            return;
        };
        let member = labels.iter().position(|&l| l == single).expect("singleton has a member");
        let others: Vec<usize> = live.iter().copied().filter(|&c| c != single).collect();
        let centroids: Vec<Vec<f64>> = others
            .iter()
            .map(|&c| {
                let dim = embedding[member].len();
                let mut sum = vec![0.0; dim];
                for (p, _) in embedding.iter().zip(labels.iter()).filter(|(_, &l)| l == c) {
                    for (s, x) in sum.iter_mut().zip(p) {
                        *s += x;
                    }
                }
                sum.into_iter().map(|s| s / counts[c] as f64).collect()
            })
            .collect();
        labels[member] = others[kmeans::nearest(&embedding[member], &centroids)];
    }
}

/// Renumber labels by order of first appearance.
fn canonical(labels: &[usize]) -> Clustering {
    let mut map = std::collections::HashMap::new();
    let labels: Vec<usize> = labels
        .iter()
        .map(|&l| {
            let next = map.len();
            *map.entry(l).or_insert(next)
        })
        .collect();
    Clustering { k: map.len(), labels }
}
