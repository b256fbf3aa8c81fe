//! Solution encodings and the individual/population containers.
//!
//! Two encodings are supported:
//!
//! * permutations, optionally with repetition. A TSP tour lists each city
//!   once; a job-shop genome lists each job index once per machine, and the
//!   `t`-th occurrence of job `j` dispatches that job's `t`-th operation.
//! * assignment vectors, where slot `i` carries a label in `0..=K` and `0`
//!   means "not packed".

use std::borrow::Borrow;

use crate::problems::ProblemSpec;
use crate::rngdet::RngStream;

pub type Gene = u32;

/// Shape of the genomes of one problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Encoding {
    /// Each of `symbols` values appears exactly `repeats` times.
    Permutation { symbols: usize, repeats: usize },
    /// `slots` labels, each in `0..=labels`.
    Assignment { slots: usize, labels: u32 },
}

impl Encoding {
    pub fn len(&self) -> usize {
        match *self {
            Encoding::Permutation { symbols, repeats } => symbols * repeats,
            Encoding::Assignment { slots, .. } => slots,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_permutation(&self) -> bool {
        matches!(self, Encoding::Permutation { .. })
    }

    /// Permutation where some symbol repeats (job-shop style).
    pub fn has_repetition(&self) -> bool {
        matches!(self, Encoding::Permutation { repeats, .. } if *repeats > 1)
    }

    pub fn random_genome(&self, rng: &mut RngStream) -> Genome {
        match *self {
            Encoding::Permutation { symbols, repeats } => {
                let mut seq: Vec<Gene> = (0..symbols as Gene).flat_map(|s| std::iter::repeat_n(s, repeats)).collect();
                rng.shuffle(&mut seq);
                Genome::Permutation(seq)
            }
            Encoding::Assignment { slots, labels } => {
                Genome::Assignment((0..slots).map(|_| rng.below(labels as usize + 1) as Gene).collect())
            }
        }
    }

    pub fn validate(&self, genome: &Genome) -> bool {
        match (*self, genome) {
            (Encoding::Permutation { symbols, repeats }, Genome::Permutation(seq)) => {
                if seq.len() != symbols * repeats {
                    return false;
                }
                let mut counts = vec![0usize; symbols];
                for &g in seq {
                    match counts.get_mut(g as usize) {
                        Some(c) => *c += 1,
                        None => return false,
                    }
                }
                counts.iter().all(|&c| c == repeats)
            }
            (Encoding::Assignment { slots, labels }, Genome::Assignment(v)) => {
                v.len() == slots && v.iter().all(|&g| g <= labels)
            }
            _ => false,
        }
    }
}

/// One candidate solution. Equality is element-wise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Genome {
    Permutation(Vec<Gene>),
    Assignment(Vec<Gene>),
}

impl Genome {
    pub fn genes(&self) -> &[Gene] {
        match self {
            Genome::Permutation(g) | Genome::Assignment(g) => g,
        }
    }

    pub fn len(&self) -> usize {
        self.genes().len()
    }

    pub fn is_empty(&self) -> bool {
        self.genes().is_empty()
    }

    /// Same variant, new genes.
    pub fn with_genes(&self, genes: Vec<Gene>) -> Genome {
        match self {
            Genome::Permutation(_) => Genome::Permutation(genes),
            Genome::Assignment(_) => Genome::Assignment(genes),
        }
    }
}

/// Uniformly random valid genome for `problem`.
pub fn random_genome(problem: &ProblemSpec, rng: &mut RngStream) -> Genome {
    problem.encoding().random_genome(rng)
}

pub fn validate(genome: &Genome, problem: &ProblemSpec) -> bool {
    problem.encoding().validate(genome)
}

/// An evaluated genome. Immutable once built: operators create new individuals.
#[derive(Clone, Debug, PartialEq)]
pub struct Individual {
    pub genome: Genome,
    pub fitness: f64,
    pub birth_generation: u64,
}

impl Individual {
    /// Evaluate `genome` against `problem`. Problems that repair genomes
    /// (the knapsack family) store the repaired genome.
    pub fn evaluate(problem: &ProblemSpec, genome: Genome, birth_generation: u64) -> Self {
        let eval = problem.evaluate(&genome);
        Self { genome: eval.repaired.unwrap_or(genome), fitness: eval.fitness, birth_generation }
    }

    pub fn random(problem: &ProblemSpec, rng: &mut RngStream, birth_generation: u64) -> Self {
        let genome = random_genome(problem, rng);
        Self::evaluate(problem, genome, birth_generation)
    }
}

/// Whether smaller or larger fitness is better.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

impl Direction {
    /// `a` strictly better than `b`.
    #[inline]
    pub fn better(self, a: f64, b: f64) -> bool {
        match self {
            Direction::Minimize => a < b,
            Direction::Maximize => a > b,
        }
    }

    /// Ordering with better values first.
    pub fn cmp(self, a: f64, b: f64) -> std::cmp::Ordering {
        match self {
            Direction::Minimize => a.total_cmp(&b),
            Direction::Maximize => b.total_cmp(&a),
        }
    }

    /// The fitness value no real candidate can be worse than.
    pub fn worst_value(self) -> f64 {
        match self {
            Direction::Minimize => f64::INFINITY,
            Direction::Maximize => f64::NEG_INFINITY,
        }
    }
}

/// Index of the best individual; ties go to the lowest index.
pub fn best_index<M: Borrow<Individual>>(members: &[M], direction: Direction) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, ind) in members.iter().enumerate() {
        match best {
            Some(b) if !direction.better(ind.borrow().fitness, members[b].borrow().fitness) => {}
            _ => best = Some(i),
        }
    }
    best
}

#[derive(Clone, Debug)]
pub struct Population {
    pub members: Vec<Individual>,
    pub capacity: usize,
}

impl Population {
    pub fn new(members: Vec<Individual>, capacity: usize) -> Self {
        debug_assert!(members.len() <= capacity);
        Self { members, capacity }
    }

    pub fn random(problem: &ProblemSpec, size: usize, rng: &mut RngStream) -> Self {
        let members = (0..size).map(|_| Individual::random(problem, rng, 0)).collect();
        Self::new(members, size)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn best(&self, direction: Direction) -> Option<&Individual> {
        best_index(&self.members, direction).map(|i| &self.members[i])
    }
}
