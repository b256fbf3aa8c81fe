//! Selection, crossover and mutation, plus random operator assignment for
//! islands.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::genome::{best_index, Encoding, Gene, Genome, Individual, Population};
use crate::problems::ProblemSpec;
use crate::rngdet::RngStream;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Crossover {
    /// Order crossover, generalized to keep the gene multiset of permutations
    /// with repetition.
    Order,
    /// Partially mapped crossover; distinct-gene permutations only.
    PartiallyMapped,
    /// Per-slot coin flip; assignment vectors only.
    Uniform,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    Swap,
    Insertion,
    Inversion,
    /// Set one random slot to a random label in `0..=K`.
    Reassign,
}

impl Crossover {
    pub fn as_str(self) -> &'static str {
        match self {
            Crossover::Order => "order",
            Crossover::PartiallyMapped => "pmx",
            Crossover::Uniform => "uniform",
        }
    }

    fn supports(self, enc: Encoding) -> bool {
        match self {
            Crossover::Order => enc.is_permutation(),
            Crossover::PartiallyMapped => enc.is_permutation() && !enc.has_repetition(),
            Crossover::Uniform => !enc.is_permutation(),
        }
    }
}

impl Mutation {
    pub fn as_str(self) -> &'static str {
        match self {
            Mutation::Swap => "swap",
            Mutation::Insertion => "insertion",
            Mutation::Inversion => "inversion",
            Mutation::Reassign => "reassign",
        }
    }

    fn supports(self, enc: Encoding) -> bool {
        match self {
            Mutation::Reassign => !enc.is_permutation(),
            _ => enc.is_permutation(),
        }
    }
}

impl fmt::Display for Crossover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Crossover {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "order" | "ox" => Ok(Crossover::Order),
            "pmx" | "partially_mapped" => Ok(Crossover::PartiallyMapped),
            "uniform" => Ok(Crossover::Uniform),
            other => Err(Error::Config(format!("unknown crossover {other:?}"))),
        }
    }
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "swap" => Ok(Mutation::Swap),
            "insertion" | "insert" => Ok(Mutation::Insertion),
            "inversion" | "invert" => Ok(Mutation::Inversion),
            "reassign" => Ok(Mutation::Reassign),
            other => Err(Error::Config(format!("unknown mutation {other:?}"))),
        }
    }
}

/// The operators one island evolves with.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OperatorSet {
    pub tournament_size: usize,
    pub crossover: Crossover,
    pub mutation: Mutation,
    pub crossover_rate: f64,
    pub mutation_rate: f64,
}

impl OperatorSet {
    pub const DEFAULT_TOURNAMENT: usize = 3;
    pub const DEFAULT_CROSSOVER_RATE: f64 = 0.8;
    pub const DEFAULT_MUTATION_RATE: f64 = 0.2;

    /// Default operators for an encoding: order crossover with inversion for
    /// tours, order crossover with swap for job sequences, uniform crossover
    /// with reassignment for knapsack assignments.
    pub fn default_for(enc: Encoding) -> Self {
        let (crossover, mutation) = match enc {
            Encoding::Permutation { repeats: 1, .. } => (Crossover::Order, Mutation::Inversion),
            Encoding::Permutation { .. } => (Crossover::Order, Mutation::Swap),
            Encoding::Assignment { .. } => (Crossover::Uniform, Mutation::Reassign),
        };
        Self {
            tournament_size: Self::DEFAULT_TOURNAMENT,
            crossover,
            mutation,
            crossover_rate: Self::DEFAULT_CROSSOVER_RATE,
            mutation_rate: Self::DEFAULT_MUTATION_RATE,
        }
    }

    /// Rates, tournament size and operator/encoding compatibility.
    pub fn check(&self, enc: Encoding) -> Result<()> {
        for (name, rate) in [("crossover_rate", self.crossover_rate), ("mutation_rate", self.mutation_rate)] {
            if !(0.0..=1.0).contains(&rate) {
                return Err(Error::Config(format!("{name} = {rate} is outside [0, 1]")));
            }
        }
        if !(2..=7).contains(&self.tournament_size) {
            return Err(Error::Config(format!("tournament_size = {} is outside 2..=7", self.tournament_size)));
        }
        if !self.crossover.supports(enc) {
            return Err(Error::Config(format!("crossover {} does not fit this encoding", self.crossover)));
        }
        if !self.mutation.supports(enc) {
            return Err(Error::Config(format!("mutation {} does not fit this encoding", self.mutation)));
        }
        Ok(())
    }
}

/// Tournament selection with replacement; ties keep the earliest draw.
pub fn tournament<'a>(
    members: &'a [Individual],
    k: usize,
    problem: &ProblemSpec,
    rng: &mut RngStream,
) -> &'a Individual {
    let dir = problem.direction();
    let mut best = &members[rng.below(members.len())];
    for _ in 1..k {
        let cand = &members[rng.below(members.len())];
        if dir.better(cand.fitness, best.fitness) {
            best = cand;
        }
    }
    best
}

/// Two cut points `a <= b`, inclusive segment.
fn segment(n: usize, rng: &mut RngStream) -> (usize, usize) {
    let i = rng.below(n);
    let j = rng.below(n);
    (i.min(j), i.max(j))
}

/// Order crossover. The child keeps `first[a..=b]` in place and fills the
/// remaining positions, starting after `b` and wrapping, with genes of
/// `second` read from `b + 1` onward, each gene taken only while its count in
/// the child is below its count in the parents.
pub fn order_crossover(first: &[Gene], second: &[Gene], rng: &mut RngStream) -> Vec<Gene> {
    let n = first.len();
    if n < 2 {
        return first.to_vec();
    }
    let (a, b) = segment(n, rng);
    order_crossover_at(first, second, a, b)
}

pub(crate) fn order_crossover_at(first: &[Gene], second: &[Gene], a: usize, b: usize) -> Vec<Gene> {
    let n = first.len();
    let symbols = first.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut remaining = vec![0usize; symbols];
    for &g in first {
        remaining[g as usize] += 1;
    }
    let mut child = vec![0; n];
    child[a..=b].copy_from_slice(&first[a..=b]);
    for &g in &first[a..=b] {
        remaining[g as usize] -= 1;
    }
    let mut fill = (b + 1..n).chain(0..a);
    for k in 0..n {
        let g = second[(b + 1 + k) % n];
        if remaining[g as usize] > 0 {
            remaining[g as usize] -= 1;
            child[fill.next().expect("fill slots match remaining genes")] = g;
        }
    }
    child
}

/// Partially mapped crossover for distinct-gene permutations.
pub fn partially_mapped_crossover(first: &[Gene], second: &[Gene], rng: &mut RngStream) -> Vec<Gene> {
    let n = first.len();
    if n < 2 {
        return first.to_vec();
    }
    let (a, b) = segment(n, rng);
    let mut pos_in_first = vec![0usize; n];
    for (i, &g) in first.iter().enumerate() {
        pos_in_first[g as usize] = i;
    }
    let mut child = second.to_vec();
    child[a..=b].copy_from_slice(&first[a..=b]);
    for i in (0..a).chain(b + 1..n) {
        let mut g = second[i];
        loop {
            let p = pos_in_first[g as usize];
            if p < a || p > b {
                break;
            }
            g = second[p];
        }
        child[i] = g;
    }
    child
}

pub fn uniform_crossover(first: &[Gene], second: &[Gene], rng: &mut RngStream) -> Vec<Gene> {
    first.iter().zip(second).map(|(&x, &y)| if rng.next_u64() & 1 == 0 { x } else { y }).collect()
}

/// Two distinct positions.
fn two_positions(n: usize, rng: &mut RngStream) -> (usize, usize) {
    let i = rng.below(n);
    let mut j = rng.below(n - 1);
    if j >= i {
        j += 1;
    }
    (i, j)
}

pub fn mutate(genes: &mut Vec<Gene>, mutation: Mutation, enc: Encoding, rng: &mut RngStream) {
    let n = genes.len();
    match mutation {
        Mutation::Reassign => {
            if let (Encoding::Assignment { labels, .. }, true) = (enc, n > 0) {
                let slot = rng.below(n);
                genes[slot] = rng.below(labels as usize + 1) as Gene;
            }
        }
        _ if n < 2 => {}
        Mutation::Swap => {
            let (i, j) = two_positions(n, rng);
            genes.swap(i, j);
        }
        Mutation::Insertion => {
            let (from, to) = two_positions(n, rng);
            let g = genes.remove(from);
            genes.insert(to, g);
        }
        Mutation::Inversion => {
            let (i, j) = two_positions(n, rng);
            genes[i.min(j)..=i.max(j)].reverse();
        }
    }
}

fn cross(ops: &OperatorSet, first: &Genome, second: &Genome, rng: &mut RngStream) -> Vec<Gene> {
    let (x, y) = (first.genes(), second.genes());
    match ops.crossover {
        Crossover::Order => order_crossover(x, y, rng),
        Crossover::PartiallyMapped => partially_mapped_crossover(x, y, rng),
        Crossover::Uniform => uniform_crossover(x, y, rng),
    }
}

/// One generational step: the best member survives unchanged, the rest of
/// the slots are filled with offspring of tournament-selected parents.
pub fn evolve_one_generation(
    pop: &Population,
    ops: &OperatorSet,
    problem: &ProblemSpec,
    rng: &mut RngStream,
    generation: u64,
) -> Result<Population> {
    breed(pop, pop.members.len(), ops, problem, rng, generation)
}

/// Like [`evolve_one_generation`], but the next generation has `pop.capacity`
/// members, so an under-full population regrows from its own offspring.
pub fn evolve_to_capacity(
    pop: &Population,
    ops: &OperatorSet,
    problem: &ProblemSpec,
    rng: &mut RngStream,
    generation: u64,
) -> Result<Population> {
    breed(pop, pop.capacity.max(pop.members.len()), ops, problem, rng, generation)
}

fn breed(
    pop: &Population,
    size: usize,
    ops: &OperatorSet,
    problem: &ProblemSpec,
    rng: &mut RngStream,
    generation: u64,
) -> Result<Population> {
    let members = &pop.members;
    if members.is_empty() {
        return Err(Error::EmptyPopulation);
    }
    if members.len() < 2 && ops.crossover_rate > 0.0 {
        return Err(Error::PopulationTooSmall(members.len()));
    }
    let enc = problem.encoding();
    let elite = best_index(members, problem.direction()).expect("non-empty");
    let mut next = Vec::with_capacity(size);
    next.push(members[elite].clone());
    while next.len() < size {
        let parent = tournament(members, ops.tournament_size, problem, rng);
        let mut genes = None;
        if rng.chance(ops.crossover_rate) {
            let other = tournament(members, ops.tournament_size, problem, rng);
            genes = Some(cross(ops, &parent.genome, &other.genome, rng));
        }
        if rng.chance(ops.mutation_rate) {
            let mut g = genes.unwrap_or_else(|| parent.genome.genes().to_vec());
            mutate(&mut g, ops.mutation, enc, rng);
            genes = Some(g);
        }
        let child = match genes {
            Some(g) if g != parent.genome.genes() => {
                Individual::evaluate(problem, parent.genome.with_genes(g), generation)
            }
            _ => parent.clone(),
        };
        next.push(child);
    }
    Ok(Population::new(next, pop.capacity.max(members.len())))
}

/// One operator set per island, drawn uniformly with replacement in island
/// order.
pub fn assign_operators(num_islands: usize, pool: &[OperatorSet], rng: &mut RngStream) -> Result<Vec<OperatorSet>> {
    if pool.is_empty() {
        return Err(Error::EmptyPool);
    }
    Ok((0..num_islands).map(|_| pool[rng.below(pool.len())]).collect())
}
