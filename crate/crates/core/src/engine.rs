//! Evolutionary drivers.
//!
//! * Baseline island models: a fixed number of islands wired as fully
//!   connected, star (island 0 is the hub) or ring, exchanging copies of
//!   randomly chosen individuals every `interval` generations.
//! * DIM-SP: one island at generation 0; at every epoch all islands are merged,
//!   the merged population is split by spectral clustering of the genome
//!   similarity matrix, and every cluster becomes a new island with freshly
//!   drawn operators.
//!
//! Random streams are derived from the master seed by path:
//! `[EVOLVE, segment, island]` for evolution between synchronization points,
//! `[MIGRATE, event, island]` for migrant selection, `[CLUSTER, epoch]` for
//! k-means seeding and `[ASSIGN, epoch]` for operator assignment. A segment is
//! the stretch of generations between two migrations or epochs.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::genome::{best_index, Direction, Individual, Population};
use crate::metrics::{avg_score, diversity, GenerationRecord, RunTrace};
use crate::operators::{assign_operators, evolve_one_generation, evolve_to_capacity, OperatorSet};
use crate::problems::ProblemSpec;
use crate::rngdet::RngStream;
use crate::similarity::build_matrix;
use crate::spectral::cluster;

const INIT: u64 = 0;
const EVOLVE: u64 = 1;
const MIGRATE: u64 = 2;
const CLUSTER: u64 = 3;
const ASSIGN: u64 = 4;

/// Number of individuals reported from the final merged population.
pub const TOP_REPORTED: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    Dimsp,
    Ring,
    Star,
    FullyConnected,
}

impl Model {
    pub const ALL: [Model; 4] = [Model::Dimsp, Model::Ring, Model::Star, Model::FullyConnected];

    /// Key used in configs and file names.
    pub fn key(self) -> &'static str {
        match self {
            Model::Dimsp => "dimsp",
            Model::Ring => "ring",
            Model::Star => "star",
            Model::FullyConnected => "fully_connected",
        }
    }

    /// Name used in result tables.
    pub fn label(self) -> &'static str {
        match self {
            Model::Dimsp => "DIM-SP",
            Model::Ring => "Ring",
            Model::Star => "Star-shape",
            Model::FullyConnected => "Fully-connected",
        }
    }

    pub fn topology(self) -> Option<TopologyKind> {
        match self {
            Model::Dimsp => None,
            Model::Ring => Some(TopologyKind::Ring),
            Model::Star => Some(TopologyKind::StarShape),
            Model::FullyConnected => Some(TopologyKind::FullyConnected),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dimsp" => Ok(Model::Dimsp),
            "ring" => Ok(Model::Ring),
            "star" | "star_shape" => Ok(Model::Star),
            "fully_connected" | "full" => Ok(Model::FullyConnected),
            other => Err(Error::Config(format!("unknown model {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopologyKind {
    FullyConnected,
    StarShape,
    Ring,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Topology {
    pub kind: TopologyKind,
    pub num_islands: usize,
}

impl Topology {
    /// Neighbours of `island` in ascending order.
    pub fn neighbors(&self, island: usize) -> Vec<usize> {
        let n = self.num_islands;
        let mut out: Vec<usize> = match self.kind {
            TopologyKind::FullyConnected => (0..n).filter(|&j| j != island).collect(),
            TopologyKind::StarShape if island == 0 => (1..n).collect(),
            TopologyKind::StarShape => vec![0],
            TopologyKind::Ring => vec![(island + n - 1) % n, (island + 1) % n],
        };
        out.sort_unstable();
        out.dedup();
        out.retain(|&j| j != island);
        out
    }
}

/// Copy-based migration; incomers replace the recipient's worst members.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MigrationPolicy {
    pub interval: u64,
    pub fraction: f64,
}

impl Default for MigrationPolicy {
    fn default() -> Self {
        Self { interval: 50, fraction: 0.05 }
    }
}

impl MigrationPolicy {
    /// `⌈fraction × capacity⌉`.
    pub fn migrants(&self, capacity: usize) -> usize {
        // guard against products like 0.07 * 100 = 7.000000000000001
        let exact = self.fraction * capacity as f64;
        ((exact - 1e-9).ceil().max(0.0) as usize).min(capacity)
    }
}

#[derive(Clone, Debug)]
pub struct BaselineConfig {
    pub topology: Topology,
    pub policy: MigrationPolicy,
    pub ops: OperatorSet,
    pub island_capacity: usize,
    pub max_generations: u64,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct DimspConfig {
    pub pool: Vec<OperatorSet>,
    pub island_capacity: usize,
    pub k_max: usize,
    pub epoch_interval: u64,
    pub max_generations: u64,
    pub seed: u64,
}

/// A sub-population with its operators and private random stream.
#[derive(Clone, Debug)]
pub struct Island {
    pub population: Population,
    pub ops: OperatorSet,
    pub rng: RngStream,
}

/// Islands, optional fixed topology, and the best-ever archive.
#[derive(Clone, Debug)]
pub struct Archipelago {
    pub islands: Vec<Island>,
    pub topology: Option<Topology>,
    pub elite: Individual,
    pub generation: u64,
    pub direction: Direction,
}

impl Archipelago {
    pub fn members(&self) -> Vec<&Individual> {
        self.islands.iter().flat_map(|i| i.population.members.iter()).collect()
    }

    pub fn total_size(&self) -> usize {
        self.islands.iter().map(|i| i.population.len()).sum()
    }

    pub fn island_sizes(&self) -> Vec<usize> {
        self.islands.iter().map(|i| i.population.len()).collect()
    }

    /// Fold every current member into the elite archive.
    pub fn update_elite(&mut self) {
        let members = self.members();
        let elite = update_elite(&self.elite, members.iter().copied(), self.direction);
        self.elite = elite;
    }

    fn evolve_all(&mut self, problem: &ProblemSpec, regrow: bool) -> Result<()> {
        let generation = self.generation + 1;
        let evolve = if regrow { evolve_to_capacity } else { evolve_one_generation };
        self.islands.par_iter_mut().try_for_each(|island| {
            island.population = evolve(&island.population, &island.ops, problem, &mut island.rng, generation)?;
            Ok::<_, Error>(())
        })?;
        self.generation = generation;
        Ok(())
    }

    fn record(&self) -> GenerationRecord {
        let members = self.members();
        let best = best_index(&members, self.direction).unwrap_or(0);
        GenerationRecord {
            generation: self.generation,
            num_islands: self.islands.len(),
            best_score: self.elite.fitness,
            avg_score: avg_score(&members),
            diversity: diversity(&members, best),
        }
    }

    /// Every member, best first (stable on ties).
    pub fn ranked(&self) -> Vec<Individual> {
        let mut all: Vec<Individual> = self.members().into_iter().cloned().collect();
        all.sort_by(|a, b| self.direction.cmp(a.fitness, b.fitness));
        all
    }
}

/// Best of the incumbent and the candidates; ties keep the incumbent.
pub fn update_elite<'a>(
    incumbent: &Individual,
    candidates: impl IntoIterator<Item = &'a Individual>,
    direction: Direction,
) -> Individual {
    let mut best = incumbent;
    for c in candidates {
        if direction.better(c.fitness, best.fitness) {
            best = c;
        }
    }
    best.clone()
}

fn check_common(problem: &ProblemSpec, pool: &[OperatorSet], capacity: usize, generations: u64) -> Result<()> {
    if capacity < 2 {
        return Err(Error::Config(format!("island_capacity must be at least 2, got {capacity}")));
    }
    if generations == 0 {
        return Err(Error::Config("max_generations must be positive".into()));
    }
    if pool.is_empty() {
        return Err(Error::EmptyPool);
    }
    for ops in pool {
        ops.check(problem.encoding())?;
    }
    Ok(())
}

/// Classical island model with a static topology.
pub struct BaselineRun<'p> {
    problem: &'p ProblemSpec,
    config: BaselineConfig,
    master: RngStream,
    pub archipelago: Archipelago,
    records: Vec<GenerationRecord>,
}

impl<'p> BaselineRun<'p> {
    pub fn new(problem: &'p ProblemSpec, config: BaselineConfig) -> Result<Self> {
        check_common(problem, std::slice::from_ref(&config.ops), config.island_capacity, config.max_generations)?;
        let n = config.topology.num_islands;
        if n == 0 {
            return Err(Error::Config("num_islands must be positive".into()));
        }
        if n < 2 && config.topology.kind != TopologyKind::FullyConnected {
            return Err(Error::Config("star and ring topologies need at least 2 islands".into()));
        }
        if config.policy.interval == 0 {
            return Err(Error::Config("migration interval must be positive".into()));
        }
        if !(config.policy.fraction > 0.0 && config.policy.fraction <= 1.0) {
            return Err(Error::Config(format!("migration fraction {} outside (0, 1]", config.policy.fraction)));
        }
        let master = RngStream::new(config.seed);
        let islands: Vec<Island> = (0..n)
            .map(|i| Island {
                population: Population::random(
                    problem,
                    config.island_capacity,
                    &mut master.split_path(&[INIT, i as u64]),
                ),
                ops: config.ops,
                rng: master.split_path(&[EVOLVE, 0, i as u64]),
            })
            .collect();
        let direction = problem.direction();
        let first = &islands[0].population.members[0];
        let mut archipelago =
            Archipelago { elite: first.clone(), islands, topology: Some(config.topology), generation: 0, direction };
        archipelago.update_elite();
        let records = vec![archipelago.record()];
        Ok(Self { problem, config, master, archipelago, records })
    }

    pub fn step(&mut self) -> Result<()> {
        self.archipelago.evolve_all(self.problem, false)?;
        let g = self.archipelago.generation;
        if g.is_multiple_of(self.config.policy.interval) && g < self.config.max_generations {
            let event = g / self.config.policy.interval;
            self.migrate(event);
            for (i, island) in self.archipelago.islands.iter_mut().enumerate() {
                island.rng = self.master.split_path(&[EVOLVE, event, i as u64]);
            }
        }
        self.archipelago.update_elite();
        self.records.push(self.archipelago.record());
        Ok(())
    }

    /// Synchronous exchange: migrants are drawn from every island before any
    /// island receives.
    fn migrate(&mut self, event: u64) {
        let topology = self.config.topology;
        let count = self.config.policy.migrants(self.config.island_capacity);
        let islands = &self.archipelago.islands;
        let mut inbox: Vec<Vec<Individual>> = vec![Vec::new(); islands.len()];
        for (i, island) in islands.iter().enumerate() {
            let neighbors = topology.neighbors(i);
            if neighbors.is_empty() {
                continue;
            }
            let mut rng = self.master.split_path(&[MIGRATE, event, i as u64]);
            let members = &island.population.members;
            let picked = rng.sample_indices(members.len(), count);
            let base = picked.len() / neighbors.len();
            let extra = picked.len() % neighbors.len();
            let mut cursor = picked.into_iter();
            for (rank, &dest) in neighbors.iter().enumerate() {
                let share = base + usize::from(rank < extra);
                inbox[dest].extend(cursor.by_ref().take(share).map(|m| members[m].clone()));
            }
        }
        let direction = self.archipelago.direction;
        for (island, incoming) in self.archipelago.islands.iter_mut().zip(inbox) {
            replace_worst(&mut island.population, incoming, direction);
        }
    }

    pub fn run(mut self) -> Result<RunTrace> {
        while self.archipelago.generation < self.config.max_generations {
            self.step()?;
        }
        let model = match self.config.topology.kind {
            TopologyKind::FullyConnected => Model::FullyConnected,
            TopologyKind::StarShape => Model::Star,
            TopologyKind::Ring => Model::Ring,
        };
        let mut top = self.archipelago.ranked();
        top.truncate(TOP_REPORTED);
        Ok(RunTrace {
            model: model.key().to_string(),
            problem: self.problem.name().to_string(),
            direction: self.archipelago.direction,
            seed: self.config.seed,
            records: self.records,
            top,
        })
    }
}

/// Incomers overwrite the worst members (worst first, lower index first on
/// ties). Surplus incomers beyond the population size are dropped.
fn replace_worst(pop: &mut Population, incoming: Vec<Individual>, direction: Direction) {
    if incoming.is_empty() {
        return;
    }
    let mut order: Vec<usize> = (0..pop.members.len()).collect();
    order.sort_by(|&a, &b| direction.cmp(pop.members[b].fitness, pop.members[a].fitness).then(a.cmp(&b)));
    for (slot, ind) in order.into_iter().zip(incoming) {
        pop.members[slot] = ind;
    }
}

pub fn run_baseline(problem: &ProblemSpec, config: BaselineConfig) -> Result<RunTrace> {
    BaselineRun::new(problem, config)?.run()
}

/// Island layout right after an epoch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpochRecord {
    pub generation: u64,
    pub island_sizes: Vec<usize>,
}

/// Dynamic island model driven by spectral clustering.
pub struct DimspRun<'p> {
    problem: &'p ProblemSpec,
    config: DimspConfig,
    master: RngStream,
    epoch: u64,
    pub archipelago: Archipelago,
    records: Vec<GenerationRecord>,
    epochs: Vec<EpochRecord>,
}

impl<'p> DimspRun<'p> {
    pub fn new(problem: &'p ProblemSpec, config: DimspConfig) -> Result<Self> {
        check_common(problem, &config.pool, config.island_capacity, config.max_generations)?;
        if config.k_max == 0 {
            return Err(Error::Config("k_max must be positive".into()));
        }
        if config.epoch_interval == 0 {
            return Err(Error::Config("epoch_interval must be positive".into()));
        }
        let master = RngStream::new(config.seed);
        let population = Population::random(problem, config.island_capacity, &mut master.split_path(&[INIT, 0]));
        let ops = assign_operators(1, &config.pool, &mut master.split_path(&[ASSIGN, 0]))?[0];
        let direction = problem.direction();
        let mut archipelago = Archipelago {
            elite: population.members[0].clone(),
            islands: vec![Island { population, ops, rng: master.split_path(&[EVOLVE, 0, 0]) }],
            topology: None,
            generation: 0,
            direction,
        };
        archipelago.update_elite();
        let records = vec![archipelago.record()];
        Ok(Self { problem, config, master, epoch: 0, archipelago, records, epochs: Vec::new() })
    }

    pub fn epochs(&self) -> &[EpochRecord] {
        &self.epochs
    }

    pub fn step(&mut self) -> Result<()> {
        self.archipelago.evolve_all(self.problem, true)?;
        let g = self.archipelago.generation;
        if g.is_multiple_of(self.config.epoch_interval) && g < self.config.max_generations {
            self.centralize_and_cluster()?;
        }
        self.archipelago.update_elite();
        self.records.push(self.archipelago.record());
        Ok(())
    }

    /// Merge all islands, cluster the merged population and rebuild the
    /// islands from the clusters.
    pub fn centralize_and_cluster(&mut self) -> Result<()> {
        self.epoch += 1;
        let merged: Vec<Individual> =
            std::mem::take(&mut self.archipelago.islands).into_iter().flat_map(|i| i.population.members).collect();
        let w = build_matrix(&merged)?;
        let clustering = cluster(&w, self.config.k_max, &mut self.master.split_path(&[CLUSTER, self.epoch]))?;
        let groups = clustering.groups();
        let ops =
            assign_operators(groups.len(), &self.config.pool, &mut self.master.split_path(&[ASSIGN, self.epoch]))?;
        let capacity = self.config.island_capacity;
        let direction = self.archipelago.direction;
        let mut slots: Vec<Option<Individual>> = merged.into_iter().map(Some).collect();
        self.archipelago.islands = groups
            .into_iter()
            .zip(ops)
            .enumerate()
            .map(|(j, (mut group, ops))| {
                if group.len() > capacity {
                    group.sort_by(|&a, &b| {
                        let (fa, fb) = (slots[a].as_ref().unwrap().fitness, slots[b].as_ref().unwrap().fitness);
                        direction.cmp(fa, fb).then(a.cmp(&b))
                    });
                    group.truncate(capacity);
                    group.sort_unstable();
                }
                let members = group.into_iter().map(|i| slots[i].take().expect("each index in one cluster")).collect();
                Island {
                    population: Population::new(members, capacity),
                    ops,
                    rng: self.master.split_path(&[EVOLVE, self.epoch, j as u64]),
                }
            })
            .collect();
        self.epochs.push(EpochRecord {
            generation: self.archipelago.generation,
            island_sizes: self.archipelago.island_sizes(),
        });
        Ok(())
    }

    pub fn run(self) -> Result<RunTrace> {
        self.run_with_epochs().map(|(trace, _)| trace)
    }

    /// Like `run`, also returning the island layout after every epoch.
    pub fn run_with_epochs(mut self) -> Result<(RunTrace, Vec<EpochRecord>)> {
        while self.archipelago.generation < self.config.max_generations {
            self.step()?;
        }
        // final centralization: the merged population is ranked and the top reported
        let mut top = self.archipelago.ranked();
        top.truncate(TOP_REPORTED);
        let trace = RunTrace {
            model: Model::Dimsp.key().to_string(),
            problem: self.problem.name().to_string(),
            direction: self.archipelago.direction,
            seed: self.config.seed,
            records: self.records,
            top,
        };
        Ok((trace, self.epochs))
    }
}

pub fn run_dimsp(problem: &ProblemSpec, config: DimspConfig) -> Result<RunTrace> {
    DimspRun::new(problem, config)?.run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genome::Genome;
    use crate::problems::{JsspInstance, QmkpInstance, TspInstance};

    fn tsp(n: usize, seed: u64) -> ProblemSpec {
        ProblemSpec::Tsp(TspInstance::generate(n, 1000, &mut RngStream::new(seed)))
    }

    fn baseline(kind: TopologyKind, n: usize, seed: u64, problem: &ProblemSpec) -> BaselineConfig {
        BaselineConfig {
            topology: Topology { kind, num_islands: n },
            policy: MigrationPolicy { interval: 10, fraction: 0.1 },
            ops: OperatorSet::default_for(problem.encoding()),
            island_capacity: 20,
            max_generations: 60,
            seed,
        }
    }

    fn dimsp(seed: u64, problem: &ProblemSpec) -> DimspConfig {
        DimspConfig {
            pool: vec![OperatorSet::default_for(problem.encoding())],
            island_capacity: 30,
            k_max: 5,
            epoch_interval: 10,
            max_generations: 60,
            seed,
        }
    }

    #[test]
    fn topology_neighbors() {
        let ring = Topology { kind: TopologyKind::Ring, num_islands: 3 };
        assert_eq!(ring.neighbors(0), vec![1, 2]);
        let ring2 = Topology { kind: TopologyKind::Ring, num_islands: 2 };
        assert_eq!(ring2.neighbors(1), vec![0]);
        let star = Topology { kind: TopologyKind::StarShape, num_islands: 4 };
        assert_eq!(star.neighbors(2), vec![0]);
        assert_eq!(star.neighbors(0), vec![1, 2, 3]);
        let full = Topology { kind: TopologyKind::FullyConnected, num_islands: 4 };
        assert_eq!(full.neighbors(2), vec![0, 1, 3]);
    }

    #[test]
    fn migrant_counts() {
        assert_eq!(MigrationPolicy::default().migrants(200), 10);
        assert_eq!(MigrationPolicy::default().migrants(50), 3);
        assert_eq!(MigrationPolicy { interval: 1, fraction: 0.07 }.migrants(100), 7);
        assert_eq!(MigrationPolicy { interval: 1, fraction: 1.0 }.migrants(9), 9);
    }

    #[test]
    fn elite_update_rules() {
        let mk = |f| Individual { genome: Genome::Assignment(vec![f as u32]), fitness: f, birth_generation: 0 };
        let incumbent = mk(100.0);
        assert_eq!(update_elite(&incumbent, [&mk(90.0)], Direction::Minimize).fitness, 90.0);
        let tie = Individual { genome: Genome::Assignment(vec![7]), ..mk(100.0) };
        assert_eq!(update_elite(&incumbent, [&tie], Direction::Minimize), incumbent);
        assert_eq!(update_elite(&incumbent, [], Direction::Minimize), incumbent);
        assert_eq!(update_elite(&incumbent, [&mk(120.0)], Direction::Maximize).fitness, 120.0);
    }

    #[test]
    fn replace_worst_keeps_size() {
        let mk = |f| Individual { genome: Genome::Assignment(vec![0]), fitness: f, birth_generation: 0 };
        let mut pop = Population::new(vec![mk(1.0), mk(5.0), mk(3.0), mk(5.0)], 4);
        replace_worst(&mut pop, vec![mk(0.5), mk(0.7)], Direction::Minimize);
        let f: Vec<f64> = pop.members.iter().map(|m| m.fitness).collect();
        assert_eq!(f, vec![1.0, 0.5, 3.0, 0.7]);
    }

    #[test]
    fn baseline_sizes_constant_and_elite_monotone() {
        let p = tsp(12, 1);
        for kind in [TopologyKind::Ring, TopologyKind::StarShape, TopologyKind::FullyConnected] {
            let mut run = BaselineRun::new(&p, baseline(kind, 4, 3, &p)).unwrap();
            for _ in 0..60 {
                run.step().unwrap();
                assert_eq!(run.archipelago.island_sizes(), vec![20; 4]);
            }
            let trace = run.run().unwrap();
            assert_eq!(trace.records.len(), 61);
            assert!(trace.best_is_monotone());
            assert!(trace.records.iter().all(|r| (0.0..=1.0).contains(&r.diversity)));
        }
    }

    #[test]
    fn baseline_rejects_bad_configs() {
        let p = tsp(6, 0);
        let mut cfg = baseline(TopologyKind::Ring, 1, 0, &p);
        assert!(matches!(BaselineRun::new(&p, cfg.clone()), Err(Error::Config(_))));
        cfg.topology.num_islands = 3;
        cfg.policy.fraction = 1.5;
        assert!(matches!(BaselineRun::new(&p, cfg.clone()), Err(Error::Config(_))));
        cfg.policy.fraction = 0.1;
        cfg.island_capacity = 1;
        assert!(matches!(BaselineRun::new(&p, cfg), Err(Error::Config(_))));
    }

    #[test]
    fn dimsp_structure() {
        for (p, seed) in [
            (tsp(15, 2), 1u64),
            (ProblemSpec::Jssp(JsspInstance::generate(4, 3, 9, &mut RngStream::new(5))), 2),
            (ProblemSpec::Qmkp(QmkpInstance::generate(14, 0.5, 2, &mut RngStream::new(6)).unwrap()), 3),
        ] {
            let cfg = dimsp(seed, &p);
            let run = DimspRun::new(&p, cfg.clone()).unwrap();
            assert_eq!(run.archipelago.islands.len(), 1);
            let (trace, epochs) = run.run_with_epochs().unwrap();
            assert_eq!(trace.records[0].num_islands, 1);
            assert_eq!(epochs.len(), 5);
            for e in &epochs {
                assert!((1..=cfg.k_max).contains(&e.island_sizes.len()), "{e:?}");
                assert!(e.island_sizes.iter().all(|&s| (2..=cfg.island_capacity).contains(&s)), "{e:?}");
                assert!(e.island_sizes.iter().sum::<usize>() <= cfg.k_max * cfg.island_capacity);
            }
            assert!(trace.best_is_monotone());
            assert_eq!(trace.top.len(), TOP_REPORTED);
            assert_eq!(trace.top[0].fitness, trace.records.last().unwrap().best_score);
        }
    }

    #[test]
    fn clones_collapse_to_one_island() {
        let p = tsp(10, 4);
        let mut run = DimspRun::new(&p, dimsp(0, &p)).unwrap();
        let clone = run.archipelago.islands[0].population.members[0].clone();
        let half = vec![clone.clone(); 15];
        let ops = run.archipelago.islands[0].ops;
        run.archipelago.islands = vec![
            Island { population: Population::new(half.clone(), 30), ops, rng: RngStream::new(1) },
            Island { population: Population::new(half, 30), ops, rng: RngStream::new(2) },
        ];
        run.centralize_and_cluster().unwrap();
        assert_eq!(run.archipelago.island_sizes(), vec![30]);
    }

    #[test]
    fn runs_are_reproducible() {
        let p = tsp(14, 9);
        let a = run_dimsp(&p, dimsp(5, &p)).unwrap();
        let b = run_dimsp(&p, dimsp(5, &p)).unwrap();
        assert_eq!(a, b);
        let c = run_baseline(&p, baseline(TopologyKind::Ring, 3, 5, &p)).unwrap();
        let d = run_baseline(&p, baseline(TopologyKind::Ring, 3, 5, &p)).unwrap();
        assert_eq!(c, d);
    }
}
