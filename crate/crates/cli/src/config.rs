//! JSON run configuration.
//!
//! Every key is optional except `problem`; missing keys take the default
//! experiment settings (10 islands, capacity 200, 2000 generations, ...).
//! Keys that only apply to one kind of model are rejected when no model of
//! that kind is being run.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use dimsp::engine::{BaselineConfig, DimspConfig, MigrationPolicy, Model, Topology};
use dimsp::problems::{parse_instance, JsspInstance, ProblemKind, ProblemSpec, QmkpInstance, TspInstance};
use dimsp::{Crossover, Encoding, Mutation, OperatorSet, RngStream};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const DEFAULT_NUM_ISLANDS: usize = 10;
pub const DEFAULT_K_MAX: usize = 10;
pub const DEFAULT_CAPACITY: usize = 200;
pub const DEFAULT_GENERATIONS: u64 = 2000;
pub const DEFAULT_INTERVAL: u64 = 50;
pub const DEFAULT_FRACTION: f64 = 0.05;
pub const DEFAULT_EPOCH_INTERVAL: u64 = 50;
pub const DEFAULT_KNAPSACKS: usize = 3;
pub const DEFAULT_SEEDS: u64 = 10;

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub problem: ProblemConfig,
    pub model: Option<String>,
    pub models: Option<Vec<String>>,
    pub num_islands: Option<usize>,
    pub k_max: Option<usize>,
    pub island_capacity: Option<usize>,
    pub max_generations: Option<u64>,
    pub interval: Option<u64>,
    pub fraction: Option<f64>,
    pub epoch_interval: Option<u64>,
    pub crossover_rate: Option<f64>,
    pub mutation_rate: Option<f64>,
    pub tournament_size: Option<usize>,
    pub operators: Option<Vec<OperatorConfig>>,
    pub seeds: Option<Vec<u64>>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    pub kind: String,
    pub instance: Option<PathBuf>,
    pub generate: Option<GeneratorConfig>,
    pub knapsacks: Option<usize>,
}

/// Synthetic instance: `size` is cities (TSP), jobs (JSSP) or objects (QKP).
#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorConfig {
    pub size: usize,
    #[serde(default)]
    pub seed: u64,
    pub machines: Option<usize>,
    pub max_time: Option<u64>,
    pub extent: Option<u32>,
    pub density: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorConfig {
    pub crossover: Option<String>,
    pub mutation: Option<String>,
    pub crossover_rate: Option<f64>,
    pub mutation_rate: Option<f64>,
    pub tournament_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum InstanceSource {
    File(PathBuf),
    Generated(GeneratorSpec),
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub size: usize,
    pub seed: u64,
    pub machines: usize,
    pub max_time: u64,
    pub extent: u32,
    pub density: f64,
}

impl GeneratorSpec {
    pub fn build(&self, kind: ProblemKind, knapsacks: usize) -> Result<ProblemSpec, CliError> {
        let mut rng = RngStream::new(self.seed);
        Ok(match kind {
            ProblemKind::Tsp => ProblemSpec::Tsp(TspInstance::generate(self.size, self.extent, &mut rng)),
            ProblemKind::Jssp => {
                ProblemSpec::Jssp(JsspInstance::generate(self.size, self.machines, self.max_time, &mut rng))
            }
            ProblemKind::Qmkp => {
                ProblemSpec::Qmkp(QmkpInstance::generate(self.size, self.density, knapsacks, &mut rng)?)
            }
        })
    }
}

/// A validated configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub kind: ProblemKind,
    pub source: InstanceSource,
    pub knapsacks: usize,
    pub models: Vec<Model>,
    pub num_islands: usize,
    pub k_max: usize,
    pub island_capacity: usize,
    pub max_generations: u64,
    pub interval: u64,
    pub fraction: f64,
    pub epoch_interval: u64,
    pub operators: Vec<OperatorConfig>,
    pub crossover_rate: f64,
    pub mutation_rate: f64,
    pub tournament_size: usize,
    pub seeds: Vec<u64>,
}

fn invalid(key: &str, message: impl std::fmt::Display) -> CliError {
    CliError::Config(format!("{key}: {message}"))
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let raw: RawConfig =
            serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::from_raw(raw, path.parent())
    }

    /// Validate `raw`; relative instance paths are resolved against `base`.
    pub fn from_raw(raw: RawConfig, base: Option<&Path>) -> Result<Self, CliError> {
        let kind: ProblemKind = raw
            .problem
            .kind
            .parse()
            .map_err(|_| invalid("problem.kind", format!("unknown problem {:?}", raw.problem.kind)))?;

        let source = match (&raw.problem.instance, &raw.problem.generate) {
            (Some(path), None) => {
                let resolved = match base {
                    Some(dir) if path.is_relative() => dir.join(path),
                    _ => path.clone(),
                };
                InstanceSource::File(resolved)
            }
            (None, Some(g)) => InstanceSource::Generated(generator(kind, g)?),
            _ => return Err(invalid("problem", "give exactly one of `instance` or `generate`")),
        };
        if raw.problem.knapsacks.is_some() && kind != ProblemKind::Qmkp {
            return Err(invalid("problem.knapsacks", "only applies to qmkp"));
        }
        let knapsacks = raw.problem.knapsacks.unwrap_or(DEFAULT_KNAPSACKS);
        if knapsacks == 0 {
            return Err(invalid("problem.knapsacks", "must be at least 1"));
        }

        let names: Vec<String> = match (&raw.model, &raw.models) {
            (Some(m), None) => vec![m.clone()],
            (None, Some(ms)) => ms.clone(),
            (None, None) => return Err(invalid("model", "missing")),
            (Some(_), Some(_)) => return Err(invalid("models", "give either `model` or `models`, not both")),
        };
        let mut models = Vec::new();
        for name in &names {
            let m: Model = name.parse().map_err(|_| invalid("model", format!("unknown model {name:?}")))?;
            if models.contains(&m) {
                return Err(invalid("models", format!("{name} listed twice")));
            }
            models.push(m);
        }
        let any_dimsp = models.contains(&Model::Dimsp);
        let any_baseline = models.iter().any(|m| *m != Model::Dimsp);
        for (key, set) in [
            ("num_islands", raw.num_islands.is_some()),
            ("interval", raw.interval.is_some()),
            ("fraction", raw.fraction.is_some()),
        ] {
            if set && !any_baseline {
                return Err(invalid(key, "only applies to ring, star and fully_connected"));
            }
        }
        for (key, set) in [("k_max", raw.k_max.is_some()), ("epoch_interval", raw.epoch_interval.is_some())] {
            if set && !any_dimsp {
                return Err(invalid(key, "only applies to dimsp"));
            }
        }

        let config = RunConfig {
            kind,
            source,
            knapsacks,
            models,
            num_islands: raw.num_islands.unwrap_or(DEFAULT_NUM_ISLANDS),
            k_max: raw.k_max.unwrap_or(DEFAULT_K_MAX),
            island_capacity: raw.island_capacity.unwrap_or(DEFAULT_CAPACITY),
            max_generations: raw.max_generations.unwrap_or(DEFAULT_GENERATIONS),
            interval: raw.interval.unwrap_or(DEFAULT_INTERVAL),
            fraction: raw.fraction.unwrap_or(DEFAULT_FRACTION),
            epoch_interval: raw.epoch_interval.unwrap_or(DEFAULT_EPOCH_INTERVAL),
            operators: raw.operators.unwrap_or_else(|| vec![OperatorConfig::default()]),
            crossover_rate: raw.crossover_rate.unwrap_or(OperatorSet::DEFAULT_CROSSOVER_RATE),
            mutation_rate: raw.mutation_rate.unwrap_or(OperatorSet::DEFAULT_MUTATION_RATE),
            tournament_size: raw.tournament_size.unwrap_or(OperatorSet::DEFAULT_TOURNAMENT),
            seeds: raw.seeds.unwrap_or_else(|| (0..DEFAULT_SEEDS).collect()),
        };
        config.validate()?;
        Ok(config)
    }

    /// Range checks; also run after command-line overrides.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.island_capacity < 2 {
            return Err(invalid("island_capacity", format!("{} is below 2", self.island_capacity)));
        }
        if self.max_generations == 0 {
            return Err(invalid("max_generations", "must be positive"));
        }
        if self.interval == 0 {
            return Err(invalid("interval", "must be positive"));
        }
        if !(self.fraction > 0.0 && self.fraction <= 1.0) {
            return Err(invalid("fraction", format!("{} is outside (0, 1]", self.fraction)));
        }
        if self.epoch_interval == 0 {
            return Err(invalid("epoch_interval", "must be positive"));
        }
        if self.k_max == 0 {
            return Err(invalid("k_max", "must be positive"));
        }
        let needs_two = self.models.iter().any(|m| matches!(m, Model::Ring | Model::Star));
        if self.num_islands == 0 || (needs_two && self.num_islands < 2) {
            return Err(invalid("num_islands", format!("{} is too small for the chosen topology", self.num_islands)));
        }
        for (key, rate) in [("crossover_rate", self.crossover_rate), ("mutation_rate", self.mutation_rate)] {
            if !(0.0..=1.0).contains(&rate) {
                return Err(invalid(key, format!("{rate} is outside [0, 1]")));
            }
        }
        if !(2..=7).contains(&self.tournament_size) {
            return Err(invalid("tournament_size", format!("{} is outside 2..=7", self.tournament_size)));
        }
        if self.operators.is_empty() {
            return Err(invalid("operators", "pool is empty"));
        }
        if self.seeds.is_empty() {
            return Err(invalid("seeds", "no seeds given"));
        }
        let distinct: BTreeSet<u64> = self.seeds.iter().copied().collect();
        if distinct.len() != self.seeds.len() {
            return Err(invalid("seeds", "contains duplicates"));
        }
        Ok(())
    }

    pub fn load_problem(&self) -> Result<ProblemSpec, CliError> {
        match &self.source {
            InstanceSource::File(path) => Ok(parse_instance(path, self.kind, self.knapsacks)?),
            InstanceSource::Generated(g) => g.build(self.kind, self.knapsacks),
        }
    }

    /// Operator pool with per-encoding defaults filled in.
    pub fn pool(&self, enc: Encoding) -> Result<Vec<OperatorSet>, CliError> {
        self.operators
            .iter()
            .enumerate()
            .map(|(i, o)| {
                let key = |field: &str| format!("operators[{i}].{field}");
                let mut set = OperatorSet::default_for(enc);
                if let Some(name) = &o.crossover {
                    set.crossover = name.parse::<Crossover>().map_err(|e| invalid(&key("crossover"), e))?;
                }
                if let Some(name) = &o.mutation {
                    set.mutation = name.parse::<Mutation>().map_err(|e| invalid(&key("mutation"), e))?;
                }
                set.crossover_rate = o.crossover_rate.unwrap_or(self.crossover_rate);
                set.mutation_rate = o.mutation_rate.unwrap_or(self.mutation_rate);
                set.tournament_size = o.tournament_size.unwrap_or(self.tournament_size);
                set.check(enc).map_err(|e| invalid(&format!("operators[{i}]"), e))?;
                Ok(set)
            })
            .collect()
    }

    pub fn baseline(&self, model: Model, pool: &[OperatorSet], seed: u64) -> Option<BaselineConfig> {
        model.topology().map(|kind| BaselineConfig {
            topology: Topology { kind, num_islands: self.num_islands },
            policy: MigrationPolicy { interval: self.interval, fraction: self.fraction },
            ops: pool[0],
            island_capacity: self.island_capacity,
            max_generations: self.max_generations,
            seed,
        })
    }

    pub fn dimsp(&self, pool: &[OperatorSet], seed: u64) -> DimspConfig {
        DimspConfig {
            pool: pool.to_vec(),
            island_capacity: self.island_capacity,
            k_max: self.k_max,
            epoch_interval: self.epoch_interval,
            max_generations: self.max_generations,
            seed,
        }
    }
}

fn generator(kind: ProblemKind, g: &GeneratorConfig) -> Result<GeneratorSpec, CliError> {
    let spec = GeneratorSpec {
        size: g.size,
        seed: g.seed,
        machines: g.machines.unwrap_or(5),
        max_time: g.max_time.unwrap_or(99),
        extent: g.extent.unwrap_or(1000),
        density: g.density.unwrap_or(0.5),
    };
    let only = |key: &str, set: bool, for_kind: ProblemKind| {
        if set && kind != for_kind {
            Err(invalid(&format!("problem.generate.{key}"), format!("only applies to {for_kind}")))
        } else {
            Ok(())
        }
    };
    only("machines", g.machines.is_some(), ProblemKind::Jssp)?;
    only("max_time", g.max_time.is_some(), ProblemKind::Jssp)?;
    only("extent", g.extent.is_some(), ProblemKind::Tsp)?;
    only("density", g.density.is_some(), ProblemKind::Qmkp)?;
    if spec.size == 0 {
        return Err(invalid("problem.generate.size", "must be positive"));
    }
    if spec.machines == 0 || spec.max_time == 0 || spec.extent == 0 {
        return Err(invalid("problem.generate", "machines, max_time and extent must be positive"));
    }
    if !(spec.density > 0.0 && spec.density <= 1.0) {
        return Err(invalid("problem.generate.density", format!("{} is outside (0, 1]", spec.density)));
    }
    Ok(spec)
}
