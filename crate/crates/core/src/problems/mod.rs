//! Benchmark problems: job-shop scheduling, travelling salesman and the
//! quadratic multiple knapsack, each with a parser, a fitness function and an
//! exhaustive oracle for tiny instances.

mod jssp;
mod qmkp;
mod tsp;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

pub use jssp::{JsspInstance, Operation};
pub use qmkp::QmkpInstance;
pub use tsp::TspInstance;

use crate::error::{Error, Result};
use crate::genome::{Direction, Encoding, Gene, Genome};

/// Largest number of genomes `brute_force_optimum` will enumerate.
pub const BRUTE_FORCE_LIMIT: f64 = 1e7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    Jssp,
    Tsp,
    Qmkp,
}

impl ProblemKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ProblemKind::Jssp => "jssp",
            ProblemKind::Tsp => "tsp",
            ProblemKind::Qmkp => "qmkp",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jssp" => Ok(ProblemKind::Jssp),
            "tsp" => Ok(ProblemKind::Tsp),
            "qmkp" | "qkp" => Ok(ProblemKind::Qmkp),
            other => Err(Error::Config(format!("unknown problem kind {other:?}"))),
        }
    }
}

/// Result of scoring a genome. `repaired` is set when the genome had to be
/// changed to become feasible.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub fitness: f64,
    pub repaired: Option<Genome>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ProblemSpec {
    Jssp(JsspInstance),
    Tsp(TspInstance),
    Qmkp(QmkpInstance),
}

impl ProblemSpec {
    pub fn kind(&self) -> ProblemKind {
        match self {
            ProblemSpec::Jssp(_) => ProblemKind::Jssp,
            ProblemSpec::Tsp(_) => ProblemKind::Tsp,
            ProblemSpec::Qmkp(_) => ProblemKind::Qmkp,
        }
    }

    pub fn direction(&self) -> Direction {
        match self {
            ProblemSpec::Jssp(_) | ProblemSpec::Tsp(_) => Direction::Minimize,
            ProblemSpec::Qmkp(_) => Direction::Maximize,
        }
    }

    pub fn encoding(&self) -> Encoding {
        match self {
            ProblemSpec::Jssp(i) => i.encoding(),
            ProblemSpec::Tsp(i) => i.encoding(),
            ProblemSpec::Qmkp(i) => i.encoding(),
        }
    }

    /// Score a genome the caller knows to be valid. Knapsack genomes are
    /// repaired first and the repaired copy is returned alongside.
    pub fn evaluate(&self, genome: &Genome) -> Evaluation {
        debug_assert!(self.encoding().validate(genome));
        match self {
            ProblemSpec::Jssp(i) => Evaluation { fitness: i.makespan(genome.genes()) as f64, repaired: None },
            ProblemSpec::Tsp(i) => Evaluation { fitness: i.tour_length(genome.genes()), repaired: None },
            ProblemSpec::Qmkp(i) => {
                let repaired = i.repair(genome.genes());
                debug_assert!(i.is_feasible(&repaired));
                let fitness = i.raw_profit(&repaired) as f64;
                let repaired = (repaired != genome.genes()).then(|| genome.with_genes(repaired));
                Evaluation { fitness, repaired }
            }
        }
    }

    /// Checked scoring: rejects genomes that do not fit the encoding.
    pub fn fitness(&self, genome: &Genome) -> Result<f64> {
        if !self.encoding().validate(genome) {
            return Err(Error::InvalidGenome);
        }
        Ok(self.evaluate(genome).fitness)
    }

    /// Number of genomes the exhaustive oracle would have to score.
    pub fn search_space_size(&self) -> f64 {
        match self {
            ProblemSpec::Tsp(i) => (1..i.num_cities()).map(|x| x as f64).product(),
            ProblemSpec::Jssp(i) => {
                // (J*M)! / (M!)^J, accumulated as a product of binomials
                let m = i.num_machines();
                let mut total = 1.0;
                let mut placed = 0usize;
                for _ in 0..i.num_jobs() {
                    total *= binomial(placed + m, m);
                    placed += m;
                }
                total
            }
            ProblemSpec::Qmkp(i) => ((i.num_knapsacks() + 1) as f64).powi(i.num_objects() as i32),
        }
    }

    /// Exhaustive optimum for tiny instances. Ties keep the first genome in
    /// enumeration order.
    pub fn brute_force_optimum(&self) -> Result<(f64, Genome)> {
        let size = self.search_space_size();
        if size > BRUTE_FORCE_LIMIT {
            return Err(Error::SpaceTooLarge { size, limit: BRUTE_FORCE_LIMIT });
        }
        let dir = self.direction();
        let mut best: Option<(f64, Vec<Gene>)> = None;
        let mut consider = |fitness: f64, genes: &[Gene]| match &best {
            Some((b, _)) if !dir.better(fitness, *b) => {}
            _ => best = Some((fitness, genes.to_vec())),
        };
        match self {
            ProblemSpec::Tsp(inst) => {
                let n = inst.num_cities() as Gene;
                let mut tour: Vec<Gene> = (0..n).collect();
                loop {
                    consider(inst.tour_length(&tour), &tour);
                    if tour.len() < 2 || !next_permutation(&mut tour[1..]) {
                        break;
                    }
                }
            }
            ProblemSpec::Jssp(inst) => {
                let mut seq: Vec<Gene> =
                    (0..inst.num_jobs() as Gene).flat_map(|j| std::iter::repeat_n(j, inst.num_machines())).collect();
                loop {
                    consider(inst.makespan(&seq) as f64, &seq);
                    if !next_permutation(&mut seq) {
                        break;
                    }
                }
            }
            ProblemSpec::Qmkp(inst) => {
                let labels = inst.num_knapsacks() as Gene;
                let mut assign = vec![0 as Gene; inst.num_objects()];
                loop {
                    if inst.is_feasible(&assign) {
                        consider(inst.raw_profit(&assign) as f64, &assign);
                    }
                    // odometer increment
                    let mut pos = 0;
                    while pos < assign.len() && assign[pos] == labels {
                        assign[pos] = 0;
                        pos += 1;
                    }
                    if pos == assign.len() {
                        break;
                    }
                    assign[pos] += 1;
                }
            }
        }
        let (fitness, genes) = best.expect("search space is never empty");
        let genome = match self.encoding() {
            Encoding::Permutation { .. } => Genome::Permutation(genes),
            Encoding::Assignment { .. } => Genome::Assignment(genes),
        };
        Ok((fitness, genome))
    }

    /// Short label for traces and summaries.
    pub fn name(&self) -> &str {
        match self {
            ProblemSpec::Jssp(_) => "jssp",
            ProblemSpec::Tsp(i) => i.name(),
            ProblemSpec::Qmkp(i) => i.name(),
        }
    }
}

/// Read an instance file. `knapsacks` is only used for the knapsack family.
pub fn parse_instance(path: &Path, kind: ProblemKind, knapsacks: usize) -> Result<ProblemSpec> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_instance_str(&text, kind, knapsacks).map_err(|e| match e {
        Error::Parse { line, message, .. } => Error::Parse { path: Some(path.to_path_buf()), line, message },
        other => other,
    })
}

pub fn parse_instance_str(text: &str, kind: ProblemKind, knapsacks: usize) -> Result<ProblemSpec> {
    Ok(match kind {
        ProblemKind::Jssp => ProblemSpec::Jssp(JsspInstance::parse(text)?),
        ProblemKind::Tsp => ProblemSpec::Tsp(TspInstance::parse(text)?),
        ProblemKind::Qmkp => ProblemSpec::Qmkp(QmkpInstance::parse(text, knapsacks)?),
    })
}

/// Serialize back into the file format of the problem kind.
pub fn serialize_instance(problem: &ProblemSpec) -> String {
    match problem {
        ProblemSpec::Jssp(i) => i.to_text(),
        ProblemSpec::Tsp(i) => i.to_tsplib(),
        ProblemSpec::Qmkp(i) => i.to_text(),
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Lexicographic successor; `false` once the slice is the last permutation.
/// Handles repeated elements, enumerating each distinct arrangement once.
fn next_permutation(v: &mut [Gene]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Line iterator with 1-based numbering and CRLF tolerance.
pub(crate) struct LineReader<'a> {
    lines: std::str::Split<'a, char>,
    consumed: usize,
}

impl<'a> LineReader<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Self { lines: text.split('\n'), consumed: 0 }
    }

    pub(crate) fn next_line(&mut self) -> Option<(usize, &'a str)> {
        let mut line = self.lines.next()?;
        if line.is_empty() && self.lines.clone().next().is_none() {
            // the empty tail after a final newline is not a line
            return None;
        }
        if let Some(stripped) = line.strip_suffix('\r') {
            line = stripped;
        }
        self.consumed += 1;
        Some((self.consumed, line))
    }

    pub(crate) fn line_count(&self) -> usize {
        self.consumed
    }

    /// Remaining lines must be blank.
    pub(crate) fn expect_only_blank(&mut self) -> Result<()> {
        while let Some((no, line)) = self.next_line() {
            if !line.trim().is_empty() {
                return Err(Error::parse(no, format!("unexpected content {:?}", line.trim())));
            }
        }
        Ok(())
    }
}

pub(crate) fn parse_int<T: FromStr>(token: &str, line: usize) -> Result<T> {
    token.parse().map_err(|_| Error::parse(line, format!("invalid integer {token:?}")))
}
