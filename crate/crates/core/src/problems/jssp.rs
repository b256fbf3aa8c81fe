//! Job-shop scheduling with makespan objective.
//!
//! File format (OR-library layout): the first line holds `J M`, followed by
//! `J` lines each listing `M` pairs `machine time` in the job's technological
//! order. Machines are numbered from 0. Tokens may be separated by any amount
//! of whitespace; blank lines are only accepted after the last job.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::genome::{Encoding, Gene};
use crate::rngdet::RngStream;

use super::{parse_int, LineReader};

/// `(machine, processing time)`.
pub type Operation = (usize, u64);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsspInstance {
    jobs: Vec<Vec<Operation>>,
    num_machines: usize,
}

impl JsspInstance {
    /// Every job must visit every machine exactly once with a positive time.
    pub fn new(jobs: Vec<Vec<Operation>>) -> Result<Self> {
        let num_machines = jobs.first().map(Vec::len).unwrap_or(0);
        if jobs.is_empty() || num_machines == 0 {
            return Err(Error::Config("job-shop instance needs at least one job and one machine".into()));
        }
        for (j, ops) in jobs.iter().enumerate() {
            check_job(j, ops, num_machines).map_err(Error::Config)?;
        }
        Ok(Self { jobs, num_machines })
    }

    pub fn num_jobs(&self) -> usize {
        self.jobs.len()
    }

    pub fn num_machines(&self) -> usize {
        self.num_machines
    }

    pub fn jobs(&self) -> &[Vec<Operation>] {
        &self.jobs
    }

    pub fn encoding(&self) -> Encoding {
        Encoding::Permutation { symbols: self.num_jobs(), repeats: self.num_machines }
    }

    /// Semi-active decoding: the `t`-th occurrence of job `j` starts job `j`'s
    /// `t`-th operation as early as its job predecessor and its machine allow.
    ///
    /// The caller guarantees a valid permutation with repetition.
    pub fn makespan(&self, sequence: &[Gene]) -> u64 {
        let mut next_op = vec![0usize; self.num_jobs()];
        let mut job_ready = vec![0u64; self.num_jobs()];
        let mut machine_free = vec![0u64; self.num_machines];
        let mut makespan = 0;
        for &gene in sequence {
            let j = gene as usize;
            let (machine, time) = self.jobs[j][next_op[j]];
            next_op[j] += 1;
            let end = job_ready[j].max(machine_free[machine]) + time;
            job_ready[j] = end;
            machine_free[machine] = end;
            makespan = makespan.max(end);
        }
        makespan
    }

    /// Largest machine load; a lower bound on the makespan.
    pub fn machine_bound(&self) -> u64 {
        let mut load = vec![0u64; self.num_machines];
        for ops in &self.jobs {
            for &(m, t) in ops {
                load[m] += t;
            }
        }
        load.into_iter().max().unwrap_or(0)
    }

    /// Longest job; a lower bound on the makespan.
    pub fn job_bound(&self) -> u64 {
        self.jobs.iter().map(|ops| ops.iter().map(|&(_, t)| t).sum()).max().unwrap_or(0)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = LineReader::new(text);
        let (line_no, header) = lines.next_line().ok_or_else(|| Error::parse(1, "missing `J M` header"))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::parse(line_no, format!("expected `J M`, found {} fields", tokens.len())));
        }
        let num_jobs: usize = parse_int(tokens[0], line_no)?;
        let num_machines: usize = parse_int(tokens[1], line_no)?;
        if num_jobs == 0 || num_machines == 0 {
            return Err(Error::parse(line_no, "job and machine counts must be positive"));
        }
        let mut jobs = Vec::with_capacity(num_jobs);
        for j in 0..num_jobs {
            let (line_no, line) = lines
                .next_line()
                .ok_or_else(|| Error::parse(lines.line_count() + 1, format!("missing line for job {j}")))?;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 * num_machines {
                return Err(Error::parse(
                    line_no,
                    format!("job {j}: expected {} numbers, found {}", 2 * num_machines, tokens.len()),
                ));
            }
            let ops = tokens
                .chunks(2)
                .map(|pair| Ok((parse_int(pair[0], line_no)?, parse_int(pair[1], line_no)?)))
                .collect::<Result<Vec<Operation>>>()?;
            check_job(j, &ops, num_machines).map_err(|msg| Error::parse(line_no, msg))?;
            jobs.push(ops);
        }
        lines.expect_only_blank()?;
        Ok(Self { jobs, num_machines })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.num_jobs(), self.num_machines);
        for ops in &self.jobs {
            let row: Vec<String> = ops.iter().map(|(m, t)| format!("{m} {t}")).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    /// Random instance: each job visits the machines in a shuffled order with
    /// times drawn uniformly from `1..=max_time`.
    pub fn generate(num_jobs: usize, num_machines: usize, max_time: u64, rng: &mut RngStream) -> Self {
        let jobs = (0..num_jobs)
            .map(|_| {
                let mut order: Vec<usize> = (0..num_machines).collect();
                rng.shuffle(&mut order);
                order.into_iter().map(|m| (m, 1 + rng.below(max_time as usize) as u64)).collect()
            })
            .collect();
        Self { jobs, num_machines }
    }
}

fn check_job(j: usize, ops: &[Operation], num_machines: usize) -> std::result::Result<(), String> {
    if ops.len() != num_machines {
        return Err(format!("job {j} has {} operations, expected {num_machines}", ops.len()));
    }
    let mut seen = vec![false; num_machines];
    for &(m, t) in ops {
        if m >= num_machines {
            return Err(format!("job {j}: machine {m} out of range 0..{num_machines}"));
        }
        if std::mem::replace(&mut seen[m], true) {
            return Err(format!("job {j} visits machine {m} twice"));
        }
        if t == 0 {
            return Err(format!("job {j}: processing time must be positive"));
        }
    }
    Ok(())
}
