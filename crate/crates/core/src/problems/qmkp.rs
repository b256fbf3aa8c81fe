//! Quadratic multiple knapsack.
//!
//! Instances are read from single-knapsack QKP files in the Billionnet–Soutif
//! layout and turned into a `K`-knapsack problem by splitting the declared
//! capacity evenly (integer division) across the knapsacks:
//!
//! ```text
//! <name>
//! <n>
//! <p_0 ... p_{n-1}>                      linear profits
//! <p_01 p_02 ... p_0,n-1>                upper triangle of the pair profits,
//! ...                                    one row per object, n-1 rows
//! <p_n-2,n-1>
//! <blank line>
//! 0                                      constraint type (<=)
//! <capacity>
//! <w_0 ... w_{n-1}>                      weights
//! ```
//!
//! A genome assigns each object a label in `0..=K`, `0` meaning unpacked.
//! Overfull knapsacks are repaired greedily before scoring and the repaired
//! assignment replaces the genome.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::genome::{Encoding, Gene};
use crate::rngdet::RngStream;

use super::{parse_int, LineReader};

#[derive(Clone, Debug, PartialEq)]
pub struct QmkpInstance {
    name: String,
    profits: Vec<i64>,
    /// Full symmetric `n × n` pair profits with a zero diagonal.
    pair: Vec<i64>,
    weights: Vec<i64>,
    declared_capacity: i64,
    capacities: Vec<i64>,
}

impl QmkpInstance {
    /// `pair_upper[i]` lists `p_ij` for `j > i`.
    pub fn new(
        name: impl Into<String>,
        profits: Vec<i64>,
        pair_upper: &[Vec<i64>],
        weights: Vec<i64>,
        declared_capacity: i64,
        knapsacks: usize,
    ) -> Result<Self> {
        let n = profits.len();
        if n == 0 || weights.len() != n {
            return Err(Error::Config("knapsack instance needs n > 0 profits and n weights".into()));
        }
        if knapsacks == 0 {
            return Err(Error::Config("knapsacks must be positive".into()));
        }
        if weights.iter().any(|&w| w <= 0) || profits.iter().any(|&p| p < 0) {
            return Err(Error::Config("weights must be positive and profits non-negative".into()));
        }
        let per_knapsack = declared_capacity / knapsacks as i64;
        if per_knapsack <= 0 {
            return Err(Error::Config(format!(
                "capacity {declared_capacity} split across {knapsacks} knapsacks leaves none"
            )));
        }
        let mut pair = vec![0i64; n * n];
        for (i, row) in pair_upper.iter().enumerate() {
            if row.len() != n - 1 - i {
                return Err(Error::Config(format!("pair-profit row {i} has {} entries", row.len())));
            }
            for (off, &p) in row.iter().enumerate() {
                if p < 0 {
                    return Err(Error::Config("pair profits must be non-negative".into()));
                }
                let j = i + 1 + off;
                pair[i * n + j] = p;
                pair[j * n + i] = p;
            }
        }
        Ok(Self {
            name: name.into(),
            profits,
            pair,
            weights,
            declared_capacity,
            capacities: vec![per_knapsack; knapsacks],
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_objects(&self) -> usize {
        self.profits.len()
    }

    pub fn num_knapsacks(&self) -> usize {
        self.capacities.len()
    }

    pub fn capacities(&self) -> &[i64] {
        &self.capacities
    }

    pub fn declared_capacity(&self) -> i64 {
        self.declared_capacity
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn profits(&self) -> &[i64] {
        &self.profits
    }

    #[inline]
    pub fn pair_profit(&self, i: usize, j: usize) -> i64 {
        self.pair[i * self.num_objects() + j]
    }

    pub fn upper_triangle(&self) -> Vec<Vec<i64>> {
        let n = self.num_objects();
        (0..n.saturating_sub(1)).map(|i| ((i + 1)..n).map(|j| self.pair_profit(i, j)).collect()).collect()
    }

    pub fn encoding(&self) -> Encoding {
        Encoding::Assignment { slots: self.num_objects(), labels: self.num_knapsacks() as u32 }
    }

    fn members(&self, assignment: &[Gene]) -> Vec<Vec<usize>> {
        let mut members = vec![Vec::new(); self.num_knapsacks()];
        for (i, &label) in assignment.iter().enumerate() {
            if label > 0 {
                members[label as usize - 1].push(i);
            }
        }
        members
    }

    pub fn is_feasible(&self, assignment: &[Gene]) -> bool {
        self.members(assignment)
            .iter()
            .zip(&self.capacities)
            .all(|(m, &cap)| m.iter().map(|&i| self.weights[i]).sum::<i64>() <= cap)
    }

    /// Objective without repair.
    pub fn raw_profit(&self, assignment: &[Gene]) -> i64 {
        self.members(assignment)
            .iter()
            .map(|m| {
                let mut total = 0;
                for (a, &i) in m.iter().enumerate() {
                    total += self.profits[i];
                    for &j in &m[a + 1..] {
                        total += self.pair_profit(i, j);
                    }
                }
                total
            })
            .sum()
    }

    /// Greedy repair: while a knapsack is over capacity (lowest index first),
    /// unpack its object with the smallest `(p_i + sum_j p_ij) / w_i`, the sum
    /// running over the objects still in that knapsack; ties go to the lower
    /// object index.
    pub fn repair(&self, assignment: &[Gene]) -> Vec<Gene> {
        let mut repaired = assignment.to_vec();
        for (k, mut members) in self.members(assignment).into_iter().enumerate() {
            let mut load: i64 = members.iter().map(|&i| self.weights[i]).sum();
            if load <= self.capacities[k] {
                continue;
            }
            let mut contrib: Vec<i64> = members
                .iter()
                .map(|&i| self.profits[i] + members.iter().map(|&j| self.pair_profit(i, j)).sum::<i64>())
                .collect();
            while load > self.capacities[k] {
                let mut worst = 0;
                for pos in 1..members.len() {
                    // a/wa < b/wb  <=>  a*wb < b*wa for positive weights
                    let lhs = contrib[pos] as i128 * self.weights[members[worst]] as i128;
                    let rhs = contrib[worst] as i128 * self.weights[members[pos]] as i128;
                    if lhs < rhs {
                        worst = pos;
                    }
                }
                let removed = members.remove(worst);
                contrib.remove(worst);
                load -= self.weights[removed];
                repaired[removed] = 0;
                for (pos, &i) in members.iter().enumerate() {
                    contrib[pos] -= self.pair_profit(i, removed);
                }
            }
        }
        repaired
    }

    pub fn parse(text: &str, knapsacks: usize) -> Result<Self> {
        let mut lines = LineReader::new(text);
        let mut next = |what: &str| {
            let count = lines.line_count();
            lines.next_line().ok_or_else(|| Error::parse(count + 1, format!("unexpected end of file, expected {what}")))
        };
        let (line_no, name) = next("instance name")?;
        let name = name.trim();
        if name.is_empty() || name.split_whitespace().count() != 1 {
            return Err(Error::parse(line_no, "expected a single-token instance name"));
        }
        let name = name.to_string();
        let (line_no, n_line) = next("object count")?;
        let n: usize = single_int(n_line, line_no)?;
        if n == 0 {
            return Err(Error::parse(line_no, "object count must be positive"));
        }
        let (line_no, line) = next("linear profits")?;
        let profits = int_row(line, line_no, n, "linear profits")?;
        no_negative(&profits, line_no)?;
        let mut upper = Vec::with_capacity(n.saturating_sub(1));
        for i in 0..n.saturating_sub(1) {
            let (line_no, line) = next("pair-profit row")?;
            let row = int_row(line, line_no, n - 1 - i, &format!("pair-profit row {i}"))?;
            no_negative(&row, line_no)?;
            upper.push(row);
        }
        let (line_no, line) = next("blank separator line")?;
        if !line.trim().is_empty() {
            return Err(Error::parse(line_no, "expected a blank line after the pair profits"));
        }
        let (line_no, line) = next("constraint type")?;
        let ctype: i64 = single_int(line, line_no)?;
        if ctype != 0 {
            return Err(Error::parse(line_no, format!("constraint type must be 0, found {ctype}")));
        }
        let (cap_line, line) = next("capacity")?;
        let capacity: i64 = single_int(line, cap_line)?;
        let (w_line, line) = next("weights")?;
        let weights = int_row(line, w_line, n, "weights")?;
        lines.expect_only_blank()?;

        if weights.iter().any(|&w| w <= 0) {
            return Err(Error::parse(w_line, "weights must be positive"));
        }
        Self::new(name, profits, &upper, weights, capacity, knapsacks).map_err(|e| match e {
            Error::Config(msg) => Error::parse(cap_line, msg),
            other => other,
        })
    }

    pub fn to_text(&self) -> String {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.name);
        let _ = writeln!(out, "{}", self.num_objects());
        let _ = writeln!(out, "{}", join(&self.profits));
        for row in self.upper_triangle() {
            let _ = writeln!(out, "{}", join(&row));
        }
        out.push('\n');
        out.push_str("0\n");
        let _ = writeln!(out, "{}", self.declared_capacity);
        let _ = writeln!(out, "{}", join(&self.weights));
        out
    }

    /// Random QKP in the classic generator style: each linear and pair profit
    /// is non-zero with probability `density` and then uniform in `1..=100`,
    /// weights are uniform in `1..=50`, and the capacity is uniform between
    /// 50 and the total weight.
    pub fn generate(num_objects: usize, density: f64, knapsacks: usize, rng: &mut RngStream) -> Result<Self> {
        if !(0.0..=1.0).contains(&density) {
            return Err(Error::Config(format!("density {density} outside [0, 1]")));
        }
        let coeff = |rng: &mut RngStream| if rng.chance(density) { 1 + rng.below(100) as i64 } else { 0 };
        let profits: Vec<i64> = (0..num_objects).map(|_| coeff(rng)).collect();
        let upper: Vec<Vec<i64>> = (0..num_objects.saturating_sub(1))
            .map(|i| (0..num_objects - 1 - i).map(|_| coeff(rng)).collect())
            .collect();
        let weights: Vec<i64> = (0..num_objects).map(|_| 1 + rng.below(50) as i64).collect();
        let total: i64 = weights.iter().sum();
        let low = 50.min(total);
        let capacity = (low + rng.below((total - low) as usize + 1) as i64).max(knapsacks as i64);
        let name = format!("r_{}_{}", num_objects, (density * 100.0).round() as i64);
        Self::new(name, profits, &upper, weights, capacity, knapsacks)
    }
}

fn single_int<T: std::str::FromStr>(line: &str, line_no: usize) -> Result<T> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    match tokens.as_slice() {
        [tok] => parse_int(tok, line_no),
        _ => Err(Error::parse(line_no, format!("expected one integer, found {} fields", tokens.len()))),
    }
}

fn no_negative(row: &[i64], line_no: usize) -> Result<()> {
    match row.iter().find(|&&p| p < 0) {
        Some(p) => Err(Error::parse(line_no, format!("negative profit {p}"))),
        None => Ok(()),
    }
}

fn int_row(line: &str, line_no: usize, expected: usize, what: &str) -> Result<Vec<i64>> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != expected {
        return Err(Error::parse(line_no, format!("{what}: expected {expected} integers, found {}", tokens.len())));
    }
    tokens.iter().map(|t| parse_int(t, line_no)).collect()
}
