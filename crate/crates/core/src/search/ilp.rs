//! Binary integer programs and an exact branch-and-bound solver for small ones.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::SearchConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Cmp {
    Le,
    Eq,
    Ge,
}

impl fmt::Display for Cmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cmp::Le => "<=",
            Cmp::Eq => "=",
            Cmp::Ge => ">=",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub name: String,
    /// (variable index, coefficient)
    pub terms: Vec<(usize, i64)>,
    pub cmp: Cmp,
    pub rhs: i64,
}

impl Constraint {
    fn satisfied(&self, x: &[bool]) -> bool {
        let lhs: i64 = self.terms.iter().filter(|&&(v, _)| x[v]).map(|&(_, a)| a).sum();
        match self.cmp {
            Cmp::Le => lhs <= self.rhs,
            Cmp::Eq => lhs == self.rhs,
            Cmp::Ge => lhs >= self.rhs,
        }
    }
}

/// A maximisation problem over named binary variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IlpModel {
    names: Vec<String>,
    #[serde(skip)]
    index: HashMap<String, usize>,
    constraints: Vec<Constraint>,
    objective: Vec<(usize, i64)>,
}

impl IlpModel {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_var(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(Error::Model(format!("bad variable name {name:?}")));
        }
        if self.index.contains_key(&name) {
            return Err(Error::Model(format!("variable {name} declared twice")));
        }
        let v = self.names.len();
        self.index.insert(name.clone(), v);
        self.names.push(name);
        Ok(v)
    }

    pub fn var(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn var_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn objective(&self) -> &[(usize, i64)] {
        &self.objective
    }

    fn check_terms(&self, terms: &[(usize, i64)]) -> Result<()> {
        match terms.iter().find(|&&(v, _)| v >= self.names.len()) {
            Some(&(v, _)) => Err(Error::Model(format!("undeclared variable index {v}"))),
            None => Ok(()),
        }
    }

    /// Repeated variables are merged and zero coefficients dropped.
    fn normalise(terms: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
        let mut t = terms;
        t.sort_unstable_by_key(|&(v, _)| v);
        let mut out: Vec<(usize, i64)> = Vec::with_capacity(t.len());
        for (v, a) in t {
            match out.last_mut() {
                Some((w, b)) if *w == v => *b += a,
                _ => out.push((v, a)),
            }
        }
        out.retain(|&(_, a)| a != 0);
        out
    }

    pub fn add_constraint(&mut self, name: impl Into<String>, terms: Vec<(usize, i64)>, cmp: Cmp, rhs: i64) -> Result<()> {
        self.check_terms(&terms)?;
        let name = name.into();
        if name.is_empty() || name.contains(char::is_whitespace) || name.contains(':') {
            return Err(Error::Model(format!("bad constraint name {name:?}")));
        }
        self.constraints.push(Constraint { name, terms: Self::normalise(terms), cmp, rhs });
        Ok(())
    }

    pub fn set_objective(&mut self, terms: Vec<(usize, i64)>) -> Result<()> {
        self.check_terms(&terms)?;
        self.objective = Self::normalise(terms);
        Ok(())
    }

    pub fn objective_value(&self, x: &[bool]) -> i64 {
        self.objective.iter().filter(|&&(v, _)| x[v]).map(|&(_, c)| c).sum()
    }

    pub fn is_feasible(&self, x: &[bool]) -> bool {
        x.len() == self.names.len() && self.constraints.iter().all(|c| c.satisfied(x))
    }

    /// Rebuilds the name index after deserialisation.
    pub fn reindex(&mut self) {
        self.index = self.names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveStatus {
    Optimal,
    /// Budget ran out with an incumbent that is not proven optimal.
    Feasible,
    Infeasible,
    /// Budget ran out before any feasible point was found.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IlpSolution {
    pub status: SolveStatus,
    pub values: Option<Vec<bool>>,
    pub objective: Option<i64>,
    pub nodes: u64,
}

impl IlpSolution {
    pub fn proven_optimal(&self) -> bool {
        self.status == SolveStatus::Optimal
    }
}

const FREE: i8 = -1;

struct Propagator<'a> {
    model: &'a IlpModel,
    occurs: Vec<Vec<usize>>,
}

impl<'a> Propagator<'a> {
    fn new(model: &'a IlpModel) -> Self {
        let mut occurs = vec![Vec::new(); model.num_vars()];
        for (ci, c) in model.constraints.iter().enumerate() {
            for &(v, _) in &c.terms {
                occurs[v].push(ci);
            }
        }
        Propagator { model, occurs }
    }

    /// Fixes variables forced by activity bounds; false on a proven conflict.
    fn propagate(&self, x: &mut [i8], mut queue: Vec<usize>) -> bool {
        let m = self.model.constraints.len();
        let mut queued = vec![false; m];
        for &c in &queue {
            queued[c] = true;
        }
        while let Some(ci) = queue.pop() {
            queued[ci] = false;
            let c = &self.model.constraints[ci];
            let (mut lo, mut hi) = (0i64, 0i64);
            for &(v, a) in &c.terms {
                match x[v] {
                    1 => {
                        lo += a;
                        hi += a;
                    }
                    0 => {}
                    _ if a > 0 => hi += a,
                    _ => lo += a,
                }
            }
            let upper = matches!(c.cmp, Cmp::Le | Cmp::Eq);
            let lower = matches!(c.cmp, Cmp::Ge | Cmp::Eq);
            if (upper && lo > c.rhs) || (lower && hi < c.rhs) {
                return false;
            }
            for &(v, a) in &c.terms {
                if x[v] != FREE {
                    continue;
                }
                // Setting v to the value that raises lo (or lowers hi) by |a| must stay within rhs.
                let forced = if upper && lo + a.abs() > c.rhs {
                    Some(if a > 0 { 0 } else { 1 })
                } else if lower && hi - a.abs() < c.rhs {
                    Some(if a > 0 { 1 } else { 0 })
                } else {
                    None
                };
                if let Some(val) = forced {
                    x[v] = val;
                    if val == 1 {
                        lo += a.max(0);
                        hi += a.min(0);
                    } else {
                        lo -= a.min(0);
                        hi -= a.max(0);
                    }
                    for &other in &self.occurs[v] {
                        if !queued[other] {
                            queued[other] = true;
                            queue.push(other);
                        }
                    }
                }
            }
        }
        true
    }

    fn all(&self) -> Vec<usize> {
        (0..self.model.constraints.len()).collect()
    }

    fn branch_var(&self, x: &[i8]) -> Option<usize> {
        (0..x.len()).filter(|&v| x[v] == FREE).max_by_key(|&v| (self.occurs[v].len(), std::cmp::Reverse(v)))
    }
}

struct Node {
    bound: i64,
    seq: u64,
    x: Vec<i8>,
}

impl PartialEq for Node {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Node {}
impl PartialOrd for Node {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Node {
    fn cmp(&self, o: &Self) -> Ordering {
        self.bound.cmp(&o.bound).then(o.seq.cmp(&self.seq))
    }
}

fn bound(model: &IlpModel, x: &[i8]) -> i64 {
    model
        .objective
        .iter()
        .map(|&(v, c)| match x[v] {
            1 => c,
            0 => 0,
            _ => c.max(0),
        })
        .sum()
}

fn greedy_completion(model: &IlpModel, x: &[i8]) -> Vec<bool> {
    let mut gain = vec![0i64; x.len()];
    for &(v, c) in &model.objective {
        gain[v] = c;
    }
    x.iter().zip(&gain).map(|(&s, &g)| if s == FREE { g > 0 } else { s == 1 }).collect()
}

/// Best-first branch and bound. Deterministic: the seed is not consulted.
pub fn solve_ilp(model: &IlpModel, cfg: &SearchConfig) -> IlpSolution {
    let start = Instant::now();
    let prop = Propagator::new(model);
    let mut root = vec![FREE; model.num_vars()];
    if !prop.propagate(&mut root, prop.all()) {
        return IlpSolution { status: SolveStatus::Infeasible, values: None, objective: None, nodes: 1 };
    }
    let mut heap = BinaryHeap::new();
    let mut seq = 0u64;
    heap.push(Node { bound: bound(model, &root), seq, x: root });
    let mut best: Option<(i64, Vec<bool>)> = None;
    let mut nodes = 0u64;
    let mut exhausted = false;
    while let Some(node) = heap.pop() {
        if best.as_ref().is_some_and(|(b, _)| node.bound <= *b) {
            break;
        }
        if nodes >= cfg.node_budget || start.elapsed() > cfg.time_budget {
            exhausted = true;
            break;
        }
        nodes += 1;
        let candidate = greedy_completion(model, &node.x);
        if model.is_feasible(&candidate) {
            // The completion attains this node's bound, so the subtree is solved.
            let val = model.objective_value(&candidate);
            if best.as_ref().is_none_or(|(b, _)| val > *b) {
                best = Some((val, candidate));
            }
            continue;
        }
        let Some(v) = prop.branch_var(&node.x) else { continue };
        for val in [1, 0] {
            let mut x = node.x.clone();
            x[v] = val;
            if prop.propagate(&mut x, prop.occurs[v].clone()) {
                let b = bound(model, &x);
                if best.as_ref().is_none_or(|(inc, _)| b > *inc) {
                    seq += 1;
                    heap.push(Node { bound: b, seq, x });
                }
            }
        }
    }
    let status = match (&best, exhausted) {
        (Some(_), false) => SolveStatus::Optimal,
        (Some(_), true) => SolveStatus::Feasible,
        (None, false) => SolveStatus::Infeasible,
        (None, true) => SolveStatus::Unknown,
    };
    let (objective, values) = best.map_or((None, None), |(o, v)| (Some(o), Some(v)));
    IlpSolution { status, values, objective, nodes }
}

/// Every feasible assignment, in lexicographic order with 1 before 0, stopping after `limit`.
pub fn enumerate_feasible(model: &IlpModel, limit: usize) -> Vec<Vec<bool>> {
    let prop = Propagator::new(model);
    let mut out = Vec::new();
    let mut root = vec![FREE; model.num_vars()];
    if prop.propagate(&mut root, prop.all()) {
        enumerate_rec(model, &prop, root, 0, limit, &mut out);
    }
    out
}

fn enumerate_rec(model: &IlpModel, prop: &Propagator<'_>, x: Vec<i8>, from: usize, limit: usize, out: &mut Vec<Vec<bool>>) {
    if out.len() >= limit {
        return;
    }
    let Some(v) = (from..x.len()).find(|&v| x[v] == FREE) else {
        let values: Vec<bool> = x.iter().map(|&s| s == 1).collect();
        if model.is_feasible(&values) {
            out.push(values);
        }
        return;
    };
    for val in [1, 0] {
        let mut y = x.clone();
        y[v] = val;
        if prop.propagate(&mut y, prop.occurs[v].clone()) {
            enumerate_rec(model, prop, y, v + 1, limit, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(m: &mut IlpModel, k: usize) -> Vec<usize> {
        (0..k).map(|i| m.add_var(format!("x{i}")).unwrap()).collect()
    }

    #[test]
    fn unconstrained_sum() {
        let mut m = IlpModel::new();
        let v = vars(&mut m, 3);
        m.set_objective(v.iter().map(|&v| (v, 1)).collect()).unwrap();
        let s = solve_ilp(&m, &SearchConfig::default());
        assert_eq!(s.status, SolveStatus::Optimal);
        assert_eq!(s.objective, Some(3));
    }

    #[test]
    fn contradiction_is_infeasible() {
        let mut m = IlpModel::new();
        let x = m.add_var("x").unwrap();
        m.add_constraint("zero", vec![(x, 1)], Cmp::Eq, 0).unwrap();
        m.add_constraint("one", vec![(x, 1)], Cmp::Eq, 1).unwrap();
        assert_eq!(solve_ilp(&m, &SearchConfig::default()).status, SolveStatus::Infeasible);
        assert!(enumerate_feasible(&m, usize::MAX).is_empty());
    }

    #[test]
    fn knapsack() {
        let mut m = IlpModel::new();
        let v = vars(&mut m, 4);
        let w = [5, 4, 3, 2];
        let p = [10, 8, 5, 3];
        m.add_constraint("cap", v.iter().zip(w).map(|(&v, w)| (v, w)).collect(), Cmp::Le, 9).unwrap();
        m.set_objective(v.iter().zip(p).map(|(&v, p)| (v, p)).collect()).unwrap();
        let s = solve_ilp(&m, &SearchConfig::default());
        assert_eq!(s.objective, Some(18));
    }

    #[test]
    fn rejects_undeclared_and_duplicate() {
        let mut m = IlpModel::new();
        m.add_var("x").unwrap();
        assert!(m.add_var("x").is_err());
        assert!(m.add_constraint("c", vec![(3, 1)], Cmp::Le, 0).is_err());
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let mut m = IlpModel::new();
        let v = vars(&mut m, 12);
        let terms: Vec<_> = v.iter().enumerate().map(|(i, &v)| (v, 2 * i as i64 + 3)).collect();
        m.add_constraint("cap", terms.clone(), Cmp::Le, 41).unwrap();
        m.set_objective(terms).unwrap();
        let cfg = SearchConfig { node_budget: 1, ..SearchConfig::default() };
        let s = solve_ilp(&m, &cfg);
        assert!(!s.proven_optimal());
    }
}
