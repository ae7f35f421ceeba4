use std::fmt;

use serde::{Deserialize, Serialize};

use crate::instance::Coloring;

/// Result of one solver run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SolveOutcome {
    /// A proper list coloring. `proven_optimal` is set only when the solver
    /// certified that no coloring with fewer distinct colors exists.
    Feasible {
        coloring: Coloring,
        proven_optimal: bool,
    },
    /// The solver proved that no list coloring exists.
    Infeasible,
    /// An incomplete search ended without finding a coloring.
    NoSolution,
    /// A heuristic gave up.
    HeuristicFailure,
    /// The wall-clock budget lapsed; carries the best coloring found, if any.
    TimedOut { best: Option<Coloring> },
}

impl SolveOutcome {
    pub fn status(&self) -> Status {
        match self {
            SolveOutcome::Feasible {
                proven_optimal: true,
                ..
            } => Status::Optimal,
            SolveOutcome::Feasible { .. } => Status::Feasible,
            SolveOutcome::Infeasible => Status::Infeasible,
            SolveOutcome::NoSolution => Status::NoSolution,
            SolveOutcome::HeuristicFailure => Status::HeurFail,
            SolveOutcome::TimedOut { .. } => Status::Timeout,
        }
    }

    /// The coloring carried by the outcome, complete or best-so-far.
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            SolveOutcome::Feasible { coloring, .. } => Some(coloring),
            SolveOutcome::TimedOut { best } => best.as_ref(),
            _ => None,
        }
    }

    /// Distinct colors used by [`SolveOutcome::coloring`].
    pub fn colors(&self) -> Option<usize> {
        self.coloring().map(Coloring::distinct_count)
    }

    /// The solver ran to its own end rather than being cut off by the clock.
    pub fn completed(&self) -> bool {
        !matches!(self, SolveOutcome::TimedOut { .. })
    }

    pub fn is_proven(&self) -> bool {
        matches!(self.status(), Status::Optimal | Status::Infeasible)
    }
}

/// Machine-readable status, as written to CSV.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Feasible,
    Optimal,
    NoSolution,
    Infeasible,
    Timeout,
    HeurFail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Feasible => "feasible",
            Status::Optimal => "optimal",
            Status::NoSolution => "nosolution",
            Status::Infeasible => "infeasible",
            Status::Timeout => "timeout",
            Status::HeurFail => "heurfail",
        }
    }

    pub fn has_coloring(self) -> bool {
        matches!(self, Status::Feasible | Status::Optimal)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Status {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "feasible" => Status::Feasible,
            "optimal" => Status::Optimal,
            "nosolution" => Status::NoSolution,
            "infeasible" => Status::Infeasible,
            "timeout" => Status::Timeout,
            "heurfail" => Status::HeurFail,
            other => return Err(format!("unknown status `{other}`")),
        })
    }
}
