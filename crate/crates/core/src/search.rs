//! Search for an admissible partition whose quotient is a forest or even and
//! triangle-free, and whose cells are all known (or recursively shown) to
//! have residually finite Artin groups.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::partition::{enumerate_admissible, Partition};
use crate::recognizers::{base_rf, Axiom, BaseTag};
use crate::{CoxeterGraph, VertexSet};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Which shape the quotient graph has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Condition {
    Forest,
    EvenTriangleFree,
}

/// How one cell of a certifying partition is handled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellPlan {
    Base(BaseTag),
    Recursive(Box<CertifyingPartition>),
}

/// A partition of `subject` (vertex indices of the root graph) meeting both
/// hypotheses, with a plan for every cell in cell order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyingPartition {
    pub subject: VertexSet,
    pub partition: Partition,
    pub condition: Condition,
    pub cells: Vec<CellPlan>,
}

impl CertifyingPartition {
    pub fn plan_for(&self, cell: VertexSet) -> Option<&CellPlan> {
        self.partition
            .cells()
            .iter()
            .position(|&c| c == cell)
            .map(|i| &self.cells[i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub plan: Option<CertifyingPartition>,
    pub budget_exhausted: bool,
    /// Candidate partitions tested against the hypotheses, recursion included.
    pub partitions_examined: u64,
}

/// Quotient shape test, forest first.
pub fn quotient_condition(q: &CoxeterGraph) -> Option<Condition> {
    if q.is_forest() {
        Some(Condition::Forest)
    } else if q.is_even() && q.is_triangle_free() {
        Some(Condition::EvenTriangleFree)
    } else {
        None
    }
}

struct Exhausted;

struct Search<'a> {
    g: &'a CoxeterGraph,
    axioms: &'a [Axiom],
    budget: u64,
    examined: u64,
    memo: HashMap<VertexSet, Option<CertifyingPartition>>,
    base_cache: HashMap<VertexSet, Option<BaseTag>>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<(), Exhausted> {
        if self.examined >= self.budget {
            return Err(Exhausted);
        }
        self.examined += 1;
        Ok(())
    }

    fn base(&mut self, set: VertexSet) -> Option<BaseTag> {
        if let Some(hit) = self.base_cache.get(&set) {
            return hit.clone();
        }
        let tag = base_rf(&self.g.induced(set), self.axioms);
        self.base_cache.insert(set, tag.clone());
        tag
    }

    fn search(&mut self, subject: VertexSet) -> Result<Option<CertifyingPartition>, Exhausted> {
        if let Some(hit) = self.memo.get(&subject) {
            return Ok(hit.clone());
        }
        let found = self.search_uncached(subject)?;
        self.memo.insert(subject, found.clone());
        Ok(found)
    }

    fn search_uncached(
        &mut self,
        subject: VertexSet,
    ) -> Result<Option<CertifyingPartition>, Exhausted> {
        let local = self.g.induced(subject);
        let roots: Vec<usize> = subject.iter().collect();
        let lift = |set: VertexSet| -> VertexSet { set.iter().map(|v| roots[v]).collect() };

        // The singleton partition has the graph itself as quotient.
        self.tick()?;
        if let Some(condition) = quotient_condition(&local) {
            let partition = Partition::singletons(subject);
            let cells = partition
                .cells()
                .iter()
                .map(|&c| CellPlan::Base(self.base(c).expect("one vertex is always a base case")))
                .collect();
            return Ok(Some(CertifyingPartition {
                subject,
                partition,
                condition,
                cells,
            }));
        }

        for candidate in enumerate_admissible(&local) {
            if candidate.is_singletons() {
                continue;
            }
            self.tick()?;
            let (q, _) = crate::partition::quotient(&local, &candidate)
                .expect("enumerated partitions are admissible");
            let Some(condition) = quotient_condition(&q) else {
                continue;
            };
            let partition = Partition::new(candidate.cells().iter().map(|&c| lift(c)).collect())
                .expect("lifted cells stay disjoint");
            let mut cells = Vec::with_capacity(partition.len());
            for &cell in partition.cells() {
                if let Some(tag) = self.base(cell) {
                    cells.push(CellPlan::Base(tag));
                } else if cell != subject {
                    match self.search(cell)? {
                        Some(sub) => cells.push(CellPlan::Recursive(Box::new(sub))),
                        None => break,
                    }
                } else {
                    break;
                }
            }
            if cells.len() == partition.len() {
                return Ok(Some(CertifyingPartition {
                    subject,
                    partition,
                    condition,
                    cells,
                }));
            }
        }
        Ok(None)
    }
}

/// Finds the first admissible partition (singleton partition first, then
/// restricted growth string order) meeting both hypotheses. Cells that are
/// not base cases are searched recursively, memoized by vertex subset.
/// `budget` caps the number of partitions examined over the whole search.
pub fn find_certifying_partition(g: &CoxeterGraph, axioms: &[Axiom], budget: u64) -> SearchOutcome {
    let mut search = Search {
        g,
        axioms,
        budget,
        examined: 0,
        memo: HashMap::new(),
        base_cache: HashMap::new(),
    };
    let result = search.search(g.all());
    let partitions_examined = search.examined;
    match result {
        Ok(plan) => SearchOutcome {
            plan,
            budget_exhausted: false,
            partitions_examined,
        },
        Err(Exhausted) => SearchOutcome {
            plan: None,
            budget_exhausted: true,
            partitions_examined,
        },
    }
}
