//! Betweenness relations: derivation from costs and partial orders, and an
//! exhaustive checker for the four betweenness axioms.
//!
//! A betweenness relation here is non-symmetric: `b(p,q,r)` does not imply
//! `b(r,q,p)`. The axioms checked are distinctness of the three entries,
//! antisymmetry (`b(p,q,r)` excludes `b(q,p,r)`), and the two transitivity
//! laws: from `b(p,q,r)` and `b(p,r,s)` infer `b(p,q,s)` and `b(q,r,s)`
//! (outer), and from `b(p,q,s)` and `b(q,r,s)` infer `b(p,r,s)` and
//! `b(p,q,r)` (inner). Nothing is assumed about combining `b(p,q,r)` with
//! `b(q,r,s)`.

use crate::error::Error;
use crate::space::CostSpace;
use crate::value::ExtCost;
use crate::Result;
use std::collections::BTreeSet;

/// A set of ordered triples of distinct points over a fixed ground set.
/// Storage is index-based and sorted, so iteration order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetweennessRelation {
    ground: Vec<String>,
    triples: BTreeSet<(usize, usize, usize)>,
}

impl BetweennessRelation {
    pub fn new(ground: Vec<String>, triples: BTreeSet<(usize, usize, usize)>) -> Result<Self> {
        let n = ground.len();
        for &(p, q, r) in &triples {
            if p >= n || q >= n || r >= n {
                return Err(Error::input(format!("triple ({p},{q},{r}) out of range")));
            }
            if p == q || q == r || p == r {
                return Err(Error::input(format!(
                    "triple ({p},{q},{r}) has repeated entries"
                )));
            }
        }
        Ok(BetweennessRelation { ground, triples })
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn contains(&self, p: usize, q: usize, r: usize) -> bool {
        self.triples.contains(&(p, q, r))
    }

    pub fn triples(&self) -> &BTreeSet<(usize, usize, usize)> {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Triples as label triples, sorted lexicographically.
    pub fn label_triples(&self) -> Vec<[String; 3]> {
        let mut out: Vec<[String; 3]> = self
            .triples
            .iter()
            .map(|&(p, q, r)| {
                [
                    self.ground[p].clone(),
                    self.ground[q].clone(),
                    self.ground[r].clone(),
                ]
            })
            .collect();
        out.sort();
        out
    }
}

/// The relation `b(p,q,r)` iff `p,q,r` are distinct, the three costs are
/// finite, and `c(p,r) = c(p,q) + c(q,r)` at the space's tolerance.
/// Triples with an INF leg are excluded.
pub fn derive_betweenness(space: &CostSpace) -> BetweennessRelation {
    let n = space.len();
    let mode = space.mode();
    let mut triples = BTreeSet::new();
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                if p == q || q == r || p == r {
                    continue;
                }
                if let (ExtCost::Finite(pr), ExtCost::Finite(pq), ExtCost::Finite(qr)) =
                    (space.cost(p, r), space.cost(p, q), space.cost(q, r))
                {
                    if mode.eq_values(pr, &(pq + qr), pr) {
                        triples.insert((p, q, r));
                    }
                }
            }
        }
    }
    BetweennessRelation {
        ground: space.labels().to_vec(),
        triples,
    }
}

/// A transitivity violation: two premise triples whose required conclusion
/// is missing from the relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivityViolation {
    pub premise1: (usize, usize, usize),
    pub premise2: (usize, usize, usize),
    pub missing: (usize, usize, usize),
}

/// Outcome of the exhaustive axiom scan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BetweennessAxiomReport {
    pub distinctness_violations: Vec<(usize, usize, usize)>,
    pub antisymmetry_violations: Vec<(usize, usize, usize)>,
    pub outer_transitivity_violations: Vec<TransitivityViolation>,
    pub inner_transitivity_violations: Vec<TransitivityViolation>,
}

impl BetweennessAxiomReport {
    pub fn is_consistent(&self) -> bool {
        self.distinctness_violations.is_empty()
            && self.antisymmetry_violations.is_empty()
            && self.outer_transitivity_violations.is_empty()
            && self.inner_transitivity_violations.is_empty()
    }

    pub fn violation_count(&self) -> usize {
        self.distinctness_violations.len()
            + self.antisymmetry_violations.len()
            + self.outer_transitivity_violations.len()
            + self.inner_transitivity_violations.len()
    }
}

/// Checks all four axioms exhaustively and returns every violating instance.
pub fn check_axioms(rel: &BetweennessRelation) -> BetweennessAxiomReport {
    let mut report = BetweennessAxiomReport::default();

    for &(p, q, r) in rel.triples() {
        if p == q || q == r || p == r {
            report.distinctness_violations.push((p, q, r));
        }
        if rel.contains(q, p, r) {
            report.antisymmetry_violations.push((p, q, r));
        }
    }

    for &t1 in rel.triples() {
        for &t2 in rel.triples() {
            // outer: b(p,q,r), b(p,r,s) => b(p,q,s), b(q,r,s)
            if t1.0 == t2.0 && t1.2 == t2.1 {
                let (p, q, r, s) = (t1.0, t1.1, t1.2, t2.2);
                for missing in [(p, q, s), (q, r, s)] {
                    if !rel.contains(missing.0, missing.1, missing.2) {
                        report.outer_transitivity_violations.push(TransitivityViolation {
                            premise1: t1,
                            premise2: t2,
                            missing,
                        });
                    }
                }
            }
            // inner: b(p,q,s), b(q,r,s) => b(p,r,s), b(p,q,r)
            if t1.1 == t2.0 && t1.2 == t2.2 {
                let (p, q, r, s) = (t1.0, t1.1, t2.1, t1.2);
                for missing in [(p, r, s), (p, q, r)] {
                    if !rel.contains(missing.0, missing.1, missing.2) {
                        report.inner_transitivity_violations.push(TransitivityViolation {
                            premise1: t1,
                            premise2: t2,
                            missing,
                        });
                    }
                }
            }
        }
    }
    report
}

/// The betweenness relation of a strict partial order: `b(p,q,r)` iff
/// `p < q < r`. The input pair set must be irreflexive and transitive.
pub fn betweenness_from_order(
    elements: Vec<String>,
    less_than: &BTreeSet<(usize, usize)>,
) -> Result<BetweennessRelation> {
    let n = elements.len();
    for &(a, b) in less_than {
        if a >= n || b >= n {
            return Err(Error::input(format!("order pair ({a},{b}) out of range")));
        }
        if a == b {
            return Err(Error::input(format!(
                "order is not irreflexive: contains ({a},{a})"
            )));
        }
    }
    for &(a, b) in less_than {
        for &(c, d) in less_than {
            if b == c && !less_than.contains(&(a, d)) {
                return Err(Error::input(format!(
                    "order is not transitive: ({a},{b}) and ({c},{d}) but not ({a},{d})"
                )));
            }
        }
    }
    // irreflexive + transitive rules out cycles, so this is a strict order
    let mut triples = BTreeSet::new();
    for &(p, q) in less_than {
        for &(q2, r) in less_than {
            if q == q2 {
                triples.insert((p, q, r));
            }
        }
    }
    BetweennessRelation::new(elements, triples)
}
