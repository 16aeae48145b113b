//! Cost-space data model, axiom validation, and constructions.
//!
//! A [`CostSpace`] is structurally checked at construction (square matrix,
//! unique labels, nonnegative entries); the cost axioms themselves — zero
//! diagonal, strictly positive off-diagonal entries, and the directed
//! triangle inequality — are checked by [`validate_cost`], which reports
//! every violation rather than failing on the first.

use crate::error::Error;
use crate::value::{ExtCost, NumericMode, Value};
use crate::Result;

/// A finite labeled set with an extended-nonnegative cost matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CostSpace {
    labels: Vec<String>,
    cost: Vec<Vec<ExtCost>>,
    mode: NumericMode,
}

impl CostSpace {
    /// Structural checks only: square matrix, unique nonempty labels,
    /// no negative entries. Axiom violations are left for [`validate_cost`].
    pub fn new(labels: Vec<String>, cost: Vec<Vec<ExtCost>>, mode: NumericMode) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::input("a cost space needs at least one point"));
        }
        for (i, a) in labels.iter().enumerate() {
            for b in labels.iter().skip(i + 1) {
                if a == b {
                    return Err(Error::input(format!("duplicate label {a:?}")));
                }
            }
        }
        if cost.len() != n || cost.iter().any(|row| row.len() != n) {
            return Err(Error::input(format!(
                "cost matrix must be {n}x{n} to match the labels"
            )));
        }
        for row in &cost {
            for entry in row {
                if let ExtCost::Finite(v) = entry {
                    if v.is_negative() {
                        return Err(Error::input(format!("negative cost entry {v}")));
                    }
                }
            }
        }
        Ok(CostSpace { labels, cost, mode })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Resolves a label, reporting an input error when unknown.
    pub fn require_index(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::input(format!("unknown label {label:?}")))
    }

    pub fn cost(&self, from: usize, to: usize) -> &ExtCost {
        &self.cost[from][to]
    }

    pub fn matrix(&self) -> &[Vec<ExtCost>] {
        &self.cost
    }

    pub fn mode(&self) -> &NumericMode {
        &self.mode
    }

    pub fn with_mode(mut self, mode: NumericMode) -> Self {
        self.mode = mode;
        self
    }
}

/// Every violation of the cost axioms found by [`validate_cost`].
///
/// `identity_violations` lists diagonal entries that are not zero,
/// `positivity_violations` lists off-diagonal pairs with zero cost (the
/// "only if" half of the identity axiom), and `triangle_violations` lists
/// ordered triples `(i, j, k)` with `c(i,k) > c(i,j) + c(j,k)`, together
/// with the positive slack.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub identity_violations: Vec<(usize, ExtCost)>,
    pub positivity_violations: Vec<(usize, usize)>,
    pub triangle_violations: Vec<(usize, usize, usize, ExtCost)>,
    pub max_identity_defect: Value,
    pub max_triangle_defect: Value,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.identity_violations.is_empty()
            && self.positivity_violations.is_empty()
            && self.triangle_violations.is_empty()
    }
}

/// Checks the cost axioms and reports every violation.
///
/// A triangle violation is recorded for the ordered triple `(i, j, k)` when
/// `c(i,k) > c(i,j) + c(j,k)` beyond the mode's tolerance; the slack is
/// `c(i,k) - c(i,j) - c(j,k)`. An INF left side with a finite right side is
/// a violation with infinite slack.
pub fn validate_cost(space: &CostSpace) -> ValidationReport {
    let n = space.len();
    let mode = space.mode();
    let mut report = ValidationReport::default();

    for i in 0..n {
        match space.cost(i, i) {
            ExtCost::Finite(v) => {
                if !mode.is_zero(v) {
                    report.identity_violations.push((i, ExtCost::Finite(v.clone())));
                    report.max_identity_defect =
                        report.max_identity_defect.clone().max(v.clone());
                }
            }
            ExtCost::Infinity => {
                report.identity_violations.push((i, ExtCost::Infinity));
            }
        }
        for j in 0..n {
            if i != j {
                if let ExtCost::Finite(v) = space.cost(i, j) {
                    if !mode.is_positive(v) {
                        report.positivity_violations.push((i, j));
                    }
                }
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let direct = space.cost(i, k);
                let via = space.cost(i, j) + space.cost(j, k);
                match (direct, &via) {
                    (ExtCost::Finite(d), ExtCost::Finite(v)) => {
                        let slack = d - v;
                        if mode.is_positive(&slack) {
                            report.triangle_violations.push((
                                i,
                                j,
                                k,
                                ExtCost::Finite(slack.clone()),
                            ));
                            report.max_triangle_defect =
                                report.max_triangle_defect.clone().max(slack);
                        }
                    }
                    (ExtCost::Infinity, ExtCost::Finite(_)) => {
                        report.triangle_violations.push((i, j, k, ExtCost::Infinity));
                    }
                    _ => {}
                }
            }
        }
    }
    report
}

/// Minimal constants making the matrix a cost function up to an additive
/// constant: `C_id = max_p c(p,p)` and `C_tri` the largest positive slack
/// `c(p,q) - c(p,r) - c(r,q)` over triples whose three entries are finite.
/// Triples containing an INF entry are skipped, so the constants describe
/// the finite part of the matrix.
pub fn asymptotic_constants(space: &CostSpace) -> (Value, Value) {
    let n = space.len();
    let mut c_id = Value::zero();
    for i in 0..n {
        if let ExtCost::Finite(v) = space.cost(i, i) {
            c_id = c_id.max(v.clone());
        }
    }
    let mut c_tri = Value::zero();
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                if let (ExtCost::Finite(pq), ExtCost::Finite(pr), ExtCost::Finite(rq)) =
                    (space.cost(p, q), space.cost(p, r), space.cost(r, q))
                {
                    let slack = &(pq - pr) - rq;
                    c_tri = c_tri.max(slack);
                }
            }
        }
    }
    (c_id, c_tri)
}

/// Checks the shifted triangle inequality `f^B(p,q) <= f^B(p,r) + f^B(r,q)`
/// over all distinct triples, where `f^B = f - B(f)` and `B(f)` is the
/// minimal off-diagonal entry. Returns the first violating triple otherwise.
///
/// The shift cancels exactly the slack a "weights plus large constant"
/// construction buys itself, so matrices whose underlying weights break
/// their own triangle inequality fail here even though they validate.
pub fn is_b_cost(space: &CostSpace) -> Result<(bool, Option<(usize, usize, usize)>)> {
    let n = space.len();
    let mut shift: Option<Value> = None;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                if let ExtCost::Finite(v) = space.cost(i, j) {
                    shift = Some(match shift {
                        Some(s) => s.min(v.clone()),
                        None => v.clone(),
                    });
                }
            }
        }
    }
    let shift = shift.ok_or_else(|| {
        Error::domain("all off-diagonal entries are INF; the shift B(f) is undefined")
    })?;

    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                if p == q || q == r || p == r {
                    continue;
                }
                // f^B(p,q) <= f^B(p,r) + f^B(r,q), i.e.
                // f(p,q) <= f(p,r) + f(r,q) - B(f) in extended arithmetic.
                let lhs = space.cost(p, q);
                let rhs = (space.cost(p, r) + space.cost(r, q)).sub_finite(&shift);
                let violated = match (lhs, &rhs) {
                    (_, ExtCost::Infinity) => false,
                    (ExtCost::Infinity, ExtCost::Finite(_)) => true,
                    (ExtCost::Finite(l), ExtCost::Finite(r)) => {
                        space.mode().is_positive(&(l - r))
                    }
                };
                if violated {
                    return Ok((false, Some((p, q, r))));
                }
            }
        }
    }
    Ok((true, None))
}

/// Builds a cost space from a bounded weight matrix by adding the bound to
/// every off-diagonal entry: `c(p,q) = w(p,q) + C` for `p != q`. The
/// output always validates, whatever the weights do, because the added
/// constant makes the triangle inequality hold on its own.
pub fn lawvere_from_weights(
    labels: Vec<String>,
    weights: Vec<Vec<Value>>,
    bound: &Value,
) -> Result<CostSpace> {
    let n = labels.len();
    if weights.len() != n || weights.iter().any(|r| r.len() != n) {
        return Err(Error::input("weight matrix shape does not match labels"));
    }
    if !bound.is_positive() {
        return Err(Error::parameter(format!(
            "bound C must be positive, got {bound}"
        )));
    }
    let mut cost = vec![vec![ExtCost::zero(); n]; n];
    for i in 0..n {
        if !weights[i][i].is_zero() {
            return Err(Error::input(format!(
                "weight diagonal must be zero, got {} at {}",
                weights[i][i], labels[i]
            )));
        }
        for j in 0..n {
            let w = &weights[i][j];
            if w.is_negative() {
                return Err(Error::input(format!("negative weight {w}")));
            }
            if w > bound {
                return Err(Error::parameter(format!(
                    "weight {w} exceeds the bound C = {bound}"
                )));
            }
            if i != j {
                cost[i][j] = ExtCost::Finite(w + bound);
            }
        }
    }
    CostSpace::new(labels, cost, NumericMode::Rational)
}

/// The symmetrization `d(x,y) = (c(x,y) + c(y,x)) / 2`; INF beats finite.
pub fn symmetrize(space: &CostSpace) -> CostSpace {
    let n = space.len();
    let mut cost = vec![vec![ExtCost::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            cost[i][j] = match (space.cost(i, j), space.cost(j, i)) {
                (ExtCost::Finite(a), ExtCost::Finite(b)) => ExtCost::Finite((a + b).half()),
                _ => ExtCost::Infinity,
            };
        }
    }
    CostSpace {
        labels: space.labels.clone(),
        cost,
        mode: space.mode.clone(),
    }
}

/// The reversed space `c'(p,q) = c(q,p)`. Outward balls of the reversal are
/// the inward balls of the original.
pub fn reverse(space: &CostSpace) -> CostSpace {
    let n = space.len();
    let mut cost = vec![vec![ExtCost::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            cost[i][j] = space.cost(j, i).clone();
        }
    }
    CostSpace {
        labels: space.labels.clone(),
        cost,
        mode: space.mode.clone(),
    }
}

/// How to combine component costs in a product space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductScheme {
    /// `max(c1, c2)` — the coarsest choice making both projections
    /// cost morphisms; the default.
    Max,
    /// `(c1^p + c2^p)^(1/p)` for `p >= 1`. `p = 1` is an exact sum; other
    /// exponents need real powers, so they are float-mode only.
    Lp(Value),
}

impl ProductScheme {
    fn combine(&self, a: &ExtCost, b: &ExtCost, mode: &NumericMode) -> Result<ExtCost> {
        match self {
            ProductScheme::Max => Ok(a.clone().max(b.clone())),
            ProductScheme::Lp(p) => {
                if p < &Value::one() {
                    return Err(Error::parameter(format!("product scheme needs p >= 1, got {p}")));
                }
                match (a, b) {
                    (ExtCost::Finite(x), ExtCost::Finite(y)) => {
                        if p == &Value::one() {
                            Ok(ExtCost::Finite(x + y))
                        } else if mode.is_rational() {
                            Err(Error::parameter(format!(
                                "l_p product with p = {p} needs float mode; rational mode supports p = 1 and max"
                            )))
                        } else {
                            let pf = p.to_f64();
                            let combined =
                                (x.to_f64().powf(pf) + y.to_f64().powf(pf)).powf(1.0 / pf);
                            Value::from_f64(combined).map(ExtCost::Finite).ok_or_else(|| {
                                Error::domain("l_p combination overflowed".to_string())
                            })
                        }
                    }
                    _ => Ok(ExtCost::Infinity),
                }
            }
        }
    }
}

/// Label used for a point of a product space.
pub fn product_label(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// The product space on ordered pairs with the chosen combination scheme.
/// Both projections are cost morphisms for every `p >= 1`.
pub fn product(s1: &CostSpace, s2: &CostSpace, scheme: &ProductScheme) -> Result<CostSpace> {
    let mode = if s1.mode().is_rational() && s2.mode().is_rational() {
        NumericMode::Rational
    } else if let NumericMode::Float { tolerance } = s1.mode() {
        NumericMode::Float {
            tolerance: tolerance.clone(),
        }
    } else {
        s2.mode().clone()
    };
    let mut labels = Vec::with_capacity(s1.len() * s2.len());
    for a in s1.labels() {
        for b in s2.labels() {
            labels.push(product_label(a, b));
        }
    }
    let n = labels.len();
    let mut cost = vec![vec![ExtCost::zero(); n]; n];
    for i1 in 0..s1.len() {
        for j1 in 0..s2.len() {
            for i2 in 0..s1.len() {
                for j2 in 0..s2.len() {
                    let row = i1 * s2.len() + j1;
                    let col = i2 * s2.len() + j2;
                    cost[row][col] =
                        scheme.combine(s1.cost(i1, i2), s2.cost(j1, j2), &mode)?;
                }
            }
        }
    }
    CostSpace::new(labels, cost, mode)
}
