//! Finite chains, min-plus path closure, swiftest-chain classification,
//! and the alternating-sign boundary operator on formal path sums.
//!
//! A chain is a sequence of points with finite consecutive costs; its
//! length is the sum of those costs, and the cumulative prefix lengths play
//! the role of timestamps. A chain is *tachistic* (a swiftest connection)
//! when the cost between every pair of its points telescopes exactly, and
//! *tight at every triple* — the local condition of a chronodesic — when
//! every three consecutive points satisfy the betweenness equality.

use crate::error::Error;
use crate::space::CostSpace;
use crate::value::{ExtCost, Value};
use crate::Result;
use std::collections::BTreeMap;

/// A sequence of at least two point indices into a space's label list.
/// Consecutive repetitions are allowed (a zero-cost self-step).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Chain {
    points: Vec<usize>,
}

impl Chain {
    pub fn new(points: Vec<usize>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::input("a chain needs at least one edge"));
        }
        Ok(Chain { points })
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn edges(&self) -> usize {
        self.points.len() - 1
    }

    pub fn first(&self) -> usize {
        self.points[0]
    }

    pub fn last(&self) -> usize {
        *self.points.last().unwrap()
    }

    pub fn labels(&self, space: &CostSpace) -> Vec<String> {
        self.points.iter().map(|&i| space.label(i).to_string()).collect()
    }

    /// Resolves a label sequence against a space.
    pub fn from_labels(space: &CostSpace, labels: &[String]) -> Result<Self> {
        let points = labels
            .iter()
            .map(|l| space.require_index(l))
            .collect::<Result<Vec<_>>>()?;
        Chain::new(points)
    }
}

/// Sum of consecutive costs. An INF consecutive cost means the chain jumps
/// an unreachable edge and is an error.
pub fn chain_length(space: &CostSpace, chain: &Chain) -> Result<Value> {
    let mut total = Value::zero();
    for w in chain.points().windows(2) {
        match space.cost(w[0], w[1]) {
            ExtCost::Finite(v) => total = total + v.clone(),
            ExtCost::Infinity => {
                return Err(Error::domain(format!(
                    "unreachable edge {} -> {}",
                    space.label(w[0]),
                    space.label(w[1])
                )))
            }
        }
    }
    Ok(total)
}

/// Cumulative prefix lengths of the chain, starting at 0 — the implicit
/// timestamps of its points.
pub fn chain_timestamps(space: &CostSpace, chain: &Chain) -> Result<Vec<Value>> {
    let mut out = vec![Value::zero()];
    for w in chain.points().windows(2) {
        match space.cost(w[0], w[1]) {
            ExtCost::Finite(v) => {
                let last = out.last().unwrap().clone();
                out.push(last + v.clone());
            }
            ExtCost::Infinity => {
                return Err(Error::domain("unreachable edge in chain".to_string()))
            }
        }
    }
    Ok(out)
}

/// Min-plus transitive closure of a nonnegative weight matrix with zero
/// diagonal: `c(p,q)` is the minimal total weight of a chain from `p` to
/// `q`, INF when unreachable. The output satisfies the triangle inequality
/// and equals the input exactly when the input already validates.
pub fn path_cost_closure(weights: &CostSpace) -> Result<CostSpace> {
    let n = weights.len();
    for i in 0..n {
        if !weights.cost(i, i).is_zero() {
            return Err(Error::input(format!(
                "weight diagonal must be zero at {}",
                weights.label(i)
            )));
        }
    }
    let mut dist: Vec<Vec<ExtCost>> = weights.matrix().to_vec();
    for k in 0..n {
        for i in 0..n {
            if !dist[i][k].is_finite() {
                continue;
            }
            for j in 0..n {
                let via = &dist[i][k] + &dist[k][j];
                if via < dist[i][j] {
                    dist[i][j] = via;
                }
            }
        }
    }
    CostSpace::new(weights.labels().to_vec(), dist, weights.mode().clone())
}

/// All-pairs tightness: for every `i < j` the direct cost `c(x_i, x_j)`
/// equals the telescoped sum of the consecutive costs between them. This is
/// the finite form of a swiftest connection; the chain's timestamps realize
/// every pairwise cost exactly.
pub fn is_tachistic(space: &CostSpace, chain: &Chain) -> Result<bool> {
    let stamps = chain_timestamps(space, chain)?;
    let pts = chain.points();
    let mode = space.mode();
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let segment = &stamps[j] - &stamps[i];
            match space.cost(pts[i], pts[j]) {
                ExtCost::Finite(c) => {
                    if !mode.eq_values(c, &segment, c) {
                        return Ok(false);
                    }
                }
                ExtCost::Infinity => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// Local tightness: every consecutive triple satisfies
/// `c(x_{i-1}, x_i) + c(x_i, x_{i+1}) = c(x_{i-1}, x_{i+1})`.
/// Single-edge chains are trivially tight (the two-point case of a
/// chronodesic), provided the edge cost is finite.
pub fn is_chronodesic_tight(space: &CostSpace, chain: &Chain) -> Result<bool> {
    let _ = chain_length(space, chain)?; // consecutive costs must be finite
    let pts = chain.points();
    let mode = space.mode();
    for w in pts.windows(3) {
        let (a, b, c) = (w[0], w[1], w[2]);
        let via = space.cost(a, b) + space.cost(b, c);
        match (space.cost(a, c), &via) {
            (ExtCost::Finite(direct), ExtCost::Finite(sum)) => {
                if !mode.eq_values(direct, sum, direct) {
                    return Ok(false);
                }
            }
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// A tachistic chain together with its single-insertion maximality flag.
///
/// Maximality of a swiftest chain is tested against single-point
/// insertions only: the chain is flagged maximal when no one point of the
/// space can be inserted at an interior position without breaking
/// all-pairs tightness. This is a necessary condition for full
/// non-extendability and coincides with it on the worked examples; testing
/// arbitrary supersets would be exponential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TachisticChain {
    pub chain: Chain,
    pub maximal: bool,
}

/// Enumerates every tachistic chain from `p` to `q` with at most
/// `max_edges` edges, over distinct points. The search prunes on partial
/// all-pairs tightness, so it stays feasible for small spaces. Output is
/// sorted by point sequence.
pub fn enumerate_tachistic_chains(
    space: &CostSpace,
    p: usize,
    q: usize,
    max_edges: usize,
) -> Result<Vec<TachisticChain>> {
    if p == q {
        return Err(Error::parameter(
            "chain enumeration needs distinct endpoints".to_string(),
        ));
    }
    if max_edges == 0 {
        return Err(Error::parameter("max_edges must be at least 1".to_string()));
    }
    let n = space.len();
    let mut found: Vec<Chain> = Vec::new();
    let mut prefix = vec![p];
    let mut stamps = vec![Value::zero()];
    let mut used = vec![false; n];
    used[p] = true;

    fn extend_tight(
        space: &CostSpace,
        prefix: &[usize],
        stamps: &[Value],
        z: usize,
    ) -> Option<Value> {
        // appending z must keep every pair (x_i, z) telescoped
        let last = *prefix.last().unwrap();
        let step = match space.cost(last, z) {
            ExtCost::Finite(v) => v.clone(),
            ExtCost::Infinity => return None,
        };
        let end = stamps.last().unwrap() + &step;
        let mode = space.mode();
        for (i, &x) in prefix.iter().enumerate() {
            let segment = &end - &stamps[i];
            match space.cost(x, z) {
                ExtCost::Finite(c) => {
                    if !mode.eq_values(c, &segment, c) {
                        return None;
                    }
                }
                ExtCost::Infinity => return None,
            }
        }
        Some(end)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        space: &CostSpace,
        q: usize,
        max_edges: usize,
        prefix: &mut Vec<usize>,
        stamps: &mut Vec<Value>,
        used: &mut Vec<bool>,
        found: &mut Vec<Chain>,
    ) {
        if prefix.len() > max_edges {
            return;
        }
        for z in 0..space.len() {
            if used[z] {
                continue;
            }
            if let Some(end) = extend_tight(space, prefix, stamps, z) {
                prefix.push(z);
                stamps.push(end);
                used[z] = true;
                if z == q {
                    found.push(Chain { points: prefix.clone() });
                } else {
                    dfs(space, q, max_edges, prefix, stamps, used, found);
                }
                used[z] = false;
                stamps.pop();
                prefix.pop();
            }
        }
    }

    dfs(space, q, max_edges, &mut prefix, &mut stamps, &mut used, &mut found);
    found.sort();

    let mut out = Vec::with_capacity(found.len());
    for chain in found {
        let maximal = single_insertions_all_break(space, &chain)?;
        out.push(TachisticChain { chain, maximal });
    }
    Ok(out)
}

fn single_insertions_all_break(space: &CostSpace, chain: &Chain) -> Result<bool> {
    let pts = chain.points();
    for gap in 1..pts.len() {
        for z in 0..space.len() {
            if pts.contains(&z) {
                continue;
            }
            let mut candidate = pts.to_vec();
            candidate.insert(gap, z);
            let candidate = Chain { points: candidate };
            if chain_length(space, &candidate).is_ok() && is_tachistic(space, &candidate)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Concatenation of two chains sharing their junction point; the length is
/// additive.
pub fn compose_chains(c1: &Chain, c2: &Chain) -> Result<Chain> {
    if c1.last() != c2.first() {
        return Err(Error::domain(format!(
            "cannot compose: first chain ends at index {}, second starts at {}",
            c1.last(),
            c2.first()
        )));
    }
    let mut points = c1.points.clone();
    points.extend_from_slice(&c2.points[1..]);
    Ok(Chain { points })
}

/// A finitely supported integer combination of vertex sequences
/// (repetitions allowed). Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathChainSum {
    terms: BTreeMap<Vec<String>, i64>,
}

impl PathChainSum {
    pub fn zero() -> Self {
        PathChainSum::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<String>, i64)>) -> Self {
        let mut sum = PathChainSum::zero();
        for (path, coef) in terms {
            sum.add_term(path, coef);
        }
        sum
    }

    pub fn add_term(&mut self, path: Vec<String>, coef: i64) {
        if coef == 0 {
            return;
        }
        match self.terms.entry(path) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<String>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The boundary `∂(v_0,...,v_n) = Σ_j (-1)^j (v_0,...,v̂_j,...,v_n)`,
/// extended linearly. Single-vertex paths map to the zero sum (the
/// alternating formula degenerates there, so the convention is fixed
/// here), and `∂ ∘ ∂ = 0` identically.
pub fn boundary(sum: &PathChainSum) -> PathChainSum {
    let mut out = PathChainSum::zero();
    for (path, &coef) in sum.terms() {
        if path.len() <= 1 {
            continue;
        }
        for j in 0..path.len() {
            let mut dropped = path.clone();
            dropped.remove(j);
            let sign = if j % 2 == 0 { 1 } else { -1 };
            out.add_term(dropped, coef * sign);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::space::validate_cost;
    use crate::value::NumericMode;
    use proptest::prelude::*;

    fn shortcut() -> CostSpace {
        gallery::chain_with_shortcut()
    }

    fn full_chain(space: &CostSpace, labels: &[&str]) -> Chain {
        let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        Chain::from_labels(space, &owned).unwrap()
    }

    #[test]
    fn length_of_the_long_way_round() {
        let s = shortcut();
        let chain = full_chain(&s, &["p1", "p2", "p3", "p4"]);
        assert_eq!(chain_length(&s, &chain).unwrap(), Value::from_int(3));
    }

    #[test]
    fn single_edge_length_is_the_cost() {
        let s = shortcut();
        let chain = full_chain(&s, &["p1", "p4"]);
        assert_eq!(chain_length(&s, &chain).unwrap(), Value::from_int(1));
    }

    #[test]
    fn unreachable_edge_is_an_error() {
        let s = gallery::interval_space(4);
        let chain = Chain::new(vec![2, 0]).unwrap();
        assert!(matches!(chain_length(&s, &chain), Err(Error::Domain(_))));
    }

    #[test]
    fn closure_matches_brute_force_on_the_shortcut_weights() {
        let weights = gallery::chain_with_shortcut_weights();
        let closed = path_cost_closure(&weights).unwrap();

        // oracle: minimum over all simple chains, enumerated explicitly
        let n = weights.len();
        let mut best = vec![vec![ExtCost::Infinity; n]; n];
        for (i, row) in best.iter_mut().enumerate() {
            row[i] = ExtCost::zero();
        }
        fn walk(
            weights: &CostSpace,
            path: &mut Vec<usize>,
            cost: Value,
            best: &mut [Vec<ExtCost>],
        ) {
            let last = *path.last().unwrap();
            for z in 0..weights.len() {
                if path.contains(&z) {
                    continue;
                }
                if let ExtCost::Finite(w) = weights.cost(last, z) {
                    let total = &cost + w;
                    let slot = &mut best[path[0]][z];
                    if ExtCost::Finite(total.clone()) < *slot {
                        *slot = ExtCost::Finite(total.clone());
                    }
                    path.push(z);
                    walk(weights, path, total, best);
                    path.pop();
                }
            }
        }
        for start in 0..n {
            walk(&weights, &mut vec![start], Value::zero(), &mut best);
        }

        for i in 0..n {
            for j in 0..n {
                assert_eq!(closed.cost(i, j), &best[i][j], "({i},{j})");
            }
        }
        assert_eq!(&closed, &gallery::chain_with_shortcut());
    }

    #[test]
    fn closure_fixes_valid_spaces() {
        let s = gallery::circle_space(7);
        assert_eq!(path_cost_closure(&s).unwrap(), s);
    }

    #[test]
    fn closure_requires_zero_diagonal() {
        let mut cost = vec![vec![ExtCost::from_int(1); 2]; 2];
        cost[0][0] = ExtCost::from_int(1);
        cost[1][1] = ExtCost::zero();
        let w = CostSpace::new(vec!["a".into(), "b".into()], cost, NumericMode::Rational).unwrap();
        assert!(path_cost_closure(&w).is_err());
    }

    #[test]
    fn long_way_round_is_tight_but_not_swiftest() {
        let s = shortcut();
        let chain = full_chain(&s, &["p1", "p2", "p3", "p4"]);
        assert!(is_chronodesic_tight(&s, &chain).unwrap());
        assert!(!is_tachistic(&s, &chain).unwrap());
    }

    #[test]
    fn single_edges_are_trivially_swiftest() {
        let s = shortcut();
        for chain in [full_chain(&s, &["p1", "p4"]), full_chain(&s, &["p3", "p1"])] {
            assert!(is_tachistic(&s, &chain).unwrap());
            assert!(is_chronodesic_tight(&s, &chain).unwrap());
        }
    }

    #[test]
    fn interval_chains_telescope() {
        let s = gallery::interval_space(6);
        let chain = Chain::new(vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert!(is_tachistic(&s, &chain).unwrap());
        let skip = Chain::new(vec![0, 2, 5]).unwrap();
        assert!(is_tachistic(&s, &skip).unwrap());
    }

    #[test]
    fn one_broken_triple_fails_local_tightness() {
        let s = shortcut();
        let chain = full_chain(&s, &["p2", "p1", "p4"]); // 10 + 1 != c(p2,p4) = 2
        assert!(!is_chronodesic_tight(&s, &chain).unwrap());
    }

    #[test]
    fn interval_enumeration_gives_increasing_subsequences() {
        let s = gallery::interval_space(6);
        let chains = enumerate_tachistic_chains(&s, 0, 5, 5).unwrap();
        // every subset of {1,2,3,4} as interior points: 2^4 chains
        assert_eq!(chains.len(), 16);
        for t in &chains {
            let pts = t.chain.points();
            assert!(pts.windows(2).all(|w| w[0] < w[1]));
            // only the full chain admits no further insertion
            assert_eq!(t.maximal, pts.len() == 6, "{pts:?}");
        }
    }

    #[test]
    fn shortcut_space_has_only_the_direct_edge() {
        let s = shortcut();
        let chains = enumerate_tachistic_chains(&s, 0, 3, 4).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].chain.points(), &[0, 3]);
        assert!(chains[0].maximal);
    }

    #[test]
    fn disconnected_pair_enumerates_nothing() {
        let s = gallery::interval_space(4);
        let chains = enumerate_tachistic_chains(&s, 3, 0, 4).unwrap();
        assert!(chains.is_empty());
    }

    #[test]
    fn equal_endpoints_are_a_parameter_error() {
        let s = shortcut();
        assert!(matches!(
            enumerate_tachistic_chains(&s, 1, 1, 3),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn composition_concatenates_and_adds_length() {
        let s = shortcut();
        let c1 = full_chain(&s, &["p1", "p2"]);
        let c2 = full_chain(&s, &["p2", "p3"]);
        let both = compose_chains(&c1, &c2).unwrap();
        assert_eq!(both.points(), &[0, 1, 2]);
        let sum = chain_length(&s, &c1).unwrap() + chain_length(&s, &c2).unwrap();
        assert_eq!(chain_length(&s, &both).unwrap(), sum);
        assert!(compose_chains(&c2, &c1).is_err());
    }

    #[test]
    fn composing_a_trivial_loop_keeps_the_length() {
        let s = shortcut();
        let c = full_chain(&s, &["p1", "p2"]);
        let still = Chain::new(vec![1, 1]).unwrap(); // zero-cost self-step
        let both = compose_chains(&c, &still).unwrap();
        assert_eq!(
            chain_length(&s, &both).unwrap(),
            chain_length(&s, &c).unwrap()
        );
    }

    #[test]
    fn boundary_of_an_edge() {
        let path = vec!["a".to_string(), "b".to_string()];
        let sum = PathChainSum::from_terms([(path, 1)]);
        let b = boundary(&sum);
        assert_eq!(b.terms().get(&vec!["b".to_string()]), Some(&1));
        assert_eq!(b.terms().get(&vec!["a".to_string()]), Some(&-1));
        assert_eq!(b.terms().len(), 2);
    }

    #[test]
    fn boundary_squares_to_zero_on_a_triangle() {
        let path: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let sum = PathChainSum::from_terms([(path, 1)]);
        assert!(boundary(&boundary(&sum)).is_zero());
    }

    #[test]
    fn single_vertices_die() {
        let sum = PathChainSum::from_terms([(vec!["a".to_string()], 3)]);
        assert!(boundary(&sum).is_zero());
    }

    proptest! {
        #[test]
        fn concatenation_length_is_additive(
            cut in 1usize..4,
            pts in proptest::collection::vec(0usize..7, 5)
        ) {
            let s = gallery::circle_space(7); // all costs finite
            let c1 = Chain::new(pts[..=cut].to_vec()).unwrap();
            let c2 = Chain::new(pts[cut..].to_vec()).unwrap();
            let both = compose_chains(&c1, &c2).unwrap();
            prop_assert_eq!(
                chain_length(&s, &both).unwrap(),
                chain_length(&s, &c1).unwrap() + chain_length(&s, &c2).unwrap()
            );
        }

        #[test]
        fn composition_is_associative(
            pts in proptest::collection::vec(0usize..7, 7),
            cut1 in 1usize..3,
            cut2 in 3usize..6,
        ) {
            let a = Chain::new(pts[..=cut1].to_vec()).unwrap();
            let b = Chain::new(pts[cut1..=cut2].to_vec()).unwrap();
            let c = Chain::new(pts[cut2..].to_vec()).unwrap();
            let left = compose_chains(&compose_chains(&a, &b).unwrap(), &c).unwrap();
            let right = compose_chains(&a, &compose_chains(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn boundary_squares_to_zero(
            paths in proptest::collection::vec(
                (proptest::collection::vec(0u8..5, 1..=7), -3i64..=3),
                1..=5
            )
        ) {
            let sum = PathChainSum::from_terms(paths.into_iter().map(|(p, c)| {
                (p.into_iter().map(|v| format!("v{v}")).collect::<Vec<_>>(), c)
            }));
            prop_assert!(boundary(&boundary(&sum)).is_zero());
        }

        #[test]
        fn closure_of_random_weights_validates(seed in proptest::collection::vec(1i64..=20, 25)) {
            let labels: Vec<String> = (0..5).map(|i| format!("w{i}")).collect();
            let mut cost = vec![vec![ExtCost::zero(); 5]; 5];
            let mut it = seed.into_iter();
            for (i, row) in cost.iter_mut().enumerate() {
                for (j, entry) in row.iter_mut().enumerate() {
                    let v = it.next().unwrap();
                    if i != j {
                        *entry = ExtCost::from_int(v);
                    }
                }
            }
            let weights = CostSpace::new(labels, cost, NumericMode::Rational).unwrap();
            let closed = path_cost_closure(&weights).unwrap();
            prop_assert!(validate_cost(&closed).is_valid());
            // idempotent and dominated by the input
            prop_assert_eq!(path_cost_closure(&closed).unwrap(), closed.clone());
            for i in 0..5 {
                for j in 0..5 {
                    prop_assert!(closed.cost(i, j) <= weights.cost(i, j));
                }
            }
        }

        #[test]
        fn tachistic_chains_are_locally_tight(
            p in 0usize..6,
            q in 0usize..6,
        ) {
            prop_assume!(p != q);
            let s = gallery::two_speed_interval(6);
            for t in enumerate_tachistic_chains(&s, p, q, 5).unwrap() {
                prop_assert!(is_chronodesic_tight(&s, &t.chain).unwrap());
            }
        }
    }
}
