//! Free-group words over pair generators, betweenness relators, the
//! zero-sum abelianization with constructive preimages, cost
//! homomorphisms, and normal forms for two structured generator families.
//!
//! The word problem in the full relator quotient is not decided here. Two
//! computable homomorphisms are exposed instead — `psi` into zero-sum
//! integer vectors and `cost_hom` into the reals — which are necessary
//! conditions for equality. For two families the quotient is known to be
//! free on an explicit base, so rewriting to that base plus free reduction
//! decides equality outright: cyclic orders (every generator expands into
//! adjacent steps) and digraphs in which any two vertices are joined by at
//! most one path (every generator expands along that path, or is itself
//! base when it is an edge or its target is unreachable).

use crate::error::Error;
use crate::space::CostSpace;
use crate::value::Value;
use crate::Result;
use std::collections::{BTreeMap, BTreeSet};

/// An ordered pair generator `X_{source,target}` with distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    source: String,
    target: String,
}

impl Generator {
    pub fn new(source: impl Into<String>, target: impl Into<String>) -> Result<Self> {
        let source = source.into();
        let target = target.into();
        if source == target {
            return Err(Error::input(format!(
                "generator endpoints must be distinct, got {source:?} twice"
            )));
        }
        Ok(Generator { source, target })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn target(&self) -> &str {
        &self.target
    }
}

/// One letter of a word: a generator with exponent +1 or -1.
pub type Letter = (Generator, i8);

/// A word in the free group on pair generators. Construction does not
/// reduce; [`free_reduce`] computes the canonical freely reduced form.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord::default()
    }

    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        for (_, exp) in &letters {
            if *exp != 1 && *exp != -1 {
                return Err(Error::input(format!("letter exponent must be +1 or -1, got {exp}")));
            }
        }
        Ok(GroupWord { letters })
    }

    pub fn single(gen: Generator) -> Self {
        GroupWord { letters: vec![(gen, 1)] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        GroupWord { letters }
    }

    pub fn inverse(&self) -> GroupWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|(g, e)| (g.clone(), -e))
            .collect();
        GroupWord { letters }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters
            .windows(2)
            .all(|w| !(w[0].0 == w[1].0 && w[0].1 == -w[1].1))
    }
}

/// Cancels adjacent letter–inverse pairs until none remain. The result is
/// the free-group normal form and does not depend on cancellation order.
pub fn free_reduce(word: &GroupWord) -> GroupWord {
    let mut stack: Vec<Letter> = Vec::with_capacity(word.len());
    for letter in &word.letters {
        match stack.last() {
            Some(top) if top.0 == letter.0 && top.1 == -letter.1 => {
                stack.pop();
            }
            _ => stack.push(letter.clone()),
        }
    }
    GroupWord { letters: stack }
}

/// The betweenness relator `X_{p,r} · X_{q,r}^{-1} · X_{p,q}^{-1}` of a
/// triple of distinct points. When `b(p,q,r)` holds these words generate
/// the quotient's relations; their `psi` image is always zero, and their
/// cost image is zero exactly on derived-betweenness triples.
pub fn relator(p: &str, q: &str, r: &str) -> Result<GroupWord> {
    if p == q || q == r || p == r {
        return Err(Error::input(format!(
            "relator needs three distinct points, got ({p:?},{q:?},{r:?})"
        )));
    }
    Ok(GroupWord {
        letters: vec![
            (Generator::new(p, r)?, 1),
            (Generator::new(q, r)?, -1),
            (Generator::new(p, q)?, -1),
        ],
    })
}

/// A finitely supported integer vector with coefficient sum zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntVectorG0 {
    coeffs: BTreeMap<String, i64>,
}

impl IntVectorG0 {
    pub fn zero() -> Self {
        IntVectorG0::default()
    }

    /// Builds from a coefficient map, rejecting a nonzero sum.
    pub fn new(coeffs: BTreeMap<String, i64>) -> Result<Self> {
        let sum: i64 = coeffs.values().sum();
        if sum != 0 {
            return Err(Error::domain(format!(
                "coefficient sum must be zero, got {sum}"
            )));
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| *c != 0).collect();
        Ok(IntVectorG0 { coeffs })
    }

    pub fn coeffs(&self) -> &BTreeMap<String, i64> {
        &self.coeffs
    }

    pub fn get(&self, label: &str) -> i64 {
        self.coeffs.get(label).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &IntVectorG0) -> IntVectorG0 {
        let mut coeffs = self.coeffs.clone();
        for (label, c) in &other.coeffs {
            let entry = coeffs.entry(label.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                coeffs.remove(label);
            }
        }
        IntVectorG0 { coeffs }
    }

    /// Sum of absolute coefficients; preimage words have exactly half this
    /// many letters.
    pub fn total_variation(&self) -> i64 {
        self.coeffs.values().map(|c| c.abs()).sum()
    }
}

/// The abelianization homomorphism: each letter `X_{s,t}^e` contributes
/// `e * (delta_t - delta_s)`, so concatenation maps to vector addition and
/// every relator maps to zero.
pub fn psi(word: &GroupWord) -> IntVectorG0 {
    let mut coeffs: BTreeMap<String, i64> = BTreeMap::new();
    for (gen, exp) in word.letters() {
        let e = *exp as i64;
        for (label, delta) in [(gen.target(), e), (gen.source(), -e)] {
            let entry = coeffs.entry(label.to_string()).or_insert(0);
            *entry += delta;
            if *entry == 0 {
                coeffs.remove(label);
            }
        }
    }
    IntVectorG0 { coeffs }
}

/// A deterministic word mapping onto the given zero-sum vector: repeatedly
/// take the lexicographically least label with a negative coefficient and
/// the least with a positive one, emit that pair generator, and recurse.
/// The word has exactly `total_variation / 2` letters, all with exponent
/// +1, and `psi` of it returns the input.
pub fn psi_preimage(g: &IntVectorG0) -> GroupWord {
    let mut work = g.coeffs.clone();
    let mut picks: Vec<Generator> = Vec::new();
    loop {
        let s = work.iter().find(|(_, &c)| c < 0).map(|(l, _)| l.clone());
        let t = work.iter().find(|(_, &c)| c > 0).map(|(l, _)| l.clone());
        match (s, t) {
            (Some(s), Some(t)) => {
                for (label, delta) in [(&s, 1i64), (&t, -1i64)] {
                    let entry = work.entry(label.clone()).or_insert(0);
                    *entry += delta;
                    if *entry == 0 {
                        work.remove(label);
                    }
                }
                picks.push(Generator { source: s, target: t });
            }
            _ => break,
        }
    }
    // the pair picked first belongs at the end of the word
    let letters = picks.into_iter().rev().map(|g| (g, 1)).collect();
    GroupWord { letters }
}

/// The cost homomorphism: `sum of exp * c(source, target)` over the
/// letters. Every leg must be finite; words naming unreachable pairs lie
/// outside the finite-cost subgroup and are a domain error.
pub fn cost_hom(word: &GroupWord, space: &CostSpace) -> Result<Value> {
    let mut total = Value::zero();
    for (gen, exp) in word.letters() {
        let i = space.require_index(gen.source())?;
        let j = space.require_index(gen.target())?;
        match space.cost(i, j) {
            crate::value::ExtCost::Finite(c) => {
                let signed = if *exp > 0 { c.clone() } else { -c.clone() };
                total = total + signed;
            }
            crate::value::ExtCost::Infinity => {
                return Err(Error::domain(format!(
                    "letter {} -> {} has infinite cost",
                    gen.source(),
                    gen.target()
                )))
            }
        }
    }
    Ok(total)
}

/// A directed graph in which any two distinct vertices are joined by at
/// most one path. Such graphs are acyclic, and the quotient group over
/// their path betweenness is free on the edge and unreachable-pair
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquePathDigraph {
    vertices: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
    // path_count[u][v] saturated at 2; 1 means a unique path exists
    path_count: Vec<Vec<u8>>,
}

impl UniquePathDigraph {
    pub fn new(vertices: Vec<String>, edge_labels: &[(String, String)]) -> Result<Self> {
        let n = vertices.len();
        let index = |l: &str| -> Result<usize> {
            vertices
                .iter()
                .position(|v| v == l)
                .ok_or_else(|| Error::input(format!("unknown vertex {l:?}")))
        };
        let mut edges = BTreeSet::new();
        for (a, b) in edge_labels {
            let (i, j) = (index(a)?, index(b)?);
            if i == j {
                return Err(Error::input(format!("self-loop at {a:?} is not allowed")));
            }
            edges.insert((i, j));
        }

        // acyclicity by Kahn's algorithm
        let mut indeg = vec![0usize; n];
        for &(_, j) in &edges {
            indeg[j] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &(a, b) in &edges {
                if a == v {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        queue.push(b);
                    }
                }
            }
        }
        if seen != n {
            return Err(Error::structure(
                "digraph has a directed cycle, so paths are not unique".to_string(),
            ));
        }

        // saturating path counts: count(u,v) = sum over edges (u,x) of count(x,v)
        let mut path_count = vec![vec![0u8; n]; n];
        fn count(
            u: usize,
            v: usize,
            edges: &BTreeSet<(usize, usize)>,
            memo: &mut Vec<Vec<Option<u8>>>,
        ) -> u8 {
            if u == v {
                return 1;
            }
            if let Some(c) = memo[u][v] {
                return c;
            }
            let mut total: u8 = 0;
            for &(a, b) in edges {
                if a == u {
                    total = total.saturating_add(count(b, v, edges, memo)).min(2);
                }
            }
            memo[u][v] = Some(total);
            total
        }
        let mut memo = vec![vec![None; n]; n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    path_count[u][v] = count(u, v, &edges, &mut memo);
                    if path_count[u][v] >= 2 {
                        return Err(Error::structure(format!(
                            "two distinct paths from {} to {}",
                            vertices[u], vertices[v]
                        )));
                    }
                }
            }
        }
        Ok(UniquePathDigraph { vertices, edges, path_count })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    fn index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::structure(format!("letter endpoint {label:?} is not a vertex")))
    }

    /// The unique path from `u` to `v`, when one exists.
    fn path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        if self.path_count[u][v] == 0 {
            return None;
        }
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            let next = self
                .edges
                .iter()
                .filter(|&&(a, _)| a == cur)
                .map(|&(_, b)| b)
                .find(|&b| b == v || self.path_count[b][v] >= 1)
                .expect("path count said a path exists");
            path.push(next);
            cur = next;
        }
        Some(path)
    }
}

/// A generator structure with a known free base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RewriteStructure {
    /// Points in cyclic order; the base generators are the adjacent steps
    /// `X_{w_k, w_{k+1}}` (indices mod n), and `X_{w_k, w_{k+d}}` expands
    /// into the `d` adjacent steps along the arc.
    Cycle { order: Vec<String> },
    /// The base generators are the edges plus the unreachable ordered
    /// pairs; a reachable non-edge expands along its unique path.
    Digraph(UniquePathDigraph),
}

impl RewriteStructure {
    pub fn cycle(order: Vec<String>) -> Result<Self> {
        if order.len() < 2 {
            return Err(Error::input("a cycle needs at least two points"));
        }
        let set: BTreeSet<&String> = order.iter().collect();
        if set.len() != order.len() {
            return Err(Error::input("cycle order contains a repeated label"));
        }
        Ok(RewriteStructure::Cycle { order })
    }

    /// Cyclic order on the synthetic labels `w1..wn`.
    pub fn cycle_of_size(n: usize) -> Result<Self> {
        RewriteStructure::cycle((1..=n).map(|i| format!("w{i}")).collect())
    }

    pub fn digraph(vertices: Vec<String>, edges: &[(String, String)]) -> Result<Self> {
        Ok(RewriteStructure::Digraph(UniquePathDigraph::new(vertices, edges)?))
    }
}

/// Expands one positive generator into base generators. Exponents are
/// handled by [`expand_letter`]; base letters expand to themselves.
fn expand_generator(structure: &RewriteStructure, gen: &Generator) -> Result<GroupWord> {
    match structure {
        RewriteStructure::Cycle { order } => {
            let n = order.len();
            let pos = |l: &str| -> Result<usize> {
                order
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| Error::structure(format!("letter endpoint {l:?} is not on the cycle")))
            };
            let k = pos(gen.source())?;
            let m = pos(gen.target())?;
            let d = (n + m - k) % n;
            let letters = (0..d)
                .map(|j| {
                    let from = &order[(k + j) % n];
                    let to = &order[(k + j + 1) % n];
                    Generator::new(from.clone(), to.clone()).map(|g| (g, 1i8))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(GroupWord { letters })
        }
        RewriteStructure::Digraph(g) => {
            let u = g.index(gen.source())?;
            let v = g.index(gen.target())?;
            if g.has_edge(u, v) {
                return Ok(GroupWord::single(gen.clone()));
            }
            match g.path(u, v) {
                // unreachable pairs are base generators and stay put
                None => Ok(GroupWord::single(gen.clone())),
                Some(path) => {
                    let letters = path
                        .windows(2)
                        .map(|w| {
                            Generator::new(
                                g.vertices[w[0]].clone(),
                                g.vertices[w[1]].clone(),
                            )
                            .map(|gen| (gen, 1i8))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(GroupWord { letters })
                }
            }
        }
    }
}

/// Expands a single letter (generator with exponent) into base letters.
pub fn expand_letter(structure: &RewriteStructure, letter: &Letter) -> Result<GroupWord> {
    let expansion = expand_generator(structure, &letter.0)?;
    Ok(if letter.1 >= 0 { expansion } else { expansion.inverse() })
}

/// Substitutes every letter by its base expansion and freely reduces.
/// Because the quotient is free on the base for these structures, the
/// result is a normal form: two words are equal in the quotient iff their
/// rewrites coincide.
pub fn rewrite_to_base(word: &GroupWord, structure: &RewriteStructure) -> Result<GroupWord> {
    let mut out = GroupWord::empty();
    for letter in word.letters() {
        out = out.concat(&expand_letter(structure, letter)?);
    }
    Ok(free_reduce(&out))
}

/// Decides word equality in the quotient group of the given structure.
pub fn words_equal(
    w1: &GroupWord,
    w2: &GroupWord,
    structure: &RewriteStructure,
) -> Result<bool> {
    Ok(rewrite_to_base(w1, structure)? == rewrite_to_base(w2, structure)?)
}

/// The word homomorphism induced by a betweenness morphism: letters are
/// relabeled through the map. The map must send every triple of the source
/// relation into the target relation and must keep each letter's endpoints
/// distinct.
pub fn relabel_word(
    word: &GroupWord,
    map: &BTreeMap<String, String>,
    from: &crate::betweenness::BetweennessRelation,
    to: &crate::betweenness::BetweennessRelation,
) -> Result<GroupWord> {
    let image = |label: &str| -> Result<&String> {
        map.get(label)
            .ok_or_else(|| Error::input(format!("map is not total: missing {label:?}")))
    };
    let to_index = |label: &str| -> Result<usize> {
        to.ground()
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::input(format!("image label {label:?} is not in the target ground")))
    };
    for &(p, q, r) in from.triples() {
        let (ip, iq, ir) = (
            to_index(image(&from.ground()[p])?)?,
            to_index(image(&from.ground()[q])?)?,
            to_index(image(&from.ground()[r])?)?,
        );
        if !to.contains(ip, iq, ir) {
            return Err(Error::structure(format!(
                "map is not a betweenness morphism: the image of ({},{},{}) is missing",
                from.ground()[p],
                from.ground()[q],
                from.ground()[r]
            )));
        }
    }
    let letters = word
        .letters()
        .iter()
        .map(|(g, e)| {
            Generator::new(image(g.source())?.clone(), image(g.target())?.clone())
                .map_err(|_| {
                    Error::structure(format!(
                        "map collapses the letter {} -> {}",
                        g.source(),
                        g.target()
                    ))
                })
                .map(|g| (g, *e))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(free_reduce(&GroupWord { letters }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betweenness::derive_betweenness;
    use crate::gallery;
    use proptest::prelude::*;

    fn gen(s: &str, t: &str) -> Generator {
        Generator::new(s, t).unwrap()
    }

    fn word(letters: &[(&str, &str, i8)]) -> GroupWord {
        GroupWord::new(
            letters
                .iter()
                .map(|&(s, t, e)| (gen(s, t), e))
                .collect(),
        )
        .unwrap()
    }

    /// One cancellation at a time, scanning from the left each time.
    fn reduce_by_repeated_scan(word: &GroupWord) -> GroupWord {
        let mut letters = word.letters().to_vec();
        loop {
            let mut cancelled = false;
            for i in 0..letters.len().saturating_sub(1) {
                if letters[i].0 == letters[i + 1].0 && letters[i].1 == -letters[i + 1].1 {
                    letters.drain(i..=i + 1);
                    cancelled = true;
                    break;
                }
            }
            if !cancelled {
                return GroupWord { letters };
            }
        }
    }

    #[test]
    fn adjacent_inverse_pair_cancels() {
        let w = word(&[("a", "b", 1), ("a", "b", -1)]);
        assert!(free_reduce(&w).is_empty());
    }

    #[test]
    fn reduced_words_are_fixed() {
        let w = word(&[("a", "b", 1), ("b", "c", 1), ("a", "b", -1)]);
        assert!(w.is_reduced());
        assert_eq!(free_reduce(&w), w);
    }

    #[test]
    fn relator_shape_and_errors() {
        let r = relator("p", "q", "r").unwrap();
        assert_eq!(
            r,
            word(&[("p", "r", 1), ("q", "r", -1), ("p", "q", -1)])
        );
        assert!(relator("p", "p", "r").is_err());
    }

    #[test]
    fn psi_of_a_single_letter() {
        let v = psi(&word(&[("s", "t", 1)]));
        assert_eq!(v.get("t"), 1);
        assert_eq!(v.get("s"), -1);
        assert_eq!(v.total_variation(), 2);
    }

    #[test]
    fn psi_kills_relators() {
        let r = relator("a", "b", "c").unwrap();
        assert!(psi(&r).is_zero());
    }

    #[test]
    fn psi_of_the_empty_word_is_zero() {
        assert!(psi(&GroupWord::empty()).is_zero());
    }

    #[test]
    fn preimage_of_zero_is_empty() {
        assert!(psi_preimage(&IntVectorG0::zero()).is_empty());
    }

    #[test]
    fn preimage_of_a_generator_image() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert("s".to_string(), -1);
        coeffs.insert("t".to_string(), 1);
        let g = IntVectorG0::new(coeffs).unwrap();
        assert_eq!(psi_preimage(&g), word(&[("s", "t", 1)]));
    }

    #[test]
    fn nonzero_sum_is_rejected() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert("a".to_string(), 2);
        assert!(IntVectorG0::new(coeffs).is_err());
    }

    #[test]
    fn cost_hom_on_the_interval() {
        // c(1/5, 4/5) on the 6-point interval grid is 3/5
        let s = gallery::interval_space(6);
        let w = word(&[("1/5", "4/5", 1)]);
        assert_eq!(cost_hom(&w, &s).unwrap(), Value::ratio(3, 5));
        assert_eq!(cost_hom(&w.inverse(), &s).unwrap(), Value::ratio(-3, 5));
        // going left is unreachable
        assert!(cost_hom(&word(&[("4/5", "1/5", 1)]), &s).is_err());
    }

    #[test]
    fn cost_hom_kills_betweenness_relators() {
        let s = gallery::circle_space(8);
        let rel = derive_betweenness(&s);
        for &(p, q, r) in rel.triples() {
            let w = relator(s.label(p), s.label(q), s.label(r)).unwrap();
            assert!(cost_hom(&w, &s).unwrap().is_zero());
        }
    }

    #[test]
    fn cycle_skip_generator_expands_to_adjacent_steps() {
        let structure = RewriteStructure::cycle_of_size(5).unwrap();
        let w = word(&[("w1", "w3", 1)]);
        let expanded = rewrite_to_base(&w, &structure).unwrap();
        assert_eq!(expanded, word(&[("w1", "w2", 1), ("w2", "w3", 1)]));
    }

    #[test]
    fn cycle_relator_rewrites_to_the_empty_word() {
        let structure = RewriteStructure::cycle_of_size(5).unwrap();
        let r = relator("w1", "w2", "w3").unwrap();
        assert!(rewrite_to_base(&r, &structure).unwrap().is_empty());
        // wrap-around triple in cyclic order
        let r = relator("w4", "w5", "w2").unwrap();
        assert!(rewrite_to_base(&r, &structure).unwrap().is_empty());
    }

    #[test]
    fn cycle_equality_of_skip_and_steps() {
        let structure = RewriteStructure::cycle_of_size(5).unwrap();
        let skip = word(&[("w1", "w3", 1)]);
        let steps = word(&[("w1", "w2", 1), ("w2", "w3", 1)]);
        assert!(words_equal(&skip, &steps, &structure).unwrap());
        let other = word(&[("w2", "w3", 1)]);
        assert!(!words_equal(&word(&[("w1", "w2", 1)]), &other, &structure).unwrap());
    }

    #[test]
    fn dag_path_expansion_and_unreachable_base() {
        let structure = RewriteStructure::digraph(
            vec!["a".into(), "b".into(), "c".into()],
            &[("a".into(), "b".into()), ("b".into(), "c".into())],
        )
        .unwrap();
        let expanded = rewrite_to_base(&word(&[("a", "c", 1)]), &structure).unwrap();
        assert_eq!(expanded, word(&[("a", "b", 1), ("b", "c", 1)]));
        // c cannot reach a, so the letter is base and stays
        let stays = rewrite_to_base(&word(&[("c", "a", 1)]), &structure).unwrap();
        assert_eq!(stays, word(&[("c", "a", 1)]));
    }

    #[test]
    fn two_paths_are_rejected() {
        let err = RewriteStructure::digraph(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            &[
                ("a".into(), "b".into()),
                ("b".into(), "d".into()),
                ("a".into(), "c".into()),
                ("c".into(), "d".into()),
            ],
        );
        assert!(matches!(err, Err(Error::Structure(_))));
    }

    #[test]
    fn directed_cycle_is_rejected() {
        let err = RewriteStructure::digraph(
            vec!["a".into(), "b".into()],
            &[("a".into(), "b".into()), ("b".into(), "a".into())],
        );
        assert!(matches!(err, Err(Error::Structure(_))));
    }

    #[test]
    fn foreign_letter_is_a_structure_error() {
        let structure = RewriteStructure::cycle_of_size(4).unwrap();
        let w = word(&[("x", "w1", 1)]);
        assert!(matches!(
            rewrite_to_base(&w, &structure),
            Err(Error::Structure(_))
        ));
    }

    #[test]
    fn conjugating_by_a_relator_does_not_change_words() {
        let structure = RewriteStructure::cycle_of_size(6).unwrap();
        let w = word(&[("w2", "w5", 1), ("w1", "w2", -1)]);
        let r = relator("w2", "w3", "w4").unwrap();
        let conj = r.concat(&w).concat(&r.inverse());
        assert!(words_equal(&w, &conj, &structure).unwrap());
    }

    #[test]
    fn relabeling_through_a_betweenness_morphism() {
        // embed a 4-point interval into a 6-point one via index doubling-ish map
        let small = gallery::interval_space(3); // labels 0, 1/2, 1
        let big = gallery::interval_space(5); // labels 0, 1/4, 1/2, 3/4, 1
        let b1 = derive_betweenness(&small);
        let b2 = derive_betweenness(&big);
        let mut map = BTreeMap::new();
        map.insert("0".to_string(), "0".to_string());
        map.insert("1/2".to_string(), "1/2".to_string());
        map.insert("1".to_string(), "1".to_string());
        let w = word(&[("0", "1/2", 1), ("1/2", "1", 1)]);
        let image = relabel_word(&w, &map, &b1, &b2).unwrap();
        assert_eq!(image, w);

        // collapsing map is rejected for letters it collapses
        let mut collapse = map.clone();
        collapse.insert("1/2".to_string(), "0".to_string());
        assert!(relabel_word(&w, &collapse, &b1, &b2).is_err());
    }

    proptest! {
        #[test]
        fn reduction_matches_the_naive_oracle(
            raw in proptest::collection::vec((0usize..4, 0usize..4, proptest::bool::ANY), 0..40)
        ) {
            let labels = ["a", "b", "c", "d"];
            let letters: Vec<Letter> = raw
                .into_iter()
                .filter(|(s, t, _)| s != t)
                .map(|(s, t, pos)| (gen(labels[s], labels[t]), if pos { 1 } else { -1 }))
                .collect();
            let w = GroupWord::new(letters).unwrap();
            let fast = free_reduce(&w);
            prop_assert_eq!(fast.clone(), reduce_by_repeated_scan(&w));
            prop_assert!(fast.is_reduced());
        }

        #[test]
        fn psi_is_a_homomorphism(
            raw1 in proptest::collection::vec((0usize..5, 0usize..5, proptest::bool::ANY), 0..12),
            raw2 in proptest::collection::vec((0usize..5, 0usize..5, proptest::bool::ANY), 0..12),
        ) {
            let mk = |raw: Vec<(usize, usize, bool)>| {
                GroupWord::new(
                    raw.into_iter()
                        .filter(|(s, t, _)| s != t)
                        .map(|(s, t, pos)| {
                            (gen(&format!("x{s}"), &format!("x{t}")), if pos { 1 } else { -1 })
                        })
                        .collect(),
                )
                .unwrap()
            };
            let (w1, w2) = (mk(raw1), mk(raw2));
            prop_assert_eq!(psi(&w1.concat(&w2)), psi(&w1).add(&psi(&w2)));
            // reduction never changes the image
            prop_assert_eq!(psi(&free_reduce(&w1)), psi(&w1));
        }

        #[test]
        fn preimage_round_trip(
            moves in proptest::collection::vec((0usize..6, 0usize..6), 0..10)
        ) {
            // build a random zero-sum vector as a sum of generator images
            let mut g = IntVectorG0::zero();
            for (s, t) in moves {
                if s == t {
                    continue;
                }
                let mut coeffs = BTreeMap::new();
                coeffs.insert(format!("x{s}"), -1);
                coeffs.insert(format!("x{t}"), 1);
                g = g.add(&IntVectorG0::new(coeffs).unwrap());
            }
            let w = psi_preimage(&g);
            prop_assert_eq!(psi(&w), g.clone());
            prop_assert_eq!(w.len() as i64, g.total_variation() / 2);
        }

        #[test]
        fn rewriting_preserves_psi(
            raw in proptest::collection::vec((0usize..6, 0usize..6, proptest::bool::ANY), 0..10)
        ) {
            let structure = RewriteStructure::cycle_of_size(6).unwrap();
            let letters: Vec<Letter> = raw
                .into_iter()
                .filter(|(s, t, _)| s != t)
                .map(|(s, t, pos)| {
                    (gen(&format!("w{}", s + 1), &format!("w{}", t + 1)), if pos { 1 } else { -1 })
                })
                .collect();
            let w = GroupWord::new(letters).unwrap();
            let rewritten = rewrite_to_base(&w, &structure).unwrap();
            prop_assert_eq!(psi(&rewritten), psi(&w));
        }
    }
}
