//! The density witness family: labeled graphs built by the label shift
//! [`psi`] and the column expansion [`apply_a`], their counting formulas, and
//! concrete realizations as finite subgraphs of the Cayley graph of F in all
//! generators `x0, x1, x2, ...`.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::diagrams::{to_normal_form, Diagram};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subgraphs::{full_subgraph, full_subgraph2, Subgraph};
use crate::words::{GenWord, Letter};
use crate::Count;

/// Largest `n` accepted by [`gamma`]; `Catalan(14) = 2674440` vertices.
pub const GAMMA_MAX_N: usize = 14;

/// Largest vertex count accepted by [`gamma_nm_concrete`].
pub const CONCRETE_MAX_VERTICES: usize = 1_000_000;

/// Edge `from -> to` labeled `x_label`; loops have `from == to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: usize,
}

/// Finite graph with vertices `0..vertex_count` and labeled edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LabeledGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl LabeledGraph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<LabeledGraph> {
        if let Some(e) = edges.iter().find(|e| e.from >= vertex_count || e.to >= vertex_count) {
            return Err(Error::Domain(format!("edge {e:?} leaves the vertex set")));
        }
        Ok(LabeledGraph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Largest incident label, loops included; `None` for isolated vertices.
    pub fn ranks(&self) -> Vec<Option<usize>> {
        let mut rank = vec![None; self.vertex_count];
        for e in &self.edges {
            for v in [e.from, e.to] {
                rank[v] = rank[v].max(Some(e.label));
            }
        }
        rank
    }

    pub fn rank(&self, v: usize) -> Option<usize> {
        self.ranks()[v]
    }

    /// Degrees; a loop adds 2.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for e in &self.edges {
            deg[e.from] += 1;
            deg[e.to] += 1;
        }
        deg
    }

    pub fn degree_sum(&self) -> usize {
        2 * self.edges.len()
    }

    /// Average degree, loops counted twice.
    pub fn density<S: Scalar>(&self) -> Result<S> {
        if self.vertex_count == 0 {
            return Err(Error::Domain("empty graph".into()));
        }
        Ok(S::ratio(self.degree_sum(), self.vertex_count))
    }
}

/// One vertex with a loop labeled `x_n`.
pub fn xi_single(n: usize) -> LabeledGraph {
    LabeledGraph { vertex_count: 1, edges: vec![Edge { from: 0, to: 0, label: n }] }
}

/// Path on `m + 1` vertices with `m` edges labeled `x_n`, oriented
/// `k -> k - 1`.
pub fn xi_path(n: usize, m: usize) -> LabeledGraph {
    LabeledGraph { vertex_count: m + 1, edges: (1..=m).map(|k| Edge { from: k, to: k - 1, label: n }).collect() }
}

/// Shifts every label up by one.
pub fn psi(g: &LabeledGraph) -> LabeledGraph {
    LabeledGraph {
        vertex_count: g.vertex_count,
        edges: g.edges.iter().map(|e| Edge { label: e.label + 1, ..*e }).collect(),
    }
}

/// Column expansion along `x_i`. See [`apply_a_traced`].
pub fn apply_a(i: usize, g: &LabeledGraph) -> Result<LabeledGraph> {
    apply_a_traced(i, g).map(|(h, _)| h)
}

/// Replaces each vertex `v` of rank `r` by a column `v_0, ..., v_{r-i-1}`
/// with edges `v_k -> v_{k-1}` labeled `x_i`; an edge `v -> w` labeled
/// `x_j`, `j > i`, becomes the edges `v_k -> w_k` labeled `x_{j-k}` for
/// `k < j - i`. Edges with `j <= i` are copied between the column tops.
///
/// Also returns, for each new vertex, its origin `(v, k)`.
pub fn apply_a_traced(i: usize, g: &LabeledGraph) -> Result<(LabeledGraph, Vec<(usize, usize)>)> {
    let ranks = g.ranks();
    let mut start = Vec::with_capacity(g.vertex_count);
    let mut origin = Vec::new();
    for (v, r) in ranks.iter().enumerate() {
        let r = match r {
            Some(r) if *r > i => *r,
            _ => return Err(Error::Domain(format!("vertex {v} has rank {r:?}, not above {i}"))),
        };
        start.push(origin.len());
        origin.extend((0..r - i).map(|k| (v, k)));
    }
    let mut edges = Vec::new();
    for (id, &(v, k)) in origin.iter().enumerate() {
        if k > 0 {
            edges.push(Edge { from: id, to: start[v] + k - 1, label: i });
        }
    }
    for e in &g.edges {
        if e.label <= i {
            edges.push(Edge { from: start[e.from], to: start[e.to], label: e.label });
            continue;
        }
        for k in 0..e.label - i {
            edges.push(Edge { from: start[e.from] + k, to: start[e.to] + k, label: e.label - k });
        }
    }
    Ok((LabeledGraph { vertex_count: origin.len(), edges }, origin))
}

/// `Γ_1 = xi_single(1)`, `Γ_{n+1} = apply_a(0, psi(Γ_n))`.
pub fn gamma(n: usize) -> Result<LabeledGraph> {
    if n == 0 {
        return Err(Error::Domain("gamma(n) needs n >= 1".into()));
    }
    if n > GAMMA_MAX_N {
        return Err(Error::SizeLimit { what: format!("gamma({n})"), limit: GAMMA_MAX_N });
    }
    let mut g = xi_single(1);
    for _ in 1..n {
        g = apply_a(0, &psi(&g))?;
    }
    Ok(g)
}

/// Drops every edge labeled `x_k` with `k >= 2`.
pub fn bar(g: &LabeledGraph) -> LabeledGraph {
    LabeledGraph { vertex_count: g.vertex_count, edges: g.edges.iter().copied().filter(|e| e.label <= 1).collect() }
}

/// `row[k]` = number of vertices of rank `k`.
pub fn rank_counts(g: &LabeledGraph) -> Vec<usize> {
    let ranks: Vec<usize> = g.ranks().into_iter().flatten().collect();
    let mut row = vec![0; ranks.iter().max().map_or(0, |r| r + 1)];
    for r in ranks {
        row[r] += 1;
    }
    row
}

/// `row[k]` = number of edges labeled `x_k`; a loop counts once.
pub fn edge_label_counts(g: &LabeledGraph) -> Vec<usize> {
    let mut row = vec![0; g.edges.iter().map(|e| e.label + 1).max().unwrap_or(0)];
    for e in &g.edges {
        row[e.label] += 1;
    }
    row
}

/// `row[d]` = number of vertices of degree `d` (loops count 2).
pub fn degree_histogram(g: &LabeledGraph) -> Vec<usize> {
    let deg = g.degrees();
    let mut row = vec![0; deg.iter().max().map_or(0, |d| d + 1)];
    for d in deg {
        row[d] += 1;
    }
    row
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn exact_div(num: BigUint, den: BigUint) -> Count {
    debug_assert!((&num % &den).is_zero(), "{num} / {den} is not integral");
    num / den
}

pub fn catalan(n: usize) -> Count {
    exact_div(factorial(2 * n), factorial(n) * factorial(n + 1))
}

/// Vertices of rank `k` in `Γ_n`: `k (2n-k-1)! / ((n-k)! n!)`.
pub fn closed_a(n: usize, k: usize) -> Result<Count> {
    if k < 1 || k > n {
        return Err(Error::Domain(format!("closed_a needs 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(exact_div(factorial(2 * n - k - 1) * k, factorial(n - k) * factorial(n)))
}

/// Edges labeled `x_k` in `Γ_n`:
/// `(k+1)(2n-k-2)! / ((n-k)!(n+1)!) · (3n² - 3n(k+1) + k² + 2k)` for
/// `k < n`, and 1 for `k = n`.
pub fn closed_b(n: usize, k: usize) -> Result<Count> {
    if n == 0 || k > n {
        return Err(Error::Domain(format!("closed_b needs 0 <= k <= n, n >= 1, got n={n}, k={k}")));
    }
    if k == n {
        return Ok(Count::one());
    }
    if n == 1 {
        return Ok(Count::zero());
    }
    let poly = 3 * n * n + k * k + 2 * k - 3 * n * (k + 1);
    Ok(exact_div(factorial(2 * n - k - 2) * ((k + 1) * poly), factorial(n - k) * factorial(n + 1)))
}

/// `b_{n0} = b_{n1} = 3(2n-2)! / ((n-2)!(n+1)!)`, `n >= 2`.
pub fn closed_b_low(n: usize) -> Result<Count> {
    if n < 2 {
        return Err(Error::Domain(format!("closed_b_low needs n >= 2, got {n}")));
    }
    Ok(exact_div(factorial(2 * n - 2) * 3u32, factorial(n - 2) * factorial(n + 1)))
}

/// Degree-`d` vertex counts of `bar(Γ_n)` for `d ∈ {2, 3, 4}`, `n >= 5`.
pub fn closed_nu(n: usize, d: usize) -> Result<Count> {
    if n < 5 {
        return Err(Error::Domain(format!("closed_nu needs n >= 5, got {n}")));
    }
    match d {
        2 => Ok(exact_div(factorial(2 * n - 4) * 3u32, factorial(n - 2) * factorial(n - 1))),
        3 => Ok(exact_div(factorial(2 * n - 5) * (4 * (5 * n - 12)), factorial(n - 3) * factorial(n))),
        4 => Ok(exact_div(factorial(2 * n - 5) * 6u32, factorial(n - 5) * factorial(n + 1))),
        _ => Err(Error::Domain(format!("closed_nu covers degrees 2, 3, 4, got {d}"))),
    }
}

/// `6(n-1) / (2n-1)`.
pub fn closed_density_bar<S: Scalar>(n: usize) -> Result<S> {
    if n < 2 {
        return Err(Error::Domain(format!("density_bar needs n >= 2, got {n}")));
    }
    Ok(S::ratio(6 * (n - 1), 2 * n - 1))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityBar<S> {
    pub measured: S,
    pub closed: S,
}

/// Density of `bar(Γ_n)`, measured and closed form.
pub fn density_bar<S: Scalar>(n: usize) -> Result<DensityBar<S>> {
    let closed = closed_density_bar(n)?;
    let measured = bar(&gamma(n)?).density()?;
    Ok(DensityBar { measured, closed })
}

/// The identities used to derive the closed forms, on measured rows of
/// `Γ_n` and `Γ_{n+1}`:
/// `a'[1] = a'[2] = Σ a`, `b'[i] = Σ_{k >= i-1} b[k]` for `i >= 1`,
/// `b'[0] = Σ k a[k]`.
pub fn recursions_hold(g: &LabeledGraph, next: &LabeledGraph) -> bool {
    let (a, b) = (rank_counts(g), edge_label_counts(g));
    let (a1, b1) = (rank_counts(next), edge_label_counts(next));
    let total: usize = a.iter().sum();
    let at = |row: &[usize], k: usize| row.get(k).copied().unwrap_or(0);
    at(&a1, 1) == total
        && at(&a1, 2) == total
        && at(&b1, 0) == a.iter().enumerate().map(|(k, c)| k * c).sum::<usize>()
        && (1..b1.len().max(b.len() + 1)).all(|i| at(&b1, i) == b.iter().skip(i - 1).sum::<usize>())
}

/// Checks run on a concrete realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConcreteChecks {
    /// Vertex diagrams are pairwise distinct.
    pub distinct_vertices: bool,
    /// `u · x_label == v` for every constructed edge.
    pub edges_verified: bool,
    /// Every Cayley edge labeled `x_k`, `k <= n`, between vertices is constructed.
    pub full: bool,
    /// No Cayley edge labeled `x_{n+1}` or `x_{n+2}` joins two vertices.
    pub spot_check_clean: bool,
    /// Each vertex normal form is `x_n^-a x_{n-2}^-b ... x_0^-c` (no positive
    /// letters, no `x_{n-1}`).
    pub monomial_shape: bool,
}

impl ConcreteChecks {
    pub fn all(&self) -> bool {
        self.distinct_vertices && self.edges_verified && self.full && self.spot_check_clean && self.monomial_shape
    }
}

/// `Γ_{n,m} = A_0 A_1 ... A_{n-2} Ξ_{n,m}` realized in F, with `Ξ_{n,m}` on
/// the elements `x_n^-k`, `0 <= k <= m`.
#[derive(Debug, Clone)]
pub struct ConcreteGamma {
    n: usize,
    m: usize,
    graph: LabeledGraph,
    diagrams: Vec<Diagram>,
    words: Vec<GenWord>,
    origin: Vec<usize>,
}

/// A block `V_k` of the column partition and its average degree.
#[derive(Debug, Clone, PartialEq)]
pub struct ColumnBlock<S> {
    pub origin: usize,
    pub size: usize,
    pub degree_sum: usize,
    pub rho: S,
}

pub fn gamma_nm_concrete(n: usize, m: usize) -> Result<ConcreteGamma> {
    if n < 2 || m < 1 {
        return Err(Error::Domain(format!("gamma_nm_concrete needs n >= 2, m >= 1, got n={n}, m={m}")));
    }
    if n > GAMMA_MAX_N {
        return Err(Error::SizeLimit { what: format!("Γ({n},{m})"), limit: GAMMA_MAX_N });
    }
    let predicted = catalan(n) * (m + 1);
    if predicted > BigUint::from(CONCRETE_MAX_VERTICES) {
        return Err(Error::SizeLimit {
            what: format!("Γ({n},{m}) with {predicted} vertices"),
            limit: CONCRETE_MAX_VERTICES,
        });
    }
    let mut graph = xi_path(n, m);
    let mut words: Vec<GenWord> = (0..=m).map(|k| GenWord::new(vec![Letter::neg(n); k])).collect();
    let mut diagrams: Vec<Diagram> = Vec::with_capacity(m + 1);
    let mut d = Diagram::identity();
    for _ in 0..=m {
        diagrams.push(d.clone());
        d = d.mul_letter(Letter::neg(n));
    }
    let mut origin: Vec<usize> = (0..=m).collect();
    for i in (0..n - 1).rev() {
        let (next, trace) = apply_a_traced(i, &graph)?;
        let mut nd = Vec::with_capacity(trace.len());
        let mut nw = Vec::with_capacity(trace.len());
        for &(v, k) in &trace {
            if k == 0 {
                nd.push(diagrams[v].clone());
                nw.push(words[v].clone());
            } else {
                let prev: &Diagram = nd.last().expect("column top precedes");
                nd.push(prev.mul_letter(Letter::neg(i)));
                let mut w = nw.last().cloned().expect("column top precedes");
                w.letters.push(Letter::neg(i));
                nw.push(w);
            }
        }
        origin = trace.iter().map(|&(v, _)| origin[v]).collect();
        graph = next;
        diagrams = nd;
        words = nw;
    }
    Ok(ConcreteGamma { n, m, graph, diagrams, words, origin })
}

impl ConcreteGamma {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn diagrams(&self) -> &[Diagram] {
        &self.diagrams
    }

    /// Construction word of each vertex.
    pub fn words(&self) -> &[GenWord] {
        &self.words
    }

    /// Index of the `Ξ_{n,m}` vertex each vertex descends from.
    pub fn origins(&self) -> &[usize] {
        &self.origin
    }

    /// Full subgraph on the vertices for the generators `x_0..=x_n`.
    pub fn subgraph(&self) -> Subgraph {
        full_subgraph(&self.diagrams, &(0..=self.n).collect::<Vec<_>>())
    }

    /// Full subgraph on the vertices for `x_0, x_1`.
    pub fn bar_subgraph(&self) -> Subgraph {
        full_subgraph2(&self.diagrams)
    }

    pub fn checks(&self) -> ConcreteChecks {
        let probe = full_subgraph(&self.diagrams, &(0..=self.n + 2).collect::<Vec<_>>());
        let distinct_vertices = probe.len() == self.diagrams.len();
        let edges_verified = self
            .graph
            .edges
            .iter()
            .all(|e| self.diagrams[e.from].mul_letter(Letter::pos(e.label)) == self.diagrams[e.to]);
        let built: BTreeSet<(usize, usize, usize)> = self.graph.edges.iter().map(|e| (e.from, e.to, e.label)).collect();
        let found: BTreeSet<(usize, usize, usize)> = probe.edges().iter().copied().collect();
        let full = distinct_vertices
            && built.len() == self.graph.edges.len()
            && found.iter().filter(|e| e.2 <= self.n).eq(built.iter());
        let spot_check_clean = found.iter().all(|e| e.2 <= self.n);
        let monomial_shape = self.diagrams.iter().all(|d| {
            let nf = to_normal_form(d);
            nf.pos.is_empty() && nf.neg.iter().all(|&j| j <= self.n && j + 1 != self.n)
        });
        ConcreteChecks { distinct_vertices, edges_verified, full, spot_check_clean, monomial_shape }
    }

    /// Blocks `V_0..V_m` by origin, with average degree in `sub`. `sub` must
    /// have been built from this realization ([`Self::subgraph`] or
    /// [`Self::bar_subgraph`]) so that vertex indices agree.
    pub fn column_partition<S: Scalar>(&self, sub: &Subgraph) -> Vec<ColumnBlock<S>> {
        assert_eq!(sub.len(), self.diagrams.len(), "subgraph does not match this realization");
        let deg = sub.degrees();
        let mut blocks: HashMap<usize, (usize, usize)> = HashMap::new();
        for (v, &k) in self.origin.iter().enumerate() {
            let b = blocks.entry(k).or_default();
            b.0 += 1;
            b.1 += deg[v];
        }
        (0..=self.m)
            .map(|k| {
                let (size, degree_sum) = blocks[&k];
                ColumnBlock { origin: k, size, degree_sum, rho: S::ratio(degree_sum, size) }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgraphs::Matching;
    use crate::Rational;

    fn big(n: usize) -> Count {
        Count::from(n)
    }

    #[test]
    fn seeds() {
        let g = xi_single(2);
        assert_eq!((g.vertex_count(), g.edges().len(), g.rank(0)), (1, 1, Some(2)));
        let p = xi_path(3, 2);
        assert_eq!((p.vertex_count(), edge_label_counts(&p)), (3, vec![0, 0, 0, 2]));
        assert!(xi_path(5, 4).ranks().iter().all(|r| *r == Some(5)));
        assert_eq!(psi(&xi_single(1)), xi_single(2));
        let h = psi(&xi_path(2, 3));
        assert_eq!(degree_histogram(&h), degree_histogram(&xi_path(2, 3)));
        assert!(h.ranks().iter().all(|r| *r == Some(3)));
    }

    #[test]
    fn column_expansion() {
        let g2 = apply_a(0, &xi_single(2)).unwrap();
        assert_eq!(g2, gamma(2).unwrap());
        assert_eq!(g2.vertex_count(), 2);
        let mut edges = g2.edges().to_vec();
        edges.sort();
        assert_eq!(
            edges,
            vec![
                Edge { from: 0, to: 0, label: 2 },
                Edge { from: 1, to: 0, label: 0 },
                Edge { from: 1, to: 1, label: 1 }
            ]
        );
        assert_eq!(g2.ranks(), vec![Some(2), Some(1)]);
        let mut r3: Vec<usize> = gamma(3).unwrap().ranks().into_iter().flatten().collect();
        r3.sort();
        assert_eq!(r3, vec![1, 1, 2, 2, 3]);
        // a rank-(i+1) vertex keeps a one-vertex column
        assert_eq!(apply_a(1, &xi_single(2)).unwrap().vertex_count(), 1);
        assert!(apply_a(2, &xi_single(2)).is_err());
        assert!(apply_a(0, &LabeledGraph::new(1, vec![]).unwrap()).is_err());
    }

    #[test]
    fn small_gammas() {
        let g1 = gamma(1).unwrap();
        assert_eq!(g1, xi_single(1));
        assert_eq!(gamma(4).unwrap().vertex_count(), 14);
        assert_eq!(gamma(6).unwrap().vertex_count(), 132);
        assert!(gamma(0).is_err());
        assert!(matches!(gamma(GAMMA_MAX_N + 1), Err(Error::SizeLimit { .. })));
        let b2 = bar(&gamma(2).unwrap());
        assert_eq!(edge_label_counts(&b2), vec![1, 1]);
        assert!(bar(&xi_single(3)).edges().is_empty());
        assert_eq!(edge_label_counts(&g1), vec![0, 1]);
    }

    #[test]
    fn closed_forms() {
        assert_eq!((1..=3).map(|k| closed_a(3, k).unwrap()).collect::<Vec<_>>(), vec![big(2), big(2), big(1)]);
        assert_eq!(closed_a(4, 1).unwrap(), big(5));
        for n in 1..=20 {
            let s: Count = (1..=n).map(|k| closed_a(n, k).unwrap()).sum();
            assert_eq!(s, catalan(n));
        }
        assert_eq!(closed_b(3, 0).unwrap(), big(3));
        assert_eq!((closed_b(2, 0).unwrap(), closed_b(2, 1).unwrap()), (big(1), big(1)));
        assert_eq!((closed_b(1, 0).unwrap(), closed_b(1, 1).unwrap()), (big(0), big(1)));
        for n in 2..=20 {
            assert_eq!(closed_b(n, 0).unwrap(), closed_b_low(n).unwrap());
            assert_eq!(closed_b(n, 1).unwrap(), closed_b_low(n).unwrap());
        }
        assert_eq!([2, 3, 4].map(|d| closed_nu(5, d).unwrap()), [big(15), big(26), big(1)]);
        assert_eq!([2, 3, 4].map(|d| closed_nu(6, d).unwrap()), [big(42), big(84), big(6)]);
        // the degree-2 share decreases to 3/16 at rate O(1/n)
        let share = |n: usize| {
            let r = Rational::new(closed_nu(n, 2).unwrap().into(), catalan(n).into());
            crate::scalar::rational_to_f64(&r)
        };
        assert!((share(20) - 0.218_295_2).abs() < 1e-6);
        assert!((share(50) - 3.0 / 16.0).abs() < 0.02);
        assert!(share(20) > share(50) && share(50) > share(200) && share(200) > 3.0 / 16.0);
        assert!(closed_a(3, 0).is_err() && closed_b(2, 3).is_err() && closed_nu(4, 2).is_err());
    }

    #[test]
    fn measured_rows_match() {
        let mut prev = gamma(1).unwrap();
        for n in 2..=9 {
            let g = gamma(n).unwrap();
            assert!(recursions_hold(&prev, &g), "recursions at {n}");
            let a = rank_counts(&g);
            let b = edge_label_counts(&g);
            for k in 1..=n {
                assert_eq!(big(a[k]), closed_a(n, k).unwrap());
            }
            for k in 0..=n {
                assert_eq!(big(b[k]), closed_b(n, k).unwrap());
            }
            assert_eq!(big(g.vertex_count()), catalan(n));
            let d = density_bar::<Rational>(n).unwrap();
            assert_eq!(d.measured, d.closed);
            if n >= 5 {
                let nu = degree_histogram(&bar(&g));
                assert_eq!(nu.len(), 5);
                assert_eq!((nu[0], nu[1]), (0, 0));
                for deg in 2..=4 {
                    assert_eq!(big(nu[deg]), closed_nu(n, deg).unwrap());
                }
            }
            prev = g;
        }
        assert_eq!(closed_density_bar::<Rational>(2).unwrap(), Rational::from_integer(2.into()));
        assert_eq!(closed_density_bar::<Rational>(4).unwrap(), Rational::new(18.into(), 7.into()));
    }

    #[test]
    fn concrete_small() {
        let c = gamma_nm_concrete(2, 2).unwrap();
        assert_eq!(c.diagrams().len(), 6);
        assert!(c.checks().all(), "{:?}", c.checks());
        let blocks = c.column_partition::<Rational>(&c.subgraph());
        assert!(blocks.iter().all(|b| b.size == 2));
        let c = gamma_nm_concrete(3, 6).unwrap();
        assert!(c.checks().all(), "{:?}", c.checks());
        let sub = c.bar_subgraph();
        let blocks = c.column_partition::<Rational>(&sub);
        assert!(blocks.iter().all(|b| b.size == 5));
        assert!(blocks[1..6].windows(2).all(|w| w[0].rho == w[1].rho));
        let total: usize = blocks.iter().map(|b| b.degree_sum).sum();
        assert_eq!(Rational::new(total.into(), sub.len().into()), sub.density::<Rational>().unwrap());
        assert!(sub.min_degree().unwrap() <= 2);
        assert!(matches!(sub.two_one_matching(), Matching::Assignment(_)));
        for (w, d) in c.words().iter().zip(c.diagrams()) {
            assert_eq!(&crate::diagrams::from_word(w), d);
        }
        assert!(gamma_nm_concrete(1, 3).is_err() && gamma_nm_concrete(3, 0).is_err());
    }

    #[test]
    fn concrete_density_tends_to_bar_density() {
        let c = gamma_nm_concrete(4, 30).unwrap();
        assert!(c.checks().all());
        let blocks = c.column_partition::<Rational>(&c.bar_subgraph());
        let interior = &blocks[1].rho;
        assert!(blocks[1..30].iter().all(|b| &b.rho == interior));
        assert_eq!(interior, &Rational::new(18.into(), 7.into()));
    }
}
