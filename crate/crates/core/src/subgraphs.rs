//! Finite full subgraphs of the Cayley graph and their isoperimetric data:
//! density, boundary, the degree bookkeeping `q(Y)`, the doubling inequality
//! `#B1(Y) >= 2 #Y` and doubling assignments ((2,1)-matchings).

use std::collections::HashMap;

use serde::Serialize;

use crate::diagrams::Diagram;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::scalar::Scalar;
use crate::words::Letter;

/// A full subgraph: all Cayley edges `u -> u·x_k` between its vertices, for
/// `k` in `generators`.
#[derive(Debug, Clone)]
pub struct Subgraph {
    generators: Vec<usize>,
    vertices: Vec<Diagram>,
    index: HashMap<String, usize>,
    /// `(u, v, k)` with `vertices[u] · x_k = vertices[v]`.
    edges: Vec<(usize, usize, usize)>,
}

/// Number of vertices of each degree `0..=2m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub counts: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DoublingCheck {
    pub holds: bool,
    pub ball_size: usize,
    pub twice_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Matching {
    /// `image[b]` for each element of `B1(Y)` (vertices of `Y` first, in
    /// order, then [`Subgraph::boundary`]): the index in `Y` it is sent to,
    /// or `None` if unused. Every vertex of `Y` receives at least two.
    Assignment(Vec<Option<usize>>),
    /// Vertex indices `Y'` with `#B1(Y') < 2 #Y'`.
    Violation(Vec<usize>),
}

impl Matching {
    pub fn is_found(&self) -> bool {
        matches!(self, Matching::Assignment(_))
    }
}

/// `(#∂Y/#Y, 2m - δ(Y), 2m·#∂Y/#Y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FolnerTriple<S> {
    pub boundary_ratio: S,
    pub defect: S,
    pub scaled_boundary_ratio: S,
}

impl<S: Scalar> FolnerTriple<S> {
    pub fn chain_holds(&self) -> bool {
        self.boundary_ratio <= self.defect && self.defect <= self.scaled_boundary_ratio
    }
}

/// Full subgraph on the distinct elements of `elems` for the generators
/// `x_k`, `k` in `generators`.
pub fn full_subgraph<'a>(elems: impl IntoIterator<Item = &'a Diagram>, generators: &[usize]) -> Subgraph {
    let mut vertices = Vec::new();
    let mut index = HashMap::new();
    for d in elems {
        index.entry(d.key()).or_insert_with(|| {
            vertices.push(d.clone());
            vertices.len() - 1
        });
    }
    let mut edges = Vec::new();
    for (u, d) in vertices.iter().enumerate() {
        for &k in generators {
            if let Some(&v) = index.get(&d.mul_letter(Letter::pos(k)).key()) {
                edges.push((u, v, k));
            }
        }
    }
    let mut generators = generators.to_vec();
    generators.sort_unstable();
    generators.dedup();
    Subgraph { generators, vertices, index, edges }
}

/// Full subgraph of the two-generator Cayley graph.
pub fn full_subgraph2<'a>(elems: impl IntoIterator<Item = &'a Diagram>) -> Subgraph {
    full_subgraph(elems, &[0, 1])
}

impl Subgraph {
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn vertices(&self) -> &[Diagram] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, d: &Diagram) -> bool {
        self.index.contains_key(&d.key())
    }

    pub fn index_of(&self, d: &Diagram) -> Option<usize> {
        self.index.get(&d.key()).copied()
    }

    fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.generators.iter().flat_map(|&k| [Letter::pos(k), Letter::neg(k)])
    }

    /// Full Cayley degree `2m`.
    pub fn ambient_degree(&self) -> usize {
        2 * self.generators.len()
    }

    /// Degree of every vertex, counting oriented edges leaving it.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(u, v, _) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut counts = vec![0; self.ambient_degree() + 1];
        for d in self.degrees() {
            counts[d] += 1;
        }
        DegreeProfile { counts }
    }

    fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            return Err(Error::Domain("empty subgraph".into()));
        }
        Ok(())
    }

    /// Average degree `2 #edges / #vertices`.
    pub fn density<S: Scalar>(&self) -> Result<S> {
        self.require_nonempty()?;
        Ok(S::ratio(2 * self.edges.len(), self.vertices.len()))
    }

    /// `3 q0 + 2 q1 + q2 - q4`; nonnegative exactly when the density is at most 3.
    pub fn q_value(&self) -> Result<i64> {
        if self.generators != [0, 1] {
            return Err(Error::Domain("q(Y) is defined for the generators x0, x1".into()));
        }
        let q = self.degree_profile().counts;
        Ok(3 * q[0] as i64 + 2 * q[1] as i64 + q[2] as i64 - q[4] as i64)
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.require_nonempty()?;
        Ok(self.degrees().into_iter().min().expect("nonempty"))
    }

    /// `B1(Y) \ Y`, in first-discovery order.
    pub fn boundary(&self) -> Vec<Diagram> {
        self.boundary_with_links().0
    }

    /// The boundary together with, for each vertex of `Y`, the indices into
    /// `Y ++ boundary` of its neighbors.
    fn boundary_with_links(&self) -> (Vec<Diagram>, Vec<Vec<usize>>) {
        let n = self.vertices.len();
        let mut boundary = Vec::new();
        let mut bindex: HashMap<String, usize> = HashMap::new();
        let mut links = vec![Vec::new(); n];
        for (u, d) in self.vertices.iter().enumerate() {
            for a in self.letters() {
                let e = d.mul_letter(a);
                let key = e.key();
                let j = match self.index.get(&key) {
                    Some(&v) => v,
                    None => *bindex.entry(key).or_insert_with(|| {
                        boundary.push(e);
                        n + boundary.len() - 1
                    }),
                };
                links[u].push(j);
            }
        }
        (boundary, links)
    }

    pub fn doubling_check(&self) -> DoublingCheck {
        let ball_size = self.len() + self.boundary().len();
        let twice_size = 2 * self.len();
        DoublingCheck { holds: ball_size >= twice_size, ball_size, twice_size }
    }

    /// Finds a map from `B1(Y)` to `Y ∪ {unused}` moving every point at most
    /// one step and giving every vertex of `Y` at least two preimages, or a
    /// subset `Y'` violating the doubling inequality. Solved as an integral
    /// max-flow; the violating subset is read off the minimum cut.
    pub fn two_one_matching(&self) -> Matching {
        let n = self.len();
        let (boundary, links) = self.boundary_with_links();
        let left = n + boundary.len();
        let (source, sink) = (left + n, left + n + 1);
        let mut net = FlowNetwork::new(left + n + 2);
        for b in 0..left {
            net.add_arc(source, b, 1);
        }
        let mut middle = Vec::new();
        for (y, ns) in links.iter().enumerate() {
            let mut sources: Vec<usize> = ns.clone();
            sources.push(y);
            sources.sort_unstable();
            sources.dedup();
            for b in sources {
                middle.push((net.add_arc(b, left + y, u64::MAX / 4), b, y));
            }
        }
        for y in 0..n {
            net.add_arc(left + y, sink, 2);
        }
        let flow = net.max_flow(source, sink);
        if flow == 2 * n as u64 {
            let mut image = vec![None; left];
            for (id, b, y) in middle {
                if net.flow_on(id) > 0 {
                    image[b] = Some(y);
                }
            }
            Matching::Assignment(image)
        } else {
            let reach = net.residual_reachable(source);
            Matching::Violation((0..n).filter(|&y| !reach[left + y]).collect())
        }
    }

    pub fn folner_inequalities<S: Scalar>(&self) -> Result<FolnerTriple<S>> {
        self.require_nonempty()?;
        let m2 = self.ambient_degree();
        let boundary = self.boundary().len();
        let ratio = S::ratio(boundary, self.len());
        Ok(FolnerTriple {
            boundary_ratio: ratio.clone(),
            defect: S::from_count(m2) - self.density::<S>()?,
            scaled_boundary_ratio: S::from_count(m2) * ratio,
        })
    }

    /// Subgraph induced on a subset of vertex indices.
    pub fn induced(&self, subset: &[usize]) -> Subgraph {
        full_subgraph(subset.iter().map(|&i| &self.vertices[i]), &self.generators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::enumerate_ball;
    use crate::diagrams::atomic;
    use crate::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn single_vertex() {
        let y = full_subgraph2([&Diagram::identity()]);
        assert_eq!((y.len(), y.edges().len()), (1, 0));
        assert_eq!(y.density::<Rational>().unwrap(), r(0, 1));
        assert_eq!(y.q_value().unwrap(), 3);
        assert_eq!(y.min_degree().unwrap(), 0);
        assert_eq!(y.boundary().len(), 4);
        assert_eq!(y.doubling_check(), DoublingCheck { holds: true, ball_size: 5, twice_size: 2 });
        let f = y.folner_inequalities::<Rational>().unwrap();
        assert_eq!(
            (f.boundary_ratio.clone(), f.defect.clone(), f.scaled_boundary_ratio.clone()),
            (r(4, 1), r(4, 1), r(16, 1))
        );
        assert!(f.chain_holds());
        match y.two_one_matching() {
            Matching::Assignment(img) => assert!(img.iter().filter(|i| **i == Some(0)).count() >= 2),
            m => panic!("{m:?}"),
        }
    }

    #[test]
    fn two_vertex_path() {
        let y = full_subgraph2([&Diagram::identity(), &atomic(0)]);
        assert_eq!(y.edges(), &[(0, 1, 0)]);
        assert_eq!(y.density::<Rational>().unwrap(), r(1, 1));
        assert_eq!(y.q_value().unwrap(), 4);
        assert_eq!(y.boundary().len(), 6);
    }

    #[test]
    fn empty_subgraph_is_rejected() {
        let y = full_subgraph2(std::iter::empty());
        assert!(y.density::<f64>().is_err());
        assert!(y.min_degree().is_err());
        assert!(full_subgraph(std::iter::once(&Diagram::identity()), &[0, 1, 2]).q_value().is_err());
    }

    #[test]
    fn balls() {
        let t = enumerate_ball(4).unwrap();
        for radius in 0..4 {
            let y = full_subgraph2(&t.ball(radius));
            let deg = y.degrees();
            assert_eq!(deg.iter().sum::<usize>(), 2 * y.edges().len());
            assert!(deg.iter().all(|&d| d <= 4));
            assert_eq!(y.boundary().len(), t.sphere_sizes()[radius + 1]);
            assert!(y.min_degree().unwrap() <= 2);
            let d: Rational = y.density().unwrap();
            assert!(d < r(4, 1));
            assert_eq!(d <= r(3, 1), y.q_value().unwrap() >= 0);
        }
        let y3 = full_subgraph2(&t.ball(3));
        let f = y3.folner_inequalities::<Rational>().unwrap();
        assert_eq!(f.boundary_ratio, r(108, 53));
        assert_eq!(f.scaled_boundary_ratio, r(432, 53));
        assert!(f.chain_holds());
        assert_eq!(y3.doubling_check(), DoublingCheck { holds: true, ball_size: 161, twice_size: 106 });
        assert!(full_subgraph2(&t.ball(2)).two_one_matching().is_found());
    }

    #[test]
    fn violation_is_reported_for_closed_cycles() {
        // In the generator-free "Cayley graph" every set is its own ball, so
        // doubling fails immediately and the witness is the whole set.
        let y = full_subgraph([&Diagram::identity(), &atomic(0)], &[]);
        assert!(!y.doubling_check().holds);
        assert_eq!(y.two_one_matching(), Matching::Violation(vec![0, 1]));
    }
}
