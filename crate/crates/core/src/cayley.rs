//! Breadth-first enumeration of the Cayley graph of F in `x0^{±1}, x1^{±1}`.
//!
//! Elements are deduplicated by their canonical diagram key. Frontier
//! expansion runs in parallel, but insertion happens in frontier order so the
//! table (entry order included) does not depend on scheduling.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::diagrams::Diagram;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::words::TWO_GENERATORS;

/// Default cap on the number of enumerated elements.
pub const DEFAULT_CAP: usize = 10_000_000;

/// `[d·x0, d·x0^-1, d·x1, d·x1^-1]`.
pub fn neighbors(d: &Diagram) -> [Diagram; 4] {
    TWO_GENERATORS.map(|a| d.mul_letter(a))
}

#[derive(Debug, Clone)]
pub struct BallEntry {
    pub diagram: Diagram,
    pub distance: usize,
}

#[derive(Debug, Clone)]
pub struct BallTable {
    radius: usize,
    entries: Vec<BallEntry>,
    index: HashMap<String, usize>,
    sphere_sizes: Vec<usize>,
    ball_sizes: Vec<usize>,
}

impl BallTable {
    pub fn radius(&self) -> usize {
        self.radius
    }

    /// Entries in BFS order, grouped by distance.
    pub fn entries(&self) -> &[BallEntry] {
        &self.entries
    }

    pub fn sphere_sizes(&self) -> &[usize] {
        &self.sphere_sizes
    }

    pub fn ball_sizes(&self) -> &[usize] {
        &self.ball_sizes
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn distance_of_key(&self, key: &str) -> Option<usize> {
        self.index.get(key).map(|&i| self.entries[i].distance)
    }

    pub fn distance(&self, d: &Diagram) -> Option<usize> {
        self.distance_of_key(&d.key())
    }

    /// Elements at distance exactly `n`.
    pub fn sphere(&self, n: usize) -> &[BallEntry] {
        if n > self.radius {
            return &[];
        }
        let start = if n == 0 { 0 } else { self.ball_sizes[n - 1] };
        &self.entries[start..self.ball_sizes[n]]
    }

    /// Elements at distance at most `r`.
    pub fn ball(&self, r: usize) -> Vec<Diagram> {
        let end = self.ball_sizes[r.min(self.radius)];
        self.entries[..end].iter().map(|e| e.diagram.clone()).collect()
    }

    /// Checks `b_{m+n} <= b_m * b_n` for every `m + n <= radius`.
    pub fn is_submultiplicative(&self) -> bool {
        let b = &self.ball_sizes;
        (0..=self.radius).all(|m| (0..=self.radius - m).all(|n| b[m + n] <= b[m] * b[n]))
    }
}

pub fn enumerate_ball(radius: usize) -> Result<BallTable> {
    enumerate_ball_capped(radius, DEFAULT_CAP)
}

/// Enumerates the ball of the given radius, failing with
/// [`Error::ResourceCap`] as soon as more than `cap` elements would be stored.
pub fn enumerate_ball_capped(radius: usize, cap: usize) -> Result<BallTable> {
    let identity = Diagram::identity();
    let mut table = BallTable {
        radius: 0,
        entries: vec![BallEntry { diagram: identity.clone(), distance: 0 }],
        index: HashMap::from([(identity.key(), 0)]),
        sphere_sizes: vec![1],
        ball_sizes: vec![1],
    };
    if cap < 1 {
        return Err(Error::ResourceCap { cap, completed_radius: 0 });
    }
    for n in 1..=radius {
        let frontier = table.sphere(n - 1);
        let found: Vec<(String, Diagram)> =
            frontier.par_iter().flat_map_iter(|e| neighbors(&e.diagram).into_iter().map(|d| (d.key(), d))).collect();
        let start = table.entries.len();
        for (key, diagram) in found {
            if table.index.contains_key(&key) {
                continue;
            }
            if table.entries.len() >= cap {
                return Err(Error::ResourceCap { cap, completed_radius: n - 1 });
            }
            table.index.insert(key, table.entries.len());
            table.entries.push(BallEntry { diagram, distance: n });
        }
        table.sphere_sizes.push(table.entries.len() - start);
        table.ball_sizes.push(table.entries.len());
        table.radius = n;
    }
    Ok(table)
}

/// Cayley distance from the identity by plain BFS, searching up to radius
/// `cap`. Serves as an oracle for [`crate::metric::norm`].
pub fn bfs_norm(d: &Diagram, cap: usize) -> Result<usize> {
    let target = d.key();
    let identity = Diagram::identity();
    if identity.key() == target {
        return Ok(0);
    }
    let mut seen: HashSet<String> = HashSet::from([identity.key()]);
    let mut frontier = vec![identity];
    for n in 1..=cap {
        let mut next = Vec::new();
        for g in &frontier {
            for h in neighbors(g) {
                let key = h.key();
                if key == target {
                    return Ok(n);
                }
                if seen.insert(key) {
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    Err(Error::NotFound { cap })
}

/// Keys of all dead elements of norm at most `max_norm`: elements whose four
/// neighbors all lie strictly closer to the identity. Distances come from BFS
/// only; the length formula is not consulted.
pub fn dead_search(max_norm: usize) -> Result<Vec<String>> {
    dead_search_capped(max_norm, DEFAULT_CAP)
}

pub fn dead_search_capped(max_norm: usize, cap: usize) -> Result<Vec<String>> {
    let table = enumerate_ball_capped(max_norm, cap)?;
    Ok(dead_in_table(&table))
}

/// Dead elements of a table. A neighbor missing from the table lies outside
/// the ball and so is farther than any entry.
pub fn dead_in_table(table: &BallTable) -> Vec<String> {
    table.entries[1..]
        .par_iter()
        .filter(|e| neighbors(&e.diagram).iter().all(|h| table.distance(h).is_some_and(|m| m < e.distance)))
        .map(|e| e.diagram.key())
        .collect()
}

/// `s_n / s_{n-1}` for `1 <= n <= radius`.
pub fn ratio_report<S: Scalar>(table: &BallTable) -> Vec<S> {
    table.sphere_sizes.windows(2).map(|w| S::ratio(w[1], w[0])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{atomic, from_normal_form, NormalForm};
    use crate::metric::norm;
    use crate::Rational;

    #[test]
    fn identity_neighbors() {
        let ns = neighbors(&Diagram::identity());
        let keys: HashSet<String> = ns.iter().map(Diagram::key).collect();
        assert_eq!(keys.len(), 4);
        assert!(neighbors(&atomic(0))[1].is_identity());
    }

    #[test]
    fn small_spheres() {
        let t = enumerate_ball(5).unwrap();
        assert_eq!(t.sphere_sizes(), &[1, 4, 12, 36, 108, 314]);
        assert_eq!(t.ball_sizes(), &[1, 5, 17, 53, 161, 475]);
        assert!(t.is_submultiplicative());
        assert_eq!(t.sphere(2).len(), 12);
        assert_eq!(t.ball(2).len(), 17);
        for e in t.entries() {
            assert_eq!(norm(&e.diagram), e.distance);
        }
    }

    #[test]
    fn cap_reports_partial_radius() {
        assert_eq!(enumerate_ball_capped(4, 20).unwrap_err(), Error::ResourceCap { cap: 20, completed_radius: 2 });
        assert_eq!(enumerate_ball_capped(2, 17).unwrap().len(), 17);
    }

    #[test]
    fn bfs_oracle() {
        assert_eq!(bfs_norm(&Diagram::identity(), 0), Ok(0));
        let x2 = from_normal_form(&NormalForm::new(vec![2], vec![])).unwrap();
        assert_eq!(bfs_norm(&x2, 5), Ok(3));
        assert_eq!(bfs_norm(&x2, 2), Err(Error::NotFound { cap: 2 }));
    }

    #[test]
    fn no_small_dead_elements() {
        assert!(dead_search(1).unwrap().is_empty());
        assert!(dead_search(6).unwrap().is_empty());
    }

    #[test]
    fn ratios() {
        let t = enumerate_ball(3).unwrap();
        let r: Vec<Rational> = ratio_report(&t);
        assert_eq!(
            r,
            vec![Rational::from_integer(4.into()), Rational::from_integer(3.into()), Rational::from_integer(3.into())]
        );
    }
}
