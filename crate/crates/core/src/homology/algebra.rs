use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::poset::Poset;

use super::HomologyError;

/// Which relations the quiver is bound by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RelationClass {
    /// Hasse quiver of a poset with all parallel paths identified.
    #[serde(rename = "incidence-commutativity")]
    Commutative,
    /// Path algebra of an acyclic quiver, no relations.
    #[serde(rename = "none")]
    Free,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
}

/// A bound quiver algebra from one of the two supported classes, with an
/// explicit basis of paths between every pair of vertices.
///
/// Both classes are monomial: the product of two basis paths is again a
/// basis path (or zero when they do not compose), which keeps every
/// structure map a 0/1 matrix.
#[derive(Clone, Debug)]
pub struct BQAlgebra {
    labels: Vec<String>,
    arrows: Vec<Arrow>,
    relations: RelationClass,
    paths: Vec<Vec<Vec<Vec<usize>>>>,
    lookup: Vec<Vec<HashMap<Vec<usize>, usize>>>,
    opposite: OnceLock<Box<BQAlgebra>>,
}

impl BQAlgebra {
    /// The incidence algebra: one vertex per element, an arrow `x -> y`
    /// whenever `x` covers `y`.
    pub fn incidence(poset: &Poset) -> Self {
        let n = poset.len();
        let mut arrows: Vec<Arrow> = poset.cover_pairs().into_iter().map(|(a, b)| Arrow { source: a, target: b }).collect();
        arrows.sort_by_key(|a| (a.source, a.target));
        let mut paths = vec![vec![Vec::new(); n]; n];
        let order = poset.linear_extension();
        for &x in &order {
            paths[x][x].push(Vec::new());
            for y in poset.down_set(x).ones().filter(|&y| y != x) {
                let (k, a) = arrows
                    .iter()
                    .enumerate()
                    .find(|(_, a)| a.source == x && poset.leq(y, a.target))
                    .expect("a strictly smaller element lies below some lower cover");
                let mut p = vec![k];
                p.extend(paths[a.target][y][0].iter().copied());
                paths[x][y].push(p);
            }
        }
        Self::assemble(poset.labels().to_vec(), arrows, RelationClass::Commutative, paths)
    }

    /// The path algebra of an acyclic quiver.
    pub fn path_algebra(labels: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, HomologyError> {
        let n = labels.len();
        if arrows.iter().any(|a| a.source >= n || a.target >= n) {
            return Err(HomologyError::UnknownVertex(format!("arrow endpoint out of range for {n} vertices")));
        }
        let order = topological_order(n, &arrows).ok_or(HomologyError::CyclicQuiver)?;
        let mut paths = vec![vec![Vec::new(); n]; n];
        for &x in order.iter().rev() {
            paths[x][x].push(Vec::new());
            for (k, a) in arrows.iter().enumerate().filter(|(_, a)| a.source == x) {
                for y in 0..n {
                    let tails: Vec<Vec<usize>> = paths[a.target][y].clone();
                    for t in tails {
                        let mut p = vec![k];
                        p.extend(t);
                        paths[x][y].push(p);
                    }
                }
            }
        }
        for row in &mut paths {
            for ps in row.iter_mut() {
                ps.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
            }
        }
        Ok(Self::assemble(labels, arrows, RelationClass::Free, paths))
    }

    fn assemble(labels: Vec<String>, arrows: Vec<Arrow>, relations: RelationClass, paths: Vec<Vec<Vec<Vec<usize>>>>) -> Self {
        let lookup = paths
            .iter()
            .map(|row| {
                row.iter()
                    .map(|ps| ps.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect())
                    .collect()
            })
            .collect();
        BQAlgebra { labels, arrows, relations, paths, lookup, opposite: OnceLock::new() }
    }

    /// The opposite algebra: arrows reversed, each basis path reversed with
    /// its index kept, so path indices agree between `A` and `A^op`.
    pub fn opposite(&self) -> &BQAlgebra {
        self.opposite.get_or_init(|| {
            let n = self.len();
            let arrows = self.arrows.iter().map(|a| Arrow { source: a.target, target: a.source }).collect();
            let mut paths = vec![vec![Vec::new(); n]; n];
            for (x, row) in self.paths.iter().enumerate() {
                for (y, ps) in row.iter().enumerate() {
                    paths[y][x] = ps.iter().map(|p| p.iter().rev().copied().collect()).collect();
                }
            }
            Box::new(Self::assemble(self.labels.clone(), arrows, self.relations, paths))
        })
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

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Result<usize, HomologyError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| HomologyError::UnknownVertex(label.to_string()))
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn relation_class(&self) -> RelationClass {
        self.relations
    }

    /// Basis paths from `x` to `y`, each as its sequence of arrow indices.
    pub fn paths(&self, x: usize, y: usize) -> &[Vec<usize>] {
        &self.paths[x][y]
    }

    pub fn path_count(&self, x: usize, y: usize) -> usize {
        self.paths[x][y].len()
    }

    /// Index in `paths(x, z)` of path `p` (from `x` to `y`) followed by path
    /// `q` (from `y` to `z`).
    pub fn compose(&self, x: usize, y: usize, z: usize, p: usize, q: usize) -> usize {
        match self.relations {
            RelationClass::Commutative => 0,
            RelationClass::Free => {
                let mut seq = self.paths[x][y][p].clone();
                seq.extend_from_slice(&self.paths[y][z][q]);
                self.lookup[x][z][&seq]
            }
        }
    }

    /// Index of the length-one path given by an arrow.
    pub fn arrow_path(&self, arrow: usize) -> usize {
        let a = self.arrows[arrow];
        self.lookup[a.source][a.target][&vec![arrow]]
    }

    pub fn is_acyclic(&self) -> bool {
        topological_order(self.len(), &self.arrows).is_some()
    }
}

fn topological_order(n: usize, arrows: &[Arrow]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for a in arrows {
        indeg[a.target] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        for a in arrows.iter().filter(|a| a.source == v) {
            indeg[a.target] -= 1;
            if indeg[a.target] == 0 {
                ready.push(a.target);
            }
        }
    }
    (order.len() == n).then_some(order)
}
