use crate::field::Field;
use crate::linalg::Matrix;

use super::{BQAlgebra, HomologyError, RelationClass};

/// A finite-dimensional right module, as a representation of the quiver:
/// one vector space per vertex and one matrix per arrow, acting on columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep<F> {
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism<F> {
    maps: Vec<Matrix<F>>,
}

impl<F: Field> QuiverRep<F> {
    /// Validates shapes and, for incidence algebras, that parallel paths act
    /// identically.
    pub fn new(alg: &BQAlgebra, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self, HomologyError> {
        if dims.len() != alg.len() || maps.len() != alg.arrows().len() {
            return Err(HomologyError::AlgebraMismatch);
        }
        for (a, m) in alg.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(HomologyError::InvalidRepresentation(format!(
                    "arrow {} -> {} has a {}x{} matrix",
                    alg.label(a.source),
                    alg.label(a.target),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let rep = QuiverRep { dims, maps };
        if alg.relation_class() == RelationClass::Commutative {
            rep.check_commutativity(alg)?;
        }
        Ok(rep)
    }

    fn check_commutativity(&self, alg: &BQAlgebra) -> Result<(), HomologyError> {
        let n = alg.len();
        // along[x][y]: the common action of every path x ~> y
        let mut along: Vec<Vec<Option<Matrix<F>>>> = vec![vec![None; n]; n];
        let mut done = vec![false; n];
        while let Some(x) = (0..n).find(|&x| {
            !done[x] && alg.arrows().iter().filter(|a| a.source == x).all(|a| done[a.target])
        }) {
            along[x][x] = Some(Matrix::identity(self.dims[x]));
            for y in (0..n).filter(|&y| y != x && alg.path_count(x, y) > 0) {
                let mut common: Option<Matrix<F>> = None;
                for (k, a) in alg.arrows().iter().enumerate().filter(|(_, a)| a.source == x) {
                    let Some(rest) = &along[a.target][y] else { continue };
                    let candidate = rest.mul_ok(&self.maps[k]);
                    match &common {
                        None => common = Some(candidate),
                        Some(c) if *c != candidate => {
                            return Err(HomologyError::InvalidRepresentation(format!(
                                "parallel paths {} ~> {} act differently",
                                alg.label(x),
                                alg.label(y)
                            )));
                        }
                        Some(_) => {}
                    }
                }
                along[x][y] = common;
            }
            done[x] = true;
        }
        Ok(())
    }

    pub fn zero(alg: &BQAlgebra) -> Self {
        QuiverRep {
            dims: vec![0; alg.len()],
            maps: alg.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    pub fn simple(alg: &BQAlgebra, v: usize) -> Self {
        let dims = (0..alg.len()).map(|w| usize::from(w == v)).collect::<Vec<_>>();
        let maps = alg.arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
        QuiverRep { dims, maps }
    }

    /// `P_v`: at `w`, the span of the paths `v ~> w`.
    pub fn projective(alg: &BQAlgebra, v: usize) -> Self {
        Self::projective_sum(alg, &[v])
    }

    /// The realization of `P_{x_1} + ... + P_{x_k}`; at each vertex the basis
    /// is the concatenation over summands of their path bases.
    pub fn projective_sum(alg: &BQAlgebra, summands: &[usize]) -> Self {
        let dims: Vec<usize> = (0..alg.len()).map(|w| summands.iter().map(|&x| alg.path_count(x, w)).sum()).collect();
        let maps = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
                let step = alg.arrow_path(k);
                let (mut r0, mut c0) = (0, 0);
                for &x in summands {
                    for p in 0..alg.path_count(x, a.source) {
                        let q = alg.compose(x, a.source, a.target, p, step);
                        m[(r0 + q, c0 + p)] = F::one();
                    }
                    r0 += alg.path_count(x, a.target);
                    c0 += alg.path_count(x, a.source);
                }
                m
            })
            .collect();
        QuiverRep { dims, maps }
    }

    /// The regular module `A_A`.
    pub fn regular(alg: &BQAlgebra) -> Self {
        Self::projective_sum(alg, &(0..alg.len()).collect::<Vec<_>>())
    }

    /// `I_v`: at `w`, the dual of the span of the paths `w ~> v`.
    pub fn injective(alg: &BQAlgebra, v: usize) -> Self {
        Self::injective_sum(alg, &[v])
    }

    pub fn injective_sum(alg: &BQAlgebra, summands: &[usize]) -> Self {
        let op = alg.opposite();
        Self::projective_sum(op, summands).dual()
    }

    /// `D(X)`, a representation of the opposite quiver.
    pub fn dual(&self) -> Self {
        QuiverRep { dims: self.dims.clone(), maps: self.maps.iter().map(Matrix::transpose).collect() }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    pub fn arrow_map(&self, arrow: usize) -> &Matrix<F> {
        &self.maps[arrow]
    }

    pub fn arrow_maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// The action of a path (a sequence of arrows) starting at `x`.
    pub fn path_map(&self, x: usize, path: &[usize]) -> Matrix<F> {
        let mut m = Matrix::identity(self.dims[x]);
        for &k in path {
            m = self.maps[k].mul_ok(&m);
        }
        m
    }

    /// Columns spanning `rad(X)_v`, the sum of the images of arrows into `v`.
    pub fn radical_at(&self, alg: &BQAlgebra, v: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dims[v], 0);
        for (k, a) in alg.arrows().iter().enumerate() {
            if a.target == v {
                m = m.hstack(&self.maps[k]);
            }
        }
        m
    }

    /// Generators of `X` modulo its radical: standard basis vectors at each
    /// vertex completing the radical there.
    pub fn top_generators(&self, alg: &BQAlgebra) -> Vec<(usize, Vec<F>)> {
        let mut gens = Vec::new();
        for v in 0..alg.len() {
            if self.dims[v] == 0 {
                continue;
            }
            for i in self.radical_at(alg, v).complement_coordinates() {
                let mut e = vec![F::zero(); self.dims[v]];
                e[i] = F::one();
                gens.push((v, e));
            }
        }
        gens
    }

    pub fn top_dims(&self, alg: &BQAlgebra) -> Vec<usize> {
        (0..alg.len()).map(|v| self.dims[v] - self.radical_at(alg, v).rank()).collect()
    }

    /// Dimension at each vertex of the socle, the joint kernel of the arrows
    /// leaving that vertex.
    pub fn socle_dims(&self, alg: &BQAlgebra) -> Vec<usize> {
        (0..alg.len())
            .map(|v| {
                let mut stacked = Matrix::zeros(0, self.dims[v]);
                for (k, a) in alg.arrows().iter().enumerate() {
                    if a.source == v {
                        stacked = stacked.vstack(&self.maps[k]);
                    }
                }
                self.dims[v] - stacked.rank()
            })
            .collect()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        QuiverRep {
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| Matrix::block_diag(&[a.clone(), b.clone()])).collect(),
        }
    }

    pub fn identity(&self) -> RepMorphism<F> {
        RepMorphism { maps: self.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }
}

impl<F: Field> RepMorphism<F> {
    pub fn new(maps: Vec<Matrix<F>>) -> Self {
        RepMorphism { maps }
    }

    pub fn zero(source: &QuiverRep<F>, target: &QuiverRep<F>) -> Self {
        RepMorphism { maps: source.dims.iter().zip(&target.dims).map(|(&s, &t)| Matrix::zeros(t, s)).collect() }
    }

    pub fn at(&self, v: usize) -> &Matrix<F> {
        &self.maps[v]
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(Matrix::rank).collect()
    }

    /// `self` after `first`.
    pub fn after(&self, first: &RepMorphism<F>) -> RepMorphism<F> {
        RepMorphism { maps: self.maps.iter().zip(&first.maps).map(|(g, f)| g.mul_ok(f)).collect() }
    }

    /// Shapes agree and every arrow square commutes.
    pub fn is_morphism(&self, alg: &BQAlgebra, source: &QuiverRep<F>, target: &QuiverRep<F>) -> bool {
        let shapes = (0..alg.len())
            .all(|v| self.maps[v].rows() == target.dims[v] && self.maps[v].cols() == source.dims[v]);
        shapes
            && alg.arrows().iter().enumerate().all(|(k, a)| {
                target.maps[k].mul_ok(&self.maps[a.source]) == self.maps[a.target].mul_ok(&source.maps[k])
            })
    }

    /// The kernel as a representation together with its inclusion.
    pub fn kernel(&self, alg: &BQAlgebra, source: &QuiverRep<F>) -> (QuiverRep<F>, RepMorphism<F>) {
        let bases: Vec<Matrix<F>> = self.maps.iter().map(Matrix::kernel).collect();
        let maps = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let image = source.maps[k].mul_ok(&bases[a.source]);
                bases[a.target].solve(&image).expect("kernels are subrepresentations")
            })
            .collect();
        let dims = bases.iter().map(Matrix::cols).collect();
        (QuiverRep { dims, maps }, RepMorphism { maps: bases })
    }

    /// The cokernel as a representation together with the projection onto it.
    pub fn cokernel(&self, alg: &BQAlgebra, target: &QuiverRep<F>) -> (QuiverRep<F>, RepMorphism<F>) {
        let mut projections = Vec::with_capacity(alg.len());
        let mut lifts = Vec::with_capacity(alg.len());
        for v in 0..alg.len() {
            let image = self.maps[v].column_basis();
            let keep = image.complement_coordinates();
            let lift = Matrix::identity(target.dims[v]).select_columns(&keep);
            let basis = image.hstack(&lift);
            let coords = basis.inverse().expect("image basis plus complement is a basis");
            projections.push(coords.submatrix(image.cols()..basis.cols(), 0..target.dims[v]));
            lifts.push(lift);
        }
        let maps = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| projections[a.target].mul_ok(&target.maps[k]).mul_ok(&lifts[a.source]))
            .collect();
        let dims = projections.iter().map(Matrix::rows).collect();
        (QuiverRep { dims, maps }, RepMorphism { maps: projections })
    }
}

/// A basis of `Hom(X, Y)`: families of matrices, one per vertex, commuting
/// with every arrow.
pub fn hom_space<F: Field>(alg: &BQAlgebra, x: &QuiverRep<F>, y: &QuiverRep<F>) -> Result<Vec<RepMorphism<F>>, HomologyError> {
    let system = hom_equations(alg, x, y)?;
    let offsets = offsets(alg, x, y);
    let kernel = system.kernel();
    Ok((0..kernel.cols())
        .map(|c| {
            let maps = (0..alg.len())
                .map(|v| Matrix::from_fn(y.dims[v], x.dims[v], |i, j| kernel[(offsets[v] + i * x.dims[v] + j, c)].clone()))
                .collect();
            RepMorphism { maps }
        })
        .collect())
}

pub fn hom_dim<F: Field>(alg: &BQAlgebra, x: &QuiverRep<F>, y: &QuiverRep<F>) -> Result<usize, HomologyError> {
    let system = hom_equations(alg, x, y)?;
    Ok(system.cols() - system.rank())
}

fn offsets<F: Field>(alg: &BQAlgebra, x: &QuiverRep<F>, y: &QuiverRep<F>) -> Vec<usize> {
    let mut out = Vec::with_capacity(alg.len() + 1);
    let mut acc = 0;
    for v in 0..alg.len() {
        out.push(acc);
        acc += x.dims[v] * y.dims[v];
    }
    out.push(acc);
    out
}

fn hom_equations<F: Field>(alg: &BQAlgebra, x: &QuiverRep<F>, y: &QuiverRep<F>) -> Result<Matrix<F>, HomologyError> {
    if x.dims.len() != alg.len() || y.dims.len() != alg.len() {
        return Err(HomologyError::AlgebraMismatch);
    }
    let off = offsets(alg, x, y);
    let unknowns = off[alg.len()];
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (k, a) in alg.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ya, xa) = (&y.maps[k], &x.maps[k]);
        // (Y_a f_s - f_t X_a)[r][c] = 0
        for r in 0..y.dims[t] {
            for c in 0..x.dims[s] {
                let mut row = vec![F::zero(); unknowns];
                for m in 0..y.dims[s] {
                    if !ya[(r, m)].is_zero() {
                        row[off[s] + m * x.dims[s] + c] = row[off[s] + m * x.dims[s] + c].add(&ya[(r, m)]);
                    }
                }
                for m in 0..x.dims[t] {
                    if !xa[(m, c)].is_zero() {
                        row[off[t] + r * x.dims[t] + m] = row[off[t] + r * x.dims[t] + m].sub(&xa[(m, c)]);
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, unknowns));
    }
    Ok(Matrix::from_rows(rows).expect("rows share the unknown count"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::homology::Arrow;
    use crate::poset::Poset;

    fn a2() -> BQAlgebra {
        BQAlgebra::path_algebra(vec!["1".into(), "2".into()], vec![Arrow { source: 0, target: 1 }]).unwrap()
    }

    #[test]
    fn projectives_and_injectives_of_a2() {
        let alg = a2();
        let p1 = QuiverRep::<Rational>::projective(&alg, 0);
        assert_eq!(p1.dims(), &[1, 1]);
        assert_eq!(QuiverRep::<Rational>::projective(&alg, 1).dims(), &[0, 1]);
        assert_eq!(QuiverRep::<Rational>::injective(&alg, 0).dims(), &[1, 0]);
        assert_eq!(QuiverRep::<Rational>::injective(&alg, 1).dims(), &[1, 1]);
        assert_eq!(p1.top_dims(&alg), vec![1, 0]);
        assert_eq!(p1.socle_dims(&alg), vec![0, 1]);
    }

    #[test]
    fn hom_dimensions_on_a2() {
        let alg = a2();
        let p1 = QuiverRep::<Rational>::projective(&alg, 0);
        let s1 = QuiverRep::<Rational>::simple(&alg, 0);
        assert_eq!(hom_dim(&alg, &s1, &p1).unwrap(), 0);
        assert_eq!(hom_dim(&alg, &p1, &s1).unwrap(), 1);
        assert_eq!(hom_dim(&alg, &s1, &s1).unwrap(), 1);
        for f in hom_space(&alg, &p1, &p1).unwrap() {
            assert!(f.is_morphism(&alg, &p1, &p1));
        }
    }

    #[test]
    fn hom_from_projective_is_evaluation() {
        let p = Poset::from_covers(&["a", "b", "c", "d"], &[("d", "b"), ("d", "c"), ("b", "a"), ("c", "a")]).unwrap();
        let alg = BQAlgebra::incidence(&p);
        let x = QuiverRep::<Rational>::injective_sum(&alg, &[0, 1]).direct_sum(&QuiverRep::projective(&alg, 3));
        for v in 0..4 {
            let pv = QuiverRep::projective(&alg, v);
            assert_eq!(hom_dim(&alg, &pv, &x).unwrap(), x.dim(v));
        }
    }

    #[test]
    fn commutativity_is_enforced() {
        let p = Poset::from_covers(&["a", "b", "c", "d"], &[("d", "b"), ("d", "c"), ("b", "a"), ("c", "a")]).unwrap();
        let alg = BQAlgebra::incidence(&p);
        let ones = |r: usize, c: usize| Matrix::<Rational>::from_fn(r, c, |_, _| Rational::integer(1));
        let mut maps: Vec<Matrix<Rational>> = alg.arrows().iter().map(|_| ones(1, 1)).collect();
        assert!(QuiverRep::new(&alg, vec![1; 4], maps.clone()).is_ok());
        maps[0] = Matrix::from_i64_rows(&[&[2]]);
        assert!(matches!(QuiverRep::new(&alg, vec![1; 4], maps), Err(HomologyError::InvalidRepresentation(_))));
    }

    #[test]
    fn kernel_and_cokernel_of_inclusion() {
        let alg = a2();
        let p1 = QuiverRep::<Rational>::projective(&alg, 0);
        let p2 = QuiverRep::<Rational>::projective(&alg, 1);
        let incl = hom_space(&alg, &p2, &p1).unwrap().pop().unwrap();
        let (k, _) = incl.kernel(&alg, &p2);
        assert!(k.is_zero());
        let (c, proj) = incl.cokernel(&alg, &p1);
        assert_eq!(c.dims(), &[1, 0]);
        assert!(proj.is_morphism(&alg, &p1, &c));
    }
}
