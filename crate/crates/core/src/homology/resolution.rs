use crate::field::Field;
use crate::linalg::Matrix;

use super::{BQAlgebra, HomologyError, QuiverRep, RepMorphism};

/// A morphism `P_{x_1} + ... + P_{x_k} -> P_{y_1} + ... + P_{y_l}` between
/// sums of indecomposable projectives.
///
/// Since `Hom(P_x, P_y)` is the span of the paths `y ~> x`, the map is the
/// block matrix `coeffs[j][i]` of coefficient vectors over `paths(y_j, x_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap<F> {
    source: Vec<usize>,
    target: Vec<usize>,
    coeffs: Vec<Vec<Vec<F>>>,
}

impl<F: Field> ProjMap<F> {
    pub fn new(alg: &BQAlgebra, source: Vec<usize>, target: Vec<usize>, coeffs: Vec<Vec<Vec<F>>>) -> Result<Self, HomologyError> {
        let ok = coeffs.len() == target.len()
            && coeffs.iter().zip(&target).all(|(row, &y)| {
                row.len() == source.len() && row.iter().zip(&source).all(|(c, &x)| c.len() == alg.path_count(y, x))
            });
        if !ok {
            return Err(HomologyError::AlgebraMismatch);
        }
        Ok(ProjMap { source, target, coeffs })
    }

    pub fn source(&self) -> &[usize] {
        &self.source
    }

    pub fn target(&self) -> &[usize] {
        &self.target
    }

    pub fn coefficient(&self, j: usize, i: usize) -> &[F] {
        &self.coeffs[j][i]
    }

    /// The realized linear map at vertex `w`, between the path bases of
    /// `projective_sum(source)` and `projective_sum(target)` there.
    pub fn at_vertex(&self, alg: &BQAlgebra, w: usize) -> Matrix<F> {
        let rows: usize = self.target.iter().map(|&y| alg.path_count(y, w)).sum();
        let cols: usize = self.source.iter().map(|&x| alg.path_count(x, w)).sum();
        let mut m = Matrix::<F>::zeros(rows, cols);
        let mut c0 = 0;
        for (i, &x) in self.source.iter().enumerate() {
            let mut r0 = 0;
            for (j, &y) in self.target.iter().enumerate() {
                for (p, c) in self.coeffs[j][i].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for q in 0..alg.path_count(x, w) {
                        let r = alg.compose(y, x, w, p, q);
                        m[(r0 + r, c0 + q)] = m[(r0 + r, c0 + q)].add(c);
                    }
                }
                r0 += alg.path_count(y, w);
            }
            c0 += alg.path_count(x, w);
        }
        m
    }

    pub fn realize(&self, alg: &BQAlgebra) -> RepMorphism<F> {
        RepMorphism::new((0..alg.len()).map(|w| self.at_vertex(alg, w)).collect())
    }

    /// `self` after `first`.
    pub fn after(&self, alg: &BQAlgebra, first: &ProjMap<F>) -> ProjMap<F> {
        assert_eq!(self.source, first.target);
        let coeffs = self
            .target
            .iter()
            .enumerate()
            .map(|(k, &z)| {
                first
                    .source
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| {
                        let mut c = vec![F::zero(); alg.path_count(z, x)];
                        for (j, &y) in self.source.iter().enumerate() {
                            for (p, a) in self.coeffs[k][j].iter().enumerate() {
                                if a.is_zero() {
                                    continue;
                                }
                                for (q, b) in first.coeffs[j][i].iter().enumerate() {
                                    if !b.is_zero() {
                                        c[alg.compose(z, y, x, p, q)].add_mul(a, b);
                                    }
                                }
                            }
                        }
                        c
                    })
                    .collect()
            })
            .collect();
        ProjMap { source: first.source.clone(), target: self.target.clone(), coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().flatten().all(F::is_zero)
    }

    /// Reads a map over `A^op` as a map over `A` in the reverse direction.
    ///
    /// Path indices agree between an algebra and its opposite, so this is a
    /// transpose of the block structure. Dualizing and then applying the
    /// inverse Nakayama functor turns `P^op_x -> P^op_y` into `P_y -> P_x`
    /// by exactly this rule.
    pub fn transpose_blocks(&self) -> ProjMap<F> {
        let coeffs = (0..self.source.len())
            .map(|i| (0..self.target.len()).map(|j| self.coeffs[j][i].clone()).collect())
            .collect();
        ProjMap { source: self.target.clone(), target: self.source.clone(), coeffs }
    }

    /// `Hom(-, Y)` applied to the map: `Y_{y_1} + ... -> Y_{x_1} + ...`, with
    /// block `(i, j)` equal to the action of `coeffs[j][i]` on `Y`.
    pub fn hom_into(&self, alg: &BQAlgebra, y: &QuiverRep<F>) -> Matrix<F> {
        let rows: usize = self.source.iter().map(|&x| y.dim(x)).sum();
        let cols: usize = self.target.iter().map(|&t| y.dim(t)).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut r0 = 0;
        for (i, &x) in self.source.iter().enumerate() {
            let mut c0 = 0;
            for (j, &t) in self.target.iter().enumerate() {
                if y.dim(x) > 0 && y.dim(t) > 0 {
                    let mut block = Matrix::zeros(y.dim(x), y.dim(t));
                    for (p, c) in self.coeffs[j][i].iter().enumerate() {
                        if !c.is_zero() {
                            let action = y.path_map(t, &alg.paths(t, x)[p]).scale(c);
                            block = block.add(&action).expect("blocks share a shape");
                        }
                    }
                    m.set_block(r0, c0, &block);
                }
                c0 += y.dim(t);
            }
            r0 += y.dim(x);
        }
        m
    }
}

/// A bounded cochain complex of representations: `differentials[k]` maps
/// `terms[k]` to `terms[k + 1]`.
#[derive(Clone, Debug)]
pub struct Complex<F> {
    pub terms: Vec<QuiverRep<F>>,
    pub differentials: Vec<RepMorphism<F>>,
}

impl<F: Field> Complex<F> {
    /// Every differential is a morphism and consecutive ones compose to zero.
    pub fn is_complex(&self, alg: &BQAlgebra) -> bool {
        let morphisms = self
            .differentials
            .iter()
            .enumerate()
            .all(|(k, d)| d.is_morphism(alg, &self.terms[k], &self.terms[k + 1]));
        morphisms && self.differentials.windows(2).all(|w| w[1].after(&w[0]).is_zero())
    }

    /// Exactness at `terms[k]`, reading missing neighbours as zero.
    pub fn is_exact_at(&self, k: usize) -> bool {
        let dims = self.terms[k].dims();
        (0..dims.len()).all(|v| {
            let incoming = if k == 0 { 0 } else { self.differentials[k - 1].at(v).rank() };
            let outgoing = self.differentials.get(k).map_or(0, |d| d.at(v).rank());
            incoming + outgoing == dims[v]
        })
    }

    pub fn is_exact(&self) -> bool {
        (0..self.terms.len()).all(|k| self.is_exact_at(k))
    }

    /// Alternating sum of dimensions at each vertex.
    pub fn euler_characteristic(&self) -> Vec<i64> {
        let n = self.terms.first().map_or(0, |t| t.dims().len());
        (0..n)
            .map(|v| {
                self.terms
                    .iter()
                    .enumerate()
                    .map(|(k, t)| if k % 2 == 0 { t.dim(v) as i64 } else { -(t.dim(v) as i64) })
                    .sum()
            })
            .collect()
    }
}

/// A minimal projective resolution `0 -> P_n -> ... -> P_0 -> X -> 0`.
#[derive(Clone, Debug)]
pub struct ProjectiveResolution<F> {
    module: QuiverRep<F>,
    terms: Vec<Vec<usize>>,
    differentials: Vec<ProjMap<F>>,
    augmentation: RepMorphism<F>,
}

impl<F: Field> ProjectiveResolution<F> {
    pub fn module(&self) -> &QuiverRep<F> {
        &self.module
    }

    /// Summand vertices of `P_k`, in the order used by the differentials.
    pub fn terms(&self) -> &[Vec<usize>] {
        &self.terms
    }

    /// `differentials()[k]` maps `P_{k+1}` to `P_k`.
    pub fn differentials(&self) -> &[ProjMap<F>] {
        &self.differentials
    }

    pub fn augmentation(&self) -> &RepMorphism<F> {
        &self.augmentation
    }

    /// The projective dimension of the module.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    /// `terms()[k]` as a sorted multiset.
    pub fn sorted_terms(&self) -> Vec<Vec<usize>> {
        self.terms
            .iter()
            .map(|t| {
                let mut t = t.clone();
                t.sort_unstable();
                t
            })
            .collect()
    }

    /// `multiplicities()[k][v]`: how often `P_v` occurs in `P_k`.
    pub fn multiplicities(&self, vertices: usize) -> Vec<Vec<usize>> {
        self.terms
            .iter()
            .map(|t| {
                let mut m = vec![0; vertices];
                for &v in t {
                    m[v] += 1;
                }
                m
            })
            .collect()
    }

    /// The resolution as the exact complex `P_n -> ... -> P_0 -> X`.
    pub fn to_complex(&self, alg: &BQAlgebra) -> Complex<F> {
        let mut terms: Vec<QuiverRep<F>> = self.terms.iter().rev().map(|t| QuiverRep::projective_sum(alg, t)).collect();
        terms.push(self.module.clone());
        let mut differentials: Vec<RepMorphism<F>> = self.differentials.iter().rev().map(|d| d.realize(alg)).collect();
        differentials.push(self.augmentation.clone());
        Complex { terms, differentials }
    }

    /// `Hom(P_k, Y)` as cochains with `d^k : Hom(P_k, Y) -> Hom(P_{k+1}, Y)`.
    pub fn hom_cochains(&self, alg: &BQAlgebra, y: &QuiverRep<F>) -> Cochains<F> {
        let dims = self.terms.iter().map(|t| t.iter().map(|&x| y.dim(x)).sum()).collect();
        let maps = self.differentials.iter().map(|d| d.hom_into(alg, y)).collect();
        Cochains { dims, maps }
    }

    /// `dim Ext^k(X, Y)` for `k = 0..=length`.
    pub fn ext_dims(&self, alg: &BQAlgebra, y: &QuiverRep<F>) -> Vec<usize> {
        self.hom_cochains(alg, y).cohomology_dims()
    }
}

/// Finite-dimensional cochain spaces `C^0 -> C^1 -> ...`.
#[derive(Clone, Debug)]
pub struct Cochains<F> {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix<F>>,
}

impl<F: Field> Cochains<F> {
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.maps.iter().map(Matrix::rank).collect();
        (0..self.dims.len())
            .map(|k| {
                let incoming = if k == 0 { 0 } else { ranks[k - 1] };
                let outgoing = ranks.get(k).copied().unwrap_or(0);
                self.dims[k] - incoming - outgoing
            })
            .collect()
    }

    /// Cohomology in degree `k` with chosen representatives.
    pub fn cohomology(&self, k: usize) -> Subquotient<F> {
        let boundary = if k == 0 { Matrix::zeros(self.dims[0], 0) } else { self.maps[k - 1].clone() };
        let cycles = match self.maps.get(k) {
            Some(d) => d.kernel(),
            None => Matrix::identity(self.dims[k]),
        };
        Subquotient::new(&boundary, &cycles)
    }
}

/// `Z / B` for nested subspaces `B <= Z` of a coordinate space, with
/// representatives of a basis of the quotient.
#[derive(Clone, Debug)]
pub struct Subquotient<F> {
    boundaries: Matrix<F>,
    representatives: Matrix<F>,
}

impl<F: Field> Subquotient<F> {
    pub fn new(boundary_span: &Matrix<F>, cycles: &Matrix<F>) -> Self {
        let boundaries = boundary_span.column_basis();
        let b = boundaries.cols();
        let pivots = boundaries.hstack(cycles).echelon().pivots;
        let chosen: Vec<usize> = pivots.into_iter().filter(|&p| p >= b).map(|p| p - b).collect();
        Subquotient { representatives: cycles.select_columns(&chosen), boundaries }
    }

    pub fn dim(&self) -> usize {
        self.representatives.cols()
    }

    pub fn representatives(&self) -> &Matrix<F> {
        &self.representatives
    }

    /// Coordinates in the quotient basis of each cycle given as a column.
    pub fn coordinates(&self, cycles: &Matrix<F>) -> Matrix<F> {
        let b = self.boundaries.cols();
        let basis = self.boundaries.hstack(&self.representatives);
        let all = basis.solve(cycles).expect("argument columns are cycles");
        all.submatrix(b..basis.cols(), 0..cycles.cols())
    }
}

/// A minimal injective coresolution `0 -> X -> I^0 -> ... -> I^n -> 0`.
///
/// Computed as the dual of a minimal projective resolution of `D(X)` over
/// the opposite algebra. The maps are also kept in the form
/// `nu^{-1}(I^k) -> nu^{-1}(I^{k+1})` between projectives over `A`.
#[derive(Clone, Debug)]
pub struct InjectiveCoresolution<F> {
    module: QuiverRep<F>,
    terms: Vec<Vec<usize>>,
    maps: Vec<ProjMap<F>>,
    opposite: ProjectiveResolution<F>,
}

impl<F: Field> InjectiveCoresolution<F> {
    pub fn module(&self) -> &QuiverRep<F> {
        &self.module
    }

    /// Summand vertices of `I^k`.
    pub fn terms(&self) -> &[Vec<usize>] {
        &self.terms
    }

    /// `nu_maps()[k]` maps `nu^{-1}(I^k)` to `nu^{-1}(I^{k+1})`.
    pub fn nu_maps(&self) -> &[ProjMap<F>] {
        &self.maps
    }

    /// The injective dimension of the module.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn sorted_terms(&self) -> Vec<Vec<usize>> {
        self.opposite.sorted_terms()
    }

    /// The exact complex `X -> I^0 -> ... -> I^n`.
    pub fn to_complex(&self, alg: &BQAlgebra) -> Complex<F> {
        let op = self.opposite.to_complex(alg.opposite());
        let terms = op.terms.iter().rev().map(QuiverRep::dual).collect();
        let differentials = op
            .differentials
            .iter()
            .rev()
            .map(|d| RepMorphism::new(d.maps().iter().map(Matrix::transpose).collect()))
            .collect();
        Complex { terms, differentials }
    }

    /// `dim Ext^k(D(A), X)`: applying `Hom(D(A), -)` to the coresolution
    /// gives, through the Nakayama functor, the realized projective complex
    /// summed over all vertices.
    pub fn ext_from_dual_dims(&self, alg: &BQAlgebra) -> Vec<usize> {
        let dims = self
            .terms
            .iter()
            .map(|t| t.iter().map(|&x| (0..alg.len()).map(|w| alg.path_count(x, w)).sum::<usize>()).sum())
            .collect();
        let maps = self
            .maps
            .iter()
            .map(|m| Matrix::block_diag(&(0..alg.len()).map(|w| m.at_vertex(alg, w)).collect::<Vec<_>>()))
            .collect();
        Cochains { dims, maps }.cohomology_dims()
    }
}

pub fn minimal_projective_resolution<F: Field>(alg: &BQAlgebra, x: &QuiverRep<F>) -> Result<ProjectiveResolution<F>, HomologyError> {
    if x.dims().len() != alg.len() {
        return Err(HomologyError::AlgebraMismatch);
    }
    if x.is_zero() {
        return Err(HomologyError::ZeroModule);
    }
    let gens = x.top_generators(alg);
    let cover: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let augmentation = RepMorphism::new(
        (0..alg.len())
            .map(|w| {
                let mut m = Matrix::zeros(x.dim(w), 0);
                for (v, g) in &gens {
                    let column = Matrix::from_columns(x.dim(*v), std::slice::from_ref(g));
                    for path in alg.paths(*v, w) {
                        m = m.hstack(&x.path_map(*v, path).mul_ok(&column));
                    }
                }
                m
            })
            .collect(),
    );
    let mut current = QuiverRep::projective_sum(alg, &cover);
    let (mut kernel, mut inclusion) = augmentation.kernel(alg, &current);
    let mut terms = vec![cover];
    let mut differentials = Vec::new();
    while !kernel.is_zero() {
        let previous = terms.last().expect("at least the cover").clone();
        let gens = kernel.top_generators(alg);
        let source: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
        let coeffs = previous
            .iter()
            .enumerate()
            .map(|(j, &y)| {
                gens.iter()
                    .map(|(w, g)| {
                        let ambient = inclusion.at(*w).mul_vec(g);
                        let offset: usize = previous[..j].iter().map(|&z| alg.path_count(z, *w)).sum();
                        ambient[offset..offset + alg.path_count(y, *w)].to_vec()
                    })
                    .collect()
            })
            .collect();
        let d = ProjMap { source: source.clone(), target: previous, coeffs };
        let realized = d.realize(alg);
        current = QuiverRep::projective_sum(alg, &source);
        (kernel, inclusion) = realized.kernel(alg, &current);
        terms.push(source);
        differentials.push(d);
    }
    Ok(ProjectiveResolution { module: x.clone(), terms, differentials, augmentation })
}

pub fn minimal_injective_coresolution<F: Field>(alg: &BQAlgebra, x: &QuiverRep<F>) -> Result<InjectiveCoresolution<F>, HomologyError> {
    let op = alg.opposite();
    let resolution = minimal_projective_resolution(op, &x.dual())?;
    let maps = resolution.differentials.iter().map(ProjMap::transpose_blocks).collect();
    Ok(InjectiveCoresolution { module: x.clone(), terms: resolution.terms.clone(), maps, opposite: resolution })
}

/// Projective dimension, as the length of a minimal projective resolution.
pub fn projective_dimension<F: Field>(alg: &BQAlgebra, x: &QuiverRep<F>) -> Result<usize, HomologyError> {
    Ok(minimal_projective_resolution(alg, x)?.length())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::homology::Arrow;
    use crate::poset::Poset;

    fn diamond() -> BQAlgebra {
        let p = Poset::from_covers(&["a", "b", "c", "d"], &[("d", "b"), ("d", "c"), ("b", "a"), ("c", "a")]).unwrap();
        BQAlgebra::incidence(&p)
    }

    #[test]
    fn projective_resolves_to_itself() {
        let alg = diamond();
        for v in 0..4 {
            let p = QuiverRep::<Rational>::projective(&alg, v);
            let r = minimal_projective_resolution(&alg, &p).unwrap();
            assert_eq!(r.terms(), &[vec![v]]);
        }
    }

    #[test]
    fn resolutions_are_exact_complexes() {
        let alg = diamond();
        for v in 0..4 {
            for x in [QuiverRep::<Rational>::simple(&alg, v), QuiverRep::injective(&alg, v)] {
                let r = minimal_projective_resolution(&alg, &x).unwrap();
                let c = r.to_complex(&alg);
                assert!(c.is_complex(&alg));
                assert!(c.is_exact());
                let euler = c.euler_characteristic();
                assert!(euler.iter().all(|&e| e == 0));
                let co = minimal_injective_coresolution(&alg, &x).unwrap();
                let c = co.to_complex(&alg);
                assert!(c.is_complex(&alg));
                assert!(c.is_exact());
            }
        }
    }

    #[test]
    fn simple_at_top_of_diamond() {
        // 0 -> P_a -> P_b + P_c -> P_d -> S_d -> 0
        let alg = diamond();
        let r = minimal_projective_resolution(&alg, &QuiverRep::<Rational>::simple(&alg, 3)).unwrap();
        assert_eq!(r.sorted_terms(), vec![vec![3], vec![1, 2], vec![0]]);
    }

    #[test]
    fn a2_simple_at_source() {
        let alg = BQAlgebra::path_algebra(vec!["1".into(), "2".into()], vec![Arrow { source: 0, target: 1 }]).unwrap();
        let r = minimal_projective_resolution(&alg, &QuiverRep::<Rational>::simple(&alg, 0)).unwrap();
        assert_eq!(r.terms(), &[vec![0], vec![1]]);
        let ext = r.ext_dims(&alg, &QuiverRep::regular(&alg));
        assert_eq!(ext, vec![0, 1]);
        let co = minimal_injective_coresolution(&alg, &QuiverRep::<Rational>::projective(&alg, 1)).unwrap();
        assert_eq!(co.terms(), &[vec![1], vec![0]]);
    }

    #[test]
    fn transposed_blocks_compose_contravariantly() {
        let arrows = vec![Arrow { source: 0, target: 1 }, Arrow { source: 1, target: 2 }, Arrow { source: 0, target: 2 }];
        let alg = BQAlgebra::path_algebra(vec!["1".into(), "2".into(), "3".into()], arrows).unwrap();
        let op = alg.opposite();
        let one = || Rational::integer(1);
        let f = ProjMap::new(op, vec![0], vec![1], vec![vec![vec![one()]]]).unwrap();
        let g = ProjMap::new(op, vec![1], vec![2], vec![vec![vec![one()]]]).unwrap();
        let lhs = g.after(op, &f).transpose_blocks();
        let rhs = f.transpose_blocks().after(&alg, &g.transpose_blocks());
        assert_eq!(lhs, rhs);
    }
}
