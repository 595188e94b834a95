use serde::{Deserialize, Serialize};

use crate::field::{Field, Rational};
use crate::linalg::{coxeter_from_cartan, minimal_polynomial, IntPolynomial, Matrix, PermutationMatrix, RationalMatrix};

use super::{
    hom_dim, minimal_injective_coresolution, minimal_projective_resolution, BQAlgebra, HomologyError, ProjectiveResolution,
    QuiverRep,
};

/// Class in the Grothendieck group, in the basis of indecomposable
/// projectives: the alternating sum of the terms of a projective resolution.
pub fn k0_class<F: Field>(alg: &BQAlgebra, x: &QuiverRep<F>) -> Result<Vec<i64>, HomologyError> {
    if x.is_zero() {
        return Ok(vec![0; alg.len()]);
    }
    Ok(k0_of_resolution(alg.len(), &minimal_projective_resolution(alg, x)?))
}

fn k0_of_resolution<F: Field>(n: usize, r: &ProjectiveResolution<F>) -> Vec<i64> {
    let mut out = vec![0i64; n];
    for (k, term) in r.terms().iter().enumerate() {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for &v in term {
            out[v] += sign;
        }
    }
    out
}

/// `cartan[i][j] = dim Hom(P_i, P_j)`, by solving for the morphisms.
pub fn cartan_matrix<F: Field>(alg: &BQAlgebra) -> Result<RationalMatrix, HomologyError> {
    let projectives: Vec<QuiverRep<F>> = (0..alg.len()).map(|v| QuiverRep::projective(alg, v)).collect();
    let n = alg.len();
    let mut m = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = Rational::integer(hom_dim(alg, &projectives[i], &projectives[j])? as i64);
        }
    }
    Ok(m)
}

/// The Coxeter matrix, computed as `-M^{-1} M^T` and independently with
/// column `j` equal to `-[I_j]`; the two must agree.
pub fn coxeter_matrix<F: Field>(alg: &BQAlgebra) -> Result<RationalMatrix, HomologyError> {
    let cartan = cartan_matrix::<F>(alg)?;
    let by_cartan = coxeter_from_cartan(&cartan)?;
    let by_injectives = coxeter_from_injectives::<F>(alg)?;
    if by_cartan != by_injectives {
        return Err(HomologyError::ConventionMismatch);
    }
    Ok(by_cartan)
}

/// Column `j` is `-[I_j]` in the basis of projectives.
pub fn coxeter_from_injectives<F: Field>(alg: &BQAlgebra) -> Result<RationalMatrix, HomologyError> {
    let n = alg.len();
    let mut c = RationalMatrix::zeros(n, n);
    for j in 0..n {
        let class = k0_class(alg, &QuiverRep::<F>::injective(alg, j))?;
        for (i, v) in class.into_iter().enumerate() {
            c[(i, j)] = Rational::integer(-v);
        }
    }
    Ok(c)
}

/// The least `k` with `Ext^k(X, A) != 0`.
pub fn grade<F: Field>(alg: &BQAlgebra, x: &QuiverRep<F>) -> Result<usize, HomologyError> {
    let r = minimal_projective_resolution(alg, x)?;
    Ok(grade_of_resolution(alg, &r))
}

fn grade_of_resolution<F: Field>(alg: &BQAlgebra, r: &ProjectiveResolution<F>) -> usize {
    let ext = r.ext_dims(alg, &QuiverRep::regular(alg));
    ext.iter().position(|&d| d > 0).expect("Ext^pdim(X, A) is nonzero for a nonzero module")
}

/// The least `k` with `Ext^k(D(A), X) != 0`, from an injective coresolution
/// of `X`.
pub fn cograde<F: Field>(alg: &BQAlgebra, x: &QuiverRep<F>) -> Result<usize, HomologyError> {
    let co = minimal_injective_coresolution(alg, x)?;
    let ext = co.ext_from_dual_dims(alg);
    Ok(ext.iter().position(|&d| d > 0).expect("Ext^idim(D(A), X) is nonzero for a nonzero module"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuslanderWitness {
    /// Position `i` in the coresolution of the regular module.
    pub degree: usize,
    /// Vertex of the injective summand `I_x` of `I^i` with `pdim I_x > i`.
    pub vertex: usize,
    pub projective_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuslanderVerdict {
    pub regular: bool,
    pub witness: Option<AuslanderWitness>,
    /// `injective_pdims[x] = pdim I_x`.
    pub injective_pdims: Vec<usize>,
    /// Sorted summand vertices of each `I^i` in the minimal injective
    /// coresolution of `A_A`.
    pub coresolution: Vec<Vec<usize>>,
    pub global_dimension: usize,
}

/// Checks `pdim I^i <= i` along the minimal injective coresolution of the
/// regular module. The coresolution of `A` is the sum of those of the `P_u`.
pub fn is_auslander_regular<F: Field>(alg: &BQAlgebra) -> Result<AuslanderVerdict, HomologyError> {
    let n = alg.len();
    let mut injective_pdims = Vec::with_capacity(n);
    for x in 0..n {
        injective_pdims.push(minimal_projective_resolution(alg, &QuiverRep::<F>::injective(alg, x))?.length());
    }
    let mut coresolution: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        let co = minimal_injective_coresolution(alg, &QuiverRep::<F>::projective(alg, u))?;
        for (i, term) in co.terms().iter().enumerate() {
            if coresolution.len() <= i {
                coresolution.push(Vec::new());
            }
            coresolution[i].extend(term.iter().copied());
        }
    }
    for term in &mut coresolution {
        term.sort_unstable();
    }
    let witness = coresolution.iter().enumerate().find_map(|(i, term)| {
        term.iter().find(|&&x| injective_pdims[x] > i).map(|&x| AuslanderWitness {
            degree: i,
            vertex: x,
            projective_dimension: injective_pdims[x],
        })
    });
    let global_dimension = injective_pdims.iter().copied().max().unwrap_or(0);
    Ok(AuslanderVerdict { regular: witness.is_none(), witness, injective_pdims, coresolution, global_dimension })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradeBijectionResult {
    /// `image[v] = x` when `R(S_v) = S_x`.
    pub permutation: PermutationMatrix,
    /// `grades[v] = grade S_v`.
    pub grades: Vec<usize>,
    /// `cogrades[v] = cograde R(S_v)`.
    pub cogrades: Vec<usize>,
}

/// Iyama's grade bijection `S -> top D Ext^g(S, A)` with `g = grade S`.
///
/// `Ext^g(S, A)` is assembled as a left module, i.e. a representation of the
/// opposite quiver: its space at `u` is the cohomology of `Hom(P_*, P_u)` and
/// an arrow `a: u -> u'` acts by left multiplication `P_{u'} -> P_u`. The top
/// of its dual is the dual of its socle.
pub fn grade_bijection<F: Field>(alg: &BQAlgebra) -> Result<GradeBijectionResult, HomologyError> {
    let verdict = is_auslander_regular::<F>(alg)?;
    if let Some(w) = verdict.witness {
        return Err(HomologyError::NotAuslanderRegular { degree: w.degree, vertex: alg.label(w.vertex).to_string() });
    }
    let n = alg.len();
    let mut image = Vec::with_capacity(n);
    let mut grades = Vec::with_capacity(n);
    for v in 0..n {
        let r = minimal_projective_resolution(alg, &QuiverRep::<F>::simple(alg, v))?;
        let g = grade_of_resolution(alg, &r);
        let socle = ext_socle(alg, &r, g);
        let support: Vec<usize> = (0..n).filter(|&x| socle[x] > 0).collect();
        if support.len() != 1 || socle[support[0]] != 1 {
            return Err(HomologyError::NonSimpleTop { vertex: alg.label(v).to_string(), socle });
        }
        image.push(support[0]);
        grades.push(g);
    }
    let permutation = PermutationMatrix::new(image).map_err(|_| HomologyError::NotABijection)?;
    let mut cogrades = Vec::with_capacity(n);
    for v in 0..n {
        let x = permutation.apply(v);
        let c = cograde(alg, &QuiverRep::<F>::simple(alg, x))?;
        if c != grades[v] {
            return Err(HomologyError::GradeMismatch { vertex: alg.label(v).to_string(), grade: grades[v], cograde: c });
        }
        cogrades.push(c);
    }
    Ok(GradeBijectionResult { permutation, grades, cogrades })
}

/// Socle dimensions of `Ext^g(X, A)` as a left module.
fn ext_socle<F: Field>(alg: &BQAlgebra, r: &ProjectiveResolution<F>, g: usize) -> Vec<usize> {
    let n = alg.len();
    let summands = &r.terms()[g];
    let cohomology: Vec<_> = (0..n)
        .map(|u| r.hom_cochains(alg, &QuiverRep::projective(alg, u)).cohomology(g))
        .collect();
    // left multiplication by arrow a: s -> t, from Hom(P_g, P_t) to Hom(P_g, P_s)
    let left_action = |k: usize| -> Matrix<F> {
        let a = alg.arrows()[k];
        let step = alg.arrow_path(k);
        let rows: usize = summands.iter().map(|&x| alg.path_count(a.source, x)).sum();
        let cols: usize = summands.iter().map(|&x| alg.path_count(a.target, x)).sum();
        let mut m = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for &x in summands {
            for q in 0..alg.path_count(a.target, x) {
                m[(r0 + alg.compose(a.source, a.target, x, step, q), c0 + q)] = F::one();
            }
            r0 += alg.path_count(a.source, x);
            c0 += alg.path_count(a.target, x);
        }
        m
    };
    let mut stacked: Vec<Matrix<F>> = cohomology.iter().map(|h| Matrix::zeros(0, h.dim())).collect();
    for (k, a) in alg.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        if cohomology[t].dim() == 0 {
            continue;
        }
        let moved = left_action(k).mul_ok(cohomology[t].representatives());
        let induced = cohomology[s].coordinates(&moved);
        stacked[t] = stacked[t].vstack(&induced);
    }
    (0..n).map(|x| cohomology[x].dim() - stacked[x].rank()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowmotionCoxeterReport {
    /// `R^{-1} C`.
    pub product: RationalMatrix,
    pub minimal_polynomial: IntPolynomial,
    /// `(R^{-1} C)^2 = id`.
    pub involution: bool,
}

pub fn rowmotion_coxeter_report(coxeter: &RationalMatrix, rowmotion: &PermutationMatrix) -> Result<RowmotionCoxeterReport, HomologyError> {
    let product = rowmotion.inverse_times(coxeter)?;
    let minimal_polynomial = minimal_polynomial(&product)?;
    let involution = crate::linalg::check_identity_square(&product)?;
    Ok(RowmotionCoxeterReport { product, minimal_polynomial, involution })
}
