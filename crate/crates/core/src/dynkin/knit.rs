use serde::{Deserialize, Serialize};

use crate::field::{Field, Rational};
use crate::homology::{hom_dim, minimal_injective_coresolution, minimal_projective_resolution, BQAlgebra, QuiverRep};
use crate::linalg::{coxeter_from_cartan, PermutationMatrix, RationalMatrix};

use super::DynkinError;

/// Every indecomposable module over a representation-finite hereditary
/// algebra, with the translate, the Nakayama matching and all hom dimensions.
#[derive(Clone, Debug)]
pub struct ARQuiverData<F> {
    pub modules: Vec<QuiverRep<F>>,
    pub labels: Vec<String>,
    pub is_projective: Vec<bool>,
    pub is_injective: Vec<bool>,
    /// `tau_inv[i] = Some(j)` when `M_j` is the inverse translate of `M_i`.
    pub tau_inv: Vec<Option<usize>>,
    /// `nu[i] = Some(j)` when `M_i = P_x` and `M_j = I_x`.
    pub nu: Vec<Option<usize>>,
    pub hom_dims: Vec<Vec<usize>>,
    /// Knitting generation: `M_i` is `tau^{-generation} P_x`.
    pub generation: Vec<usize>,
    /// Cluster-tilting degree, 1 for the additive generator of `mod A`.
    pub n: usize,
}

impl<F: Field> ARQuiverData<F> {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// `tau`, the inverse of `tau_inv`, on non-projectives.
    pub fn tau(&self) -> Vec<Option<usize>> {
        let mut t = vec![None; self.len()];
        for (i, j) in self.tau_inv.iter().enumerate() {
            if let Some(j) = j {
                t[*j] = Some(i);
            }
        }
        t
    }

    pub fn dim_vectors(&self) -> Vec<Vec<usize>> {
        self.modules.iter().map(|m| m.dims().to_vec()).collect()
    }

    pub fn cartan(&self) -> RationalMatrix {
        let n = self.len();
        RationalMatrix::from_fn(n, n, |i, j| Rational::integer(self.hom_dims[i][j] as i64))
    }
}

/// Knits the AR quiver from the projectives by repeated inverse translates,
/// bounded by the positive-root count of the type when known.
pub fn knit<F: Field>(alg: &BQAlgebra) -> Result<ARQuiverData<F>, DynkinError> {
    knit_with_bound(alg, 200)
}

/// `tau^{-1} X` is the cokernel of `nu^{-1}(I^0) -> nu^{-1}(I^1)` built from
/// a minimal injective copresentation `0 -> X -> I^0 -> I^1`.
pub fn knit_with_bound<F: Field>(alg: &BQAlgebra, bound: usize) -> Result<ARQuiverData<F>, DynkinError> {
    let n = alg.len();
    let mut modules: Vec<QuiverRep<F>> = (0..n).map(|v| QuiverRep::projective(alg, v)).collect();
    let mut generation = vec![0; n];
    let mut tau_inv = Vec::new();
    let mut is_injective = Vec::new();
    let mut i = 0;
    while i < modules.len() {
        let co = minimal_injective_coresolution(alg, &modules[i])?;
        if co.length() == 0 {
            is_injective.push(true);
            tau_inv.push(None);
        } else {
            let d = &co.nu_maps()[0];
            let target = QuiverRep::projective_sum(alg, d.target());
            let (next, _) = d.realize(alg).cokernel(alg, &target);
            if hom_dim(alg, &next, &next)? != 1 {
                return Err(DynkinError::MeshMismatch { module: format!("inverse translate of module {i}") });
            }
            is_injective.push(false);
            tau_inv.push(Some(modules.len()));
            generation.push(generation[i] + 1);
            modules.push(next);
            if modules.len() > bound {
                return Err(DynkinError::NonDynkin { bound });
            }
        }
        i += 1;
    }
    let dims: Vec<Vec<usize>> = modules.iter().map(|m| m.dims().to_vec()).collect();
    let mut nu = vec![None; modules.len()];
    for (x, slot) in nu.iter_mut().enumerate().take(n) {
        let injective = QuiverRep::<F>::injective(alg, x);
        let j = dims
            .iter()
            .position(|d| d.as_slice() == injective.dims())
            .ok_or_else(|| DynkinError::MalformedData(format!("I_{} not reached by knitting", alg.label(x))))?;
        if !is_injective[j] {
            return Err(DynkinError::MalformedData(format!("module matching I_{} is not injective", alg.label(x))));
        }
        *slot = Some(j);
    }
    let hom_dims = modules
        .iter()
        .map(|a| modules.iter().map(|b| hom_dim(alg, a, b)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let labels = (0..modules.len())
        .map(|i| {
            if i < n {
                format!("P{}", alg.label(i))
            } else if let Some(x) = nu.iter().position(|&j| j == Some(i)) {
                format!("I{}", alg.label(x))
            } else {
                let digits: Vec<String> = dims[i].iter().map(ToString::to_string).collect();
                format!("M{}", digits.join(""))
            }
        })
        .collect();
    let data = ARQuiverData {
        modules,
        labels,
        is_projective: (0..dims.len()).map(|i| i < n).collect(),
        is_injective,
        tau_inv,
        nu,
        hom_dims,
        generation,
        n: 1,
    };
    check_meshes(alg, &data)?;
    Ok(data)
}

/// Reconstructs the arrows of the AR quiver (`P_y -> P_z` for each arrow
/// `z -> y` of the quiver, and `Y -> tau^{-1} Z` for each arrow `Z -> Y`) and
/// checks `dim tau^{-1} Z + dim Z = sum of dim Y` over the arrows `Z -> Y`.
fn check_meshes<F: Field>(alg: &BQAlgebra, data: &ARQuiverData<F>) -> Result<(), DynkinError> {
    let m = data.len();
    let tau = data.tau();
    let mut pred: Vec<Vec<usize>> = vec![Vec::new(); m];
    for a in alg.arrows() {
        pred[a.source].push(a.target);
    }
    loop {
        let mut changed = false;
        for j in 0..m {
            let Some(z) = tau[j] else { continue };
            let mut next: Vec<usize> = (0..m).filter(|&y| pred[y].contains(&z)).collect();
            next.sort_unstable();
            if next != pred[j] {
                pred[j] = next;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let dims = data.dim_vectors();
    for z in 0..m {
        let Some(t) = data.tau_inv[z] else { continue };
        let mut middle = vec![0usize; alg.len()];
        for y in (0..m).filter(|&y| pred[y].contains(&z)) {
            for (acc, d) in middle.iter_mut().zip(&dims[y]) {
                *acc += d;
            }
        }
        let outer: Vec<usize> = dims[z].iter().zip(&dims[t]).map(|(a, b)| a + b).collect();
        if outer != middle {
            return Err(DynkinError::MeshMismatch { module: data.labels[z].clone() });
        }
    }
    Ok(())
}

/// Cartan and Coxeter matrices of `B = End(M)` in the module order of the
/// data: `Hom_B(L_X, L_Y) = Hom_A(X, Y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuslanderCoxeter {
    pub cartan: RationalMatrix,
    pub coxeter: RationalMatrix,
}

/// Computes `-M^{-1} M^T` and checks every column against the expansion in
/// terms of resolutions: `-[L_{nu N}]` for projective `N`, otherwise
/// `sum_i (-1)^(i+1) [L_{nu P_i}] + (-1)^n [L_{tau N}]` over a minimal
/// projective resolution `P_*` of `N`.
pub fn auslander_coxeter<F: Field>(alg: &BQAlgebra, data: &ARQuiverData<F>) -> Result<AuslanderCoxeter, DynkinError> {
    let cartan = data.cartan();
    let coxeter = coxeter_from_cartan(&cartan).map_err(crate::homology::HomologyError::from)?;
    let m = data.len();
    let tau = data.tau();
    for col in 0..m {
        let mut expected = vec![0i64; m];
        if data.is_projective[col] {
            let j = data.nu[col].ok_or(DynkinError::NotBijective)?;
            expected[j] -= 1;
        } else {
            let r = minimal_projective_resolution(alg, &data.modules[col])?;
            for (i, term) in r.terms().iter().enumerate() {
                let sign = if i % 2 == 0 { -1 } else { 1 };
                for &x in term {
                    expected[data.nu[x].ok_or(DynkinError::NotBijective)?] += sign;
                }
            }
            let t = tau[col].ok_or(DynkinError::NotBijective)?;
            expected[t] += if data.n.is_multiple_of(2) { 1 } else { -1 };
        }
        if (0..m).any(|i| coxeter[(i, col)] != Rational::integer(expected[i])) {
            return Err(DynkinError::CoxeterCrossCheckFailed { column: data.labels[col].clone() });
        }
    }
    Ok(AuslanderCoxeter { cartan, coxeter })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndomorphismGradeBijection {
    pub permutation: PermutationMatrix,
    /// 0 for projective summands, `n + 1` otherwise.
    pub grades: Vec<usize>,
}

/// `R(L_N) = L_{nu N}` for projective `N`, `L_{tau_n N}` otherwise.
pub fn endomorphism_grade_bijection<F: Field>(data: &ARQuiverData<F>) -> Result<EndomorphismGradeBijection, DynkinError> {
    let tau = data.tau();
    let image = (0..data.len())
        .map(|i| if data.is_projective[i] { data.nu[i] } else { tau[i] }.ok_or(DynkinError::NotBijective))
        .collect::<Result<Vec<_>, _>>()?;
    let permutation = PermutationMatrix::new(image).map_err(|_| DynkinError::NotBijective)?;
    let grades = data.is_projective.iter().map(|&p| if p { 0 } else { data.n + 1 }).collect();
    Ok(EndomorphismGradeBijection { permutation, grades })
}

/// Pairs `(X, Y)` violating `dim Ext^1(X, Y) = dim Hom(tau^-1 Y, X)`,
/// with `Ext^1` computed from a minimal projective resolution of `X`.
pub fn ar_formula_violations<F: Field>(alg: &BQAlgebra, data: &ARQuiverData<F>) -> Result<Vec<(usize, usize)>, DynkinError> {
    let mut bad = Vec::new();
    for x in 0..data.len() {
        let r = minimal_projective_resolution(alg, &data.modules[x])?;
        for y in 0..data.len() {
            let ext1 = r.ext_dims(alg, &data.modules[y]).get(1).copied().unwrap_or(0);
            let hom = data.tau_inv[y].map_or(0, |t| data.hom_dims[t][x]);
            if ext1 != hom {
                bad.push((x, y));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{DynkinSpec, DynkinType};
    use crate::linalg::check_nilpotent_shift;

    fn a2() -> BQAlgebra {
        "A2".parse::<DynkinSpec>().unwrap().algebra().unwrap()
    }

    #[test]
    fn a2_knits_three_modules() {
        let alg = a2();
        let data = knit::<Rational>(&alg).unwrap();
        assert_eq!(data.labels, vec!["P1", "P2", "I1"]);
        assert_eq!(data.dim_vectors(), vec![vec![1, 1], vec![0, 1], vec![1, 0]]);
        assert_eq!(data.tau(), vec![None, None, Some(1)]);
        assert_eq!(data.nu, vec![Some(2), Some(0), None]);
    }

    #[test]
    fn a2_auslander_algebra() {
        let alg = a2();
        let data = knit::<Rational>(&alg).unwrap();
        let ac = auslander_coxeter(&alg, &data).unwrap();
        assert_eq!(ac.cartan, RationalMatrix::from_i64_rows(&[&[1, 0, 1], &[1, 1, 0], &[0, 0, 1]]));
        let r = endomorphism_grade_bijection(&data).unwrap();
        assert_eq!(r.permutation.image(), &[2, 0, 1]);
        assert_eq!(r.grades, vec![0, 0, 2]);
        let product = r.permutation.times_inverse(&ac.coxeter).unwrap();
        assert!(check_nilpotent_shift(&product).unwrap());
    }

    #[test]
    fn a1_is_a_single_point() {
        let alg = "A1".parse::<DynkinSpec>().unwrap().algebra().unwrap();
        let data = knit::<Rational>(&alg).unwrap();
        assert_eq!(data.len(), 1);
        let ac = auslander_coxeter(&alg, &data).unwrap();
        assert_eq!(ac.coxeter, RationalMatrix::from_i64_rows(&[&[-1]]));
        assert!(endomorphism_grade_bijection(&data).unwrap().permutation.image() == [0]);
    }

    #[test]
    fn root_counts_small_types() {
        for kind in [DynkinType::A(4), DynkinType::D(4)] {
            for spec in DynkinSpec::all_orientations(kind) {
                let alg = spec.algebra().unwrap();
                assert_eq!(knit::<Rational>(&alg).unwrap().len(), kind.positive_roots(), "{spec}");
            }
        }
    }
}
