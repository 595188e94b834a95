use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::field::{Field, Rational};
use crate::linalg::{coxeter_from_cartan, minimal_polynomial, IntPolynomial, PermutationMatrix, RationalMatrix};

use super::{ARQuiverData, DynkinError};

pub const NRF_SCHEMA_VERSION: u32 = 1;

/// Externally supplied data of an `n`-cluster-tilting module `M`: its
/// indecomposable summands, which are projective or injective, the matrix
/// of `dim Hom(M_i, M_j)`, and the maps `nu` and `tau_n` by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NrfFile {
    pub schema_version: u32,
    pub n: usize,
    pub labels: Vec<String>,
    pub projective: Vec<bool>,
    pub injective: Vec<bool>,
    pub hom_dims: Vec<Vec<i64>>,
    pub nu: BTreeMap<String, String>,
    pub tau_n: BTreeMap<String, String>,
}

/// Validated [`NrfFile`] with labels resolved to indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NrfData {
    pub n: usize,
    pub labels: Vec<String>,
    pub cartan: RationalMatrix,
    /// `image[i]`: `nu(M_i)` for projective `M_i`, `tau_n(M_i)` otherwise.
    pub grade_bijection: PermutationMatrix,
}

impl NrfData {
    pub fn from_file(file: &NrfFile) -> Result<Self, DynkinError> {
        let bad = |msg: String| Err(DynkinError::MalformedData(msg));
        if file.schema_version != NRF_SCHEMA_VERSION {
            return bad(format!("unsupported schema version {}", file.schema_version));
        }
        if file.n == 0 {
            return bad("n must be at least 1".into());
        }
        let m = file.labels.len();
        if m == 0 {
            return bad("no modules".into());
        }
        let mut index = HashMap::new();
        for (i, l) in file.labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return bad(format!("duplicate label {l}"));
            }
        }
        if file.projective.len() != m || file.injective.len() != m {
            return bad("flag arrays must have one entry per label".into());
        }
        if file.hom_dims.len() != m || file.hom_dims.iter().any(|r| r.len() != m) {
            return bad(format!("hom_dims must be {m}x{m}"));
        }
        if file.hom_dims.iter().flatten().any(|&d| d < 0) {
            return bad("hom dimensions must be nonnegative".into());
        }
        let lookup = |l: &String| index.get(l.as_str()).copied().ok_or_else(|| DynkinError::MalformedData(format!("unknown label {l}")));
        let mut image = vec![usize::MAX; m];
        for (map, name, domain, codomain) in [
            (&file.nu, "nu", &file.projective, &file.injective),
            (&file.tau_n, "tau_n", &file.projective.iter().map(|p| !p).collect(), &file.injective.iter().map(|p| !p).collect()),
        ] {
            let domain: &Vec<bool> = domain;
            let codomain: &Vec<bool> = codomain;
            for (k, v) in map {
                let (i, j) = (lookup(k)?, lookup(v)?);
                if !domain[i] || !codomain[j] {
                    return bad(format!("{name} maps {k} to {v} outside its domain or codomain"));
                }
                image[i] = j;
            }
            if map.len() != domain.iter().filter(|&&b| b).count() {
                return bad(format!("{name} must be defined on exactly its domain"));
            }
        }
        let grade_bijection =
            PermutationMatrix::new(image).map_err(|_| DynkinError::MalformedData("nu and tau_n do not form a bijection".into()))?;
        let cartan = RationalMatrix::from_fn(m, m, |i, j| Rational::integer(file.hom_dims[i][j]));
        Ok(NrfData { n: file.n, labels: file.labels.clone(), cartan, grade_bijection })
    }
}

impl<F: Field> ARQuiverData<F> {
    pub fn to_nrf(&self) -> NrfFile {
        let tau = self.tau();
        let by = |pairs: &mut dyn Iterator<Item = (usize, usize)>| -> BTreeMap<String, String> {
            pairs.map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone())).collect()
        };
        NrfFile {
            schema_version: NRF_SCHEMA_VERSION,
            n: self.n,
            labels: self.labels.clone(),
            projective: self.is_projective.clone(),
            injective: self.is_injective.clone(),
            hom_dims: self.hom_dims.iter().map(|r| r.iter().map(|&d| d as i64).collect()).collect(),
            nu: by(&mut self.nu.iter().enumerate().filter_map(|(i, j)| j.map(|j| (i, j)))),
            tau_n: by(&mut tau.iter().enumerate().filter_map(|(i, j)| j.map(|j| (i, j)))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NrfReport {
    pub n: usize,
    /// The identity checked: `(CR^-1)^2 = id` for even `n`,
    /// `(CR^-1 + id)^2 = 0` for odd `n`.
    pub identity: String,
    pub coxeter: RationalMatrix,
    pub grade_bijection: PermutationMatrix,
    /// `C R^{-1}`.
    pub product: RationalMatrix,
    pub minimal_polynomial: IntPolynomial,
    pub passed: bool,
    /// `(CR^-1)^2 - id` or `(CR^-1 + id)^2` when the check fails.
    pub witness: Option<RationalMatrix>,
}

pub fn verify_nrf_identity(data: &NrfData) -> Result<NrfReport, DynkinError> {
    let coxeter = coxeter_from_cartan(&data.cartan).map_err(|e| DynkinError::MalformedData(e.to_string()))?;
    let product = data.grade_bijection.times_inverse(&coxeter).map_err(|e| DynkinError::MalformedData(e.to_string()))?;
    let id = RationalMatrix::identity(product.rows());
    let (identity, residual) = if data.n.is_multiple_of(2) {
        ("(CR^-1)^2 = id", product.mul_ok(&product).sub(&id).expect("square"))
    } else {
        let shifted = product.add(&id).expect("square");
        ("(CR^-1 + id)^2 = 0", shifted.mul_ok(&shifted))
    };
    let passed = residual.is_zero();
    let minimal_polynomial = minimal_polynomial(&product).map_err(|e| DynkinError::MalformedData(e.to_string()))?;
    Ok(NrfReport {
        n: data.n,
        identity: identity.to_string(),
        coxeter,
        grade_bijection: data.grade_bijection.clone(),
        product,
        minimal_polynomial,
        passed,
        witness: (!passed).then_some(residual),
    })
}
