//! Batch verification of `(ρ⁻¹C)² = id` over many posets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::{coxeter_from_cartan, LinalgError, RationalMatrix};
use crate::poset::{labeled_posets, order_ideals_with_cap, random_poset, Poset, PosetError, PosetFile};

/// Largest poset size accepted for exhaustive enumeration.
pub const MAX_ENUMERATE_SIZE: usize = 6;
/// Largest poset size accepted for random sampling.
pub const MAX_RANDOM_SIZE: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("poset size {size} exceeds the search cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("empty size range {0}..={1}")]
    EmptyRange(usize, usize),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SearchPlan {
    /// Every labeled poset with `0..=max_size` elements.
    Enumerate { max_size: usize },
    /// `count` posets with sizes drawn uniformly from `min_size..=max_size`.
    Random { count: usize, min_size: usize, max_size: usize, seed: u64 },
}

impl SearchPlan {
    pub fn posets(&self) -> Result<Vec<Poset>, SearchError> {
        match *self {
            SearchPlan::Enumerate { max_size } => {
                if max_size > MAX_ENUMERATE_SIZE {
                    return Err(SearchError::TooLarge { size: max_size, cap: MAX_ENUMERATE_SIZE });
                }
                Ok((0..=max_size).flat_map(labeled_posets).collect())
            }
            SearchPlan::Random { count, min_size, max_size, seed } => {
                if min_size > max_size {
                    return Err(SearchError::EmptyRange(min_size, max_size));
                }
                if max_size > MAX_RANDOM_SIZE {
                    return Err(SearchError::TooLarge { size: max_size, cap: MAX_RANDOM_SIZE });
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Ok((0..count)
                    .map(|_| {
                        let n = rng.random_range(min_size..=max_size);
                        random_poset(n, &mut rng)
                    })
                    .collect())
            }
        }
    }
}

/// Outcome for one poset `P` with `L = J(P)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopkinsCheck {
    pub poset: PosetFile,
    pub lattice_size: usize,
    /// `C` from the zeta matrix agrees with the antichain formula.
    pub coxeter_formulas_agree: bool,
    pub identity_holds: bool,
    /// `(ρ⁻¹C)² - id`, present when the identity fails.
    pub residual: Option<RationalMatrix>,
}

impl HopkinsCheck {
    pub fn passed(&self) -> bool {
        self.coxeter_formulas_agree && self.identity_holds
    }
}

pub fn hopkins_check(poset: &Poset, ideal_cap: usize) -> Result<HopkinsCheck, SearchError> {
    let lattice = order_ideals_with_cap(poset, ideal_cap)?;
    let coxeter = coxeter_from_cartan(&lattice.zeta())?;
    let coxeter_formulas_agree = coxeter == lattice.coxeter_by_antichains();
    let product = lattice.rowmotion_matrix().inverse_times(&coxeter)?;
    let residual = product.mul_ok(&product).sub(&RationalMatrix::identity(lattice.len()))?;
    let identity_holds = residual.is_zero();
    Ok(HopkinsCheck {
        poset: poset.to_file(),
        lattice_size: lattice.len(),
        coxeter_formulas_agree,
        identity_holds,
        residual: (!identity_holds).then_some(residual),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeTally {
    pub size: usize,
    pub posets: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub plan: SearchPlan,
    pub tested: usize,
    pub passed: usize,
    pub by_size: Vec<SizeTally>,
    pub largest_lattice: usize,
    /// Failing posets, sorted by size and then by cover list.
    pub violations: Vec<HopkinsCheck>,
}

/// Evaluates posets in parallel; the outcome depends only on the plan.
pub fn run_search(plan: &SearchPlan, ideal_cap: usize) -> Result<SearchOutcome, SearchError> {
    let posets = plan.posets()?;
    let checks: Vec<HopkinsCheck> = posets.par_iter().map(|p| hopkins_check(p, ideal_cap)).collect::<Result<_, _>>()?;
    let mut by_size: Vec<SizeTally> = Vec::new();
    for (p, c) in posets.iter().zip(&checks) {
        let size = p.len();
        if by_size.len() <= size {
            by_size.extend((by_size.len()..=size).map(|s| SizeTally { size: s, posets: 0, passed: 0 }));
        }
        by_size[size].posets += 1;
        by_size[size].passed += c.passed() as usize;
    }
    by_size.retain(|t| t.posets > 0);
    let largest_lattice = checks.iter().map(|c| c.lattice_size).max().unwrap_or(0);
    let passed = checks.iter().filter(|c| c.passed()).count();
    let mut violations: Vec<HopkinsCheck> = checks.into_iter().filter(|c| !c.passed()).collect();
    violations.sort_by(|a, b| {
        (a.poset.elements.len(), &a.poset.covers, &a.poset.elements).cmp(&(b.poset.elements.len(), &b.poset.covers, &b.poset.elements))
    });
    violations.dedup();
    Ok(SearchOutcome { plan: plan.clone(), tested: posets.len(), passed, by_size, largest_lattice, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::DEFAULT_IDEAL_CAP;

    #[test]
    fn small_enumeration_has_no_violations() {
        let out = run_search(&SearchPlan::Enumerate { max_size: 3 }, DEFAULT_IDEAL_CAP).unwrap();
        assert_eq!(out.tested, 1 + 1 + 3 + 19);
        assert_eq!(out.passed, out.tested);
        assert!(out.violations.is_empty());
        assert_eq!(out.largest_lattice, 8);
    }

    #[test]
    fn random_plan_is_reproducible_and_capped() {
        let plan = SearchPlan::Random { count: 20, min_size: 2, max_size: 5, seed: 7 };
        assert_eq!(plan.posets().unwrap(), plan.posets().unwrap());
        let big = SearchPlan::Random { count: 1, min_size: 2, max_size: 40, seed: 7 };
        assert!(matches!(big.posets(), Err(SearchError::TooLarge { .. })));
        assert!(matches!(SearchPlan::Enumerate { max_size: 9 }.posets(), Err(SearchError::TooLarge { .. })));
    }

    #[test]
    fn ideal_cap_is_enforced() {
        let p = Poset::antichain(&["a", "b", "c", "d"]);
        assert!(matches!(hopkins_check(&p, 10), Err(SearchError::Poset(PosetError::SizeLimitExceeded { .. }))));
    }
}
