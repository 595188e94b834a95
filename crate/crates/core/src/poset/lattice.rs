use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::field::{Field, Rational};
use crate::linalg::{PermutationMatrix, RationalMatrix};

use super::{Antichain, OrderIdeal, Poset, PosetError};

/// Default cap on the number of order ideals enumerated.
pub const DEFAULT_IDEAL_CAP: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeVerdict {
    pub is_lattice: bool,
    pub is_distributive: bool,
}

/// The distributive lattice `J(P)` of order ideals of a poset.
///
/// Ideals are ordered by cardinality and then lexicographically on their
/// sorted element indices. This is a linear extension of inclusion, so the
/// zeta matrix is unit upper triangular.
#[derive(Clone, Debug)]
pub struct OrderIdealLattice {
    parent: Poset,
    ideals: Vec<OrderIdeal>,
    index: HashMap<FixedBitSet, usize>,
}

pub fn order_ideals(poset: &Poset) -> Result<OrderIdealLattice, PosetError> {
    order_ideals_with_cap(poset, DEFAULT_IDEAL_CAP)
}

pub fn order_ideals_with_cap(poset: &Poset, cap: usize) -> Result<OrderIdealLattice, PosetError> {
    let order = poset.linear_extension();
    let mut found = Vec::new();
    let mut current = poset.empty_set();
    enumerate(poset, &order, 0, &mut current, &mut found, cap)?;
    let mut keyed: Vec<(usize, Vec<usize>, FixedBitSet)> =
        found.into_iter().map(|s| (s.count_ones(..), s.ones().collect(), s)).collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let ideals: Vec<OrderIdeal> = keyed.into_iter().map(|(_, _, s)| OrderIdeal::new_unchecked(s)).collect();
    let index = ideals.iter().enumerate().map(|(i, ideal)| (ideal.members().clone(), i)).collect();
    Ok(OrderIdealLattice { parent: poset.clone(), ideals, index })
}

fn enumerate(
    poset: &Poset,
    order: &[usize],
    pos: usize,
    current: &mut FixedBitSet,
    found: &mut Vec<FixedBitSet>,
    cap: usize,
) -> Result<(), PosetError> {
    if pos == order.len() {
        if found.len() == cap {
            return Err(PosetError::SizeLimitExceeded { cap });
        }
        found.push(current.clone());
        return Ok(());
    }
    let x = order[pos];
    enumerate(poset, order, pos + 1, current, found, cap)?;
    // Everything below x precedes it in the linear extension.
    if poset.down_set(x).ones().all(|y| y == x || current.contains(y)) {
        current.insert(x);
        enumerate(poset, order, pos + 1, current, found, cap)?;
        current.set(x, false);
    }
    Ok(())
}

impl OrderIdealLattice {
    pub fn parent(&self) -> &Poset {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[OrderIdeal] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> &OrderIdeal {
        &self.ideals[i]
    }

    pub fn index_of(&self, ideal: &OrderIdeal) -> Option<usize> {
        self.index.get(ideal.members()).copied()
    }

    fn index_of_set(&self, set: &FixedBitSet) -> usize {
        self.index[set]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.ideals[i].is_subset(&self.ideals[j])
    }

    /// Union of two ideals.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let mut s = self.ideals[i].members().clone();
        s.union_with(self.ideals[j].members());
        self.index_of_set(&s)
    }

    /// Intersection of two ideals.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let mut s = self.ideals[i].members().clone();
        s.intersect_with(self.ideals[j].members());
        self.index_of_set(&s)
    }

    pub fn label(&self, i: usize) -> String {
        self.parent.format_set(self.ideals[i].members())
    }

    /// The lattice as a poset under inclusion, in the lattice's element order.
    /// Elements are labelled by their ideal (`{a,b}`, `∅`), falling back to
    /// `I<k>` if those strings collide.
    pub fn as_poset(&self) -> Poset {
        let mut labels: Vec<String> = (0..self.len()).map(|i| self.label(i)).collect();
        let mut uniq = labels.clone();
        uniq.sort();
        uniq.dedup();
        if uniq.len() != labels.len() {
            labels = (0..self.len()).map(|i| format!("I{i}")).collect();
        }
        Poset::from_relation(labels, |a, b| self.leq(a, b)).expect("inclusion is a partial order")
    }

    /// Rowmotion as a permutation of lattice elements: `I(S) -> M(S)`.
    pub fn rowmotion_matrix(&self) -> PermutationMatrix {
        let image = self
            .ideals
            .iter()
            .map(|ideal| self.index_of_set(ideal.rowmotion(&self.parent).members()))
            .collect();
        PermutationMatrix::new(image).expect("rowmotion is a bijection on order ideals")
    }

    /// Zeta matrix: `zeta[i][j] = 1` iff ideal `i` is contained in ideal `j`.
    pub fn zeta(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.len(), self.len(), |i, j| {
            if self.leq(i, j) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Möbius matrix by the defining recursion
    /// `mu(i,i) = 1`, `mu(i,j) = -sum_{i <= k < j} mu(i,k)`.
    pub fn mobius(&self) -> RationalMatrix {
        let n = self.len();
        let mut mu = vec![0i64; n * n];
        for i in 0..n {
            mu[i * n + i] = 1;
            for j in i + 1..n {
                if !self.leq(i, j) {
                    continue;
                }
                let s: i64 = (i..j).filter(|&k| self.leq(i, k) && self.leq(k, j)).map(|k| mu[i * n + k]).sum();
                mu[i * n + j] = -s;
            }
        }
        RationalMatrix::from_fn(n, n, |i, j| Rational::integer(mu[i * n + j]))
    }

    pub fn zeta_and_mobius(&self) -> (RationalMatrix, RationalMatrix) {
        (self.zeta(), self.mobius())
    }

    /// Coxeter matrix of `kL` from the alternating sum over subsets of each
    /// antichain: column `I(S)` is `-sum_{T ⊆ S} (-1)^{|T|} e_{M(T)}`.
    pub fn coxeter_by_antichains(&self) -> RationalMatrix {
        let n = self.len();
        let mut c = RationalMatrix::zeros(n, n);
        for (j, ideal) in self.ideals.iter().enumerate() {
            let s = ideal.max_antichain(&self.parent).indices();
            for mask in 0u64..(1u64 << s.len()) {
                let t: Vec<usize> = (0..s.len()).filter(|b| mask >> b & 1 == 1).map(|b| s[b]).collect();
                let sub = Antichain::from_indices(&self.parent, &t).expect("subsets of antichains are antichains");
                let row = self.index_of_set(sub.complement_ideal(&self.parent).members());
                let sign = if t.len().is_multiple_of(2) { -1 } else { 1 };
                c[(row, j)] = c[(row, j)].add(&Rational::integer(sign));
            }
        }
        c
    }
}

/// Birkhoff's inverse: a distributive lattice `L` is isomorphic to the order
/// ideals of its join-irreducible elements.
#[derive(Clone, Debug)]
pub struct BirkhoffIso {
    /// The induced subposet of join-irreducibles of `L`.
    pub join_irreducibles: Poset,
    /// Index in `L` of each join-irreducible.
    pub elements: Vec<usize>,
    /// `ideal_to_element[k]` is the element of `L` matching ideal `k` of
    /// `order_ideals(join_irreducibles)`.
    pub ideal_to_element: Vec<usize>,
    pub lattice: OrderIdealLattice,
}

pub fn join_irreducibles(lattice: &Poset) -> Result<BirkhoffIso, PosetError> {
    if !lattice.lattice_tests().is_distributive {
        return Err(PosetError::NotDistributive);
    }
    let elements: Vec<usize> = (0..lattice.len()).filter(|&x| lattice.lower_covers(x).len() == 1).collect();
    let sub = lattice.induced(&elements);
    let ideals = order_ideals(&sub)?;
    let bottom = (0..lattice.len())
        .find(|&x| lattice.up_set(x).count_ones(..) == lattice.len())
        .expect("a lattice has a bottom");
    let ideal_to_element: Vec<usize> = ideals
        .ideals()
        .iter()
        .map(|ideal| {
            ideal
                .members()
                .ones()
                .map(|k| elements[k])
                .fold(bottom, |acc, x| lattice.join(acc, x).expect("lattice joins exist"))
        })
        .collect();
    let n = ideals.len();
    let bijective = n == lattice.len() && {
        let mut seen = vec![false; n];
        ideal_to_element.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    };
    let order_iso = bijective
        && (0..n).all(|a| (0..n).all(|b| ideals.leq(a, b) == lattice.leq(ideal_to_element[a], ideal_to_element[b])));
    if !order_iso {
        return Err(PosetError::NotDistributive);
    }
    Ok(BirkhoffIso { join_irreducibles: sub, elements, ideal_to_element, lattice: ideals })
}

impl BirkhoffIso {
    /// Rowmotion transported to the elements of `L`.
    pub fn rowmotion_on_lattice(&self) -> PermutationMatrix {
        let rho = self.lattice.rowmotion_matrix();
        let mut image = vec![0; self.ideal_to_element.len()];
        for (k, &x) in self.ideal_to_element.iter().enumerate() {
            image[x] = self.ideal_to_element[rho.apply(k)];
        }
        PermutationMatrix::new(image).expect("conjugate of a permutation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::labeled_posets;

    fn sets(l: &OrderIdealLattice) -> Vec<Vec<usize>> {
        l.ideals().iter().map(OrderIdeal::indices).collect()
    }

    /// Brute force: every subset that is downward closed.
    fn brute_force_ideals(p: &Poset) -> Vec<Vec<usize>> {
        let n = p.len();
        let mut out: Vec<Vec<usize>> = (0u32..1 << n)
            .map(|m| (0..n).filter(|b| m >> b & 1 == 1).collect::<Vec<_>>())
            .filter(|s| s.iter().all(|&x| (0..n).all(|y| !p.leq(y, x) || s.contains(&y))))
            .collect();
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    #[test]
    fn enumeration_examples() {
        let a = Poset::antichain(&["x1", "x2", "x3"]);
        assert_eq!(order_ideals(&a).unwrap().len(), 8);
        let empty = Poset::antichain::<&str>(&[]);
        assert_eq!(sets(&order_ideals(&empty).unwrap()), vec![Vec::<usize>::new()]);
        let c = Poset::chain(2);
        assert_eq!(sets(&order_ideals(&c).unwrap()), vec![vec![], vec![0], vec![0, 1]]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 0..=4 {
            for p in labeled_posets(n) {
                assert_eq!(sets(&order_ideals(&p).unwrap()), brute_force_ideals(&p));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let a = Poset::antichain(&["a", "b", "c", "d"]);
        assert_eq!(order_ideals_with_cap(&a, 15).unwrap_err(), PosetError::SizeLimitExceeded { cap: 15 });
        assert_eq!(order_ideals_with_cap(&a, 16).unwrap().len(), 16);
    }

    #[test]
    fn rowmotion_examples() {
        let a = Poset::antichain(&["x1", "x2", "x3"]);
        let l = order_ideals(&a).unwrap();
        let rho = l.rowmotion_matrix();
        // In an antichain, rowmotion is complementation.
        for (i, ideal) in l.ideals().iter().enumerate() {
            let image = l.ideal(rho.apply(i));
            assert_eq!(image.len() + ideal.len(), 3);
            assert!(ideal.members().is_disjoint(image.members()));
        }
        assert_eq!(rho.order(), 2);

        let c = order_ideals(&Poset::chain(2)).unwrap();
        // ∅ -> {1,2} -> {1} -> ∅
        assert_eq!(c.rowmotion_matrix().image(), &[2, 0, 1]);

        let one = order_ideals(&Poset::chain(1)).unwrap();
        assert_eq!(one.rowmotion_matrix().image(), &[1, 0]);
    }

    #[test]
    fn zeta_mobius_small() {
        let one = order_ideals(&Poset::antichain::<&str>(&[])).unwrap();
        assert_eq!(one.zeta(), RationalMatrix::from_i64_rows(&[&[1]]));
        assert_eq!(one.mobius(), RationalMatrix::from_i64_rows(&[&[1]]));
        let two = order_ideals(&Poset::chain(1)).unwrap();
        assert_eq!(two.zeta(), RationalMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]));
        assert_eq!(two.mobius(), RationalMatrix::from_i64_rows(&[&[1, -1], &[0, 1]]));
    }

    #[test]
    fn mobius_matches_distributive_formula() {
        // In J(P): mu(I, J) = (-1)^{|J \ I|} if J \ I is an antichain, else 0.
        for n in 0..=4 {
            for p in labeled_posets(n) {
                let l = order_ideals(&p).unwrap();
                let (zeta, mu) = l.zeta_and_mobius();
                assert!(zeta.mul_ok(&mu).is_identity());
                for i in 0..l.len() {
                    for j in 0..l.len() {
                        let expected = if l.leq(i, j) {
                            let mut d = l.ideal(j).members().clone();
                            d.difference_with(l.ideal(i).members());
                            if p.is_antichain(&d) {
                                if d.count_ones(..).is_multiple_of(2) { 1 } else { -1 }
                            } else {
                                0
                            }
                        } else {
                            0
                        };
                        assert_eq!(mu[(i, j)], Rational::integer(expected));
                    }
                }
            }
        }
    }

    #[test]
    fn join_irreducible_examples() {
        let boolean = order_ideals(&Poset::antichain(&["x1", "x2", "x3"])).unwrap().as_poset();
        let iso = join_irreducibles(&boolean).unwrap();
        assert_eq!(iso.join_irreducibles.len(), 3);
        assert!(iso.join_irreducibles.cover_pairs().is_empty());

        let two = Poset::chain(2);
        assert_eq!(join_irreducibles(&two).unwrap().join_irreducibles.len(), 1);
        let three = Poset::chain(3);
        let ji = join_irreducibles(&three).unwrap().join_irreducibles;
        assert_eq!(ji.len(), 2);
        assert!(ji.lt(0, 1));

        let m3 = Poset::from_covers(
            &["0", "a", "b", "c", "1"],
            &[("a", "0"), ("b", "0"), ("c", "0"), ("1", "a"), ("1", "b"), ("1", "c")],
        )
        .unwrap();
        assert_eq!(join_irreducibles(&m3).unwrap_err(), PosetError::NotDistributive);
    }

    #[test]
    fn lattice_of_ideals_is_distributive() {
        for n in 0..=4 {
            for p in labeled_posets(n) {
                let v = order_ideals(&p).unwrap().as_poset().lattice_tests();
                assert!(v.is_lattice && v.is_distributive);
            }
        }
    }
}
