//! Finite posets, antichains, order ideals and the distributive lattice of
//! order ideals.

mod enumerate;
mod lattice;

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

pub use enumerate::{labeled_posets, random_poset};
pub use lattice::{
    join_irreducibles, order_ideals, order_ideals_with_cap, BirkhoffIso, LatticeVerdict, OrderIdealLattice,
    DEFAULT_IDEAL_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("cover pairs contain a cycle through {0:?}")]
    CycleDetected(String),
    #[error("{upper:?} > {lower:?} is implied by other pairs and is not a cover")]
    NonCoverEdge { upper: String, lower: String },
    #[error("cover pair {upper:?} > {lower:?} listed twice")]
    DuplicateCover { upper: String, lower: String },
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("set is not an antichain")]
    NotAnAntichain,
    #[error("set is not an order ideal")]
    NotAnOrderIdeal,
    #[error("element index {index} out of range for a poset of size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("order ideal count exceeds the cap of {cap}")]
    SizeLimitExceeded { cap: usize },
    #[error("poset is not a distributive lattice")]
    NotDistributive,
}

/// A finite poset. Elements are indices `0..len()` carrying string labels;
/// the full order relation is stored as one down-set and one up-set bitset
/// per element.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    /// `down[x]` = `{y : y <= x}`
    down: Vec<FixedBitSet>,
    /// `up[x]` = `{y : y >= x}`
    up: Vec<FixedBitSet>,
}

/// Poset input document: element labels plus cover pairs `[a, b]` meaning
/// "a covers b".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

impl Poset {
    /// Builds a poset from its Hasse diagram. The order is the
    /// reflexive-transitive closure of the cover pairs; each listed pair must
    /// remain a cover after closure.
    pub fn from_covers<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self, PosetError> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| PosetError::UnknownLabel(s.to_string()));
        let mut edges = Vec::with_capacity(covers.len());
        let mut lower_of: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (a, b) in covers {
            let (a, b) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if a == b {
                return Err(PosetError::CycleDetected(labels[a].clone()));
            }
            if lower_of[a].contains(&b) {
                return Err(PosetError::DuplicateCover { upper: labels[a].clone(), lower: labels[b].clone() });
            }
            lower_of[a].push(b);
            edges.push((a, b));
        }
        // Kahn's algorithm from the minimal elements upward.
        let mut indeg: Vec<usize> = lower_of.iter().map(Vec::len).collect();
        let mut upper_of: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &edges {
            upper_of[b].push(a);
        }
        let mut order: Vec<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &a in &upper_of[x] {
                indeg[a] -= 1;
                if indeg[a] == 0 {
                    order.push(a);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&x| indeg[x] > 0).unwrap();
            return Err(PosetError::CycleDetected(labels[stuck].clone()));
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for &x in &order {
            down[x].insert(x);
            for &b in &lower_of[x] {
                let below = down[b].clone();
                down[x].union_with(&below);
            }
        }
        for &(a, b) in &edges {
            // a covers b iff no c with b < c < a.
            let between = lower_of[a].iter().any(|&c| c != b && down[c].contains(b));
            if between {
                return Err(PosetError::NonCoverEdge { upper: labels[a].clone(), lower: labels[b].clone() });
            }
        }
        Ok(Self::from_down_sets(labels, down))
    }

    pub fn from_file(file: &PosetFile) -> Result<Self, PosetError> {
        let covers: Vec<(&str, &str)> = file.covers.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        let elements: Vec<&str> = file.elements.iter().map(String::as_str).collect();
        Self::from_covers(&elements, &covers)
    }

    pub fn to_file(&self) -> PosetFile {
        PosetFile {
            elements: self.labels.clone(),
            covers: self
                .cover_pairs()
                .into_iter()
                .map(|(a, b)| [self.labels[a].clone(), self.labels[b].clone()])
                .collect(),
        }
    }

    /// Builds a poset from its full order relation, validating reflexivity,
    /// antisymmetry and transitivity.
    pub fn from_relation(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        let n = labels.len();
        let mut seen = HashMap::new();
        for l in &labels {
            if seen.insert(l.clone(), ()).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            for y in 0..n {
                if leq(y, x) {
                    down[x].insert(y);
                }
            }
        }
        for x in 0..n {
            if !down[x].contains(x) {
                return Err(PosetError::NotAPartialOrder(format!("{} is not <= itself", labels[x])));
            }
            for y in down[x].ones() {
                if y != x && down[y].contains(x) {
                    return Err(PosetError::NotAPartialOrder(format!(
                        "{} and {} are mutually comparable",
                        labels[x], labels[y]
                    )));
                }
                if !down[y].is_subset(&down[x]) {
                    return Err(PosetError::NotAPartialOrder(format!("not transitive below {}", labels[x])));
                }
            }
        }
        Ok(Self::from_down_sets(labels, down))
    }

    fn from_down_sets(labels: Vec<String>, down: Vec<FixedBitSet>) -> Self {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (x, d) in down.iter().enumerate() {
            for y in d.ones() {
                up[y].insert(x);
            }
        }
        Poset { labels, down, up }
    }

    /// An antichain on the given labels.
    pub fn antichain<S: AsRef<str>>(labels: &[S]) -> Self {
        Self::from_covers::<&str>(&labels.iter().map(AsRef::as_ref).collect::<Vec<_>>(), &[])
            .expect("antichain labels must be distinct")
    }

    /// The chain `1 < 2 < ... < n`.
    pub fn chain(n: usize) -> Self {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        Self::from_relation(labels, |a, b| a <= b).expect("a chain is a poset")
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

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `{y : y <= x}`
    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    /// `{y : y >= x}`
    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn set_of(&self, members: impl IntoIterator<Item = usize>) -> FixedBitSet {
        let mut s = self.empty_set();
        for m in members {
            s.insert(m);
        }
        s
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        self.down[x]
            .ones()
            .filter(|&y| y != x && !self.down[x].ones().any(|z| z != x && z != y && self.down[z].contains(y)))
            .collect()
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.up[x]
            .ones()
            .filter(|&y| y != x && !self.up[x].ones().any(|z| z != x && z != y && self.up[z].contains(y)))
            .collect()
    }

    /// All pairs `(a, b)` with `a` covering `b`, ordered by `a` then `b`.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|a| self.lower_covers(a).into_iter().map(move |b| (a, b))).collect()
    }

    pub fn maximal_elements(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = self.empty_set();
        for x in set.ones() {
            if !self.up[x].ones().any(|y| y != x && set.contains(y)) {
                out.insert(x);
            }
        }
        out
    }

    pub fn minimal_elements(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = self.empty_set();
        for x in set.ones() {
            if !self.down[x].ones().any(|y| y != x && set.contains(y)) {
                out.insert(x);
            }
        }
        out
    }

    pub fn down_closure(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = self.empty_set();
        for x in set.ones() {
            out.union_with(&self.down[x]);
        }
        out
    }

    pub fn up_closure(&self, set: &FixedBitSet) -> FixedBitSet {
        let mut out = self.empty_set();
        for x in set.ones() {
            out.union_with(&self.up[x]);
        }
        out
    }

    pub fn is_antichain(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|x| set.ones().all(|y| x == y || !self.comparable(x, y)))
    }

    pub fn is_order_ideal(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|x| self.down[x].is_subset(set))
    }

    /// Elements sorted by down-set size, then index: a linear extension.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.down[x].count_ones(..), x));
        order
    }

    /// The dual poset, same labels.
    pub fn opposite(&self) -> Self {
        Poset { labels: self.labels.clone(), down: self.up.clone(), up: self.down.clone() }
    }

    /// Induced subposet on `members`, in increasing index order.
    pub fn induced(&self, members: &[usize]) -> Self {
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        Self::from_relation(labels, |a, b| self.leq(members[a], members[b])).expect("induced order is a poset")
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let mut lower = self.down[x].clone();
        lower.intersect_with(&self.down[y]);
        lower.ones().find(|&z| lower.is_subset(&self.down[z]))
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let mut upper = self.up[x].clone();
        upper.intersect_with(&self.up[y]);
        upper.ones().find(|&z| upper.is_subset(&self.up[z]))
    }

    /// Lattice and distributivity tests. Distributivity is checked by the
    /// identity `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` over all triples.
    pub fn lattice_tests(&self) -> LatticeVerdict {
        let n = self.len();
        if n == 0 {
            return LatticeVerdict { is_lattice: false, is_distributive: false };
        }
        let mut join = vec![0usize; n * n];
        let mut meet = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                match (self.join(x, y), self.meet(x, y)) {
                    (Some(j), Some(m)) => {
                        join[x * n + y] = j;
                        meet[x * n + y] = m;
                    }
                    _ => return LatticeVerdict { is_lattice: false, is_distributive: false },
                }
            }
        }
        let distributive = (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    meet[a * n + join[b * n + c]] == join[meet[a * n + b] * n + meet[a * n + c]]
                })
            })
        });
        LatticeVerdict { is_lattice: true, is_distributive: distributive }
    }

    /// Renders a subset as `{a,b}` using labels, `∅` when empty.
    pub fn format_set(&self, set: &FixedBitSet) -> String {
        if set.is_clear() {
            return "∅".to_string();
        }
        let parts: Vec<&str> = set.ones().map(|x| self.label(x)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .cover_pairs()
            .into_iter()
            .map(|(a, b)| format!("{}>{}", self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("Poset").field("elements", &self.labels).field("covers", &covers).finish()
    }
}

/// A set of pairwise incomparable elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Antichain(FixedBitSet);

/// A downward-closed set of elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderIdeal(FixedBitSet);

impl Antichain {
    pub fn new(poset: &Poset, members: FixedBitSet) -> Result<Self, PosetError> {
        check_members(poset, &members)?;
        if !poset.is_antichain(&members) {
            return Err(PosetError::NotAnAntichain);
        }
        Ok(Antichain(members))
    }

    pub fn from_indices(poset: &Poset, members: &[usize]) -> Result<Self, PosetError> {
        check_indices(poset, members)?;
        Self::new(poset, poset.set_of(members.iter().copied()))
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.0.ones().collect()
    }

    /// The order ideal whose maximal elements are this antichain.
    pub fn ideal(&self, poset: &Poset) -> OrderIdeal {
        OrderIdeal(poset.down_closure(&self.0))
    }

    /// The order ideal whose minimal non-elements are this antichain:
    /// the complement of the up-closure.
    pub fn complement_ideal(&self, poset: &Poset) -> OrderIdeal {
        let mut s = poset.full_set();
        s.difference_with(&poset.up_closure(&self.0));
        OrderIdeal(s)
    }
}

impl OrderIdeal {
    pub fn new(poset: &Poset, members: FixedBitSet) -> Result<Self, PosetError> {
        check_members(poset, &members)?;
        if !poset.is_order_ideal(&members) {
            return Err(PosetError::NotAnOrderIdeal);
        }
        Ok(OrderIdeal(members))
    }

    pub fn from_indices(poset: &Poset, members: &[usize]) -> Result<Self, PosetError> {
        check_indices(poset, members)?;
        Self::new(poset, poset.set_of(members.iter().copied()))
    }

    pub(crate) fn new_unchecked(members: FixedBitSet) -> Self {
        OrderIdeal(members)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.0.ones().collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(x)
    }

    pub fn is_subset(&self, other: &OrderIdeal) -> bool {
        self.0.is_subset(&other.0)
    }

    /// The antichain of maximal elements.
    pub fn max_antichain(&self, poset: &Poset) -> Antichain {
        Antichain(poset.maximal_elements(&self.0))
    }

    /// Rowmotion: the ideal whose minimal non-elements are this ideal's
    /// maximal elements.
    pub fn rowmotion(&self, poset: &Poset) -> OrderIdeal {
        self.max_antichain(poset).complement_ideal(poset)
    }
}

fn check_members(poset: &Poset, members: &FixedBitSet) -> Result<(), PosetError> {
    match members.ones().find(|&x| x >= poset.len()) {
        Some(index) => Err(PosetError::OutOfRange { index, size: poset.len() }),
        None => Ok(()),
    }
}

fn check_indices(poset: &Poset, members: &[usize]) -> Result<(), PosetError> {
    match members.iter().find(|&&x| x >= poset.len()) {
        Some(&index) => Err(PosetError::OutOfRange { index, size: poset.len() }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_six() -> Poset {
        Poset::from_covers(
            &["1", "2", "3", "4", "5", "6"],
            &[("1", "2"), ("1", "3"), ("2", "4"), ("2", "5"), ("3", "4"), ("3", "5"), ("4", "6"), ("5", "6")],
        )
        .unwrap()
    }

    #[test]
    fn build_examples() {
        let a = Poset::antichain(&["x1", "x2", "x3"]);
        assert_eq!(a.len(), 3);
        assert!(a.cover_pairs().is_empty());
        let one = Poset::from_covers::<&str>(&["a"], &[]).unwrap();
        assert_eq!(one.len(), 1);
        let p = example_six();
        assert!(p.leq(5, 0), "6 <= 1");
        assert!(!p.comparable(1, 2));
        assert_eq!(p.cover_pairs().len(), 8);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Poset::from_covers(&["a", "a"], &[]),
            Err(PosetError::DuplicateLabel("a".into()))
        );
        assert!(matches!(
            Poset::from_covers(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(PosetError::CycleDetected(_))
        ));
        assert!(matches!(Poset::from_covers(&["a"], &[("a", "a")]), Err(PosetError::CycleDetected(_))));
        assert_eq!(
            Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]),
            Err(PosetError::NonCoverEdge { upper: "a".into(), lower: "c".into() })
        );
        assert!(matches!(Poset::from_covers(&["a"], &[("a", "z")]), Err(PosetError::UnknownLabel(_))));
    }

    #[test]
    fn closure_regenerates_order() {
        let p = example_six();
        let covers = p.cover_pairs();
        let labels: Vec<&str> = p.labels().iter().map(String::as_str).collect();
        let pairs: Vec<(&str, &str)> = covers.iter().map(|&(a, b)| (labels[a], labels[b])).collect();
        assert_eq!(Poset::from_covers(&labels, &pairs).unwrap(), p);
    }

    #[test]
    fn ideal_antichain_maps() {
        let a = Poset::antichain(&["x1", "x2", "x3"]);
        let i = OrderIdeal::from_indices(&a, &[0, 1]).unwrap();
        assert_eq!(i.max_antichain(&a).indices(), vec![0, 1]);
        let s = Antichain::from_indices(&a, &[0, 1]).unwrap();
        assert_eq!(s.complement_ideal(&a).indices(), vec![2]);
        let empty = Antichain::from_indices(&a, &[]).unwrap();
        assert!(empty.ideal(&a).is_empty());
        assert_eq!(empty.complement_ideal(&a).len(), 3);

        let c = Poset::chain(2);
        let top = OrderIdeal::from_indices(&c, &[0, 1]).unwrap();
        assert_eq!(top.max_antichain(&c).indices(), vec![1]);
        let s = Antichain::from_indices(&c, &[0]).unwrap();
        assert!(s.complement_ideal(&c).is_empty());

        assert_eq!(Antichain::from_indices(&c, &[0, 1]), Err(PosetError::NotAnAntichain));
        assert_eq!(OrderIdeal::from_indices(&c, &[1]), Err(PosetError::NotAnOrderIdeal));
    }

    #[test]
    fn lattice_verdicts() {
        let m3 = Poset::from_covers(
            &["0", "a", "b", "c", "1"],
            &[("a", "0"), ("b", "0"), ("c", "0"), ("1", "a"), ("1", "b"), ("1", "c")],
        )
        .unwrap();
        assert_eq!(m3.lattice_tests(), LatticeVerdict { is_lattice: true, is_distributive: false });
        assert_eq!(example_six().lattice_tests(), LatticeVerdict { is_lattice: false, is_distributive: false });
        assert_eq!(Poset::chain(3).lattice_tests(), LatticeVerdict { is_lattice: true, is_distributive: true });
    }
}
