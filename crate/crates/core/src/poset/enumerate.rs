use rand::seq::SliceRandom;
use rand::Rng;

use super::Poset;

/// Every labeled poset on `n` elements (labels `1..=n`), each exactly once.
///
/// Posets on `k + 1` elements are grown from posets on `k` elements by
/// adding element `k` with a down-set `D` (an ideal) and an up-set `U` (a
/// filter) such that everything in `D` lies below everything in `U`.
pub fn labeled_posets(n: usize) -> Vec<Poset> {
    assert!(n <= 8, "labeled enumeration is only feasible for tiny posets");
    // down[x] as a bitmask including x
    let mut level: Vec<Vec<u64>> = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for down in &level {
            let ideals: Vec<u64> = (0u64..1 << k).filter(|&s| is_down_closed(down, s)).collect();
            let filters: Vec<u64> = (0u64..1 << k).filter(|&s| is_up_closed(down, k, s)).collect();
            for &d in &ideals {
                for &u in &filters {
                    if d & u != 0 {
                        continue;
                    }
                    if (0..k).filter(|x| u >> x & 1 == 1).any(|x| down[x] & d != d) {
                        continue;
                    }
                    let mut new = down.clone();
                    for (x, m) in new.iter_mut().enumerate() {
                        if u >> x & 1 == 1 {
                            *m |= 1 << k;
                        }
                    }
                    new.push(d | 1 << k);
                    next.push(new);
                }
            }
        }
        level = next;
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    level
        .into_iter()
        .map(|down| Poset::from_relation(labels.clone(), |a, b| down[b] >> a & 1 == 1).expect("grown relation is a partial order"))
        .collect()
}

fn is_down_closed(down: &[u64], s: u64) -> bool {
    (0..down.len()).filter(|x| s >> x & 1 == 1).all(|x| down[x] & s == down[x])
}

fn is_up_closed(down: &[u64], k: usize, s: u64) -> bool {
    (0..k).filter(|x| s >> x & 1 == 1).all(|x| (0..k).all(|y| down[y] >> x & 1 == 0 || s >> y & 1 == 1))
}

/// A random labeled poset on `n` elements: a random total order is chosen,
/// each compatible pair becomes a relation with a per-poset random density,
/// and the result is transitively closed.
pub fn random_poset<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let density: f64 = rng.random_range(0.15..0.85);
    let mut below = vec![vec![false; n]; n];
    for i in 0..n {
        below[i][i] = true;
        for j in i + 1..n {
            if rng.random_bool(density) {
                below[perm[i]][perm[j]] = true;
            }
        }
    }
    // Warshall closure
    for k in 0..n {
        for i in 0..n {
            if below[i][k] {
                for j in 0..n {
                    if below[k][j] {
                        below[i][j] = true;
                    }
                }
            }
        }
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    Poset::from_relation(labels, |a, b| below[a][b]).expect("closure of an acyclic relation is a partial order")
}
