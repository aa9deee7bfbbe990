//! Orbit sizes of actions that cover a set of `k`-subsets equivariantly.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// A finitely generated group acting on `0..elements` and on the points
/// `0..points`; generator `g` acts by `on_elements[g]` and `on_points[g]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedAction {
    pub elements: usize,
    pub points: usize,
    pub on_elements: Vec<Vec<usize>>,
    pub on_points: Vec<Vec<usize>>,
}

impl PairedAction {
    fn validate(&self) -> Result<()> {
        if self.on_elements.len() != self.on_points.len() {
            return Err(Error::DimensionMismatch("generator lists differ in length".into()));
        }
        for (g, size) in self
            .on_elements
            .iter()
            .map(|g| (g, self.elements))
            .chain(self.on_points.iter().map(|g| (g, self.points)))
        {
            let set: BTreeSet<usize> = g.iter().copied().collect();
            if g.len() != size || set.len() != size || set.iter().any(|&x| x >= size) {
                return Err(Error::InvalidParameter("generator is not a permutation".into()));
            }
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn orbit<T: Ord + Clone>(start: T, step: impl Fn(&T, usize) -> T, gens: usize) -> BTreeSet<T> {
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in 0..gens {
            let y = step(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Returns `ℓ` with `|orbit(e)| = ℓ · C(r, k)`, where `r` is the number of
/// points and `k` the common size of the spectrum sets.
pub fn orbit_spectrum_check(action: &PairedAction, spectrum: &[BTreeSet<usize>], e: usize) -> Result<(usize, bool)> {
    action.validate()?;
    if spectrum.len() != action.elements || e >= action.elements {
        return Err(Error::DimensionMismatch("spectrum does not cover the elements".into()));
    }
    let k = spectrum[e].len();
    if spectrum.iter().any(|s| s.len() != k || s.iter().any(|&x| x >= action.points)) {
        return Err(Error::InvalidParameter("spectrum sets must share one size".into()));
    }
    let push = |s: &BTreeSet<usize>, g: usize| -> BTreeSet<usize> {
        s.iter().map(|&x| action.on_points[g][x]).collect()
    };
    for (g, perm) in action.on_elements.iter().enumerate() {
        for x in 0..action.elements {
            if spectrum[perm[x]] != push(&spectrum[x], g) {
                return Err(Error::NotEquivariant);
            }
        }
    }
    let binom = binomial(action.points, k);
    let subsets = orbit(spectrum[e].clone(), |s, g| push(s, g), action.on_points.len());
    if subsets.len() != binom {
        return Err(Error::HypothesisViolated(format!(
            "points are not {k}-transitive: {} of {binom} subsets reached",
            subsets.len()
        )));
    }
    let size = orbit(e, |&x, g| action.on_elements[g][x], action.on_elements.len()).len();
    if size % binom != 0 {
        return Err(Error::OrbitSizeNotMultiple { orbit: size, binom });
    }
    Ok((size / binom, true))
}

/// `S_r` on its `k`-subsets, generated by `(0 1)` and the `r`-cycle.
pub fn subset_action(r: usize, k: usize) -> (PairedAction, Vec<BTreeSet<usize>>) {
    let subsets: Vec<BTreeSet<usize>> = k_subsets(r, k);
    let gens_points = symmetric_generators(r);
    let on_elements = gens_points
        .iter()
        .map(|g| {
            subsets
                .iter()
                .map(|s| {
                    let img: BTreeSet<usize> = s.iter().map(|&x| g[x]).collect();
                    subsets.iter().position(|t| *t == img).expect("closed under S_r")
                })
                .collect()
        })
        .collect();
    (
        PairedAction {
            elements: subsets.len(),
            points: r,
            on_elements,
            on_points: gens_points,
        },
        subsets,
    )
}

pub fn symmetric_generators(r: usize) -> Vec<Vec<usize>> {
    let mut swap: Vec<usize> = (0..r).collect();
    if r >= 2 {
        swap.swap(0, 1);
    }
    let cycle: Vec<usize> = (0..r).map(|i| (i + 1) % r.max(1)).collect();
    vec![swap, cycle]
}

pub fn k_subsets(r: usize, k: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << r) {
        if mask.count_ones() as usize == k {
            out.push((0..r).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_have_multiplier_one() {
        for r in 1..=5 {
            for k in 0..=r {
                let (action, spectrum) = subset_action(r, k);
                assert_eq!(orbit_spectrum_check(&action, &spectrum, 0).unwrap(), (1, true));
            }
        }
    }

    #[test]
    fn doubled_points() {
        // Elements (x, layer) as 2x + layer; a third generator swaps layers.
        let gens = symmetric_generators(3);
        let lift = |g: &Vec<usize>| (0..6).map(|e| 2 * g[e / 2] + e % 2).collect::<Vec<_>>();
        let mut on_elements: Vec<Vec<usize>> = gens.iter().map(lift).collect();
        on_elements.push((0..6).map(|e| e ^ 1).collect());
        let mut on_points = gens.clone();
        on_points.push((0..3).collect());
        let action = PairedAction {
            elements: 6,
            points: 3,
            on_elements,
            on_points,
        };
        let spectrum: Vec<BTreeSet<usize>> = (0..6).map(|e| BTreeSet::from([e / 2])).collect();
        assert_eq!(orbit_spectrum_check(&action, &spectrum, 0).unwrap(), (2, true));
        let mut broken = spectrum.clone();
        broken[1] = BTreeSet::from([2]);
        assert_eq!(orbit_spectrum_check(&action, &broken, 0), Err(Error::NotEquivariant));
    }
}
