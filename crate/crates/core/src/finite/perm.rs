//! Actions of `B_n` on small finite sets, found by exhaustive backtracking.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Permutation of `{0..k}`; printed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(k: usize) -> Self {
        Perm((0..k as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen
                .get_mut(x as usize)
                .ok_or_else(|| Error::Parse(format!("image {} out of range", x as usize + 1)))?;
            if *slot {
                return Err(Error::Parse(format!("image {} repeated", x as usize + 1)));
            }
            *slot = true;
        }
        Ok(Perm(images))
    }

    /// Disjoint cycles over the symbols `1..=k`.
    pub fn from_cycles(k: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut img: Vec<u8> = (0..k as u8).collect();
        let mut used = vec![false; k];
        for cycle in cycles {
            for (idx, &a) in cycle.iter().enumerate() {
                if a == 0 || a > k {
                    return Err(Error::Parse(format!("symbol {a} outside 1..{k}")));
                }
                if used[a - 1] {
                    return Err(Error::Parse(format!("symbol {a} appears twice")));
                }
                used[a - 1] = true;
                let b = cycle[(idx + 1) % cycle.len()];
                img[a - 1] = (b - 1) as u8;
            }
        }
        Perm::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `c⁻¹ self c`.
    pub fn conjugate(&self, c: &Perm) -> Perm {
        c.inverse().then(self).then(c)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let c: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", c.join(" "))?;
        }
        Ok(())
    }
}

fn braid_rel(a: &Perm, b: &Perm) -> bool {
    a.then(b).then(a) == b.then(a).then(b)
}

fn commute(a: &Perm, b: &Perm) -> bool {
    a.then(b) == b.then(a)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermRep {
    pub k: usize,
    pub images: Vec<Perm>,
}

impl PermRep {
    pub fn is_cyclic(&self) -> bool {
        self.images.windows(2).all(|w| w[0] == w[1])
    }

    pub fn satisfies_relations(&self) -> bool {
        let xs = &self.images;
        (0..xs.len()).all(|i| {
            (i + 1..xs.len()).all(|j| {
                if j == i + 1 {
                    braid_rel(&xs[i], &xs[j])
                } else {
                    commute(&xs[i], &xs[j])
                }
            })
        })
    }

    /// Least simultaneous conjugate.
    pub fn canonical(&self) -> PermRep {
        all_perms(self.k)
            .iter()
            .map(|c| PermRep {
                k: self.k,
                images: self.images.iter().map(|p| p.conjugate(c)).collect(),
            })
            .min()
            .expect("S_k is non-empty")
    }
}

impl fmt::Display for PermRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "{}", imgs.join(" "))
    }
}

pub fn all_perms(k: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Perm>) {
        if prefix.len() == used.len() {
            out.push(Perm(prefix.clone()));
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x as u8);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

/// Default cap on `(k!)²`, the size of the pairwise search space.
pub const DEFAULT_BUDGET: u64 = 720 * 720;

/// Every tuple `(s_1, …, s_{n-1})` in `S_k` satisfying the relations of
/// `B_n`, sorted. With `dedup` only the least conjugate of each class is kept.
pub fn enum_perm_reps(n: usize, k: usize, dedup: bool, budget: u64) -> Result<Vec<PermRep>> {
    if n < 3 {
        return Err(Error::InvalidStrandCount(n));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("need at least one symbol".into()));
    }
    let fact: u64 = (1..=k as u64).product();
    if fact.checked_mul(fact).is_none_or(|x| x > budget) {
        return Err(Error::BudgetExceeded(format!("({k}!)^2 exceeds {budget}")));
    }
    let perms = all_perms(k);
    // braid_ok[a] lists every b with a b a = b a b.
    let braid_ok: Vec<Vec<usize>> = perms
        .par_iter()
        .map(|a| (0..perms.len()).filter(|&b| braid_rel(a, &perms[b])).collect())
        .collect();
    let slots = n - 1;
    let mut found: Vec<Vec<usize>> = (0..perms.len())
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut out = Vec::new();
            let mut stack = vec![first];
            extend(&perms, &braid_ok, slots, &mut stack, &mut out);
            out
        })
        .collect();
    found.sort();
    let reps = found.into_iter().map(|idx| PermRep {
        k,
        images: idx.into_iter().map(|i| perms[i].clone()).collect(),
    });
    if dedup {
        let set: BTreeSet<PermRep> = reps.map(|r| r.canonical()).collect();
        Ok(set.into_iter().collect())
    } else {
        Ok(reps.collect())
    }
}

fn extend(perms: &[Perm], braid_ok: &[Vec<usize>], slots: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if stack.len() == slots {
        out.push(stack.clone());
        return;
    }
    let prev = *stack.last().expect("non-empty");
    for &cand in &braid_ok[prev] {
        let c = &perms[cand];
        if stack[..stack.len() - 1].iter().all(|&j| commute(&perms[j], c)) {
            stack.push(cand);
            extend(perms, braid_ok, slots, stack, out);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_round_trip() {
        let p = Perm::from_cycles(4, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(p.0, vec![1, 2, 0, 3]);
        assert_eq!(p.to_string(), "(1 2 3)");
        assert!(p.then(&p.inverse()).is_identity());
        assert!(Perm::from_cycles(3, &[vec![1, 4]]).is_err());
    }

    #[test]
    fn b4_on_three_points() {
        let reps = enum_perm_reps(4, 3, false, DEFAULT_BUDGET).unwrap();
        assert!(reps.iter().all(|r| r.images[0] == r.images[2]));
        let t12 = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        let t23 = Perm::from_cycles(3, &[vec![2, 3]]).unwrap();
        assert!(reps.iter().any(|r| r.images == vec![t12.clone(), t23.clone(), t12.clone()]));
        assert!(reps.iter().any(|r| !r.is_cyclic()));
    }

    #[test]
    fn small_sets_are_cyclic() {
        for k in 1..=4 {
            let reps = enum_perm_reps(5, k, false, DEFAULT_BUDGET).unwrap();
            assert!(reps.iter().all(PermRep::is_cyclic), "k={k}");
            let fact: usize = (1..=k).product();
            assert_eq!(reps.len(), fact, "k={k}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(enum_perm_reps(6, 7, false, DEFAULT_BUDGET), Err(Error::BudgetExceeded(_))));
        assert!(matches!(enum_perm_reps(6, 5, false, 100), Err(Error::BudgetExceeded(_))));
    }
}
