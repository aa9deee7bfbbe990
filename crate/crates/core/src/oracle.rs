//! Exact word problem in `B_n` through the Artin action on the free group.
//!
//! `τ_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i` and fixes the other
//! generators. Words act on the right: the first letter is applied first, so
//! `artin_action(u·v) = artin_action(u).then(&artin_action(v))`.

use rayon::prelude::*;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Freely reduced word in `x_1..x_n`; letter `j` is `x_j`, `-j` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn from_letters(letters: &[i32]) -> Self {
        let mut out = Vec::with_capacity(letters.len());
        for &l in letters {
            push_reduced(&mut out, l);
        }
        FreeWord(out)
    }

    pub fn generator(j: i32) -> Self {
        FreeWord(vec![j])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// An endomorphism of `F_n` recorded by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeAutomorphism {
    images: Vec<FreeWord>,
}

impl FreeAutomorphism {
    pub fn identity(n: usize) -> Self {
        FreeAutomorphism {
            images: (1..=n as i32).map(FreeWord::generator).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(j, w)| w.0.len() == 1 && w.0[0] == j as i32 + 1)
    }

    /// `self` followed by `other`: every letter of an image of `self` is
    /// replaced by its image under `other`.
    pub fn then(&self, other: &FreeAutomorphism) -> FreeAutomorphism {
        let inv: Vec<FreeWord> = other.images.iter().map(FreeWord::inverse).collect();
        let images = self
            .images
            .iter()
            .map(|w| {
                let mut out = Vec::with_capacity(w.len());
                for &l in &w.0 {
                    let src = if l > 0 {
                        &other.images[l as usize - 1]
                    } else {
                        &inv[(-l) as usize - 1]
                    };
                    for &x in &src.0 {
                        push_reduced(&mut out, x);
                    }
                }
                FreeWord(out)
            })
            .collect();
        FreeAutomorphism { images }
    }

    /// Applies one braid letter after the current automorphism.
    fn apply_letter(&mut self, letter: i32) {
        let i = letter.abs();
        let j = i + 1;
        for w in &mut self.images {
            if !w.0.iter().any(|&x| x.abs() == i || x.abs() == j) {
                continue;
            }
            let mut out = Vec::with_capacity(w.0.len() + 8);
            for &x in &w.0 {
                let a = x.abs();
                let sub: &[i32] = match (letter > 0, a == i, a == j) {
                    (true, true, _) => &[i, j, -i],
                    (true, _, true) => &[i],
                    (false, true, _) => &[j],
                    (false, _, true) => &[-j, i, j],
                    _ => {
                        push_reduced(&mut out, x);
                        continue;
                    }
                };
                if x > 0 {
                    for &y in sub {
                        push_reduced(&mut out, y);
                    }
                } else {
                    for &y in sub.iter().rev() {
                        push_reduced(&mut out, -y);
                    }
                }
            }
            w.0 = out;
        }
    }
}

pub fn artin_action(w: &BraidWord) -> FreeAutomorphism {
    let mut a = FreeAutomorphism::identity(w.strands());
    for &l in w.letters() {
        a.apply_letter(l);
    }
    a
}

pub fn is_identity(w: &BraidWord) -> bool {
    artin_action(&w.free_reduce()).is_identity()
}

pub fn are_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::DimensionMismatch(format!(
            "B_{} against B_{}",
            u.strands(),
            v.strands()
        )));
    }
    Ok(artin_action(&u.free_reduce()) == artin_action(&v.free_reduce()))
}

/// Commutes with every standard generator.
pub fn is_central(w: &BraidWord) -> bool {
    let n = w.strands();
    let a = artin_action(&w.free_reduce());
    (1..n as i32).all(|i| {
        let t = artin_action(&BraidWord::new(n, vec![i]).expect("valid generator"));
        a.then(&t) == t.then(&a)
    })
}

/// Checks the braid and commutation relations of `B_n` among `images`,
/// where `images[i-1]` is the proposed image of `τ_i`.
pub fn verify_candidate_hom(n: usize, images: &[BraidWord]) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidStrandCount(n));
    }
    if images.len() != n - 1 {
        return Err(Error::ImageCountMismatch {
            expected: n - 1,
            got: images.len(),
        });
    }
    if let Some(first) = images.first() {
        if images.iter().any(|w| w.strands() != first.strands()) {
            return Err(Error::DimensionMismatch("images in different braid groups".into()));
        }
    }
    let actions: Vec<FreeAutomorphism> = images.par_iter().map(|w| artin_action(&w.free_reduce())).collect();
    let pairs: Vec<(usize, usize)> = (0..images.len())
        .flat_map(|i| (i + 1..images.len()).map(move |j| (i, j)))
        .collect();
    Ok(pairs.par_iter().all(|&(i, j)| {
        let (a, b) = (&actions[i], &actions[j]);
        if j == i + 1 {
            a.then(b).then(a) == b.then(a).then(b)
        } else {
            a.then(b) == b.then(a)
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{flip_delta, garside, generator};

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn braid_and_far_commutation() {
        assert!(are_equal(&w(4, &[1, 2, 1]), &w(4, &[2, 1, 2])).unwrap());
        assert!(are_equal(&w(4, &[1, 3]), &w(4, &[3, 1])).unwrap());
        assert!(!are_equal(&w(4, &[1, 2]), &w(4, &[2, 1])).unwrap());
        assert!(is_identity(&w(5, &[1, 2, 1, -2, -1, -2])));
        assert!(!is_identity(&w(5, &[1, 2, -1, -2])));
    }

    #[test]
    fn garside_square_is_central_delta_is_not() {
        for n in 3..=7 {
            let d = garside(n).unwrap();
            assert!(is_central(&d.pow(2)), "n={n}");
            assert!(!is_central(&d), "n={n}");
        }
    }

    #[test]
    fn delta_flips_generators() {
        let n = 6;
        let d = garside(n).unwrap();
        for i in 1..n as i32 {
            let lhs = &(&d * &w(n, &[i])) * &d.inverse();
            assert!(are_equal(&lhs, &w(n, &[n as i32 - i])).unwrap());
        }
    }

    #[test]
    fn flip_delta_power_equals_garside_square() {
        for n in 3..=7 {
            let lhs = flip_delta(n).unwrap().pow(n as i64);
            let rhs = garside(n).unwrap().pow(2);
            assert!(are_equal(&lhs, &rhs).unwrap());
        }
    }

    #[test]
    fn tau_zero_is_conjugate_of_tau_one() {
        for n in 3..=7 {
            let d = flip_delta(n).unwrap();
            let t0 = generator(n, 0).unwrap();
            let t1 = generator(n, 1).unwrap();
            let conj = &(&d * &t0) * &d.inverse();
            assert!(are_equal(&conj, &t1).unwrap(), "n={n}");
        }
    }

    #[test]
    fn automorphism_fixes_boundary_word() {
        let a = artin_action(&w(5, &[1, -3, 2, 4, -1, 2]));
        let prod = FreeAutomorphism {
            images: vec![FreeWord::from_letters(&[1, 2, 3, 4, 5])],
        };
        assert_eq!(prod.then(&a).images()[0].letters(), &[1, 2, 3, 4, 5]);
    }

    #[test]
    fn verify_rejects_wrong_count() {
        let e = verify_candidate_hom(4, &[w(4, &[1])]).unwrap_err();
        assert!(matches!(e, Error::ImageCountMismatch { expected: 3, got: 1 }));
    }
}
