//! Homomorphisms between braid groups, given by the images of the standard
//! generators and checked with the Artin-action oracle.

use std::fmt;

use crate::braid::{garside, BraidWord};
use crate::error::{Error, Result};
use crate::oracle::{are_equal, verify_candidate_hom};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidHom {
    source: usize,
    target: usize,
    images: Vec<BraidWord>,
}

impl BraidHom {
    /// Verifies every relation of `B_source` among the images.
    pub fn new(source: usize, target: usize, images: Vec<BraidWord>) -> Result<Self> {
        let h = Self::unverified(source, target, images)?;
        if !verify_candidate_hom(source, &h.images)? {
            return Err(Error::RelationCheckFailed(format!(
                "images do not satisfy the relations of B_{source}"
            )));
        }
        Ok(h)
    }

    /// Shape checks only; the relations are not tested.
    pub fn unverified(source: usize, target: usize, images: Vec<BraidWord>) -> Result<Self> {
        if source < 2 {
            return Err(Error::InvalidStrandCount(source));
        }
        if images.len() != source - 1 {
            return Err(Error::ImageCountMismatch {
                expected: source - 1,
                got: images.len(),
            });
        }
        if let Some(w) = images.iter().find(|w| w.strands() != target) {
            return Err(Error::DimensionMismatch(format!(
                "image in B_{} for a map into B_{target}",
                w.strands()
            )));
        }
        Ok(BraidHom {
            source,
            target,
            images,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::inclusion(n, n)
    }

    /// `τ_i ↦ τ_i` from `B_n` into `B_m`, `m ≥ n`.
    pub fn inclusion(n: usize, m: usize) -> Result<Self> {
        if m < n {
            return Err(Error::InvalidParameter(format!("cannot include B_{n} in B_{m}")));
        }
        let images = (1..n as i32)
            .map(|i| BraidWord::new(m, vec![i]))
            .collect::<Result<_>>()?;
        Self::unverified(n, m, images)
    }

    /// Every generator goes to `w`.
    pub fn constant(n: usize, w: &BraidWord) -> Result<Self> {
        Self::unverified(n, w.strands(), vec![w.clone(); n.saturating_sub(1)])
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn images(&self) -> &[BraidWord] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &BraidWord {
        &self.images[i - 1]
    }

    pub fn verify(&self) -> Result<bool> {
        verify_candidate_hom(self.source, &self.images)
    }

    pub fn apply(&self, w: &BraidWord) -> Result<BraidWord> {
        if w.strands() != self.source {
            return Err(Error::DimensionMismatch(format!(
                "B_{} word given to a map from B_{}",
                w.strands(),
                self.source
            )));
        }
        let mut letters = Vec::new();
        for &l in w.letters() {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                letters.extend_from_slice(img.letters());
            } else {
                letters.extend_from_slice(img.inverse().letters());
            }
        }
        BraidWord::new(self.target, letters)
    }
}

impl fmt::Display for BraidHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} m={}", self.source, self.target)?;
        for (i, w) in self.images.iter().enumerate() {
            let letters: Vec<String> = w.letters().iter().map(ToString::to_string).collect();
            writeln!(f, "{} : {}", i + 1, letters.join(" "))?;
        }
        Ok(())
    }
}

/// True iff all generator images are equal in the target.
pub fn cyclic_test(h: &BraidHom) -> bool {
    let Some(first) = h.images.first() else {
        return true;
    };
    h.images[1..]
        .iter()
        .all(|w| are_equal(first, w).expect("images share a target"))
}

/// `τ_i ↦ γ τ_i^ε γ⁻¹ Δ_n^{2k}`.
pub fn twisted_endo(n: usize, gamma: &BraidWord, eps: i8, k: i64) -> Result<BraidHom> {
    if n < 6 {
        return Err(Error::InvalidStrandCount(n));
    }
    if gamma.strands() != n {
        return Err(Error::DimensionMismatch(format!("conjugator in B_{}", gamma.strands())));
    }
    if eps != 1 && eps != -1 {
        return Err(Error::InvalidParameter(format!("epsilon must be ±1, got {eps}")));
    }
    let central = garside(n)?.pow(2 * k);
    let gamma_inv = gamma.inverse();
    let images = (1..n as i32)
        .map(|i| {
            let t = BraidWord::new(n, vec![i * eps as i32])?;
            Ok(&(&(gamma * &t) * &gamma_inv) * &central)
        })
        .collect::<Result<Vec<_>>>()?;
    BraidHom::new(n, n, images)
}

/// Positive braid crossing the `k` strands of cable `c` over those of cable `c + 1`.
fn block_swap(k: usize, c: usize) -> Vec<i32> {
    let p = ((c - 1) * k) as i32;
    let k = k as i32;
    let mut letters = Vec::with_capacity((k * k) as usize);
    for t in 1..=k {
        letters.extend((p + t..=p + k + t - 1).rev());
    }
    letters
}

/// Half twist `Δ_k` on the strands of cable `c`.
fn cable_half_twist(k: usize, c: usize) -> Result<Vec<i32>> {
    if k < 2 {
        return Ok(Vec::new());
    }
    let offset = ((c - 1) * k) as i32;
    Ok(garside(k)?.letters().iter().map(|l| l + offset).collect())
}

/// A homomorphism `B_3 → B_{3k}` sending `Δ_3` to `Δ_{3k}`.
///
/// Each generator maps to a block swap of adjacent cables together with a
/// half twist inside one cable. The cable carrying the twist and its side of
/// the swap are searched, and the first placement passing both oracle checks
/// is returned.
pub fn cabling_b3(k: usize) -> Result<BraidHom> {
    if k == 0 {
        return Err(Error::InvalidParameter("cable width must be positive".into()));
    }
    let m = 3 * k;
    let target = garside(m)?;
    let placements: Vec<(usize, bool)> = (1..=3).flat_map(|c| [(c, true), (c, false)]).collect();
    let image = |gen: usize, (cable, before): (usize, bool)| -> Result<BraidWord> {
        let twist = cable_half_twist(k, cable)?;
        let swap = block_swap(k, gen);
        let letters = if before {
            [twist, swap].concat()
        } else {
            [swap, twist].concat()
        };
        BraidWord::new(m, letters)
    };
    for &p1 in &placements {
        for &p2 in &placements {
            let images = vec![image(1, p1)?, image(2, p2)?];
            let Ok(h) = BraidHom::new(3, m, images) else {
                continue;
            };
            if are_equal(&h.apply(&garside(3)?)?, &target)? {
                return Ok(h);
            }
        }
    }
    Err(Error::RelationCheckFailed(format!("no cabling placement works for k={k}")))
}

/// `h2 ∘ h1`.
pub fn compose(h1: &BraidHom, h2: &BraidHom) -> Result<BraidHom> {
    if h1.target != h2.source {
        return Err(Error::DimensionMismatch(format!(
            "map into B_{} followed by map from B_{}",
            h1.target, h2.source
        )));
    }
    let images = h1
        .images
        .iter()
        .map(|w| h2.apply(w))
        .collect::<Result<Vec<_>>>()?;
    BraidHom::unverified(h1.source, h2.target, images)
}
