use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::Zero;

use super::satisfies_braid_relations;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A homology matrix paired with formal boundary-twist exponents. The twist
/// part is central, so products multiply matrices and add twists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralExtElement {
    pub mat: IntMatrix,
    pub twist: Vec<BigInt>,
}

impl CentralExtElement {
    pub fn new(mat: IntMatrix, twist: Vec<BigInt>) -> Self {
        CentralExtElement { mat, twist }
    }

    pub fn identity(rank: usize, boundaries: usize) -> Self {
        CentralExtElement {
            mat: IntMatrix::identity(rank),
            twist: vec![BigInt::zero(); boundaries],
        }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.twist.len() != rhs.twist.len() {
            return Err(Error::DimensionMismatch("twist vectors".into()));
        }
        Ok(CentralExtElement {
            mat: self.mat.try_mul(&rhs.mat)?,
            twist: self.twist.iter().zip(&rhs.twist).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let mat = self
            .mat
            .inverse()
            .ok_or_else(|| Error::InvalidParameter("matrix part is not invertible".into()))?;
        Ok(CentralExtElement {
            mat,
            twist: self.twist.iter().map(|t| -t).collect(),
        })
    }

    pub fn is_central_twist(&self) -> bool {
        self.mat.is_identity()
    }
}

impl Mul for &CentralExtElement {
    type Output = CentralExtElement;
    fn mul(self, rhs: &CentralExtElement) -> CentralExtElement {
        self.try_mul(rhs).expect("compatible elements")
    }
}

/// The common central element `g` with `r2_i = r1_i g`, when there is one.
pub fn check_transvection_pair(
    r1: &[CentralExtElement],
    r2: &[CentralExtElement],
) -> Result<CentralExtElement> {
    if r1.len() != r2.len() {
        return Err(Error::ImageCountMismatch {
            expected: r1.len(),
            got: r2.len(),
        });
    }
    if r1.is_empty() {
        return Err(Error::InvalidParameter("empty representation".into()));
    }
    let mut common: Option<CentralExtElement> = None;
    for (i, (a, b)) in r1.iter().zip(r2).enumerate() {
        if a.mat != b.mat {
            return Err(Error::ProjectionsDiffer(i + 1));
        }
        let g = a.inverse()?.try_mul(b)?;
        match &common {
            None => common = Some(g),
            Some(c) if *c == g => {}
            Some(_) => return Err(Error::DefectsNotEqual),
        }
    }
    Ok(common.expect("non-empty"))
}

/// Corrects lifts whose braid relations fail only by central defects:
/// `A'_i = A_i W_1 ⋯ W_{i-1}` with `W_i = (A_i A_{i+1} A_i)(A_{i+1} A_i A_{i+1})⁻¹`.
pub fn lift_adjust(lifts: &[CentralExtElement]) -> Result<Vec<CentralExtElement>> {
    let Some(first) = lifts.first() else {
        return Ok(Vec::new());
    };
    let mats: Vec<IntMatrix> = lifts.iter().map(|a| a.mat.clone()).collect();
    if !satisfies_braid_relations(&mats) {
        return Err(Error::NotLiftable("matrix parts violate the braid relations".into()));
    }
    let mut out = Vec::with_capacity(lifts.len());
    let mut acc = CentralExtElement::identity(first.mat.rows(), first.twist.len());
    for (i, a) in lifts.iter().enumerate() {
        out.push(a.try_mul(&acc)?);
        if let Some(b) = lifts.get(i + 1) {
            let w = a.try_mul(b)?.try_mul(a)?.try_mul(&b.try_mul(a)?.try_mul(b)?.inverse()?)?;
            if !w.is_central_twist() {
                return Err(Error::NotLiftable(format!("defect W_{} is not central", i + 1)));
            }
            acc = acc.try_mul(&w)?;
        }
    }
    Ok(out)
}

/// Exact braid and commutation relations, twists included.
pub fn satisfies_lifted_relations(xs: &[CentralExtElement]) -> bool {
    (0..xs.len()).all(|i| {
        (i + 1..xs.len()).all(|j| {
            let (a, b) = (&xs[i], &xs[j]);
            if j == i + 1 {
                (&(a * b) * a) == (&(b * a) * b)
            } else {
                (a * b) == (b * a)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{build_chain, monodromy_rep, SkewLattice};

    fn lifts(twists: &[i64]) -> Vec<CentralExtElement> {
        let l = SkewLattice::standard(2).unwrap();
        let chain = build_chain(&l, twists.len()).unwrap();
        monodromy_rep(&l, &chain, 1)
            .unwrap()
            .into_iter()
            .zip(twists)
            .map(|(m, &t)| CentralExtElement::new(m, vec![BigInt::from(t)]))
            .collect()
    }

    #[test]
    fn exact_lifts_unchanged() {
        let xs = lifts(&[2, 2, 2, 2]);
        assert!(satisfies_lifted_relations(&xs));
        assert_eq!(lift_adjust(&xs).unwrap(), xs);
    }

    #[test]
    fn perturbed_twist_corrected() {
        let xs = lifts(&[0, 3, 0, 0]);
        assert!(!satisfies_lifted_relations(&xs));
        let fixed = lift_adjust(&xs).unwrap();
        assert!(satisfies_lifted_relations(&fixed));
        assert!(fixed.iter().all(|a| a.twist == vec![BigInt::zero()]));
    }

    #[test]
    fn matrix_defect_rejected() {
        let mut xs = lifts(&[0, 0, 0]);
        xs.swap(0, 1);
        xs[2] = xs[1].clone();
        assert!(matches!(lift_adjust(&xs), Err(Error::NotLiftable(_))));
    }

    #[test]
    fn pair_direction() {
        let xs = lifts(&[1, 1, 1]);
        let t = CentralExtElement::new(IntMatrix::identity(4), vec![BigInt::from(5)]);
        let ys: Vec<_> = xs.iter().map(|a| a * &t).collect();
        assert_eq!(check_transvection_pair(&xs, &ys).unwrap(), t);
        assert_eq!(
            check_transvection_pair(&xs, &xs).unwrap(),
            CentralExtElement::identity(4, 1)
        );
        let mut bad = ys.clone();
        bad[1] = xs[0].clone();
        assert!(matches!(check_transvection_pair(&xs, &bad), Err(Error::ProjectionsDiffer(2))));
        let mut uneven = ys;
        uneven[2] = &xs[2] * &(&t * &t);
        assert!(matches!(check_transvection_pair(&xs, &uneven), Err(Error::DefectsNotEqual)));
    }
}
