use num_bigint::BigInt;
use num_traits::Zero;

use super::{check_chain, satisfies_braid_relations, transvection_matrix, CurveClass, SkewLattice};
use crate::error::Result;
use crate::matrix::{kernel_basis, normalize_sign, primitive_part, IntMatrix};

/// A chain, a sign and a direction `V` with `M_i = T_{c_i}^ε V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransvectionTriple {
    pub chain: Vec<CurveClass>,
    pub epsilon: i8,
    pub direction: IntMatrix,
}

impl TransvectionTriple {
    pub fn validate(&self, l: &SkewLattice) -> Result<()> {
        check_chain(l, &self.chain)?;
        if !l.preserves(&self.direction) {
            return Err(crate::Error::NotSymplectic);
        }
        for c in &self.chain {
            let t = transvection_matrix(l, c, 1)?;
            if &t * &self.direction != &self.direction * &t {
                return Err(crate::Error::NotCommuting);
            }
        }
        Ok(())
    }

    pub fn matrices(&self, l: &SkewLattice) -> Result<Vec<IntMatrix>> {
        self.chain
            .iter()
            .map(|c| Ok(&transvection_matrix(l, c, self.epsilon)? * &self.direction))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtractOutcome {
    Triple(TransvectionTriple),
    Cyclic,
    NotRecognized,
}

/// Recovers `(chain, ε, V)` from `M_i = T_{a_i}^ε V`.
///
/// `M_1 M_3⁻¹ - Id = ε(a_1 ω_{a_1} - a_3 ω_{a_3})` and likewise with `a_4`,
/// so `a_1` spans the intersection of the two images. Needs at least four
/// matrices; every candidate is rebuilt and compared before it is returned.
pub fn extract_triple(l: &SkewLattice, ms: &[IntMatrix]) -> ExtractOutcome {
    if ms.is_empty() || ms.iter().any(|m| m.rows() != l.rank() || m.cols() != l.rank()) {
        return ExtractOutcome::NotRecognized;
    }
    if ms.iter().all(|m| *m == ms[0]) {
        return ExtractOutcome::Cyclic;
    }
    if ms.len() < 4 {
        return ExtractOutcome::NotRecognized;
    }
    match try_extract(l, ms) {
        Some(t) => ExtractOutcome::Triple(t),
        None => ExtractOutcome::NotRecognized,
    }
}

fn try_extract(l: &SkewLattice, ms: &[IntMatrix]) -> Option<TransvectionTriple> {
    let id = IntMatrix::identity(l.rank());
    let d13 = &(&ms[0] * &ms[2].inverse()?) - &id;
    let d14 = &(&ms[0] * &ms[3].inverse()?) - &id;
    if d13.rank() > 2 || d14.rank() > 2 {
        return None;
    }
    let a1 = common_image_generator(&d13, &d14)?;
    let rank_one = |c: &[BigInt]| IntMatrix::outer(c, &l.dual(c));
    let a1_term = rank_one(&a1);
    for eps in [1i8, -1] {
        let e = BigInt::from(eps);
        // D13 - ε a_1 ω_{a_1} must be -ε a_3 ω_{a_3}.
        let rest = &d13 - &a1_term.scale(&e);
        let Some(a3) = rank_one_class(&rest) else { continue };
        if rest != rank_one(&a3).scale(&-&e) {
            continue;
        }
        let first = transvection_matrix(l, &CurveClass(a1.clone()), -eps).ok()?;
        let v = &first * &ms[0];
        let v_inv = v.inverse()?;
        let mut chain = Vec::with_capacity(ms.len());
        for m in ms {
            let d = &(m * &v_inv) - &id;
            let c = rank_one_class(&d)?;
            if d != rank_one(&c).scale(&e) {
                return None;
            }
            chain.push(CurveClass(c));
        }
        let triple = TransvectionTriple {
            chain,
            epsilon: eps,
            direction: v,
        };
        if triple.validate(l).is_err() {
            return None;
        }
        if triple.matrices(l).ok()? != ms || !satisfies_braid_relations(ms) {
            return None;
        }
        return Some(triple);
    }
    None
}

/// Primitive generator of `im(A) ∩ im(B)` when that intersection is a line.
fn common_image_generator(a: &IntMatrix, b: &IntMatrix) -> Option<Vec<BigInt>> {
    let n = a.cols();
    // Kernel of [A | -B] pairs (u, w) with A u = B w.
    let mut rows = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let mut row = a.row(i).to_vec();
        row.extend(b.row(i).iter().map(|x| -x));
        rows.push(row);
    }
    let stacked = IntMatrix::from_rows(rows).ok()?;
    let mut found: Option<Vec<BigInt>> = None;
    for k in kernel_basis(&stacked) {
        let image = a.mul_vec(&k[..n]);
        if image.iter().all(Zero::is_zero) {
            continue;
        }
        let p = normalize_sign(&primitive_part(&image));
        match &found {
            None => found = Some(p),
            Some(q) if *q == p => {}
            Some(_) => return None,
        }
    }
    found
}

/// For a matrix of rank one, the primitive class spanning its image.
fn rank_one_class(m: &IntMatrix) -> Option<Vec<BigInt>> {
    if m.rank() != 1 {
        return None;
    }
    let col = (0..m.cols()).map(|j| m.column(j)).find(|c| c.iter().any(|x| !x.is_zero()))?;
    Some(normalize_sign(&primitive_part(&col)))
}
