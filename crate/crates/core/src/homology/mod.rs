//! First homology of a closed surface with its intersection pairing, and
//! Dehn twists acting on it as transvections.

mod central;
mod triple;

pub use central::{check_transvection_pair, lift_adjust, satisfies_lifted_relations, CentralExtElement};
pub use triple::{extract_triple, ExtractOutcome, TransvectionTriple};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{content, normalize_sign, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceSig {
    pub g: usize,
    pub b: usize,
}

impl SurfaceSig {
    /// Only surfaces of negative Euler characteristic are modelled.
    pub fn new(g: usize, b: usize) -> Result<Self> {
        let s = SurfaceSig { g, b };
        if s.euler() > -1 {
            return Err(Error::InvalidParameter(format!(
                "surface of genus {g} with {b} boundary components has euler characteristic {}",
                s.euler()
            )));
        }
        Ok(s)
    }

    pub fn euler(&self) -> i64 {
        2 - 2 * self.g as i64 - self.b as i64
    }
}

/// Integer lattice with a skew pairing `⟨x, y⟩ = xᵀ Ω y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewLattice {
    form: IntMatrix,
}

impl SkewLattice {
    /// `H_1` of the closed genus `g` surface, `⟨e_{2i-1}, e_{2i}⟩ = 1`.
    pub fn standard(g: usize) -> Result<Self> {
        if g == 0 {
            return Err(Error::Unsupported("genus 0 has no homology to model".into()));
        }
        let mut form = IntMatrix::zeros(2 * g, 2 * g);
        for i in 0..g {
            form.set(2 * i, 2 * i + 1, BigInt::one());
            form.set(2 * i + 1, 2 * i, -BigInt::one());
        }
        Ok(SkewLattice { form })
    }

    pub fn from_form(form: IntMatrix) -> Result<Self> {
        if !form.is_square() || form.transpose() != -&form {
            return Err(Error::InvalidParameter("pairing must be skew-symmetric".into()));
        }
        Ok(SkewLattice { form })
    }

    pub fn rank(&self) -> usize {
        self.form.rows()
    }

    pub fn genus(&self) -> usize {
        self.rank() / 2
    }

    pub fn form(&self) -> &IntMatrix {
        &self.form
    }

    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        x.iter().zip(self.form.mul_vec(y)).map(|(a, b)| a * b).sum()
    }

    /// The functional `x ↦ ⟨x, c⟩` as a coefficient vector.
    pub fn dual(&self, c: &[BigInt]) -> Vec<BigInt> {
        self.form.mul_vec(c)
    }

    pub fn preserves(&self, m: &IntMatrix) -> bool {
        m.rows() == self.rank() && m.cols() == self.rank() && &(&m.transpose() * &self.form) * m == self.form
    }

    fn check_class(&self, c: &CurveClass) -> Result<()> {
        if c.0.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "class of length {} in a rank {} lattice",
                c.0.len(),
                self.rank()
            )));
        }
        Ok(())
    }
}

/// Homology class of a simple closed curve: zero or primitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass(pub Vec<BigInt>);

impl CurveClass {
    pub fn new(v: Vec<BigInt>) -> Result<Self> {
        let c = content(&v);
        if !c.is_zero() && !c.is_one() {
            return Err(Error::NotPrimitive);
        }
        Ok(CurveClass(v))
    }

    pub fn from_i64(v: &[i64]) -> Result<Self> {
        Self::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn normalized(&self) -> Self {
        CurveClass(normalize_sign(&self.0))
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }
}

/// `x ↦ x + ε⟨x, c⟩c`.
pub fn transvection_matrix(l: &SkewLattice, c: &CurveClass, eps: i8) -> Result<IntMatrix> {
    l.check_class(c)?;
    check_eps(eps)?;
    if !c.is_zero() && !content(&c.0).is_one() {
        return Err(Error::NotPrimitive);
    }
    let outer = IntMatrix::outer(&c.0, &l.dual(&c.0)).scale(&BigInt::from(eps));
    Ok(&IntMatrix::identity(l.rank()) + &outer)
}

fn check_eps(eps: i8) -> Result<()> {
    if eps != 1 && eps != -1 {
        return Err(Error::InvalidParameter(format!("epsilon must be ±1, got {eps}")));
    }
    Ok(())
}

/// A `k`-chain in the standard lattice:
/// `a_1, b_1, a_1 - a_2, b_2, …, b_g, a_g`, each with positive leading entry.
pub fn build_chain(l: &SkewLattice, k: usize) -> Result<Vec<CurveClass>> {
    let g = l.genus();
    if k == 0 {
        return Err(Error::InvalidParameter("chain length must be positive".into()));
    }
    if k > 2 * g + 1 {
        return Err(Error::ChainTooLong { g, k });
    }
    let unit = |i: usize| {
        let mut v = vec![BigInt::zero(); 2 * g];
        v[i] = BigInt::one();
        v
    };
    let chain = (1..=k)
        .map(|i| {
            let v = if i == 1 || i == 2 * g + 1 {
                unit(if i == 1 { 0 } else { 2 * g - 2 })
            } else if i % 2 == 0 {
                unit(i - 1)
            } else {
                let j = (i - 1) / 2;
                let mut v = unit(2 * j - 2);
                v[2 * j] = -BigInt::one();
                v
            };
            CurveClass(normalize_sign(&v))
        })
        .collect();
    Ok(chain)
}

/// Primitive classes with `|⟨c_i, c_{i+1}⟩| = 1` and `⟨c_i, c_j⟩ = 0` otherwise.
pub fn check_chain(l: &SkewLattice, chain: &[CurveClass]) -> Result<()> {
    for (i, c) in chain.iter().enumerate() {
        l.check_class(c)?;
        if !content(&c.0).is_one() {
            return Err(Error::IntersectionPatternViolated(format!("c_{} is not primitive", i + 1)));
        }
    }
    for i in 0..chain.len() {
        for j in i + 1..chain.len() {
            let p = l.pairing(&chain[i].0, &chain[j].0);
            let ok = if j == i + 1 { p.abs().is_one() } else { p.is_zero() };
            if !ok {
                return Err(Error::IntersectionPatternViolated(format!(
                    "<c_{}, c_{}> = {p}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// Homology images of `τ_i ↦ T_{c_i}^ε`.
pub fn monodromy_rep(l: &SkewLattice, chain: &[CurveClass], eps: i8) -> Result<Vec<IntMatrix>> {
    check_chain(l, chain)?;
    chain.iter().map(|c| transvection_matrix(l, c, eps)).collect()
}

/// `(T_1 (T_2 T_1) ⋯ (T_k ⋯ T_1))²` for `T_i = T_{c_i}`.
pub fn chain_product_square(l: &SkewLattice, chain: &[CurveClass]) -> Result<IntMatrix> {
    if chain.len() < 2 {
        return Err(Error::InvalidParameter("chain of length at least 2 required".into()));
    }
    let ts = monodromy_rep(l, chain, 1)?;
    let mut p = IntMatrix::identity(l.rank());
    for top in 0..ts.len() {
        for t in ts[..=top].iter().rev() {
            p = &p * t;
        }
    }
    Ok(&p * &p)
}

/// `ρ_1(τ_i) = ρ(τ_i) V` for a pairing-preserving `V` in the centralizer.
pub fn apply_transvection(l: &SkewLattice, rep: &[IntMatrix], v: &IntMatrix) -> Result<Vec<IntMatrix>> {
    if !l.preserves(v) {
        return Err(Error::NotSymplectic);
    }
    for m in rep {
        if m.rows() != l.rank() || m.cols() != l.rank() {
            return Err(Error::DimensionMismatch("representation matrix".into()));
        }
        if (m * v) != (v * m) {
            return Err(Error::NotCommuting);
        }
    }
    Ok(rep.iter().map(|m| m * v).collect())
}

/// Braid relation between adjacent matrices, commutation between the rest.
pub fn satisfies_braid_relations(ms: &[IntMatrix]) -> bool {
    (0..ms.len()).all(|i| {
        (i + 1..ms.len()).all(|j| {
            let (a, b) = (&ms[i], &ms[j]);
            if j == i + 1 {
                &(a * b) * a == &(b * a) * b
            } else {
                a * b == b * a
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(v: &[i64]) -> CurveClass {
        CurveClass::from_i64(v).unwrap()
    }

    #[test]
    fn standard_form_blocks() {
        let l = SkewLattice::standard(1).unwrap();
        assert_eq!(*l.form(), IntMatrix::from_i64(&[&[0, 1], &[-1, 0]]).unwrap());
        let l2 = SkewLattice::standard(2).unwrap();
        assert_eq!(l2.pairing(&class(&[1, 0, 1, 0]).0, &class(&[0, 1, 0, 0]).0), BigInt::one());
        assert!(SkewLattice::standard(0).is_err());
    }

    #[test]
    fn transvection_on_genus_one() {
        let l = SkewLattice::standard(1).unwrap();
        let t = transvection_matrix(&l, &class(&[1, 0]), 1).unwrap();
        // e_1 is fixed, e_2 picks up <e_2, e_1> e_1 = -e_1.
        assert_eq!(t, IntMatrix::from_i64(&[&[1, -1], &[0, 1]]).unwrap());
        let zero = transvection_matrix(&l, &class(&[0, 0]), -1).unwrap();
        assert!(zero.is_identity());
        assert!(matches!(CurveClass::from_i64(&[2, 0]), Err(Error::NotPrimitive)));
    }

    #[test]
    fn chain_lengths() {
        let l1 = SkewLattice::standard(1).unwrap();
        assert_eq!(build_chain(&l1, 3).unwrap().len(), 3);
        assert!(matches!(build_chain(&l1, 4), Err(Error::ChainTooLong { g: 1, k: 4 })));
        for g in 1..=4 {
            let l = SkewLattice::standard(g).unwrap();
            for k in 1..=2 * g + 1 {
                check_chain(&l, &build_chain(&l, k).unwrap()).unwrap();
            }
        }
    }

    #[test]
    fn monodromy_relations_both_signs() {
        let l = SkewLattice::standard(2).unwrap();
        let chain = build_chain(&l, 3).unwrap();
        let plus = monodromy_rep(&l, &chain, 1).unwrap();
        let minus = monodromy_rep(&l, &chain, -1).unwrap();
        assert!(satisfies_braid_relations(&plus));
        assert!(satisfies_braid_relations(&minus));
        for (p, m) in plus.iter().zip(&minus) {
            assert!((p * m).is_identity());
        }
    }

    #[test]
    fn chain_square_even_and_odd() {
        let l = SkewLattice::standard(2).unwrap();
        let chain = build_chain(&l, 2).unwrap();
        let a = chain_product_square(&l, &chain).unwrap();
        for c in &chain {
            let neg: Vec<BigInt> = c.0.iter().map(|x| -x).collect();
            assert_eq!(a.mul_vec(&c.0), neg);
        }
        assert!((&a * &a).is_identity());

        let chain3 = build_chain(&l, 3).unwrap();
        let a3 = chain_product_square(&l, &chain3).unwrap();
        for c in &chain3 {
            assert_eq!(a3.mul_vec(&c.0), c.0);
        }
    }

    #[test]
    fn apply_transvection_checks_centralizer() {
        let l = SkewLattice::standard(2).unwrap();
        let chain = build_chain(&l, 2).unwrap();
        let rep = monodromy_rep(&l, &chain, 1).unwrap();
        let id = IntMatrix::identity(4);
        assert_eq!(apply_transvection(&l, &rep, &id).unwrap(), rep);
        let neg = -&id;
        assert!(satisfies_braid_relations(&apply_transvection(&l, &rep, &neg).unwrap()));
        let u = class(&[0, 0, 1, 0]);
        let tu = transvection_matrix(&l, &u, 1).unwrap();
        assert!(satisfies_braid_relations(&apply_transvection(&l, &rep, &tu).unwrap()));
        let bad = transvection_matrix(&l, &class(&[0, 1, 1, 0]), 1).unwrap();
        assert!(matches!(apply_transvection(&l, &rep, &bad), Err(Error::NotCommuting)));
    }
}
