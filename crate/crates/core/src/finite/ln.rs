//! The abelian quotients `L(M, m, d, s)` of the group generated by the odd
//! generators, with relations `x_i^M = 1`, `x_i^m = x_1^m` and
//! `(x_1 ⋯ x_r)^d = x_1^s`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::snf::{smith_normal_form, AbelianInvariants};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LnParams {
    pub r: usize,
    pub big_m: u64,
    pub m: u64,
    pub d: u64,
    pub s: u64,
}

impl LnParams {
    pub fn new(r: usize, big_m: u64, m: u64, d: u64, s: u64) -> Self {
        LnParams { r, big_m, m, d, s }
    }

    pub fn q(&self) -> Option<u64> {
        (self.m != 0).then(|| self.big_m / self.m)
    }
}

impl fmt::Display for LnParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {} {}", self.r, self.big_m, self.m, self.d, self.s)
    }
}

/// `m | M`, `d | m | s` and `M | (r - s/d) m`. With `M = 0` the remaining
/// parameters must be all zero or satisfy `d | m | s`.
pub fn validate_params(p: &LnParams) -> bool {
    if p.big_m == 0 {
        return (p.m == 0 && p.d == 0 && p.s == 0)
            || (p.m != 0 && p.d != 0 && p.m.is_multiple_of(p.d) && p.s.is_multiple_of(p.m));
    }
    if p.m == 0 || p.d == 0 {
        return false;
    }
    if !p.big_m.is_multiple_of(p.m) || !p.m.is_multiple_of(p.d) || !p.s.is_multiple_of(p.m) {
        return false;
    }
    let rhs = (BigInt::from(p.r) - BigInt::from(p.s / p.d)) * BigInt::from(p.m);
    rhs.mod_floor(&BigInt::from(p.big_m)).is_zero()
}

/// Relation lattice in `Z^r`: rows `M e_i`, `m(e_i - e_1)` and `d Σ e_i - s e_1`.
pub fn relation_matrix(p: &LnParams) -> IntMatrix {
    let r = p.r;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(2 * r);
    for i in 0..r {
        let mut row = vec![BigInt::zero(); r];
        row[i] = BigInt::from(p.big_m);
        rows.push(row);
    }
    for i in 1..r {
        let mut row = vec![BigInt::zero(); r];
        row[i] = BigInt::from(p.m);
        row[0] = -BigInt::from(p.m);
        rows.push(row);
    }
    let mut row = vec![BigInt::from(p.d); r];
    row[0] -= BigInt::from(p.s);
    rows.push(row);
    IntMatrix::from_rows(rows).expect("rectangular")
}

pub fn ln_group(p: &LnParams) -> Result<AbelianInvariants> {
    if p.r < 2 {
        return Err(Error::InvalidParams(format!("r = {} is too small", p.r)));
    }
    if !validate_params(p) {
        return Err(Error::InvalidParams(p.to_string()));
    }
    if p.big_m == 0 {
        return Err(Error::InvalidParams("M must be positive".into()));
    }
    Ok(smith_normal_form(&relation_matrix(p)))
}

/// `q d m^{r-1}`.
pub fn ln_cardinality_formula(p: &LnParams) -> BigInt {
    let q = BigInt::from(p.q().unwrap_or(0));
    q * BigInt::from(p.d) * BigInt::from(p.m).pow(p.r as u32 - 1)
}

/// Invariant factors of `Z/M × (Z/m)^{r-2} × Z/d`.
pub fn ln_expected_structure(p: &LnParams) -> AbelianInvariants {
    let mut orders = vec![BigInt::from(p.big_m)];
    orders.extend(std::iter::repeat_n(BigInt::from(p.m), p.r.saturating_sub(2)));
    orders.push(BigInt::from(p.d));
    AbelianInvariants::of_cyclic_product(&orders)
}

/// Rows of the table of `d p^{r-2}` values that are compared with
/// `6(2r - 2)`: `(r, p, d, value)`.
pub fn table_rows() -> Vec<(usize, u64, u64, BigInt)> {
    let mut out = Vec::new();
    let r3: &[(u64, u64)] = &[(3, 3), (4, 4), (5, 5)];
    let r4: &[(u64, u64)] = &[(3, 3), (4, 2), (4, 4), (5, 5)];
    for (r, entries) in [(3usize, r3), (4, r4)] {
        for &(p, d) in entries {
            let value = BigInt::from(d) * BigInt::from(p).pow(r as u32 - 2);
            out.push((r, p, d, value));
        }
    }
    out
}

/// Parameters whose group has order `d p^{r-2}`: the quotient on `r - 1`
/// odd generators with `M = m = p`.
pub fn table_params(r: usize, p: u64, d: u64) -> LnParams {
    LnParams::new(r - 1, p, p, d, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn card(p: LnParams) -> BigInt {
        ln_group(&p).unwrap().cardinality().unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(validate_params(&LnParams::new(3, 0, 0, 0, 0)));
        assert!(!validate_params(&LnParams::new(3, 4, 3, 3, 3)));
        assert!(validate_params(&LnParams::new(3, 4, 2, 2, 2)));
        assert!(!validate_params(&LnParams::new(3, 4, 2, 2, 4)));
    }

    #[test]
    fn cardinalities_follow_formula() {
        assert_eq!(card(LnParams::new(3, 1, 1, 1, 3)), BigInt::from(1));
        assert_eq!(card(LnParams::new(3, 3, 3, 3, 9)), BigInt::from(27));
        assert_eq!(card(LnParams::new(4, 4, 4, 2, 8)), BigInt::from(128));
        assert_eq!(card(LnParams::new(3, 4, 2, 2, 2)), BigInt::from(16));
    }

    #[test]
    fn table_values() {
        let values: Vec<BigInt> = table_rows().into_iter().map(|r| r.3).collect();
        let expected: Vec<BigInt> = [9, 16, 25, 27, 32, 64, 125].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(values, expected);
        for (r, p, d, value) in table_rows() {
            let params = table_params(r, p, d);
            assert!(validate_params(&params), "{params}");
            assert_eq!(card(params), value, "r={r} p={p} d={d}");
        }
    }
}
