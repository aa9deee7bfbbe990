//! Arithmetic constraints on periodic mapping classes: the Riemann–Hurwitz
//! equation `χ + Σ (m - o_i) = m χ_q`, fixed-point and order bounds, and the
//! inequalities that rule out small abelian images.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RamificationData {
    pub chi_total: i64,
    pub m: u64,
    /// Preimage counts `o_i`, each a proper divisor of `m`.
    pub branch: Vec<u64>,
    pub chi_quotient: i64,
}

impl fmt::Display for RamificationData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.branch.iter().map(ToString::to_string).collect();
        write!(
            f,
            "chi={} m={} branch={} chiq={}",
            self.chi_total,
            self.m,
            b.join(","),
            self.chi_quotient
        )
    }
}

pub fn rh_check(d: &RamificationData) -> Result<bool> {
    if d.m == 0 {
        return Err(Error::InvalidParameter("group order must be positive".into()));
    }
    if let Some(o) = d.branch.iter().find(|&&o| o == 0 || o >= d.m || !d.m.is_multiple_of(o)) {
        return Err(Error::InvalidParameter(format!("{o} is not a proper divisor of {}", d.m)));
    }
    let lhs = d.chi_total as i128 + d.branch.iter().map(|&o| (d.m - o) as i128).sum::<i128>();
    Ok(lhs == d.m as i128 * d.chi_quotient as i128)
}

/// All branch lists, sorted increasingly, that solve the equation for one of
/// the allowed quotient characteristics. `max_points` caps the list length.
pub fn rh_enumerate(
    chi_total: i64,
    m: u64,
    quotient_chis: &BTreeSet<i64>,
    max_points: Option<usize>,
) -> Result<Vec<RamificationData>> {
    if m == 0 {
        return Err(Error::InvalidParameter("group order must be positive".into()));
    }
    let divisors: Vec<u64> = (1..m).filter(|o| m.is_multiple_of(*o)).collect();
    let mut out = Vec::new();
    for &chiq in quotient_chis {
        let target = m as i128 * chiq as i128 - chi_total as i128;
        if target < 0 {
            continue;
        }
        let mut acc = Vec::new();
        fill(&divisors, m, target as u128, 0, max_points, &mut acc, &mut |branch| {
            out.push(RamificationData {
                chi_total,
                m,
                branch: branch.to_vec(),
                chi_quotient: chiq,
            })
        });
    }
    out.sort();
    Ok(out)
}

fn fill(
    divisors: &[u64],
    m: u64,
    remaining: u128,
    from: usize,
    max_points: Option<usize>,
    acc: &mut Vec<u64>,
    emit: &mut dyn FnMut(&[u64]),
) {
    if remaining == 0 {
        emit(acc);
        return;
    }
    if max_points.is_some_and(|cap| acc.len() >= cap) {
        return;
    }
    for (i, &o) in divisors.iter().enumerate().skip(from) {
        let w = (m - o) as u128;
        if w <= remaining {
            acc.push(o);
            fill(divisors, m, remaining - w, i, max_points, acc, emit);
            acc.pop();
        }
    }
}

/// `2 + 2g/(m - 1)`.
pub fn fixed_bound(g: u64, m: u64) -> Result<BigRational> {
    if m < 2 {
        return Err(Error::OutOfDomain(format!("order {m} is below 2")));
    }
    Ok(BigRational::from_integer(BigInt::from(2)) + BigRational::new(BigInt::from(2 * g), BigInt::from(m - 1)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderBounds {
    pub finite_subgroup_max: Option<u64>,
    pub cyclic_max: Option<u64>,
    pub genus1_max: Option<u64>,
}

impl fmt::Display for OrderBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |x: Option<u64>| x.map_or("none".to_string(), |v| v.to_string());
        write!(
            f,
            "finite_subgroup_max={} cyclic_max={} genus1_max={}",
            show(self.finite_subgroup_max),
            show(self.cyclic_max),
            show(self.genus1_max)
        )
    }
}

/// Bounds on orders of finite subgroups and periodic elements of the
/// mapping class group of `Σ_{g,b}`.
pub fn order_bounds(g: u64, b: u64) -> Result<OrderBounds> {
    let bounds = OrderBounds {
        finite_subgroup_max: (g >= 2 && b == 0).then(|| 84 * (g - 1)),
        cyclic_max: (g >= 1 && b == 0).then(|| 4 * g + 2),
        genus1_max: (g == 1).then(|| genus_one_bound(b)),
    };
    if bounds == (OrderBounds { finite_subgroup_max: None, cyclic_max: None, genus1_max: None }) {
        return Err(Error::OutOfDomain(format!("no bound applies to genus {g} with {b} boundary components")));
    }
    Ok(bounds)
}

/// Largest `m` with `m ≤ 1 + 2/(b - 2)`, or `6` for `b ≤ 2`.
fn genus_one_bound(b: u64) -> u64 {
    if b <= 2 {
        6
    } else {
        1 + 2 / (b - 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub name: &'static str,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

impl Inequality {
    fn le(name: &'static str, lhs: BigInt, rhs: BigInt) -> Self {
        let holds = lhs <= rhs;
        Inequality { name, lhs, rhs, holds }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.holds { "<=" } else { ">" };
        write!(f, "{}: {} {} {} holds={}", self.name, self.lhs, rel, self.rhs, self.holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianImageReport {
    pub r: u32,
    pub m: u64,
    pub d: u64,
    /// `d m^{r-1} ≤ 2m + 4r`.
    pub order_bound: Inequality,
    /// `3^r ≤ 6 + 4r`, the case `m = d = 3`.
    pub order_three: Inequality,
    /// `2 · 4^{r-2} ≤ 2 + r`, the case `m ≥ 4`.
    pub order_four: Inequality,
    /// `d m^{r-2} ≤ 6(2r - 2)`.
    pub image_bound: Inequality,
    /// `3 d m^{r-2} ≤ 6(2r - 2)`.
    pub kernel_bound: Inequality,
}

impl AbelianImageReport {
    /// Whether the inequality that governs this `m` fails, which is the
    /// contradiction sought.
    pub fn order_contradiction(&self) -> bool {
        !self.order_bound.holds
    }
}

impl fmt::Display for AbelianImageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "r={} m={} d={}", self.r, self.m, self.d)?;
        writeln!(f, "{}", self.order_bound)?;
        writeln!(f, "{} applies={}", self.order_three, self.m == 3)?;
        writeln!(f, "{} applies={}", self.order_four, self.m >= 4)?;
        writeln!(f, "{}", self.image_bound)?;
        write!(f, "{}", self.kernel_bound)
    }
}

pub fn abelian_image_audit(r: u32, m: u64, d: u64) -> Result<AbelianImageReport> {
    if r < 3 || m < 3 || d < 2 || !m.is_multiple_of(d) {
        return Err(Error::OutOfDomain(format!("r={r} m={m} d={d}")));
    }
    let big = |x: u64| BigInt::from(x);
    let euler = big(6 * (2 * r as u64 - 2));
    let image = big(d) * big(m).pow(r - 2);
    Ok(AbelianImageReport {
        r,
        m,
        d,
        order_bound: Inequality::le("order", big(d) * big(m).pow(r - 1), big(2 * m + 4 * r as u64)),
        order_three: Inequality::le("order-three", big(3).pow(r), big(6 + 4 * r as u64)),
        order_four: Inequality::le("order-four", big(2) * big(4).pow(r - 2), big(2 + r as u64)),
        image_bound: Inequality::le("image", image.clone(), euler.clone()),
        kernel_bound: Inequality::le("kernel", big(3) * image, euler),
    })
}

/// `g ≥ 1 + 2^g`.
pub fn genus_power_inequality(g: u32) -> Inequality {
    Inequality::le("genus-power", BigInt::from(1) + BigInt::from(2).pow(g), BigInt::from(g))
}
