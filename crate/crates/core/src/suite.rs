//! Named verification bundles. Each returns one [`CheckLine`] per item.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::braid::{flip_delta, garside, generator, BraidWord};
use crate::error::{Error, Result};
use crate::finite::ln::{ln_group, table_params, table_rows};
use crate::finite::perm::{enum_perm_reps, PermRep};
use crate::graph::{all_classes, brute_enumerate, classify, generate, genus_audit, GraphClass, MAX_BRUTE_EDGES};
use crate::hom::{cabling_b3, cyclic_test, twisted_endo};
use crate::homology::{
    apply_transvection, build_chain, chain_product_square, extract_triple, monodromy_rep, satisfies_braid_relations,
    transvection_matrix, CurveClass, ExtractOutcome, SkewLattice,
};
use crate::matrix::{kernel_basis, IntMatrix};
use crate::oracle::{are_equal, is_central};
use crate::periodic::{abelian_image_audit, genus_power_inequality, order_bounds, rh_check, RamificationData};

pub const SUITES: &[&str] = &["identities", "cabling", "twist", "table1", "perm", "graphs", "homology", "rh"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckLine {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckLine {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "pass" } else { "fail" };
        write!(f, "check={} result={}", self.name, verdict)?;
        if !self.detail.is_empty() {
            write!(f, " {}", self.detail)?;
        }
        Ok(())
    }
}

/// `budget` caps the permutation search; other bundles ignore it.
pub fn run_suite(name: &str, budget: u64) -> Result<Vec<CheckLine>> {
    match name {
        "identities" => identities(3..=8),
        "cabling" => cabling(1..=3),
        "twist" => twist(),
        "table1" => table1(),
        "perm" => perm(budget),
        "graphs" => graphs(MAX_BRUTE_EDGES),
        "homology" => homology(),
        "rh" => rh(),
        _ => Err(Error::InvalidParameter(format!("unknown suite `{name}`"))),
    }
}

fn conj(a: &BraidWord, x: &BraidWord) -> BraidWord {
    &(a * x) * &a.inverse()
}

pub fn identities(ns: impl IntoIterator<Item = usize>) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for n in ns {
        let delta = flip_delta(n)?;
        let big = garside(n)?;
        let mut shift = true;
        let mut flip = true;
        for i in 0..n as i64 {
            shift &= are_equal(&conj(&delta, &generator(n, i)?), &generator(n, i + 1)?)?;
            if i >= 1 {
                flip &= are_equal(&conj(&big, &generator(n, i)?), &generator(n, n as i64 - i)?)?;
            }
        }
        let power = are_equal(&delta.pow(n as i64), &big.pow(2))?;
        let central = is_central(&big.pow(2));
        out.push(CheckLine::new("flip-shift", shift, format!("n={n}")));
        out.push(CheckLine::new("half-twist-flip", flip, format!("n={n}")));
        out.push(CheckLine::new("flip-power", power, format!("n={n}")));
        out.push(CheckLine::new("full-twist-central", central, format!("n={n}")));
    }
    Ok(out)
}

pub fn cabling(ks: impl IntoIterator<Item = usize>) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for k in ks {
        let (pass, detail) = match cabling_b3(k) {
            Ok(h) => {
                let sent = h.apply(&garside(3)?)?;
                (h.verify()? && are_equal(&sent, &garside(3 * k)?)?, format!("k={k} m={}", 3 * k))
            }
            Err(e) => (false, format!("k={k} error=\"{e}\"")),
        };
        out.push(CheckLine::new("cabling-half-twist", pass, detail));
    }
    Ok(out)
}

/// Conjugators for the twisted endomorphisms of `B_6`, lengths 0 to 10.
fn twist_conjugators() -> Result<Vec<BraidWord>> {
    (0..=10i64)
        .map(|len| {
            let idx: Vec<i64> = (0..len)
                .map(|j| {
                    let g = (3 * j + len) % 5 + 1;
                    if (j + len) % 3 == 0 {
                        -g
                    } else {
                        g
                    }
                })
                .collect();
            BraidWord::from_extended(6, &idx)
        })
        .collect()
}

pub fn twist() -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for (j, gamma) in twist_conjugators()?.iter().enumerate() {
        let eps = if j % 2 == 0 { 1 } else { -1 };
        let k = j as i64 % 3 - 1;
        let (pass, note) = match twisted_endo(6, gamma, eps, k) {
            Ok(h) => (!cyclic_test(&h), String::new()),
            Err(e) => (false, format!(" error=\"{e}\"")),
        };
        out.push(CheckLine::new(
            "twisted-endo-noncyclic",
            pass,
            format!("len={} eps={eps} k={k}{note}", gamma.len()),
        ));
    }
    Ok(out)
}

pub fn table1() -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for (r, p, d, value) in table_rows() {
        let got = ln_group(&table_params(r, p, d))?.cardinality();
        let pass = got.as_ref() == Some(&value);
        let shown = got.map_or("infinite".to_string(), |c| c.to_string());
        out.push(CheckLine::new(
            "table-entry",
            pass,
            format!("r={r} p={p} d={d} expected={value} got={shown}"),
        ));
    }
    Ok(out)
}

pub fn perm(budget: u64) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for (n, kmax) in [(5, 4), (6, 5)] {
        for k in 1..=kmax {
            let reps = enum_perm_reps(n, k, false, budget)?;
            out.push(CheckLine::new(
                "small-set-cyclic",
                reps.iter().all(PermRep::is_cyclic),
                format!("n={n} k={k} reps={}", reps.len()),
            ));
        }
    }
    let reps = enum_perm_reps(4, 3, false, budget)?;
    out.push(CheckLine::new(
        "first-equals-third",
        reps.iter().all(|r| r.images[0] == r.images[2]),
        format!("n=4 k=3 reps={}", reps.len()),
    ));
    let reps = enum_perm_reps(6, 6, false, budget)?;
    out.push(CheckLine::new(
        "noncyclic-exists",
        reps.iter().any(|r| !r.is_cyclic()),
        format!("n=6 k=6 reps={}", reps.len()),
    ));
    Ok(out)
}

pub fn graphs(max_m: usize) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        let brute: BTreeSet<Vec<usize>> = brute_enumerate(m)?.iter().map(|g| g.canonical_form()).collect();
        let closure: BTreeSet<Vec<usize>> = all_classes(m)
            .iter()
            .map(|c| generate(c, m).map(|g| g.canonical_form()))
            .collect::<Result<_>>()?;
        let round_trip = brute_enumerate(m)?.iter().all(|g| {
            classify(g)
                .and_then(|c| generate(&c, m))
                .is_ok_and(|h| h.canonical_form() == g.canonical_form())
        });
        out.push(CheckLine::new(
            "brute-matches-classes",
            brute == closure && round_trip,
            format!("m={m} graphs={} classes={}", brute.len(), closure.len()),
        ));
    }
    let examples = [
        GraphClass::TypeA { k: 1, p: 1, d: 12 },
        GraphClass::TypeB { k: 1, l: 2, d: 6 },
        GraphClass::TypeB { k: 3, l: 1, d: 4 },
    ];
    for c in examples {
        let pass = generate(&c, 12).and_then(|g| classify(&g)).is_ok_and(|got| got == c);
        out.push(CheckLine::new("labelled-example", pass, format!("class=({c})")));
    }
    let special = generate(&GraphClass::TypeB { k: 3, l: 4, d: 1 }, 12)?;
    let closed = genus_audit(&special, 6, 0)?;
    out.push(CheckLine::new(
        "extremal-configuration",
        closed.feasible && closed.equality_case,
        "genus=6 b=0",
    ));
    let bounded = (1..=4).all(|b| genus_audit(&special, 6, b).is_ok_and(|a| !a.feasible));
    out.push(CheckLine::new("extremal-with-boundary", bounded, "genus=6 b=1..4"));
    Ok(out)
}

/// Directions commuting with every transvection in the chain.
fn commuting_directions(l: &SkewLattice, chain: &[CurveClass]) -> Result<Vec<IntMatrix>> {
    let rows: Vec<Vec<BigInt>> = chain.iter().map(|c| l.dual(c.coords())).collect();
    let a = IntMatrix::from_rows(rows)?;
    let mut out = vec![IntMatrix::identity(l.rank()), IntMatrix::identity(l.rank()).scale(&BigInt::from(-1))];
    for u in kernel_basis(&a) {
        let t = transvection_matrix(l, &CurveClass::new(u)?, 1)?;
        out.push(&t.scale(&BigInt::from(-1)) * &t);
    }
    Ok(out)
}

pub fn homology() -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for g in 2..=4 {
        let l = SkewLattice::standard(g)?;
        for k in 2..=2 * g + 1 {
            let chain = build_chain(&l, k)?;
            let mut relations = true;
            let mut symplectic = true;
            for eps in [1, -1] {
                let rep = monodromy_rep(&l, &chain, eps)?;
                relations &= satisfies_braid_relations(&rep);
                symplectic &= rep.iter().all(|m| l.preserves(m));
            }
            let sq = chain_product_square(&l, &chain)?;
            let square = chain.iter().all(|c| {
                let image = sq.mul_vec(c.coords());
                if k % 2 == 0 {
                    image.iter().zip(c.coords()).all(|(a, b)| *a == -b)
                } else {
                    image == c.coords()
                }
            });
            let mut round_trip = true;
            if k >= 4 {
                let rep = monodromy_rep(&l, &chain, 1)?;
                for v in commuting_directions(&l, &chain)? {
                    let ms = apply_transvection(&l, &rep, &v)?;
                    round_trip &= match extract_triple(&l, &ms) {
                        ExtractOutcome::Triple(t) => t.matrices(&l).is_ok_and(|back| back == ms),
                        _ => false,
                    };
                }
            }
            let detail = format!("g={g} k={k}");
            out.push(CheckLine::new("chain-relations", relations, detail.clone()));
            out.push(CheckLine::new("transvection-symplectic", symplectic, detail.clone()));
            out.push(CheckLine::new("chain-square", square, detail.clone()));
            out.push(CheckLine::new("extract-round-trip", round_trip, detail));
        }
    }
    Ok(out)
}

pub fn rh() -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    let mut infeasible = true;
    for chiq in [1, -1, -3] {
        let d = RamificationData {
            chi_total: -4,
            m: 8,
            branch: vec![4],
            chi_quotient: chiq,
        };
        infeasible &= !rh_check(&d)?;
    }
    out.push(CheckLine::new("single-branch-infeasible", infeasible, "chi=-4 m=8 branch=4"));
    let classical = (2..=20).all(|g| {
        order_bounds(g, 0).is_ok_and(|b| b.finite_subgroup_max == Some(84 * (g - 1)) && b.cyclic_max == Some(4 * g + 2))
    });
    out.push(CheckLine::new("closed-order-bounds", classical, "g=2..20"));
    let torus: Vec<Option<u64>> = (0..=6).map(|b| order_bounds(1, b).ok().and_then(|x| x.genus1_max)).collect();
    let expected = [6, 6, 6, 3, 2, 1, 1].map(Some).to_vec();
    out.push(CheckLine::new("torus-order-bounds", torus == expected, "b=0..6"));
    let audits = (3..=10)
        .map(|r| abelian_image_audit(r, 4, 4))
        .collect::<Result<Vec<_>>>()?;
    let three = audits.iter().all(|a| !a.order_three.holds);
    let four = audits.iter().all(|a| !a.order_four.holds);
    out.push(CheckLine::new("order-three-excluded", three, "r=3..10"));
    out.push(CheckLine::new("order-four-excluded", four, "r=3..10"));
    let power = (0..=30).all(|g| !genus_power_inequality(g).holds);
    out.push(CheckLine::new("genus-power", power, "g=0..30"));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_bundles_pass() {
        for lines in [identities(3..=5).unwrap(), table1().unwrap(), rh().unwrap(), graphs(4).unwrap()] {
            assert!(lines.iter().all(|l| l.pass), "{lines:?}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", 1).is_err());
    }
}
