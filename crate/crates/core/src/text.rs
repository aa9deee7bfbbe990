//! Line-oriented text formats. Blank lines, `#` comments and `check=` report
//! trailers are skipped, so command output can be read back.
//!
//! | object | format |
//! |---|---|
//! | braid | `n=<int>` then signed generator indices; `0` is `τ_0` |
//! | matrix | `rank=<int>` then that many rows |
//! | chain | `k=<int>` then `k` vectors |
//! | hom | `n=<int> m=<int>` then `<i> : <word>` per generator |
//! | params | `r M m d s` |
//! | permutation | cycles `(1 2)(3 4)` or maps `1->2 2->1` |
//! | graph | `vertices=<int>`, edges `u v`, `label v genus b`, `vperm=<cycles> eperm=<cycles>` (0-based) |
//! | ramification | `chi=<int> m=<int> branch=<o1,o2,...> chiq=<int>` |
//! | lifted matrix | a matrix block followed by `twist=<t1,t2,...>` |

use num_bigint::BigInt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::finite::ln::LnParams;
use crate::finite::perm::Perm;
use crate::graph::{ActionGraph, VertexLabel};
use crate::hom::BraidHom;
use crate::homology::{CentralExtElement, CurveClass};
use crate::matrix::IntMatrix;
use crate::periodic::RamificationData;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn lines(s: &str) -> impl Iterator<Item = &str> {
    s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("check="))
}

fn num<T: std::str::FromStr>(tok: &str) -> Result<T> {
    tok.trim().parse().map_err(|_| parse_err(format!("bad number `{tok}`")))
}

fn keyed<T: std::str::FromStr>(tok: &str, key: &str) -> Result<T> {
    let v = tok
        .trim()
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| parse_err(format!("expected `{key}=`, got `{tok}`")))?;
    num(v)
}

fn int_row(line: &str) -> Result<Vec<BigInt>> {
    line.split_whitespace().map(num).collect()
}

fn comma_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(num).collect()
}

pub fn parse_braid(s: &str) -> Result<BraidWord> {
    let mut toks = s.split_whitespace().filter(|t| !t.starts_with('#'));
    let n: usize = keyed(toks.next().ok_or_else(|| parse_err("empty braid"))?, "n")?;
    let idx: Vec<i64> = toks.map(num).collect::<Result<_>>()?;
    BraidWord::from_extended(n, &idx)
}

/// A braid word given as indices only, for a known strand count.
pub fn parse_word(n: usize, s: &str) -> Result<BraidWord> {
    let idx: Vec<i64> = s.split_whitespace().map(num).collect::<Result<_>>()?;
    BraidWord::from_extended(n, &idx)
}

pub fn format_word(w: &BraidWord) -> String {
    w.to_string()
}

fn take_matrix<'a>(it: &mut impl Iterator<Item = &'a str>, header: &str) -> Result<IntMatrix> {
    let rank: usize = keyed(header, "rank")?;
    let mut rows = Vec::with_capacity(rank);
    for _ in 0..rank {
        let row = int_row(it.next().ok_or_else(|| parse_err("matrix ended early"))?)?;
        if row.len() != rank {
            return Err(parse_err(format!("row of length {} in a rank {rank} matrix", row.len())));
        }
        rows.push(row);
    }
    IntMatrix::from_rows(rows)
}

pub fn parse_matrix(s: &str) -> Result<IntMatrix> {
    let mut it = lines(s);
    let header = it.next().ok_or_else(|| parse_err("empty matrix"))?;
    let m = take_matrix(&mut it, header)?;
    if it.next().is_some() {
        return Err(parse_err("trailing lines after matrix"));
    }
    Ok(m)
}

pub fn parse_matrices(s: &str) -> Result<Vec<IntMatrix>> {
    let mut it = lines(s);
    let mut out = Vec::new();
    while let Some(header) = it.next() {
        out.push(take_matrix(&mut it, header)?);
    }
    Ok(out)
}

pub fn format_matrix(m: &IntMatrix) -> String {
    format!("rank={}\n{}", m.rows(), m)
}

pub fn parse_lifted(s: &str) -> Result<Vec<CentralExtElement>> {
    let mut it = lines(s);
    let mut out = Vec::new();
    while let Some(header) = it.next() {
        let mat = take_matrix(&mut it, header)?;
        let tw = it.next().ok_or_else(|| parse_err("missing twist line"))?;
        let rest = tw
            .strip_prefix("twist=")
            .ok_or_else(|| parse_err(format!("expected `twist=`, got `{tw}`")))?;
        out.push(CentralExtElement::new(mat, comma_list(rest)?));
    }
    Ok(out)
}

pub fn format_lifted(x: &CentralExtElement) -> String {
    let t: Vec<String> = x.twist.iter().map(ToString::to_string).collect();
    format!("{}twist={}", format_matrix(&x.mat), t.join(","))
}

pub fn parse_chain(s: &str) -> Result<Vec<CurveClass>> {
    let mut it = lines(s);
    let k: usize = keyed(it.next().ok_or_else(|| parse_err("empty chain"))?, "k")?;
    let chain = (0..k)
        .map(|_| CurveClass::new(int_row(it.next().ok_or_else(|| parse_err("chain ended early"))?)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(chain)
}

pub fn format_chain(chain: &[CurveClass]) -> String {
    let mut out = format!("k={}\n", chain.len());
    for c in chain {
        let v: Vec<String> = c.coords().iter().map(ToString::to_string).collect();
        out.push_str(&v.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_hom(s: &str) -> Result<BraidHom> {
    let mut it = lines(s);
    let header = it.next().ok_or_else(|| parse_err("empty homomorphism"))?;
    let mut h = header.split_whitespace();
    let n: usize = keyed(h.next().ok_or_else(|| parse_err("missing n="))?, "n")?;
    let m: usize = keyed(h.next().ok_or_else(|| parse_err("missing m="))?, "m")?;
    let mut images: Vec<Option<BraidWord>> = vec![None; n.saturating_sub(1)];
    for line in it {
        let (i, word) = line
            .split_once(':')
            .ok_or_else(|| parse_err(format!("expected `<i> : <word>`, got `{line}`")))?;
        let i: usize = num(i)?;
        let slot = images
            .get_mut(i.wrapping_sub(1))
            .ok_or_else(|| parse_err(format!("generator {i} out of range")))?;
        *slot = Some(parse_word(m, word)?);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, w)| w.ok_or_else(|| parse_err(format!("no image for generator {}", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    BraidHom::unverified(n, m, images)
}

pub fn parse_params(s: &str) -> Result<LnParams> {
    let v: Vec<u64> = s.split_whitespace().map(num).collect::<Result<_>>()?;
    match v.as_slice() {
        &[r, big_m, m, d, s] => Ok(LnParams::new(r as usize, big_m, m, d, s)),
        _ => Err(parse_err("expected `r M m d s`")),
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| parse_err(format!("bad cycles `{s}`")))?;
        let close = open.find(')').ok_or_else(|| parse_err(format!("unclosed cycle in `{s}`")))?;
        let body: Vec<usize> = open[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(num)
            .collect::<Result<_>>()?;
        if !body.is_empty() {
            out.push(body);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(out)
}

/// Symbols `1..=k`; unlisted points are fixed.
pub fn parse_perm(s: &str, k: usize) -> Result<Perm> {
    if s.contains("->") {
        let mut img: Vec<u8> = (0..k as u8).collect();
        for tok in s.split_whitespace() {
            let (a, b) = tok.split_once("->").ok_or_else(|| parse_err(format!("bad map `{tok}`")))?;
            let (a, b): (usize, usize) = (num(a)?, num(b)?);
            if a == 0 || a > k || b == 0 || b > k {
                return Err(parse_err(format!("`{tok}` outside 1..{k}")));
            }
            img[a - 1] = (b - 1) as u8;
        }
        return Perm::from_images(img);
    }
    Perm::from_cycles(k, &parse_cycles(s)?)
}

/// Cycles over `0..n`, unlisted points fixed.
fn parse_index_perm(s: &str, n: usize) -> Result<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    for cycle in parse_cycles(s)? {
        for (i, &a) in cycle.iter().enumerate() {
            if a >= n || used[a] {
                return Err(parse_err(format!("bad symbol {a} in `{s}`")));
            }
            used[a] = true;
            p[a] = cycle[(i + 1) % cycle.len()];
        }
    }
    Ok(p)
}

fn format_index_perm(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x.to_string());
            x = p[x];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

pub fn parse_graph(s: &str) -> Result<ActionGraph> {
    let mut it = lines(s);
    let vertices: usize = keyed(it.next().ok_or_else(|| parse_err("empty graph"))?, "vertices")?;
    let mut edges = Vec::new();
    let mut labels = vec![None; vertices];
    let mut action = None;
    for line in it {
        if let Some(rest) = line.strip_prefix("label") {
            let v: Vec<usize> = rest.split_whitespace().map(num).collect::<Result<_>>()?;
            let &[vertex, genus, boundary] = v.as_slice() else {
                return Err(parse_err(format!("expected `label v genus b`, got `{line}`")));
            };
            *labels
                .get_mut(vertex)
                .ok_or_else(|| parse_err(format!("label for missing vertex {vertex}")))? = Some(VertexLabel {
                genus: genus as u32,
                boundary: boundary as u32,
            });
        } else if let Some(rest) = line.strip_prefix("vperm=") {
            let (v, e) = rest
                .split_once("eperm=")
                .ok_or_else(|| parse_err("action line needs `eperm=`"))?;
            action = Some((v.to_string(), e.to_string()));
        } else {
            let v: Vec<usize> = line.split_whitespace().map(num).collect::<Result<_>>()?;
            let &[a, b] = v.as_slice() else {
                return Err(parse_err(format!("expected an edge `u v`, got `{line}`")));
            };
            edges.push((a, b));
        }
    }
    let (v, e) = action.ok_or_else(|| parse_err("missing action line"))?;
    let vperm = parse_index_perm(&v, vertices)?;
    let eperm = parse_index_perm(&e, edges.len())?;
    let mut g = ActionGraph::new(vertices, edges, vperm, eperm)?;
    g.labels = labels;
    Ok(g)
}

pub fn format_graph(g: &ActionGraph) -> String {
    let mut out = format!("vertices={}\n", g.vertices);
    for &(u, v) in &g.edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    for (v, l) in g.labels.iter().enumerate() {
        if let Some(l) = l {
            out.push_str(&format!("label {v} {} {}\n", l.genus, l.boundary));
        }
    }
    out.push_str(&format!(
        "vperm={} eperm={}\n",
        format_index_perm(&g.vperm),
        format_index_perm(&g.eperm)
    ));
    out
}

pub fn parse_ramification(s: &str) -> Result<RamificationData> {
    let mut chi = None;
    let mut m = None;
    let mut branch = None;
    let mut chiq = None;
    for tok in s.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| parse_err(format!("bad field `{tok}`")))?;
        match k {
            "chi" => chi = Some(num(v)?),
            "m" => m = Some(num(v)?),
            "branch" => branch = Some(comma_list(v)?),
            "chiq" => chiq = Some(num(v)?),
            _ => return Err(parse_err(format!("unknown field `{k}`"))),
        }
    }
    Ok(RamificationData {
        chi_total: chi.ok_or_else(|| parse_err("missing chi="))?,
        m: m.ok_or_else(|| parse_err("missing m="))?,
        branch: branch.unwrap_or_default(),
        chi_quotient: chiq.ok_or_else(|| parse_err("missing chiq="))?,
    })
}
