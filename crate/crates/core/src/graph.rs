//! Connected multigraphs carrying a cyclic action that is transitive on
//! edges: the two families, an exhaustive enumerator to check them against,
//! and the genus bookkeeping for curve systems realizing them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabel {
    pub genus: u32,
    pub boundary: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub labels: Vec<Option<VertexLabel>>,
    pub vperm: Vec<usize>,
    pub eperm: Vec<usize>,
}

/// `A(k, p, d)`: `k` vertices permuted cyclically, edge `a_i` joins
/// `P_{i mod k}` and `P_{(i+p) mod k}`.
/// `B(k, ℓ, d)`: orbits of sizes `k` and `ℓ`, edge `a_i` joins
/// `P_{i mod k}` and `Q_{i mod ℓ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    TypeA { k: usize, p: usize, d: usize },
    TypeB { k: usize, l: usize, d: usize },
}

impl GraphClass {
    /// Representative up to reversing the step or swapping the orbits.
    pub fn normalized(&self) -> GraphClass {
        match *self {
            GraphClass::TypeA { k, p, d } if k >= 3 => GraphClass::TypeA { k, p: p.min(k - p), d },
            GraphClass::TypeB { k, l, d } if k > l => GraphClass::TypeB { k: l, l: k, d },
            c => c,
        }
    }

    pub fn validate(&self, m: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            GraphClass::TypeA { k, p, d } => {
                if k == 0 || m == 0 {
                    return bad("empty graph".into());
                }
                if k <= 2 {
                    if p != 1 || d != m {
                        return bad(format!("A(k={k}) needs p = 1 and d = m"));
                    }
                } else if p == 0 || p >= k || k.gcd(&p) != 1 || !m.is_multiple_of(k) || d != m / k {
                    return bad(format!("A({k},{p},{d}) is not valid for m={m}"));
                }
            }
            GraphClass::TypeB { k, l, d } => {
                if k == 0 || l == 0 || k.gcd(&l) != 1 || k * l * d != m {
                    return bad(format!("B({k},{l},{d}) is not valid for m={m}"));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::TypeA { k, p, d } => write!(f, "A k={k} p={p} d={d}"),
            GraphClass::TypeB { k, l, d } => write!(f, "B k={k} l={l} d={d}"),
        }
    }
}

impl ActionGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>, vperm: Vec<usize>, eperm: Vec<usize>) -> Result<Self> {
        let g = ActionGraph {
            vertices,
            labels: vec![None; vertices],
            edges,
            vperm,
            eperm,
        };
        g.check_automorphism()?;
        Ok(g)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn check_automorphism(&self) -> Result<()> {
        let is_perm = |p: &[usize], n: usize| {
            p.len() == n && p.iter().copied().collect::<BTreeSet<_>>() == (0..n).collect()
        };
        if !is_perm(&self.vperm, self.vertices) || !is_perm(&self.eperm, self.edges.len()) {
            return Err(Error::InvalidParameter("action is not a pair of permutations".into()));
        }
        if self.labels.len() != self.vertices {
            return Err(Error::DimensionMismatch("vertex labels".into()));
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u >= self.vertices || v >= self.vertices {
                return Err(Error::InvalidParameter(format!("edge {i} leaves the vertex set")));
            }
            let image = sorted_pair(self.vperm[u], self.vperm[v]);
            let (a, b) = self.edges[self.eperm[i]];
            if image != sorted_pair(a, b) {
                return Err(Error::InvalidParameter(format!("action does not carry edge {i} to an edge")));
            }
        }
        Ok(())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); self.vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertices];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `Σ_v (2 - 2 genus_v - deg_v - boundary_v)`, once every vertex is labelled.
    pub fn euler_sum(&self) -> Option<i64> {
        let deg = self.degrees();
        self.labels
            .iter()
            .zip(deg)
            .map(|(l, d)| l.map(|l| 2 - 2 * l.genus as i64 - d as i64 - l.boundary as i64))
            .sum()
    }

    /// Lexicographically least encoding over generator powers coprime to the
    /// group order, starting edges and orientations. Two graphs with actions
    /// are isomorphic, up to the choice of generator, iff these agree.
    pub fn canonical_form(&self) -> Vec<usize> {
        let order = perm_order(&self.vperm).lcm(&perm_order(&self.eperm));
        let m = self.edges.len();
        let mut best: Option<Vec<usize>> = None;
        for t in (1..=order).filter(|t| t.gcd(&order) == 1) {
            let hv = perm_power(&self.vperm, t);
            let he = perm_power(&self.eperm, t);
            for e0 in 0..m {
                for flip in [false, true] {
                    let (mut u, mut v) = self.edges[e0];
                    if flip {
                        std::mem::swap(&mut u, &mut v);
                    }
                    let mut label: BTreeMap<usize, usize> = BTreeMap::new();
                    let mut code = vec![self.vertices, m];
                    let mut e = e0;
                    for _ in 0..m {
                        for x in [u, v] {
                            let next = label.len();
                            code.push(*label.entry(x).or_insert(next));
                        }
                        u = hv[u];
                        v = hv[v];
                        e = he[e];
                    }
                    debug_assert_eq!(e, e0);
                    let by_label: BTreeMap<usize, usize> = label.iter().map(|(&x, &l)| (l, x)).collect();
                    for x in by_label.values() {
                        code.push(*label.get(&hv[*x]).unwrap_or(&usize::MAX));
                    }
                    if best.as_ref().is_none_or(|b| code < *b) {
                        best = Some(code);
                    }
                }
            }
        }
        best.unwrap_or_else(|| vec![self.vertices, 0])
    }
}

fn sorted_pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn perm_order(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut order = 1usize;
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            order = order.lcm(&len);
        }
    }
    order
}

fn perm_power(p: &[usize], t: usize) -> Vec<usize> {
    (0..p.len())
        .map(|mut x| {
            for _ in 0..t {
                x = p[x];
            }
            x
        })
        .collect()
}

fn orbit_of(p: &[usize], start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let mut x = p[start];
    while x != start {
        out.push(x);
        x = p[x];
    }
    out
}

/// Which family the graph with its action belongs to, read off with the
/// given generator and with edge `0` as `a_0`.
pub fn classify(g: &ActionGraph) -> Result<GraphClass> {
    g.check_automorphism()?;
    let m = g.edges.len();
    if m == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if orbit_of(&g.eperm, 0).len() != m {
        return Err(Error::NotEdgeTransitive);
    }
    let (u, v) = g.edges[0];
    let ou = orbit_of(&g.vperm, u);
    if ou.contains(&v) {
        let k = ou.len();
        let p = ou.iter().position(|&x| x == v).expect("v in orbit");
        let class = if k <= 2 {
            GraphClass::TypeA { k, p: 1, d: m }
        } else {
            GraphClass::TypeA { k, p, d: m / k }
        };
        class.validate(m).map_err(|e| Error::HypothesisViolated(e.to_string()))?;
        return Ok(class);
    }
    let ov = orbit_of(&g.vperm, v);
    // P is the orbit holding the lower-numbered endpoint.
    let (p_orbit, q_orbit) = if u <= v { (ou, ov) } else { (ov, ou) };
    let (k, l) = (p_orbit.len(), q_orbit.len());
    if k + l != g.vertices || !m.is_multiple_of(k * l) {
        return Err(Error::HypothesisViolated("vertex orbits do not fit either family".into()));
    }
    let class = GraphClass::TypeB { k, l, d: m / (k * l) };
    class.validate(m).map_err(|e| Error::HypothesisViolated(e.to_string()))?;
    Ok(class)
}

/// The template graph for `c` with `m` edges; the generator shifts every
/// index by one.
pub fn generate(c: &GraphClass, m: usize) -> Result<ActionGraph> {
    c.validate(m)?;
    let eperm: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    match *c {
        GraphClass::TypeA { k, p, .. } => {
            let edges = (0..m).map(|i| (i % k, (i + p) % k)).collect();
            let vperm = (0..k).map(|i| (i + 1) % k).collect();
            ActionGraph::new(k, edges, vperm, eperm)
        }
        GraphClass::TypeB { k, l, .. } => {
            let edges = (0..m).map(|i| (i % k, k + i % l)).collect();
            let vperm = (0..k).map(|i| (i + 1) % k).chain((0..l).map(|j| k + (j + 1) % l)).collect();
            ActionGraph::new(k + l, edges, vperm, eperm)
        }
    }
}

/// Every class valid for `m` edges, in both families.
pub fn all_classes(m: usize) -> Vec<GraphClass> {
    let mut out = Vec::new();
    for k in 1..=m.max(2) {
        if k <= 2 {
            let c = GraphClass::TypeA { k, p: 1, d: m };
            if c.validate(m).is_ok() {
                out.push(c);
            }
        } else {
            for p in 1..k {
                let c = GraphClass::TypeA { k, p, d: m / k.max(1) };
                if c.validate(m).is_ok() {
                    out.push(c);
                }
            }
        }
    }
    for k in 1..=m {
        for l in 1..=m {
            if m.is_multiple_of(k * l) {
                let c = GraphClass::TypeB { k, l, d: m / (k * l) };
                if c.validate(m).is_ok() {
                    out.push(c);
                }
            }
        }
    }
    out
}

pub const MAX_BRUTE_EDGES: usize = 8;

/// All connected graphs with `m` edges and an edge-transitive cyclic action,
/// one per isomorphism class, built without reference to the two families.
///
/// A generator `σ` on the vertices and an ordered pair `(u, v)` determine the
/// edges `a_i = {σ^i u, σ^i v}`; the cycle closes when `σ^m` preserves `{u, v}`.
pub fn brute_enumerate(m: usize) -> Result<Vec<ActionGraph>> {
    if m > MAX_BRUTE_EDGES {
        return Err(Error::OutOfDomain(format!("m = {m} exceeds {MAX_BRUTE_EDGES}")));
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    let mut found: BTreeMap<Vec<usize>, ActionGraph> = BTreeMap::new();
    for vcount in 1..=m + 1 {
        for parts in partitions(vcount) {
            let sigma = cycles_to_perm(&parts);
            for u in 0..vcount {
                for v in 0..vcount {
                    let sm = perm_power(&sigma, m);
                    if sorted_pair(sm[u], sm[v]) != sorted_pair(u, v) {
                        continue;
                    }
                    let mut edges = Vec::with_capacity(m);
                    let (mut a, mut b) = (u, v);
                    for _ in 0..m {
                        edges.push((a, b));
                        a = sigma[a];
                        b = sigma[b];
                    }
                    let eperm = (0..m).map(|i| (i + 1) % m).collect();
                    let Ok(g) = ActionGraph::new(vcount, edges, sigma.clone(), eperm) else {
                        continue;
                    };
                    if g.is_connected() {
                        found.entry(g.canonical_form()).or_insert(g);
                    }
                }
            }
        }
    }
    Ok(found.into_values().collect())
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn cycles_to_perm(parts: &[usize]) -> Vec<usize> {
    let mut perm = Vec::new();
    let mut start = 0;
    for &len in parts {
        perm.extend((0..len).map(|i| start + (i + 1) % len));
        start += len;
    }
    perm
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusAudit {
    pub class: GraphClass,
    pub edges: usize,
    pub cycles: i64,
    pub low_degree: usize,
    pub edge_bound: bool,
    pub cycle_bound: bool,
    pub equality_case: bool,
    pub equality_allowed: bool,
    pub feasible: bool,
}

impl fmt::Display for GenusAudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "class=({}) edges={} c={} h={} edge_bound={} cycle_bound={} equality_case={} equality_allowed={} feasible={}",
            self.class,
            self.edges,
            self.cycles,
            self.low_degree,
            self.edge_bound,
            self.cycle_bound,
            self.equality_case,
            self.equality_allowed,
            self.feasible
        )
    }
}

/// Bookkeeping for an invariant curve system with this dual graph on a
/// surface of the given genus with `b` boundary components: at most `2g`
/// curves, `g ≥ c + h` when closed, and `2g` curves only for the genus-6
/// closed configuration `B(3, 4, 1)`.
pub fn genus_audit(g: &ActionGraph, genus: usize, b: usize) -> Result<GenusAudit> {
    let m = g.edge_count();
    if m < 3 {
        return Err(Error::HypothesisViolated(format!("{m} curves, at least 3 required")));
    }
    let class = classify(g).map_err(|e| Error::HypothesisViolated(e.to_string()))?;
    let cycles = 1 + m as i64 - g.vertices as i64;
    let low_degree = g.degrees().into_iter().filter(|&d| d == 1 || d == 2).count();
    let edge_bound = m <= 2 * genus && (b == 0 || m < 2 * genus);
    let cycle_bound = if b == 0 {
        genus as i64 >= cycles + low_degree as i64
    } else {
        genus as i64 >= cycles
    };
    let equality_case = m == 2 * genus;
    let equality_allowed = genus == 6 && b == 0 && class.normalized() == GraphClass::TypeB { k: 3, l: 4, d: 1 };
    let feasible = edge_bound && cycle_bound && (!equality_case || equality_allowed);
    Ok(GenusAudit {
        class,
        edges: m,
        cycles,
        low_degree,
        edge_bound,
        cycle_bound,
        equality_case,
        equality_allowed,
        feasible,
    })
}
