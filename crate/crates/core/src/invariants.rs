//! Graph invariants and spectral bounds: arboricity, pseudoarboricity,
//! independence number, the residual independence number `beta(G, k)`,
//! adjacency spectra, and the bound confrontation that certifies a regular
//! triangle-free graph joined to a large clique is not a monoid graph.
//!
//! `beta(G, k)` is the largest independence number of `G` minus the edges
//! chosen by `k` maps `f: V -> E` with `v ∈ f(v)`.

use std::collections::HashSet;
use std::fmt;

use nalgebra::DMatrix;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{Digraph, SimpleGraph};
use crate::par;

pub type Rational = Ratio<i128>;

/// Order cap for subset-enumeration formulas.
pub const SUBSET_CAP: usize = 20;
/// Order cap for the independence number branch and bound.
pub const INDEPENDENCE_CAP: usize = 64;
/// Default budget for the beta scan, counted in per-vertex edge selections.
pub const BETA_BUDGET: u128 = 10_000_000;
/// Tolerance for classifying eigenvalues as `±d`.
pub const EIGEN_TOLERANCE: f64 = 1e-8;
/// Granularity at which lambda is rounded up before exact comparisons.
pub const LAMBDA_GRANULARITY: i128 = 100_000_000;

fn induced_edge_counts(g: &SimpleGraph) -> Result<impl Iterator<Item = (u32, u32)>> {
    let n = g.order();
    if n > SUBSET_CAP {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: SUBSET_CAP,
        });
    }
    let masks = g.adjacency_masks();
    Ok((1u64..(1u64 << n)).map(move |s| {
        let twice: u32 = (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .map(|v| (masks[v] & s).count_ones())
            .sum();
        (s.count_ones(), twice / 2)
    }))
}

/// Nash-Williams formula `max ceil(|E(G[S])| / (|S| - 1))` over `|S| >= 2`.
pub fn arboricity(g: &SimpleGraph) -> Result<usize> {
    if g.order() < 2 {
        return Err(Error::InvalidParameters("order must be at least 2".into()));
    }
    Ok(induced_edge_counts(g)?
        .filter(|&(size, _)| size >= 2)
        .map(|(size, edges)| edges.div_ceil(size - 1) as usize)
        .max()
        .unwrap_or(0))
}

/// Subset formula `max ceil(|E(G[S])| / |S|)`; used to cross-check the flow route.
pub fn pseudoarboricity_by_subsets(g: &SimpleGraph) -> Result<usize> {
    Ok(induced_edge_counts(g)?
        .map(|(size, edges)| edges.div_ceil(size) as usize)
        .max()
        .unwrap_or(0))
}

/// A vertex set inducing more than `k * |S|` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityCertificate {
    pub subset: Vec<usize>,
    pub induced_edges: usize,
    pub k: usize,
}

/// Orientation with every outdegree at most `k`, or a dense subset proving
/// that none exists. Edge `{u, v}` becomes the arc `(u, v)` when it is charged
/// to `u` by the flow.
pub fn orientation_with_outdegree(
    g: &SimpleGraph,
    k: usize,
) -> std::result::Result<Digraph, DensityCertificate> {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    let (source, sink) = (0, m + n + 1);
    let vnode = |v: usize| 1 + m + v;
    let mut net = FlowNetwork::new(m + n + 2);
    let mut charge = Vec::with_capacity(m);
    for (i, &(u, v)) in edges.iter().enumerate() {
        net.add_edge(source, 1 + i, 1);
        let to_u = net.add_edge(1 + i, vnode(u), 1);
        net.add_edge(1 + i, vnode(v), 1);
        charge.push(to_u);
    }
    for v in 0..n {
        net.add_edge(vnode(v), sink, k as i64);
    }
    let flow = net.max_flow(source, sink, m as i64);
    if flow as usize == m {
        let arcs = edges
            .iter()
            .zip(&charge)
            .map(|(&(u, v), &id)| if net.flow(id) == 1 { (u, v) } else { (v, u) });
        return Ok(Digraph::from_arcs(n, arcs).expect("in range"));
    }
    let reach = net.residual_reachable(source);
    let subset: Vec<usize> = (0..n).filter(|&v| reach[vnode(v)]).collect();
    let induced_edges = edges
        .iter()
        .filter(|&&(u, v)| reach[vnode(u)] && reach[vnode(v)])
        .count();
    Err(DensityCertificate {
        subset,
        induced_edges,
        k,
    })
}

/// Least `k` admitting an orientation with maximum outdegree `k`.
pub fn pseudoarboricity(g: &SimpleGraph) -> usize {
    let (m, n) = (g.edge_count(), g.order().max(1));
    let mut k = m.div_ceil(n);
    while orientation_with_outdegree(g, k).is_err() {
        k += 1;
    }
    k
}

/// Exact independence number by branch and bound on bitmasks.
pub fn independence_number(g: &SimpleGraph) -> Result<usize> {
    let n = g.order();
    if n > INDEPENDENCE_CAP {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: INDEPENDENCE_CAP,
        });
    }
    let masks = g.adjacency_masks();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(mis(&masks, all, 0, 0) as usize)
}

fn mis(adj: &[u64], mut cand: u64, mut size: u32, mut best: u32) -> u32 {
    // vertices of residual degree <= 1 can always be taken
    loop {
        let mut changed = false;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & cand).count_ones() <= 1 {
                cand &= !(adj[v] | (1 << v));
                size += 1;
                changed = true;
                rest &= cand;
            }
        }
        if !changed {
            break;
        }
    }
    if cand == 0 {
        return best.max(size);
    }
    if size + cand.count_ones() <= best {
        return best;
    }
    let mut pick = 0;
    let mut deg = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d > deg {
            deg = d;
            pick = v;
        }
    }
    best = mis(adj, cand & !(adj[pick] | (1 << pick)), size + 1, best);
    mis(adj, cand & !(1 << pick), size, best)
}

fn choose(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of per-vertex edge selections scanned by [`beta`].
pub fn beta_work(g: &SimpleGraph, k: usize) -> u128 {
    (0..g.order())
        .map(|v| {
            let d = g.degree(v) as u128;
            choose(d, d.min(k as u128))
        })
        .fold(1u128, |acc, x| acc.saturating_mul(x))
}

/// `beta(G, k)`, exact. Since removing more edges never lowers the
/// independence number, it suffices to let every vertex select exactly
/// `min(k, deg v)` distinct incident edges.
pub fn beta(g: &SimpleGraph, k: usize) -> Result<usize> {
    beta_with_budget(g, k, BETA_BUDGET)
}

pub fn beta_with_budget(g: &SimpleGraph, k: usize, budget: u128) -> Result<usize> {
    let n = g.order();
    if n > INDEPENDENCE_CAP {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: INDEPENDENCE_CAP,
        });
    }
    if k == 0 {
        return independence_number(g);
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() > 128 {
        return Err(Error::InvalidParameters("more than 128 edges".into()));
    }
    if beta_work(g, k) > budget {
        return Err(Error::BudgetExceeded(format!("{budget} edge selections")));
    }
    let incident: Vec<Vec<u128>> = (0..n)
        .map(|v| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == v || b == v)
                .map(|(i, _)| 1u128 << i)
                .collect()
        })
        .collect();
    let options: Vec<Vec<u128>> = incident
        .iter()
        .map(|inc| subsets_of_size(inc, k.min(inc.len())))
        .collect();

    // distinct unions of selected edges
    let mut unions: HashSet<u128> = HashSet::new();
    let mut idx = vec![0usize; n];
    loop {
        let u = (0..n).fold(0u128, |acc, v| acc | options[v][idx[v]]);
        unions.insert(u);
        let mut pos = 0;
        while pos < n {
            idx[pos] += 1;
            if idx[pos] < options[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }
    let unions: Vec<u128> = unions.into_iter().collect();
    let residual_alpha = |removed: &u128| {
        let mut masks = vec![0u64; n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            if removed >> i & 1 == 0 {
                masks[a] |= 1 << b;
                masks[b] |= 1 << a;
            }
        }
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        mis(&masks, all, 0, 0) as usize
    };
    Ok(par::max_map(&unions, residual_alpha).unwrap_or(0))
}

fn subsets_of_size(items: &[u128], size: usize) -> Vec<u128> {
    let mut out = Vec::new();
    fn rec(items: &[u128], size: usize, start: usize, acc: u128, out: &mut Vec<u128>) {
        if size == 0 {
            out.push(acc);
            return;
        }
        for i in start..items.len() {
            rec(items, size - 1, i + 1, acc | items[i], out);
        }
    }
    rec(items, size, 0, 0, &mut out);
    out
}

/// Adjacency spectrum; `lambda` is set only for regular graphs.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralProfile {
    pub n: usize,
    pub d: Option<usize>,
    /// Eigenvalues in non-increasing order, with multiplicity.
    pub eigenvalues: Vec<f64>,
    /// Largest `|mu|` once one copy of `d` and one of `-d` are set aside.
    pub lambda: Option<f64>,
    /// Largest `|mu|` once only one copy of `d` is set aside. The mixing
    /// lemma and both bounds need this one: they fail for bipartite graphs
    /// with `lambda` (C4 has `lambda = 0` but independence number 2).
    pub mixing_lambda: Option<f64>,
}

pub const SPECTRUM_CAP: usize = 2000;

pub fn spectrum(g: &SimpleGraph) -> Result<SpectralProfile> {
    let n = g.order();
    if n > SPECTRUM_CAP {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: SPECTRUM_CAP,
        });
    }
    let mut a = DMatrix::<f64>::zeros(n, n);
    for (u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    let mut eigenvalues: Vec<f64> = a.symmetric_eigenvalues().iter().copied().collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    let d = g.regular_degree();
    let without = |targets: &[f64]| -> f64 {
        // a repeated d (disconnected) or repeated -d stays in
        let mut rest = eigenvalues.clone();
        for &target in targets {
            if let Some(i) = rest
                .iter()
                .position(|&mu| (mu - target).abs() <= EIGEN_TOLERANCE)
            {
                rest.remove(i);
            }
        }
        rest.iter().map(|mu| mu.abs()).fold(0.0, f64::max)
    };
    let lambda = d.map(|d| without(&[d as f64, -(d as f64)]));
    let mixing_lambda = d.map(|d| without(&[d as f64]));
    Ok(SpectralProfile {
        n,
        d,
        eigenvalues,
        lambda,
        mixing_lambda,
    })
}

/// Both sides of the expander mixing inequality for vertex sets `s`, `t`:
/// `(|e(S,T) - d|S||T|/n|, lambda * sqrt(|S||T|(1-|S|/n)(1-|T|/n)))`, where
/// `e(S,T)` counts ordered pairs `(u, v)` with `u ∈ S`, `v ∈ T` adjacent.
pub fn mixing_check(
    g: &SimpleGraph,
    p: &SpectralProfile,
    s: &[usize],
    t: &[usize],
) -> Result<(f64, f64)> {
    let (Some(d), Some(lambda)) = (p.d, p.mixing_lambda) else {
        return Err(Error::NotRegular);
    };
    let n = p.n as f64;
    let mut in_t = vec![false; g.order()];
    for &v in t {
        in_t[v] = true;
    }
    let e_st: usize = s
        .iter()
        .map(|&u| g.neighbors(u).iter().filter(|&&v| in_t[v]).count())
        .sum();
    let (ss, ts) = (s.len() as f64, t.len() as f64);
    let lhs = (e_st as f64 - d as f64 * ss * ts / n).abs();
    let rhs = lambda * (ss * ts * (1.0 - ss / n) * (1.0 - ts / n)).max(0.0).sqrt();
    Ok((lhs, rhs))
}

/// `lambda` rounded up to a multiple of `1 / LAMBDA_GRANULARITY`.
pub fn lambda_upper(lambda: f64) -> Rational {
    let scaled = (lambda * LAMBDA_GRANULARITY as f64).ceil() as i128;
    Rational::new(scaled, LAMBDA_GRANULARITY)
}

fn regular_parts(p: &SpectralProfile) -> Result<(i128, i128, Rational)> {
    match (p.d, p.mixing_lambda) {
        (Some(d), Some(lambda)) => Ok((p.n as i128, d as i128, lambda_upper(lambda))),
        _ => Err(Error::NotRegular),
    }
}

/// Upper bound `(n/d)(lambda + 2k)` on `beta(G, k)` for an `(n, d, lambda)`-graph.
pub fn beta_upper_bound(p: &SpectralProfile, k: usize) -> Result<Rational> {
    let (n, d, lambda) = regular_parts(p)?;
    if d < 1 {
        return Err(Error::InvalidParameters("degree must be at least 1".into()));
    }
    Ok(upper_from_parts(n, d, lambda, k))
}

fn upper_from_parts(n: i128, d: i128, lambda: Rational, k: usize) -> Rational {
    Rational::new(n, d) * (lambda + Rational::from_integer(2 * k as i128))
}

/// Lower bound `(n/(Delta-1))(delta/2 - k - 1)` on `beta(G, k)` that holds when a
/// triangle-free `G` joined to a large clique by `k` edges is a monoid graph.
pub fn beta_lower_bound(n: usize, delta: usize, max_degree: usize, k: usize) -> Result<Rational> {
    if max_degree < 2 {
        return Err(Error::InvalidParameters(
            "maximum degree must be at least 2".into(),
        ));
    }
    Ok(Rational::new(n as i128, max_degree as i128 - 1)
        * (Rational::new(delta as i128, 2) - Rational::from_integer(k as i128 + 1)))
}

/// Largest integer `k` with `k < (d - lambda)^2 / d + 1`; every such `k`-value
/// is a guaranteed connectivity.
pub fn connectivity_bound(p: &SpectralProfile) -> Result<usize> {
    let (_, d, lambda) = regular_parts(p)?;
    if d < 1 {
        return Err(Error::InvalidParameters("degree must be at least 1".into()));
    }
    let d_r = Rational::from_integer(d);
    let gap = d_r - lambda.min(d_r);
    let x = gap * gap / d_r + Rational::from_integer(1);
    let below = if x.is_integer() {
        x.to_integer() - 1
    } else {
        x.floor().to_integer()
    };
    Ok(below.max(0) as usize)
}

/// `d - 4 sqrt(d) - 6k - 2`: positive values mean the two beta bounds collide
/// for `(n, d, 2 sqrt(d - 1))`-graphs.
pub fn bound_gap(d: f64, k: usize) -> f64 {
    d - 4.0 * d.sqrt() - 6.0 * k as f64 - 2.0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateVerdict {
    /// The lower bound exceeds the upper bound: `G` joined to `K_ell` by `k`
    /// edges is not a monoid graph.
    NotMonoid,
    /// All hypotheses hold but the bounds do not collide.
    Inconclusive,
    /// Some hypothesis fails; see the list.
    HypothesisViolated,
}

/// Structured record of the bound confrontation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonmonoidCertificate {
    pub n: usize,
    pub d: usize,
    pub lambda_upper: Rational,
    pub k: usize,
    pub ell: usize,
    pub hypotheses: Vec<(&'static str, bool)>,
    pub lower_bound: Option<Rational>,
    pub upper_bound: Option<Rational>,
    pub verdict: CertificateVerdict,
}

impl fmt::Display for NonmonoidCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        writeln!(f, "d {}", self.d)?;
        writeln!(f, "lambda_upper {}", self.lambda_upper)?;
        writeln!(f, "k {}", self.k)?;
        writeln!(f, "ell {}", self.ell)?;
        for (name, ok) in &self.hypotheses {
            writeln!(f, "hypothesis.{name} {ok}")?;
        }
        let show = |r: &Option<Rational>| match r {
            Some(r) => format!("{r} ({:.6})", ratio_to_f64(r)),
            None => "-".into(),
        };
        writeln!(f, "beta_lower_bound {}", show(&self.lower_bound))?;
        writeln!(f, "beta_upper_bound {}", show(&self.upper_bound))?;
        let verdict = match self.verdict {
            CertificateVerdict::NotMonoid => "not-monoid",
            CertificateVerdict::Inconclusive => "inconclusive",
            CertificateVerdict::HypothesisViolated => "hypothesis-violated",
        };
        writeln!(f, "verdict {verdict}")
    }
}

pub fn ratio_to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Confront the two beta bounds for a regular triangle-free graph `g`.
pub fn nonmonoid_certificate(
    g: &SimpleGraph,
    k: usize,
    ell: usize,
) -> Result<NonmonoidCertificate> {
    let p = spectrum(g)?;
    let d = p.d.unwrap_or(g.max_degree());
    let lambda = p.mixing_lambda.unwrap_or(f64::NAN);
    let mut cert = certificate_from_parts(g.order(), d, lambda, k, ell, g.is_triangle_free());
    cert.hypotheses.insert(0, ("regular", p.d.is_some()));
    if p.d.is_none() {
        cert.verdict = CertificateVerdict::HypothesisViolated;
        cert.lower_bound = None;
        cert.upper_bound = None;
    }
    Ok(cert)
}

/// The same confrontation for a synthetic `(n, d, lambda)` profile.
pub fn certificate_from_parts(
    n: usize,
    d: usize,
    lambda: f64,
    k: usize,
    ell: usize,
    triangle_free: bool,
) -> NonmonoidCertificate {
    let lambda_up = if lambda.is_finite() {
        lambda_upper(lambda)
    } else {
        Rational::from_integer(d as i128)
    };
    let hypotheses = vec![
        ("triangle_free", triangle_free),
        ("max_degree_at_least_2", d >= 2),
        ("clique_large_enough", ell > 2 * d + 2 * k + 1),
    ];
    let ok = hypotheses.iter().all(|&(_, b)| b);
    let (lower, upper) = if d >= 2 {
        (
            beta_lower_bound(n, d, d, k).ok(),
            Some(upper_from_parts(n as i128, d as i128, lambda_up, k)),
        )
    } else {
        (None, None)
    };
    let verdict = match (ok, &lower, &upper) {
        (false, _, _) => CertificateVerdict::HypothesisViolated,
        (true, Some(lo), Some(up)) if lo > up => CertificateVerdict::NotMonoid,
        _ => CertificateVerdict::Inconclusive,
    };
    NonmonoidCertificate {
        n,
        d,
        lambda_upper: lambda_up,
        k,
        ell,
        hypotheses,
        lower_bound: lower,
        upper_bound: upper,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_c5() -> SimpleGraph {
        SimpleGraph::complete(4).disjoint_union(&SimpleGraph::cycle(5))
    }

    #[test]
    fn arboricity_examples() {
        assert_eq!(arboricity(&SimpleGraph::path(6)).unwrap(), 1);
        assert_eq!(arboricity(&SimpleGraph::star(4)).unwrap(), 1);
        assert_eq!(arboricity(&SimpleGraph::complete(4)).unwrap(), 2);
        assert_eq!(arboricity(&k4_c5()).unwrap(), 2);
        assert!(arboricity(&SimpleGraph::new(21)).is_err());
    }

    #[test]
    fn pseudoarboricity_examples() {
        assert_eq!(pseudoarboricity(&SimpleGraph::cycle(5)), 1);
        assert_eq!(pseudoarboricity(&SimpleGraph::complete(4)), 2);
        assert_eq!(pseudoarboricity(&SimpleGraph::complete(5)), 2);
        assert_eq!(pseudoarboricity(&SimpleGraph::new(3)), 0);
        for g in [
            SimpleGraph::complete(4),
            SimpleGraph::complete(5),
            SimpleGraph::petersen(),
        ] {
            assert_eq!(
                pseudoarboricity(&g),
                pseudoarboricity_by_subsets(&g).unwrap()
            );
        }
    }

    #[test]
    fn orientation_examples() {
        let o = orientation_with_outdegree(&SimpleGraph::cycle(5), 1).unwrap();
        assert_eq!(o.max_outdegree(), 1);
        let cert = orientation_with_outdegree(&SimpleGraph::complete(4), 1).unwrap_err();
        assert_eq!(cert.subset, vec![0, 1, 2, 3]);
        assert!(cert.induced_edges > cert.k * cert.subset.len());
        let o = orientation_with_outdegree(&SimpleGraph::complete(4), 2).unwrap();
        assert!(o.max_outdegree() <= 2);
        assert_eq!(o.arc_count(), 6);
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&SimpleGraph::cycle(5)).unwrap(), 2);
        assert_eq!(independence_number(&SimpleGraph::petersen()).unwrap(), 4);
        assert_eq!(independence_number(&SimpleGraph::new(7)).unwrap(), 7);
        assert_eq!(independence_number(&SimpleGraph::complete(6)).unwrap(), 1);
    }

    #[test]
    fn spectrum_examples() {
        let p = spectrum(&SimpleGraph::cycle(4)).unwrap();
        let expect = [2.0, 0.0, 0.0, -2.0];
        for (a, b) in p.eigenvalues.iter().zip(expect) {
            assert!((a - b).abs() < 1e-9);
        }
        assert!(p.lambda.unwrap().abs() < 1e-9);
        assert!((p.mixing_lambda.unwrap() - 2.0).abs() < 1e-9);
        assert_eq!(
            beta_upper_bound(&p, 0).unwrap(),
            Rational::new(400_000_000, 100_000_000)
        );

        let p = spectrum(&SimpleGraph::petersen()).unwrap();
        assert_eq!(p.d, Some(3));
        assert!((p.lambda.unwrap() - 2.0).abs() < 1e-9);

        let p = spectrum(&SimpleGraph::complete(6)).unwrap();
        assert!((p.eigenvalues[0] - 5.0).abs() < 1e-9);
        assert!(p.eigenvalues[1..].iter().all(|&x| (x + 1.0).abs() < 1e-9));
        assert!((p.lambda.unwrap() - 1.0).abs() < 1e-9);

        let star = spectrum(&SimpleGraph::star(3)).unwrap();
        assert_eq!(star.lambda, None);

        // two copies of K4: the second eigenvalue 3 is not trivial
        let two = SimpleGraph::complete(4).disjoint_union(&SimpleGraph::complete(4));
        let p = spectrum(&two).unwrap();
        assert!((p.lambda.unwrap() - 3.0).abs() < 1e-9);
        assert_eq!(connectivity_bound(&p).unwrap(), 0);
    }

    #[test]
    fn bound_examples() {
        let pet = spectrum(&SimpleGraph::petersen()).unwrap();
        let up = beta_upper_bound(&pet, 0).unwrap();
        assert!((ratio_to_f64(&up) - 20.0 / 3.0).abs() < 1e-6);
        assert_eq!(beta_lower_bound(10, 3, 3, 0).unwrap(), Rational::new(5, 2));
        assert!(beta_lower_bound(10, 3, 3, 5).unwrap() <= Rational::from_integer(0));
        assert!(beta_lower_bound(10, 1, 1, 0).is_err());
        assert_eq!(connectivity_bound(&pet).unwrap(), 1);
        let k8 = spectrum(&SimpleGraph::complete(8)).unwrap();
        // (7 - 1)^2 / 7 + 1 = 43/7
        assert_eq!(connectivity_bound(&k8).unwrap(), 6);
    }

    #[test]
    fn certificates() {
        let c = nonmonoid_certificate(&SimpleGraph::petersen(), 0, 8).unwrap();
        assert_eq!(c.verdict, CertificateVerdict::Inconclusive);
        let c = nonmonoid_certificate(&SimpleGraph::complete(4), 0, 20).unwrap();
        assert_eq!(c.verdict, CertificateVerdict::HypothesisViolated);
        assert!(c.hypotheses.contains(&("triangle_free", false)));
        let c = certificate_from_parts(1000, 64, 2.0 * 63f64.sqrt(), 0, 200, true);
        assert_eq!(c.verdict, CertificateVerdict::NotMonoid);
        let c = certificate_from_parts(1000, 64, 2.0 * 63f64.sqrt(), 0, 100, true);
        assert_eq!(c.verdict, CertificateVerdict::HypothesisViolated);
    }
}
