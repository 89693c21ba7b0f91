//! Finite multiplication tables and the three Cayley graph constructions.
//!
//! Table text format: a header `n [identity|-]` followed by `n` rows of `n`
//! space-separated element indices, row `s` listing `s*0 .. s*(n-1)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{parse_field, ColoredMultiDigraph, Digraph, SimpleGraph};

/// A finite magma on `0..order`, optionally with a designated identity.
///
/// Associativity and the identity law are not checked at construction; use
/// [`validate_table`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MulTable {
    order: usize,
    product: Vec<usize>,
    identity: Option<usize>,
}

impl MulTable {
    /// Builds a table from row-major products. Fails on shape or range errors.
    pub fn new(order: usize, product: Vec<usize>, identity: Option<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("order must be positive".into()));
        }
        if product.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} products, found {}",
                order * order,
                product.len()
            )));
        }
        if let Some(&bad) = product.iter().find(|&&p| p >= order) {
            return Err(Error::InvalidTable(format!(
                "product {bad} out of range for order {order}"
            )));
        }
        if let Some(i) = identity {
            if i >= order {
                return Err(Error::InvalidTable(format!(
                    "identity {i} out of range for order {order}"
                )));
            }
        }
        Ok(MulTable {
            order,
            product,
            identity,
        })
    }

    pub fn from_fn(
        order: usize,
        identity: Option<usize>,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let product = (0..order)
            .flat_map(|a| (0..order).map(move |b| (a, b)))
            .map(|(a, b)| f(a, b))
            .collect();
        MulTable::new(order, product, identity)
    }

    pub fn trivial() -> Self {
        MulTable {
            order: 1,
            product: vec![0],
            identity: Some(0),
        }
    }

    /// The cyclic group of order `n` under addition, identity 0.
    pub fn cyclic_group(n: usize) -> Self {
        MulTable::from_fn(n, Some(0), |a, b| (a + b) % n).expect("valid shape")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.order + b]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.product[a * self.order..(a + 1) * self.order]
    }

    pub fn products(&self) -> &[usize] {
        &self.product
    }

    /// Restriction to the elements `keep`, relabelled in the given order.
    /// Fails if `keep` is not closed under the product.
    pub fn restrict(&self, keep: &[usize], identity: Option<usize>) -> Result<MulTable> {
        let mut index = vec![usize::MAX; self.order];
        for (i, &x) in keep.iter().enumerate() {
            index[x] = i;
        }
        let mut product = Vec::with_capacity(keep.len() * keep.len());
        for &a in keep {
            for &b in keep {
                let p = index[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::InvalidTable(format!(
                        "subset not closed: {a}*{b} = {}",
                        self.mul(a, b)
                    )));
                }
                product.push(p);
            }
        }
        MulTable::new(keep.len(), product, identity)
    }

    pub fn parse(text: &str) -> Result<MulTable> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `n [identity|-]`".into(),
        })?;
        let mut parts = header.split_whitespace();
        let n: usize = parse_field(parts.next(), hline, "order")?;
        let identity = match parts.next() {
            None | Some("-") => None,
            Some(tok) => Some(parse_field::<usize>(Some(tok), hline, "identity")?),
        };
        let mut product = Vec::with_capacity(n * n);
        for _ in 0..n {
            let (line, l) = lines.next().ok_or(Error::Parse {
                line: hline + n,
                message: "missing table row".into(),
            })?;
            let row: Vec<usize> = l
                .split_whitespace()
                .map(|t| parse_field(Some(t), line, "product"))
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {n} entries, found {}", row.len()),
                });
            }
            if let Some(bad) = row.iter().find(|&&p| p >= n) {
                return Err(Error::Parse {
                    line,
                    message: format!("product {bad} out of range"),
                });
            }
            product.extend(row);
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                message: "trailing content after table".into(),
            });
        }
        MulTable::new(n, product, identity).map_err(|e| Error::Parse {
            line: hline,
            message: e.to_string(),
        })
    }
}

impl fmt::Display for MulTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.identity {
            Some(i) => writeln!(f, "{} {i}", self.order)?,
            None => writeln!(f, "{} -", self.order)?,
        }
        for a in 0..self.order {
            let row: Vec<String> = self.row(a).iter().map(usize::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A non-empty set of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConnectionSet(Vec<usize>);

impl ConnectionSet {
    pub fn new(elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyConnectionSet);
        }
        Ok(ConnectionSet(set.into_iter().collect()))
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    fn check_range(&self, order: usize) -> Result<()> {
        match self.0.iter().find(|&&c| c >= order) {
            Some(&element) => Err(Error::ConnectionOutOfRange { element, order }),
            None => Ok(()),
        }
    }
}

/// Outcome of [`validate_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validation {
    Ok,
    /// `(a*b)*c != a*(b*c)`.
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
    },
    /// `identity*x != x` or `x*identity != x`.
    IdentityViolation {
        identity: usize,
        x: usize,
    },
}

impl Validation {
    pub fn is_ok(self) -> bool {
        self == Validation::Ok
    }
}

/// Above this order associativity is checked with Light's test.
const LIGHT_THRESHOLD: usize = 32;

pub fn validate_table(t: &MulTable) -> Validation {
    let n = t.order;
    let middles = if n > LIGHT_THRESHOLD {
        generating_set(t)
    } else {
        (0..n).collect()
    };
    // (x*b)*y = x*(b*y) for all b in a generating set is enough
    for &b in &middles {
        for a in 0..n {
            let ab = t.mul(a, b);
            for c in 0..n {
                if t.mul(ab, c) != t.mul(a, t.mul(b, c)) {
                    return Validation::NotAssociative { a, b, c };
                }
            }
        }
    }
    if let Some(e) = t.identity {
        if let Some(x) = (0..n).find(|&x| t.mul(e, x) != x || t.mul(x, e) != x) {
            return Validation::IdentityViolation { identity: e, x };
        }
    }
    Validation::Ok
}

/// Greedy generating set: each element not yet generated becomes a
/// generator, and the generated set is grown by products with everything
/// already present.
fn generating_set(t: &MulTable) -> Vec<usize> {
    let n = t.order;
    let mut inside = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    let mut gens = Vec::new();
    for g in 0..n {
        if inside[g] {
            continue;
        }
        gens.push(g);
        inside[g] = true;
        let mut head = members.len();
        members.push(g);
        while head < members.len() {
            let u = members[head];
            head += 1;
            for i in 0..head {
                let v = members[i];
                for p in [t.mul(u, v), t.mul(v, u)] {
                    if !inside[p] {
                        inside[p] = true;
                        members.push(p);
                    }
                }
            }
        }
    }
    gens
}

fn check_inputs(t: &MulTable, c: &ConnectionSet) -> Result<()> {
    match validate_table(t) {
        Validation::Ok => {}
        v => return Err(Error::InvalidTable(format!("{v:?}"))),
    }
    c.check_range(t.order)
}

/// `Cay(S, C)`: arcs `(s, s*c)` with set semantics.
pub fn cayley_digraph(t: &MulTable, c: &ConnectionSet) -> Result<Digraph> {
    check_inputs(t, c)?;
    Ok(cayley_digraph_unchecked(t, c.elements()))
}

pub(crate) fn cayley_digraph_unchecked(t: &MulTable, c: &[usize]) -> Digraph {
    let arcs = (0..t.order).flat_map(|s| c.iter().map(move |&x| (s, t.mul(s, x))));
    Digraph::from_arcs(t.order, arcs).expect("products are in range")
}

/// `Cay_col(S, C)`: one arc `(s, s*c)` of color `c` per pair.
pub fn cayley_colored(t: &MulTable, c: &ConnectionSet) -> Result<ColoredMultiDigraph> {
    check_inputs(t, c)?;
    let arcs = (0..t.order)
        .flat_map(|s| c.elements().iter().map(move |&x| (s, t.mul(s, x), x)))
        .collect();
    Ok(ColoredMultiDigraph::new(t.order, arcs))
}

/// Drop directions, loops and multiplicities.
pub fn underlying_graph(g: &Digraph) -> SimpleGraph {
    let edges = g.arcs().filter(|(u, v)| u != v);
    SimpleGraph::from_edges(g.order(), edges).expect("loops filtered")
}

/// Left multiplications `phi_s(x) = s*x`, indexed by `s`.
pub fn left_mul_maps(t: &MulTable) -> Vec<Vec<usize>> {
    (0..t.order).map(|s| t.row(s).to_vec()).collect()
}

pub fn is_left_cancellative(t: &MulTable) -> bool {
    (0..t.order).all(|s| {
        let mut seen = vec![false; t.order];
        t.row(s)
            .iter()
            .all(|&p| !std::mem::replace(&mut seen[p], true))
    })
}

/// Adjoins a fresh two-sided identity with index `order()`.
pub fn adjoin_identity(t: &MulTable) -> MulTable {
    let n = t.order;
    MulTable::from_fn(n + 1, Some(n), |a, b| {
        if a == n {
            b
        } else if b == n {
            a
        } else {
            t.mul(a, b)
        }
    })
    .expect("valid shape")
}

/// Elements of the submonoid (or subsemigroup, without identity) generated by `c`.
pub fn generated_closure(t: &MulTable, c: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; t.order];
    let mut stack: Vec<usize> = Vec::new();
    let seeds = t.identity.into_iter().chain(c.iter().copied());
    for x in seeds {
        if !seen[x] {
            seen[x] = true;
            stack.push(x);
        }
    }
    while let Some(x) = stack.pop() {
        for &g in c {
            let y = t.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    (0..t.order).filter(|&x| seen[x]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn associative_brute(t: &MulTable) -> bool {
        let n = t.order();
        (0..n)
            .all(|a| (0..n).all(|b| (0..n).all(|c| t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c)))))
    }

    #[test]
    fn light_test_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let z6sq = MulTable::from_fn(36, Some(0), |a, b| {
            ((a / 6 + b / 6) % 6) * 6 + (a % 6 + b % 6) % 6
        })
        .unwrap();
        let left_zero = MulTable::from_fn(40, None, |a, _| a).unwrap();
        // rectangular band on 6 x 7
        let band = MulTable::from_fn(42, None, |a, b| (a / 7) * 7 + b % 7).unwrap();
        let chain = MulTable::from_fn(35, Some(0), |a, b| a.max(b)).unwrap();
        for t in [z6sq, left_zero, band, chain] {
            assert!(validate_table(&t).is_ok());
            for _ in 0..30 {
                let n = t.order();
                let mut p = t.products().to_vec();
                let cell = rng.gen_range(0..n * n);
                p[cell] = rng.gen_range(0..n);
                let u = MulTable::new(n, p, None).unwrap();
                let v = validate_table(&u);
                assert_eq!(v.is_ok(), associative_brute(&u));
                if let Validation::NotAssociative { a, b, c } = v {
                    assert_ne!(u.mul(u.mul(a, b), c), u.mul(a, u.mul(b, c)));
                }
            }
        }
    }

    fn z2() -> MulTable {
        MulTable::cyclic_group(2)
    }

    #[test]
    fn validate_examples() {
        assert!(validate_table(&MulTable::trivial()).is_ok());
        assert!(validate_table(&z2()).is_ok());
        // product 0 everywhere except 1*1 = 1 is the two-element meet semilattice
        let meet = MulTable::new(2, vec![0, 0, 0, 1], None).unwrap();
        let brute = (0..8).all(|i| {
            let (a, b, c) = (i >> 2, (i >> 1) & 1, i & 1);
            meet.mul(meet.mul(a, b), c) == meet.mul(a, meet.mul(b, c))
        });
        assert!(brute);
        assert!(validate_table(&meet).is_ok());
        // x*y = 1 - x is not associative
        let neg = MulTable::from_fn(2, None, |a, _| 1 - a).unwrap();
        assert_eq!(
            validate_table(&neg),
            Validation::NotAssociative { a: 0, b: 0, c: 0 }
        );
        let bad_id = MulTable::new(2, vec![0, 0, 0, 1], Some(0)).unwrap();
        assert_eq!(
            validate_table(&bad_id),
            Validation::IdentityViolation { identity: 0, x: 1 }
        );
    }

    #[test]
    fn cayley_examples() {
        let c0 = ConnectionSet::new([0]).unwrap();
        let g = cayley_digraph(&z2(), &c0).unwrap();
        assert_eq!(g, Digraph::from_arcs(2, [(0, 0), (1, 1)]).unwrap());
        let c01 = ConnectionSet::new([0, 1]).unwrap();
        let g = cayley_digraph(&z2(), &c01).unwrap();
        assert_eq!(g.arc_count(), 4);
        assert!(ConnectionSet::new([]).is_err());
        let g = cayley_digraph(&MulTable::trivial(), &c0).unwrap();
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 0)]);
        assert!(matches!(
            cayley_digraph(&z2(), &ConnectionSet::new([2]).unwrap()),
            Err(Error::ConnectionOutOfRange { .. })
        ));
        let neg = MulTable::from_fn(2, None, |a, _| 1 - a).unwrap();
        assert!(cayley_digraph(&neg, &c0).is_err());
    }

    #[test]
    fn colored_examples() {
        let c01 = ConnectionSet::new([0, 1]).unwrap();
        let col = cayley_colored(&z2(), &c01).unwrap();
        let mut expected = vec![(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)];
        expected.sort();
        assert_eq!(col.arcs(), expected.as_slice());
        let col = cayley_colored(&MulTable::trivial(), &ConnectionSet::new([0]).unwrap()).unwrap();
        assert_eq!(col.arcs(), &[(0, 0, 0)]);
    }

    #[test]
    fn underlying_examples() {
        let loops = Digraph::from_arcs(2, [(0, 0), (1, 1)]).unwrap();
        assert_eq!(underlying_graph(&loops).edge_count(), 0);
        let two = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(underlying_graph(&two), SimpleGraph::path(2));
        let fig2 = Digraph::from_arcs(3, [(0, 0), (0, 1), (1, 0), (1, 2), (2, 1), (2, 2)]).unwrap();
        assert_eq!(underlying_graph(&fig2), SimpleGraph::path(3));
    }

    #[test]
    fn left_multiplication() {
        assert_eq!(left_mul_maps(&MulTable::trivial()), vec![vec![0]]);
        assert_eq!(left_mul_maps(&z2()), vec![vec![0, 1], vec![1, 0]]);
        let right_zero = MulTable::from_fn(2, None, |_, b| b).unwrap();
        assert!(is_left_cancellative(&right_zero));
        let left_zero = MulTable::from_fn(2, None, |a, _| a).unwrap();
        assert!(!is_left_cancellative(&left_zero));
        assert!(is_left_cancellative(&z2()));
    }

    #[test]
    fn adjoin_identity_examples() {
        let m = adjoin_identity(&MulTable::new(1, vec![0], None).unwrap());
        assert_eq!(m.order(), 2);
        assert!(validate_table(&m).is_ok());
        let m = adjoin_identity(&z2());
        assert_eq!(m.order(), 3);
        assert_eq!(m.identity(), Some(2));
        assert_eq!(m.mul(1, 1), 0);
        assert!(validate_table(&m).is_ok());
    }

    #[test]
    fn table_text_round_trip() {
        let t = MulTable::cyclic_group(3);
        let text = t.to_string();
        assert_eq!(text, "3 0\n0 1 2\n1 2 0\n2 0 1\n");
        assert_eq!(MulTable::parse(&text).unwrap(), t);
        let s = MulTable::parse("2 -\n0 0\n0 1\n").unwrap();
        assert_eq!(s.identity(), None);
        assert!(matches!(
            MulTable::parse("2 -\n0 0\n0 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            MulTable::parse("2 -\n0 0\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn closure_of_generators() {
        let z4 = MulTable::cyclic_group(4);
        assert_eq!(generated_closure(&z4, &[2]), vec![0, 2]);
        assert_eq!(generated_closure(&z4, &[1]), vec![0, 1, 2, 3]);
    }
}
