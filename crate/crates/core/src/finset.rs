//! Skeletal finite sets `{0, .., n-1}`, total functions between them, and the
//! finite colimits that cospan composition needs: the initial object,
//! coproducts and pushouts.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest set size accepted by the validating constructors.
pub const MAX_SET_SIZE: usize = 1 << 16;

/// A canonical finite set, identified with its size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FinSet(usize);

impl FinSet {
    pub const EMPTY: FinSet = FinSet(0);

    pub fn new(size: usize) -> Result<Self> {
        if size > MAX_SET_SIZE {
            return Err(Error::SetTooLarge(size));
        }
        Ok(FinSet(size))
    }

    #[inline]
    pub fn size(self) -> usize {
        self.0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn elements(self) -> std::ops::Range<usize> {
        0..self.0
    }

    /// The coproduct object `self + other`.
    pub fn plus(self, other: FinSet) -> FinSet {
        FinSet(self.0 + other.0)
    }
}

impl From<FinSet> for usize {
    fn from(s: FinSet) -> usize {
        s.0
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A total function `dom -> cod` stored as its value table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinFunction {
    dom: FinSet,
    cod: FinSet,
    table: Vec<usize>,
}

impl FinFunction {
    /// Validating constructor; the domain is the table length.
    pub fn new(cod: usize, table: Vec<usize>) -> Result<Self> {
        let cod = FinSet::new(cod)?;
        let dom = FinSet::new(table.len())?;
        if let Some(&index) = table.iter().find(|&&v| v >= cod.size()) {
            return Err(Error::IndexOutOfRange { index, size: cod.size() });
        }
        Ok(FinFunction { dom, cod, table })
    }

    /// Like [`FinFunction::new`] but also checks the domain size.
    pub fn with_domain(dom: usize, cod: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom {
            return Err(Error::TableLength { len: table.len(), dom });
        }
        Self::new(cod, table)
    }

    // Callers guarantee the invariants.
    pub(crate) fn from_parts(cod: FinSet, table: Vec<usize>) -> Self {
        debug_assert!(table.iter().all(|&v| v < cod.size()));
        FinFunction { dom: FinSet(table.len()), cod, table }
    }

    pub fn identity(set: FinSet) -> Self {
        FinFunction::from_parts(set, set.elements().collect())
    }

    /// The unique map out of the empty set.
    pub fn bang(cod: FinSet) -> Self {
        FinFunction::from_parts(cod, Vec::new())
    }

    #[inline]
    pub fn dom(&self) -> FinSet {
        self.dom
    }

    #[inline]
    pub fn cod(&self) -> FinSet {
        self.cod
    }

    #[inline]
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        self.table[k]
    }

    /// `g ∘ self`: first `self`, then `g`.
    pub fn then(&self, g: &FinFunction) -> Result<FinFunction> {
        compose(g, self)
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.table.iter().enumerate().all(|(k, &v)| k == v)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        self.table.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijection(&self) -> bool {
        self.dom == self.cod && self.is_injective()
    }

    /// Inverse of a bijection, `None` otherwise.
    pub fn inverse(&self) -> Option<FinFunction> {
        if !self.is_bijection() {
            return None;
        }
        let mut table = vec![0; self.cod.size()];
        for (k, &v) in self.table.iter().enumerate() {
            table[v] = k;
        }
        Some(FinFunction::from_parts(self.dom, table))
    }

    /// Preimage of every codomain element, each sorted increasingly.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.cod.size()];
        for (k, &v) in self.table.iter().enumerate() {
            fibers[v].push(k);
        }
        fibers
    }

    /// `self + other: dom + dom' -> cod + cod'`.
    pub fn sum(&self, other: &FinFunction) -> FinFunction {
        let shift = self.cod.size();
        let table = self
            .table
            .iter()
            .copied()
            .chain(other.table.iter().map(|&v| v + shift))
            .collect();
        FinFunction::from_parts(self.cod.plus(other.cod), table)
    }
}

/// `g ∘ f`.
pub fn compose(g: &FinFunction, f: &FinFunction) -> Result<FinFunction> {
    if f.cod != g.dom {
        return Err(Error::MismatchedBoundary { expected: g.dom.size(), found: f.cod.size() });
    }
    Ok(FinFunction::from_parts(g.cod, f.table.iter().map(|&k| g.table[k]).collect()))
}

/// Coproduct `a + b` with its two injections.
pub fn coproduct(a: FinSet, b: FinSet) -> (FinSet, FinFunction, FinFunction) {
    let sum = a.plus(b);
    let inl = FinFunction::from_parts(sum, a.elements().collect());
    let inr = FinFunction::from_parts(sum, b.elements().map(|k| a.size() + k).collect());
    (sum, inl, inr)
}

/// Copairing `[f, g]: A + B -> C`.
pub fn copair(f: &FinFunction, g: &FinFunction) -> Result<FinFunction> {
    if f.cod != g.cod {
        return Err(Error::MismatchedBoundary { expected: f.cod.size(), found: g.cod.size() });
    }
    let table = f.table.iter().chain(g.table.iter()).copied().collect();
    Ok(FinFunction::from_parts(f.cod, table))
}

/// The symmetry `a + b -> b + a`.
pub fn braiding(a: FinSet, b: FinSet) -> FinFunction {
    let table = a
        .elements()
        .map(|k| b.size() + k)
        .chain(b.elements())
        .collect();
    FinFunction::from_parts(b.plus(a), table)
}

/// Result of gluing two sets along a shared foot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pushout {
    pub apex: FinSet,
    pub left: FinFunction,
    pub right: FinFunction,
}

impl Pushout {
    /// The copairing `[left, right]: N + M -> apex`.
    pub fn copairing(&self) -> FinFunction {
        copair(&self.left, &self.right).expect("pushout legs share the apex")
    }
}

/// Pushout of the span `N <-f- Y -g-> M`.
///
/// The apex is `N + M` modulo the equivalence generated by `f(y) ~ g(y)`.
/// Classes are numbered by their least representative in `N + M`, so equal
/// inputs always give identical outputs.
pub fn pushout(f: &FinFunction, g: &FinFunction) -> Result<Pushout> {
    if f.dom != g.dom {
        return Err(Error::MismatchedBoundary { expected: f.dom.size(), found: g.dom.size() });
    }
    let n = f.cod.size();
    let m = g.cod.size();
    let mut classes = UnionFind::new(n + m);
    for (&a, &b) in f.table.iter().zip(&g.table) {
        classes.union(a, n + b);
    }
    let (count, labels) = classes.canonical_labels();
    let apex = FinSet::new(count)?;
    Ok(Pushout {
        apex,
        left: FinFunction::from_parts(apex, labels[..n].to_vec()),
        right: FinFunction::from_parts(apex, labels[n..].to_vec()),
    })
}

/// Disjoint sets over `0..n` with path compression and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            x = std::mem::replace(&mut self.parent[x], root);
        }
        root
    }

    /// Returns `true` if `a` and `b` were in different classes.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Numbers the classes `0..count` in order of their least element.
    pub fn canonical_labels(&mut self) -> (usize, Vec<usize>) {
        let n = self.parent.len();
        let mut label_of_root = vec![usize::MAX; n];
        let mut labels = Vec::with_capacity(n);
        let mut count = 0;
        for x in 0..n {
            let r = self.find(x);
            if label_of_root[r] == usize::MAX {
                label_of_root[r] = count;
                count += 1;
            }
            labels.push(label_of_root[r]);
        }
        (count, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fun(cod: usize, table: &[usize]) -> FinFunction {
        FinFunction::new(cod, table.to_vec()).unwrap()
    }

    /// Every function `dom -> cod`.
    fn all_functions(dom: usize, cod: usize) -> Vec<FinFunction> {
        if dom > 0 && cod == 0 {
            return Vec::new();
        }
        let total = cod.pow(dom as u32);
        (0..total)
            .map(|mut code| {
                let table: Vec<usize> = (0..dom)
                    .map(|_| {
                        let v = code % cod;
                        code /= cod;
                        v
                    })
                    .collect();
                fun(cod, &table)
            })
            .collect()
    }

    #[test]
    fn identity_tables() {
        assert!(FinFunction::identity(FinSet::EMPTY).table().is_empty());
        assert_eq!(FinFunction::identity(FinSet(3)).table(), &[0, 1, 2]);
    }

    #[test]
    fn identity_is_a_unit_for_all_small_functions() {
        for dom in 0..=4 {
            for cod in 0..=4 {
                for f in all_functions(dom, cod) {
                    assert_eq!(compose(&FinFunction::identity(f.cod()), &f).unwrap(), f);
                    assert_eq!(compose(&f, &FinFunction::identity(f.dom())).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn composition_of_constant_maps() {
        let g = fun(1, &[0]);
        let f = fun(1, &[0, 0]);
        assert_eq!(compose(&g, &f).unwrap().table(), &[0, 0]);
    }

    #[test]
    fn composition_rejects_mismatched_boundary() {
        let g = fun(1, &[0, 0]);
        let f = fun(3, &[0, 2]);
        assert_eq!(
            compose(&g, &f),
            Err(Error::MismatchedBoundary { expected: 2, found: 3 })
        );
    }

    #[test]
    fn composition_is_associative_exhaustively() {
        for a in 0..=3 {
            for b in 0..=3 {
                for c in 0..=3 {
                    for d in 0..=3 {
                        let fs = all_functions(a, b);
                        let gs = all_functions(b, c);
                        let hs = all_functions(c, d);
                        for f in &fs {
                            for g in &gs {
                                for h in &hs {
                                    let left = compose(h, &compose(g, f).unwrap()).unwrap();
                                    let right = compose(&compose(h, g).unwrap(), f).unwrap();
                                    assert_eq!(left, right);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn coproduct_conventions() {
        let (s, inl, inr) = coproduct(FinSet(0), FinSet(3));
        assert_eq!(s.size(), 3);
        assert!(inl.table().is_empty());
        assert!(inr.is_identity());

        let (s, inl, inr) = coproduct(FinSet(2), FinSet(2));
        assert_eq!(s.size(), 4);
        assert_eq!(inl.table(), &[0, 1]);
        assert_eq!(inr.table(), &[2, 3]);
    }

    #[test]
    fn coproduct_injections_are_jointly_epic() {
        for a in 0..=3 {
            for b in 0..=3 {
                let (s, inl, inr) = coproduct(FinSet(a), FinSet(b));
                for c in 0..=3 {
                    let hs = all_functions(s.size(), c);
                    for h in &hs {
                        for h2 in &hs {
                            let agree = compose(h, &inl) == compose(h2, &inl)
                                && compose(h, &inr) == compose(h2, &inr);
                            assert_eq!(agree, h == h2);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn copair_of_identities_folds() {
        let id = FinFunction::identity(FinSet(2));
        assert_eq!(copair(&id, &id).unwrap().table(), &[0, 1, 0, 1]);
    }

    #[test]
    fn copair_with_bang_is_the_function() {
        let f = fun(3, &[2, 0]);
        assert_eq!(copair(&f, &FinFunction::bang(FinSet(3))).unwrap(), f);
    }

    #[test]
    fn copair_rejects_mismatched_codomains() {
        assert!(copair(&fun(2, &[0]), &fun(3, &[0])).is_err());
    }

    #[test]
    fn bang_is_unique() {
        assert_eq!(FinFunction::bang(FinSet::EMPTY), FinFunction::identity(FinSet::EMPTY));
        let b = FinFunction::bang(FinSet(5));
        assert!(b.table().is_empty());
        assert_eq!(b.cod().size(), 5);
        assert_eq!(all_functions(0, 5), vec![b]);
    }

    #[test]
    fn set_size_limit_is_enforced() {
        assert!(FinSet::new(MAX_SET_SIZE).is_ok());
        assert_eq!(FinSet::new(MAX_SET_SIZE + 1), Err(Error::SetTooLarge(MAX_SET_SIZE + 1)));
        assert!(FinFunction::new(2, vec![0, 2]).is_err());
        assert!(FinFunction::with_domain(3, 2, vec![0, 1]).is_err());
    }

    #[test]
    fn pushout_over_empty_foot_is_the_coproduct() {
        let f = FinFunction::bang(FinSet(2));
        let g = FinFunction::bang(FinSet(3));
        let p = pushout(&f, &g).unwrap();
        let (s, inl, inr) = coproduct(FinSet(2), FinSet(3));
        assert_eq!(p.apex, s);
        assert_eq!(p.left, inl);
        assert_eq!(p.right, inr);
    }

    #[test]
    fn pushout_of_the_gluing_example() {
        // N = {A, B, C}, M = {A', B', C'}; both feet points land on B in N and
        // on A', C' in M.
        let f = fun(3, &[1, 1]);
        let g = fun(3, &[0, 2]);
        let p = pushout(&f, &g).unwrap();
        assert_eq!(p.apex.size(), 4);
        assert_eq!(p.left.table(), &[0, 1, 2]);
        assert_eq!(p.right.table(), &[1, 3, 1]);
        assert_eq!(compose(&p.left, &f).unwrap(), compose(&p.right, &g).unwrap());
    }

    #[test]
    fn pushout_rejects_mismatched_foot() {
        assert!(pushout(&fun(2, &[0]), &fun(2, &[0, 1])).is_err());
    }

    #[test]
    fn pushout_universal_property_exhaustively() {
        for y in 0..=3 {
            for n in 0..=3 {
                for m in 0..=3 {
                    for f in all_functions(y, n) {
                        for g in all_functions(y, m) {
                            let p = pushout(&f, &g).unwrap();
                            assert_eq!(
                                compose(&p.left, &f).unwrap(),
                                compose(&p.right, &g).unwrap()
                            );
                            for c in 0..=2 {
                                let candidates = all_functions(p.apex.size(), c);
                                for hn in all_functions(n, c) {
                                    for hm in all_functions(m, c) {
                                        let cocone = compose(&hn, &f).unwrap()
                                            == compose(&hm, &g).unwrap();
                                        let factorizations = candidates
                                            .iter()
                                            .filter(|u| {
                                                compose(u, &p.left).unwrap() == hn
                                                    && compose(u, &p.right).unwrap() == hm
                                            })
                                            .count();
                                        assert_eq!(factorizations, usize::from(cocone));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pushout_apex_counts_generated_classes() {
        // Brute-force closure of the relation f(y) ~ g(y) on N + M.
        for y in 0..=3 {
            for n in 0..=3 {
                for m in 0..=3 {
                    for f in all_functions(y, n) {
                        for g in all_functions(y, m) {
                            let mut related = vec![vec![false; n + m]; n + m];
                            for i in 0..n + m {
                                related[i][i] = true;
                            }
                            for k in 0..y {
                                let (a, b) = (f.apply(k), n + g.apply(k));
                                related[a][b] = true;
                                related[b][a] = true;
                            }
                            for k in 0..n + m {
                                for i in 0..n + m {
                                    for j in 0..n + m {
                                        if related[i][k] && related[k][j] {
                                            related[i][j] = true;
                                        }
                                    }
                                }
                            }
                            let classes = (0..n + m)
                                .filter(|&i| (0..i).all(|j| !related[i][j]))
                                .count();
                            let p = pushout(&f, &g).unwrap();
                            assert_eq!(p.apex.size(), classes);
                            let glue = p.copairing();
                            for i in 0..n + m {
                                for j in 0..n + m {
                                    assert_eq!(glue.apply(i) == glue.apply(j), related[i][j]);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pushout_numbering_follows_least_representatives() {
        let p = pushout(&fun(3, &[2]), &fun(2, &[0])).unwrap();
        // classes {0}, {1}, {2, 3}, {4}
        assert_eq!(p.left.table(), &[0, 1, 2]);
        assert_eq!(p.right.table(), &[2, 3]);
    }

    #[test]
    fn braiding_is_an_involution_up_to_swap() {
        for a in 0..=3 {
            for b in 0..=3 {
                let s = braiding(FinSet(a), FinSet(b));
                let back = braiding(FinSet(b), FinSet(a));
                assert!(compose(&back, &s).unwrap().is_identity());
            }
        }
        assert!(braiding(FinSet::EMPTY, FinSet(3)).is_identity());
    }

    #[test]
    fn inverse_of_bijection() {
        let f = fun(3, &[2, 0, 1]);
        let inv = f.inverse().unwrap();
        assert!(compose(&inv, &f).unwrap().is_identity());
        assert!(fun(3, &[0, 0, 1]).inverse().is_none());
    }
}
