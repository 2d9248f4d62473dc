use std::collections::HashMap;

use super::Cospan;
use crate::error::{Error, Result};
use crate::finset::{self, FinFunction};

/// Default cap on visited search nodes.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A bijection of apices commuting with both legs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CospanIso {
    bijection: FinFunction,
}

impl CospanIso {
    /// Checks the witness against a pair of cospans.
    pub fn new(bijection: FinFunction, source: &Cospan, target: &Cospan) -> Result<Self> {
        let iso = CospanIso { bijection };
        if iso.witnesses(source, target) {
            Ok(iso)
        } else {
            Err(Error::LawViolation("bijection is not a map of cospans".into()))
        }
    }

    pub fn bijection(&self) -> &FinFunction {
        &self.bijection
    }

    pub fn into_bijection(self) -> FinFunction {
        self.bijection
    }

    pub fn witnesses(&self, source: &Cospan, target: &Cospan) -> bool {
        let n = &self.bijection;
        n.is_bijection()
            && n.dom() == source.apex()
            && n.cod() == target.apex()
            && finset::compose(n, source.left()).as_ref() == Ok(target.left())
            && finset::compose(n, source.right()).as_ref() == Ok(target.right())
    }

    pub fn inverse(&self) -> CospanIso {
        CospanIso { bijection: self.bijection.inverse().expect("witness is a bijection") }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &CospanIso) -> Result<CospanIso> {
        Ok(CospanIso { bijection: finset::compose(&next.bijection, &self.bijection)? })
    }
}

/// Exact backtracking search for cospan isomorphisms.
///
/// Apex elements are grouped by their signature: the fibres over them under
/// both legs, plus an optional caller-supplied colour. Elements in the image
/// of a leg have a singleton group, so only elements outside both images are
/// actually permuted.
pub struct IsoSearch<'a> {
    source: &'a Cospan,
    target: &'a Cospan,
    budget: u64,
    colors: Option<(Vec<u64>, Vec<u64>)>,
}

type Signature = (Vec<usize>, Vec<usize>, u64);

impl<'a> IsoSearch<'a> {
    pub fn new(source: &'a Cospan, target: &'a Cospan) -> Self {
        IsoSearch { source, target, budget: DEFAULT_BUDGET, colors: None }
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = nodes;
        self
    }

    /// Extra invariant colours for the apex elements of source and target.
    /// A witness must map every element to one of the same colour.
    pub fn colors(mut self, source: Vec<u64>, target: Vec<u64>) -> Self {
        self.colors = Some((source, target));
        self
    }

    /// First isomorphism found.
    pub fn find(self) -> Result<Option<CospanIso>> {
        self.find_where(|_| true)
    }

    /// First isomorphism whose bijection satisfies `accept`.
    pub fn find_where<P>(self, mut accept: P) -> Result<Option<CospanIso>>
    where
        P: FnMut(&FinFunction) -> bool,
    {
        let (s, t) = (self.source, self.target);
        if s.left_foot() != t.left_foot()
            || s.right_foot() != t.right_foot()
            || s.apex() != t.apex()
        {
            return Ok(None);
        }
        let n = s.apex().size();
        let (src_colors, tgt_colors) = match self.colors {
            Some((a, b)) if a.len() == n && b.len() == n => (a, b),
            Some(_) => return Ok(None),
            None => (vec![0; n], vec![0; n]),
        };
        let src_sigs = signatures(s, &src_colors);
        let tgt_sigs = signatures(t, &tgt_colors);

        let mut groups: HashMap<&Signature, Vec<usize>> = HashMap::new();
        for (b, sig) in tgt_sigs.iter().enumerate() {
            groups.entry(sig).or_default().push(b);
        }
        let mut candidates = Vec::with_capacity(n);
        let mut demand: HashMap<&Signature, usize> = HashMap::new();
        for sig in &src_sigs {
            match groups.get(sig) {
                Some(g) => candidates.push(g.as_slice()),
                None => return Ok(None),
            }
            *demand.entry(sig).or_default() += 1;
        }
        if demand.iter().any(|(sig, &k)| groups[sig].len() != k) {
            return Ok(None);
        }

        // Forced elements first keeps the branching at the bottom of the tree.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| candidates[a].len());

        let mut state = Backtrack {
            order,
            candidates,
            used: vec![false; n],
            table: vec![usize::MAX; n],
            visited: 0,
            budget: self.budget,
            cod: s.apex(),
        };
        match state.run(0, &mut accept)? {
            Some(bijection) => Ok(Some(CospanIso { bijection })),
            None => Ok(None),
        }
    }
}

fn signatures(c: &Cospan, colors: &[u64]) -> Vec<Signature> {
    let lf = c.left().fibers();
    let rf = c.right().fibers();
    lf.into_iter()
        .zip(rf)
        .zip(colors)
        .map(|((l, r), &k)| (l, r, k))
        .collect()
}

struct Backtrack<'s> {
    order: Vec<usize>,
    candidates: Vec<&'s [usize]>,
    used: Vec<bool>,
    table: Vec<usize>,
    visited: u64,
    budget: u64,
    cod: crate::finset::FinSet,
}

impl Backtrack<'_> {
    fn run<P>(&mut self, depth: usize, accept: &mut P) -> Result<Option<FinFunction>>
    where
        P: FnMut(&FinFunction) -> bool,
    {
        if depth == self.order.len() {
            let f = FinFunction::from_parts(self.cod, self.table.clone());
            return Ok(accept(&f).then_some(f));
        }
        let a = self.order[depth];
        for i in 0..self.candidates[a].len() {
            let b = self.candidates[a][i];
            if self.used[b] {
                continue;
            }
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            self.used[b] = true;
            self.table[a] = b;
            if let Some(found) = self.run(depth + 1, accept)? {
                return Ok(Some(found));
            }
            self.used[b] = false;
        }
        Ok(None)
    }
}

/// Decides whether two cospans are isomorphic, with the default budget.
pub fn iso_search(source: &Cospan, target: &Cospan) -> Result<Option<CospanIso>> {
    IsoSearch::new(source, target).find()
}
