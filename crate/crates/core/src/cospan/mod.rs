//! The hypergraph category of cospans of finite sets.
//!
//! A [`Cospan`] `X -i-> N <-o- Y` is stored as its two legs. Composition glues
//! apices by pushout over the shared foot, the monoidal product is disjoint
//! union, and every object carries the special commutative Frobenius monoid
//! built from the fold map `[1, 1]: X + X -> X` and `!: ∅ -> X`.
//!
//! Morphisms are representatives: two cospans denote the same morphism when
//! [`iso_search`] finds a bijection of apices commuting with both legs.

mod iso;

pub use iso::{iso_search, CospanIso, IsoSearch, DEFAULT_BUDGET};

use crate::error::{Error, Result};
use crate::finset::{self, braiding, copair, FinFunction, FinSet, Pushout};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cospan {
    left: FinFunction,
    right: FinFunction,
}

impl Cospan {
    pub fn new(left: FinFunction, right: FinFunction) -> Result<Self> {
        if left.cod() != right.cod() {
            return Err(Error::MismatchedBoundary {
                expected: left.cod().size(),
                found: right.cod().size(),
            });
        }
        Ok(Cospan { left, right })
    }

    /// The cospan `X -f-> Y <=1= Y`.
    pub fn from_function(f: &FinFunction) -> Self {
        Cospan { left: f.clone(), right: FinFunction::identity(f.cod()) }
    }

    pub fn identity(x: FinSet) -> Self {
        Cospan::from_function(&FinFunction::identity(x))
    }

    /// The cospan with every part empty; the monoidal unit's identity.
    pub fn empty() -> Self {
        Cospan::identity(FinSet::EMPTY)
    }

    #[inline]
    pub fn left_foot(&self) -> FinSet {
        self.left.dom()
    }

    #[inline]
    pub fn right_foot(&self) -> FinSet {
        self.right.dom()
    }

    #[inline]
    pub fn apex(&self) -> FinSet {
        self.left.cod()
    }

    #[inline]
    pub fn left(&self) -> &FinFunction {
        &self.left
    }

    #[inline]
    pub fn right(&self) -> &FinFunction {
        &self.right
    }

    /// The copairing `[i, o]: X + Y -> N` of both legs.
    pub fn boundary(&self) -> FinFunction {
        copair(&self.left, &self.right).expect("legs share the apex")
    }

    /// Sequential composite `self ; next`, returning the gluing pushout too.
    pub fn compose_with_pushout(&self, next: &Cospan) -> Result<(Cospan, Pushout)> {
        if self.right_foot() != next.left_foot() {
            return Err(Error::MismatchedBoundary {
                expected: self.right_foot().size(),
                found: next.left_foot().size(),
            });
        }
        let glue = finset::pushout(&self.right, &next.left)?;
        let left = finset::compose(&glue.left, &self.left)?;
        let right = finset::compose(&glue.right, &next.right)?;
        Ok((Cospan { left, right }, glue))
    }

    /// Sequential composite `self ; next` (first `self`, then `next`).
    pub fn compose(&self, next: &Cospan) -> Result<Cospan> {
        self.compose_with_pushout(next).map(|(c, _)| c)
    }

    pub fn tensor(&self, other: &Cospan) -> Cospan {
        Cospan { left: self.left.sum(&other.left), right: self.right.sum(&other.right) }
    }

    /// The reflected cospan `Y -o-> N <-i- X`.
    pub fn opposite(&self) -> Cospan {
        Cospan { left: self.right.clone(), right: self.left.clone() }
    }

    /// The dual morphism built from the Frobenius cups and caps:
    /// `(1_Y ⊗ (η_X ; δ_X)) ; (1_Y ⊗ c ⊗ 1_X) ; ((μ_Y ; ε_Y) ⊗ 1_X)`.
    pub fn dual(&self) -> Result<Cospan> {
        let x = self.left_foot();
        let y = self.right_foot();
        let fx = Frobenius::on(x);
        let fy = Frobenius::on(y);
        let cup = fx.eta.compose(&fx.delta)?;
        let cap = fy.mu.compose(&fy.epsilon)?;
        let step1 = Cospan::identity(y).tensor(&cup);
        let step2 = Cospan::identity(y).tensor(self).tensor(&Cospan::identity(x));
        let step3 = cap.tensor(&Cospan::identity(x));
        step1.compose(&step2)?.compose(&step3)
    }

    /// Post-composes both legs with `f: N -> N'`.
    pub fn push_apex(&self, f: &FinFunction) -> Result<Cospan> {
        Ok(Cospan { left: finset::compose(f, &self.left)?, right: finset::compose(f, &self.right)? })
    }
}

/// The special commutative Frobenius monoid on an object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frobenius {
    /// `X + X -> X`
    pub mu: Cospan,
    /// `∅ -> X`
    pub eta: Cospan,
    /// `X -> X + X`, the opposite of `mu`
    pub delta: Cospan,
    /// `X -> ∅`, the opposite of `eta`
    pub epsilon: Cospan,
}

impl Frobenius {
    pub fn on(x: FinSet) -> Self {
        let id = FinFunction::identity(x);
        let mu = Cospan::from_function(&copair(&id, &id).expect("same codomain"));
        let eta = Cospan::from_function(&FinFunction::bang(x));
        let delta = mu.opposite();
        let epsilon = eta.opposite();
        Frobenius { mu, eta, delta, epsilon }
    }
}

/// The symmetric monoidal structure isomorphisms of `(FinSet, +)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Structure {
    /// `(X + Y) + Z -> X + (Y + Z)`
    Associator(FinSet, FinSet, FinSet),
    /// `∅ + X -> X`
    LeftUnitor(FinSet),
    /// `X + ∅ -> X`
    RightUnitor(FinSet),
    /// `X + Y -> Y + X`
    Braiding(FinSet, FinSet),
}

impl Structure {
    /// The underlying bijection of finite sets.
    pub fn function(self) -> FinFunction {
        match self {
            // Coproducts of skeletal sets are strictly associative and unital.
            Structure::Associator(x, y, z) => FinFunction::identity(x.plus(y).plus(z)),
            Structure::LeftUnitor(x) | Structure::RightUnitor(x) => FinFunction::identity(x),
            Structure::Braiding(x, y) => braiding(x, y),
        }
    }

    pub fn cospan(self) -> Cospan {
        Cospan::from_function(&self.function())
    }
}
