//! Decorated cospans: cospans whose apex carries a decoration, composed by
//! pushing the tensor of the two decorations along the copairing of the
//! pushout legs.
//!
//! Morphisms are kept as representatives. Equality of morphisms is decided by
//! [`DecoratedCategory::iso`], which looks for a cospan isomorphism that also
//! transports one decoration onto the other.

use crate::cospan::{Cospan, CospanIso, Frobenius, IsoSearch, Structure, DEFAULT_BUDGET};
use crate::decoration::{DecorationFunctor, DecorationTransformation, Endofunctor};
use crate::error::{Error, Result};
use crate::finset::{FinFunction, FinSet};

#[derive(Debug, Clone, PartialEq)]
pub struct DecoratedCospan<D> {
    pub cospan: Cospan,
    pub decoration: D,
}

impl<D> DecoratedCospan<D> {
    pub fn left_foot(&self) -> FinSet {
        self.cospan.left_foot()
    }

    pub fn right_foot(&self) -> FinSet {
        self.cospan.right_foot()
    }

    pub fn apex(&self) -> FinSet {
        self.cospan.apex()
    }
}

/// An apex bijection that is a map of cospans and transports decorations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoratedIso {
    pub iso: CospanIso,
}

/// The decorated cospan category of a decoration functor.
#[derive(Debug, Clone, Copy)]
pub struct DecoratedCategory<'f, F> {
    functor: &'f F,
    budget: u64,
}

/// The four Frobenius generators on one object.
#[derive(Debug, Clone)]
pub struct DecoratedFrobenius<D> {
    pub mu: DecoratedCospan<D>,
    pub eta: DecoratedCospan<D>,
    pub delta: DecoratedCospan<D>,
    pub epsilon: DecoratedCospan<D>,
}

impl<'f, F: DecorationFunctor> DecoratedCategory<'f, F> {
    pub fn new(functor: &'f F) -> Self {
        DecoratedCategory { functor, budget: DEFAULT_BUDGET }
    }

    /// Caps the nodes visited by each isomorphism search.
    pub fn with_budget(self, budget: u64) -> Self {
        DecoratedCategory { budget, ..self }
    }

    pub fn functor(&self) -> &'f F {
        self.functor
    }

    /// Pairs a cospan with a decoration, checking it lives on the apex.
    pub fn decorate(&self, cospan: Cospan, decoration: F::Decoration) -> Result<DecoratedCospan<F::Decoration>> {
        let apex = cospan.apex();
        if let Err(e) = self.functor.validate(&decoration) {
            return Err(Error::CarrierViolation { apex: apex.size(), reason: e.to_string() });
        }
        let support = self.functor.support(&decoration);
        if support != apex {
            return Err(Error::CarrierViolation {
                apex: apex.size(),
                reason: format!("decoration lives on a set of size {support}"),
            });
        }
        Ok(DecoratedCospan { cospan, decoration })
    }

    /// `first ; second`.
    pub fn compose(
        &self,
        first: &DecoratedCospan<F::Decoration>,
        second: &DecoratedCospan<F::Decoration>,
    ) -> Result<DecoratedCospan<F::Decoration>> {
        let (cospan, glue) = first.cospan.compose_with_pushout(&second.cospan)?;
        let joined = self.functor.tensor(&first.decoration, &second.decoration);
        let decoration = self.functor.map_along(&glue.copairing(), &joined)?;
        Ok(DecoratedCospan { cospan, decoration })
    }

    pub fn identity(&self, x: FinSet) -> DecoratedCospan<F::Decoration> {
        self.embed(&Cospan::identity(x))
    }

    /// The cospan with the empty decoration on its apex.
    pub fn embed(&self, cospan: &Cospan) -> DecoratedCospan<F::Decoration> {
        DecoratedCospan {
            cospan: cospan.clone(),
            decoration: self.functor.empty_decoration(cospan.apex()),
        }
    }

    pub fn tensor(
        &self,
        a: &DecoratedCospan<F::Decoration>,
        b: &DecoratedCospan<F::Decoration>,
    ) -> DecoratedCospan<F::Decoration> {
        DecoratedCospan {
            cospan: a.cospan.tensor(&b.cospan),
            decoration: self.functor.tensor(&a.decoration, &b.decoration),
        }
    }

    pub fn frobenius(&self, x: FinSet) -> DecoratedFrobenius<F::Decoration> {
        let Frobenius { mu, eta, delta, epsilon } = Frobenius::on(x);
        DecoratedFrobenius {
            mu: self.embed(&mu),
            eta: self.embed(&eta),
            delta: self.embed(&delta),
            epsilon: self.embed(&epsilon),
        }
    }

    pub fn structure(&self, kind: Structure) -> DecoratedCospan<F::Decoration> {
        self.embed(&kind.cospan())
    }

    /// Opposite cospan, same decoration.
    pub fn dagger(&self, d: &DecoratedCospan<F::Decoration>) -> DecoratedCospan<F::Decoration> {
        DecoratedCospan { cospan: d.cospan.opposite(), decoration: d.decoration.clone() }
    }

    /// The dual built from decorated cups and caps; agrees with
    /// [`Self::dagger`] up to isomorphism.
    pub fn dual(&self, d: &DecoratedCospan<F::Decoration>) -> Result<DecoratedCospan<F::Decoration>> {
        let x = d.left_foot();
        let y = d.right_foot();
        let fx = self.frobenius(x);
        let fy = self.frobenius(y);
        let cup = self.compose(&fx.eta, &fx.delta)?;
        let cap = self.compose(&fy.mu, &fy.epsilon)?;
        let step1 = self.tensor(&self.identity(y), &cup);
        let step2 = self.tensor(&self.tensor(&self.identity(y), d), &self.identity(x));
        let step3 = self.tensor(&cap, &self.identity(x));
        self.compose(&self.compose(&step1, &step2)?, &step3)
    }

    /// Transports a decorated cospan along an apex bijection.
    pub fn relabel(
        &self,
        d: &DecoratedCospan<F::Decoration>,
        bijection: &FinFunction,
    ) -> Result<DecoratedCospan<F::Decoration>> {
        if !bijection.is_bijection() {
            return Err(Error::LawViolation("relabelling must be a bijection".into()));
        }
        Ok(DecoratedCospan {
            cospan: d.cospan.push_apex(bijection)?,
            decoration: self.functor.map_along(bijection, &d.decoration)?,
        })
    }

    /// Whether `witness` is a decorated isomorphism `source -> target`.
    pub fn witnesses(
        &self,
        witness: &DecoratedIso,
        source: &DecoratedCospan<F::Decoration>,
        target: &DecoratedCospan<F::Decoration>,
    ) -> bool {
        witness.iso.witnesses(&source.cospan, &target.cospan)
            && self
                .functor
                .map_along(witness.iso.bijection(), &source.decoration)
                .is_ok_and(|moved| self.functor.equal(&moved, &target.decoration))
    }

    /// Exact search for a decorated isomorphism.
    pub fn iso(
        &self,
        source: &DecoratedCospan<F::Decoration>,
        target: &DecoratedCospan<F::Decoration>,
    ) -> Result<Option<DecoratedIso>> {
        if self.functor.support(&source.decoration) != source.apex()
            || self.functor.support(&target.decoration) != target.apex()
        {
            return Ok(None);
        }
        let mut search = IsoSearch::new(&source.cospan, &target.cospan).budget(self.budget);
        if let (Some(a), Some(b)) = (
            self.functor.vertex_colors(&source.decoration),
            self.functor.vertex_colors(&target.decoration),
        ) {
            search = search.colors(a, b);
        }
        let found = search.find_where(|n| {
            self.functor
                .map_along(n, &source.decoration)
                .is_ok_and(|moved| self.functor.equal(&moved, &target.decoration))
        })?;
        Ok(found.map(|iso| DecoratedIso { iso }))
    }

    pub fn isomorphic(
        &self,
        a: &DecoratedCospan<F::Decoration>,
        b: &DecoratedCospan<F::Decoration>,
    ) -> Result<bool> {
        self.iso(a, b).map(|w| w.is_some())
    }
}

/// Image of a decorated cospan under the functor induced by a transformation
/// `θ: F ⇒ G ∘ A`: legs and feet go through `A`, the decoration through
/// `θ_N`.
pub fn apply_functor<T, A>(
    theta: &T,
    endo: &A,
    d: &DecoratedCospan<<T::Source as DecorationFunctor>::Decoration>,
) -> Result<DecoratedCospan<<T::Target as DecorationFunctor>::Decoration>>
where
    T: DecorationTransformation,
    A: Endofunctor,
{
    let apex = d.apex();
    let a_apex = endo.on_object(apex);
    let left = endo.on_morphism(d.cospan.left());
    let right = endo.on_morphism(d.cospan.right());
    let shape_ok = left.dom() == endo.on_object(d.left_foot())
        && right.dom() == endo.on_object(d.right_foot())
        && left.cod() == a_apex
        && right.cod() == a_apex
        && endo.on_morphism(&FinFunction::identity(apex)).is_identity();
    if !shape_ok {
        return Err(Error::LawViolation("endofunctor is not functorial on this cospan".into()));
    }
    let decoration = theta.component(apex, &d.decoration)?;
    let support = theta.target().support(&decoration);
    if support != a_apex {
        return Err(Error::LawViolation(format!(
            "transformation component lands on a set of size {support}, expected {a_apex}"
        )));
    }
    Ok(DecoratedCospan { cospan: Cospan::new(left, right)?, decoration })
}

/// The coherence isomorphism `A X + A Y -> A (X + Y)` of the induced
/// functor, as an empty-decorated cospan in the target category.
pub fn functor_coherence<G, A>(target: &G, endo: &A, x: FinSet, y: FinSet) -> DecoratedCospan<G::Decoration>
where
    G: DecorationFunctor,
    A: Endofunctor,
{
    DecoratedCategory::new(target).embed(&Cospan::from_function(&endo.coherence(x, y)))
}

/// The identity functor on `(FinSet, +)` viewed as a decoration functor:
/// a decoration on `N` is the unique map `∅ -> N`.
#[derive(Debug, Clone, Copy, Default)]
pub struct InitialDecoration;

impl DecorationFunctor for InitialDecoration {
    type Decoration = FinFunction;

    fn name(&self) -> &str {
        "initial"
    }

    fn support(&self, d: &FinFunction) -> FinSet {
        d.cod()
    }

    fn validate(&self, d: &FinFunction) -> Result<()> {
        if d.dom().is_empty() {
            Ok(())
        } else {
            Err(Error::CarrierViolation {
                apex: d.cod().size(),
                reason: "decorations are maps out of the empty set".into(),
            })
        }
    }

    fn map_along(&self, f: &FinFunction, d: &FinFunction) -> Result<FinFunction> {
        d.then(f)
    }

    fn tensor(&self, a: &FinFunction, b: &FinFunction) -> FinFunction {
        a.sum(b)
    }

    fn unit(&self) -> FinFunction {
        FinFunction::bang(FinSet::EMPTY)
    }

    fn equal(&self, a: &FinFunction, b: &FinFunction) -> bool {
        a == b
    }
}
