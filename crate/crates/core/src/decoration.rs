//! Decoration functors `(FinSet, +) -> (Set, ×)`, monoidal natural
//! transformations between them, and a seeded harness checking their laws.
//!
//! The target is always sets with cartesian product, so a decoration is a
//! single value and the unitors, associator and braiding of the target act
//! trivially on data. The lax structure reduces to [`DecorationFunctor::tensor`]
//! and [`DecorationFunctor::unit`].

use std::fmt::Debug;

use crate::error::Result;
use crate::finset::{braiding, FinFunction, FinSet};
use crate::gen;
use crate::report::{ensure, CaseRng, LawReport, Runner, Sizes};

/// A lax symmetric monoidal functor `F: (FinSet, +) -> (Set, ×)`.
pub trait DecorationFunctor: Send + Sync {
    type Decoration: Clone + Debug + Send + Sync;

    fn name(&self) -> &str;

    /// The set `N` a decoration lives on.
    fn support(&self, d: &Self::Decoration) -> FinSet;

    /// Internal consistency of a decoration (labels, canonical form).
    fn validate(&self, d: &Self::Decoration) -> Result<()>;

    /// The functor action `F f`.
    fn map_along(&self, f: &FinFunction, d: &Self::Decoration) -> Result<Self::Decoration>;

    /// `φ_{N,M}` applied to a pair.
    fn tensor(&self, a: &Self::Decoration, b: &Self::Decoration) -> Self::Decoration;

    /// `φ_1` applied to the point.
    fn unit(&self) -> Self::Decoration;

    fn equal(&self, a: &Self::Decoration, b: &Self::Decoration) -> bool;

    /// Optional per-vertex invariants, preserved by every bijection that
    /// transports one decoration onto another; used to prune iso search.
    fn vertex_colors(&self, _d: &Self::Decoration) -> Option<Vec<u64>> {
        None
    }

    fn in_carrier(&self, n: FinSet, d: &Self::Decoration) -> bool {
        self.support(d) == n && self.validate(d).is_ok()
    }

    /// The unit pushed along `!: ∅ -> N`.
    fn empty_decoration(&self, n: FinSet) -> Self::Decoration {
        self.map_along(&FinFunction::bang(n), &self.unit())
            .expect("the unit lives on the empty set")
    }
}

/// A monoidal natural transformation between decoration functors.
pub trait DecorationTransformation: Send + Sync {
    type Source: DecorationFunctor;
    type Target: DecorationFunctor;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;

    fn component(
        &self,
        n: FinSet,
        d: &<Self::Source as DecorationFunctor>::Decoration,
    ) -> Result<<Self::Target as DecorationFunctor>::Decoration>;
}

/// The identity transformation on a functor.
#[derive(Debug, Clone, Default)]
pub struct IdentityTransformation<F>(pub F);

impl<F: DecorationFunctor> DecorationTransformation for IdentityTransformation<F> {
    type Source = F;
    type Target = F;

    fn source(&self) -> &F {
        &self.0
    }

    fn target(&self) -> &F {
        &self.0
    }

    fn component(&self, _n: FinSet, d: &F::Decoration) -> Result<F::Decoration> {
        Ok(d.clone())
    }
}

/// A coproduct-preserving endofunctor of `FinSet` with its coherence
/// isomorphisms `A(X) + A(Y) -> A(X + Y)`.
pub trait Endofunctor: Send + Sync {
    fn on_object(&self, x: FinSet) -> FinSet;
    fn on_morphism(&self, f: &FinFunction) -> FinFunction;
    fn coherence(&self, x: FinSet, y: FinSet) -> FinFunction;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IdentityEndofunctor;

impl Endofunctor for IdentityEndofunctor {
    fn on_object(&self, x: FinSet) -> FinSet {
        x
    }

    fn on_morphism(&self, f: &FinFunction) -> FinFunction {
        f.clone()
    }

    fn coherence(&self, x: FinSet, y: FinSet) -> FinFunction {
        FinFunction::identity(x.plus(y))
    }
}

/// A sampler of decorations on a given set, bounded by a decoration size.
pub trait Sampler<D>: Fn(&mut CaseRng, FinSet, usize) -> D + Sync {}
impl<D, S: Fn(&mut CaseRng, FinSet, usize) -> D + Sync> Sampler<D> for S {}

fn same<F: DecorationFunctor>(
    functor: &F,
    n: FinSet,
    lhs: &F::Decoration,
    rhs: &F::Decoration,
) -> std::result::Result<(), String> {
    ensure(functor.in_carrier(n, lhs), || format!("{lhs:?} is not a decoration on {n}"))?;
    ensure(functor.in_carrier(n, rhs), || format!("{rhs:?} is not a decoration on {n}"))?;
    ensure(functor.equal(lhs, rhs), || format!("{lhs:?} != {rhs:?}"))
}

fn err(e: crate::error::Error) -> String {
    e.to_string()
}

/// Checks the functor, monoidal and symmetry laws of a decoration functor.
pub fn check_functor_laws<F, S>(functor: &F, sample: S, runner: &Runner) -> LawReport
where
    F: DecorationFunctor,
    S: Sampler<F::Decoration>,
{
    let mut report = LawReport::new(format!("{}-functor", functor.name()), runner);

    report.push(runner.law("identity", |rng, Sizes { max_set, max_decoration }| {
        let n = gen::set(rng, max_set);
        let d = sample(rng, n, max_decoration);
        let mapped = functor.map_along(&FinFunction::identity(n), &d).map_err(err)?;
        same(functor, n, &mapped, &d).map_err(|e| format!("F(1) on {d:?}: {e}"))
    }));

    report.push(runner.law("composition", |rng, Sizes { max_set, max_decoration }| {
        let n = gen::set(rng, max_set);
        let f = gen::function_from(rng, n, max_set);
        let g = gen::function_from(rng, f.cod(), max_set);
        let d = sample(rng, n, max_decoration);
        let gf = f.then(&g).map_err(err)?;
        let direct = functor.map_along(&gf, &d).map_err(err)?;
        let stepwise = functor
            .map_along(&g, &functor.map_along(&f, &d).map_err(err)?)
            .map_err(err)?;
        same(functor, g.cod(), &direct, &stepwise)
            .map_err(|e| format!("f = {f:?}, g = {g:?}, d = {d:?}: {e}"))
    }));

    report.push(runner.law("tensor-naturality", |rng, Sizes { max_set, max_decoration }| {
        let n = gen::set(rng, max_set);
        let m = gen::set(rng, max_set);
        let f = gen::function_from(rng, n, max_set);
        let g = gen::function_from(rng, m, max_set);
        let d1 = sample(rng, n, max_decoration);
        let d2 = sample(rng, m, max_decoration);
        let lhs = functor.map_along(&f.sum(&g), &functor.tensor(&d1, &d2)).map_err(err)?;
        let rhs = functor.tensor(
            &functor.map_along(&f, &d1).map_err(err)?,
            &functor.map_along(&g, &d2).map_err(err)?,
        );
        same(functor, f.cod().plus(g.cod()), &lhs, &rhs)
            .map_err(|e| format!("f = {f:?}, g = {g:?}, d1 = {d1:?}, d2 = {d2:?}: {e}"))
    }));

    report.push(runner.law("associativity", |rng, Sizes { max_set, max_decoration }| {
        let sets = [gen::set(rng, max_set), gen::set(rng, max_set), gen::set(rng, max_set)];
        let [d1, d2, d3] = sets.map(|s| sample(rng, s, max_decoration));
        let assoc = crate::cospan::Structure::Associator(sets[0], sets[1], sets[2]).function();
        let lhs = functor
            .map_along(&assoc, &functor.tensor(&functor.tensor(&d1, &d2), &d3))
            .map_err(err)?;
        let rhs = functor.tensor(&d1, &functor.tensor(&d2, &d3));
        same(functor, assoc.cod(), &lhs, &rhs)
            .map_err(|e| format!("d1 = {d1:?}, d2 = {d2:?}, d3 = {d3:?}: {e}"))
    }));

    report.push(runner.law("left-unit", |rng, Sizes { max_set, max_decoration }| {
        let n = gen::set(rng, max_set);
        let d = sample(rng, n, max_decoration);
        let unitor = crate::cospan::Structure::LeftUnitor(n).function();
        let lhs = functor.map_along(&unitor, &functor.tensor(&functor.unit(), &d)).map_err(err)?;
        same(functor, n, &lhs, &d).map_err(|e| format!("d = {d:?}: {e}"))
    }));

    report.push(runner.law("right-unit", |rng, Sizes { max_set, max_decoration }| {
        let n = gen::set(rng, max_set);
        let d = sample(rng, n, max_decoration);
        let unitor = crate::cospan::Structure::RightUnitor(n).function();
        let lhs = functor.map_along(&unitor, &functor.tensor(&d, &functor.unit())).map_err(err)?;
        same(functor, n, &lhs, &d).map_err(|e| format!("d = {d:?}: {e}"))
    }));

    report.push(runner.law("symmetry", |rng, Sizes { max_set, max_decoration }| {
        let n = gen::set(rng, max_set);
        let m = gen::set(rng, max_set);
        let d1 = sample(rng, n, max_decoration);
        let d2 = sample(rng, m, max_decoration);
        let lhs = functor.map_along(&braiding(n, m), &functor.tensor(&d1, &d2)).map_err(err)?;
        let rhs = functor.tensor(&d2, &d1);
        same(functor, m.plus(n), &lhs, &rhs)
            .map_err(|e| format!("d1 = {d1:?}, d2 = {d2:?}: {e}"))
    }));

    report
}

/// Checks naturality, monoidality and the unit law of a transformation.
pub fn check_transformation_laws<T, S>(theta: &T, sample: S, runner: &Runner) -> LawReport
where
    T: DecorationTransformation,
    S: Sampler<<T::Source as DecorationFunctor>::Decoration>,
{
    let src = theta.source();
    let tgt = theta.target();
    let mut report = LawReport::new(format!("{}-to-{}", src.name(), tgt.name()), runner);

    report.push(runner.law("naturality", |rng, Sizes { max_set, max_decoration }| {
        let n = gen::set(rng, max_set);
        let f = gen::function_from(rng, n, max_set);
        let d = sample(rng, n, max_decoration);
        let lhs = theta
            .component(f.cod(), &src.map_along(&f, &d).map_err(err)?)
            .map_err(err)?;
        let rhs = tgt.map_along(&f, &theta.component(n, &d).map_err(err)?).map_err(err)?;
        same(tgt, f.cod(), &lhs, &rhs).map_err(|e| format!("f = {f:?}, d = {d:?}: {e}"))
    }));

    report.push(runner.law("monoidality", |rng, Sizes { max_set, max_decoration }| {
        let n = gen::set(rng, max_set);
        let m = gen::set(rng, max_set);
        let d1 = sample(rng, n, max_decoration);
        let d2 = sample(rng, m, max_decoration);
        let lhs = theta.component(n.plus(m), &src.tensor(&d1, &d2)).map_err(err)?;
        let rhs = tgt.tensor(
            &theta.component(n, &d1).map_err(err)?,
            &theta.component(m, &d2).map_err(err)?,
        );
        same(tgt, n.plus(m), &lhs, &rhs).map_err(|e| format!("d1 = {d1:?}, d2 = {d2:?}: {e}"))
    }));

    report.push(runner.once("unit", || {
        let lhs = theta.component(FinSet::EMPTY, &src.unit()).map_err(err)?;
        same(tgt, FinSet::EMPTY, &lhs, &tgt.unit())
    }));

    report
}
