//! Named, seeded law suites over the shipped instances.
//!
//! Every suite returns one or more [`LawReport`]s. Equalities of morphisms
//! are always checked up to (decorated) isomorphism unless a law says
//! otherwise.

use std::fmt::Debug;

use crate::circuits::{self, behavior, oracle_nodal, res_component, state_behavior, Res};
use crate::cospan::{iso_search, Cospan, Frobenius, Structure};
use crate::dcospan::{apply_functor, functor_coherence, DecoratedCategory, DecoratedCospan, InitialDecoration};
use crate::decoration::{
    check_functor_laws, check_transformation_laws, DecorationFunctor, DecorationTransformation,
    IdentityEndofunctor, IdentityTransformation, Sampler,
};
use crate::error::{Error, Result};
use crate::finset::{braiding, copair, coproduct, pushout, FinFunction, FinSet};
use crate::fixtures;
use crate::gen;
use crate::graphdec::{GraphFunctor, LabeledGraph};
use crate::linrel::{subspace_equal, LinSubFunctor, Subspace};
use crate::report::{ensure, CaseRng, LawReport, LawResult, Runner, Sizes};
use crate::scalar::Scalar;
use crate::Rational;

type Graphs = GraphFunctor<Rational>;
type States = LinSubFunctor<Rational>;

/// Suite names with their default case counts, in the order `all` runs them.
pub const SUITES: &[(&str, usize)] = &[
    ("finset", 200),
    ("cospan", 200),
    ("graph-functor", 500),
    ("linsub-functor", 500),
    ("res-transformation", 300),
    ("decorated-graph", 200),
    ("decorated-linsub", 200),
    ("hypergraph", 200),
    ("initial-decoration", 200),
    ("res-functor", 200),
    ("semantics", 300),
];

/// Deliberately broken instances; every report here is expected to fail.
pub const PLANTED: &str = "planted";

pub const GRAPH_SIZES: Sizes = Sizes::new(6, 8);
pub const LINSUB_SIZES: Sizes = Sizes::new(4, 4);
pub const DECORATED_GRAPH_SIZES: Sizes = Sizes::new(4, 5);
pub const DECORATED_LINSUB_SIZES: Sizes = Sizes::new(3, 3);
pub const CIRCUIT_SIZES: Sizes = Sizes::new(6, 8);
const MAX_FOOT: usize = 3;
const MAX_OBJECT: usize = 4;

/// Runs one named suite (or [`PLANTED`]); `None` for an unknown name.
pub fn run(name: &str, seed: u64, cases: Option<usize>) -> Option<Vec<LawReport>> {
    let default = SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, c)| *c)
        .or_else(|| (name == PLANTED).then_some(200))?;
    let runner = |sizes| Runner::new(seed, cases.unwrap_or(default), sizes);
    let reports = match name {
        "finset" => vec![finset_suite(&runner(Sizes::new(4, 0)))],
        "cospan" => vec![cospan_suite(&runner(Sizes::new(4, 0)))],
        "graph-functor" => vec![graph_functor(&runner(GRAPH_SIZES))],
        "linsub-functor" => vec![linsub_functor(&runner(LINSUB_SIZES))],
        "res-transformation" => vec![res_transformation(&runner(GRAPH_SIZES))],
        "decorated-graph" => {
            let r = runner(DECORATED_GRAPH_SIZES);
            vec![decorated_laws(&Graphs::new(), sample_graph, &r), induced_laws(&Res::new(), sample_graph, &r)]
        }
        "decorated-linsub" => {
            let r = runner(DECORATED_LINSUB_SIZES);
            let id = IdentityTransformation(States::new());
            vec![decorated_laws(&States::new(), sample_linsub, &r), induced_laws(&id, sample_linsub, &r)]
        }
        "hypergraph" => hypergraph_suites(seed, cases.unwrap_or(default)),
        "initial-decoration" => vec![initial_decoration(&runner(Sizes::new(4, 0)))],
        "res-functor" => vec![induced_laws(&Res::new(), sample_graph, &runner(DECORATED_GRAPH_SIZES))],
        "semantics" => vec![semantics(&runner(CIRCUIT_SIZES))],
        PLANTED => planted_faults(seed, cases.unwrap_or(default)),
        _ => return None,
    };
    Some(reports)
}

/// Runs every suite in [`SUITES`], leaving out the planted faults. Suites
/// run on separate threads; reports come back in [`SUITES`] order.
pub fn run_all(seed: u64, cases: Option<usize>) -> Vec<LawReport> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = SUITES
            .iter()
            .map(|(name, _)| scope.spawn(move || run(name, seed, cases).expect("listed suites exist")))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite threads catch law panics"))
            .collect()
    })
}

fn err(e: Error) -> String {
    e.to_string()
}

pub fn sample_graph(rng: &mut CaseRng, n: FinSet, max_edges: usize) -> LabeledGraph<Rational> {
    gen::graph(rng, n, max_edges)
}

pub fn sample_linsub(rng: &mut CaseRng, n: FinSet, max_dim: usize) -> Subspace<Rational> {
    gen::linsub(rng, n, max_dim)
}

fn graph_functor(runner: &Runner) -> LawReport {
    check_functor_laws(&Graphs::new(), sample_graph, runner)
}

fn linsub_functor(runner: &Runner) -> LawReport {
    check_functor_laws(&States::new(), sample_linsub, runner)
}

fn res_transformation(runner: &Runner) -> LawReport {
    check_transformation_laws(&Res::<Rational>::new(), sample_graph, runner)
}

fn finset_suite(runner: &Runner) -> LawReport {
    let mut report = LawReport::new("finset", runner);

    report.push(runner.law("compose-associative", |rng, s| {
        let dom = gen::set(rng, s.max_set);
        let f = gen::function_from(rng, dom, s.max_set);
        let g = gen::function_from(rng, f.cod(), s.max_set);
        let h = gen::function_from(rng, g.cod(), s.max_set);
        let left = f.then(&g).and_then(|fg| fg.then(&h)).map_err(err)?;
        let right = g.then(&h).and_then(|gh| f.then(&gh)).map_err(err)?;
        ensure(left == right, || format!("f = {f:?}, g = {g:?}, h = {h:?}"))
    }));

    report.push(runner.law("identity-neutral", |rng, s| {
        let dom = gen::set(rng, s.max_set);
        let f = gen::function_from(rng, dom, s.max_set);
        let left = FinFunction::identity(f.dom()).then(&f).map_err(err)?;
        let right = f.then(&FinFunction::identity(f.cod())).map_err(err)?;
        ensure(left == f && right == f, || format!("f = {f:?}"))
    }));

    report.push(runner.law("copair-injections", |rng, s| {
        let a = gen::set(rng, s.max_set);
        let b = gen::set(rng, s.max_set);
        let cod = gen::set_between(rng, usize::from(a.size() + b.size() > 0), s.max_set);
        let f = gen::function(rng, a, cod);
        let g = gen::function(rng, b, cod);
        let (_, inl, inr) = coproduct(a, b);
        let h = copair(&f, &g).map_err(err)?;
        ensure(inl.then(&h).map_err(err)? == f && inr.then(&h).map_err(err)? == g, || {
            format!("f = {f:?}, g = {g:?}")
        })
    }));

    report.push(runner.law("pushout-square", |rng, s| {
        let y = gen::set(rng, s.max_set);
        let f = gen::function_from(rng, y, s.max_set);
        let g = gen::function_from(rng, y, s.max_set);
        let p = pushout(&f, &g).map_err(err)?;
        let top = f.then(&p.left).map_err(err)?;
        let bottom = g.then(&p.right).map_err(err)?;
        ensure(top == bottom, || format!("f = {f:?}, g = {g:?}"))?;
        ensure(p.copairing().is_surjective(), || format!("legs not jointly surjective: {p:?}"))?;
        ensure(p.apex.size() == naive_class_count(&f, &g), || format!("class count, f = {f:?}, g = {g:?}"))
    }));

    report.push(runner.law("pushout-canonical", |rng, s| {
        let y = gen::set(rng, s.max_set);
        let f = gen::function_from(rng, y, s.max_set);
        let g = gen::function_from(rng, y, s.max_set);
        let p = pushout(&f, &g).map_err(err)?;
        // classes appear in order of their least element
        let mut next = 0;
        for &c in p.copairing().table() {
            ensure(c <= next, || format!("class {c} before {next} in {p:?}"))?;
            if c == next {
                next += 1;
            }
        }
        ensure(pushout(&f, &g).map_err(err)? == p, || "pushout is not deterministic".into())
    }));

    report
}

/// Number of classes of the equivalence on `N + M` generated by `f(y) ~ g(y)`,
/// by repeated relaxation of a labelling.
fn naive_class_count(f: &FinFunction, g: &FinFunction) -> usize {
    let n = f.cod().size();
    let total = n + g.cod().size();
    let mut label: Vec<usize> = (0..total).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for y in f.dom().elements() {
            let (a, b) = (f.apply(y), n + g.apply(y));
            let m = label[a].min(label[b]);
            for v in [a, b] {
                if label[v] != m {
                    let old = label[v];
                    label.iter_mut().filter(|l| **l == old).for_each(|l| *l = m);
                    changed = true;
                }
            }
        }
    }
    let mut classes = label;
    classes.sort_unstable();
    classes.dedup();
    classes.len()
}

fn iso_holds(a: &Cospan, b: &Cospan, what: &str) -> LawResult {
    match iso_search(a, b).map_err(err)? {
        Some(w) if w.witnesses(a, b) => Ok(()),
        Some(w) => Err(format!("{what}: bogus witness {w:?}")),
        None => Err(format!("{what}: {a:?} and {b:?} are not isomorphic")),
    }
}

fn cospan_suite(runner: &Runner) -> LawReport {
    let mut report = LawReport::new("cospan", runner);
    let m = |s: Sizes| s.max_set;

    report.push(runner.law("associativity", |rng, s| {
        let [x, y, z, w] = [(); 4].map(|_| gen::set(rng, m(s)));
        let a = gen::cospan_between(rng, x, y, m(s) + 1);
        let b = gen::cospan_between(rng, y, z, m(s) + 1);
        let c = gen::cospan_between(rng, z, w, m(s) + 1);
        let left = a.compose(&b).and_then(|ab| ab.compose(&c)).map_err(err)?;
        let right = b.compose(&c).and_then(|bc| a.compose(&bc)).map_err(err)?;
        iso_holds(&left, &right, "(a;b);c vs a;(b;c)")
    }));

    report.push(runner.law("unit", |rng, s| {
        let c = gen::cospan(rng, m(s), m(s) + 1);
        let left = Cospan::identity(c.left_foot()).compose(&c).map_err(err)?;
        let right = c.compose(&Cospan::identity(c.right_foot())).map_err(err)?;
        iso_holds(&left, &c, "1;c")?;
        iso_holds(&right, &c, "c;1")
    }));

    report.push(runner.law("from-function-functorial", |rng, s| {
        let dom = gen::set(rng, m(s));
        let f = gen::function_from(rng, dom, m(s));
        let g = gen::function_from(rng, f.cod(), m(s));
        let direct = Cospan::from_function(&f.then(&g).map_err(err)?);
        let stepwise = Cospan::from_function(&f).compose(&Cospan::from_function(&g)).map_err(err)?;
        iso_holds(&direct, &stepwise, "from_function(g∘f)")
    }));

    report.push(runner.law("interchange", |rng, s| {
        let [x1, y1, z1, x2, y2, z2] = [(); 6].map(|_| gen::set(rng, m(s)));
        let a = gen::cospan_between(rng, x1, y1, m(s));
        let b = gen::cospan_between(rng, y1, z1, m(s));
        let c = gen::cospan_between(rng, x2, y2, m(s));
        let d = gen::cospan_between(rng, y2, z2, m(s));
        let rows = a.compose(&b).map_err(err)?.tensor(&c.compose(&d).map_err(err)?);
        let cols = a.tensor(&c).compose(&b.tensor(&d)).map_err(err)?;
        iso_holds(&rows, &cols, "interchange")
    }));

    report.push(runner.law("opposite-contravariant", |rng, s| {
        let [x, y, z] = [(); 3].map(|_| gen::set(rng, m(s)));
        let a = gen::cospan_between(rng, x, y, m(s) + 1);
        let b = gen::cospan_between(rng, y, z, m(s) + 1);
        let left = a.compose(&b).map_err(err)?.opposite();
        let right = b.opposite().compose(&a.opposite()).map_err(err)?;
        ensure(a.opposite().opposite() == a, || format!("opposite is not an involution on {a:?}"))?;
        iso_holds(&left, &right, "(a;b)^op")
    }));

    report.push(runner.law("iso-search-relabel", |rng, s| {
        let c = gen::cospan(rng, m(s), m(s) + 2);
        let p = gen::permutation(rng, c.apex());
        let moved = c.push_apex(&p).map_err(err)?;
        let w = iso_search(&c, &moved).map_err(err)?.ok_or_else(|| format!("relabelling of {c:?} missed"))?;
        ensure(w.witnesses(&c, &moved), || "bad witness".into())?;
        ensure(w.inverse().witnesses(&moved, &c), || "inverse witness fails".into())?;
        let again = gen::permutation(rng, c.apex());
        let third = moved.push_apex(&again).map_err(err)?;
        let w2 = iso_search(&moved, &third).map_err(err)?.ok_or("second relabelling missed")?;
        ensure(w.then(&w2).map_err(err)?.witnesses(&c, &third), || "composite witness fails".into())
    }));

    report.push(runner.law("iso-search-rejects", |rng, s| {
        let c = gen::cospan(rng, m(s), m(s) + 2);
        if c.left_foot().is_empty() || c.apex().size() < 2 {
            return Ok(());
        }
        let k = rng.gen_range_usize(c.left_foot().size());
        let mut table = c.left().table().to_vec();
        table[k] = (table[k] + 1) % c.apex().size();
        let perturbed = Cospan::new(FinFunction::new(c.apex().size(), table).map_err(err)?, c.right().clone())
            .map_err(err)?;
        let found = iso_search(&c, &perturbed).map_err(err)?;
        if fiber_profile(&c) != fiber_profile(&perturbed) {
            ensure(found.is_none(), || format!("{c:?} matched {perturbed:?}"))?;
        }
        if let Some(w) = found {
            ensure(w.witnesses(&c, &perturbed), || "bad witness".into())?;
        }
        Ok(())
    }));

    report.push(runner.law("braiding", |rng, s| {
        let [x, y, z] = [(); 3].map(|_| gen::set(rng, m(s)));
        let sxy = Structure::Braiding(x, y).cospan();
        let syx = Structure::Braiding(y, x).cospan();
        iso_holds(&sxy.compose(&syx).map_err(err)?, &Cospan::identity(x.plus(y)), "σ;σ")?;
        // hexagon: σ_{X, Y+Z} = (σ_{X,Y} ⊗ 1_Z);(1_Y ⊗ σ_{X,Z})
        let lhs = Structure::Braiding(x, y.plus(z)).cospan();
        let rhs = Structure::Braiding(x, y)
            .cospan()
            .tensor(&Cospan::identity(z))
            .compose(&Cospan::identity(y).tensor(&Structure::Braiding(x, z).cospan()))
            .map_err(err)?;
        iso_holds(&lhs, &rhs, "hexagon")?;
        let unit = Structure::Braiding(FinSet::EMPTY, x).cospan();
        ensure(unit == Cospan::identity(x), || "σ_{∅,X} is not the identity".into())
    }));

    report
}

/// Sorted multiset of (left fibre, right fibre) sizes over the apex.
fn fiber_profile(c: &Cospan) -> Vec<(usize, usize)> {
    let l = c.left().fibers();
    let r = c.right().fibers();
    let mut p: Vec<_> = l.iter().zip(&r).map(|(a, b)| (a.len(), b.len())).collect();
    p.sort_unstable();
    p
}

trait RangeExt {
    fn gen_range_usize(&mut self, n: usize) -> usize;
}

impl RangeExt for CaseRng {
    fn gen_range_usize(&mut self, n: usize) -> usize {
        rand::Rng::gen_range(self, 0..n)
    }
}

fn decorated_iso<F: DecorationFunctor>(
    cat: &DecoratedCategory<'_, F>,
    a: &DecoratedCospan<F::Decoration>,
    b: &DecoratedCospan<F::Decoration>,
    what: &str,
) -> LawResult {
    match cat.iso(a, b).map_err(err)? {
        Some(w) if cat.witnesses(&w, a, b) => Ok(()),
        Some(w) => Err(format!("{what}: bogus witness {w:?}")),
        None => Err(format!("{what}: {a:?} and {b:?} are not isomorphic")),
    }
}

fn arrow<F, S>(
    rng: &mut CaseRng,
    sample: &S,
    x: FinSet,
    y: FinSet,
    sizes: Sizes,
) -> DecoratedCospan<F::Decoration>
where
    F: DecorationFunctor,
    S: Sampler<F::Decoration>,
{
    let cospan = gen::cospan_between(rng, x, y, sizes.max_set);
    let decoration = sample(rng, cospan.apex(), sizes.max_decoration);
    DecoratedCospan { cospan, decoration }
}

fn foot(rng: &mut CaseRng, s: Sizes) -> FinSet {
    gen::set(rng, s.max_set.min(MAX_FOOT))
}

/// Composition and monoidal laws of `F`-decorated cospans.
pub fn decorated_laws<F, S>(functor: &F, sample: S, runner: &Runner) -> LawReport
where
    F: DecorationFunctor,
    S: Sampler<F::Decoration>,
{
    let cat = DecoratedCategory::new(functor);
    let mut report = LawReport::new(format!("decorated-{}", functor.name()), runner);
    let arrow = |rng: &mut CaseRng, x, y, s| arrow::<F, S>(rng, &sample, x, y, s);

    report.push(runner.law("representation-independence", |rng, s| {
        let [x, y, z] = [(); 3].map(|_| foot(rng, s));
        let d1 = arrow(rng, x, y, s);
        let d2 = arrow(rng, y, z, s);
        let p1 = gen::permutation(rng, d1.apex());
        let p2 = gen::permutation(rng, d2.apex());
        let e1 = cat.relabel(&d1, &p1).map_err(err)?;
        let e2 = cat.relabel(&d2, &p2).map_err(err)?;
        let a = cat.compose(&d1, &d2).map_err(err)?;
        let b = cat.compose(&e1, &e2).map_err(err)?;
        decorated_iso(&cat, &a, &b, "composites of isomorphic representatives")
    }));

    report.push(runner.law("associativity", |rng, s| {
        let [x, y, z, w] = [(); 4].map(|_| foot(rng, s));
        let d1 = arrow(rng, x, y, s);
        let d2 = arrow(rng, y, z, s);
        let d3 = arrow(rng, z, w, s);
        let left = cat.compose(&cat.compose(&d1, &d2).map_err(err)?, &d3).map_err(err)?;
        let right = cat.compose(&d1, &cat.compose(&d2, &d3).map_err(err)?).map_err(err)?;
        decorated_iso(&cat, &left, &right, "(d1;d2);d3 vs d1;(d2;d3)")
    }));

    report.push(runner.law("identities", |rng, s| {
        let [x, y] = [(); 2].map(|_| foot(rng, s));
        let d = arrow(rng, x, y, s);
        let left = cat.compose(&cat.identity(x), &d).map_err(err)?;
        let right = cat.compose(&d, &cat.identity(y)).map_err(err)?;
        decorated_iso(&cat, &left, &d, "1;d")?;
        decorated_iso(&cat, &right, &d, "d;1")
    }));

    report.push(runner.law("empty-decoration", |rng, s| {
        let [x, y, z] = [(); 3].map(|_| foot(rng, s));
        let d = arrow(rng, x, y, s);
        let c = gen::cospan_between(rng, y, z, s.max_set);
        let after = cat.compose(&d, &cat.embed(&c)).map_err(err)?;
        let (_, glue) = d.cospan.compose_with_pushout(&c).map_err(err)?;
        let pushed = functor.map_along(&glue.left, &d.decoration).map_err(err)?;
        ensure(functor.equal(&after.decoration, &pushed), || {
            format!("d = {d:?}, c = {c:?}: {:?} != {pushed:?}", after.decoration)
        })?;
        let b = gen::cospan_between(rng, z, x, s.max_set);
        let before = cat.compose(&cat.embed(&b), &d).map_err(err)?;
        let (_, glue) = b.compose_with_pushout(&d.cospan).map_err(err)?;
        let pushed = functor.map_along(&glue.right, &d.decoration).map_err(err)?;
        ensure(functor.equal(&before.decoration, &pushed), || {
            format!("b = {b:?}, d = {d:?}: {:?} != {pushed:?}", before.decoration)
        })
    }));

    report.push(runner.law("embedding-functorial", |rng, s| {
        let [x, y, z] = [(); 3].map(|_| foot(rng, s));
        let c1 = gen::cospan_between(rng, x, y, s.max_set);
        let c2 = gen::cospan_between(rng, y, z, s.max_set);
        let whole = cat.embed(&c1.compose(&c2).map_err(err)?);
        let parts = cat.compose(&cat.embed(&c1), &cat.embed(&c2)).map_err(err)?;
        decorated_iso(&cat, &whole, &parts, "embed(c1;c2)")
    }));

    report.push(runner.law("interchange", |rng, s| {
        let [x1, y1, z1, x2, y2, z2] = [(); 6].map(|_| foot(rng, s));
        let d1 = arrow(rng, x1, y1, s);
        let d2 = arrow(rng, y1, z1, s);
        let d3 = arrow(rng, x2, y2, s);
        let d4 = arrow(rng, y2, z2, s);
        let rows = cat.tensor(&cat.compose(&d1, &d2).map_err(err)?, &cat.compose(&d3, &d4).map_err(err)?);
        let cols = cat.compose(&cat.tensor(&d1, &d3), &cat.tensor(&d2, &d4)).map_err(err)?;
        decorated_iso(&cat, &rows, &cols, "interchange")
    }));

    report.push(runner.law("braiding-natural", |rng, s| {
        let [x1, y1, x2, y2] = [(); 4].map(|_| foot(rng, s));
        let d1 = arrow(rng, x1, y1, s);
        let d2 = arrow(rng, x2, y2, s);
        let left = cat
            .compose(&cat.tensor(&d1, &d2), &cat.structure(Structure::Braiding(y1, y2)))
            .map_err(err)?;
        let right = cat
            .compose(&cat.structure(Structure::Braiding(x1, x2)), &cat.tensor(&d2, &d1))
            .map_err(err)?;
        decorated_iso(&cat, &left, &right, "braiding square")
    }));

    report.push(runner.law("unitors-natural", |rng, s| {
        let [x, y] = [(); 2].map(|_| foot(rng, s));
        let d = arrow(rng, x, y, s);
        let unit = cat.identity(FinSet::EMPTY);
        let left = cat
            .compose(&cat.tensor(&unit, &d), &cat.structure(Structure::LeftUnitor(y)))
            .map_err(err)?;
        let right = cat.compose(&cat.structure(Structure::LeftUnitor(x)), &d).map_err(err)?;
        decorated_iso(&cat, &left, &right, "left unitor square")?;
        let left = cat
            .compose(&cat.tensor(&d, &unit), &cat.structure(Structure::RightUnitor(y)))
            .map_err(err)?;
        let right = cat.compose(&cat.structure(Structure::RightUnitor(x)), &d).map_err(err)?;
        decorated_iso(&cat, &left, &right, "right unitor square")
    }));

    report.push(runner.law("associator-natural", |rng, s| {
        let [x1, x2, x3, y1, y2, y3] = [(); 6].map(|_| foot(rng, s));
        let d1 = arrow(rng, x1, y1, s);
        let d2 = arrow(rng, x2, y2, s);
        let d3 = arrow(rng, x3, y3, s);
        let left = cat
            .compose(
                &cat.tensor(&cat.tensor(&d1, &d2), &d3),
                &cat.structure(Structure::Associator(y1, y2, y3)),
            )
            .map_err(err)?;
        let right = cat
            .compose(
                &cat.structure(Structure::Associator(x1, x2, x3)),
                &cat.tensor(&d1, &cat.tensor(&d2, &d3)),
            )
            .map_err(err)?;
        decorated_iso(&cat, &left, &right, "associator square")
    }));

    report
}

/// Laws of the functor induced by a transformation `θ` with `A = 1`:
/// identities, composition, monoidality with its coherence maps, Frobenius
/// generators and dagger.
pub fn induced_laws<Th, S>(theta: &Th, sample: S, runner: &Runner) -> LawReport
where
    Th: DecorationTransformation,
    S: Sampler<<Th::Source as DecorationFunctor>::Decoration>,
{
    let source = DecoratedCategory::new(theta.source());
    let target = DecoratedCategory::new(theta.target());
    let endo = IdentityEndofunctor;
    let t = |d: &DecoratedCospan<_>| apply_functor(theta, &endo, d).map_err(err);
    let arrow = |rng: &mut CaseRng, x, y, s| arrow::<Th::Source, S>(rng, &sample, x, y, s);
    let suite = format!("induced-{}-to-{}", theta.source().name(), theta.target().name());
    let mut report = LawReport::new(suite, runner);

    report.push(runner.law("identities", |rng, s| {
        let x = foot(rng, s);
        decorated_iso(&target, &t(&source.identity(x))?, &target.identity(x), "T(1)")
    }));

    report.push(runner.law("composition", |rng, s| {
        let [x, y, z] = [(); 3].map(|_| foot(rng, s));
        let d1 = arrow(rng, x, y, s);
        let d2 = arrow(rng, y, z, s);
        let whole = t(&source.compose(&d1, &d2).map_err(err)?)?;
        let parts = target.compose(&t(&d1)?, &t(&d2)?).map_err(err)?;
        decorated_iso(&target, &whole, &parts, "T(d1;d2)")
    }));

    report.push(runner.law("coherence", |rng, s| {
        let [x, y] = [(); 2].map(|_| foot(rng, s));
        let coherence = functor_coherence(theta.target(), &endo, x, y);
        let expected = target.identity(x.plus(y));
        decorated_iso(&target, &coherence, &expected, "coherence map")
    }));

    report.push(runner.law("monoidality", |rng, s| {
        let [x1, y1, x2, y2] = [(); 4].map(|_| foot(rng, s));
        let d1 = arrow(rng, x1, y1, s);
        let d2 = arrow(rng, x2, y2, s);
        let left = target
            .compose(&functor_coherence(theta.target(), &endo, x1, x2), &t(&source.tensor(&d1, &d2))?)
            .map_err(err)?;
        let right = target
            .compose(&target.tensor(&t(&d1)?, &t(&d2)?), &functor_coherence(theta.target(), &endo, y1, y2))
            .map_err(err)?;
        decorated_iso(&target, &left, &right, "τ;T(d1⊗d2) vs (Td1⊗Td2);τ")
    }));

    report.push(runner.law("frobenius", |rng, s| {
        let x = gen::set(rng, MAX_OBJECT.min(s.max_set));
        let a = source.frobenius(x);
        let b = target.frobenius(x);
        for (name, g, h) in [("μ", &a.mu, &b.mu), ("η", &a.eta, &b.eta), ("δ", &a.delta, &b.delta), ("ε", &a.epsilon, &b.epsilon)]
        {
            decorated_iso(&target, &t(g)?, h, &format!("T({name}) on {x}"))?;
        }
        Ok(())
    }));

    report.push(runner.law("dagger", |rng, s| {
        let [x, y] = [(); 2].map(|_| foot(rng, s));
        let d = arrow(rng, x, y, s);
        decorated_iso(&target, &t(&source.dagger(&d))?, &target.dagger(&t(&d)?), "T(d†)")
    }));

    report
}

/// The operations a hypergraph category exposes to the law checks below.
trait Hypergraph {
    type Mor: Clone + Debug;
    fn name(&self) -> String;
    fn id(&self, x: FinSet) -> Self::Mor;
    fn then(&self, a: &Self::Mor, b: &Self::Mor) -> Result<Self::Mor>;
    fn tensor(&self, a: &Self::Mor, b: &Self::Mor) -> Self::Mor;
    /// `[μ, η, δ, ε]`.
    fn generators(&self, x: FinSet) -> [Self::Mor; 4];
    fn braiding(&self, x: FinSet, y: FinSet) -> Self::Mor;
    fn dagger(&self, a: &Self::Mor) -> Self::Mor;
    fn dual(&self, a: &Self::Mor) -> Result<Self::Mor>;
    fn isomorphic(&self, a: &Self::Mor, b: &Self::Mor) -> Result<bool>;
    fn arrow(&self, rng: &mut CaseRng, x: FinSet, y: FinSet, sizes: Sizes) -> Self::Mor;

    fn same(&self, a: &Self::Mor, b: &Self::Mor, what: &str) -> LawResult {
        ensure(self.isomorphic(a, b).map_err(err)?, || format!("{what}: {a:?} vs {b:?}"))
    }

    fn chain(&self, parts: &[&Self::Mor]) -> Result<Self::Mor> {
        let (first, rest) = parts.split_first().expect("nonempty chain");
        rest.iter().try_fold((*first).clone(), |acc, next| self.then(&acc, next))
    }
}

struct PlainCospans;

impl Hypergraph for PlainCospans {
    type Mor = Cospan;

    fn name(&self) -> String {
        "hypergraph-cospan".into()
    }

    fn id(&self, x: FinSet) -> Cospan {
        Cospan::identity(x)
    }

    fn then(&self, a: &Cospan, b: &Cospan) -> Result<Cospan> {
        a.compose(b)
    }

    fn tensor(&self, a: &Cospan, b: &Cospan) -> Cospan {
        a.tensor(b)
    }

    fn generators(&self, x: FinSet) -> [Cospan; 4] {
        let Frobenius { mu, eta, delta, epsilon } = Frobenius::on(x);
        [mu, eta, delta, epsilon]
    }

    fn braiding(&self, x: FinSet, y: FinSet) -> Cospan {
        Cospan::from_function(&braiding(x, y))
    }

    fn dagger(&self, a: &Cospan) -> Cospan {
        a.opposite()
    }

    fn dual(&self, a: &Cospan) -> Result<Cospan> {
        a.dual()
    }

    fn isomorphic(&self, a: &Cospan, b: &Cospan) -> Result<bool> {
        Ok(iso_search(a, b)?.is_some())
    }

    fn arrow(&self, rng: &mut CaseRng, x: FinSet, y: FinSet, sizes: Sizes) -> Cospan {
        gen::cospan_between(rng, x, y, sizes.max_set)
    }
}

struct Decorated<'f, F, S> {
    cat: DecoratedCategory<'f, F>,
    sample: S,
}

impl<F: DecorationFunctor, S: Sampler<F::Decoration>> Hypergraph for Decorated<'_, F, S> {
    type Mor = DecoratedCospan<F::Decoration>;

    fn name(&self) -> String {
        format!("hypergraph-{}", self.cat.functor().name())
    }

    fn id(&self, x: FinSet) -> Self::Mor {
        self.cat.identity(x)
    }

    fn then(&self, a: &Self::Mor, b: &Self::Mor) -> Result<Self::Mor> {
        self.cat.compose(a, b)
    }

    fn tensor(&self, a: &Self::Mor, b: &Self::Mor) -> Self::Mor {
        self.cat.tensor(a, b)
    }

    fn generators(&self, x: FinSet) -> [Self::Mor; 4] {
        let f = self.cat.frobenius(x);
        [f.mu, f.eta, f.delta, f.epsilon]
    }

    fn braiding(&self, x: FinSet, y: FinSet) -> Self::Mor {
        self.cat.structure(Structure::Braiding(x, y))
    }

    fn dagger(&self, a: &Self::Mor) -> Self::Mor {
        self.cat.dagger(a)
    }

    fn dual(&self, a: &Self::Mor) -> Result<Self::Mor> {
        self.cat.dual(a)
    }

    fn isomorphic(&self, a: &Self::Mor, b: &Self::Mor) -> Result<bool> {
        self.cat.isomorphic(a, b)
    }

    fn arrow(&self, rng: &mut CaseRng, x: FinSet, y: FinSet, sizes: Sizes) -> Self::Mor {
        arrow::<F, S>(rng, &self.sample, x, y, sizes)
    }
}

fn objects() -> impl Iterator<Item = FinSet> {
    (0..=MAX_OBJECT).map(|n| FinSet::new(n).expect("small"))
}

fn pairs() -> impl Iterator<Item = (FinSet, FinSet)> {
    objects().flat_map(|x| objects().map(move |y| (x, y)))
}

fn hypergraph_laws<H: Hypergraph>(h: &H, runner: &Runner) -> LawReport {
    let mut report = LawReport::new(h.name(), runner);

    report.push(runner.once("monoid", || {
        for x in objects() {
            let [mu, eta, _, _] = h.generators(x);
            let one = h.id(x);
            let left = h.chain(&[&h.tensor(&mu, &one), &mu]).map_err(err)?;
            let right = h.chain(&[&h.tensor(&one, &mu), &mu]).map_err(err)?;
            h.same(&left, &right, &format!("associativity on {x}"))?;
            h.same(&h.chain(&[&h.tensor(&eta, &one), &mu]).map_err(err)?, &one, &format!("left unit on {x}"))?;
            h.same(&h.chain(&[&h.tensor(&one, &eta), &mu]).map_err(err)?, &one, &format!("right unit on {x}"))?;
        }
        Ok(())
    }));

    report.push(runner.once("comonoid", || {
        for x in objects() {
            let [_, _, delta, epsilon] = h.generators(x);
            let one = h.id(x);
            let left = h.chain(&[&delta, &h.tensor(&delta, &one)]).map_err(err)?;
            let right = h.chain(&[&delta, &h.tensor(&one, &delta)]).map_err(err)?;
            h.same(&left, &right, &format!("coassociativity on {x}"))?;
            let counit_l = h.chain(&[&delta, &h.tensor(&epsilon, &one)]).map_err(err)?;
            let counit_r = h.chain(&[&delta, &h.tensor(&one, &epsilon)]).map_err(err)?;
            h.same(&counit_l, &one, &format!("left counit on {x}"))?;
            h.same(&counit_r, &one, &format!("right counit on {x}"))?;
        }
        Ok(())
    }));

    report.push(runner.once("commutative", || {
        for x in objects() {
            let [mu, _, delta, _] = h.generators(x);
            let sigma = h.braiding(x, x);
            h.same(&h.chain(&[&sigma, &mu]).map_err(err)?, &mu, &format!("σ;μ on {x}"))?;
            h.same(&h.chain(&[&delta, &sigma]).map_err(err)?, &delta, &format!("δ;σ on {x}"))?;
        }
        Ok(())
    }));

    report.push(runner.once("frobenius", || {
        for x in objects() {
            let [mu, _, delta, _] = h.generators(x);
            let one = h.id(x);
            let middle = h.chain(&[&mu, &delta]).map_err(err)?;
            let left = h.chain(&[&h.tensor(&delta, &one), &h.tensor(&one, &mu)]).map_err(err)?;
            let right = h.chain(&[&h.tensor(&one, &delta), &h.tensor(&mu, &one)]).map_err(err)?;
            h.same(&left, &middle, &format!("left Frobenius on {x}"))?;
            h.same(&right, &middle, &format!("right Frobenius on {x}"))?;
        }
        Ok(())
    }));

    report.push(runner.once("special", || {
        for x in objects() {
            let [mu, _, delta, _] = h.generators(x);
            h.same(&h.chain(&[&delta, &mu]).map_err(err)?, &h.id(x), &format!("δ;μ on {x}"))?;
        }
        Ok(())
    }));

    report.push(runner.once("compatibility", || {
        for (x, y) in pairs() {
            let [mu_x, eta_x, delta_x, eps_x] = h.generators(x);
            let [mu_y, eta_y, delta_y, eps_y] = h.generators(y);
            let [mu, eta, delta, eps] = h.generators(x.plus(y));
            let shuffle = h.tensor(&h.tensor(&h.id(x), &h.braiding(y, x)), &h.id(y));
            let unshuffle = h.tensor(&h.tensor(&h.id(x), &h.braiding(x, y)), &h.id(y));
            let at = format!("on {x} + {y}");
            h.same(&mu, &h.chain(&[&shuffle, &h.tensor(&mu_x, &mu_y)]).map_err(err)?, &format!("μ {at}"))?;
            h.same(&eta, &h.tensor(&eta_x, &eta_y), &format!("η {at}"))?;
            h.same(&delta, &h.chain(&[&h.tensor(&delta_x, &delta_y), &unshuffle]).map_err(err)?, &format!("δ {at}"))?;
            h.same(&eps, &h.tensor(&eps_x, &eps_y), &format!("ε {at}"))?;
        }
        Ok(())
    }));

    report.push(runner.once("snake", || {
        for x in objects() {
            let [mu, eta, delta, epsilon] = h.generators(x);
            let one = h.id(x);
            let cup = h.chain(&[&eta, &delta]).map_err(err)?;
            let cap = h.chain(&[&mu, &epsilon]).map_err(err)?;
            let left = h.chain(&[&h.tensor(&cup, &one), &h.tensor(&one, &cap)]).map_err(err)?;
            let right = h.chain(&[&h.tensor(&one, &cup), &h.tensor(&cap, &one)]).map_err(err)?;
            h.same(&left, &one, &format!("left snake on {x}"))?;
            h.same(&right, &one, &format!("right snake on {x}"))?;
        }
        Ok(())
    }));

    report.push(runner.once("dual-of-generators", || {
        for x in objects() {
            let [mu, eta, delta, epsilon] = h.generators(x);
            h.same(&h.dual(&h.id(x)).map_err(err)?, &h.id(x), &format!("dual of 1 on {x}"))?;
            h.same(&h.dual(&mu).map_err(err)?, &delta, &format!("dual of μ on {x}"))?;
            h.same(&h.dual(&eta).map_err(err)?, &epsilon, &format!("dual of η on {x}"))?;
        }
        Ok(())
    }));

    report.push(runner.law("dagger-involution", |rng, s| {
        let [x, y] = [(); 2].map(|_| gen::set(rng, s.max_set.min(MAX_OBJECT)));
        let f = h.arrow(rng, x, y, s);
        h.same(&h.dagger(&h.dagger(&f)), &f, "f††")
    }));

    report.push(runner.law("dagger-contravariant", |rng, s| {
        let [x, y, z] = [(); 3].map(|_| gen::set(rng, s.max_set.min(MAX_FOOT)));
        let f = h.arrow(rng, x, y, s);
        let g = h.arrow(rng, y, z, s);
        let left = h.dagger(&h.then(&f, &g).map_err(err)?);
        let right = h.then(&h.dagger(&g), &h.dagger(&f)).map_err(err)?;
        h.same(&left, &right, "(f;g)†")
    }));

    report.push(runner.law("dual-is-dagger", |rng, s| {
        let [x, y] = [(); 2].map(|_| gen::set(rng, s.max_set.min(MAX_FOOT)));
        let f = h.arrow(rng, x, y, s);
        let dual = h.dual(&f).map_err(err)?;
        h.same(&dual, &h.dagger(&f), "dual vs dagger")?;
        h.same(&h.dual(&dual).map_err(err)?, &f, "dual involution")
    }));

    report
}

fn hypergraph_suites(seed: u64, cases: usize) -> Vec<LawReport> {
    let graphs = Graphs::new();
    let states = States::new();
    vec![
        hypergraph_laws(&PlainCospans, &Runner::new(seed, cases, Sizes::new(MAX_OBJECT, 0))),
        hypergraph_laws(
            &Decorated { cat: DecoratedCategory::new(&graphs), sample: sample_graph },
            &Runner::new(seed, cases, DECORATED_GRAPH_SIZES),
        ),
        hypergraph_laws(
            &Decorated { cat: DecoratedCategory::new(&states), sample: sample_linsub },
            &Runner::new(seed, cases, DECORATED_LINSUB_SIZES),
        ),
    ]
}

/// Decorating with the identity functor changes nothing.
fn initial_decoration(runner: &Runner) -> LawReport {
    let initial = InitialDecoration;
    let cat = DecoratedCategory::new(&initial);
    let mut report = LawReport::new("initial-decoration", runner);
    let lift = |c: &Cospan| cat.decorate(c.clone(), FinFunction::bang(c.apex()));
    let plain = |d: &DecoratedCospan<FinFunction>, c: &Cospan| -> LawResult {
        ensure(&d.cospan == c, || format!("{:?} != {c:?}", d.cospan))?;
        ensure(d.decoration == FinFunction::bang(c.apex()), || format!("decoration {:?}", d.decoration))
    };

    report.push(runner.law("composition", |rng, s| {
        let [x, y, z] = [(); 3].map(|_| gen::set(rng, s.max_set));
        let a = gen::cospan_between(rng, x, y, s.max_set + 1);
        let b = gen::cospan_between(rng, y, z, s.max_set + 1);
        let decorated = cat.compose(&lift(&a).map_err(err)?, &lift(&b).map_err(err)?).map_err(err)?;
        plain(&decorated, &a.compose(&b).map_err(err)?)
    }));

    report.push(runner.law("identity", |rng, s| {
        let x = gen::set(rng, s.max_set);
        plain(&cat.identity(x), &Cospan::identity(x))
    }));

    report.push(runner.law("tensor", |rng, s| {
        let a = gen::cospan(rng, s.max_set, s.max_set + 1);
        let b = gen::cospan(rng, s.max_set, s.max_set + 1);
        plain(&cat.tensor(&lift(&a).map_err(err)?, &lift(&b).map_err(err)?), &a.tensor(&b))
    }));

    report.push(runner.law("dagger", |rng, s| {
        let a = gen::cospan(rng, s.max_set, s.max_set + 1);
        plain(&cat.dagger(&lift(&a).map_err(err)?), &a.opposite())
    }));

    report.push(runner.law("frobenius", |rng, s| {
        let x = gen::set(rng, s.max_set);
        let f = cat.frobenius(x);
        let g = Frobenius::on(x);
        plain(&f.mu, &g.mu)?;
        plain(&f.eta, &g.eta)?;
        plain(&f.delta, &g.delta)?;
        plain(&f.epsilon, &g.epsilon)
    }));

    report.push(runner.law("isomorphism", |rng, s| {
        let a = gen::cospan(rng, s.max_set, s.max_set + 2);
        let b = a.push_apex(&gen::permutation(rng, a.apex())).map_err(err)?;
        let c = gen::cospan_between(rng, a.left_foot(), a.right_foot(), s.max_set + 2);
        for other in [&b, &c] {
            let plain_iso = iso_search(&a, other).map_err(err)?.is_some();
            let decorated_iso = cat.isomorphic(&lift(&a).map_err(err)?, &lift(other).map_err(err)?).map_err(err)?;
            ensure(plain_iso == decorated_iso, || format!("{a:?} vs {other:?}"))?;
        }
        Ok(())
    }));

    report
}

fn circuit(rng: &mut CaseRng, s: Sizes) -> DecoratedCospan<LabeledGraph<Rational>> {
    let x = gen::set(rng, s.max_set.min(MAX_FOOT));
    let y = gen::set(rng, s.max_set.min(MAX_FOOT));
    arrow::<Graphs, _>(rng, &sample_graph, x, y, s)
}

fn subspaces_equal(a: &Subspace<Rational>, b: &Subspace<Rational>, what: &str) -> LawResult {
    ensure(subspace_equal(a, b).map_err(err)?, || format!("{what}: {a:?} != {b:?}"))
}

fn equivalent(a: &fixtures::Circuit, b: &fixtures::Circuit, expected: bool, what: &str) -> LawResult {
    let got = circuits::behavior_equivalent(a, b).map_err(err)?;
    ensure(got == expected, || format!("{what}: expected equivalent = {expected}"))?;
    // the oracle must agree with both behaviours
    for c in [a, b] {
        let oracle = oracle_nodal(&c.decoration, &c.cospan.boundary()).map_err(err)?;
        subspaces_equal(&behavior(c).map_err(err)?, &oracle, &format!("{what}: behavior vs oracle"))?;
    }
    Ok(())
}

fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

/// Resistor-network semantics against the nodal oracle and named fixtures.
fn semantics(runner: &Runner) -> LawReport {
    let graphs = Graphs::new();
    let states = States::new();
    let gcat = DecoratedCategory::new(&graphs);
    let scat = DecoratedCategory::new(&states);
    let res = Res::<Rational>::new();
    let endo = IdentityEndofunctor;
    let mut report = LawReport::new("semantics", runner);

    report.push(runner.law("behavior-matches-oracle", |rng, s| {
        let d = circuit(rng, s);
        let oracle = oracle_nodal(&d.decoration, &d.cospan.boundary()).map_err(err)?;
        subspaces_equal(&behavior(&d).map_err(err)?, &oracle, &format!("{d:?}"))
    }));

    report.push(runner.law("relabel-invariant", |rng, s| {
        let d = circuit(rng, s);
        let moved = gcat.relabel(&d, &gen::permutation(rng, d.apex())).map_err(err)?;
        ensure(behavior(&d).map_err(err)? == behavior(&moved).map_err(err)?, || format!("{d:?} vs {moved:?}"))
    }));

    report.push(runner.law("scaling", |rng, s| {
        let d = circuit(rng, s);
        let c: Rational = gen::positive(rng);
        let edges = d
            .decoration
            .edges()
            .iter()
            .map(|e| crate::graphdec::Edge::new(e.src, e.tgt, e.label.clone() * c.clone()))
            .collect();
        let scaled = gcat
            .decorate(d.cospan.clone(), LabeledGraph::new(d.apex(), edges).map_err(err)?)
            .map_err(err)?;
        let b = d.left_foot().size() + d.right_foot().size();
        let factors: Vec<Rational> = (0..2 * b)
            .map(|i| if i < b { q(1, 1) } else { Rational::from_int(1) / c.clone() })
            .collect();
        let expected = behavior(&d).map_err(err)?.scale_coordinates(&factors).map_err(err)?;
        subspaces_equal(&behavior(&scaled).map_err(err)?, &expected, &format!("scale by {c}"))
    }));

    report.push(runner.law("composition", |rng, s| {
        let [x, y, z] = [(); 3].map(|_| gen::set(rng, s.max_set.min(MAX_FOOT)));
        let sizes = Sizes::new(s.max_set.min(4), s.max_decoration.min(5));
        let d1 = arrow::<Graphs, _>(rng, &sample_graph, x, y, sizes);
        let d2 = arrow::<Graphs, _>(rng, &sample_graph, y, z, sizes);
        let glued = gcat.compose(&d1, &d2).map_err(err)?;
        let linear = scat
            .compose(&apply_functor(&res, &endo, &d1).map_err(err)?, &apply_functor(&res, &endo, &d2).map_err(err)?)
            .map_err(err)?;
        subspaces_equal(
            &behavior(&glued).map_err(err)?,
            &state_behavior(&linear).map_err(err)?,
            "behavior(d1;d2) vs composed state spaces",
        )?;
        ensure(
            res_component(&glued.decoration) == apply_functor(&res, &endo, &glued).map_err(err)?.decoration,
            || "Res component differs from the induced functor".into(),
        )
    }));

    report.push(runner.once("series", || {
        let (a, b) = fixtures::series(q(1, 1), q(2, 1));
        let composite = gcat.compose(&a, &b).map_err(err)?;
        equivalent(&composite, &fixtures::single_edge(q(3, 1)), true, "1 + 2 vs 3")?;
        equivalent(&composite, &fixtures::single_edge(q(1, 1)), false, "1 + 2 vs 1")
    }));

    report.push(runner.once("parallel", || {
        equivalent(&fixtures::parallel(q(1, 1), q(1, 1)), &fixtures::single_edge(q(1, 2)), true, "1 ‖ 1 vs 1/2")
    }));

    report.push(runner.once("triangle", || {
        equivalent(&fixtures::unit_triangle(), &fixtures::single_edge(q(2, 3)), true, "triangle vs 2/3")
    }));

    report.push(runner.once("wire", || {
        let w = fixtures::wire();
        let expected = Subspace::span_rows(
            4,
            vec![vec![q(1, 1), q(1, 1), q(0, 1), q(0, 1)], vec![q(0, 1), q(0, 1), q(1, 1), q(-1, 1)]],
        )
        .map_err(err)?;
        subspaces_equal(&behavior(&w).map_err(err)?, &expected, "wire")?;
        let oracle = oracle_nodal(&w.decoration, &w.cospan.boundary()).map_err(err)?;
        subspaces_equal(&oracle, &expected, "wire oracle")
    }));

    report
}

/// A graph functor whose tensor forgets self-loops.
#[derive(Debug, Clone, Copy, Default)]
pub struct LoopDroppingGraphs;

impl DecorationFunctor for LoopDroppingGraphs {
    type Decoration = LabeledGraph<Rational>;

    fn name(&self) -> &str {
        "loop-dropping-graph"
    }

    fn support(&self, d: &Self::Decoration) -> FinSet {
        d.vertices()
    }

    fn validate(&self, d: &Self::Decoration) -> Result<()> {
        d.validate()
    }

    fn map_along(&self, f: &FinFunction, d: &Self::Decoration) -> Result<Self::Decoration> {
        d.map(f)
    }

    fn tensor(&self, a: &Self::Decoration, b: &Self::Decoration) -> Self::Decoration {
        let joined = a.tensor(b);
        let edges = joined.edges().iter().filter(|e| e.src != e.tgt).cloned().collect();
        LabeledGraph::new(joined.vertices(), edges).expect("subgraph of a valid graph")
    }

    fn unit(&self) -> Self::Decoration {
        LabeledGraph::unit()
    }

    fn equal(&self, a: &Self::Decoration, b: &Self::Decoration) -> bool {
        a.equal(b).unwrap_or(false)
    }
}

/// Resistor semantics where backwards-numbered edges conduct negatively.
#[derive(Debug, Clone, Default)]
pub struct SkewedRes {
    inner: Res<Rational>,
}

impl DecorationTransformation for SkewedRes {
    type Source = Graphs;
    type Target = States;

    fn source(&self) -> &Graphs {
        self.inner.source()
    }

    fn target(&self) -> &States {
        self.inner.target()
    }

    fn component(&self, n: FinSet, g: &LabeledGraph<Rational>) -> Result<Subspace<Rational>> {
        if g.vertices() != n {
            return self.inner.component(n, g);
        }
        let mut l = crate::linrel::Matrix::<Rational>::zeros(n.size(), n.size());
        for e in g.edges().iter().filter(|e| e.src != e.tgt) {
            let c = Rational::from_int(1) / e.label.clone();
            let c = if e.src > e.tgt { -c } else { c };
            for (a, b, sign) in [(e.src, e.src, 1), (e.tgt, e.tgt, 1), (e.src, e.tgt, -1), (e.tgt, e.src, -1)] {
                l[(a, b)] = l[(a, b)].clone() + c.clone() * Rational::from_int(sign);
            }
        }
        Ok(circuits::ohmic_states(&l))
    }
}

/// Runs the harness against the planted faults; each report must fail.
pub fn planted_faults(seed: u64, cases: usize) -> Vec<LawReport> {
    let mut skewed = check_transformation_laws(&SkewedRes::default(), sample_graph, &Runner::new(seed, cases, GRAPH_SIZES));
    skewed.suite = format!("skewed-{}", skewed.suite);
    vec![check_functor_laws(&LoopDroppingGraphs, sample_graph, &Runner::new(seed, cases, GRAPH_SIZES)), skewed]
}
