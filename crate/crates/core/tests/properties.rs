use decorated_cospans::finset::{copair, coproduct, pushout};
use decorated_cospans::{iso_search, Cospan, FinFunction, FinSet, Frobenius};
use proptest::prelude::*;

fn function(max_dom: usize, max_cod: usize) -> impl Strategy<Value = FinFunction> {
    (0..=max_dom, 1..=max_cod).prop_flat_map(|(dom, cod)| {
        prop::collection::vec(0..cod, dom).prop_map(move |t| FinFunction::new(cod, t).unwrap())
    })
}

fn composable(max: usize) -> impl Strategy<Value = (FinFunction, FinFunction)> {
    function(max, max).prop_flat_map(move |f| {
        let cod = f.cod().size();
        (Just(f), (1..=max).prop_flat_map(move |c| {
            prop::collection::vec(0..c, cod).prop_map(move |t| FinFunction::new(c, t).unwrap())
        }))
    })
}

fn cospan(max_foot: usize, max_apex: usize) -> impl Strategy<Value = Cospan> {
    (0..=max_foot, 0..=max_foot, 1..=max_apex).prop_flat_map(|(x, y, n)| {
        (prop::collection::vec(0..n, x), prop::collection::vec(0..n, y)).prop_map(move |(l, r)| {
            Cospan::new(FinFunction::new(n, l).unwrap(), FinFunction::new(n, r).unwrap()).unwrap()
        })
    })
}

fn shuffled(n: usize) -> impl Strategy<Value = FinFunction> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(move |t| FinFunction::new(n, t).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn copair_restricts_to_its_parts(
        (f, g) in (1usize..=4).prop_flat_map(|cod| (
            prop::collection::vec(0..cod, 0..=3).prop_map(move |t| FinFunction::new(cod, t).unwrap()),
            prop::collection::vec(0..cod, 0..=3).prop_map(move |t| FinFunction::new(cod, t).unwrap()),
        ))
    ) {
        let h = copair(&f, &g).unwrap();
        let (_, inl, inr) = coproduct(f.dom(), g.dom());
        prop_assert_eq!(inl.then(&h).unwrap(), f);
        prop_assert_eq!(inr.then(&h).unwrap(), g);
    }

    #[test]
    fn from_function_is_functorial((f, g) in composable(4)) {
        let direct = Cospan::from_function(&f.then(&g).unwrap());
        let stepwise = Cospan::from_function(&f).compose(&Cospan::from_function(&g)).unwrap();
        let w = iso_search(&direct, &stepwise).unwrap();
        prop_assert!(w.is_some_and(|w| w.witnesses(&direct, &stepwise)));
    }

    #[test]
    fn relabelled_cospans_are_found((c, p) in cospan(3, 5).prop_flat_map(|c| {
        let n = c.apex().size();
        (Just(c), shuffled(n))
    })) {
        let moved = c.push_apex(&p).unwrap();
        let w = iso_search(&c, &moved).unwrap().expect("relabelling is an isomorphism");
        prop_assert!(w.witnesses(&c, &moved));
        prop_assert!(w.inverse().witnesses(&moved, &c));
    }

    #[test]
    fn isomorphism_preserves_fibre_profiles(a in cospan(3, 4), b in cospan(3, 4)) {
        let profile = |c: &Cospan| {
            let mut p: Vec<_> = c.left().fibers().iter().zip(c.right().fibers())
                .map(|(l, r)| (l.len(), r.len())).collect();
            p.sort_unstable();
            p
        };
        if a.left_foot() == b.left_foot() && a.right_foot() == b.right_foot() {
            if let Some(w) = iso_search(&a, &b).unwrap() {
                prop_assert!(w.witnesses(&a, &b));
                prop_assert_eq!(profile(&a), profile(&b));
            }
        }
    }

    #[test]
    fn opposite_reverses_composition(
        (a, b) in cospan(3, 4).prop_flat_map(|a| {
            let y = a.right_foot().size();
            (Just(a), (0..=3usize, 1..=4usize).prop_flat_map(move |(z, n)| {
                (prop::collection::vec(0..n, y), prop::collection::vec(0..n, z)).prop_map(move |(l, r)| {
                    Cospan::new(FinFunction::new(n, l).unwrap(), FinFunction::new(n, r).unwrap()).unwrap()
                })
            }))
        })
    ) {
        let left = a.compose(&b).unwrap().opposite();
        let right = b.opposite().compose(&a.opposite()).unwrap();
        prop_assert!(iso_search(&left, &right).unwrap().is_some());
        prop_assert_eq!(a.opposite().opposite(), a);
    }

    #[test]
    fn pushouts_commute_and_are_deterministic(
        (f, g) in (0usize..=4).prop_flat_map(|y| (
            (1usize..=4).prop_flat_map(move |n| prop::collection::vec(0..n, y).prop_map(move |t| FinFunction::new(n, t).unwrap())),
            (1usize..=4).prop_flat_map(move |m| prop::collection::vec(0..m, y).prop_map(move |t| FinFunction::new(m, t).unwrap())),
        ))
    ) {
        let p = pushout(&f, &g).unwrap();
        prop_assert_eq!(f.then(&p.left).unwrap(), g.then(&p.right).unwrap());
        prop_assert_eq!(pushout(&f, &g).unwrap(), p);
    }
}

#[test]
fn empty_generators_are_empty_cospans() {
    let Frobenius { mu, eta, delta, epsilon } = Frobenius::on(FinSet::EMPTY);
    for g in [mu, eta, delta, epsilon] {
        assert_eq!(g, Cospan::empty());
    }
}
