//! Worked examples on small posets, checked through the public API.

use cobweb::{
    incidence_coefficient, Error, Exact, FSequence, FinitePoset, IncidenceFunction,
    ReducedFunction, StandardFunction as F, Vertex,
};

fn v(j: u64, s: usize) -> Vertex {
    Vertex::new(j, s)
}

fn fib(n: usize) -> (FSequence, FinitePoset) {
    let seq = FSequence::parse("fibonacci", n).unwrap();
    let poset = FinitePoset::build(&seq, n).unwrap();
    (seq, poset)
}

fn e(n: i64) -> Exact {
    Exact::from(n)
}

#[test]
fn sequences() {
    assert_eq!(
        FSequence::parse("fibonacci", 4).unwrap().values(),
        &[1, 1, 2, 3, 5]
    );
    assert_eq!(
        FSequence::parse("constant:2", 3).unwrap().values(),
        &[1, 2, 2, 2]
    );
    assert!(matches!(
        FSequence::parse("custom:1,0,3", 2),
        Err(Error::InvalidSequence(_))
    ));
    let seq = FSequence::parse("fibonacci", 4).unwrap();
    assert_eq!(seq.value_at(3).unwrap(), 3);
    assert!(seq.value_at(99).is_err());
    assert_eq!(
        FSequence::parse("constant:2", 0)
            .unwrap()
            .value_at(0)
            .unwrap(),
        1
    );
}

#[test]
fn poset_shape_and_order() {
    let (_, p) = fib(3);
    assert_eq!(p.len(), 7);
    assert_eq!(p.hasse_edges().len(), 9);

    let single = FinitePoset::build(&FSequence::new(vec![1]).unwrap(), 0).unwrap();
    assert_eq!(single.vertices(), &[v(1, 0)]);
    assert!(single.hasse_edges().is_empty());
    let pair = FinitePoset::build(&FSequence::new(vec![1, 2]).unwrap(), 1).unwrap();
    assert_eq!((pair.len(), pair.hasse_edges().len()), (3, 2));

    assert!(p.leq(&v(2, 1), &v(1, 3)).is_err(), "F_1 = 1 has no ⟨2,1⟩");
    let (_, big) = fib(4);
    assert!(big.leq(&v(2, 2), &v(1, 3)).unwrap());
    assert!(!big.leq(&v(1, 2), &v(2, 2)).unwrap());
    assert!(!big.leq(&v(1, 3), &v(1, 1)).unwrap());
}

#[test]
fn segments_and_chain_oracles() {
    let (_, p) = fib(3);
    let (x, y) = (v(1, 0), v(1, 3));
    assert_eq!(p.segment(&x, &y).unwrap().len(), 5);
    assert_eq!(p.segment(&x, &x).unwrap(), vec![x]);
    assert!(p.segment(&v(1, 2), &v(2, 2)).unwrap().is_empty());

    assert_eq!(p.count_chains(&x, &y, 2).unwrap(), 3u32.into());
    assert_eq!(p.count_chains(&x, &y, 1).unwrap(), 1u32.into());
    assert_eq!(p.count_chains(&x, &x, 1).unwrap(), 0u32.into());
    assert_eq!(p.count_maximal_chains(&x, &y, 3).unwrap(), 2u32.into());
    assert_eq!(p.count_maximal_chains(&x, &y, 2).unwrap(), 0u32.into());
    assert_eq!(p.count_all_maximal_chains(&x, &y).unwrap(), 2u32.into());
    assert_eq!(p.count_multichains(&x, &y, 2).unwrap(), 5u32.into());
    assert_eq!(p.count_multichains(&x, &x, 2).unwrap(), 1u32.into());

    assert_eq!(p.mobius_recursive(&x, &x).unwrap(), 1.into());
    assert_eq!(p.mobius_recursive(&x, &v(1, 1)).unwrap(), (-1).into());
    assert_eq!(p.mobius_recursive(&x, &y).unwrap(), 0.into());
}

#[test]
fn full_algebra() {
    let (_, p) = fib(3);
    let (x, y) = (v(1, 0), v(1, 3));
    let full = |name| IncidenceFunction::standard_full(name, &p).unwrap();

    assert_eq!(full(F::Zeta).get(&v(1, 2), &v(2, 2)).unwrap(), e(0));
    assert_eq!(full(F::C).get(&x, &x).unwrap(), e(1));
    assert_eq!(full(F::C).get(&x, &y).unwrap(), e(-1));
    assert_eq!(full(F::Chi).get(&x, &v(1, 2)).unwrap(), e(0));

    assert_eq!(
        full(F::Zeta)
            .convolve(&full(F::Zeta))
            .unwrap()
            .get(&x, &y)
            .unwrap(),
        e(5)
    );
    assert_eq!(
        full(F::Eta)
            .convolve(&full(F::Eta))
            .unwrap()
            .get(&x, &y)
            .unwrap(),
        e(3)
    );
    assert_eq!(full(F::Chi).power(2).get(&x, &v(1, 2)).unwrap(), e(1));
    assert_eq!(full(F::Chi).power(3).get(&x, &y).unwrap(), e(2));

    assert_eq!(full(F::Zeta).invert().unwrap().get(&x, &y).unwrap(), e(0));
    assert_eq!(full(F::C).invert().unwrap().get(&x, &y).unwrap(), e(6));
    let delta_inv = IncidenceFunction::delta(&p).invert().unwrap();
    assert!(delta_inv
        .entries()
        .all(|(a, b, val)| *val == e((a == b) as i64)));
    assert!(matches!(
        full(F::Eta).invert(),
        Err(Error::NotInvertible(_))
    ));

    let seq = FSequence::parse("constant:2", 4).unwrap();
    let q = FinitePoset::build(&seq, 4).unwrap();
    let mu = IncidenceFunction::mobius_closed_form(&q);
    assert_eq!(mu.get(&v(1, 0), &v(1, 4)).unwrap(), e(1));
    assert_eq!(mu.get(&v(2, 1), &v(1, 2)).unwrap(), e(-1));
}

#[test]
fn reduced_algebra() {
    let (seq, p) = fib(3);
    assert_eq!(incidence_coefficient(&seq, 0, 3, 2), 2);
    assert_eq!(incidence_coefficient(&seq, 0, 3, 0), 1);
    assert_eq!(incidence_coefficient(&seq, 2, 1, 1), 0);

    let r = |name| ReducedFunction::standard(name, &seq, 3).unwrap();
    assert_eq!(r(F::Zeta).convolve(&r(F::Zeta)).unwrap().get(0, 3), e(5));
    assert_eq!(r(F::Eta).convolve(&r(F::Eta)).unwrap().get(0, 3), e(3));
    assert_eq!(r(F::Delta).convolve(&r(F::Eta)).unwrap(), r(F::Eta));
    assert_eq!(r(F::Mobius).get(0, 3), e(0));
    assert_eq!(r(F::Mobius).get(2, 2), e(1));
    assert_eq!(r(F::ChiPow(3)).get(0, 3), e(2));
    assert_eq!(r(F::Zeta).invert().unwrap(), r(F::Mobius));
    assert_eq!(r(F::C).invert().unwrap().get(0, 3), e(6));
    assert_eq!(r(F::M).invert().unwrap().get(0, 3), e(2));

    for name in [F::Zeta, F::Delta, F::Eta] {
        let lifted = r(name).lift(&p).unwrap();
        let full = IncidenceFunction::standard_full(name, &p).unwrap();
        assert!(full
            .entries()
            .all(|(a, b, val)| lifted.get(&a, &b).unwrap() == *val));
        assert_eq!(ReducedFunction::project(&lifted).unwrap(), r(name));
    }
    let eta = IncidenceFunction::standard_full(F::Eta, &p).unwrap();
    assert_eq!(ReducedFunction::project(&eta).unwrap(), r(F::Eta));
    let zeta = IncidenceFunction::standard_full(F::Zeta, &p).unwrap();
    assert_eq!(
        ReducedFunction::project(&zeta.convolve(&zeta).unwrap()).unwrap(),
        r(F::Zeta).convolve(&r(F::Zeta)).unwrap()
    );

    let mut broken = zeta.clone();
    broken.set(&v(2, 2), &v(1, 3), e(7)).unwrap();
    assert!(matches!(
        ReducedFunction::project(&broken),
        Err(Error::NotRankDependent(_))
    ));
}
