use proptest::prelude::*;

use sl2tilt::alcove::{block, decompose_into_tiltings, linked_lower_weight, tilting_weyl_factors};
use sl2tilt::quiver::{Path, QuiverElem};
use sl2tilt::scalars::{int, rat, specialize, CycScalar, LaurentPoly, RootOfUnitySpec};
use sl2tilt::soergel::dsl::{parse_diagram, serialize};
use sl2tilt::soergel::{evaluate_full, Col, DiagramLinComb, Token};
use sl2tilt::tiltcat::{object_from_triples, object_triples};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -5i64..=5, 1i64..=3), 0..5)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, n, d)| (e, rat(n, d)))))
}

fn spec() -> impl Strategy<Value = RootOfUnitySpec> {
    (3u32..=7, any::<bool>()).prop_map(|(l, odd)| RootOfUnitySpec::from_l(l, odd && l % 2 == 1).unwrap())
}

fn path(m: usize) -> impl Strategy<Value = Path> {
    (0..=m, 0u8..4).prop_filter_map("not a path of Q_m", move |(i, k)| {
        let p = match k {
            0 => Path::Idem(i),
            1 => Path::Up(i),
            2 => Path::Down(i),
            _ => Path::Loop(i),
        };
        p.is_valid(m).then_some(p)
    })
}

fn elem(m: usize) -> impl Strategy<Value = QuiverElem> {
    prop::collection::vec((path(m), -3i64..=3), 0..4).prop_map(|ts| {
        let mut e = QuiverElem::zero();
        for (p, c) in ts {
            e.add_term(p, int(c));
        }
        e
    })
}

fn col() -> impl Strategy<Value = Col> {
    prop_oneof![Just(Col::R), Just(Col::G)]
}

/// Generators that can be stacked on `seq` without leaving five strands.
fn moves(seq: &[Col]) -> Vec<(usize, Token)> {
    let mut out = vec![];
    for pos in 0..=seq.len() {
        if seq.len() < 5 {
            out.push((pos, Token::DotUp(Col::R)));
            out.push((pos, Token::DotUp(Col::G)));
        }
        if let Some(&c) = seq.get(pos) {
            out.push((pos, Token::DotDown(c)));
            if seq.len() < 5 {
                out.push((pos, Token::Split(c)));
            }
            if seq.get(pos + 1) == Some(&c) {
                out.push((pos, Token::Merge(c)));
            }
        }
    }
    out
}

fn stack(bottom: &[Col], picks: &[usize], marked: bool) -> DiagramLinComb {
    let mut d = DiagramLinComb::identity(bottom, marked);
    for &k in picks {
        let opts = moves(&d.top);
        let (pos, tok) = opts[k % opts.len()];
        d = DiagramLinComb::generator(&d.top, pos, tok, marked).unwrap().compose_v(&d).unwrap();
    }
    d
}

fn seq() -> impl Strategy<Value = Vec<Col>> {
    prop::collection::vec(col(), 0..4)
}

fn diagram() -> impl Strategy<Value = DiagramLinComb> {
    (seq(), any::<bool>(), prop::collection::vec((prop::collection::vec(any::<usize>(), 0..4), -3i64..=3, 1i64..=2), 1..3))
        .prop_map(|(bottom, marked, terms)| {
            let mut sum: Option<DiagramLinComb> = None;
            for (picks, n, d) in terms {
                let t = stack(&bottom, &picks, marked).scale(&rat(n, d));
                sum = Some(match sum {
                    Some(s) if s.top == t.top => s.add(&t).unwrap(),
                    Some(s) => s,
                    None => t,
                });
            }
            sum.unwrap()
        })
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a - &a).is_zero(), true);
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).at_one(), a.at_one() * b.at_one());
    }

    #[test]
    fn laurent_division(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn laurent_json_round_trip(a in poly()) {
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), a);
    }

    #[test]
    fn specialization_is_a_ring_map(a in poly(), b in poly(), s in spec()) {
        prop_assert_eq!(specialize(&(&a * &b), s), &specialize(&a, s) * &specialize(&b, s));
        prop_assert_eq!(specialize(&(&a + &b), s), &specialize(&a, s) + &specialize(&b, s));
    }

    #[test]
    fn cyclotomic_field(a in poly(), s in spec()) {
        let x = specialize(&a, s);
        if x.is_zero() {
            prop_assert!(x.inverse().is_err());
        } else {
            prop_assert!((&x * &x.inverse().unwrap()).is_one());
        }
        let j = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<CycScalar>(&j).unwrap(), x);
    }

    #[test]
    fn blocks_are_orbits(x in 0i64..40, l in 3u32..7) {
        let b = block(x, l, 40);
        prop_assert!(b.contains(&x));
        for &y in &b {
            prop_assert_eq!(block(y, l, 40), b.clone());
        }
        if let Some(y) = linked_lower_weight(x, l) {
            prop_assert!(y < x);
            prop_assert!(b.contains(&y));
        }
    }

    #[test]
    fn tilting_characters_decompose_to_themselves(i in 0i64..30, l in 3u32..7) {
        let d = decompose_into_tiltings(&tilting_weyl_factors(i, l), l).unwrap();
        prop_assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![(i, 1)]);
    }

    #[test]
    fn quiver_multiplication_is_associative(a in elem(5), b in elem(5), c in elem(5)) {
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
        prop_assert_eq!(a.multiply(&b.add(&c)), a.multiply(&b).add(&a.multiply(&c)));
    }

    #[test]
    fn object_triples_round_trip(ts in prop::collection::btree_map((0usize..8, -4i64..=4), 1usize..3, 0..5)) {
        let triples: Vec<(usize, i64, usize)> = ts.into_iter().map(|((i, s), n)| (i, s, n)).collect();
        let obj = object_from_triples(&triples).unwrap();
        prop_assert_eq!(object_from_triples(&object_triples(&obj)).unwrap(), obj);
    }

    #[test]
    fn dsl_round_trip(d in diagram()) {
        prop_assert_eq!(parse_diagram(&serialize(&d)).unwrap(), d);
    }

    #[test]
    fn evaluation_is_functorial(bottom in seq(), lower in prop::collection::vec(any::<usize>(), 0..3), upper in prop::collection::vec(any::<usize>(), 0..3)) {
        let a = stack(&bottom, &lower, true);
        let b = stack(&a.top, &upper, true);
        let whole = evaluate_full(&b.compose_v(&a).unwrap()).unwrap();
        let parts = evaluate_full(&b).unwrap().compose(&evaluate_full(&a).unwrap()).unwrap();
        prop_assert_eq!(&whole, &parts);
        if let (Some(d), Some(e)) = (b.compose_v(&a).unwrap().degree(), whole.degree().unwrap()) {
            prop_assert_eq!(d, e);
        }
    }
}
