use casson_core::casson::torus_surgery_lambda;
use casson_core::splice::{check_splice_conditions, KRange, Witness};
use casson_core::{
    AmbientKnot, Evaluator, KnotDescriptor, KnotStore, ManifoldExpression, Status, Verdict,
};
use num_integer::Integer;

fn torus_knots(max: i64) -> Vec<KnotDescriptor> {
    (2..=max)
        .flat_map(|p| {
            (p + 1..=max)
                .filter(move |q| p.gcd(q) == 1)
                .map(move |q| (p, q))
        })
        .map(|(p, q)| KnotDescriptor::torus(p, q).unwrap())
        .collect()
}

fn store() -> KnotStore {
    let mut s = KnotStore::new();
    s.load_invariant_file(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/knots.txt"))
        .unwrap();
    s
}

#[test]
fn ksplice_with_unknot_is_torus_surgery() {
    let s = KnotStore::new();
    let ev = Evaluator::new(&s);
    for k2 in torus_knots(7) {
        let KnotDescriptor::Torus(t) = &k2 else {
            unreachable!()
        };
        for k in (-4..=4).filter(|&k| k != 0) {
            let cert = ev.ksplice_lambda(k, &KnotDescriptor::Unknot, &k2).unwrap();
            assert_eq!(cert.status(), Status::AdditivityApplied);
            let expected = torus_surgery_lambda(t.p().into(), t.q().into(), k).unwrap();
            assert_eq!(cert.value(), Some(expected), "k={k}, {k2}");
        }
    }
}

#[test]
fn splices_in_s3_vanish() {
    let s = store();
    let ev = Evaluator::new(&s).with_krange(KRange::symmetric(8).unwrap());
    let mut knots = torus_knots(7);
    knots.push(KnotDescriptor::Unknot);
    knots.push(KnotDescriptor::named("fig8"));
    knots.push(KnotDescriptor::twist(3).unwrap());
    for a in &knots {
        for b in &knots {
            let e =
                ManifoldExpression::Splice(AmbientKnot::S3(a.clone()), AmbientKnot::S3(b.clone()));
            let cert = ev.lambda(&e).unwrap();
            assert_eq!(
                (cert.value(), cert.status()),
                (Some(0), Status::VanishesByCorollary),
                "{e}"
            );
        }
    }
}

#[test]
fn unknot_always_passes() {
    let s = store();
    let r = KRange::symmetric(8).unwrap();
    let mut knots = torus_knots(6);
    knots.push(KnotDescriptor::named("fig8"));
    for k2 in &knots {
        let checks = check_splice_conditions(&KnotDescriptor::Unknot, k2, &r, &s).unwrap();
        assert!(checks.iter().all(|c| c.verdict == Verdict::Pass), "{k2}");
    }
}

#[test]
fn detectors_agree_on_real_data() {
    let s = store();
    let r = KRange::symmetric(8).unwrap();
    let with_apoly = [
        KnotDescriptor::Unknot,
        KnotDescriptor::torus(2, 3).unwrap(),
        KnotDescriptor::named("fig8"),
    ];
    let mut targets = torus_knots(7);
    targets.extend(with_apoly.iter().cloned());
    for k1 in &with_apoly {
        for k2 in &targets {
            for c in check_splice_conditions(k1, k2, &r, &s).unwrap() {
                assert!(
                    c.detectors_agree(),
                    "{k1} vs {k2} at k={}: {}",
                    c.k,
                    c.witness
                );
                assert_ne!(c.verdict, Verdict::Unknown);
            }
        }
    }
}

#[test]
fn negative_k_mirrors_positive_exponent() {
    let s = store();
    let fig8 = KnotDescriptor::named("fig8");
    let t23 = KnotDescriptor::torus(2, 3).unwrap();
    let checks = check_splice_conditions(&fig8, &t23, &KRange::symmetric(3).unwrap(), &s).unwrap();
    for c in &checks {
        let Witness::Gcd { exponent, .. } = &c.witness else {
            panic!()
        };
        assert_eq!(*exponent as i64, 2 * c.k.abs());
    }
}

#[test]
fn evaluation_is_deterministic() {
    let s = store();
    let ev = Evaluator::new(&s);
    let e = ManifoldExpression::KSplice {
        k: 3,
        knot1: KnotDescriptor::named("fig8"),
        knot2: KnotDescriptor::torus(3, 4).unwrap(),
    };
    assert_eq!(ev.lambda(&e).unwrap(), ev.lambda(&e).unwrap());
}
