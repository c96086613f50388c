//! Elementary topos structure of finite sets: the subobject classifier
//! Omega, exponentials with evaluation, slice exponentials, and the
//! cartesian-closed isomorphism (a^b)^c = a^(b x c).

use fincat::finset::{
    all_fns, fs_classify, fs_exponential, fs_is_pullback_square, fs_omega, fs_slice_exponential,
    fs_true, fs_verify_universal, test_objects, FinFn, FinSetObj, UniversalCandidate,
};
use fincat::yoneda::{ccc_exponential_iso, ccc_exponential_iso_natural};

fn main() {
    let omega = fs_omega();
    let truth = fs_true();
    println!("Omega = {:?}", omega.elements());

    // every mono has exactly one classifying map
    let a = FinSetObj::canonical(3);
    for s in test_objects(3) {
        for m in all_fns(&s, &a).into_iter().filter(FinFn::is_injective) {
            let bang = FinFn::new(s.clone(), FinSetObj::terminal(), vec![0; s.size()]).unwrap();
            let count = all_fns(&a, &omega)
                .into_iter()
                .filter(|chi| fs_is_pullback_square(&m, &bang, chi, &truth))
                .count();
            assert_eq!(count, 1);
            let chi = fs_classify(&m).unwrap();
            assert!(fs_is_pullback_square(&m, &bang, &chi, &truth));
        }
    }
    println!("every mono into a 3-element set has exactly one classifier");

    // exponentials: B^A with its evaluation map is universal
    let b = FinSetObj::canonical(2);
    let exp = fs_exponential(&a, &b);
    println!("|B^A| = {} = {}^{}", exp.obj.size(), b.size(), a.size());
    fs_verify_universal(
        &UniversalCandidate::Exponential {
            a: a.clone(),
            b: b.clone(),
            obj: exp.obj.clone(),
            eval: exp.eval.clone(),
        },
        3,
    )
    .unwrap();
    println!("exponential universal property verified at bound 3");

    // slice exponentials witness local cartesian closure
    let base = FinSetObj::canonical(2);
    let f = FinFn::new(FinSetObj::canonical(3), base.clone(), vec![0, 0, 1]).unwrap();
    let g = FinFn::new(FinSetObj::canonical(2), base.clone(), vec![0, 1]).unwrap();
    let se = fs_slice_exponential(&f, &g).unwrap();
    println!("slice exponential over a 2-point base: {} elements", se.obj.size());

    // the ccc isomorphism, with its round-trip and naturality
    let c = FinSetObj::canonical(2);
    let (fwd, back) = ccc_exponential_iso(&a, &b, &c).unwrap();
    println!(
        "(a^b)^c = a^(b x c): {} = {}",
        fwd.dom().size(),
        fwd.cod().size()
    );
    assert_eq!(FinFn::compose(&back, &fwd).unwrap(), FinFn::identity(fwd.dom()));
    ccc_exponential_iso_natural(2).unwrap();
    println!("iso round-trips and is natural in all three arguments at bound 2");
}
