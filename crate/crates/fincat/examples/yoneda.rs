//! The Yoneda lemma at finite scale: natural transformations out of a
//! representable presheaf correspond exactly to elements, and the
//! embedding is full and faithful.

use fincat::cat::FinCat;
use fincat::yoneda::{
    yoneda_bijection, yoneda_embedding, yoneda_full_faithful, yoneda_element_from_nat,
    yoneda_nat_from_element,
};

fn main() {
    let c = FinCat::chain(3);
    let emb = yoneda_embedding(&c);
    println!(
        "chain(3) embeds into presheaves: {} representables, {} arrow images",
        emb.objects.len(),
        emb.arrows.len()
    );

    for a in c.objects() {
        for t in c.objects() {
            let rep = yoneda_bijection(&c, &emb.objects[a.0], t).unwrap();
            println!(
                "|Nat(y {}, y {})| = {} = |y {}({})| = {}",
                t.0, a.0, rep.nat_count, a.0, t.0, rep.elem_count
            );
            assert_eq!(rep.nat_count, rep.elem_count);
        }
    }

    // the two round trips are identities on a sample presheaf
    let f = &emb.objects[2];
    let t = c.objects().next().unwrap();
    for x in 0..f.on_objects[t.0].size() {
        let nat = yoneda_nat_from_element(&c, f, t, x);
        assert_eq!(yoneda_element_from_nat(&c, t, &nat), x);
    }
    println!("element -> transformation -> element is the identity");

    yoneda_full_faithful(&c).unwrap();
    println!("the embedding is full and faithful");
}
