use orientkit_core::characterize::{decide_product, DecideOptions};
use orientkit_core::enumerate::random_graph;
use orientkit_core::families::{bull, claw, cycle, path};
use orientkit_core::minor::find_induced_minor;
use orientkit_core::products::{direct, strong};
use orientkit_core::structure::simplicial_vertices;
use orientkit_core::{recognize_2sat, recognize_bruteforce, Graph, ProductKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sample(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    random_graph(rng, n)
}

#[test]
fn direct_with_p3_spot_checks() {
    for h in [cycle(3), cycle(5), path(5)] {
        let p = direct(&path(3), &h);
        assert!(!recognize_2sat(&p).is_yes(), "direct(P3, {h:?})");
        let v = decide_product(ProductKind::Direct, &path(3), &h, &DecideOptions::default()).unwrap();
        assert!(!v.is_1po);
    }
}

#[test]
fn strong_with_p3_spot_checks() {
    for h in [cycle(4), cycle(5), claw(), bull(), path(5)] {
        assert!(!recognize_2sat(&strong(&path(3), &h)).is_yes(), "strong(P3, {h:?})");
    }
    assert!(!recognize_2sat(&strong(&path(4), &path(4))).is_yes());
}

#[test]
fn simplicial_pairs_stay_simplicial() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 300 {
        let (a, b) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let g = random_graph(&mut rng, a);
        let h = random_graph(&mut rng, b);
        let p = strong(&g, &h);
        let simp = simplicial_vertices(&p);
        for u in simplicial_vertices(&g).iter() {
            for v in simplicial_vertices(&h).iter() {
                assert!(simp.contains(u * h.n() + v), "{g:?} {h:?} ({u},{v})");
                checked += 1;
            }
        }
    }
}

#[test]
fn induced_minors_of_one_po_graphs_are_one_po() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut found = 0;
    let mut tries = 0;
    while found < 500 {
        tries += 1;
        assert!(tries < 200_000, "only {found} minor pairs found");
        let host = sample(&mut rng, 3, 7);
        if !recognize_2sat(&host).is_yes() {
            continue;
        }
        let pattern = sample(&mut rng, 2, 5);
        if let Some(w) = find_induced_minor(&host, &pattern).unwrap() {
            assert!(w.verify(&host, &pattern));
            assert!(recognize_bruteforce(&pattern).unwrap().is_yes(), "{host:?} > {pattern:?}");
            found += 1;
        }
    }
}

#[test]
fn certificates_are_one_perfect_on_random_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let opts = DecideOptions::default();
    for _ in 0..400 {
        let g = sample(&mut rng, 2, 6);
        let h = sample(&mut rng, 2, 6);
        for kind in ProductKind::ALL {
            let v = decide_product(kind, &g, &h, &opts).unwrap();
            let product = kind.apply(&g, &h);
            assert_eq!(v.is_1po, recognize_2sat(&product).is_yes(), "{kind} {g:?} {h:?}");
            if let Some(d) = &v.certificate {
                assert!(d.is_one_perfect());
                assert_eq!(d.base(), &product);
            }
        }
    }
}
