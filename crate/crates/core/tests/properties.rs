use chargraph::arith::{as_prime_power, checked_prime_power, factorize, is_prime};
use chargraph::degrees::{abelian, bundled_corpus, direct_product, gen_psl2, DegreeMultiset, Family, Provenance};
use chargraph::domination::{is_dominating, minimum_odd_dominating_set};
use chargraph::graph::{
    block_decomposition, build_character_graph, odd_cycle_through, odd_cycle_vertices, PrimeGraph, VertexSet,
};
use chargraph::oracle::{brute_odd_cycle_vertices, graph_from_code, pair_count, random_graph};
use chargraph::theorem::{check_equivalence, DEFAULT_ALPHA_CAP};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sieve_factorization(spf: &[u32], mut n: usize) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    while n > 1 {
        let p = spf[n] as usize;
        match out.last_mut() {
            Some((q, e)) if *q == p as u64 => *e += 1,
            _ => out.push((p as u64, 1)),
        }
        n /= p;
    }
    out
}

#[test]
fn factorization_matches_sieve_up_to_a_million() {
    const N: usize = 1_000_000;
    let mut spf = vec![0u32; N + 1];
    for i in 2..=N {
        if spf[i] == 0 {
            for j in (i..=N).step_by(i) {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
            }
        }
    }
    for n in 1..=N {
        let f = factorize(n as u64).unwrap();
        assert_eq!(f.factors(), sieve_factorization(&spf, n).as_slice(), "n = {n}");
        assert_eq!(f.product(), n as u64);
        assert_eq!(is_prime(n as u64), spf[n] as usize == n && n > 1, "n = {n}");
    }
}

#[test]
fn prime_powers_round_trip() {
    for u in (2..=100u64).filter(|&u| is_prime(u)) {
        let mut alpha = 1;
        while let Some(q) = checked_prime_power(u, alpha) {
            assert_eq!(as_prime_power(q).unwrap(), Some((u, alpha)));
            alpha += 1;
        }
    }
}

proptest! {
    #[test]
    fn factorization_reconstructs(n in 1u64..(1u64 << 63)) {
        let f = factorize(n).unwrap();
        prop_assert_eq!(f.product(), n);
        prop_assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
        prop_assert!(f.factors().iter().all(|&(p, e)| e >= 1 && is_prime(p)));
    }

    #[test]
    fn semiprimes_split(a in 1_000_000u64..3_000_000_000, b in 1_000_000u64..3_000_000_000) {
        let n = a * b;
        let f = factorize(n).unwrap();
        prop_assert_eq!(f.product(), n);
        prop_assert!(f.primes().all(is_prime));
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = PrimeGraph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let pairs = pair_count(n);
            (Just(n), 0u64..(1u64 << pairs).max(1))
        })
        .prop_map(|(n, code)| graph_from_code(n, code))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(10)) {
        let back = g.complement().complement();
        prop_assert_eq!(back.edge_labels(), g.edge_labels());
        prop_assert_eq!(back.vertices(), g.vertices());
    }

    #[test]
    fn blocks_partition_edges(g in arb_graph(10)) {
        let d = block_decomposition(&g);
        for (i, j) in g.edges() {
            let holders = d.blocks.iter().filter(|b| b.edges.contains(&(i, j))).count();
            prop_assert_eq!(holders, 1);
        }
        let total: usize = d.blocks.iter().map(|b| b.edges.len()).sum();
        prop_assert_eq!(total, g.edge_count());
        for (x, a) in d.blocks.iter().enumerate() {
            for b in &d.blocks[x + 1..] {
                prop_assert!(a.vertices.intersection(b.vertices).len() <= 1);
            }
        }
        for v in 0..g.len() {
            let count = d.blocks.iter().filter(|b| b.vertices.contains(v)).count();
            prop_assert_eq!(d.cut_vertices.contains(v), count >= 2);
        }
    }

    #[test]
    fn domination_is_monotone(g in arb_graph(9), a in any::<u64>(), b in any::<u64>()) {
        let all = g.all().bits();
        let d = VertexSet::from_bits(a & all);
        let bigger = d.union(VertexSet::from_bits(b & all));
        if is_dominating(&g, d).unwrap() {
            prop_assert!(is_dominating(&g, bigger).unwrap());
        }
    }

    #[test]
    fn through_cycles_exist_exactly_for_odd_cycle_vertices(g in arb_graph(8)) {
        let odd = odd_cycle_vertices(&g);
        for v in 0..g.len() {
            let through = odd_cycle_through(&g, v).unwrap();
            prop_assert_eq!(through.is_some(), odd.vertices.contains(v));
            if let Some(c) = through {
                prop_assert!(c.len() % 2 == 1 && g.is_cycle(&c) && c[0] == v);
            }
        }
    }

    #[test]
    fn products_commute_and_associate(
        qa in prop::sample::select(vec![4u64, 5, 7, 8, 9]),
        qb in prop::sample::select(vec![5u64, 7, 9, 11]),
        k in 1u64..6,
    ) {
        let a = gen_psl2(qa).unwrap();
        let b = Family::Sl2.generate(qb).unwrap();
        let c = abelian(k).unwrap();
        let ab = direct_product(&a, &b).unwrap();
        let ba = direct_product(&b, &a).unwrap();
        prop_assert_eq!(ab.entries(), ba.entries());
        prop_assert_eq!(ab.group_order(), ba.group_order());
        let left = direct_product(&ab, &c).unwrap();
        let right = direct_product(&a, &direct_product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left.entries(), right.entries());
        prop_assert_eq!(left.group_order(), right.group_order());
    }
}

#[test]
fn random_graphs_agree_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let g = random_graph(&mut rng, 10);
        let odd = odd_cycle_vertices(&g);
        let brute = brute_odd_cycle_vertices(&g);
        assert_eq!(odd.vertices, brute, "{g:?}");
        let exists = !odd.vertices.is_empty() && is_dominating(&g, odd.vertices).unwrap();
        let cert = minimum_odd_dominating_set(&g);
        assert_eq!(cert.is_some(), exists, "{g:?}");
        if let Some(c) = cert {
            assert!(c.verify(&g));
        }
    }
}

#[test]
fn psl2_support_sizes() {
    for q in (4..=1000u64).filter(|&q| Family::Psl2.accepts(q)) {
        let support = gen_psl2(q).unwrap().support();
        if q % 2 == 0 {
            assert_eq!(support, vec![1, q - 1, q, q + 1]);
        } else if q >= 11 {
            assert_eq!(support.len(), 5, "q = {q}");
        }
    }
    assert_eq!(gen_psl2(5).unwrap().support().len(), 4);
    assert_eq!(gen_psl2(7).unwrap().support().len(), 5);
    assert_eq!(gen_psl2(9).unwrap().support().len(), 5);
}

#[test]
fn solvable_records_have_bipartite_complements() {
    let corpus = bundled_corpus();
    let solvable: Vec<&DegreeMultiset> = corpus.multisets().filter(|d| d.has_tag("solvable")).collect();
    assert!(solvable.len() >= 10);
    for d in solvable {
        let g = build_character_graph(d).unwrap();
        assert!(chargraph::graph::is_bipartite(&g.complement()), "{}", d.name());
    }
}

#[test]
fn bundled_corpus_satisfies_equivalence() {
    let corpus = bundled_corpus();
    assert!(corpus.errors.is_empty());
    for d in corpus.multisets() {
        assert_eq!(d.provenance(), Provenance::File);
        let g = build_character_graph(d).unwrap();
        let r = check_equivalence(&g, DEFAULT_ALPHA_CAP);
        assert!(r.equivalent, "{}: {:?}", d.name(), r.conditions());
        assert!(r.verify());
        if r.c.holds {
            // a disconnected non-solvable Δ has an isolated vertex
            assert!(!g.isolated_vertices().is_empty(), "{}", d.name());
        }
    }
}
