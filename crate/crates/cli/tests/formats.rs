use compfactor::corpus::canonical_form;
use compfactor::{parse_auto, parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use compfactor_core::Graph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(62)) {
        let s = write_graph6(&g).unwrap();
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
        prop_assert_eq!(parse_auto(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(30)) {
        let s = write_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&s).unwrap(), g.clone());
        if g.order() > 0 {
            prop_assert_eq!(parse_auto(&s).unwrap(), g);
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(9), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by a splitmix-style sequence
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let j = ((x ^ (x >> 31)) % (i as u64 + 1)) as usize;
            perm.swap(i, j);
        }
        prop_assert_eq!(canonical_form(&g.permute(&perm)), canonical_form(&g));
    }
}

#[test]
fn bundled_corpus_is_canonical_and_sorted() {
    let text = include_str!("../data/connected_le8.g6");
    let lines: Vec<&str> = text.lines().collect();
    for w in lines.windows(2) {
        let (a, b) = (parse_graph6(w[0]).unwrap(), parse_graph6(w[1]).unwrap());
        assert!(
            (a.order(), w[0]) < (b.order(), w[1]),
            "{} then {}",
            w[0],
            w[1]
        );
    }
    for l in &lines {
        assert_eq!(write_graph6(&parse_graph6(l).unwrap()).unwrap(), *l);
    }
    for l in lines.iter().step_by(97) {
        let g = parse_graph6(l).unwrap();
        assert_eq!(write_graph6(&canonical_form(&g)).unwrap(), *l);
    }
}
