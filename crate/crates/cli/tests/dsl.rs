use proptest::prelude::*;
use rwinv::dsl::*;
use rwinv::error::CliError;
use rwinv_core::homology::GraphVector;
use rwinv_core::{canonicalize, OrientedGraph, Q};

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

const THETA: &str = "trivalent 2\nedge 0.0 1.0\nedge 0.1 1.2\nedge 0.2 1.1";
const DUMBBELL: &str = "trivalent 2\nedge 0.0 0.1\nedge 0.2 1.0\nedge 1.1 1.2";

#[test]
fn theta_and_dumbbell_examples() {
    let t = parse_graph(THETA).unwrap();
    assert!(!t.canonical);
    assert_eq!(t.graph.vertex_count(), 2);
    assert_eq!(t.graph.edges().len(), 3);
    assert!(!t.graph.has_loop());
    assert!(t.graph.is_connected());

    let d = parse_graph(DUMBBELL).unwrap().graph;
    assert_eq!(d.edges().len(), 3);
    assert_eq!(d.edges().iter().filter(|&&e| d.is_loop(e)).count(), 2);
}

#[test]
fn incomplete_matching_names_the_unmatched_flags() {
    let err = parse_graph("trivalent 2\nedge 0.0 1.0\nedge 0.1 1.2").unwrap_err();
    assert_eq!(err.exit_code(), 1);
    assert!(err.to_string().contains("flags 0.2, 1.1 unmatched"), "{err}");
}

#[test]
fn malformed_graph_files() {
    let cases = [
        "",
        "# only a comment\n",
        "trivalent two\n",
        "cubic 2\nedge 0.0 1.0",
        "trivalent 2\nedge 0.0 1.0\nedge 0.1 1.2\nedge 0.2",
        "trivalent 2\nedge 0.0 1.0\nedge 0.1 1.2\nedge 0.2 1.1 extra",
        "trivalent 2\nedge 0.0 1.0\nedge 0.1 1.2\nedge 0.2 1.x",
        "trivalent 2\nedge 0.0 1.0\nedge 0.1 1.2\nedge 0.2 0.0",
        "trivalent 2\nedge 0.0 1.0\nedge 0.1 1.2\nedge 0.2 1.3",
        "trivalent 3\nedge 0.0 1.0\nedge 0.1 1.2\nedge 0.2 1.1",
    ];
    for text in cases {
        let err = parse_graph(text).unwrap_err();
        assert!(matches!(err, CliError::Input(_) | CliError::Compute(_)), "{text:?}: {err:?}");
        assert_eq!(err.exit_code(), 1);
    }
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let text = "# theta\n\ntrivalent 2   # two vertices\nedge 0.0 1.0\n\nedge 0.1 1.2 # middle\nedge 0.2 1.1\n";
    assert_eq!(parse_graph(text).unwrap().graph, parse_graph(THETA).unwrap().graph);
}

#[test]
fn canonical_header_is_verified() {
    let g = parse_graph(THETA).unwrap().graph;
    let c = canonicalize(&g);
    let text = format_graph(&c.key.graph(), true);
    assert!(text.starts_with("canonical trivalent 2\n"));
    let back = parse_graph(&text).unwrap();
    assert!(back.canonical);
    assert_eq!(back.graph, c.key.graph());

    let swapped = c.key.graph().swap_slots(0, 0, 1);
    assert!(parse_graph(&format_graph(&swapped, true)).is_err());
    assert!(parse_graph(&format_graph(&swapped, false)).is_ok());

    let dumbbell = parse_graph(DUMBBELL).unwrap().graph;
    assert_eq!(canonicalize(&dumbbell).sign, 0);
    assert!(parse_graph(&format_graph(&dumbbell, true)).is_err());
}

#[test]
fn keys_need_not_be_canonical() {
    let g = parse_key("2:0.0-1.0,0.1-1.2,0.2-1.1").unwrap();
    assert_eq!(g, parse_graph(THETA).unwrap().graph);
    for bad in ["", "2", "x:0.0-1.0", "2:0.0-1.0,0.1", "2:0.0-1.0,0.1-1.2"] {
        assert!(parse_key(bad).is_err(), "{bad}");
    }
}

#[test]
fn vectors_are_canonicalized_and_summed() {
    let g = parse_graph(THETA).unwrap().graph;
    let c = canonicalize(&g);
    let swapped = g.swap_slots(1, 0, 2);
    let text = format!("# two copies, one reversed\n3/2 * {}\n-1/2 * {}\n", key_of(&g), key_of(&swapped));
    let v = parse_vector(&text).unwrap();
    assert_eq!(v.len(), 1);
    assert_eq!(v.coefficient(&c.key), Q::new(2.into(), 1.into()) * q(i64::from(c.sign)));
    assert_eq!(parse_vector(&format_vector(&v)).unwrap(), v);
    assert!(parse_vector("").is_err());
    assert!(parse_vector("1 2:0.0-1.0,0.1-1.2,0.2-1.1").is_err());
    assert!(parse_vector("0.5 * 2:0.0-1.0,0.1-1.2,0.2-1.1").is_err());
}

fn key_of(g: &OrientedGraph) -> String {
    let edges: Vec<String> =
        g.edges().iter().map(|(a, b)| format!("{}.{}-{}.{}", a / 3, a % 3, b / 3, b % 3)).collect();
    format!("{}:{}", g.vertex_count(), edges.join(","))
}

#[test]
fn graph_or_vector_dispatch() {
    let from_graph = parse_graph_or_vector(THETA).unwrap();
    assert_eq!(from_graph, GraphVector::from_graph(&parse_graph(THETA).unwrap().graph));
    let from_vector = parse_graph_or_vector("1 * 2:0.0-1.0,0.1-1.2,0.2-1.1").unwrap();
    assert_eq!(from_vector, from_graph);
}

#[test]
fn rationals_are_exact() {
    assert_eq!(parse_rational("-7/96").unwrap(), Q::new((-7).into(), 96.into()));
    assert_eq!(parse_rational("+12").unwrap(), q(12));
    assert_eq!(parse_rational(" 4/2 ").unwrap(), q(2));
    for bad in ["1.5", "1e3", "2E1", "inf", "NaN", "", "1/0", "one", "1/2/3"] {
        let err = parse_rational(bad).unwrap_err();
        assert_eq!(err.exit_code(), 2, "{bad}");
    }
    assert_eq!(parse_rationals("5,-86,785").unwrap(), vec![q(5), q(-86), q(785)]);
}

#[test]
fn partitions() {
    assert_eq!(parse_partition("2,4,2").unwrap().to_string(), "4,2,2");
    assert_eq!(parse_even_partition("4,4").unwrap().to_string(), "4,4");
    assert!(parse_even_partition("3,1").is_err());
    assert!(parse_partition("2,0").is_err());
    assert!(parse_partition("").is_err());
    assert!(parse_partition("a").is_err());
}

fn graph_strategy(max_k: usize) -> impl Strategy<Value = OrientedGraph> {
    (1..=max_k).prop_flat_map(|k| Just((0..6 * k).collect::<Vec<usize>>()).prop_shuffle()).prop_map(|flags| {
        let mut partner = vec![0; flags.len()];
        for pair in flags.chunks(2) {
            partner[pair[0]] = pair[1];
            partner[pair[1]] = pair[0];
        }
        OrientedGraph::from_partner(partner).expect("perfect matching")
    })
}

proptest! {
    #[test]
    fn graph_text_round_trips(g in graph_strategy(4)) {
        let back = parse_graph(&format_graph(&g, false)).unwrap();
        prop_assert_eq!(back.graph, g);
    }

    #[test]
    fn canonical_text_round_trips(g in graph_strategy(4)) {
        let c = canonicalize(&g);
        prop_assume!(c.sign != 0);
        let back = parse_graph(&format_graph(&c.key.graph(), true)).unwrap();
        prop_assert!(back.canonical);
        prop_assert_eq!(back.graph, c.key.graph());
    }

    #[test]
    fn vector_text_round_trips(gs in prop::collection::vec((graph_strategy(3), -50i64..50, 1i64..10), 1..5)) {
        let k = gs[0].0.degree();
        let mut v = GraphVector::zero(k);
        for (g, n, d) in gs.iter().filter(|(g, _, _)| g.degree() == k) {
            v.add_graph(g, &Q::new((*n).into(), (*d).into()));
        }
        if !v.is_zero() {
            prop_assert_eq!(parse_vector(&format_vector(&v)).unwrap(), v);
        }
    }
}
