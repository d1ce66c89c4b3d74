use std::io::Write;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rwinv").chain(args.iter().copied());
    let code = rwinv::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn temp_file(name: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("rwinv-{}-{name}", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["rw", "--space", "hilb:1", "--class", "theta"]), "48\n");
    assert_eq!(ok(&["weight", "su2", "--class", "theta"]), "-6\n");
    let basis = ok(&["basis", "--degree", "4"]);
    assert_eq!(basis.lines().count(), 6);
    assert!(basis.lines().all(|l| l.contains(" * 8:")), "{basis}");
}

#[test]
fn class_names_and_spaces() {
    assert_eq!(ok(&["rw", "--space", "kummer:4", "--class", "theta2^2"]), "288000\n");
    assert_eq!(ok(&["rw", "--space", "S^[2]xS^[2]", "--class", "theta^2*theta2"]), "-1036800\n");
    assert_eq!(ok(&["rw", "--space", "C_4", "--class", "g8b"]), "24\n");
    assert_eq!(ok(&["rw", "--space", "virtual:1", "--class", "theta"]), "-6\n");
    assert_eq!(ok(&["rw", "--space", "S^3", "--class", "theta^3"]), "663552\n");
    let t4 = ok(&["space", "--name", "T^[[4]]"]);
    assert!(t4.contains("s: 490000\n"));
    assert!(t4.contains("b[theta2^2]: 288000 (rational-function)\n"));
    let s2 = ok(&["space", "--name", "S^[2]"]);
    assert!(s2.contains("c4: 324\n"));
    assert!(s2.contains("chi_y: 3 -42 234 -42 3\n"));
}

#[test]
fn weights() {
    assert_eq!(ok(&["weight", "su2-polywheel", "--partition", "4,4"]), "3780\n");
    assert_eq!(ok(&["weight", "su2-polywheel", "--partition", "4,4", "--method", "recursion"]), "3780\n");
    assert_eq!(ok(&["weight", "su2-polywheel", "--partition", "4,4", "--method", "contract"]), "3780\n");
    assert_eq!(ok(&["weight", "su2-polywheel", "--partition", "6"]), "-210\n");
    let theta = temp_file("theta.graph", "trivalent 2\nedge 0.0 1.0\nedge 0.1 1.2\nedge 0.2 1.1\n");
    let w = ok(&["weight", "su2", "--graph", &theta]);
    assert!(w == "6\n" || w == "-6\n", "{w}");
}

#[test]
fn homology_commands() {
    assert_eq!(ok(&["expand-polywheel", "--partition", "4,4"]), "theta2^2: 25/4\ntheta4: 48\ng8b: 24\n");
    assert_eq!(ok(&["theta-polywheel", "--degree", "2"]), "2,2: 1\n4: -4/5\n");
    assert_eq!(ok(&["polywheel-solve", "--degree", "2", "--class", "theta2"]), "2,2: 0\n4: 2/5\n");

    let theta = temp_file("reduce.graph", "trivalent 2\nedge 0.0 1.0\nedge 0.1 1.2\nedge 0.2 1.1\n");
    let r = ok(&["reduce", "--degree", "1", "--input", &theta]);
    assert!(r == "theta: 1\n" || r == "theta: -1\n", "{r}");
    let c = ok(&["canonical", "--graph", &theta]);
    assert!(c.contains("canonical trivalent 2\n"), "{c}");

    let dumbbell = temp_file("dumbbell.graph", "trivalent 2\nedge 0.0 0.1\nedge 0.2 1.0\nedge 1.1 1.2\n");
    assert_eq!(ok(&["reduce", "--degree", "1", "--input", &dumbbell]), "0\n");
    let (code, _, err) = run(&["reduce", "--degree", "2", "--input", &theta]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn genus_commands() {
    assert_eq!(ok(&["chi-y", "--space", "hilb:4"]), "S^[4]: 5 -86 785 -4556 14786 -4556 785 -86 5\n");
    assert_eq!(ok(&["chi-y", "--space", "kummer:2"]), "T^[[2]]: 3 -6 90 -6 3\n");
    assert_eq!(ok(&["td", "--power", "-1/2", "--degree", "1"]), "s2: 1/48\n");
    assert_eq!(ok(&["td", "--power", "+1/2", "--degree", "1"]), "s2: -1/48\n");
    let chi = ok(&["chi-in-chern", "--degree", "1"]);
    assert_eq!(chi, "chi^0: 1/12*c2\nchi^1: -5/6*c2\nchi^2: 1/12*c2\n");
    let inv = ok(&["invert-chi", "--degree", "4", "--values", "5,-86,785,-4556,14786"]);
    assert!(inv.contains("s2^2*s4: -8*s + 8238720\n"), "{inv}");
    let inv = ok(&["invert-chi", "--degree", "4", "--values", "5,-10,15,-20,650", "--s", "490000"]);
    assert!(inv.contains("s2^4: 23520000\n"), "{inv}");
    assert_eq!(ok(&["invert-chi", "--degree", "2", "--values", "3,-42,234", "--basis", "c"]), "c2^2: 828\nc4: 324\n");
}

#[test]
fn span_and_cobordism() {
    assert_eq!(ok(&["span", "--target", "C_2", "--dictionary", "S^[2],S^2"]), "S^[2]: -1/12\nS^2: 7/96\n");
    assert_eq!(
        ok(&["span", "--target", "C_4", "--dictionary", "S^[4],SxS^[3],S^[2]xS^[2],S^2xS^[2],S^4"]),
        "status: infeasible\n"
    );
    let demo = ok(&["cobordism-demo"]);
    assert!(demo.contains("X: 7*S^[4] - 49/8*SxS^[3] - 3*S^[2]xS^[2] + 67/12*S^2xS^[2] - 21/16*S^4\n"));
    assert!(demo.contains("b[theta2^2](X): 278784\n"));
    assert!(demo.contains("b[theta2^2](T^[[4]]): 288000\n"));
    assert!(demo.contains("b[theta2^2](left): 19353600\n"));
    assert!(demo.contains("b[theta2^2](right): 19795968\n"));
    assert!(demo.contains("SxS^[3]"));
}

#[test]
fn tsv_format() {
    assert_eq!(ok(&["--format", "tsv", "theta-polywheel", "--degree", "2"]), "2,2\t1\n4\t-4/5\n");
    let chi = ok(&["chi-y", "--space", "hilb:1", "--format", "tsv"]);
    assert_eq!(chi, "chi^0\t2\nchi^1\t-20\nchi^2\t2\n");
    assert_eq!(ok(&["--seed-order", "rw", "--space", "hilb:1", "--class", "theta"]), "48\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["basis"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
    assert_eq!(run(&["tables", "--appendix", "F"]).0, 2);
    assert_eq!(run(&["rw", "--space", "hilb:1", "--class", "bogus"]).0, 2);
    assert_eq!(run(&["rw", "--space", "quintic", "--class", "theta"]).0, 2);
    assert_eq!(run(&["rw", "--space", "C_2xS", "--class", "theta^3"]).0, 2);
    assert_eq!(run(&["invert-chi", "--degree", "1", "--values", "2.0,-20"]).0, 2);
    assert_eq!(run(&["td", "--power", "0.5", "--degree", "1"]).0, 2);
    assert_eq!(run(&["td", "--power", "1", "--degree", "1"]).0, 2);
    assert_eq!(run(&["weight", "su2-polywheel", "--partition", "3,1"]).0, 2);

    assert_eq!(run(&["rw", "--space", "hilb:1", "--class", "theta^2"]).0, 1);
    assert_eq!(run(&["rw", "--space", "hilb:5", "--class", "theta"]).0, 1);
    assert_eq!(run(&["basis", "--degree", "9"]).0, 1);
    assert_eq!(run(&["reduce", "--degree", "1", "--input", "/nonexistent/graph"]).0, 1);
    assert_eq!(run(&["invert-chi", "--degree", "1", "--values", "2,-21"]).0, 1);
    let (code, out, err) = run(&["chi-y", "--space", "kummer:0"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.starts_with("error: "), "{err}");
}

#[test]
fn output_is_deterministic() {
    let a = ok(&["tables", "--appendix", "E", "--format", "tsv"]);
    let b = ok(&["tables", "--appendix", "E", "--format", "tsv"]);
    assert_eq!(a, b);
}
