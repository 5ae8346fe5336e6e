use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kabelian")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kabelian"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn class_size_of_ababaaaa() {
    let o = run(&["class", "size", "--k", "2", "ababaaaa"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "10\n");
}

#[test]
fn gray_decode_prints_ordering() {
    let o = run(&["gray", "decode", "--n", "5", "1114111"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).lines().collect::<Vec<_>>(),
        ["00000", "00001", "00011", "00111", "00101", "01011", "01111", "11111"]
    );
}

#[test]
fn equivalence() {
    assert_eq!(stdout(&run(&["equiv", "--k", "2", "aababb", "abbaab"])), "true\n");
    assert_eq!(stdout(&run(&["equiv", "--k", "2", "ababab", "aababb"])), "false\n");
}

#[test]
fn batch_input_from_stdin() {
    let o = run_stdin(&["class", "size", "--k", "2", "-"], "ababaaaa\naababb\n");
    assert_eq!(stdout(&o), "ababaaaa 10\naababb 4\n");
    let o = run_stdin(&["singleton", "check", "--k", "2", "--format", "csv", "-"], "ababab\naababb\n");
    assert_eq!(stdout(&o), "word,singleton\nababab,true\naababb,false\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["class", "size", "--k", "2", "abc", "--alphabet", "ab"]).status.code(), Some(1));
    assert_eq!(run(&["switch", "apply", "--k", "4", "aabababaaabab", "2,3,4,12"]).status.code(), Some(1));
    assert_eq!(run(&["class", "enum", "--k", "1", "aaabbcc", "--guard", "5"]).status.code(), Some(2));
    assert_eq!(run(&["singleton", "list", "--n", "20", "--k", "2", "--guard", "1000"]).status.code(), Some(2));
    assert_eq!(run(&["ng", "ham", "--n", "9", "--budget", "3"]).status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn switching_commands() {
    assert_eq!(
        stdout(&run(&["switch", "apply", "--k", "4", "aabababaaabab", "2,3,4,11"])),
        "aababaaababab\n"
    );
    assert_eq!(
        stdout(&run(&["switch", "class", "--k", "2", "aababb"])),
        "aababb\naabbab\nabaabb\nabbaab\n"
    );
    assert_eq!(
        stdout(&run(&["class", "enum", "--k", "2", "aababb"])),
        "aababb\naabbab\nabaabb\nabbaab\n"
    );
}

#[test]
fn factor_vectors() {
    assert_eq!(stdout(&run(&["psi", "--k", "2", "ababaaaa", "--dense"])), "aa 3\nab 2\nba 2\nbb 0\n");
    assert_eq!(
        stdout(&run(&["psi", "--k", "2", "ababaaaa", "--format", "json"])),
        "{\"aa\":3,\"ab\":2,\"ba\":2}\n"
    );
    let dot = stdout(&run(&["class", "graph", "--k", "2", "ababaaaa", "--format", "dot"]));
    assert!(dot.starts_with("digraph"));
}

#[test]
fn singleton_commands() {
    assert_eq!(stdout(&run(&["singleton", "count", "--n", "10", "--k", "2"])), "24\n");
    assert_eq!(stdout(&run(&["singleton", "list", "--n", "4", "--k", "2"])).lines().count(), 12);
    assert_eq!(
        stdout(&run(&["singleton", "factorize", "--k", "4", "0010101010001111"])),
        "0 (01)^9/2 001111\n"
    );
    assert_eq!(run(&["singleton", "factorize", "--k", "2", "aababb"]).status.code(), Some(1));
    assert!(run(&["singleton", "types", "--n", "8", "--k", "3"]).status.success());
}

#[test]
fn necklace_commands() {
    assert_eq!(stdout(&run(&["necklace", "count", "--n", "18"])), "14602\n");
    assert_eq!(stdout(&run(&["necklace", "count", "--n", "4", "--alphabet", "abc"])), "24\n");
    assert_eq!(
        stdout(&run(&["necklace", "list", "--n", "4"])),
        "0000\n0001\n0011\n0101\n0111\n1111\n"
    );
    let dot = stdout(&run(&["db", "export", "--n", "2"]));
    assert_eq!(dot.matches("->").count(), 8);
}

#[test]
fn necklace_graph_commands() {
    assert_eq!(stdout(&run(&["ng", "build", "--n", "4"])).lines().count(), 6);
    assert_eq!(stdout(&run(&["ng", "ham", "--n", "4"])), "absent\n");
    assert_eq!(stdout(&run(&["ng", "ham", "--n", "5"])).lines().count(), 8);
    assert_eq!(stdout(&run(&["ng", "longest", "--n", "6"])).lines().count(), 13);
}

#[test]
fn decomposition_verify() {
    let o = run(&["decomp", "verify", "--n", "2", "0", "01", "1"]);
    assert_eq!(stdout(&o), "cycles: 3\nleftover: 0\nmaximal: true\nlisted order is a path: true\n");
    let o = run(&["decomp", "verify", "--n", "3", "0011", "001"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn gray_commands() {
    assert_eq!(stdout(&run(&["gray", "verify", "--n", "5", "1114111"])), "true\n");
    assert_eq!(stdout(&run(&["gray", "verify", "--n", "5", "111"])), "false\n");
    let o = run_stdin(&["gray", "encode", "-"], "00000\n00001\n00011\n00111\n00101\n01011\n01111\n11111\n");
    assert_eq!(stdout(&o), "1114111\n");
    let code = stdout(&run(&["gray", "search", "--n", "7"]));
    assert_eq!(stdout(&run(&["gray", "verify", "--n", "7", code.trim()])), "true\n");
}
