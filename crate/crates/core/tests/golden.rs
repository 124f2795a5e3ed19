use mitosis::suites::{gl_chain_display, skew_chain_display, skew_offspring_display, skew_worked_example};

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

#[test]
fn skew_worked_offspring() {
    assert_eq!(skew_offspring_display(&skew_worked_example(), 2).unwrap(), golden("skew_n3_i2.txt"));
}

#[test]
fn sp4_cone_chains() {
    assert_eq!(skew_chain_display(2, &[1, 2, 1, 2]).unwrap(), golden("sp4_chain_1212.txt"));
    assert_eq!(skew_chain_display(2, &[2, 1, 2, 1]).unwrap(), golden("sp4_chain_2121.txt"));
}

#[test]
fn gl3_chains() {
    assert_eq!(gl_chain_display(&[0, 1, 2], &[1, 2, 1]).unwrap(), golden("gl3_chain_121.txt"));
    assert_eq!(gl_chain_display(&[0, 1, 2], &[2, 1, 2]).unwrap(), golden("gl3_chain_212.txt"));
}

#[test]
fn repeated_letter_empties_the_chain() {
    let out = skew_chain_display(2, &[1, 1]).unwrap();
    assert!(out.ends_with("M1\n(empty)\n"), "{out}");
}
