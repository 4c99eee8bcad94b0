//! Configuration grammar: accepted catalog files and rejected malformed
//! ones, with line-numbered diagnostics.

use rlcm_core::Family;
use rlcm_families::config::{build_family, parse_automaton, parse_config, ConfigError};
use rlcm_families::{catalog, with_family};

#[test]
fn every_preset_config_builds() {
    for p in catalog::presets() {
        let (fam, _) = build_family(p.config)
            .unwrap_or_else(|e| panic!("preset {} failed to build: {}", p.name, e));
        with_family!(fam, |f| {
            assert!(!f.generators().is_empty(), "{} has generators", p.name)
        });
    }
}

#[test]
fn comments_blanks_and_budgets() {
    let text = "\n# a comment\n[family]\nkind = nx\ngenerators = 2 3 5\n\n[budgets]\nradius = 3\ncandidates = 500\n";
    let (fam, budgets) = build_family(text).unwrap();
    with_family!(fam, |f| assert_eq!(f.generators().len(), 3));
    assert_eq!(budgets.radius, Some(3));
    assert_eq!(budgets.depth, None);
    assert_eq!(budgets.candidates, Some(500));
}

#[test]
fn diagnostics_carry_line_numbers() {
    let bad = "[family]\nkind = nx\nvalue without equals\n";
    match parse_config(bad) {
        Err(ConfigError::Line(3, _)) => {}
        other => panic!("expected a line-3 diagnostic, got {:?}", other),
    }
    let bad_section = "[family]\nkind = nx\n[unknown]\n";
    assert!(matches!(parse_config(bad_section), Err(ConfigError::Line(3, _))));
}

#[test]
fn kind_errors() {
    assert!(matches!(
        build_family("[family]\nkind = martian\n"),
        Err(ConfigError::UnknownKind(_))
    ));
    assert!(matches!(
        build_family("[family]\nkind = free-monoid\n"),
        Err(ConfigError::MissingKey { .. })
    ));
    assert!(matches!(build_family("[budgets]\nradius = 1\n"), Err(ConfigError::MissingKind)));
}

#[test]
fn automaton_table_is_validated() {
    // missing transition for state a on letter 1
    let missing = parse_automaton("01", &[(1, "a, 0 -> 1, 1".into())]);
    assert!(missing.is_err());
    // output letters must form a permutation per state
    let not_perm = parse_automaton(
        "01",
        &[(1, "a, 0 -> 1, 1".into()), (2, "a, 1 -> 1, a".into())],
    );
    assert!(not_perm.is_err());
    // the identity cannot be a source state
    let bad_identity = parse_automaton(
        "01",
        &[(1, "1, 0 -> 0, 1".into()), (2, "1, 1 -> 1, 1".into())],
    );
    assert!(bad_identity.is_err());
    // a well-formed odometer table parses, with `1` as the identity sink
    let ok = parse_automaton(
        "01",
        &[(1, "a, 0 -> 1, 1".into()), (2, "a, 1 -> 0, a".into())],
    )
    .unwrap();
    assert_eq!(ok.states, vec!['a']);
}

#[test]
fn fgp_hypotheses_rejected_at_build() {
    let shared_factor = "[family]\nkind = fgp\nrank = 2\nexponents = 2 1 ; 2 3\n";
    assert!(matches!(build_family(shared_factor), Err(ConfigError::Fgp(_))));
    let constant_poly = "[family]\nkind = polyq\npolys = T ; 2\n";
    assert!(matches!(build_family(constant_poly), Err(ConfigError::Poly(_))));
    let not_coprime = "[family]\nkind = polyq\npolys = T ; T\n";
    assert!(matches!(build_family(not_coprime), Err(ConfigError::Poly(_))));
}
