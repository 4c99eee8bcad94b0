//! Self-similar action laws for the shipped automata: transducer evaluation,
//! restriction identities, length preservation, and the prefix-rule ideal
//! structure of `X* ⋈ G`.

use rlcm_core::{ideal_equal, Family, LcmOutcome};
use rlcm_families::catalog::{build_preset, AnyFamily};
use rlcm_families::freegroup::{free_word_ball, FreeWord};
use rlcm_families::{MealyAutomaton, ZappaSzepFamily, ZsElem};

fn automaton(name: &str) -> ZappaSzepFamily {
    match build_preset(name) {
        Some(AnyFamily::Zappa(z)) => z,
        _ => panic!("{} is not an automaton preset", name),
    }
}

fn act_str(a: &MealyAutomaton, g: &FreeWord, w: &str) -> String {
    let letters: Vec<u8> = w.chars().map(|c| a.letter_index(c).unwrap()).collect();
    let (out, _) = a.act(g, &letters);
    out.iter().map(|&x| a.letters[x as usize]).collect()
}

#[test]
fn odometer_adds_one_with_carry() {
    let z = automaton("odometer");
    let a = FreeWord::generator(0, 1);
    // least significant bit first: a·00 = 10, a·10 = 01, a·11 = 00
    assert_eq!(act_str(&z.automaton, &a, "00"), "10");
    assert_eq!(act_str(&z.automaton, &a, "10"), "01");
    assert_eq!(act_str(&z.automaton, &a, "11"), "00");
    // a^4 fixes depth-2 words: the odometer is the 2-adic odometer
    let a4 = FreeWord::generator(0, 4);
    assert!(z.automaton.is_identity_upto(&a4, 2));
    assert!(!z.automaton.is_identity_upto(&a4, 3));
}

#[test]
fn identity_word_acts_trivially() {
    for name in ["odometer", "lamplighter"] {
        let z = automaton(name);
        for w in z.automaton.words_up_to(4) {
            let (out, rest) = z.automaton.act(&FreeWord::one(), &w);
            assert_eq!(out, w);
            assert!(rest.is_one());
        }
    }
}

/// g|_{vw} = (g|_v)|_w, (gh)|_v = g|_{h·v}·h|_v and g⁻¹|_{g·v} = (g|_v)⁻¹,
/// exhaustively on small words and group balls.
fn restriction_identities(z: &ZappaSzepFamily, ball_radius: usize, depth: usize) {
    let aut = &z.automaton;
    let ball = free_word_ball(aut.states.len() as u32, ball_radius);
    let words = aut.words_up_to(depth);
    for g in &ball {
        for v in &words {
            let (gv, g_at_v) = aut.act(g, v);
            // inverse rule
            let (_, ginv_at_gv) = aut.act(&g.inv(), &gv);
            assert_eq!(ginv_at_gv, g_at_v.inv(), "inverse restriction rule");
            for w in &words {
                if v.len() + w.len() > depth {
                    continue;
                }
                let mut vw = v.clone();
                vw.extend_from_slice(w);
                let (_, g_at_vw) = aut.act(g, &vw);
                let (_, g_at_v_at_w) = aut.act(&g_at_v, w);
                assert_eq!(g_at_vw, g_at_v_at_w, "cocycle rule for restrictions");
            }
        }
        for h in &ball {
            let gh = g.mul(h);
            for v in &words {
                // action is a homomorphism
                let (hv, h_at_v) = aut.act(h, v);
                let (ghv, gh_at_v) = aut.act(&gh, v);
                let (g_hv, g_at_hv) = aut.act(g, &hv);
                assert_eq!(ghv, g_hv, "(gh)·v = g·(h·v)");
                assert_eq!(gh_at_v, g_at_hv.mul(&h_at_v), "product restriction rule");
            }
        }
    }
}

#[test]
fn odometer_restriction_identities() {
    restriction_identities(&automaton("odometer"), 3, 5);
}

#[test]
fn lamplighter_restriction_identities() {
    restriction_identities(&automaton("lamplighter"), 2, 4);
}

#[test]
fn actions_preserve_length_and_permute_levels() {
    for name in ["odometer", "lamplighter"] {
        let z = automaton(name);
        let ball = free_word_ball(z.automaton.states.len() as u32, 3);
        for n in 0..=5 {
            let level = z.automaton.words_of_length(n);
            for g in &ball {
                let mut images: Vec<Vec<u8>> =
                    level.iter().map(|w| z.automaton.act(g, w).0).collect();
                images.sort();
                images.dedup();
                assert_eq!(images.len(), level.len(), "{}: level {} not permuted", name, n);
            }
        }
    }
}

#[test]
fn lamplighter_is_nonabelian() {
    let z = automaton("lamplighter");
    let a = FreeWord::generator(0, 1);
    let b = FreeWord::generator(1, 1);
    let ab = a.mul(&b);
    let ba = b.mul(&a);
    assert!(!z.automaton.acts_equal(&ab, &ba, 4));
}

#[test]
fn zappa_szep_prefix_rule() {
    let z = automaton("odometer");
    let one = z.identity().unwrap();
    let a = FreeWord::generator(0, 1);

    // unit times anything: the other ideal wins
    let e = z.parse_elem("(01,a)").unwrap();
    let unit = ZsElem::new(vec![], a.clone());
    let lcm = z.right_lcm(&unit, &e).lcm().unwrap();
    assert!(ideal_equal(&z, &lcm, &e));
    assert!(ideal_equal(&z, &z.right_lcm(&one, &e).lcm().unwrap(), &e));

    // incomparable prefixes are disjoint
    let w0 = z.parse_elem("(0,1)").unwrap();
    let w1 = z.parse_elem("(1,1)").unwrap();
    assert_eq!(z.right_lcm(&w0, &w1), LcmOutcome::Disjoint);

    // ("0",a) and ("01",1): "0" is a prefix, so the lcm is the longer word
    let p = z.parse_elem("(0,a)").unwrap();
    let q = z.parse_elem("(01,1)").unwrap();
    let lcm = z.right_lcm(&p, &q).lcm().unwrap();
    assert!(ideal_equal(&z, &lcm, &q));
    // and the lcm is genuinely in both ideals
    let s = z.left_divide(&p, &lcm).unwrap();
    assert_eq!(z.multiply(&p, &s), lcm);

    // ball brute force at depth 3: common multiples of p and q all lie in
    // the lcm's ideal
    let ball = rlcm_core::shortlex_ball(&z, &z.generators(), 3);
    for w in &ball {
        if z.left_divide(&p, w).is_some() && z.left_divide(&q, w).is_some() {
            assert!(rlcm_core::divides(&z, &lcm, w));
        }
    }
}

#[test]
fn zappa_szep_multiplication_law() {
    let z = automaton("odometer");
    // (x,g)(y,h) = (x(g·y), g|_y h) on a concrete case: a·"11" = "00" with
    // a carry left in the restriction, so ("0",a)·("11",1) = ("000",a)
    let p = z.parse_elem("(0,a)").unwrap();
    let q = z.parse_elem("(11,1)").unwrap();
    let prod = z.multiply(&p, &q);
    assert_eq!(z.format_elem(&prod), "(000,a)");
}
