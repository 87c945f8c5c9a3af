mod common;

use std::collections::BTreeSet;

use common::{all_words, templates_over_ab};
use proptest::prelude::*;
use regsep::pieces::{kpeq, pattern_power, pieces_up_to, PieceSet};
use regsep::template::*;
use regsep::{word, Symbol, Word};

fn t(s: &str) -> Template {
    s.parse().unwrap()
}

/// Oracle: tries every way of cutting `w` into `ℓ` factors.
fn brute_implements(w: &[Symbol], tpl: &Template, p: usize) -> bool {
    fn go(w: &[Symbol], items: &[TemplateItem], p: usize) -> bool {
        let Some((first, rest)) = items.split_first() else {
            return w.is_empty();
        };
        (0..=w.len()).any(|j| {
            let f = &w[..j];
            let fits = match first {
                TemplateItem::Letter(a) => f.len() == 1 && f[0] == *a,
                TemplateItem::Set(b) => {
                    let order: Word = b.iter().cloned().collect();
                    f.iter().all(|x| b.contains(x)) && brute_power(f, &order) >= p
                }
            };
            fits && go(&w[j..], rest, p)
        })
    }
    go(w, tpl.items(), p)
}

/// Largest `q` with `(b1⋯bn)^q` a subsequence of `f`.
fn brute_power(f: &[Symbol], order: &[Symbol]) -> usize {
    (0..=f.len())
        .take_while(|&q| {
            let target: Word = (0..q).flat_map(|_| order.iter().cloned()).collect();
            regsep::pieces::is_piece(&target, f)
        })
        .last()
        .unwrap_or(0)
}

#[test]
fn unambiguity_examples() {
    assert!(is_unambiguous_template(&t("a,{b,c},d,{a}")));
    assert!(!is_unambiguous_template(&t("b,{b,c},d,{a}")));
    assert!(!is_unambiguous_template(&t("a,{b,c},{c},{a}")));
    assert!(is_unambiguous_template(&t("{a,b},{b,c}")));
    assert!(is_unambiguous_template(&Template::default()));
}

#[test]
fn text_and_json_forms() {
    let tpl = t("a, {c,b}, d,{a}");
    assert_eq!(tpl.to_string(), "a,{b,c},d,{a}");
    let json = serde_json::to_string(&tpl).unwrap();
    assert_eq!(json, r#"["a",["b","c"],"d",["a"]]"#);
    assert_eq!(serde_json::from_str::<Template>(&json).unwrap(), tpl);
    assert!(serde_json::from_str::<Template>(r#"["a",[]]"#).is_err());
    assert!("a,{b".parse::<Template>().is_err());
    assert!("a,,b".parse::<Template>().is_err());
    assert!("{}".parse::<Template>().is_err());
    assert_eq!("".parse::<Template>().unwrap(), Template::default());
}

#[test]
fn implementation_examples() {
    let w = word("abccbbcbdaaaa");
    let tpl = t("a,{b,c},d,{a}");
    let imp = is_p_implementation(&w, &tpl, 2).expect("2-implementation");
    assert_eq!(imp.cut_points, vec![0, 1, 8, 9, 13]);
    let factors: Vec<Word> = imp.factors(&w).into_iter().map(|f| f.to_vec()).collect();
    assert_eq!(factors, vec![word("a"), word("bccbbcb"), word("d"), word("aaaa")]);
    assert!(is_p_implementation(&w, &tpl, 3).is_none());
    assert_eq!(pattern_power(&word("bccbbcb"), &word("bc")), 2);
    assert_eq!(brute_power(&word("bccbbcb"), &word("bc")), 2);
    let any = word("cabbage");
    assert!(is_p_implementation(&any, &Template::of_word(&any), 7).is_some());
    assert!(is_p_implementation(&[], &Template::default(), 3).is_some());
}

#[test]
fn reduction_examples() {
    let w = word("abababab");
    let r = reduce_to_short_template(&w, 2);
    assert!(r.items().contains(&TemplateItem::set(['a', 'b'])));
    assert!(is_p_implementation(&w, &r, 2).is_some());
    assert_eq!(reduce_to_short_template(&word("abc"), 5), Template::of_word(&word("abc")));
    assert!(reduce_to_short_template(&[], 3).is_empty());
}

#[test]
fn reduction_of_single_letter_runs() {
    // p = |A| = 1: runs still collapse into a single set item
    let r = reduce_to_short_template(&word("aaaa"), 1);
    assert_eq!(r, t("{a}"));
}

#[test]
fn bounds() {
    assert_eq!(detectability_kappa(1, 2, 2), 4);
    assert_eq!(detectability_kappa(2, 3, 3), 18);
    assert_eq!(detectability_kappa(1, 1, 1), 1);
    assert_eq!(ramsey_template_bound(1, 1).to_string(), "16");
    assert_eq!(ramsey_template_bound(1, 2), num_bigint::BigUint::from(1u8) << 24u32);
}

#[test]
fn incompatible_piece_examples() {
    let tpl = t("a,{b,c},d");
    assert!(is_p_implementation(&word("abccbd"), &tpl, 1).is_some());
    assert!(!incompatible_piece_exists(&word("abccbd"), &tpl));
    assert!(incompatible_piece_exists(&word("axbcd"), &tpl));
    assert!(!incompatible_piece_exists(&word("abc"), &Template::default()));
    assert_eq!(template_piece(&tpl, 2).concat(), word("abcbcd"));
}

#[test]
fn implementations_have_no_incompatible_piece() {
    let words = all_words(&word("ab"), 6);
    for len in 0..=3 {
        for tpl in templates_over_ab(len).iter().filter(|x| is_unambiguous_template(x)) {
            for w in &words {
                if is_p_implementation(w, tpl, 1).is_some() {
                    assert!(!incompatible_piece_exists(w, tpl), "{tpl} {w:?}");
                }
            }
        }
    }
}

#[test]
fn detectability_transfer_at_desk_scale() {
    // |A| = 2, p = 1, ℓ = 2: κ = 4
    let kappa = detectability_kappa(1, 2, 2);
    let words = all_words(&word("ab"), 7);
    let mut classes: std::collections::BTreeMap<PieceSet, Vec<&Word>> = Default::default();
    for w in &words {
        classes.entry(pieces_up_to(w, kappa)).or_default().push(w);
    }
    let tpls: Vec<Template> =
        templates_over_ab(2).into_iter().filter(is_unambiguous_template).collect();
    let mut checked = 0;
    for class in classes.values() {
        for tpl in &tpls {
            if class.iter().any(|w| is_p_implementation(w, tpl, 2).is_some()) {
                for w2 in class {
                    assert!(is_p_implementation(w2, tpl, 1).is_some(), "{tpl} {w2:?}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
    assert!(kpeq(&word("abab"), &word("abab"), kappa));
}

fn ab_word(max: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u8..3, 0..=max)
        .prop_map(|v| v.into_iter().map(|x| Symbol::from((b'a' + x) as char)).collect())
}

fn template_strategy() -> impl Strategy<Value = Template> {
    let item = prop_oneof![
        (0u8..3).prop_map(|x| TemplateItem::Letter(Symbol::from((b'a' + x) as char))),
        (1u8..8).prop_map(|m| TemplateItem::Set(
            (0..3).filter(|i| m >> i & 1 == 1).map(|i| Symbol::from((b'a' + i) as char)).collect::<BTreeSet<_>>()
        )),
    ];
    proptest::collection::vec(item, 0..4).prop_map(|v| Template::new(v).unwrap())
}

proptest! {
    #[test]
    fn dp_matches_brute_force(w in ab_word(8), tpl in template_strategy(), p in 0usize..4) {
        let got = is_p_implementation(&w, &tpl, p);
        prop_assert_eq!(got.is_some(), brute_implements(&w, &tpl, p));
        if let Some(imp) = got {
            prop_assert_eq!(imp.cut_points.len(), tpl.len() + 1);
            prop_assert_eq!(*imp.cut_points.last().unwrap(), w.len());
            for (f, item) in imp.factors(&w).iter().zip(tpl.items()) {
                match item {
                    TemplateItem::Letter(a) => prop_assert_eq!(*f, std::slice::from_ref(a)),
                    TemplateItem::Set(b) => {
                        let order: Word = b.iter().cloned().collect();
                        prop_assert!(f.iter().all(|x| b.contains(x)));
                        prop_assert!(pattern_power(f, &order) >= p);
                    }
                }
            }
        }
    }

    #[test]
    fn implementation_is_downward_monotone(w in ab_word(10), tpl in template_strategy(), p in 1usize..4) {
        if is_p_implementation(&w, &tpl, p).is_some() {
            for q in 0..p {
                prop_assert!(is_p_implementation(&w, &tpl, q).is_some());
            }
        }
    }

    #[test]
    fn reduction_is_sound(w in ab_word(24), p in 0usize..4) {
        let r = reduce_to_short_template(&w, p);
        prop_assert!(is_unambiguous_template(&r));
        prop_assert!(is_p_implementation(&w, &r, p).is_some());
        prop_assert!(r.len() <= w.len());
    }
}
